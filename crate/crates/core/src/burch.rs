//! Burch-ness of the defining ideal of the Artinian quotient, decided by
//! exact linear algebra in a truncated polynomial algebra.
//!
//! With Ī the image of the defining ideal modulo degree N = multiplicity + 1,
//! both 𝔪Ī and 𝔪(Ī:𝔪) contain 𝔪^N, so comparing them inside the truncation
//! is exact. Coefficients are exact rationals throughout.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kunz::{delta_of, FaceDelta};
use crate::semigroup::{NumericalSemigroup, ResourceLimits};

/// The m-dimensional algebra A_H = R_H / t^m R_H with basis the Apéry
/// classes: class i · class j = class (i+j mod m) when (i, j) ∈ Δ_H, else 0,
/// and always 0 when i + j ≡ 0 (and both are nonzero).
#[derive(Clone, Debug)]
pub struct ArtinAlgebra {
    dimension: usize,
    degrees: Vec<i64>,
    delta: FaceDelta,
}

impl ArtinAlgebra {
    pub fn new(h: &NumericalSemigroup) -> Result<Self> {
        let m = h.multiplicity();
        let degrees = h.apery(m)?.elements;
        let delta = delta_of(h, m)?;
        let alg = ArtinAlgebra { dimension: m as usize, degrees, delta };
        alg.assert_ring_axioms();
        Ok(alg)
    }

    /// Dimension = multiplicity = length of A_H.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Degree of the i-th basis class (its Apéry element).
    pub fn degree(&self, class: usize) -> i64 {
        self.degrees[class]
    }

    pub fn delta(&self) -> &FaceDelta {
        &self.delta
    }

    /// Product of basis classes, `None` meaning zero.
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        let m = self.dimension;
        if i == 0 {
            return Some(j);
        }
        if j == 0 {
            return Some(i);
        }
        let s = (i + j) % m;
        if s == 0 {
            return None;
        }
        if self.delta.contains(i.min(j) as u8, i.max(j) as u8) {
            Some(s)
        } else {
            None
        }
    }

    fn assert_ring_axioms(&self) {
        let m = self.dimension;
        for i in 0..m {
            for j in i..m {
                assert_eq!(self.product(i, j), self.product(j, i));
                for k in 0..m {
                    let left = self.product(i, j).and_then(|c| self.product(c, k));
                    let right = self.product(j, k).and_then(|c| self.product(i, c));
                    assert_eq!(left, right, "associativity fails at ({i},{j},{k})");
                }
            }
        }
    }

    /// Classes of the socle: nonzero classes annihilating the maximal ideal.
    pub fn socle_classes(&self) -> Vec<usize> {
        (1..self.dimension)
            .filter(|&r| (1..self.dimension).all(|s| self.product(r, s).is_none()))
            .collect()
    }

    /// Classes spanning 𝔪²: products of two maximal-ideal classes.
    pub fn m_squared_classes(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (1..self.dimension)
            .flat_map(|i| (i..self.dimension).filter_map(move |j| self.product(i, j)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Whether soc(A_H) ⊆ 𝔪²; when false, only trivial semidualizing modules
/// exist over R_H.
pub fn socle_in_m2(h: &NumericalSemigroup) -> Result<bool> {
    let alg = ArtinAlgebra::new(h)?;
    let m2 = alg.m_squared_classes();
    Ok(alg.socle_classes().iter().all(|c| m2.binary_search(c).is_ok()))
}

// ---------------------------------------------------------------------------
// exact-rational row spaces over the monomial basis

type Coeff = BigRational;

/// Sparse vector over monomial columns, sorted by column, no zero entries.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseRow(Vec<(u32, Coeff)>);

impl SparseRow {
    fn from_map(map: BTreeMap<u32, Coeff>) -> Self {
        SparseRow(map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn lead(&self) -> Option<u32> {
        self.0.first().map(|(c, _)| *c)
    }

    fn get(&self, col: u32) -> Option<&Coeff> {
        self.0.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &self.0[k].1)
    }

    /// self − f·other
    fn subtract_scaled(&self, other: &SparseRow, f: &Coeff) -> SparseRow {
        let mut map: BTreeMap<u32, Coeff> = self.0.iter().cloned().collect();
        for (col, c) in &other.0 {
            let entry = map.entry(*col).or_insert_with(Coeff::zero);
            *entry -= f * c;
            if entry.is_zero() {
                map.remove(col);
            }
        }
        SparseRow::from_map(map)
    }

    fn scaled(&self, f: &Coeff) -> SparseRow {
        SparseRow(self.0.iter().map(|(col, c)| (*col, c * f)).collect())
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &Coeff)> + '_ {
        self.0.iter().map(|(c, v)| (*c, v))
    }
}

/// A subspace kept in reduced echelon form: one row per pivot column, pivot
/// coefficient 1, pivots eliminated from every other row. Deterministic
/// pivoting = the monomial column order (degree, then lexicographic).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RowSpace {
    rows: BTreeMap<u32, SparseRow>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces against the current rows; the remainder is zero exactly when
    /// the vector lies in the span.
    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some(lead) = row.lead() else { return row };
            match self.rows.get(&lead) {
                Some(pivot) => {
                    let f = row.get(lead).cloned().expect("lead present");
                    row = row.subtract_scaled(pivot, &f);
                }
                None => return row,
            }
        }
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_zero()
    }

    /// Inserts a vector, keeping reduced echelon form. Returns true when the
    /// rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some(lead) = row.lead() else { return false };
        let inv = Coeff::one() / row.get(lead).cloned().expect("lead present");
        let row = row.scaled(&inv);
        let cols_to_fix: Vec<u32> = self
            .rows
            .iter()
            .filter(|(_, r)| r.get(lead).is_some())
            .map(|(c, _)| *c)
            .collect();
        for c in cols_to_fix {
            let old = self.rows.remove(&c).expect("listed above");
            let f = old.get(lead).cloned().expect("has the column");
            self.rows.insert(c, old.subtract_scaled(&row, &f));
        }
        self.rows.insert(lead, row);
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = (&u32, &SparseRow)> + '_ {
        self.rows.iter()
    }
}

// ---------------------------------------------------------------------------

/// Exponent vector of a monomial in the truncated algebra.
pub type Monomial = Vec<u8>;

/// The defining ideal I_H of A_H, represented exactly as a subspace of the
/// polynomial algebra truncated at degree N, in reduced echelon form over
/// the monomial basis.
pub struct TruncatedIdealSubspace {
    variables: Vec<i64>,
    truncation_order: i64,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    space: RowSpace,
    /// Raw combinatorial spanning rows (difference pairs and zero-mapped
    /// monomials), kept for the colon computation.
    raw_rows: Vec<SparseRow>,
    /// First monomial (in basis order) evaluating to each Apéry class.
    class_witness: Vec<u32>,
    algebra: ArtinAlgebra,
}

impl fmt::Debug for TruncatedIdealSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedIdealSubspace")
            .field("variables", &self.variables.len())
            .field("truncation_order", &self.truncation_order)
            .field("ambient_dimension", &self.monomials.len())
            .field("dimension", &self.space.rank())
            .finish()
    }
}

fn monomials_below(n: usize, order: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u8; n];
    fn rec(out: &mut Vec<Monomial>, current: &mut Vec<u8>, k: usize, budget: i64) {
        if k == current.len() {
            out.push(current.clone());
            return;
        }
        for e in 0..=budget {
            current[k] = e as u8;
            rec(out, current, k + 1, budget - e);
        }
        current[k] = 0;
    }
    rec(&mut out, &mut current, 0, order - 1);
    out.sort_by_key(|m| (m.iter().map(|&e| e as i64).sum::<i64>(), m.clone()));
    out
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let mut acc: u64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul(n - i)?;
        acc /= i + 1;
    }
    Some(acc)
}

impl TruncatedIdealSubspace {
    pub fn variables(&self) -> usize {
        self.variables.len()
    }

    pub fn truncation_order(&self) -> i64 {
        self.truncation_order
    }

    /// Number of monomials of degree < N.
    pub fn ambient_dimension(&self) -> usize {
        self.monomials.len()
    }

    /// Dimension of the kernel subspace.
    pub fn dimension(&self) -> usize {
        self.space.rank()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn contains(&self, coords: &[(u32, BigInt)]) -> bool {
        let row = SparseRow(
            coords.iter().map(|(c, v)| (*c, Coeff::from_integer(v.clone()))).collect(),
        );
        self.space.contains(row)
    }

    /// Image of multiplication by variable k, with degree-N overflow
    /// truncated away.
    fn mul_variable(&self, row: &SparseRow, k: usize) -> SparseRow {
        let mut map = BTreeMap::new();
        for (col, c) in row.entries() {
            let mut mono = self.monomials[col as usize].clone();
            let deg: i64 = mono.iter().map(|&e| e as i64).sum();
            if deg + 1 >= self.truncation_order {
                continue;
            }
            mono[k] += 1;
            let target = self.index[&mono];
            *map.entry(target).or_insert_with(Coeff::zero) += c.clone();
        }
        SparseRow::from_map(map)
    }

    /// Ideal property modulo the truncation tail: every x_k·(basis row)
    /// reduces to zero against the subspace.
    pub fn is_variable_stable(&self) -> bool {
        self.space.rows().all(|(_, row)| {
            (0..self.variables.len()).all(|k| self.space.contains(self.mul_variable(row, k)))
        })
    }

    /// Sparse triples (monomial exponent vector, basis row index, value) of
    /// the echelon basis.
    pub fn basis_triples(&self) -> Vec<(Monomial, usize, BigRational)> {
        let mut out = Vec::new();
        for (r, (_, row)) in self.space.rows().enumerate() {
            for (col, c) in row.entries() {
                out.push((self.monomials[col as usize].clone(), r, c.clone()));
            }
        }
        out
    }
}

/// Builds I_H modulo degree N = multiplicity + 1 as the exact kernel of the
/// evaluation map onto A_H.
pub fn defining_ideal_truncated(
    h: &NumericalSemigroup,
    limits: ResourceLimits,
) -> Result<TruncatedIdealSubspace> {
    defining_ideal_truncated_at(h, h.multiplicity() + 1, limits)
}

/// Same, at an explicit truncation order; the Burch verdict is unchanged for
/// any order ≥ multiplicity + 1, which the fixture suite re-checks.
pub fn defining_ideal_truncated_at(
    h: &NumericalSemigroup,
    order: i64,
    limits: ResourceLimits,
) -> Result<TruncatedIdealSubspace> {
    let m = h.multiplicity();
    if m < 2 {
        return Err(Error::PreconditionViolated(
            "the whole monoid has no defining ideal to test".into(),
        ));
    }
    let variables: Vec<i64> = h.generators().iter().copied().filter(|&g| g != m).collect();
    let n = variables.len();
    let count = binomial((order - 1) as u64 + n as u64, n as u64)
        .filter(|&c| c <= limits.max_monomials)
        .ok_or_else(|| {
            Error::CapExceeded(format!(
                "monomial basis of degree < {order} in {n} variables exceeds the cap"
            ))
        })?;
    let monomials = monomials_below(n, order);
    debug_assert_eq!(monomials.len() as u64, count);
    let index: HashMap<Monomial, u32> =
        monomials.iter().enumerate().map(|(k, m)| (m.clone(), k as u32)).collect();

    let algebra = ArtinAlgebra::new(h)?;
    let apery_class: HashMap<i64, usize> =
        (0..m as usize).map(|c| (algebra.degree(c), c)).collect();

    // evaluation sends a monomial to the Apéry class of its weighted degree,
    // or to zero when that degree leaves the Apéry set
    let mut class_witness = vec![u32::MAX; m as usize];
    let mut raw_rows = Vec::new();
    for (col, mono) in monomials.iter().enumerate() {
        let e: i64 = mono.iter().zip(&variables).map(|(&a, &g)| a as i64 * g).sum();
        match apery_class.get(&e) {
            None => raw_rows.push(SparseRow(vec![(col as u32, Coeff::one())])),
            Some(&c) => {
                if class_witness[c] == u32::MAX {
                    class_witness[c] = col as u32;
                } else {
                    raw_rows.push(SparseRow(vec![
                        (class_witness[c], -Coeff::one()),
                        (col as u32, Coeff::one()),
                    ]));
                }
            }
        }
    }
    // the evaluation map is onto: each class is realized below the
    // truncation because 𝔪^m = 0 forces every nonzero class into a small
    // power of the maximal ideal
    assert!(
        class_witness.iter().all(|&w| w != u32::MAX),
        "every Apéry class must be hit by a monomial below the truncation"
    );

    let mut space = RowSpace::new();
    for row in &raw_rows {
        space.insert(row.clone());
    }
    Ok(TruncatedIdealSubspace {
        variables,
        truncation_order: order,
        monomials,
        index,
        space,
        raw_rows,
        class_witness,
        algebra,
    })
}

/// Dimensions reported alongside a Burch verdict.
#[derive(Clone, Debug, serde::Serialize)]
pub struct BurchReport {
    pub burch: bool,
    pub variables: usize,
    pub truncation_order: i64,
    pub ambient_dimension: usize,
    pub kernel_dimension: usize,
    pub m_ideal_dimension: usize,
    pub m_colon_dimension: usize,
}

/// Decides 𝔪I_H ≠ 𝔪(I_H : 𝔪) by comparing the two spans inside the
/// truncated algebra.
pub fn is_burch(h: &NumericalSemigroup) -> Result<bool> {
    Ok(burch_report(h, ResourceLimits::default())?.burch)
}

pub fn burch_report(h: &NumericalSemigroup, limits: ResourceLimits) -> Result<BurchReport> {
    let subspace = defining_ideal_truncated(h, limits)?;
    burch_report_for(&subspace)
}

pub fn burch_report_at_order(
    h: &NumericalSemigroup,
    order: i64,
    limits: ResourceLimits,
) -> Result<BurchReport> {
    let subspace = defining_ideal_truncated_at(h, order, limits)?;
    burch_report_for(&subspace)
}

fn burch_report_for(subspace: &TruncatedIdealSubspace) -> Result<BurchReport> {
    let n = subspace.variables.len();
    // I : 𝔪 is the full preimage of the socle under the evaluation map, so
    // a spanning set is the kernel plus one witness monomial per socle class
    let mut colon_rows = subspace.raw_rows.clone();
    for c in subspace.algebra.socle_classes() {
        colon_rows.push(SparseRow(vec![(subspace.class_witness[c], Coeff::one())]));
    }

    let mut m_ideal = RowSpace::new();
    for row in &subspace.raw_rows {
        for k in 0..n {
            m_ideal.insert(subspace.mul_variable(row, k));
        }
    }
    let mut m_colon = RowSpace::new();
    for row in &colon_rows {
        for k in 0..n {
            m_colon.insert(subspace.mul_variable(row, k));
        }
    }
    // 𝔪I ⊆ 𝔪(I:𝔪) holds identically; Burch is strict containment
    Ok(BurchReport {
        burch: m_ideal.rank() != m_colon.rank(),
        variables: n,
        truncation_order: subspace.truncation_order,
        ambient_dimension: subspace.ambient_dimension(),
        kernel_dimension: subspace.dimension(),
        m_ideal_dimension: m_ideal.rank(),
        m_colon_dimension: m_colon.rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;

    fn ns(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn artin_products() {
        let alg = ArtinAlgebra::new(&ns(&[9, 10, 11, 12, 15])).unwrap();
        assert_eq!(alg.product(1, 3), Some(4));
        assert_eq!(alg.product(1, 1), None);
        for j in 0..9 {
            assert_eq!(alg.product(0, j), Some(j));
        }
        assert_eq!(alg.socle_classes(), vec![4, 5, 7, 8]);
        assert_eq!(alg.m_squared_classes(), vec![4, 5, 7, 8]);
    }

    #[test]
    fn socle_examples() {
        assert!(socle_in_m2(&ns(&[9, 10, 11, 12, 15])).unwrap());
        assert!(!socle_in_m2(&ns(&(9..=17).collect::<Vec<_>>())).unwrap());
        assert!(!socle_in_m2(&ns(&[2, 3])).unwrap());
    }

    #[test]
    fn truncated_ideal_dimensions() {
        let sub =
            defining_ideal_truncated(&ns(&[9, 10, 11, 12, 15]), ResourceLimits::default())
                .unwrap();
        assert_eq!(sub.variables(), 4);
        assert_eq!(sub.truncation_order(), 10);
        assert_eq!(sub.ambient_dimension(), 715);
        assert_eq!(sub.dimension(), 706);
        assert!(sub.is_variable_stable());

        let sub = defining_ideal_truncated(&ns(&[2, 3]), ResourceLimits::default()).unwrap();
        assert_eq!(sub.variables(), 1);
        assert_eq!(sub.truncation_order(), 3);
        assert_eq!(sub.ambient_dimension(), 3);
        assert_eq!(sub.dimension(), 1);
        // kernel = span{x²}
        use num_bigint::BigInt;
        assert!(sub.contains(&[(2u32, BigInt::from(1))]));
        assert!(!sub.contains(&[(1u32, BigInt::from(1))]));
    }

    #[test]
    fn degree_m_monomials_lie_in_the_kernel() {
        let h = ns(&[9, 10, 11, 12, 15]);
        let sub = defining_ideal_truncated(&h, ResourceLimits::default()).unwrap();
        use num_bigint::BigInt;
        for (col, mono) in sub.monomials().iter().enumerate() {
            let deg: i64 = mono.iter().map(|&e| e as i64).sum();
            if deg >= 9 {
                assert!(sub.contains(&[(col as u32, BigInt::from(1))]));
            }
        }
    }

    #[test]
    fn monomial_cap() {
        let err =
            defining_ideal_truncated(&ns(&[9, 10, 11, 12, 15]), ResourceLimits::with_cap(100))
                .unwrap_err();
        assert!(matches!(err, Error::CapExceeded(_)));
    }

    #[test]
    fn burch_examples() {
        assert!(is_burch(&ns(&[9, 13, 19, 20, 21])).unwrap());
        assert!(!is_burch(&ns(&[9, 10, 11, 12, 15])).unwrap());
        assert!(is_burch(&ns(&[2, 3])).unwrap());
    }

    #[test]
    fn burch_dimensions_for_the_running_example() {
        let rep = burch_report(&ns(&[9, 13, 19, 20, 21]), ResourceLimits::default()).unwrap();
        assert!(rep.burch);
        assert_eq!(rep.ambient_dimension, 715);
        assert_eq!(rep.kernel_dimension, 706);
        assert_eq!(rep.m_ideal_dimension, 696);
        assert_eq!(rep.m_colon_dimension, 700);
    }

    #[test]
    fn m_ideal_is_contained_in_m_colon() {
        // one-sided containment is forced; check via rank of the union
        let h = ns(&[9, 12, 15, 19, 20]);
        let sub = defining_ideal_truncated(&h, ResourceLimits::default()).unwrap();
        let rep = burch_report_for(&sub).unwrap();
        assert!(rep.m_ideal_dimension <= rep.m_colon_dimension);
    }

    #[test]
    fn relabeling_by_sigma_is_an_algebra_isomorphism() {
        use crate::kunz;
        let h = ns(&[9, 12, 15, 26, 28]);
        let sigma = 5i64;
        let target = kunz::act_delta(sigma, &kunz::delta_of(&h, 9).unwrap()).unwrap();
        let h2 = kunz::sample_for_delta(&target, 5).unwrap().unwrap();
        let a = ArtinAlgebra::new(&h).unwrap();
        let b = ArtinAlgebra::new(&h2).unwrap();
        let relabel = |c: usize| if c == 0 { 0 } else { (c * sigma as usize) % 9 };
        for i in 0..9 {
            for j in 0..9 {
                let lhs = a.product(i, j).map(relabel);
                let rhs = b.product(relabel(i), relabel(j));
                assert_eq!(lhs, rhs, "structure constants differ at ({i},{j})");
            }
        }
    }
}
