//! Exact arithmetic of numerical semigroups: minimal generators, membership,
//! Apéry sets, Frobenius and pseudo-Frobenius data, Kunz coordinates, and
//! bounded enumeration by multiplicity.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup: an additive submonoid of the non-negative integers
/// with finite complement, stored by its unique minimal generating set.
///
/// The Apéry set with respect to the multiplicity is precomputed, so
/// membership queries are O(1). Every downstream ideal operation leans on
/// that.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SemigroupJson", into = "SemigroupJson")]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    /// apery[i] = least element congruent to i modulo the multiplicity.
    apery: Vec<i64>,
    frobenius: i64,
}

#[derive(Serialize, Deserialize)]
struct SemigroupJson {
    generators: Vec<i64>,
}

impl TryFrom<SemigroupJson> for NumericalSemigroup {
    type Error = Error;
    fn try_from(raw: SemigroupJson) -> Result<Self> {
        NumericalSemigroup::new(&raw.generators)
    }
}

impl From<NumericalSemigroup> for SemigroupJson {
    fn from(h: NumericalSemigroup) -> Self {
        SemigroupJson { generators: h.generators }
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reducing to the unique
    /// minimal generating set. Requires positive entries with gcd 1.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidSemigroup("empty generator list".into()));
        }
        if let Some(&bad) = raw.iter().find(|&&g| g <= 0) {
            return Err(Error::InvalidSemigroup(format!("non-positive generator {bad}")));
        }
        let g = raw.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::InvalidSemigroup(format!("gcd of generators is {g}, not 1")));
        }
        let mut gens: Vec<i64> = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let gens = minimalize(&gens);
        let m = gens[0];
        let apery = apery_elements(&gens, m)?;
        let frobenius = apery.iter().copied().max().unwrap() - m;
        Ok(NumericalSemigroup { generators: gens, apery, frobenius })
    }

    /// The whole monoid ⟨1⟩ = ℕ. Admitted with Frobenius number −1 and
    /// pseudo-Frobenius set {−1}: gluings with B = {1} need F_B = −1.
    pub fn whole_line() -> Self {
        NumericalSemigroup { generators: vec![1], apery: vec![0], frobenius: -1 }
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest integer not in the semigroup; −1 for ⟨1⟩.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// O(1) membership via the precomputed Apéry set: n ∈ H iff
    /// n ≥ h_{n mod m}.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let m = self.multiplicity();
        n >= self.apery[(n % m) as usize]
    }

    /// The Apéry set with respect to `c`, one element per residue class.
    pub fn apery(&self, c: i64) -> Result<AperySet> {
        if c <= 0 || !self.contains(c) {
            return Err(Error::InvalidBase(c));
        }
        let elements = if c == self.multiplicity() {
            self.apery.clone()
        } else {
            apery_elements(&self.generators, c)?
        };
        Ok(AperySet { base: c, elements })
    }

    /// All gaps (the finite complement ℕ \ H), ascending.
    pub fn gaps(&self) -> Vec<i64> {
        let m = self.multiplicity();
        let mut out = Vec::new();
        for i in 1..m as usize {
            let mut x = i as i64;
            while x < self.apery[i] {
                out.push(x);
                x += m;
            }
        }
        out.sort_unstable();
        out
    }

    /// Pseudo-Frobenius numbers: f ∉ H with f + h ∈ H for every nonzero
    /// h ∈ H. For ⟨1⟩ this is {−1} by convention.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.generators == [1] {
            return vec![-1];
        }
        // f + h ∈ H for all h ∈ H_{>0} iff f + g ∈ H for every generator g.
        self.gaps()
            .into_iter()
            .filter(|&f| self.generators.iter().all(|&g| self.contains(f + g)))
            .collect()
    }

    /// Cohen–Macaulay type: the number of pseudo-Frobenius numbers.
    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// Kunz coordinates with respect to m ∈ H, m ≥ 3: h_i = i + μ_i·m.
    pub fn kunz_coordinates(&self, m: i64) -> Result<KunzPoint> {
        if m < 3 {
            return Err(Error::PreconditionViolated(format!("Kunz base must be ≥ 3, got {m}")));
        }
        let ap = self.apery(m)?;
        let mu = (1..m as usize)
            .map(|i| (ap.elements[i] - i as i64) / m)
            .collect();
        Ok(KunzPoint { m, mu })
    }
}

fn minimalize(sorted: &[i64]) -> Vec<i64> {
    // g is a minimal generator iff it is not a sum of two nonzero elements.
    let max = *sorted.last().unwrap() as usize;
    let mut member = vec![false; max + 1];
    member[0] = true;
    for x in 1..=max {
        member[x] = sorted.iter().any(|&g| g as usize <= x && member[x - g as usize]);
    }
    sorted
        .iter()
        .copied()
        .filter(|&g| !(1..g as usize).any(|x| member[x] && member[g as usize - x]))
        .collect()
}

/// Least element of ⟨gens⟩ in each residue class mod c, by shortest-path
/// relaxation over ℤ/c.
fn apery_elements(gens: &[i64], c: i64) -> Result<Vec<i64>> {
    let n = c as usize;
    let mut dist = vec![i64::MAX; n];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nd = d.checked_add(g).ok_or_else(|| {
                Error::CapExceeded("Apéry element overflows i64".into())
            })?;
            let nr = ((r as i64 + g) % c) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    if dist.contains(&i64::MAX) {
        // unreachable residue class: gcd(gens, c) > 1, so c ∉ ⟨gens⟩ anyway
        return Err(Error::InvalidBase(c));
    }
    Ok(dist)
}

/// The Apéry set Ap_c(H): the least elements of H in each congruence class
/// modulo c.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperySet {
    pub base: i64,
    pub elements: Vec<i64>,
}

impl AperySet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> i64 {
        self.elements.iter().copied().max().unwrap()
    }
}

/// A lattice point of the Kunz polyhedron P_m: coordinates (μ_1, …, μ_{m−1})
/// with h_i = i + μ_i·m.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KunzPoint {
    pub m: i64,
    pub mu: Vec<i64>,
}

impl KunzPoint {
    pub fn new(m: i64, mu: Vec<i64>) -> Result<Self> {
        if m < 3 {
            return Err(Error::PreconditionViolated(format!("Kunz base must be ≥ 3, got {m}")));
        }
        if mu.len() != (m - 1) as usize {
            return Err(Error::PreconditionViolated(format!(
                "expected {} coordinates, got {}",
                m - 1,
                mu.len()
            )));
        }
        if mu.iter().any(|&x| x < 0) {
            return Err(Error::PreconditionViolated("negative Kunz coordinate".into()));
        }
        let p = KunzPoint { m, mu };
        p.validate()?;
        Ok(p)
    }

    /// Checks the defining inequalities on all pairs i ≤ j (diagonal pairs
    /// included: omitting them admits points whose value sets are not closed
    /// under addition).
    pub fn validate(&self) -> Result<()> {
        let m = self.m as usize;
        for i in 1..m {
            for j in i..m {
                let s = i + j;
                if s % m == 0 {
                    continue;
                }
                let lhs = self.mu[i - 1] + self.mu[j - 1];
                let ok = if s < m {
                    lhs >= self.mu[s - 1]
                } else {
                    lhs >= self.mu[s - m - 1] - 1
                };
                if !ok {
                    return Err(Error::NotInPolyhedron { i, j });
                }
            }
        }
        Ok(())
    }

    /// h_i = i + μ_i·m for i = 1, …, m−1.
    pub fn apery_tail(&self) -> Vec<i64> {
        (1..self.m as usize)
            .map(|i| i as i64 + self.mu[i - 1] * self.m)
            .collect()
    }

    /// The semigroup this point encodes: the disjoint union of mℕ and the
    /// classes h_i + mℕ.
    pub fn semigroup(&self) -> Result<NumericalSemigroup> {
        self.validate()?;
        let mut gens = vec![self.m];
        gens.extend(self.apery_tail());
        NumericalSemigroup::new(&gens)
    }
}

/// Resource limits for enumeration and the truncated linear algebra.
/// `NSGR_CAP` overrides both caps at the CLI layer.
#[derive(Clone, Copy, Debug)]
pub struct ResourceLimits {
    /// Maximum number of candidate Kunz points one enumeration may visit.
    pub max_enumeration_points: u64,
    /// Maximum number of monomials in a truncated polynomial algebra.
    pub max_monomials: u64,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        ResourceLimits { max_enumeration_points: 200_000_000, max_monomials: 100_000 }
    }
}

impl ResourceLimits {
    pub fn with_cap(cap: u64) -> Self {
        ResourceLimits { max_enumeration_points: cap, max_monomials: cap }
    }
}

/// Streams every semigroup with multiplicity exactly `m` and Frobenius
/// number ≤ `frobenius_cap`, each exactly once, ordered lexicographically by
/// Kunz coordinates.
pub fn enumerate_semigroups(
    m: i64,
    frobenius_cap: i64,
    limits: ResourceLimits,
) -> Result<SemigroupStream> {
    if m < 2 {
        return Err(Error::PreconditionViolated(format!("multiplicity must be ≥ 2, got {m}")));
    }
    if frobenius_cap < m - 1 {
        return Err(Error::PreconditionViolated(format!(
            "frobenius cap {frobenius_cap} below m−1 = {}",
            m - 1
        )));
    }
    // Multiplicity exactly m forces μ_i ≥ 1; F ≤ cap bounds each coordinate.
    let per_coord = (frobenius_cap + m) / m + 1;
    let dims = (m - 1) as u32;
    let total = (per_coord as u64).checked_pow(dims);
    match total {
        Some(t) if t <= limits.max_enumeration_points => {}
        _ => {
            return Err(Error::CapExceeded(format!(
                "enumeration would visit {per_coord}^{dims} Kunz points"
            )))
        }
    }
    Ok(SemigroupStream {
        m,
        frobenius_cap,
        per_coord,
        current: vec![1; (m - 1) as usize],
        done: false,
    })
}

#[derive(Debug)]
pub struct SemigroupStream {
    m: i64,
    frobenius_cap: i64,
    per_coord: i64,
    current: Vec<i64>,
    done: bool,
}

impl SemigroupStream {
    fn advance(&mut self) {
        for k in (0..self.current.len()).rev() {
            if self.current[k] < self.per_coord {
                self.current[k] += 1;
                for c in &mut self.current[k + 1..] {
                    *c = 1;
                }
                return;
            }
        }
        self.done = true;
    }

    fn point_is_valid(&self) -> bool {
        let m = self.m as usize;
        let mu = &self.current;
        for i in 1..m {
            for j in i..m {
                let s = i + j;
                if s % m == 0 {
                    continue;
                }
                let lhs = mu[i - 1] + mu[j - 1];
                let ok = if s < m { lhs >= mu[s - 1] } else { lhs >= mu[s - m - 1] - 1 };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

impl Iterator for SemigroupStream {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            if self.point_is_valid() {
                let frobenius = self
                    .current
                    .iter()
                    .enumerate()
                    .map(|(k, &mu)| (k as i64 + 1) + mu * self.m)
                    .max()
                    .unwrap()
                    - self.m;
                if frobenius <= self.frobenius_cap {
                    let mut gens = vec![self.m];
                    gens.extend(
                        self.current
                            .iter()
                            .enumerate()
                            .map(|(k, &mu)| (k as i64 + 1) + mu * self.m),
                    );
                    let h = NumericalSemigroup::new(&gens)
                        .expect("valid Kunz point yields a semigroup");
                    self.advance();
                    return Some(h);
                }
            }
            self.advance();
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force membership by dynamic programming, independent of the
    /// Apéry-set route.
    fn sieve_membership(gens: &[i64], bound: i64) -> Vec<bool> {
        let mut mem = vec![false; (bound + 1) as usize];
        mem[0] = true;
        for x in 1..=bound as usize {
            mem[x] = gens.iter().any(|&g| (g as usize) <= x && mem[x - g as usize]);
        }
        mem
    }

    #[test]
    fn minimalizes_generators() {
        let h = NumericalSemigroup::new(&[9, 10, 11, 12, 15, 19]).unwrap();
        assert_eq!(h.generators(), &[9, 10, 11, 12, 15]);
        let h = NumericalSemigroup::new(&[1]).unwrap();
        assert_eq!(h.generators(), &[1]);
        let h = NumericalSemigroup::new(&[2, 3, 4]).unwrap();
        assert_eq!(h.generators(), &[2, 3]);
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(matches!(NumericalSemigroup::new(&[]), Err(Error::InvalidSemigroup(_))));
        assert!(matches!(NumericalSemigroup::new(&[4, 6]), Err(Error::InvalidSemigroup(_))));
        assert!(matches!(NumericalSemigroup::new(&[0, 3]), Err(Error::InvalidSemigroup(_))));
    }

    #[test]
    fn membership_matches_sieve() {
        let h = NumericalSemigroup::new(&[9, 10, 11, 12, 15]).unwrap();
        assert!(!h.contains(13));
        assert!(h.contains(0));
        assert!(h.contains(22));
        let mem = sieve_membership(h.generators(), 60);
        for n in 0..=60 {
            assert_eq!(h.contains(n), mem[n as usize], "n = {n}");
        }
        assert!(!h.contains(-5));
    }

    #[test]
    fn apery_examples() {
        let h = NumericalSemigroup::new(&[9, 10, 11, 12, 15]).unwrap();
        assert_eq!(h.apery(9).unwrap().elements, vec![0, 10, 11, 12, 22, 23, 15, 25, 26]);
        let h23 = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(h23.apery(2).unwrap().elements, vec![0, 3]);
        // membership-scan oracle for the Prop 4.4 sample
        let h36 = NumericalSemigroup::new(&[9, 19, 20, 25, 31]).unwrap();
        assert_eq!(h36.apery(9).unwrap().elements, vec![0, 19, 20, 39, 31, 50, 51, 25, 44]);
        let mem = sieve_membership(h36.generators(), 120);
        for (i, &hi) in h36.apery(9).unwrap().elements.iter().enumerate() {
            assert!(mem[hi as usize] && hi % 9 == i as i64);
            let mut x = hi - 9;
            while x >= 0 {
                assert!(!mem[x as usize]);
                x -= 9;
            }
        }
        assert!(matches!(h.apery(13), Err(Error::InvalidBase(13))));
    }

    #[test]
    fn apery_base_need_not_be_the_multiplicity() {
        let h = NumericalSemigroup::new(&[9, 10, 11, 12, 15]).unwrap();
        let ap = h.apery(10).unwrap();
        assert_eq!(ap.len(), 10);
        assert_eq!(ap.max() - 10, h.frobenius());
    }

    #[test]
    fn frobenius_data() {
        let h = NumericalSemigroup::new(&[9, 10, 11, 12, 15]).unwrap();
        assert_eq!(h.frobenius(), 17);
        assert_eq!(h.pseudo_frobenius(), vec![13, 14, 16, 17]);
        assert_eq!(h.cm_type(), 4);
        let h23 = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(h23.frobenius(), 1);
        assert_eq!(h23.cm_type(), 1);
        let line = NumericalSemigroup::whole_line();
        assert_eq!(line.frobenius(), -1);
        assert_eq!(line.pseudo_frobenius(), vec![-1]);
        assert!(line.contains(0) && line.contains(7));
    }

    #[test]
    fn gaps_are_the_complement() {
        let h = NumericalSemigroup::new(&[9, 10, 11, 12, 15]).unwrap();
        let gaps = h.gaps();
        assert_eq!(gaps.last().copied(), Some(17));
        for g in &gaps {
            assert!(!h.contains(*g));
        }
        for f in h.pseudo_frobenius() {
            assert!(gaps.contains(&f));
        }
        assert_eq!(gaps.len(), 12); // genus of ⟨9,10,11,12,15⟩
    }

    #[test]
    fn kunz_roundtrip() {
        let h = NumericalSemigroup::new(&[9, 10, 11, 12, 15]).unwrap();
        let p = h.kunz_coordinates(9).unwrap();
        assert_eq!(p.mu, vec![1, 1, 1, 2, 2, 1, 2, 2]);
        assert_eq!(p.semigroup().unwrap(), h);

        let flat = NumericalSemigroup::new(&(9..=17).collect::<Vec<_>>()).unwrap();
        assert_eq!(flat.kunz_coordinates(9).unwrap().mu, vec![1; 8]);

        let p = KunzPoint::new(9, vec![1, 1, 1, 2, 2, 1, 2, 2]).unwrap();
        assert_eq!(p.semigroup().unwrap().generators(), &[9, 10, 11, 12, 15]);
    }

    #[test]
    fn kunz_rejects_points_outside_the_polyhedron() {
        // 2μ_1 < μ_2 breaks closure under addition
        let err = KunzPoint::new(3, vec![1, 3]).unwrap_err();
        assert_eq!(err, Error::NotInPolyhedron { i: 1, j: 1 });
        // all-zero coordinates encode ℕ itself
        let p = KunzPoint::new(9, vec![0; 8]).unwrap();
        assert_eq!(p.semigroup().unwrap().generators(), &[1]);
    }

    #[test]
    fn kunz_coordinates_with_zero_entries() {
        let h = NumericalSemigroup::new(&[2, 3]).unwrap();
        let p = h.kunz_coordinates(3).unwrap();
        assert_eq!(p.mu, vec![1, 0]);
        assert_eq!(p.semigroup().unwrap(), h);
    }

    /// Independent enumeration oracle: try every subset of [1, cap] as a gap
    /// set and keep the closed ones.
    fn enumerate_by_gap_subsets(m: i64, cap: i64) -> Vec<Vec<i64>> {
        let n = cap as usize;
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let gap = |x: i64| x >= 1 && x <= cap && mask >> (x - 1) & 1 == 1;
            let member = |x: i64| x == 0 || (x >= 1 && !gap(x) && x <= 2 * cap + 2) || x > cap;
            // closure under addition on a window that covers all sums of
            // two members below the conductor
            let window = 2 * (cap + 1);
            let closed = (1..=window)
                .filter(|&x| member(x))
                .all(|x| (x..=window - x).filter(|&y| member(y)).all(|y| member(x + y)));
            if !closed {
                continue;
            }
            let mult = (1..=cap + 1).find(|&x| member(x)).unwrap();
            if mult != m {
                continue;
            }
            let frob = (0..=cap).rev().find(|&x| !member(x)).unwrap_or(-1);
            if frob > cap {
                continue;
            }
            let elements: Vec<i64> = (1..=2 * (cap + 1)).filter(|&x| member(x)).collect();
            let h = NumericalSemigroup::new(&elements).unwrap();
            out.push(h.generators().to_vec());
        }
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn enumeration_matches_gap_subset_oracle() {
        for (m, cap) in [(2, 5), (2, 9), (3, 4), (3, 8), (4, 6), (4, 12)] {
            let mut got: Vec<Vec<i64>> = enumerate_semigroups(m, cap, ResourceLimits::default())
                .unwrap()
                .map(|h| h.generators().to_vec())
                .collect();
            let n = got.len();
            got.sort();
            got.dedup();
            assert_eq!(got.len(), n, "duplicates for m={m} cap={cap}");
            let want = enumerate_by_gap_subsets(m, cap);
            assert_eq!(got, want, "m={m} cap={cap}");
        }
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<_> = enumerate_semigroups(2, 5, ResourceLimits::default())
            .unwrap()
            .map(|h| h.generators().to_vec())
            .collect();
        // ⟨2,7⟩ has Frobenius 5, so the cap admits it
        assert_eq!(got, vec![vec![2, 3], vec![2, 5], vec![2, 7]]);

        let got: Vec<_> = enumerate_semigroups(3, 5, ResourceLimits::default())
            .unwrap()
            .map(|h| h.generators().to_vec())
            .collect();
        assert!(got.contains(&vec![3, 4, 5]));
        assert!(got.contains(&vec![3, 4])); // Frobenius 5
        for h in enumerate_semigroups(3, 5, ResourceLimits::default()).unwrap() {
            assert_eq!(h.multiplicity(), 3);
            assert!(h.frobenius() <= 5);
        }
    }

    #[test]
    fn enumeration_respects_resource_cap() {
        let err = enumerate_semigroups(9, 1000, ResourceLimits::with_cap(10)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded(_)));
    }

    #[test]
    fn apery_invariant_for_every_base() {
        let h = NumericalSemigroup::new(&[5, 7, 9]).unwrap();
        for c in [5, 7, 9, 12, 14] {
            if !h.contains(c) {
                continue;
            }
            let ap = h.apery(c).unwrap();
            assert_eq!(ap.len() as i64, c);
            assert_eq!(ap.max() - c, h.frobenius());
            for (i, &hi) in ap.elements.iter().enumerate() {
                assert_eq!(hi.rem_euclid(c), i as i64);
                assert!(h.contains(hi));
                assert!(!h.contains(hi - c));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let h = NumericalSemigroup::new(&[9, 10, 11, 12, 15]).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(s, r#"{"generators":[9,10,11,12,15]}"#);
        let back: NumericalSemigroup = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
        assert!(serde_json::from_str::<NumericalSemigroup>(r#"{"generators":[4,6]}"#).is_err());
    }
}
