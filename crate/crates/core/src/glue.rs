//! Gluings ⟨bA, aB⟩ of numerical semigroups with coprime weights, the
//! transfer of Frobenius, pseudo-Frobenius, canonical, and semidualizing
//! data along the rule (r, s) ↦ br + as, and the binomial presentation
//! relation for the B = ⟨1⟩ case.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{canonical_ideal, MonomialFractionalIdeal};
use crate::sdz::{self, CertificateReport, TrivialityTag};
use crate::semigroup::NumericalSemigroup;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn checked(x: Option<i64>) -> Result<i64> {
    x.ok_or_else(|| Error::CapExceeded("exponent overflow in gluing arithmetic".into()))
}

/// Two semigroups plus coprime weights a ∈ ⟨A⟩ and b ∈ ⟨B⟩ describing the
/// gluing ⟨bA, aB⟩. B = ⟨1⟩ is allowed; membership of a in ⟨A⟩ is all that
/// is required of a (it need not be a minimal generator).
#[derive(Clone, Debug)]
pub struct GluingSpec {
    pub left: NumericalSemigroup,
    pub right: NumericalSemigroup,
    /// weight applied to `right`, drawn from ⟨left⟩
    pub a: i64,
    /// weight applied to `left`, drawn from ⟨right⟩
    pub b: i64,
}

impl GluingSpec {
    pub fn new(left: NumericalSemigroup, right: NumericalSemigroup, a: i64, b: i64) -> Result<Self> {
        if gcd(a, b) != 1 {
            return Err(Error::NotCoprime { a, b });
        }
        if a <= 0 || !left.contains(a) {
            return Err(Error::NotMember { weight: a, side: format!("{left}") });
        }
        if b <= 0 || !right.contains(b) {
            return Err(Error::NotMember { weight: b, side: format!("{right}") });
        }
        Ok(GluingSpec { left, right, a, b })
    }

    /// The glued semigroup ⟨bA, aB⟩, minimalized.
    pub fn glue(&self) -> Result<NumericalSemigroup> {
        let mut gens = Vec::new();
        for &g in self.left.generators() {
            gens.push(checked(g.checked_mul(self.b))?);
        }
        for &g in self.right.generators() {
            gens.push(checked(g.checked_mul(self.a))?);
        }
        NumericalSemigroup::new(&gens)
    }

    /// F_H = b·F_A + a·F_B + ab, with F_B = −1 when B = ⟨1⟩.
    pub fn glued_frobenius(&self) -> Result<i64> {
        let bf = checked(self.b.checked_mul(self.left.frobenius()))?;
        let af = checked(self.a.checked_mul(self.right.frobenius()))?;
        let ab = checked(self.a.checked_mul(self.b))?;
        checked(bf.checked_add(af).and_then(|x| x.checked_add(ab)))
    }

    /// PF(H) = { bf + af′ + ab : f ∈ PF(A), f′ ∈ PF(B) }.
    pub fn glued_pseudo_frobenius(&self) -> Result<Vec<i64>> {
        let ab = checked(self.a.checked_mul(self.b))?;
        let mut out = Vec::new();
        for f in self.left.pseudo_frobenius() {
            for fp in self.right.pseudo_frobenius() {
                let bf = checked(self.b.checked_mul(f))?;
                let af = checked(self.a.checked_mul(fp))?;
                out.push(checked(bf.checked_add(af).and_then(|x| x.checked_add(ab)))?);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// K_H = (t^{br + as} : t^r ∈ K_A, t^s ∈ K_B), minimalized over the
    /// gluing. Cross-checked on the spot against the direct canonical ideal.
    pub fn glued_canonical(&self) -> Result<MonomialFractionalIdeal> {
        let glued = self.glue()?;
        let k = self.transfer_exponents(&glued, &canonical_ideal(&self.left), &canonical_ideal(&self.right))?;
        let direct = canonical_ideal(&glued);
        assert!(
            k.equals(&direct).expect("same ambient"),
            "transferred canonical module disagrees with the direct one"
        );
        Ok(k)
    }

    fn transfer_exponents(
        &self,
        glued: &NumericalSemigroup,
        i1: &MonomialFractionalIdeal,
        i2: &MonomialFractionalIdeal,
    ) -> Result<MonomialFractionalIdeal> {
        let mut exps = Vec::new();
        for r in i1.true_exponents() {
            for s in i2.true_exponents() {
                let br = checked(self.b.checked_mul(r))?;
                let asx = checked(self.a.checked_mul(s))?;
                exps.push(checked(br.checked_add(asx))?);
            }
        }
        MonomialFractionalIdeal::from_exponents(glued, &exps)
    }

    /// Transfers semidualizing modules along the gluing. The certificate
    /// attempt is advisory: the transfer is semidualizing regardless, and
    /// the 2-generated chain may simply not apply to it.
    pub fn transfer_semidualizing(
        &self,
        i1: &MonomialFractionalIdeal,
        i2: &MonomialFractionalIdeal,
    ) -> Result<TransferOutcome> {
        if i1.ambient() != &self.left || i2.ambient() != &self.right {
            return Err(Error::AmbientMismatch);
        }
        let glued = self.glue()?;
        let ideal = self.transfer_exponents(&glued, i1, i2)?;
        let triviality = sdz::is_trivial(&ideal);
        let certificate = sdz::certify_semidualizing(&ideal);
        Ok(TransferOutcome { mu: ideal.mu(), hom_is_ring: sdz::hom_is_ring(&ideal), ideal, triviality, certificate })
    }

    /// For H′ = ⟨a, bH⟩, the defining relation x_{h+1}^b − ∏ x_i^{c_i} where
    /// a = Σ c_i·gens(A)_i; the representation with fewest terms and then
    /// lexicographically least exponents is chosen.
    pub fn presentation_relation(&self) -> Result<PresentationRelation> {
        if self.right.generators() != [1] {
            return Err(Error::PreconditionViolated(
                "the presentation relation is stated for B = ⟨1⟩".into(),
            ));
        }
        let gens = self.left.generators();
        let coefficients = represent_with_fewest_terms(self.a, gens, &self.left)
            .ok_or(Error::RepresentationNotFound(self.a))?;
        Ok(PresentationRelation { b: self.b, coefficients })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferOutcome {
    pub ideal: MonomialFractionalIdeal,
    pub mu: usize,
    pub hom_is_ring: bool,
    pub triviality: TrivialityTag,
    pub certificate: CertificateReport,
}

/// Exponent data (b, c_1 … c_h) of the relation x_{h+1}^b = ∏ x_i^{c_i}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationRelation {
    pub b: i64,
    pub coefficients: Vec<i64>,
}

/// Representations of `a` over `gens`, by iterative deepening on the number
/// of nonzero coefficients, then lexicographic order of the exponent
/// vector. Membership pruning keeps the search linear in practice.
fn represent_with_fewest_terms(
    a: i64,
    gens: &[i64],
    h: &NumericalSemigroup,
) -> Option<Vec<i64>> {
    fn dfs(
        gens: &[i64],
        h: &NumericalSemigroup,
        k: usize,
        remaining: i64,
        nonzero_left: usize,
        current: &mut Vec<i64>,
    ) -> bool {
        if remaining == 0 {
            for c in &mut current[k..] {
                *c = 0;
            }
            return true;
        }
        if k == gens.len() || !h.contains(remaining) {
            return false;
        }
        if nonzero_left == 0 {
            return false;
        }
        // c_k = 0 first: lexicographically least vectors come out first
        current[k] = 0;
        if dfs(gens, h, k + 1, remaining, nonzero_left, current) {
            return true;
        }
        let mut c = 1;
        while c * gens[k] <= remaining {
            current[k] = c;
            if dfs(gens, h, k + 1, remaining - c * gens[k], nonzero_left - 1, current) {
                return true;
            }
            c += 1;
        }
        current[k] = 0;
        false
    }

    let mut current = vec![0i64; gens.len()];
    for terms in 1..=gens.len() {
        if dfs(gens, h, 0, a, terms, &mut current) {
            return Some(current);
        }
    }
    None
}

/// The constructive recipe producing a witness in every multiplicity ≥ 9:
/// a base semigroup with a known 2-generated module, glued to ⟨1⟩ with the
/// smallest coprime weight b with 9b > a.
#[derive(Clone, Debug, Serialize)]
pub struct Construction {
    pub multiplicity: i64,
    pub base: NumericalSemigroup,
    pub b: i64,
    pub semigroup: NumericalSemigroup,
    pub canonical: MonomialFractionalIdeal,
    pub transferred: TransferOutcome,
    pub presentation: PresentationRelation,
}

/// Base semigroups per target multiplicity: the general witness works for
/// every a ≥ 9 in it; 13, 14, 16, 17 fall outside and use dedicated bases.
fn construction_base(a: i64) -> (NumericalSemigroup, i64) {
    let (gens, d): (&[i64], i64) = match a {
        13 => (&[9, 11, 12, 13, 15], 2),
        14 | 16 => (&[9, 12, 14, 15, 16], 2),
        17 => (&[9, 12, 15, 17, 19], 2),
        _ => (&[9, 10, 11, 12, 15], 1),
    };
    (NumericalSemigroup::new(gens).expect("fixed bases are valid"), d)
}

pub fn construct_for_multiplicity(a: i64) -> Result<Construction> {
    if a < 9 {
        return Err(Error::PreconditionViolated(format!(
            "nontrivial semidualizing modules need multiplicity ≥ 9, got {a}"
        )));
    }
    let (base, d) = construction_base(a);
    debug_assert!(base.contains(a));
    let b = (1..).find(|&b| 9 * b > a && gcd(a, b) == 1).expect("some coprime weight works");
    let spec = GluingSpec::new(base.clone(), NumericalSemigroup::whole_line(), a, b)?;
    let semigroup = spec.glue()?;
    debug_assert_eq!(semigroup.multiplicity(), a);
    let i1 = MonomialFractionalIdeal::from_exponents(&base, &[0, d])?;
    let i2 = MonomialFractionalIdeal::ring(&spec.right);
    let transferred = spec.transfer_semidualizing(&i1, &i2)?;
    Ok(Construction {
        multiplicity: a,
        base,
        b,
        canonical: spec.glued_canonical()?,
        presentation: spec.presentation_relation()?,
        semigroup,
        transferred,
    })
}
