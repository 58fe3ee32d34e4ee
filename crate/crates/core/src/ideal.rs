//! Monomial fractional ideals of a numerical semigroup ring.
//!
//! An ideal is carried by its set of exponents: I = (t^{g_1}, …, t^{g_k})
//! corresponds to the value set v(I) = ∪ (g_i + H). Generators are kept
//! minimal and normalized so the least one is 0, with the applied shift
//! recorded; the true exponent of the k-th generator is `shift + gens[k]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialFractionalIdeal {
    ambient: NumericalSemigroup,
    shift: i64,
    gens: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    ambient: NumericalSemigroup,
    gens: Vec<i64>,
    shift: i64,
}

impl TryFrom<IdealJson> for MonomialFractionalIdeal {
    type Error = Error;
    fn try_from(raw: IdealJson) -> Result<Self> {
        let true_exps: Vec<i64> = raw.gens.iter().map(|g| g + raw.shift).collect();
        MonomialFractionalIdeal::from_exponents(&raw.ambient, &true_exps)
    }
}

impl From<MonomialFractionalIdeal> for IdealJson {
    fn from(i: MonomialFractionalIdeal) -> Self {
        IdealJson { ambient: i.ambient, gens: i.gens, shift: i.shift }
    }
}

impl fmt::Debug for MonomialFractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints in the monomial convention: (1, t, t^3, t^4) for true exponents
/// {0, 1, 3, 4}.
impl fmt::Display for MonomialFractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.true_exponents().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                e => write!(f, "t^{e}")?,
            }
        }
        write!(f, ")")
    }
}

impl MonomialFractionalIdeal {
    /// Normalizes and minimalizes a non-empty exponent list: shifts so the
    /// minimum becomes 0, then drops every g with g − g′ ∈ H for a smaller
    /// retained g′.
    pub fn from_exponents(ambient: &NumericalSemigroup, exps: &[i64]) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::PreconditionViolated("ideal needs at least one generator".into()));
        }
        let mut sorted = exps.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let shift = sorted[0];
        let mut gens: Vec<i64> = Vec::new();
        for g in sorted {
            let g = g - shift;
            if !gens.iter().any(|&kept| ambient.contains(g - kept)) {
                gens.push(g);
            }
        }
        Ok(MonomialFractionalIdeal { ambient: ambient.clone(), shift, gens })
    }

    /// The ring itself, R = (1).
    pub fn ring(ambient: &NumericalSemigroup) -> Self {
        MonomialFractionalIdeal { ambient: ambient.clone(), shift: 0, gens: vec![0] }
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    /// Normalized generators (least is always 0).
    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn true_exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.gens.iter().map(move |g| g + self.shift)
    }

    /// Minimal number of generators μ(I).
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    fn min_exp(&self) -> i64 {
        self.shift
    }

    fn max_exp(&self) -> i64 {
        self.shift + self.gens.last().unwrap()
    }

    /// Membership in the value set: x ∈ v(I) iff x − g ∈ H for some
    /// generator.
    pub fn value_contains(&self, x: i64) -> bool {
        self.true_exponents().any(|g| self.ambient.contains(x - g))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// Equality of value sets (hence of true exponent generators).
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.shift == other.shift && self.gens == other.gens)
    }

    /// Equality after normalization, i.e. up to multiplication by a power
    /// of t.
    pub fn equal_up_to_shift(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.gens == other.gens)
    }

    /// Product ideal: generated by all pairwise sums of generators,
    /// re-minimalized. v(IJ) = v(I) + v(J).
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut sums = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in self.true_exponents() {
            for b in other.true_exponents() {
                sums.push(a.checked_add(b).ok_or_else(|| {
                    Error::CapExceeded("exponent overflow in ideal product".into())
                })?);
            }
        }
        Self::from_exponents(&self.ambient, &sums)
    }

    /// Colon ideal I : J = { x : x + v(J) ⊆ v(I) }, computed on a finite
    /// window. Exponents may start below zero when J sits above I.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let h = &self.ambient;
        let lo = self.min_exp() - other.max_exp();
        // every x ≥ stab lies in the colon: x + g ≥ F + 1 + min(I) for all g
        let stab = h.frobenius() + 1 + self.min_exp() - other.min_exp();
        let hi = stab + h.multiplicity() - 1;
        let other_exps: Vec<i64> = other.true_exponents().collect();
        let mut members = Vec::new();
        for x in lo..=hi {
            if other_exps.iter().all(|&g| self.value_contains(x + g)) {
                members.push(x);
            }
        }
        Self::from_exponents(h, &members)
    }

    /// Colon taken inside the ring: { x ∈ H : x + g ∈ v(J1) } for a single
    /// exponent g. J1 must be an ideal of R (all true exponents in H).
    pub fn colon_in_ring(&self, g: i64) -> Result<Self> {
        let h = &self.ambient;
        if g < 0 {
            return Err(Error::PreconditionViolated("colon exponent must be ≥ 0".into()));
        }
        if let Some(e) = self.true_exponents().find(|&e| !h.contains(e)) {
            return Err(Error::PreconditionViolated(format!(
                "t^{e} is not in the ring; colon_in_ring needs J ⊆ R"
            )));
        }
        let lo = (self.min_exp() - g).max(0);
        let stab = (h.frobenius() + 1).max(h.frobenius() + 1 + self.min_exp() - g);
        let hi = stab + h.multiplicity() - 1;
        let mut members = Vec::new();
        for x in lo..=hi {
            if h.contains(x) && self.value_contains(x + g) {
                members.push(x);
            }
        }
        Self::from_exponents(h, &members)
    }
}

/// The canonical ideal K = (t^{F−f} : f pseudo-Frobenius), normalized so its
/// least generator is t^0.
pub fn canonical_ideal(h: &NumericalSemigroup) -> MonomialFractionalIdeal {
    let f = h.frobenius();
    let exps: Vec<i64> = h.pseudo_frobenius().iter().map(|pf| f - pf).collect();
    MonomialFractionalIdeal::from_exponents(h, &exps).expect("pseudo-Frobenius set is non-empty")
}

/// Canonical dual I∨ = K : I.
pub fn dual(i: &MonomialFractionalIdeal) -> MonomialFractionalIdeal {
    canonical_ideal(i.ambient())
        .colon(i)
        .expect("same ambient by construction")
}
