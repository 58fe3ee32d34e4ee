//! Randomized gluing corpus: the transfer formulas against direct
//! computation, μ-multiplicativity, and nontriviality transfer from the
//! four base semigroups.

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use nsgr::glue::GluingSpec;
use nsgr::ideal::{canonical_ideal, MonomialFractionalIdeal};
use nsgr::sdz::TrivialityTag;
use nsgr::semigroup::NumericalSemigroup;

fn random_semigroup(rng: &mut SmallRng) -> NumericalSemigroup {
    loop {
        let m = rng.gen_range(2i64..=9);
        let extra = rng.gen_range(2usize..=4);
        let mut gens = vec![m];
        for _ in 0..extra {
            gens.push(m + rng.gen_range(1i64..=2 * m + 6));
        }
        if let Ok(h) = NumericalSemigroup::new(&gens) {
            if h.multiplicity() == m && h.frobenius() <= 25 {
                return h;
            }
        }
    }
}

fn random_member(rng: &mut SmallRng, h: &NumericalSemigroup, max: i64) -> i64 {
    loop {
        let x = rng.gen_range(1..=max);
        if h.contains(x) {
            return x;
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn transfer_formulas_match_direct_computation_on_200_specs() {
    let mut rng = SmallRng::seed_from_u64(0x9e3779b97f4a7c15);
    let right_choices = [
        NumericalSemigroup::whole_line(),
        NumericalSemigroup::new(&[2, 3]).unwrap(),
        NumericalSemigroup::new(&[3, 4]).unwrap(),
    ];
    let mut done = 0;
    while done < 200 {
        let left = random_semigroup(&mut rng);
        let right = right_choices[rng.gen_range(0..right_choices.len())].clone();
        let a = random_member(&mut rng, &left, left.frobenius().max(1) + 2 * left.multiplicity());
        let b = random_member(&mut rng, &right, 12);
        if gcd(a, b) != 1 {
            continue;
        }
        let spec = GluingSpec::new(left.clone(), right.clone(), a, b).unwrap();
        let glued = spec.glue().unwrap();

        // multiplicity of the gluing
        assert_eq!(
            glued.multiplicity(),
            (b * left.multiplicity()).min(a * right.multiplicity()),
            "multiplicity law for {spec:?}"
        );

        // Frobenius and pseudo-Frobenius transfer = direct computation
        assert_eq!(spec.glued_frobenius().unwrap(), glued.frobenius(), "{spec:?}");
        assert_eq!(spec.glued_pseudo_frobenius().unwrap(), glued.pseudo_frobenius(), "{spec:?}");

        // canonical transfer: glued_canonical() also asserts equality with
        // the direct canonical ideal internally
        let k = spec.glued_canonical().unwrap();
        assert_eq!(k.mu(), left.cm_type() * right.cm_type(), "{spec:?}");

        // μ-multiplicativity of the module transfer on the trivial pairs
        let choices_left =
            [MonomialFractionalIdeal::ring(&left), canonical_ideal(&left)];
        let choices_right =
            [MonomialFractionalIdeal::ring(&right), canonical_ideal(&right)];
        for i1 in &choices_left {
            for i2 in &choices_right {
                let out = spec.transfer_semidualizing(i1, i2).unwrap();
                assert_eq!(out.mu, i1.mu() * i2.mu(), "µ transfer for {spec:?}");
                assert!(out.hom_is_ring, "Hom(C,C) = R must hold for {spec:?}");
            }
        }
        done += 1;
    }
}

#[test]
fn nontriviality_transfers_from_the_base_witnesses() {
    let mut rng = SmallRng::seed_from_u64(0x1234_abcd_5678_ef01);
    let bases: [(&[i64], i64); 4] = [
        (&[9, 10, 11, 12, 15], 1),
        (&[9, 11, 12, 13, 15], 2),
        (&[9, 12, 14, 15, 16], 2),
        (&[9, 12, 15, 17, 19], 2),
    ];
    let mut done = 0;
    while done < 50 {
        let (gens, d) = bases[rng.gen_range(0..bases.len())];
        let left = NumericalSemigroup::new(gens).unwrap();
        let a = random_member(&mut rng, &left, 60);
        let b = rng.gen_range(1i64..=9);
        if gcd(a, b) != 1 {
            continue;
        }
        let spec = GluingSpec::new(left.clone(), NumericalSemigroup::whole_line(), a, b).unwrap();
        let i1 = MonomialFractionalIdeal::from_exponents(&left, &[0, d]).unwrap();
        let i2 = MonomialFractionalIdeal::ring(&spec.right);
        let out = spec.transfer_semidualizing(&i1, &i2).unwrap();
        assert_eq!(out.mu, 2);
        assert_eq!(out.triviality, TrivialityTag::Neither, "nontriviality must transfer");
        assert!(out.hom_is_ring);
        done += 1;
    }
}

#[test]
fn type_is_multiplicative_across_the_gluing() {
    let mut rng = SmallRng::seed_from_u64(0xfeed_5eed_0001);
    for _ in 0..60 {
        let left = random_semigroup(&mut rng);
        let a = random_member(&mut rng, &left, left.frobenius().max(1) + left.multiplicity() + 5);
        let b = (2..).find(|&b| gcd(a, b) == 1).unwrap();
        let spec = GluingSpec::new(left.clone(), NumericalSemigroup::whole_line(), a, b).unwrap();
        let glued = spec.glue().unwrap();
        assert_eq!(glued.cm_type(), left.cm_type(), "type against ⟨1⟩ for {spec:?}");
    }
}
