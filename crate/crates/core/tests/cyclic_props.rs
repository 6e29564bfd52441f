use hypermoduli_core::arith::{rat, CycloElement, Field, Rational, Ring};
use hypermoduli_core::cyclic::{
    orbit_count, reconstruct_all, reconstruct_from_u, CyclicNormalForm, HGenerator, NormalFormCase,
};
use num_traits::Zero;
use proptest::prelude::*;

const CASES: [NormalFormCase; 3] = [
    NormalFormCase::Even,
    NormalFormCase::Odd,
    NormalFormCase::Marked,
];

// (case, n, g) with t in the given set
fn shapes(ts: &'static [u32]) -> Vec<(NormalFormCase, u32, u32)> {
    let mut out = Vec::new();
    for case in CASES {
        for g in 2..=12 {
            for n in 2..=26 {
                if let Ok(t) = orbit_count(case, n, g) {
                    if ts.contains(&t) {
                        out.push((case, n, g));
                    }
                }
            }
        }
    }
    out
}

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn cyclo() -> impl Strategy<Value = CycloElement> {
    [rational(), rational(), rational(), rational()].prop_map(CycloElement::from_coords)
}

fn normal_form<S: Strategy + 'static>(
    ts: &'static [u32],
    coeff: fn() -> S,
) -> impl Strategy<Value = CyclicNormalForm<S::Value>>
where
    S::Value: Field,
{
    prop::sample::select(shapes(ts)).prop_flat_map(move |(case, n, g)| {
        let t = orbit_count(case, n, g).unwrap() as usize;
        prop::collection::vec(coeff(), t - 1)
            .prop_map(move |a| CyclicNormalForm::new(case, n, g, a).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dihedral_invariants_are_h_invariant(nf in normal_form(&[2, 3, 4, 6], cyclo), k in 0u32..12, flip in any::<bool>()) {
        let t = nf.t();
        let eps = CycloElement::primitive_root_of_unity(t).unwrap().pow(k % t);
        let u = nf.dihedral_invariants();
        let rotated = nf.act(&HGenerator::Rotation(eps)).unwrap();
        prop_assert_eq!(rotated.dihedral_invariants(), u.clone());
        if flip {
            prop_assert_eq!(nf.act(&HGenerator::Inversion).unwrap().dihedral_invariants(), u);
        }
    }

    #[test]
    fn rotation_needs_a_root_of_unity(nf in normal_form(&[3, 4, 6], cyclo)) {
        let bad = CycloElement::from_int(2);
        prop_assert!(nf.act(&HGenerator::Rotation(bad)).is_err());
    }

    #[test]
    fn reconstruction_round_trip(nf in normal_form(&[2, 3, 4, 5, 6, 7, 8, 9], rational)) {
        prop_assume!(!nf.coeffs()[0].is_zero());
        let u = nf.dihedral_invariants();
        let back = reconstruct_from_u(&u).unwrap().form().expect("forward-sampled invariants have a rational root");
        prop_assert_eq!(back.dihedral_invariants(), u);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    // the fiber of a generic point is one H-orbit of size 2t
    #[test]
    fn fiber_has_2t_points(nf in normal_form(&[2, 3, 4], rational)) {
        let (a1, ad) = (&nf.coeffs()[0], nf.coeffs().last().unwrap());
        let t = nf.t();
        prop_assume!(!a1.is_zero() && !ad.is_zero() && Ring::pow(a1, t) != Ring::pow(ad, t));
        let lifted = CyclicNormalForm::new(
            nf.case(),
            nf.n(),
            nf.genus(),
            nf.coeffs().iter().map(CycloElement::from_rational).collect(),
        )
        .unwrap();
        let u = lifted.dihedral_invariants();
        let fiber = reconstruct_all(&u).unwrap();
        prop_assert_eq!(fiber.len(), 2 * t as usize);
        prop_assert!(fiber.contains(&lifted));
    }
}
