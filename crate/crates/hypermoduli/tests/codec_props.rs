use hypermoduli::codec::{AnyForm, Codec, FormDoc};
use hypermoduli_core::arith::{rat, CycloElement, RatFunc, Rational, UniPoly};
use hypermoduli_core::forms::BinaryForm;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..=1_000_000, 1i64..=1000).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = UniPoly<Rational>> {
    prop::collection::vec(rational(), 0..6).prop_map(UniPoly::new)
}

fn reparse<T: Codec>(x: &T) -> T {
    let text = serde_json::to_string(&x.encode()).unwrap();
    T::decode(&serde_json::from_str(&text).unwrap(), "x").unwrap()
}

proptest! {
    #[test]
    fn scalars_round_trip(q in rational(), c in [rational(), rational(), rational(), rational()]) {
        prop_assert_eq!(reparse(&q), q);
        let z = CycloElement::from_coords(c);
        prop_assert_eq!(reparse(&z), z);
    }

    #[test]
    fn rational_functions_round_trip(n in poly(), d in poly()) {
        prop_assume!(!d.coeffs().is_empty());
        let f = RatFunc::new(n, d).unwrap();
        prop_assert_eq!(reparse(&f), f);
    }

    #[test]
    fn forms_round_trip(c in prop::collection::vec(poly(), 1..9), genus in prop::option::of(2u32..20)) {
        let f = BinaryForm::new(c.len() - 1, c).unwrap();
        let doc = FormDoc { genus, form: AnyForm::Parametric(f) };
        let text = serde_json::to_string(&doc.encode()).unwrap();
        prop_assert_eq!(FormDoc::decode(&serde_json::from_str(&text).unwrap(), "form").unwrap(), doc);
    }
}
