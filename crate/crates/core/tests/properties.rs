use pcm_core::check::Verdict;
use pcm_core::dhomothety::{self, DHomothetyParams};
use pcm_core::fixtures;
use pcm_core::frontend::{parse_spec, print_spec};
use pcm_core::geometry::GeometryPack;
use pcm_core::model::{check_paracontact, jacobi_residuals, AlgebraSpec};
use pcm_core::oracle::{bianchi_oracle, engine_checks, float_crosscheck};
use pcm_core::scalar::Rational;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn spec_point() -> impl Strategy<Value = AlgebraSpec> {
    prop_oneof![
        (small_rational(), small_rational()).prop_map(|(a, b)| fixtures::f1_at(a, b)),
        (small_rational(), small_rational()).prop_map(|(b, c)| fixtures::f2_at(b, c)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn print_then_parse_is_identity(spec in spec_point()) {
        let text = print_spec(&spec);
        let back = parse_spec(&text).unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(print_spec(&back), text);
    }

    #[test]
    fn curvature_symmetries_on_the_f2_family(b in small_rational(), c in small_rational()) {
        let spec = fixtures::f2_at(b, c);
        prop_assume!(jacobi_residuals(&spec).is_empty());
        let pack = GeometryPack::compute(&spec);
        let mut checks = bianchi_oracle(&pack);
        checks.extend(engine_checks(&pack));
        for r in checks.iter().filter(|r| r.id != "bianchi.eq18") {
            prop_assert_eq!(r.verdict, Verdict::Holds, "{}: {:?}", r.id, r.residual);
        }
    }

    #[test]
    fn float_pipeline_tracks_the_exact_one(spec in spec_point()) {
        prop_assume!(jacobi_residuals(&spec).is_empty());
        let rep = float_crosscheck(&spec).unwrap();
        prop_assert!(rep.max_deviation <= 1e-9, "{}", rep.max_deviation);
    }

    #[test]
    fn d_homothety_keeps_paracontact_and_round_trips(
        alpha in positive_rational(),
        beta in small_rational(),
        h_nonzero in any::<bool>(),
    ) {
        let spec = if h_nonzero {
            fixtures::f2_at(Rational::from_integer(1.into()), beta)
        } else {
            fixtures::f1_at(Rational::from_integer((-2).into()), beta)
        };
        prop_assume!(check_paracontact(&spec).verdict == Verdict::Holds);
        let p = DHomothetyParams::new(alpha).unwrap();
        let bar = dhomothety::apply(&spec, &p).unwrap();
        prop_assert_eq!(check_paracontact(&bar).verdict, Verdict::Holds);
        prop_assert_eq!(dhomothety::round_trip(&spec, &p).unwrap().verdict, Verdict::Holds);
        let back = dhomothety::apply(&bar, &p.inverse()).unwrap();
        prop_assert_eq!(back.metric(), spec.metric());
        prop_assert_eq!(back.xi(), spec.xi());
    }
}
