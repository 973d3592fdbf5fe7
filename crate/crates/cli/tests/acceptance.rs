//! Acceptance suite: one test per criterion. Exact checks have tolerance
//! zero; the float oracle is held to `FLOAT_TOL`.

use std::path::PathBuf;
use std::process::Command;

use pcm_core::check::{CheckResult, Truth, Verdict};
use pcm_core::dhomothety::{self, DHomothetyParams};
use pcm_core::fixtures;
use pcm_core::frontend::{parse_spec, parse_spec_named};
use pcm_core::geometry::GeometryPack;
use pcm_core::identities::{
    check_phi_symmetry, condition_truth, constraint_extract, eta_einstein_fit, k_nullity_fit, run_identities, Condition,
};
use pcm_core::model::AlgebraSpec;
use pcm_core::oracle::{
    bianchi_oracle, engine_checks, float_crosscheck, mutation_sensitivity, random_search, random_substitution_checks,
    SearchConfig,
};
use pcm_core::scalar::{Matrix, Rational, Scalar};

const FLOAT_TOL: f64 = 1e-9;
const POINTS: usize = 20;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn s(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

fn e(k: usize) -> Vec<Scalar> {
    (0..3)
        .map(|i| if i == k { Scalar::one() } else { Scalar::zero() })
        .collect()
}

fn outer(u: &[Scalar], v: &[Scalar]) -> Matrix {
    Matrix::from_fn(u.len(), v.len(), |i, j| &u[i] * &v[j])
}

/// Twenty distinct rationals with small heights.
fn beta_samples() -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    let mut k = 0i64;
    while out.len() < POINTS {
        let v = q((k * 7) % 19 - 9, k % 9 + 1);
        if !out.contains(&v) {
            out.push(v);
        }
        k += 1;
    }
    out
}

fn at_beta(b: &Rational) -> AlgebraSpec {
    fixtures::f1_minus2()
        .specialize(&[("beta".to_string(), b.clone())])
        .unwrap()
}

fn find<'a>(checks: &'a [CheckResult], id: &str) -> &'a CheckResult {
    checks
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("no check {id}"))
}

fn assert_holds(checks: &[CheckResult], id: &str, ctx: &str) {
    let c = find(checks, id);
    assert_eq!(c.verdict, Verdict::Holds, "{ctx}: {id}: {:?} {:?}", c.residual, c.note);
}

fn search_hits() -> Vec<AlgebraSpec> {
    random_search(&SearchConfig::new(100, 1))
        .unwrap()
        .into_iter()
        .map(|h| h.spec)
        .collect()
}

/// The reference point `F1(-2, 0)`.
fn f1_ref() -> AlgebraSpec {
    fixtures::f1_at(q(-2, 1), q(0, 1))
}

fn alpha4_image() -> AlgebraSpec {
    dhomothety::apply(&f1_ref(), &DHomothetyParams::new(q(4, 1)).unwrap()).unwrap()
}

fn cli_data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn c01_constraint_extraction() {
    let family = parse_spec(fixtures::F1_SOURCE).unwrap();
    assert_eq!(
        constraint_extract(&family, Condition::Paracontact).generator_strings(),
        ["alpha + 2"]
    );
    let at_minus2 = family.specialize(&[("alpha".to_string(), q(-2, 1))]).unwrap();
    let qphi = constraint_extract(&at_minus2, Condition::QPhiCommute);
    // Q phi - phi Q vanishes identically on F1(-2, beta); this expectation
    // is kept as stated and fails.
    assert_eq!(
        qphi.generator_strings(),
        ["beta"],
        "q-phi-commute on F1(-2,beta) gave {qphi}"
    );
}

#[test]
fn c02_example_geometry() {
    let pack = GeometryPack::compute(&fixtures::f1_minus2());
    let p = pack.spec().params().clone();
    let beta = Scalar::param(&p, 0);
    let minus_beta_1 = -(&beta + &Scalar::one());
    let z = Scalar::zero;
    let table = [
        (0, 0, vec![z(), z(), z()]),
        (0, 1, vec![z(), z(), s(-1, 1)]),
        (0, 2, vec![z(), s(-1, 1), z()]),
        (1, 0, vec![z(), z(), s(1, 1)]),
        (1, 1, vec![z(), z(), z()]),
        (1, 2, vec![s(-1, 1), z(), z()]),
        (2, 0, vec![z(), minus_beta_1.clone(), z()]),
        (2, 1, vec![minus_beta_1.clone(), z(), z()]),
        (2, 2, vec![z(), z(), z()]),
    ];
    for (i, j, want) in table {
        assert_eq!(pack.nabla(&e(i), &e(j)), want, "nabla_E{} E{}", i + 1, j + 1);
    }

    let spec = f1_ref();
    let pack = GeometryPack::compute(&spec);
    let g = spec.metric();
    let eta = spec.eta();
    let xi = spec.xi();
    let want_ric = g.scale(&s(2, 1)).sub(&outer(&eta, &eta).scale(&s(4, 1)));
    assert_eq!(pack.ricci, want_ric);
    for x in 0..3 {
        for y in 0..3 {
            let (ex, ey) = (e(x), e(y));
            let want: Vec<Scalar> = (0..3).map(|k| -(&(&eta[y] * &ex[k]) - &(&eta[x] * &ey[k]))).collect();
            assert_eq!(pack.curvature(&ex, &ey, &xi), want, "R(E{},E{})xi", x + 1, y + 1);
        }
    }
    assert_eq!(pack.scal, s(2, 1));
    assert_eq!(pack.trl, s(-2, 1));
    let fit = eta_einstein_fit(&pack);
    assert_eq!(fit.truth, Truth::True);
    assert_eq!((fit.a.clone(), fit.b.clone()), (s(2, 1), s(-4, 1)));
    assert_eq!(&fit.a + &fit.b, pack.trl);
    let nullity = k_nullity_fit(&pack);
    assert_eq!(nullity.truth, Truth::True);
    assert_eq!(nullity.k, s(-1, 1));
}

const PARA_SASAKIAN_FAMILIES: [&str; 10] = [
    "eq2.", "eq3.", "eq4.", "eq5.", "eq6", "eq7", "eq8.", "lemma31.", "prop32.", "prop33.",
];

fn assert_para_sasakian_suite(spec: &AlgebraSpec, ctx: &str) {
    let pack = GeometryPack::compute(spec);
    let checks = run_identities(&pack);
    let mut seen = 0;
    for c in checks
        .iter()
        .filter(|c| PARA_SASAKIAN_FAMILIES.iter().any(|p| c.id.starts_with(p)))
    {
        assert_eq!(
            c.verdict,
            Verdict::Holds,
            "{ctx}: {} {:?} {:?}",
            c.id,
            c.residual,
            c.note
        );
        seen += 1;
    }
    assert!(seen >= 30, "{ctx}: only {seen} checks in scope");
    assert!(pack.h.is_zero(), "{ctx}: h = {:?}", pack.h);
    assert_eq!(condition_truth(&pack, Condition::ParaSasakian), Truth::True, "{ctx}");
}

#[test]
fn c03_para_sasakian_family() {
    assert_para_sasakian_suite(&fixtures::f1_minus2(), "symbolic beta");
    for b in beta_samples() {
        assert_para_sasakian_suite(&at_beta(&b), &format!("beta = {b}"));
    }
}

#[test]
fn c04_h_nonzero_witness() {
    let spec = fixtures::f2_star();
    let pack = GeometryPack::compute(&spec);
    assert_eq!(pack.h, Matrix::diag(vec![s(1, 2), s(-1, 2), Scalar::zero()]));
    assert_eq!((&pack.h * &pack.h).trace(), s(1, 2));
    assert_eq!(pack.trl, s(-3, 2));
    assert_eq!(pack.l.mul_vec(&e(0)), vec![s(3, 4), Scalar::zero(), Scalar::zero()]);
    assert_eq!(pack.l.mul_vec(&e(1)), vec![Scalar::zero(), s(-9, 4), Scalar::zero()]);

    let checks = run_identities(&pack);
    for id in ["eq5.trl", "eq6", "eq7", "prop32.vi", "prop33.f9"] {
        assert_holds(&checks, id, "F2*");
    }
    let note = |id: &str| find(&checks, id).note.clone().unwrap_or_default();
    assert!(
        note("prop32.iv").contains("X=E1: 3/4 = 3/2 - 1 + 1/4"),
        "{}",
        note("prop32.iv")
    );
    assert_eq!(
        note("prop33.equiv"),
        "nabla_xi h = 0: false; nabla_xi tau = 0: false; l phi = phi l: false"
    );
    assert_eq!(
        note("prop43.equiv"),
        "eta-Einstein: false; Q phi = phi Q: false; k-nullity: false; nabla_xi tau = 0: false"
    );
}

#[test]
fn c05_dim3_reconstruction() {
    let mut specs = vec![fixtures::f1_minus2(), fixtures::f2_star(), fixtures::abelian()];
    let hits = search_hits();
    assert_eq!(hits.len(), 44);
    specs.extend(hits);
    for spec in &specs {
        let checks = run_identities(&GeometryPack::compute(spec));
        let r = find(&checks, "eq9.reconstruction");
        assert_eq!(r.verdict, Verdict::Holds, "{}", spec.name());
        assert!(r.residual.is_empty(), "{}", spec.name());
        assert_holds(&checks, "eq11", spec.name());
    }
}

#[test]
fn c06_d_homothety() {
    let spec = f1_ref();
    let p = DHomothetyParams::new(q(4, 1)).unwrap();
    assert_eq!(p.beta(), &q(12, 1));
    let bar = alpha4_image();
    let pack = GeometryPack::compute(&bar);
    let g = spec.metric();
    let eta = spec.eta();
    let want = g.scale(&s(8, 1)).sub(&outer(&eta, &eta).scale(&s(40, 1)));
    assert_eq!(pack.ricci, want);
    assert_eq!(pack.trl, s(-2, 1));

    let laws = dhomothety::verify_transform_laws(&spec, &p).unwrap();
    for id in [
        "dhomothety.ricci_law",
        "dhomothety.trl_law",
        "dhomothety.q_xi_invariant",
        "dhomothety.paracontact",
    ] {
        assert_holds(&laws, id, "alpha = 4");
    }
    let qxi = pack.q.mul_vec(&bar.xi());
    let want: Vec<Scalar> = bar.xi().iter().map(|x| &pack.trl * x).collect();
    assert_eq!(qxi, want);
    assert_holds(&run_identities(&pack), "eq23.coefficients", "image");
    assert_eq!(dhomothety::round_trip(&spec, &p).unwrap().verdict, Verdict::Holds);
    let back = dhomothety::apply(&bar, &p.inverse()).unwrap();
    assert_eq!(
        GeometryPack::compute(&back).riemann,
        GeometryPack::compute(&spec).riemann
    );
}

#[test]
fn c07_local_phi_symmetry() {
    for spec in [f1_ref(), fixtures::abelian()] {
        let r = check_phi_symmetry(&GeometryPack::compute(&spec));
        assert_eq!(r.verdict, Verdict::Holds, "{}: {:?}", spec.name(), r.residual);
    }
}

#[test]
fn c08_universal_properties() {
    let mut specs = vec![
        parse_spec(fixtures::F1_SOURCE).unwrap(),
        fixtures::f1_minus2(),
        f1_ref(),
        fixtures::f1_at(q(-2, 1), q(3, 1)),
        fixtures::f2_star(),
        fixtures::abelian(),
        alpha4_image(),
    ];
    specs.extend(beta_samples().iter().map(at_beta));
    specs.extend(search_hits());
    for spec in &specs {
        let pack = GeometryPack::compute(spec);
        let mut checks = bianchi_oracle(&pack);
        checks.extend(engine_checks(&pack));
        for id in [
            "bianchi.symmetries",
            "bianchi.first",
            "bianchi.second",
            "engine.torsion_free",
            "engine.metric_compat",
        ] {
            assert_holds(&checks, id, spec.name());
        }
        let m = mutation_sensitivity(spec, &pack.gamma);
        assert!(m.undetected.is_empty(), "{}: {:?}", spec.name(), m.undetected);
        assert_eq!(m.mutated, m.detected);
    }
}

#[test]
fn c09_cross_validation() {
    for spec in [
        f1_ref(),
        fixtures::f1_at(q(-2, 1), q(3, 1)),
        fixtures::f2_star(),
        alpha4_image(),
    ] {
        let r = float_crosscheck(&spec).unwrap();
        assert!(r.max_deviation <= FLOAT_TOL, "{}: {}", spec.name(), r.max_deviation);
    }
    let ids = [
        "paracontact",
        "q-phi-commute",
        "h-zero",
        "eta-einstein",
        "eq5.trl",
        "eq8.iff_h_zero",
        "eq9.reconstruction",
        "lemma31.f4",
        "prop33.f9",
        "prop43.equiv",
    ];
    for spec in [fixtures::f1_symbolic(), fixtures::f1_minus2(), fixtures::f2_symbolic()] {
        for r in random_substitution_checks(&spec, &ids, POINTS, 7).unwrap() {
            assert_eq!(r.points.len(), POINTS);
            assert!(
                r.all_agree(),
                "{} {}: {:?}",
                spec.name(),
                r.check_id,
                r.points.iter().find(|p| !p.agrees)
            );
        }
    }
}

#[test]
fn c10_frontend() {
    assert_eq!(parse_spec(fixtures::F1_SOURCE).unwrap(), fixtures::f1_symbolic());

    let bad = fixtures::F1_SOURCE.replace("bracket [1,3]", "bracket [3,3]");
    let err = parse_spec_named(&bad, "f1.pcm").unwrap_err();
    assert_eq!((err.span.line, err.span.column), (6, 12), "{err}");
    let bad = fixtures::F1_SOURCE.replace("beta * e1", "gamma * e1");
    let err = parse_spec_named(&bad, "f1.pcm").unwrap_err();
    assert_eq!(err.to_string(), "f1.pcm:7:19: unknown parameter `gamma`");

    let file = cli_data("ss_example.pcm");
    let f = file.to_str().unwrap();
    let run = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_pcm")).args(args).output().unwrap();
    let out = run(&["identities", f, "--subst", "alpha=-2", "--subst", "beta=0", "--json"]);
    let golden = std::fs::read(cli_data("ss_example_minus2.golden.json")).unwrap();
    assert_eq!(out.stdout, golden, "golden report differs");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["check", f]).status.code(), Some(3));
    assert_eq!(
        run(&["check", f, "--subst", "alpha=3", "--subst", "beta=0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["check", f, "--subst", "delta=3"]).status.code(), Some(1));
}
