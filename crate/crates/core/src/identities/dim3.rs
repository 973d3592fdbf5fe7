//! Three-dimensional statements: curvature reconstruction from Ricci, the
//! chain of consequences of `Qφ = φQ`, η-Einstein coefficients, local
//! φ-symmetry and flatness.

use super::conditions::{condition_truth, l_phi_residual, Condition};
use super::fits::{eta_einstein_fit, k_nullity_fit};
use super::la::{add, outer, scale, sub};
use super::Ctx;
use crate::check::{CheckResult, Residuals, Truth};
use crate::geometry::GeometryPack;
use crate::scalar::{Matrix, Scalar};

type Vector = Vec<Scalar>;

/// Residual `R(E_i,E_j)E_k - f(E_i,E_j,E_k)` over all frame triples.
fn curvature_residual(pack: &GeometryPack, f: impl Fn(&[Scalar], &[Scalar], &[Scalar]) -> Vector) -> Residuals {
    let spec = pack.spec();
    let d = spec.dim();
    let mut r = Residuals::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (x, y, z) = (spec.basis(i), spec.basis(j), spec.basis(k));
                let diff = sub(&pack.curvature(&x, &y, &z), &f(&x, &y, &z));
                r.push_vector(&format!("R(E{},E{})E{}", i + 1, j + 1, k + 1), &diff);
            }
        }
    }
    r
}

fn mres(label: &str, m: &Matrix) -> Residuals {
    let mut r = Residuals::new();
    r.push_matrix(label, m);
    r
}

fn not_dim3(pack: &GeometryPack, ids: &[(&str, &str)]) -> Option<Vec<CheckResult>> {
    (pack.dim() != 3).then(|| {
        ids.iter()
            .map(|(id, st)| {
                CheckResult::not_applicable(
                    *id,
                    *st,
                    format!("stated for dimension 3, spec has dimension {}", pack.dim()),
                )
            })
            .collect()
    })
}

fn scalar_res(label: &str, v: Scalar) -> Residuals {
    let mut r = Residuals::new();
    r.push(label, v);
    r
}

const EQ9: &str = "R(X,Y)Z = g(Y,Z)QX - g(X,Z)QY + g(QY,Z)X - g(QX,Z)Y - scal/2 (g(Y,Z)X - g(X,Z)Y)";
const EQ10: &str = "Q phi = phi Q implies Q xi = trl xi";
const EQ11: &str = "lX = QX + (trl - scal/2)X + eta(X)(scal/2 - 2trl)xi";
const EQ12: &str = "Q phi = phi Q implies phi l = l phi";
const EQ13: &str = "Q phi = phi Q implies -l = phi^2 - h^2";
const EQ14: &str = "Q phi = phi Q implies lX = (trl/2) phi^2 X";
const EQ15: &str = "Q phi = phi Q implies QX = aX + b eta(X)xi, a = (scal - trl)/2, b = (3trl - scal)/2";
const EQ19: &str = "Q phi = phi Q implies R(X,Y)Z = (gamma g(Y,Z) + b eta(Y)eta(Z))X - (gamma g(X,Z) + b eta(X)eta(Z))Y + b(eta(X)g(Y,Z) - eta(Y)g(X,Z))xi, gamma = scal/2 - trl";
const EQ20: &str = "Q phi = phi Q implies R(X,Y)xi = (trl/2)(eta(Y)X - eta(X)Y)";
const TRL_CONST: &str = "Q phi = phi Q implies trl is constant";

pub fn check_dim3_pipeline(pack: &GeometryPack) -> Vec<CheckResult> {
    if let Some(na) = not_dim3(
        pack,
        &[
            ("eq9.reconstruction", EQ9),
            ("eq10", EQ10),
            ("eq11", EQ11),
            ("eq12", EQ12),
            ("eq13", EQ13),
            ("eq14", EQ14),
            ("eq15", EQ15),
            ("eq19", EQ19),
            ("eq20", EQ20),
            ("lemma41.trl_constant", TRL_CONST),
        ],
    ) {
        return na;
    }
    let ctx = Ctx::new(pack);
    let spec = pack.spec();
    let d = spec.dim();
    let g = |u: &[Scalar], v: &[Scalar]| spec.inner(u, v);
    let eta = |u: &[Scalar]| spec.eta_of(u);
    let q = &pack.q;
    let phi = spec.phi();
    let xi = spec.xi();
    let half = Scalar::from_ratio(1, 2);
    let half_scal = &pack.scal * &half;
    let trl = &pack.trl;
    let qphi = condition_truth(pack, Condition::QPhiCommute);
    let mut out = Vec::new();

    let r9 = curvature_residual(pack, |x, y, z| {
        let qx = q.mul_vec(x);
        let qy = q.mul_vec(y);
        let mut v = sub(&scale(&g(y, z), &qx), &scale(&g(x, z), &qy));
        v = add(&v, &scale(&g(&qy, z), x));
        v = sub(&v, &scale(&g(&qx, z), y));
        let w = sub(&scale(&g(y, z), x), &scale(&g(x, z), y));
        sub(&v, &scale(&half_scal, &w))
    });
    out.push(CheckResult::from_residuals("eq9.reconstruction", EQ9, r9, ctx.hp));

    let q_xi = sub(&q.mul_vec(&xi), &scale(trl, &xi));
    let mut r10 = Residuals::new();
    r10.push_vector("Q xi - trl xi", &q_xi);
    out.push(ctx.under("eq10", EQ10, &qphi, r10));

    let id = Matrix::identity(d);
    let xi_eta = outer(&xi, &spec.eta());
    let rhs11 = q
        .add(&id.scale(&(trl - &half_scal)))
        .add(&xi_eta.scale(&(&half_scal - &(trl * &Scalar::from_int(2)))));
    out.push(ctx.identity("eq11", EQ11, mres("l - rhs", &pack.l.sub(&rhs11))));

    out.push(ctx.under("eq12", EQ12, &qphi, mres("l phi - phi l", &l_phi_residual(pack))));

    let phi2 = phi * phi;
    let h2 = &pack.h * &pack.h;
    let r13 = pack.l.add(&phi2.sub(&h2));
    out.push(ctx.under("eq13", EQ13, &qphi, mres("l + phi^2 - h^2", &r13)));

    let r14 = pack.l.sub(&phi2.scale(&(trl * &half)));
    out.push(ctx.under("eq14", EQ14, &qphi, mres("l - trl/2 phi^2", &r14)));

    let a = &(&pack.scal - trl) * &half;
    let b = &(&(trl * &Scalar::from_int(3)) - &pack.scal) * &half;
    let r15 = q.sub(&id.scale(&a)).sub(&xi_eta.scale(&b));
    out.push(
        ctx.under("eq15", EQ15, &qphi, mres("Q - a id - b eta(x)xi", &r15))
            .with_note(format!("a = {a}, b = {b}")),
    );

    let gamma = &half_scal - trl;
    let r19 = curvature_residual(pack, |x, y, z| {
        let cx = &(&gamma * &g(y, z)) + &(&b * &(&eta(y) * &eta(z)));
        let cy = &(&gamma * &g(x, z)) + &(&b * &(&eta(x) * &eta(z)));
        let cxi = &b * &(&(&eta(x) * &g(y, z)) - &(&eta(y) * &g(x, z)));
        add(&sub(&scale(&cx, x), &scale(&cy, y)), &scale(&cxi, &xi))
    });
    out.push(
        ctx.under("eq19", EQ19, &qphi, r19)
            .with_note(format!("gamma = {gamma}, b = {b}")),
    );

    let mut r20 = Residuals::new();
    let half_trl = trl * &half;
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (spec.basis(i), spec.basis(j));
            let lhs = pack.curvature(&x, &y, &xi);
            let rhs = scale(&half_trl, &sub(&scale(&eta(&y), &x), &scale(&eta(&x), &y)));
            r20.push_vector(&format!("R(E{},E{})xi", i + 1, j + 1), &sub(&lhs, &rhs));
        }
    }
    out.push(ctx.under("eq20", EQ20, &qphi, r20));

    out.push(
        CheckResult::holds("lemma41.trl_constant", TRL_CONST)
            .with_note("automatic (model class): every frame component is constant"),
    );
    out
}

const PROP43: &str = "eta-Einstein iff Q phi = phi Q iff xi in the k-nullity distribution iff nabla_xi tau = 0";
const PROP42: &str = "Q phi = phi Q iff nabla_xi tau = 0";
const K_TRL: &str = "xi in N(k) implies k = trl/2";
const A_PLUS_B: &str = "eta-Einstein implies a + b = trl";

pub fn check_prop43(pack: &GeometryPack) -> Vec<CheckResult> {
    if let Some(na) = not_dim3(
        pack,
        &[
            ("prop43.equiv", PROP43),
            ("prop42.equiv", PROP42),
            ("prop43.k_trl", K_TRL),
            ("remark43.a_plus_b", A_PLUS_B),
        ],
    ) {
        return na;
    }
    let ctx = Ctx::new(pack);
    let fit = eta_einstein_fit(pack);
    let nullity = k_nullity_fit(pack);
    let qphi = condition_truth(pack, Condition::QPhiCommute);
    let nt = ctx.truth(&mres("nabla_xi tau", &pack.nabla_xi_tau));
    let mut out = Vec::new();
    out.push(ctx.equivalent(
        "prop43.equiv",
        PROP43,
        &[
            ("eta-Einstein", fit.truth.clone()),
            ("Q phi = phi Q", qphi.clone()),
            ("k-nullity", nullity.truth.clone()),
            ("nabla_xi tau = 0", nt.clone()),
        ],
    ));
    out.push(ctx.equivalent(
        "prop42.equiv",
        PROP42,
        &[("Q phi = phi Q", qphi), ("nabla_xi tau = 0", nt)],
    ));
    let half_trl = &pack.trl * &Scalar::from_ratio(1, 2);
    out.push(
        ctx.under(
            "prop43.k_trl",
            K_TRL,
            &nullity.truth,
            scalar_res("k - trl/2", &nullity.k - &half_trl),
        )
        .with_note(format!("k = {}", nullity.k)),
    );
    out.push(
        ctx.under(
            "remark43.a_plus_b",
            A_PLUS_B,
            &fit.truth,
            scalar_res("a + b - trl", &(&fit.a + &fit.b) - &pack.trl),
        )
        .with_note(format!("a = {}, b = {}, trl = {}", fit.a, fit.b, pack.trl)),
    );
    out
}

const EQ23: &str = "eta-Einstein implies a = scal/2n + 1 + c^2/4n, b = -scal/2n - (2n+1)(1 + c^2/4n)";
const EQ23_EINSTEIN: &str = "Einstein (b = 0) implies scal = -2n(2n+1)(1 + c^2/4n)";
const EQ24: &str = "eta-Einstein, n = 1 implies R(X,Y)Z = A(g(Y,Z)X - g(X,Z)Y) + B(eta(Y)eta(Z)X - eta(X)eta(Z)Y + g(Y,Z)eta(X)xi - g(X,Z)eta(Y)xi), A = scal/2 + 2(1 + c^2/4), B = -scal/2 - 3(1 + c^2/4)";

pub fn check_eq23_24(pack: &GeometryPack) -> Vec<CheckResult> {
    let ctx = Ctx::new(pack);
    let spec = pack.spec();
    let fit = eta_einstein_fit(pack);
    let n = Scalar::from_int(ctx.n());
    let two_n = &n * &Scalar::from_int(2);
    let one = Scalar::one();
    // 1 + c²/4n
    let tail = &one + &(&pack.c2 / &(&two_n * &Scalar::from_int(2)));
    let a_expected = &(&pack.scal / &two_n) + &tail;
    let b_expected = -(&(&pack.scal / &two_n) + &(&(&two_n + &one) * &tail));
    let no_fit = "the eta-Einstein fit does not exist";
    let mut out = Vec::new();

    if fit.truth.is_false() {
        out.push(CheckResult::not_applicable("eq23.coefficients", EQ23, no_fit));
    } else {
        let mut r = Residuals::new();
        r.push("a - expected", &fit.a - &a_expected);
        r.push("b - expected", &fit.b - &b_expected);
        out.push(ctx.under("eq23.coefficients", EQ23, &fit.truth, r).with_note(format!(
            "a = {}, b = {}, scal = {}, c2 = {}",
            fit.a, fit.b, pack.scal, pack.c2
        )));
    }

    let einstein = fit.truth.and(&scalar_res("b", fit.b.clone()).truth(ctx.hp));
    let scal_expected = -(&(&two_n * &(&two_n + &one)) * &tail);
    out.push(ctx.under(
        "eq23.einstein_scal",
        EQ23_EINSTEIN,
        &einstein,
        scalar_res("scal - expected", &pack.scal - &scal_expected),
    ));

    if pack.dim() != 3 {
        out.push(CheckResult::not_applicable("eq24.curvature", EQ24, "stated for n = 1"));
    } else if fit.truth.is_false() {
        out.push(CheckResult::not_applicable("eq24.curvature", EQ24, no_fit));
    } else {
        let half_scal = &pack.scal * &Scalar::from_ratio(1, 2);
        let tail1 = &one + &(&pack.c2 / &Scalar::from_int(4));
        let big_a = &half_scal + &(&Scalar::from_int(2) * &tail1);
        let big_b = -(&half_scal + &(&Scalar::from_int(3) * &tail1));
        let xi = spec.xi();
        let g = |u: &[Scalar], v: &[Scalar]| spec.inner(u, v);
        let eta = |u: &[Scalar]| spec.eta_of(u);
        let r = curvature_residual(pack, |x, y, z| {
            let first = sub(&scale(&g(y, z), x), &scale(&g(x, z), y));
            let mut second = sub(&scale(&(&eta(y) * &eta(z)), x), &scale(&(&eta(x) * &eta(z)), y));
            let c = &(&g(y, z) * &eta(x)) - &(&g(x, z) * &eta(y));
            second = add(&second, &scale(&c, &xi));
            add(&scale(&big_a, &first), &scale(&big_b, &second))
        });
        out.push(ctx.under("eq24.curvature", EQ24, &fit.truth, r));
    }
    out
}

const PHISYM: &str = "phi^2((nabla_W R)(X,Y)Z) = 0 for W,X,Y,Z orthogonal to xi";
const PHISYM_THM: &str = "Q phi = phi Q and scal constant implies locally phi-symmetric";

fn phi_symmetry_residual(pack: &GeometryPack) -> Residuals {
    let spec = pack.spec();
    let d = spec.dim();
    let xi = spec.xi();
    let phi2 = spec.phi() * spec.phi();
    let horizontal: Vec<(usize, Vector)> = (0..d)
        .map(|i| {
            let e = spec.basis(i);
            let p = sub(&e, &scale(&spec.eta_of(&e), &xi));
            (i, p)
        })
        .filter(|(_, p)| p.iter().any(|c| !c.is_zero()))
        .collect();
    let mut r = Residuals::new();
    for (w, pw) in &horizontal {
        for (x, px) in &horizontal {
            for (y, py) in &horizontal {
                for (z, pz) in &horizontal {
                    let v = phi2.mul_vec(&pack.nabla_curvature(pw, px, py, pz));
                    r.push_vector(&format!("W={},X={},Y={},Z={}", w + 1, x + 1, y + 1, z + 1), &v);
                }
            }
        }
    }
    r
}

/// Local φ-symmetry of the instance, with horizontal fields spanned by the
/// projections of the frame onto `ker η`.
pub fn check_phi_symmetry(pack: &GeometryPack) -> CheckResult {
    if pack.dim() != 3 {
        return CheckResult::not_applicable("phisym.local", PHISYM, "stated for dimension 3");
    }
    CheckResult::from_residuals(
        "phisym.local",
        PHISYM,
        phi_symmetry_residual(pack),
        pack.spec().has_params(),
    )
    .with_note("scal is constant: automatic (model class)")
}

pub(crate) fn phi_symmetry_theorem(pack: &GeometryPack) -> CheckResult {
    if pack.dim() != 3 {
        return CheckResult::not_applicable("phisym.theorem", PHISYM_THM, "stated for dimension 3");
    }
    let ctx = Ctx::new(pack);
    let qphi = condition_truth(pack, Condition::QPhiCommute);
    ctx.under("phisym.theorem", PHISYM_THM, &qphi, phi_symmetry_residual(pack))
        .with_note("the converse cannot be exercised: scal is constant on every structure-constant model")
}

const FLAT: &str = "Q phi = phi Q and l = 0 implies R = 0";

pub fn check_flatness_remark(pack: &GeometryPack) -> CheckResult {
    if pack.dim() != 3 {
        return CheckResult::not_applicable("remark42.flat", FLAT, "stated for dimension 3");
    }
    let ctx = Ctx::new(pack);
    let premise: Truth = condition_truth(pack, Condition::QPhiCommute).and(&ctx.truth(&mres("l", &pack.l)));
    let mut r = Residuals::new();
    r.push_tensor("R", &pack.riemann);
    ctx.under("remark42.flat", FLAT, &premise, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Verdict;
    use crate::fixtures;

    fn find(rs: &[CheckResult], id: &str) -> CheckResult {
        rs.iter()
            .find(|r| r.id == id)
            .cloned()
            .unwrap_or_else(|| panic!("no check {id}"))
    }

    #[test]
    fn example_pipeline_holds() {
        let pack = GeometryPack::compute(&fixtures::f1_with_metric(&[1, -1, 1]));
        let rs: Vec<_> = check_dim3_pipeline(&pack)
            .into_iter()
            .chain(check_prop43(&pack))
            .chain(check_eq23_24(&pack))
            .chain([check_phi_symmetry(&pack), check_flatness_remark(&pack)])
            .collect();
        for r in &rs {
            assert_eq!(r.verdict, Verdict::Holds, "{}: {:?}", r.id, r.residual);
        }
        assert_eq!(find(&rs, "eq15").note.as_deref(), Some("a = 2, b = -4"));
        assert!(find(&rs, "remark42.flat").note.unwrap().contains("vacuous"));
    }

    #[test]
    fn witness_equivalences() {
        let pack = GeometryPack::compute(&fixtures::f2_star());
        let rs = check_prop43(&pack);
        let eq = find(&rs, "prop43.equiv");
        assert_eq!(eq.verdict, Verdict::Holds);
        assert_eq!(
            eq.note.as_deref(),
            Some("eta-Einstein: false; Q phi = phi Q: false; k-nullity: false; nabla_xi tau = 0: false")
        );
        let pipeline = check_dim3_pipeline(&pack);
        assert_eq!(find(&pipeline, "eq9.reconstruction").verdict, Verdict::Holds);
        assert_eq!(find(&pipeline, "eq11").verdict, Verdict::Holds);
    }

    #[test]
    fn abelian_flat_remark() {
        let pack = GeometryPack::compute(&fixtures::abelian());
        assert_eq!(check_flatness_remark(&pack).verdict, Verdict::Holds);
        assert_eq!(check_phi_symmetry(&pack).verdict, Verdict::Holds);
    }
}
