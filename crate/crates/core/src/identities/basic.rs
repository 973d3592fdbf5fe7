//! Identities of the operators `τ`, `h`, `l` on a paracontact structure.

use super::conditions::{condition_truth, para_sasakian_residual, Condition};
use super::la::from_cols;
use super::Ctx;
use crate::check::{CheckResult, Residuals};
use crate::geometry::{lie_xi_phi, operator_norm2, GeometryPack};
use crate::scalar::{Matrix, Scalar};

fn m(label: &str, x: &Matrix) -> Residuals {
    let mut r = Residuals::new();
    r.push_matrix(label, x);
    r
}

fn v(label: &str, x: &[Scalar]) -> Residuals {
    let mut r = Residuals::new();
    r.push_vector(label, x);
    r
}

fn s(label: &str, x: Scalar) -> Residuals {
    let mut r = Residuals::new();
    r.push(label, x);
    r
}

/// `g A - (g A)ᵀ`: zero iff `A` is `g`-symmetric.
fn asymmetry(a: &Matrix, g: &Matrix) -> Matrix {
    let ga = g * a;
    ga.sub(&ga.transpose())
}

#[allow(clippy::vec_init_then_push)]
pub fn run_basic_identities(pack: &GeometryPack) -> Vec<CheckResult> {
    let ctx = Ctx::new(pack);
    let spec = pack.spec();
    let d = spec.dim();
    let g = spec.metric();
    let phi = spec.phi();
    let xi = spec.xi();
    let (h, l, tau) = (&pack.h, &pack.l, &pack.tau);
    let phi2 = phi * phi;
    let h2 = h * h;
    let two = Scalar::from_int(2);
    let mut out = Vec::new();

    out.push(ctx.identity("eq2.l_xi", "l xi = 0", v("l xi", &l.mul_vec(&xi))));
    out.push(ctx.identity("eq2.h_xi", "h xi = 0", v("h xi", &h.mul_vec(&xi))));
    out.push(ctx.identity("eq2.tr_h", "tr h = 0", s("tr h", h.trace())));
    out.push(ctx.identity("eq2.tr_h_phi", "tr(h phi) = 0", s("tr h phi", (h * phi).trace())));
    out.push(ctx.identity(
        "eq2.h_phi_anticommute",
        "h phi = -phi h",
        m("h phi + phi h", &(h * phi).add(&(phi * h))),
    ));
    out.push(ctx.identity(
        "eq2.h_symmetric",
        "g(hX,Y) = g(X,hY)",
        m("g h - (g h)^T", &asymmetry(h, g)),
    ));
    out.push(ctx.identity(
        "eq2.l_symmetric",
        "g(lX,Y) = g(X,lY)",
        m("g l - (g l)^T", &asymmetry(l, g)),
    ));

    let nabla_xi_cols: Vec<Vec<Scalar>> = (0..d).map(|i| pack.nabla(&spec.basis(i), &xi)).collect();
    let nabla_xi = from_cols(&nabla_xi_cols);
    let expected = (phi * h).sub(phi);
    out.push(ctx.identity(
        "eq3.nabla_xi",
        "nabla_X xi = -phi X + phi h X",
        m("nabla_E xi + phi E - phi h E", &nabla_xi.sub(&expected)),
    ));
    out.push(ctx.identity(
        "eq3.nabla_xi_xi",
        "nabla_xi xi = 0",
        v("nabla_xi xi", &pack.nabla(&xi, &xi)),
    ));
    out.push(ctx.identity(
        "eq4.nabla_xi_phi",
        "nabla_xi phi = 0",
        m("nabla_xi phi", &pack.nabla_xi_phi),
    ));

    let g_q_xi_xi = spec.inner(&pack.q.mul_vec(&xi), &xi);
    let mut eq5 = Residuals::new();
    eq5.push("trl - g(Q xi,xi)", &pack.trl - &g_q_xi_xi);
    eq5.push(
        "trl - (-2n + tr h^2)",
        &(&pack.trl + &Scalar::from_int(2 * ctx.n())) - &pack.trh2,
    );
    out.push(
        ctx.identity("eq5.trl", "trl = g(Q xi,xi) = -2n + tr h^2", eq5)
            .with_note(format!(
                "trl = {}, g(Q xi,xi) = {}, tr h^2 = {}",
                pack.trl, g_q_xi_xi, pack.trh2
            )),
    );

    let eq6 = (&(phi * l) * phi).add(l).add(&phi2.sub(&h2).scale(&two));
    out.push(ctx.identity(
        "eq6",
        "phi l phi + l = -2(phi^2 - h^2)",
        m("phi l phi + l + 2(phi^2 - h^2)", &eq6),
    ));

    let eq7 = pack.nabla_xi_h.add(phi).add(&(phi * l)).sub(&(phi * &h2));
    out.push(ctx.identity(
        "eq7",
        "nabla_xi h = -phi - phi l + phi h^2",
        m("nabla_xi h + phi + phi l - phi h^2", &eq7),
    ));

    let mut ps = Residuals::new();
    ps.push_tensor("(nabla_X phi)Y + g(X,Y)xi - eta(Y)X", &para_sasakian_residual(pack));
    let eq8 = "h = 0 implies (nabla_X phi)Y = -g(X,Y)xi + eta(Y)X (dimension 3)";
    out.push(
        ctx.dim3_only("eq8.para_sasakian", eq8)
            .unwrap_or_else(|| ctx.under("eq8.para_sasakian", eq8, &condition_truth(pack, Condition::HZero), ps)),
    );
    let iff = "para-Sasakian iff h = 0 (dimension 3)";
    out.push(ctx.dim3_only("eq8.iff_h_zero", iff).unwrap_or_else(|| {
        ctx.equivalent(
            "eq8.iff_h_zero",
            iff,
            &[
                ("para-Sasakian", condition_truth(pack, Condition::ParaSasakian)),
                ("h = 0", condition_truth(pack, Condition::HZero)),
            ],
        )
    }));

    // Lemma on the torsion τ
    let phi_t = phi.transpose();
    let f1 = tau.add(&(&(&phi_t * g) * h).scale(&two));
    out.push(ctx.identity("lemma31.f1", "tau(X,Y) = -2g(phi X,hY)", m("tau + 2 phi^T g h", &f1)));
    let tau_xi: Vec<Scalar> = (0..d).map(|j| (0..d).map(|i| &xi[i] * &tau[(i, j)]).sum()).collect();
    out.push(ctx.identity("lemma31.f2", "tau(xi,.) = 0", v("tau(xi,.)", &tau_xi)));
    out.push(ctx.identity(
        "lemma31.f3",
        "tau(X,Y) = tau(Y,X)",
        m("tau - tau^T", &tau.sub(&tau.transpose())),
    ));
    let f4 = (tau * phi).sub(&(&phi_t * tau));
    out.push(ctx.identity(
        "lemma31.f4",
        "tau(X,phi Y) = tau(phi X,Y)",
        m("tau phi - phi^T tau", &f4),
    ));
    let f5 = (&(&phi_t * tau) * phi).sub(tau);
    out.push(ctx.identity(
        "lemma31.f5",
        "tau(phi X,phi Y) = tau(X,Y)",
        m("phi^T tau phi - tau", &f5),
    ));

    // tr h² = ¼|£_ξ φ|² = -¼|£_ξ g|², with |£_ξ g|² = 2c²
    let quarter = Scalar::from_ratio(1, 4);
    let lie_phi = lie_xi_phi(spec);
    let mut chain = Residuals::new();
    chain.push(
        "tr h^2 - |L_xi phi|^2/4",
        &pack.trh2 - &(&operator_norm2(&lie_phi, g, spec.metric_inverse()) * &quarter),
    );
    chain.push("tr h^2 + |L_xi g|^2/4", &pack.trh2 + &(&(&pack.c2 * &two) * &quarter));
    out.push(ctx.identity("eq23.trh2_chain", "tr h^2 = |L_xi phi|^2/4 = -|L_xi g|^2/4", chain));

    out
}
