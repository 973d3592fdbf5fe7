//! Properties of `∇_ξ τ` and the equivalence of `∇_ξ h = 0`, `∇_ξ τ = 0`
//! and `lφ = φl`.

use super::conditions::l_phi_residual;
use super::la::{form, horizontal_units, UnitVector};
use super::Ctx;
use crate::check::{CheckResult, Residuals, Truth};
use crate::geometry::{xi_sectional, GeometryPack};
use crate::scalar::{Matrix, Scalar};

fn eps(u: &UnitVector) -> Scalar {
    Scalar::from_int(u.epsilon.into())
}

/// `g(hX, hX)`.
fn h_norm2(pack: &GeometryPack, x: &[Scalar]) -> Scalar {
    let hx = pack.h.mul_vec(x);
    pack.spec().inner(&hx, &hx)
}

fn k_xi(pack: &GeometryPack, x: &[Scalar]) -> Scalar {
    xi_sectional(pack, x).expect("unit horizontal vector").value
}

/// The vector `φX` as a unit vector of opposite sign.
fn phi_unit(pack: &GeometryPack, u: &UnitVector) -> UnitVector {
    UnitVector {
        label: format!("phi {}", u.label),
        v: pack.spec().phi().mul_vec(&u.v),
        epsilon: -u.epsilon,
    }
}

fn matrix_truth(ctx: &Ctx, label: &str, m: &Matrix) -> Truth {
    let mut r = Residuals::new();
    r.push_matrix(label, m);
    ctx.truth(&r)
}

pub fn check_prop32(pack: &GeometryPack) -> Vec<CheckResult> {
    let ctx = Ctx::new(pack);
    let spec = pack.spec();
    let d = spec.dim();
    let g = spec.metric();
    let phi = spec.phi();
    let phi_t = phi.transpose();
    let xi = spec.xi();
    let eta = spec.eta();
    let nt = &pack.nabla_xi_tau;
    let units = horizontal_units(spec);
    let half = Scalar::from_ratio(1, 2);
    let mut out = Vec::new();

    let mut r = Residuals::new();
    r.push_matrix("(nabla_xi tau) - (nabla_xi tau)^T", &nt.sub(&nt.transpose()));
    out.push(ctx.identity("prop32.i", "(nabla_xi tau)(X,Y) = (nabla_xi tau)(Y,X)", r));

    let mut r = Residuals::new();
    r.push_vector("(nabla_xi tau)(xi,.)", &nt.transpose().mul_vec(&xi));
    out.push(ctx.identity("prop32.ii", "(nabla_xi tau)(xi,.) = 0", r).with_note(
        "printed as (nabla_xi tau)(X,.) = 0, which would force nabla_xi tau = 0; its proof uses tau(xi,.) = 0 and nabla_xi xi = 0, so the xi-slot form is checked",
    ));

    let mut r = Residuals::new();
    r.push_matrix(
        "phi^T (nabla_xi tau) phi - nabla_xi tau",
        &(&(&phi_t * nt) * phi).sub(nt),
    );
    out.push(ctx.identity("prop32.iii", "(nabla_xi tau)(phi X,phi Y) = (nabla_xi tau)(X,Y)", r));

    // (iv) K(ξ,X) = -½ε(∇_ξτ)(X,X) - 1 + ε|hX|²
    let iv = "K(xi,X) = -1/2 eps_X (nabla_xi tau)(X,X) - 1 + eps_X |hX|^2";
    if units.is_empty() {
        out.push(CheckResult::not_applicable(
            "prop32.iv",
            iv,
            "no exactly normalizable horizontal frame vector",
        ));
    } else {
        let mut r = Residuals::new();
        let mut notes = Vec::new();
        for u in &units {
            let k = k_xi(pack, &u.v);
            let t1 = -(&(&eps(u) * &form(nt, &u.v, &u.v)) * &half);
            let t2 = &eps(u) * &h_norm2(pack, &u.v);
            notes.push(format!("X={}: {} = {} - 1 + {}", u.label, k, t1, t2));
            let rhs = &(&t1 - &Scalar::one()) + &t2;
            r.push(format!("X={}", u.label), &k - &rhs);
        }
        out.push(ctx.identity("prop32.iv", iv, r).with_note(notes.join("; ")));
    }

    // (v) ∇_ξτ = 0 iff K(ξ,X) - ε_X|hX|² is the same for all unit X
    let v = "nabla_xi tau = 0 iff K(xi,X) - K(xi,Y) = eps_X|hX|^2 - eps_Y|hY|^2 for unit X,Y in D";
    if units.is_empty() {
        out.push(CheckResult::not_applicable(
            "prop32.v",
            v,
            "no exactly normalizable horizontal frame vector",
        ));
    } else {
        let f: Vec<Scalar> = units
            .iter()
            .map(|u| &k_xi(pack, &u.v) - &(&eps(u) * &h_norm2(pack, &u.v)))
            .collect();
        let mut diff = Residuals::new();
        for (u, fu) in units.iter().zip(&f).skip(1) {
            diff.push(format!("X={}, Y={}", units[0].label, u.label), &f[0] - fu);
        }
        out.push(ctx.equivalent(
            "prop32.v",
            v,
            &[
                ("nabla_xi tau = 0", matrix_truth(&ctx, "nabla_xi tau", nt)),
                ("K difference formula", ctx.truth(&diff)),
            ],
        ));
    }

    // (vi), dimension 3: -(∇_ξτ)(X,Y) = Ric(X,Y) + Ric(φX,φY) - η(X)Ric(ξ,Y) - η(Y)Ric(ξ,X) + η(X)η(Y)Ric(ξ,ξ)
    let vi = "-(nabla_xi tau)(X,Y) = Ric(X,Y) + Ric(phi X,phi Y) - eta(X)Ric(xi,Y) - eta(Y)Ric(xi,X) + eta(X)eta(Y)Ric(xi,xi)";
    out.push(ctx.dim3_only("prop32.vi", vi).unwrap_or_else(|| {
        let ric = &pack.ricci;
        let ric_xi = ric.transpose().mul_vec(&xi);
        let ric_xi_xi = form(ric, &xi, &xi);
        let rhs = Matrix::from_fn(d, d, |i, j| {
            let mut v = ric[(i, j)].clone();
            v = &v - &(&eta[i] * &ric_xi[j]);
            v = &v - &(&eta[j] * &ric_xi[i]);
            &v + &(&(&eta[i] * &eta[j]) * &ric_xi_xi)
        })
        .add(&(&(&phi_t * ric) * phi));
        let mut r = Residuals::new();
        r.push_matrix("nabla_xi tau + rhs", &nt.add(&rhs));
        ctx.identity("prop32.vi", vi, r)
    }));

    // (∇_ξτ)(X,Y) = -2g(φX,(∇_ξh)Y)
    let f6 = nt.add(&(&(&phi_t * g) * &pack.nabla_xi_h).scale(&Scalar::from_int(2)));
    let mut r = Residuals::new();
    r.push_matrix("nabla_xi tau + 2 phi^T g nabla_xi h", &f6);
    out.push(ctx.identity("prop32.f6", "(nabla_xi tau)(X,Y) = -2g(phi X,(nabla_xi h)Y)", r));

    // K(ξ,X) - K(ξ,φX) = -ε_X (∇_ξτ)(X,X)
    let f7 = "K(xi,X) - K(xi,phi X) = -eps_X (nabla_xi tau)(X,X)";
    if units.is_empty() {
        out.push(CheckResult::not_applicable(
            "prop32.f7",
            f7,
            "no exactly normalizable horizontal frame vector",
        ));
    } else {
        let mut r = Residuals::new();
        for u in &units {
            let pu = phi_unit(pack, u);
            let lhs = &k_xi(pack, &u.v) - &k_xi(pack, &pu.v);
            let rhs = -(&eps(u) * &form(nt, &u.v, &u.v));
            r.push(format!("X={}", u.label), &lhs - &rhs);
        }
        out.push(ctx.identity("prop32.f7", f7, r));
    }

    // Ric(X,Y) + Ric(φX,φY) = -(∇_ξτ)(X,Y) on D, dimension 3
    let f8 = "Ric(X,Y) + Ric(phi X,phi Y) = -(nabla_xi tau)(X,Y) for X,Y in D";
    out.push(ctx.dim3_only("prop32.f8", f8).unwrap_or_else(|| {
        let proj = phi * phi;
        let inner = pack.ricci.add(&(&(&phi_t * &pack.ricci) * phi)).add(nt);
        let mut r = Residuals::new();
        r.push_matrix("on D", &(&(&proj.transpose() * &inner) * &proj));
        ctx.identity("prop32.f8", f8, r)
    }));

    out
}

pub fn check_prop33(pack: &GeometryPack) -> Vec<CheckResult> {
    let ctx = Ctx::new(pack);
    let nh = &pack.nabla_xi_h;
    let mut out = Vec::new();

    let l_phi = l_phi_residual(pack);
    let mut r = Residuals::new();
    r.push_matrix(
        "2 nabla_xi h - (l phi - phi l)",
        &nh.scale(&Scalar::from_int(2)).sub(&l_phi),
    );
    out.push(ctx.identity("prop33.f9", "2 nabla_xi h = l phi - phi l", r));

    let nh_zero = matrix_truth(&ctx, "nabla_xi h", nh);
    out.push(ctx.equivalent(
        "prop33.equiv",
        "nabla_xi h = 0 iff nabla_xi tau = 0 iff l phi = phi l",
        &[
            ("nabla_xi h = 0", nh_zero.clone()),
            (
                "nabla_xi tau = 0",
                matrix_truth(&ctx, "nabla_xi tau", &pack.nabla_xi_tau),
            ),
            ("l phi = phi l", matrix_truth(&ctx, "l phi - phi l", &l_phi)),
        ],
    ));

    let mut r = Residuals::new();
    r.push_matrix("nabla_xi l", &pack.nabla_xi_l);
    out.push(ctx.under("prop33.nabla_l", "nabla_xi h = 0 implies nabla_xi l = 0", &nh_zero, r));

    let mut r = Residuals::new();
    r.push_matrix("(nabla_xi h)^2", &(nh * nh));
    let nl_zero = matrix_truth(&ctx, "nabla_xi l", &pack.nabla_xi_l);
    out.push(ctx.under(
        "prop33.remark",
        "nabla_xi l = 0 implies (nabla_xi h)^2 = 0",
        &nl_zero,
        r,
    ));

    out
}
