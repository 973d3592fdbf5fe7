use crate::check::{CheckResult, Residuals, Truth};
use crate::geometry::{metric_compat_residual, torsion_residual, GeometryPack};
use crate::model::{AlgebraSpec, Tensor};

/// Pair symmetries and the first Bianchi identity of a lowered curvature
/// tensor `t[i][j][k][l] = R(E_i,E_j,E_k,E_l)`.
pub fn curvature_symmetry_checks(t: &Tensor, has_params: bool) -> Vec<CheckResult> {
    let d = t.dim();
    let mut sym = Residuals::new();
    let mut first = Residuals::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let r = t.get(&[i, j, k, l]);
                    let ix = format!("{},{},{},{}", i + 1, j + 1, k + 1, l + 1);
                    sym.push(format!("R_ijkl + R_jikl [{ix}]"), r + t.get(&[j, i, k, l]));
                    sym.push(format!("R_ijkl + R_ijlk [{ix}]"), r + t.get(&[i, j, l, k]));
                    sym.push(format!("R_ijkl - R_klij [{ix}]"), r - t.get(&[k, l, i, j]));
                    let cyc = &(r + t.get(&[j, k, i, l])) + t.get(&[k, i, j, l]);
                    first.push(format!("cyclic [{ix}]"), cyc);
                }
            }
        }
    }
    vec![
        CheckResult::from_residuals(
            "bianchi.symmetries",
            "R(X,Y,Z,W) = -R(Y,X,Z,W) = -R(X,Y,W,Z) = R(Z,W,X,Y)",
            sym,
            has_params,
        ),
        CheckResult::from_residuals("bianchi.first", "R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0", first, has_params),
    ]
}

/// Curvature symmetries, both Bianchi identities and the consequence
/// `(∇_X R)(Y,ξ)Z = (∇_Y R)(X,ξ)Z` of `∇_ξ R = 0`.
pub fn bianchi_oracle(pack: &GeometryPack) -> Vec<CheckResult> {
    let spec = pack.spec();
    let hp = spec.has_params();
    let d = spec.dim();
    let xi = spec.xi();
    let nr = &pack.nabla_r;
    let mut out = curvature_symmetry_checks(&pack.riemann_lowered, hp);

    let mut second = Residuals::new();
    for m in 0..d {
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let s = &(nr.get(&[m, i, j, k, l]) + nr.get(&[i, j, m, k, l])) + nr.get(&[j, m, i, k, l]);
                        second.push(format!("[{},{},{},{},{}]", m + 1, i + 1, j + 1, k + 1, l + 1), s);
                    }
                }
            }
        }
    }
    out.push(CheckResult::from_residuals(
        "bianchi.second",
        "(nabla_X R)(Y,Z) + (nabla_Y R)(Z,X) + (nabla_Z R)(X,Y) = 0",
        second,
        hp,
    ));

    // contractions with ξ
    let mut nabla_xi_r = Residuals::new();
    let mut swap = Residuals::new();
    for a in 0..d {
        for b in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let along: crate::scalar::Scalar = (0..d)
                        .filter(|&m| !xi[m].is_zero())
                        .map(|m| &xi[m] * nr.get(&[m, a, b, k, l]))
                        .sum();
                    nabla_xi_r.push(format!("[{},{},{},{}]", a + 1, b + 1, k + 1, l + 1), along);
                    let diff: crate::scalar::Scalar = (0..d)
                        .filter(|&m| !xi[m].is_zero())
                        .map(|m| &xi[m] * &(nr.get(&[a, b, m, k, l]) - nr.get(&[b, a, m, k, l])))
                        .sum();
                    swap.push(format!("X=E{}, Y=E{}, Z=E{}, W=E{}", a + 1, b + 1, k + 1, l + 1), diff);
                }
            }
        }
    }
    let premise: Truth = nabla_xi_r.truth(hp);
    out.push(CheckResult::implication(
        "bianchi.eq18",
        "nabla_xi R = 0 implies (nabla_X R)(Y,xi)Z = (nabla_Y R)(X,xi)Z",
        &premise,
        swap,
        hp,
    ));
    out
}

/// Torsion-freeness and metric compatibility of the computed connection.
pub fn engine_checks(pack: &GeometryPack) -> Vec<CheckResult> {
    let spec = pack.spec();
    let hp = spec.has_params();
    let mut t = Residuals::new();
    t.push_tensor("T", &torsion_residual(spec, &pack.gamma));
    let mut m = Residuals::new();
    m.push_tensor("nabla g", &metric_compat_residual(spec, &pack.gamma));
    vec![
        CheckResult::from_residuals("engine.torsion_free", "nabla_X Y - nabla_Y X = [X,Y]", t, hp),
        CheckResult::from_residuals("engine.metric_compat", "nabla g = 0", m, hp),
    ]
}

/// Outcome of flipping the sign of each nonzero Christoffel symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationReport {
    pub mutated: usize,
    pub detected: usize,
    /// Indices `[k, i, j]` whose mutation went unnoticed.
    pub undetected: Vec<Vec<usize>>,
}

/// Flips each nonzero `Γ^k_{ij}` in turn and records whether the torsion or
/// metric-compatibility residual notices.
pub fn mutation_sensitivity(spec: &AlgebraSpec, gamma: &Tensor) -> MutationReport {
    let mut report = MutationReport {
        mutated: 0,
        detected: 0,
        undetected: Vec::new(),
    };
    for (idx, v) in gamma.nonzero() {
        let mut g = gamma.clone();
        g.set(&idx, -v);
        report.mutated += 1;
        if torsion_residual(spec, &g).is_zero() && metric_compat_residual(spec, &g).is_zero() {
            report.undetected.push(idx);
        } else {
            report.detected += 1;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Verdict;
    use crate::fixtures;
    use crate::scalar::{Rational, Scalar};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn all_hold(rs: &[CheckResult]) {
        for r in rs {
            assert_eq!(r.verdict, Verdict::Holds, "{}: {:?}", r.id, r.residual);
        }
    }

    #[test]
    fn universal_identities_on_fixtures() {
        for spec in [
            fixtures::f1_at(q(-2), q(0)),
            fixtures::f2_star(),
            fixtures::abelian(),
            fixtures::f1_minus2(),
        ] {
            let pack = GeometryPack::compute(&spec);
            all_hold(&bianchi_oracle(&pack));
            all_hold(&engine_checks(&pack));
        }
    }

    #[test]
    fn corrupted_curvature_is_caught() {
        let pack = GeometryPack::compute(&fixtures::f2_star());
        let mut t = pack.riemann_lowered.clone();
        let (idx, v) = t.nonzero().into_iter().next().unwrap();
        t.set(&idx, &v + &Scalar::one());
        let rs = curvature_symmetry_checks(&t, false);
        assert!(rs.iter().any(|r| r.verdict == Verdict::Fails));
    }

    #[test]
    fn every_gamma_flip_is_detected() {
        for spec in [fixtures::f2_star(), fixtures::f1_at(q(-2), q(3))] {
            let pack = GeometryPack::compute(&spec);
            let rep = mutation_sensitivity(&spec, &pack.gamma);
            assert!(rep.mutated > 0);
            assert!(rep.undetected.is_empty(), "{:?}", rep.undetected);
        }
    }
}
