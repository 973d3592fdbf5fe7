//! A separate `f64` pipeline. It shares no tensor code with the exact engine:
//! the connection is built from adjoint matrices as
//! `Γ_i = ½ g⁻¹ (g ad_i - ad_iᵀ g - B_i)` and curvature as
//! `R(E_i,E_j) = [Γ_i, Γ_j] - c^m_{ij} Γ_m`.

use num_traits::ToPrimitive;

use super::OracleError;
use crate::model::AlgebraSpec;
use crate::scalar::Scalar;

type M = Vec<Vec<f64>>;

fn zeros(d: usize) -> M {
    vec![vec![0.0; d]; d]
}

fn mul(a: &M, b: &M) -> M {
    let d = a.len();
    let mut c = zeros(d);
    for i in 0..d {
        for k in 0..d {
            for j in 0..d {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

fn transpose(a: &M) -> M {
    let d = a.len();
    (0..d).map(|i| (0..d).map(|j| a[j][i]).collect()).collect()
}

fn lin(a: &M, sa: f64, b: &M, sb: f64) -> M {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| sa * x + sb * y).collect())
        .collect()
}

/// Gauss-Jordan with partial pivoting.
fn invert(a: &M) -> M {
    let d = a.len();
    let mut w: M = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..d).map(|j| if i == j { 1.0 } else { 0.0 }));
            row
        })
        .collect();
    for c in 0..d {
        let p = (c..d).max_by(|&x, &y| w[x][c].abs().total_cmp(&w[y][c].abs())).unwrap();
        w.swap(c, p);
        let piv = w[c][c];
        for x in w[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..d {
            if r != c {
                let f = w[r][c];
                if f != 0.0 {
                    for k in 0..2 * d {
                        w[r][k] -= f * w[c][k];
                    }
                }
            }
        }
    }
    w.into_iter().map(|r| r[d..].to_vec()).collect()
}

fn to_f64(s: &Scalar) -> f64 {
    s.as_rational().and_then(|r| r.to_f64()).expect("parameter-free scalar")
}

/// Values recomputed in floating point, and the largest deviation from the
/// exact engine over `Γ`, `R`, `Ric`, `scal` and `trl`.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatReport {
    pub max_deviation: f64,
    pub scal: f64,
    pub trl: f64,
}

pub fn float_crosscheck(spec: &AlgebraSpec) -> Result<FloatReport, OracleError> {
    if spec.has_params() {
        return Err(OracleError::Parameterized(spec.params().names().join(", ")));
    }
    let d = spec.dim();
    let c = |k: usize, i: usize, j: usize| to_f64(spec.c(k, i, j));
    let g: M = (0..d)
        .map(|i| (0..d).map(|j| to_f64(&spec.metric()[(i, j)])).collect())
        .collect();
    let gi = invert(&g);
    let xi: Vec<f64> = spec.xi_rational().iter().map(|r| r.to_f64().unwrap()).collect();

    let ad: Vec<M> = (0..d)
        .map(|i| (0..d).map(|k| (0..d).map(|j| c(k, i, j)).collect()).collect())
        .collect();
    let conn: Vec<M> = (0..d)
        .map(|i| {
            // B_i[b][a] = Σ_m c^m_{ab} g_{mi}
            let b: M = (0..d)
                .map(|bb| (0..d).map(|a| (0..d).map(|m| c(m, a, bb) * g[m][i]).sum()).collect())
                .collect();
            let inner = lin(
                &lin(&mul(&g, &ad[i]), 1.0, &mul(&transpose(&ad[i]), &g), -1.0),
                1.0,
                &b,
                -1.0,
            );
            lin(&mul(&gi, &inner), 0.5, &zeros(d), 0.0)
        })
        .collect();
    let curv = |i: usize, j: usize| -> M {
        let mut r = lin(&mul(&conn[i], &conn[j]), 1.0, &mul(&conn[j], &conn[i]), -1.0);
        for (m, cm) in conn.iter().enumerate() {
            r = lin(&r, 1.0, cm, -c(m, i, j));
        }
        r
    };
    let rs: Vec<Vec<M>> = (0..d).map(|i| (0..d).map(|j| curv(i, j)).collect()).collect();
    let ric: M = (0..d)
        .map(|j| (0..d).map(|k| (0..d).map(|i| rs[i][j][i][k]).sum()).collect())
        .collect();
    let q = mul(&gi, &ric);
    let scal: f64 = (0..d).map(|i| q[i][i]).sum();
    let mut l = zeros(d);
    for a in 0..d {
        for b in 0..d {
            let w = xi[a] * xi[b];
            if w != 0.0 {
                for r in 0..d {
                    for j in 0..d {
                        l[r][j] += w * rs[j][a][r][b];
                    }
                }
            }
        }
    }
    let trl: f64 = (0..d).map(|i| l[i][i]).sum();

    let pack = crate::geometry::GeometryPack::compute(spec);
    let mut dev: f64 = 0.0;
    let mut see = |exact: &Scalar, approx: f64| dev = dev.max((to_f64(exact) - approx).abs());
    for k in 0..d {
        for i in 0..d {
            for j in 0..d {
                see(pack.gamma.get(&[k, i, j]), conn[i][k][j]);
                for l in 0..d {
                    see(pack.riemann.get(&[l, i, j, k]), rs[i][j][l][k]);
                }
            }
            see(&pack.ricci[(k, i)], ric[k][i]);
        }
    }
    see(&pack.scal, scal);
    see(&pack.trl, trl);
    Ok(FloatReport {
        max_deviation: dev,
        scal,
        trl,
    })
}
