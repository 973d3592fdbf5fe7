//! η-Einstein and k-nullity fits.

use crate::check::{Residual, Residuals, Truth};
use crate::geometry::GeometryPack;
use crate::scalar::{LinearSolution, Matrix, Scalar};

/// `Q = a id + b η⊗ξ`.
#[derive(Clone, Debug)]
pub struct EtaEinsteinFit {
    pub a: Scalar,
    pub b: Scalar,
    /// True when the fit exists identically; conditional when it exists
    /// only on a parameter subvariety.
    pub truth: Truth,
    /// Nonzero components of `Q - a id - b η⊗ξ`.
    pub residual: Vec<Residual>,
}

impl EtaEinsteinFit {
    pub fn success(&self) -> bool {
        self.truth.is_true()
    }

    pub fn residuals(&self) -> Residuals {
        let mut r = Residuals::new();
        for c in &self.residual {
            r.push(c.component.clone(), c.value.clone());
        }
        r
    }
}

/// `R(X,Y)ξ = k(η(Y)X - η(X)Y)`.
#[derive(Clone, Debug)]
pub struct NullityFit {
    pub k: Scalar,
    pub truth: Truth,
    pub residual: Vec<Residual>,
}

impl NullityFit {
    pub fn success(&self) -> bool {
        self.truth.is_true()
    }

    pub fn residuals(&self) -> Residuals {
        let mut r = Residuals::new();
        for c in &self.residual {
            r.push(c.component.clone(), c.value.clone());
        }
        r
    }
}

/// Truth of a linear fit: an inconsistent system yields its witness
/// components as constraints.
fn fit_truth(sol: &LinearSolution, has_params: bool) -> Truth {
    match sol {
        LinearSolution::Unique(_) => Truth::True,
        LinearSolution::NoSolution { witness } => {
            let mut r = Residuals::new();
            for (i, w) in witness.iter().enumerate() {
                r.push(format!("witness[{}]", i + 1), w.clone());
            }
            r.truth(has_params)
        }
        LinearSolution::Underdetermined { .. } => Truth::False,
    }
}

pub fn eta_einstein_fit(pack: &GeometryPack) -> EtaEinsteinFit {
    let spec = pack.spec();
    let d = spec.dim();
    let xi = spec.xi();
    let eta = spec.eta();
    let mut rows = Vec::with_capacity(d * d);
    let mut rhs = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let delta = if i == j { Scalar::one() } else { Scalar::zero() };
            rows.push(vec![delta, &xi[i] * &eta[j]]);
            rhs.push(pack.q[(i, j)].clone());
        }
    }
    let system = Matrix::from_rows(rows).expect("rectangular system");
    let sol = system.linear_solve(&rhs);
    let (a, b) = match &sol {
        LinearSolution::Unique(x) => (x[0].clone(), x[1].clone()),
        _ => {
            // the only candidates: tr Q = d a + b and η(Qξ) = a + b
            let eta_q_xi = spec.eta_of(&pack.q.mul_vec(&xi));
            let a = &(&pack.scal - &eta_q_xi) / &Scalar::from_int((d - 1) as i64);
            let b = &eta_q_xi - &a;
            (a, b)
        }
    };
    let fitted = Matrix::from_fn(d, d, |i, j| {
        let mut v = &xi[i] * &eta[j] * &b;
        if i == j {
            v = &v + &a;
        }
        v
    });
    let mut res = Residuals::new();
    res.push_matrix("Q - a id - b eta(x)xi", &pack.q.sub(&fitted));
    EtaEinsteinFit {
        a,
        b,
        truth: fit_truth(&sol, spec.has_params()),
        residual: res.into_vec(),
    }
}

pub fn k_nullity_fit(pack: &GeometryPack) -> NullityFit {
    let spec = pack.spec();
    let d = spec.dim();
    let xi = spec.xi();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let mut pattern = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let ei = spec.basis(i);
            let ej = spec.basis(j);
            let lhs = pack.curvature(&ei, &ej, &xi);
            let (eta_i, eta_j) = (spec.eta_of(&ei), spec.eta_of(&ej));
            for k in 0..d {
                let coeff = &(&eta_j * &ei[k]) - &(&eta_i * &ej[k]);
                rows.push(vec![coeff.clone()]);
                rhs.push(lhs[k].clone());
                pattern.push((i, j, k, coeff, lhs[k].clone()));
            }
        }
    }
    let system = Matrix::from_rows(rows).expect("rectangular system");
    let sol = system.linear_solve(&rhs);
    let k = match &sol {
        LinearSolution::Unique(x) => x[0].clone(),
        // tr l = k (dim - 1) is forced
        _ => &pack.trl / &Scalar::from_int((d - 1) as i64),
    };
    let mut res = Residuals::new();
    for (i, j, c, coeff, lhs) in pattern {
        res.push(
            format!("R(E{},E{})xi - k(...)[{}]", i + 1, j + 1, c + 1),
            &lhs - &(&coeff * &k),
        );
    }
    NullityFit {
        k,
        truth: fit_truth(&sol, spec.has_params()),
        residual: res.into_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example_fits() {
        let pack = GeometryPack::compute(&fixtures::f1_with_metric(&[1, -1, 1]));
        let fit = eta_einstein_fit(&pack);
        assert!(fit.success());
        assert_eq!(
            (fit.a.clone(), fit.b.clone()),
            (Scalar::from_int(2), Scalar::from_int(-4))
        );
        assert_eq!(&fit.a + &fit.b, pack.trl);
        let k = k_nullity_fit(&pack);
        assert!(k.success());
        assert_eq!(k.k, Scalar::from_int(-1));
    }

    #[test]
    fn witness_fits_fail() {
        let pack = GeometryPack::compute(&fixtures::f2_star());
        let fit = eta_einstein_fit(&pack);
        assert!(fit.truth.is_false());
        assert!(!fit.residual.is_empty());
        assert!(k_nullity_fit(&pack).truth.is_false());
    }

    #[test]
    fn abelian_nullity_is_zero() {
        let k = k_nullity_fit(&GeometryPack::compute(&fixtures::abelian()));
        assert!(k.success());
        assert!(k.k.is_zero());
    }

    #[test]
    fn family_fit_is_symbolic() {
        // Q = diag(2β+2, 2β+2, -2): the fit exists for every β
        let pack = GeometryPack::compute(&fixtures::f1_minus2());
        let fit = eta_einstein_fit(&pack);
        assert!(fit.success());
        assert_eq!(fit.a.to_string(), "2*beta + 2");
        assert_eq!(fit.b.to_string(), "-2*beta - 4");
        assert_eq!(&fit.a + &fit.b, pack.trl);
    }

    #[test]
    fn witness_family_fit_is_conditional() {
        let pack = GeometryPack::compute(&fixtures::f2_symbolic());
        match eta_einstein_fit(&pack).truth {
            Truth::Conditional(c) => assert!(!c.is_empty()),
            other => panic!("expected conditional, got {other:?}"),
        }
    }
}
