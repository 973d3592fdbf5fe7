//! Covariant derivatives of frame-constant tensors.

use crate::model::{Slot, Tensor};
use crate::scalar::Scalar;

/// `∇_{E_m} T` for a tensor with constant frame components: each upper slot
/// contributes `+Γ^i_{mp} T^{..p..}`, each lower slot `-Γ^p_{mj} T_{..p..}`.
pub fn covariant_derivative_frame(gamma: &Tensor, t: &Tensor, m: usize) -> Tensor {
    let d = t.dim();
    Tensor::from_fn(d, t.slots().to_vec(), |ix| {
        let mut acc = Scalar::zero();
        let mut src = ix.to_vec();
        for (s, slot) in t.slots().iter().enumerate() {
            let orig = ix[s];
            for p in 0..d {
                src[s] = p;
                let comp = t.get(&src);
                if comp.is_zero() {
                    continue;
                }
                match slot {
                    Slot::Up => {
                        let gm = gamma.get(&[orig, m, p]);
                        if !gm.is_zero() {
                            acc = &acc + &(gm * comp);
                        }
                    }
                    Slot::Down => {
                        let gm = gamma.get(&[p, m, orig]);
                        if !gm.is_zero() {
                            acc = &acc - &(gm * comp);
                        }
                    }
                }
            }
            src[s] = orig;
        }
        acc
    })
}

/// `∇_v T` for a direction `v` given by frame components.
pub fn covariant_derivative(gamma: &Tensor, t: &Tensor, direction: &[Scalar]) -> Tensor {
    let d = t.dim();
    let mut out = Tensor::zeros(d, t.slots().to_vec());
    for (m, coeff) in direction.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        out = out.add(&covariant_derivative_frame(gamma, t, m).scale(coeff));
    }
    out
}

/// Prepends a lower slot `m`: `(∇T)[m][...] = (∇_{E_m} T)[...]`.
pub fn full_covariant_derivative(gamma: &Tensor, t: &Tensor) -> Tensor {
    let d = t.dim();
    let parts: Vec<Tensor> = (0..d).map(|m| covariant_derivative_frame(gamma, t, m)).collect();
    let mut slots = vec![Slot::Down];
    slots.extend_from_slice(t.slots());
    Tensor::from_fn(d, slots, |ix| parts[ix[0]].get(&ix[1..]).clone())
}
