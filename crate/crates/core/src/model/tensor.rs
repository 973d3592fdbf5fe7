//! Frame-indexed tensors with per-slot variance.

use crate::scalar::{Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Up,
    Down,
}

/// Components of a tensor in a fixed frame of dimension `dim`, stored
/// row-major over the slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    slots: Vec<Slot>,
    comps: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(dim: usize, slots: Vec<Slot>) -> Self {
        let len = dim.pow(slots.len() as u32);
        Tensor {
            dim,
            slots,
            comps: vec![Scalar::zero(); len],
        }
    }

    pub fn from_fn(dim: usize, slots: Vec<Slot>, mut f: impl FnMut(&[usize]) -> Scalar) -> Self {
        let mut t = Tensor::zeros(dim, slots);
        let mut idx = vec![0; t.slots.len()];
        for flat in 0..t.comps.len() {
            t.unflatten(flat, &mut idx);
            t.comps[flat] = f(&idx);
        }
        t
    }

    /// A `(1,1)` tensor from an operator matrix (`A E_j = A[(i, j)] E_i`).
    pub fn operator(m: &Matrix) -> Self {
        Tensor::from_fn(m.rows(), vec![Slot::Up, Slot::Down], |ix| m[(ix[0], ix[1])].clone())
    }

    /// A `(0,2)` tensor from the Gram matrix of a bilinear form.
    pub fn bilinear(m: &Matrix) -> Self {
        Tensor::from_fn(m.rows(), vec![Slot::Down, Slot::Down], |ix| m[(ix[0], ix[1])].clone())
    }

    /// Matrix view of an order-2 tensor.
    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.order(), 2, "matrix view needs an order-2 tensor");
        Matrix::from_fn(self.dim, self.dim, |i, j| self.get(&[i, j]).clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn order(&self) -> usize {
        self.slots.len()
    }

    pub fn components(&self) -> &[Scalar] {
        &self.comps
    }

    fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.slots.len());
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    fn unflatten(&self, mut flat: usize, out: &mut [usize]) {
        for k in (0..out.len()).rev() {
            out[k] = flat % self.dim;
            flat /= self.dim;
        }
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.comps[self.flatten(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Scalar) {
        let f = self.flatten(idx);
        self.comps[f] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Scalar::is_zero)
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.slots, other.slots, "variance mismatch");
        Tensor {
            dim: self.dim,
            slots: self.slots.clone(),
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.slots, other.slots, "variance mismatch");
        Tensor {
            dim: self.dim,
            slots: self.slots.clone(),
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        Tensor {
            dim: self.dim,
            slots: self.slots.clone(),
            comps: self.comps.iter().map(|c| c * s).collect(),
        }
    }

    /// Nonzero components with their multi-indices.
    pub fn nonzero(&self) -> Vec<(Vec<usize>, Scalar)> {
        let mut idx = vec![0; self.slots.len()];
        let mut out = Vec::new();
        for (flat, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                self.unflatten(flat, &mut idx);
                out.push((idx.clone(), c.clone()));
            }
        }
        out
    }

    /// Raises (`Down -> Up`) or lowers (`Up -> Down`) the given slot with the
    /// metric `g` and its inverse.
    pub fn reindex(&self, slot: usize, g: &Matrix, g_inv: &Matrix) -> Tensor {
        let (target, m) = match self.slots[slot] {
            Slot::Down => (Slot::Up, g_inv),
            Slot::Up => (Slot::Down, g),
        };
        let mut slots = self.slots.clone();
        slots[slot] = target;
        let d = self.dim;
        Tensor::from_fn(d, slots, |ix| {
            let mut src = ix.to_vec();
            (0..d)
                .filter(|&p| !m[(ix[slot], p)].is_zero())
                .map(|p| {
                    src[slot] = p;
                    &m[(ix[slot], p)] * self.get(&src)
                })
                .sum()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip_and_reindex() {
        let g = Matrix::diag(vec![Scalar::from_int(4), Scalar::from_int(-4), Scalar::from_int(16)]);
        let gi = g.invert_symmetric().unwrap();
        let t = Tensor::from_fn(3, vec![Slot::Up, Slot::Down, Slot::Down], |ix| {
            Scalar::from_int((ix[0] * 9 + ix[1] * 3 + ix[2]) as i64 - 7)
        });
        assert_eq!(t.get(&[2, 1, 0]), &Scalar::from_int(18 + 3 - 7));
        let lowered = t.reindex(0, &g, &gi);
        assert_eq!(lowered.slots()[0], Slot::Down);
        assert_eq!(lowered.reindex(0, &g, &gi), t);
        assert_eq!(t.components().len(), 27);
    }
}
