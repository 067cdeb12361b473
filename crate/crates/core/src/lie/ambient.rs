use crate::error::{CrError, Result};
use crate::exact::{ExactMatrix, Qi, RealSubspace, Subspace};
use serde::{Deserialize, Serialize};

/// Shape of the ambient complex algebra `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AmbientKind {
    /// `sl_n(C)`.
    SpecialLinear,
    /// `s(gl_{b1} x ... x gl_{bm})`, block diagonal with one trace condition.
    BlockSpecialLinear(Vec<usize>),
}

/// The complexified Lie algebra `k` of a compact group, with
/// `sigma(X) = -X*` and `beta(X, Y) = tr(XY)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbientAlgebra {
    kind: AmbientKind,
    n: usize,
    block_of: Vec<usize>,
    k: Subspace,
}

impl AmbientAlgebra {
    pub fn sl(n: usize) -> Self {
        Self::build(AmbientKind::SpecialLinear, vec![0; n])
    }

    pub fn blocks(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(CrError::IncompatibleShapes(format!("bad block sizes {sizes:?}")));
        }
        let block_of = sizes.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(b, s)).collect();
        Ok(Self::build(AmbientKind::BlockSpecialLinear(sizes.to_vec()), block_of))
    }

    fn build(kind: AmbientKind, block_of: Vec<usize>) -> Self {
        let n = block_of.len();
        let mut gens = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && block_of[i] == block_of[j] {
                    gens.push(ExactMatrix::unit(n, i, j));
                }
            }
        }
        for i in 0..n.saturating_sub(1) {
            let mut h = ExactMatrix::unit(n, i, i);
            h.set(i + 1, i + 1, Qi::from_int(-1));
            gens.push(h);
        }
        let k = Subspace::from_owned(n, gens);
        AmbientAlgebra { kind, n, block_of, k }
    }

    pub fn kind(&self) -> &AmbientKind {
        &self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.k.dim()
    }

    /// The block index of each coordinate.
    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn block_count(&self) -> usize {
        self.block_of.iter().max().map_or(0, |m| m + 1)
    }

    /// Coordinates belonging to block `b`.
    pub fn block_indices(&self, b: usize) -> Vec<usize> {
        (0..self.n).filter(|&i| self.block_of[i] == b).collect()
    }

    pub fn space(&self) -> &Subspace {
        &self.k
    }

    pub fn contains(&self, x: &ExactMatrix) -> bool {
        if x.n() != self.n || !x.trace().is_zero() {
            return false;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if self.block_of[i] != self.block_of[j] && !x.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The center of `k`: traceless block scalars.
    pub fn center(&self) -> Subspace {
        let m = self.block_count();
        let scalars: Vec<ExactMatrix> = (0..m)
            .map(|b| {
                let d: Vec<Qi> = (0..self.n)
                    .map(|i| if self.block_of[i] == b { Qi::one() } else { Qi::zero() })
                    .collect();
                ExactMatrix::diag(&d)
            })
            .collect();
        let all = Subspace::from_matrices(self.n, &scalars);
        all.kernel_of(|x| vec![x.trace()])
    }

    /// The compact real form `k0` (anti-Hermitian part of `k`).
    pub fn k0(&self) -> RealSubspace {
        self.k.real_form(1)
    }

    /// The Hermitian part `p0 = i k0`.
    pub fn p0(&self) -> RealSubspace {
        self.k.real_form(-1)
    }

    pub fn sigma(&self, x: &ExactMatrix) -> ExactMatrix {
        x.sigma()
    }

    pub fn beta(&self, x: &ExactMatrix, y: &ExactMatrix) -> Qi {
        x.trace_form(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(AmbientAlgebra::sl(4).dim(), 15);
        let k = AmbientAlgebra::blocks(&[2, 3]).unwrap();
        assert_eq!(k.dim(), 12);
        assert_eq!(k.center().dim(), 1);
        assert_eq!(k.k0().dim(), 12);
        assert_eq!(k.p0().dim(), 12);
        assert!(!k.contains(&ExactMatrix::unit(5, 0, 3)));
    }
}
