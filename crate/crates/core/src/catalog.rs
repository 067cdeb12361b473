//! Worked examples with their expected structural data.

use crate::error::{CrError, Result};
use crate::exact::{ExactMatrix, Qi, Subspace};
use crate::lie::{make_subalgebra, AmbientAlgebra, Closure, Subalgebra};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub const ENTRY_NAMES: [&str; 6] = [
    "su22_f12",
    "su23_f13",
    "su23_f12",
    "grassmann_pair",
    "so_n_symmetric",
    "upper_triangular_horocycle",
];

/// Parameters of the Grassmannian pair family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannParams {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub k: usize,
}

impl GrassmannParams {
    pub fn new(p: usize, q: usize, n: usize, k: usize) -> Result<Self> {
        let lo = (p + q).saturating_sub(n + 1);
        if !(1 <= p && p < q && q <= n && lo <= k && k <= p) {
            return Err(CrError::InvalidParameters(format!(
                "need 1 <= p < q <= n and max(0, p+q-n-1) <= k <= p, got p={p} q={q} n={n} k={k}"
            )));
        }
        Ok(GrassmannParams { p, q, n, k })
    }

    /// Block sizes `(n1, n2, n3, n4)`.
    pub fn blocks(&self) -> [usize; 4] {
        let GrassmannParams { p, q, n, k } = *self;
        [p - k, k, n + 1 + k - p - q, q - k]
    }

    /// All admissible parameters with `n + 1 <= max_size`.
    pub fn admissible(max_size: usize) -> Vec<GrassmannParams> {
        let mut out = Vec::new();
        for n in 2..max_size {
            for q in 2..=n {
                for p in 1..q {
                    for k in (p + q).saturating_sub(n + 1)..=p {
                        out.push(GrassmannParams { p, q, n, k });
                    }
                }
            }
        }
        out
    }
}

/// Structural values recorded for an entry. `None` means not pinned.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub n_reductive: Option<bool>,
    pub strict_hnr: Option<bool>,
    pub hnr: Option<bool>,
    pub nu: Option<usize>,
    pub d: Option<usize>,
    pub witt_index: Option<usize>,
    pub f0_dim: Option<usize>,
    pub w_dim: Option<usize>,
    pub q_max_dim: Option<usize>,
    pub q_max_nilradical_dim: Option<usize>,
    /// `dim_C M_-` as stated for the entry, when stated.
    pub dim_m_minus: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Option<GrassmannParams>,
    pub ambient: Arc<AmbientAlgebra>,
    pub generators: Vec<ExactMatrix>,
    pub expected: Expected,
}

impl CatalogEntry {
    pub fn subalgebra(&self) -> Result<Subalgebra> {
        make_subalgebra(&self.ambient, &self.generators, Closure::RequireClosed)
    }

    /// Display label including parameters.
    pub fn label(&self) -> String {
        match self.params {
            Some(g) => format!("{}({},{},{},{})", self.name, g.p, g.q, g.n, g.k),
            None => self.name.clone(),
        }
    }
}

pub fn list() -> Vec<&'static str> {
    ENTRY_NAMES.to_vec()
}

/// Loads an entry from its display label, e.g. `grassmann_pair(1,2,3,1)`.
pub fn load_label(label: &str) -> Result<CatalogEntry> {
    let Some((name, rest)) = label.split_once('(') else {
        return load(label, None);
    };
    let nums: Vec<usize> = rest
        .trim_end_matches(')')
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| CrError::InvalidParameters(label.to_string()))?;
    let [p, q, n, k] = nums[..] else {
        return Err(CrError::InvalidParameters(label.to_string()));
    };
    load(name, Some(GrassmannParams::new(p, q, n, k)?))
}

fn e(n: usize, i: usize, j: usize) -> ExactMatrix {
    ExactMatrix::unit(n, i, j)
}

fn diag(d: &[i64]) -> ExactMatrix {
    ExactMatrix::diag(&d.iter().map(|&x| Qi::from_int(x)).collect::<Vec<_>>())
}

/// Loads an entry. `grassmann_pair` needs `params`; `upper_triangular_horocycle`
/// reads its size from `params.n + 1` when given and defaults to 3.
pub fn load(name: &str, params: Option<GrassmannParams>) -> Result<CatalogEntry> {
    let entry = |ambient: AmbientAlgebra, generators: Vec<ExactMatrix>, expected: Expected| CatalogEntry {
        name: name.to_string(),
        params: None,
        ambient: Arc::new(ambient),
        generators,
        expected,
    };
    match name {
        "su22_f12" => Ok(entry(
            AmbientAlgebra::blocks(&[2, 2])?,
            vec![diag(&[1, -1, 1, -1]), e(4, 0, 1).add(&e(4, 2, 3))],
            Expected {
                n_reductive: Some(true),
                strict_hnr: Some(false),
                hnr: Some(true),
                nu: Some(1),
                d: Some(4),
                witt_index: Some(0),
                f0_dim: Some(4),
                w_dim: Some(3),
                ..Default::default()
            },
        )),
        "su23_f13" => Ok(entry(
            AmbientAlgebra::blocks(&[2, 3])?,
            vec![diag(&[1, 0, 1, -2, 0]), diag(&[0, 1, 0, -2, 1]), e(5, 0, 1).add(&e(5, 2, 4)), e(5, 3, 4)],
            Expected {
                n_reductive: Some(true),
                strict_hnr: Some(false),
                nu: Some(2),
                d: Some(6),
                q_max_dim: Some(9),
                q_max_nilradical_dim: Some(3),
                ..Default::default()
            },
        )),
        "su23_f12" => Ok(entry(
            AmbientAlgebra::blocks(&[2, 3])?,
            vec![
                diag(&[1, 0, 1, 0, -2]),
                diag(&[0, 1, 0, 1, -2]),
                e(5, 0, 1).add(&e(5, 2, 3)),
                e(5, 2, 4),
                e(5, 3, 4),
            ],
            Expected {
                n_reductive: Some(true),
                strict_hnr: Some(false),
                hnr: Some(true),
                nu: Some(3),
                d: Some(4),
                f0_dim: Some(4),
                w_dim: Some(6),
                q_max_nilradical_dim: Some(4),
                ..Default::default()
            },
        )),
        "so_n_symmetric" => {
            let k = AmbientAlgebra::sl(3);
            let mut s = ExactMatrix::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]);
            s.set(0, 1, Qi::i());
            s.set(1, 0, Qi::i());
            let so = k.space().kernel_of(|x| x.transpose().mul(&s).add(&s.mul(x)).into_flat());
            Ok(entry(k, so.basis(), Expected { n_reductive: Some(false), ..Default::default() }))
        }
        "upper_triangular_horocycle" => {
            let n = params.map_or(3, |p| p.n + 1);
            let gens = (0..n).flat_map(|i| (i + 1..n).map(move |j| e(n, i, j))).collect();
            let nu = n * (n - 1) / 2;
            Ok(entry(
                AmbientAlgebra::sl(n),
                gens,
                Expected {
                    n_reductive: Some(true),
                    strict_hnr: Some(true),
                    hnr: Some(true),
                    nu: Some(nu),
                    d: Some(n - 1),
                    f0_dim: Some(n - 1),
                    ..Default::default()
                },
            ))
        }
        "grassmann_pair" => {
            let g = params.ok_or_else(|| CrError::InvalidParameters("grassmann_pair needs p, q, n, k".into()))?;
            let g = GrassmannParams::new(g.p, g.q, g.n, g.k)?;
            let mut out = grassmann_pair(g);
            out.name = name.to_string();
            Ok(out)
        }
        other => Err(CrError::UnknownEntry(other.to_string())),
    }
}

fn grassmann_pair(g: GrassmannParams) -> CatalogEntry {
    let sizes = g.blocks();
    let [n1, n2, n3, n4] = sizes;
    let size = g.n + 1;
    let mut block_of = Vec::with_capacity(size);
    for (b, &s) in sizes.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(b + 1, s));
    }
    const ZERO: [(usize, usize); 7] = [(2, 1), (3, 1), (4, 1), (3, 2), (4, 2), (2, 3), (4, 3)];
    let mut gens = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if i != j && !ZERO.contains(&(block_of[i], block_of[j])) {
                gens.push(e(size, i, j));
            }
        }
    }
    for i in 0..size - 1 {
        let mut h = e(size, i, i);
        h.set(i + 1, i + 1, Qi::from_int(-1));
        gens.push(h);
    }
    let nu = n1 * n2 + n1 * n3 + n1 * n4 + n2 * n4 + n3 * n4;
    let d = 2 * n2 * n3;
    CatalogEntry {
        name: "grassmann_pair".into(),
        params: Some(g),
        ambient: Arc::new(AmbientAlgebra::sl(size)),
        generators: gens,
        expected: Expected {
            n_reductive: Some(true),
            strict_hnr: Some(true),
            hnr: Some(true),
            nu: Some(nu),
            d: Some(d),
            witt_index: (d > 0).then_some(g.p + g.q - 2 * g.k),
            f0_dim: Some(d),
            dim_m_minus: Some(nu + n2 * n3),
            ..Default::default()
        },
    }
}

/// The span of the generators, as a convenience for callers holding only the space.
pub fn span(entry: &CatalogEntry) -> Subspace {
    Subspace::from_matrices(entry.ambient.n(), &entry.generators)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_parameter_count() {
        let all = GrassmannParams::admissible(6);
        assert_eq!(all.len(), 44);
        assert!(all.iter().all(|g| GrassmannParams::new(g.p, g.q, g.n, g.k).is_ok()));
        assert!(GrassmannParams::new(2, 2, 3, 1).is_err());
    }

    #[test]
    fn every_entry_is_a_subalgebra() {
        for name in ENTRY_NAMES {
            let params = (name == "grassmann_pair").then(|| GrassmannParams::new(1, 2, 3, 1).unwrap());
            let entry = load(name, params).unwrap();
            entry.subalgebra().unwrap();
        }
    }
}
