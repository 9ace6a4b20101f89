//! Marginal data of the individual algebras: moment sequences and the
//! finite tridiagonal GNS models built from them.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{parse_rational, Ring, Scalar};
use crate::states::symbolic::MomentPoly;
use crate::states::word::AlgebraIndex;
use crate::Rational;
use num_traits::One;

/// Source of marginal moments `φ_i(a_i^k)`.
pub trait Marginals<R: Ring>: Sync {
    fn moment(&self, index: AlgebraIndex, k: usize) -> Result<R>;

    /// `φ_i(p(a_i))`.
    fn expectation(&self, index: AlgebraIndex, p: &Polynomial<R>) -> Result<R> {
        let mut acc = R::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if *c != R::zero() {
                acc = acc + c.clone() * self.moment(index, k)?;
            }
        }
        Ok(acc)
    }
}

/// Moments as formal variables, so evaluated words become moment polynomials.
#[derive(Debug, Clone, Copy, Default)]
pub struct SymbolicMarginals;

impl Marginals<MomentPoly> for SymbolicMarginals {
    fn moment(&self, index: AlgebraIndex, k: usize) -> Result<MomentPoly> {
        Ok(MomentPoly::var(index, k as u32))
    }
}

/// One algebra: its index, moment sequence `μ_0 = 1, μ_1, ..` and the
/// requested dimension of its GNS model.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec<S> {
    pub index: AlgebraIndex,
    pub moments: Vec<S>,
    pub dim: usize,
}

impl<S: Scalar> AlgebraSpec<S> {
    pub fn new(index: AlgebraIndex, moments: Vec<S>, dim: usize) -> Result<Self> {
        if moments.first() != Some(&S::one()) {
            return Err(Error::InvalidArgument(format!("algebra {index}: μ_0 must be 1")));
        }
        if dim == 0 {
            return Err(Error::InvalidArgument(format!("algebra {index}: dimension must be positive")));
        }
        Ok(AlgebraSpec { index, moments, dim })
    }

    /// Moments of the discrete measure `Σ w_j δ_{x_j}`, orders `0..=max_order`,
    /// with a GNS model of dimension equal to the number of atoms.
    pub fn discrete(index: AlgebraIndex, atoms: &[(S, S)], max_order: usize) -> Result<Self> {
        let moments = (0..=max_order)
            .map(|k| {
                atoms.iter().fold(S::zero(), |acc, (x, w)| {
                    acc + w.clone() * num_traits::pow(x.clone(), k)
                })
            })
            .collect();
        Self::new(index, moments, atoms.len())
    }

    pub fn model(&self) -> Result<GnsModel<S>> {
        GnsModel::from_moments(self.index, &self.moments, self.dim)
    }
}

/// Registry of algebras keyed by index.
#[derive(Debug, Clone, Default)]
pub struct Registry<S> {
    specs: BTreeMap<AlgebraIndex, AlgebraSpec<S>>,
}

impl<S: Scalar> Registry<S> {
    pub fn new(specs: Vec<AlgebraSpec<S>>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for spec in specs {
            let index = spec.index;
            if map.insert(index, spec).is_some() {
                return Err(Error::InvalidArgument(format!("algebra {index} registered twice")));
            }
        }
        Ok(Registry { specs: map })
    }

    pub fn get(&self, index: AlgebraIndex) -> Result<&AlgebraSpec<S>> {
        self.specs.get(&index).ok_or(Error::UnknownAlgebra(index))
    }

    pub fn specs(&self) -> impl Iterator<Item = &AlgebraSpec<S>> {
        self.specs.values()
    }

    pub fn indices(&self) -> Vec<AlgebraIndex> {
        self.specs.keys().copied().collect()
    }
}

impl<S: Scalar> Marginals<S> for Registry<S> {
    fn moment(&self, index: AlgebraIndex, k: usize) -> Result<S> {
        let spec = self.get(index)?;
        spec.moments.get(k).cloned().ok_or(Error::MomentsExhausted {
            index,
            needed: k,
            available: spec.moments.len().saturating_sub(1),
        })
    }
}

#[derive(Deserialize)]
struct RawSpec {
    index: AlgebraIndex,
    moments: Vec<serde_json::Value>,
    dim: usize,
}

impl Registry<Rational> {
    /// Parses `[{"index": 1, "moments": [1, 0, "1/2"], "dim": 2}, ..]`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<RawSpec> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let specs = raw
            .into_iter()
            .map(|r| {
                let moments = r
                    .moments
                    .iter()
                    .map(|v| {
                        let text = match v {
                            serde_json::Value::String(s) => s.clone(),
                            serde_json::Value::Number(n) => n.to_string(),
                            other => return Err(Error::Parse(format!("bad moment {other}"))),
                        };
                        parse_rational(&text).ok_or_else(|| Error::Parse(format!("bad moment `{text}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                AlgebraSpec::new(r.index, moments, r.dim)
            })
            .collect::<Result<Vec<_>>>()?;
        Registry::new(specs)
    }
}

/// Finite model of one algebra: multiplication by the generator in the monic
/// orthogonal basis `p_0 = 1, p_1, ..` of the marginal, with `ξ = p_0`.
/// `x p_k = p_{k+1} + α_k p_k + β_k p_{k−1}`; the basis is orthogonal but not
/// normalized, which is all vacuum expectations need.
#[derive(Debug, Clone, PartialEq)]
pub struct GnsModel<S> {
    alphas: Vec<S>,
    /// `betas[k]` for `k ≥ 1`; `betas[0]` is unused and zero.
    betas: Vec<S>,
}

impl<S: Scalar> GnsModel<S> {
    /// Builds the model from moments by the Stieltjes recursion. Stops early
    /// when `⟨p_k, p_k⟩` vanishes (finitely supported marginal); fails if it is
    /// negative or if moments up to order `2·dim − 1` are missing.
    pub fn from_moments(index: AlgebraIndex, moments: &[S], dim: usize) -> Result<Self> {
        let functional = |p: &Polynomial<S>| -> Result<S> {
            let mut acc = S::zero();
            for (k, c) in p.coeffs().iter().enumerate() {
                let mu = moments.get(k).ok_or(Error::MomentsExhausted {
                    index,
                    needed: k,
                    available: moments.len().saturating_sub(1),
                })?;
                acc = acc + c.clone() * mu.clone();
            }
            Ok(acc)
        };
        let x = Polynomial::<S>::x();
        let mut alphas = Vec::new();
        let mut betas = vec![S::zero()];
        let mut prev = Polynomial::<S>::zero();
        let mut cur = Polynomial::<S>::one();
        let mut prev_norm = S::one();
        for k in 0..dim {
            let norm = functional(&(&cur * &cur))?;
            if norm.is_zero() {
                break;
            }
            if norm.is_negative() {
                return Err(Error::NotPositive(format!(
                    "algebra {index}: Hankel determinant of order {} is negative",
                    k + 1
                )));
            }
            if k > 0 {
                betas.push(norm.clone() / prev_norm.clone());
            }
            let alpha = functional(&(&(&x * &cur) * &cur))? / norm.clone();
            alphas.push(alpha.clone());
            let next = &(&(&x - &Polynomial::constant(alpha)) * &cur)
                - &prev.scale(betas.last().unwrap());
            prev = cur;
            cur = next;
            prev_norm = norm;
        }
        betas.truncate(alphas.len());
        Ok(GnsModel { alphas, betas })
    }

    pub fn dim(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[S] {
        &self.alphas
    }

    pub fn betas(&self) -> &[S] {
        &self.betas
    }

    /// Dense `dim × dim` matrix of `p(x)` acting on the basis (column `k` is `p(x) p_k`).
    pub fn operator(&self, p: &Polynomial<S>) -> Vec<Vec<S>> {
        let d = self.dim();
        let mut result = vec![vec![S::zero(); d]; d];
        // Horner: result = result * J + c.
        for c in p.coeffs().iter().rev() {
            let mut next = vec![vec![S::zero(); d]; d];
            for col in 0..d {
                // J[col+1][col] = 1, J[col][col] = α_col, J[col−1][col] = β_col
                for row in 0..d {
                    let mut acc = result[row][col].clone() * self.alphas[col].clone();
                    if col + 1 < d {
                        acc = acc + result[row][col + 1].clone();
                    }
                    if col >= 1 {
                        acc = acc + result[row][col - 1].clone() * self.betas[col].clone();
                    }
                    next[row][col] = acc;
                }
            }
            for (k, row) in next.iter_mut().enumerate() {
                row[k] = row[k].clone() + c.clone();
            }
            result = next;
        }
        result
    }

    /// `⟨p(x) ξ, ξ⟩`, which reproduces the marginal moment when the model is exact.
    pub fn vacuum_expectation(&self, p: &Polynomial<S>) -> S {
        self.operator(p)[0][0].clone()
    }
}
