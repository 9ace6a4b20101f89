//! Finite-dimensional model of the m-monotone product of Hilbert spaces and
//! the truncated free-product representations acting on it.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::level::Level;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::states::algebra::{GnsModel, Registry};
use crate::states::word::{AlgebraIndex, LetterKind, Word};

/// Default bound on the number of basis elements.
pub const DEFAULT_MAX_BASIS: usize = 1_000_000;

/// Matrices up to this dimension are stored densely.
pub const DENSE_LIMIT: usize = 512;

/// Simple tensor `e_{i_1, k_1} ⊗ … ⊗ e_{i_n, k_n}` with excitation labels
/// `k ≥ 1`; the empty tensor is the vacuum.
pub type Tensor = Vec<(AlgebraIndex, usize)>;

/// Whether `(i, i_1, …, i_n)` stays in `I_{n+1}(m)` given `(i_1, …, i_n) ∈ I_n(m)`.
fn can_prepend(level: Level, i: AlgebraIndex, first: Option<AlgebraIndex>, len: usize) -> bool {
    match first {
        None => true,
        Some(f) => i != f && (!level.constrains_depth(len) || i > f),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductSpace<S> {
    level: Level,
    models: BTreeMap<AlgebraIndex, GnsModel<S>>,
    basis: Vec<Tensor>,
    position: HashMap<Tensor, usize>,
    max_len: Option<usize>,
}

/// Number of basis elements of the product space, without building it.
/// `None` when the space is infinite (free level with no length bound).
pub fn product_dimension(level: Level, dims: &BTreeMap<AlgebraIndex, usize>, max_len: Option<usize>) -> Option<u128> {
    let excited: Vec<(AlgebraIndex, u128)> =
        dims.iter().filter(|(_, d)| **d > 1).map(|(i, d)| (*i, (*d - 1) as u128)).collect();
    let mut total: u128 = 1;
    // by_first[i] = number of tensors of the current length starting with i
    let mut by_first: Vec<u128> = excited.iter().map(|(_, e)| *e).collect();
    let mut len = 1;
    while by_first.iter().any(|c| *c > 0) && max_len.is_none_or(|l| len <= l) {
        total = total.saturating_add(by_first.iter().sum());
        if len > 4096 {
            return None;
        }
        let next = excited
            .iter()
            .map(|(i, e)| {
                let s: u128 = excited
                    .iter()
                    .zip(&by_first)
                    .filter(|((k, _), _)| can_prepend(level, *i, Some(*k), len))
                    .map(|(_, c)| *c)
                    .fold(0u128, |a, b| a.saturating_add(b));
                e.saturating_mul(s)
            })
            .collect();
        by_first = next;
        len += 1;
    }
    Some(total)
}

impl<S: Scalar> ProductSpace<S> {
    /// Builds the basis for the algebras of `registry`. Tensors longer than
    /// `max_len` are dropped; vacuum moments of words of length `L` are exact
    /// whenever `max_len ≥ L / 2`. The free level needs a bound.
    pub fn build(level: Level, registry: &Registry<S>, max_len: Option<usize>, cap: usize) -> Result<Self> {
        let models: BTreeMap<AlgebraIndex, GnsModel<S>> =
            registry.specs().map(|s| Ok((s.index, s.model()?))).collect::<Result<_>>()?;
        let dims = models.iter().map(|(i, m)| (*i, m.dim())).collect();
        let size = product_dimension(level, &dims, max_len).ok_or_else(|| {
            Error::InvalidArgument("the free product space is infinite; give a tensor length bound".into())
        })?;
        if size > cap as u128 {
            return Err(Error::BasisTooLarge { size: usize::try_from(size).unwrap_or(usize::MAX), cap });
        }
        let mut basis: Vec<Tensor> = vec![Vec::new()];
        let mut layer_start = 0;
        loop {
            let layer_end = basis.len();
            for t in layer_start..layer_end {
                let tensor = basis[t].clone();
                if max_len.is_some_and(|l| tensor.len() >= l) {
                    continue;
                }
                for (i, model) in &models {
                    if !can_prepend(level, *i, tensor.first().map(|f| f.0), tensor.len()) {
                        continue;
                    }
                    for k in 1..model.dim() {
                        let mut next = Vec::with_capacity(tensor.len() + 1);
                        next.push((*i, k));
                        next.extend_from_slice(&tensor);
                        basis.push(next);
                    }
                }
            }
            if basis.len() == layer_end {
                break;
            }
            layer_start = layer_end;
        }
        debug_assert_eq!(basis.len() as u128, size);
        let position = basis.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
        Ok(ProductSpace { level, models, basis, position, max_len })
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Tensor] {
        &self.basis
    }

    pub fn max_len(&self) -> Option<usize> {
        self.max_len
    }

    pub fn model(&self, index: AlgebraIndex) -> Result<&GnsModel<S>> {
        self.models.get(&index).ok_or(Error::UnknownAlgebra(index))
    }

    /// Whether basis tensor `h` lies in `H^{(m)}(i)`.
    fn in_domain(&self, i: AlgebraIndex, h: &Tensor) -> bool {
        !self.level.constrains_depth(h.len()) || h[0].0 <= i
    }

    /// Column of `λ_i(M)` on basis element `col`, as (row, value) pairs, where
    /// `op` is the matrix of the element on the algebra's own model.
    fn column(&self, i: AlgebraIndex, op: &[Vec<S>], col: usize, out: &mut Vec<(usize, S)>) {
        let h = &self.basis[col];
        if !self.in_domain(i, h) {
            return;
        }
        let (source, rest): (usize, &[(AlgebraIndex, usize)]) = match h.first() {
            Some(&(first, k)) if first == i => (k, &h[1..]),
            _ => (0, &h[..]),
        };
        let rest_pos = if source == 0 { col } else { self.position[rest] };
        if !op[0][source].is_zero() {
            out.push((rest_pos, op[0][source].clone()));
        }
        for (j, row) in op.iter().enumerate().skip(1) {
            if row[source].is_zero() {
                continue;
            }
            let mut t = Vec::with_capacity(rest.len() + 1);
            t.push((i, j));
            t.extend_from_slice(rest);
            if let Some(&p) = self.position.get(&t) {
                out.push((p, row[source].clone()));
            }
        }
    }

    fn local_operator(&self, index: AlgebraIndex, kind: &LetterKind<S>) -> Result<Vec<Vec<S>>> {
        let model = self.model(index)?;
        Ok(match kind {
            LetterKind::Element(p) => model.operator(p),
            LetterKind::Centered(p) => {
                let mean = model.vacuum_expectation(p);
                model.operator(&(p - &Polynomial::constant(mean)))
            }
        })
    }

    /// Matrix of `λ_i^{(m)}(p(a_i))` on the basis.
    pub fn represent(&self, index: AlgebraIndex, element: &Polynomial<S>) -> Result<Matrix<S>> {
        let op = self.local_operator(index, &LetterKind::Element(element.clone()))?;
        let n = self.dim();
        let mut columns = Vec::with_capacity(n);
        let mut buf = Vec::new();
        for col in 0..n {
            buf.clear();
            self.column(index, &op, col, &mut buf);
            columns.push(buf.clone());
        }
        Ok(Matrix::from_columns(n, columns))
    }

    /// `⟨λ(a_1)…λ(a_n)Ω, Ω⟩`, applying the letters right to left.
    pub fn vacuum_moment(&self, word: &Word<S>) -> Result<S> {
        let mut v: HashMap<usize, S> = HashMap::from([(0, S::one())]);
        let mut buf = Vec::new();
        for letter in word.letters.iter().rev() {
            let op = self.local_operator(letter.index, &letter.kind)?;
            let mut next: HashMap<usize, S> = HashMap::new();
            for (col, x) in &v {
                buf.clear();
                self.column(letter.index, &op, *col, &mut buf);
                for (row, a) in buf.drain(..) {
                    let e = next.entry(row).or_insert_with(S::zero);
                    *e = e.clone() + a * x.clone();
                }
            }
            next.retain(|_, x| !x.is_zero());
            v = next;
        }
        Ok(v.remove(&0).unwrap_or_else(S::zero))
    }
}

/// Square matrix on a product-space basis.
#[derive(Debug, Clone, PartialEq)]
pub enum Matrix<S> {
    /// Row-major entries.
    Dense(Vec<Vec<S>>),
    /// Coordinate list `(row, col, value)` of nonzero entries, sorted by column.
    Sparse { dim: usize, entries: Vec<(usize, usize, S)> },
}

impl<S: Scalar> Matrix<S> {
    fn from_columns(dim: usize, columns: Vec<Vec<(usize, S)>>) -> Self {
        if dim <= DENSE_LIMIT {
            let mut rows = vec![vec![S::zero(); dim]; dim];
            for (col, entries) in columns.into_iter().enumerate() {
                for (row, v) in entries {
                    rows[row][col] = v;
                }
            }
            Matrix::Dense(rows)
        } else {
            let entries = columns
                .into_iter()
                .enumerate()
                .flat_map(|(col, es)| es.into_iter().map(move |(row, v)| (row, col, v)))
                .collect();
            Matrix::Sparse { dim, entries }
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Matrix::Dense(rows) => rows.len(),
            Matrix::Sparse { dim, .. } => *dim,
        }
    }

    pub fn get(&self, row: usize, col: usize) -> S {
        match self {
            Matrix::Dense(rows) => rows[row][col].clone(),
            Matrix::Sparse { entries, .. } => entries
                .iter()
                .find(|(r, c, _)| *r == row && *c == col)
                .map(|e| e.2.clone())
                .unwrap_or_else(S::zero),
        }
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        match self {
            Matrix::Dense(rows) => {
                for (r, row) in rows.iter().enumerate() {
                    for (a, x) in row.iter().zip(v) {
                        if !a.is_zero() {
                            out[r] = out[r].clone() + a.clone() * x.clone();
                        }
                    }
                }
            }
            Matrix::Sparse { entries, .. } => {
                for (r, c, a) in entries {
                    out[*r] = out[*r].clone() + a.clone() * v[*c].clone();
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        let n = self.dim();
        let mut columns = Vec::with_capacity(n);
        for col in 0..n {
            let mut e = vec![S::zero(); n];
            e[col] = S::one();
            let v = self.apply(&other.apply(&e));
            columns.push(v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
        }
        Matrix::from_columns(n, columns)
    }
}
