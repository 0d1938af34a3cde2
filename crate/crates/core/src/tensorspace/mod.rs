//! Sparse exact operators on `V_n^{⊗k}`.
//!
//! A multi-index `(i_1, …, i_k)` with `0 ≤ i_s < n` is flattened with slot 1
//! most significant: `flat = Σ_s i_s · n^(k-s)`. Rows are the upper (output)
//! index, columns the lower (input) index, so `compose(f, g)` is the matrix
//! product `F·G` and applies `g` first.
//!
//! Storage is compressed sparse rows with columns strictly increasing inside
//! a row and no stored zeros. That canonical form makes structural equality
//! coincide with operator equality.

mod builders;
mod format;

pub use builders::{
    antisymmetrizer, contraction, embed, epsilon_operator, identity, kron, permutation,
    sym_projector,
};
pub use format::{parse_sparse, to_sparse_string, write_sparse};

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOperator {
    dim_site: usize,
    rank: usize,
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<Rational>,
}

pub fn flatten(n: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, &d| acc * n + d)
}

pub fn unflatten(n: usize, k: usize, mut flat: usize) -> Vec<usize> {
    let mut digits = vec![0; k];
    for slot in (0..k).rev() {
        digits[slot] = flat % n;
        flat /= n;
    }
    digits
}

impl SparseOperator {
    pub fn zero(dim_site: usize, rank: usize) -> Self {
        let dim = dim_site.pow(rank as u32);
        SparseOperator {
            dim_site,
            rank,
            row_ptr: vec![0; dim + 1],
            cols: Vec::new(),
            vals: Vec::new(),
        }
    }

    /// Builds an operator from `(row, col, value)` triples. Duplicates are
    /// summed and zero results dropped.
    pub fn from_entries<I>(dim_site: usize, rank: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let dim = dim_site.pow(rank as u32);
        let mut triples: Vec<(usize, usize, Rational)> = Vec::new();
        for (row, col, val) in entries {
            if row >= dim || col >= dim {
                return Err(Error::IndexOutOfRange { row, col, dim });
            }
            triples.push((row, col, val));
        }
        triples.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut builder = RowBuilder::new(dim_site, rank);
        let mut iter = triples.into_iter().peekable();
        let mut current_row = 0;
        while let Some((row, col, mut val)) = iter.next() {
            while let Some(&(r, c, v)) = iter.peek() {
                if (r, c) != (row, col) {
                    break;
                }
                val = rational::add(val, v);
                iter.next();
            }
            while current_row < row {
                builder.finish_row();
                current_row += 1;
            }
            builder.push(col, val);
        }
        Ok(builder.finish())
    }

    pub fn dim_site(&self) -> usize {
        self.dim_site
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `n^k`, the side length of the matrix.
    pub fn dim(&self) -> usize {
        self.row_ptr.len() - 1
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, Rational)> + '_ {
        let span = self.row_ptr[row]..self.row_ptr[row + 1];
        self.cols[span.clone()]
            .iter()
            .zip(&self.vals[span])
            .map(|(&c, &v)| (c as usize, v))
    }

    /// All stored entries in `(row, col)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Rational)> + '_ {
        (0..self.dim()).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        let span = self.row_ptr[row]..self.row_ptr[row + 1];
        match self.cols[span.clone()].binary_search(&(col as u32)) {
            Ok(pos) => self.vals[span.start + pos],
            Err(_) => Rational::zero(),
        }
    }

    /// Image of the basis vector `e_col`, as sparse `(row, value)` pairs.
    pub fn apply_basis(&self, col: usize) -> Vec<(usize, Rational)> {
        (0..self.dim())
            .filter_map(|r| {
                let v = self.get(r, col);
                (!v.is_zero()).then_some((r, v))
            })
            .collect()
    }

    fn check_shape(&self, other: &SparseOperator) -> Result<()> {
        if self.dim_site != other.dim_site || self.rank != other.rank {
            return Err(Error::ShapeMismatch {
                lhs_n: self.dim_site,
                lhs_k: self.rank,
                rhs_n: other.dim_site,
                rhs_k: other.rank,
            });
        }
        Ok(())
    }

    /// Common denominator of all entries and the numerators over it, or
    /// `None` if either does not fit in an `i64`.
    fn integerize(&self) -> Option<(i64, Vec<i64>)> {
        let mut lcm: i64 = 1;
        for v in &self.vals {
            let d = *v.denom();
            let g = lcm.gcd(&d);
            lcm = (lcm / g).checked_mul(d)?;
        }
        let mut nums = Vec::with_capacity(self.vals.len());
        for v in &self.vals {
            nums.push(v.numer().checked_mul(lcm / v.denom())?);
        }
        Some((lcm, nums))
    }

    fn compose_integer(&self, other: &SparseOperator) -> Option<SparseOperator> {
        let (den_a, num_a) = self.integerize()?;
        let (den_b, num_b) = other.integerize()?;
        let den = den_a as i128 * den_b as i128;
        let dim = self.dim();
        let mut acc = vec![0i128; dim];
        let mut seen = vec![false; dim];
        let mut touched: Vec<u32> = Vec::new();
        let mut builder = RowBuilder::new(self.dim_site, self.rank);
        for row in 0..dim {
            for ia in self.row_ptr[row]..self.row_ptr[row + 1] {
                let mid = self.cols[ia] as usize;
                let a = num_a[ia] as i128;
                for ib in other.row_ptr[mid]..other.row_ptr[mid + 1] {
                    let c = other.cols[ib];
                    let slot = &mut acc[c as usize];
                    *slot = slot.checked_add(a.checked_mul(num_b[ib] as i128)?)?;
                    if !seen[c as usize] {
                        seen[c as usize] = true;
                        touched.push(c);
                    }
                }
            }
            touched.sort_unstable();
            for &c in &touched {
                let total = std::mem::take(&mut acc[c as usize]);
                seen[c as usize] = false;
                if total != 0 {
                    let g = total.gcd(&den);
                    let numer = i64::try_from(total / g).ok()?;
                    let denom = i64::try_from(den / g).ok()?;
                    builder.push(c as usize, Rational::new_raw(numer, denom));
                }
            }
            touched.clear();
            builder.finish_row();
        }
        Some(builder.finish())
    }

    fn compose_rational(&self, other: &SparseOperator) -> SparseOperator {
        let dim = self.dim();
        let mut acc = vec![Rational::zero(); dim];
        let mut seen = vec![false; dim];
        let mut touched: Vec<u32> = Vec::new();
        let mut builder = RowBuilder::new(self.dim_site, self.rank);
        for row in 0..dim {
            for (mid, a) in self.row(row) {
                for (c, b) in other.row(mid) {
                    acc[c] = rational::add(acc[c], rational::mul(a, b));
                    if !seen[c] {
                        seen[c] = true;
                        touched.push(c as u32);
                    }
                }
            }
            touched.sort_unstable();
            for &c in &touched {
                let total = std::mem::take(&mut acc[c as usize]);
                seen[c as usize] = false;
                builder.push(c as usize, total);
            }
            touched.clear();
            builder.finish_row();
        }
        builder.finish()
    }

    /// `self · other`
    pub fn compose(&self, other: &SparseOperator) -> Result<SparseOperator> {
        self.check_shape(other)?;
        Ok(self
            .compose_integer(other)
            .unwrap_or_else(|| self.compose_rational(other)))
    }

    pub fn scale(&self, factor: Rational) -> SparseOperator {
        if factor.is_zero() {
            return SparseOperator::zero(self.dim_site, self.rank);
        }
        let mut out = self.clone();
        for v in &mut out.vals {
            *v = rational::mul(*v, factor);
        }
        out
    }

    pub fn add(&self, other: &SparseOperator) -> Result<SparseOperator> {
        linear_combination(&[(rational::one(), self), (rational::one(), other)])
    }

    pub fn sub(&self, other: &SparseOperator) -> Result<SparseOperator> {
        linear_combination(&[(rational::one(), self), (-rational::one(), other)])
    }

    /// `self·other - other·self`
    pub fn commutator(&self, other: &SparseOperator) -> Result<SparseOperator> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim()).fold(Rational::zero(), |acc, r| {
            rational::add(acc, self.get(r, r))
        })
    }

    pub fn transpose(&self) -> SparseOperator {
        SparseOperator::from_entries(
            self.dim_site,
            self.rank,
            self.entries().map(|(r, c, v)| (c, r, v)),
        )
        .expect("transpose keeps indices in range")
    }
}

/// `Σ coefficient_i · operator_i`, all operators sharing one shape.
pub fn linear_combination(terms: &[(Rational, &SparseOperator)]) -> Result<SparseOperator> {
    let first = terms
        .first()
        .map(|(_, op)| *op)
        .expect("linear combination of no terms");
    for (_, op) in terms {
        first.check_shape(op)?;
    }
    let mut builder = RowBuilder::new(first.dim_site, first.rank);
    let mut scratch: Vec<(u32, Rational)> = Vec::new();
    for row in 0..first.dim() {
        for &(coef, op) in terms {
            if coef.is_zero() {
                continue;
            }
            for i in op.row_ptr[row]..op.row_ptr[row + 1] {
                scratch.push((op.cols[i], rational::mul(coef, op.vals[i])));
            }
        }
        scratch.sort_by_key(|&(c, _)| c);
        let mut iter = scratch.drain(..).peekable();
        while let Some((c, mut v)) = iter.next() {
            while let Some(&(c2, v2)) = iter.peek() {
                if c2 != c {
                    break;
                }
                v = rational::add(v, v2);
                iter.next();
            }
            builder.push(c as usize, v);
        }
        drop(iter);
        builder.finish_row();
    }
    Ok(builder.finish())
}

pub fn compose(f: &SparseOperator, g: &SparseOperator) -> Result<SparseOperator> {
    f.compose(g)
}

pub fn add(f: &SparseOperator, g: &SparseOperator) -> Result<SparseOperator> {
    f.add(g)
}

pub fn subtract(f: &SparseOperator, g: &SparseOperator) -> Result<SparseOperator> {
    f.sub(g)
}

pub fn scale(factor: Rational, f: &SparseOperator) -> SparseOperator {
    f.scale(factor)
}

pub fn trace(f: &SparseOperator) -> Rational {
    f.trace()
}

/// Appends rows in order; drops zeros so the canonical form holds.
pub(crate) struct RowBuilder {
    dim_site: usize,
    rank: usize,
    row_ptr: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<Rational>,
}

impl RowBuilder {
    pub(crate) fn new(dim_site: usize, rank: usize) -> Self {
        let dim = dim_site.pow(rank as u32);
        let mut row_ptr = Vec::with_capacity(dim + 1);
        row_ptr.push(0);
        RowBuilder {
            dim_site,
            rank,
            row_ptr,
            cols: Vec::new(),
            vals: Vec::new(),
        }
    }

    /// Columns must arrive strictly increasing within a row.
    pub(crate) fn push(&mut self, col: usize, val: Rational) {
        if !val.is_zero() {
            debug_assert!(
                self.cols.len() == *self.row_ptr.last().unwrap()
                    || *self.cols.last().unwrap() < col as u32
            );
            self.cols.push(col as u32);
            self.vals.push(val);
        }
    }

    pub(crate) fn finish_row(&mut self) {
        self.row_ptr.push(self.cols.len());
    }

    pub(crate) fn finish(mut self) -> SparseOperator {
        let dim = self.dim_site.pow(self.rank as u32);
        while self.row_ptr.len() < dim + 1 {
            self.row_ptr.push(self.cols.len());
        }
        SparseOperator {
            dim_site: self.dim_site,
            rank: self.rank,
            row_ptr: self.row_ptr,
            cols: self.cols,
            vals: self.vals,
        }
    }
}
