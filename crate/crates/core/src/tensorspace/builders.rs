use itertools::Itertools;

use super::{flatten, unflatten, SparseOperator};
use crate::algebra::{metric, AlgebraSpec};
use crate::error::{Error, Result};
use crate::rational::{self, int, q};

fn check_slots(k: usize, a: usize, b: usize) -> Result<()> {
    for slot in [a, b] {
        if slot == 0 || slot > k {
            return Err(Error::SlotOutOfRange { slot, rank: k });
        }
    }
    if a == b {
        return Err(Error::EqualSlots(a));
    }
    Ok(())
}

fn factorial(r: usize) -> i64 {
    (1..=r as i64).product()
}

/// Parity of a permutation given as images of `0..len`.
fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn identity(n: usize, k: usize) -> SparseOperator {
    let dim = n.pow(k as u32);
    SparseOperator::from_entries(n, k, (0..dim).map(|i| (i, i, int(1))))
        .expect("diagonal indices are in range")
}

/// `P_ab`, swapping tensor slots `a` and `b` (1-based).
pub fn permutation(n: usize, k: usize, a: usize, b: usize) -> Result<SparseOperator> {
    check_slots(k, a, b)?;
    let dim = n.pow(k as u32);
    let entries = (0..dim).map(|row| {
        let mut digits = unflatten(n, k, row);
        digits.swap(a - 1, b - 1);
        (row, flatten(n, &digits), int(1))
    });
    SparseOperator::from_entries(n, k, entries)
}

/// `K_ab` with components `c̄^(i_a i_b) c_(j_a j_b)` times the identity on the
/// remaining slots.
pub fn contraction(spec: &AlgebraSpec, k: usize, a: usize, b: usize) -> Result<SparseOperator> {
    check_slots(k, a, b)?;
    let n = spec.n();
    let g = metric(spec);
    let dim = n.pow(k as u32);
    let mut entries = Vec::new();
    for row in 0..dim {
        let digits = unflatten(n, k, row);
        let (paired, upper) = g.inverse_partner(digits[a - 1]);
        if paired != digits[b - 1] {
            continue;
        }
        for ja in 0..n {
            let (jb, lower) = g.partner(ja);
            let mut col = digits.clone();
            col[a - 1] = ja;
            col[b - 1] = jb;
            entries.push((row, flatten(n, &col), int(upper * lower)));
        }
    }
    SparseOperator::from_entries(n, k, entries)
}

/// `½(1 - ε P_ab)`: antisymmetrizer of slots `a, b` for `so`, symmetrizer
/// for `sp`.
pub fn sym_projector(spec: &AlgebraSpec, k: usize, a: usize, b: usize) -> Result<SparseOperator> {
    let n = spec.n();
    let p = permutation(n, k, a, b)?;
    super::linear_combination(&[(q(1, 2), &identity(n, k)), (q(-spec.epsilon(), 2), &p)])
}

/// Complete antisymmetrizer `A_r` on `V_n^{⊗r}`,
/// `(1/r!) Σ_σ sign(σ) δ^{i_σ(1)}_{k_1} ⋯ δ^{i_σ(r)}_{k_r}`.
///
/// Rows with a repeated digit cancel completely and are left empty; for
/// `r > n` the result is the zero operator.
pub fn antisymmetrizer(n: usize, r: usize) -> SparseOperator {
    let dim = n.pow(r as u32);
    let weight = q(1, factorial(r));
    let perms: Vec<(Vec<usize>, i64)> = (0..r)
        .permutations(r)
        .map(|p| {
            let s = sign(&p);
            (p, s)
        })
        .collect();
    let mut entries = Vec::new();
    for row in 0..dim {
        let digits = unflatten(n, r, row);
        if !digits.iter().all_unique() {
            continue;
        }
        for (perm, s) in &perms {
            let col: Vec<usize> = perm.iter().map(|&p| digits[p]).collect();
            entries.push((row, flatten(n, &col), rational::mul(weight, int(*s))));
        }
    }
    SparseOperator::from_entries(n, r, entries).expect("indices are in range")
}

/// `E_r` on `V_{2r}^{⊗r}` with the Euclidean metric:
/// `((-1)^{r/2} / r!) ε^{i_1…i_r j_1…j_r}`, `ε^{12…2r} = 1`.
///
/// Only `r ∈ {2, 4}` fit in memory (`(2r)!` nonzeros); larger even ranks are
/// rejected with [`Error::DimensionTooLarge`].
pub fn epsilon_operator(r: usize) -> Result<SparseOperator> {
    if r == 0 || r % 2 == 1 {
        return Err(Error::OddR(r));
    }
    if r > 4 {
        return Err(Error::DimensionTooLarge { n: 2 * r, max: 8 });
    }
    let n = 2 * r;
    let prefactor = q(if (r / 2).is_multiple_of(2) { 1 } else { -1 }, factorial(r));
    let entries = (0..n).permutations(n).map(|perm| {
        let row = flatten(n, &perm[..r]);
        let col = flatten(n, &perm[r..]);
        (row, col, rational::mul(prefactor, int(sign(&perm))))
    });
    SparseOperator::from_entries(n, r, entries)
}

/// Tensor product; slots of `a` come first.
pub fn kron(a: &SparseOperator, b: &SparseOperator) -> Result<SparseOperator> {
    if a.dim_site() != b.dim_site() {
        return Err(Error::ShapeMismatch {
            lhs_n: a.dim_site(),
            lhs_k: a.rank(),
            rhs_n: b.dim_site(),
            rhs_k: b.rank(),
        });
    }
    let db = b.dim();
    let mut entries = Vec::with_capacity(a.nnz() * b.nnz());
    for (ra, ca, va) in a.entries() {
        for (rb, cb, vb) in b.entries() {
            entries.push((ra * db + rb, ca * db + cb, rational::mul(va, vb)));
        }
    }
    SparseOperator::from_entries(a.dim_site(), a.rank() + b.rank(), entries)
}

/// Places `op` on the listed slots (1-based, in order) of `V^{⊗k}` with the
/// identity on every other slot.
pub fn embed(op: &SparseOperator, k: usize, slots: &[usize]) -> Result<SparseOperator> {
    let n = op.dim_site();
    let s = op.rank();
    if slots.len() != s {
        return Err(Error::ShapeMismatch {
            lhs_n: n,
            lhs_k: s,
            rhs_n: n,
            rhs_k: slots.len(),
        });
    }
    for (idx, &slot) in slots.iter().enumerate() {
        if slot == 0 || slot > k {
            return Err(Error::SlotOutOfRange { slot, rank: k });
        }
        if slots[..idx].contains(&slot) {
            return Err(Error::EqualSlots(slot));
        }
    }
    let others: Vec<usize> = (1..=k).filter(|t| !slots.contains(t)).collect();
    let spectator_dim = n.pow(others.len() as u32);
    let mut entries = Vec::with_capacity(op.nnz() * spectator_dim);
    for (r, c, v) in op.entries() {
        let rd = unflatten(n, s, r);
        let cd = unflatten(n, s, c);
        for spectator in 0..spectator_dim {
            let sd = unflatten(n, others.len(), spectator);
            let mut row = vec![0; k];
            let mut col = vec![0; k];
            for (i, &slot) in slots.iter().enumerate() {
                row[slot - 1] = rd[i];
                col[slot - 1] = cd[i];
            }
            for (i, &slot) in others.iter().enumerate() {
                row[slot - 1] = sd[i];
                col[slot - 1] = sd[i];
            }
            entries.push((flatten(n, &row), flatten(n, &col), v));
        }
    }
    SparseOperator::from_entries(n, k, entries)
}
