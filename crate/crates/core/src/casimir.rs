//! Structure constants, the Cartan–Killing metric and the split Casimir
//! operator of `so(N)` / `sp(N)` in the defining and adjoint representations.
//!
//! The adjoint space is realised inside `V_N ⊗ V_N` as the image of
//! `𝒫^ε_12 = ½(1 - ε P_12)`, so operators on `ad ⊗ ad` are rank-4 operators
//! supported on the image of `𝐈 = 𝒫^ε_12 𝒫^ε_34`.
//!
//! Pair indices `(i1, i2)` range over *all* ordered pairs. Basis generators use
//! the labels of [`generator_labels`]; a coefficient tensor in pair indices
//! always carries the `(anti)symmetrisation` of its upper pair.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{metric, AlgebraSpec, Family, MetricTensor};
use crate::error::{Error, Result};
use crate::rational::{self, int, q, Rational};
use crate::tensorspace::{
    contraction, embed, identity, kron, linear_combination, permutation, sym_projector,
    SparseOperator,
};

/// `i < j` for `so`, `i ≤ j` for `sp`, in lexicographic order.
pub fn generator_labels(spec: &AlgebraSpec) -> Vec<(usize, usize)> {
    let n = spec.n();
    let strict = spec.family() == Family::Orthogonal;
    (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !strict || i < j)
        .collect()
}

/// `(M_ij)^k_l = c_jl δ^k_i - ε c_il δ^k_j` as a rank-1 operator (row `k`,
/// column `l`). Defined for every ordered pair; `M_ji = -ε M_ij`.
pub fn generator_matrix(spec: &AlgebraSpec, i: usize, j: usize) -> SparseOperator {
    let g = metric(spec);
    let eps = spec.epsilon();
    let (lj, cj) = g.partner(j);
    let (li, ci) = g.partner(i);
    SparseOperator::from_entries(spec.n(), 1, [(i, lj, int(cj)), (j, li, int(-eps * ci))])
        .expect("generator indices are in range")
}

/// `½(δ^m_a δ^n_b - ε δ^m_b δ^n_a)` accumulated into `(m, n)` slots.
fn push_bracket(
    out: &mut BTreeMap<[usize; 6], Rational>,
    prefix: [usize; 4],
    a: usize,
    b: usize,
    coef: i64,
    eps: i64,
) {
    let [i1, i2, j1, j2] = prefix;
    for (m, n, w) in [(a, b, q(coef, 2)), (b, a, q(-eps * coef, 2))] {
        let slot = out
            .entry([i1, i2, j1, j2, m, n])
            .or_insert_with(Rational::zero);
        *slot = rational::add(*slot, w);
    }
}

/// `X_{i1 i2, j1 j2}^{k1 k2}` with `[M_{i1 i2}, M_{j1 j2}] = Σ_{k1,k2} X M_{k1 k2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    spec: AlgebraSpec,
    entries: BTreeMap<[usize; 6], Rational>,
}

impl StructureConstants {
    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn get(&self, index: [usize; 6]) -> Rational {
        self.entries
            .get(&index)
            .copied()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> &BTreeMap<[usize; 6], Rational> {
        &self.entries
    }

    /// `ad(M_{i1 i2})` on `V ⊗ V`: row `(k1, k2)`, column `(j1, j2)`, value
    /// `X_{i1 i2, j1 j2}^{k1 k2}`.
    pub fn ad_operator(&self, i1: usize, i2: usize) -> SparseOperator {
        let n = self.spec.n();
        let lo = [i1, i2, 0, 0, 0, 0];
        let hi = [i1, i2, n, 0, 0, 0];
        let entries = self
            .entries
            .range(lo..hi)
            .map(|(&[_, _, j1, j2, k1, k2], &v)| (k1 * n + k2, j1 * n + j2, v));
        SparseOperator::from_entries(n, 2, entries).expect("pair indices are in range")
    }
}

pub fn structure_constants(spec: &AlgebraSpec) -> StructureConstants {
    let n = spec.n();
    let eps = spec.epsilon();
    let g = metric(spec);
    let mut entries = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let prefix = [i, j, k, l];
                    // c_jk [i l) - ε c_ik [j l) - ε c_jl [i k) + c_il [j k)
                    let terms = [
                        (g.c(j, k), i, l),
                        (-eps * g.c(i, k), j, l),
                        (-eps * g.c(j, l), i, k),
                        (g.c(i, l), j, k),
                    ];
                    for (coef, a, b) in terms {
                        if coef != 0 {
                            push_bracket(&mut entries, prefix, a, b, coef, eps);
                        }
                    }
                }
            }
        }
    }
    entries.retain(|_, v| !v.is_zero());
    StructureConstants {
        spec: *spec,
        entries,
    }
}

/// Cartan–Killing metric in pair indices, closed form
/// `g = 2(N - 2ε)(c_{i2 j1} c_{j2 i1} - ε c_{i1 j1} c_{j2 i2})`, and its inverse
/// `(ε c̄^{i1 j2} c̄^{i2 j1} - c̄^{i1 j1} c̄^{i2 j2}) / (8(N - 2ε))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingMetric {
    spec: AlgebraSpec,
    entries: BTreeMap<[usize; 4], Rational>,
    inverse_entries: BTreeMap<[usize; 4], Rational>,
}

impl KillingMetric {
    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn get(&self, index: [usize; 4]) -> Rational {
        self.entries
            .get(&index)
            .copied()
            .unwrap_or_else(Rational::zero)
    }

    pub fn inverse(&self, index: [usize; 4]) -> Rational {
        self.inverse_entries
            .get(&index)
            .copied()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> &BTreeMap<[usize; 4], Rational> {
        &self.entries
    }

    pub fn inverse_entries(&self) -> &BTreeMap<[usize; 4], Rational> {
        &self.inverse_entries
    }
}

fn shifted_dimension(spec: &AlgebraSpec) -> Result<i64> {
    let d = spec.n() as i64 - 2 * spec.epsilon();
    if d == 0 {
        return Err(Error::DegenerateKilling);
    }
    Ok(d)
}

pub fn killing_metric(spec: &AlgebraSpec) -> Result<KillingMetric> {
    let n = spec.n();
    let eps = spec.epsilon();
    let shift = shifted_dimension(spec)?;
    let g: MetricTensor = metric(spec);
    let mut entries = BTreeMap::new();
    let mut inverse_entries = BTreeMap::new();
    let inv_scale = q(1, 8 * shift);
    for i1 in 0..n {
        for i2 in 0..n {
            for j1 in 0..n {
                for j2 in 0..n {
                    let lower = g.c(i2, j1) * g.c(j2, i1) - eps * g.c(i1, j1) * g.c(j2, i2);
                    if lower != 0 {
                        entries.insert([i1, i2, j1, j2], int(2 * shift * lower));
                    }
                    let upper =
                        eps * g.c_inv(i1, j2) * g.c_inv(i2, j1) - g.c_inv(i1, j1) * g.c_inv(i2, j2);
                    if upper != 0 {
                        inverse_entries
                            .insert([i1, i2, j1, j2], rational::mul(inv_scale, int(upper)));
                    }
                }
            }
        }
    }
    Ok(KillingMetric {
        spec: *spec,
        entries,
        inverse_entries,
    })
}

/// `g_ab = tr(ad(X_a) ad(X_b))` in pair indices, summed over all ordered pairs
/// from the structure constants. Independent of [`killing_metric`].
pub fn killing_trace_form(sc: &StructureConstants) -> BTreeMap<[usize; 4], Rational> {
    let n = sc.spec().n();
    let ads: Vec<SparseOperator> = (0..n * n).map(|a| sc.ad_operator(a / n, a % n)).collect();
    let mut out = BTreeMap::new();
    for (a, ad_a) in ads.iter().enumerate() {
        for (b, ad_b) in ads.iter().enumerate() {
            let mut total = Rational::zero();
            for (k, l, v) in ad_a.entries() {
                let w = ad_b.get(l, k);
                if !w.is_zero() {
                    total = rational::add(total, rational::mul(v, w));
                }
            }
            if !total.is_zero() {
                out.insert([a / n, a % n, b / n, b % n], total);
            }
        }
    }
    out
}

/// `Ĉ_f = (P_12 - ε K_12) / (2(N - 2ε))` on `V ⊗ V`.
pub fn casimir_defining(spec: &AlgebraSpec) -> Result<SparseOperator> {
    let shift = shifted_dimension(spec)?;
    let n = spec.n();
    linear_combination(&[
        (q(1, 2 * shift), &permutation(n, 2, 1, 2)?),
        (q(-spec.epsilon(), 2 * shift), &contraction(spec, 2, 1, 2)?),
    ])
}

/// `Ĉ_f = g^{ab} M_a ⊗ M_b` summed over ordered pairs with the inverse Killing
/// metric: the generator route to [`casimir_defining`].
pub fn casimir_defining_via_generators(killing: &KillingMetric) -> Result<SparseOperator> {
    let spec = killing.spec();
    let n = spec.n();
    let mut entries = Vec::new();
    for (&[i1, i2, i3, i4], &w) in killing.inverse_entries() {
        let left = generator_matrix(spec, i1, i2);
        let right = generator_matrix(spec, i3, i4);
        for (r, c, v) in kron(&left, &right)?.entries() {
            entries.push((r, c, rational::mul(w, v)));
        }
    }
    SparseOperator::from_entries(n, 2, entries)
}

/// The three elementary invariant operators on `ad ⊗ ad ⊂ V^{⊗4}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantOps {
    /// `𝐈 = 𝒫_12 𝒫_34`
    pub op_i: SparseOperator,
    /// `𝐏 = 𝐈 P_13 P_24 𝐈`
    pub op_p: SparseOperator,
    /// `𝐊 = 𝐈 K_13 K_24 𝐈`
    pub op_k: SparseOperator,
}

pub fn pair_projector(spec: &AlgebraSpec) -> Result<SparseOperator> {
    sym_projector(spec, 4, 1, 2)?.compose(&sym_projector(spec, 4, 3, 4)?)
}

fn sandwich(op_i: &SparseOperator, inner: &SparseOperator) -> Result<SparseOperator> {
    op_i.compose(inner)?.compose(op_i)
}

pub fn invariant_ops(spec: &AlgebraSpec) -> Result<InvariantOps> {
    let n = spec.n();
    let op_i = pair_projector(spec)?;
    let swap = permutation(n, 4, 1, 3)?.compose(&permutation(n, 4, 2, 4)?)?;
    let op_p = sandwich(&op_i, &swap)?;
    let double = contraction(spec, 4, 1, 3)?.compose(&contraction(spec, 4, 2, 4)?)?;
    let op_k = sandwich(&op_i, &double)?;
    Ok(InvariantOps { op_i, op_p, op_k })
}

/// `Ĉ_ad = (2/(N - 2ε)) 𝐈 (P_13 - ε K_13) 𝐈`.
pub fn casimir_adjoint(spec: &AlgebraSpec) -> Result<SparseOperator> {
    let shift = shifted_dimension(spec)?;
    let n = spec.n();
    let inner = linear_combination(&[
        (int(1), &permutation(n, 4, 1, 3)?),
        (int(-spec.epsilon()), &contraction(spec, 4, 1, 3)?),
    ])?;
    Ok(sandwich(&pair_projector(spec)?, &inner)?.scale(q(2, shift)))
}

/// `Ĉ_ad = 4 𝐈 (Ĉ_f)_13 𝐈` from a rank-2 defining Casimir.
pub fn casimir_adjoint_from_defining(
    spec: &AlgebraSpec,
    c_f: &SparseOperator,
) -> Result<SparseOperator> {
    let lifted = embed(c_f, 4, &[1, 3])?;
    Ok(sandwich(&pair_projector(spec)?, &lifted)?.scale(int(4)))
}

/// `(Ĉ_ad)^{k}_{j} = g^{a b} X_{a, j1 j2}^{k1 k2} X_{b, j3 j4}^{k3 k4}`, the
/// structure-constant route to [`casimir_adjoint`]. Cost grows like `N^8`;
/// intended as an oracle for small `N`.
pub fn casimir_adjoint_via_structure(
    sc: &StructureConstants,
    killing: &KillingMetric,
) -> Result<SparseOperator> {
    let n = sc.spec().n();
    let mut ads: BTreeMap<(usize, usize), SparseOperator> = BTreeMap::new();
    let mut entries = Vec::new();
    for (&[i1, i2, i3, i4], &w) in killing.inverse_entries() {
        for pair in [(i1, i2), (i3, i4)] {
            ads.entry(pair)
                .or_insert_with(|| sc.ad_operator(pair.0, pair.1));
        }
        let term = kron(&ads[&(i1, i2)], &ads[&(i3, i4)])?;
        entries.extend(term.entries().map(|(r, c, v)| (r, c, rational::mul(w, v))));
    }
    SparseOperator::from_entries(n, 4, entries)
}

/// `Ĉ_± = ½(𝐈 ± 𝐏) Ĉ_ad`.
pub fn casimir_split(
    c_ad: &SparseOperator,
    ops: &InvariantOps,
) -> Result<(SparseOperator, SparseOperator)> {
    let half = q(1, 2);
    let plus = linear_combination(&[(half, &ops.op_i), (half, &ops.op_p)])?.compose(c_ad)?;
    let minus = linear_combination(&[(half, &ops.op_i), (-half, &ops.op_p)])?.compose(c_ad)?;
    Ok((plus, minus))
}

/// `Ĉ_- = 𝐈 (P_24 - ε) K_13 𝐈 / (N - 2ε)`.
pub fn casimir_minus_explicit(spec: &AlgebraSpec) -> Result<SparseOperator> {
    let shift = shifted_dimension(spec)?;
    let n = spec.n();
    let k13 = contraction(spec, 4, 1, 3)?;
    let p24 = permutation(n, 4, 2, 4)?;
    let inner = linear_combination(&[(int(1), &p24.compose(&k13)?), (int(-spec.epsilon()), &k13)])?;
    Ok(sandwich(&pair_projector(spec)?, &inner)?.scale(q(1, shift)))
}

/// `Ĉ_+ = 𝐈 (2 P_24 - P_24 K_13 - ε K_13) 𝐈 / (N - 2ε)`.
pub fn casimir_plus_explicit(spec: &AlgebraSpec) -> Result<SparseOperator> {
    let shift = shifted_dimension(spec)?;
    let n = spec.n();
    let k13 = contraction(spec, 4, 1, 3)?;
    let p24 = permutation(n, 4, 2, 4)?;
    let inner = linear_combination(&[
        (int(2), &p24),
        (int(-1), &p24.compose(&k13)?),
        (int(-spec.epsilon()), &k13),
    ])?;
    Ok(sandwich(&pair_projector(spec)?, &inner)?.scale(q(1, shift)))
}

/// `Δ(M_ij)` on `V^{⊗4}`: the generator acting on each slot in turn.
pub fn adjoint_action(spec: &AlgebraSpec, i: usize, j: usize) -> Result<SparseOperator> {
    let n = spec.n();
    let valid = i < n
        && j < n
        && match spec.family() {
            Family::Orthogonal => i < j,
            Family::Symplectic => i <= j,
        };
    if !valid {
        return Err(Error::InvalidGeneratorLabel {
            algebra: spec.to_string(),
            i,
            j,
        });
    }
    let m = generator_matrix(spec, i, j);
    let slots: Vec<SparseOperator> = (1..=4).map(|s| embed(&m, 4, &[s])).collect::<Result<_>>()?;
    let terms: Vec<(Rational, &SparseOperator)> = slots.iter().map(|s| (int(1), s)).collect();
    linear_combination(&terms)
}

/// Everything the projector constructions are built from.
#[derive(Debug, Clone)]
pub struct CasimirBundle {
    pub spec: AlgebraSpec,
    pub c_f: SparseOperator,
    pub c_ad: SparseOperator,
    pub c_plus: SparseOperator,
    pub c_minus: SparseOperator,
    pub op_i: SparseOperator,
    pub op_p: SparseOperator,
    pub op_k: SparseOperator,
}

impl CasimirBundle {
    pub fn new(spec: &AlgebraSpec) -> Result<Self> {
        let c_f = casimir_defining(spec)?;
        let ops = invariant_ops(spec)?;
        let c_ad = casimir_adjoint(spec)?;
        let (c_plus, c_minus) = casimir_split(&c_ad, &ops)?;
        Ok(CasimirBundle {
            spec: *spec,
            c_f,
            c_ad,
            c_plus,
            c_minus,
            op_i: ops.op_i,
            op_p: ops.op_p,
            op_k: ops.op_k,
        })
    }

    pub fn identity_full(&self) -> SparseOperator {
        identity(self.spec.n(), 4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_spec;
    use crate::rational::zero;

    fn so(n: usize) -> AlgebraSpec {
        make_spec(Family::Orthogonal, n).unwrap()
    }

    fn sp(n: usize) -> AlgebraSpec {
        make_spec(Family::Symplectic, n).unwrap()
    }

    fn small_specs() -> Vec<AlgebraSpec> {
        let mut v: Vec<_> = (3..=6).map(so).collect();
        v.extend([2, 4, 6].map(sp));
        v
    }

    type Dense = Vec<Vec<Rational>>;

    fn dense_generator(spec: &AlgebraSpec, i: usize, j: usize) -> Dense {
        let n = spec.n();
        let g = metric(spec);
        let eps = spec.epsilon();
        let mut m = vec![vec![zero(); n]; n];
        for (k, row) in m.iter_mut().enumerate() {
            for (l, cell) in row.iter_mut().enumerate() {
                let di = i64::from(k == i);
                let dj = i64::from(k == j);
                *cell = int(g.c(j, l) * di - eps * g.c(i, l) * dj);
            }
        }
        m
    }

    fn mat_mul(a: &Dense, b: &Dense) -> Dense {
        let n = a.len();
        let mut out = vec![vec![zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        out
    }

    fn bracket(a: &Dense, b: &Dense) -> Dense {
        let ab = mat_mul(a, b);
        let ba = mat_mul(b, a);
        ab.iter()
            .zip(&ba)
            .map(|(r1, r2)| r1.iter().zip(r2).map(|(x, y)| x - y).collect())
            .collect()
    }

    /// Basis coordinates of an algebra element given as an `N×N` matrix.
    fn decompose(spec: &AlgebraSpec, x: &Dense) -> Vec<Rational> {
        let n = spec.n();
        let g = metric(spec);
        let raised =
            |k: usize, p: usize| -> Rational { (0..n).map(|l| x[k][l] * int(g.c_inv(l, p))).sum() };
        generator_labels(spec)
            .into_iter()
            .map(|(m, nn)| {
                if m == nn {
                    raised(m, m) / int(2)
                } else {
                    raised(m, nn)
                }
            })
            .collect()
    }

    #[test]
    fn generator_matrices_match_dense_form() {
        for spec in small_specs() {
            let n = spec.n();
            for i in 0..n {
                for j in 0..n {
                    let sparse = generator_matrix(&spec, i, j);
                    let dense = dense_generator(&spec, i, j);
                    for k in 0..n {
                        for l in 0..n {
                            assert_eq!(sparse.get(k, l), dense[k][l]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn commutators_expand_with_structure_constants() {
        for spec in small_specs() {
            let n = spec.n();
            let sc = structure_constants(&spec);
            let gens: Vec<Vec<Dense>> = (0..n)
                .map(|i| (0..n).map(|j| dense_generator(&spec, i, j)).collect())
                .collect();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        for l in 0..n {
                            let lhs = bracket(&gens[i][j], &gens[k][l]);
                            let mut rhs = vec![vec![zero(); n]; n];
                            for m in 0..n {
                                for nn in 0..n {
                                    let x = sc.get([i, j, k, l, m, nn]);
                                    if x.is_zero() {
                                        continue;
                                    }
                                    for (r, row) in gens[m][nn].iter().enumerate() {
                                        for (c, v) in row.iter().enumerate() {
                                            rhs[r][c] += x * v;
                                        }
                                    }
                                }
                            }
                            assert_eq!(lhs, rhs, "{spec} [M{i}{j}, M{k}{l}]");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn so3_bracket_component() {
        // [M_01, M_12] = c_11 M_02 = M_02 in 0-based labels.
        let spec = so(3);
        let sc = structure_constants(&spec);
        let lhs = bracket(&dense_generator(&spec, 0, 1), &dense_generator(&spec, 1, 2));
        assert_eq!(lhs, dense_generator(&spec, 0, 2));
        assert_eq!(sc.get([0, 1, 1, 2, 0, 2]), q(1, 2));
        assert_eq!(sc.get([0, 1, 1, 2, 2, 0]), q(-1, 2));
    }

    #[test]
    fn structure_constants_pair_symmetry() {
        for spec in small_specs() {
            let eps = spec.epsilon();
            let sc = structure_constants(&spec);
            for (&[i1, i2, j1, j2, k1, k2], &v) in sc.entries() {
                let s = int(-eps);
                assert_eq!(sc.get([i2, i1, j1, j2, k1, k2]), v * s);
                assert_eq!(sc.get([i1, i2, j2, j1, k1, k2]), v * s);
                assert_eq!(sc.get([i1, i2, j1, j2, k2, k1]), v * s);
            }
        }
    }

    #[test]
    fn jacobi_identity() {
        for spec in [so(3), so(4), sp(2), sp(4)] {
            let n = spec.n();
            let p = n * n;
            let sc = structure_constants(&spec);
            let mut x = vec![zero(); p * p * p];
            for (&[a1, a2, b1, b2, c1, c2], &v) in sc.entries() {
                x[((a1 * n + a2) * p + b1 * n + b2) * p + c1 * n + c2] = v;
            }
            let at = |a: usize, b: usize, c: usize| x[(a * p + b) * p + c];
            for a in 0..p {
                for b in 0..p {
                    for c in 0..p {
                        for f in 0..p {
                            let mut s = zero();
                            for e in 0..p {
                                s += at(a, b, e) * at(e, c, f)
                                    + at(b, c, e) * at(e, a, f)
                                    + at(c, a, e) * at(e, b, f);
                            }
                            assert!(s.is_zero(), "{spec}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn so3_killing_component() {
        let k = killing_metric(&so(3)).unwrap();
        assert_eq!(k.get([0, 1, 1, 0]), int(2));
        assert_eq!(k.get([0, 1, 0, 1]), int(-2));
    }

    #[test]
    fn killing_closed_form_equals_trace_form() {
        for spec in small_specs() {
            let closed = killing_metric(&spec).unwrap();
            let traced = killing_trace_form(&structure_constants(&spec));
            assert_eq!(closed.entries(), &traced, "{spec}");
        }
    }

    /// Basis-only oracle: ad matrices from explicit commutators, no pair
    /// redundancy and no closed forms.
    #[test]
    fn killing_matches_basis_trace_of_ad() {
        for spec in small_specs() {
            let labels = generator_labels(&spec);
            let d = labels.len();
            let gens: Vec<Dense> = labels
                .iter()
                .map(|&(i, j)| dense_generator(&spec, i, j))
                .collect();
            // ad[a][c][b] = C^c_{ab}
            let ad: Vec<Vec<Vec<Rational>>> = (0..d)
                .map(|a| {
                    let cols: Vec<Vec<Rational>> = (0..d)
                        .map(|b| decompose(&spec, &bracket(&gens[a], &gens[b])))
                        .collect();
                    (0..d)
                        .map(|c| (0..d).map(|b| cols[b][c]).collect())
                        .collect()
                })
                .collect();
            let closed = killing_metric(&spec).unwrap();
            for a in 0..d {
                for b in 0..d {
                    let tr: Rational = (0..d)
                        .flat_map(|c| (0..d).map(move |e| (c, e)))
                        .map(|(c, e)| ad[a][c][e] * ad[b][e][c])
                        .sum();
                    let (i1, i2) = labels[a];
                    let (j1, j2) = labels[b];
                    assert_eq!(closed.get([i1, i2, j1, j2]), tr, "{spec} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn killing_inverse_acts_as_pair_projector() {
        for spec in small_specs() {
            let n = spec.n();
            let k = killing_metric(&spec).unwrap();
            let pair = sym_projector(&spec, 2, 1, 2).unwrap();
            for i1 in 0..n {
                for i2 in 0..n {
                    for k1 in 0..n {
                        for k2 in 0..n {
                            let mut s = zero();
                            for j1 in 0..n {
                                for j2 in 0..n {
                                    s += k.inverse([i1, i2, j1, j2]) * k.get([j1, j2, k1, k2]);
                                }
                            }
                            assert_eq!(s, pair.get(i1 * n + i2, k1 * n + k2), "{spec}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn casimir_defining_prefactors() {
        let spec = so(3);
        let expect = linear_combination(&[
            (q(1, 2), &permutation(3, 2, 1, 2).unwrap()),
            (q(-1, 2), &contraction(&spec, 2, 1, 2).unwrap()),
        ])
        .unwrap();
        assert_eq!(casimir_defining(&spec).unwrap(), expect);
        let spec = sp(2);
        let expect = linear_combination(&[
            (q(1, 8), &permutation(2, 2, 1, 2).unwrap()),
            (q(1, 8), &contraction(&spec, 2, 1, 2).unwrap()),
        ])
        .unwrap();
        assert_eq!(casimir_defining(&spec).unwrap(), expect);
    }

    #[test]
    fn casimir_defining_generator_route() {
        for spec in small_specs() {
            let killing = killing_metric(&spec).unwrap();
            assert_eq!(
                casimir_defining_via_generators(&killing).unwrap(),
                casimir_defining(&spec).unwrap(),
                "{spec}"
            );
        }
    }

    #[test]
    fn casimir_adjoint_routes_agree() {
        for spec in small_specs() {
            let direct = casimir_adjoint(&spec).unwrap();
            let sc = structure_constants(&spec);
            let killing = killing_metric(&spec).unwrap();
            assert_eq!(
                casimir_adjoint_via_structure(&sc, &killing).unwrap(),
                direct,
                "{spec}"
            );
            let c_f = casimir_defining(&spec).unwrap();
            assert_eq!(casimir_adjoint_from_defining(&spec, &c_f).unwrap(), direct);
        }
    }

    #[test]
    fn invariant_relations() {
        for spec in [so(3), so(4), so(5), sp(2), sp(4)] {
            let n = spec.n();
            let ops = invariant_ops(&spec).unwrap();
            let (i, p, k) = (&ops.op_i, &ops.op_p, &ops.op_k);
            let p12p34 = permutation(n, 4, 1, 2)
                .unwrap()
                .compose(&permutation(n, 4, 3, 4).unwrap())
                .unwrap();
            let eps_sq = int(spec.epsilon() * spec.epsilon());
            assert_eq!(i.compose(&p12p34).unwrap().scale(eps_sq), *i);
            assert_eq!(p12p34.compose(i).unwrap(), *i);
            assert_eq!(p.compose(p).unwrap(), *i);
            assert_eq!(k.compose(p).unwrap(), *k);
            assert_eq!(p.compose(k).unwrap(), *k);
            let m = spec.m();
            assert_eq!(k.compose(k).unwrap(), k.scale(q(m * (m - 1), 2)), "{spec}");
        }
        let ops = invariant_ops(&so(5)).unwrap();
        assert_eq!(
            ops.op_k.compose(&ops.op_k).unwrap(),
            ops.op_k.scale(int(10))
        );
    }

    #[test]
    fn split_parts_match_explicit_forms() {
        for spec in [so(3), so(4), so(5), so(6), sp(2), sp(4), sp(6)] {
            let b = CasimirBundle::new(&spec).unwrap();
            assert_eq!(b.c_plus, casimir_plus_explicit(&spec).unwrap(), "{spec} C+");
            assert_eq!(
                b.c_minus,
                casimir_minus_explicit(&spec).unwrap(),
                "{spec} C-"
            );
            assert_eq!(b.c_plus.add(&b.c_minus).unwrap(), b.c_ad);
        }
    }

    #[test]
    fn casimir_relations_with_p_and_k() {
        for spec in [so(3), so(5), sp(2), sp(4)] {
            let b = CasimirBundle::new(&spec).unwrap();
            assert!(b.c_ad.commutator(&b.op_p).unwrap().is_zero());
            let minus_k = b.op_k.scale(int(-1));
            assert_eq!(b.c_ad.compose(&b.op_k).unwrap(), minus_k);
            assert_eq!(b.op_k.compose(&b.c_ad).unwrap(), minus_k);
            assert!(b.c_plus.compose(&b.c_minus).unwrap().is_zero());
            assert!(b.c_minus.compose(&b.c_plus).unwrap().is_zero());
            assert_eq!(
                b.c_minus.compose(&b.c_minus).unwrap(),
                b.c_minus.scale(q(-1, 2))
            );
            assert_eq!(b.op_k.compose(&b.c_plus).unwrap(), minus_k);
        }
    }

    #[test]
    fn so5_casimir_is_traceless() {
        let b = CasimirBundle::new(&so(5)).unwrap();
        assert_eq!(b.c_plus.trace(), int(5));
        assert_eq!(b.c_minus.trace(), int(-5));
        assert_eq!(b.c_ad.trace(), zero());
    }

    #[test]
    fn adjoint_action_commutes_with_invariants() {
        for spec in [so(3), so(4), sp(2), sp(4)] {
            let b = CasimirBundle::new(&spec).unwrap();
            for (i, j) in generator_labels(&spec) {
                let act = adjoint_action(&spec, i, j).unwrap();
                assert!(act.commutator(&b.c_ad).unwrap().is_zero(), "{spec}");
                assert!(act.commutator(&b.op_k).unwrap().is_zero(), "{spec}");
            }
        }
    }

    #[test]
    fn adjoint_action_rejects_bad_labels() {
        assert!(matches!(
            adjoint_action(&so(4), 2, 1),
            Err(Error::InvalidGeneratorLabel { .. })
        ));
        assert!(matches!(
            adjoint_action(&so(4), 1, 1),
            Err(Error::InvalidGeneratorLabel { .. })
        ));
        assert!(adjoint_action(&sp(4), 1, 1).is_ok());
        assert!(adjoint_action(&sp(4), 0, 4).is_err());
    }
}
