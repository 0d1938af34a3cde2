//! Characteristic identities for the adjoint split Casimir and the projectors
//! onto its eigenspaces in `ad ⊗ ad`.
//!
//! Generic `M` gives six projectors built from `𝐈, 𝐏, 𝐊, Ĉ₊, Ĉ₊², Ĉ₋`.
//! At `M = 8` two roots collide and the closed forms are used instead; the
//! resulting 105-dimensional block is split further with the ε-tensor into
//! seven primitive projectors.

use num_traits::Zero;

use crate::algebra::AlgebraSpec;
use crate::casimir::{pair_projector, CasimirBundle};
use crate::error::{Error, Result};
use crate::poly::{lagrange_basis, Poly};
use crate::rational::{self, as_integer, fmt_pq, int, one, q, zero, Rational};
use crate::report::VerificationRecord;
use crate::tensorspace::{
    antisymmetrizer, contraction, epsilon_operator, identity, linear_combination, permutation,
    SparseOperator,
};

/// Monic coefficients (lowest degree first) of the degree-6 identity for
/// `Ĉ_ad` at parameter `m`.
pub fn char_coefficients(m: i64) -> Vec<Rational> {
    let d = m - 2;
    let d2 = d * d;
    let d3 = d2 * d;
    vec![
        zero(),
        q(-(m - 4), 2 * d3),
        q(m * m - 16 * m + 40, 4 * d3),
        q(m * m * m - 3 * m * m - 22 * m + 56, 4 * d3),
        q(5 * m * m - 18 * m + 4, 4 * d2),
        int(2),
        one(),
    ]
}

/// `a₁..a₆`: `0, -½, -1, 1/(M-2), -2/(M-2), (4-M)/(2(M-2))`.
pub fn generic_roots(m: i64) -> [Rational; 6] {
    let d = m - 2;
    [
        zero(),
        q(-1, 2),
        int(-1),
        q(1, d),
        q(-2, d),
        q(4 - m, 2 * d),
    ]
}

/// Roots of the degree-5 identity at `so(8)`.
pub fn so8_roots() -> [Rational; 5] {
    [zero(), q(-1, 2), int(-1), q(-1, 3), q(1, 6)]
}

/// Dimensions of the six eigenspaces as polynomials in `m`.
pub fn expected_dims(m: i64) -> [i64; 6] {
    [
        m * (m - 1) * (m + 2) * (m - 3) / 8,
        m * (m - 1) / 2,
        1,
        m * (m + 1) * (m + 2) * (m - 3) / 12,
        m * (m - 1) * (m - 2) * (m - 3) / 24,
        (m - 1) * (m + 2) / 2,
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharIdentity {
    /// Monic, lowest degree first.
    pub coefficients: Vec<Rational>,
    pub roots: Vec<Rational>,
}

impl CharIdentity {
    pub fn polynomial(&self) -> Poly {
        Poly::new(self.coefficients.clone())
    }
}

/// `X⁰ = 𝐈, X¹, …, X^max` for an operator `X` supported on the image of `𝐈`.
#[derive(Debug, Clone)]
pub struct OperatorPowers {
    powers: Vec<SparseOperator>,
}

impl OperatorPowers {
    pub fn new(base: &SparseOperator, unit: &SparseOperator, max: usize) -> Result<Self> {
        let mut powers = vec![unit.clone()];
        if max >= 1 {
            powers.push(base.clone());
        }
        for k in 2..=max {
            let next = powers[k - 1].compose(base)?;
            powers.push(next);
        }
        Ok(OperatorPowers { powers })
    }

    pub fn max_degree(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn get(&self, k: usize) -> &SparseOperator {
        &self.powers[k]
    }

    pub fn evaluate(&self, poly: &Poly) -> Result<SparseOperator> {
        let Some(degree) = poly.degree() else {
            let unit = &self.powers[0];
            return Ok(SparseOperator::zero(unit.dim_site(), unit.rank()));
        };
        if degree > self.max_degree() {
            return Err(Error::DegreeTooHigh {
                degree,
                max: self.max_degree(),
            });
        }
        let terms: Vec<(Rational, &SparseOperator)> =
            poly.coeffs().iter().copied().zip(&self.powers).collect();
        linear_combination(&terms)
    }
}

/// `Π (X - r𝐈)` evaluated by successive products, independent of any power
/// table.
pub fn evaluate_factorized(
    roots: &[Rational],
    base: &SparseOperator,
    unit: &SparseOperator,
) -> Result<SparseOperator> {
    let mut acc = unit.clone();
    for &r in roots {
        let factor = linear_combination(&[(one(), base), (-r, unit)])?;
        acc = acc.compose(&factor)?;
    }
    Ok(acc)
}

/// The degree-6 identity for `Ĉ_ad`, certified by exact evaluation on
/// `powers` (which must reach degree 6). At `so(8)` the degree-5 identity is
/// certified as well.
pub fn characteristic_identity(
    bundle: &CasimirBundle,
    powers: &OperatorPowers,
) -> Result<CharIdentity> {
    let m = bundle.spec.m();
    let identity = CharIdentity {
        coefficients: char_coefficients(m),
        roots: generic_roots(m).to_vec(),
    };
    if Poly::from_roots(&identity.roots) != identity.polynomial() {
        return Err(Error::IdentityViolation(format!(
            "expanded and factorized degree-6 polynomials differ at M={m}"
        )));
    }
    if !powers.evaluate(&identity.polynomial())?.is_zero() {
        return Err(Error::IdentityViolation(format!(
            "degree-6 polynomial does not annihilate C_ad for {}",
            bundle.spec
        )));
    }
    if bundle.spec.is_so8() {
        so8_identity(bundle, powers)?;
    }
    Ok(identity)
}

/// `Ĉ(Ĉ+½)(Ĉ+1)(Ĉ+⅓)(Ĉ-⅙) = 0` at `so(8)`.
pub fn so8_identity(bundle: &CasimirBundle, powers: &OperatorPowers) -> Result<CharIdentity> {
    if !bundle.spec.is_so8() {
        return Err(Error::WrongAlgebra(bundle.spec.to_string()));
    }
    let roots = so8_roots().to_vec();
    let poly = Poly::from_roots(&roots);
    if !powers.evaluate(&poly)?.is_zero() {
        return Err(Error::IdentityViolation(
            "degree-5 polynomial does not annihilate C_ad for so(8)".into(),
        ));
    }
    Ok(CharIdentity {
        coefficients: poly.coeffs().to_vec(),
        roots,
    })
}

/// `𝐈 K₁₃ (1 + ε P₂₄) 𝐈`
fn k13_sym24(spec: &AlgebraSpec, op_i: &SparseOperator) -> Result<SparseOperator> {
    let k13 = contraction(spec, 4, 1, 3)?;
    let p24 = permutation(spec.n(), 4, 2, 4)?;
    let inner = linear_combination(&[(one(), &k13), (int(spec.epsilon()), &k13.compose(&p24)?)])?;
    op_i.compose(&inner)?.compose(op_i)
}

/// Exact checks of the polynomial relations for `Ĉ₋` and `Ĉ₊` that lead up to
/// the characteristic identity. Failures are recorded, never returned.
pub fn intermediate_identities(bundle: &CasimirBundle) -> VerificationRecord {
    let mut rec = VerificationRecord::new(bundle.spec.to_string());
    if let Err(e) = intermediate_checks(bundle, &mut rec) {
        rec.record(
            "intermediate_setup",
            "plumbing",
            false,
            format!("error: {e}"),
        );
    }
    rec
}

fn intermediate_checks(b: &CasimirBundle, rec: &mut VerificationRecord) -> Result<()> {
    let m = b.spec.m();
    let d = m - 2;
    let zero_op = || Ok(SparseOperator::zero(b.spec.n(), 4));

    let minus = OperatorPowers::new(&b.c_minus, &b.op_i, 4)?;
    rec.record_operator_eq(
        "c_minus_quadratic",
        "C-(C- + 1/2) = 0",
        linear_combination(&[(one(), minus.get(2)), (q(1, 2), minus.get(1))]),
        zero_op(),
    );
    for k in 2..=4usize {
        let coef = (1..k).fold(one(), |acc, _| acc * q(-1, 2));
        rec.record_operator_eq(
            &format!("c_minus_power_{k}"),
            "C-^k = (-1/2)^(k-1) C-",
            Ok(minus.get(k).clone()),
            Ok(b.c_minus.scale(coef)),
        );
    }

    let plus = OperatorPowers::new(&b.c_plus, &b.op_i, 6)?;
    let c = |k: usize| plus.get(k);
    let ipk = linear_combination(&[(one(), &b.op_i), (one(), &b.op_p), (one(), &b.op_k)])?;
    let ip = linear_combination(&[(one(), &b.op_i), (one(), &b.op_p)])?;

    rec.record_operator_eq(
        "c_plus_quadratic",
        "C+^2 = (I+P+K)/(M-2)^2 - C+/(M-2) + (M-8)/(2(M-2)^2) I K13(1+eps P24) I",
        Ok(c(2).clone()),
        k13_sym24(&b.spec, &b.op_i).and_then(|tail| {
            linear_combination(&[
                (q(1, d * d), &ipk),
                (q(-1, d), c(1)),
                (q(m - 8, 2 * d * d), &tail),
            ])
        }),
    );
    if m == 8 {
        rec.record_operator_eq(
            "c_plus_quadratic_so8",
            "C+^2 = -C+/6 + (I+P+K)/36",
            Ok(c(2).clone()),
            linear_combination(&[(q(-1, 6), c(1)), (q(1, 36), &ipk)]),
        );
    } else {
        rec.skip(
            "c_plus_quadratic_so8",
            "C+^2 = -C+/6 + (I+P+K)/36",
            format!("applies only at M=8, here M={m}"),
        );
    }

    let ip_minus_2k = linear_combination(&[(one(), &ip), (int(-2), &b.op_k)]);
    rec.record_operator_eq(
        "c_plus_cubic",
        "C+^3 = -C+^2/2 - (M-8)/(2(M-2)^2) C+ + (M-4)/(2(M-2)^3) (I+P-2K)",
        Ok(c(3).clone()),
        ip_minus_2k.and_then(|tail| {
            linear_combination(&[
                (q(-1, 2), c(2)),
                (q(-(m - 8), 2 * d * d), c(1)),
                (q(m - 4, 2 * d * d * d), &tail),
            ])
        }),
    );
    if m == 4 {
        rec.record_operator_eq(
            "c_plus_cubic_so4",
            "C+^3 = -C+^2/2 + C+/2",
            Ok(c(3).clone()),
            linear_combination(&[(q(-1, 2), c(2)), (q(1, 2), c(1))]),
        );
    } else {
        rec.skip(
            "c_plus_cubic_so4",
            "C+^3 = -C+^2/2 + C+/2",
            format!("applies only at M=4, here M={m}"),
        );
    }

    rec.record_operator_eq(
        "k_from_c_plus",
        "(M-4)/(M-2)^3 K = C+^4 + C+^3/2 + (M-8)/(2(M-2)^2) C+^2 - (M-4)/(M-2)^3 C+",
        Ok(b.op_k.scale(q(m - 4, d * d * d))),
        linear_combination(&[
            (one(), c(4)),
            (q(1, 2), c(3)),
            (q(m - 8, 2 * d * d), c(2)),
            (q(-(m - 4), d * d * d), c(1)),
        ]),
    );

    let quartic_tail = [
        (q((m + 1) * (m - 4), 2 * d * d), c(2)),
        (q(m * m - 12 * m + 24, 2 * d * d * d), c(1)),
    ];
    rec.record_operator_eq(
        "c_plus_quartic",
        "C+^4 + 3/2 C+^3 + (M+1)(M-4)/(2(M-2)^2) C+^2 + (M^2-12M+24)/(2(M-2)^3) C+ - (M-4)/(2(M-2)^3)(I+P) = 0",
        linear_combination(&[
            (one(), c(4)),
            (q(3, 2), c(3)),
            quartic_tail[0],
            quartic_tail[1],
            (q(-(m - 4), 2 * d * d * d), &ip),
        ]),
        zero_op(),
    );
    rec.record_operator_eq(
        "c_plus_quintic",
        "C+^5 + 3/2 C+^4 + (M+1)(M-4)/(2(M-2)^2) C+^3 + (M^2-12M+24)/(2(M-2)^3) C+^2 - (M-4)/(M-2)^3 C+ = 0",
        linear_combination(&[
            (one(), c(5)),
            (q(3, 2), c(4)),
            (q((m + 1) * (m - 4), 2 * d * d), c(3)),
            (q(m * m - 12 * m + 24, 2 * d * d * d), c(2)),
            (q(-(m - 4), d * d * d), c(1)),
        ]),
        zero_op(),
    );
    rec.record_operator_eq(
        "c_plus_sextic",
        "C+^6 = (7M^2-30M+44)/(4(M-2)^2) C+^4 + (3M^3-17M^2+30M-24)/(4(M-2)^3) C+^3 + (3M^2-32M+56)/(4(M-2)^3) C+^2 - 3(M-4)/(2(M-2)^3) C+",
        Ok(c(6).clone()),
        linear_combination(&[
            (q(7 * m * m - 30 * m + 44, 4 * d * d), c(4)),
            (q(3 * m * m * m - 17 * m * m + 30 * m - 24, 4 * d * d * d), c(3)),
            (q(3 * m * m - 32 * m + 56, 4 * d * d * d), c(2)),
            (q(-3 * (m - 4), 2 * d * d * d), c(1)),
        ]),
    );
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectorItem {
    pub label: String,
    pub operator: SparseOperator,
    /// `Ĉ_ad` eigenvalue on the image.
    pub eigenvalue: Option<Rational>,
    pub expected_dim: u64,
    /// Whether the image is irreducible.
    pub primitive: bool,
    /// Dimensions of the irreducible pieces of the image.
    pub irreducible_dims: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectorSystem {
    pub spec: AlgebraSpec,
    pub items: Vec<ProjectorItem>,
}

impl ProjectorSystem {
    pub fn get(&self, label: &str) -> Option<&ProjectorItem> {
        self.items.iter().find(|it| it.label == label)
    }

    pub fn operator(&self, label: &str) -> Result<&SparseOperator> {
        self.get(label)
            .map(|it| &it.operator)
            .ok_or_else(|| Error::UnknownProjector(label.to_string()))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.items.iter().map(|it| it.label.as_str()).collect()
    }

    /// One `PROJ label=… eigenvalue=… dim=… primitive=…` line per item; `dim`
    /// is the computed trace.
    pub fn manifest(&self) -> Result<String> {
        let dims = dimensions(self)?;
        let mut out = String::new();
        for (item, dim) in self.items.iter().zip(dims) {
            let ev = item
                .eigenvalue
                .as_ref()
                .map_or_else(|| "none".to_string(), fmt_pq);
            out.push_str(&format!(
                "PROJ label={} eigenvalue={} dim={} primitive={}\n",
                item.label,
                ev,
                dim,
                u8::from(item.primitive)
            ));
        }
        Ok(out)
    }
}

/// Exact traces of every projector in `system`, order preserved.
pub fn dimensions(system: &ProjectorSystem) -> Result<Vec<u64>> {
    system
        .items
        .iter()
        .map(|item| {
            let tr = item.operator.trace();
            as_integer(&tr)
                .and_then(|v| u64::try_from(v).ok())
                .ok_or_else(|| Error::NonIntegerTrace {
                    label: item.label.clone(),
                    value: fmt_pq(&tr),
                })
        })
        .collect()
}

/// `(primitive, irreducible dims)` for the six generic projectors.
fn generic_metadata(m: i64) -> Vec<(bool, Vec<u64>)> {
    expected_dims(m)
        .iter()
        .enumerate()
        .map(|(idx, &d)| {
            let d = d as u64;
            match (m, idx + 1) {
                _ if d == 0 => (false, Vec::new()),
                (6, 1) => (false, vec![45, 45]),
                (4, 2) => (false, vec![3, 3]),
                (4, 4) => (false, vec![5, 5]),
                _ => (true, vec![d]),
            }
        })
        .collect()
}

/// The six projectors written in `𝐈, 𝐏, 𝐊, Ĉ₊, Ĉ₊², Ĉ₋`. `c_plus_sq` is
/// `Ĉ₊²`, passed in so callers holding a power table avoid a product.
pub fn projectors_generic_with(
    bundle: &CasimirBundle,
    c_plus_sq: &SparseOperator,
) -> Result<ProjectorSystem> {
    let m = bundle.spec.m();
    if m == 8 {
        return Err(Error::NeedsSo8Refinement);
    }
    let b = bundle;
    let (i, p, k, cp, cm) = (&b.op_i, &b.op_p, &b.op_k, &b.c_plus, &b.c_minus);
    let h = q(1, 2);
    let (d, e) = (m - 2, m - 8);
    let operators = [
        linear_combination(&[(h, i), (-h, p), (int(2), cm)])?,
        cm.scale(int(-2)),
        k.scale(q(2, (m - 1) * m)),
        linear_combination(&[
            (q(2 * d, 3), c_plus_sq),
            (q(m, 3), cp),
            (q(m - 4, 3 * d), i),
            (q(m - 4, 3 * d), p),
            (q(-2 * (m - 4), 3 * d * (m - 1)), k),
        ])?,
        linear_combination(&[
            (q(-2 * d * d, 3 * e), c_plus_sq),
            (q(-d * (m - 6), 3 * e), cp),
            (q(m - 4, 6 * e), i),
            (q(m - 4, 6 * e), p),
            (q(2, 3 * e), k),
        ])?,
        linear_combination(&[
            (q(4 * d, e), c_plus_sq),
            (q(4, e), cp),
            (q(-4, d * e), i),
            (q(-4, d * e), p),
            (q(-8 * (m - 4), m * d * e), k),
        ])?,
    ];
    let roots = generic_roots(m);
    let dims = expected_dims(m);
    let items = operators
        .into_iter()
        .zip(generic_metadata(m))
        .enumerate()
        .map(
            |(idx, (operator, (primitive, irreducible_dims)))| ProjectorItem {
                label: format!("proj{}", idx + 1),
                operator,
                eigenvalue: Some(roots[idx]),
                expected_dim: dims[idx] as u64,
                primitive,
                irreducible_dims,
            },
        )
        .collect();
    Ok(ProjectorSystem {
        spec: bundle.spec,
        items,
    })
}

pub fn projectors_generic(bundle: &CasimirBundle) -> Result<ProjectorSystem> {
    if bundle.spec.m() == 8 {
        return Err(Error::NeedsSo8Refinement);
    }
    let sq = bundle.c_plus.compose(&bundle.c_plus)?;
    projectors_generic_with(bundle, &sq)
}

/// `⅙(1 - ε(P₁₄ + P₂₃ + P₁₃ + P₂₄) + P₁₃P₂₄) 𝐈`: the complete antisymmetrizer
/// for `so`, the complete symmetrizer for `sp`.
pub fn projector5_closed(spec: &AlgebraSpec) -> Result<SparseOperator> {
    let n = spec.n();
    let eps = int(-spec.epsilon());
    let p13 = permutation(n, 4, 1, 3)?;
    let p24 = permutation(n, 4, 2, 4)?;
    let inner = linear_combination(&[
        (one(), &identity(n, 4)),
        (eps, &permutation(n, 4, 1, 4)?),
        (eps, &permutation(n, 4, 2, 3)?),
        (eps, &p13),
        (eps, &p24),
        (one(), &p13.compose(&p24)?),
    ])?;
    Ok(inner.compose(&pair_projector(spec)?)?.scale(q(1, 6)))
}

/// `4/(M-2) 𝐈 K₁₃ [½(1 + ε P₂₄) - K₂₄/M] 𝐈`
pub fn projector6_closed(spec: &AlgebraSpec) -> Result<SparseOperator> {
    let n = spec.n();
    let m = spec.m();
    let h = q(1, 2);
    let bracket = linear_combination(&[
        (h, &identity(n, 4)),
        (h * int(spec.epsilon()), &permutation(n, 4, 2, 4)?),
        (q(-1, m), &contraction(spec, 4, 2, 4)?),
    ])?;
    let op_i = pair_projector(spec)?;
    let body = op_i
        .compose(&contraction(spec, 4, 1, 3)?)?
        .compose(&bracket)?
        .compose(&op_i)?;
    Ok(body.scale(q(4, m - 2)))
}

/// `A₄` and `E₄` on `V₈^{⊗4}`.
pub fn so8_tensors(spec: &AlgebraSpec) -> Result<(SparseOperator, SparseOperator)> {
    if !spec.is_so8() {
        return Err(Error::WrongAlgebra(spec.to_string()));
    }
    Ok((antisymmetrizer(8, 4), epsilon_operator(4)?))
}

/// Labels of the refined system, in output order.
pub const SO8_LABELS: [&str; 7] = [
    "proj1p",
    "proj2p",
    "proj3p",
    "proj6at8",
    "selfdual",
    "antiselfdual",
    "proj5p",
];

/// Seven primitive projectors for `so(8)`, dims `350, 28, 1, 35, 35, 35, 300`.
pub fn so8_system(bundle: &CasimirBundle) -> Result<ProjectorSystem> {
    let spec = bundle.spec;
    let (a4, e4) = so8_tensors(&spec)?;
    let b = bundle;
    let (i, p, k, cp, cm) = (&b.op_i, &b.op_p, &b.op_k, &b.c_plus, &b.c_minus);
    let h = q(1, 2);
    let proj4p = linear_combination(&[(q(1, 6), i), (q(1, 6), p), (int(-2), cp), (q(-1, 12), k)])?;
    let operators = [
        linear_combination(&[(h, i), (-h, p), (int(2), cm)])?,
        cm.scale(int(-2)),
        k.scale(q(1, 28)),
        proj4p.sub(&a4)?,
        linear_combination(&[(h, &a4), (h, &e4)])?,
        linear_combination(&[(h, &a4), (-h, &e4)])?,
        linear_combination(&[(q(1, 3), i), (q(1, 3), p), (int(2), cp), (q(1, 21), k)])?,
    ];
    let eigen = [
        zero(),
        q(-1, 2),
        int(-1),
        q(-1, 3),
        q(-1, 3),
        q(-1, 3),
        q(1, 6),
    ];
    let dims = [350u64, 28, 1, 35, 35, 35, 300];
    let items = operators
        .into_iter()
        .enumerate()
        .map(|(idx, operator)| ProjectorItem {
            label: SO8_LABELS[idx].to_string(),
            operator,
            eigenvalue: Some(eigen[idx]),
            expected_dim: dims[idx],
            primitive: true,
            irreducible_dims: vec![dims[idx]],
        })
        .collect();
    Ok(ProjectorSystem { spec, items })
}

/// The projector system appropriate for the spec: refined at `so(8)`,
/// generic otherwise.
pub fn projector_system(bundle: &CasimirBundle) -> Result<ProjectorSystem> {
    if bundle.spec.is_so8() {
        so8_system(bundle)
    } else {
        projectors_generic(bundle)
    }
}

/// `Π_{i≠j} (Ĉ - aᵢ)/(aⱼ - aᵢ)` for each root, from a power table reaching
/// `roots.len() - 1`. Roots must be distinct.
pub fn spectral_projectors(
    powers: &OperatorPowers,
    roots: &[Rational],
) -> Result<Vec<SparseOperator>> {
    (0..roots.len())
        .map(|j| powers.evaluate(&lagrange_basis(roots, j)))
        .collect()
}

/// Whether two of the six generic roots coincide at `m`.
pub fn roots_degenerate(m: i64) -> bool {
    let r = generic_roots(m);
    (0..6).any(|i| (i + 1..6).any(|j| r[i] == r[j]))
}

/// Sum of `Ĉ_ad` eigenvalues weighted by dimension; equals `tr Ĉ_ad`.
pub fn weighted_eigenvalue_sum(system: &ProjectorSystem) -> Rational {
    system.items.iter().fold(zero(), |acc, it| {
        let ev = it.eigenvalue.unwrap_or_else(Rational::zero);
        rational::add(acc, rational::mul(ev, int(it.expected_dim as i64)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_spec, Family};

    fn bundle(f: Family, n: usize) -> CasimirBundle {
        CasimirBundle::new(&make_spec(f, n).unwrap()).unwrap()
    }

    #[test]
    fn roots_at_sample_points() {
        assert_eq!(
            generic_roots(7),
            [zero(), q(-1, 2), int(-1), q(1, 5), q(-2, 5), q(-3, 10)]
        );
        assert_eq!(
            generic_roots(-6),
            [zero(), q(-1, 2), int(-1), q(-1, 8), q(1, 4), q(-5, 8)]
        );
        let r8 = generic_roots(8);
        assert_eq!((r8[4], r8[5]), (q(-1, 3), q(-1, 3)));
        assert!(roots_degenerate(4) && roots_degenerate(6) && roots_degenerate(8));
        assert!(!roots_degenerate(3) && !roots_degenerate(-2) && !roots_degenerate(5));
    }

    #[test]
    fn factorized_matches_expanded_for_all_supported_m() {
        for m in (3..=12).chain([-2, -4, -6, -8, -10, -12]) {
            assert_eq!(
                Poly::from_roots(&generic_roots(m)),
                Poly::new(char_coefficients(m)),
                "M={m}"
            );
        }
    }

    #[test]
    fn dims_polynomials() {
        assert_eq!(expected_dims(7), [189, 21, 1, 168, 35, 27]);
        assert_eq!(expected_dims(-6), [189, 21, 1, 90, 126, 14]);
        assert_eq!(expected_dims(3), [0, 3, 1, 0, 0, 5]);
        assert_eq!(expected_dims(-2), [0, 3, 1, 0, 5, 0]);
        for m in (3..=12).chain([-2, -4, -6, -8, -10, -12]) {
            let total: i64 = expected_dims(m).iter().sum();
            assert_eq!(total, m * m * (m - 1) * (m - 1) / 4);
        }
    }

    #[test]
    fn char_identity_so5_and_sp4() {
        for (f, n) in [(Family::Orthogonal, 5), (Family::Symplectic, 4)] {
            let b = bundle(f, n);
            let powers = OperatorPowers::new(&b.c_ad, &b.op_i, 6).unwrap();
            let id = characteristic_identity(&b, &powers).unwrap();
            assert_eq!(id.coefficients.len(), 7);
            let fact = evaluate_factorized(&id.roots, &b.c_ad, &b.op_i).unwrap();
            assert!(fact.is_zero());
        }
    }

    #[test]
    fn so8_identity_rejects_other_algebras() {
        let b = bundle(Family::Orthogonal, 5);
        let powers = OperatorPowers::new(&b.c_ad, &b.op_i, 2).unwrap();
        assert!(matches!(
            so8_identity(&b, &powers),
            Err(Error::WrongAlgebra(_))
        ));
        assert!(matches!(
            powers.evaluate(&Poly::new(char_coefficients(5))),
            Err(Error::DegreeTooHigh { degree: 6, max: 2 })
        ));
    }

    #[test]
    fn generic_system_so7() {
        let b = bundle(Family::Orthogonal, 7);
        let sys = projectors_generic(&b).unwrap();
        assert_eq!(dimensions(&sys).unwrap(), vec![189, 21, 1, 168, 35, 27]);
        for (x, y) in sys.items.iter().zip(&sys.items) {
            assert_eq!(x.operator.compose(&y.operator).unwrap(), x.operator);
        }
        assert_eq!(projector5_closed(&b.spec).unwrap(), sys.items[4].operator);
        assert_eq!(projector6_closed(&b.spec).unwrap(), sys.items[5].operator);
        assert_eq!(projector5_closed(&b.spec).unwrap(), antisymmetrizer(7, 4));
    }

    #[test]
    fn sp4_dims_and_spectral_agreement() {
        let b = bundle(Family::Symplectic, 4);
        let sys = projectors_generic(&b).unwrap();
        assert_eq!(dimensions(&sys).unwrap(), vec![35, 10, 1, 14, 35, 5]);
        let powers = OperatorPowers::new(&b.c_ad, &b.op_i, 5).unwrap();
        let spectral = spectral_projectors(&powers, &generic_roots(-4)).unwrap();
        for (item, s) in sys.items.iter().zip(&spectral) {
            assert_eq!(&item.operator, s, "{}", item.label);
        }
    }

    #[test]
    fn degenerate_small_cases() {
        let so3 = projectors_generic(&bundle(Family::Orthogonal, 3)).unwrap();
        assert_eq!(dimensions(&so3).unwrap(), vec![0, 3, 1, 0, 0, 5]);
        for label in ["proj1", "proj4", "proj5"] {
            assert!(so3.get(label).unwrap().operator.is_zero());
        }
        let sp2 = projectors_generic(&bundle(Family::Symplectic, 2)).unwrap();
        assert_eq!(dimensions(&sp2).unwrap(), vec![0, 3, 1, 0, 5, 0]);
        let so4 = projectors_generic(&bundle(Family::Orthogonal, 4)).unwrap();
        assert_eq!(dimensions(&so4).unwrap(), vec![9, 6, 1, 10, 1, 9]);
        assert!(!so4.get("proj2").unwrap().primitive);
        assert_eq!(so4.get("proj4").unwrap().irreducible_dims, vec![5, 5]);
    }

    #[test]
    fn generic_refuses_so8() {
        let b = bundle(Family::Orthogonal, 8);
        assert_eq!(
            projectors_generic(&b).unwrap_err(),
            Error::NeedsSo8Refinement
        );
        assert!(matches!(
            so8_system(&bundle(Family::Orthogonal, 6)),
            Err(Error::WrongAlgebra(_))
        ));
    }

    #[test]
    fn so8_refinement() {
        let b = bundle(Family::Orthogonal, 8);
        let sys = so8_system(&b).unwrap();
        assert_eq!(dimensions(&sys).unwrap(), vec![350, 28, 1, 35, 35, 35, 300]);
        let total = sys
            .items
            .iter()
            .try_fold(SparseOperator::zero(8, 4), |acc, it| acc.add(&it.operator));
        assert_eq!(total.unwrap(), b.op_i);
        assert_eq!(projector5_closed(&b.spec).unwrap().trace(), int(70));
        assert_eq!(projector6_closed(&b.spec).unwrap().trace(), int(35));
        assert_eq!(
            sys.get("proj6at8").unwrap().operator,
            projector6_closed(&b.spec).unwrap()
        );
        let manifest = sys.manifest().unwrap();
        assert!(manifest.starts_with("PROJ label=proj1p eigenvalue=0/1 dim=350 primitive=1\n"));
        assert_eq!(manifest.lines().count(), 7);
    }

    #[test]
    fn intermediate_identities_hold() {
        for (f, n) in [
            (Family::Orthogonal, 4),
            (Family::Orthogonal, 5),
            (Family::Orthogonal, 8),
            (Family::Symplectic, 2),
            (Family::Symplectic, 6),
        ] {
            let rec = intermediate_identities(&bundle(f, n));
            assert!(rec.passed(), "{}", rec.to_text());
        }
    }
}
