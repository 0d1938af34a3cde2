//! Universal dimensions and Casimir values of the six pieces of `ad ⊗ ad`
//! in terms of Vogel parameters, and their match with computed projectors.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{cartan_type, vogel_point, AlgebraSpec, CartanType, Family, VogelPoint};
use crate::error::{Error, Result};
use crate::projectors::ProjectorSystem;
use crate::rational::{self, fmt_pq, int, q, Rational};
use crate::report::VerificationRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    T0,
    Y2Alpha,
    Y2Beta,
    Y2Gamma,
    Ad,
    X2,
}

impl Piece {
    pub const ALL: [Piece; 6] = [
        Piece::T0,
        Piece::Y2Alpha,
        Piece::Y2Beta,
        Piece::Y2Gamma,
        Piece::Ad,
        Piece::X2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Piece::T0 => "T0",
            Piece::Y2Alpha => "Y2alpha",
            Piece::Y2Beta => "Y2beta",
            Piece::Y2Gamma => "Y2gamma",
            Piece::Ad => "ad",
            Piece::X2 => "X2",
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn prod(xs: &[Rational]) -> Rational {
    xs.iter().fold(int(1), |acc, &x| rational::mul(acc, x))
}

fn ratio(num: Rational, den: Rational) -> Option<Rational> {
    (!den.is_zero()).then(|| rational::div(num, den))
}

/// `-(3x-2t)(y-2t)(z-2t) t (y+t)(z+t) / (x²(x-y) y (x-z) z)`
fn y2_dim(x: Rational, y: Rational, z: Rational, t: Rational) -> Option<Rational> {
    let two_t = t * int(2);
    let num = -prod(&[x * int(3) - two_t, y - two_t, z - two_t, t, y + t, z + t]);
    let den = prod(&[x, x, x - y, y, x - z, z]);
    ratio(num, den)
}

/// `(α-2t)(β-2t)(γ-2t)/(αβγ)`
pub fn adjoint_dim(p: &VogelPoint) -> Option<Rational> {
    let two_t = p.t * int(2);
    ratio(
        prod(&[p.alpha - two_t, p.beta - two_t, p.gamma - two_t]),
        prod(&[p.alpha, p.beta, p.gamma]),
    )
}

/// Dimension of `piece`, or `None` where a denominator vanishes.
pub fn piece_dim(p: &VogelPoint, piece: Piece) -> Option<Rational> {
    let (a, b, g, t) = (p.alpha, p.beta, p.gamma, p.t);
    match piece {
        Piece::T0 => Some(int(1)),
        Piece::Y2Alpha => y2_dim(a, b, g, t),
        Piece::Y2Beta => y2_dim(b, a, g, t),
        Piece::Y2Gamma => y2_dim(g, b, a, t),
        Piece::Ad => adjoint_dim(p),
        Piece::X2 => adjoint_dim(p).map(|d| d * (d - int(3)) / int(2)),
    }
}

/// Quadratic Casimir of `piece` normalised to `c₂(ad) = 1`.
pub fn piece_c2(p: &VogelPoint, piece: Piece) -> Option<Rational> {
    let two = int(2);
    match piece {
        Piece::T0 => Some(Rational::zero()),
        Piece::Y2Alpha => ratio(p.alpha, p.t).map(|r| two - r),
        Piece::Y2Beta => ratio(p.beta, p.t).map(|r| two - r),
        Piece::Y2Gamma => ratio(p.gamma, p.t).map(|r| two - r),
        Piece::Ad => Some(int(1)),
        Piece::X2 => Some(two),
    }
}

/// Split-Casimir eigenvalue `½c₂ - 1` on a piece of `ad ⊗ ad`.
pub fn c_hat(c2: Rational) -> Rational {
    c2 * q(1, 2) - int(1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceData {
    pub piece: Piece,
    pub dim: Rational,
    pub c2: Rational,
    pub c_hat: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalDecomposition {
    pub point: VogelPoint,
    pub pieces: Vec<PieceData>,
}

impl UniversalDecomposition {
    pub fn get(&self, piece: Piece) -> &PieceData {
        self.pieces
            .iter()
            .find(|d| d.piece == piece)
            .expect("every piece is present")
    }
}

pub fn universal_decomposition(point: &VogelPoint) -> Result<UniversalDecomposition> {
    let pieces = Piece::ALL
        .iter()
        .map(|&piece| {
            let dim = piece_dim(point, piece);
            let c2 = piece_c2(point, piece);
            match (dim, c2) {
                (Some(dim), Some(c2)) => Ok(PieceData {
                    piece,
                    dim,
                    c2,
                    c_hat: c_hat(c2),
                }),
                _ => Err(Error::DegenerateVogelPoint(format!(
                    "{} at (alpha={}, beta={}, gamma={})",
                    piece,
                    fmt_pq(&point.alpha),
                    fmt_pq(&point.beta),
                    fmt_pq(&point.gamma)
                ))),
            }
        })
        .collect::<Result<_>>()?;
    Ok(UniversalDecomposition {
        point: *point,
        pieces,
    })
}

/// Generic projector label → piece, by Cartan type.
pub fn correspondence_for(kind: CartanType) -> Result<[(&'static str, Piece); 6]> {
    let (p4, p5) = match kind {
        CartanType::B(_) | CartanType::D(_) => (Piece::Y2Alpha, Piece::Y2Beta),
        CartanType::C(_) => (Piece::Y2Beta, Piece::Y2Alpha),
        CartanType::A(_) => return Err(Error::UnsupportedFamily(kind.to_string())),
    };
    Ok([
        ("proj1", Piece::X2),
        ("proj2", Piece::Ad),
        ("proj3", Piece::T0),
        ("proj4", p4),
        ("proj5", p5),
        ("proj6", Piece::Y2Gamma),
    ])
}

pub fn correspondence(spec: &AlgebraSpec) -> Result<[(&'static str, Piece); 6]> {
    correspondence_for(cartan_type(spec))
}

/// Refined `so(8)` labels with a single universal counterpart. The three
/// 35-dimensional pieces sit where `β = γ` makes the formulas singular.
pub const SO8_CORRESPONDENCE: [(&str, Piece); 4] = [
    ("proj1p", Piece::X2),
    ("proj2p", Piece::Ad),
    ("proj3p", Piece::T0),
    ("proj5p", Piece::Y2Alpha),
];

/// Why the universal decomposition does not apply piece by piece, if it
/// does not.
pub fn vogel_exception(spec: &AlgebraSpec) -> Option<&'static str> {
    match (spec.family(), spec.n()) {
        (Family::Orthogonal, 3) | (Family::Symplectic, 2) => {
            Some("sl(2): three of the six pieces vanish")
        }
        (Family::Orthogonal, 4) => Some("so(4) is not simple (gamma = 0)"),
        (Family::Orthogonal, 6) => Some("so(6) = sl(4): X2 is reducible"),
        (Family::Orthogonal, 8) => Some("so(8): beta = gamma, triality"),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Skip the exceptional algebras entirely.
    Strict,
    /// Compare every piece whose formulas are defined.
    Lenient,
}

/// Projector traces against universal dimensions and projector eigenvalues
/// against `½c₂ - 1`, piece by piece.
pub fn cross_check(system: &ProjectorSystem, mode: CheckMode) -> VerificationRecord {
    let spec = system.spec;
    let mut rec = VerificationRecord::new(spec.to_string());
    let exception = vogel_exception(&spec);
    if let (CheckMode::Strict, Some(reason)) = (mode, exception) {
        rec.skip("vogel_cross_check", "dim = Vogel dim, a = c2/2 - 1", reason);
        return rec;
    }
    let point = vogel_point(&spec);
    let pairs: Vec<(&str, Piece)> = if spec.is_so8() {
        SO8_CORRESPONDENCE.to_vec()
    } else {
        match correspondence(&spec) {
            Ok(c) => c.to_vec(),
            Err(e) => {
                rec.record(
                    "vogel_correspondence",
                    "plumbing",
                    false,
                    format!("error: {e}"),
                );
                return rec;
            }
        }
    };
    for (label, piece) in pairs {
        let Some(item) = system.get(label) else {
            rec.record(
                &format!("vogel_{label}"),
                "plumbing",
                false,
                "projector missing from system",
            );
            continue;
        };
        let dim_name = format!("vogel_dim_{label}_{piece}");
        let dim_ref = "tr proj = Vogel dim";
        match piece_dim(&point, piece) {
            Some(d) => rec.record_value_eq(&dim_name, dim_ref, item.operator.trace(), d),
            None => rec.skip(
                &dim_name,
                dim_ref,
                format!("{piece} dimension undefined here"),
            ),
        }
        let ev_name = format!("vogel_eigenvalue_{label}_{piece}");
        let ev_ref = "a = c2/2 - 1";
        match (piece_c2(&point, piece), item.eigenvalue) {
            (Some(c2), Some(ev)) => rec.record_value_eq(&ev_name, ev_ref, ev, c_hat(c2)),
            _ => rec.skip(
                &ev_name,
                ev_ref,
                format!("{piece} Casimir value undefined here"),
            ),
        }
    }
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_spec, vogel_point_for};
    use crate::projectors::{expected_dims, generic_roots};
    use proptest::prelude::*;

    fn spec(f: Family, n: usize) -> AlgebraSpec {
        make_spec(f, n).unwrap()
    }

    fn dims_of(d: &UniversalDecomposition, pieces: &[Piece]) -> Vec<Rational> {
        pieces.iter().map(|&p| d.get(p).dim).collect()
    }

    #[test]
    fn so7_pieces() {
        let d = universal_decomposition(&vogel_point(&spec(Family::Orthogonal, 7))).unwrap();
        use Piece::*;
        assert_eq!(
            dims_of(&d, &[Ad, X2, Y2Alpha, Y2Beta, Y2Gamma, T0]),
            [21, 189, 168, 35, 27, 1].map(int).to_vec()
        );
        assert_eq!(d.get(Y2Alpha).c_hat, q(1, 5));
    }

    #[test]
    fn sp6_pieces() {
        let d = universal_decomposition(&vogel_point(&spec(Family::Symplectic, 6))).unwrap();
        use Piece::*;
        assert_eq!(
            dims_of(&d, &[Y2Beta, Y2Alpha, Y2Gamma]),
            [90, 126, 14].map(int).to_vec()
        );
        let c2: Vec<Rational> = [T0, Y2Alpha, Y2Beta, Y2Gamma]
            .iter()
            .map(|&p| d.get(p).c2)
            .collect();
        assert_eq!(c2, vec![int(0), q(5, 2), q(7, 4), q(3, 4)]);
        assert_eq!(d.get(Ad).c_hat, q(-1, 2));
        assert_eq!(d.get(X2).c_hat, int(0));
    }

    #[test]
    fn correspondence_rows() {
        let c = correspondence(&spec(Family::Orthogonal, 9)).unwrap();
        assert_eq!(c[3], ("proj4", Piece::Y2Alpha));
        let c = correspondence(&spec(Family::Symplectic, 8)).unwrap();
        assert_eq!(c[3], ("proj4", Piece::Y2Beta));
        let c = correspondence(&spec(Family::Orthogonal, 10)).unwrap();
        assert_eq!(c[5], ("proj6", Piece::Y2Gamma));
        assert!(matches!(
            correspondence_for(CartanType::A(3)),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn degenerate_points_rejected() {
        assert!(matches!(
            universal_decomposition(&vogel_point(&spec(Family::Orthogonal, 8))),
            Err(Error::DegenerateVogelPoint(_))
        ));
        assert!(matches!(
            universal_decomposition(&vogel_point(&spec(Family::Orthogonal, 4))),
            Err(Error::DegenerateVogelPoint(_))
        ));
    }

    /// Formula-level agreement with the ad⊗ad dimension polynomials and the
    /// roots, for every non-exceptional classical spec up to rank 12.
    #[test]
    fn universal_matches_dimension_polynomials() {
        let specs = (5..=12)
            .filter(|n| ![6, 8].contains(n))
            .map(|n| spec(Family::Orthogonal, n))
            .chain((4..=12).step_by(2).map(|n| spec(Family::Symplectic, n)));
        for s in specs {
            let d = universal_decomposition(&vogel_point(&s)).unwrap();
            let dims = expected_dims(s.m());
            let roots = generic_roots(s.m());
            for (idx, (_, piece)) in correspondence(&s).unwrap().iter().enumerate() {
                assert_eq!(d.get(*piece).dim, int(dims[idx]), "{s} {piece}");
                assert_eq!(d.get(*piece).c_hat, roots[idx], "{s} {piece}");
            }
            let total = d.pieces.iter().fold(int(0), |acc, p| acc + p.dim);
            let ad = int(s.adjoint_dim() as i64);
            assert_eq!(total, ad * ad);
        }
    }

    #[test]
    fn all_classical_points_give_integer_dims() {
        for r in 2..=12 {
            for kind in [CartanType::B(r), CartanType::C(r), CartanType::D(r + 2)] {
                let p = vogel_point_for(kind);
                if let Ok(d) = universal_decomposition(&p) {
                    for piece in &d.pieces {
                        assert!(piece.dim.is_integer() && piece.dim > int(0), "{kind}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn dims_are_scale_invariant(a in 1i64..9, b in 1i64..9, g in 1i64..9,
                                    num in 1i64..7, den in 1i64..7, neg in any::<bool>()) {
            let p = VogelPoint::new(int(-a), int(b), int(g + 10));
            let lambda = q(if neg { -num } else { num }, den);
            let s = VogelPoint::new(p.alpha * lambda, p.beta * lambda, p.gamma * lambda);
            for piece in Piece::ALL {
                prop_assert_eq!(piece_dim(&p, piece), piece_dim(&s, piece));
                prop_assert_eq!(piece_c2(&p, piece), piece_c2(&s, piece));
            }
        }

        #[test]
        fn dim_multiset_is_permutation_invariant(a in 1i64..9, b in 1i64..9, g in 1i64..9) {
            let (x, y, z) = (int(-a), int(b), int(b + g));
            let sorted = |p: VogelPoint| {
                let mut v: Vec<Option<Rational>> = Piece::ALL.iter().map(|&pc| piece_dim(&p, pc)).collect();
                v.sort();
                v
            };
            let base = sorted(VogelPoint::new(x, y, z));
            for (u, v, w) in [(y, x, z), (z, y, x), (x, z, y), (y, z, x), (z, x, y)] {
                prop_assert_eq!(&sorted(VogelPoint::new(u, v, w)), &base);
            }
        }
    }
}
