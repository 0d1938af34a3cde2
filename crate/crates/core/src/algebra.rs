//! Algebra specifications, the invariant metric on the defining space and the
//! classical rows of the Vogel-parameter table.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

pub const DEFAULT_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Orthogonal,
    Symplectic,
}

impl Family {
    pub fn epsilon(self) -> i64 {
        match self {
            Family::Orthogonal => 1,
            Family::Symplectic => -1,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Family::Orthogonal => "so",
            Family::Symplectic => "sp",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// Upper bound on the defining dimension. The rank-4 operators live on a space
/// of dimension `n^4`, so this is the knob that keeps exact products tractable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: DEFAULT_MAX_N,
        }
    }
}

/// A validated `so(n)` or `sp(n)` together with its sign `epsilon` and the
/// signed parameter `m = epsilon * n` that all universal formulas are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraSpec {
    family: Family,
    n: usize,
}

impl AlgebraSpec {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn epsilon(&self) -> i64 {
        self.family.epsilon()
    }

    pub fn m(&self) -> i64 {
        self.epsilon() * self.n as i64
    }

    pub fn m_rational(&self) -> Rational {
        int(self.m())
    }

    /// Dimension of the adjoint representation, `m(m-1)/2`.
    pub fn adjoint_dim(&self) -> usize {
        let m = self.m();
        (m * (m - 1) / 2) as usize
    }

    pub fn is_so8(&self) -> bool {
        self.family == Family::Orthogonal && self.n == 8
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}

pub fn make_spec(family: Family, n: usize) -> Result<AlgebraSpec> {
    make_spec_with(family, n, &Limits::default())
}

pub fn make_spec_with(family: Family, n: usize, limits: &Limits) -> Result<AlgebraSpec> {
    let min = match family {
        Family::Orthogonal => 3,
        Family::Symplectic => 2,
    };
    if family == Family::Symplectic && n % 2 == 1 {
        return Err(Error::SymplecticOddDimension(n));
    }
    if n < min {
        return Err(Error::DimensionTooSmall { family, n, min });
    }
    if n > limits.max_n {
        return Err(Error::DimensionTooLarge {
            n,
            max: limits.max_n,
        });
    }
    Ok(AlgebraSpec { family, n })
}

/// The invariant bilinear form `c` on the defining space and its inverse.
///
/// Every row of `c` (and of `c̄`) has exactly one nonzero entry, which the
/// operator builders exploit through [`MetricTensor::partner`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricTensor {
    dim: usize,
    entries: Vec<i64>,
    inverse_entries: Vec<i64>,
}

impl MetricTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c_ij`
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim + j]
    }

    /// `c̄^ij`
    pub fn c_inv(&self, i: usize, j: usize) -> i64 {
        self.inverse_entries[i * self.dim + j]
    }

    /// The unique `j` with `c_ij != 0`, and that entry.
    pub fn partner(&self, i: usize) -> (usize, i64) {
        let row = &self.entries[i * self.dim..(i + 1) * self.dim];
        row.iter()
            .enumerate()
            .find(|(_, v)| **v != 0)
            .map(|(j, v)| (j, *v))
            .expect("metric row without a nonzero entry")
    }

    /// The unique `j` with `c̄^ij != 0`, and that entry.
    pub fn inverse_partner(&self, i: usize) -> (usize, i64) {
        let row = &self.inverse_entries[i * self.dim..(i + 1) * self.dim];
        row.iter()
            .enumerate()
            .find(|(_, v)| **v != 0)
            .map(|(j, v)| (j, *v))
            .expect("metric row without a nonzero entry")
    }
}

/// Identity for `so(n)`; `[[0, I_r], [-I_r, 0]]` for `sp(2r)`.
pub fn metric(spec: &AlgebraSpec) -> MetricTensor {
    let n = spec.n();
    let mut entries = vec![0i64; n * n];
    let mut inverse_entries = vec![0i64; n * n];
    match spec.family() {
        Family::Orthogonal => {
            for i in 0..n {
                entries[i * n + i] = 1;
                inverse_entries[i * n + i] = 1;
            }
        }
        Family::Symplectic => {
            let r = n / 2;
            for i in 0..r {
                entries[i * n + i + r] = 1;
                entries[(i + r) * n + i] = -1;
                inverse_entries[i * n + i + r] = -1;
                inverse_entries[(i + r) * n + i] = 1;
            }
        }
    }
    MetricTensor {
        dim: n,
        entries,
        inverse_entries,
    }
}

/// Cartan type of a classical algebra, with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(r) => write!(f, "A{r}"),
            CartanType::B(r) => write!(f, "B{r}"),
            CartanType::C(r) => write!(f, "C{r}"),
            CartanType::D(r) => write!(f, "D{r}"),
        }
    }
}

pub fn cartan_type(spec: &AlgebraSpec) -> CartanType {
    let n = spec.n();
    match spec.family() {
        Family::Orthogonal if n % 2 == 1 => CartanType::B((n - 1) / 2),
        Family::Orthogonal => CartanType::D(n / 2),
        Family::Symplectic => CartanType::C(n / 2),
    }
}

/// Vogel parameters `(alpha, beta, gamma)` and `t = alpha + beta + gamma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VogelPoint {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub t: Rational,
}

impl VogelPoint {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        let t = crate::rational::add(crate::rational::add(alpha, beta), gamma);
        VogelPoint {
            alpha,
            beta,
            gamma,
            t,
        }
    }
}

/// Classical row of the Vogel table. `A_r` is accepted here for reference
/// only; nothing downstream builds operators for `sl(r+1)`.
pub fn vogel_point_for(kind: CartanType) -> VogelPoint {
    let (a, b, g) = match kind {
        CartanType::A(r) => (-2, 2, r as i64 + 1),
        CartanType::B(r) => (-2, 4, 2 * r as i64 - 3),
        CartanType::C(r) => (-2, 1, r as i64 + 2),
        CartanType::D(r) => (-2, 4, 2 * r as i64 - 4),
    };
    VogelPoint::new(int(a), int(b), int(g))
}

pub fn vogel_point(spec: &AlgebraSpec) -> VogelPoint {
    vogel_point_for(cartan_type(spec))
}
