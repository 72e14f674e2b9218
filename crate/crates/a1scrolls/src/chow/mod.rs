//! Chow cohomology rings of projectivized sums of line bundles over
//! projective space.
//!
//! For a base `P^m` and twists `a_1, ..., a_r` the ring of
//! `P(O(a_1) + ... + O(a_r))` is the quotient `Z[x, t] / <x^{m+1}, P(x, t)>`
//! where `P` is the Chern polynomial of the bundle, `t` the relative
//! hyperplane class.  Since the bundle splits, `P(x, t)` is the product of
//! the linear factors `t + a_j * x`, equivalently the sum of
//! `e_i(a) * x^i * t^{r-i}` over the elementary symmetric functions `e_i`.
//!
//! Monomials `x^i * t^j` with `i <= m`, `j <= r-1` form a basis of the
//! quotient; `normal_form` rewrites any polynomial onto that basis.  The
//! degree map reads off the coefficient of the fundamental monomial
//! `x^m * t^{r-1}`, the unique basis monomial in top degree `m + r - 1`.
//!
//! Note on presentations: the relation `P` is displayed with every term
//! divisible by `x^{m+1}` already removed, and its degree in `t` always
//! equals the number of summands `r`.  So a rank-2 bundle over `P^1` has
//! relations `<x^2, t^2 + (a_1+a_2)*x*t>`, a rank-3 one
//! `<x^2, t^3 + (a_1+a_2+a_3)*x*t^2>`.

pub mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub use poly::{IntPoly, Monomial};

/// Errors from bundle construction and ring operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChowError {
    /// Bundle parameters outside the supported family.
    InvalidBundle(String),
    /// Index out of range for a symmetric-function query.
    SymmetricIndex { index: usize, len: usize },
    /// Input to the degree map is not homogeneous of top degree.
    NotTopDegree { expected: u32, found: String },
}

impl fmt::Display for ChowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChowError::InvalidBundle(msg) => write!(f, "invalid bundle: {msg}"),
            ChowError::SymmetricIndex { index, len } => {
                write!(f, "symmetric function index {index} out of range 0..={len}")
            }
            ChowError::NotTopDegree { expected, found } => {
                write!(
                    f,
                    "degree map needs homogeneous input of degree {expected}, got {found}"
                )
            }
        }
    }
}

impl std::error::Error for ChowError {}

/// A sum of line bundles `O(a_1) + ... + O(a_r)` over `P^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BundleSpec {
    m: u32,
    twists: Vec<i64>,
}

impl BundleSpec {
    /// Requires `m >= 1` and at least two summands.
    pub fn new(m: u32, twists: Vec<i64>) -> Result<Self, ChowError> {
        if m < 1 {
            return Err(ChowError::InvalidBundle(format!(
                "base dimension must be >= 1, got {m}"
            )));
        }
        if twists.len() < 2 {
            return Err(ChowError::InvalidBundle(format!(
                "need at least 2 line-bundle summands, got {}",
                twists.len()
            )));
        }
        Ok(BundleSpec { m, twists })
    }

    pub fn base_dim(&self) -> u32 {
        self.m
    }

    pub fn rank(&self) -> u32 {
        self.twists.len() as u32
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// Dimension of the projectivized total space, `m + r - 1`.
    pub fn total_dim(&self) -> u32 {
        self.m + self.rank() - 1
    }
}

/// `e_i(values)`, the elementary symmetric function; `e_0 = 1`.
pub fn elementary_symmetric(values: &[i64], i: usize) -> Result<BigInt, ChowError> {
    if i > values.len() {
        return Err(ChowError::SymmetricIndex {
            index: i,
            len: values.len(),
        });
    }
    // e[k] after processing a prefix holds e_k of that prefix.
    let mut e = vec![BigInt::zero(); i + 1];
    e[0] = BigInt::one();
    for &v in values {
        for k in (1..=i).rev() {
            let add = &e[k - 1] * BigInt::from(v);
            e[k] += add;
        }
    }
    Ok(e[i].clone())
}

/// The Chern polynomial `sum_i e_i(a) * x^i * t^{r-i}` of the split bundle;
/// monic of degree `r` in `t`, homogeneous of total degree `r`.
pub fn chern_polynomial(spec: &BundleSpec) -> IntPoly {
    let r = spec.rank();
    let mut p = IntPoly::zero();
    for i in 0..=r {
        let e = elementary_symmetric(spec.twists(), i as usize).expect("index bounded by rank");
        p.add_term(Monomial::new(i, r - i), e);
    }
    p
}

/// The Chow cohomology ring of a projectivized sum of line bundles,
/// presented by the two rewriting rules `x^{m+1} -> 0` and
/// `t^r -> -(c_1*x*t^{r-1} + ... + c_r*x^r)`.
///
/// Immutable after construction; all operations are pure functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowRing {
    m: u32,
    r: u32,
    chern: Vec<BigInt>,
}

/// Builds the ring of a bundle spec.
pub fn build_ring(spec: &BundleSpec) -> ChowRing {
    let r = spec.rank();
    let chern = (1..=r as usize)
        .map(|i| elementary_symmetric(spec.twists(), i).expect("index bounded by rank"))
        .collect();
    ChowRing {
        m: spec.base_dim(),
        r,
        chern,
    }
}

impl ChowRing {
    pub fn base_dim(&self) -> u32 {
        self.m
    }

    pub fn rank(&self) -> u32 {
        self.r
    }

    /// Chern classes `c_1, ..., c_r` as integers under `Pic(P^m) = Z`.
    pub fn chern_classes(&self) -> &[BigInt] {
        &self.chern
    }

    /// Dimension of the underlying variety, `m + r - 1`.
    pub fn total_dim(&self) -> u32 {
        self.m + self.r - 1
    }

    /// The image of the Chern polynomial with terms killed by `x^{m+1}`
    /// removed; this is the second displayed relation.
    pub fn reduced_relation(&self) -> IntPoly {
        let mut p = IntPoly::monomial(1, 0, self.r);
        for (i, c) in self.chern.iter().enumerate() {
            let xe = (i + 1) as u32;
            if xe <= self.m {
                p.add_term(Monomial::new(xe, self.r - xe), c.clone());
            }
        }
        p
    }

    /// Canonical text presentation, e.g. `Z[x,t]/<x^3, t^2 + 3*x*t>`.
    pub fn presentation_string(&self) -> String {
        format!("Z[x,t]/<x^{}, {}>", self.m + 1, self.reduced_relation())
    }

    /// Rewrites onto the monomial basis `x^i * t^j`, `i <= m`, `j <= r-1`.
    ///
    /// Highest `t`-powers are reduced first via
    /// `t^r = -(c_1*x*t^{r-1} + ... + c_r*x^r)`; terms acquiring an
    /// `x`-exponent above `m` are dropped.  The two rules have coprime
    /// leading monomials, so the result is independent of reduction order.
    pub fn normal_form(&self, p: &IntPoly) -> IntPoly {
        let mut current = p.clone();
        loop {
            let reducible: Vec<(Monomial, BigInt)> = current
                .terms()
                .filter(|(mono, _)| mono.t >= self.r || mono.x > self.m)
                .map(|(mono, c)| (*mono, c.clone()))
                .collect();
            if reducible.is_empty() {
                return current;
            }
            // Reduce the highest t-power present in this sweep.
            let target = reducible.iter().map(|(mono, _)| mono.t).max().unwrap();
            for (mono, c) in reducible {
                if mono.x > self.m {
                    current.add_term(mono, -c);
                } else if mono.t == target && mono.t >= self.r {
                    current.add_term(mono, -c.clone());
                    for (i, chern) in self.chern.iter().enumerate() {
                        let xe = mono.x + (i as u32) + 1;
                        if xe <= self.m {
                            current
                                .add_term(Monomial::new(xe, mono.t - 1 - i as u32), -(&c * chern));
                        }
                    }
                }
            }
        }
    }

    /// Product in the ring: polynomial product followed by `normal_form`.
    pub fn multiply(&self, p: &IntPoly, q: &IntPoly) -> IntPoly {
        self.normal_form(&(p * q))
    }

    /// Coefficient of the fundamental monomial `x^m * t^{r-1}` in the normal
    /// form of `p`.  Errors unless the normal form is homogeneous of top
    /// degree `m + r - 1` (the zero polynomial is accepted and maps to 0).
    pub fn degree(&self, p: &IntPoly) -> Result<BigInt, ChowError> {
        let top = self.total_dim();
        let nf = self.normal_form(p);
        if nf.is_zero() {
            return Ok(BigInt::zero());
        }
        match nf.homogeneous_degree() {
            Some(d) if d == top => Ok(nf.coeff(self.m, self.r - 1)),
            _ => Err(ChowError::NotTopDegree {
                expected: top,
                found: nf.to_string(),
            }),
        }
    }

    /// Rank of the degree-`d` graded piece: the number of basis monomials
    /// `x^i * t^j` with `i + j = d`.
    pub fn graded_rank(&self, d: u32) -> usize {
        (0..=self.m).filter(|&i| d >= i && d - i < self.r).count()
    }
}
