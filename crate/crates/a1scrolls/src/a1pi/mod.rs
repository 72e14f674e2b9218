//! Symbolic presentations of motivic homotopy sheaf groups.
//!
//! The table entries are exact for the spaces covered (projective spaces,
//! punctured affine spaces, `SL_n`, scrolls, projectivized split bundles,
//! and blow-ups of linear subspaces); everything outside the tables is an
//! [`expr::GroupExpr::Opaque`] placeholder with a structured tag, compared
//! only by tag.  Presentations are compared with [`isomorphic`], which
//! decides equality of canonical forms, not sheaf-level isomorphism.
//!
//! Not modeled here (deliberately, as registry-level notes only): the values
//! of the factor set behind `F1`'s central-extension structure (only the
//! tag `symbol` is recorded), sections of the `H1etMu` sheaves, the
//! cohomology groups housing Euler classes (only a trivial / nontrivial /
//! unknown status is tracked), and the contraction `F1_{-1} = Z + KMW(1)`.

pub mod expr;

use std::fmt;

pub use expr::{
    f1_central_extension, isomorphic, normalize_expr, parse_expr, GroupExpr, OpaqueTag, SpaceTag,
    TwistDescriptor,
};

use crate::scrolls::ScrollSpec;

/// Errors from table lookups and expression parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum A1PiError {
    /// Arguments outside the table's domain.
    Argument(String),
    /// Malformed expression text.
    Parse { pos: usize, msg: String },
}

impl fmt::Display for A1PiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            A1PiError::Argument(msg) => write!(f, "invalid argument: {msg}"),
            A1PiError::Parse { pos, msg } => write!(f, "parse error at position {pos}: {msg}"),
        }
    }
}

impl std::error::Error for A1PiError {}

/// Status of the Euler obstruction class of a rank-2 bundle.  Split bundles
/// always have trivial status; the cohomological construction itself is out
/// of scope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EulerStatus {
    Trivial,
    Nontrivial,
    Unknown,
}

/// The hypothesis on the base under which the projective-bundle rules hold.
/// The caller asserts it; it cannot be verified at this symbolic level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseHypothesis {
    /// The fundamental group of the base is a split torus.
    SplitTorusPi1,
    /// The bundle admits a homotopy section.
    HasHomotopySection,
}

/// Homotopy groups of `P^n`.
///
/// For `n >= 2`: `Gm` in degree 1, trivial strictly between 1 and `n`,
/// `KMW(n+1)` in degree `n`, opaque above.  For `n = 1`: `F1` in degree 1
/// and the (uncomputed) groups of punctured affine 2-space above, via the
/// covering `A^2\0 -> P^1`.
pub fn pi_projective_space(n: u32, i: u32) -> Result<GroupExpr, A1PiError> {
    if n < 1 || i < 1 {
        return Err(A1PiError::Argument(format!(
            "pi_projective_space needs n >= 1 and i >= 1, got n = {n}, i = {i}"
        )));
    }
    Ok(if n == 1 {
        match i {
            1 => GroupExpr::F1,
            _ => GroupExpr::opaque(SpaceTag::PuncturedAffine(2), i),
        }
    } else {
        match i {
            1 => GroupExpr::Gm,
            _ if i < n => GroupExpr::Trivial,
            _ if i == n => GroupExpr::KMW(n + 1),
            _ => GroupExpr::opaque(SpaceTag::ProjectiveSpace(n), i),
        }
    })
}

/// Homotopy groups of `A^n` minus the origin, `n >= 2`: the space is
/// `(n-2)`-connected, `KMW(n)` sits in degree `n - 1`, and higher groups are
/// opaque.
pub fn pi_punctured_affine(n: u32, i: u32) -> Result<GroupExpr, A1PiError> {
    if n < 2 || i < 1 {
        return Err(A1PiError::Argument(format!(
            "pi_punctured_affine needs n >= 2 and i >= 1, got n = {n}, i = {i}"
        )));
    }
    Ok(match i.cmp(&(n - 1)) {
        std::cmp::Ordering::Less => GroupExpr::Trivial,
        std::cmp::Ordering::Equal => GroupExpr::KMW(n),
        std::cmp::Ordering::Greater => GroupExpr::opaque(SpaceTag::PuncturedAffine(n), i),
    })
}

/// Fundamental group of `SL_n`: `KMW(2)` for `n = 2`, `KM(2)` for `n >= 3`.
pub fn pi1_sln(n: u32) -> Result<GroupExpr, A1PiError> {
    if n < 2 {
        return Err(A1PiError::Argument(format!(
            "pi1_sln needs n >= 2, got {n}"
        )));
    }
    Ok(if n == 2 {
        GroupExpr::KMW(2)
    } else {
        GroupExpr::KM(2)
    })
}

/// Fundamental group of the projectivization of a rank-`rank` bundle over a
/// base with fundamental group `base_pi1`, under the stated hypothesis.
///
/// Rank at least 3 gives `Gm x base_pi1` regardless of twist.  Rank 2 with a
/// trivial Euler class gives the split extension of `base_pi1` by `F1`
/// twisted by the parity of `det(E)`; with a nontrivial or unknown Euler
/// class the rule does not apply and an opaque placeholder is returned.
pub fn pi1_projective_bundle(
    base_pi1: &GroupExpr,
    rank: u32,
    det_mod2: u8,
    euler: EulerStatus,
    _hypothesis: BaseHypothesis,
) -> Result<GroupExpr, A1PiError> {
    if rank < 2 {
        return Err(A1PiError::Argument(format!(
            "projective bundle needs rank >= 2, got {rank}"
        )));
    }
    Ok(if rank >= 3 {
        normalize_expr(&GroupExpr::product([GroupExpr::Gm, base_pi1.clone()]))
    } else {
        match euler {
            EulerStatus::Trivial => normalize_expr(&GroupExpr::split_ext(
                GroupExpr::F1,
                base_pi1.clone(),
                TwistDescriptor::parity(det_mod2 as i64),
            )),
            EulerStatus::Nontrivial | EulerStatus::Unknown => {
                GroupExpr::opaque(SpaceTag::EulerObstructed, 1)
            }
        }
    })
}

/// Fundamental group of a scroll, normalized.
///
/// Rank at least 3: `Gm x F1` over `P^1`, `Gm x Gm` over higher bases.
/// Rank 2 (the bundle splits, so its Euler status is trivial): product or
/// parity-twisted split extension of `Gm` by `F1` according to the parity of
/// the twist sum.
pub fn pi1_scroll(spec: &ScrollSpec) -> GroupExpr {
    if spec.rank() >= 3 {
        if spec.base_dim() == 1 {
            normalize_expr(&GroupExpr::product([GroupExpr::Gm, GroupExpr::F1]))
        } else {
            GroupExpr::product([GroupExpr::Gm, GroupExpr::Gm])
        }
    } else {
        normalize_expr(&GroupExpr::split_ext(
            GroupExpr::F1,
            GroupExpr::Gm,
            TwistDescriptor::parity(spec.twist_sum()),
        ))
    }
}

/// Higher homotopy groups of a scroll, `i >= 2`: the product of the groups
/// of the fiber `P^{r-1}` and the base `P^m`, normalized.  Independent of
/// the twists.
pub fn pi_scroll(spec: &ScrollSpec, i: u32) -> Result<GroupExpr, A1PiError> {
    if i < 2 {
        return Err(A1PiError::Argument(format!(
            "pi_scroll covers i >= 2 (use pi1_scroll for i = 1), got i = {i}"
        )));
    }
    let fiber = pi_projective_space(spec.rank() - 1, i)?;
    let base = pi_projective_space(spec.base_dim(), i)?;
    Ok(normalize_expr(&GroupExpr::product([fiber, base])))
}

/// Fundamental group of the blow-up of a linear `P^{n-k}` inside `P^n`,
/// `n >= 3`, `1 <= k <= n`.
///
/// The blow-up is the projectivization of `O(1) + O^{n-k+1}` over `P^{k-1}`:
/// `k = n` (a point) gives the parity-twisted extension, `k = 2` the
/// product `F1 x Gm`, `2 < k < n` the torus `Gm x Gm`.  For `k = 1` the
/// center is a divisor and blowing up changes nothing, so the answer is the
/// fundamental group `Gm` of `P^n` itself.
pub fn pi1_blowup_linear(n: u32, k: u32) -> Result<GroupExpr, A1PiError> {
    if n < 3 {
        return Err(A1PiError::Argument(format!(
            "pi1_blowup_linear needs n >= 3, got n = {n}"
        )));
    }
    if k < 1 || k > n {
        return Err(A1PiError::Argument(format!(
            "blow-up center P^(n-k) needs 1 <= k <= n, got k = {k}"
        )));
    }
    Ok(if k == n {
        GroupExpr::split_ext(GroupExpr::F1, GroupExpr::Gm, TwistDescriptor::Parity(1))
    } else if k == 2 {
        GroupExpr::product([GroupExpr::F1, GroupExpr::Gm])
    } else if k > 2 {
        GroupExpr::product([GroupExpr::Gm, GroupExpr::Gm])
    } else {
        GroupExpr::Gm
    })
}

/// The table `[(1, pi1), (2, pi_2), ..., (i_max, pi_{i_max})]` for a scroll,
/// all entries normalized.
pub fn homotopy_table(spec: &ScrollSpec, i_max: u32) -> Vec<(u32, GroupExpr)> {
    let mut rows = vec![(1, pi1_scroll(spec))];
    for i in 2..=i_max {
        rows.push((i, pi_scroll(spec, i).expect("i >= 2")));
    }
    rows
}

/// Known Euler-class statuses, recorded as registry entries.
pub mod registry {
    use super::EulerStatus;

    /// A bundle whose Euler-class status is known.
    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct EulerClassEntry {
        pub bundle: &'static str,
        pub base: &'static str,
        pub status: EulerStatus,
        pub note: &'static str,
    }

    /// The registry: split bundles are always trivial; the tautological
    /// rank-2 subbundle on the projective plane (whose projectivization is
    /// the full flag threefold) is the standard obstructed example, where
    /// the rank-2 presentation rule fails.
    pub const KNOWN_EULER_CLASSES: &[EulerClassEntry] = &[
        EulerClassEntry {
            bundle: "any direct sum of line bundles",
            base: "any",
            status: EulerStatus::Trivial,
            note: "split bundles always carry a trivial obstruction class",
        },
        EulerClassEntry {
            bundle: "tautological rank-2 subbundle",
            base: "P^2",
            status: EulerStatus::Nontrivial,
            note: "its projectivization is the full flag threefold SL_3/B; \
                   the fundamental group is an extension by a proper quotient \
                   (KM(2), not KMW(2)) and the rank-2 rule does not apply",
        },
    ];
}
