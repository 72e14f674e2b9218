//! Scroll normalization and weak-equivalence classification verdicts.
//!
//! A scroll `F(m; a_1, ..., a_r)` is determined up to isomorphism by the
//! twists modulo a common shift (tensoring the bundle by a line bundle does
//! not change its projectivization) and reordering, so [`normalize`] shifts
//! the minimum twist to 0 and sorts.
//!
//! Two classification rules are implemented, each returning a [`Verdict`]
//! carrying a machine-checkable certificate:
//!
//! - [`classify_p1_base`]: scrolls over `P^1` of equal rank `r` are
//!   equivalent exactly when their twist sums agree modulo `r`;
//! - [`classify_f2`]: rank-2 scrolls over `P^2` are equivalent exactly when
//!   their twists agree after normalizing to `|a|`.
//!
//! [`crosscheck`] replays a three-dimensional comparison through the cubic
//! intersection-form engine under both orientation conventions and reports
//! whether the outcome is consistent with the classifier, surfacing (rather
//! than resolving) any divergence.

use std::fmt;

use serde::Serialize;

use crate::chow::{build_ring, BundleSpec, ChowError};
use crate::forms::{
    decide_equivalence, discriminant, intersection_cubic, invariant_profile, BinaryCubicForm,
    EquivVerdict, EquivalenceDecision, InvariantProfile,
};

/// Errors from classification entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScrollsError {
    /// Underlying bundle is invalid.
    Bundle(String),
    /// The requested rule does not apply to this pair of scrolls.
    NotComparable(String),
}

impl fmt::Display for ScrollsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScrollsError::Bundle(msg) => write!(f, "invalid scroll: {msg}"),
            ScrollsError::NotComparable(msg) => write!(f, "not comparable: {msg}"),
        }
    }
}

impl std::error::Error for ScrollsError {}

impl From<ChowError> for ScrollsError {
    fn from(e: ChowError) -> Self {
        ScrollsError::Bundle(e.to_string())
    }
}

/// A projectivized sum of line bundles `O(a_1) + ... + O(a_r)` over `P^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrollSpec {
    m: u32,
    twists: Vec<i64>,
}

impl ScrollSpec {
    /// Requires `m >= 1` and `r >= 2`; twists are kept as given (see
    /// [`normalize`]).
    pub fn new(m: u32, twists: Vec<i64>) -> Result<Self, ScrollsError> {
        BundleSpec::new(m, twists.clone())?;
        Ok(ScrollSpec { m, twists })
    }

    /// The rank-2 scroll `F(2; 0, a)` over the projective plane.
    pub fn f2(a: i64) -> Self {
        ScrollSpec {
            m: 2,
            twists: vec![0, a],
        }
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

    pub fn total_dim(&self) -> u32 {
        self.m + self.rank() - 1
    }

    pub fn twist_sum(&self) -> i64 {
        self.twists.iter().sum()
    }

    pub fn to_bundle(&self) -> BundleSpec {
        BundleSpec::new(self.m, self.twists.clone()).expect("validated at construction")
    }

    /// The scroll's Chow ring, for convenience.
    pub fn chow_ring(&self) -> crate::chow::ChowRing {
        build_ring(&self.to_bundle())
    }
}

impl fmt::Display for ScrollSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let twists: Vec<String> = self.twists.iter().map(|a| a.to_string()).collect();
        write!(f, "F({};{})", self.m, twists.join(","))
    }
}

/// Shifts all twists by a common constant so the minimum is 0, then sorts
/// ascending.  Idempotent; the result presents the same projective bundle.
pub fn normalize(spec: &ScrollSpec) -> ScrollSpec {
    let min = *spec.twists.iter().min().expect("rank >= 2");
    let mut twists: Vec<i64> = spec.twists.iter().map(|a| a - min).collect();
    twists.sort_unstable();
    ScrollSpec { m: spec.m, twists }
}

/// A residue class `value mod modulus`, with `0 <= value < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResidueClass {
    pub value: u32,
    pub modulus: u32,
}

/// The class of `det(E) = O(sum of twists)` in `Pic/r*Pic`, i.e. the twist
/// sum reduced modulo the rank.  Invariant under common twist shifts.
pub fn orientation_character(spec: &ScrollSpec) -> ResidueClass {
    let r = spec.rank();
    ResidueClass {
        value: spec.twist_sum().rem_euclid(r as i64) as u32,
        modulus: r,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equivalent,
    Inequivalent,
    Undecided,
}

/// Certificate data attached to a classification verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", content = "data", rename_all = "kebab-case")]
pub enum Reason {
    /// Scrolls over `P^1`: twist sums compared modulo the rank.
    P1BaseSumCongruence {
        sum_left: i64,
        sum_right: i64,
        modulus: u32,
        residue_left: u32,
        residue_right: u32,
    },
    /// Rank-2 scrolls over `P^2`: twists compared after `|a|` normalization,
    /// with the discriminants of the two intersection cubics as the
    /// separating invariant.
    F2TwistComparison {
        normalized_left: u64,
        normalized_right: u64,
        discriminant_left: String,
        discriminant_right: String,
    },
    /// No implemented rule covers the pair.
    NoRule { detail: String },
}

/// A classification verdict with its machine-checkable certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(flatten)]
    pub reason: Reason,
}

/// Equivalence of scrolls over `P^1` with equal rank: `sum(a) = sum(a') mod r`.
pub fn classify_p1_base(s1: &ScrollSpec, s2: &ScrollSpec) -> Result<Verdict, ScrollsError> {
    if s1.base_dim() != 1 || s2.base_dim() != 1 {
        return Err(ScrollsError::NotComparable(format!(
            "rule applies to scrolls over P^1, got base dimensions {} and {}",
            s1.base_dim(),
            s2.base_dim()
        )));
    }
    if s1.rank() != s2.rank() {
        return Err(ScrollsError::NotComparable(format!(
            "rule applies to scrolls of equal rank, got {} and {}",
            s1.rank(),
            s2.rank()
        )));
    }
    let modulus = s1.rank();
    let (sum_left, sum_right) = (s1.twist_sum(), s2.twist_sum());
    let residue_left = sum_left.rem_euclid(modulus as i64) as u32;
    let residue_right = sum_right.rem_euclid(modulus as i64) as u32;
    let status = if residue_left == residue_right {
        Status::Equivalent
    } else {
        Status::Inequivalent
    };
    Ok(Verdict {
        status,
        reason: Reason::P1BaseSumCongruence {
            sum_left,
            sum_right,
            modulus,
            residue_left,
            residue_right,
        },
    })
}

/// Equivalence of the rank-2 scrolls `F(2; 0, a)` and `F(2; 0, a')`:
/// normalize to `|a|` (twisting by a line bundle identifies `a` and `-a`),
/// then compare.  The certificate carries the discriminants of the two
/// intersection cubics, which separate distinct normalized twists.
pub fn classify_f2(a: i64, a2: i64) -> Verdict {
    let (na, na2) = (a.unsigned_abs(), a2.unsigned_abs());
    let status = if na == na2 {
        Status::Equivalent
    } else {
        Status::Inequivalent
    };
    Verdict {
        status,
        reason: Reason::F2TwistComparison {
            normalized_left: na,
            normalized_right: na2,
            discriminant_left: discriminant(&crate::forms::f2_cubic(na as i64)).to_string(),
            discriminant_right: discriminant(&crate::forms::f2_cubic(na2 as i64)).to_string(),
        },
    }
}

/// Applies whichever classifier covers the pair, or returns an `Undecided`
/// verdict when none does.
pub fn classify(s1: &ScrollSpec, s2: &ScrollSpec) -> Verdict {
    if s1.base_dim() == 1 && s2.base_dim() == 1 && s1.rank() == s2.rank() {
        return classify_p1_base(s1, s2).expect("preconditions checked");
    }
    if s1.base_dim() == 2 && s2.base_dim() == 2 && s1.rank() == 2 && s2.rank() == 2 {
        let n1 = normalize(s1);
        let n2 = normalize(s2);
        return classify_f2(n1.twists()[1], n2.twists()[1]);
    }
    Verdict {
        status: Status::Undecided,
        reason: Reason::NoRule {
            detail: format!(
                "no classification rule for ({}, rank {}) vs ({}, rank {})",
                format_args!("P^{}", s1.base_dim()),
                s1.rank(),
                format_args!("P^{}", s2.base_dim()),
                s2.rank()
            ),
        },
    }
}

/// Whether the form-level evidence is consistent with the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "consistency", content = "detail", rename_all = "lowercase")]
pub enum Consistency {
    Consistent,
    /// The classifier and the form engine disagree; the detail records which
    /// side found what.  Reported, never auto-resolved.
    Discrepancy(String),
    /// No classifier rule applies; only the form evidence is reported.
    Unchecked(String),
}

/// Full cross-check of a pair of three-dimensional scrolls of Picard rank 2.
#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    pub left: ScrollSpec,
    pub right: ScrollSpec,
    pub classifier: Verdict,
    pub cubic_left: BinaryCubicForm,
    pub cubic_right: BinaryCubicForm,
    pub profile_left: InvariantProfile,
    pub profile_right: InvariantProfile,
    pub oriented: EquivalenceDecision,
    pub unoriented: EquivalenceDecision,
    pub consistency: Consistency,
}

/// Search height used by the cross-check's bounded witness search.
pub const CROSSCHECK_HEIGHT: u32 = 10;

/// Computes both intersection cubics, decides form equivalence under both
/// orientation conventions, and compares with the classifier verdict.
pub fn crosscheck(s1: &ScrollSpec, s2: &ScrollSpec) -> Result<CrosscheckReport, ScrollsError> {
    for s in [s1, s2] {
        if s.total_dim() != 3 {
            return Err(ScrollsError::NotComparable(format!(
                "cross-check needs threefolds, {s} has dimension {}",
                s.total_dim()
            )));
        }
    }
    let classifier = classify(s1, s2);
    let cubic_left = intersection_cubic(&s1.chow_ring()).expect("dimension checked");
    let cubic_right = intersection_cubic(&s2.chow_ring()).expect("dimension checked");
    let oriented = decide_equivalence(&cubic_left, &cubic_right, CROSSCHECK_HEIGHT, false);
    let unoriented = decide_equivalence(&cubic_left, &cubic_right, CROSSCHECK_HEIGHT, true);
    let consistency = assess(&classifier, &oriented, &unoriented);
    Ok(CrosscheckReport {
        left: s1.clone(),
        right: s2.clone(),
        classifier,
        profile_left: invariant_profile(&cubic_left),
        profile_right: invariant_profile(&cubic_right),
        cubic_left,
        cubic_right,
        oriented,
        unoriented,
        consistency,
    })
}

fn assess(
    classifier: &Verdict,
    oriented: &EquivalenceDecision,
    unoriented: &EquivalenceDecision,
) -> Consistency {
    let describe = |d: &EquivalenceDecision| match d.verdict {
        EquivVerdict::Equivalent => "a witness",
        EquivVerdict::Inequivalent => "an obstruction",
        EquivVerdict::Unknown => "no decision",
    };
    match classifier.status {
        Status::Undecided => Consistency::Unchecked(format!(
            "no classifier rule; form engine found {} (oriented) and {} (unoriented)",
            describe(oriented),
            describe(unoriented)
        )),
        Status::Equivalent => {
            // An equivalence of varieties forces equivalent forms.
            if oriented.verdict == EquivVerdict::Equivalent
                || unoriented.verdict == EquivVerdict::Equivalent
            {
                Consistency::Consistent
            } else {
                Consistency::Discrepancy(format!(
                    "classifier says equivalent but form engine found {} (oriented) / {} \
                     (unoriented)",
                    describe(oriented),
                    describe(unoriented)
                ))
            }
        }
        Status::Inequivalent => {
            if oriented.verdict == EquivVerdict::Equivalent
                || unoriented.verdict == EquivVerdict::Equivalent
            {
                // The cubic form does not separate this pair; the classifier
                // still stands on its own certificate.
                Consistency::Discrepancy(format!(
                    "classifier says inequivalent but the cubic forms are equivalent \
                     ({} oriented, {} unoriented); the form invariant does not separate \
                     this pair",
                    describe(oriented),
                    describe(unoriented)
                ))
            } else {
                Consistency::Consistent
            }
        }
    }
}
