//! Symbolic group-presentation expressions and their canonical normal form.
//!
//! Expressions are abstract syntax trees over a fixed alphabet of atoms
//! (the trivial group, `Gm`, `Z/n`, Milnor-Witt and Milnor K-theory sheaves
//! `KMW(n)` and `KM(n)`, the fundamental group `F1` of the projective line,
//! the etale sheaf `H1etMu(n)`, and structured opaque placeholders for
//! groups the tables leave uncomputed) and three combinators: finite
//! products, split extensions with a twist descriptor, and central
//! extensions with a factor-set tag.
//!
//! `F1` stays atomic under normalization; its underlying central-extension
//! structure is available separately from [`f1_central_extension`] as
//! queryable metadata.
//!
//! The canonical text form is an S-expression, e.g. `(x (F1) (Gm))` for a
//! product and `(rtimes (F1) (Gm) parity:1)` for a twisted split extension;
//! [`parse_expr`] and the `Display` impl round-trip exactly.

use std::fmt;

use serde::Serialize;

use super::A1PiError;

/// Spaces an opaque placeholder can refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SpaceTag {
    /// `P^n`
    ProjectiveSpace(u32),
    /// `A^n` minus the origin
    PuncturedAffine(u32),
    /// A `P^1`-bundle whose Euler class is not known to vanish; the rank-2
    /// presentation rule does not apply.
    EulerObstructed,
}

impl fmt::Display for SpaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceTag::ProjectiveSpace(n) => write!(f, "P^{n}"),
            SpaceTag::PuncturedAffine(n) => write!(f, "A^{n}\\0"),
            SpaceTag::EulerObstructed => write!(f, "euler-obstructed"),
        }
    }
}

/// Structured tag of an opaque atom: which homotopy group of which space.
/// Opaque atoms compare equal only on identical tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OpaqueTag {
    pub space: SpaceTag,
    pub index: u32,
}

impl fmt::Display for OpaqueTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi_{}({})", self.index, self.space)
    }
}

/// The twist of a split extension: trivial, a class in `Z/2`, or a residue
/// class mod `n`.  A parity or residue twist with value 0 normalizes to
/// `Trivial`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwistDescriptor {
    Trivial,
    Parity(u8),
    Residue { modulus: u32, value: u32 },
}

impl TwistDescriptor {
    /// Parity twist from an arbitrary integer.
    pub fn parity(v: i64) -> Self {
        TwistDescriptor::Parity(v.rem_euclid(2) as u8).normalized()
    }

    pub fn normalized(self) -> Self {
        match self {
            TwistDescriptor::Parity(v) if v % 2 == 0 => TwistDescriptor::Trivial,
            TwistDescriptor::Parity(v) => TwistDescriptor::Parity(v % 2),
            TwistDescriptor::Residue { modulus, value } if value % modulus == 0 => {
                TwistDescriptor::Trivial
            }
            TwistDescriptor::Residue { modulus, value } => TwistDescriptor::Residue {
                modulus,
                value: value % modulus,
            },
            t => t,
        }
    }

    pub fn is_trivial(self) -> bool {
        self.normalized() == TwistDescriptor::Trivial
    }
}

impl fmt::Display for TwistDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistDescriptor::Trivial => write!(f, "trivial"),
            TwistDescriptor::Parity(v) => write!(f, "parity:{v}"),
            TwistDescriptor::Residue { modulus, value } => write!(f, "residue:{modulus}:{value}"),
        }
    }
}

/// A symbolic presentation of a sheaf of groups.
///
/// The variant order is the atom order used when sorting products in normal
/// form: `Trivial < F1 < Gm < Zmod < KMW < KM < H1etMu < Opaque`, composite
/// nodes last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupExpr {
    Trivial,
    F1,
    Gm,
    Zmod(u32),
    #[serde(rename = "kmw")]
    KMW(u32),
    #[serde(rename = "km")]
    KM(u32),
    H1EtMu(u32),
    Opaque(OpaqueTag),
    Product(Vec<GroupExpr>),
    SplitExt {
        kernel: Box<GroupExpr>,
        quotient: Box<GroupExpr>,
        twist: TwistDescriptor,
    },
    CentralExt {
        kernel: Box<GroupExpr>,
        quotient: Box<GroupExpr>,
        factor_set: String,
    },
}

impl GroupExpr {
    pub fn opaque(space: SpaceTag, index: u32) -> Self {
        GroupExpr::Opaque(OpaqueTag { space, index })
    }

    pub fn product(parts: impl IntoIterator<Item = GroupExpr>) -> Self {
        GroupExpr::Product(parts.into_iter().collect())
    }

    pub fn split_ext(kernel: GroupExpr, quotient: GroupExpr, twist: TwistDescriptor) -> Self {
        GroupExpr::SplitExt {
            kernel: Box::new(kernel),
            quotient: Box::new(quotient),
            twist,
        }
    }
}

/// The central-extension structure underlying `F1`: kernel `KMW(2)`,
/// quotient `Gm`, factor set given by the symbol map.  Kept as metadata;
/// `normalize_expr` never expands the `F1` atom into this.
pub fn f1_central_extension() -> GroupExpr {
    GroupExpr::CentralExt {
        kernel: Box::new(GroupExpr::KMW(2)),
        quotient: Box::new(GroupExpr::Gm),
        factor_set: "symbol".to_string(),
    }
}

/// Canonical form: products are flattened, trivial factors dropped, factors
/// sorted by the fixed atom order; split extensions with a trivial twist
/// collapse to products.  The canonical spelling of the fundamental group of
/// the projective line is the `F1` atom: it is never expanded, and the
/// explicit central extension of `Gm` by `KMW(2)` with the `symbol` factor
/// set collapses to it.  Idempotent.
pub fn normalize_expr(e: &GroupExpr) -> GroupExpr {
    match e {
        GroupExpr::Product(parts) => {
            let mut flat = Vec::new();
            for part in parts {
                match normalize_expr(part) {
                    GroupExpr::Trivial => {}
                    GroupExpr::Product(inner) => flat.extend(inner),
                    other => flat.push(other),
                }
            }
            flat.sort();
            match flat.len() {
                0 => GroupExpr::Trivial,
                1 => flat.pop().unwrap(),
                _ => GroupExpr::Product(flat),
            }
        }
        GroupExpr::SplitExt {
            kernel,
            quotient,
            twist,
        } => {
            let twist = twist.normalized();
            if twist.is_trivial() {
                normalize_expr(&GroupExpr::product([
                    kernel.as_ref().clone(),
                    quotient.as_ref().clone(),
                ]))
            } else {
                GroupExpr::SplitExt {
                    kernel: Box::new(normalize_expr(kernel)),
                    quotient: Box::new(normalize_expr(quotient)),
                    twist,
                }
            }
        }
        GroupExpr::CentralExt {
            kernel,
            quotient,
            factor_set,
        } => {
            let kernel = normalize_expr(kernel);
            let quotient = normalize_expr(quotient);
            if kernel == GroupExpr::KMW(2) && quotient == GroupExpr::Gm && factor_set == "symbol" {
                return GroupExpr::F1;
            }
            GroupExpr::CentralExt {
                kernel: Box::new(kernel),
                quotient: Box::new(quotient),
                factor_set: factor_set.clone(),
            }
        }
        atom => atom.clone(),
    }
}

/// Structural equality of canonical presentations.  Sound for the
/// presentations this crate emits; not a general isomorphism test for
/// sheaves of groups.  In particular a split extension with a nontrivial
/// parity twist is treated as distinct from the direct product.
pub fn isomorphic(e1: &GroupExpr, e2: &GroupExpr) -> bool {
    normalize_expr(e1) == normalize_expr(e2)
}

// ---------------------------------------------------------------------------
// Canonical text form
// ---------------------------------------------------------------------------

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Trivial => write!(f, "(1)"),
            GroupExpr::F1 => write!(f, "(F1)"),
            GroupExpr::Gm => write!(f, "(Gm)"),
            GroupExpr::Zmod(n) => write!(f, "(Zmod {n})"),
            GroupExpr::KMW(n) => write!(f, "(KMW {n})"),
            GroupExpr::KM(n) => write!(f, "(KM {n})"),
            GroupExpr::H1EtMu(n) => write!(f, "(H1etMu {n})"),
            GroupExpr::Opaque(tag) => write!(f, "(opaque {} {})", tag.space, tag.index),
            GroupExpr::Product(parts) => {
                write!(f, "(x")?;
                for part in parts {
                    write!(f, " {part}")?;
                }
                write!(f, ")")
            }
            GroupExpr::SplitExt {
                kernel,
                quotient,
                twist,
            } => {
                write!(f, "(rtimes {kernel} {quotient} {twist})")
            }
            GroupExpr::CentralExt {
                kernel,
                quotient,
                factor_set,
            } => {
                write!(f, "(cext {kernel} {quotient} {factor_set})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Open(usize),
    Close(usize),
    Symbol(usize, String),
}

fn tokenize(input: &str) -> Result<Vec<Token>, A1PiError> {
    let mut tokens = Vec::new();
    let mut symbol_start = None;
    for (pos, ch) in input.char_indices() {
        match ch {
            '(' | ')' | ' ' | '\t' | '\n' => {
                if let Some(start) = symbol_start.take() {
                    tokens.push(Token::Symbol(start, input[start..pos].to_string()));
                }
                match ch {
                    '(' => tokens.push(Token::Open(pos)),
                    ')' => tokens.push(Token::Close(pos)),
                    _ => {}
                }
            }
            _ => {
                if symbol_start.is_none() {
                    symbol_start = Some(pos);
                }
            }
        }
    }
    if let Some(start) = symbol_start {
        tokens.push(Token::Symbol(start, input[start..].to_string()));
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    cursor: usize,
    input_len: usize,
}

impl Parser {
    fn error(&self, pos: usize, msg: impl Into<String>) -> A1PiError {
        A1PiError::Parse {
            pos,
            msg: msg.into(),
        }
    }

    fn here(&self) -> usize {
        match self.tokens.get(self.cursor) {
            Some(Token::Open(p)) | Some(Token::Close(p)) | Some(Token::Symbol(p, _)) => *p,
            None => self.input_len,
        }
    }

    fn expect_open(&mut self) -> Result<(), A1PiError> {
        match self.tokens.get(self.cursor) {
            Some(Token::Open(_)) => {
                self.cursor += 1;
                Ok(())
            }
            _ => Err(self.error(self.here(), "expected '('")),
        }
    }

    fn expect_close(&mut self) -> Result<(), A1PiError> {
        match self.tokens.get(self.cursor) {
            Some(Token::Close(_)) => {
                self.cursor += 1;
                Ok(())
            }
            _ => Err(self.error(self.here(), "expected ')'")),
        }
    }

    fn symbol(&mut self) -> Result<(usize, String), A1PiError> {
        match self.tokens.get(self.cursor) {
            Some(Token::Symbol(p, s)) => {
                let out = (*p, s.clone());
                self.cursor += 1;
                Ok(out)
            }
            _ => Err(self.error(self.here(), "expected a symbol")),
        }
    }

    fn number(&mut self) -> Result<u32, A1PiError> {
        let (pos, s) = self.symbol()?;
        s.parse::<u32>()
            .map_err(|_| self.error(pos, format!("expected a number, got '{s}'")))
    }

    fn at_close(&self) -> bool {
        matches!(self.tokens.get(self.cursor), Some(Token::Close(_)))
    }

    fn expr(&mut self) -> Result<GroupExpr, A1PiError> {
        self.expect_open()?;
        let (pos, head) = self.symbol()?;
        let out = match head.as_str() {
            "1" => GroupExpr::Trivial,
            "F1" => GroupExpr::F1,
            "Gm" => GroupExpr::Gm,
            "Zmod" => GroupExpr::Zmod(self.number()?),
            "KMW" => GroupExpr::KMW(self.number()?),
            "KM" => GroupExpr::KM(self.number()?),
            "H1etMu" => GroupExpr::H1EtMu(self.number()?),
            "opaque" => {
                let (spos, space) = self.symbol()?;
                let space = parse_space(&space)
                    .ok_or_else(|| self.error(spos, format!("unknown space tag '{space}'")))?;
                let index = self.number()?;
                GroupExpr::opaque(space, index)
            }
            "x" => {
                let mut parts = Vec::new();
                while !self.at_close() {
                    parts.push(self.expr()?);
                }
                GroupExpr::Product(parts)
            }
            "rtimes" => {
                let kernel = self.expr()?;
                let quotient = self.expr()?;
                let (tpos, twist) = self.symbol()?;
                let twist = parse_twist(&twist)
                    .ok_or_else(|| self.error(tpos, format!("bad twist '{twist}'")))?;
                GroupExpr::split_ext(kernel, quotient, twist)
            }
            "cext" => {
                let kernel = self.expr()?;
                let quotient = self.expr()?;
                let (_, factor_set) = self.symbol()?;
                GroupExpr::CentralExt {
                    kernel: Box::new(kernel),
                    quotient: Box::new(quotient),
                    factor_set,
                }
            }
            other => return Err(self.error(pos, format!("unknown head '{other}'"))),
        };
        self.expect_close()?;
        Ok(out)
    }
}

fn parse_space(s: &str) -> Option<SpaceTag> {
    if let Some(n) = s.strip_prefix("P^") {
        return n.parse().ok().map(SpaceTag::ProjectiveSpace);
    }
    if let Some(rest) = s.strip_prefix("A^") {
        let n = rest.strip_suffix("\\0")?;
        return n.parse().ok().map(SpaceTag::PuncturedAffine);
    }
    (s == "euler-obstructed").then_some(SpaceTag::EulerObstructed)
}

fn parse_twist(s: &str) -> Option<TwistDescriptor> {
    if s == "trivial" {
        return Some(TwistDescriptor::Trivial);
    }
    if let Some(v) = s.strip_prefix("parity:") {
        return v.parse::<u8>().ok().map(TwistDescriptor::Parity);
    }
    if let Some(rest) = s.strip_prefix("residue:") {
        let (m, v) = rest.split_once(':')?;
        return Some(TwistDescriptor::Residue {
            modulus: m.parse().ok()?,
            value: v.parse().ok()?,
        });
    }
    None
}

/// Parses the canonical text form; exact inverse of `Display` on the full
/// input (trailing garbage is an error).
pub fn parse_expr(input: &str) -> Result<GroupExpr, A1PiError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        input_len: input.len(),
    };
    let expr = parser.expr()?;
    if parser.cursor != parser.tokens.len() {
        return Err(A1PiError::Parse {
            pos: parser.here(),
            msg: "unexpected trailing input".to_string(),
        });
    }
    Ok(expr)
}
