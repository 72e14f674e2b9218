//! Deterministic command-line frontend.
//!
//! Verbs: `ring`, `form`, `equiv`, `classify`, `pi`, `table`, `lens`,
//! `scan`.  Results go to standard output (text by default, `--json` for the
//! machine form), diagnostics to standard error.  Identical invocations
//! produce byte-identical output.
//!
//! Exit codes: `0` for a completed computation, `1` when a boolean verb
//! decides negatively (`equiv` / `classify` verdict `inequivalent`, `lens`
//! result `false`; an `unknown` or `undecided` outcome exits `0`), `2` for
//! usage errors, including malformed scroll/form/lens syntax (diagnosed with
//! a byte position).
//!
//! Input grammar: scrolls are written `F(m;a1,...,ar)`, cubic forms
//! `[A,B,C,D]`, lens spaces `L(p,q)`; no interior whitespace.

use std::fmt::Write as _;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::a1pi::{homotopy_table, pi1_scroll, pi_scroll, GroupExpr};
use crate::chow::build_ring;
use crate::forms::{
    decide_equivalence, intersection_cubic, scan_report, BinaryCubicForm, EquivVerdict,
    EquivalenceDecision, Obstruction,
};
use crate::lens::{homotopy_equivalent, LensSpace};
use crate::scrolls::{classify, crosscheck, CrosscheckReport, ScrollSpec, Status, Verdict};

/// A grammar error with the byte position where parsing failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} at position {}", self.msg, self.pos)
    }
}

struct Scanner<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Scanner { input, pos: 0 }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn expect(&mut self, ch: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == ch => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{ch}', found '{c}'"))),
            None => Err(self.error(format!("expected '{ch}', found end of input"))),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// A decimal integer with optional leading minus, as a raw slice.
    fn integer_slice(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        Ok(&self.input[start..self.pos])
    }

    fn bigint(&mut self) -> Result<BigInt, ParseError> {
        let slice = self.integer_slice()?;
        Ok(slice.parse().expect("scanned digits"))
    }

    fn i64(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let slice = self.integer_slice()?;
        slice.parse().map_err(|_| ParseError {
            pos: start,
            msg: format!("integer '{slice}' out of range"),
        })
    }

    fn u32(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let slice = self.integer_slice()?;
        slice.parse().map_err(|_| ParseError {
            pos: start,
            msg: format!("expected a small nonnegative integer, got '{slice}'"),
        })
    }

    fn u64(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let slice = self.integer_slice()?;
        slice.parse().map_err(|_| ParseError {
            pos: start,
            msg: format!("expected a nonnegative integer, got '{slice}'"),
        })
    }
}

/// Parses `F(m;a1,...,ar)`.
pub fn parse_scroll(input: &str) -> Result<ScrollSpec, ParseError> {
    let mut s = Scanner::new(input);
    s.expect('F')?;
    s.expect('(')?;
    let m = s.u32()?;
    s.expect(';')?;
    let mut twists = vec![s.i64()?];
    while s.peek() == Some(',') {
        s.expect(',')?;
        twists.push(s.i64()?);
    }
    s.expect(')')?;
    s.expect_end()?;
    ScrollSpec::new(m, twists).map_err(|e| ParseError {
        pos: 0,
        msg: e.to_string(),
    })
}

/// Parses `[A,B,C,D]`.
pub fn parse_form(input: &str) -> Result<BinaryCubicForm, ParseError> {
    let mut s = Scanner::new(input);
    s.expect('[')?;
    let a = s.bigint()?;
    s.expect(',')?;
    let b = s.bigint()?;
    s.expect(',')?;
    let c = s.bigint()?;
    s.expect(',')?;
    let d = s.bigint()?;
    s.expect(']')?;
    s.expect_end()?;
    Ok(BinaryCubicForm { a, b, c, d })
}

/// Parses `L(p,q)`.
pub fn parse_lens(input: &str) -> Result<LensSpace, ParseError> {
    let mut s = Scanner::new(input);
    s.expect('L')?;
    s.expect('(')?;
    let p = s.u64()?;
    s.expect(',')?;
    let q = s.u64()?;
    s.expect(')')?;
    s.expect_end()?;
    LensSpace::new(p, q).map_err(|e| ParseError {
        pos: 0,
        msg: e.to_string(),
    })
}

#[derive(Parser, Debug)]
#[command(
    name = "a1scrolls",
    about = "Chow rings, intersection cubics, and homotopy presentations of scrolls",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Print the Chow ring presentation of a scroll
    Ring { scroll: String },
    /// Print the cubic intersection form of a three-dimensional scroll
    Form { scroll: String },
    /// Decide GL2(Z) equivalence of two cubic forms under both conventions
    Equiv {
        left: String,
        right: String,
        /// Bound on matrix entries in the witness search
        #[arg(long, default_value_t = 10)]
        height: u32,
        /// Drive the exit code from the unoriented (sign-insensitive) verdict
        #[arg(long)]
        allow_sign: bool,
    },
    /// Classify two scrolls up to weak equivalence, with a form cross-check
    Classify { left: String, right: String },
    /// Print one homotopy group of a scroll
    Pi {
        scroll: String,
        /// Degree of the homotopy group (1 for the fundamental group)
        #[arg(long)]
        i: u32,
    },
    /// Print the homotopy table of a scroll up to a given degree
    Table {
        scroll: String,
        /// Largest degree to include
        #[arg(long)]
        max: u32,
    },
    /// Decide homotopy equivalence of two lens spaces
    Lens { left: String, right: String },
    /// Scan the rank-2 scrolls over the plane for discriminant collisions
    Scan {
        #[arg(long)]
        bound: u64,
    },
}

/// Entry point shared by the binary and the test suite.  `args` is the full
/// argv including the program name.  Returns the process exit code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(Output { text, json, exit }) => {
            let body = if cli.json { json } else { text };
            let _ = writeln!(stdout, "{body}");
            exit
        }
        Err(diag) => {
            let _ = writeln!(stderr, "error: {diag}");
            2
        }
    }
}

struct Output {
    text: String,
    json: String,
    exit: i32,
}

fn json_of<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output")
}

fn dispatch(cli: &Cli) -> Result<Output, String> {
    match &cli.command {
        Verb::Ring { scroll } => {
            let spec =
                parse_scroll(scroll).map_err(|e| format!("invalid scroll '{scroll}': {e}"))?;
            Ok(ring_output(&spec))
        }
        Verb::Form { scroll } => {
            let spec =
                parse_scroll(scroll).map_err(|e| format!("invalid scroll '{scroll}': {e}"))?;
            let cubic = intersection_cubic(&spec.chow_ring()).map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct FormOutput {
                scroll: String,
                coefficients: BinaryCubicForm,
            }
            Ok(Output {
                text: cubic.to_string(),
                json: json_of(&FormOutput {
                    scroll: spec.to_string(),
                    coefficients: cubic,
                }),
                exit: 0,
            })
        }
        Verb::Equiv {
            left,
            right,
            height,
            allow_sign,
        } => {
            let f = parse_form(left).map_err(|e| format!("invalid form '{left}': {e}"))?;
            let g = parse_form(right).map_err(|e| format!("invalid form '{right}': {e}"))?;
            Ok(equiv_output(&f, &g, *height, *allow_sign))
        }
        Verb::Classify { left, right } => {
            let s1 = parse_scroll(left).map_err(|e| format!("invalid scroll '{left}': {e}"))?;
            let s2 = parse_scroll(right).map_err(|e| format!("invalid scroll '{right}': {e}"))?;
            Ok(classify_output(&s1, &s2))
        }
        Verb::Pi { scroll, i } => {
            let spec =
                parse_scroll(scroll).map_err(|e| format!("invalid scroll '{scroll}': {e}"))?;
            let expr = match i {
                0 => return Err("homotopy degree --i must be at least 1".to_string()),
                1 => pi1_scroll(&spec),
                _ => pi_scroll(&spec, *i).map_err(|e| e.to_string())?,
            };
            #[derive(Serialize)]
            struct PiOutput {
                scroll: String,
                i: u32,
                expr: String,
                tree: GroupExpr,
            }
            Ok(Output {
                text: expr.to_string(),
                json: json_of(&PiOutput {
                    scroll: spec.to_string(),
                    i: *i,
                    expr: expr.to_string(),
                    tree: expr,
                }),
                exit: 0,
            })
        }
        Verb::Table { scroll, max } => {
            let spec =
                parse_scroll(scroll).map_err(|e| format!("invalid scroll '{scroll}': {e}"))?;
            if *max < 1 {
                return Err("table depth --max must be at least 1".to_string());
            }
            let rows = homotopy_table(&spec, *max);
            let mut text = String::new();
            for (i, expr) in &rows {
                let _ = writeln!(text, "pi_{i}: {expr}");
            }
            text.pop();
            #[derive(Serialize)]
            struct Row {
                i: u32,
                expr: String,
                tree: GroupExpr,
            }
            #[derive(Serialize)]
            struct TableOutput {
                scroll: String,
                rows: Vec<Row>,
            }
            let json = json_of(&TableOutput {
                scroll: spec.to_string(),
                rows: rows
                    .into_iter()
                    .map(|(i, e)| Row {
                        i,
                        expr: e.to_string(),
                        tree: e,
                    })
                    .collect(),
            });
            Ok(Output {
                text,
                json,
                exit: 0,
            })
        }
        Verb::Lens { left, right } => {
            let l1 = parse_lens(left).map_err(|e| format!("invalid lens space '{left}': {e}"))?;
            let l2 = parse_lens(right).map_err(|e| format!("invalid lens space '{right}': {e}"))?;
            let equivalent = homotopy_equivalent(&l1, &l2);
            #[derive(Serialize)]
            struct LensOutput {
                left: String,
                right: String,
                equivalent: bool,
            }
            Ok(Output {
                text: equivalent.to_string(),
                json: json_of(&LensOutput {
                    left: l1.to_string(),
                    right: l2.to_string(),
                    equivalent,
                }),
                exit: if equivalent { 0 } else { 1 },
            })
        }
        Verb::Scan { bound } => {
            let report = scan_report(*bound);
            let mut text = String::new();
            let _ = writeln!(text, "bound: {}", report.bound);
            if report.equal_discriminant_pairs.is_empty() {
                let _ = writeln!(text, "equal-discriminant pairs: none");
            } else {
                let pairs: Vec<String> = report
                    .equal_discriminant_pairs
                    .iter()
                    .map(|(a, b)| format!("({a},{b})"))
                    .collect();
                let _ = writeln!(text, "equal-discriminant pairs: {}", pairs.join(" "));
            }
            let _ = write!(
                text,
                "closed form {}: {}",
                report.closed_form.formula, report.closed_form.note
            );
            Ok(Output {
                text,
                json: json_of(&report),
                exit: 0,
            })
        }
    }
}

fn ring_output(spec: &ScrollSpec) -> Output {
    let ring = build_ring(&spec.to_bundle());
    #[derive(Serialize)]
    struct RingOutput {
        m: u32,
        r: u32,
        chern: Vec<String>,
        presentation: String,
    }
    let presentation = ring.presentation_string();
    Output {
        json: json_of(&RingOutput {
            m: ring.base_dim(),
            r: ring.rank(),
            chern: ring.chern_classes().iter().map(|c| c.to_string()).collect(),
            presentation: presentation.clone(),
        }),
        text: presentation,
        exit: 0,
    }
}

fn describe_obstruction(o: &Obstruction) -> String {
    match o {
        Obstruction::InvariantMismatch {
            invariant,
            left,
            right,
        } => {
            format!("invariant mismatch: {invariant} {left} vs {right}")
        }
        Obstruction::LeadingMismatch { left, right } => {
            format!("residual leading coefficients differ: {left} vs {right}")
        }
        Obstruction::ResidueMismatch {
            modulus,
            left,
            right,
        } => {
            format!("residuals differ mod {modulus}: {left} vs {right}")
        }
    }
}

fn decision_text(label: &str, d: &EquivalenceDecision, height: u32) -> String {
    let mut text = String::new();
    match d.verdict {
        EquivVerdict::Equivalent => {
            let w = d.witness.as_ref().expect("equivalent carries a witness");
            let _ = write!(text, "{label}: equivalent\n  witness: {}", w.matrix);
            if w.negated {
                let _ = write!(text, " (image negated)");
            }
        }
        EquivVerdict::Inequivalent => {
            let o = d
                .obstruction
                .as_ref()
                .expect("inequivalent carries an obstruction");
            let _ = write!(
                text,
                "{label}: inequivalent\n  obstruction: {}",
                describe_obstruction(o)
            );
        }
        EquivVerdict::Unknown => {
            let _ = write!(
                text,
                "{label}: unknown\n  no witness with entries up to {height}; invariants agree"
            );
        }
    }
    text
}

fn equiv_output(f: &BinaryCubicForm, g: &BinaryCubicForm, height: u32, allow_sign: bool) -> Output {
    let oriented = decide_equivalence(f, g, height, false);
    let unoriented = decide_equivalence(f, g, height, true);
    let deciding = if allow_sign { &unoriented } else { &oriented };
    let exit = match deciding.verdict {
        EquivVerdict::Inequivalent => 1,
        _ => 0,
    };
    let text = format!(
        "{}\n{}",
        decision_text("oriented", &oriented, height),
        decision_text("unoriented", &unoriented, height)
    );
    #[derive(Serialize)]
    struct EquivOutput<'a> {
        left: &'a BinaryCubicForm,
        right: &'a BinaryCubicForm,
        height: u32,
        oriented: EquivalenceDecision,
        unoriented: EquivalenceDecision,
        exit_convention: &'static str,
    }
    let json = json_of(&EquivOutput {
        left: f,
        right: g,
        height,
        oriented,
        unoriented,
        exit_convention: if allow_sign { "unoriented" } else { "oriented" },
    });
    Output { text, json, exit }
}

fn verdict_text(v: &Verdict) -> String {
    let status = match v.status {
        Status::Equivalent => "equivalent",
        Status::Inequivalent => "inequivalent",
        Status::Undecided => "undecided",
    };
    let detail = match &v.reason {
        crate::scrolls::Reason::P1BaseSumCongruence {
            sum_left,
            sum_right,
            modulus,
            residue_left,
            residue_right,
        } => format!(
            "rule: p1-base-sum-congruence\n  twist sums {sum_left} vs {sum_right}; residues \
             {residue_left} vs {residue_right} (mod {modulus})"
        ),
        crate::scrolls::Reason::F2TwistComparison {
            normalized_left,
            normalized_right,
            discriminant_left,
            discriminant_right,
        } => format!(
            "rule: f2-twist-comparison\n  normalized twists {normalized_left} vs \
             {normalized_right}; discriminants {discriminant_left} vs {discriminant_right}"
        ),
        crate::scrolls::Reason::NoRule { detail } => format!("rule: none\n  {detail}"),
    };
    format!("verdict: {status}\n{detail}")
}

fn classify_output(s1: &ScrollSpec, s2: &ScrollSpec) -> Output {
    let verdict = classify(s1, s2);
    let check: Option<CrosscheckReport> = if s1.total_dim() == 3 && s2.total_dim() == 3 {
        crosscheck(s1, s2).ok()
    } else {
        None
    };
    let mut text = verdict_text(&verdict);
    if let Some(report) = &check {
        let _ = write!(
            text,
            "\ncrosscheck:\n  cubic left: {}\n  cubic right: {}",
            report.cubic_left, report.cubic_right
        );
        for line in decision_text(
            "oriented",
            &report.oriented,
            crate::scrolls::CROSSCHECK_HEIGHT,
        )
        .lines()
        .chain(
            decision_text(
                "unoriented",
                &report.unoriented,
                crate::scrolls::CROSSCHECK_HEIGHT,
            )
            .lines(),
        ) {
            let _ = write!(text, "\n  {line}");
        }
        let consistency = match &report.consistency {
            crate::scrolls::Consistency::Consistent => "consistent".to_string(),
            crate::scrolls::Consistency::Discrepancy(d) => format!("discrepancy: {d}"),
            crate::scrolls::Consistency::Unchecked(d) => format!("unchecked: {d}"),
        };
        let _ = write!(text, "\n  consistency: {consistency}");
    }
    #[derive(Serialize)]
    struct ClassifyOutput<'a> {
        left: String,
        right: String,
        verdict: &'a Verdict,
        #[serde(skip_serializing_if = "Option::is_none")]
        crosscheck: &'a Option<CrosscheckReport>,
    }
    let json = json_of(&ClassifyOutput {
        left: s1.to_string(),
        right: s2.to_string(),
        verdict: &verdict,
        crosscheck: &check,
    });
    let exit = match verdict.status {
        Status::Inequivalent => 1,
        _ => 0,
    };
    Output { text, json, exit }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scroll_grammar() {
        let s = parse_scroll("F(2;0,3)").unwrap();
        assert_eq!(s.base_dim(), 2);
        assert_eq!(s.twists(), &[0, 3]);
        let s = parse_scroll("F(1;-4,0,12)").unwrap();
        assert_eq!(s.twists(), &[-4, 0, 12]);
        let err = parse_scroll("F(2;0,3").unwrap_err();
        assert_eq!(err.pos, 7);
        let err = parse_scroll("F(2;0,3) ").unwrap_err();
        assert_eq!(err.pos, 8);
        let err = parse_scroll("G(2;0,3)").unwrap_err();
        assert_eq!(err.pos, 0);
        assert!(parse_scroll("F(2;)").is_err());
        assert!(parse_scroll("F(0;1,2)").is_err());
        assert!(parse_scroll("F(2;7)").is_err());
    }

    #[test]
    fn form_grammar() {
        let f = parse_form("[0,0,3,-2]").unwrap();
        assert_eq!(f, BinaryCubicForm::new(0, 0, 3, -2));
        let f = parse_form("[123456789012345678901,0,0,1]").unwrap();
        assert_eq!(f.a.to_string(), "123456789012345678901");
        assert!(parse_form("[1,2,3]").is_err());
        assert!(parse_form("[1,2,3,4,5]").is_err());
        assert!(parse_form("1,2,3,4").is_err());
    }

    #[test]
    fn lens_grammar() {
        let l = parse_lens("L(7,2)").unwrap();
        assert_eq!((l.order(), l.rotation()), (7, 2));
        assert!(parse_lens("L(6,1)").is_err());
        assert!(parse_lens("L(7,0)").is_err());
        assert!(parse_lens("L(7;2)").is_err());
    }
}
