//! Homotopy classification of three-dimensional lens spaces.
//!
//! `L(p, q)` is the quotient of the 3-sphere by the `Z/p` action
//! `(x1, x2) -> (z*x1, z^q*x2)` for a primitive `p`-th root of unity `z`.
//! For a fixed odd prime `p`, `L(p, q)` and `L(p, q')` are homotopy
//! equivalent exactly when `q*q'` is a square modulo `p`, while every
//! homotopy group is independent of `q` — the classical prototype of
//! homotopy-inequivalent spaces with isomorphic homotopy groups.

use std::fmt;

use crate::a1pi::GroupExpr;

/// Errors from lens-space construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LensError {
    NotPrime(u64),
    NotOdd(u64),
    BadResidue { p: u64, q: u64 },
}

impl fmt::Display for LensError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LensError::NotPrime(p) => write!(f, "{p} is not prime"),
            LensError::NotOdd(p) => write!(f, "{p} is not an odd prime"),
            LensError::BadResidue { p, q } => {
                write!(f, "q = {q} must satisfy 1 <= q < p = {p}")
            }
        }
    }
}

impl std::error::Error for LensError {}

/// Trial-division primality check; inputs are desk scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Whether `x mod p` is a square, i.e. lies in `{k^2 mod p}`.  Decided by
/// the Euler criterion `x^((p-1)/2) = 1` for `x` nonzero (zero is always a
/// square).
pub fn is_square_mod(p: u64, x: i64) -> Result<bool, LensError> {
    if !is_prime(p) {
        return Err(LensError::NotPrime(p));
    }
    let r = x.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Ok(true);
    }
    if p == 2 {
        return Ok(true);
    }
    Ok(mod_pow(r, (p - 1) / 2, p) == 1)
}

/// The lens space `L(p, q)`, `p` an odd prime, `1 <= q < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<Self, LensError> {
        if !is_prime(p) {
            return Err(LensError::NotPrime(p));
        }
        if p == 2 {
            return Err(LensError::NotOdd(p));
        }
        if q == 0 || q >= p {
            return Err(LensError::BadResidue { p, q });
        }
        Ok(LensSpace { p, q })
    }

    pub fn order(&self) -> u64 {
        self.p
    }

    pub fn rotation(&self) -> u64 {
        self.q
    }

    /// The fundamental group `Z/p`; independent of `q`, like every homotopy
    /// group of `L(p, q)`.
    pub fn fundamental_group(&self) -> GroupExpr {
        GroupExpr::Zmod(self.p as u32)
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// Whitehead's criterion: false across different `p` (the fundamental
/// groups differ), otherwise `q1*q2` must be a square mod `p`.
pub fn homotopy_equivalent(l1: &LensSpace, l2: &LensSpace) -> bool {
    if l1.p != l2.p {
        return false;
    }
    is_square_mod(l1.p, (l1.q * l2.q) as i64).expect("p validated at construction")
}

/// Partition of `{1, ..., p-1}` into homotopy classes: the quadratic
/// residues and the non-residues, each of size `(p-1)/2`, ordered by their
/// smallest member.
pub fn equivalence_classes(p: u64) -> Result<Vec<Vec<u64>>, LensError> {
    if !is_prime(p) {
        return Err(LensError::NotPrime(p));
    }
    if p == 2 {
        return Err(LensError::NotOdd(p));
    }
    let mut residues = Vec::new();
    let mut non_residues = Vec::new();
    for q in 1..p {
        if is_square_mod(p, q as i64)? {
            residues.push(q);
        } else {
            non_residues.push(q);
        }
    }
    Ok(vec![residues, non_residues])
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: enumerate all squares mod p.
    fn squares_by_enumeration(p: u64) -> Vec<bool> {
        let mut table = vec![false; p as usize];
        for k in 0..p {
            table[((k * k) % p) as usize] = true;
        }
        table
    }

    #[test]
    fn square_examples() {
        // squares mod 7 are {0, 1, 2, 4}
        assert!(is_square_mod(7, 2).unwrap());
        assert!(!is_square_mod(7, 3).unwrap());
        assert!(is_square_mod(31, 1).unwrap());
        // squares mod 5 are {0, 1, 4}
        assert!(!is_square_mod(5, 2).unwrap());
        assert!(is_square_mod(5, -1).unwrap());
        assert!(is_square_mod(5, 0).unwrap());
        assert_eq!(is_square_mod(6, 2), Err(LensError::NotPrime(6)));
    }

    #[test]
    fn euler_criterion_matches_enumeration() {
        for p in (3..50).filter(|&n| is_prime(n)) {
            let table = squares_by_enumeration(p);
            for x in 0..p {
                assert_eq!(
                    is_square_mod(p, x as i64).unwrap(),
                    table[x as usize],
                    "p = {p}, x = {x}"
                );
            }
        }
    }

    #[test]
    fn lens_space_validation() {
        assert!(LensSpace::new(7, 3).is_ok());
        assert_eq!(LensSpace::new(9, 2), Err(LensError::NotPrime(9)));
        assert_eq!(LensSpace::new(2, 1), Err(LensError::NotOdd(2)));
        assert_eq!(
            LensSpace::new(7, 0),
            Err(LensError::BadResidue { p: 7, q: 0 })
        );
        assert_eq!(
            LensSpace::new(7, 7),
            Err(LensError::BadResidue { p: 7, q: 7 })
        );
    }

    #[test]
    fn equivalence_examples() {
        let l = |p, q| LensSpace::new(p, q).unwrap();
        assert!(homotopy_equivalent(&l(7, 1), &l(7, 2)));
        assert!(homotopy_equivalent(&l(7, 3), &l(7, 3)));
        assert!(!homotopy_equivalent(&l(5, 1), &l(5, 2)));
        assert!(!homotopy_equivalent(&l(5, 1), &l(7, 1)));
        assert_eq!(l(5, 2).fundamental_group(), GroupExpr::Zmod(5));
    }

    #[test]
    fn class_examples() {
        assert_eq!(
            equivalence_classes(5).unwrap(),
            vec![vec![1, 4], vec![2, 3]]
        );
        assert_eq!(equivalence_classes(3).unwrap(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn classes_are_closed_under_square_scaling() {
        for p in (3u64..30).filter(|&n| is_prime(n)) {
            for class in equivalence_classes(p).unwrap() {
                for &q in &class {
                    for s in 1..p {
                        let scaled = (q * s % p * s) % p;
                        assert!(class.contains(&scaled));
                    }
                }
            }
        }
    }
}
