//! Seifert invariants of torus-knot fillings and their quotients.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, Zero};
use thiserror::Error;

use crate::slope::Slope;
use crate::surgery::H1Order;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("bezout needs q >= 2, got {0}")]
    ModulusTooSmall(i64),
    #[error("torus parameters must be odd with absolute value at least 3, got ({0}, {1})")]
    BadTorusParameters(i64, i64),
    #[error("filling {0} does not have odd numerator and denominator")]
    EvenFilling(Slope),
    #[error("fiber with alpha = 0")]
    ZeroAlpha,
    #[error("cannot parse Seifert invariants: {0}")]
    Parse(String),
    #[error("integer overflow")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BezoutPair {
    pub u: i64,
    pub v: i64,
}

/// `p u + q v = 1` with `0 < u < |q|`.
pub fn bezout(p: i64, q: i64) -> Result<BezoutPair, SeifertError> {
    if q.unsigned_abs() < 2 {
        return Err(SeifertError::ModulusTooSmall(q));
    }
    if (p as i128).gcd(&(q as i128)) != 1 {
        return Err(SeifertError::NotCoprime(p, q));
    }
    let m = q.unsigned_abs() as i128;
    let e = (p as i128).extended_gcd(&m);
    let u = (e.x * e.gcd).rem_euclid(m);
    let v = (1 - p as i128 * u) / q as i128;
    debug_assert_eq!(p as i128 * u + q as i128 * v, 1);
    Ok(BezoutPair {
        u: u as i64,
        v: v as i64,
    })
}

/// `{b, (Oo,0), (α₁,β₁), …}`. Fibers are kept sorted by `|α|`, then `β`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertInvariants {
    b: i64,
    fibers: Vec<(i64, i64)>,
}

impl SeifertInvariants {
    pub fn new(b: i64, mut fibers: Vec<(i64, i64)>) -> Result<SeifertInvariants, SeifertError> {
        if fibers.iter().any(|&(a, _)| a == 0) {
            return Err(SeifertError::ZeroAlpha);
        }
        fibers.sort_by_key(|&(a, beta)| (a.unsigned_abs(), beta, a));
        Ok(SeifertInvariants { b, fibers })
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn fibers(&self) -> &[(i64, i64)] {
        &self.fibers
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},(Oo,0)", self.b)?;
        for (a, b) in &self.fibers {
            write!(f, ",({a},{b})")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for SeifertInvariants {
    type Err = SeifertError;

    fn from_str(s: &str) -> Result<SeifertInvariants, SeifertError> {
        let bad = |m: &str| SeifertError::Parse(m.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = compact
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| bad("expected braces"))?;
        let (b, rest) = body.split_once(',').unwrap_or((body, ""));
        let b: i64 = b.parse().map_err(|_| bad("b must be an integer"))?;
        let rest = rest
            .strip_prefix("(Oo,0)")
            .ok_or_else(|| bad("expected base class (Oo,0)"))?;
        let mut fibers = Vec::new();
        let mut rest = rest;
        while !rest.is_empty() {
            let tail = rest
                .strip_prefix(",(")
                .ok_or_else(|| bad("expected \",(\""))?;
            let (pair, after) = tail.split_once(')').ok_or_else(|| bad("unclosed fiber"))?;
            let (a, beta) = pair
                .split_once(',')
                .ok_or_else(|| bad("fiber needs two entries"))?;
            let a: i64 = a.parse().map_err(|_| bad("alpha must be an integer"))?;
            let beta: i64 = beta.parse().map_err(|_| bad("beta must be an integer"))?;
            fibers.push((a, beta));
            rest = after;
        }
        SeifertInvariants::new(b, fibers)
    }
}

fn check_torus(p: i64, q: i64, filling: Slope) -> Result<(), SeifertError> {
    if p % 2 == 0 || q % 2 == 0 || p.unsigned_abs() < 3 || q.unsigned_abs() < 3 {
        return Err(SeifertError::BadTorusParameters(p, q));
    }
    if (p as i128).gcd(&(q as i128)) != 1 {
        return Err(SeifertError::NotCoprime(p, q));
    }
    if filling.numerator() % 2 == 0 || filling.denominator() % 2 == 0 {
        return Err(SeifertError::EvenFilling(filling));
    }
    Ok(())
}

/// `{0,(Oo,0),(p,2u),(q,2v),(r,s)}` for the quotient of `r/s` filling on
/// the `(p,q)` torus knot.
pub fn quotient_invariants(
    p: i64,
    q: i64,
    filling: Slope,
) -> Result<SeifertInvariants, SeifertError> {
    check_torus(p, q, filling)?;
    let BezoutPair { u, v } = bezout(p, q)?;
    let two = |x: i64| x.checked_mul(2).ok_or(SeifertError::Overflow);
    SeifertInvariants::new(
        0,
        vec![
            (p, two(u)?),
            (q, two(v)?),
            (filling.numerator(), filling.denominator()),
        ],
    )
}

/// `|2r - pqs|`.
pub fn quotient_h1_order(p: i64, q: i64, filling: Slope) -> Result<u128, SeifertError> {
    check_torus(p, q, filling)?;
    let (r, s) = (filling.numerator() as i128, filling.denominator() as i128);
    let pqs = (p as i128 * q as i128)
        .checked_mul(s)
        .ok_or(SeifertError::Overflow)?;
    Ok((2 * r)
        .checked_sub(pqs)
        .ok_or(SeifertError::Overflow)?
        .unsigned_abs())
}

/// `b + Σ βᵢ/αᵢ`, exactly.
fn fiber_sum(inv: &SeifertInvariants) -> Result<Rational, SeifertError> {
    let mut acc = Rational::from_integer(inv.b as i128);
    for &(a, b) in &inv.fibers {
        acc = acc
            .checked_add(&Rational::new(b as i128, a as i128))
            .ok_or(SeifertError::Overflow)?;
    }
    Ok(acc)
}

/// `-(b + Σ βᵢ/αᵢ)`.
pub fn euler_number(inv: &SeifertInvariants) -> Result<Rational, SeifertError> {
    Ok(-fiber_sum(inv)?)
}

/// `|α₁⋯αₙ · (b + Σ βᵢ/αᵢ)|`, infinite when it vanishes.
pub fn sfs_h1_order(inv: &SeifertInvariants) -> Result<H1Order, SeifertError> {
    let sum = fiber_sum(inv)?;
    if sum.is_zero() {
        return Ok(H1Order::Infinite);
    }
    let mut prod = Rational::from_integer(1);
    for &(a, _) in &inv.fibers {
        prod = prod
            .checked_mul(&Rational::from_integer(a as i128))
            .ok_or(SeifertError::Overflow)?;
    }
    let order = prod.checked_mul(&sum).ok_or(SeifertError::Overflow)?;
    debug_assert!(order.is_integer());
    Ok(H1Order::Finite(order.to_integer().unsigned_abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    #[test]
    fn bezout_pairs() {
        assert_eq!(bezout(3, 5).unwrap(), BezoutPair { u: 2, v: -1 });
        assert_eq!(bezout(1, 2).unwrap(), BezoutPair { u: 1, v: 0 });
        assert_eq!(bezout(5, 3).unwrap(), BezoutPair { u: 2, v: -3 });
        assert_eq!(bezout(5, 7).unwrap(), BezoutPair { u: 3, v: -2 });
        assert_eq!(bezout(-3, 5).unwrap(), BezoutPair { u: 3, v: 2 });
        assert_eq!(bezout(3, -5).unwrap(), BezoutPair { u: 2, v: 1 });
        assert_eq!(bezout(4, 6), Err(SeifertError::NotCoprime(4, 6)));
        assert_eq!(bezout(3, 1), Err(SeifertError::ModulusTooSmall(1)));
    }

    #[test]
    fn torus_quotients() {
        let inv = quotient_invariants(3, 5, sl("1")).unwrap();
        assert_eq!(inv.fibers(), &[(1, 1), (3, 4), (5, -2)]);
        assert_eq!(inv.to_string(), "{0,(Oo,0),(1,1),(3,4),(5,-2)}");
        let inv = quotient_invariants(3, 5, sl("3")).unwrap();
        assert_eq!(inv.fibers(), &[(3, 1), (3, 4), (5, -2)]);
        let inv = quotient_invariants(5, 7, sl("1")).unwrap();
        assert_eq!(inv.fibers(), &[(1, 1), (5, 6), (7, -4)]);

        assert_eq!(quotient_h1_order(3, 5, sl("1")).unwrap(), 13);
        assert_eq!(quotient_h1_order(3, 5, sl("-1")).unwrap(), 17);
        assert_eq!(quotient_h1_order(3, 5, sl("15")).unwrap(), 15);

        assert!(matches!(
            quotient_invariants(2, 5, sl("1")),
            Err(SeifertError::BadTorusParameters(..))
        ));
        assert!(matches!(
            quotient_invariants(1, 5, sl("1")),
            Err(SeifertError::BadTorusParameters(..))
        ));
        assert!(matches!(
            quotient_invariants(3, 9, sl("1")),
            Err(SeifertError::NotCoprime(..))
        ));
        assert!(matches!(
            quotient_h1_order(3, 5, sl("2")),
            Err(SeifertError::EvenFilling(_))
        ));
        assert!(matches!(
            quotient_h1_order(3, 5, sl("1/2")),
            Err(SeifertError::EvenFilling(_))
        ));
    }

    #[test]
    fn trefoil_half_surgery() {
        let inv: SeifertInvariants = "{1,(Oo,0),(-2,1),(-3,1),(-11,2)}".parse().unwrap();
        assert_eq!(sfs_h1_order(&inv).unwrap(), H1Order::Finite(1));
        assert_eq!(euler_number(&inv).unwrap(), Rational::new(1, 66));
    }

    #[test]
    fn trivial_orders() {
        let s2s1 = SeifertInvariants::new(0, vec![]).unwrap();
        assert_eq!(sfs_h1_order(&s2s1).unwrap(), H1Order::Infinite);
        assert_eq!(euler_number(&s2s1).unwrap(), Rational::from_integer(0));
        let s3 = SeifertInvariants::new(1, vec![]).unwrap();
        assert_eq!(sfs_h1_order(&s3).unwrap(), H1Order::Finite(1));
        let cancel = SeifertInvariants::new(0, vec![(2, 1), (2, -1)]).unwrap();
        assert_eq!(euler_number(&cancel).unwrap(), Rational::from_integer(0));
    }

    #[test]
    fn printed_form_round_trips() {
        let inv: SeifertInvariants = " { 0 , (Oo,0), (5,-2), (3,4), (1,1) } ".parse().unwrap();
        assert_eq!(inv.to_string(), "{0,(Oo,0),(1,1),(3,4),(5,-2)}");
        for bad in [
            "",
            "{}",
            "{x,(Oo,0)}",
            "{0,(No,0)}",
            "{0,(Oo,0),(0,1)}",
            "{0,(Oo,0),(2,1",
            "0,(Oo,0)",
        ] {
            assert!(bad.parse::<SeifertInvariants>().is_err(), "{bad}");
        }
    }
}
