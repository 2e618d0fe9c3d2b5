//! Surgery slopes and their decomposition into words in the generators
//! `S = [[0,-1],[1,0]]` and `T = [[1,1],[0,1]]` of `SL(2, Z)`.
//!
//! A slope `p/q` denotes the boundary class `p·μ + q·λ`. The gluing matrix of
//! a `p/q` filling is any `A ∈ SL(2, Z)` with `A·(1,0)ᵀ = (p,q)ᵀ`; the word
//! returned by [`slope_to_word`] is a canonical choice of such an `A`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    #[error("0/0 is not a slope")]
    ZeroOverZero,
    #[error("cannot parse slope {0:?}: expected \"p/q\", \"p\" or \"inf\"")]
    Parse(String),
    #[error("matrix has determinant {0}, expected 1")]
    Determinant(i128),
    #[error("integer overflow in slope arithmetic")]
    Overflow,
}

/// A reduced extended rational `p/q` with `q ≥ 0`.
///
/// `∞` is `1/0` and `0` is `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };
    pub const ZERO: Slope = Slope { p: 0, q: 1 };

    pub fn new(p: i64, q: i64) -> Result<Slope, SlopeError> {
        Slope::from_i128(p as i128, q as i128)
    }

    pub fn integer(n: i64) -> Slope {
        Slope { p: n, q: 1 }
    }

    /// Reduces and sign-normalizes a pair of wide integers.
    pub(crate) fn from_i128(p: i128, q: i128) -> Result<Slope, SlopeError> {
        if p == 0 && q == 0 {
            return Err(SlopeError::ZeroOverZero);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope {
            p: i64::try_from(p).map_err(|_| SlopeError::Overflow)?,
            q: i64::try_from(q).map_err(|_| SlopeError::Overflow)?,
        })
    }

    pub fn numerator(&self) -> i64 {
        self.p
    }

    pub fn denominator(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn is_integral(&self) -> bool {
        self.q == 1
    }

    /// `⌈p/q⌉` for a finite slope.
    fn ceil(&self) -> i64 {
        debug_assert!(self.q > 0);
        self.p.div_euclid(self.q) + i64::from(self.p.rem_euclid(self.q) != 0)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            0 => write!(f, "inf"),
            1 => write!(f, "{}", self.p),
            q => write!(f, "{}/{}", self.p, q),
        }
    }
}

impl FromStr for Slope {
    type Err = SlopeError;

    fn from_str(s: &str) -> Result<Slope, SlopeError> {
        let t = s.trim();
        let bad = || SlopeError::Parse(s.to_string());
        match t {
            "inf" | "∞" | "1/0" | "-1/0" => return Ok(Slope::INFINITY),
            _ => {}
        }
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let p: i64 = num.parse().map_err(|_| bad())?;
        let q: i64 = den.parse().map_err(|_| bad())?;
        Slope::new(p, q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    T,
    TInv,
}

impl Letter {
    pub fn matrix(self) -> IntMatrix {
        match self {
            Letter::S => IntMatrix([[0, -1], [1, 0]]),
            Letter::T => IntMatrix([[1, 1], [0, 1]]),
            Letter::TInv => IntMatrix([[1, -1], [0, 1]]),
        }
    }
}

/// A 2×2 integer matrix. Entries are wide so that products of words built
/// from `i64` slopes cannot overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMatrix(pub [[i128; 2]; 2]);

impl IntMatrix {
    pub const IDENTITY: IntMatrix = IntMatrix([[1, 0], [0, 1]]);

    pub fn det(&self) -> i128 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    pub fn first_column(&self) -> (i128, i128) {
        (self.0[0][0], self.0[1][0])
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        let [[a, b], [c, d]] = self.0;
        let [[e, f], [g, h]] = rhs.0;
        IntMatrix([
            [a * e + b * g, a * f + b * h],
            [c * e + d * g, c * f + d * h],
        ])
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: (i128, i128)) -> (i128, i128) {
        let [[a, b], [c, d]] = self.0;
        (a * v.0 + b * v.1, c * v.0 + d * v.1)
    }
}

/// A word in `S`, `T`, `T⁻¹` together with the matrix it evaluates to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SL2Word {
    letters: Vec<Letter>,
    matrix: IntMatrix,
}

impl SL2Word {
    pub fn new(letters: Vec<Letter>) -> SL2Word {
        let matrix = word_to_matrix(&letters);
        SL2Word { letters, matrix }
    }

    pub fn identity() -> SL2Word {
        SL2Word {
            letters: Vec::new(),
            matrix: IntMatrix::IDENTITY,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn matrix(&self) -> IntMatrix {
        self.matrix
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Signed exponents of the `T` runs that precede each `S`.
    ///
    /// For `T^a₁ S T^a₂ S … T^a_k S` this is `[a₁, …, a_k]`; a trailing `T`
    /// run with no `S` after it is reported as a final entry.
    pub fn twist_exponents(&self) -> Vec<i64> {
        let mut out = Vec::new();
        let mut run = 0i64;
        let mut open = false;
        for l in &self.letters {
            match l {
                Letter::T => {
                    run += 1;
                    open = true;
                }
                Letter::TInv => {
                    run -= 1;
                    open = true;
                }
                Letter::S => {
                    out.push(run);
                    run = 0;
                    open = false;
                }
            }
        }
        if open {
            out.push(run);
        }
        out
    }
}

impl fmt::Display for SL2Word {
    /// Prints runs of `T` as powers, e.g. `T S T^3 S`; the empty word is `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            match self.letters[i] {
                Letter::S => {
                    parts.push("S".into());
                    i += 1;
                }
                l => {
                    let mut n = 0;
                    while i < self.letters.len() && self.letters[i] == l {
                        n += 1;
                        i += 1;
                    }
                    let e = if l == Letter::T { n } else { -n };
                    parts.push(if e == 1 { "T".into() } else { format!("T^{e}") });
                }
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for SL2Word {
    type Err = SlopeError;

    /// Parses words such as `T S T^3 S`, `T^-2 S` or `e`.
    fn from_str(s: &str) -> Result<SL2Word, SlopeError> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            match tok {
                "e" | "ε" => {}
                "S" => letters.push(Letter::S),
                "T" => letters.push(Letter::T),
                _ => {
                    let exp = tok
                        .strip_prefix("T^")
                        .and_then(|e| e.parse::<i64>().ok())
                        .filter(|e| e.unsigned_abs() <= 1 << 20)
                        .ok_or_else(|| SlopeError::Parse(s.to_string()))?;
                    let l = if exp >= 0 { Letter::T } else { Letter::TInv };
                    letters.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
                }
            }
        }
        Ok(SL2Word::new(letters))
    }
}

/// Ordered product of the letter matrices.
pub fn word_to_matrix(letters: &[Letter]) -> IntMatrix {
    letters
        .iter()
        .fold(IntMatrix::IDENTITY, |m, l| m.mul(&l.matrix()))
}

/// Exponents `[a₁, …, a_k]` of the canonical word `T^a₁ S … T^a_k S`.
///
/// `word(∞) = ε` and `word(x) = T^a S word(-1/(x - a))` with `a = ⌈x⌉`.
/// Every exponent after the first is at least 1; the first is negative
/// exactly when `x ≤ -1`. The length of the list is the number of steps of
/// the ceiling continued fraction of `p/q`.
pub fn canonical_exponents(s: Slope) -> Vec<i64> {
    canonical_exponents_bounded(s, usize::MAX).expect("unbounded")
}

/// [`canonical_exponents`], giving up with `None` past `limit` entries.
///
/// The list can be as long as the denominator (`n/(n-1)` gives `n` entries),
/// so callers facing untrusted input should bound it.
pub fn canonical_exponents_bounded(s: Slope, limit: usize) -> Option<Vec<i64>> {
    let mut out = Vec::new();
    let mut x = s;
    while !x.is_infinite() {
        if out.len() == limit {
            return None;
        }
        let a = x.ceil();
        out.push(a);
        // -1/(x - a) = q / (a q - p); a q - p lies in [0, q).
        let (p, q) = (x.p as i128, x.q as i128);
        x = Slope::from_i128(q, a as i128 * q - p).expect("denominator shrinks");
    }
    Some(out)
}

/// `T^a₁ S T^a₂ S …` for the given exponents, as printed by [`SL2Word`].
pub fn format_exponents(exponents: &[i64]) -> String {
    if exponents.is_empty() {
        return "e".to_string();
    }
    let mut parts = Vec::new();
    for &a in exponents {
        match a {
            0 => {}
            1 => parts.push("T".to_string()),
            _ => parts.push(format!("T^{a}")),
        }
        parts.push("S".to_string());
    }
    parts.join(" ")
}

/// Matrix of `T^a₁ S … T^a_k S`, `None` on overflow.
pub fn exponents_to_matrix(exponents: &[i64]) -> Option<IntMatrix> {
    let mut m = IntMatrix::IDENTITY.0;
    for &a in exponents {
        let a = a as i128;
        // (M · T^a) · S
        for row in m.iter_mut() {
            let shifted = row[0].checked_mul(a)?.checked_add(row[1])?;
            *row = [shifted, row[0].checked_neg()?];
        }
    }
    Some(IntMatrix(m))
}

/// Canonical word `W` with `W·(1,0)ᵀ = (p,q)ᵀ`, built from
/// [`canonical_exponents`]. A negative leading exponent is written with `T⁻¹`.
pub fn slope_to_word(s: Slope) -> SL2Word {
    let mut letters = Vec::new();
    for a in canonical_exponents(s) {
        let l = if a >= 0 { Letter::T } else { Letter::TInv };
        letters.extend(std::iter::repeat_n(l, a.unsigned_abs() as usize));
        letters.push(Letter::S);
    }
    SL2Word::new(letters)
}

/// Reads the slope `p/q` off the first column of a determinant-one matrix.
pub fn matrix_to_slope(m: &IntMatrix) -> Result<Slope, SlopeError> {
    let det = m.det();
    if det != 1 {
        return Err(SlopeError::Determinant(det));
    }
    let (p, q) = m.first_column();
    Slope::from_i128(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(Slope::new(-2, -3).unwrap(), sl("2/3"));
        assert_eq!(Slope::new(4, -6).unwrap(), sl("-2/3"));
        assert_eq!(Slope::new(-1, 0).unwrap(), Slope::INFINITY);
        assert_eq!(Slope::new(0, -5).unwrap(), Slope::ZERO);
        assert_eq!(Slope::new(0, 0), Err(SlopeError::ZeroOverZero));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(sl("inf"), Slope::INFINITY);
        assert_eq!(sl("7"), Slope::integer(7));
        assert_eq!(sl(" -1/3 ").to_string(), "-1/3");
        assert_eq!(sl("6/4").to_string(), "3/2");
        assert_eq!(Slope::INFINITY.to_string(), "inf");
        assert!("1/x".parse::<Slope>().is_err());
        assert!("".parse::<Slope>().is_err());
        assert!("99999999999999999999".parse::<Slope>().is_err());
    }

    #[test]
    fn pillowcase_labels() {
        let cases = [
            ("inf", "e"),
            ("0", "S"),
            ("1", "T S"),
            ("3", "T^3 S"),
            ("-1/3", "S T^3 S"),
            ("2/3", "T S T^3 S"),
        ];
        for (s, w) in cases {
            assert_eq!(slope_to_word(sl(s)).to_string(), w, "slope {s}");
        }
    }

    #[test]
    fn letter_products() {
        assert_eq!(word_to_matrix(&[]), IntMatrix::IDENTITY);
        assert_eq!(word_to_matrix(&[Letter::S]), IntMatrix([[0, -1], [1, 0]]));
        let w: SL2Word = "T S T^3 S".parse().unwrap();
        // T S = [[1,-1],[1,0]], T^3 S = [[3,-1],[1,0]]; product by hand.
        assert_eq!(w.matrix(), IntMatrix([[2, -1], [3, -1]]));
        assert_eq!(w.matrix().det(), 1);
        let inv: SL2Word = "T^-2 T^2".parse().unwrap();
        assert_eq!(inv.matrix(), IntMatrix::IDENTITY);
    }

    #[test]
    fn first_column_recovery() {
        assert_eq!(
            matrix_to_slope(&IntMatrix::IDENTITY).unwrap(),
            Slope::INFINITY
        );
        assert_eq!(
            matrix_to_slope(&IntMatrix([[0, -1], [1, 0]])).unwrap(),
            Slope::ZERO
        );
        assert_eq!(
            matrix_to_slope(&IntMatrix([[-2, 1], [-3, 1]])).unwrap(),
            sl("2/3")
        );
        assert_eq!(
            matrix_to_slope(&IntMatrix([[2, 0], [0, 1]])),
            Err(SlopeError::Determinant(2))
        );
    }

    #[test]
    fn negative_slopes_use_inverse_twists() {
        let w = slope_to_word(sl("-5/2"));
        assert_eq!(w.to_string(), "T^-2 S T^2 S");
        assert_eq!(w.matrix().first_column(), (-5, 2));
        assert_eq!(w.twist_exponents(), vec![-2, 2]);
    }

    #[test]
    fn twist_exponents_of_labels() {
        assert_eq!(slope_to_word(sl("2/3")).twist_exponents(), vec![1, 3]);
        assert_eq!(slope_to_word(sl("0")).twist_exponents(), vec![0]);
        assert!(slope_to_word(Slope::INFINITY).twist_exponents().is_empty());
    }
}
