//! Rationally framed links, Rolfsen twists and blow-downs.
//!
//! The state is only the framing and linking data. A Rolfsen twist along an
//! unknotted component `j` is exactly determined on that data, so first
//! homology can be tracked through a sequence of moves without diagrams.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::det_bareiss;
use crate::slope::{Slope, SlopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurgeryError {
    #[error("component index {0} out of range")]
    NoSuchComponent(usize),
    #[error("component {0:?} is not flagged unknotted")]
    NotUnknotted(String),
    #[error("component {name:?} has framing {framing}; blow-down needs ±1")]
    NotUnitFraming { name: String, framing: Slope },
    #[error("linking matrix is not symmetric with zero diagonal")]
    BadLinkingMatrix,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("integer overflow")]
    Overflow,
    #[error(transparent)]
    Slope(#[from] SlopeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkComponent {
    pub name: String,
    pub framing: Slope,
    pub unknotted: bool,
}

/// Order of a finitely generated abelian group with one generator per
/// component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum H1Order {
    Finite(u128),
    Infinite,
}

impl fmt::Display for H1Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            H1Order::Finite(n) => write!(f, "{n}"),
            H1Order::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedLink {
    components: Vec<LinkComponent>,
    linking: Vec<Vec<i64>>,
}

impl FramedLink {
    pub fn new(
        components: Vec<LinkComponent>,
        linking: Vec<Vec<i64>>,
    ) -> Result<FramedLink, SurgeryError> {
        let n = components.len();
        let ok = linking.len() == n
            && linking.iter().all(|r| r.len() == n)
            && (0..n).all(|i| linking[i][i] == 0 && (0..n).all(|j| linking[i][j] == linking[j][i]));
        if !ok {
            return Err(SurgeryError::BadLinkingMatrix);
        }
        Ok(FramedLink {
            components,
            linking,
        })
    }

    /// A single component with no partners.
    pub fn knot(name: &str, framing: Slope, unknotted: bool) -> FramedLink {
        FramedLink {
            components: vec![LinkComponent {
                name: name.to_string(),
                framing,
                unknotted,
            }],
            linking: vec![vec![0]],
        }
    }

    pub fn components(&self) -> &[LinkComponent] {
        &self.components
    }

    pub fn linking(&self, i: usize, j: usize) -> i64 {
        self.linking[i][j]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    fn component(&self, j: usize) -> Result<&LinkComponent, SurgeryError> {
        self.components
            .get(j)
            .ok_or(SurgeryError::NoSuchComponent(j))
    }

    /// Presentation matrix of `H₁` on the meridians: row `i` is
    /// `pᵢ μᵢ + qᵢ Σⱼ lk(i,j) μⱼ`.
    pub fn presentation_matrix(&self) -> Vec<Vec<i128>> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let f = self.components[i].framing;
                (0..n)
                    .map(|j| {
                        if i == j {
                            f.numerator() as i128
                        } else {
                            f.denominator() as i128 * self.linking[i][j] as i128
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Removes component `j`.
    pub fn delete(&self, j: usize) -> Result<FramedLink, SurgeryError> {
        self.component(j)?;
        let mut components = self.components.clone();
        components.remove(j);
        let linking = self
            .linking
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        Ok(FramedLink {
            components,
            linking,
        })
    }

    /// Drops every `∞`-framed component; they do not change the manifold.
    pub fn without_infinite(&self) -> FramedLink {
        let mut out = self.clone();
        while let Some(j) = out.components.iter().position(|c| c.framing.is_infinite()) {
            out = out.delete(j).expect("index in range");
        }
        out
    }
}

pub fn h1_order(link: &FramedLink) -> Result<H1Order, SurgeryError> {
    let det = det_bareiss(link.presentation_matrix()).ok_or(SurgeryError::Overflow)?;
    Ok(match det {
        0 => H1Order::Infinite,
        d => H1Order::Finite(d.unsigned_abs()),
    })
}

fn checked(v: i128) -> Result<i64, SurgeryError> {
    i64::try_from(v).map_err(|_| SurgeryError::Overflow)
}

/// `n` full twists along the unknotted component `j`.
///
/// Framing of `j`: `p/q ↦ p/(q + n p)`. Other framings:
/// `a/b ↦ a/b + n·lk(i,j)²`. Linking: `lk(i,k) ↦ lk(i,k) + n·lk(i,j)·lk(k,j)`.
pub fn rolfsen_twist(link: &FramedLink, j: usize, n: i64) -> Result<FramedLink, SurgeryError> {
    let target = link.component(j)?;
    if !target.unknotted {
        return Err(SurgeryError::NotUnknotted(target.name.clone()));
    }
    let n128 = n as i128;
    let mut out = link.clone();
    for i in 0..link.len() {
        let f = link.components[i].framing;
        let (p, q) = (f.numerator() as i128, f.denominator() as i128);
        out.components[i].framing = if i == j {
            Slope::from_i128(p, q + n128 * p)?
        } else {
            let lk = link.linking[i][j] as i128;
            let num = n128
                .checked_mul(lk * lk)
                .and_then(|x| x.checked_mul(q))
                .and_then(|x| x.checked_add(p))
                .ok_or(SurgeryError::Overflow)?;
            Slope::from_i128(num, q)?
        };
    }
    for i in 0..link.len() {
        for k in 0..link.len() {
            if i == j || k == j || i == k {
                continue;
            }
            let delta = (link.linking[i][j] as i128 * link.linking[k][j] as i128)
                .checked_mul(n128)
                .and_then(|d| d.checked_add(link.linking[i][k] as i128))
                .ok_or(SurgeryError::Overflow)?;
            out.linking[i][k] = checked(delta)?;
        }
    }
    Ok(out)
}

/// Blows down a `±1`-framed unknot: twist by `∓1`, then delete it.
pub fn blow_down(link: &FramedLink, j: usize) -> Result<FramedLink, SurgeryError> {
    let c = link.component(j)?;
    if !c.unknotted {
        return Err(SurgeryError::NotUnknotted(c.name.clone()));
    }
    let n = match (c.framing.numerator(), c.framing.denominator()) {
        (1, 1) => -1,
        (-1, 1) => 1,
        _ => {
            return Err(SurgeryError::NotUnitFraming {
                name: c.name.clone(),
                framing: c.framing,
            })
        }
    };
    let twisted = rolfsen_twist(link, j, n)?;
    debug_assert!(twisted.components[j].framing.is_infinite());
    twisted.delete(j)
}

impl fmt::Display for FramedLink {
    /// `components: n`, then `name framing unknotted` per component, then
    /// the rows of the linking matrix.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "components: {}", self.len())?;
        for c in &self.components {
            writeln!(f, "{} {} {}", c.name, c.framing, c.unknotted)?;
        }
        for row in &self.linking {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for FramedLink {
    type Err = SurgeryError;

    fn from_str(s: &str) -> Result<FramedLink, SurgeryError> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let err = |line: usize, msg: &str| SurgeryError::Parse {
            line,
            msg: msg.to_string(),
        };
        let (line, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing \"components: n\" header"))?;
        let n: usize = header
            .strip_prefix("components:")
            .and_then(|v| v.trim().parse().ok())
            .filter(|&n| n <= 1024)
            .ok_or_else(|| err(line, "expected \"components: n\""))?;
        let mut components = Vec::with_capacity(n);
        for _ in 0..n {
            let (line, text) = lines
                .next()
                .ok_or_else(|| err(line, "missing component line"))?;
            let toks: Vec<&str> = text.split_whitespace().collect();
            let [name, framing, flag] = toks.as_slice() else {
                return Err(err(line, "expected \"name framing unknotted\""));
            };
            let framing: Slope = framing
                .parse()
                .map_err(|e: SlopeError| err(line, &e.to_string()))?;
            let unknotted = match *flag {
                "true" | "yes" | "unknotted" => true,
                "false" | "no" | "knotted" => false,
                _ => return Err(err(line, "unknotted flag must be true or false")),
            };
            components.push(LinkComponent {
                name: name.to_string(),
                framing,
                unknotted,
            });
        }
        let mut linking = Vec::with_capacity(n);
        for _ in 0..n {
            let (line, text) = lines
                .next()
                .ok_or_else(|| err(line, "missing linking matrix row"))?;
            let row: Vec<i64> = text
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| err(line, "expected integers")))
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(err(line, "linking matrix row has the wrong length"));
            }
            linking.push(row);
        }
        if let Some((line, _)) = lines.next() {
            return Err(err(line, "trailing data"));
        }
        FramedLink::new(components, linking)
    }
}
