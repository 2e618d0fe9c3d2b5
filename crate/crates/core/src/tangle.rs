//! Rational tangles and two-bridge branch loci (the Montesinos trick).
//!
//! A `p/q` filling of a knot whose involution restricts to the elliptic
//! involution on the boundary torus is the double branched cover of the
//! quotient, with the `p/q` rational tangle glued into the pillowcase. `S`
//! acts on the pillowcase as a quarter turn and `T` as a half twist of the
//! two right-hand corners, so the canonical word of a slope doubles as a
//! recipe for drawing the tangle.
//!
//! Diagrams use planar-diagram codes: each crossing lists its four arc labels
//! counterclockwise, starting from the incoming under-strand.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::det_bareiss;
use crate::slope::{canonical_exponents, Slope, SlopeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("arc {arc} appears {count} times, expected 2")]
    ArcMultiplicity { arc: u32, count: usize },
    #[error("loop arc {0} also appears in a crossing or twice as a loop")]
    LoopArc(u32),
    #[error("diagram has no components")]
    Empty,
    #[error("crossing data is not a planar diagram (Euler characteristic {0})")]
    NotPlanar(i64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("integer overflow")]
    Overflow,
    #[error(transparent)]
    Slope(#[from] SlopeError),
}

/// Signed twist counts `(a₁, …, a_k)` of a rational tangle, outermost first.
///
/// The tangle is obtained from the trivial `∞` tangle by alternately rotating
/// a quarter turn and adding `a_i` horizontal half twists, innermost entry
/// first. Its fraction is `a₁ − 1/(a₂ − 1/(… − 1/a_k))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TwistVector(Vec<i64>);

impl TwistVector {
    pub fn new(entries: Vec<i64>) -> TwistVector {
        TwistVector(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of crossings in the standard diagram.
    pub fn crossing_count(&self) -> u128 {
        self.0.iter().map(|a| a.unsigned_abs() as u128).sum()
    }

    /// Conway fraction of the tangle.
    pub fn fraction(&self) -> Result<Slope, TangleError> {
        // (num, den) runs through T^a S applied to (1, 0).
        let (mut num, mut den) = (1i128, 0i128);
        for &a in self.0.iter().rev() {
            let next = (a as i128)
                .checked_mul(num)
                .and_then(|x| x.checked_sub(den))
                .ok_or(TangleError::Overflow)?;
            den = num;
            num = next;
        }
        Ok(Slope::from_i128(num, den)?)
    }
}

impl fmt::Display for TwistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Twist vector of the canonical pillowcase word of `s`; `∞` gives `()`.
pub fn slope_to_twist_vector(s: Slope) -> TwistVector {
    TwistVector(canonical_exponents(s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// One crossing: arcs counterclockwise from the incoming under-strand, so
/// the under-strand runs `arcs[0] → arcs[2]` and the over-strand joins
/// `arcs[1]` and `arcs[3]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [u32; 4],
    pub sign: Sign,
}

/// A link diagram on the sphere.
///
/// Crossing-free components are listed separately as loop arcs, which do
/// not appear in any crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    loops: Vec<u32>,
    components: Vec<Vec<u32>>,
}

type Port = (usize, usize);

impl PlanarDiagram {
    /// Validates crossing data and computes the components.
    pub fn new(crossings: Vec<Crossing>, loops: Vec<u32>) -> Result<PlanarDiagram, TangleError> {
        let ports = arc_ports(&crossings)?;
        let mut seen = BTreeSet::new();
        for &l in &loops {
            if ports.contains_key(&l) || !seen.insert(l) {
                return Err(TangleError::LoopArc(l));
            }
        }
        if crossings.is_empty() && loops.is_empty() {
            return Err(TangleError::Empty);
        }
        let arcs: Vec<[u32; 4]> = crossings.iter().map(|c| c.arcs).collect();
        let mut components: Vec<Vec<u32>> =
            strands(&arcs, &ports).into_iter().map(|s| s.arcs).collect();
        components.extend(loops.iter().map(|&l| vec![l]));
        let d = PlanarDiagram {
            crossings,
            loops,
            components,
        };
        d.faces()?;
        Ok(d)
    }

    /// Builds an oriented, consistently labelled diagram from unoriented
    /// crossings given counterclockwise with the under-strand on slots 0
    /// and 2. Arcs are relabelled `1, 2, …` along each component.
    fn from_unoriented(
        raw: Vec<[u32; 4]>,
        loop_count: usize,
    ) -> Result<PlanarDiagram, TangleError> {
        let ports = arc_ports_raw(&raw)?;
        let strands = strands(&raw, &ports);
        let mut label: HashMap<u32, u32> = HashMap::new();
        // entry slot of the under- and over-strand at each crossing
        let mut under_in = vec![usize::MAX; raw.len()];
        let mut over_in = vec![usize::MAX; raw.len()];
        let mut next = 1u32;
        for s in &strands {
            for &a in &s.arcs {
                label.insert(a, next);
                next += 1;
            }
            for &(c, slot) in &s.entries {
                if slot % 2 == 0 {
                    under_in[c] = slot;
                } else {
                    over_in[c] = slot;
                }
            }
        }
        let crossings = raw
            .iter()
            .enumerate()
            .map(|(c, a)| {
                let shift = under_in[c];
                let arcs = [0, 1, 2, 3].map(|k| label[&a[(shift + k) % 4]]);
                // over-strand entering at the position just before the
                // incoming under-strand means a positive crossing
                let sign = if (over_in[c] + 4 - shift) % 4 == 3 {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                Crossing { arcs, sign }
            })
            .collect();
        let loops = (0..loop_count as u32).map(|i| next + i).collect();
        PlanarDiagram::new(crossings, loops)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn loops(&self) -> &[u32] {
        &self.loops
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings
            .iter()
            .map(|c| if c.sign == Sign::Positive { 1 } else { -1 })
            .sum()
    }

    /// Number of connected pieces of the projection, loops included.
    fn pieces(&self) -> usize {
        let n = self.crossings.len();
        let mut uf = UnionFind::new(n);
        let mut first: HashMap<u32, usize> = HashMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            for a in c.arcs {
                if let Some(&j) = first.get(&a) {
                    uf.union(i, j);
                } else {
                    first.insert(a, i);
                }
            }
        }
        uf.classes() + self.loops.len()
    }

    /// Faces of a connected diagram as a map from corner `(crossing, k)`
    /// (the wedge between slots `k` and `k+1`) to face index.
    fn faces(&self) -> Result<Vec<[usize; 4]>, TangleError> {
        let n = self.crossings.len();
        let ports = arc_ports(&self.crossings)?;
        let mut uf = UnionFind::new(4 * n);
        for (x, c) in self.crossings.iter().enumerate() {
            for k in 0..4 {
                let arc = c.arcs[(k + 1) % 4];
                let (y, j) = other_port(&ports[&arc], (x, (k + 1) % 4));
                uf.union(4 * x + k, 4 * y + j);
            }
        }
        let mut index = HashMap::new();
        let mut faces = vec![[0usize; 4]; n];
        for (x, face) in faces.iter_mut().enumerate() {
            for (k, slot) in face.iter_mut().enumerate() {
                let root = uf.find(4 * x + k);
                let len = index.len();
                *slot = *index.entry(root).or_insert(len);
            }
        }
        if n > 0 && self.pieces() == 1 {
            let euler = n as i64 - 2 * n as i64 + index.len() as i64;
            if euler != 2 {
                return Err(TangleError::NotPlanar(euler));
            }
        }
        Ok(faces)
    }

    /// Goeritz matrix of the faces of the given checkerboard colour, with
    /// the row and column of the first face of that colour removed. Colour
    /// `false` is the class of the face at corner 0 of the first crossing.
    pub fn goeritz_matrix(&self, colour: bool) -> Result<Vec<Vec<i128>>, TangleError> {
        let faces = self.faces()?;
        let nfaces = faces.iter().flatten().max().map_or(0, |m| m + 1);
        // across every arc the two sides get opposite colours
        let mut adj = vec![Vec::new(); nfaces];
        for f in &faces {
            for k in 0..4 {
                let (a, b) = (f[(k + 3) % 4], f[k]);
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let mut col: Vec<Option<bool>> = vec![None; nfaces];
        let mut stack = Vec::new();
        for start in 0..nfaces {
            if col[start].is_some() {
                continue;
            }
            col[start] = Some(false);
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    match col[v] {
                        None => {
                            col[v] = Some(!col[u].unwrap());
                            stack.push(v);
                        }
                        Some(c) if c == col[u].unwrap() => {
                            return Err(TangleError::NotPlanar(0));
                        }
                        _ => {}
                    }
                }
            }
        }
        let white: Vec<usize> = (0..nfaces).filter(|&f| col[f] == Some(colour)).collect();
        let pos: HashMap<usize, usize> = white.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let m = white.len();
        let mut g = vec![vec![0i128; m]; m];
        for f in &faces {
            let (k, eta) = if col[f[0]] == Some(colour) {
                (0, 1)
            } else {
                (1, -1)
            };
            let (a, b) = (pos[&f[k]], pos[&f[k + 2]]);
            if a != b {
                g[a][b] += eta;
                g[b][a] += eta;
                g[a][a] -= eta;
                g[b][b] -= eta;
            }
        }
        if m > 0 {
            g.remove(0);
            for row in &mut g {
                row.remove(0);
            }
        }
        Ok(g)
    }
}

impl fmt::Display for PlanarDiagram {
    /// One crossing per line, `X a b c d ±`; crossing-free components as
    /// `L a`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            let [a, b, cc, d] = c.arcs;
            writeln!(f, "X {a} {b} {cc} {d} {}", c.sign.symbol())?;
        }
        for l in &self.loops {
            writeln!(f, "L {l}")?;
        }
        Ok(())
    }
}

impl FromStr for PlanarDiagram {
    type Err = TangleError;

    fn from_str(s: &str) -> Result<PlanarDiagram, TangleError> {
        let mut crossings = Vec::new();
        let mut loops = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = i + 1;
            let err = |msg: &str| TangleError::Parse {
                line,
                msg: msg.to_string(),
            };
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let toks: Vec<&str> = text.split_whitespace().collect();
            let num = |t: &str| t.parse::<u32>().map_err(|_| err("expected an arc label"));
            match toks.as_slice() {
                ["X", a, b, c, d, sign] => {
                    let sign = match *sign {
                        "+" => Sign::Positive,
                        "-" => Sign::Negative,
                        _ => return Err(err("expected crossing sign + or -")),
                    };
                    crossings.push(Crossing {
                        arcs: [num(a)?, num(b)?, num(c)?, num(d)?],
                        sign,
                    });
                }
                ["L", a] => loops.push(num(a)?),
                _ => return Err(err("expected \"X a b c d ±\" or \"L a\"")),
            }
        }
        PlanarDiagram::new(crossings, loops)
    }
}

/// `|det|` of the Goeritz matrix. Split diagrams have determinant 0.
pub fn diagram_determinant(d: &PlanarDiagram) -> Result<u128, TangleError> {
    if d.pieces() > 1 {
        return Ok(0);
    }
    if d.crossings.is_empty() {
        return Ok(1);
    }
    let g = d.goeritz_matrix(false)?;
    let det = det_bareiss(g).ok_or(TangleError::Overflow)?;
    Ok(det.unsigned_abs())
}

/// Diagram of the two-bridge link `b(p, q)`: the numerator closure of the
/// `p/q` rational tangle. `∞` gives the crossing-free unknot and `0` the
/// two-component unlink.
pub fn two_bridge_diagram(s: Slope) -> Result<PlanarDiagram, TangleError> {
    let mut t = TangleBuilder::infinity();
    for &a in canonical_exponents(s).iter().rev() {
        t.rotate();
        for _ in 0..a.unsigned_abs() {
            t.twist(a > 0);
        }
    }
    t.numerator_closure()
}

/// The quotient of the knot exterior, as seen from the branch locus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuotientArc {
    /// The image of the knot is an unknotted arc in a ball.
    Unknotted,
    /// A knotted arc that is kept symbolic, named after the knot.
    Opaque(String),
}

/// Branch locus of a filling: the outer tangle from the knot exterior
/// together with the rational tangle of the filling slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchLocus {
    pub outer: QuotientArc,
    pub inner: TwistVector,
    pub slope: Slope,
}

impl BranchLocus {
    /// Explicit diagram when the outer tangle is trivial.
    pub fn realize(&self) -> Option<Result<PlanarDiagram, TangleError>> {
        match self.outer {
            QuotientArc::Unknotted => Some(two_bridge_diagram(self.slope)),
            QuotientArc::Opaque(_) => None,
        }
    }
}

pub fn branch_locus(outer: QuotientArc, s: Slope) -> BranchLocus {
    BranchLocus {
        outer,
        inner: slope_to_twist_vector(s),
        slope: s,
    }
}

/// A four-ended tangle under construction. Ends are `NW, NE, SE, SW`.
struct TangleBuilder {
    crossings: Vec<[u32; 4]>,
    ends: [u32; 4],
    next: u32,
}

impl TangleBuilder {
    /// Two vertical strands, `NW–SW` and `NE–SE`.
    fn infinity() -> TangleBuilder {
        TangleBuilder {
            crossings: Vec::new(),
            ends: [0, 1, 1, 0],
            next: 2,
        }
    }

    /// Clockwise quarter turn of the whole picture.
    fn rotate(&mut self) {
        let [nw, ne, se, sw] = self.ends;
        self.ends = [sw, nw, ne, se];
    }

    /// Adds one crossing to the right of the tangle, twisting the `NE` and
    /// `SE` ends around each other.
    fn twist(&mut self, positive: bool) {
        let (ne, se) = (self.ends[1], self.ends[2]);
        let (new_ne, new_se) = (self.next, self.next + 1);
        self.next += 2;
        // slot positions around the new crossing, counterclockwise
        let slots = if positive {
            [se, new_se, new_ne, ne] // SW, SE, NE, NW: under-strand SW–NE
        } else {
            [new_se, new_ne, ne, se] // SE, NE, NW, SW: under-strand SE–NW
        };
        self.crossings.push(slots);
        self.ends[1] = new_ne;
        self.ends[2] = new_se;
    }

    /// Joins `NW` to `NE` and `SW` to `SE`.
    fn numerator_closure(self) -> Result<PlanarDiagram, TangleError> {
        let mut uf = UnionFind::new(self.next as usize);
        let [nw, ne, se, sw] = self.ends;
        uf.union(nw as usize, ne as usize);
        uf.union(sw as usize, se as usize);
        let raw: Vec<[u32; 4]> = self
            .crossings
            .iter()
            .map(|c| c.map(|a| uf.find(a as usize) as u32))
            .collect();
        let used: BTreeSet<u32> = raw.iter().flatten().copied().collect();
        let loops = [nw, sw]
            .iter()
            .map(|&a| uf.find(a as usize) as u32)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .filter(|a| !used.contains(a))
            .count();
        PlanarDiagram::from_unoriented(raw, loops)
    }
}

struct Strand {
    arcs: Vec<u32>,
    /// `(crossing, slot)` at which the strand enters each crossing.
    entries: Vec<Port>,
}

fn arc_ports(crossings: &[Crossing]) -> Result<BTreeMap<u32, Vec<Port>>, TangleError> {
    let raw: Vec<[u32; 4]> = crossings.iter().map(|c| c.arcs).collect();
    arc_ports_raw(&raw)
}

fn arc_ports_raw(crossings: &[[u32; 4]]) -> Result<BTreeMap<u32, Vec<Port>>, TangleError> {
    let mut ports: BTreeMap<u32, Vec<Port>> = BTreeMap::new();
    for (i, c) in crossings.iter().enumerate() {
        for (k, &a) in c.iter().enumerate() {
            ports.entry(a).or_default().push((i, k));
        }
    }
    for (&arc, p) in &ports {
        if p.len() != 2 {
            return Err(TangleError::ArcMultiplicity {
                arc,
                count: p.len(),
            });
        }
    }
    Ok(ports)
}

fn other_port(ports: &[Port], here: Port) -> Port {
    if ports[0] == here {
        ports[1]
    } else {
        ports[0]
    }
}

/// Follows strands straight through crossings (slot `k` to `k + 2`).
fn strands(crossings: &[[u32; 4]], ports: &BTreeMap<u32, Vec<Port>>) -> Vec<Strand> {
    let mut visited = vec![[false; 4]; crossings.len()];
    let mut out = Vec::new();
    for c0 in 0..crossings.len() {
        for s0 in 0..4 {
            if visited[c0][s0] {
                continue;
            }
            let mut strand = Strand {
                arcs: Vec::new(),
                entries: Vec::new(),
            };
            let (mut c, mut s) = (c0, s0);
            while !visited[c][s] {
                let exit = (s + 2) % 4;
                visited[c][s] = true;
                visited[c][exit] = true;
                strand.entries.push((c, s));
                let arc = crossings[c][exit];
                strand.arcs.push(arc);
                (c, s) = other_port(&ports[&arc], (c, exit));
            }
            out.push(strand);
        }
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    const TREFOIL: &str = "X 1 4 2 5 +\nX 3 6 4 1 +\nX 5 2 6 3 +\n";

    #[test]
    fn twist_vectors() {
        assert!(slope_to_twist_vector(Slope::INFINITY).is_empty());
        assert_eq!(slope_to_twist_vector(sl("3")).entries(), &[3]);
        let v = slope_to_twist_vector(sl("2/3"));
        assert_eq!(v.entries(), &[1, 3]);
        // 1 - 1/3 = 2/3
        assert_eq!(v.fraction().unwrap(), sl("2/3"));
        assert_eq!(TwistVector::new(vec![0]).fraction().unwrap(), Slope::ZERO);
        assert_eq!(TwistVector::default().fraction().unwrap(), Slope::INFINITY);
    }

    #[test]
    fn hopf_and_trefoil_closures() {
        let hopf = two_bridge_diagram(sl("2")).unwrap();
        assert_eq!((hopf.crossing_count(), hopf.component_count()), (2, 2));
        assert_eq!(diagram_determinant(&hopf).unwrap(), 2);
        let trefoil = two_bridge_diagram(sl("3")).unwrap();
        assert_eq!(
            (trefoil.crossing_count(), trefoil.component_count()),
            (3, 1)
        );
        assert_eq!(diagram_determinant(&trefoil).unwrap(), 3);
        assert_eq!(trefoil.writhe().abs(), 3);
    }

    #[test]
    fn two_thirds_closure() {
        let d = two_bridge_diagram(sl("2/3")).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(diagram_determinant(&d).unwrap(), 2);
    }

    #[test]
    fn trivial_closures() {
        let unknot = two_bridge_diagram(Slope::INFINITY).unwrap();
        assert_eq!((unknot.crossing_count(), unknot.component_count()), (0, 1));
        assert_eq!(diagram_determinant(&unknot).unwrap(), 1);
        let unlink = two_bridge_diagram(Slope::ZERO).unwrap();
        assert_eq!(unlink.component_count(), 2);
        assert_eq!(diagram_determinant(&unlink).unwrap(), 0);
    }

    #[test]
    fn kinked_unknot() {
        let d = two_bridge_diagram(sl("1")).unwrap();
        assert_eq!((d.crossing_count(), d.component_count()), (1, 1));
        assert_eq!(diagram_determinant(&d).unwrap(), 1);
    }

    #[test]
    fn parsed_trefoil() {
        let d: PlanarDiagram = TREFOIL.parse().unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(diagram_determinant(&d).unwrap(), 3);
        // both checkerboard colours give the same determinant
        let other = det_bareiss(d.goeritz_matrix(true).unwrap()).unwrap();
        assert_eq!(other.abs(), 3);
    }

    #[test]
    fn text_round_trip() {
        let d = two_bridge_diagram(sl("7/3")).unwrap();
        let back: PlanarDiagram = d.to_string().parse().unwrap();
        assert_eq!(back, d);
        let loops: PlanarDiagram = "L 1\nL 2\n".parse().unwrap();
        assert_eq!(diagram_determinant(&loops).unwrap(), 0);
    }

    #[test]
    fn malformed_diagrams() {
        assert!(matches!(
            "X 1 2 3 4 +\n".parse::<PlanarDiagram>(),
            Err(TangleError::ArcMultiplicity { .. })
        ));
        assert!(matches!(
            "X 1 1 2 +\n".parse::<PlanarDiagram>(),
            Err(TangleError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            "X 1 4 2 5 *\n".parse::<PlanarDiagram>(),
            Err(TangleError::Parse { .. })
        ));
        assert_eq!("".parse::<PlanarDiagram>(), Err(TangleError::Empty));
        assert!(matches!(
            format!("{TREFOIL}L 1\n").parse::<PlanarDiagram>(),
            Err(TangleError::LoopArc(1))
        ));
    }

    #[test]
    fn branch_loci() {
        let b = branch_locus(QuotientArc::Unknotted, sl("2/3"));
        assert_eq!(b.inner.fraction().unwrap(), sl("2/3"));
        assert_eq!(
            b.realize().unwrap().unwrap(),
            two_bridge_diagram(sl("2/3")).unwrap()
        );
        let trivial = branch_locus(QuotientArc::Unknotted, Slope::INFINITY);
        assert_eq!(trivial.realize().unwrap().unwrap().component_count(), 1);
        let opaque = branch_locus(QuotientArc::Opaque("5_2".into()), sl("2/3"));
        assert!(opaque.realize().is_none());
        assert_eq!(opaque.inner, slope_to_twist_vector(sl("2/3")));
    }
}
