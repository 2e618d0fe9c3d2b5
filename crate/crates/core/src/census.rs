//! Symmetry census of small prime knots and the quotient query built on it.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::involution::{extend_involution, ExtensionResult, QuotientKnot, SymmetryType};
use crate::seifert::SeifertInvariants;
use crate::slope::Slope;

static EMBEDDED: &str = include_str!("../data/census.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("unknown knot {0:?}")]
    UnknownKnot(String),
    #[error("knot {0:?} has higher symmetry but no tabulated involution classes")]
    Unclassified(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: {msg}")]
    Validation { line: usize, msg: String },
    #[error("reading census: {0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HigherSymmetry {
    D3,
    D4,
    D6,
    D8,
    D10,
}

impl FromStr for HigherSymmetry {
    type Err = String;

    fn from_str(s: &str) -> Result<HigherSymmetry, String> {
        Ok(match s {
            "D3" => HigherSymmetry::D3,
            "D4" => HigherSymmetry::D4,
            "D6" => HigherSymmetry::D6,
            "D8" => HigherSymmetry::D8,
            "D10" => HigherSymmetry::D10,
            _ => return Err(format!("unknown higher symmetry tag {s:?}")),
        })
    }
}

impl fmt::Display for HigherSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HigherSymmetry::D3 => "D3",
            HigherSymmetry::D4 => "D4",
            HigherSymmetry::D6 => "D6",
            HigherSymmetry::D8 => "D8",
            HigherSymmetry::D10 => "D10",
        };
        f.write_str(s)
    }
}

/// Symmetry group of a filled manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Cyclic(u32),
    /// Dihedral group of the given order.
    Dihedral(u32),
    KleinFour,
}

impl GroupTag {
    /// Form used in census files: `cyclic:2`, `dihedral:8`, `z2+z2`.
    pub fn tag(&self) -> String {
        match self {
            GroupTag::Cyclic(n) => format!("cyclic:{n}"),
            GroupTag::Dihedral(n) => format!("dihedral:{n}"),
            GroupTag::KleinFour => "z2+z2".to_string(),
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Cyclic(n) => write!(f, "Z_{n}"),
            GroupTag::Dihedral(n) if n % 2 == 0 => write!(f, "D_{{2·{}}}", n / 2),
            GroupTag::Dihedral(n) => write!(f, "D_{n}"),
            GroupTag::KleinFour => f.write_str("Z_2+Z_2"),
        }
    }
}

impl FromStr for GroupTag {
    type Err = String;

    fn from_str(s: &str) -> Result<GroupTag, String> {
        if s == "z2+z2" {
            return Ok(GroupTag::KleinFour);
        }
        let bad = || format!("unknown group tag {s:?}");
        let (kind, n) = s.split_once(':').ok_or_else(bad)?;
        let n: u32 = n.parse().ok().filter(|&n| n > 0).ok_or_else(bad)?;
        match kind {
            "cyclic" => Ok(GroupTag::Cyclic(n)),
            "dihedral" => Ok(GroupTag::Dihedral(n)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FactKind {
    SymmetryGroup(GroupTag),
    EquivalentSurgery { knot: String, slope: Slope },
    SeifertFibered(SeifertInvariants),
    QuotientIdentified { knot: String, slope: Slope },
}

impl fmt::Display for FactKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactKind::SymmetryGroup(g) => write!(f, "symmetry group {g}"),
            FactKind::EquivalentSurgery { knot, slope } => {
                write!(f, "equivalent to {knot}({slope})")
            }
            FactKind::SeifertFibered(inv) => write!(f, "Seifert fibered {inv}"),
            FactKind::QuotientIdentified { knot, slope } => {
                write!(f, "quotient is {knot}({slope})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExceptionalFact {
    pub knot: String,
    pub slope: Slope,
    pub fact: FactKind,
    pub anchor: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub id: String,
    /// Count printed next to the row, when there is one.
    pub stated: Option<u32>,
    pub description: String,
    pub knots: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub knot: String,
    pub classes: BTreeSet<SymmetryType>,
    pub s1e_quotient: Option<QuotientKnot>,
    pub higher: Option<HigherSymmetry>,
    pub row: Option<String>,
}

impl CensusEntry {
    pub fn s1e_quotient_knotted(&self) -> Option<bool> {
        self.s1e_quotient
            .as_ref()
            .map(|q| matches!(q, QuotientKnot::Knotted(_)))
    }

    /// Entries coming from the higher-symmetry list only carry no classes.
    pub fn is_classified(&self) -> bool {
        self.row.is_some()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Census {
    entries: Vec<CensusEntry>,
    index: HashMap<String, usize>,
    rows: Vec<CensusRow>,
    facts: Vec<ExceptionalFact>,
}

/// Splits `head "quoted text"` into its head and the quoted text.
fn split_quoted(rest: &str) -> Option<(&str, &str)> {
    let open = rest.find('"')?;
    let close = rest.rfind('"')?;
    (close > open && rest[close + 1..].trim().is_empty())
        .then(|| (rest[..open].trim(), &rest[open + 1..close]))
}

impl Census {
    pub fn embedded() -> &'static Census {
        static CENSUS: OnceLock<Census> = OnceLock::new();
        CENSUS.get_or_init(|| EMBEDDED.parse().expect("embedded census is valid"))
    }

    pub fn entries(&self) -> &[CensusEntry] {
        &self.entries
    }

    pub fn rows(&self) -> &[CensusRow] {
        &self.rows
    }

    pub fn facts(&self) -> &[ExceptionalFact] {
        &self.facts
    }

    pub fn lookup(&self, knot: &str) -> Result<&CensusEntry, CensusError> {
        self.index
            .get(knot)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| CensusError::UnknownKnot(knot.to_string()))
    }

    pub fn facts_for(&self, knot: &str, slope: Slope) -> impl Iterator<Item = &ExceptionalFact> {
        let knot = knot.to_string();
        self.facts
            .iter()
            .filter(move |f| f.knot == knot && f.slope == slope)
    }

    fn insert(&mut self, entry: CensusEntry, line: usize) -> Result<(), CensusError> {
        if self.index.contains_key(&entry.knot) {
            return Err(CensusError::Validation {
                line,
                msg: format!("duplicate knot {}", entry.knot),
            });
        }
        if let Some(row) = &entry.row {
            let r = self.rows.iter_mut().find(|r| &r.id == row).ok_or_else(|| {
                CensusError::Validation {
                    line,
                    msg: format!("undeclared row {row}"),
                }
            })?;
            r.knots.push(entry.knot.clone());
        }
        self.index.insert(entry.knot.clone(), self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    fn parse_line(&mut self, line: usize, text: &str) -> Result<(), CensusError> {
        let perr = |msg: String| CensusError::Parse { line, msg };
        let verr = |msg: String| CensusError::Validation { line, msg };
        let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        match keyword {
            "row" => {
                let (head, description) = split_quoted(rest)
                    .ok_or_else(|| perr("row needs a quoted description".into()))?;
                let toks: Vec<&str> = head.split_whitespace().collect();
                let [id, stated] = toks.as_slice() else {
                    return Err(perr("expected: row <id> stated=<n|-> \"...\"".into()));
                };
                let stated = match stated.strip_prefix("stated=") {
                    Some("-") => None,
                    Some(n) => Some(n.parse().map_err(|_| perr(format!("bad count {n:?}")))?),
                    None => return Err(perr("expected stated=".into())),
                };
                if self.rows.iter().any(|r| r.id == *id) {
                    return Err(verr(format!("duplicate row {id}")));
                }
                self.rows.push(CensusRow {
                    id: id.to_string(),
                    stated,
                    description: description.to_string(),
                    knots: Vec::new(),
                });
            }
            "knot" => {
                let mut toks = rest.split_whitespace();
                let knot = toks
                    .next()
                    .ok_or_else(|| perr("missing knot name".into()))?
                    .to_string();
                let mut fields: HashMap<&str, &str> = HashMap::new();
                for tok in toks {
                    let (k, v) = tok
                        .split_once('=')
                        .ok_or_else(|| perr(format!("expected key=value, got {tok:?}")))?;
                    if !matches!(k, "classes" | "s1e_quotient" | "higher" | "row") {
                        return Err(perr(format!("unknown key {k:?}")));
                    }
                    if fields.insert(k, v).is_some() {
                        return Err(perr(format!("repeated key {k:?}")));
                    }
                }
                let field = |k: &str| {
                    fields
                        .get(k)
                        .copied()
                        .ok_or_else(|| perr(format!("missing {k}=")))
                };
                let classes: BTreeSet<SymmetryType> = match field("classes")? {
                    "-" => BTreeSet::new(),
                    list => list
                        .split(',')
                        .map(|t| {
                            t.parse().map_err(|e: crate::involution::InvolutionError| {
                                perr(e.to_string())
                            })
                        })
                        .collect::<Result<_, _>>()?,
                };
                let s1e_quotient = match field("s1e_quotient")? {
                    "-" => None,
                    "unknotted" => Some(QuotientKnot::Unknot),
                    "knotted" => Some(QuotientKnot::Knotted(format!("{knot}/tau"))),
                    other => match other.strip_prefix("knotted:") {
                        Some(name) if !name.is_empty() => {
                            Some(QuotientKnot::Knotted(name.to_string()))
                        }
                        _ => return Err(perr(format!("bad s1e_quotient {other:?}"))),
                    },
                };
                let higher = match field("higher")? {
                    "-" => None,
                    tag => Some(tag.parse().map_err(perr)?),
                };
                let row = match fields.get("row").copied() {
                    None | Some("-") => None,
                    Some(r) => Some(r.to_string()),
                };
                if classes.contains(&SymmetryType::S1E) != s1e_quotient.is_some() {
                    return Err(verr(format!(
                        "{knot}: s1e_quotient must be given exactly when classes contain S1E"
                    )));
                }
                self.insert(
                    CensusEntry {
                        knot,
                        classes,
                        s1e_quotient,
                        higher,
                        row,
                    },
                    line,
                )?;
            }
            "higher" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let [knot, tag] = toks.as_slice() else {
                    return Err(perr("expected: higher <name> <tag>".into()));
                };
                let entry = CensusEntry {
                    knot: knot.to_string(),
                    classes: BTreeSet::new(),
                    s1e_quotient: None,
                    higher: Some(tag.parse().map_err(perr)?),
                    row: None,
                };
                self.insert(entry, line)?;
            }
            "except" => {
                let (head, anchor) =
                    split_quoted(rest).ok_or_else(|| perr("fact needs a quoted anchor".into()))?;
                let toks: Vec<&str> = head.split_whitespace().collect();
                let (knot, slope, kind, payload) = match toks.as_slice() {
                    [k, s, kind, payload @ ..] => (*k, *s, *kind, payload),
                    _ => {
                        return Err(perr(
                            "expected: except <name> <slope> <kind> <payload> \"...\"".into(),
                        ))
                    }
                };
                let slope: Slope = slope
                    .parse()
                    .map_err(|e: crate::slope::SlopeError| perr(e.to_string()))?;
                let knot_slope = |payload: &[&str]| -> Result<(String, Slope), CensusError> {
                    let [k, s] = payload else {
                        return Err(perr(format!("{kind} needs <knot> <slope>")));
                    };
                    let s: Slope = s
                        .parse()
                        .map_err(|e: crate::slope::SlopeError| perr(e.to_string()))?;
                    Ok((k.to_string(), s))
                };
                let fact = match kind {
                    "group" => match payload {
                        [g] => FactKind::SymmetryGroup(g.parse().map_err(perr)?),
                        _ => return Err(perr("group needs one tag".into())),
                    },
                    "equivalent" => {
                        let (knot, slope) = knot_slope(payload)?;
                        FactKind::EquivalentSurgery { knot, slope }
                    }
                    "quotient" => {
                        let (knot, slope) = knot_slope(payload)?;
                        FactKind::QuotientIdentified { knot, slope }
                    }
                    "seifert" => FactKind::SeifertFibered(
                        payload
                            .concat()
                            .parse()
                            .map_err(|e: crate::seifert::SeifertError| perr(e.to_string()))?,
                    ),
                    _ => return Err(perr(format!("unknown fact kind {kind:?}"))),
                };
                if !self.index.contains_key(knot) {
                    return Err(verr(format!("fact about unlisted knot {knot}")));
                }
                self.facts.push(ExceptionalFact {
                    knot: knot.to_string(),
                    slope,
                    fact,
                    anchor: anchor.to_string(),
                });
            }
            _ => return Err(perr(format!("unknown record {keyword:?}"))),
        }
        Ok(())
    }
}

impl FromStr for Census {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Census, CensusError> {
        let mut census = Census::default();
        for (i, raw) in s.lines().enumerate() {
            let text = raw.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            census.parse_line(i + 1, text)?;
        }
        Ok(census)
    }
}

/// Reads a census in the line format of the embedded table.
pub fn load_census(source: impl BufRead) -> Result<Census, CensusError> {
    let mut text = String::new();
    for line in source.lines() {
        text.push_str(&line.map_err(|e| CensusError::Io(e.to_string()))?);
        text.push('\n');
    }
    text.parse()
}

/// One manifold quotient, possibly reached through an equivalent surgery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub via: Option<(String, Slope)>,
    pub class: SymmetryType,
    pub result: ExtensionResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    pub knot: String,
    pub slope: Slope,
    pub lines: Vec<ReportLine>,
    /// Symmetry group stated for this filling, replacing the generic one.
    pub symmetry_group: Option<GroupTag>,
    pub facts: Vec<ExceptionalFact>,
}

impl QuotientReport {
    pub fn covers_three_sphere(&self) -> bool {
        self.lines
            .iter()
            .any(|l| l.result.quotient.kind == crate::involution::QuotientKind::ThreeSphere)
    }
}

fn class_lines(entry: &CensusEntry, s: Slope, via: Option<(String, Slope)>) -> Vec<ReportLine> {
    entry
        .classes
        .iter()
        .filter_map(|&class| {
            let result = extend_involution(class, s, entry.s1e_quotient.as_ref()).ok()?;
            (result.extends && result.quotient.is_manifold()).then(|| ReportLine {
                via: via.clone(),
                class,
                result,
            })
        })
        .collect()
}

/// Manifolds that `s` surgery on `knot` two-fold (branched) covers.
pub fn quotient_report(
    census: &Census,
    knot: &str,
    s: Slope,
) -> Result<QuotientReport, CensusError> {
    let entry = census.lookup(knot)?;
    if !entry.is_classified() {
        return Err(CensusError::Unclassified(knot.to_string()));
    }
    let mut lines = class_lines(entry, s, None);
    let facts: Vec<ExceptionalFact> = census.facts_for(knot, s).cloned().collect();
    let mut symmetry_group = None;
    for f in &facts {
        match &f.fact {
            FactKind::SymmetryGroup(g) => symmetry_group = Some(*g),
            FactKind::EquivalentSurgery { knot: other, slope } => {
                if let Ok(e) = census.lookup(other) {
                    if e.is_classified() && other != knot {
                        lines.extend(class_lines(e, *slope, Some((other.clone(), *slope))));
                    }
                }
            }
            _ => {}
        }
    }
    Ok(QuotientReport {
        knot: knot.to_string(),
        slope: s,
        lines,
        symmetry_group,
        facts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::QuotientKind;

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    #[test]
    fn lookups() {
        let c = Census::embedded();
        assert!(c.lookup("9_32").unwrap().classes.is_empty());
        let e = c.lookup("10_98").unwrap();
        assert_eq!(e.classes, BTreeSet::from([SymmetryType::S1E]));
        assert_eq!(e.s1e_quotient_knotted(), Some(true));
        let e = c.lookup("8_5").unwrap();
        assert_eq!(
            e.classes,
            BTreeSet::from([SymmetryType::S1S0, SymmetryType::S1E])
        );
        assert_eq!(e.s1e_quotient_knotted(), Some(true));
        assert_eq!(c.lookup("8_18").unwrap().higher, Some(HigherSymmetry::D8));
        assert_eq!(
            c.lookup("11_1"),
            Err(CensusError::UnknownKnot("11_1".into()))
        );
    }

    #[test]
    fn reports() {
        let c = Census::embedded();
        let r = quotient_report(c, "10_98", sl("1")).unwrap();
        assert_eq!(r.lines.len(), 1);
        assert_eq!(
            r.lines[0].result.quotient.kind,
            QuotientKind::SurgeryOnQuotientKnot {
                knot: "3_1".into(),
                slope: sl("1/2")
            }
        );
        assert!(!r.covers_three_sphere());

        let r = quotient_report(c, "5_2", sl("1/3")).unwrap();
        assert!(r
            .lines
            .iter()
            .all(|l| l.result.quotient.kind == QuotientKind::ThreeSphere));
        assert_eq!(r.symmetry_group, Some(GroupTag::KleinFour));

        let r = quotient_report(c, "5_2", sl("1/2")).unwrap();
        assert_eq!(r.symmetry_group, Some(GroupTag::Dihedral(8)));
        assert_eq!(GroupTag::Dihedral(8).to_string(), "D_{2·4}");

        assert!(quotient_report(c, "9_32", sl("1/5"))
            .unwrap()
            .lines
            .is_empty());
        assert_eq!(
            quotient_report(c, "8_9", sl("1")),
            Err(CensusError::Unclassified("8_9".into()))
        );
    }

    #[test]
    fn equivalent_surgeries_are_followed() {
        let c = Census::embedded();
        assert!(quotient_report(c, "9^2_35[+1]", sl("3"))
            .unwrap()
            .lines
            .is_empty());
        let r = quotient_report(c, "9^2_35[+1]", sl("-2")).unwrap();
        assert!(!r.lines.is_empty());
        assert!(r
            .lines
            .iter()
            .all(|l| l.via == Some(("8_6".to_string(), sl("2")))));
        assert!(r
            .lines
            .iter()
            .all(|l| l.result.quotient.kind == QuotientKind::ThreeSphere));
    }

    #[test]
    fn malformed_files() {
        let ok = "row a stated=- \"x\"\nknot 3_1 classes=S1S0 s1e_quotient=- higher=- row=a\n";
        assert!(ok.parse::<Census>().is_ok());
        let dup = format!("{ok}knot 3_1 classes=S1S0 s1e_quotient=- higher=- row=a\n");
        assert!(matches!(
            dup.parse::<Census>(),
            Err(CensusError::Validation { line: 3, .. })
        ));
        let tag = "knot 3_1 classes=S9S0 s1e_quotient=- higher=-\n";
        assert!(matches!(
            tag.parse::<Census>(),
            Err(CensusError::Parse { line: 1, .. })
        ));
        let missing = "knot 3_1 classes=S1E s1e_quotient=- higher=-\n";
        assert!(matches!(
            missing.parse::<Census>(),
            Err(CensusError::Validation { .. })
        ));
        let fact = "except 3_1 1 group cyclic:2 \"q\"\n";
        assert!(matches!(
            fact.parse::<Census>(),
            Err(CensusError::Validation { .. })
        ));
        for bad in [
            "bogus",
            "row a",
            "knot",
            "higher 8_9 D5",
            "except 3_1 1 group \"q\"",
        ] {
            assert!(bad.parse::<Census>().is_err(), "{bad}");
        }
    }

    #[test]
    fn loading_from_a_reader() {
        let c = load_census(EMBEDDED.as_bytes()).unwrap();
        assert_eq!(c.entries().len(), Census::embedded().entries().len());
    }
}
