//! Reference tables shipped with the crate, and comparison against them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::render::parse_decomposition;
use crate::error::{Error, Result};
use crate::hall_ops::SpDecomposition;
use crate::partitions::Partition;
use crate::symfunc::Q;
use crate::torelli_chars::{CharacterTable, Object};

const REFERENCE_TABLES: &str = include_str!("../../data/reference_tables.txt");

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenTable {
    pub object: Object,
    pub degrees: BTreeMap<usize, SpDecomposition>,
}

impl GoldenTable {
    /// Parses lines of the form `A 2: <0> + <1^4>`; `#` starts a comment.
    pub fn parse(text: &str, object: Object) -> Result<GoldenTable> {
        let mut degrees = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |why: &str| Error::Parse(format!("line {}: {why}", lineno + 1));
            let (head, body) = line.split_once(':').ok_or_else(|| bad("missing ':'"))?;
            let (tag, degree) = head.trim().split_once(' ').ok_or_else(|| bad("missing degree"))?;
            if Object::from_tag(tag) != Some(object) {
                continue;
            }
            let n: usize = degree.trim().parse().map_err(|_| bad("bad degree"))?;
            let d = parse_decomposition(body)?.with_degree(n);
            if degrees.insert(n, d).is_some() {
                return Err(bad("degree listed twice"));
            }
        }
        Ok(GoldenTable { object, degrees })
    }

    /// The bundled tables for `A` (degrees 1-4) and `torelli` (degrees 1-8).
    pub fn bundled(object: Object) -> Result<GoldenTable> {
        let table = Self::parse(REFERENCE_TABLES, object)?;
        if table.degrees.is_empty() {
            return Err(Error::InvalidArgument(format!("no bundled table for {}", object.tag())));
        }
        Ok(table)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.keys().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Discrepancy {
    pub degree: usize,
    pub partition: Partition,
    pub expected: Q,
    pub actual: Q,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenReport {
    pub object: Object,
    pub degrees_checked: Vec<usize>,
    pub missing_degrees: Vec<usize>,
    pub discrepancies: Vec<Discrepancy>,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.missing_degrees.is_empty() && self.discrepancies.is_empty()
    }
}

impl fmt::Display for GoldenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(
            f,
            "{status} {}: degrees {:?}",
            self.object.tag(),
            self.degrees_checked
        )?;
        for n in &self.missing_degrees {
            writeln!(f, "  n={n}: not computed")?;
        }
        for d in &self.discrepancies {
            writeln!(
                f,
                "  n={}: <{}> expected {} got {}",
                d.degree, d.partition, d.expected, d.actual
            )?;
        }
        Ok(())
    }
}

/// Multiset equality per degree; every differing `(λ, multiplicity)` is listed.
pub fn golden_check(golden: &GoldenTable, computed: &CharacterTable) -> GoldenReport {
    let mut report = GoldenReport {
        object: golden.object,
        degrees_checked: Vec::new(),
        missing_degrees: Vec::new(),
        discrepancies: Vec::new(),
    };
    if computed.object != golden.object {
        report.missing_degrees = golden.degrees.keys().copied().collect();
        return report;
    }
    for (&n, want) in &golden.degrees {
        let Some(got) = computed.degree(n) else {
            report.missing_degrees.push(n);
            continue;
        };
        report.degrees_checked.push(n);
        let shapes: BTreeSet<&Partition> = want.terms().chain(got.terms()).map(|(l, _)| l).collect();
        for lam in shapes {
            let (expected, actual) = (want.multiplicity(lam), got.multiplicity(lam));
            if expected != actual {
                report.discrepancies.push(Discrepancy {
                    degree: n,
                    partition: lam.clone(),
                    expected,
                    actual,
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::q;

    #[test]
    fn bundled_tables_parse() {
        let a = GoldenTable::bundled(Object::A).unwrap();
        assert_eq!(a.degrees.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        let t = GoldenTable::bundled(Object::Torelli).unwrap();
        assert_eq!(t.max_degree(), 8);
        let t8 = &t.degrees[&8];
        assert_eq!(t8.multiplicity(&"2".parse().unwrap()), q(15));
        assert_eq!(t8.multiplicity(&"3,2,1".parse().unwrap()), q(45));
        assert_eq!(t8.multiplicity(&"4,2".parse().unwrap()), q(31));
        assert!(GoldenTable::bundled(Object::A1).is_err());
    }

    #[test]
    fn duplicate_degrees_rejected() {
        assert!(GoldenTable::parse("A 1: <1>\nA 1: <2>", Object::A).is_err());
        let empty = GoldenTable::parse("# nothing", Object::A).unwrap();
        assert!(empty.degrees.is_empty());
    }
}
