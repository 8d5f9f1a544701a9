//! Bundled reference data: the classification summary table with the best
//! self-dual parameters per length, and the per-code spot-check rows for
//! both double circulant families.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::circulant::{Family, FirstRow};
use crate::{Error, Result};

const TABLE2: &str = include_str!("../data/table2.txt");
const TABLE3: &str = include_str!("../data/table3.txt");
const TABLE4: &str = include_str!("../data/table4.txt");

/// A reported value that may be exact, an interval, or absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reported {
    Exact(u128),
    Range(u128, u128),
    Missing,
}

impl Reported {
    pub fn lower(&self) -> Option<u128> {
        match self {
            Reported::Exact(v) => Some(*v),
            Reported::Range(lo, _) => Some(*lo),
            Reported::Missing => None,
        }
    }

    pub fn upper(&self) -> Option<u128> {
        match self {
            Reported::Exact(v) => Some(*v),
            Reported::Range(_, hi) => Some(*hi),
            Reported::Missing => None,
        }
    }
}

impl FromStr for Reported {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(Reported::Missing);
        }
        if let Some((lo, hi)) = s.split_once('-') {
            let lo = lo.parse().map_err(|_| Error::Parse(format!("bad range {s:?}")))?;
            let hi = hi.parse().map_err(|_| Error::Parse(format!("bad range {s:?}")))?;
            if lo > hi {
                return Err(Error::Parse(format!("inverted range {s:?}")));
            }
            return Ok(Reported::Range(lo, hi));
        }
        Ok(Reported::Exact(s.parse().map_err(|_| Error::Parse(format!("bad value {s:?}")))?))
    }
}

impl fmt::Display for Reported {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reported::Exact(v) => write!(f, "{v}"),
            Reported::Range(lo, hi) => write!(f, "{lo}-{hi}"),
            Reported::Missing => write!(f, "-"),
        }
    }
}

/// One row of the classification summary table.
#[derive(Clone, Debug)]
pub struct Table2Row {
    pub n2: usize,
    pub d_pure: usize,
    pub a_pure: u128,
    pub count_pure: usize,
    pub d_bordered: usize,
    pub a_bordered: u128,
    pub count_bordered: usize,
    pub d_sd: Reported,
    pub a_sd: Reported,
    pub citation: String,
}

/// Self-dual reference part of a summary row.
#[derive(Clone, Debug)]
pub struct ReferenceEntry {
    pub length: usize,
    pub d_sd: Reported,
    pub a_sd: Reported,
    pub citation: String,
}

impl Table2Row {
    pub fn reference(&self) -> ReferenceEntry {
        ReferenceEntry {
            length: self.n2,
            d_sd: self.d_sd,
            a_sd: self.a_sd,
            citation: self.citation.clone(),
        }
    }
}

/// A spot-check row: a published first row with its minimum weight and
/// leading distribution triple.
#[derive(Clone, Debug)]
pub struct SpotRow {
    pub name: String,
    pub family: Family,
    pub first_row: FirstRow,
    pub n2: usize,
    pub d: usize,
    pub triple: (u128, u128, u128),
}

fn parse_table2() -> Vec<Table2Row> {
    let mut rows = Vec::new();
    for line in TABLE2.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let mut next = || it.next().expect("short table2 row");
        let row = Table2Row {
            n2: next().parse().expect("2n"),
            d_pure: next().parse().expect("d_P"),
            a_pure: next().parse().expect("A_dP"),
            count_pure: next().parse().expect("N_P"),
            d_bordered: next().parse().expect("d_B"),
            a_bordered: next().parse().expect("A_dB"),
            count_bordered: next().parse().expect("N_B"),
            d_sd: next().parse().expect("d_SD"),
            a_sd: next().parse().expect("A_SD"),
            citation: it.collect::<Vec<_>>().join(" "),
        };
        rows.push(row);
    }
    rows
}

fn parse_spots(text: &str, family: Family) -> Vec<SpotRow> {
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(fields.len(), 6, "bad spot row: {line}");
        let first_row: FirstRow = fields[1].parse().expect("first row bits");
        let n2 = match family {
            Family::Pure => 2 * first_row.bits().len(),
            Family::Bordered => 2 * (first_row.bits().len() + 1),
        };
        // Lemma-1 parity is a transcription check on the data file.
        let parity = first_row.weight() % 2;
        match family {
            Family::Pure => assert_eq!(parity, 1, "pure row must have odd weight: {line}"),
            Family::Bordered => assert_eq!(parity, 0, "bordered row must have even weight: {line}"),
        }
        rows.push(SpotRow {
            name: fields[0].to_string(),
            family,
            first_row,
            n2,
            d: fields[2].parse().expect("d"),
            triple: (
                fields[3].parse().expect("A_d"),
                fields[4].parse().expect("A_d+2"),
                fields[5].parse().expect("A_d+4"),
            ),
        });
    }
    rows
}

/// The classification summary rows, 2n = 32..72.
pub fn table2() -> &'static [Table2Row] {
    static ROWS: OnceLock<Vec<Table2Row>> = OnceLock::new();
    ROWS.get_or_init(parse_table2)
}

pub fn table2_row(n2: usize) -> Result<&'static Table2Row> {
    table2()
        .iter()
        .find(|r| r.n2 == n2)
        .ok_or_else(|| Error::IncompleteReference(format!("no summary row for length {n2}")))
}

/// Pure-family spot-check rows.
pub fn table3() -> &'static [SpotRow] {
    static ROWS: OnceLock<Vec<SpotRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_spots(TABLE3, Family::Pure))
}

/// Bordered-family spot-check rows.
pub fn table4() -> &'static [SpotRow] {
    static ROWS: OnceLock<Vec<SpotRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_spots(TABLE4, Family::Bordered))
}
