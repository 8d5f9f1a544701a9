//! Construction of pure and bordered double circulant codes from first rows.
//!
//! A pure double circulant code of length 2n has generator `[I_n | R]` with
//! R circulant; the bordered variant replaces R by a border of ones around
//! an (n-1) x (n-1) circulant R'. Only even codes are built: first rows must
//! have odd weight (pure) or even weight (bordered), and the border corner
//! bit alpha is 0 for even n and 1 for odd n.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::gf2::{BitMatrix, BitVector, LinearCode};
use crate::{Error, Result};

/// The two double circulant families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Pure,
    Bordered,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Pure => write!(f, "pure"),
            Family::Bordered => write!(f, "bordered"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pure" | "p" => Ok(Family::Pure),
            "bordered" | "b" => Ok(Family::Bordered),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Defining row of the circulant block (length n for pure, n-1 for bordered).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FirstRow(pub BitVector);

impl FirstRow {
    pub fn bits(&self) -> &BitVector {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.weight()
    }
}

impl FromStr for FirstRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(FirstRow(s.parse()?))
    }
}

impl fmt::Display for FirstRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for FirstRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FirstRow({})", self.0)
    }
}

/// Full description of a double circulant code of length 2n.
#[derive(Clone, Debug)]
pub struct DccSpec {
    pub family: Family,
    pub n: usize,
    pub first_row: FirstRow,
    /// Border corner bit; only meaningful for the bordered family.
    pub alpha: bool,
}

impl DccSpec {
    /// Pure spec from a first row of length n with odd weight.
    pub fn pure(first_row: FirstRow) -> Result<Self> {
        let n = first_row.bits().len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty first row".into()));
        }
        if first_row.weight() % 2 != 1 {
            return Err(Error::ParityViolation(format!(
                "pure first row {} has even weight {}; the resulting code would not be even",
                first_row,
                first_row.weight()
            )));
        }
        Ok(DccSpec { family: Family::Pure, n, first_row, alpha: false })
    }

    /// Bordered spec from a first row of length n-1 with even weight;
    /// alpha is fixed by the parity of n so the border row is even.
    pub fn bordered(first_row: FirstRow) -> Result<Self> {
        let n = first_row.bits().len() + 1;
        Self::bordered_with_alpha(first_row, n % 2 == 1)
    }

    /// Bordered spec with an explicit alpha, rejected unless it matches
    /// the parity rule alpha = n mod 2.
    pub fn bordered_with_alpha(first_row: FirstRow, alpha: bool) -> Result<Self> {
        let n = first_row.bits().len() + 1;
        if n < 2 {
            return Err(Error::InvalidArgument("bordered first row must be nonempty".into()));
        }
        if first_row.weight() % 2 != 0 {
            return Err(Error::ParityViolation(format!(
                "bordered first row {} has odd weight {}; the resulting code would not be even",
                first_row,
                first_row.weight()
            )));
        }
        if alpha != (n % 2 == 1) {
            return Err(Error::ParityViolation(format!(
                "alpha = {} inconsistent with n = {n}: evenness requires alpha = n mod 2",
                alpha as u8
            )));
        }
        Ok(DccSpec { family: Family::Bordered, n, first_row, alpha })
    }

    /// Length of the resulting code.
    pub fn length(&self) -> usize {
        2 * self.n
    }

    pub fn build(&self) -> Result<LinearCode> {
        match self.family {
            Family::Pure => build_pure(self),
            Family::Bordered => build_bordered(self),
        }
    }
}

/// Square circulant matrix whose i-th row is the input shifted right by i.
pub fn circulant_matrix(row: &BitVector) -> BitMatrix {
    assert!(!row.is_empty(), "circulant row must be nonempty");
    let n = row.len();
    let mut rows = Vec::with_capacity(n);
    let mut cur = row.clone();
    for _ in 0..n {
        rows.push(cur.clone());
        cur = cur.rotate_right();
    }
    BitMatrix::from_rows(rows)
}

/// `[I_n | circulant(first_row)]`, a [2n, n] even code.
pub fn build_pure(spec: &DccSpec) -> Result<LinearCode> {
    if spec.family != Family::Pure {
        return Err(Error::InvalidArgument("spec is not pure".into()));
    }
    if spec.first_row.weight() % 2 != 1 {
        return Err(Error::ParityViolation("pure first row must have odd weight".into()));
    }
    let right = circulant_matrix(spec.first_row.bits());
    let code = LinearCode::new(BitMatrix::identity(spec.n).hstack(&right))?;
    debug_assert!(code.is_even());
    Ok(code)
}

/// The bordered generator: right block has first row (alpha, 1, ..., 1)
/// and a column of ones alongside the circulant of the first row.
pub fn build_bordered(spec: &DccSpec) -> Result<LinearCode> {
    if spec.family != Family::Bordered {
        return Err(Error::InvalidArgument("spec is not bordered".into()));
    }
    let n = spec.n;
    if spec.first_row.bits().len() != n - 1 {
        return Err(Error::LengthMismatch { expected: n - 1, got: spec.first_row.bits().len() });
    }
    if spec.first_row.weight() % 2 != 0 {
        return Err(Error::ParityViolation("bordered first row must have even weight".into()));
    }
    if spec.alpha != (n % 2 == 1) {
        return Err(Error::ParityViolation("alpha must equal n mod 2".into()));
    }
    let circ = circulant_matrix(spec.first_row.bits());
    let mut right_rows = Vec::with_capacity(n);
    let mut border = BitVector::ones(n);
    border.set(0, spec.alpha);
    right_rows.push(border);
    for i in 0..n - 1 {
        let mut r = BitVector::zeros(n);
        r.set(0, true);
        for j in 0..n - 1 {
            if circ.get(i, j) {
                r.set(j + 1, true);
            }
        }
        right_rows.push(r);
    }
    let right = BitMatrix::from_rows(right_rows);
    let code = LinearCode::new(BitMatrix::identity(n).hstack(&right))?;
    debug_assert!(code.is_even());
    Ok(code)
}

/// Lexicographically smallest string among all cyclic shifts; two rows have
/// equal canonical forms iff they are cyclic shifts of each other.
pub fn cyclic_canonical(row: &FirstRow) -> FirstRow {
    let mut best = row.0.clone();
    let mut cur = row.0.clone();
    for _ in 1..row.0.len() {
        cur = cur.rotate_right();
        if cur.string_cmp(&best) == Ordering::Less {
            best = cur.clone();
        }
    }
    FirstRow(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(s: &str) -> FirstRow {
        s.parse().unwrap()
    }

    #[test]
    fn circulant_of_unit_row_is_identity() {
        let m = circulant_matrix(&"100".parse().unwrap());
        assert_eq!(m, BitMatrix::identity(3));
    }

    #[test]
    fn circulant_of_ones_is_all_ones() {
        let m = circulant_matrix(&"1111".parse().unwrap());
        for r in 0..4 {
            assert_eq!(m.row(r), &BitVector::ones(4));
        }
    }

    #[test]
    fn circulant_shift_direction() {
        let m = circulant_matrix(&"110".parse().unwrap());
        assert_eq!(m.row(0).to_string(), "110");
        assert_eq!(m.row(1).to_string(), "011");
        assert_eq!(m.row(2).to_string(), "101");
    }

    #[test]
    fn pure_identity_pair() {
        let spec = DccSpec::pure(row("10")).unwrap();
        let code = build_pure(&spec).unwrap();
        let mut words: Vec<String> =
            code.all_codewords().iter().map(|w| w.to_string()).collect();
        words.sort();
        assert_eq!(words, ["0000", "0101", "1010", "1111"]);
    }

    #[test]
    fn pure_rejects_even_weight_row() {
        assert!(DccSpec::pure(row("1100")).is_err());
    }

    #[test]
    fn bordered_rejects_odd_weight_row() {
        assert!(DccSpec::bordered(row("100")).is_err());
    }

    #[test]
    fn bordered_alpha_rule() {
        // n = 4 even: alpha must be 0.
        assert!(DccSpec::bordered_with_alpha(row("110"), true).is_err());
        assert!(DccSpec::bordered_with_alpha(row("110"), false).is_ok());
        // n = 3 odd: alpha must be 1.
        assert!(DccSpec::bordered_with_alpha(row("11"), false).is_err());
        let spec = DccSpec::bordered(row("11")).unwrap();
        assert!(spec.alpha);
    }

    #[test]
    fn bordered_small_even_code() {
        // n = 3, alpha = 1, row (11): 8 codewords, all even.
        let spec = DccSpec::bordered(row("11")).unwrap();
        let code = build_bordered(&spec).unwrap();
        assert_eq!(code.length(), 6);
        assert_eq!(code.dimension(), 3);
        let mut counts = [0usize; 7];
        for w in code.all_codewords() {
            counts[w.weight()] += 1;
        }
        assert_eq!(counts, [1, 0, 3, 0, 3, 0, 1]);
        assert!(code.is_even());
    }

    #[test]
    fn cyclic_canonical_examples() {
        assert_eq!(cyclic_canonical(&row("0101")).to_string(), "0101");
        assert_eq!(cyclic_canonical(&row("1000")).to_string(), "0001");
        assert_eq!(cyclic_canonical(&row("110010")).to_string(), "001011");
    }

    #[test]
    fn canonical_identifies_shift_classes() {
        let a = row("1101000");
        let mut b = FirstRow(a.0.rotate_right().rotate_right());
        assert_eq!(cyclic_canonical(&a), cyclic_canonical(&b));
        b.0.set(0, !b.0.get(0));
        assert_ne!(cyclic_canonical(&a), cyclic_canonical(&b));
    }

    #[test]
    fn builds_are_even_and_systematic() {
        let spec = DccSpec::pure(row("1110")).unwrap();
        let code = spec.build().unwrap();
        assert!(code.is_even());
        assert!(code.is_systematic());
        let spec = DccSpec::bordered(row("1010")).unwrap();
        let code = spec.build().unwrap();
        assert!(code.is_even());
        assert!(code.is_systematic());
    }
}
