//! Exact rational building blocks shared by the enumerator solvers:
//! big-integer polynomials, affine expressions in free parameters, and a
//! small Gaussian elimination over the rationals.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Dense univariate polynomial with exact integer coefficients,
/// index = power of y. Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct UnivariatePoly {
    coeffs: Vec<BigInt>,
}

impl UnivariatePoly {
    pub fn zero() -> Self {
        UnivariatePoly { coeffs: vec![] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// c * y^p
    pub fn monomial(c: i64, p: usize) -> Self {
        let mut v = vec![BigInt::zero(); p + 1];
        v[p] = BigInt::from(c);
        Self::from_coeffs(v)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, p: usize) -> BigInt {
        self.coeffs.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut v = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        Self::from_coeffs(v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::from_coeffs(v)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(1);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Debug for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| match p {
                0 => format!("{c}"),
                1 => format!("{c}*y"),
                _ => format!("{c}*y^{p}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Affine expression c0 + sum_i k_i * q_i over rational scalars, with the
/// parameter list owned by the surrounding context.
#[derive(Clone, PartialEq, Eq)]
pub struct RatAffine {
    pub constant: Rat,
    pub coeffs: Vec<Rat>,
}

impl RatAffine {
    pub fn constant(c: Rat, nparams: usize) -> Self {
        RatAffine { constant: c, coeffs: vec![Rat::zero(); nparams] }
    }

    pub fn zero(nparams: usize) -> Self {
        Self::constant(Rat::zero(), nparams)
    }

    pub fn param(i: usize, nparams: usize) -> Self {
        let mut a = Self::zero(nparams);
        a.coeffs[i] = Rat::one();
        a
    }

    pub fn nparams(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nparams(), other.nparams());
        RatAffine {
            constant: &self.constant + &other.constant,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nparams(), other.nparams());
        RatAffine {
            constant: &self.constant - &other.constant,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        RatAffine {
            constant: &self.constant * s,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn eval(&self, values: &[Rat]) -> Rat {
        assert_eq!(values.len(), self.nparams());
        let mut acc = self.constant.clone();
        for (c, v) in self.coeffs.iter().zip(values) {
            acc += c * v;
        }
        acc
    }

    /// Substitute each parameter by an affine expression in new parameters.
    pub fn compose(&self, subs: &[RatAffine]) -> RatAffine {
        assert_eq!(subs.len(), self.nparams());
        let nnew = subs.first().map_or(0, RatAffine::nparams);
        let mut acc = RatAffine::constant(self.constant.clone(), nnew);
        for (c, s) in self.coeffs.iter().zip(subs) {
            acc = acc.add(&s.scale(c));
        }
        acc
    }

    /// True when constant and all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.constant.is_integer() && self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_integer_parts(&self) -> Result<(BigInt, Vec<BigInt>)> {
        if !self.is_integral() {
            return Err(Error::NonIntegral(format!("{self:?} is not integral")));
        }
        Ok((
            self.constant.to_integer(),
            self.coeffs.iter().map(Rat::to_integer).collect(),
        ))
    }
}

impl fmt::Debug for RatAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.constant)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, " + {c}*q{i}")?;
            }
        }
        Ok(())
    }
}

/// Solve M x = b exactly for a square nonsingular system where each right
/// hand side entry is affine in outer parameters; returns x as affine
/// expressions in the same parameters.
pub fn solve_square(m: &[Vec<Rat>], b: &[RatAffine]) -> Result<Vec<RatAffine>> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n));
    assert_eq!(b.len(), n);
    let nparams = b.first().map_or(0, RatAffine::nparams);
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut rhs: Vec<RatAffine> = b.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Infeasible("singular system".into()))?;
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = a[col][col].recip();
        for c in col..n {
            a[col][c] = &a[col][c] * &inv;
        }
        rhs[col] = rhs[col].scale(&inv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..n {
                    let t = &a[col][c] * &factor;
                    a[r][c] = &a[r][c] - &t;
                }
                let t = rhs[col].scale(&factor);
                rhs[r] = rhs[r].sub(&t);
            }
        }
    }
    let _ = nparams;
    Ok(rhs)
}

/// Row echelon elimination for affine constraint systems `f_i(q) = 0`:
/// returns a substitution expressing the q-parameters in terms of a
/// smaller set of free parameters, or an infeasibility error.
pub struct AffineKernel {
    /// q_i as affine expressions in the new free parameters.
    pub substitution: Vec<RatAffine>,
    /// Indices (into the old parameter list) of the surviving free params.
    pub free: Vec<usize>,
}

pub fn solve_constraints(constraints: &[RatAffine], nparams: usize) -> Result<AffineKernel> {
    // Build matrix [coeffs | constant]; solve coeffs * q = -constant.
    let mut rows: Vec<(Vec<Rat>, Rat)> = constraints
        .iter()
        .map(|c| (c.coeffs.clone(), c.constant.clone()))
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..nparams {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r].0[col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank].0[col].recip();
        for c in 0..nparams {
            rows[rank].0[c] = &rows[rank].0[c] * &inv;
        }
        rows[rank].1 = &rows[rank].1 * &inv;
        for r in 0..rows.len() {
            if r != rank && !rows[r].0[col].is_zero() {
                let f = rows[r].0[col].clone();
                for c in 0..nparams {
                    let t = &rows[rank].0[c] * &f;
                    rows[r].0[c] = &rows[r].0[c] - &t;
                }
                let t = &rows[rank].1 * &f;
                rows[r].1 = &rows[r].1 - &t;
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // Any leftover row with zero coefficients and nonzero constant is an
    // inconsistent equation.
    for (coeffs, c) in rows.iter().skip(rank) {
        if coeffs.iter().all(Zero::is_zero) && !c.is_zero() {
            return Err(Error::Infeasible("inconsistent affine constraints".into()));
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..nparams).filter(|c| !pivot_cols.contains(c)).collect();
    let nfree = free.len();
    let mut substitution = Vec::with_capacity(nparams);
    for q in 0..nparams {
        if let Some(t) = free.iter().position(|&f| f == q) {
            substitution.push(RatAffine::param(t, nfree));
        } else {
            let (row, _) = pivots[pivot_cols.iter().position(|&c| c == q).unwrap()];
            // q = -constant - sum over free columns.
            let mut expr = RatAffine::constant(-rows[row].1.clone(), nfree);
            for (t, &fcol) in free.iter().enumerate() {
                expr.coeffs[t] = -rows[row].0[fcol].clone();
            }
            substitution.push(expr);
        }
    }
    Ok(AffineKernel { substitution, free })
}

/// Intersect half-lines `expr(q) >= 0` over one free parameter, returning
/// the integer interval of feasible values (None = empty, unbounded ends
/// are clamped to the given limits).
pub fn one_param_range(
    exprs: &[RatAffine],
    lo_limit: i64,
    hi_limit: i64,
) -> Option<(i64, i64)> {
    let mut lo = lo_limit;
    let mut hi = hi_limit;
    for e in exprs {
        assert_eq!(e.nparams(), 1);
        let k = &e.coeffs[0];
        if k.is_zero() {
            if e.constant.is_negative() {
                return None;
            }
            continue;
        }
        // constant + k q >= 0
        let bound = -&e.constant / k;
        if k.is_positive() {
            let b = bound.ceil().to_integer();
            lo = lo.max(i64::try_from(&b).unwrap_or(i64::MAX));
        } else {
            let b = bound.floor().to_integer();
            hi = hi.min(i64::try_from(&b).unwrap_or(i64::MIN));
        }
    }
    (lo <= hi).then_some((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_mul_and_pow() {
        // (1 + y)^2 = 1 + 2y + y^2
        let p = UnivariatePoly::from_coeffs(vec![BigInt::one(), BigInt::one()]);
        let sq = p.pow(2);
        assert_eq!(sq.coeffs(), &[BigInt::from(1), BigInt::from(2), BigInt::from(1)]);
        assert_eq!(p.pow(0), UnivariatePoly::constant(1));
    }

    #[test]
    fn solve_square_system() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let m = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![RatAffine::constant(rat(3), 0), RatAffine::constant(rat(1), 0)];
        let x = solve_square(&m, &b).unwrap();
        assert_eq!(x[0].constant, rat(2));
        assert_eq!(x[1].constant, rat(1));
    }

    #[test]
    fn solve_square_parametric_rhs() {
        // 2x = p0  =>  x = p0/2
        let m = vec![vec![rat(2)]];
        let b = vec![RatAffine::param(0, 1)];
        let x = solve_square(&m, &b).unwrap();
        assert_eq!(x[0].coeffs[0], Rat::new(BigInt::one(), BigInt::from(2)));
    }

    #[test]
    fn constraint_elimination() {
        // q0 + q1 = 4 with free q1: q0 = 4 - q1.
        let mut c = RatAffine::zero(2);
        c.constant = rat(-4);
        c.coeffs = vec![rat(1), rat(1)];
        let k = solve_constraints(&[c], 2).unwrap();
        assert_eq!(k.free, vec![1]);
        assert_eq!(k.substitution[0].constant, rat(4));
        assert_eq!(k.substitution[0].coeffs[0], rat(-1));
    }

    #[test]
    fn inconsistent_constraints_detected() {
        // 0*q + 1 = 0 is impossible.
        let c = RatAffine::constant(rat(1), 1);
        assert!(solve_constraints(&[c], 1).is_err());
    }

    #[test]
    fn one_param_range_intersection() {
        // q >= 2 (from q - 2 >= 0) and 10 - q >= 0.
        let mut a = RatAffine::zero(1);
        a.constant = rat(-2);
        a.coeffs[0] = rat(1);
        let mut b = RatAffine::zero(1);
        b.constant = rat(10);
        b.coeffs[0] = rat(-1);
        assert_eq!(one_param_range(&[a, b], i64::MIN, i64::MAX), Some((2, 10)));
    }
}
