//! Parametric weight enumerators of formally self-dual even codes and of
//! doubly even self-dual codes, solved exactly over the Gleason bases.
//!
//! A length-2n formally self-dual even enumerator is an integral combination
//! sum_j a_j (1+y^2)^{n-4j} {y^2(1-y^2)^2}^j with a_0 = 1. Fixing A_0 = 1
//! and A_2 = ... = A_{d-2} = 0 leaves a few degrees of freedom which are
//! re-expressed through the pivot coefficients A_d, A_{d+2}, A_{d+4}, so
//! every coefficient becomes an affine expression in the pivots.

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::exact::{solve_constraints, Rat, RatAffine, UnivariatePoly};
use crate::wdist::WeightDistribution;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GleasonBasis {
    /// (1+y^2)^{n-4j} {y^2(1-y^2)^2}^j for codes of length 2n.
    FsdEven,
    /// g1 = 1 + 14 y^4 + y^8 and g2 = y^4 (1-y^4)^4 for lengths = 0 mod 8.
    DoublyEven,
}

/// Basis element j of the formally-self-dual-even Gleason basis at half
/// length `n_half`.
pub fn expand_fsd_basis(n_half: usize, j: usize) -> Result<UnivariatePoly> {
    if j > n_half / 4 {
        return Err(Error::InvalidArgument(format!(
            "basis index {j} out of range for n = {n_half}"
        )));
    }
    // 1 + y^2 and y^2 (1 - y^2)^2
    let one_y2 = UnivariatePoly::from_coeffs(vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
    let core = UnivariatePoly::monomial(1, 2).mul(
        &UnivariatePoly::from_coeffs(vec![BigInt::one(), BigInt::zero(), -BigInt::one()]).pow(2),
    );
    Ok(one_y2.pow(n_half - 4 * j).mul(&core.pow(j)))
}

fn expand_type2_basis(length: usize, j: usize) -> Result<UnivariatePoly> {
    if length % 8 != 0 || j > length / 24 {
        return Err(Error::InvalidArgument(format!(
            "type II basis index {j} out of range for length {length}"
        )));
    }
    let g1 = UnivariatePoly::from_coeffs(vec![
        BigInt::one(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::from(14),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::one(),
    ]);
    let one_minus_y4 = UnivariatePoly::from_coeffs(vec![
        BigInt::one(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        -BigInt::one(),
    ]);
    let g2 = UnivariatePoly::monomial(1, 4).mul(&one_minus_y4.pow(4));
    Ok(g1.pow(length / 8 - 3 * j).mul(&g2.pow(j)))
}

/// All basis polynomials for the given code length, lowest index first.
pub fn basis_polys(basis: GleasonBasis, length: usize) -> Result<Vec<UnivariatePoly>> {
    match basis {
        GleasonBasis::FsdEven => {
            if length % 2 != 0 {
                return Err(Error::InvalidArgument(
                    "FSD even enumerators need even length".into(),
                ));
            }
            let n_half = length / 2;
            (0..=n_half / 4).map(|j| expand_fsd_basis(n_half, j)).collect()
        }
        GleasonBasis::DoublyEven => {
            if length % 8 != 0 {
                return Err(Error::InvalidArgument(
                    "doubly even enumerators need length = 0 mod 8".into(),
                ));
            }
            (0..=length / 24).map(|j| expand_type2_basis(length, j)).collect()
        }
    }
}

/// Affine expression in the free parameters of a [`ParametricWE`], with
/// exact integer constant and coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AffineExpr {
    pub constant: BigInt,
    pub coeffs: Vec<BigInt>,
}

impl AffineExpr {
    pub fn constant_only(c: BigInt, nparams: usize) -> Self {
        AffineExpr { constant: c, coeffs: vec![BigInt::zero(); nparams] }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.coeffs.len());
        let mut acc = self.constant.clone();
        for (c, v) in self.coeffs.iter().zip(values) {
            acc += c * v;
        }
        acc
    }

    fn from_rat(a: &RatAffine) -> Result<Self> {
        let (constant, coeffs) = a.to_integer_parts()?;
        Ok(AffineExpr { constant, coeffs })
    }

    /// Render against the given parameter names, e.g. "4960-8a" or "-4a+b".
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        let mut push = |s: &str, first: bool| {
            if !first && !s.starts_with('-') {
                out.push('+');
            }
            out.push_str(s);
        };
        let mut first = true;
        if !self.constant.is_zero() {
            push(&self.constant.to_string(), first);
            first = false;
        }
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let term = if c.is_one() {
                name.clone()
            } else if (-c).is_one() {
                format!("-{name}")
            } else {
                format!("{c}{name}")
            };
            push(&term, first);
            first = false;
        }
        if first {
            out.push('0');
        }
        out
    }
}

impl fmt::Debug for AffineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> =
            (0..self.coeffs.len()).map(|i| format!("q{i}")).collect();
        write!(f, "{}", self.render(&names))
    }
}

/// Family of possible weight enumerators W_{2n,d}: every coefficient is an
/// affine expression in the free parameters.
#[derive(Clone)]
pub struct ParametricWE {
    pub n: usize,
    pub d: usize,
    pub basis: GleasonBasis,
    pub free_params: Vec<String>,
    coeff_exprs: Vec<AffineExpr>,
}

/// Gleason combination coefficients as affine functions of the same free
/// parameters; retained so the shadow transform can act basis-wise.
#[derive(Clone)]
pub(crate) struct ParamGleason {
    pub a: Vec<RatAffine>,
}

pub struct ParametricSolution {
    pub we: ParametricWE,
    pub(crate) gleason: ParamGleason,
}

impl ParametricWE {
    pub(crate) fn from_parts(
        n: usize,
        d: usize,
        basis: GleasonBasis,
        free_params: Vec<String>,
        coeff_exprs: Vec<AffineExpr>,
    ) -> Self {
        assert_eq!(coeff_exprs.len(), n + 1);
        ParametricWE { n, d, basis, free_params, coeff_exprs }
    }

    pub fn coeff(&self, weight: usize) -> &AffineExpr {
        &self.coeff_exprs[weight]
    }

    pub fn coeffs(&self) -> &[AffineExpr] {
        &self.coeff_exprs
    }

    pub fn nparams(&self) -> usize {
        self.free_params.len()
    }

    /// Evaluate at integer parameter values; every coefficient must come
    /// out a nonnegative integer.
    pub fn instantiate(&self, values: &[BigInt]) -> Result<WeightDistribution> {
        if values.len() != self.nparams() {
            return Err(Error::InvalidArgument(format!(
                "expected {} parameter values, got {}",
                self.nparams(),
                values.len()
            )));
        }
        let mut counts = Vec::with_capacity(self.n + 1);
        for (w, expr) in self.coeff_exprs.iter().enumerate() {
            let v = expr.eval(values);
            if v.is_negative() {
                return Err(Error::NegativeCoefficient { weight: w });
            }
            let c: u128 = u128::try_from(&v)
                .map_err(|_| Error::NonIntegral(format!("count at weight {w} exceeds u128")))?;
            counts.push(c);
        }
        Ok(WeightDistribution::new(self.n, counts))
    }

    /// The unique parameter assignment reproducing the distribution, or an
    /// error when the distribution lies outside the family.
    pub fn fit(&self, wd: &WeightDistribution) -> Result<Vec<BigInt>> {
        if wd.length() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: wd.length() });
        }
        let pairs: Vec<(usize, BigInt)> =
            (0..=self.n).map(|w| (w, BigInt::from(wd.count(w)))).collect();
        self.fit_pairs(&pairs)
    }

    /// Fit from selected (weight, value) pairs; the pairs must determine
    /// the parameters uniquely and consistently.
    pub fn fit_pairs(&self, pairs: &[(usize, BigInt)]) -> Result<Vec<BigInt>> {
        let np = self.nparams();
        let mut constraints = Vec::with_capacity(pairs.len());
        for (w, value) in pairs {
            if *w > self.n {
                return Err(Error::InvalidArgument(format!("weight {w} beyond length")));
            }
            let e = &self.coeff_exprs[*w];
            let mut c = RatAffine::zero(np);
            c.constant = Rat::from_integer(&e.constant - value);
            for (i, k) in e.coeffs.iter().enumerate() {
                c.coeffs[i] = Rat::from_integer(k.clone());
            }
            constraints.push(c);
        }
        let kernel = solve_constraints(&constraints, np)
            .map_err(|_| Error::NotMember("coefficients inconsistent with the family".into()))?;
        if !kernel.free.is_empty() {
            return Err(Error::Infeasible(
                "given coefficients do not determine the parameters".into(),
            ));
        }
        let mut values = Vec::with_capacity(np);
        for s in &kernel.substitution {
            if !s.constant.is_integer() {
                return Err(Error::NotMember("parameters would not be integers".into()));
            }
            values.push(s.constant.to_integer());
        }
        Ok(values)
    }

    /// Table row "A_0, A_d, A_{d+2}, A_{d+4}, A_{d+6}" rendering.
    pub fn table_row(&self) -> String {
        let cols: Vec<String> = [0, self.d, self.d + 2, self.d + 4, self.d + 6]
            .iter()
            .map(|&w| self.coeff_exprs[w].render(&self.free_params))
            .collect();
        format!(
            "({}, {}) & {} & {} & {} & {} & {}",
            self.n,
            self.d,
            cols[0],
            cols[1],
            cols[2],
            cols[3],
            cols[4]
        )
    }
}

impl fmt::Debug for ParametricWE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W_{{{},{}}}[{}]", self.n, self.d, self.free_params.join(","))
    }
}

fn weight_step(basis: GleasonBasis) -> usize {
    match basis {
        GleasonBasis::FsdEven => 2,
        GleasonBasis::DoublyEven => 4,
    }
}

/// Solve the family of possible enumerators of a length-n minimum-weight-d
/// code over the given basis; the free parameters are the successive pivot
/// coefficients A_d, A_{d+2}, ... (A_d, A_{d+4}, ... for the doubly even
/// basis), named a, b, c, ...
pub fn solve_parametric(n: usize, d: usize, basis: GleasonBasis) -> Result<ParametricWE> {
    Ok(solve_parametric_full(n, d, basis)?.we)
}

pub(crate) fn solve_parametric_full(
    n: usize,
    d: usize,
    basis: GleasonBasis,
) -> Result<ParametricSolution> {
    let step = weight_step(basis);
    if d % step != 0 || d == 0 {
        return Err(Error::InvalidArgument(format!(
            "minimum weight {d} must be a positive multiple of {step}"
        )));
    }
    let polys = basis_polys(basis, n)?;
    let m = polys.len() - 1;
    let dd = d / step;
    let nparams = (m + 1).saturating_sub(dd);

    // Basis element j starts at y^{step*j} with coefficient 1, so the
    // constraints A_{step*i} = 0 (i < d/step) determine a_1..a_{d/step - 1}
    // by forward substitution and leave the tail coefficients free.
    let mut a: Vec<RatAffine> = Vec::with_capacity(m + 1);
    a.push(RatAffine::constant(Rat::one(), nparams));
    for i in 1..=m {
        if i < dd {
            let mut acc = Rat::zero();
            for j in 0..i {
                acc += a[j].constant.clone() * Rat::from_integer(polys[j].coeff(step * i));
            }
            a.push(RatAffine::constant(-acc, nparams));
        } else {
            a.push(RatAffine::param(i - dd, nparams));
        }
    }
    // Forced equations beyond the available unknowns are pure consistency
    // checks (this is the extremal / overdetermined regime).
    let coeff_at = |a: &[RatAffine], w: usize| -> RatAffine {
        let mut expr = RatAffine::zero(nparams);
        for (j, aj) in a.iter().enumerate() {
            let c = polys[j].coeff(w);
            if !c.is_zero() {
                expr = expr.add(&aj.scale(&Rat::from_integer(c)));
            }
        }
        expr
    };
    for i in m + 1..dd {
        if !coeff_at(&a, step * i).is_zero() {
            return Err(Error::Infeasible(format!(
                "no enumerator of length {n} has A_2..A_{} = 0",
                d - 2
            )));
        }
    }

    // Absorb the constant of each pivot coefficient A_d, A_{d+step}, ...
    // into the corresponding parameter, so A_d = a, A_{d+step} = k*a + b,
    // and so on with zero constant terms.
    let mut subs: Vec<RatAffine> = (0..nparams).map(|t| RatAffine::param(t, nparams)).collect();
    for t in 0..nparams {
        let expr = coeff_at(&a, d + step * t).compose(&subs);
        debug_assert!(expr.coeffs[t].is_one(), "pivot coefficient must be unit");
        subs[t].constant = -expr.constant;
    }
    let a: Vec<RatAffine> = a.iter().map(|aj| aj.compose(&subs)).collect();

    // Assemble every coefficient; the family must be integral and must
    // honor the forced zeros.
    let mut coeff_exprs = Vec::with_capacity(n + 1);
    for w in 0..=n {
        let expr = coeff_at(&a, w);
        if w > 0 && w < d && !expr.is_zero() {
            return Err(Error::Infeasible(format!(
                "no enumerator of length {n} has A_{w} = 0"
            )));
        }
        coeff_exprs.push(AffineExpr::from_rat(&expr)?);
    }
    if coeff_exprs[0] != AffineExpr::constant_only(BigInt::one(), nparams) {
        return Err(Error::Infeasible("A_0 = 1 cannot be met".into()));
    }
    let names: Vec<String> = (0..nparams)
        .map(|i| {
            char::from(b'a' + u8::try_from(i).expect("few parameters")).to_string()
        })
        .collect();
    let we = ParametricWE::from_parts(n, d, basis, names, coeff_exprs);
    Ok(ParametricSolution { we, gleason: ParamGleason { a } })
}

/// The unique extremal doubly even enumerator of length n = 0 mod 8
/// (minimum weight 4 floor(n/24) + 4).
pub fn doubly_even_extremal(n: usize) -> Result<WeightDistribution> {
    if n % 8 != 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "doubly even codes need length = 0 mod 8".into(),
        ));
    }
    let d = 4 * (n / 24) + 4;
    let sol = solve_parametric_full(n, d, GleasonBasis::DoublyEven)?;
    if sol.we.nparams() != 0 {
        return Err(Error::Infeasible(format!(
            "extremal type II enumerator of length {n} is not unique"
        )));
    }
    sol.we.instantiate(&[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::{build_pure, DccSpec};
    use crate::wdist::full_distribution;

    fn fsd(n: usize, d: usize) -> ParametricWE {
        solve_parametric(n, d, GleasonBasis::FsdEven).unwrap()
    }

    #[test]
    fn fsd_basis_small_cases() {
        let p = expand_fsd_basis(1, 0).unwrap();
        assert_eq!(p.coeffs(), &[BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
        let p = expand_fsd_basis(4, 1).unwrap();
        assert_eq!(p.coeff(2), BigInt::from(1));
        assert_eq!(p.coeff(4), BigInt::from(-2));
        assert_eq!(p.coeff(6), BigInt::from(1));
        assert!(expand_fsd_basis(4, 2).is_err());
    }

    #[test]
    fn fsd_basis_binomial_row() {
        let p = expand_fsd_basis(16, 0).unwrap();
        let mut binom = vec![BigInt::one()];
        for j in 1..=16u32 {
            binom.push(&binom[(j - 1) as usize] * (17 - j) / j);
        }
        for (i, b) in binom.iter().enumerate() {
            assert_eq!(&p.coeff(2 * i), b);
        }
    }

    #[test]
    fn fsd_basis_is_palindromic() {
        for n_half in [4usize, 7, 10] {
            for j in 0..=n_half / 4 {
                let p = expand_fsd_basis(n_half, j).unwrap();
                for i in 0..=2 * n_half {
                    assert_eq!(p.coeff(i), p.coeff(2 * n_half - i), "n={n_half} j={j} i={i}");
                }
            }
        }
    }

    #[test]
    fn length8_d2_family_by_hand() {
        // With a_1 free the combination is (1+y^2)^4 + a_1 y^2 (1-y^2)^2;
        // pivoting on a = A_2 = 4 + a_1 gives A_4 = 14 - 2a, A_6 = a, A_8 = 1.
        let we = fsd(8, 2);
        assert_eq!(we.nparams(), 1);
        assert_eq!(we.coeff(2).render(&we.free_params), "a");
        assert_eq!(we.coeff(4).render(&we.free_params), "14-2a");
        assert_eq!(we.coeff(6).render(&we.free_params), "a");
        assert_eq!(we.coeff(8).render(&we.free_params), "1");
    }

    // Each row: (2n, d, expressions for A_d..A_{d+6} as (const, [a, b, c])).
    type Row = (usize, usize, [(i64, [i64; 3]); 4]);
    const TABLE1: [Row; 21] = [
        (32, 8, [(0, [1, 0, 0]), (4960, [-8, 0, 0]), (-3472, [28, 0, 0]), (34720, [-56, 0, 0])]),
        (34, 8, [(0, [1, 0, 0]), (4114, [-7, 0, 0]), (2516, [20, 0, 0]), (29172, [-28, 0, 0])]),
        (36, 8, [(0, [1, 0, 0]), (3366, [-6, 0, 0]), (6630, [13, 0, 0]), (30600, [-8, 0, 0])]),
        (38, 8, [(0, [1, 0, 0]), (2717, [-5, 0, 0]), (9177, [7, 0, 0]), (35910, [5, 0, 0])]),
        (40, 8, [(0, [1, 0, 0]), (0, [-4, 1, 0]), (32110, [2, -10, 0]), (-54720, [12, 45, 0])]),
        (42, 10, [(0, [1, 0, 0]), (26117, [-9, 0, 0]), (-10455, [35, 0, 0]), (286713, [-75, 0, 0])]),
        (44, 10, [(0, [1, 0, 0]), (21021, [-8, 0, 0]), (19712, [26, 0, 0]), (250778, [-40, 0, 0])]),
        (46, 10, [(0, [1, 0, 0]), (16744, [-7, 0, 0]), (38709, [18, 0, 0]), (249458, [-14, 0, 0])]),
        (48, 10, [(0, [1, 0, 0]), (0, [-6, 1, 0]), (207552, [11, -12, 0]), (-606441, [4, 66, 0])]),
        (50, 10, [(0, [1, 0, 0]), (0, [-5, 1, 0]), (166600, [5, -11, 0]), (-271950, [15, 54, 0])]),
        (52, 10, [(0, [1, 0, 0]), (0, [-4, 1, 0]), (132600, [0, -10, 0]), (-41990, [20, 43, 0])]),
        (54, 10, [(0, [1, 0, 0]), (0, [-3, 1, 0]), (104652, [-4, -9, 0]), (107406, [20, 33, 0])]),
        (56, 12, [(0, [1, 0, 0]), (0, [-8, 1, 0]), (1343034, [24, -14, 0]), (-5765760, [-24, 91, 0])]),
        (58, 12, [(0, [1, 0, 0]), (0, [-7, 1, 0]), (1067838, [16, -13, 0]), (-3224452, [0, 77, 0])]),
        (60, 12, [(0, [1, 0, 0]), (0, [-6, 1, 0]), (843030, [9, -12, 0]), (-1454640, [16, 64, 0])]),
        (62, 12, [(0, [1, 0, 0]), (0, [-5, 1, 0]), (660858, [3, -11, 0]), (-270940, [25, 52, 0])]),
        (64, 12, [(0, [1, 0, 0]), (0, [-4, 1, 0]), (0, [-2, -10, 1]), (8707776, [28, 41, -16])]),
        (66, 12, [(0, [1, 0, 0]), (0, [-3, 1, 0]), (0, [-6, -9, 1]), (6874010, [26, 31, -15])]),
        (68, 12, [(0, [1, 0, 0]), (0, [-2, 1, 0]), (0, [-9, -8, 1]), (5393454, [20, 22, -14])]),
        (70, 12, [(0, [1, 0, 0]), (0, [-1, 1, 0]), (0, [-11, -7, 1]), (4206125, [11, 14, -13])]),
        (72, 14, [(0, [1, 0, 0]), (0, [-6, 1, 0]), (0, [7, -12, 1]), (56583450, [28, 62, -18])]),
    ];

    #[test]
    fn table1_all_rows_exact() {
        for &(n2, d, cols) in TABLE1.iter() {
            let we = fsd(n2, d);
            assert!(we.nparams() <= 3, "({n2},{d})");
            assert_eq!(
                we.coeff(0),
                &AffineExpr::constant_only(BigInt::one(), we.nparams())
            );
            for w in (2..d).step_by(2) {
                assert!(
                    we.coeff(w).constant.is_zero() && we.coeff(w).is_constant(),
                    "({n2},{d}): A_{w} should vanish"
                );
            }
            for (idx, (c, ks)) in cols.iter().enumerate() {
                let w = d + 2 * idx;
                let e = we.coeff(w);
                assert_eq!(e.constant, BigInt::from(*c), "({n2},{d}) A_{w} constant");
                for (p, k) in ks.iter().enumerate() {
                    let actual = e.coeffs.get(p).cloned().unwrap_or_default();
                    assert_eq!(actual, BigInt::from(*k), "({n2},{d}) A_{w} param {p}");
                }
            }
        }
    }

    #[test]
    fn family_sum_is_2_pow_halflength() {
        for &(n2, d, _) in TABLE1.iter() {
            let we = fsd(n2, d);
            let mut total = AffineExpr::constant_only(BigInt::zero(), we.nparams());
            for w in 0..=n2 {
                let e = we.coeff(w);
                total.constant += &e.constant;
                for (t, k) in e.coeffs.iter().enumerate() {
                    total.coeffs[t] += k;
                }
            }
            assert!(total.is_constant(), "({n2},{d}): parameters must cancel");
            assert_eq!(total.constant, BigInt::one() << (n2 / 2), "({n2},{d})");
        }
    }

    #[test]
    fn instantiate_self_dual_point() {
        let we = fsd(32, 8);
        let wd = we.instantiate(&[BigInt::from(364)]).unwrap();
        assert_eq!(wd.count(8), 364);
        assert_eq!(wd.count(10), 2048);
        assert_eq!(wd.count(12), 6720);
        assert_eq!(wd.total(), 1 << 16);
    }

    #[test]
    fn instantiate_matches_p32_distribution() {
        let we = fsd(32, 8);
        let wd = we.instantiate(&[BigInt::from(348)]).unwrap();
        let code = build_pure(&DccSpec::pure("1100101100110101".parse().unwrap()).unwrap()).unwrap();
        assert_eq!(wd, full_distribution(&code).unwrap());
    }

    #[test]
    fn instantiate_rejects_negative_coefficients() {
        let we = fsd(32, 8);
        assert!(matches!(
            we.instantiate(&[BigInt::from(1000)]),
            Err(Error::NegativeCoefficient { weight: 10 })
        ));
    }

    #[test]
    fn fit_p40_parameters() {
        let code =
            build_pure(&DccSpec::pure("10101101111101111000".parse().unwrap()).unwrap()).unwrap();
        let wd = full_distribution(&code).unwrap();
        let we = fsd(40, 8);
        let fitted = we.fit(&wd).unwrap();
        assert_eq!(fitted, vec![BigInt::from(25), BigInt::from(2180)]);
        assert_eq!(wd.count(10), 2080); // -4a + b = 2080
        assert_eq!(we.instantiate(&fitted).unwrap(), wd);
    }

    #[test]
    fn fit_rejects_odd_weight_distribution() {
        let we = fsd(32, 8);
        let mut counts = vec![0u128; 33];
        counts[0] = 1;
        counts[3] = 1;
        let wd = WeightDistribution::new(32, counts);
        assert!(we.fit(&wd).is_err());
    }

    #[test]
    fn extremal_type2_small() {
        let wd = doubly_even_extremal(8).unwrap();
        assert_eq!(wd.counts(), &[1, 0, 0, 0, 14, 0, 0, 0, 1]);
        let golay = doubly_even_extremal(24).unwrap();
        assert_eq!(golay.count(8), 759);
        assert_eq!(golay.count(12), 2576);
    }

    #[test]
    fn extremal_type2_lengths_88_and_112() {
        let wd = doubly_even_extremal(88).unwrap();
        assert_eq!(wd.count(16), 32164);
        assert_eq!(wd.count(20), 6992832);
        assert_eq!(wd.count(24), 535731625);
        let wd = doubly_even_extremal(112).unwrap();
        assert_eq!(wd.count(20), 355740);
        assert_eq!(wd.count(24), 95307030);
        assert_eq!(wd.count(28), 10847290300);
    }

    #[test]
    fn extremal_fit_has_no_free_parameters() {
        let wd = doubly_even_extremal(88).unwrap();
        let we = solve_parametric(88, 16, GleasonBasis::DoublyEven).unwrap();
        assert_eq!(we.nparams(), 0);
        assert_eq!(we.fit(&wd).unwrap(), Vec::<BigInt>::new());
    }

    #[test]
    fn render_style() {
        let we = fsd(40, 8);
        assert_eq!(we.coeff(8).render(&we.free_params), "a");
        assert_eq!(we.coeff(10).render(&we.free_params), "-4a+b");
        assert_eq!(we.coeff(12).render(&we.free_params), "32110+2a-10b");
    }
}
