//! Shadow enumerators of singly even self-dual codes and derivation of the
//! possible (code, shadow) weight enumerator families for a given length
//! and minimum weight.
//!
//! The shadow of a singly even self-dual code C is S = C_0^perp \ C where
//! C_0 is the doubly even subcode; its weights are congruent to n/2 mod 4
//! and its enumerator is obtained from the code enumerator by a fixed
//! substitution acting on the Gleason basis: (x^2+y^2) -> 2xy and
//! x^2 y^2 (x^2-y^2)^2 -> -(1/4)(x^2-y^2)^2 (x^2+y^2)^2.
//!
//! Families are derived by forcing the wrong-congruence shadow
//! coefficients to vanish, re-expressing the parameters through the low
//! shadow coefficients, and case-splitting on the shadow weights w with
//! 2w < d (each such count is 0 or 1, and two shadow vectors of weights
//! v, w with v + w < d cannot coexist because their sum would be a
//! nonzero codeword of weight below d).

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::exact::{one_param_range, rat, solve_constraints, solve_square, Rat, RatAffine, UnivariatePoly};
use crate::gleason::{basis_polys, solve_parametric_full, AffineExpr, GleasonBasis, ParametricWE};
use crate::wdist::WeightDistribution;
use crate::{Error, Result};

/// One family of possible (code, shadow) weight enumerators.
#[derive(Clone)]
pub struct ShadowFamily {
    pub n: usize,
    pub d: usize,
    /// 1-based label in the published ordering.
    pub label: usize,
    pub free_params: Vec<String>,
    code_coeffs: Vec<AffineExpr>,
    shadow_coeffs: Vec<AffineExpr>,
    /// Low shadow weights fixed by the case split, as (weight, count).
    pub low_support: Vec<(usize, u8)>,
}

impl ShadowFamily {
    pub fn nparams(&self) -> usize {
        self.free_params.len()
    }

    pub fn code_coeff(&self, w: usize) -> &AffineExpr {
        &self.code_coeffs[w]
    }

    pub fn shadow_coeff(&self, w: usize) -> &AffineExpr {
        &self.shadow_coeffs[w]
    }

    /// The code side as a parametric weight enumerator.
    pub fn code_we(&self) -> ParametricWE {
        ParametricWE::from_parts(
            self.n,
            self.d,
            GleasonBasis::FsdEven,
            self.free_params.clone(),
            self.code_coeffs.clone(),
        )
    }

    /// Evaluate both sides at integer parameters; all code and shadow
    /// coefficients must be nonnegative integers.
    pub fn instantiate(&self, values: &[BigInt]) -> Result<(WeightDistribution, Vec<BigInt>)> {
        let wd = self.code_we().instantiate(values)?;
        let mut shadow = Vec::with_capacity(self.n + 1);
        for (w, e) in self.shadow_coeffs.iter().enumerate() {
            let v = e.eval(values);
            if v.is_negative() {
                return Err(Error::NegativeCoefficient { weight: w });
            }
            shadow.push(v);
        }
        Ok((wd, shadow))
    }

    /// Smallest shadow weight whose coefficient is not identically zero.
    pub fn min_shadow_weight(&self) -> Option<usize> {
        self.shadow_coeffs.iter().enumerate().find_map(|(w, e)| {
            (!e.constant.is_zero() || !e.is_constant()).then_some(w)
        })
    }

    fn render_terms(&self, coeffs: &[AffineExpr], skip_identity_zero: bool) -> String {
        let mut parts = Vec::new();
        for (w, e) in coeffs.iter().enumerate() {
            if skip_identity_zero && e.constant.is_zero() && e.is_constant() {
                continue;
            }
            let body = e.render(&self.free_params);
            let term = match (body.as_str(), w) {
                ("1", 0) => "1".to_string(),
                (_, 0) => format!("({body})"),
                ("1", _) => format!("y^{w}"),
                _ if e.is_constant() && !e.constant.is_negative() => format!("{body}y^{w}"),
                _ => format!("({body})y^{w}"),
            };
            parts.push(term);
        }
        parts.join(" + ")
    }

    pub fn display_code(&self) -> String {
        self.render_terms(&self.code_coeffs, true)
    }

    pub fn display_shadow(&self) -> String {
        self.render_terms(&self.shadow_coeffs, true)
    }
}

impl fmt::Debug for ShadowFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "W_{}({}, d={}, params=[{}], support={:?})",
            self.label,
            self.n,
            self.d,
            self.free_params.join(","),
            self.low_support
        )
    }
}

/// Shadow image of FSD basis element j at half length `n_half`, as exact
/// rational coefficients indexed by exponent: (-1)^j 2^{n-6j} y^{n-4j}
/// (1-y^2)^{2j} (1+y^2)^{2j}.
fn shadow_image(n_half: usize, j: usize, len: usize) -> Vec<Rat> {
    let one_minus = UnivariatePoly::from_coeffs(vec![BigInt::one(), BigInt::zero(), -BigInt::one()]);
    let one_plus = UnivariatePoly::from_coeffs(vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
    let poly = one_minus.pow(2 * j).mul(&one_plus.pow(2 * j));
    let scale = if n_half >= 6 * j {
        rat(1 << (n_half - 6 * j))
    } else {
        Rat::new(BigInt::one(), BigInt::one() << (6 * j - n_half))
    };
    let scale = if j % 2 == 0 { scale } else { -scale };
    let shift = n_half - 4 * j;
    let mut out = vec![Rat::zero(); len + 1];
    for (p, c) in poly.coeffs().iter().enumerate() {
        if !c.is_zero() && shift + p <= len {
            out[shift + p] = Rat::from_integer(c.clone()) * &scale;
        }
    }
    out
}

/// Shadow enumerator of a concrete singly even self-dual enumerator of the
/// given length. The input must lie in the FSD Gleason span; doubly even
/// inputs are rejected.
pub fn shadow_transform(we: &UnivariatePoly, length: usize) -> Result<UnivariatePoly> {
    if length % 2 != 0 || length == 0 {
        return Err(Error::InvalidArgument("length must be even".into()));
    }
    if we
        .coeffs()
        .iter()
        .enumerate()
        .all(|(w, c)| c.is_zero() || w % 4 == 0)
    {
        return Err(Error::InvalidArgument(
            "enumerator is doubly even; shadows are defined for singly even codes".into(),
        ));
    }
    let n_half = length / 2;
    let polys = basis_polys(GleasonBasis::FsdEven, length)?;
    // The basis is triangular in the low even coefficients, so the
    // combination coefficients follow by forward substitution.
    let m = polys.len() - 1;
    let mut a: Vec<BigInt> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let mut c = we.coeff(2 * j);
        for (i, ai) in a.iter().enumerate() {
            c -= ai * polys[i].coeff(2 * j);
        }
        a.push(c);
    }
    // Residual check: the input must be reproduced exactly.
    let mut recon = UnivariatePoly::zero();
    for (j, aj) in a.iter().enumerate() {
        recon = recon.add(&polys[j].mul(&UnivariatePoly::from_coeffs(vec![aj.clone()])));
    }
    if &recon != we {
        return Err(Error::InvalidArgument(
            "enumerator is not a formally self-dual even enumerator".into(),
        ));
    }
    let mut coeffs = vec![Rat::zero(); length + 1];
    for (j, aj) in a.iter().enumerate() {
        if aj.is_zero() {
            continue;
        }
        let img = shadow_image(n_half, j, length);
        for (w, c) in img.iter().enumerate() {
            coeffs[w] += c * Rat::from_integer(aj.clone());
        }
    }
    let residue = n_half % 4;
    let mut out = vec![BigInt::zero(); length + 1];
    for (w, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::NonIntegral(format!(
                "shadow coefficient at weight {w} is {c}"
            )));
        }
        if w % 4 != residue {
            return Err(Error::NonIntegral(format!(
                "shadow weight {w} violates the mod-4 congruence"
            )));
        }
        out[w] = c.to_integer();
    }
    Ok(UnivariatePoly::from_coeffs(out))
}

// Working state of the family derivation: every code and shadow
// coefficient as an affine expression in the current free parameters.
#[derive(Clone)]
struct Pipeline {
    nparams: usize,
    code: Vec<RatAffine>,
    shadow: Vec<RatAffine>,
}

impl Pipeline {
    fn compose(&self, subs: &[RatAffine]) -> Pipeline {
        let nparams = subs.first().map_or(0, RatAffine::nparams);
        Pipeline {
            nparams,
            code: self.code.iter().map(|e| e.compose(subs)).collect(),
            shadow: self.shadow.iter().map(|e| e.compose(subs)).collect(),
        }
    }

    fn constrain(&self, equations: &[RatAffine]) -> Result<Pipeline> {
        if equations.is_empty() {
            return Ok(self.clone());
        }
        let kernel = solve_constraints(equations, self.nparams)?;
        Ok(self.compose(&kernel.substitution))
    }

    /// Re-express the parameters through the given independent functionals.
    fn recoordinate(&self, functionals: &[RatAffine]) -> Result<Pipeline> {
        assert_eq!(functionals.len(), self.nparams);
        let mat: Vec<Vec<Rat>> = functionals.iter().map(|f| f.coeffs.clone()).collect();
        let rhs: Vec<RatAffine> = functionals
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let mut r = RatAffine::param(i, self.nparams);
                r.constant = -f.constant.clone();
                r
            })
            .collect();
        let subs = solve_square(&mat, &rhs)?;
        Ok(self.compose(&subs))
    }

    /// Greedily pick independent functionals from the candidate list until
    /// the parameter space is fully coordinatized.
    fn pivot_functionals(&self, candidates: &[RatAffine]) -> Option<Vec<RatAffine>> {
        let mut chosen: Vec<RatAffine> = Vec::new();
        let mut reduced: Vec<Vec<Rat>> = Vec::new();
        for f in candidates {
            if chosen.len() == self.nparams {
                break;
            }
            let mut v = f.coeffs.clone();
            for b in &reduced {
                let lead = b.iter().position(|x| !x.is_zero()).unwrap();
                if !v[lead].is_zero() {
                    let s = &v[lead] / &b[lead];
                    for (x, y) in v.iter_mut().zip(b) {
                        let t = y * &s;
                        *x = &*x - &t;
                    }
                }
            }
            if !v.iter().all(Zero::is_zero) {
                reduced.push(v);
                chosen.push(f.clone());
            }
        }
        (chosen.len() == self.nparams).then_some(chosen)
    }
}

fn shadow_residue(n2: usize) -> usize {
    (n2 / 2) % 4
}

/// Feasibility of {expr >= 0 for all exprs} over 0, 1 or 2 rational
/// variables (Fourier-Motzkin for the 2-variable case).
fn nonneg_feasible(exprs: &[RatAffine], nparams: usize) -> bool {
    match nparams {
        0 => exprs.iter().all(|e| !e.constant.is_negative()),
        1 => one_param_range(exprs, i64::MIN / 4, i64::MAX / 4).is_some(),
        2 => {
            let mut reduced: Vec<RatAffine> = Vec::new();
            let mut pos: Vec<&RatAffine> = Vec::new();
            let mut neg: Vec<&RatAffine> = Vec::new();
            for e in exprs {
                if e.coeffs[0].is_zero() {
                    let mut r = RatAffine::zero(1);
                    r.constant = e.constant.clone();
                    r.coeffs[0] = e.coeffs[1].clone();
                    reduced.push(r);
                } else if e.coeffs[0].is_positive() {
                    pos.push(e);
                } else {
                    neg.push(e);
                }
            }
            // Combine each lower bound on q0 with each upper bound.
            for p in &pos {
                for n in &neg {
                    // p: c_p + a_p q0 + b_p q1 >= 0 with a_p > 0
                    // n: c_n + a_n q0 + b_n q1 >= 0 with a_n < 0
                    // eliminate q0: a_p * n - a_n * p >= 0.
                    let mut r = RatAffine::zero(1);
                    r.constant = &p.coeffs[0] * &n.constant - &n.coeffs[0] * &p.constant;
                    r.coeffs[0] = &p.coeffs[0] * &n.coeffs[1] - &n.coeffs[0] * &p.coeffs[1];
                    reduced.push(r);
                }
            }
            one_param_range(&reduced, i64::MIN / 4, i64::MAX / 4).is_some()
        }
        // Higher-dimensional families: check only pointwise necessary
        // conditions (constant expressions).
        _ => exprs
            .iter()
            .filter(|e| e.is_constant())
            .all(|e| !e.constant.is_negative()),
    }
}

fn to_affine_exprs(exprs: &[RatAffine]) -> Result<Vec<AffineExpr>> {
    exprs
        .iter()
        .map(|e| {
            let (constant, coeffs) = e.to_integer_parts()?;
            Ok(AffineExpr { constant, coeffs })
        })
        .collect()
}

// Published parameter conventions: (names, matrix U with q_i = sum_j
// U[i][j] * pi_j) mapping the canonical shadow-pivot coordinates q of the
// generic family onto the printed parameters pi.
fn presentation(n2: usize, nparams: usize) -> (Vec<String>, Vec<Vec<i64>>) {
    match (n2, nparams) {
        (54, 1) => (vec!["\u{3b2}".into()], vec![vec![1]]),
        // q0 = B_12 = -b, q1 = B_16 = a + 22b.
        (112, 2) => (vec!["a".into(), "b".into()], vec![vec![0, -1], vec![1, 22]]),
        _ => {
            let names = (0..nparams)
                .map(|i| char::from(b'a' + u8::try_from(i).expect("few params")).to_string())
                .collect();
            let mut u = vec![vec![0i64; nparams]; nparams];
            for (i, row) in u.iter_mut().enumerate() {
                row[i] = 1;
            }
            (names, u)
        }
    }
}

/// Derive the possible (code, shadow) enumerator families of a singly even
/// self-dual [n, n/2, d] code.
pub fn derive_families(n2: usize, d: usize) -> Result<Vec<ShadowFamily>> {
    if n2 % 2 != 0 || n2 == 0 {
        return Err(Error::InvalidArgument("length must be even".into()));
    }
    let sol = solve_parametric_full(n2, d, GleasonBasis::FsdEven)?;
    let n_half = n2 / 2;
    let residue = shadow_residue(n2);
    let nparams = sol.we.nparams();

    // Shadow coefficients as affine expressions in the family parameters.
    let images: Vec<Vec<Rat>> =
        (0..sol.gleason.a.len()).map(|j| shadow_image(n_half, j, n2)).collect();
    let mut shadow = vec![RatAffine::zero(nparams); n2 + 1];
    for (j, aj) in sol.gleason.a.iter().enumerate() {
        for (w, c) in images[j].iter().enumerate() {
            if !c.is_zero() {
                let t = aj.scale(c);
                shadow[w] = shadow[w].add(&t);
            }
        }
    }
    let code: Vec<RatAffine> = sol
        .we
        .coeffs()
        .iter()
        .map(|e| {
            let mut r = RatAffine::constant(Rat::from_integer(e.constant.clone()), nparams);
            for (i, k) in e.coeffs.iter().enumerate() {
                r.coeffs[i] = Rat::from_integer(k.clone());
            }
            r
        })
        .collect();
    let base = Pipeline { nparams, code, shadow };

    // Shadow weights violating the congruence must vanish, and the weight-0
    // coefficient must vanish (a shadow containing 0 would mean the code is
    // doubly even).
    let mut equations = Vec::new();
    for (w, e) in base.shadow.iter().enumerate() {
        let wrong_congruence = w % 4 != residue;
        let zero_weight = w == 0 && residue == 0;
        if (wrong_congruence || zero_weight) && !e.is_zero() {
            equations.push(e.clone());
        }
    }
    let base = base.constrain(&equations).map_err(|_| {
        Error::Infeasible(format!("no singly even self-dual enumerator of length {n2}"))
    })?;

    // Case split over the low shadow weights: counts at weights w with
    // 2w < d are 0 or 1, and supports at v, w with v + w < d exclude each
    // other. A supported low weight v also forces B_w = 0 for every higher
    // shadow weight w with v + w < d.
    let low: Vec<usize> = (1..=n2).filter(|&w| w % 4 == residue && 2 * w < d).collect();
    let mut assignments: Vec<Vec<(usize, u8)>> = vec![vec![]];
    for &w in &low {
        let mut next = Vec::new();
        for asg in &assignments {
            let mut with_zero = asg.clone();
            with_zero.push((w, 0));
            next.push(with_zero);
            let compatible = asg.iter().all(|&(v, val)| val == 0 || v + w >= d);
            if compatible {
                let mut with_one = asg.clone();
                with_one.push((w, 1));
                next.push(with_one);
            }
        }
        assignments = next;
    }

    let mut families = Vec::new();
    for assignment in assignments {
        let mut eqs = Vec::new();
        let mut support: Vec<(usize, u8)> = Vec::new();
        for &(w, val) in &assignment {
            let mut e = base.shadow[w].clone();
            e.constant -= rat(i64::from(val));
            eqs.push(e);
            support.push((w, val));
        }
        // Forced zeros above the split range.
        for &(v, val) in &assignment {
            if val == 1 {
                for w in (1..=n2).filter(|&w| w % 4 == residue && !low.contains(&w)) {
                    if v + w < d {
                        eqs.push(base.shadow[w].clone());
                        support.push((w, 0));
                    }
                }
            }
        }
        let Ok(restricted) = base.constrain(&eqs) else {
            continue;
        };
        // Every coefficient of code and shadow must admit a nonnegative
        // point; otherwise the case is vacuous.
        let all: Vec<RatAffine> =
            restricted.code.iter().chain(&restricted.shadow).cloned().collect();
        if !nonneg_feasible(&all, restricted.nparams) {
            continue;
        }
        families.push((support, restricted));
    }

    // Canonical coordinates per family: the ascending parametric shadow
    // coefficients, extended by code pivots if needed.
    let mut canonical = Vec::new();
    for (support, pipe) in families {
        let mut candidates: Vec<RatAffine> = (1..=n2)
            .filter(|&w| w % 4 == residue)
            .map(|w| pipe.shadow[w].clone())
            .collect();
        candidates.extend((d..=n2).step_by(2).map(|w| pipe.code[w].clone()));
        let pipe = if pipe.nparams == 0 {
            pipe
        } else {
            let funcs = pipe.pivot_functionals(&candidates).ok_or_else(|| {
                Error::Infeasible("parameters not determined by shadow and code coefficients".into())
            })?;
            pipe.recoordinate(&funcs)?
        };
        canonical.push((support, pipe));
    }

    // Published order: families with low-weight support ascending by their
    // smallest supported weight; the generic (empty-support) family comes
    // first when the shadow weights are odd and last when they are even.
    let min_support = |support: &[(usize, u8)]| -> Option<usize> {
        support.iter().filter(|&&(_, v)| v == 1).map(|&(w, _)| w).min()
    };
    canonical.sort_by_key(|(support, _)| match min_support(support) {
        Some(w) => (1, w),
        None => {
            if residue % 2 == 1 {
                (0, 0)
            } else {
                (2, 0)
            }
        }
    });

    // Parameter presentation: the generic family takes the published
    // convention; siblings inherit parameters through the code-coefficient
    // functionals of the generic family so that shared coefficients print
    // identically across families.
    let generic_pos = canonical.iter().position(|(s, _)| min_support(s).is_none());
    let mut named: Vec<(Vec<(usize, u8)>, Pipeline, Vec<String>)> = Vec::new();
    let mut generic_functionals: Option<(Vec<RatAffine>, Vec<String>)> = None;
    if let Some(gp) = generic_pos {
        let (support, pipe) = canonical[gp].clone();
        let f = pipe.nparams;
        let (names, u) = presentation(n2, f);
        // q = U * pi: substitute directly.
        let subs: Vec<RatAffine> = (0..f)
            .map(|i| {
                let mut e = RatAffine::zero(f);
                for (j, c) in u[i].iter().enumerate() {
                    e.coeffs[j] = rat(*c);
                }
                e
            })
            .collect();
        let pipe = pipe.compose(&subs);
        // Functionals pi_t(A_d, A_{d+2}, ...): invert the pivot block.
        if f > 0 {
            let mat: Vec<Vec<Rat>> =
                (0..f).map(|t| pipe.code[d + 2 * t].coeffs.clone()).collect();
            let rhs: Vec<RatAffine> = (0..f)
                .map(|t| {
                    // placeholder parameters: value of A_{d+2t}
                    let mut r = RatAffine::param(t, f);
                    r.constant = -pipe.code[d + 2 * t].constant.clone();
                    r
                })
                .collect();
            if let Ok(funcs) = solve_square(&mat, &rhs) {
                generic_functionals = Some((funcs, names.clone()));
            }
        }
        named.push((support, pipe, names));
    }
    for (idx, (support, pipe)) in canonical.iter().enumerate() {
        if Some(idx) == generic_pos {
            continue;
        }
        let mut done = false;
        if let Some((funcs, gnames)) = &generic_functionals {
            // Evaluate the generic parameters on this family: pi_t as an
            // affine function of this family's coordinates.
            let restricted: Vec<RatAffine> = funcs
                .iter()
                .map(|f| {
                    let mut acc = RatAffine::constant(f.constant.clone(), pipe.nparams);
                    for (t, c) in f.coeffs.iter().enumerate() {
                        acc = acc.add(&pipe.code[d + 2 * t].scale(c));
                    }
                    acc
                })
                .collect();
            let live: Vec<usize> =
                (0..restricted.len()).filter(|&t| !restricted[t].is_constant()).collect();
            if live.len() == pipe.nparams {
                let funcs_here: Vec<RatAffine> =
                    live.iter().map(|&t| restricted[t].clone()).collect();
                if let Ok(repiped) = pipe.recoordinate(&funcs_here) {
                    let names = live.iter().map(|&t| gnames[t].clone()).collect();
                    named.push((support.clone(), repiped, names));
                    done = true;
                }
            }
        }
        if !done {
            let f = pipe.nparams;
            let (names, _) = presentation(0, f);
            named.push((support.clone(), pipe.clone(), names));
        }
    }
    // Restore published order (the generic family was emitted first).
    named.sort_by_key(|(support, _, _)| match min_support(support) {
        Some(w) => (1, w),
        None => {
            if residue % 2 == 1 {
                (0, 0)
            } else {
                (2, 0)
            }
        }
    });

    let mut out = Vec::new();
    for (label, (support, pipe, names)) in named.into_iter().enumerate() {
        out.push(ShadowFamily {
            n: n2,
            d,
            label: label + 1,
            free_params: names,
            code_coeffs: to_affine_exprs(&pipe.code)?,
            shadow_coeffs: to_affine_exprs(&pipe.shadow)?,
            low_support: support,
        });
    }
    Ok(out)
}

/// Surviving parameter values for a length-54 family under the constraint
/// A_10 < max_a10, including the pairing argument: when the shadow has the
/// weight-3 vector, every weight-7 shadow vector added to it yields a
/// distinct weight-10 codeword, so A_10 >= B_7.
pub fn bound_beta_54(family: &ShadowFamily, max_a10: u128) -> Result<Vec<i64>> {
    if family.n != 54 || family.nparams() != 1 {
        return Err(Error::InvalidArgument(
            "the bound applies to one-parameter length-54 families".into(),
        ));
    }
    let to_rat = |e: &AffineExpr| -> RatAffine {
        let mut r = RatAffine::constant(Rat::from_integer(e.constant.clone()), 1);
        r.coeffs[0] = Rat::from_integer(e.coeffs[0].clone());
        r
    };
    let mut constraints: Vec<RatAffine> = Vec::new();
    for e in family.code_coeffs.iter().chain(&family.shadow_coeffs) {
        let r = to_rat(e);
        if !r.is_constant() || r.constant.is_negative() {
            constraints.push(r);
        }
    }
    // Pairing: a fixed weight-v shadow vector plus any weight-(d-v) shadow
    // vector is a weight-d codeword.
    for &(v, val) in &family.low_support {
        if val == 1 && family.d >= v {
            let w = family.d - v;
            if w <= family.n && w % 4 == shadow_residue(family.n) {
                let diff = to_rat(family.code_coeff(family.d)).sub(&to_rat(family.shadow_coeff(w)));
                constraints.push(diff);
            }
        }
    }
    // A_10 <= max_a10 - 1.
    let mut cap = to_rat(family.code_coeff(family.d)).scale(&rat(-1));
    cap.constant += Rat::from_integer(BigInt::from(max_a10) - 1);
    constraints.push(cap);
    let Some((lo, hi)) = one_param_range(&constraints, i64::MIN / 4, i64::MAX / 4) else {
        return Ok(vec![]);
    };
    Ok((lo..=hi).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn affine(e: &AffineExpr) -> (i64, Vec<i64>) {
        (
            i64::try_from(&e.constant).unwrap(),
            e.coeffs.iter().map(|c| i64::try_from(c).unwrap()).collect(),
        )
    }

    #[test]
    fn shadow_of_repetition_code_pair() {
        let we = UnivariatePoly::from_coeffs(vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
        let s = shadow_transform(&we, 2).unwrap();
        assert_eq!(s.coeff(1), BigInt::from(2));
        assert_eq!(s.degree(), Some(1));
    }

    #[test]
    fn shadow_rejects_doubly_even_input() {
        // Extended Hamming enumerator 1 + 14y^4 + y^8.
        let mut c = vec![BigInt::zero(); 9];
        c[0] = BigInt::one();
        c[4] = BigInt::from(14);
        c[8] = BigInt::one();
        let we = UnivariatePoly::from_coeffs(c);
        assert!(shadow_transform(&we, 8).is_err());
    }

    #[test]
    fn shadow_congruence_of_direct_sums() {
        // Four copies of the [2,1] repetition code: W = (1+y^2)^4, S = 16y^4.
        let p = UnivariatePoly::from_coeffs(vec![BigInt::one(), BigInt::zero(), BigInt::one()]);
        let we = p.pow(4);
        let s = shadow_transform(&we, 8).unwrap();
        assert_eq!(s.coeff(4), BigInt::from(16));
        assert_eq!(s.degree(), Some(4));
    }

    #[test]
    fn families_length_54() {
        let fams = derive_families(54, 10).unwrap();
        assert_eq!(fams.len(), 2);
        let w1 = &fams[0];
        assert_eq!(w1.label, 1);
        assert_eq!(w1.free_params, vec!["\u{3b2}".to_string()]);
        assert_eq!(affine(w1.code_coeff(10)), (351, vec![-8]));
        assert_eq!(affine(w1.code_coeff(12)), (5031, vec![24]));
        assert_eq!(affine(w1.shadow_coeff(3)), (0, vec![0]));
        assert_eq!(affine(w1.shadow_coeff(7)), (0, vec![1]));
        assert_eq!(affine(w1.shadow_coeff(11)), (2808, vec![-10]));
        let w2 = &fams[1];
        assert_eq!(affine(w2.code_coeff(10)), (351, vec![-8]));
        assert_eq!(affine(w2.code_coeff(12)), (5543, vec![24]));
        assert_eq!(affine(w2.shadow_coeff(3)), (1, vec![0]));
        assert_eq!(affine(w2.shadow_coeff(7)), (-12, vec![1]));
        assert_eq!(affine(w2.shadow_coeff(11)), (2874, vec![-10]));
    }

    #[test]
    fn families_length_54_d12_is_empty() {
        let fams = derive_families(54, 12).unwrap_or_default();
        assert!(fams.is_empty());
    }

    #[test]
    fn families_length_112() {
        let fams = derive_families(112, 20).unwrap();
        assert_eq!(fams.len(), 3);
        let (w1, w2, w3) = (&fams[0], &fams[1], &fams[2]);
        for f in [w1, w2, w3] {
            assert_eq!(affine(f.code_coeff(20)).0, 157388);
        }
        assert_eq!(affine(w1.code_coeff(20)), (157388, vec![16]));
        assert_eq!(affine(w1.code_coeff(22)), (3125056, vec![-64]));
        assert_eq!(affine(w1.code_coeff(24)), (52740406, vec![-160]));
        assert_eq!(affine(w1.shadow_coeff(4)), (1, vec![0]));
        assert_eq!(affine(w1.shadow_coeff(16)), (-2002, vec![1]));
        assert_eq!(affine(w1.shadow_coeff(20)), (428099, vec![-20]));

        assert_eq!(affine(w2.code_coeff(20)), (157388, vec![16, 0]));
        assert_eq!(affine(w2.code_coeff(22)), (3431232, vec![-64, 1024]));
        assert_eq!(affine(w2.code_coeff(24)), (48040246, vec![-160, -10240]));
        assert_eq!(affine(w2.shadow_coeff(8)), (1, vec![0, 0]));
        assert_eq!(affine(w2.shadow_coeff(12)), (-24, vec![0, -1]));
        assert_eq!(affine(w2.shadow_coeff(16)), (276, vec![1, 22]));
        assert_eq!(affine(w2.shadow_coeff(20)), (394680, vec![-20, -231]));

        assert_eq!(affine(w3.code_coeff(22)), (3431232, vec![-64, 1024]));
        assert_eq!(affine(w3.code_coeff(24)), (47974710, vec![-160, -10240]));
        assert_eq!(affine(w3.shadow_coeff(12)), (0, vec![0, -1]));
        assert_eq!(affine(w3.shadow_coeff(16)), (0, vec![1, 22]));
        assert_eq!(affine(w3.shadow_coeff(20)), (396704, vec![-20, -231]));
    }

    #[test]
    fn beta_bounds_length_54() {
        let fams = derive_families(54, 10).unwrap();
        // Proposition: A_10 < 27 forces W_1 with beta in {41, 42, 43}.
        assert_eq!(bound_beta_54(&fams[0], 27).unwrap(), vec![41, 42, 43]);
        assert!(bound_beta_54(&fams[1], 27).unwrap().is_empty());
        // Corollary: W_2 unconstrained gives beta in {12, ..., 40}.
        assert_eq!(bound_beta_54(&fams[1], 1 << 30).unwrap(), (12..=40).collect::<Vec<_>>());
        assert_eq!(bound_beta_54(&fams[0], 1 << 30).unwrap(), (0..=43).collect::<Vec<_>>());
        // A_10 = 0 would need 8*beta = 351.
        assert!(bound_beta_54(&fams[0], 0).unwrap().is_empty());
        assert!(bound_beta_54(&fams[1], 0).unwrap().is_empty());
    }

    #[test]
    fn instantiated_shadow_sums() {
        let fams = derive_families(54, 10).unwrap();
        for beta in [0i64, 10, 20, 43] {
            if let Ok((wd, shadow)) = fams[0].instantiate(&[BigInt::from(beta)]) {
                assert_eq!(wd.total(), 1 << 27);
                let total: BigInt = shadow.iter().sum();
                assert_eq!(total, BigInt::from(1u128 << 27));
            }
        }
    }
}
