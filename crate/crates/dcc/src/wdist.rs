//! Exact weight distributions of binary linear codes.
//!
//! Full enumeration walks the 2^k messages in Gray order so each step is a
//! single row XOR plus a popcount; the message space is split into blocks
//! for parallel workers and the per-block counts are merged by addition.
//! Low-weight coefficients come from a weight-bounded message search that
//! relies on the systematic-form bound wt(codeword) >= wt(message).

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigUint, One, Zero};
use rayon::prelude::*;

use crate::gf2::LinearCode;
use crate::{Error, Result};

/// Hard cap on enumerable dimension; full enumeration walks 2^k steps.
pub const DEFAULT_DIMENSION_BUDGET: usize = 36;

/// Exact codeword counts A_0..A_n of an [n, k] code.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    n: usize,
    counts: Vec<u128>,
}

impl WeightDistribution {
    pub fn new(n: usize, counts: Vec<u128>) -> Self {
        assert_eq!(counts.len(), n + 1);
        WeightDistribution { n, counts }
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn count(&self, weight: usize) -> u128 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight with a positive count.
    pub fn min_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&i| self.counts[i] > 0)
    }

    /// The (A_d, A_{d+2}, A_{d+4}) triple used in the classification tables.
    pub fn triple(&self, d: usize) -> (u128, u128, u128) {
        (self.count(d), self.count(d + 2), self.count(d + 4))
    }

    /// True when all odd-weight counts vanish.
    pub fn is_even(&self) -> bool {
        self.counts.iter().skip(1).step_by(2).all(|&c| c == 0)
    }

    /// Sparse "weight:count" rendering of the nonzero entries.
    pub fn sparse(&self) -> String {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, c)| format!("{w}:{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightDistribution[n={}] {}", self.n, self.sparse())
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sparse())
    }
}

/// Exact counts A_0..A_cutoff; agrees with the full distribution up to
/// the cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialWeightDistribution {
    n: usize,
    cutoff: usize,
    counts: Vec<u128>,
}

impl PartialWeightDistribution {
    pub fn length(&self) -> usize {
        self.n
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn count(&self, weight: usize) -> u128 {
        assert!(weight <= self.cutoff, "weight beyond cutoff");
        self.counts[weight]
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    pub fn triple(&self, d: usize) -> (u128, u128, u128) {
        (self.count(d), self.count(d + 2), self.count(d + 4))
    }
}

// Packed codeword rows with a compile-time word count so the enumeration
// loop stays branch-free.
fn pack_rows<const W: usize>(code: &LinearCode) -> Vec<[u64; W]> {
    code.generator()
        .row_slice()
        .iter()
        .map(|r| {
            let mut a = [0u64; W];
            a[..r.words().len()].copy_from_slice(r.words());
            a
        })
        .collect()
}

#[inline(always)]
fn popcount<const W: usize>(cw: &[u64; W]) -> usize {
    let mut w = 0;
    for x in cw {
        w += x.count_ones() as usize;
    }
    w
}

/// Tally the codewords of messages base..base+steps (Gray order) into
/// `counts`. The caller guarantees the block stays within one aligned
/// power-of-two range so every transition flips a low message bit.
fn gray_block<const W: usize>(
    rows: &[[u64; W]],
    base: u64,
    steps: u64,
    counts: &mut [u64],
) {
    let start = base ^ (base >> 1);
    let mut cw = [0u64; W];
    for b in 0..rows.len() {
        if (start >> b) & 1 == 1 {
            for i in 0..W {
                cw[i] ^= rows[b][i];
            }
        }
    }
    counts[popcount(&cw)] += 1;
    for r in 1..steps {
        let b = (base + r).trailing_zeros() as usize;
        let row = &rows[b];
        for i in 0..W {
            cw[i] ^= row[i];
        }
        counts[popcount(&cw)] += 1;
    }
}

fn full_counts<const W: usize>(code: &LinearCode) -> Vec<u128> {
    let rows: Vec<[u64; W]> = pack_rows(code);
    let k = code.dimension();
    let n = code.length();
    // Enough blocks to keep both workers busy without merge overhead.
    let block_bits = k.saturating_sub(10).min(k);
    let blocks = 1u64 << block_bits;
    let block_size = 1u64 << (k - block_bits);
    let merged = (0..blocks)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut counts, blk| {
                gray_block(&rows, blk * block_size, block_size, &mut counts);
                counts
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    merged.into_iter().map(u128::from).collect()
}

/// Exact distribution over all 2^k codewords.
pub fn full_distribution(code: &LinearCode) -> Result<WeightDistribution> {
    full_distribution_with_budget(code, DEFAULT_DIMENSION_BUDGET)
}

pub fn full_distribution_with_budget(
    code: &LinearCode,
    budget: usize,
) -> Result<WeightDistribution> {
    let k = code.dimension();
    if k > budget || k >= 63 {
        return Err(Error::BudgetExceeded(format!(
            "full enumeration of 2^{k} codewords exceeds the budget of 2^{budget}"
        )));
    }
    let counts = match code.length().div_ceil(64) {
        1 => full_counts::<1>(code),
        2 => full_counts::<2>(code),
        3 => full_counts::<3>(code),
        w => {
            return Err(Error::BudgetExceeded(format!(
                "codes wider than {} bits are not enumerable",
                w * 64
            )))
        }
    };
    Ok(WeightDistribution::new(code.length(), counts))
}

// Depth-first walk over all messages of weight <= max_onés with incremental
// codeword updates; visit is called once per nonzero message.
fn dfs_bounded<const W: usize, F: FnMut(&[u64; W], usize) -> bool>(
    rows: &[[u64; W]],
    cw: &mut [u64; W],
    first: usize,
    remaining: usize,
    visit: &mut F,
) -> bool {
    for b in first..rows.len() {
        for i in 0..W {
            cw[i] ^= rows[b][i];
        }
        let w = popcount(cw);
        if !visit(cw, w) {
            return false;
        }
        if remaining > 1 && !dfs_bounded(rows, cw, b + 1, remaining - 1, visit) {
            return false;
        }
        for i in 0..W {
            cw[i] ^= rows[b][i];
        }
    }
    true
}

fn bounded_counts<const W: usize>(code: &LinearCode, w_max: usize) -> Vec<u128> {
    let rows: Vec<[u64; W]> = pack_rows(code);
    let n = code.length();
    let k = code.dimension();
    if w_max == 0 || k == 0 {
        let mut counts = vec![0u128; w_max + 1];
        counts[0] = 1;
        return counts;
    }
    // Parallelize over the first one or two chosen rows; subtree sizes are
    // uneven but work stealing absorbs the skew.
    let mut tasks: Vec<(usize, Option<usize>)> = Vec::new();
    for i in 0..k {
        tasks.push((i, None));
        if w_max >= 2 {
            for j in i + 1..k {
                tasks.push((i, Some(j)));
            }
        }
    }
    let merged = tasks
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut counts, (i, j)| {
                let mut cw = [0u64; W];
                for t in 0..W {
                    cw[t] ^= rows[i][t];
                }
                match j {
                    None => {
                        counts[popcount(&cw)] += 1;
                    }
                    Some(j) => {
                        for t in 0..W {
                            cw[t] ^= rows[j][t];
                        }
                        counts[popcount(&cw)] += 1;
                        if w_max > 2 {
                            dfs_bounded(&rows, &mut cw, j + 1, w_max - 2, &mut |_, w| {
                                counts[w] += 1;
                                true
                            });
                        }
                    }
                }
                counts
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let mut counts: Vec<u128> = merged.into_iter().take(w_max + 1).map(u128::from).collect();
    counts.resize(w_max + 1, 0);
    counts[0] = 1;
    counts
}

/// Exact A_i for i <= w_max via weight-bounded message enumeration.
/// Requires a systematic generator so the message-weight bound applies.
pub fn bounded_distribution(
    code: &LinearCode,
    w_max: usize,
) -> Result<PartialWeightDistribution> {
    if !code.is_systematic() {
        return Err(Error::NotSystematic);
    }
    let w_max = w_max.min(code.length());
    let counts = match code.length().div_ceil(64) {
        1 => bounded_counts::<1>(code, w_max),
        2 => bounded_counts::<2>(code, w_max),
        3 => bounded_counts::<3>(code, w_max),
        w => {
            return Err(Error::BudgetExceeded(format!(
                "codes wider than {} bits are not enumerable",
                w * 64
            )))
        }
    };
    Ok(PartialWeightDistribution { n: code.length(), cutoff: w_max, counts })
}

/// Early-exit probe: is there a nonzero codeword of weight < floor?
/// Requires a systematic generator.
pub(crate) fn has_word_below(code: &LinearCode, floor: usize) -> bool {
    if floor <= 1 {
        return false;
    }
    match code.length().div_ceil(64) {
        1 => probe_below::<1>(code, floor),
        2 => probe_below::<2>(code, floor),
        _ => probe_below::<3>(code, floor),
    }
}

fn probe_below<const W: usize>(code: &LinearCode, floor: usize) -> bool {
    let rows: Vec<[u64; W]> = pack_rows(code);
    let mut cw = [0u64; W];
    let max_msg = (floor - 1).min(code.dimension());
    if max_msg == 0 {
        return false;
    }
    !dfs_bounded(&rows, &mut cw, 0, max_msg, &mut |_, w| w >= floor)
}

/// Smallest nonzero codeword weight, found by raising the bounded
/// enumeration cutoff until a nonzero count appears.
pub fn min_weight(code: &LinearCode) -> Result<usize> {
    min_weight_at_least(code, 0)
}

/// Minimum weight when it is already known to be at least `floor`.
pub(crate) fn min_weight_at_least(code: &LinearCode, floor: usize) -> Result<usize> {
    if code.dimension() == 0 {
        return Err(Error::ZeroCode);
    }
    let step = if code.is_even() { 2 } else { 1 };
    let mut w = floor.max(step);
    loop {
        let pd = bounded_distribution(code, w)?;
        if let Some(d) = (1..=pd.cutoff()).find(|&i| pd.count(i) > 0) {
            return Ok(d);
        }
        if w >= code.length() {
            return Err(Error::ZeroCode);
        }
        w = (w + step).min(code.length());
    }
}

/// All nonzero codewords of weight at most `w_max` (systematic generator).
pub(crate) fn collect_bounded(code: &LinearCode, w_max: usize) -> Result<Vec<crate::gf2::BitVector>> {
    if !code.is_systematic() {
        return Err(Error::NotSystematic);
    }
    let n = code.length();
    let words = n.div_ceil(64);
    let mut out = Vec::new();
    match words {
        1 => {
            let rows: Vec<[u64; 1]> = pack_rows(code);
            let mut cw = [0u64; 1];
            dfs_bounded(&rows, &mut cw, 0, w_max, &mut |cw, w| {
                if w <= w_max {
                    out.push(bitvec_from_words(&cw[..], n));
                }
                true
            });
        }
        2 => {
            let rows: Vec<[u64; 2]> = pack_rows(code);
            let mut cw = [0u64; 2];
            dfs_bounded(&rows, &mut cw, 0, w_max, &mut |cw, w| {
                if w <= w_max {
                    out.push(bitvec_from_words(&cw[..], n));
                }
                true
            });
        }
        _ => {
            return Err(Error::BudgetExceeded("code too wide for word collection".into()));
        }
    }
    Ok(out)
}

fn bitvec_from_words(words: &[u64], len: usize) -> crate::gf2::BitVector {
    let mut v = crate::gf2::BitVector::zeros(len);
    for i in 0..len {
        if (words[i / 64] >> (i % 64)) & 1 == 1 {
            v.set(i, true);
        }
    }
    v
}

fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut c = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        c[i][0] = BigInt::one();
        for j in 1..=i {
            c[i][j] = &c[i - 1][j - 1] + &c[i - 1][j];
        }
    }
    c
}

/// Dual distribution via the MacWilliams identity
/// A'_j = 2^{-k} * sum_i A_i K_j(i), with the Krawtchouk kernel
/// K_j(i) = sum_t (-1)^t C(i,t) C(n-i, j-t).
pub fn macwilliams_transform(
    wd: &WeightDistribution,
    k: usize,
) -> Result<WeightDistribution> {
    let n = wd.length();
    let c = binomial_table(n);
    let two_k = BigInt::one() << k;
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut sum = BigInt::zero();
        for i in 0..=n {
            if wd.count(i) == 0 {
                continue;
            }
            let ai = BigInt::from(wd.count(i));
            let mut kraw = BigInt::zero();
            for t in 0..=j.min(i) {
                if j - t > n - i {
                    continue;
                }
                let term = &c[i][t] * &c[n - i][j - t];
                if t % 2 == 0 {
                    kraw += term;
                } else {
                    kraw -= term;
                }
            }
            sum += ai * kraw;
        }
        let (q, r) = num::Integer::div_rem(&sum, &two_k);
        if !r.is_zero() {
            return Err(Error::NonIntegral(format!(
                "MacWilliams transform produced a non-integral count at weight {j}"
            )));
        }
        if q.sign() == Sign::Minus {
            return Err(Error::NegativeCoefficient { weight: j });
        }
        let q: BigUint = q.try_into().expect("nonnegative");
        let count: u128 = u128::try_from(&q).map_err(|_| {
            Error::NonIntegral(format!("dual count at weight {j} exceeds u128"))
        })?;
        out.push(count);
    }
    Ok(WeightDistribution::new(n, out))
}

/// True iff the code's distribution is a fixed point of the MacWilliams
/// transform. Only defined for rate-1/2 codes.
pub fn is_formally_self_dual(code: &LinearCode) -> Result<bool> {
    if code.length() != 2 * code.dimension() {
        return Err(Error::InvalidArgument(format!(
            "formal self-duality needs n = 2k, got [{}, {}]",
            code.length(),
            code.dimension()
        )));
    }
    let wd = full_distribution(code)?;
    let dual = macwilliams_transform(&wd, code.dimension())?;
    Ok(dual == wd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::{build_pure, DccSpec};
    use crate::gf2::{BitMatrix, BitVector};

    fn pure(row: &str) -> LinearCode {
        build_pure(&DccSpec::pure(row.parse().unwrap()).unwrap()).unwrap()
    }

    fn identity_pair(n: usize) -> LinearCode {
        LinearCode::new(BitMatrix::identity(n).hstack(&BitMatrix::identity(n))).unwrap()
    }

    // Independent oracle: weight counts by encoding every message directly.
    fn brute_force(code: &LinearCode) -> WeightDistribution {
        let mut counts = vec![0u128; code.length() + 1];
        for m in 0u64..(1 << code.dimension()) {
            let msg = BitVector::from_u64(m, code.dimension());
            counts[code.encode(&msg).unwrap().weight()] += 1;
        }
        WeightDistribution::new(code.length(), counts)
    }

    #[test]
    fn identity_pair_distribution_is_binomial() {
        let n = 7;
        let wd = full_distribution(&identity_pair(n)).unwrap();
        let mut binom = vec![1u128];
        for j in 1..=n {
            binom.push(binom[j - 1] * (n - j + 1) as u128 / j as u128);
        }
        for j in 0..=n {
            assert_eq!(wd.count(2 * j), binom[j]);
            if 2 * j + 1 <= 2 * n {
                assert_eq!(wd.count(2 * j + 1), 0);
            }
        }
    }

    #[test]
    fn full_matches_brute_force_on_small_codes() {
        for row in ["1110", "10101", "1100111", "110010110", "10101011"] {
            let code = pure(row);
            assert_eq!(full_distribution(&code).unwrap(), brute_force(&code));
        }
    }

    #[test]
    fn p32_1_table_triple() {
        let wd = full_distribution(&pure("1100101100110101")).unwrap();
        assert_eq!(wd.triple(8), (348, 2176, 6272));
        assert_eq!(wd.min_weight(), Some(8));
        assert_eq!(wd.total(), 1 << 16);
        assert!(wd.is_even());
    }

    #[test]
    fn bounded_agrees_with_full_truncation() {
        let code = pure("11001011001101011001"); // random-ish odd row, n = 20
        let full = full_distribution(&code).unwrap();
        let part = bounded_distribution(&code, 10).unwrap();
        for w in 0..=10 {
            assert_eq!(part.count(w), full.count(w), "mismatch at weight {w}");
        }
    }

    #[test]
    fn bounded_zero_cutoff() {
        let part = bounded_distribution(&identity_pair(5), 0).unwrap();
        assert_eq!(part.counts(), &[1]);
    }

    #[test]
    fn min_weight_examples() {
        assert_eq!(min_weight(&identity_pair(6)).unwrap(), 2);
        assert_eq!(min_weight(&pure("1100101100110101")).unwrap(), 8);
        let zero_dim = LinearCode::new(BitMatrix::zeros(0, 4)).unwrap();
        assert!(min_weight(&zero_dim).is_err());
    }

    #[test]
    fn has_word_below_probe() {
        let code = pure("1100101100110101");
        assert!(!has_word_below(&code, 8));
        assert!(has_word_below(&code, 9));
    }

    #[test]
    fn macwilliams_full_space_and_zero_code() {
        let full = LinearCode::new(BitMatrix::identity(5)).unwrap();
        let wd = full_distribution(&full).unwrap();
        let dual = macwilliams_transform(&wd, 5).unwrap();
        assert_eq!(dual.count(0), 1);
        assert_eq!(dual.total(), 1);
        let back = macwilliams_transform(&dual, 0).unwrap();
        assert_eq!(back, wd);
    }

    #[test]
    fn macwilliams_fixes_identity_pair() {
        let wd = full_distribution(&identity_pair(6)).unwrap();
        assert_eq!(macwilliams_transform(&wd, 6).unwrap(), wd);
    }

    #[test]
    fn macwilliams_matches_brute_force_dual() {
        let code = pure("1110");
        let wd = full_distribution(&code).unwrap();
        let dual_wd = brute_force(&code.dual());
        assert_eq!(macwilliams_transform(&wd, 4).unwrap(), dual_wd);
        // This particular code is formally self-dual.
        assert_eq!(dual_wd, wd);
    }

    #[test]
    fn formal_self_duality_examples() {
        assert!(is_formally_self_dual(&pure("1110")).unwrap());
        // {0000, 1100, 0011, 1111}
        let c1 = LinearCode::new(BitMatrix::from_rows(vec![
            "1100".parse().unwrap(),
            "0011".parse().unwrap(),
        ]))
        .unwrap();
        assert!(is_formally_self_dual(&c1).unwrap());
        // Span of 1000, 0111: weights (0,1,3,4) vs dual weights (0,2,2,2).
        let c2 = LinearCode::new(BitMatrix::from_rows(vec![
            "1000".parse().unwrap(),
            "0111".parse().unwrap(),
        ]))
        .unwrap();
        assert!(!is_formally_self_dual(&c2).unwrap());
    }

    #[test]
    fn even_codes_have_no_odd_counts() {
        for row in ["111", "10011", "1110101"] {
            let wd = full_distribution(&pure(row)).unwrap();
            assert!(wd.is_even());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let code = identity_pair(10);
        assert!(full_distribution_with_budget(&code, 8).is_err());
    }
}
