//! Exhaustive classification of optimal double circulant even codes that
//! are not self-dual.
//!
//! Candidates are first rows with the Lemma-1 parity, one representative
//! per cyclic-shift class. The search keeps, per family, the codes with
//! the largest minimum weight and, among those, the lexicographically
//! smallest full weight distribution; survivors are reduced to
//! permutation-equivalence classes through a canonical form built from the
//! low-weight codeword incidence structure.

use std::cmp::Ordering;
use std::collections::HashMap;

use rayon::prelude::*;

use crate::circulant::{cyclic_canonical, DccSpec, Family, FirstRow};
use crate::gf2::{BitMatrix, BitVector, LinearCode};
use crate::wdist::{self, full_distribution, WeightDistribution};
use crate::{Error, Result};

/// Parameters of one classification run.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Half length; the codes have length 2n.
    pub n: usize,
    pub family: Family,
    /// Worker threads; 0 uses the ambient rayon pool.
    pub worker_count: usize,
    /// Largest half length admitted without the extended flag.
    pub max_half_length: usize,
}

impl SearchConfig {
    pub fn new(n: usize, family: Family) -> Self {
        SearchConfig { n, family, worker_count: 0, max_half_length: 20 }
    }
}

/// Outcome of a classification run for one (length, family) pair.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub n2: usize,
    pub family: Family,
    /// Largest minimum weight among non-self-dual even candidates.
    pub d: usize,
    /// (A_d, A_{d+2}, A_{d+4}) of the smallest distribution.
    pub triple: (u128, u128, u128),
    /// Number of inequivalent codes attaining both optima.
    pub count: usize,
    /// Cyclically canonical first rows, one per equivalence class.
    pub representatives: Vec<FirstRow>,
    pub distribution: WeightDistribution,
}

impl ClassificationReport {
    pub fn summary(&self) -> crate::perf::FamilySummary {
        crate::perf::FamilySummary { d: self.d, a_d: self.triple.0 }
    }
}

#[inline]
fn rotate_right_u64(v: u64, len: usize) -> u64 {
    let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
    ((v << 1) | (v >> (len - 1))) & mask
}

// String order on LSB-first packed rows: the lowest differing bit is the
// leftmost differing character.
#[inline]
fn string_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let bit = (a ^ b).trailing_zeros();
    (a >> bit) & 1 == 0
}

fn is_necklace_rep(v: u64, len: usize) -> bool {
    let mut cur = v;
    for _ in 1..len {
        cur = rotate_right_u64(cur, len);
        if string_less(cur, v) {
            return false;
        }
    }
    true
}

/// One first row per cyclic-shift class with the Lemma-1 parity, in
/// deterministic ascending order.
pub fn enumerate_candidates(config: &SearchConfig) -> Result<Vec<FirstRow>> {
    let len = match config.family {
        Family::Pure => config.n,
        Family::Bordered => config.n.checked_sub(1).filter(|&l| l > 0).ok_or_else(|| {
            Error::InvalidArgument("bordered search needs n >= 2".into())
        })?,
    };
    if len >= 48 {
        return Err(Error::BudgetExceeded(format!(
            "candidate space 2^{len} is beyond enumeration"
        )));
    }
    let want_odd = config.family == Family::Pure;
    let mut out = Vec::new();
    for v in 0..(1u64 << len) {
        if (v.count_ones() % 2 == 1) == want_odd && is_necklace_rep(v, len) {
            out.push(FirstRow(BitVector::from_u64(v, len)));
        }
    }
    Ok(out)
}

fn build(config: &SearchConfig, row: &FirstRow) -> Result<LinearCode> {
    let spec = match config.family {
        Family::Pure => DccSpec::pure(row.clone())?,
        Family::Bordered => DccSpec::bordered(row.clone())?,
    };
    spec.build()
}

#[derive(Clone)]
struct SearchState {
    d: usize,
    dist: Option<WeightDistribution>,
    rows: Vec<FirstRow>,
}

impl SearchState {
    fn empty() -> Self {
        SearchState { d: 0, dist: None, rows: Vec::new() }
    }

    fn merge(mut self, other: SearchState) -> SearchState {
        match self.d.cmp(&other.d) {
            Ordering::Less => other,
            Ordering::Greater => self,
            Ordering::Equal => match (&self.dist, &other.dist) {
                (None, _) => other,
                (_, None) => self,
                (Some(a), Some(b)) => {
                    let cmp = a.counts().cmp(b.counts());
                    match cmp {
                        Ordering::Less => self,
                        Ordering::Greater => other,
                        Ordering::Equal => {
                            self.rows.extend(other.rows);
                            self
                        }
                    }
                }
            },
        }
    }

    fn offer(&mut self, d: usize, dist: WeightDistribution, row: FirstRow) {
        let candidate = SearchState { d, dist: Some(dist), rows: vec![row] };
        let merged = std::mem::replace(self, SearchState::empty()).merge(candidate);
        *self = merged;
    }
}

/// Exhaustive search for the codes satisfying (C1)-(C3): even, not
/// self-dual, largest minimum weight, lexicographically smallest weight
/// distribution; survivors reduced to equivalence classes.
pub fn search_optimal(config: &SearchConfig) -> Result<ClassificationReport> {
    if config.n > config.max_half_length {
        return Err(Error::BudgetExceeded(format!(
            "half length {} exceeds the classification budget {}; raise it explicitly",
            config.n, config.max_half_length
        )));
    }
    let run = || search_optimal_inner(config);
    if config.worker_count > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.worker_count)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
        pool.install(run)
    } else {
        run()
    }
}

fn search_optimal_inner(config: &SearchConfig) -> Result<ClassificationReport> {
    let candidates = enumerate_candidates(config)?;
    let state = candidates
        .par_chunks(256)
        .map(|chunk| {
            let mut local = SearchState::empty();
            for row in chunk {
                let Ok(code) = build(config, row) else { continue };
                if code.is_self_dual() {
                    continue;
                }
                if local.d > 2 && wdist::has_word_below(&code, local.d) {
                    continue;
                }
                let Ok(d) = wdist::min_weight_at_least(&code, local.d) else { continue };
                if d < local.d {
                    continue;
                }
                let Ok(dist) = full_distribution(&code) else { continue };
                local.offer(d, dist, row.clone());
            }
            local
        })
        .reduce(SearchState::empty, SearchState::merge);

    let Some(dist) = state.dist else {
        return Err(Error::Infeasible(format!(
            "no {} double circulant even code of length {} avoids self-duality",
            config.family,
            2 * config.n
        )));
    };
    // Equivalence reduction on the survivor set.
    let mut rows = state.rows;
    rows.sort_by(|a, b| a.bits().string_cmp(b.bits()));
    let mut classes: Vec<(Vec<u8>, FirstRow)> = Vec::new();
    for row in rows {
        let code = build(config, &row)?;
        let form = canonical_form(&code)?;
        if !classes.iter().any(|(f, _)| f == &form) {
            classes.push((form, row));
        }
    }
    let representatives: Vec<FirstRow> = classes.into_iter().map(|(_, r)| r).collect();
    Ok(ClassificationReport {
        n2: 2 * config.n,
        family: config.family,
        d: state.d,
        triple: dist.triple(state.d),
        count: representatives.len(),
        representatives,
        distribution: dist,
    })
}

const CANON_NODE_BUDGET: u64 = 1_000_000;

/// Permutation-invariant canonical byte string: two codes have equal forms
/// iff some coordinate permutation maps one codeword set onto the other.
///
/// The form is the minimum, over column orderings compatible with iterated
/// partition refinement, of the sorted list of low-weight codewords; the
/// collected words span the code, so equality of forms carries the
/// permutation from the low-weight words to the whole code.
pub fn canonical_form(code: &LinearCode) -> Result<Vec<u8>> {
    let n = code.length();
    let k = code.dimension();
    if k == 0 {
        return Ok(serialize_header(n, k, 0));
    }
    let d = wdist::min_weight(code)?;
    let mut cutoff = (d + 4).min(n);
    let words = loop {
        let words = collect_words(code, cutoff)?;
        let rank = BitMatrix::from_rows(words.clone()).rank();
        if rank == k || cutoff == n {
            break words;
        }
        cutoff = (cutoff + 2).min(n);
    };
    let mut canon = Canonizer::new(n, &words);
    let colors = vec![0u32; n];
    let (leaf, _) = canon.explore(colors)?;
    let mut out = serialize_header(n, k, words.len());
    out.extend(leaf);
    Ok(out)
}

fn serialize_header(n: usize, k: usize, words: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(12);
    out.extend((n as u32).to_be_bytes());
    out.extend((k as u32).to_be_bytes());
    out.extend((words as u32).to_be_bytes());
    out
}

fn collect_words(code: &LinearCode, cutoff: usize) -> Result<Vec<BitVector>> {
    if code.is_systematic() {
        wdist::collect_bounded(code, cutoff)
    } else if code.dimension() <= 22 {
        Ok(code
            .all_codewords()
            .into_iter()
            .filter(|w| {
                let wt = w.weight();
                wt > 0 && wt <= cutoff
            })
            .collect())
    } else {
        Err(Error::BudgetExceeded(
            "canonical form needs a systematic generator or small dimension".into(),
        ))
    }
}

#[inline]
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

struct Canonizer {
    n: usize,
    weights: Vec<u32>,
    supports: Vec<Vec<u16>>,
    incidence: Vec<Vec<u32>>, // per column: word indices
    nodes: u64,
    // Word-set automorphisms discovered from equal sibling leaves. They
    // are global facts about the code and prune orbit-equivalent branches
    // wherever they preserve the node coloring.
    automorphisms: Vec<Vec<usize>>,
}

impl Canonizer {
    fn new(n: usize, words: &[BitVector]) -> Self {
        let mut supports = Vec::with_capacity(words.len());
        let mut incidence = vec![Vec::new(); n];
        let mut weights = Vec::with_capacity(words.len());
        for (i, w) in words.iter().enumerate() {
            let sup: Vec<u16> = w.iter_ones().map(|c| c as u16).collect();
            weights.push(sup.len() as u32);
            for &c in &sup {
                incidence[c as usize].push(i as u32);
            }
            supports.push(sup);
        }
        Canonizer { n, weights, supports, incidence, nodes: 0, automorphisms: Vec::new() }
    }

    // Iterated refinement: words hashed by weight plus the multiset of
    // their columns' colors, then columns by their previous color plus the
    // multiset of incident word hashes. Ranks of sorted hashes become the
    // new colors, so the ordered partition is invariant under coordinate
    // permutation. Hash collisions only weaken the refinement, never its
    // invariance.
    fn refine(&self, colors: &mut Vec<u32>) {
        loop {
            let mut word_hash: Vec<u64> = Vec::with_capacity(self.supports.len());
            for (i, sup) in self.supports.iter().enumerate() {
                let mut h = splitmix64(0x5eed ^ u64::from(self.weights[i]));
                for &c in sup {
                    h = h.wrapping_add(splitmix64(u64::from(colors[c as usize])));
                }
                word_hash.push(splitmix64(h));
            }
            let mut col_hash: Vec<u64> = Vec::with_capacity(self.n);
            for c in 0..self.n {
                let mut h = splitmix64(0xc01 ^ (u64::from(colors[c]) << 20));
                for &i in &self.incidence[c] {
                    h = h.wrapping_add(splitmix64(word_hash[i as usize]));
                }
                col_hash.push(h);
            }
            let mut sorted = col_hash.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let new_colors: Vec<u32> = col_hash
                .iter()
                .map(|h| sorted.binary_search(h).unwrap() as u32)
                .collect();
            let stable = new_colors == *colors;
            *colors = new_colors;
            if stable {
                return;
            }
        }
    }

    // Subtree minimum leaf: canonical bytes plus the column-to-position
    // map that realizes them.
    fn explore(&mut self, mut colors: Vec<u32>) -> Result<(Vec<u8>, Vec<usize>)> {
        self.nodes += 1;
        if self.nodes > CANON_NODE_BUDGET {
            return Err(Error::CanonBudget { nodes: self.nodes });
        }
        self.refine(&mut colors);
        let ncolors = colors.iter().max().map_or(0, |&m| m as usize + 1);
        if ncolors == self.n {
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            return Ok((self.leaf_bytes(&perm), perm));
        }
        // Smallest non-singleton cell, lowest color id on ties.
        let mut counts = vec![0u32; ncolors];
        for &c in colors.iter() {
            counts[c as usize] += 1;
        }
        let target = (0..ncolors)
            .filter(|&c| counts[c] >= 2)
            .min_by_key(|&c| (counts[c], c))
            .unwrap() as u32;

        let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
        let mut explored: Vec<usize> = Vec::new();
        let mut orbit_roots: Option<Vec<usize>> = None;
        let mut gens_seen = self.automorphisms.len();
        for col in 0..self.n {
            if colors[col] != target {
                continue;
            }
            // Skip columns orbit-equivalent to an explored one under the
            // color-preserving automorphisms known so far.
            if !explored.is_empty() {
                if orbit_roots.is_none() || gens_seen != self.automorphisms.len() {
                    orbit_roots = Some(self.color_preserving_orbits(&colors));
                    gens_seen = self.automorphisms.len();
                }
                let roots = orbit_roots.as_ref().unwrap();
                if explored.iter().any(|&done| roots[done] == roots[col]) {
                    continue;
                }
            }
            let mut child: Vec<u32> = colors.iter().map(|&c| c * 2).collect();
            for (i, c) in child.iter_mut().enumerate() {
                if i != col && *c == target * 2 {
                    *c += 1;
                }
            }
            let (bytes, perm) = self.explore(child)?;
            match &mut best {
                None => best = Some((bytes, perm)),
                Some((bb, bp)) => match bytes.cmp(bb) {
                    Ordering::Less => best = Some((bytes, perm)),
                    Ordering::Greater => {}
                    Ordering::Equal => {
                        // Equal minima reveal an automorphism.
                        let mut inv = vec![0usize; self.n];
                        for (c, &pos) in perm.iter().enumerate() {
                            inv[pos] = c;
                        }
                        let tau: Vec<usize> = bp.iter().map(|&pos| inv[pos]).collect();
                        if tau.iter().enumerate().any(|(i, &t)| i != t) {
                            self.automorphisms.push(tau);
                        }
                    }
                },
            }
            explored.push(col);
        }
        Ok(best.expect("non-empty cell"))
    }

    // Union-find orbits under the discovered automorphisms that preserve
    // the given coloring.
    fn color_preserving_orbits(&self, colors: &[u32]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for tau in &self.automorphisms {
            if (0..self.n).all(|c| colors[tau[c]] == colors[c]) {
                for c in 0..self.n {
                    let a = find(&mut parent, c);
                    let b = find(&mut parent, tau[c]);
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        (0..self.n).map(|c| find(&mut parent, c)).collect()
    }

    fn leaf_bytes(&self, perm: &[usize]) -> Vec<u8> {
        let bytes_per = self.n.div_ceil(8);
        let mut words: Vec<Vec<u8>> = self
            .supports
            .iter()
            .map(|sup| {
                let mut packed = vec![0u8; bytes_per];
                for &c in sup {
                    let pos = perm[c as usize];
                    packed[pos / 8] |= 1 << (7 - pos % 8);
                }
                packed
            })
            .collect();
        words.sort_unstable();
        words.concat()
    }
}

/// True iff some coordinate permutation maps one code onto the other.
pub fn is_equivalent(c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
    if c1.length() != c2.length() || c1.dimension() != c2.dimension() {
        return Ok(false);
    }
    // Distribution pre-filter: an equivalence invariant.
    let d1 = full_distribution(c1)?;
    let d2 = full_distribution(c2)?;
    if d1 != d2 {
        return Ok(false);
    }
    Ok(canonical_form(c1)? == canonical_form(c2)?)
}

/// Apply a coordinate permutation: column j of the result is column
/// perm[j] of the input.
pub fn permute_code(code: &LinearCode, perm: &[usize]) -> LinearCode {
    assert_eq!(perm.len(), code.length());
    let rows: Vec<BitVector> = code
        .generator()
        .row_slice()
        .iter()
        .map(|r| {
            let mut v = BitVector::zeros(code.length());
            for (j, &src) in perm.iter().enumerate() {
                if r.get(src) {
                    v.set(j, true);
                }
            }
            v
        })
        .collect();
    LinearCode::new(BitMatrix::from_rows(rows)).expect("permutation preserves rank")
}

/// Cyclic-shift-invariant deduplication key used by reporting.
pub fn canonical_row_key(row: &FirstRow) -> String {
    cyclic_canonical(row).to_string()
}

/// Group spot-check style rows by their full distribution, a cheap
/// pre-partition before pairwise equivalence testing.
pub fn group_by_distribution(
    codes: &[(String, LinearCode)],
) -> Result<HashMap<Vec<u128>, Vec<String>>> {
    let mut groups: HashMap<Vec<u128>, Vec<String>> = HashMap::new();
    for (name, code) in codes {
        let dist = full_distribution(code)?;
        groups.entry(dist.counts().to_vec()).or_default().push(name.clone());
    }
    Ok(groups)
}
