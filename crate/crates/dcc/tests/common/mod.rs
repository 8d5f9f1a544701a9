//! Shared helpers for the integration suites: independent oracles that
//! must not reuse the library's enumeration or transform paths.

use dcc::circulant::{DccSpec, Family, FirstRow};
use dcc::gf2::{BitVector, LinearCode};
use dcc::wdist::WeightDistribution;

/// Weight counts by encoding every message directly, one matrix-vector
/// product per message.
pub fn brute_force_distribution(code: &LinearCode) -> WeightDistribution {
    assert!(code.dimension() <= 22, "oracle only for small codes");
    let mut counts = vec![0u128; code.length() + 1];
    for m in 0u64..(1 << code.dimension()) {
        let msg = BitVector::from_u64(m, code.dimension());
        counts[code.encode(&msg).unwrap().weight()] += 1;
    }
    WeightDistribution::new(code.length(), counts)
}

pub fn build(family: Family, row: &str) -> LinearCode {
    let row: FirstRow = row.parse().unwrap();
    let spec = match family {
        Family::Pure => DccSpec::pure(row).unwrap(),
        Family::Bordered => DccSpec::bordered(row).unwrap(),
    };
    spec.build().unwrap()
}

/// Deterministic congruential generator, good enough for drawing random
/// rows and permutations without extra dependencies.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn shuffle(&mut self, v: &mut [usize]) {
        for i in (1..v.len()).rev() {
            let j = self.below(i + 1);
            v.swap(i, j);
        }
    }
}

/// Random first row of the given length and weight parity.
pub fn random_row(rng: &mut Lcg, len: usize, odd: bool) -> String {
    loop {
        let v = rng.next_u64() & ((1u64 << len) - 1);
        if (v.count_ones() % 2 == 1) == odd && v != 0 {
            return (0..len)
                .map(|i| if (v >> i) & 1 == 1 { '1' } else { '0' })
                .collect();
        }
    }
}
