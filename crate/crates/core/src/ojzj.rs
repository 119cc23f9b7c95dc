//! The many-objective OneJumpZeroJump benchmark `m`-OJZJ_k.
//!
//! The genome splits into `m/2` contiguous blocks of length `2n/m`. Each
//! block carries one bi-objective OneJumpZeroJump with gap size `k`: the
//! odd objective of a pair rewards ones, the even one rewards zeros, and a
//! fitness valley of width `k` separates the middle plateau from each
//! boundary. All objective arithmetic is exact (integers); dominance
//! comparisons must never see rounding.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;

use crate::dominance::weakly_dominates;
use crate::error::Error;
use crate::genome::{ones_in, Genome};

/// Largest `n` for which full enumeration of `2^n` genomes is allowed.
pub const BRUTE_FORCE_MAX_N: usize = 24;

/// Validated benchmark parameters plus derived constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OjzjInstance {
    n: usize,
    m: usize,
    k: usize,
    block_len: usize,
    f_max: u32,
}

/// Objective vector: `m` non-negative integers, maximization convention.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectiveVector(pub Vec<u32>);

/// Per-block classification of a Pareto-front vector: `-1` for the
/// all-zeros boundary, `+1` for the all-ones boundary, `0` for the middle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RVector(pub Vec<i8>);

impl ObjectiveVector {
    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl Deref for ObjectiveVector {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl AsRef<[u32]> for ObjectiveVector {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Debug for ObjectiveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v:+}")?;
        }
        write!(f, ")")
    }
}

impl OjzjInstance {
    /// Validates `(n, m, k)`: `m` even and at least 2, `n` divisible by
    /// `m/2`, and `2 <= k <= 2n/m`.
    pub fn new(n: usize, m: usize, k: usize) -> Result<Self, Error> {
        if m < 2 || m % 2 != 0 {
            return Err(Error::InvalidInstance(format!("m must be even and >= 2, got m={m}")));
        }
        if n == 0 || n % (m / 2) != 0 {
            return Err(Error::InvalidInstance(format!(
                "n must be positive and divisible by m/2, got n={n}, m/2={}",
                m / 2
            )));
        }
        let block_len = 2 * n / m;
        if k < 2 || k > block_len {
            return Err(Error::InvalidInstance(format!(
                "k must satisfy 2 <= k <= 2n/m, got k={k}, 2n/m={block_len}"
            )));
        }
        Ok(OjzjInstance { n, m, k, block_len, f_max: (k + block_len) as u32 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Block length `2n/m`.
    pub fn block_len(&self) -> usize {
        self.block_len
    }

    /// Number of blocks `m/2`.
    pub fn blocks(&self) -> usize {
        self.m / 2
    }

    /// Maximum objective value `k + 2n/m`.
    pub fn f_max(&self) -> u32 {
        self.f_max
    }

    /// Objective pair of a single block as a function of its ones count.
    /// With `o` ones and `z = block_len - o` zeros:
    /// the odd objective is `k + o` if `o <= block_len - k` or `o == block_len`,
    /// else `block_len - o`; the even objective is the same with `z` in
    /// place of `o`.
    pub fn block_objectives(&self, ones_in_block: usize) -> (u32, u32) {
        let len = self.block_len;
        assert!(ones_in_block <= len, "block ones count {ones_in_block} exceeds block length {len}");
        let o = ones_in_block;
        let z = len - o;
        let k = self.k;
        let f_odd = if o <= len - k || o == len { (k + o) as u32 } else { (len - o) as u32 };
        let f_even = if z <= len - k || z == len { (k + z) as u32 } else { (len - z) as u32 };
        (f_odd, f_even)
    }

    /// Full objective vector: pair `(2j-1, 2j)` reads block `j` only.
    pub fn evaluate(&self, x: &Genome) -> ObjectiveVector {
        assert_eq!(x.len(), self.n, "genome length {} does not match instance n={}", x.len(), self.n);
        let mut values = Vec::with_capacity(self.m);
        for j in 1..=self.blocks() {
            let ones = ones_in(x.block(j, self.block_len));
            let (f_odd, f_even) = self.block_objectives(ones);
            values.push(f_odd);
            values.push(f_even);
        }
        ObjectiveVector(values)
    }

    /// Classification of a Pareto-front vector: entry `j` is `-1` if
    /// `v_{2j-1} = k`, `+1` if `v_{2j-1} = 2n/m + k`, `0` if
    /// `2k <= v_{2j-1} <= 2n/m`. Panics if `v` is not on the front.
    pub fn r_vector(&self, v: &ObjectiveVector) -> RVector {
        assert_eq!(v.dim(), self.m, "objective dimension {} does not match m={}", v.dim(), self.m);
        let k = self.k as u32;
        let len = self.block_len as u32;
        let entries = (0..self.blocks())
            .map(|j| {
                let odd = v[2 * j];
                if odd == k {
                    -1
                } else if odd == len + k {
                    1
                } else if (2 * k..=len).contains(&odd) {
                    0
                } else {
                    panic!("objective vector {v:?} is not on the Pareto front (coordinate {odd})");
                }
            })
            .collect();
        RVector(entries)
    }

    /// Closed-form Pareto front: every combination over blocks of the pair
    /// `(l, 2k + 2n/m - l)` with `l` in `{k} ∪ {2k, ..., 2n/m} ∪ {2n/m + k}`.
    /// Sorted lexicographically. Only valid for `k <= n/m`, where the front
    /// has cardinality `(2n/m - 2k + 3)^{m/2}`; larger `k` is refused.
    pub fn pareto_front(&self) -> Result<Vec<ObjectiveVector>, Error> {
        if self.k > self.n / self.m {
            return Err(Error::FrontRegime { n: self.n, m: self.m, k: self.k });
        }
        let k = self.k as u32;
        let len = self.block_len as u32;
        let mut levels: Vec<u32> = Vec::with_capacity((len - 2 * k + 3) as usize);
        levels.push(k);
        levels.extend(2 * k..=len);
        levels.push(len + k);

        let mut front = vec![Vec::with_capacity(self.m)];
        for _ in 0..self.blocks() {
            let mut next = Vec::with_capacity(front.len() * levels.len());
            for prefix in &front {
                for &l in &levels {
                    let mut v = prefix.clone();
                    v.push(l);
                    v.push(2 * k + len - l);
                    next.push(v);
                }
            }
            front = next;
        }
        let mut front: Vec<ObjectiveVector> = front.into_iter().map(ObjectiveVector).collect();
        front.sort();
        Ok(front)
    }

    /// Independent oracle: enumerates all `2^n` genomes, evaluates each, and
    /// keeps the objective vectors not dominated by any other. Refuses
    /// `n > 24`. Sorted lexicographically.
    pub fn brute_force_front(&self) -> Result<Vec<ObjectiveVector>, Error> {
        if self.n > BRUTE_FORCE_MAX_N {
            return Err(Error::BruteForceTooLarge { n: self.n, max: BRUTE_FORCE_MAX_N });
        }
        let mut seen: HashSet<ObjectiveVector> = HashSet::new();
        for mask in 0u64..(1u64 << self.n) {
            let bits = (0..self.n).map(|i| ((mask >> i) & 1) as u8).collect();
            seen.insert(self.evaluate(&Genome::from_bits(bits)));
        }
        let all: Vec<ObjectiveVector> = seen.into_iter().collect();
        let mut front: Vec<ObjectiveVector> = all
            .iter()
            .filter(|v| !all.iter().any(|u| weakly_dominates(u, v) && u != *v))
            .cloned()
            .collect();
        front.sort();
        Ok(front)
    }

    /// `Some(r_vector)` if the genome is Pareto-optimal (each block all
    /// zeros, all ones, or with `k <= ones <= 2n/m - k`), else `None`.
    pub fn genome_class(&self, x: &Genome) -> Option<RVector> {
        assert_eq!(x.len(), self.n, "genome length {} does not match instance n={}", x.len(), self.n);
        let mut entries = Vec::with_capacity(self.blocks());
        for j in 1..=self.blocks() {
            let ones = ones_in(x.block(j, self.block_len));
            if ones == 0 {
                entries.push(-1);
            } else if ones == self.block_len {
                entries.push(1);
            } else if ones >= self.k && ones <= self.block_len - self.k {
                entries.push(0);
            } else {
                return None;
            }
        }
        Some(RVector(entries))
    }
}
