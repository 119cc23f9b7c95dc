//! Fixed-length bitstring genomes and the two variation operators:
//! standard bit mutation (each bit flips independently with probability
//! `1/n`) and uniform crossover (each position comes from either parent
//! with probability `1/2`).

use std::fmt;
use std::str::FromStr;

use crate::rng::RandomStream;

/// Immutable bit vector of fixed length. Only the length and the bit values
/// are observable; genomes compare equal iff they agree at every position.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Genome {
    bits: Vec<u8>,
}

impl Genome {
    /// Builds a genome from explicit bit values. Panics if any value is not
    /// 0 or 1 or the vector is empty.
    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(!bits.is_empty(), "genome length must be positive");
        assert!(bits.iter().all(|&b| b <= 1), "genome bits must be 0 or 1");
        Genome { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of one-bits.
    pub fn ones(&self) -> usize {
        ones_in(&self.bits)
    }

    /// Number of zero-bits.
    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    /// Hamming distance. Panics on length mismatch.
    pub fn hamming(&self, other: &Genome) -> usize {
        assert_eq!(self.len(), other.len(), "hamming distance needs equal lengths");
        self.bits.iter().zip(&other.bits).filter(|(a, b)| a != b).count()
    }

    /// Block `j` (1-based) of a genome partitioned into contiguous blocks of
    /// `block_len` bits: positions `(j-1)*block_len .. j*block_len`.
    /// Panics if the genome does not split evenly or `j` is out of range.
    pub fn block(&self, j: usize, block_len: usize) -> &[u8] {
        assert!(block_len > 0 && self.len() % block_len == 0, "genome length {} is not a multiple of block length {block_len}", self.len());
        let blocks = self.len() / block_len;
        assert!(j >= 1 && j <= blocks, "block index {j} out of range 1..={blocks}");
        &self.bits[(j - 1) * block_len..j * block_len]
    }

    /// Bitwise complement.
    pub fn complement(&self) -> Genome {
        Genome { bits: self.bits.iter().map(|b| 1 - b).collect() }
    }
}

/// Ones count of a bit slice (e.g. one block of a genome).
pub fn ones_in(bits: &[u8]) -> usize {
    bits.iter().map(|&b| b as usize).sum()
}

impl fmt::Debug for Genome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Genome {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err("genome string must be non-empty".into());
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(format!("invalid genome character {other:?}")),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        Ok(Genome { bits })
    }
}

/// Genome of length `n` with each bit independently 0 or 1 with
/// probability 1/2.
pub fn uniform_random_genome(rng: &mut RandomStream, n: usize) -> Genome {
    assert!(n >= 1, "genome length must be positive");
    Genome { bits: (0..n).map(|_| rng.coin() as u8).collect() }
}

/// Standard bit mutation: a fresh genome in which each bit of `parent` is
/// flipped independently with probability `1/n`.
pub fn standard_bit_mutation(parent: &Genome, rng: &mut RandomStream) -> Genome {
    let rate = 1.0 / parent.len() as f64;
    let bits = parent
        .bits
        .iter()
        .map(|&b| if rng.bernoulli(rate) { 1 - b } else { b })
        .collect();
    Genome { bits }
}

/// Uniform crossover: each output position takes `a`'s bit with probability
/// 1/2 and `b`'s bit otherwise. Panics on length mismatch.
pub fn uniform_crossover(a: &Genome, b: &Genome, rng: &mut RandomStream) -> Genome {
    assert_eq!(a.len(), b.len(), "uniform crossover needs equal lengths");
    let bits = a
        .bits
        .iter()
        .zip(&b.bits)
        .map(|(&x, &y)| if rng.coin() { x } else { y })
        .collect();
    Genome { bits }
}
