use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::RunError;

/// The sequence `c_1, c_2, …` of list positions drawn from `1..=r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DrawSequence {
    /// A fixed, finite sequence; running out of draws is an error.
    Explicit { values: Vec<usize>, r: usize },
    /// Uniform draws from a ChaCha8 stream seeded with `seed`.
    Seeded { seed: u64, r: usize },
}

impl DrawSequence {
    pub fn explicit(values: Vec<usize>, r: usize) -> Result<Self, RunError> {
        if r == 0 {
            return Err(RunError::EmptyRange);
        }
        if let Some(index) = values.iter().position(|&c| c == 0 || c > r) {
            return Err(RunError::DrawOutOfRange {
                index,
                value: values[index],
                r,
            });
        }
        Ok(DrawSequence::Explicit { values, r })
    }

    pub fn seeded(seed: u64, r: usize) -> Result<Self, RunError> {
        if r == 0 {
            return Err(RunError::EmptyRange);
        }
        Ok(DrawSequence::Seeded { seed, r })
    }

    /// The list size `R` the draws range over.
    pub fn range(&self) -> usize {
        match self {
            DrawSequence::Explicit { r, .. } | DrawSequence::Seeded { r, .. } => *r,
        }
    }

    pub(crate) fn stream(&self) -> Draws<'_> {
        match self {
            DrawSequence::Explicit { values, .. } => Draws::Explicit(values.iter()),
            DrawSequence::Seeded { seed, r } => {
                Draws::Seeded(Box::new(ChaCha8Rng::seed_from_u64(*seed)), *r)
            }
        }
    }

    /// The first `t` draws, or `None` if an explicit sequence is shorter.
    pub fn prefix(&self, t: usize) -> Option<Vec<usize>> {
        match self {
            DrawSequence::Explicit { values, .. } => values.get(..t).map(<[usize]>::to_vec),
            DrawSequence::Seeded { .. } => Some(self.stream().take(t).collect()),
        }
    }
}

pub(crate) enum Draws<'a> {
    Explicit(std::slice::Iter<'a, usize>),
    Seeded(Box<ChaCha8Rng>, usize),
}

impl Iterator for Draws<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            Draws::Explicit(it) => it.next().copied(),
            Draws::Seeded(rng, r) => Some(rng.random_range(1..=*r)),
        }
    }
}
