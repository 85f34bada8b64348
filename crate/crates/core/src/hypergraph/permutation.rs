use std::collections::HashSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("permutation {index} is not a permutation of 1..{k}")]
    NotAPermutation { index: usize, k: usize },
    #[error("permutation {index} occurs twice")]
    Duplicate { index: usize },
    #[error("inverse of permutation {index} is missing from the family")]
    NotClosed { index: usize },
    #[error("family is empty")]
    Empty,
}

/// A family `Π` of permutations of the `k` positions of an edge, closed
/// under inverses.
///
/// A permutation `σ` is stored as its 0-based image vector and acts on an
/// edge sequence `P` by `σ(P)[j] = P[σ[j]]`. Because the family is closed
/// under inverses the choice between this convention and its inverse does
/// not change which pairs are compatible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationFamily {
    k: usize,
    perms: Vec<Vec<usize>>,
}

impl PermutationFamily {
    pub fn new(k: usize, perms: Vec<Vec<usize>>) -> Result<Self, PermutationError> {
        if perms.is_empty() {
            return Err(PermutationError::Empty);
        }
        for (index, p) in perms.iter().enumerate() {
            let mut seen = vec![false; k];
            let valid = p.len() == k
                && p.iter()
                    .all(|&x| x < k && !std::mem::replace(&mut seen[x], true));
            if !valid {
                return Err(PermutationError::NotAPermutation { index, k });
            }
        }
        let mut distinct = HashSet::new();
        for (index, p) in perms.iter().enumerate() {
            if !distinct.insert(p.clone()) {
                return Err(PermutationError::Duplicate { index });
            }
        }
        for (index, p) in perms.iter().enumerate() {
            if !distinct.contains(&inverse(p)) {
                return Err(PermutationError::NotClosed { index });
            }
        }
        Ok(Self { k, perms })
    }

    /// `{id}`.
    pub fn identity(k: usize) -> Self {
        Self {
            k,
            perms: vec![(0..k).collect()],
        }
    }

    /// `{id, reversal}`, the two directions along a line.
    pub fn identity_and_reversal(k: usize) -> Self {
        let id: Vec<usize> = (0..k).collect();
        let rev: Vec<usize> = (0..k).rev().collect();
        if id == rev {
            return Self { k, perms: vec![id] };
        }
        Self {
            k,
            perms: vec![id, rev],
        }
    }

    /// All `k` rotations, for cyclic sequences.
    pub fn rotations(k: usize) -> Self {
        let perms = (0..k)
            .map(|s| (0..k).map(|j| (j + s) % k).collect())
            .collect();
        Self { k, perms }
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    /// `π = |Π|`.
    pub fn size(&self) -> usize {
        self.perms.len()
    }

    pub fn get(&self, index: usize) -> &[usize] {
        &self.perms[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.perms.iter().map(Vec::as_slice)
    }
}

fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_enforced() {
        // A 3-cycle without its inverse.
        let err = PermutationFamily::new(3, vec![vec![0, 1, 2], vec![1, 2, 0]]).unwrap_err();
        assert_eq!(err, PermutationError::NotClosed { index: 1 });
        let ok = PermutationFamily::new(3, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(ok.unwrap().size(), 3);
    }

    #[test]
    fn rejects_non_permutations_and_duplicates() {
        assert!(matches!(
            PermutationFamily::new(3, vec![vec![0, 0, 2]]),
            Err(PermutationError::NotAPermutation { .. })
        ));
        assert_eq!(
            PermutationFamily::new(2, vec![vec![0, 1], vec![0, 1]]),
            Err(PermutationError::Duplicate { index: 1 })
        );
    }

    #[test]
    fn standard_families_are_closed() {
        for k in 1..7 {
            for fam in [
                PermutationFamily::identity(k),
                PermutationFamily::identity_and_reversal(k),
                PermutationFamily::rotations(k),
            ] {
                let perms: Vec<Vec<usize>> = fam.iter().map(<[usize]>::to_vec).collect();
                assert!(PermutationFamily::new(k, perms).is_ok());
            }
        }
    }
}
