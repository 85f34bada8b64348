use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Colors are plain nonnegative integers.
pub type Color = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ListError {
    #[error("vertex {vertex} has an empty list")]
    Empty { vertex: usize },
    #[error("vertex {vertex} lists color {color} twice")]
    RepeatedColor { vertex: usize, color: Color },
    #[error("list of vertex {vertex} has {len} colors, at least {needed} required")]
    TooShort {
        vertex: usize,
        len: usize,
        needed: usize,
    },
    #[error("{found} lists given for {expected} vertices")]
    WrongCount { expected: usize, found: usize },
}

/// A partial map from vertices to colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
}

impl PartialColoring {
    /// The empty coloring on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            colors: vec![None; n],
        }
    }

    pub fn from_complete(colors: &[Color]) -> Self {
        Self {
            colors: colors.iter().copied().map(Some).collect(),
        }
    }

    pub fn from_options(colors: Vec<Option<Color>>) -> Self {
        Self { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.colors[v].is_some()
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.colors[v] = Some(c);
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// First uncolored vertex, if any.
    pub fn first_uncolored(&self) -> Option<usize> {
        self.colors.iter().position(Option::is_none)
    }

    pub fn to_complete(&self) -> Option<Vec<Color>> {
        self.colors.iter().copied().collect()
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }
}

/// Per-vertex ordered lists of available colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self, ListError> {
        for (v, list) in lists.iter().enumerate() {
            if list.is_empty() {
                return Err(ListError::Empty { vertex: v });
            }
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(ListError::RepeatedColor {
                    vertex: v,
                    color: w[0],
                });
            }
        }
        Ok(Self { lists })
    }

    /// Every vertex gets the list `1, 2, ..., r`.
    pub fn uniform(n: usize, r: usize) -> Self {
        let list: Vec<Color> = (1..=r as Color).collect();
        Self {
            lists: vec![list; n],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn min_len(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Keeps the first `r` colors of every list.
    pub fn truncated(&self, r: usize) -> Result<Self, ListError> {
        let mut lists = Vec::with_capacity(self.lists.len());
        for (v, list) in self.lists.iter().enumerate() {
            if list.len() < r {
                return Err(ListError::TooShort {
                    vertex: v,
                    len: list.len(),
                    needed: r,
                });
            }
            lists.push(list[..r].to_vec());
        }
        Ok(Self { lists })
    }

    /// 0-based position of `c` in the list of `v`.
    pub fn position(&self, v: usize, c: Color) -> Option<usize> {
        self.lists[v].iter().position(|&x| x == c)
    }

    /// Number of complete list-respecting colorings, saturating.
    pub fn product_size(&self) -> u128 {
        self.lists
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.len() as u128))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_keeps_prefix() {
        let lists = ListAssignment::new(vec![vec![5, 3, 9], vec![1, 2]]).unwrap();
        let t = lists.truncated(2).unwrap();
        assert_eq!(t.list(0), &[5, 3]);
        assert_eq!(
            lists.truncated(3),
            Err(ListError::TooShort {
                vertex: 1,
                len: 2,
                needed: 3
            })
        );
    }

    #[test]
    fn rejects_bad_lists() {
        assert_eq!(
            ListAssignment::new(vec![vec![]]),
            Err(ListError::Empty { vertex: 0 })
        );
        assert_eq!(
            ListAssignment::new(vec![vec![1, 4, 1]]),
            Err(ListError::RepeatedColor {
                vertex: 0,
                color: 1
            })
        );
    }

    #[test]
    fn partial_coloring_basics() {
        let mut phi = PartialColoring::empty(3);
        assert_eq!(phi.first_uncolored(), Some(0));
        phi.set(0, 7);
        phi.set(2, 1);
        assert_eq!(phi.first_uncolored(), Some(1));
        assert_eq!(phi.colored_count(), 2);
        assert!(phi.to_complete().is_none());
        phi.set(1, 7);
        assert_eq!(phi.to_complete(), Some(vec![7, 7, 1]));
    }
}
