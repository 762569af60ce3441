//! The partition data model: a complete colouring of `[1, n]` by `k` colours.

use std::fmt;

use thiserror::Error;

/// Errors raised while assembling a [`Partition`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("colour count must be at least 1")]
    ZeroColours,
    #[error("expected {expected} subsets, got {found}")]
    SubsetCount { expected: usize, found: usize },
    #[error("integer {value} in colour {colour} is outside [1, {order}]")]
    OutOfRange {
        value: usize,
        colour: usize,
        order: usize,
    },
    #[error("integer {value} appears in colours {first} and {second}")]
    Overlap {
        value: usize,
        first: usize,
        second: usize,
    },
    #[error("integer {value} is not covered by any colour")]
    Gap { value: usize },
    #[error("colour {colour} is empty")]
    EmptySubset { colour: usize },
    #[error("colour {colour} is outside [1, {colours}]")]
    ColourOutOfRange { colour: usize, colours: usize },
}

/// A Schur-partition candidate: every integer of `[1, n]` carries exactly
/// one colour from `[1, k]`, and every colour is used.
///
/// Construction only checks the structural invariants. Whether the classes
/// are sum-free is the verifier's business.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    colours: usize,
    // index 0 is unused so that `assignment[x]` is the colour of x
    assignment: Vec<usize>,
}

/// The members of one colour class, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetView {
    pub colour: usize,
    pub members: Vec<usize>,
}

impl Partition {
    /// Builds a partition of `[1, n]` from its `k` colour classes, in colour
    /// order.
    pub fn from_subsets<S>(n: usize, k: usize, subsets: &[S]) -> Result<Self, PartitionError>
    where
        S: AsRef<[usize]>,
    {
        if n == 0 {
            return Err(PartitionError::ZeroOrder);
        }
        if k == 0 {
            return Err(PartitionError::ZeroColours);
        }
        if subsets.len() != k {
            return Err(PartitionError::SubsetCount {
                expected: k,
                found: subsets.len(),
            });
        }
        let mut assignment = vec![0usize; n + 1];
        for (idx, subset) in subsets.iter().enumerate() {
            let colour = idx + 1;
            let members = subset.as_ref();
            if members.is_empty() {
                return Err(PartitionError::EmptySubset { colour });
            }
            for &value in members {
                if value == 0 || value > n {
                    return Err(PartitionError::OutOfRange {
                        value,
                        colour,
                        order: n,
                    });
                }
                let slot = &mut assignment[value];
                if *slot != 0 {
                    return Err(PartitionError::Overlap {
                        value,
                        first: *slot,
                        second: colour,
                    });
                }
                *slot = colour;
            }
        }
        if let Some(value) = (1..=n).find(|&x| assignment[x] == 0) {
            return Err(PartitionError::Gap { value });
        }
        Ok(Self {
            colours: k,
            assignment,
        })
    }

    /// Builds a partition from a colour per integer: `colouring[i]` is the
    /// colour of `i + 1`.
    pub fn from_colouring(k: usize, colouring: &[usize]) -> Result<Self, PartitionError> {
        if colouring.is_empty() {
            return Err(PartitionError::ZeroOrder);
        }
        if k == 0 {
            return Err(PartitionError::ZeroColours);
        }
        let mut used = vec![false; k + 1];
        for (i, &c) in colouring.iter().enumerate() {
            if c == 0 {
                return Err(PartitionError::Gap { value: i + 1 });
            }
            if c > k {
                return Err(PartitionError::ColourOutOfRange {
                    colour: c,
                    colours: k,
                });
            }
            used[c] = true;
        }
        if let Some(colour) = (1..=k).find(|&c| !used[c]) {
            return Err(PartitionError::EmptySubset { colour });
        }
        let mut assignment = Vec::with_capacity(colouring.len() + 1);
        assignment.push(0);
        assignment.extend_from_slice(colouring);
        Ok(Self {
            colours: k,
            assignment,
        })
    }

    pub fn order(&self) -> usize {
        self.assignment.len() - 1
    }

    pub fn colour_count(&self) -> usize {
        self.colours
    }

    /// Colour of `x`, or `None` when `x` is outside `[1, n]`.
    pub fn colour_of(&self, x: usize) -> Option<usize> {
        if x == 0 {
            return None;
        }
        self.assignment.get(x).copied()
    }

    /// Colour per integer, starting at 1.
    pub fn colouring(&self) -> &[usize] {
        &self.assignment[1..]
    }

    pub fn subset_view(&self, colour: usize) -> Result<SubsetView, PartitionError> {
        if colour == 0 || colour > self.colours {
            return Err(PartitionError::ColourOutOfRange {
                colour,
                colours: self.colours,
            });
        }
        let members = (1..=self.order())
            .filter(|&x| self.assignment[x] == colour)
            .collect();
        Ok(SubsetView { colour, members })
    }

    /// All colour classes in colour order.
    pub fn subsets(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.colours];
        for x in 1..=self.order() {
            out[self.assignment[x] - 1].push(x);
        }
        out
    }

    /// True iff `x` and `n + 1 - x` share a colour for every `x`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.order();
        (1..=n / 2).all(|x| self.assignment[x] == self.assignment[n + 1 - x])
    }

    /// Positions `x <= n / 2` whose mirror `n + 1 - x` carries a different
    /// colour.
    pub fn asymmetric_positions(&self) -> Vec<usize> {
        let n = self.order();
        (1..=n / 2)
            .filter(|&x| self.assignment[x] != self.assignment[n + 1 - x])
            .collect()
    }

    /// Relabels colours so that they appear in order of first occurrence.
    pub fn canonical(&self) -> Partition {
        let mut relabel = vec![0usize; self.colours + 1];
        let mut next = 0;
        let assignment = self
            .assignment
            .iter()
            .map(|&c| {
                if c == 0 {
                    return 0;
                }
                if relabel[c] == 0 {
                    next += 1;
                    relabel[c] = next;
                }
                relabel[c]
            })
            .collect();
        Partition {
            colours: self.colours,
            assignment,
        }
    }

    pub fn profile(&self) -> Profile {
        let subsets = self.subsets();
        let n = self.order();
        Profile {
            order: n,
            colours: self.colours,
            sizes: subsets.iter().map(Vec::len).collect(),
            ranges: subsets.iter().map(|s| (s[0], s[s.len() - 1])).collect(),
            symmetric: self.is_symmetric(),
            order_mod_16: n % 16,
            successor_mod_3: (n + 1) % 3,
        }
    }
}

/// Summary statistics of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub order: usize,
    pub colours: usize,
    pub sizes: Vec<usize>,
    /// `(min, max)` of each colour class.
    pub ranges: Vec<(usize, usize)>,
    pub symmetric: bool,
    pub order_mod_16: usize,
    /// `(n + 1) mod 3`; zero rules out a fully symmetric Schur partition.
    pub successor_mod_3: usize,
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "colours: {}", self.colours)?;
        writeln!(f, "symmetric: {}", self.symmetric)?;
        writeln!(f, "n mod 16: {}", self.order_mod_16)?;
        writeln!(f, "(n+1) mod 3: {}", self.successor_mod_3)?;
        writeln!(f, "colour  size  min  max")?;
        for (i, (size, (lo, hi))) in self.sizes.iter().zip(&self.ranges).enumerate() {
            writeln!(f, "{:>6}  {:>4}  {:>3}  {:>3}", i + 1, size, lo, hi)?;
        }
        Ok(())
    }
}
