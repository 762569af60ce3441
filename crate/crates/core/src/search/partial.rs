use std::fmt;

use thiserror::Error;

use crate::format::{self, FormatError};
use crate::partition::Partition;
use crate::verifier::{count_blocked, Verifier, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssignError {
    #[error("position {0} is outside the target range")]
    OutOfRange(usize),
    #[error("colour {0} is out of range")]
    BadColour(usize),
    #[error("position {position} already has colour {colour}")]
    Assigned { position: usize, colour: usize },
    #[error("position {position} is blocked in colour {colour} ({count} witnesses)")]
    Blocked {
        position: usize,
        colour: usize,
        count: u32,
    },
}

/// An in-progress colouring of `[1, N]` together with its blockage table.
///
/// `blockage(z, c)` counts the witnesses that would make `z` complete a
/// monochromatic `a + b = c` in colour `c`; it is maintained on every
/// [`assign`](Self::assign) and [`undo`](Self::undo) by touching only the
/// current members of the affected colour. Assignments are undone in LIFO
/// order.
///
/// Entries are kept for every position, assigned or not. For an assigned
/// position the entry counts witnesses among the other members, which is
/// what makes the update rule exactly reversible.
#[derive(Clone)]
pub struct PartialPartition {
    order: usize,
    colours: usize,
    assignment: Vec<usize>,
    members: Vec<Vec<usize>>,
    blocked: Vec<u32>,
    // per colour: number of positions with a nonzero entry
    blocked_positions: Vec<usize>,
    trail: Vec<usize>,
    hash: u64,
}

impl fmt::Debug for PartialPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialPartition")
            .field("order", &self.order)
            .field("colours", &self.colours)
            .field("assigned", &self.trail.len())
            .finish()
    }
}

/// Blockage counts for every unassigned position and colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockageTable {
    pub order: usize,
    pub colours: usize,
    // (order + 1) * colours entries; None for assigned positions
    entries: Vec<Option<u32>>,
}

impl BlockageTable {
    pub fn get(&self, z: usize, c: usize) -> Option<u32> {
        self.entries[z * self.colours + (c - 1)]
    }
}

pub(crate) fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

impl PartialPartition {
    /// An empty assignment on `[1, order]` with `colours` (possibly empty)
    /// colour classes.
    pub fn new(order: usize, colours: usize) -> Self {
        assert!(
            order >= 1 && colours >= 1,
            "order and colour count must be positive"
        );
        Self {
            order,
            colours,
            assignment: vec![0; order + 1],
            members: vec![Vec::new(); colours],
            blocked: vec![0; (order + 1) * colours],
            blocked_positions: vec![0; colours],
            trail: Vec::new(),
            hash: 0,
        }
    }

    /// Builds a partial assignment from a colour per position (index 0
    /// ignored, colour 0 = unassigned), rejecting any monochromatic sum.
    pub fn from_assignment(colours: usize, assignment: &[usize]) -> Result<Self, AssignError> {
        let order = assignment.len() - 1;
        let mut p = Self::new(order, colours);
        for (x, &c) in assignment.iter().enumerate().skip(1) {
            if c != 0 {
                p.assign(x, c)?;
            }
        }
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn colour_count(&self) -> usize {
        self.colours
    }

    /// Colour of `x`, 0 when unassigned.
    pub fn colour_of(&self, x: usize) -> usize {
        self.assignment[x]
    }

    /// Colour per position; index 0 is unused.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn assigned_count(&self) -> usize {
        self.trail.len()
    }

    pub fn is_complete(&self) -> bool {
        self.trail.len() == self.order
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c - 1]
    }

    pub fn mirror(&self, x: usize) -> usize {
        self.order + 1 - x
    }

    /// Internally maintained blockage count of `(z, c)`.
    pub fn blockage(&self, z: usize, c: usize) -> u32 {
        self.blocked[z * self.colours + (c - 1)]
    }

    pub fn is_admissible(&self, z: usize, c: usize) -> bool {
        self.assignment[z] == 0 && self.blockage(z, c) == 0
    }

    /// Number of positions currently blocked in colour `c`.
    pub fn blocked_positions(&self, c: usize) -> usize {
        self.blocked_positions[c - 1]
    }

    /// Order-independent fingerprint of the current assignment.
    pub fn fingerprint(&self) -> u64 {
        self.hash
    }

    pub fn assign(&mut self, z: usize, c: usize) -> Result<(), AssignError> {
        if z == 0 || z > self.order {
            return Err(AssignError::OutOfRange(z));
        }
        if c == 0 || c > self.colours {
            return Err(AssignError::BadColour(c));
        }
        if self.assignment[z] != 0 {
            return Err(AssignError::Assigned {
                position: z,
                colour: self.assignment[z],
            });
        }
        let count = self.blockage(z, c);
        if count != 0 {
            return Err(AssignError::Blocked {
                position: z,
                colour: c,
                count,
            });
        }
        self.place(z, c);
        Ok(())
    }

    /// Assigns without checking admissibility. The caller guarantees that
    /// `z` is unassigned and unblocked in `c`.
    pub(crate) fn place(&mut self, y: usize, c: usize) {
        debug_assert_eq!(self.assignment[y], 0);
        self.apply(y, c, true);
        self.members[c - 1].push(y);
        self.assignment[y] = c;
        self.trail.push(y);
        self.hash ^= self.zobrist(y, c);
    }

    /// Reverts the most recent assignment, returning `(position, colour)`.
    pub fn undo(&mut self) -> Option<(usize, usize)> {
        let y = self.trail.pop()?;
        let c = self.assignment[y];
        self.assignment[y] = 0;
        let popped = self.members[c - 1].pop();
        debug_assert_eq!(popped, Some(y));
        self.apply(y, c, false);
        self.hash ^= self.zobrist(y, c);
        Some((y, c))
    }

    fn zobrist(&self, y: usize, c: usize) -> u64 {
        splitmix64((y * (self.colours + 1) + c) as u64)
    }

    // Adjusts every entry whose witness set gains (or loses) a witness
    // involving `y` when `y` joins colour `c`. Only the old members of `c`
    // take part.
    fn apply(&mut self, y: usize, c: usize, add: bool) {
        let n = self.order;
        let k = self.colours;
        let col = c - 1;
        let blocked = &mut self.blocked;
        let counter = &mut self.blocked_positions[col];
        let mut bump = |z: usize| {
            let e = &mut blocked[z * k + col];
            if add {
                if *e == 0 {
                    *counter += 1;
                }
                *e += 1;
            } else {
                *e -= 1;
                if *e == 0 {
                    *counter -= 1;
                }
            }
        };
        for &a in &self.members[col] {
            // pair (a, y) sums to a + y
            if a + y <= n {
                bump(a + y);
            }
            if a > y {
                // (a - y) + y = a
                bump(a - y);
            } else if y - a != a {
                // (y - a) + a = y
                bump(y - a);
            }
        }
        // pair (y, y)
        if 2 * y <= n {
            bump(2 * y);
        }
        // z + z = y
        if y.is_multiple_of(2) {
            bump(y / 2);
        }
    }

    /// The blockage table recomputed from scratch by the verifier.
    pub fn blockage_snapshot(&self) -> BlockageTable {
        let mut entries = vec![None; (self.order + 1) * self.colours];
        for z in 1..=self.order {
            if self.assignment[z] != 0 {
                continue;
            }
            for c in 1..=self.colours {
                let count = count_blocked(&self.assignment, z, c).expect("unassigned position");
                entries[z * self.colours + (c - 1)] = Some(count as u32);
            }
        }
        BlockageTable {
            order: self.order,
            colours: self.colours,
            entries,
        }
    }

    /// The incrementally maintained table, restricted to unassigned
    /// positions.
    pub fn blockage_table(&self) -> BlockageTable {
        let mut entries = vec![None; (self.order + 1) * self.colours];
        for z in 1..=self.order {
            if self.assignment[z] != 0 {
                continue;
            }
            for c in 1..=self.colours {
                entries[z * self.colours + (c - 1)] = Some(self.blockage(z, c));
            }
        }
        BlockageTable {
            order: self.order,
            colours: self.colours,
            entries,
        }
    }

    /// The complete partition, when every position is assigned and every
    /// colour is used.
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_complete() {
            return None;
        }
        Partition::from_colouring(self.colours, &self.assignment[1..]).ok()
    }

    /// Finds a monochromatic triple that `z` would complete in colour `c`.
    pub fn witness(&self, z: usize, c: usize) -> Option<Violation> {
        let mut class = self.members(c).to_vec();
        class.push(z);
        let report = Verifier::with_cap(usize::MAX)
            .sum_free(&class, self.order)
            .ok()?;
        report
            .violations
            .into_iter()
            .find(|v| v.a == z || v.b == z || v.c == z)
            .map(|v| Violation {
                colour: Some(c),
                ..v
            })
    }
}

/// A resumable search state: the partial assignment plus the pairing rules
/// it was built under.
#[derive(Debug, Clone)]
pub struct Checkpoint {
    pub partial: PartialPartition,
    pub symmetric: bool,
    pub exceptions: Vec<usize>,
}

impl Checkpoint {
    pub fn to_text(&self) -> String {
        let p = &self.partial;
        let mut classes = vec![Vec::new(); p.colours + 1];
        for x in 1..=p.order {
            classes[p.assignment[x]].push(x);
        }
        let mut comments = vec![format!("symmetric = {}", self.symmetric)];
        if !self.exceptions.is_empty() {
            let list: Vec<String> = self.exceptions.iter().map(ToString::to_string).collect();
            comments.push(format!("exceptions = {}", list.join(" ")));
        }
        format::write_partial(p.order, p.colours, &classes, &comments)
    }

    pub fn parse(text: &str) -> Result<Self, CheckpointError> {
        let raw = format::parse_raw(text)?;
        if !raw.partial {
            return Err(CheckpointError::NotPartial);
        }
        let symmetric = match raw.directive("symmetric") {
            None | Some("false") => false,
            Some("true") => true,
            Some(other) => {
                return Err(FormatError::BadDirective {
                    key: "symmetric".into(),
                    value: other.into(),
                }
                .into())
            }
        };
        let exceptions = match raw.directive("exceptions") {
            None => Vec::new(),
            Some(list) => list
                .split_whitespace()
                .map(|t| {
                    t.parse().map_err(|_| FormatError::BadDirective {
                        key: "exceptions".into(),
                        value: list.into(),
                    })
                })
                .collect::<Result<Vec<usize>, _>>()?,
        };
        if raw.order == 0 || raw.colours == 0 {
            return Err(CheckpointError::Empty);
        }
        let mut assignment = vec![usize::MAX; raw.order + 1];
        assignment[0] = 0;
        for (colour, class) in raw.classes.iter().enumerate() {
            for &x in class {
                if x == 0 || x > raw.order {
                    return Err(AssignError::OutOfRange(x).into());
                }
                if assignment[x] != usize::MAX {
                    return Err(CheckpointError::Duplicate(x));
                }
                assignment[x] = colour;
            }
        }
        if let Some(x) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(CheckpointError::Missing(x));
        }
        let partial = PartialPartition::from_assignment(raw.colours, &assignment)?;
        Ok(Self {
            partial,
            symmetric,
            exceptions,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckpointError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("checkpoint header must say \"partial\"")]
    NotPartial,
    #[error("order and colour count must be positive")]
    Empty,
    #[error("position {0} listed twice")]
    Duplicate(usize),
    #[error("position {0} is missing (list it under colour 0 if unassigned)")]
    Missing(usize),
    #[error(transparent)]
    Assign(#[from] AssignError),
}
