use crate::partition::Partition;
use crate::verifier::verify_schur;

use super::{PartialPartition, SearchError, SearchStatus};

/// Result of a complete search for the longest colourable prefix.
#[derive(Debug, Clone)]
pub struct ExhaustiveOutcome {
    /// Largest order reached.
    pub max_order: usize,
    pub witness: Partition,
    /// `Exhausted` when the whole tree was explored (so `max_order + 1` is
    /// proven impossible, unless `max_order` hit the cap), `Found` when the
    /// cap was reached, `BudgetExceeded` when the node budget ran out.
    pub status: SearchStatus,
    pub nodes: u64,
}

impl ExhaustiveOutcome {
    /// True when `max_order` is the exact maximum below the cap.
    pub fn proves_maximum(&self) -> bool {
        self.status == SearchStatus::Exhausted
    }
}

struct Prefix {
    partial: PartialPartition,
    cap: usize,
    best: usize,
    best_assignment: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    out_of_budget: bool,
}

impl Prefix {
    // assigns x, x + 1, ... in order; true once the cap is reached
    fn dfs(&mut self, x: usize) -> bool {
        if x - 1 > self.best {
            self.best = x - 1;
            self.best_assignment
                .copy_from_slice(self.partial.assignment());
        }
        if x > self.cap {
            return true;
        }
        let k = self.partial.colour_count();
        let mut seen_empty = false;
        for c in 1..=k {
            if self.partial.members(c).is_empty() {
                if seen_empty {
                    break;
                }
                seen_empty = true;
            }
            if self.partial.blockage(x, c) != 0 {
                continue;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                self.out_of_budget = true;
                return false;
            }
            self.partial.place(x, c);
            if self.dfs(x + 1) {
                return true;
            }
            self.partial.undo();
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

/// Largest `n <= n_cap` such that `[1, n]` has a Schur partition into `k`
/// colours, found by complete backtracking over `1, 2, 3, ...` without any
/// symmetry assumption.
///
/// Colours are only distinguished once used, so at each step at most one
/// still-empty colour is tried.
pub fn exhaustive_max(
    k: usize,
    n_cap: usize,
    max_nodes: Option<u64>,
) -> Result<ExhaustiveOutcome, SearchError> {
    if k == 0 {
        return Err(SearchError::Precondition(
            "colour count must be positive".into(),
        ));
    }
    if n_cap < k {
        return Err(SearchError::Precondition(format!(
            "order cap {n_cap} is below the colour count {k}"
        )));
    }
    let mut search = Prefix {
        partial: PartialPartition::new(n_cap, k),
        cap: n_cap,
        best: 0,
        best_assignment: vec![0; n_cap + 1],
        nodes: 0,
        budget: max_nodes,
        out_of_budget: false,
    };
    let reached_cap = search.dfs(1);
    let status = if reached_cap {
        SearchStatus::Found
    } else if search.out_of_budget {
        SearchStatus::BudgetExceeded
    } else {
        SearchStatus::Exhausted
    };
    let n = search.best;
    let mut colouring = search.best_assignment[1..=n].to_vec();
    spread_colours(&mut colouring, k);
    let witness = Partition::from_colouring(k, &colouring)
        .map_err(|e| SearchError::Precondition(format!("could not use all {k} colours: {e}")))?;
    debug_assert!(verify_schur(&witness).valid);
    Ok(ExhaustiveOutcome {
        max_order: n,
        witness,
        status,
        nodes: search.nodes,
    })
}

/// Moves single members out of classes with two or more members into unused
/// colours. Singletons and subsets of sum-free sets stay sum-free.
fn spread_colours(colouring: &mut [usize], k: usize) {
    let mut sizes = vec![0usize; k + 1];
    for &c in colouring.iter() {
        sizes[c] += 1;
    }
    for empty in 1..=k {
        if sizes[empty] != 0 {
            continue;
        }
        let Some(pos) = colouring.iter().rposition(|&c| sizes[c] >= 2) else {
            return;
        };
        sizes[colouring[pos]] -= 1;
        colouring[pos] = empty;
        sizes[empty] = 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_schur_numbers() {
        let out = exhaustive_max(1, 10, None).unwrap();
        assert_eq!(out.max_order, 1);
        assert!(out.proves_maximum());
        assert_eq!(out.witness.subsets(), vec![vec![1]]);

        let out = exhaustive_max(2, 10, None).unwrap();
        assert_eq!(out.max_order, 4);
        assert!(out.proves_maximum());
        assert_eq!(out.witness.subsets(), vec![vec![1, 4], vec![2, 3]]);

        let out = exhaustive_max(3, 20, None).unwrap();
        assert_eq!(out.max_order, 13);
        assert!(out.proves_maximum());
        assert!(verify_schur(&out.witness).valid);
    }

    #[test]
    fn cap_and_budget() {
        let out = exhaustive_max(3, 8, None).unwrap();
        assert_eq!(out.max_order, 8);
        assert_eq!(out.status, SearchStatus::Found);
        let out = exhaustive_max(4, 44, Some(10)).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert!(exhaustive_max(0, 5, None).is_err());
        assert!(exhaustive_max(5, 3, None).is_err());
    }

    #[test]
    fn spreading_fills_unused_colours() {
        let mut c = vec![1, 1, 1];
        spread_colours(&mut c, 3);
        assert_eq!(c, vec![1, 3, 2]);
    }
}
