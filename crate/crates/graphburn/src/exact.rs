//! Exact burning number.
//!
//! Minimum-length covering sequences suffice (a repaired covering schedule
//! is burning-valid and no longer), so the solver searches ball coverings
//! with radii k-1, ..., 0 by branch and bound, iterating k upward from a
//! coverage-counting lower bound. A naive full enumeration of the covering
//! form serves as an independent oracle at test scale.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{Dist, Graph};
use crate::schedule::{repair, schedule_from_assignment, CoverAssignment, Schedule};

/// Resource limits for the exact search. All optional; `default()` means
/// unlimited.
#[derive(Debug, Clone, Default)]
pub struct SearchLimits {
    /// Give up once k would exceed this.
    pub max_k: Option<usize>,
    /// Maximum number of branch-and-bound nodes across all k.
    pub node_budget: Option<u64>,
    /// Wall-clock limit in milliseconds.
    pub time_budget_ms: Option<u64>,
}

impl SearchLimits {
    fn validate(&self) -> Result<()> {
        if self.max_k == Some(0) || self.node_budget == Some(0) {
            return Err(Error::InvalidArgument("budgets must be positive".into()));
        }
        Ok(())
    }
}

/// Smallest k such that the k largest per-radius ball sizes can count up to
/// n: sum over i < k of max_v |N^i[v]| >= n. Never exceeds the burning
/// number.
pub fn coverage_lower_bound(g: &Graph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::InvalidArgument("graph is empty".into()));
    }
    let dist = all_pairs(g)?;
    let mut sum = 0usize;
    for radius in 0..g.n() {
        sum += max_ball_size(g, &dist, radius);
        if sum >= g.n() {
            return Ok(radius + 1);
        }
    }
    Ok(g.n())
}

const BRUTE_FORCE_NODE_CAP: u128 = 100_000_000;

/// Exhaustively enumerates sequences of length exactly `k` in lexicographic
/// order and returns the first one whose balls of radii k-1, ..., 0 cover
/// the graph, or `None`. Test-scale only: errors out when n^k exceeds the
/// enumeration cap.
pub fn covering_sequence_brute(g: &Graph, k: usize) -> Result<Option<Schedule>> {
    if g.is_empty() || k == 0 {
        return Err(Error::InvalidArgument(
            "need a nonempty graph and positive k".into(),
        ));
    }
    let nodes = (g.n() as u128)
        .checked_pow(k.min(64) as u32)
        .unwrap_or(u128::MAX);
    if k > 64 || nodes > BRUTE_FORCE_NODE_CAP {
        return Err(Error::InvalidArgument(format!(
            "enumeration budget exceeded: n^k = {}^{} is over {BRUTE_FORCE_NODE_CAP}",
            g.n(),
            k
        )));
    }
    let dist = all_pairs(g)?;
    let balls = ball_masks(g, &dist, k);
    let full = Mask::full(g.n());
    let mut seq = vec![0usize; k];
    let mut masks = vec![Mask::empty(g.n()); k + 1];
    fn descend(
        g: &Graph,
        balls: &[Vec<Mask>],
        full: &Mask,
        seq: &mut Vec<usize>,
        masks: &mut Vec<Mask>,
        depth: usize,
        k: usize,
    ) -> bool {
        if depth == k {
            return masks[k].contains_all(full);
        }
        let radius = k - depth - 1;
        for v in 0..g.n() {
            seq[depth] = v;
            masks[depth + 1] = masks[depth].union(&balls[radius][v]);
            if descend(g, balls, full, seq, masks, depth + 1, k) {
                return true;
            }
        }
        false
    }
    if descend(g, &balls, &full, &mut seq, &mut masks, 0, k) {
        Ok(Some(Schedule::new(seq)?))
    } else {
        Ok(None)
    }
}

/// Exact burning number with a burning-valid schedule of that length.
///
/// Iterates k upward from the lower bound; for each k assigns radii to
/// centers by branch and bound: pick the uncovered vertex with the fewest
/// covering (center, radius) options (minimum id among ties), branch on
/// those options (larger radii first, centers ascending), and prune when
/// the largest remaining ball sizes cannot cover what is left. Options
/// that newly cover exactly the same vertex set are collapsed into one.
pub fn burning_number(g: &Graph, limits: &SearchLimits) -> Result<(usize, Schedule)> {
    limits.validate()?;
    if g.is_empty() {
        return Err(Error::InvalidArgument("graph is empty".into()));
    }
    let dist = all_pairs(g)?;
    let start = Instant::now();
    let mut nodes_left = limits.node_budget.unwrap_or(u64::MAX);
    let lower = coverage_lower_bound(g)?;
    for k in lower..=g.n() {
        if limits.max_k.is_some_and(|mk| k > mk) || k >= 64 {
            return Err(budget_error(g, &dist, k));
        }
        let balls = ball_masks(g, &dist, k);
        let max_sizes: Vec<usize> = (0..k).map(|r| max_ball_size(g, &dist, r)).collect();
        let mut search = Search {
            g,
            balls: &balls,
            max_sizes: &max_sizes,
            nodes_left: &mut nodes_left,
            deadline: limits
                .time_budget_ms
                .map(|ms| (start, std::time::Duration::from_millis(ms))),
            assignment: Vec::new(),
        };
        match search.solve(Mask::empty(g.n()), (1u64 << k) - 1, k) {
            Ok(true) => {
                let a = CoverAssignment::new(search.assignment.clone());
                let schedule = schedule_from_assignment(g, &a, k)?;
                debug_assert_eq!(schedule.k(), k);
                return Ok((k, schedule));
            }
            Ok(false) => continue,
            Err(_) => return Err(budget_error(g, &dist, k)),
        }
    }
    unreachable!("every graph of order n has a covering sequence of length n")
}

struct Search<'a> {
    g: &'a Graph,
    balls: &'a [Vec<Mask>],
    max_sizes: &'a [usize],
    nodes_left: &'a mut u64,
    deadline: Option<(Instant, std::time::Duration)>,
    assignment: Vec<(usize, usize)>,
}

struct OutOfBudget;

impl Search<'_> {
    /// `radii_left` is a bitmask of still-unassigned radii.
    fn solve(
        &mut self,
        covered: Mask,
        radii_left: u64,
        k: usize,
    ) -> std::result::Result<bool, OutOfBudget> {
        if *self.nodes_left == 0 {
            return Err(OutOfBudget);
        }
        *self.nodes_left -= 1;
        if let Some((start, budget)) = self.deadline {
            if start.elapsed() > budget {
                return Err(OutOfBudget);
            }
        }
        let n = self.g.n();
        let uncovered_count = n - covered.count();
        if uncovered_count == 0 {
            return Ok(true);
        }
        let remaining: Vec<usize> = (0..k).rev().filter(|r| radii_left & (1 << r) != 0).collect();
        let reach: usize = remaining.iter().map(|&r| self.max_sizes[r]).sum();
        if reach < uncovered_count {
            return Ok(false);
        }
        // uncovered vertex with the fewest covering options, min id on ties
        let mut target = usize::MAX;
        let mut target_options = usize::MAX;
        for v in 0..n {
            if covered.get(v) {
                continue;
            }
            let options = remaining
                .iter()
                .map(|&r| (0..n).filter(|&c| self.balls[r][c].get(v)).count())
                .sum::<usize>();
            if options < target_options {
                target_options = options;
                target = v;
            }
            if options == 0 {
                return Ok(false);
            }
        }
        // larger radii first, centers ascending; collapse options that
        // consume the same radius for an identical resulting coverage
        let mut seen = std::collections::HashSet::new();
        for &r in &remaining {
            for c in 0..n {
                if !self.balls[r][c].get(target) {
                    continue;
                }
                let next = covered.union(&self.balls[r][c]);
                if !seen.insert((r, next.clone())) {
                    continue;
                }
                self.assignment.push((c, r));
                if self.solve(next, radii_left & !(1 << r), k)? {
                    return Ok(true);
                }
                self.assignment.pop();
            }
        }
        Ok(false)
    }
}

/// Greedy covering used to report an honest upper bound when the exact
/// search runs out of budget.
fn budget_error(g: &Graph, dist: &[Vec<Dist>], refuted_below: usize) -> Error {
    let (k, schedule) = greedy_cover(g, dist, refuted_below);
    Error::Budget {
        upper_bound: k,
        schedule,
    }
}

fn greedy_cover(g: &Graph, dist: &[Vec<Dist>], start_k: usize) -> (usize, Schedule) {
    'next_k: for k in start_k.max(1)..=g.n() {
        let balls = ball_masks(g, dist, k);
        let mut covered = Mask::empty(g.n());
        let mut assignment = CoverAssignment::default();
        for r in (0..k).rev() {
            if covered.count() == g.n() {
                break;
            }
            let best = (0..g.n())
                .max_by_key(|&c| (covered.union(&balls[r][c]).count(), std::cmp::Reverse(c)))
                .expect("nonempty");
            covered = covered.union(&balls[r][best]);
            assignment.push(best, r);
        }
        if covered.count() == g.n() {
            match schedule_from_assignment(g, &assignment, k) {
                Ok(s) => return (s.k(), s),
                Err(_) => continue 'next_k,
            }
        }
    }
    // radii n-1..0 with every vertex its own center always covers
    let seq: Vec<usize> = (0..g.n()).collect();
    let s = Schedule::new(seq).expect("nonempty");
    let s = repair(g, &s).unwrap_or(s);
    (s.k(), s)
}

fn all_pairs(g: &Graph) -> Result<Vec<Vec<Dist>>> {
    g.vertices().map(|v| g.bfs_distances(v)).collect()
}

fn max_ball_size(g: &Graph, dist: &[Vec<Dist>], radius: usize) -> usize {
    g.vertices()
        .map(|c| {
            g.vertices()
                .filter(|&v| dist[c][v] <= Dist::Finite(radius))
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// balls[r][c] = vertices within distance r of c, as a bitmask.
fn ball_masks(g: &Graph, dist: &[Vec<Dist>], k: usize) -> Vec<Vec<Mask>> {
    (0..k)
        .map(|r| {
            (0..g.n())
                .map(|c| {
                    let mut m = Mask::empty(g.n());
                    for v in g.vertices() {
                        if dist[c][v] <= Dist::Finite(r) {
                            m.set(v);
                        }
                    }
                    m
                })
                .collect()
        })
        .collect()
}

/// Fixed-size bitmask over vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Mask {
    words: Vec<u64>,
    len: usize,
}

impl Mask {
    fn empty(len: usize) -> Mask {
        Mask {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    fn full(len: usize) -> Mask {
        let mut m = Mask::empty(len);
        for v in 0..len {
            m.set(v);
        }
        m
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    fn union(&self, other: &Mask) -> Mask {
        Mask {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
            len: self.len,
        }
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn contains_all(&self, other: &Mask) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == *b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schedule::{verify_burning, verify_covering};

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(coverage_lower_bound(&path(9)).unwrap(), 3);
        let k5 = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert_eq!(coverage_lower_bound(&k5).unwrap(), 2);
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(coverage_lower_bound(&single).unwrap(), 1);
    }

    #[test]
    fn brute_force_small_paths() {
        let g = path(4);
        let found = covering_sequence_brute(&g, 2).unwrap().unwrap();
        assert!(verify_covering(&g, &found).unwrap().ok);
        assert!(covering_sequence_brute(&g, 1).unwrap().is_none());

        let g = path(2);
        let found = covering_sequence_brute(&g, 2).unwrap().unwrap();
        assert!(verify_covering(&g, &found).unwrap().ok);
    }

    #[test]
    fn brute_force_budget_guard() {
        let g = path(30);
        assert!(covering_sequence_brute(&g, 30).is_err());
    }

    #[test]
    fn exact_path_nine() {
        let g = path(9);
        let (k, s) = burning_number(&g, &SearchLimits::default()).unwrap();
        assert_eq!(k, 3);
        assert!(verify_burning(&g, &s).unwrap().ok);
    }

    #[test]
    fn exact_single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let (k, s) = burning_number(&g, &SearchLimits::default()).unwrap();
        assert_eq!(k, 1);
        assert_eq!(s.as_slice(), &[0]);
    }

    #[test]
    fn exact_star_matches_oracle() {
        let g = star(3);
        let (k, s) = burning_number(&g, &SearchLimits::default()).unwrap();
        let oracle_k = (1..=g.n())
            .find(|&k| covering_sequence_brute(&g, k).unwrap().is_some())
            .unwrap();
        assert_eq!(k, oracle_k);
        assert_eq!(k, 2);
        assert!(verify_burning(&g, &s).unwrap().ok);
    }

    #[test]
    fn exact_agrees_with_oracle_on_mixed_instances() {
        let cases: Vec<Graph> = vec![
            path(7),
            star(5),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap(),
            Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (2, 6), (6, 7)])
                .unwrap(),
        ];
        for g in cases {
            let (k, s) = burning_number(&g, &SearchLimits::default()).unwrap();
            let oracle_k = (1..=g.n())
                .find(|&k| covering_sequence_brute(&g, k).unwrap().is_some())
                .unwrap();
            assert_eq!(k, oracle_k, "mismatch on {g:?}");
            assert!(verify_burning(&g, &s).unwrap().ok);
            assert!(coverage_lower_bound(&g).unwrap() <= k);
        }
    }

    #[test]
    fn exact_paths_match_square_root_rule() {
        for n in 1..=16 {
            let g = path(n);
            let (k, _) = burning_number(&g, &SearchLimits::default()).unwrap();
            assert_eq!(k, (n as f64).sqrt().ceil() as usize, "P_{n}");
        }
    }

    #[test]
    fn budget_exhaustion_reports_upper_bound() {
        let g = path(16);
        let limits = SearchLimits {
            node_budget: Some(1),
            ..Default::default()
        };
        match burning_number(&g, &limits) {
            Err(Error::Budget {
                upper_bound,
                schedule,
            }) => {
                assert_eq!(upper_bound, schedule.k());
                assert!(verify_burning(&g, &schedule).unwrap().ok);
                assert!(upper_bound >= 4);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn max_k_limit_reports_upper_bound() {
        let g = path(25);
        let limits = SearchLimits {
            max_k: Some(2),
            ..Default::default()
        };
        assert!(matches!(
            burning_number(&g, &limits),
            Err(Error::Budget { upper_bound: 5, .. })
        ));
    }
}
