//! Ignition schedules and the burning-process semantics.
//!
//! A schedule (x_1, ..., x_k) is *covering* when the balls of radii
//! k-1, ..., 0 around x_1, ..., x_k cover every vertex, and *burning-valid*
//! when additionally dist(x_i, x_j) >= j - i for all i < j. The two notions
//! reach the same minimum length: `repair` turns any covering schedule into
//! a burning-valid one that is no longer.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Dist, Graph};

/// An ordered ignition sequence. The entry at 1-based position `i` carries
/// the implicit spread radius `k - i`, where `k` is the length. Never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    seq: Vec<usize>,
}

impl Schedule {
    pub fn new(seq: Vec<usize>) -> Result<Schedule> {
        if seq.is_empty() {
            return Err(Error::InvalidArgument("schedule must be nonempty".into()));
        }
        Ok(Schedule { seq })
    }

    /// Length of the sequence (the number of steps `k`).
    pub fn k(&self) -> usize {
        self.seq.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    /// The radius given to the 1-based position `i`.
    pub fn radius_at(&self, i: usize) -> usize {
        self.k() - i
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.seq.iter().copied()
    }
}

impl std::fmt::Display for Schedule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Result of running the discrete burning process.
#[derive(Debug, Clone)]
pub struct BurnTrace {
    /// 1-based earliest burn time per vertex; `None` for vertices still
    /// unburned after the final step.
    pub burn_time: Vec<Option<usize>>,
    pub steps: usize,
}

impl BurnTrace {
    pub fn all_burned(&self) -> bool {
        self.burn_time.iter().all(|t| t.is_some())
    }
}

/// Explicit (center, radius) pairs certifying a ball covering.
#[derive(Debug, Clone, Default)]
pub struct CoverAssignment {
    pairs: Vec<(usize, usize)>,
}

impl CoverAssignment {
    pub fn new(pairs: Vec<(usize, usize)>) -> CoverAssignment {
        CoverAssignment { pairs }
    }

    pub fn push(&mut self, center: usize, radius: usize) {
        self.pairs.push((center, radius));
    }

    pub fn extend(&mut self, other: impl IntoIterator<Item = (usize, usize)>) {
        self.pairs.extend(other);
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Runs the burning process: at step i the vertex x_i ignites (if not
/// already burning) and then the fire spreads one hop from every vertex
/// that was burning before this step. Times are reported within the k steps
/// of the schedule only.
pub fn simulate(g: &Graph, s: &Schedule) -> Result<BurnTrace> {
    check_entries(g, s)?;
    let k = s.k();
    let mut burn_time: Vec<Option<usize>> = vec![None; g.n()];
    let mut frontier: Vec<usize> = Vec::new();
    for (idx, x) in s.iter().enumerate() {
        let step = idx + 1;
        // spread from everything burned before this step
        let mut next_frontier = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if burn_time[w].is_none() {
                    burn_time[w] = Some(step);
                    next_frontier.push(w);
                }
            }
        }
        // ignition precedes only the *next* step's spread
        if burn_time[x].is_none() {
            burn_time[x] = Some(step);
            next_frontier.push(x);
        }
        frontier = next_frontier;
    }
    Ok(BurnTrace {
        burn_time,
        steps: k,
    })
}

/// Outcome of the ball-covering check.
#[derive(Debug, Clone)]
pub struct CoveringCheck {
    pub ok: bool,
    /// Vertices missed by every ball, ascending.
    pub uncovered: Vec<usize>,
}

/// Checks whether the balls N^{k-i}[x_i] cover the whole vertex set.
pub fn verify_covering(g: &Graph, s: &Schedule) -> Result<CoveringCheck> {
    check_entries(g, s)?;
    let covered = covered_set(g, s.as_slice(), s.k())?;
    let uncovered: Vec<usize> = g.vertices().filter(|&v| !covered[v]).collect();
    Ok(CoveringCheck {
        ok: uncovered.is_empty(),
        uncovered,
    })
}

/// A witness that a schedule is not burning-valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Some vertex is outside every ball.
    Uncovered { vertex: usize },
    /// Two scheduled vertices are closer than their index gap; positions are
    /// 1-based.
    TooClose {
        i: usize,
        j: usize,
        dist: Dist,
        required: usize,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Uncovered { vertex } => write!(f, "vertex {vertex} is never burned"),
            Violation::TooClose {
                i,
                j,
                dist,
                required,
            } => write!(
                f,
                "(i={i},j={j}): dist {dist} < {required}"
            ),
        }
    }
}

/// Outcome of the burning-validity check.
#[derive(Debug, Clone)]
pub struct BurningCheck {
    pub ok: bool,
    pub violation: Option<Violation>,
}

/// Checks both burning conditions: every vertex within k-i of some x_i, and
/// dist(x_i, x_j) >= j - i for all pairs. Infinite distances satisfy the
/// pair condition vacuously.
pub fn verify_burning(g: &Graph, s: &Schedule) -> Result<BurningCheck> {
    check_entries(g, s)?;
    let covering = verify_covering(g, s)?;
    if let Some(&vertex) = covering.uncovered.first() {
        return Ok(BurningCheck {
            ok: false,
            violation: Some(Violation::Uncovered { vertex }),
        });
    }
    let seq = s.as_slice();
    let mut dist_from: HashMap<usize, Vec<Dist>> = HashMap::new();
    for j in 1..seq.len() {
        for i in 0..j {
            let d = dist_from
                .entry(seq[i])
                .or_insert_with(|| g.bfs_distances(seq[i]).expect("entries checked"))[seq[j]];
            let required = j - i;
            if d < Dist::Finite(required) {
                return Ok(BurningCheck {
                    ok: false,
                    violation: Some(Violation::TooClose {
                        i: i + 1,
                        j: j + 1,
                        dist: d,
                        required,
                    }),
                });
            }
        }
    }
    Ok(BurningCheck {
        ok: true,
        violation: None,
    })
}

/// Turns a covering schedule into a burning-valid one of the same length or
/// shorter.
///
/// Repeatedly finds the smallest position j violating the pair condition,
/// and replaces x_j by the minimum-id vertex outside the balls of the
/// prefix x_1..x_{j-1} (with radii j-2, ..., 0). When no such vertex exists
/// the prefix already covers everything and the schedule is truncated there.
pub fn repair(g: &Graph, s: &Schedule) -> Result<Schedule> {
    let covering = verify_covering(g, s)?;
    if !covering.ok {
        return Err(Error::Contract(format!(
            "repair requires a covering schedule; vertices {:?} are uncovered",
            covering.uncovered
        )));
    }
    let mut seq = s.as_slice().to_vec();
    let mut dist_from: HashMap<usize, Vec<Dist>> = HashMap::new();
    loop {
        for &v in &seq {
            dist_from
                .entry(v)
                .or_insert_with(|| g.bfs_distances(v).expect("entries checked"));
        }
        // smallest violating 0-based position j
        let mut violating = None;
        'scan: for j in 1..seq.len() {
            for i in 0..j {
                let d = dist_from[&seq[i]][seq[j]];
                if d < Dist::Finite(j - i) {
                    violating = Some(j);
                    break 'scan;
                }
            }
        }
        let Some(j) = violating else { break };
        // ball union of the length-(j) prefix under its own radii j-1-i .. 0
        let covered = covered_set(g, &seq[..j], j)?;
        match g.vertices().find(|&v| !covered[v]) {
            Some(y) => seq[j] = y,
            None => {
                seq.truncate(j);
                break;
            }
        }
    }
    Schedule::new(seq)
}

/// Places each (center, radius) pair of a covering assignment at the
/// schedule position carrying that radius (position k - r), fills the
/// remaining positions with minimum-id vertices not yet used, and repairs.
/// Radii must be pairwise distinct and below `k`.
pub fn schedule_from_assignment(g: &Graph, a: &CoverAssignment, k: usize) -> Result<Schedule> {
    if k == 0 {
        return Err(Error::InvalidArgument("schedule length must be positive".into()));
    }
    let mut slots: Vec<Option<usize>> = vec![None; k];
    for &(center, radius) in a.pairs() {
        if center >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: center,
                n: g.n(),
            });
        }
        if radius >= k {
            return Err(Error::InvalidArgument(format!(
                "radius {radius} does not fit a schedule of length {k}"
            )));
        }
        let pos = k - radius - 1;
        if slots[pos].is_some() {
            return Err(Error::InvalidArgument(format!(
                "duplicate radius {radius} in cover assignment"
            )));
        }
        slots[pos] = Some(center);
    }
    let mut used: Vec<bool> = vec![false; g.n()];
    for slot in slots.iter().flatten() {
        used[*slot] = true;
    }
    let mut next_unused = 0usize;
    let seq: Vec<usize> = slots
        .into_iter()
        .map(|slot| {
            slot.unwrap_or_else(|| {
                while next_unused < g.n() && used[next_unused] {
                    next_unused += 1;
                }
                if next_unused < g.n() {
                    used[next_unused] = true;
                    next_unused
                } else {
                    // every vertex already used; repair will drop the slack
                    0
                }
            })
        })
        .collect();
    repair(g, &Schedule::new(seq)?)
}

/// Verdict object for the JSON surface.
#[derive(Debug, Clone, Serialize)]
pub struct ScheduleReport {
    pub k: usize,
    pub sequence: Vec<usize>,
    pub valid_covering: bool,
    pub valid_burning: bool,
}

impl ScheduleReport {
    pub fn build(g: &Graph, s: &Schedule) -> Result<ScheduleReport> {
        Ok(ScheduleReport {
            k: s.k(),
            sequence: s.as_slice().to_vec(),
            valid_covering: verify_covering(g, s)?.ok,
            valid_burning: verify_burning(g, s)?.ok,
        })
    }
}

fn check_entries(g: &Graph, s: &Schedule) -> Result<()> {
    for x in s.iter() {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: g.n(),
            });
        }
    }
    Ok(())
}

/// Marks every vertex within radius `len - i - 1` of `seq[i]`, i.e. the ball
/// union of a length-`len` schedule prefix.
fn covered_set(g: &Graph, seq: &[usize], len: usize) -> Result<Vec<bool>> {
    debug_assert!(seq.len() <= len);
    let mut covered = vec![false; g.n()];
    for (i, &x) in seq.iter().enumerate() {
        let radius = len - i - 1;
        let dist = g.bfs_distances(x)?;
        for v in g.vertices() {
            if dist[v] <= Dist::Finite(radius) {
                covered[v] = true;
            }
        }
    }
    Ok(covered)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn sched(v: &[usize]) -> Schedule {
        Schedule::new(v.to_vec()).unwrap()
    }

    #[test]
    fn simulate_path_two_steps() {
        let g = path(3);
        let t = simulate(&g, &sched(&[1, 0])).unwrap();
        assert_eq!(t.burn_time, vec![Some(2), Some(1), Some(2)]);
        assert!(t.all_burned());
    }

    #[test]
    fn simulate_single_ignition_spreads_nothing() {
        let g = path(3);
        let t = simulate(&g, &sched(&[0])).unwrap();
        assert_eq!(t.burn_time, vec![Some(1), None, None]);
        assert!(!t.all_burned());
    }

    #[test]
    fn simulate_isolated_vertices() {
        let g = Graph::from_edges(2, &[]).unwrap();
        let t = simulate(&g, &sched(&[0, 1])).unwrap();
        assert_eq!(t.burn_time, vec![Some(1), Some(2)]);
    }

    #[test]
    fn trace_invariants_hold() {
        let g = path(6);
        let s = sched(&[3, 0, 5]);
        let t = simulate(&g, &s).unwrap();
        for (idx, x) in s.iter().enumerate() {
            assert!(t.burn_time[x].unwrap() <= idx + 1);
        }
        for v in g.vertices() {
            if let Some(time) = t.burn_time[v] {
                if time > 1 && !s.as_slice()[..time].contains(&v) {
                    assert!(g
                        .neighbors(v)
                        .iter()
                        .any(|&w| t.burn_time[w].is_some_and(|tw| tw <= time - 1)));
                }
            }
        }
    }

    #[test]
    fn covering_examples() {
        let g = path(3);
        assert!(verify_covering(&g, &sched(&[1, 0])).unwrap().ok);
        let miss = verify_covering(&g, &sched(&[1])).unwrap();
        assert!(!miss.ok);
        assert_eq!(miss.uncovered, vec![0, 2]);

        // k=3 on the 9-path: balls of radii 2,1,0 around 2,6,8
        let g = path(9);
        let ok = verify_covering(&g, &sched(&[2, 6, 8])).unwrap();
        assert!(ok.ok && ok.uncovered.is_empty());
    }

    #[test]
    fn burning_examples() {
        let g = path(3);
        assert!(verify_burning(&g, &sched(&[1, 0])).unwrap().ok);

        let bad = verify_burning(&g, &sched(&[1, 1])).unwrap();
        assert!(!bad.ok);
        assert_eq!(
            bad.violation,
            Some(Violation::TooClose {
                i: 1,
                j: 2,
                dist: Dist::Finite(0),
                required: 1
            })
        );

        let g = path(9);
        assert!(verify_burning(&g, &sched(&[2, 6, 8])).unwrap().ok);
    }

    #[test]
    fn burning_infinite_distance_pairs_are_fine() {
        let g = Graph::from_edges(2, &[]).unwrap();
        let check = verify_burning(&g, &sched(&[0, 1])).unwrap();
        assert!(check.ok);
        // one center cannot cover the other component
        let check = verify_burning(&g, &sched(&[0, 0])).unwrap();
        assert!(!check.ok);
        assert_eq!(check.violation, Some(Violation::Uncovered { vertex: 1 }));
    }

    #[test]
    fn repair_replaces_duplicate() {
        let g = path(3);
        let fixed = repair(&g, &sched(&[1, 1])).unwrap();
        assert_eq!(fixed.as_slice(), &[1, 0]);

        let fixed = repair(&g, &sched(&[1, 0])).unwrap();
        assert_eq!(fixed.as_slice(), &[1, 0]);
    }

    #[test]
    fn repair_star_picks_min_uncovered() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let fixed = repair(&g, &sched(&[0, 0])).unwrap();
        assert_eq!(fixed.as_slice(), &[0, 1]);
    }

    #[test]
    fn repair_requires_covering() {
        let g = path(5);
        let err = repair(&g, &sched(&[0])).unwrap_err();
        assert!(matches!(err, Error::Contract(_)));
    }

    #[test]
    fn repair_truncates_when_prefix_covers() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let fixed = repair(&g, &sched(&[0, 0, 0])).unwrap();
        assert_eq!(fixed.as_slice(), &[0]);
    }

    #[test]
    fn assignment_direct_placement() {
        let g = path(5);
        let a = CoverAssignment::new(vec![(4, 2), (1, 1), (0, 0)]);
        let s = schedule_from_assignment(&g, &a, 3).unwrap();
        assert_eq!(s.as_slice(), &[4, 1, 0]);
    }

    #[test]
    fn assignment_fills_and_repairs() {
        let g = path(9);
        let a = CoverAssignment::new(vec![(6, 3), (1, 2)]);
        let s = schedule_from_assignment(&g, &a, 4).unwrap();
        assert_eq!(&s.as_slice()[..2], &[6, 1]);
        assert_eq!(s.k(), 4);
        assert!(verify_burning(&g, &s).unwrap().ok);
    }

    #[test]
    fn assignment_singleton() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let a = CoverAssignment::new(vec![(0, 0)]);
        let s = schedule_from_assignment(&g, &a, 1).unwrap();
        assert_eq!(s.as_slice(), &[0]);
    }

    #[test]
    fn assignment_rejects_duplicate_radius() {
        let g = path(5);
        let a = CoverAssignment::new(vec![(0, 1), (4, 1)]);
        assert!(matches!(
            schedule_from_assignment(&g, &a, 3),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn burning_implies_covering() {
        let g = path(9);
        for s in [sched(&[2, 6, 8]), sched(&[4, 1, 8]), sched(&[6, 2, 0])] {
            if verify_burning(&g, &s).unwrap().ok {
                assert!(verify_covering(&g, &s).unwrap().ok);
            }
        }
    }
}
