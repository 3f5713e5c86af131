//! Exhaustive backtracking search for (induced) minor models.
//!
//! Pattern vertices are placed one at a time. Each gets a connected branch set
//! drawn from the still-free host vertices; candidate sets are enumerated in
//! order of increasing size so small models are found first, and every
//! connected set is eventually tried, which keeps the search complete. A set
//! must touch the branch sets of all already placed pattern neighbours, and in
//! induced mode it may not touch the branch set of any placed non-neighbour.
//!
//! After each placement the remaining pattern vertices are checked for
//! feasibility: each needs a component of its admissible host region that
//! reaches all of its placed neighbours.

use crate::error::{check_cap, Error, Result};
use crate::graph::{Graph, BITSET_CAP};
use crate::treewidth::exact::bits;

use super::model::{InducedMinorModel, MinorModel};

/// Placed vertices with more open neighbours than this skip the entry check.
const ENTRY_CHECK_CAP: usize = 6;

#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    /// Upper bound on enumeration steps before giving up with a resource error.
    pub max_steps: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_steps: 50_000_000,
        }
    }
}

/// A minor model of `pattern` in `host`, if one exists.
pub fn find_minor_model(host: &Graph, pattern: &Graph) -> Result<Option<MinorModel>> {
    find_model_with(host, pattern, false, SearchLimits::default())
}

/// An induced minor model of `pattern` in `host`, if one exists.
pub fn find_induced_minor_model(
    host: &Graph,
    pattern: &Graph,
) -> Result<Option<InducedMinorModel>> {
    find_model_with(host, pattern, true, SearchLimits::default())?
        .map(InducedMinorModel::new)
        .transpose()
}

pub fn find_model_with(
    host: &Graph,
    pattern: &Graph,
    induced: bool,
    limits: SearchLimits,
) -> Result<Option<MinorModel>> {
    check_cap("host vertex count for minor search", BITSET_CAP, host.n())?;
    check_cap(
        "pattern vertex count for minor search",
        BITSET_CAP,
        pattern.n(),
    )?;
    if pattern.n() == 0 {
        return Ok(Some(MinorModel::empty(host.clone())));
    }
    if !counting_bounds_hold(host, pattern) {
        return Ok(None);
    }
    let mut search = Search::new(host, pattern, induced, limits)?;
    if search.place(0)? {
        let sets = search.sets.iter().map(|&s| bits(s).collect()).collect();
        let model = MinorModel::new(pattern.clone(), host.clone(), sets)?;
        debug_assert!(model.is_valid(induced));
        Ok(Some(model))
    } else {
        Ok(None)
    }
}

/// Necessary conditions for any minor model. A pattern vertex of degree at
/// least three needs a host vertex of degree at least three in its branch set,
/// since a connected set of vertices of degree at most two touches at most two
/// outside sets.
fn counting_bounds_hold(host: &Graph, pattern: &Graph) -> bool {
    let high = |g: &Graph| (0..g.n()).filter(|&v| g.degree(v) >= 3).count();
    pattern.n() <= host.n() && pattern.m() <= host.m() && high(pattern) <= high(host)
}

struct Search<'a> {
    hadj: Vec<u64>,
    pattern: &'a Graph,
    induced: bool,
    order: Vec<usize>,
    /// Branch set of each pattern vertex as a mask; 0 while unplaced.
    sets: Vec<u64>,
    /// Open neighbourhood of each placed branch set.
    reach: Vec<u64>,
    free: u64,
    steps: usize,
    max_steps: usize,
}

impl<'a> Search<'a> {
    fn new(host: &Graph, pattern: &'a Graph, induced: bool, limits: SearchLimits) -> Result<Self> {
        let hadj = host.adjacency_masks()?;
        let free = if host.n() == 64 {
            u64::MAX
        } else {
            (1u64 << host.n()) - 1
        };
        Ok(Search {
            hadj,
            pattern,
            induced,
            order: placement_order(pattern),
            sets: vec![0; pattern.n()],
            reach: vec![0; pattern.n()],
            free,
            steps: 0,
            max_steps: limits.max_steps,
        })
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(Error::ResourceLimit {
                what: "minor search steps",
                limit: self.max_steps,
                actual: self.steps,
            });
        }
        Ok(())
    }

    fn neighborhood(&self, set: u64) -> u64 {
        bits(set).fold(0u64, |acc, x| acc | self.hadj[x]) & !set
    }

    /// Host vertices pattern vertex `y` may still use.
    fn admissible(&self, y: usize) -> u64 {
        let mut allowed = self.free;
        if self.induced {
            for u in 0..self.pattern.n() {
                if u != y && self.sets[u] != 0 && !self.pattern.has_edge(u, y) {
                    allowed &= !self.reach[u];
                }
            }
        }
        allowed
    }

    fn placed_neighbors(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.pattern
            .neighbors(y)
            .iter()
            .copied()
            .filter(|&u| self.sets[u] != 0)
    }

    fn place(&mut self, i: usize) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let w = self.order[i];
        let allowed = self.admissible(w);
        let placed: Vec<usize> = self.placed_neighbors(w).collect();
        let anchors = placed
            .iter()
            .map(|&u| self.reach[u] & allowed)
            .min_by_key(|m| m.count_ones())
            .unwrap_or(allowed);
        let still_needed = self.order.len() - i - 1;
        let max_size = (self.free.count_ones() as usize).saturating_sub(still_needed);
        let job = Placement {
            index: i,
            w,
            placed,
        };
        for size in 1..=max_size {
            let mut any = false;
            for root in bits(anchors) {
                let lower_anchors = anchors & ((1u64 << root) - 1);
                let universe = allowed & !lower_anchors & !(1u64 << root);
                let start = 1u64 << root;
                let ext = self.hadj[root] & universe;
                let closed = start | self.hadj[root];
                if self.extend(&job, start, ext, closed, universe, size, &mut any)? {
                    return Ok(true);
                }
            }
            if !any {
                // no connected set of this size exists, so none larger does
                break;
            }
        }
        Ok(false)
    }

    /// ESU-style enumeration of connected sets containing the root, each
    /// produced once. `closed` is the closed neighbourhood of `current`.
    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        job: &Placement,
        current: u64,
        mut ext: u64,
        closed: u64,
        universe: u64,
        size: usize,
        any: &mut bool,
    ) -> Result<bool> {
        self.tick()?;
        if current.count_ones() as usize == size {
            *any = true;
            return self.try_set(job, current);
        }
        while ext != 0 {
            let x = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let exclusive = self.hadj[x] & universe & !closed;
            if self.extend(
                job,
                current | 1 << x,
                ext | exclusive,
                closed | self.hadj[x] | 1 << x,
                universe,
                size,
                any,
            )? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn try_set(&mut self, job: &Placement, set: u64) -> Result<bool> {
        let reach = self.neighborhood(set);
        if job.placed.iter().any(|&u| reach & self.sets[u] == 0) {
            return Ok(false);
        }
        let w = job.w;
        let open_needs = self
            .pattern
            .neighbors(w)
            .iter()
            .filter(|&&u| self.sets[u] == 0)
            .count();
        if ((reach & self.free & !set).count_ones() as usize) < open_needs {
            return Ok(false);
        }
        self.sets[w] = set;
        self.reach[w] = reach;
        self.free &= !set;
        if self.feasible(job.index + 1) && self.place(job.index + 1)? {
            return Ok(true);
        }
        self.sets[w] = 0;
        self.reach[w] = 0;
        self.free |= set;
        Ok(false)
    }

    fn feasible(&self, next: usize) -> bool {
        let remaining = &self.order[next..];
        if (self.free.count_ones() as usize) < remaining.len() {
            return false;
        }
        for u in 0..self.pattern.n() {
            if self.sets[u] == 0 {
                continue;
            }
            let open = self
                .pattern
                .neighbors(u)
                .iter()
                .filter(|&&y| self.sets[y] == 0)
                .count();
            if open > 0 && ((self.reach[u] & self.free).count_ones() as usize) < open {
                return false;
            }
        }
        for &y in remaining {
            let allowed = self.admissible(y);
            if allowed == 0 {
                return false;
            }
            let placed: Vec<usize> = self.placed_neighbors(y).collect();
            if placed.is_empty() {
                continue;
            }
            // some component of G[allowed] must touch every placed neighbour
            let mut seeds = self.reach[placed[0]] & allowed;
            let mut ok = false;
            while seeds != 0 {
                let s = seeds.trailing_zeros() as usize;
                let comp = self.component(s, allowed);
                seeds &= !comp;
                if placed.iter().all(|&u| self.reach[u] & comp != 0) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
        (0..self.pattern.n()).all(|u| self.sets[u] == 0 || self.entries_exist(u))
    }

    /// Every unplaced neighbour `y` of the placed vertex `u` will contain a
    /// vertex of `N(X_u)` that it is allowed to use. Those entry vertices are
    /// distinct, and in induced mode entries of non-adjacent pattern vertices
    /// are non-adjacent. Checks that such a choice of entries exists.
    fn entries_exist(&self, u: usize) -> bool {
        let open: Vec<(usize, u64)> = self
            .pattern
            .neighbors(u)
            .iter()
            .filter(|&&y| self.sets[y] == 0)
            .map(|&y| (y, self.reach[u] & self.admissible(y)))
            .collect();
        if open.len() > ENTRY_CHECK_CAP {
            return true;
        }
        let mut chosen = Vec::with_capacity(open.len());
        self.assign_entries(&open, &mut chosen)
    }

    fn assign_entries(&self, open: &[(usize, u64)], chosen: &mut Vec<(usize, usize)>) -> bool {
        let Some(&(y, candidates)) = open.get(chosen.len()) else {
            return true;
        };
        let mut options = candidates;
        for &(z, x) in chosen.iter() {
            options &= !(1u64 << x);
            if self.induced && !self.pattern.has_edge(y, z) {
                options &= !self.hadj[x];
            }
        }
        for x in bits(options) {
            chosen.push((y, x));
            if self.assign_entries(open, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn component(&self, start: usize, within: u64) -> u64 {
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let next = self.hadj[v] & within & !comp;
            comp |= next;
            frontier |= next;
        }
        comp
    }
}

struct Placement {
    index: usize,
    w: usize,
    placed: Vec<usize>,
}

/// Start from a vertex of largest degree; afterwards always take the vertex
/// with the most already-placed neighbours, breaking ties by larger degree and
/// then smaller label.
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let h = pattern.n();
    let mut placed = vec![false; h];
    let mut links = vec![0usize; h];
    let mut order = Vec::with_capacity(h);
    for _ in 0..h {
        let next = (0..h)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &u in pattern.neighbors(next) {
            links[u] += 1;
        }
    }
    order
}
