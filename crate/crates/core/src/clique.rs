//! Exact maximum pairwise non-commuting sets.
//!
//! Whether two elements commute depends only on their cosets of the center, so
//! the search runs on the non-commuting graph of `G/Z(G)` minus the identity
//! coset. Cliques are found with branch and bound using a greedy colouring
//! bound, vertices ordered by ascending coset representative.

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::subgroup::center;

pub const DEFAULT_CLIQUE_THRESHOLD: usize = 512;

/// Size of a largest set of pairwise non-commuting elements (1 for abelian groups).
pub fn max_noncommuting(g: &FiniteGroup) -> Result<usize> {
    max_noncommuting_with_threshold(g, DEFAULT_CLIQUE_THRESHOLD)
}

pub fn max_noncommuting_with_threshold(g: &FiniteGroup, threshold: usize) -> Result<usize> {
    Ok(max_noncommuting_set_with_threshold(g, threshold)?.len().max(1))
}

/// A witness set of pairwise non-commuting coset representatives. Empty for
/// abelian groups.
pub fn max_noncommuting_set(g: &FiniteGroup) -> Result<Vec<usize>> {
    max_noncommuting_set_with_threshold(g, DEFAULT_CLIQUE_THRESHOLD)
}

pub fn max_noncommuting_set_with_threshold(g: &FiniteGroup, threshold: usize) -> Result<Vec<usize>> {
    let z = center(g);
    let quotient_order = g.order() / z.size();
    if quotient_order > threshold {
        return Err(GroupError::ExceedsThreshold {
            what: "non-commuting clique search",
            size: quotient_order,
            threshold,
        });
    }
    let reps = noncentral_coset_reps(g, &z.bits().iter().collect::<Vec<_>>());
    let n = reps.len();
    let adjacency: Vec<ElementSet> = reps
        .iter()
        .map(|&x| ElementSet::from_indices(n, (0..n).filter(|&j| !g.commute(x, reps[j]))))
        .collect();
    let clique = max_clique(&adjacency);
    Ok(clique.into_iter().map(|v| reps[v]).collect())
}

/// Minimal representatives of the non-identity cosets of the center, after
/// checking that commuting is constant on each pair of cosets.
fn noncentral_coset_reps(g: &FiniteGroup, central: &[usize]) -> Vec<usize> {
    let mut seen = ElementSet::empty(g.order());
    for &z in central {
        seen.insert(z);
    }
    let mut reps = Vec::new();
    for x in g.elements() {
        if seen.contains(x) {
            continue;
        }
        reps.push(x);
        for &z in central {
            seen.insert(g.mul(x, z));
        }
    }
    for (i, &x) in reps.iter().enumerate() {
        for &y in &reps[i..] {
            let expected = g.commute(x, y);
            for &z1 in central {
                let xz = g.mul(x, z1);
                for &z2 in central {
                    assert_eq!(
                        g.commute(xz, g.mul(y, z2)),
                        expected,
                        "commuting is not a central-coset property"
                    );
                }
            }
        }
    }
    reps
}

/// Maximum clique of an undirected graph given as adjacency bitsets.
pub fn max_clique(adjacency: &[ElementSet]) -> Vec<usize> {
    let n = adjacency.len();
    let mut search = Search {
        adjacency,
        best: Vec::new(),
        current: Vec::new(),
    };
    let all: Vec<usize> = (0..n).collect();
    search.expand(all);
    let mut best = search.best;
    best.sort_unstable();
    best
}

struct Search<'a> {
    adjacency: &'a [ElementSet],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, candidates: Vec<usize>) {
        let (order, colors) = self.color_sort(&candidates);
        let mut remaining = candidates;
        for idx in (0..order.len()).rev() {
            if self.current.len() + colors[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            self.current.push(v);
            let next: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&u| self.adjacency[v].contains(u))
                .collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            remaining.retain(|&u| u != v);
        }
    }

    /// Greedy colouring in candidate order; returns vertices sorted by colour
    /// with the colour count bound at each position.
    fn color_sort(&self, candidates: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &v in candidates {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !self.adjacency[v].contains(u)))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(candidates.len());
        let mut colors = Vec::with_capacity(candidates.len());
        for (k, class) in classes.into_iter().enumerate() {
            for v in class {
                order.push(v);
                colors.push(k + 1);
            }
        }
        (order, colors)
    }
}
