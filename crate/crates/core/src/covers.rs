//! Brute-force enumeration of minimal vertex covers and the cover ideal J(G).
//!
//! This is the ground-truth oracle the rooted-list constructions are checked
//! against: every cover is found by exhaustive search and minimality is
//! enforced by divisibility filtering, nothing clever.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{Monomial, MonomialSet};

/// Vertex-count guard for the exponential cover enumeration.
pub const DEFAULT_COVER_CAP: usize = 24;

/// The cover ideal J(G): the graph together with its minimal vertex covers
/// encoded as squarefree monomials over the ambient universe.
#[derive(Clone, Debug)]
pub struct CoverIdeal {
    graph: Graph,
    gens: MonomialSet,
}

impl CoverIdeal {
    pub fn of(graph: Graph) -> Result<Self> {
        let gens = minimal_vertex_covers(&graph)?;
        Ok(Self { graph, gens })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn gens(&self) -> &MonomialSet {
        &self.gens
    }
}

/// True iff the support of `m` meets every edge of `g`. Requires `m`
/// squarefree and over the ambient universe of `g`.
pub fn is_cover(g: &Graph, m: &Monomial) -> Result<bool> {
    if !m.is_squarefree() {
        return Err(Error::NotSquarefree(m.to_string()));
    }
    if m.n_vars() != g.ambient() {
        return Err(Error::UniverseMismatch {
            left: m.n_vars(),
            right: g.ambient(),
        });
    }
    Ok(g.edges()
        .all(|(i, j)| m.exponent(i) > 0 || m.exponent(j) > 0))
}

/// All inclusion-minimal vertex covers of `g` as squarefree monomials.
/// For an edgeless graph this is {1}, matching J(G) = (1).
pub fn minimal_vertex_covers(g: &Graph) -> Result<MonomialSet> {
    minimal_vertex_covers_capped(g, DEFAULT_COVER_CAP)
}

/// As [`minimal_vertex_covers`] with an explicit vertex-count cap.
pub fn minimal_vertex_covers_capped(g: &Graph, cap: usize) -> Result<MonomialSet> {
    if g.vertex_count() > cap {
        return Err(Error::CoverEnumerationCap {
            actual: g.vertex_count(),
            cap,
        });
    }
    if g.is_edgeless() {
        let mut out = MonomialSet::new();
        out.insert(Monomial::one(g.ambient()));
        return Ok(out);
    }

    // Isolated vertices never appear in a minimal cover.
    let candidates: Vec<usize> = g
        .vertices()
        .filter(|&v| !g.neighborhood(v, false).expect("active vertex").is_empty())
        .collect();
    let edges: Vec<(usize, usize)> = g.edges().collect();

    let mut covers = MonomialSet::new();
    let mut chosen: Vec<usize> = Vec::new();
    enumerate(g, &candidates, &edges, 0, &mut chosen, &mut covers)?;
    Ok(covers.minimalize())
}

// Depth-first subset search over `candidates[idx..]`. A branch stops as soon
// as the chosen set covers all edges (supersets cannot be minimal) and is
// pruned as soon as some edge can no longer be covered.
fn enumerate(
    g: &Graph,
    candidates: &[usize],
    edges: &[(usize, usize)],
    idx: usize,
    chosen: &mut Vec<usize>,
    covers: &mut MonomialSet,
) -> Result<()> {
    let is_covered = |e: &(usize, usize)| chosen.contains(&e.0) || chosen.contains(&e.1);
    if edges.iter().all(is_covered) {
        covers.insert(Monomial::from_support(chosen.iter().copied(), g.ambient())?);
        return Ok(());
    }
    if idx == candidates.len() {
        return Ok(());
    }
    // Prune: an uncovered edge whose endpoints were both passed over is fatal.
    let decided = &candidates[..idx];
    let dead = edges.iter().any(|&(a, b)| {
        !is_covered(&(a, b))
            && decided.contains(&a)
            && decided.contains(&b)
    });
    if dead {
        return Ok(());
    }

    chosen.push(candidates[idx]);
    enumerate(g, candidates, edges, idx + 1, chosen, covers)?;
    chosen.pop();
    enumerate(g, candidates, edges, idx + 1, chosen, covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::diamond;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn names(set: &MonomialSet) -> Vec<String> {
        set.to_strings()
    }

    #[test]
    fn p4_covers() {
        let covers = minimal_vertex_covers(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(names(&covers), vec!["x1*x3", "x2*x3", "x2*x4"]);
    }

    #[test]
    fn edgeless_graph_yields_unit() {
        let covers = minimal_vertex_covers(&Graph::edgeless(3)).unwrap();
        assert_eq!(names(&covers), vec!["1"]);
        // The empty graph as well.
        let covers = minimal_vertex_covers(&Graph::edgeless(0)).unwrap();
        assert_eq!(covers.len(), 1);
    }

    #[test]
    fn k3_covers() {
        let covers = minimal_vertex_covers(&Graph::complete(3).unwrap()).unwrap();
        assert_eq!(names(&covers), vec!["x1*x2", "x1*x3", "x2*x3"]);
    }

    #[test]
    fn diamond_covers() {
        let covers = minimal_vertex_covers(&diamond()).unwrap();
        assert_eq!(names(&covers), vec!["x2*x3", "x1*x2*x4", "x1*x3*x4"]);
    }

    #[test]
    fn is_cover_examples() {
        let p4 = Graph::path(4).unwrap();
        assert!(is_cover(&p4, &m("x2*x3", 4)).unwrap());
        assert!(!is_cover(&p4, &m("x1*x4", 4)).unwrap());
        assert!(is_cover(&p4, &m("x1*x2*x3*x4", 4)).unwrap());
        assert!(matches!(
            is_cover(&p4, &m("x2^2", 4)),
            Err(Error::NotSquarefree(_))
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::path(6).unwrap();
        assert!(matches!(
            minimal_vertex_covers_capped(&g, 5),
            Err(Error::CoverEnumerationCap { actual: 6, cap: 5 })
        ));
    }

    // Exhaustive-oracle consistency: enumerating every subset and
    // minimalizing gives the same answer as the pruned search.
    #[test]
    fn agrees_with_full_subset_enumeration() {
        for g in [
            Graph::path(7).unwrap(),
            Graph::complete(4).unwrap(),
            diamond(),
            Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap(),
        ] {
            let n = g.ambient();
            let mut all = MonomialSet::new();
            for mask in 0u32..(1 << n) {
                let support: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let mono = Monomial::from_support(support, n).unwrap();
                if is_cover(&g, &mono).unwrap() {
                    all.insert(mono);
                }
            }
            assert_eq!(all.minimalize(), minimal_vertex_covers(&g).unwrap());
        }
    }

    #[test]
    fn path_covers_use_exactly_one_of_last_two_vertices() {
        for n in 2..=14 {
            let covers = minimal_vertex_covers(&Graph::path(n).unwrap()).unwrap();
            for c in &covers {
                let last_two = c.exponent(n - 1) + c.exponent(n);
                assert_eq!(last_two, 1, "cover {c} of P_{n}");
            }
        }
    }

    #[test]
    fn covers_containing_last_vertex_project_into_smaller_path() {
        // Every cover of P_n containing x_n, divided by x_n, is divisible by
        // some cover of P_{n-2}.
        for n in 3..=14 {
            let covers_n = minimal_vertex_covers(&Graph::path(n).unwrap()).unwrap();
            let covers_sub = minimal_vertex_covers(&Graph::path(n - 2).unwrap()).unwrap();
            let sub: Vec<Monomial> = covers_sub
                .iter()
                .map(|v| v.extend_universe(n).unwrap())
                .collect();
            let xn = Monomial::variable(n, n).unwrap();
            for u in covers_n.iter().filter(|u| u.exponent(n) > 0) {
                let quotient = u.colon(&xn).unwrap();
                assert!(
                    sub.iter().any(|v| v.divides(&quotient).unwrap()),
                    "no divisor for {u} in P_{n}"
                );
            }
        }
    }

    #[test]
    fn cover_counts_follow_block_recursion() {
        let count = |n: usize| {
            minimal_vertex_covers(&Graph::path(n).unwrap())
                .unwrap()
                .len()
        };
        for n in 4..=14 {
            assert_eq!(count(n), count(n - 2) + count(n - 3), "n = {n}");
        }
    }
}
