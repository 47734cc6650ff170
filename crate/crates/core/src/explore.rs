//! Search over rooted lists of chordal graphs.
//!
//! A chordal graph admits many rooted lists: one per choice of simplicial
//! vertex and per ordering of its neighborhood blocks, at every recursion
//! level. The explorer enumerates them (deduplicated, capped), tests for each
//! list and each power s whether F = G and whether the rooted order yields
//! linear quotients, and summarizes the verdicts.

use std::collections::{HashMap, HashSet};
use std::path::{Path, PathBuf};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphFile};
use crate::lq::has_linear_quotients;
use crate::monomial::Monomial;
use crate::powers::min_gens_power_brute;
use crate::rooted::{sort_rooted, GeneratorList};

/// Default cap on the number of distinct rooted lists enumerated per graph.
pub const DEFAULT_LIST_CAP: usize = 16;

/// One resolved recursion step: the simplicial pick and the order in which
/// its neighbors' blocks were emitted. Steps are listed depth-first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub pick: usize,
    pub blocks: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct EnumeratedList {
    pub list: GeneratorList,
    pub script: Vec<Decision>,
}

#[derive(Clone, Debug)]
pub struct RootedListEnumeration {
    pub lists: Vec<EnumeratedList>,
    pub truncated: bool,
}

/// Enumerates distinct rooted lists of a chordal graph by varying the
/// simplicial pick and the block order at every recursion level,
/// depth-first, keeping at most `cap` lists.
pub fn enumerate_rooted_lists(g: &Graph, cap: usize) -> Result<RootedListEnumeration> {
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    let mut memo = HashMap::new();
    let (raw, truncated) = enum_rec(g, cap, &mut memo)?;
    let lists = raw
        .into_iter()
        .map(|(gens, script)| {
            Ok(EnumeratedList {
                list: GeneratorList::custom(gens, g.ambient())?,
                script,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RootedListEnumeration { lists, truncated })
}

type RawLists = Vec<(Vec<Monomial>, Vec<Decision>)>;
type GraphKey = (Vec<usize>, Vec<(usize, usize)>);

fn enum_rec(
    g: &Graph,
    cap: usize,
    memo: &mut HashMap<GraphKey, (RawLists, bool)>,
) -> Result<(RawLists, bool)> {
    if g.is_edgeless() {
        return Ok((vec![(vec![Monomial::one(g.ambient())], vec![])], false));
    }
    let key: GraphKey = (g.vertices().collect(), g.edges().collect());
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }

    let mut out: RawLists = Vec::new();
    let mut seen: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut truncated = false;
    let picks: Vec<usize> = g
        .simplicial_vertices()
        .into_iter()
        .filter(|&v| !g.neighborhood(v, false).expect("active vertex").is_empty())
        .collect();

    'outer: for pick in picks {
        let nbrs: Vec<usize> = g.neighborhood(pick, false)?.into_iter().collect();
        for perm in nbrs.iter().copied().permutations(nbrs.len()) {
            let blocks: Vec<usize> = std::iter::once(pick).chain(perm.iter().copied()).collect();
            let mut block_data = Vec::with_capacity(blocks.len());
            for &y in &blocks {
                let nbr_mono =
                    Monomial::from_support(g.neighborhood(y, false)?, g.ambient())?;
                let h = g.delete_vertices(&g.neighborhood(y, true)?)?;
                let (subs, sub_trunc) = enum_rec(&h, cap, memo)?;
                truncated |= sub_trunc;
                block_data.push((nbr_mono, subs));
            }
            let choice_iter = block_data
                .iter()
                .map(|(_, subs)| 0..subs.len())
                .multi_cartesian_product();
            for choice in choice_iter {
                let mut gens = Vec::new();
                let mut script = vec![Decision {
                    pick,
                    blocks: perm.clone(),
                }];
                for (bi, (nbr_mono, subs)) in block_data.iter().enumerate() {
                    let (sub_gens, sub_script) = &subs[choice[bi]];
                    for m in sub_gens {
                        gens.push(m.mul(nbr_mono)?);
                    }
                    script.extend(sub_script.iter().cloned());
                }
                let fingerprint: Vec<Vec<u32>> =
                    gens.iter().map(|m| m.exps().to_vec()).collect();
                if seen.insert(fingerprint) {
                    if out.len() == cap {
                        truncated = true;
                        break 'outer;
                    }
                    out.push((gens, script));
                }
            }
        }
    }

    memo.insert(key, (out.clone(), truncated));
    Ok((out, truncated))
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum TrialOutcome {
    Completed {
        f_equals_g: bool,
        lq_verdict: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        failure_witness: Option<String>,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Trial {
    pub list_index: usize,
    pub chooser: Vec<Decision>,
    pub s: u32,
    #[serde(flatten)]
    pub outcome: TrialOutcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExploreSummary {
    /// Every enumerated trial completed with linear quotients.
    AllPass,
    /// At least one enumerated list passed every power.
    FoundOrderPassingAllS,
    /// Every enumerated list failed for some power, with complete
    /// enumeration and no skipped cells.
    CounterexampleCandidate,
    /// No list passed every power, but enumeration was truncated or some
    /// cells were skipped.
    Inconclusive,
}

impl ExploreSummary {
    pub fn exit_code(self) -> i32 {
        match self {
            ExploreSummary::AllPass | ExploreSummary::FoundOrderPassingAllS => 0,
            ExploreSummary::CounterexampleCandidate => 2,
            ExploreSummary::Inconclusive => 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExploreReport {
    pub graph: GraphFile,
    pub max_s: u32,
    pub cap: usize,
    pub truncated: bool,
    pub trials: Vec<Trial>,
    pub summary: ExploreSummary,
}

impl ExploreReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Runs the full trial grid (rooted list x power) for one chordal graph.
/// Per-cell budget overruns become skipped cells, never fabricated verdicts.
pub fn explore(g: &Graph, max_s: u32, cap: usize) -> Result<ExploreReport> {
    let enumeration = enumerate_rooted_lists(g, cap)?;
    let mut trials = Vec::new();
    let mut any_skipped = false;
    let mut list_passes = vec![true; enumeration.lists.len()];

    for (idx, el) in enumeration.lists.iter().enumerate() {
        for s in 1..=max_s {
            let outcome = match run_cell(&el.list, s) {
                Ok((f_equals_g, lq_verdict, failure_witness)) => {
                    if !lq_verdict {
                        list_passes[idx] = false;
                    }
                    TrialOutcome::Completed {
                        f_equals_g,
                        lq_verdict,
                        failure_witness,
                    }
                }
                Err(
                    e @ (Error::ProductCap { .. }
                    | Error::CoverEnumerationCap { .. }
                    | Error::BudgetExceeded(_)),
                ) => {
                    any_skipped = true;
                    list_passes[idx] = false;
                    TrialOutcome::Skipped {
                        reason: e.to_string(),
                    }
                }
                Err(e) => return Err(e),
            };
            trials.push(Trial {
                list_index: idx,
                chooser: el.script.clone(),
                s,
                outcome,
            });
        }
    }

    let all_pass = !any_skipped && list_passes.iter().all(|&p| p);
    let summary = if all_pass {
        ExploreSummary::AllPass
    } else if list_passes.iter().any(|&p| p) {
        ExploreSummary::FoundOrderPassingAllS
    } else if !enumeration.truncated && !any_skipped {
        ExploreSummary::CounterexampleCandidate
    } else {
        ExploreSummary::Inconclusive
    };

    Ok(ExploreReport {
        graph: GraphFile {
            name: None,
            n: g.ambient(),
            edges: g.edges().collect(),
            seed: None,
        },
        max_s,
        cap,
        truncated: enumeration.truncated,
        trials,
        summary,
    })
}

fn run_cell(list: &GeneratorList, s: u32) -> Result<(bool, bool, Option<String>)> {
    let pg = min_gens_power_brute(list, s)?;
    let f_equals_g = pg.minimal == pg.all_products;
    let sorted = sort_rooted(&pg.minimal, list, s)?;
    let report = has_linear_quotients(&sorted);
    let witness = report.failure_index.map(|r| {
        let step = &report.steps[r - 2];
        format!(
            "colon ideal at r = {r} not variable-generated; survivors: [{}]",
            step.colon_vars.join(", ")
        )
    });
    Ok((f_equals_g, report.verdict, witness))
}

/// Random chordal graph by clique gluing: vertex v >= 2 attaches to a random
/// nonempty subset of a previously created clique, so every insertion is
/// simplicial. Deterministic for a fixed seed.
pub fn random_chordal_clique_gluing(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cliques: Vec<Vec<usize>> = vec![vec![1]];
    for v in 2..=n {
        let base = cliques[rng.random_range(0..cliques.len())].clone();
        let t = rng.random_range(1..=base.len());
        let mut pool = base;
        let mut attach = Vec::with_capacity(t);
        for _ in 0..t {
            let i = rng.random_range(0..pool.len());
            attach.push(pool.swap_remove(i));
        }
        for &u in &attach {
            edges.push((u.min(v), u.max(v)));
        }
        attach.push(v);
        attach.sort_unstable();
        cliques.push(attach);
    }
    Graph::new(n, edges).expect("clique gluing yields a simple graph")
}

/// Directory holding the shipped fixture graphs.
pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Loads the fixture corpus, sorted by file name.
pub fn load_fixture_corpus() -> Result<Vec<(String, GraphFile, Graph)>> {
    let dir = fixture_dir();
    let mut names: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|path| {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            let file: GraphFile =
                serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let graph = Graph::from_graph_file(&file)?;
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            Ok((name, file, graph))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::minimal_vertex_covers;
    use crate::graph::diamond;
    use crate::rooted::rooted_list_path;

    #[test]
    fn enumerates_both_endpoint_lists_for_p4() {
        let result = enumerate_rooted_lists(&Graph::path(4).unwrap(), 100).unwrap();
        assert!(!result.truncated);
        let lists: Vec<Vec<String>> = result
            .lists
            .iter()
            .map(|el| el.list.to_strings())
            .collect();
        assert!(lists.contains(&rooted_list_path(4).to_strings()));
        // Mirror list from vertex-1 picks.
        assert!(lists.contains(&vec![
            "x2*x4".to_string(),
            "x2*x3".to_string(),
            "x1*x3".to_string()
        ]));
        assert_eq!(lists.len(), 4);
    }

    #[test]
    fn enumerates_k3_starting_vertices() {
        let result = enumerate_rooted_lists(&Graph::complete(3).unwrap(), 100).unwrap();
        assert!(!result.truncated);
        // Three starting vertices, each with both orderings of the remaining
        // two blocks: six ordered lists in three classes by leading cover.
        assert_eq!(result.lists.len(), 6);
        let leading: std::collections::BTreeSet<String> = result
            .lists
            .iter()
            .map(|el| el.list.gens()[0].to_string())
            .collect();
        assert_eq!(leading.len(), 3);
    }

    #[test]
    fn enumerates_diamond_block_permutations() {
        let result = enumerate_rooted_lists(&diamond(), 100).unwrap();
        assert!(!result.truncated);
        let lists: Vec<Vec<String>> = result
            .lists
            .iter()
            .map(|el| el.list.to_strings())
            .collect();
        assert_eq!(
            lists,
            vec![
                vec!["x2*x3".to_string(), "x1*x3*x4".into(), "x1*x2*x4".into()],
                vec!["x2*x3".to_string(), "x1*x2*x4".into(), "x1*x3*x4".into()],
            ]
        );
        // Picks 1 and 4 produce the same two lists; the scripts retain the
        // first realization.
        assert_eq!(result.lists[0].script[0].pick, 1);
    }

    #[test]
    fn every_enumerated_list_is_a_generating_set() {
        for g in [
            Graph::path(6).unwrap(),
            Graph::complete(4).unwrap(),
            diamond(),
        ] {
            let covers = minimal_vertex_covers(&g).unwrap();
            let result = enumerate_rooted_lists(&g, 200).unwrap();
            assert!(!result.lists.is_empty());
            for el in &result.lists {
                assert_eq!(el.list.as_set(), covers, "list {:?}", el.list.to_strings());
            }
        }
    }

    #[test]
    fn truncation_flag_is_exact_at_the_cap() {
        // K_5 admits 5 * 4! = 120 distinct rooted lists.
        let full = enumerate_rooted_lists(&Graph::complete(5).unwrap(), 200).unwrap();
        assert!(!full.truncated);
        assert_eq!(full.lists.len(), 120);

        let capped = enumerate_rooted_lists(&Graph::complete(5).unwrap(), 120).unwrap();
        assert!(!capped.truncated);
        let capped = enumerate_rooted_lists(&Graph::complete(5).unwrap(), 119).unwrap();
        assert!(capped.truncated);
        assert_eq!(capped.lists.len(), 119);
    }

    #[test]
    fn explore_diamond_all_pass() {
        let report = explore(&diamond(), 3, 100).unwrap();
        assert_eq!(report.summary, ExploreSummary::AllPass);
        assert_eq!(report.summary.exit_code(), 0);
        for trial in &report.trials {
            match &trial.outcome {
                TrialOutcome::Completed {
                    f_equals_g,
                    lq_verdict,
                    ..
                } => {
                    assert!(f_equals_g);
                    assert!(lq_verdict);
                }
                TrialOutcome::Skipped { .. } => panic!("no cell should be skipped"),
            }
        }
    }

    #[test]
    fn explore_k3_passes() {
        let report = explore(&Graph::complete(3).unwrap(), 3, 100).unwrap();
        assert_eq!(report.summary, ExploreSummary::AllPass);
        // Equigenerated ideal: F = G in every cell.
        for trial in &report.trials {
            assert!(matches!(
                trial.outcome,
                TrialOutcome::Completed {
                    f_equals_g: true,
                    ..
                }
            ));
        }
    }

    #[test]
    fn explorer_trials_reproduce_main_theorem_verdicts() {
        // The trial whose list is R(P_n) must agree with the direct check.
        for n in 3..=7usize {
            let g = Graph::path(n).unwrap();
            let lists = enumerate_rooted_lists(&g, 64).unwrap();
            let path_gens = rooted_list_path(n);
            let idx = lists
                .lists
                .iter()
                .position(|el| el.list.gens() == path_gens.gens())
                .expect("the endpoint-n rooted list is enumerated");
            let report = explore(&g, 2, 64).unwrap();
            for s in 1..=2u32 {
                let trial = report
                    .trials
                    .iter()
                    .find(|t| t.list_index == idx && t.s == s)
                    .expect("trial cell exists");
                let TrialOutcome::Completed { lq_verdict, .. } = &trial.outcome else {
                    panic!("canonical cell must complete")
                };
                assert_eq!(
                    *lq_verdict,
                    crate::lq::verify_main_theorem(n, s).unwrap().verdict,
                    "n={n} s={s}"
                );
            }
        }
    }

    #[test]
    fn p8_has_rooted_lists_that_fail_for_powers() {
        // Mixed-endpoint recursions of P_8 give rooted lists whose rooted
        // order breaks linear quotients at s = 2, while the endpoint list
        // passes; the summary degrades from all-pass but stays exit 0.
        let report = explore(&Graph::path(8).unwrap(), 2, 16).unwrap();
        assert_eq!(report.summary, ExploreSummary::FoundOrderPassingAllS);
        assert_eq!(report.summary.exit_code(), 0);
        let failed = report.trials.iter().any(|t| {
            matches!(
                t.outcome,
                TrialOutcome::Completed {
                    lq_verdict: false,
                    ..
                }
            )
        });
        assert!(failed);
    }

    #[test]
    fn explore_rejects_non_chordal() {
        let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(explore(&c4, 2, 10).unwrap_err(), Error::NotChordal);
    }

    #[test]
    fn random_chordal_is_chordal_and_deterministic() {
        for seed in [1u64, 7, 7001, 7002] {
            let g = random_chordal_clique_gluing(7, seed);
            assert!(g.is_chordal(), "seed {seed}");
            assert_eq!(
                g,
                random_chordal_clique_gluing(7, seed),
                "seed {seed} must be reproducible"
            );
        }
    }

    #[test]
    fn explore_report_is_deterministic() {
        let a = explore(&diamond(), 2, 10).unwrap().to_json();
        let b = explore(&diamond(), 2, 10).unwrap().to_json();
        assert_eq!(a, b);
    }
}
