//! Rooted lists and the rooted order.
//!
//! A rooted list is an ordered generating set for a cover ideal: for paths it
//! comes from the two-block recursion
//! R(P_n) = x_{n-1} R(P_{n-2}), x_n x_{n-2} R(P_{n-3}); for chordal graphs
//! from the simplicial-vertex neighborhood recursion. Monomials in a power of
//! the ideal are compared through their maximal expressions: the
//! lexicographically greatest exponent vector over the list that factors them.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::{Monomial, MonomialSet};

/// How an ordered generator list was constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    PathRooted { n: usize },
    ChordalRooted,
    Custom,
}

/// An ordered list of distinct monomials u_1 > u_2 > ... > u_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorList {
    gens: Vec<Monomial>,
    n_vars: usize,
    provenance: Provenance,
}

impl GeneratorList {
    /// An arbitrary ordered list; validates distinctness and universe
    /// consistency.
    pub fn custom(gens: Vec<Monomial>, n_vars: usize) -> Result<Self> {
        Self::with_provenance(gens, n_vars, Provenance::Custom)
    }

    fn with_provenance(gens: Vec<Monomial>, n_vars: usize, provenance: Provenance) -> Result<Self> {
        let mut seen = HashSet::new();
        for g in &gens {
            if g.n_vars() != n_vars {
                return Err(Error::UniverseMismatch {
                    left: g.n_vars(),
                    right: n_vars,
                });
            }
            if !seen.insert(g.exps().to_vec()) {
                return Err(Error::DuplicateGenerator(g.to_string()));
            }
        }
        Ok(Self {
            gens,
            n_vars,
            provenance,
        })
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.n_vars
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// 0-based position of a monomial in the list.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.gens.iter().position(|g| g == m)
    }

    /// The underlying unordered set.
    pub fn as_set(&self) -> MonomialSet {
        self.gens.iter().cloned().collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

/// The rooted list R(P_n). By convention R(P_0) = R(P_1) = 1.
pub fn rooted_list_path(n: usize) -> GeneratorList {
    let mut lists: Vec<Vec<Monomial>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let list = match k {
            0 | 1 => vec![Monomial::one(n)],
            2 => vec![var(1, n), var(2, n)],
            3 => vec![var(2, n), var(1, n).mul(&var(3, n)).unwrap()],
            _ => {
                let first = lists[k - 2]
                    .iter()
                    .map(|u| u.mul(&var(k - 1, n)).unwrap());
                let lift = var(k, n).mul(&var(k - 2, n)).unwrap();
                let second = lists[k - 3].iter().map(|v| v.mul(&lift).unwrap());
                first.chain(second).collect()
            }
        };
        lists.push(list);
    }
    GeneratorList::with_provenance(
        lists.pop().expect("list for n was pushed"),
        n,
        Provenance::PathRooted { n },
    )
    .expect("path recursion yields distinct generators")
}

fn var(i: usize, n: usize) -> Monomial {
    Monomial::variable(i, n).expect("index within path universe")
}

/// Strategy for resolving the simplicial-vertex choice in the chordal
/// recursion. `Canonical` always takes the smallest-label non-isolated
/// simplicial vertex and orders neighborhood blocks by ascending label.
/// `Script` consumes one pick per recursive call, depth-first, falling back
/// to canonical when exhausted. Exhaustive variation over picks and block
/// orders lives in the explorer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChordalChooser {
    Canonical,
    Script(Vec<usize>),
}

impl ChordalChooser {
    /// Parses the JSON chooser-script form: an array of vertex labels.
    pub fn from_json(s: &str) -> Result<Self> {
        let picks: Vec<usize> =
            serde_json::from_str(s).map_err(|e| Error::InvalidChooser(e.to_string()))?;
        Ok(Self::Script(picks))
    }
}

struct PickState {
    script: VecDeque<usize>,
}

impl PickState {
    fn next(&mut self, g: &Graph) -> Result<usize> {
        if let Some(v) = self.script.pop_front() {
            if !g.has_vertex(v) {
                return Err(Error::InvalidChooser(format!(
                    "scripted pick {v} is not a vertex of the current subgraph"
                )));
            }
            let nbrs = g.neighborhood(v, false)?;
            if nbrs.is_empty() {
                return Err(Error::InvalidChooser(format!(
                    "scripted pick {v} is isolated in the current subgraph"
                )));
            }
            if !g.simplicial_vertices().contains(&v) {
                return Err(Error::InvalidChooser(format!(
                    "scripted pick {v} is not simplicial in the current subgraph"
                )));
            }
            return Ok(v);
        }
        canonical_pick(g)
    }
}

fn canonical_pick(g: &Graph) -> Result<usize> {
    g.simplicial_vertices()
        .into_iter()
        .find(|&v| {
            !g.neighborhood(v, false)
                .expect("simplicial vertex is active")
                .is_empty()
        })
        .ok_or(Error::NotChordal)
}

/// The rooted list of a chordal graph: pick a simplicial vertex x, then for
/// each vertex y of N[x] (x first, remaining blocks per chooser order) emit
/// R(G \ N[y]) with every term multiplied by the product of y's neighbors in
/// the current graph. An edgeless graph contributes the single term 1.
pub fn rooted_list_chordal(g: &Graph, chooser: &ChordalChooser) -> Result<GeneratorList> {
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    let mut state = PickState {
        script: match chooser {
            ChordalChooser::Canonical => VecDeque::new(),
            ChordalChooser::Script(picks) => picks.iter().copied().collect(),
        },
    };
    let gens = build_chordal(g, &mut state)?;
    GeneratorList::with_provenance(gens, g.ambient(), Provenance::ChordalRooted)
}

fn build_chordal(g: &Graph, state: &mut PickState) -> Result<Vec<Monomial>> {
    if g.is_edgeless() {
        return Ok(vec![Monomial::one(g.ambient())]);
    }
    let pick = state.next(g)?;
    let mut blocks = vec![pick];
    blocks.extend(g.neighborhood(pick, false)?);

    let mut out = Vec::new();
    for &y in &blocks {
        let nbrs = g.neighborhood(y, false)?;
        let nbr_mono = Monomial::from_support(nbrs.iter().copied(), g.ambient())?;
        let h = g.delete_vertices(&g.neighborhood(y, true)?)?;
        for m in build_chordal(&h, state)? {
            out.push(m.mul(&nbr_mono)?);
        }
    }
    Ok(out)
}

/// One factorization of a monomial as an s-fold product: `counts[i]` is the
/// multiplicity of the (0-based) i-th generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    counts: Vec<u32>,
}

impl Expression {
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn s(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// 1-based generator positions with positive multiplicity.
    pub fn support(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn product(&self, list: &GeneratorList) -> Result<Monomial> {
        let mut out = Monomial::one(list.universe());
        for (g, &c) in list.gens().iter().zip(&self.counts) {
            if c > 0 {
                out = out.mul(&g.pow(c))?;
            }
        }
        Ok(out)
    }

    pub fn from_counts(counts: Vec<u32>) -> Self {
        Self { counts }
    }
}

/// The maximal expression of `m` as an s-fold product over `list`: the
/// lexicographically greatest count vector (a_1, ..., a_q) with sum s whose
/// product is `m`, or `None` when `m` is not an s-fold product.
///
/// Greedy search maximizing a_1, then a_2, ..., with failed
/// (residual, index, remaining) states memoized.
pub fn maximal_expression(m: &Monomial, list: &GeneratorList, s: u32) -> Option<Expression> {
    if m.n_vars() != list.universe() {
        return None;
    }
    let gens = list.gens();
    let q = gens.len();
    if q == 0 {
        return (s == 0 && m.is_one()).then(|| Expression { counts: vec![] });
    }

    // Degree bounds over each suffix of the generator list.
    let mut min_suffix = vec![0u32; q + 1];
    let mut max_suffix = vec![0u32; q + 1];
    min_suffix[q] = u32::MAX;
    for i in (0..q).rev() {
        min_suffix[i] = min_suffix[i + 1].min(gens[i].degree());
        max_suffix[i] = max_suffix[i + 1].max(gens[i].degree());
    }

    let mut failed: HashSet<(Vec<u32>, usize, u32)> = HashSet::new();
    search(gens, &min_suffix, &max_suffix, m, 0, s, &mut failed)
        .map(|counts| Expression { counts })
}

fn search(
    gens: &[Monomial],
    min_suffix: &[u32],
    max_suffix: &[u32],
    residual: &Monomial,
    idx: usize,
    t: u32,
    failed: &mut HashSet<(Vec<u32>, usize, u32)>,
) -> Option<Vec<u32>> {
    if t == 0 {
        return residual.is_one().then(|| vec![0; gens.len() - idx]);
    }
    if idx == gens.len() {
        return None;
    }
    let deg = residual.degree() as u64;
    let t64 = t as u64;
    if t64 * (min_suffix[idx] as u64) > deg || t64 * (max_suffix[idx] as u64) < deg {
        return None;
    }
    let key = (residual.exps().to_vec(), idx, t);
    if failed.contains(&key) {
        return None;
    }

    let g = &gens[idx];
    let cap = if g.is_one() {
        t
    } else {
        g.exps()
            .iter()
            .zip(residual.exps())
            .filter(|(&e, _)| e > 0)
            .map(|(&e, &r)| r / e)
            .min()
            .unwrap_or(0)
            .min(t)
    };

    // Largest multiplicity first: the first completion found is lex-greatest.
    let mut rem = Monomial::new(
        residual
            .exps()
            .iter()
            .zip(g.exps())
            .map(|(r, e)| r - cap * e)
            .collect(),
    );
    for a in (0..=cap).rev() {
        if let Some(tail) = search(gens, min_suffix, max_suffix, &rem, idx + 1, t - a, failed) {
            let mut counts = Vec::with_capacity(gens.len() - idx);
            counts.push(a);
            counts.extend(tail);
            return Some(counts);
        }
        if a > 0 {
            rem = rem.mul(g).expect("same universe");
        }
    }
    failed.insert(key);
    None
}

/// Compares two s-fold products under the rooted order: lexicographic
/// comparison of their maximal-expression count vectors. Errors when either
/// argument is not an s-fold product over `list`.
pub fn compare_rooted(
    m: &Monomial,
    other: &Monomial,
    list: &GeneratorList,
    s: u32,
) -> Result<std::cmp::Ordering> {
    let em = maximal_expression(m, list, s)
        .ok_or_else(|| Error::NotPowerProduct(m.to_string()))?;
    let eo = maximal_expression(other, list, s)
        .ok_or_else(|| Error::NotPowerProduct(other.to_string()))?;
    Ok(em.counts.cmp(&eo.counts))
}

/// All elements of `set` paired with their maximal expressions, sorted in
/// strictly decreasing rooted order.
pub fn rooted_sorted_with_expressions(
    set: &MonomialSet,
    list: &GeneratorList,
    s: u32,
) -> Result<Vec<(Monomial, Expression)>> {
    let mut items: Vec<(Monomial, Expression)> = set
        .iter()
        .map(|m| {
            maximal_expression(m, list, s)
                .map(|e| (m.clone(), e))
                .ok_or_else(|| Error::NotPowerProduct(m.to_string()))
        })
        .collect::<Result<_>>()?;
    items.sort_by(|(_, a), (_, b)| b.counts.cmp(&a.counts));
    Ok(items)
}

/// Elements of `set` in strictly decreasing rooted order.
pub fn sort_rooted(set: &MonomialSet, list: &GeneratorList, s: u32) -> Result<GeneratorList> {
    let items = rooted_sorted_with_expressions(set, list, s)?;
    GeneratorList::custom(items.into_iter().map(|(m, _)| m).collect(), list.universe())
}
