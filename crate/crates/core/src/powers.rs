//! Minimal generators of powers of a cover ideal.
//!
//! F(I^s) is the set of all s-fold products of the base generators and
//! G(I^s) its divisibility-minimal subset. Two routes compute G(I^s): the
//! brute-force oracle (enumerate, minimalize) and, for path-rooted lists, the
//! pairwise characterization: an s-fold product is minimal exactly when every
//! pair of its factors is a minimal 2-fold product.

use itertools::Itertools;
use serde::Serialize;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialSet};
use crate::rooted::{maximal_expression, rooted_list_path, GeneratorList, Provenance};

/// Guard on the number of s-multisets enumerated per call.
pub const DEFAULT_PRODUCT_CAP: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Pairs,
}

/// F(I^s) and G(I^s) for one base list and power.
#[derive(Clone, Debug)]
pub struct PowerGens {
    pub base: GeneratorList,
    pub s: u32,
    pub all_products: MonomialSet,
    pub minimal: MonomialSet,
    pub method: Method,
    /// Number of s-multisets of generator indices whose product is not a
    /// minimal generator.
    pub excluded_multisets: u64,
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut out: u128 = 1;
    for i in 0..k {
        out = out.saturating_mul(n - i) / (i + 1);
    }
    out
}

/// Number of s-multisets over q generators, C(q+s-1, s).
pub fn multiset_count(q: usize, s: u32) -> u128 {
    if q == 0 {
        return if s == 0 { 1 } else { 0 };
    }
    binomial(q as u128 + s as u128 - 1, s as u128)
}

fn guard_products(q: usize, s: u32, cap: u128) -> Result<()> {
    let count = multiset_count(q, s);
    if count > cap {
        return Err(Error::ProductCap { count, cap });
    }
    Ok(())
}

/// All distinct monomials arising as products of `s` generators of `list`
/// with repetition.
pub fn s_fold_products(list: &GeneratorList, s: u32) -> Result<MonomialSet> {
    s_fold_products_capped(list, s, DEFAULT_PRODUCT_CAP)
}

pub fn s_fold_products_capped(list: &GeneratorList, s: u32, cap: u128) -> Result<MonomialSet> {
    guard_products(list.len(), s, cap)?;
    let mut out = MonomialSet::new();
    for combo in (0..list.len()).combinations_with_replacement(s as usize) {
        out.insert(product_of(list, &combo));
    }
    Ok(out)
}

fn product_of(list: &GeneratorList, combo: &[usize]) -> Monomial {
    let mut prod = Monomial::one(list.universe());
    for &i in combo {
        prod = prod.mul(&list.gens()[i]).expect("same universe");
    }
    prod
}

/// G(I^s) by the definition: minimalize F(I^s).
pub fn min_gens_power_brute(list: &GeneratorList, s: u32) -> Result<PowerGens> {
    min_gens_power_brute_capped(list, s, DEFAULT_PRODUCT_CAP)
}

pub fn min_gens_power_brute_capped(
    list: &GeneratorList,
    s: u32,
    cap: u128,
) -> Result<PowerGens> {
    guard_products(list.len(), s, cap)?;
    let mut all_products = MonomialSet::new();
    let mut multisets: Vec<Vec<usize>> = Vec::new();
    for combo in (0..list.len()).combinations_with_replacement(s as usize) {
        all_products.insert(product_of(list, &combo));
        multisets.push(combo);
    }
    let minimal = all_products.minimalize();
    let excluded_multisets = multisets
        .iter()
        .filter(|combo| !minimal.contains(&product_of(list, combo)))
        .count() as u64;
    Ok(PowerGens {
        base: list.clone(),
        s,
        all_products,
        minimal,
        method: Method::Brute,
        excluded_multisets,
    })
}

/// Pairs (p, q) of 1-based generator positions whose product u_p u_q is not
/// a minimal generator of the second power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadPairTable {
    pairs: BTreeSet<(usize, usize)>,
}

impl BadPairTable {
    /// 1-based position pairs, p <= q, ascending.
    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn is_bad(&self, p: usize, q: usize) -> bool {
        self.pairs.contains(&(p.min(q), p.max(q)))
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Marks (p, q) bad iff u_p u_q is strictly divisible by some 2-fold product.
pub fn bad_pair_table(list: &GeneratorList) -> Result<BadPairTable> {
    let f2 = s_fold_products(list, 2)?;
    let mut pairs = BTreeSet::new();
    for p in 0..list.len() {
        for q in p..list.len() {
            let prod = list.gens()[p].mul(&list.gens()[q])?;
            let dominated = f2.iter().any(|w| {
                w.degree() < prod.degree() && w.divides(&prod).expect("same universe")
            });
            if dominated {
                pairs.insert((p + 1, q + 1));
            }
        }
    }
    Ok(BadPairTable { pairs })
}

/// G(I^s) by the pairwise characterization: keep exactly the s-multisets in
/// which every pair of factor positions (counting multiplicity) avoids the
/// bad-pair table. Only valid for path-rooted lists.
pub fn min_gens_power_pairs(list: &GeneratorList, s: u32) -> Result<PowerGens> {
    min_gens_power_pairs_capped(list, s, DEFAULT_PRODUCT_CAP)
}

pub fn min_gens_power_pairs_capped(
    list: &GeneratorList,
    s: u32,
    cap: u128,
) -> Result<PowerGens> {
    if !matches!(list.provenance(), Provenance::PathRooted { .. }) {
        return Err(Error::PairsRequiresPathList);
    }
    guard_products(list.len(), s, cap)?;
    let table = bad_pair_table(list)?;
    let mut all_products = MonomialSet::new();
    let mut minimal = MonomialSet::new();
    let mut excluded_multisets = 0u64;
    for combo in (0..list.len()).combinations_with_replacement(s as usize) {
        let prod = product_of(list, &combo);
        let good = combo
            .iter()
            .enumerate()
            .all(|(t, &p)| combo[t + 1..].iter().all(|&q| !table.is_bad(p + 1, q + 1)));
        if good {
            minimal.insert(prod.clone());
        } else {
            excluded_multisets += 1;
        }
        all_products.insert(prod);
    }
    Ok(PowerGens {
        base: list.clone(),
        s,
        all_products,
        minimal,
        method: Method::Pairs,
        excluded_multisets,
    })
}

/// Outcome of one structural check.
#[derive(Clone, Debug, Serialize)]
pub struct ClauseResult {
    pub clause: String,
    pub description: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl ClauseResult {
    fn pass(clause: &str, description: &str) -> Self {
        Self {
            clause: clause.into(),
            description: description.into(),
            pass: true,
            counterexample: None,
        }
    }

    fn fail(clause: &str, description: &str, witness: String) -> Self {
        Self {
            clause: clause.into(),
            description: description.into(),
            pass: false,
            counterexample: Some(witness),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureLemmaReport {
    pub n: usize,
    pub s: u32,
    pub pass: bool,
    pub clauses: Vec<ClauseResult>,
}

const LEMMA_BUDGET_N: usize = 10;
const LEMMA_BUDGET_S: u32 = 4;

/// Exhaustively verifies the block and reduction structure of G(J(P_n)^s):
/// (a) the x_{n-1}^s block embeds F/G of P_{n-2} preserving order and
/// minimality, (b) likewise the x_n^s x_{n-2}^s block for P_{n-3}, (c) the
/// factors of a minimal mixed product project to minimal generators (and
/// maximal expressions project to maximal expressions), (d) every non-minimal
/// product has a rooted-greater minimal divisor, (e) every non-minimal
/// product contains a bad pair among its factors.
pub fn check_structure_lemmas(n: usize, s: u32) -> Result<StructureLemmaReport> {
    if n > LEMMA_BUDGET_N || s > LEMMA_BUDGET_S {
        return Err(Error::BudgetExceeded(format!(
            "check_structure_lemmas supports n <= {LEMMA_BUDGET_N}, s <= {LEMMA_BUDGET_S}, got ({n}, {s})"
        )));
    }
    let full = rooted_list_path(n);
    let f_full = s_fold_products(&full, s)?;
    let g_full = f_full.minimalize();

    let clauses = vec![
        check_pure_block(n, s, &full, &f_full, &g_full, BlockSide::First)?,
        check_pure_block(n, s, &full, &f_full, &g_full, BlockSide::Second)?,
        check_mixed_products(n, s, &full, &g_full)?,
        check_minimal_divisor_above(s, &full, &f_full, &g_full),
        check_bad_pair_coverage(s, &full, &g_full)?,
    ];

    let pass = clauses.iter().all(|c| c.pass);
    Ok(StructureLemmaReport { n, s, pass, clauses })
}

enum BlockSide {
    First,
    Second,
}

fn check_pure_block(
    n: usize,
    s: u32,
    full: &GeneratorList,
    f_full: &MonomialSet,
    g_full: &MonomialSet,
    side: BlockSide,
) -> Result<ClauseResult> {
    let (clause, desc, sub_n, min_n) = match side {
        BlockSide::First => ("a", "x_{n-1}^s block mirrors P_{n-2}", n.saturating_sub(2), 3),
        BlockSide::Second => (
            "b",
            "x_n^s x_{n-2}^s block mirrors P_{n-3}",
            n.saturating_sub(3),
            4,
        ),
    };
    if n < min_n {
        return Ok(ClauseResult::pass(clause, desc));
    }
    let sub = rooted_list_path(sub_n);
    let f_sub = s_fold_products(&sub, s)?;
    let g_sub = f_sub.minimalize();
    let multiplier = match side {
        BlockSide::First => Monomial::variable(n - 1, n)?.pow(s),
        BlockSide::Second => Monomial::variable(n, n)?
            .mul(&Monomial::variable(n - 2, n)?)?
            .pow(s),
    };
    let lift = |u: &Monomial| -> Monomial {
        u.extend_universe(n)
            .and_then(|e| e.mul(&multiplier))
            .expect("lift into the larger universe")
    };

    // Membership in both directions.
    for u in &f_sub {
        if !f_full.contains(&lift(u)) {
            return Ok(ClauseResult::fail(
                clause,
                desc,
                format!("{u} lifts outside F(J(P_{n})^{s})"),
            ));
        }
    }
    let lifted: MonomialSet = f_sub.iter().map(&lift).collect();
    for w in f_full {
        let divisible = multiplier.divides(w).expect("same universe");
        if divisible && !lifted.contains(w) {
            return Ok(ClauseResult::fail(
                clause,
                desc,
                format!("{w} is divisible by the block multiplier but is not a lift"),
            ));
        }
    }

    // Rooted order is preserved: the two sorted sequences correspond.
    let sorted_sub = crate::rooted::rooted_sorted_with_expressions(&f_sub, &sub, s)?;
    let lifted_sorted = crate::rooted::rooted_sorted_with_expressions(&lifted, full, s)?;
    for ((u, _), (w, _)) in sorted_sub.iter().zip(&lifted_sorted) {
        if &lift(u) != w {
            return Ok(ClauseResult::fail(
                clause,
                desc,
                format!("rooted order of {u} not preserved under the lift"),
            ));
        }
    }

    // Minimality transfers in both directions.
    for u in &f_sub {
        if g_sub.contains(u) != g_full.contains(&lift(u)) {
            return Ok(ClauseResult::fail(
                clause,
                desc,
                format!("minimality of {u} changes under the lift"),
            ));
        }
    }
    Ok(ClauseResult::pass(clause, desc))
}

fn check_mixed_products(
    n: usize,
    s: u32,
    full: &GeneratorList,
    g_full: &MonomialSet,
) -> Result<ClauseResult> {
    let clause = "c";
    let desc = "minimal mixed products have minimal, maximal-expression projections";
    if n < 4 {
        return Ok(ClauseResult::pass(clause, desc));
    }
    let sub_a = rooted_list_path(n - 2);
    let sub_b = rooted_list_path(n - 3);
    let a = sub_a.len();

    // G and maximal expressions of every split power of the two subpaths.
    let mut g_a: Vec<MonomialSet> = Vec::new();
    let mut g_b: Vec<MonomialSet> = Vec::new();
    for t in 0..=s {
        g_a.push(s_fold_products(&sub_a, t)?.minimalize());
        g_b.push(s_fold_products(&sub_b, t)?.minimalize());
    }

    for combo in (0..full.len()).combinations_with_replacement(s as usize) {
        let k_b = combo.iter().filter(|&&i| i >= a).count() as u32;
        let k_a = s - k_b;
        if k_a == 0 || k_b == 0 {
            continue;
        }
        let w = product_of(full, &combo);
        let u_pre = combo
            .iter()
            .filter(|&&i| i < a)
            .fold(Monomial::one(n - 2), |acc, &i| {
                acc.mul(&sub_a.gens()[i]).expect("same universe")
            });
        let v_pre = combo
            .iter()
            .filter(|&&i| i >= a)
            .fold(Monomial::one(n - 3), |acc, &i| {
                acc.mul(&sub_b.gens()[i - a]).expect("same universe")
            });

        if g_full.contains(&w) {
            if !g_a[k_a as usize].contains(&u_pre) {
                return Ok(ClauseResult::fail(
                    clause,
                    desc,
                    format!("{w} minimal but first-block projection {u_pre} is not"),
                ));
            }
            if !g_b[k_b as usize].contains(&v_pre) {
                return Ok(ClauseResult::fail(
                    clause,
                    desc,
                    format!("{w} minimal but second-block projection {v_pre} is not"),
                ));
            }
        }

        // If this multiset is the maximal expression of w, both projections
        // must be maximal expressions too.
        let mut counts = vec![0u32; full.len()];
        for &i in &combo {
            counts[i] += 1;
        }
        let max_expr = maximal_expression(&w, full, s).expect("w is an s-fold product");
        if max_expr.counts() == counts.as_slice() {
            let ea = maximal_expression(&u_pre, &sub_a, k_a).expect("projection is a product");
            if ea.counts() != &counts[..a] {
                return Ok(ClauseResult::fail(
                    clause,
                    desc,
                    format!("maximal expression of {w} does not project maximally to {u_pre}"),
                ));
            }
            let eb = maximal_expression(&v_pre, &sub_b, k_b).expect("projection is a product");
            if eb.counts() != &counts[a..] {
                return Ok(ClauseResult::fail(
                    clause,
                    desc,
                    format!("maximal expression of {w} does not project maximally to {v_pre}"),
                ));
            }
        }
    }
    Ok(ClauseResult::pass(clause, desc))
}

fn check_minimal_divisor_above(
    s: u32,
    full: &GeneratorList,
    f_full: &MonomialSet,
    g_full: &MonomialSet,
) -> ClauseResult {
    let clause = "d";
    let desc = "every non-minimal product has a rooted-greater minimal divisor";
    let expr_of = |m: &Monomial| {
        maximal_expression(m, full, s)
            .expect("element of F(I^s)")
            .counts()
            .to_vec()
    };
    for u in f_full {
        if g_full.contains(u) {
            continue;
        }
        let cu = expr_of(u);
        let witness = g_full.iter().any(|v| {
            v.strictly_divides(u).expect("same universe") && expr_of(v) > cu
        });
        if !witness {
            return ClauseResult::fail(
                clause,
                desc,
                format!("{u} has no rooted-greater minimal divisor"),
            );
        }
    }
    ClauseResult::pass(clause, desc)
}

fn check_bad_pair_coverage(
    s: u32,
    full: &GeneratorList,
    g_full: &MonomialSet,
) -> Result<ClauseResult> {
    let clause = "e";
    let desc = "every non-minimal product contains a bad factor pair";
    let table = bad_pair_table(full)?;
    for combo in (0..full.len()).combinations_with_replacement(s as usize) {
        let prod = product_of(full, &combo);
        if g_full.contains(&prod) {
            continue;
        }
        let has_bad = combo
            .iter()
            .enumerate()
            .any(|(t, &p)| combo[t + 1..].iter().any(|&q| table.is_bad(p + 1, q + 1)));
        if !has_bad {
            return Ok(ClauseResult::fail(
                clause,
                desc,
                format!("non-minimal {prod} with factor positions {combo:?} has no bad pair"),
            ));
        }
    }
    Ok(ClauseResult::pass(clause, desc))
}
