//! Exact monomial arithmetic over a fixed variable universe x_1..x_n.
//!
//! A [`Monomial`] is a dense exponent vector; the universe size is fixed per
//! computation context and all binary operations require matching universes.
//! [`MonomialSet`] keeps monomials deduplicated by exponent vector and iterates
//! in the canonical output order: ascending degree, then exponent vector in
//! descending lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial in the polynomial ring on `n` variables, stored as a dense
/// exponent vector. The unit monomial is the all-zeros vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    /// Builds a monomial from its exponent vector.
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Self { exps, degree }
    }

    /// The unit monomial `1` in a universe of `n_vars` variables.
    pub fn one(n_vars: usize) -> Self {
        Self {
            exps: vec![0; n_vars],
            degree: 0,
        }
    }

    /// The variable `x_i` (1-based) in a universe of `n_vars` variables.
    pub fn variable(i: usize, n_vars: usize) -> Result<Self> {
        if i == 0 || i > n_vars {
            return Err(Error::InvalidVertex {
                label: i,
                n: n_vars,
            });
        }
        let mut exps = vec![0; n_vars];
        exps[i - 1] = 1;
        Ok(Self { exps, degree: 1 })
    }

    /// The squarefree monomial with the given support (1-based labels).
    pub fn from_support<I: IntoIterator<Item = usize>>(support: I, n_vars: usize) -> Result<Self> {
        let mut exps = vec![0; n_vars];
        for i in support {
            if i == 0 || i > n_vars {
                return Err(Error::InvalidVertex {
                    label: i,
                    n: n_vars,
                });
            }
            exps[i - 1] = 1;
        }
        Ok(Self::new(exps))
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// 1-based labels of the variables dividing this monomial, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Re-embeds into a larger universe by padding with zero exponents.
    pub fn extend_universe(&self, n_vars: usize) -> Result<Self> {
        if n_vars < self.n_vars() {
            return Err(Error::UniverseMismatch {
                left: self.n_vars(),
                right: n_vars,
            });
        }
        let mut exps = self.exps.clone();
        exps.resize(n_vars, 0);
        Ok(Self {
            exps,
            degree: self.degree,
        })
    }

    fn check_universe(&self, other: &Self) -> Result<()> {
        if self.n_vars() != other.n_vars() {
            return Err(Error::UniverseMismatch {
                left: self.n_vars(),
                right: other.n_vars(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            exps,
            degree: self.degree + other.degree,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let exps = self.exps.iter().map(|e| e * k).collect();
        Self {
            exps,
            degree: self.degree * k,
        }
    }

    /// True iff `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_universe(other)?;
        if self.degree > other.degree {
            return Ok(false);
        }
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// Divides and is not equal.
    pub fn strictly_divides(&self, other: &Self) -> Result<bool> {
        Ok(self.divides(other)? && self != other)
    }

    /// The colon `self : other`, i.e. `self / gcd(self, other)`, with
    /// exponents `max(self_i - other_i, 0)`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.saturating_sub(*b))
            .collect();
        Ok(Self::new(exps))
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Ok(Self::new(exps))
    }

    /// Parses the text grammar `1` | factor (`*` factor)* with
    /// factor = `x<idx>` (`^<exp>`)?, e.g. `x1*x3^2`.
    pub fn parse(s: &str, n_vars: usize) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one(n_vars));
        }
        let mut exps = vec![0u32; n_vars];
        for factor in s.split('*') {
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("expected factor `x<idx>`, got `{factor}`")))?;
            let (idx_str, exp_str) = match rest.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (rest, None),
            };
            let idx: usize = idx_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in `{factor}`")))?;
            if idx == 0 || idx > n_vars {
                return Err(Error::InvalidVertex {
                    label: idx,
                    n: n_vars,
                });
            }
            let exp: u32 = match exp_str {
                Some(e) => e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                None => 1,
            };
            exps[idx - 1] += exp;
        }
        Ok(Self::new(exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Canonical output order: ascending degree, then exponent vector in
// descending lexicographic order. Equal only for equal exponent vectors.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite set of monomials, deduplicated by exponent vector and iterated in
/// the canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonomialSet {
    elems: BTreeSet<Monomial>,
}

impl MonomialSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, m: Monomial) -> bool {
        self.elems.insert(m)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.elems.contains(m)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.elems.iter()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.elems.iter().map(Monomial::degree).max()
    }

    /// The subset of elements not strictly divisible by any other element:
    /// the antichain of minimal generators of the ideal this set generates.
    pub fn minimalize(&self) -> MonomialSet {
        let mut survivors: Vec<&Monomial> = Vec::new();
        // Canonical order is graded, so all candidate strict divisors of an
        // element are processed before it.
        for m in &self.elems {
            let dominated = survivors
                .iter()
                .any(|v| v.degree() < m.degree() && v.divides(m).unwrap_or(false));
            if !dominated {
                survivors.push(m);
            }
        }
        MonomialSet {
            elems: survivors.into_iter().cloned().collect(),
        }
    }

    /// True iff the ideal generated by this set is generated by variables.
    /// The empty set counts as variable-generated.
    pub fn is_variable_generated(&self) -> bool {
        self.minimalize().iter().all(|m| m.degree() == 1)
    }

    /// Elements rendered in the canonical order.
    pub fn to_strings(&self) -> Vec<String> {
        self.elems.iter().map(|m| m.to_string()).collect()
    }
}

impl FromIterator<Monomial> for MonomialSet {
    fn from_iter<I: IntoIterator<Item = Monomial>>(iter: I) -> Self {
        Self {
            elems: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a MonomialSet {
    type Item = &'a Monomial;
    type IntoIter = std::collections::btree_set::Iter<'a, Monomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

impl IntoIterator for MonomialSet {
    type Item = Monomial;
    type IntoIter = std::collections::btree_set::IntoIter<Monomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.into_iter()
    }
}
