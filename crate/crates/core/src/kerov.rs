//! Kerov polynomials: change of basis from odd power sums to cumulant
//! generators, spin and symmetrized spin Kerov polynomials, ordinary Kerov
//! polynomials by exact interpolation, and the positivity and coefficient
//! comparison reports.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{OddMonomial, Scalar};
use crate::characters::ordinary_character_eval;
use crate::error::{Error, Result};
use crate::linalg::solve_exact;
use crate::measures::free_cumulants;
use crate::partitions::{enumerate, Partition, PartitionKind};
use crate::spin::{spin_character_poly, spin_free_cumulant_poly, symmetrized_cumulant_poly};
use crate::{Poly, Rational};

/// Which cumulant family a Kerov polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorFamily {
    /// Free cumulants `R_2, R_3, ...` of the transition measure.
    Ordinary,
    /// Spin free cumulants `r_2, r_4, ...` (half the even free cumulants of the double).
    Spin,
    /// Cumulants `T_2, T_4, ...` of the symmetrized double.
    Symmetrized,
}

impl GeneratorFamily {
    pub fn name(self) -> &'static str {
        match self {
            Self::Ordinary => "ordinary",
            Self::Spin => "spin",
            Self::Symmetrized => "symmetrized",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "ordinary" => Some(Self::Ordinary),
            "spin" => Some(Self::Spin),
            "symmetrized" => Some(Self::Symmetrized),
            _ => None,
        }
    }

    /// Text symbol for a generator.
    pub fn symbol(self) -> &'static str {
        match self {
            Self::Ordinary | Self::Spin => "R",
            Self::Symmetrized => "T",
        }
    }

    fn latex_symbol(self) -> &'static str {
        match self {
            Self::Ordinary => "R",
            Self::Spin => "\\mathfrak{R}",
            Self::Symmetrized => "\\mathtt{R}",
        }
    }

    /// Grading degree of the generator with the given subscript.
    pub fn generator_degree(self, subscript: u32) -> u32 {
        match self {
            Self::Ordinary => subscript,
            Self::Spin | Self::Symmetrized => subscript - 1,
        }
    }

    pub fn allows_subscript(self, subscript: u32) -> bool {
        match self {
            Self::Ordinary => subscript >= 2,
            Self::Spin | Self::Symmetrized => subscript >= 2 && subscript % 2 == 0,
        }
    }
}

/// Monomial in cumulant generators, stored as subscript -> exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GeneratorMonomial(BTreeMap<u32, u32>);

impl GeneratorMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_subscripts(subscripts: &[u32]) -> Self {
        let mut m = BTreeMap::new();
        for &s in subscripts {
            *m.entry(s).or_insert(0) += 1;
        }
        Self(m)
    }

    pub fn from_exponents<I: IntoIterator<Item = (u32, u32)>>(it: I) -> Self {
        Self(it.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn exponents(&self) -> &BTreeMap<u32, u32> {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Subscripts with multiplicity, largest first.
    pub fn subscripts(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (&s, &e) in self.0.iter().rev() {
            out.extend(std::iter::repeat_n(s, e as usize));
        }
        out
    }

    /// Sum of subscripts.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(s, e)| s * e).sum()
    }

    pub fn factor_count(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn degree(&self, family: GeneratorFamily) -> u32 {
        self.0
            .iter()
            .map(|(&s, &e)| family.generator_degree(s) * e)
            .sum()
    }

    pub fn is_linear(&self) -> bool {
        self.factor_count() == 1
    }

    /// Display order: larger weight first, then larger subscripts first.
    pub fn display_cmp(&self, other: &Self) -> Ordering {
        other
            .weight()
            .cmp(&self.weight())
            .then_with(|| other.subscripts().cmp(&self.subscripts()))
    }

    /// Text form such as `R4 R2^2`.
    pub fn render(&self, family: GeneratorFamily) -> String {
        self.subscripts_grouped()
            .map(|(s, e)| {
                if e == 1 {
                    format!("{}{s}", family.symbol())
                } else {
                    format!("{}{s}^{e}", family.symbol())
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn render_latex(&self, family: GeneratorFamily) -> String {
        self.subscripts_grouped()
            .map(|(s, e)| {
                if e == 1 {
                    format!("{}_{{{s}}}", family.latex_symbol())
                } else {
                    format!("{}_{{{s}}}^{{{e}}}", family.latex_symbol())
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn subscripts_grouped(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().rev().map(|(&s, &e)| (s, e))
    }
}

/// Polynomial in a cumulant family with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KerovPolynomial {
    pub family: GeneratorFamily,
    terms: BTreeMap<GeneratorMonomial, Rational>,
}

impl KerovPolynomial {
    pub fn zero(family: GeneratorFamily) -> Self {
        Self {
            family,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(family: GeneratorFamily, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GeneratorMonomial, Rational)>,
    {
        let mut out = Self::zero(family);
        for (m, c) in terms {
            if let Some(&s) = m.0.keys().find(|&&s| !family.allows_subscript(s)) {
                return Err(Error::InvalidArgument(format!(
                    "subscript {s} is not a {} generator",
                    family.name()
                )));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, m: GeneratorMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &GeneratorMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial with the given subscripts.
    pub fn coeff_of(&self, subscripts: &[u32]) -> Rational {
        self.coefficient(&GeneratorMonomial::from_subscripts(subscripts))
    }

    /// Terms in display order.
    pub fn sorted_terms(&self) -> Vec<(&GeneratorMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GeneratorMonomial, &Rational)> {
        self.terms.iter()
    }

    /// Grading degree in the family's grading; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree(self.family)).max()
    }

    /// Substitutes values for the generators, keyed by subscript.
    pub fn eval(&self, values: &BTreeMap<u32, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (&s, &e) in &m.0 {
                let v = values
                    .get(&s)
                    .ok_or_else(|| Error::InvalidArgument(format!("no value for generator {s}")))?;
                term *= v.pow_u32(e);
            }
            total += term;
        }
        Ok(total)
    }

    /// Rewrites the polynomial in odd power sums through `basis`.
    pub fn expand(&self, basis: &BasisFamily) -> Result<Poly> {
        let mut cache = ProductCache::default();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out = out.add(&cache.product(m, basis)?.scale(c));
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        render_terms(self, |m| m.render_latex(self.family), |c| latex_rational(c))
    }
}

fn latex_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn render_terms(
    p: &KerovPolynomial,
    monomial: impl Fn(&GeneratorMonomial) -> String,
    number: impl Fn(&Rational) -> String,
) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.sorted_terms().into_iter().enumerate() {
        let abs = c.abs();
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&number(&abs));
        } else if abs.is_one() {
            out.push_str(&monomial(m));
        } else {
            out.push_str(&number(&abs));
            out.push(' ');
            out.push_str(&monomial(m));
        }
    }
    out
}

impl fmt::Display for KerovPolynomial {
    /// E.g. `R8 + 70 R6 + 168 R4 R2 + 56 R2^3 + 469 R4 + 560 R2^2 + 180 R2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = render_terms(self, |m| m.render(self.family), Rational::to_string);
        f.write_str(&s)
    }
}

/// Generators of a triangular basis of the odd power-sum algebra; the
/// generator with subscript `2k` has top-degree part exactly `p_{2k-1}`.
#[derive(Clone, Debug)]
pub struct BasisFamily {
    pub family: GeneratorFamily,
    generators: BTreeMap<u32, Poly>,
}

impl BasisFamily {
    pub fn new(family: GeneratorFamily, generators: BTreeMap<u32, Poly>) -> Result<Self> {
        for (&s, g) in &generators {
            if !family.allows_subscript(s) || s % 2 == 1 {
                return Err(Error::InvalidArgument(format!(
                    "subscript {s} is not an even {} generator",
                    family.name()
                )));
            }
            let lead = g.homogeneous_part(s - 1);
            if g.degree() != Some(s - 1) || lead != Poly::p(s - 1) {
                return Err(Error::Internal(format!(
                    "generator {s} does not have leading term p{}",
                    s - 1
                )));
            }
        }
        Ok(Self { family, generators })
    }

    /// Spin free cumulants `r_2, ..., r_{max_subscript}`.
    pub fn spin(max_subscript: u32) -> Result<Self> {
        let gens = (2..=max_subscript)
            .step_by(2)
            .map(|s| spin_free_cumulant_poly(s).map(|p| (s, p)))
            .collect::<Result<_>>()?;
        Self::new(GeneratorFamily::Spin, gens)
    }

    /// Symmetrized-double cumulants `T_2, ..., T_{max_subscript}`.
    pub fn symmetrized(max_subscript: u32) -> Result<Self> {
        let gens = (2..=max_subscript)
            .step_by(2)
            .map(|s| symmetrized_cumulant_poly(s).map(|p| (s, p)))
            .collect::<Result<_>>()?;
        Self::new(GeneratorFamily::Symmetrized, gens)
    }

    pub fn generator(&self, subscript: u32) -> Result<&Poly> {
        self.generators
            .get(&subscript)
            .ok_or(Error::MissingBasisGenerator(subscript))
    }

    pub fn max_subscript(&self) -> u32 {
        self.generators.keys().next_back().copied().unwrap_or(0)
    }
}

#[derive(Default)]
struct ProductCache {
    products: HashMap<GeneratorMonomial, Poly>,
}

impl ProductCache {
    fn product(&mut self, m: &GeneratorMonomial, basis: &BasisFamily) -> Result<Poly> {
        if let Some(p) = self.products.get(m) {
            return Ok(p.clone());
        }
        let subs = m.subscripts();
        let result = match subs.split_last() {
            None => Poly::one(),
            Some((&last, rest)) => {
                let prefix = self.product(&GeneratorMonomial::from_subscripts(rest), basis)?;
                prefix.mul(basis.generator(last)?)
            }
        };
        self.products.insert(m.clone(), result.clone());
        Ok(result)
    }
}

/// Expresses `f` as a polynomial in the generators of a triangular basis by
/// repeatedly cancelling the top-degree component.
pub fn express_in_basis(f: &Poly, basis: &BasisFamily) -> Result<KerovPolynomial> {
    let mut cache = ProductCache::default();
    let mut residue = f.clone();
    let mut out = KerovPolynomial::zero(basis.family);
    while let Some(top) = residue.degree() {
        let mut step = Poly::zero();
        for (pm, c) in residue.homogeneous_part(top).terms() {
            let gm = generator_monomial_for(pm);
            for &s in gm.0.keys() {
                basis.generator(s)?;
            }
            step = step.add(&cache.product(&gm, basis)?.scale(c));
            out.add_term(gm, c.clone());
        }
        residue = residue.sub(&step);
        if residue.degree().is_some_and(|d| d >= top) {
            return Err(Error::Internal(format!(
                "elimination failed to lower degree {top}"
            )));
        }
    }
    if out.expand(basis)? != *f {
        return Err(Error::Internal(
            "basis expansion does not reproduce the input".into(),
        ));
    }
    Ok(out)
}

// p_{i1} p_{i2} ... -> g_{i1+1} g_{i2+1} ...
fn generator_monomial_for(m: &OddMonomial) -> GeneratorMonomial {
    GeneratorMonomial::from_exponents(m.factors().map(|(s, e)| (s + 1, e)))
}

fn check_odd(k: u32) -> Result<()> {
    if k % 2 == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "spin Kerov polynomials are indexed by odd k, got {k}"
        )));
    }
    Ok(())
}

/// `K^spin_k`: the spin character `p_k` (k odd) in spin free cumulants.
pub fn spin_kerov(k: u32) -> Result<KerovPolynomial> {
    check_odd(k)?;
    express_in_basis(&spin_character_poly(k)?, &BasisFamily::spin(k + 1)?)
}

/// The spin character `p_k` (k odd) in the symmetrized-double cumulants.
pub fn symmetrized_spin_kerov(k: u32) -> Result<KerovPolynomial> {
    check_odd(k)?;
    express_in_basis(&spin_character_poly(k)?, &BasisFamily::symmetrized(k + 1)?)
}

/// All multisets of subscripts from `2..=max_subscript` with weight at most
/// `max_weight`, the empty monomial included.
pub fn candidate_monomials(max_subscript: u32, max_weight: u32) -> Vec<GeneratorMonomial> {
    fn go(largest: u32, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<GeneratorMonomial>) {
        out.push(GeneratorMonomial::from_subscripts(cur));
        for s in (2..=largest.min(rest)).rev() {
            cur.push(s);
            go(s, rest - s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_subscript, max_weight, &mut Vec::new(), &mut out);
    out
}

struct Sample {
    cumulants: BTreeMap<u32, Rational>,
    character: Rational,
}

fn sample(k: u32, mu: &Partition) -> Result<Sample> {
    let cumulants = free_cumulants(mu, k + 1)
        .into_iter()
        .enumerate()
        .map(|(i, r)| (i as u32 + 2, r))
        .collect();
    Ok(Sample {
        cumulants,
        character: ordinary_character_eval(k, mu)?,
    })
}

fn monomial_value(m: &GeneratorMonomial, cumulants: &BTreeMap<u32, Rational>) -> Rational {
    m.exponents()
        .iter()
        .map(|(s, &e)| cumulants[s].pow_u32(e))
        .product()
}

fn samples_of_size(k: u32, n: u32) -> Result<Vec<Sample>> {
    enumerate(n, PartitionKind::All)
        .par_iter()
        .map(|mu| sample(k, mu))
        .collect()
}

/// Largest diagram size the interpolation pool may grow to for `K_k`.
pub fn interpolation_size_cap(k: u32) -> u32 {
    k + 6
}

/// `K_k` with `Ch_k = K_k(R_2, ..., R_{k+1})`, found by exact interpolation
/// over all diagrams of size up to `N`, `N` grown until the system in the
/// candidate monomials has a unique solution, and then checked on every
/// diagram of size `N + 1`.
pub fn ordinary_kerov(k: u32) -> Result<KerovPolynomial> {
    if k == 0 {
        return Err(Error::InvalidArgument("Kerov polynomials start at k = 1".into()));
    }
    let monomials = candidate_monomials(k + 1, k + 1);
    let cap = interpolation_size_cap(k);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    let mut solution = None;
    for n in 0..=cap {
        for s in samples_of_size(k, n)? {
            rows.push(monomials.iter().map(|m| monomial_value(m, &s.cumulants)).collect());
            rhs.push(s.character);
        }
        // cannot be full rank with fewer rows than unknowns
        if rows.len() < monomials.len() {
            continue;
        }
        match solve_exact(&rows, &rhs) {
            Ok(x) => {
                solution = Some((x, n));
                break;
            }
            Err(Error::RankDeficient { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    let (x, n) = solution.ok_or_else(|| {
        Error::Internal(format!(
            "interpolation for K_{k} still rank deficient at diagram size {cap}"
        ))
    })?;
    let poly = KerovPolynomial::from_terms(
        GeneratorFamily::Ordinary,
        monomials.into_iter().zip(x),
    )?;
    if let Some((m, _)) = poly.terms().find(|(m, _)| m.weight() % 2 != (k + 1) % 2) {
        return Err(Error::Internal(format!(
            "K_{k} has a term {} of the wrong parity",
            m.render(GeneratorFamily::Ordinary)
        )));
    }
    for s in samples_of_size(k, n + 1)? {
        if poly.eval(&s.cumulants)? != s.character {
            return Err(Error::Internal(format!(
                "K_{k} fails on a held-out diagram of size {}",
                n + 1
            )));
        }
    }
    Ok(poly)
}

/// Integrality and sign summary of one Kerov polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityRecord {
    pub k: u32,
    pub all_nonnegative: bool,
    pub all_integers: bool,
    pub offending: Vec<(GeneratorMonomial, Rational)>,
}

impl PositivityRecord {
    pub fn from_polynomial(k: u32, p: &KerovPolynomial) -> Self {
        let offending: Vec<_> = p
            .sorted_terms()
            .into_iter()
            .filter(|(_, c)| c.is_negative() || !c.is_integer())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Self {
            k,
            all_nonnegative: p.terms().all(|(_, c)| !c.is_negative()),
            all_integers: p.terms().all(|(_, c)| c.is_integer()),
            offending,
        }
    }

    pub fn holds(&self) -> bool {
        self.all_nonnegative && self.all_integers
    }
}

/// Kerov polynomial of the family at index `k`.
pub fn kerov_for(family: GeneratorFamily, k: u32) -> Result<KerovPolynomial> {
    match family {
        GeneratorFamily::Ordinary => ordinary_kerov(k),
        GeneratorFamily::Spin => spin_kerov(k),
        GeneratorFamily::Symmetrized => symmetrized_spin_kerov(k),
    }
}

/// Indices swept by [`positivity_report`]: odd `k` for the spin families,
/// every `k` for the ordinary one.
pub fn sweep_indices(max_k: u32, family: GeneratorFamily) -> Vec<u32> {
    match family {
        GeneratorFamily::Ordinary => (1..=max_k).collect(),
        _ => (1..=max_k).step_by(2).collect(),
    }
}

/// Checks nonnegativity and integrality of every coefficient for each swept `k`.
pub fn positivity_report(max_k: u32, family: GeneratorFamily) -> Result<Vec<PositivityRecord>> {
    sweep_indices(max_k, family)
        .into_iter()
        .map(|k| kerov_for(family, k).map(|p| PositivityRecord::from_polynomial(k, &p)))
        .collect()
}

/// [`positivity_report`] with the per-`k` work spread over a thread pool.
pub fn positivity_report_parallel(
    max_k: u32,
    family: GeneratorFamily,
) -> Result<Vec<PositivityRecord>> {
    sweep_indices(max_k, family)
        .into_par_iter()
        .map(|k| kerov_for(family, k).map(|p| PositivityRecord::from_polynomial(k, &p)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMatch {
    pub subscript: u32,
    pub ordinary: Rational,
    pub spin: Rational,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioEntry {
    pub monomial: GeneratorMonomial,
    pub spin: Rational,
    pub ordinary: Rational,
    /// `spin / ordinary`, absent when the ordinary coefficient vanishes.
    pub ratio: Option<Rational>,
    /// `2^{(number of factors) - 1}`.
    pub predicted: Rational,
    pub matches: bool,
}

/// Side-by-side comparison of `K_k` and `K^spin_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub k: u32,
    pub linear_matches: Vec<LinearMatch>,
    pub top_degree_ratios: Vec<RatioEntry>,
}

impl ComparisonReport {
    pub fn all_match(&self) -> bool {
        self.linear_matches.iter().all(|m| m.matches) && self.top_degree_ratios.iter().all(|r| r.matches)
    }
}

pub fn coincidence_report(k: u32) -> Result<ComparisonReport> {
    let ordinary = ordinary_kerov(k)?;
    let spin = spin_kerov(k)?;
    coincidence_report_from(k, &ordinary, &spin)
}

/// Compares linear coefficients of `R_{2j}` and the coefficients of the
/// even-subscript monomials of weight `k - 1`.
pub fn coincidence_report_from(
    k: u32,
    ordinary: &KerovPolynomial,
    spin: &KerovPolynomial,
) -> Result<ComparisonReport> {
    check_odd(k)?;
    if k < 3 {
        return Err(Error::InvalidArgument("comparison needs k >= 3".into()));
    }
    let linear_matches = (2..=k + 1)
        .step_by(2)
        .map(|s| {
            let o = ordinary.coeff_of(&[s]);
            let sp = spin.coeff_of(&[s]);
            LinearMatch {
                subscript: s,
                matches: o == sp,
                ordinary: o,
                spin: sp,
            }
        })
        .filter(|m| !(m.ordinary.is_zero() && m.spin.is_zero()))
        .collect();
    let mut top: Vec<GeneratorMonomial> = candidate_monomials(k - 1, k - 1)
        .into_iter()
        .filter(|m| m.weight() == k - 1 && m.exponents().keys().all(|s| s % 2 == 0))
        .filter(|m| !spin.coefficient(m).is_zero() || !ordinary.coefficient(m).is_zero())
        .collect();
    top.sort_by(|a, b| a.display_cmp(b));
    let top_degree_ratios = top
        .into_iter()
        .map(|m| {
            let s = spin.coefficient(&m);
            let o = ordinary.coefficient(&m);
            let ratio = (!o.is_zero()).then(|| &s / &o);
            let predicted = Rational::from_integer(num_bigint::BigInt::from(2).pow(m.factor_count() - 1));
            RatioEntry {
                matches: ratio.as_ref() == Some(&predicted),
                monomial: m,
                spin: s,
                ordinary: o,
                ratio,
                predicted,
            }
        })
        .collect();
    Ok(ComparisonReport {
        k,
        linear_matches,
        top_degree_ratios,
    })
}
