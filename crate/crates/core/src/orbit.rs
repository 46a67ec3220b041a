//! Length-graded Weyl group enumeration by breadth-first search over the
//! orbit of a dominant weight.
//!
//! For a strictly dominant seed such as `ρ` the map `w ↦ w(ρ)` is injective,
//! so orbit points at depth `k` are exactly the elements of length `k`.
//! For the seed `μ_J = Σ_{i∉J} ω_i` the stabilizer is the parabolic
//! subgroup `W_J` and orbit points at depth `k` are the minimal coset
//! representatives of length `k`.
//!
//! If `x = w(μ)` then `x_i > 0` exactly when `σ_i w` is a longer minimal
//! representative than `w`, `x_i = 0` when `σ_i` fixes `x`, and `x_i < 0`
//! when `σ_i` is a left descent. Both strategies below rest on this.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::{self, KnownType};
use crate::error::{Error, Result};
use crate::lattice::{self, reflect_in_place, GeneralizedCartanMatrix, SubsetJ, WeightVector};
use crate::polyseries::{self, ConvolutionReport, TruncatedSeries};

/// Rough memory ceiling used to size the default frontier budget.
pub const DEFAULT_MEMORY_BYTES: usize = 8 << 30;

/// Longest descent walk [`canonical_word`] will attempt.
pub const DEFAULT_WALK_BUDGET: usize = 1 << 20;

/// Default cap on stored weights for an algebra of the given rank.
pub fn default_max_frontier(rank: usize) -> usize {
    // coordinates plus one sort index per stored weight
    DEFAULT_MEMORY_BYTES / (8 * rank.max(1) + 8)
}

/// How levels are deduplicated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Expand `x` by `σ_i` only when `x_i > 0`; deduplicate within the new
    /// level. Keeps two levels in memory.
    #[default]
    FrontierSign,
    /// Apply every `σ_i`, keep images never seen at any earlier level.
    GlobalDedup,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::FrontierSign => "frontier",
            Strategy::GlobalDedup => "global",
        })
    }
}

/// Word `Σ(i_1, …, i_k) = σ_{i_1} ⋯ σ_{i_k}` in 1-based generator labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word for the inverse element.
    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `σ_{i_1}(⋯ σ_{i_k}(x))`: the rightmost letter acts first.
    pub fn act_on(&self, a: &GeneralizedCartanMatrix, x: &WeightVector) -> Result<WeightVector> {
        if x.len() != a.rank() {
            return Err(Error::RankMismatch {
                got: x.len(),
                rank: a.rank(),
            });
        }
        let mut out = x.clone();
        for &i in self.0.iter().rev() {
            let i = a.check_generator(i)?;
            reflect_in_place(a, &mut out.0, i)?;
        }
        Ok(out)
    }
}

/// One enumerated orbit point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementRecord {
    pub image: WeightVector,
    pub word: ReducedWord,
}

/// Result of an orbit enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitLevels {
    /// `counts[k]` = number of orbit points at depth `k`. Ends at the last
    /// non-empty level when the orbit is finite.
    pub counts: Vec<u64>,
    pub seed: WeightVector,
    pub max_level: Option<usize>,
    /// The orbit ran out before `max_level`: the enumeration is complete.
    pub terminated: bool,
    /// Per-level records ordered by word, when requested.
    pub elements: Option<Vec<Vec<ElementRecord>>>,
}

impl OrbitLevels {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Counts as a series through `order`, zero-padded past termination.
    pub fn series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::new((0..=order).map(|k| self.counts.get(k).map_or(0, |&c| c as i64)).collect())
    }
}

/// Sorted, duplicate-free set of weights stored contiguously.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Points {
    rank: usize,
    data: Vec<i64>,
}

impl Points {
    fn single(x: &[i64]) -> Self {
        Self {
            rank: x.len(),
            data: x.to_vec(),
        }
    }

    fn len(&self) -> usize {
        self.data.len() / self.rank.max(1)
    }

    fn iter(&self) -> impl Iterator<Item = &[i64]> + '_ {
        self.data.chunks_exact(self.rank)
    }

    fn sorted_unique(rank: usize, data: Vec<i64>) -> Self {
        let n = data.len() / rank;
        let at = |k: usize| &data[k * rank..(k + 1) * rank];
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_unstable_by(|&p, &q| at(p).cmp(at(q)));
        idx.dedup_by(|p, q| at(*p) == at(*q));
        let mut out = Vec::with_capacity(idx.len() * rank);
        for k in idx {
            out.extend_from_slice(at(k));
        }
        Self { rank, data: out }
    }
}

/// Configurable orbit enumeration.
#[derive(Clone, Debug)]
pub struct OrbitBfs<'a> {
    cartan: &'a GeneralizedCartanMatrix,
    seed: WeightVector,
    max_level: Option<usize>,
    strategy: Strategy,
    collect_words: bool,
    max_frontier: usize,
}

impl<'a> OrbitBfs<'a> {
    pub fn new(cartan: &'a GeneralizedCartanMatrix, seed: WeightVector) -> Self {
        Self {
            cartan,
            seed,
            max_level: None,
            strategy: Strategy::default(),
            collect_words: false,
            max_frontier: default_max_frontier(cartan.rank()),
        }
    }

    /// Stop after this depth. Without a bound the search runs until the
    /// orbit is exhausted or the budget is hit.
    pub fn max_level(mut self, level: usize) -> Self {
        self.max_level = Some(level);
        self
    }

    pub fn max_level_opt(mut self, level: Option<usize>) -> Self {
        self.max_level = level;
        self
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn collect_words(mut self, on: bool) -> Self {
        self.collect_words = on;
        self
    }

    /// Largest number of weights held at once before giving up.
    pub fn max_frontier(mut self, limit: usize) -> Self {
        self.max_frontier = limit;
        self
    }

    pub fn run(&self) -> Result<OrbitLevels> {
        let a = self.cartan;
        if self.seed.len() != a.rank() {
            return Err(Error::RankMismatch {
                got: self.seed.len(),
                rank: a.rank(),
            });
        }
        if !self.seed.is_dominant() {
            return Err(Error::NonDominantSeed);
        }
        let regular = self.seed.is_strictly_dominant();
        let mut counts = alloc::vec![1u64];
        let mut elements = self.collect_words.then(Vec::new);
        let mut level = Points::single(self.seed.coords());
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        if self.strategy == Strategy::GlobalDedup {
            seen.insert(self.seed.0.clone());
        }
        let mut terminated = false;
        let mut depth = 0;
        loop {
            if let Some(records) = elements.as_mut() {
                records.push(self.records(&level)?);
            }
            if self.max_level == Some(depth) {
                break;
            }
            let next = match self.strategy {
                Strategy::FrontierSign => self.ascend(&level)?,
                Strategy::GlobalDedup => self.expand_global(&level, &mut seen)?,
            };
            if next.len() == 0 {
                terminated = true;
                break;
            }
            if regular && next.data.contains(&0) {
                return Err(Error::IrregularImage);
            }
            counts.push(next.len() as u64);
            level = next;
            depth += 1;
        }
        Ok(OrbitLevels {
            counts,
            seed: self.seed.clone(),
            max_level: self.max_level,
            terminated,
            elements,
        })
    }

    fn check_budget(&self, size: usize) -> Result<()> {
        if size > self.max_frontier {
            Err(Error::MemoryBudgetExceeded {
                size,
                limit: self.max_frontier,
            })
        } else {
            Ok(())
        }
    }

    fn ascend(&self, level: &Points) -> Result<Points> {
        let a = self.cartan;
        let rank = a.rank();
        let mut cand = Vec::new();
        for x in level.iter() {
            for i in 0..rank {
                if x[i] > 0 {
                    let start = cand.len();
                    cand.extend_from_slice(x);
                    reflect_in_place(a, &mut cand[start..], i)?;
                }
            }
            self.check_budget(level.len() + cand.len() / rank)?;
        }
        Ok(Points::sorted_unique(rank, cand))
    }

    fn expand_global(&self, level: &Points, seen: &mut BTreeSet<Vec<i64>>) -> Result<Points> {
        let a = self.cartan;
        let mut fresh: BTreeSet<Vec<i64>> = BTreeSet::new();
        for x in level.iter() {
            for i in 0..a.rank() {
                let mut y = x.to_vec();
                reflect_in_place(a, &mut y, i)?;
                if !seen.contains(&y) {
                    fresh.insert(y);
                }
            }
        }
        self.check_budget(seen.len() + fresh.len())?;
        let mut data = Vec::with_capacity(fresh.len() * a.rank());
        for y in &fresh {
            data.extend_from_slice(y);
        }
        seen.extend(fresh);
        Ok(Points {
            rank: a.rank(),
            data,
        })
    }

    fn records(&self, level: &Points) -> Result<Vec<ElementRecord>> {
        let mut out = level
            .iter()
            .map(|x| {
                let image = WeightVector(x.to_vec());
                let word = canonical_word(self.cartan, &image, &self.seed)?;
                Ok(ElementRecord { image, word })
            })
            .collect::<Result<Vec<_>>>()?;
        out.sort_by(|p, q| p.word.cmp(&q.word));
        Ok(out)
    }
}

/// Runs [`OrbitBfs`] with the default budget.
pub fn orbit_bfs(
    a: &GeneralizedCartanMatrix,
    seed: WeightVector,
    max_level: Option<usize>,
    strategy: Strategy,
    collect_words: bool,
) -> Result<OrbitLevels> {
    OrbitBfs::new(a, seed)
        .max_level_opt(max_level)
        .strategy(strategy)
        .collect_words(collect_words)
        .run()
}

/// A length-generating series together with whether it is complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthSeries {
    pub series: TruncatedSeries,
    /// True when the enumeration exhausted the orbit, so the series is a
    /// polynomial and every coefficient past the last is zero.
    pub terminated: bool,
}

impl GrowthSeries {
    fn from_levels(levels: &OrbitLevels) -> Self {
        let order = levels.max_level.unwrap_or(levels.counts.len() - 1);
        Self {
            series: levels.series(order),
            terminated: levels.terminated,
        }
    }

    /// The full polynomial, when the enumeration terminated.
    pub fn polynomial(&self) -> Option<polyseries::IntPolynomial> {
        self.terminated.then(|| self.series.to_polynomial())
    }
}

/// Poincaré series `Σ |W^k| t^k` through `max_degree`, or the full
/// polynomial when `max_degree` is `None` and the group is finite.
pub fn poincare_series(
    a: &GeneralizedCartanMatrix,
    max_degree: Option<usize>,
    strategy: Strategy,
) -> Result<GrowthSeries> {
    let levels = orbit_bfs(a, lattice::weyl_vector(a), max_degree, strategy, false)?;
    Ok(GrowthSeries::from_levels(&levels))
}

/// Number of minimal coset representatives of each length for `W_J`.
pub fn coset_series(
    a: &GeneralizedCartanMatrix,
    subset: &SubsetJ,
    max_degree: Option<usize>,
) -> Result<GrowthSeries> {
    if subset.indices().iter().any(|&j| j > a.rank()) {
        return Err(Error::InvalidSubset { rank: a.rank() });
    }
    let seed = WeightVector::parabolic_seed(a.rank(), subset);
    let levels = orbit_bfs(a, seed, max_degree, Strategy::FrontierSign, false)?;
    Ok(GrowthSeries::from_levels(&levels))
}

/// Lexicographically least reduced word `w` with `w(seed) = image`.
///
/// Walks down by the smallest generator `i` with a negative coordinate,
/// recording letters left to right.
pub fn canonical_word(
    a: &GeneralizedCartanMatrix,
    image: &WeightVector,
    seed: &WeightVector,
) -> Result<ReducedWord> {
    canonical_word_with_budget(a, image, seed, DEFAULT_WALK_BUDGET)
}

pub fn canonical_word_with_budget(
    a: &GeneralizedCartanMatrix,
    image: &WeightVector,
    seed: &WeightVector,
    max_steps: usize,
) -> Result<ReducedWord> {
    for v in [image, seed] {
        if v.len() != a.rank() {
            return Err(Error::RankMismatch {
                got: v.len(),
                rank: a.rank(),
            });
        }
    }
    let mut x = image.0.clone();
    let mut letters = Vec::new();
    while let Some(i) = x.iter().position(|&c| c < 0) {
        if letters.len() == max_steps {
            return Err(Error::NotInOrbit);
        }
        reflect_in_place(a, &mut x, i)?;
        letters.push(i + 1);
    }
    if x == seed.0 {
        Ok(ReducedWord(letters))
    } else {
        Err(Error::NotInOrbit)
    }
}

/// Where the `P_J` factor of a factorization came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorSource {
    /// `J` is empty; the factor is 1.
    Trivial,
    /// Closed form of a recognised finite or affine type.
    Catalog(KnownType),
    /// Orbit enumeration on the principal submatrix.
    Enumeration,
}

/// Check of `P(A) = P(A_J) · R_J` coefficientwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub factor_source: FactorSource,
    /// `P(A_J)` through the checked order.
    pub factor: TruncatedSeries,
    /// Minimal coset representatives by length.
    pub cosets: TruncatedSeries,
    /// Full growth series of `A`.
    pub full: TruncatedSeries,
    pub report: ConvolutionReport,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Verifies `w_M = Σ_s u_s v_{M−s}` for `w = P(A)`, `u = P(A_J)` and
/// `v` the coset series, for every `M ≤ max_degree`.
pub fn factorization_report(
    a: &GeneralizedCartanMatrix,
    subset: &SubsetJ,
    max_degree: usize,
) -> Result<FactorizationReport> {
    let (factor_source, factor) = if subset.is_empty() {
        (FactorSource::Trivial, TruncatedSeries::one(max_degree))
    } else {
        let sub = lattice::sub_gcm(a, subset)?;
        match catalog::identify(&sub) {
            Some(t) => (FactorSource::Catalog(t), t.growth_series(max_degree)?),
            None => (
                FactorSource::Enumeration,
                poincare_series(&sub, Some(max_degree), Strategy::FrontierSign)?.series,
            ),
        }
    };
    let cosets = coset_series(a, subset, Some(max_degree))?.series;
    let full = poincare_series(a, Some(max_degree), Strategy::FrontierSign)?.series;
    let report = polyseries::convolution_check(&full, &factor, &cosets)?;
    Ok(FactorizationReport {
        factor_source,
        factor,
        cosets,
        full,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{hyperbolic_h, FiniteType};
    use alloc::vec;

    fn ft(s: &str) -> GeneralizedCartanMatrix {
        s.parse::<FiniteType>().unwrap().cartan_matrix()
    }

    #[test]
    fn a1_terminates_after_one_level() {
        let a = ft("A1");
        let lv = orbit_bfs(&a, WeightVector(vec![1]), Some(3), Strategy::FrontierSign, false).unwrap();
        assert_eq!(lv.counts, vec![1, 1]);
        assert!(lv.terminated);
        let gs = GrowthSeries::from_levels(&lv);
        assert_eq!(gs.series.coeffs(), &[1, 1, 0, 0]);
        assert_eq!(gs.polynomial().unwrap().coeffs(), &[1, 1]);
    }

    #[test]
    fn hyperbolic_first_levels() {
        let h = hyperbolic_h();
        for s in [Strategy::FrontierSign, Strategy::GlobalDedup] {
            let lv = orbit_bfs(&h, lattice::weyl_vector(&h), Some(4), s, false).unwrap();
            assert_eq!(lv.counts, vec![1, 6, 20, 52, 117]);
            assert!(!lv.terminated);
        }
    }

    #[test]
    fn a4_full_enumeration() {
        let a = ft("A4");
        let lv = orbit_bfs(&a, lattice::weyl_vector(&a), None, Strategy::FrontierSign, false).unwrap();
        assert_eq!(lv.counts, vec![1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1]);
        assert_eq!(lv.total(), 120);
        assert!(lv.terminated);
    }

    #[test]
    fn a2_full_polynomial() {
        let a = ft("A2");
        let gs = poincare_series(&a, None, Strategy::GlobalDedup).unwrap();
        assert_eq!(gs.polynomial().unwrap().coeffs(), &[1, 2, 2, 1]);
    }

    #[test]
    fn seed_validation() {
        let a = ft("A2");
        assert_eq!(
            orbit_bfs(&a, WeightVector(vec![1, -1]), Some(2), Strategy::FrontierSign, false),
            Err(Error::NonDominantSeed)
        );
        assert!(matches!(
            orbit_bfs(&a, WeightVector(vec![1]), Some(2), Strategy::FrontierSign, false),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let h = hyperbolic_h();
        for s in [Strategy::FrontierSign, Strategy::GlobalDedup] {
            let err = OrbitBfs::new(&h, lattice::weyl_vector(&h))
                .strategy(s)
                .max_frontier(100)
                .run()
                .unwrap_err();
            assert!(matches!(err, Error::MemoryBudgetExceeded { limit: 100, .. }), "{err:?}");
        }
    }

    #[test]
    fn coset_examples() {
        let h = hyperbolic_h();
        let j = SubsetJ::new(vec![1, 2, 3, 4], 6).unwrap();
        assert_eq!(coset_series(&h, &j, Some(6)).unwrap().series.coeffs(), &[1, 2, 3, 7, 12, 19, 32]);
        let all = coset_series(&h, &SubsetJ::all(6), Some(5)).unwrap();
        assert!(all.terminated);
        assert_eq!(all.polynomial().unwrap().coeffs(), &[1]);
        let none = coset_series(&h, &SubsetJ::empty(), Some(5)).unwrap();
        let full = poincare_series(&h, Some(5), Strategy::FrontierSign).unwrap();
        assert_eq!(none, full);
    }

    #[test]
    fn canonical_word_examples() {
        let a = ft("A2");
        let rho = lattice::weyl_vector(&a);
        assert!(canonical_word(&a, &rho, &rho).unwrap().is_empty());
        let w = canonical_word(&a, &WeightVector(vec![-1, -1]), &rho).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1]);
        assert_eq!(w.act_on(&a, &rho).unwrap().0, vec![-1, -1]);
        assert_eq!(canonical_word(&a, &WeightVector(vec![2, 0]), &rho), Err(Error::NotInOrbit));
    }

    #[test]
    fn canonical_word_walk_budget() {
        // a weight outside the Tits cone of affine A1 never becomes dominant
        let a = crate::catalog::builtin("affA1").unwrap();
        let x = WeightVector(vec![-1, 1]);
        assert_eq!(
            canonical_word_with_budget(&a, &x, &lattice::weyl_vector(&a), 50),
            Err(Error::NotInOrbit)
        );
    }

    #[test]
    fn a2_brute_force_lex_least() {
        // enumerate all words over {1,2} up to length 3, group by image,
        // keep the shortest then lex-least word per image
        let a = ft("A2");
        let rho = lattice::weyl_vector(&a);
        let mut best: alloc::collections::BTreeMap<Vec<i64>, Vec<usize>> = Default::default();
        for len in 0..=3usize {
            for code in 0..(1usize << len) {
                let word: Vec<usize> = (0..len).map(|b| 1 + ((code >> (len - 1 - b)) & 1)).collect();
                let img = ReducedWord(word.clone()).act_on(&a, &rho).unwrap();
                best.entry(img.0).or_insert(word);
            }
        }
        assert_eq!(best.len(), 6);
        for (img, word) in best {
            let got = canonical_word(&a, &WeightVector(img), &rho).unwrap();
            assert_eq!(got.0, word);
        }
    }

    #[test]
    fn words_are_collected_sorted() {
        let a = ft("A2");
        let lv = orbit_bfs(&a, lattice::weyl_vector(&a), None, Strategy::FrontierSign, true).unwrap();
        let el = lv.elements.unwrap();
        assert_eq!(el.len(), 4);
        let words: Vec<Vec<usize>> = el[2].iter().map(|r| r.word.0.clone()).collect();
        assert_eq!(words, vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn factorization_a4_small_order() {
        let h = hyperbolic_h();
        let j = SubsetJ::new(vec![1, 2, 3, 4], 6).unwrap();
        let rep = factorization_report(&h, &j, 6).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.factor_source, FactorSource::Catalog(KnownType::Finite(FiniteType::new('A', 4).unwrap())));
        assert_eq!(rep.full.coeffs(), &[1, 6, 20, 52, 117, 237, 445]);
    }

    #[test]
    fn factorization_with_unrecognised_factor() {
        let h = hyperbolic_h();
        let rep = factorization_report(&h, &SubsetJ::empty(), 5).unwrap();
        assert_eq!(rep.factor_source, FactorSource::Trivial);
        assert!(rep.passed());
        let rep = factorization_report(&h, &SubsetJ::new(vec![1, 2, 3, 4, 5, 6], 6).unwrap(), 4);
        // H itself is not a catalog type, so its factor is enumerated
        let rep = rep.unwrap();
        assert_eq!(rep.factor_source, FactorSource::Enumeration);
        assert_eq!(rep.cosets.coeffs(), &[1, 0, 0, 0, 0]);
        assert!(rep.passed());
    }
}
