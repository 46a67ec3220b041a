//! Finite and untwisted affine Cartan types with closed-form growth series.
//!
//! Numbering follows Bourbaki. In `B_n` the last root is short, in `C_n`
//! it is long, `F_4` has long roots 1 and 2, and in `G_2` root 1 is short.
//! The affine node is prepended as generator 1.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::GeneralizedCartanMatrix;
use crate::polyseries::{self, IntPolynomial, TruncatedSeries};

/// A connected finite-type Dynkin diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteType {
    family: char,
    rank: usize,
}

impl FiniteType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let ok = match family {
            'A' => rank >= 1,
            'B' | 'C' => rank >= 2,
            'D' => rank >= 3,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRankForFamily { family, rank })
        }
    }

    pub fn family(self) -> char {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn degrees(self) -> DegreeTable {
        let n = self.rank;
        let mut d: Vec<u32> = match self.family {
            'A' => (2..=n as u32 + 1).collect(),
            'B' | 'C' => (1..=n as u32).map(|k| 2 * k).collect(),
            'D' => (1..n as u32).map(|k| 2 * k).chain([n as u32]).collect(),
            'E' => match n {
                6 => alloc::vec![2, 5, 6, 8, 9, 12],
                7 => alloc::vec![2, 6, 8, 10, 12, 14, 18],
                _ => alloc::vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            'F' => alloc::vec![2, 6, 8, 12],
            _ => alloc::vec![2, 6],
        };
        d.sort_unstable();
        DegreeTable(d)
    }

    /// `∏ (t^{ν_i} − 1)/(t − 1)` over the invariant degrees.
    pub fn poincare_polynomial(self) -> IntPolynomial {
        let factors: Vec<IntPolynomial> = self
            .degrees()
            .0
            .iter()
            .map(|&nu| IntPolynomial::geometric(nu as usize))
            .collect();
        IntPolynomial::product(&factors).expect("finite Poincaré polynomials fit in i64")
    }

    /// Weyl group order: the product of the degrees.
    pub fn group_order(self) -> u64 {
        self.degrees().0.iter().map(|&d| u64::from(d)).product()
    }

    /// Number of positive roots, the degree of the Poincaré polynomial.
    pub fn positive_roots(self) -> usize {
        self.degrees().0.iter().map(|&d| d as usize - 1).sum()
    }

    pub fn cartan_matrix(self) -> GeneralizedCartanMatrix {
        let n = self.rank;
        let mut m = alloc::vec![alloc::vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, a_ij: i64, a_ji: i64| {
            m[i][j] = a_ij;
            m[j][i] = a_ji;
        };
        match self.family {
            'A' | 'B' | 'C' | 'F' | 'G' => {
                for i in 0..n - 1 {
                    link(i, i + 1, -1, -1);
                }
                match self.family {
                    'B' => link(n - 2, n - 1, -1, -2),
                    'C' => link(n - 2, n - 1, -2, -1),
                    'F' => link(1, 2, -1, -2),
                    'G' => link(0, 1, -3, -1),
                    _ => {}
                }
            }
            'D' => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            _ => {
                // E: 1-3-4-5-…-n with 2 hanging off 4
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
        }
        GeneralizedCartanMatrix::new(&m)
            .expect("catalog matrices are valid")
            .with_name(format!("{self}"))
    }

    /// Coefficients of the highest root in the simple-root basis.
    pub fn marks(self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            'A' => alloc::vec![1; n],
            'B' => core::iter::once(1).chain(core::iter::repeat(2).take(n - 1)).collect(),
            'C' => core::iter::repeat(2).take(n - 1).chain([1]).collect(),
            'D' => [1].into_iter().chain(core::iter::repeat(2).take(n - 3)).chain([1, 1]).collect(),
            'E' => match n {
                6 => alloc::vec![1, 2, 2, 3, 2, 1],
                7 => alloc::vec![2, 2, 3, 4, 3, 2, 1],
                _ => alloc::vec![2, 3, 4, 6, 5, 4, 3, 2],
            },
            'F' => alloc::vec![2, 3, 4, 2],
            _ => alloc::vec![3, 2],
        }
    }

    /// Coefficients of the highest root's coroot in the simple-coroot basis.
    pub fn comarks(self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            'B' => core::iter::once(1)
                .chain(core::iter::repeat(2).take(n - 2))
                .chain([1])
                .collect(),
            'C' => alloc::vec![1; n],
            'F' => alloc::vec![2, 3, 2, 1],
            'G' => alloc::vec![1, 2],
            _ => self.marks(),
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for FiniteType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = chars.next().ok_or(Error::InvalidRankForFamily { family: '?', rank: 0 })?;
        let rank = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidRankForFamily { family, rank: 0 })?;
        Self::new(family.to_ascii_uppercase(), rank)
    }
}

/// Invariant degrees `ν_1 ≤ … ≤ ν_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTable(pub Vec<u32>);

impl DegreeTable {
    pub fn degrees(&self) -> &[u32] {
        &self.0
    }
}

pub fn degrees(t: FiniteType) -> DegreeTable {
    t.degrees()
}

pub fn finite_poincare(t: FiniteType) -> IntPolynomial {
    t.poincare_polynomial()
}

pub fn group_order(t: FiniteType) -> u64 {
    t.group_order()
}

/// Untwisted affine extension of a finite type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineType(FiniteType);

impl AffineType {
    pub fn new(base: FiniteType) -> Self {
        Self(base)
    }

    pub fn base(self) -> FiniteType {
        self.0
    }

    /// Extended Cartan matrix with `α_0 = δ − θ` as generator 1.
    pub fn cartan_matrix(self) -> GeneralizedCartanMatrix {
        let fin = self.0.cartan_matrix();
        let n = fin.rank();
        let marks = self.0.marks();
        let comarks = self.0.comarks();
        let mut m = alloc::vec![alloc::vec![0i64; n + 1]; n + 1];
        m[0][0] = 2;
        for i in 0..n {
            for j in 0..n {
                m[i + 1][j + 1] = fin.entry(i, j);
            }
            // ⟨α_0, α_i^∨⟩ = −⟨θ, α_i^∨⟩
            m[i + 1][0] = -(0..n).map(|k| fin.entry(i, k) * marks[k]).sum::<i64>();
            // ⟨α_i, α_0^∨⟩ = −⟨α_i, θ^∨⟩
            m[0][i + 1] = -(0..n).map(|k| comarks[k] * fin.entry(k, i)).sum::<i64>();
        }
        GeneralizedCartanMatrix::new(&m)
            .expect("affine extensions are valid")
            .with_name(format!("{self}"))
    }

    /// Bott's product `P(t) · ∏ 1/(1 − t^{ν_i − 1})` through `order`.
    pub fn bott_series(self, order: usize) -> Result<TruncatedSeries> {
        let mut s = self.0.poincare_polynomial().to_series(order);
        for &nu in self.0.degrees().degrees() {
            let exponent = nu as usize - 1;
            let factor = IntPolynomial::one().sub(&IntPolynomial::monomial(1, exponent))?;
            s = polyseries::mul(&s, &polyseries::inverse(&factor, order)?, order)?;
        }
        Ok(s)
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "aff{}", self.0)
    }
}

impl FromStr for AffineType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let base = s.strip_prefix("aff").ok_or(Error::InvalidRankForFamily { family: '?', rank: 0 })?;
        base.parse().map(Self)
    }
}

/// Growth series of the affine Weyl group over `t`, through `order`.
pub fn bott_series(t: FiniteType, order: usize) -> Result<TruncatedSeries> {
    AffineType::new(t).bott_series(order)
}

/// The rank-6 hyperbolic algebra `H`: affine `D̂_4` (nodes 2..6, centre 3)
/// with node 1 attached to node 2.
pub fn hyperbolic_h() -> GeneralizedCartanMatrix {
    GeneralizedCartanMatrix::new(&[
        [2, -1, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0],
        [0, -1, 2, -1, -1, -1],
        [0, 0, -1, 2, 0, 0],
        [0, 0, -1, 0, 2, 0],
        [0, 0, -1, 0, 0, 2],
    ])
    .expect("H is a valid GCM")
    .with_name("paperH")
}

/// A Cartan matrix recognised as a catalog type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnownType {
    Finite(FiniteType),
    Affine(AffineType),
}

impl KnownType {
    pub fn cartan_matrix(self) -> GeneralizedCartanMatrix {
        match self {
            KnownType::Finite(t) => t.cartan_matrix(),
            KnownType::Affine(t) => t.cartan_matrix(),
        }
    }

    /// Closed-form growth series through `order`.
    pub fn growth_series(self, order: usize) -> Result<TruncatedSeries> {
        match self {
            KnownType::Finite(t) => Ok(t.poincare_polynomial().to_series(order)),
            KnownType::Affine(t) => t.bott_series(order),
        }
    }
}

impl fmt::Display for KnownType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnownType::Finite(t) => t.fmt(f),
            KnownType::Affine(t) => t.fmt(f),
        }
    }
}

/// Names accepted by [`builtin`], in a stable order.
pub const BUILTIN_NAMES: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "C3", "C4", "C5", "D4",
    "D5", "G2", "F4", "paperH", "affD4",
];

/// Looks up a named algebra: the listed built-ins, `paperH`, and more
/// generally any finite type `Xn` or untwisted affine `affXn`.
pub fn builtin(name: &str) -> Option<GeneralizedCartanMatrix> {
    if name == "paperH" {
        return Some(hyperbolic_h());
    }
    if name.starts_with("aff") {
        return name.parse::<AffineType>().ok().map(AffineType::cartan_matrix);
    }
    name.parse::<FiniteType>().ok().map(FiniteType::cartan_matrix)
}

/// Looks up a catalog type by name (finite or affine only).
pub fn known_type(name: &str) -> Option<KnownType> {
    if name.starts_with("aff") {
        name.parse().ok().map(KnownType::Affine)
    } else {
        name.parse().ok().map(KnownType::Finite)
    }
}

fn candidates(rank: usize) -> Vec<KnownType> {
    let mut out = Vec::new();
    let push_finite = |out: &mut Vec<FiniteType>, n: usize| {
        out.push(FiniteType::new('A', n).unwrap());
        for (fam, min) in [('B', 2), ('C', 3), ('D', 4)] {
            if n >= min {
                out.push(FiniteType::new(fam, n).unwrap());
            }
        }
        for fam in ['E', 'F', 'G'] {
            if let Ok(t) = FiniteType::new(fam, n) {
                out.push(t);
            }
        }
    };
    let mut finite = Vec::new();
    push_finite(&mut finite, rank);
    out.extend(finite.into_iter().map(KnownType::Finite));
    if rank >= 2 {
        let mut base = Vec::new();
        push_finite(&mut base, rank - 1);
        out.extend(base.into_iter().map(|b| KnownType::Affine(AffineType::new(b))));
    }
    out
}

/// Recognises a Cartan matrix as a finite or untwisted affine catalog type
/// up to relabelling of the generators.
pub fn identify(a: &GeneralizedCartanMatrix) -> Option<KnownType> {
    candidates(a.rank())
        .into_iter()
        .find(|t| isomorphic(a, &t.cartan_matrix()))
}

/// Whether some relabelling carries `a` onto `b` entrywise.
pub fn isomorphic(a: &GeneralizedCartanMatrix, b: &GeneralizedCartanMatrix) -> bool {
    let n = a.rank();
    if n != b.rank() {
        return false;
    }
    let signature = |m: &GeneralizedCartanMatrix, i: usize| -> Vec<(i64, i64)> {
        let mut s: Vec<(i64, i64)> = (0..n)
            .filter(|&j| j != i)
            .map(|j| (m.entry(i, j), m.entry(j, i)))
            .collect();
        s.sort_unstable();
        s
    };
    let sig_a: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let mut map = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    fn extend(
        k: usize,
        a: &GeneralizedCartanMatrix,
        b: &GeneralizedCartanMatrix,
        sig_a: &[Vec<(i64, i64)>],
        sig_b: &[Vec<(i64, i64)>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = map.len();
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || sig_a[cand] != sig_b[k] {
                continue;
            }
            let fits = (0..k).all(|j| {
                a.entry(cand, map[j]) == b.entry(k, j) && a.entry(map[j], cand) == b.entry(j, k)
            });
            if fits {
                map[k] = cand;
                used[cand] = true;
                if extend(k + 1, a, b, sig_a, sig_b, map, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        false
    }
    extend(0, a, b, &sig_a, &sig_b, &mut map, &mut used)
}

/// Human-readable name for a matrix: its own label, else a recognised type.
pub fn describe(a: &GeneralizedCartanMatrix) -> String {
    if let Some(name) = a.name() {
        return name.into();
    }
    identify(a).map_or_else(|| format!("rank-{} GCM", a.rank()), |t| format!("{t}"))
}
