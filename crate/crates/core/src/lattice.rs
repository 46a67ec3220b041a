//! Generalized Cartan matrices and the weight lattice they act on.
//!
//! Conventions used throughout the crate:
//!
//! * Weights are stored in the fundamental-weight basis.
//! * Column `i` of the Cartan matrix is the weight-basis expansion of the
//!   simple root `α_i`, so `σ_i(x) = x − x_i · A[.., i]`.
//! * Generators are labelled `1..=rank` wherever a caller names one
//!   (reflections, subsets, words). Matrix storage is 0-based.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::{self, LinearSolution};

/// A validated generalized Cartan matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedCartanMatrix {
    rank: usize,
    entries: Vec<i64>,
    name: Option<String>,
}

impl fmt::Debug for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneralizedCartanMatrix")
            .field("name", &self.name)
            .field("rows", &self.rows().collect::<Vec<_>>())
            .finish()
    }
}

impl GeneralizedCartanMatrix {
    /// Checks the GCM axioms: square, diagonal 2, off-diagonal `<= 0`,
    /// and `a_ij = 0` exactly when `a_ji = 0`.
    pub fn new<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 || rows.iter().any(|r| r.as_ref().len() != rank) {
            return Err(Error::NotSquare);
        }
        let entries: Vec<i64> = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        let at = |i: usize, j: usize| entries[i * rank + j];
        for i in 0..rank {
            if at(i, i) != 2 {
                return Err(Error::NonTwoDiagonal {
                    index: i,
                    value: at(i, i),
                });
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if at(i, j) > 0 {
                    return Err(Error::PositiveOffDiagonal {
                        row: i,
                        col: j,
                        value: at(i, j),
                    });
                }
                if (at(i, j) == 0) != (at(j, i) == 0) {
                    let (row, col) = if at(i, j) == 0 { (i, j) } else { (j, i) };
                    return Err(Error::AsymmetricZeroPattern { row, col });
                }
            }
        }
        Ok(Self {
            rank,
            entries,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.rank + col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.rank..(row + 1) * self.rank]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> + '_ {
        self.entries.chunks_exact(self.rank)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(<[i64]>::to_vec).collect()
    }

    /// Simple root `α_i` (0-based column) in the fundamental-weight basis.
    pub fn column(&self, col: usize) -> Vec<i64> {
        (0..self.rank).map(|r| self.entry(r, col)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.rank).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    /// Checks a 1-based generator label.
    pub fn check_generator(&self, i: usize) -> Result<usize> {
        if (1..=self.rank).contains(&i) {
            Ok(i - 1)
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                got: len,
                rank: self.rank,
            })
        }
    }

    pub fn determinant(&self) -> BigInt {
        linalg::determinant(&self.big_rows())
    }

    fn big_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }
}

/// Weight in the fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        Self(alloc::vec![0; rank])
    }

    /// Characteristic vector of the generators *not* in `subset`: the
    /// dominant weight whose stabilizer is exactly the parabolic `W_J`.
    pub fn parabolic_seed(rank: usize, subset: &SubsetJ) -> Self {
        let mut v = alloc::vec![1; rank];
        for &j in subset.indices() {
            v[j - 1] = 0;
        }
        Self(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

/// Vector in the simple-root basis with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVector(pub Vec<BigRational>);

impl RootVector {
    /// Integer coordinates, if every coordinate is integral and fits `i64`.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        linalg::integral_i64(&self.0)
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer() && !c.is_negative())
    }
}

/// Strictly increasing set of 1-based generator labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SubsetJ(Vec<usize>);

impl SubsetJ {
    pub fn new(indices: Vec<usize>, rank: usize) -> Result<Self> {
        let in_range = indices.iter().all(|&i| (1..=rank).contains(&i));
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        if in_range && increasing {
            Ok(Self(indices))
        } else {
            Err(Error::InvalidSubset { rank })
        }
    }

    /// Sorts and deduplicates before validating the range.
    pub fn from_unsorted(mut indices: Vec<usize>, rank: usize) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        Self::new(indices, rank)
    }

    pub fn all(rank: usize) -> Self {
        Self((1..=rank).collect())
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Applies `σ_i` in place on raw coordinates, `i` 0-based.
#[inline]
pub(crate) fn reflect_in_place(a: &GeneralizedCartanMatrix, x: &mut [i64], i: usize) -> Result<()> {
    let xi = x[i];
    if xi == 0 {
        return Ok(());
    }
    for (r, slot) in x.iter_mut().enumerate() {
        let col = a.entry(r, i);
        if col != 0 {
            let delta = xi.checked_mul(col).ok_or(Error::Overflow)?;
            *slot = slot.checked_sub(delta).ok_or(Error::Overflow)?;
        }
    }
    Ok(())
}

/// `σ_i(x)` for a 1-based generator `i`.
pub fn reflect(a: &GeneralizedCartanMatrix, x: &WeightVector, i: usize) -> Result<WeightVector> {
    let i = a.check_generator(i)?;
    a.check_len(x.len())?;
    let mut out = x.clone();
    reflect_in_place(a, &mut out.0, i)?;
    Ok(out)
}

/// The Weyl vector `ρ`: every fundamental-weight coordinate equal to one.
pub fn weyl_vector(a: &GeneralizedCartanMatrix) -> WeightVector {
    WeightVector(alloc::vec![1; a.rank()])
}

/// Rewrites a weight in the simple-root basis by solving `A c = x`.
pub fn weight_to_root_basis(a: &GeneralizedCartanMatrix, x: &WeightVector) -> Result<RootVector> {
    a.check_len(x.len())?;
    let rhs: Vec<BigInt> = x.0.iter().map(|&v| BigInt::from(v)).collect();
    match linalg::solve_exact(&a.big_rows(), &rhs) {
        LinearSolution::Unique(c) => Ok(RootVector(c)),
        LinearSolution::Inconsistent | LinearSolution::RankDeficient { .. } => {
            Err(Error::SingularCartanMatrix)
        }
    }
}

/// Inverse of [`weight_to_root_basis`] for integral root coordinates.
pub fn root_to_weight_basis(a: &GeneralizedCartanMatrix, c: &[i64]) -> Result<WeightVector> {
    a.check_len(c.len())?;
    let mut out = alloc::vec![0i64; a.rank()];
    for (j, &cj) in c.iter().enumerate() {
        for (r, slot) in out.iter_mut().enumerate() {
            let term = cj.checked_mul(a.entry(r, j)).ok_or(Error::Overflow)?;
            *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
        }
    }
    Ok(WeightVector(out))
}

/// `Γ = ρ − w(ρ)` in simple-root coordinates, given the image `w(ρ)`.
///
/// For a genuine orbit point the result is a nonnegative integer vector,
/// and distinct Weyl group elements give distinct `Γ`.
pub fn gamma_of(a: &GeneralizedCartanMatrix, image: &WeightVector) -> Result<RootVector> {
    a.check_len(image.len())?;
    let diff: Vec<i64> = image
        .0
        .iter()
        .map(|&v| 1i64.checked_sub(v).ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    let root = weight_to_root_basis(a, &WeightVector(diff))?;
    if root.is_nonnegative_integral() {
        Ok(root)
    } else {
        Err(Error::NotInPositiveRootLattice)
    }
}

/// Principal submatrix on `subset`, relabelled `1..=|subset|`.
pub fn sub_gcm(a: &GeneralizedCartanMatrix, subset: &SubsetJ) -> Result<GeneralizedCartanMatrix> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    if subset.indices().iter().any(|&j| j > a.rank()) {
        return Err(Error::InvalidSubset { rank: a.rank() });
    }
    let rows: Vec<Vec<i64>> = subset
        .indices()
        .iter()
        .map(|&i| subset.indices().iter().map(|&j| a.entry(i - 1, j - 1)).collect())
        .collect();
    GeneralizedCartanMatrix::new(&rows)
}

/// Reorders the generators: new generator `k` is old generator `order[k-1]`.
pub fn relabel(a: &GeneralizedCartanMatrix, order: &[usize]) -> Result<GeneralizedCartanMatrix> {
    let rank = a.rank();
    let mut seen = alloc::vec![false; rank];
    for &o in order {
        let i = a.check_generator(o)?;
        if core::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidSubset { rank });
        }
    }
    if order.len() != rank {
        return Err(Error::InvalidSubset { rank });
    }
    let rows: Vec<Vec<i64>> = order
        .iter()
        .map(|&i| order.iter().map(|&j| a.entry(i - 1, j - 1)).collect())
        .collect();
    GeneralizedCartanMatrix::new(&rows)
}
