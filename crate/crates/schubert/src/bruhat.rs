//! Combinatorics of the index set `I(d,n)` of Schubert varieties in the
//! Grassmannian `G(d,n)`: Bruhat order, the grid of roots outside the
//! parabolic, commuting chains of reflections, canonical chain decompositions,
//! divisors and lattice meets.
//!
//! Elements of `I(d,n)` are strictly increasing `d`-tuples from `{1..n}`,
//! ordered componentwise. The roots form an `(n-d) x d` grid: position
//! `(i,j)` with `d+1 <= i <= n`, `1 <= j <= d` stands for the transposition
//! swapping `i` and `j`.

use std::fmt;

use crate::{Error, Result};

/// Parameters of a Grassmannian of `d`-planes in `n`-space, `1 <= d < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrassmannShape {
    d: usize,
    n: usize,
}

impl GrassmannShape {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d >= 1 && d < n {
            Ok(GrassmannShape { d, n })
        } else {
            Err(Error::InvalidShape { d, n })
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cell coordinates `x_{ij}`, i.e. `(n-d)*d`.
    pub fn num_variables(&self) -> usize {
        (self.n - self.d) * self.d
    }

    /// All roots of the grid in row-major order: by row `d+1..=n`, then by
    /// column `1..=d`.
    pub fn positive_roots(&self) -> Vec<Root> {
        let mut out = Vec::with_capacity(self.num_variables());
        for row in self.d + 1..=self.n {
            for col in 1..=self.d {
                out.push(Root {
                    shape: *self,
                    row,
                    col,
                });
            }
        }
        out
    }

    /// All elements of `I(d,n)` in lexicographic order of their entries.
    pub fn elements(&self) -> Vec<CosetElement> {
        let (d, n) = (self.d, self.n);
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=d).collect();
        loop {
            out.push(CosetElement {
                shape: *self,
                entries: cur.clone(),
            });
            // next combination in lexicographic order
            let mut t = d;
            while t > 0 && cur[t - 1] == n - d + t {
                t -= 1;
            }
            if t == 0 {
                break;
            }
            cur[t - 1] += 1;
            for k in t..d {
                cur[k] = cur[k - 1] + 1;
            }
        }
        out
    }

    /// `|I(d,n)| = C(n,d)`, saturating at `u128::MAX`.
    pub fn element_count(&self) -> u128 {
        let (mut num, mut res): (u128, u128) = (self.n as u128, 1);
        let k = self.d.min(self.n - self.d) as u128;
        for i in 1..=k {
            res = match res.checked_mul(num) {
                Some(v) => v / i,
                None => return u128::MAX,
            };
            num -= 1;
        }
        res
    }
}

impl fmt::Display for GrassmannShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.d, self.n)
    }
}

/// An element of `I(d,n)`: index of a Schubert variety and of a T-fixed point.
///
/// The derived `Ord` is lexicographic on the entries and is only meant for
/// deterministic containers; the Bruhat order is [`CosetElement::leq`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetElement {
    shape: GrassmannShape,
    entries: Vec<usize>,
}

impl CosetElement {
    /// Validates that `entries` is strictly increasing inside `1..=n` with
    /// length `d`.
    pub fn new(shape: GrassmannShape, entries: Vec<usize>) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidElement {
            d: shape.d,
            n: shape.n,
            reason,
        };
        if entries.len() != shape.d {
            return Err(invalid(format!(
                "expected {} entries, got {}",
                shape.d,
                entries.len()
            )));
        }
        for (k, &e) in entries.iter().enumerate() {
            if e < 1 || e > shape.n {
                return Err(invalid(format!("entry {e} out of range 1..={}", shape.n)));
            }
            if k > 0 && entries[k - 1] >= e {
                return Err(invalid(format!(
                    "entries must increase strictly, got {} before {e}",
                    entries[k - 1]
                )));
            }
        }
        Ok(CosetElement { shape, entries })
    }

    /// The identity coset `(1, 2, ..., d)`, the bottom of the Bruhat order.
    pub fn identity(shape: GrassmannShape) -> Self {
        CosetElement {
            shape,
            entries: (1..=shape.d).collect(),
        }
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, &e)| e == k + 1)
    }

    /// Bruhat order: componentwise `<=`.
    pub fn leq(&self, other: &CosetElement) -> bool {
        assert_eq!(self.shape, other.shape, "Bruhat comparison across shapes");
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub fn less(&self, other: &CosetElement) -> bool {
        self.leq(other) && self != other
    }

    /// Lattice meet: componentwise minimum. Indexes `X(a) ∩ X(b)`.
    pub fn meet(&self, other: &CosetElement) -> CosetElement {
        assert_eq!(self.shape, other.shape, "meet across shapes");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| *a.min(b))
            .collect();
        CosetElement {
            shape: self.shape,
            entries,
        }
    }

    /// The codimension-one Bruhat predecessors: every way of lowering a single
    /// entry by one that keeps the tuple strictly increasing. These index the
    /// divisors of `X(w)`.
    pub fn covers(&self) -> Vec<CosetElement> {
        let mut out = Vec::new();
        for t in 0..self.entries.len() {
            let e = self.entries[t];
            if e >= 2 && (t == 0 || self.entries[t - 1] < e - 1) {
                let mut entries = self.entries.clone();
                entries[t] = e - 1;
                out.push(CosetElement {
                    shape: self.shape,
                    entries,
                });
            }
        }
        out
    }

    /// `dim X(w) = sum_t (i_t - t)`.
    pub fn dimension(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .map(|(t, &e)| e - (t + 1))
            .sum()
    }

    /// Number of entries exceeding `d`; the length of the canonical chain and
    /// the degree of the Plücker coordinate `f_w` in the cell coordinates.
    pub fn degree(&self) -> usize {
        self.entries.iter().filter(|&&e| e > self.shape.d).count()
    }

    /// The unique decreasing chain of pairwise-commuting reflections whose
    /// product is this element: entries above `d` (descending) paired with the
    /// missing values in `{1..d}` (ascending). `None` for the identity.
    pub fn canonical_chain(&self) -> Option<CommutingChain> {
        let d = self.shape.d;
        let mut rows: Vec<usize> = self.entries.iter().copied().filter(|&e| e > d).collect();
        rows.reverse();
        let cols: Vec<usize> = (1..=d).filter(|c| !self.entries.contains(c)).collect();
        debug_assert_eq!(rows.len(), cols.len());
        if rows.is_empty() {
            return None;
        }
        let roots = rows
            .into_iter()
            .zip(cols)
            .map(|(row, col)| Root {
                shape: self.shape,
                row,
                col,
            })
            .collect();
        Some(CommutingChain::new(roots).expect("canonical pairing is a valid chain"))
    }

    /// Minimal-length permutation representative, as the 1-based image vector
    /// `sigma(1), ..., sigma(n)`: entries to positions `1..=d` in increasing
    /// order, complement to positions `d+1..=n` in increasing order.
    pub fn permutation(&self) -> Vec<usize> {
        let (d, n) = (self.shape.d, self.shape.n);
        let mut image = Vec::with_capacity(n);
        image.extend_from_slice(&self.entries);
        for v in 1..=n {
            if !self.entries.contains(&v) {
                image.push(v);
            }
        }
        debug_assert_eq!(image.len(), n);
        let _ = d;
        image
    }
}

impl fmt::Display for CosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A grid root `(i,j)` with `d+1 <= i <= n`, `1 <= j <= d`, identified with
/// the reflection (transposition) `s_{(i,j)}` and the cell coordinate
/// `x_{ij}`.
///
/// The derived `Ord` is row-major `(row, col)` and is used for deterministic
/// containers only; the reflection order is [`Root::reflection_leq`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    shape: GrassmannShape,
    row: usize,
    col: usize,
}

impl Root {
    pub fn new(shape: GrassmannShape, row: usize, col: usize) -> Result<Self> {
        if row > shape.d && row <= shape.n && col >= 1 && col <= shape.d {
            Ok(Root { shape, row, col })
        } else {
            Err(Error::InvalidRoot {
                d: shape.d,
                n: shape.n,
                row,
                col,
                rows: shape.n - shape.d,
                cols: shape.d,
            })
        }
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    pub fn row(&self) -> usize {
        self.row
    }

    pub fn col(&self) -> usize {
        self.col
    }

    /// Image of the identity coset under the transposition `(row col)`:
    /// `{1..d} \ {col} ∪ {row}`, sorted.
    pub fn to_coset(&self) -> CosetElement {
        let mut entries: Vec<usize> = (1..=self.shape.d).filter(|&j| j != self.col).collect();
        entries.push(self.row);
        entries.sort_unstable();
        CosetElement {
            shape: self.shape,
            entries,
        }
    }

    /// Distinct transpositions commute iff their supports are disjoint, i.e.
    /// different row and different column. A root commutes with itself.
    pub fn commutes_with(&self, other: &Root) -> bool {
        assert_eq!(self.shape, other.shape, "root comparison across shapes");
        *self == *other || (self.row != other.row && self.col != other.col)
    }

    /// Reflection order, in grid terms: weakly north in rows, weakly west in
    /// columns is smaller. Coincides with Bruhat comparison of the coset
    /// images (a tested invariant).
    pub fn reflection_leq(&self, other: &Root) -> bool {
        assert_eq!(self.shape, other.shape, "root comparison across shapes");
        self.row <= other.row && self.col >= other.col
    }

    pub fn reflection_lt(&self, other: &Root) -> bool {
        self.reflection_leq(other) && self != other
    }

    /// Strictly larger in the reflection order *and* commuting: the step
    /// relation of chains. Transitive.
    pub fn chain_above(&self, lower: &Root) -> bool {
        self.row > lower.row && self.col < lower.col
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A nonempty sequence of pairwise-commuting reflections, strictly decreasing
/// in the reflection order: rows strictly decrease while columns strictly
/// increase along the sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CommutingChain {
    roots: Vec<Root>,
}

impl CommutingChain {
    pub fn new(roots: Vec<Root>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidChain("chain must be nonempty".into()));
        }
        for pair in roots.windows(2) {
            if pair[0].shape != pair[1].shape {
                return Err(Error::InvalidChain("mixed shapes".into()));
            }
            if !pair[0].chain_above(&pair[1]) {
                return Err(Error::InvalidChain(format!(
                    "{} does not lie strictly above {} with commuting supports",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(CommutingChain { roots })
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn shape(&self) -> GrassmannShape {
        self.roots[0].shape
    }

    /// Coset of the product of the chain's reflections applied to the
    /// identity: remove the chain's columns from `{1..d}`, add its rows.
    pub fn product_coset(&self) -> CosetElement {
        let shape = self.shape();
        let cols: Vec<usize> = self.roots.iter().map(|r| r.col).collect();
        let mut entries: Vec<usize> = (1..=shape.d).filter(|j| !cols.contains(j)).collect();
        entries.extend(self.roots.iter().map(|r| r.row));
        entries.sort_unstable();
        CosetElement { shape, entries }
    }
}

impl fmt::Display for CommutingChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, r) in self.roots.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}
