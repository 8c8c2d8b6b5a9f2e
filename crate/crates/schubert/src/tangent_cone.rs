//! Behavior of `X(w)` at an arbitrary T-fixed point `tau <= w`: the
//! translated multiset counts, the translated defining minors on the
//! neighborhood `tau * O^-`, and an independent oracle for the Hilbert
//! function of the tangent cone computed by degree-truncated exact linear
//! algebra over the rationals. No Gröbner machinery is involved on the oracle
//! side, so agreement is a genuine cross-check.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bruhat::{CommutingChain, CosetElement, Root};
use crate::goodsets::{self, RootMultiset};
use crate::poly::{determinant, Monomial, Polynomial};
use crate::{Error, Result};

/// A Schubert variety together with a T-fixed point on it: `tau <= w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedSchubertDatum {
    w: CosetElement,
    tau: CosetElement,
}

impl PointedSchubertDatum {
    pub fn new(w: CosetElement, tau: CosetElement) -> Result<Self> {
        assert_eq!(w.shape(), tau.shape(), "w and tau from different shapes");
        if !tau.leq(&w) {
            return Err(Error::PointOutsideVariety {
                w: w.to_string(),
                tau: tau.to_string(),
            });
        }
        Ok(PointedSchubertDatum { w, tau })
    }

    pub fn w(&self) -> &CosetElement {
        &self.w
    }

    pub fn tau(&self) -> &CosetElement {
        &self.tau
    }
}

/// Coset of `sigma * s_{a_1} * ... * s_{a_t}` where `sigma` is the
/// minimal-length representative of `tau`: the chain product's underlying
/// d-subset, mapped elementwise through `sigma`.
pub fn coset_right_product(tau: &CosetElement, chain: &CommutingChain) -> CosetElement {
    assert_eq!(tau.shape(), chain.shape(), "tau and chain shapes differ");
    let sigma = tau.permutation();
    let base = chain.product_coset();
    let mut entries: Vec<usize> = base.entries().iter().map(|&v| sigma[v - 1]).collect();
    entries.sort_unstable();
    CosetElement::new(tau.shape(), entries).expect("image of a d-subset")
}

/// Translated goodness: every chain of commuting reflections in `s` has
/// `coset_right_product(tau, chain) <= w`.
///
/// Unlike the identity case, chain products here are not monotone under chain
/// extension (a reflection can move `tau` down), so every chain must be
/// tested, not just the maximal ones.
pub fn is_good_multiset_at(s: &RootMultiset, datum: &PointedSchubertDatum) -> bool {
    assert_eq!(s.shape(), datum.w.shape(), "multiset shape differs");
    goodsets::chains_in(s).all(|c| coset_right_product(&datum.tau, &c).leq(&datum.w))
}

/// `|S_{w,tau}(m)|` (or `|S_{w,tau}'(m)|` with `uniset_only`): the number of
/// multisets of cardinality `m` passing [`is_good_multiset_at`].
pub fn count_good_at(datum: &PointedSchubertDatum, m: usize, uniset_only: bool) -> BigInt {
    let usable: Vec<Root> = datum
        .w
        .shape()
        .positive_roots()
        .into_iter()
        .filter(|r| {
            let chain = CommutingChain::new(vec![*r]).expect("singleton");
            coset_right_product(&datum.tau, &chain).leq(&datum.w)
        })
        .collect();
    let max_mult = if uniset_only { 1 } else { m.max(1) };
    // Chains through the newly added root are exactly the chains not yet
    // checked; sub-multiset closure still holds, so pruning stays sound.
    goodsets::count_pruned(&usable, m, max_mult, |support, pivot| {
        goodsets::chains_through(support, pivot)
            .into_iter()
            .all(|roots| {
                let chain = CommutingChain::new(roots).expect("descending by construction");
                coset_right_product(&datum.tau, &chain).leq(&datum.w)
            })
    })
}

/// Largest cardinality of a translated-good uniset. Good unisets are closed
/// under subsets, so the counts have no internal zeros and the first zero
/// count ends the search.
pub fn max_uniset_cardinality_at(datum: &PointedSchubertDatum) -> usize {
    let bound = datum.w.shape().num_variables();
    let mut last = 0;
    for m in 1..=bound {
        if count_good_at(datum, m, true).is_zero() {
            break;
        }
        last = m;
    }
    last
}

/// Conjectural `mult_tau X(w)`: the number of translated-good unisets of
/// maximum cardinality.
pub fn multiplicity_at(datum: &PointedSchubertDatum) -> BigInt {
    count_good_at(datum, max_uniset_cardinality_at(datum), true)
}

/// Defining equations of `X(w)` on the affine neighborhood `tau * O^-`, where
/// `tau` sits at the origin: for each `theta` not below `w`, the minor of the
/// row-permuted cell matrix `sigma * A` with rows `theta` (`A` = identity
/// block atop the variable block). Each is, up to the sign fixed by
/// display-normalization, a single minor of the variable block, hence
/// homogeneous; at `tau = id` the list equals [`crate::plucker::ideal_generators`]
/// exactly.
pub fn translated_generators(datum: &PointedSchubertDatum) -> Vec<Polynomial> {
    let shape = datum.w.shape();
    let d = shape.d();
    let sigma = datum.tau.permutation();
    // sigma_inv[e-1] = preimage of e
    let mut sigma_inv = vec![0usize; shape.n()];
    for (k, &img) in sigma.iter().enumerate() {
        sigma_inv[img - 1] = k + 1;
    }
    shape
        .elements()
        .iter()
        .filter(|theta| !theta.leq(&datum.w))
        .map(|theta| {
            // Row e of sigma*A is row sigma^{-1}(e) of A: a unit row when
            // that index is <= d, else a variable row.
            let mut unit_cols: Vec<usize> = Vec::new();
            let mut var_rows: Vec<usize> = Vec::new();
            for &e in theta.entries() {
                let pre = sigma_inv[e - 1];
                if pre <= d {
                    unit_cols.push(pre);
                } else {
                    var_rows.push(pre);
                }
            }
            // Expanding along the unit rows deletes their columns; the rest
            // is a minor of the variable block. Display-normalization fixes
            // the expansion sign.
            var_rows.sort_unstable();
            let cols: Vec<usize> = (1..=d).filter(|c| !unit_cols.contains(c)).collect();
            debug_assert_eq!(var_rows.len(), cols.len());
            let matrix: Vec<Vec<Polynomial>> = var_rows
                .iter()
                .map(|&r| {
                    cols.iter()
                        .map(|&c| {
                            Polynomial::variable(Root::new(shape, r, c).expect("grid position"))
                        })
                        .collect()
                })
                .collect();
            determinant(&matrix).display_normalized()
        })
        .collect()
}

/// Size guards for the truncated local-algebra oracle.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    /// Largest allowed truncation degree `j_max`.
    pub max_truncation: usize,
    /// Largest allowed number of cell variables.
    pub max_variables: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_truncation: 5,
            max_variables: 12,
        }
    }
}

/// Graded dimensions `h(0..=j_max)` of the associated graded ring of the
/// local ring at the point, read off from exact finite quotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalHilbertTable {
    values: Vec<u64>,
}

impl LocalHilbertTable {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, j: usize) -> u64 {
        self.values[j]
    }

    pub fn j_max(&self) -> usize {
        self.values.len() - 1
    }
}

/// Hilbert function of the tangent cone at `tau`, by brute force:
/// `h(j) = dim K[x]/(I + m^{j+1}) - dim K[x]/(I + m^j)`, each quotient
/// dimension computed as (number of monomials of degree <= j) minus the rank
/// of all generator-times-monomial products truncated past degree `j`,
/// row-reduced over the rationals.
pub fn local_hilbert_oracle(
    datum: &PointedSchubertDatum,
    j_max: usize,
    limits: &OracleLimits,
) -> Result<LocalHilbertTable> {
    let shape = datum.w.shape();
    if j_max > limits.max_truncation {
        return Err(Error::OracleLimit(format!(
            "truncation degree {j_max} exceeds the limit {}",
            limits.max_truncation
        )));
    }
    if shape.num_variables() > limits.max_variables {
        return Err(Error::OracleLimit(format!(
            "{} cell variables exceed the limit {}",
            shape.num_variables(),
            limits.max_variables
        )));
    }
    let generators = translated_generators(datum);
    let vars = shape.positive_roots();

    let mut dims = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let monomials = monomials_up_to(&vars, j);
        let index: HashMap<Monomial, usize> = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut rows: Vec<Vec<(usize, BigRational)>> = Vec::new();
        for g in &generators {
            let lowest = g.min_degree().expect("generators are nonzero");
            if lowest > j {
                continue;
            }
            for mu in monomials_up_to(&vars, j - lowest) {
                let product = g.mul_term(&mu, &BigInt::one());
                let mut row: Vec<(usize, BigRational)> = product
                    .terms()
                    .filter(|(m, _)| m.degree() <= j)
                    .map(|(m, c)| (index[m], BigRational::from(c.clone())))
                    .collect();
                row.sort_by_key(|&(i, _)| i);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        let rank = sparse_rank(rows);
        dims.push(monomials.len() - rank);
    }
    let mut values = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let prev = if j == 0 { 0 } else { dims[j - 1] };
        values.push((dims[j] - prev) as u64);
    }
    Ok(LocalHilbertTable { values })
}

/// All monomials of degree at most `bound` in `vars`, grouped by degree.
fn monomials_up_to(vars: &[Root], bound: usize) -> Vec<Monomial> {
    fn layer(vars: &[Root], k: usize, left: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == vars.len() {
            exps[k] = left as u32;
            out.push(Monomial::from_exponents(
                vars.iter().copied().zip(exps.iter().copied()),
            ));
            exps[k] = 0;
            return;
        }
        for e in 0..=left {
            exps[k] = e as u32;
            layer(vars, k + 1, left - e, exps, out);
        }
        exps[k] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; vars.len()];
    for degree in 0..=bound {
        if vars.is_empty() {
            if degree == 0 {
                out.push(Monomial::one());
            }
            continue;
        }
        layer(vars, 0, degree, &mut exps, &mut out);
    }
    out
}

/// Rank of a sparse rational matrix by incremental elimination. Rows are
/// (column, value) lists sorted by column.
fn sparse_rank(rows: Vec<Vec<(usize, BigRational)>>) -> usize {
    // pivots[col] = fully reduced row with leading column `col`, made monic
    let mut pivots: BTreeMap<usize, Vec<(usize, BigRational)>> = BTreeMap::new();
    for mut row in rows {
        while let Some(&(lead, _)) = row.first() {
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = row[0].1.clone();
                    row = row_sub(&row, p, &factor);
                }
                None => {
                    let inv = row[0].1.clone();
                    for entry in &mut row {
                        entry.1 = &entry.1 / &inv;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `a - factor * b` for sparse rows sorted by column.
fn row_sub(
    a: &[(usize, BigRational)],
    b: &[(usize, BigRational)],
    factor: &BigRational,
) -> Vec<(usize, BigRational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ca, ref va)), Some(&(cb, ref vb))) => {
                if ca < cb {
                    out.push((ca, va.clone()));
                    i += 1;
                } else if cb < ca {
                    out.push((cb, -(factor * vb)));
                    j += 1;
                } else {
                    let v = va - factor * vb;
                    if !v.is_zero() {
                        out.push((ca, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some(&(ca, ref va)), None) => {
                out.push((ca, va.clone()));
                i += 1;
            }
            (None, Some(&(cb, ref vb))) => {
                out.push((cb, -(factor * vb)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Comparison of one degree of the conjecture against the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComparison {
    pub degree: usize,
    pub predicted: BigInt,
    pub oracle: u64,
    pub matches: bool,
}

/// Outcome of [`check_conjectures`] for one pointed Schubert variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub w: CosetElement,
    pub tau: CosetElement,
    pub degrees: Vec<DegreeComparison>,
    pub predicted_multiplicity: BigInt,
    /// `None` when the truncated table has not yet revealed the leading
    /// behavior at this `j_max`.
    pub oracle_multiplicity: Option<BigInt>,
    pub multiplicity_matches: Option<bool>,
    pub pass: bool,
}

/// Compares the translated multiset counts against the local-algebra oracle
/// for every degree up to `j_max`, and the predicted multiplicity against the
/// oracle's leading behavior.
///
/// The oracle multiplicity is extracted by the `D`-fold difference transform
/// `q_j = sum_k (-1)^k C(D,k) h(j-k)` with `D = dim X(w)` (the dimension of
/// the tangent cone at every point): once the `q_j` vanish strictly before
/// `j_max`, the Hilbert function has entered its polynomial regime and the
/// multiplicity is `sum_j q_j`. If the tail has not stabilized the
/// multiplicity comparison is reported as indeterminate and does not fail the
/// check.
pub fn check_conjectures(
    datum: &PointedSchubertDatum,
    j_max: usize,
    limits: &OracleLimits,
) -> Result<ConjectureReport> {
    let table = local_hilbert_oracle(datum, j_max, limits)?;
    let mut degrees = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let predicted = count_good_at(datum, j, false);
        let oracle = table.value(j);
        let matches = predicted == BigInt::from(oracle);
        degrees.push(DegreeComparison {
            degree: j,
            predicted,
            oracle,
            matches,
        });
    }

    let dim = datum.w.dimension();
    let q = difference_transform(table.values(), dim);
    let last_nonzero = q.iter().rposition(|v| !v.is_zero());
    let oracle_multiplicity = match last_nonzero {
        Some(l) if l < j_max => Some(q.iter().sum::<BigInt>()),
        None => Some(BigInt::zero()),
        _ => None,
    };
    let predicted_multiplicity = multiplicity_at(datum);
    let multiplicity_matches = oracle_multiplicity
        .as_ref()
        .map(|om| *om == predicted_multiplicity);
    let pass = degrees.iter().all(|d| d.matches) && multiplicity_matches != Some(false);
    Ok(ConjectureReport {
        w: datum.w.clone(),
        tau: datum.tau.clone(),
        degrees,
        predicted_multiplicity,
        oracle_multiplicity,
        multiplicity_matches,
        pass,
    })
}

fn difference_transform(h: &[u64], dim: usize) -> Vec<BigInt> {
    let binom = |n: usize, k: usize| -> BigInt {
        let mut v = BigInt::one();
        for i in 0..k {
            v = v * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        v
    };
    (0..h.len())
        .map(|j| {
            let mut q = BigInt::zero();
            for k in 0..=dim.min(j) {
                let term = binom(dim, k) * BigInt::from(h[j - k]);
                if k % 2 == 0 {
                    q += term;
                } else {
                    q -= term;
                }
            }
            q
        })
        .collect()
}
