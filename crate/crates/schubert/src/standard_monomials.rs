//! Standard monomials on a Schubert variety, localized at the identity cell:
//! weakly decreasing multichains of non-identity lattice elements below `w`,
//! graded by the sum of their local degrees. Their count per degree is the
//! Hilbert function of the coordinate ring of `Y(w)` and must agree with the
//! multiset count (a tested invariant).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bruhat::{CosetElement, GrassmannShape};
use crate::{Error, Result};

/// A product `f_{theta_1} ... f_{theta_t}` with `theta_1 >= ... >= theta_t`
/// in the Bruhat order, all factors distinct from the identity. The empty
/// product (constant 1) is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardMonomial {
    factors: Vec<CosetElement>,
}

impl StandardMonomial {
    /// Weakly decreasing factors, largest first.
    pub fn factors(&self) -> &[CosetElement] {
        &self.factors
    }

    /// Sum of the local degrees of the factors.
    pub fn local_degree(&self) -> usize {
        self.factors.iter().map(|t| t.degree()).sum()
    }

    /// True when every factor is at most `w`.
    pub fn bounded_by(&self, w: &CosetElement) -> bool {
        self.factors.iter().all(|t| t.leq(w))
    }
}

/// Degree of `f_theta` in the cell coordinates: the number of entries of
/// `theta` exceeding `d` (the size of the defining minor).
pub fn local_degree(theta: &CosetElement) -> usize {
    theta.degree()
}

/// Counts standard monomials with memoization across tops and budgets.
/// Reusable across calls for the same shape.
pub struct StandardMonomialCounter {
    shape: GrassmannShape,
    elements: Vec<CosetElement>,
    memo: HashMap<(Vec<usize>, usize), BigInt>,
}

impl StandardMonomialCounter {
    pub fn new(shape: GrassmannShape) -> Self {
        StandardMonomialCounter {
            shape,
            elements: shape.elements(),
            memo: HashMap::new(),
        }
    }

    /// Number of multichains `w >= theta_1 >= ... >= theta_t` of non-identity
    /// elements with total local degree `m`; `m = 0` counts the empty product.
    pub fn count(&mut self, w: &CosetElement, m: usize) -> BigInt {
        assert_eq!(w.shape(), self.shape, "element from a different shape");
        if m == 0 {
            return BigInt::one();
        }
        let key = (w.entries().to_vec(), m);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        // Strip the (unique) largest factor theta: the rest is any multichain
        // below theta with the remaining budget.
        let mut total = BigInt::zero();
        let candidates: Vec<CosetElement> = self
            .elements
            .iter()
            .filter(|t| !t.is_identity() && t.degree() <= m && t.leq(w))
            .cloned()
            .collect();
        for theta in candidates {
            let budget = m - theta.degree();
            total += self.count(&theta.clone(), budget);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// One-shot count; see [`StandardMonomialCounter`].
pub fn count_standard_monomials(w: &CosetElement, m: usize) -> BigInt {
    StandardMonomialCounter::new(w.shape()).count(w, m)
}

/// Materializes the standard monomials of local degree `m` bounded by `w`, in
/// a deterministic order (factors chosen in lexicographic order of the
/// lattice). Errors if more than `limit` monomials would be produced.
pub fn enumerate_standard_monomials(
    w: &CosetElement,
    m: usize,
    limit: usize,
) -> Result<Vec<StandardMonomial>> {
    let elements = w.shape().elements();
    let mut out = Vec::new();
    let mut factors: Vec<CosetElement> = Vec::new();
    fn rec(
        elements: &[CosetElement],
        top: &CosetElement,
        budget: usize,
        factors: &mut Vec<CosetElement>,
        out: &mut Vec<StandardMonomial>,
        limit: usize,
    ) -> Result<()> {
        if budget == 0 {
            if out.len() == limit {
                return Err(Error::EnumerationLimit { limit });
            }
            out.push(StandardMonomial {
                factors: factors.clone(),
            });
            return Ok(());
        }
        for theta in elements {
            if !theta.is_identity() && theta.degree() <= budget && theta.leq(top) {
                factors.push(theta.clone());
                rec(
                    elements,
                    theta,
                    budget - theta.degree(),
                    factors,
                    out,
                    limit,
                )?;
                factors.pop();
            }
        }
        Ok(())
    }
    rec(&elements, w, m, &mut factors, &mut out, limit)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(d: usize, n: usize, entries: &[usize]) -> CosetElement {
        CosetElement::new(GrassmannShape::new(d, n).unwrap(), entries.to_vec()).unwrap()
    }

    #[test]
    fn local_degree_examples() {
        assert_eq!(local_degree(&el(2, 4, &[3, 4])), 2);
        assert_eq!(local_degree(&el(2, 4, &[1, 2])), 0);
        assert_eq!(local_degree(&el(4, 8, &[3, 5, 7, 8])), 3);
    }

    #[test]
    fn count_examples() {
        let w = el(2, 4, &[2, 4]);
        assert_eq!(count_standard_monomials(&w, 1), BigInt::from(4));
        assert_eq!(count_standard_monomials(&w, 2), BigInt::from(9));
        assert_eq!(
            count_standard_monomials(&el(2, 4, &[1, 2]), 0),
            BigInt::from(1)
        );
        assert_eq!(
            count_standard_monomials(&el(2, 4, &[1, 2]), 1),
            BigInt::from(0)
        );
    }

    #[test]
    fn enumerate_examples() {
        let w = el(2, 4, &[1, 3]);
        let ms = enumerate_standard_monomials(&w, 1, 1000).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].factors(), std::slice::from_ref(&w));

        let ms = enumerate_standard_monomials(&w, 2, 1000).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].factors(), &[w.clone(), w.clone()]);
        assert_eq!(ms[0].local_degree(), 2);

        let ms = enumerate_standard_monomials(&el(2, 4, &[1, 2]), 1, 1000).unwrap();
        assert!(ms.is_empty());
    }

    #[test]
    fn enumerate_respects_limit() {
        let w = el(2, 4, &[2, 4]);
        assert!(matches!(
            enumerate_standard_monomials(&w, 2, 5),
            Err(Error::EnumerationLimit { limit: 5 })
        ));
    }

    #[test]
    fn enumeration_matches_count() {
        for w in GrassmannShape::new(2, 4).unwrap().elements() {
            for m in 0..=4 {
                let listed = enumerate_standard_monomials(&w, m, 100_000).unwrap();
                assert_eq!(
                    BigInt::from(listed.len()),
                    count_standard_monomials(&w, m),
                    "w={w} m={m}"
                );
                assert!(listed.iter().all(|sm| sm.local_degree() == m));
                assert!(listed.iter().all(|sm| sm.bounded_by(&w)));
                // factors weakly decreasing
                for sm in &listed {
                    for pair in sm.factors().windows(2) {
                        assert!(pair[1].leq(&pair[0]));
                    }
                }
            }
        }
    }
}
