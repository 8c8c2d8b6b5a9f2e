//! Monomial ideals in the cell coordinates: the initial ideal of the minors
//! cutting out `Y(w)`, Hilbert functions of monomial quotients, and the
//! degree of the square-free quotient (a Stanley-Reisner count).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bruhat::{CosetElement, GrassmannShape, Root};
use crate::plucker::plucker_on_cell;
use crate::poly::Monomial;
use crate::{Error, Result};

/// A monomial ideal given by its minimal generators: no generator divides
/// another. Kept in ascending (degree, display) order for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    shape: GrassmannShape,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes the given generating set.
    pub fn new(shape: GrassmannShape, generators: Vec<Monomial>) -> Self {
        let mut gens: Vec<Monomial> = Vec::new();
        for g in &generators {
            if !generators.iter().any(|h| h != g && h.divides(g)) && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        // Deterministic listing: by degree, then row-major on the exponent
        // vectors.
        let key = |m: &Monomial| -> (usize, Vec<(usize, usize, u32)>) {
            let mut v: Vec<(usize, usize, u32)> = m
                .factors()
                .iter()
                .map(|&(r, e)| (r.row(), r.col(), e))
                .collect();
            v.sort_unstable();
            (m.degree(), v)
        };
        gens.sort_by_key(key);
        MonomialIdeal {
            shape,
            generators: gens,
        }
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Membership test for monomials: divisible by some generator.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// The initial ideal `J_w`, generated by the initial terms of the minors
/// `f_theta` over all `theta` not below `w`, minimalized. Every generator is
/// square-free: initial terms of the minors are their antidiagonals.
pub fn jw_generators(w: &CosetElement) -> MonomialIdeal {
    let gens: Vec<Monomial> = w
        .shape()
        .elements()
        .iter()
        .filter(|theta| !theta.leq(w))
        .map(|theta| {
            plucker_on_cell(theta)
                .initial_monomial()
                .expect("minors are nonzero")
                .clone()
        })
        .collect();
    let ideal = MonomialIdeal::new(w.shape(), gens);
    debug_assert!(ideal.generators().iter().all(|g| g.is_squarefree()));
    ideal
}

/// Hilbert function of the monomial quotient: the number of degree-`m`
/// monomials in the `(n-d)*d` cell variables divisible by no generator.
pub fn monomial_quotient_hilbert(ideal: &MonomialIdeal, m: usize) -> BigInt {
    let vars = ideal.shape().positive_roots();
    let mut count = BigInt::zero();
    let mut exps = vec![0u32; vars.len()];
    fn rec(
        vars: &[Root],
        ideal: &MonomialIdeal,
        k: usize,
        left: usize,
        exps: &mut Vec<u32>,
        count: &mut BigInt,
    ) {
        if k == vars.len() {
            if left == 0 {
                let mono = Monomial::from_exponents(vars.iter().copied().zip(exps.iter().copied()));
                if !ideal.contains(&mono) {
                    *count += 1;
                }
            }
            return;
        }
        for e in 0..=left {
            exps[k] = e as u32;
            rec(vars, ideal, k + 1, left - e, exps, count);
        }
        exps[k] = 0;
    }
    rec(&vars, ideal, 0, m, &mut exps, &mut count);
    count
}

/// Maximum degree `M` of a square-free monomial outside the ideal, and the
/// number of such monomials of that degree. For a square-free ideal this is
/// the top-dimensional face count of its Stanley-Reisner complex, i.e. the
/// degree of the quotient ring.
pub fn squarefree_quotient_degree(ideal: &MonomialIdeal) -> Result<(usize, BigInt)> {
    if let Some(bad) = ideal.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NotSquareFree(bad.to_string()));
    }
    let vars = ideal.shape().positive_roots();
    let mut best = 0usize;
    let mut count = BigInt::one(); // the empty monomial
                                   // DFS over square-free monomials, pruning as soon as the ideal contains
                                   // the partial product (supersets stay inside the ideal).
    fn rec(
        vars: &[Root],
        ideal: &MonomialIdeal,
        k: usize,
        chosen: &mut Vec<Root>,
        best: &mut usize,
        count: &mut BigInt,
    ) {
        for i in k..vars.len() {
            chosen.push(vars[i]);
            let mono = Monomial::from_exponents(chosen.iter().map(|&r| (r, 1)));
            if !ideal.contains(&mono) {
                match chosen.len().cmp(best) {
                    std::cmp::Ordering::Greater => {
                        *best = chosen.len();
                        *count = BigInt::one();
                    }
                    std::cmp::Ordering::Equal => *count += 1,
                    std::cmp::Ordering::Less => {}
                }
                rec(vars, ideal, i + 1, chosen, best, count);
            }
            chosen.pop();
        }
    }
    let mut chosen = Vec::new();
    rec(&vars, ideal, 0, &mut chosen, &mut best, &mut count);
    Ok((best, count))
}
