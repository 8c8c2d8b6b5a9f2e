//! Plücker coordinates restricted to the opposite cell, where they become
//! minors of the `(n-d) x d` variable block, and the generating sets of the
//! ideals cutting out `Y(w) = X(w) ∩ O^-`.

use crate::bruhat::{CosetElement, Root};
use crate::poly::{determinant, Polynomial};

/// The restriction `f_theta` of the Plücker coordinate `p_theta` to the
/// opposite cell: the minor of the variable block whose row labels are the
/// entries of `theta` exceeding `d` and whose columns are the complement in
/// `{1..d}` of the entries at most `d`. The identity gives the constant 1.
///
/// Homogeneous of degree `theta.degree()`; its initial term is the
/// antidiagonal of the minor, whose multisupport is the canonical chain of
/// `theta` (tested invariants).
pub fn plucker_on_cell(theta: &CosetElement) -> Polynomial {
    let shape = theta.shape();
    let d = shape.d();
    let rows: Vec<usize> = theta.entries().iter().copied().filter(|&e| e > d).collect();
    let cols: Vec<usize> = (1..=d).filter(|c| !theta.entries().contains(c)).collect();
    debug_assert_eq!(rows.len(), cols.len());
    let matrix: Vec<Vec<Polynomial>> = rows
        .iter()
        .map(|&r| {
            cols.iter()
                .map(|&c| Polynomial::variable(Root::new(shape, r, c).expect("grid position")))
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// The minors vanishing on `Y(w)`: `f_theta` for every `theta` not below `w`
/// in the Bruhat order, in lexicographic order of `theta`.
pub fn ideal_generators(w: &CosetElement) -> Vec<Polynomial> {
    w.shape()
        .elements()
        .iter()
        .filter(|theta| !theta.leq(w))
        .map(plucker_on_cell)
        .collect()
}
