//! Division with remainder and the Buchberger criterion over the integers.
//!
//! Reduction is fraction-free: when a divisor's leading coefficient does not
//! divide the term being cancelled, the reducendum is scaled through
//! (pseudo-division); remainders are content-normalized at the end. All the
//! minors this crate feeds in have unit leading coefficients, so the scaling
//! is a no-op in practice but keeps the routine total.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::poly::{Monomial, Polynomial};

/// Remainder of `f` on division by `basis`: repeatedly cancels the largest
/// reducible term using the first basis element (in list order) whose initial
/// monomial divides it, until no term of the remainder is divisible by any
/// initial monomial. If any reduction step fired, the result is returned
/// primitive with positive initial coefficient; otherwise `f` comes back
/// verbatim.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let leads: Vec<(Monomial, BigInt)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.initial_term().expect("basis of nonzero polynomials");
            (m.clone(), c.clone())
        })
        .collect();
    let mut rest = f.clone();
    let mut touched = false;
    'outer: loop {
        // Largest term of `rest` divisible by some initial monomial.
        let terms: Vec<(Monomial, BigInt)> =
            rest.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        for (tm, tc) in terms.into_iter().rev() {
            for (g, (gm, gc)) in basis.iter().zip(&leads) {
                if let Some(q) = gm.divide_into(&tm) {
                    // rest := gc * rest - tc * q * g  kills the term tm.
                    let (quot, rem) = tc.div_rem(gc);
                    rest = if rem.is_zero() {
                        rest.sub(&g.mul_term(&q, &quot))
                    } else {
                        rest.scale(gc).sub(&g.mul_term(&q, &tc))
                    };
                    touched = true;
                    continue 'outer;
                }
            }
        }
        break;
    }
    if touched && !rest.is_zero() {
        rest.primitive_part()
    } else {
        rest
    }
}

/// The S-polynomial: cross-multiplied difference cancelling both initial
/// terms against their lcm.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.initial_term().expect("nonzero polynomial");
    let (gm, gc) = g.initial_term().expect("nonzero polynomial");
    let lcm = fm.lcm(gm);
    let fq = fm.divide_into(&lcm).unwrap();
    let gq = gm.divide_into(&lcm).unwrap();
    f.mul_term(&fq, gc).sub(&g.mul_term(&gq, fc))
}

/// Buchberger's criterion: every S-polynomial of a pair from `basis` reduces
/// to zero modulo `basis`. Pairs whose initial monomials are coprime are
/// skipped (their S-polynomials always reduce to zero); the remaining pairs
/// are processed by increasing lcm degree, then by index, so runs are
/// deterministic. The empty list is vacuously a Gröbner basis.
pub fn buchberger_is_groebner(basis: &[Polynomial]) -> bool {
    assert!(
        basis.iter().all(|g| !g.is_zero()),
        "zero polynomial in basis"
    );
    let leads: Vec<&Monomial> = basis
        .iter()
        .map(|g| g.initial_monomial().unwrap())
        .collect();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if leads[i].gcd_is_one(leads[j]) {
                continue;
            }
            pairs.push((leads[i].lcm(leads[j]).degree(), i, j));
        }
    }
    pairs.sort();
    for (_, i, j) in pairs {
        let s = s_polynomial(&basis[i], &basis[j]);
        if !reduce(&s, basis).is_zero() {
            return false;
        }
    }
    true
}
