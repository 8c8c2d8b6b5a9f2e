//! Sparse multivariate polynomials in the cell coordinates `x_{ij}` with
//! exact integer coefficients, the graded monomial order driving initial
//! terms, exact determinants, and the deterministic textual form used by the
//! CLI and the golden tests.
//!
//! Two orders coexist. The *algebraic* order ([`Monomial::cmp`]) compares by
//! total degree and then lexicographically under the variable order
//! `x_{ij} > x_{i'j'}` iff `i > i'`, or `i = i'` and `j < j'`; it selects
//! initial terms and drives the Gröbner routines. The *display* order ranks
//! variables by reading position `(col, row)` and is only used for printing,
//! where it reproduces minors with their main-diagonal term first.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bruhat::{GrassmannShape, Root};
use crate::goodsets::RootMultiset;

/// Variable order for the algebraic monomial order: larger row wins, then
/// smaller column.
fn var_cmp(a: &Root, b: &Root) -> Ordering {
    a.row().cmp(&b.row()).then(b.col().cmp(&a.col()))
}

/// Variable order for printing: ascending `(col, row)` reading position is
/// *larger* (printed first).
fn display_var_cmp(a: &Root, b: &Root) -> Ordering {
    (b.col(), b.row()).cmp(&(a.col(), a.row()))
}

/// A monomial in the `x_{ij}`: variables with positive exponents, kept sorted
/// descending in the algebraic variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Root, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: vec![] }
    }

    pub fn variable(root: Root) -> Self {
        Monomial {
            factors: vec![(root, 1)],
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = (Root, u32)>>(exponents: I) -> Self {
        let mut map: BTreeMap<Root, u32> = BTreeMap::new();
        for (r, e) in exponents {
            if e > 0 {
                *map.entry(r).or_insert(0) += e;
            }
        }
        let mut factors: Vec<(Root, u32)> = map.into_iter().collect();
        factors.sort_by(|a, b| var_cmp(&b.0, &a.0));
        Monomial { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|&(_, e)| e as usize).sum()
    }

    /// Variables with their exponents, descending in the algebraic order.
    pub fn factors(&self) -> &[(Root, u32)] {
        &self.factors
    }

    pub fn exponent_of(&self, root: &Root) -> u32 {
        self.factors
            .iter()
            .find(|(r, _)| r == root)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.factors
                .iter()
                .copied()
                .chain(other.factors.iter().copied()),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors
            .iter()
            .all(|&(r, e)| other.exponent_of(&r) >= e)
    }

    /// `other / self`, when divisible.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_exponents(
            other
                .factors
                .iter()
                .map(|&(r, e)| (r, e - self.exponent_of(&r))),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<Root, u32> = self.factors.iter().copied().collect();
        for &(r, e) in &other.factors {
            let slot = map.entry(r).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial::from_exponents(map)
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|(r, _)| other.exponent_of(r) == 0)
    }

    /// The multiset of roots reading exponents as multiplicities; inverse of
    /// [`Monomial::from_multiset`]. Pairs square-free monomials with unisets.
    pub fn multisupport(&self, shape: GrassmannShape) -> RootMultiset {
        let mut s = RootMultiset::empty(shape);
        for &(r, e) in &self.factors {
            s.insert(r, e as usize);
        }
        s
    }

    pub fn from_multiset(s: &RootMultiset) -> Monomial {
        Monomial::from_exponents(s.iter().map(|(r, m)| (r, m as u32)))
    }

    fn cmp_with(&self, other: &Monomial, var_order: fn(&Root, &Root) -> Ordering) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Walk both variable lists in descending var_order; the first variable
        // where the exponents differ decides.
        let mut a: Vec<(Root, u32)> = self.factors.clone();
        let mut b: Vec<(Root, u32)> = other.factors.clone();
        a.sort_by(|x, y| var_order(&y.0, &x.0));
        b.sort_by(|x, y| var_order(&y.0, &x.0));
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(ra, ea)), Some(&(rb, eb))) => match var_order(&ra, &rb) {
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Less => return Ordering::Less,
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }

    /// Display comparison; see the module docs.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        self.cmp_with(other, display_var_cmp)
    }
}

/// The algebraic (graded, then lexicographic) monomial order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_with(other, var_cmp)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut vars: Vec<(Root, u32)> = self.factors.clone();
        // Reading order inside a term: ascending (col, row).
        vars.sort_by_key(|v| (v.0.col(), v.0.row()));
        for (k, (r, e)) in vars.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "x[{},{}]", r.row(), r.col())?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial with exact integer coefficients; no zero coefficients are
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn variable(root: Root) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::variable(root), BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Smallest total degree of a term; `None` for zero.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(monomial) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest term under the algebraic monomial order; `None` for zero.
    pub fn initial_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The monomial of the initial term.
    pub fn initial_monomial(&self) -> Option<&Monomial> {
        self.initial_term().map(|(m, _)| m)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, monomial: &Monomial, coeff: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero();
        if coeff.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_term(m.mul(monomial), c * coeff);
        }
        out
    }

    pub fn scale(&self, coeff: &BigInt) -> Polynomial {
        self.mul_term(&Monomial::one(), coeff)
    }

    /// Content of the coefficient vector (gcd, nonnegative). Zero for the
    /// zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content and flips signs so the initial (algebraic)
    /// coefficient is positive.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut g = self.content();
        if self.initial_term().unwrap().1.is_negative() {
            g = -g;
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c / &g);
        }
        out
    }

    /// Flips the sign if the *display*-leading coefficient is negative. Minors
    /// normalized this way carry their main-diagonal term with coefficient +1.
    pub fn display_normalized(&self) -> Polynomial {
        match self.display_leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    fn display_leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().max_by(|a, b| a.0.display_cmp(b.0))
    }

    /// Evaluates at integer values for the variables; variables missing from
    /// `values` evaluate to zero.
    pub fn eval(&self, values: &BTreeMap<Root, BigInt>) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(r, e) in m.factors() {
                let v = values.get(&r).cloned().unwrap_or_else(BigInt::zero);
                for _ in 0..e {
                    term *= &v;
                }
            }
            total += term;
        }
        total
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.display_cmp(a.0));
        for (k, (m, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Exact quotient `f / g` in the polynomial ring; panics if the division is
/// not exact. Only used where exactness is guaranteed structurally.
fn exact_div(f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert!(!g.is_zero(), "division by the zero polynomial");
    let mut rest = f.clone();
    let mut quotient = Polynomial::zero();
    let (gm, gc) = {
        let (m, c) = g.initial_term().unwrap();
        (m.clone(), c.clone())
    };
    while !rest.is_zero() {
        let (rm, rc) = {
            let (m, c) = rest.initial_term().unwrap();
            (m.clone(), c.clone())
        };
        let qm = gm
            .divide_into(&rm)
            .expect("exact polynomial division: monomial mismatch");
        let (qc, remainder) = rc.div_rem(&gc);
        assert!(
            remainder.is_zero(),
            "exact polynomial division: coefficient mismatch"
        );
        quotient.add_term(qm.clone(), qc.clone());
        rest = rest.sub(&g.mul_term(&qm, &qc));
    }
    quotient
}

/// Determinant of a square matrix of polynomials: cofactor expansion up to
/// 4x4, fraction-free elimination with row pivoting beyond. Exact in both
/// branches.
pub fn determinant(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let n = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return Polynomial::one();
    }
    if n <= 4 {
        return det_cofactor(matrix, &(0..n).collect::<Vec<_>>());
    }
    det_bareiss(matrix.to_vec())
}

fn det_cofactor(matrix: &[Vec<Polynomial>], cols: &[usize]) -> Polynomial {
    let row = matrix.len() - cols.len();
    if cols.is_empty() {
        return Polynomial::one();
    }
    let mut acc = Polynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &matrix[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&other| other != c).collect();
        let minor = det_cofactor(matrix, &rest);
        let signed = if k % 2 == 0 { minor } else { minor.neg() };
        acc = acc.add(&entry.mul(&signed));
    }
    acc
}

fn det_bareiss(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = exact_div(&num, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape24() -> GrassmannShape {
        GrassmannShape::new(2, 4).unwrap()
    }

    fn x(row: usize, col: usize) -> Root {
        Root::new(shape24(), row, col).unwrap()
    }

    fn mono(vars: &[(usize, usize)]) -> Monomial {
        Monomial::from_exponents(vars.iter().map(|&(r, c)| (x(r, c), 1)))
    }

    #[test]
    fn monomial_order_examples() {
        // x41*x32 beats x42*x31: leading variables x41 > x42.
        assert!(mono(&[(4, 1), (3, 2)]) > mono(&[(4, 2), (3, 1)]));
        // degree decides first
        let sq = Monomial::from_exponents([(x(3, 1), 2)]);
        assert!(sq > mono(&[(3, 1)]));
        assert_eq!(mono(&[(3, 2)]).cmp(&mono(&[(3, 2)])), Ordering::Equal);
        // variable order: x41 > x42 > x31 > x32
        assert!(mono(&[(4, 1)]) > mono(&[(4, 2)]));
        assert!(mono(&[(4, 2)]) > mono(&[(3, 1)]));
        assert!(mono(&[(3, 1)]) > mono(&[(3, 2)]));
    }

    #[test]
    fn monomial_divisibility() {
        let ab = mono(&[(4, 1), (3, 2)]);
        assert!(mono(&[(4, 1)]).divides(&ab));
        assert!(!mono(&[(4, 2)]).divides(&ab));
        assert_eq!(mono(&[(4, 1)]).divide_into(&ab).unwrap(), mono(&[(3, 2)]));
        assert_eq!(mono(&[(4, 1)]).lcm(&mono(&[(3, 2)])), ab);
        assert!(mono(&[(4, 1)]).gcd_is_one(&mono(&[(3, 2)])));
    }

    #[test]
    fn multisupport_round_trip() {
        let m = Monomial::from_exponents([(x(4, 1), 2), (x(3, 2), 1)]);
        let s = m.multisupport(shape24());
        assert_eq!(s.cardinality(), 3);
        assert_eq!(Monomial::from_multiset(&s), m);
        assert!(!m.is_squarefree());
        assert!(mono(&[(4, 1), (3, 2)]).is_squarefree());
    }

    #[test]
    fn initial_term_picks_algebraic_max() {
        let f = Polynomial::variable(x(3, 1)).add(&Polynomial::variable(x(4, 1)));
        assert_eq!(f.initial_monomial().unwrap(), &mono(&[(4, 1)]));
        assert!(Polynomial::zero().initial_term().is_none());
    }

    #[test]
    fn display_format() {
        // x31*x42 - x41*x32, printed main diagonal first, column-major terms
        let f = Polynomial::variable(x(3, 1))
            .mul(&Polynomial::variable(x(4, 2)))
            .sub(&Polynomial::variable(x(4, 1)).mul(&Polynomial::variable(x(3, 2))));
        assert_eq!(f.to_string(), "x[3,1]*x[4,2] - x[4,1]*x[3,2]");
        assert_eq!(Polynomial::one().to_string(), "1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::variable(x(3, 2)).to_string(), "x[3,2]");
        let g = Polynomial::variable(x(3, 1)).scale(&BigInt::from(-2));
        assert_eq!(g.to_string(), "-2*x[3,1]");
        let mut sq = Polynomial::zero();
        sq.add_term(Monomial::from_exponents([(x(3, 1), 2)]), BigInt::one());
        assert_eq!(sq.to_string(), "x[3,1]^2");
    }

    #[test]
    fn arithmetic_basics() {
        let a = Polynomial::variable(x(3, 1));
        let b = Polynomial::variable(x(4, 2));
        let s = a.add(&b);
        assert_eq!(s.num_terms(), 2);
        assert!(s.sub(&s).is_zero());
        let p = a.mul(&b);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.degree(), Some(2));
        let c = s.scale(&BigInt::from(3));
        assert_eq!(c.content(), BigInt::from(3));
        assert_eq!(c.primitive_part(), s);
    }

    #[test]
    fn exact_division() {
        let a = Polynomial::variable(x(3, 1)).add(&Polynomial::variable(x(3, 2)));
        let b = Polynomial::variable(x(4, 1)).sub(&Polynomial::variable(x(4, 2)));
        let prod = a.mul(&b);
        assert_eq!(exact_div(&prod, &a), b);
        assert_eq!(exact_div(&prod, &b), a);
    }

    #[test]
    fn determinant_small() {
        // det [[x31, x32], [x41, x42]] = x31*x42 - x32*x41
        let m = vec![
            vec![Polynomial::variable(x(3, 1)), Polynomial::variable(x(3, 2))],
            vec![Polynomial::variable(x(4, 1)), Polynomial::variable(x(4, 2))],
        ];
        let det = determinant(&m);
        assert_eq!(det.to_string(), "x[3,1]*x[4,2] - x[4,1]*x[3,2]");
        assert_eq!(determinant(&[] as &[Vec<Polynomial>]), Polynomial::one());
    }

    #[test]
    fn determinant_bareiss_matches_cofactor() {
        // 5x5 integer matrix forces the elimination branch; compare against
        // plain cofactor expansion.
        let entries: Vec<Vec<i64>> = vec![
            vec![2, 0, 1, -3, 4],
            vec![1, 1, 0, 2, -1],
            vec![0, -2, 3, 1, 1],
            vec![5, 1, -1, 0, 2],
            vec![1, 0, 2, 1, -2],
        ];
        let m: Vec<Vec<Polynomial>> = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| Polynomial::constant(BigInt::from(v)))
                    .collect()
            })
            .collect();
        let via_bareiss = determinant(&m);
        let via_cofactor = det_cofactor(&m, &(0..5).collect::<Vec<_>>());
        assert_eq!(via_bareiss, via_cofactor);
    }

    #[test]
    fn eval_substitutes() {
        let f = Polynomial::variable(x(3, 1))
            .mul(&Polynomial::variable(x(4, 2)))
            .sub(&Polynomial::variable(x(4, 1)).mul(&Polynomial::variable(x(3, 2))));
        let values = BTreeMap::from([
            (x(3, 1), BigInt::from(2)),
            (x(3, 2), BigInt::from(3)),
            (x(4, 1), BigInt::from(5)),
            (x(4, 2), BigInt::from(7)),
        ]);
        assert_eq!(f.eval(&values), BigInt::from(2 * 7 - 5 * 3));
    }
}
