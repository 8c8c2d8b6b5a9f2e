//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every expected value is exact; runtime bounds are asserted where stated.
//!
//! Run with `cargo test -p schubert --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use schubert::bruhat::{CosetElement, GrassmannShape};
use schubert::goodsets::{
    boundary_cardinality_check, count_good_multisets, divisor_ie_coefficients,
    hilbert_via_recursion, is_good_combinatorial, is_good_multiset, max_uniset_cardinality,
    multiplicity, multisets_with_bound,
};
use schubert::groebner::buchberger_is_groebner;
use schubert::ideals::{jw_generators, monomial_quotient_hilbert, squarefree_quotient_degree};
use schubert::plucker::{ideal_generators, plucker_on_cell};
use schubert::standard_monomials::StandardMonomialCounter;
use schubert::tangent_cone::{check_conjectures, OracleLimits, PointedSchubertDatum};

fn shape(d: usize, n: usize) -> GrassmannShape {
    GrassmannShape::new(d, n).unwrap()
}

fn el(d: usize, n: usize, entries: &[usize]) -> CosetElement {
    CosetElement::new(shape(d, n), entries.to_vec()).unwrap()
}

fn report(criterion: usize, name: &str, elapsed: Duration) {
    // reaching this line means every assertion above it held
    println!("[criterion {criterion}] {name}: PASS ({:.2?})", elapsed);
}

#[test]
fn criterion_1_plucker_fixtures() {
    let start = Instant::now();
    let cases = [
        (vec![1, 2], "1"),
        (vec![1, 3], "x[3,2]"),
        (vec![1, 4], "x[4,2]"),
        (vec![2, 3], "x[3,1]"),
        (vec![2, 4], "x[4,1]"),
        (vec![3, 4], "x[3,1]*x[4,2] - x[4,1]*x[3,2]"),
    ];
    for (entries, expected) in cases {
        let theta = el(2, 4, &entries);
        assert_eq!(
            plucker_on_cell(&theta).to_string(),
            expected,
            "theta={theta}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:.2?}");
    report(1, "opposite-cell Plücker fixtures, bit-exact", elapsed);
}

#[test]
fn criterion_2_canonical_decompositions() {
    let start = Instant::now();
    let w = el(4, 8, &[3, 5, 7, 8]);
    let chain = w.canonical_chain().unwrap();
    let rc: Vec<(usize, usize)> = chain.roots().iter().map(|r| (r.row(), r.col())).collect();
    assert_eq!(rc, vec![(8, 1), (7, 2), (5, 4)]);
    assert_eq!(w.degree(), 3);

    let w = el(7, 16, &[1, 3, 6, 7, 10, 13, 15]);
    let chain = w.canonical_chain().unwrap();
    let rc: Vec<(usize, usize)> = chain.roots().iter().map(|r| (r.row(), r.col())).collect();
    assert_eq!(rc, vec![(15, 2), (13, 4), (10, 5)]);
    assert_eq!(w.degree(), 3);
    report(
        2,
        "worked-example canonical decompositions",
        start.elapsed(),
    );
}

#[test]
fn criterion_3_four_way_hilbert_agreement() {
    let start = Instant::now();
    for sh in [shape(2, 4), shape(2, 5), shape(3, 5)] {
        let mut standard = StandardMonomialCounter::new(sh);
        let mut recursion = schubert::goodsets::HilbertRecursion::new();
        for w in sh.elements() {
            let ideal = jw_generators(&w);
            for m in 0..=8 {
                let multiset = count_good_multisets(&w, m);
                let standard_monomial = standard.count(&w, m);
                let initial_ideal = monomial_quotient_hilbert(&ideal, m);
                let via_recursion = recursion.eval(&w, m);
                assert_eq!(multiset, standard_monomial, "{sh} w={w} m={m}");
                assert_eq!(multiset, initial_ideal, "{sh} w={w} m={m}");
                assert_eq!(multiset, via_recursion, "{sh} w={w} m={m}");
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:.2?}");
    report(
        3,
        "four-way Hilbert agreement on I(2,4), I(2,5), I(3,5), m <= 8",
        elapsed,
    );
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::from(0);
    }
    let mut v = BigInt::one();
    for i in 0..k {
        v = v * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    v
}

#[test]
fn criterion_4_quadric_cone_ground_truth() {
    let start = Instant::now();
    let w = el(2, 4, &[2, 4]);
    for m in 0..=8i64 {
        let expected = binomial(m + 3, 3) - binomial(m + 1, 3);
        assert_eq!(count_good_multisets(&w, m as usize), expected, "m={m}");
    }
    assert_eq!(multiplicity(&w), BigInt::from(2));
    for v in shape(2, 4).elements() {
        if v != w {
            assert_eq!(multiplicity(&v), BigInt::one(), "w={v}");
        }
    }
    report(
        4,
        "quadric-cone Hilbert values and multiplicities on I(2,4)",
        start.elapsed(),
    );
}

#[test]
fn criterion_5_multiplicity_triangle() {
    let start = Instant::now();
    for sh in [shape(2, 4), shape(2, 5), shape(3, 6)] {
        for w in sh.elements() {
            let (top_degree, count) = squarefree_quotient_degree(&jw_generators(&w)).unwrap();
            assert_eq!(multiplicity(&w), count, "{sh} w={w}");
            assert_eq!(max_uniset_cardinality(&w), w.dimension(), "{sh} w={w}");
            assert_eq!(top_degree, w.dimension(), "{sh} w={w}");
        }
    }
    report(
        5,
        "multiplicity = square-free quotient degree, M = dim, on I(2,4), I(2,5), I(3,6)",
        start.elapsed(),
    );
}

#[test]
fn criterion_6_groebner_corollary() {
    let start = Instant::now();
    for sh in [shape(2, 4), shape(2, 5)] {
        for w in sh.elements() {
            assert!(buchberger_is_groebner(&ideal_generators(&w)), "{sh} w={w}");
        }
    }
    // sampled elements of I(3,6), including the identity (largest system)
    let elements = shape(3, 6).elements();
    for idx in [0usize, 4, 8, 12, 16, 19] {
        let w = &elements[idx];
        assert!(buchberger_is_groebner(&ideal_generators(w)), "G(3,6) w={w}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:.2?}");
    report(
        6,
        "Buchberger verification on I(2,4), I(2,5) and 6 sampled w in I(3,6)",
        elapsed,
    );
}

#[test]
fn criterion_7_proof_skeleton_identities() {
    let start = Instant::now();
    for sh in [shape(2, 4), shape(2, 5)] {
        let mut standard = StandardMonomialCounter::new(sh);
        for w in sh.elements() {
            if w.is_identity() {
                continue;
            }
            let dw = w.degree();
            let coeffs = divisor_ie_coefficients(&w).unwrap();
            for m in 0..=6usize {
                assert!(
                    boundary_cardinality_check(&w, m).unwrap(),
                    "boundary {sh} w={w} m={m}"
                );
                let lhs = standard.count(&w, m + dw);
                let mut rhs = standard.count(&w, m);
                for (wp, a) in coeffs.iter() {
                    rhs += standard.count(wp, m + dw) * BigInt::from(a);
                }
                assert_eq!(lhs, rhs, "count recursion {sh} w={w} m={m}");
            }
        }
    }
    report(
        7,
        "boundary cardinality identity and count recursion, m <= 6",
        start.elapsed(),
    );
}

#[test]
fn criterion_8_conjecture_desk_scale() {
    let start = Instant::now();
    let limits = OracleLimits::default();
    let mut checked = 0usize;
    for (sh, j_max) in [(shape(2, 4), 4usize), (shape(2, 5), 3usize)] {
        let elements = sh.elements();
        for w in &elements {
            for tau in &elements {
                if !tau.leq(w) {
                    continue;
                }
                let datum = PointedSchubertDatum::new(w.clone(), tau.clone()).unwrap();
                let r = check_conjectures(&datum, j_max, &limits).unwrap();
                assert!(r.pass, "{sh} w={w} tau={tau}: {r:?}");
                checked += 1;
            }
        }
    }
    // the called-out cases: the singular vertex and a smooth point of the
    // quadric cone
    let vertex = PointedSchubertDatum::new(el(2, 4, &[2, 4]), el(2, 4, &[1, 2])).unwrap();
    let r = check_conjectures(&vertex, 4, &limits).unwrap();
    assert_eq!(r.predicted_multiplicity, BigInt::from(2));
    assert_eq!(r.oracle_multiplicity, Some(BigInt::from(2)));
    assert_eq!(r.multiplicity_matches, Some(true));

    let smooth = PointedSchubertDatum::new(el(2, 4, &[2, 4]), el(2, 4, &[1, 3])).unwrap();
    let r = check_conjectures(&smooth, 4, &limits).unwrap();
    assert_eq!(r.predicted_multiplicity, BigInt::one());
    assert_eq!(r.oracle_multiplicity, Some(BigInt::one()));

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:.2?}");
    report(
        8,
        &format!(
            "conjecture verification on {checked} pointed varieties (G(2,4) j<=4, G(2,5) j<=3)"
        ),
        elapsed,
    );
}

#[test]
fn criterion_9_definitional_equivalence() {
    let start = Instant::now();
    let mut checked = 0usize;
    for sh in [shape(2, 4), shape(2, 5)] {
        let elements = sh.elements();
        for m in 0..=5 {
            for s in multisets_with_bound(sh, m, 2) {
                for w in &elements {
                    assert_eq!(
                        is_good_multiset(&s, w),
                        is_good_combinatorial(&s, w),
                        "{sh} w={w} s={s:?}"
                    );
                    checked += 1;
                }
            }
        }
    }
    report(
        9,
        &format!("group-theoretic = layered goodness on {checked} (multiset, w) pairs"),
        start.elapsed(),
    );
}

#[test]
fn recursion_matches_quadric_example() {
    // the worked recursion instance: phi((2,4),2) = phi((2,4),1)
    //   + phi((1,4),2) + phi((2,3),2) - phi((1,3),2) = 4 + 3 + 3 - 1 = 9
    assert_eq!(
        hilbert_via_recursion(&el(2, 4, &[1, 4]), 2),
        BigInt::from(3)
    );
    assert_eq!(
        hilbert_via_recursion(&el(2, 4, &[2, 3]), 2),
        BigInt::from(3)
    );
    assert_eq!(hilbert_via_recursion(&el(2, 4, &[1, 3]), 2), BigInt::one());
    assert_eq!(
        hilbert_via_recursion(&el(2, 4, &[2, 4]), 1),
        BigInt::from(4)
    );
    assert_eq!(
        hilbert_via_recursion(&el(2, 4, &[2, 4]), 2),
        BigInt::from(9)
    );
}
