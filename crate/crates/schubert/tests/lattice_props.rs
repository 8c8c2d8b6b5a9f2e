//! Cross-checks for the order-theoretic core and the multiset counts, mostly
//! exhaustive over small shapes, against independent brute-force oracles
//! written here in the tests.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use schubert::bruhat::{CommutingChain, CosetElement, GrassmannShape};
use schubert::goodsets::{
    boundary_cardinality_check, chainlength, chains_in, count_good_multisets, count_good_unisets,
    divisor_ie_coefficients, good_uniset_profile, hilbert_via_recursion, is_good_combinatorial,
    is_good_multiset, max_uniset_cardinality, multipath_decomposition, multiplicity,
    multisets_with_bound, RootMultiset,
};

fn shape(d: usize, n: usize) -> GrassmannShape {
    GrassmannShape::new(d, n).unwrap()
}

fn small_shapes() -> Vec<GrassmannShape> {
    // all shapes with d <= 3, n <= 7
    let mut out = Vec::new();
    for d in 1..=3 {
        for n in d + 1..=7 {
            out.push(shape(d, n));
        }
    }
    out
}

/// Product of the chain's transpositions by literal permutation composition,
/// applied to {1..d}.
fn permutation_product_coset(chain: &CommutingChain) -> CosetElement {
    let sh = chain.shape();
    let n = sh.n();
    // image[x-1] = product(x), composing one transposition at a time
    let mut image: Vec<usize> = (1..=n).collect();
    for r in chain.roots() {
        let (a, b) = (r.row(), r.col());
        for v in image.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }
    // the coset is the image of {1..d}; image[] above is the inverse map, so
    // collect the values x with product(x) in 1..=d inverted: use the direct
    // map instead.
    let mut direct: Vec<usize> = (1..=n).collect();
    for r in chain.roots() {
        direct.swap(r.row() - 1, r.col() - 1);
    }
    let mut entries: Vec<usize> = (1..=sh.d()).map(|k| direct[k - 1]).collect();
    entries.sort_unstable();
    CosetElement::new(sh, entries).unwrap()
}

#[test]
fn reflection_order_matches_coset_order() {
    for sh in small_shapes() {
        let roots = sh.positive_roots();
        for a in &roots {
            for b in &roots {
                let grid = a.reflection_lt(b);
                let coset = a.to_coset().less(&b.to_coset());
                assert_eq!(grid, coset, "{sh} roots {a} {b}");
            }
        }
    }
}

/// All chains over the full grid of a shape.
fn full_grid_chains(sh: GrassmannShape) -> Vec<CommutingChain> {
    let all = RootMultiset::from_roots(sh, sh.positive_roots());
    chains_in(&all).collect()
}

#[test]
fn chain_product_equals_permutation_product() {
    for sh in small_shapes() {
        for chain in full_grid_chains(sh) {
            assert_eq!(
                chain.product_coset(),
                permutation_product_coset(&chain),
                "{sh} chain {chain}"
            );
        }
    }
}

#[test]
fn canonical_chain_round_trips() {
    for sh in small_shapes() {
        for w in sh.elements() {
            match w.canonical_chain() {
                Some(chain) => {
                    assert_eq!(chain.len(), w.degree());
                    assert_eq!(chain.product_coset(), w, "{sh} w={w}");
                }
                None => assert!(w.is_identity()),
            }
        }
    }
}

#[test]
fn covers_match_bruhat_search() {
    for sh in [shape(2, 5), shape(3, 6)] {
        let elements = sh.elements();
        for w in &elements {
            let mut expected: Vec<CosetElement> = elements
                .iter()
                .filter(|v| v.less(w) && !elements.iter().any(|z| v.less(z) && z.less(w)))
                .cloned()
                .collect();
            expected.sort();
            let mut got = w.covers();
            got.sort();
            assert_eq!(got, expected, "{sh} w={w}");
        }
    }
}

#[test]
fn meet_laws() {
    let sh = shape(2, 5);
    let elements = sh.elements();
    for a in &elements {
        for b in &elements {
            let m = a.meet(b);
            assert!(m.leq(a) && m.leq(b));
            assert_eq!(m, b.meet(a));
            assert_eq!(a.meet(a), *a);
            // greatest lower bound
            for c in &elements {
                if c.leq(a) && c.leq(b) {
                    assert!(c.leq(&m));
                }
            }
            for c in &elements {
                assert_eq!(a.meet(&b.meet(c)), a.meet(b).meet(c));
            }
        }
    }
}

/// Naive goodness: every chain (not only the maximal ones) has product <= w.
fn naive_good(s: &RootMultiset, w: &CosetElement) -> bool {
    chains_in(s).all(|c| c.product_coset().leq(w))
}

#[test]
fn maximal_chain_shortcut_agrees_with_all_chains() {
    for sh in [shape(2, 4), shape(2, 5), shape(3, 5)] {
        let elements = sh.elements();
        for m in 0..=3 {
            for s in multisets_with_bound(sh, m, 2) {
                for w in &elements {
                    assert_eq!(
                        is_good_multiset(&s, w),
                        naive_good(&s, w),
                        "{sh} w={w} s cardinality {m}"
                    );
                }
            }
        }
    }
}

#[test]
fn definitional_equivalence_small() {
    // group-theoretic vs layered combinatorial goodness
    for sh in [shape(2, 4), shape(3, 5), shape(3, 6)] {
        let elements = sh.elements();
        for m in 0..=4 {
            for s in multisets_with_bound(sh, m, 2) {
                for w in &elements {
                    assert_eq!(
                        is_good_multiset(&s, w),
                        is_good_combinatorial(&s, w),
                        "{sh} w={w}"
                    );
                }
            }
        }
    }
}

#[test]
fn decomposition_layers_are_consistent() {
    for sh in [shape(2, 5), shape(3, 6)] {
        for m in 0..=4 {
            for s in multisets_with_bound(sh, m, 2) {
                let layers = multipath_decomposition(&s);
                assert_eq!(layers.len(), chainlength(&s));
                let mut reassembled = RootMultiset::empty(sh);
                for layer in &layers {
                    assert!(chainlength(layer) <= 1);
                    for (r, k) in layer.iter() {
                        reassembled.insert(r, k);
                    }
                }
                assert_eq!(reassembled, s);
            }
        }
    }
}

#[test]
fn counts_monotone_in_w() {
    for sh in [shape(2, 4), shape(2, 5)] {
        let elements = sh.elements();
        for a in &elements {
            for b in &elements {
                if a.leq(b) {
                    for m in 0..=4 {
                        assert!(count_good_multisets(a, m) <= count_good_multisets(b, m));
                    }
                }
            }
        }
    }
}

#[test]
fn max_uniset_cardinality_is_dimension() {
    for sh in [shape(2, 4), shape(2, 5), shape(3, 6)] {
        for w in sh.elements() {
            assert_eq!(max_uniset_cardinality(&w), w.dimension(), "{sh} w={w}");
        }
    }
}

#[test]
fn layered_profile_matches_enumeration() {
    for sh in [shape(2, 4), shape(2, 5), shape(3, 6)] {
        for w in sh.elements() {
            let profile = good_uniset_profile(&w);
            for m in 0..=sh.num_variables() {
                let expected = count_good_unisets(&w, m);
                let got = profile.get(m).cloned().unwrap_or_else(BigInt::zero);
                assert_eq!(got, expected, "{sh} w={w} m={m}");
            }
            // multiplicity agrees with the enumerated top count
            assert_eq!(multiplicity(&w), count_good_unisets(&w, w.dimension()));
        }
    }
}

#[test]
fn recursion_agrees_with_enumeration() {
    for sh in [shape(2, 4), shape(2, 5)] {
        for w in sh.elements() {
            for m in 0..=8 {
                assert_eq!(
                    hilbert_via_recursion(&w, m),
                    count_good_multisets(&w, m),
                    "{sh} w={w} m={m}"
                );
            }
        }
    }
}

#[test]
fn ie_coefficients_reproduce_union_counts() {
    for sh in [shape(2, 4), shape(2, 5)] {
        for w in sh.elements() {
            if w.is_identity() {
                continue;
            }
            let divisors = w.covers();
            let coeffs = divisor_ie_coefficients(&w).unwrap();
            for k in 0..=4usize {
                let mut union_count = BigInt::zero();
                for s in multisets_with_bound(sh, k, k.max(1)) {
                    if divisors.iter().any(|wi| is_good_multiset(&s, wi)) {
                        union_count += 1;
                    }
                }
                let mut via_ie = BigInt::zero();
                for (wp, a) in coeffs.iter() {
                    via_ie += count_good_multisets(wp, k) * BigInt::from(a);
                }
                assert_eq!(via_ie, union_count, "{sh} w={w} k={k}");
            }
        }
    }
}

#[test]
fn boundary_identity_holds() {
    for sh in [shape(2, 4), shape(2, 5)] {
        for w in sh.elements() {
            if w.is_identity() {
                continue;
            }
            for m in 0..=4 {
                assert!(
                    boundary_cardinality_check(&w, m).unwrap(),
                    "{sh} w={w} m={m}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sub_multisets_of_good_are_good(
        picks in proptest::collection::vec((0usize..6, 1usize..=2), 0..5),
        w_idx in 0usize..10,
        drop_mask in 0u32..32,
    ) {
        let sh = shape(2, 5);
        let roots = sh.positive_roots();
        let w = &sh.elements()[w_idx];
        let mut s = RootMultiset::empty(sh);
        for (i, m) in &picks {
            s.insert(roots[*i], *m);
        }
        if is_good_multiset(&s, w) {
            // drop some copies according to the mask
            let mut sub = RootMultiset::empty(sh);
            for (bit, (r, m)) in s.iter().enumerate() {
                let keep = if drop_mask >> (bit % 5) & 1 == 1 { m.saturating_sub(1) } else { m };
                sub.insert(r, keep);
            }
            prop_assert!(is_good_multiset(&sub, w));
            prop_assert!(sub.is_submultiset_of(&s));
        }
    }

    #[test]
    fn chainlength_bounded_by_grid_diagonal(
        picks in proptest::collection::vec((0usize..9, 1usize..=2), 0..6),
    ) {
        let sh = shape(3, 6);
        let roots = sh.positive_roots();
        let mut s = RootMultiset::empty(sh);
        for (i, m) in &picks {
            s.insert(roots[*i], *m);
        }
        prop_assert!(chainlength(&s) <= 3);
        let layers = multipath_decomposition(&s);
        prop_assert_eq!(layers.len(), chainlength(&s));
    }
}
