use std::collections::BTreeSet;

use proptest::prelude::*;

use linper::coweights::{
    interleave, is_interleaved, lemma443_margin, special_transposition_chain, Partition,
};
use linper::flagmod::{cfl_count_poly, fiber_mass};
use linper::levi::{
    cube, dom_g, dom_m, f_val, is_antistandard, j_set, leq_g, leq_m, simple_coroot_pairings,
    BlockLevi,
};
use linper::perm::Perm;
use linper::qpoly::{QPoly, QRat};
use linper::rsorbits::{bar_e, bar_e_fiber_size, flag_count, k_orbit_decomposition};
use linper::schur::{decompose_schur, pieri, schur_poly, sym_char};
use linper::stratcomb::{IndE, Involution};

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-20i128..=20, 0..6).prop_map(QPoly::new)
}

proptest! {
    #[test]
    fn margin_is_minus_gap(mu in partition(4, 4), mu_p in partition(4, 4)) {
        let m = lemma443_margin(&mu, &mu_p);
        let chain = special_transposition_chain(&interleave(&mu, &mu_p, 0)).unwrap();
        prop_assert!(m.margin <= 0);
        prop_assert_eq!(m.margin, -chain.gap);
        prop_assert_eq!(m.equality, is_interleaved(&mu, &mu_p));
        let degree = fiber_mass(&mu, &mu_p).q_degree().unwrap();
        prop_assert_eq!(degree, m.margin - i64::from(mu_p.size()));
    }

    #[test]
    fn pieri_matches_characters(lambda in partition(3, 3), k in 0u32..4) {
        let nvars = 3;
        let product = &schur_poly(&lambda, nvars).unwrap() * &sym_char(k, nvars);
        let dec = decompose_schur(&product).unwrap();
        prop_assert!(dec.is_multiplicity_free());
        prop_assert_eq!(dec.support(), pieri(&lambda, k, nvars).unwrap());
    }

    #[test]
    fn qpoly_ring_laws(a in qpoly(), b in qpoly(), c in qpoly(), x in -5i128..=5) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).eval(x), a.eval(x) * b.eval(x));
        prop_assert_eq!(&a - &a, QPoly::zero());
    }

    #[test]
    fn laurent_series_times_denominator(num in qpoly(), k in 1usize..4, e in 0u32..3) {
        prop_assume!(!num.is_zero());
        let den = &QPoly::q_minus_one(k).pow(e) * &QPoly::monomial(1, 1);
        let r = QRat::new(num.clone(), den.clone()).unwrap();
        let terms = 12;
        let series = r.laurent(terms).unwrap();
        // Multiply back: the top coefficients of den · series reproduce num.
        let top = series[0].0 + den.degree().unwrap() as i64;
        prop_assert_eq!(top, num.degree().unwrap() as i64);
        for shift in 0..terms.min(num.degree().unwrap() + 1) {
            let exp = top - shift as i64;
            let mut acc = 0i128;
            for &(s_exp, c) in &series {
                let needed = exp - s_exp;
                if needed >= 0 && (needed as usize) < den.coeffs().len() {
                    acc += c * den.coeffs()[needed as usize];
                }
            }
            prop_assert_eq!(acc, num.coeffs()[exp as usize]);
        }
    }

    #[test]
    fn perm_inverse_and_sign(images in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
                             other in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Perm::from_images(images).unwrap();
        let q = Perm::from_images(other).unwrap();
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.compose(&q).sign(), p.sign() * q.sign());
        prop_assert_eq!(p.to_string().parse::<Perm>().map(|r| r.cycles()), Ok(p.cycles()));
    }

    #[test]
    fn ind_e_is_a_representation(images in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(),
                                 other in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle()) {
        let ind = IndE::new(2, 3).unwrap();
        let s = Perm::from_images(images).unwrap();
        let t = Perm::from_images(other).unwrap();
        let st = s.compose(&t);
        for i in 0..ind.dim() {
            let (j, a) = ind.act(&t, i);
            let (k, b) = ind.act(&s, j);
            prop_assert_eq!(ind.act(&st, i), (k, a * b));
        }
    }
}

#[test]
fn cfl_count_is_positive_with_unit_constant_term() {
    for n in 0..=7 {
        for mu in Partition::all_of(n) {
            let p = cfl_count_poly(&mu);
            assert_eq!(p.eval(0), 1, "{mu}");
            assert!(p.coeffs().iter().all(|&c| c >= 0), "{mu}");
        }
    }
}

#[test]
fn character_is_a_class_function() {
    for total in 0..=6 {
        for d in 0..=total / 2 {
            let ind = IndE::new(d, total - d).unwrap();
            let all = Perm::all(total);
            for s in all.iter().step_by(7) {
                for g in all.iter().step_by(11) {
                    let conj = g.inverse().compose(s).compose(g);
                    assert_eq!(ind.character(s), ind.character(&conj));
                }
            }
        }
    }
}

#[test]
fn bar_e_fibers_over_involutions() {
    for n in 0..=6 {
        for d in 0..=n {
            let pairs = bar_e(d, n - d);
            for w in Involution::all(n) {
                let count = pairs.iter().filter(|p| p.w == w).count() as u128;
                assert_eq!(count, bar_e_fiber_size(&w, d), "n={n} d={d} w={w}");
            }
        }
    }
}

#[test]
fn orbits_partition_all_flags() {
    for (q, bound) in [(2u32, 4usize), (3, 3)] {
        for n in 0..=bound {
            for d in 0..=n {
                let dec = k_orbit_decomposition(d, n - d, q).unwrap();
                assert_eq!(dec.sizes.iter().sum::<usize>() as u128, flag_count(q, n));
                assert_eq!(dec.flags as u128, flag_count(q, n));
            }
        }
    }
}

fn block_permutations(levi: &BlockLevi, v: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![v.to_vec()];
    for block in levi.blocks() {
        let mut next = Vec::new();
        for base in &out {
            for p in Perm::all(block.len()) {
                let mut w = base.clone();
                for (k, &i) in block.iter().enumerate() {
                    w[i - 1] = base[block[p.apply(k)] - 1];
                }
                next.push(w);
            }
        }
        out = next;
    }
    out
}

#[test]
fn dominant_representative_is_orbit_maximum() {
    for n in 1..=4 {
        for levi in BlockLevi::all(n) {
            for lambda in cube(n, 1) {
                let top = dom_m(&lambda, &levi).unwrap();
                for w in block_permutations(&levi, &lambda) {
                    assert!(leq_m(&w, &top, &levi).unwrap(), "{levi} {lambda:?} {w:?}");
                }
                let g_top = dom_g(&lambda);
                for w in block_permutations(&BlockLevi::whole(n), &lambda) {
                    assert!(leq_g(&w, &g_top).unwrap());
                }
            }
        }
    }
}

#[test]
fn interleaved_levi_pairs_to_two() {
    for n in 1..=4 {
        let levi = BlockLevi::interleaved(n);
        assert!(is_antistandard(&levi));
        assert!(simple_coroot_pairings(&levi).iter().all(|&p| p == 2));
    }
}

#[test]
fn f_is_nonpositive_on_dominant() {
    for n in 1..=4 {
        for levi in BlockLevi::all(n) {
            for mu in cube(n, 2) {
                if levi.is_dominant(&mu) {
                    assert!(f_val(&mu, &levi).unwrap() <= 0, "{levi} {mu:?}");
                }
            }
        }
    }
}

#[test]
fn j_set_grows_with_nu() {
    let levi = BlockLevi::interleaved(2);
    let nus: Vec<Vec<i64>> = cube(4, 2)
        .into_iter()
        .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
        .collect();
    for lambda in cube(4, 1) {
        let sets: Vec<BTreeSet<_>> = nus
            .iter()
            .map(|nu| j_set(&lambda, nu, &levi).unwrap().into_iter().collect())
            .collect();
        for (a, nu) in nus.iter().enumerate() {
            for (b, nu_p) in nus.iter().enumerate() {
                if leq_g(nu, nu_p).unwrap() {
                    assert!(sets[a].is_subset(&sets[b]), "{lambda:?} {nu:?} {nu_p:?}");
                }
            }
        }
    }
}
