mod common;

use affine_hecke::coxeter::{enumerate, Cosets, Generator, GroupElement};
use affine_hecke::hecke::{t_inverse, Basis, HeckeElement};
use affine_hecke::klbasis::KlCache;
use proptest::prelude::*;

/// `sum c_y T_y -> sum bar(c_y) T_{y^-1}^-1`.
fn bar(h: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero(Basis::T);
    for (y, c) in h.sorted_terms() {
        out = out.add(&t_inverse(&y.inverse()).scale(&c.bar())).unwrap();
    }
    out
}

#[test]
fn kl_polynomial_shape_up_to_length_12() {
    let mut kl = KlCache::default();
    for w in enumerate(12, 24, Cosets::CoxeterOnly).unwrap() {
        let cw = kl.c_basis(&w).unwrap();
        assert!(kl.kl_polynomial(&w, &w).unwrap().is_one());
        for (y, _) in cw.sorted_terms() {
            let p = kl.kl_polynomial(&y, &w).unwrap();
            if y == w {
                continue;
            }
            let gap = (w.length() - y.length()) as i32;
            assert!(p.max_exp().unwrap() < gap, "degree of P({y}, {w})");
            assert!(p.terms().iter().all(|&(e, c)| c > 0 && e % 2 == 0), "P({y}, {w}) = {p}");
        }
    }
}

#[test]
fn descent_choice_does_not_matter_up_to_length_12() {
    let mut kl = KlCache::default();
    for w in enumerate(12, 24, Cosets::CoxeterOnly).unwrap() {
        let reference = kl.c_basis(&w).unwrap();
        for g in w.left_descents() {
            assert_eq!(kl.c_basis_via(&w, g).unwrap(), *reference, "{w} via {g}");
        }
    }
}

#[test]
fn c_basis_is_bar_invariant() {
    let mut kl = KlCache::default();
    for w in enumerate(7, 24, Cosets::Both).unwrap() {
        let cw = kl.c_basis(&w).unwrap();
        assert_eq!(bar(&cw), *cw, "{w}");
    }
}

#[test]
fn inverse_symmetry() {
    let mut kl = KlCache::default();
    for w in enumerate(10, 24, Cosets::CoxeterOnly).unwrap() {
        let cw = kl.c_basis(&w).unwrap();
        for (y, _) in cw.sorted_terms() {
            assert_eq!(kl.kl_polynomial(&y, &w).unwrap(), kl.kl_polynomial(&y.inverse(), &w.inverse()).unwrap());
        }
    }
}

#[test]
fn mu_of_simple_edges() {
    let mut kl = KlCache::default();
    for w in enumerate(9, 24, Cosets::Both).unwrap() {
        for g in Generator::ALL {
            let gw = w.gen_mul(g);
            if gw.length() > w.length() {
                assert_eq!(kl.mu(&w, &gw).unwrap(), 1);
            }
        }
    }
}

fn word_strategy(max: usize) -> impl Strategy<Value = (Vec<Generator>, bool)> {
    (prop::collection::vec(prop::sample::select(Generator::ALL.to_vec()), 0..max), any::<bool>())
}

fn element((word, omega): (Vec<Generator>, bool)) -> GroupElement {
    let x = GroupElement::from_word(&word);
    if omega {
        GroupElement::omega().mul(&x)
    } else {
        x
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn t_to_c_round_trip(w in word_strategy(9), y in word_strategy(9)) {
        let mut kl = KlCache::default();
        let h = HeckeElement::t(element(w)).add(&HeckeElement::t(element(y))).unwrap();
        let c = kl.t_to_c(&h).unwrap();
        prop_assert_eq!(kl.c_to_t(&c).unwrap(), h);
    }

    #[test]
    fn c_products_are_bar_invariant(w in word_strategy(6), y in word_strategy(6)) {
        let mut kl = KlCache::default();
        let (x, y) = (element(w), element(y));
        let prod = kl.c_multiply(&x, &y).unwrap();
        for (_, c) in prod.sorted_terms() {
            prop_assert_eq!(c.bar(), c);
        }
    }

    #[test]
    fn positivity_of_structure_constants(w in word_strategy(7), y in word_strategy(7)) {
        let mut kl = KlCache::default();
        let prod = kl.c_multiply(&element(w), &element(y)).unwrap();
        for (_, c) in prod.sorted_terms() {
            prop_assert!(c.terms().iter().all(|&(_, k)| k > 0));
        }
    }
}
