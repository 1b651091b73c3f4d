//! One line per acceptance criterion; exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;

use affine_hecke::bernstein::{central_product, is_central, s_element, theta, theta_with};
use affine_hecke::cells::{a_value, classify_left_cell, two_sided_cell, LeftCellName, TwoSidedCellName};
use affine_hecke::coxeter::{enumerate, Cosets, GroupElement};
use affine_hecke::hecke::{t_multiply, Basis, HeckeElement};
use affine_hecke::klbasis::KlCache;
use affine_hecke::laurent::LaurentPoly;
use affine_hecke::phimaps::*;
use affine_hecke::repring::{rf_multiply, RepRingElt};
use affine_hecke::weights::{self, Weight};
use common::*;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn dominant_up_to(n: i64) -> Vec<Weight> {
    (0..=n).flat_map(|a| (0..=n - a).map(move |b| Weight::new(a, b))).collect()
}

fn c(terms: &[(&str, LaurentPoly)]) -> HeckeElement {
    HeckeElement::from_terms(Basis::C, terms.iter().map(|(w, p)| (el(w), p.clone())))
}

fn crt_s_closed_forms(kl: &mut KlCache) -> Check {
    let two = LaurentPoly::quantum_two();
    let one = LaurentPoly::one();
    let x1 = crt_s_product(kl, Weight::X1, false).map_err(err)?;
    let want = c(&[("rststr", one.clone()), ("tsrsrt", one.clone()), ("rtsrt", -&two), ("rt", one.clone())]);
    ensure(x1 == want, || format!("crt-s 1 0 gave {x1}"))?;
    let inner = c(&[("rtsrt", one.clone()), ("rt", -&two)]);
    let want2 = kl.c_product(&inner, &HeckeElement::basis_element(Basis::C, GroupElement::omega())).map_err(err)?;
    let x2 = crt_s_product(kl, Weight::X2, false).map_err(err)?;
    ensure(x2 == want2, || format!("crt-s 0 1 gave {x2}"))?;
    let reduced = crt_s_product(kl, Weight::X1, true).map_err(err)?.to_string();
    ensure(reduced == "C[rt] - [2]·C[rtsrt]", || reduced.clone())?;
    Ok(format!("C_rt S_x1 = {x1}; C_rt S_x2 = {x2}"))
}

fn lemma31(kl: &mut KlCache) -> Check {
    let mut n = 0;
    for m in 1..=4 {
        let r = lemma31_verify(kl, 1, m).map_err(err)?;
        ensure(r.holds, || format!("(a) m={m}: {} vs {}", r.product_mod_c0, r.expected))?;
        n += 1;
    }
    for m in 1..=3 {
        for k in m..=3 {
            let r = lemma31_verify(kl, m, k).map_err(err)?;
            ensure(r.holds, || format!("(b) ({m},{k}): {} vs {}", r.product_mod_c0, r.expected))?;
            n += 1;
        }
    }
    Ok(format!("{n} products mod H_c0"))
}

fn theorem(kl: &mut KlCache) -> Check {
    let ws = dominant_up_to(3);
    for &lambda in &ws {
        let r = theorem36_verify(kl, lambda).map_err(err)?;
        ensure(r.holds, || format!("{lambda}: {} vs {}", r.product_mod_c0, r.predicted))?;
    }
    Ok(format!("{} dominant weights", ws.len()))
}

fn base_values() -> Check {
    let two = LaurentPoly::quantum_two();
    let x1 = phi_s(Weight::X1).map_err(err)?;
    let x2 = phi_s(Weight::X2).map_err(err)?;
    ensure(x1 == RepRingElt::from_terms([((1, 0), -&two), ((0, 0), LaurentPoly::one())]), || x1.to_string())?;
    ensure(x2 == RepRingElt::from_terms([((1, 1), LaurentPoly::one()), ((0, 1), -&two)]), || x2.to_string())?;
    Ok(format!("phi(S_x1) = {x1}; phi(S_x2) = {x2}"))
}

fn prop33(kl: &mut KlCache) -> Check {
    let mut n = 0;
    for m in 0..=3 {
        for k in 0..=3 {
            for p in 0..2 {
                for p2 in 0..2 {
                    let got = phi1(&h1_product(kl, m, p, k, p2).map_err(err)?).map_err(err)?;
                    let want = rf_multiply(&RepRingElt::irrep(m as u32, p), &RepRingElt::irrep(k as u32, p2));
                    ensure(got == want, || format!("({m},{p})({k},{p2}): {got} vs {want}"))?;
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} products"))
}

fn bernstein() -> Check {
    let shifts = [Weight::ZERO, Weight::X1, Weight::X2, Weight::new(1, 1)];
    let boxed: Vec<Weight> = (-2..=2).flat_map(|a| (-2..=2).map(move |b| Weight::new(a, b))).collect();
    for &x in &boxed {
        let reference = theta(x);
        let plus = Weight::new(x.a.max(0), x.b.max(0));
        for d in shifts {
            ensure(theta_with(plus + d, plus + d - x).map_err(err)? == reference, || format!("theta({x}) via shift {d}"))?;
        }
    }
    for &x in &boxed {
        for &y in &boxed {
            if (x.a + y.a).abs() <= 2 && (x.b + y.b).abs() <= 2 {
                let prod = t_multiply(&theta(x), &theta(y)).map_err(err)?;
                ensure(prod == theta(x + y), || format!("theta({x}) theta({y})"))?;
            }
        }
    }
    for lambda in dominant_up_to(3) {
        let s = s_element(lambda).map_err(err)?.expansion;
        ensure(is_central(&s).map_err(err)?, || format!("S({lambda}) is not central"))?;
    }
    let mut pairs = 0;
    for x in dominant_up_to(2) {
        for y in dominant_up_to(2) {
            let got = central_product(x, y).map_err(err)?;
            let want = brute_tensor(x, y);
            ensure(got == want, || format!("S({x}) S({y}): {got:?} vs {want:?}"))?;
            pairs += 1;
        }
    }
    Ok(format!("4 decompositions per theta, additivity, centrality, {pairs} central products"))
}

fn kl_suite(kl: &mut KlCache) -> Check {
    let elems = enumerate(12, kl.budget(), Cosets::Both).map_err(err)?;
    for w in &elems {
        let cw = kl.c_basis(w).map_err(err)?;
        ensure(kl.kl_polynomial(w, w).map_err(err)?.is_one(), || format!("P({w},{w})"))?;
        for (y, _) in cw.sorted_terms() {
            if y == *w {
                continue;
            }
            let p = kl.kl_polynomial(&y, w).map_err(err)?;
            let gap = (w.length() - y.length()) as i32;
            ensure(p.max_exp().is_some_and(|d| d < gap), || format!("deg P({y},{w})"))?;
            ensure(p.terms().iter().all(|&(_, k)| k > 0), || format!("P({y},{w}) = {p}"))?;
        }
        if w.omega_exponent() == 0 {
            for g in w.left_descents() {
                ensure(kl.c_basis_via(w, g).map_err(err)? == *cw, || format!("C_{w} via {g}"))?;
            }
        }
    }
    Ok(format!("{} elements", elems.len()))
}

fn cell_suite() -> Check {
    let elems = enumerate(16, 24, Cosets::Both).map_err(err)?;
    let mut by_cell: BTreeMap<LeftCellName, usize> = BTreeMap::new();
    for x in &elems {
        let cell = classify_left_cell(x);
        *by_cell.entry(cell).or_default() += 1;
        ensure(x.right_descents() == cell.right_descents(), || format!("R({x}) differs on {cell}"))?;
        ensure([0, 1, 2, 4].contains(&a_value(x)), || format!("a({x})"))?;
        let is_ce = two_sided_cell(x) == TwoSidedCellName::Ce;
        ensure(is_ce == (x.coxeter_part().is_identity()), || format!("c_e membership of {x}"))?;
    }
    ensure(by_cell.len() == 16, || format!("{} cells populated", by_cell.len()))?;
    for x in enumerate(12, 24, Cosets::CoxeterOnly).map_err(err)? {
        ensure(a_value(&x) == a_value_oracle(&x), || format!("a({x}) vs reduced-word oracle"))?;
    }
    Ok(format!("{} elements in 16 cells", elems.len()))
}

fn lemma35(kl: &mut KlCache) -> Check {
    let mut terms = 0;
    for lambda in dominant_up_to(3) {
        let r = lemma35_check(kl, lambda).map_err(err)?;
        ensure(r.holds, || format!("{lambda}: {:?}", r.offending))?;
        terms += r.terms.len();
    }
    Ok(format!("{terms} surviving terms, all rt(srt)^m w^p"))
}

fn oracle_equivalences() -> Check {
    let bfs = bfs_lengths(12);
    for (x, d) in &bfs {
        ensure(x.length() == *d, || format!("l({x}) = {} but BFS gives {d}", x.length()))?;
    }
    let mut n = 0;
    for lambda in dominant_up_to(6) {
        ensure(weights::character(lambda).map_err(err)? == brute_character(lambda), || format!("character of {lambda}"))?;
        ensure(weights::dim(lambda).map_err(err)? == weights::weyl_dimension(lambda).map_err(err)?, || format!("dim {lambda}"))?;
        n += 1;
    }
    Ok(format!("{} lengths, {n} characters", bfs.len()))
}

fn main() -> ExitCode {
    let mut kl = KlCache::default();
    let results: Vec<(&str, Check)> = vec![
        ("C_rt S_x1 and C_rt S_x2 closed forms", crt_s_closed_forms(&mut kl)),
        ("C_{rt(srt)^m} C_{rt(srt)^n} mod H_c0", lemma31(&mut kl)),
        ("C_rt S_lambda = sum a_kp C_{rt(srt)^k w^p} mod H_c0, a+b <= 3", theorem(&mut kl)),
        ("phi(S_x1), phi(S_x2) base values", base_values()),
        ("phi_1 is multiplicative, m,n <= 3", prop33(&mut kl)),
        ("Bernstein elements and the centre", bernstein()),
        ("KL polynomials, l <= 12", kl_suite(&mut kl)),
        ("cells, l <= 16", cell_suite()),
        ("surviving terms have L = R = {r,t}, a+b <= 3", lemma35(&mut kl)),
        ("length and character oracles", oracle_equivalences()),
    ];
    let mut failed = false;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed = true;
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
