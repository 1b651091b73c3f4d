//! Left and two-sided cells of `W'`, the a-function, and the quotient
//! `H_{>=2} / H_{c0}`.
//!
//! Left cells are classified from right descent sets and right
//! multiplication chains. A chain such as `A_rt = A_rs t` is read as: `x` lies
//! in `A_rt` iff `R(x) = {r, t}` and `xt` (which is shorter) lies in `A_rs`.
//! Elements of the `w`-coset are classified through their Coxeter part.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::coxeter::{Generator, GroupElement};
use crate::error::{Error, Result};
use crate::hecke::{format_combination, Basis, HeckeElement};
use crate::laurent::LaurentPoly;

use Generator::{R, S, T};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LeftCellName {
    Ars,
    Art,
    As,
    Ar,
    Ast,
    ArtPrime,
    AsPrime,
    At,
    Brt,
    Bs,
    Br,
    Bt,
    Cr,
    Ct,
    Cs,
    DEmpty,
}

impl LeftCellName {
    pub const ALL: [LeftCellName; 16] = [
        LeftCellName::Ars,
        LeftCellName::Art,
        LeftCellName::As,
        LeftCellName::Ar,
        LeftCellName::Ast,
        LeftCellName::ArtPrime,
        LeftCellName::AsPrime,
        LeftCellName::At,
        LeftCellName::Brt,
        LeftCellName::Bs,
        LeftCellName::Br,
        LeftCellName::Bt,
        LeftCellName::Cr,
        LeftCellName::Ct,
        LeftCellName::Cs,
        LeftCellName::DEmpty,
    ];

    pub fn two_sided(self) -> TwoSidedCellName {
        use LeftCellName::*;
        match self {
            Ars | Art | As | Ar | Ast | ArtPrime | AsPrime | At => TwoSidedCellName::C0,
            Brt | Bs | Br | Bt => TwoSidedCellName::C2,
            Cr | Ct | Cs => TwoSidedCellName::C1,
            DEmpty => TwoSidedCellName::Ce,
        }
    }

    /// The right descent set shared by every element of the cell.
    pub fn right_descents(self) -> BTreeSet<Generator> {
        use LeftCellName::*;
        match self {
            Ars => [R, S].into(),
            Ast => [S, T].into(),
            Art | ArtPrime | Brt => [R, T].into(),
            As | AsPrime | Bs | Cs => [S].into(),
            Ar | Br | Cr => [R].into(),
            At | Bt | Ct => [T].into(),
            DEmpty => BTreeSet::new(),
        }
    }

    pub fn name(self) -> &'static str {
        use LeftCellName::*;
        match self {
            Ars => "A_rs",
            Art => "A_rt",
            As => "A_s",
            Ar => "A_r",
            Ast => "A_st",
            ArtPrime => "A_rt'",
            AsPrime => "A_s'",
            At => "A_t",
            Brt => "B_rt",
            Bs => "B_s",
            Br => "B_r",
            Bt => "B_t",
            Cr => "C_r",
            Ct => "C_t",
            Cs => "C_s",
            DEmpty => "D_empty",
        }
    }
}

impl fmt::Display for LeftCellName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TwoSidedCellName {
    Ce,
    C1,
    C2,
    C0,
}

impl TwoSidedCellName {
    pub fn a_value(self) -> u32 {
        match self {
            TwoSidedCellName::Ce => 0,
            TwoSidedCellName::C1 => 1,
            TwoSidedCellName::C2 => 2,
            TwoSidedCellName::C0 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TwoSidedCellName::Ce => "c_e",
            TwoSidedCellName::C1 => "c_1",
            TwoSidedCellName::C2 => "c_2",
            TwoSidedCellName::C0 => "c_0",
        }
    }
}

impl fmt::Display for TwoSidedCellName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The left cell containing the Coxeter part of `x`.
pub fn classify_left_cell(x: &GroupElement) -> LeftCellName {
    use LeftCellName::*;
    let x = x.coxeter_part();
    let rd = x.right_descents();
    let has = |g: Generator| rd.contains(&g);
    let below = |g: Generator| classify_left_cell(&x.mul_gen(g));
    match (has(R), has(S), has(T)) {
        (false, false, false) => DEmpty,
        (true, true, false) => Ars,
        (false, true, true) => Ast,
        (true, false, true) => {
            if below(T) == Ars {
                Art
            } else if below(R) == Ast {
                ArtPrime
            } else {
                Brt
            }
        }
        (false, true, false) => match below(S) {
            Art => As,
            ArtPrime => AsPrime,
            Brt => Bs,
            _ => Cs,
        },
        (true, false, false) => match below(R) {
            As => Ar,
            Bs => Br,
            _ => Cr,
        },
        (false, false, true) => match below(T) {
            AsPrime => At,
            Bs => Bt,
            _ => Ct,
        },
        (true, true, true) => unreachable!("W' is infinite, no element has every generator as a descent"),
    }
}

pub fn two_sided_cell(x: &GroupElement) -> TwoSidedCellName {
    classify_left_cell(x).two_sided()
}

/// Lusztig's a-function, read off the two-sided cell; `a(wx) = a(x)`.
pub fn a_value(x: &GroupElement) -> u32 {
    two_sided_cell(x).a_value()
}

/// Drops every term `C_x` with `a(x) = 4`.
pub fn reduce_mod_c0(h: &HeckeElement) -> Result<HeckeElement> {
    h.expect_basis(Basis::C)?;
    Ok(HeckeElement::from_terms(
        Basis::C,
        h.iter().filter(|(x, _)| a_value(x) != 4).map(|(x, c)| (*x, c.clone())),
    ))
}

/// The part of `h` lying in `H_{c0}`.
pub fn c0_part(h: &HeckeElement) -> Result<HeckeElement> {
    h.expect_basis(Basis::C)?;
    Ok(HeckeElement::from_terms(
        Basis::C,
        h.iter().filter(|(x, _)| a_value(x) == 4).map(|(x, c)| (*x, c.clone())),
    ))
}

/// Coordinates of the image of `h` in `H_{>=2} / H_{c0}` on the basis
/// `C^_x`, `x` in `c2`.
pub fn project_to_quotient(h: &HeckeElement) -> Result<BTreeMap<GroupElement, LaurentPoly>> {
    h.expect_basis(Basis::C)?;
    let mut out = BTreeMap::new();
    for (x, c) in h.sorted_terms() {
        match a_value(&x) {
            4 => {}
            2 => {
                out.insert(x, c);
            }
            _ => return Err(Error::NotInIdeal(x.to_string())),
        }
    }
    Ok(out)
}

/// Renders quotient coordinates as `C^[rt] - [2]·C^[rtsrt]`.
pub fn format_quotient(coords: &BTreeMap<GroupElement, LaurentPoly>) -> String {
    let mut v: Vec<_> = coords.iter().collect();
    v.sort_by_key(|(x, _)| x.shortlex_key());
    format_combination(v.into_iter().map(|(x, c)| (format!("C^[{x}]"), c)))
}

/// `rt(srt)^m w^p`.
pub fn h1_element(m: usize, p: u8) -> GroupElement {
    let mut word = vec![R, T];
    for _ in 0..m {
        word.extend([S, R, T]);
    }
    let x = GroupElement::from_word(&word);
    if p % 2 == 1 {
        x.mul(&GroupElement::omega())
    } else {
        x
    }
}

/// `(m, p)` with `x = rt(srt)^m w^p`, if `x` has that form.
pub fn parse_h1_index(x: &GroupElement) -> Option<(usize, u8)> {
    let p = x.omega_exponent();
    let len = x.length();
    if len < 2 || !(len - 2).is_multiple_of(3) {
        return None;
    }
    let m = (len - 2) / 3;
    (h1_element(m, p) == *x).then_some((m, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{enumerate, Cosets};

    fn el(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_left_cell(&el("e")), LeftCellName::DEmpty);
        for m in 0..=4 {
            assert_eq!(classify_left_cell(&h1_element(m, 0)), LeftCellName::Brt, "m = {m}");
        }
        // stsr has a unique reduced expression, so it sits in c_1, not c_0.
        assert_eq!(classify_left_cell(&el("stsr")), LeftCellName::Cr);
        assert_eq!(classify_left_cell(&el("rststr")), LeftCellName::ArtPrime);
        assert_eq!(classify_left_cell(&el("tsrsrt")), LeftCellName::Art);
    }

    #[test]
    fn a_values() {
        assert_eq!(a_value(&el("e")), 0);
        assert_eq!(a_value(&el("rtsrt")), 2);
        assert_eq!(a_value(&el("s")), 1);
        for x in enumerate(8, 24, Cosets::CoxeterOnly).unwrap() {
            assert_eq!(a_value(&GroupElement::omega().mul(&x)), a_value(&x));
        }
    }

    #[test]
    fn reduction_mod_c0() {
        let h = HeckeElement::from_terms(
            Basis::C,
            [(el("rststr"), LaurentPoly::one()), (el("rt"), LaurentPoly::one())],
        );
        let red = reduce_mod_c0(&h).unwrap();
        assert_eq!(red, HeckeElement::basis_element(Basis::C, el("rt")));
        assert_eq!(reduce_mod_c0(&red).unwrap(), red);
        assert!(reduce_mod_c0(&HeckeElement::zero(Basis::C)).unwrap().is_zero());
        assert!(reduce_mod_c0(&HeckeElement::one()).is_err());
    }

    #[test]
    fn quotient_projection() {
        let c = |s: &str| HeckeElement::basis_element(Basis::C, el(s));
        let p = project_to_quotient(&c("rtsrt")).unwrap();
        assert_eq!(p, [(el("rtsrt"), LaurentPoly::one())].into());
        assert!(matches!(project_to_quotient(&c("s")), Err(Error::NotInIdeal(_))));
        let two = LaurentPoly::quantum_two();
        let h = HeckeElement::from_terms(
            Basis::C,
            [
                (el("rststr"), LaurentPoly::one()),
                (el("tsrsrt"), LaurentPoly::one()),
                (el("rtsrt"), -&two),
                (el("rt"), LaurentPoly::one()),
            ],
        );
        let p = project_to_quotient(&h).unwrap();
        assert_eq!(p, [(el("rt"), LaurentPoly::one()), (el("rtsrt"), -two)].into());
        assert_eq!(format_quotient(&p), "C^[rt] - [2]·C^[rtsrt]");
    }

    #[test]
    fn h1_indices() {
        assert_eq!(parse_h1_index(&el("rt")), Some((0, 0)));
        assert_eq!(parse_h1_index(&el("rtsrt").mul(&GroupElement::omega())), Some((1, 1)));
        assert_eq!(parse_h1_index(&el("w.rtsrt")), Some((1, 1)));
        assert_eq!(parse_h1_index(&el("s")), None);
        assert_eq!(parse_h1_index(&el("rst")), None);
    }

    #[test]
    fn cells_have_their_descent_sets() {
        for x in enumerate(10, 24, Cosets::CoxeterOnly).unwrap() {
            let cell = classify_left_cell(&x);
            assert_eq!(x.right_descents(), cell.right_descents(), "{x} in {cell}");
        }
    }
}
