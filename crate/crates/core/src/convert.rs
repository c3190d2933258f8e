//! Change of basis between every supported basis, plus the algebra
//! operations lifted to basis-tagged [`Element`]s. The M basis is the hub:
//! every NCQSym-side element is expanded into M and re-expressed from there.

use std::collections::BTreeMap;

use crate::algebra::{Basis, Echelon, Element, KeyKind, LinComb, MComb, MTensor, TensorElement};
use crate::combinatorics::{SetComposition, SetPartition, Subset};
use crate::error::{Error, Result};
use crate::ncpeak::{eta_comb_to_m, k_comb_to_m, to_eta_basis, to_k_basis};
use crate::ncqsym::{coproduct, from_f_basis, internal_coproduct, product, rho_m, to_f_basis};
use crate::ncsym::{
    e_to_big_m, h_to_big_m, m_comb_to_big_m, membership_ncsym, n_elem, omega, p_comb_to_big_m, q_elem, to_p_basis,
};
use crate::theta::qsym::{qsym_eta_to_m, qsym_f_to_m, qsym_k_to_m, qsym_m_to_f, theta_qsym, QComb};
use crate::theta::theta;

fn mismatch(b: Basis, what: &str) -> Error {
    Error::BasisMismatch(format!("basis {b} cannot be used for {what}"))
}

fn is_qsym(b: Basis) -> bool {
    b.key_kind() == KeyKind::Sub
}

/// Expand an NCQSym-side element (any composition or partition basis) in M.
pub fn to_m(x: &Element) -> Result<MComb> {
    match x.basis() {
        Basis::M => x.comps(),
        Basis::F => Ok(from_f_basis(&x.comps()?)),
        Basis::K => k_comb_to_m(&x.comps()?),
        Basis::Eta => eta_comb_to_m(&x.comps()?),
        Basis::Mono => Ok(m_comb_to_big_m(&x.parts()?)),
        Basis::P => Ok(p_comb_to_big_m(&x.parts()?)),
        Basis::E => Ok(x.parts()?.map_linear(e_to_big_m)),
        Basis::H => Ok(x.parts()?.map_linear(h_to_big_m)),
        Basis::Q => Ok(x.parts()?.map_linear(q_elem)),
        Basis::N => {
            let eta = x.parts()?.try_map_linear(n_elem)?;
            eta_comb_to_m(&eta)
        }
        b => Err(mismatch(b, "an NCQSym expansion")),
    }
}

/// Expand a QSym-side element in the commutative M basis.
pub fn to_qsym_m(x: &Element) -> Result<QComb> {
    let s = x.subsets()?;
    match x.basis() {
        Basis::QSymM => Ok(s),
        Basis::QSymF => Ok(s.map_linear(qsym_f_to_m)),
        Basis::QSymK => s.try_map_linear(qsym_k_to_m),
        Basis::QSymEta => s.try_map_linear(qsym_eta_to_m),
        b => Err(mismatch(b, "a QSym expansion")),
    }
}

/// Coordinates of `x` in the span of `family`, by exact elimination.
fn solve_family<K: Ord + Clone, V: Ord + Clone>(x: &LinComb<V>, family: Vec<(K, LinComb<V>)>) -> Result<LinComb<K>> {
    let mut ech = Echelon::new();
    for (_, v) in &family {
        ech.insert(v);
    }
    let coords = ech.solve(x).ok_or(Error::NotInSpan)?;
    Ok(coords.map_keys(|&i| family[i].0.clone()))
}

/// Re-express an M-basis element of degree `n` in `target`.
pub fn from_m(x: &MComb, n: usize, target: Basis) -> Result<Element> {
    let parts_family = |odd: bool, f: &dyn Fn(&SetPartition) -> Result<MComb>| -> Result<Vec<(SetPartition, MComb)>> {
        let all = if odd { SetPartition::all_odd(n) } else { SetPartition::all(n) };
        all.into_iter().map(|pi| f(&pi).map(|v| (pi, v))).collect()
    };
    match target {
        Basis::M => Element::from_comps(target, n, x),
        Basis::F => Element::from_comps(target, n, &to_f_basis(x)),
        Basis::K => Element::from_comps(target, n, &to_k_basis(x)?),
        Basis::Eta => Element::from_comps(target, n, &to_eta_basis(x)?),
        Basis::Mono => Element::from_parts(target, n, &membership_ncsym(x)?),
        Basis::P => Element::from_parts(target, n, &to_p_basis(x)?),
        Basis::E => {
            membership_ncsym(x)?;
            Element::from_parts(target, n, &solve_family(x, parts_family(false, &|pi| Ok(e_to_big_m(pi)))?)?)
        }
        Basis::H => {
            membership_ncsym(x)?;
            Element::from_parts(target, n, &solve_family(x, parts_family(false, &|pi| Ok(h_to_big_m(pi)))?)?)
        }
        Basis::Q => Element::from_parts(target, n, &solve_family(x, parts_family(true, &|pi| Ok(q_elem(pi)))?)?),
        Basis::N => {
            let fam = parts_family(true, &|pi| eta_comb_to_m(&n_elem(pi)?))?;
            Element::from_parts(target, n, &solve_family(x, fam)?)
        }
        b => Err(mismatch(b, "an NCQSym target")),
    }
}

/// Re-express a commutative M-basis element of degree `n` in a QSym basis.
pub fn from_qsym_m(x: &QComb, n: usize, target: Basis) -> Result<Element> {
    let peak_family = |f: fn(&Subset) -> Result<QComb>| -> Result<Vec<(Subset, QComb)>> {
        Subset::peak_sets(n).into_iter().map(|b| f(&b).map(|v| (b, v))).collect()
    };
    match target {
        Basis::QSymM => Element::from_subsets(target, n, x),
        Basis::QSymF => Element::from_subsets(target, n, &x.map_linear(qsym_m_to_f)),
        Basis::QSymK => Element::from_subsets(target, n, &solve_family(x, peak_family(qsym_k_to_m)?)?),
        Basis::QSymEta => Element::from_subsets(target, n, &solve_family(x, peak_family(qsym_eta_to_m)?)?),
        b => Err(mismatch(b, "a QSym target")),
    }
}

/// Change of basis. NCQSym-side and QSym-side bases do not mix; use
/// [`rho_element`] to pass from one to the other.
pub fn convert(x: &Element, target: Basis) -> Result<Element> {
    if x.basis() == target {
        return Ok(x.clone());
    }
    match (is_qsym(x.basis()), is_qsym(target)) {
        (false, false) => from_m(&to_m(x)?, x.n(), target),
        (true, true) => from_qsym_m(&to_qsym_m(x)?, x.n(), target),
        _ => Err(Error::BasisMismatch(format!("cannot convert {} to {target}", x.basis()))),
    }
}

/// `Θ` on an element, written in `target` (K or QSymK when `None`).
pub fn theta_element(x: &Element, target: Option<Basis>) -> Result<Element> {
    if is_qsym(x.basis()) {
        let image = theta_qsym(&to_qsym_m(x)?);
        from_qsym_m(&image, x.n(), target.unwrap_or(Basis::QSymK))
    } else {
        from_m(&theta(&to_m(x)?), x.n(), target.unwrap_or(Basis::K))
    }
}

/// `ρ`: commute the variables; the result is in the commutative M basis.
pub fn rho_element(x: &Element) -> Result<Element> {
    Element::from_subsets(Basis::QSymM, x.n(), &rho_m(&to_m(x)?))
}

/// `ω`, applied directly on p, e, h and through the p basis otherwise.
pub fn omega_element(x: &Element) -> Result<Element> {
    let (basis, parts) = match x.basis() {
        Basis::P | Basis::E | Basis::H => (x.basis(), x.parts()?),
        _ => (Basis::P, to_p_basis(&to_m(x)?)?),
    };
    let (b, image) = omega(basis, &parts)?;
    Element::from_parts(b, x.n(), &image)
}

/// Product, written in `target` (defaults to the common input basis, or M).
pub fn product_elements(x: &Element, y: &Element, target: Option<Basis>) -> Result<Element> {
    let default = if x.basis() == y.basis() { x.basis() } else { Basis::M };
    from_m(&product(&to_m(x)?, &to_m(y)?), x.n() + y.n(), target.unwrap_or(default))
}

/// Re-express both legs of an M ⊗ M tensor in the requested bases.
pub fn convert_tensor(t: &MTensor, left: Basis, right: Basis) -> Result<TensorElement> {
    let mut by_right: BTreeMap<SetComposition, MComb> = BTreeMap::new();
    for ((a, b), c) in t.iter() {
        by_right.entry(b.clone()).or_default().add_term(a.clone(), c.clone());
    }
    let mut stage: LinComb<(crate::algebra::Key, SetComposition)> = LinComb::zero();
    for (b, comb) in by_right {
        let n = comb.first_key().map_or(0, SetComposition::n);
        for (k, c) in from_m(&comb, n, left)?.terms().iter() {
            stage.add_term((k.clone(), b.clone()), c.clone());
        }
    }
    let mut by_left: BTreeMap<crate::algebra::Key, MComb> = BTreeMap::new();
    for ((a, b), c) in stage.iter() {
        by_left.entry(a.clone()).or_default().add_term(b.clone(), c.clone());
    }
    let mut out = LinComb::zero();
    for (a, comb) in by_left {
        let n = comb.first_key().map_or(0, SetComposition::n);
        for (k, c) in from_m(&comb, n, right)?.terms().iter() {
            out.add_term((a.clone(), k.clone()), c.clone());
        }
    }
    TensorElement::new(left, right, out)
}

/// `Δ(x)`, legs in `basis` (defaults to the input basis).
pub fn coproduct_element(x: &Element, basis: Option<Basis>) -> Result<TensorElement> {
    let b = basis.unwrap_or(x.basis());
    convert_tensor(&coproduct(&to_m(x)?), b, b)
}

/// `Δ°(x)` with left legs in M and right legs in `right` (defaults to the input basis).
pub fn internal_element(x: &Element, right: Option<Basis>) -> Result<TensorElement> {
    convert_tensor(&internal_coproduct(&to_m(x)?), Basis::M, right.unwrap_or(x.basis()))
}
