//! Basis-tagged elements: the uniform currency of the CLI and the JSON format.

use std::fmt;
use std::str::FromStr;

use super::lincomb::LinComb;
use crate::combinatorics::{SetComposition, SetPartition, Subset};
use crate::error::{Error, Result};

/// Every basis the library knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomial basis of NCQSym, keyed by set compositions.
    M,
    /// Fundamental basis, keyed by standard pairs (as set compositions).
    F,
    /// Enriched fundamental basis of the peak algebra, keyed by odd set compositions.
    K,
    /// Enriched monomial basis, keyed by odd set compositions.
    Eta,
    /// Monomial symmetric functions, keyed by set partitions.
    Mono,
    P,
    E,
    H,
    Q,
    /// The `n_π` basis of the odd-partition space.
    N,
    QSymM,
    QSymF,
    QSymK,
    QSymEta,
}

/// What kind of object indexes a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyKind {
    Comp,
    Part,
    Sub,
}

impl Basis {
    pub const ALL: [Basis; 14] = [
        Basis::M,
        Basis::F,
        Basis::K,
        Basis::Eta,
        Basis::Mono,
        Basis::P,
        Basis::E,
        Basis::H,
        Basis::Q,
        Basis::N,
        Basis::QSymM,
        Basis::QSymF,
        Basis::QSymK,
        Basis::QSymEta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::K => "K",
            Basis::Eta => "Eta",
            Basis::Mono => "m",
            Basis::P => "p",
            Basis::E => "e",
            Basis::H => "h",
            Basis::Q => "q",
            Basis::N => "nbasis",
            Basis::QSymM => "QSymM",
            Basis::QSymF => "QSymF",
            Basis::QSymK => "QSymK",
            Basis::QSymEta => "QSymEta",
        }
    }

    pub fn key_kind(self) -> KeyKind {
        match self {
            Basis::M | Basis::F | Basis::K | Basis::Eta => KeyKind::Comp,
            Basis::Mono | Basis::P | Basis::E | Basis::H | Basis::Q | Basis::N => KeyKind::Part,
            Basis::QSymM | Basis::QSymF | Basis::QSymK | Basis::QSymEta => KeyKind::Sub,
        }
    }

    /// Keys of these bases must be odd (set compositions, set partitions, or
    /// peak sets for the commutative ones).
    pub fn needs_odd_key(self) -> bool {
        matches!(self, Basis::K | Basis::Eta | Basis::Q | Basis::N | Basis::QSymK | Basis::QSymEta)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(b) = Basis::ALL.iter().find(|b| b.name() == s) {
            return Ok(*b);
        }
        match s {
            "eta" | "η" => Ok(Basis::Eta),
            "n" => Ok(Basis::N),
            "mono" => Ok(Basis::Mono),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// An index object. `Q`/`N`/`K`/`Eta` keys are odd, which is not encoded in
/// the type but checked by [`Element::new`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Key {
    Comp(SetComposition),
    Part(SetPartition),
    Sub(Subset),
}

impl Key {
    pub fn n(&self) -> usize {
        match self {
            Key::Comp(c) => c.n(),
            Key::Part(p) => p.n(),
            Key::Sub(s) => s.n(),
        }
    }

    fn kind(&self) -> KeyKind {
        match self {
            Key::Comp(_) => KeyKind::Comp,
            Key::Part(_) => KeyKind::Part,
            Key::Sub(_) => KeyKind::Sub,
        }
    }

    fn is_odd(&self) -> bool {
        match self {
            Key::Comp(c) => c.is_odd(),
            Key::Part(p) => p.is_odd(),
            Key::Sub(s) => s.is_peak_set(),
        }
    }

    /// Canonical text of the key in the given basis.
    pub fn render(&self, basis: Basis) -> String {
        match self {
            Key::Comp(c) => c.to_string(),
            Key::Part(p) => p.to_string(),
            Key::Sub(s) => {
                let tag = if matches!(basis, Basis::QSymK | Basis::QSymEta) { "B" } else { "A" };
                format!("{tag}={{{s}}};n={}", s.n())
            }
        }
    }
}

/// A homogeneous element written in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    basis: Basis,
    n: usize,
    terms: LinComb<Key>,
}

impl Element {
    pub fn new(basis: Basis, n: usize, terms: LinComb<Key>) -> Result<Self> {
        for k in terms.keys() {
            if k.kind() != basis.key_kind() {
                return Err(Error::BasisMismatch(format!("key {k:?} does not index basis {basis}")));
            }
            if k.n() != n {
                return Err(Error::Invalid(format!(
                    "key {} has degree {} in a degree-{n} element",
                    k.render(basis),
                    k.n()
                )));
            }
            if basis.needs_odd_key() && !k.is_odd() {
                return Err(Error::Invalid(format!("{basis} keys must be odd, got {}", k.render(basis))));
            }
        }
        Ok(Element { basis, n, terms })
    }

    pub fn zero(basis: Basis, n: usize) -> Self {
        Element { basis, n, terms: LinComb::zero() }
    }

    pub fn from_comps(basis: Basis, n: usize, x: &LinComb<SetComposition>) -> Result<Self> {
        Self::new(basis, n, x.map_keys(|c| Key::Comp(c.clone())))
    }

    pub fn from_parts(basis: Basis, n: usize, x: &LinComb<SetPartition>) -> Result<Self> {
        Self::new(basis, n, x.map_keys(|p| Key::Part(p.clone())))
    }

    pub fn from_subsets(basis: Basis, n: usize, x: &LinComb<Subset>) -> Result<Self> {
        Self::new(basis, n, x.map_keys(|s| Key::Sub(*s)))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &LinComb<Key> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn mismatch(&self, want: &str) -> Error {
        Error::BasisMismatch(format!("expected {want}-indexed element, got basis {}", self.basis))
    }

    pub fn comps(&self) -> Result<LinComb<SetComposition>> {
        if self.basis.key_kind() != KeyKind::Comp {
            return Err(self.mismatch("set-composition"));
        }
        Ok(self.terms.map_keys(|k| match k {
            Key::Comp(c) => c.clone(),
            _ => unreachable!("validated on construction"),
        }))
    }

    pub fn parts(&self) -> Result<LinComb<SetPartition>> {
        if self.basis.key_kind() != KeyKind::Part {
            return Err(self.mismatch("set-partition"));
        }
        Ok(self.terms.map_keys(|k| match k {
            Key::Part(p) => p.clone(),
            _ => unreachable!("validated on construction"),
        }))
    }

    pub fn subsets(&self) -> Result<LinComb<Subset>> {
        if self.basis.key_kind() != KeyKind::Sub {
            return Err(self.mismatch("subset"));
        }
        Ok(self.terms.map_keys(|k| match k {
            Key::Sub(s) => *s,
            _ => unreachable!("validated on construction"),
        }))
    }

    fn check_compatible(&self, other: &Element) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(format!("{} vs {}", self.basis, other.basis)));
        }
        if self.n != other.n {
            return Err(Error::Invalid(format!("degrees differ: {} vs {}", self.n, other.n)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_compatible(other)?;
        Ok(Element { basis: self.basis, n: self.n, terms: self.terms.add(&other.terms) })
    }

    pub fn scale(&self, c: &super::Rational) -> Element {
        Element { basis: self.basis, n: self.n, terms: self.terms.scale(c) }
    }
}

impl fmt::Display for Element {
    /// `c*Basis:key + ...`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(k, c)| format!("{c}*{}:{}", self.basis, k.render(self.basis))).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// An element of a tensor square (or product of two spaces).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    left: Basis,
    right: Basis,
    terms: LinComb<(Key, Key)>,
}

impl TensorElement {
    pub fn new(left: Basis, right: Basis, terms: LinComb<(Key, Key)>) -> Result<Self> {
        for (a, b) in terms.keys() {
            if a.kind() != left.key_kind() || b.kind() != right.key_kind() {
                return Err(Error::BasisMismatch(format!("tensor keys do not index {left} ⊗ {right}")));
            }
        }
        Ok(TensorElement { left, right, terms })
    }

    pub fn from_comps(left: Basis, right: Basis, t: &LinComb<(SetComposition, SetComposition)>) -> Result<Self> {
        Self::new(left, right, t.map_keys(|(a, b)| (Key::Comp(a.clone()), Key::Comp(b.clone()))))
    }

    pub fn left(&self) -> Basis {
        self.left
    }

    pub fn right(&self) -> Basis {
        self.right
    }

    pub fn terms(&self) -> &LinComb<(Key, Key)> {
        &self.terms
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                format!("{c}*{}:{} # {}:{}", self.left, a.render(self.left), self.right, b.render(self.right))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::lincomb::rat;

    #[test]
    fn construction_checks() {
        let phi: SetComposition = "1,2".parse().unwrap();
        let x = LinComb::single(Key::Comp(phi.clone()));
        assert!(Element::new(Basis::M, 2, x.clone()).is_ok());
        assert!(Element::new(Basis::K, 2, x.clone()).is_err());
        assert!(Element::new(Basis::M, 3, x.clone()).is_err());
        assert!(Element::new(Basis::P, 2, x).is_err());
        let e = Element::from_comps(Basis::M, 2, &LinComb::term(phi, rat(-3))).unwrap();
        assert_eq!(e.to_string(), "-3*M:1,2");
        assert!(e.add(&e.scale(&rat(-1))).unwrap().is_zero());
    }

    #[test]
    fn basis_names_round_trip() {
        for b in Basis::ALL {
            assert_eq!(b.name().parse::<Basis>().unwrap(), b);
        }
    }
}
