//! The inline element grammar and the JSON element/tensor schemas.
//!
//! Inline: `<coeff>*<basis>:<key> [+ ...]`, coefficient optional (`1`),
//! rational `p/q`, a leading `-` allowed on any term, `0` for the zero
//! element. Keys are set compositions (`2,5,6|1,3|4`, `{}` when empty),
//! set partitions (`1,3/2`), subset keys (`A={2,4};n=5`, `B={2};n=4`), or
//! pair forms: `A={..};sigma=..` for M and F, `B={..};sigma=..` for K and Eta.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::algebra::{Basis, Element, Key, KeyKind, LinComb, Rational, TensorElement};
use crate::combinatorics::{parse_subset, set_comp, Permutation, SetComposition, SetPartition};
use crate::error::{Error, Result};
use crate::ncpeak::{eta_key, k_pair_in_k};
use crate::ncqsym::{f_to_m, to_f_basis};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s: String = s.split_whitespace().collect();
    Rational::from_str(&s).map_err(|_| parse_err(format!("bad coefficient {s:?}")))
}

fn parse_comp(s: &str) -> Result<SetComposition> {
    match s.trim() {
        "{}" | "∅" | "" => Ok(SetComposition::empty()),
        t => t.parse(),
    }
}

/// Split `A={..};sigma=..;n=..` into `(field, value)` pairs.
fn fields(s: &str) -> Result<Vec<(&str, &str)>> {
    s.split(';')
        .map(|f| {
            f.split_once('=').map(|(k, v)| (k.trim(), v.trim())).ok_or_else(|| parse_err(format!("bad field {f:?}")))
        })
        .collect()
}

fn field<'a>(fs: &[(&str, &'a str)], name: &str) -> Result<&'a str> {
    fs.iter().find(|(k, _)| *k == name).map(|(_, v)| *v).ok_or_else(|| parse_err(format!("missing {name}=")))
}

/// Parse one key of `basis`. Pair forms can expand into several canonical keys.
pub fn parse_key(basis: Basis, s: &str) -> Result<LinComb<Key>> {
    let s = s.trim();
    let comp = |c: SetComposition| LinComb::single(Key::Comp(c));
    match basis.key_kind() {
        KeyKind::Part => Ok(LinComb::single(Key::Part(s.parse::<SetPartition>()?))),
        KeyKind::Sub => {
            let fs = fields(s)?;
            let n: usize = field(&fs, "n")?.parse().map_err(|_| parse_err(format!("bad n in {s:?}")))?;
            let tag = if matches!(basis, Basis::QSymK | Basis::QSymEta) { "B" } else { "A" };
            Ok(LinComb::single(Key::Sub(parse_subset(field(&fs, tag)?, n)?)))
        }
        KeyKind::Comp if !s.contains('=') => Ok(comp(parse_comp(s)?)),
        KeyKind::Comp => {
            let fs = fields(s)?;
            let sigma: Permutation = field(&fs, "sigma")?.parse()?;
            let n = sigma.n();
            match basis {
                Basis::M => Ok(comp(set_comp(&parse_subset(field(&fs, "A")?, n)?, &sigma)?)),
                Basis::F => {
                    let f = to_f_basis(&f_to_m(&parse_subset(field(&fs, "A")?, n)?, &sigma)?);
                    Ok(f.map_keys(|c| Key::Comp(c.clone())))
                }
                Basis::Eta => Ok(comp(eta_key(&parse_subset(field(&fs, "B")?, n)?, &sigma)?)),
                _ => {
                    let k = k_pair_in_k(&parse_subset(field(&fs, "B")?, n)?, &sigma)?;
                    Ok(k.map_keys(|c| Key::Comp(c.clone())))
                }
            }
        }
    }
}

/// Split on top-level `+`, folding ` - ` into a negated term.
fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut prev = ' ';
    for ch in s.chars() {
        if ch == '+' || (ch == '-' && prev.is_whitespace() && !cur.trim().is_empty()) {
            out.push(std::mem::take(&mut cur));
            if ch == '-' {
                cur.push('-');
            }
        } else {
            cur.push(ch);
        }
        prev = ch;
    }
    out.push(cur);
    out.into_iter().map(|t| t.trim().to_string()).collect()
}

/// Parse the inline grammar. `fallback` supplies basis and degree for `0`.
pub fn parse_element(s: &str, fallback: Option<(Basis, usize)>) -> Result<Element> {
    let s = s.trim();
    if s == "0" {
        let (b, n) = fallback.ok_or_else(|| parse_err("the zero element needs an explicit basis and degree"))?;
        return Ok(Element::zero(b, n));
    }
    let mut basis: Option<Basis> = None;
    let mut terms: LinComb<Key> = LinComb::zero();
    for term in split_terms(s) {
        if term.is_empty() {
            return Err(parse_err(format!("empty term in {s:?}")));
        }
        let (coeff, rest) = match term.split_once('*') {
            Some((c, r)) => (parse_rational(c)?, r.trim()),
            None => match term.strip_prefix('-') {
                Some(r) => (-Rational::one(), r.trim()),
                None => (Rational::one(), term.as_str()),
            },
        };
        let (b, key) = rest.split_once(':').ok_or_else(|| parse_err(format!("term {term:?} lacks basis:key")))?;
        let b: Basis = b.parse()?;
        match basis {
            None => basis = Some(b),
            Some(prev) if prev != b => return Err(Error::BasisMismatch(format!("{prev} and {b} in one element"))),
            _ => {}
        }
        terms.add_scaled(&parse_key(b, key)?, &coeff);
    }
    let basis = basis.expect("at least one term");
    let n = match terms.first_key() {
        Some(k) => k.n(),
        None => fallback.map(|(_, n)| n).unwrap_or(0),
    };
    Element::new(basis, n, terms)
}

fn coeff_json(c: &Rational) -> (String, String) {
    (c.numer().to_string(), c.denom().to_string())
}

fn coeff_from_json(t: &Value) -> Result<Rational> {
    let get = |f: &str| -> Result<BigInt> {
        let v = t.get(f).ok_or_else(|| parse_err(format!("term lacks {f:?}")))?;
        let s = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(parse_err(format!("{f:?} must be a decimal string"))),
        };
        BigInt::from_str(&s).map_err(|_| parse_err(format!("bad integer {s:?}")))
    };
    let den = if t.get("den").is_some() { get("den")? } else { BigInt::one() };
    if den == BigInt::from(0) {
        return Err(parse_err("zero denominator"));
    }
    Ok(Rational::new(get("num")?, den))
}

pub fn element_to_json(x: &Element) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(k, c)| {
            let (num, den) = coeff_json(c);
            json!({ "key": k.render(x.basis()), "num": num, "den": den })
        })
        .collect();
    json!({ "n": x.n(), "basis": x.basis().name(), "terms": terms })
}

pub fn element_from_json(v: &Value) -> Result<Element> {
    let basis: Basis = v.get("basis").and_then(Value::as_str).ok_or_else(|| parse_err("missing \"basis\""))?.parse()?;
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| parse_err("missing \"n\""))? as usize;
    let arr = v.get("terms").and_then(Value::as_array).ok_or_else(|| parse_err("missing \"terms\""))?;
    let mut terms = LinComb::zero();
    for t in arr {
        let key = t.get("key").and_then(Value::as_str).ok_or_else(|| parse_err("term lacks \"key\""))?;
        terms.add_scaled(&parse_key(basis, key)?, &coeff_from_json(t)?);
    }
    Element::new(basis, n, terms)
}

pub fn tensor_to_json(t: &TensorElement) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|((a, b), c)| {
            let (num, den) = coeff_json(c);
            json!({ "left": a.render(t.left()), "right": b.render(t.right()), "num": num, "den": den })
        })
        .collect();
    json!({ "left_basis": t.left().name(), "right_basis": t.right().name(), "terms": terms })
}

/// Read an element from inline text, or from JSON when the text is an object.
pub fn read_element(s: &str, fallback: Option<(Basis, usize)>) -> Result<Element> {
    let t = s.trim();
    if t.starts_with('{') && t.contains("\"basis\"") {
        let v: Value = serde_json::from_str(t).map_err(|e| parse_err(format!("JSON: {e}")))?;
        element_from_json(&v)
    } else {
        parse_element(t, fallback)
    }
}
