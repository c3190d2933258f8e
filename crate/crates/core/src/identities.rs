//! Executable checks of the identities behind the internal coproduct of `η_φ`,
//! together with scanners for the two open conjectures about its coefficients.
//!
//! Every verifier returns a [`Check`]. When it fails, `detail` carries the
//! full term table so the failure can be read off without rerunning anything.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{MComb, MTensor, Rational};
use crate::combinatorics::coefficients::meet_weight;
use crate::combinatorics::numbers::{alternating_eulerian_sum, pow2};
use crate::combinatorics::{
    binomial, mu_ell, mu_ell_closed_form, multinomial, odd_compositions, script_c, script_d, script_d_by_meet,
    CoeffTable, SetComposition, SetPartition,
};
use crate::error::{invalid, Result};
use crate::ncpeak::{eta_comb_to_m, eta_odd, to_eta_basis};
use crate::ncqsym::internal_coproduct;
use crate::ncsym::{suitable_sums, theta_p, theta_p_closed};
use crate::theta::check_diagram;

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Outcome of one verifier call.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub holds: bool,
    pub detail: Value,
}

impl Check {
    fn new(holds: bool, detail: Value) -> Self {
        Check { holds, detail }
    }
}

/// One line of a verifier or scanner run.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub identity: String,
    pub n: usize,
    pub ok: bool,
    pub detail: Value,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "n": self.n,
            "status": if self.ok { "ok" } else { "counterexample" },
            "detail": self.detail,
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok { "ok" } else { "counterexample" };
        write!(f, "{} n={} {}", self.identity, self.n, status)
    }
}

fn need_odd_pair(phi: &SetComposition, psi: &SetComposition) -> Result<()> {
    if !phi.is_odd() {
        return invalid(format!("{phi} is not odd"));
    }
    if !psi.leq(phi) {
        return invalid(format!("{psi} ≰ {phi}"));
    }
    Ok(())
}

fn strings<'a>(it: impl IntoIterator<Item = &'a SetComposition>) -> Vec<String> {
    it.into_iter().map(|c| c.to_string()).collect()
}

/// `Σ_{α ⊨ n odd} μ_{ℓ(α)} = 1`.
pub fn verify_case1(n: usize) -> Result<Check> {
    if n == 0 {
        return invalid("n must be positive");
    }
    let comps = odd_compositions(n);
    let mut sum = BigInt::zero();
    let mut closed_ok = true;
    for alpha in &comps {
        let mu = mu_ell(alpha.len());
        closed_ok &= mu == mu_ell_closed_form(alpha.len());
        sum += mu;
    }
    let holds = sum.is_one() && closed_ok;
    Ok(Check::new(
        holds,
        json!({ "compositions": comps.len(), "sum": sum.to_string(), "mu_closed_form_agrees": closed_ok }),
    ))
}

/// For every `φ' ⊨ [n]`: `ψ ≤ ψ∧φ' ≤ φ` iff `φ' ≤ ξ` for some `ξ ∈ 𝒞_φ^ψ`.
pub fn verify_int1(phi: &SetComposition, psi: &SetComposition) -> Result<Check> {
    let c = script_c(phi, psi)?;
    let mut bad = Vec::new();
    let mut closure = 0usize;
    for phiprime in SetComposition::all(phi.n()) {
        let m = psi.meet(&phiprime)?;
        let lhs = psi.leq(&m) && m.leq(phi);
        let rhs = c.iter().any(|xi| phiprime.leq(xi));
        closure += usize::from(rhs);
        if lhs != rhs {
            bad.push(json!({ "phiprime": phiprime.to_string(), "meet": m.to_string(), "meet_side": lhs, "closure_side": rhs }));
        }
    }
    Ok(Check::new(bad.is_empty(), json!({ "script_c": strings(&c), "closure_size": closure, "mismatches": bad })))
}

/// `Σ_{χ ∈ 𝒟_φ^ψ} 2^{ℓ(ψ∧χ)-ℓ(χ)} μ_{ℓ(χ)} = 2^{ℓ(ψ)-1}`.
pub fn verify_main(phi: &SetComposition, psi: &SetComposition) -> Result<Check> {
    need_odd_pair(phi, psi)?;
    let rhs = if psi.is_empty() { BigInt::one() } else { pow2(psi.len() - 1) };
    if phi.n() == 0 {
        return Ok(Check::new(true, json!({ "lhs": "1", "rhs": "1", "terms": [] })));
    }
    let d = script_d(phi, psi)?;
    let mut lhs = BigInt::zero();
    let mut terms = Vec::with_capacity(d.len());
    for chi in &d {
        let w = meet_weight(psi, chi);
        let mu = mu_ell(chi.len());
        let t = &w * &mu;
        terms.push(json!({
            "chi": chi.to_string(),
            "meet": psi.meet(chi)?.to_string(),
            "weight": w.to_string(),
            "mu": mu.to_string(),
            "term": t.to_string(),
        }));
        lhs += t;
    }
    let holds = lhs == rhs;
    let mut detail = json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string(), "d_size": d.len() });
    if !holds {
        detail["terms"] = Value::Array(terms);
    }
    Ok(Check::new(holds, detail))
}

/// The down-closure of `𝒞_φ^ψ`: every set composition, odd or not, below some `ξ`.
pub fn closure_of_c(phi: &SetComposition, psi: &SetComposition) -> Result<BTreeSet<SetComposition>> {
    Ok(script_c(phi, psi)?.iter().flat_map(|xi| xi.coarsenings()).collect())
}

fn int2_sides(
    table: &CoeffTable,
    phi: &SetComposition,
    psi: &SetComposition,
    phiprime: &SetComposition,
) -> Result<(Rational, Rational)> {
    let mut lhs = Rational::zero();
    for (zeta, c) in table.values() {
        if phiprime.leq(zeta) {
            lhs += Rational::from_integer(sign(zeta.p().unwrap())) * c;
        }
    }
    let rhs = Rational::from_integer(sign(phi.p().unwrap()) * meet_weight(psi, phiprime));
    Ok((lhs, rhs))
}

/// The C-sum identity at one `φ'`, which need not be odd.
pub fn verify_int2(phi: &SetComposition, psi: &SetComposition, phiprime: &SetComposition) -> Result<Check> {
    need_odd_pair(phi, psi)?;
    if !script_c(phi, psi)?.iter().any(|xi| phiprime.leq(xi)) {
        return invalid(format!("{phiprime} is not below any member of 𝒞"));
    }
    let table = CoeffTable::new(phi, psi)?;
    let (lhs, rhs) = int2_sides(&table, phi, psi, phiprime)?;
    Ok(Check::new(lhs == rhs, json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() })))
}

/// [`verify_int2`] at every `φ'` of the down-closure, plus agreement of the
/// recursive coefficients with their inclusion-exclusion form.
pub fn verify_int2_all(phi: &SetComposition, psi: &SetComposition) -> Result<Check> {
    need_odd_pair(phi, psi)?;
    let table = CoeffTable::new(phi, psi)?;
    let mut bad = Vec::new();
    let closure = closure_of_c(phi, psi)?;
    for phiprime in &closure {
        let (lhs, rhs) = int2_sides(&table, phi, psi, phiprime)?;
        if lhs != rhs {
            bad.push(json!({ "phiprime": phiprime.to_string(), "lhs": lhs.to_string(), "rhs": rhs.to_string() }));
        }
    }
    let mut disagreements = Vec::new();
    for (zeta, c) in table.values() {
        let ie = table.by_inclusion_exclusion(zeta)?;
        if &ie != c {
            disagreements.push(
                json!({ "zeta": zeta.to_string(), "recursive": c.to_string(), "inclusion_exclusion": ie.to_string() }),
            );
        }
    }
    let holds = bad.is_empty() && disagreements.is_empty();
    Ok(Check::new(
        holds,
        json!({ "closure_size": closure.len(), "failures": bad, "coefficient_disagreements": disagreements }),
    ))
}

/// `Σ_{φ' ∈ 𝒟_φ^ψ} C_{φ'} η_{φ'}`, in η keys.
pub fn predicted_right_leg(phi: &SetComposition, psi: &SetComposition) -> Result<MComb> {
    let table = CoeffTable::new(phi, psi)?;
    Ok(table.values().iter().map(|(z, c)| (z.clone(), c.clone())).collect())
}

/// `Δ°(η_φ)` grouped by left M key, right legs rewritten in the η basis.
/// Fails with `NotInPeakAlgebra` if some right leg leaves the peak algebra.
pub fn internal_eta_by_left(phi: &SetComposition) -> Result<BTreeMap<SetComposition, MComb>> {
    let t = internal_coproduct(&eta_odd(phi)?);
    let mut legs: BTreeMap<SetComposition, MComb> = BTreeMap::new();
    for ((a, b), c) in t.iter() {
        legs.entry(a.clone()).or_default().add_term(b.clone(), c.clone());
    }
    legs.into_iter().map(|(a, leg)| Ok((a, to_eta_basis(&leg)?))).collect()
}

/// `Δ°(η_φ)` against `Σ_{ψ ≤ φ} M_ψ ⊗ (Σ C_{φ'} η_{φ'})`, term by term in
/// `M ⊗ M`; also requires every right leg to lie in the peak algebra.
pub fn verify_internal(phi: &SetComposition) -> Result<Check> {
    if !phi.is_odd() {
        return invalid(format!("{phi} is not odd"));
    }
    let lhs = internal_coproduct(&eta_odd(phi)?);
    let mut rhs = MTensor::zero();
    for psi in phi.coarsenings() {
        let right = eta_comb_to_m(&predicted_right_leg(phi, &psi)?)?;
        for (b, c) in right.iter() {
            rhs.add_term((psi.clone(), b.clone()), c.clone());
        }
    }
    let diff = lhs.sub(&rhs);
    let co_ideal = internal_eta_by_left(phi);
    let holds = diff.is_zero() && co_ideal.is_ok();
    let mismatches: Vec<Value> = diff
        .iter()
        .map(|((a, b), c)| json!({ "left": a.to_string(), "right": b.to_string(), "lhs_minus_rhs": c.to_string() }))
        .collect();
    Ok(Check::new(
        holds,
        json!({
            "terms": lhs.len(),
            "mismatches": mismatches,
            "left_co_ideal": co_ideal.as_ref().map(|_| "ok".to_string()).unwrap_or_else(|e| e.to_string()),
        }),
    ))
}

/// `Σ_α multinomial(n; α) 2^{n-ℓ(α)} μ_{ℓ(α)+1}` over odd compositions `α ⊨ n`.
pub fn euler_lhs(n: usize) -> BigInt {
    odd_compositions(n).iter().map(|a| multinomial(a.parts()) * pow2(n - a.len()) * mu_ell(a.len() + 1)).sum()
}

/// The same sum taken directly over odd set compositions of `[n]`.
pub fn euler_lhs_direct(n: usize) -> BigInt {
    SetComposition::all_odd(n).iter().map(|phi| pow2(n - phi.len()) * mu_ell(phi.len() + 1)).sum()
}

/// Compare the reduced LHS with `Σ_k (-1)^k E(n,k)` for odd `n ≤ n_max`.
pub fn scan_conjecture_euler(n_max: usize) -> Vec<Report> {
    let ns: Vec<usize> = (1..=n_max).step_by(2).collect();
    ns.par_iter()
        .map(|&n| {
            let lhs = euler_lhs(n);
            let rhs = alternating_eulerian_sum(n);
            Report {
                identity: "euler".into(),
                n,
                ok: lhs == rhs,
                detail: json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() }),
            }
        })
        .collect()
}

fn pairs(n: usize) -> Vec<(SetComposition, SetComposition)> {
    SetComposition::all_odd(n)
        .into_iter()
        .flat_map(|phi| phi.coarsenings().into_iter().map(move |psi| (phi.clone(), psi)))
        .collect()
}

/// Look for negative `C_{φ'}^{φψ}` at each degree up to `n_max`, and record
/// where the unproved block-product formula disagrees with the recursion.
pub fn scan_c_nonneg(n_max: usize) -> Result<Vec<Report>> {
    (1..=n_max)
        .map(|n| {
            let per_pair: Vec<(usize, Vec<Value>, Vec<Value>)> = pairs(n)
                .par_iter()
                .map(|(phi, psi)| -> Result<_> {
                    let table = CoeffTable::new(phi, psi)?;
                    let mut neg = Vec::new();
                    let mut disagree = Vec::new();
                    for (z, c) in table.values() {
                        let triple = || json!({ "phi": phi.to_string(), "psi": psi.to_string(), "phiprime": z.to_string(), "c": c.to_string() });
                        if c.is_negative() {
                            neg.push(triple());
                        }
                        if &table.by_block_product(z)? != c {
                            disagree.push(triple());
                        }
                    }
                    Ok((table.values().len(), neg, disagree))
                })
                .collect::<Result<_>>()?;
            let coefficients: usize = per_pair.iter().map(|p| p.0).sum();
            let negatives: Vec<Value> = per_pair.iter().flat_map(|p| p.1.clone()).collect();
            let disagreements: Vec<Value> = per_pair.iter().flat_map(|p| p.2.clone()).collect();
            Ok(Report {
                identity: "c-nonneg".into(),
                n,
                ok: negatives.is_empty(),
                detail: json!({
                    "pairs": per_pair.len(),
                    "coefficients": coefficients,
                    "negatives": negatives,
                    "block_product_disagreements": disagreements.len(),
                    "block_product_examples": disagreements.into_iter().take(5).collect::<Vec<_>>(),
                }),
            })
        })
        .collect()
}

fn special_even_check(n: usize, corrected: bool) -> Result<Check> {
    if n == 0 || n % 2 == 1 {
        return invalid(format!("n = {n} must be even and positive"));
    }
    let mut lhs = BigInt::zero();
    for k in 1..=n / 2 {
        let e = if corrected { n - 2 * k } else { 2 * k - 2 };
        lhs += binomial(n, 2 * k - 1) * pow2(e) * alternating_eulerian_sum(2 * k - 1);
    }
    let rhs = pow2(n - 1);
    Ok(Check::new(lhs == rhs, json!({ "lhs": lhs.to_string(), "rhs": rhs.to_string() })))
}

/// `Σ_{k=1}^{n/2} C(n,2k-1) 2^{2k-2} Σ_m (-1)^m E(2k-1,m) = 2^{n-1}` for even `n`.
pub fn verify_special_even(n: usize) -> Result<Check> {
    special_even_check(n, false)
}

/// The same sum with weight `2^{n-2k}`, which is what splitting off the
/// first block of `χ` in the `ψ = φ = 1|2|…|n` case produces.
pub fn verify_special_even_split(n: usize) -> Result<Check> {
    special_even_check(n, true)
}

/// Identities that [`verify_all`] can sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Case1,
    Int1,
    Main,
    Int2,
    Internal,
    ThetaDiagram,
    NcsymThetaP,
    OddSet,
    SpecialEven,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::Case1,
        Identity::Int1,
        Identity::Main,
        Identity::Int2,
        Identity::Internal,
        Identity::ThetaDiagram,
        Identity::NcsymThetaP,
        Identity::OddSet,
        Identity::SpecialEven,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Case1 => "case1",
            Identity::Int1 => "int1",
            Identity::Main => "main",
            Identity::Int2 => "int2",
            Identity::Internal => "internal",
            Identity::ThetaDiagram => "theta-diagram",
            Identity::NcsymThetaP => "ncsym-theta-p",
            Identity::OddSet => "lem-odd-set",
            Identity::SpecialEven => "special-even",
        }
    }
}

impl std::str::FromStr for Identity {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| crate::Error::Parse(format!("unknown identity {s:?}")))
    }
}

fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<(Check, Value)> + Sync + Send) -> Result<(usize, Vec<Value>)> {
    let results: Vec<(Check, Value)> = items.par_iter().map(f).collect::<Result<_>>()?;
    let failures = results
        .into_iter()
        .filter(|(c, _)| !c.holds)
        .map(|(c, input)| json!({ "input": input, "detail": c.detail }))
        .collect();
    Ok((items.len(), failures))
}

/// Run `id` on every admissible input of degree `n`.
pub fn verify_all(id: Identity, n: usize) -> Result<Report> {
    let pair_input =
        |phi: &SetComposition, psi: &SetComposition| json!({ "phi": phi.to_string(), "psi": psi.to_string() });
    let (cases, failures) = match id {
        Identity::Case1 => {
            let c = verify_case1(n)?;
            (1, if c.holds { vec![] } else { vec![c.detail] })
        }
        Identity::SpecialEven => {
            let c = verify_special_even(n)?;
            (1, if c.holds { vec![] } else { vec![c.detail] })
        }
        Identity::Int1 => sweep(&pairs(n), |(phi, psi)| Ok((verify_int1(phi, psi)?, pair_input(phi, psi))))?,
        Identity::Main => sweep(&pairs(n), |(phi, psi)| Ok((verify_main(phi, psi)?, pair_input(phi, psi))))?,
        Identity::Int2 => sweep(&pairs(n), |(phi, psi)| Ok((verify_int2_all(phi, psi)?, pair_input(phi, psi))))?,
        Identity::Internal => {
            sweep(&SetComposition::all_odd(n), |phi| Ok((verify_internal(phi)?, json!(phi.to_string()))))?
        }
        Identity::ThetaDiagram => {
            let bad = check_diagram(n);
            (SetComposition::all(n).len(), bad.iter().map(|c| json!(c.to_string())).collect())
        }
        Identity::NcsymThetaP => sweep(&SetPartition::all(n), |pi| {
            let got = theta_p(pi)?;
            let want = theta_p_closed(pi);
            let detail = json!({ "computed": got.to_string(), "closed_form": want.to_string() });
            Ok((Check::new(got == want, detail), json!(pi.to_string())))
        })?,
        Identity::OddSet => {
            let mut cases = 0;
            let mut failures = Vec::new();
            for pi in SetPartition::all_odd(n) {
                for (psi, l, r) in suitable_sums(&pi)? {
                    cases += 1;
                    if l != r {
                        failures.push(json!({
                            "input": { "pi": pi.to_string(), "psi": psi.to_string() },
                            "detail": { "lhs": l.to_string(), "rhs": r.to_string() },
                        }));
                    }
                }
            }
            (cases, failures)
        }
    };
    Ok(Report {
        identity: id.name().into(),
        n,
        ok: failures.is_empty(),
        detail: json!({ "cases": cases, "failures": failures }),
    })
}

/// `𝒟_φ^ψ` computed from `𝒞` and from the meet condition agree.
pub fn verify_d_descriptions(phi: &SetComposition, psi: &SetComposition) -> Result<bool> {
    Ok(script_d(phi, psi)? == script_d_by_meet(phi, psi)?)
}
