//! Exact checks of the inequalities and equality criteria satisfied by
//! (mixed) multiplicities of m-primary ideals.
//!
//! Every comparison is an integer comparison after clearing denominators and
//! raising to powers; nothing here takes a floating-point root.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::colength::{colength, ColengthMode};
use crate::error::{Error, Result};
use crate::format::{big_to_json, ideal_to_json};
use crate::hilbert::{binomial, mixed_multiplicities, multiplicity, MixedMultiplicities};
use crate::ideal::MonomialIdeal;
use crate::newton::{integral_closure, scaled_closure_equal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Strict,
    Equality,
    Violation,
}

impl Status {
    /// Status of the claim `lhs <= rhs`.
    pub fn of_le<T: Ord>(lhs: &T, rhs: &T) -> Self {
        match lhs.cmp(rhs) {
            std::cmp::Ordering::Less => Status::Strict,
            std::cmp::Ordering::Equal => Status::Equality,
            std::cmp::Ordering::Greater => Status::Violation,
        }
    }

    /// Status of the claim `lhs == rhs`.
    pub fn of_eq<T: PartialEq>(lhs: &T, rhs: &T) -> Self {
        if lhs == rhs {
            Status::Equality
        } else {
            Status::Violation
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Strict => "strict",
            Status::Equality => "equality",
            Status::Violation => "violation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Equality,
    Violation,
    HypothesisUnmet,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Equality => "equality",
            Verdict::Violation => "violation",
            Verdict::HypothesisUnmet => "hypothesis-unmet",
        }
    }

    pub fn is_violation(self) -> bool {
        self == Verdict::Violation
    }

    /// Any violation wins; otherwise all-equality (including no entries) is equality.
    pub fn from_statuses(statuses: &[Status]) -> Self {
        if statuses.contains(&Status::Violation) {
            Verdict::Violation
        } else if statuses.iter().all(|s| *s == Status::Equality) {
            Verdict::Equality
        } else {
            Verdict::Holds
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one theorem check, serialized as the verdict JSON.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub theorem: &'static str,
    pub inputs: Value,
    pub statuses: Vec<Status>,
    pub verdict: Verdict,
    /// Extra named quantities (both sides of each comparison and so on).
    pub details: Map<String, Value>,
}

impl InequalityReport {
    pub fn from_parts(theorem: &'static str, inputs: Value, statuses: Vec<Status>) -> Self {
        let verdict = Verdict::from_statuses(&statuses);
        Self {
            theorem,
            inputs,
            statuses,
            verdict,
            details: Map::new(),
        }
    }

    pub(crate) fn detail(mut self, key: &str, value: Value) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "theorem": self.theorem,
            "inputs": self.inputs,
            "statuses": self.statuses.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            "verdict": self.verdict.as_str(),
        });
        if !self.details.is_empty() {
            v["details"] = Value::Object(self.details.clone());
        }
        v
    }
}

fn pair_inputs(i: &MonomialIdeal, j: &MonomialIdeal) -> Value {
    json!({"i": ideal_to_json(i), "j": ideal_to_json(j)})
}

fn require_dim(i: &MonomialIdeal, j: &MonomialIdeal, expected: usize) -> Result<()> {
    for ideal in [i, j] {
        if ideal.dim() != expected {
            return Err(Error::WrongDimension {
                expected,
                found: ideal.dim(),
            });
        }
    }
    Ok(())
}

fn same_dim(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<()> {
    if i.dim() != j.dim() {
        return Err(Error::DimensionMismatch {
            expected: i.dim(),
            found: j.dim(),
        });
    }
    Ok(())
}

/// `e_i^d <= e_0^{d-i} e_d^i` for every `i`.
pub fn check_teissier_first(e: &MixedMultiplicities) -> InequalityReport {
    let d = e.dim;
    let (e0, ed) = (&e.e[0], &e.e[d]);
    let statuses = (0..=d)
        .map(|i| {
            let lhs = num_traits::pow(e.e[i].clone(), d);
            let rhs = num_traits::pow(e0.clone(), d - i) * num_traits::pow(ed.clone(), i);
            Status::of_le(&lhs, &rhs)
        })
        .collect();
    InequalityReport::from_parts("teissier-first", e.to_json(), statuses)
}

/// `e_i^2 <= e_{i-1} e_{i+1}` for `0 < i < d`, i.e. log-convexity.
pub fn check_teissier_second(e: &MixedMultiplicities) -> InequalityReport {
    InequalityReport::from_parts("teissier-second", e.to_json(), log_convexity_statuses(&e.e))
}

pub(crate) fn log_convexity_statuses(seq: &[BigInt]) -> Vec<Status> {
    (1..seq.len().saturating_sub(1))
        .map(|i| {
            let lhs = &seq[i] * &seq[i];
            let rhs = &seq[i - 1] * &seq[i + 1];
            Status::of_le(&lhs, &rhs)
        })
        .collect()
}

/// `e_1(I|J)^2 <= e(I) e(J)` in dimension two.
pub fn check_e1_squared(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<InequalityReport> {
    require_dim(i, j, 2)?;
    let e = mixed_multiplicities(i, j)?;
    Ok(e1_squared_from(i, j, &e))
}

pub(crate) fn e1_squared_from(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    e: &MixedMultiplicities,
) -> InequalityReport {
    let lhs = &e.e[1] * &e.e[1];
    let rhs = &e.e[0] * &e.e[2];
    InequalityReport::from_parts("e1-squared", pair_inputs(i, j), vec![Status::of_le(&lhs, &rhs)])
        .detail("lhs", big_to_json(&lhs))
        .detail("rhs", big_to_json(&rhs))
}

/// `e(IJ) <= 2 e(I) + 2 e(J)` in dimension two.
pub fn check_double_bound(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<InequalityReport> {
    require_dim(i, j, 2)?;
    let e_ij = multiplicity(&i.product(j)?)?;
    let e_i = multiplicity(i)?;
    let e_j = multiplicity(j)?;
    Ok(double_bound_from(i, j, &e_ij, &e_i, &e_j))
}

pub(crate) fn double_bound_from(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    e_ij: &BigInt,
    e_i: &BigInt,
    e_j: &BigInt,
) -> InequalityReport {
    let rhs = (e_i + e_j) * 2;
    InequalityReport::from_parts("double-bound", pair_inputs(i, j), vec![Status::of_le(e_ij, &rhs)])
        .detail("e_ij", big_to_json(e_ij))
        .detail("bound", big_to_json(&rhs))
}

/// `ℓ(R/(J^n : I^{[n]})) <= ℓ(R/I^{[n]}) + 2ℓ(R/J^n) - ℓ(R/I^n J^n)` for a
/// two-generated parameter ideal `I` in dimension two.
pub fn check_length_lemma(i: &MonomialIdeal, j: &MonomialIdeal, n: u32) -> Result<InequalityReport> {
    require_dim(i, j, 2)?;
    if !i.is_parameter_ideal() {
        return Err(Error::NotParameterIdeal(format!("({i}) is not (x^a, y^b)")));
    }
    j.require_m_primary()?;
    if n == 0 {
        return Err(Error::Parse("length lemma needs n >= 1".into()));
    }
    let len = |ideal: &MonomialIdeal| colength(ideal, ColengthMode::Sliced);
    let frob = i.frobenius_power(n)?;
    let jn = j.power(n)?;
    let lhs = len(&jn.colon(&frob)?)?;
    let rhs = len(&frob)? + len(&jn)? * 2 - len(&i.power(n)?.product(&jn)?)?;
    Ok(InequalityReport::from_parts(
        "length-lemma",
        json!({"i": ideal_to_json(i), "j": ideal_to_json(j), "n": n}),
        vec![Status::of_le(&lhs, &rhs)],
    )
    .detail("lhs", big_to_json(&lhs))
    .detail("rhs", big_to_json(&rhs)))
}

/// The common ratio `r/s = e_i/e_{i-1}` in lowest terms, if there is one.
pub fn geometric_ratio(e: &MixedMultiplicities) -> Option<(BigInt, BigInt)> {
    let g = e.e[1].gcd(&e.e[0]);
    let (r, s) = (&e.e[1] / &g, &e.e[0] / &g);
    e.e.windows(2).all(|w| &w[1] * &s == &w[0] * &r).then_some((r, s))
}

fn exact_root(v: &BigInt, d: u32) -> Option<BigInt> {
    let root = v.nth_root(d);
    (num_traits::pow(root.clone(), d as usize) == *v).then_some(root)
}

/// `q^{1/d}` when it is rational.
fn rational_root(q: &BigRational, d: u32) -> Option<BigRational> {
    let num = exact_root(q.numer(), d)?;
    let den = exact_root(q.denom(), d)?;
    Some(BigRational::new(num, den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinkowskiStatus {
    Equality,
    Strict,
}

impl MinkowskiStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            MinkowskiStatus::Equality => "equality",
            MinkowskiStatus::Strict => "strict",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinkowskiOutcome {
    pub status: MinkowskiStatus,
    pub mixed: MixedMultiplicities,
    /// `e(IJ)`, computed directly from the product ideal.
    pub e_product: BigInt,
}

/// Decides `e(IJ)^{1/d} = e(I)^{1/d} + e(J)^{1/d}` exactly.
///
/// Also verifies `e(IJ) = Σ C(d,i) e_i(I|J)` against an independent
/// multiplicity of the product. Equality needs `t = (e(J)/e(I))^{1/d}` to be
/// rational (otherwise `(1 + t)^d` is irrational) and then reads
/// `e(IJ) = e(I) (1 + t)^d`.
pub fn minkowski_status(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MinkowskiOutcome> {
    same_dim(i, j)?;
    let mixed = mixed_multiplicities(i, j)?;
    let e_product = multiplicity(&i.product(j)?)?;
    minkowski_from(mixed, e_product)
}

pub(crate) fn minkowski_from(mixed: MixedMultiplicities, e_product: BigInt) -> Result<MinkowskiOutcome> {
    let d = mixed.dim;
    let expansion: BigInt = mixed
        .e
        .iter()
        .enumerate()
        .map(|(k, ek)| binomial(d as u64, k as u64) * ek)
        .sum();
    if expansion != e_product {
        return Err(Error::Inconsistent(format!(
            "e(IJ) = {e_product} but Σ C(d,i) e_i = {expansion} for e = {mixed}"
        )));
    }
    let (e0, ed) = (&mixed.e[0], &mixed.e[d]);
    let status = match rational_root(&BigRational::new(ed.clone(), e0.clone()), d as u32) {
        Some(t) => {
            let rhs = BigRational::from_integer(e0.clone()) * num_traits::pow(BigRational::one() + t, d);
            if rhs == BigRational::from_integer(e_product.clone()) {
                MinkowskiStatus::Equality
            } else {
                MinkowskiStatus::Strict
            }
        }
        None => MinkowskiStatus::Strict,
    };
    Ok(MinkowskiOutcome {
        status,
        mixed,
        e_product,
    })
}

/// Which way round `closure(I^a) = closure(J^b)` was found to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `closure(I^r) = closure(J^s)` with `r/s` the candidate ratio.
    Direct,
    /// Only `closure(I^s) = closure(J^r)` holds.
    Swapped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityCertificate {
    pub mixed: MixedMultiplicities,
    /// `(r, s)` in lowest terms with `e_i / e_{i-1} = r / s`, or the closure
    /// candidate when no common ratio exists.
    pub ratio: Option<(BigInt, BigInt)>,
    pub condition_minkowski: bool,
    pub condition_geometric: bool,
    pub condition_closure: bool,
    pub closure_orientation: Option<Orientation>,
    pub agree: bool,
}

impl EqualityCertificate {
    pub fn to_json(&self) -> Value {
        json!({
            "e": self.mixed.e.iter().map(big_to_json).collect::<Vec<_>>(),
            "ratio": self.ratio.as_ref().map(|(r, s)| json!([big_to_json(r), big_to_json(s)])),
            "condition_minkowski": self.condition_minkowski,
            "condition_geometric": self.condition_geometric,
            "condition_closure": self.condition_closure,
            "closure_orientation": self.closure_orientation.map(|o| match o {
                Orientation::Direct => "direct",
                Orientation::Swapped => "swapped",
            }),
            "agree": self.agree,
        })
    }
}

/// Candidate `r/s` for `r · NP(I) = s · NP(J)`, read from the axis intercepts.
fn intercept_ratio(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<Option<(BigInt, BigInt)>> {
    let ci = i.pure_power_bounds()?;
    let cj = j.pure_power_bounds()?;
    let (r, s) = {
        let (a, b) = (BigInt::from(cj[0]), BigInt::from(ci[0]));
        let g = a.gcd(&b);
        (a / &g, b / g)
    };
    let consistent = ci
        .iter()
        .zip(&cj)
        .all(|(&a, &b)| BigInt::from(a) * &r == BigInt::from(b) * &s);
    Ok(consistent.then_some((r, s)))
}

fn as_u64(v: &BigInt) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::ExponentOverflow)
}

/// Evaluates the three equivalent equality conditions independently.
///
/// * Minkowski: [`minkowski_status`] on `e(IJ)`, `e(I)`, `e(J)`.
/// * Geometric: [`geometric_ratio`] on the mixed multiplicities.
/// * Closure: `closure(I^r) = closure(J^s)` where `r/s` comes from the
///   pure-power intercepts (a necessary condition), tested by LP membership
///   in both orientations.
///
/// A disagreement between the conditions is an error: in a polynomial ring
/// they are equivalent. Use [`equality_conditions`] to inspect the raw
/// certificate instead.
pub fn equality_pipeline(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<EqualityCertificate> {
    let cert = equality_conditions(i, j)?;
    if !cert.agree {
        return Err(Error::Inconsistent(format!(
            "equality conditions disagree for ({i}) and ({j}): {}",
            cert.to_json()
        )));
    }
    Ok(cert)
}

/// The certificate with `agree` possibly false.
pub fn equality_conditions(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<EqualityCertificate> {
    same_dim(i, j)?;
    let outcome = minkowski_status(i, j)?;
    equality_from(i, j, outcome)
}

pub(crate) fn equality_from(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    outcome: MinkowskiOutcome,
) -> Result<EqualityCertificate> {
    let condition_minkowski = outcome.status == MinkowskiStatus::Equality;
    let geometric = geometric_ratio(&outcome.mixed);
    let condition_geometric = geometric.is_some();

    let candidate = intercept_ratio(i, j)?;
    let closure_orientation = match &candidate {
        Some((r, s)) => {
            let (r, s) = (as_u64(r)?, as_u64(s)?);
            if scaled_closure_equal(i, r, j, s)? {
                Some(Orientation::Direct)
            } else if r != s && scaled_closure_equal(i, s, j, r)? {
                Some(Orientation::Swapped)
            } else {
                None
            }
        }
        None => None,
    };
    let condition_closure = closure_orientation.is_some();
    let agree = condition_minkowski == condition_geometric && condition_geometric == condition_closure;
    Ok(EqualityCertificate {
        mixed: outcome.mixed,
        ratio: geometric.or(if condition_closure { candidate } else { None }),
        condition_minkowski,
        condition_geometric,
        condition_closure,
        closure_orientation,
        agree,
    })
}

/// If `J ⊆ I` and `e(I) = e(J)` then the closures coincide.
pub fn check_rees(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<InequalityReport> {
    same_dim(i, j)?;
    if !i.contains_ideal(j)? {
        return Err(Error::NotContained(format!("({j}) is not contained in ({i})")));
    }
    let e_i = multiplicity(i)?;
    let e_j = multiplicity(j)?;
    rees_from(j, i, &e_j, &e_i)
}

pub(crate) fn rees_from(
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    e_j: &BigInt,
    e_i: &BigInt,
) -> Result<InequalityReport> {
    let inputs = json!({"j": ideal_to_json(j), "i": ideal_to_json(i)});
    let mut report = if e_i == e_j {
        let equal = integral_closure(i)? == integral_closure(j)?;
        let status = if equal {
            Status::Equality
        } else {
            Status::Violation
        };
        let mut r = InequalityReport::from_parts("rees", inputs, vec![status]);
        r = r.detail("closures_equal", Value::Bool(equal));
        r
    } else {
        let mut r = InequalityReport::from_parts("rees", inputs, Vec::new());
        r.verdict = Verdict::HypothesisUnmet;
        r
    };
    report = report
        .detail("e_i", big_to_json(e_i))
        .detail("e_j", big_to_json(e_j));
    Ok(report)
}

/// `e(IJ) = e(I) + e(J)` in dimension one.
pub fn check_dim1_additivity(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<InequalityReport> {
    require_dim(i, j, 1)?;
    let e_ij = multiplicity(&i.product(j)?)?;
    let sum = multiplicity(i)? + multiplicity(j)?;
    Ok(InequalityReport::from_parts(
        "dim1-additivity",
        pair_inputs(i, j),
        vec![Status::of_eq(&e_ij, &sum)],
    )
    .detail("e_ij", big_to_json(&e_ij))
    .detail("sum", big_to_json(&sum)))
}

/// At least one index with `e_i^d < e_0^{d-i} e_d^i`.
pub fn has_strict_index(e: &MixedMultiplicities) -> bool {
    check_teissier_first(e).statuses.contains(&Status::Strict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Status::*;

    fn seq(v: &[u64]) -> MixedMultiplicities {
        MixedMultiplicities::from_u64s(v).unwrap()
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(gens[0].len(), gens).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn teissier_first_examples() {
        assert_eq!(
            check_teissier_first(&seq(&[1, 2, 6])).statuses,
            vec![Equality, Strict, Equality]
        );
        let r = check_teissier_first(&seq(&[1, 2, 4]));
        assert_eq!(r.statuses, vec![Equality; 3]);
        assert_eq!(r.verdict, Verdict::Equality);
        let r = check_teissier_first(&seq(&[1, 3, 4]));
        assert_eq!(r.statuses[1], Violation);
        assert_eq!(r.verdict, Verdict::Violation);
    }

    #[test]
    fn teissier_second_examples() {
        assert_eq!(check_teissier_second(&seq(&[1, 2, 6])).statuses, vec![Strict]);
        assert_eq!(check_teissier_second(&seq(&[1, 2, 4])).statuses, vec![Equality]);
        assert_eq!(
            check_teissier_second(&seq(&[1, 3, 4])).verdict,
            Verdict::Violation
        );
    }

    #[test]
    fn e1_squared_examples() {
        let m = MonomialIdeal::maximal(2);
        let j = ideal(&[&[2, 0], &[0, 3]]);
        assert_eq!(check_e1_squared(&m, &j).unwrap().statuses, vec![Strict]);
        assert_eq!(check_e1_squared(&m, &m).unwrap().statuses, vec![Equality]);
        assert_eq!(
            check_e1_squared(&m, &m.power(2).unwrap()).unwrap().statuses,
            vec![Equality]
        );
        assert!(check_e1_squared(&MonomialIdeal::maximal(3), &MonomialIdeal::maximal(3)).is_err());
    }

    #[test]
    fn double_bound_examples() {
        let m = MonomialIdeal::maximal(2);
        let j = ideal(&[&[2, 0], &[0, 3]]);
        let r = check_double_bound(&m, &j).unwrap();
        assert_eq!(r.statuses, vec![Strict]);
        assert_eq!(r.details["e_ij"], json!(11));
        assert_eq!(r.details["bound"], json!(14));
        assert_eq!(check_double_bound(&m, &m).unwrap().statuses, vec![Equality]);
        let r = check_double_bound(&m.power(2).unwrap(), &m.power(3).unwrap()).unwrap();
        assert_eq!((r.details["e_ij"].clone(), r.statuses[0]), (json!(25), Strict));
    }

    #[test]
    fn length_lemma_examples() {
        let m = MonomialIdeal::maximal(2);
        let r = check_length_lemma(&m, &m, 1).unwrap();
        assert_eq!((r.details["lhs"].clone(), r.statuses[0]), (json!(0), Equality));
        let j = ideal(&[&[2, 0], &[0, 3]]);
        let r = check_length_lemma(&m, &j, 1).unwrap();
        assert_eq!((r.details["lhs"].clone(), r.statuses[0]), (json!(5), Equality));
        assert_ne!(check_length_lemma(&m, &j, 2).unwrap().verdict, Verdict::Violation);
        let k = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
        assert!(matches!(
            check_length_lemma(&k, &j, 1),
            Err(Error::NotParameterIdeal(_))
        ));
    }

    #[test]
    fn geometric_ratio_examples() {
        assert_eq!(geometric_ratio(&seq(&[1, 2, 4])), Some((big(2), big(1))));
        assert_eq!(geometric_ratio(&seq(&[1, 1, 1])), Some((big(1), big(1))));
        assert_eq!(geometric_ratio(&seq(&[1, 2, 6])), None);
        assert_eq!(geometric_ratio(&seq(&[4, 6, 9])), Some((big(3), big(2))));
    }

    #[test]
    fn minkowski_examples() {
        let m = MonomialIdeal::maximal(2);
        let out = minkowski_status(&m, &m.power(2).unwrap()).unwrap();
        assert_eq!(out.status, MinkowskiStatus::Equality);
        assert_eq!(out.e_product, big(9));
        let j = ideal(&[&[2, 0], &[0, 3]]);
        assert_eq!(minkowski_status(&m, &j).unwrap().status, MinkowskiStatus::Strict);
        assert_eq!(
            minkowski_status(&m, &m).unwrap().status,
            MinkowskiStatus::Equality
        );
    }

    #[test]
    fn minkowski_with_irrational_roots_of_the_ends() {
        // e(I) = 2, e(J) = 8: sqrt(2) + sqrt(8) = sqrt(18).
        let out = minkowski_from(seq(&[2, 4, 8]), big(18)).unwrap();
        assert_eq!(out.status, MinkowskiStatus::Equality);
        let out = minkowski_from(seq(&[2, 3, 8]), big(16)).unwrap();
        assert_eq!(out.status, MinkowskiStatus::Strict);
        assert!(matches!(
            minkowski_from(seq(&[2, 3, 8]), big(17)),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn equality_pipeline_examples() {
        let m = MonomialIdeal::maximal(2);
        let c = equality_pipeline(&m, &m.power(2).unwrap()).unwrap();
        assert_eq!(c.ratio, Some((big(2), big(1))));
        assert!(c.condition_minkowski && c.condition_geometric && c.condition_closure && c.agree);
        assert_eq!(c.closure_orientation, Some(Orientation::Direct));

        let c = equality_pipeline(&m, &ideal(&[&[2, 0], &[0, 3]])).unwrap();
        assert!(!c.condition_minkowski && !c.condition_geometric && !c.condition_closure && c.agree);
        assert_eq!(c.ratio, None);

        let c = equality_pipeline(&ideal(&[&[2, 0], &[0, 2]]), &ideal(&[&[3, 0], &[0, 3]])).unwrap();
        assert_eq!(c.mixed.e, vec![big(4), big(6), big(9)]);
        assert_eq!(c.ratio, Some((big(3), big(2))));
        assert!(c.condition_minkowski && c.condition_geometric && c.condition_closure && c.agree);
    }

    #[test]
    fn rees_examples() {
        let m2 = MonomialIdeal::maximal(2).power(2).unwrap();
        let j = ideal(&[&[2, 0], &[0, 2]]);
        let r = check_rees(&j, &m2).unwrap();
        assert_eq!(r.verdict, Verdict::Equality);
        assert_eq!(r.details["closures_equal"], json!(true));

        let k = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
        let r = check_rees(&ideal(&[&[2, 0], &[0, 3]]), &k).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisUnmet);
        assert_eq!(
            (r.details["e_i"].clone(), r.details["e_j"].clone()),
            (json!(5), json!(6))
        );

        assert_eq!(check_rees(&k, &k).unwrap().verdict, Verdict::Equality);
        assert!(matches!(check_rees(&k, &j), Err(Error::NotContained(_))));
    }

    #[test]
    fn dim1_additivity_examples() {
        let p = |a: u32| MonomialIdeal::pure_powers(&[a]).unwrap();
        for (a, b) in [(2, 3), (1, 1), (4, 1)] {
            let r = check_dim1_additivity(&p(a), &p(b)).unwrap();
            assert_eq!(r.statuses, vec![Equality]);
            assert_eq!(r.details["e_ij"], json!(a + b));
        }
        assert!(check_dim1_additivity(&MonomialIdeal::maximal(2), &MonomialIdeal::maximal(2)).is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = check_teissier_second(&seq(&[1, 2, 6]));
        assert_eq!(
            r.to_json(),
            json!({"theorem": "teissier-second", "inputs": {"e": [1, 2, 6]}, "statuses": ["strict"], "verdict": "holds"})
        );
    }
}
