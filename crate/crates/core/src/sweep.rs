//! Seeded property sweeps over random pairs of m-primary monomial ideals.
//!
//! Pairs are generated up front from a ChaCha stream, evaluated in parallel
//! and reported in index order, so the report depends only on the config.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::colength::{colength, ColengthMode};
use crate::error::{Error, Result};
use crate::format::{big_to_json, ideal_to_json};
use crate::hilbert::{mixed_multiplicities, mixed_via_vandermonde, multiplicity};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::newton::covolume_2d;
use crate::theorems::{
    check_teissier_first, check_teissier_second, double_bound_from, e1_squared_from, equality_from,
    minkowski_from, rees_from, Status, Verdict,
};

pub const MAX_SWEEP_EXPONENT: u32 = 8;
pub const THREADS_ENV: &str = "TEISSIER_THREADS";

/// Properties named in the one-line summary.
const HEADLINE: [&str; 4] = ["teissier-1", "teissier-2", "equality-pipeline", "rees"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    pub count: usize,
    pub dim: usize,
    pub max_exp: u32,
    /// Worker count; `None` reads `TEISSIER_THREADS`, then falls back to the core count.
    pub threads: Option<usize>,
    /// Cross-check mixed multiplicities and colengths with the slow oracles.
    pub oracle: bool,
}

impl SweepConfig {
    pub fn new(seed: u64, count: usize, dim: usize, max_exp: u32) -> Self {
        Self {
            seed,
            count,
            dim,
            max_exp,
            threads: None,
            oracle: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.dim) {
            return Err(Error::Parse(format!(
                "sweep dimension must be 1, 2 or 3, got {}",
                self.dim
            )));
        }
        if !(1..=MAX_SWEEP_EXPONENT).contains(&self.max_exp) {
            return Err(Error::Parse(format!(
                "max exponent must be in 1..={MAX_SWEEP_EXPONENT}, got {}",
                self.max_exp
            )));
        }
        if self.count == 0 {
            return Err(Error::Parse("count must be at least 1".into()));
        }
        Ok(())
    }

    fn worker_count(&self) -> usize {
        self.threads
            .or_else(|| std::env::var(THREADS_ENV).ok()?.trim().parse().ok())
            .filter(|&n| n > 0)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
    }
}

/// Pure powers `x_i^{c_i}` with `c_i` in `1..=max_exp`, plus up to `dim` mixed
/// generators strictly below them.
pub fn random_ideal<R: Rng>(rng: &mut R, dim: usize, max_exp: u32) -> MonomialIdeal {
    let pure: Vec<u32> = (0..dim).map(|_| rng.random_range(1..=max_exp)).collect();
    let mut gens: Vec<ExponentVector> = (0..dim)
        .map(|axis| ExponentVector::pure_power(dim, axis, pure[axis]))
        .collect();
    for _ in 0..rng.random_range(0..=dim) {
        let g = ExponentVector::new(pure.iter().map(|&c| rng.random_range(0..c)).collect::<Vec<_>>());
        if !g.is_zero() {
            gens.push(g);
        }
    }
    MonomialIdeal::normalize(dim, gens).expect("pure powers make the ideal m-primary")
}

pub fn generate_pairs(
    seed: u64,
    count: usize,
    dim: usize,
    max_exp: u32,
) -> Vec<(MonomialIdeal, MonomialIdeal)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let i = random_ideal(&mut rng, dim, max_exp);
            let j = random_ideal(&mut rng, dim, max_exp);
            (i, j)
        })
        .collect()
}

/// The pure powers of `ideal` plus every other mixed generator; contained in `ideal`.
pub fn thinned_subideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let mut mixed = 0usize;
    let gens = ideal.gens().iter().filter(|g| {
        if g.pure_axis().is_some() {
            true
        } else {
            mixed += 1;
            mixed % 2 == 0
        }
    });
    MonomialIdeal::normalize(ideal.dim(), gens.cloned().collect::<Vec<_>>())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyFailure {
    pub index: usize,
    pub property: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairOutcome {
    pub index: usize,
    pub i: MonomialIdeal,
    pub j: MonomialIdeal,
    pub e: Option<Vec<BigInt>>,
    pub equality: Option<bool>,
    /// Property name to whether it held, for every property that ran.
    pub checks: BTreeMap<&'static str, bool>,
    pub failures: Vec<PropertyFailure>,
    pub capped: bool,
}

impl PairOutcome {
    fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Recorder {
    index: usize,
    checks: BTreeMap<&'static str, bool>,
    failures: Vec<PropertyFailure>,
}

impl Recorder {
    fn record(&mut self, property: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let entry = self.checks.entry(property).or_insert(true);
        *entry &= ok;
        if !ok {
            self.failures.push(PropertyFailure {
                index: self.index,
                property: property.to_string(),
                detail: detail(),
            });
        }
    }
}

fn evaluate_pair(index: usize, i: &MonomialIdeal, j: &MonomialIdeal, oracle: bool) -> PairOutcome {
    let mut rec = Recorder {
        index,
        checks: BTreeMap::new(),
        failures: Vec::new(),
    };
    let mut e_out = None;
    let mut equality = None;
    let result = run_properties(i, j, oracle, &mut rec, &mut e_out, &mut equality);
    let capped = matches!(result, Err(Error::StabilizationCap { .. }));
    if let Err(err) = result {
        rec.record("evaluation", false, || err.to_string());
    }
    PairOutcome {
        index,
        i: i.clone(),
        j: j.clone(),
        e: e_out,
        equality,
        checks: rec.checks,
        failures: rec.failures,
        capped,
    }
}

fn run_properties(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    oracle: bool,
    rec: &mut Recorder,
    e_out: &mut Option<Vec<BigInt>>,
    equality: &mut Option<bool>,
) -> Result<()> {
    let d = i.dim();
    let e = mixed_multiplicities(i, j)?;
    *e_out = Some(e.e.clone());
    let e_i = multiplicity(i)?;
    let e_j = multiplicity(j)?;
    let e_ij = multiplicity(&i.product(j)?)?;

    rec.record("lemma-1", e.e[0] == e_i && e.e[d] == e_j, || {
        format!("e = {e}, e(I) = {e_i}, e(J) = {e_j}")
    });
    let first = check_teissier_first(&e);
    let second = check_teissier_second(&e);
    rec.record("teissier-1", !first.verdict.is_violation(), || format!("e = {e}"));
    rec.record("teissier-2", !second.verdict.is_violation(), || {
        format!("e = {e}")
    });

    match minkowski_from(e.clone(), e_ij.clone()) {
        Ok(outcome) => {
            let cert = equality_from(i, j, outcome)?;
            *equality = Some(cert.condition_minkowski);
            let strict_ok = cert.condition_minkowski || first.statuses.contains(&Status::Strict);
            rec.record("equality-pipeline", cert.agree && strict_ok, || {
                cert.to_json().to_string()
            });
        }
        Err(err) => rec.record("equality-pipeline", false, || err.to_string()),
    }

    let mut rees = |sub: &MonomialIdeal, sup: &MonomialIdeal, e_sub: &BigInt, e_sup: &BigInt| -> Result<()> {
        let report = rees_from(sub, sup, e_sub, e_sup)?;
        rec.record("rees", !report.verdict.is_violation(), || {
            report.to_json().to_string()
        });
        Ok(())
    };
    let thin = thinned_subideal(i)?;
    let e_thin = multiplicity(&thin)?;
    rees(&thin, i, &e_thin, &e_i)?;
    if i.contains_ideal(j)? {
        rees(j, i, &e_j, &e_i)?;
    }
    if j.contains_ideal(i)? {
        rees(i, j, &e_i, &e_j)?;
    }

    match d {
        1 => rec.record("dim1-additivity", e_ij == &e_i + &e_j, || {
            format!("e(IJ) = {e_ij}, e(I) + e(J) = {}", &e_i + &e_j)
        }),
        2 => {
            let r = e1_squared_from(i, j, &e);
            rec.record("e1-squared", !r.verdict.is_violation(), || {
                r.to_json().to_string()
            });
            let r = double_bound_from(i, j, &e_ij, &e_i, &e_j);
            rec.record("double-bound", r.verdict != Verdict::Violation, || {
                r.to_json().to_string()
            });
            for (ideal, mult) in [(i, &e_i), (j, &e_j)] {
                let twice = covolume_2d(ideal)? * BigRational::from_integer(2.into());
                let ok = twice == BigRational::from_integer(mult.clone());
                rec.record("covolume", ok, || {
                    format!("({ideal}): e = {mult}, 2·covolume = {twice}")
                });
            }
        }
        _ => {}
    }

    if oracle {
        let v = mixed_via_vandermonde(i, j)?;
        rec.record("oracle-mixed", v == e, || {
            format!("bhattacharya {e}, vandermonde {v}")
        });
        for ideal in [i, j] {
            let sliced = colength(ideal, ColengthMode::Sliced)?;
            let brute = colength(ideal, ColengthMode::Bruteforce)?;
            rec.record("oracle-colength", sliced == brute, || {
                format!("({ideal}): sliced {sliced}, bruteforce {brute}")
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub outcomes: Vec<PairOutcome>,
}

impl SweepReport {
    pub fn passed(&self) -> usize {
        self.outcomes.iter().filter(|o| o.holds()).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyFailure> {
        self.outcomes.iter().flat_map(|o| o.failures.iter())
    }

    pub fn all_hold(&self) -> bool {
        self.passed() == self.outcomes.len()
    }

    pub fn hit_cap(&self) -> bool {
        self.outcomes.iter().any(|o| o.capped)
    }

    /// `(checked, held)` per property, across all pairs.
    pub fn tally(&self) -> BTreeMap<&'static str, (usize, usize)> {
        let mut tally = BTreeMap::new();
        for o in &self.outcomes {
            for (&name, &ok) in &o.checks {
                let t = tally.entry(name).or_insert((0, 0));
                t.0 += 1;
                t.1 += usize::from(ok);
            }
        }
        tally
    }

    pub fn summary(&self) -> String {
        let n = self.outcomes.len();
        let names = "Teissier-1, Teissier-2, equality-pipeline, Rees";
        let headline_ok = self.failures().all(|f| !HEADLINE.contains(&f.property.as_str()));
        if self.all_hold() {
            format!("{n}/{n} pairs: {names} all hold")
        } else {
            let count = self.failures().count();
            let what = if headline_ok { "hold" } else { "do not all hold" };
            format!(
                "{}/{n} pairs: {names} {what}; {count} failing checks",
                self.passed()
            )
        }
    }

    pub fn to_json(&self) -> Value {
        let c = &self.config;
        let tally: serde_json::Map<String, Value> = self
            .tally()
            .into_iter()
            .map(|(k, (checked, held))| (k.to_string(), json!({"checked": checked, "held": held})))
            .collect();
        json!({
            "seed": c.seed,
            "count": c.count,
            "dim": c.dim,
            "max_exp": c.max_exp,
            "oracle": c.oracle,
            "passed": self.passed(),
            "summary": self.summary(),
            "properties": tally,
            "violations": self.failures().map(|f| json!({
                "seed": c.seed,
                "index": f.index,
                "property": f.property,
                "detail": f.detail,
            })).collect::<Vec<_>>(),
            "pairs": self.outcomes.iter().map(|o| json!({
                "index": o.index,
                "i": ideal_to_json(&o.i)["gens"],
                "j": ideal_to_json(&o.j)["gens"],
                "e": o.e.as_ref().map(|e| e.iter().map(big_to_json).collect::<Vec<_>>()),
                "equality": o.equality,
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    config.validate()?;
    let pairs = generate_pairs(config.seed, config.count, config.dim, config.max_exp);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.worker_count())
        .build()
        .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    let outcomes = pool.install(|| {
        pairs
            .par_iter()
            .enumerate()
            .map(|(k, (i, j))| evaluate_pair(k, i, j, config.oracle))
            .collect::<Vec<_>>()
    });
    Ok(SweepReport {
        config: config.clone(),
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_ideals_are_m_primary_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for dim in 1..=3 {
            for _ in 0..50 {
                let ideal = random_ideal(&mut rng, dim, 5);
                assert!(ideal.is_m_primary() && !ideal.is_unit());
                assert!(ideal
                    .pure_power_bounds()
                    .unwrap()
                    .iter()
                    .all(|&c| (1..=5).contains(&c)));
                assert!(ideal.gens().len() <= 2 * dim);
            }
        }
    }

    #[test]
    fn thinned_subideal_is_contained() {
        let k = MonomialIdeal::from_exponents(2, &[&[4, 0], &[2, 1], &[1, 2], &[0, 4]]).unwrap();
        let thin = thinned_subideal(&k).unwrap();
        assert!(k.contains_ideal(&thin).unwrap());
        assert_eq!(thin.gens().len(), 3);
    }

    #[test]
    fn config_validation() {
        assert!(SweepConfig::new(1, 0, 2, 5).validate().is_err());
        assert!(SweepConfig::new(1, 5, 4, 5).validate().is_err());
        assert!(SweepConfig::new(1, 5, 2, 9).validate().is_err());
        assert!(SweepConfig::new(1, 5, 3, 8).validate().is_ok());
    }

    #[test]
    fn small_sweep_holds() {
        let mut config = SweepConfig::new(3, 6, 2, 4);
        config.threads = Some(1);
        let report = sweep(&config).unwrap();
        assert!(report.all_hold(), "{}", report.to_json());
        assert_eq!(
            report.summary(),
            "6/6 pairs: Teissier-1, Teissier-2, equality-pipeline, Rees all hold"
        );
    }
}
