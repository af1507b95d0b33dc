//! Hilbert-Samuel and Bhattacharya polynomials recovered by exact
//! interpolation of colength samples, and the (mixed) multiplicities read off
//! their leading terms.
//!
//! Neither polynomial comes with an effective bound from which it agrees with
//! the length function, so both fits use the same doubling protocol: fit on a
//! window starting at `N`, refit at `2N`, and accept once two successive fits
//! coincide and `d + 2` further samples beyond the second window agree. The
//! first window starts at `N0 = d * (1 + max generator degree)` and the search
//! gives up past `1024 * N0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::colength::{colength, ColengthMode};
use crate::error::{Error, Result};
use crate::format::big_to_json;
use crate::ideal::MonomialIdeal;
use crate::linalg::solve_integer_system;

/// Multiplier applied to the starting window before the search is abandoned.
pub const STABILIZATION_CAP_FACTOR: u64 = 1024;

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn start_window(dim: usize, ideals: &[&MonomialIdeal]) -> u64 {
    let top = ideals.iter().map(|i| i.max_total_degree()).max().unwrap_or(0);
    dim as u64 * (1 + top)
}

/// Powers `K^n` produced in increasing `n` by repeated multiplication by `K`.
struct PowerLadder<'a> {
    base: &'a MonomialIdeal,
    exponent: u64,
    current: MonomialIdeal,
}

impl<'a> PowerLadder<'a> {
    fn new(base: &'a MonomialIdeal) -> Self {
        Self {
            base,
            exponent: 0,
            current: MonomialIdeal::unit(base.dim()),
        }
    }

    fn advance_to(&mut self, n: u64) -> Result<&MonomialIdeal> {
        assert!(n >= self.exponent, "ladder only moves upward");
        while self.exponent < n {
            self.current = self.current.product(self.base)?;
            self.exponent += 1;
        }
        Ok(&self.current)
    }
}

/// `ℓ(R/I^n)`.
pub fn hilbert_function(ideal: &MonomialIdeal, n: u32) -> Result<BigInt> {
    ideal.require_m_primary()?;
    colength(&ideal.power(n)?, ColengthMode::Sliced)
}

/// The Hilbert-Samuel polynomial in the binomial basis
/// `P(n) = Σ (-1)^i e_i C(n + d - 1 - i, d - i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub dim: usize,
    /// `e_0(I), ..., e_d(I)`.
    pub coeffs: Vec<BigInt>,
    /// Sample point from which agreement with `ℓ(R/I^n)` was certified.
    pub threshold: u64,
}

impl HilbertPolynomial {
    pub fn eval(&self, n: u64) -> BigInt {
        evaluate_binomial_basis(
            self.dim,
            &self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect::<Vec<_>>(),
            n,
        )
        .to_integer()
    }

    pub fn multiplicity(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn to_json(&self) -> Value {
        json!({
            "threshold": self.threshold,
            "e": self.coeffs.iter().map(big_to_json).collect::<Vec<_>>(),
        })
    }
}

fn binomial_basis_value(dim: usize, i: usize, n: u64) -> BigInt {
    let d = dim as u64;
    let i = i as u64;
    // n >= 1 throughout, so n + d - 1 - i never underflows.
    let v = binomial(n + d - 1 - i, d - i);
    if i % 2 == 0 {
        v
    } else {
        -v
    }
}

fn evaluate_binomial_basis(dim: usize, coeffs: &[BigRational], n: u64) -> BigRational {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c * BigRational::from_integer(binomial_basis_value(dim, i, n)))
        .sum()
}

fn format_rationals(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub fn hilbert_polynomial(ideal: &MonomialIdeal) -> Result<HilbertPolynomial> {
    ideal.require_m_primary()?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let dim = ideal.dim();
    let mut ladder = PowerLadder::new(ideal);
    let mut sample = |n: u64| -> Result<BigInt> { colength(ladder.advance_to(n)?, ColengthMode::Sliced) };

    let fit = |sample: &mut dyn FnMut(u64) -> Result<BigInt>, start: u64| -> Result<Vec<BigRational>> {
        let mut rows = Vec::with_capacity(dim + 1);
        let mut rhs = Vec::with_capacity(dim + 1);
        for n in start..=start + dim as u64 {
            rows.push((0..=dim).map(|i| binomial_basis_value(dim, i, n)).collect());
            rhs.push(sample(n)?);
        }
        solve_integer_system(&rows, &rhs)
    };

    let n0 = start_window(dim, &[ideal]);
    let cap = n0 * STABILIZATION_CAP_FACTOR;
    let mut n = n0;
    let mut previous = fit(&mut sample, n)?;
    loop {
        let next = n * 2;
        let current = fit(&mut sample, next)?;
        if current == previous {
            let probe_start = next + dim as u64 + 1;
            let mut agrees = true;
            for p in probe_start..probe_start + dim as u64 + 2 {
                if evaluate_binomial_basis(dim, &current, p) != BigRational::from_integer(sample(p)?) {
                    agrees = false;
                    break;
                }
            }
            if agrees {
                let coeffs = current
                    .iter()
                    .map(|c| {
                        if c.is_integer() {
                            Ok(c.to_integer())
                        } else {
                            Err(Error::NonIntegral(format!(
                                "Hilbert coefficient {c} of ({ideal})"
                            )))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                return Ok(HilbertPolynomial {
                    dim,
                    coeffs,
                    threshold: n,
                });
            }
        }
        if next * 2 > cap {
            return Err(Error::StabilizationCap {
                cap,
                previous: format_rationals(&previous),
                current: format_rationals(&current),
            });
        }
        previous = current;
        n = next;
    }
}

/// `e(I)`.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<BigInt> {
    Ok(hilbert_polynomial(ideal)?.coeffs.swap_remove(0))
}

/// `ℓ(R / I^r J^s)`.
pub fn bhattacharya_function(i: &MonomialIdeal, j: &MonomialIdeal, r: u32, s: u32) -> Result<BigInt> {
    i.require_m_primary()?;
    j.require_m_primary()?;
    colength(&i.power(r)?.product(&j.power(s)?)?, ColengthMode::Sliced)
}

/// Exact polynomial `P(r, s) = Σ c_{jk} r^j s^k` of total degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BhattacharyaPolynomial {
    pub dim: usize,
    /// Nonzero coefficients keyed by `(deg_r, deg_s)`.
    pub coeffs: BTreeMap<(u32, u32), BigRational>,
    pub threshold: u64,
}

impl BhattacharyaPolynomial {
    fn from_dense(dim: usize, monomials: &[(u32, u32)], values: Vec<BigRational>, threshold: u64) -> Self {
        let coeffs = monomials
            .iter()
            .copied()
            .zip(values)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self {
            dim,
            coeffs,
            threshold,
        }
    }

    pub fn coefficient(&self, deg_r: u32, deg_s: u32) -> BigRational {
        self.coeffs
            .get(&(deg_r, deg_s))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|(a, b)| a + b).max()
    }

    pub fn eval(&self, r: u64, s: u64) -> BigRational {
        eval_bivariate(&self.coeffs, r, s)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|((a, b), c)| {
                json!({"r": a, "s": b, "num": big_to_json(c.numer()), "den": big_to_json(c.denom())})
            })
            .collect();
        json!({"threshold": self.threshold, "terms": terms})
    }
}

impl fmt::Display for BhattacharyaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((a, b), c) in self.coeffs.iter().rev() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || (*a == 0 && *b == 0) {
                factors.push(if mag.is_integer() {
                    mag.to_string()
                } else {
                    format!("({mag})")
                });
            }
            for (var, e) in [("r", a), ("s", b)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn eval_bivariate(coeffs: &BTreeMap<(u32, u32), BigRational>, r: u64, s: u64) -> BigRational {
    coeffs
        .iter()
        .map(|((a, b), c)| {
            c * BigRational::from_integer(
                num_traits::pow(BigInt::from(r), *a as usize) * num_traits::pow(BigInt::from(s), *b as usize),
            )
        })
        .sum()
}

/// Monomials `r^j s^k` with `j + k <= dim`, in a fixed order.
fn bivariate_monomials(dim: usize) -> Vec<(u32, u32)> {
    let d = dim as u32;
    (0..=d).flat_map(|t| (0..=t).map(move |k| (t - k, k))).collect()
}

/// Colength samples of `I^{N+a} J^{N+b}` built from a shared `(IJ)^N`.
struct GridSampler<'a> {
    i: &'a MonomialIdeal,
    j: &'a MonomialIdeal,
    i_powers: Vec<MonomialIdeal>,
    diagonal: PowerLadder<'a>,
}

impl<'a> GridSampler<'a> {
    fn new(i: &'a MonomialIdeal, j: &'a MonomialIdeal, ij: &'a MonomialIdeal) -> Result<Self> {
        let dim = i.dim();
        let mut i_powers = vec![MonomialIdeal::unit(dim)];
        for a in 1..=dim {
            let next = i_powers[a - 1].product(i)?;
            i_powers.push(next);
        }
        Ok(Self {
            i,
            j,
            i_powers,
            diagonal: PowerLadder::new(ij),
        })
    }

    /// `ℓ(R/I^{n+a} J^{n+b})` for all `a + b <= d`, keyed by `(a, b)`.
    fn triangle(&mut self, n: u64) -> Result<BTreeMap<(u32, u32), BigInt>> {
        let dim = self.i.dim();
        let base = self.diagonal.advance_to(n)?.clone();
        let j = self.j;
        let rows: Vec<Result<Vec<((u32, u32), BigInt)>>> = (0..=dim)
            .into_par_iter()
            .map(|a| {
                let mut cur = base.product(&self.i_powers[a])?;
                let mut out = Vec::with_capacity(dim + 1 - a);
                for b in 0..=(dim - a) {
                    if b > 0 {
                        cur = cur.product(j)?;
                    }
                    out.push(((a as u32, b as u32), colength(&cur, ColengthMode::Sliced)?));
                }
                Ok(out)
            })
            .collect();
        let mut grid = BTreeMap::new();
        for row in rows {
            grid.extend(row?);
        }
        Ok(grid)
    }

    fn diagonal_value(&mut self, n: u64) -> Result<BigInt> {
        colength(self.diagonal.advance_to(n)?, ColengthMode::Sliced)
    }
}

pub fn bhattacharya_polynomial(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<BhattacharyaPolynomial> {
    if i.dim() != j.dim() {
        return Err(Error::DimensionMismatch {
            expected: i.dim(),
            found: j.dim(),
        });
    }
    i.require_m_primary()?;
    j.require_m_primary()?;
    if i.is_unit() || j.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let dim = i.dim();
    let ij = i.product(j)?;
    let monomials = bivariate_monomials(dim);
    let mut sampler = GridSampler::new(i, j, &ij)?;

    let fit = |sampler: &mut GridSampler<'_>, n: u64| -> Result<Vec<BigRational>> {
        let grid = sampler.triangle(n)?;
        let mut rows = Vec::with_capacity(grid.len());
        let mut rhs = Vec::with_capacity(grid.len());
        for (&(a, b), value) in &grid {
            let r = BigInt::from(n + u64::from(a));
            let s = BigInt::from(n + u64::from(b));
            rows.push(
                monomials
                    .iter()
                    .map(|&(dr, ds)| {
                        num_traits::pow(r.clone(), dr as usize) * num_traits::pow(s.clone(), ds as usize)
                    })
                    .collect(),
            );
            rhs.push(value.clone());
        }
        solve_integer_system(&rows, &rhs)
    };

    let n0 = start_window(dim, &[i, j]);
    let cap = n0 * STABILIZATION_CAP_FACTOR;
    let mut n = n0;
    let mut previous = fit(&mut sampler, n)?;
    loop {
        let next = n * 2;
        let current = fit(&mut sampler, next)?;
        if current == previous {
            let candidate = BhattacharyaPolynomial::from_dense(dim, &monomials, current.clone(), n);
            // Diagonal probes (N'+1+j, N'+1+j) past the second window.
            let last = next + dim as u64;
            let mut agrees = true;
            for p in last + 1..=last + dim as u64 + 2 {
                if candidate.eval(p, p) != BigRational::from_integer(sampler.diagonal_value(p)?) {
                    agrees = false;
                    break;
                }
            }
            if agrees {
                if candidate.total_degree() != Some(dim as u32) {
                    return Err(Error::Inconsistent(format!(
                        "Bhattacharya polynomial {candidate} does not have degree {dim}"
                    )));
                }
                return Ok(candidate);
            }
        }
        if next * 2 > cap {
            return Err(Error::StabilizationCap {
                cap,
                previous: format_rationals(&previous),
                current: format_rationals(&current),
            });
        }
        previous = current;
        n = next;
    }
}

/// The mixed multiplicities `e_0(I|J), ..., e_d(I|J)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedMultiplicities {
    pub dim: usize,
    pub e: Vec<BigInt>,
}

impl MixedMultiplicities {
    /// Wraps a hand-entered sequence; only checks positivity.
    pub fn from_sequence(e: Vec<BigInt>) -> Result<Self> {
        if e.len() < 2 {
            return Err(Error::Parse("need at least two entries e_0, e_1".into()));
        }
        if let Some(bad) = e.iter().find(|v| !v.is_positive()) {
            return Err(Error::Parse(format!("entries must be positive, got {bad}")));
        }
        Ok(Self { dim: e.len() - 1, e })
    }

    pub fn from_u64s(e: &[u64]) -> Result<Self> {
        Self::from_sequence(e.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn as_u64s(&self) -> Option<Vec<u64>> {
        self.e.iter().map(|v| v.to_u64()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({"e": self.e.iter().map(big_to_json).collect::<Vec<_>>()})
    }
}

impl fmt::Display for MixedMultiplicities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.e.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn positive_integer(value: BigRational, what: impl FnOnce() -> String) -> Result<BigInt> {
    if !value.is_integer() {
        return Err(Error::NonIntegral(format!("{} = {value}", what())));
    }
    let v = value.to_integer();
    if !v.is_positive() {
        return Err(Error::Inconsistent(format!("{} = {v} is not positive", what())));
    }
    Ok(v)
}

/// Reads `e_i = d!/C(d,i) · [r^{d-i} s^i] P` off a Bhattacharya polynomial.
pub fn extract_mixed(poly: &BhattacharyaPolynomial) -> Result<MixedMultiplicities> {
    let d = poly.dim as u64;
    let e = (0..=d)
        .map(|i| {
            let scale = BigRational::new(factorial(d), binomial(d, i));
            let c = poly.coefficient((d - i) as u32, i as u32);
            positive_integer(c * scale, || format!("e_{i}"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MixedMultiplicities { dim: poly.dim, e })
}

pub fn mixed_multiplicities(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MixedMultiplicities> {
    extract_mixed(&bhattacharya_polynomial(i, j)?)
}

/// Independent route: `e(I J^k) = Σ C(d,i) e_i k^i` for `k = 0..=d`, solved exactly.
pub fn mixed_via_vandermonde(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MixedMultiplicities> {
    if i.dim() != j.dim() {
        return Err(Error::DimensionMismatch {
            expected: i.dim(),
            found: j.dim(),
        });
    }
    j.require_m_primary()?;
    let dim = i.dim();
    let samples = (0..=dim as u32)
        .map(|k| multiplicity(&i.product(&j.power(k)?)?))
        .collect::<Result<Vec<_>>>()?;
    vandermonde_extract(dim, &samples)
}

/// Solves `samples[k] = Σ_i C(d,i) e_i k^i` for the `e_i`.
pub fn vandermonde_extract(dim: usize, samples: &[BigInt]) -> Result<MixedMultiplicities> {
    assert_eq!(samples.len(), dim + 1);
    let rows: Vec<Vec<BigInt>> = (0..=dim)
        .map(|k| (0..=dim).map(|p| num_traits::pow(BigInt::from(k), p)).collect())
        .collect();
    let scaled = solve_integer_system(&rows, samples)?;
    let e = scaled
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            let c = BigRational::from_integer(binomial(dim as u64, i as u64));
            positive_integer(v / c, || format!("e_{i} (Vandermonde)"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MixedMultiplicities { dim, e })
}

/// `ℓ(R/I^{[n]}) / n^d` for a parameter ideal.
pub fn lech_ratio(ideal: &MonomialIdeal, n: u32) -> Result<BigRational> {
    if !ideal.is_parameter_ideal() {
        return Err(Error::NotParameterIdeal(format!(
            "({ideal}) is not generated by {} pure powers",
            ideal.dim()
        )));
    }
    if n == 0 {
        return Err(Error::Parse("Lech ratio needs n >= 1".into()));
    }
    let len = colength(&ideal.frobenius_power(n)?, ColengthMode::Sliced)?;
    let denom = num_traits::pow(BigInt::from(n), ideal.dim());
    Ok(BigRational::new(len, denom))
}
