//! Sectional Milnor numbers of Brieskorn-Pham singularities `f = Σ x_i^{a_i}`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::colength::{colength, ColengthMode};
use crate::error::{Error, Result};
use crate::format::big_to_json;
use crate::hilbert::{mixed_multiplicities, MixedMultiplicities};
use crate::ideal::MonomialIdeal;
use crate::theorems::{log_convexity_statuses, InequalityReport, Status, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrieskornPolynomial {
    exponents: Vec<u32>,
}

impl BrieskornPolynomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidBrieskorn("no exponents".into()));
        }
        if let Some(a) = exponents.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidBrieskorn(format!(
                "exponent {a} < 2 gives no isolated singularity"
            )));
        }
        Ok(Self { exponents })
    }

    /// Parses `{"exponents": [...]}` or a comma-separated list.
    pub fn parse(input: &str) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed.starts_with('{') {
            #[derive(Deserialize)]
            struct Raw {
                exponents: Vec<u32>,
            }
            let raw: Raw = serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::new(raw.exponents);
        }
        let exponents = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of variables, `n + 1`.
    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    /// Order of `f` at the origin.
    pub fn order(&self) -> u32 {
        *self.exponents.iter().min().expect("nonempty")
    }
}

/// `(x_0^{a_0 - 1}, ..., x_n^{a_n - 1})`, the partials up to units.
pub fn jacobian_ideal(f: &BrieskornPolynomial) -> Result<MonomialIdeal> {
    let powers: Vec<u32> = f.exponents.iter().map(|a| a - 1).collect();
    MonomialIdeal::pure_powers(&powers)
}

pub fn milnor_number(f: &BrieskornPolynomial) -> Result<BigInt> {
    let mu = colength(&jacobian_ideal(f)?, ColengthMode::Sliced)?;
    let product: BigInt = f.exponents.iter().map(|&a| BigInt::from(a - 1)).product();
    if mu != product {
        return Err(Error::Inconsistent(format!(
            "colength of the Jacobian ideal is {mu}, expected Π(a_i - 1) = {product}"
        )));
    }
    Ok(mu)
}

/// `μ^(0), ..., μ^(n+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MilnorSpectrum {
    pub mu: Vec<BigInt>,
}

impl MilnorSpectrum {
    pub fn from_mixed(e: MixedMultiplicities) -> Self {
        Self { mu: e.e }
    }

    pub fn milnor(&self) -> &BigInt {
        self.mu.last().expect("nonempty spectrum")
    }
}

/// `μ^(i) = e_i(m | J(f))`.
pub fn sectional_milnor(f: &BrieskornPolynomial) -> Result<MilnorSpectrum> {
    let m = MonomialIdeal::maximal(f.dim());
    Ok(MilnorSpectrum::from_mixed(mixed_multiplicities(
        &m,
        &jacobian_ideal(f)?,
    )?))
}

/// `μ^(0) = 1` and `μ^(1) = ord(f) - 1`.
pub fn check_low_sections(spectrum: &MilnorSpectrum, f: &BrieskornPolynomial) -> InequalityReport {
    let mut statuses = vec![Status::of_eq(&spectrum.mu[0], &BigInt::from(1))];
    if let Some(mu1) = spectrum.mu.get(1) {
        statuses.push(Status::of_eq(mu1, &BigInt::from(f.order() - 1)));
    }
    InequalityReport::from_parts(
        "low-sections",
        json!({"exponents": f.exponents, "mu": mu_json(&spectrum.mu)}),
        statuses,
    )
}

/// `μ^(i)^2 <= μ^(i-1) μ^(i+1)` at every interior index.
pub fn check_log_convexity(spectrum: &MilnorSpectrum) -> InequalityReport {
    InequalityReport::from_parts(
        "log-convexity",
        json!({"mu": mu_json(&spectrum.mu)}),
        log_convexity_statuses(&spectrum.mu),
    )
}

/// Formal alternating sum `Σ_{i=0}^{n} (-1)^i μ^(i)`, leaving out the top entry.
pub fn euler_characteristic_sum(spectrum: &MilnorSpectrum) -> BigInt {
    let n = spectrum.mu.len().saturating_sub(2);
    spectrum.mu
        .iter()
        .take(n + 1)
        .enumerate()
        .map(|(i, v)| if i % 2 == 0 { v.clone() } else { -v.clone() })
        .sum()
}

fn mu_json(mu: &[BigInt]) -> Value {
    Value::Array(mu.iter().map(big_to_json).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct MilnorReport {
    pub exponents: Vec<u32>,
    pub spectrum: MilnorSpectrum,
    pub milnor: BigInt,
    pub low_sections: InequalityReport,
    pub log_convexity: InequalityReport,
    pub alt_sum: BigInt,
}

impl MilnorReport {
    pub fn log_convex(&self) -> bool {
        !self.log_convexity.verdict.is_violation()
    }

    pub fn passes(&self) -> bool {
        self.log_convex()
            && self.low_sections.verdict == Verdict::Equality
            && self.spectrum.milnor() == &self.milnor
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mu": mu_json(&self.spectrum.mu),
            "milnor": big_to_json(&self.milnor),
            "log_convex": self.log_convex(),
            "alt_sum": big_to_json(&self.alt_sum),
        })
    }
}

/// Every quantity the `milnor` command reports.
pub fn milnor_report(f: &BrieskornPolynomial) -> Result<MilnorReport> {
    let spectrum = sectional_milnor(f)?;
    let milnor = milnor_number(f)?;
    Ok(MilnorReport {
        exponents: f.exponents.clone(),
        low_sections: check_low_sections(&spectrum, f),
        log_convexity: check_log_convexity(&spectrum),
        alt_sum: euler_characteristic_sum(&spectrum),
        milnor,
        spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: &[u32]) -> BrieskornPolynomial {
        BrieskornPolynomial::new(a.to_vec()).unwrap()
    }

    fn mu(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn jacobian_ideals() {
        assert_eq!(
            jacobian_ideal(&f(&[3, 3])).unwrap(),
            MonomialIdeal::pure_powers(&[2, 2]).unwrap()
        );
        assert_eq!(
            jacobian_ideal(&f(&[2, 5])).unwrap(),
            MonomialIdeal::pure_powers(&[1, 4]).unwrap()
        );
        assert_eq!(
            jacobian_ideal(&f(&[2, 3, 7])).unwrap(),
            MonomialIdeal::pure_powers(&[1, 2, 6]).unwrap()
        );
        assert!(matches!(
            BrieskornPolynomial::new(vec![1, 3]),
            Err(Error::InvalidBrieskorn(_))
        ));
        assert!(matches!(
            BrieskornPolynomial::new(vec![]),
            Err(Error::InvalidBrieskorn(_))
        ));
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(milnor_number(&f(&[3, 3])).unwrap(), BigInt::from(4));
        assert_eq!(milnor_number(&f(&[2, 5])).unwrap(), BigInt::from(4));
        assert_eq!(milnor_number(&f(&[2, 3, 7])).unwrap(), BigInt::from(12));
    }

    #[test]
    fn spectra() {
        assert_eq!(sectional_milnor(&f(&[3, 3])).unwrap().mu, mu(&[1, 2, 4]));
        assert_eq!(sectional_milnor(&f(&[2, 3])).unwrap().mu, mu(&[1, 1, 2]));
        assert_eq!(sectional_milnor(&f(&[2, 2])).unwrap().mu, mu(&[1, 1, 1]));
    }

    #[test]
    fn low_sections_and_convexity() {
        for a in [&[3, 3][..], &[2, 5], &[2, 3, 7]] {
            let g = f(a);
            let s = sectional_milnor(&g).unwrap();
            assert_eq!(check_low_sections(&s, &g).verdict, Verdict::Equality);
        }
        let s = |v: &[i64]| MilnorSpectrum { mu: mu(v) };
        assert_eq!(check_log_convexity(&s(&[1, 2, 4])).verdict, Verdict::Equality);
        assert_eq!(check_log_convexity(&s(&[1, 1, 2])).verdict, Verdict::Holds);
        assert_eq!(check_log_convexity(&s(&[1, 1, 1])).verdict, Verdict::Equality);
    }

    #[test]
    fn alternating_sums() {
        let s = |v: &[i64]| MilnorSpectrum { mu: mu(v) };
        assert_eq!(euler_characteristic_sum(&s(&[1, 2, 4])), BigInt::from(-1));
        assert_eq!(euler_characteristic_sum(&s(&[1, 1, 1])), BigInt::from(0));
        assert_eq!(euler_characteristic_sum(&s(&[1, 1, 2])), BigInt::from(0));
    }

    #[test]
    fn report_json() {
        let r = milnor_report(&BrieskornPolynomial::parse("3,3").unwrap()).unwrap();
        assert_eq!(
            r.to_json(),
            json!({"mu": [1, 2, 4], "milnor": 4, "log_convex": true, "alt_sum": -1})
        );
        assert!(r.passes());
        assert_eq!(
            BrieskornPolynomial::parse(r#"{"exponents": [2, 3]}"#).unwrap(),
            f(&[2, 3])
        );
        assert!(matches!(BrieskornPolynomial::parse("3,x"), Err(Error::Parse(_))));
    }
}
