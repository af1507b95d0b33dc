//! Ideal literals: the JSON form `{"dim": d, "gens": [[...], ...]}` and the
//! text sugar `x^2, x*y, y^3`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealLiteral {
    pub dim: usize,
    pub gens: Vec<Vec<u32>>,
}

impl IdealLiteral {
    pub fn into_ideal(self) -> Result<MonomialIdeal> {
        MonomialIdeal::normalize(self.dim, self.gens.into_iter().map(ExponentVector::new))
    }
}

impl From<&MonomialIdeal> for IdealLiteral {
    fn from(ideal: &MonomialIdeal) -> Self {
        Self {
            dim: ideal.dim(),
            gens: ideal.gens().iter().map(|g| g.coords().to_vec()).collect(),
        }
    }
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> Value {
    serde_json::to_value(IdealLiteral::from(ideal)).expect("literal serializes")
}

pub fn gens_to_json(gens: &[ExponentVector]) -> Value {
    Value::Array(
        gens.iter()
            .map(|g| Value::Array(g.coords().iter().map(|&c| Value::from(c)).collect()))
            .collect(),
    )
}

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
pub fn big_to_json(v: &BigInt) -> Value {
    if let Some(i) = v.to_i64() {
        Value::from(i)
    } else {
        Value::String(v.to_string())
    }
}

/// Parses either literal form. `dim` overrides the dimension inferred from text.
pub fn parse_ideal(input: &str, dim: Option<usize>) -> Result<MonomialIdeal> {
    let trimmed = input.trim();
    if trimmed.starts_with('{') {
        let literal: IdealLiteral = serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(d) = dim {
            if d != literal.dim {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: literal.dim,
                });
            }
        }
        literal.into_ideal()
    } else {
        parse_text(trimmed, dim)
    }
}

fn variable_index(name: &str) -> Result<usize> {
    match name {
        "x" => Ok(0),
        "y" => Ok(1),
        "z" => Ok(2),
        _ => name
            .strip_prefix('x')
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k >= 1)
            .map(|k| k - 1)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`"))),
    }
}

fn parse_monomial(term: &str) -> Result<Vec<(usize, u32)>> {
    let term = term.trim();
    if term.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    if term == "1" {
        return Ok(Vec::new());
    }
    term.split('*')
        .map(|factor| {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (
                    v.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            Ok((variable_index(var)?, exp))
        })
        .collect()
}

/// Text sugar: comma-separated monomials over `x, y, z` or `x1 .. xd`.
pub fn parse_text(input: &str, dim: Option<usize>) -> Result<MonomialIdeal> {
    let terms = input.split(',').map(parse_monomial).collect::<Result<Vec<_>>>()?;
    let used = terms.iter().flatten().map(|(i, _)| i + 1).max().unwrap_or(1);
    let dim = match dim {
        Some(d) if d < used => {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: used,
            })
        }
        Some(d) => d,
        None => used,
    };
    let gens = terms.into_iter().map(|factors| {
        let mut v = vec![0u32; dim];
        for (i, e) in factors {
            v[i] += e;
        }
        ExponentVector::new(v)
    });
    MonomialIdeal::normalize(dim, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_sugar() {
        let k = parse_ideal("x^2, x*y, y^3", None).unwrap();
        assert_eq!(
            k,
            MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 3]]).unwrap()
        );
        let m3 = parse_ideal("x1,x2,x3", None).unwrap();
        assert_eq!(m3, MonomialIdeal::maximal(3));
        let padded = parse_ideal("x", Some(2)).unwrap();
        assert_eq!(padded.dim(), 2);
        assert_eq!(parse_ideal("x*x*y^2", None).unwrap().gens()[0].coords(), &[2, 2]);
        assert!(parse_ideal("1", Some(2)).unwrap().is_unit());
    }

    #[test]
    fn text_errors() {
        assert!(matches!(parse_ideal("x^, y", None), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("w", None), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("x,,y", None), Err(Error::Parse(_))));
        assert!(matches!(
            parse_ideal("x,y,z", Some(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn json_literal() {
        let k = parse_ideal(r#"{"dim": 2, "gens": [[2,0],[3,1],[0,1]]}"#, None).unwrap();
        assert_eq!(k, MonomialIdeal::from_exponents(2, &[&[2, 0], &[0, 1]]).unwrap());
        assert_eq!(ideal_to_json(&k).to_string(), r#"{"dim":2,"gens":[[0,1],[2,0]]}"#);
        assert!(matches!(
            parse_ideal(r#"{"dim": 2, "gens": []}"#, None),
            Err(Error::EmptyGenerators)
        ));
        assert!(matches!(parse_ideal(r#"{"dim": 2"#, None), Err(Error::Parse(_))));
    }

    #[test]
    fn big_integers_as_strings() {
        let big = BigInt::from(u64::MAX) * 4;
        assert_eq!(big_to_json(&big), Value::String(big.to_string()));
        assert_eq!(big_to_json(&BigInt::from(-3)), Value::from(-3));
    }
}
