//! Monomial ideals of `k[x_1, ..., x_d]` stored by their minimal generators.
//!
//! A monomial `x^p` is an [`ExponentVector`]; an ideal keeps the antichain of
//! componentwise-minimal generators in lexicographic order, so two ideals are
//! equal exactly when their generator lists are equal.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::staircase::Staircase2;

/// Exponents of a single monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(SmallVec<[u32; 4]>);

impl ExponentVector {
    pub fn new(coords: impl Into<Vec<u32>>) -> Self {
        Self(SmallVec::from_vec(coords.into()))
    }

    pub fn zero(dim: usize) -> Self {
        Self(SmallVec::from_elem(0, dim))
    }

    /// `x_axis^power`.
    pub fn pure_power(dim: usize, axis: usize, power: u32) -> Self {
        let mut v = Self::zero(dim);
        v.0[axis] = power;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Self)
    }

    pub fn checked_scale(&self, n: u32) -> Result<Self> {
        self.0
            .iter()
            .map(|a| a.checked_mul(n).ok_or(Error::ExponentOverflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Self)
    }

    /// Least common multiple of two monomials.
    pub fn lcm(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `max(self - other, 0)` componentwise.
    pub fn saturating_sub(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Index of the only nonzero coordinate, if there is exactly one.
    pub fn pure_axis(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &c)| c != 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        Self(SmallVec::from_slice(&v))
    }
}

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Reduces `raw_gens` to the antichain of minimal elements.
    pub fn normalize<I>(dim: usize, raw_gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let raw: Vec<ExponentVector> = raw_gens.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(bad) = raw.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        Ok(Self {
            dim,
            gens: minimalize(dim, raw),
        })
    }

    /// Convenience constructor from plain coordinate lists.
    pub fn from_exponents(dim: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::normalize(dim, gens.iter().map(|g| ExponentVector::new(g.to_vec())))
    }

    /// The ideal `(1)`.
    pub fn unit(dim: usize) -> Self {
        Self {
            dim,
            gens: vec![ExponentVector::zero(dim)],
        }
    }

    /// The maximal ideal `(x_1, ..., x_d)`.
    pub fn maximal(dim: usize) -> Self {
        let gens = (0..dim).map(|i| ExponentVector::pure_power(dim, i, 1)).collect();
        Self {
            dim,
            gens: minimalize(dim, gens),
        }
    }

    /// `(x_1^{a_1}, ..., x_d^{a_d})`.
    pub fn pure_powers(exponents: &[u32]) -> Result<Self> {
        let dim = exponents.len();
        Self::normalize(
            dim,
            exponents
                .iter()
                .enumerate()
                .map(|(i, &a)| ExponentVector::pure_power(dim, i, a)),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    fn check_point(&self, p: &ExponentVector) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        Ok(())
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn contains_monomial(&self, p: &ExponentVector) -> Result<bool> {
        self.check_point(p)?;
        Ok(self.gens.iter().any(|g| g.divides(p)))
    }

    /// `other ⊆ self`, checked generator by generator.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.check_same_dim(other)?;
        Ok(other.gens.iter().all(|h| self.gens.iter().any(|g| g.divides(h))))
    }

    /// Smallest `c` with `x_axis^c` in the ideal.
    pub fn pure_power_bound(&self, axis: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| g.is_zero() || g.pure_axis() == Some(axis))
            .map(|g| g.coords()[axis])
            .min()
    }

    pub fn pure_power_bounds(&self) -> Result<Vec<u32>> {
        (0..self.dim)
            .map(|i| self.pure_power_bound(i).ok_or(Error::NotMPrimary { axis: i + 1 }))
            .collect()
    }

    /// Contains a pure power of every variable. The unit ideal qualifies.
    pub fn is_m_primary(&self) -> bool {
        (0..self.dim).all(|i| self.pure_power_bound(i).is_some())
    }

    pub fn require_m_primary(&self) -> Result<()> {
        self.pure_power_bounds().map(|_| ())
    }

    /// m-primary and minimally generated by exactly `dim` monomials.
    pub fn is_parameter_ideal(&self) -> bool {
        self.gens.len() == self.dim && self.is_m_primary() && !self.is_unit()
    }

    /// Largest coordinate sum among the generators.
    pub fn max_total_degree(&self) -> u64 {
        self.gens.iter().map(|g| g.total_degree()).max().unwrap_or(0)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.checked_add(b)?);
            }
        }
        Ok(Self {
            dim: self.dim,
            gens: minimalize(self.dim, raw),
        })
    }

    /// `I^n` by repeated multiplication; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<Self> {
        let mut acc = Self::unit(self.dim);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let raw = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(Self {
            dim: self.dim,
            gens: minimalize(self.dim, raw),
        })
    }

    /// The colon ideal `(self : other)`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let mut acc: Option<Self> = None;
        for g in &other.gens {
            let quotient = Self {
                dim: self.dim,
                gens: minimalize(self.dim, self.gens.iter().map(|h| h.saturating_sub(g)).collect()),
            };
            acc = Some(match acc {
                None => quotient,
                Some(prev) => prev.intersect(&quotient)?,
            });
        }
        Ok(acc.expect("ideals have at least one generator"))
    }

    /// `I^{[n]}`: every generator raised to the `n`-th power.
    pub fn frobenius_power(&self, n: u32) -> Result<Self> {
        let raw = self
            .gens
            .iter()
            .map(|g| g.checked_scale(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dim: self.dim,
            gens: minimalize(self.dim, raw),
        })
    }

    pub fn variable_name(dim: usize, axis: usize) -> String {
        if dim <= 3 {
            ["x", "y", "z"][axis].to_string()
        } else {
            format!("x{}", axis + 1)
        }
    }
}

impl fmt::Display for MonomialIdeal {
    /// Text form accepted by the parser, e.g. `x^2, x*y, y^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                let factors: Vec<String> = g
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(i, &c)| {
                        let v = Self::variable_name(self.dim, i);
                        if c == 1 {
                            v
                        } else {
                            format!("{v}^{c}")
                        }
                    })
                    .collect();
                if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                }
            })
            .collect();
        write!(f, "{}", terms.join(", "))
    }
}

/// Keeps only the componentwise-minimal points and returns them sorted.
fn minimalize(dim: usize, mut raw: Vec<ExponentVector>) -> Vec<ExponentVector> {
    let mut out = match dim {
        1 => raw.into_iter().min().into_iter().collect(),
        2 => {
            raw.sort_unstable();
            raw.dedup();
            let mut best_y = u32::MAX;
            let mut out = Vec::new();
            for p in raw {
                let y = p.coords()[1];
                if y < best_y {
                    best_y = y;
                    out.push(p);
                }
            }
            out
        }
        3 => {
            // Packed (z, x, y) keys sort much faster than the vectors themselves.
            let mut keys: Vec<u128> = raw
                .iter()
                .map(|p| {
                    let c = p.coords();
                    (u128::from(c[2]) << 64) | (u128::from(c[0]) << 32) | u128::from(c[1])
                })
                .collect();
            drop(raw);
            keys.sort_unstable();
            keys.dedup();
            let mut stairs = Staircase2::new();
            keys.into_iter()
                .filter_map(|k| {
                    let (z, x, y) = ((k >> 64) as u32, (k >> 32) as u32, k as u32);
                    stairs.insert(x, y).then(|| ExponentVector::new([x, y, z]))
                })
                .collect()
        }
        _ => {
            raw.sort_unstable_by(|a, b| match a.total_degree().cmp(&b.total_degree()) {
                Ordering::Equal => a.cmp(b),
                o => o,
            });
            raw.dedup();
            let mut out: Vec<ExponentVector> = Vec::new();
            for p in raw {
                if !out.iter().any(|g| g.divides(&p)) {
                    out.push(p);
                }
            }
            out
        }
    };
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(dim, gens).unwrap()
    }

    fn gens_of(i: &MonomialIdeal) -> Vec<Vec<u32>> {
        i.gens().iter().map(|g| g.coords().to_vec()).collect()
    }

    #[test]
    fn normalize_examples() {
        let i = ideal(2, &[&[2, 0], &[3, 1], &[0, 1]]);
        assert_eq!(gens_of(&i), vec![vec![0, 1], vec![2, 0]]);
        assert_eq!(gens_of(&ideal(2, &[&[1, 0]])), vec![vec![1, 0]]);
        let i = ideal(2, &[&[2, 1], &[1, 2], &[2, 2]]);
        assert_eq!(gens_of(&i), vec![vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn normalize_errors() {
        assert_eq!(
            MonomialIdeal::normalize(2, Vec::new()),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            MonomialIdeal::from_exponents(2, &[&[1, 0], &[1, 0, 0]]),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            MonomialIdeal::from_exponents(0, &[&[]]),
            Err(Error::ZeroDimension)
        );
    }

    #[test]
    fn normalize_three_and_four_variables() {
        let i = ideal(3, &[&[1, 1, 1], &[1, 1, 2], &[0, 2, 1], &[2, 0, 0], &[1, 2, 1]]);
        assert_eq!(gens_of(&i), vec![vec![0, 2, 1], vec![1, 1, 1], vec![2, 0, 0]]);
        let i = ideal(4, &[&[1, 1, 1, 1], &[1, 1, 1, 2], &[0, 0, 0, 3], &[0, 0, 0, 4]]);
        assert_eq!(gens_of(&i), vec![vec![0, 0, 0, 3], vec![1, 1, 1, 1]]);
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(i.contains_monomial(&[2, 5].into()).unwrap());
        assert!(!i.contains_monomial(&[1, 2].into()).unwrap());
        assert!(i.contains_monomial(&[0, 3].into()).unwrap());
        assert!(i.contains_monomial(&[0, 3, 1].into()).is_err());
    }

    #[test]
    fn products_and_powers() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(gens_of(&x.product(&y).unwrap()), vec![vec![1, 1]]);

        let m = MonomialIdeal::maximal(2);
        let j = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(
            gens_of(&m.product(&j).unwrap()),
            vec![vec![0, 4], vec![1, 3], vec![2, 1], vec![3, 0]]
        );
        let m2 = vec![vec![0, 2], vec![1, 1], vec![2, 0]];
        assert_eq!(gens_of(&m.product(&m).unwrap()), m2);
        assert_eq!(gens_of(&m.power(2).unwrap()), m2);
        assert_eq!(
            gens_of(&j.power(2).unwrap()),
            vec![vec![0, 6], vec![2, 3], vec![4, 0]]
        );
        assert!(j.power(0).unwrap().is_unit());
        assert!(m.product(&MonomialIdeal::maximal(3)).is_err());
    }

    #[test]
    fn intersections() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(gens_of(&x.intersect(&y).unwrap()), vec![vec![1, 1]]);
        let a = ideal(2, &[&[2, 0], &[0, 1]]);
        let b = ideal(2, &[&[1, 0], &[0, 2]]);
        assert_eq!(
            gens_of(&a.intersect(&b).unwrap()),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn colons() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(i.colon(&x).unwrap(), MonomialIdeal::maximal(2));
        let i = ideal(2, &[&[3, 0], &[0, 3]]);
        assert_eq!(
            gens_of(&i.colon(&MonomialIdeal::maximal(2)).unwrap()),
            vec![vec![0, 3], vec![2, 2], vec![3, 0]]
        );
        assert_eq!(i.colon(&MonomialIdeal::unit(2)).unwrap(), i);
    }

    #[test]
    fn frobenius_powers() {
        let j = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(j.frobenius_power(2).unwrap(), ideal(2, &[&[4, 0], &[0, 6]]));
        assert_eq!(
            MonomialIdeal::maximal(2).frobenius_power(3).unwrap(),
            ideal(2, &[&[3, 0], &[0, 3]])
        );
        assert_eq!(j.frobenius_power(1).unwrap(), j);
    }

    #[test]
    fn m_primary_and_parameter_flags() {
        let j = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(j.is_m_primary() && j.is_parameter_ideal());
        let k = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert!(k.is_m_primary() && !k.is_parameter_ideal());
        let not = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(not.require_m_primary(), Err(Error::NotMPrimary { axis: 2 }));
        assert!(MonomialIdeal::unit(2).is_m_primary());
    }

    #[test]
    fn display_uses_text_sugar() {
        let k = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(k.to_string(), "y^3, x*y, x^2");
        assert_eq!(MonomialIdeal::unit(1).to_string(), "1");
        assert_eq!(MonomialIdeal::maximal(4).to_string(), "x4, x3, x2, x1");
    }
}
