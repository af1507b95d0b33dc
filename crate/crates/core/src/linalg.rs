//! Exact linear solves over the integers with rational solutions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Solves the square system `a · x = b` by fraction-free (Bareiss) elimination.
pub fn solve_integer_system(a: &[Vec<BigInt>], b: &[BigInt]) -> Result<Vec<BigRational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(Error::Singular)?;
        m.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(m[i][i].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn solves_small_systems() {
        let a = vec![ints(&[2, 1]), ints(&[1, 3])];
        let x = solve_integer_system(&a, &ints(&[3, 5])).unwrap();
        assert_eq!(x[0], BigRational::new(4.into(), 5.into()));
        assert_eq!(x[1], BigRational::new(7.into(), 5.into()));
    }

    #[test]
    fn needs_pivoting() {
        let a = vec![ints(&[0, 1, 2]), ints(&[1, 0, 1]), ints(&[4, 1, 0])];
        let b = ints(&[8, 4, 6]);
        let x = solve_integer_system(&a, &b).unwrap();
        for (row, rhs) in a.iter().zip(&b) {
            let lhs: BigRational = row
                .iter()
                .zip(&x)
                .map(|(c, v)| BigRational::from_integer(c.clone()) * v)
                .sum();
            assert_eq!(lhs, BigRational::from_integer(rhs.clone()));
        }
    }

    #[test]
    fn singular_is_reported() {
        let a = vec![ints(&[1, 2]), ints(&[2, 4])];
        assert_eq!(solve_integer_system(&a, &ints(&[1, 2])), Err(Error::Singular));
    }
}
