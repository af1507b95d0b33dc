//! Phase-one simplex over exact rationals, with Bland's rule.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Decides whether `{x >= 0 : a x = b}` is nonempty.
///
/// Rows with a negative right-hand side are negated first; one artificial
/// variable per row starts in the basis and their sum is minimized.
pub fn is_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let rows = a.len();
    assert_eq!(rows, b.len());
    if rows == 0 {
        return true;
    }
    let structural = a[0].len();
    let cols = structural + rows;

    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(rows);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        assert_eq!(row.len(), structural);
        let flip = bi.is_negative();
        let mut t: Vec<BigRational> = row
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        t.extend((0..rows).map(|k| {
            if k == i {
                BigRational::from_integer(1.into())
            } else {
                BigRational::zero()
            }
        }));
        tableau.push(t);
        rhs.push(if flip { -bi.clone() } else { bi.clone() });
    }
    let mut basis: Vec<usize> = (structural..cols).collect();

    // w = w0 + Σ reduced[j] x_j, with w the sum of artificials.
    let mut reduced: Vec<BigRational> = (0..cols)
        .map(|j| {
            if j < structural {
                -tableau.iter().map(|t| t[j].clone()).sum::<BigRational>()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let mut objective: BigRational = rhs.iter().cloned().sum();

    loop {
        let Some(entering) = (0..cols).find(|&j| reduced[j].is_negative()) else {
            break;
        };
        let mut leaving: Option<(usize, BigRational)> = None;
        for i in 0..rows {
            let coef = &tableau[i][entering];
            if !coef.is_positive() {
                continue;
            }
            let ratio = &rhs[i] / coef;
            let better = match &leaving {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leaving = Some((i, ratio));
            }
        }
        // Phase-one objective is bounded below by zero, so a ratio always exists.
        let (p, _) = leaving.expect("phase one is bounded");

        let pivot = tableau[p][entering].clone();
        for v in tableau[p].iter_mut() {
            *v /= &pivot;
        }
        rhs[p] /= &pivot;
        let pivot_row = tableau[p].clone();
        let pivot_rhs = rhs[p].clone();
        for i in 0..rows {
            if i == p {
                continue;
            }
            let factor = tableau[i][entering].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, pv) in tableau[i].iter_mut().zip(&pivot_row) {
                *v -= &factor * pv;
            }
            rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = reduced[entering].clone();
        for (v, pv) in reduced.iter_mut().zip(&pivot_row) {
            *v -= &factor * pv;
        }
        objective += &factor * &pivot_rhs;
        basis[p] = entering;
    }
    objective.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn simple_feasible_and_infeasible() {
        // x + y = 1, x - y = 0
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert!(is_feasible(&a, &[q(1), q(0)]));
        // x + y = 1, x + y = 2
        let a = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert!(!is_feasible(&a, &[q(1), q(2)]));
        // x = -1 has no nonnegative solution
        assert!(!is_feasible(&[vec![q(1)]], &[q(-1)]));
        assert!(is_feasible(&[vec![q(-1)]], &[q(-1)]));
    }

    #[test]
    fn degenerate_system_terminates() {
        // Several redundant equalities through the origin.
        let a = vec![
            vec![q(1), q(-1), q(0), q(1)],
            vec![q(2), q(-2), q(0), q(2)],
            vec![q(0), q(1), q(-1), q(0)],
        ];
        assert!(is_feasible(&a, &[q(0), q(0), q(0)]));
    }
}
