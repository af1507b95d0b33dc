//! Length of `R/I` for m-primary monomial ideals, i.e. the number of
//! standard monomials under the staircase.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::staircase::Staircase2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColengthMode {
    /// Recursion over layers of the last coordinate.
    #[default]
    Sliced,
    /// Enumeration of the pure-power bounding box.
    Bruteforce,
}

pub fn colength(ideal: &MonomialIdeal, mode: ColengthMode) -> Result<BigInt> {
    let bounds = ideal.pure_power_bounds()?;
    if ideal.is_unit() {
        return Ok(BigInt::zero());
    }
    Ok(match mode {
        ColengthMode::Sliced => sliced(ideal.dim(), ideal.gens()),
        ColengthMode::Bruteforce => bruteforce(ideal, &bounds),
    })
}

fn bruteforce(ideal: &MonomialIdeal, bounds: &[u32]) -> BigInt {
    let dim = ideal.dim();
    let mut point = vec![0u32; dim];
    let mut count = BigInt::zero();
    'outer: loop {
        if !ideal
            .gens()
            .iter()
            .any(|g| g.coords().iter().zip(point.iter()).all(|(a, b)| a <= b))
        {
            count += 1u32;
        }
        for (c, &bound) in point.iter_mut().zip(bounds) {
            *c += 1;
            if *c < bound {
                continue 'outer;
            }
            *c = 0;
        }
        break;
    }
    count
}

/// `gens` must be minimal and m-primary in `dim` variables.
fn sliced(dim: usize, gens: &[ExponentVector]) -> BigInt {
    match dim {
        1 => BigInt::from(gens.iter().map(|g| g.coords()[0]).min().unwrap_or(0)),
        2 => {
            let mut by_y: Vec<(u32, u32)> = gens.iter().map(|g| (g.coords()[1], g.coords()[0])).collect();
            by_y.sort_unstable();
            let mut total = BigInt::zero();
            let mut width = u32::MAX;
            for (k, &(y, x)) in by_y.iter().enumerate() {
                width = width.min(x);
                if width == 0 {
                    break;
                }
                if let Some(&(next_y, _)) = by_y.get(k + 1) {
                    total += BigInt::from(width) * (next_y - y);
                }
            }
            total
        }
        3 => {
            let mut by_z: Vec<&[u32]> = gens.iter().map(|g| g.coords()).collect();
            by_z.sort_unstable_by_key(|c| c[2]);
            let mut stairs = Staircase2::new();
            let mut total = BigInt::zero();
            let mut k = 0;
            while k < by_z.len() {
                let z = by_z[k][2];
                while k < by_z.len() && by_z[k][2] == z {
                    stairs.insert(by_z[k][0], by_z[k][1]);
                    k += 1;
                }
                let area = stairs.area().expect("slice of an m-primary ideal is m-primary");
                if area == 0 {
                    break;
                }
                if let Some(next) = by_z.get(k) {
                    total += BigInt::from(area) * (next[2] - z);
                }
            }
            total
        }
        _ => {
            let mut by_last: Vec<&ExponentVector> = gens.iter().collect();
            by_last.sort_unstable_by_key(|g| g.coords()[dim - 1]);
            let mut layer: Vec<ExponentVector> = Vec::new();
            let mut total = BigInt::zero();
            let mut k = 0;
            while k < by_last.len() {
                let z = by_last[k].coords()[dim - 1];
                while k < by_last.len() && by_last[k].coords()[dim - 1] == z {
                    layer.push(ExponentVector::new(by_last[k].coords()[..dim - 1].to_vec()));
                    k += 1;
                }
                let slice = MonomialIdeal::normalize(dim - 1, layer.iter().cloned())
                    .expect("layer is nonempty with consistent dimension");
                if slice.is_unit() {
                    break;
                }
                layer = slice.gens().to_vec();
                if let Some(next) = by_last.get(k) {
                    total += sliced(dim - 1, slice.gens()) * (next.coords()[dim - 1] - z);
                }
            }
            total
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn both(i: &MonomialIdeal) -> BigInt {
        let a = colength(i, ColengthMode::Sliced).unwrap();
        let b = colength(i, ColengthMode::Bruteforce).unwrap();
        assert_eq!(a, b, "sliced and brute force disagree on {i}");
        a
    }

    #[test]
    fn colength_examples() {
        assert_eq!(both(&MonomialIdeal::maximal(2)), BigInt::from(1));
        let k = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 3]]).unwrap();
        assert_eq!(both(&k), BigInt::from(4));
        let j = MonomialIdeal::pure_powers(&[2, 3]).unwrap();
        assert_eq!(both(&j), BigInt::from(6));
    }

    #[test]
    fn unit_and_non_primary() {
        assert_eq!(both(&MonomialIdeal::unit(3)), BigInt::zero());
        let not = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1]]).unwrap();
        assert_eq!(
            colength(&not, ColengthMode::Sliced),
            Err(Error::NotMPrimary { axis: 2 })
        );
    }

    #[test]
    fn higher_dimensions_match_box_count() {
        let i = MonomialIdeal::from_exponents(
            4,
            &[
                &[2, 0, 0, 0],
                &[0, 3, 0, 0],
                &[0, 0, 2, 0],
                &[0, 0, 0, 3],
                &[1, 1, 1, 1],
                &[0, 1, 0, 1],
            ],
        )
        .unwrap();
        both(&i);
        assert_eq!(
            both(&MonomialIdeal::pure_powers(&[2, 3, 4, 2]).unwrap()),
            BigInt::from(48)
        );
        assert_eq!(
            both(&MonomialIdeal::maximal(3).power(3).unwrap()),
            BigInt::from(10)
        );
    }
}
