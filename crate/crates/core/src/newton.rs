//! Newton polyhedra, integral closure and reductions of monomial ideals.
//!
//! A monomial `x^p` lies in the integral closure of `I` exactly when `p`
//! lies in `conv(gens) + R^d_{>=0}`. Membership of a rational point is an LP
//! feasibility question: find `λ >= 0` with `Σ λ_j = 1` and `Σ λ_j v_j <= q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::format::gens_to_json;
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::simplex::is_feasible;

/// A point of `Q^d_{>=0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint(Vec<BigRational>);

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.iter().any(|c| c.is_negative()) {
            return Err(Error::Parse(
                "rational point coordinates must be nonnegative".into(),
            ));
        }
        Ok(Self(coords))
    }

    pub fn from_lattice(p: &ExponentVector) -> Self {
        Self(
            p.coords()
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `(num/den) · p`.
    pub fn scaled(p: &ExponentVector, num: u64, den: u64) -> Self {
        assert!(den > 0);
        Self(
            p.coords()
                .iter()
                .map(|&c| BigRational::new(BigInt::from(c) * num, den.into()))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dim: usize,
    points: Vec<ExponentVector>,
}

impl NewtonPolyhedron {
    pub fn of(ideal: &MonomialIdeal) -> Self {
        Self {
            dim: ideal.dim(),
            points: ideal.gens().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn contains(&self, q: &RationalPoint) -> Result<bool> {
        np_contains(self, q)
    }

    pub fn contains_lattice(&self, p: &ExponentVector) -> Result<bool> {
        np_contains(self, &RationalPoint::from_lattice(p))
    }
}

pub fn np_contains(np: &NewtonPolyhedron, q: &RationalPoint) -> Result<bool> {
    if q.dim() != np.dim {
        return Err(Error::DimensionMismatch {
            expected: np.dim,
            found: q.dim(),
        });
    }
    let as_rational = |c: u32| BigRational::from_integer(c.into());
    // A generator below q settles it; a coordinate below every generator rules it out.
    if np.points.iter().any(|v| {
        v.coords()
            .iter()
            .zip(q.coords())
            .all(|(&a, b)| as_rational(a) <= *b)
    }) {
        return Ok(true);
    }
    for (i, qi) in q.coords().iter().enumerate() {
        let lowest = np.points.iter().map(|v| v.coords()[i]).min().unwrap_or(0);
        if *qi < as_rational(lowest) {
            return Ok(false);
        }
    }

    // Columns: λ_1..λ_m, then one slack per coordinate.
    let m = np.points.len();
    let d = np.dim;
    let mut a = Vec::with_capacity(d + 1);
    let mut b = Vec::with_capacity(d + 1);
    for (i, qi) in q.coords().iter().enumerate() {
        let mut row: Vec<BigRational> = np.points.iter().map(|v| as_rational(v.coords()[i])).collect();
        row.extend((0..d).map(|k| as_rational(u32::from(k == i))));
        a.push(row);
        b.push(qi.clone());
    }
    let mut convexity = vec![as_rational(1); m];
    convexity.extend((0..d).map(|_| BigRational::zero()));
    a.push(convexity);
    b.push(as_rational(1));
    Ok(is_feasible(&a, &b))
}

fn visit_box(bounds: &[u32], mut f: impl FnMut(&[u32]) -> Result<()>) -> Result<()> {
    let mut point = vec![0u32; bounds.len()];
    'outer: loop {
        f(&point)?;
        for (c, &bound) in point.iter_mut().zip(bounds) {
            if *c < bound {
                *c += 1;
                continue 'outer;
            }
            *c = 0;
        }
        return Ok(());
    }
}

/// The integral closure: lattice points of the Newton polyhedron inside the
/// closed pure-power box, reduced to minimal generators.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let bounds = ideal.pure_power_bounds()?;
    if ideal.is_unit() {
        return Ok(ideal.clone());
    }
    let np = NewtonPolyhedron::of(ideal);
    let mut members = Vec::new();
    visit_box(&bounds, |p| {
        let p = ExponentVector::new(p.to_vec());
        // Points above a member found so far are not minimal; skip the LP.
        if members.iter().any(|g: &ExponentVector| g.divides(&p)) {
            return Ok(());
        }
        if np.contains_lattice(&p)? {
            members.push(p);
        }
        Ok(())
    })?;
    MonomialIdeal::normalize(ideal.dim(), members)
}

/// Closure report: the closure and the generators it adds to the input.
pub fn closure_report(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, Value)> {
    let closure = integral_closure(ideal)?;
    let added: Vec<ExponentVector> = closure
        .gens()
        .iter()
        .filter(|g| !ideal.gens().contains(g))
        .cloned()
        .collect();
    let report = json!({
        "closure_gens": gens_to_json(closure.gens()),
        "added": gens_to_json(&added),
    });
    Ok((closure, report))
}

/// Default power bound for [`closure_membership_oracle`]: `d! · (max coord)^d`, at most 64.
pub fn default_oracle_bound(ideal: &MonomialIdeal) -> u32 {
    let d = ideal.dim() as u32;
    let top = ideal
        .gens()
        .iter()
        .flat_map(|g| g.coords().iter().copied())
        .max()
        .unwrap_or(1)
        .max(1) as u64;
    let fact: u64 = (1..=u64::from(d)).product();
    let bound = top
        .checked_pow(d)
        .and_then(|p| p.checked_mul(fact))
        .unwrap_or(u64::MAX);
    bound.min(64) as u32
}

/// One-sided test `x^{kp} ∈ I^k` for some `k <= kmax`.
pub fn closure_membership_oracle(ideal: &MonomialIdeal, p: &ExponentVector, kmax: u32) -> Result<bool> {
    if p.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.dim(),
            found: p.dim(),
        });
    }
    let mut power = MonomialIdeal::unit(ideal.dim());
    for k in 1..=kmax {
        power = power.product(ideal)?;
        if power.contains_monomial(&p.checked_scale(k)?)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `j` is a reduction of `i` (`j ⊆ i` required).
pub fn is_reduction(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<bool> {
    if !i.contains_ideal(j)? {
        return Err(Error::NotContained(format!("({j}) is not contained in ({i})")));
    }
    j.require_m_primary()?;
    i.require_m_primary()?;
    let np = NewtonPolyhedron::of(j);
    for g in i.gens() {
        if !np.contains_lattice(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `closure(I^r) == closure(J^s)`, i.e. `r · NP(I) = s · NP(J)`.
pub fn scaled_closure_equal(i: &MonomialIdeal, r: u64, j: &MonomialIdeal, s: u64) -> Result<bool> {
    if i.dim() != j.dim() {
        return Err(Error::DimensionMismatch {
            expected: i.dim(),
            found: j.dim(),
        });
    }
    if r == 0 || s == 0 {
        return Err(Error::Parse("scale factors must be positive".into()));
    }
    i.require_m_primary()?;
    j.require_m_primary()?;
    let np_i = NewtonPolyhedron::of(i);
    let np_j = NewtonPolyhedron::of(j);
    for v in i.gens() {
        if !np_j.contains(&RationalPoint::scaled(v, r, s))? {
            return Ok(false);
        }
    }
    for w in j.gens() {
        if !np_i.contains(&RationalPoint::scaled(w, s, r))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Vertices of the bounded boundary of `NP(I)` in the plane, from the
/// `y`-axis to the `x`-axis.
pub fn lower_hull_2d(ideal: &MonomialIdeal) -> Result<Vec<(u32, u32)>> {
    if ideal.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ideal.dim(),
        });
    }
    ideal.require_m_primary()?;
    // Minimal generators sorted by x have strictly decreasing y.
    let mut pts: Vec<(i64, i64)> = ideal
        .gens()
        .iter()
        .map(|g| (i64::from(g.coords()[0]), i64::from(g.coords()[1])))
        .collect();
    pts.sort_unstable();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    Ok(hull.into_iter().map(|(x, y)| (x as u32, y as u32)).collect())
}

/// Area of `R^2_{>=0} \ NP(I)`.
pub fn covolume_2d(ideal: &MonomialIdeal) -> Result<BigRational> {
    let hull = lower_hull_2d(ideal)?;
    // Polygon (0,0) -> (c_x,0) -> ... -> (0,c_y), traversed counterclockwise.
    let mut poly: Vec<(BigInt, BigInt)> = vec![(BigInt::zero(), BigInt::zero())];
    poly.extend(
        hull.iter()
            .rev()
            .map(|&(x, y)| (BigInt::from(x), BigInt::from(y))),
    );
    let mut twice_area = BigInt::zero();
    for k in 0..poly.len() {
        let (x0, y0) = &poly[k];
        let (x1, y1) = &poly[(k + 1) % poly.len()];
        twice_area += x0 * y1 - x1 * y0;
    }
    Ok(BigRational::new(twice_area, BigInt::from(2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(gens[0].len(), gens).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn point(c: &[(i64, i64)]) -> RationalPoint {
        RationalPoint::new(c.iter().map(|&(n, d)| q(n, d)).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let np = NewtonPolyhedron::of(&ideal(&[&[2, 0], &[0, 2]]));
        assert!(np.contains(&point(&[(1, 1), (1, 1)])).unwrap());
        assert!(!np.contains(&point(&[(1, 1), (0, 1)])).unwrap());
        let np = NewtonPolyhedron::of(&ideal(&[&[2, 0], &[0, 3]]));
        assert!(!np.contains(&point(&[(1, 1), (1, 1)])).unwrap());
        assert!(np.contains(&point(&[(1, 1), (3, 2)])).unwrap());
        assert!(np.contains(&point(&[(1, 1), (1, 1), (0, 1)])).is_err());
    }

    #[test]
    fn membership_needs_three_generators() {
        // (1,1,1) is the barycentre of the three pure cubes... scaled: x^3, y^3, z^3 give 1+1+1 = 3.
        let np = NewtonPolyhedron::of(&ideal(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]));
        assert!(np.contains_lattice(&[1, 1, 1].into()).unwrap());
        assert!(!np.contains_lattice(&[1, 1, 0].into()).unwrap());
        assert!(np.contains(&point(&[(1, 2), (5, 2), (0, 1)])).unwrap());
    }

    #[test]
    fn closure_examples() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(integral_closure(&m).unwrap(), m);
        assert_eq!(
            integral_closure(&ideal(&[&[2, 0], &[0, 2]])).unwrap(),
            m.power(2).unwrap()
        );
        assert_eq!(
            integral_closure(&ideal(&[&[3, 0], &[0, 3]])).unwrap(),
            m.power(3).unwrap()
        );
        let (_, report) = closure_report(&ideal(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(report["added"], serde_json::json!([[1, 1]]));
    }

    #[test]
    fn oracle_examples() {
        let i = ideal(&[&[2, 0], &[0, 2]]);
        assert!(closure_membership_oracle(&i, &[1, 1].into(), 2).unwrap());
        assert!(!closure_membership_oracle(&i, &[1, 1].into(), 1).unwrap());
        let j = ideal(&[&[2, 0], &[0, 3]]);
        assert!(!closure_membership_oracle(&j, &[1, 1].into(), 6).unwrap());
        assert!(closure_membership_oracle(&MonomialIdeal::maximal(2), &[1, 0].into(), 1).unwrap());
        assert_eq!(default_oracle_bound(&j), 18);
        assert_eq!(
            default_oracle_bound(&MonomialIdeal::pure_powers(&[5, 5, 5]).unwrap()),
            64
        );
    }

    #[test]
    fn reduction_examples() {
        let m = MonomialIdeal::maximal(2);
        assert!(is_reduction(&ideal(&[&[2, 0], &[0, 2]]), &m.power(2).unwrap()).unwrap());
        assert!(is_reduction(&ideal(&[&[3, 0], &[0, 3]]), &m.power(3).unwrap()).unwrap());
        let k = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
        assert!(!is_reduction(&ideal(&[&[2, 0], &[0, 3]]), &k).unwrap());
        assert!(matches!(
            is_reduction(&m, &ideal(&[&[2, 0], &[0, 2]])),
            Err(Error::NotContained(_))
        ));
    }

    #[test]
    fn scaled_closure_examples() {
        let m = MonomialIdeal::maximal(2);
        assert!(scaled_closure_equal(&m, 2, &m.power(2).unwrap(), 1).unwrap());
        assert!(!scaled_closure_equal(&m, 1, &ideal(&[&[2, 0], &[0, 3]]), 1).unwrap());
        assert!(
            scaled_closure_equal(&ideal(&[&[2, 0], &[0, 2]]), 3, &ideal(&[&[3, 0], &[0, 3]]), 2).unwrap()
        );
        assert!(
            !scaled_closure_equal(&ideal(&[&[2, 0], &[0, 2]]), 2, &ideal(&[&[3, 0], &[0, 3]]), 3).unwrap()
        );
    }

    #[test]
    fn covolume_examples() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(covolume_2d(&m).unwrap(), q(1, 2));
        let j = ideal(&[&[2, 0], &[0, 3]]);
        assert_eq!(covolume_2d(&j).unwrap(), q(3, 1));
        assert_eq!(covolume_2d(&m.product(&j).unwrap()).unwrap(), q(11, 2));
        assert_eq!(
            covolume_2d(&ideal(&[&[2, 0], &[1, 1], &[0, 3]])).unwrap(),
            q(5, 2)
        );
        assert!(matches!(
            covolume_2d(&MonomialIdeal::maximal(3)),
            Err(Error::WrongDimension { .. })
        ));
    }
}
