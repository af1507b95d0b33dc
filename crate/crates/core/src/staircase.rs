use std::collections::BTreeMap;

/// Minimal corners of a monomial ideal in two variables, keyed by x.
///
/// Stored values strictly decrease as the key increases.
#[derive(Debug, Default, Clone)]
pub(crate) struct Staircase2 {
    corners: BTreeMap<u32, u32>,
}

impl Staircase2 {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn dominates(&self, x: u32, y: u32) -> bool {
        self.corners
            .range(..=x)
            .next_back()
            .is_some_and(|(_, &cy)| cy <= y)
    }

    /// Inserts `(x, y)` and drops the corners it dominates. No-op if already covered.
    pub(crate) fn insert(&mut self, x: u32, y: u32) -> bool {
        if self.dominates(x, y) {
            return false;
        }
        let doomed: Vec<u32> = self
            .corners
            .range(x..)
            .take_while(|(_, &cy)| cy >= y)
            .map(|(&cx, _)| cx)
            .collect();
        for cx in doomed {
            self.corners.remove(&cx);
        }
        self.corners.insert(x, y);
        true
    }

    /// Number of lattice points not covered, or `None` when that region is unbounded.
    pub(crate) fn area(&self) -> Option<u128> {
        let first = self.corners.iter().next()?;
        let last = self.corners.iter().next_back()?;
        if *first.0 != 0 || *last.1 != 0 {
            return None;
        }
        let mut total: u128 = 0;
        let mut iter = self.corners.iter().peekable();
        while let Some((&x, &y)) = iter.next() {
            if let Some((&nx, _)) = iter.peek() {
                total += u128::from(nx - x) * u128::from(y);
            }
        }
        Some(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn area_of_rectangle_and_staircase() {
        let mut s = Staircase2::new();
        s.insert(2, 0);
        assert_eq!(s.area(), None);
        s.insert(0, 3);
        assert_eq!(s.area(), Some(6));
        s.insert(1, 1);
        assert_eq!(s.area(), Some(4));
        assert!(s.dominates(1, 2));
        assert!(!s.dominates(0, 2));
        // (0,1) kills (0,3) and (1,1)
        assert!(s.insert(0, 1));
        assert_eq!(s.area(), Some(2));
        assert!(!s.insert(5, 5));
    }
}
