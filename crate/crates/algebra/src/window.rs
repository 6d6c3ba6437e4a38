use sgsf_basis::FamilyId;

use crate::error::AlgebraError;

/// Inclusive per-component bounds on stored (possibly doubled) components,
/// with an optional cap on the component sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    lo: Vec<i64>,
    hi: Vec<i64>,
    sum_cap: Option<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len(), "bound vectors differ in length");
        Self { lo, hi, sum_cap: None }
    }

    pub fn with_sum_cap(mut self, cap: i64) -> Self {
        self.sum_cap = Some(cap);
        self
    }

    /// Natural window of a family up to `max` in stored units: `|m| <= max`
    /// for circle harmonics, `n <= max` for Hermite and Laguerre, the leading
    /// quantum number `<= max` with all admissible partners otherwise, and
    /// `u + v <= max` for W-Zernike.
    pub fn standard(family: FamilyId, max: i64) -> Self {
        match family {
            FamilyId::FourierCircle => Self::new(vec![-max], vec![max]),
            FamilyId::Hermite | FamilyId::LaguerreM { .. } => Self::new(vec![0], vec![max]),
            FamilyId::AssocLaguerre
            | FamilyId::PlaneZ
            | FamilyId::SphericalY
            | FamilyId::ZernikeR => Self::new(vec![0, -max], vec![max, max]),
            FamilyId::JacobiJ | FamilyId::HypersphereN => {
                Self::new(vec![0, -max, -max], vec![max, max, max])
            }
            FamilyId::ZernikeW => Self::new(vec![0, 0], vec![max, max]).with_sum_cap(max),
        }
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn sum_cap(&self) -> Option<i64> {
        self.sum_cap
    }

    pub fn arity(&self) -> usize {
        self.lo.len()
    }

    pub fn check_arity(&self, family: FamilyId) -> Result<(), AlgebraError> {
        if self.arity() == family.arity() {
            Ok(())
        } else {
            Err(AlgebraError::WindowArity {
                window: self.arity(),
                family: family.arity(),
            })
        }
    }

    /// Bounds and sum cap only; family validity is checked separately.
    pub fn contains_bounds(&self, idx: &[i64]) -> bool {
        idx.len() == self.lo.len()
            && idx
                .iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
            && self.sum_cap.map_or(true, |c| idx.iter().sum::<i64>() <= c)
    }

    pub fn contains(&self, family: FamilyId, idx: &[i64]) -> bool {
        self.contains_bounds(idx) && family.validate(idx).is_ok()
    }

    /// Valid indices of `family` inside the window, lexicographic.
    pub fn indices(&self, family: FamilyId) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        if self.arity() != family.arity() || self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return out;
        }
        let mut cur = self.lo.clone();
        loop {
            if self.contains(family, &cur) {
                out.push(cur.clone());
            }
            let mut k = cur.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < self.hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = self.lo[k];
            }
        }
    }

    /// Smallest enlargement containing `idx`. A sum cap grows with it.
    pub fn grown_to(&self, idx: &[i64]) -> Window {
        let lo = self.lo.iter().zip(idx).map(|(a, b)| *a.min(b)).collect();
        let hi = self.hi.iter().zip(idx).map(|(a, b)| *a.max(b)).collect();
        Window {
            lo,
            hi,
            sum_cap: self.sum_cap.map(|c| c.max(idx.iter().sum())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_windows_enumerate_valid_indices() {
        assert_eq!(Window::standard(FamilyId::Hermite, 4).indices(FamilyId::Hermite).len(), 5);
        // sum over 2j = 0..=4 of (2j + 1)
        assert_eq!(Window::standard(FamilyId::AssocLaguerre, 4).indices(FamilyId::AssocLaguerre).len(), 15);
        assert_eq!(Window::standard(FamilyId::ZernikeW, 3).indices(FamilyId::ZernikeW).len(), 10);
        let j = Window::standard(FamilyId::JacobiJ, 2).indices(FamilyId::JacobiJ);
        assert_eq!(j.len(), 1 + 4 + 9);
    }

    #[test]
    fn growth_covers_new_index() {
        let w = Window::standard(FamilyId::ZernikeW, 2).grown_to(&[3, 0]);
        assert!(w.contains(FamilyId::ZernikeW, &[3, 0]));
        assert_eq!(w.sum_cap(), Some(3));
    }
}
