use std::collections::BTreeMap;

use num_complex::Complex64;
use sgsf_basis::FamilyId;
use sgsf_quadrature::CompensatedSum;

use crate::error::AlgebraError;
use crate::window::Window;

/// Complex coefficients over a window of one family. Exact zeros are not
/// stored, so the zero vector is the empty map.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVec {
    family: FamilyId,
    window: Window,
    amps: BTreeMap<Vec<i64>, Complex64>,
}

impl CoeffVec {
    pub fn zero(family: FamilyId, window: Window) -> Result<Self, AlgebraError> {
        window.check_arity(family)?;
        Ok(Self {
            family,
            window,
            amps: BTreeMap::new(),
        })
    }

    pub fn basis(family: FamilyId, window: Window, idx: &[i64]) -> Result<Self, AlgebraError> {
        let mut v = Self::zero(family, window)?;
        v.add(idx, Complex64::new(1.0, 0.0))?;
        Ok(v)
    }

    pub fn from_entries<I>(family: FamilyId, window: Window, entries: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Vec<i64>, Complex64)>,
    {
        let mut v = Self::zero(family, window)?;
        for (idx, a) in entries {
            v.add(&idx, a)?;
        }
        Ok(v)
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    fn check(&self, idx: &[i64]) -> Result<(), AlgebraError> {
        self.family.validate(idx)?;
        if !self.window.contains_bounds(idx) {
            return Err(AlgebraError::OutsideWindow(idx.to_vec()));
        }
        Ok(())
    }

    pub fn get(&self, idx: &[i64]) -> Complex64 {
        self.amps.get(idx).copied().unwrap_or_default()
    }

    pub fn set(&mut self, idx: &[i64], a: Complex64) -> Result<(), AlgebraError> {
        self.check(idx)?;
        if a == Complex64::default() {
            self.amps.remove(idx);
        } else {
            self.amps.insert(idx.to_vec(), a);
        }
        Ok(())
    }

    pub fn add(&mut self, idx: &[i64], a: Complex64) -> Result<(), AlgebraError> {
        let cur = self.get(idx);
        self.set(idx, cur + a)
    }

    /// Enlarges the window so that `idx` fits, then adds.
    pub(crate) fn add_growing(&mut self, idx: &[i64], a: Complex64) -> Result<(), AlgebraError> {
        if !self.window.contains_bounds(idx) {
            self.window = self.window.grown_to(idx);
        }
        self.add(idx, a)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[i64], Complex64)> + '_ {
        self.amps.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    /// Number of stored non-zero amplitudes.
    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    /// Plain l2 norm of the amplitudes.
    pub fn norm(&self) -> f64 {
        self.amps
            .values()
            .map(|a| a.norm_sqr())
            .collect::<CompensatedSum>()
            .value()
            .sqrt()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.amps.values().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// `sup_i |self_i - other_i|` over the union of supports.
    pub fn max_abs_diff(&self, other: &CoeffVec) -> f64 {
        let a = self.amps.iter().map(|(k, v)| (*v - other.get(k)).norm());
        let b = other
            .amps
            .iter()
            .filter(|(k, _)| !self.amps.contains_key(*k))
            .map(|(_, v)| v.norm());
        a.chain(b).fold(0.0, f64::max)
    }

    pub fn scaled(&self, c: Complex64) -> CoeffVec {
        let mut out = self.clone();
        out.amps = self
            .amps
            .iter()
            .map(|(k, v)| (k.clone(), *v * c))
            .filter(|(_, v)| *v != Complex64::default())
            .collect();
        out
    }

    /// `self + c * other` on the union of both windows.
    pub fn axpy(&self, c: Complex64, other: &CoeffVec) -> Result<CoeffVec, AlgebraError> {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_growing(k, c * v)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_are_dropped() {
        let w = Window::standard(FamilyId::Hermite, 3);
        let mut v = CoeffVec::basis(FamilyId::Hermite, w, &[2]).unwrap();
        assert_eq!(v.len(), 1);
        v.add(&[2], Complex64::new(-1.0, 0.0)).unwrap();
        assert!(v.is_zero());
        assert!(matches!(v.add(&[4], Complex64::new(1.0, 0.0)), Err(AlgebraError::OutsideWindow(_))));
        assert!(v.add(&[-1], Complex64::new(1.0, 0.0)).is_err());
    }
}
