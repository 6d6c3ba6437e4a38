use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use sgsf_basis::FamilyId;

use crate::coeff::CoeffVec;
use crate::differential::Realization;
use crate::error::AlgebraError;

/// Real amplitude of a term as a function of the stored source components.
pub type Amplitude = Arc<dyn Fn(&[i64]) -> f64 + Send + Sync>;

/// One index-shift rule: `e_i -> coeff * amplitude(i) * e_{i + shift}`.
#[derive(Clone)]
pub struct Term {
    pub shift: Vec<i64>,
    pub coeff: Complex64,
    pub amplitude: Amplitude,
}

/// Eigenvalue `scale * c[component] + offset` of a diagonal generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Linear {
    pub component: usize,
    pub scale: f64,
    pub offset: f64,
}

/// How `apply` treats targets that leave the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Grow,
}

#[derive(Clone)]
pub struct GeneratorSpec {
    name: String,
    family: FamilyId,
    terms: Vec<Term>,
    cartan: Option<Linear>,
    realization: Option<Realization>,
    note: Option<&'static str>,
}

impl fmt::Debug for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorSpec")
            .field("name", &self.name)
            .field("family", &self.family.tag())
            .field("shifts", &self.terms.iter().map(|t| &t.shift).collect::<Vec<_>>())
            .field("cartan", &self.cartan)
            .field("note", &self.note)
            .finish()
    }
}

impl GeneratorSpec {
    pub fn new(name: impl Into<String>, family: FamilyId) -> Self {
        Self {
            name: name.into(),
            family,
            terms: Vec::new(),
            cartan: None,
            realization: None,
            note: None,
        }
    }

    pub fn term<F>(self, shift: Vec<i64>, amplitude: F) -> Self
    where
        F: Fn(&[i64]) -> f64 + Send + Sync + 'static,
    {
        self.complex_term(shift, Complex64::new(1.0, 0.0), amplitude)
    }

    pub fn complex_term<F>(mut self, shift: Vec<i64>, coeff: Complex64, amplitude: F) -> Self
    where
        F: Fn(&[i64]) -> f64 + Send + Sync + 'static,
    {
        assert_eq!(shift.len(), self.family.arity(), "shift arity");
        self.terms.push(Term {
            shift,
            coeff,
            amplitude: Arc::new(amplitude),
        });
        self
    }

    /// Diagonal generator with eigenvalue `scale * c[component] + offset`.
    pub fn linear_diagonal(name: impl Into<String>, family: FamilyId, lin: Linear) -> Self {
        let mut g = Self::new(name, family).term(vec![0; family.arity()], move |c| {
            lin.scale * c[lin.component] as f64 + lin.offset
        });
        g.cartan = Some(lin);
        g
    }

    pub fn with_realization(mut self, r: Realization) -> Self {
        self.realization = Some(r);
        self
    }

    pub fn with_note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn cartan(&self) -> Option<Linear> {
        self.cartan
    }

    pub fn realization(&self) -> Option<Realization> {
        self.realization
    }

    /// Metadata flag, set where a table entry departs from a printed formula.
    pub fn note(&self) -> Option<&'static str> {
        self.note
    }

    pub fn is_diagonal(&self) -> bool {
        self.terms.iter().all(|t| t.shift.iter().all(|s| *s == 0))
    }

    /// Non-zero targets of `e_idx`. Exact-zero amplitudes annihilate; a
    /// non-zero amplitude onto an invalid index is a table error.
    pub fn image(&self, idx: &[i64]) -> Result<Vec<(Vec<i64>, Complex64)>, AlgebraError> {
        let mut out: Vec<(Vec<i64>, Complex64)> = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let a = (t.amplitude)(idx);
            if !a.is_finite() {
                return Err(AlgebraError::NonFiniteAmplitude {
                    generator: self.name.clone(),
                    at: idx.to_vec(),
                });
            }
            if a == 0.0 {
                continue;
            }
            let target: Vec<i64> = idx.iter().zip(&t.shift).map(|(i, s)| i + s).collect();
            if self.family.validate(&target).is_err() {
                return Err(AlgebraError::InvalidTarget {
                    generator: self.name.clone(),
                    at: idx.to_vec(),
                    target,
                });
            }
            match out.iter_mut().find(|(k, _)| *k == target) {
                Some(entry) => entry.1 += t.coeff * a,
                None => out.push((target, t.coeff * a)),
            }
        }
        Ok(out)
    }

    /// `<e_target, g e_source>`.
    pub fn matrix_element(&self, target: &[i64], source: &[i64]) -> Result<Complex64, AlgebraError> {
        Ok(self
            .image(source)?
            .into_iter()
            .filter(|(k, _)| k.as_slice() == target)
            .map(|(_, v)| v)
            .sum())
    }

    pub fn apply(&self, v: &CoeffVec, mode: Mode) -> Result<CoeffVec, AlgebraError> {
        if v.family() != self.family {
            return Err(AlgebraError::FamilyMismatch {
                generator: self.name.clone(),
                expected: self.family.tag(),
                got: v.family().tag(),
            });
        }
        let mut out = CoeffVec::zero(v.family(), v.window().clone())?;
        for (idx, a) in v.iter() {
            for (target, c) in self.image(idx)? {
                match mode {
                    Mode::Strict => {
                        if !out.window().contains_bounds(&target) {
                            return Err(AlgebraError::WindowOverflow {
                                generator: self.name.clone(),
                                at: idx.to_vec(),
                                target,
                            });
                        }
                        out.add(&target, a * c)?;
                    }
                    Mode::Grow => out.add_growing(&target, a * c)?,
                }
            }
        }
        Ok(out)
    }
}

/// Linear combination of generator products. A product `[A, B]` acts as
/// `A (B v)`; the empty product is the identity.
#[derive(Debug, Clone, Default)]
pub struct OpExpr {
    terms: Vec<(Complex64, Vec<GeneratorSpec>)>,
}

impl OpExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity(c: f64) -> Self {
        Self {
            terms: vec![(Complex64::new(c, 0.0), Vec::new())],
        }
    }

    pub fn gen(g: &GeneratorSpec) -> Self {
        Self::product(&[g])
    }

    pub fn product(gs: &[&GeneratorSpec]) -> Self {
        Self {
            terms: vec![(Complex64::new(1.0, 0.0), gs.iter().map(|g| (*g).clone()).collect())],
        }
    }

    pub fn scaled(mut self, c: Complex64) -> Self {
        for t in &mut self.terms {
            t.0 *= c;
        }
        self
    }

    pub fn times(self, c: f64) -> Self {
        self.scaled(Complex64::new(c, 0.0))
    }

    pub fn plus(mut self, other: OpExpr) -> Self {
        self.terms.extend(other.terms);
        self
    }

    pub fn minus(self, other: OpExpr) -> Self {
        self.plus(other.times(-1.0))
    }

    pub fn commutator(a: &GeneratorSpec, b: &GeneratorSpec) -> Self {
        Self::product(&[a, b]).minus(Self::product(&[b, a]))
    }

    pub fn anticommutator(a: &GeneratorSpec, b: &GeneratorSpec) -> Self {
        Self::product(&[a, b]).plus(Self::product(&[b, a]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn apply(&self, v: &CoeffVec, mode: Mode) -> Result<CoeffVec, AlgebraError> {
        let mut out = CoeffVec::zero(v.family(), v.window().clone())?;
        for (c, gens) in &self.terms {
            let mut w = v.clone();
            for g in gens.iter().rev() {
                w = g.apply(&w, mode)?;
            }
            out = out.axpy(*c, &w)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::window::Window;

    fn lowering() -> GeneratorSpec {
        GeneratorSpec::new("a", FamilyId::Hermite).term(vec![-1], |c| (c[0] as f64).sqrt())
    }

    #[test]
    fn vacuum_is_annihilated_and_overflow_is_reported() {
        let w = Window::standard(FamilyId::Hermite, 3);
        let e0 = CoeffVec::basis(FamilyId::Hermite, w.clone(), &[0]).unwrap();
        assert!(lowering().apply(&e0, Mode::Strict).unwrap().is_zero());
        let raise = GeneratorSpec::new("a+", FamilyId::Hermite).term(vec![1], |c| (c[0] as f64 + 1.0).sqrt());
        let e3 = CoeffVec::basis(FamilyId::Hermite, w, &[3]).unwrap();
        assert!(matches!(raise.apply(&e3, Mode::Strict), Err(AlgebraError::WindowOverflow { .. })));
        let grown = raise.apply(&e3, Mode::Grow).unwrap();
        assert!((grown.get(&[4]).re - 2.0).abs() < 1e-15);
    }

    #[test]
    fn nonzero_amplitude_onto_invalid_index_is_an_error() {
        let bad = GeneratorSpec::new("bad", FamilyId::Hermite).term(vec![-1], |_| 1.0);
        let w = Window::standard(FamilyId::Hermite, 3);
        let e0 = CoeffVec::basis(FamilyId::Hermite, w, &[0]).unwrap();
        assert!(matches!(bad.apply(&e0, Mode::Strict), Err(AlgebraError::InvalidTarget { .. })));
    }
}
