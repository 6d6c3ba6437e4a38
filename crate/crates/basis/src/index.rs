use crate::error::BasisError;

/// Basis family tag. Only the Laguerre family carries a parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyId {
    FourierCircle,
    Hermite,
    LaguerreM { alpha: f64 },
    AssocLaguerre,
    PlaneZ,
    SphericalY,
    JacobiJ,
    HypersphereN,
    ZernikeR,
    ZernikeW,
}

impl FamilyId {
    pub const ALL_TAGS: [&'static str; 10] = [
        "fourier",
        "hermite",
        "laguerre-m",
        "assoc-laguerre",
        "plane-z",
        "sph-y",
        "jacobi-j",
        "hypersphere-n",
        "zernike-r",
        "zernike-w",
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            FamilyId::FourierCircle => "fourier",
            FamilyId::Hermite => "hermite",
            FamilyId::LaguerreM { .. } => "laguerre-m",
            FamilyId::AssocLaguerre => "assoc-laguerre",
            FamilyId::PlaneZ => "plane-z",
            FamilyId::SphericalY => "sph-y",
            FamilyId::JacobiJ => "jacobi-j",
            FamilyId::HypersphereN => "hypersphere-n",
            FamilyId::ZernikeR => "zernike-r",
            FamilyId::ZernikeW => "zernike-w",
        }
    }

    /// Parses a family tag; `alpha` is required for `laguerre-m` only.
    pub fn from_tag(tag: &str, alpha: Option<f64>) -> Result<Self, BasisError> {
        Ok(match tag {
            "fourier" => FamilyId::FourierCircle,
            "hermite" => FamilyId::Hermite,
            "laguerre-m" => {
                let alpha = alpha.unwrap_or(0.0);
                if !(alpha > -1.0) || !alpha.is_finite() {
                    return Err(BasisError::InvalidAlpha(alpha));
                }
                FamilyId::LaguerreM { alpha }
            }
            "assoc-laguerre" => FamilyId::AssocLaguerre,
            "plane-z" => FamilyId::PlaneZ,
            "sph-y" => FamilyId::SphericalY,
            "jacobi-j" => FamilyId::JacobiJ,
            "hypersphere-n" => FamilyId::HypersphereN,
            "zernike-r" => FamilyId::ZernikeR,
            "zernike-w" => FamilyId::ZernikeW,
            other => return Err(BasisError::UnknownFamily(other.to_string())),
        })
    }

    pub fn alpha(&self) -> Option<f64> {
        match self {
            FamilyId::LaguerreM { alpha } => Some(*alpha),
            _ => None,
        }
    }

    /// Quantum-number names in component order.
    pub fn component_names(&self) -> &'static [&'static str] {
        match self {
            FamilyId::FourierCircle => &["m"],
            FamilyId::Hermite | FamilyId::LaguerreM { .. } => &["n"],
            FamilyId::AssocLaguerre | FamilyId::PlaneZ => &["j", "m"],
            FamilyId::SphericalY => &["l", "m"],
            FamilyId::JacobiJ | FamilyId::HypersphereN => &["j", "m", "q"],
            FamilyId::ZernikeR => &["n", "m"],
            FamilyId::ZernikeW => &["u", "v"],
        }
    }

    /// Whether components are stored doubled.
    pub fn doubled(&self) -> bool {
        matches!(
            self,
            FamilyId::AssocLaguerre | FamilyId::PlaneZ | FamilyId::JacobiJ | FamilyId::HypersphereN
        )
    }

    /// Coordinate names of a sample point in natural coordinates.
    pub fn coordinate_names(&self) -> &'static [&'static str] {
        match self {
            FamilyId::FourierCircle => &["phi"],
            FamilyId::Hermite | FamilyId::AssocLaguerre | FamilyId::JacobiJ => &["x"],
            FamilyId::LaguerreM { .. } => &["y"],
            FamilyId::PlaneZ | FamilyId::ZernikeW => &["r", "phi"],
            FamilyId::SphericalY => &["theta", "phi"],
            FamilyId::HypersphereN => &["x", "phi", "chi"],
            FamilyId::ZernikeR => &["r"],
        }
    }

    pub fn arity(&self) -> usize {
        self.component_names().len()
    }

    pub fn dimension(&self) -> usize {
        self.coordinate_names().len()
    }

    /// Checks the index invariants of the family.
    pub fn validate(&self, c: &[i64]) -> Result<(), BasisError> {
        let family = self.tag();
        if c.len() != self.arity() {
            return Err(BasisError::Arity {
                family,
                expected: self.arity(),
                got: c.len(),
            });
        }
        let fail = |constraint| Err(BasisError::InvalidIndex { family, constraint });
        match self {
            FamilyId::FourierCircle => Ok(()),
            FamilyId::Hermite | FamilyId::LaguerreM { .. } => {
                if c[0] < 0 {
                    return fail("n >= 0");
                }
                Ok(())
            }
            FamilyId::AssocLaguerre | FamilyId::PlaneZ => {
                let (j2, m2) = (c[0], c[1]);
                if j2 < 0 {
                    return fail("j >= 0");
                }
                if m2.abs() > j2 {
                    return fail("|m| <= j");
                }
                if (j2 - m2) % 2 != 0 {
                    return fail("j - m integer");
                }
                Ok(())
            }
            FamilyId::SphericalY => {
                let (l, m) = (c[0], c[1]);
                if l < 0 {
                    return fail("l >= 0");
                }
                if m.abs() > l {
                    return fail("|m| <= l");
                }
                Ok(())
            }
            FamilyId::JacobiJ | FamilyId::HypersphereN => {
                let (j2, m2, q2) = (c[0], c[1], c[2]);
                if j2 < 0 {
                    return fail("2j >= 0");
                }
                if m2.abs() > j2 {
                    return fail("j >= |m|");
                }
                if q2.abs() > j2 {
                    return fail("j >= |q|");
                }
                if (j2 - m2) % 2 != 0 {
                    return fail("j - m integer");
                }
                if (j2 - q2) % 2 != 0 {
                    return fail("j - q integer");
                }
                Ok(())
            }
            FamilyId::ZernikeR => {
                let (n, m) = (c[0], c[1]);
                if n < 0 {
                    return fail("n >= 0");
                }
                if m.abs() > n {
                    return fail("|m| <= n");
                }
                if (n - m.abs()) % 2 != 0 {
                    return fail("n - |m| even");
                }
                Ok(())
            }
            FamilyId::ZernikeW => {
                if c[0] < 0 || c[1] < 0 {
                    return fail("u, v >= 0");
                }
                Ok(())
            }
        }
    }
}

/// Family-tagged quantum numbers; half-integers stored doubled.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiIndex {
    family: FamilyId,
    comps: Vec<i64>,
}

impl MultiIndex {
    pub fn new(family: FamilyId, comps: Vec<i64>) -> Result<Self, BasisError> {
        family.validate(&comps)?;
        Ok(Self { family, comps })
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn components(&self) -> &[i64] {
        &self.comps
    }

    /// Component `k` as a real quantum number (undoubled).
    pub fn value(&self, k: usize) -> f64 {
        if self.family.doubled() {
            self.comps[k] as f64 / 2.0
        } else {
            self.comps[k] as f64
        }
    }
}

/// Reads "3/2", "-1/2", "1.5" or "2" and returns twice the value.
pub fn parse_half(s: &str) -> Result<i64, BasisError> {
    let bad = || BasisError::BadHalfInteger(s.to_string());
    let t = s.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        match den.trim() {
            "2" => Ok(num),
            "1" => Ok(2 * num),
            _ => Err(bad()),
        }
    } else if let Ok(v) = t.parse::<i64>() {
        Ok(2 * v)
    } else {
        let v: f64 = t.parse().map_err(|_| bad())?;
        let d = 2.0 * v;
        if !d.is_finite() || d.fract() != 0.0 || d.abs() > 1e15 {
            return Err(bad());
        }
        Ok(d as i64)
    }
}

/// Renders a doubled value as "k" or "k/2".
pub fn format_half(doubled: i64) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{doubled}/2")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_integer_parsing() {
        assert_eq!(parse_half("3/2").unwrap(), 3);
        assert_eq!(parse_half("1.5").unwrap(), 3);
        assert_eq!(parse_half("-1/2").unwrap(), -1);
        assert_eq!(parse_half("2").unwrap(), 4);
        assert_eq!(parse_half("4/2").unwrap(), 4);
        assert!(parse_half("0.3").is_err());
        assert!(parse_half("1/3").is_err());
        assert_eq!(format_half(3), "3/2");
        assert_eq!(format_half(-4), "-2");
    }

    #[test]
    fn validation_names_the_constraint() {
        let e = MultiIndex::new(FamilyId::SphericalY, vec![1, 2]).unwrap_err();
        assert_eq!(e.to_string(), "invalid index for sph-y: |m| <= l violated");
        assert!(MultiIndex::new(FamilyId::PlaneZ, vec![1, 0]).is_err());
        assert!(MultiIndex::new(FamilyId::PlaneZ, vec![1, -1]).is_ok());
        assert!(MultiIndex::new(FamilyId::JacobiJ, vec![3, 1, -2]).is_err());
        assert!(MultiIndex::new(FamilyId::JacobiJ, vec![3, 1, -3]).is_ok());
        assert!(MultiIndex::new(FamilyId::ZernikeR, vec![3, 0]).is_err());
        assert!(MultiIndex::new(FamilyId::ZernikeW, vec![0, 7]).is_ok());
    }

    #[test]
    fn tags_round_trip() {
        for tag in FamilyId::ALL_TAGS {
            assert_eq!(FamilyId::from_tag(tag, Some(1.0)).unwrap().tag(), tag);
        }
        assert!(FamilyId::from_tag("laguerre-m", Some(-1.0)).is_err());
        assert!(FamilyId::from_tag("bessel", None).is_err());
    }
}
