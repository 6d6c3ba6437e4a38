//! Tensor-product quadrature plans in the natural coordinates of each family.

use sgsf_algebra::Window;
use sgsf_basis::FamilyId;
use sgsf_quadrature::{build_rule, QuadRule, RuleKind};
use std::f64::consts::PI;

use crate::error::TransformError;

/// Change of variable between a rule axis and the family coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    Identity,
    /// rule variable `x = r^2`; `r dr = dx / 2`
    RadiusSquared,
    /// rule variable `x = cos(theta)`
    CosTheta,
    /// rule variable `t` with `x = cos(t)`, `dx = sin(t) dt`
    ArcCosine,
    /// angle shifted by `-pi` onto `[-pi, pi)`
    CenteredAngle,
}

impl Substitution {
    pub fn tag(&self) -> &'static str {
        match self {
            Substitution::Identity => "identity",
            Substitution::RadiusSquared => "x=r^2",
            Substitution::CosTheta => "x=cos(theta)",
            Substitution::ArcCosine => "x=cos(t)",
            Substitution::CenteredAngle => "phi-pi",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Axis {
    pub coordinate: &'static str,
    pub rule: QuadRule,
    /// rule mapped onto `[lo, hi]`, Legendre only
    pub interval: Option<(f64, f64)>,
    pub substitution: Substitution,
}

/// Per-axis rules, substitutions, and the flattened tensor product: natural
/// coordinates of every node with a weight carrying measure and Jacobian.
#[derive(Debug, Clone)]
pub struct QuadPlan {
    family: FamilyId,
    axes: Vec<Axis>,
    points: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

fn axis(
    coordinate: &'static str,
    kind: RuleKind,
    order: usize,
    interval: Option<(f64, f64)>,
    substitution: Substitution,
) -> Result<Axis, TransformError> {
    Ok(Axis {
        coordinate,
        rule: build_rule(kind, order, None)?,
        interval,
        substitution,
    })
}

impl Axis {
    /// Nodes in the rule variable and weights against Lebesgue measure there.
    fn nodes_weights(&self) -> (Vec<f64>, Vec<f64>) {
        match self.interval {
            Some((a, b)) => self.rule.affine(a, b),
            None => (self.rule.nodes().to_vec(), self.rule.measure_weights()),
        }
    }
}

impl QuadPlan {
    /// Plan with explicit axis orders, one per axis of the family domain:
    /// `fourier [phi]`, `hermite [x]`, `laguerre-m [y]`, `assoc-laguerre [x]`,
    /// `plane-z [x=r^2, phi]`, `sph-y [x=cos(theta), phi]`, `jacobi-j [x]`,
    /// `hypersphere-n [t, phi, chi]`, `zernike-r [x=r^2]`,
    /// `zernike-w [x=r^2, phi]`.
    pub fn new(family: FamilyId, orders: &[usize]) -> Result<Self, TransformError> {
        let dim = family.dimension();
        if orders.len() != dim {
            return Err(TransformError::PlanOrders {
                family: family.tag(),
                expected: dim,
                got: orders.len(),
            });
        }
        use RuleKind::*;
        use Substitution::*;
        let o = orders;
        let axes = match family {
            FamilyId::FourierCircle => vec![axis("phi", Periodic, o[0], None, Identity)?],
            FamilyId::Hermite => vec![axis("x", Hermite, o[0], None, Identity)?],
            FamilyId::LaguerreM { alpha } => vec![axis("y", Laguerre { alpha }, o[0], None, Identity)?],
            FamilyId::AssocLaguerre => vec![axis("x", Laguerre { alpha: 0.0 }, o[0], None, Identity)?],
            FamilyId::PlaneZ => vec![
                axis("r", Laguerre { alpha: 0.0 }, o[0], None, RadiusSquared)?,
                axis("phi", Periodic, o[1], None, CenteredAngle)?,
            ],
            FamilyId::SphericalY => vec![
                axis("theta", Legendre, o[0], None, CosTheta)?,
                axis("phi", Periodic, o[1], None, Identity)?,
            ],
            FamilyId::JacobiJ => vec![axis("x", Legendre, o[0], None, Identity)?],
            FamilyId::HypersphereN => vec![
                axis("x", Legendre, o[0], Some((0.0, PI)), ArcCosine)?,
                axis("phi", Periodic, o[1], None, Identity)?,
                axis("chi", Legendre, o[2], Some((0.0, PI)), Identity)?,
            ],
            FamilyId::ZernikeR => vec![axis("r", Legendre, o[0], Some((0.0, 1.0)), RadiusSquared)?],
            FamilyId::ZernikeW => vec![
                axis("r", Legendre, o[0], Some((0.0, 1.0)), RadiusSquared)?,
                axis("phi", Periodic, o[1], None, Identity)?,
            ],
        };
        let normalization = match family {
            // r dr dphi / pi = dx dphi / (2 pi)
            FamilyId::PlaneZ => 0.5 / PI,
            FamilyId::HypersphereN => 0.5 / (PI * PI),
            FamilyId::ZernikeR | FamilyId::ZernikeW => 0.5,
            _ => 1.0,
        };
        let mut points = vec![Vec::with_capacity(dim)];
        let mut weights = vec![normalization];
        for a in &axes {
            let (nodes, ws) = a.nodes_weights();
            let mut np = Vec::with_capacity(points.len() * nodes.len());
            let mut nw = Vec::with_capacity(points.len() * nodes.len());
            for (p, w) in points.iter().zip(&weights) {
                for (&u, &wu) in nodes.iter().zip(&ws) {
                    let (coord, jac) = match a.substitution {
                        Identity => (u, 1.0),
                        RadiusSquared => (u.sqrt(), 1.0),
                        CosTheta => (u.clamp(-1.0, 1.0).acos(), 1.0),
                        ArcCosine => (u.cos(), u.sin()),
                        CenteredAngle => (u - PI, 1.0),
                    };
                    let mut q = p.clone();
                    q.push(coord);
                    np.push(q);
                    nw.push(w * wu * jac);
                }
            }
            points = np;
            weights = nw;
        }
        Ok(Self {
            family,
            axes,
            points,
            weights,
        })
    }

    /// Orders that integrate products of window members exactly (Gauss and
    /// periodic axes) or to rounding (the smooth hypersphere axes).
    pub fn for_window(family: FamilyId, window: &Window) -> Result<Self, TransformError> {
        Self::new(family, &required_orders(family, window))
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn orders(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.rule.order()).collect()
    }

    /// Nodes in the family's natural coordinates.
    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// One message per axis whose order is below what the window needs.
    pub fn warnings(&self, window: &Window) -> Vec<String> {
        let need = required_orders(self.family, window);
        self.axes
            .iter()
            .zip(need)
            .filter(|(a, n)| a.rule.order() < *n)
            .map(|(a, n)| {
                format!(
                    "{} axis {} has order {} but the window needs {}",
                    self.family.tag(),
                    a.coordinate,
                    a.rule.order(),
                    n
                )
            })
            .collect()
    }
}

/// Largest stored value of component `k` over the window's valid indices.
fn max_component(family: FamilyId, window: &Window, k: usize, abs: bool) -> i64 {
    window
        .indices(family)
        .iter()
        .map(|i| if abs { i[k].abs() } else { i[k] })
        .max()
        .unwrap_or(0)
}

/// Minimal orders per axis for products of two window members.
pub fn required_orders(family: FamilyId, window: &Window) -> Vec<usize> {
    let top = |k, abs| max_component(family, window, k, abs).max(0) as usize;
    match family {
        // frequencies up to 2M need more than 2M nodes
        FamilyId::FourierCircle => vec![2 * top(0, true) + 1],
        // degree 2n polynomial against the rule weight
        FamilyId::Hermite | FamilyId::LaguerreM { .. } => vec![top(0, false) + 1],
        // x^{2|m|} times degree 2(j - |m|): degree 2j, doubled j here
        FamilyId::AssocLaguerre => vec![top(0, false) / 2 + 1],
        FamilyId::PlaneZ => vec![top(0, false) / 2 + 1, top(1, true) + 1],
        FamilyId::SphericalY => vec![top(0, false) + 1, 2 * top(1, true) + 1],
        FamilyId::JacobiJ => vec![top(0, false) / 2 + 1],
        // trig polynomials of half angles: Gauss rules converge spectrally
        FamilyId::HypersphereN => vec![top(0, false) + 24, top(1, true) + 1, top(2, true) + 24],
        FamilyId::ZernikeR => vec![top(0, false) / 2 + 1],
        FamilyId::ZernikeW => {
            let n = window
                .indices(family)
                .iter()
                .map(|i| ((i[0] + i[1]) as usize, (i[0] - i[1]).unsigned_abs() as usize))
                .fold((0, 0), |acc, (n, m)| (acc.0.max(n), acc.1.max(m)));
            vec![n.0 / 2 + 1, 2 * n.1 + 1]
        }
    }
}
