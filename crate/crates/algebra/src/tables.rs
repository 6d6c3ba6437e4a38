//! Generator tables of the six algebras, with their commutator, Casimir,
//! adjoint and weight relations.

use std::sync::Arc;

use num_complex::Complex64;
use sgsf_basis::FamilyId;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::differential::Realization;
use crate::error::AlgebraError;
use crate::generator::{GeneratorSpec, Linear, OpExpr};
use crate::window::Window;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlgebraId {
    Su2AssocLaguerre,
    HeisenbergHermite,
    So32Spherical,
    Su11Laguerre { alpha: f64 },
    Su22Jacobi,
    Su11xSu11Zernike,
}

impl AlgebraId {
    pub const ALL_TAGS: [&'static str; 6] = [
        "su2_assoc_laguerre",
        "heisenberg_hermite",
        "so32_spherical",
        "su11_laguerre",
        "su22_jacobi",
        "su11xsu11_zernike",
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            AlgebraId::Su2AssocLaguerre => "su2_assoc_laguerre",
            AlgebraId::HeisenbergHermite => "heisenberg_hermite",
            AlgebraId::So32Spherical => "so32_spherical",
            AlgebraId::Su11Laguerre { .. } => "su11_laguerre",
            AlgebraId::Su22Jacobi => "su22_jacobi",
            AlgebraId::Su11xSu11Zernike => "su11xsu11_zernike",
        }
    }

    /// `alpha` only matters for `su11_laguerre` and defaults to 0.
    pub fn parse(tag: &str, alpha: Option<f64>) -> Result<Self, AlgebraError> {
        Ok(match tag {
            "su2_assoc_laguerre" => AlgebraId::Su2AssocLaguerre,
            "heisenberg_hermite" => AlgebraId::HeisenbergHermite,
            "so32_spherical" => AlgebraId::So32Spherical,
            "su11_laguerre" => {
                let alpha = alpha.unwrap_or(0.0);
                FamilyId::from_tag("laguerre-m", Some(alpha))?;
                AlgebraId::Su11Laguerre { alpha }
            }
            "su22_jacobi" => AlgebraId::Su22Jacobi,
            "su11xsu11_zernike" => AlgebraId::Su11xSu11Zernike,
            other => return Err(AlgebraError::UnknownAlgebra(other.to_string())),
        })
    }

    pub fn family(&self) -> FamilyId {
        match self {
            AlgebraId::Su2AssocLaguerre => FamilyId::AssocLaguerre,
            AlgebraId::HeisenbergHermite => FamilyId::Hermite,
            AlgebraId::So32Spherical => FamilyId::SphericalY,
            AlgebraId::Su11Laguerre { alpha } => FamilyId::LaguerreM { alpha: *alpha },
            AlgebraId::Su22Jacobi => FamilyId::JacobiJ,
            AlgebraId::Su11xSu11Zernike => FamilyId::ZernikeW,
        }
    }
}

/// `lhs = rhs` on the interior of `window` (the algebra window if `None`),
/// tested on the basis vectors of `sources` when given.
#[derive(Debug, Clone)]
pub struct Relation {
    pub label: String,
    pub lhs: OpExpr,
    pub rhs: OpExpr,
    pub window: Option<Window>,
    pub sources: Option<Window>,
}

pub type Scalar = Arc<dyn Fn(&[i64]) -> f64 + Send + Sync>;

#[derive(Clone)]
pub struct CasimirRule {
    pub label: String,
    pub expr: OpExpr,
    pub predicted: Scalar,
    pub window: Option<Window>,
}

/// Pair of generator names with an optional dedicated window.
#[derive(Debug, Clone)]
pub struct Pairing {
    pub label: String,
    pub first: String,
    pub second: String,
    pub window: Option<Window>,
}

#[derive(Clone)]
pub struct Algebra {
    pub id: AlgebraId,
    pub family: FamilyId,
    pub window: Window,
    pub generators: Vec<GeneratorSpec>,
    pub commutators: Vec<Relation>,
    pub casimirs: Vec<CasimirRule>,
    /// `(plus, minus)` formal adjoint pairs.
    pub adjoint_pairs: Vec<Pairing>,
    /// `(ladder, cartan)` weight relations.
    pub weights: Vec<Pairing>,
    /// Products checked against directly tabulated generators.
    pub compositions: Vec<Relation>,
}

impl Algebra {
    pub fn generator(&self, name: &str) -> Result<&GeneratorSpec, AlgebraError> {
        self.generators
            .iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| AlgebraError::UnknownGenerator {
                generator: name.to_string(),
                algebra: self.id.tag(),
            })
    }

    /// Replaces the default window.
    pub fn with_window(mut self, window: Window) -> Self {
        self.window = window;
        self
    }
}

const LOWERING_NOTE: &str = "lowering target taken as the transpose of the raising shift";

fn half(c: &[i64], k: usize) -> f64 {
    c[k] as f64 / 2.0
}

fn sqrt_prod(a: f64, b: f64) -> f64 {
    // both factors vanish together or are non-negative on valid indices
    (a * b).max(0.0).sqrt()
}

fn g(a: &GeneratorSpec) -> OpExpr {
    OpExpr::gen(a)
}

struct Builder {
    id: AlgebraId,
    window: Window,
    generators: Vec<GeneratorSpec>,
    commutators: Vec<Relation>,
    casimirs: Vec<CasimirRule>,
    adjoint_pairs: Vec<Pairing>,
    weights: Vec<Pairing>,
    compositions: Vec<Relation>,
}

impl Builder {
    fn new(id: AlgebraId, window: Window) -> Self {
        Self {
            id,
            window,
            generators: Vec::new(),
            commutators: Vec::new(),
            casimirs: Vec::new(),
            adjoint_pairs: Vec::new(),
            weights: Vec::new(),
            compositions: Vec::new(),
        }
    }

    fn gen(&mut self, g: GeneratorSpec) -> GeneratorSpec {
        self.generators.push(g.clone());
        g
    }

    /// `@2m=3,2q=1` naming the components a dedicated window pins.
    fn suffix(&self, window: &Option<Window>) -> String {
        let Some(w) = window else { return String::new() };
        let family = self.id.family();
        let two = if family.doubled() { "2" } else { "" };
        let pinned: Vec<String> = family
            .component_names()
            .iter()
            .zip(w.lo().iter().zip(w.hi()))
            .filter(|(_, (lo, hi))| lo == hi)
            .map(|(name, (lo, _))| format!("{two}{name}={lo}"))
            .collect();
        if pinned.is_empty() {
            String::new()
        } else {
            format!("@{}", pinned.join(","))
        }
    }

    fn commutator(&mut self, a: &GeneratorSpec, b: &GeneratorSpec, rhs: OpExpr, window: Option<Window>) {
        self.commutators.push(Relation {
            label: format!("{}-commutator-[{},{}]{}", self.id.tag(), a.name(), b.name(), self.suffix(&window)),
            lhs: OpExpr::commutator(a, b),
            rhs,
            window,
            sources: None,
        });
    }

    fn casimir<P>(&mut self, name: &str, expr: OpExpr, predicted: P, window: Option<Window>)
    where
        P: Fn(&[i64]) -> f64 + Send + Sync + 'static,
    {
        self.casimirs.push(CasimirRule {
            label: format!("{}-casimir-{}{}", self.id.tag(), name, self.suffix(&window)),
            expr,
            predicted: Arc::new(predicted),
            window,
        });
    }

    fn adjoint(&mut self, plus: &GeneratorSpec, minus: &GeneratorSpec, window: Option<Window>) {
        self.adjoint_pairs.push(Pairing {
            label: format!("{}-adjoint-{}-{}{}", self.id.tag(), plus.name(), minus.name(), self.suffix(&window)),
            first: plus.name().to_string(),
            second: minus.name().to_string(),
            window,
        });
    }

    fn weight(&mut self, ladder: &GeneratorSpec, cartan: &GeneratorSpec) {
        self.weights.push(Pairing {
            label: format!("{}-weight-{}-{}", self.id.tag(), cartan.name(), ladder.name()),
            first: ladder.name().to_string(),
            second: cartan.name().to_string(),
            window: None,
        });
    }

    fn finish(self) -> Algebra {
        Algebra {
            id: self.id,
            family: self.id.family(),
            window: self.window,
            generators: self.generators,
            commutators: self.commutators,
            casimirs: self.casimirs,
            adjoint_pairs: self.adjoint_pairs,
            weights: self.weights,
            compositions: self.compositions,
        }
    }
}

fn diag(name: &str, family: FamilyId, component: usize, scale: f64, offset: f64) -> GeneratorSpec {
    GeneratorSpec::linear_diagonal(
        name,
        family,
        Linear {
            component,
            scale,
            offset,
        },
    )
}

/// Circle generator `J e_m = m e_m`, realized as `i d/dphi`.
pub fn fourier_j() -> GeneratorSpec {
    diag("J", FamilyId::FourierCircle, 0, 1.0, 0.0).with_realization(Realization::FourierIDphi)
}

/// Full table of an algebra with its default window.
pub fn algebra(id: AlgebraId) -> Algebra {
    match id {
        AlgebraId::Su2AssocLaguerre => su2(),
        AlgebraId::HeisenbergHermite => heisenberg(),
        AlgebraId::So32Spherical => so32(),
        AlgebraId::Su11Laguerre { alpha } => su11(alpha),
        AlgebraId::Su22Jacobi => su22(),
        AlgebraId::Su11xSu11Zernike => zernike(),
    }
}

/// Shorthand for [`algebra`] with the generators listed by name.
pub fn algebra_generators(id: AlgebraId) -> Vec<GeneratorSpec> {
    algebra(id).generators
}

fn su2() -> Algebra {
    let f = FamilyId::AssocLaguerre;
    let mut b = Builder::new(AlgebraId::Su2AssocLaguerre, Window::standard(f, 12));
    let kp = b.gen(
        GeneratorSpec::new("K+", f)
            .term(vec![0, 2], |c| sqrt_prod(half(c, 0) - half(c, 1), half(c, 0) + half(c, 1) + 1.0))
            .with_realization(Realization::AssocLaguerreRaising),
    );
    let km = b.gen(
        GeneratorSpec::new("K-", f)
            .term(vec![0, -2], |c| sqrt_prod(half(c, 0) + half(c, 1), half(c, 0) - half(c, 1) + 1.0))
            .with_realization(Realization::AssocLaguerreLowering),
    );
    let k3 = b.gen(diag("K3", f, 1, 0.5, 0.0));
    let j = b.gen(diag("J", f, 0, 0.5, 0.0));
    b.commutator(&kp, &km, g(&k3).times(2.0), None);
    b.commutator(&k3, &kp, g(&kp), None);
    b.commutator(&k3, &km, g(&km).times(-1.0), None);
    b.casimir(
        "K3^2+{K+,K-}/2",
        OpExpr::product(&[&k3, &k3]).plus(OpExpr::anticommutator(&kp, &km).times(0.5)),
        |c| half(c, 0) * (half(c, 0) + 1.0),
        None,
    );
    b.adjoint(&kp, &km, None);
    for l in [&kp, &km] {
        b.weight(l, &k3);
        b.weight(l, &j);
    }
    b.finish()
}

fn heisenberg() -> Algebra {
    let f = FamilyId::Hermite;
    let mut b = Builder::new(AlgebraId::HeisenbergHermite, Window::standard(f, 40));
    let sqrt_n = |c: &[i64]| (c[0] as f64).sqrt();
    let sqrt_n1 = |c: &[i64]| (c[0] as f64 + 1.0).sqrt();
    let a = b.gen(
        GeneratorSpec::new("a", f)
            .term(vec![-1], sqrt_n)
            .with_realization(Realization::HermiteLowering),
    );
    let ad = b.gen(
        GeneratorSpec::new("a+", f)
            .term(vec![1], sqrt_n1)
            .with_realization(Realization::HermiteRaising),
    );
    let n = b.gen(diag("N", f, 0, 1.0, 0.0));
    let id = b.gen(diag("I", f, 0, 0.0, 1.0));
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let is = Complex64::new(0.0, FRAC_1_SQRT_2);
    let q = b.gen(
        GeneratorSpec::new("Q", f)
            .complex_term(vec![-1], s, sqrt_n)
            .complex_term(vec![1], s, sqrt_n1)
            .with_realization(Realization::HermitePosition),
    );
    // P = i d/dx = i (a - a+) / sqrt 2
    let p = b.gen(
        GeneratorSpec::new("P", f)
            .complex_term(vec![-1], is, sqrt_n)
            .complex_term(vec![1], -is, sqrt_n1)
            .with_realization(Realization::HermiteMomentum),
    );
    b.commutator(&a, &ad, g(&id), None);
    b.commutator(&n, &a, g(&a).times(-1.0), None);
    b.commutator(&n, &ad, g(&ad), None);
    b.commutator(&q, &p, g(&id).scaled(Complex64::new(0.0, -1.0)), None);
    b.casimir(
        "(Q^2+P^2)/2-(N+I/2)",
        OpExpr::product(&[&q, &q])
            .plus(OpExpr::product(&[&p, &p]))
            .times(0.5)
            .minus(g(&n))
            .minus(g(&id).times(0.5)),
        |_| 0.0,
        None,
    );
    b.adjoint(&ad, &a, None);
    b.adjoint(&q, &q, None);
    b.adjoint(&p, &p, None);
    b.weight(&a, &n);
    b.weight(&ad, &n);
    b.finish()
}

fn so32() -> Algebra {
    let f = FamilyId::SphericalY;
    let mut b = Builder::new(AlgebraId::So32Spherical, Window::standard(f, 10));
    let l = |c: &[i64]| c[0] as f64;
    let m = |c: &[i64]| c[1] as f64;
    let ladders = [
        b.gen(GeneratorSpec::new("J+", f).term(vec![0, 1], move |c| sqrt_prod(l(c) - m(c), l(c) + m(c) + 1.0))),
        b.gen(
            GeneratorSpec::new("J-", f)
                .term(vec![0, -1], move |c| sqrt_prod(l(c) + m(c), l(c) - m(c) + 1.0))
                .with_note(LOWERING_NOTE),
        ),
        b.gen(GeneratorSpec::new("K+", f).term(vec![1, 0], move |c| sqrt_prod(l(c) + 1.0 - m(c), l(c) + 1.0 + m(c)))),
        b.gen(
            GeneratorSpec::new("K-", f)
                .term(vec![-1, 0], move |c| sqrt_prod(l(c) - m(c), l(c) + m(c)))
                .with_note(LOWERING_NOTE),
        ),
        b.gen(GeneratorSpec::new("R+", f).term(vec![1, 1], move |c| sqrt_prod(l(c) + m(c) + 2.0, l(c) + m(c) + 1.0))),
        b.gen(
            GeneratorSpec::new("R-", f)
                .term(vec![-1, -1], move |c| sqrt_prod(l(c) + m(c), l(c) + m(c) - 1.0))
                .with_note(LOWERING_NOTE),
        ),
        b.gen(GeneratorSpec::new("S+", f).term(vec![1, -1], move |c| sqrt_prod(l(c) - m(c) + 2.0, l(c) - m(c) + 1.0))),
        b.gen(
            GeneratorSpec::new("S-", f)
                .term(vec![-1, 1], move |c| sqrt_prod(l(c) - m(c), l(c) - m(c) - 1.0))
                .with_note(LOWERING_NOTE),
        ),
    ];
    let lg = b.gen(diag("L", f, 0, 1.0, 0.0));
    let mg = b.gen(diag("M", f, 1, 1.0, 0.0));
    for pair in ladders.chunks(2) {
        b.adjoint(&pair[0], &pair[1], None);
    }
    for x in &ladders {
        b.weight(x, &lg);
        b.weight(x, &mg);
    }
    b.finish()
}

/// `Y = -(K+ + K-) + 2N + (a+1) I` in the su(1,1) Laguerre table.
pub fn laguerre_position(alg: &Algebra) -> Result<OpExpr, AlgebraError> {
    let alpha = match alg.id {
        AlgebraId::Su11Laguerre { alpha } => alpha,
        _ => return Err(AlgebraError::UnknownAlgebra(alg.id.tag().to_string())),
    };
    Ok(g(alg.generator("K+")?)
        .plus(g(alg.generator("K-")?))
        .times(-1.0)
        .plus(g(alg.generator("N")?).times(2.0))
        .plus(g(alg.generator("I")?).times(alpha + 1.0)))
}

fn su11(alpha: f64) -> Algebra {
    let f = FamilyId::LaguerreM { alpha };
    let mut b = Builder::new(AlgebraId::Su11Laguerre { alpha }, Window::standard(f, 30));
    let kp = b.gen(
        GeneratorSpec::new("K+", f)
            .term(vec![1], move |c| sqrt_prod(c[0] as f64 + 1.0, c[0] as f64 + alpha + 1.0))
            .with_realization(Realization::LaguerreRaising { alpha }),
    );
    let km = b.gen(
        GeneratorSpec::new("K-", f)
            .term(vec![-1], move |c| sqrt_prod(c[0] as f64, c[0] as f64 + alpha))
            .with_realization(Realization::LaguerreLowering { alpha })
            .with_note(LOWERING_NOTE),
    );
    let k3 = b.gen(diag("K3", f, 0, 1.0, 0.5 * (alpha + 1.0)));
    b.gen(diag("N", f, 0, 1.0, 0.0));
    b.gen(diag("I", f, 0, 0.0, 1.0));
    b.commutator(&k3, &kp, g(&kp), None);
    b.commutator(&k3, &km, g(&km).times(-1.0), None);
    b.commutator(&kp, &km, g(&k3).times(-2.0), None);
    b.casimir(
        "K3^2-{K+,K-}/2",
        OpExpr::product(&[&k3, &k3]).minus(OpExpr::anticommutator(&kp, &km).times(0.5)),
        move |_| 0.25 * (alpha * alpha - 1.0),
        None,
    );
    b.adjoint(&kp, &km, None);
    b.weight(&kp, &k3);
    b.weight(&km, &k3);
    b.finish()
}

/// Doubled `(2m, 2q)` pairs with `|m| > |q|` on which the Jacobi su(1,1)
/// ladders are tabulated, including both integer and half-integer classes.
pub const JACOBI_SU11_PAIRS: [(i64, i64); 6] = [(2, 0), (-2, 0), (3, 1), (-3, 1), (4, -2), (5, -3)];

/// Window `j = |m| ..= |m| + span` at fixed doubled `(2m, 2q)`; `span`
/// counts integer steps of `j`.
pub fn jacobi_su11_window(two_m: i64, two_q: i64, span: i64) -> Window {
    let lo = two_m.abs();
    Window::new(vec![lo, two_m, two_q], vec![lo + 2 * span, two_m, two_q])
}

fn su22() -> Algebra {
    let f = FamilyId::JacobiJ;
    let mut b = Builder::new(AlgebraId::Su22Jacobi, Window::standard(f, 8));
    let j = |c: &[i64]| half(c, 0);
    let m = |c: &[i64]| half(c, 1);
    let q = |c: &[i64]| half(c, 2);
    let mut ladders = Vec::new();
    for (name, s) in [('+', 1i64), ('-', -1i64)] {
        let sf = s as f64;
        // shared (j + x + 1/2 +- 1/2) factor
        let fac = move |x: f64, jj: f64| jj + x + 0.5 + 0.5 * sf;
        ladders.push(b.gen(
            GeneratorSpec::new(format!("A{name}"), f)
                .term(vec![0, 2 * s, 0], move |c| sqrt_prod(j(c) - sf * m(c), j(c) + sf * m(c) + 1.0)),
        ));
        ladders.push(b.gen(
            GeneratorSpec::new(format!("B{name}"), f)
                .term(vec![0, 0, 2 * s], move |c| sqrt_prod(j(c) - sf * q(c), j(c) + sf * q(c) + 1.0)),
        ));
        ladders.push(b.gen(
            GeneratorSpec::new(format!("C{name}"), f)
                .term(vec![s, s, s], move |c| sqrt_prod(fac(m(c), j(c)), fac(q(c), j(c)))),
        ));
        ladders.push(b.gen(
            GeneratorSpec::new(format!("D{name}"), f)
                .term(vec![s, s, -s], move |c| sqrt_prod(fac(m(c), j(c)), fac(-q(c), j(c)))),
        ));
        ladders.push(b.gen(
            GeneratorSpec::new(format!("E{name}"), f)
                .term(vec![s, -s, s], move |c| sqrt_prod(fac(-m(c), j(c)), fac(q(c), j(c)))),
        ));
        ladders.push(b.gen(
            GeneratorSpec::new(format!("F{name}"), f)
                .term(vec![s, -s, -s], move |c| sqrt_prod(fac(-m(c), j(c)), fac(-q(c), j(c)))),
        ));
    }
    let jg = b.gen(diag("J", f, 0, 0.5, 0.0));
    let mg = b.gen(diag("M", f, 1, 0.5, 0.0));
    let qg = b.gen(diag("Q", f, 2, 0.5, 0.0));
    let (plus, minus) = ladders.split_at(6);
    for (p, mi) in plus.iter().zip(minus) {
        b.adjoint(p, mi, None);
    }
    for x in &ladders {
        for c in [&jg, &mg, &qg] {
            b.weight(x, c);
        }
    }

    // su(1,1) on j >= |m| > |q|
    let kp = b.gen(
        GeneratorSpec::new("K+", f).term(vec![2, 0, 0], move |c| sqrt_prod(j(c) + 1.0 - m(c), j(c) + 1.0 + m(c))),
    );
    let km = b.gen(GeneratorSpec::new("K-", f).term(vec![-2, 0, 0], move |c| sqrt_prod(j(c) - m(c), j(c) + m(c))));
    let k3 = b.gen(diag("K3", f, 0, 0.5, 0.5));
    let inv_p = b.gen(GeneratorSpec::new("Dq+", f).term(vec![0, 0, 0], move |c| {
        1.0 / ((j(c) + 1.0) * (j(c) + 1.0) - q(c) * q(c)).sqrt()
    }));
    let inv_m = b.gen(
        GeneratorSpec::new("Dq-", f).term(vec![0, 0, 0], move |c| 1.0 / (j(c) * j(c) - q(c) * q(c)).sqrt()),
    );
    let find = |n: &str| ladders.iter().find(|g| g.name() == n).expect("tabulated").clone();
    let (cp, cm, fp, fm) = (find("C+"), find("C-"), find("F+"), find("F-"));
    for &(tm, tq) in &JACOBI_SU11_PAIRS {
        let w = Some(jacobi_su11_window(tm, tq, 10));
        // C and F pass through the neighbouring (m, q) classes
        let wide = w.as_ref().map(|w| {
            Window::new(
                vec![w.lo()[0], tm - 1, tq - 1],
                vec![w.hi()[0] + 2, tm + 1, tq + 1],
            )
        });
        b.commutator(&kp, &km, g(&k3).times(-2.0), w.clone());
        b.commutator(&k3, &kp, g(&kp), w.clone());
        b.commutator(&k3, &km, g(&km).times(-1.0), w.clone());
        b.casimir(
            "K3^2-{K+,K-}/2",
            OpExpr::product(&[&k3, &k3]).minus(OpExpr::anticommutator(&kp, &km).times(0.5)),
            move |c| half(c, 1) * half(c, 1) - 0.25,
            w.clone(),
        );
        b.adjoint(&kp, &km, w.clone());
        for (direct, composed) in [
            (&kp, OpExpr::product(&[&fp, &cp, &inv_p])),
            (&km, OpExpr::product(&[&fm, &cm, &inv_m])),
        ] {
            b.compositions.push(Relation {
                label: format!("su22_jacobi-composition-{}@2m={tm},2q={tq}", direct.name()),
                lhs: composed,
                rhs: g(direct),
                window: wide.clone(),
                sources: w.clone(),
            });
        }
    }
    b.finish()
}

fn zernike() -> Algebra {
    let f = FamilyId::ZernikeW;
    let mut b = Builder::new(AlgebraId::Su11xSu11Zernike, Window::new(vec![0, 0], vec![12, 12]));
    let u = |c: &[i64]| c[0] as f64;
    let v = |c: &[i64]| c[1] as f64;
    let ug = b.gen(diag("U", f, 0, 1.0, 0.0));
    let vg = b.gen(diag("V", f, 1, 1.0, 0.0));
    let a3 = b.gen(diag("A3", f, 0, 1.0, 0.5));
    let b3 = b.gen(diag("B3", f, 1, 1.0, 0.5));
    let ap = b.gen(GeneratorSpec::new("A+", f).term(vec![1, 0], move |c| u(c) + 1.0));
    let am = b.gen(GeneratorSpec::new("A-", f).term(vec![-1, 0], u));
    let bp = b.gen(GeneratorSpec::new("B+", f).term(vec![0, 1], move |c| v(c) + 1.0));
    let bm = b.gen(GeneratorSpec::new("B-", f).term(vec![0, -1], v));
    b.gen(
        GeneratorSpec::new("P", f)
            .term(vec![1, 0], move |c| {
                (u(c) + 1.0) / ((u(c) + v(c) + 1.0) * (u(c) + v(c) + 2.0)).sqrt()
            })
            .term(vec![0, -1], move |c| {
                if c[1] == 0 {
                    0.0
                } else {
                    v(c) / ((u(c) + v(c)) * (u(c) + v(c) + 1.0)).sqrt()
                }
            })
            .with_realization(Realization::DiskMultiplyREiPhi),
    );
    b.commutator(&ug, &ap, g(&ap), None);
    b.commutator(&ug, &am, g(&am).times(-1.0), None);
    b.commutator(&vg, &bp, g(&bp), None);
    b.commutator(&vg, &bm, g(&bm).times(-1.0), None);
    b.commutator(&ap, &am, g(&a3).times(-2.0), None);
    b.commutator(&a3, &ap, g(&ap), None);
    b.commutator(&a3, &am, g(&am).times(-1.0), None);
    b.commutator(&bp, &bm, g(&b3).times(-2.0), None);
    b.commutator(&b3, &bp, g(&bp), None);
    b.commutator(&b3, &bm, g(&bm).times(-1.0), None);
    for x in [&ap, &am, &a3, &ug] {
        for y in [&bp, &bm, &b3, &vg] {
            b.commutator(x, y, OpExpr::zero(), None);
        }
    }
    b.casimir(
        "A",
        OpExpr::product(&[&a3, &a3]).minus(OpExpr::anticommutator(&ap, &am).times(0.5)),
        |_| -0.25,
        None,
    );
    b.casimir(
        "B",
        OpExpr::product(&[&b3, &b3]).minus(OpExpr::anticommutator(&bp, &bm).times(0.5)),
        |_| -0.25,
        None,
    );
    b.adjoint(&ap, &am, None);
    b.adjoint(&bp, &bm, None);
    for (l, c) in [(&ap, &ug), (&am, &ug), (&ap, &a3), (&am, &a3), (&bp, &vg), (&bm, &vg), (&bp, &b3), (&bm, &b3)] {
        b.weight(l, c);
    }
    b.finish()
}
