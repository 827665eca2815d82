//! Scalar spring-mass-damper integrator lab.
//!
//! The system `m·ẍ + b·ẋ + k·x = f` is the model problem behind every
//! constraint in this crate: a constraint is a virtual spring-damper, and the
//! choice of first-order scheme decides whether stiff springs (k up to 10¹⁵)
//! can be stepped stably. Three schemes are implemented:
//!
//! ```text
//! explicit:       x₁ = x₀ + h·v₀          v₁ = v₀ + (h/m)(f − b·v₀ − k·x₀)
//! semi-implicit:  x₁ = x₀ + h·v₁          v₁ = v₀ + (h/m)(f − b·v₁ − k·x₀)
//! implicit:       x₁ = x₀ + h·v₁          v₁ = v₀ + (h/m)(f − b·v₁ − k·x₁)
//! ```
//!
//! With f = 0 each scheme is a linear recurrence y₁ = A·y₀ over y = (x, v);
//! A is the *iteration matrix* and the scheme is stable iff every eigenvalue
//! of A has magnitude below one.

use nalgebra::Matrix2;

use crate::error::{Error, Result};

/// Parameters of the scalar spring-mass-damper `m·ẍ + b·ẋ + k·x = f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MsdParams {
    /// Mass (kg), strictly positive.
    pub m: f64,
    /// Spring stiffness (N/m), nonnegative.
    pub k: f64,
    /// Viscous damping (N·s/m), nonnegative.
    pub b: f64,
    /// Constant external force (N).
    pub f: f64,
}

impl MsdParams {
    pub fn new(m: f64, k: f64, b: f64, f: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::InvalidParameter(format!("mass must be > 0, got {m}")));
        }
        if !(k >= 0.0) || !k.is_finite() {
            return Err(Error::InvalidParameter(format!("stiffness must be >= 0, got {k}")));
        }
        if !(b >= 0.0) || !b.is_finite() {
            return Err(Error::InvalidParameter(format!("damping must be >= 0, got {b}")));
        }
        if !f.is_finite() {
            return Err(Error::InvalidParameter("force must be finite".into()));
        }
        Ok(Self { m, k, b, f })
    }

    /// Unforced system (f = 0).
    pub fn unforced(m: f64, k: f64, b: f64) -> Result<Self> {
        Self::new(m, k, b, 0.0)
    }
}

/// State (position, velocity) of the scalar oscillator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MsdState {
    pub x: f64,
    pub v: f64,
}

impl MsdState {
    pub fn new(x: f64, v: f64) -> Self {
        Self { x, v }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.v.is_finite()
    }

    /// Max-norm of (x, v).
    pub fn norm_inf(&self) -> f64 {
        self.x.abs().max(self.v.abs())
    }
}

/// First-order integration scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    ExplicitEuler,
    SemiImplicitEuler,
    ImplicitEuler,
}

impl Scheme {
    pub fn name(&self) -> &'static str {
        match self {
            Scheme::ExplicitEuler => "explicit",
            Scheme::SemiImplicitEuler => "semi-implicit",
            Scheme::ImplicitEuler => "implicit",
        }
    }
}

impl std::str::FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "explicit" | "explicit-euler" => Ok(Scheme::ExplicitEuler),
            "semi-implicit" | "semi_implicit" | "symplectic" => Ok(Scheme::SemiImplicitEuler),
            "implicit" | "implicit-euler" => Ok(Scheme::ImplicitEuler),
            other => Err(Error::BadInput(format!("unknown scheme '{other}'"))),
        }
    }
}

/// Stability verdict for a (scheme, parameters, step size) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stability {
    Stable,
    Marginal,
    Unstable,
}

impl std::fmt::Display for Stability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Stability::Stable => "Stable",
            Stability::Marginal => "Marginal",
            Stability::Unstable => "Unstable",
        };
        f.write_str(s)
    }
}

/// Stability class together with the spectral radius it was judged on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityClass {
    pub class: Stability,
    /// Spectral radius ρ of the iteration matrix.
    pub rho: f64,
}

fn check_h(h: f64) -> Result<()> {
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidParameter(format!("step size must be > 0, got {h}")));
    }
    Ok(())
}

/// Dimensionless trace/determinant of the iteration matrix, in closed form.
///
/// Everything is expressed through s_b = h·b/m and s_k = h²·k/m, which are
/// plain products of the inputs and carry no cancellation.
fn trace_det(scheme: Scheme, p: &MsdParams, h: f64) -> (f64, f64) {
    let s_b = h * p.b / p.m;
    let s_k = h * h * p.k / p.m;
    match scheme {
        Scheme::ExplicitEuler => (2.0 - s_b, 1.0 - s_b + s_k),
        Scheme::SemiImplicitEuler => {
            let alpha = 1.0 / (1.0 + s_b);
            (alpha * (2.0 + s_b - s_k), alpha)
        }
        Scheme::ImplicitEuler => {
            let gamma = 1.0 / (1.0 + s_b + s_k);
            (gamma * (2.0 + s_b), gamma)
        }
    }
}

/// Iteration matrix A of the homogeneous (f = 0) recurrence y₁ = A·y₀.
///
/// The explicit matrix is the textbook form; the semi-implicit and implicit
/// matrices come from solving their one-step update rules for (x₁, v₁).
pub fn iteration_matrix(scheme: Scheme, p: &MsdParams, h: f64) -> Result<Matrix2<f64>> {
    check_h(h)?;
    let MsdParams { m, k, b, .. } = *p;
    let a = match scheme {
        Scheme::ExplicitEuler => {
            Matrix2::new(1.0, h, -(h * k / m), 1.0 - h * b / m)
        }
        Scheme::SemiImplicitEuler => {
            let alpha = 1.0 / (1.0 + h * b / m);
            Matrix2::new(
                1.0 - alpha * h * h * k / m,
                alpha * h,
                -(alpha * h * k / m),
                alpha,
            )
        }
        Scheme::ImplicitEuler => {
            let gamma = 1.0 / (1.0 + h * b / m + h * h * k / m);
            Matrix2::new(
                1.0 - gamma * h * h * k / m,
                gamma * h,
                -(gamma * h * k / m),
                gamma,
            )
        }
    };
    Ok(a)
}

/// Spectral radius of a 2×2 matrix from its trace and determinant.
pub fn spectral_radius(tr: f64, det: f64) -> f64 {
    let disc = tr * tr - 4.0 * det;
    if disc >= 0.0 {
        let root = disc.sqrt();
        (0.5 * (tr + root)).abs().max((0.5 * (tr - root)).abs())
    } else {
        // Complex pair: both eigenvalues have magnitude √det (det > tr²/4 ≥ 0).
        det.sqrt()
    }
}

/// Relative marginality band on the unit-circle margins.
///
/// A margin whose closed form requires subtracting two computed quantities is
/// declared zero when it is below this fraction of the subtraction scale; the
/// cancellation-free margins (pure products/quotients of the inputs) keep
/// their exact sign.
pub const MARGINALITY_BAND: f64 = 1e-9;

/// Margin with the magnitude scale of the subtraction that produced it.
/// Cancellation-free margins carry scale 0 so that their sign is trusted.
#[derive(Clone, Copy)]
struct Margin {
    value: f64,
    scale: f64,
}

impl Margin {
    fn exact(value: f64) -> Self {
        Margin { value, scale: 0.0 }
    }

    fn diff(value: f64, scale: f64) -> Self {
        Margin { value, scale }
    }

    fn sign(&self) -> std::cmp::Ordering {
        let band = MARGINALITY_BAND * self.scale;
        if self.value > band {
            std::cmp::Ordering::Greater
        } else if self.value < -band {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Equal
        }
    }
}

/// Classify the scheme's stability at (p, h).
///
/// Both eigenvalues of the 2×2 iteration matrix lie strictly inside the unit
/// circle iff |det| < 1 and |tr| < 1 + det. Those two margins are evaluated
/// from scheme-specific closed forms in s_b = h·b/m and s_k = h²·k/m, which
/// keeps them meaningful even when ρ itself rounds to 1 in double precision
/// (e.g. implicit Euler with h²k/m = 10⁻¹⁶ is strictly stable and classified
/// so, although ρ = 1 − 5·10⁻¹⁷ is unrepresentable).
pub fn classify_stability(scheme: Scheme, p: &MsdParams, h: f64) -> Result<StabilityClass> {
    check_h(h)?;
    let s_b = h * p.b / p.m;
    let s_k = h * h * p.k / p.m;
    let (tr, det) = trace_det(scheme, p, h);
    let rho = spectral_radius(tr, det);

    let margins: Vec<Margin> = match scheme {
        Scheme::ExplicitEuler => {
            // det − 1 = s_k − s_b, so 1 − det = s_b − s_k.
            let m_det_hi = Margin::diff(s_b - s_k, s_b.max(s_k));
            // 1 + det = 2 − s_b + s_k.
            let one_plus_det = 2.0 - s_b + s_k;
            let m_det_lo = Margin::diff(one_plus_det, 2.0 + s_b + s_k);
            let m_tr = if tr >= 0.0 {
                // (1 + det) − tr = s_k.
                Margin::exact(s_k)
            } else {
                Margin::diff(4.0 - 2.0 * s_b + s_k, 4.0 + 2.0 * s_b + s_k)
            };
            vec![m_det_hi, m_det_lo, m_tr]
        }
        Scheme::SemiImplicitEuler => {
            let alpha = 1.0 / (1.0 + s_b);
            // 1 − det = s_b/(1 + s_b); det > −1 always.
            let m_det = Margin::exact(s_b * alpha);
            let m_tr = if tr >= 0.0 {
                // (1 + det) − tr = α·s_k.
                Margin::exact(alpha * s_k)
            } else {
                Margin::diff(alpha * (4.0 + 2.0 * s_b - s_k), alpha * (4.0 + 2.0 * s_b + s_k))
            };
            vec![m_det, m_tr]
        }
        Scheme::ImplicitEuler => {
            let gamma = 1.0 / (1.0 + s_b + s_k);
            // 1 − det = (s_b + s_k)/(1 + s_b + s_k); tr ≥ 0 always.
            let m_det = Margin::exact((s_b + s_k) * gamma);
            // (1 + det) − tr = γ·s_k.
            let m_tr = Margin::exact(gamma * s_k);
            vec![m_det, m_tr]
        }
    };

    let mut class = Stability::Stable;
    for m in margins {
        match m.sign() {
            std::cmp::Ordering::Less => {
                class = Stability::Unstable;
                break;
            }
            std::cmp::Ordering::Equal => class = Stability::Marginal,
            std::cmp::Ordering::Greater => {}
        }
    }
    Ok(StabilityClass { class, rho })
}

/// Run `n` steps of the chosen scheme from `y0`; the returned trajectory has
/// length n+1 including the initial state.
///
/// The first non-finite state aborts the run with [`Error::NonFinite`]
/// carrying the step index at which it appeared.
pub fn simulate_msd(
    scheme: Scheme,
    p: &MsdParams,
    y0: MsdState,
    h: f64,
    n: usize,
) -> Result<Vec<MsdState>> {
    check_h(h)?;
    if n < 1 {
        return Err(Error::InvalidParameter("step count must be >= 1".into()));
    }
    if !y0.is_finite() {
        return Err(Error::NonFinite { step: 0 });
    }
    let MsdParams { m, k, b, f } = *p;
    let mut out = Vec::with_capacity(n + 1);
    out.push(y0);
    let mut x = y0.x;
    let mut v = y0.v;
    for step in 1..=n {
        match scheme {
            Scheme::ExplicitEuler => {
                let x1 = x + h * v;
                let v1 = v + h / m * (f - b * v - k * x);
                x = x1;
                v = v1;
            }
            Scheme::SemiImplicitEuler => {
                let v1 = (v + h / m * (f - k * x)) / (1.0 + h * b / m);
                x += h * v1;
                v = v1;
            }
            Scheme::ImplicitEuler => {
                let v1 = (v + h / m * (f - k * x)) / (1.0 + h * b / m + h * h * k / m);
                x += h * v1;
                v = v1;
            }
        }
        let y = MsdState::new(x, v);
        if !y.is_finite() {
            return Err(Error::NonFinite { step });
        }
        out.push(y);
    }
    Ok(out)
}
