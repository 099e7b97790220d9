//! The spherical-wave radial transform
//! `(ℋφ)(p) = ∫_0^∞ φ(r) (e^{∓ipr/ħ} / r) r² dr`.
//!
//! Two evaluation paths: adaptive quadrature for arbitrary decaying or
//! compactly supported radial functions, and the exact sine/cosine
//! integrals for single Slater terms.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hydrogenic::{normalization_constant, slater_expansion, PhysicalScale, QuantumState, SlaterExpansion};
use crate::quadrature::{self, Tolerance};
use crate::specfun::gamma_int;

/// Spherical wave used as kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelSign {
    /// `e^{+ipr/ħ} / r`
    Outgoing,
    /// `e^{-ipr/ħ} / r`
    Incoming,
}

/// Constant phase in front of the kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhasePrefactor {
    /// Kernel written as `(p/ħ) h_0(pr/ħ)`: the spherical Hankel form
    /// without its leading `∓i`, i.e. `±i e^{∓ipr/ħ} / r`.
    PaperSection4,
    /// Kernel `e^{∓ipr/ħ} / r` exactly.
    StrictTheorem1,
}

/// Kernel sign and phase convention of the transform.
///
/// Every closed form in this crate has a native convention; values move
/// between conventions by conjugation and a unit phase, which is what
/// [`TransformConvention::orient`] and [`TransformConvention::convert`] do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransformConvention {
    pub kernel_sign: KernelSign,
    pub phase_prefactor: PhasePrefactor,
}

impl Default for TransformConvention {
    fn default() -> Self {
        TransformConvention {
            kernel_sign: KernelSign::Incoming,
            phase_prefactor: PhasePrefactor::PaperSection4,
        }
    }
}

impl TransformConvention {
    pub const OUTGOING_STRICT: TransformConvention = TransformConvention {
        kernel_sign: KernelSign::Outgoing,
        phase_prefactor: PhasePrefactor::StrictTheorem1,
    };
    pub const INCOMING_STRICT: TransformConvention = TransformConvention {
        kernel_sign: KernelSign::Incoming,
        phase_prefactor: PhasePrefactor::StrictTheorem1,
    };
    pub const INCOMING_SECTION4: TransformConvention = TransformConvention {
        kernel_sign: KernelSign::Incoming,
        phase_prefactor: PhasePrefactor::PaperSection4,
    };

    /// Constant multiplying the strict kernel.
    pub fn prefactor(&self) -> Complex64 {
        match (self.kernel_sign, self.phase_prefactor) {
            (_, PhasePrefactor::StrictTheorem1) => Complex64::new(1.0, 0.0),
            // e^{-ix}/x = -i x h0⁽²⁾(x)/x; dropping -i leaves i e^{-ix}/x
            (KernelSign::Incoming, PhasePrefactor::PaperSection4) => Complex64::new(0.0, 1.0),
            // e^{ix}/x = i x h0⁽¹⁾(x)/x; dropping i leaves -i e^{ix}/x
            (KernelSign::Outgoing, PhasePrefactor::PaperSection4) => Complex64::new(0.0, -1.0),
        }
    }

    /// Sign `s` of the kernel exponent `e^{i s p r/ħ}`.
    pub fn exponent_sign(&self) -> f64 {
        match self.kernel_sign {
            KernelSign::Outgoing => 1.0,
            KernelSign::Incoming => -1.0,
        }
    }

    /// Map the transform of a real function taken with the outgoing strict
    /// kernel onto this convention.
    pub fn orient(&self, outgoing_strict: Complex64) -> Complex64 {
        let v = match self.kernel_sign {
            KernelSign::Outgoing => outgoing_strict,
            KernelSign::Incoming => outgoing_strict.conj(),
        };
        self.prefactor() * v
    }

    /// Inverse of [`orient`](Self::orient).
    pub fn unorient(&self, value: Complex64) -> Complex64 {
        let v = value / self.prefactor();
        match self.kernel_sign {
            KernelSign::Outgoing => v,
            KernelSign::Incoming => v.conj(),
        }
    }

    /// Re-express a value of a real function's transform from `self` to `target`.
    pub fn convert(&self, value: Complex64, target: TransformConvention) -> Complex64 {
        target.orient(self.unorient(value))
    }

    /// Eigenvalue sign of `p̂_r` on the kernel: `ℋ(p̂φ) = sign · p · ℋφ`.
    pub fn diagonal_sign(&self) -> f64 {
        -self.exponent_sign()
    }
}

/// Quadrature controls for the numeric transform path.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Truncation radius `r_max` for functions supported on the whole half-line.
    pub max_radius: f64,
    pub panel_budget: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-12,
            abs_tol: 1e-13,
            max_radius: 100.0,
            panel_budget: 400_000,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0 && self.max_radius > 0.0 && self.panel_budget > 0) {
            return Err(Error::Precondition(format!("invalid quadrature spec {self:?}")));
        }
        Ok(())
    }

    /// Same tolerances, with the truncation radius chosen from the analytic
    /// tail bound of `∫ |R(r)| r dr` so the neglected tail is below `abs_tol / 10`.
    pub fn truncated_for(&self, state: &QuantumState) -> Self {
        let exp = slater_expansion(state);
        let norm = normalization_constant(state);
        let two_beta = 2.0 * state.beta();
        let budget = self.abs_tol / 10.0;
        // ∫_X^∞ ρ^m e^{-ρ/2} dρ ≤ 2 X^m e^{-X/2} / (1 - 2m/X) for X > 2m
        let tail = |x: f64| -> f64 {
            exp.terms
                .iter()
                .map(|term| {
                    let m = (exp.l + term.t + 1) as f64;
                    let bound = 2.0 * (m * x.ln() - 0.5 * x).exp() / (1.0 - 2.0 * m / x);
                    term.coefficient.abs() * bound
                })
                .sum::<f64>()
                * norm
                / (two_beta * two_beta)
        };
        let m_max = (exp.l + state.radial_degree() + 1) as f64;
        let mut x = 2.0 * m_max + 4.0;
        while tail(x) > budget {
            x += 1.0;
        }
        QuadratureSpec {
            max_radius: x / two_beta,
            ..*self
        }
    }

    fn tolerance(&self) -> Tolerance {
        Tolerance {
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            max_panels: self.panel_budget,
        }
    }
}

/// Where a radial function is nonzero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Support {
    /// Decays on `(0, ∞)`; integrated up to the spec's truncation radius.
    HalfLine,
    /// Vanishes outside `[a, b]`.
    Compact(f64, f64),
}

/// A real radial function `φ(r)`.
pub trait RadialFunction: Sync {
    fn value(&self, r: f64) -> f64;

    fn support(&self) -> Support {
        Support::HalfLine
    }
}

impl<F> RadialFunction for F
where
    F: Fn(f64) -> f64 + Sync,
{
    fn value(&self, r: f64) -> f64 {
        self(r)
    }
}

/// A test function with closed-form derivative and compact support away from the origin.
pub trait CompactTestFunction: Sync {
    fn support(&self) -> (f64, f64);
    fn value(&self, r: f64) -> f64;
    fn derivative(&self, r: f64) -> f64;
}

/// `(r-a)²(b-r)²` on `[a, b]`.
#[derive(Debug, Clone, Copy)]
pub struct PolynomialBump {
    pub a: f64,
    pub b: f64,
}

impl CompactTestFunction for PolynomialBump {
    fn support(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    fn value(&self, r: f64) -> f64 {
        if r <= self.a || r >= self.b {
            return 0.0;
        }
        let (u, v) = (r - self.a, self.b - r);
        u * u * v * v
    }

    fn derivative(&self, r: f64) -> f64 {
        if r <= self.a || r >= self.b {
            return 0.0;
        }
        let (u, v) = (r - self.a, self.b - r);
        2.0 * u * v * (v - u)
    }
}

/// `sin²(π (r-a)/(b-a))` on `[a, b]`.
#[derive(Debug, Clone, Copy)]
pub struct SineBump {
    pub a: f64,
    pub b: f64,
}

impl CompactTestFunction for SineBump {
    fn support(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    fn value(&self, r: f64) -> f64 {
        if r <= self.a || r >= self.b {
            return 0.0;
        }
        (PI * (r - self.a) / (self.b - self.a)).sin().powi(2)
    }

    fn derivative(&self, r: f64) -> f64 {
        if r <= self.a || r >= self.b {
            return 0.0;
        }
        let k = PI / (self.b - self.a);
        k * (2.0 * k * (r - self.a)).sin()
    }
}

/// Smooth bump `exp(-1 / ((r-a)(b-r)))` on `[a, b]`.
#[derive(Debug, Clone, Copy)]
pub struct SmoothBump {
    pub a: f64,
    pub b: f64,
}

impl CompactTestFunction for SmoothBump {
    fn support(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    fn value(&self, r: f64) -> f64 {
        if r <= self.a || r >= self.b {
            return 0.0;
        }
        (-1.0 / ((r - self.a) * (self.b - r))).exp()
    }

    fn derivative(&self, r: f64) -> f64 {
        if r <= self.a || r >= self.b {
            return 0.0;
        }
        let q = (r - self.a) * (self.b - r);
        let dq = self.b + self.a - 2.0 * r;
        self.value(r) * dq / (q * q)
    }
}

/// Scalar multiple of another test function.
#[derive(Debug, Clone, Copy)]
pub struct Scaled<T> {
    pub factor: f64,
    pub inner: T,
}

impl<T: CompactTestFunction> CompactTestFunction for Scaled<T> {
    fn support(&self) -> (f64, f64) {
        self.inner.support()
    }

    fn value(&self, r: f64) -> f64 {
        self.factor * self.inner.value(r)
    }

    fn derivative(&self, r: f64) -> f64 {
        self.factor * self.inner.derivative(r)
    }
}

/// The radial transform under one convention, scale and quadrature setting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialTransform {
    pub convention: TransformConvention,
    pub spec: QuadratureSpec,
    pub hbar: f64,
}

impl RadialTransform {
    pub fn new(convention: TransformConvention, spec: QuadratureSpec, hbar: f64) -> Self {
        RadialTransform { convention, spec, hbar }
    }

    fn initial_panels(&self, a: f64, b: f64, p: f64) -> usize {
        let k = p.abs() / self.hbar;
        // about one panel per half period, plus a floor for the decay scale
        let oscillation = ((b - a) * k / PI).ceil() as usize;
        (oscillation + 8).min(self.spec.panel_budget / 2).max(1)
    }

    /// `∫_a^b g(r) e^{i s p r/ħ} r dr` times the convention prefactor.
    fn integrate_kernel<G>(&self, g: &G, a: f64, b: f64, p: f64) -> Result<Complex64>
    where
        G: Fn(f64) -> Complex64 + ?Sized,
    {
        let k = self.convention.exponent_sign() * p / self.hbar;
        let integrand = |r: f64| g(r) * Complex64::from_polar(r, k * r);
        let est = quadrature::integrate(&integrand, a, b, self.initial_panels(a, b, p), self.spec.tolerance())?;
        Ok(self.convention.prefactor() * est.value)
    }

    /// Numeric transform of a real radial function at momentum `p`.
    pub fn apply<F: RadialFunction + ?Sized>(&self, f: &F, p: f64) -> Result<Complex64> {
        self.spec.validate()?;
        let (a, b) = match f.support() {
            Support::HalfLine => (0.0, self.spec.max_radius),
            Support::Compact(a, b) => (a, b),
        };
        self.integrate_kernel(&|r: f64| Complex64::new(f.value(r), 0.0), a, b, p)
    }

    /// Numeric transform of `p̂_r φ = -iħ(φ' + φ/r)` for a compact test function.
    pub fn apply_momentum_image<T: CompactTestFunction + ?Sized>(&self, f: &T, p: f64) -> Result<Complex64> {
        let (a, b) = f.support();
        let hbar = self.hbar;
        let g = |r: f64| Complex64::new(0.0, -hbar) * (f.derivative(r) + f.value(r) / r);
        self.integrate_kernel(&g, a, b, p)
    }

    /// `max_p |ℋ(p̂φ)(p) - s·p·(ℋφ)(p)|` over the grid, with `s` the kernel's eigenvalue sign.
    pub fn diagonalization_residual<T: CompactTestFunction + ?Sized>(&self, f: &T, grid: &[f64]) -> Result<f64> {
        let (a, b) = f.support();
        if !(a > 0.0 && b > a && b.is_finite()) {
            return Err(Error::Precondition(format!(
                "test function support [{a}, {b}] must be bounded and bounded away from 0"
            )));
        }
        if grid.is_empty() {
            return Err(Error::Grid("empty momentum grid".into()));
        }
        struct Plain<'a, T: ?Sized>(&'a T);
        impl<T: CompactTestFunction + ?Sized> RadialFunction for Plain<'_, T> {
            fn value(&self, r: f64) -> f64 {
                self.0.value(r)
            }
            fn support(&self) -> Support {
                let (a, b) = self.0.support();
                Support::Compact(a, b)
            }
        }
        let sign = self.convention.diagonal_sign();
        let mut worst = 0.0_f64;
        for &p in grid {
            let lhs = self.apply_momentum_image(f, p)?;
            let rhs = self.apply(&Plain(f), p)? * (sign * p);
            worst = worst.max((lhs - rhs).norm());
        }
        Ok(worst)
    }

    /// Position- and momentum-side squared norms of a normalized Slater expansion.
    ///
    /// Position side: `∫ |f|² r² dr`. Momentum side: `(1/2πħ) ∫_ℝ |ℋf|² dp`,
    /// with `ℋf` assembled term by term from the exact Slater transforms.
    pub fn parseval_check(&self, expansion: &SlaterExpansion, normalization: f64) -> Result<(f64, f64)> {
        let tol = Tolerance {
            abs_tol: 1e-16,
            rel_tol: 1e-13,
            max_panels: 50_000,
        };
        let beta = expansion.beta;
        let pos = |r: f64| {
            let v = normalization * expansion.eval(r);
            v * v * r * r
        };
        let position = quadrature::integrate_half_line(&pos, 1.0 / beta, tol)?.value;
        let scale = PhysicalScale {
            hbar: self.hbar,
            beta,
        };
        let mom = |p: f64| slater_transform_closed(expansion, normalization, p, &scale).norm_sqr();
        let momentum = quadrature::integrate_real_line(&mom, self.hbar * beta, tol)?.value / (2.0 * PI * self.hbar);
        Ok((position, momentum))
    }
}

/// One-shot numeric transform of `f` at `p`.
pub fn transform_numeric<F: RadialFunction + ?Sized>(
    f: &F,
    p: f64,
    convention: TransformConvention,
    spec: &QuadratureSpec,
    hbar: f64,
) -> Result<Complex64> {
    RadialTransform::new(convention, *spec, hbar).apply(f, p)
}

/// Exact `∫_0^∞ ρ^n e^{-ρ/2} e^{ibρ} dρ = Γ(n+1) e^{i(n+1)θ} / (1/4 + b²)^{(n+1)/2}`
/// with `n = ℓ + t + 1`, `b = p/(2ħβ)`, `θ = atan(2b)`.
pub fn transform_slater_closed(l_plus_t: u32, p: f64, scale: &PhysicalScale) -> Complex64 {
    let n = l_plus_t + 1;
    let b = p / (2.0 * scale.hbar * scale.beta);
    let alpha = 0.5;
    let theta = (b / alpha).atan();
    let modulus = gamma_int(n + 1).unwrap() / (alpha * alpha + b * b).powf((n as f64 + 1.0) / 2.0);
    Complex64::from_polar(modulus, (n as f64 + 1.0) * theta)
}

/// `∫_0^∞ f(r) e^{ipr/ħ} r dr` for `f = 𝒩 · expansion`, assembled from
/// [`transform_slater_closed`] (outgoing strict convention).
pub fn slater_transform_closed(expansion: &SlaterExpansion, normalization: f64, p: f64, scale: &PhysicalScale) -> Complex64 {
    let two_beta = 2.0 * expansion.beta;
    let sum: Complex64 = expansion
        .terms
        .iter()
        .map(|term| term.coefficient * transform_slater_closed(expansion.l + term.t, p, scale))
        .sum();
    sum * normalization / (two_beta * two_beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn strict(conv: KernelSign) -> RadialTransform {
        RadialTransform::new(
            TransformConvention {
                kernel_sign: conv,
                phase_prefactor: PhasePrefactor::StrictTheorem1,
            },
            QuadratureSpec::default(),
            1.0,
        )
    }

    #[test]
    fn exponential_at_zero_momentum() {
        let t = strict(KernelSign::Incoming);
        let v = t.apply(&|r: f64| (-r / 2.0).exp(), 0.0).unwrap();
        assert!((v - Complex64::new(4.0, 0.0)).norm() < 1e-11);
    }

    #[test]
    fn exponential_matches_closed_form() {
        // e^{-r/2} = ρ^0 e^{-ρ/2} at β = 1/2, so ∫ f e^{ipr} r dr = closed(0, p) / (2β)²
        let scale = PhysicalScale::new(1.0, 0.5).unwrap();
        let out = strict(KernelSign::Outgoing);
        for &p in &[0.0, 0.3, 1.0, 4.0] {
            let v = out.apply(&|r: f64| (-r / 2.0).exp(), p).unwrap();
            let closed = transform_slater_closed(0, p, &scale);
            assert!((v - closed).norm() < 1e-10 * (1.0 + closed.norm()), "p = {p}");
        }
        // the p = 1 value is 1/(1/2 - i)²
        let v = out.apply(&|r: f64| (-r / 2.0).exp(), 1.0).unwrap();
        assert!((v - Complex64::new(0.5, -1.0).powi(-2)).norm() < 1e-11);
    }

    #[test]
    fn closed_form_special_values() {
        let unit = PhysicalScale::default();
        let v = transform_slater_closed(0, 0.0, &unit);
        assert_eq!(v, Complex64::new(4.0, 0.0));
        // b = α ↔ θ = π/4
        let v = transform_slater_closed(0, 1.0, &unit);
        assert_relative_eq!(v.arg(), PI / 2.0, epsilon = 1e-15);
        assert_relative_eq!(v.norm(), 1.0 / 0.5, epsilon = 1e-14);
    }

    #[test]
    fn closed_form_matches_quadrature_for_slater_terms() {
        let unit = PhysicalScale::default();
        let t = strict(KernelSign::Outgoing);
        for k in 0..=10u32 {
            let f = move |r: f64| {
                let rho = 2.0 * r;
                rho.powi(k as i32) * (-rho / 2.0).exp()
            };
            // ∫|f| r dr; double-precision sampling cannot resolve the
            // oscillatory integral below a small multiple of eps times this
            let l1 = gamma_int(k + 2).unwrap() * 2f64.powi(k as i32 + 2) / 4.0;
            for &p in &[0.0, 0.1, 1.0, 5.0, 20.0] {
                let closed = transform_slater_closed(k, p, &unit) / 4.0;
                let numeric = t.apply(&f, p).unwrap();
                let bound = 1e-9 * (1.0 + closed.norm()) + 1e-14 * l1;
                assert!((numeric - closed).norm() <= bound, "k={k} p={p}");
                if k <= 4 {
                    assert!((numeric - closed).norm() <= 1e-9 * (1.0 + closed.norm()), "k={k} p={p}");
                }
            }
        }
    }

    #[test]
    fn conjugate_symmetry() {
        let t = RadialTransform::new(TransformConvention::INCOMING_STRICT, QuadratureSpec::default(), 1.0);
        let f = PolynomialBump { a: 1.0, b: 2.0 };
        struct W(PolynomialBump);
        impl RadialFunction for W {
            fn value(&self, r: f64) -> f64 {
                self.0.value(r)
            }
            fn support(&self) -> Support {
                Support::Compact(1.0, 2.0)
            }
        }
        for &p in &[0.5, 3.0, 9.0] {
            let plus = t.apply(&W(f), p).unwrap();
            let minus = t.apply(&W(f), -p).unwrap();
            assert!((plus - minus.conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn convention_orientation_roundtrip() {
        let z = Complex64::new(0.3, -1.7);
        for sign in [KernelSign::Incoming, KernelSign::Outgoing] {
            for phase in [PhasePrefactor::PaperSection4, PhasePrefactor::StrictTheorem1] {
                let c = TransformConvention {
                    kernel_sign: sign,
                    phase_prefactor: phase,
                };
                assert!((c.unorient(c.orient(z)) - z).norm() < 1e-15);
                assert!((TransformConvention::OUTGOING_STRICT.convert(z, c) - c.orient(z)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn orientation_matches_numeric_kernels() {
        let scale = PhysicalScale::new(1.0, 0.5).unwrap();
        let f = |r: f64| (-r / 2.0).exp();
        for sign in [KernelSign::Incoming, KernelSign::Outgoing] {
            for phase in [PhasePrefactor::PaperSection4, PhasePrefactor::StrictTheorem1] {
                let conv = TransformConvention {
                    kernel_sign: sign,
                    phase_prefactor: phase,
                };
                let t = RadialTransform::new(conv, QuadratureSpec::default(), 1.0);
                let v = t.apply(&f, 0.8).unwrap();
                let want = conv.orient(transform_slater_closed(0, 0.8, &scale));
                assert!((v - want).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn diagonalization_polynomial_bump() {
        let t = RadialTransform::new(TransformConvention::default(), QuadratureSpec::default(), 1.0);
        let grid: Vec<f64> = (0..=40).map(|i| -10.0 + 0.5 * i as f64).collect();
        let bump = PolynomialBump { a: 1.0, b: 2.0 };
        let res = t.diagonalization_residual(&bump, &grid).unwrap();
        assert!(res <= 1e-8, "residual {res}");
        // p = 0: the transform of p̂φ must itself vanish
        let at_zero = t.apply_momentum_image(&bump, 0.0).unwrap();
        assert!(at_zero.norm() <= 1e-12);
    }

    #[test]
    fn diagonalization_scales_linearly() {
        let t = RadialTransform::new(TransformConvention::OUTGOING_STRICT, QuadratureSpec::default(), 1.0);
        let grid = [-3.0, 0.7, 6.0];
        let base = SineBump { a: 0.5, b: 3.0 };
        let r1 = t.diagonalization_residual(&base, &grid).unwrap();
        let r5 = t
            .diagonalization_residual(&Scaled { factor: -5.0, inner: base }, &grid)
            .unwrap();
        assert!(r1 < 1e-9 && r5 < 5e-9);
        // the identity fails visibly with the wrong eigenvalue sign
        let f = SmoothBump { a: 2.0, b: 5.0 };
        struct Plain(SmoothBump);
        impl RadialFunction for Plain {
            fn value(&self, r: f64) -> f64 {
                self.0.value(r)
            }
            fn support(&self) -> Support {
                Support::Compact(2.0, 5.0)
            }
        }
        let lhs = t.apply_momentum_image(&f, 1.0).unwrap();
        let wrong = t.apply(&Plain(f), 1.0).unwrap();
        assert!((lhs - wrong).norm() > 1e-3);
    }

    #[test]
    fn diagonalization_precondition() {
        let t = RadialTransform::new(TransformConvention::default(), QuadratureSpec::default(), 1.0);
        assert!(matches!(
            t.diagonalization_residual(&PolynomialBump { a: 0.0, b: 1.0 }, &[1.0]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            t.diagonalization_residual(&PolynomialBump { a: 1.0, b: 2.0 }, &[]),
            Err(Error::Grid(_))
        ));
    }

    #[test]
    fn test_function_derivatives() {
        let fs: Vec<Box<dyn CompactTestFunction>> = vec![
            Box::new(PolynomialBump { a: 1.0, b: 2.0 }),
            Box::new(SineBump { a: 0.5, b: 3.0 }),
            Box::new(SmoothBump { a: 2.0, b: 5.0 }),
        ];
        for f in &fs {
            let (a, b) = f.support();
            for i in 1..20 {
                let r = a + (b - a) * i as f64 / 20.0;
                let h = 1e-6;
                let fd = (f.value(r + h) - f.value(r - h)) / (2.0 * h);
                assert!((fd - f.derivative(r)).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn parseval_ground_state_and_zero() {
        let t = RadialTransform::new(TransformConvention::default(), QuadratureSpec::default(), 1.0);
        let s = QuantumState::scaled(1, 0).unwrap();
        let (pos, mom) = t.parseval_check(&slater_expansion(&s), normalization_constant(&s)).unwrap();
        assert_relative_eq!(pos, 1.0, epsilon = 1e-10);
        assert_relative_eq!(mom, 1.0, epsilon = 1e-10);
        let (pos, mom) = t.parseval_check(&slater_expansion(&s), 0.0).unwrap();
        assert_eq!((pos, mom), (0.0, 0.0));
    }

    #[test]
    fn truncation_radius_grows_with_degree() {
        let spec = QuadratureSpec::default();
        let a = spec.truncated_for(&QuantumState::scaled(1, 0).unwrap()).max_radius;
        let b = spec.truncated_for(&QuantumState::scaled(5, 0).unwrap()).max_radius;
        let c = spec
            .truncated_for(&QuantumState::new(1, 0, PhysicalScale::new(1.0, 0.25).unwrap()).unwrap())
            .max_radius;
        assert!(b > a);
        // ρ_max is nearly scale-free, so r_max grows like 1/β
        assert!(c > 3.5 * a && c < 4.5 * a);
    }
}
