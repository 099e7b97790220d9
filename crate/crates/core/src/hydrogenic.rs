//! Position-space hydrogenic radial functions and their Slater-term form.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{self, Tolerance};
use crate::specfun::{binomial, factorial, gamma_int, laguerre};

/// Action unit `ħ` and inverse length `β` fixing the momentum scale `ħβ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalScale {
    pub hbar: f64,
    pub beta: f64,
}

impl Default for PhysicalScale {
    /// Scaled units, `ħ = β = 1`.
    fn default() -> Self {
        PhysicalScale { hbar: 1.0, beta: 1.0 }
    }
}

impl PhysicalScale {
    pub fn new(hbar: f64, beta: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::InvalidScale(format!("hbar must be positive, got {hbar}")));
        }
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::InvalidScale(format!("beta must be positive, got {beta}")));
        }
        Ok(PhysicalScale { hbar, beta })
    }

    /// Scaled units with the given momentum scale `ħβ` and `ħ = 1`.
    pub fn scaled(hbar_beta: f64) -> Result<Self> {
        Self::new(1.0, hbar_beta)
    }

    /// Physical mode in atomic units (`ħ = 1`, `c = 1/α`):
    /// `β = Z μ c α / (N ħ)`, with `μ` in electron masses.
    pub fn physical(z: u32, mu: f64, alpha_fs: f64, n: u32) -> Result<Self> {
        if z == 0 || n == 0 {
            return Err(Error::InvalidScale(format!("need Z >= 1 and N >= 1, got Z = {z}, N = {n}")));
        }
        if !(alpha_fs > 0.0 && mu > 0.0) {
            return Err(Error::InvalidScale(format!("need mu > 0 and alpha > 0, got mu = {mu}, alpha = {alpha_fs}")));
        }
        let hbar = 1.0;
        let c = 1.0 / alpha_fs;
        Self::new(hbar, z as f64 * mu * c * alpha_fs / (n as f64 * hbar))
    }

    /// Momentum scale `ħβ`, equal to `ℰ_N / c`.
    pub fn momentum_scale(&self) -> f64 {
        self.hbar * self.beta
    }
}

/// A bound hydrogenic state `(N, ℓ)` at a given scale.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantumState {
    n: u32,
    l: u32,
    scale: PhysicalScale,
}

impl QuantumState {
    pub fn new(n: u32, l: u32, scale: PhysicalScale) -> Result<Self> {
        if n == 0 || l >= n {
            return Err(Error::InvalidState { n, l });
        }
        Ok(QuantumState { n, l, scale })
    }

    /// State in scaled units `ħ = β = 1`.
    pub fn scaled(n: u32, l: u32) -> Result<Self> {
        Self::new(n, l, PhysicalScale::default())
    }

    /// State with the physical, `N`-dependent `β = Z μ / N` (atomic units).
    pub fn physical(n: u32, l: u32, z: u32, mu: f64) -> Result<Self> {
        Self::new(n, l, PhysicalScale::physical(z, mu, 1.0 / 137.035_999_084, n)?)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn scale(&self) -> PhysicalScale {
        self.scale
    }

    pub fn beta(&self) -> f64 {
        self.scale.beta
    }

    pub fn hbar(&self) -> f64 {
        self.scale.hbar
    }

    /// Number of radial nodes, `N - ℓ - 1`, which is also the highest Slater index.
    pub fn radial_degree(&self) -> u32 {
        self.n - self.l - 1
    }

    pub fn with_scale(self, scale: PhysicalScale) -> Self {
        QuantumState { scale, ..self }
    }
}

/// `𝒩_{Nℓ} = (2β)^{3/2} sqrt((N-ℓ-1)! / (2N (N+ℓ)!))`.
pub fn normalization_constant(state: &QuantumState) -> f64 {
    let (n, l) = (state.n, state.l);
    let two_beta = 2.0 * state.beta();
    let ratio = factorial(n - l - 1).unwrap() / (2.0 * n as f64 * factorial(n + l).unwrap());
    (two_beta.powi(3) * ratio).sqrt()
}

/// One term `c · ρ^{ℓ+t} e^{-ρ/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlaterTerm {
    pub t: u32,
    pub coefficient: f64,
}

/// Unnormalized radial function `Σ_t c_t ρ^{ℓ+t} e^{-ρ/2}` with `ρ = 2βr`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlaterExpansion {
    pub l: u32,
    pub beta: f64,
    pub terms: Vec<SlaterTerm>,
}

impl SlaterExpansion {
    pub fn eval(&self, r: f64) -> f64 {
        let rho = 2.0 * self.beta * r;
        let poly: f64 = self
            .terms
            .iter()
            .map(|term| term.coefficient * rho.powi(term.t as i32))
            .sum();
        poly * rho.powi(self.l as i32) * (-0.5 * rho).exp()
    }

    /// Lift into a complex series over integer powers of `ρ`.
    pub fn to_series(&self, hbar: f64) -> SlaterSeries {
        let mut terms = BTreeMap::new();
        for term in &self.terms {
            terms.insert((self.l + term.t) as i32, Complex64::new(term.coefficient, 0.0));
        }
        SlaterSeries {
            beta: self.beta,
            hbar,
            terms,
        }
    }
}

/// `c_t = (-1)^t C(N+ℓ, N-ℓ-1-t) / t!` for `t = 0..=N-ℓ-1`.
pub fn slater_expansion(state: &QuantumState) -> SlaterExpansion {
    let (n, l) = (state.n, state.l);
    let terms = (0..=state.radial_degree())
        .map(|t| {
            let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
            let c = sign * binomial(n + l, (n - l - 1 - t) as i64) / factorial(t).unwrap();
            SlaterTerm { t, coefficient: c }
        })
        .collect();
    SlaterExpansion {
        l,
        beta: state.beta(),
        terms,
    }
}

/// `R_{Nℓ}(r) = 𝒩 e^{-ρ/2} ρ^ℓ L^{2ℓ+1}_{N-ℓ-1}(ρ)`, Laguerre by recurrence.
pub fn radial_wavefunction(state: &QuantumState, r: f64) -> f64 {
    let rho = 2.0 * state.beta() * r;
    normalization_constant(state)
        * (-0.5 * rho).exp()
        * rho.powi(state.l as i32)
        * laguerre(state.radial_degree(), 2 * state.l + 1, rho)
}

/// Complex linear combination `Σ_k c_k ρ^k e^{-ρ/2}` over integer `k`
/// (negative powers allowed), the image space of the radial momentum operator.
#[derive(Debug, Clone, PartialEq)]
pub struct SlaterSeries {
    pub beta: f64,
    pub hbar: f64,
    pub terms: BTreeMap<i32, Complex64>,
}

impl SlaterSeries {
    pub fn zero(beta: f64, hbar: f64) -> Self {
        SlaterSeries {
            beta,
            hbar,
            terms: BTreeMap::new(),
        }
    }

    pub fn eval(&self, r: f64) -> Complex64 {
        let rho = 2.0 * self.beta * r;
        let poly: Complex64 = self.terms.iter().map(|(&k, &c)| c * rho.powi(k)).sum();
        poly * (-0.5 * rho).exp()
    }

    /// True when a `ρ^{-1}` (or lower) piece is present.
    pub fn has_singular_terms(&self) -> bool {
        self.terms.iter().any(|(&k, c)| k < 0 && c.norm() > 0.0)
    }

    pub fn scale(&self, a: Complex64) -> Self {
        let terms = self.terms.iter().map(|(&k, &c)| (k, c * a)).collect();
        SlaterSeries { terms, ..*self }
    }

    pub fn add(&self, other: &SlaterSeries) -> Self {
        let mut terms = self.terms.clone();
        for (&k, &c) in &other.terms {
            *terms.entry(k).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        SlaterSeries { terms, ..*self }
    }

    /// Multiply by `ρ^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        let terms = self.terms.iter().map(|(&k, &c)| (k + shift, c)).collect();
        SlaterSeries { terms, ..*self }
    }

    pub fn max_coefficient(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Term-wise image under `p̂_r = -iħ (1/r) ∂_r ∘ r`:
/// `ρ^k e^{-ρ/2} ↦ -iħ 2β [(k+1) ρ^{k-1} - ρ^k / 2] e^{-ρ/2}`.
pub fn apply_radial_momentum(series: &SlaterSeries) -> SlaterSeries {
    let factor = Complex64::new(0.0, -series.hbar * 2.0 * series.beta);
    let mut out = SlaterSeries::zero(series.beta, series.hbar);
    for (&k, &c) in &series.terms {
        let lower = c * factor * (k as f64 + 1.0);
        if lower.norm() > 0.0 {
            *out.terms.entry(k - 1).or_insert(Complex64::new(0.0, 0.0)) += lower;
        }
        *out.terms.entry(k).or_insert(Complex64::new(0.0, 0.0)) += c * factor * -0.5;
    }
    out
}

/// `⟨r²⟩ = ∫ R² r⁴ dr` from the Slater expansion, term pairs integrated as Γ functions.
pub fn expectation_r2(state: &QuantumState) -> f64 {
    let exp = slater_expansion(state);
    let norm = normalization_constant(state);
    let two_beta = 2.0 * state.beta();
    let l = state.l;
    let mut sum = 0.0;
    for a in &exp.terms {
        for b in &exp.terms {
            sum += a.coefficient * b.coefficient * gamma_int(2 * l + a.t + b.t + 5).unwrap();
        }
    }
    norm * norm * sum / two_beta.powi(5)
}

/// `⟨p²⟩ = ∫ p⁴ 𝒢²(p) dp` from the Podolsky–Pauling function, by quadrature.
pub fn expectation_p2(state: &QuantumState) -> Result<f64> {
    let g = |p: f64| {
        let v = crate::momentum::podolsky_pauling_g(state, p);
        p.powi(4) * v * v
    };
    let tol = Tolerance {
        abs_tol: 1e-15,
        rel_tol: 1e-13,
        max_panels: 20_000,
    };
    Ok(quadrature::integrate_half_line(&g, state.scale.momentum_scale(), tol)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn state_validation() {
        assert!(QuantumState::scaled(0, 0).is_err());
        assert!(QuantumState::scaled(2, 2).is_err());
        assert!(QuantumState::scaled(3, 2).is_ok());
        assert!(PhysicalScale::new(0.0, 1.0).is_err());
        assert!(PhysicalScale::new(1.0, -1.0).is_err());
        assert!(PhysicalScale::physical(0, 1.0, 0.0073, 1).is_err());
    }

    #[test]
    fn physical_scale_is_z_mu_over_n() {
        let s = PhysicalScale::physical(2, 1.0, 1.0 / 137.036, 4).unwrap();
        assert_relative_eq!(s.beta, 0.5, epsilon = 1e-15);
        assert_eq!(s.hbar, 1.0);
    }

    #[test]
    fn normalization_values() {
        assert_eq!(normalization_constant(&QuantumState::scaled(1, 0).unwrap()), 2.0);
        let n21 = normalization_constant(&QuantumState::scaled(2, 1).unwrap());
        assert_relative_eq!(n21, 2f64.powf(1.5) / (2.0 * 6f64.sqrt()), epsilon = 1e-15);
        assert_relative_eq!(n21, 0.5773502691896258, epsilon = 1e-15);
        let full = normalization_constant(&QuantumState::scaled(2, 0).unwrap());
        let half = normalization_constant(&QuantumState::new(2, 0, PhysicalScale::new(1.0, 0.5).unwrap()).unwrap());
        assert_relative_eq!(half / full, 0.5f64.powf(1.5), epsilon = 1e-15);
    }

    #[test]
    fn slater_coefficients() {
        let e = slater_expansion(&QuantumState::scaled(1, 0).unwrap());
        assert_eq!(e.terms, vec![SlaterTerm { t: 0, coefficient: 1.0 }]);
        // L_1^1(ρ) = 2 - ρ
        let e = slater_expansion(&QuantumState::scaled(2, 0).unwrap());
        assert_eq!(
            e.terms,
            vec![SlaterTerm { t: 0, coefficient: 2.0 }, SlaterTerm { t: 1, coefficient: -1.0 }]
        );
        let e = slater_expansion(&QuantumState::scaled(2, 1).unwrap());
        assert_eq!(e.terms, vec![SlaterTerm { t: 0, coefficient: 1.0 }]);
    }

    #[test]
    fn slater_coefficients_alternate() {
        for n in 1..=8 {
            for l in 0..n {
                let e = slater_expansion(&QuantumState::scaled(n, l).unwrap());
                assert_eq!(e.terms.len() as u32, n - l);
                for w in e.terms.windows(2) {
                    assert!(w[0].coefficient * w[1].coefficient < 0.0);
                }
            }
        }
    }

    #[test]
    fn slater_sum_matches_laguerre_form() {
        for n in 1..=8 {
            for l in 0..n {
                let s = QuantumState::scaled(n, l).unwrap();
                let e = slater_expansion(&s);
                let norm = normalization_constant(&s);
                for i in 1..60 {
                    let r = 0.25 * i as f64;
                    let want = radial_wavefunction(&s, r) / norm;
                    let got = e.eval(r);
                    // relative to the term magnitudes, so nodes don't blow up the ratio
                    let rho = 2.0 * r;
                    let size: f64 = e
                        .terms
                        .iter()
                        .map(|t| (t.coefficient * rho.powi((l + t.t) as i32)).abs())
                        .sum::<f64>()
                        * (-0.5 * rho).exp();
                    assert!((got - want).abs() <= 1e-12 * size, "N={n} l={l} r={r}");
                }
            }
        }
    }

    #[test]
    fn radial_wavefunction_values() {
        let s10 = QuantumState::scaled(1, 0).unwrap();
        assert_eq!(radial_wavefunction(&s10, 0.0), 2.0);
        assert_eq!(radial_wavefunction(&QuantumState::scaled(2, 1).unwrap(), 0.0), 0.0);
    }

    #[test]
    fn radial_normalization_by_quadrature() {
        for n in 1..=6 {
            for l in 0..n {
                for beta in [1.0, 0.37] {
                    let s = QuantumState::new(n, l, PhysicalScale::new(1.0, beta).unwrap()).unwrap();
                    let f = |r: f64| {
                        let v = radial_wavefunction(&s, r);
                        v * v * r * r
                    };
                    let norm = quadrature::integrate_half_line(&f, 1.0 / beta, Tolerance::default())
                        .unwrap()
                        .value;
                    assert_relative_eq!(norm, 1.0, epsilon = 1e-11);
                }
            }
        }
    }

    #[test]
    fn radial_momentum_single_term() {
        // ρ e^{-ρ/2} with β = 1 ↦ -2i (2 - ρ/2) e^{-ρ/2}
        let series = SlaterSeries {
            beta: 1.0,
            hbar: 1.0,
            terms: [(1, Complex64::new(1.0, 0.0))].into_iter().collect(),
        };
        let out = apply_radial_momentum(&series);
        assert_eq!(out.terms[&0], Complex64::new(0.0, -4.0));
        assert_eq!(out.terms[&1], Complex64::new(0.0, 1.0));
        assert!(!out.has_singular_terms());
    }

    #[test]
    fn radial_momentum_flags_inverse_power() {
        let s = QuantumState::scaled(1, 0).unwrap();
        let out = apply_radial_momentum(&slater_expansion(&s).to_series(1.0));
        assert!(out.has_singular_terms());
        // applying again: the ρ^{-2} coefficient carries (k+1) = 0 and vanishes
        let twice = apply_radial_momentum(&out);
        assert!(twice.terms.keys().all(|&k| k >= -1));
    }

    #[test]
    fn radial_momentum_matches_finite_differences() {
        let s = QuantumState::new(3, 1, PhysicalScale::new(1.0, 0.7).unwrap()).unwrap();
        let series = slater_expansion(&s).to_series(1.0);
        let image = apply_radial_momentum(&series);
        let f = |r: f64| series.eval(r).re;
        for &r in &[0.3, 1.0, 2.5, 7.0] {
            let h = 1e-5;
            let d = (f(r + h) - f(r - h)) / (2.0 * h);
            let want = Complex64::new(0.0, -1.0) * (d + f(r) / r);
            assert!((image.eval(r) - want).norm() < 1e-8, "r = {r}");
        }
    }

    #[test]
    fn radial_momentum_is_linear() {
        let a = slater_expansion(&QuantumState::scaled(3, 0).unwrap()).to_series(1.0);
        let b = slater_expansion(&QuantumState::scaled(3, 1).unwrap()).to_series(1.0);
        let (ca, cb) = (Complex64::new(0.5, -1.5), Complex64::new(2.0, 0.25));
        let lhs = apply_radial_momentum(&a.scale(ca).add(&b.scale(cb)));
        let rhs = apply_radial_momentum(&a).scale(ca).add(&apply_radial_momentum(&b).scale(cb));
        for &r in &[0.1, 0.9, 4.0] {
            assert!((lhs.eval(r) - rhs.eval(r)).norm() < 1e-13);
        }
    }

    /// `[p̂²/2 + ℓ(ℓ+1)/(2r²) - Z/r] R = E R` in atomic units with `β = Z/N`.
    fn schroedinger_residual(state: &QuantumState, z: f64) -> SlaterSeries {
        let beta = state.beta();
        let l = state.l() as f64;
        let energy = -0.5 * beta * beta;
        let r_series = slater_expansion(state).to_series(1.0).scale(Complex64::new(normalization_constant(state), 0.0));
        let kinetic = apply_radial_momentum(&apply_radial_momentum(&r_series)).scale(Complex64::new(0.5, 0.0));
        // 1/r = 2β / ρ
        let centrifugal = r_series.shift(-2).scale(Complex64::new(l * (l + 1.0) * 4.0 * beta * beta / 2.0, 0.0));
        let coulomb = r_series.shift(-1).scale(Complex64::new(-z * 2.0 * beta, 0.0));
        let rhs = r_series.scale(Complex64::new(-energy, 0.0));
        kinetic.add(&centrifugal).add(&coulomb).add(&rhs)
    }

    #[test]
    fn radial_equation_residual_vanishes() {
        for n in 1..=4u32 {
            for l in 0..n {
                let z = 1.0;
                let s = QuantumState::physical(n, l, 1, 1.0).unwrap();
                let residual = schroedinger_residual(&s, z);
                let max_r = (1..=200)
                    .map(|i| radial_wavefunction(&s, 0.1 * i as f64).abs())
                    .fold(0.0, f64::max);
                for i in 1..=200 {
                    let r = 0.1 * i as f64;
                    assert!(residual.eval(r).norm() <= 1e-9 * max_r, "N={n} l={l} r={r}");
                }
                // and coefficient-wise
                let scale = slater_expansion(&s).to_series(1.0).max_coefficient() * normalization_constant(&s);
                assert!(residual.max_coefficient() <= 1e-12 * scale.max(1.0));
            }
        }
    }

    #[test]
    fn orthonormal_in_physical_mode() {
        // β_N = Z/N differs per level; that is what makes the levels orthogonal.
        for l in 0..4u32 {
            for n1 in (l + 1)..=5 {
                for n2 in (l + 1)..=5 {
                    let a = QuantumState::physical(n1, l, 1, 1.0).unwrap();
                    let b = QuantumState::physical(n2, l, 1, 1.0).unwrap();
                    let f = |r: f64| radial_wavefunction(&a, r) * radial_wavefunction(&b, r) * r * r;
                    let v = quadrature::integrate_half_line(&f, 5.0, Tolerance::default()).unwrap().value;
                    let want = if n1 == n2 { 1.0 } else { 0.0 };
                    assert!((v - want).abs() < 1e-9, "N={n1},{n2} l={l}: {v}");
                }
            }
        }
    }

    #[test]
    fn shared_beta_does_not_give_orthogonality() {
        let a = QuantumState::scaled(1, 0).unwrap();
        let b = QuantumState::scaled(2, 0).unwrap();
        let f = |r: f64| radial_wavefunction(&a, r) * radial_wavefunction(&b, r) * r * r;
        let v = quadrature::integrate_half_line(&f, 1.0, Tolerance::default()).unwrap().value;
        assert!(v.abs() > 0.1);
    }

    #[test]
    fn r2_expectation() {
        assert_relative_eq!(expectation_r2(&QuantumState::scaled(1, 0).unwrap()), 3.0, epsilon = 1e-14);
        let s = QuantumState::new(1, 0, PhysicalScale::new(1.0, 2.0).unwrap()).unwrap();
        assert_relative_eq!(expectation_r2(&s), 0.75, epsilon = 1e-14);
        // single Slater term (2,1): 𝒩² Γ(7) / (2β)^5 = 720 / (3 · 32)
        assert_relative_eq!(expectation_r2(&QuantumState::scaled(2, 1).unwrap()), 7.5, epsilon = 1e-13);
        // closed form (5N² + 1 - 3ℓ(ℓ+1)) / (2β²)
        for n in 1..=8u32 {
            for l in 0..n {
                let s = QuantumState::scaled(n, l).unwrap();
                let want = (5 * n * n + 1 - 3 * l * (l + 1)) as f64 / 2.0;
                assert_relative_eq!(expectation_r2(&s), want, max_relative = 1e-11);
            }
        }
    }

    #[test]
    fn r2_expectation_by_quadrature() {
        let s = QuantumState::new(3, 1, PhysicalScale::new(1.0, 0.6).unwrap()).unwrap();
        let f = |r: f64| {
            let v = radial_wavefunction(&s, r);
            v * v * r.powi(4)
        };
        let v = quadrature::integrate_half_line(&f, 3.0, Tolerance::default()).unwrap().value;
        assert_relative_eq!(expectation_r2(&s), v, max_relative = 1e-11);
    }

    #[test]
    fn p2_expectation() {
        assert_relative_eq!(expectation_p2(&QuantumState::scaled(1, 0).unwrap()).unwrap(), 1.0, epsilon = 1e-11);
        let s = QuantumState::new(2, 1, PhysicalScale::new(1.5, 0.8).unwrap()).unwrap();
        let hb = 1.5 * 0.8;
        assert_relative_eq!(expectation_p2(&s).unwrap(), hb * hb, max_relative = 1e-10);
        let product = expectation_r2(&QuantumState::scaled(1, 0).unwrap())
            * expectation_p2(&QuantumState::scaled(1, 0).unwrap()).unwrap();
        assert!(product >= 9.0 / 4.0);
    }
}
