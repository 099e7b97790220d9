//! Closed-form radial momentum wave functions.
//!
//! The Gegenbauer, 𝒟-function, trigonometric and Ferrers forms all describe
//! the transform of `R_{Nℓ}`; they differ only in the kernel convention they
//! come out in (see [`MomentumForm::native_convention`]). The Lombardi–Ogilvie
//! amplitude is unnormalized, and the Podolsky–Pauling function is the
//! real `j_ℓ` Hankel transform.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hydrogenic::{normalization_constant, PhysicalScale, QuantumState};
use crate::specfun::{binomial, factorial, ferrers_p_mhalf, ferrers_q_mhalf, gamma_int, gegenbauer_c, gegenbauer_d1_angle};
use crate::transform::TransformConvention;

/// Which closed form produced an amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentumForm {
    Gegenbauer,
    ScriptD,
    Trig,
    Ferrers,
    LombardiOgilvie,
    PodolskyPauling,
}

impl MomentumForm {
    pub const ALL: [MomentumForm; 6] = [
        MomentumForm::Gegenbauer,
        MomentumForm::ScriptD,
        MomentumForm::Trig,
        MomentumForm::Ferrers,
        MomentumForm::LombardiOgilvie,
        MomentumForm::PodolskyPauling,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MomentumForm::Gegenbauer => "gegenbauer",
            MomentumForm::ScriptD => "script_d",
            MomentumForm::Trig => "trig",
            MomentumForm::Ferrers => "ferrers",
            MomentumForm::LombardiOgilvie => "lombardi_ogilvie",
            MomentumForm::PodolskyPauling => "podolsky_pauling",
        }
    }

    /// Convention in which this form equals the transform of `R_{Nℓ}`.
    /// `None` for the forms that are not values of that transform.
    pub fn native_convention(&self) -> Option<TransformConvention> {
        match self {
            MomentumForm::Trig => Some(TransformConvention::OUTGOING_STRICT),
            MomentumForm::Gegenbauer | MomentumForm::ScriptD | MomentumForm::Ferrers => {
                Some(TransformConvention::INCOMING_SECTION4)
            }
            MomentumForm::LombardiOgilvie | MomentumForm::PodolskyPauling => None,
        }
    }

    /// Whether the form is defined for negative momenta.
    pub fn accepts_negative(&self) -> bool {
        !matches!(self, MomentumForm::Ferrers | MomentumForm::PodolskyPauling)
    }
}

impl std::fmt::Display for MomentumForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MomentumForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Ok(match key.as_str() {
            "gegenbauer" | "geg" => MomentumForm::Gegenbauer,
            "script_d" | "scriptd" | "d" => MomentumForm::ScriptD,
            "trig" => MomentumForm::Trig,
            "ferrers" => MomentumForm::Ferrers,
            "lombardi_ogilvie" | "lo" => MomentumForm::LombardiOgilvie,
            "podolsky_pauling" | "pp" => MomentumForm::PodolskyPauling,
            _ => return Err(Error::Precondition(format!("unknown momentum form '{s}'"))),
        })
    }
}

/// One evaluated amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentumAmplitude {
    pub p: f64,
    pub value: Complex64,
    pub form: MomentumForm,
}

impl MomentumAmplitude {
    pub fn density(&self) -> f64 {
        self.value.norm_sqr()
    }
}

/// Evaluate `form` for `state` at `p`.
pub fn evaluate(form: MomentumForm, state: &QuantumState, p: f64) -> Result<MomentumAmplitude> {
    if !p.is_finite() {
        return Err(Error::Domain { function: form.name(), x: p });
    }
    let value = match form {
        MomentumForm::Trig => psi_trig(state, p),
        MomentumForm::Gegenbauer => psi_gegenbauer(state, p),
        MomentumForm::ScriptD => psi_script_d(state, p),
        MomentumForm::Ferrers => psi_ferrers(state, p)?,
        MomentumForm::LombardiOgilvie => lombardi_ogilvie_alpha(state, p),
        MomentumForm::PodolskyPauling => {
            if p < 0.0 {
                return Err(Error::Domain { function: form.name(), x: p });
            }
            Complex64::new(podolsky_pauling_g(state, p), 0.0)
        }
    };
    Ok(MomentumAmplitude { p, value, form })
}

/// The transform of `R_{Nℓ}` in an arbitrary convention.
pub fn psi(state: &QuantumState, p: f64, convention: TransformConvention) -> Complex64 {
    convention.orient(psi_trig(state, p))
}

/// The changes of variable `x`, `γ`, `θ` and `χ_p` at momentum `|p|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleVariables {
    pub x: f64,
    pub gamma: f64,
    pub theta: f64,
    pub chi_p: f64,
}

pub fn angle_variables(p: f64, scale: &PhysicalScale) -> AngleVariables {
    let s = p.abs() / scale.momentum_scale();
    let half = p.abs() / (2.0 * scale.momentum_scale());
    let x = 0.5 / (0.25 + half * half).sqrt();
    let theta = s.atan();
    debug_assert!((x - theta.cos()).abs() <= 1e-14);
    AngleVariables {
        x,
        gamma: theta,
        theta,
        chi_p: 2.0 * theta,
    }
}

fn check_t(state: &QuantumState, t: u32) -> Result<()> {
    if t > state.radial_degree() {
        return Err(Error::Index {
            t,
            max: state.radial_degree(),
        });
    }
    Ok(())
}

fn shared_coefficient(state: &QuantumState, t: u32) -> f64 {
    let (n, l) = (state.n(), state.l());
    let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
    let two_beta = 2.0 * state.beta();
    normalization_constant(state) * 2f64.powi((l + t + 2) as i32) * sign * binomial(n + l, (n - l - 1 - t) as i64)
        * gamma_int(l + t + 2).unwrap()
        / (factorial(t).unwrap() * two_beta * two_beta)
}

/// Coefficient `a_t` of the Gegenbauer expansion.
pub fn coeff_a(state: &QuantumState, t: u32) -> Result<f64> {
    check_t(state, t)?;
    Ok(shared_coefficient(state, t))
}

/// Coefficient `b_t` of the trigonometric expansion.
pub fn coeff_b(state: &QuantumState, t: u32) -> Result<f64> {
    check_t(state, t)?;
    Ok(shared_coefficient(state, t))
}

/// `Σ_t b_t e^{i(ℓ+t+2)θ} cos^{ℓ+t+2}θ` with `θ = atan(p/ħβ)`.
///
/// `e^{iθ} cos θ` is formed as `1/(1 - i p/ħβ)`, so no trig calls and
/// exact values at rational momenta.
pub fn psi_trig(state: &QuantumState, p: f64) -> Complex64 {
    let s = p / state.scale().momentum_scale();
    let w = Complex64::new(1.0, 0.0) / Complex64::new(1.0, -s);
    let l = state.l();
    (0..=state.radial_degree())
        .map(|t| shared_coefficient(state, t) * w.powi((l + t + 2) as i32))
        .sum()
}

/// `x = cos γ`, `sin γ` and `γ` at signed momentum `p`, with `γ = atan(p/ħβ)`.
///
/// `x` comes from its algebraic form `(1/2) [(1/2)² + (p/2ħβ)²]^{-1/2}`;
/// `cos(atan(s))` loses relative accuracy as `γ → π/2`.
fn gamma_triple(state: &QuantumState, p: f64) -> (f64, f64, f64) {
    let s = p / state.scale().momentum_scale();
    let half = 0.5 * s;
    let x = 0.5 / (0.25 + half * half).sqrt();
    (x, s * x, s.atan())
}

/// `sin γ (C¹_n + i D¹_n)(cos γ)`, with the `γ = 0` limit `i`.
fn sin_times_c_plus_id(n: u32, x: f64, sin_gamma: f64, gamma: f64) -> Complex64 {
    if gamma == 0.0 {
        return Complex64::new(0.0, 1.0);
    }
    Complex64::new(
        sin_gamma * gegenbauer_c(n, 1.0, x),
        sin_gamma * gegenbauer_d1_angle(n, gamma),
    )
}

/// `Σ_t a_t sin γ cos^{ℓ+t+2}γ (C¹_{ℓ+t+1} + i D¹_{ℓ+t+1})(cos γ)`.
///
/// Negative `p` uses the odd extension of `γ`.
pub fn psi_gegenbauer(state: &QuantumState, p: f64) -> Complex64 {
    let (x, sg, gamma) = gamma_triple(state, p);
    let l = state.l();
    (0..=state.radial_degree())
        .map(|t| {
            let n = l + 1 + t;
            shared_coefficient(state, t) * x.powi((n + 1) as i32) * sin_times_c_plus_id(n, x, sg, gamma)
        })
        .sum()
}

/// `Σ_t 2 a_t √(1-x²) x^{ℓ+t+2} 𝒟¹_{ℓ+t+1}(x + i0)` with `𝒟 = (C + iD)/2`.
pub fn psi_script_d(state: &QuantumState, p: f64) -> Complex64 {
    let (x, sg, gamma) = gamma_triple(state, p);
    let l = state.l();
    (0..=state.radial_degree())
        .map(|t| {
            let n = l + 1 + t;
            let script_d = sin_times_c_plus_id(n, x, sg, gamma) / 2.0;
            2.0 * shared_coefficient(state, t) * x.powi((n + 1) as i32) * script_d
        })
        .sum()
}

/// The Ferrers-function form: `(p/ħ) 𝒩 Σ_t (-1)^t C(N+ℓ, N-ℓ-1-t) / (t! (2β)³)
/// (2x)^{ν+1} √(βħπ/p) Γ(ν+3/2) (P_ν^{-1/2} + (2i/π) Q_ν^{-1/2})(x)`
/// with `ν = ℓ + t + 3/2`. Only `p > 0`.
pub fn psi_ferrers(state: &QuantumState, p: f64) -> Result<Complex64> {
    if !(p > 0.0) {
        return Err(Error::Domain {
            function: "psi_ferrers",
            x: p,
        });
    }
    let (n_q, l) = (state.n(), state.l());
    let (hbar, beta) = (state.hbar(), state.beta());
    let (x, _, _) = gamma_triple(state, p);
    let two_beta = 2.0 * beta;
    let root = (beta * hbar * PI / p).sqrt();
    let mut sum = Complex64::new(0.0, 0.0);
    for t in 0..=state.radial_degree() {
        let n = l + 1 + t;
        let nu = n as f64 + 0.5;
        let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
        let c = sign * binomial(n_q + l, (n_q - l - 1 - t) as i64) / (factorial(t)? * two_beta.powi(3));
        let fer = Complex64::new(ferrers_p_mhalf(nu, x)?, 2.0 / PI * ferrers_q_mhalf(nu, x)?);
        sum += c * (2.0 * x).powf(nu + 1.0) * root * gamma_int(n + 2)? * fer;
    }
    Ok(sum * (p / hbar) * normalization_constant(state))
}

/// `c^k = 2^k (N-ℓ-1)! (ℓ+k+1)! / (k! (N-ℓ-k-1)! (2ℓ+k+1)!)` for `k = 0..=N-ℓ-1`.
pub fn lombardi_ogilvie_coefficients(state: &QuantumState) -> Vec<f64> {
    let (n, l) = (state.n(), state.l());
    (0..=state.radial_degree())
        .map(|k| {
            2f64.powi(k as i32) * factorial(n - l - 1).unwrap() * factorial(l + k + 1).unwrap()
                / (factorial(k).unwrap() * factorial(n - l - k - 1).unwrap() * factorial(2 * l + k + 1).unwrap())
        })
        .collect()
}

/// Unnormalized `α = Σ_k c^k (iħβ/(p - iħβ))^{ℓ+k+2}`.
pub fn lombardi_ogilvie_alpha(state: &QuantumState, p: f64) -> Complex64 {
    let hb = state.scale().momentum_scale();
    let z = Complex64::new(0.0, hb) / Complex64::new(p, -hb);
    let l = state.l();
    lombardi_ogilvie_coefficients(state)
        .into_iter()
        .enumerate()
        .map(|(k, c)| c * z.powi((l + k as u32 + 2) as i32))
        .sum()
}

/// The real constant `K` with `conj(psi_trig) = K α`:
/// `K = (-1)^ℓ 𝒩 2^{ℓ+2} (N+ℓ)! / ((2β)² (N-ℓ-1)!)`.
pub fn lombardi_ogilvie_constant(state: &QuantumState) -> f64 {
    let (n, l) = (state.n(), state.l());
    let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
    let two_beta = 2.0 * state.beta();
    sign * normalization_constant(state) * 2f64.powi((l + 2) as i32) * factorial(n + l).unwrap()
        / (two_beta * two_beta * factorial(n - l - 1).unwrap())
}

fn pp_root(state: &QuantumState) -> f64 {
    let (n, l) = (state.n(), state.l());
    (factorial(n - l - 1).unwrap() * n as f64 / (PI * factorial(n + l).unwrap())).sqrt()
}

/// Podolsky–Pauling function
/// `𝒢(p) = (2ħβ)^{5/2} ℓ! √((N-ℓ-1)! N / (π (N+ℓ)!)) (4ħβp)^ℓ / (ħ²β²+p²)^{ℓ+2}
/// C^{ℓ+1}_{N-ℓ-1}((ħ²β²-p²)/(ħ²β²+p²))`, normalized so `∫ 𝒢² p² dp = 1`.
pub fn podolsky_pauling_g(state: &QuantumState, p: f64) -> f64 {
    let l = state.l();
    let hb = state.scale().momentum_scale();
    let (hb2, p2) = (hb * hb, p * p);
    (2.0 * hb).powf(2.5) * factorial(l).unwrap() * pp_root(state) * (4.0 * hb * p).powi(l as i32)
        / (hb2 + p2).powi((l + 2) as i32)
        * gegenbauer_c(state.radial_degree(), l as f64 + 1.0, (hb2 - p2) / (hb2 + p2))
}

/// `𝒢` in the four-dimensional angle `χ`, `cos χ = (ħ²β²-p²)/(ħ²β²+p²)`:
/// `(2ħβ)^{-3/2} 2^{ℓ+4} ℓ! √(...) cos⁴(χ/2) sin^ℓχ C^{ℓ+1}_{N-ℓ-1}(cos χ)`.
pub fn podolsky_pauling_chi(state: &QuantumState, chi: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&chi) {
        return Err(Error::Domain {
            function: "podolsky_pauling_chi",
            x: chi,
        });
    }
    let l = state.l();
    let hb = state.scale().momentum_scale();
    let c2 = (chi / 2.0).cos().powi(2);
    Ok((2.0 * hb).powf(-1.5) * 2f64.powi((l + 4) as i32) * factorial(l)? * pp_root(state) * c2 * c2
        * chi.sin().powi(l as i32)
        * gegenbauer_c(state.radial_degree(), l as f64 + 1.0, chi.cos()))
}

/// Families with closed-form `ℓ = N-1` distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistributionFamily {
    PodolskyPauling,
    LombardiOgilvie,
}

impl std::str::FromStr for DistributionFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pp" | "podolsky_pauling" | "podolsky-pauling" => Ok(DistributionFamily::PodolskyPauling),
            "lo" | "lombardi_ogilvie" | "lombardi-ogilvie" => Ok(DistributionFamily::LombardiOgilvie),
            _ => Err(Error::Precondition(format!("unknown distribution family '{s}'"))),
        }
    }
}

/// Unnormalized `ℓ = N-1` densities:
/// PP `(4ħβp)^{2(N-1)} / (ħ²β²+p²)^{2(N+1)}`, LO `1 / (ħ²β²+p²)^{N+1}`.
pub fn distribution_max_l(family: DistributionFamily, n: u32, p: f64, hbar_beta: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidState { n, l: 0 });
    }
    let d = hbar_beta * hbar_beta + p * p;
    match family {
        DistributionFamily::PodolskyPauling => {
            if p < 0.0 {
                return Err(Error::Domain {
                    function: "distribution_max_l",
                    x: p,
                });
            }
            Ok((4.0 * hbar_beta * p).powi(2 * (n as i32 - 1)) / d.powi(2 * (n as i32 + 1)))
        }
        DistributionFamily::LombardiOgilvie => Ok(d.powi(-(n as i32 + 1))),
    }
}
