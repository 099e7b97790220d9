//! Cross-checks between the closed forms, the quadrature path and the
//! analytic invariants, collected into a serializable report.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::EvaluationGrid;
use crate::hydrogenic::{
    expectation_p2, expectation_r2, normalization_constant, radial_wavefunction, slater_expansion, PhysicalScale,
    QuantumState,
};
use crate::momentum::{
    coeff_b, lombardi_ogilvie_alpha, lombardi_ogilvie_constant, podolsky_pauling_g, psi_gegenbauer, psi_script_d, psi_trig,
};
use crate::quadrature::{self, Tolerance};
use crate::specfun::{gegenbauer_c, gegenbauer_d1, gegenbauer_script_d1, laguerre, laguerre_sum_exact, spherical_bessel_j};
use crate::transform::{
    CompactTestFunction, PolynomialBump, QuadratureSpec, RadialTransform, SineBump, SmoothBump, TransformConvention,
};

/// Groups of checks that can be run separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Forms,
    Quadrature,
    LombardiOgilvie,
    PodolskyPauling,
    Parseval,
    Uncertainty,
    So4,
    Specfun,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Forms,
        Suite::Quadrature,
        Suite::LombardiOgilvie,
        Suite::PodolskyPauling,
        Suite::Parseval,
        Suite::Uncertainty,
        Suite::So4,
        Suite::Specfun,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Forms => "forms",
            Suite::Quadrature => "quadrature",
            Suite::LombardiOgilvie => "lombardi-ogilvie",
            Suite::PodolskyPauling => "podolsky-pauling",
            Suite::Parseval => "parseval",
            Suite::Uncertainty => "uncertainty",
            Suite::So4 => "so4",
            Suite::Specfun => "specfun",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite '{s}'")))
    }
}

/// Base tolerances of every check, before `tol_scale` is applied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub form_equivalence: f64,
    pub transform_quadrature: f64,
    pub diagonalization: f64,
    pub parseval: f64,
    pub lombardi_ogilvie: f64,
    pub pp_hankel: f64,
    pub pp_normalization: f64,
    /// Relative error of the fitted ground-state log-slope.
    pub pp_tail_slope: f64,
    pub uncertainty_ground_state: f64,
    pub so4: f64,
    pub special_values: f64,
    pub laguerre: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            form_equivalence: 1e-11,
            transform_quadrature: 1e-7,
            diagonalization: 1e-7,
            parseval: 1e-7,
            lombardi_ogilvie: 1e-9,
            pp_hankel: 1e-7,
            pp_normalization: 1e-8,
            pp_tail_slope: 1e-2,
            uncertainty_ground_state: 1e-9,
            so4: 1e-10,
            special_values: 1e-13,
            laguerre: 1e-12,
        }
    }
}

/// Everything that determines a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationConfig {
    pub scale: PhysicalScale,
    pub convention: TransformConvention,
    pub quadrature: QuadratureSpec,
    pub tolerances: Tolerances,
    /// Every tolerance is multiplied by `1 + tol_scale`.
    pub tol_scale: f64,
    pub suites: Vec<Suite>,
    /// Log grid of `p/ħβ`: `0` plus `grid_count` points in `[grid_min, grid_max]`.
    pub grid_min: f64,
    pub grid_max: f64,
    pub grid_count: usize,
    pub max_n_forms: u32,
    pub max_n_quadrature: u32,
    pub max_n_lombardi_ogilvie: u32,
    pub max_n_pp_hankel: u32,
    pub max_n_pp_normalization: u32,
    pub max_n_parseval: u32,
    pub max_n_uncertainty: u32,
    pub max_n_so4: u32,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        VerificationConfig {
            scale: PhysicalScale::default(),
            convention: TransformConvention::default(),
            quadrature: QuadratureSpec::default(),
            tolerances: Tolerances::default(),
            tol_scale: 0.0,
            suites: Suite::ALL.to_vec(),
            grid_min: 1e-3,
            grid_max: 1e3,
            grid_count: 60,
            max_n_forms: 8,
            max_n_quadrature: 4,
            max_n_lombardi_ogilvie: 6,
            max_n_pp_hankel: 4,
            max_n_pp_normalization: 5,
            max_n_parseval: 5,
            max_n_uncertainty: 5,
            max_n_so4: 6,
        }
    }
}

impl VerificationConfig {
    pub fn validate(&self) -> Result<()> {
        PhysicalScale::new(self.scale.hbar, self.scale.beta)?;
        self.quadrature.validate()?;
        if !(self.tol_scale > -1.0 && self.tol_scale.is_finite()) {
            return Err(Error::Precondition(format!("tol_scale must exceed -1, got {}", self.tol_scale)));
        }
        if self.suites.is_empty() {
            return Err(Error::Precondition("no suites selected".into()));
        }
        self.grid(false)?;
        Ok(())
    }

    /// Effective tolerance for a base value.
    pub fn tol(&self, base: f64) -> f64 {
        base * (1.0 + self.tol_scale)
    }

    /// The configured log grid, optionally mirrored to negative momenta.
    pub fn grid(&self, mirrored: bool) -> Result<EvaluationGrid> {
        let hb = self.scale.momentum_scale();
        if mirrored {
            EvaluationGrid::log_mirrored(self.grid_min, self.grid_max, self.grid_count, hb)
        } else {
            EvaluationGrid::log(self.grid_min, self.grid_max, self.grid_count, hb)
        }
    }

    fn states(&self, max_n: u32) -> Result<Vec<QuantumState>> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for l in 0..n {
                out.push(QuantumState::new(n, l, self.scale)?);
            }
        }
        Ok(out)
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub states_covered: Vec<(u32, u32)>,
    pub grid: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub details: Vec<String>,
}

impl CheckResult {
    fn new(name: &str, states: &[QuantumState], grid: String, max_residual: f64, tolerance: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            states_covered: states.iter().map(|s| (s.n(), s.l())).collect(),
            grid,
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
            details: Vec::new(),
        }
    }

    fn with_details(mut self, details: Vec<String>) -> Self {
        self.details = details;
        self
    }
}

/// All results of a run plus the configuration that produced them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub results: Vec<CheckResult>,
    pub config: VerificationConfig,
    /// Seconds since the Unix epoch; set by the caller, so that a run is a
    /// pure function of its configuration.
    pub timestamp: Option<u64>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn result(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

/// Mean of the values and the relative standard deviation about it.
pub fn relative_spread(values: &[Complex64]) -> (Complex64, f64) {
    let n = values.len() as f64;
    let mean: Complex64 = values.iter().sum::<Complex64>() / n;
    let var = values.iter().map(|v| (v - mean).norm_sqr()).sum::<f64>() / n;
    (mean, var.sqrt() / mean.norm())
}

fn require_points(grid: &EvaluationGrid) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Grid("empty momentum grid".into()));
    }
    Ok(())
}

/// Theorem-2 (Gegenbauer and 𝒟) forms against the trigonometric form.
///
/// Both are brought to the configured convention, divided by their own value
/// at `p = ħβ`, and compared pointwise by relative deviation.
pub fn verify_form_equivalence(config: &VerificationConfig, max_n: u32, grid: &EvaluationGrid) -> Result<CheckResult> {
    require_points(grid)?;
    if max_n > 8 {
        return Err(Error::Precondition(format!("form equivalence is checked for N <= 8, got {max_n}")));
    }
    let conv = config.convention;
    let native = TransformConvention::INCOMING_SECTION4;
    let states = config.states(max_n)?;
    let p_ref = config.scale.momentum_scale();
    let mut worst = 0.0_f64;
    let mut details = Vec::new();
    for s in &states {
        let trig_ref = conv.orient(psi_trig(s, p_ref));
        let geg_ref = native.convert(psi_gegenbauer(s, p_ref), conv);
        if trig_ref.norm() == 0.0 || geg_ref.norm() == 0.0 {
            return Err(Error::Precondition(format!("reference value vanishes for ({}, {})", s.n(), s.l())));
        }
        let state_worst = grid
            .points
            .par_iter()
            .map(|&p| {
                let a = conv.orient(psi_trig(s, p)) / trig_ref;
                let g = native.convert(psi_gegenbauer(s, p), conv) / geg_ref;
                let d = native.convert(psi_script_d(s, p), conv) / geg_ref;
                ((a - g).norm() / a.norm()).max((a - d).norm() / a.norm())
            })
            .reduce(|| 0.0, f64::max);
        if state_worst > worst {
            details = vec![format!("worst state ({}, {}): {state_worst:e}", s.n(), s.l())];
        }
        worst = worst.max(state_worst);
    }
    Ok(CheckResult::new(
        "form_equivalence",
        &states,
        grid.describe(),
        worst,
        config.tol(config.tolerances.form_equivalence),
    )
    .with_details(details))
}

/// Quadrature of the transform of `R_{Nℓ}` against the closed form.
pub fn verify_quadrature(
    config: &VerificationConfig,
    max_n: u32,
    grid: &EvaluationGrid,
    spec: &QuadratureSpec,
) -> Result<CheckResult> {
    require_points(grid)?;
    let conv = config.convention;
    let states = config.states(max_n)?;
    let jobs: Vec<(QuantumState, f64)> = states
        .iter()
        .flat_map(|s| grid.points.iter().map(move |&p| (*s, p)))
        .collect();
    let outcomes: Vec<std::result::Result<f64, String>> = jobs
        .par_iter()
        .map(|(s, p)| {
            let transform = RadialTransform::new(conv, spec.truncated_for(s), s.hbar());
            let f = |r: f64| radial_wavefunction(s, r);
            match transform.apply(&f, *p) {
                Ok(v) => Ok((v - conv.orient(psi_trig(s, *p))).norm()),
                Err(e) => Err(format!("({}, {}) p = {p:?}: {e}", s.n(), s.l())),
            }
        })
        .collect();
    let mut worst = 0.0_f64;
    let mut details = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(r) => worst = worst.max(r),
            Err(msg) => {
                worst = f64::MAX;
                details.push(msg);
            }
        }
    }
    Ok(CheckResult::new(
        "transform_quadrature",
        &states,
        grid.describe(),
        worst,
        config.tol(config.tolerances.transform_quadrature),
    )
    .with_details(details))
}

/// Constancy of the ratio between the transform and the Lombardi–Ogilvie
/// amplitude, both expressed in the configured convention.
pub fn verify_lo_proportionality(config: &VerificationConfig, max_n: u32, grid: &EvaluationGrid) -> Result<CheckResult> {
    require_points(grid)?;
    let conv = config.convention;
    let lo_native = TransformConvention::INCOMING_STRICT;
    let states = config.states(max_n)?;
    let mut worst = 0.0_f64;
    let mut details = Vec::new();
    for s in &states {
        let ratios: Vec<Complex64> = grid
            .points
            .iter()
            .map(|&p| conv.orient(psi_trig(s, p)) / lo_native.convert(lombardi_ogilvie_alpha(s, p), conv))
            .collect();
        let (mean, spread) = relative_spread(&ratios);
        worst = worst.max(spread);
        details.push(format!(
            "({}, {}): constant {:?}{:+?}i (predicted {:?}), rel std {spread:e}",
            s.n(),
            s.l(),
            mean.re,
            mean.im,
            lombardi_ogilvie_constant(s)
        ));
    }
    Ok(CheckResult::new(
        "lombardi_ogilvie",
        &states,
        grid.describe(),
        worst,
        config.tol(config.tolerances.lombardi_ogilvie),
    )
    .with_details(details))
}

/// `∫_0^∞ j_ℓ(pr/ħ) R_{Nℓ}(r) r² dr` by adaptive quadrature.
pub fn hankel_transform(state: &QuantumState, p: f64, spec: &QuadratureSpec) -> Result<f64> {
    let r_max = spec.truncated_for(state).max_radius;
    let k = p / state.hbar();
    let l = state.l();
    let f = |r: f64| spherical_bessel_j(l, k * r) * radial_wavefunction(state, r) * r * r;
    let panels = ((r_max * k.abs() / PI).ceil() as usize + 8).min(spec.panel_budget / 2);
    let tol = Tolerance {
        abs_tol: 1e-15,
        rel_tol: 1e-12,
        max_panels: spec.panel_budget,
    };
    Ok(quadrature::integrate_real(&f, 0.0, r_max, panels, tol)?.value)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// The Podolsky–Pauling checks: proportionality to the `j_ℓ` transform,
/// normalization, and the ground-state tail exponent.
pub fn verify_pp_vs_hankel(config: &VerificationConfig, max_n: u32, spec: &QuadratureSpec) -> Result<Vec<CheckResult>> {
    let grid = config.grid(false)?;
    let positive: Vec<f64> = grid.points.iter().copied().filter(|&p| p > 0.0).collect();
    let states = config.states(max_n)?;

    let mut worst = 0.0_f64;
    let mut details = Vec::new();
    for s in &states {
        let closed: Vec<f64> = positive.iter().map(|&p| podolsky_pauling_g(s, p)).collect();
        let peak = closed.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        let kept: Vec<usize> = (0..positive.len()).filter(|&i| closed[i].abs() >= 1e-6 * peak).collect();
        let hankel: Vec<Result<f64>> = kept.par_iter().map(|&i| hankel_transform(s, positive[i], spec)).collect();
        let mut ratios = Vec::with_capacity(kept.len());
        for (&i, h) in kept.iter().zip(hankel) {
            ratios.push(Complex64::new(closed[i] / h?, 0.0));
        }
        let (mean, spread) = relative_spread(&ratios);
        worst = worst.max(spread);
        details.push(format!(
            "({}, {}): G / hankel = {:?} over {} points, rel std {spread:e}",
            s.n(),
            s.l(),
            mean.re,
            ratios.len()
        ));
    }
    let hankel = CheckResult::new(
        "podolsky_pauling_hankel",
        &states,
        format!("{} (points with |G| >= 1e-6 max|G|)", grid.describe()),
        worst,
        config.tol(config.tolerances.pp_hankel),
    )
    .with_details(details);

    let norm_states = config.states(config.max_n_pp_normalization)?;
    let tol = Tolerance {
        abs_tol: 1e-16,
        rel_tol: 1e-13,
        max_panels: 50_000,
    };
    let mut worst = 0.0_f64;
    let mut details = Vec::new();
    for s in &norm_states {
        let f = |p: f64| {
            let g = podolsky_pauling_g(s, p);
            g * g * p * p
        };
        let norm = quadrature::integrate_half_line(&f, s.scale().momentum_scale(), tol)?.value;
        worst = worst.max((norm - 1.0).abs());
        details.push(format!("({}, {}): {norm:?}", s.n(), s.l()));
    }
    let normalization = CheckResult::new(
        "podolsky_pauling_normalization",
        &norm_states,
        "half line, tan map".into(),
        worst,
        config.tol(config.tolerances.pp_normalization),
    )
    .with_details(details);

    let ground = QuantumState::new(1, 0, config.scale)?;
    let hb = config.scale.momentum_scale();
    let tail = EvaluationGrid::log(10.0, 1e3, 30, hb)?;
    let xs: Vec<f64> = tail.points[1..].iter().map(|p| 1.0 + (p / hb).powi(2)).collect();
    let ys: Vec<f64> = tail.points[1..].iter().map(|&p| podolsky_pauling_g(&ground, p).powi(2)).collect();
    let slope = log_log_slope(&xs, &ys);
    let tail_check = CheckResult::new(
        "podolsky_pauling_tail",
        &[ground],
        tail.describe(),
        ((slope + 4.0) / 4.0).abs(),
        config.tol(config.tolerances.pp_tail_slope),
    )
    .with_details(vec![format!("fitted exponent of (1 + p²/ħ²β²): {slope:?}")]);

    Ok(vec![hankel, normalization, tail_check])
}

/// Parseval over `N <= max_n` and the diagonalization identity on three test functions.
pub fn verify_parseval_and_diagonalization(
    config: &VerificationConfig,
    max_n: u32,
    spec: &QuadratureSpec,
) -> Result<Vec<CheckResult>> {
    let hbar = config.scale.hbar;
    let transform = RadialTransform::new(config.convention, *spec, hbar);
    let states = config.states(max_n)?;
    let norms: Vec<Result<(f64, f64)>> = states
        .par_iter()
        .map(|s| transform.parseval_check(&slater_expansion(s), normalization_constant(s)))
        .collect();
    let mut worst = 0.0_f64;
    let mut details = Vec::new();
    for (s, norm) in states.iter().zip(norms) {
        let (pos, mom) = norm?;
        let r = (mom - 1.0).abs().max((mom - pos).abs());
        worst = worst.max(r);
        details.push(format!("({}, {}): position {pos:?}, momentum {mom:?}", s.n(), s.l()));
    }
    // ground state: |ψ|² = b₀² / (1 + p²/ħ²β²)², so the norm is b₀² ħβ (π/2) / (2πħ) = 1
    let ground = QuantumState::new(1, 0, config.scale)?;
    let hb = config.scale.momentum_scale();
    let b0 = coeff_b(&ground, 0)?;
    let analytic = b0 * b0 * hb * (PI / 2.0) / (2.0 * PI * hbar);
    let closed_ground = |p: f64| psi_trig(&ground, p).norm_sqr();
    let numeric_ground = quadrature::integrate_real_line(
        &closed_ground,
        hb,
        Tolerance {
            abs_tol: 1e-16,
            rel_tol: 1e-13,
            max_panels: 50_000,
        },
    )?
    .value
        / (2.0 * PI * hbar);
    worst = worst.max((numeric_ground - analytic).abs()).max((analytic - 1.0).abs());
    details.push(format!("ground state analytic {analytic:?}, quadrature {numeric_ground:?}"));
    let parseval = CheckResult::new(
        "parseval",
        &states,
        "real line, tan map, measure dp/(2πħ)".into(),
        worst,
        config.tol(config.tolerances.parseval),
    )
    .with_details(details);

    let p_grid = EvaluationGrid::linear(-10.0, 10.0, 81)?;
    let tests: [(&str, Box<dyn CompactTestFunction>); 3] = [
        ("(r-1)^2 (2-r)^2 on [1, 2]", Box::new(PolynomialBump { a: 1.0, b: 2.0 })),
        ("sin^2 bump on [0.5, 3]", Box::new(SineBump { a: 0.5, b: 3.0 })),
        ("exp(-1/((r-2)(5-r))) on [2, 5]", Box::new(SmoothBump { a: 2.0, b: 5.0 })),
    ];
    let mut worst = 0.0_f64;
    let mut details = Vec::new();
    for (label, f) in &tests {
        let r = transform.diagonalization_residual(f.as_ref(), &p_grid.points)?;
        worst = worst.max(r);
        details.push(format!("{label}: {r:e}"));
    }
    let diagonal = CheckResult::new(
        "diagonalization",
        &[],
        p_grid.describe(),
        worst,
        config.tol(config.tolerances.diagonalization),
    )
    .with_details(details);
    Ok(vec![parseval, diagonal])
}

/// `⟨r²⟩⟨p²⟩ >= 9ħ²/4` for all states up to `max_n`, and the ground-state value `3ħ²`.
pub fn verify_uncertainty(config: &VerificationConfig, max_n: u32) -> Result<Vec<CheckResult>> {
    let states = config.states(max_n)?;
    let hbar2 = config.scale.hbar * config.scale.hbar;
    let mut violation = 0.0_f64;
    let mut details = Vec::new();
    let mut ground_product = f64::NAN;
    for s in &states {
        let product = expectation_r2(s) * expectation_p2(s)?;
        violation = violation.max(2.25 * hbar2 - product);
        details.push(format!("({}, {}): {product:?}", s.n(), s.l()));
        if (s.n(), s.l()) == (1, 0) {
            ground_product = product;
        }
    }
    let bound = CheckResult::new("uncertainty_bound", &states, "none".into(), violation.max(0.0), 0.0).with_details(details);
    let ground = CheckResult::new(
        "uncertainty_ground_state",
        &states[..1],
        "none".into(),
        (ground_product / hbar2 - 3.0).abs(),
        config.tol(config.tolerances.uncertainty_ground_state),
    )
    .with_details(vec![format!("<r^2><p^2> / hbar^2 = {:?}", ground_product / hbar2)]);
    Ok(vec![bound, ground])
}

/// `|ψ_{N,N-1}|² (ħ²β² + p²)^{N+1}` is constant in `p`.
pub fn verify_so4(config: &VerificationConfig, max_n: u32, grid: &EvaluationGrid) -> Result<CheckResult> {
    require_points(grid)?;
    let hb = config.scale.momentum_scale();
    let mut states = Vec::new();
    let mut worst = 0.0_f64;
    let mut details = Vec::new();
    for n in 1..=max_n {
        let s = QuantumState::new(n, n - 1, config.scale)?;
        let values: Vec<Complex64> = grid
            .points
            .iter()
            .map(|&p| Complex64::new(psi_trig(&s, p).norm_sqr() * (hb * hb + p * p).powi(n as i32 + 1), 0.0))
            .collect();
        let (mean, spread) = relative_spread(&values);
        worst = worst.max(spread);
        details.push(format!("({n}, {}): constant {:?}, rel std {spread:e}", n - 1, mean.re));
        states.push(s);
    }
    Ok(CheckResult::new("so4_denominator", &states, grid.describe(), worst, config.tol(config.tolerances.so4))
        .with_details(details))
}

/// The angle identities behind the Gegenbauer form, and Laguerre recurrence against the exact sum.
pub fn verify_specfun(config: &VerificationConfig) -> Result<Vec<CheckResult>> {
    let gammas: Vec<f64> = (0..=64).map(|i| 0.1 + (PI - 0.2) * i as f64 / 64.0).collect();
    let mut worst = 0.0_f64;
    for n in 0..=40u32 {
        let m = (n + 1) as f64;
        for &g in &gammas {
            let (sg, x) = (g.sin(), g.cos());
            let c = sg * gegenbauer_c(n, 1.0, x);
            let d = sg * gegenbauer_d1(n, x)?;
            let sd = sg * gegenbauer_script_d1(n, x)? * 2.0;
            let want = Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, -m * g);
            worst = worst
                .max((c - (m * g).sin()).abs())
                .max((d - (m * g).cos()).abs())
                .max((Complex64::new(c, d) - want).norm())
                .max((sd - want).norm());
        }
    }
    let special = CheckResult::new(
        "special_values",
        &[],
        "n <= 40, gamma in [0.1, pi - 0.1] x 65".into(),
        worst,
        config.tol(config.tolerances.special_values),
    );

    let mut worst = 0.0_f64;
    for n in 0..=30u32 {
        for alpha in [1u32, 3, 9, 21, 59] {
            for i in -12..=12 {
                let x = 5.0 * i as f64 + 0.375;
                let exact = laguerre_sum_exact(n, alpha, x)?;
                worst = worst.max((laguerre(n, alpha, x) - exact).abs() / exact.abs());
            }
        }
    }
    let lag = CheckResult::new(
        "laguerre_sum",
        &[],
        "n <= 30, alpha in {1, 3, 9, 21, 59}, x in [-59.625, 60.375]".into(),
        worst,
        config.tol(config.tolerances.laguerre),
    );
    Ok(vec![special, lag])
}

/// Run every selected suite and aggregate. Deterministic given the config.
pub fn run_all(config: &VerificationConfig) -> Result<VerificationReport> {
    config.validate()?;
    let spec = config.quadrature;
    let mut results = Vec::new();
    for suite in &config.suites {
        match suite {
            Suite::Forms => results.push(verify_form_equivalence(config, config.max_n_forms, &config.grid(true)?)?),
            Suite::Quadrature => {
                results.push(verify_quadrature(config, config.max_n_quadrature, &config.grid(false)?, &spec)?)
            }
            Suite::LombardiOgilvie => {
                results.push(verify_lo_proportionality(config, config.max_n_lombardi_ogilvie, &config.grid(true)?)?)
            }
            Suite::PodolskyPauling => results.extend(verify_pp_vs_hankel(config, config.max_n_pp_hankel, &spec)?),
            Suite::Parseval => {
                results.extend(verify_parseval_and_diagonalization(config, config.max_n_parseval, &spec)?)
            }
            Suite::Uncertainty => results.extend(verify_uncertainty(config, config.max_n_uncertainty)?),
            Suite::So4 => results.push(verify_so4(config, config.max_n_so4, &config.grid(true)?)?),
            Suite::Specfun => results.extend(verify_specfun(config)?),
        }
    }
    let overall_pass = results.iter().all(|r| r.passed);
    Ok(VerificationReport {
        results,
        config: config.clone(),
        timestamp: None,
        overall_pass,
    })
}
