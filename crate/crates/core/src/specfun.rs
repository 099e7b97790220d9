//! Special functions used by the hydrogenic and momentum-space formulas.
//!
//! Everything here is double precision. Orthogonal polynomials are
//! evaluated by their three-term recurrences; the explicit alternating sums
//! lose digits for large degree and are kept out of the evaluation path.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest `n` whose factorial is finite in `f64`.
pub const MAX_FACTORIAL_F64: u32 = 170;

/// Largest `n` whose factorial fits in `u64`.
pub const MAX_FACTORIAL_EXACT: u32 = 20;

/// `n!` as a float. Exact (as an integer-valued `f64`) up to `n = 22`.
pub fn factorial(n: u32) -> Result<f64> {
    if n > MAX_FACTORIAL_F64 {
        return Err(Error::Range {
            function: "factorial",
            arg: n as u64,
        });
    }
    Ok((2..=n).fold(1.0, |acc, k| acc * k as f64))
}

/// `n!` in integer arithmetic, `n <= 20`.
pub fn factorial_exact(n: u32) -> Result<u64> {
    if n > MAX_FACTORIAL_EXACT {
        return Err(Error::Range {
            function: "factorial_exact",
            arg: n as u64,
        });
    }
    Ok((2..=n as u64).product())
}

/// Binomial coefficient `C(a, b)`, zero when `b < 0` or `b > a`.
///
/// Uses the multiplicative formula on the shorter side, so intermediate
/// values stay integral and the result is exact while it fits in 53 bits.
pub fn binomial(a: u32, b: i64) -> f64 {
    if b < 0 || b > a as i64 {
        return 0.0;
    }
    let b = (b as u32).min(a - b as u32);
    let mut acc = 1.0_f64;
    for k in 1..=b {
        acc = acc * (a - b + k) as f64 / k as f64;
    }
    acc.round_if_integral()
}

trait RoundIfIntegral {
    fn round_if_integral(self) -> Self;
}

impl RoundIfIntegral for f64 {
    // The multiplicative formula is exact in exact arithmetic; snap tiny
    // rounding drift back onto the integer when the value is small enough
    // to be represented exactly.
    fn round_if_integral(self) -> f64 {
        if self < 9.0e15 {
            self.round()
        } else {
            self
        }
    }
}

/// `Γ(m)` for positive integer `m`, i.e. `(m - 1)!`.
pub fn gamma_int(m: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain {
            function: "gamma_int",
            x: 0.0,
        });
    }
    factorial(m - 1)
}

/// Generalized Laguerre polynomial `L_n^alpha(x)` by forward recurrence.
pub fn laguerre(n: u32, alpha: u32, x: f64) -> f64 {
    let a = alpha as f64;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + a - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_n^alpha(x)` from the explicit alternating sum
/// `Σ_t (-1)^t C(n+alpha, n-t) x^t / t!`, evaluated in exact rational
/// arithmetic (every finite `f64` is a dyadic rational) and rounded once.
pub fn laguerre_sum_exact(n: u32, alpha: u32, x: f64) -> Result<f64> {
    let xr = BigRational::from_float(x).ok_or(Error::Domain {
        function: "laguerre_sum_exact",
        x,
    })?;
    let mut sum = BigRational::zero();
    let mut power = BigRational::one();
    let mut t_fact = BigInt::one();
    for t in 0..=n {
        if t > 0 {
            power *= &xr;
            t_fact *= BigInt::from(t);
        }
        let binom = exact_binomial(n + alpha, n - t);
        let term = &power * BigRational::new(binom, t_fact.clone());
        if t % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum.to_f64().unwrap_or(f64::NAN))
}

fn exact_binomial(a: u32, b: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= BigInt::from(a - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Gegenbauer polynomial `C_n^lambda(x)` by forward recurrence.
pub fn gegenbauer_c(n: u32, lambda: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * lambda * x;
    for k in 1..n {
        let k = k as f64;
        let next = (2.0 * (k + lambda) * x * cur - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Order-1 Gegenbauer function of the second kind, `D_n^1(cos θ) = cos((n+1)θ) / sin θ`.
///
/// Singular at both endpoints, which are rejected.
pub fn gegenbauer_d1(n: u32, x: f64) -> Result<f64> {
    if !(x.abs() < 1.0) {
        return Err(Error::Domain {
            function: "gegenbauer_d1",
            x,
        });
    }
    Ok(gegenbauer_d1_angle(n, x.acos()))
}

/// `D_n^1` evaluated directly at the angle `θ` with `x = cos θ`.
///
/// Callers that already hold the angle avoid the round trip through
/// `acos`, which is ill-conditioned next to `x = ±1`.
pub fn gegenbauer_d1_angle(n: u32, theta: f64) -> f64 {
    ((n as f64 + 1.0) * theta).cos() / theta.sin()
}

/// The complex Gegenbauer function `𝒟_n^1(x + i0) = (C_n^1(x) + i D_n^1(x)) / 2`.
pub fn gegenbauer_script_d1(n: u32, x: f64) -> Result<Complex64> {
    let d = gegenbauer_d1(n, x)?;
    Ok(Complex64::new(gegenbauer_c(n, 1.0, x), d) / 2.0)
}

/// Integer order `n = ν - 1/2` for the `μ = 1/2` Ferrers family, if `ν` is admissible.
fn ferrers_order(nu: f64) -> Result<u32> {
    let n = nu - 0.5;
    if n < 0.0 || n.fract() != 0.0 || n > u32::MAX as f64 {
        return Err(Error::Domain {
            function: "ferrers (degree)",
            x: nu,
        });
    }
    Ok(n as u32)
}

/// Common prefactor `2^μ Γ(μ + 1/2) Γ(ν - μ + 1) / Γ(ν + μ + 1)` at `μ = 1/2`,
/// which reduces to `√2 / (n + 1)` with `n = ν - μ`.
fn ferrers_prefactor(n: u32) -> f64 {
    std::f64::consts::SQRT_2 / (n as f64 + 1.0)
}

/// Ferrers function of the first kind `P_ν^{-1/2}(x)` through its relation
/// to `C^1_{ν-1/2}`. Requires `ν - 1/2` to be a nonnegative integer.
pub fn ferrers_p_mhalf(nu: f64, x: f64) -> Result<f64> {
    let n = ferrers_order(nu)?;
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            function: "ferrers_p_mhalf",
            x,
        });
    }
    let weight = (1.0 - x * x).powf(0.25);
    Ok(ferrers_prefactor(n) / PI.sqrt() * weight * gegenbauer_c(n, 1.0, x))
}

/// Ferrers function of the second kind `Q_ν^{-1/2}(x)` through its relation
/// to `D^1_{ν-1/2}`. Open interval only.
pub fn ferrers_q_mhalf(nu: f64, x: f64) -> Result<f64> {
    let n = ferrers_order(nu)?;
    if !(x.abs() < 1.0) {
        return Err(Error::Domain {
            function: "ferrers_q_mhalf",
            x,
        });
    }
    let weight = (1.0 - x * x).powf(0.25);
    Ok(ferrers_prefactor(n) * PI.sqrt() / 2.0 * weight * gegenbauer_d1(n, x)?)
}

/// Spherical Bessel function of the first kind `j_l(x)`.
///
/// Power series near the origin, upward recurrence for `|x| >= l`, Miller's
/// downward recurrence otherwise.
pub fn spherical_bessel_j(l: u32, x: f64) -> f64 {
    if x < 0.0 {
        // j_l(-x) = (-1)^l j_l(x)
        let v = spherical_bessel_j(l, -x);
        return if l % 2 == 0 { v } else { -v };
    }
    if x < 0.5 {
        return bessel_j_series(l, x);
    }
    let j0 = x.sin() / x;
    if l == 0 {
        return j0;
    }
    let j1 = x.sin() / (x * x) - x.cos() / x;
    if x >= l as f64 {
        let (mut prev, mut cur) = (j0, j1);
        for k in 1..l {
            let next = (2 * k + 1) as f64 / x * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    bessel_j_miller(l, x, j0, j1)
}

fn bessel_j_series(l: u32, x: f64) -> f64 {
    // x^l / (2l+1)!! * Σ_k (-x²/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
    let mut lead = 1.0;
    for k in 0..l {
        lead *= x / (2 * k + 3) as f64;
    }
    let y = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..40 {
        term *= y / (k as f64 * (2 * l + 2 * k + 1) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn bessel_j_miller(l: u32, x: f64, j0: f64, j1: f64) -> f64 {
    let start = l + 30 + (x as u32);
    let (mut next, mut cur) = (0.0_f64, 1e-30_f64);
    let mut at_l = 0.0;
    let mut at_0 = 0.0;
    let mut at_1 = 0.0;
    for k in (0..=start).rev() {
        // cur holds the unnormalized j_k
        if k == l {
            at_l = cur;
        }
        if k == 1 {
            at_1 = cur;
        }
        if k == 0 {
            at_0 = cur;
            break;
        }
        let prev = (2 * k + 1) as f64 / x * cur - next;
        next = cur;
        cur = prev;
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            next *= 1e-250;
            at_l *= 1e-250;
            at_1 *= 1e-250;
        }
    }
    if j0.abs() >= j1.abs() {
        at_l * j0 / at_0
    } else {
        at_l * j1 / at_1
    }
}

/// Spherical Neumann function of order zero, `n_0(x) = -cos(x) / x`, for `x > 0`.
pub fn spherical_neumann_n0(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain {
            function: "spherical_neumann_n0",
            x,
        });
    }
    Ok(-x.cos() / x)
}
