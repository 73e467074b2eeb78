//! Closed-form evaluations of the log-sech integrals, the sequence
//! expressions built from signed generalized Stirling polynomials and
//! Hurwitz-zeta differences, and the closed values of the named integrands.
//!
//! Everything here is an independent route to a number that `quadrature`
//! can also produce; `verify` pits the two against each other.

use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::exactcomb;
use crate::precision::Ctx;
use crate::quadrature::{tensor_2d_unit_square, NamedParams};
use crate::specfun::{
    constants, dirichlet_beta_deriv, gamma, hurwitz_zeta, hurwitz_zeta_sderiv, log_gamma,
    polygamma, polylog_unit_circle, psi_diff_rgamma, recip_gamma, zeta_diff_int,
    zeta_sderiv_diff_int, zeta_sderiv_diff_limit_s1,
};

fn pow2(ctx: &Ctx, e: i64) -> Float {
    ctx.int(1) << e as i32
}

fn fact_f(ctx: &Ctx, n: u32) -> Float {
    Float::with_val(ctx.bits(), exactcomb::factorial(n))
}

/// (-1/2)^k exactly.
fn neg_half_pow(k: u32) -> Rational {
    let mut q = Rational::from((Integer::from(1), Integer::from(1) << k));
    if k % 2 == 1 {
        q = -q;
    }
    q
}

fn sgsp_at(k: u32, m: u32, x: &Rational) -> Result<Rational> {
    Ok(exactcomb::sgsp_poly(k, m)?.eval(x))
}

/// Σ_{k=0}^{kmax} (-1/2)^k P_k(m, x) [ζ'(k+soff, q) - ζ'(k+soff, q+1/2)].
fn zsum(ctx: &Ctx, m: u32, kmax: u32, x: &Rational, soff: i64, q: &Rational) -> Result<Float> {
    let mut acc = ctx.zero();
    for k in 0..=kmax {
        let p = sgsp_at(k, m, x)?;
        if p == 0 {
            continue;
        }
        let c = neg_half_pow(k) * p;
        let zd = zeta_sderiv_diff_int(ctx, k as i64 + soff, q)?;
        acc += ctx.rational(&c) * zd;
    }
    Ok(acc)
}

/// Same shape with plain ζ differences instead of the s-derivative.
fn zsum_plain(ctx: &Ctx, m: u32, kmax: u32, x: &Rational, soff: i64, q: &Rational) -> Result<Float> {
    let mut acc = ctx.zero();
    for k in 0..=kmax {
        let p = sgsp_at(k, m, x)?;
        if p == 0 {
            continue;
        }
        let c = neg_half_pow(k) * p;
        let zd = zeta_diff_int(ctx, k as i64 + soff, q)?;
        acc += ctx.rational(&c) * zd;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Delta_n(a, b) = int_0^inf ln(ax) sech^n(bx) dx
// ---------------------------------------------------------------------------

/// `2^(n-2) Gamma^2(n/2) / (n-1)!` — both `int_0^inf sech^n` and the
/// coefficient of `ln(a/b)` in the scaling law.
pub fn delta_scaling_constant(ctx: &Ctx, n: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let g = gamma(ctx, &ctx.ratio(n as i64, 2))?;
    Ok(pow2(ctx, n as i64 - 2) * g.square() / fact_f(ctx, n - 1))
}

/// Delta_n(a, b) through the general Stirling-polynomial / Hurwitz expansion.
pub fn delta_general(ctx: &Ctx, n: u32, a: &Float, b: &Float) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    if !(a.is_finite() && b.is_finite()) || *a <= 0u32 || *b <= 0u32 {
        return Err(Error::domain("delta_general needs a > 0, b > 0"));
    }
    let c = constants(ctx);
    let lab = Float::with_val(ctx.bits(), a / b).ln();
    let mut total = delta_scaling_constant(ctx, n)? * lab;
    let gl4 = c.euler.clone() + c.ln2.clone() * 2u32;
    let x = Rational::from((n, 2));
    let q = Rational::from((n, 4));
    let mut sum = ctx.zero();
    for k in 2..=n + 1 {
        let p = sgsp_at(k - 2, n - 1, &x)?;
        if p == 0 {
            continue;
        }
        let s = k as i64 - n as i64;
        let zd = zeta_sderiv_diff_int(ctx, s, &q)?;
        let z = zeta_diff_int(ctx, s, &q)?;
        sum += ctx.rational(&(neg_half_pow(k) * p)) * (zd - gl4.clone() * z);
    }
    total += pow2(ctx, 2 * n as i64 - 1) / fact_f(ctx, n - 1) * sum;
    Ok(total / b)
}

/// Scaling law: `Delta_n(a, b) = (Delta_n(1, 1) + C_n ln(a/b)) / b`.
pub fn delta_scaling(ctx: &Ctx, n: u32, a: &Float, b: &Float) -> Result<Float> {
    let one = ctx.int(1);
    let base = delta_general(ctx, n, &one, &one)?;
    let lab = Float::with_val(ctx.bits(), a / b).ln();
    Ok((base + delta_scaling_constant(ctx, n)? * lab) / b)
}

/// ln(sqrt(2 a pi) Gamma(3/4) / (sqrt(b) Gamma(1/4)))
fn log_gamma_ratio(ctx: &Ctx, a: &Float, b: &Float) -> Result<Float> {
    let c = constants(ctx);
    let lg34 = log_gamma(ctx, &ctx.ratio(3, 4))?;
    let lg14 = log_gamma(ctx, &ctx.ratio(1, 4))?;
    let arg = Float::with_val(ctx.bits(), a / b) * &c.pi * 2u32;
    Ok(arg.ln() / 2u32 + lg34 - lg14)
}

/// Tabulated closed forms for Delta_n(a, b), n = 1..6.
pub fn delta_table(ctx: &Ctx, n: u32, a: &Float, b: &Float) -> Result<Float> {
    if *a <= 0u32 || *b <= 0u32 {
        return Err(Error::domain("delta_table needs a > 0, b > 0"));
    }
    let c = constants(ctx);
    let lgr = log_gamma_ratio(ctx, a, b)?;
    // ln(a pi / (4 b))
    let lq = (Float::with_val(ctx.bits(), a / b) * &c.pi / 4u32).ln();
    let pi2 = c.pi.clone().square();
    let v = match n {
        1 => c.pi.clone() * &lgr,
        2 => lq - &c.euler,
        3 => c.pi.clone() / 2u32 * &lgr - c.catalan.clone() * 2u32 / &c.pi,
        4 => {
            (lq - &c.euler) * 2u32 / 3u32 - c.zeta3.clone() * 7u32 / (pi2.clone() * 3u32)
        }
        5 => {
            c.pi.clone() * 3u32 / 8u32 * &lgr - c.catalan.clone() * 5u32 / (c.pi.clone() * 3u32)
                + c.pi.clone() / 24u32
                - c.psi3_quarter.clone() / (pi2.clone() * &c.pi * 192u32)
        }
        6 => {
            (lq - &c.euler) * 8u32 / 15u32
                - c.zeta3.clone() * 7u32 / (pi2.clone() * 3u32)
                - c.zeta5.clone() * 31u32 / (pi2.clone().square() * 5u32)
        }
        _ => return Err(Error::domain(format!("delta_table covers n = 1..6, got {n}"))),
    };
    Ok(v / b)
}

/// The transposed Delta_2(a, b) variant with the roles of a and b swapped;
/// coincides with the correct value only at a = b.
pub fn delta2_printed(ctx: &Ctx, a: &Float, b: &Float) -> Result<Float> {
    if *a <= 0u32 || *b <= 0u32 {
        return Err(Error::domain("needs a > 0, b > 0"));
    }
    let c = constants(ctx);
    let lq = (Float::with_val(ctx.bits(), b / a) * &c.pi / 4u32).ln();
    Ok((lq - &c.euler) / a)
}

/// Delta_1(a, b) = (pi/(2b)) (ln(a/b) - gamma) + 2 beta'(1) / b.
pub fn delta1_beta_chain(ctx: &Ctx, a: &Float, b: &Float) -> Result<Float> {
    let c = constants(ctx);
    let bd1 = dirichlet_beta_deriv(ctx, &ctx.int(1))?;
    let lab = Float::with_val(ctx.bits(), a / b).ln();
    Ok((c.pi.clone() / 2u32 * (lab - &c.euler) + bd1 * 2u32) / b)
}

/// beta'(0) = -ln(2 Gamma(3/4) / Gamma(1/4)).
pub fn beta_deriv0_closed(ctx: &Ctx) -> Result<Float> {
    let lg34 = log_gamma(ctx, &ctx.ratio(3, 4))?;
    let lg14 = log_gamma(ctx, &ctx.ratio(1, 4))?;
    Ok(-(constants(ctx).ln2.clone() + lg34 - lg14))
}

/// Both sides of
/// lim_{s->1} [zeta'(s, 1/4) - zeta'(s, 3/4)]
///   = 2 pi ln(Gamma(3/4) sqrt(2 pi) / Gamma(1/4)) + pi (gamma + ln 4).
pub fn zpi_identity(ctx: &Ctx) -> Result<(Float, Float)> {
    let c = constants(ctx);
    let lhs = zeta_sderiv_diff_int(ctx, 1, &Rational::from((1, 4)))?;
    let one = ctx.int(1);
    let lgr = log_gamma_ratio(ctx, &one, &one)?;
    let rhs = c.pi.clone() * 2u32 * lgr + c.pi.clone() * (c.euler.clone() + c.ln2.clone() * 2u32);
    Ok((lhs, rhs))
}

// ---------------------------------------------------------------------------
// chi_n, lambda_n, delta_n (sequence) closed forms
// ---------------------------------------------------------------------------

/// chi_n from the two-sum Stirling/Hurwitz expression (valid for all n >= 1).
pub fn chi_closed(ctx: &Ctx, n: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let c = constants(ctx);
    let ni = n as i64;
    let s1 = zsum(ctx, n - 1, n - 1, &Rational::from((n, 2)), 2 - ni, &Rational::from((n, 4)))?;
    let s2 = zsum(
        ctx,
        n + 1,
        n + 1,
        &Rational::from((ni + 2, 2)),
        -ni,
        &Rational::from((ni + 2, 4)),
    )?;
    let f = fact_f(ctx, n - 1);
    let n2 = Float::with_val(ctx.bits(), n).square();
    Ok(c.catalan.clone() * -4i32 / &c.pi + pow2(ctx, 2 * ni - 3) * n2 / &f * s1
        - pow2(ctx, 2 * ni + 1) / f * s2)
}

/// chi_{2n} in the even-index form (combined Stirling sums at half-integer
/// Hurwitz arguments plus an explicit log term).
pub fn chi_even(ctx: &Ctx, n: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let c = constants(ctx);
    let ni = n as i64;
    let nf = fact_f(ctx, 2 * n - 1);
    let n2 = Integer::from(n).square();
    let xq = Rational::from((n, 2));
    let mut s1 = ctx.zero();
    for k in 1..=n {
        let p1 = sgsp_at(2 * k - 2, 2 * n - 1, &Rational::from(n))?;
        let p2 = sgsp_at(2 * k, 2 * n + 1, &Rational::from(n + 1))?;
        let comb = (Rational::from(&n2) * p1 + p2)
            / Rational::from(Integer::from(1) << (2 * k));
        if comb == 0 {
            continue;
        }
        let zd = zeta_sderiv_diff_int(ctx, 2 * k as i64 - 2 * ni, &xq)?;
        s1 += ctx.rational(&comb) * zd;
    }
    let mut lsum = Rational::new();
    for k in 1..=n {
        lsum += Rational::from(n).pow(2 * ni as i32 - 2 * k as i32)
            * sgsp_at(2 * k, 2 * n + 1, &Rational::from(n + 1))?;
    }
    let logterm = pow2(ctx, 2 * ni + 1) * ctx.ratio(ni, 2).ln() / &nf * ctx.rational(&lsum);
    let last = pow2(ctx, 4 * ni + 1) / &nf
        * zeta_sderiv_diff_int(ctx, -2 * ni, &Rational::from((ni + 1, 2)))?;
    Ok(c.catalan.clone() * -4i32 / &c.pi + pow2(ctx, 4 * ni + 1) / nf * s1 + logterm - last)
}

/// chi_{2n+1} in the odd-index form (even Stirling indices only).
pub fn chi_odd(ctx: &Ctx, n: u32) -> Result<Float> {
    let c = constants(ctx);
    let ni = n as i64;
    let mut s1 = ctx.zero();
    for k in 0..=n {
        let p = sgsp_at(2 * k, 2 * n, &Rational::from((2 * ni + 1, 2)))?;
        if p == 0 {
            continue;
        }
        let coef = p / Rational::from(Integer::from(1) << (2 * k));
        s1 += ctx.rational(&coef)
            * zeta_sderiv_diff_int(ctx, 2 * k as i64 + 1 - 2 * ni, &Rational::from((2 * ni + 1, 4)))?;
    }
    let mut s2 = ctx.zero();
    for k in 0..=n + 1 {
        let p = sgsp_at(2 * k, 2 * n + 2, &Rational::from((2 * ni + 3, 2)))?;
        if p == 0 {
            continue;
        }
        let coef = p / Rational::from(Integer::from(1) << (2 * k));
        s2 += ctx.rational(&coef)
            * zeta_sderiv_diff_int(ctx, 2 * k as i64 - 1 - 2 * ni, &Rational::from((2 * ni + 3, 4)))?;
    }
    let f = fact_f(ctx, 2 * n);
    let sq = Float::with_val(ctx.bits(), 2 * n + 1).square();
    Ok(c.catalan.clone() * -4i32 / &c.pi + pow2(ctx, 4 * ni - 1) * sq / &f * s1
        - pow2(ctx, 4 * ni + 3) / f * s2)
}

/// lambda_n via n lambda_n = chi_n + lambda_1, with lambda_1 = 4 G / pi.
pub fn lambda_closed(ctx: &Ctx, n: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let c = constants(ctx);
    let l1 = c.catalan.clone() * 4u32 / &c.pi;
    Ok((chi_closed(ctx, n)? + l1) / n)
}

/// lambda_{2n} in the even-index form.
pub fn lambda_even(ctx: &Ctx, n: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let ni = n as i64;
    let nf = fact_f(ctx, 2 * n - 1);
    let n2 = Integer::from(n).square();
    let xq = Rational::from((n, 2));
    let mut s1 = ctx.zero();
    for k in 1..=n {
        let p1 = sgsp_at(2 * k - 2, 2 * n - 1, &Rational::from(n))?;
        let p2 = sgsp_at(2 * k, 2 * n + 1, &Rational::from(n + 1))?;
        let comb = (Rational::from(&n2) * p1 + p2)
            / Rational::from(Integer::from(1) << (2 * k));
        if comb == 0 {
            continue;
        }
        s1 += ctx.rational(&comb) * zeta_sderiv_diff_int(ctx, 2 * k as i64 - 2 * ni, &xq)?;
    }
    let mut lsum = Rational::new();
    for k in 1..=n {
        lsum += Rational::from(n).pow(2 * ni as i32 - 1 - 2 * k as i32)
            * sgsp_at(2 * k, 2 * n + 1, &Rational::from(n + 1))?;
    }
    let logterm = pow2(ctx, 2 * ni) * ctx.ratio(ni, 2).ln() / &nf * ctx.rational(&lsum);
    let last = pow2(ctx, 4 * ni) / (nf.clone() * n)
        * zeta_sderiv_diff_int(ctx, -2 * ni, &Rational::from((ni + 1, 2)))?;
    Ok(pow2(ctx, 4 * ni) / (nf * n) * s1 + logterm - last)
}

/// lambda_{2n+1} in the odd-index form.
pub fn lambda_odd(ctx: &Ctx, n: u32) -> Result<Float> {
    let ni = n as i64;
    let mut s1 = ctx.zero();
    for k in 0..=n {
        let p = sgsp_at(2 * k, 2 * n, &Rational::from((2 * ni + 1, 2)))?;
        if p == 0 {
            continue;
        }
        let coef = p / Rational::from(Integer::from(1) << (2 * k));
        s1 += ctx.rational(&coef)
            * zeta_sderiv_diff_int(ctx, 2 * k as i64 + 1 - 2 * ni, &Rational::from((2 * ni + 1, 4)))?;
    }
    let mut s2 = ctx.zero();
    for k in 0..=n + 1 {
        let p = sgsp_at(2 * k, 2 * n + 2, &Rational::from((2 * ni + 3, 2)))?;
        if p == 0 {
            continue;
        }
        let coef = p / Rational::from(Integer::from(1) << (2 * k));
        s2 += ctx.rational(&coef)
            * zeta_sderiv_diff_int(ctx, 2 * k as i64 - 1 - 2 * ni, &Rational::from((2 * ni + 3, 4)))?;
    }
    Ok(
        pow2(ctx, 4 * ni - 1) * (2 * n + 1) / fact_f(ctx, 2 * n) * s1
            - pow2(ctx, 4 * ni + 3) / fact_f(ctx, 2 * n + 1) * s2,
    )
}

/// delta_n (the sequence) from its own four-sum expression.
pub fn delta_seq_direct(ctx: &Ctx, n: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let ni = n as i64;
    let a1 = zsum(ctx, n, n, &Rational::from((ni + 1, 2)), 1 - ni, &Rational::from((ni + 1, 4)))?;
    let a2 = zsum(
        ctx,
        n + 2,
        n + 2,
        &Rational::from((ni + 3, 2)),
        -1 - ni,
        &Rational::from((ni + 3, 4)),
    )?;
    let a3 = zsum(ctx, n - 1, n - 1, &Rational::from((n, 2)), 2 - ni, &Rational::from((n, 4)))?;
    let a4 = zsum(
        ctx,
        n + 1,
        n + 1,
        &Rational::from((ni + 2, 2)),
        -ni,
        &Rational::from((ni + 2, 4)),
    )?;
    let fn0 = fact_f(ctx, n);
    let fn1 = fact_f(ctx, n - 1);
    let np1 = Float::with_val(ctx.bits(), n + 1).square();
    let n2 = Float::with_val(ctx.bits(), n).square();
    Ok(pow2(ctx, 2 * ni - 1) * np1 / &fn0 * a1 - pow2(ctx, 2 * ni + 3) / fn0 * a2
        - pow2(ctx, 2 * ni - 3) * n2 / &fn1 * a3
        + pow2(ctx, 2 * ni + 1) / fn1 * a4)
}

/// delta_n = chi_{n+1} - chi_n.
pub fn delta_seq_closed(ctx: &Ctx, n: u32) -> Result<Float> {
    Ok(chi_closed(ctx, n + 1)? - chi_closed(ctx, n)?)
}

/// Printed constants for chi_n, n = 1..6.
pub fn chi_table(ctx: &Ctx, n: u32) -> Result<Float> {
    let c = constants(ctx);
    let pi2 = c.pi.clone().square();
    let pi3 = pi2.clone() * &c.pi;
    let pi4 = pi2.clone().square();
    let g = &c.catalan;
    let v = match n {
        1 => ctx.zero(),
        2 => g.clone() * -4i32 / &c.pi + c.zeta3.clone() * 14u32 / &pi2,
        3 => g.clone() * -2i32 / &c.pi - c.pi.clone() / 2u32 + c.psi3_quarter.clone() / (pi3 * 16u32),
        4 => {
            g.clone() * -4i32 / &c.pi + c.zeta3.clone() * 28u32 / (pi2.clone() * 3u32)
                + c.zeta5.clone() * 124u32 / &pi4
        }
        5 => {
            g.clone() * -5i32 / (c.pi.clone() * 2u32) - c.pi.clone() * 3u32 / 4u32
                + c.psi3_quarter.clone() * 5u32 / (pi3.clone() * 96u32)
                + c.psi5_quarter.clone() / (pi3 * pi2 * 768u32)
        }
        6 => {
            g.clone() * -4i32 / &c.pi + c.zeta3.clone() * 112u32 / (pi2.clone() * 15u32)
                + c.zeta5.clone() * 124u32 / &pi4
                + c.zeta7.clone() * 762u32 / (pi4 * pi2)
        }
        _ => return Err(Error::domain(format!("chi_table covers n = 1..6, got {n}"))),
    };
    Ok(v)
}

/// Printed constants for lambda_n, n = 1..6.
pub fn lambda_table(ctx: &Ctx, n: u32) -> Result<Float> {
    let c = constants(ctx);
    let pi2 = c.pi.clone().square();
    let pi3 = pi2.clone() * &c.pi;
    let pi4 = pi2.clone().square();
    let v = match n {
        1 => c.catalan.clone() * 4u32 / &c.pi,
        2 => c.zeta3.clone() * 7u32 / &pi2,
        3 => {
            c.catalan.clone() * 2u32 / (c.pi.clone() * 3u32) - c.pi.clone() / 6u32
                + c.psi3_quarter.clone() / (pi3 * 48u32)
        }
        4 => c.zeta3.clone() * 7u32 / (pi2.clone() * 3u32) + c.zeta5.clone() * 31u32 / &pi4,
        5 => {
            c.catalan.clone() * 3u32 / (c.pi.clone() * 10u32) - c.pi.clone() * 3u32 / 20u32
                + c.psi3_quarter.clone() / (pi3.clone() * 96u32)
                + c.psi5_quarter.clone() / (pi3 * pi2 * 3840u32)
        }
        6 => {
            c.zeta3.clone() * 56u32 / (pi2.clone() * 45u32)
                + c.zeta5.clone() * 62u32 / (pi4.clone() * 3u32)
                + c.zeta7.clone() * 127u32 / (pi4 * pi2)
        }
        _ => return Err(Error::domain(format!("lambda_table covers n = 1..6, got {n}"))),
    };
    Ok(v)
}

/// Printed constants for delta_n (the sequence), n = 1..6.
pub fn delta_seq_table(ctx: &Ctx, n: u32) -> Result<Float> {
    let c = constants(ctx);
    let pi2 = c.pi.clone().square();
    let pi3 = pi2.clone() * &c.pi;
    let pi4 = pi2.clone().square();
    let pi5 = pi3.clone() * &pi2;
    let pi6 = pi4.clone() * &pi2;
    let pi7 = pi5.clone() * &pi2;
    let g = &c.catalan;
    let v = match n {
        1 => g.clone() * -4i32 / &c.pi + c.zeta3.clone() * 14u32 / &pi2,
        2 => {
            c.zeta3.clone() * -14i32 / &pi2 + g.clone() * 2u32 / &c.pi - c.pi.clone() / 2u32
                + c.psi3_quarter.clone() / (pi3 * 16u32)
        }
        3 => {
            g.clone() * -2i32 / &c.pi + c.zeta3.clone() * 28u32 / (pi2.clone() * 3u32)
                + c.zeta5.clone() * 124u32 / &pi4
                + c.pi.clone() / 2u32
                - c.psi3_quarter.clone() / (pi3 * 16u32)
        }
        4 => {
            g.clone() * 3u32 / (c.pi.clone() * 2u32) - c.zeta3.clone() * 28u32 / (pi2.clone() * 3u32)
                - c.zeta5.clone() * 124u32 / &pi4
                - c.pi.clone() * 3u32 / 4u32
                + c.psi3_quarter.clone() * 5u32 / (pi3 * 96u32)
                + c.psi5_quarter.clone() / (pi5 * 768u32)
        }
        5 => {
            g.clone() * -3i32 / (c.pi.clone() * 2u32)
                + c.zeta3.clone() * 112u32 / (pi2.clone() * 15u32)
                + c.zeta5.clone() * 124u32 / &pi4
                + c.zeta7.clone() * 762u32 / &pi6
                + c.pi.clone() * 3u32 / 4u32
                - c.psi3_quarter.clone() * 5u32 / (pi3 * 96u32)
                - c.psi5_quarter.clone() / (pi5 * 768u32)
        }
        6 => {
            g.clone() * 5u32 / (c.pi.clone() * 4u32) - c.pi.clone() * 15u32 / 16u32
                - c.zeta3.clone() * 112u32 / (pi2.clone() * 15u32)
                - c.zeta5.clone() * 124u32 / &pi4
                - c.zeta7.clone() * 762u32 / &pi6
                + c.psi3_quarter.clone() * 259u32 / (pi3 * 5760u32)
                + c.psi5_quarter.clone() * 7u32 / (pi5 * 4608u32)
                + c.psi7_quarter.clone() / (pi7 * 92160u32)
        }
        _ => return Err(Error::domain(format!("delta_seq_table covers n = 1..6, got {n}"))),
    };
    Ok(v)
}

// ---------------------------------------------------------------------------
// Recurrences
// ---------------------------------------------------------------------------

/// Delta_n = (n-2)/(n-1) Delta_{n-2} - lambda_{n-2}/(n-1), n >= 3.
pub fn delta_recurrence_lambda(ctx: &Ctx, n: u32) -> Result<Float> {
    if n < 3 {
        return Err(Error::domain("recurrence needs n >= 3"));
    }
    let one = ctx.int(1);
    let base = delta_general(ctx, n - 2, &one, &one)?;
    let lam = lambda_closed(ctx, n - 2)?;
    Ok((base * (n - 2) - lam) / (n - 1))
}

/// Delta_n = (n-2)/(n-1) Delta_{n-2} - (chi_{n-2} + 4G/pi)/((n-2)(n-1)), n >= 3.
pub fn delta_recurrence_chi(ctx: &Ctx, n: u32) -> Result<Float> {
    if n < 3 {
        return Err(Error::domain("recurrence needs n >= 3"));
    }
    let c = constants(ctx);
    let one = ctx.int(1);
    let base = delta_general(ctx, n - 2, &one, &one)?;
    let chi = chi_closed(ctx, n - 2)?;
    let l1 = c.catalan.clone() * 4u32 / &c.pi;
    Ok(base * (n - 2) / (n - 1) - (chi + l1) / ((n - 2) * (n - 1)))
}

// ---------------------------------------------------------------------------
// Stirling/Hurwitz identities
// ---------------------------------------------------------------------------

/// Both sides of
/// Σ_{k=0}^{n-1} (-1/2)^k P_k(n-1, n/2) [ζ(k-n+2, n/4) - ζ(k-n+2, (n+2)/4)]
///   = 2^(1-n) Gamma^2(n/2).
pub fn cojer_identity(ctx: &Ctx, n: u32) -> Result<(Float, Float)> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let ni = n as i64;
    let lhs = zsum_plain(ctx, n - 1, n - 1, &Rational::from((n, 2)), 2 - ni, &Rational::from((n, 4)))?;
    let g = gamma(ctx, &ctx.ratio(ni, 2))?;
    let rhs = pow2(ctx, 1 - ni) * g.square();
    Ok((lhs, rhs))
}

/// The vanishing combination of the two plain-zeta Stirling sums; exactly 0
/// for every n >= 1.
pub fn conj1_combination(ctx: &Ctx, n: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let ni = n as i64;
    let s1 = zsum_plain(ctx, n - 1, n - 1, &Rational::from((n, 2)), 2 - ni, &Rational::from((n, 4)))?;
    let s2 = zsum_plain(
        ctx,
        n + 1,
        n + 1,
        &Rational::from((ni + 2, 2)),
        -ni,
        &Rational::from((ni + 2, 4)),
    )?;
    let n2 = Float::with_val(ctx.bits(), n).square();
    Ok(pow2(ctx, 2 * ni + 1) / fact_f(ctx, n - 1) * (n2 / 16u32 * s1 - s2))
}

/// int_0^1 x^(n-1)/(1+x^2)^n dx through the Stirling/Hurwitz sum.
pub fn rational_power_sgsp(ctx: &Ctx, n: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let ni = n as i64;
    let s = zsum_plain(ctx, n - 1, n - 1, &Rational::from((n, 2)), 2 - ni, &Rational::from((n, 4)))?;
    Ok(pow2(ctx, ni - 3) / fact_f(ctx, n - 1) * s)
}

/// Both sides of the general two-parameter Stirling/Hurwitz identity:
/// Σ_{k=1}^{m+1} (-1/2)^(k-1) [P_{k-1}(m, p/n) Δζ(k-m; p/(2n))
///   + P_{k-1}(m, m+1-p/n) Δζ(k-m; (nm+n-p)/(2n))] = 2^(1-m) Γ(p/n) Γ(m+1-p/n),
/// where Δζ(s; x) = ζ(s, x) - ζ(s, x+1/2).
pub fn hurwitz_sgsp_general(ctx: &Ctx, m: u32, p: u32, n: u32) -> Result<(Float, Float)> {
    if n == 0 || p == 0 || p >= n * (m + 1) {
        return Err(Error::domain("needs 0 < p < n(m+1)"));
    }
    let x1 = Rational::from((p, n));
    let x2 = Rational::from(((n * m + n - p), n));
    let q1 = Rational::from((p, 2 * n));
    let q2 = Rational::from(((n * m + n - p), 2 * n));
    let mut lhs = ctx.zero();
    for k in 1..=m + 1 {
        let s = k as i64 - m as i64;
        let mut term = ctx.zero();
        let p1 = sgsp_at(k - 1, m, &x1)?;
        if p1 != 0 {
            term += ctx.rational(&p1) * zeta_diff_int(ctx, s, &q1)?;
        }
        let p2 = sgsp_at(k - 1, m, &x2)?;
        if p2 != 0 {
            term += ctx.rational(&p2) * zeta_diff_int(ctx, s, &q2)?;
        }
        lhs += ctx.rational(&neg_half_pow(k - 1)) * term;
    }
    let g1 = gamma(ctx, &ctx.rational(&x1))?;
    let g2 = gamma(ctx, &ctx.rational(&x2))?;
    let rhs = pow2(ctx, 1 - m as i64) * g1 * g2;
    Ok((lhs, rhs))
}

/// Nested sum Σ_{k_d=l_d}^{n} ... Σ_{k_1=l_1}^{k_2} chi_{k_1}, closed route.
pub fn nested_chi_sum(ctx: &Ctx, lower: &[u32], n: u32) -> Result<Float> {
    if lower.is_empty() || lower.iter().any(|&l| l == 0) {
        return Err(Error::domain("lower bounds must be nonempty and >= 1"));
    }
    let mut cache: Vec<Option<Float>> = vec![None; n as usize + 1];
    fn rec(ctx: &Ctx, lower: &[u32], top: u32, cache: &mut Vec<Option<Float>>) -> Result<Float> {
        let (&l, rest) = lower.split_last().unwrap();
        let mut acc = ctx.zero();
        for k in l..=top {
            if rest.is_empty() {
                if cache[k as usize].is_none() {
                    cache[k as usize] = Some(chi_closed(ctx, k)?);
                }
                acc += cache[k as usize].as_ref().unwrap();
            } else {
                acc += rec(ctx, rest, k, cache)?;
            }
        }
        Ok(acc)
    }
    rec(ctx, lower, n, &mut cache)
}

// ---------------------------------------------------------------------------
// Log-weighted alternating zeta derivative difference
// ---------------------------------------------------------------------------

/// Both sides of the half-argument zeta'-difference lemma at (m, n):
/// ζ'(n, m/2) - ζ'(n, (m+1)/2) in terms of polygamma, ζ(n), ζ'(n), and a
/// finite alternating log sum.
pub fn half_zeta_sderiv_identity(ctx: &Ctx, m: u32, n: u32) -> Result<(Float, Float)> {
    if m == 0 || n == 0 {
        return Err(Error::domain("needs m >= 1, n >= 1"));
    }
    if n > 9 {
        return Err(Error::domain("polygamma route covers n <= 9"));
    }
    let c = constants(ctx);
    let bits = ctx.bits();
    let xm = ctx.ratio(m as i64, 2);
    let xm1 = ctx.ratio(m as i64 + 1, 2);
    let lhs = if n == 1 {
        zeta_sderiv_diff_limit_s1(ctx, &xm)?
    } else {
        let sf = ctx.int(n as i64);
        hurwitz_zeta_sderiv(ctx, &sf, &xm)? - hurwitz_zeta_sderiv(ctx, &sf, &xm1)?
    };
    let sgn_m1 = if m % 2 == 0 { -1i32 } else { 1i32 }; // (-1)^(m-1)
    let mut rhs = if n == 1 {
        let q = (c.ln2.clone().square() - c.euler.clone() * &c.ln2 * 2u32) * -sgn_m1;
        let pd = polygamma(ctx, 0, &xm)? - polygamma(ctx, 0, &xm1)?;
        -c.ln2.clone() * pd + q
    } else {
        let one = ctx.int(1);
        let sf = ctx.int(n as i64);
        let zn = hurwitz_zeta(ctx, &sf, &one)?;
        let zdn = hurwitz_zeta_sderiv(ctx, &sf, &one)?;
        let q = (c.ln2.clone() * 2u32 * zn + (pow2(ctx, n as i64) - 2u32) * zdn) * sgn_m1;
        let pd = polygamma(ctx, n - 1, &xm)? - polygamma(ctx, n - 1, &xm1)?;
        let sgn_n = if n % 2 == 0 { 1i32 } else { -1i32 };
        c.ln2.clone() * pd / fact_f(ctx, n - 1) * sgn_n + q
    };
    if m >= 3 {
        let mut tail = ctx.zero();
        for k in 2..m {
            let t = Float::with_val(bits, k).ln() / Float::with_val(bits, k).pow(n as i32);
            if k % 2 == 0 {
                tail += t;
            } else {
                tail -= t;
            }
        }
        let sgn_m = if m % 2 == 0 { 1i32 } else { -1i32 };
        rhs += pow2(ctx, n as i64) * tail * sgn_m;
    }
    Ok((lhs, rhs))
}

/// Both sides of the reflection formula
/// ζ'(-n, z) + (-1)^n ζ'(-n, 1-z)
///   = pi i B_{n+1}(z)/(n+1) + n! e^{-pi i n/2} (2 pi)^{-n} Li_{n+1}(e^{2 pi i z}).
pub fn zeta_sderiv_reflection(ctx: &Ctx, n: u32, z: &Rational) -> Result<(Complex, Complex)> {
    if *z <= 0 || *z >= 1 {
        return Err(Error::domain("needs 0 < z < 1"));
    }
    let c = constants(ctx);
    let bits = ctx.bits();
    let sf = ctx.int(-(n as i64));
    let zf = ctx.rational(z);
    let zr = ctx.rational(&(Rational::from(1) - z.clone()));
    let d1 = hurwitz_zeta_sderiv(ctx, &sf, &zf)?;
    let d2 = hurwitz_zeta_sderiv(ctx, &sf, &zr)?;
    let lhs_re = if n % 2 == 0 { d1 + d2 } else { d1 - d2 };
    let lhs = Complex::with_val(bits, (lhs_re, ctx.zero()));
    let bp = exactcomb::bernoulli_poly(n + 1, z) / Rational::from(n + 1);
    let bterm = Complex::with_val(bits, (ctx.zero(), c.pi.clone() * ctx.rational(&bp)));
    let li = polylog_unit_circle(ctx, n + 1, &zf)?;
    let scale = fact_f(ctx, n) / (c.pi.clone() * 2u32).pow(n as i32);
    // e^{-pi i n / 2} cycles 1, -i, -1, i
    let phased = match n % 4 {
        0 => li,
        1 => Complex::with_val(bits, (li.imag(), -li.real().clone())),
        2 => -li,
        _ => Complex::with_val(bits, (-li.imag().clone(), li.real())),
    };
    let rhs = bterm + phased * scale;
    Ok((lhs, rhs))
}

// ---------------------------------------------------------------------------
// Two-dimensional reductions
// ---------------------------------------------------------------------------

/// delta_n (the sequence) from the double integral over the unit square.
pub fn delta_seq_2d(ctx: &Ctx, n: u32, tol: &Float) -> Result<Float> {
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let bits = ctx.bits();
    let q = tensor_2d_unit_square(
        ctx,
        |a, b| {
            let s = Float::with_val(bits, a + b);
            let head = match gamma(ctx, &((s.clone() + n) / 2u32)) {
                Ok(v) => v,
                Err(_) => return Float::with_val(bits, rug::float::Special::Nan),
            };
            let mut inner = ctx.zero();
            for k in 0..n {
                let arg = (s.clone() + n - 2u32 * k) / 2u32;
                inner += pow2(ctx, k as i64 - n as i64 - 1)
                    * fact_f(ctx, n - k - 1)
                    * recip_gamma(ctx, &arg);
            }
            let w = (s - n) / 4u32;
            inner += psi_diff_rgamma(ctx, &w) / 4u32;
            head * inner
        },
        tol,
    )?;
    Ok(-(pow2(ctx, n as i64) / fact_f(ctx, n)) * q.value)
}

/// Delta_n, n >= 4, from the reduction through Delta_{n-2} and the family of
/// double integrals (one per k = 1..n-3).
pub fn delta_2d_reduction(ctx: &Ctx, n: u32, tol: &Float) -> Result<Float> {
    if n < 4 {
        return Err(Error::domain("reduction needs n >= 4"));
    }
    let c = constants(ctx);
    let bits = ctx.bits();
    let one = ctx.int(1);
    let base = delta_general(ctx, n - 2, &one, &one)?;
    let denom = ((n - 2) * (n - 1)) as u32;
    let mut acc = c.catalan.clone() * -4i32 / (c.pi.clone() * denom) + base * (n - 2) / (n - 1);
    for k in 1..=n - 3 {
        let q = tensor_2d_unit_square(
            ctx,
            |a, b| {
                let s = Float::with_val(bits, a + b);
                let head = match gamma(ctx, &((s.clone() + k) / 2u32)) {
                    Ok(v) => v,
                    Err(_) => return Float::with_val(bits, rug::float::Special::Nan),
                };
                let mut inner = ctx.zero();
                for j in 0..k {
                    let arg = (s.clone() + k - 2u32 * j) / 2u32;
                    inner += pow2(ctx, j as i64 - 1)
                        * fact_f(ctx, k - j - 1)
                        * recip_gamma(ctx, &arg);
                }
                let w = (s - k) / 4u32;
                inner += psi_diff_rgamma(ctx, &w) * pow2(ctx, k as i64 - 2);
                head * inner / fact_f(ctx, k)
            },
            tol,
        )?;
        acc += q.value / denom;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Closed values for the named integrands
// ---------------------------------------------------------------------------

/// int_0^inf ln(x^2 + a^2) sech(bx) dx.
pub fn malmsten_log_quadratic(ctx: &Ctx, a: &Float, b: &Float) -> Result<Float> {
    if *b <= 0u32 {
        return Err(Error::domain("needs b > 0"));
    }
    let c = constants(ctx);
    let bits = ctx.bits();
    let r = Float::with_val(bits, a).abs() * b / (c.pi.clone() * 2u32);
    let lg3 = log_gamma(ctx, &(r.clone() + ctx.ratio(3, 4)))?;
    let lg1 = log_gamma(ctx, &(r + ctx.ratio(1, 4)))?;
    let half_log = (c.pi.clone() * 2u32 / b).ln() / 2u32;
    Ok(c.pi.clone() * 2u32 / b * (half_log + lg3 - lg1))
}

/// ln(Gamma(1/2 + a|y|/pi) / sqrt(pi))
fn arctan_l(ctx: &Ctx, a: &Float, y: &Float) -> Result<Float> {
    let c = constants(ctx);
    let arg = ctx.ratio(1, 2) + Float::with_val(ctx.bits(), a * y).abs() / &c.pi;
    Ok(log_gamma(ctx, &arg)? - c.pi.clone().ln() / 2u32)
}

/// Closed value of a named integrand from the quadrature catalog.
pub fn named_closed(ctx: &Ctx, name: &str, p: &NamedParams) -> Result<Float> {
    let c = constants(ctx);
    let bits = ctx.bits();
    let y = Float::with_val(bits, &p.y).abs();
    let a = p.a.clone();
    if a <= 0u32 && name != "cosine_sech" {
        return Err(Error::domain("needs a > 0"));
    }
    // psi(1/2 + a|y|/pi)
    let psi_shift = |ctx: &Ctx| -> Result<Float> {
        let arg = ctx.ratio(1, 2) + Float::with_val(bits, &a * &y) / &c.pi;
        polygamma(ctx, 0, &arg)
    };
    let need_y = |v: &Float| -> Result<()> {
        if v.is_zero() {
            Err(Error::domain(format!("{name} needs y != 0")))
        } else {
            Ok(())
        }
    };
    let lpay = |_ctx: &Ctx| -> Float {
        // ln(pi / (a |y|))
        (c.pi.clone() / Float::with_val(bits, &a * &y)).ln()
    };
    match name {
        "cosine_sech" => {
            let t = Float::with_val(bits, (c.pi.clone() * &p.tau / 2u32).cosh_ref());
            Ok(c.pi.clone() / 2u32 / t)
        }
        "log_quadratic_sech" => malmsten_log_quadratic(ctx, &p.a, &p.b),
        "kappa" => {
            if y.is_zero() {
                return Ok(ctx.zero());
            }
            let arg = (y.clone() + 1u32) / 2u32;
            let p1 = polygamma(ctx, 0, &arg)?;
            let p0 = polygamma(ctx, 0, &ctx.ratio(1, 2))?;
            Ok(p1 - p0)
        }
        "kappa1" => {
            need_y(&y)?;
            let arg = (y.clone() + 1u32) / 2u32;
            Ok(polygamma(ctx, 0, &arg)? + (ctx.int(2) / &y).ln())
        }
        "kappa2" => {
            need_y(&y)?;
            Ok(c.euler.clone() + (y.clone() * 2u32).ln())
        }
        "tanh_rational_psi" => {
            if y.is_zero() {
                return Ok(ctx.zero());
            }
            let p0 = polygamma(ctx, 0, &ctx.ratio(1, 2))?;
            Ok(psi_shift(ctx)? - p0)
        }
        "tanh_rational_log" => {
            need_y(&y)?;
            Ok(psi_shift(ctx)? + lpay(ctx))
        }
        "tanh_rational_gamma" => {
            need_y(&y)?;
            Ok(c.euler.clone() + c.ln2.clone() * 2u32 - lpay(ctx))
        }
        "arctan_tanh" => {
            need_y(&y)?;
            let l = arctan_l(ctx, &a, &y)?;
            Ok(c.pi.clone() / &a * l + y.clone() * (lpay(ctx) + 1u32))
        }
        "log_exp_sech" => {
            need_y(&y)?;
            let l = arctan_l(ctx, &a, &y)?;
            Ok(c.pi.clone() / &y * l + a.clone() * (lpay(ctx) + 1u32))
        }
        "gamma_rep_1" | "gamma_rep_2" => {
            need_y(&y)?;
            let l = arctan_l(ctx, &a, &y)?;
            let v = c.euler.clone() + c.ln2.clone() * 2u32
                + c.pi.clone() / Float::with_val(bits, &a * &y) * l;
            if name == "gamma_rep_1" {
                Ok(v)
            } else {
                Ok(v * &a / y.clone().square())
            }
        }
        "gamma_rep_3" | "gamma_rep_5" => {
            need_y(&y)?;
            Ok(c.euler.clone() - 1u32 + c.ln2.clone() * 2u32 - lpay(ctx))
        }
        "gamma_rep_4" => {
            need_y(&y)?;
            Ok(c.euler.clone() - 2u32 + c.ln2.clone() * 2u32 - lpay(ctx))
        }
        "sech2_log" => {
            let v = psi_shift(ctx)? + (c.pi.clone() / &a).ln();
            Ok(v * 2u32 / a)
        }
        "sech_power" => delta_scaling_constant(ctx, p.n),
        "rational_power" => {
            if p.n == 0 {
                return Err(Error::domain("n must be >= 1"));
            }
            let g = gamma(ctx, &ctx.ratio(p.n as i64, 2))?;
            Ok(g.square() / (fact_f(ctx, p.n - 1) * 4u32))
        }
        _ => Err(Error::UnknownIntegrand(name.to_string())),
    }
}
