//! Exact arbitrary-precision combinatorics: Stirling cycle numbers, complete
//! Bell polynomials, generalized harmonic numbers, Bernoulli numbers and
//! polynomials, and both families of generalized Stirling polynomials.
//!
//! Everything here is exact (`rug::Integer` / `rug::Rational`, no rounding).
//! Memo tables (Stirling triangle, Bernoulli numbers) are grown lazily behind
//! mutexes and read concurrently thereafter.

use std::fmt;
use std::sync::Mutex;

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Dense univariate polynomial with rational coefficients
// ---------------------------------------------------------------------------

/// Dense univariate polynomial; `coeffs[j]` is the coefficient of `x^j`.
/// Trailing zeros are trimmed; the zero polynomial has an empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(|| Rational::new())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }
}

impl fmt::Display for RationalPoly {
    /// Renders in descending powers, e.g. `x^2 - 3x + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for j in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[j];
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let mag = c.clone().abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag == 1;
            match j {
                0 => write!(f, "{mag}")?,
                1 => {
                    if unit {
                        write!(f, "x")?
                    } else {
                        write!(f, "{mag}x")?
                    }
                }
                _ => {
                    if unit {
                        write!(f, "x^{j}")?
                    } else {
                        write!(f, "{mag}x^{j}")?
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Stirling cycle numbers
// ---------------------------------------------------------------------------

static STIRLING: Mutex<Vec<Vec<Integer>>> = Mutex::new(Vec::new());

/// Unsigned Stirling number of the first kind `[n k]` (cycle count).
///
/// `k > n` is allowed and yields 0. The triangle is built once by the
/// recurrence `[n+1 k] = n [n k] + [n k-1]` and cached.
pub fn stirling_cycle(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    let n = n as usize;
    let k = k as usize;
    let mut tab = STIRLING.lock().unwrap();
    if tab.is_empty() {
        tab.push(vec![Integer::from(1)]);
    }
    while tab.len() <= n {
        let m = tab.len(); // building row m from row m-1
        let prev = &tab[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let mut v = Integer::new();
            if j <= m - 1 {
                v += prev[j].clone() * (m as u64 - 1);
            }
            if j >= 1 && j - 1 <= m - 1 {
                v += &prev[j - 1];
            }
            row.push(v);
        }
        tab.push(row);
    }
    tab[n][k].clone()
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(n).binomial(k as u32)
}

pub fn factorial(n: u32) -> Integer {
    Integer::factorial(n).into()
}

// ---------------------------------------------------------------------------
// Harmonic numbers and Bell polynomials
// ---------------------------------------------------------------------------

/// Generalized harmonic number `H_n^(m) = Σ_{k=1..n} k^(-m)`, exact.
pub fn harmonic(n: u32, m: u32) -> Rational {
    assert!(m >= 1, "harmonic order m must be positive");
    let mut acc = Rational::new();
    for k in 1..=n {
        acc += Rational::from((1, Integer::from(k).pow(m)));
    }
    acc
}

/// Complete Bell polynomial `B_n(x_1, ..., x_n)` by the binomial recurrence
/// `B_{n+1} = Σ_{k=0..n} C(n,k) B_k x_{n+1-k}`; `B_0 = 1`.
pub fn bell_complete(n: usize, xs: &[Rational]) -> Result<Rational> {
    if xs.len() < n {
        return Err(Error::domain(format!(
            "bell_complete: need at least {n} arguments, got {}",
            xs.len()
        )));
    }
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::from(1));
    for m in 0..n {
        // B_{m+1} = Σ_{k=0..m} C(m,k) B_k x_{m+1-k}
        let mut acc = Rational::new();
        for k in 0..=m {
            acc += Rational::from(binomial(m as u64, k as u64)) * b[k].clone() * &xs[m - k];
        }
        b.push(acc);
    }
    Ok(b[n].clone())
}

/// The Bell argument list `(H_m, -H_m^(2), 2! H_m^(3), ...)` of length `len`:
/// entry `r` (1-based) is `(-1)^(r-1) (r-1)! H_m^(r)`.
fn harmonic_bell_args(m: u32, len: usize) -> Vec<Rational> {
    (1..=len as u32)
        .map(|r| {
            let mut v = Rational::from(factorial(r - 1)) * harmonic(m, r);
            if (r - 1) % 2 == 1 {
                v = -v;
            }
            v
        })
        .collect()
}

/// Stirling cycle number `[n+1 r+1]` reconstructed through the complete Bell
/// polynomial: `n!/r! B_r(H_n, -H_n^(2), ..., (-1)^(r-1)(r-1)! H_n^(r))`.
pub fn stirling_via_bell(n: u32, r: u32) -> Result<Rational> {
    if r > n {
        return Err(Error::domain(format!("stirling_via_bell: r={r} > n={n}")));
    }
    let args = harmonic_bell_args(n, r as usize);
    let b = bell_complete(r as usize, &args)?;
    Ok(Rational::from((factorial(n), factorial(r))) * b)
}

// ---------------------------------------------------------------------------
// Signed generalized Stirling polynomials P_k(m, x)
// ---------------------------------------------------------------------------

/// `P_k(m, x)` as an exact polynomial in `x`, from the cycle-number
/// representation: coefficient of `x^j` is
/// `(-1)^(j-k) C(j+m-k, m-k) [m+1 over j+m-k+1]`, for `j = 0..k`.
pub fn sgsp_poly(k: u32, m: u32) -> Result<RationalPoly> {
    if k > m {
        return Err(Error::domain(format!("sgsp_poly: k={k} > m={m}")));
    }
    let mut coeffs = Vec::with_capacity(k as usize + 1);
    for j in 0..=k {
        let mut c = Rational::from(
            binomial((j + m - k) as u64, (m - k) as u64) * stirling_cycle(m + 1, j + m - k + 1),
        );
        if (k - j) % 2 == 1 {
            c = -c;
        }
        coeffs.push(c);
    }
    Ok(RationalPoly::new(coeffs))
}

/// `P_k(m, x)` evaluated through the complete-Bell-polynomial representation:
/// `Σ_{j=m-k..m} (-1)^(j-m) x^(j+k-m) C(j, m-k) m!/j! B_j(H_m, -H_m^(2), ...)`.
///
/// Cross-check path; must agree with `sgsp_poly(k, m).eval(x)`.
pub fn sgsp_eval_bell(k: u32, m: u32, x: &Rational) -> Result<Rational> {
    if k > m {
        return Err(Error::domain(format!("sgsp_eval_bell: k={k} > m={m}")));
    }
    let args = harmonic_bell_args(m, m as usize);
    let mut acc = Rational::new();
    for j in (m - k)..=m {
        let b = bell_complete(j as usize, &args)?;
        let mut term = Rational::from(binomial(j as u64, (m - k) as u64))
            * Rational::from((factorial(m), factorial(j)))
            * b
            * x.clone().pow((j + k - m) as u32);
        if (m - j) % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    Ok(acc)
}

/// Generalized Stirling polynomial value
/// `P_{k,n}(z) = Σ_{j=k+1..n} (-z)^(j-k-1) C(j-1, k) [n over j]`.
pub fn gsp_eval(k: u32, n: u32, z: &Rational) -> Result<Rational> {
    if k >= n {
        return Err(Error::domain(format!("gsp_eval: k={k} >= n={n}")));
    }
    let neg_z = -z.clone();
    let mut acc = Rational::new();
    for j in (k + 1)..=n {
        acc += Rational::from(binomial((j - 1) as u64, k as u64) * stirling_cycle(n, j))
            * neg_z.clone().pow(j - k - 1);
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Bernoulli numbers and polynomials
// ---------------------------------------------------------------------------

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` (B_1 = -1/2 convention), exact and memoized.
pub fn bernoulli(n: u32) -> Rational {
    let n = n as usize;
    let mut tab = BERNOULLI.lock().unwrap();
    if tab.is_empty() {
        tab.push(Rational::from(1));
    }
    while tab.len() <= n {
        let m = tab.len();
        // Σ_{k=0..m} C(m+1,k) B_k = 0
        let mut acc = Rational::new();
        for (k, b) in tab.iter().enumerate() {
            acc += Rational::from(binomial(m as u64 + 1, k as u64)) * b;
        }
        acc /= -Rational::from(m as u64 + 1);
        tab.push(acc);
    }
    tab[n].clone()
}

/// Bernoulli polynomial value `B_n(x) = Σ_{k=0..n} C(n,k) B_k x^(n-k)`, exact.
pub fn bernoulli_poly(n: u32, x: &Rational) -> Rational {
    let mut acc = Rational::new();
    for k in 0..=n {
        acc += Rational::from(binomial(n as u64, k as u64)) * bernoulli(k) * x.clone().pow(n - k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: u64) -> Rational {
        Rational::from((p, d))
    }

    /// Independent oracle: count permutations of {1..n} with exactly k cycles.
    fn stirling_by_permutations(n: usize, k: usize) -> u64 {
        fn cycles(perm: &[usize]) -> usize {
            let mut seen = vec![false; perm.len()];
            let mut c = 0;
            for start in 0..perm.len() {
                if !seen[start] {
                    c += 1;
                    let mut i = start;
                    while !seen[i] {
                        seen[i] = true;
                        i = perm[i];
                    }
                }
            }
            c
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0u64;
        // Heap's algorithm, iterative
        let mut c = vec![0usize; n];
        if cycles(&perm) == k {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                if cycles(&perm) == k {
                    count += 1;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        count
    }

    /// Independent oracle: partition-sum definition of the complete Bell
    /// polynomial.
    fn bell_by_partitions(n: usize, xs: &[Rational]) -> Rational {
        fn rec(n: usize, max_part: usize, counts: &mut Vec<(usize, usize)>, xs: &[Rational], acc: &mut Rational) {
            if n == 0 {
                let total: usize = counts.iter().map(|&(r, k)| r * k).sum();
                let mut term = Rational::from(factorial(total as u32));
                for &(r, k) in counts.iter() {
                    term /= Rational::from(factorial(k as u32));
                    let xr = xs[r - 1].clone() / Rational::from(factorial(r as u32));
                    term *= xr.pow(k as u32);
                }
                *acc += term;
                return;
            }
            for r in (1..=max_part.min(n)).rev() {
                let maxk = n / r;
                for k in 1..=maxk {
                    counts.push((r, k));
                    rec(n - r * k, r - 1, counts, xs, acc);
                    counts.pop();
                }
            }
        }
        if n == 0 {
            return Rational::from(1);
        }
        let mut acc = Rational::new();
        let mut counts = Vec::new();
        rec(n, n, &mut counts, xs, &mut acc);
        acc
    }

    #[test]
    fn stirling_base_and_enumeration() {
        assert_eq!(stirling_cycle(0, 0), 1);
        assert_eq!(stirling_cycle(3, 0), 0);
        assert_eq!(stirling_cycle(2, 3), 0);
        // frozen from the permutation-enumeration oracle
        assert_eq!(stirling_by_permutations(4, 2), 11);
        assert_eq!(stirling_by_permutations(5, 3), 35);
        assert_eq!(stirling_cycle(4, 2), 11);
        assert_eq!(stirling_cycle(5, 3), 35);
        for n in 0..=6u32 {
            for k in 0..=n {
                assert_eq!(
                    stirling_cycle(n, k),
                    stirling_by_permutations(n as usize, k as usize),
                    "[{n} {k}]"
                );
            }
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0, 3), 0);
        assert_eq!(harmonic(3, 1), q(11, 6));
        assert_eq!(harmonic(2, 2), q(5, 4));
    }

    #[test]
    fn bell_matches_partition_sum() {
        let ones = vec![Rational::from(1); 12];
        assert_eq!(bell_complete(0, &[]).unwrap(), 1);
        assert_eq!(bell_complete(2, &ones).unwrap(), 2);
        assert_eq!(bell_complete(3, &ones).unwrap(), 5);
        assert_eq!(bell_by_partitions(3, &ones), 5);
        let xs: Vec<Rational> = (1..=9i64).map(|i| q(i * i - 3, 2 + (i as u64 % 3))).collect();
        for n in 0..=9usize {
            assert_eq!(
                bell_complete(n, &xs).unwrap(),
                bell_by_partitions(n, &xs),
                "n={n}"
            );
        }
    }

    #[test]
    fn bell_rejects_short_args() {
        assert!(bell_complete(3, &[Rational::from(1)]).is_err());
    }

    #[test]
    fn sgsp_small_cases() {
        // P_0(m, x) = 1
        for m in [0u32, 3, 7] {
            assert_eq!(sgsp_poly(0, m).unwrap(), RationalPoly::constant(Rational::from(1)));
        }
        // P_1(1, x) = x - 1, P_2(2, x) = x^2 - 3x + 2 (generating-function match)
        assert_eq!(
            sgsp_poly(1, 1).unwrap().coeffs(),
            &[q(-1, 1), q(1, 1)]
        );
        assert_eq!(
            sgsp_poly(2, 2).unwrap().coeffs(),
            &[q(2, 1), q(-3, 1), q(1, 1)]
        );
        assert!(sgsp_poly(3, 2).is_err());
    }

    #[test]
    fn sgsp_display() {
        assert_eq!(sgsp_poly(2, 2).unwrap().to_string(), "x^2 - 3x + 2");
        assert_eq!(sgsp_poly(0, 7).unwrap().to_string(), "1");
    }

    /// Generating-function identity: (j+1)_m = Σ_k (-1)^k P_k(m,x) (j+x)^(m-k).
    fn rising(a: &Rational, n: u32) -> Rational {
        let mut acc = Rational::from(1);
        for i in 0..n {
            acc *= a.clone() + Rational::from(i);
        }
        acc
    }

    #[test]
    fn sgsp_generating_function_exact() {
        let xs = [q(1, 2), q(3, 1), q(2, 7), q(-5, 3), q(9, 4)];
        for m in 0..=12u32 {
            for j in 0..=6u32 {
                for x in &xs {
                    let lhs = rising(&Rational::from(j + 1), m);
                    let mut rhs = Rational::new();
                    for k in 0..=m {
                        let p = sgsp_poly(k, m).unwrap().eval(x);
                        let mut t = p * (x.clone() + Rational::from(j)).pow(m - k);
                        if k % 2 == 1 {
                            t = -t;
                        }
                        rhs += t;
                    }
                    assert_eq!(lhs, rhs, "m={m} j={j} x={x}");
                }
            }
        }
    }

    #[test]
    fn sgsp_bell_representation_agrees() {
        let xs = [q(3, 2), q(0, 1), q(-7, 5), q(4, 1)];
        for m in 1..=8u32 {
            for k in 0..=m {
                for x in &xs {
                    let poly = sgsp_poly(k, m).unwrap().eval(x);
                    let bell = sgsp_eval_bell(k, m, x).unwrap();
                    assert_eq!(poly, bell, "k={k} m={m} x={x}");
                }
            }
        }
        assert_eq!(sgsp_eval_bell(1, 2, &q(3, 2)).unwrap(), 0);
        assert_eq!(sgsp_eval_bell(2, 2, &q(0, 1)).unwrap(), 2);
        assert_eq!(sgsp_eval_bell(0, 5, &q(17, 3)).unwrap(), 1);
    }

    #[test]
    fn gsp_bridge_identity() {
        // P_{k, m+1}(x) = (-1)^(m-k) P_{m-k}(m, x)
        let xs = [q(1, 1), q(1, 2), q(-3, 4), q(11, 6)];
        for m in 0..=15u32 {
            for k in 0..=m {
                for x in &xs {
                    let lhs = gsp_eval(k, m + 1, x).unwrap();
                    let mut rhs = sgsp_poly(m - k, m).unwrap().eval(x);
                    if (m - k) % 2 == 1 {
                        rhs = -rhs;
                    }
                    assert_eq!(lhs, rhs, "k={k} m={m} x={x}");
                }
            }
        }
    }

    #[test]
    fn gsp_edge_values() {
        // leading coefficient: P_{n-1,n}(z) = 1
        for n in 1..=8u32 {
            assert_eq!(gsp_eval(n - 1, n, &q(7, 3)).unwrap(), 1);
        }
        // P_{0,2}(z) = 1 - z
        assert_eq!(gsp_eval(0, 2, &q(1, 1)).unwrap(), 0);
        // P_{1,3}(z) = 3 - 2z (x^1 coefficient of (1+x-z)(2+x-z))
        assert_eq!(gsp_eval(1, 3, &q(1, 2)).unwrap(), 2);
        assert!(gsp_eval(2, 2, &q(1, 1)).is_err());
    }

    #[test]
    fn stirling_via_bell_agrees_with_table() {
        assert_eq!(stirling_via_bell(0, 0).unwrap(), 1);
        assert_eq!(stirling_via_bell(3, 1).unwrap(), 11);
        assert_eq!(stirling_via_bell(4, 2).unwrap(), 35);
        for n in 0..=20u32 {
            for r in 0..=n {
                assert_eq!(
                    stirling_via_bell(n, r).unwrap(),
                    Rational::from(stirling_cycle(n + 1, r + 1)),
                    "n={n} r={r}"
                );
            }
        }
        assert!(stirling_via_bell(2, 3).is_err());
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), 1);
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(3), 0);
        assert_eq!(bernoulli(12), q(-691, 2730));
        assert_eq!(bernoulli_poly(1, &q(1, 2)), 0);
        assert_eq!(bernoulli_poly(2, &q(0, 1)), q(1, 6));
        // B_3(x) = x^3 - (3/2)x^2 + (1/2)x at x = 1/4
        assert_eq!(bernoulli_poly(3, &q(1, 4)), q(1, 64) - q(3, 32) + q(1, 8));
    }

    #[test]
    fn poly_eval_and_trim() {
        let p = RationalPoly::new(vec![q(2, 1), q(-3, 1), q(1, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&q(3, 2)), q(-1, 4));
        assert!(RationalPoly::new(vec![q(0, 1)]).is_zero());
    }
}
