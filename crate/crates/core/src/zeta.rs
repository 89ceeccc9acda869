//! Genus-1 zeta data from `(p, a_p)`: the numerator `P(T) = 1 - a_p T + p T^2`,
//! counts over every extension `F_{p^n}`, and an exact check of
//! `exp(sum N_n T^n / n) = P(T) / ((1 - T)(1 - pT))` as formal power series.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::rings::QuadraticInteger;

/// Largest truncation order accepted by [`zeta_series_check`].
pub const MAX_SERIES_ORDER: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaData {
    pub p: u64,
    pub a_p: i64,
    /// `[1, -a_p, p]`, lowest degree first.
    pub betti_coeffs: [i64; 3],
    /// `(w, conj(w))` when the Weil zeros are lattice points.
    pub weil_pair: Option<(QuadraticInteger, QuadraticInteger)>,
    pub genus: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionCount {
    pub n: u32,
    /// `w^n + conj(w)^n`
    pub s_n: BigInt,
    pub affine: BigInt,
    pub projective: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HasseReport {
    pub bound_ok: bool,
    pub a_p_squared: u128,
    pub four_p: u128,
}

pub fn betti_polynomial(a_p: i64, p: u64) -> Result<ZetaData> {
    arith::require_prime(p)?;
    let report = hasse(a_p, p);
    if !report.bound_ok {
        return Err(Error::domain(format!(
            "defect outside Weil bound: a_p^2 = {} > 4p = {}",
            report.a_p_squared, report.four_p
        )));
    }
    Ok(ZetaData {
        p,
        a_p,
        betti_coeffs: [1, -a_p, p as i64],
        weil_pair: None,
        genus: 1,
    })
}

impl ZetaData {
    /// Attaches a Weil pair after checking that it expands to `P(T)`.
    pub fn with_weil_pair(mut self, w: QuadraticInteger) -> Result<Self> {
        if w.trace() != BigInt::from(self.a_p) || w.norm() != BigInt::from(self.p) {
            return Err(Error::domain(format!(
                "{} is not a Weil zero for p = {}, a_p = {}",
                w.render(false),
                self.p,
                self.a_p
            )));
        }
        let wc = w.conj();
        self.weil_pair = Some((w, wc));
        Ok(self)
    }

    /// `P(1)`, the projective count over `F_p`.
    pub fn projective_count(&self) -> i64 {
        self.betti_coeffs.iter().sum()
    }

    /// Reverse form `u^2 - a_p u + p`, lowest degree first.
    pub fn u_form(&self) -> [i64; 3] {
        [self.p as i64, -self.a_p, 1]
    }

    pub fn render(&self, var: char) -> String {
        render_integer_poly(&self.betti_coeffs, var)
    }
}

pub fn projective_count_from_p(zd: &ZetaData) -> i64 {
    zd.projective_count()
}

/// Power sums `s_0..=s_n_max` by `s_n = a_p s_{n-1} - p s_{n-2}`.
pub fn power_sums(a_p: i64, p: u64, n_max: u32) -> Vec<BigInt> {
    let a = BigInt::from(a_p);
    let q = BigInt::from(p);
    let mut s = vec![BigInt::from(2), a.clone()];
    for n in 2..=n_max as usize {
        let next = &a * &s[n - 1] - &q * &s[n - 2];
        s.push(next);
    }
    s.truncate(n_max as usize + 1);
    s
}

pub fn extension_counts(zd: &ZetaData, n_max: u32) -> Result<Vec<ExtensionCount>> {
    if n_max < 1 {
        return Err(Error::domain("n_max must be at least 1"));
    }
    let s = power_sums(zd.a_p, zd.p, n_max);
    let q = BigInt::from(zd.p);
    let mut q_n = BigInt::one();
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        q_n *= &q;
        let s_n = s[n as usize].clone();
        let affine = &q_n - &s_n;
        let projective = &affine + 1;
        out.push(ExtensionCount {
            n,
            s_n,
            affine,
            projective,
        });
    }
    Ok(out)
}

/// Coefficients of `P(T) / ((1 - T)(1 - pT))` through `T^order`.
fn rational_side(zd: &ZetaData, order: usize) -> Vec<BigInt> {
    // 1/((1-T)(1-pT)) = sum_k (1 + p + ... + p^k) T^k
    let p = BigInt::from(zd.p);
    let mut geometric = Vec::with_capacity(order + 1);
    let mut partial = BigInt::zero();
    let mut p_k = BigInt::one();
    for _ in 0..=order {
        partial += &p_k;
        geometric.push(partial.clone());
        p_k *= &p;
    }
    (0..=order)
        .map(|k| {
            zd.betti_coeffs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j <= k)
                .map(|(j, &c)| BigInt::from(c) * &geometric[k - j])
                .sum()
        })
        .collect()
}

/// Coefficients of `exp(sum_{n<=order} N_n T^n / n)` through `T^order`,
/// with `N_n` the projective counts. Uses `k e_k = sum_{j=1..k} N_j e_{k-j}`.
fn exponential_side(zd: &ZetaData, order: usize) -> Result<Vec<BigRational>> {
    let counts = extension_counts(zd, order as u32)?;
    let mut e: Vec<BigRational> = vec![BigRational::one()];
    for k in 1..=order {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            acc += BigRational::from_integer(counts[j - 1].projective.clone()) * &e[k - j];
        }
        e.push(acc / BigRational::from_integer(BigInt::from(k)));
    }
    Ok(e)
}

/// Exact formal-series comparison through `T^order`.
pub fn zeta_series_check(zd: &ZetaData, order: u32) -> Result<bool> {
    if order > MAX_SERIES_ORDER {
        return Err(Error::BoundExceeded {
            what: "zeta series order",
            size: order.to_string(),
            bound: MAX_SERIES_ORDER as u64,
        });
    }
    if order == 0 {
        return Ok(true);
    }
    let lhs = exponential_side(zd, order as usize)?;
    let rhs = rational_side(zd, order as usize);
    Ok(lhs
        .iter()
        .zip(&rhs)
        .all(|(l, r)| *l == BigRational::from_integer(r.clone())))
}

fn hasse(a_p: i64, p: u64) -> HasseReport {
    let a_p_squared = (a_p as i128 * a_p as i128) as u128;
    let four_p = 4 * p as u128;
    HasseReport {
        bound_ok: a_p_squared <= four_p,
        a_p_squared,
        four_p,
    }
}

/// `a_p^2 <= 4p`, reported as the exact pair rather than a cosine.
pub fn hasse_check(zd: &ZetaData) -> HasseReport {
    hasse(zd.a_p, zd.p)
}

/// Renders integer coefficients (lowest first) as `1+7T+19T^2`.
pub fn render_integer_poly(coeffs: &[i64], var: char) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
        let mag = c.unsigned_abs();
        let body = match (k, mag) {
            (0, m) => m.to_string(),
            (1, 1) => var.to_string(),
            (1, m) => format!("{m}{var}"),
            (_, 1) => format!("{var}^{k}"),
            (_, m) => format!("{m}{var}^{k}"),
        };
        out.push_str(sign);
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
