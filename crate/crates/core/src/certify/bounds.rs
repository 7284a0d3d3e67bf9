//! Closed-form bounds on sum-rank codes and the inequalities behind the named families.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::CertifyError;
use crate::arith;
use crate::hamming;
use crate::spaces::{self, MatrixProfile};
use crate::gf::Field;

/// `base^exponent`, kept symbolic because exponents can be large.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PowerOf {
    pub base: u64,
    pub exponent: i64,
}

impl PowerOf {
    pub fn value(&self) -> BigRational {
        let b = BigInt::from(self.base).pow(self.exponent.unsigned_abs() as u32);
        if self.exponent >= 0 {
            BigRational::from_integer(b)
        } else {
            BigRational::new(BigInt::one(), b)
        }
    }
}

impl fmt::Display for PowerOf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.base, self.exponent)
    }
}

fn pre(msg: impl Into<String>) -> CertifyError {
    CertifyError::Precondition(msg.into())
}

/// Singleton-like bound on the size of a code with minimum distance `d`.
///
/// Blocks are taken in nonincreasing order of column count `m_i`. With
/// `d - 1 = Σ_{i<j} n_i + δ`, `0 <= δ <= n_j - 1`, the size is at most
/// `q^{Σ_{i>=j} n_i m_i - m_j δ}`.
pub fn singleton_like_bound(profile: &MatrixProfile, d: usize) -> Result<PowerOf, CertifyError> {
    let n_total = profile.total_rows();
    if d == 0 || d > n_total {
        return Err(pre(format!("distance {d} outside 1..={n_total}")));
    }
    let mut blocks = profile.blocks().to_vec();
    blocks.sort_by_key(|b| std::cmp::Reverse(b.1));
    let mut rest = d - 1;
    let mut j = 0;
    while rest >= blocks[j].0 {
        rest -= blocks[j].0;
        j += 1;
    }
    let tail: usize = blocks[j..].iter().map(|&(n, m)| n * m).sum();
    Ok(PowerOf { base: profile.q(), exponent: (tail - blocks[j].1 * rest) as i64 })
}

/// `m(N - d + 1) - k`; requires equal column counts.
pub fn singleton_defect(profile: &MatrixProfile, dim: usize, d: usize) -> Result<i64, CertifyError> {
    let m = profile.common_m().ok_or_else(|| pre("Singleton defect needs equal column counts in every block"))?;
    let n = profile.total_rows();
    if d == 0 || d > n {
        return Err(pre(format!("distance {d} outside 1..={n}")));
    }
    Ok((m * (n - d + 1)) as i64 - dim as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MsrdClass {
    Msrd,
    /// Defect 1 or 2.
    AlmostMsrd,
    Defect(i64),
}

pub fn msrd_class(defect: i64) -> MsrdClass {
    match defect {
        0 => MsrdClass::Msrd,
        1 | 2 => MsrdClass::AlmostMsrd,
        k => MsrdClass::Defect(k),
    }
}

/// `lhs` compared with `rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl Check {
    fn new(name: impl Into<String>, lhs: impl fmt::Display, rhs: impl fmt::Display, holds: bool) -> Check {
        Check { name: name.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), holds }
    }
}

/// `q^k · V(⌊(d-1)/2⌋) <= q^{amb}`, with equality exactly for perfect codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpherePacking {
    pub radius: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
    pub holds: bool,
    pub tight: bool,
}

pub fn sphere_packing(profile: &MatrixProfile, dim: usize, d: usize) -> SpherePacking {
    let radius = d.saturating_sub(1) / 2;
    let lhs = BigUint::from(profile.q()).pow(dim as u32) * profile.ball_volume(radius);
    let rhs = profile.ambient_size();
    SpherePacking { radius, holds: lhs <= rhs, tight: lhs == rhs, lhs, rhs }
}

/// `q^k · V(⌊d/2⌋) > q^{amb}`: no code of the same size has distance `d + 1`.
pub fn distance_optimality(profile: &MatrixProfile, dim: usize, d: usize) -> Check {
    let r = d / 2;
    let lhs = BigUint::from(profile.q()).pow(dim as u32) * profile.ball_volume(r);
    let rhs = profile.ambient_size();
    let holds = lhs > rhs;
    Check::new(format!("q^k * V({r}) > q^amb"), lhs, rhs, holds)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Perfection {
    Perfect,
    QuasiPerfect,
    Neither,
}

/// Compares the covering radius with the packing radius `⌊(d-1)/2⌋`.
pub fn perfection(d: usize, covering_radius: usize) -> Perfection {
    let e = d.saturating_sub(1) / 2;
    if covering_radius == e {
        Perfection::Perfect
    } else if covering_radius == e + 1 {
        Perfection::QuasiPerfect
    } else {
        Perfection::Neither
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrongSingletonBch {
    /// `true` when `d = 4m²e` exactly.
    pub boundary: bool,
    /// Upper bound on the size, as a power of 2.
    pub bound: PowerOf,
    pub singleton: PowerOf,
}

/// Size bound for binary codes in `t` blocks of `m×m` with distance in
/// `[4m²e, 4m²e + 4m² - 1]`, obtained from binary BCH codes of length `2^n - 1`.
/// Requires `t >= 2^n - 1` and `2^n >= (2e-1)^{4e+2}`.
pub fn strong_singleton_bch(m: u64, t: u64, e: u64, n: u32, d: u64) -> Result<StrongSingletonBch, CertifyError> {
    if m == 0 || e == 0 || n == 0 {
        return Err(pre("m, e and n must be positive"));
    }
    let len = 1u64.checked_shl(n).ok_or_else(|| pre("2^n overflows"))? - 1;
    if t < len {
        return Err(pre(format!("t = {t} is below 2^{n} - 1 = {len}")));
    }
    if BigUint::from(len + 1) < BigUint::from(2 * e - 1).pow((4 * e + 2) as u32) {
        return Err(pre(format!("2^{n} < (2e-1)^(4e+2) for e = {e}")));
    }
    let m2 = m * m;
    if d < 4 * m2 * e || d > 4 * m2 * e + 4 * m2 - 1 {
        return Err(pre(format!("d = {d} outside [{}, {}]", 4 * m2 * e, 4 * m2 * e + 4 * m2 - 1)));
    }
    if d > m * t {
        return Err(pre(format!("d = {d} exceeds N = {}", m * t)));
    }
    let ne = n as u64 * e;
    if t < ne {
        return Err(pre("t < n·e"));
    }
    let boundary = d == 4 * m2 * e;
    let exponent = if boundary { m2 * (t - ne + n as u64) } else { m2 * (t - ne) };
    Ok(StrongSingletonBch {
        boundary,
        bound: PowerOf { base: 2, exponent: exponent as i64 },
        singleton: PowerOf { base: 2, exponent: (m * (m * t - d + 1)) as i64 },
    })
}

/// Evaluated `c · q^{((u-m)R + m²)/R} · (m ln q)^{m/R}`; relies on an unproven
/// covering-density hypothesis and is reported as such.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockLengthBound {
    pub q_exponent: String,
    pub log_exponent: String,
    pub value: f64,
    pub conditional: bool,
}

fn check_divisibility(m: u64, u: u64, radius: u64) -> Result<(), CertifyError> {
    if m == 0 || radius == 0 {
        return Err(pre("m and R must be positive"));
    }
    if !u.is_multiple_of(m * m) {
        return Err(pre(format!("m^2 = {} does not divide u = {u}", m * m)));
    }
    if !radius.is_multiple_of(m) {
        return Err(pre(format!("m = {m} does not divide R = {radius}")));
    }
    Ok(())
}

pub fn block_length_bound(q: u64, m: u64, u: u64, radius: u64, c: f64) -> Result<BlockLengthBound, CertifyError> {
    check_divisibility(m, u, radius)?;
    if c.is_nan() || c <= 0.0 {
        return Err(pre("constant must be positive"));
    }
    let qe = BigRational::new(
        (BigInt::from(u) - BigInt::from(m)) * BigInt::from(radius) + BigInt::from(m * m),
        BigInt::from(radius),
    );
    let le = BigRational::new(BigInt::from(m), BigInt::from(radius));
    let value = c * (q as f64).powf(qe.to_f64().unwrap_or(f64::NAN)) * (m as f64 * (q as f64).ln()).powf(le.to_f64().unwrap_or(f64::NAN));
    Ok(BlockLengthBound { q_exponent: qe.to_string(), log_exponent: le.to_string(), value, conditional: true })
}

/// Parameters `(codim, radius)` of a Hamming-metric code over `GF(q^m)` whose
/// covering construction has GF(q) codimension `r` and covering radius at most `R`.
pub fn hamming_parameters_for(m: u64, r: u64, radius: u64) -> Result<(u64, u64), CertifyError> {
    check_divisibility(m, r, radius)?;
    Ok((r / (m * m), radius / m))
}

/// `K_{q,m}(t, m·R_H) <= |C|^m` for a Hamming-metric code `C` over `GF(q^m)` of
/// length `t` with covering radius `R_H`.
pub fn size_bound_from_hamming(hamming_size: &BigUint, m: u32) -> BigUint {
    hamming_size.pow(m)
}

/// `H_Q(ρ)` on `[0, 1 - 1/Q]`.
pub fn entropy(big_q: u64, rho: f64) -> Result<f64, CertifyError> {
    if big_q < 2 {
        return Err(pre("Q must be at least 2"));
    }
    let qf = big_q as f64;
    let max = 1.0 - 1.0 / qf;
    if !(0.0..=max).contains(&rho) {
        return Err(pre(format!("rho = {rho} outside [0, {max}]")));
    }
    let xlogx = |x: f64| if x == 0.0 { 0.0 } else { x * x.log(qf) };
    Ok(rho * (qf - 1.0).log(qf) - xlogx(rho) - xlogx(1.0 - rho))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrongSingletonBlf {
    pub gate: f64,
    pub bound: PowerOf,
    pub conditional: bool,
}

/// `q^{(t-1)m² - uR}` for distance `uR + ...` style parameters, valid once
/// `t` exceeds the conditional block-length bound. Errors if the gate fails.
pub fn strong_singleton_blf(q: u64, m: u64, u: u64, radius: u64, t: u64, c: f64) -> Result<StrongSingletonBlf, CertifyError> {
    let gate = block_length_bound(q, m, u, radius, c)?.value;
    if (t as f64) < gate {
        return Err(pre(format!("t = {t} is below the block-length gate {gate:.4}")));
    }
    let exponent = (t as i64 - 1) * (m * m) as i64 - (u * radius) as i64;
    Ok(StrongSingletonBlf { gate, bound: PowerOf { base: q, exponent }, conditional: true })
}

/// Sufficient conditions behind a named family, evaluated at given parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub family: String,
    pub rational: Option<Check>,
    pub exact: Vec<Check>,
}

fn param(params: &BTreeMap<String, u64>, key: &str) -> Result<u64, CertifyError> {
    params.get(key).copied().ok_or_else(|| pre(format!("missing parameter {key}")))
}

fn power(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(e as u32)
}

fn length_over(q: u64, e: u64, lambda: u64) -> Result<u64, CertifyError> {
    let total = arith::checked_pow(q, e as u32).ok_or_else(|| pre("length overflows"))? - 1;
    if lambda == 0 || total % lambda != 0 {
        return Err(pre(format!("lambda = {lambda} does not divide {q}^{e} - 1")));
    }
    Ok(total / lambda)
}

/// Size of the union of the cyclotomic cosets of `gens` modulo `n` over `GF(big_q)`.
fn defining_set_size(big_q: u64, n: u64, gens: &[u64]) -> Result<u64, CertifyError> {
    let mut all = std::collections::BTreeSet::new();
    for &g in gens {
        all.extend(hamming::cyclotomic_coset(g % n, big_q, n)?);
    }
    Ok(all.len() as u64)
}

fn square_ball(q: u64, t: u64, n: usize, m: usize, r: usize) -> Result<BigUint, CertifyError> {
    let f = Field::from_order(q)?;
    let profile = MatrixProfile::new(&f, vec![(n, m); t as usize])?;
    Ok(profile.ball_volume(r))
}

fn lower_bound_check(t: u64, s: u64, q: u64, rhs: &BigUint) -> Result<Check, CertifyError> {
    let lb = spaces::ball_volume_lower_bound_r2(t as usize, s as usize, q)?;
    let holds = lb > BigRational::from_integer(BigInt::from(rhs.clone()));
    Ok(Check::new("two rank-one blocks lower bound > q^codim", lb, rhs, holds))
}

/// Evaluates the sufficient conditions of a recipe family.
pub fn condition_checks(family: &str, params: &BTreeMap<String, u64>) -> Result<ConditionReport, CertifyError> {
    let mut exact = Vec::new();
    let mut rational = None;
    match family {
        "quasi-perfect-2xm" => {
            let (q, m, u) = (param(params, "q")?, param(params, "m")?, param(params, "u")?);
            let big_q = arith::checked_pow(q, m as u32).ok_or_else(|| pre("q^m overflows"))?;
            let t = length_over(big_q, u, big_q - 1)?;
            let v = square_ball(q, t, 2, m as usize, 2)?;
            let rhs = power(q, m * (u + 1));
            exact.push(Check::new("V(2) > q^{m(u+1)}", &v, &rhs, v > rhs));
        }
        "cyclic-three-cosets" | "cyclic-ternary-quinary" => {
            let (q, m) = (param(params, "q")?, param(params, "m")?);
            let (lambda, third) = if family == "cyclic-three-cosets" {
                let lambda = param(params, "lambda")?;
                let lhs = 2 * q * lambda * lambda;
                let rhs = (q - 1) * (q - 1);
                rational = Some(Check::new("2 q lambda^2 < (q-1)^2", lhs, rhs, lhs < rhs));
                (lambda, 2)
            } else {
                match q {
                    3 => (1, 5),
                    5 => (1, 3),
                    _ => return Err(pre("q must be 3 or 5")),
                }
            };
            let n = length_over(q, m, lambda)?;
            let v = spaces::hamming_ball_volume(n as usize, 2, q)?;
            let rhs = power(q, 2 * m + 1);
            exact.push(Check::new("V_H(2) > q^{2m+1}", &v, &rhs, v > rhs));
            let actual = defining_set_size(q, n, &[0, 1, third])?;
            if actual != 2 * m + 1 {
                let rhs = power(q, actual);
                exact.push(Check::new(format!("V_H(2) > q^{actual}"), &v, &rhs, v > rhs));
            }
        }
        "distance-optimal-sxs" | "distance-optimal-rect" => {
            let q = param(params, "q")?;
            let (s1, s2) = if family == "distance-optimal-sxs" {
                let s = param(params, "s")?;
                (s, s)
            } else {
                (param(params, "s1")?, param(params, "s2")?)
            };
            let (m, lambda) = (param(params, "m")?, param(params, "lambda")?);
            if s1 < 2 || s2 < 1 {
                return Err(pre("need s1 >= 2 and s2 >= 1"));
            }
            let qs1 = power(q, s1) - 1u32;
            let lhs = BigUint::from(2u32) * power(q, s2) * BigUint::from((q - 1) * (q - 1) * lambda * lambda);
            let rhs = &qs1 * &qs1;
            rational = Some(Check::new("2 q^{s2} (q-1)^2 lambda^2 < (q^{s1}-1)^2", &lhs, &rhs, lhs < rhs));
            let big_q = arith::checked_pow(q, s2 as u32).ok_or_else(|| pre("q^s2 overflows"))?;
            let t = length_over(big_q, m, lambda)?;
            let v = square_ball(q, t, s1 as usize, s2 as usize, 2)?;
            if s1 == s2 {
                let rhs = power(q, s1 * (2 * m + 3));
                exact.push(Check::new("V(2) > q^{s(2m+3)}", &v, &rhs, v > rhs));
                exact.push(lower_bound_check(t, s1, q, &rhs)?);
            }
            let parities = s1.min(3) - 1;
            let codim = s2 * (defining_set_size(big_q, t, &[0, 1, 2])? + parities);
            let rhs = power(q, codim);
            exact.push(Check::new(format!("V(2) > q^{codim}"), &v, &rhs, v > rhs));
        }
        "distance-optimal-2x2" => {
            let q = param(params, "q")?;
            let big_q = q * q;
            let t = big_q * big_q - 1;
            let codim = 2 * (defining_set_size(big_q, t, &[0, 1, big_q + 1])? + 1);
            let v = square_ball(q, t, 2, 2, 2)?;
            let rhs = power(q, codim);
            exact.push(Check::new(format!("V(2) > q^{codim}"), &v, &rhs, v > rhs));
        }
        "plotkin-sxs" => {
            let (s, m) = (param(params, "s")?, param(params, "m")?);
            if s < 2 {
                return Err(pre("need s >= 2"));
            }
            // 2 (1 - 2^{-s})^4 >= 1  <=>  2 (2^s - 1)^4 >= 2^{4s}
            let lhs = BigUint::from(2u32) * (power(2, s) - 1u32).pow(4);
            let rhs = power(2, 4 * s);
            rational = Some(Check::new("2 (1 - 2^-s)^4 >= 1", BigRational::new(lhs.clone().into(), rhs.clone().into()), 1, lhs >= rhs));
            let t = length_over(2, s * m, 1)?;
            let proof_codim = 2 * s * m + 4 * s;
            let rhs = power(2, proof_codim);
            exact.push(lower_bound_check(2 * t, s, 2, &rhs)?);
            let v = square_ball(2, 2 * t, s as usize, s as usize, 2)?;
            exact.push(Check::new(format!("V(2) > 2^{proof_codim}"), &v, &rhs, v > rhs));
            let codim = s + s * (defining_set_size(arith::checked_pow(2, s as u32).expect("small"), t, &[0, 1, 2])? + s.min(3) - 1);
            if codim != proof_codim {
                let rhs = power(2, codim);
                exact.push(Check::new(format!("V(2) > 2^{codim}"), &v, &rhs, v > rhs));
            }
        }
        other => return Err(pre(format!("no condition checks for family {other}"))),
    }
    Ok(ConditionReport { family: family.to_string(), rational, exact })
}
