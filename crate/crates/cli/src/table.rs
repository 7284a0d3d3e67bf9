//! Size bounds for binary codes in `t` blocks of `m×m`, side by side.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use sumrank::certify;
use sumrank::spaces;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub t: u64,
    pub d: u64,
    /// Base-2 exponents; `None` where the bound does not apply.
    pub singleton: Option<i64>,
    pub strong_bch: Option<i64>,
    pub sphere_packing: Option<f64>,
    pub best: &'static str,
}

/// Coefficients `0..=r` of `poly^t`.
fn truncated_power(poly: &[BigUint], t: u64, r: usize) -> Vec<BigUint> {
    let mul = |a: &[BigUint], b: &[BigUint]| {
        let mut out = vec![BigUint::zero(); r + 1];
        for (i, x) in a.iter().enumerate().take(r + 1) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(r + 1 - i) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut result = vec![BigUint::zero(); r + 1];
    result[0] = BigUint::from(1u32);
    let mut base: Vec<BigUint> = (0..=r).map(|i| poly.get(i).cloned().unwrap_or_default()).collect();
    let mut e = t;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    result
}

fn log2(v: &BigUint) -> f64 {
    let bits = v.bits();
    let shift = bits.saturating_sub(53);
    (v >> shift).to_f64().unwrap_or(f64::NAN).log2() + shift as f64
}

/// One row per `(t, d)`. Without explicit distances, `d` runs over `[4m²e, 4m²e + 4m² - 1]`.
pub fn comparison_table(m: u64, e: u64, n: u32, ts: &[u64], ds: Option<&[u64]>) -> Vec<Row> {
    let range: Vec<u64> = (4 * m * m * e..4 * m * m * e + 4 * m * m).collect();
    let ds = ds.unwrap_or(&range);
    let block = spaces::rank_distribution(m as usize, m as usize, 2);
    let mut rows = Vec::new();
    for &t in ts {
        let radius_max = ds.iter().map(|&d| (d.saturating_sub(1) / 2) as usize).max().unwrap_or(0);
        let weights = truncated_power(&block, t, radius_max);
        for &d in ds {
            let n_total = m * t;
            let singleton = (d >= 1 && d <= n_total).then(|| (m * (n_total - d + 1)) as i64);
            let strong_bch = certify::strong_singleton_bch(m, t, e, n, d).ok().map(|b| b.bound.exponent);
            let sphere_packing = (d >= 1 && d <= n_total).then(|| {
                let v: BigUint = weights.iter().take((d as usize - 1) / 2 + 1).sum();
                (m * m * t) as f64 - log2(&v)
            });
            let mut best = "none";
            let mut value = f64::INFINITY;
            for (name, x) in [
                ("singleton", singleton.map(|x| x as f64)),
                ("strong-bch", strong_bch.map(|x| x as f64)),
                ("sphere-packing", sphere_packing),
            ] {
                if let Some(x) = x {
                    if x < value {
                        value = x;
                        best = name;
                    }
                }
            }
            rows.push(Row { t, d, singleton, strong_bch, sphere_packing, best });
        }
    }
    rows
}

pub fn render(rows: &[Row]) -> String {
    let mut out = format!("{:>10} {:>6} {:>14} {:>14} {:>16}  {}\n", "t", "d", "singleton", "strong-bch", "sphere-packing", "best");
    let opt = |x: Option<i64>| x.map(|v| format!("2^{v}")).unwrap_or_else(|| "n/a".into());
    for r in rows {
        out.push_str(&format!(
            "{:>10} {:>6} {:>14} {:>14} {:>16}  {}\n",
            r.t,
            r.d,
            opt(r.singleton),
            opt(r.strong_bch),
            r.sphere_packing.map(|v| format!("2^{v:.3}")).unwrap_or_else(|| "n/a".into()),
            r.best
        ));
    }
    out
}
