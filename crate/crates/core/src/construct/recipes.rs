//! Named parameter families of codes, addressable by name and a parameter map.

use std::collections::BTreeMap;

use super::{extend_full_blocks, plotkin, sr_covering, sr_linearized, ConstructError, LinearizedOptions, SumRankCode};
use crate::arith;
use crate::gf::Field;
use crate::hamming::{self, LinearCode};

pub struct RecipeInfo {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub optional: &'static [&'static str],
    pub summary: &'static str,
}

pub const RECIPES: &[RecipeInfo] = &[
    RecipeInfo {
        name: "quasi-perfect-2xm",
        params: &["q", "m", "u"],
        optional: &[],
        summary: "linearized(Hamming [t,t-u,3], single parity [t,t-1,2]) over GF(q^m), t = (q^{mu}-1)/(q^m-1), 2×m blocks",
    },
    RecipeInfo {
        name: "quasi-perfect-2x2-binary",
        params: &[],
        optional: &[],
        summary: "linearized(single parity [6,5,2], hexacode [6,3,4]) over GF(4), binary 2×2 blocks",
    },
    RecipeInfo {
        name: "cyclic-three-cosets",
        params: &["q", "m", "lambda"],
        optional: &[],
        summary: "Hamming-metric cyclic code over GF(q), length (q^m-1)/lambda, defining set C0 ∪ C1 ∪ C2",
    },
    RecipeInfo {
        name: "cyclic-ternary-quinary",
        params: &["q", "m"],
        optional: &[],
        summary: "Hamming-metric cyclic code of length q^m-1: C0 ∪ C1 ∪ C5 for q=3, C0 ∪ C1 ∪ C3 for q=5",
    },
    RecipeInfo {
        name: "distance-optimal-sxs",
        params: &["q", "s", "m", "lambda"],
        optional: &[],
        summary: "linearized(cyclic C0∪C1∪C2, single parity ×2, full ...) over GF(q^s), t = (q^{sm}-1)/lambda, s×s blocks",
    },
    RecipeInfo {
        name: "distance-optimal-rect",
        params: &["q", "s1", "s2", "m", "lambda"],
        optional: &[],
        summary: "as distance-optimal-sxs with s1 codes over GF(q^{s2}), t = (q^{s2·m}-1)/lambda, s1×s2 blocks",
    },
    RecipeInfo {
        name: "distance-optimal-2x2",
        params: &["q"],
        optional: &[],
        summary: "linearized(cyclic T = {0,1,Q,Q+1}, single parity) over GF(Q), Q = q^2, t = q^4-1, 2×2 blocks",
    },
    RecipeInfo {
        name: "almost-msrd-2x2",
        params: &["q", "t"],
        optional: &[],
        summary: "linearized(Reed-Solomon [t,t-3,4], single parity) over GF(q^2), 4 <= t <= q^2, 2×2 blocks",
    },
    RecipeInfo {
        name: "plotkin-sxs",
        params: &["s", "m"],
        optional: &[],
        summary: "Plotkin(linearized(single parity, full ...), distance-optimal-sxs(2,s,m,1)) over GF(2), s×s blocks",
    },
    RecipeInfo {
        name: "covering-repetition",
        params: &["q", "m", "t"],
        optional: &["extra"],
        summary: "covering construction of m copies of the repetition code [t,1,t] over GF(q^m), plus extra full blocks",
    },
    RecipeInfo {
        name: "covering-hamming",
        params: &["q", "m", "u"],
        optional: &["extra"],
        summary: "covering construction of m copies of the Hamming code of redundancy u over GF(q^m), plus extra full blocks",
    },
];

pub fn info(name: &str) -> Option<&'static RecipeInfo> {
    RECIPES.iter().find(|r| r.name == name)
}

fn bad(msg: impl Into<String>) -> ConstructError {
    ConstructError::InvalidParams(msg.into())
}

/// Builds a recipe from its parameter map; unknown or missing parameters are errors.
pub fn build(name: &str, params: &BTreeMap<String, u64>) -> Result<SumRankCode, ConstructError> {
    let info = info(name).ok_or_else(|| bad(format!("unknown recipe '{name}'")))?;
    for key in params.keys() {
        if !info.params.contains(&key.as_str()) && !info.optional.contains(&key.as_str()) {
            return Err(bad(format!("recipe '{name}' takes no parameter '{key}'")));
        }
    }
    let get = |k: &str| params.get(k).copied().ok_or_else(|| bad(format!("recipe '{name}' needs parameter '{k}'")));
    let code = match name {
        "quasi-perfect-2xm" => quasi_perfect_2xm(get("q")?, small(get("m")?)?, get("u")? as usize)?,
        "quasi-perfect-2x2-binary" => quasi_perfect_2x2_binary(&hamming::hexacode(&Field::from_order(4)?)?)?,
        "cyclic-three-cosets" => SumRankCode::hamming_metric(&cyclic_three_cosets(get("q")?, small(get("m")?)?, get("lambda")?)?)?,
        "cyclic-ternary-quinary" => SumRankCode::hamming_metric(&cyclic_ternary_quinary(get("q")?, small(get("m")?)?)?)?,
        "distance-optimal-sxs" => distance_optimal_sxs(get("q")?, small(get("s")?)?, small(get("m")?)?, get("lambda")?)?,
        "distance-optimal-rect" => {
            distance_optimal_rect(get("q")?, small(get("s1")?)?, small(get("s2")?)?, small(get("m")?)?, get("lambda")?)?
        }
        "distance-optimal-2x2" => distance_optimal_2x2(get("q")?)?,
        "almost-msrd-2x2" => almost_msrd_2x2(get("q")?, get("t")? as usize)?,
        "plotkin-sxs" => plotkin_sxs(small(get("s")?)?, small(get("m")?)?)?,
        "covering-repetition" | "covering-hamming" => {
            let q = get("q")?;
            let m = small(get("m")?)?;
            let ext = extension(q, m)?;
            let ingredient = if name == "covering-repetition" {
                hamming::repetition_code(&ext, get("t")? as usize)?
            } else {
                hamming::hamming_code(&ext, get("u")? as usize)?
            };
            let code = sr_covering(&vec![ingredient; m as usize], None)?;
            match params.get("extra").copied().unwrap_or(0) {
                0 => code,
                extra => extend_full_blocks(&code, extra as usize)?,
            }
        }
        _ => unreachable!("recipe table and dispatch agree"),
    };
    Ok(code.with_origin(name, params.clone()))
}

fn small(x: u64) -> Result<u32, ConstructError> {
    u32::try_from(x).ok().filter(|&v| v >= 1).ok_or_else(|| bad(format!("parameter value {x} out of range")))
}

fn base_field(q: u64) -> Result<Field, ConstructError> {
    Ok(Field::from_order(q)?)
}

/// `GF(q^m)` as a degree-`m` extension of `GF(q)`.
pub fn extension(q: u64, m: u32) -> Result<Field, ConstructError> {
    Ok(Field::extension(&base_field(q)?, m, None)?)
}

fn length_over_lambda(q: u64, e: u32, lambda: u64) -> Result<u64, ConstructError> {
    let total = arith::checked_pow(q, e).ok_or_else(|| bad("length overflows"))? - 1;
    if lambda == 0 || total % lambda != 0 {
        return Err(bad(format!("lambda = {lambda} does not divide {q}^{e} - 1 = {total}")));
    }
    Ok(total / lambda)
}

/// `[t, t-u, 3]` Hamming code and `[t, t-1, 2]` single parity code over
/// `GF(q^m)` combined by the linearized construction into `2×m` blocks.
pub fn quasi_perfect_2xm(q: u64, m: u32, u: usize) -> Result<SumRankCode, ConstructError> {
    if m < 2 {
        return Err(bad(format!("need m >= 2 for 2×m blocks, got m = {m}")));
    }
    if u < 2 {
        return Err(bad(format!("need u >= 2, got u = {u}")));
    }
    let ext = extension(q, m)?;
    let c1 = hamming::hamming_code(&ext, u)?;
    let c2 = hamming::single_parity_code(&ext, c1.len())?;
    let code = sr_linearized(&[c1, c2], LinearizedOptions::default())?;
    Ok(code.with_designed_distance(3))
}

/// Single parity code and a supplied `[t, k, 4]` code over `GF(4)`, in binary `2×2` blocks.
pub fn quasi_perfect_2x2_binary(c2: &LinearCode) -> Result<SumRankCode, ConstructError> {
    if c2.q() != 4 {
        return Err(bad(format!("second ingredient must lie over GF(4), got {}", c2.field())));
    }
    let ext = Field::tower(2, &[2], None)?;
    if c2.field() != &ext {
        return Err(bad("second ingredient must use the default GF(4) representation"));
    }
    let c1 = hamming::single_parity_code(&ext, c2.len())?;
    Ok(sr_linearized(&[c1, c2.clone()], LinearizedOptions::default())?.with_designed_distance(4))
}

/// Cyclic code over `GF(q)` of length `(q^m-1)/λ` with defining set `C0 ∪ C1 ∪ C2`.
pub fn cyclic_three_cosets(q: u64, m: u32, lambda: u64) -> Result<LinearCode, ConstructError> {
    let n = length_over_lambda(q, m, lambda)?;
    if n < 3 {
        return Err(bad(format!("length {n} too short for C0 ∪ C1 ∪ C2")));
    }
    Ok(hamming::cyclic_code(n, &base_field(q)?, &[0, 1, 2])?)
}

/// Cyclic code of length `q^m - 1` with defining set `C0 ∪ C1 ∪ C5` (`q = 3`) or `C0 ∪ C1 ∪ C3` (`q = 5`).
pub fn cyclic_ternary_quinary(q: u64, m: u32) -> Result<LinearCode, ConstructError> {
    let third = match q {
        3 => 5,
        5 => 3,
        _ => return Err(bad(format!("family is defined for q = 3 or 5, got {q}"))),
    };
    let n = length_over_lambda(q, m, 1)?;
    if n <= 5 {
        return Err(bad(format!("length {n} too short for the defining set")));
    }
    let code = hamming::cyclic_code(n, &base_field(q)?, &[0, 1, third])?;
    Ok(code.with_designed_distance(4))
}

/// Ingredients `C_1` cyclic (`C0 ∪ C1 ∪ C2`), `C_2, C_3` single parity,
/// `C_4 … C_count` full, all of length `t` over `ext`.
fn distance_optimal_ingredients(ext: &Field, t: u64, count: u32) -> Result<Vec<LinearCode>, ConstructError> {
    let mut codes = vec![hamming::cyclic_code(t, ext, &[0, 1, 2])?];
    for i in 2..=count {
        codes.push(if i <= 3 { hamming::single_parity_code(ext, t as usize)? } else { hamming::full_code(ext, t as usize) });
    }
    Ok(codes)
}

/// `s×s` blocks over `GF(q)` from `s` codes over `GF(q^s)` of length `(q^{sm}-1)/λ`.
pub fn distance_optimal_sxs(q: u64, s: u32, m: u32, lambda: u64) -> Result<SumRankCode, ConstructError> {
    if s < 2 {
        return Err(bad(format!("need s >= 2, got s = {s}")));
    }
    let t = length_over_lambda(q, s * m, lambda)?;
    if t < 3 {
        return Err(bad(format!("block length {t} too short")));
    }
    let ext = extension(q, s)?;
    let codes = distance_optimal_ingredients(&ext, t, s)?;
    Ok(sr_linearized(&codes, LinearizedOptions::default())?.with_designed_distance(4))
}

/// `s1×s2` blocks from `s1` codes over `GF(q^{s2})` of length `(q^{s2·m}-1)/λ`.
pub fn distance_optimal_rect(q: u64, s1: u32, s2: u32, m: u32, lambda: u64) -> Result<SumRankCode, ConstructError> {
    if s1 < 2 || s1 >= s2 {
        return Err(bad(format!("need 2 <= s1 < s2, got s1 = {s1}, s2 = {s2}")));
    }
    let t = length_over_lambda(q, s2 * m, lambda)?;
    if t < 3 {
        return Err(bad(format!("block length {t} too short")));
    }
    let ext = extension(q, s2)?;
    let codes = distance_optimal_ingredients(&ext, t, s1)?;
    Ok(sr_linearized(&codes, LinearizedOptions::default())?.with_designed_distance(4))
}

/// Cyclic `[Q^2-1, Q^2-5, 4]` code over `GF(Q)`, `Q = q^2`, with `T = C0 ∪ C1 ∪ C_{Q+1}`.
pub fn cyclic_four_element_defining_set(q: u64) -> Result<LinearCode, ConstructError> {
    let ext = extension(q, 2)?;
    let big_q = ext.order() as u64;
    let n = big_q * big_q - 1;
    Ok(hamming::cyclic_code(n, &ext, &[0, 1, big_q + 1])?)
}

/// `2×2` blocks over `GF(q)` with block length `q^4 - 1`.
pub fn distance_optimal_2x2(q: u64) -> Result<SumRankCode, ConstructError> {
    let c1 = cyclic_four_element_defining_set(q)?;
    let c2 = hamming::single_parity_code(c1.field(), c1.len())?;
    Ok(sr_linearized(&[c1, c2], LinearizedOptions::default())?.with_designed_distance(4))
}

/// Reed-Solomon `[t, t-3, 4]` and single parity `[t, t-1, 2]` over `GF(q^2)`, `4 <= t <= q^2`.
pub fn almost_msrd_2x2(q: u64, t: usize) -> Result<SumRankCode, ConstructError> {
    let ext = extension(q, 2)?;
    if t < 4 || t > ext.order() as usize {
        return Err(bad(format!("need 4 <= t <= q^2 = {}, got t = {t}", ext.order())));
    }
    let c1 = hamming::reed_solomon_code(&ext, t, t - 3)?;
    let c2 = hamming::single_parity_code(&ext, t)?;
    Ok(sr_linearized(&[c1, c2], LinearizedOptions::default())?.with_designed_distance(4))
}

/// `Plotkin(SR(single parity, full, …), distance-optimal-sxs(2, s, m, 1))`, binary `s×s` blocks.
pub fn plotkin_sxs(s: u32, m: u32) -> Result<SumRankCode, ConstructError> {
    if s < 2 {
        return Err(bad(format!("need s >= 2, got s = {s}")));
    }
    let second = distance_optimal_sxs(2, s, m, 1)?;
    let ext = extension(2, s)?;
    let t = second.profile().t();
    let mut codes = vec![hamming::single_parity_code(&ext, t)?];
    codes.extend((1..s).map(|_| hamming::full_code(&ext, t)));
    let first = sr_linearized(&codes, LinearizedOptions::default())?.with_designed_distance(2);
    Ok(plotkin(&first, &second)?.with_designed_distance(4))
}
