use std::collections::{BTreeMap, HashSet};

use proptest::prelude::*;
use sumrank::certify::{self, DistanceSource, Property, Verdict};
use sumrank::construct::recipes;
use sumrank::{Budgets, Field, Matrix, MatrixProfile, SumRankCode, SumRankWord};

/// Rank of a block by counting its row space.
fn brute_rank(f: &Field, m: &Matrix) -> usize {
    let q = f.order();
    let mut span = HashSet::new();
    let n = m.rows();
    let combos = (q as u64).pow(n as u32);
    for x in 0..combos {
        let mut c = x;
        let mut v = vec![0u32; m.cols()];
        for r in 0..n {
            let a = (c % q as u64) as u32;
            c /= q as u64;
            for (j, e) in v.iter_mut().enumerate() {
                *e = f.add(*e, f.mul(a, m.get(r, j)));
            }
        }
        span.insert(v);
    }
    let mut rank = 0;
    let mut size = 1usize;
    while size < span.len() {
        size *= q as usize;
        rank += 1;
    }
    rank
}

fn brute_weight(f: &Field, w: &SumRankWord) -> usize {
    w.blocks.iter().map(|b| brute_rank(f, b)).sum()
}

fn brute_distance(code: &SumRankCode) -> usize {
    let f = code.field();
    code.codewords(1 << 20).unwrap().filter(|w| !w.is_zero()).map(|w| brute_weight(f, &w)).min().unwrap()
}

/// Covering radius from every ambient word's syndrome, with block ranks by brute force.
fn brute_covering_radius(code: &SumRankCode) -> usize {
    let profile = code.profile();
    let f = code.field();
    let q = profile.q();
    let amb = profile.ambient_dim();
    let h = code.parity();
    let mut best: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for x in 0..q.pow(amb as u32) {
        let mut c = x;
        let flat: Vec<u32> = (0..amb)
            .map(|_| {
                let d = (c % q) as u32;
                c /= q;
                d
            })
            .collect();
        let s = h.mul_vec(&flat, f);
        let w = brute_weight(f, &profile.word_from_flat(&flat).unwrap());
        let e = best.entry(s).or_insert(usize::MAX);
        *e = (*e).min(w);
    }
    assert_eq!(best.len() as u64, q.pow(code.codim() as u32));
    *best.values().max().unwrap()
}

fn params(kv: &[(&str, u64)]) -> BTreeMap<String, u64> {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn quasi_perfect_2x2_small_matches_oracles() {
    let code = recipes::build("quasi-perfect-2xm", &params(&[("q", 2), ("m", 2), ("u", 2)])).unwrap();
    let d = certify::sr_min_distance(&code, 1 << 22).unwrap();
    assert_eq!(d.exact(), Some(brute_distance(&code)));
    assert_eq!(d.exact(), Some(3));
    let w = d.witness.unwrap();
    assert!(code.contains(&w));
    assert_eq!(brute_weight(code.field(), &w), 3);
    let cov = certify::sr_covering_radius(&code, 1 << 16).unwrap();
    assert_eq!(cov.radius, 2);
    let (sweep, _) = certify::covering_radius_by_sweep(&code, 1 << 22).unwrap();
    assert_eq!(sweep, 2);
    assert_eq!(code.profile().weight(&cov.deep_hole).unwrap(), 2);
}

#[test]
fn support_search_agrees_with_exhaustive() {
    let code = recipes::build("quasi-perfect-2xm", &params(&[("q", 2), ("m", 2), ("u", 2)])).unwrap();
    // 2^14 codewords exceed this budget; the support search needs far less.
    let d = certify::sr_min_distance(&code, 2000).unwrap();
    assert_eq!(d.exact(), Some(3));
    assert_ne!(d.source, DistanceSource::Exhaustive);
    assert!(code.contains(d.witness.as_ref().unwrap()));
}

#[test]
fn tiny_budget_gives_valid_interval() {
    let code = recipes::build("quasi-perfect-2xm", &params(&[("q", 2), ("m", 2), ("u", 2)])).unwrap();
    let d = certify::sr_min_distance(&code, 10).unwrap();
    assert!(d.lower <= 3 && d.upper.unwrap() >= 3);
}

#[test]
fn brute_covering_radius_small_profile() {
    let f = Field::prime(2).unwrap();
    let profile = MatrixProfile::new(&f, vec![(2, 2), (1, 2), (1, 1), (1, 1)]).unwrap();
    let g = Matrix::from_rows(&[vec![1, 0, 0, 1, 1, 1, 1, 0], vec![0, 1, 1, 0, 0, 1, 0, 1]]);
    let code = SumRankCode::explicit(&profile, &g, "mixed").unwrap();
    let cov = certify::sr_covering_radius(&code, 1 << 16).unwrap();
    assert_eq!(cov.radius, brute_covering_radius(&code));
    assert_eq!(certify::covering_radius_by_sweep(&code, 1 << 16).unwrap().0, cov.radius);
}

#[test]
fn certificate_fields_and_verdicts() {
    let code = recipes::build("quasi-perfect-2xm", &params(&[("q", 2), ("m", 2), ("u", 2)])).unwrap();
    let budgets = Budgets::default();
    let c = sumrank::certify(&code, Property::QuasiPerfect, &budgets).unwrap();
    assert_eq!(c.verdict, Verdict::Certified);
    assert_eq!(c.quantity("min-distance").unwrap().value, "3");
    assert_eq!(c.quantity("covering-radius").unwrap().value, "2");
    let json: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
    for key in ["subject", "property", "quantities", "bounds", "verdict", "toolchain-version"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    let c = sumrank::certify(&code, Property::Perfect, &budgets).unwrap();
    assert_eq!(c.verdict, Verdict::Refuted);
    let c = sumrank::certify(&code, Property::Msrd, &budgets).unwrap();
    // m(N-d+1) - k = 2·8 - 14 = 2
    assert_eq!(c.quantity("singleton-defect").unwrap().value, "2");
    assert_eq!(c.verdict, Verdict::Refuted);
    let c = sumrank::certify(&code, Property::AlmostMsrd, &budgets).unwrap();
    assert_eq!(c.verdict, Verdict::Certified);
}

#[test]
fn inconclusive_when_syndrome_budget_is_tiny() {
    let code = recipes::build("quasi-perfect-2xm", &params(&[("q", 2), ("m", 2), ("u", 2)])).unwrap();
    let budgets = Budgets { syndromes: 4, ..Budgets::default() };
    let c = sumrank::certify(&code, Property::CoveringRadius, &budgets).unwrap();
    assert_eq!(c.verdict, Verdict::Inconclusive);
}

#[test]
fn certificates_are_deterministic() {
    let code = recipes::build("almost-msrd-2x2", &params(&[("q", 2), ("t", 4)])).unwrap();
    let a = sumrank::certify(&code, Property::AlmostMsrd, &Budgets::default()).unwrap().to_json();
    let b = sumrank::certify(&code, Property::AlmostMsrd, &Budgets::default()).unwrap().to_json();
    assert_eq!(a, b);
}

/// Random explicit codes with ambient dimension at most 8.
fn arb_code() -> impl Strategy<Value = SumRankCode> {
    let shapes = prop::collection::vec((1usize..=2, 1usize..=2).prop_map(|(a, b)| (a.min(b), a.max(b))), 1..=3);
    (prop_oneof![Just(2u64), Just(3u64)], shapes).prop_flat_map(|(q, shapes)| {
        let amb: usize = shapes.iter().map(|(n, m)| n * m).sum();
        let limit = if q == 2 { 6 } else { 4 };
        (1..=amb.min(limit)).prop_flat_map(move |k| {
            let shapes = shapes.clone();
            prop::collection::vec(0..q as u32, k * amb).prop_map(move |data| {
                let f = Field::prime(q).unwrap();
                let profile = MatrixProfile::new(&f, shapes.clone()).unwrap();
                SumRankCode::explicit(&profile, &Matrix::from_vec(k, amb, data), "random").unwrap()
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn distance_matches_brute_force(code in arb_code()) {
        prop_assume!(code.dim() > 0);
        let d = certify::sr_min_distance(&code, 1 << 20).unwrap();
        prop_assert_eq!(d.exact(), Some(brute_distance(&code)));
        let s = certify::sr_min_distance(&code, 1).unwrap();
        prop_assert!(s.lower <= d.lower && s.upper.unwrap() >= d.lower);
    }

    #[test]
    fn covering_radius_matches_brute_force(code in arb_code()) {
        let cov = certify::sr_covering_radius(&code, 1 << 16).unwrap();
        prop_assert_eq!(cov.radius, brute_covering_radius(&code));
        prop_assert_eq!(code.profile().weight(&cov.deep_hole).unwrap(), cov.radius);
    }

    #[test]
    fn sphere_packing_holds_and_radius_dominates_packing(code in arb_code()) {
        prop_assume!(code.dim() > 0);
        let d = certify::sr_min_distance(&code, 1 << 20).unwrap().exact().unwrap();
        prop_assert!(certify::sphere_packing(code.profile(), code.dim(), d).holds);
        let r = certify::sr_covering_radius(&code, 1 << 16).unwrap().radius;
        prop_assert!(r >= (d - 1) / 2);
        prop_assert!(r >= certify::covering_radius_lower_bound(&code));
        let bound = certify::singleton_like_bound(code.profile(), d).unwrap();
        let size = certify::PowerOf { base: code.profile().q(), exponent: code.dim() as i64 };
        prop_assert!(size.value() <= bound.value());
    }
}
