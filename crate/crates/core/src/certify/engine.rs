//! Exact sum-rank minimum distance and covering radius by enumeration.
//!
//! Words are handled as one packed `u64` per block (base `q`, row-major,
//! little-endian), so addition is digit-wise and block ranks come from lookup
//! tables.

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;

use super::CertifyError;
use crate::arith;
use crate::construct::{Construction, SumRankCode};
use crate::hamming::{self, DistanceMethod};
use crate::matrix::Matrix;
use crate::spaces::{self, pack, packed_add, packed_neg, rank_one_matrices, unpack, BlockRanks, MatrixProfile, SumRankWord};
use crate::syndrome::{CosetLeaderTable, Metric};

/// How a distance value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceSource {
    /// Minimum over every nonzero codeword.
    Exhaustive,
    /// Minimum over codewords supported on every block set of growing size.
    SupportSearch,
    /// A construction lower bound met by a witness codeword.
    BoundAndWitness,
    /// Hamming-metric engine: codeword enumeration.
    HammingEnumerate,
    /// Hamming-metric engine: dependent parity-check columns.
    HammingSupportTest,
    /// Budget exhausted; only an interval is known.
    Interval,
    /// The code has no nonzero codeword.
    ZeroCode,
}

impl DistanceSource {
    pub fn name(self) -> &'static str {
        match self {
            DistanceSource::Exhaustive => "exhaustive",
            DistanceSource::SupportSearch => "support-search",
            DistanceSource::BoundAndWitness => "bound-and-witness",
            DistanceSource::HammingEnumerate => "hamming-enumerate",
            DistanceSource::HammingSupportTest => "support-test",
            DistanceSource::Interval => "interval",
            DistanceSource::ZeroCode => "zero-code",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrDistance {
    pub lower: usize,
    /// `None` only for the zero code.
    pub upper: Option<usize>,
    pub witness: Option<SumRankWord>,
    pub source: DistanceSource,
    /// Certified lower bound from the construction alone.
    pub construction_bound: usize,
}

impl SrDistance {
    pub fn exact(&self) -> Option<usize> {
        match self.upper {
            Some(u) if u == self.lower => Some(u),
            _ => None,
        }
    }
}

/// Packed view of a profile.
pub(crate) struct Packed {
    pub p: u32,
    pub q: u64,
    pub field: crate::gf::Field,
    pub shapes: Vec<(usize, usize)>,
    pub offsets: Vec<usize>,
    pub ranks: BlockRanks,
}

impl Packed {
    pub fn new(profile: &MatrixProfile) -> Result<Packed, CertifyError> {
        let q = profile.q();
        for &(n, m) in profile.blocks() {
            if arith::checked_pow(q, (n * m) as u32).is_none_or(|s| s > 1 << 40) {
                return Err(CertifyError::Unsupported(format!("{n}x{m} blocks over GF({q}) are too large to pack")));
            }
        }
        Ok(Packed {
            p: profile.field().p(),
            q,
            field: profile.field().clone(),
            shapes: profile.blocks().to_vec(),
            offsets: profile.offsets(),
            ranks: BlockRanks::new(profile),
        })
    }

    pub fn t(&self) -> usize {
        self.shapes.len()
    }

    fn block_len(&self, b: usize) -> usize {
        self.shapes[b].0 * self.shapes[b].1
    }

    /// Packs a flat vector block by block.
    pub fn pack_flat(&self, flat: &[u32]) -> Vec<u64> {
        (0..self.t()).map(|b| pack(self.q, &flat[self.offsets[b]..self.offsets[b] + self.block_len(b)])).collect()
    }

    pub fn pack_blocks(&self, flat: &[u32], blocks: &[usize], local_offsets: &[usize]) -> Vec<u64> {
        blocks
            .iter()
            .zip(local_offsets)
            .map(|(&b, &o)| pack(self.q, &flat[o..o + self.block_len(b)]))
            .collect()
    }

    pub fn unpack_word(&self, packed: &[u64]) -> SumRankWord {
        SumRankWord::new(
            packed
                .iter()
                .zip(&self.shapes)
                .map(|(&x, &(n, m))| Matrix::from_vec(n, m, unpack(self.q, x, n * m)))
                .collect(),
        )
    }

    fn scale(&self, b: usize, a: u32, x: u64) -> u64 {
        let len = self.block_len(b);
        let v: Vec<u32> = unpack(self.q, x, len).into_iter().map(|c| self.field.mul(a, c)).collect();
        pack(self.q, &v)
    }
}

/// Minimum weight over the nonzero GF(q)-span of `rows`, each row given as packed
/// values on the listed `blocks`. Returns the weight and the combination coefficients.
/// Deterministic: ties resolve to the first combination in odometer order.
pub(crate) fn min_weight_span(packed: &Packed, rows: &[Vec<u64>], blocks: &[usize]) -> Option<(usize, Vec<u32>)> {
    let k = rows.len();
    if k == 0 {
        return None;
    }
    let q = packed.q;
    let p = packed.p;
    let width = blocks.len();
    // scaled[i][a][j] = a · rows[i][j]
    let scaled: Vec<Vec<Vec<u64>>> = rows
        .iter()
        .map(|row| {
            (0..q as u32)
                .map(|a| row.iter().enumerate().map(|(j, &x)| packed.scale(blocks[j], a, x)).collect())
                .collect()
        })
        .collect();
    // step[i][a]: nonzero block changes when digit i goes from a to a+1 (mod q)
    let step: Vec<Vec<Vec<(usize, u64)>>> = scaled
        .iter()
        .map(|s| {
            (0..q as usize)
                .map(|a| {
                    let next = (a + 1) % q as usize;
                    (0..width)
                        .filter_map(|j| {
                            let d = packed_add(p, s[next][j], packed_neg(p, s[a][j]));
                            (d != 0).then_some((j, d))
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut top = 0usize;
    while top < k && q.pow(top as u32) < 256 {
        top += 1;
    }
    let low = k - top;
    let prefixes = q.pow(top as u32);
    let best = (0..prefixes)
        .into_par_iter()
        .filter_map(|prefix| {
            let mut digits = vec![0u32; k];
            for (i, d) in unpack(q, prefix, top).into_iter().enumerate() {
                digits[low + i] = d;
            }
            let mut word = vec![0u64; width];
            for i in low..k {
                for j in 0..width {
                    word[j] = packed_add(p, word[j], scaled[i][digits[i] as usize][j]);
                }
            }
            let mut ranks: Vec<usize> = (0..width).map(|j| packed.ranks.rank(blocks[j], word[j])).collect();
            let mut weight: usize = ranks.iter().sum();
            let mut best: Option<(usize, Vec<u32>)> = None;
            loop {
                if weight > 0 || word.iter().any(|&x| x != 0) {
                    if best.as_ref().is_none_or(|b| weight < b.0) {
                        best = Some((weight, digits.clone()));
                    }
                } else if prefix != 0 || digits.iter().any(|&d| d != 0) {
                    // a nonzero combination giving the zero word cannot happen for independent rows
                    debug_assert!(false, "rows are dependent");
                }
                let mut i = 0;
                loop {
                    if i == low {
                        return best;
                    }
                    let old = digits[i] as usize;
                    for &(j, d) in &step[i][old] {
                        word[j] = packed_add(p, word[j], d);
                        let r = packed.ranks.rank(blocks[j], word[j]);
                        weight = weight + r - ranks[j];
                        ranks[j] = r;
                    }
                    digits[i] = ((old + 1) % q as usize) as u32;
                    if digits[i] != 0 {
                        break;
                    }
                    i += 1;
                }
            }
        })
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| rev(&a.1).cmp(&rev(&b.1))));
    best
}

fn rev(d: &[u32]) -> Vec<u32> {
    d.iter().rev().copied().collect()
}

fn word_weight(packed: &Packed, word: &[u64]) -> usize {
    packed.ranks.weight(word)
}

/// Lower bound on the minimum distance implied by the construction alone.
pub fn construction_lower_bound(code: &SumRankCode, budget: u64) -> usize {
    let ingredient_distance = |c: &hamming::LinearCode| -> Option<usize> {
        if c.dim() == 0 {
            None
        } else {
            Some(hamming::min_distance(c, DistanceMethod::Auto, budget).lower)
        }
    };
    let none = code.profile().total_rows() + 1;
    match code.construction() {
        Construction::Covering { ingredients, .. } => {
            ingredients.iter().filter_map(ingredient_distance).min().unwrap_or(none)
        }
        Construction::Linearized { ingredients, .. } => {
            let (n, m) = code.profile().blocks()[0];
            if n == m {
                ingredients
                    .iter()
                    .enumerate()
                    .filter_map(|(j, c)| ingredient_distance(c).map(|d| (j + 1) * d))
                    .min()
                    .unwrap_or(none)
            } else {
                1
            }
        }
        Construction::Plotkin { first, second } => {
            let d1 = if first.dim() == 0 { usize::MAX / 4 } else { construction_lower_bound(first, budget) };
            let d2 = if second.dim() == 0 { usize::MAX / 4 } else { construction_lower_bound(second, budget) };
            (2 * d1).min(d2).min(none)
        }
        Construction::HammingMetric { code: c } => ingredient_distance(c).unwrap_or(none),
        Construction::Extended { .. } | Construction::Explicit => 1,
    }
}

/// Exact sum-rank minimum distance when the budget allows, otherwise an interval.
/// `budget` caps codeword enumeration and the support search's total work.
pub fn sr_min_distance(code: &SumRankCode, budget: u64) -> Result<SrDistance, CertifyError> {
    let none = code.profile().total_rows() + 1;
    if code.dim() == 0 {
        return Ok(SrDistance { lower: none, upper: None, witness: None, source: DistanceSource::ZeroCode, construction_bound: none });
    }
    if let Construction::HammingMetric { code: c } = code.construction() {
        let r = hamming::min_distance(c, DistanceMethod::Auto, budget);
        let source = match (r.exact(), r.method) {
            (Some(_), DistanceMethod::SupportTest) => DistanceSource::HammingSupportTest,
            (Some(_), _) => DistanceSource::HammingEnumerate,
            (None, _) => DistanceSource::Interval,
        };
        let witness = r.witness.map(|w| SumRankWord::new(w.into_iter().map(|x| Matrix::from_vec(1, 1, vec![x])).collect()));
        return Ok(SrDistance { lower: r.lower, upper: r.upper, witness, source, construction_bound: r.lower });
    }
    let packed = Packed::new(code.profile())?;
    let all_blocks: Vec<usize> = (0..packed.t()).collect();
    let rows: Vec<Vec<u64>> = code.generator().to_rows().iter().map(|r| packed.pack_flat(r)).collect();
    let bound = construction_lower_bound(code, budget);
    if arith::checked_pow(packed.q, code.dim() as u32).is_some_and(|s| s <= budget) {
        let (w, coeffs) = min_weight_span(&packed, &rows, &all_blocks).expect("nonzero dimension");
        let witness = code.encode_flat(&coeffs);
        return Ok(SrDistance { lower: w, upper: Some(w), witness: Some(witness), source: DistanceSource::Exhaustive, construction_bound: bound });
    }
    // Upper bound from the lightest generator row; ties go to the first row.
    let (mut best, mut best_word) = rows
        .iter()
        .map(|r| (word_weight(&packed, r), r.clone()))
        .min_by_key(|x| x.0)
        .expect("nonzero dimension");
    if best <= bound {
        return Ok(SrDistance {
            lower: best,
            upper: Some(best),
            witness: Some(packed.unpack_word(&best_word)),
            source: DistanceSource::BoundAndWitness,
            construction_bound: bound,
        });
    }
    let f = code.field();
    let parity = code.parity();
    let mut work = 0u64;
    let t = packed.t();
    for s in 1..=t {
        if best <= bound.max(s) {
            let source = if best <= bound { DistanceSource::BoundAndWitness } else { DistanceSource::SupportSearch };
            return Ok(SrDistance { lower: best, upper: Some(best), witness: Some(packed.unpack_word(&best_word)), source, construction_bound: bound });
        }
        let subsets = arith::binomial(t as u64, s as u64);
        if subsets + BigUint::from(work) > BigUint::from(budget) {
            return Ok(interval(&packed, bound.max(s), best, &best_word, bound));
        }
        let sets: Vec<Vec<usize>> = (0..t).combinations(s).collect();
        work += sets.len() as u64;
        // Kernel of H restricted to the columns of the chosen blocks.
        let kernels: Vec<Matrix> = sets
            .par_iter()
            .map(|set| {
                let cols: Vec<usize> = set.iter().flat_map(|&b| packed.offsets[b]..packed.offsets[b] + packed.block_len(b)).collect();
                parity.select_columns(&cols).nullspace(f)
            })
            .collect();
        let cost: u64 = kernels.iter().map(|k| arith::checked_pow(packed.q, k.rows() as u32).unwrap_or(u64::MAX)).fold(0u64, |a, b| a.saturating_add(b));
        if cost.saturating_add(work) > budget {
            return Ok(interval(&packed, bound.max(s), best, &best_word, bound));
        }
        work += cost;
        let found = sets
            .par_iter()
            .zip(&kernels)
            .enumerate()
            .filter_map(|(idx, (set, kernel))| {
                if kernel.rows() == 0 {
                    return None;
                }
                let mut local = Vec::with_capacity(set.len());
                let mut acc = 0;
                for &b in set {
                    local.push(acc);
                    acc += packed.block_len(b);
                }
                let krows: Vec<Vec<u64>> = kernel.to_rows().iter().map(|r| packed.pack_blocks(r, set, &local)).collect();
                let (w, coeffs) = min_weight_span(&packed, &krows, set)?;
                Some((w, idx, coeffs))
            })
            .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        if let Some((w, idx, coeffs)) = found {
            if w < best {
                let set = &sets[idx];
                let combo = kernels[idx].left_mul_vec(&coeffs, f);
                let mut word = vec![0u64; t];
                let mut at = 0;
                for &b in set {
                    let len = packed.block_len(b);
                    word[b] = pack(packed.q, &combo[at..at + len]);
                    at += len;
                }
                best = w;
                best_word = word;
            }
        }
        // Every codeword not yet seen has at least s + 1 nonzero blocks.
        if best <= (s + 1).max(bound) {
            let source = if best <= bound { DistanceSource::BoundAndWitness } else { DistanceSource::SupportSearch };
            return Ok(SrDistance { lower: best, upper: Some(best), witness: Some(packed.unpack_word(&best_word)), source, construction_bound: bound });
        }
    }
    unreachable!("the full block set covers every codeword")
}

fn interval(packed: &Packed, lower: usize, best: usize, word: &[u64], bound: usize) -> SrDistance {
    SrDistance {
        lower: lower.min(best),
        upper: Some(best),
        witness: Some(packed.unpack_word(word)),
        source: DistanceSource::Interval,
        construction_bound: bound,
    }
}

/// Packed syndrome contributions of the unit vectors of each coordinate, scaled by each `a ∈ GF(q)`.
fn column_syndromes(code: &SumRankCode) -> Vec<Vec<u64>> {
    let f = code.field();
    let q = f.order() as u64;
    let h = code.parity();
    (0..h.cols())
        .map(|c| {
            let col: Vec<u32> = (0..h.rows()).map(|r| h.get(r, c)).collect();
            (0..f.order()).map(|a| pack(q, &col.iter().map(|&x| f.mul(a, x)).collect::<Vec<_>>())).collect()
        })
        .collect()
}

/// Atoms for the coset BFS: every rank-one matrix in every block.
struct Atoms {
    syndromes: Vec<u64>,
    /// (block, matrix) per atom.
    words: Vec<(usize, Matrix)>,
}

fn rank_one_atoms(code: &SumRankCode, colsyn: &[Vec<u64>]) -> Atoms {
    let f = code.field();
    let p = f.p();
    let profile = code.profile();
    let offsets = profile.offsets();
    let mut shapes: Vec<((usize, usize), Vec<Matrix>)> = Vec::new();
    let mut syndromes = Vec::new();
    let mut words = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (b, &shape) in profile.blocks().iter().enumerate() {
        if !shapes.iter().any(|s| s.0 == shape) {
            shapes.push((shape, rank_one_matrices(f, shape.0, shape.1)));
        }
        let mats = &shapes.iter().find(|s| s.0 == shape).expect("cached").1;
        for mat in mats {
            let s = mat
                .data()
                .iter()
                .enumerate()
                .fold(0u64, |acc, (k, &x)| packed_add(p, acc, colsyn[offsets[b] + k][x as usize]));
            if s != 0 && seen.insert(s) {
                syndromes.push(s);
                words.push((b, mat.clone()));
            }
        }
    }
    Atoms { syndromes, words }
}

#[derive(Debug, Clone)]
pub struct SrCovering {
    pub radius: usize,
    pub table: CosetLeaderTable,
    /// A word at distance `radius` from the code.
    pub deep_hole: SumRankWord,
}

/// Exact sum-rank covering radius by BFS over the `q^{codim}` syndromes.
pub fn sr_covering_radius(code: &SumRankCode, syndrome_budget: u64) -> Result<SrCovering, CertifyError> {
    let q = code.profile().q();
    let codim = code.codim();
    if arith::checked_pow(q, codim as u32).is_none_or(|s| s > syndrome_budget) {
        return Err(CertifyError::Budget { what: "syndrome enumeration", needed: format!("{q}^{codim}"), budget: syndrome_budget });
    }
    let colsyn = column_syndromes(code);
    let atoms = rank_one_atoms(code, &colsyn);
    let table = CosetLeaderTable::build(Metric::SumRank, code.field().p(), q, codim, &atoms.syndromes);
    let radius = table.covering_radius().expect("rank-one matrices span the ambient space");
    let deepest = table.deepest_syndrome().expect("table is complete");
    let f = code.field();
    let mut deep_hole = code.profile().zero_word();
    for i in table.leader_atoms(deepest, &atoms.syndromes).expect("reached") {
        let (b, m) = &atoms.words[i];
        deep_hole.blocks[*b] = deep_hole.blocks[*b].add(m, f);
    }
    Ok(SrCovering { radius, table, deep_hole })
}

/// Minimum coset weight per syndrome by sweeping every ambient word; an
/// independent check of [`sr_covering_radius`]. Returns `(radius, weights)`.
pub fn covering_radius_by_sweep(code: &SumRankCode, ambient_budget: u64) -> Result<(usize, Vec<u8>), CertifyError> {
    let profile = code.profile();
    let q = profile.q();
    let amb = profile.ambient_dim();
    if arith::checked_pow(q, amb as u32).is_none_or(|s| s > ambient_budget) {
        return Err(CertifyError::Budget { what: "ambient sweep", needed: format!("{q}^{amb}"), budget: ambient_budget });
    }
    let p = code.field().p();
    let colsyn = column_syndromes(code);
    let packed = Packed::new(profile)?;
    let offsets = profile.offsets();
    // Per block: (syndrome contribution, rank) for every matrix value.
    let tables: Vec<Vec<(u64, u8)>> = (0..packed.t())
        .map(|b| {
            let len = packed.block_len(b);
            (0..q.pow(len as u32))
                .map(|x| {
                    let v = unpack(q, x, len);
                    let s = v.iter().enumerate().fold(0u64, |acc, (k, &c)| packed_add(p, acc, colsyn[offsets[b] + k][c as usize]));
                    (s, packed.ranks.rank(b, x) as u8)
                })
                .collect()
        })
        .collect();
    let size = q.pow(code.codim() as u32) as usize;
    let first = &tables[0];
    let rest = &tables[1..];
    let weights = first
        .par_iter()
        .fold(
            || vec![u8::MAX; size],
            |mut acc, &(s0, w0)| {
                sweep(rest, p, s0, w0, &mut acc);
                acc
            },
        )
        .reduce(
            || vec![u8::MAX; size],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x = (*x).min(y));
                a
            },
        );
    let radius = *weights.iter().max().expect("nonempty") as usize;
    Ok((radius, weights))
}

fn sweep(tables: &[Vec<(u64, u8)>], p: u32, s: u64, w: u8, acc: &mut [u8]) {
    match tables.split_first() {
        None => {
            let slot = &mut acc[s as usize];
            if w < *slot {
                *slot = w;
            }
        }
        Some((head, tail)) => {
            for &(sb, wb) in head {
                sweep(tail, p, packed_add(p, s, sb), w + wb, acc);
            }
        }
    }
}

/// Sphere-covering lower bound on the covering radius: the least `r` with `q^k·V(r) >= q^{amb}`.
pub fn covering_radius_lower_bound(code: &SumRankCode) -> usize {
    let profile = code.profile();
    let target = BigUint::from(profile.q()).pow(code.codim() as u32);
    (0..=profile.total_rows()).find(|&r| profile.ball_volume(r) >= target).unwrap_or(profile.total_rows())
}

/// Upper bound on the covering radius available without enumerating sum-rank cosets:
/// the sum of ingredient covering radii for the covering construction (and its
/// extensions), otherwise the trivial bound `N`.
pub fn covering_radius_upper_bound(code: &SumRankCode, syndrome_budget: u64) -> usize {
    let n = code.profile().total_rows();
    match code.construction() {
        Construction::Covering { ingredients, .. } => ingredients
            .iter()
            .map(|c| c.covering_radius(syndrome_budget).map(|r| r.0).ok())
            .sum::<Option<usize>>()
            .unwrap_or(n)
            .min(n),
        Construction::Extended { base, .. } => covering_radius_upper_bound(base, syndrome_budget),
        Construction::HammingMetric { code: c } => c.covering_radius(syndrome_budget).map(|r| r.0).unwrap_or(n),
        _ => n,
    }
}

/// Weight of a word using the packed rank tables; used by tests and sanity checks.
pub fn weight_of(profile: &MatrixProfile, word: &SumRankWord) -> Result<usize, CertifyError> {
    Ok(profile.weight(word)?)
}

/// Ball volume at radius `r`, clamped to the whole space beyond `N`.
pub fn volume(profile: &MatrixProfile, r: usize) -> BigUint {
    spaces::ball_volume_exact(profile, r.min(profile.total_rows())).expect("clamped radius")
}
