//! The sum-rank metric space over `GF(q)` for an arbitrary block profile.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith;
use crate::gf::Field;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpaceError {
    #[error("a profile needs at least one block")]
    EmptyProfile,
    #[error("block {index} has shape {n}x{m}; need 1 <= n <= m")]
    BadBlock { index: usize, n: usize, m: usize },
    #[error("word has {got} blocks, profile has {expected}")]
    BlockCount { got: usize, expected: usize },
    #[error("block {index} is {got:?}, profile expects {expected:?}")]
    BlockShape { index: usize, got: (usize, usize), expected: (usize, usize) },
    #[error("entry {0} is not an element of the base field")]
    BadEntry(u32),
    #[error("rank {r} out of range 0..={max}")]
    RankOutOfRange { r: usize, max: usize },
    #[error("radius {r} out of range 0..={max}")]
    RadiusOutOfRange { r: usize, max: usize },
    #[error("{0}")]
    Invalid(String),
}

/// Block sizes `(n_i, m_i)` with `n_i <= m_i`, over the base field `GF(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixProfile {
    field: Field,
    blocks: Vec<(usize, usize)>,
}

impl MatrixProfile {
    pub fn new(field: &Field, blocks: Vec<(usize, usize)>) -> Result<MatrixProfile, SpaceError> {
        if blocks.is_empty() {
            return Err(SpaceError::EmptyProfile);
        }
        for (index, &(n, m)) in blocks.iter().enumerate() {
            if n == 0 || n > m {
                return Err(SpaceError::BadBlock { index, n, m });
            }
        }
        Ok(MatrixProfile { field: field.clone(), blocks })
    }

    /// `t` blocks of `n x m`.
    pub fn uniform(field: &Field, t: usize, n: usize, m: usize) -> Result<MatrixProfile, SpaceError> {
        MatrixProfile::new(field, vec![(n, m); t])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn t(&self) -> usize {
        self.blocks.len()
    }

    /// `N = Σ n_i`, the largest possible weight.
    pub fn total_rows(&self) -> usize {
        self.blocks.iter().map(|b| b.0).sum()
    }

    /// `Σ n_i m_i`.
    pub fn ambient_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.0 * b.1).sum()
    }

    /// Offset of each block's first coordinate in the flattened word.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.blocks
            .iter()
            .map(|b| {
                let o = acc;
                acc += b.0 * b.1;
                o
            })
            .collect()
    }

    /// The common block shape when all blocks agree.
    pub fn uniform_shape(&self) -> Option<(usize, usize)> {
        let first = self.blocks[0];
        self.blocks.iter().all(|&b| b == first).then_some(first)
    }

    /// The common column count when all blocks agree on it.
    pub fn common_m(&self) -> Option<usize> {
        let m = self.blocks[0].1;
        self.blocks.iter().all(|b| b.1 == m).then_some(m)
    }

    pub fn concat(&self, other: &MatrixProfile) -> MatrixProfile {
        let mut blocks = self.blocks.clone();
        blocks.extend_from_slice(&other.blocks);
        MatrixProfile { field: self.field.clone(), blocks }
    }

    pub fn zero_word(&self) -> SumRankWord {
        SumRankWord { blocks: self.blocks.iter().map(|&(n, m)| Matrix::zeros(n, m)).collect() }
    }

    /// Splits a flattened coordinate vector (blocks in order, each row-major).
    pub fn word_from_flat(&self, flat: &[u32]) -> Result<SumRankWord, SpaceError> {
        if flat.len() != self.ambient_dim() {
            return Err(SpaceError::Invalid(format!(
                "flat word has {} coordinates, profile has {}",
                flat.len(),
                self.ambient_dim()
            )));
        }
        let mut blocks = Vec::with_capacity(self.t());
        let mut at = 0;
        for &(n, m) in &self.blocks {
            blocks.push(Matrix::from_vec(n, m, flat[at..at + n * m].to_vec()));
            at += n * m;
        }
        Ok(SumRankWord { blocks })
    }

    pub fn check(&self, x: &SumRankWord) -> Result<(), SpaceError> {
        if x.blocks.len() != self.t() {
            return Err(SpaceError::BlockCount { got: x.blocks.len(), expected: self.t() });
        }
        for (index, (b, &shape)) in x.blocks.iter().zip(&self.blocks).enumerate() {
            if (b.rows(), b.cols()) != shape {
                return Err(SpaceError::BlockShape { index, got: (b.rows(), b.cols()), expected: shape });
            }
            if let Some(&bad) = b.data().iter().find(|&&v| !self.field.contains(v)) {
                return Err(SpaceError::BadEntry(bad));
            }
        }
        Ok(())
    }

    pub fn weight(&self, x: &SumRankWord) -> Result<usize, SpaceError> {
        self.check(x)?;
        Ok(x.blocks.iter().map(|b| b.rank(&self.field)).sum())
    }

    pub fn distance(&self, x: &SumRankWord, y: &SumRankWord) -> Result<usize, SpaceError> {
        self.check(x)?;
        self.check(y)?;
        let diff = SumRankWord {
            blocks: x.blocks.iter().zip(&y.blocks).map(|(a, b)| a.sub(b, &self.field)).collect(),
        };
        self.weight(&diff)
    }

    /// Exact volume of the ball of radius `r` (radii beyond `N` give the whole space).
    pub fn ball_volume(&self, r: usize) -> BigUint {
        let q = self.q();
        let mut dist = vec![BigUint::one()];
        for &(n, m) in &self.blocks {
            let block = rank_distribution(n, m, q);
            let len = (dist.len() + block.len() - 1).min(r + 1);
            let mut next = vec![BigUint::zero(); len];
            for (i, a) in dist.iter().enumerate() {
                for (j, b) in block.iter().enumerate() {
                    if i + j < len {
                        next[i + j] += a * b;
                    }
                }
            }
            dist = next;
        }
        dist.iter().sum()
    }

    /// `q^{Σ n_i m_i}`.
    pub fn ambient_size(&self) -> BigUint {
        BigUint::from(self.q()).pow(self.ambient_dim() as u32)
    }
}

/// A tuple of matrices, one per block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumRankWord {
    pub blocks: Vec<Matrix>,
}

impl SumRankWord {
    pub fn new(blocks: Vec<Matrix>) -> SumRankWord {
        SumRankWord { blocks }
    }

    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }
}

/// Number of `n x m` matrices over `GF(q)` of rank exactly `r`:
/// `Π_{i<r} (q^n - q^i)(q^m - q^i) / (q^r - q^i)`.
pub fn count_rank_matrices(n: usize, m: usize, r: usize, q: u64) -> Result<BigUint, SpaceError> {
    let max = n.min(m);
    if r > max {
        return Err(SpaceError::RankOutOfRange { r, max });
    }
    let qb = BigUint::from(q);
    let pw = |e: usize| qb.pow(e as u32);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..r {
        num *= (pw(n) - pw(i)) * (pw(m) - pw(i));
        den *= pw(r) - pw(i);
    }
    Ok(num / den)
}

/// Counts of `n x m` matrices by rank, index = rank.
pub fn rank_distribution(n: usize, m: usize, q: u64) -> Vec<BigUint> {
    (0..=n.min(m)).map(|r| count_rank_matrices(n, m, r, q).expect("rank in range")).collect()
}

/// Exact volume of the sum-rank ball of radius `r`, `0 <= r <= N`.
pub fn ball_volume_exact(profile: &MatrixProfile, r: usize) -> Result<BigUint, SpaceError> {
    let max = profile.total_rows();
    if r > max {
        return Err(SpaceError::RadiusOutOfRange { r, max });
    }
    Ok(profile.ball_volume(r))
}

/// Lower bound on the radius-2 ball in `t` blocks of `s x s`, counting only words
/// with exactly two rank-one blocks: `t(t-1)(q^s-1)^4 / (2(q-1)^2)`.
pub fn ball_volume_lower_bound_r2(t: usize, s: usize, q: u64) -> Result<BigRational, SpaceError> {
    if t < 2 {
        return Err(SpaceError::Invalid(format!("need at least two blocks, got {t}")));
    }
    if s == 0 || q < 2 {
        return Err(SpaceError::Invalid(format!("need s >= 1 and q >= 2, got s={s}, q={q}")));
    }
    let qs = BigUint::from(q).pow(s as u32) - 1u32;
    let num = BigUint::from(t) * BigUint::from(t - 1) * qs.pow(4);
    let den = BigUint::from(2u32) * BigUint::from(q - 1).pow(2);
    Ok(BigRational::new(num.into(), den.into()))
}

/// `Σ_{i<=r} C(n,i)(q-1)^i`.
pub fn hamming_ball_volume(n: usize, r: usize, q: u64) -> Result<BigUint, SpaceError> {
    if r > n {
        return Err(SpaceError::RadiusOutOfRange { r, max: n });
    }
    let qm1 = BigUint::from(q - 1);
    Ok((0..=r).map(|i| arith::binomial(n as u64, i as u64) * qm1.pow(i as u32)).sum())
}

/// Digit-wise addition of base-`p^k` packed vectors, which is field addition
/// coordinate by coordinate because every `GF(p^k)` index is itself base-`p` digits.
#[inline]
pub fn packed_add(p: u32, a: u64, b: u64) -> u64 {
    if p == 2 {
        return a ^ b;
    }
    let p = p as u64;
    let (mut a, mut b) = (a, b);
    let mut out = 0u64;
    let mut scale = 1u64;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale = scale.wrapping_mul(p);
    }
    out
}

/// Digit-wise negation matching [`packed_add`].
#[inline]
pub fn packed_neg(p: u32, a: u64) -> u64 {
    if p == 2 {
        return a;
    }
    let p = p as u64;
    let mut a = a;
    let mut out = 0u64;
    let mut scale = 1u64;
    while a > 0 {
        out += ((p - a % p) % p) * scale;
        a /= p;
        scale = scale.wrapping_mul(p);
    }
    out
}

/// Packs a vector over `GF(q)` little-endian in base `q`.
pub fn pack(q: u64, v: &[u32]) -> u64 {
    v.iter().rev().fold(0u64, |acc, &x| acc * q + x as u64)
}

pub fn unpack(q: u64, mut x: u64, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = x % q;
            x /= q;
            d as u32
        })
        .collect()
}

/// Largest block (in number of matrices) for which a rank lookup table is built.
const RANK_TABLE_LIMIT: u64 = 1 << 20;

/// Per-shape rank lookup for blocks packed as base-`q` row-major integers.
#[derive(Debug, Clone)]
pub struct BlockRanks {
    field: Field,
    shapes: Vec<(usize, usize)>,
    /// Index into `tables` per block.
    table_of: Vec<usize>,
    tables: Vec<Option<Vec<u8>>>,
}

impl BlockRanks {
    pub fn new(profile: &MatrixProfile) -> BlockRanks {
        let field = profile.field().clone();
        let q = field.order() as u64;
        let mut shapes: Vec<(usize, usize)> = Vec::new();
        let mut tables = Vec::new();
        let mut table_of = Vec::new();
        for &shape in profile.blocks() {
            let idx = match shapes.iter().position(|&s| s == shape) {
                Some(i) => i,
                None => {
                    shapes.push(shape);
                    let size = arith::checked_pow(q, (shape.0 * shape.1) as u32);
                    tables.push(size.filter(|&s| s <= RANK_TABLE_LIMIT).map(|s| rank_table(&field, shape, s)));
                    shapes.len() - 1
                }
            };
            table_of.push(idx);
        }
        BlockRanks { field, shapes, table_of, tables }
    }

    #[inline]
    pub fn rank(&self, block: usize, packed: u64) -> usize {
        let k = self.table_of[block];
        match &self.tables[k] {
            Some(t) => t[packed as usize] as usize,
            None => {
                let (n, m) = self.shapes[k];
                let q = self.field.order() as u64;
                Matrix::from_vec(n, m, unpack(q, packed, n * m)).rank(&self.field)
            }
        }
    }

    pub fn weight(&self, packed_blocks: &[u64]) -> usize {
        packed_blocks.iter().enumerate().map(|(i, &b)| self.rank(i, b)).sum()
    }
}

fn rank_table(field: &Field, (n, m): (usize, usize), size: u64) -> Vec<u8> {
    let q = field.order() as u64;
    (0..size).map(|x| Matrix::from_vec(n, m, unpack(q, x, n * m)).rank(field) as u8).collect()
}

/// All rank-one `n x m` matrices over `GF(q)`, as `u v^T` with `u` normalised
/// (first nonzero entry 1); each matrix appears once.
pub fn rank_one_matrices(field: &Field, n: usize, m: usize) -> Vec<Matrix> {
    let q = field.order() as u64;
    let nonzero = |len: usize| (1..q.pow(len as u32)).map(move |x| unpack(q, x, len));
    let mut out = Vec::new();
    for u in nonzero(n) {
        if u.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        for v in nonzero(m) {
            let mut mat = Matrix::zeros(n, m);
            for (i, &a) in u.iter().enumerate() {
                for (j, &b) in v.iter().enumerate() {
                    mat.set(i, j, field.mul(a, b));
                }
            }
            out.push(mat);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    fn brute_rank_counts(n: usize, m: usize, f: &Field) -> Vec<u64> {
        let q = f.order() as u64;
        let mut counts = vec![0u64; n.min(m) + 1];
        for x in 0..q.pow((n * m) as u32) {
            counts[Matrix::from_vec(n, m, unpack(q, x, n * m)).rank(f)] += 1;
        }
        counts
    }

    #[test]
    fn rank_counts_small() {
        assert_eq!(count_rank_matrices(2, 2, 1, 2).unwrap(), BigUint::from(9u32));
        assert_eq!(count_rank_matrices(3, 3, 1, 2).unwrap(), BigUint::from(49u32));
        assert_eq!(count_rank_matrices(4, 5, 0, 7).unwrap(), BigUint::one());
        assert!(count_rank_matrices(2, 3, 3, 2).is_err());
        let f = gf(2);
        assert_eq!(brute_rank_counts(2, 2, &f), vec![1, 9, 6]);
    }

    #[test]
    fn rank_one_formula() {
        for q in [2u64, 3, 4, 5] {
            for n in 1..4 {
                for m in n..5 {
                    let expected = (q.pow(n as u32) - 1) * (q.pow(m as u32) - 1) / (q - 1);
                    assert_eq!(count_rank_matrices(n, m, 1, q).unwrap(), BigUint::from(expected));
                }
            }
        }
    }

    #[test]
    fn rank_one_list_matches_count() {
        let f = gf(3);
        let list = rank_one_matrices(&f, 2, 3);
        assert_eq!(list.len() as u64, (9 - 1) * (27 - 1) / 2);
        assert!(list.iter().all(|m| m.rank(&f) == 1));
        let set: std::collections::HashSet<_> = list.iter().collect();
        assert_eq!(set.len(), list.len());
    }

    #[test]
    fn ball_volumes() {
        let f = gf(2);
        let p2 = MatrixProfile::uniform(&f, 2, 2, 2).unwrap();
        assert_eq!(ball_volume_exact(&p2, 0).unwrap(), BigUint::one());
        assert_eq!(ball_volume_exact(&p2, 2).unwrap(), BigUint::from(112u32));
        let p15 = MatrixProfile::uniform(&f, 15, 2, 2).unwrap();
        // 1 + 15·9 + 15·6 + C(15,2)·81
        assert_eq!(ball_volume_exact(&p15, 2).unwrap(), BigUint::from(1u32 + 135 + 90 + 105 * 81));
        assert_eq!(ball_volume_exact(&p15, 30).unwrap(), p15.ambient_size());
        assert!(ball_volume_exact(&p15, 31).is_err());
    }

    #[test]
    fn lower_bound_values() {
        let v = |t, s, q| ball_volume_lower_bound_r2(t, s, q).unwrap();
        assert_eq!(v(2, 2, 2), BigRational::from_integer(81.into()));
        assert_eq!(v(15, 2, 2), BigRational::from_integer(8505.into()));
        assert_eq!(v(5, 2, 2), BigRational::from_integer(810.into()));
        assert!(ball_volume_lower_bound_r2(1, 2, 2).is_err());
    }

    #[test]
    fn hamming_volumes() {
        assert_eq!(hamming_ball_volume(15, 0, 4).unwrap(), BigUint::one());
        assert_eq!(hamming_ball_volume(15, 2, 4).unwrap(), BigUint::from(991u32));
        assert_eq!(hamming_ball_volume(63, 2, 4).unwrap(), BigUint::from(17767u32));
    }

    #[test]
    fn weights_and_errors() {
        let f = gf(2);
        let p = MatrixProfile::uniform(&f, 2, 2, 2).unwrap();
        assert_eq!(p.weight(&p.zero_word()).unwrap(), 0);
        let id = SumRankWord::new(vec![Matrix::identity(2), Matrix::identity(2)]);
        assert_eq!(p.weight(&id).unwrap(), 4);
        let short = SumRankWord::new(vec![Matrix::identity(2)]);
        assert!(matches!(p.weight(&short), Err(SpaceError::BlockCount { .. })));
        let wide = SumRankWord::new(vec![Matrix::identity(2), Matrix::zeros(2, 3)]);
        assert!(matches!(p.distance(&id, &wide), Err(SpaceError::BlockShape { .. })));
        assert!(matches!(MatrixProfile::new(&f, vec![(3, 2)]), Err(SpaceError::BadBlock { .. })));
    }

    #[test]
    fn packed_arithmetic_matches_field() {
        let f = gf(9);
        for a in 0..81u64 {
            for b in 0..81u64 {
                let va = unpack(9, a, 2);
                let vb = unpack(9, b, 2);
                let sum: Vec<u32> = va.iter().zip(&vb).map(|(&x, &y)| f.add(x, y)).collect();
                assert_eq!(packed_add(3, a, b), pack(9, &sum));
            }
            assert_eq!(packed_add(3, a, packed_neg(3, a)), 0);
        }
    }
}
