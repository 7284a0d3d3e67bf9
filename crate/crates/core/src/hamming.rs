//! Linear and cyclic codes in the Hamming metric.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::arith;
use crate::gf::{poly, Field, GfError};
use crate::matrix::Matrix;
use crate::spaces::{pack, packed_add};
use crate::syndrome::{CosetLeaderTable, Metric};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("length {n} is not coprime to the field order {q}")]
    NotCoprime { n: u64, q: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("generator matrix has rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("{what} needs {needed} steps, budget is {budget}")]
    BudgetExceeded { what: &'static str, needed: String, budget: u64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0} does not extend {1}")]
    NotExtension(String, String),
}

/// Data attached to a cyclic code: `g(x) = Π_{i∈T} (x - β^i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicData {
    pub defining_set: Vec<u64>,
    pub coset_generators: Vec<u64>,
    /// Coefficients of `g(x)` in the code's field, little-endian.
    pub generator_poly: Vec<u32>,
    /// `GF(Q^ℓ)` containing the `n`-th roots of unity.
    pub splitting_field: Field,
    pub beta: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    generator: Matrix,
    parity: Matrix,
    cyclic: Option<CyclicData>,
    designed_distance: Option<usize>,
    label: String,
}

impl LinearCode {
    /// Code spanned by the rows of `generator`, which must be linearly independent.
    pub fn from_generator(field: &Field, generator: Matrix, label: impl Into<String>) -> Result<LinearCode, CodeError> {
        check_entries(field, &generator)?;
        let rank = generator.rank(field);
        if rank < generator.rows() {
            return Err(CodeError::RankDeficient { rank, rows: generator.rows() });
        }
        let parity = generator.nullspace(field);
        Ok(LinearCode {
            field: field.clone(),
            n: generator.cols(),
            generator,
            parity,
            cyclic: None,
            designed_distance: None,
            label: label.into(),
        })
    }

    /// Kernel of `parity`; redundant parity rows are dropped.
    pub fn from_parity(field: &Field, parity: &Matrix, label: impl Into<String>) -> Result<LinearCode, CodeError> {
        check_entries(field, parity)?;
        let generator = parity.nullspace(field);
        let parity = parity.row_basis(field);
        let n = parity.cols().max(generator.cols());
        Ok(LinearCode {
            field: field.clone(),
            n,
            generator: if generator.rows() == 0 { Matrix::zeros(0, n) } else { generator },
            parity: if parity.rows() == 0 { Matrix::zeros(0, n) } else { parity },
            cyclic: None,
            designed_distance: None,
            label: label.into(),
        })
    }

    pub fn with_designed_distance(mut self, d: usize) -> LinearCode {
        self.designed_distance = Some(d);
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> LinearCode {
        self.label = label.into();
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    pub fn codim(&self) -> usize {
        self.n - self.dim()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity(&self) -> &Matrix {
        &self.parity
    }

    pub fn cyclic(&self) -> Option<&CyclicData> {
        self.cyclic.as_ref()
    }

    pub fn designed_distance(&self) -> Option<usize> {
        self.designed_distance
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Number of codewords `Q^k`.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.q()).pow(self.dim() as u32)
    }

    pub fn encode(&self, message: &[u32]) -> Vec<u32> {
        self.generator.left_mul_vec(message, &self.field)
    }

    pub fn syndrome(&self, word: &[u32]) -> Vec<u32> {
        self.parity.mul_vec(word, &self.field)
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        word.len() == self.n && self.syndrome(word).iter().all(|&s| s == 0)
    }

    /// Packed syndrome of `a·e_j` for every column `j` and nonzero `a`.
    fn weight_one_syndromes(&self) -> Vec<u64> {
        let q = self.q();
        let mut out = Vec::with_capacity(self.n * (q as usize - 1));
        for j in 0..self.n {
            let col: Vec<u32> = (0..self.codim()).map(|i| self.parity.get(i, j)).collect();
            for a in 1..self.field.order() {
                let scaled: Vec<u32> = col.iter().map(|&c| self.field.mul(a, c)).collect();
                out.push(pack(q, &scaled));
            }
        }
        out
    }

    /// Exact covering radius from the coset-leader table.
    pub fn covering_radius(&self, syndrome_budget: u64) -> Result<(usize, CosetLeaderTable), CodeError> {
        let q = self.q();
        let needed = arith::checked_pow(q, self.codim() as u32).filter(|&s| s <= syndrome_budget);
        if needed.is_none() {
            return Err(CodeError::BudgetExceeded {
                what: "coset enumeration",
                needed: format!("{q}^{}", self.codim()),
                budget: syndrome_budget,
            });
        }
        let table = CosetLeaderTable::build(Metric::Hamming, self.field.p(), q, self.codim(), &self.weight_one_syndromes());
        let r = table.covering_radius().expect("weight-one vectors span the syndrome space");
        Ok((r, table))
    }

    /// The same generator matrix read over an extension field.
    pub fn extend_field(&self, target: &Field) -> Result<LinearCode, CodeError> {
        if !target.extends(&self.field) {
            return Err(CodeError::NotExtension(target.to_string(), self.field.to_string()));
        }
        Ok(LinearCode {
            field: target.clone(),
            n: self.n,
            generator: self.generator.clone(),
            parity: self.parity.clone(),
            cyclic: None,
            designed_distance: self.designed_distance,
            label: format!("{} over {}", self.label, target),
        })
    }

    pub fn min_distance(&self, method: DistanceMethod, budget: u64) -> DistanceReport {
        min_distance(self, method, budget)
    }
}

fn check_entries(field: &Field, m: &Matrix) -> Result<(), CodeError> {
    match m.data().iter().find(|&&x| !field.contains(x)) {
        Some(&x) => Err(GfError::BadElement(x, field.order()).into()),
        None => Ok(()),
    }
}

/// The zero code `{0}` of length `n`.
pub fn zero_code(field: &Field, n: usize) -> LinearCode {
    LinearCode::from_parity(field, &Matrix::identity(n), format!("zero[{n}]")).expect("identity parity")
}

/// `GF(Q)^n`.
pub fn full_code(field: &Field, n: usize) -> LinearCode {
    LinearCode::from_generator(field, Matrix::identity(n), format!("full[{n}]"))
        .expect("identity generator")
        .with_designed_distance(1)
}

/// `[n, n-1, 2]` single parity-check code.
pub fn single_parity_code(field: &Field, n: usize) -> Result<LinearCode, CodeError> {
    if n < 2 {
        return Err(CodeError::InvalidParams(format!("single parity code needs n >= 2, got {n}")));
    }
    let h = Matrix::from_rows(&[vec![1; n]]);
    Ok(LinearCode::from_parity(field, &h, format!("single-parity[{n}]"))?.with_designed_distance(2))
}

/// `[n, 1, n]` repetition code.
pub fn repetition_code(field: &Field, n: usize) -> Result<LinearCode, CodeError> {
    if n < 1 {
        return Err(CodeError::InvalidParams("repetition code needs n >= 1".into()));
    }
    Ok(LinearCode::from_generator(field, Matrix::from_rows(&[vec![1; n]]), format!("repetition[{n}]"))?
        .with_designed_distance(n))
}

/// Hamming code of redundancy `u`: columns are the projective points of
/// `GF(Q)^u`, each normalised so its first nonzero coordinate is 1, in
/// increasing packed order. Parameters `[(Q^u-1)/(Q-1), n-u, 3]`.
pub fn hamming_code(field: &Field, u: usize) -> Result<LinearCode, CodeError> {
    if u < 2 {
        return Err(CodeError::InvalidParams(format!("Hamming code needs redundancy u >= 2, got {u}")));
    }
    let q = field.order() as u64;
    let total = arith::checked_pow(q, u as u32)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| CodeError::InvalidParams(format!("Hamming code length too large for Q={q}, u={u}")))?;
    let cols: Vec<Vec<u32>> = (1..total)
        .map(|x| crate::spaces::unpack(q, x, u))
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    let mut h = Matrix::zeros(u, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            h.set(i, j, x);
        }
    }
    let n = cols.len();
    Ok(LinearCode::from_parity(field, &h, format!("hamming[{n},{}]", n - u))?.with_designed_distance(3))
}

/// Reed-Solomon code `[t, k, t-k+1]` evaluating polynomials of degree `< k` at
/// the field elements `0, 1, …, t-1` (by index); `t = Q+1` adds the point at infinity.
pub fn reed_solomon_code(field: &Field, t: usize, k: usize) -> Result<LinearCode, CodeError> {
    let q = field.order() as usize;
    if t == 0 || t > q + 1 || k == 0 || k > t {
        return Err(CodeError::InvalidParams(format!("Reed-Solomon needs 1 <= k <= t <= Q+1, got t={t}, k={k}, Q={q}")));
    }
    let mut g = Matrix::zeros(k, t);
    for j in 0..t.min(q) {
        let x = j as u32;
        for i in 0..k {
            g.set(i, j, field.pow(x, i as u64));
        }
    }
    if t == q + 1 {
        g.set(k - 1, q, 1);
    }
    Ok(LinearCode::from_generator(field, g, format!("reed-solomon[{t},{k}]"))?.with_designed_distance(t - k + 1))
}

/// The `[6,3,4]` hexacode over `GF(4)` with generator `[I | J + (ω-1)(J - I)]`.
pub fn hexacode(field: &Field) -> Result<LinearCode, CodeError> {
    if field.order() != 4 {
        return Err(CodeError::InvalidParams(format!("hexacode lives over GF(4), not {field}")));
    }
    let w = 2;
    let g = Matrix::from_rows(&[vec![1, 0, 0, 1, w, w], vec![0, 1, 0, w, 1, w], vec![0, 0, 1, w, w, 1]]);
    Ok(LinearCode::from_generator(field, g, "hexacode[6,3]")?.with_designed_distance(4))
}

/// Narrow-sense primitive binary BCH code of length `2^n - 1` and designed distance `2e+1`.
pub fn binary_bch_code(e: usize, n: u32) -> Result<LinearCode, CodeError> {
    if e == 0 || !(2..=12).contains(&n) {
        return Err(CodeError::InvalidParams(format!("binary BCH construction supports e >= 1, 2 <= n <= 12; got e={e}, n={n}")));
    }
    let len = (1u64 << n) - 1;
    let gens: Vec<u64> = (0..e as u64).map(|i| (2 * i + 1) % len).collect();
    let code = cyclic_code(len, &Field::prime(2)?, &gens)?;
    let label = format!("bch({e},{n})");
    Ok(code.with_label(label))
}

/// `{i, iQ, iQ², …}` mod `n`, sorted.
pub fn cyclotomic_coset(i: u64, q: u64, n: u64) -> Result<Vec<u64>, CodeError> {
    if n == 0 || arith::gcd(n, q) != 1 {
        return Err(CodeError::NotCoprime { n, q });
    }
    let start = i % n;
    let mut set = BTreeSet::new();
    let mut x = start;
    loop {
        set.insert(x);
        x = ((x as u128 * q as u128) % n as u128) as u64;
        if x == start {
            break;
        }
    }
    Ok(set.into_iter().collect())
}

/// All cyclotomic cosets mod `n`, ordered by smallest element.
pub fn cyclotomic_cosets(q: u64, n: u64) -> Result<Vec<Vec<u64>>, CodeError> {
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for i in 0..n {
        if !seen[i as usize] {
            let c = cyclotomic_coset(i, q, n)?;
            for &x in &c {
                seen[x as usize] = true;
            }
            out.push(c);
        }
    }
    Ok(out)
}

/// Cyclic code of length `n` over `field` whose defining set is the union of the
/// cyclotomic cosets of `generators`, with respect to `β = α^{(Q^ℓ-1)/n}` for the
/// designated primitive element `α` of `GF(Q^ℓ)`, `ℓ = ord_n(Q)`.
pub fn cyclic_code(n: u64, field: &Field, generators: &[u64]) -> Result<LinearCode, CodeError> {
    let q = field.order() as u64;
    if n < 2 || arith::gcd(n, q) != 1 {
        return Err(CodeError::NotCoprime { n, q });
    }
    let mut t = BTreeSet::new();
    for &g in generators {
        t.extend(cyclotomic_coset(g, q, n)?);
    }
    let defining_set: Vec<u64> = t.into_iter().collect();
    let ell = arith::multiplicative_order(q, n) as u32;
    let ext = Field::extension(field, ell, None)?;
    let cofactor = (ext.order() as u64 - 1) / n;
    let beta = ext.pow(ext.generator(), cofactor);
    if ext.element_order(beta) != n {
        return Err(CodeError::Precondition(format!("no primitive {n}-th root of unity in {ext}")));
    }
    let mut g = vec![1u32];
    for &i in &defining_set {
        let root = ext.pow(beta, i);
        g = poly::mul(&ext, &g, &[ext.neg(root), 1]);
    }
    if let Some(&bad) = g.iter().find(|&&c| !field.contains(c)) {
        return Err(CodeError::Precondition(format!("g(x) coefficient {bad} lies outside {field}")));
    }
    let mut xn1 = vec![0u32; n as usize + 1];
    xn1[0] = field.neg(1);
    xn1[n as usize] = 1;
    if !poly::rem(field, &xn1, &g).is_empty() {
        return Err(CodeError::Precondition("g(x) does not divide x^n - 1".into()));
    }
    let nn = n as usize;
    let k = nn - defining_set.len();
    let code = if k == 0 {
        zero_code(field, nn)
    } else {
        let mut gm = Matrix::zeros(k, nn);
        for r in 0..k {
            for (j, &c) in g.iter().enumerate() {
                gm.set(r, r + j, c);
            }
        }
        LinearCode::from_generator(field, gm, "")?
    };
    let designed = bch_bound(&defining_set, n);
    let label = format!("cyclic[{n},{k}] T-gen {generators:?}");
    Ok(LinearCode {
        cyclic: Some(CyclicData {
            defining_set,
            coset_generators: generators.to_vec(),
            generator_poly: g,
            splitting_field: ext,
            beta,
        }),
        designed_distance: Some(designed),
        label,
        ..code
    })
}

/// Longest run of cyclically consecutive residues in `t` (mod `n`), with its start.
pub fn longest_consecutive_run(t: &[u64], n: u64) -> (usize, u64) {
    let set: BTreeSet<u64> = t.iter().map(|&x| x % n).collect();
    if set.len() as u64 == n {
        return (n as usize, 0);
    }
    let mut best = (0usize, 0u64);
    for &s in &set {
        if set.contains(&((s + n - 1) % n)) {
            continue;
        }
        let mut len = 0u64;
        while set.contains(&((s + len) % n)) {
            len += 1;
        }
        if len as usize > best.0 {
            best = (len as usize, s);
        }
    }
    best
}

/// BCH bound: one more than the longest consecutive run in the defining set.
pub fn bch_bound(t: &[u64], n: u64) -> usize {
    longest_consecutive_run(t, n).0 + 1
}

/// Hartmann-Tzeng bound `d >= δ + s` for `A` a run of `δ-1` consecutive
/// residues, `B = {jb mod n : 0 <= j <= s}`, `gcd(b, n) < δ` and `A + B ⊆ T`.
pub fn hartmann_tzeng_bound(t: &[u64], n: u64, a: &[u64], b: u64, s: u64) -> Result<usize, CodeError> {
    let tset: BTreeSet<u64> = t.iter().map(|&x| x % n).collect();
    if a.is_empty() {
        return Err(CodeError::Precondition("A is empty".into()));
    }
    let a0 = a[0] % n;
    let expected: Vec<u64> = (0..a.len() as u64).map(|j| (a0 + j) % n).collect();
    let given: Vec<u64> = a.iter().map(|&x| x % n).collect();
    if given != expected {
        return Err(CodeError::Precondition(format!("A = {a:?} is not a run of consecutive residues mod {n}")));
    }
    let delta = a.len() as u64 + 1;
    let g = arith::gcd(b, n);
    if g >= delta {
        return Err(CodeError::Precondition(format!("gcd(b, n) = {g} is not below δ = {delta}")));
    }
    let bset: Vec<u64> = (0..=s).map(|j| (j * b) % n).collect();
    let missing: Vec<u64> = given
        .iter()
        .cartesian_product(&bset)
        .map(|(x, y)| (x + y) % n)
        .filter(|z| !tset.contains(z))
        .collect();
    if !missing.is_empty() {
        return Err(CodeError::Precondition(format!("A + B = {given:?} + {bset:?} misses {missing:?} in T")));
    }
    Ok((delta + s) as usize)
}

/// Covering-radius interval `[2e-1, 2e]` for binary BCH codes of length `2^n - 1`,
/// valid when `2^n >= (2e-1)^{4e+2}`; `None` when that hypothesis fails.
pub fn bch_covering_radius_interval(e: u64, n: u64) -> Option<(u64, u64)> {
    if e == 0 {
        return None;
    }
    let lhs = BigUint::from(2u32).pow(n as u32);
    let rhs = BigUint::from(2 * e - 1).pow((4 * e + 2) as u32);
    (lhs >= rhs).then_some((2 * e - 1, 2 * e))
}

/// First code `[I_k | A]` in lexicographic order of `A` with minimum distance at
/// least `min_d` and covering radius at most `max_r`, examining at most `limit` candidates.
pub fn search_systematic(
    field: &Field,
    n: usize,
    k: usize,
    min_d: usize,
    max_r: usize,
    limit: u64,
) -> Result<Option<LinearCode>, CodeError> {
    if k == 0 || k >= n {
        return Err(CodeError::InvalidParams(format!("systematic search needs 0 < k < n, got n={n}, k={k}")));
    }
    let q = field.order() as u64;
    let cells = (k * (n - k)) as u32;
    let total = arith::checked_pow(q, cells).unwrap_or(u64::MAX).min(limit);
    for code in 0..total {
        let a = crate::spaces::unpack(q, code, k * (n - k));
        let mut g = Matrix::identity(k).hstack(&Matrix::zeros(k, n - k));
        for i in 0..k {
            for j in 0..n - k {
                g.set(i, k + j, a[i * (n - k) + j]);
            }
        }
        let c = LinearCode::from_generator(field, g, format!("systematic[{n},{k}]#{code}"))?;
        if min_distance(&c, DistanceMethod::Enumerate, u64::MAX).lower < min_d {
            continue;
        }
        match c.covering_radius(u64::MAX) {
            Ok((r, _)) if r <= max_r => return Ok(Some(c.with_designed_distance(min_d))),
            _ => continue,
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceMethod {
    /// Minimum weight over all `Q^k` codewords.
    Enumerate,
    /// Smallest linearly dependent set of parity-check columns, up to size 4.
    SupportTest,
    /// Enumerate within budget, else support test.
    Auto,
}

/// Minimum distance, exact when `lower == upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub lower: usize,
    /// `None` only for the zero code.
    pub upper: Option<usize>,
    pub witness: Option<Vec<u32>>,
    pub method: DistanceMethod,
}

impl DistanceReport {
    pub fn exact(&self) -> Option<usize> {
        match self.upper {
            Some(u) if u == self.lower => Some(u),
            _ => None,
        }
    }
}

/// Largest set size examined by the support test.
pub const SUPPORT_TEST_MAX: usize = 4;

pub fn min_distance(code: &LinearCode, method: DistanceMethod, budget: u64) -> DistanceReport {
    if code.dim() == 0 {
        return DistanceReport { lower: code.len() + 1, upper: None, witness: None, method };
    }
    let fits = arith::checked_pow(code.q(), code.dim() as u32).is_some_and(|s| s <= budget);
    match method {
        DistanceMethod::Enumerate if fits => enumerate_distance(code),
        DistanceMethod::Auto if fits => enumerate_distance(code),
        DistanceMethod::Enumerate => {
            let mut r = fallback_interval(code, 1);
            r.method = DistanceMethod::Enumerate;
            r
        }
        _ => support_test(code, SUPPORT_TEST_MAX, budget),
    }
}

fn fallback_interval(code: &LinearCode, lower: usize) -> DistanceReport {
    let (upper, witness) = lightest_generator_row(code);
    DistanceReport { lower: lower.min(upper), upper: Some(upper), witness: Some(witness), method: DistanceMethod::Auto }
}

fn lightest_generator_row(code: &LinearCode) -> (usize, Vec<u32>) {
    code.generator
        .to_rows()
        .into_iter()
        .map(|r| (r.iter().filter(|&&x| x != 0).count(), r))
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .expect("nonzero dimension")
}

fn enumerate_distance(code: &LinearCode) -> DistanceReport {
    let f = &code.field;
    let q = code.q();
    let k = code.dim();
    let n = code.len();
    let rows = code.generator.to_rows();
    // scaled[i][a] = a · row_i
    let scaled: Vec<Vec<Vec<u32>>> = rows
        .iter()
        .map(|r| (0..q as u32).map(|a| r.iter().map(|&x| f.mul(a, x)).collect()).collect())
        .collect();
    let top = k - 1;
    // Partition by the most significant message digit; each part scans in odometer order.
    let best = (0..q as u32)
        .into_par_iter()
        .map(|lead| {
            let mut digits = vec![0u32; k];
            digits[top] = lead;
            let mut word = scaled[top][lead as usize].clone();
            let mut best: Option<(usize, Vec<u32>)> = None;
            loop {
                if digits.iter().any(|&d| d != 0) {
                    let w = word.iter().filter(|&&x| x != 0).count();
                    if best.as_ref().is_none_or(|b| w < b.0) {
                        best = Some((w, word.clone()));
                    }
                }
                let mut i = 0;
                loop {
                    if i == top {
                        return best;
                    }
                    let old = digits[i];
                    let new = (old + 1) % q as u32;
                    digits[i] = new;
                    for j in 0..n {
                        word[j] = f.add(f.sub(word[j], scaled[i][old as usize][j]), scaled[i][new as usize][j]);
                    }
                    if new != 0 {
                        break;
                    }
                    i += 1;
                }
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("a nonzero codeword exists");
    DistanceReport { lower: best.0, upper: Some(best.0), witness: Some(best.1), method: DistanceMethod::Enumerate }
}

/// `d` is the size of the smallest linearly dependent set of parity-check columns.
fn support_test(code: &LinearCode, max_w: usize, budget: u64) -> DistanceReport {
    let f = &code.field;
    let n = code.len();
    let h = &code.parity;
    if code.codim() == 0 {
        return DistanceReport { lower: 1, upper: Some(1), witness: Some(unit(n, 0)), method: DistanceMethod::SupportTest };
    }
    for w in 1..=max_w.min(n) {
        let subsets = arith::binomial(n as u64, w as u64);
        if subsets > BigUint::from(budget) {
            let mut r = fallback_interval(code, w);
            r.method = DistanceMethod::SupportTest;
            return r;
        }
        let found = (0..n)
            .into_par_iter()
            .find_map_first(|first| {
                (first + 1..n).combinations(w - 1).find_map(|rest| {
                    let mut cols = vec![first];
                    cols.extend(rest);
                    let sub = h.select_columns(&cols);
                    if sub.rank(f) == w {
                        return None;
                    }
                    let kernel = sub.nullspace(f);
                    let mut word = vec![0u32; n];
                    for (j, &c) in cols.iter().enumerate() {
                        word[c] = kernel.get(0, j);
                    }
                    Some(word)
                })
            });
        if let Some(word) = found {
            debug_assert!(code.contains(&word));
            return DistanceReport { lower: w, upper: Some(w), witness: Some(word), method: DistanceMethod::SupportTest };
        }
    }
    let mut r = fallback_interval(code, max_w.min(n) + 1);
    r.method = DistanceMethod::SupportTest;
    r
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[i] = 1;
    v
}

/// Packs a Hamming-metric syndrome for use with [`CosetLeaderTable`].
pub fn packed_syndrome(code: &LinearCode, word: &[u32]) -> u64 {
    pack(code.q(), &code.syndrome(word))
}

/// Sum of packed syndromes, matching coordinate-wise field addition.
pub fn add_syndromes(code: &LinearCode, a: u64, b: u64) -> u64 {
    packed_add(code.field.p(), a, b)
}
