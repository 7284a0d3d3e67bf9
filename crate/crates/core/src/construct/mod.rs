//! Sum-rank codes built from Hamming-metric ingredient codes.
//!
//! Every code carries its generator and parity-check matrices over the base
//! field `GF(q)` (columns indexed by the flattened word: blocks in order, each
//! row-major) alongside the structured description used for encoding.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::gf::{Basis, Field, GfError};
use crate::hamming::{CodeError, LinearCode};
use crate::matrix::Matrix;
use crate::spaces::{unpack, MatrixProfile, SpaceError, SumRankWord};

pub mod recipes;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("ingredient mismatch: {0}")]
    Mismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("encoding map has rank {rank}, expected {expected}")]
    NotInjective { rank: usize, expected: usize },
    #[error("message does not fit the code: {0}")]
    BadMessage(String),
    #[error("code has {size} codewords, budget is {budget}")]
    BudgetExceeded { size: String, budget: u64 },
}

/// How a code was assembled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// Block `r`, row `i` holds the coordinates of `c_{i,r}`.
    Covering { ingredients: Vec<LinearCode>, basis: Basis },
    /// Block `r` is the matrix of `x ↦ Σ_j c_{j,r} φ(x^{q^{j-1}})` on `GF(q^n)`.
    Linearized { ingredients: Vec<LinearCode>, row_basis: Basis, col_basis: Basis, phi: Vec<u32> },
    /// `base ⊕ (GF(q)^{m×m})^extra`.
    Extended { base: Box<SumRankCode>, extra: usize },
    /// `{(c_1 | c_1 + c_2)}`.
    Plotkin { first: Box<SumRankCode>, second: Box<SumRankCode> },
    /// A Hamming-metric code seen as `1×1` blocks over its own field.
    HammingMetric { code: LinearCode },
    Explicit,
}

impl Construction {
    pub fn tag(&self) -> &'static str {
        match self {
            Construction::Covering { .. } => "covering",
            Construction::Linearized { .. } => "linearized",
            Construction::Extended { .. } => "extended",
            Construction::Plotkin { .. } => "plotkin",
            Construction::HammingMetric { .. } => "hamming",
            Construction::Explicit => "explicit",
        }
    }
}

/// Named recipe and parameters a code was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Origin {
    pub recipe: String,
    pub params: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumRankCode {
    profile: MatrixProfile,
    construction: Construction,
    generator: Matrix,
    parity: Matrix,
    label: String,
    origin: Option<Origin>,
    designed_distance: Option<usize>,
}

impl SumRankCode {
    fn assemble(profile: MatrixProfile, construction: Construction, rows: Vec<Vec<u32>>, label: String) -> Result<SumRankCode, ConstructError> {
        let amb = profile.ambient_dim();
        let f = profile.field().clone();
        let generator = if rows.is_empty() { Matrix::zeros(0, amb) } else { Matrix::from_rows(&rows) };
        let rank = generator.rank(&f);
        if rank < generator.rows() {
            return Err(ConstructError::NotInjective { rank, expected: generator.rows() });
        }
        let parity = if generator.rows() == 0 { Matrix::identity(amb) } else { generator.nullspace(&f) };
        let parity = if parity.rows() == 0 { Matrix::zeros(0, amb) } else { parity };
        Ok(SumRankCode { profile, construction, generator, parity, label, origin: None, designed_distance: None })
    }

    /// A code given directly by a generator matrix over the profile's field.
    pub fn explicit(profile: &MatrixProfile, generator: &Matrix, label: impl Into<String>) -> Result<SumRankCode, ConstructError> {
        if generator.rows() > 0 && generator.cols() != profile.ambient_dim() {
            return Err(ConstructError::Mismatch(format!(
                "generator has {} columns, profile has ambient dimension {}",
                generator.cols(),
                profile.ambient_dim()
            )));
        }
        if let Some(&bad) = generator.data().iter().find(|&&x| !profile.field().contains(x)) {
            return Err(SpaceError::BadEntry(bad).into());
        }
        let rows = generator.row_basis(profile.field()).to_rows();
        SumRankCode::assemble(profile.clone(), Construction::Explicit, rows, label.into())
    }

    /// A Hamming-metric code as `t` blocks of `1×1` over its own field.
    pub fn hamming_metric(code: &LinearCode) -> Result<SumRankCode, ConstructError> {
        let profile = MatrixProfile::uniform(code.field(), code.len(), 1, 1)?;
        let rows = code.generator().to_rows();
        let mut out = SumRankCode::assemble(profile, Construction::HammingMetric { code: code.clone() }, rows, code.label().to_string())?;
        out.designed_distance = code.designed_distance();
        Ok(out)
    }

    pub fn with_origin(mut self, recipe: &str, params: BTreeMap<String, u64>) -> SumRankCode {
        self.origin = Some(Origin { recipe: recipe.to_string(), params });
        self
    }

    /// Distance the construction is designed for; certification never relies on it.
    pub fn with_designed_distance(mut self, d: usize) -> SumRankCode {
        self.designed_distance = Some(d);
        self
    }

    pub fn designed_distance(&self) -> Option<usize> {
        self.designed_distance
    }

    pub fn with_label(mut self, label: impl Into<String>) -> SumRankCode {
        self.label = label.into();
        self
    }

    pub fn profile(&self) -> &MatrixProfile {
        &self.profile
    }

    pub fn field(&self) -> &Field {
        self.profile.field()
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn origin(&self) -> Option<&Origin> {
        self.origin.as_ref()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Rows span the code over `GF(q)`.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity(&self) -> &Matrix {
        &self.parity
    }

    /// Dimension over `GF(q)`.
    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    pub fn codim(&self) -> usize {
        self.profile.ambient_dim() - self.dim()
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.profile.q()).pow(self.dim() as u32)
    }

    pub fn ingredients(&self) -> Option<&[LinearCode]> {
        match &self.construction {
            Construction::Covering { ingredients, .. } | Construction::Linearized { ingredients, .. } => Some(ingredients),
            _ => None,
        }
    }

    pub fn contains(&self, word: &SumRankWord) -> bool {
        let flat = word.flatten();
        flat.len() == self.profile.ambient_dim()
            && self.parity.mul_vec(&flat, self.field()).iter().all(|&s| s == 0)
    }

    /// Encodes a coefficient vector over `GF(q)` against [`SumRankCode::generator`].
    pub fn encode_flat(&self, coeffs: &[u32]) -> SumRankWord {
        let flat = self.generator.left_mul_vec(coeffs, self.field());
        self.profile.word_from_flat(&flat).expect("generator width matches profile")
    }

    /// Field and length of each message part accepted by [`SumRankCode::encode`].
    pub fn message_shape(&self) -> Vec<(Field, usize)> {
        match &self.construction {
            Construction::Covering { ingredients, .. } | Construction::Linearized { ingredients, .. } => {
                ingredients.iter().map(|c| (c.field().clone(), c.dim())).collect()
            }
            Construction::Extended { base, extra } => {
                let m = self.profile.blocks()[0].1;
                let mut shape = base.message_shape();
                shape.push((self.field().clone(), extra * m * m));
                shape
            }
            Construction::Plotkin { first, second } => {
                let mut shape = first.message_shape();
                shape.extend(second.message_shape());
                shape
            }
            Construction::HammingMetric { code } => vec![(code.field().clone(), code.dim())],
            Construction::Explicit => vec![(self.field().clone(), self.dim())],
        }
    }

    /// Encodes one message per ingredient (see [`SumRankCode::message_shape`]).
    pub fn encode(&self, message: &[Vec<u32>]) -> Result<SumRankWord, ConstructError> {
        let shape = self.message_shape();
        if message.len() != shape.len() {
            return Err(ConstructError::BadMessage(format!("expected {} parts, got {}", shape.len(), message.len())));
        }
        for (i, (part, (f, len))) in message.iter().zip(&shape).enumerate() {
            if part.len() != *len || part.iter().any(|&x| !f.contains(x)) {
                return Err(ConstructError::BadMessage(format!("part {i} must be {len} elements of {f}")));
            }
        }
        Ok(self.encode_unchecked(message))
    }

    fn encode_unchecked(&self, message: &[Vec<u32>]) -> SumRankWord {
        match &self.construction {
            Construction::Covering { ingredients, basis } => {
                let cws: Vec<Vec<u32>> = ingredients.iter().zip(message).map(|(c, m)| c.encode(m)).collect();
                covering_word(&self.profile, basis, &cws)
            }
            Construction::Linearized { ingredients, row_basis, col_basis, phi } => {
                let cws: Vec<Vec<u32>> = ingredients.iter().zip(message).map(|(c, m)| c.encode(m)).collect();
                linearized_word(&self.profile, ingredients[0].field(), row_basis, col_basis, phi, &cws)
            }
            Construction::Extended { base, .. } => {
                let k = base.message_shape().len();
                let mut word = base.encode_unchecked(&message[..k]);
                let (n, m) = self.profile.blocks()[0];
                for chunk in message[k].chunks(n * m) {
                    word.blocks.push(Matrix::from_vec(n, m, chunk.to_vec()));
                }
                word
            }
            Construction::Plotkin { first, second } => {
                let k = first.message_shape().len();
                let c1 = first.encode_unchecked(&message[..k]);
                let c2 = second.encode_unchecked(&message[k..]);
                let f = self.field();
                let mut blocks = c1.blocks.clone();
                blocks.extend(c1.blocks.iter().zip(&c2.blocks).map(|(a, b)| a.add(b, f)));
                SumRankWord::new(blocks)
            }
            Construction::HammingMetric { code } => {
                let c = code.encode(&message[0]);
                SumRankWord::new(c.into_iter().map(|x| Matrix::from_vec(1, 1, vec![x])).collect())
            }
            Construction::Explicit => self.encode_flat(&message[0]),
        }
    }

    /// All codewords in generator-coefficient order; fails if `q^k > budget`.
    pub fn codewords(&self, budget: u64) -> Result<impl Iterator<Item = SumRankWord> + '_, ConstructError> {
        let q = self.profile.q();
        let total = q
            .checked_pow(self.dim() as u32)
            .filter(|&s| s <= budget)
            .ok_or_else(|| ConstructError::BudgetExceeded { size: format!("{q}^{}", self.dim()), budget })?;
        let k = self.dim();
        Ok((0..total).map(move |x| self.encode_flat(&unpack(q, x, k))))
    }
}

fn check_ingredients(codes: &[LinearCode]) -> Result<(Field, usize), ConstructError> {
    let first = codes.first().ok_or_else(|| ConstructError::Mismatch("no ingredient codes".into()))?;
    let field = first.field().clone();
    let t = first.len();
    for (i, c) in codes.iter().enumerate() {
        if c.field() != &field {
            return Err(ConstructError::Mismatch(format!("ingredient {i} is over {}, expected {field}", c.field())));
        }
        if c.len() != t {
            return Err(ConstructError::Mismatch(format!("ingredient {i} has length {}, expected {t}", c.len())));
        }
    }
    if field.is_prime_field() {
        return Err(ConstructError::Mismatch(format!("ingredients must lie over an extension field, got {field}")));
    }
    Ok((field, t))
}

fn covering_word(profile: &MatrixProfile, basis: &Basis, codewords: &[Vec<u32>]) -> SumRankWord {
    let m = codewords.len();
    let t = profile.t();
    let blocks = (0..t)
        .map(|r| {
            let mut b = Matrix::zeros(m, m);
            for (i, c) in codewords.iter().enumerate() {
                for (j, x) in basis.coords(c[r]).into_iter().enumerate() {
                    b.set(i, j, x);
                }
            }
            b
        })
        .collect();
    SumRankWord::new(blocks)
}

/// Images of the row basis under `x ↦ φ(x^{q^j})`, indexed `[j][a]`.
fn frobenius_images(row_basis: &Basis, phi: &[u32], big: &Field) -> Vec<Vec<u32>> {
    let small = row_basis.field();
    let n = row_basis.len();
    (0..n)
        .map(|j| {
            row_basis
                .elements()
                .iter()
                .map(|&b| apply_phi(small, big, phi, small.frobenius(b, j as u32)))
                .collect()
        })
        .collect()
}

/// `φ(y) = Σ_k coords(y)_k φ(α^k)` for the power basis of the small field.
fn apply_phi(small: &Field, big: &Field, phi: &[u32], y: u32) -> u32 {
    small.coords(y).iter().zip(phi).fold(0, |acc, (&c, &img)| big.add(acc, big.mul(c, img)))
}

fn linearized_word(
    profile: &MatrixProfile,
    big: &Field,
    row_basis: &Basis,
    col_basis: &Basis,
    phi: &[u32],
    codewords: &[Vec<u32>],
) -> SumRankWord {
    let images = frobenius_images(row_basis, phi, big);
    let n = row_basis.len();
    let m = col_basis.len();
    let blocks = (0..profile.t())
        .map(|r| {
            let mut b = Matrix::zeros(n, m);
            for a in 0..n {
                let value = codewords
                    .iter()
                    .enumerate()
                    .fold(0, |acc, (j, c)| big.add(acc, big.mul(c[r], images[j][a])));
                for (col, x) in col_basis.coords(value).into_iter().enumerate() {
                    b.set(a, col, x);
                }
            }
            b
        })
        .collect();
    SumRankWord::new(blocks)
}

/// Generator rows for a construction that is linear in each ingredient:
/// encode `β·g` for every generator row `g` and power-basis element `β`.
fn ingredient_rows(codes: &[LinearCode], word_of: impl Fn(&[Vec<u32>]) -> SumRankWord) -> Vec<Vec<u32>> {
    let field = codes[0].field();
    let t = codes[0].len();
    let q = field.sub_order();
    let mut rows = Vec::new();
    for (i, code) in codes.iter().enumerate() {
        for g in code.generator().to_rows() {
            for j in 0..field.degree() {
                let beta = q.pow(j);
                let mut cws = vec![vec![0u32; t]; codes.len()];
                cws[i] = g.iter().map(|&x| field.mul(beta, x)).collect();
                rows.push(word_of(&cws).flatten());
            }
        }
    }
    rows
}

/// Row-matrix construction from `m` codes over `GF(q^m)` of common length `t`;
/// profile `t` blocks of `m×m` over `GF(q)`. `basis` defaults to the power basis.
pub fn sr_covering(codes: &[LinearCode], basis: Option<Basis>) -> Result<SumRankCode, ConstructError> {
    let (field, t) = check_ingredients(codes)?;
    let m = field.degree() as usize;
    if codes.len() != m {
        return Err(ConstructError::Mismatch(format!("need {m} ingredient codes over {field}, got {}", codes.len())));
    }
    let basis = basis.unwrap_or_else(|| Basis::power(&field));
    if basis.field() != &field {
        return Err(ConstructError::Mismatch("basis belongs to a different field".into()));
    }
    let base = field.subfield().expect("extension field").clone();
    let profile = MatrixProfile::uniform(&base, t, m, m)?;
    let rows = ingredient_rows(codes, |cws| covering_word(&profile, &basis, cws));
    let label = format!("covering({})", codes.iter().map(|c| c.label()).collect::<Vec<_>>().join(", "));
    SumRankCode::assemble(profile, Construction::Covering { ingredients: codes.to_vec(), basis }, rows, label)
}

/// Options for [`sr_linearized`]; `None` fields take the defaults (power bases,
/// coordinate embedding for `φ`).
#[derive(Debug, Clone, Default)]
pub struct LinearizedOptions {
    pub row_basis: Option<Basis>,
    pub col_basis: Option<Basis>,
    /// Images in `GF(q^m)` of the power basis `1, γ, …, γ^{n-1}` of `GF(q^n)`.
    pub phi: Option<Vec<u32>>,
}

/// Linearized-polynomial construction from `n <= m` codes over `GF(q^m)`;
/// profile `t` blocks of `n×m` over `GF(q)`.
pub fn sr_linearized(codes: &[LinearCode], options: LinearizedOptions) -> Result<SumRankCode, ConstructError> {
    let (big, t) = check_ingredients(codes)?;
    let m = big.degree() as usize;
    let n = codes.len();
    if n > m {
        return Err(ConstructError::InvalidParams(format!("{n} ingredients exceed the extension degree {m}")));
    }
    let base = big.subfield().expect("extension field").clone();
    let small = if n == m { big.clone() } else { Field::extension(&base, n as u32, None)? };
    let row_basis = options.row_basis.unwrap_or_else(|| Basis::power(&small));
    let col_basis = options.col_basis.unwrap_or_else(|| Basis::power(&big));
    if row_basis.field() != &small || col_basis.field() != &big {
        return Err(ConstructError::Mismatch("basis belongs to a different field".into()));
    }
    let q = base.order();
    let phi = options.phi.unwrap_or_else(|| (0..n as u32).map(|k| q.pow(k)).collect());
    if phi.len() != n || phi.iter().any(|&x| !big.contains(x)) {
        return Err(ConstructError::InvalidParams(format!("φ needs {n} images in {big}")));
    }
    let phi_matrix = Matrix::from_rows(&phi.iter().map(|&x| big.coords(x)).collect::<Vec<_>>());
    let phi_rank = phi_matrix.rank(&base);
    if phi_rank < n {
        return Err(ConstructError::NotInjective { rank: phi_rank, expected: n });
    }
    let profile = MatrixProfile::uniform(&base, t, n, m)?;
    let rows = ingredient_rows(codes, |cws| linearized_word(&profile, &big, &row_basis, &col_basis, &phi, cws));
    let label = format!("linearized({})", codes.iter().map(|c| c.label()).collect::<Vec<_>>().join(", "));
    SumRankCode::assemble(profile, Construction::Linearized { ingredients: codes.to_vec(), row_basis, col_basis, phi }, rows, label)
}

/// Appends `extra` unrestricted `m×m` blocks.
pub fn extend_full_blocks(code: &SumRankCode, extra: usize) -> Result<SumRankCode, ConstructError> {
    if extra == 0 {
        return Err(ConstructError::InvalidParams("extra block count must be positive".into()));
    }
    let (n, m) = code
        .profile
        .uniform_shape()
        .filter(|(n, m)| n == m)
        .ok_or_else(|| ConstructError::Mismatch("full-block extension needs a homogeneous square profile".into()))?;
    let profile = MatrixProfile::new(code.field(), [code.profile.blocks(), &vec![(n, m); extra][..]].concat())?;
    let gen = code.generator.direct_sum(&Matrix::identity(extra * n * m));
    let label = format!("{} + {extra} full blocks", code.label);
    SumRankCode::assemble(
        profile,
        Construction::Extended { base: Box::new(code.clone()), extra },
        gen.to_rows(),
        label,
    )
}

/// Plotkin sum `{(c_1 | c_1 + c_2)}` of two codes on the same profile.
pub fn plotkin(first: &SumRankCode, second: &SumRankCode) -> Result<SumRankCode, ConstructError> {
    if first.profile != second.profile {
        return Err(ConstructError::Mismatch("Plotkin sum needs identical profiles".into()));
    }
    let g1 = &first.generator;
    let g2 = &second.generator;
    let top = g1.hstack(g1);
    let bottom = Matrix::zeros(g2.rows(), g1.cols()).hstack(g2);
    let gen = top.vstack(&bottom);
    let profile = first.profile.concat(&second.profile);
    let label = format!("plotkin({}, {})", first.label, second.label);
    SumRankCode::assemble(
        profile,
        Construction::Plotkin { first: Box::new(first.clone()), second: Box::new(second.clone()) },
        gen.to_rows(),
        label,
    )
}
