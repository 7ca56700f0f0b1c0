//! Dense rational matrices between direct sums of graded pieces `R_d`.
//!
//! Rows and columns are concatenations of labeled blocks, one block per
//! simplex or summand, each indexed by a [`MonomialBasis`].

use std::fmt;

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::mesh::Rational;
use crate::poly::{monomial_count, HomogeneousForm, MonomialBasis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub label: String,
    pub degree: usize,
    pub offset: usize,
}

impl Block {
    pub fn len(&self) -> usize {
        monomial_count(self.degree)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn basis(&self) -> MonomialBasis {
        MonomialBasis::new(self.degree)
    }
}

/// Ordered, contiguous blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockLayout {
    blocks: Vec<Block>,
    len: usize,
}

impl BlockLayout {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a block and returns its index.
    pub fn push(&mut self, label: impl Into<String>, degree: usize) -> usize {
        let block = Block { label: label.into(), degree, offset: self.len };
        self.len += block.len();
        self.blocks.push(block);
        self.blocks.len() - 1
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, index: usize) -> &Block {
        &self.blocks[index]
    }

    pub fn find(&self, label: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.label == label)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    rows: BlockLayout,
    cols: BlockLayout,
    entries: Vec<Rational>,
}

impl GradedMatrix {
    pub fn zeros(rows: BlockLayout, cols: BlockLayout) -> Self {
        let entries = vec![Rational::zero(); rows.len() * cols.len()];
        Self { rows, cols, entries }
    }

    /// An unlabeled matrix, one block per side, for ad-hoc data. Rows must
    /// all have the same length.
    pub fn from_rows(data: Vec<Vec<Rational>>) -> Self {
        let nrows = data.len();
        let ncols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == ncols), "ragged rows");
        let entries = data.into_iter().flatten().collect();
        Self { rows: flat_layout(nrows), cols: flat_layout(ncols), entries }
    }

    pub fn from_i64_rows(data: &[Vec<i64>]) -> Self {
        Self::from_rows(
            data.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_layout(&self) -> &BlockLayout {
        &self.rows
    }

    pub fn col_layout(&self) -> &BlockLayout {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.ncols() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        let n = self.ncols();
        self.entries[i * n + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        let n = self.ncols();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.nrows()).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        let (m, n) = (self.nrows(), self.ncols());
        let mut entries = Vec::with_capacity(m * n);
        for j in 0..n {
            for i in 0..m {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { rows: self.cols.clone(), cols: self.rows.clone(), entries }
    }

    /// Writes `scale · f · m` into column block `col` for every monomial `m`
    /// of that block, landing in row block `row`. Requires
    /// `deg(row) = deg(col) + deg(f)`.
    pub fn place_product(&mut self, row: usize, col: usize, f: &HomogeneousForm, scale: &Rational) {
        let rb = self.rows.block(row).clone();
        let cb = self.cols.block(col).clone();
        assert_eq!(rb.degree, cb.degree + f.degree(), "block degrees do not match");
        let row_basis = rb.basis();
        let terms: Vec<([usize; 3], Rational)> = f.terms().map(|(e, c)| (e, c * scale)).collect();
        let ncols = self.ncols();
        for (jj, [i, j, _]) in cb.basis().exponents().enumerate() {
            for ([a, b, _], c) in &terms {
                let ii = row_basis.index_of(i + a, j + b);
                self.entries[(rb.offset + ii) * ncols + cb.offset + jj] += c;
            }
        }
    }

    /// Writes `scale · identity` between two blocks of equal degree.
    pub fn place_identity(&mut self, row: usize, col: usize, scale: &Rational) {
        self.place_product(row, col, &HomogeneousForm::one(), scale);
    }
}

fn flat_layout(n: usize) -> BlockLayout {
    BlockLayout { blocks: Vec::new(), len: n }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(crate::mesh::format_rational).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Matrix of `p ↦ f·p` from `R_k` to `R_(k + deg f)`.
pub fn multiplication_matrix(f: &HomogeneousForm, k: usize) -> Result<GradedMatrix, AlgebraError> {
    if f.is_zero() {
        return Err(AlgebraError::ZeroForm);
    }
    let mut rows = BlockLayout::new();
    rows.push("target", k + f.degree());
    let mut cols = BlockLayout::new();
    cols.push("source", k);
    let mut m = GradedMatrix::zeros(rows, cols);
    m.place_product(0, 0, f, &Rational::one());
    Ok(m)
}
