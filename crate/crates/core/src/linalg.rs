//! Dense matrices over a [`FieldDescriptor`]: reduced row-echelon form,
//! rank, null space.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement};

/// Row-major matrix of field elements. The field is passed to each
/// operation rather than stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for GfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GfMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in self.row(r).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

impl GfMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GfMatrix {
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = FieldElement::ONE;
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::domain(format!(
                "row of length {} in a {cols}-column matrix",
                bad.len()
            )));
        }
        Ok(GfMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Matrix from element indices, row by row.
    pub fn from_indices(field: &FieldDescriptor, rows: &[&[usize]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&i| field.element(i))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[FieldElement]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map(&self, f: impl Fn(FieldElement) -> FieldElement) -> Self {
        GfMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// `self` on top of `other`.
    pub fn stack(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.cols != other.cols {
            return Err(Error::domain(format!(
                "cannot stack a {}-column matrix on a {}-column matrix",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(GfMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// `self * v^T`.
    pub fn mul_vec(&self, field: &FieldDescriptor, v: &[FieldElement]) -> Vec<FieldElement> {
        self.row_iter()
            .map(|r| {
                r.iter().zip(v).fold(FieldElement::ZERO, |acc, (&a, &b)| {
                    field.add(acc, field.mul(a, b))
                })
            })
            .collect()
    }
}

/// A subspace held as fully reduced echelon rows sorted by pivot, which
/// makes the basis canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    fn reduce(&self, field: &FieldDescriptor, v: &mut [FieldElement]) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c.is_zero() {
                continue;
            }
            for j in piv..self.cols {
                v[j] = field.sub(v[j], field.mul(c, row[j]));
            }
        }
    }

    pub fn contains(&self, field: &FieldDescriptor, v: &[FieldElement]) -> bool {
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, field: &FieldDescriptor, mut v: Vec<FieldElement>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(field, &mut v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let scale = field.inv(v[lead]).expect("nonzero pivot");
        for x in v[lead..].iter_mut() {
            *x = field.mul(*x, scale);
        }
        for row in &mut self.rows {
            let c = row[lead];
            if c.is_zero() {
                continue;
            }
            for j in lead..self.cols {
                row[j] = field.sub(row[j], field.mul(c, v[j]));
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.rows.insert(at, v);
        self.pivots.insert(at, lead);
        true
    }

    pub fn extend_from(&mut self, field: &FieldDescriptor, other: &EchelonBasis) {
        for row in &other.rows {
            self.insert(field, row.clone());
        }
    }

    /// Basis rows as a `dim x cols` matrix.
    pub fn to_matrix(&self) -> GfMatrix {
        GfMatrix {
            rows: self.rows.len(),
            cols: self.cols,
            data: self.rows.concat(),
        }
    }

    pub fn from_matrix(field: &FieldDescriptor, m: &GfMatrix) -> Self {
        let mut basis = EchelonBasis::new(m.cols);
        for r in m.row_iter() {
            basis.insert(field, r.to_vec());
        }
        basis
    }
}

/// Reduced row-echelon form of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Same shape as the input, zero rows last.
    pub matrix: GfMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref(field: &FieldDescriptor, m: &GfMatrix) -> Rref {
    let basis = EchelonBasis::from_matrix(field, m);
    let mut matrix = basis.to_matrix();
    matrix.data.resize(m.rows * m.cols, FieldElement::ZERO);
    matrix.rows = m.rows;
    Rref {
        matrix,
        rank: basis.dim(),
        pivots: basis.pivots,
    }
}

pub fn rank(field: &FieldDescriptor, m: &GfMatrix) -> usize {
    EchelonBasis::from_matrix(field, m).dim()
}

/// Basis of `{v : m v^T = 0}`, one row per free column of `rref(m)`.
pub fn null_space(field: &FieldDescriptor, m: &GfMatrix) -> GfMatrix {
    let basis = EchelonBasis::from_matrix(field, m);
    null_space_of_basis(field, &basis, m)
}

pub(crate) fn null_space_of_basis(
    field: &FieldDescriptor,
    basis: &EchelonBasis,
    m: &GfMatrix,
) -> GfMatrix {
    let n = basis.cols;
    let mut is_pivot = vec![false; n];
    for &p in &basis.pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::with_capacity(n - basis.dim());
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![FieldElement::ZERO; n];
        v[free] = FieldElement::ONE;
        for (row, &piv) in basis.rows.iter().zip(&basis.pivots) {
            v[piv] = field.neg(row[free]);
        }
        assert!(
            m.mul_vec(field, &v).iter().all(|x| x.is_zero()),
            "null space vector fails m v^T = 0"
        );
        out.push(v);
    }
    GfMatrix {
        rows: out.len(),
        cols: n,
        data: out.concat(),
    }
}

/// Rank of `m1` stacked on `m2`, i.e. `dim(rowspace m1 + rowspace m2)`.
pub fn stacked_rank(field: &FieldDescriptor, m1: &GfMatrix, m2: &GfMatrix) -> Result<usize> {
    Ok(rank(field, &m1.stack(m2)?))
}
