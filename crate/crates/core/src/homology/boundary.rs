use std::collections::HashMap;

use crate::complex::{skip_one, SimplicialComplex, VertexId};

/// The simplicial boundary map `C_k -> C_{k-1}` over the sorted face bases.
///
/// Column `j` is the `j`-th `k`-face; omitting its `i`-th vertex (in sorted
/// order) contributes `(-1)^i` in the row of the resulting `(k-1)`-face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBoundary {
    pub dim: usize,
    pub rows: usize,
    pub cols: usize,
    /// Sparse columns, each sorted by row index.
    pub columns: Vec<Vec<(u32, i8)>>,
}

impl ChainBoundary {
    pub fn nonzeros(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Entry lookup, for tests and small matrices.
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.columns[col]
            .iter()
            .find(|(r, _)| *r as usize == row)
            .map_or(0, |&(_, s)| s)
    }

    /// Applies a row and column reordering: new row `i` is old row
    /// `row_perm[i]`, and likewise for columns.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut inverse = vec![0u32; self.rows];
        for (new, &old) in row_perm.iter().enumerate() {
            inverse[old] = new as u32;
        }
        let columns = col_perm
            .iter()
            .map(|&old| {
                let mut col: Vec<(u32, i8)> = self.columns[old]
                    .iter()
                    .map(|&(r, s)| (inverse[r as usize], s))
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        Self {
            dim: self.dim,
            rows: self.rows,
            cols: self.cols,
            columns,
        }
    }
}

/// `∂_k` for `k = 1 ..= dim c`.
///
/// The composites `∂_{k-1} ∂_k` are checked to vanish; a nonzero composite
/// would mean the face enumeration is broken and aborts.
pub fn boundary_matrices(c: &SimplicialComplex) -> Vec<ChainBoundary> {
    let d = c.dim();
    if d < 1 {
        return Vec::new();
    }
    let mats: Vec<ChainBoundary> = (1..=d as usize).map(|k| boundary_matrix(c, k)).collect();
    for w in mats.windows(2) {
        assert!(
            composite_vanishes(&w[0], &w[1]),
            "boundary of boundary is nonzero in dimension {}",
            w[1].dim
        );
    }
    mats
}

pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> ChainBoundary {
    let lower = c.faces(k - 1);
    let upper = c.faces(k);
    let index: HashMap<&[VertexId], u32> = lower
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i as u32))
        .collect();
    let columns = upper
        .iter()
        .map(|f| {
            let mut col: Vec<(u32, i8)> = (0..f.len())
                .map(|i| {
                    let row = index[skip_one(f, i).as_slice()];
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    ChainBoundary {
        dim: k,
        rows: lower.len(),
        cols: upper.len(),
        columns,
    }
}

/// `lower ∘ upper == 0`, where `lower = ∂_{k-1}` and `upper = ∂_k`.
pub fn composite_vanishes(lower: &ChainBoundary, upper: &ChainBoundary) -> bool {
    let mut acc: HashMap<u32, i64> = HashMap::new();
    upper.columns.iter().all(|col| {
        acc.clear();
        for &(mid, s) in col {
            for &(row, t) in &lower.columns[mid as usize] {
                *acc.entry(row).or_insert(0) += s as i64 * t as i64;
            }
        }
        acc.values().all(|&v| v == 0)
    })
}
