//! Smith normal form of integer boundary matrices.
//!
//! Elimination runs in two phases. First, sparse elimination on unit pivots
//! (`±1` entries), which are the smallest possible magnitudes and leave the
//! invariant factors untouched apart from removing a `1`. This phase runs on
//! checked `i64` arithmetic and restarts on arbitrary-precision integers if any
//! operation would overflow. Whatever is left (typically nothing, or a tiny
//! block carrying the torsion) is diagonalized densely on big integers, always
//! pivoting on an entry of smallest nonzero magnitude, and the diagonal is then
//! normalized so that successive factors divide each other.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::boundary::ChainBoundary;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigUint>,
}

pub fn smith_form(m: &ChainBoundary) -> SmithForm {
    match sparse_phase::<i64>(m) {
        Some(out) => out,
        None => sparse_phase::<BigInt>(m).expect("big integers cannot overflow"),
    }
}

trait Entry: Clone + std::fmt::Debug {
    fn from_i8(x: i8) -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - f * x`, or `None` on overflow.
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self>;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Entry for i64 {
    fn from_i8(x: i8) -> Self {
        x as i64
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(f.checked_mul(*x)?)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn from_i8(x: i8) -> Self {
        BigInt::from(x)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        Some(self - f * x)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

type Row<T> = Vec<(u32, T)>;

/// Returns `None` when `T` overflows.
fn sparse_phase<T: Entry>(m: &ChainBoundary) -> Option<SmithForm> {
    let mut rows: Vec<Row<T>> = vec![Vec::new(); m.rows];
    let mut col_rows: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); m.cols];
    for (j, col) in m.columns.iter().enumerate() {
        for &(r, s) in col {
            rows[r as usize].push((j as u32, T::from_i8(s)));
            col_rows[j].insert(r);
        }
    }
    for row in &mut rows {
        row.sort_unstable_by_key(|e| e.0);
    }

    let mut units = 0usize;
    loop {
        let mut progress = false;
        for c in 0..m.cols {
            if col_rows[c].is_empty() {
                continue;
            }
            // shortest row holding a unit in this column
            let pivot = col_rows[c]
                .iter()
                .filter(|&&r| entry(&rows[r as usize], c as u32).is_some_and(T::is_unit))
                .min_by_key(|&&r| (rows[r as usize].len(), r))
                .copied();
            let Some(pr) = pivot else { continue };
            let prow = std::mem::take(&mut rows[pr as usize]);
            let p = entry(&prow, c as u32).unwrap().clone();
            let others: Vec<u32> = col_rows[c].iter().copied().filter(|&r| r != pr).collect();
            for r in others {
                let a = entry(&rows[r as usize], c as u32).unwrap().clone();
                // p is its own inverse
                let f = a.mul(&p)?;
                let old = std::mem::take(&mut rows[r as usize]);
                let new = combine(&old, &f, &prow)?;
                for (col, _) in &old {
                    col_rows[*col as usize].remove(&r);
                }
                for (col, _) in &new {
                    col_rows[*col as usize].insert(r);
                }
                rows[r as usize] = new;
            }
            for (col, _) in &prow {
                col_rows[*col as usize].remove(&pr);
            }
            debug_assert!(col_rows[c].is_empty());
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let live_rows: Vec<usize> = (0..m.rows).filter(|&r| !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols).filter(|&c| !col_rows[c].is_empty()).collect();
    if live_rows.is_empty() {
        return Some(SmithForm {
            rank: units,
            torsion: Vec::new(),
        });
    }
    let col_pos: std::collections::HashMap<usize, usize> =
        live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|&r| {
            let mut row = vec![BigInt::zero(); live_cols.len()];
            for (c, v) in &rows[r] {
                row[col_pos[&(*c as usize)]] = v.to_big();
            }
            row
        })
        .collect();
    let diag = dense_diagonal(dense);
    let rank = units + diag.len();
    let torsion = diag.into_iter().filter(|d| !d.is_one()).collect();
    Some(SmithForm { rank, torsion })
}

fn entry<T>(row: &Row<T>, c: u32) -> Option<&T> {
    row.binary_search_by_key(&c, |e| e.0).ok().map(|i| &row[i].1)
}

/// `a - f * b` on sorted sparse rows.
fn combine<T: Entry>(a: &Row<T>, f: &T, b: &Row<T>) -> Option<Row<T>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let zero = T::from_i8(0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        let (col, v) = if ca < cb {
            i += 1;
            (ca, a[i - 1].1.clone())
        } else if cb < ca {
            j += 1;
            (cb, zero.sub_mul(f, &b[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ca, a[i - 1].1.sub_mul(f, &b[j - 1].1)?)
        };
        if !v.vanishes() {
            out.push((col, v));
        }
    }
    Some(out)
}

/// Nonzero diagonal of the Smith form of a dense matrix, as a divisibility
/// chain of positive integers.
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigUint> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag: Vec<BigUint> = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest(&a, t..m, t..n) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    for j in t..n {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if clean {
                break;
            }
            // a nonzero remainder is smaller than the pivot: move it in
            let (pi, pj) = smallest_cross(&a, t).expect("pivot is nonzero");
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
        }
        diag.push(a[t][t].magnitude().clone());
    }
    normalize_chain(&mut diag);
    diag
}

fn smallest(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if !a[i][j].is_zero()
                && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
            {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` of the active block.
fn smallest_cross(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let n = a[0].len();
    let cands = (t..a.len()).map(|i| (i, t)).chain((t..n).map(|j| (t, j)));
    cands
        .filter(|&(i, j)| !a[i][j].is_zero())
        .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
}

fn normalize_chain(d: &mut [BigUint]) {
    use num_integer::Integer;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            if g != d[i] {
                let l = &d[i] / &g * &d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(entries: &[&[i8]]) -> ChainBoundary {
        let rows = entries.len();
        let cols = entries[0].len();
        let columns = (0..cols)
            .map(|j| {
                (0..rows)
                    .filter(|&i| entries[i][j] != 0)
                    .map(|i| (i as u32, entries[i][j]))
                    .collect()
            })
            .collect();
        ChainBoundary {
            dim: 1,
            rows,
            cols,
            columns,
        }
    }

    #[test]
    fn torsion_of_small_matrices() {
        // diag(2, 3) ~ diag(1, 6)
        let s = smith_form(&matrix(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.rank, 2);
        assert_eq!(s.torsion, vec![BigUint::from(6u32)]);
        let s = smith_form(&matrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        // classical example: diag(2, 6, 12)
        assert_eq!(s.rank, 3);
        assert_eq!(
            s.torsion,
            vec![BigUint::from(2u32), BigUint::from(6u32), BigUint::from(12u32)]
        );
        let s = smith_form(&matrix(&[&[1, 1], &[1, -1]]));
        assert_eq!(s.rank, 2);
        assert_eq!(s.torsion, vec![BigUint::from(2u32)]);
    }

    #[test]
    fn big_and_small_paths_agree() {
        let m = matrix(&[&[1, 1, 0, 2], &[1, -1, 3, 0], &[0, 2, 1, 1], &[2, 0, 4, 2]]);
        let a = sparse_phase::<i64>(&m).unwrap();
        let b = sparse_phase::<BigInt>(&m).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_matrix() {
        let s = smith_form(&matrix(&[&[0, 0], &[0, 0]]));
        assert_eq!(s.rank, 0);
        assert!(s.torsion.is_empty());
    }
}
