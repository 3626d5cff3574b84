//! Triangulating the middle cell `X^n = conv{ midpoints of edges of Δ^n }`
//! without new vertices.
//!
//! The midpoint `v_ij` of the edge `e_i e_j` is placed in `Z^n` as `e_j` when
//! `i = 0` and as `e_i + e_j` otherwise; this affine image of the hypersimplex
//! is unimodular, so normalized volumes (`n!` times Euclidean volume) are
//! preserved and equal `2^n - n - 1`, the Eulerian number `A(n, 1)`.
//!
//! The triangulation is a placing triangulation: points are inserted in token
//! order; a point off the current affine hull is coned over every simplex, and
//! a point inside the hull is coned over the boundary ridges it sees strictly.
//! All predicates are exact integer determinants.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Midpoint labels `v_ij` in token order with their lattice coordinates.
pub fn hypersimplex_points(n: usize) -> Vec<((usize, usize), Vec<i64>)> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let mut x = vec![0i64; n];
            x[j - 1] += 1;
            if i > 0 {
                x[i - 1] += 1;
            }
            out.push(((i, j), x));
        }
    }
    out
}

/// Normalized volume `2^n - n - 1` of the hypersimplex.
pub fn normalized_volume(n: usize) -> i128 {
    (1i128 << n) - n as i128 - 1
}

/// Fraction-free determinant of a square integer matrix.
pub(crate) fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

/// Rank of a list of integer row vectors.
fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a - m[r][j] * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    for x in &mut m[i] {
                        *x /= g;
                    }
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i128> {
    a.iter().zip(b).map(|(x, y)| (*x - *y) as i128).collect()
}

/// Orientation of `x` relative to the affine hyperplane through `ridge`
/// inside a `k`-dimensional hull, computed on coordinates `axes`.
fn side(points: &[Vec<i64>], ridge: &[usize], x: usize, axes: &[usize]) -> i128 {
    let o = &points[ridge[0]];
    let mut rows: Vec<Vec<i128>> = ridge[1..]
        .iter()
        .map(|&r| diff(&points[r], o))
        .collect();
    rows.push(diff(&points[x], o));
    det(rows
        .into_iter()
        .map(|r| axes.iter().map(|&a| r[a]).collect())
        .collect())
    .signum()
}

/// `k` coordinates on which the affine hull of `basis` projects injectively.
fn projection_axes(points: &[Vec<i64>], basis: &[usize]) -> Vec<usize> {
    let k = basis.len() - 1;
    let dim = points[0].len();
    let rows: Vec<Vec<i128>> = basis[1..]
        .iter()
        .map(|&b| diff(&points[b], &points[basis[0]]))
        .collect();
    let mut axes = Vec::with_capacity(k);
    let mut found = None;
    choose(dim, k, 0, &mut axes, &mut |axes| {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| axes.iter().map(|&a| r[a]).collect())
            .collect();
        if det(minor) != 0 {
            found = Some(axes.to_vec());
            true
        } else {
            false
        }
    });
    found.expect("affinely independent points have a nonzero minor")
}

fn choose(n: usize, k: usize, start: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if buf.len() == k {
        return f(buf);
    }
    for i in start..n {
        buf.push(i);
        if choose(n, k, i + 1, buf, f) {
            return true;
        }
        buf.pop();
    }
    false
}

fn ridges_with_owner(simplices: &[Vec<usize>]) -> HashMap<Vec<usize>, Vec<(usize, usize)>> {
    let mut out: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
    for (si, s) in simplices.iter().enumerate() {
        for skip in 0..s.len() {
            let r: Vec<usize> = s
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &v)| v)
                .collect();
            out.entry(r).or_default().push((si, s[skip]));
        }
    }
    out
}

/// Placing triangulation of `points` in the given order. Simplices are sorted
/// index lists, in sorted order.
pub fn placing_triangulation(points: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let mut simplices: Vec<Vec<usize>> = vec![vec![0]];
    let mut basis: Vec<usize> = vec![0];
    let mut axes: Vec<usize> = Vec::new();
    for p in 1..points.len() {
        let mut rows: Vec<Vec<i128>> = basis[1..]
            .iter()
            .map(|&b| diff(&points[b], &points[basis[0]]))
            .collect();
        rows.push(diff(&points[p], &points[basis[0]]));
        if rank(&rows) == basis.len() {
            // off the affine hull
            for s in &mut simplices {
                s.push(p);
            }
            basis.push(p);
            axes = projection_axes(points, &basis);
            continue;
        }
        let ridges = ridges_with_owner(&simplices);
        let mut added = Vec::new();
        for (ridge, owners) in &ridges {
            if owners.len() != 1 {
                continue;
            }
            let q = owners[0].1;
            let sp = side(points, ridge, p, &axes);
            let sq = side(points, ridge, q, &axes);
            if sp != 0 && sp == -sq {
                let mut s = ridge.clone();
                s.push(p);
                added.push(s);
            }
        }
        assert!(!added.is_empty(), "point {p} lies inside the current hull");
        simplices.extend(added);
    }
    for s in &mut simplices {
        s.sort_unstable();
    }
    simplices.sort();
    simplices
}

/// The triangulation of `X^n` as lists of index pairs `(i, j)`, validated.
pub fn subdivide_hypersimplex(n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "the middle cell of Δ^{n} is not full-dimensional"
        )));
    }
    let pts = hypersimplex_points(n);
    let coords: Vec<Vec<i64>> = pts.iter().map(|(_, x)| x.clone()).collect();
    let simplices = placing_triangulation(&coords);
    validate(n, &pts, &simplices)?;
    Ok(simplices
        .into_iter()
        .map(|s| s.into_iter().map(|i| pts[i].0).collect())
        .collect())
}

/// Checks that `simplices` triangulate the hypersimplex: full-dimensional
/// simplices whose normalized volumes add up to `2^n - n - 1`, every interior
/// ridge shared by exactly two simplices lying on opposite sides of it, and
/// every other ridge inside a facet of the hypersimplex (`x_i = 1`, spanned by
/// the `v_ij` containing `i`, or `x_i = 0`, spanned by the `v_jk` avoiding
/// `i`).
fn validate(n: usize, pts: &[((usize, usize), Vec<i64>)], simplices: &[Vec<usize>]) -> Result<()> {
    let coords: Vec<Vec<i64>> = pts.iter().map(|(_, x)| x.clone()).collect();
    let all_axes: Vec<usize> = (0..n).collect();
    let mut volume = 0i128;
    for s in simplices {
        if s.len() != n + 1 {
            return Err(Error::ConstructionInvariant(format!(
                "placing produced a simplex with {} vertices in dimension {n}",
                s.len()
            )));
        }
        let rows: Vec<Vec<i128>> = s[1..].iter().map(|&v| diff(&coords[v], &coords[s[0]])).collect();
        let d = det(rows).abs();
        if d == 0 {
            return Err(Error::ConstructionInvariant("degenerate simplex in X^n".into()));
        }
        volume += d;
    }
    if volume != normalized_volume(n) {
        return Err(Error::ConstructionInvariant(format!(
            "simplices of X^{n} have total normalized volume {volume}, expected {}",
            normalized_volume(n)
        )));
    }
    for (ridge, owners) in ridges_with_owner(simplices) {
        match owners.as_slice() {
            [(_, a), (_, b)] => {
                let sa = side(&coords, &ridge, *a, &all_axes);
                let sb = side(&coords, &ridge, *b, &all_axes);
                if sa == 0 || sa != -sb {
                    return Err(Error::ConstructionInvariant(
                        "interior ridge of X^n with both simplices on one side".into(),
                    ));
                }
            }
            [_] => {
                let on_facet = (0..=n).any(|i| {
                    let contains = ridge.iter().all(|&v| {
                        let (a, b) = pts[v].0;
                        a == i || b == i
                    });
                    let avoids = ridge.iter().all(|&v| {
                        let (a, b) = pts[v].0;
                        a != i && b != i
                    });
                    contains || avoids
                });
                if !on_facet {
                    return Err(Error::ConstructionInvariant(
                        "boundary ridge of X^n is not on a facet of the hypersimplex".into(),
                    ));
                }
            }
            _ => {
                return Err(Error::ConstructionInvariant(format!(
                    "ridge of X^n in {} simplices",
                    owners.len()
                )))
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(det(vec![vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(det(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(rank(&[vec![1, 1, 0], vec![2, 2, 0], vec![0, 0, 1]]), 2);
    }

    #[test]
    fn volumes_are_eulerian_numbers() {
        assert_eq!(
            (2..=5).map(normalized_volume).collect::<Vec<_>>(),
            vec![1, 4, 11, 26]
        );
    }

    #[test]
    fn small_cases() {
        let t2 = subdivide_hypersimplex(2).unwrap();
        assert_eq!(t2, vec![vec![(0, 1), (0, 2), (1, 2)]]);
        let t3 = subdivide_hypersimplex(3).unwrap();
        assert_eq!(t3.len(), 4);
        for n in 4..=6 {
            assert!(subdivide_hypersimplex(n).is_ok(), "n = {n}");
        }
    }

    #[test]
    fn square_is_split_into_two() {
        let pts = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        let t = placing_triangulation(&pts);
        assert_eq!(t, vec![vec![0, 1, 2], vec![1, 2, 3]]);
    }
}
