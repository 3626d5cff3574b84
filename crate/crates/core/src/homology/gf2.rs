use super::boundary::ChainBoundary;

/// Rank over GF(2) by column reduction on bitset columns, pivoting on the
/// lowest set bit.
pub fn rank_gf2(m: &ChainBoundary) -> usize {
    let words = m.rows.div_ceil(64);
    let mut pivot_owner: Vec<Option<Vec<u64>>> = vec![None; m.rows];
    let mut rank = 0;
    for col in &m.columns {
        let mut bits = vec![0u64; words];
        for &(r, s) in col {
            if s % 2 != 0 {
                bits[r as usize / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(low) = lowest_set(&bits) {
            match &pivot_owner[low] {
                Some(p) => {
                    for (a, b) in bits.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivot_owner[low] = Some(bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Index of the highest nonzero row, i.e. the "low" entry of the column.
fn lowest_set(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}
