use std::fmt;
use std::ops::{Add, BitXor};

use serde::Serialize;

/// An element of the elementary abelian group `Z_2^n`, stored as a bit vector:
/// bit `k - 1` is the component along the generator `g_k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct GroupElement(pub u64);

impl GroupElement {
    pub const IDENTITY: Self = Self(0);

    /// The standard generator `g_k`, `k >= 1`.
    pub fn generator(k: usize) -> Self {
        assert!((1..=64).contains(&k), "generator index {k} out of range");
        Self(1 << (k - 1))
    }

    /// `g_1 + ... + g_n`.
    pub fn all_ones(n: usize) -> Self {
        if n == 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub fn has_generator(self, k: usize) -> bool {
        self.0 >> (k - 1) & 1 == 1
    }

    /// Highest set bit, if any.
    fn leading_bit(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    /// All `2^n` elements of `Z_2^n` in increasing order.
    pub fn all(n: usize) -> impl Iterator<Item = GroupElement> {
        assert!(n < 32, "group rank {n} too large to enumerate");
        (0..1u64 << n).map(GroupElement)
    }
}

impl BitXor for GroupElement {
    type Output = Self;
    fn bitxor(self, rhs: Self) -> Self {
        Self(self.0 ^ rhs.0)
    }
}

impl Add for GroupElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self ^ rhs
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for k in 1..=64 {
            if self.has_generator(k) {
                write!(f, "g{k}")?;
            }
        }
        Ok(())
    }
}

/// A subgroup of `Z_2^n`, kept as a reduced echelon basis so that coset
/// representatives are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    rank: usize,
    basis: Vec<GroupElement>,
}

impl Subgroup {
    pub fn trivial(rank: usize) -> Self {
        Self {
            rank,
            basis: Vec::new(),
        }
    }

    pub fn whole(rank: usize) -> Self {
        Self::generated_by(rank, (1..=rank).map(GroupElement::generator))
    }

    pub fn generated_by(rank: usize, gens: impl IntoIterator<Item = GroupElement>) -> Self {
        let mut s = Self::trivial(rank);
        for g in gens {
            s.insert(g);
        }
        s
    }

    /// Ambient rank `n`.
    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    /// `log2` of the order.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> u64 {
        1 << self.basis.len()
    }

    pub fn basis(&self) -> &[GroupElement] {
        &self.basis
    }

    fn insert(&mut self, g: GroupElement) {
        let r = self.reduce(g);
        let Some(lead) = r.leading_bit() else {
            return;
        };
        for b in &mut self.basis {
            if b.0 >> lead & 1 == 1 {
                *b = *b ^ r;
            }
        }
        self.basis.push(r);
        self.basis
            .sort_by_key(|b| std::cmp::Reverse(b.leading_bit()));
    }

    fn reduce(&self, mut g: GroupElement) -> GroupElement {
        for b in &self.basis {
            let lead = b.leading_bit().expect("basis vectors are nonzero");
            if g.0 >> lead & 1 == 1 {
                g = g ^ *b;
            }
        }
        g
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        self.reduce(g).is_identity()
    }

    /// The canonical representative of the coset `g + H`.
    pub fn coset_rep(&self, g: GroupElement) -> GroupElement {
        self.reduce(g)
    }

    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut s = self.clone();
        for &b in &other.basis {
            s.insert(b);
        }
        s
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![GroupElement::IDENTITY];
        for &b in &self.basis {
            let more: Vec<_> = out.iter().map(|&x| x ^ b).collect();
            out.extend(more);
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_representatives_are_canonical() {
        let h = Subgroup::generated_by(3, [GroupElement(0b011), GroupElement(0b110)]);
        assert_eq!(h.order(), 4);
        for g in GroupElement::all(3) {
            for x in h.elements() {
                assert_eq!(h.coset_rep(g), h.coset_rep(g ^ x));
            }
        }
        let reps: std::collections::BTreeSet<_> =
            GroupElement::all(3).map(|g| h.coset_rep(g)).collect();
        assert_eq!(reps.len(), 2);
        assert!(h.contains(GroupElement(0b101)));
        assert!(!h.contains(GroupElement(0b001)));
    }

    #[test]
    fn display_lists_generators() {
        assert_eq!(GroupElement(0b101).to_string(), "g1g3");
        assert_eq!(GroupElement::IDENTITY.to_string(), "1");
        assert_eq!(GroupElement::all_ones(3), GroupElement(7));
    }
}
