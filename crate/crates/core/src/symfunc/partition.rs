use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{factorial, vandermonde_of_ints};

/// A weakly decreasing sequence of nonnegative integers; trailing zeros are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition padded to `d` zero parts.
    pub fn zero(d: usize) -> Self {
        Partition { parts: vec![0; d] }
    }

    /// `cols^rows`, e.g. the rectangle `(r-d)^d`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        Partition {
            parts: vec![cols; rows],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of stored parts, zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Pad with zeros (or fail if there are more than `d` nonzero parts).
    pub fn padded(&self, d: usize) -> Result<Self> {
        if self.length() > d {
            return Err(Error::InvalidParameters(format!(
                "partition {self} has more than {d} parts"
            )));
        }
        let mut parts: Vec<u32> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.resize(d, 0);
        Ok(Partition { parts })
    }

    /// Add `width` to every stored part (`λ + ε` for `ε = width^len`).
    pub fn plus_rectangle(&self, width: u32) -> Self {
        Partition {
            parts: self.parts.iter().map(|p| p + width).collect(),
        }
    }

    /// Part `i` (0-based), zero beyond the stored parts.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Every partition with at most `d` parts and weight at most `w`, padded to
/// length `d`, ordered by weight and then reverse-lexicographically.
pub fn partitions_up_to(d: usize, w: u32) -> impl Iterator<Item = Partition> {
    (0..=w).flat_map(move |m| partitions_of(m, d).into_iter())
}

/// Partitions of exactly `m` with at most `d` parts, padded to length `d`.
pub fn partitions_of(m: u32, d: usize) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let mut parts = prefix.clone();
            parts.resize(parts.len() + slots, 0);
            out.push(Partition { parts });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if m == 0 {
            out.push(Partition { parts: vec![] });
        }
        return out;
    }
    rec(m, m, d, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of shape `mu`, from the bialternant
/// form of the hook-length formula: `|μ|! Δ(l) / ∏ l_i!` with `l_i = μ_i + d - i`.
pub fn syt_count(mu: &Partition) -> BigUint {
    let d = mu.len() as i64;
    let l: Vec<i64> = mu
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + d - 1 - i as i64)
        .collect();
    let numerator = BigInt::from(factorial(mu.weight() as u64)) * vandermonde_of_ints(&l);
    let denominator: BigInt = l
        .iter()
        .map(|&x| BigInt::from(factorial(x as u64)))
        .product();
    let (q, rem) = numerator.div_rem(&denominator);
    assert!(rem.is_zero() && !q.is_negative(), "hook-length quotient must be a nonnegative integer");
    q.to_biguint().expect("nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let one: Vec<_> = partitions_up_to(1, 2).collect();
        assert_eq!(one, vec![p(&[0]), p(&[1]), p(&[2])]);
        let two: Vec<_> = partitions_up_to(2, 2).collect();
        assert_eq!(two, vec![p(&[0, 0]), p(&[1, 0]), p(&[2, 0]), p(&[1, 1])]);
        assert_eq!(partitions_up_to(3, 3).count(), 7);
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(syt_count(&p(&[1])), BigUint::from(1u32));
        assert_eq!(syt_count(&p(&[2, 2])), BigUint::from(2u32));
        assert_eq!(syt_count(&p(&[3, 3])), BigUint::from(5u32));
        assert_eq!(syt_count(&p(&[3, 3, 3])), BigUint::from(42u32));
        assert_eq!(syt_count(&Partition::zero(3)), BigUint::from(1u32));
        assert_eq!(syt_count(&p(&[])), BigUint::from(1u32));
        // trailing zeros do not matter
        assert_eq!(syt_count(&p(&[2, 1, 0, 0])), syt_count(&p(&[2, 1])));
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(p(&[3, 1, 1]).padded(2).is_err());
        assert_eq!(p(&[3, 1]).padded(4).unwrap(), p(&[3, 1, 0, 0]));
    }
}
