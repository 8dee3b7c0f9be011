use std::collections::HashMap;

use num_bigint::BigInt;

use crate::exact::{factorial, RatFunc};
use crate::moments::{MomentPartition, MomentPolynomial};

/// A set partition of `{0..m}`, blocks in order of their least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// From a restricted-growth string: `rgs[i]` is the block of `i`.
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let count = rgs.iter().max().map_or(0, |&b| b + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }
}

/// All set partitions of `{0..m}` in lexicographic restricted-growth order.
pub fn set_partitions(m: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    if m == 0 {
        out.push(SetPartition { blocks: Vec::new() });
        return out;
    }
    let mut rgs = vec![0; m];
    loop {
        out.push(SetPartition::from_rgs(&rgs));
        // next RGS: rightmost position that may grow
        let mut i = m - 1;
        loop {
            if i == 0 {
                return out;
            }
            let bound = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < bound {
                rgs[i] += 1;
                rgs[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
            i -= 1;
        }
    }
}

/// `prod_B (-1)^{|B|-1} (|B|-1)!`.
pub fn mobius_weight(pi: &SetPartition) -> BigInt {
    pi.blocks.iter().fold(BigInt::from(1), |acc, b| {
        let w = factorial(b.len() as u64 - 1);
        if b.len() % 2 == 0 {
            -acc * w
        } else {
            acc * w
        }
    })
}

/// `S(alpha) = sum over ordered distinct (i_1..i_m) of prod z_{i_j}^{alpha_j}`,
/// by Möbius inversion over all set partitions of the positions.
pub fn distinct_sum_moments_mobius(alpha: &[u32], centered: bool) -> MomentPolynomial {
    let mut out = MomentPolynomial::zero(centered);
    for pi in set_partitions(alpha.len()) {
        let parts = pi.blocks.iter().map(|b| b.iter().map(|&j| alpha[j]).sum()).collect();
        let term = MomentPolynomial::monomial(
            centered,
            MomentPartition::new(parts),
            RatFunc::from_bigint(mobius_weight(&pi)),
        );
        out = &out + &term;
    }
    out
}

/// Memo for [`distinct_sum_moments`], keyed by the sorted exponent list.
#[derive(Debug, Default)]
pub struct DistinctSumCache {
    centered: bool,
    memo: HashMap<Vec<u32>, MomentPolynomial>,
}

impl DistinctSumCache {
    pub fn new(centered: bool) -> Self {
        DistinctSumCache {
            centered,
            memo: HashMap::new(),
        }
    }

    pub fn is_centered(&self) -> bool {
        self.centered
    }

    /// `S(alpha)` via peeling off the last index:
    /// `S(a', a) = S(a') p_a - sum_i S(a' with a'_i += a)`.
    pub fn get(&mut self, alpha: &[u32]) -> MomentPolynomial {
        let mut key = alpha.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let value = match key.split_last() {
            None => MomentPolynomial::one(self.centered),
            Some((&a, rest)) => {
                let mut acc = &self.get(rest) * &MomentPolynomial::p(self.centered, a);
                for i in 0..rest.len() {
                    let mut merged = rest.to_vec();
                    merged[i] += a;
                    acc = &acc - &self.get(&merged);
                }
                acc
            }
        };
        self.memo.insert(key, value.clone());
        value
    }
}

/// `S(alpha)` in power sums, with `p_0 = n` and (if centered) `p_1 = 0`.
pub fn distinct_sum_moments(alpha: &[u32], centered: bool) -> MomentPolynomial {
    DistinctSumCache::new(centered).get(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers_and_weights() {
        let counts: Vec<usize> = (0..7).map(|m| set_partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
        assert_eq!(mobius_weight(&SetPartition::from_rgs(&[0, 1, 2])), 1.into());
        assert_eq!(mobius_weight(&SetPartition::from_rgs(&[0, 0, 1])), (-1).into());
        assert_eq!(mobius_weight(&SetPartition::from_rgs(&[0, 0, 0])), 2.into());
    }

    #[test]
    fn small_distinct_sums() {
        let p = |r| MomentPolynomial::p(true, r);
        assert_eq!(distinct_sum_moments(&[2, 2], true), &p(2).pow(2) - &p(4));
        assert!(distinct_sum_moments(&[1], true).is_zero());
        let raw = distinct_sum_moments(&[2, 0], false);
        let want = MomentPolynomial::p(false, 2).scale(&"n-1".parse().unwrap());
        assert_eq!(raw, want);
    }

    #[test]
    fn recursion_matches_mobius() {
        let cases: [&[u32]; 7] = [
            &[2, 2, 2],
            &[3, 1, 0],
            &[4, 2, 0, 0],
            &[1, 1, 1, 1],
            &[2, 1, 1, 0, 2],
            &[3, 3],
            &[],
        ];
        for alpha in cases {
            for centered in [true, false] {
                assert_eq!(
                    distinct_sum_moments(alpha, centered),
                    distinct_sum_moments_mobius(alpha, centered),
                    "{alpha:?}"
                );
            }
        }
    }
}
