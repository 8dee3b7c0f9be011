use crate::exact::RatFunc;

use super::poly::MomentPolynomial;

/// `e_0..=e_j` in power sums, via `k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i`.
pub fn newton_e_table(j: u32, centered: bool) -> Vec<MomentPolynomial> {
    let mut e = vec![MomentPolynomial::one(centered)];
    for k in 1..=j {
        let mut acc = MomentPolynomial::zero(centered);
        for i in 1..=k {
            let term = &e[(k - i) as usize] * &MomentPolynomial::p(centered, i);
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&RatFunc::frac(1, k as i64)));
    }
    e
}

/// The elementary symmetric polynomial `e_j` in power sums.
pub fn newton_e_from_p(j: u32, centered: bool) -> MomentPolynomial {
    newton_e_table(j, centered).pop().expect("table is nonempty")
}
