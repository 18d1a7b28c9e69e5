//! Enumeration of rationals by height.

use num_integer::Integer;

/// All rationals x with H(x) <= bound, yielded as canonical (num, den) pairs
/// with den >= 1 and gcd(|num|, den) = 1, ordered by denominator then
/// numerator. Includes 0 as (0, 1).
pub fn rationals_up_to(bound: u64) -> impl Iterator<Item = (i64, u64)> {
    let b = bound as i64;
    (1..=bound).flat_map(move |den| {
        (-b..=b).filter_map(move |num| {
            if num == 0 {
                return (den == 1).then_some((0, den));
            }
            (num.unsigned_abs().gcd(&den) == 1).then_some((num, den))
        })
    })
}

/// Exact count of rationals with height <= bound: 4 * sum_{k<=bound} phi(k) - 1.
pub fn count_rationals_up_to(bound: u64) -> u64 {
    if bound == 0 {
        return 0;
    }
    let n = bound as usize;
    // Totient sieve.
    let mut phi: Vec<u64> = (0..=n as u64).collect();
    for i in 2..=n {
        if phi[i] == i as u64 {
            // i is prime
            for j in (i..=n).step_by(i) {
                phi[j] -= phi[j] / i as u64;
            }
        }
    }
    let farey: u64 = phi[1..=n].iter().sum();
    4 * farey - 1
}
