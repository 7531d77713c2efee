//! Irreducible characters of symmetric groups by the Murnaghan-Nakayama rule,
//! and the normalized one-row characters `Ch_k`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::Rational;

/// `chi^lambda_nu` via border-strip removal on beta-sets, memoized on
/// the remaining shape.
pub fn mn_character(lambda: &Partition, nu: &Partition) -> Result<BigInt> {
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.size(),
            nu: nu.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(chi(lambda.parts(), nu.parts(), &mut memo))
}

/// Dimension `f^lambda = chi^lambda_{(1^n)}`.
pub fn dimension(lambda: &Partition) -> BigInt {
    let ones = Partition::new(vec![1; lambda.size() as usize]).expect("valid");
    mn_character(lambda, &ones).expect("sizes agree")
}

fn chi(shape: &[u32], nu: &[u32], memo: &mut HashMap<(Vec<u32>, usize), BigInt>) -> BigInt {
    if nu.is_empty() {
        return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    let key = (shape.to_vec(), nu.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = nu[0];
    let l = shape.len();
    // beta_i = shape_i + (l - 1 - i), strictly decreasing
    let beta: Vec<i64> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (l - 1 - i) as i64)
        .collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        let target = b - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        // height = number of beads jumped over
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let m = next.len();
        let new_shape: Vec<u32> = next
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (m - 1 - j) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sub = chi(&new_shape, &nu[1..], memo);
        if height % 2 == 0 {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `Ch_k(lambda) = n(n-1)...(n-k+1) chi^lambda_{(k, 1^{n-k})} / f^lambda`, zero when `k > n`.
pub fn ordinary_character_eval(k: u32, lambda: &Partition) -> Result<Rational> {
    if k == 0 {
        return Err(Error::InvalidArgument("character index must be positive".into()));
    }
    let n = lambda.size();
    if k > n {
        return Ok(Rational::zero());
    }
    let mut nu = vec![k];
    nu.extend(std::iter::repeat_n(1, (n - k) as usize));
    let nu = Partition::new(nu)?;
    let chi = mn_character(lambda, &nu)?;
    let falling: BigInt = (0..k).map(|i| BigInt::from(n - i)).product();
    Ok(Rational::new(falling * chi, dimension(lambda)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate, PartitionKind};
    use crate::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        for n in 1..=6 {
            let row = p(&[n]);
            let col = row.conjugate();
            for nu in enumerate(n, PartitionKind::All) {
                assert_eq!(mn_character(&row, &nu).unwrap(), BigInt::one());
                let sign = if (n as usize - nu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&col, &nu).unwrap(), BigInt::from(sign));
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), BigInt::zero());
        assert_eq!(dimension(&p(&[3, 2])), BigInt::from(5));
        assert_eq!(dimension(&p(&[4, 2, 1])), BigInt::from(35));
        assert!(mn_character(&p(&[2, 1]), &p(&[2])).is_err());
    }

    #[test]
    fn normalized_values() {
        for mu in enumerate(5, PartitionKind::All) {
            assert_eq!(ordinary_character_eval(1, &mu).unwrap(), rat(5, 1));
        }
        assert_eq!(ordinary_character_eval(3, &p(&[3])).unwrap(), rat(6, 1));
        assert_eq!(ordinary_character_eval(2, &p(&[2, 1])).unwrap(), rat(0, 1));
        assert_eq!(ordinary_character_eval(4, &p(&[2, 1])).unwrap(), rat(0, 1));
    }
}
