mod common;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use spin_kerov::characters::{dimension, mn_character, ordinary_character_eval};
use spin_kerov::partitions::{enumerate, PartitionKind};
use spin_kerov::Partition;

type Multi = HashMap<Vec<u32>, BigInt>;

fn mul(a: &Multi, b: &Multi) -> Multi {
    let mut out = Multi::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    if n == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, n - 1);
            // inserting at pos passes over (len - pos) larger-index entries
            let s = if (perm.len() - pos) % 2 == 0 { sign } else { -sign };
            out.push((p, s));
        }
    }
    out
}

/// `chi^lambda_nu` as the coefficient of `x^{lambda + delta}` in `a_delta * p_nu`.
fn frobenius_character(lambda: &Partition, nu: &Partition) -> BigInt {
    let l = lambda.len().max(1);
    let mut a_delta = Multi::new();
    for (perm, sign) in permutations(l) {
        let e: Vec<u32> = perm.iter().map(|&i| (l - 1 - i) as u32).collect();
        a_delta.insert(e, BigInt::from(sign));
    }
    let mut acc = a_delta;
    for &r in nu.parts() {
        let pr: Multi = (0..l)
            .map(|i| {
                let mut e = vec![0; l];
                e[i] = r;
                (e, BigInt::from(1))
            })
            .collect();
        acc = mul(&acc, &pr);
    }
    let target: Vec<u32> = (0..l).map(|i| lambda.part(i) + (l - 1 - i) as u32).collect();
    acc.get(&target).cloned().unwrap_or_else(BigInt::zero)
}

#[test]
fn border_strips_match_frobenius_formula() {
    for n in 1..=6 {
        for lambda in enumerate(n, PartitionKind::All) {
            for nu in enumerate(n, PartitionKind::All) {
                assert_eq!(mn_character(&lambda, &nu).unwrap(), frobenius_character(&lambda, &nu), "{lambda} at {nu}");
            }
        }
    }
}

#[test]
fn dimensions_square_sum_to_factorial() {
    for n in 1..=8u32 {
        let total: BigInt = enumerate(n, PartitionKind::All).iter().map(|l| dimension(l).pow(2)).sum();
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        assert_eq!(total, fact);
    }
}

#[test]
fn normalized_character_of_one_cycle_is_size() {
    for n in 1..=7 {
        for lambda in enumerate(n, PartitionKind::All) {
            assert_eq!(ordinary_character_eval(1, &lambda).unwrap(), spin_kerov::rat(n as i64, 1));
        }
    }
}
