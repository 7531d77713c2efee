//! Exact linear solves by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

fn integer_row(row: &[Rational], rhs: &Rational) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .chain(std::iter::once(rhs))
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Solves `a x = b` for the unique `x`, where `a` may have more rows than
/// columns. Fails when `a` lacks full column rank or the system is inconsistent.
pub fn solve_exact(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let cols = a.first().map_or(0, Vec::len);
    if a.len() != b.len() || a.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidArgument("ragged linear system".into()));
    }
    let mut m: Vec<Vec<BigInt>> = a.iter().zip(b).map(|(r, x)| integer_row(r, x)).collect();
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in (c + 1)..=cols {
                let num = &pv * &row[j] - &factor * &pivot_row[j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::Internal("inexact fraction-free division".into()));
                }
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = pv;
        pivots.push(c);
        rank += 1;
    }
    if m[rank..].iter().any(|r| !r[cols].is_zero()) {
        return Err(Error::Inconsistent);
    }
    if rank < cols {
        return Err(Error::RankDeficient { rank, columns: cols });
    }
    let mut x = vec![Rational::zero(); cols];
    for r in (0..rank).rev() {
        let c = pivots[r];
        let mut acc = Rational::from_integer(m[r][cols].clone());
        for j in (c + 1)..cols {
            acc -= Rational::from_integer(m[r][j].clone()) * &x[j];
        }
        x[c] = acc / Rational::from_integer(m[r][c].clone());
    }
    Ok(x)
}

/// Rank of a rational matrix.
pub fn rank(a: &[Vec<Rational>]) -> usize {
    let b = vec![Rational::zero(); a.len()];
    match solve_exact(a, &b) {
        Ok(x) => x.len(),
        Err(Error::RankDeficient { rank, .. }) => rank,
        Err(_) => 0,
    }
}
