#![allow(dead_code)]

use std::collections::BTreeMap;

use spin_kerov::kerov::GeneratorMonomial;
use spin_kerov::{rat, GeneratorFamily, KerovPolynomial, OddMonomial, Partition, Poly, Rational, StrictPartition};

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn sp(parts: &[u32]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).unwrap()
}

pub fn int(n: i64) -> Rational {
    rat(n, 1)
}

/// Splits `"a - b c + 3/4 d"` into signed terms `(coefficient, factor tokens)`.
fn signed_terms(text: &str) -> Vec<(Rational, Vec<String>)> {
    let spaced = text.replace('+', " + ").replace(" - ", " -- ");
    let mut out = Vec::new();
    let mut sign = int(1);
    let mut cur: Vec<String> = Vec::new();
    let flush = |sign: &Rational, cur: &mut Vec<String>, out: &mut Vec<(Rational, Vec<String>)>| {
        if cur.is_empty() {
            return;
        }
        let mut coeff = sign.clone();
        let mut factors = Vec::new();
        for tok in cur.drain(..) {
            match tok.parse::<Rational>() {
                Ok(c) => coeff *= c,
                Err(_) => factors.push(tok),
            }
        }
        out.push((coeff, factors));
    };
    let mut tokens = spaced.split_whitespace().peekable();
    if tokens.peek() == Some(&"-") {
        sign = int(-1);
        tokens.next();
    }
    for tok in tokens {
        match tok {
            "+" => {
                flush(&sign, &mut cur, &mut out);
                sign = int(1);
            }
            "--" => {
                flush(&sign, &mut cur, &mut out);
                sign = int(-1);
            }
            t if t.starts_with('-') && cur.is_empty() && out.is_empty() => {
                sign = int(-1);
                cur.push(t[1..].to_string());
            }
            t => cur.push(t.to_string()),
        }
    }
    flush(&sign, &mut cur, &mut out);
    out
}

/// `"R4"` or `"R2^3"` -> (subscript, exponent), dropping the letter prefix.
fn factor(tok: &str) -> (u32, u32) {
    let body = tok.trim_start_matches(|c: char| c.is_alphabetic());
    match body.split_once('^') {
        Some((s, e)) => (s.parse().unwrap(), e.parse().unwrap()),
        None => (body.parse().unwrap(), 1),
    }
}

/// Parses e.g. `"R8 + 70 R6 + 168 R4 R2 + 56 R2^3"`.
pub fn kerov(family: GeneratorFamily, text: &str) -> KerovPolynomial {
    let terms = signed_terms(text).into_iter().map(|(c, fs)| {
        let mut exps = BTreeMap::new();
        for f in fs {
            let (s, e) = factor(&f);
            *exps.entry(s).or_insert(0) += e;
        }
        (GeneratorMonomial::from_exponents(exps), c)
    });
    KerovPolynomial::from_terms(family, terms).unwrap()
}

/// Parses e.g. `"p5 - 10 p3 p1 + 55/3 p3 + 50/3 p1^3"`.
pub fn poly(text: &str) -> Poly {
    let mut out = Poly::zero();
    for (c, fs) in signed_terms(text) {
        let mut subs = Vec::new();
        for f in fs {
            let (s, e) = factor(&f);
            subs.extend(std::iter::repeat_n(s, e as usize));
        }
        out.add_term(OddMonomial::from_subscripts(&subs), c);
    }
    out
}

/// Every set partition of `0..n` that is non-crossing, as lists of blocks.
pub fn noncrossing_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            if is_noncrossing(blocks) {
                go(i + 1, n, blocks, out);
            }
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        go(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

fn is_noncrossing(blocks: &[Vec<usize>]) -> bool {
    for (x, bx) in blocks.iter().enumerate() {
        for by in &blocks[x + 1..] {
            for &a in bx {
                for &c in bx {
                    for &b in by {
                        for &d in by {
                            if a < b && b < c && c < d {
                                return false;
                            }
                            if b < a && a < d && d < c {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// `M_n = sum over non-crossing partitions of prod R_{|block|}`.
pub fn moments_from_cumulants_nc(r: &[Rational], n: usize) -> Rational {
    noncrossing_partitions(n)
        .iter()
        .map(|blocks| blocks.iter().map(|b| r[b.len() - 1].clone()).product::<Rational>())
        .sum()
}

pub mod identities {
    use spin_kerov::measures::{
        biane_cumulant, cauchy_transform, frobenius_phi_series, free_cumulant_from_cauchy, moments_from_cauchy,
        rayleigh_from_super, rayleigh_moments, super_power_sum, transition_moments,
    };
    use spin_kerov::partitions::{double, enumerate, frobenius, power_sums, strict_partitions, PartitionKind};
    use spin_kerov::spin::{
        phi_ratio_series, spin_free_cumulant_poly, super_power_sum_double_poly, symmetrized_cumulant_poly, PhiLogData,
    };
    use spin_kerov::{rat, Series};

    pub type Check = Result<(), String>;

    fn same_through(a: &Series, b: &Series, order: i64) -> bool {
        (0..=order).all(|n| a.coefficient(n).ok() == b.coefficient(n).ok() && a.coefficient(n).is_ok())
    }

    /// `z G(z) = phi(z - 1/2) / phi(z + 1/2)` through `z^{-10}`, `|mu| <= 8`.
    pub fn cauchy_from_frobenius() -> Check {
        for n in 0..=8 {
            for mu in enumerate(n, PartitionKind::All) {
                let zg = cauchy_transform(&mu, 11).shifted(-1);
                let c = frobenius(&mu);
                let num = frobenius_phi_series(&c, &rat(1, 2), 10);
                let den = frobenius_phi_series(&c, &rat(-1, 2), 10);
                let rhs = num.mul(&den.inverse().unwrap()).unwrap();
                if !same_through(&zg, &rhs, 10) {
                    return Err(format!("z G != phi ratio for {mu}"));
                }
            }
        }
        Ok(())
    }

    /// Rayleigh moments from super power sums, `|mu| <= 10`, `n <= 8`.
    pub fn rayleigh_moments_from_super() -> Check {
        for size in 0..=10 {
            for mu in enumerate(size, PartitionKind::All) {
                let direct = rayleigh_moments(&mu, 8);
                let c = frobenius(&mu);
                for n in 2..=8u32 {
                    let via = rayleigh_from_super(&c, n).map_err(|e| e.to_string())?;
                    if &via != direct.get(n as usize) {
                        return Err(format!("Rayleigh moment {n} of {mu}: {via} vs {}", direct.get(n as usize)));
                    }
                }
            }
        }
        Ok(())
    }

    /// Transition moments by the partition sum against the Cauchy transform, `|mu| <= 10`, `n <= 8`.
    pub fn transition_moments_from_rayleigh() -> Check {
        for size in 0..=10 {
            for mu in enumerate(size, PartitionKind::All) {
                let series = moments_from_cauchy(&cauchy_transform(&mu, 10), 8).map_err(|e| e.to_string())?;
                if transition_moments(&mu, 8) != series {
                    return Err(format!("transition moments of {mu}"));
                }
            }
        }
        Ok(())
    }

    /// Super power sums of `D(lambda)` as polynomials in `p_k(lambda)`, `|lambda| <= 10`, `n <= 10`.
    pub fn double_super_power_sums() -> Check {
        let polys: Vec<_> = (1..=10).map(|n| super_power_sum_double_poly(n).unwrap()).collect();
        for size in 0..=10 {
            for lambda in strict_partitions(size) {
                let c = frobenius(&double(&lambda));
                let ps = power_sums(&lambda, 11);
                for (i, poly) in polys.iter().enumerate() {
                    let n = i as u32 + 1;
                    if super_power_sum(&c, n) != poly.eval(&ps).map_err(|e| e.to_string())? {
                        return Err(format!("super power sum {n} of D({lambda})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `G_{D(lambda)}(z) = Phi(z - 1) / (z Phi(z))` through `z^{-10}`, `|lambda| <= 8`.
    pub fn double_cauchy_from_phi() -> Check {
        for size in 0..=8 {
            for lambda in strict_partitions(size) {
                let data = PhiLogData::numeric(&lambda, 6);
                let rhs = phi_ratio_series(&rat(1, 1), &rat(0, 1), 1, 10, &data, None)
                    .map_err(|e| e.to_string())?
                    .shifted(1);
                let g = cauchy_transform(&double(&lambda), 11);
                if !same_through(&g, &rhs, 10) {
                    return Err(format!("Cauchy transform of D({lambda})"));
                }
            }
        }
        Ok(())
    }

    /// Half the cumulants of `Phi(z - 1/2) / (z Phi(z + 1/2))` against the
    /// symmetrized cumulant polynomials, `k <= 8`, `|lambda| <= 8`.
    pub fn symmetrized_cumulants_from_transform() -> Check {
        let polys: Vec<_> = (2..=8).map(|k| symmetrized_cumulant_poly(k).unwrap()).collect();
        for size in 0..=8 {
            for lambda in strict_partitions(size) {
                let data = PhiLogData::numeric(&lambda, 6);
                let ps = power_sums(&lambda, 11);
                for (i, poly) in polys.iter().enumerate() {
                    let k = i as u32 + 2;
                    let g = phi_ratio_series(&rat(1, 2), &rat(-1, 2), 1, k as i64 + 1, &data, None)
                        .map_err(|e| e.to_string())?
                        .shifted(1);
                    let r = free_cumulant_from_cauchy(&g, k).map_err(|e| e.to_string())? * rat(1, 2);
                    if r != poly.eval(&ps).map_err(|e| e.to_string())? {
                        return Err(format!("symmetrized cumulant {k} at {lambda}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `r_{2k}(lambda) = R_{2k}(D(lambda)) / 2`, `|lambda| <= 8`, `k <= 4`.
    pub fn spin_cumulants_from_double() -> Check {
        let polys: Vec<_> = (1..=4).map(|k| spin_free_cumulant_poly(2 * k).unwrap()).collect();
        for size in 0..=8 {
            for lambda in strict_partitions(size) {
                let d = double(&lambda);
                let ps = power_sums(&lambda, 9);
                for (i, poly) in polys.iter().enumerate() {
                    let two_k = 2 * (i as u32 + 1);
                    let half = biane_cumulant(&d, two_k).map_err(|e| e.to_string())? * rat(1, 2);
                    if half != poly.eval(&ps).map_err(|e| e.to_string())? {
                        return Err(format!("spin cumulant {two_k} at {lambda}"));
                    }
                }
            }
        }
        Ok(())
    }
}

pub mod printed {
    /// Ordinary Kerov polynomials `K_k` in `R_2, R_3, ...`.
    pub const ORDINARY: [(u32, &str); 7] = [
        (1, "R2"),
        (2, "R3"),
        (3, "R4 + R2"),
        (4, "R5 + 5 R3"),
        (5, "R6 + 15 R4 + 5 R2^2 + 8 R2"),
        (7, "R8 + 70 R6 + 84 R4 R2 + 56 R3^2 + 14 R2^3 + 469 R4 + 224 R2^2 + 180 R2"),
        (
            9,
            "R10 + 210 R8 + 300 R6 R2 + 480 R5 R3 + 270 R4^2 + 360 R3^2 R2 + 270 R4 R2^2 + 30 R2^4 \
             + 5985 R6 + 10548 R4 R2 + 6714 R3^2 + 2400 R2^3 + 26060 R4 + 14580 R2^2 + 8064 R2",
        ),
    ];

    /// Spin Kerov polynomials in spin free cumulants.
    pub const SPIN: [(u32, &str); 5] = [
        (1, "R2"),
        (3, "R4 + R2"),
        (5, "R6 + 15 R4 + 10 R2^2 + 8 R2"),
        (7, "R8 + 70 R6 + 168 R4 R2 + 56 R2^3 + 469 R4 + 560 R2^2 + 180 R2"),
        (
            9,
            "R10 + 210 R8 + 600 R6 R2 + 540 R4^2 + 1080 R4 R2^2 + 240 R2^4 + 5985 R6 + 23016 R4 R2 \
             + 9120 R2^3 + 26060 R4 + 41628 R2^2 + 8064 R2",
        ),
    ];

    /// Spin characters `p_k` in odd power sums.
    pub const SPIN_CHARACTERS: [(u32, &str); 5] = [
        (1, "p1"),
        (3, "p3 - 3 p1^2 + 2 p1"),
        (5, "p5 - 10 p3 p1 + 55/3 p3 + 50/3 p1^3 - 50 p1^2 + 24 p1"),
        (
            7,
            "p7 - 14 p5 p1 - 7 p3^2 + 77 p5 + 98 p3 p1^2 - 1862/3 p3 p1 - 343/3 p1^4 + 2128/3 p3 \
             + 2744/3 p1^3 - 1764 p1^2 + 720 p1",
        ),
        (
            9,
            "p9 - 18 p7 p1 - 18 p5 p3 + 222 p7 + 162 p5 p1^2 + 162 p3^2 p1 - 2538 p5 p1 - 1026 p3^2 \
             - 972 p3 p1^3 + 37401/5 p5 + 14094 p3 p1^2 + 4374/5 p1^5 - 52704 p3 p1 - 14580 p1^4 \
             + 47492 p3 + 70632 p1^3 - 109584 p1^2 + 40320 p1",
        ),
    ];

    /// Spin free cumulants in odd power sums.
    pub const SPIN_CUMULANTS: [(u32, &str); 5] = [
        (2, "p1"),
        (4, "p3 - 3 p1^2 + p1"),
        (6, "p5 - 10 p3 p1 + 10/3 p3 + 50/3 p1^3 - 15 p1^2 + p1"),
        (8, "p7 - 14 p5 p1 - 7 p3^2 + 7 p5 + 98 p3 p1^2 - 266/3 p3 p1 - 343/3 p1^4 + 7 p3 + 196 p1^3 - 35 p1^2 + p1"),
        (
            10,
            "p9 - 18 p7 p1 - 18 p5 p3 + 12 p7 + 162 p5 p1^2 + 162 p3^2 p1 - 198 p5 p1 - 96 p3^2 \
             - 972 p3 p1^3 + 126/5 p5 + 1674 p3 p1^2 + 4374/5 p1^5 - 330 p3 p1 - 2430 p1^4 + 12 p3 \
             + 810 p1^3 - 63 p1^2 + p1",
        ),
    ];

    /// Cumulants of the symmetrized double.
    pub const SYMMETRIZED_CUMULANTS: [(u32, &str); 2] = [(2, "p1"), (4, "p3 - 3 p1^2 + 1/4 p1")];
}
