//! Test-only oracles. Nothing here calls into the squaring, elimination or
//! basis code of the library; polynomials are plain maps from sorted index
//! lists to integer coefficients and are reduced mod 2 only at the end.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use ddb_sphere::charclass::{Mod2Poly, Monomial, SWRing};

pub type IntPoly = HashMap<Vec<u32>, i64>;

/// Exact generalized binomial coefficient `C(n, k)` for small arguments.
pub fn binomial(n: i64, k: u64) -> i128 {
    let mut c: i128 = 1;
    for i in 0..k as i128 {
        c = c * (n as i128 - i) / (i + 1);
    }
    c
}

/// Oriented truncated model: `w_0 = 1`, `w_1 = 0`, `w_a = 0` above `m`.
pub fn sw_factor(a: u32, m: u32) -> Option<Vec<u32>> {
    match a {
        0 => Some(vec![]),
        1 => None,
        a if a > m => None,
        a => Some(vec![a]),
    }
}

fn mul_mono(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

pub fn mul(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (a, ca) in p {
        for (b, cb) in q {
            *out.entry(mul_mono(a, b)).or_insert(0) += ca * cb;
        }
    }
    out
}

fn add_into(acc: &mut IntPoly, p: &IntPoly) {
    for (m, c) in p {
        *acc.entry(m.clone()).or_insert(0) += c;
    }
}

/// Wu formula with exact integer binomials.
pub fn naive_sq_gen(i: u32, j: u32, m: u32) -> IntPoly {
    let mut out = IntPoly::new();
    for s in 0..=i {
        let c = binomial(j as i64 + s as i64 - i as i64 - 1, s as u64);
        if c == 0 {
            continue;
        }
        if let (Some(a), Some(b)) = (sw_factor(i - s, m), sw_factor(j + s, m)) {
            *out.entry(mul_mono(&a, &b)).or_insert(0) += (c.rem_euclid(2)) as i64;
        }
    }
    out
}

/// Cartan formula applied by full recursion over the factor list.
pub fn naive_sq_mono(i: u32, factors: &[u32], m: u32) -> IntPoly {
    match factors.split_first() {
        None => {
            let mut one = IntPoly::new();
            if i == 0 {
                one.insert(vec![], 1);
            }
            one
        }
        Some((&g, rest)) => {
            let mut out = IntPoly::new();
            for a in 0..=i {
                let head = naive_sq_gen(a, g, m);
                if head.values().all(|c| c % 2 == 0) {
                    continue;
                }
                let tail = naive_sq_mono(i - a, rest, m);
                add_into(&mut out, &mul(&head, &tail));
            }
            reduce(&out)
        }
    }
}

pub fn reduce(p: &IntPoly) -> IntPoly {
    p.iter().filter(|(_, c)| c.rem_euclid(2) == 1).map(|(m, _)| (m.clone(), 1)).collect()
}

pub fn naive_sq(i: u32, p: &IntPoly, m: u32) -> IntPoly {
    let mut out = IntPoly::new();
    for (mono, c) in reduce(p) {
        let piece = naive_sq_mono(i, &mono, m);
        for (k, v) in piece {
            *out.entry(k).or_insert(0) += v * c;
        }
    }
    reduce(&out)
}

pub fn naive_sq_word(word: &[u32], p: &IntPoly, m: u32) -> IntPoly {
    let mut cur = p.clone();
    for &i in word.iter().rev() {
        cur = naive_sq(i, &cur, m);
    }
    cur
}

pub fn gen(j: u32) -> IntPoly {
    IntPoly::from([(vec![j], 1)])
}

/// Set of monomials (as sorted index lists) with odd coefficient.
pub fn support(p: &IntPoly) -> BTreeSet<Vec<u32>> {
    reduce(p).into_keys().collect()
}

pub fn lib_support(p: &Mod2Poly) -> BTreeSet<Vec<u32>> {
    p.terms().map(|m| m.factors().to_vec()).collect()
}

pub fn to_lib(p: &IntPoly, ring: SWRing) -> Mod2Poly {
    Mod2Poly::from_monomials(ring, support(p).into_iter().map(Monomial::from_factors)).unwrap()
}

/// Exponent-vector enumeration of all monomials of degree `d` in `w_lo..w_hi`.
pub fn brute_monomials(lo: u32, hi: u32, d: u32) -> Vec<Vec<u32>> {
    fn go(g: u32, hi: u32, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if g > hi {
            if rest == 0 {
                let mut v = cur.clone();
                v.sort_unstable();
                out.push(v);
            }
            return;
        }
        let mut e = 0;
        while e * g <= rest {
            for _ in 0..e {
                cur.push(g);
            }
            go(g + 1, hi, rest - e * g, cur, out);
            for _ in 0..e {
                cur.pop();
            }
            e += 1;
        }
    }
    let mut out = Vec::new();
    go(lo, hi, d, &mut Vec::new(), &mut out);
    out
}

/// Coefficient of `x^d` in `prod_{i=lo}^{hi} 1 / (1 - x^i)`, by multiplying
/// truncated geometric series.
pub fn partition_count(lo: u32, hi: u32, d: u32) -> u64 {
    let d = d as usize;
    let mut series = vec![0u64; d + 1];
    series[0] = 1;
    for i in lo as usize..=hi as usize {
        let geometric: Vec<u64> = (0..=d).map(|n| u64::from(n % i == 0)).collect();
        let mut next = vec![0u64; d + 1];
        for (a, &x) in series.iter().enumerate() {
            for (b, &y) in geometric.iter().enumerate().take(d + 1 - a) {
                next[a + b] += x * y;
            }
        }
        series = next;
    }
    series[d]
}

/// Rank over the two-element field of dense 0/1 rows.
pub fn dense_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dense membership test in the oriented ring of rank `m`: is `query` (homogeneous
/// of degree `d`) in the span of `{g * mu}` over the given generators?
pub fn dense_member(query: &IntPoly, gens: &[IntPoly], d: u32, m: u32) -> bool {
    let basis = brute_monomials(2, m, d);
    let col: HashMap<&Vec<u32>, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let dense = |p: &IntPoly| {
        let mut row = vec![0u8; basis.len()];
        for mono in support(p) {
            row[col[&mono]] ^= 1;
        }
        row
    };
    let mut rows = Vec::new();
    for g in gens {
        let g = reduce(g);
        let Some(gdeg) = g.keys().next().map(|k| k.iter().sum::<u32>()) else {
            continue;
        };
        if gdeg > d {
            continue;
        }
        for mu in brute_monomials(2, m, d - gdeg) {
            rows.push(dense(&mul(&g, &IntPoly::from([(mu, 1)]))));
        }
    }
    let without = dense_rank(rows.clone());
    rows.push(dense(query));
    dense_rank(rows) == without
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Invariant factors of a 2x2 integer matrix: `d1 = gcd(entries)`, `d1 d2 = |det|`.
pub fn snf2_oracle(m: [[i64; 2]; 2]) -> Vec<i64> {
    let g = gcd(gcd(m[0][0], m[0][1]), gcd(m[1][0], m[1][1]));
    if g == 0 {
        return vec![];
    }
    let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs();
    if det == 0 {
        vec![g]
    } else {
        vec![g, det / g]
    }
}
