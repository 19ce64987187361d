//! Independent oracles for the integration tests. None of these reuse the
//! library's algorithms: determinants are permutation sums or unmemoized
//! cofactor expansions, Pfaffians are sums over perfect matchings with crossing
//! signs, triangulations come from a backtracking search over all diagonals.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rotundus::{MultiPoly, Ring};

/// `(permutation, sign)` for every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), sign));
            return;
        }
        // choosing the k-th smallest unused value contributes k inversions
        let mut rank = 0;
        for v in 0..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            rec(prefix, used, if rank % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            used[v] = false;
            rank += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], 1, &mut out);
    out
}

pub fn leibniz_det<T: Ring>(ctx: &T::Ctx, rows: &[Vec<T>]) -> T {
    let n = rows.len();
    let mut acc = T::zero(ctx);
    for (perm, sign) in permutations(n) {
        let mut term = T::one(ctx);
        for (i, &j) in perm.iter().enumerate() {
            term = term.times(&rows[i][j]);
            if term.is_zero() {
                break;
            }
        }
        acc = if sign > 0 { acc.plus(&term) } else { acc.minus(&term) };
    }
    acc
}

/// Plain recursive first-row cofactor expansion, skipping zero entries.
pub fn cofactor_det<T: Ring>(ctx: &T::Ctx, rows: &[Vec<T>]) -> T {
    let n = rows.len();
    if n == 0 {
        return T::one(ctx);
    }
    let mut acc = T::zero(ctx);
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = rows[0][j].times(&cofactor_det(ctx, &minor));
        acc = if j % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
    }
    acc
}

/// Sum over perfect matchings of `0..n`, each signed by its crossing parity.
pub fn matching_pfaffian<T: Ring>(ctx: &T::Ctx, rows: &[Vec<T>]) -> T {
    fn rec<T: Ring>(ctx: &T::Ctx, rows: &[Vec<T>], free: &mut Vec<bool>, pairs: &mut Vec<(usize, usize)>, acc: &mut T) {
        let Some(i) = free.iter().position(|&f| f) else {
            let crossings = pairs
                .iter()
                .flat_map(|&(a, b)| pairs.iter().map(move |&(c, d)| (a, b, c, d)))
                .filter(|&(a, b, c, d)| a < c && c < b && b < d)
                .count();
            let mut term = T::one(ctx);
            for &(a, b) in pairs.iter() {
                term = term.times(&rows[a][b]);
            }
            *acc = if crossings % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
            return;
        };
        free[i] = false;
        for j in i + 1..free.len() {
            if free[j] && !rows[i][j].is_zero() {
                free[j] = false;
                pairs.push((i, j));
                rec(ctx, rows, free, pairs, acc);
                pairs.pop();
                free[j] = true;
            }
        }
        free[i] = true;
    }
    let mut acc = T::zero(ctx);
    rec(ctx, rows, &mut vec![true; rows.len()], &mut Vec::new(), &mut acc);
    acc
}

/// Tridiagonal matrix with the given diagonal and unit off-diagonals.
pub fn tridiagonal_rows<T: Ring>(ctx: &T::Ctx, diag: &[T]) -> Vec<Vec<T>> {
    let n = diag.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        diag[i].clone()
                    } else if i.abs_diff(j) == 1 {
                        T::one(ctx)
                    } else {
                        T::zero(ctx)
                    }
                })
                .collect()
        })
        .collect()
}

/// `K_n` as the cofactor-expansion determinant of the tridiagonal matrix.
pub fn continuant_oracle<T: Ring>(ctx: &T::Ctx, diag: &[T]) -> T {
    cofactor_det(ctx, &tridiagonal_rows(ctx, diag))
}

pub fn rotundus_oracle<T: Ring>(ctx: &T::Ctx, a: &[T]) -> T {
    let n = a.len();
    if n == 1 {
        return a[0].clone();
    }
    continuant_oracle(ctx, a).minus(&continuant_oracle(ctx, &a[1..n - 1]))
}

/// The 2n x 2n matrix [[E, C], [-C, E]] written out entry by entry.
pub fn omega_rows(a: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut m = vec![vec![BigInt::from(0); 2 * n]; 2 * n];
    for i in 0..n {
        m[i][n + i] = a[i].clone();
        m[n + i][i] = -a[i].clone();
        if i + 1 < n {
            for (r, c) in [(i, n + i + 1), (i + 1, n + i)] {
                m[r][c] = BigInt::from(1);
                m[c][r] = BigInt::from(-1);
            }
        }
    }
    if n >= 2 {
        for off in [0, n] {
            m[off][off + n - 1] += 1;
            m[off + n - 1][off] -= 1;
        }
    }
    m
}

/// Matchings of the path on `n` vertices, by testing every edge subset.
pub fn count_path_matchings(n: usize) -> usize {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    count_matchings(&edges)
}

/// Matchings of the cycle on `n` vertices; two parallel edges when `n = 2`.
pub fn count_cycle_matchings(n: usize) -> usize {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 2 {
        edges.push((n - 1, 0));
    }
    count_matchings(&edges)
}

fn count_matchings(edges: &[(usize, usize)]) -> usize {
    (0u32..1 << edges.len())
        .filter(|mask| {
            let mut seen = BTreeSet::new();
            edges
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .all(|(_, &(u, v))| seen.insert(u) && seen.insert(v))
        })
        .count()
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// All maximal non-crossing diagonal sets of the convex n-gon.
pub fn brute_triangulations(n: usize) -> Vec<Vec<(usize, usize)>> {
    let diagonals: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == n - 1))
        .collect();
    fn rec(
        diagonals: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        need: usize,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if chosen.len() == need {
            out.push(chosen.clone());
            return;
        }
        for k in start..diagonals.len() {
            let d = diagonals[k];
            if chosen.iter().all(|&c| !crosses(c, d)) {
                chosen.push(d);
                rec(diagonals, k + 1, chosen, need, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&diagonals, 0, &mut Vec::new(), n.saturating_sub(3), &mut out);
    out
}

/// Per-vertex triangle counts, from the triples whose sides are all edges.
pub fn quiddity_by_triangles(n: usize, diagonals: &[(usize, usize)]) -> Vec<i64> {
    let joined = |i: usize, j: usize| {
        let (i, j) = (i.min(j), i.max(j));
        j - i == 1 || (i == 0 && j == n - 1) || diagonals.contains(&(i, j))
    };
    let mut q = vec![0i64; n];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if joined(i, j) && joined(j, k) && joined(i, k) {
                    q[i] += 1;
                    q[j] += 1;
                    q[k] += 1;
                }
            }
        }
    }
    q
}

pub fn is_centrally_symmetric(two_n: usize, diagonals: &[(usize, usize)]) -> bool {
    let half = two_n / 2;
    diagonals.iter().all(|&(i, j)| {
        let (a, b) = ((i + half) % two_n, (j + half) % two_n);
        diagonals.contains(&(a.min(b), a.max(b)))
    })
}

pub fn min_rotation(v: &[i64]) -> Vec<i64> {
    (0..v.len())
        .map(|k| v[k..].iter().chain(&v[..k]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Rotation classes of half quiddities of centrally symmetric triangulations.
pub fn half_quiddity_classes(n: usize) -> BTreeSet<Vec<i64>> {
    brute_triangulations(2 * n)
        .into_iter()
        .filter(|d| is_centrally_symmetric(2 * n, d))
        .map(|d| min_rotation(&quiddity_by_triangles(2 * n, &d)[..n]))
        .collect()
}

pub fn catalan(k: usize) -> usize {
    (0..k).fold(1usize, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

pub fn big(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

/// Parse a polynomial written as `a_1a_2-2` or `a1*a2 - 2`.
pub fn parse_poly(arity: usize, text: &str) -> MultiPoly {
    let compact: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '_').collect();
    let mut terms = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (term, tail) = body.split_at(end);
        rest = tail;
        let digits: String = term.chars().take_while(char::is_ascii_digit).collect();
        let mut coeff = if digits.is_empty() { 1 } else { digits.parse::<i64>().unwrap() };
        coeff *= sign;
        let mut exps = vec![0u32; arity];
        for factor in term[digits.len()..].split('a').skip(1) {
            let (var, pow) = factor.split_once('^').unwrap_or((factor, "1"));
            exps[var.parse::<usize>().unwrap() - 1] += pow.parse::<u32>().unwrap();
        }
        terms.push((BigInt::from(coeff), exps));
    }
    MultiPoly::from_terms(arity, terms).unwrap()
}
