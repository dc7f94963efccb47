//! Exact linear algebra over the rationals.
//!
//! Rational inputs are scaled row-by-row to integers and reduced with
//! fraction-free (Bareiss) elimination, so every intermediate entry is a minor
//! of the input and divisions are exact. A word-sized modular rank is offered
//! as a one-sided certificate: full rank modulo a prime implies full rank over
//! the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `num/den` in lowest terms with positive denominator.
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Option<Q> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

fn scale_row(row: &[Q]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Row echelon form of an integer matrix produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn bareiss(mut m: Vec<Vec<BigInt>>, ncols: usize) -> Echelon {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                for x in row[c + 1..ncols].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * &prow[c] / &prev;
                    }
                }
            } else {
                let f = row[c].clone();
                for j in c + 1..ncols {
                    let v = &prow[c] * &row[j] - &f * &prow[j];
                    row[j] = v / &prev;
                }
                row[c] = BigInt::zero();
            }
        }
        prev = top[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon { rows: m, pivots }
}

impl Echelon {
    /// Back-substitutes with the variables in `free_values` fixed.
    fn back_substitute(&self, rhs_col: Option<usize>, free: &[(usize, Q)], n: usize) -> Vec<Q> {
        let mut x = vec![Q::zero(); n];
        for (j, v) in free {
            x[*j] = v.clone();
        }
        for (r, &pc) in self.pivots.iter().enumerate().rev() {
            let row = &self.rows[r];
            let mut acc = match rhs_col {
                Some(c) => Q::from_integer(row[c].clone()),
                None => Q::zero(),
            };
            for j in pc + 1..n {
                if !row[j].is_zero() && !x[j].is_zero() {
                    acc -= Q::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[pc] = acc / Q::from_integer(row[pc].clone());
        }
        x
    }
}

/// Rank of an integer matrix.
pub fn rank_int(rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    bareiss(rows, ncols).pivots.len()
}

/// Rank of a small-integer matrix.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank_int(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    rank_int(rows.iter().map(|r| scale_row(r)).collect())
}

/// One solution of `a x = b` (free variables set to zero), or `None` when the
/// system is inconsistent. `a` is given by rows; `ncols` is needed for an
/// empty row set.
pub fn solve(a: &[Vec<Q>], b: &[Q], ncols: usize) -> Option<Vec<Q>> {
    assert_eq!(a.len(), b.len());
    let aug: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r: Vec<Q> = row.clone();
            r.push(bi.clone());
            scale_row(&r)
        })
        .collect();
    let ech = bareiss(aug, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return None;
    }
    Some(ech.back_substitute(Some(ncols), &[], ncols))
}

/// Solves `a x = b` for an integer matrix with rational right-hand side.
pub fn solve_int(a: Vec<Vec<BigInt>>, b: &[Q], ncols: usize) -> Option<Vec<Q>> {
    assert_eq!(a.len(), b.len());
    let aug: Vec<Vec<BigInt>> = a
        .into_iter()
        .zip(b)
        .map(|(row, bi)| {
            let d = bi.denom().clone();
            let mut r: Vec<BigInt> = row.into_iter().map(|x| x * &d).collect();
            r.push(bi.numer().clone());
            r
        })
        .collect();
    let ech = bareiss(aug, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return None;
    }
    Some(ech.back_substitute(Some(ncols), &[], ncols))
}

/// Basis of `{x : a x = 0}`.
pub fn nullspace(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let ech = bareiss(a.iter().map(|r| scale_row(r)).collect(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| ech.back_substitute(None, &[(f, Q::one())], ncols))
        .collect()
}

/// Whether `v` lies in the span of `vectors` (all of the same length).
pub fn in_span(vectors: &[Vec<Q>], v: &[Q]) -> bool {
    let r0 = rank(vectors);
    let mut all = vectors.to_vec();
    all.push(v.to_vec());
    rank(&all) == r0
}

/// Reduces a list of vectors to a basis of its span (row echelon, rational).
pub fn span_basis(vectors: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let ech = bareiss(vectors.iter().map(|r| scale_row(r)).collect(), ncols);
    ech.rows
        .into_iter()
        .map(|r| r.into_iter().map(Q::from_integer).collect())
        .collect()
}

/// Determinant of a square rational matrix.
pub fn det(a: &[Vec<Q>]) -> Q {
    let n = a.len();
    if n == 0 {
        return Q::one();
    }
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        let piv = m[c][c].clone();
        d *= &piv;
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] / &piv;
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    d
}

/// Inverse of a square rational matrix, if it exists.
pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let e: Vec<Q> = (0..n).map(|i| if i == k { Q::one() } else { Q::zero() }).collect();
        let x = solve(a, &e, n)?;
        cols.push(x);
    }
    if rank(a) < n {
        return None;
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// The Mersenne prime 2^61 - 1.
pub const MODULUS: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

pub fn to_mod(x: i64) -> u64 {
    x.rem_euclid(MODULUS as i64) as u64
}

/// Rank of an integer matrix modulo [`MODULUS`]. This is a lower bound for the
/// rank over the rationals.
pub fn rank_mod_p(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| to_mod(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = powmod(m[r][c], MODULUS - 2);
        let (top, rest) = m.split_at_mut(r + 1);
        let prow = &top[r];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mulmod(row[c], inv);
            for j in c..ncols {
                if prow[j] != 0 {
                    row[j] = (row[j] + MODULUS - mulmod(f, prow[j])) % MODULUS;
                }
            }
        }
        r += 1;
    }
    r
}

/// Least common multiple of the denominators of a rational vector.
pub fn common_denominator(v: &[Q]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn is_integral(x: &Q) -> bool {
    x.denom().is_one()
}

pub fn sign(x: &Q) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
