//! Exact rational parsing and fraction-free linear algebra.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Parse `"p"`, `"-p"` or `"p/q"` into a normalized rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("bad rational numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("bad rational denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

/// Render as `"p"` or `"p/q"`.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Scale a rational vector by the lcm of its denominators, giving a primitive
/// integer vector with the same span.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Rank of the integer matrix whose rows are `rows`, by Bareiss fraction-free
/// elimination. Every intermediate entry is a minor of the input, so each
/// division is exact.
pub fn int_rank(rows: &[&[BigInt]]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.to_vec()).collect();
    let m = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..width {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..width {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix given by rows.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let refs: Vec<&[BigInt]> = ints.iter().map(|r| r.as_slice()).collect();
    int_rank(&refs)
}

/// Reduced row echelon form over the rationals; returns pivot columns.
pub fn rref(a: &mut [Vec<BigRational>]) -> Vec<usize> {
    let m = a.len();
    if m == 0 {
        return Vec::new();
    }
    let width = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - p * &f;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Solve `a x = b` exactly; `None` if inconsistent. Free variables are set to 0.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug[row][n].clone();
    }
    Some(x)
}

pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// True if `u` and `v` are nonzero scalar multiples of each other.
pub fn proportional(u: &[BigRational], v: &[BigRational]) -> bool {
    if u.len() != v.len() || is_zero_vector(u) || is_zero_vector(v) {
        return false;
    }
    let rows = vec![u.to_vec(), v.to_vec()];
    rational_rank(&rows) == 1
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn is_negative(q: &BigRational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_rank(rows: &[Vec<BigRational>]) -> usize {
        let mut a = rows.to_vec();
        rref(&mut a).len()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational(" 7 ").unwrap(), rat_int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(6, 3)), "2");
    }

    #[test]
    fn bareiss_simple() {
        let rows: Vec<Vec<BigInt>> = vec![
            vec![1.into(), 2.into(), 3.into()],
            vec![2.into(), 4.into(), 6.into()],
            vec![0.into(), 1.into(), 1.into()],
        ];
        let refs: Vec<&[BigInt]> = rows.iter().map(|r| r.as_slice()).collect();
        assert_eq!(int_rank(&refs), 2);
    }

    #[test]
    fn solve_and_inconsistent() {
        let a = vec![vec![rat_int(1), rat_int(1)], vec![rat_int(1), rat_int(-1)]];
        let x = solve(&a, &[rat_int(3), rat_int(1)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(1)]);
        let a = vec![vec![rat_int(1), rat_int(1)], vec![rat_int(2), rat_int(2)]];
        assert!(solve(&a, &[rat_int(1), rat_int(3)]).is_none());
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_elimination(
            entries in proptest::collection::vec((-4i64..5, 1i64..4), 1..=20),
            width in 1usize..5,
        ) {
            let rows: Vec<Vec<BigRational>> = entries
                .chunks(width)
                .filter(|c| c.len() == width)
                .map(|c| c.iter().map(|&(n, d)| rat(n, d)).collect())
                .collect();
            prop_assume!(!rows.is_empty());
            prop_assert_eq!(rational_rank(&rows), naive_rank(&rows));
        }
    }
}
