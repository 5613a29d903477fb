//! Smith and Hermite normal forms over the integers.

use super::Matrix;
use crate::{Error, Result};

pub type IntMatrix = Matrix<i64>;

pub fn int_identity(n: usize) -> IntMatrix {
    Matrix::from_fn(n, n, |r, c| i64::from(r == c))
}

pub fn int_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    if a.ncols() != b.nrows() {
        return Err(Error::DimensionMismatch { expected: a.ncols(), got: b.nrows() });
    }
    let mut out = Matrix::filled(a.nrows(), b.ncols(), 0i64);
    for r in 0..a.nrows() {
        for c in 0..b.ncols() {
            let mut acc = 0i64;
            for k in 0..a.ncols() {
                acc = a[(r, k)]
                    .checked_mul(b[(k, c)])
                    .and_then(|p| acc.checked_add(p))
                    .ok_or(Error::Overflow("integer matrix product"))?;
            }
            out[(r, c)] = acc;
        }
    }
    Ok(out)
}

fn ovf<T>(x: Option<T>) -> Result<T> {
    x.ok_or(Error::Overflow("integer elimination"))
}

/// row_dst -= q · row_src
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for c in 0..m.ncols() {
        let v = ovf(m[(src, c)].checked_mul(q).and_then(|p| m[(dst, c)].checked_sub(p)))?;
        m[(dst, c)] = v;
    }
    Ok(())
}

/// col_dst -= q · col_src
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: i64) -> Result<()> {
    if q == 0 {
        return Ok(());
    }
    for r in 0..m.nrows() {
        let v = ovf(m[(r, src)].checked_mul(q).and_then(|p| m[(r, dst)].checked_sub(p)))?;
        m[(r, dst)] = v;
    }
    Ok(())
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for c in 0..m.ncols() {
        m[(r, c)] = -m[(r, c)];
    }
}

/// Smith normal form: returns (S, U, V) with U·A·V = S, S diagonal with
/// nonnegative entries each dividing the next, and U, V unimodular.
pub fn smith_normal_form(a: &IntMatrix) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut s = a.clone();
    let mut u = int_identity(m);
    let mut v = int_identity(n);

    for t in 0..m.min(n) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for r in t..m {
            for c in t..n {
                let x = s[(r, c)];
                if x != 0 && best.is_none_or(|(br, bc)| x.unsigned_abs() < s[(br, bc)].unsigned_abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        s.swap_rows(t, pr);
        u.swap_rows(t, pr);
        s.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            let mut dirty = false;
            for r in t + 1..m {
                let q = s[(r, t)].div_euclid(s[(t, t)]);
                row_axpy(&mut s, r, t, q)?;
                row_axpy(&mut u, r, t, q)?;
                if s[(r, t)] != 0 {
                    dirty = true;
                }
            }
            for c in t + 1..n {
                let q = s[(t, c)].div_euclid(s[(t, t)]);
                col_axpy(&mut s, c, t, q)?;
                col_axpy(&mut v, c, t, q)?;
                if s[(t, c)] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // enforce divisibility of the trailing block by the pivot
                let bad = (t + 1..m)
                    .flat_map(|r| (t + 1..n).map(move |c| (r, c)))
                    .find(|&(r, c)| s[(r, c)] % s[(t, t)] != 0);
                match bad {
                    None => break,
                    Some((r, _)) => {
                        row_axpy(&mut s, t, r, -1)?;
                        row_axpy(&mut u, t, r, -1)?;
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let mut best = (t, t);
            for r in t + 1..m {
                if s[(r, t)] != 0 && s[(r, t)].unsigned_abs() < s[best].unsigned_abs() {
                    best = (r, t);
                }
            }
            for c in t + 1..n {
                if s[(t, c)] != 0 && s[(t, c)].unsigned_abs() < s[best].unsigned_abs() {
                    best = (t, c);
                }
            }
            if best.0 != t {
                s.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
            } else if best.1 != t {
                s.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
            }
        }
        if s[(t, t)] < 0 {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
    }
    Ok((s, u, v))
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Output rows are nonzero, in echelon form with positive pivots, and the
/// entries above each pivot are reduced into [0, pivot).
pub fn hermite_normal_form(rows: Vec<Vec<i64>>, cols: usize) -> Result<Vec<Vec<i64>>> {
    let mut m = Matrix::from_rows_checked(rows, cols)?;
    let nrows = m.nrows();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        // Euclid on column c among rows r..
        loop {
            let mut best: Option<usize> = None;
            for i in r..nrows {
                if m[(i, c)] != 0 && best.is_none_or(|b| m[(i, c)].unsigned_abs() < m[(b, c)].unsigned_abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap_rows(r, b);
            let mut done = true;
            for i in r + 1..nrows {
                if m[(i, c)] != 0 {
                    let q = m[(i, c)].div_euclid(m[(r, c)]);
                    row_axpy(&mut m, i, r, q)?;
                    if m[(i, c)] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[(r, c)] == 0 {
            continue;
        }
        if m[(r, c)] < 0 {
            negate_row(&mut m, r);
        }
        for i in 0..r {
            let q = m[(i, c)].div_euclid(m[(r, c)]);
            row_axpy(&mut m, i, r, q)?;
        }
        pivots.push(c);
        r += 1;
    }
    Ok(m.rows_iter().take(r).map(<[i64]>::to_vec).collect())
}

/// Determinant of a small integer matrix (fraction-free Bareiss).
pub fn int_det(a: &IntMatrix) -> Result<i64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "square matrix");
    if n == 0 {
        return Ok(1);
    }
    let mut m = a.clone();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n - 1 {
        if m[(k, k)] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[(i, k)] != 0) else {
                return Ok(0);
            };
            m.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = ovf(m[(i, j)]
                    .checked_mul(m[(k, k)])
                    .and_then(|x| m[(i, k)].checked_mul(m[(k, j)]).and_then(|y| x.checked_sub(y))))?;
                m[(i, j)] = num / prev;
            }
        }
        prev = m[(k, k)];
    }
    Ok(sign * m[(n - 1, n - 1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect(), cols)
    }

    fn diag_of(s: &IntMatrix) -> Vec<i64> {
        (0..s.nrows().min(s.ncols())).map(|i| s[(i, i)]).collect()
    }

    #[test]
    fn snf_examples() {
        let (s, _, _) = smith_normal_form(&im(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(diag_of(&s), vec![1, 6]);
        let (s, _, _) = smith_normal_form(&im(&[&[0, 0], &[0, 0]])).unwrap();
        assert_eq!(diag_of(&s), vec![0, 0]);
        let (s, _, _) = smith_normal_form(&im(&[&[2, 4], &[4, 8]])).unwrap();
        assert_eq!(diag_of(&s), vec![2, 0]);
    }

    /// Invariant factors via determinantal divisors: d_k = gcd of all k×k
    /// minors, and sₖ = d_k / d_{k−1}.
    fn invariant_factors_by_minors(a: &IntMatrix) -> Vec<i64> {
        use num_integer::Integer;
        let (m, n) = (a.nrows(), a.ncols());
        let mut out = Vec::new();
        let mut prev = 1i64;
        for k in 1..=m.min(n) {
            let mut g = 0i64;
            for rows in subsets(m, k) {
                for cols in subsets(n, k) {
                    let minor = Matrix::from_fn(k, k, |r, c| a[(rows[r], cols[c])]);
                    g = g.gcd(&int_det(&minor).unwrap());
                }
            }
            if g == 0 {
                out.push(0);
                prev = 0;
            } else {
                out.push(g / prev);
                prev = g;
            }
        }
        out
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for last in k - 1..n {
            for mut s in subsets(last, k - 1) {
                s.push(last);
                out.push(s);
            }
        }
        out
    }

    #[test]
    fn hnf_is_canonical() {
        let a = hermite_normal_form(vec![vec![2, 4], vec![1, 3]], 2).unwrap();
        let b = hermite_normal_form(vec![vec![1, 3], vec![3, 7], vec![0, 2]], 2).unwrap();
        assert_eq!(a, vec![vec![1, 1], vec![0, 2]]);
        assert_eq!(a, b);
    }

    fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..4, 1usize..4).prop_flat_map(|(m, n)| {
            proptest::collection::vec(-6i64..7, m * n)
                .prop_map(move |d| Matrix::from_fn(m, n, |r, c| d[r * n + c]))
        })
    }

    proptest! {
        #[test]
        fn snf_reconstructs(a in arb_matrix()) {
            let (s, u, v) = smith_normal_form(&a).unwrap();
            prop_assert_eq!(int_mul(&int_mul(&u, &a).unwrap(), &v).unwrap(), s.clone());
            prop_assert_eq!(int_det(&u).unwrap().abs(), 1);
            prop_assert_eq!(int_det(&v).unwrap().abs(), 1);
            for r in 0..s.nrows() {
                for c in 0..s.ncols() {
                    if r != c {
                        prop_assert_eq!(s[(r, c)], 0);
                    }
                }
            }
            let d = diag_of(&s);
            for w in d.windows(2) {
                prop_assert!(w[0] >= 0 && (w[0] == 0 && w[1] == 0 || w[0] != 0 && w[1] % w[0] == 0));
            }
            prop_assert_eq!(d, invariant_factors_by_minors(&a));
        }
    }
}
