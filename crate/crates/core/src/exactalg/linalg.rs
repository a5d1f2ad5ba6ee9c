//! Small dense linear algebra over a field: determinants and null spaces.

use super::field::Field;

/// Determinant by Gaussian elimination. Empty matrix has determinant 1.
pub fn determinant<F: Field>(mut m: Vec<Vec<F>>, tag: &F::Tag) -> F {
    let n = m.len();
    let mut det = F::one(tag);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return F::zero(tag);
        };
        if pivot != col {
            m.swap(pivot, col);
            det = det.negate();
        }
        let pv = m[col][col].clone();
        det = det.times(&pv);
        let inv = pv.inverse().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].times(&inv);
            for c in col..n {
                let v = m[col][c].times(&factor);
                m[r][c] = m[r][c].minus(&v);
            }
        }
    }
    det
}

/// Basis of `{x : A x = 0}` for a `rows x cols` matrix.
pub fn null_space<F: Field>(mut a: Vec<Vec<F>>, cols: usize, tag: &F::Tag) -> Vec<Vec<F>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inverse().expect("nonzero pivot");
        for k in 0..cols {
            a[r][k] = a[r][k].times(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..cols {
                    let v = a[r][k].times(&f);
                    a[i][k] = a[i][k].minus(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(tag); cols];
            v[fc] = F::one(tag);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = a[row][fc].negate();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Q;
    use crate::exactalg::rational::{q, Rational};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect()
    }

    #[test]
    fn det_small() {
        assert_eq!(determinant(m(&[&[1, 2], &[3, 4]]), &Q), q(-2, 1));
        assert_eq!(determinant(m(&[&[0, 1], &[1, 0]]), &Q), q(-1, 1));
        assert_eq!(determinant(m(&[&[1, 2], &[2, 4]]), &Q), q(0, 1));
    }

    #[test]
    fn null_space_rank_deficient() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = null_space(a.clone(), 3, &Q);
        assert_eq!(ns.len(), 1);
        for row in &a {
            let dot = row.iter().zip(&ns[0]).fold(q(0, 1), |s, (x, y)| s + x * y);
            assert!(dot.is_zero());
        }
    }
}
