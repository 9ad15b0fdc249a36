//! Dense matrices over a field: determinants and characteristic polynomials.

use crate::field::{Elem, Field};

pub type Matrix = Vec<Vec<Elem>>;

/// Determinant by Gaussian elimination with row pivoting.
pub fn det(f: &Field, m: &Matrix) -> Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut d = Elem::ONE;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Elem::ZERO;
        };
        if piv != col {
            a.swap(piv, col);
            d = f.neg(d);
        }
        let pv = a[col][col];
        d = f.mul(d, pv);
        let inv = f.inv(pv).expect("pivot is nonzero");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = f.mul(a[r][col], inv);
            for c in col..n {
                let t = f.mul(factor, a[col][c]);
                a[r][c] = f.sub(a[r][c], t);
            }
        }
    }
    d
}

/// Reduce to upper Hessenberg form by similarity transforms.
pub fn hessenberg(f: &Field, m: &Matrix) -> Matrix {
    let n = m.len();
    let mut a = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !a[i][j].is_zero()) else {
            continue;
        };
        if piv != j + 1 {
            a.swap(piv, j + 1);
            for row in a.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = f.inv(a[j + 1][j]).expect("pivot is nonzero");
        for k in j + 2..n {
            let u = f.mul(a[k][j], inv);
            if u.is_zero() {
                continue;
            }
            // row_k -= u·row_{j+1}, then col_{j+1} += u·col_k
            for c in 0..n {
                let t = f.mul(u, a[j + 1][c]);
                a[k][c] = f.sub(a[k][c], t);
            }
            for row in a.iter_mut() {
                let t = f.mul(u, row[k]);
                row[j + 1] = f.add(row[j + 1], t);
            }
        }
    }
    a
}

/// `det(xI − M)` as an ascending coefficient list (monic, length n+1).
pub fn charpoly(f: &Field, m: &Matrix) -> Vec<Elem> {
    let n = m.len();
    let h = hessenberg(f, m);
    // p[k] = charpoly of the leading k×k block
    let mut p: Vec<Vec<Elem>> = vec![vec![Elem::ONE]];
    for k in 1..=n {
        let hk = h[k - 1][k - 1];
        // (x − h_kk)·p[k−1]
        let prev = &p[k - 1];
        let mut next = vec![Elem::ZERO; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(hk, c));
        }
        // − Σ_{i<k} h_{i,k} (Π_{j=i+1}^{k−1} h_{j,j−1}) p[i]   (0-based rows i..)
        let mut prod = Elem::ONE;
        for i in (0..k - 1).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            let coef = f.mul(h[i][k - 1], prod);
            if coef.is_zero() {
                continue;
            }
            for (t, &c) in p[i].iter().enumerate() {
                next[t] = f.sub(next[t], f.mul(coef, c));
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use proptest::prelude::*;

    fn eval(f: &Field, c: &[Elem], x: Elem) -> Elem {
        c.iter().rev().fold(Elem::ZERO, |acc, &a| f.add(f.mul(acc, x), a))
    }

    /// Oracle: det by cofactor expansion.
    fn det_cofactor(f: &Field, m: &Matrix) -> Elem {
        let n = m.len();
        if n == 0 {
            return Elem::ONE;
        }
        let mut acc = Elem::ZERO;
        for j in 0..n {
            let minor: Matrix = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            let term = f.mul(m[0][j], det_cofactor(f, &minor));
            acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
        }
        acc
    }

    proptest! {
        #[test]
        fn det_matches_cofactor(vals in prop::collection::vec(0u32..9, 25)) {
            let f = Field::new(3, 2).unwrap();
            let m: Matrix = vals.chunks(5).map(|r| r.iter().map(|&v| Elem(v)).collect()).collect();
            prop_assert_eq!(det(&f, &m), det_cofactor(&f, &m));
        }

        #[test]
        fn charpoly_matches_pointwise_det(vals in prop::collection::vec(0u32..7, 36)) {
            let f = Field::new(7, 1).unwrap();
            let m: Matrix = vals.chunks(6).map(|r| r.iter().map(|&v| Elem(v)).collect()).collect();
            let cp = charpoly(&f, &m);
            prop_assert_eq!(cp.len(), 7);
            prop_assert_eq!(cp[6], Elem::ONE);
            for c in f.elements() {
                let shifted: Matrix = (0..6).map(|i| (0..6).map(|j| {
                    let d = if i == j { c } else { Elem::ZERO };
                    f.sub(d, m[i][j])
                }).collect()).collect();
                prop_assert_eq!(eval(&f, &cp, c), det(&f, &shifted));
            }
        }
    }

    #[test]
    fn identity_and_empty() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(det(&f, &vec![]), Elem::ONE);
        let id: Matrix = (0..3).map(|i| (0..3).map(|j| Elem((i == j) as u32)).collect()).collect();
        assert_eq!(det(&f, &id), Elem::ONE);
        // (x−1)^3 = x^3 − 3x^2 + 3x − 1
        assert_eq!(charpoly(&f, &id), vec![Elem(4), Elem(3), Elem(2), Elem(1)]);
    }
}
