//! Dense linear algebra over a prime field GF(p) with `p < 2^32`.

use crate::numtheory::{inv_mod, mul_mod};

pub(crate) type Matrix = Vec<Vec<u64>>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn inv(self, a: u64) -> u64 {
        inv_mod(a, self.p)
    }

    /// Reduced row echelon form in place; returns the pivot columns. Zero rows
    /// are removed.
    pub fn rref(self, rows: &mut Matrix) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, i);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : A v = 0}` for a square or rectangular `A`.
    pub fn nullspace(self, a: &Matrix) -> Matrix {
        let ncols = a.first().map_or(0, Vec::len);
        let mut m = a.clone();
        let pivots = self.rref(&mut m);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; ncols];
                v[f] = 1;
                for (row, &pc) in m.iter().zip(&pivots) {
                    v[pc] = self.sub(0, row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI − A)`, coefficients from degree 0 up,
    /// via reduction to upper Hessenberg form.
    pub fn charpoly(self, a: &Matrix) -> Vec<u64> {
        let n = a.len();
        let mut h = a.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let inv = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let u = self.mul(h[i][m - 1], inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let t = self.mul(u, h[m][c]);
                    h[i][c] = self.sub(h[i][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[m] = self.add(row[m], t);
                }
            }
        }
        // polys[j] is the charpoly of the leading j×j block
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for j in 0..n {
            let prev = &polys[j];
            let mut next = vec![0; j + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[j][j], c));
            }
            let mut sub = 1;
            for i in (0..j).rev() {
                sub = self.mul(sub, h[i + 1][i]);
                let coeff = self.mul(sub, h[i][j]);
                if coeff == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(coeff, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Roots of `poly` in GF(p) by exhaustive evaluation, ascending.
    pub fn roots(self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: Field = Field { p: 13 };

    impl Field {
        fn reduce(self, a: i64) -> u64 {
            a.rem_euclid(self.p as i64) as u64
        }
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        // [[2,1],[1,2]] has charpoly x² − 4x + 3
        let a = vec![vec![2, 1], vec![1, 2]];
        assert_eq!(F.charpoly(&a), vec![3, F.reduce(-4), 1]);
        assert_eq!(F.roots(&F.charpoly(&a)), vec![1, 3]);
        // companion-like 3×3 with a zero subdiagonal entry
        let b = vec![vec![0, 0, 5], vec![1, 0, 0], vec![0, 0, 2]];
        let cp = F.charpoly(&b);
        for x in 0..13 {
            let m: Matrix = b
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, &v)| if i == j { F.sub(x, v) } else { F.sub(0, v) })
                        .collect()
                })
                .collect();
            let singular = !F.nullspace(&m).is_empty();
            assert_eq!(singular, F.eval(&cp, x) == 0, "x = {x}");
        }
    }

    #[test]
    fn nullspace_and_rref() {
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = F.nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = (0..3).fold(0, |acc, i| F.add(acc, F.mul(a[0][i], v[i])));
            assert_eq!(dot, 0);
        }
        let mut m = a.clone();
        assert_eq!(F.rref(&mut m), vec![0]);
        assert_eq!(m.len(), 1);
    }
}
