use std::fmt;

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| self.row(i).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&i| a[i][k] != 0) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        if n == 0 {
            1
        } else {
            sign * a[n - 1][n - 1]
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i64) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] += k * v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i64) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] += k * v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// `u * m * v == s` with `u`, `v` unimodular and `s` diagonal, `s_i | s_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `s_0, s_1, ...` up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.s.rows.min(self.s.cols))
            .map(|i| self.s[(i, i)])
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|&&d| d != 0).count()
    }
}

/// Smith normal form with a fixed pivoting rule: the nonzero entry of least
/// absolute value (first in row-major order) becomes the pivot, then the
/// pivot column is cleared before the pivot row. Diagonal entries are made
/// nonnegative.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);

    for t in 0..n {
        loop {
            let Some((pi, pj)) = smallest_entry(&s, t) else {
                return SmithForm { u, s, v };
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = s[(t, t)];
            for i in t + 1..s.rows {
                let q = s[(i, t)] / pivot;
                if q != 0 {
                    s.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
            }
            for j in t + 1..s.cols {
                let q = s[(t, j)] / pivot;
                if q != 0 {
                    s.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
            }

            let residue = (t + 1..s.rows).any(|i| s[(i, t)] != 0)
                || (t + 1..s.cols).any(|j| s[(t, j)] != 0);
            if residue {
                continue;
            }

            // The pivot must divide the remaining block; otherwise pull an
            // offending row up and reduce again.
            let offender = (t + 1..s.rows)
                .find(|&i| (t + 1..s.cols).any(|j| s[(i, j)] % pivot != 0));
            match offender {
                Some(i) => {
                    s.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if s[(t, t)] < 0 {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, s, v }
}

fn smallest_entry(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for i in t..s.rows {
        for j in t..s.cols {
            let a = s[(i, j)].abs();
            if a != 0 && best.is_none_or(|(b, _, _)| a < b) {
                best = Some((a, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(m);
        assert_eq!(f.u.mul(m).mul(&f.v), f.s, "U*M*V != S for\n{m}");
        assert_eq!(f.u.determinant().abs(), 1);
        assert_eq!(f.v.determinant().abs(), 1);
        for i in 0..f.s.rows() {
            for j in 0..f.s.cols() {
                if i != j {
                    assert_eq!(f.s[(i, j)], 0);
                }
            }
        }
        let d = f.diagonal();
        assert!(d.iter().all(|&x| x >= 0));
        for w in d.windows(2) {
            if w[0] == 0 {
                assert_eq!(w[1], 0);
            } else {
                assert_eq!(w[1] % w[0], 0, "divisibility chain broken: {d:?}");
            }
        }
        f
    }

    #[test]
    fn unit_pivot_row() {
        let m = IntMatrix::from_rows(&[vec![1, -1, 1, -1]]);
        assert_eq!(check(&m).s, IntMatrix::from_rows(&[vec![1, 0, 0, 0]]));
    }

    #[test]
    fn diag_two_three() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let f = check(&m);
        assert_eq!(f.diagonal(), vec![1, 6]);
    }

    #[test]
    fn zero_matrix_is_fixed() {
        let m = IntMatrix::zeros(3, 2);
        let f = check(&m);
        assert_eq!(f.s, m);
        assert_eq!(f.u, IntMatrix::identity(3));
        assert_eq!(f.v, IntMatrix::identity(2));
    }

    #[test]
    fn empty_dimensions() {
        check(&IntMatrix::zeros(0, 4));
        check(&IntMatrix::zeros(3, 0));
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_rows(&[vec![2, -1, 0], vec![1, 3, 2], vec![0, 5, -4]]);
        // 2*(3*-4 - 2*5) - (-1)*(1*-4 - 0) = -44 - 4
        assert_eq!(m.determinant(), -48);
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.determinant(), -1);
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |data| IntMatrix {
                rows: r,
                cols: c,
                data,
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn snf_invariants(m in small_matrix()) {
            check(&m);
        }

        #[test]
        fn snf_is_deterministic(m in small_matrix()) {
            prop_assert_eq!(smith_normal_form(&m), smith_normal_form(&m));
        }
    }
}
