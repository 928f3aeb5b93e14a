//! Exact integer linear algebra: rank and determinant by fraction-free
//! (Bareiss) elimination.

/// Dense integer matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
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
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v as i128);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i128) {
        self.data[i * self.cols + j] += v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.add_to(i, j, a * other.get(k, j));
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Runs Bareiss elimination in place, returning the rank and the number
    /// of row swaps performed. Every division is exact.
    fn bareiss(&mut self) -> (usize, usize) {
        let mut rank = 0;
        let mut swaps = 0;
        let mut prev = 1i128;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if pivot != rank {
                self.swap_rows(pivot, rank);
                swaps += 1;
            }
            let p = self.get(rank, col);
            for r in rank + 1..self.rows {
                let f = self.get(r, col);
                for c in col..self.cols {
                    let v = (p * self.get(r, c) - f * self.get(rank, c)) / prev;
                    self.set(r, c, v);
                }
            }
            prev = p;
            rank += 1;
        }
        (rank, swaps)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.clone().bareiss().0
    }

    /// Determinant of a square matrix. The empty matrix has determinant 1.
    pub fn determinant(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m = self.clone();
        let (rank, swaps) = m.bareiss();
        if rank < n {
            return 0;
        }
        let d = m.get(n - 1, n - 1);
        if swaps % 2 == 0 {
            d
        } else {
            -d
        }
    }
}
