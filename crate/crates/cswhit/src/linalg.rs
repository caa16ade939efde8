//! Small exact linear algebra over the integers and rationals.
//!
//! Everything here stays at desk scale: lattice ranks are single digits, so
//! dense row-major matrices and textbook Gaussian elimination over `Ratio`
//! are the right tools. No floating point anywhere.

use num_rational::Ratio;

pub type Rat = Ratio<i128>;

pub fn rat(n: i64) -> Rat {
    Ratio::from_integer(n as i128)
}

/// Dense square integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMat {
    pub n: usize,
    pub data: Vec<i64>,
}

impl IntMat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMat { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "matrix rows must be square");
            data.extend_from_slice(r);
        }
        IntMat { n, data }
    }

    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.at(k, j);
                }
            }
        }
        IntMat { n, data }
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j) * v[j]).sum())
            .collect()
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn det(&self) -> i64 {
        let n = self.n;
        let mut m: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k * n + k] == 0 {
                let swap = (k + 1..n).find(|&r| m[r * n + k] != 0);
                match swap {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i * n + j] =
                        (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
                }
                m[i * n + k] = 0;
            }
            prev = m[k * n + k];
        }
        let d = sign * m[(n - 1) * n + (n - 1)];
        i64::try_from(d).expect("determinant overflow")
    }
}

/// Solve `A x = b` exactly over the rationals, where `A` has the given
/// columns. Returns `None` when `b` is outside the column span; when the
/// columns are linearly independent the solution is unique.
#[allow(clippy::needless_range_loop)] // elimination reads best with row/col indices
pub fn solve_columns(columns: &[Vec<i64>], b: &[i64]) -> Option<Vec<Rat>> {
    let rows = b.len();
    let cols = columns.len();
    for c in columns {
        assert_eq!(c.len(), rows);
    }
    // Augmented matrix [A | b] over Ratio.
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rat> = (0..cols).map(|c| rat(columns[c][r])).collect();
            row.push(rat(b[r]));
            row
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let found = (pivot_row..rows).find(|&r| m[r][col] != rat(0));
        let Some(r) = found else { continue };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col];
        for c in col..=cols {
            m[pivot_row][c] /= inv;
        }
        for r2 in 0..rows {
            if r2 != pivot_row && m[r2][col] != rat(0) {
                let f = m[r2][col];
                for c in col..=cols {
                    let sub = f * m[pivot_row][c];
                    m[r2][c] -= sub;
                }
            }
        }
        pivot_of_col[col] = Some(pivot_row);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    // Inconsistent system: a zero row with nonzero rhs.
    for r in pivot_row..rows {
        if m[r][cols] != rat(0) {
            return None;
        }
    }
    // Free columns get coefficient zero; with independent columns there are
    // none and the answer is the unique preimage.
    let mut x = vec![rat(0); cols];
    for col in 0..cols {
        if let Some(pr) = pivot_of_col[col] {
            x[col] = m[pr][cols];
        }
    }
    // Verify, which also rejects solutions that relied on a free column.
    for r in 0..rows {
        let mut acc = rat(0);
        for c in 0..cols {
            acc += x[c] * rat(columns[c][r]);
        }
        if acc != rat(b[r]) {
            return None;
        }
    }
    Some(x)
}

/// Rank of the set of integer vectors, by elimination over the rationals.
pub fn rank(vectors: &[Vec<i64>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let dim = vectors[0].len();
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for v in vectors {
        let mut w: Vec<Rat> = v.iter().map(|&x| rat(x)).collect();
        for b in &basis {
            let lead = b.iter().position(|&x| x != rat(0)).unwrap();
            if w[lead] != rat(0) {
                let f = w[lead] / b[lead];
                for i in 0..dim {
                    let sub = f * b[i];
                    w[i] -= sub;
                }
            }
        }
        if w.iter().any(|&x| x != rat(0)) {
            basis.push(w);
        }
    }
    basis.len()
}
