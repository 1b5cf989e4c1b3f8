//! Exact integer matrices.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("line {line}: row has {found} entries, expected {expected}")]
    Ragged { line: usize, found: usize, expected: usize },
    #[error("line {line}: {token:?} is not an integer")]
    BadEntry { line: usize, token: String },
    #[error("dimension mismatch: {0}")]
    Dimensions(String),
    #[error("determinant does not fit in 128 bits")]
    Overflow,
}

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The matrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..self.rows)
            .filter(|&i| i != r)
            .map(|i| self.row(i).iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
            .collect();
        IntMatrix { rows: self.rows.saturating_sub(1), cols: self.cols.saturating_sub(1), data: rows.concat() }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. The empty
    /// matrix has determinant 1.
    pub fn det(&self) -> Result<i128, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a: Vec<Vec<i128>> = (0..n).map(|i| self.row(i).iter().map(|&x| x as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                    return Ok(0);
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let x = a[i][j].checked_mul(a[k][k]).ok_or(MatrixError::Overflow)?;
                    let y = a[i][k].checked_mul(a[k][j]).ok_or(MatrixError::Overflow)?;
                    // Exact by Sylvester's identity.
                    a[i][j] = x.checked_sub(y).ok_or(MatrixError::Overflow)? / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        Ok(if n == 0 { 1 } else { sign * a[n - 1][n - 1] })
    }

    /// Text form: one row per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Parses the text form. Blank lines and `#` comments are skipped.
impl FromStr for IntMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for (n, line) in s.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| MatrixError::BadEntry { line: n + 1, token: t.to_string() }))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(MatrixError::Ragged { line: n + 1, found: row.len(), expected: first.len() });
                }
            }
            rows.push(row);
        }
        Ok(IntMatrix::from_rows(&rows))
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `|det S|`, the determinant of a link read off a mock Seifert matrix.
pub fn mock_det(s: &IntMatrix) -> Result<u128, MatrixError> {
    s.det().map(i128::unsigned_abs)
}

/// Borders `s0` with column `x`, row `y` and corner entries `a` and `a - 2`
/// and checks `det S+ - det S- = 2 det S0`.
pub fn skein_block_check(s0: &IntMatrix, x: &[i64], y: &[i64], a: i64) -> Result<bool, MatrixError> {
    let (plus, minus) = bordered_pair(s0, x, y, a)?;
    Ok(plus.det()? - minus.det()? == 2 * s0.det()?)
}

/// The bordered matrices `S+ = [[S0, x], [y^T, a]]` and `S-` with corner `a - 2`.
pub fn bordered_pair(s0: &IntMatrix, x: &[i64], y: &[i64], a: i64) -> Result<(IntMatrix, IntMatrix), MatrixError> {
    let n = s0.rows();
    if !s0.is_square() {
        return Err(MatrixError::NotSquare { rows: s0.rows(), cols: s0.cols() });
    }
    if x.len() != n || y.len() != n {
        return Err(MatrixError::Dimensions(format!("S0 is {n}x{n} but x has {} and y has {} entries", x.len(), y.len())));
    }
    let mut plus = IntMatrix::zeros(n + 1, n + 1);
    for i in 0..n {
        for j in 0..n {
            plus[(i, j)] = s0[(i, j)];
        }
        plus[(i, n)] = x[i];
        plus[(n, i)] = y[i];
    }
    plus[(n, n)] = a;
    let mut minus = plus.clone();
    minus[(n, n)] = a - 2;
    Ok((plus, minus))
}
