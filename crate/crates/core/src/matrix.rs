//! Exact integer coefficient matrices over tree bases.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Number, Value};

/// A matrix whose rows and columns are labelled by serialized basis elements.
/// `entries[i][j]` is the coefficient of row `i` in column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    pub degree: usize,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<BigInt>>,
}

impl CoeffMatrix {
    /// Builds a matrix from its columns; `columns[j][i]` is entry `(i, j)`.
    pub fn from_columns(
        degree: usize,
        rows: Vec<String>,
        cols: Vec<String>,
        columns: Vec<Vec<BigInt>>,
    ) -> Self {
        assert_eq!(cols.len(), columns.len());
        let entries = (0..rows.len())
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        CoeffMatrix {
            degree,
            rows,
            cols,
            entries,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.entries.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square()
            && self
                .entries
                .iter()
                .enumerate()
                .all(|(i, row)| row[..i].iter().all(Zero::is_zero))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_upper_triangular() && self.diagonal().iter().all(One::is_one)
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.nrows().min(self.ncols()))
            .map(|i| self.entries[i][i].clone())
            .collect()
    }

    pub fn entry_sum(&self) -> BigInt {
        self.entries.iter().flatten().sum()
    }

    pub fn column_sums(&self) -> Vec<BigInt> {
        (0..self.ncols())
            .map(|j| self.entries.iter().map(|r| &r[j]).sum())
            .collect()
    }

    /// How often each value occurs among the entries.
    pub fn entry_counts(&self) -> BTreeMap<BigInt, usize> {
        let mut out = BTreeMap::new();
        for e in self.entries.iter().flatten() {
            *out.entry(e.clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn count_of(&self, value: &BigInt) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter(|e| *e == value)
            .count()
    }

    /// Determinant by fraction-free Gaussian elimination.
    pub fn determinant(&self) -> Option<BigInt> {
        if !self.is_square() {
            return None;
        }
        let n = self.nrows();
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Some(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Some(sign * &a[n - 1][n - 1])
    }

    /// Inverse of an upper unitriangular matrix, exact over the integers.
    #[allow(clippy::needless_range_loop)]
    pub fn inverse_unitriangular(&self) -> Option<CoeffMatrix> {
        if !self.is_upper_unitriangular() {
            return None;
        }
        let n = self.nrows();
        let mut inv = vec![vec![BigInt::zero(); n]; n];
        for j in 0..n {
            inv[j][j] = BigInt::one();
            for i in (0..j).rev() {
                let mut s = BigInt::zero();
                for k in i + 1..=j {
                    s += &self.entries[i][k] * &inv[k][j];
                }
                inv[i][j] = -s;
            }
        }
        Some(CoeffMatrix {
            degree: self.degree,
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            entries: inv,
        })
    }

    pub fn mul(&self, other: &CoeffMatrix) -> Option<CoeffMatrix> {
        if self.ncols() != other.nrows() {
            return None;
        }
        let entries = (0..self.nrows())
            .map(|i| {
                (0..other.ncols())
                    .map(|j| {
                        (0..self.ncols())
                            .map(|k| &self.entries[i][k] * &other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Some(CoeffMatrix {
            degree: self.degree,
            rows: self.rows.clone(),
            cols: other.cols.clone(),
            entries,
        })
    }

    /// Reorders columns so that new column `j` is old column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> CoeffMatrix {
        CoeffMatrix {
            degree: self.degree,
            rows: self.rows.clone(),
            cols: perm.iter().map(|&j| self.cols[j].clone()).collect(),
            entries: self
                .entries
                .iter()
                .map(|r| perm.iter().map(|&j| r[j].clone()).collect())
                .collect(),
        }
    }

    /// First line: `basis` then the column labels; then one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("basis");
        for c in &self.cols {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for (label, row) in self.rows.iter().zip(&self.entries) {
            out.push_str(label);
            for e in row {
                let _ = write!(out, ",{e}");
            }
            out.push('\n');
        }
        out
    }

    /// `{degree, basis, entries}`, plus `columns` when they differ from the rows.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<Value>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(integer).collect())
            .collect();
        let mut v = json!({
            "degree": self.degree,
            "basis": self.rows,
            "entries": entries,
        });
        if self.rows != self.cols {
            v["columns"] = json!(self.cols);
        }
        v
    }

    /// Whitespace-aligned table with row labels on the left.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let label_width = self.rows.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (label, row) in self.rows.iter().zip(&cells) {
            let _ = write!(out, "{label:<label_width$}");
            for c in row {
                let _ = write!(out, " {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

fn integer(n: &BigInt) -> Value {
    Value::Number(
        n.to_string()
            .parse::<Number>()
            .expect("decimal integers are JSON numbers"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> CoeffMatrix {
        let n = rows.len();
        let labels: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
        CoeffMatrix {
            degree: n,
            rows: labels.clone(),
            cols: labels,
            entries: rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        }
    }

    #[test]
    fn triangular_checks() {
        assert!(m(&[&[1, 1], &[0, 1]]).is_upper_unitriangular());
        assert!(!m(&[&[1, 1], &[1, 1]]).is_upper_triangular());
        assert!(!m(&[&[2, 1], &[0, 1]]).is_upper_unitriangular());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        assert_eq!(m(&[&[2, 3], &[1, 4]]).determinant(), Some(5.into()));
        assert_eq!(
            m(&[&[0, 1, 2], &[3, 4, 5], &[6, 7, 9]]).determinant(),
            Some((-3).into())
        );
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), Some(0.into()));
    }

    #[test]
    fn unitriangular_inverse() {
        let a = m(&[&[1, 1, 2], &[0, 1, 3], &[0, 0, 1]]);
        let inv = a.inverse_unitriangular().unwrap();
        let id = a.mul(&inv).unwrap();
        assert_eq!(id, m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(inv.entry(0, 2), &BigInt::from(1));
    }

    #[test]
    fn emitters() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.to_csv(), "basis,r0,r1\nr0,1,1\nr1,0,1\n");
        assert_eq!(
            a.to_json().to_string(),
            r#"{"basis":["r0","r1"],"degree":2,"entries":[[1,1],[0,1]]}"#
        );
        assert_eq!(a.to_text(), "r0 1 1\nr1 0 1\n");
    }

    #[test]
    fn big_entries_stay_exact_in_json() {
        let mut a = m(&[&[1]]);
        a.entries[0][0] = "123456789012345678901234567890".parse().unwrap();
        assert!(a
            .to_json()
            .to_string()
            .contains("[[123456789012345678901234567890]]"));
    }
}
