//! Sparse matrices over a prime field `GF(p)`, `p < 2^31`.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("dimension mismatch: {left_cols} columns against {right_rows} rows")]
    Shape { left_cols: usize, right_rows: usize },
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates `p` as a field characteristic accepted by this module.
pub fn check_prime(p: u64) -> Result<u32, FieldError> {
    if p < (1 << 31) && is_prime(p) {
        Ok(p as u32)
    } else {
        Err(FieldError::NotPrime(p))
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

type SparseRow = Vec<(usize, u64)>;

/// A sparse matrix over `GF(prime)`; rows hold `(column, value)` pairs in
/// increasing column order with every value nonzero mod `prime`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    rows: usize,
    cols: usize,
    prime: u32,
    data: Vec<SparseRow>,
}

impl PrimeFieldMatrix {
    pub fn zeros(rows: usize, cols: usize, prime: u32) -> Result<Self, FieldError> {
        check_prime(prime as u64)?;
        Ok(PrimeFieldMatrix { rows, cols, prime, data: vec![Vec::new(); rows] })
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated
    /// positions are summed. Signed values are reduced mod `prime`.
    pub fn from_triplets<I>(rows: usize, cols: usize, prime: u32, entries: I) -> Result<Self, FieldError>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut m = Self::zeros(rows, cols, prime)?;
        let p = prime as i64;
        let mut acc: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            let e = acc[r].entry(c).or_insert(0);
            *e = (*e + v.rem_euclid(p) as u64) % prime as u64;
        }
        for (r, row) in acc.into_iter().enumerate() {
            m.data[r] = row.into_iter().filter(|&(_, v)| v != 0).collect();
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r].binary_search_by_key(&c, |&(col, _)| col).map(|i| self.data[r][i].1).unwrap_or(0)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn mul(&self, rhs: &PrimeFieldMatrix) -> Result<PrimeFieldMatrix, FieldError> {
        if self.cols != rhs.rows {
            return Err(FieldError::Shape { left_cols: self.cols, right_rows: rhs.rows });
        }
        let p = self.prime as u64;
        let mut out = PrimeFieldMatrix::zeros(self.rows, rhs.cols, self.prime)?;
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
            for &(k, a) in row {
                for &(c, b) in &rhs.data[k] {
                    let e = acc.entry(c).or_insert(0);
                    *e = (*e + a * b) % p;
                }
            }
            out.data[r] = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        }
        Ok(out)
    }

    /// Rank by row reduction. Each row is reduced against the pivot rows
    /// found so far, keyed by leading column, until it vanishes or opens a
    /// new pivot.
    pub fn rank(&self) -> usize {
        let p = self.prime as u64;
        let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for row in &self.data {
            let mut row = row.clone();
            while let Some(&(lead, lead_val)) = row.first() {
                match pivots.get(&lead) {
                    Some(pivot) => {
                        // pivot rows are normalized to a leading 1
                        row = axpy(&row, pivot, p - lead_val, p);
                    }
                    None => {
                        let scale = inv_mod(lead_val, p);
                        let normalized = row.iter().map(|&(c, v)| (c, v * scale % p)).collect();
                        pivots.insert(lead, normalized);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }
}

/// `x + a * y` over `GF(p)` for sorted sparse rows.
fn axpy(x: &SparseRow, y: &SparseRow, a: u64, p: u64) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            out.push((y[j].0, a * y[j].1 % p));
            j += 1;
        } else {
            let v = (x[i].1 + a * y[j].1) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
