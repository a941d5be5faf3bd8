//! Banded LU with partial pivoting and row equilibration.
//!
//! Storage keeps, for row `i`, the absolute columns `i - kl ..= i + ku + kl`;
//! the extra `kl` superdiagonals hold fill-in created by row interchanges.

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is singular at column {0}")]
    Singular(usize),
    #[error("row {0} is zero or not finite")]
    BadRow(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BandMatrix {
    n: usize,
    kl: usize,
    ku: usize,
    width: usize,
    data: Vec<f64>,
}

impl BandMatrix {
    pub fn zeros(n: usize, kl: usize, ku: usize) -> Self {
        let width = 2 * kl + ku + 1;
        BandMatrix { n, kl, ku, width, data: vec![0.0; n * width] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn lower(&self) -> usize {
        self.kl
    }

    pub fn upper(&self) -> usize {
        self.ku
    }

    #[inline]
    fn slot(&self, i: usize, j: usize) -> usize {
        i * self.width + (j + self.kl - i)
    }

    /// Whether `(i, j)` lies inside the declared band.
    pub fn in_band(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && j + self.kl >= i && j <= i + self.ku
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if self.in_band(i, j) {
            self.data[self.slot(i, j)]
        } else {
            0.0
        }
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(self.in_band(i, j), "({i}, {j}) outside band {}/{}", self.kl, self.ku);
        let s = self.slot(i, j);
        self.data[s] += v;
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(self.in_band(i, j));
        let s = self.slot(i, j);
        self.data[s] = v;
    }

    pub fn fill_zero(&mut self) {
        self.data.iter_mut().for_each(|x| *x = 0.0);
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    /// `A x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                let lo = i.saturating_sub(self.kl);
                let hi = (i + self.ku).min(self.n - 1);
                (lo..=hi).map(|j| self.data[self.slot(i, j)] * x[j]).sum()
            })
            .collect()
    }

    /// Factorize in place.
    pub fn factorize(mut self) -> Result<BandLu, LinalgError> {
        let (n, kl, ku) = (self.n, self.kl, self.ku);
        let mut row_scale = vec![1.0; n];
        for (i, scale) in row_scale.iter_mut().enumerate() {
            let lo = i.saturating_sub(kl);
            let hi = (i + ku).min(n - 1);
            let mut m = 0.0f64;
            for j in lo..=hi {
                m = m.max(self.data[self.slot(i, j)].abs());
            }
            if !(m > 0.0 && m.is_finite()) {
                return Err(LinalgError::BadRow(i));
            }
            *scale = 1.0 / m;
            for j in lo..=hi {
                let s = self.slot(i, j);
                self.data[s] *= *scale;
            }
        }
        let mut pivots = vec![0usize; n];
        for k in 0..n {
            let last_row = (k + kl).min(n - 1);
            let last_col = (k + kl + ku).min(n - 1);
            let mut p = k;
            let mut best = self.data[self.slot(k, k)].abs();
            for i in k + 1..=last_row {
                let v = self.data[self.slot(i, k)].abs();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if !(best > 0.0) {
                return Err(LinalgError::Singular(k));
            }
            pivots[k] = p;
            if p != k {
                for j in k..=last_col {
                    let (a, b) = (self.slot(k, j), self.slot(p, j));
                    self.data.swap(a, b);
                }
            }
            let pivot = self.data[self.slot(k, k)];
            for i in k + 1..=last_row {
                let s = self.slot(i, k);
                let l = self.data[s] / pivot;
                self.data[s] = l;
                if l != 0.0 {
                    // Column k + off sits at slot(row, k) + off in both rows.
                    let (ri, rk) = (s, self.slot(k, k));
                    for off in 1..=(last_col - k) {
                        self.data[ri + off] -= l * self.data[rk + off];
                    }
                }
            }
        }
        Ok(BandLu { m: self, pivots, row_scale })
    }
}

/// Factorized band matrix.
#[derive(Debug, Clone)]
pub struct BandLu {
    m: BandMatrix,
    pivots: Vec<usize>,
    row_scale: Vec<f64>,
}

impl BandLu {
    /// Solve `A x = b` in place.
    pub fn solve_in_place(&self, b: &mut [f64]) {
        let m = &self.m;
        let n = m.n;
        for (bi, s) in b.iter_mut().zip(&self.row_scale) {
            *bi *= s;
        }
        for k in 0..n {
            let p = self.pivots[k];
            if p != k {
                b.swap(k, p);
            }
            let bk = b[k];
            if bk != 0.0 {
                for i in k + 1..=(k + m.kl).min(n - 1) {
                    b[i] -= m.data[m.slot(i, k)] * bk;
                }
            }
        }
        for k in (0..n).rev() {
            let last = (k + m.kl + m.ku).min(n - 1);
            let mut acc = b[k];
            for j in k + 1..=last {
                acc -= m.data[m.slot(k, j)] * b[j];
            }
            b[k] = acc / m.data[m.slot(k, k)];
        }
    }
}

/// Dense Gaussian elimination with partial pivoting; test oracle and fallback
/// for small systems.
pub fn dense_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>, LinalgError> {
    let n = b.len();
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs())).unwrap();
        if a[p][k] == 0.0 {
            return Err(LinalgError::Singular(k));
        }
        a.swap(k, p);
        b.swap(k, p);
        for i in k + 1..n {
            let l = a[i][k] / a[k][k];
            if l != 0.0 {
                for j in k..n {
                    a[i][j] -= l * a[k][j];
                }
                b[i] -= l * b[k];
            }
        }
    }
    for k in (0..n).rev() {
        let mut acc = b[k];
        for j in k + 1..n {
            acc -= a[k][j] * b[j];
        }
        b[k] = acc / a[k][k];
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn matches_dense_solve() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &(n, kl, ku) in &[(1, 0, 0), (5, 1, 1), (20, 3, 2), (40, 7, 7), (13, 12, 0)] {
            let mut m = BandMatrix::zeros(n, kl, ku);
            for i in 0..n {
                for j in i.saturating_sub(kl)..=(i + ku).min(n - 1) {
                    // Small diagonal forces pivoting.
                    let v: f64 = rng.gen_range(-1.0..1.0);
                    m.set(i, j, if i == j { 1e-3 * v } else { v });
                }
            }
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let b = m.mul_vec(&x);
            let dense = dense_solve(m.to_dense(), b.clone()).unwrap();
            let mut y = b.clone();
            m.clone().factorize().unwrap().solve_in_place(&mut y);
            // Componentwise backward error; the random matrices can be badly conditioned.
            for sol in [&y, &dense] {
                let r = m.mul_vec(sol);
                for i in 0..n {
                    let gross: f64 = (0..n).map(|j| (m.get(i, j) * sol[j]).abs()).sum::<f64>() + b[i].abs();
                    assert!((r[i] - b[i]).abs() < 1e-10 * gross, "n={n} i={i}: residual {}", r[i] - b[i]);
                }
            }
        }
    }

    #[test]
    fn recovers_solution_of_dominant_system() {
        let n = 30;
        let mut m = BandMatrix::zeros(n, 4, 3);
        for i in 0..n {
            for j in i.saturating_sub(4)..=(i + 3).min(n - 1) {
                m.set(i, j, if i == j { 10.0 } else { 1.0 / (1.0 + (i + 2 * j) as f64) });
            }
        }
        let x: Vec<f64> = (0..n).map(|i| (i as f64).sin()).collect();
        let mut y = m.mul_vec(&x);
        m.factorize().unwrap().solve_in_place(&mut y);
        for i in 0..n {
            assert!((y[i] - x[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn singular_is_reported() {
        let mut m = BandMatrix::zeros(3, 1, 1);
        m.set(0, 0, 1.0);
        m.set(1, 0, 1.0);
        m.set(2, 2, 1.0);
        m.set(0, 1, 1.0);
        m.set(1, 1, 1.0);
        assert!(m.factorize().is_err());
    }
}
