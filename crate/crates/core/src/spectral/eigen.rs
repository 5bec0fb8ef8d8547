//! Dense symmetric eigensolvers.
//!
//! Two independent routes are provided. [`jacobi_eigenvalues`] applies
//! cyclic Jacobi rotations to the full matrix. [`Tridiagonal`] reduces the
//! matrix with Householder reflections and then runs implicit QL on the
//! tridiagonal form; it is the faster of the two for large matrices and also
//! supports single-eigenvector recovery by inverse iteration.

/// Row-major dense symmetric matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let n = self.n;
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += self.data[i * n + j].powi(2);
                }
            }
        }
        s.sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

/// Relative off-diagonal tolerance for the Jacobi iteration.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues (ascending) by cyclic Jacobi rotations. Stops once the
/// off-diagonal Frobenius norm drops to `1e-12` times the initial norm.
pub fn jacobi_eigenvalues(mut a: SymMatrix) -> Vec<f64> {
    let n = a.n;
    let target = JACOBI_TOLERANCE * a.frobenius_norm();
    for _ in 0..JACOBI_MAX_SWEEPS {
        if a.off_diagonal_norm() <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.data[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a.data[p * n + p];
                let aqq = a.data[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, p, q, c, s);
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a.data[i * n + i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

// A <- Jᵀ A J for the rotation J in the (p, q) plane that zeroes A[p][q].
fn rotate(a: &mut SymMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.n;
    for k in 0..n {
        let akp = a.data[k * n + p];
        let akq = a.data[k * n + q];
        a.data[k * n + p] = c * akp - s * akq;
        a.data[k * n + q] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a.data[p * n + k];
        let aqk = a.data[q * n + k];
        a.data[p * n + k] = c * apk - s * aqk;
        a.data[q * n + k] = s * apk + c * aqk;
    }
}

/// Householder reduction `A = Q T Qᵀ` with `T` symmetric tridiagonal.
#[derive(Debug, Clone)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    // off[i] couples rows i and i + 1
    pub off: Vec<f64>,
    // reflector k acts on coordinates k + 1..n
    reflectors: Vec<Vec<f64>>,
}

impl Tridiagonal {
    pub fn reduce(a: SymMatrix) -> Self {
        let n = a.n;
        let mut m = a.data;
        let mut diag = vec![0.0; n];
        let mut off = vec![0.0; n.saturating_sub(1)];
        let mut reflectors = Vec::with_capacity(n.saturating_sub(2));
        // only the lower triangle of m is read or written below
        for k in 0..n.saturating_sub(2) {
            let len = n - k - 1;
            let mut v: Vec<f64> = (0..len).map(|i| m[(k + 1 + i) * n + k]).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            diag[k] = m[k * n + k];
            if norm == 0.0 {
                off[k] = 0.0;
                reflectors.push(Vec::new());
                continue;
            }
            let alpha = if v[0] > 0.0 { -norm } else { norm };
            v[0] -= alpha;
            let vnorm2: f64 = v.iter().map(|x| x * x).sum();
            off[k] = alpha;
            if vnorm2 == 0.0 {
                reflectors.push(Vec::new());
                continue;
            }
            let beta = 2.0 / vnorm2;

            // p = beta * S v over the trailing block S, from its lower triangle
            let base = k + 1;
            let mut p = vec![0.0; len];
            for i in 0..len {
                let row = (base + i) * n + base;
                let mut acc = 0.0;
                for j in 0..i {
                    let sij = m[row + j];
                    acc += sij * v[j];
                    p[j] += sij * v[i];
                }
                acc += m[row + i] * v[i];
                p[i] += acc;
            }
            for x in &mut p {
                *x *= beta;
            }
            let pv: f64 = p.iter().zip(&v).map(|(a, b)| a * b).sum();
            let gamma = 0.5 * beta * pv;
            let w: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - gamma * vi).collect();
            for i in 0..len {
                let row = (base + i) * n + base;
                let (vi, wi) = (v[i], w[i]);
                for j in 0..=i {
                    m[row + j] -= vi * w[j] + wi * v[j];
                }
            }
            reflectors.push(v);
        }
        if n >= 2 {
            diag[n - 2] = m[(n - 2) * n + n - 2];
            off[n - 2] = m[(n - 1) * n + n - 2];
        }
        if n >= 1 {
            diag[n - 1] = m[(n - 1) * n + n - 1];
        }
        Tridiagonal {
            diag,
            off,
            reflectors,
        }
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Eigenvalues of the tridiagonal form (equal to those of `A`), ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut d = self.diag.clone();
        let mut e = self.off.clone();
        e.push(0.0);
        implicit_ql(&mut d, &mut e);
        d.sort_by(f64::total_cmp);
        d
    }

    fn apply_reflector(&self, k: usize, x: &mut [f64]) {
        let v = &self.reflectors[k];
        if v.is_empty() {
            return;
        }
        let tail = &mut x[k + 1..];
        let vnorm2: f64 = v.iter().map(|a| a * a).sum();
        let dot: f64 = v.iter().zip(tail.iter()).map(|(a, b)| a * b).sum();
        let f = 2.0 * dot / vnorm2;
        for (t, vi) in tail.iter_mut().zip(v) {
            *t -= f * vi;
        }
    }

    /// `Qᵀ x`.
    pub fn to_reduced(&self, x: &[f64]) -> Vec<f64> {
        let mut y = x.to_vec();
        for k in 0..self.reflectors.len() {
            self.apply_reflector(k, &mut y);
        }
        y
    }

    /// `Q y`.
    pub fn from_reduced(&self, y: &[f64]) -> Vec<f64> {
        let mut x = y.to_vec();
        for k in (0..self.reflectors.len()).rev() {
            self.apply_reflector(k, &mut x);
        }
        x
    }

    /// Unit eigenvector of `A` for the eigenvalue `lambda` by inverse
    /// iteration on the tridiagonal form, kept orthogonal to `deflate`
    /// (given in the original coordinates, may be empty).
    pub fn eigenvector(&self, lambda: f64, deflate: &[Vec<f64>]) -> Vec<f64> {
        let n = self.n();
        if n == 0 {
            return Vec::new();
        }
        let deflate: Vec<Vec<f64>> = deflate
            .iter()
            .map(|u| {
                let mut r = self.to_reduced(u);
                normalize(&mut r);
                r
            })
            .collect();
        let scale = self
            .diag
            .iter()
            .chain(&self.off)
            .fold(0.0f64, |m, x| m.max(x.abs()))
            .max(1.0);
        let shift = lambda + 1e-13 * scale;
        // deterministic start vector with no special structure
        let mut y: Vec<f64> = (0..n)
            .map(|i| ((i as f64 + 1.0) * 0.618_033_988_749_895).fract() - 0.5)
            .collect();
        for _ in 0..6 {
            project_out(&mut y, &deflate);
            normalize(&mut y);
            y = self.solve_shifted(shift, &y, scale);
        }
        project_out(&mut y, &deflate);
        normalize(&mut y);
        let mut x = self.from_reduced(&y);
        normalize(&mut x);
        x
    }

    // Solves (T - shift I) x = b by Gaussian elimination with partial pivoting.
    fn solve_shifted(&self, shift: f64, b: &[f64], scale: f64) -> Vec<f64> {
        let n = self.n();
        let tiny = f64::EPSILON * scale;
        // row i: sub[i] x_{i-1} + main[i] x_i + sup[i] x_{i+1} (+ sup2[i] x_{i+2} after pivoting)
        let mut main: Vec<f64> = self.diag.iter().map(|d| d - shift).collect();
        let mut sup: Vec<f64> = self.off.clone();
        sup.push(0.0);
        let mut sub: Vec<f64> = std::iter::once(0.0).chain(self.off.iter().copied()).collect();
        let mut sup2 = vec![0.0; n];
        let mut rhs = b.to_vec();
        for i in 0..n.saturating_sub(1) {
            if sub[i + 1].abs() > main[i].abs() {
                // swap rows i and i + 1
                std::mem::swap(&mut main[i], &mut sub[i + 1]);
                let (a, c) = (sup[i], main[i + 1]);
                sup[i] = c;
                main[i + 1] = a;
                let (a2, c2) = (sup2[i], sup[i + 1]);
                sup2[i] = c2;
                sup[i + 1] = a2;
                rhs.swap(i, i + 1);
            }
            if main[i].abs() < tiny {
                main[i] = tiny;
            }
            let f = sub[i + 1] / main[i];
            sub[i + 1] = 0.0;
            main[i + 1] -= f * sup[i];
            sup[i + 1] -= f * sup2[i];
            rhs[i + 1] -= f * rhs[i];
        }
        if main[n - 1].abs() < tiny {
            main[n - 1] = tiny;
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = rhs[i];
            if i + 1 < n {
                s -= sup[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= sup2[i] * x[i + 2];
            }
            x[i] = s / main[i];
        }
        x
    }
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    if norm > 0.0 {
        for a in x.iter_mut() {
            *a /= norm;
        }
    }
}

fn project_out(y: &mut [f64], basis: &[Vec<f64>]) {
    for u in basis {
        let dot: f64 = u.iter().zip(y.iter()).map(|(a, b)| a * b).sum();
        for (yi, ui) in y.iter_mut().zip(u) {
            *yi -= dot * ui;
        }
    }
}

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
// `e[i]` couples rows i and i + 1; `e[n - 1]` is scratch.
fn implicit_ql(d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                break;
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}
