//! Symmetric tridiagonal eigenproblems by Sturm-sequence bisection and
//! inverse iteration. Everything is O(n) per evaluation, which keeps grids
//! of 10⁴-10⁵ points cheap.

/// Symmetric tridiagonal matrix with diagonal `diag` and off-diagonal `off`
/// (`off.len() == diag.len() - 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(off.len() + 1, diag.len(), "off-diagonal length must be n - 1");
        Self { diag, off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Gershgorin interval containing the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `sigma`.
    pub fn count_below(&self, sigma: f64) -> usize {
        let tiny = f64::MIN_POSITIVE.sqrt();
        let mut count = 0;
        let mut q = self.diag[0] - sigma;
        for i in 0..self.len() {
            if i > 0 {
                let e = self.off[i - 1];
                q = self.diag[i] - sigma - e * e / q;
            }
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// All eigenvalues below `upper`, ascending.
    pub fn eigenvalues_below(&self, upper: f64) -> Vec<f64> {
        let (glo, ghi) = self.gershgorin();
        let upper = upper.min(ghi);
        let m = self.count_below(upper);
        let mut out = Vec::with_capacity(m);
        let mut floor = glo;
        for k in 0..m {
            let (mut lo, mut hi) = (floor, upper);
            loop {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
                    break;
                }
                if self.count_below(mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let ev = 0.5 * (lo + hi);
            out.push(ev);
            floor = lo;
        }
        out
    }

    /// Unit (Euclidean) eigenvector for an accurate eigenvalue, by inverse
    /// iteration.
    pub fn eigenvector(&self, eigenvalue: f64) -> Vec<f64> {
        let n = self.len();
        let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.01 * ((i * 7919) % 101) as f64).collect();
        normalize(&mut v);
        for _ in 0..4 {
            v = self.solve_shifted(eigenvalue, &v);
            normalize(&mut v);
        }
        v
    }

    /// y = (T - μ) x
    pub fn apply_shifted(&self, mu: f64, x: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut s = (self.diag[i] - mu) * x[i];
                if i > 0 {
                    s += self.off[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * x[i + 1];
                }
                s
            })
            .collect()
    }

    /// Solves (T - μ) x = rhs by Gaussian elimination with partial pivoting.
    fn solve_shifted(&self, mu: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        let scale = self.diag.iter().map(|d| (d - mu).abs()).fold(0.0, f64::max).max(1.0);
        let tiny = f64::EPSILON * scale;
        // row i holds (b[i], c[i], f[i]) at columns i, i+1, i+2
        let mut b: Vec<f64> = self.diag.iter().map(|d| d - mu).collect();
        let mut c: Vec<f64> = self.off.clone();
        c.push(0.0);
        let mut f = vec![0.0; n];
        let mut r = rhs.to_vec();
        // sub-diagonal entry below b[i]
        let mut a: Vec<f64> = self.off.clone();
        for i in 0..n.saturating_sub(1) {
            if b[i].abs() >= a[i].abs() {
                if b[i] == 0.0 {
                    b[i] = tiny;
                }
                let m = a[i] / b[i];
                b[i + 1] -= m * c[i];
                r[i + 1] -= m * r[i];
            } else {
                // swap rows i and i+1
                let m = b[i] / a[i];
                let ci = c[i];
                b[i] = a[i];
                c[i] = b[i + 1];
                f[i] = if i + 1 < n - 1 { c[i + 1] } else { 0.0 };
                b[i + 1] = ci - m * c[i];
                c[i + 1] = -m * f[i];
                r.swap(i, i + 1);
                r[i + 1] -= m * r[i];
            }
            a[i] = 0.0;
        }
        if b[n - 1] == 0.0 {
            b[n - 1] = tiny;
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = r[i];
            if i + 1 < n {
                s -= c[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= f[i] * x[i + 2];
            }
            x[i] = s / b[i];
        }
        x
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 && norm.is_finite() {
        v.iter_mut().for_each(|x| *x /= norm);
    }
}
