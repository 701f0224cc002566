use crate::error::{Error, Result};

/// Largest grid the box rule may produce.
const MAX_POINTS: f64 = 2e7;

/// Uniform grid including both endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    n: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !(x_min < x_max) || !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::Domain(format!("grid needs x_min < x_max, got [{x_min}, {x_max}]")));
        }
        if n < 3 {
            return Err(Error::Domain(format!("grid needs at least 3 points, got {n}")));
        }
        Ok(Self { x_min, x_max, n })
    }

    pub fn symmetric(half_width: f64, n: usize) -> Result<Self> {
        Self::new(-half_width, half_width, n)
    }

    /// Box for a well of inverse width α whose shallowest level is `e_shallowest`:
    /// half-width max(25/α, 8/√|E|), spacing at most `h_max`.
    pub fn for_well(alpha: f64, e_shallowest: Option<f64>, h_max: f64) -> Result<Self> {
        Self::for_well_tail(alpha, e_shallowest, h_max, 8.0)
    }

    /// As [`Grid::for_well`] with the level's tail cut after `decay_lengths`
    /// decay lengths 1/√|E| instead of 8.
    pub fn for_well_tail(alpha: f64, e_shallowest: Option<f64>, h_max: f64, decay_lengths: f64) -> Result<Self> {
        let mut half = 25.0 / alpha;
        if let Some(e) = e_shallowest.filter(|e| *e != 0.0) {
            half = half.max(decay_lengths / e.abs().sqrt());
        }
        let n = (2.0 * half / h_max).ceil() + 1.0;
        if !(n <= MAX_POINTS) {
            return Err(Error::Domain(format!(
                "box half-width {half} at spacing {h_max} needs {n} points"
            )));
        }
        Self::symmetric(half, (n as usize).max(3))
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn h(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.n {
            self.x_max
        } else {
            self.x_min + i as f64 * self.h()
        }
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.x(i))
    }

    /// Same interval, half the spacing (2n - 1 points).
    pub fn refined(&self) -> Self {
        Self {
            n: 2 * self.n - 1,
            ..*self
        }
    }

    /// Rejects the grid if any singular point lies within 2h of it.
    pub fn check_clearance(&self, singular_points: &[f64]) -> Result<()> {
        let pad = 2.0 * self.h();
        match singular_points
            .iter()
            .find(|&&s| s >= self.x_min - pad && s <= self.x_max + pad)
        {
            Some(&x) => Err(Error::Singular { x }),
            None => Ok(()),
        }
    }
}

/// ∫ψ² by the trapezoid rule.
pub fn trapezoid_norm2(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    let inner: f64 = values.iter().map(|v| v * v).sum();
    h * (inner - 0.5 * (values[0] * values[0] + values[n - 1] * values[n - 1]))
}

/// ∫ f·g by the trapezoid rule.
pub fn trapezoid_dot(f: &[f64], g: &[f64], h: f64) -> f64 {
    let n = f.len();
    let inner: f64 = f.iter().zip(g).map(|(a, b)| a * b).sum();
    h * (inner - 0.5 * (f[0] * g[0] + f[n - 1] * g[n - 1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_and_refinement() {
        let g = Grid::new(-2.0, 3.0, 11).unwrap();
        assert_eq!(g.h(), 0.5);
        assert_eq!(g.x(10), 3.0);
        let r = g.refined();
        assert_eq!(r.len(), 21);
        assert_eq!(r.h(), 0.25);
        assert_eq!(r.x(2), g.x(1));
    }

    #[test]
    fn invalid_grids() {
        assert!(Grid::new(1.0, 1.0, 10).is_err());
        assert!(Grid::new(0.0, 1.0, 2).is_err());
    }

    #[test]
    fn box_rule() {
        let g = Grid::for_well(0.1, Some(-0.01), 0.1).unwrap();
        assert_eq!(g.x_max(), 250.0);
        let g = Grid::for_well(6.0, Some(-0.0001), 0.01).unwrap();
        assert_eq!(g.x_max(), 800.0);
    }

    #[test]
    fn clearance_guard() {
        let g = Grid::symmetric(5.0, 101).unwrap();
        assert!(g.check_clearance(&[5.15]).is_err());
        assert!(g.check_clearance(&[5.3, -7.0]).is_ok());
    }
}
