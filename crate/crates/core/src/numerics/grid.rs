use crate::error::NumericsError;

/// Central-difference `−ψ″ + Vψ` on `(−L, L)` with Dirichlet ends.
///
/// Interior nodes `xᵢ = −L + (i+1)h`, `h = 2L/(N+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridHamiltonian {
    pub half_width: f64,
    pub points: usize,
    pub potential: Vec<f64>,
}

impl GridHamiltonian {
    pub fn new(half_width: f64, points: usize, v: impl Fn(f64) -> f64) -> Result<Self, NumericsError> {
        if points < 3 {
            return Err(NumericsError::InvalidInput("at least 3 grid points are needed".into()));
        }
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(NumericsError::InvalidInput("half-width must be positive".into()));
        }
        let h = 2.0 * half_width / (points as f64 + 1.0);
        let potential = (0..points).map(|i| v(-half_width + (i as f64 + 1.0) * h)).collect();
        Ok(GridHamiltonian {
            half_width,
            points,
            potential,
        })
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points as f64 + 1.0)
    }

    fn diagonal(&self, i: usize) -> f64 {
        let h = self.spacing();
        2.0 / (h * h) + self.potential[i]
    }

    /// Number of eigenvalues below `lambda`, from the signs of the `LDLᵀ` pivots.
    fn count_below(&self, lambda: f64) -> usize {
        let h = self.spacing();
        let e2 = 1.0 / (h * h * h * h);
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.points {
            let off = if i == 0 { 0.0 } else { e2 / q };
            q = self.diagonal(i) - lambda - off;
            if q == 0.0 {
                q = -f64::EPSILON * (1.0 + lambda.abs());
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }
}

/// The `m` smallest eigenvalues by Sturm bisection, ascending.
pub fn grid_eigenvalues(h: &GridHamiltonian, m: usize) -> Result<Vec<f64>, NumericsError> {
    if m > h.points {
        return Err(NumericsError::InvalidInput("more eigenvalues requested than grid points".into()));
    }
    let off = 1.0 / (h.spacing() * h.spacing());
    let (mut lo0, mut hi0) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..h.points {
        let d = h.diagonal(i);
        lo0 = lo0.min(d - 2.0 * off);
        hi0 = hi0.max(d + 2.0 * off);
    }
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let (mut lo, mut hi) = (lo0, hi0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if h.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::regularized_delta;

    #[test]
    fn particle_in_a_box() {
        let l = std::f64::consts::FRAC_PI_2;
        let g = GridHamiltonian::new(l, 400, |_| 0.0).unwrap();
        let e = grid_eigenvalues(&g, 3).unwrap();
        for (n, v) in e.iter().enumerate() {
            let exact = ((n as f64 + 1.0) * std::f64::consts::PI / (2.0 * l)).powi(2);
            assert!((v - exact).abs() < 1e-4 * exact * (n as f64 + 1.0).powi(2), "{n}: {v}");
        }
        assert!(e.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn exact_small_matrix() {
        // h = 1: tridiag(−1, 2, −1) of size 3 has eigenvalues 2 − √2, 2, 2 + √2.
        let g = GridHamiltonian::new(2.0, 3, |_| 0.0).unwrap();
        let e = grid_eigenvalues(&g, 3).unwrap();
        let s = std::f64::consts::SQRT_2;
        for (v, x) in e.iter().zip([2.0 - s, 2.0, 2.0 + s]) {
            assert!((v - x).abs() < 1e-12);
        }
        assert!(grid_eigenvalues(&g, 4).is_err());
        assert!(GridHamiltonian::new(1.0, 2, |_| 0.0).is_err());
    }

    /// The finite-width shift is about `0.9ε` for this bump, so the error
    /// roughly halves with `ε`.
    #[test]
    fn regularized_delta_ground_state() {
        let ground = |eps: f64, n: usize| {
            let g = GridHamiltonian::new(20.0, n, regularized_delta(-2.0, eps)).unwrap();
            grid_eigenvalues(&g, 1).unwrap()[0]
        };
        let coarse = ground(0.05, 4000);
        let fine = ground(0.025, 8000);
        assert!((coarse + 1.0).abs() < 0.05, "{coarse}");
        assert!((fine + 1.0).abs() < 0.6 * (coarse + 1.0).abs(), "{fine} vs {coarse}");
    }
}
