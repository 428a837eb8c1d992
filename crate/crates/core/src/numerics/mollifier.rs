use std::sync::OnceLock;

use num_complex::Complex64;

use crate::boundary::Side;

use super::quadrature::integrate;

fn bump(x: f64) -> f64 {
    if x.abs() < 1.0 {
        (-1.0 / (1.0 - x * x)).exp()
    } else {
        0.0
    }
}

/// `C` with `∫ C·exp(−1/(1−x²)) dx = 1` over `(−1, 1)`.
pub fn normalization() -> f64 {
    static C: OnceLock<f64> = OnceLock::new();
    *C.get_or_init(|| {
        let mass = integrate(|x| Complex64::new(bump(x), 0.0), -1.0, 1.0, 1e-14).expect("smooth bump");
        1.0 / mass.re
    })
}

/// The standard mollifier `v` or its derivative, `order ≤ 1`.
pub fn mollifier(x: f64, order: u32) -> f64 {
    let b = bump(x);
    if b == 0.0 {
        return 0.0;
    }
    let c = normalization();
    match order {
        0 => c * b,
        1 => {
            let d = 1.0 - x * x;
            c * b * (-2.0 * x / (d * d))
        }
        _ => panic!("mollifier derivatives above first order are not provided"),
    }
}

/// Samples of `v_ε^{(n)}(x ∓ ε)` with `v_ε(x) = v(x/ε)/ε`; the right shift is
/// supported in `(0, 2ε)` and the left shift in `(−2ε, 0)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MollifierFamily {
    pub epsilon: f64,
    pub order: u32,
    pub shift: Side,
}

impl MollifierFamily {
    pub fn new(epsilon: f64, order: u32, shift: Side) -> Self {
        assert!(epsilon > 0.0, "epsilon must be positive");
        assert!(order <= 1, "order must be 0 or 1");
        MollifierFamily { epsilon, order, shift }
    }

    pub fn support(&self) -> (f64, f64) {
        match self.shift {
            Side::Right => (0.0, 2.0 * self.epsilon),
            Side::Left => (-2.0 * self.epsilon, 0.0),
        }
    }

    pub fn sample(&self, x: f64) -> f64 {
        let e = self.epsilon;
        let centre = match self.shift {
            Side::Right => x - e,
            Side::Left => x + e,
        };
        mollifier(centre / e, self.order) / e.powi(self.order as i32 + 1)
    }
}

/// Centered `a·v_ε(x)`, a regularized `δ` of strength `a`.
pub fn regularized_delta(a: f64, epsilon: f64) -> impl Fn(f64) -> f64 {
    move |x| a * mollifier(x / epsilon, 0) / epsilon
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_mass() {
        assert!((1.0 / normalization() - 0.443_993_816_168_079_4).abs() < 1e-12);
        for shift in [Side::Left, Side::Right] {
            let m = MollifierFamily::new(0.1, 0, shift);
            let (a, b) = m.support();
            let mass = integrate(|x| Complex64::new(m.sample(x), 0.0), a, b, 1e-12).unwrap();
            assert!((mass.re - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn shifted_support() {
        let m = MollifierFamily::new(0.05, 0, Side::Right);
        assert_eq!(m.sample(0.0), 0.0);
        assert_eq!(m.sample(-0.01), 0.0);
        assert_eq!(m.sample(0.1), 0.0);
        assert!(m.sample(0.05) > 0.0);
        let l = MollifierFamily::new(0.05, 1, Side::Left);
        assert_eq!(l.sample(0.001), 0.0);
        assert!(l.sample(-0.07) > 0.0 && l.sample(-0.03) < 0.0);
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        for x in [-0.7, -0.2, 0.3, 0.9] {
            let h = 1e-6;
            let fd = (mollifier(x + h, 0) - mollifier(x - h, 0)) / (2.0 * h);
            assert!((fd - mollifier(x, 1)).abs() < 1e-6, "{x}");
        }
    }
}
