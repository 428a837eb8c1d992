use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::boundary::{apply_shifting_delta_dist, ShiftingDelta, Side};
use crate::dist::Distribution;
use crate::error::NumericsError;
use crate::poly::Poly;
use crate::scalar::Rational;

use super::mollifier::MollifierFamily;
use super::quadrature::integrate;

const REL_TOL: f64 = 1e-10;

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn poly_f64(p: &Poly) -> Vec<Complex64> {
    p.coeffs().iter().map(|c| c.to_complex64()).collect()
}

fn eval_f64(coeffs: &[Complex64], x: f64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
}

/// One row of a weak-limit table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeakLimitRow {
    pub epsilon: f64,
    pub value: Complex64,
    pub limit: Complex64,
    pub error: f64,
}

/// `∫ v_ε^{(n)}(x∓ε) F(x) t(x) dx` against the exact `⟨δ̂±^{(n)}F, t⟩` for each `ε`.
///
/// `F` must be regular and `t` is the polynomial test function on `[a, b]`
/// with `a < −2ε` and `b > 2ε`.
pub fn weak_limit_check(
    f: &Distribution,
    t: &Poly,
    interval: (&Rational, &Rational),
    order: u32,
    side: Side,
    eps_list: &[f64],
) -> Result<Vec<WeakLimitRow>, NumericsError> {
    if !f.is_regular() {
        return Err(NumericsError::InvalidInput("F must be a piecewise polynomial".into()));
    }
    if order > 1 {
        return Err(NumericsError::InvalidInput("order must be 0 or 1".into()));
    }
    let (a, b) = (to_f64(interval.0), to_f64(interval.1));
    let limit = apply_shifting_delta_dist(&ShiftingDelta::new(side, order), f)
        .and_then(|d| d.pair_polynomial_test(t, interval.0, interval.1).map_err(Into::into))
        .map_err(|e| NumericsError::InvalidInput(e.to_string()))?
        .to_complex64();
    if !(a < 0.0 && b > 0.0) {
        return Err(NumericsError::InvalidInput("test interval must contain 0 in its interior".into()));
    }
    let breaks: Vec<f64> = f.breakpoints().iter().map(to_f64).collect();
    let pieces: Vec<Vec<Complex64>> = f.pieces().iter().map(poly_f64).collect();
    let tc = poly_f64(t);
    let mut rows = Vec::with_capacity(eps_list.len());
    for &eps in eps_list {
        if !(eps > 0.0 && 2.0 * eps < b.min(-a)) {
            return Err(NumericsError::InvalidInput(format!("epsilon {eps} out of range")));
        }
        let m = MollifierFamily::new(eps, order, side);
        let (lo, hi) = m.support();
        // Split at breakpoints so every panel sees a single polynomial piece.
        let mut cuts = vec![lo];
        cuts.extend(breaks.iter().copied().filter(|&x| x > lo && x < hi));
        cuts.push(hi);
        let mut value = Complex64::new(0.0, 0.0);
        for w in cuts.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            let piece = &pieces[breaks.iter().filter(|&&x| x <= mid).count()];
            value += integrate(|x| eval_f64(piece, x) * eval_f64(&tc, x) * m.sample(x), w[0], w[1], REL_TOL)?;
        }
        rows.push(WeakLimitRow {
            epsilon: eps,
            value,
            limit,
            error: (value - limit).norm(),
        });
    }
    Ok(rows)
}

/// Errors never grow from one row to the next; values below `floor` count as zero.
pub fn errors_decrease(rows: &[WeakLimitRow], floor: f64) -> bool {
    let clip = |e: f64| if e < floor { 0.0 } else { e };
    rows.windows(2).all(|w| {
        let (p, q) = (clip(w[0].error), clip(w[1].error));
        q < p || (p == 0.0 && q == 0.0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::Bound;
    use crate::scalar::int;

    const EPS: [f64; 3] = [0.1, 0.05, 0.025];

    #[test]
    fn heaviside_right_and_left() {
        let h = Distribution::heaviside(int(0));
        let t = Poly::from_ints(&[1, 3, -2]);
        let rows = weak_limit_check(&h, &t, (&int(-1), &int(1)), 0, Side::Right, &EPS).unwrap();
        assert!(rows.iter().all(|r| (r.limit.re - 1.0).abs() < 1e-15));
        assert!(errors_decrease(&rows, 1e-10));
        assert!(rows[2].error < 0.1);
        let rows = weak_limit_check(&h, &t, (&int(-1), &int(1)), 0, Side::Left, &EPS).unwrap();
        assert!(rows.iter().all(|r| r.limit.norm() == 0.0 && r.error < 1e-12));
    }

    #[test]
    fn first_order_linear_piece() {
        let f = Distribution::piece(Bound::from_int(0), Bound::PosInf, Poly::from_ints(&[1, 1])).unwrap();
        let rows = weak_limit_check(&f, &Poly::one(), (&int(-1), &int(1)), 1, Side::Right, &EPS).unwrap();
        for r in &rows {
            assert!((r.limit.re + 1.0).abs() < 1e-15);
            assert!(r.error < 1e-9, "{r:?}");
        }
        // The order-zero error is the first moment of the shifted bump.
        let rows = weak_limit_check(&f, &Poly::one(), (&int(-1), &int(1)), 0, Side::Right, &EPS).unwrap();
        for r in &rows {
            assert!((r.error - r.epsilon).abs() < 1e-9, "{r:?}");
        }
        assert!(errors_decrease(&rows, 1e-10));
    }

    #[test]
    fn rejects_bad_input() {
        let d = Distribution::delta(int(0), 0);
        assert!(weak_limit_check(&d, &Poly::one(), (&int(-1), &int(1)), 0, Side::Right, &EPS).is_err());
        let h = Distribution::heaviside(int(0));
        assert!(weak_limit_check(&h, &Poly::one(), (&int(-1), &int(1)), 0, Side::Right, &[0.7]).is_err());
        assert!(weak_limit_check(&h, &Poly::one(), (&int(0), &int(1)), 0, Side::Right, &EPS).is_err());
    }
}
