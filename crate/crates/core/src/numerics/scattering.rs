use num_complex::Complex64;

use crate::error::NumericsError;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::schrodinger::BoundaryConditionMatrix;

/// Reflection and transmission amplitudes at wavenumber `k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScatteringData {
    pub k: f64,
    pub r_left: Complex64,
    pub t_left: Complex64,
    pub r_right: Complex64,
    pub t_right: Complex64,
}

impl ScatteringData {
    /// `max(| |r|² + |t|² − 1 |)` over both incidences.
    pub fn unitarity_defect(&self) -> f64 {
        let l = self.r_left.norm_sqr() + self.t_left.norm_sqr() - 1.0;
        let r = self.r_right.norm_sqr() + self.t_right.norm_sqr() - 1.0;
        l.abs().max(r.abs())
    }
}

fn rank_two_rows(bc: &BoundaryConditionMatrix) -> Result<[[Scalar; 4]; 2], NumericsError> {
    let rows = bc.rref();
    match <[[Scalar; 4]; 2]>::try_from(rows) {
        Ok(r) => Ok(r),
        Err(_) => Err(NumericsError::InvalidInput("conditions must have rank 2".into())),
    }
}

fn solve2(m: [[Complex64; 2]; 2], rhs: [Complex64; 2], k: f64) -> Result<[Complex64; 2], NumericsError> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let scale = m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    if det.norm() <= 1e-13 * scale * scale {
        return Err(NumericsError::SingularSystem { k });
    }
    Ok([
        (rhs[0] * m[1][1] - rhs[1] * m[0][1]) / det,
        (m[0][0] * rhs[1] - m[1][0] * rhs[0]) / det,
    ])
}

/// Solves the conditions on `e^{ikx} + re^{−ikx} | te^{ikx}` and on the mirror
/// image `t′e^{−ikx} | e^{−ikx} + r′e^{ikx}`.
pub fn scattering(bc: &BoundaryConditionMatrix, k: f64) -> Result<ScatteringData, NumericsError> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(NumericsError::InvalidInput("k must be positive".into()));
    }
    let rows = rank_two_rows(bc)?.map(|r| r.map(|c| c.to_complex64()));
    let ik = Complex64::new(0.0, k);
    // Jet (1+r, t, ik(1−r), ikt).
    let left = solve2(
        [0, 1].map(|i| {
            let m = &rows[i];
            [m[0] - ik * m[2], m[1] + ik * m[3]]
        }),
        [0, 1].map(|i| -(rows[i][0] + ik * rows[i][2])),
        k,
    )?;
    // Jet (t′, 1+r′, −ikt′, −ik + ikr′).
    let right = solve2(
        [0, 1].map(|i| {
            let m = &rows[i];
            [m[0] - ik * m[2], m[1] + ik * m[3]]
        }),
        [0, 1].map(|i| -(rows[i][1] - ik * rows[i][3])),
        k,
    )?;
    Ok(ScatteringData {
        k,
        r_left: left[0],
        t_left: left[1],
        t_right: right[0],
        r_right: right[1],
    })
}

pub const KAPPA_MAX: f64 = 50.0;
const GRID: usize = 10_000;

/// Negative eigenvalues `E = −κ²` from `e^{κx} | e^{−κx}` solutions, `0 < κ ≤ 50`,
/// in ascending order.
pub fn bound_states(bc: &BoundaryConditionMatrix) -> Result<Vec<f64>, NumericsError> {
    let rows = rank_two_rows(bc)?;
    // Column polynomials in κ: ψ₋ + κψ₋′ and ψ₊ − κψ₊′.
    let col = |r: &[Scalar; 4]| {
        (
            Poly::new(vec![r[0].clone(), r[2].clone()]),
            Poly::new(vec![r[1].clone(), -&r[3]]),
        )
    };
    let (a0, b0) = col(&rows[0]);
    let (a1, b1) = col(&rows[1]);
    let det = &a0 * &b1 - &b0 * &a1;
    if det.is_zero() {
        return Ok(Vec::new());
    }
    // Remove a common phase so the determinant is real for self-adjoint conditions.
    let lead = det.coeffs().iter().find(|c| !c.is_zero()).expect("nonzero").clone();
    let det = det.scale(&lead.inv().expect("nonzero"));
    let coeffs: Vec<Complex64> = det.coeffs().iter().map(|c| c.to_complex64()).collect();
    let eval = |x: f64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c);
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let h = KAPPA_MAX / GRID as f64;
    let mut roots = Vec::new();
    let mut prev_x = h;
    let mut prev = eval(prev_x).re;
    if prev == 0.0 {
        roots.push(prev_x);
    }
    for i in 2..=GRID {
        let x = h * i as f64;
        let v = eval(x).re;
        if v == 0.0 {
            roots.push(x);
        } else if prev != 0.0 && (prev < 0.0) != (v < 0.0) {
            let (mut lo, mut hi, mut flo) = (prev_x, x, prev);
            while hi - lo > 1e-15 * hi {
                let mid = 0.5 * (lo + hi);
                let fm = eval(mid).re;
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (fm < 0.0) == (flo < 0.0) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev = v;
    }
    // A root of the real part only is not an eigenvalue.
    roots.retain(|&x| eval(x).im.abs() <= 1e-9 * scale * (1.0 + x * x));
    let mut energies: Vec<f64> = roots.into_iter().map(|x| -x * x).collect();
    energies.sort_by(f64::total_cmp);
    Ok(energies)
}
