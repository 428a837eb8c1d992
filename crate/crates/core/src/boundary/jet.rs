use std::ops::{Add, Mul};

use crate::dist::{DeltaTerm, Distribution, RawDistribution};
use crate::error::BoundaryError;
use crate::poly::Poly;
use crate::scalar::{Rational, Scalar};

/// Traces `(ψ₋(0), ψ₊(0), ψ₋′(0), ψ₊′(0))` of a function that is `H²` on each half-line.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundaryJet {
    pub psi_minus: Scalar,
    pub psi_plus: Scalar,
    pub dpsi_minus: Scalar,
    pub dpsi_plus: Scalar,
}

impl BoundaryJet {
    pub fn new(psi_minus: Scalar, psi_plus: Scalar, dpsi_minus: Scalar, dpsi_plus: Scalar) -> Self {
        BoundaryJet {
            psi_minus,
            psi_plus,
            dpsi_minus,
            dpsi_plus,
        }
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        let [a, b, c, d] = v.map(Scalar::from_int);
        BoundaryJet::new(a, b, c, d)
    }

    pub fn from_array(v: [Scalar; 4]) -> Self {
        let [a, b, c, d] = v;
        BoundaryJet::new(a, b, c, d)
    }

    pub fn to_array(&self) -> [Scalar; 4] {
        [
            self.psi_minus.clone(),
            self.psi_plus.clone(),
            self.dpsi_minus.clone(),
            self.dpsi_plus.clone(),
        ]
    }

    /// The `k`-th unit jet in the slot order above.
    pub fn basis(k: usize) -> Self {
        let mut v: [Scalar; 4] = Default::default();
        v[k] = Scalar::one();
        BoundaryJet::from_array(v)
    }

    /// Reads the jet of `χ₋ψ₋ + χ₊ψ₊` off a distribution with a breakpoint at most at 0.
    pub fn of_distribution(f: &Distribution) -> Self {
        let zero = Rational::from_integer(0.into());
        let left = f.left_piece(&zero);
        let right = f.right_piece(&zero);
        BoundaryJet::new(
            left.eval_real(&zero),
            right.eval_real(&zero),
            left.derivative().eval_real(&zero),
            right.derivative().eval_real(&zero),
        )
    }

    /// `χ₋ψ₋ + χ₊ψ₊` with linear pieces realizing this jet.
    pub fn to_distribution(&self) -> Distribution {
        let left = Poly::new(vec![self.psi_minus.clone(), self.dpsi_minus.clone()]);
        let right = Poly::new(vec![self.psi_plus.clone(), self.dpsi_plus.clone()]);
        Distribution::canonicalize(
            RawDistribution {
                breakpoints: vec![Rational::from_integer(0.into())],
                pieces: vec![left, right],
                deltas: Vec::new(),
            },
            0,
            crate::dist::DEFAULT_DEGREE_CAP,
        )
        .expect("linear pieces are valid")
    }

    pub fn dot(&self, row: &[Scalar; 4]) -> Scalar {
        row.iter().zip(self.to_array()).map(|(r, v)| r * &v).sum()
    }
}

/// `delta · δ + delta_prime · δ′` at 0.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DeltaCombo {
    pub delta: Scalar,
    pub delta_prime: Scalar,
}

impl DeltaCombo {
    pub fn new(delta: Scalar, delta_prime: Scalar) -> Self {
        DeltaCombo { delta, delta_prime }
    }

    pub fn is_zero(&self) -> bool {
        self.delta.is_zero() && self.delta_prime.is_zero()
    }

    pub fn to_distribution(&self) -> Distribution {
        let zero = Rational::from_integer(0.into());
        Distribution::canonicalize(
            RawDistribution {
                breakpoints: vec![zero.clone()],
                pieces: vec![Poly::zero(), Poly::zero()],
                deltas: vec![
                    DeltaTerm::new(zero.clone(), 0, self.delta.clone()),
                    DeltaTerm::new(zero, 1, self.delta_prime.clone()),
                ],
            },
            1,
            crate::dist::DEFAULT_DEGREE_CAP,
        )
        .expect("order one fits")
    }

    /// Inverse of [`DeltaCombo::to_distribution`] for distributions supported at 0.
    pub fn from_distribution(d: &Distribution) -> Result<Self, BoundaryError> {
        let zero = Rational::from_integer(0.into());
        let mut out = DeltaCombo::default();
        if d.pieces().iter().any(|p| !p.is_zero()) {
            return Err(BoundaryError::Malformed("distribution has a regular part".into()));
        }
        for t in d.deltas() {
            match (t.point == zero, t.order) {
                (true, 0) => out.delta = t.coeff.clone(),
                (true, 1) => out.delta_prime = t.coeff.clone(),
                _ => return Err(BoundaryError::Malformed(format!("term of order {} at {}", t.order, t.point))),
            }
        }
        Ok(out)
    }
}

impl Add for DeltaCombo {
    type Output = DeltaCombo;
    fn add(self, rhs: DeltaCombo) -> DeltaCombo {
        DeltaCombo::new(self.delta + rhs.delta, self.delta_prime + rhs.delta_prime)
    }
}

impl Mul<&Scalar> for DeltaCombo {
    type Output = DeltaCombo;
    fn mul(self, c: &Scalar) -> DeltaCombo {
        DeltaCombo::new(&self.delta * c, &self.delta_prime * c)
    }
}
