use crate::boundary::{BoundaryJet, OperatorSpec};
use crate::error::SchrodingerError;
use crate::scalar::Scalar;

use super::classify::{classify, Classification};

/// `φ̄₊(0)ψ₊′(0) − φ̄₋(0)ψ₋′(0)`, the trace term left by integrating `−ψ″φ̄` by parts.
pub fn raw_boundary_form(psi: &BoundaryJet, phi: &BoundaryJet) -> Scalar {
    &phi.psi_plus.conj() * &psi.dpsi_plus - &phi.psi_minus.conj() * &psi.dpsi_minus
}

/// Boundary term `b_B(ψ, φ) = Σ φ̄ᵢ mᵢⱼ ψⱼ` over the traces `(ψ₋(0), ψ₊(0))`.
///
/// The full form is `∫ψ′φ̄′` over both half-lines plus this term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryForm {
    pub matrix: [[Scalar; 2]; 2],
}

impl BoundaryForm {
    pub fn diagonal(minus: Scalar, plus: Scalar) -> Self {
        BoundaryForm {
            matrix: [[minus, Scalar::zero()], [Scalar::zero(), plus]],
        }
    }

    pub fn eval(&self, psi: &BoundaryJet, phi: &BoundaryJet) -> Scalar {
        let p = [&psi.psi_minus, &psi.psi_plus];
        let q = [phi.psi_minus.conj(), phi.psi_plus.conj()];
        let mut out = Scalar::zero();
        for i in 0..2 {
            for j in 0..2 {
                out += &(&q[i] * &self.matrix[i][j] * p[j]);
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        (0..2).all(|i| (0..2).all(|j| self.matrix[i][j] == self.matrix[j][i].conj()))
    }
}

/// Boundary term of the form of a self-adjoint potential operator.
///
/// In the interacting case with complex `b₁` the diagonal entries need not be
/// real; the form is Hermitian on jets satisfying the conditions.
pub fn sesquilinear_form(spec: &OperatorSpec) -> Result<BoundaryForm, SchrodingerError> {
    let class = classify(spec)?;
    let OperatorSpec::Potential { c1, c2, b1, b2 } = spec else {
        unreachable!("classify accepts potentials only")
    };
    let one = Scalar::one();
    let half = Scalar::from_ratio(1, 2);
    match class {
        Classification::RestrictionOfSStar { .. } => Err(SchrodingerError::NotSelfAdjoint),
        Classification::SeparatingSA { .. } => {
            let form = if b1 == &one && b2 == &one {
                BoundaryForm::diagonal(Scalar::zero(), c2 * &half)
            } else if b1 == &one {
                BoundaryForm::diagonal(Scalar::zero(), Scalar::zero())
            } else {
                BoundaryForm::diagonal(c1 * &half, Scalar::zero())
            };
            Ok(form)
        }
        Classification::InteractingSA { .. } => {
            let left = c1 / &(&one - b1);
            let right = if (b1 + b2).is_zero() {
                c2 / &(&one - b1)
            } else {
                c2 / &(&one + &b1.conj())
            };
            Ok(BoundaryForm::diagonal(left, right))
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::schrodinger::extract_bc;
    use crate::testing::arb_scalar;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn fixed_forms() {
        let f = sesquilinear_form(&OperatorSpec::potential(s(9), s(4), s(1), s(1))).unwrap();
        assert_eq!(f, BoundaryForm::diagonal(s(0), s(2)));
        let f = sesquilinear_form(&OperatorSpec::potential(s(3), s(-1), s(1), s(-1))).unwrap();
        assert_eq!(f, BoundaryForm::diagonal(s(0), s(0)));
        let f = sesquilinear_form(&OperatorSpec::potential(s(1), s(1), s(0), s(0))).unwrap();
        assert_eq!(f, BoundaryForm::diagonal(s(1), s(1)));
        let psi = BoundaryJet::from_ints([3, 3, 1, 7]);
        let phi = BoundaryJet::new(Scalar::gaussian(1, 1), Scalar::gaussian(1, 1), s(0), s(2));
        assert_eq!(f.eval(&psi, &phi), s(2) * s(3) * Scalar::gaussian(1, -1));
        assert_eq!(
            sesquilinear_form(&OperatorSpec::potential(s(0), s(0), s(2), s(0))),
            Err(SchrodingerError::NotSelfAdjoint)
        );
    }

    /// Random kernel element from the conditions of `spec`.
    fn constrained(spec: &OperatorSpec, w: &[Scalar]) -> BoundaryJet {
        let basis = extract_bc(spec).unwrap().kernel_basis();
        let mut v: [Scalar; 4] = Default::default();
        for (b, c) in basis.iter().zip(w) {
            for (k, x) in b.to_array().iter().enumerate() {
                v[k] += &(c * x);
            }
        }
        BoundaryJet::from_array(v)
    }

    proptest! {
        #[test]
        fn matches_raw_form(
            br in arb_scalar(), bi in arb_scalar(), c1 in arb_scalar(), c2 in arb_scalar(),
            w in proptest::collection::vec(crate::testing::arb_complex(), 4),
        ) {
            let b1 = Scalar::new(br.re().clone(), bi.re().clone());
            // Real numerators make the b₂ = b̄₁ branch self-adjoint.
            let mut specs = vec![
                OperatorSpec::potential(c1.clone(), c2.clone(), Scalar::one(), Scalar::one()),
                OperatorSpec::potential(c1.clone(), c2.clone(), -Scalar::one(), -Scalar::one()),
                OperatorSpec::potential(c1.clone(), c2.clone(), b1.clone(), -&b1),
            ];
            if let (Some(d1), Some(d2)) = (c1.checked_div(&(&b1.conj() - &Scalar::one())), c2.checked_div(&(&b1 + &Scalar::one()))) {
                specs.push(OperatorSpec::potential(d1, d2, b1.clone(), b1.conj()));
            }
            for spec in specs {
                let Ok(form) = sesquilinear_form(&spec) else { continue };
                let psi = constrained(&spec, &w[..2]);
                let phi = constrained(&spec, &w[2..]);
                prop_assert_eq!(form.eval(&psi, &phi), raw_boundary_form(&psi, &phi));
                prop_assert_eq!(form.eval(&psi, &phi), form.eval(&phi, &psi).conj());
            }
        }
    }
}
