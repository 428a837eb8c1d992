use std::fmt;

use crate::boundary::{BoundaryJet, OperatorSpec};
use crate::error::SchrodingerError;
use crate::scalar::Scalar;

use super::bc::{extract_bc, BoundaryConditionMatrix};
use super::linalg::det2;

/// Outcome of the self-adjointness analysis of a point interaction.
///
/// Interacting conditions are `[−c, −c, b−1, b+1]·ψ = 0` and
/// `[b̄+1, b̄−1, a, a]·ψ = 0`. Separating conditions are `a±ψ±′(0) = b±ψ±(0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    InteractingSA { a: Scalar, b: Scalar, c: Scalar },
    SeparatingSA { a_minus: Scalar, b_minus: Scalar, a_plus: Scalar, b_plus: Scalar },
    RestrictionOfSStar { bc: BoundaryConditionMatrix },
}

impl Classification {
    pub fn is_self_adjoint(&self) -> bool {
        !matches!(self, Classification::RestrictionOfSStar { .. })
    }

    /// The conditions this classification stands for.
    pub fn bc(&self) -> BoundaryConditionMatrix {
        let one = Scalar::one();
        let zero = Scalar::zero;
        match self {
            Classification::InteractingSA { a, b, c } => BoundaryConditionMatrix::new(vec![
                [-c, -c, b - &one, b + &one],
                [&b.conj() + &one, &b.conj() - &one, a.clone(), a.clone()],
            ]),
            Classification::SeparatingSA {
                a_minus,
                b_minus,
                a_plus,
                b_plus,
            } => BoundaryConditionMatrix::new(vec![
                [b_minus.clone(), zero(), -a_minus, zero()],
                [zero(), b_plus.clone(), zero(), -a_plus],
            ]),
            Classification::RestrictionOfSStar { bc } => bc.clone(),
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::InteractingSA { a, b, c } => write!(f, "InteractingSA(a={a}, b={b}, c={c})"),
            Classification::SeparatingSA {
                a_minus,
                b_minus,
                a_plus,
                b_plus,
            } => write!(
                f,
                "SeparatingSA(a-={a_minus}, b-={b_minus}, a+={a_plus}, b+={b_plus})"
            ),
            Classification::RestrictionOfSStar { .. } => write!(f, "RestrictionOfSStar"),
        }
    }
}

/// `(a, b) ↦ (1, b/a)` or `(0, 1)`, the normalization of one separating side.
pub(crate) fn normalize_side(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
    match b.checked_div(a) {
        Some(r) => (Scalar::one(), r),
        None => (Scalar::zero(), Scalar::one()),
    }
}

fn separating(a_minus: Scalar, b_minus: Scalar, a_plus: Scalar, b_plus: Scalar) -> Classification {
    let (a_minus, b_minus) = normalize_side(&a_minus, &b_minus);
    let (a_plus, b_plus) = normalize_side(&a_plus, &b_plus);
    Classification::SeparatingSA {
        a_minus,
        b_minus,
        a_plus,
        b_plus,
    }
}

/// Exact self-adjointness classification of `c₁δ̂₋ + c₂δ̂₊ + b₁δ̂₋′ + b₂δ̂₊′`.
pub fn classify(spec: &OperatorSpec) -> Result<Classification, SchrodingerError> {
    let OperatorSpec::Potential { c1, c2, b1, b2 } = spec else {
        return Err(SchrodingerError::Precondition(
            "classification applies to potential operators".into(),
        ));
    };
    let one = Scalar::one();
    let minus_one = -Scalar::one();
    let two = Scalar::from_int(2);
    let restriction = || {
        let bc = extract_bc(spec).expect("potential specs are well formed");
        Ok(Classification::RestrictionOfSStar { bc })
    };

    // Separating cases.
    if b1 == &one && b2 == &one {
        // ψ₋(0) = 0 and 2ψ₊′(0) = c₂ψ₊(0).
        return if c2.is_real() {
            Ok(separating(Scalar::zero(), one.clone(), two, c2.clone()))
        } else {
            restriction()
        };
    }
    if b1 == &minus_one && b2 == &minus_one {
        // ψ₊(0) = 0 and 2ψ₋′(0) = −c₁ψ₋(0).
        return if c1.is_real() {
            Ok(separating(two, -c1, Scalar::zero(), one.clone()))
        } else {
            restriction()
        };
    }
    if b1 == &one && b2 == &minus_one {
        return if !(c1 + c2).is_zero() {
            Ok(separating(Scalar::zero(), one.clone(), Scalar::zero(), one.clone()))
        } else {
            restriction()
        };
    }

    let b1c = b1.conj();
    let not_pm_one = b1 != &one && b1 != &minus_one;
    if not_pm_one && b1 == &b2.conj() {
        let num = c1 * &(&b1c - &one) - c2 * &(b1 + &one);
        if num.is_real() {
            let b = (b1 + &b1c) / (&b1c - b1 + &two);
            let c = (&num * &two) / ((&b1c - b1).pow(2) - Scalar::from_int(4));
            return Ok(Classification::InteractingSA {
                a: Scalar::zero(),
                b,
                c,
            });
        }
    }
    if not_pm_one && (b1 + b2).is_zero() {
        let c = (c1 + c2) / (&two * &(&one - b1));
        if c.is_real() {
            return Ok(Classification::InteractingSA {
                a: Scalar::zero(),
                b: Scalar::zero(),
                c,
            });
        }
    }
    restriction()
}

/// Boundary symplectic form `ψ₊′φ̄₊ − ψ₊φ̄₊′ − ψ₋′φ̄₋ + ψ₋φ̄₋′`.
pub fn boundary_symplectic(psi: &BoundaryJet, phi: &BoundaryJet) -> Scalar {
    &psi.dpsi_plus * &phi.psi_plus.conj() - &psi.psi_plus * &phi.dpsi_plus.conj()
        - &psi.dpsi_minus * &phi.psi_minus.conj()
        + &psi.psi_minus * &phi.dpsi_minus.conj()
}

/// Rank 2 with a kernel on which the boundary form vanishes identically.
pub fn is_self_adjoint_bc(bc: &BoundaryConditionMatrix) -> bool {
    if bc.rank() != 2 {
        return false;
    }
    let k = bc.kernel_basis();
    k.iter()
        .all(|u| k.iter().all(|v| boundary_symplectic(u, v).is_zero()))
}

/// Classification read off a condition matrix alone, independent of any
/// operator representation. Self-adjoint conditions outside both charts are
/// reported as restrictions.
pub fn classify_bc(bc: &BoundaryConditionMatrix) -> Classification {
    let restriction = Classification::RestrictionOfSStar { bc: bc.clone() };
    if !is_self_adjoint_bc(bc) {
        return restriction;
    }
    let minus = bc.row_vector_vanishing_on(&[1, 3]);
    let plus = bc.row_vector_vanishing_on(&[0, 2]);
    if let (Some(m), Some(p)) = (minus, plus) {
        let (a_minus, b_minus) = normalize_side(&-&m[2], &m[0]);
        let (a_plus, b_plus) = normalize_side(&-&p[3], &p[1]);
        return Classification::SeparatingSA {
            a_minus,
            b_minus,
            a_plus,
            b_plus,
        };
    }
    // Coordinates S = ψ₋+ψ₊, S′ = ψ₋′+ψ₊′, D = ψ₊−ψ₋, D′ = ψ₊′−ψ₋′;
    // the conditions read (D, D′) = T (S, S′) with T = [[b̄, a], [c, −b]].
    let half = Scalar::from_ratio(1, 2);
    let rows = bc.rref();
    let coords = |r: &[Scalar; 4]| {
        [
            (&r[0] + &r[1]) * &half,
            (&r[2] + &r[3]) * &half,
            (&r[1] - &r[0]) * &half,
            (&r[3] - &r[2]) * &half,
        ]
    };
    let (r0, r1) = (coords(&rows[0]), coords(&rows[1]));
    let det = det2([[&r0[2], &r0[3]], [&r1[2], &r1[3]]]);
    let Some(inv) = det.inv() else {
        return restriction;
    };
    // T = −C⁻¹A with A the (S, S′) block and C the (D, D′) block.
    let ci = [[&r1[3] * &inv, -(&r0[3] * &inv)], [-(&r1[2] * &inv), &r0[2] * &inv]];
    let a_blk = [[&r0[0], &r0[1]], [&r1[0], &r1[1]]];
    let t = |i: usize, j: usize| -(&ci[i][0] * a_blk[0][j] + &ci[i][1] * a_blk[1][j]);
    let (b_conj, a, c, minus_b) = (t(0, 0), t(0, 1), t(1, 0), t(1, 1));
    let b = -minus_b;
    if a.is_real() && c.is_real() && b.conj() == b_conj {
        Classification::InteractingSA { a, b, c }
    } else {
        restriction
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn pot(c1: Scalar, c2: Scalar, b1: Scalar, b2: Scalar) -> OperatorSpec {
        OperatorSpec::potential(c1, c2, b1, b2)
    }

    #[test]
    fn delta_type() {
        assert_eq!(
            classify(&pot(s(1), s(1), s(0), s(0))).unwrap(),
            Classification::InteractingSA { a: s(0), b: s(0), c: s(1) }
        );
    }

    #[test]
    fn dirichlet_robin() {
        let got = classify(&pot(s(7), s(4), s(1), s(1))).unwrap();
        assert_eq!(
            got,
            Classification::SeparatingSA { a_minus: s(0), b_minus: s(1), a_plus: s(1), b_plus: s(2) }
        );
        assert!(got.bc().row_equivalent(&extract_bc(&pot(s(7), s(4), s(1), s(1))).unwrap()));
    }

    #[test]
    fn dirichlet_dirichlet() {
        let got = classify(&pot(s(1), s(1), s(1), s(-1))).unwrap();
        assert_eq!(
            got,
            Classification::SeparatingSA { a_minus: s(0), b_minus: s(1), a_plus: s(0), b_plus: s(1) }
        );
        assert!(!classify(&pot(s(1), s(-1), s(1), s(-1))).unwrap().is_self_adjoint());
    }

    #[test]
    fn not_self_adjoint() {
        let got = classify(&pot(s(0), s(0), s(2), s(0))).unwrap();
        assert!(matches!(got, Classification::RestrictionOfSStar { .. }));
        assert!(!is_self_adjoint_bc(&got.bc()));
    }

    #[test]
    fn requires_potential() {
        let spec = OperatorSpec::DeltaPrimeFamily { c: s(0), d: s(0), e: s(0), f: s(0) };
        assert!(matches!(classify(&spec), Err(SchrodingerError::Precondition(_))));
    }

    #[test]
    fn delta_prime_third() {
        let third = Scalar::from_ratio(1, 3);
        let got = classify(&pot(s(0), s(0), third.clone(), third.clone())).unwrap();
        assert_eq!(got, Classification::InteractingSA { a: s(0), b: third, c: s(0) });
    }

    /// Exact classification agrees with the representation-free analysis on a
    /// dense grid of small Gaussian-integer and half-integer coefficients.
    #[test]
    fn agrees_with_generic_analysis() {
        let vals: Vec<Scalar> = [
            (0, 0), (1, 0), (-1, 0), (2, 0), (0, 1), (0, -1), (1, 1), (-1, 1),
        ]
        .iter()
        .map(|&(a, b)| Scalar::gaussian(a, b))
        .chain([Scalar::from_ratio(1, 2), Scalar::from_ratio(-1, 3)])
        .collect();
        let mut checked = 0;
        for c1 in &vals {
            for c2 in &vals {
                for b1 in &vals {
                    for b2 in &vals {
                        let spec = pot(c1.clone(), c2.clone(), b1.clone(), b2.clone());
                        let bc = extract_bc(&spec).unwrap();
                        let exact = classify(&spec).unwrap();
                        assert_eq!(
                            exact.is_self_adjoint(),
                            is_self_adjoint_bc(&bc),
                            "{c1} {c2} {b1} {b2}: {exact}"
                        );
                        if exact.is_self_adjoint() {
                            assert!(exact.bc().row_equivalent(&bc), "{c1} {c2} {b1} {b2}");
                            assert_eq!(classify_bc(&bc), exact, "{c1} {c2} {b1} {b2}");
                        }
                        checked += 1;
                    }
                }
            }
        }
        assert_eq!(checked, 10_000);
    }
}
