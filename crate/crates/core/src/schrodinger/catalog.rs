//! Named operators and the boundary conditions they are known by.

use crate::boundary::{s_star_operator, OperatorSpec};
use crate::error::SchrodingerError;
use crate::scalar::Scalar;

use super::bc::BoundaryConditionMatrix;
use super::classify::Classification;
use super::linalg::det2;
use super::represent::{dirichlet_forms, interacting_pseudo, represent_from_bc};

/// `Ŝ* = 2β̂D_x + β̂′`, no conditions.
pub fn s_star() -> OperatorSpec {
    s_star_operator().normal_form().expect("first order")
}

pub fn dirichlet() -> [OperatorSpec; 2] {
    dirichlet_forms()
}

/// Separating conditions `a±ψ±′(0) = b±ψ±(0)` as a pseudo potential.
pub fn separating(a_minus: &Scalar, b_minus: &Scalar, a_plus: &Scalar, b_plus: &Scalar) -> OperatorSpec {
    let rows = Classification::SeparatingSA {
        a_minus: a_minus.clone(),
        b_minus: b_minus.clone(),
        a_plus: a_plus.clone(),
        b_plus: b_plus.clone(),
    }
    .bc();
    let rows = rows.rows();
    represent_from_bc(&rows[0], &rows[1])
}

pub fn interacting(a: &Scalar, b: &Scalar, c: &Scalar) -> OperatorSpec {
    interacting_pseudo(a, b, c)
}

/// `δ` interaction of strength `a`: `ψ` continuous, `ψ₊′ − ψ₋′ = aψ(0)`.
pub fn h_delta(a: &Scalar) -> OperatorSpec {
    let half = a * &Scalar::from_ratio(1, 2);
    OperatorSpec::potential(half.clone(), half, Scalar::zero(), Scalar::zero())
}

/// `δ′` type operator with `ψ₊(0) = θψ₋(0)`, `θψ₊′(0) = ψ₋′(0)`.
pub fn h_delta_prime(theta: &Scalar) -> Result<OperatorSpec, SchrodingerError> {
    let one = Scalar::one();
    let c = (theta - &one)
        .checked_div(&(theta + &one))
        .ok_or_else(|| SchrodingerError::Precondition("theta must differ from -1".into()))?;
    Ok(OperatorSpec::potential(Scalar::zero(), Scalar::zero(), c.clone(), c))
}

/// `θ = (c+1)/(1−c)` for `Potential(0, 0, c, c)`.
pub fn theta_of_delta_prime(c: &Scalar) -> Option<Scalar> {
    (c + &Scalar::one()).checked_div(&(Scalar::one() - c))
}

/// `ψ₊ = ψ₋`, `ψ₊′ − ψ₋′ = aψ(0)`.
pub fn k_form(a: &Scalar) -> BoundaryConditionMatrix {
    let (zero, one) = (Scalar::zero, Scalar::one);
    BoundaryConditionMatrix::new(vec![
        [-one(), one(), zero(), zero()],
        [-a, zero(), -one(), one()],
    ])
}

/// `ψ₊ = θψ₋`, `θψ₊′ = ψ₋′`.
pub fn k_prime_form(theta: &Scalar) -> BoundaryConditionMatrix {
    let (zero, one) = (Scalar::zero, Scalar::one);
    BoundaryConditionMatrix::new(vec![
        [-theta, one(), zero(), zero()],
        [zero(), zero(), -one(), theta.clone()],
    ])
}

pub fn dirichlet_bc() -> BoundaryConditionMatrix {
    BoundaryConditionMatrix::from_ints(&[[1, 0, 0, 0], [0, 1, 0, 0]])
}

pub fn neumann_bc() -> BoundaryConditionMatrix {
    BoundaryConditionMatrix::from_ints(&[[0, 0, 1, 0], [0, 0, 0, 1]])
}

/// A known form row-equivalent to `bc`, with its parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedForm {
    Free,
    Dirichlet,
    Neumann,
    Delta { a: Scalar },
    DeltaPrime { theta: Scalar },
}

pub fn named_form(bc: &BoundaryConditionMatrix) -> Option<NamedForm> {
    if bc.rank() == 0 {
        return Some(NamedForm::Free);
    }
    if bc.row_equivalent(&dirichlet_bc()) {
        return Some(NamedForm::Dirichlet);
    }
    if bc.row_equivalent(&neumann_bc()) {
        return Some(NamedForm::Neumann);
    }
    // Both forms have a kernel vector with ψ₋ = 1 and ψ₋′ = 0.
    let k = bc.kernel_basis();
    if k.len() != 2 {
        return None;
    }
    let (k0, k1) = (k[0].to_array(), k[1].to_array());
    let inv = det2([[&k0[0], &k1[0]], [&k0[2], &k1[2]]]).inv()?;
    let l0 = &k1[2] * &inv;
    let l1 = -(&k0[2] * &inv);
    let v: Vec<Scalar> = (0..4).map(|c| &l0 * &k0[c] + &l1 * &k1[c]).collect();
    let candidates = [
        NamedForm::Delta { a: &v[3] - &v[2] },
        NamedForm::DeltaPrime { theta: v[1].clone() },
    ];
    candidates.into_iter().find(|f| match f {
        NamedForm::Delta { a } => bc.row_equivalent(&k_form(a)),
        NamedForm::DeltaPrime { theta } => bc.row_equivalent(&k_prime_form(theta)),
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schrodinger::{classify, extract_bc};

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn delta_conditions() {
        let (d, c) = (s(3), Scalar::from_ratio(-1, 2));
        let bc = extract_bc(&OperatorSpec::potential(d.clone(), c.clone(), s(0), s(0))).unwrap();
        assert!(bc.row_equivalent(&k_form(&(&c + &d))));
        assert_eq!(named_form(&bc), Some(NamedForm::Delta { a: &c + &d }));
        assert!(extract_bc(&h_delta(&s(-2))).unwrap().row_equivalent(&k_form(&s(-2))));
    }

    #[test]
    fn delta_prime_conditions() {
        let c = Scalar::from_ratio(1, 3);
        let theta = theta_of_delta_prime(&c).unwrap();
        assert_eq!(theta, s(2));
        let bc = extract_bc(&OperatorSpec::potential(s(0), s(0), c.clone(), c.clone())).unwrap();
        assert!(bc.row_equivalent(&k_prime_form(&theta)));
        assert_eq!(named_form(&bc), Some(NamedForm::DeltaPrime { theta: s(2) }));
        assert_eq!(h_delta_prime(&s(2)).unwrap(), OperatorSpec::potential(s(0), s(0), c.clone(), c));
        assert!(h_delta_prime(&s(-1)).is_err());
    }

    #[test]
    fn named_catalog() {
        assert_eq!(named_form(&extract_bc(&s_star()).unwrap()), Some(NamedForm::Free));
        for d in dirichlet() {
            assert_eq!(named_form(&extract_bc(&d).unwrap()), Some(NamedForm::Dirichlet));
        }
        let nn = separating(&s(1), &s(0), &s(1), &s(0));
        assert_eq!(named_form(&extract_bc(&nn).unwrap()), Some(NamedForm::Neumann));
        let li = interacting(&s(1), &Scalar::gaussian(1, 1), &s(2));
        assert!(classify(&li).is_err());
        assert_eq!(named_form(&extract_bc(&li).unwrap()), None);
    }

    #[test]
    fn theta_one_is_free_propagation() {
        let bc = k_prime_form(&s(1));
        assert!(bc.row_equivalent(&k_form(&s(0))));
    }
}
