use crate::boundary::OperatorSpec;
use crate::error::SchrodingerError;
use crate::scalar::Scalar;

use super::bc::BoundaryConditionMatrix;
use super::linalg::det2;

/// A family of potential operators `c₁δ̂₋ + c₂δ̂₊ + b₁δ̂₋′ + b₂δ̂₊′` that all
/// realize the same boundary conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PotentialFamily {
    /// `b₂ = b̄₁` fixed; `c₁ = k/x₁`, `c₂ = (c−k)/x₂` for real `k`.
    SplitStrength { b1: Scalar, x1: Scalar, x2: Scalar, c: Scalar },
    /// `b₂ = −b₁` with `b₁ ≠ ±1`, and `c₁ + c₂ = 2c(1−b₁)`.
    SkewDerivative { c: Scalar },
    /// `b₁ = b₂ = 1`, `c₂` fixed, `c₁` free.
    FreeLeft { c2: Scalar },
    /// `b₁ = b₂ = −1`, `c₁` fixed, `c₂` free.
    FreeRight { c1: Scalar },
    /// `b₁ = 1`, `b₂ = −1`, any `c₁ + c₂ ≠ 0`.
    DirichletPair,
}

impl PotentialFamily {
    /// Names of the free parameters, in the order `member` expects them.
    pub fn parameters(&self) -> &'static [&'static str] {
        match self {
            PotentialFamily::SplitStrength { .. } => &["k1"],
            PotentialFamily::SkewDerivative { .. } => &["b1", "c1"],
            PotentialFamily::FreeLeft { .. } => &["c1"],
            PotentialFamily::FreeRight { .. } => &["c2"],
            PotentialFamily::DirichletPair => &["c1", "c2"],
        }
    }

    /// Parameters of the default member: `k₁ = c/2`; `b₁ = 0, c₁ = c`; free
    /// strengths zero; `c₁ = 1, c₂ = 0` for the Dirichlet pair.
    pub fn default_parameters(&self) -> Vec<Scalar> {
        let half = Scalar::from_ratio(1, 2);
        match self {
            PotentialFamily::SplitStrength { c, .. } => vec![c * &half],
            PotentialFamily::SkewDerivative { c } => vec![Scalar::zero(), c.clone()],
            PotentialFamily::FreeLeft { .. } | PotentialFamily::FreeRight { .. } => vec![Scalar::zero()],
            PotentialFamily::DirichletPair => vec![Scalar::one(), Scalar::zero()],
        }
    }

    pub fn default_member(&self) -> OperatorSpec {
        self.member(&self.default_parameters())
            .expect("default parameters are admissible")
    }

    pub fn member(&self, params: &[Scalar]) -> Result<OperatorSpec, SchrodingerError> {
        if params.len() != self.parameters().len() {
            return Err(SchrodingerError::Precondition(format!(
                "expected {} parameter(s)",
                self.parameters().len()
            )));
        }
        let one = Scalar::one();
        let spec = match self {
            PotentialFamily::SplitStrength { b1, x1, x2, c } => {
                let k1 = &params[0];
                if !k1.is_real() {
                    return Err(SchrodingerError::Precondition("k1 must be real".into()));
                }
                OperatorSpec::potential(k1 / x1, (c - k1) / x2, b1.clone(), b1.conj())
            }
            PotentialFamily::SkewDerivative { c } => {
                let (b1, c1) = (&params[0], &params[1]);
                if b1 == &one || b1 == &-&one {
                    return Err(SchrodingerError::Precondition("b1 must differ from 1 and -1".into()));
                }
                let c2 = Scalar::from_int(2) * c * (&one - b1) - c1;
                OperatorSpec::potential(c1.clone(), c2, b1.clone(), -b1)
            }
            PotentialFamily::FreeLeft { c2 } => OperatorSpec::potential(params[0].clone(), c2.clone(), one.clone(), one),
            PotentialFamily::FreeRight { c1 } => OperatorSpec::potential(c1.clone(), params[0].clone(), -&one, -&one),
            PotentialFamily::DirichletPair => {
                if (&params[0] + &params[1]).is_zero() {
                    return Err(SchrodingerError::Precondition("c1 + c2 must be nonzero".into()));
                }
                OperatorSpec::potential(params[0].clone(), params[1].clone(), one.clone(), -one)
            }
        };
        Ok(spec)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    Potential(PotentialFamily),
    /// No potential realizes the conditions; `pseudo` does.
    NotRepresentable { pseudo: OperatorSpec },
}

impl Representation {
    pub fn is_potential(&self) -> bool {
        matches!(self, Representation::Potential(_))
    }

    /// The default potential member, or the pseudo potential.
    pub fn default_spec(&self) -> OperatorSpec {
        match self {
            Representation::Potential(f) => f.default_member(),
            Representation::NotRepresentable { pseudo } => pseudo.clone(),
        }
    }
}

/// `B̂ = 2β̂D_x + β̂′ + F̂` with `F̂ = f₁(δ̂±, δ̂±D_x) + D_x f₂(δ̂±, δ̂±D_x)`.
///
/// Each functional is ordered `(ψ₋, ψ₊, ψ₋′, ψ₊′)`, so `ψ±` maps to `δ̂±` and
/// `ψ±′` to `δ̂±D_x`.
pub fn represent_from_bc(f1: &[Scalar; 4], f2: &[Scalar; 4]) -> OperatorSpec {
    let one = Scalar::one();
    let two = Scalar::from_int(2);
    let [p_m, p_p, q_m, q_p] = f1.clone();
    let [r_m, r_p, s_m, s_p] = f2.clone();
    let zero = Scalar::zero;
    OperatorSpec::GeneralPseudo {
        b1: [p_m, p_p, &r_m - &one, &r_p + &one],
        b2: [q_m - &two + &r_m, q_p + &two + &r_p, zero(), zero()],
        b3: [s_m, s_p, zero(), zero()],
    }
}

/// `cα̂ − bα̂D_x + aD_xα̂D_x + b̄D_xα̂`.
pub fn interacting_pseudo(a: &Scalar, b: &Scalar, c: &Scalar) -> OperatorSpec {
    let bc = b.conj();
    let zero = Scalar::zero;
    let diff = &bc - b;
    OperatorSpec::GeneralPseudo {
        b1: [c.clone(), c.clone(), bc.clone(), bc],
        b2: [diff.clone(), diff, zero(), zero()],
        b3: [a.clone(), a.clone(), zero(), zero()],
    }
}

/// Potential realizations of interacting self-adjoint conditions `(a, b, c)`.
pub fn represent_interacting(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<Representation, SchrodingerError> {
    if !a.is_real() || !c.is_real() {
        return Err(SchrodingerError::Precondition("a and c must be real".into()));
    }
    let one = Scalar::one();
    let bc = b.conj();
    if ((&one + &bc) * (&one - b) - a * c).is_zero() {
        return Err(SchrodingerError::SideCondition);
    }
    let not_representable = || Representation::NotRepresentable {
        pseudo: interacting_pseudo(a, b, c),
    };
    if !a.is_zero() {
        return Ok(not_representable());
    }
    if b.is_zero() {
        return Ok(Representation::Potential(PotentialFamily::SkewDerivative { c: c.clone() }));
    }
    let re2 = b + &bc;
    if re2.is_zero() || b == &one || b == &-&one {
        return Ok(not_representable());
    }
    let four = Scalar::from_int(4);
    let b1 = (Scalar::from_int(2) * b * &bc + b - &bc) / &re2;
    let x1 = -(&re2 / &four) + &re2 / (&four * &bc);
    let x2 = &re2 / &four + &re2 / (&four * &bc);
    Ok(Representation::Potential(PotentialFamily::SplitStrength {
        b1,
        x1,
        x2,
        c: c.clone(),
    }))
}

/// Potential realizations of `a₋ψ₋′(0) = b₋ψ₋(0)`, `a₊ψ₊′(0) = b₊ψ₊(0)`.
pub fn represent_separating(
    a_minus: &Scalar,
    b_minus: &Scalar,
    a_plus: &Scalar,
    b_plus: &Scalar,
) -> Result<Representation, SchrodingerError> {
    if (a_minus.is_zero() && b_minus.is_zero()) || (a_plus.is_zero() && b_plus.is_zero()) {
        return Err(SchrodingerError::Precondition(
            "each side needs a nonzero (a, b) pair".into(),
        ));
    }
    let two = Scalar::from_int(2);
    let family = match (a_minus.is_zero(), a_plus.is_zero()) {
        (true, false) => PotentialFamily::FreeLeft { c2: &two * b_plus / a_plus },
        (false, true) => PotentialFamily::FreeRight { c1: -(&two * b_minus / a_minus) },
        (true, true) => PotentialFamily::DirichletPair,
        (false, false) => {
            let zero = Scalar::zero;
            let f1 = [-b_minus, zero(), a_minus.clone(), zero()];
            let f2 = [zero(), -b_plus, zero(), a_plus.clone()];
            return Ok(Representation::NotRepresentable {
                pseudo: represent_from_bc(&f1, &f2),
            });
        }
    };
    Ok(Representation::Potential(family))
}

/// Both Dirichlet realizations: `2β̂D_x + β̂′ − δ̂₊ − D_xδ̂₋` and `α̂ − β̂′`.
pub fn dirichlet_forms() -> [OperatorSpec; 2] {
    let i = Scalar::from_int;
    [
        represent_from_bc(&[i(0), i(-1), i(0), i(0)], &[i(-1), i(0), i(0), i(0)]),
        represent_from_bc(&[i(1), i(1), i(0), i(0)], &[i(2), i(-2), i(0), i(0)]),
    ]
}

/// Result of asking whether conditions are realizable with `B̂₃ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum B3ZeroCheck {
    Representable { witness: OperatorSpec },
    /// The derivative block of the conditions is invertible; `minor` is its determinant.
    Impossible { minor: Scalar },
}

impl B3ZeroCheck {
    pub fn is_representable(&self) -> bool {
        matches!(self, B3ZeroCheck::Representable { .. })
    }
}

/// With `B̂₃ = 0` the `δ′` functional of `F̂` cannot see `ψ±′`, so the
/// conditions must contain one free of derivatives.
pub fn check_potential_representable_b3_zero(bc: &BoundaryConditionMatrix) -> Result<B3ZeroCheck, SchrodingerError> {
    let rows = bc.rref();
    if rows.len() != 2 {
        return Err(SchrodingerError::Precondition("conditions must have rank 2".into()));
    }
    let Some(u) = bc.row_vector_vanishing_on(&[2, 3]) else {
        let minor = det2([[&rows[0][2], &rows[0][3]], [&rows[1][2], &rows[1][3]]]);
        return Ok(B3ZeroCheck::Impossible { minor });
    };
    // A second row independent of u: one of the reduced rows works.
    let other = rows
        .iter()
        .find(|r| BoundaryConditionMatrix::new(vec![u.clone(), (*r).clone()]).rank() == 2)
        .expect("rank two")
        .clone();
    let one = Scalar::one();
    let q_m = &u[0] - &one;
    let q_p = &u[1] + &one;
    let r_m = &other[2] - &one + &q_m;
    let r_p = &other[3] + &one + &q_p;
    let zero = Scalar::zero;
    // F̂ then has δ-row `other` and δ′-row `u`.
    let witness = OperatorSpec::GeneralPseudo {
        b1: [other[0].clone(), other[1].clone(), q_m, q_p],
        b2: [r_m, r_p, zero(), zero()],
        b3: [zero(), zero(), zero(), zero()],
    };
    Ok(B3ZeroCheck::Representable { witness })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::schrodinger::{classify, extract_bc, Classification};
    use crate::testing::{arb_complex, arb_scalar};

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn delta_round_trip() {
        let rep = represent_interacting(&s(0), &s(0), &s(1)).unwrap();
        let spec = rep.default_spec();
        assert_eq!(spec, OperatorSpec::potential(s(1), s(1), s(0), s(0)));
        assert_eq!(
            classify(&spec).unwrap(),
            Classification::InteractingSA { a: s(0), b: s(0), c: s(1) }
        );
    }

    #[test]
    fn non_potential_interacting() {
        let rep = represent_interacting(&s(1), &s(0), &s(0)).unwrap();
        assert!(!rep.is_potential());
        let rep = represent_interacting(&s(0), &Scalar::gaussian(0, 2), &s(1)).unwrap();
        assert!(!rep.is_potential());
        assert_eq!(
            represent_interacting(&s(1), &s(0), &s(1)),
            Err(SchrodingerError::SideCondition)
        );
    }

    #[test]
    fn interacting_pseudo_has_the_conditions() {
        for (a, b, c) in [(s(1), Scalar::gaussian(1, 2), s(3)), (s(-2), Scalar::gaussian(0, 1), s(0))] {
            let expected = Classification::InteractingSA { a: a.clone(), b: b.clone(), c: c.clone() }.bc();
            let spec = interacting_pseudo(&a, &b, &c);
            assert!(extract_bc(&spec).unwrap().row_equivalent(&expected));
        }
    }

    #[test]
    fn separating_cases() {
        let rep = represent_separating(&s(0), &s(1), &s(1), &s(0)).unwrap();
        assert_eq!(rep, Representation::Potential(PotentialFamily::FreeLeft { c2: s(0) }));
        let nn = represent_separating(&s(1), &s(0), &s(1), &s(0)).unwrap();
        let Representation::NotRepresentable { pseudo } = nn else { panic!() };
        assert!(extract_bc(&pseudo).unwrap().row_equivalent(&BoundaryConditionMatrix::from_ints(&[[0, 0, 1, 0], [0, 0, 0, 1]])));
        let dd = represent_separating(&s(0), &s(1), &s(0), &s(1)).unwrap();
        assert_eq!(dd, Representation::Potential(PotentialFamily::DirichletPair));
        assert!(PotentialFamily::DirichletPair.member(&[s(1), s(-1)]).is_err());
        assert!(represent_separating(&s(0), &s(0), &s(1), &s(1)).is_err());
    }

    #[test]
    fn dirichlet_forms_agree() {
        let [first, second] = dirichlet_forms();
        let d = BoundaryConditionMatrix::from_ints(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
        assert!(extract_bc(&first).unwrap().row_equivalent(&d));
        assert!(extract_bc(&second).unwrap().row_equivalent(&d));
        let i = Scalar::from_int;
        assert_eq!(
            second,
            OperatorSpec::GeneralPseudo {
                b1: [i(1), i(1), i(1), i(-1)],
                b2: Default::default(),
                b3: Default::default(),
            }
        );
    }

    #[test]
    fn no_go() {
        let nn = BoundaryConditionMatrix::from_ints(&[[0, 0, 1, 0], [0, 0, 0, 1]]);
        let check = check_potential_representable_b3_zero(&nn).unwrap();
        assert_eq!(check, B3ZeroCheck::Impossible { minor: s(1) });
        for m in [[[1, 0, 0, 0], [0, 1, 0, 0]], [[1, -1, 0, 0], [-3, -3, -1, 1]]] {
            let bc = BoundaryConditionMatrix::from_ints(&m);
            let B3ZeroCheck::Representable { witness } = check_potential_representable_b3_zero(&bc).unwrap() else {
                panic!("{bc}");
            };
            assert!(extract_bc(&witness).unwrap().row_equivalent(&bc));
        }
        assert!(check_potential_representable_b3_zero(&BoundaryConditionMatrix::from_ints(&[[1, 0, 0, 0]])).is_err());
    }

    fn arb_row() -> impl Strategy<Value = [Scalar; 4]> {
        [arb_complex(), arb_complex(), arb_complex(), arb_complex()]
    }

    proptest! {
        #[test]
        fn from_bc_kernel_equality(f1 in arb_row(), f2 in arb_row()) {
            let spec = represent_from_bc(&f1, &f2);
            let expected = BoundaryConditionMatrix::new(vec![f1, f2]);
            prop_assert!(extract_bc(&spec).unwrap().row_equivalent(&expected));
        }

        #[test]
        fn b3_zero_witness_or_certificate(f1 in arb_row(), f2 in arb_row()) {
            let bc = BoundaryConditionMatrix::new(vec![f1, f2]);
            prop_assume!(bc.rank() == 2);
            match check_potential_representable_b3_zero(&bc).unwrap() {
                B3ZeroCheck::Representable { witness } => {
                    let OperatorSpec::GeneralPseudo { b3, .. } = &witness else { unreachable!() };
                    prop_assert!(b3.iter().all(Scalar::is_zero));
                    prop_assert!(extract_bc(&witness).unwrap().row_equivalent(&bc));
                }
                B3ZeroCheck::Impossible { minor } => {
                    prop_assert!(!minor.is_zero());
                    prop_assert!(bc.row_vector_vanishing_on(&[2, 3]).is_none());
                }
            }
        }

        #[test]
        fn interacting_round_trip(re in arb_scalar(), im in arb_scalar(), c in arb_scalar(), t in arb_scalar()) {
            let b = Scalar::new(re.re().clone(), im.re().clone());
            prop_assume!(!(&b + &b.conj()).is_zero() && b != Scalar::one() && b != -Scalar::one());
            let rep = represent_interacting(&Scalar::zero(), &b, &c).unwrap();
            let Representation::Potential(family) = rep else { panic!("not a potential") };
            let expected = Classification::InteractingSA { a: Scalar::zero(), b: b.clone(), c: c.clone() };
            for k1 in [family.default_parameters()[0].clone(), t] {
                let spec = family.member(&[k1]).unwrap();
                prop_assert_eq!(classify(&spec).unwrap(), expected.clone());
            }
        }

        #[test]
        fn skew_round_trip(b1 in arb_complex(), c1 in arb_complex(), c in arb_scalar()) {
            prop_assume!(b1 != Scalar::one() && b1 != -Scalar::one());
            let family = PotentialFamily::SkewDerivative { c: c.clone() };
            let spec = family.member(&[b1, c1]).unwrap();
            prop_assert_eq!(
                classify(&spec).unwrap(),
                Classification::InteractingSA { a: Scalar::zero(), b: Scalar::zero(), c }
            );
        }
    }
}
