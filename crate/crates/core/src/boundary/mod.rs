//! One-sided deltas at 0 and the boundary operators built from them.
//!
//! Every operator here acts on `H²(ℝ₋) ⊕ H²(ℝ₊)` only through the four
//! boundary traces, so the calculus works on [`BoundaryJet`] values. Results
//! are combinations of `δ` and `δ′` at 0.

mod jet;

pub use jet::{BoundaryJet, DeltaCombo};

use crate::dist::Distribution;
use crate::error::BoundaryError;
use crate::scalar::Scalar;

/// `Left` is `δ̂₋` (star-multiplication from the right), `Right` is `δ̂₊`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn slot(self) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftingDelta {
    pub side: Side,
    pub order: u32,
    pub point: Scalar,
}

impl ShiftingDelta {
    pub fn new(side: Side, order: u32) -> Self {
        ShiftingDelta {
            side,
            order,
            point: Scalar::zero(),
        }
    }
}

/// Traces `(ψ(0), ψ′(0))` of the given side.
fn side_values(side: Side, psi: &BoundaryJet) -> (Scalar, Scalar) {
    match side {
        Side::Left => (psi.psi_minus.clone(), psi.dpsi_minus.clone()),
        Side::Right => (psi.psi_plus.clone(), psi.dpsi_plus.clone()),
    }
}

/// `δ̂±ψ = ψ±(0)δ` and `δ̂′±ψ = ψ±(0)δ′ − ψ±′(0)δ`.
pub fn apply_shifting_delta(sd: &ShiftingDelta, psi: &BoundaryJet) -> Result<DeltaCombo, BoundaryError> {
    if !sd.point.is_zero() {
        return Err(BoundaryError::NonZeroPoint(sd.point.to_string()));
    }
    let (v, dv) = side_values(sd.side, psi);
    match sd.order {
        0 => Ok(DeltaCombo::new(v, Scalar::zero())),
        1 => Ok(DeltaCombo::new(-dv, v)),
        k => Err(BoundaryError::OrderTooHigh(k)),
    }
}

/// `δ̂₊^{(k)}F = δ^{(k)} * F` and `δ̂₋^{(k)}F = F * δ^{(k)}` on a whole distribution.
/// The product promotes both operands to the larger regularity index.
pub fn apply_shifting_delta_dist(sd: &ShiftingDelta, f: &Distribution) -> Result<Distribution, BoundaryError> {
    let point = sd
        .point
        .as_real()
        .cloned()
        .ok_or_else(|| BoundaryError::NonZeroPoint(sd.point.to_string()))?;
    let delta = Distribution::delta(point, sd.order);
    let out = match sd.side {
        Side::Right => delta.star(f)?,
        Side::Left => f.star(&delta)?,
    };
    Ok(out)
}

/// `coeff · D_x^{outer} δ̂^{(order)}_{side} D_x^{inner}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorTerm {
    pub coeff: Scalar,
    pub outer_dx: bool,
    pub delta: ShiftingDelta,
    pub inner_dx: bool,
}

impl OperatorTerm {
    fn apply(&self, psi: &BoundaryJet) -> Result<DeltaCombo, BoundaryError> {
        if self.delta.order > 0 && (self.outer_dx || self.inner_dx) {
            // D_x δ̂′ yields δ″, and δ̂′ D_x needs second traces.
            return Err(BoundaryError::SecondDerivative);
        }
        let base = if self.inner_dx {
            let (_, dv) = side_values(self.delta.side, psi);
            DeltaCombo::new(dv, Scalar::zero())
        } else {
            apply_shifting_delta(&self.delta, psi)?
        };
        let out = if self.outer_dx {
            DeltaCombo::new(Scalar::zero(), base.delta)
        } else {
            base
        };
        Ok(out * &self.coeff)
    }
}

/// Finite sum of [`OperatorTerm`]s.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PseudoOperator {
    pub terms: Vec<OperatorTerm>,
}

impl PseudoOperator {
    pub fn shifting(side: Side, order: u32) -> Self {
        PseudoOperator {
            terms: vec![OperatorTerm {
                coeff: Scalar::one(),
                outer_dx: false,
                delta: ShiftingDelta::new(side, order),
                inner_dx: false,
            }],
        }
    }

    pub fn add(&self, other: &PseudoOperator) -> PseudoOperator {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        PseudoOperator { terms }
    }

    pub fn scale(&self, c: &Scalar) -> PseudoOperator {
        PseudoOperator {
            terms: self
                .terms
                .iter()
                .map(|t| OperatorTerm {
                    coeff: &t.coeff * c,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// `D_x ∘ self`.
    pub fn dx_left(&self) -> Result<PseudoOperator, BoundaryError> {
        self.compose_dx(true)
    }

    /// `self ∘ D_x`.
    pub fn dx_right(&self) -> Result<PseudoOperator, BoundaryError> {
        self.compose_dx(false)
    }

    fn compose_dx(&self, outer: bool) -> Result<PseudoOperator, BoundaryError> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let taken = if outer { t.outer_dx } else { t.inner_dx };
                if taken || t.delta.order > 0 {
                    return Err(BoundaryError::SecondDerivative);
                }
                let mut t = t.clone();
                if outer {
                    t.outer_dx = true;
                } else {
                    t.inner_dx = true;
                }
                Ok(t)
            })
            .collect::<Result<_, _>>()?;
        Ok(PseudoOperator { terms })
    }

    pub fn apply(&self, psi: &BoundaryJet) -> Result<DeltaCombo, BoundaryError> {
        self.terms
            .iter()
            .try_fold(DeltaCombo::default(), |acc, t| Ok(acc + t.apply(psi)?))
    }

    /// Normal form `B̂₁ + B̂₂D_x + D_xB̂₃D_x`, using `D_xδ̂± = δ̂′± + δ̂±D_x`.
    pub fn normal_form(&self) -> Result<OperatorSpec, BoundaryError> {
        let mut b1: [Scalar; 4] = Default::default();
        let mut b2: [Scalar; 4] = Default::default();
        let mut b3: [Scalar; 4] = Default::default();
        for t in &self.terms {
            let s = t.delta.side.slot();
            match (t.outer_dx, t.delta.order, t.inner_dx) {
                (false, 0, false) => b1[s] += &t.coeff,
                (false, 1, false) => b1[2 + s] += &t.coeff,
                (false, 0, true) => b2[s] += &t.coeff,
                (true, 0, false) => {
                    b1[2 + s] += &t.coeff;
                    b2[s] += &t.coeff;
                }
                (true, 0, true) => b3[s] += &t.coeff,
                _ => return Err(BoundaryError::SecondDerivative),
            }
        }
        Ok(OperatorSpec::GeneralPseudo { b1, b2, b3 })
    }
}

/// `α̂^{(n)} = δ̂₊^{(n)} + δ̂₋^{(n)}`.
pub fn alpha(n: u32) -> Result<PseudoOperator, BoundaryError> {
    if n > 1 {
        return Err(BoundaryError::OrderTooHigh(n));
    }
    Ok(PseudoOperator::shifting(Side::Right, n).add(&PseudoOperator::shifting(Side::Left, n)))
}

/// `β̂^{(n)} = δ̂₊^{(n)} − δ̂₋^{(n)}`.
pub fn beta(n: u32) -> Result<PseudoOperator, BoundaryError> {
    if n > 1 {
        return Err(BoundaryError::OrderTooHigh(n));
    }
    let minus = PseudoOperator::shifting(Side::Left, n).scale(&-Scalar::one());
    Ok(PseudoOperator::shifting(Side::Right, n).add(&minus))
}

/// Coefficients of a boundary (pseudo) potential operator.
///
/// Four-slot arrays are ordered `δ̂₋, δ̂₊, δ̂₋′, δ̂₊′`. In `GeneralPseudo` the
/// operator is `B̂₁ + B̂₂D_x + D_xB̂₃D_x`, and `b2`, `b3` must vanish on the
/// `δ′` slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorSpec {
    /// `c₁δ̂₋ + c₂δ̂₊ + b₁δ̂₋′ + b₂δ̂₊′`.
    Potential { c1: Scalar, c2: Scalar, b1: Scalar, b2: Scalar },
    GeneralPseudo { b1: [Scalar; 4], b2: [Scalar; 4], b3: [Scalar; 4] },
    /// `cδ̂₊′ + dδ̂₋′ + eD_xβ̂ + fβ̂D_x`.
    DeltaPrimeFamily { c: Scalar, d: Scalar, e: Scalar, f: Scalar },
}

impl OperatorSpec {
    pub fn potential(c1: Scalar, c2: Scalar, b1: Scalar, b2: Scalar) -> Self {
        OperatorSpec::Potential { c1, c2, b1, b2 }
    }

    pub fn zero() -> Self {
        OperatorSpec::potential(Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero())
    }

    pub fn validate(&self) -> Result<(), BoundaryError> {
        if let OperatorSpec::GeneralPseudo { b2, b3, .. } = self {
            if [&b2[2], &b2[3], &b3[2], &b3[3]].iter().any(|c| !c.is_zero()) {
                return Err(BoundaryError::Malformed(
                    "B2 and B3 may only contain order-zero shifting deltas".into(),
                ));
            }
        }
        Ok(())
    }

    /// The operator as a sum of elementary terms.
    pub fn to_operator(&self) -> Result<PseudoOperator, BoundaryError> {
        self.validate()?;
        let term = |c: &Scalar, outer: bool, side: Side, order: u32, inner: bool| OperatorTerm {
            coeff: c.clone(),
            outer_dx: outer,
            delta: ShiftingDelta::new(side, order),
            inner_dx: inner,
        };
        let terms = match self {
            OperatorSpec::Potential { c1, c2, b1, b2 } => vec![
                term(c1, false, Side::Left, 0, false),
                term(c2, false, Side::Right, 0, false),
                term(b1, false, Side::Left, 1, false),
                term(b2, false, Side::Right, 1, false),
            ],
            OperatorSpec::GeneralPseudo { b1, b2, b3 } => {
                let sides = [Side::Left, Side::Right];
                let mut t = Vec::new();
                for (k, side) in sides.iter().enumerate() {
                    t.push(term(&b1[k], false, *side, 0, false));
                    t.push(term(&b1[2 + k], false, *side, 1, false));
                    t.push(term(&b2[k], false, *side, 0, true));
                    t.push(term(&b3[k], true, *side, 0, true));
                }
                t
            }
            OperatorSpec::DeltaPrimeFamily { c, d, e, f } => {
                let mut t = vec![term(c, false, Side::Right, 1, false), term(d, false, Side::Left, 1, false)];
                t.extend(beta(0)?.scale(e).dx_left()?.terms);
                t.extend(beta(0)?.scale(f).dx_right()?.terms);
                t
            }
        };
        Ok(PseudoOperator {
            terms: terms.into_iter().filter(|t| !t.coeff.is_zero()).collect(),
        })
    }

    /// Equivalent `GeneralPseudo` normal form.
    pub fn normalized(&self) -> Result<OperatorSpec, BoundaryError> {
        self.to_operator()?.normal_form()
    }

    pub fn is_potential(&self) -> bool {
        matches!(self, OperatorSpec::Potential { .. })
    }
}

/// Action of an operator on a jet.
pub fn apply_operator(spec: &OperatorSpec, psi: &BoundaryJet) -> Result<DeltaCombo, BoundaryError> {
    spec.to_operator()?.apply(psi)
}

/// The two linear functionals in `F̂ψ = P(ψ)δ + Q(ψ)δ′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FHat {
    pub delta_row: [Scalar; 4],
    pub delta_prime_row: [Scalar; 4],
}

impl FHat {
    /// Condition rows `[−P; Q]`, the sign convention used for displayed conditions.
    pub fn rows(&self) -> [[Scalar; 4]; 2] {
        [self.delta_row.clone().map(|c| -c), self.delta_prime_row.clone()]
    }
}

/// The `Ŝ*` part `2β̂D_x + β̂′`.
pub fn s_star_operator() -> PseudoOperator {
    let two = Scalar::from_int(2);
    let b = beta(0).expect("order zero");
    b.scale(&two)
        .dx_right()
        .expect("order zero")
        .add(&beta(1).expect("order one"))
}

/// `F̂ = −2β̂D_x − β̂′ + B̂`, read off on the unit jets.
pub fn build_f_hat(spec: &OperatorSpec) -> Result<FHat, BoundaryError> {
    let op = s_star_operator().scale(&-Scalar::one()).add(&spec.to_operator()?);
    let mut delta_row: [Scalar; 4] = Default::default();
    let mut delta_prime_row: [Scalar; 4] = Default::default();
    for k in 0..4 {
        let v = op.apply(&BoundaryJet::basis(k))?;
        delta_row[k] = v.delta;
        delta_prime_row[k] = v.delta_prime;
    }
    Ok(FHat {
        delta_row,
        delta_prime_row,
    })
}
