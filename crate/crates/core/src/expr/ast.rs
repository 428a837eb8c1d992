use crate::dist::{Bound, Distribution, DEFAULT_DEGREE_CAP};
use crate::error::{DistError, ExprError};
use crate::poly::Poly;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum DistExpr {
    Sum(Vec<(bool, DistExpr)>),
    Const(Scalar),
    Scale(Scalar, Box<DistExpr>),
    Delta { point: Scalar, order: u32 },
    Heaviside(Scalar),
    Piece { lo: Bound, hi: Bound, poly: Poly },
    Star(Box<DistExpr>, Box<DistExpr>),
    Derivative(Box<DistExpr>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    /// Largest admissible delta order; `None` leaves it unbounded.
    pub n_cap: Option<u32>,
    pub degree_cap: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            n_cap: None,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

fn real_point(s: &Scalar) -> Result<Rational, DistError> {
    s.as_real().cloned().ok_or_else(|| DistError::NonRealPoint(s.to_string()))
}

impl DistExpr {
    pub fn eval(&self, opts: &EvalOptions) -> Result<Distribution, ExprError> {
        let d = self.eval_inner(opts)?;
        if let Some(cap) = opts.n_cap {
            return Ok(d.with_n(cap)?);
        }
        Ok(d)
    }

    fn eval_inner(&self, opts: &EvalOptions) -> Result<Distribution, ExprError> {
        let check = |d: Distribution| -> Result<Distribution, ExprError> {
            match opts.n_cap {
                Some(cap) if d.order_of() > cap + 1 => Err(DistError::DeltaOrderExceedsCap {
                    order: d.order_of() - 1,
                    cap,
                }
                .into()),
                _ => Ok(d),
            }
        };
        let with_cap = |d: Distribution| -> Result<Distribution, ExprError> {
            let cap = d.degree_cap().max(opts.degree_cap);
            Ok(d.with_degree_cap(cap)?)
        };
        let out = match self {
            DistExpr::Sum(terms) => {
                let mut acc = Distribution::zero();
                for (negative, t) in terms {
                    let v = t.eval_inner(opts)?;
                    acc = if *negative { acc.sub(&v)? } else { acc.add(&v)? };
                }
                acc
            }
            DistExpr::Const(c) => with_cap(Distribution::smooth(Poly::constant(c.clone()))?)?,
            DistExpr::Scale(c, child) => child.eval_inner(opts)?.scale(c),
            DistExpr::Delta { point, order } => {
                with_cap(Distribution::delta(real_point(point)?, *order))?
            }
            DistExpr::Heaviside(p) => with_cap(Distribution::heaviside(real_point(p)?))?,
            DistExpr::Piece { lo, hi, poly } => {
                if poly.degree() > opts.degree_cap {
                    return Err(DistError::DegreeCapExceeded {
                        degree: poly.degree(),
                        cap: opts.degree_cap,
                    }
                    .into());
                }
                with_cap(Distribution::piece(lo.clone(), hi.clone(), poly.clone())?)?
            }
            DistExpr::Star(a, b) => a.eval_inner(opts)?.star(&b.eval_inner(opts)?)?,
            DistExpr::Derivative(child) => child.eval_inner(opts)?.derivative(),
        };
        check(out)
    }
}
