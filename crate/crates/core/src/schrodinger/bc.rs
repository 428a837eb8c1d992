use std::fmt;

use crate::boundary::{build_f_hat, BoundaryJet, OperatorSpec};
use crate::error::BoundaryError;
use crate::scalar::{Rational, Scalar};

use super::linalg::{kernel, rref};

/// Linear conditions on `(ψ₋(0), ψ₊(0), ψ₋′(0), ψ₊′(0))`. Zero rows are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundaryConditionMatrix {
    rows: Vec<[Scalar; 4]>,
}

fn to_vecs(rows: &[[Scalar; 4]]) -> Vec<Vec<Scalar>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn to_array(v: Vec<Scalar>) -> [Scalar; 4] {
    v.try_into().expect("four columns")
}

impl BoundaryConditionMatrix {
    pub fn new(rows: Vec<[Scalar; 4]>) -> Self {
        BoundaryConditionMatrix {
            rows: rows.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())).collect(),
        }
    }

    pub fn from_ints(rows: &[[i64; 4]]) -> Self {
        BoundaryConditionMatrix::new(rows.iter().map(|r| r.map(Scalar::from_int)).collect())
    }

    pub fn rows(&self) -> &[[Scalar; 4]] {
        &self.rows
    }

    /// Reduced row echelon form (nonzero rows only).
    pub fn rref(&self) -> Vec<[Scalar; 4]> {
        rref(to_vecs(&self.rows), 4).0.into_iter().map(to_array).collect()
    }

    pub fn rank(&self) -> usize {
        self.rref().len()
    }

    /// Same kernel on jets.
    pub fn row_equivalent(&self, other: &BoundaryConditionMatrix) -> bool {
        self.rref() == other.rref()
    }

    pub fn kernel_basis(&self) -> Vec<BoundaryJet> {
        kernel(&to_vecs(&self.rows), 4)
            .into_iter()
            .map(|v| BoundaryJet::from_array(to_array(v)))
            .collect()
    }

    pub fn contains(&self, psi: &BoundaryJet) -> bool {
        self.rows.iter().all(|r| psi.dot(r).is_zero())
    }

    /// A nonzero vector of the row space vanishing on the given columns, if any.
    pub fn row_vector_vanishing_on(&self, cols: &[usize]) -> Option<[Scalar; 4]> {
        let reduced = self.rref();
        if reduced.is_empty() {
            return None;
        }
        // Coefficients λ with Σ λ_i row_i[c] = 0 for every c in cols.
        let system: Vec<Vec<Scalar>> = cols
            .iter()
            .map(|&c| reduced.iter().map(|r| r[c].clone()).collect())
            .collect();
        let lambdas = if system.is_empty() {
            vec![{
                let mut v = vec![Scalar::zero(); reduced.len()];
                v[0] = Scalar::one();
                v
            }]
        } else {
            kernel(&system, reduced.len())
        };
        lambdas.into_iter().next().map(|lambda| {
            let mut out: [Scalar; 4] = Default::default();
            for (l, r) in lambda.iter().zip(&reduced) {
                for k in 0..4 {
                    out[k] += &(l * &r[k]);
                }
            }
            out
        })
    }
}

impl fmt::Display for BoundaryConditionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["psi-(0)", "psi+(0)", "psi-'(0)", "psi+'(0)"];
        if self.rows.is_empty() {
            return write!(f, "(no conditions)");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut first = true;
            for (c, n) in row.iter().zip(NAMES).filter(|(c, _)| !c.is_zero()) {
                let negative = c.is_real() && c.re() < &Rational::from_integer(0.into());
                let body = match (c.is_real(), negative) {
                    (true, true) => format!("{}*{n}", -c),
                    (true, false) => format!("{c}*{n}"),
                    (false, _) => format!("({c})*{n}"),
                };
                match (first, negative) {
                    (true, true) => write!(f, "-{body}")?,
                    (true, false) => write!(f, "{body}")?,
                    (false, true) => write!(f, " - {body}")?,
                    (false, false) => write!(f, " + {body}")?,
                }
                first = false;
            }
            write!(f, " = 0")?;
        }
        Ok(())
    }
}

/// Conditions whose kernel on jets is the domain of `Ĥ₀ + B̂`.
pub fn extract_bc(spec: &OperatorSpec) -> Result<BoundaryConditionMatrix, BoundaryError> {
    let f = build_f_hat(spec)?;
    Ok(BoundaryConditionMatrix::new(f.rows().to_vec()))
}
