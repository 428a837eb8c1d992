//! Line-oriented record format.
//!
//! Each record starts with `record <type>` and ends with `end`. Every line in
//! between is a key followed by space-separated fields. Scalars are written as
//! two rationals `re im`, each in `p` or `p/q` form. Lines are separated by
//! `\n`; there is no trailing whitespace. The exact layouts are:
//!
//! ```text
//! record distribution
//! n <u32>
//! degree_cap <usize>
//! breakpoints <m>
//! bp <rational>                      (m lines)
//! pieces <m+1>
//! piece <k> <re> <im> ...            (m+1 lines, k coefficients, ascending)
//! deltas <d>
//! delta <point> <order> <re> <im>    (d lines)
//! end
//!
//! record operator
//! kind potential           | kind pseudo          | kind delta_prime_family
//! c1 <re> <im>             | b1 <4 scalars>       | c <re> <im>
//! c2 <re> <im>             | b2 <4 scalars>       | d <re> <im>
//! b1 <re> <im>             | b3 <4 scalars>       | e <re> <im>
//! b2 <re> <im>             |                      | f <re> <im>
//! end
//!
//! record bc_matrix
//! rows <r>
//! row <4 scalars>                    (r lines)
//! end
//!
//! record classification
//! kind interacting | separating | restriction
//! a <re> <im> / b <re> <im> / c <re> <im>                      (interacting)
//! a_minus, b_minus, a_plus, b_plus, each <re> <im>             (separating)
//! rows <r> followed by r row lines                             (restriction)
//! end
//! ```
//!
//! Pseudo-operator slots are ordered `δ̂₋, δ̂₊, δ̂₋′, δ̂₊′`.

use std::fmt::Write as _;

use crate::boundary::OperatorSpec;
use crate::dist::{DeltaTerm, Distribution, RawDistribution};
use crate::error::ExprError;
use crate::poly::Poly;
use crate::scalar::{format_rational, parse_rational, Rational, Scalar};
use crate::schrodinger::{BoundaryConditionMatrix, Classification};

fn bad(msg: impl Into<String>) -> ExprError {
    ExprError::Record(msg.into())
}

fn scalar_fields(s: &Scalar) -> String {
    format!("{} {}", format_rational(s.re()), format_rational(s.im()))
}

fn scalars_fields(xs: &[Scalar]) -> String {
    xs.iter().map(scalar_fields).collect::<Vec<_>>().join(" ")
}

/// Cursor over the lines of one record.
struct Reader<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str, kind: &str) -> Result<Self, ExprError> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let mut r = Reader { lines, pos: 0 };
        let header = r.next_line()?;
        if header != format!("record {kind}") {
            return Err(bad(format!("expected 'record {kind}', found {header:?}")));
        }
        Ok(r)
    }

    fn next_line(&mut self) -> Result<&'a str, ExprError> {
        let line = self.lines.get(self.pos).copied().ok_or_else(|| bad("unexpected end of record"))?;
        self.pos += 1;
        Ok(line)
    }

    /// Reads a line with the given key and returns its fields.
    fn keyed(&mut self, key: &str) -> Result<Vec<&'a str>, ExprError> {
        let line = self.next_line()?;
        let mut parts = line.split(' ');
        match parts.next() {
            Some(k) if k == key => Ok(parts.collect()),
            _ => Err(bad(format!("expected key {key:?}, found {line:?}"))),
        }
    }

    fn count(&mut self, key: &str) -> Result<usize, ExprError> {
        let f = self.keyed(key)?;
        match f.as_slice() {
            [v] => v.parse().map_err(|_| bad(format!("bad count {v:?}"))),
            _ => Err(bad(format!("{key} takes one field"))),
        }
    }

    fn scalars(&mut self, key: &str, expected: usize) -> Result<Vec<Scalar>, ExprError> {
        let f = self.keyed(key)?;
        if f.len() != 2 * expected {
            return Err(bad(format!("{key} expects {expected} scalars")));
        }
        parse_scalars(&f)
    }

    fn finish(&mut self) -> Result<(), ExprError> {
        let line = self.next_line()?;
        if line != "end" {
            return Err(bad(format!("expected 'end', found {line:?}")));
        }
        if self.pos != self.lines.len() {
            return Err(bad("trailing content after 'end'"));
        }
        Ok(())
    }
}

fn parse_rat(s: &str) -> Result<Rational, ExprError> {
    if s.contains('.') {
        return Err(bad(format!("decimal {s:?} not allowed in records")));
    }
    parse_rational(s).map_err(|e| bad(e.to_string()))
}

fn parse_scalars(fields: &[&str]) -> Result<Vec<Scalar>, ExprError> {
    fields
        .chunks(2)
        .map(|c| Ok(Scalar::new(parse_rat(c[0])?, parse_rat(c[1])?)))
        .collect()
}

pub fn encode_dist(d: &Distribution) -> String {
    let mut out = String::from("record distribution\n");
    let _ = writeln!(out, "n {}", d.n());
    let _ = writeln!(out, "degree_cap {}", d.degree_cap());
    let _ = writeln!(out, "breakpoints {}", d.breakpoints().len());
    for b in d.breakpoints() {
        let _ = writeln!(out, "bp {}", format_rational(b));
    }
    let _ = writeln!(out, "pieces {}", d.pieces().len());
    for p in d.pieces() {
        let _ = write!(out, "piece {}", p.coeffs().len());
        if !p.is_zero() {
            let _ = write!(out, " {}", scalars_fields(p.coeffs()));
        }
        out.push('\n');
    }
    let _ = writeln!(out, "deltas {}", d.deltas().len());
    for t in d.deltas() {
        let _ = writeln!(
            out,
            "delta {} {} {}",
            format_rational(&t.point),
            t.order,
            scalar_fields(&t.coeff)
        );
    }
    out.push_str("end\n");
    out
}

pub fn decode_dist(text: &str) -> Result<Distribution, ExprError> {
    let mut r = Reader::new(text, "distribution")?;
    let n = r.count("n")? as u32;
    let cap = r.count("degree_cap")?;
    let m = r.count("breakpoints")?;
    let mut breakpoints = Vec::with_capacity(m);
    for _ in 0..m {
        match r.keyed("bp")?.as_slice() {
            [v] => breakpoints.push(parse_rat(v)?),
            _ => return Err(bad("bp takes one field")),
        }
    }
    let pc = r.count("pieces")?;
    let mut pieces = Vec::with_capacity(pc);
    for _ in 0..pc {
        let f = r.keyed("piece")?;
        let (k, rest) = f.split_first().ok_or_else(|| bad("piece needs a count"))?;
        let k: usize = k.parse().map_err(|_| bad("bad piece count"))?;
        if rest.len() != 2 * k {
            return Err(bad("piece coefficient count mismatch"));
        }
        pieces.push(Poly::new(parse_scalars(rest)?));
    }
    let dc = r.count("deltas")?;
    let mut deltas = Vec::with_capacity(dc);
    for _ in 0..dc {
        match r.keyed("delta")?.as_slice() {
            [p, o, re, im] => {
                let order = o.parse().map_err(|_| bad("bad delta order"))?;
                deltas.push(DeltaTerm::new(
                    parse_rat(p)?,
                    order,
                    Scalar::new(parse_rat(re)?, parse_rat(im)?),
                ));
            }
            _ => return Err(bad("delta takes four fields")),
        }
    }
    r.finish()?;
    Ok(Distribution::canonicalize(
        RawDistribution {
            breakpoints,
            pieces,
            deltas,
        },
        n,
        cap,
    )?)
}

pub fn encode_operator(spec: &OperatorSpec) -> String {
    let mut out = String::from("record operator\n");
    match spec {
        OperatorSpec::Potential { c1, c2, b1, b2 } => {
            out.push_str("kind potential\n");
            for (k, v) in [("c1", c1), ("c2", c2), ("b1", b1), ("b2", b2)] {
                let _ = writeln!(out, "{k} {}", scalar_fields(v));
            }
        }
        OperatorSpec::GeneralPseudo { b1, b2, b3 } => {
            out.push_str("kind pseudo\n");
            for (k, v) in [("b1", b1), ("b2", b2), ("b3", b3)] {
                let _ = writeln!(out, "{k} {}", scalars_fields(v));
            }
        }
        OperatorSpec::DeltaPrimeFamily { c, d, e, f } => {
            out.push_str("kind delta_prime_family\n");
            for (k, v) in [("c", c), ("d", d), ("e", e), ("f", f)] {
                let _ = writeln!(out, "{k} {}", scalar_fields(v));
            }
        }
    }
    out.push_str("end\n");
    out
}

fn four(v: Vec<Scalar>) -> [Scalar; 4] {
    v.try_into().expect("four scalars")
}

pub fn decode_operator(text: &str) -> Result<OperatorSpec, ExprError> {
    let mut r = Reader::new(text, "operator")?;
    let kind = r.keyed("kind")?;
    let one = |r: &mut Reader, k: &str| -> Result<Scalar, ExprError> {
        Ok(r.scalars(k, 1)?.remove(0))
    };
    let spec = match kind.as_slice() {
        ["potential"] => OperatorSpec::Potential {
            c1: one(&mut r, "c1")?,
            c2: one(&mut r, "c2")?,
            b1: one(&mut r, "b1")?,
            b2: one(&mut r, "b2")?,
        },
        ["pseudo"] => OperatorSpec::GeneralPseudo {
            b1: four(r.scalars("b1", 4)?),
            b2: four(r.scalars("b2", 4)?),
            b3: four(r.scalars("b3", 4)?),
        },
        ["delta_prime_family"] => OperatorSpec::DeltaPrimeFamily {
            c: one(&mut r, "c")?,
            d: one(&mut r, "d")?,
            e: one(&mut r, "e")?,
            f: one(&mut r, "f")?,
        },
        other => return Err(bad(format!("unknown operator kind {other:?}"))),
    };
    r.finish()?;
    spec.validate().map_err(|e| bad(e.to_string()))?;
    Ok(spec)
}

fn write_rows(out: &mut String, m: &BoundaryConditionMatrix) {
    let _ = writeln!(out, "rows {}", m.rows().len());
    for row in m.rows() {
        let _ = writeln!(out, "row {}", scalars_fields(row));
    }
}

fn read_rows(r: &mut Reader) -> Result<BoundaryConditionMatrix, ExprError> {
    let k = r.count("rows")?;
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        rows.push(four(r.scalars("row", 4)?));
    }
    Ok(BoundaryConditionMatrix::new(rows))
}

pub fn encode_bc(m: &BoundaryConditionMatrix) -> String {
    let mut out = String::from("record bc_matrix\n");
    write_rows(&mut out, m);
    out.push_str("end\n");
    out
}

pub fn decode_bc(text: &str) -> Result<BoundaryConditionMatrix, ExprError> {
    let mut r = Reader::new(text, "bc_matrix")?;
    let m = read_rows(&mut r)?;
    r.finish()?;
    Ok(m)
}

pub fn encode_classification(c: &Classification) -> String {
    let mut out = String::from("record classification\n");
    match c {
        Classification::InteractingSA { a, b, c } => {
            out.push_str("kind interacting\n");
            for (k, v) in [("a", a), ("b", b), ("c", c)] {
                let _ = writeln!(out, "{k} {}", scalar_fields(v));
            }
        }
        Classification::SeparatingSA {
            a_minus,
            b_minus,
            a_plus,
            b_plus,
        } => {
            out.push_str("kind separating\n");
            for (k, v) in [
                ("a_minus", a_minus),
                ("b_minus", b_minus),
                ("a_plus", a_plus),
                ("b_plus", b_plus),
            ] {
                let _ = writeln!(out, "{k} {}", scalar_fields(v));
            }
        }
        Classification::RestrictionOfSStar { bc } => {
            out.push_str("kind restriction\n");
            write_rows(&mut out, bc);
        }
    }
    out.push_str("end\n");
    out
}

pub fn decode_classification(text: &str) -> Result<Classification, ExprError> {
    let mut r = Reader::new(text, "classification")?;
    let kind = r.keyed("kind")?;
    let one = |r: &mut Reader, k: &str| -> Result<Scalar, ExprError> { Ok(r.scalars(k, 1)?.remove(0)) };
    let c = match kind.as_slice() {
        ["interacting"] => Classification::InteractingSA {
            a: one(&mut r, "a")?,
            b: one(&mut r, "b")?,
            c: one(&mut r, "c")?,
        },
        ["separating"] => Classification::SeparatingSA {
            a_minus: one(&mut r, "a_minus")?,
            b_minus: one(&mut r, "b_minus")?,
            a_plus: one(&mut r, "a_plus")?,
            b_plus: one(&mut r, "b_plus")?,
        },
        ["restriction"] => Classification::RestrictionOfSStar { bc: read_rows(&mut r)? },
        other => return Err(bad(format!("unknown classification kind {other:?}"))),
    };
    r.finish()?;
    Ok(c)
}
