use std::fmt;

use shiftdelta::boundary::{OperatorSpec, Side};
use shiftdelta::error::{ExprError, SchrodingerError};
use shiftdelta::expr::{format_dist, parse_dist, parse_exact_rational, parse_poly, record, EvalOptions};
use shiftdelta::numerics::{
    bound_states, errors_decrease, grid_eigenvalues, regularized_delta, scattering, weak_limit_check, GridHamiltonian,
};
use shiftdelta::schrodinger::catalog::{self, NamedForm};
use shiftdelta::schrodinger::{
    self as sch, check_potential_representable_b3_zero, classify_bc, extract_bc, represent_from_bc, B3ZeroCheck,
    BoundaryConditionMatrix, Classification, PotentialFamily, Representation,
};
use shiftdelta::{Rational, Scalar};

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Precondition(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Precondition(m) => write!(f, "precondition violated: {m}"),
        }
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Parse(p) => CliError::Parse(p.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<SchrodingerError> for CliError {
    fn from(e: SchrodingerError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

fn precondition(e: impl fmt::Display) -> CliError {
    CliError::Precondition(e.to_string())
}

/// Machine payload (records or CSV) plus a human rendering.
pub struct CommandResult {
    pub payload: String,
    pub text: String,
}

/// Exact scalar: integers, `p/q`, and complex forms such as `1/2-3i`; no decimals.
fn exact_scalar(text: &str) -> Result<Scalar, CliError> {
    if text.contains('.') {
        return Err(CliError::Parse(format!("'{text}' is not exact; use p/q")));
    }
    text.parse::<Scalar>().map_err(|e| CliError::Parse(e.to_string()))
}

fn exact_list(text: &str, len: usize) -> Result<Vec<Scalar>, CliError> {
    let items: Vec<&str> = text.split(',').map(str::trim).collect();
    if items.len() != len {
        return Err(CliError::Parse(format!("expected {len} comma-separated values in '{text}'")));
    }
    items.into_iter().map(exact_scalar).collect()
}

fn float_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| CliError::Parse(format!("'{s}' is not a number"))))
        .collect()
}

fn parse_rows(text: &str) -> Result<[[Scalar; 4]; 2], CliError> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 2 {
        return Err(CliError::Parse("conditions must be given as \"f1;f2\"".into()));
    }
    let row = |s: &str| -> Result<[Scalar; 4], CliError> {
        let v = exact_list(s, 4)?;
        Ok(v.try_into().expect("four values"))
    };
    Ok([row(parts[0])?, row(parts[1])?])
}

pub fn product(expr: &str, n_cap: Option<u32>, degree_cap: usize) -> Result<CommandResult, CliError> {
    let d = parse_dist(expr, &EvalOptions { n_cap, degree_cap })?;
    Ok(CommandResult {
        payload: record::encode_dist(&d),
        text: format_dist(&d),
    })
}

fn named_text(bc: &BoundaryConditionMatrix) -> Option<String> {
    Some(match catalog::named_form(bc)? {
        NamedForm::Free => "no conditions (adjoint of the minimal operator)".into(),
        NamedForm::Dirichlet => "Dirichlet on both sides".into(),
        NamedForm::Neumann => "Neumann on both sides".into(),
        NamedForm::Delta { a } => format!("delta interaction, a = {a}"),
        NamedForm::DeltaPrime { theta } => format!("delta-prime interaction, theta = {theta}"),
    })
}

fn describe(class: &Classification, bc: &BoundaryConditionMatrix) -> String {
    let mut out = match class {
        Classification::RestrictionOfSStar { .. } => "classification: RestrictionOfSStar (not self-adjoint)".to_string(),
        c => format!("classification: {c}"),
    };
    out.push_str("\nconditions:\n");
    out.push_str(&bc.to_string());
    if let Some(n) = named_text(bc) {
        out.push_str("\nnamed: ");
        out.push_str(&n);
    }
    out
}

pub fn classify_potential(spec: &OperatorSpec) -> Result<CommandResult, CliError> {
    let class = sch::classify(spec)?;
    let bc = extract_bc(spec).map_err(precondition)?;
    Ok(CommandResult {
        payload: format!("{}\n{}", record::encode_classification(&class), record::encode_bc(&bc)),
        text: describe(&class, &bc),
    })
}

pub fn classify(c1: &str, c2: &str, b1: &str, b2: &str) -> Result<CommandResult, CliError> {
    let spec = OperatorSpec::potential(exact_scalar(c1)?, exact_scalar(c2)?, exact_scalar(b1)?, exact_scalar(b2)?);
    classify_potential(&spec)
}

fn representation_text(rep: &Representation, out: &mut Vec<OperatorSpec>) -> String {
    match rep {
        Representation::Potential(family) => {
            let spec = family.default_member();
            let params: Vec<String> = family
                .parameters()
                .iter()
                .zip(family.default_parameters())
                .map(|(n, v)| format!("{n} = {v}"))
                .collect();
            let text = format!(
                "potential family: {}\ndefault member with {}:\n{}",
                family_text(family),
                params.join(", "),
                operator_text(&spec)
            );
            out.push(spec);
            text
        }
        Representation::NotRepresentable { pseudo } => {
            out.push(pseudo.clone());
            format!("not representable as potential; pseudo potential:\n{}", operator_text(pseudo))
        }
    }
}

fn family_text(family: &PotentialFamily) -> String {
    match family {
        PotentialFamily::SplitStrength { b1, x1, x2, c } => format!(
            "b1 = {b1}, b2 = conj(b1), c1 = k1/({x1}), c2 = ({c} - k1)/({x2}) for real k1"
        ),
        PotentialFamily::SkewDerivative { c } => {
            format!("b1 not in {{1, -1}}, b2 = -b1, c1 + c2 = 2*({c})*(1 - b1)")
        }
        PotentialFamily::FreeLeft { c2 } => format!("b1 = b2 = 1, c2 = {c2}, c1 free"),
        PotentialFamily::FreeRight { c1 } => format!("b1 = b2 = -1, c1 = {c1}, c2 free"),
        PotentialFamily::DirichletPair => "b1 = 1, b2 = -1, c1 + c2 nonzero".into(),
    }
}

/// Shortest round-trip text, in exponent form for tiny magnitudes.
fn num(x: f64) -> String {
    if x != 0.0 && x.abs() < 1e-4 {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

fn operator_text(spec: &OperatorSpec) -> String {
    let slots = ["d-", "d+", "d'-", "d'+"];
    let fmt_row = |r: &[Scalar; 4]| {
        r.iter()
            .zip(slots)
            .map(|(c, s)| format!("{s}: {c}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    match spec {
        OperatorSpec::Potential { c1, c2, b1, b2 } => format!("  Potential(c1={c1}, c2={c2}, b1={b1}, b2={b2})"),
        OperatorSpec::GeneralPseudo { b1, b2, b3 } => format!(
            "  B1 = [{}]\n  B2 = [{}] (composed with D_x on the right)\n  B3 = [{}] (between two D_x)",
            fmt_row(b1),
            fmt_row(b2),
            fmt_row(b3)
        ),
        OperatorSpec::DeltaPrimeFamily { c, d, e, f } => format!("  DeltaPrimeFamily(c={c}, d={d}, e={e}, f={f})"),
    }
}

fn finish(specs: &[OperatorSpec], text: String) -> CommandResult {
    CommandResult {
        payload: specs.iter().map(record::encode_operator).collect::<Vec<_>>().join("\n"),
        text,
    }
}

pub fn represent_bc(text: &str) -> Result<CommandResult, CliError> {
    let [f1, f2] = parse_rows(text)?;
    let bc = BoundaryConditionMatrix::new(vec![f1.clone(), f2.clone()]);
    let mut specs = Vec::new();
    let mut lines = Vec::new();
    if bc.row_equivalent(&catalog::dirichlet_bc()) {
        let [first, second] = catalog::dirichlet();
        lines.push(format!(
            "Dirichlet conditions, two pseudo potential forms:\n{}\n\n{}",
            operator_text(&first),
            operator_text(&second)
        ));
        specs.push(first);
        specs.push(second);
    } else {
        let spec = represent_from_bc(&f1, &f2);
        lines.push(format!("pseudo potential:\n{}", operator_text(&spec)));
        specs.push(spec);
    }
    match classify_bc(&bc) {
        Classification::InteractingSA { a, b, c } => {
            lines.push(format!("self-adjoint, interacting (a={a}, b={b}, c={c})"));
            let rep = sch::represent_interacting(&a, &b, &c)?;
            lines.push(representation_text(&rep, &mut specs));
        }
        Classification::SeparatingSA {
            a_minus,
            b_minus,
            a_plus,
            b_plus,
        } => {
            lines.push(format!(
                "self-adjoint, separating (a-={a_minus}, b-={b_minus}, a+={a_plus}, b+={b_plus})"
            ));
            let rep = sch::represent_separating(&a_minus, &b_minus, &a_plus, &b_plus)?;
            lines.push(representation_text(&rep, &mut specs));
        }
        Classification::RestrictionOfSStar { .. } => lines.push("not a self-adjoint condition pair".into()),
    }
    if bc.rank() == 2 {
        match check_potential_representable_b3_zero(&bc)? {
            B3ZeroCheck::Representable { .. } => lines.push("realizable without the D_x B3 D_x term".into()),
            B3ZeroCheck::Impossible { minor } => lines.push(format!(
                "not realizable without the D_x B3 D_x term (derivative minor {minor} is nonzero)"
            )),
        }
    }
    Ok(finish(&specs, lines.join("\n")))
}

pub fn represent_interacting(text: &str) -> Result<CommandResult, CliError> {
    let v = exact_list(text, 3)?;
    let rep = sch::represent_interacting(&v[0], &v[1], &v[2])?;
    let mut specs = Vec::new();
    let body = representation_text(&rep, &mut specs);
    Ok(finish(&specs, body))
}

pub fn represent_separating(text: &str) -> Result<CommandResult, CliError> {
    let v = exact_list(text, 4)?;
    let rep = sch::represent_separating(&v[0], &v[1], &v[2], &v[3])?;
    let mut specs = Vec::new();
    let body = representation_text(&rep, &mut specs);
    Ok(finish(&specs, body))
}

pub enum OperatorSource {
    Bc(String),
    Delta(f64),
    Potential([String; 4]),
}

fn source_bc(src: &OperatorSource) -> Result<BoundaryConditionMatrix, CliError> {
    match src {
        OperatorSource::Bc(text) => {
            let [f1, f2] = parse_rows(text)?;
            Ok(BoundaryConditionMatrix::new(vec![f1, f2]))
        }
        OperatorSource::Delta(a) => {
            let r = Rational::from_float(*a).ok_or_else(|| CliError::Parse(format!("'{a}' is not finite")))?;
            Ok(catalog::k_form(&Scalar::real(r)))
        }
        OperatorSource::Potential([c1, c2, b1, b2]) => {
            let spec =
                OperatorSpec::potential(exact_scalar(c1)?, exact_scalar(c2)?, exact_scalar(b1)?, exact_scalar(b2)?);
            extract_bc(&spec).map_err(precondition)
        }
    }
}

fn csv(header: &str, rows: Vec<String>) -> CommandResult {
    let mut text = String::from(header);
    for r in rows {
        text.push('\n');
        text.push_str(&r);
    }
    CommandResult {
        payload: text.clone(),
        text,
    }
}

pub fn scatter(src: &OperatorSource, ks: &str) -> Result<CommandResult, CliError> {
    let bc = source_bc(src)?;
    if bc.rank() != 2 {
        return Err(CliError::Precondition("conditions must have rank 2".into()));
    }
    let mut rows = Vec::new();
    for k in float_list(ks)? {
        if !(k > 0.0) {
            return Err(CliError::Precondition(format!("k = {k} must be positive")));
        }
        match scattering(&bc, k) {
            Ok(s) => rows.push(format!(
                "{k},{}",
                [
                    s.r_left.re,
                    s.r_left.im,
                    s.t_left.re,
                    s.t_left.im,
                    s.r_right.re,
                    s.r_right.im,
                    s.t_right.re,
                    s.t_right.im,
                    s.r_left.norm_sqr(),
                    s.t_left.norm_sqr(),
                ]
                .map(num)
                .join(",")
            )),
            Err(_) => rows.push(format!("{k},singular,,,,,,,,,")),
        }
    }
    Ok(csv(
        "k,r_left_re,r_left_im,t_left_re,t_left_im,r_right_re,r_right_im,t_right_re,t_right_im,abs_r_left_sq,abs_t_left_sq",
        rows,
    ))
}

pub struct GridOptions {
    pub epsilon: f64,
    pub half_width: f64,
    pub points: usize,
    pub count: usize,
}

pub fn spectrum(src: &OperatorSource, grid: Option<GridOptions>) -> Result<CommandResult, CliError> {
    let bc = source_bc(src)?;
    if bc.rank() != 2 {
        return Err(CliError::Precondition("conditions must have rank 2".into()));
    }
    let mut rows: Vec<String> = bound_states(&bc)
        .map_err(precondition)?
        .iter()
        .enumerate()
        .map(|(i, e)| format!("bound,{i},{}", num(*e)))
        .collect();
    if let Some(g) = grid {
        let OperatorSource::Delta(a) = src else {
            return Err(CliError::Precondition("--grid needs --delta".into()));
        };
        if !(g.epsilon > 0.0) {
            return Err(CliError::Precondition("epsilon must be positive".into()));
        }
        let h = GridHamiltonian::new(g.half_width, g.points, regularized_delta(*a, g.epsilon)).map_err(precondition)?;
        let ev = grid_eigenvalues(&h, g.count).map_err(precondition)?;
        rows.extend(ev.iter().enumerate().map(|(i, e)| format!("grid,{i},{}", num(*e))));
    }
    Ok(csv("kind,index,energy", rows))
}

pub fn weaklimit(
    expr: &str,
    test: &str,
    lo: &str,
    hi: &str,
    order: u32,
    side: Side,
    eps: &str,
) -> Result<CommandResult, CliError> {
    let f = parse_dist(expr, &EvalOptions::default())?;
    let t = parse_poly(test).map_err(|e| CliError::Parse(e.to_string()))?;
    let bound = |s: &str| parse_exact_rational(s).ok_or_else(|| CliError::Parse(format!("'{s}' is not an exact rational")));
    let (lo, hi) = (bound(lo)?, bound(hi)?);
    let eps = float_list(eps)?;
    let rows = weak_limit_check(&f, &t, (&lo, &hi), order, side, &eps).map_err(precondition)?;
    let decreasing = errors_decrease(&rows, 1e-10);
    let mut out = csv(
        "epsilon,value_re,value_im,limit_re,limit_im,error",
        rows.iter()
            .map(|r| {
                [r.epsilon, r.value.re, r.value.im, r.limit.re, r.limit.im, r.error]
                    .map(num)
                    .join(",")
            })
            .collect(),
    );
    out.text.push_str(&format!("\n# errors decreasing: {decreasing}"));
    Ok(out)
}
