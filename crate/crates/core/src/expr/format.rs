use crate::dist::Distribution;
use crate::scalar::{format_rational, Rational, Scalar};

fn bound_text(b: Option<&Rational>, infinite: &str) -> String {
    b.map_or_else(|| infinite.to_string(), format_rational)
}

fn delta_name(order: u32) -> String {
    match order {
        0 => "delta".to_string(),
        1 => "delta'".to_string(),
        k => format!("delta^{k}"),
    }
}

/// Splits a coefficient into a sign and the text multiplying the atom.
fn signed_coeff(c: &Scalar) -> (bool, String) {
    match c.as_real() {
        Some(r) => {
            let negative = r < &Rational::from_integer(0.into());
            let mag = if negative { -r } else { r.clone() };
            if mag == Rational::from_integer(1.into()) {
                (negative, String::new())
            } else {
                (negative, format!("{}*", format_rational(&mag)))
            }
        }
        None => (false, format!("({c})*")),
    }
}

/// Canonical text: pieces left to right, then deltas by point and order.
pub fn format_dist(d: &Distribution) -> String {
    let mut terms: Vec<(bool, String)> = Vec::new();
    let bps = d.breakpoints();
    for (k, p) in d.pieces().iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let lo = bound_text(k.checked_sub(1).map(|i| &bps[i]), "-inf");
        let hi = bound_text(bps.get(k), "inf");
        terms.push((false, format!("piece({lo},{hi}: {p})")));
    }
    for t in d.deltas() {
        let (negative, coeff) = signed_coeff(&t.coeff);
        terms.push((
            negative,
            format!("{coeff}{}({})", delta_name(t.order), format_rational(&t.point)),
        ));
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, text)) in terms.iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(text);
    }
    out
}
