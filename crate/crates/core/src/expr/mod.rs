//! Text syntax and structured records for distributions and operators.

mod ast;
mod format;
mod parser;
pub mod record;

pub use ast::{DistExpr, EvalOptions};
pub use format::format_dist;
pub use parser::{parse_exact_rational, parse_expr, parse_poly};

use crate::dist::Distribution;
use crate::error::ExprError;

/// Parses and evaluates an expression; star nodes use the intrinsic product.
pub fn parse_dist(text: &str, opts: &EvalOptions) -> Result<Distribution, ExprError> {
    Ok(parse_expr(text)?.eval(opts)?)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::dist::{Bound, DeltaTerm, Distribution};
    use crate::poly::Poly;
    use crate::scalar::{int, Scalar};
    use crate::testing::arb_dist;

    fn parse(text: &str) -> Distribution {
        parse_dist(text, &EvalOptions::default()).unwrap()
    }

    #[test]
    fn star_expression() {
        assert_eq!(parse("delta(0) * heaviside(0)"), Distribution::delta(int(0), 0));
        assert!(parse("heaviside(0) * delta(0)").is_zero());
    }

    #[test]
    fn sum_with_piece() {
        let got = parse("2*delta'(0) - piece(0,inf: 1+x)");
        let expected = Distribution::delta(int(0), 1)
            .scale(&Scalar::from_int(2))
            .sub(&Distribution::piece(Bound::from_int(0), Bound::PosInf, Poly::from_ints(&[1, 1])).unwrap())
            .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn order_cap() {
        let opts = EvalOptions {
            n_cap: Some(1),
            ..EvalOptions::default()
        };
        assert!(parse_dist("delta^3(0)", &opts).is_err());
        assert!(parse_dist("D(delta'(0))", &opts).is_err());
        assert_eq!(parse_dist("delta'(0)", &opts).unwrap().n(), 1);
    }

    #[test]
    fn semantic_errors() {
        assert!(parse_dist("delta(2i)", &EvalOptions::default()).is_err());
        assert!(parse_dist("piece(1,0: x)", &EvalOptions::default()).is_err());
    }

    #[test]
    fn syntax_errors_carry_position() {
        let e = parse_expr("delta(0) + ").unwrap_err();
        assert_eq!(e.offset, 11);
        assert!(e.expected.iter().any(|s| s == "delta"));
        let e = parse_expr("heaviside(0").unwrap_err();
        assert_eq!(e.offset, 11);
        assert_eq!(e.expected, vec!["')'".to_string()]);
        let e = parse_expr("delta(0) $").unwrap_err();
        assert_eq!(e.offset, 9);
        for bad in ["", "*", "piece(0,inf 1)", "delta^(0)", "D(", "((delta(0))", "1/0"] {
            assert!(parse_expr(bad).is_err() || parse_dist(bad, &EvalOptions::default()).is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_text() {
        assert_eq!(format_dist(&Distribution::delta(int(0), 0)), "delta(0)");
        assert_eq!(format_dist(&Distribution::heaviside(int(0))), "piece(0,inf: 1)");
        assert_eq!(format_dist(&Distribution::zero()), "0");
        let d = Distribution::canonicalize(
            crate::dist::RawDistribution {
                breakpoints: vec![int(-1), int(0)],
                pieces: vec![Poly::zero(), Poly::from_ints(&[0, 0, -1]), Poly::constant(Scalar::gaussian(1, 2))],
                deltas: vec![
                    DeltaTerm::new(int(0), 1, Scalar::from_int(-2)),
                    DeltaTerm::new(int(-1), 2, Scalar::gaussian(0, 1)),
                ],
            },
            2,
            8,
        )
        .unwrap();
        let text = format_dist(&d);
        assert_eq!(
            text,
            "piece(-1,0: -x^2) + piece(0,inf: (1+2i)) + (i)*delta^2(-1) - 2*delta'(0)"
        );
        assert_eq!(parse(&text), d);
    }

    #[test]
    fn scalars_in_expressions() {
        assert_eq!(parse("3"), Distribution::smooth(Poly::from_ints(&[3])).unwrap());
        assert_eq!(parse("(1+2i)*delta(0)"), Distribution::delta(int(0), 0).scale(&Scalar::gaussian(1, 2)));
        assert_eq!(parse("-delta(1/2)"), Distribution::delta(crate::scalar::ratio(1, 2), 0).neg());
        assert_eq!(parse("0.5*delta(0)"), Distribution::delta(int(0), 0).scale(&Scalar::from_ratio(1, 2)));
        assert_eq!(parse("D(heaviside(0))"), Distribution::delta(int(0), 0));
        assert_eq!(parse("piece(-inf,inf: 2i*x)"), Distribution::smooth(Poly::monomial(Scalar::gaussian(0, 2), 1)).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn text_roundtrip(f in arb_dist(3, 2)) {
            let text = format_dist(&f);
            prop_assert_eq!(parse(&text), f);
        }

        #[test]
        fn record_roundtrip(f in arb_dist(3, 2)) {
            let back = record::decode_dist(&record::encode_dist(&f)).unwrap();
            prop_assert_eq!(back.n(), f.n());
            prop_assert_eq!(back.degree_cap(), f.degree_cap());
            prop_assert_eq!(back, f);
        }

        #[test]
        fn parser_never_panics(s in "[-+*^'(),: 0-9a-z/.]{0,40}") {
            let _ = parse_dist(&s, &EvalOptions::default());
        }
    }
}
