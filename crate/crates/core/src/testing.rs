//! Shared proptest strategies.

use proptest::prelude::*;

use crate::dist::{DeltaTerm, Distribution, RawDistribution, DEFAULT_DEGREE_CAP};
use crate::poly::Poly;
use crate::scalar::{int, Scalar};

pub fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Scalar::from_ratio(p, q))
}

pub fn arb_complex() -> impl Strategy<Value = Scalar> {
    (arb_scalar(), arb_scalar()).prop_map(|(a, b)| Scalar::new(a.re().clone(), b.re().clone()))
}

pub fn arb_poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(arb_scalar(), 0..=max_degree + 1).prop_map(Poly::new)
}

/// Canonical elements with breakpoints in `{-1, 0, 1}`.
pub fn arb_dist(max_degree: usize, max_order: u32) -> impl Strategy<Value = Distribution> {
    let bps = prop::sample::subsequence(vec![-1i64, 0, 1], 0..=3);
    bps.prop_flat_map(move |bps| {
        let m = bps.len();
        let deltas = prop::collection::vec((prop::sample::select(vec![-1i64, 0, 1]), 0..=max_order, arb_scalar()), 0..=3);
        (Just(bps), prop::collection::vec(arb_poly(max_degree), m + 1), deltas)
    })
    .prop_map(move |(bps, pieces, deltas)| {
        let deltas = deltas
            .into_iter()
            .filter(|(p, _, _)| bps.contains(p))
            .map(|(p, j, c)| DeltaTerm::new(int(p), j, c))
            .collect();
        Distribution::canonicalize(RawDistribution { breakpoints: bps.iter().map(|&b| int(b)).collect(), pieces, deltas }, max_order, DEFAULT_DEGREE_CAP).unwrap()
    })
}

