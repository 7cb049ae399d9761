//! Analytic vs. central finite-difference gradient comparison.

use std::collections::BTreeMap;

use rand::Rng as _;
use serde::Serialize;

use super::encode::{FeatureBundle, PAD};
use super::network::{bce_with_logit, forward, loss_and_gradient, BatchCache, Dropout};
use super::params::{Group, Params};
use crate::error::Result;
use crate::rng;

#[derive(Debug, Clone, Serialize)]
pub struct GradCheckReport {
    pub max_relative_error: f64,
    pub coordinates: usize,
    /// Largest relative error seen per parameter group.
    pub per_group: BTreeMap<&'static str, f64>,
}

/// `|a - n| / max(|a|, |n|, floor)`; the floor keeps coordinates whose
/// true gradient is zero from dividing by rounding noise.
pub fn relative_error(analytic: f64, numeric: f64) -> f64 {
    const FLOOR: f64 = 1e-7;
    (analytic - numeric).abs() / analytic.abs().max(numeric.abs()).max(FLOOR)
}

/// Chooses `per_group` coordinates from every group, preferring ones whose
/// analytic gradient is nonzero. The padding embedding row is skipped.
pub fn sample_coordinates(params: &Params, analytic: &[f64], per_group: usize, seed: u64) -> Vec<usize> {
    let mut r = rng::stream(seed, &[0x6C4]);
    let e = params.hyper().char_dim;
    let pad_row = PAD as usize * e..(PAD as usize + 1) * e;
    let mut picked = Vec::new();
    for g in Group::ALL {
        let range = params.layout.range(g);
        let eligible: Vec<usize> = range
            .clone()
            .filter(|&i| !(g == Group::CharEmbedding && pad_row.contains(&(i - range.start))))
            .collect();
        let active: Vec<usize> = eligible.iter().copied().filter(|&i| analytic[i] != 0.0).collect();
        for _ in 0..per_group.min(eligible.len()) {
            let pool = if !active.is_empty() && r.gen_bool(0.8) { &active } else { &eligible };
            picked.push(pool[r.gen_range(0..pool.len())]);
        }
    }
    picked.sort_unstable();
    picked.dedup();
    picked
}

fn example_loss(params: &Params, f: &FeatureBundle, target: f64, masks: &(Vec<f64>, Vec<f64>)) -> Result<f64> {
    let cache = BatchCache::new(params);
    let tape = forward(
        params,
        &cache,
        f,
        Dropout::Fixed {
            input: &masks.0,
            hidden: &masks.1,
        },
    )?;
    Ok(bce_with_logit(tape.logit, target))
}

/// Compares `analytic` against central differences of the loss at the
/// given coordinates.
pub fn compare_with_finite_differences(
    params: &Params,
    f: &FeatureBundle,
    target: f64,
    masks: &(Vec<f64>, Vec<f64>),
    analytic: &[f64],
    coordinates: &[usize],
    eps: f64,
) -> Result<GradCheckReport> {
    let mut probe = params.clone();
    let mut report = GradCheckReport {
        max_relative_error: 0.0,
        coordinates: coordinates.len(),
        per_group: BTreeMap::new(),
    };
    for &i in coordinates {
        let orig = probe.data[i];
        probe.data[i] = orig + eps;
        let up = example_loss(&probe, f, target, masks)?;
        probe.data[i] = orig - eps;
        let down = example_loss(&probe, f, target, masks)?;
        probe.data[i] = orig;
        let numeric = (up - down) / (2.0 * eps);
        let err = relative_error(analytic[i], numeric);
        let group = params.layout.group_of(i).name();
        let slot = report.per_group.entry(group).or_insert(0.0);
        *slot = slot.max(err);
        report.max_relative_error = report.max_relative_error.max(err);
    }
    Ok(report)
}

/// Dropout masks with the usual inverted scaling, fixed for the check.
pub fn fixed_dropout_masks(params: &Params, rate: f64, seed: u64) -> (Vec<f64>, Vec<f64>) {
    let mut r = rng::stream(seed, &[0xD40]);
    let hy = params.hyper();
    let keep = 1.0 / (1.0 - rate);
    let mut mask = |n: usize| -> Vec<f64> {
        (0..n).map(|_| if r.gen::<f64>() < rate { 0.0 } else { keep }).collect()
    };
    let input = mask(hy.input_dim());
    let hidden = mask(hy.affine);
    (input, hidden)
}

/// Full check for one example: analytic gradient by backpropagation, then
/// comparison on `per_group` sampled coordinates of every parameter group.
pub fn check_gradients(
    params: &Params,
    f: &FeatureBundle,
    target: f64,
    eps: f64,
    per_group: usize,
    seed: u64,
) -> Result<GradCheckReport> {
    let masks = fixed_dropout_masks(params, 0.5, seed);
    let (_, analytic) = loss_and_gradient(
        params,
        f,
        target,
        Dropout::Fixed {
            input: &masks.0,
            hidden: &masks.1,
        },
    )?;
    let coords = sample_coordinates(params, &analytic, per_group, seed);
    compare_with_finite_differences(params, f, target, &masks, &analytic, &coords, eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::encode::{encode_length, encode_shape, encode_type, encode_value_chars};
    use crate::model::params::Hyper;

    fn bundle(hy: &Hyper, repr: &str) -> FeatureBundle {
        let (value_chars, value_len) = encode_value_chars(repr, hy.max_len);
        FeatureBundle {
            name_vec: (0..hy.name_dim).map(|i| (i as f64 * 0.7).cos()).collect(),
            value_chars,
            value_len,
            value_masked: false,
            type_onehot: encode_type("float", &["int".into(), "float".into()]),
            len_onehot: encode_length(None),
            shape_onehot: encode_shape(Some(&[2, 3])),
        }
    }

    #[test]
    fn small_network_gradients_match() {
        let hy = Hyper {
            name_dim: 6,
            char_dim: 4,
            hidden: 5,
            channels: 7,
            kernel: 3,
            affine: 8,
            max_len: 12,
            ..Hyper::default()
        };
        let p = Params::init(hy, 11);
        for (repr, target) in [("2.5", 1.0), ("[1, 2, 3, 4, 5, 6, 7]", 0.0), ("", 1.0)] {
            let report = check_gradients(&p, &bundle(&hy, repr), target, 1e-5, 25, 4).unwrap();
            assert!(report.max_relative_error < 1e-4, "{repr:?}: {report:?}");
        }
    }
}
