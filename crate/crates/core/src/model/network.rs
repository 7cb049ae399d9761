//! Forward and backward passes of the classifier.
//!
//! ```text
//! name vector ─────────────────────────────┐
//! value chars ─ embed ─┬─ GRU (last state) ─┤
//!                      └─ conv → ReLU → max ─┤ concat → dropout → affine → ReLU
//! type / length / shape one-hots ───────────┘   → dropout → affine → sigmoid
//! ```
//!
//! The GRU reads only the unpadded characters of the value. Because the
//! padding embedding is fixed at zero, a convolution window that lies
//! entirely in the padding evaluates to the bias, so such windows are
//! represented by a single candidate in the max-pool.
//!
//! Within a batch the parameters are fixed, so the input projections of
//! every character are computed once per batch ([`BatchCache`]) and the
//! gradients of the embedding, GRU input weights, and convolution weights
//! are accumulated per character and folded in once ([`GradAccum::finish`]).

use rand::Rng as _;

use super::encode::{FeatureBundle, PAD};
use super::params::{Group, Hyper, Layout, Params};
use crate::error::{Error, Result};
use crate::rng::Rng;

pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Binary cross-entropy of `sigmoid(logit)` against `target`, computed
/// without forming the probability.
pub fn bce_with_logit(logit: f64, target: f64) -> f64 {
    logit.max(0.0) - logit * target + (-logit.abs()).exp().ln_1p()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Per-character projections that depend only on the parameters.
pub struct BatchCache {
    /// `[char][3H]`: GRU input projection plus input bias.
    xproj: Vec<f64>,
    /// `[kernel offset][char][channel]`: convolution tap contributions.
    convtab: Vec<f64>,
}

impl BatchCache {
    pub fn new(p: &Params) -> Self {
        let h = p.hyper();
        let (v, e, g3, c, k) = (h.char_vocab, h.char_dim, 3 * h.hidden, h.channels, h.kernel);
        let emb = p.group(Group::CharEmbedding);
        let wx = p.group(Group::GruInputWeights);
        let bx = p.group(Group::GruInputBias);
        let convw = p.group(Group::ConvWeights);

        let mut xproj = vec![0.0; v * g3];
        for ch in 0..v {
            let ev = &emb[ch * e..(ch + 1) * e];
            let out = &mut xproj[ch * g3..(ch + 1) * g3];
            for g in 0..g3 {
                out[g] = bx[g] + dot(&wx[g * e..(g + 1) * e], ev);
            }
        }
        let mut convtab = vec![0.0; k * v * c];
        for tap in 0..k {
            for ch in 0..v {
                let ev = &emb[ch * e..(ch + 1) * e];
                let out = &mut convtab[(tap * v + ch) * c..(tap * v + ch + 1) * c];
                for (j, o) in out.iter_mut().enumerate() {
                    *o = dot(&convw[(j * k + tap) * e..(j * k + tap + 1) * e], ev);
                }
            }
        }
        BatchCache { xproj, convtab }
    }
}

/// How dropout is applied during a forward pass.
pub enum Dropout<'a> {
    Off,
    /// Draw fresh masks with the given drop probability.
    Sample { rate: f64, rng: &'a mut Rng },
    /// Use fixed scale masks (entries 0 or `1/(1-rate)`), for gradient checks.
    Fixed { input: &'a [f64], hidden: &'a [f64] },
}

fn sample_mask(n: usize, rate: f64, rng: &mut Rng) -> Vec<f64> {
    let keep = 1.0 / (1.0 - rate);
    (0..n)
        .map(|_| if rng.gen::<f64>() < rate { 0.0 } else { keep })
        .collect()
}

/// Activations recorded by [`forward`] for [`backward`].
pub struct Tape {
    pub logit: f64,
    pub prob: f64,
    value_len: usize,
    value_masked: bool,
    // GRU, one row of `hidden` per timestep
    h_prev: Vec<f64>,
    z: Vec<f64>,
    r: Vec<f64>,
    n: Vec<f64>,
    hp_n: Vec<f64>,
    // convolution max-pool
    conv_max: Vec<f64>,
    conv_arg: Vec<usize>,
    // feed-forward part
    input: Vec<f64>,
    input_mask: Option<Vec<f64>>,
    hidden_pre: Vec<f64>,
    hidden_mask: Option<Vec<f64>>,
    hidden_out: Vec<f64>,
}

impl Tape {
    /// Concatenated classifier input before dropout.
    pub fn input(&self) -> &[f64] {
        &self.input
    }

    /// The value encoding (GRU state followed by pooled convolution features).
    pub fn value_vector(&self, hyper: &Hyper) -> &[f64] {
        &self.input[hyper.name_dim..hyper.name_dim + hyper.value_dim()]
    }
}

fn check_finite(values: &[f64], layer: &'static str) -> Result<()> {
    if values.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite { layer })
    }
}

pub fn forward(p: &Params, cache: &BatchCache, f: &FeatureBundle, dropout: Dropout<'_>) -> Result<Tape> {
    let hy = *p.hyper();
    let (hd, g3, cn, k, v) = (hy.hidden, 3 * hy.hidden, hy.channels, hy.kernel, hy.char_vocab);
    let t_len = f.value_len.min(hy.max_len);
    if f.name_vec.len() != hy.name_dim {
        return Err(Error::InvalidArgument(format!(
            "name vector has {} entries, model expects {}",
            f.name_vec.len(),
            hy.name_dim
        )));
    }

    let mut tape = Tape {
        logit: 0.0,
        prob: 0.0,
        value_len: t_len,
        value_masked: f.value_masked,
        h_prev: Vec::new(),
        z: Vec::new(),
        r: Vec::new(),
        n: Vec::new(),
        hp_n: Vec::new(),
        conv_max: Vec::new(),
        conv_arg: Vec::new(),
        input: Vec::with_capacity(hy.input_dim()),
        input_mask: None,
        hidden_pre: Vec::new(),
        hidden_mask: None,
        hidden_out: Vec::new(),
    };

    let mut h = vec![0.0; hd];
    let mut pooled = vec![0.0; cn];
    if !f.value_masked {
        // GRU over the unpadded characters
        let wh = p.group(Group::GruHiddenWeights);
        let bh = p.group(Group::GruHiddenBias);
        tape.h_prev.reserve(t_len * hd);
        tape.z.reserve(t_len * hd);
        tape.r.reserve(t_len * hd);
        tape.n.reserve(t_len * hd);
        tape.hp_n.reserve(t_len * hd);
        let mut hp = vec![0.0; g3];
        for t in 0..t_len {
            let ch = f.value_chars[t] as usize;
            let xp = &cache.xproj[ch * g3..(ch + 1) * g3];
            for g in 0..g3 {
                hp[g] = bh[g] + dot(&wh[g * hd..(g + 1) * hd], &h);
            }
            tape.h_prev.extend_from_slice(&h);
            for i in 0..hd {
                let z = sigmoid(xp[i] + hp[i]);
                let r = sigmoid(xp[hd + i] + hp[hd + i]);
                let n = (xp[2 * hd + i] + r * hp[2 * hd + i]).tanh();
                tape.z.push(z);
                tape.r.push(r);
                tape.n.push(n);
                tape.hp_n.push(hp[2 * hd + i]);
                h[i] = (1.0 - z) * n + z * h[i];
            }
        }
        check_finite(&h, "gru")?;

        // convolution, ReLU, and max-pool over time
        let bias = p.group(Group::ConvBias);
        let windows = hy.windows();
        let mut best = vec![f64::NEG_INFINITY; cn];
        let mut arg = vec![usize::MAX; cn];
        let mut acc = vec![0.0; cn];
        for s in 0..t_len.min(windows) {
            acc.copy_from_slice(bias);
            for tap in 0..k {
                let pos = s + tap;
                if pos >= t_len {
                    break;
                }
                let ch = f.value_chars[pos] as usize;
                axpy(1.0, &cache.convtab[(tap * v + ch) * cn..(tap * v + ch + 1) * cn], &mut acc);
            }
            for j in 0..cn {
                if acc[j] > best[j] {
                    best[j] = acc[j];
                    arg[j] = s;
                }
            }
        }
        if t_len < windows {
            // first window lying entirely in the padding
            for j in 0..cn {
                if bias[j] > best[j] {
                    best[j] = bias[j];
                    arg[j] = t_len;
                }
            }
        }
        for j in 0..cn {
            pooled[j] = best[j].max(0.0);
        }
        check_finite(&pooled, "conv")?;
        tape.conv_max = best;
        tape.conv_arg = arg;
    }

    tape.input.extend_from_slice(&f.name_vec);
    tape.input.extend_from_slice(&h);
    tape.input.extend_from_slice(&pooled);
    tape.input.extend_from_slice(&f.type_onehot);
    tape.input.extend_from_slice(&f.len_onehot);
    tape.input.extend_from_slice(&f.shape_onehot);
    if tape.input.len() != hy.input_dim() {
        return Err(Error::InvalidArgument(format!(
            "feature bundle yields {} inputs, model expects {}",
            tape.input.len(),
            hy.input_dim()
        )));
    }

    let (input_mask, hidden_mask) = match dropout {
        Dropout::Off => (None, None),
        Dropout::Sample { rate, rng } => (
            Some(sample_mask(hy.input_dim(), rate, rng)),
            Some(sample_mask(hy.affine, rate, rng)),
        ),
        Dropout::Fixed { input, hidden } => (Some(input.to_vec()), Some(hidden.to_vec())),
    };
    let x: Vec<f64> = match &input_mask {
        Some(m) => tape.input.iter().zip(m).map(|(a, b)| a * b).collect(),
        None => tape.input.clone(),
    };

    let w1 = p.group(Group::Affine1Weights);
    let b1 = p.group(Group::Affine1Bias);
    let ni = hy.input_dim();
    let hidden_pre: Vec<f64> = (0..hy.affine)
        .map(|a| b1[a] + dot(&w1[a * ni..(a + 1) * ni], &x))
        .collect();
    check_finite(&hidden_pre, "affine1")?;
    let mut hidden_out: Vec<f64> = hidden_pre.iter().map(|&a| a.max(0.0)).collect();
    if let Some(m) = &hidden_mask {
        for (o, s) in hidden_out.iter_mut().zip(m) {
            *o *= s;
        }
    }
    let logit = p.group(Group::Affine2Bias)[0] + dot(p.group(Group::Affine2Weights), &hidden_out);
    if !logit.is_finite() {
        return Err(Error::NonFinite { layer: "affine2" });
    }

    tape.logit = logit;
    tape.prob = sigmoid(logit);
    tape.input_mask = input_mask;
    tape.hidden_pre = hidden_pre;
    tape.hidden_mask = hidden_mask;
    tape.hidden_out = hidden_out;
    Ok(tape)
}

/// Gradient buffer in the parameter layout plus per-character accumulators
/// that [`GradAccum::finish`] folds into it.
pub struct GradAccum {
    pub grad: Vec<f64>,
    layout: Layout,
    gx: Vec<f64>,
    gc: Vec<f64>,
}

impl GradAccum {
    pub fn new(layout: &Layout) -> Self {
        let h = layout.hyper;
        GradAccum {
            grad: vec![0.0; layout.total()],
            layout: layout.clone(),
            gx: vec![0.0; h.char_vocab * 3 * h.hidden],
            gc: vec![0.0; h.kernel * h.char_vocab * h.channels],
        }
    }

    pub fn zero(&mut self) {
        self.grad.fill(0.0);
        self.gx.fill(0.0);
        self.gc.fill(0.0);
    }

    pub fn group(&self, g: Group) -> &[f64] {
        &self.grad[self.layout.range(g)]
    }

    /// Folds the per-character accumulators into the embedding, GRU input,
    /// and convolution gradients. Must run before `grad` is read.
    pub fn finish(&mut self, p: &Params) {
        let hy = *p.hyper();
        let (v, e, g3, cn, k) = (hy.char_vocab, hy.char_dim, 3 * hy.hidden, hy.channels, hy.kernel);
        let emb = p.group(Group::CharEmbedding);
        let wx = p.group(Group::GruInputWeights);
        let convw = p.group(Group::ConvWeights);
        let o_emb = self.layout.range(Group::CharEmbedding).start;
        let o_wx = self.layout.range(Group::GruInputWeights).start;
        let o_bx = self.layout.range(Group::GruInputBias).start;
        let o_cw = self.layout.range(Group::ConvWeights).start;
        let grad = &mut self.grad;

        for ch in 0..v {
            if ch == PAD as usize {
                continue;
            }
            let ev = &emb[ch * e..(ch + 1) * e];
            for g in 0..g3 {
                let d = self.gx[ch * g3 + g];
                if d == 0.0 {
                    continue;
                }
                grad[o_bx + g] += d;
                axpy(d, ev, &mut grad[o_wx + g * e..o_wx + (g + 1) * e]);
                axpy(d, &wx[g * e..(g + 1) * e], &mut grad[o_emb + ch * e..o_emb + (ch + 1) * e]);
            }
            for tap in 0..k {
                let base = (tap * v + ch) * cn;
                for j in 0..cn {
                    let d = self.gc[base + j];
                    if d == 0.0 {
                        continue;
                    }
                    let w = (j * k + tap) * e;
                    axpy(d, ev, &mut grad[o_cw + w..o_cw + w + e]);
                    axpy(d, &convw[w..w + e], &mut grad[o_emb + ch * e..o_emb + (ch + 1) * e]);
                }
            }
        }
        self.gx.fill(0.0);
        self.gc.fill(0.0);
    }
}

/// Accumulates `dlogit × ∂logit/∂θ` for one example into `acc`.
pub fn backward(p: &Params, f: &FeatureBundle, tape: &Tape, dlogit: f64, acc: &mut GradAccum) {
    let hy = *p.hyper();
    let (hd, g3, cn, k, v, ni) = (
        hy.hidden,
        3 * hy.hidden,
        hy.channels,
        hy.kernel,
        hy.char_vocab,
        hy.input_dim(),
    );
    let layout = &acc.layout;
    let o_w1 = layout.range(Group::Affine1Weights).start;
    let o_b1 = layout.range(Group::Affine1Bias).start;
    let o_w2 = layout.range(Group::Affine2Weights).start;
    let o_b2 = layout.range(Group::Affine2Bias).start;
    let o_wh = layout.range(Group::GruHiddenWeights).start;
    let o_bh = layout.range(Group::GruHiddenBias).start;
    let o_cb = layout.range(Group::ConvBias).start;
    let grad = &mut acc.grad;

    // second affine layer
    let w2 = p.group(Group::Affine2Weights);
    axpy(dlogit, &tape.hidden_out, &mut grad[o_w2..o_w2 + hy.affine]);
    grad[o_b2] += dlogit;

    // ReLU and dropout of the hidden layer
    let mut d_pre = vec![0.0; hy.affine];
    for a in 0..hy.affine {
        let scale = tape.hidden_mask.as_ref().map_or(1.0, |m| m[a]);
        if tape.hidden_pre[a] > 0.0 {
            d_pre[a] = dlogit * w2[a] * scale;
        }
    }

    // first affine layer, on the dropped-out input
    let x_masked: Vec<f64> = match &tape.input_mask {
        Some(m) => tape.input.iter().zip(m).map(|(a, b)| a * b).collect(),
        None => tape.input.clone(),
    };
    let w1 = p.group(Group::Affine1Weights);
    let mut dx = vec![0.0; ni];
    for a in 0..hy.affine {
        let d = d_pre[a];
        if d == 0.0 {
            continue;
        }
        grad[o_b1 + a] += d;
        axpy(d, &x_masked, &mut grad[o_w1 + a * ni..o_w1 + (a + 1) * ni]);
        axpy(d, &w1[a * ni..(a + 1) * ni], &mut dx);
    }
    if let Some(m) = &tape.input_mask {
        for (g, s) in dx.iter_mut().zip(m) {
            *g *= s;
        }
    }
    if tape.value_masked {
        return;
    }
    let d_value = &dx[hy.name_dim..hy.name_dim + hy.value_dim()];
    let (d_gru, d_conv) = d_value.split_at(hd);
    let t_len = tape.value_len;

    // convolution: only the arg-max window of each active channel
    for j in 0..cn {
        if tape.conv_max[j] <= 0.0 || d_conv[j] == 0.0 {
            continue;
        }
        let d = d_conv[j];
        grad[o_cb + j] += d;
        let s = tape.conv_arg[j];
        for tap in 0..k {
            let pos = s + tap;
            if pos >= t_len {
                break;
            }
            let ch = f.value_chars[pos] as usize;
            acc.gc[(tap * v + ch) * cn + j] += d;
        }
    }

    // GRU, backwards through time
    let wh = p.group(Group::GruHiddenWeights);
    let mut dh = d_gru.to_vec();
    let mut dh_prev = vec![0.0; hd];
    let mut dhp = vec![0.0; g3];
    for t in (0..t_len).rev() {
        let row = t * hd..(t + 1) * hd;
        let (z, r, n, hpn, hprev) = (
            &tape.z[row.clone()],
            &tape.r[row.clone()],
            &tape.n[row.clone()],
            &tape.hp_n[row.clone()],
            &tape.h_prev[row],
        );
        let ch = f.value_chars[t] as usize;
        let gx = &mut acc.gx[ch * g3..(ch + 1) * g3];
        for i in 0..hd {
            let dn = dh[i] * (1.0 - z[i]);
            let dz = dh[i] * (hprev[i] - n[i]);
            dh_prev[i] = dh[i] * z[i];
            let da_n = dn * (1.0 - n[i] * n[i]);
            let dr = da_n * hpn[i];
            let da_z = dz * z[i] * (1.0 - z[i]);
            let da_r = dr * r[i] * (1.0 - r[i]);
            gx[i] += da_z;
            gx[hd + i] += da_r;
            gx[2 * hd + i] += da_n;
            dhp[i] = da_z;
            dhp[hd + i] = da_r;
            dhp[2 * hd + i] = da_n * r[i];
        }
        for g in 0..g3 {
            let d = dhp[g];
            if d == 0.0 {
                continue;
            }
            grad[o_bh + g] += d;
            if t > 0 {
                axpy(d, hprev, &mut grad[o_wh + g * hd..o_wh + (g + 1) * hd]);
                axpy(d, &wh[g * hd..(g + 1) * hd], &mut dh_prev);
            }
        }
        std::mem::swap(&mut dh, &mut dh_prev);
    }
}

/// Loss of one example and its gradient (after [`GradAccum::finish`]).
pub fn loss_and_gradient(
    p: &Params,
    f: &FeatureBundle,
    target: f64,
    dropout: Dropout<'_>,
) -> Result<(f64, Vec<f64>)> {
    let cache = BatchCache::new(p);
    let tape = forward(p, &cache, f, dropout)?;
    let mut acc = GradAccum::new(&p.layout);
    backward(p, f, &tape, tape.prob - target, &mut acc);
    acc.finish(p);
    Ok((bce_with_logit(tape.logit, target), acc.grad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::encode::{encode_length, encode_shape, encode_type, encode_value_chars};

    pub(crate) fn small_hyper() -> Hyper {
        Hyper {
            name_dim: 6,
            char_dim: 4,
            hidden: 5,
            channels: 7,
            kernel: 3,
            affine: 8,
            max_len: 12,
            ..Hyper::default()
        }
    }

    fn bundle(repr: &str, hy: &Hyper) -> FeatureBundle {
        let (value_chars, value_len) = encode_value_chars(repr, hy.max_len);
        FeatureBundle {
            name_vec: (0..hy.name_dim).map(|i| (i as f64 * 0.37).sin()).collect(),
            value_chars,
            value_len,
            value_masked: false,
            type_onehot: encode_type("int", &["int".to_string()]),
            len_onehot: encode_length(Some(3)),
            shape_onehot: encode_shape(None),
        }
    }

    #[test]
    fn probability_is_strictly_inside_unit_interval() {
        let p = Params::init(Hyper::default(), 3);
        let cache = BatchCache::new(&p);
        let hy = *p.hyper();
        for repr in ["", "31", "[1, 2, 3]", &"z".repeat(300)] {
            let t = forward(&p, &cache, &bundle(repr, &hy), Dropout::Off).unwrap();
            assert!(t.prob > 0.0 && t.prob < 1.0);
        }
    }

    #[test]
    fn inference_is_deterministic() {
        let p = Params::init(small_hyper(), 1);
        let cache = BatchCache::new(&p);
        let b = bundle("2.5", &small_hyper());
        let a = forward(&p, &cache, &b, Dropout::Off).unwrap().prob;
        let c = forward(&p, &cache, &b, Dropout::Off).unwrap().prob;
        assert_eq!(a.to_bits(), c.to_bits());
    }

    #[test]
    fn padding_windows_match_explicit_convolution() {
        // Brute-force convolution over the padded sequence.
        let p = Params::init(small_hyper(), 5);
        let hy = *p.hyper();
        let b = bundle("ab", &hy);
        let cache = BatchCache::new(&p);
        let tape = forward(&p, &cache, &b, Dropout::Off).unwrap();
        let emb = p.group(Group::CharEmbedding);
        let w = p.group(Group::ConvWeights);
        let bias = p.group(Group::ConvBias);
        for j in 0..hy.channels {
            let mut best = f64::NEG_INFINITY;
            for s in 0..hy.windows() {
                let mut acc = bias[j];
                for tap in 0..hy.kernel {
                    let ch = b.value_chars[s + tap] as usize;
                    for e in 0..hy.char_dim {
                        acc += w[(j * hy.kernel + tap) * hy.char_dim + e] * emb[ch * hy.char_dim + e];
                    }
                }
                best = best.max(acc);
            }
            let got = tape.value_vector(&hy)[hy.hidden + j];
            assert!((got - best.max(0.0)).abs() < 1e-12);
        }
    }

    #[test]
    fn masked_value_ignores_the_string() {
        let p = Params::init(small_hyper(), 2);
        let cache = BatchCache::new(&p);
        let hy = small_hyper();
        let mut a = bundle("hello", &hy);
        let mut b = bundle("[1, 2]", &hy);
        a.value_masked = true;
        b.value_masked = true;
        let pa = forward(&p, &cache, &a, Dropout::Off).unwrap().prob;
        let pb = forward(&p, &cache, &b, Dropout::Off).unwrap().prob;
        assert_eq!(pa, pb);
    }

    #[test]
    fn bce_is_stable() {
        assert!((bce_with_logit(0.0, 1.0) - 2f64.ln()).abs() < 1e-15);
        assert!(bce_with_logit(800.0, 1.0).abs() < 1e-12);
        assert!((bce_with_logit(-800.0, 1.0) - 800.0).abs() < 1e-9);
    }
}
