//! Parameter layout of the classifier.
//!
//! All trainable parameters live in one flat vector; each [`Group`] owns a
//! contiguous range of it. Gradients use the same layout, which keeps the
//! optimizer, gradient checking, and checkpointing oblivious to the network.

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::encode::{CHAR_VOCAB, MAX_VALUE_CHARS, PAD, SIZE_SLOTS, TYPE_SLOTS};
use crate::rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyper {
    pub name_dim: usize,
    pub char_vocab: usize,
    pub char_dim: usize,
    /// Recurrent hidden size.
    pub hidden: usize,
    /// Convolution output channels.
    pub channels: usize,
    /// Convolution kernel width in characters.
    pub kernel: usize,
    /// Width of the first affine layer.
    pub affine: usize,
    pub max_len: usize,
}

impl Default for Hyper {
    fn default() -> Self {
        Hyper {
            name_dim: 100,
            char_vocab: CHAR_VOCAB,
            char_dim: 16,
            hidden: 64,
            channels: 100,
            kernel: 5,
            affine: 128,
            max_len: MAX_VALUE_CHARS,
        }
    }
}

impl Hyper {
    pub fn value_dim(&self) -> usize {
        self.hidden + self.channels
    }

    /// Width of the concatenated input to the first affine layer.
    pub fn input_dim(&self) -> usize {
        self.name_dim + self.value_dim() + TYPE_SLOTS + 2 * SIZE_SLOTS
    }

    /// Number of convolution windows over a padded value string.
    pub fn windows(&self) -> usize {
        self.max_len - self.kernel + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    CharEmbedding,
    GruInputWeights,
    GruInputBias,
    GruHiddenWeights,
    GruHiddenBias,
    ConvWeights,
    ConvBias,
    Affine1Weights,
    Affine1Bias,
    Affine2Weights,
    Affine2Bias,
}

impl Group {
    pub const ALL: [Group; 11] = [
        Group::CharEmbedding,
        Group::GruInputWeights,
        Group::GruInputBias,
        Group::GruHiddenWeights,
        Group::GruHiddenBias,
        Group::ConvWeights,
        Group::ConvBias,
        Group::Affine1Weights,
        Group::Affine1Bias,
        Group::Affine2Weights,
        Group::Affine2Bias,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::CharEmbedding => "char_embedding",
            Group::GruInputWeights => "gru_input_weights",
            Group::GruInputBias => "gru_input_bias",
            Group::GruHiddenWeights => "gru_hidden_weights",
            Group::GruHiddenBias => "gru_hidden_bias",
            Group::ConvWeights => "conv_weights",
            Group::ConvBias => "conv_bias",
            Group::Affine1Weights => "affine1_weights",
            Group::Affine1Bias => "affine1_bias",
            Group::Affine2Weights => "affine2_weights",
            Group::Affine2Bias => "affine2_bias",
        }
    }

    fn size(self, h: &Hyper) -> usize {
        let gates = 3 * h.hidden;
        match self {
            Group::CharEmbedding => h.char_vocab * h.char_dim,
            Group::GruInputWeights => gates * h.char_dim,
            Group::GruInputBias | Group::GruHiddenBias => gates,
            Group::GruHiddenWeights => gates * h.hidden,
            Group::ConvWeights => h.channels * h.kernel * h.char_dim,
            Group::ConvBias => h.channels,
            Group::Affine1Weights => h.affine * h.input_dim(),
            Group::Affine1Bias => h.affine,
            Group::Affine2Weights => h.affine,
            Group::Affine2Bias => 1,
        }
    }

    /// Fan-in used to scale the uniform initialization.
    fn fan_in(self, h: &Hyper) -> usize {
        match self {
            Group::CharEmbedding => 1,
            Group::GruInputWeights
            | Group::GruInputBias
            | Group::GruHiddenWeights
            | Group::GruHiddenBias => h.hidden,
            Group::ConvWeights | Group::ConvBias => h.kernel * h.char_dim,
            Group::Affine1Weights | Group::Affine1Bias => h.input_dim(),
            Group::Affine2Weights | Group::Affine2Bias => h.affine,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub hyper: Hyper,
    offsets: [usize; 12],
}

impl Layout {
    pub fn new(hyper: Hyper) -> Self {
        let mut offsets = [0; 12];
        for (i, g) in Group::ALL.iter().enumerate() {
            offsets[i + 1] = offsets[i] + g.size(&hyper);
        }
        Layout { hyper, offsets }
    }

    pub fn range(&self, group: Group) -> std::ops::Range<usize> {
        let i = group as usize;
        self.offsets[i]..self.offsets[i + 1]
    }

    pub fn total(&self) -> usize {
        self.offsets[Group::ALL.len()]
    }

    pub fn group_of(&self, index: usize) -> Group {
        let i = self.offsets[1..].partition_point(|&end| end <= index);
        Group::ALL[i]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    pub layout: Layout,
    pub data: Vec<f64>,
}

impl Params {
    pub fn zeros(hyper: Hyper) -> Self {
        let layout = Layout::new(hyper);
        let data = vec![0.0; layout.total()];
        Params { layout, data }
    }

    /// Uniform `±1/sqrt(fan_in)` initialization; character embeddings are
    /// uniform with unit variance and the padding row is zero.
    pub fn init(hyper: Hyper, seed: u64) -> Self {
        let mut p = Params::zeros(hyper);
        let mut r = rng::stream(seed, &[0x1417]);
        for g in Group::ALL {
            let bound = match g {
                Group::CharEmbedding => 3f64.sqrt(),
                _ => 1.0 / (g.fan_in(&hyper) as f64).sqrt(),
            };
            let range = p.layout.range(g);
            for x in &mut p.data[range] {
                *x = r.gen_range(-bound..bound);
            }
        }
        let pad = PAD as usize * hyper.char_dim;
        p.group_mut(Group::CharEmbedding)[pad..pad + hyper.char_dim].fill(0.0);
        p
    }

    pub fn hyper(&self) -> &Hyper {
        &self.layout.hyper
    }

    pub fn group(&self, g: Group) -> &[f64] {
        &self.data[self.layout.range(g)]
    }

    pub fn group_mut(&mut self, g: Group) -> &mut [f64] {
        let r = self.layout.range(g);
        &mut self.data[r]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_layout_sizes() {
        let h = Hyper::default();
        assert_eq!(h.input_dim(), 299);
        assert_eq!(h.windows(), 196);
        let l = Layout::new(h);
        assert_eq!(l.range(Group::Affine1Weights).len(), 128 * 299);
        assert_eq!(l.range(Group::GruHiddenWeights).len(), 192 * 64);
        assert_eq!(l.range(Group::Affine2Bias).len(), 1);
        assert_eq!(l.range(Group::Affine2Bias).end, l.total());
    }

    #[test]
    fn group_lookup_by_index() {
        let l = Layout::new(Hyper::default());
        for g in Group::ALL {
            let r = l.range(g);
            assert_eq!(l.group_of(r.start), g);
            assert_eq!(l.group_of(r.end - 1), g);
        }
    }

    #[test]
    fn init_is_seeded_and_pads_with_zero() {
        let a = Params::init(Hyper::default(), 1);
        let b = Params::init(Hyper::default(), 1);
        let c = Params::init(Hyper::default(), 2);
        assert_eq!(a, b);
        assert_ne!(a, c);
        let pad = PAD as usize * 16;
        assert!(a.group(Group::CharEmbedding)[pad..pad + 16].iter().all(|&x| x == 0.0));
    }
}
