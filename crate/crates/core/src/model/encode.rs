//! Vector encodings of the five components of a name-value pair.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::corpus::NameValuePair;
use crate::embed::TokenEmbedding;

/// Frequent-type slots plus one shared slot for every other type.
pub const TYPE_SLOTS: usize = 11;
/// Ten buckets of width 100, one for lengths of 1000 and above, one for absent.
pub const SIZE_SLOTS: usize = 12;
pub const SIZE_BUCKET: u64 = 100;
pub const SIZE_BUCKETS: usize = 10;
pub const ABSENT_SLOT: usize = 11;

/// Printable ASCII (95 symbols) + unknown + padding.
pub const CHAR_VOCAB: usize = 97;
pub const UNK: u8 = 95;
pub const PAD: u8 = 96;
pub const MAX_VALUE_CHARS: usize = 200;

/// A component of a name-value pair that can be masked out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Name,
    ValueString,
    Type,
    Length,
    Shape,
}

impl Component {
    pub const ALL: [Component; 5] = [
        Component::Name,
        Component::ValueString,
        Component::Type,
        Component::Length,
        Component::Shape,
    ];
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::Name => "name",
            Component::ValueString => "value_string",
            Component::Type => "type",
            Component::Length => "length",
            Component::Shape => "shape",
        })
    }
}

impl std::str::FromStr for Component {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Component::ALL
            .into_iter()
            .find(|c| c.to_string() == s || (s == "value" && *c == Component::ValueString))
            .ok_or_else(|| crate::Error::InvalidArgument(format!("unknown component {s:?}")))
    }
}

/// Components whose vector representation is set to zero.
pub type ComponentMask = BTreeSet<Component>;

pub fn one_hot(len: usize, slot: usize) -> Vec<f64> {
    let mut v = vec![0.0; len];
    v[slot] = 1.0;
    v
}

/// Slot `i` for `frequent_types[i]`, slot 10 for everything else.
pub fn type_slot(type_name: &str, frequent_types: &[String]) -> usize {
    frequent_types
        .iter()
        .take(TYPE_SLOTS - 1)
        .position(|t| t == type_name)
        .unwrap_or(TYPE_SLOTS - 1)
}

pub fn encode_type(type_name: &str, frequent_types: &[String]) -> Vec<f64> {
    one_hot(TYPE_SLOTS, type_slot(type_name, frequent_types))
}

pub fn size_slot(size: Option<u64>) -> usize {
    match size {
        None => ABSENT_SLOT,
        Some(n) => ((n / SIZE_BUCKET) as usize).min(SIZE_BUCKETS),
    }
}

pub fn encode_length(len: Option<u64>) -> Vec<f64> {
    one_hot(SIZE_SLOTS, size_slot(len))
}

/// Product of the shape entries, bucketed like a length. The product
/// saturates instead of overflowing.
pub fn encode_shape(shape: Option<&[u64]>) -> Vec<f64> {
    let product = shape.map(|dims| dims.iter().fold(1u64, |acc, &d| acc.saturating_mul(d)));
    one_hot(SIZE_SLOTS, size_slot(product))
}

pub fn char_index(c: char) -> u8 {
    match c {
        ' '..='~' => c as u8 - b' ',
        _ => UNK,
    }
}

/// Value string as character indices, truncated and padded to `max_len`.
/// Returns the indices and the unpadded length.
pub fn encode_value_chars(repr: &str, max_len: usize) -> (Vec<u8>, usize) {
    let mut chars: Vec<u8> = repr.chars().take(max_len).map(char_index).collect();
    let len = chars.len();
    chars.resize(max_len, PAD);
    (chars, len)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeatureBundle {
    pub name_vec: Vec<f64>,
    /// Character indices padded with [`PAD`] to the model's maximum length.
    pub value_chars: Vec<u8>,
    /// Number of leading non-padding entries of `value_chars`.
    pub value_len: usize,
    /// Set when the value-string component is masked; the value encoder's
    /// output is then zero.
    pub value_masked: bool,
    pub type_onehot: Vec<f64>,
    pub len_onehot: Vec<f64>,
    pub shape_onehot: Vec<f64>,
}

/// Encodes all five components, zeroing the masked ones. `name_vec` is the
/// name's embedding, passed in so callers can cache it per name.
pub fn assemble_with_name_vec(
    pair: &NameValuePair,
    name_vec: Vec<f64>,
    frequent_types: &[String],
    mask: &ComponentMask,
) -> FeatureBundle {
    let zero_if = |c: Component, v: Vec<f64>| {
        if mask.contains(&c) {
            vec![0.0; v.len()]
        } else {
            v
        }
    };
    let (value_chars, value_len) = encode_value_chars(&pair.repr, MAX_VALUE_CHARS);
    FeatureBundle {
        name_vec: zero_if(Component::Name, name_vec),
        value_chars,
        value_len,
        value_masked: mask.contains(&Component::ValueString),
        type_onehot: zero_if(Component::Type, encode_type(&pair.type_name, frequent_types)),
        len_onehot: zero_if(Component::Length, encode_length(pair.len)),
        shape_onehot: zero_if(Component::Shape, encode_shape(pair.shape.as_deref())),
    }
}

pub fn assemble_features(
    pair: &NameValuePair,
    embedding: &TokenEmbedding,
    frequent_types: &[String],
    mask: &ComponentMask,
) -> FeatureBundle {
    assemble_with_name_vec(pair, embedding.embed_name(&pair.name), frequent_types, mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::pair;

    fn types() -> Vec<String> {
        ["str", "list", "float", "int", "dict", "bool", "tuple", "ndarray", "set", "NoneType"]
            .map(String::from)
            .to_vec()
    }

    fn hot(v: &[f64]) -> usize {
        assert_eq!(v.iter().filter(|&&x| x == 1.0).count(), 1);
        assert_eq!(v.iter().filter(|&&x| x == 0.0).count(), v.len() - 1);
        v.iter().position(|&x| x == 1.0).unwrap()
    }

    #[test]
    fn type_slots() {
        let t = types();
        assert_eq!(hot(&encode_type("int", &t)), 3);
        assert_eq!(hot(&encode_type("Canvas", &t)), 10);
        assert_eq!(encode_type("Canvas", &t), encode_type("Widget", &t));
    }

    #[test]
    fn length_buckets() {
        for (len, slot) in [(0, 0), (99, 0), (100, 1), (337, 3), (999, 9), (1000, 10), (1001, 10), (1500, 10)] {
            assert_eq!(hot(&encode_length(Some(len))), slot, "len {len}");
        }
        assert_eq!(hot(&encode_length(None)), 11);
    }

    #[test]
    fn shape_buckets_use_the_product() {
        assert_eq!(hot(&encode_shape(Some(&[3, 4, 5]))), 0);
        assert_eq!(hot(&encode_shape(Some(&[40, 30]))), 10);
        assert_eq!(hot(&encode_shape(Some(&[u64::MAX, 2]))), 10);
        assert_eq!(hot(&encode_shape(Some(&[]))), 0);
        assert_eq!(hot(&encode_shape(None)), 11);
    }

    #[test]
    fn value_chars_are_truncated_and_padded() {
        let long = "x".repeat(500);
        let (chars, len) = encode_value_chars(&long, MAX_VALUE_CHARS);
        assert_eq!((chars.len(), len), (200, 200));
        let (chars, len) = encode_value_chars("a\u{e9}~", MAX_VALUE_CHARS);
        assert_eq!(len, 3);
        assert_eq!(&chars[..4], &[b'a' - b' ', UNK, 94, PAD]);
        assert!(chars.iter().all(|&c| (c as usize) < CHAR_VOCAB));
    }

    #[test]
    fn masks_zero_components() {
        let mut p = pair("age", "31", "int");
        p.len = None;
        let none = ComponentMask::new();
        let b = assemble_with_name_vec(&p, vec![1.0; 4], &types(), &none);
        assert_eq!(hot(&b.len_onehot), 11);
        assert_eq!(hot(&b.shape_onehot), 11);
        let mask: ComponentMask = [Component::Shape, Component::Name].into();
        let b = assemble_with_name_vec(&p, vec![1.0; 4], &types(), &mask);
        assert!(b.shape_onehot.iter().all(|&x| x == 0.0));
        assert!(b.name_vec.iter().all(|&x| x == 0.0));
        assert_eq!(hot(&b.type_onehot), 3);
    }

    #[test]
    fn component_names_parse() {
        for c in Component::ALL {
            assert_eq!(c.to_string().parse::<Component>().unwrap(), c);
        }
        assert!("colour".parse::<Component>().is_err());
    }
}
