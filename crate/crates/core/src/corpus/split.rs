use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::NameValuePair;
use crate::error::{Error, Result};
use crate::rng;

/// Disjoint train/validation/test partition of a dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSplit {
    pub train: Vec<NameValuePair>,
    pub valid: Vec<NameValuePair>,
    pub test: Vec<NameValuePair>,
    pub seed: u64,
}

impl DatasetSplit {
    pub fn len(&self) -> usize {
        self.train.len() + self.valid.len() + self.test.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Carves out `test_count` pairs uniformly at random, then splits the rest
/// into train and validation by `train_fraction`. Each part keeps the input
/// order of its members.
pub fn split_dataset(
    pairs: Vec<NameValuePair>,
    test_count: usize,
    train_fraction: f64,
    seed: u64,
) -> Result<DatasetSplit> {
    if test_count >= pairs.len() {
        return Err(Error::InvalidArgument(format!(
            "test count {test_count} must be smaller than the dataset ({} pairs)",
            pairs.len()
        )));
    }
    if !(0.0..=1.0).contains(&train_fraction) {
        return Err(Error::InvalidArgument(format!(
            "train fraction {train_fraction} outside [0, 1]"
        )));
    }
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.shuffle(&mut rng::stream(seed, &[0x5117]));

    let remaining = pairs.len() - test_count;
    let train_count = (remaining as f64 * train_fraction).round() as usize;

    // 0 = test, 1 = train, 2 = valid
    let mut part = vec![0u8; pairs.len()];
    for (rank, &idx) in order.iter().enumerate() {
        part[idx] = if rank < test_count {
            0
        } else if rank < test_count + train_count {
            1
        } else {
            2
        };
    }

    let mut split = DatasetSplit {
        train: Vec::with_capacity(train_count),
        valid: Vec::with_capacity(remaining - train_count),
        test: Vec::with_capacity(test_count),
        seed,
    };
    for (p, which) in pairs.into_iter().zip(part) {
        match which {
            0 => split.test.push(p),
            1 => split.train.push(p),
            _ => split.valid.push(p),
        }
    }
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{pair, Origin};
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn numbered(n: usize) -> Vec<NameValuePair> {
        (0..n)
            .map(|i| {
                let mut p = pair("count", &i.to_string(), "int");
                p.origin = Origin {
                    file: "f.py".into(),
                    line: 1,
                    seq: i as u64,
                    trace: String::new(),
                };
                p
            })
            .collect()
    }

    #[test]
    fn sizes_follow_ratios() {
        let s = split_dataset(numbered(1000), 100, 0.8, 1).unwrap();
        assert_eq!((s.train.len(), s.valid.len(), s.test.len()), (720, 180, 100));
    }

    #[test]
    fn same_seed_same_split() {
        let a = split_dataset(numbered(300), 30, 0.8, 9).unwrap();
        let b = split_dataset(numbered(300), 30, 0.8, 9).unwrap();
        let c = split_dataset(numbered(300), 30, 0.8, 10).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.test, c.test);
    }

    #[test]
    fn test_count_must_leave_pairs() {
        assert!(split_dataset(numbered(10), 10, 0.8, 0).is_err());
        assert!(split_dataset(numbered(10), 11, 0.8, 0).is_err());
    }

    #[test]
    fn full_scale_arithmetic() {
        // 500,332 pairs with 10,000 held out leaves 490,332 to split 80-20
        let remaining: usize = 500_332 - 10_000;
        assert_eq!(remaining, 490_332);
        let train = (remaining as f64 * 0.8).round() as usize;
        assert_eq!(train + (remaining - train), remaining);
    }

    proptest! {
        #[test]
        fn parts_are_disjoint_and_cover_input(n in 2usize..300, test_frac in 0.0f64..0.9, seed in any::<u64>()) {
            let test_count = ((n as f64) * test_frac) as usize;
            let s = split_dataset(numbered(n), test_count.min(n - 1), 0.8, seed).unwrap();
            let mut seen = HashSet::new();
            for p in s.train.iter().chain(&s.valid).chain(&s.test) {
                prop_assert!(seen.insert(p.origin.seq));
            }
            prop_assert_eq!(seen.len(), n);
            for part in [&s.train, &s.valid, &s.test] {
                prop_assert!(part.windows(2).all(|w| w[0].origin.seq < w[1].origin.seq));
            }
        }
    }
}
