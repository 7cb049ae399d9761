//! Negative (inconsistent) example generation.
//!
//! Two strategies are available. The purely random baseline pairs a name
//! with the value of another randomly chosen pair. The type-guided strategy
//! first picks a type that the name is never or only rarely seen with,
//! weighted by the type's global frequency, and then takes a random value of
//! that type from the dataset.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::corpus::{type_frequencies, DatasetSplit, NameValuePair, TypeFrequencyTable};
use crate::error::{Error, Result};
use crate::rng::{self, Rng};

/// Default share at or below which a type counts as infrequent for a name.
pub const INFREQUENT_SHARE: f64 = 0.03;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    Consistent,
    Inconsistent,
}

impl Label {
    /// Training target: 0 for consistent, 1 for inconsistent.
    pub fn target(self) -> f64 {
        match self {
            Label::Consistent => 0.0,
            Label::Inconsistent => 1.0,
        }
    }

    pub fn is_inconsistent(self) -> bool {
        self == Label::Inconsistent
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExampleOrigin {
    Observed,
    TypeGuided,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    TypeGuided,
    Random,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "type-guided" | "type_guided" => Ok(Strategy::TypeGuided),
            "random" => Ok(Strategy::Random),
            other => Err(Error::InvalidArgument(format!("unknown strategy {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledExample {
    pub pair: NameValuePair,
    pub label: Label,
    pub origin: ExampleOrigin,
    /// Seed of the random stream that produced a negative example.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generation_seed: Option<u64>,
}

impl LabeledExample {
    pub fn observed(pair: NameValuePair) -> Self {
        LabeledExample {
            pair,
            label: Label::Consistent,
            origin: ExampleOrigin::Observed,
            generation_seed: None,
        }
    }
}

/// The dataset `D` that negatives draw their values from, with its type
/// statistics and a by-type index.
pub struct SampleSource<'a> {
    pairs: &'a [NameValuePair],
    table: TypeFrequencyTable,
    by_type: BTreeMap<&'a str, Vec<usize>>,
}

impl<'a> SampleSource<'a> {
    pub fn new(pairs: &'a [NameValuePair]) -> Self {
        let table = type_frequencies(pairs, usize::MAX);
        let mut by_type: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (i, p) in pairs.iter().enumerate() {
            by_type.entry(p.type_name.as_str()).or_default().push(i);
        }
        SampleSource {
            pairs,
            table,
            by_type,
        }
    }

    pub fn table(&self) -> &TypeFrequencyTable {
        &self.table
    }

    pub fn pairs(&self) -> &'a [NameValuePair] {
        self.pairs
    }

    /// Candidate types for `name`: types never seen with it, plus those whose
    /// share among its pairs is at most `infreq_threshold`.
    pub fn candidate_types(&self, name: &str, infreq_threshold: f64) -> BTreeSet<&str> {
        let per_name = self.table.per_name.get(name);
        let total: u64 = per_name.map(|m| m.values().sum()).unwrap_or(0);
        self.table
            .global
            .keys()
            .filter(|ty| match per_name.and_then(|m| m.get(*ty)) {
                None => true,
                Some(&count) => count as f64 / total as f64 <= infreq_threshold,
            })
            .map(String::as_str)
            .collect()
    }

    /// Type with the smallest share among those seen with `name`; ties go to
    /// the lexicographically smallest type.
    fn least_common_type(&self, name: &str) -> Option<&str> {
        self.table
            .per_name
            .get(name)?
            .iter()
            .min_by(|a, b| a.1.cmp(b.1).then_with(|| a.0.cmp(b.0)))
            .map(|(t, _)| t.as_str())
    }
}

/// Draws one key with probability proportional to its integer weight.
/// Zero-weight keys are never drawn; returns `None` if all weights are zero.
pub fn weighted_choice<'k, R: rand::Rng + ?Sized>(
    items: &[(&'k str, u64)],
    rng: &mut R,
) -> Option<&'k str> {
    let total: u64 = items.iter().map(|(_, w)| w).sum();
    if total == 0 {
        return None;
    }
    let mut ticket = rng.gen_range(0..total);
    for &(key, weight) in items {
        if ticket < weight {
            return Some(key);
        }
        ticket -= weight;
    }
    unreachable!("ticket below total weight")
}

/// Type-guided negative example for `pair`.
pub fn generate_negative_typeguided(
    pair: &NameValuePair,
    source: &SampleSource<'_>,
    infreq_threshold: f64,
    rng: &mut Rng,
) -> Result<LabeledExample> {
    if source.pairs.is_empty() {
        return Err(Error::Dataset("cannot sample from an empty dataset".into()));
    }
    let candidates = source.candidate_types(&pair.name, infreq_threshold);
    let weighted: Vec<(&str, u64)> = candidates
        .iter()
        .map(|&t| (t, source.table.global[t]))
        .collect();
    let target = match weighted_choice(&weighted, rng) {
        Some(t) => t,
        None => source
            .least_common_type(&pair.name)
            .ok_or_else(|| Error::Dataset(format!("no candidate type for {:?}", pair.name)))?,
    };
    let pool = &source.by_type[target];
    let donor = &source.pairs[pool[rng.gen_range(0..pool.len())]];
    Ok(LabeledExample {
        pair: pair.with_value_of(donor),
        label: Label::Inconsistent,
        origin: ExampleOrigin::TypeGuided,
        generation_seed: None,
    })
}

/// Random-baseline negative for `pair`. `own_index` is the position of
/// `pair` inside the source dataset, if it is a member, so it is never
/// picked as its own donor.
pub fn generate_negative_random(
    pair: &NameValuePair,
    own_index: Option<usize>,
    source: &SampleSource<'_>,
    rng: &mut Rng,
) -> Result<LabeledExample> {
    let n = source.pairs.len();
    let donor = match own_index {
        Some(i) => {
            if n < 2 {
                return Err(Error::Dataset(
                    "random negatives need at least two pairs".into(),
                ));
            }
            let j = rng.gen_range(0..n - 1);
            if j >= i {
                j + 1
            } else {
                j
            }
        }
        None => {
            if n == 0 {
                return Err(Error::Dataset("cannot sample from an empty dataset".into()));
            }
            rng.gen_range(0..n)
        }
    };
    Ok(LabeledExample {
        pair: pair.with_value_of(&source.pairs[donor]),
        label: Label::Inconsistent,
        origin: ExampleOrigin::Random,
        generation_seed: None,
    })
}

/// Which positives form the dataset `D` that negatives are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceScope {
    /// Training positives only, for every split.
    #[default]
    Train,
    /// All positives of all splits.
    Global,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub strategy: Strategy,
    pub infreq_threshold: f64,
    pub scope: SourceScope,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            strategy: Strategy::TypeGuided,
            infreq_threshold: INFREQUENT_SHARE,
            scope: SourceScope::Train,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledSplit {
    pub train: Vec<LabeledExample>,
    pub valid: Vec<LabeledExample>,
    pub test: Vec<LabeledExample>,
}

impl LabeledSplit {
    pub fn parts(&self) -> [(&'static str, &[LabeledExample]); 3] {
        [("train", &self.train), ("valid", &self.valid), ("test", &self.test)]
    }
}

/// One negative per positive in every split. Each positive is followed by
/// its negative. The negative for positive `i` of split `s` is drawn from its
/// own random stream, so the output does not depend on generation order.
pub fn build_labeled_dataset(split: &DatasetSplit, config: &SampleConfig) -> Result<LabeledSplit> {
    if split.is_empty() {
        return Err(Error::Dataset("cannot label an empty split".into()));
    }
    let global: Vec<NameValuePair>;
    let (source_pairs, offsets): (&[NameValuePair], [Option<usize>; 3]) = match config.scope {
        SourceScope::Train => (&split.train, [Some(0), None, None]),
        SourceScope::Global => {
            global = split
                .train
                .iter()
                .chain(&split.valid)
                .chain(&split.test)
                .cloned()
                .collect();
            let t = split.train.len();
            let v = split.valid.len();
            (&global, [Some(0), Some(t), Some(t + v)])
        }
    };
    let source = SampleSource::new(source_pairs);

    let label_part = |part_id: u64, positives: &[NameValuePair], offset: Option<usize>| {
        let mut out = Vec::with_capacity(positives.len() * 2);
        for (i, p) in positives.iter().enumerate() {
            let seed = rng::derive_seed(config.seed, &[part_id, i as u64]);
            let mut r = rng::stream(seed, &[]);
            let mut neg = match config.strategy {
                Strategy::TypeGuided => {
                    generate_negative_typeguided(p, &source, config.infreq_threshold, &mut r)?
                }
                Strategy::Random => {
                    generate_negative_random(p, offset.map(|o| o + i), &source, &mut r)?
                }
            };
            neg.generation_seed = Some(seed);
            out.push(LabeledExample::observed(p.clone()));
            out.push(neg);
        }
        Ok::<_, Error>(out)
    };

    Ok(LabeledSplit {
        train: label_part(0, &split.train, offsets[0])?,
        valid: label_part(1, &split.valid, offsets[1])?,
        test: label_part(2, &split.test, offsets[2])?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::pair;

    fn years_dataset() -> Vec<NameValuePair> {
        let mut d = Vec::new();
        d.extend((0..235).map(|i| pair("years", &format!("[{i}, {}]", i + 1), "list")));
        d.extend((0..7).map(|i| pair("years", &format!("{i}.5"), "float")));
        d.extend((0..10).map(|i| pair("years", &i.to_string(), "int")));
        d.extend((0..50).map(|i| pair("ratio", &format!("{i}.8"), "float")));
        d.extend((0..40).map(|i| pair("title", &format!("'t{i}'"), "str")));
        d.extend((0..20).map(|i| pair("done", if i % 2 == 0 { "True" } else { "False" }, "bool")));
        d
    }

    #[test]
    fn years_candidates_follow_shares() {
        let d = years_dataset();
        let src = SampleSource::new(&d);
        // years: 252 pairs; float 7/252 = 2.8% (infrequent), int 10/252 = 4.0%
        let cand = src.candidate_types("years", INFREQUENT_SHARE);
        assert_eq!(cand, ["bool", "float", "str"].into_iter().collect());
    }

    #[test]
    fn years_negative_takes_an_observed_value_of_a_candidate_type() {
        let d = years_dataset();
        let src = SampleSource::new(&d);
        let mut r = rng::stream(1, &[]);
        for _ in 0..200 {
            let neg = generate_negative_typeguided(&d[0], &src, INFREQUENT_SHARE, &mut r).unwrap();
            assert_eq!(neg.pair.name, "years");
            assert!(["bool", "float", "str"].contains(&neg.pair.type_name.as_str()));
            assert!(d.iter().any(|p| p.repr == neg.pair.repr && p.type_name == neg.pair.type_name));
            assert_eq!(neg.label, Label::Inconsistent);
        }
    }

    #[test]
    fn name_seen_only_with_int_never_gets_int() {
        let mut d: Vec<_> = (0..30).map(|i| pair("count", &i.to_string(), "int")).collect();
        d.extend((0..30).map(|i| pair("other", &i.to_string(), "int")));
        d.extend((0..5).map(|i| pair("label", &format!("'{i}'"), "str")));
        let src = SampleSource::new(&d);
        let mut r = rng::stream(2, &[]);
        for _ in 0..100 {
            let neg = generate_negative_typeguided(&d[0], &src, INFREQUENT_SHARE, &mut r).unwrap();
            assert_eq!(neg.pair.type_name, "str");
        }
    }

    #[test]
    fn share_of_exactly_three_percent_is_infrequent() {
        let mut d: Vec<_> = (0..97).map(|i| pair("amount", &i.to_string(), "int")).collect();
        d.extend((0..3).map(|i| pair("amount", &format!("{i}.5"), "float")));
        let src = SampleSource::new(&d);
        let cand = src.candidate_types("amount", 0.03);
        assert!(cand.contains("float"));
        assert!(!cand.contains("int"));
    }

    #[test]
    fn empty_candidate_set_falls_back_to_least_common_type() {
        let mut d: Vec<_> = (0..10).map(|i| pair("value", &i.to_string(), "int")).collect();
        d.extend((0..4).map(|i| pair("value", &format!("'{i}'"), "str")));
        let src = SampleSource::new(&d);
        assert!(src.candidate_types("value", 0.03).is_empty());
        let mut r = rng::stream(3, &[]);
        let neg = generate_negative_typeguided(&d[0], &src, 0.03, &mut r).unwrap();
        assert_eq!(neg.pair.type_name, "str");
    }

    #[test]
    fn random_negative_never_reuses_its_own_pair() {
        let d = vec![pair("num", "23", "int"), pair("age", "3", "int")];
        let src = SampleSource::new(&d);
        let mut r = rng::stream(4, &[]);
        for _ in 0..50 {
            let neg = generate_negative_random(&d[0], Some(0), &src, &mut r).unwrap();
            assert_eq!(neg.pair.name, "num");
            assert_eq!(neg.pair.repr, "3");
            assert_eq!(neg.origin, ExampleOrigin::Random);
        }
    }

    #[test]
    fn random_negative_needs_two_pairs() {
        let d = vec![pair("num", "23", "int")];
        let src = SampleSource::new(&d);
        let mut r = rng::stream(5, &[]);
        assert!(generate_negative_random(&d[0], Some(0), &src, &mut r).is_err());
    }

    #[test]
    fn random_negative_is_deterministic() {
        let d = years_dataset();
        let src = SampleSource::new(&d);
        let draw = |seed| {
            let mut r = rng::stream(seed, &[]);
            (0..20)
                .map(|i| generate_negative_random(&d[i], Some(i), &src, &mut r).unwrap().pair.repr)
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(11), draw(11));
    }

    #[test]
    fn weighted_choice_skips_zero_weights() {
        let mut r = rng::stream(6, &[]);
        let items = [("a", 0), ("b", 5), ("c", 0)];
        for _ in 0..100 {
            assert_eq!(weighted_choice(&items, &mut r), Some("b"));
        }
        assert_eq!(weighted_choice(&[("a", 0)], &mut r), None);
    }

    #[test]
    fn labeled_dataset_is_one_to_one_and_deterministic() {
        let d = years_dataset();
        let split = crate::corpus::split_dataset(d, 30, 0.8, 1).unwrap();
        let config = SampleConfig {
            seed: 5,
            ..Default::default()
        };
        let a = build_labeled_dataset(&split, &config).unwrap();
        let b = build_labeled_dataset(&split, &config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.train.len(), 2 * split.train.len());
        assert_eq!(a.test.len(), 2 * split.test.len());
        for part in [&a.train, &a.valid, &a.test] {
            for chunk in part.chunks(2) {
                assert_eq!(chunk[0].origin, ExampleOrigin::Observed);
                assert_eq!(chunk[0].label, Label::Consistent);
                assert_eq!(chunk[1].origin, ExampleOrigin::TypeGuided);
                assert_eq!(chunk[1].label, Label::Inconsistent);
                assert_eq!(chunk[0].pair.name, chunk[1].pair.name);
            }
        }
    }

    #[test]
    fn strategies_produce_different_negatives() {
        let d = years_dataset();
        let split = crate::corpus::split_dataset(d, 30, 0.8, 1).unwrap();
        let tg = build_labeled_dataset(&split, &SampleConfig { seed: 5, ..Default::default() }).unwrap();
        let rd = build_labeled_dataset(
            &split,
            &SampleConfig {
                seed: 5,
                strategy: Strategy::Random,
                ..Default::default()
            },
        )
        .unwrap();
        let negs = |s: &LabeledSplit| {
            let mut v: Vec<_> = s
                .train
                .iter()
                .filter(|e| e.label.is_inconsistent())
                .map(|e| (e.pair.name.clone(), e.pair.repr.clone()))
                .collect();
            v.sort();
            v
        };
        assert_ne!(negs(&tg), negs(&rd));
    }
}
