use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::freq::frequent_types;
use super::NameValuePair;

/// Settings for collapsing infrequent types into related frequent ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeConfig {
    /// Number of frequent types to keep.
    pub top_k: usize,
    /// Extra subtype → supertype links that the recorded bases do not show.
    pub aliases: BTreeMap<String, String>,
    /// `(subtype, supertype)` links that are never followed.
    pub never_merge: BTreeSet<(String, String)>,
}

impl Default for MergeConfig {
    fn default() -> Self {
        let aliases = [
            ("frozenset", "set"),
            ("defaultdict", "dict"),
            ("OrderedDict", "dict"),
        ]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        let never_merge = [("bool".to_string(), "int".to_string())].into();
        MergeConfig {
            top_k: 10,
            aliases,
            never_merge,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergeReport {
    pub frequent: Vec<String>,
    /// `(from, to) → number of pairs rewritten`.
    pub merged: BTreeMap<String, BTreeMap<String, u64>>,
    /// Infrequent types left as they were.
    pub residual: BTreeMap<String, u64>,
}

/// Picks the `top_k` most frequent types of `pairs` and rewrites every other
/// type that is a subclass (or alias) of one of them.
pub fn merge_types(pairs: Vec<NameValuePair>, config: &MergeConfig) -> (Vec<NameValuePair>, MergeReport) {
    let mut global = BTreeMap::new();
    for p in &pairs {
        *global.entry(p.type_name.clone()).or_insert(0u64) += 1;
    }
    let frequent = frequent_types(&global, config.top_k);
    merge_types_with(pairs, &frequent, config)
}

/// Same as [`merge_types`] against a fixed frequent-type list, e.g. the one
/// a trained model was built with.
pub fn merge_types_with(
    mut pairs: Vec<NameValuePair>,
    frequent: &[String],
    config: &MergeConfig,
) -> (Vec<NameValuePair>, MergeReport) {
    let frequent_set: BTreeSet<&str> = frequent.iter().map(String::as_str).collect();
    let mut report = MergeReport {
        frequent: frequent.to_vec(),
        ..Default::default()
    };
    for p in &mut pairs {
        if frequent_set.contains(p.type_name.as_str()) {
            continue;
        }
        match merge_target(p, &frequent_set, config) {
            Some(target) => {
                *report
                    .merged
                    .entry(p.type_name.clone())
                    .or_default()
                    .entry(target.clone())
                    .or_default() += 1;
                p.type_name = target;
            }
            None => *report.residual.entry(p.type_name.clone()).or_default() += 1,
        }
    }
    (pairs, report)
}

fn merge_target(
    pair: &NameValuePair,
    frequent: &BTreeSet<&str>,
    config: &MergeConfig,
) -> Option<String> {
    let ty = pair.type_name.as_str();
    config
        .aliases
        .get(ty)
        .into_iter()
        .chain(pair.bases.iter())
        .find(|base| {
            frequent.contains(base.as_str())
                && !config
                    .never_merge
                    .contains(&(ty.to_string(), base.to_string()))
        })
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::pair;

    fn with_bases(mut p: NameValuePair, bases: &[&str]) -> NameValuePair {
        p.bases = bases.iter().map(|s| s.to_string()).collect();
        p
    }

    fn background() -> Vec<NameValuePair> {
        // Ten frequent types, each clearly more common than the rest.
        let types = ["int", "str", "float", "list", "dict", "set", "bool", "tuple", "ndarray", "NoneType"];
        types
            .iter()
            .flat_map(|t| (0..5).map(move |i| pair("filler", &i.to_string(), t)))
            .map(|p| {
                if p.type_name == "bool" {
                    with_bases(p, &["int"])
                } else {
                    p
                }
            })
            .collect()
    }

    #[test]
    fn frozenset_becomes_set() {
        let mut pairs = background();
        let mut stop = pair("stopwords", "frozenset({'all', 'afterwards', 'eleven'})", "frozenset");
        stop.len = Some(337);
        pairs.push(stop.clone());
        let (merged, report) = merge_types(pairs, &MergeConfig::default());
        let got = merged.last().unwrap();
        assert_eq!(got.type_name, "set");
        assert_eq!(got.repr, stop.repr);
        assert_eq!(got.len, Some(337));
        assert_eq!(report.merged["frozenset"]["set"], 1);
    }

    #[test]
    fn defaultdict_becomes_dict_via_bases() {
        let mut pairs = background();
        pairs.push(with_bases(pair("counts", "defaultdict(<class 'int'>, {})", "defaultdict"), &["dict"]));
        let mut config = MergeConfig::default();
        config.aliases.clear();
        let (merged, _) = merge_types(pairs, &config);
        assert_eq!(merged.last().unwrap().type_name, "dict");
    }

    #[test]
    fn frequent_and_residual_types_untouched() {
        let mut pairs = background();
        pairs.push(pair("canvas", "<Canvas>", "Canvas"));
        let (merged, report) = merge_types(pairs.clone(), &MergeConfig::default());
        assert_eq!(merged[0].type_name, "int");
        assert_eq!(merged.last().unwrap().type_name, "Canvas");
        assert_eq!(report.residual["Canvas"], 1);
    }

    #[test]
    fn bool_never_merges_into_int() {
        let mut pairs: Vec<_> = (0..5).map(|i| pair("count", &i.to_string(), "int")).collect();
        pairs.push(with_bases(pair("flag", "True", "bool"), &["int"]));
        let config = MergeConfig {
            top_k: 1,
            ..Default::default()
        };
        let (merged, report) = merge_types(pairs, &config);
        assert_eq!(merged.last().unwrap().type_name, "bool");
        assert_eq!(report.residual["bool"], 1);
    }

    #[test]
    fn merging_is_idempotent() {
        let mut pairs = background();
        pairs.push(pair("stopwords", "frozenset()", "frozenset"));
        pairs.push(with_bases(pair("counter", "Counter()", "Counter"), &["dict"]));
        pairs.push(pair("widget", "<W>", "Widget"));
        let config = MergeConfig::default();
        let (once, _) = merge_types(pairs, &config);
        let (twice, report) = merge_types(once.clone(), &config);
        assert_eq!(once, twice);
        assert!(report.merged.is_empty());
    }
}
