use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::NameValuePair;

/// Global and per-name type counts over a set of pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeFrequencyTable {
    pub global: BTreeMap<String, u64>,
    pub per_name: BTreeMap<String, BTreeMap<String, u64>>,
    /// Up to `k` most frequent types, by descending count then name.
    pub frequent: Vec<String>,
}

impl TypeFrequencyTable {
    pub fn name_total(&self, name: &str) -> u64 {
        self.per_name
            .get(name)
            .map(|m| m.values().sum())
            .unwrap_or(0)
    }

    /// Share of `type_name` among pairs named `name`, 0 if never seen.
    pub fn share(&self, name: &str, type_name: &str) -> f64 {
        let total = self.name_total(name);
        if total == 0 {
            return 0.0;
        }
        let count = self
            .per_name
            .get(name)
            .and_then(|m| m.get(type_name))
            .copied()
            .unwrap_or(0);
        count as f64 / total as f64
    }
}

pub fn type_frequencies(pairs: &[NameValuePair], k: usize) -> TypeFrequencyTable {
    let mut table = TypeFrequencyTable::default();
    for p in pairs {
        *table.global.entry(p.type_name.clone()).or_default() += 1;
        *table
            .per_name
            .entry(p.name.clone())
            .or_default()
            .entry(p.type_name.clone())
            .or_default() += 1;
    }
    table.frequent = frequent_types(&table.global, k);
    table
}

/// The `k` most frequent types; ties are broken lexicographically.
pub fn frequent_types(global: &BTreeMap<String, u64>, k: usize) -> Vec<String> {
    let mut ranked: Vec<(&String, &u64)> = global.iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
    ranked.into_iter().take(k).map(|(t, _)| t.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::pair;

    #[test]
    fn years_statistics() {
        let mut pairs = Vec::new();
        pairs.extend((0..235).map(|i| pair("years", &format!("[{i}]"), "list")));
        pairs.extend((0..7).map(|i| pair("years", &format!("{i}.8"), "float")));
        pairs.extend((0..3).map(|i| pair("count", &i.to_string(), "int")));
        let t = type_frequencies(&pairs, 10);
        assert_eq!(t.per_name["years"]["list"], 235);
        assert_eq!(t.per_name["years"]["float"], 7);
        assert_eq!(t.name_total("years"), 242);
        assert_eq!(t.global["int"], 3);
        assert_eq!(t.frequent, ["list", "float", "int"]);
    }

    #[test]
    fn empty_input() {
        let t = type_frequencies(&[], 10);
        assert!(t.global.is_empty() && t.per_name.is_empty() && t.frequent.is_empty());
    }

    #[test]
    fn ties_break_lexicographically_and_truncate() {
        let pairs = vec![
            pair("aaa", "1", "zeta"),
            pair("aaa", "1", "alpha"),
            pair("aaa", "1", "mid"),
            pair("aaa", "1", "mid"),
        ];
        let t = type_frequencies(&pairs, 2);
        assert_eq!(t.frequent, ["mid", "alpha"]);
    }
}
