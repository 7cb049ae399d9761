use serde::{Deserialize, Serialize};

use super::NameValuePair;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterReport {
    /// Removed because the whole name is shorter than three characters.
    pub short_name: usize,
    /// Removed because every underscore-separated subtoken is shorter than three characters.
    pub short_subtokens: usize,
}

const MIN_LEN: usize = 3;

/// Which filtering rule, if any, discards `name`.
fn rule_for(name: &str) -> Option<Rule> {
    if name.chars().count() < MIN_LEN {
        return Some(Rule::ShortName);
    }
    let mut parts = name.split('_');
    let all_short = parts.clone().all(|s| s.chars().count() < MIN_LEN);
    if parts.nth(1).is_some() && all_short {
        return Some(Rule::ShortSubtokens);
    }
    None
}

enum Rule {
    ShortName,
    ShortSubtokens,
}

pub fn is_meaningless_name(name: &str) -> bool {
    rule_for(name).is_some()
}

/// Drops pairs with cryptic names, keeping the order of the rest.
pub fn filter_names(pairs: Vec<NameValuePair>) -> (Vec<NameValuePair>, FilterReport) {
    let mut report = FilterReport::default();
    let kept = pairs
        .into_iter()
        .filter(|p| match rule_for(&p.name) {
            None => true,
            Some(Rule::ShortName) => {
                report.short_name += 1;
                false
            }
            Some(Rule::ShortSubtokens) => {
                report.short_subtokens += 1;
                false
            }
        })
        .collect();
    (kept, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::pair;
    use proptest::prelude::*;

    #[test]
    fn short_and_cryptic_names() {
        assert!(is_meaningless_name("a"));
        assert!(is_meaningless_name("df"));
        assert!(is_meaningless_name("ts_pd"));
        assert!(!is_meaningless_name("log_file"));
        assert!(!is_meaningless_name("age"));
        // one long subtoken is enough to keep a name
        assert!(!is_meaningless_name("pd_frame"));
        assert!(!is_meaningless_name("abc"));
        assert!(is_meaningless_name("a_b_c"));
    }

    #[test]
    fn counts_per_rule() {
        let pairs = vec![
            pair("a", "1", "int"),
            pair("ts_pd", "1", "int"),
            pair("log_file", "'x.log'", "str"),
            pair("xy", "1", "int"),
        ];
        let (kept, report) = filter_names(pairs);
        assert_eq!(kept.len(), 1);
        assert_eq!(kept[0].name, "log_file");
        assert_eq!(report.short_name, 2);
        assert_eq!(report.short_subtokens, 1);
    }

    proptest! {
        #[test]
        fn filter_is_an_order_preserving_subset(names in proptest::collection::vec("[a-z_]{0,8}", 0..40)) {
            let pairs: Vec<_> = names.iter().map(|n| pair(n, "1", "int")).collect();
            let (kept, report) = filter_names(pairs.clone());
            prop_assert_eq!(kept.len() + report.short_name + report.short_subtokens, pairs.len());
            let mut it = pairs.iter();
            for k in &kept {
                prop_assert!(it.any(|p| p == k));
                prop_assert!(!is_meaningless_name(&k.name));
            }
        }
    }
}
