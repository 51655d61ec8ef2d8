use std::cmp::Ordering;

/// Order for element/vertex tokens: numeric tokens sort by value (so "2"
/// comes before "10"), numeric before non-numeric, everything else by bytes.
/// Used wherever output order must be stable across runs.
pub fn token_cmp(a: &str, b: &str) -> Ordering {
    // only pure digit strings count as numeric; u64's FromStr would also
    // take a leading '+', which must stay textual ("+1" names a vertex)
    fn numeric(s: &str) -> Option<u64> {
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            s.parse().ok()
        } else {
            None
        }
    }
    match (numeric(a), numeric(b)) {
        (Some(x), Some(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => a.cmp(b),
    }
}
