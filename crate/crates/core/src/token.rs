use core::cmp::Ordering;

/// True for non-empty ASCII digit strings.
pub fn is_decimal_token(t: &str) -> bool {
    !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
}

fn numeric_cmp(a: &str, b: &str) -> Ordering {
    let a_trim = a.trim_start_matches('0');
    let b_trim = b.trim_start_matches('0');
    a_trim
        .len()
        .cmp(&b_trim.len())
        .then_with(|| a_trim.cmp(b_trim))
        .then_with(|| a.cmp(b))
}

/// Canonical order on a token collection: numeric if `numeric` (every token
/// decimal), plain byte-lexicographic otherwise.
pub(crate) fn token_cmp(numeric: bool, a: &str, b: &str) -> Ordering {
    if numeric {
        numeric_cmp(a, b)
    } else {
        a.cmp(b)
    }
}

/// Sorts `tokens` in canonical order for that collection.
pub fn canonical_token_cmp<'a, I>(tokens: I) -> impl Fn(&str, &str) -> Ordering
where
    I: IntoIterator<Item = &'a str>,
{
    let numeric = tokens.into_iter().all(is_decimal_token);
    move |a, b| token_cmp(numeric, a, b)
}

pub(crate) fn valid_token(t: &str) -> bool {
    !t.is_empty() && !t.chars().any(char::is_whitespace) && !t.starts_with('#')
}
