//! Stack scripts:
//!
//! ```text
//! stack d=3 seed=42
//! facet 1 2 3 4 new 6
//! random new 7
//! ```

use normpm::stacked::{Selector, StackScript, StackStep};

use crate::error::CliError;

pub fn parse(text: &str) -> Result<StackScript, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (n, header) = lines.next().ok_or_else(|| CliError::syntax(1, "empty stack script"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("stack") {
        return Err(CliError::syntax(n, "expected `stack d=<d> seed=<seed|none>`"));
    }
    let (mut d, mut seed) = (None, None);
    for w in words {
        match w.split_once('=') {
            Some(("d", v)) => d = Some(v.parse::<i32>().map_err(|_| CliError::syntax(n, "bad d"))?),
            Some(("seed", "none")) => seed = Some(None),
            Some(("seed", v)) => {
                seed = Some(Some(v.parse::<u64>().map_err(|_| CliError::syntax(n, "bad seed"))?))
            }
            _ => return Err(CliError::syntax(n, format!("unexpected `{w}`"))),
        }
    }
    let d = d.ok_or_else(|| CliError::syntax(n, "missing d="))?;
    let seed = seed.ok_or_else(|| CliError::syntax(n, "missing seed="))?;

    let mut steps = Vec::new();
    for (n, line) in lines {
        let words: Vec<&str> = line.split_whitespace().collect();
        let step = match words.as_slice() {
            ["random", "new", v] => StackStep { selector: Selector::Random, vertex: (*v).to_owned() },
            ["facet", rest @ .., "new", v] if !rest.is_empty() => StackStep {
                selector: Selector::Facet(rest.iter().map(|t| (*t).to_owned()).collect()),
                vertex: (*v).to_owned(),
            },
            _ => return Err(CliError::syntax(n, "expected `facet <tokens> new <token>` or `random new <token>`")),
        };
        steps.push(step);
    }
    Ok(StackScript { d, seed, steps })
}

pub fn write(s: &StackScript) -> String {
    let seed = s.seed.map_or_else(|| "none".to_owned(), |x| x.to_string());
    let mut out = format!("stack d={} seed={seed}\n", s.d);
    for step in &s.steps {
        match &step.selector {
            Selector::Random => out.push_str(&format!("random new {}\n", step.vertex)),
            Selector::Facet(f) => out.push_str(&format!("facet {} new {}\n", f.join(" "), step.vertex)),
        }
    }
    out
}
