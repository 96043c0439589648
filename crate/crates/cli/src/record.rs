//! One-line s-expressions for surgery records:
//!
//! ```text
//! (star (facet 1 2 3) (vertex 9))
//! (collapse (vertex 9))
//! (handle-add (pairs (1 10) (2 11) (3 12)) (rename))
//! (handle-delete (sphere 1 2 3) (rename (1+ 1) (1- 10)))
//! (connected-sum (pairs (1 21) (2 22) (3 23)) (other (21 22 23) (21 22 24)))
//! (gbm (remove (1 2 3) (1 3 4)) (insert (1 2 4) (2 3 4)))
//! ```

use normpm::moves::SurgeryRecord;
use normpm::Complex;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

fn tokenize(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for ch in line.chars() {
        if ch == '(' || ch == ')' || ch.is_whitespace() {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            if !ch.is_whitespace() {
                out.push(ch.to_string());
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_sexp(line: &str) -> Result<Sexp, String> {
    let tokens = tokenize(line);
    let mut stack: Vec<Vec<Sexp>> = Vec::new();
    let mut done = None;
    for t in tokens {
        if done.is_some() {
            return Err("trailing input after the record".into());
        }
        match t.as_str() {
            "(" => stack.push(Vec::new()),
            ")" => {
                let list = stack.pop().ok_or("unbalanced `)`")?;
                match stack.last_mut() {
                    Some(parent) => parent.push(Sexp::List(list)),
                    None => done = Some(Sexp::List(list)),
                }
            }
            _ => stack.last_mut().ok_or("atom outside a list")?.push(Sexp::Atom(t)),
        }
    }
    done.ok_or_else(|| "unbalanced `(`".into())
}

fn atoms(items: &[Sexp]) -> Result<Vec<String>, String> {
    items
        .iter()
        .map(|s| match s {
            Sexp::Atom(a) => Ok(a.clone()),
            Sexp::List(_) => Err("expected a token".to_owned()),
        })
        .collect()
}

/// `(name item...)`, returning the items.
fn field<'a>(s: &'a Sexp, name: &str) -> Result<&'a [Sexp], String> {
    match s {
        Sexp::List(items) if matches!(items.first(), Some(Sexp::Atom(a)) if a == name) => Ok(&items[1..]),
        _ => Err(format!("expected `({name} ...)`")),
    }
}

fn pairs(items: &[Sexp]) -> Result<Vec<(String, String)>, String> {
    items
        .iter()
        .map(|s| match s {
            Sexp::List(p) => match atoms(p)?.as_slice() {
                [a, b] => Ok((a.clone(), b.clone())),
                _ => Err("expected a pair `(a b)`".to_owned()),
            },
            Sexp::Atom(_) => Err("expected a pair `(a b)`".to_owned()),
        })
        .collect()
}

fn complex(items: &[Sexp]) -> Result<Complex, String> {
    let facets = items
        .iter()
        .map(|s| match s {
            Sexp::List(f) => atoms(f),
            Sexp::Atom(_) => Err("expected a facet `(t ...)`".to_owned()),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Complex::from_facets(facets).map_err(|e| e.to_string())
}

fn parse_record(s: &Sexp) -> Result<SurgeryRecord, String> {
    let Sexp::List(items) = s else { return Err("expected a list".into()) };
    let (head, rest) = match items.split_first() {
        Some((Sexp::Atom(h), rest)) => (h.as_str(), rest),
        _ => return Err("expected a record kind".into()),
    };
    let two = |rest: &'_ [Sexp]| -> Result<(), String> {
        if rest.len() == 2 { Ok(()) } else { Err(format!("`{head}` takes two fields")) }
    };
    match head {
        "star" => {
            two(rest)?;
            let vertex = atoms(field(&rest[1], "vertex")?)?;
            let [vertex] = <[String; 1]>::try_from(vertex).map_err(|_| "one vertex expected")?;
            Ok(SurgeryRecord::Star { facet: atoms(field(&rest[0], "facet")?)?, vertex })
        }
        "collapse" => {
            let [f] = rest else { return Err("`collapse` takes one field".into()) };
            let vertex = atoms(field(f, "vertex")?)?;
            let [vertex] = <[String; 1]>::try_from(vertex).map_err(|_| "one vertex expected")?;
            Ok(SurgeryRecord::Collapse { vertex })
        }
        "handle-add" => {
            two(rest)?;
            Ok(SurgeryRecord::HandleAdd {
                pairs: pairs(field(&rest[0], "pairs")?)?,
                rename: pairs(field(&rest[1], "rename")?)?,
            })
        }
        "handle-delete" => {
            two(rest)?;
            Ok(SurgeryRecord::HandleDelete {
                sphere: atoms(field(&rest[0], "sphere")?)?,
                rename: pairs(field(&rest[1], "rename")?)?,
            })
        }
        "connected-sum" => {
            two(rest)?;
            Ok(SurgeryRecord::ConnectedSum {
                pairs: pairs(field(&rest[0], "pairs")?)?,
                other: complex(field(&rest[1], "other")?)?,
            })
        }
        "gbm" => {
            two(rest)?;
            Ok(SurgeryRecord::Gbm {
                remove: complex(field(&rest[0], "remove")?)?,
                insert: complex(field(&rest[1], "insert")?)?,
            })
        }
        other => Err(format!("unknown record kind `{other}`")),
    }
}

/// Parses a replay file: one record per line, `#` comments and blank lines
/// skipped.
pub fn parse(text: &str) -> Result<Vec<SurgeryRecord>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| parse_sexp(l).and_then(|s| parse_record(&s)).map_err(|m| CliError::syntax(i + 1, m)))
        .collect()
}

fn check_atom(t: &str) -> Result<&str, CliError> {
    if t.contains(['(', ')']) {
        return Err(CliError::Usage(format!("token {t:?} cannot be written to a record")));
    }
    Ok(t)
}

/// `(a b c)` with every atom checked.
fn group<S: AsRef<str>>(items: impl IntoIterator<Item = S>) -> Result<String, CliError> {
    let atoms = items
        .into_iter()
        .map(|t| check_atom(t.as_ref()).map(str::to_owned))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(format!("({})", atoms.join(" ")))
}

fn list<S: AsRef<str>>(name: &str, items: &[S]) -> Result<String, CliError> {
    group(std::iter::once(name).chain(items.iter().map(AsRef::as_ref)))
}

fn named(name: &str, items: Vec<String>) -> String {
    let mut s = format!("({name}");
    for i in items {
        s.push(' ');
        s.push_str(&i);
    }
    s.push(')');
    s
}

fn pair_list(name: &str, ps: &[(String, String)]) -> Result<String, CliError> {
    let items = ps.iter().map(|(a, b)| group([a, b])).collect::<Result<Vec<_>, _>>()?;
    Ok(named(name, items))
}

fn complex_list(name: &str, c: &Complex) -> Result<String, CliError> {
    let items = c.facet_tokens().into_iter().map(group).collect::<Result<Vec<_>, _>>()?;
    Ok(named(name, items))
}

pub fn write(r: &SurgeryRecord) -> Result<String, CliError> {
    Ok(match r {
        SurgeryRecord::Star { facet, vertex } => {
            format!("(star {} {})", list("facet", facet)?, list("vertex", &[vertex])?)
        }
        SurgeryRecord::Collapse { vertex } => format!("(collapse {})", list("vertex", &[vertex])?),
        SurgeryRecord::HandleAdd { pairs, rename } => {
            format!("(handle-add {} {})", pair_list("pairs", pairs)?, pair_list("rename", rename)?)
        }
        SurgeryRecord::HandleDelete { sphere, rename } => {
            format!("(handle-delete {} {})", list("sphere", sphere)?, pair_list("rename", rename)?)
        }
        SurgeryRecord::ConnectedSum { other, pairs } => {
            format!("(connected-sum {} {})", pair_list("pairs", pairs)?, complex_list("other", other)?)
        }
        SurgeryRecord::Gbm { remove, insert } => {
            format!("(gbm {} {})", complex_list("remove", remove)?, complex_list("insert", insert)?)
        }
    })
}
