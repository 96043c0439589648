use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::{
    collapse_vertex, connected_sum, gbm, handle_add_renamed, handle_deletion, star_vertex,
    Bijection,
};
use crate::complex::{Complex, Face};
use crate::error::{Error, Result};

/// A move with all parameters needed to replay it. Handle moves carry a
/// rename table applied after the move, which makes delete/add round trips
/// exact on tokens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryRecord {
    Star { facet: Vec<String>, vertex: String },
    Collapse { vertex: String },
    HandleAdd { pairs: Vec<(String, String)>, rename: Vec<(String, String)> },
    HandleDelete { sphere: Vec<String>, rename: Vec<(String, String)> },
    ConnectedSum { other: Complex, pairs: Vec<(String, String)> },
    /// The balls are asserted, not proven, to be combinatorial balls.
    Gbm { remove: Complex, insert: Complex },
}

impl SurgeryRecord {
    pub fn kind(&self) -> &'static str {
        match self {
            SurgeryRecord::Star { .. } => "star",
            SurgeryRecord::Collapse { .. } => "collapse",
            SurgeryRecord::HandleAdd { .. } => "handle_add",
            SurgeryRecord::HandleDelete { .. } => "handle_delete",
            SurgeryRecord::ConnectedSum { .. } => "connected_sum",
            SurgeryRecord::Gbm { .. } => "gbm",
        }
    }

    pub fn replay(&self, c: &Complex) -> Result<Complex> {
        match self {
            SurgeryRecord::Star { facet, vertex } => star_vertex(c, &c.vertex_set(facet)?, vertex),
            SurgeryRecord::Collapse { vertex } => collapse_vertex(c, c.require_vertex(vertex)?),
            SurgeryRecord::HandleAdd { pairs, rename } => {
                handle_add_renamed(c, &Bijection::new(pairs.iter().map(|(a, b)| (a, b)))?, rename)
            }
            SurgeryRecord::HandleDelete { sphere, rename } => {
                let h = handle_deletion(c, &c.vertex_set(sphere)?)?;
                if rename.is_empty() {
                    Ok(h.complex)
                } else {
                    h.complex.relabel(&rename.iter().cloned().collect::<BTreeMap<_, _>>())
                }
            }
            SurgeryRecord::ConnectedSum { other, pairs } => {
                connected_sum(c, other, &Bijection::new(pairs.iter().map(|(a, b)| (a, b)))?)
            }
            SurgeryRecord::Gbm { remove, insert } => gbm(c, remove, insert),
        }
    }

    /// A record undoing `self` when applied to `self.replay(input)`.
    ///
    /// The inverse of a connected sum restores the disjoint union of the
    /// summands.
    pub fn inverse(&self, input: &Complex) -> Result<SurgeryRecord> {
        match self {
            SurgeryRecord::Star { vertex, .. } => Ok(SurgeryRecord::Collapse { vertex: vertex.clone() }),
            SurgeryRecord::Collapse { vertex } => {
                let v = input.require_vertex(vertex)?;
                let lk = input.vertex_link(v);
                Ok(SurgeryRecord::Star {
                    facet: lk.labels().to_owned(),
                    vertex: vertex.clone(),
                })
            }
            SurgeryRecord::Gbm { remove, insert } => Ok(SurgeryRecord::Gbm {
                remove: insert.clone(),
                insert: remove.clone(),
            }),
            SurgeryRecord::HandleDelete { sphere, rename } => {
                let r: BTreeMap<&str, &str> =
                    rename.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
                let renamed = |t: String| r.get(t.as_str()).map_or(t.clone(), |s| (*s).to_owned());
                let pairs = sphere
                    .iter()
                    .map(|w| {
                        (
                            renamed(alloc::format!("{w}{}", super::PLUS_SUFFIX)),
                            renamed(alloc::format!("{w}{}", super::MINUS_SUFFIX)),
                        )
                    })
                    .collect::<Vec<_>>();
                let rename = pairs.iter().zip(sphere).map(|((p, _), w)| (p.clone(), w.clone())).collect();
                Ok(SurgeryRecord::HandleAdd { pairs, rename })
            }
            SurgeryRecord::HandleAdd { pairs, rename } => {
                let r: BTreeMap<&str, &str> =
                    rename.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
                let seam: Vec<String> = pairs
                    .iter()
                    .map(|(a, _)| r.get(a.as_str()).map_or(a.clone(), |s| (*s).to_owned()))
                    .collect();
                restore_sides(&self.replay(input)?, input, seam, pairs)
            }
            SurgeryRecord::ConnectedSum { other, pairs } => {
                let union = input.disjoint_union(other)?;
                let seam = pairs.iter().map(|(a, _)| a.clone()).collect();
                restore_sides(&self.replay(input)?, &union, seam, pairs)
            }
        }
    }
}

/// Finds the handle deletion over `seam` in `after` whose sides, renamed to
/// the original tokens of `pairs`, give back `before`.
fn restore_sides(
    after: &Complex,
    before: &Complex,
    seam: Vec<String>,
    pairs: &[(String, String)],
) -> Result<SurgeryRecord> {
    let face: Face = after.vertex_set(&seam)?;
    let h = handle_deletion(after, &face)?;
    // Sides are listed in the seam's canonical order; match them to pairs.
    let by_seam: BTreeMap<&str, &(String, String)> = seam
        .iter()
        .map(String::as_str)
        .zip(pairs.iter())
        .collect();
    for swap in [false, true] {
        let rename: Vec<(String, String)> = face
            .iter()
            .zip(&h.sides)
            .flat_map(|(w, (p, m))| {
                let (a, b) = by_seam[after.label(w)];
                let (to_p, to_m) = if swap { (b, a) } else { (a, b) };
                [(p.clone(), to_p.clone()), (m.clone(), to_m.clone())]
            })
            .collect();
        let map: BTreeMap<String, String> = rename.iter().cloned().collect();
        if h.complex.relabel(&map)? == *before {
            return Ok(SurgeryRecord::HandleDelete { sphere: seam, rename });
        }
    }
    Err(Error::HypothesisViolated("handle deletion does not restore the input"))
}
