//! The path calculus: components of a rewritten cocore, enumerated as
//! paths through the word instead of by rewriting.
//!
//! A trace records where a component came from: starting at the source
//! vertex, each spawn event either stays put (constant loop) or moves to a
//! neighbor (directed edge), and happens at the first later occurrence of
//! the current vertex in the word. A component is present in the final
//! complex iff its vertex never occurs in the word after its creation, so
//! enumeration is a forward simulation of spawn events. This module
//! computes no shifts during enumeration; [`shift_of_trace`] recovers them
//! from the path and the word alone, which makes the pair an independent
//! oracle for the rewriting route.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::plumbing::{PlumbingSpec, Vertex};
use crate::shift::ShiftExpr;
use crate::word::{PennerPolarity, Sign, TwistWord};

/// A spawn path in creation order: `vertices[0]` is the source, and
/// `indices[i]` is the 1-based word position that spawned
/// `vertices[i + 1]` out of `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracePath {
    vertices: Vec<Vertex>,
    indices: Vec<usize>,
}

impl TracePath {
    pub fn new(vertices: Vec<Vertex>, indices: Vec<usize>) -> TracePath {
        TracePath { vertices, indices }
    }

    /// Vertices in creation order (source first).
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Spawn positions, strictly increasing, 1-based.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The vertex of the resulting component.
    pub fn terminal(&self) -> Vertex {
        *self.vertices.last().expect("paths are nonempty")
    }

    /// Number of vertices; at least 1 by construction.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Display form with the terminal vertex first, e.g. `[2,3,2,3]`.
    pub fn display_paper(&self, spec: &PlumbingSpec) -> String {
        let names: Vec<&str> = self
            .vertices
            .iter()
            .rev()
            .map(|&v| spec.name(v))
            .collect();
        format!("[{}]", names.join(","))
    }
}

/// All spawn paths of `word^m` starting from `source`, in the same order
/// the rewriting route emits its terms. If the source vertex never occurs
/// in the word, the single length-1 path `[source]` is returned.
pub fn enumerate_traces(
    word: &TwistWord,
    m: u32,
    source: Vertex,
    spec: &PlumbingSpec,
) -> Result<Vec<TracePath>, Error> {
    spec.check_vertex(source)?;
    let mut live = alloc::vec![TracePath {
        vertices: alloc::vec![source],
        indices: Vec::new(),
    }];
    let mut position = 0usize;
    for _ in 0..m {
        for letter in word.letters() {
            spec.check_vertex(letter.vertex)?;
            position += 1;
            let u = letter.vertex;
            // Descendant vertices ascending, matching the rewriting order.
            let mut descendants: Vec<Vertex> = spec.tree().neighbors(u).collect();
            descendants.push(u);
            descendants.sort();
            let mut next = Vec::with_capacity(live.len());
            for path in &live {
                if path.terminal() != u {
                    next.push(path.clone());
                    continue;
                }
                for &x in &descendants {
                    let mut vertices = path.vertices.clone();
                    let mut indices = path.indices.clone();
                    vertices.push(x);
                    indices.push(position);
                    next.push(TracePath { vertices, indices });
                }
            }
            live = next;
        }
    }
    Ok(live)
}

fn step_increment(
    spec: &PlumbingSpec,
    from: Vertex,
    to: Vertex,
    sign: Sign,
) -> Result<ShiftExpr, Error> {
    if from == to {
        return Ok(match sign {
            Sign::Pos => ShiftExpr::new(1, -1),
            Sign::Neg => ShiftExpr::new(-1, 1),
        });
    }
    let s = spec.s(from, to).ok_or_else(|| {
        Error::InconsistentTrace(format!(
            "step {} -> {} is neither a loop nor an edge",
            spec.name(from),
            spec.name(to)
        ))
    })?;
    Ok(match sign {
        Sign::Pos => ShiftExpr::new(1, -1) + s,
        Sign::Neg => s + ShiftExpr::new(-1, 0),
    })
}

/// The shift of the component a trace describes, summed step by step from
/// the signs of the letters at the spawn positions. `expanded` must be the
/// word the trace was enumerated against (already repeated if `m > 1`).
pub fn shift_of_trace(
    trace: &TracePath,
    expanded: &TwistWord,
    spec: &PlumbingSpec,
) -> Result<ShiftExpr, Error> {
    if trace.vertices.is_empty() {
        return Err(Error::InconsistentTrace("empty vertex list".into()));
    }
    if trace.indices.len() + 1 != trace.vertices.len() {
        return Err(Error::InconsistentTrace(format!(
            "{} vertices need {} spawn indices, got {}",
            trace.vertices.len(),
            trace.vertices.len() - 1,
            trace.indices.len()
        )));
    }
    let mut shift = ShiftExpr::ZERO;
    let mut last_index = 0usize;
    for (i, &index) in trace.indices.iter().enumerate() {
        if index <= last_index || index > expanded.len() {
            return Err(Error::InconsistentTrace(format!(
                "spawn position {index} out of order or out of range"
            )));
        }
        last_index = index;
        let letter = expanded.letters()[index - 1];
        let from = trace.vertices[i];
        let to = trace.vertices[i + 1];
        if letter.vertex != from {
            return Err(Error::InconsistentTrace(format!(
                "letter at position {index} twists {}, not {}",
                spec.name(letter.vertex),
                spec.name(from)
            )));
        }
        shift += step_increment(spec, from, to, letter.sign)?;
    }
    Ok(shift)
}

/// The baseline shift `c_vw`: the sum of edge-step increments along the
/// unique tree path from `v` to `w`, with each step signed by the
/// standard-polarity Penner sign of its start vertex. Every `L_w` component
/// of a rewritten `L_v` has shift congruent to this mod `n - 1` (for
/// standard-polarity words).
pub fn geometric_shift(spec: &PlumbingSpec, v: Vertex, w: Vertex) -> Result<ShiftExpr, Error> {
    geometric_shift_with_polarity(spec, v, w, PennerPolarity::Standard)
}

/// Same as [`geometric_shift`] with the signs globally flipped; this is the
/// baseline matching inverted-polarity words.
pub fn geometric_shift_with_polarity(
    spec: &PlumbingSpec,
    v: Vertex,
    w: Vertex,
    polarity: PennerPolarity,
) -> Result<ShiftExpr, Error> {
    let path = spec.geometric_path(v, w)?;
    let mut shift = ShiftExpr::ZERO;
    for pair in path.windows(2) {
        let mut sign = spec.bipartition().sign_of(pair[0]);
        if polarity == PennerPolarity::Inverted {
            sign = sign.flip();
        }
        shift += step_increment(spec, pair[0], pair[1], sign)?;
    }
    Ok(shift)
}
