//! Instance sources: seeded random matrices, the maximum-clique reduction
//! and the text formats.
//!
//! # Instance text format
//!
//! Line 1 is `p q` (decimal, space separated); then `p` lines of exactly
//! `q` characters from `{0, 1}`, newline terminated, no trailing
//! whitespace.
//!
//! # Graph text format
//!
//! DIMACS-style edge lists: comment lines starting with `c`, one header
//! `p edge <vertices> <edges>`, then one `e <u> <v>` line per edge with
//! 1-based endpoints. Self-loops and duplicate edges are rejected.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use rand::distributions::{Bernoulli, Distribution};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{InstanceError, ParseError};
use crate::matrix::BinaryMatrix;

/// Identity of the pseudo-random stream behind [`random_instance`],
/// recorded in provenance so a `(p, q, r, seed)` quadruple pins the
/// instance bytes.
pub const GENERATOR_ID: &str = "chacha8";

/// A simple undirected graph with 1-based vertices and no self-loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Panics when `vertex_count` is zero.
    pub fn new(vertex_count: usize) -> Self {
        assert!(vertex_count >= 1, "graph needs at least one vertex");
        Self {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Adds the undirected edge `{u, v}`; returns whether it was new.
    /// Panics on self-loops or endpoints out of range, which parsing
    /// reports as errors before calling this.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop");
        assert!(
            (1..=self.vertex_count).contains(&u) && (1..=self.vertex_count).contains(&v),
            "vertex out of range"
        );
        self.edges.insert((u.min(v), u.max(v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }
}

/// A `p x q` matrix with each entry independently one with probability
/// `probability`, driven by a seeded deterministic stream: the same
/// `(p, q, probability, seed)` always reproduces the same matrix.
pub fn random_instance(
    lines: usize,
    columns: usize,
    probability: f64,
    seed: u64,
) -> Result<BinaryMatrix, InstanceError> {
    if !(0.0..=1.0).contains(&probability) {
        return Err(InstanceError::InvalidProbability(probability));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coin = Bernoulli::new(probability).expect("probability checked");
    let mut matrix = BinaryMatrix::zeros(lines, columns);
    for i in 0..lines {
        for j in 0..columns {
            if coin.sample(&mut rng) {
                matrix.set(i, j, true);
            }
        }
    }
    Ok(matrix)
}

/// The clique-reduction instance built from a graph: a square matrix of
/// side `4|V| + 6` whose only valid single contractions are one line and
/// one column per vertex, plus the base density the construction starts
/// from. The optimal density exceeds `base_density` by exactly the size of
/// a maximum clique.
#[derive(Clone, Debug)]
pub struct ReductionLayout {
    pub matrix: BinaryMatrix,
    /// Per vertex, the contraction index of its gadget line (0-based).
    pub gadget_lines: Vec<usize>,
    pub gadget_columns: Vec<usize>,
    /// Density of the fresh matrix: `11 + 6|V| + (|V|(|V|-1) - 2|E|)`.
    pub base_density: u64,
}

/// Builds the reduction instance for `graph`.
///
/// Per vertex `k` (0-based) the gadget occupies lines and columns
/// `6 + 4k .. 6 + 4k + 4`. The matrix holds: a border hook of ones along
/// the first line and first column (`(0, 0..6)` and `(0..6, 0)`); per
/// vertex a left-border block, its transpose along the top, and the two
/// diagonal ones `(l, l)`, `(l + 2, l + 2)`; and for every non-adjacent
/// ordered pair a blocker pair `(l_i, c_j)`, `(l_i + 1, c_j + 1)`.
/// Contracting a vertex's line and column moves its diagonal ones next to
/// each other (+1 density); the blocker pairs of a non-edge collapse onto
/// one line or column as soon as one endpoint is contracted, locking the
/// other endpoint out. The border blocks pin every non-gadget line and
/// column in place.
pub fn from_clique(graph: &Graph) -> ReductionLayout {
    let v = graph.vertex_count();
    let dim = 4 * v + 6;
    let mut matrix = BinaryMatrix::zeros(dim, dim);
    let mut set = |i: usize, j: usize| matrix.set(i, j, true);

    for k in 0..6 {
        set(0, k);
        set(k, 0);
    }
    for k in 0..v {
        let l = 6 + 4 * k;
        // Left border block and its transpose on top.
        set(l, 0);
        set(l + 1, 2);
        set(l + 2, 2);
        set(l + 2, 4);
        set(l + 3, 4);
        set(l + 3, 0);
        set(0, l);
        set(2, l + 1);
        set(2, l + 2);
        set(4, l + 2);
        set(4, l + 3);
        set(0, l + 3);
        // The vertex's own pair of ones.
        set(l, l);
        set(l + 2, l + 2);
    }
    for i in 0..v {
        for j in 0..v {
            if i != j && !graph.has_edge(i + 1, j + 1) {
                let (li, cj) = (6 + 4 * i, 6 + 4 * j);
                set(li, cj);
                set(li + 1, cj + 1);
            }
        }
    }

    let gadget: Vec<usize> = (0..v).map(|k| 6 + 4 * k).collect();
    let e = graph.edge_count() as u64;
    let v64 = v as u64;
    let base_density = 11 + 6 * v64 + (v64 * (v64 - 1) - 2 * e);
    ReductionLayout {
        matrix,
        gadget_lines: gadget.clone(),
        gadget_columns: gadget,
        base_density,
    }
}

/// Certifies a freshly built layout: the singly-valid line contractions
/// are exactly the gadget lines, the columns likewise, and the matrix
/// density equals the base density. Run after every build; the border
/// pattern is extrapolated per vertex, and this check is what pins it
/// down.
pub fn verify_reduction_gadget(layout: &ReductionLayout) -> bool {
    let m = &layout.matrix;
    let dim = m.line_count();
    let lines: Vec<usize> = (0..dim - 1)
        .filter(|&i| m.single_line_valid(i).unwrap())
        .collect();
    let columns: Vec<usize> = (0..dim - 1)
        .filter(|&j| m.single_column_valid(j).unwrap())
        .collect();
    lines == layout.gadget_lines
        && columns == layout.gadget_columns
        && m.density() == layout.base_density
}

/// Parses the instance text format; see the module docs.
pub fn parse_instance(text: &str) -> Result<BinaryMatrix, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(ParseError::BadHeader { line: 1 })?;
    let mut parts = header.split(' ');
    let p: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .filter(|&v| v >= 1)
        .ok_or(ParseError::BadHeader { line: 1 })?;
    let q: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .filter(|&v| v >= 1)
        .ok_or(ParseError::BadHeader { line: 1 })?;
    if parts.next().is_some() {
        return Err(ParseError::BadHeader { line: 1 });
    }

    let mut matrix = BinaryMatrix::zeros(p, q);
    for i in 0..p {
        let (idx, row) = lines.next().ok_or(ParseError::Truncated {
            line: i + 1,
            expected: p,
        })?;
        if row.len() != q {
            return Err(ParseError::DimensionMismatch {
                line: idx + 1,
                expected: q,
                found: row.len(),
            });
        }
        for (j, ch) in row.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => matrix.set(i, j, true),
                _ => {
                    return Err(ParseError::IllegalCharacter {
                        line: idx + 1,
                        column: j + 1,
                        found: ch,
                    })
                }
            }
        }
    }
    if let Some((idx, rest)) = lines.next() {
        if !rest.is_empty() || lines.next().is_some() {
            return Err(ParseError::TrailingContent { line: idx + 1 });
        }
    }
    Ok(matrix)
}

/// Serializes to the instance text format; `parse_instance` round-trips it.
pub fn serialize_instance(matrix: &BinaryMatrix) -> String {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    let mut out = String::with_capacity((q + 1) * (p + 1) + 8);
    out.push_str(&alloc::format!("{p} {q}\n"));
    for i in 0..p {
        for j in 0..q {
            out.push(if matrix.get(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// Parses the DIMACS-style graph format; see the module docs.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut declared = 0usize;
    let mut found = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim_end();
        if content.is_empty() || content.starts_with('c') {
            continue;
        }
        let mut parts = content.split_ascii_whitespace();
        match parts.next() {
            Some("p") => {
                if graph.is_some() || parts.next() != Some("edge") {
                    return Err(ParseError::BadGraphHeader { line });
                }
                let vertices: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .filter(|&v| v >= 1)
                    .ok_or(ParseError::BadGraphHeader { line })?;
                declared = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or(ParseError::BadGraphHeader { line })?;
                if parts.next().is_some() {
                    return Err(ParseError::BadGraphHeader { line });
                }
                graph = Some(Graph::new(vertices));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or(ParseError::BadGraphHeader { line })?;
                let u: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or(ParseError::BadEdge { line })?;
                let v: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or(ParseError::BadEdge { line })?;
                if parts.next().is_some() {
                    return Err(ParseError::BadEdge { line });
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                for vertex in [u, v] {
                    if !(1..=g.vertex_count()).contains(&vertex) {
                        return Err(ParseError::VertexOutOfRange {
                            line,
                            vertex,
                            vertices: g.vertex_count(),
                        });
                    }
                }
                if !g.add_edge(u, v) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
                found += 1;
            }
            _ => return Err(ParseError::BadEdge { line }),
        }
    }
    let graph = graph.ok_or(ParseError::BadGraphHeader { line: 1 })?;
    if declared != found {
        return Err(ParseError::EdgeCountMismatch { declared, found });
    }
    Ok(graph)
}
