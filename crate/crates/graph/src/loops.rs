//! Cycle bases: internal face boundaries of an embedding, completed by
//! fundamental cycles of a spanning tree when needed.

use detloci_algebra::RatMatrix;
use serde::Serialize;

use crate::embedding::FaceSet;
use crate::graph::{FeynmanGraph, UnionFind};
use crate::GraphError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BasisSource {
    /// The first `face_loops` columns are the internal faces, listed in face
    /// order with `external_face` skipped.
    Faces {
        external_face: usize,
        face_loops: usize,
        genus: usize,
    },
    Tree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopBasis {
    /// `eta[e][k]`: incidence of edge `e` in loop `k`, in `{-1, 0, 1}`.
    pub eta: Vec<Vec<i64>>,
    pub source: BasisSource,
}

impl LoopBasis {
    pub fn loops(&self) -> usize {
        self.eta.first().map_or(0, Vec::len)
    }

    pub fn column(&self, k: usize) -> Vec<i64> {
        self.eta.iter().map(|row| row[k]).collect()
    }

    /// Edge indices on loop `k`.
    pub fn support(&self, k: usize) -> Vec<usize> {
        (0..self.eta.len()).filter(|&e| self.eta[e][k] != 0).collect()
    }

    /// Number of leading columns that come from faces.
    pub fn face_loops(&self) -> usize {
        match self.source {
            BasisSource::Faces { face_loops, .. } => face_loops,
            BasisSource::Tree => 0,
        }
    }
}

/// Loop basis from `fs` when given (external face defaulting to the last
/// one), otherwise the fundamental cycles of the first spanning tree found by
/// scanning edges in order.
pub fn loop_basis(
    g: &FeynmanGraph,
    fs: Option<&FaceSet>,
    external_face: Option<usize>,
) -> Result<LoopBasis, GraphError> {
    let n = g.num_edges();
    let ell = g.loops();
    let Some(fs) = fs else {
        let cols = fundamental_cycles(g);
        return finish(n, ell, cols, BasisSource::Tree);
    };
    if fs.is_empty() {
        return Err(GraphError::Invalid("an embedding has at least one face".into()));
    }
    let ext = external_face.unwrap_or(fs.len() - 1);
    if ext >= fs.len() {
        return Err(GraphError::Invalid(format!("external face {ext} out of range ({} faces)", fs.len())));
    }
    if ell != 2 * fs.genus + fs.len() - 1 {
        return Err(GraphError::Invalid(format!(
            "face set does not belong to this graph: ℓ = {ell}, 2g + f - 1 = {}",
            2 * fs.genus + fs.len() - 1
        )));
    }
    let mut cols: Vec<Vec<i64>> =
        (0..fs.len()).filter(|&k| k != ext).map(|k| fs.faces[k].cycle_vector(n)).collect();
    let face_loops = cols.len();
    if fs.genus > 0 {
        let mut rank = rank_of(n, &cols);
        for c in fundamental_cycles(g) {
            if rank == ell {
                break;
            }
            cols.push(c);
            let r = rank_of(n, &cols);
            if r > rank {
                rank = r;
            } else {
                cols.pop();
            }
        }
    }
    finish(n, ell, cols, BasisSource::Faces { external_face: ext, face_loops, genus: fs.genus })
}

fn finish(n: usize, ell: usize, cols: Vec<Vec<i64>>, source: BasisSource) -> Result<LoopBasis, GraphError> {
    if cols.len() != ell || rank_of(n, &cols) != ell {
        return Err(GraphError::Internal(format!("loop basis has rank {} but ℓ = {ell}", rank_of(n, &cols))));
    }
    if cols.iter().flatten().any(|x| x.abs() > 1) {
        return Err(GraphError::Internal("loop incidence outside {-1, 0, 1}".into()));
    }
    let eta = (0..n).map(|e| cols.iter().map(|c| c[e]).collect()).collect();
    Ok(LoopBasis { eta, source })
}

fn rank_of(n: usize, cols: &[Vec<i64>]) -> usize {
    RatMatrix::from_i64_rows(n, cols).expect("columns have length n").rank()
}

/// One signed cycle per non-tree edge, traversing that edge forwards.
pub fn fundamental_cycles(g: &FeynmanGraph) -> Vec<Vec<i64>> {
    let n = g.num_edges();
    let m = g.num_vertices();
    let mut uf = UnionFind::new(m);
    let mut in_tree = vec![false; n];
    for (e, ed) in g.edges().iter().enumerate() {
        if uf.union(ed.src, ed.dst) {
            in_tree[e] = true;
        }
    }
    // Tree adjacency: (neighbor, edge, sign of traversal towards neighbor).
    let mut adj: Vec<Vec<(usize, usize, i64)>> = vec![vec![]; m];
    for (e, ed) in g.edges().iter().enumerate() {
        if in_tree[e] {
            adj[ed.src].push((ed.dst, e, 1));
            adj[ed.dst].push((ed.src, e, -1));
        }
    }
    let path = |from: usize, to: usize| -> Vec<(usize, i64)> {
        // Depth-first search in the tree.
        let mut prev: Vec<Option<(usize, usize, i64)>> = vec![None; m];
        let mut seen = vec![false; m];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(u) = stack.pop() {
            for &(w, e, s) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((u, e, s));
                    stack.push(w);
                }
            }
        }
        let mut steps = vec![];
        let mut cur = to;
        while cur != from {
            let (u, e, s) = prev[cur].expect("tree spans the graph");
            steps.push((e, s));
            cur = u;
        }
        steps.reverse();
        steps
    };
    (0..n)
        .filter(|&e| !in_tree[e])
        .map(|e| {
            let ed = g.edge(e);
            let mut c = vec![0i64; n];
            c[e] = 1;
            for (te, s) in path(ed.dst, ed.src) {
                c[te] += s;
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::embedding::faces;

    #[test]
    fn banana_has_one_cycle() {
        let b = loop_basis(&corpus::banana2(), None, None).unwrap();
        let c = b.column(0);
        assert!(c == vec![1, -1] || c == vec![-1, 1]);
    }

    #[test]
    fn face_basis_of_a_torus_graph_is_completed() {
        let g = corpus::k5();
        let fs = faces(&g).unwrap();
        let b = loop_basis(&g, Some(&fs), None).unwrap();
        assert_eq!(b.loops(), 6);
        assert_eq!(b.face_loops(), fs.len() - 1);
    }

    #[test]
    fn wrong_external_face_is_rejected() {
        let g = corpus::tetrahedron();
        let fs = faces(&g).unwrap();
        assert!(loop_basis(&g, Some(&fs), Some(4)).is_err());
        assert!(loop_basis(&g, Some(&fs), Some(0)).is_ok());
    }
}
