//! Edge and vertex connectivity by exhaustive removal, and vertex splittings.

use serde::Serialize;

use crate::graph::{count_components, dart_edge, dart_end, Edge, End, FeynmanGraph};
use crate::GraphError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    /// 2-edge-connected.
    pub is_1pi: bool,
    pub is_2_vertex: bool,
    pub is_3_edge: bool,
    pub is_3_vertex: bool,
}

pub fn connectivity_report(g: &FeynmanGraph) -> ConnectivityReport {
    let n_v = g.num_vertices();
    let loops = g.has_looping_edges();
    ConnectivityReport {
        is_1pi: edge_connected(g, 2),
        is_2_vertex: !loops && n_v >= 3 && survives_vertex_removal(g, 1),
        is_3_edge: edge_connected(g, 3),
        is_3_vertex: !loops && !g.has_multiple_edges() && n_v >= 4 && survives_vertex_removal(g, 2),
    }
}

/// No set of at most `k − 1` internal edges disconnects the graph.
pub fn edge_connected(g: &FeynmanGraph, k: usize) -> bool {
    let n = g.num_edges();
    subsets_up_to(n, k - 1).all(|removed| {
        let kept = (0..n).filter(|e| !removed.contains(e)).map(|e| (g.edge(e).src, g.edge(e).dst));
        count_components(g.num_vertices(), kept) == 1
    })
}

/// Removing any set of at most `k` vertices (with their stars) leaves the
/// rest connected.
fn survives_vertex_removal(g: &FeynmanGraph, k: usize) -> bool {
    let m = g.num_vertices();
    subsets_up_to(m, k).all(|removed| {
        let alive: Vec<usize> = (0..m).filter(|v| !removed.contains(v)).collect();
        if alive.is_empty() {
            return true;
        }
        let pos = |v: usize| alive.iter().position(|&w| w == v);
        let kept = g.edges().iter().filter_map(|e| Some((pos(e.src)?, pos(e.dst)?)));
        count_components(alive.len(), kept) == 1
    })
}

fn subsets_up_to(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..=k.min(n)).flat_map(move |size| combinations(n, size))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    rec(0, n, k, &mut vec![], &mut out);
    out
}

/// One graph per unordered partition of the half-edges at `v` into two
/// nonempty parts. The part holding the first half-edge stays on `v`; the
/// other moves to a new vertex `v'`, joined to `v` by a new edge. External
/// legs stay on `v`. Results carry no rotation system.
pub fn vertex_splittings(g: &FeynmanGraph, v: usize) -> Result<Vec<FeynmanGraph>, GraphError> {
    let darts = g.darts_at(v);
    let d = darts.len();
    if d < 2 {
        return Err(GraphError::Invalid(format!(
            "vertex {:?} has degree {d}; splitting needs at least 2",
            g.vertices()[v]
        )));
    }
    let new_vertex = fresh_id(g.vertices(), &format!("{}'", g.vertices()[v]));
    let edge_ids: Vec<String> = g.edges().iter().map(|e| e.id.clone()).collect();
    let new_edge = fresh_edge_id(&edge_ids, g.external().iter().map(|x| x.id.as_str()));
    let mut out = Vec::new();
    // Masks over darts[1..]; the chosen bits move to the new vertex.
    for mask in 1u64..(1u64 << (d - 1)) {
        let mut vertices = g.vertices().to_vec();
        vertices.push(new_vertex.clone());
        let w = vertices.len() - 1;
        let mut edges: Vec<Edge> = g.edges().to_vec();
        for (k, &dt) in darts.iter().enumerate().skip(1) {
            if mask & (1 << (k - 1)) != 0 {
                let e = &mut edges[dart_edge(dt)];
                match dart_end(dt) {
                    End::Src => e.src = w,
                    End::Dst => e.dst = w,
                }
            }
        }
        edges.push(Edge { id: new_edge.clone(), src: v, dst: w });
        let name = format!("{}/split({},{mask})", g.name(), g.vertices()[v]);
        out.push(FeynmanGraph::from_parts(name, vertices, edges, g.external().to_vec(), None)?);
    }
    Ok(out)
}

pub(crate) fn fresh_id(existing: &[String], base: &str) -> String {
    let mut id = base.to_string();
    while existing.iter().any(|x| x == &id) {
        id.push('\'');
    }
    id
}

/// Smallest positive integer id not in use.
pub(crate) fn fresh_edge_id<'a>(existing: &'a [String], more: impl Iterator<Item = &'a str>) -> String {
    let taken: Vec<&str> = existing.iter().map(String::as_str).chain(more).collect();
    (1..).map(|k: usize| k.to_string()).find(|s| !taken.contains(&s.as_str())).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn reports_on_the_basic_graphs() {
        let all = ConnectivityReport { is_1pi: true, is_2_vertex: true, is_3_edge: true, is_3_vertex: true };
        assert_eq!(connectivity_report(&corpus::tetrahedron()), all);
        let b = connectivity_report(&corpus::banana2());
        assert!(b.is_1pi && !b.is_2_vertex);
        assert!(!connectivity_report(&corpus::dumbbell()).is_1pi);
    }

    #[test]
    fn splitting_counts() {
        let tri = corpus::triangle();
        assert_eq!(vertex_splittings(&tri, 0).unwrap().len(), 1);
        let k5 = corpus::k5();
        let s = vertex_splittings(&k5, 0).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.iter().all(|h| h.num_edges() == 11 && h.num_vertices() == 6));
        assert!(vertex_splittings(&corpus::loop_bridge(), 0).is_err());
    }
}
