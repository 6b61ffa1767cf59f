//! Graph surgeries that keep the rotation system when there is one.

use crate::connectivity::{fresh_edge_id, fresh_id};
use crate::graph::{dart, Dart, Edge, End, FeynmanGraph};
use crate::GraphError;

/// Attach a new looping edge at vertex `v`, returning the graph and the new
/// edge's index. Its two half-edges are placed next to each other at the end
/// of the cyclic order, so a new monogon face appears.
pub fn add_looping_edge(g: &FeynmanGraph, v: &str) -> Result<(FeynmanGraph, usize), GraphError> {
    let vi = g.vertex_index(v)?;
    let ids: Vec<String> = g.edges().iter().map(|e| e.id.clone()).collect();
    let id = fresh_edge_id(&ids, g.external().iter().map(|x| x.id.as_str()));
    let mut edges = g.edges().to_vec();
    let e = edges.len();
    edges.push(Edge { id, src: vi, dst: vi });
    let rotation = g.rotation().map(|r| {
        let mut order = r.order().to_vec();
        order[vi].push(dart(e, End::Src));
        order[vi].push(dart(e, End::Dst));
        order
    });
    let h = FeynmanGraph::from_parts(
        g.name().to_string(),
        g.vertices().to_vec(),
        edges,
        g.external().to_vec(),
        rotation,
    )?;
    Ok((h, e))
}

/// Delete every looping edge.
pub fn remove_looping_edges(g: &FeynmanGraph) -> FeynmanGraph {
    remove_edges(g, &g.looping_edges()).expect("removing looping edges keeps connectivity")
}

pub(crate) fn remove_edges(g: &FeynmanGraph, doomed: &[usize]) -> Result<FeynmanGraph, GraphError> {
    let mut new_index = vec![None; g.num_edges()];
    let mut edges = Vec::new();
    for (e, ed) in g.edges().iter().enumerate() {
        if !doomed.contains(&e) {
            new_index[e] = Some(edges.len());
            edges.push(ed.clone());
        }
    }
    let remap = |d: Dart| new_index[d / 2].map(|e| 2 * e + d % 2);
    let rotation = g
        .rotation()
        .map(|r| r.order().iter().map(|c| c.iter().filter_map(|&d| remap(d)).collect()).collect());
    FeynmanGraph::from_parts(
        g.name().to_string(),
        g.vertices().to_vec(),
        edges,
        g.external().to_vec(),
        rotation,
    )
}

/// Insert a valence-two vertex on edge `id`. The halves are `id'` (from the
/// old source) and `id''` (to the old target); `id'` keeps the old position
/// in the edge list and `id''` goes last.
pub fn subdivide_edge(g: &FeynmanGraph, id: &str) -> Result<FeynmanGraph, GraphError> {
    let e = g.edge_index(id)?;
    let old = g.edge(e).clone();
    let mut vertices = g.vertices().to_vec();
    let w = vertices.len();
    vertices.push(fresh_id(&vertices, &format!("m{id}")));
    let ids: Vec<String> = g.edges().iter().map(|x| x.id.clone()).collect();
    let first = fresh_id(&ids, &format!("{id}'"));
    let second = fresh_id(&ids, &format!("{first}'"));
    let mut edges = g.edges().to_vec();
    edges[e] = Edge { id: first, src: old.src, dst: w };
    let e2 = edges.len();
    edges.push(Edge { id: second, src: w, dst: old.dst });
    let rotation = g.rotation().map(|r| {
        let mut order: Vec<Vec<Dart>> = r
            .order()
            .iter()
            .map(|c| c.iter().map(|&d| if d == dart(e, End::Dst) { dart(e2, End::Dst) } else { d }).collect())
            .collect();
        order.push(vec![dart(e, End::Dst), dart(e2, End::Src)]);
        order
    });
    FeynmanGraph::from_parts(g.name().to_string(), vertices, edges, g.external().to_vec(), rotation)
}
