//! Feynman multigraphs with oriented internal edges, external legs and an
//! optional rotation system.

use std::collections::{BTreeMap, HashMap};

use detloci_algebra::{parse_rational, BigRational};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::GraphError;

/// Which end of an internal edge a half-edge sits at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Src,
    Dst,
}

/// Half-edge index: `2e` is the source end of edge `e`, `2e + 1` its target
/// end. Read as a directed edge, a dart points away from the vertex it sits at.
pub type Dart = usize;

pub fn dart(edge: usize, end: End) -> Dart {
    2 * edge + usize::from(end == End::Dst)
}

pub fn dart_edge(d: Dart) -> usize {
    d / 2
}

pub fn dart_end(d: Dart) -> End {
    if d.is_multiple_of(2) {
        End::Src
    } else {
        End::Dst
    }
}

/// The other half of the same edge.
pub fn opposite(d: Dart) -> Dart {
    d ^ 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: usize,
    pub dst: usize,
}

impl Edge {
    pub fn is_looping(&self) -> bool {
        self.src == self.dst
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExternalLeg {
    pub id: String,
    pub at: usize,
    pub momentum: Option<Vec<BigRational>>,
}

/// Cyclic order of darts around each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<Dart>>,
    succ: Vec<Dart>,
}

impl RotationSystem {
    pub fn order(&self) -> &[Vec<Dart>] {
        &self.order
    }

    pub fn at(&self, v: usize) -> &[Dart] {
        &self.order[v]
    }

    /// Successor of `d` in the cyclic order at its vertex.
    pub fn next(&self, d: Dart) -> Dart {
        self.succ[d]
    }

    /// Builds the successor table. Incidence is checked by the graph.
    fn from_order(order: Vec<Vec<Dart>>, num_darts: usize) -> Result<Self, GraphError> {
        let mut succ = vec![usize::MAX; num_darts];
        for cycle in &order {
            for (k, &d) in cycle.iter().enumerate() {
                if d >= num_darts {
                    return Err(GraphError::Rotation(format!("dart {d} out of range")));
                }
                if succ[d] != usize::MAX {
                    return Err(GraphError::Rotation(format!("half-edge {d} listed twice")));
                }
                succ[d] = cycle[(k + 1) % cycle.len()];
            }
        }
        if let Some(d) = succ.iter().position(|&s| s == usize::MAX) {
            return Err(GraphError::Rotation(format!("half-edge {d} missing")));
        }
        Ok(RotationSystem { order, succ })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeynmanGraph {
    name: String,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    external: Vec<ExternalLeg>,
    rotation: Option<RotationSystem>,
}

impl FeynmanGraph {
    /// A connected graph from vertex ids and `(id, src, dst)` edge triples.
    pub fn new<S: AsRef<str>>(name: &str, vertices: &[S], edges: &[(S, S, S)]) -> Result<Self, GraphError> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut vindex = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vindex.insert(v.clone(), i).is_some() {
                return Err(GraphError::Invalid(format!("duplicate vertex id {v:?}")));
            }
        }
        if vertices.is_empty() {
            return Err(GraphError::Invalid("a graph needs at least one vertex".into()));
        }
        let mut seen = HashMap::new();
        let mut es = Vec::with_capacity(edges.len());
        for (id, s, d) in edges {
            let id = id.as_ref().to_string();
            if seen.insert(id.clone(), ()).is_some() {
                return Err(GraphError::Invalid(format!("duplicate edge id {id:?}")));
            }
            let look = |v: &S| {
                vindex.get(v.as_ref()).copied().ok_or_else(|| {
                    GraphError::Invalid(format!("edge {id:?} has unknown endpoint {:?}", v.as_ref()))
                })
            };
            es.push(Edge { src: look(s)?, dst: look(d)?, id });
        }
        let g =
            FeynmanGraph { name: name.to_string(), vertices, edges: es, external: vec![], rotation: None };
        if !g.is_connected() {
            return Err(GraphError::Invalid(format!("graph {name:?} is not connected")));
        }
        Ok(g)
    }

    /// Internal constructor for surgeries; the caller guarantees validity.
    pub(crate) fn from_parts(
        name: String,
        vertices: Vec<String>,
        edges: Vec<Edge>,
        external: Vec<ExternalLeg>,
        rotation: Option<Vec<Vec<Dart>>>,
    ) -> Result<Self, GraphError> {
        let mut g = FeynmanGraph { name, vertices, edges, external, rotation: None };
        if !g.is_connected() {
            return Err(GraphError::Invalid(format!("graph {:?} is not connected", g.name)));
        }
        if let Some(order) = rotation {
            g.set_rotation_darts(order)?;
        }
        Ok(g)
    }

    pub fn with_external(
        mut self,
        id: &str,
        at: &str,
        momentum: Option<Vec<BigRational>>,
    ) -> Result<Self, GraphError> {
        if self.edges.iter().any(|e| e.id == id) || self.external.iter().any(|e| e.id == id) {
            return Err(GraphError::Invalid(format!("duplicate edge id {id:?}")));
        }
        let at = self.vertex_index(at)?;
        self.external.push(ExternalLeg { id: id.to_string(), at, momentum });
        Ok(self)
    }

    /// Attach a rotation system given as `(edge id, end)` lists per vertex id.
    pub fn with_rotation(mut self, rot: &[(&str, Vec<(&str, End)>)]) -> Result<Self, GraphError> {
        let mut order = vec![vec![]; self.vertices.len()];
        for (v, list) in rot {
            let vi = self.vertex_index(v)?;
            if !order[vi].is_empty() {
                return Err(GraphError::Rotation(format!("vertex {v:?} listed twice")));
            }
            for (e, end) in list {
                let ei = self.edge_index(e)?;
                order[vi].push(dart(ei, *end));
            }
        }
        self.set_rotation_darts(order)?;
        Ok(self)
    }

    pub fn with_rotation_darts(mut self, order: Vec<Vec<Dart>>) -> Result<Self, GraphError> {
        self.set_rotation_darts(order)?;
        Ok(self)
    }

    pub fn without_rotation(mut self) -> Self {
        self.rotation = None;
        self
    }

    fn set_rotation_darts(&mut self, order: Vec<Vec<Dart>>) -> Result<(), GraphError> {
        if order.len() != self.vertices.len() {
            return Err(GraphError::Rotation("one cyclic order per vertex required".into()));
        }
        for (v, cycle) in order.iter().enumerate() {
            for &d in cycle {
                if dart_edge(d) >= self.edges.len() {
                    return Err(GraphError::Rotation(format!("dart {d} out of range")));
                }
                if self.tail(d) != v {
                    return Err(GraphError::Rotation(format!(
                        "half-edge ({}, {:?}) listed at {}, which is not its endpoint",
                        self.edges[dart_edge(d)].id,
                        dart_end(d),
                        self.vertices[v]
                    )));
                }
            }
        }
        self.rotation = Some(RotationSystem::from_order(order, 2 * self.edges.len())?);
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn external(&self) -> &[ExternalLeg] {
        &self.external
    }

    pub fn rotation(&self) -> Option<&RotationSystem> {
        self.rotation.as_ref()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Number of internal edges, `n`.
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// First Betti number `ℓ = n − |V| + 1`.
    pub fn loops(&self) -> usize {
        self.edges.len() + 1 - self.vertices.len()
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize, GraphError> {
        self.vertices.iter().position(|v| v == id).ok_or_else(|| GraphError::UnknownVertex(id.to_string()))
    }

    pub fn edge_index(&self, id: &str) -> Result<usize, GraphError> {
        self.edges.iter().position(|e| e.id == id).ok_or_else(|| GraphError::UnknownEdge(id.to_string()))
    }

    /// Vertex a dart sits at.
    pub fn tail(&self, d: Dart) -> usize {
        let e = &self.edges[dart_edge(d)];
        if d.is_multiple_of(2) {
            e.src
        } else {
            e.dst
        }
    }

    pub fn head(&self, d: Dart) -> usize {
        self.tail(opposite(d))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|e| usize::from(e.src == v) + usize::from(e.dst == v)).sum()
    }

    /// Darts sitting at `v`, in edge order.
    pub fn darts_at(&self, v: usize) -> Vec<Dart> {
        (0..2 * self.edges.len()).filter(|&d| self.tail(d) == v).collect()
    }

    pub fn looping_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].is_looping()).collect()
    }

    pub fn has_looping_edges(&self) -> bool {
        self.edges.iter().any(Edge::is_looping)
    }

    pub fn has_multiple_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .filter(|e| !e.is_looping())
            .any(|e| !seen.insert((e.src.min(e.dst), e.src.max(e.dst))))
    }

    /// Variable name of edge `e`: `t` followed by the id, with an
    /// underscore when the id does not start with a digit.
    pub fn var_name(&self, e: usize) -> String {
        edge_var_name(&self.edges[e].id)
    }

    pub fn var_names(&self) -> Vec<String> {
        (0..self.edges.len()).map(|e| self.var_name(e)).collect()
    }

    fn is_connected(&self) -> bool {
        count_components(self.vertices.len(), self.edges.iter().map(|e| (e.src, e.dst))) == 1
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let file: GraphFile = serde_json::from_str(text).map_err(|e| GraphError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        file.into_graph()
    }

    pub fn to_json(&self) -> Value {
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| json!({"id": e.id, "src": self.vertices[e.src], "dst": self.vertices[e.dst]}))
            .collect();
        let external: Vec<Value> = self
            .external
            .iter()
            .map(|x| {
                let mut o = json!({"id": x.id, "at": self.vertices[x.at]});
                if let Some(p) = &x.momentum {
                    o["momentum"] = p.iter().map(|c| Value::String(c.to_string())).collect();
                }
                o
            })
            .collect();
        let mut out = json!({
            "name": self.name,
            "vertices": self.vertices,
            "edges": edges,
        });
        if !external.is_empty() {
            out["external"] = Value::Array(external);
        }
        if let Some(rot) = &self.rotation {
            let mut m = serde_json::Map::new();
            for (v, cycle) in rot.order.iter().enumerate() {
                let list: Vec<Value> =
                    cycle.iter().map(|&d| json!([self.edges[dart_edge(d)].id, dart_end(d)])).collect();
                m.insert(self.vertices[v].clone(), Value::Array(list));
            }
            out["rotation"] = Value::Object(m);
        }
        out
    }
}

pub fn edge_var_name(id: &str) -> String {
    if id.starts_with(|c: char| c.is_ascii_digit()) {
        format!("t{id}")
    } else {
        format!("t_{id}")
    }
}

/// Connected components of a vertex set under the given edges.
pub(crate) fn count_components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut uf = UnionFind::new(n);
    for (a, b) in edges {
        uf.union(a, b);
    }
    uf.components()
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), count: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.count -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.count
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Str(String),
    Int(i64),
}

impl Scalar {
    fn text(&self) -> String {
        match self {
            Scalar::Str(s) => s.clone(),
            Scalar::Int(i) => i.to_string(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeEntry {
    id: Scalar,
    src: Scalar,
    dst: Scalar,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExternalEntry {
    id: Scalar,
    at: Scalar,
    #[serde(default)]
    momentum: Option<Vec<Scalar>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    #[serde(default)]
    name: Option<String>,
    vertices: Vec<Scalar>,
    edges: Vec<EdgeEntry>,
    #[serde(default)]
    external: Vec<ExternalEntry>,
    #[serde(default)]
    rotation: Option<BTreeMap<String, Vec<(Scalar, End)>>>,
}

impl GraphFile {
    fn into_graph(self) -> Result<FeynmanGraph, GraphError> {
        let name = self.name.unwrap_or_else(|| "unnamed".into());
        let vertices: Vec<String> = self.vertices.iter().map(Scalar::text).collect();
        let edges: Vec<(String, String, String)> =
            self.edges.iter().map(|e| (e.id.text(), e.src.text(), e.dst.text())).collect();
        let mut g = FeynmanGraph::new(&name, &vertices, &edges)?;
        for x in &self.external {
            let momentum = match &x.momentum {
                None => None,
                Some(list) => Some(
                    list.iter().map(|c| parse_rational(&c.text())).collect::<Result<Vec<_>, _>>().map_err(
                        |err| GraphError::Momentum(format!("external edge {:?}: {err}", x.id.text())),
                    )?,
                ),
            };
            g = g.with_external(&x.id.text(), &x.at.text(), momentum)?;
        }
        if let Some(rot) = self.rotation {
            let owned: Vec<(String, Vec<(String, End)>)> = rot
                .into_iter()
                .map(|(v, list)| (v, list.into_iter().map(|(e, end)| (e.text(), end)).collect()))
                .collect();
            let borrowed: Vec<(&str, Vec<(&str, End)>)> = owned
                .iter()
                .map(|(v, list)| (v.as_str(), list.iter().map(|(e, end)| (e.as_str(), *end)).collect()))
                .collect();
            g = g.with_rotation(&borrowed)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_number_and_names() {
        let g = FeynmanGraph::new("b", &["a", "b"], &[("1", "a", "b"), ("x", "a", "b")]).unwrap();
        assert_eq!(g.loops(), 1);
        assert_eq!(g.var_names(), vec!["t1", "t_x"]);
        assert!(g.has_multiple_edges());
    }

    #[test]
    fn disconnected_and_dangling_graphs_are_rejected() {
        assert!(FeynmanGraph::new("d", &["a", "b"], &[] as &[(&str, &str, &str)]).is_err());
        assert!(matches!(FeynmanGraph::new("d", &["a"], &[("1", "a", "b")]), Err(GraphError::Invalid(_))));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "name": "banana",
            "vertices": ["a", "b"],
            "edges": [{"id": 1, "src": "a", "dst": "b"}, {"id": 2, "src": "a", "dst": "b"}],
            "external": [{"id": "p", "at": "a", "momentum": ["1/2", 3]},
                         {"id": "q", "at": "b", "momentum": ["-1/2", -3]}],
            "rotation": {"a": [[1, "src"], [2, "src"]], "b": [[2, "dst"], [1, "dst"]]}
        }"#;
        let g = FeynmanGraph::from_json(text).unwrap();
        assert_eq!(g.num_edges(), 2);
        assert_eq!(g.external()[0].momentum.as_ref().unwrap()[0], parse_rational("1/2").unwrap());
        let again = FeynmanGraph::from_json(&g.to_json().to_string()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn parse_errors_carry_a_location() {
        let err = FeynmanGraph::from_json("{\n  \"vertices\": [1,\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn rotation_must_match_incidence() {
        let g = FeynmanGraph::new("b", &["a", "b"], &[("1", "a", "b")]).unwrap();
        let bad = g.clone().with_rotation(&[("a", vec![("1", End::Dst)]), ("b", vec![("1", End::Src)])]);
        assert!(matches!(bad, Err(GraphError::Rotation(_))));
        let missing = g.with_rotation(&[("a", vec![("1", End::Src)])]);
        assert!(matches!(missing, Err(GraphError::Rotation(_))));
    }
}
