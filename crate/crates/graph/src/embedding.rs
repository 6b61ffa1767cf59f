//! Faces of a rotation system, closed 2-cell tests and an exhaustive
//! embedding search for small graphs.

use crate::graph::{dart_edge, opposite, Dart, FeynmanGraph, RotationSystem};
use crate::GraphError;

/// A face walk: darts `d_0, d_1, ...` with `d_{k+1} = σ(α(d_k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    /// Edges on the boundary, in walk order (an edge met twice is listed twice).
    pub fn edges(&self) -> Vec<usize> {
        self.darts.iter().map(|&d| dart_edge(d)).collect()
    }

    /// Distinct boundary edges, sorted.
    pub fn edge_set(&self) -> Vec<usize> {
        let mut e = self.edges();
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Vertices visited, one per dart (the vertex the dart leaves from).
    pub fn vertices(&self, g: &FeynmanGraph) -> Vec<usize> {
        self.darts.iter().map(|&d| g.tail(d)).collect()
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// No repeated vertex and no repeated edge along the walk.
    pub fn is_simple(&self, g: &FeynmanGraph) -> bool {
        let mut vs = self.vertices(g);
        let mut es = self.edges();
        let (nv, ne) = (vs.len(), es.len());
        vs.sort_unstable();
        vs.dedup();
        es.sort_unstable();
        es.dedup();
        vs.len() == nv && es.len() == ne
    }

    /// Signed edge-incidence vector of the boundary cycle.
    pub fn cycle_vector(&self, num_edges: usize) -> Vec<i64> {
        let mut v = vec![0i64; num_edges];
        for &d in &self.darts {
            v[dart_edge(d)] += if d % 2 == 0 { 1 } else { -1 };
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    pub genus: usize,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// The same faces listed as `faces[perm[0]], faces[perm[1]], ...`.
    pub fn reorder(&self, perm: &[usize]) -> Result<FaceSet, GraphError> {
        let mut check = perm.to_vec();
        check.sort_unstable();
        if check != (0..self.faces.len()).collect::<Vec<_>>() {
            return Err(GraphError::Invalid("face order is not a permutation".into()));
        }
        Ok(FaceSet { faces: perm.iter().map(|&i| self.faces[i].clone()).collect(), genus: self.genus })
    }

    /// Faces containing edge `e` (a face meeting it twice appears once).
    pub fn faces_of_edge(&self, e: usize) -> Vec<usize> {
        (0..self.faces.len()).filter(|&k| self.faces[k].edges().contains(&e)).collect()
    }

    /// Number of distinct edges on both faces `a` and `b`.
    pub fn shared_edges(&self, a: usize, b: usize) -> usize {
        let ea = self.faces[a].edge_set();
        self.faces[b].edge_set().iter().filter(|e| ea.contains(e)).count()
    }
}

/// Trace the faces of the graph's own rotation system.
pub fn faces(g: &FeynmanGraph) -> Result<FaceSet, GraphError> {
    let rot = g.rotation().ok_or_else(|| GraphError::MissingRotation(g.name().to_string()))?;
    trace_faces(g, rot)
}

/// Orbits of `σ∘α`, each started from the smallest untraced dart.
pub fn trace_faces(g: &FeynmanGraph, rot: &RotationSystem) -> Result<FaceSet, GraphError> {
    let nd = 2 * g.num_edges();
    if rot.order().len() != g.num_vertices() {
        return Err(GraphError::Rotation("one cyclic order per vertex required".into()));
    }
    let mut faces = Vec::new();
    if nd == 0 {
        faces.push(Face { darts: vec![] });
    }
    let mut seen = vec![false; nd];
    for start in 0..nd {
        if seen[start] {
            continue;
        }
        let mut walk = vec![];
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            walk.push(d);
            d = rot.next(opposite(d));
        }
        if d != start {
            return Err(GraphError::Rotation("face permutation is not a bijection".into()));
        }
        faces.push(Face { darts: walk });
    }
    let (v, n, f) = (g.num_vertices() as i64, g.num_edges() as i64, faces.len() as i64);
    let defect = 2 - v + n - f;
    if defect < 0 || defect % 2 != 0 {
        return Err(GraphError::Rotation(format!("Euler relation fails: |V| - n + f = {}", v - n + f)));
    }
    Ok(FaceSet { faces, genus: (defect / 2) as usize })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedCellReport {
    pub face_simple: Vec<bool>,
    pub closed: bool,
}

/// Every face walk is a simple cycle.
pub fn is_closed_2cell(g: &FeynmanGraph, fs: &FaceSet) -> ClosedCellReport {
    let face_simple: Vec<bool> = fs.faces.iter().map(|f| f.is_simple(g)).collect();
    let closed = face_simple.iter().all(|&b| b);
    ClosedCellReport { face_simple, closed }
}

#[derive(Clone, Debug)]
pub struct EmbeddingSearch {
    pub rotation_systems: u64,
    pub min_genus: usize,
    /// A minimum-genus rotation, closed 2-cell whenever one exists at that genus.
    pub best: Vec<Vec<Dart>>,
    pub best_is_closed_2cell: bool,
}

pub const EMBEDDING_SEARCH_LIMIT: u64 = 1_000_000;

/// Number of rotation systems, `Π (deg v − 1)!`, saturating.
pub fn rotation_system_count(g: &FeynmanGraph) -> u64 {
    (0..g.num_vertices())
        .map(|v| (1..g.degree(v).max(1) as u64).fold(1u64, |a, k| a.saturating_mul(k)))
        .fold(1u64, |a, b| a.saturating_mul(b))
}

/// Enumerate every rotation system and keep a minimum-genus one.
pub fn search_embeddings(g: &FeynmanGraph) -> Result<EmbeddingSearch, GraphError> {
    let total = rotation_system_count(g);
    if total > EMBEDDING_SEARCH_LIMIT {
        return Err(GraphError::Resource(format!(
            "{total} rotation systems exceed the limit of {EMBEDDING_SEARCH_LIMIT}"
        )));
    }
    // Cyclic orders at each vertex with its first dart fixed.
    let per_vertex: Vec<Vec<Vec<Dart>>> = (0..g.num_vertices())
        .map(|v| {
            let ds = g.darts_at(v);
            match ds.split_first() {
                None => vec![vec![]],
                Some((&first, rest)) => permutations(rest)
                    .into_iter()
                    .map(|p| std::iter::once(first).chain(p).collect())
                    .collect(),
            }
        })
        .collect();
    let mut idx = vec![0usize; per_vertex.len()];
    let mut best: Option<(usize, bool, Vec<Vec<Dart>>)> = None;
    loop {
        let order: Vec<Vec<Dart>> = idx.iter().enumerate().map(|(v, &k)| per_vertex[v][k].clone()).collect();
        let emb = g.clone().with_rotation_darts(order.clone())?;
        let fs = faces(&emb)?;
        let closed = is_closed_2cell(&emb, &fs).closed;
        let better = match &best {
            None => true,
            Some((bg, bc, _)) => fs.genus < *bg || (fs.genus == *bg && closed && !bc),
        };
        if better {
            best = Some((fs.genus, closed, order));
        }
        let mut v = 0;
        loop {
            if v == idx.len() {
                let (min_genus, best_is_closed_2cell, best) = best.unwrap();
                return Ok(EmbeddingSearch {
                    rotation_systems: total,
                    min_genus,
                    best,
                    best_is_closed_2cell,
                });
            }
            idx[v] += 1;
            if idx[v] < per_vertex[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn permutations(items: &[Dart]) -> Vec<Vec<Dart>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = vec![];
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn single_looping_edge_has_two_monogons() {
        let g = corpus::single_loop();
        let fs = faces(&g).unwrap();
        assert_eq!((fs.len(), fs.genus), (2, 0));
        assert!(is_closed_2cell(&g, &fs).closed);
    }

    #[test]
    fn tetrahedron_is_planar_and_closed() {
        let g = corpus::tetrahedron();
        let fs = faces(&g).unwrap();
        assert_eq!((fs.len(), fs.genus), (4, 0));
        assert!(is_closed_2cell(&g, &fs).closed);
        assert_eq!(fs.faces[0].edge_set(), vec![0, 1, 4]);
    }

    #[test]
    fn k5_is_not_planar() {
        let g = corpus::k5();
        assert!(faces(&g).unwrap().genus >= 1);
        let s = search_embeddings(&g.without_rotation()).unwrap();
        assert_eq!(s.min_genus, 1);
        assert_eq!(s.rotation_systems, 7776);
    }

    #[test]
    fn dumbbell_is_never_closed_2cell() {
        let g = corpus::dumbbell().without_rotation();
        let per_vertex = rotation_system_count(&g);
        assert_eq!(per_vertex, 4);
        let s = search_embeddings(&g).unwrap();
        assert!(!s.best_is_closed_2cell);
    }

    #[test]
    fn reorder_checks_the_permutation() {
        let fs = faces(&corpus::banana2()).unwrap();
        assert!(fs.reorder(&[1, 0]).is_ok());
        assert!(fs.reorder(&[0, 0]).is_err());
    }
}
