//! Combinatorial sufficient conditions for τ to be injective.
//!
//! Two chains are checked, both after looping edges have been stripped
//! (attaching a looping edge adds a 1×1 diagonal block to `M_Γ`, which does
//! not change injectivity):
//!
//! * face-pair chain: at least three vertices, a closed 2-cell embedding,
//!   every edge on two distinct faces and any two faces sharing at most one
//!   edge;
//! * row-isolation chain: a set of loops covering every edge, each loop
//!   having all but at most one of its edges shared with some other loop as
//!   their only common edge, so those variables show up alone in its row.

use serde::Serialize;

use crate::embedding::{faces, is_closed_2cell, FaceSet};
use crate::graph::FeynmanGraph;
use crate::loops::{loop_basis, LoopBasis};
use crate::surgery::remove_looping_edges;
use crate::GraphError;

pub const FACE_PAIR_CHAIN: &str = "face-pair chain";
pub const ROW_ISOLATION_CHAIN: &str = "row-isolation chain";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SharedEdges {
    pub faces: (usize, usize),
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopCondition {
    pub loop_index: usize,
    pub edges: usize,
    /// Edges that are the sole common edge with some other loop.
    pub isolated: usize,
    pub qualifies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub stripped_looping_edges: Vec<String>,
    pub vertices: usize,
    pub faces: usize,
    pub genus: usize,
    pub closed_2cell: bool,
    /// Face pairs with at least one common edge.
    pub shared: Vec<SharedEdges>,
    pub max_shared: usize,
    pub every_edge_on_two_faces: bool,
    pub loop_conditions: Vec<LoopCondition>,
    pub qualifying_loops_cover_edges: bool,
    pub face_pair_chain: bool,
    pub row_isolation_chain: bool,
    /// Name of the first chain that holds.
    pub certified: Option<String>,
}

/// `g` must carry a rotation system when it has looping edges, so that the
/// stripped graph can be re-traced; `fs` is the face set of `g`.
pub fn certify_injectivity(g: &FeynmanGraph, fs: &FaceSet) -> Result<CertificateReport, GraphError> {
    let looping: Vec<String> = g.looping_edges().iter().map(|&e| g.edge(e).id.clone()).collect();
    let (h, hfs) = if looping.is_empty() {
        (g.clone(), fs.clone())
    } else {
        let h = remove_looping_edges(g);
        let hfs = faces(&h)?;
        (h, hfs)
    };
    let nf = hfs.len();
    let mut shared = Vec::new();
    for a in 0..nf {
        for b in a + 1..nf {
            let count = hfs.shared_edges(a, b);
            if count > 0 {
                shared.push(SharedEdges { faces: (a, b), count });
            }
        }
    }
    let max_shared = shared.iter().map(|s| s.count).max().unwrap_or(0);
    let every_edge_on_two_faces = (0..h.num_edges()).all(|e| hfs.faces_of_edge(e).len() == 2);
    let closed_2cell = is_closed_2cell(&h, &hfs).closed;
    let face_pair_chain = h.num_vertices() >= 3 && closed_2cell && every_edge_on_two_faces && max_shared <= 1;

    let basis = loop_basis(&h, Some(&hfs), None)?;
    let (loop_conditions, covered) = row_isolation(&h, &basis);
    let row_isolation_chain = covered;

    let certified = if face_pair_chain {
        Some(FACE_PAIR_CHAIN.to_string())
    } else if row_isolation_chain {
        Some(ROW_ISOLATION_CHAIN.to_string())
    } else {
        None
    };
    Ok(CertificateReport {
        stripped_looping_edges: looping,
        vertices: h.num_vertices(),
        faces: nf,
        genus: hfs.genus,
        closed_2cell,
        shared,
        max_shared,
        every_edge_on_two_faces,
        loop_conditions,
        qualifying_loops_cover_edges: covered,
        face_pair_chain,
        row_isolation_chain,
        certified,
    })
}

fn row_isolation(g: &FeynmanGraph, basis: &LoopBasis) -> (Vec<LoopCondition>, bool) {
    let ell = basis.loops();
    let supports: Vec<Vec<usize>> = (0..ell).map(|k| basis.support(k)).collect();
    let mut covered = vec![false; g.num_edges()];
    let mut conds = Vec::new();
    for i in 0..ell {
        let isolated = supports[i]
            .iter()
            .filter(|&&e| {
                (0..ell).any(|j| {
                    j != i && {
                        let common: Vec<&usize> =
                            supports[j].iter().filter(|x| supports[i].contains(x)).collect();
                        common == [&e]
                    }
                })
            })
            .count();
        let qualifies = supports[i].len() <= isolated + 1;
        if qualifies {
            for &e in &supports[i] {
                covered[e] = true;
            }
        }
        conds.push(LoopCondition { loop_index: i, edges: supports[i].len(), isolated, qualifies });
    }
    (conds, covered.iter().all(|&c| c))
}
