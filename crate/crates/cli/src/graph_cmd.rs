use detloci_graph::{
    connectivity_report, det_m_gamma, faces, is_closed_2cell, loop_basis, matrix_tree_count, p_gamma,
    psi_from_trees, spanning_trees, FaceSet, FeynmanGraph, LoopBasis, MomentumData,
};
use serde_json::json;

use crate::{load_graph, CliError, GraphCmd, Report};

/// Face-derived basis when the graph carries a rotation system, otherwise
/// fundamental cycles.
pub(crate) fn basis_for(
    g: &FeynmanGraph,
    external_face: Option<usize>,
) -> Result<(Option<FaceSet>, LoopBasis), CliError> {
    if g.rotation().is_none() {
        if external_face.is_some() {
            return Err(CliError::Input("--external-face needs a rotation system".into()));
        }
        return Ok((None, loop_basis(g, None, None)?));
    }
    let fs = faces(g)?;
    let b = loop_basis(g, Some(&fs), external_face)?;
    Ok((Some(fs), b))
}

fn basis_name(b: &LoopBasis) -> String {
    match b.source {
        detloci_graph::BasisSource::Faces { external_face, .. } => {
            format!("faces (external face {external_face})")
        }
        detloci_graph::BasisSource::Tree => "fundamental cycles".into(),
    }
}

pub(crate) fn run(cmd: &GraphCmd) -> Result<Report, CliError> {
    match cmd {
        GraphCmd::Validate { file } => {
            let g = load_graph(file)?;
            let mut r = Report::new("graph validate");
            r.field("valid", true)
                .field("name", g.name())
                .field("vertices", g.num_vertices())
                .field("internal_edges", g.num_edges())
                .field("external_edges", g.external().len())
                .field("loops", g.loops())
                .field("rotation", g.rotation().is_some());
            if g.rotation().is_some() {
                r.field("genus", faces(&g)?.genus);
            }
            Ok(r)
        }
        GraphCmd::Info { file } => {
            let g = load_graph(file)?;
            let mut r = Report::new("graph info");
            r.field("name", g.name())
                .field("vertices", json!(g.vertices()))
                .field("internal_edges", g.num_edges())
                .field("external_edges", g.external().len())
                .field("loops", g.loops())
                .field("looping_edges", g.looping_edges().len())
                .field("multiple_edges", g.has_multiple_edges())
                .field("spanning_trees", spanning_trees(&g).len())
                .field("matrix_tree_count", matrix_tree_count(&g).to_string());
            if g.rotation().is_some() {
                let fs = faces(&g)?;
                let cc = is_closed_2cell(&g, &fs);
                let lens: Vec<usize> = fs.faces.iter().map(|f| f.len()).collect();
                r.field("faces", fs.len())
                    .field("face_lengths", json!(lens))
                    .field("genus", fs.genus)
                    .field("closed_2cell", cc.closed);
            } else {
                r.field("rotation", false);
            }
            Ok(r)
        }
        GraphCmd::Psi { file } => {
            let g = load_graph(file)?;
            let (_, b) = basis_for(&g, None)?;
            let trees = psi_from_trees(&g);
            let det = det_m_gamma(&g, &b)?;
            let equal = trees == det;
            let mut r = Report::new("graph psi");
            r.field("name", g.name())
                .field("loops", g.loops())
                .field("basis", basis_name(&b))
                .field("psi_trees", trees.to_string())
                .field("psi_det", det.to_string())
                .field("monomials", trees.num_terms())
                .field("trees == det", equal);
            if !equal {
                r.code = 1;
            }
            Ok(r)
        }
        GraphCmd::Pgamma { file } => {
            let g = load_graph(file)?;
            let mut r = Report::new("graph pgamma");
            r.field("name", g.name());
            match MomentumData::from_graph(&g)? {
                Some(m) => {
                    let p = p_gamma(&g, &m)?;
                    r.field("dimension", m.dimension())
                        .field("pgamma", p.to_string())
                        .field("monomials", p.num_terms());
                }
                None => {
                    r.field("pgamma", "0").field("note", "no external momenta in the file");
                }
            }
            Ok(r)
        }
        GraphCmd::Connectivity { file } => {
            let g = load_graph(file)?;
            let c = connectivity_report(&g);
            let mut r = Report::new("graph connectivity");
            r.field("name", g.name())
                .field("1PI", c.is_1pi)
                .field("2-vertex-connected", c.is_2_vertex)
                .field("3-edge-connected", c.is_3_edge)
                .field("3-vertex-connected", c.is_3_vertex);
            Ok(r)
        }
    }
}
