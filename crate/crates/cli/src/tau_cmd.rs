use detloci_graph::{
    certify_injectivity, minor_injectivity, sigma_gamma, sigma_lg, tau_matrix, GraphError, MinorVerdict,
};
use serde_json::json;

use crate::graph_cmd::basis_for;
use crate::{load_graph, CliError, Report, Table, TauCmd};

pub(crate) fn run(cmd: &TauCmd) -> Result<Report, CliError> {
    match cmd {
        TauCmd::Matrix { basis } => {
            let g = load_graph(&basis.file)?;
            let (_, b) = basis_for(&g, basis.external_face)?;
            let tm = tau_matrix(&g, &b);
            let ell = tm.loops;
            let mut r = Report::new("tau matrix");
            r.field("name", g.name())
                .field("rows", ell * ell)
                .field("columns", g.num_edges())
                .field("rank", tm.rank());
            let vars = g.var_names();
            let mut head = vec!["entry"];
            head.extend(vars.iter().map(String::as_str));
            let mut t = Table::new("tau", &head);
            for i in 0..ell {
                for j in 0..ell {
                    let mut row = vec![format!("x{}{}", i + 1, j + 1)];
                    row.extend((0..g.num_edges()).map(|e| tm.coeff(i, j, e).to_string()));
                    t.push(row);
                }
            }
            r.tables.push(t);
            Ok(r)
        }
        TauCmd::Check { basis, rank_only } => {
            let g = load_graph(&basis.file)?;
            if g.rotation().is_none() && !rank_only {
                return Err(CliError::Input(format!(
                    "graph {:?} carries no rotation system, which the certificate needs; \
                     pass --rank-only for the rank verdict alone",
                    g.name()
                )));
            }
            let (fs, b) = basis_for(&g, basis.external_face)?;
            let tm = tau_matrix(&g, &b);
            let injective = tm.is_injective();
            let mut r = Report::new("tau check");
            r.field("name", g.name())
                .field("injective", format!("{injective} (rank {}/{})", tm.rank(), g.num_edges()));
            let Some(fs) = fs.filter(|_| !rank_only) else {
                return Ok(r);
            };
            let cert = certify_injectivity(&g, &fs)?;
            r.field("certified", cert.certified.clone().unwrap_or_else(|| "none".into()))
                .field("closed_2cell", cert.closed_2cell)
                .field("genus", cert.genus)
                .field("max_shared_edges", cert.max_shared)
                .field("every_edge_on_two_faces", cert.every_edge_on_two_faces)
                .field("qualifying_loops_cover_edges", cert.qualifying_loops_cover_edges)
                .field("stripped_looping_edges", json!(cert.stripped_looping_edges));
            let minor = match minor_injectivity(&g, &fs, &b) {
                MinorVerdict::Injective => "injective",
                MinorVerdict::NotInjective => "not injective",
                MinorVerdict::NotApplicable => "not applicable",
            };
            r.field("minor", minor);
            if cert.certified.is_some() && !injective {
                r.code = 1;
                r.field("soundness", "violated: certified but rank deficient");
            }
            match sigma_gamma(&g, &fs, &tm) {
                Ok(s) => {
                    let comps = sigma_lg(tm.loops, fs.genus)?;
                    r.field("sigma", s.selection.bitmask());
                    let mut t = Table::new("pullbacks", &["component", "form", "pullback", "selected"]);
                    for p in &s.table {
                        let pb = match p.edge {
                            Some((e, c)) => signed_var(c, &g.var_name(e)),
                            None => "-".into(),
                        };
                        t.push(vec![
                            (p.component + 1).to_string(),
                            comps[p.component].to_string(),
                            pb,
                            p.selected.to_string(),
                        ]);
                    }
                    r.tables.push(t);
                }
                Err(GraphError::Certification(why)) => {
                    r.field("sigma", format!("none ({why})"));
                }
                Err(e) => return Err(e.into()),
            }
            Ok(r)
        }
    }
}

fn signed_var(c: i64, v: &str) -> String {
    match c {
        1 => v.to_string(),
        -1 => format!("-{v}"),
        c => format!("{c}*{v}"),
    }
}
