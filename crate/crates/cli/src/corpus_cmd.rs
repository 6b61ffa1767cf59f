use detloci_graph::corpus;

use crate::{CliError, CorpusCmd, Report, Table};

pub(crate) fn run(cmd: &CorpusCmd) -> Result<Report, CliError> {
    match cmd {
        CorpusCmd::List => {
            let mut t = Table::new("graphs", &["name", "vertices", "edges", "loops"]);
            for g in corpus::named() {
                t.push(vec![
                    g.name().into(),
                    g.num_vertices().to_string(),
                    g.num_edges().to_string(),
                    g.loops().to_string(),
                ]);
            }
            let mut r = Report::new("corpus list");
            r.tables.push(t);
            Ok(r)
        }
        CorpusCmd::Show { name } => {
            let g = corpus::by_name(name)
                .ok_or_else(|| CliError::Input(format!("no corpus graph named {name:?}")))?;
            let mut r = Report::new("corpus show");
            r.body = Some(format!("{}\n", serde_json::to_string_pretty(&g.to_json()).expect("graph JSON")));
            Ok(r)
        }
        CorpusCmd::Random { seed, count, planar, max_edges } => {
            let mut rng = corpus::rng(*seed);
            let lines: String = (0..*count)
                .map(|k| {
                    let g = if *planar {
                        corpus::random_planar(&mut rng)
                    } else {
                        corpus::random_multigraph(&mut rng, *max_edges)
                    };
                    format!("{}\n", g.renamed(&format!("seed{seed}-{k}")).to_json())
                })
                .collect();
            let mut r = Report::new("corpus random");
            r.body = Some(lines);
            Ok(r)
        }
    }
}
