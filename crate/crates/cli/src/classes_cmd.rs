use detloci_algebra::LPoly;
use detloci_classes::{
    config_from_selection, det_complement_class, det_hypersurface_class, frame_class, frame_class_chain,
    frame_class_r2, frame_class_r3_closed, frame_class_r3_dims, inclusion_exclusion_strata, r3_strata,
    sigma_complement_class, FrameDims,
};
use detloci_graph::DivisorSelection;
use detloci_oracle::{verify_class, CountRequest, VerifyReport};
use serde_json::json;

use crate::{ClassesCmd, CliError, Report, SelectionArgs, Table};

pub(crate) fn class_fields(r: &mut Report, key: &str, p: &LPoly) {
    r.field(key, p.to_string()).field(&format!("{key}_factored"), p.factored_display());
}

/// Adds a table of per-prime checks and sets exit code 1 on a mismatch
/// (3 when only the budget got in the way).
pub(crate) fn attach_verification(r: &mut Report, v: &VerifyReport) {
    let mut t = Table::new("verify", &["q", "expected", "count", "match"]);
    for c in &v.checks {
        let count = match &c.actual {
            Ok(n) => n.to_string(),
            Err(e) => e.clone(),
        };
        t.push(vec![c.q.to_string(), c.expected.clone(), count, c.matches.to_string()]);
    }
    r.tables.push(t);
    r.field("verified", v.all_match);
    if !v.all_match {
        r.code = if v.resource_limited() { 3 } else { 1 };
    }
}

fn selection(s: &SelectionArgs) -> Result<DivisorSelection, CliError> {
    Ok(DivisorSelection::from_bitmask(s.loops, s.genus, &s.selection)?)
}

fn expect_len(dims: &[usize], n: usize, what: &str) -> Result<(), CliError> {
    if dims.len() == n {
        Ok(())
    } else {
        Err(CliError::Input(format!("--dims takes {n} values ({what}), got {}", dims.len())))
    }
}

pub(crate) fn run(cmd: &ClassesCmd, budget: u64) -> Result<Report, CliError> {
    match cmd {
        ClassesCmd::DetComplement { loops, projective, verify } => {
            let p = det_complement_class(*loops, *projective)?;
            let mut r = Report::new("classes det-complement");
            r.field("loops", *loops).field("projective", *projective);
            class_fields(&mut r, "class", &p);
            if !verify.is_empty() {
                if *projective {
                    return Err(CliError::Input("point counts are taken for the affine class".into()));
                }
                let v = verify_class(&p, &CountRequest::DetComplement { loops: *loops }, verify, budget);
                attach_verification(&mut r, &v);
            }
            Ok(r)
        }
        ClassesCmd::DetHypersurface { loops, projective } => {
            let p = det_hypersurface_class(*loops, *projective)?;
            let mut r = Report::new("classes det-hypersurface");
            r.field("loops", *loops).field("projective", *projective);
            class_fields(&mut r, "class", &p);
            Ok(r)
        }
        ClassesCmd::Frames { sel, verify } => {
            let s = selection(sel)?;
            let c = config_from_selection(&s)?;
            let p = frame_class(&c)?;
            let mut r = Report::new("classes frames");
            r.field("selection", s.bitmask()).field("dims", json!(c.dims()));
            if c.len() == 3 {
                r.field("dimension_data", dims_string(&FrameDims::from_config(&c)?));
            }
            class_fields(&mut r, "class", &p);
            if !verify.is_empty() {
                let req = CountRequest::Intersection { loops: s.loops, genus: s.genus, mask: s.mask() };
                attach_verification(&mut r, &verify_class(&p, &req, verify, budget));
            }
            Ok(r)
        }
        ClassesCmd::Stratum { sel, verify } => {
            let s = selection(sel)?;
            let t = inclusion_exclusion_strata(s.loops, s.genus)?;
            let p = t.stratum(&s).clone();
            let mut r = Report::new("classes stratum");
            r.field("selection", s.bitmask());
            class_fields(&mut r, "class", &p);
            if !verify.is_empty() {
                let req = CountRequest::IeStratum { loops: s.loops, genus: s.genus, mask: s.mask() };
                attach_verification(&mut r, &verify_class(&p, &req, verify, budget));
            }
            Ok(r)
        }
        ClassesCmd::SigmaComplement { sel } => {
            let s = selection(sel)?;
            let t = inclusion_exclusion_strata(s.loops, s.genus)?;
            let p = sigma_complement_class(&t, &s);
            let mut r = Report::new("classes sigma-complement");
            r.field("selection", s.bitmask());
            class_fields(&mut r, "class", &p);
            Ok(r)
        }
        ClassesCmd::R2 { dims } => {
            expect_len(dims, 3, "d1,d2,d12")?;
            let p = frame_class_r2(dims[0], dims[1], dims[2])?;
            let mut r = Report::new("classes r2");
            r.field("dims", json!(dims));
            class_fields(&mut r, "class", &p);
            Ok(r)
        }
        ClassesCmd::R3 { dims, closed } => {
            expect_len(dims, 8, "d1,d2,d3,d12,d13,d23,d123,D")?;
            let d = FrameDims {
                d1: dims[0],
                d2: dims[1],
                d3: dims[2],
                d12: dims[3],
                d13: dims[4],
                d23: dims[5],
                d123: dims[6],
                sum: dims[7],
            };
            let p = frame_class_r3_dims(&d)?;
            let mut r = Report::new("classes r3");
            r.field("dimension_data", dims_string(&d));
            let mut t = Table::new("strata", &["stratum", "class", "s", "projected"]);
            for s in r3_strata(&d)? {
                let (a, b, c) = s.projected;
                t.push(vec![s.name.into(), s.class.to_string(), s.s.to_string(), format!("({a},{b},{c})")]);
            }
            r.tables.push(t);
            class_fields(&mut r, "class", &p);
            if *closed {
                let c = frame_class_r3_closed(&d);
                class_fields(&mut r, "closed_expression", &c);
                r.field("closed_expression_agrees", c == p);
            }
            Ok(r)
        }
        ClassesCmd::Chain { dims } => {
            let p = frame_class_chain(dims)?;
            let mut r = Report::new("classes chain");
            r.field("dims", json!(dims));
            class_fields(&mut r, "class", &p);
            Ok(r)
        }
    }
}

pub(crate) fn dims_string(d: &FrameDims) -> String {
    format!(
        "d1={} d2={} d3={} d12={} d13={} d23={} d123={} D={}",
        d.d1, d.d2, d.d3, d.d12, d.d13, d.d23, d.d123, d.sum
    )
}
