use detloci_algebra::LPoly;
use detloci_classes::{
    det_complement_class, inclusion_exclusion_strata, is_known_discrepancy, known_discrepancies,
};
use detloci_oracle::{
    count_det_complement, count_frames, stratum_histogram, verify_class, CountRequest, OracleError,
};

use crate::classes_cmd::{attach_verification, class_fields};
use crate::{CliError, Report, Table, VerifyArgs};

fn eval(p: &LPoly, q: u64) -> Result<u64, CliError> {
    let v = p.eval_u64(q)?;
    u64::try_from(v).map_err(|_| CliError::Internal(format!("{p} at {q} does not fit in 64 bits")))
}

pub(crate) fn verify(args: &VerifyArgs, budget: u64) -> Result<Report, CliError> {
    if args.wheel3 {
        wheel3(args, budget)
    } else if args.det {
        let p = det_complement_class(args.loops, false)?;
        let mut r = Report::new("oracle verify det");
        r.field("loops", args.loops);
        class_fields(&mut r, "class", &p);
        let v = verify_class(&p, &CountRequest::DetComplement { loops: args.loops }, &args.q, budget);
        attach_verification(&mut r, &v);
        Ok(r)
    } else {
        grf3_closed(args, budget)
    }
}

fn wheel3(args: &VerifyArgs, budget: u64) -> Result<Report, CliError> {
    let table = inclusion_exclusion_strata(3, 0)?;
    let mut r = Report::new("oracle verify wheel3");
    let mut t = Table::new("verify", &["q", "intersections", "strata", "total", "det complement", "match"]);
    let mut all = true;
    for &q in &args.q {
        let h = stratum_histogram(3, 0, q, budget)?;
        let n = table.strata.len() as u64;
        let mut inter_ok = 0;
        let mut strata_ok = 0;
        for mask in 0..n {
            inter_ok += usize::from(eval(&table.intersections[mask as usize], q)? == h.intersection(mask));
            strata_ok += usize::from(eval(&table.strata[mask as usize], q)? == h.stratum(mask));
        }
        let det = count_det_complement(3, q, budget)?;
        let ok = inter_ok == n as usize && strata_ok == n as usize && h.total() == det;
        all &= ok;
        t.push(vec![
            q.to_string(),
            format!("{inter_ok}/{n}"),
            format!("{strata_ok}/{n}"),
            h.total().to_string(),
            det.to_string(),
            ok.to_string(),
        ]);
    }
    r.tables.push(t);
    r.field("verified", all);
    if !all {
        r.code = 1;
    }
    Ok(r)
}

fn grf3_closed(args: &VerifyArgs, budget: u64) -> Result<Report, CliError> {
    let mut r = Report::new("oracle verify grf3-closed");
    let mut t = Table::new(
        "verify",
        &["fixture", "dims", "q", "count", "strata", "closed", "strata match", "closed match", "status"],
    );
    let mut strata_ok = true;
    let mut unexpected = 0;
    let mut known = 0;
    for f in known_discrepancies()? {
        let d = &f.dims;
        let dims = format!("{},{},{},{},{},{},{},{}", d.d1, d.d2, d.d3, d.d12, d.d13, d.d23, d.d123, d.sum);
        for &q in &args.q {
            let count = match count_frames(&f.config, q, budget) {
                Err(e @ OracleError::Resource { .. }) => return Err(e.into()),
                c => c?,
            };
            let (s, c) = (eval(&f.strata, q)?, eval(&f.closed, q)?);
            let status = if s != count {
                strata_ok = false;
                "strata mismatch"
            } else if c == count {
                "agrees"
            } else if is_known_discrepancy(f.name) {
                known += 1;
                "known discrepancy"
            } else {
                unexpected += 1;
                "unregistered discrepancy"
            };
            t.push(vec![
                f.name.to_string(),
                dims.clone(),
                q.to_string(),
                count.to_string(),
                s.to_string(),
                c.to_string(),
                (s == count).to_string(),
                (c == count).to_string(),
                status.to_string(),
            ]);
        }
    }
    r.tables.push(t);
    r.field("strata verified", strata_ok)
        .field("known discrepancies", known)
        .field("unregistered discrepancies", unexpected);
    if !strata_ok || unexpected > 0 {
        r.code = 1;
    }
    Ok(r)
}
