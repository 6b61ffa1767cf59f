//! The 64-subset sweep for the wheel with three spokes, displayed with the
//! components ordered by the edge each one pulls back to.

use detloci_algebra::LPoly;
use detloci_classes::{
    det_complement_class, inclusion_exclusion_strata, sigma_complement_class, StrataTable,
};
use detloci_graph::{
    corpus, faces, loop_basis, sigma_gamma, sigma_lg, tau_matrix, DivisorSelection, FeynmanGraph,
};

use crate::classes_cmd::class_fields;
use crate::{CliError, Report, Table};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelRow {
    /// `•` / `○` per marker, grouped in threes.
    pub marker: String,
    /// Bitmask over the canonical component order.
    pub mask: u64,
    pub intersection: LPoly,
    /// `intersection / (L − 1)³`.
    pub normalized: LPoly,
    pub stratum: LPoly,
}

#[derive(Clone, Debug)]
pub struct WheelReport {
    /// `order[k]` is the canonical index of marker `k`, the component
    /// pulling back to the `k`-th edge variable of the wheel.
    pub order: Vec<usize>,
    pub rows: Vec<WheelRow>,
    pub table: StrataTable,
    pub total: LPoly,
    pub det_complement: LPoly,
    pub sigma_complement: LPoly,
    pub threeloop_selection: DivisorSelection,
    pub threeloop_class: LPoly,
}

fn selection_of(g: &FeynmanGraph) -> Result<(DivisorSelection, Vec<Option<usize>>), CliError> {
    let fs = faces(g)?;
    let tm = tau_matrix(g, &loop_basis(g, Some(&fs), None)?);
    let s = sigma_gamma(g, &fs, &tm)?;
    let edges = s.table.iter().map(|p| p.edge.filter(|_| p.selected).map(|(e, _)| e)).collect();
    Ok((s.selection, edges))
}

/// Marker string of a canonical bitmask.
pub fn marker(order: &[usize], mask: u64) -> String {
    let dots: Vec<char> = order.iter().map(|&c| if mask & (1 << c) != 0 { '•' } else { '○' }).collect();
    let (a, b) = dots.split_at(3);
    format!("{} {}", a.iter().collect::<String>(), b.iter().collect::<String>())
}

pub fn compute() -> Result<WheelReport, CliError> {
    let wheel = corpus::tetrahedron();
    let (sel, edges) = selection_of(&wheel)?;
    let n = sigma_lg(3, 0)?.len();
    if sel.indices.len() != n {
        return Err(CliError::Internal("the wheel does not select every component".into()));
    }
    let mut order = vec![usize::MAX; n];
    for (c, e) in edges.iter().enumerate() {
        let e = e.ok_or_else(|| CliError::Internal("unselected wheel component".into()))?;
        order[e] = c;
    }
    let table = inclusion_exclusion_strata(3, 0)?;
    let torus3 = LPoly::binomial(1, 0).pow(3);
    let mut rows = Vec::with_capacity(1 << n);
    for mask in 0..1u64 << n {
        let intersection = table.intersections[mask as usize].clone();
        let normalized = intersection
            .exact_div(&torus3)
            .ok_or_else(|| CliError::Internal(format!("class of {mask:06b} is not divisible by (L-1)^3")))?;
        rows.push(WheelRow {
            marker: marker(&order, mask),
            mask,
            intersection,
            normalized,
            stratum: table.strata[mask as usize].clone(),
        });
    }
    // • sorts before ○ in this order: all-on first, all-off last.
    rows.sort_by(|a, b| {
        let key = |r: &WheelRow| r.marker.chars().map(|c| c == '○').collect::<Vec<_>>();
        key(a).cmp(&key(b))
    });
    let total: LPoly = table.strata.iter().cloned().sum();
    let det_complement = det_complement_class(3, false)?;
    let all = DivisorSelection::from_mask(3, 0, (1 << n) - 1)?;
    let sigma_complement = sigma_complement_class(&table, &all);
    let (threeloop_selection, _) = selection_of(&corpus::threeloop())?;
    let threeloop_class = sigma_complement_class(&table, &threeloop_selection);
    Ok(WheelReport {
        order,
        rows,
        table,
        total,
        det_complement,
        sigma_complement,
        threeloop_selection,
        threeloop_class,
    })
}

pub(crate) fn report() -> Result<Report, CliError> {
    let w = compute()?;
    let comps = sigma_lg(3, 0)?;
    let mut r = Report::new("wheel3");
    let markers: Vec<String> =
        w.order.iter().enumerate().map(|(k, &c)| format!("X{}={}", k + 1, comps[c])).collect();
    r.field("markers", markers.join(" "));
    let mut t1 = Table::new("frame classes / (L-1)^3", &["marker", "mask", "class", "expanded"]);
    let mut t2 = Table::new("strata classes", &["marker", "mask", "class", "expanded"]);
    for row in &w.rows {
        let bits = DivisorSelection::from_mask(3, 0, row.mask)?.bitmask();
        t1.push(vec![
            row.marker.clone(),
            bits.clone(),
            row.normalized.factored_display(),
            row.normalized.to_string(),
        ]);
        t2.push(vec![row.marker.clone(), bits, row.stratum.factored_display(), row.stratum.to_string()]);
    }
    r.tables.push(t1);
    r.tables.push(t2);
    class_fields(&mut r, "total", &w.total);
    r.field("total equals determinant complement", w.total == w.det_complement);
    class_fields(&mut r, "sigma_complement", &w.sigma_complement);
    let picked: Vec<String> = w
        .order
        .iter()
        .enumerate()
        .filter(|(_, &c)| w.threeloop_selection.contains(c))
        .map(|(k, _)| format!("X{}", k + 1))
        .collect();
    r.field("threeloop_selection", format!("{} ({})", w.threeloop_selection.bitmask(), picked.join(" ")));
    class_fields(&mut r, "threeloop_class", &w.threeloop_class);
    if w.total != w.det_complement {
        r.code = 1;
    }
    Ok(r)
}
