//! The linear map τ: 𝔸ⁿ → 𝔸^{ℓ²}, t ↦ M_Γ(t), and the divisors Σ̂_{ℓ,g}, Σ̂_Γ.

use std::fmt;

use detloci_algebra::{BigRational, RatMatrix};
use serde::Serialize;

use crate::embedding::{is_closed_2cell, FaceSet};
use crate::graph::FeynmanGraph;
use crate::loops::LoopBasis;
use crate::GraphError;

/// Row `i·ℓ + j` holds the coefficients of entry `(i, j)` of `M_Γ` in the edge
/// variables; column `e` is `∂M_Γ/∂t_e` flattened.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauMap {
    pub matrix: RatMatrix,
    pub loops: usize,
}

impl TauMap {
    pub fn num_edges(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.num_edges()
    }

    /// Coefficient of `t_e` in entry `(i, j)`.
    pub fn coeff(&self, i: usize, j: usize, e: usize) -> i64 {
        rat_to_i64(self.matrix.get(i * self.loops + j, e))
    }

    /// Pullback of a linear form on `𝔸^{ℓ²}` to the edge variables.
    pub fn pullback(&self, form: &[i64]) -> Vec<i64> {
        (0..self.num_edges())
            .map(|e| (0..form.len()).map(|r| form[r] * rat_to_i64(self.matrix.get(r, e))).sum())
            .collect()
    }

    /// τ restricted to entries `(i, j)` with `i, j < k`.
    pub fn leading_block(&self, k: usize) -> RatMatrix {
        let rows = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| self.matrix.row(i * self.loops + j).to_vec())
            .collect();
        RatMatrix::from_rows(self.num_edges(), rows).expect("rows of τ")
    }
}

fn rat_to_i64(x: &BigRational) -> i64 {
    use num_traits::ToPrimitive;
    x.to_integer().to_i64().expect("τ has small integer entries")
}

pub fn tau_matrix(g: &FeynmanGraph, basis: &LoopBasis) -> TauMap {
    let ell = basis.loops();
    let n = g.num_edges();
    let mut m = RatMatrix::zeros(ell * ell, n);
    for e in 0..n {
        for i in 0..ell {
            for j in 0..ell {
                let c = basis.eta[e][i] * basis.eta[e][j];
                if c != 0 {
                    m.set(i * ell + j, e, BigRational::from_integer(c.into()));
                }
            }
        }
    }
    TauMap { matrix: m, loops: ell }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MinorVerdict {
    Injective,
    NotInjective,
    NotApplicable,
}

/// Injectivity read off the leading `(ℓ − 2g) × (ℓ − 2g)` block of face
/// loops. Applies to graphs with at least three vertices, no looping edges
/// and a closed 2-cell embedding, with `basis` built from `fs`.
pub fn minor_injectivity(g: &FeynmanGraph, fs: &FaceSet, basis: &LoopBasis) -> MinorVerdict {
    let applicable = g.num_vertices() >= 3
        && !g.has_looping_edges()
        && is_closed_2cell(g, fs).closed
        && basis.face_loops() == fs.len() - 1;
    if !applicable {
        return MinorVerdict::NotApplicable;
    }
    let tm = tau_matrix(g, basis);
    if tm.leading_block(basis.face_loops()).rank() == g.num_edges() {
        MinorVerdict::Injective
    } else {
        MinorVerdict::NotInjective
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ComponentLabel {
    /// `x_ij = 0`, one-based.
    OffDiag(usize, usize),
    /// `x_i1 + ... + x_{i,f−1} = 0`, one-based.
    RowSum(usize),
}

/// A hyperplane of `𝔸^{ℓ²}`, coefficient `form[i·ℓ + j]` on `x_{i+1, j+1}`,
/// normalized so the first nonzero coefficient is positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorComponent {
    pub form: Vec<i64>,
    pub label: ComponentLabel,
    pub block: usize,
}

impl DivisorComponent {
    /// The constrained matrix row (zero-based).
    pub fn row(&self) -> usize {
        match self.label {
            ComponentLabel::OffDiag(i, _) | ComponentLabel::RowSum(i) => i - 1,
        }
    }
}

impl fmt::Display for DivisorComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            ComponentLabel::OffDiag(i, j) => write!(f, "x{i}{j}"),
            ComponentLabel::RowSum(i) => {
                let parts: Vec<String> = (1..=self.block).map(|j| format!("x{i}{j}")).collect();
                write!(f, "{}", parts.join("+"))
            }
        }
    }
}

/// Components of Σ̂_{ℓ,g}: off-diagonals `x_ij` (`i < j ≤ f − 1`) in
/// lexicographic order, then the row sums over the leading `f − 1` columns.
pub fn sigma_lg(loops: usize, genus: usize) -> Result<Vec<DivisorComponent>, GraphError> {
    if loops + 1 < 2 * genus + 1 {
        return Err(GraphError::Invalid(format!("f = ℓ − 2g + 1 < 1 for ℓ = {loops}, g = {genus}")));
    }
    let b = loops - 2 * genus;
    let mut out = Vec::new();
    for i in 0..b {
        for j in i + 1..b {
            let mut form = vec![0; loops * loops];
            form[i * loops + j] = 1;
            out.push(DivisorComponent { form, label: ComponentLabel::OffDiag(i + 1, j + 1), block: b });
        }
    }
    for i in 0..b {
        let mut form = vec![0; loops * loops];
        for j in 0..b {
            form[i * loops + j] = 1;
        }
        out.push(DivisorComponent { form, label: ComponentLabel::RowSum(i + 1), block: b });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DivisorSelection {
    pub loops: usize,
    pub genus: usize,
    /// Zero-based indices into `sigma_lg(loops, genus)`, ascending.
    pub indices: Vec<usize>,
}

impl DivisorSelection {
    pub fn new(loops: usize, genus: usize, mut indices: Vec<usize>) -> Result<Self, GraphError> {
        let n = sigma_lg(loops, genus)?.len();
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(GraphError::Invalid(format!("component {} out of range 1..={n}", bad + 1)));
        }
        Ok(DivisorSelection { loops, genus, indices })
    }

    pub fn num_components(&self) -> usize {
        let b = self.loops - 2 * self.genus;
        b * (b + 1) / 2
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// `'1'` per selected component, in canonical order.
    pub fn bitmask(&self) -> String {
        (0..self.num_components()).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }

    pub fn from_bitmask(loops: usize, genus: usize, bits: &str) -> Result<Self, GraphError> {
        let n = sigma_lg(loops, genus)?.len();
        if bits.len() != n || !bits.chars().all(|c| c == '0' || c == '1') {
            return Err(GraphError::Invalid(format!(
                "selection {bits:?} is not a string of {n} binary digits"
            )));
        }
        let indices = bits.chars().enumerate().filter(|(_, c)| *c == '1').map(|(i, _)| i).collect();
        Self::new(loops, genus, indices)
    }

    /// Selection from a bitmask integer, bit `i` for component `i`.
    pub fn from_mask(loops: usize, genus: usize, mask: u64) -> Result<Self, GraphError> {
        let indices = (0..64).filter(|i| mask & (1 << i) != 0).collect();
        Self::new(loops, genus, indices)
    }

    pub fn mask(&self) -> u64 {
        self.indices.iter().fold(0, |m, &i| m | (1 << i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pullback {
    pub component: usize,
    pub pulled_back: Vec<i64>,
    /// `(edge, coefficient)` when the pullback is a multiple of one variable.
    pub edge: Option<(usize, i64)>,
    pub selected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaGamma {
    pub selection: DivisorSelection,
    pub table: Vec<Pullback>,
}

/// Components of Σ̂_{ℓ,g} whose pullback along τ is a single edge variable.
/// An edge reached by several components keeps the first one. Every edge
/// must be reached.
pub fn sigma_gamma(g: &FeynmanGraph, fs: &FaceSet, tm: &TauMap) -> Result<SigmaGamma, GraphError> {
    if !tm.is_injective() {
        return Err(GraphError::Certification(format!("τ of {} is not injective", g.name())));
    }
    let comps = sigma_lg(tm.loops, fs.genus)?;
    let mut covered = vec![false; g.num_edges()];
    let mut table = Vec::new();
    let mut indices = Vec::new();
    for (k, c) in comps.iter().enumerate() {
        let pb = tm.pullback(&c.form);
        let nz: Vec<usize> = (0..pb.len()).filter(|&e| pb[e] != 0).collect();
        let edge = match nz[..] {
            [e] => Some((e, pb[e])),
            _ => None,
        };
        let selected = matches!(edge, Some((e, _)) if !covered[e]);
        if let (true, Some((e, _))) = (selected, edge) {
            covered[e] = true;
            indices.push(k);
        }
        table.push(Pullback { component: k, pulled_back: pb, edge, selected });
    }
    if let Some(e) = covered.iter().position(|&c| !c) {
        return Err(GraphError::Certification(format!(
            "no component of Σ̂_{{{},{}}} pulls back to {}",
            tm.loops,
            fs.genus,
            g.var_name(e)
        )));
    }
    let selection = DivisorSelection::new(tm.loops, fs.genus, indices)?;
    Ok(SigmaGamma { selection, table })
}

/// Whether some off-diagonal entry of row `row` is exactly `±t_e`.
pub fn isolated_in_row(tm: &TauMap, row: usize, e: usize) -> bool {
    (0..tm.loops).any(|j| {
        j != row
            && tm.coeff(row, j, e) != 0
            && (0..tm.num_edges()).all(|f| f == e || tm.coeff(row, j, f) == 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::embedding::faces;
    use crate::loops::loop_basis;

    fn face_tau(g: &FeynmanGraph) -> (FaceSet, TauMap) {
        let fs = faces(g).unwrap();
        let b = loop_basis(g, Some(&fs), None).unwrap();
        let tm = tau_matrix(g, &b);
        (fs, tm)
    }

    #[test]
    fn component_lists() {
        let names = |l, g| sigma_lg(l, g).unwrap().iter().map(ToString::to_string).collect::<Vec<_>>();
        assert_eq!(names(3, 0), ["x12", "x13", "x23", "x11+x12+x13", "x21+x22+x23", "x31+x32+x33"]);
        assert_eq!(names(2, 0), ["x12", "x11+x12", "x21+x22"]);
        assert_eq!(names(3, 1), ["x11"]);
        assert!(sigma_lg(1, 1).is_err());
    }

    #[test]
    fn wheel_pullbacks() {
        let g = corpus::tetrahedron();
        let (fs, tm) = face_tau(&g);
        assert_eq!((tm.matrix.nrows(), tm.rank()), (9, 6));
        let s = sigma_gamma(&g, &fs, &tm).unwrap();
        assert_eq!(s.selection.bitmask(), "111111");
        let edges: Vec<(usize, i64)> = s.table.iter().map(|p| p.edge.unwrap()).collect();
        // Edge indices 0..5 carry ids 1..6.
        assert_eq!(edges, [(0, -1), (1, -1), (2, -1), (4, 1), (3, 1), (5, 1)]);
        let b = loop_basis(&g, Some(&fs), None).unwrap();
        assert_eq!(minor_injectivity(&g, &fs, &b), MinorVerdict::Injective);
    }

    #[test]
    fn banana_is_outside_the_supported_class() {
        let g = corpus::banana2();
        let (fs, tm) = face_tau(&g);
        assert_eq!(tm.matrix.nrows(), 1);
        assert!(matches!(sigma_gamma(&g, &fs, &tm), Err(GraphError::Certification(_))));
        let b = loop_basis(&g, Some(&fs), None).unwrap();
        assert_eq!(minor_injectivity(&g, &fs, &b), MinorVerdict::NotApplicable);
    }

    #[test]
    fn selection_strings() {
        let s = DivisorSelection::from_bitmask(3, 0, "110001").unwrap();
        assert_eq!(s.indices, vec![0, 1, 5]);
        assert_eq!(s.bitmask(), "110001");
        assert_eq!(DivisorSelection::from_mask(3, 0, s.mask()).unwrap(), s);
        assert!(DivisorSelection::from_bitmask(3, 0, "11").is_err());
    }
}
