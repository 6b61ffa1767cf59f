//! The graph polynomials Ψ_Γ and P_Γ.

use std::collections::BTreeMap;

use detloci_algebra::{poly_det, BigInt, BigRational, IntPoly, PolyMatrix, RatPoly};
use num_traits::{One, Zero};

use crate::graph::FeynmanGraph;
use crate::loops::LoopBasis;
use crate::trees::{cut_sets, cut_sides, spanning_trees};
use crate::GraphError;

/// `Σ_T Π_{e∉T} t_e` over spanning trees `T`.
pub fn psi_from_trees(g: &FeynmanGraph) -> IntPoly {
    let vars = g.var_names();
    let n = g.num_edges();
    let terms = spanning_trees(g).into_iter().map(|tree| {
        let e = (0..n).map(|i| u32::from(!tree.contains(&i))).collect();
        (e, BigInt::one())
    });
    IntPoly::from_terms(vars, terms).expect("exponent vectors have length n")
}

/// `M_Γ(t) = ηᵀ Λ η`, entry `(k, r) = Σ_e t_e η_ek η_er`.
pub fn m_gamma(g: &FeynmanGraph, basis: &LoopBasis) -> PolyMatrix<BigInt> {
    let vars = g.var_names();
    let ell = basis.loops();
    let entry = |k: usize, r: usize| {
        let terms = (0..g.num_edges()).filter_map(|e| {
            let c = basis.eta[e][k] * basis.eta[e][r];
            (c != 0).then(|| {
                let mut x = vec![0; g.num_edges()];
                x[e] = 1;
                (x, BigInt::from(c))
            })
        });
        IntPoly::from_terms(vars.clone(), terms).expect("length n")
    };
    let rows = (0..ell).map(|k| (0..ell).map(|r| entry(k, r)).collect()).collect();
    PolyMatrix::new(vars.clone(), rows).expect("entries share the edge variables")
}

/// `det M_Γ(t)`, computed without consulting spanning trees.
pub fn det_m_gamma(g: &FeynmanGraph, basis: &LoopBasis) -> Result<IntPoly, GraphError> {
    Ok(poly_det(&m_gamma(g, basis))?)
}

/// `det M_Γ(t)`, checked against the spanning-tree sum.
pub fn psi_from_det(g: &FeynmanGraph, basis: &LoopBasis) -> Result<IntPoly, GraphError> {
    let det = det_m_gamma(g, basis)?;
    if det != psi_from_trees(g) {
        return Err(GraphError::Internal(format!(
            "det M_Γ differs from the spanning-tree sum for {}",
            g.name()
        )));
    }
    Ok(det)
}

/// External momenta in `Q^D`, keyed by external edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentumData {
    dimension: usize,
    assignments: BTreeMap<String, Vec<BigRational>>,
}

impl MomentumData {
    pub fn new(
        dimension: usize,
        assignments: BTreeMap<String, Vec<BigRational>>,
    ) -> Result<Self, GraphError> {
        if dimension == 0 {
            return Err(GraphError::Momentum("dimension must be positive".into()));
        }
        for (id, p) in &assignments {
            if p.len() != dimension {
                return Err(GraphError::Momentum(format!(
                    "momentum of {id:?} has {} components, expected {dimension}",
                    p.len()
                )));
            }
        }
        let mut total = vec![BigRational::zero(); dimension];
        for p in assignments.values() {
            for (t, x) in total.iter_mut().zip(p) {
                *t += x;
            }
        }
        if total.iter().any(|x| !x.is_zero()) {
            return Err(GraphError::Momentum("external momenta do not sum to zero".into()));
        }
        Ok(MomentumData { dimension, assignments })
    }

    /// Momenta stored on the graph's external legs, if any leg has one.
    pub fn from_graph(g: &FeynmanGraph) -> Result<Option<Self>, GraphError> {
        let given: BTreeMap<String, Vec<BigRational>> =
            g.external().iter().filter_map(|x| Some((x.id.clone(), x.momentum.clone()?))).collect();
        let Some(dim) = given.values().next().map(Vec::len) else {
            return Ok(None);
        };
        Self::new(dim, given).map(Some)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn momentum(&self, id: &str) -> Option<&[BigRational]> {
        self.assignments.get(id).map(Vec::as_slice)
    }
}

/// `Σ_C s_C Π_{e∈C} t_e` over cut-sets, `s_C = (Σ_{v∈side} P_v)²` with the
/// Euclidean inner product. Both sides of every cut are evaluated and must agree.
pub fn p_gamma(g: &FeynmanGraph, momenta: &MomentumData) -> Result<RatPoly, GraphError> {
    for id in momenta.assignments.keys() {
        if !g.external().iter().any(|x| &x.id == id) {
            return Err(GraphError::Momentum(format!("{id:?} is not an external edge")));
        }
    }
    let dim = momenta.dimension;
    let mut pv = vec![vec![BigRational::zero(); dim]; g.num_vertices()];
    for x in g.external() {
        if let Some(p) = momenta.momentum(&x.id) {
            for (a, b) in pv[x.at].iter_mut().zip(p) {
                *a += b;
            }
        }
    }
    let square = |side: &[usize]| -> BigRational {
        let mut s = vec![BigRational::zero(); dim];
        for &v in side {
            for (a, b) in s.iter_mut().zip(&pv[v]) {
                *a += b;
            }
        }
        s.iter().map(|x| x * x).fold(BigRational::zero(), |a, b| a + b)
    };
    let n = g.num_edges();
    let mut terms = Vec::new();
    for cut in cut_sets(g) {
        let (a, b) = cut_sides(g, &cut);
        let (sa, sb) = (square(&a), square(&b));
        if sa != sb {
            return Err(GraphError::Internal(format!("s_C differs between the two sides of cut {cut:?}")));
        }
        let e = (0..n).map(|i| u32::from(cut.contains(&i))).collect();
        terms.push((e, sa));
    }
    Ok(RatPoly::from_terms(g.var_names(), terms)?)
}
