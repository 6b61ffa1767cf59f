use detloci_algebra::BigInt;
use detloci_algebra::IntPoly;
use detloci_graph::{
    add_looping_edge, certify_injectivity, connectivity_report, corpus, faces, loop_basis, matrix_tree_count,
    minor_injectivity, psi_from_det, psi_from_trees, remove_looping_edges, spanning_trees, subdivide_edge,
    tau_matrix, vertex_splittings, FeynmanGraph, MinorVerdict,
};
use proptest::prelude::*;

fn tree_psi_equals_det(g: &FeynmanGraph) {
    let basis = loop_basis(g, None, None).unwrap();
    assert_eq!(psi_from_trees(g), psi_from_det(g, &basis).unwrap(), "{}", g.name());
}

#[test]
fn matrix_tree_on_corpus() {
    for g in corpus::named() {
        tree_psi_equals_det(&g);
        assert_eq!(BigInt::from(spanning_trees(&g).len()), matrix_tree_count(&g), "{}", g.name());
        if g.rotation().is_some() {
            let fs = faces(&g).unwrap();
            let b = loop_basis(&g, Some(&fs), None).unwrap();
            assert_eq!(psi_from_trees(&g), psi_from_det(&g, &b).unwrap(), "{} face basis", g.name());
        }
    }
}

#[test]
fn matrix_tree_on_random_multigraphs() {
    let mut rng = corpus::rng(4);
    for _ in 0..200 {
        let g = corpus::random_multigraph(&mut rng, 10);
        tree_psi_equals_det(&g);
    }
}

#[test]
fn psi_does_not_depend_on_the_external_face() {
    for g in [corpus::tetrahedron(), corpus::threeloop(), corpus::cube()] {
        let fs = faces(&g).unwrap();
        let reference = psi_from_trees(&g);
        for ext in 0..fs.len() {
            let b = loop_basis(&g, Some(&fs), Some(ext)).unwrap();
            assert_eq!(psi_from_det(&g, &b).unwrap(), reference);
        }
    }
}

#[test]
fn splitting_characterizes_two_vertex_connectivity() {
    let graphs = corpus::small_graphs(6, 9);
    assert!(graphs.len() > 100);
    for g in graphs.iter().filter(|g| g.num_vertices() >= 3 && !g.has_looping_edges()) {
        let all_1pi = (0..g.num_vertices())
            .filter(|&v| g.degree(v) >= 2)
            .flat_map(|v| vertex_splittings(g, v).unwrap())
            .all(|h| connectivity_report(&h).is_1pi);
        let has_leaf = (0..g.num_vertices()).any(|v| g.degree(v) < 2);
        let rep = connectivity_report(g);
        assert_eq!(rep.is_2_vertex, all_1pi && !has_leaf, "{}", g.name());
    }
}

#[test]
fn connectivity_implications() {
    for g in corpus::small_graphs(6, 9) {
        let r = connectivity_report(&g);
        if r.is_2_vertex {
            assert!(r.is_1pi, "{}", g.name());
        }
        if r.is_3_vertex {
            assert!(r.is_3_edge, "{}", g.name());
        }
    }
}

fn certified_implies_injective(g: &FeynmanGraph) -> bool {
    let fs = faces(g).unwrap();
    let rep = certify_injectivity(g, &fs).unwrap();
    let injective = tau_matrix(g, &loop_basis(g, Some(&fs), None).unwrap()).is_injective();
    assert!(rep.certified.is_none() || injective, "{} certified but not injective", g.name());
    rep.certified.is_some()
}

#[test]
fn certification_is_sound() {
    for g in corpus::named() {
        certified_implies_injective(&g);
    }
    let mut rng = corpus::rng(5);
    let mut certified = 0;
    for _ in 0..200 {
        certified += usize::from(certified_implies_injective(&corpus::random_planar(&mut rng)));
    }
    assert!(certified > 0);
    assert!(certified_implies_injective(&corpus::tetrahedron()));
    assert!(certified_implies_injective(&corpus::threeloop()));
    for g in [corpus::loop_bridge(), corpus::dumbbell()] {
        let tm = tau_matrix(&g, &loop_basis(&g, Some(&faces(&g).unwrap()), None).unwrap());
        assert!(!tm.is_injective(), "{}", g.name());
    }
}

fn subdivision_identity(g: &FeynmanGraph) {
    let psi = psi_from_trees(g);
    for e in 0..g.num_edges() {
        let id = g.edge(e).id.clone();
        let h = subdivide_edge(g, &id).unwrap();
        let (a, b) = (h.var_name(e), h.var_name(h.num_edges() - 1));
        let vars = h.var_names();
        let sum = &IntPoly::var(vars.clone(), &a).unwrap() + &IntPoly::var(vars, &b).unwrap();
        assert_eq!(psi_from_trees(&h), psi.substitute(&g.var_name(e), &sum).unwrap(), "{} / {id}", g.name());
    }
}

fn looping_identity(g: &FeynmanGraph) {
    let psi = psi_from_trees(g);
    for v in g.vertices().to_vec() {
        let (h, e) = add_looping_edge(g, &v).unwrap();
        let t = IntPoly::var(h.var_names(), &h.var_name(e)).unwrap();
        assert_eq!(psi_from_trees(&h), &t * &psi, "{} + loop at {v}", g.name());
    }
}

#[test]
fn surgery_identities_on_corpus() {
    for g in corpus::named().into_iter().filter(|g| g.num_edges() <= 10) {
        subdivision_identity(&g);
        looping_identity(&g);
    }
}

fn injective(g: &FeynmanGraph) -> bool {
    match g.rotation() {
        Some(_) => tau_matrix(g, &loop_basis(g, Some(&faces(g).unwrap()), None).unwrap()).is_injective(),
        None => tau_matrix(g, &loop_basis(g, None, None).unwrap()).is_injective(),
    }
}

#[test]
fn looping_edges_do_not_change_injectivity() {
    let mut graphs = corpus::named();
    let mut rng = corpus::rng(6);
    graphs.extend((0..50).map(|_| corpus::random_planar(&mut rng)));
    for g in graphs {
        let base = injective(&g);
        let v = g.vertices()[0].clone();
        let (h, _) = add_looping_edge(&g, &v).unwrap();
        assert_eq!(injective(&h), base, "{} + loop", g.name());
        let (h2, _) = add_looping_edge(&h, &v).unwrap();
        assert_eq!(injective(&h2), base, "{} + 2 loops", g.name());
        let stripped = remove_looping_edges(&g);
        if stripped.num_edges() > 0 {
            assert_eq!(injective(&stripped), base, "{} stripped", g.name());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_multigraph_identities(seed in any::<u64>()) {
        let g = corpus::random_multigraph(&mut corpus::rng(seed), 7);
        tree_psi_equals_det(&g);
        let psi = psi_from_trees(&g);
        prop_assert_eq!(psi.num_terms(), spanning_trees(&g).len());
        if psi.num_terms() > 0 {
            prop_assert_eq!(psi.total_degree(), Some(g.loops() as u32));
        }
        looping_identity(&g);
    }

    #[test]
    fn planar_graphs_keep_euler(seed in any::<u64>()) {
        let g = corpus::random_planar(&mut corpus::rng(seed));
        let fs = faces(&g).unwrap();
        prop_assert_eq!(fs.genus, 0);
        prop_assert_eq!(g.num_vertices() + fs.len(), g.num_edges() + 2);
        subdivision_identity(&g);
    }
}

fn minor_and_full(g: &FeynmanGraph) -> (MinorVerdict, bool) {
    let fs = faces(g).unwrap();
    let b = loop_basis(g, Some(&fs), None).unwrap();
    (minor_injectivity(g, &fs, &b), tau_matrix(g, &b).is_injective())
}

#[test]
fn face_minor_decides_injectivity_in_genus_zero() {
    let mut rng = corpus::rng(9);
    let mut graphs: Vec<FeynmanGraph> =
        corpus::named().into_iter().filter(|g| faces(g).unwrap().genus == 0).collect();
    graphs.extend((0..300).map(|_| corpus::random_planar(&mut rng)));
    let mut applicable = 0;
    for g in &graphs {
        match minor_and_full(g) {
            (MinorVerdict::NotApplicable, _) => {}
            (v, full) => {
                applicable += 1;
                assert_eq!(v == MinorVerdict::Injective, full, "{}", g.name());
            }
        }
    }
    assert!(applicable >= 5);
}

#[test]
fn toroidal_embeddings_can_defeat_the_face_minor() {
    // τ is injective on K5 and K3,3, but the block of the four (resp. two)
    // face loops misses some edge variables.
    for g in [corpus::k5(), corpus::k33()] {
        assert_eq!(minor_and_full(&g), (MinorVerdict::NotInjective, true), "{}", g.name());
    }
}

#[test]
fn a_lone_looping_edge_is_closed_and_certified() {
    let g = corpus::single_loop();
    let fs = faces(&g).unwrap();
    assert!(detloci_graph::is_closed_2cell(&g, &fs).closed);
    let rep = certify_injectivity(&g, &fs).unwrap();
    assert_eq!(rep.certified.as_deref(), Some("row-isolation chain"));
    assert!(
        !detloci_graph::is_closed_2cell(&corpus::loop_bridge(), &faces(&corpus::loop_bridge()).unwrap())
            .closed
    );
}
