//! Named example graphs and seeded generators for property tests.

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{faces, search_embeddings};
use crate::graph::{dart, Dart, Edge, End, FeynmanGraph};

use End::{Dst as D, Src as S};

fn build(name: &str, vertices: &[&str], edges: &[(&str, &str, &str)]) -> FeynmanGraph {
    FeynmanGraph::new(name, vertices, edges).expect("corpus graphs are valid")
}

fn rotate(g: FeynmanGraph, rot: &[(&str, Vec<(&str, End)>)]) -> FeynmanGraph {
    g.with_rotation(rot).expect("corpus rotations are valid")
}

/// Two vertices joined by two parallel edges.
pub fn banana2() -> FeynmanGraph {
    let g = build("banana2", &["A", "B"], &[("1", "A", "B"), ("2", "A", "B")]);
    rotate(g, &[("A", vec![("1", S), ("2", S)]), ("B", vec![("1", D), ("2", D)])])
}

pub fn triangle() -> FeynmanGraph {
    let g = build("triangle", &["A", "B", "C"], &[("1", "A", "B"), ("2", "B", "C"), ("3", "C", "A")]);
    rotate(
        g,
        &[("A", vec![("1", S), ("3", D)]), ("B", vec![("2", S), ("1", D)]), ("C", vec![("3", S), ("2", D)])],
    )
}

/// Two looping edges joined by a bridge.
pub fn dumbbell() -> FeynmanGraph {
    let g = build("dumbbell", &["A", "B"], &[("1", "A", "A"), ("2", "A", "B"), ("3", "B", "B")]);
    rotate(g, &[("A", vec![("1", S), ("1", D), ("2", S)]), ("B", vec![("2", D), ("3", S), ("3", D)])])
}

/// Two vertices, a connecting edge and one looping edge.
pub fn loop_bridge() -> FeynmanGraph {
    let g = build("loop_bridge", &["A", "B"], &[("1", "A", "B"), ("2", "B", "B")]);
    rotate(g, &[("A", vec![("1", S)]), ("B", vec![("1", D), ("2", S), ("2", D)])])
}

pub fn single_loop() -> FeynmanGraph {
    let g = build("single_loop", &["v"], &[("1", "v", "v")]);
    rotate(g, &[("v", vec![("1", S), ("1", D)])])
}

/// The wheel with three spokes: hub `O`, rim `P, Q, R`, spokes 1–3 and rim
/// edges 4–6. The internal faces come out as {1,2,5}, {1,3,4}, {2,3,6} and
/// the rim {4,5,6} is the last (external) face.
pub fn tetrahedron() -> FeynmanGraph {
    let g = build(
        "wheel3",
        &["O", "P", "Q", "R"],
        &[
            ("1", "O", "P"),
            ("2", "O", "Q"),
            ("3", "O", "R"),
            ("4", "P", "R"),
            ("5", "P", "Q"),
            ("6", "Q", "R"),
        ],
    );
    rotate(
        g,
        &[
            ("O", vec![("2", S), ("1", S), ("3", S)]),
            ("P", vec![("1", D), ("5", S), ("4", S)]),
            ("Q", vec![("5", D), ("2", D), ("6", S)]),
            ("R", vec![("3", D), ("4", D), ("6", D)]),
        ],
    )
}

/// Three-loop graph with a digon face: faces {1,2,4}, {1,3,5}, the digon
/// {2,3} and the external digon {4,5}.
pub fn threeloop() -> FeynmanGraph {
    let g = build(
        "threeloop",
        &["A", "B", "C"],
        &[("1", "A", "C"), ("2", "C", "B"), ("3", "C", "B"), ("4", "A", "B"), ("5", "A", "B")],
    );
    rotate(
        g,
        &[
            ("A", vec![("4", S), ("1", S), ("5", S)]),
            ("C", vec![("1", D), ("2", S), ("3", S)]),
            ("B", vec![("2", D), ("4", D), ("5", D), ("3", D)]),
        ],
    )
}

fn searched(g: FeynmanGraph, cell: &'static OnceLock<FeynmanGraph>) -> FeynmanGraph {
    cell.get_or_init(|| {
        let s = search_embeddings(&g).expect("small search");
        g.with_rotation_darts(s.best).expect("search output is valid")
    })
    .clone()
}

/// The cube graph: inner square `A B C D` (edges 1–4), outer square
/// `a b c d`. The face `D A a d` has edges 4, 5, 6, 7.
pub fn cube() -> FeynmanGraph {
    static CELL: OnceLock<FeynmanGraph> = OnceLock::new();
    let g = build(
        "cube",
        &["A", "B", "C", "D", "a", "b", "c", "d"],
        &[
            ("1", "A", "B"),
            ("2", "B", "C"),
            ("3", "C", "D"),
            ("4", "D", "A"),
            ("5", "A", "a"),
            ("6", "d", "D"),
            ("7", "a", "d"),
            ("8", "B", "b"),
            ("9", "a", "b"),
            ("10", "C", "c"),
            ("11", "b", "c"),
            ("12", "c", "d"),
        ],
    );
    searched(g, &CELL)
}

pub fn k5() -> FeynmanGraph {
    static CELL: OnceLock<FeynmanGraph> = OnceLock::new();
    let vs = ["1", "2", "3", "4", "5"];
    let ids: Vec<String> = (1..=10).map(|k| k.to_string()).collect();
    let mut edges = vec![];
    for i in 0..5 {
        for j in i + 1..5 {
            edges.push((ids[edges.len()].as_str(), vs[i], vs[j]));
        }
    }
    searched(build("K5", &vs, &edges), &CELL)
}

pub fn k33() -> FeynmanGraph {
    static CELL: OnceLock<FeynmanGraph> = OnceLock::new();
    let vs = ["a1", "a2", "a3", "b1", "b2", "b3"];
    let ids: Vec<String> = (1..=9).map(|k| k.to_string()).collect();
    let mut edges = vec![];
    for i in 0..3 {
        for j in 3..6 {
            edges.push((ids[edges.len()].as_str(), vs[i], vs[j]));
        }
    }
    searched(build("K33", &vs, &edges), &CELL)
}

/// The fixed corpus, every graph with a rotation system.
pub fn named() -> Vec<FeynmanGraph> {
    vec![
        banana2(),
        triangle(),
        dumbbell(),
        loop_bridge(),
        single_loop(),
        tetrahedron(),
        threeloop(),
        cube(),
        k5(),
        k33(),
    ]
}

pub fn by_name(name: &str) -> Option<FeynmanGraph> {
    named().into_iter().find(|g| g.name() == name)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected multigraph with at most `max_edges` internal edges, possibly
/// with looping and parallel edges, without a rotation system.
pub fn random_multigraph(rng: &mut impl Rng, max_edges: usize) -> FeynmanGraph {
    let nv = rng.gen_range(1..=6.min(max_edges + 1));
    let ne = rng.gen_range(nv - 1..=max_edges);
    let mut edges: Vec<(usize, usize)> = (1..nv).map(|i| (i, rng.gen_range(0..i))).collect();
    while edges.len() < ne {
        let a = rng.gen_range(0..nv);
        let b = if rng.gen_bool(0.15) { a } else { rng.gen_range(0..nv) };
        edges.push((a, b));
    }
    edges.shuffle(rng);
    let vertices: Vec<String> = (0..nv).map(|v| format!("v{v}")).collect();
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(k, (a, b))| {
            let (src, dst) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            Edge { id: (k + 1).to_string(), src, dst }
        })
        .collect();
    FeynmanGraph::from_parts("random".into(), vertices, edges, vec![], None)
        .expect("connected by construction")
}

/// A plane graph grown from a cycle by chords across faces, edge
/// subdivisions, pendant vertices and looping edges, with its rotation system.
pub fn random_planar(rng: &mut impl Rng) -> FeynmanGraph {
    let k = rng.gen_range(3..=5);
    let mut vertices: Vec<String> = (0..k).map(|v| format!("v{v}")).collect();
    let mut edges: Vec<Edge> =
        (0..k).map(|i| Edge { id: (i + 1).to_string(), src: i, dst: (i + 1) % k }).collect();
    let mut order: Vec<Vec<Dart>> =
        (0..k).map(|i| vec![dart(i, End::Src), dart((i + k - 1) % k, End::Dst)]).collect();
    let steps = rng.gen_range(0..=6);
    for _ in 0..steps {
        let g = FeynmanGraph::from_parts(
            "tmp".into(),
            vertices.clone(),
            edges.clone(),
            vec![],
            Some(order.clone()),
        )
        .expect("valid by construction");
        let e = edges.len();
        let id = (e + 1).to_string();
        match rng.gen_range(0..10) {
            0..=5 => {
                let fs = faces(&g).expect("valid rotation");
                let face = &fs.faces[rng.gen_range(0..fs.len())];
                let positions: Vec<(usize, usize)> = (0..face.len())
                    .flat_map(|a| (0..face.len()).map(move |b| (a, b)))
                    .filter(|&(a, b)| a < b && g.tail(face.darts[a]) != g.tail(face.darts[b]))
                    .collect();
                let Some(&(a, b)) = positions.choose(rng) else { continue };
                let (da, db) = (face.darts[a], face.darts[b]);
                let (u, w) = (g.tail(da), g.tail(db));
                edges.push(Edge { id, src: u, dst: w });
                insert_before(&mut order[u], da, dart(e, End::Src));
                insert_before(&mut order[w], db, dart(e, End::Dst));
            }
            6 | 7 => {
                let target = rng.gen_range(0..e);
                let old = edges[target].clone();
                let m = vertices.len();
                vertices.push(format!("v{m}"));
                edges[target].dst = m;
                edges.push(Edge { id, src: m, dst: old.dst });
                for d in order[old.dst].iter_mut() {
                    if *d == dart(target, End::Dst) {
                        *d = dart(e, End::Dst);
                    }
                }
                order.push(vec![dart(target, End::Dst), dart(e, End::Src)]);
            }
            8 => {
                let v = rng.gen_range(0..vertices.len());
                let m = vertices.len();
                vertices.push(format!("v{m}"));
                edges.push(Edge { id, src: v, dst: m });
                let pos = rng.gen_range(0..=order[v].len());
                order[v].insert(pos, dart(e, End::Src));
                order.push(vec![dart(e, End::Dst)]);
            }
            _ => {
                let v = rng.gen_range(0..vertices.len());
                edges.push(Edge { id, src: v, dst: v });
                let pos = rng.gen_range(0..=order[v].len());
                order[v].insert(pos, dart(e, End::Dst));
                order[v].insert(pos, dart(e, End::Src));
            }
        }
    }
    FeynmanGraph::from_parts("random_planar".into(), vertices, edges, vec![], Some(order))
        .expect("valid by construction")
}

fn insert_before(cycle: &mut Vec<Dart>, anchor: Dart, new: Dart) {
    let pos = cycle.iter().position(|&d| d == anchor).expect("anchor at this vertex");
    cycle.insert(pos, new);
}

/// Connected simple graphs on 3–`max_vertices` labelled vertices with at
/// most `max_edges` edges, followed by connected loopless multigraphs on
/// at most four vertices with edge multiplicities up to two.
pub fn small_graphs(max_vertices: usize, max_edges: usize) -> Vec<FeynmanGraph> {
    let mut out = Vec::new();
    for nv in 3..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..nv).flat_map(|i| (i + 1..nv).map(move |j| (i, j))).collect();
        for mask in 0u64..(1 << pairs.len()) {
            if mask.count_ones() as usize > max_edges || (mask.count_ones() as usize) < nv - 1 {
                continue;
            }
            let chosen: Vec<(usize, usize)> =
                (0..pairs.len()).filter(|&k| mask & (1 << k) != 0).map(|k| pairs[k]).collect();
            if let Some(g) = from_pairs(&format!("simple{nv}:{mask}"), nv, &chosen) {
                out.push(g);
            }
        }
    }
    for nv in 2..=4usize {
        let pairs: Vec<(usize, usize)> = (0..nv).flat_map(|i| (i + 1..nv).map(move |j| (i, j))).collect();
        let total = 3usize.pow(pairs.len() as u32);
        for code in 0..total {
            let mut c = code;
            let mut chosen = vec![];
            let mut has_multi = false;
            for &p in &pairs {
                let mult = c % 3;
                c /= 3;
                has_multi |= mult == 2;
                chosen.extend(std::iter::repeat_n(p, mult));
            }
            if has_multi && chosen.len() <= max_edges {
                if let Some(g) = from_pairs(&format!("multi{nv}:{code}"), nv, &chosen) {
                    out.push(g);
                }
            }
        }
    }
    out
}

fn from_pairs(name: &str, nv: usize, pairs: &[(usize, usize)]) -> Option<FeynmanGraph> {
    let vertices = (0..nv).map(|v| format!("v{v}")).collect();
    let edges = pairs
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| Edge { id: (k + 1).to_string(), src: a, dst: b })
        .collect();
    FeynmanGraph::from_parts(name.into(), vertices, edges, vec![], None).ok()
}
