//! Spanning trees, cut-sets and the matrix-tree count.

use detloci_algebra::{BigInt, BigRational, RatMatrix};

use crate::graph::{count_components, FeynmanGraph, UnionFind};

/// All spanning trees as sorted edge-index lists, in lexicographic order.
pub fn spanning_trees(g: &FeynmanGraph) -> Vec<Vec<usize>> {
    let need = g.num_vertices() - 1;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(need);
    grow(g, 0, &mut chosen, &UnionFind::new(g.num_vertices()), need, &mut out);
    out
}

fn grow(
    g: &FeynmanGraph,
    next: usize,
    chosen: &mut Vec<usize>,
    uf: &UnionFind,
    need: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == need {
        out.push(chosen.clone());
        return;
    }
    if g.num_edges() - next < need - chosen.len() {
        return;
    }
    // Prune when the chosen edges plus all remaining ones cannot connect.
    let reach = count_components(
        g.num_vertices(),
        chosen.iter().chain(&(next..g.num_edges()).collect::<Vec<_>>()).map(|&e| {
            let ed = g.edge(e);
            (ed.src, ed.dst)
        }),
    );
    if reach != 1 {
        return;
    }
    let e = g.edge(next);
    let mut with = uf.clone();
    if with.union(e.src, e.dst) {
        chosen.push(next);
        grow(g, next + 1, chosen, &with, need, out);
        chosen.pop();
    }
    grow(g, next + 1, chosen, uf, need, out);
}

/// Edge subsets of size `ℓ + 1` whose removal leaves exactly two components.
pub fn cut_sets(g: &FeynmanGraph) -> Vec<Vec<usize>> {
    let k = g.loops() + 1;
    let n = g.num_edges();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        let kept = (0..n).filter(|e| !comb.contains(e)).map(|e| (g.edge(e).src, g.edge(e).dst));
        if count_components(g.num_vertices(), kept) == 2 {
            out.push(comb.clone());
        }
        // Next combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if comb[i] < n - k + i {
                comb[i] += 1;
                for j in i + 1..k {
                    comb[j] = comb[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The two vertex sides left after removing `cut`, the side holding vertex 0 first.
pub fn cut_sides(g: &FeynmanGraph, cut: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut uf = UnionFind::new(g.num_vertices());
    for (e, ed) in g.edges().iter().enumerate() {
        if !cut.contains(&e) {
            uf.union(ed.src, ed.dst);
        }
    }
    let root = uf.find(0);
    (0..g.num_vertices()).partition(|&v| uf.find(v) == root)
}

/// Determinant of the reduced Laplacian.
pub fn matrix_tree_count(g: &FeynmanGraph) -> BigInt {
    let m = g.num_vertices();
    if m == 1 {
        return BigInt::from(1);
    }
    let mut lap = RatMatrix::zeros(m - 1, m - 1);
    let bump = |lap: &mut RatMatrix, i: usize, j: usize, by: i64| {
        if i > 0 && j > 0 {
            let v = lap.get(i - 1, j - 1) + BigRational::from_integer(by.into());
            lap.set(i - 1, j - 1, v);
        }
    };
    for e in g.edges().iter().filter(|e| !e.is_looping()) {
        bump(&mut lap, e.src, e.src, 1);
        bump(&mut lap, e.dst, e.dst, 1);
        bump(&mut lap, e.src, e.dst, -1);
        bump(&mut lap, e.dst, e.src, -1);
    }
    lap.determinant().expect("square").to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn small_tree_counts() {
        assert_eq!(spanning_trees(&corpus::banana2()), vec![vec![0], vec![1]]);
        assert_eq!(spanning_trees(&corpus::tetrahedron()).len(), 16);
        assert_eq!(spanning_trees(&corpus::single_loop()), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn small_cut_sets() {
        assert_eq!(cut_sets(&corpus::banana2()), vec![vec![0, 1]]);
        assert_eq!(cut_sets(&corpus::triangle()), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(cut_sets(&corpus::single_loop()).is_empty());
    }

    #[test]
    fn matrix_tree_theorem_on_the_corpus() {
        for g in corpus::named() {
            assert_eq!(BigInt::from(spanning_trees(&g).len()), matrix_tree_count(&g), "{}", g.name());
        }
    }
}
