use detloci_algebra::{FqMatrix, IntPoly, LPoly, RatMatrix};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reduction_never_raises_rank(m in matrix(4, 5), q in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let r = RatMatrix::from_i64_rows(5, &m).unwrap();
        let f = FqMatrix::from_rational(&r, q).unwrap();
        prop_assert!(f.rank() <= r.rank());
    }

    #[test]
    fn determinants_reduce(m in matrix(4, 4), q in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
        let r = RatMatrix::from_i64_rows(4, &m).unwrap();
        let d = r.determinant().unwrap();
        let f = FqMatrix::from_rational(&r, q).unwrap();
        let expected = detloci_algebra::fq::reduce_rational(&d, q).unwrap();
        prop_assert_eq!(f.determinant().unwrap(), expected);
    }

    #[test]
    fn kernel_is_annihilated(m in matrix(3, 5)) {
        let r = RatMatrix::from_i64_rows(5, &m).unwrap();
        let k = r.kernel();
        prop_assert_eq!(k.nrows() + r.rank(), 5);
        prop_assert!(r.mul(&k.transpose()).unwrap().is_zero());
    }

    #[test]
    fn lpoly_evaluation_is_a_ring_map(a in prop::collection::vec(-4i64..=4, 0..5), b in prop::collection::vec(-4i64..=4, 0..5)) {
        let p = |c: &[i64]| -> LPoly { c.iter().enumerate().map(|(k, &x)| LPoly::constant(x) * LPoly::monomial(k as i64)).sum() };
        let (pa, pb) = (p(&a), p(&b));
        for q in [2u64, 3, 7] {
            let ea = pa.eval_u64(q).unwrap();
            let eb = pb.eval_u64(q).unwrap();
            prop_assert_eq!((&pa * &pb).eval_u64(q).unwrap(), &ea * &eb);
            prop_assert_eq!((&pa + &pb).eval_u64(q).unwrap(), ea + eb);
        }
    }
}

#[test]
fn polynomial_determinant_of_a_laplacian() {
    let vars: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let v = |n: &str| IntPoly::var(vars.clone(), n).unwrap();
    // Triangle with edge weights a, b, c: reduced Laplacian determinant.
    let rows = vec![vec![&v("a") + &v("c"), -&v("a")], vec![-&v("a"), &v("a") + &v("b")]];
    let m = detloci_algebra::PolyMatrix::new(vars.clone(), rows).unwrap();
    let d = detloci_algebra::poly_det(&m).unwrap();
    let expected = &(&(&v("a") * &v("b")) + &(&v("a") * &v("c"))) + &(&v("b") * &v("c"));
    assert_eq!(d, expected);
}
