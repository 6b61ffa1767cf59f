use detloci_algebra::{BigInt, LPoly, RatMatrix, SubspaceConfig};
use detloci_classes::{
    det_complement_class, det_hypersurface_class, frame_class, frame_class_r2, frame_class_r3, permuted,
};
use detloci_oracle::{count_det_complement, count_frames, OracleError, DEFAULT_BUDGET};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn at(p: &LPoly, q: u64) -> u64 {
    u64::try_from(p.eval_u64(q).unwrap()).unwrap()
}

/// Spaces spanned by up to `ambient` random rows with entries in −1..=1.
fn random_config(rng: &mut impl Rng, ambient: usize, r: usize) -> SubspaceConfig {
    let spaces = (0..r)
        .map(|_| {
            let k = rng.gen_range(0..=ambient);
            let rows: Vec<Vec<i64>> =
                (0..k).map(|_| (0..ambient).map(|_| rng.gen_range(-1..=1)).collect()).collect();
            RatMatrix::from_i64_rows(ambient, &rows).unwrap()
        })
        .collect();
    SubspaceConfig::new(ambient, spaces).unwrap()
}

fn coordinate_configs(ambient: usize, r: usize) -> impl Iterator<Item = SubspaceConfig> {
    let masks = 1usize << ambient;
    (0..masks.pow(r as u32)).map(move |mut code| {
        let m: Vec<Vec<bool>> = (0..r)
            .map(|_| {
                let mask = code % masks;
                code /= masks;
                (0..ambient).map(|k| mask & (1 << k) != 0).collect()
            })
            .collect();
        SubspaceConfig::coordinate(ambient, &m).unwrap()
    })
}

#[test]
fn gl_sizes_from_the_class() {
    for loops in 1..=5 {
        let affine = det_complement_class(loops, false).unwrap();
        let projective = det_complement_class(loops, true).unwrap();
        assert_eq!(projective * LPoly::binomial(1, 0), affine);
        let hyper = det_hypersurface_class(loops, false).unwrap();
        assert_eq!(
            hyper + det_complement_class(loops, false).unwrap(),
            LPoly::monomial((loops * loops) as i64)
        );
        for q in [2u64, 3, 5] {
            let n = loops as u32;
            let expected: BigInt = (0..n).map(|i| BigInt::from(q).pow(n) - BigInt::from(q).pow(i)).product();
            assert_eq!(affine.eval_u64(q).unwrap(), expected);
        }
    }
}

#[test]
fn det_complement_matches_enumeration() {
    let cases = (1..=4).map(|l| (l, 2)).chain((1..=3).map(|l| (l, 3))).chain((1..=3).map(|l| (l, 5)));
    for (loops, q) in cases {
        let class = det_complement_class(loops, false).unwrap();
        assert_eq!(at(&class, q), count_det_complement(loops, q, DEFAULT_BUDGET).unwrap(), "l={loops} q={q}");
    }
}

#[test]
fn two_frames_on_all_coordinate_configs() {
    for ambient in 1..=4 {
        for c in coordinate_configs(ambient, 2) {
            let class = frame_class_r2(c.dim(0), c.dim(1), c.pair_dim(0, 1)).unwrap();
            for q in [2, 3] {
                assert_eq!(at(&class, q), count_frames(&c, q, DEFAULT_BUDGET).unwrap(), "{:?}", c.dims());
            }
        }
    }
}

#[test]
fn three_frames_on_coordinate_configs() {
    for ambient in 1..=3 {
        for c in coordinate_configs(ambient, 3) {
            let class = frame_class_r3(&c).unwrap();
            assert_eq!(at(&class, 2), count_frames(&c, 2, DEFAULT_BUDGET).unwrap(), "{:?}", c.dims());
        }
    }
}

#[test]
fn three_frames_on_random_configs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 100 {
        let ambient = rng.gen_range(1..=4);
        let c = random_config(&mut rng, ambient, 3);
        let class = frame_class_r3(&c).unwrap();
        let counts: Result<Vec<u64>, OracleError> =
            [2, 3].iter().map(|&q| count_frames(&c, q, DEFAULT_BUDGET)).collect();
        match counts {
            Ok(n) => {
                assert_eq!(n, vec![at(&class, 2), at(&class, 3)], "{:?}", c.dims());
                checked += 1;
            }
            Err(OracleError::BadReduction { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn classes_are_symmetric_and_divisible() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let torus = LPoly::binomial(1, 0);
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for _ in 0..200 {
        let ambient = rng.gen_range(1..=5);
        let c = random_config(&mut rng, ambient, 3);
        let class = frame_class(&c).unwrap();
        for p in &perms {
            assert_eq!(frame_class(&permuted(&c, p).unwrap()).unwrap(), class);
        }
        assert!(class.exact_div(&torus.pow(3)).is_some(), "{class} for {:?}", c.dims());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_frames_are_symmetric(d1 in 0usize..6, d2 in 0usize..6, k in 0usize..6) {
        let d12 = k.min(d1).min(d2);
        prop_assert_eq!(frame_class_r2(d1, d2, d12).unwrap(), frame_class_r2(d2, d1, d12).unwrap());
    }

    #[test]
    fn two_frames_count_pairs(d1 in 0usize..5, d2 in 0usize..5, k in 0usize..5) {
        let d12 = k.min(d1).min(d2);
        // v1 inside V1 ∩ V2 rules out its line in V2, otherwise only 0.
        let q = 3i64;
        let pw = |k: usize| q.pow(k as u32);
        let expected = (pw(d12) - 1) * (pw(d2) - q) + (pw(d1) - pw(d12)) * (pw(d2) - 1);
        prop_assert_eq!(frame_class_r2(d1, d2, d12).unwrap().eval_u64(3).unwrap(), BigInt::from(expected));
    }
}
