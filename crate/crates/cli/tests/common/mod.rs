#![allow(dead_code)]

pub mod wheel_tables;

use detloci_algebra::{RatMatrix, SubspaceConfig};
use rand::Rng;

/// Spaces spanned by up to `ambient` random rows with entries in −1..=1.
pub fn random_config(rng: &mut impl Rng, ambient: usize, r: usize) -> SubspaceConfig {
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

/// Every tuple of `r` coordinate subspaces of `Q^ambient`.
pub fn coordinate_configs(ambient: usize, r: usize) -> impl Iterator<Item = SubspaceConfig> {
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
