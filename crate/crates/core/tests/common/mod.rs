#![allow(dead_code)]

use branch2::slope::Slope;
use branch2::surgery::{FramedLink, LinkComponent};
use rand::Rng;

/// Numerator of the regular continued fraction `[a0; a1, ..., an]` of `p/q`,
/// via the continuant recurrence.
pub fn continuant_numerator(p: i64, q: i64) -> i128 {
    let (mut a, mut b) = (p as i128, q as i128);
    let mut terms = Vec::new();
    while b != 0 {
        let t = a.div_euclid(b);
        terms.push(t);
        (a, b) = (b, a - t * b);
    }
    let (mut k0, mut k1) = (1i128, 0i128);
    for t in terms.iter().rev() {
        (k0, k1) = (t * k0 + k1, k0);
    }
    if terms.is_empty() {
        1
    } else {
        k0
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn random_slope(rng: &mut impl Rng, bound: i64) -> Slope {
    loop {
        let p = rng.gen_range(-bound..=bound);
        let q = rng.gen_range(0..=bound);
        if gcd(p, q) == 1 {
            return Slope::new(p, q).unwrap();
        }
    }
}

/// Up to five components, mostly unknotted, some `±1`-framed.
pub fn random_link(rng: &mut impl Rng) -> FramedLink {
    let n = rng.gen_range(1..=5);
    let components = (0..n)
        .map(|k| {
            let framing = match rng.gen_range(0..4) {
                0 => Slope::integer(if rng.gen() { 1 } else { -1 }),
                _ => random_slope(rng, 6),
            };
            LinkComponent {
                name: format!("K{k}"),
                framing,
                unknotted: rng.gen_range(0..5) != 0,
            }
        })
        .collect();
    let mut linking = vec![vec![0i64; n]; n];
    for (i, j) in (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))) {
        let v = rng.gen_range(-2..=2);
        linking[i][j] = v;
        linking[j][i] = v;
    }
    FramedLink::new(components, linking).unwrap()
}
