mod common;

use branch2::census::{quotient_report, Census};
use branch2::hyperbolic::{complex_length, filling_family, MobiusMap};
use branch2::involution::{cyclic_quotient_coefficient, extend_involution, SymmetryType};
use branch2::seifert::{bezout, euler_number, sfs_h1_order, SeifertInvariants};
use branch2::slope::{
    canonical_exponents, exponents_to_matrix, format_exponents, matrix_to_slope, slope_to_word,
    Slope,
};
use branch2::surgery::{h1_order, rolfsen_twist, FramedLink};
use branch2::tangle::{
    diagram_determinant, slope_to_twist_vector, two_bridge_diagram, PlanarDiagram,
};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{continuant_numerator, gcd, random_link};

fn coprime(bound: i64) -> impl Strategy<Value = Slope> {
    (-bound..=bound, 0..=bound)
        .prop_filter("coprime", |&(p, q)| gcd(p, q) == 1)
        .prop_map(|(p, q)| Slope::new(p, q).unwrap())
}

proptest! {
    #[test]
    fn word_matrix_first_column(s in coprime(1_000_000)) {
        let m = slope_to_word(s).matrix();
        prop_assert_eq!(m.det(), 1);
        prop_assert_eq!(m.first_column(), (s.numerator() as i128, s.denominator() as i128));
        prop_assert_eq!(matrix_to_slope(&m).unwrap(), s);
    }

    #[test]
    fn exponent_form_agrees_with_word(s in coprime(5_000)) {
        let exps = canonical_exponents(s);
        prop_assert_eq!(format_exponents(&exps), slope_to_word(s).to_string());
        let m = exponents_to_matrix(&exps).unwrap();
        prop_assert_eq!(m.first_column(), (s.numerator() as i128, s.denominator() as i128));
    }

    #[test]
    fn slope_text_round_trips(s in coprime(i64::MAX / 2)) {
        prop_assert_eq!(s.to_string().parse::<Slope>().unwrap(), s);
    }

    #[test]
    fn twist_vector_fraction(s in coprime(10_000)) {
        prop_assert_eq!(slope_to_twist_vector(s).fraction().unwrap(), s);
    }

    #[test]
    fn two_bridge_determinant(s in coprime(150)) {
        let d = two_bridge_diagram(s).unwrap();
        let oracle = continuant_numerator(s.numerator(), s.denominator()).unsigned_abs();
        prop_assert_eq!(diagram_determinant(&d).unwrap(), oracle);
        prop_assert_eq!(d.component_count(), if s.numerator() % 2 == 0 { 2 } else { 1 });
        let back: PlanarDiagram = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn rolfsen_twist_is_invertible(seed in any::<u64>(), n in -3i64..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let link = random_link(&mut rng);
        let back: FramedLink = link.to_string().parse().unwrap();
        prop_assert_eq!(&back, &link);
        for j in (0..link.len()).filter(|&j| link.components()[j].unknotted) {
            let there = rolfsen_twist(&link, j, n).unwrap();
            prop_assert_eq!(h1_order(&there).unwrap(), h1_order(&link).unwrap());
            prop_assert_eq!(rolfsen_twist(&there, j, -n).unwrap(), link.clone());
        }
    }

    #[test]
    fn seifert_normalisation_moves(
        b in -5i64..=5,
        fibers in prop::collection::vec((prop_oneof![-9i64..=-1, 1i64..=9], -9i64..=9), 0..5),
        k in -3i64..=3,
        pick in any::<prop::sample::Index>(),
    ) {
        let inv = SeifertInvariants::new(b, fibers.clone()).unwrap();
        let mut moved = fibers.clone();
        let mut b2 = b;
        if !moved.is_empty() {
            let i = pick.index(moved.len());
            moved[i].1 += k * moved[i].0;
            b2 -= k;
        }
        let other = SeifertInvariants::new(b2, moved).unwrap();
        prop_assert_eq!(euler_number(&inv).unwrap(), euler_number(&other).unwrap());
        prop_assert_eq!(sfs_h1_order(&inv).unwrap(), sfs_h1_order(&other).unwrap());
        prop_assert_eq!(inv.to_string().parse::<SeifertInvariants>().unwrap(), inv);
    }

    #[test]
    fn bezout_identity(p in -10_000i64..=10_000, q in 2i64..=10_000, neg in any::<bool>()) {
        prop_assume!(gcd(p, q) == 1);
        let q = if neg { -q } else { q };
        let bp = bezout(p, q).unwrap();
        prop_assert_eq!(p as i128 * bp.u as i128 + q as i128 * bp.v as i128, 1);
        prop_assert!(0 < bp.u && bp.u < q.abs());
    }

    #[test]
    fn involution_rules(s in coprime(100_000)) {
        let s0 = extend_involution(SymmetryType::S0S0, s, None).unwrap();
        prop_assert_eq!(s0.extends, s.is_infinite() || s.numerator() == 0);
        let ee = extend_involution(SymmetryType::EE, s, None).unwrap();
        prop_assert_eq!(ee.free, s.numerator() % 2 == 0 || s.denominator() % 2 == 0);
        let half = cyclic_quotient_coefficient(s, 2).unwrap();
        let g = gcd(s.numerator(), 2 * s.denominator());
        prop_assert_eq!(half, Slope::new(s.numerator() / g, 2 * s.denominator() / g).unwrap());
    }

    #[test]
    fn filling_relation(s in coprime(60)) {
        prop_assume!(!s.is_infinite());
        let (p, q) = (s.numerator(), s.denominator());
        let fam = filling_family(Some(Complex64::new(p as f64, q as f64)), Complex64::new(0.0, 1.0)).unwrap();
        let rel = fam.a.pow(p).compose(&fam.b.pow(q));
        prop_assert!(rel.distance(&MobiusMap::identity()) < 1e-8);
    }

    #[test]
    fn dilation_lengths(re in 0.01f64..5.0, im in -3.0f64..3.0) {
        let ell = Complex64::new(re, im);
        let f = MobiusMap::scaling(ell.exp()).unwrap();
        let got = complex_length(&f).unwrap();
        prop_assert!((got - ell).norm() < 1e-9);
        prop_assert!(f.compose(&f.inverse()).distance(&MobiusMap::identity()) < 1e-12);
    }

    #[test]
    fn strongly_invertible_fillings_cover_s3(k in any::<prop::sample::Index>(), s in coprime(1_000)) {
        let census = Census::embedded();
        let classified: Vec<_> = census.entries().iter().filter(|e| e.is_classified()).collect();
        let e = classified[k.index(classified.len())];
        let report = quotient_report(census, &e.knot, s).unwrap();
        if e.classes.contains(&SymmetryType::S1S0) {
            prop_assert!(report.covers_three_sphere());
        }
        if e.classes.is_empty() {
            prop_assert!(report.lines.is_empty());
        }
    }
}
