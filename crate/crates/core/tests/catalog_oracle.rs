//! Closed forms in the catalog checked against brute-force orbit enumeration.

use kmgrowth_core::catalog::{self, AffineType, FiniteType};
use kmgrowth_core::lattice::{self, SubsetJ};
use kmgrowth_core::orbit::{self, Strategy};
use kmgrowth_core::polyseries::{self, IntPolynomial};

const FINITE: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5", "G2", "F4",
];

fn ft(name: &str) -> FiniteType {
    name.parse().unwrap()
}

#[test]
fn enumeration_matches_product_formula() {
    for name in FINITE.iter().chain(&["E6"]) {
        let t = ft(name);
        let a = t.cartan_matrix();
        let bfs = orbit::poincare_series(&a, None, Strategy::FrontierSign).unwrap();
        let poly = bfs.polynomial().expect("finite groups terminate");
        assert_eq!(poly, catalog::finite_poincare(t), "{name}");
        assert_eq!(poly.evaluate(1).unwrap() as u64, catalog::group_order(t), "{name}");
        assert_eq!(poly.degree(), Some(t.positive_roots()), "{name}");
    }
}

#[test]
fn product_formula_by_exact_division() {
    // ∏ (t^ν − 1) / (t − 1)^n, computed without the geometric-sum shortcut
    for name in FINITE {
        let t = ft(name);
        let minus_one = IntPolynomial::new(vec![-1]);
        let factors: Vec<IntPolynomial> = catalog::degrees(t)
            .degrees()
            .iter()
            .map(|&nu| IntPolynomial::monomial(1, nu as usize).add(&minus_one).unwrap())
            .collect();
        let num = IntPolynomial::product(&factors).unwrap();
        let den = IntPolynomial::new(vec![-1, 1]).pow(t.rank() as u32).unwrap();
        assert_eq!(polyseries::divide_exact(&num, &den).unwrap(), t.poincare_polynomial(), "{name}");
    }
}

#[test]
fn spot_values() {
    assert_eq!(
        catalog::finite_poincare(ft("A4")).coeffs(),
        &[1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1]
    );
    assert_eq!(catalog::group_order(ft("A4")), 120);
    assert_eq!(catalog::group_order(ft("D4")), 192);
    assert_eq!(catalog::degrees(ft("D4")).degrees(), &[2, 4, 4, 6]);
}

#[test]
fn bott_matches_enumeration_on_affine_d4_inside_h() {
    let h = catalog::hyperbolic_h();
    let sub = lattice::sub_gcm(&h, &SubsetJ::new(vec![2, 3, 4, 5, 6], 6).unwrap()).unwrap();
    let bfs = orbit::poincare_series(&sub, Some(15), Strategy::FrontierSign).unwrap();
    assert!(!bfs.terminated);
    assert_eq!(bfs.series, catalog::bott_series(ft("D4"), 15).unwrap());
}

#[test]
fn bott_matches_enumeration_for_constructed_affine_types() {
    for (name, order) in [
        ("A1", 20),
        ("A2", 14),
        ("A3", 12),
        ("B3", 10),
        ("C3", 10),
        ("D4", 10),
        ("D5", 9),
        ("G2", 16),
        ("F4", 9),
    ] {
        let t = AffineType::new(ft(name));
        let bfs = orbit::poincare_series(&t.cartan_matrix(), Some(order), Strategy::FrontierSign).unwrap();
        assert_eq!(bfs.series, t.bott_series(order).unwrap(), "aff{name}");
    }
}

#[test]
fn affine_a1_is_one_plus_t_over_one_minus_t() {
    assert_eq!(catalog::bott_series(ft("A1"), 4).unwrap().coeffs(), &[1, 2, 2, 2, 2]);
}
