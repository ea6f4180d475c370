//! Cross-module invariants on randomized inputs.

use agchull_core::agcodes::{build_cab, hull_dim_rank, hull_intersection_basis};
use agchull_core::divisors::{Ambient, Divisor, Place};
use agchull_core::fflinalg::{factor_univariate, Matrix, Poly};
use agchull_core::galois::FieldCtx;
use agchull_core::riemannroch::ell_dim_rational;
use proptest::prelude::*;

fn small_field() -> impl Strategy<Value = FieldCtx> {
    prop_oneof![
        Just(FieldCtx::new(2, 1).unwrap()),
        Just(FieldCtx::new(3, 1).unwrap()),
        Just(FieldCtx::new(2, 2).unwrap()),
        Just(FieldCtx::new(5, 1).unwrap()),
        Just(FieldCtx::new(2, 3).unwrap()),
        Just(FieldCtx::new(3, 2).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factorization_remultiplies_and_respects_squarefreeness(
        field in small_field(),
        coeffs in proptest::collection::vec(0u32..8, 1..8),
    ) {
        let vals: Vec<u32> = coeffs.iter().map(|c| c % field.order()).collect();
        let poly = Poly::from_values(&field, &vals).unwrap();
        prop_assume!(!poly.is_zero());
        let factors = factor_univariate(&poly).unwrap();
        let mut product = Poly::constant(&field, poly.leading().unwrap());
        for (g, mult) in &factors {
            prop_assert!(g.is_monic());
            prop_assert!(g.is_irreducible());
            for _ in 0..*mult {
                product = product.mul(g);
            }
        }
        prop_assert_eq!(&product, &poly);
        if poly.degree().unwrap_or(0) >= 1 {
            let squarefree = factors.iter().all(|(_, m)| *m == 1);
            prop_assert_eq!(poly.is_squarefree(), squarefree);
        }
    }

    #[test]
    fn rowspace_intersection_dimension_formula(
        field in small_field(),
        rows_a in 0usize..5,
        rows_b in 0usize..5,
        cols in 1usize..7,
        seed in any::<u64>(),
    ) {
        let mut state = seed;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 15) as u32
        };
        let mk = |rows: usize, next: &mut dyn FnMut() -> u32| {
            let data: Vec<_> = (0..rows * cols)
                .map(|_| field.element(next() % field.order()).unwrap())
                .collect();
            Matrix::new(&field, rows, cols, data)
        };
        let a = mk(rows_a, &mut next);
        let b = mk(rows_b, &mut next);
        let inter = a.intersect_rowspace(&b).unwrap();
        let expected = a.rank() + b.rank() - a.stack(&b).unwrap().rank();
        prop_assert_eq!(inter.rows(), expected);
        for r in 0..inter.rows() {
            prop_assert!(a.row_in_rowspace(inter.row(r)));
            prop_assert!(b.row_in_rowspace(inter.row(r)));
        }
    }

    #[test]
    fn divisor_gcd_is_the_coefficientwise_lower_bound(
        a1 in -4i64..5, b1 in -4i64..5,
        a2 in -4i64..5, b2 in -4i64..5,
    ) {
        let field = FieldCtx::new(3, 2).unwrap();
        let ambient = Ambient::Rational { q: field.order() };
        let mk = |a: i64, b: i64| {
            Divisor::from_terms(
                ambient.clone(),
                vec![
                    (Place::finite(&field, field.zero()), a),
                    (Place::infinite(&field), b),
                ],
            )
            .unwrap()
        };
        let d1 = mk(a1, b1);
        let d2 = mk(a2, b2);
        let g = d1.gcd(&d2).unwrap();
        prop_assert!(g.le(&d1));
        prop_assert!(g.le(&d2));
        prop_assert_eq!(d1.gcd(&d1).unwrap(), d1.clone());
        prop_assert_eq!(d1.add(&d2).unwrap().degree(), d1.degree() + d2.degree());
    }
}

/// The hull of every in-window two-point code equals the gcd-code dimension,
/// across all supported base fields.
#[test]
fn camps_identity_across_base_fields() {
    for (p, k) in [(5u32, 1u32), (2, 3), (3, 2), (13, 1)] {
        let field = FieldCtx::new(p, k).unwrap();
        let q = field.order();
        for n in (2..=q - 1).filter(|d| (q - 1).is_multiple_of(*d)) {
            let n = n as usize;
            for a in -(n as i64)..=(n as i64) {
                for b in -(n as i64)..=(n as i64) {
                    let (s, d) = (a + b, b - a);
                    if s < 0 || s > n as i64 - 2 || d < 0 || d > n as i64 {
                        continue;
                    }
                    let cab = build_cab(&field, n, a, b).unwrap();
                    let gcd = cab.gcd_divisor();
                    let ell = ell_dim_rational(&gcd).unwrap().ell;
                    assert_eq!(hull_dim_rank(&cab.code.gen) as i64, ell);
                    assert_eq!(
                        hull_intersection_basis(&cab.code.gen).unwrap().rows() as i64,
                        ell
                    );
                }
            }
        }
    }
}
