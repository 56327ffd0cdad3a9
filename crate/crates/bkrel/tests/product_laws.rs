//! Property tests for the product kernels: oracle equivalence against a
//! direct triple-loop evaluation, monotonicity, closure/interior laws, and
//! the pseudo-associativities on crisp relations.

use bkrel::properties::{closure, interior, ClosureKind};
use bkrel::{
    circle_compose_tnorm, compose, ConnectiveSystem, FuzzyRelation, LabeledSet, Mode, ProductSpec,
    ProductType, TNorm,
};
use proptest::prelude::*;

fn labels(prefix: &str, n: usize) -> LabeledSet {
    LabeledSet::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

fn relation(prefix_src: &str, prefix_tgt: &str, rows: &[Vec<f64>]) -> FuzzyRelation {
    FuzzyRelation::new(
        labels(prefix_src, rows.len()),
        labels(prefix_tgt, rows[0].len()),
        rows.to_vec(),
    )
    .unwrap()
}

// Independent re-implementation of the connective formulas and the product
// definitions, kept deliberately separate from the library's code path.
mod oracle {
    use bkrel::{ConnectiveSystem, Mode, ProductType};

    pub fn imp(sys: ConnectiveSystem, a: f64, b: f64) -> f64 {
        match sys {
            ConnectiveSystem::Lukasiewicz => (1.0 - a + b).min(1.0),
            ConnectiveSystem::KleeneDienes => (1.0 - a).max(b),
            ConnectiveSystem::Reichenbach => 1.0 - a + a * b,
            ConnectiveSystem::Standard => {
                if a <= b {
                    1.0
                } else {
                    b
                }
            }
            ConnectiveSystem::StandardSharp => {
                if a <= b {
                    1.0
                } else {
                    0.0
                }
            }
            ConnectiveSystem::Gaines => {
                if a == 0.0 {
                    1.0
                } else {
                    (b / a).min(1.0)
                }
            }
            ConnectiveSystem::GainesContrapositive => {
                if b == 1.0 {
                    1.0
                } else {
                    ((1.0 - a) / (1.0 - b)).min(1.0)
                }
            }
        }
    }

    fn eq(sys: ConnectiveSystem, a: f64, b: f64) -> f64 {
        imp(sys, a, b).min(imp(sys, b, a))
    }

    pub fn compose(
        r: &[Vec<f64>],
        s: &[Vec<f64>],
        product: ProductType,
        mode: Mode,
        sys: ConnectiveSystem,
    ) -> Vec<Vec<f64>> {
        let rows = r.len();
        let mid = s.len();
        let cols = s[0].len();
        let mut out = vec![vec![0.0; cols]; rows];
        for i in 0..rows {
            for k in 0..cols {
                let mut acc: Vec<f64> = Vec::with_capacity(mid);
                for j in 0..mid {
                    let a = r[i][j];
                    let b = s[j][k];
                    acc.push(match product {
                        ProductType::Circle => a.min(b),
                        ProductType::Sub => imp(sys, a, b),
                        ProductType::Super => imp(sys, b, a),
                        ProductType::Square => eq(sys, a, b),
                    });
                }
                out[i][k] = match mode {
                    Mode::Harsh => match product {
                        ProductType::Circle => acc.iter().copied().fold(0.0, f64::max),
                        _ => acc.iter().copied().fold(1.0, f64::min),
                    },
                    Mode::Mean => acc.iter().sum::<f64>() / mid as f64,
                };
            }
        }
        out
    }
}

fn degree_rows(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    proptest::collection::vec(
        proptest::collection::vec((0..=100u32).prop_map(|k| k as f64 / 100.0), cols),
        rows,
    )
}

fn crisp_rows(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    proptest::collection::vec(
        proptest::collection::vec(prop::bool::ANY.prop_map(|b| if b { 1.0 } else { 0.0 }), cols),
        rows,
    )
}

proptest! {
    #[test]
    #[allow(clippy::needless_range_loop)]
    fn compose_matches_triple_loop(
        r_rows in degree_rows(3, 4),
        s_rows in degree_rows(4, 2),
    ) {
        let r = relation("a", "m", &r_rows);
        let s = relation("m", "z", &s_rows);
        for sys in ConnectiveSystem::ALL {
            for product in [ProductType::Circle, ProductType::Sub, ProductType::Super, ProductType::Square] {
                for mode in [Mode::Harsh, Mode::Mean] {
                    let got = compose(&r, &s, ProductSpec::new(product, mode, sys)).unwrap();
                    let want = oracle::compose(&r_rows, &s_rows, product, mode, sys);
                    for i in 0..3 {
                        for k in 0..2 {
                            prop_assert!(
                                (got.degree(i, k) - want[i][k]).abs() <= 1e-12,
                                "{sys} {product:?} {mode:?} cell ({i},{k}): {} vs {}",
                                got.degree(i, k), want[i][k]
                            );
                        }
                    }
                }
            }
        }
    }

    // enlarging an entry of the right operand never decreases a harsh
    // circle or subproduct cell under the residuated systems
    #[test]
    fn harsh_products_monotone_in_right_operand(
        r_rows in degree_rows(3, 3),
        mut s_rows in degree_rows(3, 3),
        cell in (0usize..3, 0usize..3),
        bump in 0.0f64..1.0,
    ) {
        let r = relation("a", "m", &r_rows);
        let s = relation("m", "z", &s_rows);
        let (bi, bj) = cell;
        let bumped_value = (s_rows[bi][bj] + bump).min(1.0);
        s_rows[bi][bj] = bumped_value;
        let s_bumped = relation("m", "z", &s_rows);
        for sys in [ConnectiveSystem::Lukasiewicz, ConnectiveSystem::Standard] {
            for product in [ProductType::Circle, ProductType::Sub] {
                let spec = ProductSpec::new(product, Mode::Harsh, sys);
                let before = compose(&r, &s, spec).unwrap();
                let after = compose(&r, &s_bumped, spec).unwrap();
                for i in 0..3 {
                    for k in 0..3 {
                        prop_assert!(after.degree(i, k) >= before.degree(i, k) - 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn closures_are_idempotent_and_contain_the_relation(rows in degree_rows(4, 4)) {
        let r = relation("x", "x", &rows);
        for kind in [ClosureKind::Reflexive, ClosureKind::Symmetric, ClosureKind::Transitive, ClosureKind::Preorder] {
            let once = closure(&r, kind).unwrap();
            let twice = closure(&once, kind).unwrap();
            prop_assert_eq!(&once, &twice);
            for i in 0..4 {
                for j in 0..4 {
                    prop_assert!(once.degree(i, j) >= r.degree(i, j));
                }
            }
        }
    }

    #[test]
    fn symmetric_interior_sandwich(rows in degree_rows(4, 4)) {
        let r = relation("x", "x", &rows);
        let inner = interior(&r, ClosureKind::Symmetric).unwrap();
        let outer = closure(&r, ClosureKind::Symmetric).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                prop_assert!(inner.degree(i, j) <= r.degree(i, j));
                prop_assert!(r.degree(i, j) <= outer.degree(i, j));
                // both are symmetric
                prop_assert_eq!(inner.degree(i, j), inner.degree(j, i));
                prop_assert_eq!(outer.degree(i, j), outer.degree(j, i));
            }
        }
    }

    // the three pseudo-associativities, exact on crisp relations with S#
    #[test]
    fn pseudo_associativities_crisp(
        q_rows in crisp_rows(2, 3),
        r_rows in crisp_rows(3, 2),
        s_rows in crisp_rows(2, 3),
    ) {
        let sys = ConnectiveSystem::StandardSharp;
        let q = relation("a", "b", &q_rows);
        let r = relation("b", "c", &r_rows);
        let s = relation("c", "d", &s_rows);
        let sub = ProductSpec::new(ProductType::Sub, Mode::Harsh, sys);
        let sup = ProductSpec::new(ProductType::Super, Mode::Harsh, sys);

        // Q ◁ (R ▷ S) = (Q ◁ R) ▷ S
        let lhs = compose(&q, &compose(&r, &s, sup).unwrap(), sub).unwrap();
        let rhs = compose(&compose(&q, &r, sub).unwrap(), &s, sup).unwrap();
        prop_assert_eq!(lhs.max_abs_diff(&rhs).unwrap(), 0.0);

        // Q ◁ (R ◁ S) = (Q ∘ R) ◁ S
        let lhs = compose(&q, &compose(&r, &s, sub).unwrap(), sub).unwrap();
        let qr = circle_compose_tnorm(&q, &r, TNorm::Minimum).unwrap();
        let rhs = compose(&qr, &s, sub).unwrap();
        prop_assert_eq!(lhs.max_abs_diff(&rhs).unwrap(), 0.0);

        // (Q ▷ R) ▷ S = Q ▷ (R ∘ S)
        let lhs = compose(&compose(&q, &r, sup).unwrap(), &s, sup).unwrap();
        let rs = circle_compose_tnorm(&r, &s, TNorm::Minimum).unwrap();
        let rhs = compose(&q, &rs, sup).unwrap();
        prop_assert_eq!(lhs.max_abs_diff(&rhs).unwrap(), 0.0);
    }
}
