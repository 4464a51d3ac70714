use std::sync::Arc;

use dpr_exponent::cohomology::snf::{smith_normal_form, RowCompanion};
use dpr_exponent::cohomology::{
    cyclic_class_order, cyclic_standard_cocycle, normalize_cocycle, Cochain1, Cochain2, Solver2,
};
use dpr_exponent::double::DoubleContext;
use dpr_exponent::exponent::{all_routes, cyclic_class_orders, exponent_via_pi};
use dpr_exponent::group::{builtin_group, cyclic_quotients, make_cyclic, ElemId, GroupTable};
use dpr_exponent::Phase;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SMALL: &[&str] = &["c1", "c2", "c3", "c4", "c6", "c2xc2", "s3", "c2xc4", "d4", "c3xc3"];

fn group(i: usize) -> Arc<GroupTable> {
    Arc::new(builtin_group(SMALL[i % SMALL.len()]).unwrap())
}

fn phase() -> impl Strategy<Value = Phase> {
    (-50i64..50, 1i64..30).prop_map(|(p, q)| Phase::new(p, q))
}

struct Rows(Vec<Vec<BigInt>>);

impl RowCompanion for Rows {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.0.swap(i, j);
    }
    fn add_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        let src = self.0[src].clone();
        for (d, s) in self.0[dst].iter_mut().zip(&src) {
            *d += k * s;
        }
    }
    fn negate_row(&mut self, i: usize) {
        for d in self.0[i].iter_mut() {
            *d = -d.clone();
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phases_form_an_abelian_group(a in phase(), b in phase(), c in phase(), k in -20i64..20) {
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a - a, Phase::ZERO);
        prop_assert_eq!((a + b).times(k), a.times(k) + b.times(k));
        prop_assert_eq!(a.times(a.order() as i64), Phase::ZERO);
    }

    #[test]
    fn tables_are_associative(i in 0usize..10, a in 0usize..100, b in 0usize..100, c in 0usize..100) {
        let g = group(i);
        let n = g.order();
        let (a, b, c) = (ElemId(a % n), ElemId(b % n), ElemId(c % n));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), ElemId::IDENTITY);
    }

    #[test]
    fn coboundaries_are_cocycles(i in 0usize..10, seed in any::<u64>()) {
        let g = group(i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let tau = Cochain2::random(&g, 2 * g.order() as u64, &mut rng);
        prop_assert!(tau.coboundary().is_cocycle());
        let f = Cochain1::from_fn(&g, |[x]| if x.is_identity() { Phase::ZERO } else { Phase::new(x.0 as i64, 7) }).unwrap();
        let ddf = f.coboundary().coboundary();
        prop_assert!(ddf.is_zero());
    }

    #[test]
    fn solver_recovers_random_coboundaries(i in 0usize..10, seed in any::<u64>()) {
        let g = group(i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let target = Cochain2::random(&g, 12, &mut rng).coboundary();
        let w = Solver2::new(&g, 12).unwrap().solve(&target).unwrap().witness();
        prop_assert!(w.is_some());
        prop_assert_eq!(w.unwrap().coboundary(), target);
    }

    #[test]
    fn exponent_is_a_class_invariant(n in 1usize..8, k in 0i64..8, seed in any::<u64>()) {
        let g = Arc::new(make_cyclic(n));
        let w = cyclic_standard_cocycle(&g, Phase::new(k, n as i64)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shifted = w.add(&Cochain2::random(&g, 2 * n as u64, &mut rng).coboundary()).unwrap();
        let a = all_routes(&DoubleContext::new(w.clone()).unwrap()).unwrap();
        let b = all_routes(&DoubleContext::new(shifted.clone()).unwrap()).unwrap();
        prop_assert!(a.agree() && b.agree());
        prop_assert_eq!(a.pi, b.pi);
        prop_assert_eq!(cyclic_class_orders(&w), cyclic_class_orders(&shifted));
    }

    #[test]
    fn cyclic_class_order_divides_element_order(i in 0usize..10, seed in any::<u64>()) {
        let g = group(i);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // inflate a random generator from some cyclic quotient, then add noise
        let q = g.exponent() as usize;
        let mut w = dpr_exponent::cohomology::Cochain3::zero(&g);
        for d in 2..=q {
            if let Some(proj) = cyclic_quotients(&g, d).first() {
                let z = Phase::new(rng.gen_range(0..d as i64), d as i64);
                let base = cyclic_standard_cocycle(&Arc::new(make_cyclic(d)), z).unwrap();
                w = w.add(&base.inflate(&g, proj).unwrap()).unwrap();
            }
        }
        let w = w.add(&Cochain2::random(&g, 6, &mut rng).coboundary()).unwrap();
        for x in g.elements() {
            prop_assert!(g.element_order(x).is_multiple_of(cyclic_class_order(&w, x)));
        }
        let (norm, _) = normalize_cocycle(&w, 12).unwrap();
        for x in g.elements() {
            prop_assert!(norm.get([x, g.inv(x), x]).times(g.exponent() as i64).is_zero());
        }
        prop_assert_eq!(exponent_via_pi(&w).unwrap(), exponent_via_pi(&norm).unwrap());
    }

    #[test]
    fn smith_form_is_an_equivalence(rows in 1usize..5, cols in 1usize..5, entries in proptest::collection::vec(-9i64..10, 16)) {
        let a: Vec<Vec<BigInt>> = (0..rows).map(|r| (0..cols).map(|c| BigInt::from(entries[r * 4 + c])).collect()).collect();
        let mut u = Rows(a.clone());
        let snf = smith_normal_form(a, cols, &mut u);
        // (U·A)·V must be the diagonal
        for r in 0..rows {
            for c in 0..cols {
                let x: BigInt = (0..cols).map(|k| &u.0[r][k] * &snf.v[k][c]).sum();
                let want = if r == c && r < snf.rank() { snf.diag[r].clone() } else { BigInt::zero() };
                prop_assert_eq!(x, want);
            }
        }
        for w in snf.diag.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
    }
}

