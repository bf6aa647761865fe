//! Property tests for structural invariants, checked against brute-force
//! enumeration where possible.

mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::*;
use unital_core::abelian::{kernel_lattice, smith_normal_form, solve};
use unital_core::complex::{unit_complex_1, unit_complex_2};
use unital_core::crossed::{enumerate_units_nonabelian, unit_crossed_module};
use unital_core::picard::{PicardModel1, PicardModel2};
use unital_core::{random, FgAbGroup, Matrix};

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = Matrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, c), r)
            .prop_map(move |rows| Matrix::from_rows(r, c, &rows).unwrap())
    })
}

fn identity_big(n: usize) -> BigMatrix {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_is_a_unimodular_diagonalization(m in matrix(6, 30)) {
        let s = smith_normal_form(&m);
        let (r, c) = (m.rows(), m.cols());
        let umv = big_mul(&big_mul(&to_big(&s.u), &to_big(&m), r, c), &to_big(&s.v), c, c);
        prop_assert_eq!(umv, to_big(&s.d));
        prop_assert_eq!(big_mul(&to_big(&s.u), &to_big(&s.u_inv), r, r), identity_big(r));
        prop_assert_eq!(big_det(&s.v).magnitude().clone(), 1u32.into());
        let diag = s.diagonal();
        prop_assert!(diag.iter().all(|&d| d >= 0));
        prop_assert_eq!(diag.iter().filter(|&&d| d != 0).count(), s.rank);
        for w in diag.windows(2) {
            prop_assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0), "chain {:?}", diag);
        }
        for i in 0..r {
            for j in 0..c {
                prop_assert!(i == j || s.d[(i, j)] == 0);
            }
        }
    }

    #[test]
    fn kernel_lattice_spans_the_kernel(m in matrix(5, 9), x in prop::collection::vec(-5i64..=5, 5)) {
        let k = kernel_lattice(&m);
        prop_assert_eq!(k.rows(), m.cols());
        for j in 0..k.cols() {
            prop_assert!(m.mul_vec(&k.column(j)).iter().all(|&v| v == 0));
        }
        let s = smith_normal_form(&m);
        prop_assert_eq!(k.cols(), m.cols() - s.rank);
        // Image vectors are solvable.
        let x = &x[..m.cols()];
        let b = m.mul_vec(x);
        let y = solve(&m, &b).expect("image vector is solvable");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn canonical_form_is_idempotent(moduli in prop::collection::vec(0i64..40, 0..5)) {
        let g = FgAbGroup::from_moduli(&moduli);
        prop_assert_eq!(FgAbGroup::from_moduli(&g.moduli()), g.clone());
        prop_assert_eq!(FgAbGroup::new(g.invariant_factors().to_vec(), g.free_rank()).unwrap(), g.clone());
        let nonzero: Vec<i64> = moduli.iter().copied().filter(|&m| m != 0).collect();
        prop_assert_eq!(g.free_rank(), moduli.len() - nonzero.len());
        if g.is_finite() {
            prop_assert_eq!(g.order().unwrap(), nonzero.iter().map(|&m| m as u128).product::<u128>());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_image_cokernel_are_exact(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = random::complex2(&mut rng, 24);
        let f = x.lambda();
        let (order_a, order_b) = (x.a().order().unwrap(), x.b().order().unwrap());
        let ker = f.kernel();
        let im = f.image();
        let coker = f.cokernel();
        let brute_ker = brute_kernel(f).len() as u128;
        let brute_im = brute_image(f).len() as u128;
        prop_assert_eq!(ker.group.order().unwrap(), brute_ker);
        prop_assert_eq!(im.group.order().unwrap(), brute_im);
        prop_assert_eq!(brute_ker * brute_im, order_a);
        prop_assert_eq!(coker.group.order().unwrap() * brute_im, order_b);
        prop_assert!(f.compose(&ker.inclusion).unwrap().is_zero());
        prop_assert!(coker.projection.compose(f).unwrap().is_zero());
        prop_assert!(ker.inclusion.is_injective());
        prop_assert!(coker.projection.is_surjective());
        let kernel_set: BTreeSet<Vec<i64>> =
            brute_image(&ker.inclusion).into_iter().collect();
        let brute_set: BTreeSet<Vec<i64>> = brute_kernel(f).iter().map(|e| e.coords().to_vec()).collect();
        prop_assert_eq!(kernel_set, brute_set);
    }

    #[test]
    fn saavedra_units_match_brute_force(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = random::complex2(&mut rng, 16);
        let model = PicardModel1::new(x.clone());
        let units = model.enumerate_units().unwrap();
        let (brute_units, counts) = brute_saavedra(&x);
        prop_assert_eq!(units.len(), brute_units);
        prop_assert_eq!(units.len() as u128, x.a().order().unwrap());
        prop_assert!(counts.iter().all(|&n| n == 1), "{:?}", counts);
        prop_assert!(unit_complex_1(&x).unwrap().complex.complex().is_acyclic().unwrap());
    }

    #[test]
    fn jk_units_match_brute_force(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = random::complex3(&mut rng, 8);
        let units = PicardModel2::new(x.clone()).enumerate_units().unwrap();
        prop_assert_eq!(units.len(), brute_jk_units(&x));
        prop_assert_eq!(units.len() as u128, x.b().order().unwrap());
        let u = unit_complex_2(&x).unwrap().complex;
        for d in u.complex().degrees() {
            prop_assert_eq!(brute_homology_order(u.complex(), d), 1);
        }
    }

    #[test]
    fn homology_orders_match_enumeration(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = random::complex3(&mut rng, 12);
        for d in x.complex().degrees() {
            let h = x.complex().homology(d).unwrap();
            prop_assert_eq!(h.group.order().unwrap(), brute_homology_order(x.complex(), d));
        }
    }

    #[test]
    fn crossed_module_invariants(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let x = random::crossed_module(&mut rng, 12);
        prop_assert!(x.verify().passed());
        let (pi0, pi1) = x.homotopy_orders();
        let image: BTreeSet<usize> = x.boundary().iter().copied().collect();
        prop_assert_eq!(pi1 * image.len(), x.source().order());
        prop_assert_eq!(pi0 * image.len(), x.target().order());
        let u = unit_crossed_module(&x).unwrap();
        prop_assert!(u.module.verify().passed());
        prop_assert_eq!(u.module.homotopy_orders(), (1, 1));
        let c = enumerate_units_nonabelian(&x).unwrap();
        prop_assert!(c.verification.passed(), "{:?}", c.verification.first_failure());
    }
}
