use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semirep::catalog;
use semirep::corpus::corollary_instances;
use semirep::involution::{decompose_rees_involution, enumerate_involutions, reconstruct};
use semirep::schutz::is_inverse_via_reps;
use semirep::{green_structure, is_preunitary, polar_decompose, CMatrix, GroupData, SemigroupTable, C};

fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> CMatrix<f64> {
    CMatrix::from_fn(n, n, |_, _| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> CMatrix<f64> {
    polar_decompose(&random_matrix(n, rng)).u
}

fn partial_isometry(n: usize, rank: usize, rng: &mut ChaCha8Rng) -> CMatrix<f64> {
    let d: Vec<f64> = (0..n).map(|k| if k < rank { 1.0 } else { 0.0 }).collect();
    let u = random_unitary(n, rng);
    let v = random_unitary(n, rng);
    &(&u * &CMatrix::real_diagonal(&d)) * &v.adjoint()
}

fn relabelled(s: &SemigroupTable, seed: u64) -> SemigroupTable {
    let mut perm: Vec<usize> = s.elements().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in (1..perm.len()).rev() {
        perm.swap(k, rng.gen_range(0..=k));
    }
    s.permuted(&perm)
}

fn class_sizes(s: &SemigroupTable) -> Vec<usize> {
    let mut v: Vec<usize> = green_structure(s).jclasses.iter().map(Vec::len).collect();
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn preunitary_conditions_agree(seed in any::<u64>(), n in 1usize..6, rank in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = partial_isometry(n, rank.min(n), &mut rng);
        let r = is_preunitary(&a, 1e-9);
        prop_assert!(r.all());
        let bumped = &a + &random_matrix(n, &mut rng).scale_real(1e-3);
        let r = is_preunitary(&bumped, 1e-9);
        prop_assert!(r.consistent());
    }

    #[test]
    fn polar_round_trip(seed in any::<u64>(), n in 1usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(n, &mut rng);
        let p = polar_decompose(&a);
        prop_assert!((&p.u * &p.h).approx_eq(&a, 1e-9));
        prop_assert!((&p.u.adjoint() * &p.u).approx_eq(&CMatrix::identity(n), 1e-9));
        prop_assert!(p.h.hermitian_defect() <= 1e-9);
    }

    #[test]
    fn inverse_verdict_is_relabelling_invariant(seed in any::<u64>(), which in 0usize..4) {
        let s = [catalog::brandt_b2(), catalog::symmetric_inverse_monoid(2), catalog::chain_semilattice(4), catalog::left_zero(3)][which].clone();
        let t = relabelled(&s, seed);
        prop_assert_eq!(class_sizes(&s), class_sizes(&t));
        prop_assert_eq!(is_inverse_via_reps(&s).unwrap().is_inverse, is_inverse_via_reps(&t).unwrap().is_inverse);
        prop_assert_eq!(enumerate_involutions(&s).unwrap().len(), enumerate_involutions(&t).unwrap().len());
    }

    #[test]
    fn involutions_are_anti_automorphisms(seed in any::<u64>()) {
        let s = relabelled(&catalog::symmetric_inverse_monoid(2), seed);
        for f in enumerate_involutions(&s).unwrap() {
            for a in s.elements() {
                prop_assert_eq!(f.map[f.map[a]], a);
                for b in s.elements() {
                    prop_assert_eq!(f.map[s.mul(a, b)], s.mul(f.map[b], f.map[a]));
                }
            }
        }
    }

    #[test]
    fn rees_involutions_round_trip(seed in any::<u64>()) {
        let g = GroupData::symmetric(3);
        for (r, given, star) in corollary_instances(&g, g.identity, 2, 2, seed) {
            let ss = decompose_rees_involution(&r, &star).unwrap();
            prop_assert_eq!(&ss, &given);
            prop_assert_eq!(reconstruct(&r, &ss), star);
        }
    }
}

#[test]
fn single_precision_preunitary() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = partial_isometry(4, 2, &mut rng).cast::<f32>();
    assert!(is_preunitary(&a, 1e-4).all());
}
