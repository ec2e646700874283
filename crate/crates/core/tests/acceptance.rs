//! Acceptance suite: one line per criterion with verdict and wall time.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semirep::catalog;
use semirep::corpus::{corollary_instances, regular_rees_sweep};
use semirep::involution::{decompose_rees_involution, enumerate_involutions, inverse_inducing_involution, reconstruct};
use semirep::rep::{MatrixRep, RepKind};
use semirep::schutz::{
    is_completely_reducible, is_inverse_via_reps, nonzero_regular_classes, schutzenberger_pair, semigroup_irreps,
    star_representable_all,
};
use semirep::{
    brute_force_is_inverse, green_structure, is_preunitary, is_semisimple_algebra, polar_decompose, solve_intertwiners,
    CMatrix, GroupData, SemigroupTable, C,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(n: usize, limit_s: u64, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let in_time = took <= Duration::from_secs(limit_s);
    let pass = out.pass && in_time;
    println!(
        "criterion {n}: {} ({}; {:.3}s of {limit_s}s)",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        took.as_secs_f64()
    );
    pass
}

fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> CMatrix<f64> {
    CMatrix::from_fn(n, n, |_, _| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn partial_isometry(rng: &mut ChaCha8Rng) -> CMatrix<f64> {
    let rank = rng.gen_range(0..=4);
    let d: Vec<f64> = (0..4).map(|k| if k < rank { 1.0 } else { 0.0 }).collect();
    let u = polar_decompose(&random_matrix(4, rng)).u;
    let v = polar_decompose(&random_matrix(4, rng)).u;
    &(&u * &CMatrix::real_diagonal(&d)) * &v.adjoint()
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut agree, mut total, mut classified) = (0, 0, 0);
    for _ in 0..1000 {
        let a = partial_isometry(&mut rng);
        let r = is_preunitary(&a, 1e-9);
        total += 1;
        agree += usize::from(r.consistent());
        classified += usize::from(r.all());
        let b = &a + &random_matrix(4, &mut rng).scale_real(1e-3);
        let r = is_preunitary(&b, 1e-9);
        total += 1;
        agree += usize::from(r.consistent());
        classified += usize::from(r.none());
    }
    Outcome {
        pass: agree == total && classified == total,
        detail: format!("{agree}/{total} consistent, {classified}/{total} correctly classified"),
    }
}

fn criterion_2() -> Outcome {
    let cases = [
        ("B2", catalog::brandt_b2()),
        ("I2", catalog::symmetric_inverse_monoid(2)),
        ("chain4", catalog::chain_semilattice(4)),
    ];
    let mut failures = 0;
    let mut images = 0;
    for (_, s) in &cases {
        let green = green_structure(s);
        for j in nonzero_regular_classes(s, &green) {
            let pair = schutzenberger_pair::<f64>(s, &green, j, 0).expect("regular class");
            for rep in [&pair.left, &pair.right] {
                for m in &rep.images {
                    images += 1;
                    failures += usize::from(!is_preunitary(m, 1e-9).preunitary);
                }
            }
        }
    }
    Outcome {
        pass: failures == 0 && images > 0,
        detail: format!("{failures} failures over {images} images"),
    }
}

fn criterion_3() -> Outcome {
    let sweep = regular_rees_sweep(2, &[GroupData::trivial(), GroupData::cyclic(2)]);
    let mut agree = 0;
    for r in &sweep {
        let brute = brute_force_is_inverse(&r.table).is_inverse;
        if is_inverse_via_reps(&r.table).map(|v| v.is_inverse) == Ok(brute) {
            agree += 1;
        }
    }
    Outcome {
        pass: agree == sweep.len() && !sweep.is_empty(),
        detail: format!("{agree}/{} semigroups agree", sweep.len()),
    }
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, s) in [
        ("B2", catalog::brandt_b2()),
        ("I2", catalog::symmetric_inverse_monoid(2)),
    ] {
        let all = enumerate_involutions(&s).expect("small table");
        let survivors = all.iter().filter(|f| f.induces_inverse(&s)).count();
        let unique = inverse_inducing_involution(&s).ok().flatten().map(|f| f.map);
        let brute = brute_force_is_inverse(&s).inverse_map;
        ok &= survivors == 1 && unique.is_some() && unique == brute;
        notes.push(format!("{name}: {} involutions, {survivors} survivor", all.len()));
    }
    Outcome {
        pass: ok,
        detail: notes.join(", "),
    }
}

fn b2_transpose() -> Vec<usize> {
    vec![0, 2, 1, 3, 4]
}

fn criterion_5() -> Outcome {
    let b2 = star_representable_all(&catalog::brandt_b2(), &b2_transpose()).expect("B2");
    let worst = b2.irreps.iter().filter_map(|d| d.star_form_defect).fold(0.0, f64::max);
    let b2_ok = b2.representable
        && b2.forms.len() == b2.irreps.len()
        && b2.irreps.iter().all(|d| d.star_form_defect.is_some_and(|x| x <= 1e-8));
    let c3 = star_representable_all(&catalog::cyclic_group(3), &[0, 1, 2]).expect("C3");
    let c3_ok = c3.semisimple && !c3.character_condition && !c3.representable;
    let null = star_representable_all(&catalog::null_semigroup(), &[0, 1]).expect("null");
    let null_ok = !null.semisimple && !null.representable;
    Outcome {
        pass: b2_ok && c3_ok && null_ok,
        detail: format!(
            "B2 representable={} max defect {worst:.1e}; C3 character test={}; null semisimple={}",
            b2.representable, c3.character_condition, null.semisimple
        ),
    }
}

fn criterion_6() -> Outcome {
    let b2 = star_representable_all(&catalog::brandt_b2(), &b2_transpose()).expect("B2");
    let reducible = b2.forms.iter().filter(|f| is_completely_reducible(f)).count();
    let x = CMatrix::<f64>::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 0.0]]);
    let y = CMatrix::<f64>::from_real_rows(&[vec![0.0, 0.0], vec![1.0, 1.0]]);
    let l2 = MatrixRep::new(RepKind::Other, 2, vec![x, y]);
    let l2_valid = l2.is_representation(&catalog::left_zero(2), 1e-12);
    let l2_cr = is_completely_reducible(&l2);
    Outcome {
        pass: !b2.forms.is_empty() && reducible == b2.forms.len() && l2_valid && !l2_cr,
        detail: format!(
            "{reducible}/{} ∗-forms completely reducible; L2 completely reducible={l2_cr}",
            b2.forms.len()
        ),
    }
}

fn criterion_7() -> Outcome {
    let g = GroupData::symmetric(3);
    let instances = corollary_instances(&g, g.identity, 3, 50, 7);
    let mut exact = 0;
    for (r, given, star) in &instances {
        if let Ok(ss) = decompose_rees_involution(r, star) {
            if reconstruct(r, &ss) == *star && ss.z == given.z {
                exact += 1;
            }
        }
    }
    Outcome {
        pass: exact == instances.len() && instances.len() == 50,
        detail: format!("{exact}/{} exact round trips", instances.len()),
    }
}

fn criterion_8() -> Outcome {
    let b2 = is_semisimple_algebra(&catalog::brandt_b2());
    let c3 = is_semisimple_algebra(&catalog::cyclic_group(3));
    let l2 = is_semisimple_algebra(&catalog::left_zero(2));
    let null = is_semisimple_algebra(&catalog::null_semigroup());
    Outcome {
        pass: b2 && c3 && !l2 && !null,
        detail: format!("B2={b2} C3={c3} L2={l2} null={null}"),
    }
}

fn contracted_dimension(s: &SemigroupTable) -> usize {
    s.len() - usize::from(s.zero().is_some())
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, s) in [
        ("B2", catalog::brandt_b2()),
        ("I2", catalog::symmetric_inverse_monoid(2)),
    ] {
        let green = green_structure(&s);
        let (_, irreps) = semigroup_irreps::<f64>(&s, &green, 0).expect("irreps");
        for (a, x) in irreps.iter().enumerate() {
            for (b, y) in irreps.iter().enumerate() {
                let dim = solve_intertwiners(&x.rep.images, &y.rep.images, x.rep.dim, y.rep.dim, 1e-9).dim();
                ok &= dim == usize::from(a == b);
            }
        }
        let total: usize = irreps.iter().map(|r| r.rep.dim * r.rep.dim).sum();
        ok &= total == contracted_dimension(&s);
        notes.push(format!("{name}: {} irreps, Σdim² = {total}", irreps.len()));
    }
    Outcome {
        pass: ok,
        detail: notes.join(", "),
    }
}

#[test]
fn acceptance() {
    let results = [
        run(1, 5, criterion_1),
        run(2, 10, criterion_2),
        run(3, 60, criterion_3),
        run(4, 30, criterion_4),
        run(5, 5, criterion_5),
        run(6, 2, criterion_6),
        run(7, 30, criterion_7),
        run(8, 1, criterion_8),
        run(9, 10, criterion_9),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    assert_eq!(passed, results.len());
}
