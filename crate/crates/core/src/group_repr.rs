//! Irreducible unitary representations of finite groups, characters, and
//! ∗-forms of representations under an involution of the group.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigen, polar_decompose_eps, positive_factor_eps, signature, solve_intertwiners, CMatrix,
};
use crate::scalar::{c, Real, C};
use crate::semigroup::GroupData;

/// A matrix representation of a group, indexed by local group element.
#[derive(Debug, Clone)]
pub struct GroupIrrep<T: Real = f64> {
    pub dim: usize,
    pub images: Vec<CMatrix<T>>,
    /// Character value on each conjugacy class.
    pub character: Vec<C<T>>,
    pub unitary: bool,
}

/// Tolerance for comparing characters.
pub fn character_tol<T: Real>() -> T {
    T::lit(1e-6).max(T::default_eps() * T::lit(100.0))
}

fn matrix_tol<T: Real>() -> T {
    T::lit(1e-9).max(T::default_eps())
}

impl<T: Real> GroupIrrep<T> {
    /// Wraps a family of images, computing the class character and the
    /// unitary flag.
    pub fn from_images(g: &GroupData, images: Vec<CMatrix<T>>) -> Self {
        let dim = images.first().map_or(0, |m| m.rows());
        let character = g.conj_classes.iter().map(|cl| images[cl[0]].trace()).collect();
        let mut r = GroupIrrep {
            dim,
            images,
            character,
            unitary: false,
        };
        r.unitary = r.is_unitary(matrix_tol::<T>() * T::lit(dim.max(1) as f64));
        r
    }

    pub fn trace(&self, g: &GroupData, x: usize) -> C<T> {
        self.character[g.class_of[x]]
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        let id = CMatrix::identity(self.dim);
        self.images.iter().all(|u| (u * &u.adjoint()).approx_eq(&id, tol))
    }

    /// Largest defect `‖σ(a)σ(b) − σ(ab)‖` over all pairs.
    pub fn homomorphism_defect(&self, g: &GroupData) -> T {
        let n = g.order();
        let mut worst = T::zero();
        for a in 0..n {
            for b in 0..n {
                let d = (&self.images[a] * &self.images[b]).distance(&self.images[g.mul(a, b)]);
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// Class-weighted inner product `(1/|G|) Σ_g χ₁(g) conj(χ₂(g))`.
pub fn character_inner<T: Real>(g: &GroupData, chi1: &[C<T>], chi2: &[C<T>]) -> C<T> {
    let total: C<T> = g
        .conj_classes
        .iter()
        .enumerate()
        .map(|(k, cl)| chi1[k] * chi2[k].conj() * T::lit(cl.len() as f64))
        .sum();
    total / T::lit(g.order() as f64)
}

/// `σ'(g) = Q^{1/2} σ(g) Q^{-1/2}` with `Q = Σ_g σ(g)*σ(g)`.
pub fn unitarize<T: Real>(images: &[CMatrix<T>]) -> Vec<CMatrix<T>> {
    let Some(first) = images.first() else {
        return Vec::new();
    };
    let d = first.rows();
    let q = images
        .iter()
        .fold(CMatrix::zeros(d, d), |acc, m| &acc + &(&m.adjoint() * m));
    let e = hermitian_eigen(&q);
    let half = e.apply(|x| x.sqrt());
    let neg_half = e.apply(|x| T::one() / x.sqrt());
    images.iter().map(|m| &(&half * m) * &neg_half).collect()
}

/// `Q* R(x) Q` where `R` is the left regular representation and the columns
/// of `Q` span an invariant subspace.
fn restrict_regular<T: Real>(g: &GroupData, q: &CMatrix<T>, x: usize) -> CMatrix<T> {
    // R(x) e_y = e_{xy}, so (R(x) Q)[xy, :] = Q[y, :].
    let n = g.order();
    let k = q.cols();
    let mut rq = CMatrix::zeros(n, k);
    for y in 0..n {
        let row = g.mul(x, y);
        for j in 0..k {
            rq[(row, j)] = q[(y, j)];
        }
    }
    &q.adjoint() * &rq
}

fn random_hermitian<T: Real>(k: usize, rng: &mut ChaCha8Rng) -> CMatrix<T> {
    let mut h = CMatrix::zeros(k, k);
    for i in 0..k {
        h[(i, i)] = c(T::lit(rng.gen_range(-1.0..1.0)), T::zero());
        for j in i + 1..k {
            let z = c(T::lit(rng.gen_range(-1.0..1.0)), T::lit(rng.gen_range(-1.0..1.0)));
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    h
}

/// A complete set of pairwise inequivalent irreducible unitary
/// representations, found by splitting the regular representation with
/// random elements of its commutant. Ordered by dimension, then by
/// character values (trivial representation first).
pub fn irreducible_unitary_reps<T: Real>(g: &GroupData, seed: u64) -> Result<Vec<GroupIrrep<T>>> {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ctol = character_tol::<T>();
    let mut found: Vec<GroupIrrep<T>> = Vec::new();
    let mut stack = vec![CMatrix::<T>::identity(n)];
    let mut squares = 0usize;

    while let Some(q) = stack.pop() {
        if squares == n {
            break;
        }
        let k = q.cols();
        let images: Vec<CMatrix<T>> = (0..n).map(|x| restrict_regular(g, &q, x)).collect();
        let chi: Vec<C<T>> = g.conj_classes.iter().map(|cl| images[cl[0]].trace()).collect();
        let norm = character_inner(g, &chi, &chi).re;
        if (norm - T::one()).abs() <= ctol {
            let known = found
                .iter()
                .any(|r| r.character.iter().zip(&chi).all(|(a, b)| (*a - *b).norm() <= ctol));
            if !known {
                squares += k * k;
                found.push(GroupIrrep::from_images(g, unitarize(&images)));
            }
            continue;
        }
        let mut split = None;
        for _ in 0..32 {
            let h = random_hermitian::<T>(k, &mut rng);
            let m = images
                .iter()
                .fold(CMatrix::zeros(k, k), |acc, r| &acc + &(&(r * &h) * &r.adjoint()));
            let e = hermitian_eigen(&m);
            let spread = e.values[k - 1] - e.values[0];
            let clusters = e.clusters(spread * T::epsilon().sqrt() * T::lit(10.0));
            if clusters.len() > 1 {
                split = Some((e, clusters));
                break;
            }
        }
        let (e, clusters) = split.ok_or_else(|| Error::InvalidGroup("commutant splitting did not converge".into()))?;
        for (_, cols) in clusters.into_iter().rev() {
            stack.push(&q * &e.vectors.select_columns(&cols));
        }
    }

    if squares != n {
        return Err(Error::InvalidGroup(format!(
            "irreducible dimensions square-sum to {squares}, not {n}"
        )));
    }
    found.sort_by(|a, b| {
        a.dim.cmp(&b.dim).then_with(|| {
            for (x, y) in a.character.iter().zip(&b.character) {
                let key = |z: &C<T>| {
                    let r = (z.re / ctol).round();
                    let i = (z.im / ctol).round();
                    (-r, -i)
                };
                let (kx, ky) = (key(x), key(y));
                if let Some(o) = kx.partial_cmp(&ky).filter(|o| o.is_ne()) {
                    return o;
                }
            }
            std::cmp::Ordering::Equal
        })
    });
    Ok(found)
}

/// `χ(g*) = conj χ(g)` for every irreducible character and every element.
pub fn check_group_star_condition<T: Real>(g: &GroupData, star: &[usize], irreps: &[GroupIrrep<T>]) -> Result<bool> {
    g.check_involution(star)?;
    let tol = character_tol::<T>();
    Ok(irreps
        .iter()
        .all(|r| (0..g.order()).all(|x| (r.trace(g, star[x]) - r.trace(g, x).conj()).norm() <= tol)))
}

/// Conjugates a representation into one with `σ'(g*) = σ'(g)*`.
///
/// With `σ` unitary and irreducible, an intertwiner `A` with
/// `A σ(g⁻¹) = σ(g*) A` is unique up to scale and squares to a scalar.
/// Normalized to `A² = I` it is a Hermitian unitary, and `σ' = B⁻¹ σ B`
/// works for `B = A^{1/2}` as long as `A` (or `−A`) is positive definite.
pub fn star_representation_form<T: Real>(
    g: &GroupData,
    sigma: &GroupIrrep<T>,
    star: &[usize],
) -> Result<GroupIrrep<T>> {
    g.check_involution(star)?;
    let tol = character_tol::<T>();
    if let Some(x) = (0..g.order()).find(|&x| (sigma.trace(g, star[x]) - sigma.trace(g, x).conj()).norm() > tol) {
        return Err(Error::ConditionFails(format!("character differs at group element {x}")));
    }
    let d = sigma.dim;
    let s = if sigma.unitary {
        sigma.images.clone()
    } else {
        unitarize(&sigma.images)
    };
    let eps = T::default_eps();
    let inv_images: Vec<CMatrix<T>> = (0..g.order()).map(|x| s[g.inv(x)].clone()).collect();
    let star_images: Vec<CMatrix<T>> = (0..g.order()).map(|x| s[star[x]].clone()).collect();
    let space = solve_intertwiners(&star_images, &inv_images, d, d, eps);
    let a = space
        .invertible_element(eps)
        .ok_or_else(|| Error::ConditionFails("no invertible intertwiner".into()))?;
    // A² = cI; rescale so that A² = I.
    let c2 = (&a * &a).trace() / T::lit(d as f64);
    let a = a.scale(c2.sqrt().inv());
    // A is unitary up to a positive scale; remove it.
    let a = a.scale_real(T::lit(d as f64).sqrt() / a.norm());
    let herm = CMatrix::from_fn(d, d, |i, j| (a[(i, j)] + a[(j, i)].conj()) * T::lit(0.5));
    let b = match positive_factor_eps(&herm, eps.sqrt()) {
        Ok(b) => b,
        Err(_) => match positive_factor_eps(&(-&herm), eps.sqrt()) {
            Ok(b) => b,
            Err(_) => {
                let (p, q, _) = signature(&herm, eps.sqrt());
                return Err(Error::FactorizationObstruction {
                    positive: p,
                    negative: q,
                });
            }
        },
    };
    let b_inv = b.inverse(eps).ok_or(Error::FactorizationObstruction {
        positive: 0,
        negative: 0,
    })?;
    let out = GroupIrrep::from_images(g, s.iter().map(|m| &(&b_inv * m) * &b).collect());
    let defect = star_defect(&out.images, star);
    if defect > T::lit(1e-8).max(T::default_eps().sqrt()) {
        return Err(Error::ConditionFails(format!("∗-form defect {defect}")));
    }
    Ok(out)
}

/// `max_x ‖π(x*) − π(x)*‖`.
pub fn star_defect<T: Real>(images: &[CMatrix<T>], star: &[usize]) -> T {
    images
        .iter()
        .enumerate()
        .map(|(x, m)| images[star[x]].distance(&m.adjoint()))
        .fold(T::zero(), T::max)
}

/// Unitary part of the polar decomposition of an invertible intertwiner `t`
/// with `t π₁(s) = π₂(s) t`, checked to be unitary and to intertwine.
pub fn unitary_from_intertwiner<T: Real>(t: &CMatrix<T>, pi1: &[CMatrix<T>], pi2: &[CMatrix<T>]) -> Result<CMatrix<T>> {
    let eps = T::default_eps();
    let d = t.rows();
    if !t.is_square() || t.inverse(eps).is_none() {
        return Err(Error::NotEquivalent);
    }
    let u = polar_decompose_eps(t, eps).u;
    let tol = T::lit(1e-8).max(eps.sqrt());
    let unitary = (&u * &u.adjoint()).approx_eq(&CMatrix::identity(d), tol);
    let intertwines = pi1
        .iter()
        .zip(pi2)
        .all(|(a, b)| (&u * a).approx_eq(&(b * &u), tol * (T::one() + a.norm())));
    if unitary && intertwines {
        Ok(u)
    } else {
        Err(Error::NotEquivalent)
    }
}

/// A unitary `U` with `U π₁(s) = π₂(s) U` for all `s`.
pub fn unitary_intertwiner<T: Real>(pi1: &[CMatrix<T>], pi2: &[CMatrix<T>]) -> Result<CMatrix<T>> {
    let d1 = pi1.first().map_or(0, |m| m.rows());
    let d2 = pi2.first().map_or(0, |m| m.rows());
    if d1 != d2 {
        return Err(Error::NotEquivalent);
    }
    let eps = T::default_eps();
    let space = solve_intertwiners(pi2, pi1, d2, d1, eps);
    let t = space.invertible_element(eps).ok_or(Error::NotEquivalent)?;
    unitary_from_intertwiner(&t, pi1, pi2)
}

/// Character table rows (one per irrep) with class sizes, for reports.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub class_sizes: Vec<usize>,
    pub dims: Vec<usize>,
    /// `[re, im]` pairs.
    pub rows: Vec<Vec<[f64; 2]>>,
}

pub fn character_table<T: Real>(g: &GroupData, irreps: &[GroupIrrep<T>]) -> CharacterTable {
    let round = |x: T| {
        let v = x.to_f64().unwrap_or(f64::NAN);
        let r = (v * 1e9).round() / 1e9;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    };
    CharacterTable {
        class_sizes: g.conj_classes.iter().map(|c| c.len()).collect(),
        dims: irreps.iter().map(|r| r.dim).collect(),
        rows: irreps
            .iter()
            .map(|r| r.character.iter().map(|z| [round(z.re), round(z.im)]).collect())
            .collect(),
    }
}

/// Direct sum of representations.
pub fn direct_sum<T: Real>(reps: &[GroupIrrep<T>], order: usize) -> Vec<CMatrix<T>> {
    (0..order)
        .map(|x| CMatrix::block_diag(&reps.iter().map(|r| r.images[x].clone()).collect::<Vec<_>>()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::root_of_unity;

    fn check_complete(g: &GroupData, reps: &[GroupIrrep<f64>]) {
        assert_eq!(reps.iter().map(|r| r.dim * r.dim).sum::<usize>(), g.order());
        for (i, a) in reps.iter().enumerate() {
            assert!(a.unitary);
            assert!(a.homomorphism_defect(g) < 1e-9);
            for (j, b) in reps.iter().enumerate() {
                let ip = character_inner(g, &a.character, &b.character);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip - c(want, 0.0)).norm() < 1e-6);
            }
        }
    }

    #[test]
    fn cyclic_three() {
        let g = GroupData::cyclic(3);
        let reps = irreducible_unitary_reps::<f64>(&g, 7).unwrap();
        check_complete(&g, &reps);
        assert_eq!(reps.len(), 3);
        // Generator 1 acts by 1, ω, ω².
        let w: C<f64> = root_of_unity(1, 3);
        assert!((reps[0].images[1][(0, 0)] - c(1.0, 0.0)).norm() < 1e-9);
        assert!((reps[1].images[1][(0, 0)] - w).norm() < 1e-9);
        assert!((reps[2].images[1][(0, 0)] - w * w).norm() < 1e-9);
    }

    #[test]
    fn symmetric_three_dimensions() {
        let g = GroupData::symmetric(3);
        let reps = irreducible_unitary_reps::<f64>(&g, 1).unwrap();
        check_complete(&g, &reps);
        assert_eq!(reps.iter().map(|r| r.dim).collect::<Vec<_>>(), vec![1, 1, 2]);
    }

    #[test]
    fn trivial_group() {
        let g = GroupData::trivial();
        let reps = irreducible_unitary_reps::<f64>(&g, 0).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].dim, 1);
    }

    #[test]
    fn seeds_agree_on_characters() {
        let g = GroupData::symmetric(3);
        let a = irreducible_unitary_reps::<f64>(&g, 1).unwrap();
        let b = irreducible_unitary_reps::<f64>(&g, 99).unwrap();
        for (x, y) in a.iter().zip(&b) {
            for (p, q) in x.character.iter().zip(&y.character) {
                assert!((*p - *q).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn larger_groups_are_complete() {
        for g in [
            GroupData::symmetric(4),
            GroupData::cyclic(4).direct_product(&GroupData::cyclic(2)),
        ] {
            let reps = irreducible_unitary_reps::<f64>(&g, 3).unwrap();
            check_complete(&g, &reps);
        }
    }

    #[test]
    fn single_precision_irreps() {
        let g = GroupData::symmetric(3);
        let reps = irreducible_unitary_reps::<f32>(&g, 1).unwrap();
        assert_eq!(reps.iter().map(|r| r.dim).collect::<Vec<_>>(), vec![1, 1, 2]);
    }

    #[test]
    fn unitarize_examples() {
        let g = GroupData::cyclic(2);
        let t = CMatrix::<f64>::from_real_rows(&[vec![1.0, 1.0], vec![0.0, -1.0]]);
        let u = unitarize(&[CMatrix::identity(2), t.clone()]);
        let r = GroupIrrep::from_images(&g, u.clone());
        assert!(r.unitary);
        assert!((&u[1] * &u[1]).approx_eq(&CMatrix::identity(2), 1e-9));
        // Same character as the input.
        assert!((u[1].trace() - t.trace()).norm() < 1e-12);

        let v = CMatrix::from_rows(&[vec![root_of_unity::<f64>(1, 5)]]);
        let w = unitarize(&[CMatrix::identity(1), v.clone()]);
        assert!(w[1].approx_eq(&v, 1e-12));
    }

    #[test]
    fn star_condition_on_cyclic_three() {
        let g = GroupData::cyclic(3);
        let reps = irreducible_unitary_reps::<f64>(&g, 0).unwrap();
        assert!(check_group_star_condition(&g, &g.inverse, &reps).unwrap());
        assert!(!check_group_star_condition(&g, &[0, 1, 2], &reps).unwrap());
        let s3 = GroupData::symmetric(3);
        let reps = irreducible_unitary_reps::<f64>(&s3, 0).unwrap();
        assert!(check_group_star_condition(&s3, &s3.inverse, &reps).unwrap());
    }

    #[test]
    fn star_form_for_inverse_map() {
        let s3 = GroupData::symmetric(3);
        let reps = irreducible_unitary_reps::<f64>(&s3, 0).unwrap();
        for r in &reps {
            let f = star_representation_form(&s3, r, &s3.inverse).unwrap();
            assert!(star_defect(&f.images, &s3.inverse) < 1e-8);
        }
        let c2 = GroupData::cyclic(2);
        let sign = GroupIrrep::from_images(&c2, vec![CMatrix::identity(1), CMatrix::real_diagonal(&[-1.0])]);
        let f = star_representation_form(&c2, &sign, &c2.inverse).unwrap();
        assert!(f.images[1].approx_eq(&sign.images[1], 1e-12));
    }

    #[test]
    fn star_form_obstruction_in_symmetric_group() {
        // g* = c g⁻¹ c for a transposition c passes the character test, but
        // the normalized intertwiner on the 2-dimensional irrep is indefinite.
        let s3 = GroupData::symmetric(3);
        let c0 = 1; // [0,2,1]
        assert_eq!(s3.mul(c0, c0), s3.identity);
        let star: Vec<usize> = (0..6).map(|g| s3.mul(s3.mul(c0, s3.inv(g)), c0)).collect();
        let reps = irreducible_unitary_reps::<f64>(&s3, 0).unwrap();
        assert!(check_group_star_condition(&s3, &star, &reps).unwrap());
        assert_eq!(
            star_representation_form(&s3, &reps[2], &star).unwrap_err(),
            Error::FactorizationObstruction {
                positive: 1,
                negative: 1
            }
        );
    }

    #[test]
    fn condition_failure_is_reported() {
        let g = GroupData::cyclic(3);
        let reps = irreducible_unitary_reps::<f64>(&g, 0).unwrap();
        assert!(matches!(
            star_representation_form(&g, &reps[1], &[0, 1, 2]),
            Err(Error::ConditionFails(_))
        ));
    }

    #[test]
    fn unitary_intertwiner_examples() {
        let s3 = GroupData::symmetric(3);
        let reps = irreducible_unitary_reps::<f64>(&s3, 0).unwrap();
        let pi = &reps[2].images;
        let two = CMatrix::scalar(2, c(2.0, 0.0));
        let u = unitary_from_intertwiner(&two, pi, pi).unwrap();
        assert!(u.approx_eq(&CMatrix::identity(2), 1e-12));

        let th = 0.3f64;
        let v = CMatrix::from_rows(&[
            vec![c(th.cos(), 0.0), c(0.0, th.sin())],
            vec![c(0.0, th.sin()), c(th.cos(), 0.0)],
        ]);
        let pi2: Vec<CMatrix<f64>> = pi.iter().map(|m| &(&v * m) * &v.adjoint()).collect();
        let u = unitary_intertwiner(pi, &pi2).unwrap();
        // Irreducible: U agrees with V up to a phase.
        let phase = (&v.adjoint() * &u).trace() / 2.0;
        assert!((phase.norm() - 1.0).abs() < 1e-9);
        assert!(u.approx_eq(&v.scale(phase), 1e-9));

        assert_eq!(
            unitary_intertwiner(&reps[0].images, &reps[1].images),
            Err(Error::NotEquivalent)
        );
    }

    #[test]
    fn abelian_star_condition_holds_only_for_inverse() {
        let groups = [
            GroupData::cyclic(4),
            GroupData::cyclic(2).direct_product(&GroupData::cyclic(2)),
            GroupData::cyclic(5),
        ];
        for g in groups {
            let reps = irreducible_unitary_reps::<f64>(&g, 0).unwrap();
            let n = g.order();
            for perm in crate::semigroup::group::permutations(n) {
                if g.check_involution(&perm).is_err() {
                    continue;
                }
                let holds = check_group_star_condition(&g, &perm, &reps).unwrap();
                assert_eq!(holds, perm == g.inverse);
            }
        }
    }
}
