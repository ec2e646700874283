//! Schützenberger representations, apex, contragredient, and the decision
//! procedures for the inverse property and for ∗-representability.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group_repr::{direct_sum, irreducible_unitary_reps, GroupIrrep};
use crate::linalg::{positive_factor_eps, signature, solve_intertwiners, svd, CMatrix};
use crate::rees::{coordinatize_jclass, ReesCoordinatization};
use crate::rep::{MatrixRep, RepKind};
use crate::scalar::{czero, Real, C};
use crate::semigroup::oracle::{brute_force_is_inverse, is_semisimple_algebra};
use crate::semigroup::{green_structure, GreenStructure, SemigroupTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Knobs shared by the decision procedures.
#[derive(Debug, Clone, Copy)]
pub struct DecisionOptions<T: Real = f64> {
    /// Seed for the randomized construction of group irreps.
    pub seed: u64,
    /// Tolerance for preunitarity and rank decisions.
    pub eps: T,
    /// Cross-check verdicts against brute force.
    pub oracle: bool,
}

impl<T: Real> Default for DecisionOptions<T> {
    fn default() -> Self {
        DecisionOptions {
            seed: 0,
            eps: T::default_eps(),
            oracle: true,
        }
    }
}

fn star_tol<T: Real>() -> T {
    T::lit(1e-8).max(T::default_eps().sqrt())
}

/// Whether J-class `j` is the class of the declared zero. That class carries
/// no proper representation and is skipped by the procedures below.
pub fn is_zero_class(s: &SemigroupTable, green: &GreenStructure, j: usize) -> bool {
    s.zero().is_some_and(|z| green.jclass_of[z] == j)
}

/// Regular J-classes other than the zero class, in class order.
pub fn nonzero_regular_classes(s: &SemigroupTable, green: &GreenStructure) -> Vec<usize> {
    (0..green.jclasses.len())
        .filter(|&j| green.regular_j[j] && !is_zero_class(s, green, j))
        .collect()
}

/// The left (`s x_i = x_j g_{ji}`) or right (`y_j s = h_{ji} y_i`)
/// Schützenberger representation over `σ`, given by group-element images.
/// Entries leaving the class are zero blocks.
pub fn schutzenberger_rep<T: Real>(
    s: &SemigroupTable,
    coord: &ReesCoordinatization,
    sigma: &[CMatrix<T>],
    side: Side,
) -> MatrixRep<T> {
    let d = sigma.first().map_or(0, |m| m.rows());
    let k = match side {
        Side::Left => coord.s(),
        Side::Right => coord.t(),
    };
    let images = s
        .elements()
        .map(|a| {
            let mut m = CMatrix::zeros(k * d, k * d);
            for src in 0..k {
                let v = match side {
                    Side::Left => s.mul(a, coord.x[src]),
                    Side::Right => s.mul(coord.y[src], a),
                };
                let Some((i, j, g)) = coord.coords[v] else {
                    continue;
                };
                // s x_i lands in L_e, so its column coordinate is y_0 = e;
                // dually y_j s lands in R_e.
                let (blk_row, blk_col) = match side {
                    Side::Left => {
                        debug_assert_eq!(j, 0);
                        (i, src)
                    }
                    Side::Right => {
                        debug_assert_eq!(i, 0);
                        (src, j)
                    }
                };
                m.set_block(blk_row * d, blk_col * d, &sigma[g]);
            }
            m
        })
        .collect();
    let kind = match side {
        Side::Left => RepKind::SchutzenbergerLeft,
        Side::Right => RepKind::SchutzenbergerRight,
    };
    let mut rep = MatrixRep::new(kind, k * d, images);
    rep.apex = Some(coord.jclass);
    rep
}

/// Verdict for one J-class.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JClassVerdict {
    pub jclass: usize,
    pub size: usize,
    pub group_order: usize,
    pub s: usize,
    pub t: usize,
    pub sandwich_normalized: bool,
    pub semiunitary: bool,
    /// Label of the first element with a non-preunitary image.
    pub failing_element: Option<String>,
    pub failing_side: Option<Side>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InverseVerdict {
    pub is_inverse: bool,
    pub jclasses: Vec<JClassVerdict>,
    /// `None` when the brute-force cross-check was skipped.
    pub oracle_agrees: Option<bool>,
}

/// The pair of Schützenberger representations of one class over the direct
/// sum of all irreducible unitary representations of `G_e`.
pub struct SchutzenbergerPair<T: Real = f64> {
    pub coord: ReesCoordinatization,
    pub group_irreps: Vec<GroupIrrep<T>>,
    pub left: MatrixRep<T>,
    pub right: MatrixRep<T>,
}

pub fn schutzenberger_pair<T: Real>(
    s: &SemigroupTable,
    green: &GreenStructure,
    j: usize,
    seed: u64,
) -> Result<SchutzenbergerPair<T>> {
    let coord = coordinatize_jclass(s, green, j)?;
    let group_irreps = irreducible_unitary_reps::<T>(&coord.group, seed)?;
    let sigma = direct_sum(&group_irreps, coord.group.order());
    let left = schutzenberger_rep(s, &coord, &sigma, Side::Left);
    let right = schutzenberger_rep(s, &coord, &sigma, Side::Right);
    Ok(SchutzenbergerPair {
        coord,
        group_irreps,
        left,
        right,
    })
}

/// Decides the inverse property from semiunitarity of the Schützenberger
/// representations of every J-class, in normalized coordinates.
pub fn is_inverse_via_reps(s: &SemigroupTable) -> Result<InverseVerdict> {
    is_inverse_via_reps_with::<f64>(s, &DecisionOptions::default())
}

pub fn is_inverse_via_reps_with<T: Real>(s: &SemigroupTable, opts: &DecisionOptions<T>) -> Result<InverseVerdict> {
    if let Some(a) = s.elements().find(|&a| !s.is_regular_element(a)) {
        return Err(Error::NotRegular(a));
    }
    let green = green_structure(s);
    let mut jclasses = Vec::new();
    for j in nonzero_regular_classes(s, &green) {
        let pair = schutzenberger_pair::<T>(s, &green, j, opts.seed)?;
        let fail_l = pair.left.first_non_preunitary(opts.eps);
        let fail_r = pair.right.first_non_preunitary(opts.eps);
        let failing = match (fail_l, fail_r) {
            (Some(a), Some(b)) if b < a => Some((b, Side::Right)),
            (Some(a), _) => Some((a, Side::Left)),
            (None, Some(b)) => Some((b, Side::Right)),
            (None, None) => None,
        };
        jclasses.push(JClassVerdict {
            jclass: j,
            size: green.jclasses[j].len(),
            group_order: pair.coord.group.order(),
            s: pair.coord.s(),
            t: pair.coord.t(),
            sandwich_normalized: pair.coord.sandwich_normalized,
            semiunitary: failing.is_none(),
            failing_element: failing.map(|(a, _)| s.label(a)),
            failing_side: failing.map(|(_, side)| side),
        });
    }
    let is_inverse = jclasses.iter().all(|v| v.semiunitary);
    let oracle_agrees = if opts.oracle {
        let brute = brute_force_is_inverse(s).is_inverse;
        if brute != is_inverse {
            return Err(Error::OracleMismatch {
                reps: is_inverse,
                brute,
            });
        }
        Some(true)
    } else {
        None
    };
    Ok(InverseVerdict {
        is_inverse,
        jclasses,
        oracle_agrees,
    })
}

/// Inverse with inverse map `star`: the normalized Schützenberger pair of
/// every class is semiunitary and satisfies `π(s*) = π(s)*`.
pub fn is_inverse_with_involution(s: &SemigroupTable, star: &[usize]) -> Result<bool> {
    is_inverse_with_involution_with::<f64>(s, star, &DecisionOptions::default())
}

pub fn is_inverse_with_involution_with<T: Real>(
    s: &SemigroupTable,
    star: &[usize],
    opts: &DecisionOptions<T>,
) -> Result<bool> {
    s.check_involution(star)?;
    let holds = if s.is_regular() {
        let verdict = is_inverse_via_reps_with(s, &DecisionOptions { oracle: false, ..*opts })?;
        verdict.is_inverse && {
            let green = green_structure(s);
            let tol = star_tol::<T>();
            let mut ok = true;
            for j in nonzero_regular_classes(s, &green) {
                let pair = schutzenberger_pair::<T>(s, &green, j, opts.seed)?;
                if pair.left.star_defect(star) > tol || pair.right.star_defect(star) > tol {
                    ok = false;
                    break;
                }
            }
            ok
        }
    } else {
        false
    };
    if opts.oracle {
        let o = brute_force_is_inverse(s);
        let brute = o.inverse_map.as_deref() == Some(star);
        if holds {
            let axioms = s
                .elements()
                .all(|a| s.mul(s.mul(a, star[a]), a) == a && s.mul(s.mul(star[a], a), star[a]) == star[a]);
            if !axioms || !brute {
                return Err(Error::OracleMismatch {
                    reps: true,
                    brute: false,
                });
            }
        } else if brute {
            return Err(Error::OracleMismatch {
                reps: false,
                brute: true,
            });
        }
    }
    Ok(holds)
}

/// Apex of an irreducible representation: the regular J-class `J` whose
/// ideal `I_J` is the annihilator, and an idempotent of `J`.
pub fn apex<T: Real>(s: &SemigroupTable, green: &GreenStructure, pi: &MatrixRep<T>) -> Result<(usize, usize)> {
    let scale = pi.images.iter().map(|m| m.norm()).fold(T::zero(), T::max);
    let tol = T::default_eps().sqrt() * (T::one() + scale);
    let ann: Vec<usize> = s.elements().filter(|&a| pi.images[a].norm() <= tol).collect();
    for j in 0..green.jclasses.len() {
        if green.regular_j[j] && green.ideal_below(j) == ann {
            let e = green
                .idempotents
                .iter()
                .copied()
                .find(|&e| green.jclass_of[e] == j && pi.images[e].norm() > tol)
                .ok_or(Error::NoApex)?;
            return Ok((j, e));
        }
    }
    Err(Error::NoApex)
}

/// `σ̌(g) = σ(g⁻¹)ᵀ`.
pub fn contragredient_group<T: Real>(g: &crate::semigroup::GroupData, sigma: &[CMatrix<T>]) -> Vec<CMatrix<T>> {
    (0..g.order()).map(|x| sigma[g.inv(x)].transpose()).collect()
}

/// The contragredient of `Ind(σ)`, realized as `Ind(σ̌)`.
pub fn contragredient<T: Real>(
    s: &SemigroupTable,
    coord: &ReesCoordinatization,
    sigma: &[CMatrix<T>],
) -> Result<MatrixRep<T>> {
    if !is_semisimple_algebra(s) {
        return Err(Error::NotSemisimple);
    }
    let check = contragredient_group(&coord.group, sigma);
    let mut rep = schutzenberger_rep(s, coord, &check, Side::Left);
    rep.kind = RepKind::Contragredient;
    Ok(rep)
}

/// An irreducible representation `Ind(σ)` of `S`.
#[derive(Debug, Clone)]
pub struct SemigroupIrrep<T: Real = f64> {
    pub jclass: usize,
    /// Index into the group irreps of the class.
    pub group_irrep: usize,
    pub sigma: Vec<CMatrix<T>>,
    pub rep: MatrixRep<T>,
}

/// Irreducible representations of `S` induced from the irreps of the
/// maximal subgroups of the nonzero regular classes, with the coordinates
/// used for each class. Irreducible when the contracted algebra is
/// semisimple.
pub fn semigroup_irreps<T: Real>(
    s: &SemigroupTable,
    green: &GreenStructure,
    seed: u64,
) -> Result<(Vec<ReesCoordinatization>, Vec<SemigroupIrrep<T>>)> {
    let mut coords = Vec::new();
    let mut out = Vec::new();
    for j in nonzero_regular_classes(s, green) {
        let coord = coordinatize_jclass(s, green, j)?;
        let irreps = irreducible_unitary_reps::<T>(&coord.group, seed)?;
        for (k, sigma) in irreps.into_iter().enumerate() {
            let mut rep = schutzenberger_rep(s, &coord, &sigma.images, Side::Left);
            rep.kind = RepKind::Irreducible;
            out.push(SemigroupIrrep {
                jclass: j,
                group_irrep: k,
                sigma: sigma.images,
                rep,
            });
        }
        coords.push(coord);
    }
    Ok((coords, out))
}

/// Per-irrep outcome of the ∗-representability test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IrrepStarDetail {
    pub jclass: usize,
    pub group_irrep: usize,
    pub dim: usize,
    /// Dimension of the space of intertwiners from `π̌` to `D(π)∘∗`.
    pub hom_dim: usize,
    /// `π̌ ≃ D(π)∘∗`.
    pub equivalent: bool,
    /// `max_s ‖π'(s*) − π'(s)*‖` of the constructed ∗-form.
    pub star_form_defect: Option<f64>,
    /// Signature of the Hermitian intertwiner when neither sign is definite.
    pub obstruction: Option<(usize, usize)>,
    pub completely_reducible: Option<bool>,
    /// Every image of the ∗-form is preunitary.
    pub semiunitary: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StarVerdict<T: Real = f64> {
    pub semisimple: bool,
    /// Every irrep satisfies `π̌ ≃ D(π)∘∗`.
    pub character_condition: bool,
    /// An explicit ∗-form was built for every irrep.
    pub star_forms_constructed: bool,
    /// Every finite-dimensional representation is equivalent to a
    /// ∗-representation.
    pub representable: bool,
    pub irreps: Vec<IrrepStarDetail>,
    #[serde(skip)]
    pub forms: Vec<MatrixRep<T>>,
}

/// Explicit ∗-form of a representation: a positive `A` with
/// `A π(s*) = π(s)* A` gives `π' = A^{1/2} π A^{-1/2}`.
pub fn star_form<T: Real>(pi: &MatrixRep<T>, star: &[usize], eps: T) -> Result<MatrixRep<T>> {
    let d = pi.dim;
    let adj: Vec<CMatrix<T>> = pi.images.iter().map(|m| m.adjoint()).collect();
    let starred: Vec<CMatrix<T>> = star.iter().map(|&t| pi.images[t].clone()).collect();
    let space = solve_intertwiners(&adj, &starred, d, d, eps);
    let a = space
        .invertible_element(eps)
        .ok_or_else(|| Error::ConditionFails("no invertible Hermitian intertwiner".into()))?;
    // A* = cA with |c| = 1; the phase d = c^{1/2} makes dA Hermitian.
    let a_adj = a.adjoint();
    let (mut num, mut den) = (czero::<T>(), T::zero());
    for (x, y) in a_adj.data().iter().zip(a.data()) {
        num += *x * y.conj();
        den += y.norm_sqr();
    }
    let c: C<T> = num / den;
    let a = a.scale(c.sqrt());
    let a = a.scale_real(T::lit(d as f64).sqrt() / a.norm());
    let herm = CMatrix::from_fn(d, d, |i, j| (a[(i, j)] + a[(j, i)].conj()) * T::lit(0.5));
    let loose = eps.sqrt();
    let b = positive_factor_eps(&herm, loose)
        .or_else(|_| positive_factor_eps(&(-&herm), loose))
        .map_err(|_| {
            let (p, q, _) = signature(&herm, loose);
            Error::FactorizationObstruction {
                positive: p,
                negative: q,
            }
        })?;
    let b_inv = b.inverse(eps).ok_or(Error::FactorizationObstruction {
        positive: 0,
        negative: 0,
    })?;
    let out = pi.conjugated(&b, &b_inv, RepKind::StarForm);
    let scale = out.images.iter().map(|m| m.norm()).fold(T::one(), T::max);
    let defect = out.star_defect(star);
    if defect > star_tol::<T>() * scale {
        return Err(Error::ConditionFails(format!("∗-form defect {defect}")));
    }
    Ok(out)
}

/// Whether every representation of `(S, ∗)` is equivalent to a
/// ∗-representation: the contracted algebra must be semisimple and every
/// irrep must satisfy `π̌ ≃ D(π)∘∗`. When both hold, an explicit ∗-form of
/// each irrep is constructed and checked.
pub fn star_representable_all(s: &SemigroupTable, star: &[usize]) -> Result<StarVerdict> {
    star_representable_all_with::<f64>(s, star, &DecisionOptions::default())
}

pub fn star_representable_all_with<T: Real>(
    s: &SemigroupTable,
    star: &[usize],
    opts: &DecisionOptions<T>,
) -> Result<StarVerdict<T>> {
    s.check_involution(star)?;
    if !is_semisimple_algebra(s) {
        return Ok(StarVerdict {
            semisimple: false,
            character_condition: false,
            star_forms_constructed: false,
            representable: false,
            irreps: Vec::new(),
            forms: Vec::new(),
        });
    }
    let green = green_structure(s);
    let (coords, irreps) = semigroup_irreps::<T>(s, &green, opts.seed)?;
    let mut details = Vec::new();
    let mut forms = Vec::new();
    for irr in &irreps {
        let coord = coords
            .iter()
            .find(|c| c.jclass == irr.jclass)
            .expect("class coordinates");
        let check = contragredient(s, coord, &irr.sigma)?;
        let dual = irr.rep.dual_star(star);
        let space = solve_intertwiners(&check.images, &dual.images, irr.rep.dim, irr.rep.dim, opts.eps);
        let equivalent = space.dim() == 1 && space.invertible_element(opts.eps).is_some();
        let mut detail = IrrepStarDetail {
            jclass: irr.jclass,
            group_irrep: irr.group_irrep,
            dim: irr.rep.dim,
            hom_dim: space.dim(),
            equivalent,
            star_form_defect: None,
            obstruction: None,
            completely_reducible: None,
            semiunitary: None,
        };
        if equivalent {
            match star_form(&irr.rep, star, opts.eps) {
                Ok(f) => {
                    detail.star_form_defect = f.star_defect(star).to_f64();
                    detail.completely_reducible = Some(is_completely_reducible(&f));
                    detail.semiunitary = Some(f.is_semiunitary(opts.eps.sqrt()));
                    forms.push(f);
                }
                Err(Error::FactorizationObstruction { positive, negative }) => {
                    detail.obstruction = Some((positive, negative));
                }
                Err(e) => return Err(e),
            }
        }
        details.push(detail);
    }
    let character_condition = details.iter().all(|d| d.equivalent);
    let star_forms_constructed = character_condition && forms.len() == details.len();
    Ok(StarVerdict {
        semisimple: true,
        character_condition,
        star_forms_constructed,
        representable: star_forms_constructed,
        irreps: details,
        forms,
    })
}

/// Complete reducibility via the enveloping algebra: the trace form
/// `(X, Y) ↦ tr(XY)` on the span of the images must be nondegenerate.
pub fn is_completely_reducible<T: Real>(pi: &MatrixRep<T>) -> bool {
    let d = pi.dim;
    if d == 0 || pi.images.is_empty() {
        return true;
    }
    let cols: Vec<Vec<C<T>>> = pi.images.iter().map(|m| m.data().to_vec()).collect();
    let stacked = CMatrix::from_columns(d * d, &cols);
    let dec = svd(&stacked);
    let r = dec.rank(T::lit(1e-10).max(T::default_eps()));
    if r == 0 {
        return true;
    }
    let basis: Vec<CMatrix<T>> = (0..r)
        .map(|k| CMatrix::new(d, d, dec.u.column(k)).expect("finite basis"))
        .collect();
    let gram = CMatrix::from_fn(r, r, |a, b| (&basis[a] * &basis[b]).trace());
    let g = svd(&gram);
    g.rank(T::lit(1e-6).max(T::default_eps().sqrt())) == r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rees::{build_rees, standard_reps};
    use crate::semigroup::GroupData;

    fn b2_transpose() -> Vec<usize> {
        vec![0, 2, 1, 3, 4]
    }

    #[test]
    fn b2_left_rep_matches_standard_rep_on_class() {
        let b2 = catalog::brandt_b2();
        let green = green_structure(&b2);
        let top = green.jclass_of[0];
        let coord = coordinatize_jclass(&b2, &green, top).unwrap();
        let sigma = vec![CMatrix::<f64>::identity(1)];
        let left = schutzenberger_rep(&b2, &coord, &sigma, Side::Left);
        assert_eq!(left.dim, 2);
        assert!(left.is_representation(&b2, 1e-12));
        let r = build_rees(2, 2, GroupData::trivial(), coord.p.clone()).unwrap();
        let (std_l, std_r) = standard_reps(&r, &sigma);
        let right = schutzenberger_rep(&b2, &coord, &sigma, Side::Right);
        for &b in &green.jclasses[top] {
            let k = coord.rees_index(b).unwrap();
            assert!(left.images[b].approx_eq(&std_l.images[k], 0.0));
            assert!(right.images[b].approx_eq(&std_r.images[k], 0.0));
        }
        assert!(left.images[4].is_zero(0.0));
    }

    #[test]
    fn group_schutzenberger_rep_is_sigma() {
        let s3 = catalog::symmetric_group(3);
        let green = green_structure(&s3);
        let coord = coordinatize_jclass(&s3, &green, 0).unwrap();
        let irreps = irreducible_unitary_reps::<f64>(&coord.group, 0).unwrap();
        let sigma = &irreps[2].images;
        let left = schutzenberger_rep(&s3, &coord, sigma, Side::Left);
        for g in s3.elements() {
            assert!(left.images[g].approx_eq(&sigma[coord.group.local(g).unwrap()], 1e-12));
        }
    }

    #[test]
    fn verdicts_on_small_semigroups() {
        let v = is_inverse_via_reps(&catalog::brandt_b2()).unwrap();
        assert!(v.is_inverse);
        assert_eq!(v.oracle_agrees, Some(true));
        assert_eq!(v.jclasses.len(), 1);

        let v = is_inverse_via_reps(&catalog::left_zero(2)).unwrap();
        assert!(!v.is_inverse);
        assert_eq!((v.jclasses[0].s, v.jclasses[0].t), (2, 1));

        let r = build_rees(
            2,
            2,
            GroupData::trivial(),
            vec![vec![Some(0), Some(0)], vec![None, Some(0)]],
        )
        .unwrap();
        let v = is_inverse_via_reps(&r.table).unwrap();
        assert!(!v.is_inverse);
        assert_eq!(v.jclasses[0].failing_element.as_deref(), Some("(1)_1,1"));
        assert_eq!(v.jclasses[0].failing_side, Some(Side::Left));

        assert!(matches!(
            is_inverse_via_reps(&catalog::null_semigroup()),
            Err(Error::NotRegular(1))
        ));
    }

    #[test]
    fn munn_reps_are_semiunitary_and_resolve_identity() {
        for s in [
            catalog::symmetric_inverse_monoid(2),
            catalog::symmetric_inverse_monoid(3),
            catalog::chain_semilattice(4),
        ] {
            let green = green_structure(&s);
            for j in nonzero_regular_classes(&s, &green) {
                let pair = schutzenberger_pair::<f64>(&s, &green, j, 0).unwrap();
                assert!(pair.coord.sandwich_normalized);
                assert!(pair.left.is_semiunitary(1e-9));
                assert!(pair.right.is_semiunitary(1e-9));
                assert!(pair.left.is_representation(&s, 1e-10));
                assert!(pair.right.is_representation(&s, 1e-10));
                let total = pair
                    .coord
                    .e_diag
                    .iter()
                    .map(|e| pair.left.images[e.unwrap()].clone())
                    .fold(CMatrix::zeros(pair.left.dim, pair.left.dim), |acc, m| &acc + &m);
                assert!(total.approx_eq(&CMatrix::identity(pair.left.dim), 1e-12));
            }
        }
    }

    #[test]
    fn involution_verdicts() {
        let b2 = catalog::brandt_b2();
        assert!(is_inverse_with_involution(&b2, &b2_transpose()).unwrap());
        // Transpose followed by the index swap: e11 ↦ e22.
        assert!(!is_inverse_with_involution(&b2, &[3, 1, 2, 0, 4]).unwrap());
        assert!(is_inverse_with_involution(&catalog::chain_semilattice(2), &[0, 1]).unwrap());
        assert!(matches!(
            is_inverse_with_involution(&b2, &[1, 0, 2, 3, 4]),
            Err(Error::NotInvolution(_))
        ));
    }

    #[test]
    fn apex_examples() {
        let b2 = catalog::brandt_b2();
        let green = green_structure(&b2);
        let (_, irreps) = semigroup_irreps::<f64>(&b2, &green, 0).unwrap();
        assert_eq!(irreps.len(), 1);
        assert_eq!(apex(&b2, &green, &irreps[0].rep).unwrap(), (green.jclass_of[0], 0));

        let chain = catalog::chain_semilattice(2);
        let green = green_structure(&chain);
        let triv = MatrixRep::new(RepKind::Other, 1, vec![CMatrix::<f64>::identity(1); 2]);
        assert_eq!(apex(&chain, &green, &triv).unwrap(), (green.jclass_of[0], 0));

        // C₂ with a zero adjoined, sign on the units.
        let c2z = catalog::cyclic_group(2).with_adjoined_zero();
        let green = green_structure(&c2z);
        let sign = MatrixRep::new(
            RepKind::Other,
            1,
            vec![
                CMatrix::<f64>::identity(1),
                CMatrix::real_diagonal(&[-1.0]),
                CMatrix::zeros(1, 1),
            ],
        );
        assert_eq!(apex(&c2z, &green, &sign).unwrap(), (green.jclass_of[0], 0));

        let l2 = catalog::left_zero(2);
        let green = green_structure(&l2);
        let bad = MatrixRep::new(
            RepKind::Other,
            1,
            vec![CMatrix::<f64>::identity(1), CMatrix::zeros(1, 1)],
        );
        assert_eq!(apex(&l2, &green, &bad), Err(Error::NoApex));
    }

    #[test]
    fn contragredient_examples() {
        let c3 = catalog::cyclic_group(3);
        let green = green_structure(&c3);
        let (coords, irreps) = semigroup_irreps::<f64>(&c3, &green, 0).unwrap();
        let omega = &irreps[1];
        let check = contragredient(&c3, &coords[0], &omega.sigma).unwrap();
        for (a, b) in check.character().iter().zip(omega.rep.character()) {
            assert!((*a - b.conj()).norm() < 1e-9);
        }
        // ω̌ carries ω².
        assert!((check.images[1][(0, 0)] - irreps[2].rep.images[1][(0, 0)]).norm() < 1e-9);

        let b2 = catalog::brandt_b2();
        let green = green_structure(&b2);
        let (coords, irreps) = semigroup_irreps::<f64>(&b2, &green, 0).unwrap();
        let check = contragredient(&b2, &coords[0], &irreps[0].sigma).unwrap();
        let hom = solve_intertwiners(&check.images, &irreps[0].rep.images, 2, 2, 1e-9);
        assert_eq!(hom.dim(), 1);

        let null = catalog::null_semigroup();
        let green = green_structure(&null);
        let coord = coordinatize_jclass(&null, &green, green.jclass_of[0]).unwrap();
        assert_eq!(
            contragredient(&null, &coord, &[CMatrix::<f64>::identity(1)]).unwrap_err(),
            Error::NotSemisimple
        );
    }

    #[test]
    fn contragredient_is_an_involution_up_to_equivalence() {
        let s = catalog::symmetric_inverse_monoid(3);
        let green = green_structure(&s);
        let (coords, irreps) = semigroup_irreps::<f64>(&s, &green, 0).unwrap();
        for irr in &irreps {
            let coord = coords.iter().find(|c| c.jclass == irr.jclass).unwrap();
            let once = contragredient_group(&coord.group, &irr.sigma);
            let twice = contragredient(&s, coord, &once).unwrap();
            let hom = solve_intertwiners(&twice.images, &irr.rep.images, irr.rep.dim, irr.rep.dim, 1e-9);
            assert_eq!(hom.dim(), 1);
        }
    }

    #[test]
    fn star_representability_examples() {
        let v = star_representable_all(&catalog::brandt_b2(), &b2_transpose()).unwrap();
        assert!(v.representable);
        for f in &v.forms {
            assert!(f.star_defect(&b2_transpose()) <= 1e-8);
            assert!(is_completely_reducible(f));
        }

        let v = star_representable_all(&catalog::cyclic_group(3), &[0, 1, 2]).unwrap();
        assert!(v.semisimple);
        assert!(!v.character_condition);
        assert!(!v.representable);

        let v = star_representable_all(&catalog::null_semigroup(), &[0, 1]).unwrap();
        assert!(!v.semisimple);
        assert!(!v.representable);
    }

    #[test]
    fn symmetric_group_twisted_star_is_obstructed() {
        let s3 = catalog::symmetric_group(3);
        let g = GroupData::from_table(&s3).unwrap();
        let c0 = 1;
        let star: Vec<usize> = (0..6).map(|x| g.mul(g.mul(c0, g.inv(x)), c0)).collect();
        let v = star_representable_all(&s3, &star).unwrap();
        assert!(v.character_condition);
        assert!(!v.star_forms_constructed);
        let two = v.irreps.iter().find(|d| d.dim == 2).unwrap();
        assert_eq!(two.obstruction, Some((1, 1)));
    }

    #[test]
    fn complete_reducibility() {
        let x = CMatrix::<f64>::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 0.0]]);
        let y = CMatrix::<f64>::from_real_rows(&[vec![0.0, 0.0], vec![1.0, 1.0]]);
        let pi = MatrixRep::new(RepKind::Other, 2, vec![x, y]);
        assert!(!is_completely_reducible(&pi));

        let c3 = catalog::cyclic_group(3);
        let green = green_structure(&c3);
        let (_, irreps) = semigroup_irreps::<f64>(&c3, &green, 0).unwrap();
        let sum = MatrixRep::direct_sum(&[irreps[0].rep.clone(), irreps[1].rep.clone()]);
        assert!(is_completely_reducible(&sum));
    }

    #[test]
    fn irreps_satisfy_schur_and_dimension_count() {
        for s in [catalog::brandt_b2(), catalog::symmetric_inverse_monoid(2)] {
            let green = green_structure(&s);
            let (coords, irreps) = semigroup_irreps::<f64>(&s, &green, 0).unwrap();
            for (a, pa) in irreps.iter().enumerate() {
                assert!(pa.rep.is_representation(&s, 1e-10));
                for (b, pb) in irreps.iter().enumerate() {
                    let hom = solve_intertwiners(&pa.rep.images, &pb.rep.images, pa.rep.dim, pb.rep.dim, 1e-9);
                    assert_eq!(hom.dim(), usize::from(a == b));
                }
            }
            let total: usize = irreps
                .iter()
                .map(|r| {
                    let c = coords.iter().find(|c| c.jclass == r.jclass).unwrap();
                    (c.s() * r.sigma[0].rows()).pow(2)
                })
                .sum();
            assert_eq!(total, s.nonzero_elements().count());
        }
    }
}
