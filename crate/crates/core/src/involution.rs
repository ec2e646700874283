//! Involutions on finite semigroups: enumeration, the involution inducing
//! the inverse map, and the structure of involutions on Rees matrix
//! semigroups.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rees::ReesSemigroup;
use crate::scalar::integer_rank;
use crate::semigroup::iso::signature;
use crate::semigroup::{brute_force_is_inverse, green_structure, GroupData, SemigroupTable};

/// Largest table accepted by [`enumerate_involutions`].
pub const ENUMERATION_LIMIT: usize = 40;

/// Structure data of an involution on `M⁰(I, I, G, P)`. Group elements are
/// local indices of the structure group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SsData {
    /// Involutive permutation of the index set.
    pub phi: Vec<usize>,
    pub u: Vec<usize>,
    /// Central, with `z* = z⁻¹`.
    pub z: usize,
    /// Involution on the group.
    pub g_star: Vec<usize>,
}

impl SsData {
    /// `v` with `v_{φ(i)} = z u_i*`.
    pub fn v(&self, g: &GroupData) -> Vec<usize> {
        let mut v = vec![g.identity; self.phi.len()];
        for (i, &ui) in self.u.iter().enumerate() {
            v[self.phi[i]] = g.mul(self.z, self.g_star[ui]);
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionMap {
    pub map: Vec<usize>,
    pub ss_data: Option<SsData>,
}

impl InvolutionMap {
    /// Wraps `map` after verifying it is an involution on `s`.
    pub fn new(s: &SemigroupTable, map: Vec<usize>) -> Result<Self> {
        s.check_involution(&map)?;
        Ok(InvolutionMap { map, ss_data: None })
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(a, &b)| a == b)
    }

    /// `s f(s) s = s` and `f(s) s f(s) = f(s)` for every `s`.
    pub fn induces_inverse(&self, s: &SemigroupTable) -> bool {
        let f = &self.map;
        s.elements()
            .all(|a| s.mul(s.mul(a, f[a]), a) == a && s.mul(s.mul(f[a], a), f[a]) == f[a])
    }
}

/// All involutions on `s`, in lexicographic order of their maps.
pub fn enumerate_involutions(s: &SemigroupTable) -> Result<Vec<InvolutionMap>> {
    let n = s.len();
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeLimit {
            size: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let green = green_structure(s);
    let zero = s.find_zero();
    let sig: Vec<_> = s.elements().map(|x| signature(s, x)).collect();
    let lsize = |x: usize| green.lclasses[green.lclass_of[x]].len();
    let rsize = |x: usize| green.rclasses[green.rclass_of[x]].len();
    let jsize = |x: usize| green.jclasses[green.jclass_of[x]].len();
    // An anti-automorphism swaps left and right data and maps L-classes
    // onto R-classes.
    let compat: Vec<Vec<bool>> = s
        .elements()
        .map(|x| {
            s.elements()
                .map(|y| {
                    let (a, b) = (sig[x], sig[y]);
                    (a.0, a.1, a.2, a.5) == (b.0, b.1, b.2, b.5)
                        && a.3 == b.4
                        && a.4 == b.3
                        && lsize(x) == rsize(y)
                        && rsize(x) == lsize(y)
                        && jsize(x) == jsize(y)
                        && (zero != Some(x) || x == y)
                })
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = s.elements().collect();
    order.sort_by_key(|&x| compat[x].iter().filter(|&&b| b).count());

    fn assign(s: &SemigroupTable, compat: &[Vec<bool>], f: &mut [usize], x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((a, b)) = queue.pop() {
            if f[a] != usize::MAX {
                if f[a] != b {
                    return false;
                }
                continue;
            }
            if f[b] != usize::MAX || !compat[a][b] {
                return false;
            }
            f[a] = b;
            f[b] = a;
            for c in s.elements() {
                let fc = f[c];
                if fc == usize::MAX {
                    continue;
                }
                for (p, q) in [(a, b), (b, a)] {
                    queue.push((s.mul(p, c), s.mul(fc, q)));
                    queue.push((s.mul(c, p), s.mul(q, fc)));
                }
            }
        }
        true
    }

    fn go(s: &SemigroupTable, compat: &[Vec<bool>], order: &[usize], f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(&x) = order.iter().find(|&&x| f[x] == usize::MAX) else {
            out.push(f.clone());
            return;
        };
        for y in s.elements() {
            if !compat[x][y] || f[y] != usize::MAX {
                continue;
            }
            let saved = f.clone();
            if assign(s, compat, f, x, y) {
                go(s, compat, order, f, out);
            }
            *f = saved;
        }
    }

    let mut maps = Vec::new();
    go(s, &compat, &order, &mut vec![usize::MAX; n], &mut maps);
    maps.sort();
    maps.into_iter()
        .map(|m| {
            s.check_involution(&m)
                .map_err(|e| Error::Invariant(format!("enumerated map fails verification: {e}")))?;
            Ok(InvolutionMap { map: m, ss_data: None })
        })
        .collect()
}

/// The involution `∗` for which `S` is an inverse semigroup with inverse map
/// `∗`, if any. Involutions with `s s* s = s` and `s* s s* = s*` are kept,
/// but such an involution only picks one generalized inverse per element;
/// when some element has several, `S` is not inverse and none is returned.
pub fn inverse_inducing_involution(s: &SemigroupTable) -> Result<Option<InvolutionMap>> {
    let mut survivors: Vec<InvolutionMap> = enumerate_involutions(s)?
        .into_iter()
        .filter(|f| f.induces_inverse(s))
        .collect();
    if survivors.is_empty() || !brute_force_is_inverse(s).is_inverse {
        return Ok(None);
    }
    if survivors.len() > 1 {
        return Err(Error::MultipleSurvivors(survivors.len()));
    }
    Ok(survivors.pop())
}

/// The map `(a)_{ij} ↦ (z u_{φ(j)}* a* u_i⁻¹)_{φ(j),φ(i)}`, fixing the zero.
pub fn reconstruct(r: &ReesSemigroup, ss: &SsData) -> Vec<usize> {
    let g = &r.group;
    (0..=r.zero())
        .map(|x| match r.coords(x) {
            None => x,
            Some((i, j, a)) => {
                let left = g.mul(ss.z, ss.g_star[ss.u[ss.phi[j]]]);
                let h = g.mul(g.mul(left, ss.g_star[a]), g.inv(ss.u[i]));
                r.element(ss.phi[j], ss.phi[i], h)
            }
        })
        .collect()
}

/// The structural conditions on `ss`: `∗_G` an involution, `φ` involutive,
/// `z` central with `z* = z⁻¹`, and
/// `p_{ji}* = z u_i⁻¹ p_{φ(i),φ(j)} u_{φ(j)}*` including the zero pattern.
pub fn ss_conditions_hold(r: &ReesSemigroup, ss: &SsData) -> bool {
    let g = &r.group;
    let k = r.m;
    if r.m != r.n || ss.phi.len() != k || ss.u.len() != k || ss.g_star.len() != g.order() {
        return false;
    }
    if g.check_involution(&ss.g_star).is_err()
        || (0..k).any(|i| ss.phi[i] >= k || ss.phi[ss.phi[i]] != i)
        || !g.is_central(ss.z)
        || ss.g_star[ss.z] != g.inv(ss.z)
    {
        return false;
    }
    (0..k).all(|i| {
        (0..k).all(|j| match (r.p[j][i], r.p[ss.phi[i]][ss.phi[j]]) {
            (None, None) => true,
            (Some(a), Some(b)) => {
                let rhs = g.mul(g.mul(g.mul(ss.z, g.inv(ss.u[i])), b), ss.g_star[ss.u[ss.phi[j]]]);
                ss.g_star[a] == rhs
            }
            _ => false,
        })
    })
}

fn group_part(r: &ReesSemigroup, star: &[usize], x: usize) -> Result<(usize, usize, usize)> {
    r.coords(star[x])
        .ok_or_else(|| Error::NotInvolution("a nonzero element is mapped to the zero".into()))
}

fn checked(r: &ReesSemigroup, star: &[usize], ss: SsData) -> Option<SsData> {
    (ss_conditions_hold(r, &ss) && reconstruct(r, &ss) == star).then_some(ss)
}

/// Data with `φ = id` and `u_i = 1`, when `star` has the form
/// `(a)_{ij}* = (z a*)_{ji}`.
pub fn corollary_form(r: &ReesSemigroup, star: &[usize]) -> Result<SsData> {
    if r.m != r.n {
        return Err(Error::NotCorollaryForm);
    }
    r.table.check_involution(star)?;
    let g = &r.group;
    let id = g.identity;
    if r.m == 0 {
        return Err(Error::NotCorollaryForm);
    }
    let (i, j, z) = group_part(r, star, r.element(0, 0, id))?;
    if (i, j) != (0, 0) {
        return Err(Error::NotCorollaryForm);
    }
    let zinv = g.inv(z);
    let g_star = (0..g.order())
        .map(|a| Ok(g.mul(zinv, group_part(r, star, r.element(0, 0, a))?.2)))
        .collect::<Result<Vec<_>>>()?;
    let ss = SsData {
        phi: (0..r.m).collect(),
        u: vec![id; r.m],
        z,
        g_star,
    };
    checked(r, star, ss).ok_or(Error::NotCorollaryForm)
}

/// Recovers `(φ, u, z, ∗_G)` from an involution on `M⁰(I, I, G, P)`. The
/// symmetric normal form (`φ = id`, `u = 1`) is returned when it applies.
/// The result reproduces `star` exactly under [`reconstruct`].
pub fn decompose_rees_involution(r: &ReesSemigroup, star: &[usize]) -> Result<SsData> {
    if r.m != r.n {
        return Err(Error::NotReesCompatible(format!("|I| = {} but |J| = {}", r.m, r.n)));
    }
    r.table.check_involution(star)?;
    if let Ok(ss) = corollary_form(r, star) {
        return Ok(ss);
    }
    general_decomposition(r, star)
}

fn general_decomposition(r: &ReesSemigroup, star: &[usize]) -> Result<SsData> {
    let (m, g) = (r.m, &r.group);
    let id = g.identity;
    let (i0, j0) = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .find(|&(i, j)| r.p[j][i].is_some())
        .ok_or_else(|| Error::NotReesCompatible("sandwich matrix has no nonzero entry".into()))?;
    let part = |x: usize| group_part(r, star, x);
    // (a)_{ij}* lies in row φ(j) and column φ(i).
    let phi = (0..m)
        .map(|i| Ok(part(r.element(i, 0, id))?.1))
        .collect::<Result<Vec<_>>>()?;
    let pinv = g.inv(r.p[j0][i0].expect("chosen nonzero"));
    let pp = r.p[phi[i0]][phi[j0]]
        .ok_or_else(|| Error::Invariant("involution does not respect the sandwich zero pattern".into()))?;
    let g_star = (0..g.order())
        .map(|a| Ok(g.mul(part(r.element(i0, j0, g.mul(a, pinv)))?.2, pp)))
        .collect::<Result<Vec<_>>>()?;
    let u = (0..m)
        .map(|i| Ok(g.inv(part(r.element(i, j0, pinv))?.2)))
        .collect::<Result<Vec<_>>>()?;
    let v0 = g.mul(part(r.element(i0, phi[0], id))?.2, pp);
    let z = g.mul(v0, g.inv(g_star[u[0]]));
    let ss = SsData { phi, u, z, g_star };
    checked(r, star, ss)
        .ok_or_else(|| Error::Invariant("recovered structure data does not reproduce the involution".into()))
}

/// Outcome of the three conditions for every representation of `(R, ∗)` to
/// be a semiunitary ∗-representation up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiunitaryConditions {
    /// `P` is invertible over the group algebra.
    pub sandwich_invertible: bool,
    /// The common diagonal entry `g`, when the diagonal is constant.
    pub diagonal: Option<usize>,
    /// `g² z = 1` and `g⁻¹ g*` is central.
    pub diagonal_ok: bool,
    /// `a* = g a⁻¹ g⁻¹` for every `a`.
    pub star_matches: bool,
}

impl SemiunitaryConditions {
    pub fn holds(&self) -> bool {
        self.sandwich_invertible && self.diagonal_ok && self.star_matches
    }
}

/// Evaluates the conditions for an involution in symmetric normal form.
pub fn semiunitary_star_report(r: &ReesSemigroup, star: &[usize]) -> Result<SemiunitaryConditions> {
    let ss = match corollary_form(r, star) {
        Err(Error::NotInvolution(msg)) => return Err(Error::NotInvolution(msg)),
        other => other.map_err(|_| Error::NotCorollaryForm)?,
    };
    let g = &r.group;
    let (k, n) = (g.order(), r.n);
    // Left regular representation of each entry; the zero gives a zero block.
    let mut rows = vec![vec![0i64; n * k]; n * k];
    for j in 0..n {
        for i in 0..n {
            if let Some(q) = r.p[j][i] {
                for x in 0..k {
                    rows[j * k + g.mul(q, x)][i * k + x] = 1;
                }
            }
        }
    }
    let sandwich_invertible = integer_rank(&rows) == n * k;
    let diagonal = r.p[0][0].filter(|&d| (0..n).all(|i| r.p[i][i] == Some(d)));
    let diagonal_ok =
        diagonal.is_some_and(|d| g.mul(g.mul(d, d), ss.z) == g.identity && g.is_central(g.mul(g.inv(d), ss.g_star[d])));
    let star_matches = diagonal.is_some_and(|d| (0..k).all(|a| ss.g_star[a] == g.mul(g.mul(d, g.inv(a)), g.inv(d))));
    Ok(SemiunitaryConditions {
        sandwich_invertible,
        diagonal,
        diagonal_ok,
        star_matches,
    })
}

pub fn semiunitary_star_conditions(r: &ReesSemigroup, star: &[usize]) -> Result<bool> {
    Ok(semiunitary_star_report(r, star)?.holds())
}

/// Every anti-automorphic involution of a group, in lexicographic order.
pub fn group_involutions(g: &GroupData) -> Vec<Vec<usize>> {
    let s = g.as_semigroup();
    enumerate_involutions(&s)
        .map(|v| v.into_iter().map(|f| f.map).collect())
        .unwrap_or_else(|_| brute_group_involutions(g))
}

fn brute_group_involutions(g: &GroupData) -> Vec<Vec<usize>> {
    // a ↦ θ(a)⁻¹ for an automorphism θ with θ² = id.
    let n = g.order();
    crate::semigroup::group::permutations(n)
        .into_iter()
        .filter(|t| (0..n).all(|a| t[t[a]] == a && (0..n).all(|b| t[g.mul(a, b)] == g.mul(t[a], t[b]))))
        .map(|t| (0..n).map(|a| g.inv(t[a])).collect())
        .collect()
}
