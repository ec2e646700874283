//! Rees matrix semigroups `M⁰(I, J, G, P)`, coordinatization of regular
//! J-classes, and the standard representations.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::rep::{MatrixRep, RepKind};
use crate::scalar::Real;
use crate::semigroup::group::maximal_subgroup_in;
use crate::semigroup::{GreenStructure, GroupData, SemigroupTable};

/// Sandwich matrix over `G⁰`: `p[j][i]` is a local group index or `None`
/// for the zero.
pub type Sandwich = Vec<Vec<Option<usize>>>;

/// `M⁰(I, J, G, P)` with `|I| = m`, `|J| = n` and `P` of size `n x m`.
///
/// Element `(a)_{ij}` has index `(i·n + j)·|G| + a`; the zero comes last.
#[derive(Debug, Clone)]
pub struct ReesSemigroup {
    pub m: usize,
    pub n: usize,
    pub group: GroupData,
    pub p: Sandwich,
    pub table: SemigroupTable,
}

fn check_sandwich(m: usize, n: usize, order: usize, p: &Sandwich) -> Result<()> {
    if p.len() != n || p.iter().any(|row| row.len() != m) {
        return Err(Error::Dimension(format!("sandwich matrix must be {n}x{m}")));
    }
    if p.iter().flatten().flatten().any(|&g| g >= order) {
        return Err(Error::InvalidGroup("sandwich entry outside the group".into()));
    }
    Ok(())
}

/// Builds the multiplication table of `M⁰(I, J, G, P)`.
pub fn build_rees(m: usize, n: usize, group: GroupData, p: Sandwich) -> Result<ReesSemigroup> {
    let labels: Vec<String> = (0..group.order()).map(|g| (g + 1).to_string()).collect();
    build_rees_labelled(m, n, group, p, &labels)
}

/// As [`build_rees`], labelling `(a)_{ij}` by the given group labels.
pub fn build_rees_labelled(
    m: usize,
    n: usize,
    group: GroupData,
    p: Sandwich,
    group_labels: &[String],
) -> Result<ReesSemigroup> {
    let order = group.order();
    check_sandwich(m, n, order, &p)?;
    let zero = m * n * order;
    let coords = |x: usize| (x / order / n, x / order % n, x % order);
    let table = SemigroupTable::from_fn(zero + 1, Some(zero), |x, y| {
        if x == zero || y == zero {
            return zero;
        }
        let ((i, j, a), (k, l, b)) = (coords(x), coords(y));
        match p[j][k] {
            Some(q) => (i * n + l) * order + group.mul(group.mul(a, q), b),
            None => zero,
        }
    })?;
    let mut labels: Vec<String> = (0..zero)
        .map(|x| {
            let (i, j, a) = coords(x);
            format!("({})_{},{}", group_labels[a], i + 1, j + 1)
        })
        .collect();
    labels.push("0".into());
    let table = table.with_labels(labels)?;
    Ok(ReesSemigroup { m, n, group, p, table })
}

impl ReesSemigroup {
    pub fn element(&self, i: usize, j: usize, a: usize) -> usize {
        (i * self.n + j) * self.group.order() + a
    }

    pub fn zero(&self) -> usize {
        self.m * self.n * self.group.order()
    }

    /// `(i, j, a)` for `(a)_{ij}`, or `None` for the zero.
    pub fn coords(&self, x: usize) -> Option<(usize, usize, usize)> {
        let order = self.group.order();
        (x < self.zero()).then(|| (x / order / self.n, x / order % self.n, x % order))
    }

    /// Every row and every column of `P` has a nonzero entry.
    pub fn is_regular(&self) -> bool {
        self.regularity_witness().is_none()
    }

    /// An element without a generalized inverse, if any.
    fn regularity_witness(&self) -> Option<usize> {
        let id = self.group.identity;
        if let Some(j) = (0..self.n).find(|&j| self.p[j].iter().all(Option::is_none)) {
            return Some(self.element(0, j, id));
        }
        (0..self.m)
            .find(|&i| (0..self.n).all(|j| self.p[j][i].is_none()))
            .map(|i| self.element(i, 0, id))
    }
}

/// For a monomial sandwich (exactly one nonzero entry in each row and each
/// column), `tau[i]` is the row of the nonzero entry in column `i`.
pub fn monomial_pattern(p: &Sandwich) -> Option<Vec<usize>> {
    let n = p.len();
    let m = p.first().map_or(0, |r| r.len());
    if n != m {
        return None;
    }
    let row_ok = p.iter().all(|row| row.iter().filter(|x| x.is_some()).count() == 1);
    let tau: Vec<usize> = (0..m)
        .map(|i| {
            let rows: Vec<usize> = (0..n).filter(|&j| p[j][i].is_some()).collect();
            if rows.len() == 1 {
                rows[0]
            } else {
                usize::MAX
            }
        })
        .collect();
    (row_ok && tau.iter().all(|&j| j != usize::MAX)).then_some(tau)
}

/// Inverse iff `I = J` and `P` is monomial (so it rescales to the identity).
pub fn rees_is_inverse(r: &ReesSemigroup) -> Result<bool> {
    if let Some(x) = r.regularity_witness() {
        return Err(Error::NotRegular(x));
    }
    Ok(monomial_pattern(&r.p).is_some())
}

/// Rees coordinates of a regular J-class.
///
/// `x` lists one representative per H-class of `L_e` and `y` one per H-class
/// of `R_e`, with `x[0] = y[0] = e`. Element `b` of the class is
/// `x_i · g · y_j` for the unique `(i, j, g)` stored in `coords[b]`.
#[derive(Debug, Clone, Serialize)]
pub struct ReesCoordinatization {
    pub jclass: usize,
    pub e: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub group: GroupData,
    /// `p[j][i] = y_j x_i` when that lies in the class, as a local group index.
    pub p: Sandwich,
    pub coords: Vec<Option<(usize, usize, usize)>>,
    /// `e_i = x_i p_ii⁻¹ y_i` where `p_ii` is nonzero.
    pub e_diag: Vec<Option<usize>>,
    /// The sandwich matrix is the identity.
    pub sandwich_normalized: bool,
}

impl ReesCoordinatization {
    /// `s_e`, the number of R-classes.
    pub fn s(&self) -> usize {
        self.x.len()
    }

    /// `t_e`, the number of L-classes.
    pub fn t(&self) -> usize {
        self.y.len()
    }

    pub fn size(&self) -> usize {
        self.s() * self.t() * self.group.order()
    }

    /// The Rees matrix semigroup isomorphic to the principal factor `J⁰`.
    pub fn rees(&self, s: &SemigroupTable) -> Result<ReesSemigroup> {
        let labels: Vec<String> = self.group.carrier.iter().map(|&g| s.label(g)).collect();
        build_rees_labelled(self.s(), self.t(), self.group.clone(), self.p.clone(), &labels)
    }

    /// Index in [`Self::rees`] of an element of the class.
    pub fn rees_index(&self, b: usize) -> Option<usize> {
        let order = self.group.order();
        self.coords[b].map(|(i, j, g)| (i * self.t() + j) * order + g)
    }

    pub fn element_at(&self, s: &SemigroupTable, i: usize, j: usize, g: usize) -> usize {
        s.mul(s.mul(self.x[i], self.group.carrier[g]), self.y[j])
    }
}

/// The principal factor `J⁰`: the class with a zero adjoined, all products
/// leaving the class sent to the zero. Elements keep their relative order;
/// the zero is last.
pub fn principal_factor(s: &SemigroupTable, green: &GreenStructure, j: usize) -> SemigroupTable {
    let class = &green.jclasses[j];
    let k = class.len();
    let pos = |x: usize| class.binary_search(&x).ok();
    let t = SemigroupTable::from_fn(k + 1, Some(k), |a, b| {
        if a == k || b == k {
            return k;
        }
        pos(s.mul(class[a], class[b])).unwrap_or(k)
    })
    .expect("principal factors are semigroups");
    let mut labels: Vec<String> = class.iter().map(|&x| s.label(x)).collect();
    labels.push("0".into());
    t.with_labels(labels).expect("labels")
}

fn representatives(s_class: &[usize], class_of: &[usize], e: usize) -> Vec<usize> {
    // One element per class, the smallest, with e's class first.
    let mut reps: Vec<usize> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for &b in s_class {
        if !seen.contains(&class_of[b]) {
            seen.push(class_of[b]);
            reps.push(b);
        }
    }
    let k = reps
        .iter()
        .position(|&b| class_of[b] == class_of[e])
        .expect("e in its class");
    reps.remove(k);
    reps.insert(0, e);
    reps
}

struct Coords {
    p: Sandwich,
    coords: Vec<Option<(usize, usize, usize)>>,
}

fn compute_coords(
    s: &SemigroupTable,
    green: &GreenStructure,
    j: usize,
    group: &GroupData,
    x: &[usize],
    y: &[usize],
) -> Result<Coords> {
    let class = &green.jclasses[j];
    let mut coords = vec![None; s.len()];
    for &b in class {
        let i = x
            .iter()
            .position(|&xi| green.same_r(xi, b))
            .ok_or_else(|| Error::Invariant(format!("no left representative for element {b}")))?;
        let jj = y
            .iter()
            .position(|&yj| green.same_l(yj, b))
            .ok_or_else(|| Error::Invariant(format!("no right representative for element {b}")))?;
        let g = (0..group.order())
            .find(|&g| s.mul(s.mul(x[i], group.carrier[g]), y[jj]) == b)
            .ok_or_else(|| Error::Invariant(format!("element {b} has no Rees coordinates")))?;
        coords[b] = Some((i, jj, g));
    }
    let p = y
        .iter()
        .map(|&yj| {
            x.iter()
                .map(|&xi| {
                    let v = s.mul(yj, xi);
                    if green.jclass_of[v] != j {
                        return Ok(None);
                    }
                    group
                        .local(v)
                        .map(Some)
                        .ok_or_else(|| Error::Invariant(format!("sandwich entry {v} outside G_e")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Sandwich>>()?;
    Ok(Coords { p, coords })
}

/// Coordinatizes regular J-class `j` as a Rees matrix semigroup over `G_e`
/// for the first idempotent `e` of the class.
///
/// Representatives are rescaled so that the first row and the first column
/// of `P` have entries in `{0, 1}`; when `P` is monomial it is further
/// reordered and rescaled to the identity.
pub fn coordinatize_jclass(s: &SemigroupTable, green: &GreenStructure, j: usize) -> Result<ReesCoordinatization> {
    let class = &green.jclasses[j];
    if !green.regular_j[j] {
        return Err(Error::NotRegularClass(class[0]));
    }
    let e = green.first_idempotent(j).ok_or(Error::NotRegularClass(class[0]))?;
    let group = maximal_subgroup_in(s, green, e)?;
    let l_e: Vec<usize> = class.iter().copied().filter(|&b| green.same_l(b, e)).collect();
    let r_e: Vec<usize> = class.iter().copied().filter(|&b| green.same_r(b, e)).collect();
    let mut x = representatives(&l_e, &green.rclass_of, e);
    let mut y = representatives(&r_e, &green.lclass_of, e);

    let c = compute_coords(s, green, j, &group, &x, &y)?;
    // Row 0: x_i ← x_i p_{0i}⁻¹. Column 0: y_j ← p_{j0}⁻¹ y_j.
    for i in 1..x.len() {
        if let Some(g) = c.p[0][i] {
            x[i] = s.mul(x[i], group.carrier[group.inv(g)]);
        }
    }
    for jj in 1..y.len() {
        if let Some(h) = c.p[jj][0] {
            y[jj] = s.mul(group.carrier[group.inv(h)], y[jj]);
        }
    }
    let mut c = compute_coords(s, green, j, &group, &x, &y)?;
    if let Some(tau) = monomial_pattern(&c.p) {
        let y_new: Vec<usize> = (0..x.len())
            .map(|i| {
                let g = c.p[tau[i]][i].expect("monomial entry");
                s.mul(group.carrier[group.inv(g)], y[tau[i]])
            })
            .collect();
        y = y_new;
        c = compute_coords(s, green, j, &group, &x, &y)?;
    }

    let sandwich_normalized = c.p.len() == x.len()
        && c.p.iter().enumerate().all(|(jj, row)| {
            row.iter()
                .enumerate()
                .all(|(i, v)| *v == (i == jj).then_some(group.identity))
        });
    let e_diag = (0..x.len())
        .map(|i| {
            let pii = c.p.get(i)?.get(i).copied().flatten()?;
            Some(s.mul(s.mul(x[i], group.carrier[group.inv(pii)]), y[i]))
        })
        .collect();
    let out = ReesCoordinatization {
        jclass: j,
        e,
        x,
        y,
        group,
        p: c.p,
        coords: c.coords,
        e_diag,
        sandwich_normalized,
    };
    verify_coordinatization(s, green, &out)?;
    Ok(out)
}

/// Checks that the coordinates turn products inside the class into Rees
/// products.
fn verify_coordinatization(s: &SemigroupTable, green: &GreenStructure, c: &ReesCoordinatization) -> Result<()> {
    let class = &green.jclasses[c.jclass];
    if class.len() != c.size() {
        return Err(Error::Invariant(format!(
            "class of size {} but s·t·|G| = {}",
            class.len(),
            c.size()
        )));
    }
    let g = &c.group;
    for &a in class {
        let (i, j, x) = c.coords[a].expect("coordinates");
        for &b in class {
            let (k, l, y) = c.coords[b].expect("coordinates");
            let ab = s.mul(a, b);
            let expected = c.p[j][k].map(|q| (i, l, g.mul(g.mul(x, q), y)));
            let actual = if green.jclass_of[ab] == c.jclass {
                c.coords[ab]
            } else {
                None
            };
            if expected != actual {
                return Err(Error::Invariant(format!(
                    "product {a}·{b} disagrees with Rees coordinates"
                )));
            }
        }
    }
    Ok(())
}

fn block_matrix<T: Real>(
    rows: usize,
    cols: usize,
    sigma: &[CMatrix<T>],
    entry: impl Fn(usize, usize) -> Option<usize>,
) -> CMatrix<T> {
    let d = sigma.first().map_or(0, |m| m.rows());
    let mut out = CMatrix::zeros(rows * d, cols * d);
    for r in 0..rows {
        for c in 0..cols {
            if let Some(g) = entry(r, c) {
                out.set_block(r * d, c * d, &sigma[g]);
            }
        }
    }
    out
}

/// `π^l(s) = σ((a)_{ij} P)` and `π^r(s) = σ(P (a)_{ij})`, with `σ(0) = 0`.
/// `sigma` holds the images of the group elements by local index.
pub fn standard_reps<T: Real>(r: &ReesSemigroup, sigma: &[CMatrix<T>]) -> (MatrixRep<T>, MatrixRep<T>) {
    let d = sigma.first().map_or(0, |m| m.rows());
    let g = &r.group;
    let mut left = Vec::with_capacity(r.table.len());
    let mut right = Vec::with_capacity(r.table.len());
    for x in r.table.elements() {
        match r.coords(x) {
            None => {
                left.push(CMatrix::zeros(r.m * d, r.m * d));
                right.push(CMatrix::zeros(r.n * d, r.n * d));
            }
            Some((i, j, a)) => {
                // Row i of (a)_{ij} P holds a p_{jk}.
                left.push(block_matrix(r.m, r.m, sigma, |row, k| {
                    if row == i {
                        r.p[j][k].map(|q| g.mul(a, q))
                    } else {
                        None
                    }
                }));
                // Column j of P (a)_{ij} holds p_{ki} a.
                right.push(block_matrix(r.n, r.n, sigma, |k, col| {
                    if col == j {
                        r.p[k][i].map(|q| g.mul(q, a))
                    } else {
                        None
                    }
                }));
            }
        }
    }
    (
        MatrixRep::new(RepKind::LeftStandard, r.m * d, left),
        MatrixRep::new(RepKind::RightStandard, r.n * d, right),
    )
}
