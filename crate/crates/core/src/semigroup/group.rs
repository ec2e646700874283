//! Finite groups: standalone or as maximal subgroups `G_e` of a semigroup.

use serde::Serialize;

use super::green::{green_structure, GreenStructure};
use super::table::SemigroupTable;
use crate::error::{Error, Result};

/// A finite group with its own local indexing `0..order`.
///
/// `carrier[g]` is the element of the ambient semigroup that local index `g`
/// stands for; for a standalone group it is the identity map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupData {
    pub carrier: Vec<usize>,
    /// Local index of the identity.
    pub identity: usize,
    table: Vec<usize>,
    pub inverse: Vec<usize>,
    pub conj_classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}

impl GroupData {
    /// Builds group data from a local multiplication table, verifying the
    /// group axioms.
    pub fn from_local(carrier: Vec<usize>, rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || carrier.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup("table shape".into()));
        }
        if rows.iter().flatten().any(|&v| v >= n) {
            return Err(Error::InvalidGroup("not closed under multiplication".into()));
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        let m = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidGroup("not associative".into()));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| m(a, b) == identity && m(b, a) == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut class_of = vec![usize::MAX; n];
        let mut conj_classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = conj_classes.len();
            let mut class: Vec<usize> = (0..n).map(|g| m(m(g, a), inverse[g])).collect();
            class.sort_unstable();
            class.dedup();
            for &b in &class {
                class_of[b] = id;
            }
            conj_classes.push(class);
        }

        Ok(GroupData {
            carrier,
            identity,
            table,
            inverse,
            conj_classes,
            class_of,
        })
    }

    /// Interprets a semigroup table that happens to be a group.
    pub fn from_table(s: &SemigroupTable) -> Result<Self> {
        Self::from_subset(s, &s.elements().collect::<Vec<_>>())
    }

    /// The subgroup of `s` carried by `elements`, which must be closed and
    /// form a group under the multiplication of `s`.
    pub fn from_subset(s: &SemigroupTable, elements: &[usize]) -> Result<Self> {
        let mut carrier = elements.to_vec();
        carrier.sort_unstable();
        carrier.dedup();
        let pos = |x: usize| carrier.binary_search(&x).ok();
        let rows = carrier
            .iter()
            .map(|&a| {
                carrier
                    .iter()
                    .map(|&b| {
                        pos(s.mul(a, b)).ok_or_else(|| Error::InvalidGroup("not closed under multiplication".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_local(carrier, &rows)
    }

    pub fn trivial() -> Self {
        Self::from_local(vec![0], &[vec![0]]).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Self {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_local((0..n).collect(), &rows).expect("cyclic group")
    }

    /// The symmetric group on `k` points, elements in lexicographic order of
    /// their one-line notation; the product `ab` applies `b` first.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("permutation");
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index(&(0..k).map(|x| a[b[x]]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        Self::from_local((0..perms.len()).collect(), &rows).expect("symmetric group")
    }

    pub fn direct_product(&self, other: &GroupData) -> GroupData {
        let (n, m) = (self.order(), other.order());
        let rows: Vec<Vec<usize>> = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Self::from_local((0..n * m).collect(), &rows).expect("direct product")
    }

    pub fn order(&self) -> usize {
        self.inverse.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    /// Local index of an element of the ambient semigroup.
    pub fn local(&self, element: usize) -> Option<usize> {
        self.carrier.binary_search(&element).ok()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_central(&self, z: usize) -> bool {
        (0..self.order()).all(|g| self.mul(g, z) == self.mul(z, g))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order()).filter(|&z| self.is_central(z)).collect()
    }

    /// The group as a semigroup table on local indices.
    pub fn as_semigroup(&self) -> SemigroupTable {
        SemigroupTable::new(self.rows(), None).expect("group tables are associative")
    }

    /// Whether `star` is an involutive anti-automorphism.
    pub fn check_involution(&self, star: &[usize]) -> Result<()> {
        self.as_semigroup().check_involution(star)
    }
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// `G_e`: the group of units of `eSe`, which is the H-class of `e`.
pub fn maximal_subgroup(s: &SemigroupTable, e: usize) -> Result<GroupData> {
    maximal_subgroup_in(s, &green_structure(s), e)
}

pub fn maximal_subgroup_in(s: &SemigroupTable, green: &GreenStructure, e: usize) -> Result<GroupData> {
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let h = &green.hclasses[green.hclass_of[e]];
    let g = GroupData::from_subset(s, h)?;
    debug_assert_eq!(g.carrier[g.identity], e);
    Ok(g)
}
