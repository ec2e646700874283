//! Green's relations, the J-order and principal series.
//!
//! Every relation is decided by comparing explicit principal ideals of `S¹`
//! as bit sets. That is quadratic per element, which is fine at the few
//! hundred elements this crate targets.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::table::SemigroupTable;

/// Partitions of a semigroup into L-, R-, H- and J-classes.
///
/// Class ids are assigned in order of each class's smallest element, and
/// every class lists its elements in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenStructure {
    pub lclasses: Vec<Vec<usize>>,
    pub rclasses: Vec<Vec<usize>>,
    pub hclasses: Vec<Vec<usize>>,
    pub jclasses: Vec<Vec<usize>>,
    pub lclass_of: Vec<usize>,
    pub rclass_of: Vec<usize>,
    pub hclass_of: Vec<usize>,
    pub jclass_of: Vec<usize>,
    /// `jleq[a][b]`: J-class `a` lies below J-class `b`, i.e. `S¹aS¹ ⊆ S¹bS¹`.
    pub jleq: Vec<Vec<bool>>,
    pub regular_j: Vec<bool>,
    pub idempotents: Vec<usize>,
    /// An identity had to be adjoined to form `S¹`.
    pub adjoined_identity: bool,
    #[serde(skip)]
    jideals: Vec<FixedBitSet>,
}

fn classes_from_keys(keys: &[FixedBitSet]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut index: HashMap<&FixedBitSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; keys.len()];
    for (a, key) in keys.iter().enumerate() {
        let id = *index.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(a);
        class_of[a] = id;
    }
    (classes, class_of)
}

/// Computes Green's relations on `s`, working in `S¹`.
pub fn green_structure(s: &SemigroupTable) -> GreenStructure {
    let n = s.len();
    let s1 = s.with_identity();
    let n1 = s1.len();

    let restrict = |set: FixedBitSet| {
        let mut out = FixedBitSet::with_capacity(n);
        out.extend(set.ones().filter(|&x| x < n));
        out
    };

    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    let mut two = Vec::with_capacity(n);
    for a in 0..n {
        let mut l = FixedBitSet::with_capacity(n1);
        let mut r = FixedBitSet::with_capacity(n1);
        for x in 0..n1 {
            l.insert(s1.mul(x, a));
            r.insert(s1.mul(a, x));
        }
        let mut j = FixedBitSet::with_capacity(n1);
        for x in l.ones() {
            for y in 0..n1 {
                j.insert(s1.mul(x, y));
            }
        }
        left.push(restrict(l));
        right.push(restrict(r));
        two.push(restrict(j));
    }

    let (lclasses, lclass_of) = classes_from_keys(&left);
    let (rclasses, rclass_of) = classes_from_keys(&right);
    let (jclasses, jclass_of) = classes_from_keys(&two);

    let mut hindex: HashMap<(usize, usize), usize> = HashMap::new();
    let mut hclasses: Vec<Vec<usize>> = Vec::new();
    let mut hclass_of = vec![0; n];
    for a in 0..n {
        let id = *hindex.entry((lclass_of[a], rclass_of[a])).or_insert_with(|| {
            hclasses.push(Vec::new());
            hclasses.len() - 1
        });
        hclasses[id].push(a);
        hclass_of[a] = id;
    }

    let jideals: Vec<FixedBitSet> = jclasses.iter().map(|c| two[c[0]].clone()).collect();
    let k = jclasses.len();
    let jleq = (0..k)
        .map(|a| (0..k).map(|b| jideals[a].is_subset(&jideals[b])).collect())
        .collect();
    let regular_j = jclasses.iter().map(|c| c.iter().any(|&a| s.is_idempotent(a))).collect();

    GreenStructure {
        lclasses,
        rclasses,
        hclasses,
        jclasses,
        lclass_of,
        rclass_of,
        hclass_of,
        jclass_of,
        jleq,
        regular_j,
        idempotents: s.idempotents(),
        adjoined_identity: s1.has_adjoined_identity(),
        jideals,
    }
}

impl GreenStructure {
    pub fn same_l(&self, a: usize, b: usize) -> bool {
        self.lclass_of[a] == self.lclass_of[b]
    }

    pub fn same_r(&self, a: usize, b: usize) -> bool {
        self.rclass_of[a] == self.rclass_of[b]
    }

    pub fn same_j(&self, a: usize, b: usize) -> bool {
        self.jclass_of[a] == self.jclass_of[b]
    }

    pub fn same_h(&self, a: usize, b: usize) -> bool {
        self.hclass_of[a] == self.hclass_of[b]
    }

    pub fn is_regular(&self) -> bool {
        self.regular_j.iter().all(|&r| r)
    }

    /// The principal two-sided ideal `S¹JS¹` generated by J-class `j`.
    pub fn jideal(&self, j: usize) -> Vec<usize> {
        self.jideals[j].ones().collect()
    }

    /// `I_J`: elements whose two-sided ideal does not contain J-class `j`.
    pub fn ideal_below(&self, j: usize) -> Vec<usize> {
        let rep = self.jclasses[j][0];
        (0..self.jclass_of.len())
            .filter(|&a| !self.jideals[self.jclass_of[a]].contains(rep))
            .collect()
    }

    /// First idempotent (by element index) in J-class `j`.
    pub fn first_idempotent(&self, j: usize) -> Option<usize> {
        self.idempotents.iter().copied().find(|&e| self.jclass_of[e] == j)
    }
}

/// An ascending chain `∅ = I_0 ⊊ I_1 ⊊ … ⊊ I_k = S` of two-sided ideals in
/// which each difference `I_i \ I_{i-1}` is a single J-class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrincipalSeries {
    /// `ideals[0]` is empty and the last ideal is all of `S`.
    pub ideals: Vec<Vec<usize>>,
    /// `quotient_jclass[i]` is the J-class id forming `I_{i+1} \ I_i`.
    pub quotient_jclass: Vec<usize>,
}

/// Builds a principal series by adding, at each step, the J-class of
/// smallest id among those minimal in the J-order among the classes left.
pub fn principal_series(s: &SemigroupTable) -> PrincipalSeries {
    let g = green_structure(s);
    principal_series_from(&g)
}

pub fn principal_series_from(g: &GreenStructure) -> PrincipalSeries {
    let k = g.jclasses.len();
    let mut used = vec![false; k];
    let mut current: Vec<usize> = Vec::new();
    let mut ideals = vec![Vec::new()];
    let mut quotient_jclass = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .find(|&a| !used[a] && (0..k).all(|b| used[b] || b == a || !g.jleq[b][a]))
            .expect("J-order is a partial order");
        used[next] = true;
        current.extend_from_slice(&g.jclasses[next]);
        current.sort_unstable();
        ideals.push(current.clone());
        quotient_jclass.push(next);
    }
    PrincipalSeries {
        ideals,
        quotient_jclass,
    }
}

impl PrincipalSeries {
    /// Whether every ideal is two-sided in `s`.
    pub fn is_valid_for(&self, s: &SemigroupTable) -> bool {
        self.ideals.iter().all(|ideal| {
            let mut member = vec![false; s.len()];
            for &a in ideal {
                member[a] = true;
            }
            ideal
                .iter()
                .all(|&a| s.elements().all(|x| member[s.mul(a, x)] && member[s.mul(x, a)]))
        }) && self.ideals.last().map(|l| l.len()) == Some(s.len())
            && self.ideals[0].is_empty()
    }
}
