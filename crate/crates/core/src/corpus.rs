//! Generated test corpora: all small semigroups, all regular Rees matrix
//! semigroups over small groups, and seeded involutive Rees semigroups.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::involution::{group_involutions, reconstruct, SsData};
use crate::rees::{build_rees, ReesSemigroup, Sandwich};
use crate::semigroup::group::permutations;
use crate::semigroup::{GroupData, SemigroupTable};

const UNSET: usize = usize::MAX;

fn associative_so_far(t: &[usize], n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let (l, r) = (t[xy * n + z], t[x * n + yz]);
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// Every associative table on `{0, …, n-1}` (labelled semigroups), as flat
/// row-major vectors.
pub fn labelled_semigroups(n: usize) -> Vec<Vec<usize>> {
    fn go(t: &mut Vec<usize>, cell: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cell == n * n {
            out.push(t.clone());
            return;
        }
        for v in 0..n {
            t[cell] = v;
            if associative_so_far(t, n) {
                go(t, cell + 1, n, out);
            }
        }
        t[cell] = UNSET;
    }
    let mut out = Vec::new();
    if n > 0 {
        go(&mut vec![UNSET; n * n], 0, n, &mut out);
    }
    out
}

fn canonical(t: &[usize], n: usize, perms: &[Vec<usize>]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut cur = vec![0; n * n];
    for p in perms {
        for a in 0..n {
            for b in 0..n {
                cur[p[a] * n + p[b]] = p[t[a * n + b]];
            }
        }
        if best.as_ref().is_none_or(|b| cur < *b) {
            best = Some(cur.clone());
        }
    }
    best.unwrap_or_default()
}

/// One representative of every isomorphism class of semigroups of order
/// `n`, each in its lexicographically least labelling.
pub fn small_semigroups(n: usize) -> Vec<SemigroupTable> {
    let perms = permutations(n);
    let mut reps: Vec<Vec<usize>> = labelled_semigroups(n).iter().map(|t| canonical(t, n, &perms)).collect();
    reps.sort();
    reps.dedup();
    reps.into_iter()
        .map(|t| {
            SemigroupTable::new(t.chunks(n).map(|r| r.to_vec()).collect(), None)
                .expect("enumerated tables are associative")
        })
        .collect()
}

/// Every sandwich matrix `n x m` over `G⁰`.
fn all_sandwiches(m: usize, n: usize, order: usize) -> Vec<Sandwich> {
    let cells = m * n;
    let base = order + 1;
    (0..base.pow(cells as u32))
        .map(|mut code| {
            let mut p = vec![vec![None; m]; n];
            for k in 0..cells {
                let v = code % base;
                code /= base;
                p[k / m][k % m] = (v < order).then_some(v);
            }
            p
        })
        .collect()
}

/// Regular `M⁰(I, J, G, P)` for `|I|, |J| ≤ max_dim` and each given group,
/// over every regular sandwich matrix.
pub fn regular_rees_sweep(max_dim: usize, groups: &[GroupData]) -> Vec<ReesSemigroup> {
    let mut out = Vec::new();
    for g in groups {
        for m in 1..=max_dim {
            for n in 1..=max_dim {
                for p in all_sandwiches(m, n, g.order()) {
                    let r = build_rees(m, n, g.clone(), p).expect("valid sandwich");
                    if r.is_regular() {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

/// A seeded involutive `M⁰(I, I, G, P)` with involution `(a)_{ij} ↦ (z a*)_{ji}`
/// for a random group involution `∗`, with `p_{ji}* = z p_{ij}` and `P`
/// regular. `z` must be central; it is replaced by the identity if
/// `z* ≠ z⁻¹` for the chosen involution.
pub fn corollary_instance(g: &GroupData, z: usize, max_dim: usize, rng: &mut ChaCha8Rng) -> (ReesSemigroup, SsData) {
    let stars = group_involutions(g);
    loop {
        let g_star = stars.choose(rng).expect("the inverse map is an involution").clone();
        let z = if g_star[z] == g.inv(z) { z } else { g.identity };
        let k = rng.gen_range(1..=max_dim);
        let mut p: Sandwich = vec![vec![None; k]; k];
        let mut ok = true;
        for i in 0..k {
            for j in i..k {
                if rng.gen_bool(0.25) {
                    continue;
                }
                if i == j {
                    // p_ii* = z p_ii.
                    let fixed: Vec<usize> = (0..g.order()).filter(|&a| g_star[a] == g.mul(z, a)).collect();
                    match fixed.choose(rng) {
                        Some(&a) => p[i][i] = Some(a),
                        None => ok = false,
                    }
                } else {
                    let a = rng.gen_range(0..g.order());
                    p[j][i] = Some(a);
                    // p_ij = z⁻¹ p_ji*.
                    p[i][j] = Some(g.mul(g.inv(z), g_star[a]));
                }
            }
        }
        let ss = SsData {
            phi: (0..k).collect(),
            u: vec![g.identity; k],
            z,
            g_star,
        };
        let r = build_rees(k, k, g.clone(), p).expect("valid sandwich");
        if ok && r.is_regular() {
            return (r, ss);
        }
    }
}

/// `count` seeded normal-form instances with their involutions.
pub fn corollary_instances(
    g: &GroupData,
    z: usize,
    max_dim: usize,
    count: usize,
    seed: u64,
) -> Vec<(ReesSemigroup, SsData, Vec<usize>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (r, ss) = corollary_instance(g, z, max_dim, &mut rng);
            let star = reconstruct(&r, &ss);
            (r, ss, star)
        })
        .collect()
}
