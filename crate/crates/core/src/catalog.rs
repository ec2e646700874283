//! Small named semigroups used throughout the tests and the CLI.

use crate::semigroup::group::{permutations, GroupData};
use crate::semigroup::table::SemigroupTable;

fn labelled(t: SemigroupTable, labels: Vec<String>) -> SemigroupTable {
    t.with_labels(labels).expect("label count")
}

/// The Brandt semigroup `B₂`: matrix units `e11, e12, e21, e22` and a zero
/// (index 4). Same element order as `build_rees(2, 2, trivial, I)`.
pub fn brandt_b2() -> SemigroupTable {
    let t = SemigroupTable::from_fn(5, Some(4), |a, b| {
        if a == 4 || b == 4 {
            return 4;
        }
        let (i, j) = (a / 2, a % 2);
        let (k, l) = (b / 2, b % 2);
        if j == k {
            i * 2 + l
        } else {
            4
        }
    })
    .expect("B2");
    labelled(t, ["e11", "e12", "e21", "e22", "0"].map(String::from).to_vec())
}

/// `xy = x` on `n` elements.
pub fn left_zero(n: usize) -> SemigroupTable {
    SemigroupTable::from_fn(n, None, |a, _| a).expect("left zero")
}

/// `xy = y` on `n` elements.
pub fn right_zero(n: usize) -> SemigroupTable {
    SemigroupTable::from_fn(n, None, |_, b| b).expect("right zero")
}

/// The chain `0 < 1 < … < k-1` under `min`. No zero is declared.
pub fn chain_semilattice(k: usize) -> SemigroupTable {
    SemigroupTable::from_fn(k, None, |a, b| a.min(b)).expect("chain")
}

/// `{0, a}` with every product equal to `0` (index 0 is the zero).
pub fn null_semigroup() -> SemigroupTable {
    let t = SemigroupTable::from_fn(2, Some(0), |_, _| 0).expect("null semigroup");
    labelled(t, vec!["0".into(), "a".into()])
}

pub fn cyclic_group(n: usize) -> SemigroupTable {
    GroupData::cyclic(n).as_semigroup()
}

pub fn symmetric_group(k: usize) -> SemigroupTable {
    GroupData::symmetric(k).as_semigroup()
}

fn one_line(f: &[Option<usize>]) -> String {
    let parts: Vec<String> = f
        .iter()
        .map(|x| x.map_or("-".to_string(), |v| (v + 1).to_string()))
        .collect();
    format!("[{}]", parts.join(","))
}

/// All maps on `k` points with product `(ab)(x) = a(b(x))`.
pub fn full_transformation_monoid(k: usize) -> SemigroupTable {
    let maps: Vec<Vec<usize>> = (0..k.pow(k as u32))
        .map(|mut code| {
            (0..k)
                .map(|_| {
                    let v = code % k;
                    code /= k;
                    v
                })
                .collect()
        })
        .collect();
    let index = |f: &[usize]| maps.iter().position(|g| g == f).expect("map");
    let t = SemigroupTable::from_fn(maps.len(), None, |a, b| {
        let comp: Vec<usize> = (0..k).map(|x| maps[a][maps[b][x]]).collect();
        index(&comp)
    })
    .expect("T_k");
    let labels = maps
        .iter()
        .map(|f| one_line(&f.iter().map(|&v| Some(v)).collect::<Vec<_>>()))
        .collect();
    labelled(t, labels)
}

/// Partial bijections on `k` points, product `(ab)(x) = a(b(x))`. The empty
/// map is the declared zero.
pub fn symmetric_inverse_monoid(k: usize) -> SemigroupTable {
    let mut maps: Vec<Vec<Option<usize>>> = Vec::new();
    for code in 0..(k + 1).pow(k as u32) {
        let mut c = code;
        let f: Vec<Option<usize>> = (0..k)
            .map(|_| {
                let v = c % (k + 1);
                c /= k + 1;
                (v < k).then_some(v)
            })
            .collect();
        let mut image: Vec<usize> = f.iter().flatten().copied().collect();
        let len = image.len();
        image.sort_unstable();
        image.dedup();
        if image.len() == len {
            maps.push(f);
        }
    }
    // Largest rank first so the identity comes first and the empty map last.
    maps.sort_by_key(|f| (std::cmp::Reverse(f.iter().flatten().count()), f.clone()));
    let index = |f: &[Option<usize>]| maps.iter().position(|g| g == f).expect("partial map");
    let zero = maps.len() - 1;
    let t = SemigroupTable::from_fn(maps.len(), Some(zero), |a, b| {
        let comp: Vec<Option<usize>> = (0..k).map(|x| maps[b][x].and_then(|y| maps[a][y])).collect();
        index(&comp)
    })
    .expect("I_k");
    let labels = maps.iter().map(|f| one_line(f)).collect();
    labelled(t, labels)
}

/// Permutation labels for the symmetric group, matching [`GroupData::symmetric`].
pub fn symmetric_labels(k: usize) -> Vec<String> {
    permutations(k)
        .iter()
        .map(|p| one_line(&p.iter().map(|&v| Some(v)).collect::<Vec<_>>()))
        .collect()
}
