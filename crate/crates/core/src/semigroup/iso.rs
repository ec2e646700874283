//! Isomorphism search between small semigroup tables.

use super::table::SemigroupTable;

/// Cheap isomorphism invariants of an element.
pub(crate) fn signature(s: &SemigroupTable, a: usize) -> (bool, usize, usize, usize, usize, usize) {
    // Index and period of the monogenic subsemigroup.
    let mut seen = vec![usize::MAX; s.len()];
    let mut x = a;
    let mut k = 0;
    while seen[x] == usize::MAX {
        seen[x] = k;
        x = s.mul(x, a);
        k += 1;
    }
    let index = seen[x];
    let period = k - index;
    let left = {
        let mut v: Vec<usize> = s.elements().map(|y| s.mul(y, a)).collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let right = {
        let mut v: Vec<usize> = s.elements().map(|y| s.mul(a, y)).collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let squares_to = s.elements().filter(|&y| s.mul(y, y) == a).count();
    (s.is_idempotent(a), index, period, left, right, squares_to)
}

/// A bijection `f` with `f(ab) = f(a) f(b)`, if one exists. Backtracks over
/// elements with matching invariants, propagating forced values.
pub fn find_isomorphism(a: &SemigroupTable, b: &SemigroupTable) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let sa: Vec<_> = a.elements().map(|x| signature(a, x)).collect();
    let sb: Vec<_> = b.elements().map(|x| signature(b, x)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort_unstable();
    kb.sort_unstable();
    if ka != kb {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n).map(|x| (0..n).filter(|&y| sa[x] == sb[y]).collect()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| candidates[x].len());

    struct State {
        f: Vec<usize>,
        used: Vec<bool>,
    }

    fn assign(a: &SemigroupTable, b: &SemigroupTable, st: &mut State, x: usize, y: usize) -> bool {
        let n = a.len();
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if st.f[x] != usize::MAX {
                if st.f[x] != y {
                    return false;
                }
                continue;
            }
            if st.used[y] {
                return false;
            }
            st.f[x] = y;
            st.used[y] = true;
            for z in 0..n {
                if st.f[z] == usize::MAX {
                    continue;
                }
                let fz = st.f[z];
                queue.push((a.mul(x, z), b.mul(y, fz)));
                queue.push((a.mul(z, x), b.mul(fz, y)));
            }
        }
        true
    }

    fn go(a: &SemigroupTable, b: &SemigroupTable, cand: &[Vec<usize>], order: &[usize], st: &mut State) -> bool {
        let Some(&x) = order.iter().find(|&&x| st.f[x] == usize::MAX) else {
            return true;
        };
        for &y in &cand[x] {
            if st.used[y] {
                continue;
            }
            let saved = (st.f.clone(), st.used.clone());
            if assign(a, b, st, x, y) && go(a, b, cand, order, st) {
                return true;
            }
            st.f = saved.0;
            st.used = saved.1;
        }
        false
    }

    let mut st = State {
        f: vec![usize::MAX; n],
        used: vec![false; n],
    };
    go(a, b, &candidates, &order, &mut st).then_some(st.f)
}

pub fn is_isomorphism(a: &SemigroupTable, b: &SemigroupTable, f: &[usize]) -> bool {
    let mut seen = vec![false; b.len()];
    f.len() == a.len()
        && a.len() == b.len()
        && f.iter().all(|&y| y < b.len() && !std::mem::replace(&mut seen[y], true))
        && a.elements()
            .all(|x| a.elements().all(|y| f[a.mul(x, y)] == b.mul(f[x], f[y])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn relabelled_tables_are_isomorphic() {
        let t = catalog::symmetric_inverse_monoid(2);
        let perm = vec![3, 6, 0, 5, 1, 4, 2];
        let u = t.permuted(&perm);
        let f = find_isomorphism(&t, &u).unwrap();
        assert!(is_isomorphism(&t, &u, &f));
    }

    #[test]
    fn left_and_right_zero_are_not_isomorphic() {
        assert!(find_isomorphism(&catalog::left_zero(2), &catalog::right_zero(2)).is_none());
        assert!(find_isomorphism(&catalog::left_zero(2), &catalog::left_zero(2)).is_some());
    }
}
