//! Exhaustive oracles: the inverse property and semisimplicity of the
//! contracted semigroup algebra.

use serde::Serialize;

use super::table::SemigroupTable;
use crate::scalar::integer_rank;

/// Verdict of the exhaustive inverse search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseOracle {
    pub is_inverse: bool,
    /// The inverse map, when every element has exactly one inverse.
    pub inverse_map: Option<Vec<usize>>,
    /// First element with zero or several inverses, and the inverses found.
    pub witness: Option<(usize, Vec<usize>)>,
}

/// All `x` with `a x a = a` and `x a x = x`.
pub fn generalized_inverses(s: &SemigroupTable, a: usize) -> Vec<usize> {
    s.elements()
        .filter(|&x| s.mul(s.mul(a, x), a) == a && s.mul(s.mul(x, a), x) == x)
        .collect()
}

/// Decides the inverse property by listing the generalized inverses of every
/// element.
pub fn brute_force_is_inverse(s: &SemigroupTable) -> InverseOracle {
    let mut map = Vec::with_capacity(s.len());
    for a in s.elements() {
        let inv = generalized_inverses(s, a);
        if inv.len() != 1 {
            return InverseOracle {
                is_inverse: false,
                inverse_map: None,
                witness: Some((a, inv)),
            };
        }
        map.push(inv[0]);
    }
    InverseOracle {
        is_inverse: true,
        inverse_map: Some(map),
        witness: None,
    }
}

pub fn idempotents_commute(s: &SemigroupTable) -> bool {
    let e = s.idempotents();
    e.iter().all(|&a| e.iter().all(|&b| s.mul(a, b) == s.mul(b, a)))
}

/// Second characterization: regular with commuting idempotents.
pub fn is_inverse_by_idempotents(s: &SemigroupTable) -> bool {
    s.is_regular() && idempotents_commute(s)
}

/// Gram matrix of the trace form `(a, b) ↦ tr(L_a L_b)` of the left regular
/// representation of the contracted algebra, on the basis of nonzero elements.
///
/// Since `L_a L_b = L_{ab}`, each entry is the number of basis elements `x`
/// with `ab·x = x` (and 0 when `ab` is the zero).
pub fn trace_form_gram(s: &SemigroupTable) -> Vec<Vec<i64>> {
    let basis: Vec<usize> = s.nonzero_elements().collect();
    let trace = |c: usize| -> i64 {
        if Some(c) == s.zero() {
            0
        } else {
            basis.iter().filter(|&&x| s.mul(c, x) == x).count() as i64
        }
    };
    basis
        .iter()
        .map(|&a| basis.iter().map(|&b| trace(s.mul(a, b))).collect())
        .collect()
}

/// Dimension of the contracted algebra and the exact rank of its trace form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SemisimplicityReport {
    pub dimension: usize,
    pub trace_form_rank: usize,
    pub semisimple: bool,
}

pub fn semisimplicity_report(s: &SemigroupTable) -> SemisimplicityReport {
    let gram = trace_form_gram(s);
    let dimension = gram.len();
    let trace_form_rank = integer_rank(&gram);
    SemisimplicityReport {
        dimension,
        trace_form_rank,
        semisimple: trace_form_rank == dimension,
    }
}

/// Whether the contracted algebra `ℂ[S]` is semisimple: its radical is the
/// radical of the trace form, so this holds iff the Gram matrix is
/// nonsingular over the rationals.
pub fn is_semisimple_algebra(s: &SemigroupTable) -> bool {
    semisimplicity_report(s).semisimple
}
