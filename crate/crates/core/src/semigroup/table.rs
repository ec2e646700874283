//! Finite semigroups given by their multiplication table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite semigroup stored as a dense `n x n` table of element indices.
///
/// `mul(a, b)` is the product `a·b`. An optional distinguished zero is used
/// by the contracted-algebra convention: representations send it to the zero
/// matrix and the algebra basis excludes it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemigroupTable {
    n: usize,
    mul: Vec<usize>,
    zero: Option<usize>,
    /// When set, the last element is an identity adjoined to a semigroup.
    has_adjoined_identity: bool,
    labels: Option<Vec<String>>,
}

/// Checks a raw table and returns it as a semigroup.
pub fn validate_table(raw: &[Vec<usize>], zero: Option<usize>) -> Result<SemigroupTable> {
    SemigroupTable::new(raw.to_vec(), zero)
}

impl SemigroupTable {
    /// Builds a table from rows, checking range, associativity and the zero
    /// axiom. Violations are reported in lexicographic order.
    pub fn new(rows: Vec<Vec<usize>>, zero: Option<usize>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Dimension("a semigroup needs at least one element".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange {
                        row: a,
                        col: b,
                        value: v,
                        n,
                    });
                }
                mul.push(v);
            }
        }
        let table = SemigroupTable {
            n,
            mul,
            zero: None,
            has_adjoined_identity: false,
            labels: None,
        };
        table.check_associative()?;
        table.with_zero(zero)
    }

    /// Builds a table from a function on indices.
    pub fn from_fn(n: usize, zero: Option<usize>, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Self::new(rows, zero)
    }

    fn check_associative(&self) -> Result<()> {
        for a in 0..self.n {
            for b in 0..self.n {
                let ab = self.mul(a, b);
                for c in 0..self.n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Associativity { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Declares `zero` as the distinguished zero element after checking it.
    pub fn with_zero(mut self, zero: Option<usize>) -> Result<Self> {
        if let Some(z) = zero {
            if z >= self.n {
                return Err(Error::EntryOutOfRange {
                    row: z,
                    col: z,
                    value: z,
                    n: self.n,
                });
            }
            if let Some(a) = (0..self.n).find(|&a| self.mul(z, a) != z || self.mul(a, z) != z) {
                return Err(Error::ZeroAxiom { zero: z, a });
            }
        }
        self.zero = zero;
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Dimension(format!(
                "{} labels for {} elements",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn has_adjoined_identity(&self) -> bool {
        self.has_adjoined_identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label, or its 1-based index.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => (a + 1).to_string(),
        }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Elements other than the declared zero: the basis of the contracted algebra.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&a| Some(a) != self.zero)
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|a| self.mul(e, a) == a && self.mul(a, e) == a))
    }

    /// A two-sided zero, whether or not it is declared.
    pub fn find_zero(&self) -> Option<usize> {
        (0..self.n).find(|&z| (0..self.n).all(|a| self.mul(z, a) == z && self.mul(a, z) == z))
    }

    /// Whether `a` has some `x` with `a x a = a`.
    pub fn is_regular_element(&self, a: usize) -> bool {
        (0..self.n).any(|x| self.mul(self.mul(a, x), a) == a)
    }

    pub fn is_regular(&self) -> bool {
        (0..self.n).all(|a| self.is_regular_element(a))
    }

    /// `S¹`: returns the table with an identity adjoined as the last element,
    /// or a copy of `self` if it is already a monoid.
    pub fn with_identity(&self) -> SemigroupTable {
        if self.identity().is_some() {
            return self.clone();
        }
        let n = self.n + 1;
        let one = self.n;
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(if a == one {
                    b
                } else if b == one {
                    a
                } else {
                    self.mul(a, b)
                });
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push("1".into());
            l
        });
        SemigroupTable {
            n,
            mul,
            zero: self.zero,
            has_adjoined_identity: true,
            labels,
        }
    }

    /// Adjoins a new zero element as the last index.
    pub fn with_adjoined_zero(&self) -> SemigroupTable {
        let n = self.n + 1;
        let z = self.n;
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(if a == z || b == z { z } else { self.mul(a, b) });
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push("0".into());
            l
        });
        SemigroupTable {
            n,
            mul,
            zero: Some(z),
            has_adjoined_identity: false,
            labels,
        }
    }

    /// Relabels element `a` as `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> SemigroupTable {
        assert_eq!(perm.len(), self.n);
        let mut mul = vec![0; self.n * self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                mul[perm[a] * self.n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); self.n];
            for a in 0..self.n {
                out[perm[a]] = l[a].clone();
            }
            out
        });
        SemigroupTable {
            n: self.n,
            mul,
            zero: self.zero.map(|z| perm[z]),
            has_adjoined_identity: self.has_adjoined_identity,
            labels,
        }
    }

    /// The opposite semigroup, with `a ∘ b = b·a`.
    pub fn opposite(&self) -> SemigroupTable {
        let mut out = self.clone();
        for a in 0..self.n {
            for b in 0..self.n {
                out.mul[a * self.n + b] = self.mul(b, a);
            }
        }
        out
    }

    /// Whether `f` is an involution: `f(f(a)) = a` and `f(ab) = f(b) f(a)`.
    pub fn check_involution(&self, f: &[usize]) -> Result<()> {
        if f.len() != self.n {
            return Err(Error::NotInvolution(format!(
                "map has {} entries for {} elements",
                f.len(),
                self.n
            )));
        }
        if let Some(a) = (0..self.n).find(|&a| f[a] >= self.n || f[f[a]] != a) {
            return Err(Error::NotInvolution(format!(
                "f(f({})) != {}",
                self.label(a),
                self.label(a)
            )));
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if f[self.mul(a, b)] != self.mul(f[b], f[a]) {
                    return Err(Error::NotInvolution(format!(
                        "f({}*{}) != f({})*f({})",
                        self.label(a),
                        self.label(b),
                        self.label(b),
                        self.label(a)
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Contents of a `.sgt` file.
#[derive(Debug, Clone, PartialEq)]
pub struct SgtFile {
    pub table: SemigroupTable,
    /// Candidate involution, 0-based. Not yet verified.
    pub involution: Option<Vec<usize>>,
}

fn parse_index(tok: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a positive integer, found {tok:?}"),
    })?;
    if v == 0 || v > n {
        return Err(Error::Parse {
            line,
            msg: format!("index {v} outside 1..={n}"),
        });
    }
    Ok(v - 1)
}

/// Parses the `.sgt` text format.
///
/// ```text
/// n 2
/// 1 1
/// 1 2
/// zero 1
/// involution 1 2
/// ```
///
/// Indices are 1-based. Blank lines and lines starting with `#` are ignored;
/// anything else after the optional `zero` and `involution` lines is an error.
pub fn parse_sgt(text: &str) -> Result<SgtFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let mut toks = header.split_whitespace();
    let n = match (toks.next(), toks.next(), toks.next()) {
        (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| Error::Parse {
            line: hline,
            msg: format!("bad element count {count:?}"),
        })?,
        _ => {
            return Err(Error::Parse {
                line: hline,
                msg: "expected header \"n <count>\"".into(),
            })
        }
    };
    if n == 0 {
        return Err(Error::Parse {
            line: hline,
            msg: "element count must be positive".into(),
        });
    }

    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (ln, l) = lines.next().ok_or(Error::Parse {
            line: hline + r + 1,
            msg: format!("expected {n} table rows, found {r}"),
        })?;
        let row = l
            .split_whitespace()
            .map(|t| parse_index(t, n, ln))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Parse {
                line: ln,
                msg: format!("row has {} entries, expected {n}", row.len()),
            });
        }
        rows.push(row);
    }

    let mut zero = None;
    let mut involution = None;
    for (ln, l) in lines {
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("zero") if zero.is_none() && involution.is_none() => {
                let t = toks.next().ok_or(Error::Parse {
                    line: ln,
                    msg: "missing zero index".into(),
                })?;
                zero = Some(parse_index(t, n, ln)?);
                if toks.next().is_some() {
                    return Err(Error::Parse {
                        line: ln,
                        msg: "trailing tokens after zero index".into(),
                    });
                }
            }
            Some("involution") if involution.is_none() => {
                let map = toks.map(|t| parse_index(t, n, ln)).collect::<Result<Vec<_>>>()?;
                if map.len() != n {
                    return Err(Error::Parse {
                        line: ln,
                        msg: format!("involution has {} entries, expected {n}", map.len()),
                    });
                }
                involution = Some(map);
            }
            _ => {
                return Err(Error::Parse {
                    line: ln,
                    msg: format!("unexpected line {l:?}"),
                })
            }
        }
    }

    let table = SemigroupTable::new(rows, zero)?;
    Ok(SgtFile { table, involution })
}

/// Writes a table (and optional involution) in `.sgt` format.
pub fn write_sgt(table: &SemigroupTable, involution: Option<&[usize]>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", table.len());
    for a in table.elements() {
        let row: Vec<String> = table.elements().map(|b| (table.mul(a, b) + 1).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    if let Some(z) = table.zero() {
        let _ = writeln!(out, "zero {}", z + 1);
    }
    if let Some(f) = involution {
        let m: Vec<String> = f.iter().map(|&v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "involution {}", m.join(" "));
    }
    out
}
