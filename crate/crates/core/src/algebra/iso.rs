//! Backtracking search for structure-preserving bijections between finite
//! algebras given by one or more operation tables.
//!
//! Elements of the source are assigned images in increasing index order and
//! candidates are tried in increasing order, so the first bijection reported
//! is the lexicographically smallest one. Candidates are pruned by per-element
//! invariants read off the tables, and by checking every product of already
//! assigned elements as soon as both factors are placed.

use crate::table::{CayleyTable, Elem};

/// Per-element invariants preserved by any isomorphism.
fn signatures(tables: &[&CayleyTable]) -> Vec<Vec<usize>> {
    let n = tables[0].order();
    (0..n)
        .map(|e| {
            let mut sig = Vec::with_capacity(tables.len() * 6);
            for t in tables {
                let row = t.row(e);
                let fixes_left = (0..n).filter(|&y| t.get(e, y) == e).count();
                let fixes_right = (0..n).filter(|&y| t.get(y, e) == e).count();
                let mut seen = vec![false; n];
                let row_distinct = row.iter().filter(|&&v| !std::mem::replace(&mut seen[v], true)).count();
                let mut seen = vec![false; n];
                let col_distinct = (0..n).filter(|&y| !std::mem::replace(&mut seen[t.get(y, e)], true)).count();
                sig.extend([
                    t.count_of(e),
                    fixes_left,
                    fixes_right,
                    usize::from(t.get(e, e) == e),
                    row_distinct,
                    col_distinct,
                ]);
            }
            sig
        })
        .collect()
}

/// Enumerates bijections `π` with `dst_k(π x, π y) = π(src_k(x, y))` for every
/// table pair `k`, and `π a = b` for every `(a, b)` in `fixed`.
///
/// `visit` returns `false` to stop the search early.
pub fn search(
    pairs: &[(&CayleyTable, &CayleyTable)],
    fixed: &[(Elem, Elem)],
    mut visit: impl FnMut(&[Elem]) -> bool,
) {
    let Some(&(first, _)) = pairs.first() else { return };
    let n = first.order();
    if pairs.iter().any(|(s, d)| s.order() != n || d.order() != n) {
        return;
    }
    let src: Vec<&CayleyTable> = pairs.iter().map(|p| p.0).collect();
    let dst: Vec<&CayleyTable> = pairs.iter().map(|p| p.1).collect();
    let src_sig = signatures(&src);
    let dst_sig = signatures(&dst);
    let mut forced = vec![None; n];
    let mut reserved = vec![false; n];
    for &(a, b) in fixed {
        if a >= n || b >= n || forced[a].is_some_and(|v| v != b) {
            return;
        }
        forced[a] = Some(b);
        reserved[b] = true;
    }
    let mut st = State {
        n,
        src,
        dst,
        src_sig,
        dst_sig,
        forced,
        reserved,
        perm: vec![usize::MAX; n],
        preimage: vec![usize::MAX; n],
    };
    st.dfs(0, &mut visit);
}

struct State<'a> {
    n: usize,
    src: Vec<&'a CayleyTable>,
    dst: Vec<&'a CayleyTable>,
    src_sig: Vec<Vec<usize>>,
    dst_sig: Vec<Vec<usize>>,
    forced: Vec<Option<Elem>>,
    reserved: Vec<bool>,
    perm: Vec<Elem>,
    preimage: Vec<Elem>,
}

impl State<'_> {
    fn dfs(&mut self, x: Elem, visit: &mut impl FnMut(&[Elem]) -> bool) -> bool {
        if x == self.n {
            return visit(&self.perm);
        }
        for cand in 0..self.n {
            if self.preimage[cand] != usize::MAX || self.src_sig[x] != self.dst_sig[cand] {
                continue;
            }
            match self.forced[x] {
                Some(v) if v != cand => continue,
                None if self.reserved[cand] => continue,
                _ => {}
            }
            self.perm[x] = cand;
            self.preimage[cand] = x;
            let ok = self.consistent(x);
            if ok && !self.dfs(x + 1, visit) {
                return false;
            }
            self.perm[x] = usize::MAX;
            self.preimage[cand] = usize::MAX;
        }
        true
    }

    /// Checks all products among the assigned elements `0..=x`.
    fn consistent(&self, x: Elem) -> bool {
        for (s, d) in self.src.iter().zip(&self.dst) {
            for a in 0..=x {
                for b in 0..=x {
                    let c = s.get(a, b);
                    let image = d.get(self.perm[a], self.perm[b]);
                    if c <= x {
                        if self.perm[c] != image {
                            return false;
                        }
                    } else if self.preimage[image] != usize::MAX {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The lexicographically smallest isomorphism, if any.
pub fn first(pairs: &[(&CayleyTable, &CayleyTable)], fixed: &[(Elem, Elem)]) -> Option<Vec<Elem>> {
    let mut found = None;
    search(pairs, fixed, |p| {
        found = Some(p.to_vec());
        false
    });
    found
}

/// All isomorphisms in lexicographic order.
pub fn all(pairs: &[(&CayleyTable, &CayleyTable)], fixed: &[(Elem, Elem)]) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    search(pairs, fixed, |p| {
        out.push(p.to_vec());
        true
    });
    out
}

pub fn invert(perm: &[Elem]) -> Vec<Elem> {
    let mut inv = vec![0; perm.len()];
    for (x, &y) in perm.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

pub fn compose(outer: &[Elem], inner: &[Elem]) -> Vec<Elem> {
    inner.iter().map(|&x| outer[x]).collect()
}
