//! Operation tables over the carrier `0..n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// An element of a finite carrier, always an index into `0..order`.
pub type Elem = usize;

/// A full `n × n` operation table over elements `0..n`.
///
/// Entries are stored row-major; `get(x, y)` is the product of `x` and `y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct CayleyTable {
    order: usize,
    data: Vec<Elem>,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    order: usize,
    table: Vec<Vec<Elem>>,
}

impl TryFrom<RawTable> for CayleyTable {
    type Error = AlgebraError;

    fn try_from(raw: RawTable) -> Result<Self, Self::Error> {
        let table = CayleyTable::from_rows(raw.table)?;
        if table.order != raw.order {
            return Err(AlgebraError::Malformed(format!(
                "declared order {} but table has {} rows",
                raw.order, table.order
            )));
        }
        Ok(table)
    }
}

impl From<CayleyTable> for RawTable {
    fn from(t: CayleyTable) -> Self {
        RawTable {
            order: t.order,
            table: t.rows().map(<[Elem]>::to_vec).collect(),
        }
    }
}

impl CayleyTable {
    /// Builds a table from its rows, checking that it is square and every entry is in range.
    pub fn from_rows<R: AsRef<[Elem]>>(rows: impl IntoIterator<Item = R>) -> Result<Self, AlgebraError> {
        let rows: Vec<Vec<Elem>> = rows.into_iter().map(|r| r.as_ref().to_vec()).collect();
        let order = rows.len();
        if order == 0 {
            return Err(AlgebraError::Malformed("empty table".into()));
        }
        let mut data = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(AlgebraError::Malformed(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(AlgebraError::Malformed(format!(
                        "entry ({i},{j}) = {v} is out of range for order {order}"
                    )));
                }
            }
            data.extend_from_slice(row);
        }
        Ok(CayleyTable { order, data })
    }

    /// Builds a table from a flat row-major vector.
    pub fn from_flat(order: usize, data: Vec<Elem>) -> Result<Self, AlgebraError> {
        if order == 0 || data.len() != order * order {
            return Err(AlgebraError::Malformed(format!(
                "flat table of length {} does not fit order {order}",
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|&v| v >= order) {
            return Err(AlgebraError::Malformed(format!(
                "entry ({},{}) = {} is out of range for order {order}",
                pos / order,
                pos % order,
                data[pos]
            )));
        }
        Ok(CayleyTable { order, data })
    }

    pub(crate) fn from_fn(order: usize, f: impl Fn(Elem, Elem) -> Elem) -> Self {
        let mut data = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                data.push(f(x, y));
            }
        }
        debug_assert!(data.iter().all(|&v| v < order));
        CayleyTable { order, data }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.data[x * self.order + y]
    }

    pub fn flat(&self) -> &[Elem] {
        &self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.data.chunks(self.order)
    }

    pub fn row(&self, x: Elem) -> &[Elem] {
        &self.data[x * self.order..(x + 1) * self.order]
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    pub fn commutativity_witness(&self) -> Option<(Elem, Elem)> {
        let n = self.order;
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.get(x, y) != self.get(y, x))
    }

    pub fn associativity_witness(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if self.get(xy, z) != self.get(x, self.get(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// The unique two-sided neutral element, if any.
    pub fn neutral_element(&self) -> Option<Elem> {
        (0..self.order).find(|&e| (0..self.order).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    /// The unique two-sided absorbing element, if any.
    pub fn absorbing_element(&self) -> Option<Elem> {
        (0..self.order).find(|&a| (0..self.order).all(|x| self.get(a, x) == a && self.get(x, a) == a))
    }

    /// An element absorbing against every other element but not against itself.
    pub fn almost_absorbing_element(&self) -> Option<Elem> {
        (0..self.order).find(|&a| {
            self.get(a, a) != a
                && (0..self.order)
                    .filter(|&x| x != a)
                    .all(|x| self.get(a, x) == a && self.get(x, a) == a)
        })
    }

    /// The opposite operation `x ∘ y := y · x`.
    pub fn transposed(&self) -> CayleyTable {
        CayleyTable::from_fn(self.order, |x, y| self.get(y, x))
    }

    /// Transports the table along a bijection `perm: self → image`, so that
    /// `image(perm[x], perm[y]) = perm[self(x, y)]`.
    pub fn relabel(&self, perm: &[Elem]) -> CayleyTable {
        debug_assert_eq!(perm.len(), self.order);
        let n = self.order;
        let mut data = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                data[perm[x] * n + perm[y]] = perm[self.get(x, y)];
            }
        }
        CayleyTable { order: n, data }
    }

    /// Number of occurrences of `e` among the table entries.
    pub fn count_of(&self, e: Elem) -> usize {
        self.data.iter().filter(|&&v| v == e).count()
    }

    /// Renders the table with a header row and column of element names, e.g.
    ///
    /// ```text
    /// M6 | 0 1 2
    /// ---+------
    ///  0 | 0 1 2
    ///  1 | 1 2 1
    ///  2 | 2 1 2
    /// ```
    pub fn render(&self, title: &str) -> String {
        render_grid(title, self.order, self.order, |x, y| self.get(x, y))
    }
}

pub(crate) fn render_grid(title: &str, rows: usize, cols: usize, cell: impl Fn(usize, usize) -> Elem) -> String {
    let max_entry = rows.max(cols).saturating_sub(1);
    let w = max_entry.to_string().len();
    let lw = title.chars().count().max(w);
    let mut out = String::new();
    out.push_str(&format!("{title:<lw$} |"));
    for y in 0..cols {
        out.push_str(&format!(" {y:>w$}"));
    }
    out.push('\n');
    out.push_str(&"-".repeat(lw + 1));
    out.push('+');
    out.push_str(&"-".repeat(cols * (w + 1)));
    out.push('\n');
    for x in 0..rows {
        out.push_str(&format!("{x:>lw$} |"));
        for y in 0..cols {
            out.push_str(&format!(" {:>w$}", cell(x, y)));
        }
        out.push('\n');
    }
    out
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(""))
    }
}

/// A finite function `S → T` stored as its value sequence.
pub type FunctionTable = Vec<Elem>;

/// Lexicographic successor of a permutation in place; `false` once the last one is reached.
pub(crate) fn next_permutation(p: &mut [Elem]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Calls `f` with every permutation of `0..n` that fixes `0`, in lexicographic order.
pub(crate) fn for_each_perm_fixing_zero(n: usize, mut f: impl FnMut(&[Elem])) {
    let mut tail: Vec<Elem> = (1..n).collect();
    let mut perm = vec![0; n];
    loop {
        perm[1..].copy_from_slice(&tail);
        f(&perm);
        if !next_permutation(&mut tail) {
            break;
        }
    }
}
