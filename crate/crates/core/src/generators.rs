//! Essential minors, the attends relation, and the elusive minimal generating set.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::diagram::{essential_set, rothe_diagram, Cell, EssentialCell};
use crate::error::Error;
use crate::perm::Permutation;

/// A minor `m_{I,J}` of the generic matrix, named by its strictly increasing
/// row and column index sets. `|I| = |J| >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Minor {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Minor {
    /// Validates that both index sets are strictly increasing, 1-based, and
    /// of equal nonzero size.
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self, Error> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::Parse {
                pos: 1,
                msg: format!(
                    "minor needs equal nonzero numbers of rows and columns, got {} and {}",
                    rows.len(),
                    cols.len()
                ),
            });
        }
        for set in [&rows, &cols] {
            if set[0] < 1 || !set.windows(2).all(|ab| ab[0] < ab[1]) {
                return Err(Error::Parse {
                    pos: 1,
                    msg: format!("index set {set:?} is not strictly increasing and 1-based"),
                });
            }
        }
        Ok(Self { rows, cols })
    }

    pub(crate) fn new_unchecked(rows: Vec<usize>, cols: Vec<usize>) -> Self {
        debug_assert!(Self::new(rows.clone(), cols.clone()).is_ok());
        Self { rows, cols }
    }

    /// Size of the index sets; equals the polynomial degree of the minor.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// The cell `(max I, max J)`.
    pub fn se_corner(&self) -> Cell {
        Cell::new(*self.rows.last().unwrap(), *self.cols.last().unwrap())
    }

    /// The minor with row and column index sets swapped.
    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }
}

impl PartialOrd for Minor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: size first, then rows lexicographically, then columns.
impl Ord for Minor {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.rows.cmp(&other.rows))
            .then_with(|| self.cols.cmp(&other.cols))
    }
}

impl fmt::Display for Minor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m[{{{}}},{{{}}}]",
            self.rows.iter().join(","),
            self.cols.iter().join(",")
        )
    }
}

impl Serialize for Minor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Minor", 2)?;
        s.serialize_field("I", &self.rows)?;
        s.serialize_field("J", &self.cols)?;
        s.end()
    }
}

/// An essential minor together with every essential cell it belongs to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EssentialMinor {
    pub minor: Minor,
    pub belongs_to: Vec<EssentialCell>,
}

/// The generating sets of the Schubert determinantal ideal of `w`: all
/// essential minors and the elusive ones, which generate minimally.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSet {
    pub w: Permutation,
    pub essential: Vec<EssentialMinor>,
    pub elusive: Vec<Minor>,
    pub degree_histogram: BTreeMap<usize, usize>,
}

impl GeneratorSet {
    pub fn essential_count(&self) -> usize {
        self.essential.len()
    }

    pub fn elusive_count(&self) -> usize {
        self.elusive.len()
    }
}

impl Serialize for GeneratorSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GeneratorSet", 4)?;
        s.serialize_field("w", &self.w)?;
        s.serialize_field("essential_count", &self.essential_count())?;
        s.serialize_field("elusive", &self.elusive)?;
        s.serialize_field("histogram", &self.degree_histogram)?;
        s.end()
    }
}

/// True when `m` belongs to the essential cell `e`: `I ⊆ [i]`, `J ⊆ [j]`
/// and `|I| = |J| = r_e + 1`.
pub fn belongs_to(m: &Minor, e: &EssentialCell) -> bool {
    m.size() == e.rank + 1
        && *m.rows().last().unwrap() <= e.cell.i
        && *m.cols().last().unwrap() <= e.cell.j
}

/// The attends relation against the northwest submatrix at `target`.
///
/// With `s = |I| = |J|` and `r' = r_target(w)`, this is
/// `(|I ∩ [i']| > r' and |J ∩ [j']| = s) or (|I ∩ [i']| = s and |J ∩ [j']| > r')`.
///
/// Panics if `target` is out of range.
pub fn attends(m: &Minor, target: Cell, w: &Permutation) -> bool {
    let size = m.size();
    let rows_inside = m.rows().partition_point(|&a| a <= target.i);
    let cols_inside = m.cols().partition_point(|&b| b <= target.j);
    let target_rank = w.rank(target.i, target.j);
    (rows_inside > target_rank && cols_inside == size)
        || (rows_inside == size && cols_inside > target_rank)
}

/// All minors prescribed by the essential set: for each `(i,j)` in `E(w)` all
/// `(r_{i,j}+1)`-subsets of `[i]` and `[j]`, deduplicated across cells and
/// sorted canonically. Each minor is annotated with every cell it belongs to.
pub fn essential_minors(w: &Permutation) -> Vec<EssentialMinor> {
    let mut by_minor: BTreeMap<Minor, Vec<EssentialCell>> = BTreeMap::new();
    for e in essential_set(w) {
        let size = e.rank + 1;
        let row_sets: Vec<Vec<usize>> = (1..=e.cell.i).combinations(size).collect();
        let col_sets: Vec<Vec<usize>> = (1..=e.cell.j).combinations(size).collect();
        for rows in &row_sets {
            for cols in &col_sets {
                by_minor
                    .entry(Minor::new_unchecked(rows.clone(), cols.clone()))
                    .or_default()
                    .push(e);
            }
        }
    }
    by_minor
        .into_iter()
        .map(|(minor, belongs_to)| EssentialMinor { minor, belongs_to })
        .collect()
}

/// First (row-major) essential cell of strictly smaller rank that `m`
/// attends, if any. `None` means `m` is elusive.
pub fn attended_lower_cell(m: &Minor, w: &Permutation) -> Option<EssentialCell> {
    attended_lower_cell_in(m, &essential_set(w), w)
}

fn attended_lower_cell_in(
    m: &Minor,
    essential: &[EssentialCell],
    w: &Permutation,
) -> Option<EssentialCell> {
    essential
        .iter()
        .find(|e| e.rank + 1 < m.size() && attends(m, e.cell, w))
        .copied()
}

/// Whether the essential minor `m` is elusive, i.e. attends no essential cell
/// of smaller rank. Errors if `m` is not an essential minor of `w`.
pub fn is_elusive(m: &Minor, w: &Permutation) -> Result<bool, Error> {
    let essential = essential_set(w);
    if !essential.iter().any(|e| belongs_to(m, e)) {
        return Err(Error::NotEssential {
            minor: m.to_string(),
            w: w.to_string(),
        });
    }
    Ok(attended_lower_cell_in(m, &essential, w).is_none())
}

/// The minimal generating set: the elusive essential minors, with their
/// degree histogram.
pub fn elusive_minors(w: &Permutation) -> GeneratorSet {
    let essential = essential_minors(w);
    let cells = essential_set(w);
    let elusive: Vec<Minor> = essential
        .iter()
        .filter(|em| attended_lower_cell_in(&em.minor, &cells, w).is_none())
        .map(|em| em.minor.clone())
        .collect();
    let mut degree_histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for m in &elusive {
        *degree_histogram.entry(m.size()).or_insert(0) += 1;
    }
    debug_assert_eq!(degree_histogram.values().sum::<usize>(), elusive.len());
    GeneratorSet {
        w: w.clone(),
        essential,
        elusive,
        degree_histogram,
    }
}

/// The contiguous elusive minor `m_{[i-r,i],[j-r,j]}` whose southeast corner
/// is the diagram cell `b`, where `r = r_b(w)`.
pub fn canonical_elusive_at(b: Cell, w: &Permutation) -> Result<Minor, Error> {
    if !rothe_diagram(w).contains(b) {
        return Err(Error::NotInDiagram {
            i: b.i,
            j: b.j,
            w: w.to_string(),
        });
    }
    let r = w.rank(b.i, b.j);
    let m = Minor::new_unchecked((b.i - r..=b.i).collect(), (b.j - r..=b.j).collect());
    match is_elusive(&m, w) {
        Ok(true) => Ok(m),
        other => Err(Error::InvariantViolation {
            msg: format!("{m} at {b} for w = {w} should be elusive, got {other:?}"),
        }),
    }
}

/// Which index set a shift rewrites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    Rows,
    Columns,
}

/// Replaces `from` by the larger, unused index `to` in the chosen index set.
/// Elusiveness is preserved by such shifts; that is a property of the result,
/// not checked here.
pub fn shift(m: &Minor, axis: Axis, from: usize, to: usize) -> Result<Minor, Error> {
    let set = match axis {
        Axis::Rows => m.rows(),
        Axis::Columns => m.cols(),
    };
    if !set.contains(&from) {
        return Err(Error::InvalidShift {
            msg: format!("{from} is not in the {axis:?} of {m}"),
        });
    }
    if to <= from {
        return Err(Error::InvalidShift {
            msg: format!("target {to} must exceed source {from}"),
        });
    }
    if set.contains(&to) {
        return Err(Error::InvalidShift {
            msg: format!("target {to} is already in the {axis:?} of {m}"),
        });
    }
    let mut replaced: Vec<usize> = set.iter().copied().filter(|&x| x != from).collect();
    replaced.push(to);
    replaced.sort_unstable();
    Ok(match axis {
        Axis::Rows => Minor::new_unchecked(replaced, m.cols().to_vec()),
        Axis::Columns => Minor::new_unchecked(m.rows().to_vec(), replaced),
    })
}
