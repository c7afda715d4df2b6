//! Rothe diagrams, Fulton's essential set, and diagram component structure.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::perm::Permutation;

/// A 1-based matrix position.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.i, self.j).serialize(serializer)
    }
}

/// A set of cells inside `[n] x [n]`, iterated in row-major order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Diagram {
    n: usize,
    cells: BTreeSet<Cell>,
}

impl Diagram {
    pub fn new(n: usize, cells: BTreeSet<Cell>) -> Self {
        debug_assert!(cells
            .iter()
            .all(|c| (1..=n).contains(&c.i) && (1..=n).contains(&c.j)));
        Self { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    /// The reflected diagram across the main diagonal.
    pub fn transpose(&self) -> Self {
        Self {
            n: self.n,
            cells: self.cells.iter().map(|c| Cell::new(c.j, c.i)).collect(),
        }
    }
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.cells.iter())
    }
}

/// A cell of the essential set together with its rank value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct EssentialCell {
    pub cell: Cell,
    pub rank: usize,
}

/// The Rothe diagram `D(w) = {(i,j) : j < w(i), i < w^{-1}(j)}`.
pub fn rothe_diagram(w: &Permutation) -> Diagram {
    let n = w.n();
    let inv = w.inverse();
    let mut cells = BTreeSet::new();
    for i in 1..=n {
        for j in 1..w.apply(i) {
            if i < inv.apply(j) {
                cells.insert(Cell::new(i, j));
            }
        }
    }
    Diagram::new(n, cells)
}

/// Fulton's essential set: cells of `D(w)` with no diagram cell immediately
/// right or below, listed row-major with their rank values.
pub fn essential_set(w: &Permutation) -> Vec<EssentialCell> {
    let d = rothe_diagram(w);
    d.cells()
        .filter(|c| !d.contains(Cell::new(c.i + 1, c.j)) && !d.contains(Cell::new(c.i, c.j + 1)))
        .map(|cell| EssentialCell {
            cell,
            rank: w.rank(cell.i, cell.j),
        })
        .collect()
}

/// Connected components of a diagram under 4-adjacency (shared edges).
///
/// Components are sorted by their row-major smallest cell; cells within a
/// component are sorted row-major.
pub fn connected_components(d: &Diagram) -> Vec<Vec<Cell>> {
    let mut unvisited: BTreeSet<Cell> = d.cells().collect();
    let mut components = Vec::new();
    while let Some(&start) = unvisited.iter().next() {
        unvisited.remove(&start);
        let mut component = vec![start];
        let mut queue = vec![start];
        while let Some(c) = queue.pop() {
            let mut neighbors = vec![Cell::new(c.i + 1, c.j), Cell::new(c.i, c.j + 1)];
            if c.i > 1 {
                neighbors.push(Cell::new(c.i - 1, c.j));
            }
            if c.j > 1 {
                neighbors.push(Cell::new(c.i, c.j - 1));
            }
            for nb in neighbors {
                if unvisited.remove(&nb) {
                    component.push(nb);
                    queue.push(nb);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components.sort_unstable();
    components
}

/// Text rendering of the Rothe diagram: `#` for diagram cells, `o` for the
/// 1s of the permutation matrix, `.` elsewhere. One line per row.
pub fn ascii_render(w: &Permutation) -> String {
    let n = w.n();
    let d = rothe_diagram(w);
    let mut lines = Vec::with_capacity(n);
    for i in 1..=n {
        let mut line = String::with_capacity(n);
        for j in 1..=n {
            line.push(if d.contains(Cell::new(i, j)) {
                '#'
            } else if w.apply(i) == j {
                'o'
            } else {
                '.'
            });
        }
        lines.push(line);
    }
    lines.join("\n")
}
