use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A cell in English coordinates: row grows downward, column rightward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub fn new(row: i32, col: i32) -> Self {
        Self { row, col }
    }
}

/// One skew-shaped component. The content of a cell is
/// `col - row + content_offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    cells: Vec<Cell>,
    content_offset: i32,
}

impl Component {
    pub fn new(cells: impl IntoIterator<Item = Cell>, content_offset: i32) -> Result<Self> {
        let set: BTreeSet<Cell> = cells.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidShape("empty component".into()));
        }
        // skew diagrams are exactly the order-convex cell sets
        for a in &set {
            for b in &set {
                if a.row <= b.row && a.col <= b.col {
                    for r in a.row..=b.row {
                        for c in a.col..=b.col {
                            if !set.contains(&Cell::new(r, c)) {
                                return Err(Error::InvalidShape(format!(
                                    "cells {a:?} and {b:?} present but ({r}, {c}) missing"
                                )));
                            }
                        }
                    }
                }
            }
        }
        // row-major order, so left and upper neighbours precede a cell
        Ok(Self { cells: set.into_iter().collect(), content_offset })
    }

    /// The skew diagram `outer / inner`.
    pub fn from_skew(outer: &Partition, inner: &Partition, content_offset: i32) -> Result<Self> {
        if !inner.contained_in(outer) || inner == outer {
            return Err(Error::InvalidShape(format!("{outer}/{inner}")));
        }
        let cells = (1..=outer.len())
            .flat_map(|r| (inner.part(r)..outer.part(r)).map(move |c| Cell::new(r as i32 - 1, c as i32)));
        Self::new(cells, content_offset)
    }

    /// A single box with the given content.
    pub fn single(content: i32) -> Self {
        Self { cells: vec![Cell::new(0, 0)], content_offset: content }
    }

    /// Horizontal domino `(2)` whose left cell has content `left`.
    pub fn horizontal_domino(left: i32) -> Self {
        Self { cells: vec![Cell::new(0, 0), Cell::new(0, 1)], content_offset: left }
    }

    /// Vertical domino `(1,1)` whose top cell has content `top`.
    pub fn vertical_domino(top: i32) -> Self {
        Self { cells: vec![Cell::new(0, 0), Cell::new(1, 0)], content_offset: top }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn content_offset(&self) -> i32 {
        self.content_offset
    }

    pub fn content(&self, cell: &Cell) -> i32 {
        cell.col - cell.row + self.content_offset
    }

    pub fn contents(&self) -> Vec<i32> {
        self.cells.iter().map(|c| self.content(c)).collect()
    }

    pub fn position(&self, cell: &Cell) -> Option<usize> {
        self.cells.iter().position(|c| c == cell)
    }

    pub fn is_single(&self) -> bool {
        self.cells.len() == 1
    }

    /// Recognizes the four two-diagonal pieces with contents in `{0, 1}`.
    pub fn as_piece(&self) -> Option<Piece> {
        let contents = self.contents();
        match (self.cells.as_slice(), contents.as_slice()) {
            ([_], [0]) => Some(Piece::S0),
            ([_], [1]) => Some(Piece::S1),
            ([a, b], [0, 1]) if a.row == b.row => Some(Piece::H),
            ([a, b], [1, 0]) if a.col == b.col => Some(Piece::V),
            _ => None,
        }
    }
}

/// An ordered tuple of skew shapes `(λ^(0), ..., λ^(d-1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShapeTuple {
    components: Vec<Component>,
}

impl ShapeTuple {
    pub fn new(components: Vec<Component>) -> Self {
        Self { components }
    }

    /// Single cells with the given contents.
    pub fn singles(contents: &[i32]) -> Self {
        Self::new(contents.iter().map(|&c| Component::single(c)).collect())
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Number of components `d`.
    pub fn d(&self) -> usize {
        self.components.len()
    }

    /// Total number of cells `n`.
    pub fn n(&self) -> usize {
        self.components.iter().map(Component::len).sum()
    }

    /// Shifted content `d·c(x) + i` of a cell in component `i`.
    pub fn shifted_content(&self, component: usize, cell: &Cell) -> i64 {
        let d = self.d() as i64;
        d * self.components[component].content(cell) as i64 + component as i64
    }

    pub fn is_unicellular(&self) -> bool {
        self.components.iter().all(Component::is_single)
    }

    /// Contents of a single-cell tuple.
    pub fn single_contents(&self) -> Option<Vec<i32>> {
        self.components.iter().map(|c| c.is_single().then(|| c.content(&c.cells()[0]))).collect()
    }

    /// The tuple as a two-diagonal piece word, if every component is one of
    /// the four pieces.
    pub fn as_two_diag(&self) -> Option<TwoDiagTuple> {
        self.components.iter().map(Component::as_piece).collect::<Option<Vec<_>>>().map(TwoDiagTuple::new)
    }

    pub(crate) fn replace(&self, at: usize, count: usize, with: Vec<Component>) -> ShapeTuple {
        let mut comps = self.components[..at].to_vec();
        comps.extend(with);
        comps.extend_from_slice(&self.components[at + count..]);
        ShapeTuple::new(comps)
    }
}

/// The four building blocks of tuples on the diagonals with contents 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    /// Horizontal domino, contents 0 then 1.
    H,
    /// Vertical domino, contents 1 (top) and 0 (bottom).
    V,
    /// Single cell of content 0.
    S0,
    /// Single cell of content 1.
    S1,
}

impl Piece {
    pub fn component(self) -> Component {
        match self {
            Piece::H => Component::horizontal_domino(0),
            Piece::V => Component::vertical_domino(1),
            Piece::S0 => Component::single(0),
            Piece::S1 => Component::single(1),
        }
    }

    pub fn cells(self) -> usize {
        match self {
            Piece::H | Piece::V => 2,
            Piece::S0 | Piece::S1 => 1,
        }
    }

    pub fn is_domino(self) -> bool {
        matches!(self, Piece::H | Piece::V)
    }

    fn letter(self) -> char {
        match self {
            Piece::H => 'H',
            Piece::V => 'V',
            Piece::S0 => '0',
            Piece::S1 => '1',
        }
    }
}

/// A tuple of pieces from `{H, V, 0, 1}`, written as a string like `"HV1"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoDiagTuple {
    pieces: Vec<Piece>,
}

impl TwoDiagTuple {
    pub fn new(pieces: Vec<Piece>) -> Self {
        Self { pieces }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Number of cells.
    pub fn n(&self) -> usize {
        self.pieces.iter().map(|p| p.cells()).sum()
    }

    /// Number of cells of content 1.
    pub fn m(&self) -> usize {
        self.pieces.iter().filter(|p| **p != Piece::S0).count()
    }

    /// Number of vertical dominoes.
    pub fn z(&self) -> usize {
        self.pieces.iter().filter(|p| **p == Piece::V).count()
    }

    pub fn to_shape(&self) -> ShapeTuple {
        ShapeTuple::new(self.pieces.iter().map(|p| p.component()).collect())
    }

    /// Reverses the order and flips single-cell contents `c ↦ 1 - c`;
    /// dominoes are fixed.
    pub fn conjugate(&self) -> TwoDiagTuple {
        TwoDiagTuple::new(
            self.pieces
                .iter()
                .rev()
                .map(|p| match p {
                    Piece::S0 => Piece::S1,
                    Piece::S1 => Piece::S0,
                    other => *other,
                })
                .collect(),
        )
    }

    /// Every piece word with between `1` and `max_pieces` pieces.
    pub fn all_up_to(max_pieces: usize) -> Vec<TwoDiagTuple> {
        const ALL: [Piece; 4] = [Piece::H, Piece::V, Piece::S0, Piece::S1];
        let mut out = Vec::new();
        let mut layer: Vec<Vec<Piece>> = vec![Vec::new()];
        for _ in 0..max_pieces {
            layer = layer
                .iter()
                .flat_map(|w| {
                    ALL.iter().map(move |p| {
                        let mut v = w.clone();
                        v.push(*p);
                        v
                    })
                })
                .collect();
            out.extend(layer.iter().cloned().map(TwoDiagTuple::new));
        }
        out
    }
}

impl FromStr for TwoDiagTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|ch| match ch {
                'H' | 'h' => Ok(Piece::H),
                'V' | 'v' => Ok(Piece::V),
                '0' => Ok(Piece::S0),
                '1' => Ok(Piece::S1),
                _ => Err(Error::InvalidTupleString(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(TwoDiagTuple::new)
    }
}

impl fmt::Display for TwoDiagTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.pieces {
            write!(f, "{}", p.letter())?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    kind: String,
    cells: Vec<[i32; 2]>,
    content_offset: i32,
}

#[derive(Serialize, Deserialize)]
struct ShapeTupleJson {
    components: Vec<ComponentJson>,
}

impl Serialize for ShapeTuple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ShapeTupleJson {
            components: self
                .components
                .iter()
                .map(|c| ComponentJson {
                    kind: "cells".into(),
                    cells: c.cells.iter().map(|x| [x.row, x.col]).collect(),
                    content_offset: c.content_offset,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ShapeTuple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ShapeTupleJson::deserialize(deserializer)?;
        let comps = raw
            .components
            .into_iter()
            .map(|c| {
                if c.kind != "cells" {
                    return Err(D::Error::custom(format!("unknown component kind {:?}", c.kind)));
                }
                Component::new(c.cells.into_iter().map(|[r, col]| Cell::new(r, col)), c.content_offset)
                    .map_err(D::Error::custom)
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(ShapeTuple::new(comps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skew_validation() {
        // (2,1)/(1)
        assert!(Component::new([Cell::new(0, 1), Cell::new(1, 0)], 0).is_ok());
        // hole in a row
        assert!(Component::new([Cell::new(0, 0), Cell::new(0, 2)], 0).is_err());
        // (2,2) minus its top-right cell is (2,1): fine; minus its top-left is not a skew shape
        assert!(Component::new([Cell::new(0, 1), Cell::new(1, 0), Cell::new(1, 1)], 0).is_ok());
        assert!(Component::new([Cell::new(0, 0), Cell::new(1, 0), Cell::new(0, 1), Cell::new(1, 2)], 0).is_err());
    }

    #[test]
    fn from_skew_cells() {
        let c =
            Component::from_skew(&Partition::new(vec![2, 1]).unwrap(), &Partition::new(vec![1]).unwrap(), 0).unwrap();
        assert_eq!(c.cells(), &[Cell::new(0, 1), Cell::new(1, 0)]);
        assert!(Component::from_skew(&Partition::new(vec![1]).unwrap(), &Partition::new(vec![1]).unwrap(), 0).is_err());
    }

    #[test]
    fn piece_contents() {
        assert_eq!(Piece::H.component().contents(), vec![0, 1]);
        assert_eq!(Piece::V.component().contents(), vec![1, 0]);
        for p in [Piece::H, Piece::V, Piece::S0, Piece::S1] {
            assert_eq!(p.component().as_piece(), Some(p));
        }
    }

    #[test]
    fn parse_and_counts() {
        let t: TwoDiagTuple = "HV1".parse().unwrap();
        assert_eq!((t.n(), t.m(), t.z()), (5, 3, 1));
        assert_eq!(t.to_string(), "HV1");
        assert!("HX".parse::<TwoDiagTuple>().is_err());
        assert_eq!("H01".parse::<TwoDiagTuple>().unwrap().conjugate().to_string(), "01H");
    }

    #[test]
    fn shifted_contents_distinct() {
        let t: ShapeTuple = "HV01".parse::<TwoDiagTuple>().unwrap().to_shape();
        let mut all = Vec::new();
        for (i, c) in t.components().iter().enumerate() {
            for cell in c.cells() {
                all.push(t.shifted_content(i, cell));
            }
        }
        let set: BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
    }

    #[test]
    fn json_shape() {
        let t = ShapeTuple::new(vec![Component::vertical_domino(1), Component::single(0)]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"components":[{"kind":"cells","cells":[[0,0],[1,0]],"content_offset":1},{"kind":"cells","cells":[[0,0]],"content_offset":0}]}"#
        );
        let back: ShapeTuple = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn enumerate_words() {
        assert_eq!(TwoDiagTuple::all_up_to(2).len(), 4 + 16);
    }
}
