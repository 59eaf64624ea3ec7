//! Rhombic tilings of Elnitsky polygons on an exact integer lattice.
//!
//! Side `i` of the left boundary runs along `d_i = (2i - n - 1, -2)`. These
//! directions are pairwise non-parallel and turn monotonically, so the left
//! boundary is convex and the polygon is an affine image of the equilateral
//! one: parallelism, adjacency and every perimeter question are unchanged,
//! and all arithmetic stays in `i64`.
//!
//! Tilings are enumerated as commutation classes. A depth-first search grows
//! reduced words letter by letter and only keeps prefixes that are still the
//! least word of their class, so each class is produced exactly once, in
//! lexicographic order, without ever listing the other words of the class.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Sub};
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Permutation, ValuePair};
use crate::words::{can_append, CommutationClass, ReducedWord};
use crate::Limits;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    fn cross(self, other: Point) -> i64 {
        self.x * other.y - self.y * other.x
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

/// The four places a perimeter tile can sit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PerimeterType {
    Left,
    Right,
    Top,
    Bottom,
}

impl PerimeterType {
    pub const ALL: [PerimeterType; 4] = [
        PerimeterType::Left,
        PerimeterType::Right,
        PerimeterType::Top,
        PerimeterType::Bottom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PerimeterType::Left => "left",
            PerimeterType::Right => "right",
            PerimeterType::Top => "top",
            PerimeterType::Bottom => "bottom",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for PerimeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PerimeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PerimeterType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or(Error::DomainViolation(
                "perimeter type must be left, right, top or bottom",
            ))
    }
}

/// Exact vertices of `X(w)`.
///
/// `left[j]` is `L_j` and `right[j]` is `R_j`; `L_0 = R_0` is the top vertex
/// and `L_n = R_n` the bottom vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonEmbedding {
    pub n: usize,
    pub left: Vec<Point>,
    pub right: Vec<Point>,
    directions: Vec<Point>,
}

/// Direction of the sides labeled `i` in `S_n`.
pub fn direction(i: usize, n: usize) -> Point {
    Point::new(2 * i as i64 - n as i64 - 1, -2)
}

impl PolygonEmbedding {
    /// Builds `X(w)`. Fails when `w` is not fully supported.
    pub fn new(w: &Permutation) -> Result<Self> {
        if !w.is_fully_supported() {
            return Err(Error::NotFullySupported(w.clone()));
        }
        let n = w.len();
        let directions: Vec<Point> = (1..=n).map(|i| direction(i, n)).collect();
        let walk = |labels: &mut dyn Iterator<Item = usize>| {
            let mut pts = Vec::with_capacity(n + 1);
            let mut p = Point::default();
            pts.push(p);
            for i in labels {
                p = p + directions[i - 1];
                pts.push(p);
            }
            pts
        };
        let left = walk(&mut (1..=n));
        let right = walk(&mut w.entries().iter().copied());
        Ok(PolygonEmbedding {
            n,
            left,
            right,
            directions,
        })
    }

    /// `d_i`, 1-indexed.
    pub fn direction(&self, i: usize) -> Point {
        self.directions[i - 1]
    }

    pub fn top(&self) -> Point {
        self.left[0]
    }

    pub fn bottom(&self) -> Point {
        self.left[self.n]
    }

    /// Boundary in counterclockwise order starting at the top vertex.
    pub fn boundary(&self) -> Vec<Point> {
        let mut pts = self.left.clone();
        pts.extend(self.right[1..self.n].iter().rev());
        pts
    }

    /// Twice the signed area, positive for counterclockwise boundaries.
    pub fn twice_area(&self) -> i64 {
        let b = self.boundary();
        (0..b.len()).map(|i| b[i].cross(b[(i + 1) % b.len()])).sum()
    }

    /// Vertex triples `(P, Q, R)` whose segments `PQ`, `QR` are consecutive
    /// boundary edges of the given type.
    fn corner_paths(&self, ty: PerimeterType) -> Vec<[Point; 3]> {
        let n = self.n;
        let consecutive = |pts: &[Point]| -> Vec<[Point; 3]> {
            pts.windows(3).map(|p| [p[0], p[1], p[2]]).collect()
        };
        match ty {
            PerimeterType::Left => consecutive(&self.left),
            PerimeterType::Right => consecutive(&self.right),
            PerimeterType::Top if n >= 2 => {
                alloc::vec![[self.left[1], self.left[0], self.right[1]]]
            }
            PerimeterType::Bottom if n >= 2 => {
                alloc::vec![[self.left[n - 1], self.left[n], self.right[n - 1]]]
            }
            _ => Vec::new(),
        }
    }

    /// Tiles sharing two consecutive boundary edges of type `ty`, by exact
    /// segment coincidence. Sorted by label.
    pub fn perimeter_tiles<'a>(&self, tiles: &'a [Tile], ty: PerimeterType) -> Vec<&'a Tile> {
        let mut out: Vec<&Tile> = Vec::new();
        for [p, q, r] in self.corner_paths(ty) {
            if p == r {
                continue;
            }
            for t in tiles {
                if t.has_edge(p, q) && t.has_edge(q, r) {
                    out.push(t);
                }
            }
        }
        out.sort_unstable_by_key(|t| t.label);
        out.dedup_by_key(|t| t.label);
        out
    }
}

/// One rhombus of a tiling.
///
/// `spanned_by` is `(d_low, d_high)`; the vertices are `corner`,
/// `corner + d_low`, `corner + d_high` and `corner + d_low + d_high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Tile {
    pub label: ValuePair,
    pub row: usize,
    pub corner: Point,
    pub spanned_by: (Point, Point),
}

impl Tile {
    /// Vertices in counterclockwise order, starting at `corner`.
    pub fn vertices(&self) -> [Point; 4] {
        let (a, b) = self.spanned_by;
        let c = self.corner;
        [c, c + a, c + a + b, c + b]
    }

    pub fn edges(&self) -> [(Point, Point); 4] {
        let v = self.vertices();
        [(v[0], v[1]), (v[1], v[2]), (v[2], v[3]), (v[3], v[0])]
    }

    pub fn has_edge(&self, p: Point, q: Point) -> bool {
        self.edges()
            .iter()
            .any(|&(a, b)| (a == p && b == q) || (a == q && b == p))
    }

    pub fn shares_edge_with(&self, other: &Tile) -> bool {
        other.edges().iter().any(|&(a, b)| self.has_edge(a, b))
    }

    pub fn twice_area(&self) -> i64 {
        2 * self.spanned_by.0.cross(self.spanned_by.1)
    }
}

/// A rhombic tiling of `X(owner)`, one per commutation class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    pub owner: Permutation,
    pub class: CommutationClass,
    /// In the order the canonical word places them.
    pub tiles: Vec<Tile>,
}

impl Tiling {
    pub fn embedding(&self) -> PolygonEmbedding {
        PolygonEmbedding::new(&self.owner).expect("tilings only exist for fully supported owners")
    }

    pub fn tile(&self, label: ValuePair) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.label == label)
    }

    /// Labels of the tiles found by [`PolygonEmbedding::perimeter_tiles`].
    pub fn perimeter_labels(&self, ty: PerimeterType) -> Vec<ValuePair> {
        perimeter_tiles(self, ty).iter().map(|t| t.label).collect()
    }

    /// Perimeter labels read off the canonical word instead of the geometry.
    ///
    /// Right tiles come from final letters, left tiles from initial letters.
    /// A top tile exists exactly when `s_1` occurs once, and a bottom tile
    /// when `s_{n-1}` occurs once.
    pub fn combinatorial_perimeter(&self, ty: PerimeterType) -> Vec<ValuePair> {
        let w = &self.owner;
        let n = w.len();
        let word = self.class.canonical().letters();
        let once = |k: usize| word.iter().filter(|&&a| a == k).count() == 1;
        let mut out = match ty {
            PerimeterType::Left => self
                .class
                .initial_letters()
                .into_iter()
                .map(|k| ValuePair::new(k, k + 1))
                .collect(),
            PerimeterType::Right => self
                .class
                .final_letters()
                .into_iter()
                .map(|k| ValuePair::new(w.at(k), w.at(k + 1)))
                .collect(),
            PerimeterType::Top if n >= 2 && once(1) => alloc::vec![ValuePair::new(1, w.at(1))],
            PerimeterType::Bottom if n >= 2 && once(n - 1) => {
                alloc::vec![ValuePair::new(n, w.at(n))]
            }
            _ => Vec::new(),
        };
        out.sort_unstable();
        out
    }
}

/// Streams the canonical word of every tiling of `X(w)` in lexicographic
/// order. Returns the number of tilings.
pub fn for_each_class<F>(w: &Permutation, limits: &Limits, mut visit: F) -> Result<usize>
where
    F: FnMut(&[usize]),
{
    if !w.is_fully_supported() {
        return Err(Error::NotFullySupported(w.clone()));
    }
    let n = w.len();
    // position of each value in the part of w still to be produced
    let mut pos = alloc::vec![0usize; n + 2];
    for (i, &v) in w.entries().iter().enumerate() {
        pos[v] = i;
    }
    let mut search = ClassSearch {
        n,
        target: w.inversion_count(),
        pos,
        word: Vec::with_capacity(w.inversion_count()),
        count: 0,
        cap: limits.max_tilings,
    };
    search.run(&mut visit)?;
    Ok(search.count)
}

struct ClassSearch {
    n: usize,
    target: usize,
    pos: Vec<usize>,
    word: Vec<usize>,
    count: usize,
    cap: usize,
}

impl ClassSearch {
    fn run<F: FnMut(&[usize])>(&mut self, visit: &mut F) -> Result<()> {
        if self.word.len() == self.target {
            if self.count == self.cap {
                return Err(Error::SizeLimitExceeded {
                    what: "tilings",
                    limit: self.cap,
                });
            }
            self.count += 1;
            visit(&self.word);
            return Ok(());
        }
        for a in 1..self.n {
            // s_a shortens the remainder iff a + 1 precedes a in it
            if self.pos[a + 1] < self.pos[a] && can_append(&self.word, a) {
                self.pos.swap(a, a + 1);
                self.word.push(a);
                let r = self.run(visit);
                self.word.pop();
                self.pos.swap(a, a + 1);
                r?;
            }
        }
        Ok(())
    }
}

/// All tilings of `X(w)`, sorted by canonical word.
pub fn tilings(w: &Permutation, limits: &Limits) -> Result<Vec<Tiling>> {
    let mut words = Vec::new();
    for_each_class(w, limits, |word| words.push(word.to_vec()))?;
    Ok(words
        .into_iter()
        .map(|word| {
            let class = CommutationClass::from_canonical(ReducedWord::new(word));
            place_tiles(w, &class).expect("enumerated class evaluates to w")
        })
        .collect())
}

/// Number of tilings of `X(w)` without building them.
pub fn tiling_count(w: &Permutation, limits: &Limits) -> Result<usize> {
    for_each_class(w, limits, |_| {})
}

/// Realizes a commutation class of `w` as placed tiles.
///
/// Walks the canonical word while tracking the strand order `u`; the letter
/// `a` swaps strands `a` and `a + 1`, and the swept rhombus is the tile.
pub fn place_tiles(w: &Permutation, class: &CommutationClass) -> Result<Tiling> {
    let n = w.len();
    let word = class.canonical().letters();
    let tiles = place_word(n, word).ok_or(Error::ClassPermutationMismatch)?;
    let reached = class
        .canonical()
        .evaluate(n)
        .map_err(|_| Error::ClassPermutationMismatch)?;
    if reached != *w {
        return Err(Error::ClassPermutationMismatch);
    }
    if !w.is_fully_supported() {
        return Err(Error::NotFullySupported(w.clone()));
    }
    Ok(Tiling {
        owner: w.clone(),
        class: class.clone(),
        tiles,
    })
}

/// Tiles swept by `word` in `S_n`; `None` if a letter is out of range or not length-increasing.
pub(crate) fn place_word(n: usize, word: &[usize]) -> Option<Vec<Tile>> {
    let mut strands: Vec<usize> = (1..=n).collect();
    // path[i] = d_{u(1)} + ... + d_{u(i)}
    let mut path = Vec::with_capacity(n + 1);
    path.push(Point::default());
    for i in 1..=n {
        path.push(path[i - 1] + direction(i, n));
    }
    let mut tiles = Vec::with_capacity(word.len());
    for &a in word {
        if a == 0 || a >= n {
            return None;
        }
        let (lo, hi) = (strands[a - 1], strands[a]);
        if lo > hi {
            return None;
        }
        let (dl, dh) = (direction(lo, n), direction(hi, n));
        tiles.push(Tile {
            label: ValuePair::new(lo, hi),
            row: a,
            corner: path[a - 1],
            spanned_by: (dl, dh),
        });
        strands.swap(a - 1, a);
        path[a] = path[a - 1] + dh;
    }
    Some(tiles)
}

/// Perimeter tiles of one type in `t`, sorted by label.
pub fn perimeter_tiles(t: &Tiling, ty: PerimeterType) -> Vec<Tile> {
    t.embedding()
        .perimeter_tiles(&t.tiles, ty)
        .into_iter()
        .copied()
        .collect()
}

/// Value triples `[x, y, z]` whose three tiles meet around a common vertex as a hexagon.
pub fn subhexagons(t: &Tiling) -> Vec<[usize; 3]> {
    let n = t.owner.len();
    let mut by_label = alloc::vec![None; (n + 1) * (n + 1)];
    for tile in &t.tiles {
        by_label[tile.label.low * (n + 1) + tile.label.high] = Some(*tile);
    }
    let get = |x: usize, y: usize| by_label[x * (n + 1) + y];
    let mut out = Vec::new();
    for x in 1..=n {
        for y in x + 1..=n {
            let Some(xy) = get(x, y) else { continue };
            for z in y + 1..=n {
                let (Some(xz), Some(yz)) = (get(x, z), get(y, z)) else {
                    continue;
                };
                if is_hexagon(&xy, &xz, &yz) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

fn is_hexagon(a: &Tile, b: &Tile, c: &Tile) -> bool {
    if !(a.shares_edge_with(b) && a.shares_edge_with(c) && b.shares_edge_with(c)) {
        return false;
    }
    let bv = b.vertices();
    let cv = c.vertices();
    a.vertices()
        .iter()
        .any(|v| bv.contains(v) && cv.contains(v))
}

/// The tiling of `X(w^{-1})` obtained by reversing the words of `t`'s class.
///
/// A tile `{x, y}` of `t` corresponds to `{w^{-1}(x), w^{-1}(y)}` in the image.
pub fn transpose_tiling(t: &Tiling) -> Tiling {
    let inv = t.owner.inverse();
    place_tiles(&inv, &t.class.reversed()).expect("reversed class evaluates to the inverse")
}

/// Label pairs of distinct tiles, used to check that no label repeats.
pub fn label_set(t: &Tiling) -> BTreeSet<ValuePair> {
    t.tiles.iter().map(|tile| tile.label).collect()
}
