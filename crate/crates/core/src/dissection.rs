//! Dissections of a convex polygon by noncrossing diagonals.
//!
//! Vertices of the `m`-gon are `0 .. m-1` in counterclockwise order; the
//! edge `(m-1, 0)` is the root edge. A dissection is a set of pairwise
//! noncrossing diagonals; its faces are the regions they cut out. This
//! module is the brute-force side of the crate: everything is enumerated
//! explicitly, so it serves as the independent check on the closed
//! formulas in [`crate::lagrange`] and [`crate::catalan`].
//!
//! Invariants of every constructed [`Dissection`]:
//!
//! * diagonals are stored sorted and deduplicated, endpoints normalized
//!   `i < j`, so equal dissections compare equal structurally;
//! * for `m >= 3` the faces partition the polygon: face count is
//!   `diagonals + 1` and face sizes `s_f` satisfy `sum(s_f - 2) = m - 2`;
//! * `m = 2` is the degenerate digon: no diagonals, no faces, empty type.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::Nat;
use crate::error::Error;
use crate::partition::{parse_u64, PartitionType};
use crate::series::SeedPolynomial;

/// A diagonal of the `m`-gon with endpoints normalized to `i < j`.
/// Polygon sides and the root edge `(0, m-1)` are not diagonals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    i: usize,
    j: usize,
}

impl Diagonal {
    pub fn new(m: usize, a: usize, b: usize) -> Result<Self, Error> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if j >= m || j < i + 2 || (i == 0 && j == m - 1) {
            return Err(Error::InvalidDiagonal { m, a, b });
        }
        Ok(Diagonal { i, j })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    /// Strict interior crossing: the endpoint pairs interleave around the
    /// circle. Sharing an endpoint is not a crossing.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        let (a, b) = (self.i, self.j);
        let (c, d) = (other.i, other.j);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A set of pairwise noncrossing diagonals of a convex `m`-gon.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dissection {
    m: usize,
    diagonals: Vec<Diagonal>,
}

impl Dissection {
    /// Build from endpoint pairs (any order, duplicates collapsed).
    /// Rejects invalid endpoints and crossing pairs.
    pub fn new(m: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        if m < 2 {
            return Err(Error::PolygonTooSmall { m });
        }
        let mut diagonals = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            diagonals.push(Diagonal::new(m, a, b)?);
        }
        diagonals.sort();
        diagonals.dedup();
        for (idx, a) in diagonals.iter().enumerate() {
            for b in &diagonals[idx + 1..] {
                if a.crosses(b) {
                    return Err(Error::CrossingDiagonals {
                        a: a.endpoints(),
                        b: b.endpoints(),
                    });
                }
            }
        }
        Ok(Dissection { m, diagonals })
    }

    /// The diagonal-free dissection (one face, or none when `m = 2`).
    pub fn empty(m: usize) -> Result<Self, Error> {
        Self::new(m, &[])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    /// The faces cut out by the diagonals. Each face is its vertex list in
    /// ascending order (which is also its cyclic boundary order); faces are
    /// sorted lexicographically. The digon has no faces.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        if self.m == 2 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(self.diagonals.len() + 1);
        let all: Vec<usize> = (0..self.m).collect();
        split_region(all, &self.diagonals, &mut out);
        out.sort();
        out
    }

    /// The partition of `m - 2` by face contributions `size - 2`.
    pub fn type_of(&self) -> PartitionType {
        let mut mults: BTreeMap<u64, u64> = BTreeMap::new();
        for face in self.faces() {
            *mults.entry(face.len() as u64 - 2).or_insert(0) += 1;
        }
        PartitionType::new(self.m as u64 - 2, mults)
            .expect("face sizes partition m - 2")
    }

    /// Canonical text form `m=<m>;diags=(i,j),(i,j),...` with the sorted
    /// diagonal list; equal dissections produce identical strings.
    pub fn canonical_string(&self) -> String {
        let mut s = alloc::format!("m={};diags=", self.m);
        for (idx, d) in self.diagonals.iter().enumerate() {
            if idx > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{d}"));
        }
        s
    }

    /// Parse the canonical text form.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let parse_err = |detail: &str| Error::Parse {
            what: "dissection",
            detail: String::from(detail),
        };
        let s = s.trim();
        let rest = s
            .strip_prefix("m=")
            .ok_or_else(|| parse_err("expected \"m=\" prefix"))?;
        let (m_text, diag_section) = rest
            .split_once(';')
            .ok_or_else(|| parse_err("expected ';' after the vertex count"))?;
        let m = parse_u64(m_text, "dissection")? as usize;
        let diag_text = diag_section
            .strip_prefix("diags=")
            .ok_or_else(|| parse_err("expected \"diags=\" section"))?
            .trim();
        let mut pairs = Vec::new();
        if !diag_text.is_empty() {
            let inner = diag_text
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| parse_err("diagonal list must look like (i,j),(i,j)"))?;
            for chunk in inner.split("),(") {
                let (a, b) = chunk
                    .split_once(',')
                    .ok_or_else(|| parse_err("diagonal must be a pair (i,j)"))?;
                pairs.push((
                    parse_u64(a, "dissection")? as usize,
                    parse_u64(b, "dissection")? as usize,
                ));
            }
        }
        Self::new(m, &pairs)
    }
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

/// Cut `verts` along the lexicographically first diagonal and recurse;
/// `diags` holds only diagonals lying inside this region, sorted.
fn split_region(verts: Vec<usize>, diags: &[Diagonal], out: &mut Vec<Vec<usize>>) {
    let Some((cut, rest)) = diags.split_first() else {
        out.push(verts);
        return;
    };
    let (i, j) = cut.endpoints();
    let left: Vec<usize> = verts.iter().copied().filter(|&v| v >= i && v <= j).collect();
    let right: Vec<usize> = verts.iter().copied().filter(|&v| v <= i || v >= j).collect();
    let (mut left_diags, mut right_diags) = (Vec::new(), Vec::new());
    for d in rest {
        let (a, b) = d.endpoints();
        if a >= i && b <= j {
            left_diags.push(*d);
        } else {
            right_diags.push(*d);
        }
    }
    split_region(left, &left_diags, out);
    split_region(right, &right_diags, out);
}

/// All diagonals of the `m`-gon in lexicographic endpoint order.
fn all_diagonals(m: usize) -> Vec<Diagonal> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            out.push(Diagonal { i, j });
        }
    }
    out
}

/// Which face sizes can be completed at all: `fill[t]` says a region
/// contributing `t = size - 2` can be exactly dissected into allowed
/// pieces (the numerical semigroup generated by `{a - 2}`).
fn fill_table(m: usize, allowed: &BTreeSet<usize>) -> Vec<bool> {
    let gens: Vec<usize> = allowed
        .iter()
        .copied()
        .filter(|&a| (3..=m).contains(&a))
        .map(|a| a - 2)
        .collect();
    let mut fill = vec![false; m.max(2) - 1];
    fill[0] = true;
    for t in 1..fill.len() {
        fill[t] = gens.iter().any(|&g| g <= t && fill[t - g]);
    }
    fill
}

/// Position of `d` as a chord of one of the current faces, with the split
/// positions inside that face; `None` if `d` is not a chord of any face
/// (i.e. it crosses or duplicates the chosen set).
fn chord_of(faces: &[Vec<usize>], d: Diagonal) -> Option<(usize, usize, usize)> {
    let (i, j) = d.endpoints();
    for (pos, face) in faces.iter().enumerate() {
        let (Ok(p), Ok(q)) = (face.binary_search(&i), face.binary_search(&j)) else {
            continue;
        };
        let adjacent = q == p + 1 || (p == 0 && q == face.len() - 1);
        if !adjacent {
            return Some((pos, p, q));
        }
    }
    None
}

/// Lexicographically largest chord of a face, if it has any.
fn max_chord(face: &[usize]) -> Option<Diagonal> {
    let len = face.len();
    match len {
        0..=3 => None,
        4 => Some(Diagonal { i: face[1], j: face[3] }),
        _ => Some(Diagonal { i: face[len - 3], j: face[len - 1] }),
    }
}

/// Every dissection of the `m`-gon whose faces all have sizes in
/// `allowed`, each exactly once, sorted by diagonal list.
///
/// `m = 2` yields exactly the empty dissection regardless of `allowed`.
/// The search walks diagonals in lexicographic order, keeps the face list
/// incrementally, and prunes two ways without losing exactness: a new face
/// must be completable per [`fill_table`], and skipping past the last
/// chord of a face whose size is not allowed abandons the branch.
pub fn enumerate_dissections(m: usize, allowed: &BTreeSet<usize>) -> Vec<Dissection> {
    assert!(m >= 2, "enumeration needs at least a digon");
    if m == 2 {
        return vec![Dissection { m, diagonals: Vec::new() }];
    }
    let fill = fill_table(m, allowed);
    if !fill[m - 2] {
        return Vec::new();
    }
    let diags = all_diagonals(m);
    let mut faces: Vec<Vec<usize>> = vec![(0..m).collect()];
    let mut chosen: Vec<Diagonal> = Vec::new();
    let mut out = Vec::new();
    extend(
        m, &diags, 0, allowed, &fill, &mut faces, &mut chosen, &mut out,
    );
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    m: usize,
    diags: &[Diagonal],
    idx: usize,
    allowed: &BTreeSet<usize>,
    fill: &[bool],
    faces: &mut Vec<Vec<usize>>,
    chosen: &mut Vec<Diagonal>,
    out: &mut Vec<Dissection>,
) {
    if idx == diags.len() {
        if faces.iter().all(|f| allowed.contains(&f.len())) {
            out.push(Dissection { m, diagonals: chosen.clone() });
        }
        return;
    }
    let d = diags[idx];

    // Branch 1: include d, splitting the face it is a chord of.
    if let Some((pos, p, q)) = chord_of(faces, d) {
        let face = &faces[pos];
        let left: Vec<usize> = face[p..=q].to_vec();
        let mut right: Vec<usize> = face[..=p].to_vec();
        right.extend_from_slice(&face[q..]);
        if fill[left.len() - 2] && fill[right.len() - 2] {
            let original = faces.remove(pos);
            faces.push(left);
            faces.push(right);
            chosen.push(d);
            extend(m, diags, idx + 1, allowed, fill, faces, chosen, out);
            chosen.pop();
            faces.pop();
            faces.pop();
            faces.insert(pos, original);
        }
    }

    // Branch 2: skip d permanently. Any face of disallowed size must still
    // have a chord later in the order, or it can never be fixed.
    let viable = faces.iter().all(|f| {
        allowed.contains(&f.len()) || max_chord(f).is_some_and(|c| c > d)
    });
    if viable {
        extend(m, diags, idx + 1, allowed, fill, faces, chosen, out);
    }
}

/// Dissection counts of the `m`-gon grouped by partition type. Covers all
/// face sizes; the counts sum to the super-Catalan number of `m - 2`.
pub fn count_by_type(m: usize) -> BTreeMap<PartitionType, Nat> {
    let allowed: BTreeSet<usize> = (3..=m).collect();
    let mut counts: BTreeMap<PartitionType, Nat> = BTreeMap::new();
    for d in enumerate_dissections(m, &allowed) {
        *counts.entry(d.type_of()).or_insert_with(Nat::zero) += 1u32;
    }
    counts
}

/// A dissection together with one color choice per face (1-based, indexed
/// in [`Dissection::faces`] order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDissection {
    dissection: Dissection,
    colors: Vec<u64>,
}

impl ColoredDissection {
    pub fn dissection(&self) -> &Dissection {
        &self.dissection
    }

    pub fn colors(&self) -> &[u64] {
        &self.colors
    }
}

/// All colorings of one dissection under the seed: face of size `s` picks
/// a color in `1 ..= c_{s-1}`. Empty when some face size has no colors.
pub fn colored_variants(d: &Dissection, g: &SeedPolynomial) -> Vec<ColoredDissection> {
    let faces = d.faces();
    let palette: Vec<u64> =
        faces.iter().map(|f| g.color(f.len() as u64 - 1)).collect();
    if palette.contains(&0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut colors = vec![1u64; faces.len()];
    loop {
        out.push(ColoredDissection { dissection: d.clone(), colors: colors.clone() });
        // Odometer step, last face fastest.
        let mut pos = faces.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if colors[pos] < palette[pos] {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 1;
        }
    }
}

/// Total number of colored dissections of the `m`-gon under the seed:
/// faces are restricted to the seed's piece sizes and weighted by
/// `prod_f c_{size(f)-1}`. The digon counts 1 (the empty product).
pub fn colored_count(m: usize, g: &SeedPolynomial) -> Nat {
    let mut total = Nat::zero();
    for d in enumerate_dissections(m, &g.piece_sizes()) {
        let mut weight = Nat::one();
        for face in d.faces() {
            weight *= Nat::from(g.color(face.len() as u64 - 1));
        }
        total += weight;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::{catalan, fuss_catalan, super_catalan};
    use crate::combinatorics::nat;

    fn diag(m: usize, a: usize, b: usize) -> Diagonal {
        Diagonal::new(m, a, b).unwrap()
    }

    fn sizes(m: usize, lo: usize, hi: usize) -> BTreeSet<usize> {
        let _ = m;
        (lo..=hi).collect()
    }

    #[test]
    fn crossing_is_strict_interleaving() {
        let m = 6;
        assert!(diag(m, 0, 2).crosses(&diag(m, 1, 3)));
        assert!(diag(m, 1, 3).crosses(&diag(m, 0, 2)));
        assert!(!diag(m, 0, 2).crosses(&diag(m, 2, 4)));
        assert!(!diag(m, 0, 3).crosses(&diag(m, 3, 5)));
        assert!(!diag(m, 0, 2).crosses(&diag(m, 3, 5)));
        assert!(diag(m, 0, 3).crosses(&diag(m, 2, 5)));
    }

    #[test]
    fn diagonal_validation() {
        assert!(Diagonal::new(6, 0, 5).is_err()); // root edge
        assert!(Diagonal::new(6, 2, 3).is_err()); // side
        assert!(Diagonal::new(6, 2, 2).is_err());
        assert!(Diagonal::new(6, 0, 6).is_err()); // out of range
        assert_eq!(Diagonal::new(6, 3, 0).unwrap().endpoints(), (0, 3));
    }

    #[test]
    fn dissection_rejects_crossings() {
        assert_eq!(
            Dissection::new(4, &[(0, 2), (1, 3)]),
            Err(Error::CrossingDiagonals { a: (0, 2), b: (1, 3) })
        );
        assert!(Dissection::new(6, &[(0, 2), (2, 4), (0, 4)]).is_ok());
    }

    #[test]
    fn faces_of_the_undissected_hexagon() {
        let d = Dissection::empty(6).unwrap();
        assert_eq!(d.faces(), vec![vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn faces_split_by_one_diagonal() {
        let d = Dissection::new(6, &[(0, 3)]).unwrap();
        assert_eq!(d.faces(), vec![vec![0, 1, 2, 3], vec![0, 3, 4, 5]]);
        assert_eq!(d.type_of(), PartitionType::from_parts(&[2, 2]).unwrap());
    }

    #[test]
    fn faces_of_a_fan_triangulation() {
        let d = Dissection::new(5, &[(0, 2), (0, 3)]).unwrap();
        assert_eq!(
            d.faces(),
            vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4]]
        );
        assert_eq!(d.type_of(), PartitionType::from_parts(&[1, 1, 1]).unwrap());
    }

    #[test]
    fn decagon_types_from_quadrilateral_and_mixed_cuts() {
        // Four quadrilaterals.
        let d = Dissection::new(10, &[(1, 4), (4, 9), (5, 8)]).unwrap();
        assert_eq!(d.type_of(), PartitionType::from_parts(&[2, 2, 2, 2]).unwrap());
        // Pentagon, two quadrilaterals, triangle.
        let d = Dissection::new(10, &[(1, 5), (1, 8), (5, 8)]).unwrap();
        assert_eq!(d.type_of(), PartitionType::from_parts(&[3, 2, 2, 1]).unwrap());
    }

    #[test]
    fn face_structure_invariants_hold_on_everything_enumerated() {
        for m in 3..=8usize {
            for d in enumerate_dissections(m, &sizes(m, 3, m)) {
                let faces = d.faces();
                assert_eq!(faces.len(), d.diagonals().len() + 1);
                let budget: usize = faces.iter().map(|f| f.len() - 2).sum();
                assert_eq!(budget, m - 2);
                assert!(faces.iter().all(|f| f.len() >= 3));
            }
        }
    }

    #[test]
    fn digon_has_exactly_the_empty_dissection() {
        let ds = enumerate_dissections(2, &BTreeSet::new());
        assert_eq!(ds.len(), 1);
        assert!(ds[0].diagonals().is_empty());
        assert!(ds[0].faces().is_empty());
        assert_eq!(ds[0].type_of(), PartitionType::empty());
    }

    #[test]
    fn enumeration_counts_match_known_values() {
        assert_eq!(enumerate_dissections(3, &sizes(3, 3, 3)).len(), 1);
        assert_eq!(enumerate_dissections(4, &sizes(4, 3, 3)).len(), 2);
        assert_eq!(enumerate_dissections(4, &sizes(4, 3, 4)).len(), 3);
        assert_eq!(enumerate_dissections(5, &sizes(5, 3, 4)).len(), 10);
        assert_eq!(enumerate_dissections(5, &sizes(5, 3, 5)).len(), 11);
        // Hexagons into quadrilaterals only: the three long diagonals.
        let quads = enumerate_dissections(6, &[4].into_iter().collect());
        assert_eq!(quads.len(), 3);
        // Heptagon, all dissections.
        assert_eq!(enumerate_dissections(7, &sizes(7, 3, 7)).len(), 197);
    }

    #[test]
    fn enumeration_totals_are_super_catalan() {
        for m in 2..=9usize {
            let total = enumerate_dissections(m, &sizes(m, 3, m.max(3))).len();
            assert_eq!(
                Nat::from(total),
                super_catalan(m as u64 - 2),
                "m = {m}"
            );
        }
    }

    #[test]
    fn single_piece_size_counts_are_fuss_catalan() {
        // Dissections into (d+1)-gons exist only when m = k(d-1) + 2.
        for d in 2..=4u64 {
            for m in 3..=11usize {
                let got = enumerate_dissections(m, &[(d + 1) as usize].into_iter().collect());
                let rem = (m - 2) as u64 % (d - 1);
                if rem == 0 {
                    let k = (m - 2) as u64 / (d - 1);
                    assert_eq!(Nat::from(got.len()), fuss_catalan(d, k).unwrap(), "d={d} m={m}");
                } else {
                    assert!(got.is_empty(), "d={d} m={m}");
                }
            }
        }
        // Triangulations are plain Catalan.
        for m in 3..=10usize {
            let got = enumerate_dissections(m, &[3].into_iter().collect());
            assert_eq!(Nat::from(got.len()), catalan(m as u64 - 2), "m = {m}");
        }
    }

    #[test]
    fn enumeration_has_no_duplicates_and_is_sorted() {
        for m in 3..=8usize {
            let ds = enumerate_dissections(m, &sizes(m, 3, m));
            let mut seen = BTreeSet::new();
            for d in &ds {
                assert!(seen.insert(d.canonical_string()), "duplicate {d}");
            }
            let mut sorted = ds.clone();
            sorted.sort();
            assert_eq!(ds, sorted);
        }
    }

    /// Reference enumerator with no pruning and no shared search logic:
    /// every subset of the full diagonal list, filtered after the fact.
    fn enumerate_by_subsets(m: usize, allowed: &BTreeSet<usize>) -> Vec<Dissection> {
        let diags = all_diagonals(m);
        assert!(diags.len() < 26);
        let mut out = Vec::new();
        'subset: for mask in 0u32..(1 << diags.len()) {
            let subset: Vec<Diagonal> = diags
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, d)| *d)
                .collect();
            for (i, a) in subset.iter().enumerate() {
                for b in &subset[i + 1..] {
                    if a.crosses(b) {
                        continue 'subset;
                    }
                }
            }
            let d = Dissection { m, diagonals: subset };
            if d.faces().iter().all(|f| allowed.contains(&f.len())) {
                out.push(d);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn pruned_search_matches_exhaustive_subsets() {
        let families: Vec<BTreeSet<usize>> = vec![
            [3].into(), [4].into(), [5].into(), [3, 4].into(),
            [3, 5].into(), [4, 6].into(), (3..=8).collect(),
        ];
        for m in 3..=8usize {
            for allowed in &families {
                assert_eq!(
                    enumerate_dissections(m, allowed),
                    enumerate_by_subsets(m, allowed),
                    "m = {m}, allowed = {allowed:?}"
                );
            }
        }
    }

    #[test]
    fn count_by_type_of_the_pentagon() {
        let counts = count_by_type(5);
        let key = |parts: &[u64]| PartitionType::from_parts(parts).unwrap();
        assert_eq!(counts[&key(&[1, 1, 1])], nat("5"));
        assert_eq!(counts[&key(&[2, 1])], nat("5"));
        assert_eq!(counts[&key(&[3])], nat("1"));
        assert_eq!(counts.len(), 3);
    }

    #[test]
    fn canonical_strings_parse_back() {
        let d = Dissection::new(5, &[(0, 3), (0, 2)]).unwrap();
        assert_eq!(d.canonical_string(), "m=5;diags=(0,2),(0,3)");
        assert_eq!(Dissection::parse("m=5;diags=(0,2),(0,3)").unwrap(), d);
        let empty = Dissection::empty(7).unwrap();
        assert_eq!(empty.canonical_string(), "m=7;diags=");
        assert_eq!(Dissection::parse("m=7;diags=").unwrap(), empty);
        for m in 3..=7usize {
            for d in enumerate_dissections(m, &sizes(m, 3, m)) {
                assert_eq!(Dissection::parse(&d.canonical_string()).unwrap(), d);
            }
        }
        assert!(Dissection::parse("m=5;diags=(0,2").is_err());
        assert!(Dissection::parse("5;(0,2)").is_err());
        assert!(Dissection::parse("m=4;diags=(0,2),(1,3)").is_err());
    }

    #[test]
    fn colored_counts_small_cases() {
        let g2 = SeedPolynomial::parse("2:2").unwrap();
        assert_eq!(colored_count(4, &g2), nat("8"));
        let g7 = SeedPolynomial::parse("2:7").unwrap();
        assert_eq!(colored_count(3, &g7), nat("7"));
        let mixed = SeedPolynomial::parse("2:1,3:1").unwrap();
        assert_eq!(colored_count(5, &mixed), nat("10"));
        assert_eq!(colored_count(2, &mixed), nat("1"));
    }

    #[test]
    fn colored_count_equals_explicit_coloring_enumeration() {
        let seeds = ["2:1", "2:2", "3:2", "2:2,3:1", "2:1,3:3", "2:1,4:2"];
        for text in seeds {
            let g = SeedPolynomial::parse(text).unwrap();
            for m in 2..=7usize {
                let by_weight = colored_count(m, &g);
                let mut explicit = 0usize;
                for d in enumerate_dissections(m, &g.piece_sizes()) {
                    explicit += colored_variants(&d, &g).len();
                }
                assert_eq!(by_weight, Nat::from(explicit), "seed {text}, m = {m}");
            }
        }
    }

    #[test]
    fn colored_variants_enumerate_the_color_box() {
        let d = Dissection::new(4, &[(0, 2)]).unwrap();
        let g = SeedPolynomial::parse("2:2").unwrap();
        let variants = colored_variants(&d, &g);
        assert_eq!(variants.len(), 4);
        let combos: Vec<&[u64]> = variants.iter().map(|v| v.colors()).collect();
        assert_eq!(combos, vec![&[1, 1][..], &[1, 2], &[2, 1], &[2, 2]]);
        // A face size the seed cannot color yields no variants.
        let g3 = SeedPolynomial::parse("3:1").unwrap();
        assert!(colored_variants(&d, &g3).is_empty());
    }
}
