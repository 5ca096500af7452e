//! Words over the Freeman alphabet `{0,1,2,3}` and the lattice paths they
//! encode.
//!
//! Symbol `k` is the unit step `(1,0)`, `(0,1)`, `(-1,0)`, `(0,-1)` for
//! `k = 0, 1, 2, 3`. All symbol arithmetic is mod 4.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::word::{is_palindrome, BinaryWord};

/// A lattice point (or integer vector).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Unit step of a Freeman symbol.
    pub fn step(symbol: u8) -> Self {
        match symbol & 3 {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    /// Cross product `self.x * other.y - self.y * other.x`.
    pub fn cross(self, other: Self) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> i64 {
        self.x * self.x + self.y * self.y
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

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(serializer)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A word over `{0,1,2,3}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord(Vec<u8>);

impl PathWord {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(pos) = symbols.iter().position(|&s| s > 3) {
            return Err(Error::InvalidSymbol {
                symbol: char::from_digit(symbols[pos] as u32, 36).unwrap_or('?'),
                position: pos,
                alphabet: "0123",
            });
        }
        Ok(Self(symbols))
    }

    pub(crate) fn from_vec_unchecked(symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s <= 3));
        Self(symbols)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn repeat(&self, times: usize) -> Self {
        Self(self.0.repeat(times))
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Cyclic rotation: the word read from position `offset`.
    pub fn rotate(&self, offset: usize) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let k = offset % self.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Self(v)
    }

    /// Adds `k` to every symbol (rotation of the path by `k` quarter turns).
    pub fn turn(&self, k: u8) -> Self {
        Self(self.0.iter().map(|&s| (s + k) & 3).collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> Self {
        Self(self.0[start..end].to_vec())
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.0)
    }

    /// Net displacement of the path.
    pub fn displacement(&self) -> Point {
        self.0
            .iter()
            .fold(Point::ORIGIN, |acc, &s| acc + Point::step(s))
    }

    pub fn count(&self, symbol: u8) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const DIGITS: [&str; 4] = ["0", "1", "2", "3"];
        for &s in &self.0 {
            f.write_str(DIGITS[s as usize])?;
        }
        Ok(())
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                symbol => Err(Error::InvalidSymbol {
                    symbol,
                    position,
                    alphabet: "0123",
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl Serialize for PathWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Rewrites a binary word over `{0, 2}` with `0 -> 2`, `1 -> 0`.
pub fn recode_binary(w: &BinaryWord) -> PathWord {
    PathWord(
        w.symbols()
            .iter()
            .map(|&s| if s == 0 { 2 } else { 0 })
            .collect(),
    )
}

fn check_symbol(alpha: u8) -> Result<()> {
    if alpha > 3 {
        return domain(format!("alpha must be in {{0,1,2,3}}, got {alpha}"));
    }
    Ok(())
}

/// Running sums `alpha, alpha+w_1, ..., alpha+w_1+...+w_n` (mod 4).
pub fn sigma(alpha: u8, w: &PathWord) -> Result<PathWord> {
    check_symbol(alpha)?;
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut acc = alpha;
    out.push(acc);
    for &s in &w.0 {
        acc = (acc + s) & 3;
        out.push(acc);
    }
    Ok(PathWord(out))
}

/// Like [`sigma`] without the final running sum; `|output| = |w|`.
pub fn sigma_circ(alpha: u8, w: &PathWord) -> Result<PathWord> {
    let mut out = sigma(alpha, w)?;
    out.0.pop();
    if w.is_empty() {
        out.0.clear();
    }
    Ok(out)
}

/// Successive differences `w_{k+1} - w_k` (mod 4).
pub fn delta(w: &PathWord) -> Result<PathWord> {
    if w.is_empty() {
        return domain("delta of the empty word is undefined");
    }
    Ok(PathWord(
        w.0.windows(2).map(|p| (p[1] + 4 - p[0]) & 3).collect(),
    ))
}

/// `0 -> 0, 1 -> 3, 2 -> 2, 3 -> 1`: reflection across the horizontal axis.
pub fn bar(w: &PathWord) -> PathWord {
    PathWord(w.0.iter().map(|&s| (4 - s) & 3).collect())
}

/// The same path travelled backwards: reverse, then add 2 to every symbol.
pub fn hat(w: &PathWord) -> PathWord {
    PathWord(w.0.iter().rev().map(|&s| (s + 2) & 3).collect())
}

/// `|w|_0 = |w|_2` and `|w|_1 = |w|_3`.
pub fn is_closed(w: &PathWord) -> bool {
    let mut counts = [0usize; 4];
    for &s in &w.0 {
        counts[s as usize] += 1;
    }
    counts[0] == counts[2] && counts[1] == counts[3]
}

/// True iff the traced path visits no vertex twice. A closed word of length
/// at least 4 may return to its starting vertex at the very end; the
/// degenerate closed words of length 2 (`"02"`, `"13"`, ...) are not simple.
pub fn is_simple(w: &PathWord) -> bool {
    let closed = is_closed(w);
    let mut seen = HashSet::with_capacity(w.len() + 1);
    let mut p = Point::ORIGIN;
    seen.insert(p);
    let last = w.len();
    for (k, &s) in w.0.iter().enumerate() {
        p = p + Point::step(s);
        if k + 1 == last && closed && last >= 4 && p == Point::ORIGIN {
            continue;
        }
        if !seen.insert(p) {
            return false;
        }
    }
    true
}

/// Closed and simple: the boundary of a polyomino.
pub fn is_boundary_word(w: &PathWord) -> bool {
    !w.is_empty() && is_closed(w) && is_simple(w)
}

/// `bar(w) = reverse(w)`.
pub fn is_antipalindrome(w: &PathWord) -> bool {
    let n = w.len();
    (0..n).all(|k| (4 - w.0[k]) & 3 == w.0[n - 1 - k])
}

/// A sequence of lattice points, consecutive points one unit step apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    pub points: Vec<Point>,
}

impl LatticePath {
    pub fn start(&self) -> Point {
        self.points[0]
    }

    pub fn end(&self) -> Point {
        *self.points.last().expect("a lattice path has at least one point")
    }

    /// `(min, max)` corners of the bounding box.
    pub fn bounds(&self) -> (Point, Point) {
        let mut lo = self.points[0];
        let mut hi = lo;
        for p in &self.points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.points.len()))?;
        for p in &self.points {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

/// Cumulative positions of the path starting at `origin`.
pub fn trace(w: &PathWord, origin: Point) -> LatticePath {
    let mut points = Vec::with_capacity(w.len() + 1);
    let mut p = origin;
    points.push(p);
    for &s in &w.0 {
        p = p + Point::step(s);
        points.push(p);
    }
    LatticePath { points }
}

/// Twice the signed area enclosed by a closed path (positive when
/// counterclockwise).
pub fn signed_area2(path: &LatticePath) -> i64 {
    path.points
        .windows(2)
        .map(|e| e[0].cross(e[1]))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_rejects_out_of_alphabet() {
        assert!(matches!(
            "0124".parse::<PathWord>(),
            Err(Error::InvalidSymbol { symbol: '4', position: 3, .. })
        ));
        assert!(PathWord::new(vec![0, 5]).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(0, &PathWord::empty()).unwrap(), pw("0"));
        assert_eq!(sigma(1, &pw("13")).unwrap(), pw("121"));
        assert!(sigma(4, &pw("1")).is_err());
    }

    #[test]
    fn sigma_circ_examples() {
        assert_eq!(sigma_circ(0, &pw("1")).unwrap(), pw("0"));
        assert_eq!(
            sigma_circ(0, &pw("133133133133")).unwrap(),
            pw("010303232121")
        );
        assert_eq!(sigma_circ(2, &PathWord::empty()).unwrap(), PathWord::empty());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&pw("00")).unwrap(), pw("0"));
        assert!(delta(&PathWord::empty()).is_err());
        assert_eq!(delta(&pw("3")).unwrap(), PathWord::empty());
    }

    #[test]
    fn bar_and_hat_examples() {
        assert_eq!(bar(&pw("13")), pw("31"));
        assert_eq!(
            hat(&pw("2122323030103011")),
            pw("3321232121010030")
        );
        assert_eq!(hat(&pw("0")), pw("2"));
        assert!(is_antipalindrome(&pw("13")));
        assert!(is_antipalindrome(&PathWord::empty()));
        assert!(!is_antipalindrome(&pw("11")));
    }

    #[test]
    fn closure_and_simplicity() {
        assert!(is_closed(&pw("2122323030103011")));
        assert!(is_closed(&PathWord::empty()));
        assert!(!is_closed(&pw("01")));
        assert!(!is_simple(&pw("02")));
        assert!(is_closed(&pw("02")));
        assert!(is_simple(&pw("001")));
        assert!(is_boundary_word(&pw("2122323030103011")));
        assert!(is_boundary_word(&pw("0123")));
        assert!(!is_boundary_word(&pw("0202")));
        assert!(!is_boundary_word(&pw("13")));
        assert!(!is_boundary_word(&PathWord::empty()));
    }

    #[test]
    fn trace_examples() {
        let t = trace(&pw("0123"), Point::ORIGIN);
        assert_eq!(
            t.points,
            vec![
                Point::new(0, 0),
                Point::new(1, 0),
                Point::new(1, 1),
                Point::new(0, 1),
                Point::new(0, 0)
            ]
        );
        let t = trace(&pw("010303232121"), Point::ORIGIN);
        assert_eq!(t.points.len(), 13);
        assert_eq!(t.end(), Point::ORIGIN);
        let p = Point::new(3, -7);
        assert_eq!(trace(&PathWord::empty(), p).points, vec![p]);
    }

    #[test]
    fn lattice_path_json() {
        let t = trace(&pw("01"), Point::ORIGIN);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[0,0],[1,0],[1,1]]");
    }
}
