//! The words `q_n^[i]`, generalized Fibonacci snowflake boundaries, polyomino
//! rasterization and square BN-factorizations.

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::path::{
    bar, delta, hat, is_antipalindrome, is_closed, is_simple, recode_binary, sigma_circ,
    signed_area2, trace, PathWord, Point,
};
use crate::word::{fib_word, is_palindrome};

/// The word `q_n^[i]` over `{1, 3}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QWord {
    pub n: u32,
    pub i: u64,
    pub word: PathWord,
}

fn check_family(i: u64) -> Result<()> {
    if i < 1 {
        return domain(format!("family parameter i must be >= 1, got {i}"));
    }
    Ok(())
}

/// Whether `q_m = q_{m-1} q_{m-2}` (no bar on the second factor).
fn plain_concatenation(m: u32, i: u64) -> bool {
    if i % 2 == 0 {
        m % 3 == 1
    } else {
        m % 3 == 0
    }
}

fn q_words_upto(n: u32, i: u64) -> Vec<PathWord> {
    let q2 = if i % 2 == 0 {
        "13".repeat((i / 2) as usize)
    } else {
        let mut s = "13".repeat(((i - 1) / 2) as usize);
        s.push('1');
        s
    };
    let mut qs = vec![
        PathWord::empty(),
        PathWord::from_vec_unchecked(vec![1]),
        q2.parse().expect("q_2 is over {1,3}"),
    ];
    for m in 3..=n {
        let prev = &qs[m as usize - 1];
        let prev2 = &qs[m as usize - 2];
        let tail = if plain_concatenation(m, i) {
            prev2.clone()
        } else {
            bar(prev2)
        };
        let next = prev.concat(&tail);
        qs.push(next);
    }
    qs.truncate(n as usize + 1);
    qs
}

/// `q_0 = ε`, `q_1 = 1`, `q_2 = (13)^{i/2}` (i even) or `(13)^{(i-1)/2}1`
/// (i odd); then `q_n = q_{n-1} q_{n-2}` or `q_{n-1} bar(q_{n-2})` depending
/// on `n mod 3` and the parity of `i`.
pub fn q_word(n: u32, i: u64) -> Result<QWord> {
    check_family(i)?;
    let word = q_words_upto(n, i).pop().expect("at least q_0");
    Ok(QWord { n, i, word })
}

/// Checks `delta(q_n) · alpha_{n-1} = f_{n-1}^[i]` with `f` rewritten by
/// `0 -> 2`, `1 -> 0`, where `alpha_m` is 2 for even `m` and 0 for odd `m`.
pub fn q_limit_check(n: u32, i: u64) -> Result<bool> {
    if n < 2 {
        return domain(format!("q-limit identity needs n >= 2, got {n}"));
    }
    let q = q_word(n, i)?.word;
    let alpha = if (n - 1) % 2 == 0 { 2 } else { 0 };
    let mut lhs = delta(&q)?.symbols().to_vec();
    lhs.push(alpha);
    let rhs = recode_binary(&fib_word(n - 1, i)?);
    Ok(lhs == rhs.symbols())
}

/// Residue class of the index `m` in `q_m`, written `m = 3n + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PalCase {
    ThreeNPlusOne,
    ThreeNPlusTwo,
    ThreeNPlusThree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BodyKind {
    Palindrome,
    Antipalindrome,
}

/// The split `q_m = body · final` and whether it has the expected shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalReport {
    pub m: u32,
    pub i: u64,
    pub case: PalCase,
    /// `n` in `m = 3n + r`.
    pub n: u32,
    pub body: PathWord,
    pub final_symbol: u8,
    pub expected_final: u8,
    pub expected_body: BodyKind,
    pub body_ok: bool,
    pub final_ok: bool,
}

impl PalReport {
    pub fn holds(&self) -> bool {
        self.body_ok && self.final_ok
    }
}

/// `sigma_n`: 1 for even `n`, 3 for odd `n`.
pub fn sigma_symbol(n: u32) -> u8 {
    if n % 2 == 0 {
        1
    } else {
        3
    }
}

/// Expected `(final symbol, body kind)` of `q_{3n+r}`.
///
/// Even `i`: `q_{3n+1} = r·s`, `q_{3n+2} = m·bar(s)`, `q_{3n+3} = p·bar(s)`
/// with `r`, `m` palindromes and `p` an antipalindrome, `s = sigma_n`.
/// Odd `i`: all three end in `s`; `r`, `p` are palindromes and `m` an
/// antipalindrome.
pub fn pal_expectation(case: PalCase, n: u32, i: u64) -> (u8, BodyKind) {
    let s = sigma_symbol(n);
    let sb = 4 - s;
    match (i % 2 == 0, case) {
        (true, PalCase::ThreeNPlusOne) => (s, BodyKind::Palindrome),
        (true, PalCase::ThreeNPlusTwo) => (sb, BodyKind::Palindrome),
        (true, PalCase::ThreeNPlusThree) => (sb, BodyKind::Antipalindrome),
        (false, PalCase::ThreeNPlusOne) => (s, BodyKind::Palindrome),
        (false, PalCase::ThreeNPlusTwo) => (s, BodyKind::Antipalindrome),
        (false, PalCase::ThreeNPlusThree) => (s, BodyKind::Palindrome),
    }
}

/// Splits `q_m^[i]` into body and final symbol and checks the body's
/// (anti)palindromic shape for `m`'s residue class.
pub fn pal_structure(m: u32, i: u64) -> Result<PalReport> {
    if m < 1 {
        return domain("palindromic structure needs m >= 1");
    }
    let q = q_word(m, i)?.word;
    let n = (m - 1) / 3;
    let case = match (m - 1) % 3 {
        0 => PalCase::ThreeNPlusOne,
        1 => PalCase::ThreeNPlusTwo,
        _ => PalCase::ThreeNPlusThree,
    };
    let (expected_final, expected_body) = pal_expectation(case, n, i);
    let len = q.len();
    let body = q.slice(0, len - 1);
    let final_symbol = q.symbols()[len - 1];
    let body_ok = match expected_body {
        BodyKind::Palindrome => is_palindrome(body.symbols()),
        BodyKind::Antipalindrome => is_antipalindrome(&body),
    };
    Ok(PalReport {
        m,
        i,
        case,
        n,
        body,
        final_symbol,
        expected_final,
        expected_body,
        body_ok,
        final_ok: final_symbol == expected_final,
    })
}

/// The `q` word whose fourth power shapes the order-`n` snowflake:
/// `q_{3n}` for even `i`, `q_{3n+2}` for odd `i`.
pub fn snowflake_q(n: u32, i: u64) -> Result<PathWord> {
    if n < 1 {
        return domain(format!("snowflake order must be >= 1, got {n}"));
    }
    let idx = if i % 2 == 0 { 3 * n } else { 3 * n + 2 };
    Ok(q_word(idx, i)?.word)
}

/// `Σ°_0(q^4)` for the snowflake's `q` word.
pub fn boundary_word(n: u32, i: u64) -> Result<PathWord> {
    sigma_circ(0, &snowflake_q(n, i)?.repeat(4))
}

/// The alternative boundary of the same tile, `Σ°_0(q'^4)` with
/// `q' = bar(q_{3n-2}) q_{3n-1}` for even `i` and
/// `q' = bar(q_{3n}) q_{3n+1}` for odd `i`.
pub fn second_boundary(n: u32, i: u64) -> Result<PathWord> {
    check_family(i)?;
    if n < 1 {
        return domain(format!("snowflake order must be >= 1, got {n}"));
    }
    let top = if i % 2 == 0 { 3 * n - 1 } else { 3 * n + 1 };
    let qs = q_words_upto(top, i);
    let q_prime = bar(&qs[top as usize - 1]).concat(&qs[top as usize]);
    sigma_circ(0, &q_prime.repeat(4))
}

/// A polyomino given by its boundary word and its unit cells. A cell is
/// named by its lower-left corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyomino {
    pub boundary: PathWord,
    pub start: Point,
    /// Sorted by `(x, y)`.
    pub cells: Vec<Point>,
    pub counterclockwise: bool,
}

impl Polyomino {
    pub fn area(&self) -> usize {
        self.cells.len()
    }

    pub fn perimeter(&self) -> usize {
        self.boundary.len()
    }

    /// `(min, max)` lattice corners of the bounding box of the boundary.
    pub fn bounds(&self) -> (Point, Point) {
        trace(&self.boundary, self.start).bounds()
    }

    /// `(width, height)` of the bounding box.
    pub fn bounding_box(&self) -> (i64, i64) {
        let (lo, hi) = self.bounds();
        (hi.x - lo.x, hi.y - lo.y)
    }

    /// Cells translated so the minimum coordinates are zero, sorted.
    pub fn normalized_cells(&self) -> Vec<Point> {
        normalize(self.cells.iter().copied())
    }

    /// Equal cell sets up to translation.
    pub fn is_translate_of(&self, other: &Polyomino) -> bool {
        self.normalized_cells() == other.normalized_cells()
    }

    /// Equal cell sets up to a rotation or reflection followed by a translation.
    pub fn is_congruent_to(&self, other: &Polyomino) -> bool {
        let target = other.normalized_cells();
        let isometries: [fn(Point) -> Point; 8] = [
            |p| p,
            |p| Point::new(-p.y, p.x),
            |p| Point::new(-p.x, -p.y),
            |p| Point::new(p.y, -p.x),
            |p| Point::new(-p.x, p.y),
            |p| Point::new(p.x, -p.y),
            |p| Point::new(p.y, p.x),
            |p| Point::new(-p.y, -p.x),
        ];
        isometries
            .iter()
            .any(|f| normalize(self.cells.iter().map(|&c| f(c))) == target)
    }
}

fn normalize(cells: impl Iterator<Item = Point> + Clone) -> Vec<Point> {
    let min_x = cells.clone().map(|p| p.x).min().unwrap_or(0);
    let min_y = cells.clone().map(|p| p.y).min().unwrap_or(0);
    let mut out: Vec<Point> = cells
        .map(|p| Point::new(p.x - min_x, p.y - min_y))
        .collect();
    out.sort_unstable();
    out
}

impl Serialize for Polyomino {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Polyomino", 2)?;
        s.serialize_field("boundary", &self.boundary)?;
        s.serialize_field("cells", &self.cells)?;
        s.end()
    }
}

/// Rasterizes the region enclosed by a boundary word traced from the origin.
///
/// Each half-integer row `y + 1/2` is crossed by the vertical boundary edges;
/// cells lie between alternate crossings (even-odd rule).
pub fn build_polyomino(b: &PathWord) -> Result<Polyomino> {
    if b.is_empty() {
        return Err(Error::NotBoundary("empty word".into()));
    }
    if !is_closed(b) {
        return Err(Error::NotBoundary(format!(
            "not closed: net displacement {}",
            b.displacement()
        )));
    }
    if !is_simple(b) {
        return Err(Error::NotBoundary(
            "self-intersecting: the path revisits a vertex".into(),
        ));
    }
    let path = trace(b, Point::ORIGIN);
    let mut crossings: std::collections::BTreeMap<i64, Vec<i64>> = Default::default();
    for e in path.points.windows(2) {
        if e[0].x == e[1].x {
            crossings
                .entry(e[0].y.min(e[1].y))
                .or_default()
                .push(e[0].x);
        }
    }
    let mut cells = Vec::new();
    for (&y, xs) in crossings.iter_mut() {
        xs.sort_unstable();
        debug_assert!(xs.len() % 2 == 0);
        for pair in xs.chunks_exact(2) {
            cells.extend((pair[0]..pair[1]).map(|x| Point::new(x, y)));
        }
    }
    cells.sort_unstable();
    let area2 = signed_area2(&path);
    debug_assert_eq!(cells.len() as i64 * 2, area2.abs());
    Ok(Polyomino {
        boundary: b.clone(),
        start: Point::ORIGIN,
        cells,
        counterclockwise: area2 > 0,
    })
}

/// A square BN-factorization: the boundary read from `rotation` equals
/// `A · B · hat(A) · hat(B)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BnFactorization {
    pub rotation: usize,
    #[serde(rename = "A")]
    pub a: PathWord,
    #[serde(rename = "B")]
    pub b: PathWord,
}

impl BnFactorization {
    /// Cut positions in the cyclic boundary of length `len`, sorted.
    pub fn cuts(&self, len: usize) -> [usize; 4] {
        let (a, b) = (self.a.len(), self.b.len());
        let mut c = [
            self.rotation % len,
            (self.rotation + a) % len,
            (self.rotation + a + b) % len,
            (self.rotation + 2 * a + b) % len,
        ];
        c.sort_unstable();
        c
    }

    /// The boundary word this factorization spells out.
    pub fn word(&self) -> PathWord {
        self.a
            .concat(&self.b)
            .concat(&hat(&self.a))
            .concat(&hat(&self.b))
    }
}

fn kmp_failure(pattern: &[u8]) -> Vec<usize> {
    let mut fail = vec![0usize; pattern.len()];
    let mut k = 0;
    for q in 1..pattern.len() {
        while k > 0 && pattern[k] != pattern[q] {
            k = fail[k - 1];
        }
        if pattern[k] == pattern[q] {
            k += 1;
        }
        fail[q] = k;
    }
    fail
}

/// Start offsets of `pattern` in `text`.
fn kmp_find_all(text: &[u8], pattern: &[u8], fail: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut k = 0;
    for (q, &c) in text.iter().enumerate() {
        while k > 0 && pattern[k] != c {
            k = fail[k - 1];
        }
        if pattern[k] == c {
            k += 1;
        }
        if k == pattern.len() {
            out.push(q + 1 - k);
            k = fail[k - 1];
        }
    }
    out
}

/// All square BN-factorizations of a boundary word, one per class of
/// identical cut sets, sorted by rotation offset.
///
/// For a rotation `r` put `X = b[r..r+h]`, `Y = b[r+h..r+2h]` with
/// `h = |b|/2`. Then `X·Y = A·B·hat(A)·hat(B)` with `|A| = a` iff
/// `hat(Y) = B·A`, i.e. `hat(Y)` occurs in `X·X` at offset `a`. Every class
/// has a representative with `r < h`, so the search runs KMP once per such
/// rotation.
pub fn bn_square_factorizations(b: &PathWord) -> Result<Vec<BnFactorization>> {
    if !is_closed(b) || !is_simple(b) || b.is_empty() {
        return Err(Error::NotBoundary(
            "factorizations are defined for boundary words".into(),
        ));
    }
    let len = b.len();
    let h = len / 2;
    let doubled = b.concat(b);
    let s = doubled.symbols();
    let mut classes: BTreeSet<[usize; 4]> = BTreeSet::new();
    for r in 0..h {
        let x = &s[r..r + h];
        let hat_y: Vec<u8> = s[r + h..r + len].iter().rev().map(|&c| (c + 2) & 3).collect();
        let mut xx = x.to_vec();
        xx.extend_from_slice(x);
        let fail = kmp_failure(&hat_y);
        for a in kmp_find_all(&xx[..2 * h - 1], &hat_y, &fail) {
            if a == 0 || a >= h {
                continue;
            }
            let mut cuts = [r, r + a, r + h, r + h + a].map(|c| c % len);
            cuts.sort_unstable();
            classes.insert(cuts);
        }
    }
    Ok(classes
        .into_iter()
        .map(|c| {
            let f = BnFactorization {
                rotation: c[0],
                a: PathWord::from_vec_unchecked(s[c[0]..c[1]].to_vec()),
                b: PathWord::from_vec_unchecked(s[c[1]..c[2]].to_vec()),
            };
            debug_assert_eq!(f.word(), b.rotate(c[0]));
            f
        })
        .collect())
}

/// Reference search over every rotation and every cut, comparing whole
/// words. Quadratic in candidates and linear per check; used as an oracle.
pub fn bn_square_factorizations_naive(b: &PathWord) -> Result<Vec<BnFactorization>> {
    if !is_closed(b) || !is_simple(b) || b.is_empty() {
        return Err(Error::NotBoundary(
            "factorizations are defined for boundary words".into(),
        ));
    }
    let len = b.len();
    let h = len / 2;
    let mut classes: BTreeSet<[usize; 4]> = BTreeSet::new();
    for r in 0..len {
        let rotated = b.rotate(r);
        for a in 1..h {
            let f = BnFactorization {
                rotation: r,
                a: rotated.slice(0, a),
                b: rotated.slice(a, h),
            };
            if f.word() == rotated {
                classes.insert(f.cuts(len));
            }
        }
    }
    let s = b.concat(b);
    Ok(classes
        .into_iter()
        .map(|c| BnFactorization {
            rotation: c[0],
            a: s.slice(c[0], c[1]),
            b: s.slice(c[1], c[2]),
        })
        .collect())
}

/// Exactly two square factorization classes.
pub fn is_double_square(b: &PathWord) -> Result<bool> {
    Ok(bn_square_factorizations(b)?.len() == 2)
}

/// Both factors are palindromes.
pub fn factor_palindromicity(f: &BnFactorization) -> bool {
    f.a.is_palindrome() && f.b.is_palindrome()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_word(4, 2).unwrap().word, pw("13313"));
        assert_eq!(q_word(2, 5).unwrap().word, pw("13131"));
        assert_eq!(q_word(0, 3).unwrap().word, PathWord::empty());
        assert!(q_word(3, 0).is_err());
    }

    #[test]
    fn q_limit_examples() {
        assert!(q_limit_check(3, 2).unwrap());
        assert!(q_limit_check(10, 4).unwrap());
        for i in [2, 4, 6] {
            assert!(q_limit_check(2, i).unwrap());
        }
        assert!(q_limit_check(1, 2).is_err());
    }

    #[test]
    fn pal_examples() {
        let r = pal_structure(3, 2).unwrap();
        assert_eq!(r.body, pw("13"));
        assert_eq!(r.final_symbol, 3);
        assert_eq!(r.expected_body, BodyKind::Antipalindrome);
        assert!(r.holds());
        let r = pal_structure(1, 5).unwrap();
        assert_eq!(r.body, PathWord::empty());
        assert_eq!(r.final_symbol, 1);
        assert!(r.holds());
        assert!(pal_structure(8, 3).unwrap().holds());
    }

    #[test]
    fn plus_pentomino() {
        let b = boundary_word(1, 2).unwrap();
        assert_eq!(b, pw("010303232121"));
        let p = build_polyomino(&b).unwrap();
        assert_eq!(p.area(), 5);
        assert_eq!(p.bounding_box(), (3, 3));
    }

    #[test]
    fn unit_square_and_rejections() {
        let p = build_polyomino(&pw("0123")).unwrap();
        assert_eq!(p.cells, vec![Point::new(0, 0)]);
        assert!(p.counterclockwise);
        assert!(matches!(
            build_polyomino(&pw("01")),
            Err(Error::NotBoundary(m)) if m.contains("not closed")
        ));
        assert!(matches!(
            build_polyomino(&pw("0202")),
            Err(Error::NotBoundary(m)) if m.contains("self-intersecting")
        ));
    }

    #[test]
    fn figure_polyomino() {
        let b = pw("2122323030103011");
        let p = build_polyomino(&b).unwrap();
        let area2 = signed_area2(&trace(&b, Point::ORIGIN));
        assert_eq!(p.area() as i64 * 2, area2.abs());
        assert!(!is_double_square(&b).unwrap());
    }

    #[test]
    fn unit_square_factorizations() {
        let f = bn_square_factorizations(&pw("0123")).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!((f[0].a.clone(), f[0].b.clone()), (pw("0"), pw("1")));
        assert!(factor_palindromicity(&f[0]));
    }

    #[test]
    fn snowflake_is_double_square() {
        for (n, i) in [(2, 3), (4, 6), (1, 2)] {
            assert!(is_double_square(&boundary_word(n, i).unwrap()).unwrap());
        }
    }

    #[test]
    fn factorization_json() {
        let f = &bn_square_factorizations(&pw("0123")).unwrap()[0];
        assert_eq!(
            serde_json::to_string(f).unwrap(),
            r#"{"rotation":0,"A":"0","B":"1"}"#
        );
    }
}
