//! The odd-even drawing rule and properties of the resulting curves.
//!
//! Reading a binary word left to right, every symbol draws one unit forward;
//! after a `0` the turtle turns left if the symbol's 1-based position is even
//! and right if it is odd.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::path::{LatticePath, Point};
use crate::word::{ab_fib_word, fib_word, phi_drop2, BinaryWord};

/// Axis-aligned direction, numbered like Freeman symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Heading {
    Right = 0,
    Up = 1,
    Left = 2,
    Down = 3,
}

impl Heading {
    fn from_index(k: u8) -> Self {
        match k & 3 {
            0 => Heading::Right,
            1 => Heading::Up,
            2 => Heading::Left,
            _ => Heading::Down,
        }
    }

    pub fn left(self) -> Self {
        Self::from_index(self as u8 + 1)
    }

    pub fn right(self) -> Self {
        Self::from_index(self as u8 + 3)
    }

    pub fn step(self) -> Point {
        Point::step(self as u8)
    }
}

/// Turtle position and heading before reading the symbol at `step_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TurtleState {
    pub position: Point,
    pub heading: Heading,
    pub step_index: usize,
}

impl TurtleState {
    pub fn new(heading: Heading) -> Self {
        Self {
            position: Point::ORIGIN,
            heading,
            step_index: 1,
        }
    }

    /// Reads one symbol: forward, then turn on `0` by position parity.
    pub fn advance(&mut self, symbol: u8) {
        self.position = self.position + self.heading.step();
        if symbol == 0 {
            self.heading = if self.step_index % 2 == 0 {
                self.heading.left()
            } else {
                self.heading.right()
            };
        }
        self.step_index += 1;
    }
}

/// A drawn curve together with the word that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Curve {
    pub path: LatticePath,
    pub source: BinaryWord,
}

impl Curve {
    pub fn points(&self) -> &[Point] {
        &self.path.points
    }

    /// The curve drawn by the source word minus its last symbol.
    ///
    /// The turns of this curve are exactly those encoded by the source's
    /// first `|w| - 1` symbols, so for `f_n^[i]` its turn sequence comes from
    /// the palindrome obtained by deleting the last two symbols.
    pub fn without_final_step(&self) -> Curve {
        let mut path = self.path.clone();
        if path.points.len() > 1 {
            path.points.pop();
        }
        let source = self.source.prefix(self.source.len().saturating_sub(1));
        Curve { path, source }
    }

    pub fn displacement(&self) -> Point {
        self.path.end() - self.path.start()
    }
}

/// Draws `w` with the odd-even rule, starting at the origin.
pub fn odd_even_draw(w: &BinaryWord, initial_heading: Heading) -> Curve {
    odd_even_draw_with_offset(w, initial_heading, 0)
}

/// As [`odd_even_draw`], but the first symbol is taken to sit at position
/// `1 + offset` for the parity rule.
pub fn odd_even_draw_with_offset(w: &BinaryWord, initial_heading: Heading, offset: usize) -> Curve {
    let mut turtle = TurtleState::new(initial_heading);
    turtle.step_index += offset;
    let mut points = Vec::with_capacity(w.len() + 1);
    points.push(turtle.position);
    for &s in w.symbols() {
        turtle.advance(s);
        points.push(turtle.position);
    }
    Curve {
        path: LatticePath { points },
        source: w.clone(),
    }
}

/// The `(n, i)`-th Fibonacci curve, drawn heading up.
pub fn fractal_curve(n: u32, i: u64) -> Result<Curve> {
    Ok(odd_even_draw(&fib_word(n, i)?, Heading::Up))
}

/// Lengths of the maximal straight runs of the curve, in order.
pub fn segments(c: &Curve) -> Vec<usize> {
    let mut out = Vec::new();
    let mut current: Option<(Point, usize)> = None;
    for e in c.points().windows(2) {
        let dir = e[1] - e[0];
        current = match current {
            Some((d, len)) if d == dir => Some((d, len + 1)),
            Some((_, len)) => {
                out.push(len);
                Some((dir, 1))
            }
            None => Some((dir, 1)),
        };
    }
    if let Some((_, len)) = current {
        out.push(len);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryClass {
    LineSymmetric,
    PointSymmetric,
    Asymmetric,
}

/// Which exact symmetries the point multiset of a curve has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Symmetries {
    /// Invariant under a reflection in an axis-parallel or diagonal line.
    pub line: bool,
    /// Invariant under the half turn about the midpoint of the endpoints.
    pub point: bool,
}

const REFLECTIONS: [fn(Point) -> Point; 4] = [
    |p| Point::new(-p.x, p.y),
    |p| Point::new(p.x, -p.y),
    |p| Point::new(p.y, p.x),
    |p| Point::new(-p.y, -p.x),
];

fn invariant_under(sorted: &[Point], map: impl Fn(Point) -> Point) -> bool {
    let mut image: Vec<Point> = sorted.iter().map(|&p| map(p)).collect();
    image.sort_unstable();
    image == sorted
}

pub fn symmetries(c: &Curve) -> Symmetries {
    let mut sorted = c.points().to_vec();
    sorted.sort_unstable();
    let (a, b) = (c.path.start(), c.path.end());
    let point = invariant_under(&sorted, |p| a + b - p);
    let line = REFLECTIONS.iter().any(|r| {
        // candidate isometries: swap the endpoints, or fix both
        let swap = b - r(a);
        let fix = a - r(a);
        invariant_under(&sorted, |p| r(p) + swap)
            || (r(b) + fix == b && invariant_under(&sorted, |p| r(p) + fix))
    });
    Symmetries { line, point }
}

/// Line symmetry takes precedence when both hold.
pub fn symmetry_class(c: &Curve) -> SymmetryClass {
    let s = symmetries(c);
    if s.line {
        SymmetryClass::LineSymmetric
    } else if s.point {
        SymmetryClass::PointSymmetric
    } else {
        SymmetryClass::Asymmetric
    }
}

/// Ratio of endpoint distances `L_n / L_{n-3}` of the `(n, i)` curves.
pub fn scale_factor(i: u64, n: u32) -> Result<f64> {
    if n < 6 {
        return domain(format!("scale factor needs n >= 6, got {n}"));
    }
    let d_n = fractal_curve(n, i)?.displacement().norm_sq();
    let d_m = fractal_curve(n - 3, i)?.displacement().norm_sq();
    if d_n == 0 || d_m == 0 {
        return domain(format!("degenerate curve displacement at i={i}, n={n}"));
    }
    Ok((d_n as f64 / d_m as f64).sqrt())
}

/// Checks `f_n = f_{n-3} f_{n-3} f_{n-6} l_{n-3} l_{n-3}` symbol by symbol,
/// where `l_m` is `f_m` with its last two symbols exchanged.
pub fn decomposition_check(i: u64, n: u32) -> Result<bool> {
    if n < 6 {
        return domain(format!("five-part decomposition needs n >= 6, got {n}"));
    }
    let f = fib_word(n, i)?;
    let f3 = fib_word(n - 3, i)?;
    let f6 = fib_word(n - 6, i)?;
    let l3 = f3.swap_last_two()?;
    debug_assert_eq!(
        l3.prefix(l3.len() - 2),
        phi_drop2(&f3)?,
        "l keeps the prefix of f"
    );
    let rebuilt = f3.concat(&f3).concat(&f6).concat(&l3).concat(&l3);
    Ok(rebuilt == f)
}

/// Odd-even drawing of the `(a, b)`-generalized word `s_n`.
pub fn ab_curve(a: u64, b: u64, n: u32) -> Result<Curve> {
    Ok(odd_even_draw(&ab_fib_word(a, b, n)?, Heading::Up))
}
