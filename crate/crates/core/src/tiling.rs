//! Finite verification of tilings by translation.
//!
//! A square factorization `A·B·hat(A)·hat(B)` of a boundary suggests a
//! translation lattice; the lattice is accepted only after translated copies
//! cover a window around the tile exactly once.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::Point;
use crate::snowflake::{bn_square_factorizations, BnFactorization, Polyomino};

/// Cells `x0 <= x < x0 + width`, `y0 <= y < y0 + height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Window {
    pub x0: i64,
    pub y0: i64,
    pub width: i64,
    pub height: i64,
}

impl Window {
    pub fn new(x0: i64, y0: i64, width: i64, height: i64) -> Self {
        Self {
            x0,
            y0,
            width,
            height,
        }
    }

    /// A square window of side `3 × max(width, height)` of the tile's bounding
    /// box, centered on it.
    pub fn around(p: &Polyomino) -> Self {
        let (lo, hi) = p.bounds();
        let side = (hi.x - lo.x).max(hi.y - lo.y).max(1);
        let cx = (lo.x + hi.x).div_euclid(2);
        let cy = (lo.y + hi.y).div_euclid(2);
        let half = (3 * side) / 2;
        Self::new(cx - half, cy - half, 3 * side, 3 * side)
    }

    pub fn contains(&self, c: Point) -> bool {
        c.x >= self.x0 && c.x < self.x0 + self.width && c.y >= self.y0 && c.y < self.y0 + self.height
    }

    fn index(&self, c: Point) -> usize {
        ((c.y - self.y0) * self.width + (c.x - self.x0)) as usize
    }
}

/// Result of scanning a window for multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub window: Window,
    pub copies: usize,
    pub cells_checked: usize,
    pub exact: bool,
    /// First cell in row-major order whose multiplicity is not 1.
    pub offending_cell: Option<Point>,
    pub offending_multiplicity: Option<u32>,
}

/// Places copies of `p` at every `m·u + n·v` whose bounding box meets the
/// window and counts how often each window cell is covered.
pub fn tile_window(p: &Polyomino, u: Point, v: Point, window: Window) -> Result<CoverageReport> {
    let det = u.cross(v);
    if det == 0 {
        return Err(Error::Degenerate(format!(
            "translation vectors {u} and {v} are linearly dependent"
        )));
    }
    let (lo, hi) = p.bounds();
    // translations t with [lo + t, hi + t] meeting the window
    let tx = (window.x0 - hi.x, window.x0 + window.width - lo.x);
    let ty = (window.y0 - hi.y, window.y0 + window.height - lo.y);
    // lattice coordinates of t = m u + n v: m = t×v / det, n = u×t / det
    let corners = [
        Point::new(tx.0, ty.0),
        Point::new(tx.0, ty.1),
        Point::new(tx.1, ty.0),
        Point::new(tx.1, ty.1),
    ];
    let ms: Vec<f64> = corners.iter().map(|&t| t.cross(v) as f64 / det as f64).collect();
    let ns: Vec<f64> = corners.iter().map(|&t| u.cross(t) as f64 / det as f64).collect();
    let range = |xs: &[f64]| {
        let lo = xs.iter().cloned().fold(f64::INFINITY, f64::min).floor() as i64 - 1;
        let hi = xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max).ceil() as i64 + 1;
        lo..=hi
    };
    let mut grid = vec![0u32; (window.width * window.height) as usize];
    let mut copies = 0;
    for m in range(&ms) {
        for n in range(&ns) {
            let t = Point::new(m * u.x + n * v.x, m * u.y + n * v.y);
            if t.x < tx.0 || t.x > tx.1 || t.y < ty.0 || t.y > ty.1 {
                continue;
            }
            copies += 1;
            for &c in &p.cells {
                let c = c + t;
                if window.contains(c) {
                    grid[window.index(c)] += 1;
                }
            }
        }
    }
    let offending = grid.iter().position(|&k| k != 1);
    Ok(CoverageReport {
        window,
        copies,
        cells_checked: grid.len(),
        exact: offending.is_none(),
        offending_cell: offending.map(|k| {
            let k = k as i64;
            Point::new(window.x0 + k % window.width, window.y0 + k / window.width)
        }),
        offending_multiplicity: offending.map(|k| grid[k]),
    })
}

/// A lattice `{m·u + n·v}` tested against a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TilingCertificate {
    pub factorization: BnFactorization,
    pub u: Point,
    pub v: Point,
    pub window: Window,
    pub coverage: CoverageReport,
}

impl TilingCertificate {
    pub fn verified(&self) -> bool {
        self.coverage.exact
    }

    pub fn determinant(&self) -> i64 {
        self.u.cross(self.v)
    }
}

/// Candidate lattices read off the cut points: `(vec A, vec B)` and
/// `(vec AB, vec B·hat(A))`.
pub fn candidate_vectors(f: &BnFactorization) -> [(Point, Point); 2] {
    let a = f.a.displacement();
    let b = f.b.displacement();
    [(a, b), (a + b, b - a)]
}

/// Tests each candidate lattice of `f` on the default window around `p` and
/// returns the first that covers exactly, or the first failing one.
pub fn certify(p: &Polyomino, f: &BnFactorization) -> Result<TilingCertificate> {
    let window = Window::around(p);
    let mut first_failure = None;
    for (u, v) in candidate_vectors(f) {
        if u.cross(v) == 0 {
            continue;
        }
        let coverage = tile_window(p, u, v, window)?;
        let cert = TilingCertificate {
            factorization: f.clone(),
            u,
            v,
            window,
            coverage,
        };
        if cert.verified() {
            return Ok(cert);
        }
        first_failure.get_or_insert(cert);
    }
    first_failure.ok_or_else(|| {
        Error::Degenerate(format!(
            "every candidate lattice of factorization at rotation {} is degenerate",
            f.rotation
        ))
    })
}

/// The translation vectors of a verified tiling for factorization `f`.
pub fn translation_vectors(p: &Polyomino, f: &BnFactorization) -> Result<(Point, Point)> {
    let cert = certify(p, f)?;
    if !cert.verified() {
        let cell = cert.coverage.offending_cell.expect("failed coverage names a cell");
        return Err(Error::Unverified(format!(
            "no candidate lattice covers the window exactly; first bad cell {cell} (multiplicity {})",
            cert.coverage.offending_multiplicity.unwrap_or_default()
        )));
    }
    Ok((cert.u, cert.v))
}

/// One certificate per square factorization class, in rotation order.
pub fn certificates(p: &Polyomino) -> Result<Vec<TilingCertificate>> {
    bn_square_factorizations(&p.boundary)?
        .iter()
        .map(|f| certify(p, f))
        .collect()
}

/// Number of factorization classes whose lattice verifies.
pub fn distinct_tilings(p: &Polyomino) -> usize {
    certificates(p)
        .map(|cs| cs.iter().filter(|c| c.verified()).count())
        .unwrap_or(0)
}

/// Hermite normal form `[[a, b], [0, c]]` (`a, c > 0`, `0 <= b < c`) of the
/// lattice spanned by `u` and `v`, as rows.
pub fn lattice_hnf(u: Point, v: Point) -> Result<[[i64; 2]; 2]> {
    if u.cross(v) == 0 {
        return Err(Error::Degenerate(format!("{u} and {v} are dependent")));
    }
    let (mut r1, mut r2) = ([u.x, u.y], [v.x, v.y]);
    while r2[0] != 0 {
        let q = r1[0].div_euclid(r2[0]);
        r1 = [r1[0] - q * r2[0], r1[1] - q * r2[1]];
        std::mem::swap(&mut r1, &mut r2);
    }
    if r1[0] < 0 {
        r1 = [-r1[0], -r1[1]];
    }
    if r2[1] < 0 {
        r2[1] = -r2[1];
    }
    r1[1] = r1[1].rem_euclid(r2[1]);
    Ok([r1, r2])
}

/// Whether two bases span different lattices.
pub fn lattices_distinct(a: (Point, Point), b: (Point, Point)) -> Result<bool> {
    Ok(lattice_hnf(a.0, a.1)? != lattice_hnf(b.0, b.1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snowflake::{boundary_word, build_polyomino};

    fn poly(s: &str) -> Polyomino {
        build_polyomino(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn unit_square_grid() {
        let p = poly("0123");
        let r = tile_window(&p, Point::new(1, 0), Point::new(0, 1), Window::new(0, 0, 10, 10)).unwrap();
        assert!(r.exact);
        assert_eq!(r.cells_checked, 100);
        assert_eq!(distinct_tilings(&p), 1);
    }

    #[test]
    fn plus_pentomino_lattice() {
        let p = poly("010303232121");
        let r = tile_window(&p, Point::new(1, 2), Point::new(2, -1), Window::around(&p)).unwrap();
        assert!(r.exact);
        let bad = tile_window(&p, Point::new(1, 0), Point::new(0, 1), Window::around(&p)).unwrap();
        assert!(!bad.exact);
        assert!(bad.offending_multiplicity.unwrap() > 1);
    }

    #[test]
    fn plus_pentomino_two_tilings() {
        let p = build_polyomino(&boundary_word(1, 2).unwrap()).unwrap();
        let certs = certificates(&p).unwrap();
        assert_eq!(certs.len(), 2);
        assert!(certs.iter().all(|c| c.verified() && c.determinant().abs() == 5));
        assert!(lattices_distinct((certs[0].u, certs[0].v), (certs[1].u, certs[1].v)).unwrap());
    }

    #[test]
    fn hnf_invariant_under_basis_change() {
        let (u, v) = (Point::new(2, 1), Point::new(1, -2));
        let h = lattice_hnf(u, v).unwrap();
        assert_eq!(h, lattice_hnf(u + v, v).unwrap());
        assert_eq!(h, lattice_hnf(-v, u + v + v).unwrap());
        assert_eq!(h[0][0] * h[1][1], 5);
        assert!(lattice_hnf(u, u + u).is_err());
    }
}
