//! Deterministic SVG output for curves, polyominoes and tilings.
//!
//! Coordinates are lattice points multiplied by an integer scale, so every
//! number in the output is an integer. The y axis is flipped once by the
//! root group, which keeps lattice +y pointing up on screen.

use std::fmt::{self, Write as _};

use crate::curve::Curve;
use crate::error::{domain, Error, Result};
use crate::path::{trace, Point};
use crate::snowflake::Polyomino;
use crate::tiling::TilingCertificate;

const STROKE: &str = "#1f3a68";
const FILL: &str = "#9fb8dd";
const TONES: [&str; 2] = ["#9fb8dd", "#e0b36a"];

/// An SVG 1.1 document in lattice units times `scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgDocument {
    pub scale: i64,
    /// `(min, max)` lattice corners covered, margin included.
    pub bounds: (Point, Point),
    pub elements: Vec<String>,
}

impl SvgDocument {
    fn new(scale: i64, lo: Point, hi: Point) -> Self {
        let margin = Point::new(1, 1);
        Self {
            scale,
            bounds: (lo - margin, hi + margin),
            elements: Vec::new(),
        }
    }

    pub fn width(&self) -> i64 {
        (self.bounds.1.x - self.bounds.0.x) * self.scale
    }

    pub fn height(&self) -> i64 {
        (self.bounds.1.y - self.bounds.0.y) * self.scale
    }

    /// `(min_x, min_y, width, height)` in the flipped frame.
    pub fn view_box(&self) -> (i64, i64, i64, i64) {
        (
            self.bounds.0.x * self.scale,
            -self.bounds.1.y * self.scale,
            self.width(),
            self.height(),
        )
    }

    fn points_attr(&self, pts: &[Point]) -> String {
        let mut s = String::new();
        for (k, p) in pts.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{},{}", p.x * self.scale, p.y * self.scale);
        }
        s
    }
}

impl fmt::Display for SvgDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y, w, h) = self.view_box();
        writeln!(f, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
        writeln!(
            f,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="{x} {y} {w} {h}">"#
        )?;
        writeln!(f, r#"<g transform="scale(1,-1)">"#)?;
        for e in &self.elements {
            writeln!(f, "{e}")?;
        }
        writeln!(f, "</g>")?;
        writeln!(f, "</svg>")
    }
}

fn check_scale(scale: i64) -> Result<()> {
    if scale < 1 {
        return domain(format!("scale must be >= 1, got {scale}"));
    }
    Ok(())
}

/// One polyline through every point of the curve.
pub fn render_curve(c: &Curve, scale: i64) -> Result<SvgDocument> {
    check_scale(scale)?;
    let (lo, hi) = if c.points().is_empty() {
        (Point::ORIGIN, Point::ORIGIN)
    } else {
        c.path.bounds()
    };
    let mut doc = SvgDocument::new(scale, lo, hi);
    if c.points().len() >= 2 {
        let pts = doc.points_attr(c.points());
        doc.elements.push(format!(
            r#"<polyline points="{pts}" fill="none" stroke="{STROKE}" stroke-width="{}" stroke-linejoin="round"/>"#,
            (scale / 4).max(1)
        ));
    }
    Ok(doc)
}

/// Corners of the boundary polygon, with points inside straight runs removed.
pub fn polygon_vertices(p: &Polyomino) -> Vec<Point> {
    let pts = &trace(&p.boundary, p.start).points;
    let ring = &pts[..pts.len() - 1];
    let len = ring.len();
    (0..len)
        .filter(|&k| {
            let prev = ring[(k + len - 1) % len];
            let next = ring[(k + 1) % len];
            (ring[k] - prev) != (next - ring[k])
        })
        .map(|k| ring[k])
        .collect()
}

/// The filled boundary polygon, optionally over a grid of its unit cells.
pub fn render_polyomino(p: &Polyomino, scale: i64, cell_grid: bool) -> Result<SvgDocument> {
    check_scale(scale)?;
    let (lo, hi) = p.bounds();
    let mut doc = SvgDocument::new(scale, lo, hi);
    let pts = doc.points_attr(&polygon_vertices(p));
    doc.elements.push(format!(
        r#"<polygon points="{pts}" fill="{FILL}" stroke="{STROKE}" stroke-width="{}"/>"#,
        (scale / 4).max(1)
    ));
    if cell_grid {
        let mut grid = String::from(r#"<g fill="none" stroke="white" stroke-width="1">"#);
        for c in &p.cells {
            let _ = write!(
                grid,
                r#"<rect x="{}" y="{}" width="{scale}" height="{scale}"/>"#,
                c.x * scale,
                c.y * scale
            );
        }
        grid.push_str("</g>");
        doc.elements.push(grid);
    }
    Ok(doc)
}

/// Lattice offsets `(m, n)` for `copies` translated tiles: the smallest
/// centered square block holding them, read row by row.
pub fn copy_offsets(copies: usize) -> Vec<(i64, i64)> {
    let mut side = 1i64;
    while ((side * side) as usize) < copies {
        side += 1;
    }
    let start = -(side - 1) / 2;
    let mut out = Vec::with_capacity(copies);
    for n in start..start + side {
        for m in start..start + side {
            if out.len() < copies {
                out.push((m, n));
            }
        }
    }
    out
}

/// Translated copies of the tile at lattice points `m·u + n·v`, with two
/// fill tones alternating by the parity of `m + n`.
pub fn render_tiling(
    p: &Polyomino,
    cert: &TilingCertificate,
    copies: usize,
    scale: i64,
) -> Result<SvgDocument> {
    check_scale(scale)?;
    if !cert.verified() {
        return Err(Error::Unverified(format!(
            "refusing to draw the lattice {} {}: window coverage failed",
            cert.u, cert.v
        )));
    }
    let offsets = copy_offsets(copies);
    let (plo, phi) = p.bounds();
    let (mut lo, mut hi) = (plo, phi);
    let shifts: Vec<Point> = offsets
        .iter()
        .map(|&(m, n)| Point::new(m * cert.u.x + n * cert.v.x, m * cert.u.y + n * cert.v.y))
        .collect();
    for t in &shifts {
        lo = Point::new(lo.x.min(plo.x + t.x), lo.y.min(plo.y + t.y));
        hi = Point::new(hi.x.max(phi.x + t.x), hi.y.max(phi.y + t.y));
    }
    let mut doc = SvgDocument::new(scale, lo, hi);
    let pts = doc.points_attr(&polygon_vertices(p));
    for (&(m, n), t) in offsets.iter().zip(&shifts) {
        let tone = TONES[(m + n).rem_euclid(2) as usize];
        doc.elements.push(format!(
            r#"<g transform="translate({},{})"><polygon points="{pts}" fill="{tone}" stroke="{STROKE}" stroke-width="1"/></g>"#,
            t.x * scale,
            t.y * scale
        ));
    }
    Ok(doc)
}

/// `<kind>_<i>_<n>.svg`
pub fn file_name(kind: &str, i: u64, n: u32) -> String {
    format!("{kind}_{i}_{n}.svg")
}
