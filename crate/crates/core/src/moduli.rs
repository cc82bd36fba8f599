//! Reduction of planar paths to OM-knot data.
//!
//! Under the observation quotient a path collapses onto loops around a
//! minimal cell. What survives is its length measured in Planck units (the
//! scale `N`) and the signed number of turns around the cell (`n`).
//! Coordinates are taken to be in Planck lengths already.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};

pub type Point = [f64; 2];

/// First and last vertices closer than this close the path.
pub const CLOSURE_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PlanarPath {
    vertices: Vec<Point>,
    closed: bool,
}

impl PlanarPath {
    /// A closed path needs three vertices; consecutive vertices must differ.
    /// For closed paths the closing edge is implicit and the last vertex must
    /// not repeat the first.
    pub fn new(vertices: Vec<Point>, closed: bool) -> Result<Self> {
        if closed && vertices.len() < 3 {
            return Err(Error::invalid(format!(
                "a closed path needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().flatten().any(|c| !c.is_finite()) {
            return Err(Error::invalid("path coordinates must be finite"));
        }
        if let Some(i) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "vertices {} and {} coincide",
                i,
                i + 1
            )));
        }
        if closed && vertices.first() == vertices.last() {
            return Err(Error::invalid("closing vertex repeated; it is implicit"));
        }
        Ok(PlanarPath { vertices, closed })
    }

    /// Builds a path from a raw vertex sequence, treating it as closed when
    /// the endpoints agree within [`CLOSURE_EPSILON`] (the duplicate endpoint
    /// is dropped).
    pub fn from_points(mut points: Vec<Point>) -> Result<Self> {
        let closed = points.len() >= 2 && {
            let (a, b) = (points[0], points[points.len() - 1]);
            libm::hypot(a[0] - b[0], a[1] - b[1]) <= CLOSURE_EPSILON
        };
        if closed {
            points.pop();
        }
        PlanarPath::new(points, closed)
    }

    /// Regular polygon approximating a circle, counterclockwise.
    pub fn circle(center: Point, radius: f64, segments: usize) -> Result<Self> {
        let points = (0..segments)
            .map(|i| {
                let phi = 2.0 * PI * i as f64 / segments as f64;
                let (s, c) = libm::sincos(phi);
                [center[0] + radius * c, center[1] + radius * s]
            })
            .collect();
        PlanarPath::new(points, true)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PlanarPath {
            vertices,
            closed: self.closed,
        }
    }

    fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let n = self.vertices.len();
        let count = if self.closed { n } else { n.saturating_sub(1) };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Total polyline length, including the closing edge.
    pub fn length(&self) -> f64 {
        self.edges()
            .map(|(a, b)| libm::hypot(b[0] - a[0], b[1] - a[1]))
            .sum()
    }
}

/// Scale and winding of a reduced loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OMKnotData {
    /// Length in minimal cells, at least 1.
    pub scale: u64,
    /// Signed turns around the cell center; negative for clockwise loops.
    pub winding: i64,
}

/// Signed number of turns of a closed polygon around `center`.
///
/// Sums the signed angle each edge subtends at `center`; for a polygon this
/// is an exact multiple of 2π up to rounding.
pub fn winding_number(path: &PlanarPath, center: Point) -> Result<i64> {
    if !path.is_closed() {
        return Err(Error::invalid("winding number needs a closed path"));
    }
    if let Some(i) = path.vertices().iter().position(|v| *v == center) {
        return Err(Error::Degenerate(format!("vertex {i} lies on the center")));
    }
    let mut total = 0.0;
    for (a, b) in path.edges() {
        let (ax, ay) = (a[0] - center[0], a[1] - center[1]);
        let (bx, by) = (b[0] - center[0], b[1] - center[1]);
        let cross = ax * by - ay * bx;
        let dot = ax * bx + ay * by;
        if cross == 0.0 && dot < 0.0 {
            return Err(Error::Degenerate(
                "an edge passes through the center".into(),
            ));
        }
        total += libm::atan2(cross, dot);
    }
    Ok(libm::round(total / (2.0 * PI)) as i64)
}

/// Reduces a closed path to `(N, n)`: `N = max(1, round(length))` and
/// `n` its winding around `center`. `cell_radius` is the minimal cell size
/// and must be positive.
pub fn reduce_to_om_knot(path: &PlanarPath, center: Point, cell_radius: f64) -> Result<OMKnotData> {
    if !(cell_radius > 0.0) {
        return Err(Error::invalid(format!(
            "cell radius must be positive, got {cell_radius}"
        )));
    }
    let winding = winding_number(path, center)?;
    let scale = (libm::round(path.length()) as u64).max(1);
    Ok(OMKnotData { scale, winding })
}

/// Parses the path format: one `x y` pair per line, `#` comments and blank
/// lines ignored. Closure is inferred from the endpoints.
pub fn parse_path(text: &str) -> Result<PlanarPath> {
    let mut points = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message| Error::Parse {
            line: lineno + 1,
            message,
        };
        let mut fields = line.split_whitespace();
        let (Some(x), Some(y), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected two coordinates, got {line:?}")));
        };
        let x: f64 = x.parse().map_err(|_| err(format!("bad x coordinate {x:?}")))?;
        let y: f64 = y.parse().map_err(|_| err(format!("bad y coordinate {y:?}")))?;
        points.push([x, y]);
    }
    PlanarPath::from_points(points)
}
