//! Intersection graphs of disks and axis-aligned rectangles.
//!
//! Shapes are closed sets: tangent disks and rectangles sharing a boundary
//! point intersect. All tests run in exact integer arithmetic on decimal
//! coordinates.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::decimal::{small, Decimal};
use crate::graph::{GraphError, VertexSet, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("expected {expected} weights, got {got}")]
    WeightCountMismatch { expected: usize, got: usize },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Disk {
    pub cx: Decimal,
    pub cy: Decimal,
    pub r: Decimal,
}

impl Disk {
    pub fn new(cx: Decimal, cy: Decimal, r: Decimal) -> Result<Self, GeometryError> {
        if !r.is_positive() {
            return Err(GeometryError::InvalidShape(format!(
                "radius {r} is not positive"
            )));
        }
        Ok(Self { cx, cy, r })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x1: Decimal,
    pub y1: Decimal,
    pub x2: Decimal,
    pub y2: Decimal,
}

impl Rect {
    pub fn new(x1: Decimal, y1: Decimal, x2: Decimal, y2: Decimal) -> Result<Self, GeometryError> {
        if x1 >= x2 || y1 >= y2 {
            return Err(GeometryError::InvalidShape(format!(
                "rectangle corners ({x1}, {y1}) and ({x2}, {y2}) are not ordered"
            )));
        }
        Ok(Self { x1, y1, x2, y2 })
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        self.x1 <= other.x2 && other.x1 <= self.x2 && self.y1 <= other.y2 && other.y1 <= self.y2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    Disks,
    Rects,
}

impl ShapeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Disks => "disks",
            Self::Rects => "rects",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shapes {
    Disks(Vec<Disk>),
    Rects(Vec<Rect>),
}

/// A homogeneous list of shapes with one positive weight per shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShapeSet {
    shapes: Shapes,
    weights: Vec<u64>,
}

impl ShapeSet {
    pub fn new(shapes: Shapes, weights: Vec<u64>) -> Result<Self, GeometryError> {
        let len = match &shapes {
            Shapes::Disks(d) => d.len(),
            Shapes::Rects(r) => r.len(),
        };
        if weights.len() != len {
            return Err(GeometryError::WeightCountMismatch {
                expected: len,
                got: weights.len(),
            });
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(GeometryError::InvalidShape(format!(
                "shape {i} has weight 0"
            )));
        }
        Ok(Self { shapes, weights })
    }

    pub fn unweighted(shapes: Shapes) -> Self {
        let len = match &shapes {
            Shapes::Disks(d) => d.len(),
            Shapes::Rects(r) => r.len(),
        };
        Self {
            shapes,
            weights: vec![1; len],
        }
    }

    pub fn kind(&self) -> ShapeKind {
        match self.shapes {
            Shapes::Disks(_) => ShapeKind::Disks,
            Shapes::Rects(_) => ShapeKind::Rects,
        }
    }

    pub fn shapes(&self) -> &Shapes {
        &self.shapes
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// Closed disk intersection: `|c1 - c2|^2 <= (r1 + r2)^2`, exactly.
pub fn disks_intersect(a: &Disk, b: &Disk) -> bool {
    let scale = [&a.cx, &a.cy, &a.r, &b.cx, &b.cy, &b.r]
        .iter()
        .map(|d| d.scale())
        .max()
        .unwrap_or(0);
    let sa = ScaledDisk::new(a, scale);
    let sb = ScaledDisk::new(b, scale);
    sa.intersects(&sb)
}

struct ScaledDisk {
    cx: BigInt,
    cy: BigInt,
    r: BigInt,
}

impl ScaledDisk {
    fn new(d: &Disk, scale: u32) -> Self {
        Self {
            cx: d.cx.scaled_to(scale),
            cy: d.cy.scaled_to(scale),
            r: d.r.scaled_to(scale),
        }
    }

    fn intersects(&self, other: &Self) -> bool {
        let dx = &self.cx - &other.cx;
        let dy = &self.cy - &other.cy;
        let rs = &self.r + &other.r;
        &dx * &dx + &dy * &dy <= &rs * &rs
    }
}

/// Same test on coordinates known to be below `2^60` in magnitude.
fn small_disks_intersect(a: [i128; 3], b: [i128; 3]) -> bool {
    let (dx, dy, rs) = (a[0] - b[0], a[1] - b[1], a[2] + b[2]);
    dx * dx + dy * dy <= rs * rs
}

/// One vertex per shape, an edge for every intersecting pair. Returns the
/// graph and the vertex -> shape index map (the identity here).
pub fn intersection_graph(set: &ShapeSet) -> Result<(WeightedGraph, Vec<usize>), GeometryError> {
    let n = set.len();
    let mut edges = Vec::new();
    match &set.shapes {
        Shapes::Disks(disks) => {
            let scale = disks
                .iter()
                .flat_map(|d| [d.cx.scale(), d.cy.scale(), d.r.scale()])
                .max()
                .unwrap_or(0);
            let scaled: Vec<ScaledDisk> = disks.iter().map(|d| ScaledDisk::new(d, scale)).collect();
            let fast: Option<Vec<[i128; 3]>> = scaled
                .iter()
                .map(|d| Some([small(&d.cx)?, small(&d.cy)?, small(&d.r)?]))
                .collect();
            for i in 0..n {
                for j in i + 1..n {
                    let hit = match &fast {
                        Some(f) => small_disks_intersect(f[i], f[j]),
                        None => scaled[i].intersects(&scaled[j]),
                    };
                    if hit {
                        edges.push((i, j));
                    }
                }
            }
        }
        Shapes::Rects(rects) => {
            for i in 0..n {
                for j in i + 1..n {
                    if rects[i].intersects(&rects[j]) {
                        edges.push((i, j));
                    }
                }
            }
        }
    }
    let graph = WeightedGraph::new(n, set.weights.clone(), edges)?;
    Ok((graph, (0..n).collect()))
}

/// The shapes behind `subset` (vertex ids of the intersection graph), in
/// the order of `subset.members()`.
pub fn restrict_shapes(
    set: &ShapeSet,
    subset: &VertexSet,
    shape_map: &[usize],
) -> Result<ShapeSet, GeometryError> {
    let mut indices = Vec::with_capacity(subset.len());
    for &v in subset.members() {
        let &i = shape_map.get(v).ok_or(GraphError::InvalidSet {
            vertex: v,
            n: shape_map.len(),
        })?;
        if i >= set.len() {
            return Err(GraphError::InvalidSet {
                vertex: v,
                n: set.len(),
            }
            .into());
        }
        indices.push(i);
    }
    let weights = indices.iter().map(|&i| set.weights[i]).collect();
    let shapes = match &set.shapes {
        Shapes::Disks(d) => Shapes::Disks(indices.iter().map(|&i| d[i].clone()).collect()),
        Shapes::Rects(r) => Shapes::Rects(indices.iter().map(|&i| r[i].clone()).collect()),
    };
    Ok(ShapeSet { shapes, weights })
}

/// Parameters for [`generate_instance`]. Lengths are in units of
/// `10^-GRID_DIGITS`, so every generated coordinate is an exact decimal.
#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub kind: ShapeKind,
    pub n: usize,
    /// Side length of the square region holding centers / lower corners.
    pub region: f64,
    /// Radius (disks) or side length (rects) range.
    pub min_size: f64,
    pub max_size: f64,
    /// Weights are drawn uniformly from `1..=max_weight`.
    pub max_weight: u64,
    pub seed: u64,
}

pub const GRID_DIGITS: u32 = 3;

impl Default for GenParams {
    fn default() -> Self {
        Self {
            kind: ShapeKind::Disks,
            n: 100,
            region: 100.0,
            min_size: 1.0,
            max_size: 5.0,
            max_weight: 1,
            seed: 0,
        }
    }
}

/// Random shapes, deterministic in `params.seed`.
pub fn generate_instance(params: &GenParams) -> Result<ShapeSet, GeometryError> {
    let grid = 10f64.powi(GRID_DIGITS as i32);
    let to_units = |x: f64| (x * grid).round();
    let region = to_units(params.region);
    let (lo, hi) = (to_units(params.min_size), to_units(params.max_size));
    let finite = [region, lo, hi].iter().all(|v| v.is_finite() && *v < 1e15);
    if !finite || region < 0.0 || lo < 1.0 || lo > hi || params.max_weight == 0 {
        return Err(GeometryError::InvalidParams(format!(
            "region {}, size range [{}, {}], max weight {}",
            params.region, params.min_size, params.max_size, params.max_weight
        )));
    }
    let (region, lo, hi) = (region as i64, lo as i64, hi as i64);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let coord = |v: i64| Decimal::new(v, GRID_DIGITS);
    let mut weights = Vec::with_capacity(params.n);
    let shapes = match params.kind {
        ShapeKind::Disks => {
            let mut disks = Vec::with_capacity(params.n);
            for _ in 0..params.n {
                let (x, y) = (rng.gen_range(0..=region), rng.gen_range(0..=region));
                let r = rng.gen_range(lo..=hi);
                weights.push(rng.gen_range(1..=params.max_weight));
                disks.push(Disk::new(coord(x), coord(y), coord(r))?);
            }
            Shapes::Disks(disks)
        }
        ShapeKind::Rects => {
            let mut rects = Vec::with_capacity(params.n);
            for _ in 0..params.n {
                let (x, y) = (rng.gen_range(0..=region), rng.gen_range(0..=region));
                let (w, h) = (rng.gen_range(lo..=hi), rng.gen_range(lo..=hi));
                weights.push(rng.gen_range(1..=params.max_weight));
                rects.push(Rect::new(coord(x), coord(y), coord(x + w), coord(y + h))?);
            }
            Shapes::Rects(rects)
        }
    };
    ShapeSet::new(shapes, weights)
}
