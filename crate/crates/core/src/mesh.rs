//! Planar triangulations with exact rational coordinates.
//!
//! A [`Triangulation`] is validated on construction: it must be a
//! triangulated disk (every edge on one or two triangles, a single simple
//! boundary cycle, Euler characteristic one) with no duplicate vertices and
//! no degenerate or folded triangles. Edges and boundary flags are derived
//! once and the value is immutable afterwards.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::MeshError;

/// Exact rational scalar used for coordinates and matrix entries.
pub type Rational = BigRational;

/// Parses `"n"` or `"n/d"` with `d > 0`. The result is in lowest terms.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        None => BigInt::from_str(text).ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d_text = d.trim();
            if d_text.starts_with(['+', '-']) {
                return None;
            }
            let d = BigInt::from_str(d_text).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
    }
}

/// Canonical text form: `n` for integers, `n/d` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(Rational::from_integer(x.into()), Rational::from_integer(y.into()))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

/// Twice the signed area of the triangle `a, b, c`; positive when
/// counterclockwise.
pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// The homogeneous linear form `a·x + b·y + c·z`.
///
/// Forms built through [`LinearForm::new`] are kept in canonical scale:
/// integer coefficients with no common factor and the first nonzero
/// coefficient positive. Two lines coincide exactly when their canonical
/// forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl LinearForm {
    /// Returns `None` for the zero form.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Option<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return None;
        }
        let coeffs = [a, b, c];
        let lcm = coeffs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let lead_negative = ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.sign() == Sign::Minus);
        if lead_negative {
            content = -content;
        }
        let [a, b, c] = [0, 1, 2].map(|i| Rational::from_integer(&ints[i] / &content));
        Some(Self { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Option<Self> {
        Self::new(
            Rational::from_integer(a.into()),
            Rational::from_integer(b.into()),
            Rational::from_integer(c.into()),
        )
    }

    /// The line through two distinct affine points, homogenized with `z`:
    /// `(p₂−q₂)·x − (p₁−q₁)·y + (p₁q₂ − p₂q₁)·z`.
    pub fn through(p: &Point2, q: &Point2) -> Option<Self> {
        Self::new(&p.y - &q.y, -(&p.x - &q.x), &p.x * &q.y - &p.y * &q.x)
    }

    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        &self.a * x + &self.b * y + &self.c * z
    }

    /// Value at the homogenized point `(p.x, p.y, 1)`.
    pub fn eval_point(&self, p: &Point2) -> Rational {
        self.eval(&p.x, &p.y, &Rational::one())
    }

    pub fn coefficients(&self) -> [&Rational; 3] {
        [&self.a, &self.b, &self.c]
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coeff, var) in self.coefficients().into_iter().zip(["x", "y", "z"]) {
            if coeff.is_zero() {
                continue;
            }
            let sign = if coeff.is_negative() { "-" } else { "+" };
            let abs = coeff.abs();
            let mag = if abs.is_one() { String::new() } else { format_rational(&abs) };
            match (first, coeff.is_negative()) {
                (true, false) => write!(f, "{mag}{var}")?,
                (true, true) => write!(f, "-{mag}{var}")?,
                (false, _) => write!(f, " {sign} {mag}{var}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// An edge of the triangulation: sorted endpoint pair plus the (one or two)
/// adjacent triangles in ascending index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub vertices: [usize; 2],
    pub triangles: Vec<usize>,
}

impl Edge {
    pub fn is_interior(&self) -> bool {
        self.triangles.len() == 2
    }

    pub fn other(&self, v: usize) -> Option<usize> {
        match self.vertices {
            [a, b] if a == v => Some(b),
            [a, b] if b == v => Some(a),
            _ => None,
        }
    }
}

/// On-disk mesh document. Coordinates are rational strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshFile {
    pub vertices: Vec<[String; 2]>,
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    vertices: Vec<Point2>,
    triangles: Vec<[usize; 3]>,
    edges: Vec<Edge>,
    edge_index: HashMap<[usize; 2], usize>,
    boundary_vertex: Vec<bool>,
}

impl Triangulation {
    /// Validates and builds a triangulation. Each triangle's indices are
    /// stored sorted; triangle order is preserved.
    pub fn new(vertices: Vec<Point2>, triangles: Vec<[usize; 3]>) -> Result<Self, MeshError> {
        if triangles.is_empty() {
            return Err(MeshError::Empty);
        }
        let n = vertices.len();
        let mut tris = Vec::with_capacity(triangles.len());
        for (t, tri) in triangles.iter().enumerate() {
            if let Some(&bad) = tri.iter().find(|&&i| i >= n) {
                return Err(MeshError::IndexOutOfRange { triangle: t, index: bad, vertex_count: n });
            }
            let mut sorted = *tri;
            sorted.sort_unstable();
            if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
                return Err(MeshError::DegenerateTriangle { triangle: t, vertices: *tri });
            }
            let [a, b, c] = sorted.map(|i| &vertices[i]);
            if orientation(a, b, c).is_zero() {
                return Err(MeshError::DegenerateTriangle { triangle: t, vertices: *tri });
            }
            tris.push(sorted);
        }

        let mut seen: HashMap<&Point2, usize> = HashMap::new();
        for (i, p) in vertices.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(MeshError::DuplicateVertex { first, second: i });
            }
            seen.insert(p, i);
        }

        let mut seen_tris: HashMap<[usize; 3], usize> = HashMap::new();
        for (t, tri) in tris.iter().enumerate() {
            if let Some(&first) = seen_tris.get(tri) {
                return Err(MeshError::DuplicateTriangle { first, second: t });
            }
            seen_tris.insert(*tri, t);
        }

        let mut edge_map: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
        for (t, &[a, b, c]) in tris.iter().enumerate() {
            for e in [[a, b], [a, c], [b, c]] {
                edge_map.entry(e).or_default().push(t);
            }
        }
        let mut edges = Vec::with_capacity(edge_map.len());
        for (vertices_pair, triangles) in edge_map {
            if triangles.len() > 2 {
                return Err(MeshError::NonManifoldEdge { edge: vertices_pair, triangles });
            }
            edges.push(Edge { vertices: vertices_pair, triangles });
        }

        let mut used = vec![false; n];
        for tri in &tris {
            for &v in tri {
                used[v] = true;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(MeshError::UnusedVertex { vertex: v });
        }

        // Adjacent triangles must lie on opposite sides of their shared edge.
        for e in edges.iter().filter(|e| e.is_interior()) {
            let [p, q] = e.vertices;
            let side = |t: usize| {
                let third = tris[t].iter().copied().find(|&w| w != p && w != q).unwrap();
                orientation(&vertices[p], &vertices[q], &vertices[third]).signum()
            };
            if side(e.triangles[0]) == side(e.triangles[1]) {
                return Err(MeshError::FoldedEdge { edge: e.vertices });
            }
        }

        let boundary_vertex = check_boundary_cycle(n, &edges)?;
        check_vertex_links(n, &tris)?;

        let euler = n as i64 - edges.len() as i64 + tris.len() as i64;
        if euler != 1 {
            return Err(MeshError::EulerCharacteristic {
                vertices: n,
                edges: edges.len(),
                triangles: tris.len(),
            });
        }

        let edge_index = edges.iter().enumerate().map(|(i, e)| (e.vertices, i)).collect();
        Ok(Self { vertices, triangles: tris, edges, edge_index, boundary_vertex })
    }

    pub fn from_mesh_file(file: &MeshFile) -> Result<Self, MeshError> {
        let vertices = file
            .vertices
            .iter()
            .enumerate()
            .map(|(i, [x, y])| {
                let parse = |text: &String| {
                    parse_rational(text)
                        .ok_or_else(|| MeshError::BadRational { vertex: i, text: text.clone() })
                };
                Ok(Point2::new(parse(x)?, parse(y)?))
            })
            .collect::<Result<Vec<_>, MeshError>>()?;
        Self::new(vertices, file.triangles.clone())
    }

    pub fn to_mesh_file(&self) -> MeshFile {
        MeshFile {
            vertices: self.vertices.iter().map(|p| [format_rational(&p.x), format_rational(&p.y)]).collect(),
            triangles: self.triangles.clone(),
        }
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, a: usize, b: usize) -> Option<&Edge> {
        let key = if a < b { [a, b] } else { [b, a] };
        self.edge_index.get(&key).map(|&i| &self.edges[i])
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.boundary_vertex[v]
    }

    pub fn interior_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| !self.boundary_vertex[v]).collect()
    }

    pub fn interior_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| e.is_interior())
    }

    /// Number of interior vertices.
    pub fn f0(&self) -> usize {
        self.boundary_vertex.iter().filter(|b| !**b).count()
    }

    /// Number of interior edges.
    pub fn f1(&self) -> usize {
        self.interior_edges().count()
    }

    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.vertices.contains(&v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident_edges(v).count()
    }

    /// Interior edges whose endpoints are both interior vertices.
    pub fn totally_interior_edges(&self) -> Vec<&Edge> {
        self.interior_edges().filter(|e| e.vertices.iter().all(|&v| !self.boundary_vertex[v])).collect()
    }

    pub fn edge_form(&self, edge: &Edge) -> LinearForm {
        let [p, q] = edge.vertices;
        // Validation rules out coincident endpoints.
        LinearForm::through(&self.vertices[p], &self.vertices[q])
            .expect("validated edges have distinct endpoints")
    }

    /// The distinct lines through `v` spanned by its edges, in canonical
    /// (sorted) order.
    pub fn distinct_edge_forms(&self, v: usize) -> Vec<LinearForm> {
        let mut forms: Vec<LinearForm> = self.incident_edges(v).map(|e| self.edge_form(e)).collect();
        forms.sort();
        forms.dedup();
        forms
    }

    /// Number of distinct slopes among the edges at an interior vertex.
    pub fn slope_count(&self, v: usize) -> Result<usize, MeshError> {
        if v >= self.vertices.len() {
            return Err(MeshError::NoSuchVertex { vertex: v });
        }
        if self.boundary_vertex[v] {
            return Err(MeshError::BoundaryVertex { vertex: v });
        }
        Ok(self.distinct_edge_forms(v).len())
    }

    /// The vertex of triangle `t` not on `edge`.
    pub fn opposite_vertex(&self, t: usize, edge: &Edge) -> usize {
        self.triangles[t]
            .iter()
            .copied()
            .find(|w| !edge.vertices.contains(w))
            .expect("triangle contains the edge")
    }
}

/// Every boundary vertex must carry exactly two boundary edges and the
/// boundary edges must form one cycle. Returns the boundary-vertex flags.
fn check_boundary_cycle(n: usize, edges: &[Edge]) -> Result<Vec<bool>, MeshError> {
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in edges.iter().filter(|e| !e.is_interior()) {
        let [a, b] = e.vertices;
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    if let Some(v) = adjacency.iter().position(|adj| !adj.is_empty() && adj.len() != 2) {
        return Err(MeshError::BoundaryNotSimple { vertex: v });
    }
    let boundary: Vec<bool> = adjacency.iter().map(|adj| !adj.is_empty()).collect();
    let total = boundary.iter().filter(|b| **b).count();
    let start = boundary.iter().position(|b| *b).ok_or(MeshError::NoBoundary)?;

    let (mut prev, mut cur, mut walked) = (start, adjacency[start][0], 1);
    while cur != start {
        let next = if adjacency[cur][0] == prev { adjacency[cur][1] } else { adjacency[cur][0] };
        prev = cur;
        cur = next;
        walked += 1;
    }
    if walked != total {
        return Err(MeshError::DisconnectedBoundary { cycle_len: walked, boundary_vertices: total });
    }
    Ok(boundary)
}

/// The triangles around each vertex must form a single edge-connected fan.
fn check_vertex_links(n: usize, tris: &[[usize; 3]]) -> Result<(), MeshError> {
    let mut star: Vec<Vec<[usize; 2]>> = vec![Vec::new(); n];
    for &[a, b, c] in tris {
        star[a].push([b, c]);
        star[b].push([a, c]);
        star[c].push([a, b]);
    }
    for (v, link) in star.iter().enumerate() {
        // Union-find over link vertices.
        let mut parent: HashMap<usize, usize> = HashMap::new();
        fn find(parent: &mut HashMap<usize, usize>, x: usize) -> usize {
            let p = *parent.entry(x).or_insert(x);
            if p == x {
                return x;
            }
            let root = find(parent, p);
            parent.insert(x, root);
            root
        }
        for &[a, b] in link {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(ra, rb);
            }
        }
        let keys: Vec<usize> = parent.keys().copied().collect();
        let mut roots: Vec<usize> = keys.into_iter().map(|x| find(&mut parent, x)).collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.len() > 1 {
            return Err(MeshError::NonManifoldVertex { vertex: v });
        }
    }
    Ok(())
}

/// Parses and validates mesh-file text.
pub fn parse_mesh(text: &str) -> Result<Triangulation, MeshError> {
    let file: MeshFile = serde_json::from_str(text).map_err(|e| MeshError::Parse(e.to_string()))?;
    Triangulation::from_mesh_file(&file)
}

/// Serializes to the canonical mesh-file text.
pub fn serialize_mesh(mesh: &Triangulation) -> String {
    let file = mesh.to_mesh_file();
    let mut out = String::from("{\n  \"vertices\": [\n");
    let rows: Vec<String> = file.vertices.iter().map(|[x, y]| format!("    [\"{x}\", \"{y}\"]")).collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ],\n  \"triangles\": [\n");
    let rows: Vec<String> = file.triangles.iter().map(|[a, b, c]| format!("    [{a}, {b}, {c}]")).collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}

/// Names of the meshes shipped with the crate.
pub const BUNDLED_MESHES: [&str; 4] = ["triangle", "two_triangles", "morgan_scott", "sy_delta"];

pub fn bundled_mesh_text(name: &str) -> Option<&'static str> {
    match name {
        "triangle" => Some(include_str!("../data/triangle.json")),
        "two_triangles" => Some(include_str!("../data/two_triangles.json")),
        "morgan_scott" => Some(include_str!("../data/morgan_scott.json")),
        "sy_delta" => Some(include_str!("../data/sy_delta.json")),
        _ => None,
    }
}

/// Loads one of the bundled meshes by name.
pub fn bundled_mesh(name: &str) -> Result<Triangulation, MeshError> {
    let text = bundled_mesh_text(name).ok_or_else(|| MeshError::UnknownMesh(name.to_string()))?;
    parse_mesh(text)
}
