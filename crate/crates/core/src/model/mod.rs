//! Domain types shared by every classifier stage, plus structural validation.
//!
//! Types here carry data only. Mathematical checks (badness, slope
//! matching, JSJ minimality) live in their own modules; [`validate_description`]
//! checks only the shape invariants a description must satisfy before any of
//! those run.

mod matrix;
mod rational;
mod slope;
mod validate;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use matrix::{IntMatrix2, MAX_ENTRY};
pub use rational::Rational;
pub use slope::{canonicalize_slope, Slope};
pub use validate::validate_description;

/// A cone point of order `order` (α ≥ 2) with Seifert twist `twist`
/// (0 < β < α, coprime to α).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConePoint {
    pub order: i64,
    pub twist: i64,
}

impl ConePoint {
    pub fn new(order: i64, twist: i64) -> Self {
        ConePoint { order, twist }
    }
}

/// Base 2-orbifold of a Seifert fibration.
///
/// For a non-orientable base `genus` counts cross-caps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbifoldBase {
    pub genus: u32,
    pub orientable: bool,
    pub cone_points: Vec<ConePoint>,
    pub boundary_count: u32,
}

impl OrbifoldBase {
    pub fn sphere(cones: &[(i64, i64)]) -> Self {
        OrbifoldBase::orientable(0, cones, 0)
    }

    pub fn disk(cones: &[(i64, i64)]) -> Self {
        OrbifoldBase::orientable(0, cones, 1)
    }

    pub fn orientable(genus: u32, cones: &[(i64, i64)], boundary_count: u32) -> Self {
        OrbifoldBase {
            genus,
            orientable: true,
            cone_points: cones.iter().map(|&(a, b)| ConePoint::new(a, b)).collect(),
            boundary_count,
        }
    }

    pub fn non_orientable(crosscaps: u32, cones: &[(i64, i64)], boundary_count: u32) -> Self {
        OrbifoldBase {
            genus: crosscaps,
            orientable: false,
            cone_points: cones.iter().map(|&(a, b)| ConePoint::new(a, b)).collect(),
            boundary_count,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_count == 0
    }
}

/// Seifert invariants. `section_obstruction` (b) is present exactly when
/// the base is closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertInvariants {
    pub base: OrbifoldBase,
    pub section_obstruction: Option<i64>,
}

impl SeifertInvariants {
    pub fn closed(base: OrbifoldBase, b: i64) -> Self {
        SeifertInvariants { base, section_obstruction: Some(b) }
    }
}

/// The eight Thurston model geometries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Geometry {
    #[serde(rename = "S3")]
    S3,
    #[serde(rename = "E3")]
    E3,
    #[serde(rename = "H3")]
    H3,
    #[serde(rename = "S2xE")]
    S2xE,
    #[serde(rename = "H2xE")]
    H2xE,
    #[serde(rename = "PSLtilde")]
    PslTilde,
    #[serde(rename = "Nil")]
    Nil,
    #[serde(rename = "Sol")]
    Sol,
}

impl Geometry {
    pub const ALL: [Geometry; 8] = [
        Geometry::S3,
        Geometry::E3,
        Geometry::H3,
        Geometry::S2xE,
        Geometry::H2xE,
        Geometry::PslTilde,
        Geometry::Nil,
        Geometry::Sol,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Geometry::S3 => "S3",
            Geometry::E3 => "E3",
            Geometry::H3 => "H3",
            Geometry::S2xE => "S2xE",
            Geometry::H2xE => "H2xE",
            Geometry::PslTilde => "PSLtilde",
            Geometry::Nil => "Nil",
            Geometry::Sol => "Sol",
        }
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Order of a fundamental group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pi1Order {
    Finite(u64),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SocketRef {
    pub vertex: String,
    pub socket: usize,
}

impl SocketRef {
    pub fn new(vertex: impl Into<String>, socket: usize) -> Self {
        SocketRef { vertex: vertex.into(), socket }
    }
}

impl fmt::Display for SocketRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.vertex, self.socket)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// Seifert piece; one fiber slope per boundary socket, in socket order.
    Seifert {
        base: OrbifoldBase,
        fiber_slopes: Vec<Slope>,
    },
    Hyperbolic {
        cusp_count: u32,
    },
    /// Twisted I-bundle over the Klein bottle. One socket, whose basis is
    /// the eigenbasis of the boundary holonomy.
    KPiece,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JsjVertex {
    pub id: String,
    pub kind: VertexKind,
}

impl JsjVertex {
    pub fn socket_count(&self) -> usize {
        match &self.kind {
            VertexKind::Seifert { base, .. } => base.boundary_count as usize,
            VertexKind::Hyperbolic { cusp_count } => *cusp_count as usize,
            VertexKind::KPiece => 1,
        }
    }
}

/// A JSJ torus. `gluing` maps the socket basis at `end_a` to the socket
/// basis at `end_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JsjEdge {
    pub end_a: SocketRef,
    pub end_b: SocketRef,
    pub gluing: IntMatrix2,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct JsjGraph {
    pub vertices: Vec<JsjVertex>,
    pub edges: Vec<JsjEdge>,
}

impl JsjGraph {
    pub fn vertex(&self, id: &str) -> Option<&JsjVertex> {
        self.vertices.iter().find(|v| v.id == id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PrimeSummand {
    SeifertClosed { inv: SeifertInvariants, pi1_order: Option<Pi1Order> },
    HyperbolicClosed,
    TorusBundle { monodromy: IntMatrix2 },
    DoubleOfK { gluing: IntMatrix2 },
    Jsj { graph: JsjGraph },
    DeclaredGeometric { geometry: Geometry, pi1_order: Option<Pi1Order> },
}

impl PrimeSummand {
    pub fn kind_name(&self) -> &'static str {
        match self {
            PrimeSummand::SeifertClosed { .. } => "seifert_closed",
            PrimeSummand::HyperbolicClosed => "hyperbolic_closed",
            PrimeSummand::TorusBundle { .. } => "torus_bundle",
            PrimeSummand::DoubleOfK { .. } => "double_of_k",
            PrimeSummand::Jsj { .. } => "jsj",
            PrimeSummand::DeclaredGeometric { .. } => "declared_geometric",
        }
    }

    pub fn declared_order(&self) -> Option<Pi1Order> {
        match self {
            PrimeSummand::SeifertClosed { pi1_order, .. } | PrimeSummand::DeclaredGeometric { pi1_order, .. } => {
                *pi1_order
            }
            _ => None,
        }
    }
}

/// Prime decomposition of a closed oriented 3-manifold. Summand order
/// carries no meaning.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ManifoldDescription {
    pub summands: Vec<PrimeSummand>,
}

impl ManifoldDescription {
    pub fn new(summands: Vec<PrimeSummand>) -> Self {
        ManifoldDescription { summands }
    }
}

/// One step of a justification trace.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Justification {
    pub rule: String,
    pub clause: String,
}

impl Justification {
    pub fn new(rule: &str, clause: impl Into<String>) -> Self {
        Justification { rule: rule.to_string(), clause: clause.into() }
    }
}

/// Dimension value with the chain of results that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimResult {
    pub value: u8,
    pub trace: Vec<Justification>,
}

/// A located structural problem in an input description.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagnostic {
    pub path: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    pub message: String,
}

impl Diagnostic {
    pub fn at(path: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic { path: path.into(), line: None, column: None, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            _ if self.path.is_empty() => f.write_str(&self.message),
            _ => write!(f, "{}: {}", self.path, self.message),
        }
    }
}
