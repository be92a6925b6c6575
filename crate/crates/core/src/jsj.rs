//! Validation of a JSJ graph as the minimal torus decomposition of a
//! closed, non-geometric prime manifold, and its dimension.
//!
//! The check is a case analysis over piece types and fiber slopes:
//!
//! * every Seifert piece sits over a bounded base whose interior is
//!   Euclidean or hyperbolic;
//! * Euclidean-base pieces are copies of K (the twisted I-bundle over the
//!   Klein bottle); a T²×I piece means the manifold is a torus bundle;
//! * two copies of K glued together form a geometric manifold;
//! * fibers of adjacent Seifert pieces never match across a torus, and a
//!   fiber entering K never lands on one of K's two fibration slopes;
//! * at least one piece is hyperbolic or Seifert over a hyperbolic base.
//!
//! A graph passing all of these is acylindrical with constant 5.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cite;
use crate::error::{Error, Result};
use crate::gog::{acylindrical_bound, slopes_match, GraphOfDims};
use crate::model::{DimResult, IntMatrix2, JsjEdge, JsjGraph, Justification, OrbifoldBase, Slope, VertexKind};
use crate::orbifold::{classify_bounded_orbifold_interior, OrbifoldClass};

pub const ACYLINDRICITY_CONSTANT: u8 = 5;

/// Dimension of every JSJ piece and of the torus edge groups.
const PIECE_GDVC: u8 = 3;
const TORUS_GDVC: u8 = 3;

/// Summand kind to use instead of a JSJ graph that describes a geometric
/// manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Redirect {
    TorusBundle,
    DoubleOfK,
}

impl fmt::Display for Redirect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Redirect::TorusBundle => f.write_str("use torus_bundle"),
            Redirect::DoubleOfK => f.write_str("use double_of_k"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JsjDiagnostic {
    pub rule: String,
    pub location: String,
    pub message: String,
}

impl JsjDiagnostic {
    fn new(rule: &str, location: impl Into<String>, message: impl Into<String>) -> Self {
        JsjDiagnostic { rule: rule.to_string(), location: location.into(), message: message.into() }
    }
}

impl fmt::Display for JsjDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.rule, self.location, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsjVerdict {
    pub valid: bool,
    pub acylindricity_constant: Option<u8>,
    pub diagnostics: Vec<JsjDiagnostic>,
    pub redirect: Option<Redirect>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Piece<'a> {
    Hyperbolic,
    SeifertHyperbolicBase(&'a [Slope]),
    K,
    Rejected,
}

impl Piece<'_> {
    fn is_essential(&self) -> bool {
        matches!(self, Piece::Hyperbolic | Piece::SeifertHyperbolicBase(_))
    }
}

fn is_annulus(base: &OrbifoldBase) -> bool {
    base.orientable && base.genus == 0 && base.boundary_count == 2 && base.cone_points.is_empty()
}

/// D²(2,2) or the Möbius band: the two Seifert presentations of K.
fn is_k_base(base: &OrbifoldBase) -> bool {
    if base.boundary_count != 1 {
        return false;
    }
    let disk_22 = base.orientable
        && base.genus == 0
        && base.cone_points.len() == 2
        && base.cone_points.iter().all(|c| c.order == 2);
    let mobius = !base.orientable && base.genus == 1 && base.cone_points.is_empty();
    disk_22 || mobius
}

struct Checker<'a> {
    diagnostics: Vec<JsjDiagnostic>,
    redirect: Option<Redirect>,
    graph: &'a JsjGraph,
}

impl<'a> Checker<'a> {
    fn reject(&mut self, rule: &str, location: String, message: impl Into<String>) {
        self.diagnostics.push(JsjDiagnostic::new(rule, location, message));
    }

    fn redirect(&mut self, r: Redirect) {
        self.redirect = Some(self.redirect.map_or(r, |old| old.min(r)));
    }

    fn piece(&mut self, id: &str, kind: &'a VertexKind) -> Piece<'a> {
        let location = format!("vertex {id}");
        let (base, slopes) = match kind {
            VertexKind::Hyperbolic { .. } => return Piece::Hyperbolic,
            VertexKind::KPiece => return Piece::K,
            VertexKind::Seifert { base, fiber_slopes } => (base, fiber_slopes.as_slice()),
        };
        match classify_bounded_orbifold_interior(base) {
            Ok(OrbifoldClass::Hyperbolic) => Piece::SeifertHyperbolicBase(slopes),
            Ok(_) if is_annulus(base) => {
                self.reject(
                    cite::TRIVIAL_PIECE,
                    location,
                    "T²×I piece violates minimality of the JSJ tori; the manifold is a torus bundle",
                );
                self.redirect(Redirect::TorusBundle);
                Piece::Rejected
            }
            Ok(_) if is_k_base(base) => {
                if let Some(s) = slopes.first() {
                    if *s != Slope::HORIZONTAL && *s != Slope::VERTICAL {
                        self.reject(
                            cite::EIGEN_SLOPE_MATCH,
                            location,
                            format!(
                                "K presented as a Seifert piece must have fiber slope (1, 0) or (0, 1) \
                                 in its socket basis, found {s}"
                            ),
                        );
                    }
                }
                Piece::K
            }
            Ok(_) => {
                self.reject(cite::TRIVIAL_PIECE, location, "Euclidean-base Seifert piece other than T²×I or K");
                Piece::Rejected
            }
            Err(Error::InvalidPiece { chi }) => {
                self.reject(
                    cite::BOUNDED_BASE,
                    location,
                    format!("base orbifold interior has χ_orb = {chi} > 0; not modeled on H² or E²"),
                );
                Piece::Rejected
            }
            Err(e) => {
                self.reject(cite::BOUNDED_BASE, location, e.to_string());
                Piece::Rejected
            }
        }
    }

    fn check_edge(&mut self, index: usize, edge: &JsjEdge, a: Piece<'_>, b: Piece<'_>) {
        let location = format!("edge {index} ({} -- {})", edge.end_a, edge.end_b);
        let g = &edge.gluing;
        match (a, b) {
            (Piece::K, Piece::K) => {
                self.reject(
                    cite::DOUBLE_OF_K,
                    location,
                    "two copies of K glued along their boundary form a geometric manifold",
                );
                self.redirect(Redirect::DoubleOfK);
            }
            (Piece::SeifertHyperbolicBase(sa), Piece::SeifertHyperbolicBase(sb)) => {
                let (Some(fa), Some(fb)) = (sa.get(edge.end_a.socket), sb.get(edge.end_b.socket)) else {
                    return;
                };
                if slopes_match(fa, g, fb).unwrap_or(false) {
                    self.reject(
                        cite::FIBRATIONS_MATCH,
                        location,
                        format!(
                            "fibers {fa} and {fb} match across the torus; the two pieces form one \
                             Seifert piece, contradicting minimality"
                        ),
                    );
                }
            }
            (Piece::K, Piece::SeifertHyperbolicBase(sb)) => {
                if let Some(fb) = sb.get(edge.end_b.socket) {
                    let hit = eigen_slopes().into_iter().find(|e| slopes_match(e, g, fb).unwrap_or(false));
                    if let Some(e) = hit {
                        self.reject_eigen(location, *fb, e);
                    }
                }
            }
            (Piece::SeifertHyperbolicBase(sa), Piece::K) => {
                if let Some(fa) = sa.get(edge.end_a.socket) {
                    let hit = eigen_slopes().into_iter().find(|e| slopes_match(fa, g, e).unwrap_or(false));
                    if let Some(e) = hit {
                        self.reject_eigen(location, *fa, e);
                    }
                }
            }
            _ => {}
        }
    }

    fn reject_eigen(&mut self, location: String, fiber: Slope, eigen: Slope) {
        self.reject(
            cite::EIGEN_SLOPE_MATCH,
            location,
            format!(
                "fiber {fiber} lands on eigen-slope {eigen} of K's holonomy; the fibration extends \
                 over K, contradicting minimality"
            ),
        );
    }
}

fn eigen_slopes() -> [Slope; 2] {
    [Slope::HORIZONTAL, Slope::VERTICAL]
}

/// Checks minimality and piece types. Assumes the graph is structurally
/// valid; dangling references are skipped rather than reported.
pub fn validate_jsj(g: &JsjGraph) -> JsjVerdict {
    let mut checker = Checker { diagnostics: Vec::new(), redirect: None, graph: g };
    let pieces: Vec<(&str, Piece<'_>)> =
        checker.graph.vertices.iter().map(|v| (v.id.as_str(), checker.piece(&v.id, &v.kind))).collect();
    let lookup = |id: &str| pieces.iter().find(|(v, _)| *v == id).map(|(_, p)| *p);

    for (i, edge) in g.edges.iter().enumerate() {
        if let (Some(a), Some(b)) = (lookup(&edge.end_a.vertex), lookup(&edge.end_b.vertex)) {
            checker.check_edge(i, edge, a, b);
        }
    }

    if checker.redirect.is_none() && !pieces.iter().any(|(_, p)| p.is_essential()) {
        checker.reject(
            cite::PIECE_TYPES,
            "graph".to_string(),
            "no hyperbolic piece and no Seifert piece over a hyperbolic base",
        );
    }

    let valid = checker.diagnostics.is_empty();
    JsjVerdict {
        valid,
        acylindricity_constant: valid.then_some(ACYLINDRICITY_CONSTANT),
        diagnostics: checker.diagnostics,
        redirect: checker.redirect,
    }
}

/// Dimension of a validated non-geometric prime: always 3.
pub fn jsj_gdvc(g: &JsjGraph) -> Result<DimResult> {
    let verdict = validate_jsj(g);
    if !verdict.valid {
        return Err(Error::InvalidJsj { index: 0, diagnostics: verdict.diagnostics });
    }

    let mut trace = Vec::new();
    for v in &g.vertices {
        let (rule, what) = match &v.kind {
            VertexKind::Hyperbolic { .. } => (cite::TABLE2_HYPERBOLIC, "hyperbolic piece"),
            VertexKind::KPiece => (cite::TABLE2_EUCLIDEAN_BASE, "twisted I-bundle over the Klein bottle"),
            VertexKind::Seifert { base, .. } if is_k_base(base) => {
                (cite::TABLE2_EUCLIDEAN_BASE, "twisted I-bundle over the Klein bottle")
            }
            VertexKind::Seifert { .. } => {
                (cite::TABLE2_HYPERBOLIC_BASE, "Seifert piece over a hyperbolic base orbifold")
            }
        };
        trace.push(Justification::new(rule, format!("vertex {}: {what}, gdvc = {PIECE_GDVC}", v.id)));
    }
    for (i, e) in g.edges.iter().enumerate() {
        trace.push(Justification::new(
            cite::CRYSTALLOGRAPHIC,
            format!("edge {i} ({} -- {}): torus group Z², gdvc = {TORUS_GDVC}", e.end_a, e.end_b),
        ));
    }
    trace.push(Justification::new(
        cite::ACYLINDRICAL,
        format!("JSJ splitting is acylindrical with k = {ACYLINDRICITY_CONSTANT}"),
    ));

    let dims =
        GraphOfDims { vertex_dims: vec![PIECE_GDVC; g.vertices.len()], edge_dims: vec![TORUS_GDVC; g.edges.len()] };
    let lower = dims.vertex_dims.iter().copied().max().unwrap_or(0);
    let upper = acylindrical_bound(&dims);
    trace.push(Justification::new(
        cite::JSJ_WINDOW,
        format!("{lower} ≤ gdvc ≤ {upper} (upper bound from {})", cite::ACYLINDRICAL_BOUND),
    ));
    let value = 3;
    assert!(lower <= value && value <= upper, "window [{lower}, {upper}] must contain 3");
    trace.push(Justification::new(cite::NON_GEOMETRIC_PRIME, format!("non-geometric prime: gdvc = {value}")));
    Ok(DimResult { value, trace })
}

/// Reverses an edge: swaps its ends and inverts the gluing.
pub fn reversed_edge(e: &JsjEdge) -> Option<JsjEdge> {
    Some(JsjEdge { end_a: e.end_b.clone(), end_b: e.end_a.clone(), gluing: IntMatrix2::unimodular_inverse(&e.gluing)? })
}
