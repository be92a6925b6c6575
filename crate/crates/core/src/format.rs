//! The JSON description format.
//!
//! A document is an object with a `summands` list. Each summand is tagged by
//! `type`; matrices are row-major nested integer lists and slopes are integer
//! pairs. Optional `name` and `expected` fields carry corpus metadata and do
//! not affect classification. Floats are rejected everywhere.

use serde::{Deserialize, Serialize};

use crate::model::{
    canonicalize_slope, validate_description, ConePoint, Diagnostic, Geometry, IntMatrix2, JsjEdge, JsjGraph,
    JsjVertex, ManifoldDescription, OrbifoldBase, Pi1Order, PrimeSummand, SeifertInvariants, SocketRef, VertexKind,
};

type Matrix = [[i64; 2]; 2];

/// Expected outcome recorded alongside a corpus entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub gdvc: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    summands: Vec<SummandWire>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expected: Option<Expected>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum SummandWire {
    SeifertClosed {
        base: BaseWire,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pi1_order: Option<OrderWire>,
    },
    HyperbolicClosed {},
    TorusBundle {
        monodromy: Matrix,
    },
    DoubleOfK {
        gluing: Matrix,
    },
    Jsj {
        graph: GraphWire,
    },
    DeclaredGeometric {
        geometry: Geometry,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pi1_order: Option<OrderWire>,
    },
}

fn yes() -> bool {
    true
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BaseWire {
    #[serde(default)]
    genus: u32,
    #[serde(default = "yes")]
    orientable: bool,
    #[serde(default)]
    cone_points: Vec<[i64; 2]>,
    #[serde(default)]
    boundary_count: u32,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
enum InfiniteWord {
    #[serde(rename = "infinite")]
    Infinite,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(untagged)]
enum OrderWire {
    Finite(u64),
    Infinite(InfiniteWord),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphWire {
    vertices: Vec<VertexWire>,
    edges: Vec<EdgeWire>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum VertexWire {
    Seifert { id: String, base: BaseWire, fiber_slopes: Vec<[i64; 2]> },
    Hyperbolic { id: String, cusp_count: u32 },
    KPiece { id: String },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EndWire {
    vertex: String,
    socket: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeWire {
    end_a: EndWire,
    end_b: EndWire,
    gluing: Matrix,
}

/// A parsed document: the description plus its corpus metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub name: Option<String>,
    pub description: ManifoldDescription,
    pub expected: Option<Expected>,
}

/// Parses and structurally validates a document. Never panics; every
/// problem comes back as a located diagnostic.
pub fn parse_document(text: &str) -> Result<Document, Vec<Diagnostic>> {
    let wire: DocumentWire = serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        vec![Diagnostic { path: String::new(), line: Some(e.line()), column: Some(e.column()), message }]
    })?;
    let mut diagnostics = Vec::new();
    let summands = wire
        .summands
        .into_iter()
        .enumerate()
        .map(|(i, s)| summand_from_wire(&format!("summands[{i}]"), s, &mut diagnostics))
        .collect();
    if !diagnostics.is_empty() {
        return Err(diagnostics);
    }
    let description = ManifoldDescription { summands };
    let diagnostics = validate_description(&description);
    if !diagnostics.is_empty() {
        return Err(diagnostics);
    }
    Ok(Document { name: wire.name, description, expected: wire.expected })
}

pub fn parse_description(text: &str) -> Result<ManifoldDescription, Vec<Diagnostic>> {
    parse_document(text).map(|d| d.description)
}

/// Serializes a description to the document format (pretty-printed JSON).
pub fn serialize_description(m: &ManifoldDescription) -> String {
    let wire = DocumentWire { name: None, summands: m.summands.iter().map(summand_to_wire).collect(), expected: None };
    serde_json::to_string_pretty(&wire).expect("document types always serialize")
}

fn order_from_wire(o: Option<OrderWire>) -> Option<Pi1Order> {
    o.map(|o| match o {
        OrderWire::Finite(n) => Pi1Order::Finite(n),
        OrderWire::Infinite(_) => Pi1Order::Infinite,
    })
}

fn order_to_wire(o: Option<Pi1Order>) -> Option<OrderWire> {
    o.map(|o| match o {
        Pi1Order::Finite(n) => OrderWire::Finite(n),
        Pi1Order::Infinite => OrderWire::Infinite(InfiniteWord::Infinite),
    })
}

fn base_from_wire(b: BaseWire) -> OrbifoldBase {
    OrbifoldBase {
        genus: b.genus,
        orientable: b.orientable,
        cone_points: b.cone_points.iter().map(|&[a, t]| ConePoint::new(a, t)).collect(),
        boundary_count: b.boundary_count,
    }
}

fn base_to_wire(b: &OrbifoldBase) -> BaseWire {
    BaseWire {
        genus: b.genus,
        orientable: b.orientable,
        cone_points: b.cone_points.iter().map(|c| [c.order, c.twist]).collect(),
        boundary_count: b.boundary_count,
    }
}

fn summand_from_wire(path: &str, s: SummandWire, diagnostics: &mut Vec<Diagnostic>) -> PrimeSummand {
    match s {
        SummandWire::SeifertClosed { base, b, pi1_order } => PrimeSummand::SeifertClosed {
            inv: SeifertInvariants { base: base_from_wire(base), section_obstruction: b },
            pi1_order: order_from_wire(pi1_order),
        },
        SummandWire::HyperbolicClosed {} => PrimeSummand::HyperbolicClosed,
        SummandWire::TorusBundle { monodromy } => {
            PrimeSummand::TorusBundle { monodromy: IntMatrix2::from_rows(monodromy) }
        }
        SummandWire::DoubleOfK { gluing } => PrimeSummand::DoubleOfK { gluing: IntMatrix2::from_rows(gluing) },
        SummandWire::Jsj { graph } => {
            PrimeSummand::Jsj { graph: graph_from_wire(&format!("{path}.graph"), graph, diagnostics) }
        }
        SummandWire::DeclaredGeometric { geometry, pi1_order } => {
            PrimeSummand::DeclaredGeometric { geometry, pi1_order: order_from_wire(pi1_order) }
        }
    }
}

fn graph_from_wire(path: &str, g: GraphWire, diagnostics: &mut Vec<Diagnostic>) -> JsjGraph {
    let vertices = g
        .vertices
        .into_iter()
        .enumerate()
        .map(|(j, v)| match v {
            VertexWire::Seifert { id, base, fiber_slopes } => {
                let fiber_slopes = fiber_slopes
                    .iter()
                    .enumerate()
                    .filter_map(|(k, &[p, q])| {
                        canonicalize_slope(p, q)
                            .map_err(|e| {
                                diagnostics.push(Diagnostic::at(
                                    format!("{path}.vertices[{j}].fiber_slopes[{k}]"),
                                    e.to_string(),
                                ))
                            })
                            .ok()
                    })
                    .collect();
                JsjVertex { id, kind: VertexKind::Seifert { base: base_from_wire(base), fiber_slopes } }
            }
            VertexWire::Hyperbolic { id, cusp_count } => JsjVertex { id, kind: VertexKind::Hyperbolic { cusp_count } },
            VertexWire::KPiece { id } => JsjVertex { id, kind: VertexKind::KPiece },
        })
        .collect();
    let edges = g
        .edges
        .into_iter()
        .map(|e| JsjEdge {
            end_a: SocketRef::new(e.end_a.vertex, e.end_a.socket),
            end_b: SocketRef::new(e.end_b.vertex, e.end_b.socket),
            gluing: IntMatrix2::from_rows(e.gluing),
        })
        .collect();
    JsjGraph { vertices, edges }
}

fn summand_to_wire(s: &PrimeSummand) -> SummandWire {
    match s {
        PrimeSummand::SeifertClosed { inv, pi1_order } => SummandWire::SeifertClosed {
            base: base_to_wire(&inv.base),
            b: inv.section_obstruction,
            pi1_order: order_to_wire(*pi1_order),
        },
        PrimeSummand::HyperbolicClosed => SummandWire::HyperbolicClosed {},
        PrimeSummand::TorusBundle { monodromy } => SummandWire::TorusBundle { monodromy: monodromy.rows() },
        PrimeSummand::DoubleOfK { gluing } => SummandWire::DoubleOfK { gluing: gluing.rows() },
        PrimeSummand::Jsj { graph } => SummandWire::Jsj {
            graph: GraphWire {
                vertices: graph
                    .vertices
                    .iter()
                    .map(|v| match &v.kind {
                        VertexKind::Seifert { base, fiber_slopes } => VertexWire::Seifert {
                            id: v.id.clone(),
                            base: base_to_wire(base),
                            fiber_slopes: fiber_slopes.iter().map(|s| s.pair()).collect(),
                        },
                        VertexKind::Hyperbolic { cusp_count } => {
                            VertexWire::Hyperbolic { id: v.id.clone(), cusp_count: *cusp_count }
                        }
                        VertexKind::KPiece => VertexWire::KPiece { id: v.id.clone() },
                    })
                    .collect(),
                edges: graph
                    .edges
                    .iter()
                    .map(|e| EdgeWire {
                        end_a: EndWire { vertex: e.end_a.vertex.clone(), socket: e.end_a.socket },
                        end_b: EndWire { vertex: e.end_b.vertex.clone(), socket: e.end_b.socket },
                        gluing: e.gluing.rows(),
                    })
                    .collect(),
            },
        },
        PrimeSummand::DeclaredGeometric { geometry, pi1_order } => {
            SummandWire::DeclaredGeometric { geometry: *geometry, pi1_order: order_to_wire(*pi1_order) }
        }
    }
}
