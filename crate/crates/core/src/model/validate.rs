use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_integer::Integer;

use super::{
    Diagnostic, Geometry, IntMatrix2, JsjGraph, ManifoldDescription, OrbifoldBase, Pi1Order, PrimeSummand, SocketRef,
    VertexKind, MAX_ENTRY,
};
use crate::geometry::seifert_closed_geometry;

/// Checks every structural invariant of a description. Empty output means
/// the description is well formed; it says nothing about JSJ minimality.
pub fn validate_description(m: &ManifoldDescription) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    if m.summands.is_empty() {
        out.push(Diagnostic::at("summands", "at least one summand required"));
        return out;
    }
    let sole = m.summands.len() == 1;
    for (i, s) in m.summands.iter().enumerate() {
        check_summand(&format!("summands[{i}]"), s, sole, &mut out);
    }
    out
}

fn check_summand(path: &str, s: &PrimeSummand, sole: bool, out: &mut Vec<Diagnostic>) {
    match s {
        PrimeSummand::SeifertClosed { inv, pi1_order } => {
            let base_ok = check_base(&format!("{path}.base"), &inv.base, out);
            if inv.base.boundary_count > 0 {
                out.push(Diagnostic::at(
                    format!("{path}.base.boundary_count"),
                    "closed Seifert summand requires boundary_count = 0",
                ));
            }
            if inv.section_obstruction.is_none() {
                out.push(Diagnostic::at(format!("{path}.b"), "closed Seifert summand requires b"));
            }
            if base_ok && inv.base.is_closed() && inv.section_obstruction.is_some() {
                let geometry = seifert_closed_geometry(inv);
                check_order(path, geometry, *pi1_order, sole, out);
            }
        }
        PrimeSummand::HyperbolicClosed => {}
        PrimeSummand::TorusBundle { monodromy } => {
            let p = format!("{path}.monodromy");
            if check_entries(&p, monodromy, out) && monodromy.det() != 1 {
                out.push(Diagnostic::at(p, format!("determinant must be +1, found {}", monodromy.det())));
            }
        }
        PrimeSummand::DoubleOfK { gluing } => {
            let p = format!("{path}.gluing");
            if check_entries(&p, gluing, out) && !gluing.is_unimodular() {
                out.push(Diagnostic::at(p, format!("determinant must be +1 or -1, found {}", gluing.det())));
            }
        }
        PrimeSummand::Jsj { graph } => check_graph(&format!("{path}.graph"), graph, out),
        PrimeSummand::DeclaredGeometric { geometry, pi1_order } => {
            check_order(path, *geometry, *pi1_order, sole, out);
        }
    }
}

fn check_order(path: &str, geometry: Geometry, order: Option<Pi1Order>, sole: bool, out: &mut Vec<Diagnostic>) {
    let p = format!("{path}.pi1_order");
    match (geometry, order) {
        (_, Some(Pi1Order::Finite(0))) => {
            out.push(Diagnostic::at(p, "pi1_order must be a positive integer or \"infinite\""));
        }
        (Geometry::S3, None) => {
            out.push(Diagnostic::at(p, "spherical geometry requires pi1_order"));
        }
        (Geometry::S3, Some(Pi1Order::Infinite)) => {
            out.push(Diagnostic::at(p, "spherical geometry has a finite fundamental group"));
        }
        (Geometry::S3, Some(Pi1Order::Finite(1))) if !sole => {
            out.push(Diagnostic::at(p, "the 3-sphere (pi1_order 1) is only legal as the sole summand"));
        }
        (g, Some(Pi1Order::Finite(_))) if g != Geometry::S3 => {
            out.push(Diagnostic::at(p, format!("a finite pi1_order requires spherical geometry, found {g}")));
        }
        _ => {}
    }
}

/// Returns true when the base is well formed enough for χ_orb and
/// classification to be meaningful.
fn check_base(path: &str, base: &OrbifoldBase, out: &mut Vec<Diagnostic>) -> bool {
    let before = out.len();
    if !base.orientable && base.genus == 0 {
        out.push(Diagnostic::at(format!("{path}.genus"), "non-orientable base needs at least one cross-cap"));
    }
    for (j, cone) in base.cone_points.iter().enumerate() {
        let cp = format!("{path}.cone_points[{j}]");
        if cone.order < 2 {
            out.push(Diagnostic::at(cp, format!("cone order must be at least 2, found {}", cone.order)));
        } else if cone.twist <= 0 || cone.twist >= cone.order {
            out.push(Diagnostic::at(
                cp,
                format!("twist must satisfy 0 < beta < alpha = {}, found {}", cone.order, cone.twist),
            ));
        } else if cone.order.gcd(&cone.twist) != 1 {
            out.push(Diagnostic::at(cp, format!("twist {} is not coprime to order {}", cone.twist, cone.order)));
        }
    }
    out.len() == before
}

fn check_entries(path: &str, m: &IntMatrix2, out: &mut Vec<Diagnostic>) -> bool {
    if m.max_abs_entry() > MAX_ENTRY as u64 {
        out.push(Diagnostic::at(path, format!("entry out of range (absolute value must not exceed {MAX_ENTRY})")));
        return false;
    }
    true
}

fn check_graph(path: &str, g: &JsjGraph, out: &mut Vec<Diagnostic>) {
    if g.vertices.is_empty() {
        out.push(Diagnostic::at(format!("{path}.vertices"), "JSJ graph needs at least one vertex"));
        return;
    }
    if g.edges.is_empty() {
        out.push(Diagnostic::at(format!("{path}.edges"), "JSJ graph needs at least one torus edge"));
    }

    let mut sockets: BTreeMap<&str, usize> = BTreeMap::new();
    for (j, v) in g.vertices.iter().enumerate() {
        let vp = format!("{path}.vertices[{j}]");
        if sockets.insert(v.id.as_str(), v.socket_count()).is_some() {
            out.push(Diagnostic::at(&vp, format!("duplicate vertex id {:?}", v.id)));
        }
        match &v.kind {
            VertexKind::Seifert { base, fiber_slopes } => {
                check_base(&format!("{vp}.base"), base, out);
                if base.boundary_count == 0 {
                    out.push(Diagnostic::at(
                        format!("{vp}.base.boundary_count"),
                        "Seifert piece of a JSJ graph must have boundary",
                    ));
                }
                if fiber_slopes.len() != base.boundary_count as usize {
                    out.push(Diagnostic::at(
                        format!("{vp}.fiber_slopes"),
                        format!(
                            "one fiber slope per boundary socket required: {} sockets, {} slopes",
                            base.boundary_count,
                            fiber_slopes.len()
                        ),
                    ));
                }
                for (k, s) in fiber_slopes.iter().enumerate() {
                    if s.p().unsigned_abs() > MAX_ENTRY as u64 || s.q().unsigned_abs() > MAX_ENTRY as u64 {
                        out.push(Diagnostic::at(
                            format!("{vp}.fiber_slopes[{k}]"),
                            format!("entry out of range (absolute value must not exceed {MAX_ENTRY})"),
                        ));
                    }
                }
            }
            VertexKind::Hyperbolic { cusp_count } => {
                if *cusp_count == 0 {
                    out.push(Diagnostic::at(
                        format!("{vp}.cusp_count"),
                        "hyperbolic piece of a JSJ graph must have at least one cusp",
                    ));
                }
            }
            VertexKind::KPiece => {}
        }
    }

    let mut used: BTreeMap<SocketRef, usize> = BTreeMap::new();
    for (j, e) in g.edges.iter().enumerate() {
        let ep = format!("{path}.edges[{j}]");
        for (name, end) in [("end_a", &e.end_a), ("end_b", &e.end_b)] {
            match sockets.get(end.vertex.as_str()) {
                None => out.push(Diagnostic::at(format!("{ep}.{name}"), format!("unknown vertex {:?}", end.vertex))),
                Some(&n) if end.socket >= n => out.push(Diagnostic::at(
                    format!("{ep}.{name}"),
                    format!("vertex {:?} has {n} socket(s); socket {} does not exist", end.vertex, end.socket),
                )),
                Some(_) => *used.entry(end.clone()).or_default() += 1,
            }
        }
        let gp = format!("{ep}.gluing");
        if check_entries(&gp, &e.gluing, out) && !e.gluing.is_unimodular() {
            out.push(Diagnostic::at(gp, format!("determinant must be +1 or -1, found {}", e.gluing.det())));
        }
    }

    for v in &g.vertices {
        for socket in 0..v.socket_count() {
            let r = SocketRef::new(v.id.clone(), socket);
            match used.get(&r).copied().unwrap_or(0) {
                0 => out.push(Diagnostic::at(
                    format!("{path}.vertices"),
                    format!("manifold not closed: socket {r} is unmatched"),
                )),
                1 => {}
                n => out.push(Diagnostic::at(format!("{path}.edges"), format!("socket {r} is used by {n} edge ends"))),
            }
        }
    }

    if !is_connected(g) {
        out.push(Diagnostic::at(path, "JSJ graph must be connected"));
    }
}

fn is_connected(g: &JsjGraph) -> bool {
    let mut adj: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
    for v in &g.vertices {
        adj.entry(v.id.as_str()).or_default();
    }
    for e in &g.edges {
        let (a, b) = (e.end_a.vertex.as_str(), e.end_b.vertex.as_str());
        if adj.contains_key(a) && adj.contains_key(b) {
            adj.entry(a).or_default().insert(b);
            adj.entry(b).or_default().insert(a);
        }
    }
    let Some(start) = adj.keys().next().copied() else { return true };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == adj.len()
}
