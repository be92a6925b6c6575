//! Per-prime dispatch and assembly of the connected-sum dimension.
//!
//! Two independent routes compute the same number: [`gdvc_manifold`] works
//! from per-summand dimension profiles (virtually cyclic flags and order
//! classes), and [`gdvc_corollary_geometric`] works from geometry tags and
//! declared orders alone. [`cross_check`] compares them.

use serde::{Deserialize, Serialize};

use crate::cite;
use crate::error::{Error, Result};
use crate::geometry::{
    double_of_k_geometry, double_of_k_monodromy, euler_number, geometry_gdvc, is_virtually_cyclic_geometry,
    monodromy_type, seifert_closed_geometry, torus_bundle_geometry,
};
use crate::gog::prime_sum_bounds;
use crate::jsj::jsj_gdvc;
use crate::model::{
    validate_description, DimResult, Geometry, Justification, ManifoldDescription, Pi1Order, PrimeSummand,
};
use crate::orbifold::{closed_class, orbifold_euler_characteristic, OrbifoldClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderClass {
    Trivial,
    Two,
    MoreThanTwo,
    Infinite,
}

impl OrderClass {
    fn of(order: Option<Pi1Order>) -> OrderClass {
        match order {
            Some(Pi1Order::Finite(1)) => OrderClass::Trivial,
            Some(Pi1Order::Finite(2)) => OrderClass::Two,
            Some(Pi1Order::Finite(_)) => OrderClass::MoreThanTwo,
            Some(Pi1Order::Infinite) | None => OrderClass::Infinite,
        }
    }
}

/// What the assembly step needs to know about one prime summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeProfile {
    pub gdvc: u8,
    pub geometry: Option<Geometry>,
    pub vc: bool,
    pub pi1_order_class: OrderClass,
    pub has_flat_summand_geometry: bool,
    pub trace: Vec<Justification>,
}

pub fn gdvc_prime(p: &PrimeSummand) -> Result<PrimeProfile> {
    profile(0, p)
}

fn geometric_profile(geometry: Geometry, order: Option<Pi1Order>, trace: Vec<Justification>) -> PrimeProfile {
    let vc = is_virtually_cyclic_geometry(geometry);
    PrimeProfile {
        gdvc: geometry_gdvc(geometry),
        geometry: Some(geometry),
        vc,
        pi1_order_class: if geometry == Geometry::S3 { OrderClass::of(order) } else { OrderClass::Infinite },
        has_flat_summand_geometry: geometry == Geometry::E3,
        trace,
    }
}

fn table_rule(geometry: Geometry) -> &'static str {
    match geometry {
        Geometry::S3 | Geometry::S2xE => cite::TABLE1_SPHERICAL_BASE,
        Geometry::E3 | Geometry::Nil => cite::TABLE1_EUCLIDEAN_BASE,
        Geometry::H2xE | Geometry::PslTilde => cite::TABLE1_HYPERBOLIC_BASE,
        Geometry::H3 => cite::TABLE1_HYPERBOLIC,
        Geometry::Sol => cite::TORUS_BUNDLE,
    }
}

fn flat_note(geometry: Geometry, index: usize, trace: &mut Vec<Justification>) {
    if geometry == Geometry::E3 {
        trace.push(Justification::new(
            cite::CRYSTALLOGRAPHIC,
            format!("summand {index}: π₁ is 3-crystallographic, gdvc = 3 + 1 = 4"),
        ));
    }
}

fn profile(index: usize, p: &PrimeSummand) -> Result<PrimeProfile> {
    let mut trace = Vec::new();
    let (geometry, order) = match p {
        PrimeSummand::SeifertClosed { inv, pi1_order } => {
            let g = seifert_closed_geometry(inv);
            let class = match closed_class(&inv.base) {
                OrbifoldClass::Bad => "bad",
                OrbifoldClass::Spherical => "spherical",
                OrbifoldClass::Euclidean => "Euclidean",
                OrbifoldClass::Hyperbolic => "hyperbolic",
            };
            trace.push(Justification::new(
                table_rule(g),
                format!(
                    "summand {index}: closed Seifert space over a {class} base (χ_orb = {}), e = {} → {g}, gdvc = {}",
                    orbifold_euler_characteristic(&inv.base),
                    euler_number(inv),
                    geometry_gdvc(g)
                ),
            ));
            (g, *pi1_order)
        }
        PrimeSummand::HyperbolicClosed => {
            trace.push(Justification::new(
                cite::TABLE1_HYPERBOLIC,
                format!("summand {index}: closed hyperbolic manifold → H3, gdvc = 3"),
            ));
            (Geometry::H3, None)
        }
        PrimeSummand::TorusBundle { monodromy } => {
            let g = torus_bundle_geometry(monodromy)?;
            trace.push(Justification::new(
                cite::TORUS_BUNDLE,
                format!(
                    "summand {index}: torus bundle with {:?} monodromy {monodromy} → {g}, gdvc = {}",
                    monodromy_type(monodromy)?,
                    geometry_gdvc(g)
                ),
            ));
            (g, None)
        }
        PrimeSummand::DoubleOfK { gluing } => {
            let g = double_of_k_geometry(gluing)?;
            trace.push(Justification::new(
                cite::DOUBLE_OF_K,
                format!(
                    "summand {index}: double of K along {gluing}; index-two torus bundle cover has monodromy {} → {g}, gdvc = {}",
                    double_of_k_monodromy(gluing)?,
                    geometry_gdvc(g)
                ),
            ));
            (g, None)
        }
        PrimeSummand::Jsj { graph } => {
            let result = jsj_gdvc(graph).map_err(|e| match e {
                Error::InvalidJsj { diagnostics, .. } => Error::InvalidJsj { index, diagnostics },
                other => other,
            })?;
            trace.extend(
                result
                    .trace
                    .into_iter()
                    .map(|j| Justification { clause: format!("summand {index}: {}", j.clause), ..j }),
            );
            return Ok(PrimeProfile {
                gdvc: result.value,
                geometry: None,
                vc: false,
                pi1_order_class: OrderClass::Infinite,
                has_flat_summand_geometry: false,
                trace,
            });
        }
        PrimeSummand::DeclaredGeometric { geometry, pi1_order } => {
            trace.push(Justification::new(
                table_rule(*geometry),
                format!("summand {index}: declared {geometry} geometry, gdvc = {}", geometry_gdvc(*geometry)),
            ));
            (*geometry, *pi1_order)
        }
    };
    if geometry == Geometry::S3 && order.is_none() {
        return Err(Error::MissingOrder { index });
    }
    flat_note(geometry, index, &mut trace);
    Ok(geometric_profile(geometry, order, trace))
}

/// Dimension of π₁ of the whole connected sum, with its justification.
pub fn gdvc_manifold(m: &ManifoldDescription) -> Result<DimResult> {
    let diagnostics = validate_description(m);
    if !diagnostics.is_empty() {
        return Err(Error::Structural(diagnostics));
    }
    let profiles = m.summands.iter().enumerate().map(|(i, s)| profile(i, s)).collect::<Result<Vec<_>>>()?;

    let mut trace: Vec<Justification> = profiles.iter().flat_map(|p| p.trace.iter().cloned()).collect();
    let dims: Vec<u8> = profiles.iter().map(|p| p.gdvc).collect();
    let (lower, upper) = prime_sum_bounds(&dims);
    trace.push(Justification::new(
        cite::PRIME_SUM_WINDOW,
        format!("per-summand dimensions {dims:?} give {lower} ≤ gdvc ≤ {upper}"),
    ));

    let k = profiles.len();
    let (value, rule, clause) = if let Some(i) = profiles.iter().position(|p| p.has_flat_summand_geometry) {
        (4, cite::CONTAINS_Z3, format!("summand {i} is modeled on E3, so Γ contains Z³: gdvc = 4"))
    } else if profiles.iter().all(|p| p.vc) {
        let all_two = profiles.iter().all(|p| p.pi1_order_class == OrderClass::Two);
        if k == 1 {
            (0, cite::VC_GROUP, "Γ is virtually cyclic (single summand modeled on S3 or S2xE): gdvc = 0".to_string())
        } else if k == 2 && all_two {
            (0, cite::VC_GROUP, "Γ = Z/2 * Z/2 is infinite dihedral, hence virtually cyclic: gdvc = 0".to_string())
        } else {
            (
                2,
                cite::FREE_PRODUCT_OF_VC,
                format!("Γ is a non-elementary free product of {k} virtually cyclic groups: gdvc = 2"),
            )
        }
    } else {
        (
            3,
            cite::GENERIC_CASE,
            "Γ is not virtually cyclic, not a free product of virtually cyclic groups, and has no Z³: gdvc = 3"
                .to_string(),
        )
    };
    trace.push(Justification::new(rule, clause));
    assert!(lower <= value && value <= upper, "gdvc {value} outside the connected-sum window [{lower}, {upper}]");
    Ok(DimResult { value, trace })
}

fn summand_geometry(s: &PrimeSummand) -> Result<Option<Geometry>> {
    Ok(match s {
        PrimeSummand::SeifertClosed { inv, .. } => Some(seifert_closed_geometry(inv)),
        PrimeSummand::HyperbolicClosed => Some(Geometry::H3),
        PrimeSummand::TorusBundle { monodromy } => Some(torus_bundle_geometry(monodromy)?),
        PrimeSummand::DoubleOfK { gluing } => Some(double_of_k_geometry(gluing)?),
        PrimeSummand::Jsj { .. } => None,
        PrimeSummand::DeclaredGeometric { geometry, .. } => Some(*geometry),
    })
}

/// The geometric characterization: reads only geometry tags and declared
/// orders. A JSJ summand counts as non-geometric.
pub fn gdvc_corollary_geometric(m: &ManifoldDescription) -> Result<u8> {
    let geometries = m.summands.iter().map(summand_geometry).collect::<Result<Vec<_>>>()?;
    let orders: Vec<Option<Pi1Order>> = m.summands.iter().map(PrimeSummand::declared_order).collect();
    let k = geometries.len();
    let round = |g: &Option<Geometry>| matches!(g, Some(Geometry::S3 | Geometry::S2xE));
    let projective = |i: usize| geometries[i] == Some(Geometry::S3) && orders[i] == Some(Pi1Order::Finite(2));
    let large = |i: usize| match (geometries[i], orders[i]) {
        (Some(Geometry::S3), Some(Pi1Order::Finite(n))) => n > 2,
        (Some(Geometry::S3), _) => false,
        _ => true,
    };

    // geometry of M itself, when M is geometric
    let whole = match k {
        1 => geometries[0],
        2 if projective(0) && projective(1) => Some(Geometry::S2xE),
        _ => None,
    };

    Ok(if geometries.contains(&Some(Geometry::E3)) {
        4
    } else if round(&whole) {
        0
    } else if geometries.iter().all(round) && (k > 2 || (k == 2 && (large(0) || large(1)))) {
        2
    } else {
        3
    })
}

pub fn cross_check(m: &ManifoldDescription) -> Result<bool> {
    Ok(gdvc_manifold(m)?.value == gdvc_corollary_geometric(m)?)
}

/// Which of the four assembly clauses ("1" to "4") decided `r`, read off the
/// last trace entry.
pub fn decisive_clause(r: &DimResult) -> Option<&'static str> {
    match r.trace.last()?.rule.as_str() {
        cite::VC_GROUP => Some("1"),
        cite::FREE_PRODUCT_OF_VC => Some("2"),
        cite::CONTAINS_Z3 => Some("3"),
        cite::GENERIC_CASE => Some("4"),
        _ => None,
    }
}
