//! Thurston geometry of closed geometric prime summands and the
//! per-geometry dimension table.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Geometry, IntMatrix2, Rational, SeifertInvariants};
use crate::orbifold::{closed_class, OrbifoldClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonodromyType {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// Euler number e = −(b + Σ β_i/α_i) of a closed Seifert fibration.
/// An absent `b` reads as 0.
pub fn euler_number(inv: &SeifertInvariants) -> Rational {
    let b = Rational::from_integer(inv.section_obstruction.unwrap_or(0));
    let sum = inv
        .base
        .cone_points
        .iter()
        .fold(b, |acc, cone| acc + Rational::new(cone.twist, cone.order).expect("cone order is at least 2"));
    -sum
}

/// Trace trichotomy on |tr A|, with ±I counted as elliptic.
pub fn monodromy_type(a: &IntMatrix2) -> Result<MonodromyType> {
    let det = a.det();
    if det != 1 {
        return Err(Error::BadDeterminant { expected: "+1", found: det });
    }
    let t = a.trace().abs();
    Ok(if t < 2 || a.is_scalar_unit() {
        MonodromyType::Elliptic
    } else if t == 2 {
        MonodromyType::Parabolic
    } else {
        MonodromyType::Hyperbolic
    })
}

pub fn seifert_closed_geometry(inv: &SeifertInvariants) -> Geometry {
    debug_assert!(inv.base.is_closed());
    let twisted = !euler_number(inv).is_zero();
    match (closed_class(&inv.base), twisted) {
        (OrbifoldClass::Bad | OrbifoldClass::Spherical, true) => Geometry::S3,
        (OrbifoldClass::Bad | OrbifoldClass::Spherical, false) => Geometry::S2xE,
        (OrbifoldClass::Euclidean, false) => Geometry::E3,
        (OrbifoldClass::Euclidean, true) => Geometry::Nil,
        (OrbifoldClass::Hyperbolic, false) => Geometry::H2xE,
        (OrbifoldClass::Hyperbolic, true) => Geometry::PslTilde,
    }
}

pub fn torus_bundle_geometry(a: &IntMatrix2) -> Result<Geometry> {
    Ok(match monodromy_type(a)? {
        MonodromyType::Elliptic => Geometry::E3,
        MonodromyType::Parabolic => Geometry::Nil,
        MonodromyType::Hyperbolic => Geometry::Sol,
    })
}

/// Monodromy of the index-two torus-bundle cover of two copies of K glued by
/// `gluing`: h · φ⁻¹ · h · φ with h the boundary holonomy.
pub fn double_of_k_monodromy(gluing: &IntMatrix2) -> Result<IntMatrix2> {
    let inverse =
        gluing.unimodular_inverse().ok_or(Error::BadDeterminant { expected: "+1 or -1", found: gluing.det() })?;
    let h = IntMatrix2::HOLONOMY;
    // h·φ⁻¹·h only flips the off-diagonal signs, so the single product
    // below is the only place entries grow.
    let conjugated = h.checked_mul(&inverse).and_then(|m| m.checked_mul(&h)).ok_or(Error::Overflow)?;
    let monodromy = conjugated.checked_mul(gluing).ok_or(Error::Overflow)?;
    assert_eq!(monodromy.det(), 1, "double-of-K monodromy must preserve orientation");
    Ok(monodromy)
}

pub fn double_of_k_geometry(gluing: &IntMatrix2) -> Result<Geometry> {
    torus_bundle_geometry(&double_of_k_monodromy(gluing)?)
}

pub fn is_virtually_cyclic_geometry(g: Geometry) -> bool {
    matches!(g, Geometry::S3 | Geometry::S2xE)
}

/// Dimension of a closed prime manifold modeled on `g`.
pub fn geometry_gdvc(g: Geometry) -> u8 {
    match g {
        Geometry::S3 | Geometry::S2xE => 0,
        Geometry::E3 => 4,
        Geometry::Nil | Geometry::Sol | Geometry::H3 | Geometry::H2xE | Geometry::PslTilde => 3,
    }
}
