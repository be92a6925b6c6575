//! Base 2-orbifold classification by exact orbifold Euler characteristic.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{OrbifoldBase, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrbifoldClass {
    Bad,
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// χ_orb = χ(underlying surface) − Σ (1 − 1/α_i).
pub fn orbifold_euler_characteristic(base: &OrbifoldBase) -> Rational {
    let genus = i64::from(base.genus);
    let boundary = i64::from(base.boundary_count);
    let surface = if base.orientable { 2 - 2 * genus - boundary } else { 2 - genus - boundary };
    base.cone_points.iter().fold(Rational::from_integer(surface), |chi, cone| {
        chi - Rational::new(cone.order - 1, cone.order).expect("cone order is at least 2")
    })
}

/// Teardrops S²(p) and spindles S²(p, q) with p ≠ q.
fn is_bad(base: &OrbifoldBase) -> bool {
    if !(base.orientable && base.genus == 0 && base.is_closed()) {
        return false;
    }
    match base.cone_points.as_slice() {
        [_] => true,
        [x, y] => x.order != y.order,
        _ => false,
    }
}

fn class_by_sign(chi: &Rational) -> OrbifoldClass {
    match chi.sign() {
        Ordering::Greater => OrbifoldClass::Spherical,
        Ordering::Equal => OrbifoldClass::Euclidean,
        Ordering::Less => OrbifoldClass::Hyperbolic,
    }
}

pub(crate) fn closed_class(base: &OrbifoldBase) -> OrbifoldClass {
    if is_bad(base) {
        OrbifoldClass::Bad
    } else {
        class_by_sign(&orbifold_euler_characteristic(base))
    }
}

pub fn classify_closed_orbifold(base: &OrbifoldBase) -> Result<OrbifoldClass> {
    if !base.is_closed() {
        return Err(Error::NotClosed { boundary_count: base.boundary_count });
    }
    Ok(closed_class(base))
}

/// Geometry of the interior of a base with boundary. A positive χ_orb means
/// the piece is a fibered solid torus and yields [`Error::InvalidPiece`].
pub fn classify_bounded_orbifold_interior(base: &OrbifoldBase) -> Result<OrbifoldClass> {
    if base.is_closed() {
        return Err(Error::NotBounded);
    }
    let chi = orbifold_euler_characteristic(base);
    match class_by_sign(&chi) {
        OrbifoldClass::Spherical => Err(Error::InvalidPiece { chi }),
        class => Ok(class),
    }
}
