use std::fmt;

use num_integer::Integer;

use crate::error::SlopeError;

/// Unoriented primitive slope on a boundary torus.
///
/// `(p, q)` and `(-p, -q)` name the same slope; the stored form has `p > 0`,
/// or `p = 0` and `q = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const HORIZONTAL: Slope = Slope { p: 1, q: 0 };
    pub const VERTICAL: Slope = Slope { p: 0, q: 1 };

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn pair(&self) -> [i64; 2] {
        [self.p, self.q]
    }
}

/// Canonical primitive representative of the line through `(p, q)`.
pub fn canonicalize_slope(p: i64, q: i64) -> Result<Slope, SlopeError> {
    if p == 0 && q == 0 {
        return Err(SlopeError::ZeroSlope);
    }
    let (mut p, mut q) = (p as i128, q as i128);
    let g = p.gcd(&q);
    p /= g;
    q /= g;
    if p < 0 || (p == 0 && q < 0) {
        p = -p;
        q = -q;
    }
    match (i64::try_from(p), i64::try_from(q)) {
        (Ok(p), Ok(q)) => Ok(Slope { p, q }),
        _ => Err(SlopeError::OutOfRange),
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}
