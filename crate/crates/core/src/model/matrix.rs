use std::fmt;

/// Largest absolute value accepted for a matrix or slope entry in an input
/// description. Products of two such entries, summed pairwise, stay inside
/// `i64`.
pub const MAX_ENTRY: i64 = i32::MAX as i64;

/// Row-major 2×2 integer matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2::new(1, 0, 0, 1);

    /// Boundary holonomy of the twisted I-bundle over the Klein bottle in
    /// its socket basis: the involution with eigen-slopes (1,0) and (0,1).
    pub const HOLONOMY: IntMatrix2 = IntMatrix2::new(1, 0, 0, -1);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix2 { a, b, c, d }
    }

    pub fn from_rows(rows: [[i64; 2]; 2]) -> Self {
        IntMatrix2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> i128 {
        self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128
    }

    pub fn trace(&self) -> i128 {
        self.a as i128 + self.d as i128
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), 1 | -1)
    }

    pub fn is_scalar_unit(&self) -> bool {
        self.b == 0 && self.c == 0 && self.a == self.d && (self.a == 1 || self.a == -1)
    }

    pub fn max_abs_entry(&self) -> u64 {
        [self.a, self.b, self.c, self.d].iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    /// Matrix product `self · rhs`, or `None` on `i64` overflow.
    pub fn checked_mul(&self, rhs: &IntMatrix2) -> Option<IntMatrix2> {
        let dot = |x: i64, y: i64, z: i64, w: i64| -> Option<i64> { x.checked_mul(y)?.checked_add(z.checked_mul(w)?) };
        Some(IntMatrix2::new(
            dot(self.a, rhs.a, self.b, rhs.c)?,
            dot(self.a, rhs.b, self.b, rhs.d)?,
            dot(self.c, rhs.a, self.d, rhs.c)?,
            dot(self.c, rhs.b, self.d, rhs.d)?,
        ))
    }

    /// Inverse of a determinant ±1 matrix; `None` otherwise.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix2> {
        let sign = match self.det() {
            1 => 1,
            -1 => -1,
            _ => return None,
        };
        Some(IntMatrix2::new(sign * self.d, (-sign).checked_mul(self.b)?, (-sign).checked_mul(self.c)?, sign * self.a))
    }

    pub fn checked_neg(&self) -> Option<IntMatrix2> {
        Some(IntMatrix2::new(
            self.a.checked_neg()?,
            self.b.checked_neg()?,
            self.c.checked_neg()?,
            self.d.checked_neg()?,
        ))
    }

    /// `self · (x, y)ᵀ`, or `None` on overflow.
    pub fn checked_apply(&self, x: i64, y: i64) -> Option<(i64, i64)> {
        let p = self.a.checked_mul(x)?.checked_add(self.b.checked_mul(y)?)?;
        let q = self.c.checked_mul(x)?.checked_add(self.d.checked_mul(y)?)?;
        Some((p, q))
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_shear_and_reflection() {
        let shear = IntMatrix2::new(1, 1, 0, 1);
        let inv = shear.unimodular_inverse().unwrap();
        assert_eq!(inv, IntMatrix2::new(1, -1, 0, 1));
        assert_eq!(shear.checked_mul(&inv).unwrap(), IntMatrix2::IDENTITY);

        let swap = IntMatrix2::new(0, 1, 1, 0);
        assert_eq!(swap.det(), -1);
        assert_eq!(swap.unimodular_inverse().unwrap(), swap);
    }

    #[test]
    fn non_unimodular_has_no_inverse() {
        assert!(IntMatrix2::new(1, 0, 0, 2).unimodular_inverse().is_none());
    }

    #[test]
    fn overflow_is_reported() {
        let big = IntMatrix2::new(i64::MAX, 0, 0, 1);
        assert!(big.checked_mul(&IntMatrix2::new(2, 0, 0, 1)).is_none());
        assert!(IntMatrix2::new(i64::MIN, 0, 0, 1).checked_neg().is_none());
    }

    #[test]
    fn scalar_units() {
        assert!(IntMatrix2::IDENTITY.is_scalar_unit());
        assert!(IntMatrix2::new(-1, 0, 0, -1).is_scalar_unit());
        assert!(!IntMatrix2::new(1, 0, 0, -1).is_scalar_unit());
    }
}
