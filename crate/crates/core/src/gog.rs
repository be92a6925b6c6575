//! Dimension bounds for graphs of groups, and fiber-slope arithmetic on
//! the edge tori.

use crate::error::{Error, Result};
use crate::model::{canonicalize_slope, IntMatrix2, Slope};

/// Dimensions of the vertex and edge groups of a splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphOfDims {
    pub vertex_dims: Vec<u8>,
    pub edge_dims: Vec<u8>,
}

/// Upper bound for an acylindrical splitting:
/// max(2, max edge + 1, max vertex). Acylindricity is the caller's claim.
pub fn acylindrical_bound(g: &GraphOfDims) -> u8 {
    let vertex = g.vertex_dims.iter().copied().max().unwrap_or(0);
    let edge = g.edge_dims.iter().map(|d| d + 1).max().unwrap_or(0);
    2.max(vertex).max(edge)
}

/// Window `(lower, upper)` for a connected sum whose summands have the given
/// dimensions.
pub fn prime_sum_bounds(dims: &[u8]) -> (u8, u8) {
    let lower = dims.iter().copied().max().unwrap_or(0);
    (lower, lower.max(2))
}

/// True when `gluing` carries the fiber slope `a` onto `b`, up to sign.
pub fn slopes_match(a: &Slope, gluing: &IntMatrix2, b: &Slope) -> Result<bool> {
    if !gluing.is_unimodular() {
        return Err(Error::BadDeterminant { expected: "+1 or -1", found: gluing.det() });
    }
    let (p, q) = gluing.checked_apply(a.p(), a.q()).ok_or(Error::Overflow)?;
    // a unimodular image of a primitive vector is primitive
    let image = canonicalize_slope(p, q).map_err(|_| Error::Overflow)?;
    Ok(image == *b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(p: i64, q: i64) -> Slope {
        canonicalize_slope(p, q).unwrap()
    }

    #[test]
    fn acylindrical_bound_examples() {
        let g = |v: &[u8], e: &[u8]| GraphOfDims { vertex_dims: v.to_vec(), edge_dims: e.to_vec() };
        assert_eq!(acylindrical_bound(&g(&[0, 0, 0], &[0, 0])), 2);
        assert_eq!(acylindrical_bound(&g(&[3, 3], &[3])), 4);
        assert_eq!(acylindrical_bound(&g(&[0], &[])), 2);
        assert_eq!(acylindrical_bound(&g(&[4], &[0])), 4);
    }

    #[test]
    fn prime_sum_examples() {
        assert_eq!(prime_sum_bounds(&[0, 0, 0]), (0, 2));
        assert_eq!(prime_sum_bounds(&[3]), (3, 3));
        assert_eq!(prime_sum_bounds(&[4, 0]), (4, 4));
    }

    #[test]
    fn slope_examples() {
        let swap = IntMatrix2::new(0, 1, 1, 0);
        assert!(slopes_match(&s(1, 0), &IntMatrix2::IDENTITY, &s(1, 0)).unwrap());
        assert!(!slopes_match(&s(1, 0), &swap, &s(1, 0)).unwrap());
        assert!(slopes_match(&s(1, 0), &swap, &s(0, 1)).unwrap());
        // image (-1, 1) equals (1, -1) up to sign
        assert!(slopes_match(&s(1, 1), &IntMatrix2::new(0, -1, 1, 0), &s(1, -1)).unwrap());
        assert!(slopes_match(&s(1, 0), &IntMatrix2::new(1, 0, 0, 2), &s(1, 0)).is_err());
    }

    proptest! {
        #[test]
        fn acylindrical_bound_is_monotone(
            v in prop::collection::vec(0u8..5, 1..5),
            e in prop::collection::vec(0u8..5, 0..5),
            i in any::<prop::sample::Index>(),
        ) {
            let base = acylindrical_bound(&GraphOfDims { vertex_dims: v.clone(), edge_dims: e.clone() });
            let mut v2 = v.clone();
            let k = i.index(v2.len());
            v2[k] += 1;
            let bumped = acylindrical_bound(&GraphOfDims { vertex_dims: v2, edge_dims: e.clone() });
            prop_assert!(bumped >= base);
            if !e.is_empty() {
                let mut e2 = e.clone();
                let k = i.index(e2.len());
                e2[k] += 1;
                let bumped = acylindrical_bound(&GraphOfDims { vertex_dims: v, edge_dims: e2 });
                prop_assert!(bumped >= base);
            }
        }

        #[test]
        fn prime_sum_window_is_tight_above_two(dims in prop::collection::vec(0u8..5, 1..6)) {
            let (lo, hi) = prime_sum_bounds(&dims);
            prop_assert!(lo <= hi);
            prop_assert_eq!(lo == hi, dims.iter().any(|&d| d >= 2));
        }
    }
}
