//! Seeded random generator of structurally valid manifold descriptions.
//!
//! The acceptance harness and the property tests draw from the same source:
//! a `ChaCha8Rng` seeded with a fixed `u64`, so every run sees the same
//! descriptions.
//!
//! Shape of a generated description:
//!
//! * Summand count k is 1 or 2 with probability 0.35 each and 3 or 4 with
//!   probability 0.15 each.
//! * With probability 0.3 the description is "round". Every summand is then
//!   drawn from the virtually cyclic families: Seifert spaces over spherical
//!   or bad bases, and declared S3 / S2xE summands. This keeps the free
//!   product clauses well populated. Otherwise each summand kind is drawn
//!   with weights Seifert 30, declared 20, torus bundle 12, double of K 10,
//!   closed hyperbolic 8, JSJ graph 10.
//! * Seifert bases have genus 0..=2, are orientable with probability 0.75,
//!   and carry 0..=4 cone points of order 2..=8 with a random twist coprime
//!   to the order. The obstruction b lies in -3..=3.
//! * Whether a Seifert summand is spherical is decided here with our own
//!   integer arithmetic (common denominators over i128), not by calling the
//!   library. A spherical summand receives a finite order from a fixed list.
//!   Order 1 is used only when it is the sole summand.
//! * Torus-bundle monodromies and double-of-K gluings are random words of
//!   length 0..=6 in S = [[1,1],[0,1]] and T = [[0,-1],[1,0]]. Gluings are
//!   also multiplied by diag(1,-1) half of the time.
//! * JSJ graphs are a path of 1..=4 pieces, closed into a cycle with
//!   probability 0.4. Each piece is hyperbolic, Seifert over a hyperbolic
//!   base, or K (degree one only). Fiber slopes and gluings are
//!   random. Candidates that the library's JSJ validator rejects are redrawn.
//!   After 32 failed draws we fall back to a cusped hyperbolic piece glued to
//!   itself.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vcdim::jsj::validate_jsj;
use vcdim::model::{
    canonicalize_slope, ConePoint, Geometry, IntMatrix2, JsjEdge, JsjGraph, JsjVertex, ManifoldDescription,
    OrbifoldBase, Pi1Order, PrimeSummand, SeifertInvariants, SocketRef, VertexKind,
};

pub const SPHERICAL_ORDERS: [u64; 8] = [2, 3, 4, 5, 8, 12, 24, 120];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// χ_orb of a base as (numerator, denominator) with denominator the product
/// of the cone orders. Computed independently of the library.
pub fn chi_fraction(base: &OrbifoldBase) -> (i128, i128) {
    let g = base.genus as i128;
    let bd = base.boundary_count as i128;
    let surface = if base.orientable { 2 - 2 * g - bd } else { 2 - g - bd };
    let den: i128 = base.cone_points.iter().map(|c| c.order as i128).product();
    let mut num = surface * den;
    for c in &base.cone_points {
        let a = c.order as i128;
        num -= den - den / a;
    }
    (num, den)
}

/// Numerator sign of e = -(b + Σ β/α) over the product of cone orders.
pub fn euler_is_zero(base: &OrbifoldBase, b: i64) -> bool {
    let den: i128 = base.cone_points.iter().map(|c| c.order as i128).product();
    let mut num = b as i128 * den;
    for c in &base.cone_points {
        num += c.twist as i128 * (den / c.order as i128);
    }
    num == 0
}

pub fn is_bad(base: &OrbifoldBase) -> bool {
    let sphere = base.genus == 0 && base.orientable && base.boundary_count == 0;
    let cones = &base.cone_points;
    sphere && (cones.len() == 1 || (cones.len() == 2 && cones[0].order != cones[1].order))
}

/// Whether a closed Seifert space with these invariants is modeled on S3.
pub fn seifert_is_spherical(base: &OrbifoldBase, b: i64) -> bool {
    (is_bad(base) || chi_fraction(base).0 > 0) && !euler_is_zero(base, b)
}

/// Whether it is modeled on S3 or S2xE.
pub fn seifert_is_round(base: &OrbifoldBase) -> bool {
    is_bad(base) || chi_fraction(base).0 > 0
}

pub fn cone(rng: &mut impl Rng) -> ConePoint {
    let order = rng.gen_range(2..=8i64);
    loop {
        let twist = rng.gen_range(1..order);
        if gcd(order as i128, twist as i128) == 1 {
            return ConePoint::new(order, twist);
        }
    }
}

pub fn random_base(rng: &mut impl Rng, boundary_count: u32) -> OrbifoldBase {
    let orientable = rng.gen_bool(0.75);
    let genus = if orientable { rng.gen_range(0..=2) } else { rng.gen_range(1..=2) };
    let cones = (0..rng.gen_range(0..=4)).map(|_| cone(rng)).collect();
    OrbifoldBase { genus, orientable, cone_points: cones, boundary_count }
}

/// A closed base of positive χ or a bad one: the sphere or projective plane
/// with few cone points.
fn round_base(rng: &mut impl Rng) -> OrbifoldBase {
    loop {
        let orientable = rng.gen_bool(0.8);
        let genus = if orientable { 0 } else { 1 };
        let n = if orientable { rng.gen_range(0..=3) } else { rng.gen_range(0..=1) };
        let cones = (0..n).map(|_| cone(rng)).collect();
        let base = OrbifoldBase { genus, orientable, cone_points: cones, boundary_count: 0 };
        if seifert_is_round(&base) {
            return base;
        }
    }
}

fn order_for(rng: &mut impl Rng, sole: bool) -> Pi1Order {
    if sole && rng.gen_bool(0.1) {
        Pi1Order::Finite(1)
    } else {
        Pi1Order::Finite(*SPHERICAL_ORDERS.choose(rng).unwrap())
    }
}

fn seifert_summand(rng: &mut impl Rng, base: OrbifoldBase, sole: bool) -> PrimeSummand {
    let b = rng.gen_range(-3..=3i64);
    let pi1_order = if seifert_is_spherical(&base, b) {
        Some(order_for(rng, sole))
    } else if rng.gen_bool(0.5) {
        Some(Pi1Order::Infinite)
    } else {
        None
    };
    PrimeSummand::SeifertClosed { inv: SeifertInvariants::closed(base, b), pi1_order }
}

fn declared(rng: &mut impl Rng, geometry: Geometry, sole: bool) -> PrimeSummand {
    let pi1_order = if geometry == Geometry::S3 {
        Some(order_for(rng, sole))
    } else if rng.gen_bool(0.5) {
        Some(Pi1Order::Infinite)
    } else {
        None
    };
    PrimeSummand::DeclaredGeometric { geometry, pi1_order }
}

const S: IntMatrix2 = IntMatrix2::new(1, 1, 0, 1);
const T: IntMatrix2 = IntMatrix2::new(0, -1, 1, 0);

/// Random element of SL(2, Z) as a short word in S, S⁻¹ and T.
pub fn sl2_word(rng: &mut impl Rng, max_len: usize) -> IntMatrix2 {
    let generators = [S, IntMatrix2::new(1, -1, 0, 1), T];
    let mut m = IntMatrix2::IDENTITY;
    for _ in 0..rng.gen_range(0..=max_len) {
        m = m.checked_mul(generators.choose(rng).unwrap()).unwrap();
    }
    m
}

/// Random element of GL(2, Z).
pub fn gl2_word(rng: &mut impl Rng, max_len: usize) -> IntMatrix2 {
    let m = sl2_word(rng, max_len);
    if rng.gen_bool(0.5) {
        m.checked_mul(&IntMatrix2::HOLONOMY).unwrap()
    } else {
        m
    }
}

fn random_slope(rng: &mut impl Rng) -> vcdim::model::Slope {
    loop {
        let p = rng.gen_range(-3..=3);
        let q = rng.gen_range(-3..=3);
        if let Ok(s) = canonicalize_slope(p, q) {
            return s;
        }
    }
}

/// An orientable base of genus at most one with `boundary` holes and negative χ.
fn hyperbolic_planar_base(rng: &mut impl Rng, boundary: u32) -> OrbifoldBase {
    loop {
        let base = OrbifoldBase {
            genus: if rng.gen_bool(0.2) { 1 } else { 0 },
            orientable: true,
            cone_points: (0..rng.gen_range(0..=3)).map(|_| cone(rng)).collect(),
            boundary_count: boundary,
        };
        if chi_fraction(&base).0 < 0 {
            return base;
        }
    }
}

pub fn candidate_graph(rng: &mut impl Rng) -> JsjGraph {
    let n = rng.gen_range(1..=4usize);
    let cycle = n == 1 || rng.gen_bool(0.4);
    let mut pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    if cycle {
        pairs.push((n - 1, 0));
    }
    let mut degree = vec![0usize; n];
    for &(a, b) in &pairs {
        degree[a] += 1;
        degree[b] += 1;
    }
    let vertices: Vec<JsjVertex> = (0..n)
        .map(|i| {
            let id = format!("v{i}");
            let roll = rng.gen_range(0..10);
            let kind = if degree[i] == 1 && roll < 3 {
                VertexKind::KPiece
            } else if roll < 6 {
                VertexKind::Hyperbolic { cusp_count: degree[i] as u32 }
            } else {
                VertexKind::Seifert {
                    base: hyperbolic_planar_base(rng, degree[i] as u32),
                    fiber_slopes: (0..degree[i]).map(|_| random_slope(rng)).collect(),
                }
            };
            JsjVertex { id, kind }
        })
        .collect();
    let mut next = vec![0usize; n];
    let mut socket = |v: usize| {
        let s = next[v];
        next[v] += 1;
        SocketRef::new(format!("v{v}"), s)
    };
    let edges =
        pairs.iter().map(|&(a, b)| JsjEdge { end_a: socket(a), end_b: socket(b), gluing: gl2_word(rng, 5) }).collect();
    JsjGraph { vertices, edges }
}

pub fn fallback_graph() -> JsjGraph {
    JsjGraph {
        vertices: vec![JsjVertex { id: "h".into(), kind: VertexKind::Hyperbolic { cusp_count: 2 } }],
        edges: vec![JsjEdge {
            end_a: SocketRef::new("h", 0),
            end_b: SocketRef::new("h", 1),
            gluing: IntMatrix2::new(2, 1, 1, 1),
        }],
    }
}

pub fn valid_graph(rng: &mut impl Rng) -> JsjGraph {
    for _ in 0..32 {
        let g = candidate_graph(rng);
        if validate_jsj(&g).valid {
            return g;
        }
    }
    fallback_graph()
}

fn round_summand(rng: &mut impl Rng, sole: bool) -> PrimeSummand {
    match rng.gen_range(0..3) {
        0 => {
            let base = round_base(rng);
            seifert_summand(rng, base, sole)
        }
        1 => declared(rng, Geometry::S3, sole),
        _ => declared(rng, Geometry::S2xE, sole),
    }
}

fn any_summand(rng: &mut impl Rng, sole: bool) -> PrimeSummand {
    let roll = rng.gen_range(0..90);
    if roll < 30 {
        let base = random_base(rng, 0);
        seifert_summand(rng, base, sole)
    } else if roll < 50 {
        let g = *Geometry::ALL.choose(rng).unwrap();
        declared(rng, g, sole)
    } else if roll < 62 {
        PrimeSummand::TorusBundle { monodromy: sl2_word(rng, 6) }
    } else if roll < 72 {
        PrimeSummand::DoubleOfK { gluing: gl2_word(rng, 6) }
    } else if roll < 80 {
        PrimeSummand::HyperbolicClosed
    } else {
        PrimeSummand::Jsj { graph: valid_graph(rng) }
    }
}

pub fn description(rng: &mut impl Rng) -> ManifoldDescription {
    let k = match rng.gen_range(0..100) {
        0..=34 => 1,
        35..=69 => 2,
        70..=84 => 3,
        _ => 4,
    };
    let round = rng.gen_bool(0.3);
    let summands = (0..k).map(|_| if round { round_summand(rng, k == 1) } else { any_summand(rng, k == 1) }).collect();
    ManifoldDescription::new(summands)
}

pub fn descriptions(seed: u64, n: usize) -> Vec<ManifoldDescription> {
    let mut r = rng(seed);
    (0..n).map(|_| description(&mut r)).collect()
}
