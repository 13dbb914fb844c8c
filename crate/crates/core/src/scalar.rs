//! Scalar abstractions.
//!
//! Triangulation counts are computed over any [`CountScalar`]: machine
//! integers report overflow as `None`, [`num_bigint::BigUint`] never
//! overflows. Drawing coordinates are generic over [`Coordinate`].

use num_bigint::BigUint;
use num_traits::{CheckedAdd, CheckedMul, Float, FloatConst, One, Zero};

/// Exact, non-negative counter used by the triangulation counting tables.
pub trait CountScalar: Clone + Zero + One + CheckedAdd + CheckedMul {}

impl CountScalar for u32 {}
impl CountScalar for u64 {}
impl CountScalar for u128 {}
impl CountScalar for usize {}
impl CountScalar for BigUint {}

/// Floating point type used for vertex positions: f32 or f64.
pub trait Coordinate: Float + FloatConst {}

impl Coordinate for f32 {}
impl Coordinate for f64 {}

/// Position of polygon vertex `i` on the unit circle.
///
/// Vertex 0 sits at the top and labels increase clockwise:
/// `θ = π/2 − 2πi/n`.
pub fn vertex_position<T: Coordinate>(n: usize, i: usize) -> (T, T) {
    let n_t = T::from(n).expect("polygon size fits the coordinate type");
    let i_t = T::from(i).expect("vertex index fits the coordinate type");
    let two = T::one() + T::one();
    let theta = T::FRAC_PI_2() - two * T::PI() * i_t / n_t;
    (theta.cos(), theta.sin())
}

/// Proper segment intersection test for four points in general position.
///
/// Segments sharing an endpoint are reported as non-crossing.
pub fn segments_cross<T: Coordinate>(p1: (T, T), p2: (T, T), q1: (T, T), q2: (T, T)) -> bool {
    fn orient<T: Float>(a: (T, T), b: (T, T), c: (T, T)) -> T {
        (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
    }
    let eps = T::epsilon() * T::from(64.0).unwrap();
    let d1 = orient(p1, p2, q1);
    let d2 = orient(p1, p2, q2);
    let d3 = orient(q1, q2, p1);
    let d4 = orient(q1, q2, p2);
    let opposite = |x: T, y: T| (x > eps && y < -eps) || (x < -eps && y > eps);
    opposite(d1, d2) && opposite(d3, d4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_zero_is_on_top() {
        let (x, y): (f64, f64) = vertex_position(7, 0);
        assert!(x.abs() < 1e-12);
        assert!((y - 1.0).abs() < 1e-12);
        let (x32, y32): (f32, f32) = vertex_position(4, 1);
        assert!((x32 - 1.0).abs() < 1e-6 && y32.abs() < 1e-6);
    }

    #[test]
    fn square_diagonals_cross() {
        let p = |i| vertex_position::<f64>(4, i);
        assert!(segments_cross(p(0), p(2), p(1), p(3)));
        assert!(!segments_cross(p(0), p(1), p(2), p(3)));
        assert!(!segments_cross(p(0), p(2), p(2), p(3)));
    }
}
