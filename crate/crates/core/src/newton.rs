//! Newton polygons.
//!
//! Orientation: the coefficient `a_i` of a degree-`d` polynomial sits at
//! `(d - i, ν_p(a_i))`, so the leading coefficient is at `x = 0` and the
//! constant term at `x = d`. Most references use the mirror image.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::padic::{vp, Prime, Valuation};
use crate::poly::PolyQ;

pub type Point = (i64, i64);

/// Exact slope, serialized as `"n/d"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slope(pub Ratio<i64>);

impl Slope {
    pub fn new(numer: i64, denom: i64) -> Slope {
        Slope(Ratio::new(numer, denom))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub from: Point,
    pub to: Point,
    pub slope: Slope,
}

impl Segment {
    pub fn width(&self) -> i64 {
        self.to.0 - self.from.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub prime: Prime,
    pub points: Vec<Point>,
    pub hull: Vec<Point>,
    pub lattice: Vec<Point>,
    pub segments: Vec<Segment>,
}

impl NewtonPolygon {
    /// The slope if the polygon is a single segment.
    pub fn single_slope(&self) -> Option<Slope> {
        match self.segments.as_slice() {
            [only] => Some(only.slope),
            _ => None,
        }
    }

    /// Slopes repeated by horizontal width, in increasing order.
    pub fn slope_multiset(&self) -> Vec<Slope> {
        self.segments
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.slope, s.width() as usize))
            .collect()
    }
}

/// Single-segment test: `Some(slope)` iff the polygon has exactly one side
/// (counting hull edges, not lattice subdivisions).
pub fn is_single_slope(np: &NewtonPolygon) -> Option<Slope> {
    np.single_slope()
}

fn cross(o: Point, a: Point, b: Point) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Builds the Newton polygon of `f` with respect to `p`.
/// Zero coefficients contribute no point.
pub fn newton_polygon(f: &PolyQ, p: Prime) -> Result<NewtonPolygon> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::ZeroEndCoefficient),
    };
    if f.coeff(0) == num_traits::Zero::zero() {
        return Err(Error::ZeroEndCoefficient);
    }
    let mut points = Vec::new();
    for x in 0..=d {
        if let Valuation::Finite(v) = vp(&f.coeff(d - x), p) {
            points.push((x as i64, v));
        }
    }

    let mut hull: Vec<Point> = Vec::new();
    for &pt in &points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], pt) <= 0 {
            hull.pop();
        }
        hull.push(pt);
    }

    let mut segments = Vec::new();
    let mut lattice = vec![hull[0]];
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        segments.push(Segment {
            from: a,
            to: b,
            slope: Slope::new(dy, dx),
        });
        let g = dx.gcd(&dy);
        let (sx, sy) = (dx / g, dy / g);
        for k in 1..=g {
            lattice.push((a.0 + k * sx, a.1 + k * sy));
        }
    }

    Ok(NewtonPolygon {
        prime: p,
        points,
        hull,
        lattice,
        segments,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(s: &str) -> PolyQ {
        s.parse().unwrap()
    }

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn x4_plus_4() {
        let np = newton_polygon(&poly("x^4+4"), p(2)).unwrap();
        assert_eq!(np.hull, vec![(0, 0), (4, 2)]);
        assert_eq!(np.lattice, vec![(0, 0), (2, 1), (4, 2)]);
        assert_eq!(is_single_slope(&np), Some(Slope::new(1, 2)));
        assert_eq!(
            serde_json::to_value(&np.segments[0]).unwrap(),
            serde_json::json!({"from": [0, 0], "to": [4, 2], "slope": "1/2"})
        );
    }

    #[test]
    fn linear_and_octic() {
        let np = newton_polygon(&poly("x+7"), p(7)).unwrap();
        assert_eq!(np.single_slope(), Some(Slope::new(1, 1)));
        assert_eq!(np.segments[0].slope.to_string(), "1/1");

        let np = newton_polygon(&poly("x^8+8x^7+16x^6+64x^4+256x^3+1056"), p(2)).unwrap();
        assert_eq!(np.hull, vec![(0, 0), (8, 5)]);
        assert_eq!(np.single_slope(), Some(Slope::new(5, 8)));
    }

    #[test]
    fn two_segments() {
        let np = newton_polygon(&poly("x^2+3x+2"), p(2)).unwrap();
        assert_eq!(np.points, vec![(0, 0), (1, 0), (2, 1)]);
        assert_eq!(np.hull, vec![(0, 0), (1, 0), (2, 1)]);
        assert_eq!(is_single_slope(&np), None);
        assert_eq!(
            np.segments.iter().map(|s| s.slope).collect::<Vec<_>>(),
            vec![Slope::new(0, 1), Slope::new(1, 1)]
        );
    }

    #[test]
    fn rejects_zero_constant_term() {
        assert_eq!(
            newton_polygon(&poly("x^2+x"), p(2)),
            Err(Error::ZeroEndCoefficient)
        );
        assert_eq!(
            newton_polygon(&poly("5"), p(5)),
            Err(Error::ZeroEndCoefficient)
        );
    }

    fn nonzero_const_poly() -> impl Strategy<Value = PolyQ> {
        (
            prop::collection::vec(-200i64..200, 1..7),
            1i64..200,
            1i64..200,
        )
            .prop_map(|(mid, lead, c0)| {
                let mut cs = vec![c0];
                cs.extend(mid);
                cs.push(lead);
                PolyQ::from_ints(&cs)
            })
    }

    proptest! {
        #[test]
        fn product_slopes_are_union(f in nonzero_const_poly(), g in nonzero_const_poly(), pi in 0usize..3) {
            let prime = p([2, 3, 5][pi]);
            let nf = newton_polygon(&f, prime).unwrap();
            let ng = newton_polygon(&g, prime).unwrap();
            let nfg = newton_polygon(&(&f * &g), prime).unwrap();
            let mut expected = nf.slope_multiset();
            expected.extend(ng.slope_multiset());
            expected.sort();
            prop_assert_eq!(nfg.slope_multiset(), expected);
        }

        #[test]
        fn points_lie_above_hull(f in nonzero_const_poly(), pi in 0usize..3) {
            let np = newton_polygon(&f, p([2, 3, 5][pi])).unwrap();
            for s in &np.segments {
                for &(x, y) in &np.points {
                    // (y - y0) * dx >= (x - x0) * dy
                    let lhs = (y - s.from.1) as i128 * s.width() as i128;
                    let rhs = (x - s.from.0) as i128 * (s.to.1 - s.from.1) as i128;
                    prop_assert!(lhs >= rhs);
                }
            }
            prop_assert!(np.segments.windows(2).all(|w| w[0].slope < w[1].slope));
            prop_assert_eq!(np.hull.first().unwrap().0, 0);
            prop_assert_eq!(np.hull.last().unwrap().0, f.degree().unwrap() as i64);
        }
    }
}
