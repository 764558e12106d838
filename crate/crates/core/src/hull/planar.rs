use crate::rational::{frac, Rational};

type P = (i64, i64);

fn cross(o: P, a: P, b: P) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Monotone chain. Counter-clockwise, starting from the lexicographically
/// least point, collinear points dropped.
pub fn convex_hull_2d(points: &[P]) -> Vec<P> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<P> = Vec::with_capacity(pts.len() + 1);
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Twice the signed shoelace area.
pub fn twice_signed_area(poly: &[P]) -> i128 {
    let n = poly.len();
    (0..n)
        .map(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % n]);
            a.0 as i128 * b.1 as i128 - b.0 as i128 * a.1 as i128
        })
        .sum()
}

/// Strictly convex counter-clockwise polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullPolygon2D {
    vertices: Vec<P>,
}

impl HullPolygon2D {
    pub fn from_points(points: &[P]) -> Self {
        HullPolygon2D {
            vertices: convex_hull_2d(points),
        }
    }

    pub fn vertices(&self) -> &[P] {
        &self.vertices
    }

    pub fn twice_area(&self) -> i128 {
        twice_signed_area(&self.vertices)
    }

    pub fn area(&self) -> Rational {
        frac(self.twice_area() as i64, 2)
    }

    /// Whether `q` lies inside or on the boundary.
    pub fn contains(&self, q: P) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| cross(self.vertices[i], self.vertices[(i + 1) % n], q) >= 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drops_collinear_and_interior() {
        let pts = [(0, 0), (1, 0), (2, 0), (2, 2), (1, 1), (0, 2), (0, 1)];
        assert_eq!(convex_hull_2d(&pts), vec![(0, 0), (2, 0), (2, 2), (0, 2)]);
        let h = HullPolygon2D::from_points(&pts);
        assert_eq!(h.twice_area(), 8);
        assert!(h.contains((1, 1)) && h.contains((2, 1)) && !h.contains((3, 1)));
    }

    #[test]
    fn orientation_is_counter_clockwise() {
        let tri = HullPolygon2D::from_points(&[(0, 0), (0, 3), (4, 0)]);
        assert!(tri.twice_area() > 0);
        assert_eq!(tri.area(), frac(6, 1));
    }
}
