//! Planar convex hulls of finite point sets, used to place Stampfli points
//! relative to the convex hull of the spectrum.

use num_complex::Complex64;

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re)
}

/// Hull vertices in counter-clockwise order (Andrew's monotone chain).
/// Collinear and duplicate points are dropped.
pub fn convex_hull(points: &[Complex64]) -> Vec<Complex64> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Complex64> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

fn segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (((z - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (z - (a + d * t)).norm()
}

/// Signed distance of `z` to the relative boundary of `conv(points)`:
/// positive inside the relative interior, negative outside the hull.
///
/// For a segment hull the relative interior is the open segment; for a
/// single point the result is `−|z − p|`.
pub fn hull_margin(points: &[Complex64], z: Complex64) -> f64 {
    let hull = convex_hull(points);
    match hull.len() {
        0 => f64::NEG_INFINITY,
        1 => -(z - hull[0]).norm(),
        2 => {
            let (a, b) = (hull[0], hull[1]);
            let off = segment_distance(z, a, b);
            let scale = (b - a).norm();
            if off > 1e-12 * scale {
                -off
            } else {
                (z - a).norm().min((z - b).norm())
            }
        }
        m => {
            let inside = (0..m).all(|i| cross(hull[i], hull[(i + 1) % m], z) >= 0.0);
            let dist = (0..m)
                .map(|i| segment_distance(z, hull[i], hull[(i + 1) % m]))
                .fold(f64::INFINITY, f64::min);
            if inside {
                dist
            } else {
                -dist
            }
        }
    }
}
