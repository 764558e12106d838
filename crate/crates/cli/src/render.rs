//! ASCII and SVG drawings of planar polyominoes and polyhexes with their
//! hull overlays. Element order follows cell order, so output is stable.

use std::fmt::Write;

use polyhull::hexgrid::{hex_hull_area, hex_hull_polygon, HexPolyomino};
use polyhull::hull::{corner_points, hull_polygon_2d, HullPolygon2D};
use polyhull::rational::fmt_exact;
use polyhull::{Error, Polyomino};

pub const SCALE: i64 = 32;

const CELL_FILL: &str = "#9ecae1";
const CELL_STROKE: &str = "#3182bd";
const HULL_STROKE: &str = "#d62728";

fn planar(p: &Polyomino) -> Result<(), Error> {
    match p.dim() {
        2 => Ok(()),
        d => Err(Error::Argument(format!(
            "only planar polyominoes can be drawn, input has dimension {d}"
        ))),
    }
}

fn extent(p: &Polyomino) -> (i64, i64, i64, i64) {
    let xs = p.cells().iter().map(|c| c.coord(0) as i64);
    let ys = p.cells().iter().map(|c| c.coord(1) as i64);
    (
        xs.clone().min().unwrap(),
        xs.max().unwrap(),
        ys.clone().min().unwrap(),
        ys.max().unwrap(),
    )
}

/// `#` for cells, `.` for empty squares whose centre lies in the hull,
/// framed by the bounding box, then the hull area.
pub fn ascii(p: &Polyomino) -> Result<String, Error> {
    planar(p)?;
    let (x0, x1, y0, y1) = extent(p);
    let doubled: Vec<(i64, i64)> = corner_points(p)
        .iter()
        .map(|q| (2 * q.coords()[0], 2 * q.coords()[1]))
        .collect();
    let hull2 = HullPolygon2D::from_points(&doubled);
    let width = (x1 - x0 + 1) as usize;
    let mut out = format!("+{}+\n", "-".repeat(width));
    for y in (y0..=y1).rev() {
        out.push('|');
        for x in x0..=x1 {
            let occupied = p.cells().iter().any(|c| c.coord(0) as i64 == x && c.coord(1) as i64 == y);
            out.push(if occupied {
                '#'
            } else if hull2.contains((2 * x + 1, 2 * y + 1)) {
                '.'
            } else {
                ' '
            });
        }
        out.push_str("|\n");
    }
    writeln!(out, "+{}+", "-".repeat(width)).unwrap();
    writeln!(out, "hull area {}", fmt_exact(&hull_polygon_2d(p)?.area())).unwrap();
    Ok(out)
}

fn header(out: &mut String, w: i64, h: i64, title: &str) {
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    )
    .unwrap();
    writeln!(out, "<title>{title}</title>").unwrap();
}

pub fn svg(p: &Polyomino) -> Result<String, Error> {
    planar(p)?;
    let (x0, x1, y0, y1) = extent(p);
    // one unit of margin; lattice y grows upwards
    let px = |x: i64| (x - x0 + 1) * SCALE;
    let py = |y: i64| (y1 + 2 - y) * SCALE;
    let hull = hull_polygon_2d(p)?;
    let mut out = String::new();
    header(
        &mut out,
        (x1 - x0 + 3) * SCALE,
        (y1 - y0 + 3) * SCALE,
        &format!("n={} hull area {}", p.size(), fmt_exact(&hull.area())),
    );
    writeln!(out, "<g fill=\"{CELL_FILL}\" stroke=\"{CELL_STROKE}\" stroke-width=\"1\">").unwrap();
    for c in p.cells() {
        let (x, y) = (c.coord(0) as i64, c.coord(1) as i64);
        writeln!(
            out,
            "<rect x=\"{}\" y=\"{}\" width=\"{SCALE}\" height=\"{SCALE}\"/>",
            px(x),
            py(y + 1)
        )
        .unwrap();
    }
    out.push_str("</g>\n");
    let points: Vec<String> = hull
        .vertices()
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x), py(y)))
        .collect();
    writeln!(
        out,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"{HULL_STROKE}\" stroke-width=\"2\"/>",
        points.join(" ")
    )
    .unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}

/// Side length is one unit.
pub fn hex_svg(p: &HexPolyomino) -> String {
    let corners: Vec<(f64, f64)> = p
        .cells()
        .iter()
        .flat_map(|c| c.corners())
        .map(|q| q.euclidean())
        .collect();
    let min_x = corners.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let max_x = corners.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = corners.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    let max_y = corners.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
    let s = SCALE as f64;
    let px = |x: f64| (x - min_x + 1.0) * s;
    let py = |y: f64| (max_y - y + 1.0) * s;
    let fmt = |(x, y): (f64, f64)| format!("{:.3},{:.3}", px(x), py(y));
    let mut out = String::new();
    header(
        &mut out,
        ((max_x - min_x + 2.0) * s).ceil() as i64,
        ((max_y - min_y + 2.0) * s).ceil() as i64,
        &format!("n={} hull area {} hexagons", p.size(), fmt_exact(&hex_hull_area(p))),
    );
    writeln!(out, "<g fill=\"{CELL_FILL}\" stroke=\"{CELL_STROKE}\" stroke-width=\"1\">").unwrap();
    for c in p.cells() {
        let pts: Vec<String> = c.corners().iter().map(|q| fmt(q.euclidean())).collect();
        writeln!(out, "<polygon points=\"{}\"/>", pts.join(" ")).unwrap();
    }
    out.push_str("</g>\n");
    let hull = hex_hull_polygon(p);
    let pts: Vec<String> = hull
        .vertices()
        .iter()
        .map(|&(a, b)| fmt((a as f64 / 2.0, b as f64 * 3f64.sqrt() / 2.0)))
        .collect();
    writeln!(
        out,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"{HULL_STROKE}\" stroke-width=\"2\"/>",
        pts.join(" ")
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}
