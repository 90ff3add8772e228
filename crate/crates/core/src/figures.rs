//! SVG lattice diagrams of P_n, D_n and the broken line separating them in σ^∨.

use std::fmt::Write;

use crate::nash::{dn_set, pn_family};
use crate::LatticeVector;

const UNIT: i64 = 40;

struct Canvas {
    width: i64,
    height: i64,
}

impl Canvas {
    // one unit of margin on the left and bottom; y grows upwards
    fn px(&self, x: i64, y: i64) -> (i64, i64) {
        (UNIT * (x + 1), self.height - UNIT * (y + 1))
    }
}

/// SVG showing P_n (class "p-point"), D_n (class "d-point"), the other lattice
/// points of σ^∨, its boundary rays and the broken line through P_n.
pub fn render_figures(n: u32) -> String {
    let family = pn_family(n);
    let pts = family.points();
    let dn = dn_set(n);
    let xmax = pts.iter().map(|p| p.x).max().unwrap_or(0) + 2;
    let ymax = pts.iter().map(|p| p.y).max().unwrap_or(0) + 2;
    let c = Canvas { width: UNIT * (xmax + 2), height: UNIT * (ymax + 2) };
    let pset = family.as_set();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = c.width,
        h = c.height
    );
    let _ = writeln!(out, r#"<title>P_{n} and D_{n}</title>"#);
    let _ = writeln!(out, r#"<rect width="{}" height="{}" fill="white"/>"#, c.width, c.height);

    // σ^∨ = cone((1,0),(3,4)), clipped to the canvas
    let (ox, oy) = c.px(0, 0);
    let (ax, ay) = c.px(xmax, 0);
    let k = (xmax / 3).min(ymax / 4);
    let (bx, by) = c.px(3 * k, 4 * k);
    let _ = writeln!(
        out,
        r#"<line class="boundary" x1="{ox}" y1="{oy}" x2="{ax}" y2="{ay}" stroke="black" stroke-width="2"/>"#
    );
    let _ = writeln!(
        out,
        r#"<line class="boundary" x1="{ox}" y1="{oy}" x2="{bx}" y2="{by}" stroke="black" stroke-width="2"/>"#
    );

    // broken line: along the x-axis into p, through P_n by height, then off along (3,4)
    let mut line: Vec<LatticeVector> = vec![LatticeVector::new(xmax, 0)];
    line.extend(pts.iter().copied());
    let last = *pts.last().expect("P_n is nonempty");
    let t = ((xmax - last.x) / 3).min((ymax - last.y) / 4).max(0);
    line.push(last + LatticeVector::new(3, 4) * t);
    let coords: Vec<String> = line
        .iter()
        .map(|p| {
            let (x, y) = c.px(p.x, p.y);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"<polyline class="dividing-line" points="{}" fill="none" stroke="gray" stroke-width="2"/>"#,
        coords.join(" ")
    );

    for y in 0..=ymax {
        for x in 0..=xmax {
            let a = LatticeVector::new(x, y);
            // inside σ^∨: y >= 0 and 4x - 3y >= 0
            if 4 * x - 3 * y < 0 || dn.contains(&a) || pset.contains(&a) {
                continue;
            }
            let (px, py) = c.px(x, y);
            let _ = writeln!(out, r#"<circle class="lattice-point" cx="{px}" cy="{py}" r="3" fill="lightgray"/>"#);
        }
    }
    for a in &dn {
        let (px, py) = c.px(a.x, a.y);
        let _ = writeln!(
            out,
            r#"<circle class="d-point" cx="{px}" cy="{py}" r="7" fill="white" stroke="black" stroke-width="2"/>"#
        );
    }
    for a in &pset {
        let (px, py) = c.px(a.x, a.y);
        let _ = writeln!(out, r#"<circle class="p-point" cx="{px}" cy="{py}" r="7" fill="black"/>"#);
    }
    out.push_str("</svg>\n");
    out
}
