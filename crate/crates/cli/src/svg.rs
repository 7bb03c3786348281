//! Plain SVG 1.1 rendering of an orbit.

use std::fmt::Write;

use tracezero::geometry::AxisLine;
use tracezero::Point2;

pub const SIZE: f64 = 600.0;

/// Viewport mapping: the orbit's bounding box, squared off and padded by 10%
/// on every side, scaled onto a `SIZE × SIZE` canvas with `y` pointing up.
#[derive(Debug, Clone, Copy)]
pub struct Frame {
    cx: f64,
    cy: f64,
    scale: f64,
    half_span: f64,
}

impl Frame {
    pub fn fit(points: &[Point2]) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for p in points {
            x0 = x0.min(p.x);
            x1 = x1.max(p.x);
            y0 = y0.min(p.y);
            y1 = y1.max(p.y);
        }
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        let mut span = (x1 - x0).max(y1 - y0);
        if span <= 0.0 {
            span = 1.0;
        }
        let view = span * 1.2;
        Frame {
            cx,
            cy,
            scale: SIZE / view,
            half_span: view / 2.0,
        }
    }

    pub fn map(&self, p: Point2) -> (f64, f64) {
        (
            SIZE / 2.0 + (p.x - self.cx) * self.scale,
            SIZE / 2.0 - (p.y - self.cy) * self.scale,
        )
    }

    /// Endpoints of the line through the origin along `axis`, long enough to
    /// cross the whole viewport.
    pub fn axis_segment(&self, axis: AxisLine) -> (Point2, Point2) {
        let reach = self.cx.hypot(self.cy) + 2.0 * self.half_span;
        let d = axis.direction();
        (reach * d, -reach * d)
    }
}

pub fn render(points: &[Point2], axis: AxisLine) -> String {
    let frame = Frame::fit(points);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(
        out,
        "<rect width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>"
    );

    let (a, b) = frame.axis_segment(axis);
    let (ax, ay) = frame.map(a);
    let (bx, by) = frame.map(b);
    let _ = writeln!(
        out,
        "<line id=\"axis\" x1=\"{ax:.3}\" y1=\"{ay:.3}\" x2=\"{bx:.3}\" y2=\"{by:.3}\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>"
    );

    let coords: Vec<String> = points
        .iter()
        .map(|&p| {
            let (x, y) = frame.map(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        "<polyline id=\"orbit\" points=\"{}\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>",
        coords.join(" ")
    );
    for (i, c) in coords.iter().enumerate() {
        let (x, y) = c.split_once(',').expect("pair");
        let fill = if i == 0 { "crimson" } else { "steelblue" };
        let _ = writeln!(
            out,
            "<circle cx=\"{x}\" cy=\"{y}\" r=\"3\" fill=\"{fill}\"/>"
        );
    }
    out.push_str("</svg>\n");
    out
}
