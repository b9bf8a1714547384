//! SVG scatter plots of zeros and critical points.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::ComplexPoint;
use crate::sequences;

/// Dot radius for zeros of `p`, in pixels.
pub const ZERO_RADIUS: f64 = 3.0;
/// Dot radius for zeros of `p'`, in pixels.
pub const CRITICAL_RADIUS: f64 = 1.5;

const WIDTH: f64 = 600.0;
const MARGIN: f64 = 30.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    /// critical points of `(z - i) T_30`
    Fig1,
    Fig2Left,
    Fig2Right,
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1" => Ok(Self::Fig1),
            "fig2-left" => Ok(Self::Fig2Left),
            "fig2-right" => Ok(Self::Fig2Right),
            other => Err(Error::InvalidInput(format!(
                "unknown figure {other:?}; expected fig1, fig2-left or fig2-right"
            ))),
        }
    }
}

/// Plotted region `[x0, x1] x [y0, y1]` and the tick spacing on both axes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
    pub tick: f64,
}

impl Figure {
    pub fn viewport(self) -> Viewport {
        match self {
            Self::Fig1 => Viewport {
                x0: -1.25,
                x1: 1.25,
                y0: -0.25,
                y1: 1.25,
                tick: 0.5,
            },
            Self::Fig2Left => Viewport {
                x0: -6.0,
                x1: 4.0,
                y0: -6.0,
                y1: 3.0,
                tick: 1.0,
            },
            Self::Fig2Right => Viewport {
                x0: -3.0,
                x1: 4.0,
                y0: -2.0,
                y1: 3.0,
                tick: 1.0,
            },
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Self::Fig1 => "Zeros of ((z-i)T_30(z))'",
            Self::Fig2Left => "Zeros of P (larger dots) and P' (smaller dots)",
            Self::Fig2Right => "Zeros of Q (larger dots) and Q' (smaller dots)",
        }
    }

    /// Zeros of `p` (drawn large) and of `p'` (drawn small).
    pub fn points(self) -> Result<(Vec<ComplexPoint>, Vec<ComplexPoint>)> {
        let converged = |r: crate::rootfind::RootSolveResult| {
            if r.converged {
                Ok(r.roots)
            } else {
                Err(Error::ConstructionInvariant(format!(
                    "critical points did not converge (residual {:e})",
                    r.max_residual()
                )))
            }
        };
        match self {
            Self::Fig1 => Ok((
                Vec::new(),
                converged(sequences::chebyshev_product_critical_points(30)?)?,
            )),
            Self::Fig2Left | Self::Fig2Right => {
                let inst = if self == Self::Fig2Left {
                    sequences::figure2_left()?
                } else {
                    sequences::figure2_right()?
                };
                let dp = converged(inst.derivative_zeros()?)?;
                Ok((inst.roots, dp))
            }
        }
    }

    pub fn render(self) -> Result<String> {
        let (zeros, critical) = self.points()?;
        Ok(render_svg(self.viewport(), self.title(), &zeros, &critical))
    }
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn dots(
    points: &[ComplexPoint],
    map: impl Fn(ComplexPoint) -> (String, String),
) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = points.iter().map(|&z| map(z)).collect();
    out.sort();
    out
}

/// Deterministic SVG: axes with ticks, then large dots for `zeros` and small
/// dots for `critical`, each sorted by their printed coordinates.
pub fn render_svg(
    vp: Viewport,
    title: &str,
    zeros: &[ComplexPoint],
    critical: &[ComplexPoint],
) -> String {
    let scale = (WIDTH - 2.0 * MARGIN) / (vp.x1 - vp.x0);
    let height = (vp.y1 - vp.y0) * scale + 2.0 * MARGIN;
    let px = |x: f64| MARGIN + (x - vp.x0) * scale;
    let py = |y: f64| MARGIN + (vp.y1 - y) * scale;
    let map = |z: ComplexPoint| (fmt(px(z.re)), fmt(py(z.im)));

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt(WIDTH),
        fmt(height),
        fmt(WIDTH),
        fmt(height)
    );
    let _ = writeln!(
        s,
        "<title>{}</title>",
        title.replace('&', "&amp;").replace('<', "&lt;")
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r##"<g id="axes" stroke="#888" stroke-width="0.75">"##);
    if vp.y0 <= 0.0 && 0.0 <= vp.y1 {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt(px(vp.x0)),
            fmt(py(0.0)),
            fmt(px(vp.x1)),
            fmt(py(0.0))
        );
    }
    if vp.x0 <= 0.0 && 0.0 <= vp.x1 {
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt(px(0.0)),
            fmt(py(vp.y0)),
            fmt(px(0.0)),
            fmt(py(vp.y1))
        );
    }
    let ticks = |lo: f64, hi: f64| {
        ((lo / vp.tick).ceil() as i64..=(hi / vp.tick).floor() as i64).filter(|&k| k != 0)
    };
    let (ax, ay) = (py(0f64.clamp(vp.y0, vp.y1)), px(0f64.clamp(vp.x0, vp.x1)));
    for k in ticks(vp.x0, vp.x1) {
        let x = px(k as f64 * vp.tick);
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt(x),
            fmt(ax - 3.0),
            fmt(x),
            fmt(ax + 3.0)
        );
    }
    for k in ticks(vp.y0, vp.y1) {
        let y = py(k as f64 * vp.tick);
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            fmt(ay - 3.0),
            fmt(y),
            fmt(ay + 3.0),
            fmt(y)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r##"<g id="labels" font-family="sans-serif" font-size="10" fill="#444">"##
    );
    for k in ticks(vp.x0, vp.x1) {
        let v = k as f64 * vp.tick;
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            fmt(px(v)),
            fmt(ax + 14.0),
            v
        );
    }
    for k in ticks(vp.y0, vp.y1) {
        let v = k as f64 * vp.tick;
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            fmt(ay - 5.0),
            fmt(py(v) + 3.5),
            v
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g id="zeros" fill="black">"#);
    for (cx, cy) in dots(zeros, map) {
        let _ = writeln!(
            s,
            r#"<circle class="zero" cx="{cx}" cy="{cy}" r="{}"/>"#,
            fmt(ZERO_RADIUS)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g id="critical" fill="black">"#);
    for (cx, cy) in dots(critical, map) {
        let _ = writeln!(
            s,
            r#"<circle class="critical" cx="{cx}" cy="{cy}" r="{}"/>"#,
            fmt(CRITICAL_RADIUS)
        );
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!(r#"class="{class}""#)).count()
    }

    #[test]
    fn dot_counts() {
        let f1 = Figure::Fig1.render().unwrap();
        assert_eq!((count(&f1, "zero"), count(&f1, "critical")), (0, 30));
        let l = Figure::Fig2Left.render().unwrap();
        assert_eq!((count(&l, "zero"), count(&l, "critical")), (14, 13));
        let r = Figure::Fig2Right.render().unwrap();
        assert_eq!((count(&r, "zero"), count(&r, "critical")), (32, 31));
    }

    #[test]
    fn fig1_dots_sit_above_the_real_axis() {
        let svg = Figure::Fig1.render().unwrap();
        let vp = Figure::Fig1.viewport();
        let scale = (WIDTH - 2.0 * MARGIN) / (vp.x1 - vp.x0);
        let axis_y = MARGIN + vp.y1 * scale;
        for line in svg.lines().filter(|l| l.contains(r#"class="critical""#)) {
            let cy: f64 = line
                .split(r#"cy=""#)
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap()
                .parse()
                .unwrap();
            assert!(cy < axis_y, "{line}");
        }
    }

    #[test]
    fn rendering_is_repeatable() {
        assert_eq!(
            Figure::Fig2Left.render().unwrap(),
            Figure::Fig2Left.render().unwrap()
        );
    }

    #[test]
    fn parses_names() {
        assert_eq!("fig2-right".parse::<Figure>().unwrap(), Figure::Fig2Right);
        assert!("fig3".parse::<Figure>().is_err());
    }

    #[test]
    fn negative_zero_prints_as_zero() {
        assert_eq!(fmt(-0.0001), "0.000");
        assert_eq!(fmt(-1.5), "-1.500");
    }
}
