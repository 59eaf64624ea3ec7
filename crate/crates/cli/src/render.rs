//! SVG drawings of tilings.
//!
//! Tile vertices come from the exact integer embedding. For the default
//! equilateral drawing each integer vertex is re-expressed by walking tile
//! edges from the left boundary, replacing `d_i` by a unit vector.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::fmt::Write;

use elnitsky::tiling::Point;
use elnitsky::{Tiling, ValuePair};

const MARGIN: f64 = 12.0;
const GAP: f64 = 24.0;
const DOT_RADIUS: f64 = 3.0;
const SHADE: &str = "#cccccc";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    pub equilateral: bool,
    pub shade_forced: bool,
    pub scale: f64,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            equilateral: true,
            shade_forced: false,
            scale: 40.0,
        }
    }
}

type Xy = (f64, f64);

/// Unit vector for side label `i` of an `n`-gon, in screen coordinates (y down).
pub fn unit_direction(i: usize, n: usize) -> Xy {
    let theta = -PI / 2.0 + (i as f64 - (n as f64 + 1.0) / 2.0) * PI / (n as f64 + 1.0);
    (theta.cos(), -theta.sin())
}

fn label_of(d: Point, n: usize) -> usize {
    ((d.x + n as i64 + 1) / 2) as usize
}

struct Drawing {
    tiles: Vec<(ValuePair, [Xy; 4])>,
    top: Xy,
    bottom: Xy,
}

impl Drawing {
    fn of(t: &Tiling, opts: &RenderOptions) -> Drawing {
        let n = t.owner.len();
        let emb = t.embedding();
        let s = opts.scale;
        let mut at: BTreeMap<Point, Xy> = BTreeMap::new();
        if opts.equilateral {
            let mut p = (0.0, 0.0);
            at.insert(emb.left[0], p);
            for i in 1..=n {
                let (dx, dy) = unit_direction(i, n);
                p = (p.0 + dx * s, p.1 + dy * s);
                at.insert(emb.left[i], p);
            }
            // every tile's corner lies on the left boundary or on an earlier tile
            for tile in &t.tiles {
                let c = at[&tile.corner];
                let (a, b) = tile.spanned_by;
                let ua = unit_direction(label_of(a, n), n);
                let ub = unit_direction(label_of(b, n), n);
                at.insert(tile.corner + a, (c.0 + ua.0 * s, c.1 + ua.1 * s));
                at.insert(tile.corner + b, (c.0 + ub.0 * s, c.1 + ub.1 * s));
                at.insert(
                    tile.corner + a + b,
                    (c.0 + (ua.0 + ub.0) * s, c.1 + (ua.1 + ub.1) * s),
                );
            }
        }
        let place = |p: Point| -> Xy {
            if opts.equilateral {
                at[&p]
            } else {
                (p.x as f64 * s / 2.0, -p.y as f64 * s / 2.0)
            }
        };
        let mut tiles: Vec<_> = t
            .tiles
            .iter()
            .map(|tile| (tile.label, tile.vertices().map(place)))
            .collect();
        tiles.sort_by_key(|(label, _)| *label);
        Drawing {
            tiles,
            top: place(emb.top()),
            bottom: place(emb.bottom()),
        }
    }

    fn points(&self) -> impl Iterator<Item = Xy> + '_ {
        self.tiles
            .iter()
            .flat_map(|(_, v)| v.iter().copied())
            .chain([self.top, self.bottom])
    }

    fn bounds(&self) -> (Xy, Xy) {
        self.points().fold(
            (
                (f64::INFINITY, f64::INFINITY),
                (f64::NEG_INFINITY, f64::NEG_INFINITY),
            ),
            |((x0, y0), (x1, y1)), (x, y)| ((x0.min(x), y0.min(y)), (x1.max(x), y1.max(y))),
        )
    }
}

/// Rounds to three decimals and drops trailing zeros, so output is byte-stable.
fn num(x: f64) -> String {
    let s = format!("{:.3}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// One SVG document holding `tilings` side by side, left to right.
///
/// Each tile becomes one `<polygon>`; tiles in `forced` are shaded when
/// `opts.shade_forced` is set. Top and bottom vertices get a dot.
pub fn render_svg(
    tilings: &[&Tiling],
    forced: &BTreeSet<ValuePair>,
    opts: &RenderOptions,
) -> String {
    let drawings: Vec<Drawing> = tilings.iter().map(|t| Drawing::of(t, opts)).collect();
    let mut body = String::new();
    let mut x = MARGIN;
    let mut height: f64 = 0.0;
    for (i, (d, t)) in drawings.iter().zip(tilings).enumerate() {
        let ((x0, y0), (x1, y1)) = d.bounds();
        let (dx, dy) = (x - x0, MARGIN - y0);
        let _ = writeln!(
            body,
            r#"  <g id="tiling-{i}" data-word="{}" transform="translate({},{})">"#,
            word_attr(t),
            num(dx),
            num(dy)
        );
        for (label, v) in &d.tiles {
            let fill = if opts.shade_forced && forced.contains(label) {
                SHADE
            } else {
                "#ffffff"
            };
            let pts: Vec<String> = v
                .iter()
                .map(|&(px, py)| format!("{},{}", num(px), num(py)))
                .collect();
            let _ = writeln!(
                body,
                r##"    <polygon data-label="{},{}" points="{}" fill="{fill}" stroke="#000000" stroke-width="1" stroke-linejoin="round"/>"##,
                label.low,
                label.high,
                pts.join(" ")
            );
        }
        for (cx, cy) in [d.top, d.bottom] {
            let _ = writeln!(
                body,
                r##"    <circle cx="{}" cy="{}" r="{}" fill="#000000"/>"##,
                num(cx),
                num(cy),
                num(DOT_RADIUS)
            );
        }
        body.push_str("  </g>\n");
        x += (x1 - x0) + GAP;
        height = height.max(y1 - y0);
    }
    let width = if drawings.is_empty() {
        2.0 * MARGIN
    } else {
        x - GAP + MARGIN
    };
    let height = height + 2.0 * MARGIN;
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
         {body}</svg>\n",
        w = num(width),
        h = num(height),
    )
}

fn word_attr(t: &Tiling) -> String {
    let letters: Vec<String> = t
        .class
        .canonical()
        .letters()
        .iter()
        .map(|a| a.to_string())
        .collect();
    letters.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use elnitsky::tiling::tilings;
    use elnitsky::{Limits, Permutation};

    fn drawings(w: &str, opts: &RenderOptions) -> Vec<Drawing> {
        let w: Permutation = w.parse().unwrap();
        tilings(&w, &Limits::default())
            .unwrap()
            .iter()
            .map(|t| Drawing::of(t, opts))
            .collect()
    }

    fn close(a: Xy, b: Xy) -> bool {
        (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
    }

    #[test]
    fn equilateral_tiles_are_unit_rhombi() {
        let opts = RenderOptions {
            scale: 1.0,
            ..RenderOptions::default()
        };
        for w in ["21", "321", "34251", "3614725", "4321"] {
            for d in drawings(w, &opts) {
                for (_, v) in &d.tiles {
                    for k in 0..4 {
                        let (a, b) = (v[k], v[(k + 1) % 4]);
                        let len = ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt();
                        assert!((len - 1.0).abs() < 1e-9, "{w}: side {len}");
                    }
                    // opposite sides parallel and equal
                    assert!(close(
                        (v[1].0 - v[0].0, v[1].1 - v[0].1),
                        (v[2].0 - v[3].0, v[2].1 - v[3].1)
                    ));
                }
            }
        }
    }

    #[test]
    fn equilateral_bottom_is_sum_of_units() {
        let opts = RenderOptions {
            scale: 1.0,
            ..RenderOptions::default()
        };
        let n = 5;
        let sum = (1..=n)
            .map(|i| unit_direction(i, n))
            .fold((0.0, 0.0), |a, d| (a.0 + d.0, a.1 + d.1));
        for d in drawings("34251", &opts) {
            assert!(close(d.top, (0.0, 0.0)));
            assert!(close(d.bottom, sum));
            assert!(d.bottom.1 > 0.0);
        }
    }

    #[test]
    fn unit_directions_turn_left_to_right() {
        let n = 4;
        let xs: Vec<f64> = (1..=n).map(|i| unit_direction(i, n).0).collect();
        assert!(xs.windows(2).all(|p| p[0] < p[1]));
        assert!((1..=n).all(|i| unit_direction(i, n).1 > 0.0));
    }

    #[test]
    fn number_formatting() {
        assert_eq!(num(1.0), "1");
        assert_eq!(num(-0.0001), "0");
        assert_eq!(num(2.5), "2.5");
        assert_eq!(num(-1.23456), "-1.235");
    }
}
