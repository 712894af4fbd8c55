//! ASCII and SVG drawings of diagrams.
//!
//! Points sit on a vertical line with 1 at the bottom. At each point height,
//! the arcs passing that point get integer horizontal offsets: negative on
//! the left of the point, positive on the right, and ordered by a fixed
//! left-to-right order of the arcs. That order is a linear extension of the
//! pairwise "forced right of" relation, ties broken by canonical arc order,
//! so arcs never cross.

use std::fmt::Write as _;

use crate::arc::{Arc, Side};
use crate::diagram::Diagram;

/// Horizontal offsets of one arc at each height `a..=b`. Endpoints are 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcLayout {
    pub arc: Arc,
    pub offsets: Vec<i32>,
}

impl ArcLayout {
    pub fn offset_at(&self, height: usize) -> Option<i32> {
        height
            .checked_sub(self.arc.lower())
            .and_then(|i| self.offsets.get(i).copied())
    }

    /// Horizontal position, in offset units, of the drawn curve at a
    /// fractional height. Between consecutive point heights the curve is the
    /// cubic Bezier with both control points at mid-height, so the SVG path
    /// passes through exactly these abscissae.
    pub fn abscissa(&self, height: f64) -> Option<f64> {
        let (a, b) = (self.arc.lower() as f64, self.arc.upper() as f64);
        if height < a || height > b {
            return None;
        }
        let base = (height.floor() as usize).min(self.arc.upper() - 1);
        let x0 = self.offset_at(base)? as f64;
        let x1 = self.offset_at(base + 1)? as f64;
        let s = height - base as f64;
        // y(t) is symmetric with control points at mid-height: solve for t.
        let t = solve_mid_bezier(s);
        let w1 = 3.0 * (1.0 - t) * t * t + t * t * t;
        Some(x0 + (x1 - x0) * w1)
    }
}

/// Inverts `y(t) = 3(1-t)^2 t / 2 + 3(1-t) t^2 / 2 + t^3` on `[0, 1]`.
fn solve_mid_bezier(s: f64) -> f64 {
    let y = |t: f64| 1.5 * (1.0 - t) * (1.0 - t) * t + 1.5 * (1.0 - t) * t * t + t * t * t;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if y(mid) < s {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Left-to-right order of the arcs: Kahn's algorithm on "forced right of",
/// always taking the canonically smallest available arc.
fn horizontal_order(arcs: &[Arc]) -> Vec<usize> {
    let m = arcs.len();
    let mut indegree = vec![0usize; m];
    let mut succ = vec![Vec::new(); m];
    for i in 0..m {
        for j in 0..m {
            if i != j && arcs[j].forced_right_of(&arcs[i]).is_some() {
                succ[i].push(j);
                indegree[j] += 1;
            }
        }
    }
    let mut done = vec![false; m];
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let next = (0..m)
            .find(|&i| !done[i] && indegree[i] == 0)
            .expect("forced order on a valid diagram is acyclic");
        done[next] = true;
        order.push(next);
        for &j in &succ[next] {
            indegree[j] -= 1;
        }
    }
    order
}

pub fn layout(d: &Diagram) -> Vec<ArcLayout> {
    let arcs = d.arcs();
    let order = horizontal_order(arcs);
    let mut rank = vec![0usize; arcs.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }

    let mut layouts: Vec<ArcLayout> = arcs
        .iter()
        .map(|&arc| ArcLayout {
            arc,
            offsets: vec![0; arc.length() + 1],
        })
        .collect();

    for h in 1..=d.n() {
        let mut left: Vec<usize> = Vec::new();
        let mut right: Vec<usize> = Vec::new();
        for (i, arc) in arcs.iter().enumerate() {
            match arc.side_of(h) {
                // The point is right of the arc, so the arc passes on its left.
                Some(Side::Right) => left.push(i),
                Some(Side::Left) => right.push(i),
                None => {}
            }
        }
        left.sort_by_key(|&i| rank[i]);
        right.sort_by_key(|&i| rank[i]);
        debug_assert!(left
            .iter()
            .all(|&l| right.iter().all(|&r| rank[l] < rank[r])));
        let k = left.len() as i32;
        for (pos, &i) in left.iter().enumerate() {
            layouts[i].offsets[h - arcs[i].lower()] = pos as i32 - k;
        }
        for (pos, &i) in right.iter().enumerate() {
            layouts[i].offsets[h - arcs[i].lower()] = pos as i32 + 1;
        }
    }
    layouts
}

fn offset_range(layouts: &[ArcLayout]) -> (i32, i32) {
    layouts
        .iter()
        .flat_map(|l| l.offsets.iter().copied())
        .fold((0, 0), |(lo, hi), o| (lo.min(o), hi.max(o)))
}

pub fn render_ascii(d: &Diagram) -> String {
    let n = d.n();
    let layouts = layout(d);
    let (lo, hi) = offset_range(&layouts);
    let label_width = n.to_string().len();
    let width = (2 * (hi - lo) + 1) as usize;
    let col = |o: i32| (2 * (o - lo)) as usize;

    let mut lines: Vec<String> = Vec::new();
    let emit = |lines: &mut Vec<String>, label: Option<usize>, row: Vec<u8>| {
        let prefix = match label {
            Some(p) => format!("{p:>label_width$} "),
            None => " ".repeat(label_width + 1),
        };
        let body = String::from_utf8(row).expect("ascii");
        lines.push(format!("{prefix}{body}").trim_end().to_string());
    };

    for h in (1..=n).rev() {
        let mut row = vec![b' '; width];
        row[col(0)] = b'o';
        for l in &layouts {
            if let Some(o) = l.offset_at(h) {
                if o != 0 {
                    row[col(o)] = b'|';
                }
            }
        }
        emit(&mut lines, Some(h), row);

        if h == 1 {
            break;
        }
        // Slab between h-1 and h; each arc moves one unit per row.
        let below = h - 1;
        let spans: Vec<(i32, i32)> = layouts
            .iter()
            .filter(|l| l.arc.lower() <= below && l.arc.upper() >= h)
            .map(|l| (l.offset_at(below).unwrap(), l.offset_at(h).unwrap()))
            .collect();
        let steps = spans
            .iter()
            .map(|(x0, x1)| (x1 - x0).unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
            .max(1);
        let mut rows = Vec::with_capacity(steps);
        let mut positions: Vec<i32> = spans.iter().map(|s| s.0).collect();
        for _ in 0..steps {
            let mut row = vec![b' '; width];
            for (pos, &(_, target)) in positions.iter_mut().zip(&spans) {
                let prev = *pos;
                let next = prev + (target - prev).signum();
                match next.cmp(&prev) {
                    std::cmp::Ordering::Greater => row[col(prev) + 1] = b'/',
                    std::cmp::Ordering::Less => row[col(next) + 1] = b'\\',
                    std::cmp::Ordering::Equal => row[col(prev)] = b'|',
                }
                *pos = next;
            }
            rows.push(row);
        }
        for row in rows.into_iter().rev() {
            emit(&mut lines, None, row);
        }
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

const UNIT: i32 = 24;
const ROW: i32 = 48;
const MARGIN: i32 = 24;

pub fn render_svg(d: &Diagram) -> String {
    let n = d.n() as i32;
    let layouts = layout(d);
    let (lo, hi) = offset_range(&layouts);
    let label_room = 2 * UNIT;
    let width = label_room + MARGIN * 2 + UNIT * (hi - lo);
    let height = MARGIN * 2 + ROW * (n - 1);
    let x_of = |o: i32| label_room + MARGIN + UNIT * (o - lo);
    let y_of = |h: usize| MARGIN + ROW * (n - h as i32);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="2">"#);
    for l in &layouts {
        let (a, b) = (l.arc.lower(), l.arc.upper());
        let mut path = format!("M {} {}", x_of(0), y_of(a));
        for h in a..b {
            let (x0, x1) = (
                x_of(l.offset_at(h).unwrap()),
                x_of(l.offset_at(h + 1).unwrap()),
            );
            let mid = (y_of(h) + y_of(h + 1)) / 2;
            let _ = write!(path, " C {x0} {mid} {x1} {mid} {x1} {}", y_of(h + 1));
        }
        let _ = writeln!(out, r#"<path data-arc="{}" d="{path}"/>"#, l.arc);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<g fill="black" font-family="monospace" font-size="14">"#
    );
    for h in 1..=d.n() {
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="4"/>"#, x_of(0), y_of(h));
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{h}</text>"#,
            MARGIN + UNIT,
            y_of(h) + 5
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
