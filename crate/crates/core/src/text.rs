//! Text forms.
//!
//! * Permutation: digits (`157842936`) when `n <= 9`, otherwise
//!   comma-separated (`1,5,7,...`). Both are accepted on input.
//! * Arc: `a-b` for length-1 arcs, `a-b:S` otherwise, where `S` spells the
//!   sides of `a+1, ..., b-1` over `{L, R}`.
//! * Diagram: a header line `n=<N>`, then arcs in canonical order joined by
//!   `;`. On input arcs may also be separated by newlines, and a missing
//!   header means `n` is the largest endpoint.
//! * Arc set: header `n=<N>`, then one arc per line.
//!
//! Parse errors carry the byte offset of the offending input.

use crate::arc::{Arc, Side};
use crate::congruence::ArcSet;
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::permutation::{Permutation, MAX_N};

pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let start = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(Error::parse(start, "expected a permutation"));
    }

    let mut values: Vec<(usize, usize)> = Vec::new();
    if body.contains(',') {
        let mut offset = start;
        for token in body.split(',') {
            let lead = token.len() - token.trim_start().len();
            let trimmed = token.trim();
            let value = trimmed
                .parse::<usize>()
                .map_err(|_| Error::parse(offset + lead, format!("`{trimmed}` is not a number")))?;
            values.push((offset + lead, value));
            offset += token.len() + 1;
        }
    } else {
        for (i, c) in body.char_indices() {
            match c.to_digit(10) {
                Some(d) if d > 0 => values.push((start + i, d as usize)),
                _ => {
                    return Err(Error::parse(
                        start + i,
                        format!("`{c}` is not a digit 1-9 (use commas when n > 9)"),
                    ))
                }
            }
        }
    }

    let n = values.len();
    if n > MAX_N {
        return Err(Error::parse(start, format!("n = {n} exceeds {MAX_N}")));
    }
    let mut seen = vec![false; n + 1];
    for &(offset, v) in &values {
        if v == 0 || v > n {
            return Err(Error::parse(
                offset,
                format!("value {v} is outside 1..={n}"),
            ));
        }
        if seen[v] {
            return Err(Error::parse(offset, format!("value {v} repeated")));
        }
        seen[v] = true;
    }
    Permutation::new(values.into_iter().map(|(_, v)| v).collect())
}

/// Parses one arc on `n` points. `base` is added to reported offsets.
pub fn parse_arc(text: &str, n: usize, base: usize) -> Result<Arc> {
    let (a, rest, after_a) = leading_number(text, 0, base)?;
    if !rest.starts_with('-') {
        return Err(Error::parse(
            base + after_a,
            "expected `-` after the lower endpoint",
        ));
    }
    let (b, rest, after_b) = leading_number(text, after_a + 1, base)?;
    if !(1 <= a && a < b && b <= n) {
        return Err(Error::parse(
            base,
            format!("endpoints {a}-{b} must satisfy 1 <= a < b <= {n}"),
        ));
    }
    let interior = b - a - 1;
    let sides_text = match rest.strip_prefix(':') {
        Some(s) => s,
        None if rest.is_empty() => "",
        None => return Err(Error::parse(base + after_b, "expected `:` or end of arc")),
    };
    if interior == 0 && rest.starts_with(':') {
        return Err(Error::parse(
            base + after_b,
            "an arc of length 1 has no side string",
        ));
    }
    let sides_start = after_b + 1;
    let mut sides = Vec::with_capacity(interior);
    for (i, c) in sides_text.char_indices() {
        sides.push(match c {
            'L' => Side::Left,
            'R' => Side::Right,
            _ => {
                return Err(Error::parse(
                    base + sides_start + i,
                    format!("`{c}` is not L or R"),
                ))
            }
        });
    }
    if sides.len() != interior {
        return Err(Error::parse(
            base + sides_start.min(text.len()),
            format!(
                "arc {a}-{b} needs {interior} side letters, found {}",
                sides.len()
            ),
        ));
    }
    Arc::from_sides(n, a, b, &sides)
}

fn leading_number(text: &str, from: usize, base: usize) -> Result<(usize, &str, usize)> {
    let digits = text[from..]
        .bytes()
        .take_while(|c| c.is_ascii_digit())
        .count();
    if digits == 0 {
        return Err(Error::parse(base + from, "expected a number"));
    }
    let end = from + digits;
    let value = text[from..end]
        .parse()
        .map_err(|_| Error::parse(base + from, "number too large"))?;
    Ok((value, &text[end..], end))
}

/// Splits off an optional `n=<N>` header line. Returns `n`, the body and
/// the body's byte offset.
fn split_header(text: &str) -> Result<(Option<usize>, &str, usize)> {
    let lead = text.len() - text.trim_start().len();
    let rest = &text[lead..];
    let Some(after) = rest.strip_prefix("n=") else {
        return Ok((None, rest, lead));
    };
    let line_end = after.find('\n').unwrap_or(after.len());
    let value_text = after[..line_end].trim_end_matches('\r').trim();
    let n = value_text
        .parse::<usize>()
        .map_err(|_| Error::parse(lead + 2, format!("`{value_text}` is not a valid n")))?;
    if n == 0 || n > MAX_N {
        return Err(Error::parse(lead + 2, format!("n must lie in 1..={MAX_N}")));
    }
    let body_offset = lead + 2 + (line_end + 1).min(after.len());
    Ok((Some(n), &text[body_offset..], body_offset))
}

/// Arc tokens separated by `;` or whitespace, with their byte offsets.
fn arc_tokens(body: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in body.char_indices() {
        let sep = c == ';' || c.is_whitespace();
        match (sep, start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((base + s, &body[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((base + s, &body[s..]));
    }
    out
}

fn upper_endpoint_hint(token: &str) -> Option<usize> {
    let (_, rest) = token.split_once('-')?;
    let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
    digits.parse().ok()
}

pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let (header, body, body_offset) = split_header(text)?;
    let tokens = arc_tokens(body, body_offset);
    let n = match header {
        Some(n) => n,
        None => tokens
            .iter()
            .filter_map(|(_, t)| upper_endpoint_hint(t))
            .max()
            .ok_or_else(|| Error::parse(body_offset, "expected `n=<N>` or at least one arc"))?,
    };
    let arcs = tokens
        .into_iter()
        .map(|(offset, token)| parse_arc(token, n, offset))
        .collect::<Result<Vec<_>>>()?;
    Diagram::new(n, arcs)
}

pub fn parse_arcset(text: &str) -> Result<ArcSet> {
    let (header, body, body_offset) = split_header(text)?;
    let n = header.ok_or_else(|| Error::parse(body_offset, "expected `n=<N>` header"))?;
    let mut arcs = Vec::new();
    let mut offset = body_offset;
    for line in body.split('\n') {
        let lead = line.len() - line.trim_start().len();
        let token = line.trim();
        if !token.is_empty() {
            arcs.push(parse_arc(token, n, offset + lead)?);
        }
        offset += line.len() + 1;
    }
    ArcSet::new(n, arcs)
}

pub fn format_diagram(d: &Diagram) -> String {
    format!("n={}\n{d}", d.n())
}

pub fn format_arcset(set: &ArcSet) -> String {
    let mut out = format!("n={}", set.n());
    for arc in set {
        out.push('\n');
        out.push_str(&arc.to_string());
    }
    out
}
