//! The published differentials of m(10_161) over Z/2 and m(10_139) over
//! Z[t,t^-1], embedded as text tables.

use super::{compute_gradings, GradedDga};
use crate::error::{Error, Result};
use crate::freealg::{parse_indexed, Coefficient, Gen, Laurent, Poly, Z2};
use crate::front::build_front;
use crate::knots;

const M10_161_Z2: &str = include_str!("../../data/m10_161_z2.txt");
const M10_139_LAURENT: &str = include_str!("../../data/m10_139_laurent.txt");

/// Parse lines `d x_i = <polynomial>`. Every generator `x_1..x_n` must
/// appear exactly once; blank lines and lines starting with `#` are skipped.
pub fn parse_differential<C: Coefficient>(text: &str) -> Result<GradedDga<C>> {
    let mut entries: Vec<Option<Poly<C>>> = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let start = offset;
        offset += line.len() + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Parse { pos: start, msg: msg.to_string() };
        let rest = line.strip_prefix('d').ok_or_else(|| err("expected `d x_i = ...`"))?;
        let (lhs, rhs) = rest.split_once('=').ok_or_else(|| err("missing `=`"))?;
        let lhs = parse_indexed(lhs)?;
        let g = match lhs.terms().next() {
            Some((w, c)) if lhs.len() == 1 && w.len() == 1 && c.is_one() => w.letters()[0],
            _ => return Err(err("left side must be a single generator")),
        };
        let value = parse_indexed(rhs).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: start + pos, msg },
            other => other,
        })?;
        let value = Poly::from_terms(value.terms().map(|(w, c)| (w.clone(), C::from_laurent(c))));
        if entries.len() <= g.index() {
            entries.resize(g.index() + 1, None);
        }
        if entries[g.index()].replace(value).is_some() {
            return Err(err("generator defined twice"));
        }
    }
    let diff = entries
        .into_iter()
        .enumerate()
        .map(|(i, p)| p.ok_or(Error::UnassignedGenerator(Gen::from_index(i))))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedDga::new(diff, None))
}

/// The published Z/2 differential of m(10_161), graded by its front.
pub fn appendix_m10_161() -> GradedDga<Z2> {
    let dga = parse_differential::<Z2>(M10_161_Z2).expect("embedded table parses");
    let front = build_front(knots::builtin("m10_161").expect("builtin knot"));
    dga.with_grading(compute_gradings(&front).expect("knot front"))
}

/// The published Z[t,t^-1] differential of m(10_139), graded by its front.
pub fn appendix_m10_139() -> GradedDga<Laurent> {
    let dga = parse_differential::<Laurent>(M10_139_LAURENT).expect("embedded table parses");
    let front = build_front(knots::builtin("m10_139").expect("builtin knot"));
    dga.with_grading(compute_gradings(&front).expect("knot front"))
}
