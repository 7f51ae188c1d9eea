//! Disk counting for the resolved plat front.
//!
//! An admissible disk with positive corner at a generator lies to the left
//! of it. Its boundary is an upper and a lower path running leftward along
//! the front from the positive corner until they meet at a left cusp. A path
//! may switch strands at a crossing only through a convex corner: the upper
//! path at the bottom quadrant (it stays at the lower position) and the
//! lower path at the top quadrant (it stays at the upper position). These
//! switches are the negative corners. The paths never touch in between.
//!
//! Each right cusp additionally bounds the small loop disk of the
//! resolution, contributing a constant term.
//!
//! The word of a disk reads its negative corners counterclockwise from the
//! positive corner: upper-path corners right to left, then lower-path
//! corners left to right.
//!
//! Signs: a bottom-quadrant corner at a crossing of even degree contributes
//! `-1`; all other corners contribute `+1`. The basepoint sits on the loop
//! of one right cusp, and that loop disk carries `t^-1` if the orientation
//! runs down through the cusp, `t` otherwise.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{compute_gradings, GradedDga, Grading};
use crate::error::{Error, Result};
use crate::freealg::{Coefficient, Gen, Poly, Ring, Word};
use crate::front::{FrontDiagram, GeneratorKind};

pub const DEFAULT_DISK_LIMIT: usize = 1 << 22;

/// Where the `t` basepoint goes. The default reproduces the published
/// Z[t,t^-1] differential of m(10_139).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasepointPolicy {
    #[default]
    BottomRightCusp,
    TopRightCusp,
    /// The `i`-th right cusp counted from the top, 1-based.
    RightCusp(usize),
}

impl BasepointPolicy {
    pub fn cusp_index(self, cusps: usize) -> usize {
        match self {
            BasepointPolicy::BottomRightCusp => cusps - 1,
            BasepointPolicy::TopRightCusp => 0,
            BasepointPolicy::RightCusp(i) => i.clamp(1, cusps) - 1,
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "bottom" => Some(BasepointPolicy::BottomRightCusp),
            "top" => Some(BasepointPolicy::TopRightCusp),
            _ => s.strip_prefix("cusp:").and_then(|n| n.parse().ok()).map(BasepointPolicy::RightCusp),
        }
    }
}

/// One admissible disk. Corners are crossing columns (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disk {
    pub generator: Gen,
    /// Bottom-quadrant corners, right to left.
    pub upper_corners: Vec<usize>,
    /// Top-quadrant corners, left to right.
    pub lower_corners: Vec<usize>,
    /// The small loop disk at a right cusp.
    pub is_loop: bool,
}

impl Disk {
    pub fn word(&self) -> Word {
        self.upper_corners.iter().chain(&self.lower_corners).map(|&c| Gen::from_index(c)).collect()
    }
}

struct Search<'a> {
    word: &'a [usize],
    generator: Gen,
    limit: usize,
    visited: usize,
    upper: Vec<usize>,
    lower: Vec<usize>,
    out: Vec<Disk>,
}

impl Search<'_> {
    /// Paths are at positions `u < l` just right of column `col`.
    fn walk(&mut self, col: usize, u: usize, l: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(Error::DiskGuard { generator: self.generator, limit: self.limit });
        }
        if col == 0 {
            if u % 2 == 1 && l == u + 1 {
                let mut lower = self.lower.clone();
                lower.reverse();
                self.out.push(Disk {
                    generator: self.generator,
                    upper_corners: self.upper.clone(),
                    lower_corners: lower,
                    is_loop: false,
                });
            }
            return Ok(());
        }
        let c = col - 1;
        let k = self.word[c];
        // (next position, corner?)
        let up_moves: &[(usize, bool)] = if u == k {
            &[(k + 1, false)]
        } else if u == k + 1 {
            &[(k, false), (k + 1, true)]
        } else {
            &[(u, false)]
        };
        let lo_moves: &[(usize, bool)] = if l == k {
            &[(k + 1, false), (k, true)]
        } else if l == k + 1 {
            &[(k, false)]
        } else {
            &[(l, false)]
        };
        for &(nu, cu) in up_moves {
            for &(nl, cl) in lo_moves {
                if nu >= nl {
                    continue;
                }
                if cu {
                    self.upper.push(c);
                }
                if cl {
                    self.lower.push(c);
                }
                let r = self.walk(c, nu, nl);
                if cu {
                    self.upper.pop();
                }
                if cl {
                    self.lower.pop();
                }
                r?;
            }
        }
        Ok(())
    }
}

/// All admissible disks with positive corner at `g`, loop disk included.
pub fn enumerate_disks(front: &FrontDiagram, g: Gen, limit: usize) -> Result<Vec<Disk>> {
    let (col, u, l) = match front.kind(g) {
        GeneratorKind::Crossing(c) => (c.column, c.upper, c.upper + 1),
        GeneratorKind::RightCusp(rc) => (front.word().len(), rc.upper, rc.upper + 1),
    };
    let mut s = Search {
        word: front.word(),
        generator: g,
        limit,
        visited: 0,
        upper: Vec::new(),
        lower: Vec::new(),
        out: Vec::new(),
    };
    s.walk(col, u, l)?;
    if matches!(front.kind(g), GeneratorKind::RightCusp(_)) {
        s.out.push(Disk { generator: g, upper_corners: vec![], lower_corners: vec![], is_loop: true });
    }
    Ok(s.out)
}

/// The differential of the front's DGA over `C`. Over Z/2 disks are counted
/// mod 2 and `t = 1`; over Z[t,t^-1] the front must be a knot.
pub fn compute_differential<C: Coefficient>(front: &FrontDiagram, basepoint: BasepointPolicy) -> Result<GradedDga<C>> {
    compute_differential_with_limit(front, basepoint, DEFAULT_DISK_LIMIT)
}

pub fn compute_differential_with_limit<C: Coefficient>(
    front: &FrontDiagram,
    basepoint: BasepointPolicy,
    limit: usize,
) -> Result<GradedDga<C>> {
    let grading: Option<Grading> = match C::RING {
        Ring::LaurentZ => Some(compute_gradings(front)?),
        Ring::Z2 => compute_gradings(front).ok(),
    };
    let basepoint_cusp = front.crossings().len() + basepoint.cusp_index(front.right_cusps().len());
    let loop_exp = match C::RING {
        Ring::LaurentZ => {
            let trace = front.trace()?;
            let upper = front.right_cusps()[basepoint_cusp - front.crossings().len()].upper;
            let downward = trace
                .cusps
                .iter()
                .find(|v| v.side == crate::front::Side::Right && v.upper == upper)
                .map(|v| v.downward)
                .unwrap_or(true);
            if downward {
                -1
            } else {
                1
            }
        }
        Ring::Z2 => 0,
    };
    let even: Vec<bool> = match &grading {
        Some(gr) => gr.degrees.iter().map(|d| d.rem_euclid(2) == 0).collect(),
        None => vec![false; front.generator_count()],
    };

    let gens: Vec<Gen> = front.generators().collect();
    let diff: Result<Vec<Poly<C>>> = gens
        .par_iter()
        .map(|&g| {
            let mut p = Poly::zero();
            for disk in enumerate_disks(front, g, limit)? {
                let coef = if disk.is_loop {
                    let e = if g.index() == basepoint_cusp { loop_exp } else { 0 };
                    C::signed_monomial(false, e)
                } else {
                    let negs = disk.upper_corners.iter().filter(|&&c| even[c]).count();
                    C::signed_monomial(negs % 2 == 1, 0)
                };
                p.add_term(disk.word(), coef);
            }
            Ok(p)
        })
        .collect();
    Ok(GradedDga::new(diff?, grading))
}
