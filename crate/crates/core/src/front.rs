//! Plat braids and their front diagrams.
//!
//! Strands are numbered 1 (top) to `strands` (bottom). Left and right cusps
//! join strands `2i-1` and `2i`. The letter `k` is a crossing of the strands
//! in positions `k` and `k+1`; letters occupy successive columns.
//!
//! Generators are labelled `x_1..x_c` for the crossings in word order and
//! `x_{c+1}..x_{c+m}` for the right cusps from top to bottom.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::Gen;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlatBraid {
    strands: usize,
    word: Vec<usize>,
}

impl PlatBraid {
    pub fn new(strands: usize, word: Vec<usize>) -> Result<Self> {
        if strands < 2 || strands % 2 == 1 {
            return Err(Error::OddStrands(strands));
        }
        if let Some(&bad) = word.iter().find(|&&k| k < 1 || k >= strands) {
            return Err(Error::LetterOutOfRange { letter: bad as i64, strands });
        }
        Ok(PlatBraid { strands, word })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }
}

/// Normalized comma-separated word, e.g. `4, 5, 2`.
impl fmt::Display for PlatBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Parse a comma- or whitespace-separated braid word. Without an explicit
/// strand count, the smallest even count fitting every letter is used.
pub fn parse_plat_word(text: &str, strands: Option<usize>) -> Result<PlatBraid> {
    let mut word = Vec::new();
    let mut offset = 0;
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
        let pos = offset;
        offset += tok.len() + 1;
        if tok.is_empty() {
            continue;
        }
        let v: i64 = tok.parse().map_err(|_| Error::Parse { pos, msg: format!("`{tok}` is not an integer") })?;
        word.push(v);
    }
    let strands = strands.unwrap_or_else(|| {
        let max = word.iter().copied().max().unwrap_or(1).max(1) as usize;
        (max + 1).next_multiple_of(2)
    });
    if strands < 2 || strands % 2 == 1 {
        return Err(Error::OddStrands(strands));
    }
    if let Some(&bad) = word.iter().find(|&&k| k < 1 || k >= strands as i64) {
        return Err(Error::LetterOutOfRange { letter: bad, strands });
    }
    PlatBraid::new(strands, word.into_iter().map(|k| k as usize).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub column: usize,
    /// Upper strand position; the crossing swaps positions `upper` and `upper + 1`.
    pub upper: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RightCusp {
    /// Upper strand position (odd); the cusp joins `upper` and `upper + 1`.
    pub upper: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Crossing(Crossing),
    RightCusp(RightCusp),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontDiagram {
    braid: PlatBraid,
    crossings: Vec<Crossing>,
    right_cusps: Vec<RightCusp>,
}

pub fn build_front(braid: PlatBraid) -> FrontDiagram {
    let crossings = braid.word.iter().enumerate().map(|(column, &upper)| Crossing { column, upper }).collect();
    let right_cusps = (0..braid.strands / 2).map(|i| RightCusp { upper: 2 * i + 1 }).collect();
    FrontDiagram { braid, crossings, right_cusps }
}

/// Direction in which an oriented strand runs across the front.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Rightward,
    Leftward,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspVisit {
    pub side: Side,
    /// Upper strand position of the cusp.
    pub upper: usize,
    pub downward: bool,
}

/// The knot traced once around under the fixed orientation: the topmost
/// left cusp is traversed downward.
///
/// Braid strands are identified by their left-end position (0-based).
/// Each strand carries one direction and one Maslov potential; the upper
/// strand of the topmost left cusp has potential 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotTrace {
    pub direction: Vec<Direction>,
    pub potential: Vec<i64>,
    pub cusps: Vec<CuspVisit>,
    /// Amount by which the potential fails to close up; equals `-2r`.
    pub closing_defect: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub r: i64,
}

impl FrontDiagram {
    pub fn braid(&self) -> &PlatBraid {
        &self.braid
    }

    pub fn strands(&self) -> usize {
        self.braid.strands
    }

    pub fn word(&self) -> &[usize] {
        &self.braid.word
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn right_cusps(&self) -> &[RightCusp] {
        &self.right_cusps
    }

    pub fn generator_count(&self) -> usize {
        self.crossings.len() + self.right_cusps.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        (0..self.generator_count()).map(Gen::from_index)
    }

    pub fn kind(&self, g: Gen) -> GeneratorKind {
        let i = g.index();
        if i < self.crossings.len() {
            GeneratorKind::Crossing(self.crossings[i])
        } else {
            GeneratorKind::RightCusp(self.right_cusps[i - self.crossings.len()])
        }
    }

    /// Generator of the right cusp with upper position `upper`.
    pub fn cusp_generator(&self, upper: usize) -> Gen {
        Gen::from_index(self.crossings.len() + (upper - 1) / 2)
    }

    /// For each column, the braid strands (0-based left positions) meeting
    /// there: `(over, under)` where `over` enters from the upper-left and so
    /// has the more negative slope. Also returns, for every strand, its
    /// 0-based right-end position.
    pub fn strand_table(&self) -> (Vec<(usize, usize)>, Vec<usize>) {
        let n = self.strands();
        let mut at: Vec<usize> = (0..n).collect();
        let mut cols = Vec::with_capacity(self.crossings.len());
        for c in &self.crossings {
            let k = c.upper - 1;
            cols.push((at[k], at[k + 1]));
            at.swap(k, k + 1);
        }
        let mut right = vec![0; n];
        for (p, &s) in at.iter().enumerate() {
            right[s] = p;
        }
        (cols, right)
    }

    /// Number of components of the plat closure.
    pub fn components(&self) -> usize {
        let n = self.strands();
        let (_, right) = self.strand_table();
        let mut by_right = vec![0; n];
        for (s, &p) in right.iter().enumerate() {
            by_right[p] = s;
        }
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut s = start;
            loop {
                seen[s] = true;
                let partner = s ^ 1;
                seen[partner] = true;
                s = by_right[right[partner] ^ 1];
                if seen[s] {
                    break;
                }
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    pub fn trace(&self) -> Result<KnotTrace> {
        let components = self.components();
        if components != 1 {
            return Err(Error::NotAKnot { components });
        }
        let n = self.strands();
        let (_, right) = self.strand_table();
        let mut by_right = vec![0; n];
        for (s, &p) in right.iter().enumerate() {
            by_right[p] = s;
        }
        let mut direction = vec![Direction::Rightward; n];
        let mut potential = vec![0i64; n];
        direction[0] = Direction::Leftward;
        potential[0] = 0;
        potential[1] = -1;
        let mut cusps = vec![CuspVisit { side: Side::Left, upper: 1, downward: true }];

        let mut cur = 1;
        let mut dir = Direction::Rightward;
        loop {
            let (p, q, next, side) = match dir {
                Direction::Rightward => {
                    let p = right[cur];
                    let q = p ^ 1;
                    (p, q, by_right[q], Side::Right)
                }
                Direction::Leftward => (cur, cur ^ 1, cur ^ 1, Side::Left),
            };
            let mu = potential[cur] + if q < p { 1 } else { -1 };
            let next_dir = match dir {
                Direction::Rightward => Direction::Leftward,
                Direction::Leftward => Direction::Rightward,
            };
            if next == 0 && next_dir == Direction::Leftward {
                cusps.push(CuspVisit { side, upper: p.min(q) + 1, downward: q > p });
                let closing_defect = mu - potential[0];
                return Ok(KnotTrace { direction, potential, cusps, closing_defect });
            }
            cusps.push(CuspVisit { side, upper: p.min(q) + 1, downward: q > p });
            direction[next] = next_dir;
            potential[next] = mu;
            cur = next;
            dir = next_dir;
        }
    }

    /// Rotation number under the fixed orientation (topmost left cusp
    /// traversed downward); reversing the orientation negates it.
    pub fn rotation_number(&self) -> Result<i64> {
        let tr = self.trace()?;
        let down = tr.cusps.iter().filter(|c| c.downward).count() as i64;
        let up = tr.cusps.len() as i64 - down;
        Ok((down - up) / 2)
    }
}

/// `tb = writhe - #right cusps`, `r = (#down cusps - #up cusps) / 2`.
pub fn classical_invariants(front: &FrontDiagram) -> Result<ClassicalInvariants> {
    let tr = front.trace()?;
    let (cols, _) = front.strand_table();
    let writhe: i64 = cols.iter().map(|&(a, b)| if tr.direction[a] == tr.direction[b] { 1 } else { -1 }).sum();
    let tb = writhe - front.right_cusps.len() as i64;
    Ok(ClassicalInvariants { tb, r: front.rotation_number()? })
}
