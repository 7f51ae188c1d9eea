//! Linear operators on finitely supported Z/2 sequences.
//!
//! The space ℋ has basis `e_0, e_1, ...`. It splits as ℋ_1 ⊕ ℋ_2 with ℋ_1
//! spanned by the even basis vectors and ℋ_2 by the odd ones, identified
//! with ℋ by `n ↦ 2n` and `n ↦ 2n + 1`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::freealg::{Gen, Names, Word, Z2Poly};

/// A finitely supported sequence, stored as its support.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqVec(BTreeSet<u64>);

impl SeqVec {
    pub fn zero() -> Self {
        SeqVec::default()
    }

    pub fn basis(n: u64) -> Self {
        SeqVec(BTreeSet::from([n]))
    }

    pub fn from_support<I: IntoIterator<Item = u64>>(it: I) -> Self {
        let mut v = SeqVec::zero();
        for n in it {
            v.toggle(n);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn toggle(&mut self, n: u64) {
        if !self.0.remove(&n) {
            self.0.insert(n);
        }
    }

    pub fn add_assign(&mut self, other: &SeqVec) {
        for n in other.support() {
            self.toggle(n);
        }
    }
}

impl fmt::Display for SeqVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.support().map(|n| format!("e_{n}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The four basic shift maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shift {
    /// `e_n ↦ e_{2n+1}`: ℋ onto ℋ_2.
    A,
    /// `e_{2n} ↦ e_n`, `e_{2n+1} ↦ 0`: projection from ℋ_1.
    B,
    /// `e_{2n+1} ↦ e_n`, `e_{2n} ↦ 0`: projection from ℋ_2.
    C,
    /// `e_n ↦ e_{2n}`: ℋ onto ℋ_1.
    D,
}

impl Shift {
    pub const ALL: [Shift; 4] = [Shift::A, Shift::B, Shift::C, Shift::D];

    pub fn apply(self, n: u64) -> Option<u64> {
        match self {
            Shift::A => Some(2 * n + 1),
            Shift::B => n.is_multiple_of(2).then_some(n / 2),
            Shift::C => (n % 2 == 1).then_some(n / 2),
            Shift::D => Some(2 * n),
        }
    }

    pub fn letter(self) -> Gen {
        Gen::new(self as usize + 1)
    }

    pub fn from_letter(g: Gen) -> Option<Shift> {
        Shift::ALL.get(g.index()).copied()
    }
}

/// Names `a, b, c, d` for operator expressions.
pub fn shift_names() -> Names {
    Names::custom(&["a", "b", "c", "d"])
}

/// A linear combination of composites of shift maps, written as a
/// polynomial in `a, b, c, d`. A word acts right to left, so `ac` is
/// `a ∘ c`; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqOp(Z2Poly);

impl SeqOp {
    pub fn zero() -> Self {
        SeqOp(Z2Poly::zero())
    }

    pub fn identity() -> Self {
        SeqOp(Z2Poly::one())
    }

    pub fn shift(s: Shift) -> Self {
        SeqOp(Z2Poly::gen(s.letter()))
    }

    /// An expression in `a, b, c, d`. Panics on other letters.
    pub fn from_expr(p: Z2Poly) -> Self {
        assert!(p.generators().iter().all(|g| g.label() <= 4), "operator letters are a, b, c, d");
        SeqOp(p)
    }

    pub fn parse(text: &str) -> crate::error::Result<Self> {
        let p = crate::freealg::parse_poly(text, &shift_names())?.to_z2();
        Ok(SeqOp(p))
    }

    pub fn expr(&self) -> &Z2Poly {
        &self.0
    }

    pub fn is_zero_expr(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &SeqOp) -> SeqOp {
        let mut p = self.0.clone();
        p += other.0.clone();
        SeqOp(p)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &SeqOp) -> SeqOp {
        SeqOp(&self.0 * &other.0)
    }

    pub fn apply_basis(&self, n: u64) -> SeqVec {
        let mut out = SeqVec::zero();
        for w in self.0.words() {
            if let Some(m) = apply_word(w, n) {
                out.toggle(m);
            }
        }
        out
    }

    pub fn apply(&self, v: &SeqVec) -> SeqVec {
        let mut out = SeqVec::zero();
        for n in v.support() {
            out.add_assign(&self.apply_basis(n));
        }
        out
    }

    /// Whether the operator vanishes on `e_0, ..., e_{n-1}`.
    pub fn vanishes_on_prefix(&self, n: u64) -> bool {
        (0..n).all(|k| self.apply_basis(k).is_zero())
    }
}

fn apply_word(w: &Word, n: u64) -> Option<u64> {
    w.letters().iter().rev().try_fold(n, |k, &g| Shift::from_letter(g).expect("shift letter").apply(k))
}

impl fmt::Display for SeqOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.render(&shift_names()))
    }
}

impl fmt::Debug for SeqOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeqOp({self})")
    }
}

/// The operators `a, b, c, d` in that order.
pub fn standard_shift_operators() -> [SeqOp; 4] {
    Shift::ALL.map(SeqOp::shift)
}

/// Evaluate an operator on a finitely supported sequence.
pub fn apply_op(op: &SeqOp, v: &SeqVec) -> SeqVec {
    op.apply(v)
}
