//! Two-sided subword rewriting over Z/2.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::freealg::{Gen, Names, Word, Z2Poly};

/// An oriented relation `lhs = rhs`, where every word of `rhs` is smaller
/// than `lhs` in the degree-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Z2Poly,
}

impl RewriteRule {
    /// Orient a nonzero polynomial by its leading word.
    pub fn from_poly(p: &Z2Poly) -> Option<Self> {
        let (lhs, _) = p.leading()?;
        let lhs = lhs.clone();
        let mut rhs = p.clone();
        rhs += Z2Poly::word(lhs.clone());
        Some(RewriteRule { lhs, rhs })
    }

    /// The relation as a polynomial `lhs + rhs`.
    pub fn poly(&self) -> Z2Poly {
        let mut p = self.rhs.clone();
        p += Z2Poly::word(self.lhs.clone());
        p
    }

    pub fn render(&self, names: &Names) -> String {
        format!("{} -> {}", names.word(&self.lhs), self.rhs.render(names))
    }
}

/// A Z/2 combination of products `left · r_i · right` of input relations,
/// stored as a set of `(left, i, right)` triples (repeats cancel).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance(BTreeSet<(Word, usize, Word)>);

impl Provenance {
    pub fn relation(i: usize) -> Self {
        let mut s = BTreeSet::new();
        s.insert((Word::one(), i, Word::one()));
        Provenance(s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn triples(&self) -> impl Iterator<Item = &(Word, usize, Word)> {
        self.0.iter()
    }

    fn toggle(&mut self, t: (Word, usize, Word)) {
        if !self.0.remove(&t) {
            self.0.insert(t);
        }
    }

    /// `self += left · other · right`
    pub fn add_sandwich(&mut self, other: &Provenance, left: &[Gen], right: &[Gen]) {
        for (a, i, b) in &other.0 {
            let a = Word::from_slice(left).concat(a);
            let b = b.concat(&Word::from_slice(right));
            self.toggle((a, *i, b));
        }
    }

    /// Expand against the relations the indices refer to.
    pub fn expand(&self, relations: &[Z2Poly]) -> Z2Poly {
        let mut out = Z2Poly::zero();
        for (a, i, b) in &self.0 {
            out += relations[*i].sandwich(a, b);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Slot {
    pub rule: RewriteRule,
    pub origin: Option<Provenance>,
}

/// Completion state of a rewrite system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompletionStatus {
    /// Built directly from rules; no completion was attempted.
    Uncompleted,
    /// Every overlap resolves; normal forms decide ideal membership.
    Complete,
    /// Overlaps beyond the degree cap (or the rule budget) were skipped.
    IncompleteAtCap,
    /// The ideal contains 1.
    Trivial,
}

/// A set of rewrite rules indexed for subword lookup.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    pub(crate) slots: Vec<Option<Slot>>,
    index: HashMap<Word, usize>,
    lengths: BTreeMap<usize, usize>,
    pub(crate) cap: usize,
    pub(crate) status: CompletionStatus,
    pub(crate) unit_origin: Option<Provenance>,
}

impl Default for RewriteSystem {
    fn default() -> Self {
        RewriteSystem::new()
    }
}

impl RewriteSystem {
    pub fn new() -> Self {
        RewriteSystem {
            slots: Vec::new(),
            index: HashMap::new(),
            lengths: BTreeMap::new(),
            cap: 0,
            status: CompletionStatus::Uncompleted,
            unit_origin: None,
        }
    }

    /// A system from rules taken as given. Rules whose left side is already
    /// present are ignored.
    pub fn from_rules<I: IntoIterator<Item = RewriteRule>>(rules: I) -> Self {
        let mut s = RewriteSystem::new();
        for r in rules {
            if !s.index.contains_key(&r.lhs) {
                s.insert(r, None);
            }
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn status(&self) -> CompletionStatus {
        self.status
    }

    pub fn is_trivial(&self) -> bool {
        self.status == CompletionStatus::Trivial || self.index.contains_key(&Word::one())
    }

    /// How 1 was obtained from the input relations, when tracked.
    pub fn unit_provenance(&self) -> Option<&Provenance> {
        self.unit_origin.as_ref()
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// Rules sorted by left side.
    pub fn rules(&self) -> Vec<&RewriteRule> {
        let mut v: Vec<&RewriteRule> = self.slots.iter().flatten().map(|s| &s.rule).collect();
        v.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        v
    }

    pub fn rule_for(&self, lhs: &Word) -> Option<&RewriteRule> {
        self.index.get(lhs).and_then(|&i| self.slots[i].as_ref()).map(|s| &s.rule)
    }

    pub(crate) fn insert(&mut self, rule: RewriteRule, origin: Option<Provenance>) -> usize {
        let id = self.slots.len();
        *self.lengths.entry(rule.lhs.len()).or_insert(0) += 1;
        self.index.insert(rule.lhs.clone(), id);
        self.slots.push(Some(Slot { rule, origin }));
        id
    }

    pub(crate) fn remove(&mut self, id: usize) -> Option<Slot> {
        let slot = self.slots[id].take()?;
        self.index.remove(&slot.rule.lhs);
        let n = self.lengths.get_mut(&slot.rule.lhs.len()).expect("length counted");
        *n -= 1;
        if *n == 0 {
            self.lengths.remove(&slot.rule.lhs.len());
        }
        Some(slot)
    }

    pub(crate) fn live_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.slots.iter().enumerate().filter(|(_, s)| s.is_some()).map(|(i, _)| i)
    }

    pub(crate) fn slot(&self, id: usize) -> Option<&Slot> {
        self.slots[id].as_ref()
    }

    /// Leftmost occurrence of some left side in `w`: `(position, rule id)`.
    pub fn find_redex(&self, w: &[Gen]) -> Option<(usize, usize)> {
        for pos in 0..=w.len() {
            for &len in self.lengths.keys() {
                if pos + len > w.len() {
                    break;
                }
                if let Some(&id) = self.index.get(&w[pos..pos + len]) {
                    return Some((pos, id));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w.letters()).is_none()
    }

    /// The normal form of `p`.
    pub fn reduce(&self, p: &Z2Poly) -> Z2Poly {
        self.reduce_inner(p, None)
    }

    /// The normal form of `p`, adding to `origin` the combination of rules
    /// that was subtracted. If `origin` describes `p`, the result describes
    /// the normal form.
    pub fn reduce_tracked(&self, p: &Z2Poly, origin: &mut Provenance) -> Z2Poly {
        self.reduce_inner(p, Some(origin))
    }

    fn reduce_inner(&self, p: &Z2Poly, mut origin: Option<&mut Provenance>) -> Z2Poly {
        let mut work: BTreeSet<Word> = p.words().cloned().collect();
        let mut done: Vec<Word> = Vec::new();
        while let Some(w) = work.pop_last() {
            match self.find_redex(w.letters()) {
                None => done.push(w),
                Some((pos, id)) => {
                    let slot = self.slots[id].as_ref().expect("indexed rule is live");
                    let left = &w.letters()[..pos];
                    let right = &w.letters()[pos + slot.rule.lhs.len()..];
                    for r in slot.rule.rhs.words() {
                        let nw = r.sandwich(left, right);
                        if !work.remove(&nw) {
                            work.insert(nw);
                        }
                    }
                    if let Some(o) = origin.as_deref_mut() {
                        if let Some(so) = &slot.origin {
                            o.add_sandwich(so, left, right);
                        }
                    }
                }
            }
        }
        Z2Poly::from_words(done)
    }

    /// Reduce every right side to normal form.
    pub(crate) fn normalize_right_sides(&mut self) {
        for id in 0..self.slots.len() {
            let Some(slot) = self.slots[id].as_ref() else { continue };
            let rhs = slot.rule.rhs.clone();
            let mut origin = slot.origin.clone();
            let new = match origin.as_mut() {
                Some(o) => self.reduce_tracked(&rhs, o),
                None => self.reduce(&rhs),
            };
            let slot = self.slots[id].as_mut().expect("live");
            slot.rule.rhs = new;
            slot.origin = origin;
        }
    }

    pub fn render(&self, names: &Names) -> String {
        let mut s = String::new();
        for r in self.rules() {
            s.push_str(&r.render(names));
            s.push('\n');
        }
        s
    }
}

/// Normal form of `p` under `sys`.
pub fn reduce_normal_form(p: &Z2Poly, sys: &RewriteSystem) -> Z2Poly {
    sys.reduce(p)
}
