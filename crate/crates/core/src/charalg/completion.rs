//! Degree-bounded overlap completion of two-sided ideals over Z/2.
//!
//! Overlaps are processed in order of increasing overlap length, first in
//! first out within a length. New rules are interreduced on insertion:
//! a rule whose left side contains the new left side is withdrawn and its
//! relation requeued.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::rewrite::{CompletionStatus, Provenance, RewriteRule, RewriteSystem};
use crate::freealg::{Word, Z2Poly};

pub const DEFAULT_CAP: usize = 12;
pub const DEFAULT_MAX_RULES: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionOptions {
    /// Largest overlap length considered.
    pub cap: usize,
    /// Record for every rule how it arises from the input relations.
    pub track_provenance: bool,
    /// Stop (incomplete) once this many rules have been created.
    pub max_rules: usize,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions { cap: DEFAULT_CAP, track_provenance: false, max_rules: DEFAULT_MAX_RULES }
    }
}

impl CompletionOptions {
    pub fn with_cap(cap: usize) -> Self {
        CompletionOptions { cap, ..Default::default() }
    }
}

struct Completer {
    sys: RewriteSystem,
    opts: CompletionOptions,
    pending: VecDeque<(Z2Poly, Option<Provenance>)>,
    pairs: BTreeMap<usize, VecDeque<(usize, usize, usize)>>,
    created: usize,
    skipped: bool,
}

impl Completer {
    fn overlaps(&mut self, a: usize, b: usize) {
        let la = self.sys.slot(a).expect("live").rule.lhs.clone();
        let lb = self.sys.slot(b).expect("live").rule.lhs.clone();
        // suffix of la equal to a prefix of lb
        let (x, y) = (la.letters(), lb.letters());
        for k in 1..x.len().min(y.len()) {
            if x[x.len() - k..] == y[..k] {
                let len = x.len() + y.len() - k;
                if len > self.opts.cap {
                    self.skipped = true;
                } else {
                    self.pairs.entry(len).or_default().push_back((a, b, k));
                }
            }
        }
    }

    fn add(&mut self, p: Z2Poly, origin: Option<Provenance>) -> bool {
        let mut origin = origin;
        let r = match origin.as_mut() {
            Some(o) => self.sys.reduce_tracked(&p, o),
            None => self.sys.reduce(&p),
        };
        let Some(rule) = RewriteRule::from_poly(&r) else { return true };
        if rule.lhs.is_one() {
            let ids: Vec<usize> = self.sys.live_ids().collect();
            for id in ids {
                self.sys.remove(id);
            }
            self.sys.insert(rule, origin.clone());
            self.sys.unit_origin = origin;
            self.sys.status = CompletionStatus::Trivial;
            return false;
        }
        let withdrawn: Vec<usize> = self
            .sys
            .live_ids()
            .filter(|&id| self.sys.slot(id).unwrap().rule.lhs.find(rule.lhs.letters()).is_some())
            .collect();
        for id in withdrawn {
            let slot = self.sys.remove(id).expect("live");
            self.pending.push_back((slot.rule.poly(), slot.origin));
        }
        let id = self.sys.insert(rule, origin);
        self.created += 1;
        let live: Vec<usize> = self.sys.live_ids().collect();
        for other in live {
            self.overlaps(id, other);
            if other != id {
                self.overlaps(other, id);
            }
        }
        true
    }

    fn s_poly(&self, a: usize, b: usize, k: usize) -> Option<(Z2Poly, Option<Provenance>)> {
        let sa = self.sys.slot(a)?;
        let sb = self.sys.slot(b)?;
        let (la, lb) = (sa.rule.lhs.letters(), sb.rule.lhs.letters());
        let u = &la[..la.len() - k];
        let v = &lb[k..];
        let mut s = sa.rule.poly().sandwich(&Word::one(), &Word::from_slice(v));
        s += sb.rule.poly().sandwich(&Word::from_slice(u), &Word::one());
        let origin = match (&sa.origin, &sb.origin) {
            (Some(oa), Some(ob)) => {
                let mut o = Provenance::default();
                o.add_sandwich(oa, &[], v);
                o.add_sandwich(ob, u, &[]);
                Some(o)
            }
            _ => None,
        };
        Some((s, origin))
    }

    fn run(mut self) -> RewriteSystem {
        loop {
            while let Some((p, o)) = self.pending.pop_front() {
                if !self.add(p, o) {
                    return self.sys;
                }
                if self.created > self.opts.max_rules {
                    self.skipped = true;
                    self.pending.clear();
                    self.pairs.clear();
                }
            }
            let next = loop {
                let Some(mut entry) = self.pairs.first_entry() else { break None };
                match entry.get_mut().pop_front() {
                    Some(pair) => break Some(pair),
                    None => {
                        entry.remove();
                    }
                }
            };
            let Some((a, b, k)) = next else { break };
            if let Some(sp) = self.s_poly(a, b, k) {
                self.pending.push_back(sp);
            }
        }
        self.sys.normalize_right_sides();
        self.sys.status = if self.skipped { CompletionStatus::IncompleteAtCap } else { CompletionStatus::Complete };
        self.sys
    }
}

/// Complete the ideal generated by `relations` up to overlap length `cap`.
pub fn complete_bounded(relations: &[Z2Poly], cap: usize) -> RewriteSystem {
    complete_with(relations, CompletionOptions::with_cap(cap))
}

pub fn complete_with(relations: &[Z2Poly], opts: CompletionOptions) -> RewriteSystem {
    let mut sys = RewriteSystem::new();
    sys.cap = opts.cap;
    let pending = relations
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), opts.track_provenance.then(|| Provenance::relation(i))))
        .collect();
    Completer { sys, opts, pending, pairs: BTreeMap::new(), created: 0, skipped: false }.run()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EquivalenceVerdict {
    Equivalent,
    /// Some relation was not shown to lie in the other ideal. The lists
    /// hold the indices left over in each direction.
    UnknownAtCap {
        a_not_in_b: Vec<usize>,
        b_not_in_a: Vec<usize>,
    },
}

impl EquivalenceVerdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivalenceVerdict::Equivalent)
    }
}

/// Relations of `from` that do not reduce to zero under `sys`.
pub fn not_in_ideal(from: &[Z2Poly], sys: &RewriteSystem) -> Vec<usize> {
    from.iter().enumerate().filter(|(_, p)| !sys.reduce(p).is_zero()).map(|(i, _)| i).collect()
}

/// Mutual membership of two relation sets, each tested against the bounded
/// completion of the other.
pub fn ideal_equiv_bounded(a: &[Z2Poly], b: &[Z2Poly], cap: usize) -> EquivalenceVerdict {
    let sa = complete_bounded(a, cap);
    let sb = complete_bounded(b, cap);
    let a_not_in_b = not_in_ideal(a, &sb);
    let b_not_in_a = not_in_ideal(b, &sa);
    if a_not_in_b.is_empty() && b_not_in_a.is_empty() {
        EquivalenceVerdict::Equivalent
    } else {
        EquivalenceVerdict::UnknownAtCap { a_not_in_b, b_not_in_a }
    }
}
