//! Unit witnesses: elements `w` with `∂w = 1`.
//!
//! The search first completes `⟨Im ∂⟩`. When 1 reduces to zero, it
//! completes again with provenance tracking, and the provenance writes 1 as
//! a sum of products `A · ∂x_i · B`. The words `A x_i B` of grading 1 seed
//! a candidate set.
//! A GF(2) elimination then looks for a combination of candidates whose
//! differential is exactly 1. If none exists, the candidate set is grown by
//! adding every word whose differential contains a word already met, and
//! the elimination is resumed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::completion::{complete_with, CompletionOptions};
use super::rewrite::CompletionStatus;
use crate::dga::GradedDga;
use crate::error::Result;
use crate::freealg::{Coefficient, Derivation, Gen, Poly, Word, Z2Poly, Z2};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitWitness<C: Coefficient> {
    pub element: Poly<C>,
}

/// Whether `∂w = 1` exactly.
pub fn verify_unit_witness<C: Coefficient>(dga: &GradedDga<C>, w: &Poly<C>) -> Result<bool> {
    Ok(dga.derivation()?.apply(w).is_one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSearchOptions {
    pub cap: usize,
    /// Largest number of candidate words in the linear search.
    pub candidate_budget: usize,
    /// Longest candidate word.
    pub max_word_len: usize,
}

impl Default for WitnessSearchOptions {
    fn default() -> Self {
        WitnessSearchOptions { cap: super::completion::DEFAULT_CAP, candidate_budget: 20_000, max_word_len: 12 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum WitnessSearch {
    /// A verified witness.
    Found(UnitWitness<Z2>),
    /// Completion shows `1 ∈ ⟨Im ∂⟩`, but no element with `∂w = 1` was
    /// assembled within the candidate budget.
    UnitInIdeal { candidates: usize },
    /// Completion up to the cap did not reduce 1 to zero.
    UnknownAtCap { status: CompletionStatus, rules: usize },
}

impl WitnessSearch {
    pub fn witness(&self) -> Option<&UnitWitness<Z2>> {
        match self {
            WitnessSearch::Found(w) => Some(w),
            _ => None,
        }
    }
}

/// Search for a unit witness over Z/2.
pub fn search_unit_witness(dga: &GradedDga<Z2>, cap: usize) -> Result<WitnessSearch> {
    search_unit_witness_with(dga, WitnessSearchOptions { cap, ..Default::default() })
}

pub fn search_unit_witness_with(dga: &GradedDga<Z2>, opts: WitnessSearchOptions) -> Result<WitnessSearch> {
    let relations = dga.differentials().to_vec();
    let plain = complete_with(&relations, CompletionOptions { cap: opts.cap, ..Default::default() });
    if !plain.is_trivial() {
        return Ok(WitnessSearch::UnknownAtCap { status: plain.status(), rules: plain.len() });
    }
    let sys =
        complete_with(&relations, CompletionOptions { cap: opts.cap, track_provenance: true, ..Default::default() });
    let Some(origin) = sys.unit_provenance() else {
        return Ok(WitnessSearch::UnknownAtCap { status: sys.status(), rules: sys.len() });
    };
    let d = dga.derivation()?;
    let mut solver = Solver::new(dga, &d, opts);
    for (a, i, b) in origin.triples() {
        solver.offer(Word::letter(Gen::from_index(*i)).sandwich(a.letters(), b.letters()));
    }
    for g in dga.generators() {
        if dga.diff(g).coefficient(&Word::one()).is_one() {
            solver.offer(Word::letter(g));
        }
    }
    match solver.run() {
        Some(element) if verify_unit_witness(dga, &element)? => Ok(WitnessSearch::Found(UnitWitness { element })),
        _ => Ok(WitnessSearch::UnitInIdeal { candidates: solver.candidates.len() }),
    }
}

struct Row {
    vector: BTreeSet<Word>,
    combo: BTreeSet<usize>,
}

fn xor<T: Ord + Clone>(a: &mut BTreeSet<T>, b: &BTreeSet<T>) {
    for x in b {
        if !a.remove(x) {
            a.insert(x.clone());
        }
    }
}

struct Solver<'a> {
    dga: &'a GradedDga<Z2>,
    d: &'a Derivation<Z2>,
    opts: WitnessSearchOptions,
    candidates: Vec<Word>,
    seen: BTreeSet<Word>,
    queue: VecDeque<Word>,
    met: BTreeSet<Word>,
    frontier: VecDeque<Word>,
    pivots: BTreeMap<Word, Row>,
    /// For each generator, the monomials of its differential.
    pre: Vec<(Gen, Vec<Word>)>,
}

impl<'a> Solver<'a> {
    fn new(dga: &'a GradedDga<Z2>, d: &'a Derivation<Z2>, opts: WitnessSearchOptions) -> Self {
        let pre = dga.generators().map(|g| (g, dga.diff(g).words().cloned().collect())).collect();
        Solver {
            dga,
            d,
            opts,
            candidates: Vec::new(),
            seen: BTreeSet::new(),
            queue: VecDeque::new(),
            met: BTreeSet::new(),
            frontier: VecDeque::new(),
            pivots: BTreeMap::new(),
            pre,
        }
    }

    fn admissible(&self, w: &Word) -> bool {
        if w.len() > self.opts.max_word_len {
            return false;
        }
        match self.dga.grading() {
            Some(gr) => gr.of_word(w) == gr.reduce(1),
            None => true,
        }
    }

    fn offer(&mut self, w: Word) {
        if self.admissible(&w) && self.seen.insert(w.clone()) {
            self.queue.push_back(w);
        }
    }

    /// Add a candidate; true once 1 lies in the span of the differentials.
    fn absorb(&mut self, w: Word) -> bool {
        let dw: Z2Poly = self.d.apply_word(&w);
        let idx = self.candidates.len();
        self.candidates.push(w);
        for u in dw.words() {
            if self.met.insert(u.clone()) {
                self.frontier.push_back(u.clone());
            }
        }
        let mut row = Row { vector: dw.words().cloned().collect(), combo: BTreeSet::from([idx]) };
        while let Some(lead) = row.vector.last().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    xor(&mut row.vector, &p.vector);
                    xor(&mut row.combo, &p.combo);
                }
                None => {
                    self.pivots.insert(lead, row);
                    return self.pivots.contains_key(&Word::one()) && self.solve().is_some();
                }
            }
        }
        false
    }

    fn solve(&self) -> Option<BTreeSet<usize>> {
        let mut v = BTreeSet::from([Word::one()]);
        let mut combo = BTreeSet::new();
        while let Some(lead) = v.last().cloned() {
            let p = self.pivots.get(&lead)?;
            xor(&mut v, &p.vector);
            xor(&mut combo, &p.combo);
        }
        Some(combo)
    }

    /// Words `v` whose differential contains `u`.
    fn preimages(&mut self, u: &Word) {
        let letters = u.letters();
        let mut found = Vec::new();
        for (g, monos) in &self.pre {
            for m in monos {
                let k = m.len();
                if k > letters.len() {
                    continue;
                }
                for pos in 0..=letters.len() - k {
                    if letters[pos..pos + k] == *m.letters() {
                        let mut v: Vec<Gen> = letters[..pos].to_vec();
                        v.push(*g);
                        v.extend_from_slice(&letters[pos + k..]);
                        found.push(Word::from_slice(&v));
                    }
                }
            }
        }
        for v in found {
            self.offer(v);
        }
    }

    fn run(&mut self) -> Option<Poly<Z2>> {
        loop {
            while let Some(w) = self.queue.pop_front() {
                if self.candidates.len() >= self.opts.candidate_budget {
                    return None;
                }
                if self.absorb(w) {
                    let combo = self.solve().expect("in span");
                    return Some(Z2Poly::from_words(combo.into_iter().map(|i| self.candidates[i].clone())));
                }
            }
            let u = self.frontier.pop_front()?;
            self.preimages(&u);
        }
    }
}
