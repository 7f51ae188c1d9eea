//! Augmentations: algebra maps `ε: A → Z/2` with `ε ∘ ∂ = 0`.
//!
//! Each `ε(∂x) = 0` is a polynomial equation over GF(2) in commuting,
//! idempotent unknowns `ε(g)`. The search assigns values depth first,
//! propagating equations that become `g = 0` or `g = 1`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::representation::{Certificate, CertificateKind, NONVANISHING_NOTE};
use crate::dga::GradedDga;
use crate::error::{Error, Result};
use crate::freealg::{Gen, Z2Poly, Z2};

pub const DEFAULT_GENERATOR_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentationOptions {
    /// Only generators of degree 0 may take the value 1.
    pub graded: bool,
    /// Refuse systems with more free unknowns than this after propagation.
    pub generator_limit: usize,
    /// Stop after this many augmentations.
    pub max_results: usize,
}

impl Default for AugmentationOptions {
    fn default() -> Self {
        AugmentationOptions { graded: true, generator_limit: DEFAULT_GENERATOR_LIMIT, max_results: 1024 }
    }
}

/// A map `ε` given by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Augmentation {
    pub values: Vec<bool>,
}

impl Augmentation {
    pub fn value(&self, g: Gen) -> bool {
        self.values[g.index()]
    }

    pub fn support(&self) -> Vec<Gen> {
        (0..self.values.len()).filter(|&i| self.values[i]).map(Gen::from_index).collect()
    }

    /// `ε(p)`
    pub fn evaluate(&self, p: &Z2Poly) -> bool {
        p.words().fold(false, |acc, w| acc ^ w.letters().iter().all(|&g| self.value(g)))
    }

    pub fn annihilates(&self, dga: &GradedDga<Z2>) -> bool {
        dga.differentials().iter().all(|p| !self.evaluate(p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentationSearch {
    pub augmentations: Vec<Augmentation>,
    /// The result limit was reached; more augmentations may exist.
    pub truncated: bool,
}

/// A commutative multilinear polynomial: a set of monomials, each a set of
/// unknowns.
type Equation = BTreeSet<BTreeSet<usize>>;

fn equation(p: &Z2Poly) -> Equation {
    let mut e = Equation::new();
    for w in p.words() {
        let m: BTreeSet<usize> = w.letters().iter().map(|g| g.index()).collect();
        if !e.remove(&m) {
            e.insert(m);
        }
    }
    e
}

fn substitute(e: &Equation, var: usize, value: bool) -> Equation {
    let mut out = Equation::new();
    for m in e {
        if !m.contains(&var) {
            if !out.remove(m) {
                out.insert(m.clone());
            }
        } else if value {
            let mut m = m.clone();
            m.remove(&var);
            if !out.remove(&m) {
                out.insert(m);
            }
        }
    }
    out
}

struct Search {
    n: usize,
    opts: AugmentationOptions,
    found: Vec<Augmentation>,
    truncated: bool,
}

impl Search {
    /// Simplify under unit propagation. None on contradiction.
    fn propagate(&self, mut eqs: Vec<Equation>, values: &mut [Option<bool>]) -> Option<Vec<Equation>> {
        loop {
            let mut forced: Option<(usize, bool)> = None;
            eqs.retain(|e| !e.is_empty());
            for e in &eqs {
                if e.len() == 1 && e.iter().next().unwrap().is_empty() {
                    return None;
                }
                // g = 0 or g + 1 = 0
                let nonconst: Vec<&BTreeSet<usize>> = e.iter().filter(|m| !m.is_empty()).collect();
                if nonconst.len() == 1 && nonconst[0].len() == 1 {
                    let var = *nonconst[0].iter().next().unwrap();
                    forced = Some((var, e.len() == 2));
                    break;
                }
                // a single monomial equal to 1 forces all its unknowns
                if e.len() == 2 && nonconst.len() == 1 {
                    let var = *nonconst[0].iter().next().unwrap();
                    forced = Some((var, true));
                    break;
                }
            }
            let Some((var, value)) = forced else { return Some(eqs) };
            values[var] = Some(value);
            eqs = eqs.iter().map(|e| substitute(e, var, value)).collect();
        }
    }

    fn branch_variable(eqs: &[Equation], values: &[Option<bool>]) -> Option<usize> {
        let mut count = vec![0usize; values.len()];
        for e in eqs {
            for m in e {
                for &v in m {
                    count[v] += 1;
                }
            }
        }
        (0..values.len()).filter(|&v| values[v].is_none() && count[v] > 0).max_by_key(|&v| (count[v], usize::MAX - v))
    }

    fn run(&mut self, eqs: Vec<Equation>, mut values: Vec<Option<bool>>) {
        if self.found.len() >= self.opts.max_results {
            self.truncated = true;
            return;
        }
        let Some(eqs) = self.propagate(eqs, &mut values) else { return };
        match Search::branch_variable(&eqs, &values) {
            None => self.emit(&values, 0),
            Some(v) => {
                for value in [false, true] {
                    let mut vals = values.clone();
                    vals[v] = Some(value);
                    let next = eqs.iter().map(|e| substitute(e, v, value)).collect();
                    self.run(next, vals);
                }
            }
        }
    }

    /// Unknowns not occurring in any equation are free: enumerate them.
    fn emit(&mut self, values: &[Option<bool>], from: usize) {
        if self.found.len() >= self.opts.max_results {
            self.truncated = true;
            return;
        }
        match (from..self.n).find(|&i| values[i].is_none()) {
            None => self.found.push(Augmentation { values: values.iter().map(|v| v.unwrap_or(false)).collect() }),
            Some(i) => {
                for value in [false, true] {
                    let mut vals = values.to_vec();
                    vals[i] = Some(value);
                    self.emit(&vals, i + 1);
                }
            }
        }
    }
}

/// All augmentations of a Z/2 DGA, up to `opts.max_results`.
pub fn augmentation_search_with(dga: &GradedDga<Z2>, opts: AugmentationOptions) -> Result<AugmentationSearch> {
    let n = dga.generator_count();
    let mut values: Vec<Option<bool>> = vec![None; n];
    if opts.graded {
        let gr = dga.grading().ok_or(Error::MissingGrading(Gen::new(1)))?;
        for g in dga.generators() {
            if gr.of(g) != 0 {
                values[g.index()] = Some(false);
            }
        }
    }
    let mut eqs: Vec<Equation> = dga.differentials().iter().map(equation).collect();
    for (i, v) in values.iter().enumerate() {
        if let Some(v) = v {
            eqs = eqs.iter().map(|e| substitute(e, i, *v)).collect();
        }
    }
    let mut search = Search { n, opts, found: Vec::new(), truncated: false };
    let Some(eqs) = search.propagate(eqs, &mut values) else {
        return Ok(AugmentationSearch { augmentations: vec![], truncated: false });
    };
    let free = values.iter().filter(|v| v.is_none()).count();
    if free > opts.generator_limit {
        return Err(Error::SearchAborted(format!("{free} unknowns remain after propagation")));
    }
    search.run(eqs, values);
    for a in &search.found {
        assert!(a.annihilates(dga), "augmentation search returned a non-augmentation");
    }
    Ok(AugmentationSearch { augmentations: search.found, truncated: search.truncated })
}

pub fn augmentation_search(dga: &GradedDga<Z2>, graded: bool) -> Result<AugmentationSearch> {
    augmentation_search_with(dga, AugmentationOptions { graded, ..Default::default() })
}

/// Record a checked augmentation as a certificate. None if `aug` does not
/// annihilate every `∂x`.
pub fn certify_augmentation(knot: &str, dga: &GradedDga<Z2>, aug: &Augmentation) -> Option<Certificate> {
    if aug.values.len() != dga.generator_count() || !aug.annihilates(dga) {
        return None;
    }
    let names = dga.names();
    Some(Certificate {
        knot: knot.to_string(),
        kind: CertificateKind::Augmentation,
        assignment: dga
            .generators()
            .map(|g| (names.name(g), if aug.value(g) { "1" } else { "0" }.to_string()))
            .collect(),
        sample_size: 0,
        verdict: "NontrivialCertified".into(),
        note: NONVANISHING_NOTE.into(),
    })
}
