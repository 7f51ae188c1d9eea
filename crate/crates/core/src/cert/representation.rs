//! Representations of characteristic algebras on ℋ and the certificates
//! they yield.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::seq::SeqOp;
use crate::dga::GradedDga;
use crate::error::{Error, Result};
use crate::freealg::{Gen, Names, Z2Poly, Z2};

pub const DEFAULT_SAMPLE: u64 = 64;

/// An assignment of operators to generators, checked on `e_0..e_{N-1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Representation {
    pub assignment: BTreeMap<Gen, SeqOp>,
    pub sample: u64,
}

impl Representation {
    pub fn new(assignment: BTreeMap<Gen, SeqOp>) -> Self {
        Representation { assignment, sample: DEFAULT_SAMPLE }
    }

    pub fn with_sample(mut self, sample: u64) -> Self {
        self.sample = sample;
        self
    }

    /// The operator representing `p`.
    pub fn image(&self, p: &Z2Poly) -> Result<SeqOp> {
        let img = p.substitute_with(|g| self.assignment.get(&g).map(|op| op.expr().clone()))?;
        Ok(SeqOp::from_expr(img))
    }

    pub fn render(&self, names: &Names) -> String {
        self.assignment.iter().map(|(g, op)| format!("{} -> {}\n", names.name(*g), op)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationReport {
    pub checked: usize,
    /// Relations whose image is nonzero on the sample, with a basis index
    /// where it fails.
    pub failures: Vec<(usize, u64)>,
    /// Some generator acts by a nonzero operator on the sample.
    pub nontrivial: bool,
    pub sample: u64,
}

impl RepresentationReport {
    pub fn annihilates(&self) -> bool {
        self.failures.is_empty()
    }

    /// Relations preserved and the action nonzero: the algebra cannot be
    /// trivial, since 1 acts as the identity.
    pub fn certifies_nontrivial(&self) -> bool {
        self.annihilates() && self.nontrivial
    }
}

/// Check that every relation acts by zero on the sample.
pub fn check_relations(relations: &[Z2Poly], rep: &Representation) -> Result<RepresentationReport> {
    let images: Vec<SeqOp> = relations.iter().map(|r| rep.image(r)).collect::<Result<_>>()?;
    let failures: Vec<(usize, u64)> = images
        .par_iter()
        .enumerate()
        .filter_map(|(i, op)| (0..rep.sample).find(|&n| !op.apply_basis(n).is_zero()).map(|n| (i, n)))
        .collect();
    let nontrivial = rep.assignment.values().any(|op| !op.vanishes_on_prefix(rep.sample));
    Ok(RepresentationReport { checked: relations.len(), failures, nontrivial, sample: rep.sample })
}

/// Check that every `∂x` acts by zero. Every generator must be assigned.
pub fn check_representation(dga: &GradedDga<Z2>, rep: &Representation) -> Result<RepresentationReport> {
    for g in dga.generators() {
        if !rep.assignment.contains_key(&g) {
            return Err(Error::UnassignedGenerator(g));
        }
    }
    check_relations(dga.differentials(), rep)
}

fn op(text: &str) -> SeqOp {
    SeqOp::parse(text).expect("operator expression parses")
}

/// The action of the six surviving generators of m(10_161) modulo 𝒥.
pub fn six_generator_representation() -> Representation {
    let table = [(2, "a + d"), (11, "b + c"), (12, "a"), (13, "b"), (27, "c"), (29, "d + 1")];
    Representation::new(table.iter().map(|&(g, e)| (Gen::new(g), op(e))).collect())
}

/// The action of all 40 generators of m(10_161): the forced zeros and the
/// pure generators of 𝒥 act by 0, `x_30` and `x_34` by the identity,
/// `x_28` and `x_33` like `x_2` and `x_11`, and the survivors as in
/// [`six_generator_representation`].
pub fn m10_161_representation() -> Representation {
    let mut assignment: BTreeMap<Gen, SeqOp> = (1..=40).map(|l| (Gen::new(l), SeqOp::zero())).collect();
    for (g, o) in six_generator_representation().assignment {
        assignment.insert(g, o);
    }
    assignment.insert(Gen::new(30), SeqOp::identity());
    assignment.insert(Gen::new(34), SeqOp::identity());
    assignment.insert(Gen::new(28), op("a + d"));
    assignment.insert(Gen::new(33), op("b + c"));
    Representation::new(assignment)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Representation,
    Augmentation,
}

pub const NONVANISHING_NOTE: &str = "characteristic algebra nontrivial => contact homology nonvanishing";

/// A checked certificate of nontriviality.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub knot: String,
    #[serde(rename = "type")]
    pub kind: CertificateKind,
    pub assignment: BTreeMap<String, String>,
    pub sample_size: u64,
    pub verdict: String,
    pub note: String,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Check `rep` against `dga` and, if it certifies nontriviality, record it.
pub fn certify_representation(knot: &str, dga: &GradedDga<Z2>, rep: &Representation) -> Result<Option<Certificate>> {
    let report = check_representation(dga, rep)?;
    if !report.certifies_nontrivial() {
        return Ok(None);
    }
    let names = dga.names();
    Ok(Some(Certificate {
        knot: knot.to_string(),
        kind: CertificateKind::Representation,
        assignment: rep.assignment.iter().map(|(g, o)| (names.name(*g), o.to_string())).collect(),
        sample_size: rep.sample,
        verdict: "NontrivialCertified".into(),
        note: NONVANISHING_NOTE.into(),
    }))
}
