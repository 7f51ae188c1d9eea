//! The Chekanov–Eliashberg DGA of a plat front.

mod appendix;
mod disks;
mod resolve;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub use appendix::{appendix_m10_139, appendix_m10_161, parse_differential};
pub use disks::{compute_differential, enumerate_disks, BasepointPolicy, Disk, DEFAULT_DISK_LIMIT};
pub use resolve::{resolve_front, Corner, Face, Quadrant, ResolvedDiagram};

use crate::error::{Error, Result};
use crate::freealg::{leibniz_extend, Coefficient, Derivation, Gen, IntoZ2, Names, Poly, Word, Z2Poly};
use crate::front::{FrontDiagram, GeneratorKind};

/// Gradings of the generators, defined modulo `modulus` (0 = integer valued).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grading {
    pub degrees: Vec<i64>,
    pub modulus: u32,
}

impl Grading {
    pub fn reduce(&self, d: i64) -> i64 {
        if self.modulus == 0 {
            d
        } else {
            d.rem_euclid(self.modulus as i64)
        }
    }

    pub fn of(&self, g: Gen) -> i64 {
        self.degrees[g.index()]
    }

    pub fn of_word(&self, w: &Word) -> i64 {
        self.reduce(w.letters().iter().map(|&g| self.of(g)).sum())
    }
}

/// Maslov-potential gradings: right cusps have degree 1, a crossing has
/// degree `μ(over) - μ(under)`, where the overstrand is the one with the
/// more negative slope. Values are reduced modulo `2|r|`.
pub fn compute_gradings(front: &FrontDiagram) -> Result<Grading> {
    let trace = front.trace()?;
    let modulus = trace.closing_defect.unsigned_abs() as u32;
    let (cols, _) = front.strand_table();
    let mut degrees = Vec::with_capacity(front.generator_count());
    for g in front.generators() {
        let d = match front.kind(g) {
            GeneratorKind::Crossing(c) => {
                let (over, under) = cols[c.column];
                trace.potential[over] - trace.potential[under]
            }
            GeneratorKind::RightCusp(_) => 1,
        };
        degrees.push(d);
    }
    let mut gr = Grading { degrees, modulus };
    gr.degrees = gr.degrees.iter().map(|&d| gr.reduce(d)).collect();
    Ok(gr)
}

/// A free DGA on generators `x_1..x_n` with differential values `diff`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedDga<C: Coefficient> {
    diff: Vec<Poly<C>>,
    grading: Option<Grading>,
    names: Names,
}

impl<C: Coefficient> GradedDga<C> {
    pub fn new(diff: Vec<Poly<C>>, grading: Option<Grading>) -> Self {
        if let Some(g) = &grading {
            assert_eq!(g.degrees.len(), diff.len(), "grading table size");
        }
        GradedDga { diff, grading, names: Names::Indexed }
    }

    pub fn with_names(mut self, names: Names) -> Self {
        self.names = names;
        self
    }

    pub fn with_grading(mut self, grading: Grading) -> Self {
        assert_eq!(grading.degrees.len(), self.diff.len(), "grading table size");
        self.grading = Some(grading);
        self
    }

    pub fn names(&self) -> &Names {
        &self.names
    }

    pub fn generator_count(&self) -> usize {
        self.diff.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        (0..self.diff.len()).map(Gen::from_index)
    }

    pub fn diff(&self, g: Gen) -> &Poly<C> {
        &self.diff[g.index()]
    }

    pub fn differentials(&self) -> &[Poly<C>] {
        &self.diff
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    /// The Leibniz extension of the differential.
    pub fn derivation(&self) -> Result<Derivation<C>> {
        let (gr, m) = match &self.grading {
            Some(g) => (Some(g.degrees.as_slice()), g.modulus),
            None => (None, 0),
        };
        leibniz_extend(self.diff.clone(), gr, m)
    }

    /// One line per generator: `d x_i = <polynomial>`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for g in self.generators() {
            writeln!(s, "d {} = {}", self.names.name(g), self.diff(g).render(&self.names)).unwrap();
        }
        s
    }

    /// Terms `(generator, word)` whose degree is not `|generator| - 1`.
    /// Constants have degree 0; `t` has degree 0 modulo `2|r|`.
    pub fn inhomogeneous_terms(&self) -> Result<Vec<(Gen, Word)>> {
        let gr = self.grading.as_ref().ok_or(Error::MissingGrading(Gen::new(1)))?;
        let mut bad = Vec::new();
        for g in self.generators() {
            let want = gr.reduce(gr.of(g) - 1);
            for w in self.diff(g).words() {
                if gr.of_word(w) != want {
                    bad.push((g, w.clone()));
                }
            }
        }
        Ok(bad)
    }

    pub fn to_z2(&self) -> GradedDga<crate::freealg::Z2>
    where
        C: IntoZ2,
    {
        GradedDga {
            diff: self.diff.iter().map(Poly::to_z2).collect(),
            grading: self.grading.clone(),
            names: self.names.clone(),
        }
    }
}

impl GradedDga<crate::freealg::Z2> {
    pub fn from_z2(diff: Vec<Z2Poly>) -> Self {
        GradedDga::new(diff, None)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DSquaredReport<C: Coefficient> {
    pub checked: usize,
    /// Generators with `∂²x ≠ 0`, with the offending value.
    pub failures: Vec<(Gen, Poly<C>)>,
}

impl<C: Coefficient> DSquaredReport<C> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Apply the Leibniz extension of `∂` to every `∂x_i`.
pub fn check_d_squared<C: Coefficient>(dga: &GradedDga<C>) -> Result<DSquaredReport<C>> {
    let d = dga.derivation()?;
    let failures = dga
        .generators()
        .filter_map(|g| {
            let dd = d.apply(dga.diff(g));
            (!dd.is_zero()).then_some((g, dd))
        })
        .collect();
    Ok(DSquaredReport { checked: dga.generator_count(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{LaurentPoly, Z2};
    use crate::front::{build_front, parse_plat_word};
    use crate::knots;

    #[test]
    fn unknot_cusp_has_degree_one() {
        let f = build_front(parse_plat_word("", Some(2)).unwrap());
        let g = compute_gradings(&f).unwrap();
        assert_eq!(g.degrees, vec![1]);
        assert_eq!(g.modulus, 0);
    }

    #[test]
    fn paper_knots_cusps_have_degree_one() {
        for name in ["m10_161", "m10_139"] {
            let f = build_front(knots::builtin(name).unwrap());
            let g = compute_gradings(&f).unwrap();
            for i in f.crossings().len()..f.generator_count() {
                assert_eq!(g.degrees[i], 1);
            }
        }
        let f = build_front(knots::builtin("m10_161").unwrap());
        assert_eq!(compute_gradings(&f).unwrap().of(Gen::new(36)), 1);
    }

    #[test]
    fn single_generator_unit_differential() {
        let dga = GradedDga::<Z2>::from_z2(vec![Z2Poly::one()]);
        let rep = check_d_squared(&dga).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.checked, 1);
    }

    #[test]
    fn detects_nonzero_square() {
        // ∂a = b, ∂b = 1 is not a differential
        let dga = GradedDga::<Z2>::from_z2(vec![Z2Poly::gen(Gen::new(2)), Z2Poly::one()]);
        let rep = check_d_squared(&dga).unwrap();
        assert_eq!(rep.failures, vec![(Gen::new(1), Z2Poly::one())]);
    }

    #[test]
    fn laurent_dga_without_grading_cannot_be_checked() {
        let dga = GradedDga::new(vec![LaurentPoly::one()], None);
        assert!(check_d_squared(&dga).is_err());
    }
}
