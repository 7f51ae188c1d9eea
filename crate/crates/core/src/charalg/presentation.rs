//! Forced zeros and simplified presentations of characteristic algebras.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::rewrite::{RewriteRule, RewriteSystem};
use crate::dga::GradedDga;
use crate::freealg::{Gen, Names, Word, Z2Poly, Z2};

/// Generators `g` that vanish in the characteristic algebra because some
/// `∂x` reduces to exactly `g` once earlier zeros are imposed.
pub fn derive_zero_generators(dga: &GradedDga<Z2>) -> BTreeSet<Gen> {
    let mut zeros = BTreeSet::new();
    let mut sys = RewriteSystem::new();
    loop {
        let mut changed = false;
        for p in dga.differentials() {
            let nf = sys.reduce(p);
            if nf.len() == 1 && nf.degree() == Some(1) {
                let g = nf.words().next().expect("one word").letters()[0];
                zeros.insert(g);
                sys = RewriteSystem::from_rules(
                    zeros.iter().map(|&z| RewriteRule { lhs: Word::letter(z), rhs: Z2Poly::zero() }),
                );
                changed = true;
            }
        }
        if !changed {
            return zeros;
        }
    }
}

/// A presentation by generators and relations (each relation `= 0`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<Gen>,
    pub relations: Vec<Z2Poly>,
    /// Eliminated generators and their values in the survivors.
    pub substitutions: Vec<(Gen, Z2Poly)>,
    /// Some relation reduced to a nonzero constant.
    pub trivial: bool,
}

impl Presentation {
    pub fn render(&self, names: &Names) -> String {
        let gens: Vec<String> = self.generators.iter().map(|&g| names.name(g)).collect();
        let mut s = format!("generators: {}\n", gens.join(", "));
        for (g, v) in &self.substitutions {
            s.push_str(&format!("  {} = {}\n", names.name(*g), v.render(names)));
        }
        s.push_str("relations:\n");
        for r in &self.relations {
            s.push_str(&format!("  {} = 0\n", r.render(names)));
        }
        if self.trivial {
            s.push_str("trivial: 1 = 0\n");
        }
        s
    }
}

/// Simplify `A / ⟨Im ∂, extra⟩`.
///
/// Forced zeros are imposed first. Any relation whose normal form is linear
/// in its leading generator eliminates that generator. Nonlinear elements
/// of `extra` are used as rewrite rules; nonlinear images of `∂` are only
/// reduced. The result lists the surviving generators and the distinct
/// nonzero normal forms of all relations.
pub fn simplify_presentation(dga: &GradedDga<Z2>, extra: &[Z2Poly]) -> Presentation {
    let zeros = derive_zero_generators(dga);
    let mut subst: BTreeMap<Gen, Z2Poly> = zeros.iter().map(|&g| (g, Z2Poly::zero())).collect();
    let mut side: Vec<Z2Poly> = Vec::new();
    let build = |subst: &BTreeMap<Gen, Z2Poly>, side: &[Z2Poly]| {
        let linear =
            RewriteSystem::from_rules(subst.iter().map(|(g, v)| RewriteRule { lhs: Word::letter(*g), rhs: v.clone() }));
        let nonlinear: Vec<RewriteRule> =
            side.iter().filter_map(|p| RewriteRule::from_poly(&linear.reduce(p))).collect();
        let rules = linear.rules().into_iter().cloned().chain(nonlinear.iter().cloned());
        (RewriteSystem::from_rules(rules), nonlinear)
    };
    let mut trivial = false;
    let all: Vec<(&Z2Poly, bool)> =
        extra.iter().map(|p| (p, true)).chain(dga.differentials().iter().map(|p| (p, false))).collect();
    loop {
        let (sys, _) = build(&subst, &side);
        let mut changed = false;
        for &(p, is_extra) in &all {
            let nf = sys.reduce(p);
            let Some(rule) = RewriteRule::from_poly(&nf) else { continue };
            match rule.lhs.len() {
                0 => trivial = true,
                1 => {
                    subst.insert(rule.lhs.letters()[0], rule.rhs);
                    changed = true;
                    break;
                }
                _ if is_extra && sys.rule_for(&rule.lhs).is_none() => {
                    side.push(p.clone());
                    changed = true;
                    break;
                }
                _ => {}
            }
        }
        if !changed || trivial {
            break;
        }
    }

    let (sys, nonlinear) = build(&subst, &side);
    let substitutions: Vec<(Gen, Z2Poly)> =
        subst.iter().filter(|(g, _)| !zeros.contains(g)).map(|(g, v)| (*g, sys.reduce(v))).collect();
    let mut relations: BTreeSet<Z2Poly> = nonlinear
        .iter()
        .map(|r| {
            let mut p = sys.reduce(&r.rhs);
            p += Z2Poly::word(r.lhs.clone());
            p
        })
        .collect();
    for &(p, _) in &all {
        let nf = sys.reduce(p);
        if !nf.is_zero() {
            trivial |= nf.degree() == Some(0);
            relations.insert(nf);
        }
    }
    let generators = dga.generators().filter(|g| !subst.contains_key(g)).collect();
    Presentation { generators, relations: relations.into_iter().collect(), substitutions, trivial }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_indexed;

    fn z(s: &str) -> Z2Poly {
        parse_indexed(s).unwrap().to_z2()
    }

    #[test]
    fn zero_differential_has_no_zeros() {
        let dga = GradedDga::from_z2(vec![Z2Poly::zero(); 3]);
        assert!(derive_zero_generators(&dga).is_empty());
    }

    #[test]
    fn product_does_not_create_new_zero() {
        // ∂x_1 = 0, ∂x_2 = x_1, ∂x_3 = x_1 x_2
        let dga = GradedDga::from_z2(vec![Z2Poly::zero(), z("x_1"), z("x_1 x_2")]);
        assert_eq!(derive_zero_generators(&dga), BTreeSet::from([Gen::new(1)]));
    }

    #[test]
    fn chained_zeros() {
        let dga = GradedDga::from_z2(vec![Z2Poly::zero(), Z2Poly::zero(), z("x_1 x_2 + x_2"), z("x_1")]);
        assert_eq!(derive_zero_generators(&dga), BTreeSet::from([Gen::new(1), Gen::new(2)]));
    }

    #[test]
    fn unit_relation_is_trivial() {
        let dga = GradedDga::from_z2(vec![Z2Poly::one()]);
        let p = simplify_presentation(&dga, &[]);
        assert!(p.trivial);
        assert_eq!(p.relations, vec![Z2Poly::one()]);
    }

    #[test]
    fn substitution_eliminates_higher_generator() {
        let dga = GradedDga::from_z2(vec![Z2Poly::zero(), Z2Poly::zero(), z("x_1 x_3 + 1")]);
        let p = simplify_presentation(&dga, &[z("x_2 + x_3")]);
        assert_eq!(p.generators, vec![Gen::new(1), Gen::new(2)]);
        assert_eq!(p.relations, vec![z("x_1 x_2 + 1")]);
        assert!(!p.trivial);
    }
}
