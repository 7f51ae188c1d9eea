//! The reproduction checklist for m(10_161) and m(10_139), plus sanity
//! checks on the unknot, finite matrix models and random plats.
//!
//! Everything is seeded, so two runs produce the same checks in the same
//! order with the same details. Only the timings differ.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::cert::matrix::{exhaustive_finite_model, satisfies_four_relations, BitMatrix};
use crate::cert::{certify_representation, check_representation, m10_161_representation, standard_shift_operators};
use crate::cert::{SeqOp, DEFAULT_SAMPLE};
use crate::charalg::relations::{self, M10_161_SURVIVORS, M10_161_ZEROS};
use crate::charalg::{
    derive_zero_generators, ideal_equiv_bounded, search_unit_witness, simplify_presentation, verify_unit_witness,
    WitnessSearch,
};
use crate::dga::{appendix_m10_139, appendix_m10_161, check_d_squared, compute_differential, BasepointPolicy};
use crate::dga::{compute_gradings, GradedDga};
use crate::error::Result;
use crate::freealg::{Coefficient, Gen, Laurent, Z2};
use crate::front::{build_front, classical_invariants, FrontDiagram, PlatBraid};
use crate::knots;
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub cap: usize,
    pub random_plats: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { cap: crate::charalg::DEFAULT_CAP, random_plats: 100, seed: 0x1e6e_d7a1 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteCheck {
    pub criterion: u8,
    #[serde(flatten)]
    pub check: Check,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.check.passed)
    }

    /// One line per check, without timings.
    pub fn render(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                let status = if c.check.passed { "PASS" } else { "FAIL" };
                format!("{status} [{}] {}: {}\n", c.criterion, c.check.name, c.check.detail)
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite report serializes")
    }
}

fn front_of(name: &str) -> FrontDiagram {
    build_front(knots::builtin(name).expect("built-in knot"))
}

/// Per-generator equality; returns the labels that differ.
fn mismatches<C: Coefficient>(a: &GradedDga<C>, b: &GradedDga<C>) -> Vec<usize> {
    if a.generator_count() != b.generator_count() {
        return vec![0];
    }
    a.generators().filter(|&g| a.diff(g) != b.diff(g)).map(Gen::label).collect()
}

fn count_detail(n: usize, bad: &[usize], what: &str) -> String {
    if bad.is_empty() {
        format!("{n}/{n} {what}")
    } else {
        format!("{}/{n} {what}; differ at {:?}", n - bad.len(), bad)
    }
}

fn appendix_a() -> Result<Check> {
    let dga = compute_differential::<Z2>(&front_of("m10_161"), BasepointPolicy::default())?;
    let table = appendix_m10_161();
    let bad = mismatches(&dga, &table);
    Ok(Check::new("appendix-a", bad.is_empty(), count_detail(40, &bad, "differentials match the Z/2 table")))
}

fn appendix_b() -> Result<Check> {
    let dga = compute_differential::<Laurent>(&front_of("m10_139"), BasepointPolicy::default())?;
    let table = appendix_m10_139();
    let exact = mismatches(&dga, &table);
    let reduced = mismatches(&dga.to_z2(), &table.to_z2());
    let detail = format!(
        "{}; {}",
        count_detail(45, &exact, "signed differentials match"),
        count_detail(45, &reduced, "t = 1 reductions match")
    );
    Ok(Check::new("appendix-b", exact.is_empty() && reduced.is_empty(), detail))
}

fn d_squared() -> Result<Check> {
    let a = compute_differential::<Z2>(&front_of("m10_161"), BasepointPolicy::default())?;
    let b = compute_differential::<Laurent>(&front_of("m10_139"), BasepointPolicy::default())?;
    let reports = [
        ("computed m10_161", check_d_squared(&a)?.failures.len(), a.generator_count()),
        ("computed m10_139", check_d_squared(&b)?.failures.len(), b.generator_count()),
        ("table m10_161", check_d_squared(&appendix_m10_161())?.failures.len(), 40),
        ("table m10_139", check_d_squared(&appendix_m10_139())?.failures.len(), 45),
    ];
    let passed = reports.iter().all(|r| r.1 == 0);
    let detail: Vec<String> =
        reports.iter().map(|(n, bad, total)| format!("{n} {}/{total} zero", total - bad)).collect();
    Ok(Check::new("d-squared", passed, detail.join(", ")))
}

fn laurent_witness() -> Result<Check> {
    let dga = appendix_m10_139();
    let ok = verify_unit_witness(&dga, &relations::m10_139_witness())?;
    Ok(Check::new("unit-witness-m10_139", ok, format!("∂w = 1 over Z[t,t^-1]: {ok}")))
}

fn forced_zeros() -> Check {
    let got = derive_zero_generators(&appendix_m10_161());
    let want: BTreeSet<Gen> = M10_161_ZEROS.iter().map(|&l| Gen::new(l)).collect();
    let labels: Vec<usize> = got.iter().map(|g| g.label()).collect();
    Check::new("forced-zeros", got == want, format!("zeros {labels:?}"))
}

fn presentation() -> Check {
    let pres = simplify_presentation(&appendix_m10_161(), &relations::m10_161_ideal());
    let survivors: Vec<usize> = pres.generators.iter().map(|g| g.label()).collect();
    let verdict = ideal_equiv_bounded(&pres.relations, &relations::m10_161_simplified(), 8);
    let passed = survivors == M10_161_SURVIVORS && verdict.is_equivalent() && !pres.trivial;
    Check::new(
        "simplified-presentation",
        passed,
        format!("survivors {survivors:?}; {} relations; equivalence at cap 8: {verdict:?}", pres.relations.len()),
    )
}

fn lemma_relations() -> Check {
    let six = ideal_equiv_bounded(&relations::six_generator_relations(), &relations::six_generator_linear_form(), 6);
    let four = ideal_equiv_bounded(
        &relations::six_generator_relations_eliminated(),
        &relations::four_generator_relations(),
        6,
    );
    Check::new(
        "six-to-four-generators",
        six.is_equivalent() && four.is_equivalent(),
        format!("six generators: {six:?}; after eliminating e, f: {four:?}"),
    )
}

fn shift_operators() -> Result<Check> {
    let [a, b, c, d] = standard_shift_operators();
    let one = SeqOp::identity();
    let rels = [
        a.compose(&c).add(&d.compose(&b)).add(&one),
        b.compose(&a),
        b.compose(&d).add(&one),
        c.compose(&a).add(&one),
        c.compose(&d),
    ];
    let ops_ok = rels.iter().all(|r| r.vanishes_on_prefix(DEFAULT_SAMPLE));
    let dga = appendix_m10_161();
    let rep = m10_161_representation();
    let report = check_representation(&dga, &rep)?;
    let cert = certify_representation("m10_161", &dga, &rep)?;
    let passed = ops_ok && report.annihilates() && cert.is_some();
    Ok(Check::new(
        "shift-representation",
        passed,
        format!(
            "five relations on e_0..e_{}: {ops_ok}; {}/{} differentials act by 0; verdict {}",
            DEFAULT_SAMPLE - 1,
            report.checked - report.failures.len(),
            report.checked,
            if cert.is_some() { "NontrivialCertified" } else { "none" }
        ),
    ))
}

fn witness_search(cap: usize) -> Result<Vec<Check>> {
    let b = appendix_m10_139().to_z2();
    let found = search_unit_witness(&b, cap)?;
    let b_ok = match &found {
        WitnessSearch::Found(w) => verify_unit_witness(&b, &w.element)?,
        _ => false,
    };
    let b_detail = match &found {
        WitnessSearch::Found(w) => format!("verified witness with {} terms", w.element.len()),
        other => format!("{other:?}"),
    };
    let a = search_unit_witness(&appendix_m10_161(), cap)?;
    let a_ok = matches!(a, WitnessSearch::UnknownAtCap { .. });
    let a_detail = match &a {
        WitnessSearch::UnknownAtCap { status, rules } => format!("unknown at cap {cap} ({status:?}, {rules} rules)"),
        other => format!("{other:?}"),
    };
    Ok(vec![Check::new("witness-search-m10_139", b_ok, b_detail), Check::new("witness-search-m10_161", a_ok, a_detail)])
}

fn unknot() -> Result<Check> {
    let front = front_of("unknot");
    let inv = classical_invariants(&front)?;
    let grading = compute_gradings(&front)?;
    let passed = inv.tb == -1 && inv.r == 0 && grading.degrees == [1];
    Ok(Check::new("unknot", passed, format!("tb {}, r {}, gradings {:?}", inv.tb, inv.r, grading.degrees)))
}

fn random_invertible(rng: &mut StdRng, n: usize) -> (BitMatrix, BitMatrix) {
    loop {
        let m = BitMatrix::from_code(n, rng.gen::<u64>() & ((1u64 << (n * n)) - 1));
        if let Some(inv) = m.inverse() {
            return (m, inv);
        }
    }
}

fn finite_models(seed: u64) -> Check {
    let small = (1..=3).all(|n| exhaustive_finite_model(n).is_none());
    let mut rng = StdRng::seed_from_u64(seed);
    let mut sampled = 0;
    let mut found = false;
    for n in 4..=6 {
        for _ in 0..500 {
            let (a, c) = random_invertible(&mut rng, n);
            let (d, b) = random_invertible(&mut rng, n);
            found |= satisfies_four_relations(&a, &b, &c, &d);
            sampled += 1;
        }
    }
    Check::new(
        "finite-models",
        small && !found,
        format!("no model for n = 1..3 (exhaustive); none among {sampled} samples for n = 4..6"),
    )
}

/// A random plat closing to a knot: even strand count at most 6, at most
/// 10 letters.
pub fn random_knot_plat(rng: &mut StdRng) -> PlatBraid {
    loop {
        let strands = 2 * rng.gen_range(1..=3);
        let len = rng.gen_range(0..=10);
        let word = (0..len).map(|_| rng.gen_range(1..strands)).collect();
        let braid = PlatBraid::new(strands, word).expect("letters in range");
        if build_front(braid.clone()).is_knot() {
            return braid;
        }
    }
}

fn ring_consistency(count: usize, seed: u64) -> Result<Check> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for i in 0..count {
        let front = build_front(random_knot_plat(&mut rng));
        let z2 = compute_differential::<Z2>(&front, BasepointPolicy::default())?;
        let laurent = compute_differential::<Laurent>(&front, BasepointPolicy::default())?;
        let homogeneous = laurent.inhomogeneous_terms()?.is_empty();
        let d2 = check_d_squared(&laurent)?.passed();
        if !mismatches(&laurent.to_z2(), &z2).is_empty() || !homogeneous || !d2 {
            bad.push(format!("#{i} {}", front.braid()));
        }
    }
    Ok(Check::new(
        "ring-consistency",
        bad.is_empty(),
        format!("{}/{count} random knot plats: t = 1 reduction, grading and ∂² agree {bad:?}", count - bad.len()),
    ))
}

/// Run the checklist. Errors from the library become failed checks.
pub fn run_suite(opts: SuiteOptions) -> SuiteReport {
    let mut checks = Vec::new();
    let mut run = |criterion: u8, name: &str, f: &mut dyn FnMut() -> Result<Vec<Check>>| {
        let start = Instant::now();
        let result = f();
        let millis = start.elapsed().as_secs_f64() * 1e3;
        match result {
            Ok(cs) => checks.extend(cs.into_iter().map(|check| SuiteCheck { criterion, check, millis })),
            Err(e) => checks.push(SuiteCheck { criterion, check: Check::new(name, false, e.to_string()), millis }),
        }
    };
    run(1, "appendix-a", &mut || Ok(vec![appendix_a()?]));
    run(2, "appendix-b", &mut || Ok(vec![appendix_b()?]));
    run(3, "d-squared", &mut || Ok(vec![d_squared()?]));
    run(4, "unit-witness-m10_139", &mut || Ok(vec![laurent_witness()?]));
    run(5, "forced-zeros", &mut || Ok(vec![forced_zeros()]));
    run(6, "simplified-presentation", &mut || Ok(vec![presentation()]));
    run(7, "six-to-four-generators", &mut || Ok(vec![lemma_relations()]));
    run(8, "shift-representation", &mut || Ok(vec![shift_operators()?]));
    run(9, "witness-search", &mut || witness_search(opts.cap));
    run(10, "unknot", &mut || Ok(vec![unknot()?]));
    run(10, "finite-models", &mut || Ok(vec![finite_models(opts.seed)]));
    run(10, "ring-consistency", &mut || Ok(vec![ring_consistency(opts.random_plats, opts.seed)?]));
    SuiteReport { checks }
}
