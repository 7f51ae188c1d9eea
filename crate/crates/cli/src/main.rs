//! `legdga`: command-line front end.
//!
//! Exit codes: 0 success, 1 mathematical negative, 2 unknown at the
//! completion cap (or no certificate found), 3 input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use legdga::cert::{
    augmentation_search, certify_augmentation, certify_representation, m10_161_representation, Certificate,
};
use legdga::charalg::{
    derive_zero_generators, relations, search_unit_witness, simplify_presentation, verify_unit_witness, WitnessSearch,
};
use legdga::dga::{
    appendix_m10_139, appendix_m10_161, check_d_squared, compute_differential, BasepointPolicy, GradedDga,
};
use legdga::freealg::{parse_poly, Coefficient, Laurent, LaurentPoly, Poly, Z2Poly, Z2};
use legdga::front::{build_front, classical_invariants, FrontDiagram};
use legdga::knots::{self, KnotRecord};
use legdga::report::{Check, RunReport, Verdict};
use legdga::suite::{run_suite, SuiteOptions};
use legdga::Error;

#[derive(Parser, Debug)]
#[command(name = "legdga", version, about = "Chekanov-Eliashberg DGAs of Legendrian plat fronts")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Built-in knot name (m10_161, m10_139, unknot).
    #[arg(long, global = true)]
    knot: Option<String>,
    /// Knot file in JSON: {"name", "strands", "word"}.
    #[arg(long, global = true, conflicts_with = "knot")]
    file: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "z2")]
    ring: RingArg,
    /// Completion cap (largest overlap length).
    #[arg(long, global = true, default_value_t = legdga::charalg::DEFAULT_CAP)]
    cap: usize,
    /// Basepoint: bottom, top or cusp:<i> (i-th right cusp from the top).
    #[arg(long, global = true, default_value = "bottom")]
    basepoint: String,
    /// Use the published differential instead of computing one (m10_161
    /// over Z/2, m10_139 over Z[t,t^-1]).
    #[arg(long, global = true)]
    table: bool,
    /// Write a JSON report here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RingArg {
    Z2,
    Laurent,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Thurston-Bennequin and rotation numbers, gradings.
    Invariants,
    /// Print the differential.
    Dga,
    /// Check that ∂² = 0.
    D2check,
    /// Forced zeros and a simplified presentation of the characteristic algebra.
    Charalg {
        /// Also quotient by the built-in auxiliary ideal of m10_161.
        #[arg(long)]
        builtin_ideal: bool,
        /// Also quotient by the polynomials in this file, one per line.
        #[arg(long)]
        ideal: Option<PathBuf>,
    },
    /// Verify or search for an element with ∂w = 1.
    Witness {
        #[command(subcommand)]
        action: WitnessAction,
    },
    /// Certify nontriviality by a representation or an augmentation.
    Certify {
        #[arg(long, value_enum, default_value = "auto")]
        method: CertMethod,
    },
    /// Run the full seeded reproduction checklist.
    PaperSuite {
        #[arg(long, default_value_t = SuiteOptions::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SuiteOptions::default().random_plats)]
        random_plats: usize,
    },
}

#[derive(Subcommand, Debug)]
enum WitnessAction {
    Verify {
        /// The element, e.g. "(x_2 + x_10) x_22 + x_43".
        #[arg(long)]
        element: String,
    },
    Search,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CertMethod {
    Auto,
    Representation,
    Augmentation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Ok = 0,
    Negative = 1,
    Unknown = 2,
    InputError = 3,
}

struct Failure(Outcome, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchAborted(_) | Error::DiskGuard { .. } => Outcome::Unknown,
            _ => Outcome::InputError,
        };
        Failure(code, e.to_string())
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(Outcome::InputError, msg.into())
}

struct Session<'a> {
    global: &'a Global,
    name: String,
    front: FrontDiagram,
    report: RunReport,
}

impl<'a> Session<'a> {
    fn open(global: &'a Global) -> Result<Self, Failure> {
        let record = match (&global.knot, &global.file) {
            (Some(name), _) => knots::lookup(name)?,
            (None, Some(path)) => {
                let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
                KnotRecord::from_json(&text)?
            }
            (None, None) => return Err(input_error("one of --knot or --file is required")),
        };
        let front = build_front(record.braid()?);
        let mut report = RunReport::new(record.name.clone());
        report.generator_count = front.generator_count();
        Ok(Session { global, name: record.name, front, report })
    }

    fn basepoint(&self) -> Result<BasepointPolicy, Failure> {
        BasepointPolicy::parse(&self.global.basepoint)
            .ok_or_else(|| input_error(format!("unknown basepoint `{}`", self.global.basepoint)))
    }

    fn dga<C: Coefficient>(
        &mut self,
        table: impl FnOnce(&str) -> Option<GradedDga<C>>,
    ) -> Result<GradedDga<C>, Failure> {
        let start = Instant::now();
        let dga = if self.global.table {
            table(&self.name)
                .ok_or_else(|| input_error(format!("no published table for {} over this ring", self.name)))?
        } else {
            compute_differential::<C>(&self.front, self.basepoint()?)?
        };
        self.report.time("dga", start.elapsed());
        Ok(dga)
    }

    fn z2(&mut self) -> Result<GradedDga<Z2>, Failure> {
        self.dga(|n| match n {
            "m10_161" => Some(appendix_m10_161()),
            "m10_139" => Some(appendix_m10_139().to_z2()),
            _ => None,
        })
    }

    fn laurent(&mut self) -> Result<GradedDga<Laurent>, Failure> {
        self.dga(|n| (n == "m10_139").then(appendix_m10_139))
    }

    fn finish(mut self, verdict: Option<Verdict>) -> Result<(), Failure> {
        self.report.verdict = verdict;
        if let Some(path) = &self.global.report {
            fs::write(path, self.report.to_json()).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }
}

fn published_match<C: Coefficient>(dga: &GradedDga<C>, table: Option<GradedDga<C>>) -> Option<Check> {
    let table = table?;
    let same =
        dga.generator_count() == table.generator_count() && dga.generators().all(|g| dga.diff(g) == table.diff(g));
    let n = table.generator_count();
    let matching = dga.generators().filter(|&g| g.index() < n && dga.diff(g) == table.diff(g)).count();
    Some(Check::new("appendix-match", same, format!("{matching}/{n} generators match the published table")))
}

fn cmd_invariants(mut s: Session) -> Result<Outcome, Failure> {
    let inv = classical_invariants(&s.front)?;
    let grading = legdga::dga::compute_gradings(&s.front)?;
    println!("knot: {}", s.name);
    println!("tb: {}", inv.tb);
    println!("r: {} (topmost left cusp traversed downward; defined up to sign)", inv.r);
    println!("generators: {}", s.front.generator_count());
    println!("grading modulus: {}", grading.modulus);
    let degrees: Vec<String> = grading.degrees.iter().enumerate().map(|(i, d)| format!("x_{}:{d}", i + 1)).collect();
    println!("gradings: {}", degrees.join(" "));
    s.report.invariants = Some(inv);
    s.finish(None)?;
    Ok(Outcome::Ok)
}

fn cmd_dga(mut s: Session) -> Result<Outcome, Failure> {
    let check = match s.global.ring {
        RingArg::Z2 => {
            let dga = s.z2()?;
            print!("{}", dga.render());
            let table = match s.name.as_str() {
                "m10_161" => Some(appendix_m10_161()),
                "m10_139" => Some(appendix_m10_139().to_z2()),
                _ => None,
            };
            published_match(&dga, table)
        }
        RingArg::Laurent => {
            let dga = s.laurent()?;
            print!("{}", dga.render());
            published_match(&dga, (s.name == "m10_139").then(appendix_m10_139))
        }
    };
    if let Some(c) = check {
        eprintln!("{}", c.detail);
        s.report.check(c);
    }
    s.finish(None)?;
    Ok(Outcome::Ok)
}

fn d2_check<C: Coefficient>(dga: &GradedDga<C>) -> Result<Check, Failure> {
    let r = check_d_squared(dga)?;
    for (g, v) in &r.failures {
        println!("∂²{} = {}", dga.names().name(*g), v.render(dga.names()));
    }
    Ok(Check::new(
        "d-squared",
        r.passed(),
        format!("{}/{} generators with ∂² = 0", r.checked - r.failures.len(), r.checked),
    ))
}

fn cmd_d2check(mut s: Session) -> Result<Outcome, Failure> {
    let check = match s.global.ring {
        RingArg::Z2 => d2_check(&s.z2()?)?,
        RingArg::Laurent => d2_check(&s.laurent()?)?,
    };
    println!("{}", check.detail);
    let passed = check.passed;
    s.report.check(check);
    s.finish(None)?;
    Ok(if passed { Outcome::Ok } else { Outcome::Negative })
}

fn read_ideal(path: &PathBuf, dga: &GradedDga<Z2>) -> Result<Vec<Z2Poly>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| Ok(parse_poly(l, dga.names())?.to_z2()))
        .collect()
}

fn cmd_charalg(mut s: Session, builtin_ideal: bool, ideal: Option<PathBuf>) -> Result<Outcome, Failure> {
    if s.global.ring != RingArg::Z2 {
        return Err(input_error("characteristic algebra computations are over Z/2; use --ring z2"));
    }
    let dga = s.z2()?;
    let mut extra = Vec::new();
    if builtin_ideal {
        if s.name != "m10_161" {
            return Err(input_error("the built-in auxiliary ideal belongs to m10_161"));
        }
        extra.extend(relations::m10_161_ideal());
    }
    if let Some(path) = &ideal {
        extra.extend(read_ideal(path, &dga)?);
    }
    let start = Instant::now();
    let zeros = derive_zero_generators(&dga);
    let pres = simplify_presentation(&dga, &extra);
    s.report.time("charalg", start.elapsed());
    let names: Vec<String> = zeros.iter().map(|&g| dga.names().name(g)).collect();
    println!("forced zeros: {}", names.join(", "));
    print!("{}", pres.render(dga.names()));
    s.report.check(Check::new("forced-zeros", true, names.join(", ")));
    s.finish(None)?;
    Ok(Outcome::Ok)
}

fn check_element<C: Coefficient>(dga: &GradedDga<C>, w: &Poly<C>) -> Result<(), Failure> {
    match w.generators().into_iter().find(|g| g.index() >= dga.generator_count()) {
        Some(g) => Err(input_error(format!("{} is not a generator of this DGA", dga.names().name(g)))),
        None => Ok(()),
    }
}

fn verify<C: Coefficient>(s: &mut Session, dga: &GradedDga<C>, w: &Poly<C>) -> Result<Option<Verdict>, Failure> {
    check_element(dga, w)?;
    let start = Instant::now();
    let verdict = Verdict::trivial(dga, w)?;
    s.report.time("verify", start.elapsed());
    let image = dga.derivation()?.apply(w);
    println!("∂({}) = {}", w.render(dga.names()), image.render(dga.names()));
    Ok(verdict)
}

fn cmd_witness_verify(mut s: Session, element: &str) -> Result<Outcome, Failure> {
    let parsed: LaurentPoly = parse_poly(element, &legdga::freealg::Names::Indexed)?;
    let verdict = match s.global.ring {
        RingArg::Z2 => {
            let dga = s.z2()?;
            verify(&mut s, &dga, &parsed.to_z2())?
        }
        RingArg::Laurent => {
            let dga = s.laurent()?;
            verify(&mut s, &dga, &parsed)?
        }
    };
    let ok = verdict.is_some();
    println!("{}", if ok { "verified" } else { "not a witness" });
    s.report.check(Check::new("witness", ok, if ok { "∂w = 1" } else { "∂w ≠ 1" }));
    s.finish(verdict)?;
    Ok(if ok { Outcome::Ok } else { Outcome::Negative })
}

fn cmd_witness_search(mut s: Session) -> Result<Outcome, Failure> {
    let dga = s.z2()?;
    let cap = s.global.cap;
    let start = Instant::now();
    let result = search_unit_witness(&dga, cap)?;
    s.report.time("search", start.elapsed());
    match result {
        WitnessSearch::Found(w) => {
            let ok = verify_unit_witness(&dga, &w.element)?;
            println!("witness over Z/2 ({} terms): {}", w.element.len(), w.element.render(dga.names()));
            if s.global.ring == RingArg::Laurent {
                let ld = s.laurent()?;
                let lifted = LaurentPoly::lift_z2(&w.element);
                let lift_ok = verify_unit_witness(&ld, &lifted)?;
                println!("lift with coefficients 1 verified over Z[t,t^-1]: {lift_ok}");
            }
            let verdict = Verdict::trivial(&dga, &w.element)?;
            s.report.check(Check::new("witness", ok, "search result verified"));
            s.finish(verdict)?;
            Ok(if ok { Outcome::Ok } else { Outcome::Negative })
        }
        WitnessSearch::UnitInIdeal { candidates } => {
            println!("1 lies in the ideal at cap {cap}, but no witness was assembled from {candidates} candidates");
            s.finish(Some(Verdict::UnknownAtCap { cap }))?;
            Ok(Outcome::Unknown)
        }
        WitnessSearch::UnknownAtCap { status, rules } => {
            println!("unknown at cap {cap}: completion {status:?} with {rules} rules; 1 not reduced to 0");
            s.finish(Some(Verdict::UnknownAtCap { cap }))?;
            Ok(Outcome::Unknown)
        }
    }
}

fn cmd_certify(mut s: Session, method: CertMethod) -> Result<Outcome, Failure> {
    let dga = s.z2()?;
    let start = Instant::now();
    let use_rep = match method {
        CertMethod::Representation => true,
        CertMethod::Augmentation => false,
        CertMethod::Auto => s.name == "m10_161",
    };
    let cert: Option<Certificate> = if use_rep {
        if s.name != "m10_161" {
            return Err(input_error("a built-in representation exists only for m10_161"));
        }
        certify_representation(&s.name, &dga, &m10_161_representation())?
    } else {
        let mut found = None;
        for graded in [true, false] {
            if graded && dga.grading().is_none() {
                continue;
            }
            let search = augmentation_search(&dga, graded)?;
            println!(
                "{} augmentations: {}{}",
                if graded { "graded" } else { "ungraded" },
                search.augmentations.len(),
                if search.truncated { " (truncated)" } else { "" }
            );
            if let Some(a) = search.augmentations.first() {
                found = certify_augmentation(&s.name, &dga, a);
                break;
            }
        }
        found
    };
    s.report.time("certify", start.elapsed());
    match cert {
        Some(c) => {
            println!("{}", c.to_json());
            s.report.check(Check::new("certificate", true, format!("{:?} certificate checked", c.kind)));
            s.finish(Some(Verdict::certified(c)))?;
            Ok(Outcome::Ok)
        }
        None => {
            println!("no certificate found");
            s.finish(None)?;
            Ok(Outcome::Unknown)
        }
    }
}

fn cmd_suite(global: &Global, seed: u64, random_plats: usize) -> Result<Outcome, Failure> {
    let report = run_suite(SuiteOptions { cap: global.cap, random_plats, seed });
    print!("{}", report.render());
    if let Some(path) = &global.report {
        fs::write(path, report.to_json()).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    }
    Ok(if report.all_passed() { Outcome::Ok } else { Outcome::Negative })
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let g = &cli.global;
    match cli.command {
        Command::PaperSuite { seed, random_plats } => cmd_suite(g, seed, random_plats),
        Command::Invariants => cmd_invariants(Session::open(g)?),
        Command::Dga => cmd_dga(Session::open(g)?),
        Command::D2check => cmd_d2check(Session::open(g)?),
        Command::Charalg { builtin_ideal, ideal } => cmd_charalg(Session::open(g)?, builtin_ideal, ideal),
        Command::Witness { action: WitnessAction::Verify { element } } => {
            cmd_witness_verify(Session::open(g)?, &element)
        }
        Command::Witness { action: WitnessAction::Search } => cmd_witness_search(Session::open(g)?),
        Command::Certify { method } => cmd_certify(Session::open(g)?, method),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Outcome::InputError as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(o) => ExitCode::from(o as u8),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
