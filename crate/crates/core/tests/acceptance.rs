//! Acceptance checks, one PASS/FAIL line per criterion.
//!
//! Reference values are read from the LaTeX source in `paper.md` at the
//! workspace root and compared with the library through oracles written
//! here: a table parser, a Leibniz evaluator, a shift-operator evaluator,
//! a zero-forcing fixed point and an overlap checker.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use legdga::cert::matrix::{exhaustive_finite_model, satisfies_four_relations, BitMatrix};
use legdga::cert::{certify_representation, m10_161_representation, shift_names};
use legdga::charalg::relations::{self, four_names, six_names};
use legdga::charalg::{
    complete_bounded, derive_zero_generators, ideal_equiv_bounded, search_unit_witness, simplify_presentation,
    verify_unit_witness, CompletionStatus, RewriteSystem, WitnessSearch,
};
use legdga::dga::{
    appendix_m10_139, appendix_m10_161, check_d_squared, compute_differential, compute_gradings, BasepointPolicy,
    GradedDga,
};
use legdga::freealg::{parse_indexed, parse_poly, Gen, Laurent, LaurentPoly, Names, Word, Z2Poly, Z2};
use legdga::front::{build_front, classical_invariants};
use legdga::knots;
use legdga::suite::random_knot_plat;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Mono = (Vec<usize>, i64);
/// An integer combination of words times powers of `t`.
type Lin = BTreeMap<Mono, i64>;
type Criterion<'a> = Box<dyn Fn() -> (bool, String) + 'a>;

fn published() -> String {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../paper.md");
    std::fs::read_to_string(path).expect("paper.md at the workspace root")
}

fn add_to(out: &mut Lin, m: Mono, c: i64) {
    let e = out.entry(m.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        out.remove(&m);
    }
}

/// `sum of [+|-] [integer] factors` with factors `x_{n}`, `t` or `t^{k}`.
fn parse_latex_sum(text: &str) -> Lin {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    let mut out = Lin::new();
    let number = |s: &[char], i: &mut usize| -> i64 {
        let start = *i;
        if s.get(*i) == Some(&'-') {
            *i += 1;
        }
        while *i < s.len() && s[*i].is_ascii_digit() {
            *i += 1;
        }
        s[start..*i].iter().collect::<String>().parse().expect("integer")
    };
    while i < s.len() {
        let mut sign = 1;
        if s[i] == '+' || s[i] == '-' {
            sign = if s[i] == '-' { -1 } else { 1 };
            i += 1;
        }
        let mut coef = 1;
        if s[i].is_ascii_digit() {
            coef = number(&s, &mut i);
        }
        let (mut word, mut exp) = (Vec::new(), 0);
        while i < s.len() && (s[i] == 'x' || s[i] == 't') {
            if s[i] == 'x' {
                assert_eq!(s[i + 1], '_');
                let braced = s[i + 2] == '{';
                i += if braced { 3 } else { 2 };
                word.push(number(&s, &mut i) as usize);
                if braced {
                    assert_eq!(s[i], '}');
                    i += 1;
                }
            } else {
                i += 1;
                if s.get(i) == Some(&'^') {
                    assert_eq!(s[i + 1], '{');
                    i += 2;
                    exp += number(&s, &mut i);
                    i += 1;
                } else {
                    exp += 1;
                }
            }
        }
        add_to(&mut out, (word, exp), sign * coef);
    }
    out
}

/// The differential tables following the given section title.
fn table(src: &str, title: &str) -> BTreeMap<usize, Lin> {
    let start = src.find(title).expect("section present");
    let end = start + src[start..].find("\\end{itemize}").expect("table ends");
    let mut out = BTreeMap::new();
    for line in src[start..end].lines() {
        let Some(rest) = line.trim().strip_prefix("\\item $\\partial x_{") else { continue };
        let (label, rhs) = rest.split_once("} =").expect("item shape");
        let rhs = rhs.trim().trim_end_matches('$');
        let prev = out.insert(label.parse::<usize>().unwrap(), parse_latex_sum(rhs));
        assert!(prev.is_none(), "duplicate item {label}");
    }
    out
}

fn table_a(src: &str) -> BTreeMap<usize, Lin> {
    table(src, "\\section{The Differential over $\\mathbb{Z}/2$")
}

fn table_b(src: &str) -> BTreeMap<usize, Lin> {
    table(src, "\\section{The Differential over $\\mathbb{Z}[t,t^{-1}]$")
}

fn mod2(l: &Lin) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for ((w, _), c) in l {
        if c.rem_euclid(2) == 1 && !out.remove(w) {
            out.insert(w.clone());
        }
    }
    out
}

fn labels(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|g| g.label()).collect()
}

fn z2_lin(p: &Z2Poly) -> Lin {
    p.words().map(|w| ((labels(w), 0), 1)).collect()
}

fn laurent_lin(p: &LaurentPoly) -> Lin {
    let mut out = Lin::new();
    for (w, c) in p.terms() {
        for (e, k) in c.terms() {
            add_to(&mut out, (labels(w), e), k.to_string().parse().expect("small coefficient"));
        }
    }
    out
}

/// `∂` on a combination by the graded Leibniz rule, from a table of `∂x`.
/// With `degrees` empty everything is even (the Z/2 case).
fn leibniz(d: &BTreeMap<usize, Lin>, degrees: &[i64], p: &Lin) -> Lin {
    let mut out = Lin::new();
    for ((w, e), c) in p {
        let mut parity = 0;
        for (i, &g) in w.iter().enumerate() {
            let sign = if parity % 2 == 0 { 1 } else { -1 };
            for ((dw, de), dc) in &d[&g] {
                let mut word = w[..i].to_vec();
                word.extend_from_slice(dw);
                word.extend_from_slice(&w[i + 1..]);
                add_to(&mut out, (word, e + de), sign * c * dc);
            }
            parity += degrees.get(g - 1).copied().unwrap_or(0).rem_euclid(2);
        }
    }
    out
}

fn as_z2_table(t: &BTreeMap<usize, Lin>) -> BTreeMap<usize, Lin> {
    t.iter().map(|(g, l)| (*g, mod2(l).into_iter().map(|w| ((w, 0), 1)).collect())).collect()
}

fn reduce_mod2(l: Lin) -> Lin {
    mod2(&l).into_iter().map(|w| ((w, 0), 1)).collect()
}

fn z2_dga_lins(dga: &GradedDga<Z2>) -> BTreeMap<usize, Lin> {
    dga.generators().map(|g| (g.label(), z2_lin(dga.diff(g)))).collect()
}

fn laurent_dga_lins(dga: &GradedDga<Laurent>) -> BTreeMap<usize, Lin> {
    dga.generators().map(|g| (g.label(), laurent_lin(dga.diff(g)))).collect()
}

fn front(name: &str) -> legdga::FrontDiagram {
    build_front(knots::builtin(name).unwrap())
}

/// The LaTeX between `start` and `end`, after `from`.
fn between<'a>(src: &'a str, from: &str, start: &str, end: &str) -> &'a str {
    let i = src.find(from).expect("anchor present");
    let j = i + src[i..].find(start).expect("start present") + start.len();
    let k = j + src[j..].find(end).expect("end present");
    &src[j..k]
}

/// `x_{12}` to `x_12`, drop spacing macros.
fn detex(s: &str) -> String {
    let mut out = String::new();
    let mut rest = s;
    while let Some(i) = rest.find("\\vphantom{") {
        out.push_str(&rest[..i]);
        let mut depth = 0;
        let mut end = i + "\\vphantom".len();
        for (k, ch) in rest[end..].char_indices() {
            match ch {
                '{' => depth += 1,
                '}' => {
                    depth -= 1;
                    if depth == 0 {
                        end += k + 1;
                        break;
                    }
                }
                _ => {}
            }
        }
        rest = &rest[end..];
    }
    out.push_str(rest);
    let mut s = out;
    for (a, b) in [("\\left.", ""), ("\\right.", ""), ("\\left", ""), ("\\right", ""), ("\\!", ""), ("\\\\", " ")] {
        s = s.replace(a, b);
    }
    let mut t = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '_' && chars.peek() == Some(&'{') {
            chars.next();
            t.push('_');
            for d in chars.by_ref() {
                if d == '}' {
                    break;
                }
                t.push(d);
            }
        } else {
            t.push(c);
        }
    }
    t
}

/// Relations `lhs = rhs` from the lines of an `align` block, as `lhs + rhs`.
fn align_relations(block: &str, names: &Names) -> Vec<Z2Poly> {
    block
        .split("\\\\")
        .filter_map(|line| {
            let line = match line.find("\\label{") {
                Some(i) => format!("{}{}", &line[..i], &line[i + line[i..].find('}').unwrap() + 1..]),
                None => line.to_string(),
            };
            let line = line.replace("\\nonumber", "").replace('&', "");
            let (l, r) = line.split_once('=')?;
            let text = format!("{} + ({})", detex(l).trim(), detex(r).trim().trim_end_matches(['.', ',']));
            Some(parse_poly(&text, names).expect("relation parses").to_z2())
        })
        .collect()
}

fn labelled_relations(src: &str, first: &str, count: usize, names: &Names) -> Vec<Z2Poly> {
    let i = src.find(&format!("\\label{{eqn:{first}}}")).expect("label present");
    let block = &src[src[..i].rfind("\\begin{align}").unwrap() + "\\begin{align}".len()..];
    let end = block.find("\\end{align}").unwrap();
    let rels = align_relations(&block[..end], names);
    assert_eq!(rels.len(), count, "{first}");
    rels
}

fn x_labels(s: &str) -> Vec<usize> {
    let mut out = Vec::new();
    let mut rest = s;
    while let Some(i) = rest.find("x_") {
        rest = &rest[i + 2..];
        let digits: String = rest.trim_start_matches('{').chars().take_while(|c| c.is_ascii_digit()).collect();
        out.push(digits.parse().unwrap());
    }
    out
}

// ---------------------------------------------------------------- criteria

fn c1(src: &str) -> (bool, String) {
    let want = table_a(src);
    let start = Instant::now();
    let dga = compute_differential::<Z2>(&front("m10_161"), BasepointPolicy::default()).unwrap();
    let took = start.elapsed();
    let got = z2_dga_lins(&dga);
    let matching = want.iter().filter(|(g, l)| got.get(g).map(mod2) == Some(mod2(l))).count();
    let ok = want.len() == 40 && got.len() == 40 && matching == 40 && took < Duration::from_secs(10);
    (ok, format!("{matching}/40 Z/2 differentials equal the published table in {took:?}"))
}

fn c2(src: &str) -> (bool, String) {
    let want = table_b(src);
    let start = Instant::now();
    let dga = compute_differential::<Laurent>(&front("m10_139"), BasepointPolicy::default()).unwrap();
    let took = start.elapsed();
    let got = laurent_dga_lins(&dga);
    let exact = want.iter().filter(|(g, l)| got.get(g) == Some(l)).count();
    let reduced = want.iter().filter(|(g, l)| got.get(g).map(mod2) == Some(mod2(l))).count();
    let ok = want.len() == 45 && exact == 45 && reduced == 45 && took < Duration::from_secs(10);
    (ok, format!("{exact}/45 signed and {reduced}/45 reduced differentials match in {took:?}"))
}

fn c3(src: &str) -> (bool, String) {
    let a = compute_differential::<Z2>(&front("m10_161"), BasepointPolicy::default()).unwrap();
    let b = compute_differential::<Laurent>(&front("m10_139"), BasepointPolicy::default()).unwrap();
    let degrees = compute_gradings(&front("m10_139")).unwrap().degrees;
    let mut zero = 0;
    let mut total = 0;
    let mut count = |d: &BTreeMap<usize, Lin>, degrees: &[i64], z2: bool| {
        for l in d.values() {
            let dd = leibniz(d, degrees, l);
            let dd = if z2 { reduce_mod2(dd) } else { dd };
            total += 1;
            zero += dd.is_empty() as usize;
        }
    };
    count(&z2_dga_lins(&a), &[], true);
    count(&laurent_dga_lins(&b), &degrees, false);
    count(&as_z2_table(&table_a(src)), &[], true);
    count(&table_b(src), &degrees, false);
    let library = [
        check_d_squared(&a).unwrap().passed(),
        check_d_squared(&b).unwrap().passed(),
        check_d_squared(&appendix_m10_161()).unwrap().passed(),
        check_d_squared(&appendix_m10_139()).unwrap().passed(),
    ];
    let ok = zero == total && total == 170 && library.iter().all(|&x| x);
    (ok, format!("{zero}/{total} generator checks zero (85 computed, 85 transcribed); library agrees: {library:?}"))
}

fn c4(src: &str) -> (bool, String) {
    let block = between(src, "such that $\\partial a = 1$", "1 = \\partial", "\\end{multline*}");
    let text = detex(block).trim().trim_end_matches('.').to_string();
    let element = parse_indexed(&text).expect("displayed element parses");
    let same_as_builtin = element == relations::m10_139_witness();
    let table = table_b(src);
    let degrees = compute_gradings(&front("m10_139")).unwrap().degrees;
    let image = leibniz(&table, &degrees, &laurent_lin(&element));
    let oracle = image == Lin::from([((vec![], 0), 1)]);
    let start = Instant::now();
    let lib = verify_unit_witness(&appendix_m10_139(), &element).unwrap();
    let took = start.elapsed();
    let ok = oracle && lib && same_as_builtin && took < Duration::from_secs(1);
    (ok, format!("∂w = 1 over Z[t,t^-1]: oracle {oracle}, library {lib} in {took:?}"))
}

fn zero_oracle(d: &BTreeMap<usize, Lin>) -> BTreeSet<usize> {
    let mut zeros = BTreeSet::new();
    loop {
        let mut grew = false;
        for l in d.values() {
            let live: Vec<Vec<usize>> = mod2(l).into_iter().filter(|w| w.iter().all(|g| !zeros.contains(g))).collect();
            if live.len() == 1 && live[0].len() == 1 && zeros.insert(live[0][0]) {
                grew = true;
            }
        }
        if !grew {
            return zeros;
        }
    }
}

fn c5(src: &str) -> (bool, String) {
    let stated: BTreeSet<usize> =
        x_labels(between(src, "\\label{eqn:original_zeros}", "", "\\end{equation}")).into_iter().collect();
    let oracle = zero_oracle(&table_a(src));
    let lib: BTreeSet<usize> = derive_zero_generators(&appendix_m10_161()).iter().map(|g| g.label()).collect();
    let ok = stated.len() == 8 && stated == oracle && stated == lib;
    (ok, format!("zeros {lib:?}; stated {stated:?}; oracle agrees {}", oracle == lib))
}

fn c6(src: &str) -> (bool, String) {
    let ideal_text = between(src, "Define $\\mscr{I}$", "\\begin{multline*}", "\\end{multline*}");
    let ideal: Vec<Z2Poly> = detex(ideal_text)
        .replace("\\\\", "")
        .split(',')
        .map(|s| parse_indexed(s.trim()).expect("ideal element").to_z2())
        .collect();
    let builtin = relations::m10_161_ideal();
    let eq2_block = between(src, "can be simplified as", "\\begin{align}", "\\end{align}");
    let eq2 = align_relations(eq2_block, &Names::Indexed);
    let survivors_text = between(src, "Therefore, $\\overline{C}$ is isomorphic to", "\\langle", "\\rangle");
    let stated: Vec<usize> = x_labels(survivors_text);

    let pres = simplify_presentation(&appendix_m10_161(), &ideal);
    let got: Vec<usize> = pres.generators.iter().map(|g| g.label()).collect();
    let verdict = ideal_equiv_bounded(&pres.relations, &eq2, 8);
    if ideal != builtin {
        return (false, format!("auxiliary ideal differs from the built-in one: {ideal:?}"));
    }
    let ok = eq2.len() == 7 && got == stated && verdict.is_equivalent();
    (
        ok,
        format!("survivors {got:?} (stated {stated:?}); {} relations vs 7: {verdict:?} at cap 8", pres.relations.len()),
    )
}

fn c7(src: &str) -> (bool, String) {
    let six = six_names();
    let first = labelled_relations(src, "ebaf", 7, &six);
    let second = labelled_relations(src, "ca2", 7, &six);
    let lemma_text =
        between(src, "\\begin{lemma}\\label{lem:Aiso}", "\\langle a,b,c,d \\rangle / \\langle", "\\rangle");
    let four = four_names();
    let stated: Vec<Z2Poly> = lemma_text
        .split(',')
        .map(|r| {
            let (l, rr) = r.split_once('=').unwrap();
            parse_poly(&format!("{} + {}", l.trim(), rr.trim()), &four).unwrap().to_z2()
        })
        .collect();
    let builtin_ok = first == relations::six_generator_relations() && second == relations::six_generator_linear_form();
    let both_ways = ideal_equiv_bounded(&first, &second, 6);
    let eliminated = ideal_equiv_bounded(&relations::six_generator_relations_eliminated(), &stated, 6);
    let ok = builtin_ok && both_ways.is_equivalent() && eliminated.is_equivalent();
    (ok, format!("six-generator sets: {both_ways:?}; with e = a+d, f = b+c eliminated: {eliminated:?} (cap 6)"))
}

/// The shift maps on basis indices.
fn shift(letter: char, n: u64) -> Option<u64> {
    match letter {
        'a' => Some(2 * n + 1),
        'b' => n.is_multiple_of(2).then_some(n / 2),
        'c' => (n % 2 == 1).then_some(n / 2),
        'd' => Some(2 * n),
        _ => unreachable!(),
    }
}

/// An operator as a set of words in `a..d`, acting right to left.
type Op = BTreeSet<String>;

fn op_of(p: &Z2Poly) -> Op {
    let names = shift_names();
    p.words().map(|w| w.letters().iter().map(|&g| names.name(g).chars().next().unwrap()).collect()).collect()
}

fn act(op: &Op, v: &BTreeSet<u64>) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for &n in v {
        for w in op {
            if let Some(m) = w.chars().rev().try_fold(n, |k, l| shift(l, k)) {
                if !out.remove(&m) {
                    out.insert(m);
                }
            }
        }
    }
    out
}

fn c8(src: &str) -> (bool, String) {
    let four = four_names();
    let lemma_text =
        between(src, "\\begin{lemma}\\label{lem:Aiso}", "\\langle a,b,c,d \\rangle / \\langle", "\\rangle");
    let rels: Vec<Op> = lemma_text
        .split(',')
        .map(|r| {
            let (l, rr) = r.split_once('=').unwrap();
            op_of(&parse_poly(&format!("{} + {}", l.trim(), rr.trim()), &four).unwrap().to_z2())
        })
        .collect();
    let ops_ok = rels.len() == 5 && rels.iter().all(|op| (0..64).all(|n| act(op, &BTreeSet::from([n])).is_empty()));

    let dga = appendix_m10_161();
    let cert = certify_representation("m10_161", &dga, &m10_161_representation()).unwrap();
    let Some(cert) = cert else { return (false, "no certificate".into()) };
    let assign: BTreeMap<usize, Op> = cert
        .assignment
        .iter()
        .map(|(k, v)| {
            let g: usize = k.trim_start_matches("x_").parse().unwrap();
            (g, op_of(&parse_poly(v, &shift_names()).unwrap().to_z2()))
        })
        .collect();
    let table = table_a(src);
    let mut annihilated = 0;
    for l in table.values() {
        let ok = (0..64u64).all(|n| {
            let mut total = BTreeSet::new();
            for w in mod2(l) {
                let v = w.iter().rev().fold(BTreeSet::from([n]), |v, g| act(&assign[g], &v));
                for m in v {
                    if !total.remove(&m) {
                        total.insert(m);
                    }
                }
            }
            total.is_empty()
        });
        annihilated += ok as usize;
    }
    let nonzero = assign.values().any(|op| (0..64).any(|n| !act(op, &BTreeSet::from([n])).is_empty()));
    let ok = ops_ok && annihilated == 40 && nonzero && cert.verdict == "NontrivialCertified";
    (ok, format!("five relations on e_0..e_63: {ops_ok}; {annihilated}/40 differentials act by 0; {}", cert.verdict))
}

fn c9(src: &str) -> (bool, String) {
    let b = appendix_m10_139().to_z2();
    let start = Instant::now();
    let found = search_unit_witness(&b, 12).unwrap();
    let tb = start.elapsed();
    let witness_ok = match &found {
        WitnessSearch::Found(w) => {
            let d = as_z2_table(&table_b(src));
            reduce_mod2(leibniz(&d, &[], &z2_lin(&w.element))) == Lin::from([((vec![], 0), 1)])
        }
        _ => false,
    };
    let a = appendix_m10_161();
    let start = Instant::now();
    let unknown = search_unit_witness(&a, 12).unwrap();
    let ta = start.elapsed();
    let a_ok = matches!(unknown, WitnessSearch::UnknownAtCap { .. });
    let limit = Duration::from_secs(60);
    let ok = witness_ok && a_ok && tb < limit && ta < limit;
    (
        ok,
        format!(
            "m10_139: witness verified by oracle {witness_ok} in {tb:?}; m10_161 unknown at cap 12: {a_ok} in {ta:?}"
        ),
    )
}

/// Every critical pair of `sys` whose overlap word has length at most `cap`
/// has a common normal form.
fn overlaps_resolve(sys: &RewriteSystem, cap: usize) -> bool {
    let rules = sys.rules();
    for r in &rules {
        for s in &rules {
            let (l, m) = (r.lhs.letters(), s.lhs.letters());
            for k in 1..l.len().min(m.len()) {
                if l[l.len() - k..] != m[..k] || l.len() + m.len() - k > cap {
                    continue;
                }
                let left = r.rhs.sandwich(&Word::one(), &Word::from_slice(&m[k..]));
                let right = s.rhs.sandwich(&Word::from_slice(&l[..l.len() - k]), &Word::one());
                if sys.reduce(&left) != sys.reduce(&right) {
                    return false;
                }
            }
        }
    }
    true
}

fn c10() -> (bool, String) {
    let unknot = front("unknot");
    let inv = classical_invariants(&unknot).unwrap();
    let grading = compute_gradings(&unknot).unwrap();
    let unknot_ok = inv.tb == -1 && inv.r == 0 && grading.degrees == [1];

    let mut rng = StdRng::seed_from_u64(2718);
    let mut consistent = 0;
    for _ in 0..100 {
        let f = build_front(random_knot_plat(&mut rng));
        let z = compute_differential::<Z2>(&f, BasepointPolicy::default()).unwrap();
        let l = compute_differential::<Laurent>(&f, BasepointPolicy::default()).unwrap();
        let reduced: BTreeMap<usize, BTreeSet<Vec<usize>>> =
            laurent_dga_lins(&l).iter().map(|(g, p)| (*g, mod2(p))).collect();
        let direct: BTreeMap<usize, BTreeSet<Vec<usize>>> =
            z2_dga_lins(&z).iter().map(|(g, p)| (*g, mod2(p))).collect();
        consistent += (reduced == direct) as usize;
    }

    let d = laurent_dga_lins(&appendix_m10_139());
    let degrees = compute_gradings(&front("m10_139")).unwrap().degrees;
    let mut leibniz_ok = true;
    let lib = appendix_m10_139().derivation().unwrap();
    for _ in 0..50 {
        let n = rng.gen_range(1..4);
        let text: Vec<String> = (0..n)
            .map(|_| {
                let len = rng.gen_range(1..4);
                (0..len).map(|_| format!("x_{}", rng.gen_range(1..=45))).collect::<Vec<_>>().join(" ")
            })
            .collect();
        let p = parse_indexed(&text.join(" - ")).unwrap();
        leibniz_ok &= laurent_lin(&lib.apply(&p)) == leibniz(&d, &degrees, &laurent_lin(&p));
    }

    let rels = relations::four_generator_relations();
    let sys = complete_bounded(&rels, 6);
    let nf_ok = (0..50).all(|_| {
        let w: Vec<usize> = (0..rng.gen_range(0..7)).map(|_| rng.gen_range(1..=4)).collect();
        let nf = sys.reduce(&Z2Poly::word(Word::from_labels(&w)));
        sys.reduce(&nf) == nf
    });
    let a_sys = complete_bounded(appendix_m10_161().differentials(), 6);
    let confluent =
        overlaps_resolve(&sys, 6) && overlaps_resolve(&a_sys, 6) && sys.status() != CompletionStatus::Uncompleted;

    let small = (1..=3).all(|n| exhaustive_finite_model(n).is_none());
    let mut sampled_none = true;
    for n in 4..=6 {
        for _ in 0..300 {
            let m = |rng: &mut StdRng| BitMatrix::from_code(n, rng.gen::<u64>() & ((1u64 << (n * n)) - 1));
            let (a, b, c, d) = (m(&mut rng), m(&mut rng), m(&mut rng), m(&mut rng));
            sampled_none &= !satisfies_four_relations(&a, &b, &c, &d);
            if let (Some(ai), Some(di)) = (a.inverse(), d.inverse()) {
                sampled_none &= !satisfies_four_relations(&a, &di, &ai, &d);
            }
        }
    }
    let hom_ok = {
        let x = parse_indexed("x_2 x_3 + x_1").unwrap().to_z2();
        let y = parse_indexed("x_1 + 1").unwrap().to_z2();
        let map: BTreeMap<Gen, Z2Poly> =
            BTreeMap::from([(Gen::new(1), y.clone()), (Gen::new(2), x.clone()), (Gen::new(3), Z2Poly::one())]);
        let lhs = (&x * &y).substitute(&map).unwrap();
        let rhs = &x.substitute(&map).unwrap() * &y.substitute(&map).unwrap();
        lhs == rhs
    };
    let ok = unknot_ok && consistent == 100 && leibniz_ok && nf_ok && confluent && small && sampled_none && hom_ok;
    (
        ok,
        format!(
            "unknot {unknot_ok}; ring consistency {consistent}/100; Leibniz {leibniz_ok}; homomorphism {hom_ok}; \
             normal forms idempotent {nf_ok}; overlaps resolve {confluent}; no finite model n = 1..6: {}",
            small && sampled_none
        ),
    )
}

fn main() {
    let src = published();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 Z/2 differential of m10_161", Box::new(|| c1(&src))),
        ("2 Z[t,t^-1] differential of m10_139", Box::new(|| c2(&src))),
        ("3 d squared", Box::new(|| c3(&src))),
        ("4 unit witness for m10_139", Box::new(|| c4(&src))),
        ("5 forced zeros", Box::new(|| c5(&src))),
        ("6 simplified presentation", Box::new(|| c6(&src))),
        ("7 six and four generator relations", Box::new(|| c7(&src))),
        ("8 shift operator representation", Box::new(|| c8(&src))),
        ("9 unit witness search", Box::new(|| c9(&src))),
        ("10 sanity and properties", Box::new(c10)),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let (ok, detail) = match catch_unwind(AssertUnwindSafe(f)) {
            Ok(r) => r,
            Err(e) => (
                false,
                format!(
                    "panicked: {:?}",
                    e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                ),
            ),
        };
        println!("{} criterion {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        failed += (!ok) as usize;
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
