//! Acceptance suite: one PASS/FAIL line per criterion.

mod support;

use std::collections::{BTreeMap, BTreeSet};
use std::process::{Command, ExitCode};
use std::time::Instant;

use nsgp::ci::{self, defining_binomials, delorme_check, herzog_kunz_check, herzog_kunz_m};
use nsgp::deformation::{t1_dimension, t1_spectrum};
use nsgp::knots::{self, formal_semigroup_from_alexander, Family};
use nsgp::resolution::{
    ci_predicted_diagram, component_representatives, factorizations, BettiDiagram, ShadedComplex,
};
use nsgp::series;
use nsgp::{IntPolynomial, NumericalSemigroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::{brute_membership, random_suite, sg, t1_oracle_spectrum, SEED};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

/// Shaded complexes of ⟨5,7,9⟩ in 28 degrees: vertex set, edges, and whether
/// the 2-face is present.
fn complexes_579() -> Vec<(i64, Vec<u64>, Vec<(u64, u64)>, bool)> {
    let all = vec![5, 7, 9];
    let mut fig = vec![
        (0, vec![], vec![], false),
        (5, vec![5], vec![], false),
        (7, vec![7], vec![], false),
        (9, vec![9], vec![], false),
        (10, vec![5], vec![], false),
        (12, vec![5, 7], vec![(5, 7)], false),
        (14, all.clone(), vec![(5, 9)], false),
        (15, vec![5], vec![], false),
        (16, vec![7, 9], vec![(7, 9)], false),
        (17, vec![5, 7], vec![(5, 7)], false),
        (18, vec![9], vec![], false),
        (19, all.clone(), vec![(5, 7), (5, 9)], false),
        (20, vec![5], vec![], false),
        (22, vec![5, 7], vec![(5, 7)], false),
        (23, all.clone(), vec![(5, 9), (7, 9)], false),
        (24, all.clone(), vec![(5, 7), (5, 9)], false),
        (25, all.clone(), vec![(7, 9)], false),
        (27, all.clone(), vec![(5, 7)], false),
        (29, all.clone(), vec![(5, 7), (5, 9)], false),
        (32, all.clone(), vec![(5, 7), (5, 9), (7, 9)], false),
        (34, all.clone(), vec![(5, 7), (5, 9), (7, 9)], false),
    ];
    for m in [21, 26, 28, 30, 31, 33, 35] {
        fig.push((m, all.clone(), vec![(5, 7), (5, 9), (7, 9)], true));
    }
    fig.sort_by_key(|f| f.0);
    fig
}

fn describe(k: &ShadedComplex) -> (Vec<u64>, Vec<(u64, u64)>, bool) {
    let gens = k.generators();
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut filled = false;
    for face in k.faces() {
        match face.as_slice() {
            [v] => vertices.push(gens[*v]),
            [a, b] => edges.push((gens[*a], gens[*b])),
            [_, _, _] => filled = true,
            _ => {}
        }
    }
    (vertices, edges, filled)
}

fn criterion_1() -> Outcome {
    let s = sg(&[5, 7, 9]);
    ensure!(s.conductor() == 14, "conductor {}", s.conductor());
    let d = BettiDiagram::compute(&s);
    let expected: BTreeMap<(usize, u64), usize> =
        [((0, 14), 1), ((0, 25), 1), ((0, 27), 1), ((1, 32), 1), ((1, 34), 1)].into();
    ensure!(d.entries() == &expected, "Betti entries {:?}", d.entries());
    let fig = complexes_579();
    ensure!(fig.len() == 28, "{} complexes listed", fig.len());
    for (m, vertices, edges, filled) in &fig {
        let got = describe(&ShadedComplex::new(&s, *m));
        ensure!(
            got == (vertices.clone(), edges.clone(), *filled),
            "Delta_{m}: got {got:?}"
        );
    }
    let hk = herzog_kunz_m(&s);
    ensure!(hk.m == 39, "m(S) = {}", hk.m);
    let check = herzog_kunz_check(&s).map_err(|e| e.to_string())?;
    ensure!(!check.is_ci && check.c == 14 && check.rhs == 19, "{check:?}");
    let delorme = delorme_check(s.minimal_generators()).map_err(|e| e.to_string())?;
    ensure!(!delorme.is_ci, "Delorme says CI");
    Ok("Betti support, 28 shaded complexes, m(S)=39, 14<19, not CI".into())
}

fn criterion_2() -> Outcome {
    let s = sg(&[15, 16, 24, 28]);
    let report = delorme_check(s.minimal_generators()).map_err(|e| e.to_string())?;
    let tree = report.tree.ok_or("Delorme did not certify CI")?;
    let merges = merge_order(&tree);
    ensure!(merges == vec![48, 56, 60], "merge degrees {merges:?}");
    let binomials: Vec<String> = defining_binomials(&tree).iter().map(|b| b.to_string()).collect();
    ensure!(
        binomials
            == [
                "x2^3 - x3^2  (deg 48)",
                "x2^2*x3 - x4^2  (deg 56)",
                "x1^4 - x2^2*x4  (deg 60)"
            ],
        "binomials {binomials:?}"
    );
    let hk = herzog_kunz_check(&s).map_err(|e| e.to_string())?;
    ensure!(hk.m == 164 && hk.c == 82 && hk.rhs == 82 && hk.is_ci, "{hk:?}");
    let sum: u64 = s.minimal_generators().iter().sum();
    ensure!(sum == 83, "generator sum {sum}");
    let free = s.is_free(&[16, 24, 28, 15]).map_err(|e| e.to_string())?;
    ensure!(free.is_some(), "not free under (16,24,28,15)");
    let d = BettiDiagram::compute(&s);
    ensure!(d.entries() == &ci_predicted_diagram(&[48, 56, 60]), "Betti {:?}", d.entries());
    Ok("merges 48,56,60; binomials; 82=164-83+1; free; Koszul Betti".into())
}

/// Relation degrees in the order the nodes were created (children first).
fn merge_order(tree: &ci::GluingTree) -> Vec<u64> {
    fn post(t: &ci::GluingTree, out: &mut Vec<(usize, u64)>) -> usize {
        match t {
            ci::GluingTree::Leaf { .. } => 0,
            ci::GluingTree::Node {
                left,
                right,
                relation_degree,
                ..
            } => {
                let depth = post(left, out).max(post(right, out)) + 1;
                out.push((depth, *relation_degree));
                depth
            }
        }
    }
    let mut out = Vec::new();
    post(tree, &mut out);
    out.sort();
    out.into_iter().map(|(_, d)| d).collect()
}

fn criterion_3() -> Outcome {
    let report = delorme_check(&[6, 8, 10, 17, 19]).map_err(|e| e.to_string())?;
    ensure!(!report.is_ci, "reported CI");
    let failure = report.failure.as_ref().ok_or("no failure record")?;
    ensure!(failure.partition.len() == 5, "failed after merging: {:?}", failure.partition);
    ensure!(failure.reason == ci::FailureReason::NoMatchingPair, "{:?}", failure.reason);
    let m = report.m_values_by_min();
    ensure!(
        m == BTreeMap::from([(6, 18), (8, 16), (10, 20), (17, 34), (19, 38)]),
        "m-values {m:?}"
    );
    Ok("m-values 18,16,20,34,38, stopped at step one".into())
}

fn criterion_4() -> Outcome {
    for n in 1..=10u64 {
        let a = knots::teragaito_family(n, Family::A).map_err(|e| e.to_string())?;
        let da = delorme_check(a.minimal_generators()).map_err(|e| e.to_string())?;
        let ha = herzog_kunz_check(&a).map_err(|e| e.to_string())?;
        ensure!(da.is_ci && ha.is_ci, "family A n={n}: Delorme {} HK {}", da.is_ci, ha.is_ci);

        let b = knots::teragaito_family(n, Family::B).map_err(|e| e.to_string())?;
        ensure!(b.is_symmetric(), "family B n={n} not symmetric");
        let db = delorme_check(b.minimal_generators()).map_err(|e| e.to_string())?;
        let hb = herzog_kunz_check(&b).map_err(|e| e.to_string())?;
        ensure!(!db.is_ci && !hb.is_ci, "family B n={n} reported CI");
        let expected = BTreeMap::from([
            (6, 12 * n + 12),
            (6 * n + 4, 12 * n + 8),
            (6 * n + 8, 12 * n + 16),
            (12 * n + 11, 24 * n + 22),
            (12 * n + 15, 24 * n + 30),
        ]);
        ensure!(db.m_values_by_min() == expected, "family B n={n}: {:?}", db.m_values_by_min());
    }
    Ok("n=1..10".into())
}

fn criterion_5() -> Outcome {
    let p = IntPolynomial::parse("1-t+t^3-t^4+t^5-t^6+t^7-t^9+t^10").map_err(|e| e.to_string())?;
    let f = formal_semigroup_from_alexander(&p).map_err(|e| e.to_string())?;
    let expected: Vec<u64> = [0, 3, 5, 7, 8, 10].into_iter().chain(11..=40).collect();
    ensure!(f.elements_up_to(40) == expected, "set {:?}", f.elements_up_to(40));
    ensure!(!f.closed && f.witness == Some((3, 3)), "closed {} witness {:?}", f.closed, f.witness);
    Ok("{0,3,5,7,8,10} + Z>10, witness (3,3)".into())
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for p in 2..=12u64 {
        for q in p + 1..=12 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let torus = knots::torus_alexander(p, q).map_err(|e| e.to_string())?;
            let s = sg(&[p, q]);
            // (1 − t) P truncated well past the conductor
            let n = s.conductor() + 5;
            let series = series::poincare_truncated(&s, n);
            let product = (&series * &IntPolynomial::one_minus_t_pow(1)).truncate(n as usize);
            ensure!(torus == product, "T({p},{q}): {torus} vs {product}");
            count += 1;
        }
    }
    Ok(format!("{count} coprime pairs"))
}

/// Iterated gluings starting from ℕ, each step gluing with ℕ or a
/// two-generator semigroup, keeping generators small.
fn random_ci(rng: &mut ChaCha8Rng, steps: usize) -> NumericalSemigroup {
    let mut s = sg(&[1]);
    for _ in 0..steps {
        for _ in 0..200 {
            let t = if rng.gen_bool(0.5) {
                sg(&[1])
            } else {
                let (p, q) = (rng.gen_range(2..=7u64), rng.gen_range(2..=7u64));
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                sg(&[p, q])
            };
            let (d1, d2) = (rng.gen_range(2..=12u64), rng.gen_range(2..=12u64));
            let Ok(g) = ci::glue(&s, &t, d1, d2) else {
                continue;
            };
            let g = g.semigroup;
            if g.embedding_dimension() <= 5 && g.minimal_generators().iter().all(|&a| a <= 300) {
                s = g;
                break;
            }
        }
    }
    s
}

fn criterion_7(suite: &[NumericalSemigroup]) -> Outcome {
    let mut ci_count = 0;
    let mut coprime3 = 0;
    for s in suite {
        let gens = s.minimal_generators();
        // membership agrees with plain dynamic programming
        let bound = (s.conductor() + 50) as usize;
        let brute = brute_membership(gens, bound);
        ensure!(
            (0..=bound).all(|n| brute[n] == s.contains(n as i64)),
            "{gens:?}: membership"
        );

        let hk = herzog_kunz_check(s).map_err(|e| format!("{gens:?}: {e}"))?;
        ensure!(hk.bound_holds && hk.c as i64 <= hk.rhs, "{gens:?}: (a) {hk:?}");
        let delorme = delorme_check(gens).map_err(|e| e.to_string())?;
        ensure!(delorme.is_ci == hk.is_ci, "{gens:?}: (b) Delorme {} HK {}", delorme.is_ci, hk.is_ci);
        ci_count += usize::from(hk.is_ci);

        let diagram = BettiDiagram::compute(s);
        let sym = s.is_symmetric();
        let square = diagram.square_is_symmetric();
        let palin = series::gorenstein_functional_check(s);
        let conductor_rule = s.conductor() == 2 * s.genus();
        ensure!(
            sym == square && sym == palin && sym == conductor_rule,
            "{gens:?}: (c) symmetric {sym} square {square} palindromic {palin} c=2g {conductor_rule}"
        );

        for m in s.elements_up_to(diagram.theta()) {
            let k = ShadedComplex::new(s, m as i64);
            let h = k.reduced_homology();
            let reps = component_representatives(&factorizations(s, m as i64)).len();
            ensure!(
                diagram.get(0, m) == reps.saturating_sub(1),
                "{gens:?}: (d) degree {m}: beta0 {} vs {} components",
                diagram.get(0, m),
                reps
            );
            ensure!(
                k.reduced_euler_characteristic() == h.euler_characteristic(),
                "{gens:?}: (e) Euler characteristic at {m}"
            );
        }

        if gens.len() == 3
            && (0..3).all(|i| (i + 1..3).all(|j| num_integer::gcd(gens[i], gens[j]) == 1))
        {
            coprime3 += 1;
            ensure!(!delorme.is_ci, "{gens:?}: (h) pairwise coprime but CI");
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xf);
    let mut gluings = 0;
    let mut attempts = 0;
    while gluings < 60 {
        attempts += 1;
        ensure!(attempts < 100_000, "could not produce valid gluings");
        let s1 = &suite[rng.gen_range(0..suite.len())];
        let s2 = &suite[rng.gen_range(0..suite.len())];
        let (d1, d2) = (rng.gen_range(1..=30u64), rng.gen_range(1..=30u64));
        if s1.minimal_generators().len() + s2.minimal_generators().len() > 5 || s1.conductor() > 40 || s2.conductor() > 40 {
            continue;
        }
        if ci::glue(s1, s2, d1, d2).is_err() {
            continue;
        }
        let ok = series::gluing_series_check(s1, s2, d1, d2).map_err(|e| e.to_string())?;
        ensure!(
            ok,
            "(f) gluing {:?} * {d1} + {:?} * {d2}",
            s1.minimal_generators(),
            s2.minimal_generators()
        );
        gluings += 1;
    }

    let mut built = 0;
    for _ in 0..60 {
        let steps = rng.gen_range(1..=4);
        let s = random_ci(&mut rng, steps);
        let report = delorme_check(s.minimal_generators()).map_err(|e| e.to_string())?;
        let tree = report.tree.ok_or_else(|| format!("(g) glued {:?} not CI", s.minimal_generators()))?;
        let degrees = tree.relation_degrees();
        ensure!(series::ci_numerator_check(&s, &degrees), "(g) numerator of {:?}", s.minimal_generators());
        let cyc = series::cyclotomic_test(&series::hilbert_numerator(&s)).map_err(|e| e.to_string())?;
        ensure!(cyc, "(g) cyclotomic test failed for {:?}", s.minimal_generators());
        built += 1;
    }

    let mut extra = 0;
    while extra < 40 {
        let gens: Vec<u64> = (0..3).map(|_| rng.gen_range(2..=40u64)).collect();
        if !(0..3).all(|i| (i + 1..3).all(|j| num_integer::gcd(gens[i], gens[j]) == 1)) {
            continue;
        }
        let s = sg(&gens);
        if s.embedding_dimension() != 3 {
            continue;
        }
        ensure!(!delorme_check(s.minimal_generators()).map_err(|e| e.to_string())?.is_ci, "(h) {gens:?}");
        extra += 1;
    }

    Ok(format!(
        "{} semigroups ({ci_count} CI), {gluings} gluings, {built} iterated-glue CIs, {} coprime triples",
        suite.len(),
        coprime3 + extra
    ))
}

fn criterion_8(suite: &[NumericalSemigroup]) -> Outcome {
    let cusp = t1_spectrum(&sg(&[2, 3])).map_err(|e| e.to_string())?;
    ensure!(cusp.dims == BTreeMap::from([(-6, 1), (-4, 1)]), "cusp spectrum {:?}", cusp.dims);
    let cusp_oracle = t1_oracle_spectrum(&sg(&[2, 3]));
    ensure!(cusp_oracle == cusp.dims, "cusp oracle {cusp_oracle:?}");

    let s579 = sg(&[5, 7, 9]);
    let spectrum = t1_spectrum(&s579).map_err(|e| e.to_string())?;
    let oracle: usize = t1_oracle_spectrum(&s579).values().sum();
    ensure!(
        (spectrum.tau, spectrum.tau_plus, spectrum.tau_minus, oracle) == (17, 3, 14, 17),
        "<5,7,9>: tau {} (+{} -{}), oracle {oracle}",
        spectrum.tau,
        spectrum.tau_plus,
        spectrum.tau_minus
    );

    let mut compared = 0;
    let mut seen = BTreeSet::new();
    for s in suite {
        ensure!(
            t1_dimension(s, 0).map_err(|e| e.to_string())? == 0,
            "{:?}: T1(0) nonzero",
            s.minimal_generators()
        );
        if s.conductor() > 30 || s.embedding_dimension() > 3 || !seen.insert(s.minimal_generators().to_vec()) {
            continue;
        }
        let spectrum = t1_spectrum(s).map_err(|e| e.to_string())?;
        let oracle = t1_oracle_spectrum(s);
        let oracle_total: usize = oracle.values().sum();
        ensure!(
            spectrum.tau == oracle_total,
            "{:?}: formula tau {} ({:?}) vs oracle {} ({:?})",
            s.minimal_generators(),
            spectrum.tau,
            spectrum.dims,
            oracle_total,
            oracle
        );
        compared += 1;
    }
    ensure!(compared >= 10, "only {compared} semigroups compared");
    Ok(format!(
        "<5,7,9> tau 17 = 3 + 14; {compared} distinct semigroups with c<=30, g<=3; T1(0)=0 on all {}",
        suite.len()
    ))
}

fn criterion_9(suite: &[NumericalSemigroup]) -> Outcome {
    for s in suite {
        let f = formal_semigroup_from_alexander(&knots::alexander_from_semigroup(s)).map_err(|e| e.to_string())?;
        let bound = s.conductor() + 10;
        let expected: Vec<u64> = s.elements_up_to(bound).collect();
        ensure!(
            f.closed && f.elements_up_to(bound) == expected && f.tail_from == s.conductor(),
            "{:?}: roundtrip",
            s.minimal_generators()
        );
    }

    let exe = env!("CARGO_BIN_EXE_nsgp");
    let mut runs = 0;
    for gens in ["5,7,9", "15,16,24,28", "6,8,10,17,19"] {
        let s = NumericalSemigroup::parse(gens).map_err(|e| e.to_string())?;
        let alex: Vec<String> = knots::alexander_from_semigroup(&s)
            .to_i64_vec()
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        let alex = alex.join(",");
        let m = s.multiplicity().to_string();
        let odd = (1..).find(|&n| n % 2 == 1 && s.contains(n)).unwrap().to_string();
        let invocations: Vec<Vec<&str>> = vec![
            vec!["analyze", gens],
            vec!["betti", gens],
            vec!["complex", gens, "--degree", "32"],
            vec!["complex", gens, "--all"],
            vec!["ci", gens],
            vec!["hk", gens, "--dedekind", &m],
            vec!["glue", gens, "1", "2", &odd],
            vec!["hilbert", gens, "--truncate", "40"],
            vec!["alexander", gens],
            vec!["formal-semigroup", "--alexander", &alex],
            vec!["t1", gens],
            vec!["family", "b", "2"],
        ];
        for args in invocations {
            let out = Command::new(exe)
                .args(&args)
                .args(["--format", "json"])
                .output()
                .map_err(|e| e.to_string())?;
            ensure!(out.status.success(), "{args:?} exited {:?}", out.status.code());
            let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| format!("{args:?}: {e}"))?;
            let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
            ensure!(again == text, "{args:?}: JSON is not byte-identical after a roundtrip");
            ensure!(integers_only(&value), "{args:?}: non-integer number in output");
            runs += 1;
        }
    }
    Ok(format!("{} roundtrips; {runs} CLI JSON documents", suite.len()))
}

fn integers_only(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(n) => n.is_i64() || n.is_u64(),
        serde_json::Value::Array(a) => a.iter().all(integers_only),
        serde_json::Value::Object(o) => o.values().all(integers_only),
        _ => true,
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let suite = random_suite(240);
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 <5,7,9> Betti, shaded complexes, m(S), verdicts", Box::new(criterion_1)),
        ("2 <15,16,24,28> CI certificate", Box::new(criterion_2)),
        ("3 <6,8,10,17,19> Delorme failure", Box::new(criterion_3)),
        ("4 Teragaito families n=1..10", Box::new(criterion_4)),
        ("5 pretzel formal semigroup", Box::new(criterion_5)),
        ("6 torus knots via (1-t)P", Box::new(criterion_6)),
        ("7 randomized property suite", Box::new(|| criterion_7(&suite))),
        ("8 T1 formula vs oracle", Box::new(|| criterion_8(&suite))),
        ("9 roundtrips", Box::new(|| criterion_9(&suite))),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} [{secs:.1}s]");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        9 - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
