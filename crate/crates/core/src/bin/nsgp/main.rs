use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use nsgp::ci::{self, defining_binomials};
use nsgp::deformation::t1_spectrum;
use nsgp::knots::{self, Family};
use nsgp::resolution::{minimal_relations, theta, BettiDiagram, ShadedComplex};
use nsgp::semigroup::parse_generators;
use nsgp::series;
use nsgp::{BranchClass, Error, IntPolynomial, NumericalSemigroup};

#[derive(Parser)]
#[command(name = "nsgp", version, about = "Numerical semigroups and monomial curves")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number, conductor, genus, Milnor number, symmetry, branch type.
    Analyze { generators: String },
    /// Graded Betti numbers and minimal relations.
    Betti { generators: String },
    /// Shaded complex of one degree, or of every element up to theta.
    Complex {
        generators: String,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        degree: Option<i64>,
        #[arg(long)]
        all: bool,
        /// Directory for one .dot file per degree.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complete-intersection test with gluing tree and defining binomials.
    Ci { generators: String },
    /// Herzog-Kunz invariant m(S) and, optionally, the Dedekind semimodule D(S,h).
    Hk {
        generators: String,
        #[arg(long)]
        dedekind: Option<u64>,
    },
    /// Glue d1*S1 and d2*S2.
    Glue {
        s1: String,
        s2: String,
        d1: u64,
        d2: u64,
    },
    /// Hilbert numerator, Gorenstein and cyclotomic checks.
    Hilbert {
        generators: String,
        /// Also print the series up to this degree.
        #[arg(long)]
        truncate: Option<u64>,
    },
    /// (1-t) P_S(t), or the torus knot polynomial with --torus p,q.
    Alexander {
        #[arg(required_unless_present = "torus")]
        generators: Option<String>,
        #[arg(long, conflicts_with = "generators")]
        torus: Option<String>,
    },
    /// Formal semigroup of an L-space-shaped Alexander polynomial.
    FormalSemigroup {
        /// Coefficient list "1,-1,0,1" or text such as "1-t+t^3".
        #[arg(long, allow_hyphen_values = true)]
        alexander: String,
    },
    /// Graded T1 dimensions.
    T1 {
        generators: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<i64>,
    },
    /// Fixture semigroups: family a|b with parameter n, or torus with p,q.
    Family {
        #[arg(value_enum)]
        kind: FamilyKind,
        /// n for families a and b; p,q for torus.
        params: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    A,
    B,
    Torus,
}

struct Output {
    json: Value,
    text: String,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn semigroup(text: &str) -> Result<NumericalSemigroup, Error> {
    NumericalSemigroup::new(parse_generators(text)?)
}

fn pair(text: &str) -> Result<(u64, u64), Error> {
    match parse_generators(text)?.as_slice() {
        &[p, q] => Ok((p, q)),
        _ => Err(Error::Parse(format!("expected two integers p,q, got {text:?}"))),
    }
}

fn max_degree(s: &NumericalSemigroup) -> u64 {
    std::env::var("NSGP_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10 * s.conductor() + 1000)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(s: &NumericalSemigroup) -> Result<Output, Error> {
    let inv = s.numeric_invariants();
    let branch = s.classify_branch();
    let apery = s.apery_set(s.multiplicity())?;
    let json = json!({
        "semigroup": to_value(s),
        "invariants": to_value(&inv),
        "multiplicity": s.multiplicity(),
        "embedding_dimension": s.embedding_dimension(),
        "symmetric": s.is_symmetric(),
        "gaps": s.gaps(),
        "apery": apery,
        "branch": to_value(&branch),
    });
    let mut text = String::new();
    writeln!(text, "minimal generators  {:?}", s.minimal_generators()).unwrap();
    writeln!(text, "multiplicity        {}", s.multiplicity()).unwrap();
    writeln!(text, "embedding dimension {}", s.embedding_dimension()).unwrap();
    writeln!(text, "Frobenius F         {}", inv.frobenius).unwrap();
    writeln!(text, "conductor c         {}", inv.conductor).unwrap();
    writeln!(text, "genus (delta)       {}", inv.genus).unwrap();
    writeln!(text, "Milnor mu           {}", inv.milnor).unwrap();
    writeln!(text, "symmetric           {}", yes_no(s.is_symmetric())).unwrap();
    writeln!(text, "{:<20}{:?}", format!("Apery set (mod {})", s.multiplicity()), apery).unwrap();
    let branch_text = match &branch {
        BranchClass::PlaneBranch(o) => format!("plane branch, ordering {o:?}"),
        BranchClass::AtInfinity(o) => format!("free, at infinity, ordering {o:?}"),
        BranchClass::FreeOther(o) => format!("free, ordering {o:?}"),
        BranchClass::NotFree => "not free".into(),
    };
    writeln!(text, "branch              {branch_text}").unwrap();
    Ok(Output { json, text })
}

fn betti(s: &NumericalSemigroup) -> Result<Output, Error> {
    let d = BettiDiagram::compute(s);
    let rel = minimal_relations(s)?;
    let mut json = to_value(&d);
    json["square_symmetric"] = json!(d.square_is_symmetric());
    json["relations"] = to_value(&rel.relations);
    let mut text = format!("theta = {}\n{:>6}", d.theta(), "m");
    let g = d.embedding_dimension();
    for i in 0..g.saturating_sub(1) {
        write!(text, " {:>7}", format!("beta_{i}")).unwrap();
    }
    text.push('\n');
    // one row per element up to theta; zero entries print as "."
    for m in s.elements_up_to(d.theta()) {
        write!(text, "{m:>6}").unwrap();
        for i in 0..g.saturating_sub(1) {
            match d.get(i, m) {
                0 => write!(text, " {:>7}", ".").unwrap(),
                b => write!(text, " {b:>7}").unwrap(),
            }
        }
        text.push('\n');
    }
    writeln!(text, "square symmetric: {}", yes_no(d.square_is_symmetric())).unwrap();
    for r in &rel.relations {
        writeln!(text, "relation deg {}: z = {:?}", r.degree, r.z).unwrap();
    }
    Ok(Output { json, text })
}

fn complex_json(k: &ShadedComplex) -> Value {
    json!({
        "degree": k.degree(),
        "vertices": k.generators(),
        "faces": k.faces(),
        "reduced_homology": k.reduced_homology().dims(),
    })
}

fn complex_text(k: &ShadedComplex) -> String {
    let faces: Vec<Vec<u64>> = k
        .faces()
        .into_iter()
        .map(|f| f.into_iter().map(|i| k.generators()[i]).collect())
        .collect();
    format!(
        "Delta_{}: faces {:?}; reduced homology (from H_-1) {:?}\n",
        k.degree(),
        faces,
        k.reduced_homology().dims()
    )
}

fn complex(
    s: &NumericalSemigroup,
    degree: Option<i64>,
    out: Option<PathBuf>,
    format: Format,
) -> Result<Output, Error> {
    let degrees: Vec<i64> = match degree {
        Some(m) => vec![m],
        None => s.elements_up_to(theta(s)).map(|m| m as i64).collect(),
    };
    let complexes: Vec<ShadedComplex> = degrees.iter().map(|&m| ShadedComplex::new(s, m)).collect();
    if let Some(dir) = out {
        std::fs::create_dir_all(&dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
        let mut written = Vec::new();
        for k in &complexes {
            let path = dir.join(format!("delta_{}.dot", k.degree()));
            std::fs::write(&path, k.to_dot()).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            written.push(path.display().to_string());
        }
        return Ok(Output {
            json: json!({ "written": written }),
            text: written.iter().map(|p| format!("{p}\n")).collect(),
        });
    }
    let text = if format == Format::Dot {
        complexes.iter().map(ShadedComplex::to_dot).collect()
    } else {
        complexes.iter().map(complex_text).collect()
    };
    let json = match degree {
        Some(_) => complex_json(&complexes[0]),
        None => Value::Array(complexes.iter().map(complex_json).collect()),
    };
    Ok(Output { json, text })
}

fn ci_report(s: &NumericalSemigroup) -> Result<Output, Error> {
    let report = ci::delorme_check(s.minimal_generators())?;
    let hk = ci::herzog_kunz_check(s)?;
    let binomials: Vec<String> = report.tree.as_ref().map(defining_binomials).unwrap_or_default().iter().map(ToString::to_string).collect();
    let mut json = to_value(&report);
    json["binomials"] = json!(binomials);
    json["herzog_kunz"] = json!({ "m": hk.m, "c": hk.c, "rhs": hk.rhs, "is_ci": hk.is_ci });
    let mut text = format!("complete intersection: {}\n", yes_no(report.is_ci));
    if let Some(tree) = &report.tree {
        text.push_str(&tree.render());
        for b in &binomials {
            writeln!(text, "{b}").unwrap();
        }
    }
    if let Some(f) = &report.failure {
        for (block, m) in &f.m_values {
            writeln!(text, "m_{block:?} = {m}").unwrap();
        }
        writeln!(text, "stopped: {}", serde_json::to_string(&f.reason).expect("serializable")).unwrap();
    }
    writeln!(text, "Herzog-Kunz: m(S) = {}, c = {} vs m - sum + 1 = {}", hk.m, hk.c, hk.rhs).unwrap();
    Ok(Output { json, text })
}

fn hk(s: &NumericalSemigroup, dedekind: Option<u64>) -> Result<Output, Error> {
    let m = ci::herzog_kunz_m(s);
    let check = ci::herzog_kunz_check(s)?;
    let mut json = to_value(&check);
    json["chosen"] = to_value(&m.chosen);
    let mut text = format!(
        "m(S) = {} from degrees {:?}\nc = {} {} m(S) - sum + 1 = {}; complete intersection: {}\n",
        m.m,
        m.chosen.iter().map(|c| c.0).collect::<Vec<_>>(),
        check.c,
        if check.is_ci { "=" } else { "<" },
        check.rhs,
        yes_no(check.is_ci)
    );
    if let Some(h) = dedekind {
        let d = ci::dedekind_semimodule(s, h)?;
        json["dedekind"] = json!({
            "h": h,
            "bound": d.window.bound,
            "elements": d.window.elements(),
            "principal": d.principal,
            "equals_shifted_conductor_ideal": d.equals_shifted_conductor_ideal,
        });
        writeln!(
            text,
            "D(S,{h}) = (h+c-1)+S: {}",
            yes_no(d.equals_shifted_conductor_ideal)
        )
        .unwrap();
    }
    Ok(Output { json, text })
}

fn glue(s1: &str, s2: &str, d1: u64, d2: u64) -> Result<Output, Error> {
    let (s1, s2) = (semigroup(s1)?, semigroup(s2)?);
    let glued = ci::glue(&s1, &s2, d1, d2)?;
    let identity = series::gluing_series_check(&s1, &s2, d1, d2)?;
    let ci_verdict = ci::delorme_check(glued.semigroup.minimal_generators())?.is_ci;
    let json = json!({
        "semigroup": to_value(&glued.semigroup),
        "relation_degree": glued.relation_degree,
        "series_identity": identity,
        "is_ci": ci_verdict,
    });
    let text = format!(
        "glued: {:?}\nrelation degree: {}\nseries identity holds: {}\ncomplete intersection: {}\n",
        glued.semigroup.minimal_generators(),
        glued.relation_degree,
        yes_no(identity),
        yes_no(ci_verdict)
    );
    Ok(Output { json, text })
}

fn hilbert(s: &NumericalSemigroup, truncate: Option<u64>) -> Result<Output, Error> {
    let q = series::hilbert_numerator(s);
    let gorenstein = series::gorenstein_functional_check(s);
    let cyclotomic = series::cyclotomic_test(&q)?;
    let report = ci::delorme_check(s.minimal_generators())?;
    let ci_degrees = report.tree.as_ref().map(|t| t.relation_degrees());
    let ci_numerator = ci_degrees.as_ref().map(|d| series::ci_numerator_check(s, d));
    let label = if cyclotomic == report.is_ci {
        "conjecture-consistent"
    } else {
        "conjecture-inconsistent"
    };
    let denominator: Vec<String> = s.minimal_generators().iter().map(|a| format!("(1 - t^{a})")).collect();
    let mut json = json!({
        "numerator": to_value(&q),
        "numerator_text": q.to_string(),
        "denominator_exponents": s.minimal_generators(),
        "gorenstein": gorenstein,
        "cyclotomic": cyclotomic,
        "is_ci": report.is_ci,
        "ci_numerator": ci_numerator,
        "cyclotomic_conjecture": label,
    });
    let mut text = format!(
        "Q(t) = {q}\nP(t) = Q(t) / {}\nGorenstein (Q palindromic): {}\nonly roots of unity: {}\ncomplete intersection: {} ({label})\n",
        denominator.join(""),
        yes_no(gorenstein),
        yes_no(cyclotomic),
        yes_no(report.is_ci),
    );
    if let Some(ok) = ci_numerator {
        writeln!(text, "Q = prod (1 - t^m) over relation degrees: {}", yes_no(ok)).unwrap();
    }
    if let Some(n) = truncate {
        let n = n.min(max_degree(s));
        let p = series::poincare_truncated(s, n);
        json["truncated"] = json!({ "degree": n, "series": to_value(&p) });
        writeln!(text, "P(t) to degree {n}: {p}").unwrap();
    }
    Ok(Output { json, text })
}

fn alexander(generators: Option<String>, torus: Option<String>) -> Result<Output, Error> {
    let (p, plane) = match (generators, torus) {
        (_, Some(t)) => {
            let (p, q) = pair(&t)?;
            (knots::torus_alexander(p, q)?, true)
        }
        (Some(g), None) => {
            let s = semigroup(&g)?;
            let plane = matches!(s.classify_branch(), BranchClass::PlaneBranch(_));
            (knots::alexander_from_semigroup(&s), plane)
        }
        (None, None) => unreachable!("clap requires one of them"),
    };
    let palindromic = knots::is_palindromic(&p);
    let json = json!({
        "polynomial": to_value(&p),
        "text": p.to_string(),
        "palindromic": palindromic,
        "plane_branch": plane,
    });
    let mut text = format!("{p}\npalindromic: {}\n", yes_no(palindromic));
    if plane {
        text.push_str("plane branch semigroup: this is the Alexander polynomial of its link knot\n");
    }
    Ok(Output { json, text })
}

fn formal_semigroup(poly: &str) -> Result<Output, Error> {
    let p = IntPolynomial::parse(poly)?;
    let f = knots::formal_semigroup_from_alexander(&p)?;
    let r = knots::realizability_necessary(&f);
    let mut json = to_value(&f);
    json["realizability"] = json!({
        "is_semigroup": r.is_semigroup,
        "symmetric": r.symmetric,
        "passes": r.passes,
        "minimal_generators": r.semigroup.as_ref().map(|s| s.minimal_generators().to_vec()),
    });
    let mut text = format!(
        "elements {:?} and every n >= {}\nclosed under addition: {}\n",
        f.sporadic,
        f.tail_from,
        yes_no(f.closed)
    );
    if let Some((x, y)) = f.witness {
        writeln!(text, "witness: {x} + {y} = {} is missing", x + y).unwrap();
    }
    if let Some(s) = &r.semigroup {
        writeln!(
            text,
            "semigroup {:?}, symmetric: {}",
            s.minimal_generators(),
            yes_no(r.symmetric == Some(true))
        )
        .unwrap();
    }
    writeln!(text, "passes necessary realizability test: {}", yes_no(r.passes)).unwrap();
    Ok(Output { json, text })
}

fn t1(s: &NumericalSemigroup, weight: Option<i64>) -> Result<Output, Error> {
    if let Some(n) = weight {
        let d = nsgp::deformation::t1_dimension(s, n)?;
        return Ok(Output {
            json: json!({ "weight": n, "dim": d }),
            text: format!("dim T1({n}) = {d}\n"),
        });
    }
    let spectrum = t1_spectrum(s)?;
    let mut text = String::new();
    for (n, d) in &spectrum.dims {
        writeln!(text, "dim T1({n}) = {d}").unwrap();
    }
    writeln!(
        text,
        "tau = {} (tau_plus {}, tau_minus {})",
        spectrum.tau, spectrum.tau_plus, spectrum.tau_minus
    )
    .unwrap();
    Ok(Output {
        json: to_value(&spectrum),
        text,
    })
}

fn family(kind: FamilyKind, params: &str) -> Result<Output, Error> {
    let s = match kind {
        FamilyKind::A | FamilyKind::B => {
            let n = match parse_generators(params)?.as_slice() {
                &[n] => n,
                _ => return Err(Error::Parse(format!("expected one integer n, got {params:?}"))),
            };
            let fam = if matches!(kind, FamilyKind::A) { Family::A } else { Family::B };
            knots::teragaito_family(n, fam)?
        }
        FamilyKind::Torus => {
            let (p, q) = pair(params)?;
            if p == 0 || q == 0 {
                return Err(Error::ZeroArgument);
            }
            NumericalSemigroup::new([p, q])?
        }
    };
    let is_ci = ci::delorme_check(s.minimal_generators())?.is_ci;
    let json = json!({
        "semigroup": to_value(&s),
        "symmetric": s.is_symmetric(),
        "is_ci": is_ci,
    });
    let text = format!(
        "{:?}\nsymmetric: {}\ncomplete intersection: {}\n",
        s.minimal_generators(),
        yes_no(s.is_symmetric()),
        yes_no(is_ci)
    );
    Ok(Output { json, text })
}

fn run(cli: Cli) -> Result<Output, Error> {
    match cli.command {
        Command::Analyze { generators } => analyze(&semigroup(&generators)?),
        Command::Betti { generators } => betti(&semigroup(&generators)?),
        Command::Complex {
            generators,
            degree,
            all: _,
            out,
        } => complex(&semigroup(&generators)?, degree, out, cli.format),
        Command::Ci { generators } => ci_report(&semigroup(&generators)?),
        Command::Hk { generators, dedekind } => hk(&semigroup(&generators)?, dedekind),
        Command::Glue { s1, s2, d1, d2 } => glue(&s1, &s2, d1, d2),
        Command::Hilbert { generators, truncate } => hilbert(&semigroup(&generators)?, truncate),
        Command::Alexander { generators, torus } => alexander(generators, torus),
        Command::FormalSemigroup { alexander } => formal_semigroup(&alexander),
        Command::T1 { generators, weight } => t1(&semigroup(&generators)?, weight),
        Command::Family { kind, params } => family(kind, &params),
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    if format == Format::Dot && !matches!(cli.command, Command::Complex { .. }) {
        eprintln!("error: --format dot is only available for the complex subcommand");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Json => emit(&(serde_json::to_string_pretty(&out.json).expect("serializable") + "\n")),
                Format::Text | Format::Dot => emit(&out.text),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if format == Format::Json {
                let v = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
                emit(&(serde_json::to_string_pretty(&v).expect("serializable") + "\n"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
    }
}
