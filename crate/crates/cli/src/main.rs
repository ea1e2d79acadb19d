use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use whakit::format::{self, vector_to_json, StructureFile};
use whakit::{
    cyclic, double, grouplikes, hopf_modules as hm, integrals, modules, radford, zoo, Error, Field, FieldSpec, Fp, QSqrt, Report, Side,
    WeakHopfAlgebra, Q,
};

#[derive(Parser)]
#[command(name = "whakit", version, about = "Exact checks for weak bialgebras and weak Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Input {
    /// Structure file, or zoo:NAME for a built-in example
    input: String,
    /// Coefficient bound for integral and grouplike searches
    #[arg(long, default_value_t = integrals::DEFAULT_BOUND)]
    search_bound: usize,
}

#[derive(Subcommand, Clone)]
enum Cmd {
    /// Weak bialgebra and weak Hopf algebra axiom suites
    Validate(Input),
    /// Integral spaces, a non-degenerate dual pair and its certificates
    Integrals(Input),
    /// Discard any antipode and rebuild it from a non-degenerate integral
    Antipode {
        #[command(flatten)]
        input: Input,
        /// Write the weak Hopf algebra here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The dual weak bialgebra (with Ŝ when an antipode is present)
    Dualize {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify an element as a left, right or two-sided grouplike
    Grouplike {
        #[command(flatten)]
        input: Input,
        /// JSON array of coordinates, or @FILE; without it the distinguished grouplikes are reported
        #[arg(long)]
        element: Option<String>,
    },
    /// Unit, regular and given modules: products, rigidity, conjugates, classes
    Modules {
        #[command(flatten)]
        input: Input,
        /// Module file {"dim", "action"}
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Weak Hopf modules: regular and dual, structure theorem, freeness
    Hopfmod {
        #[command(flatten)]
        input: Input,
        /// Weak Hopf module file
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Nakayama automorphism, S⁴ formula, antipode order, unimodularity
    Radford {
        #[command(flatten)]
        input: Input,
        /// Largest exponent tried in the antipode order search
        #[arg(long, default_value_t = 24)]
        max_order: usize,
    },
    /// The Drinfeld double
    Double {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cochain spaces and cyclic-category relations for a modular pair
    Cyclic {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// σ ∈ Â as a JSON array or @FILE (default 1̂ = ε)
        #[arg(long)]
        sigma: Option<String>,
        /// s ∈ A as a JSON array or @FILE (default 1)
        #[arg(long)]
        s: Option<String>,
    },
    /// Write zoo entries as structure files
    Zoo {
        /// Entries to write (default all)
        names: Vec<String>,
        /// Output directory
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Print the entry names and exit
        #[arg(long)]
        list: bool,
        /// Run each entry's manifest of suites
        #[arg(long)]
        check: bool,
    },
}

/// What a command produced: a summary, the checks, and possibly a file.
struct Outcome {
    summary: Value,
    report: Report,
    file: Option<String>,
}

impl Outcome {
    fn new(summary: Value, report: Report) -> Self {
        Outcome { summary, report, file: None }
    }
}

enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn read_text(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

/// zoo:NAME becomes the canonical file text of the entry.
fn load(input: &str) -> Result<String, Failure> {
    match input.strip_prefix("zoo:") {
        Some("F2M2") => Ok(format::write_wha(&zoo::f2m2())),
        Some(name) => zoo::entry_q(name)
            .map(|e| format::write_wha(&e.wha))
            .ok_or_else(|| Failure::Input(format!("unknown zoo entry {name}; known: {}", zoo::NAMES.join(", ")))),
        None => read_text(input),
    }
}

fn arg_text(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => read_text(path),
        None => Ok(arg.to_string()),
    }
}

fn wha_of<F: Field>(file: &StructureFile<F>) -> Result<WeakHopfAlgebra<F>, Failure> {
    match &file.antipode {
        Some(s) => Ok(WeakHopfAlgebra::new(file.wba.clone(), s.clone())?),
        None => Err(Failure::Input("this command needs an antipode; run `whakit antipode` first".into())),
    }
}

fn names(rep: &Report) -> Vec<String> {
    rep.failures().iter().map(|c| c.identity.clone()).collect()
}

fn pair_of<F: Field>(w: &whakit::WeakBialgebra<F>, bound: usize, rep: &mut Report) -> Result<integrals::DualPair<F>, Failure> {
    let Some(l) = integrals::find_nondegenerate_left_integral(w, bound) else {
        rep.assert_that("non-degenerate left integral", "found within search bound", false);
        return Err(Failure::Check(format!("no non-degenerate left integral found within bound {bound}")));
    };
    let pair = integrals::dual_pair(w, &l)?;
    rep.extend_prefixed("dual pair", pair.report.clone());
    Ok(pair)
}

fn validate<F: Field>(file: StructureFile<F>) -> CmdResult {
    let mut rep = Report::new();
    rep.extend_prefixed("check_wba", file.wba.check_wba());
    rep.extend_prefixed("check_wba_identities", file.wba.check_wba_identities());
    let has_s = file.antipode.is_some();
    if has_s {
        let w = wha_of(&file)?;
        rep.extend_prefixed("check_wha", w.check_wha());
        rep.extend_prefixed("check_projection_identities", w.check_projection_identities());
        rep.extend_prefixed("separability", w.separability().1);
        rep.extend_prefixed("nakayama_lr", w.nakayama_lr().1);
    }
    Ok(Outcome::new(json!({"dim": file.wba.dim(), "antipode": has_s}), rep))
}

fn integrals_cmd<F: Field>(file: StructureFile<F>, bound: usize) -> CmdResult {
    let a = &file.wba;
    let il = a.integral_space(Side::Left);
    let ir = a.integral_space(Side::Right);
    let mut rep = Report::new();
    let pair = pair_of(a, bound, &mut rep)?;
    let mut summary = json!({
        "left_integrals": il.basis_vectors().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
        "right_integrals": ir.basis_vectors().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
        "l": vector_to_json(&pair.l),
        "lambda": vector_to_json(&pair.lambda),
        "rho": vector_to_json(&pair.rho),
        "r": vector_to_json(&pair.r),
    });
    if file.antipode.is_some() {
        let w = wha_of(&file)?;
        rep.extend_prefixed("integral projections", integrals::integral_projections(&w).1);
        rep.extend_prefixed("integral legs", integrals::check_integral_legs(&w));
        let (u, r) = integrals::unimodularity(&w, &pair, bound);
        rep.extend(r);
        summary["unimodular"] = json!(u.two_sided.is_some());
    }
    Ok(Outcome::new(summary, rep))
}

fn antipode_cmd<F: Field>(file: StructureFile<F>, bound: usize) -> CmdResult {
    match integrals::antipode_pipeline(&file.wba, bound) {
        integrals::Pipeline::Antipode(w, mut rep) => {
            if let Some(s) = &file.antipode {
                rep.assert_that("reconstructed antipode equals input", "antipode uniqueness", s == w.antipode());
            }
            let mut out = Outcome::new(json!({"dim": w.dim()}), rep);
            out.file = Some(format::write_wha(&w));
            Ok(out)
        }
        integrals::Pipeline::NoIntegral { bound } => {
            Err(Failure::Check(format!("no non-degenerate left integral found within bound {bound}")))
        }
        integrals::Pipeline::Failed(rep) => Ok(Outcome::new(json!({"antipode": null}), rep)),
    }
}

fn dualize_cmd<F: Field>(file: StructureFile<F>) -> CmdResult {
    let mut rep = Report::new();
    let text = if file.antipode.is_some() {
        let d = wha_of(&file)?.dual();
        rep.extend_prefixed("check_wba", d.check_wba());
        rep.extend_prefixed("check_wha", d.check_wha());
        format::write_wha(&d)
    } else {
        let d = file.wba.dualize();
        rep.extend_prefixed("check_wba", d.check_wba());
        format::write(&d, None)
    };
    let mut out = Outcome::new(json!({"dim": file.wba.dim()}), rep);
    out.file = Some(text);
    Ok(out)
}

fn witness_json<F: Field>(g: &grouplikes::GrouplikeWitness<F>) -> Value {
    json!({
        "element": vector_to_json(&g.g),
        "kind": g.kind,
        "inverse": vector_to_json(&g.inverse),
        "pi_l": vector_to_json(&g.pi_l),
        "pi_r": vector_to_json(&g.pi_r),
    })
}

fn grouplike_cmd<F: Field>(file: StructureFile<F>, bound: usize, element: Option<String>) -> CmdResult {
    let mut rep = Report::new();
    if let Some(e) = element {
        let x: Vec<F> = format::read_vector(&arg_text(&e)?, file.wba.dim())?;
        let g = grouplikes::classify_grouplike(&file.wba, &x);
        rep.assert_that("grouplike", "Δ(g) = Δ(1)(g⊗g) or (g⊗g)Δ(1), g invertible", g.is_some());
        let mut summary = json!({"grouplike": g.as_ref().map(witness_json)});
        if let Some(g) = &g {
            summary["in_trivial_subalgebra"] = json!(grouplikes::in_trivial_subalgebra(&file.wba, &g.g));
        }
        return Ok(Outcome::new(summary, rep));
    }
    let w = wha_of(&file)?;
    let pair = pair_of(&w, bound, &mut rep)?;
    let (d, r) = grouplikes::distinguished(&w, &pair)?;
    rep.extend(r);
    rep.extend_prefixed("integral modules", grouplikes::check_integral_modules(&w, &pair));
    let t = grouplikes::s2_implementer_on_at(&w, bound);
    Ok(Outcome::new(
        json!({
            "s_l": witness_json(&d.s_l),
            "sigma_l": witness_json(&d.sigma_l),
            "s_r": vector_to_json(&d.s_r),
            "sigma_r": vector_to_json(&d.sigma_r),
            "s2_implementer_on_at": t.as_ref().map(witness_json),
        }),
        rep,
    ))
}

fn module_suite<F: Field>(w: &WeakHopfAlgebra<F>, unit: &modules::UnitModule<F>, m: &modules::LeftModule<F>, rep: &mut Report, tag: &str) -> Result<(), Failure> {
    rep.extend_prefixed(tag, modules::check_module(w, m));
    rep.extend_prefixed(tag, modules::unit_constraints(w, unit, m)?.1);
    rep.extend_prefixed(tag, modules::rigidity(w, unit, m)?.1);
    rep.extend_prefixed(tag, modules::conjugates(w, m).2);
    Ok(())
}

fn modules_cmd<F: Field>(file: StructureFile<F>, module: Option<PathBuf>) -> CmdResult {
    let w = wha_of(&file)?;
    let (unit, mut rep) = modules::unit_module(&w)?;
    module_suite(&w, &unit, &unit.module, &mut rep, "unit")?;
    let reg = modules::regular_module(&w);
    module_suite(&w, &unit, &reg, &mut rep, "regular")?;
    let mut summary = json!({"unit_dim": unit.module.dim(), "dim": w.dim()});
    match modules::class_decomposition(&w, &unit.module) {
        modules::Classes::Split(d, r) => {
            rep.extend_prefixed("classes", r);
            summary["classes"] = json!(d.classes.iter().map(|c| (c.p, c.q, c.space.dim())).collect::<Vec<_>>());
            summary["diagonal"] = json!(d.is_diagonal());
        }
        modules::Classes::NonSplit => summary["classes"] = json!("center does not split over the field"),
    }
    if let Some(path) = module {
        let m = format::read_module::<F>(&read_text(&path.to_string_lossy())?, w.dim())?;
        module_suite(&w, &unit, &m, &mut rep, "module")?;
        summary["module_dim"] = json!(m.dim());
    }
    Ok(Outcome::new(summary, rep))
}

fn whm_suite<F: Field>(w: &WeakHopfAlgebra<F>, m: &hm::WeakHopfModule<F>, rep: &mut Report, tag: &str) -> Result<Value, Failure> {
    let small = m.dim * w.dim() <= hm::CHECK_MAX;
    if small {
        rep.extend_prefixed(tag, hm::check_whm(w, m));
        rep.extend_prefixed(tag, hm::whm_projections(w, m)?.1);
    }
    let mut summary = json!({"dim": m.dim, "variants": m.variants().iter().map(|v| v.to_string()).collect::<Vec<_>>()});
    if m.left.is_some() && m.right.is_some() && m.right_coaction.is_some() {
        let (s, r) = hm::structure_theorem(w, m)?;
        rep.extend_prefixed(tag, r);
        summary["coinvariants_dim"] = json!(s.coinvariants.dim());
    }
    Ok(summary)
}

fn hopfmod_cmd<F: Field>(file: StructureFile<F>, bound: usize, module: Option<PathBuf>) -> CmdResult {
    let w = wha_of(&file)?;
    let mut rep = Report::new();
    let regular = whm_suite(&w, &hm::regular_whm(&w), &mut rep, "regular")?;
    let dual = whm_suite(&w, &hm::dual_whm(&w), &mut rep, "dual")?;
    rep.extend_prefixed("freeness", hm::freeness_certificates(&w, bound)?);
    let mut summary = json!({"regular": regular, "dual": dual});
    if let Some(path) = module {
        let m = format::read_hopf_module::<F>(&read_text(&path.to_string_lossy())?, w.dim())?;
        rep.extend_prefixed("module", hm::check_whm(&w, &m));
        summary["module"] = whm_suite(&w, &m, &mut rep, "module")?;
    }
    Ok(Outcome::new(summary, rep))
}

fn radford_cmd<F: Field>(file: StructureFile<F>, bound: usize, max_order: usize) -> CmdResult {
    let w = wha_of(&file)?;
    let mut rep = Report::new();
    let pair = pair_of(&w, bound, &mut rep)?;
    rep.extend_prefixed("nakayama", radford::nakayama_lambda(&w, &pair)?.1);
    rep.extend_prefixed("radford", radford::radford_check(&w, &pair)?);
    let (order, r) = radford::antipode_order(&w, max_order, bound);
    rep.extend_prefixed("order", r);
    let (u, r) = integrals::unimodularity(&w, &pair, bound);
    rep.extend(r);
    Ok(Outcome::new(
        json!({
            "strict_order": order.strict_order,
            "inner_witness": order.inner_witness.as_ref().map(|(m, y)| json!({"m": m, "y": witness_json(y)})),
            "unimodular": u.two_sided.is_some(),
        }),
        rep,
    ))
}

fn double_cmd<F: Field>(file: StructureFile<F>, bound: usize) -> CmdResult {
    let w = wha_of(&file)?;
    let mut rep = Report::new();
    let pair = pair_of(&w, bound, &mut rep)?;
    let (d, r) = double::build_double(&w, &pair)?;
    rep.extend(r);
    rep.assert_that("D(l⊗Ŝ(λ)) two-sided", "integral of the double lies in I^L ∩ I^R", d.integral_is_two_sided());
    let mut out = Outcome::new(json!({"dim": d.dim(), "reading": d.reading, "integral": vector_to_json(&d.integral)}), rep);
    out.file = Some(format::write_wha(&d.wha));
    Ok(out)
}

fn cyclic_cmd<F: Field>(file: StructureFile<F>, max_degree: usize, sigma: Option<String>, s: Option<String>) -> CmdResult {
    let w = wha_of(&file)?;
    let n = w.dim();
    let sigma = match sigma {
        Some(t) => format::read_vector::<F>(&arg_text(&t)?, n)?,
        None => w.counit().to_vec(),
    };
    let s = match s {
        Some(t) => format::read_vector::<F>(&arg_text(&t)?, n)?,
        None => w.one(),
    };
    let (mp, mut rep) = cyclic::check_modular_pair(&w, &sigma, &s)?;
    let dims: Vec<usize> = cyclic::cochains(&w, max_degree)?.iter().map(|c| c.dim()).collect();
    rep.extend(cyclic::verify_lambda_relations(&w, &mp, max_degree)?);
    Ok(Outcome::new(json!({"modular": mp.modular, "involution": mp.involution, "cochain_dims": dims}), rep))
}

fn manifest<F: Field>(w: &WeakHopfAlgebra<F>) -> Report {
    let mut rep = Report::new();
    rep.extend_prefixed("check_wba", w.check_wba());
    rep.extend_prefixed("check_wba_identities", w.check_wba_identities());
    rep.extend_prefixed("check_wha", w.check_wha());
    rep.extend_prefixed("check_projection_identities", w.check_projection_identities());
    rep.extend_prefixed("separability", w.separability().1);
    rep.extend_prefixed("nakayama_lr", w.nakayama_lr().1);
    rep
}

fn zoo_cmd(names: Vec<String>, out: PathBuf, list: bool, check: bool) -> CmdResult {
    if list {
        return Ok(Outcome::new(json!(zoo::NAMES), Report::new()));
    }
    let names = if names.is_empty() { zoo::NAMES.iter().map(|s| s.to_string()).collect() } else { names };
    std::fs::create_dir_all(&out).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    let mut rep = Report::new();
    let mut written = Vec::new();
    for name in &names {
        let text = load(&format!("zoo:{name}"))?;
        if check {
            let r = if name == "F2M2" { manifest(&zoo::f2m2()) } else { manifest(&zoo::entry_q(name).expect("loaded above").wha) };
            rep.extend_prefixed(name, r);
        }
        let path = out.join(format!("{name}.json"));
        std::fs::write(&path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        written.push(path.display().to_string());
    }
    Ok(Outcome::new(json!({"written": written}), rep))
}

fn run_typed<F: Field>(cmd: Cmd, text: &str) -> CmdResult {
    let file = format::read::<F>(text)?;
    match cmd {
        Cmd::Validate(_) => validate(file),
        Cmd::Integrals(i) => integrals_cmd(file, i.search_bound),
        Cmd::Antipode { input, .. } => antipode_cmd(file, input.search_bound),
        Cmd::Dualize { .. } => dualize_cmd(file),
        Cmd::Grouplike { input, element } => grouplike_cmd(file, input.search_bound, element),
        Cmd::Modules { module, .. } => modules_cmd(file, module),
        Cmd::Hopfmod { input, module } => hopfmod_cmd(file, input.search_bound, module),
        Cmd::Radford { input, max_order } => radford_cmd(file, input.search_bound, max_order),
        Cmd::Double { input, .. } => double_cmd(file, input.search_bound),
        Cmd::Cyclic { max_degree, sigma, s, .. } => cyclic_cmd(file, max_degree, sigma, s),
        Cmd::Zoo { .. } => unreachable!("zoo does not read a structure file"),
    }
}

fn run(cmd: Cmd) -> CmdResult {
    let input = match &cmd {
        Cmd::Zoo { names, out, list, check } => return zoo_cmd(names.clone(), out.clone(), *list, *check),
        Cmd::Validate(i) | Cmd::Integrals(i) => i,
        Cmd::Antipode { input, .. }
        | Cmd::Dualize { input, .. }
        | Cmd::Grouplike { input, .. }
        | Cmd::Modules { input, .. }
        | Cmd::Hopfmod { input, .. }
        | Cmd::Radford { input, .. }
        | Cmd::Double { input, .. }
        | Cmd::Cyclic { input, .. } => input,
    };
    let text = load(&input.input)?;
    dispatch(cmd, &text, format::peek_field(&text)?)
}

/// Monomorphized runners for the supported fields.
macro_rules! fields {
    (primes: $($p:literal),*; roots: $($d:literal),*) => {
        fn dispatch(cmd: Cmd, text: &str, spec: FieldSpec) -> CmdResult {
            match spec {
                FieldSpec::Q => run_typed::<Q>(cmd, text),
                $(FieldSpec::Fp { p: $p } => run_typed::<Fp<$p>>(cmd, text),)*
                $(FieldSpec::Qsqrt { d: $d } => run_typed::<QSqrt<{ $d }>>(cmd, text),)*
                other => Err(Failure::Input(format!("field {other} is not supported by this build"))),
            }
        }
    };
}

fields! {
    primes: 2, 3, 5, 7;
    roots: -1, 2, 3, 5
}

fn output_path(cmd: &Cmd) -> Option<PathBuf> {
    match cmd {
        Cmd::Antipode { output, .. } | Cmd::Dualize { output, .. } | Cmd::Double { output, .. } => output.clone(),
        _ => None,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = output_path(&cli.cmd);
    match run(cli.cmd) {
        Ok(out) => {
            let pass = out.report.passed();
            let doc = json!({
                "pass": pass,
                "failures": names(&out.report),
                "summary": out.summary,
                "checks": out.report.to_json(),
            });
            let doc = serde_json::to_string_pretty(&doc).expect("report serializes");
            match (out.file, output) {
                (Some(text), Some(path)) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                    println!("{doc}");
                }
                (Some(text), None) => {
                    print!("{text}");
                    eprintln!("{doc}");
                }
                (None, _) => println!("{doc}"),
            }
            ExitCode::from(if pass { 0 } else { 1 })
        }
        Err(Failure::Check(msg)) => {
            println!("{}", serde_json::to_string_pretty(&json!({"pass": false, "error": msg})).expect("serializes"));
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
