mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subalg::algmem::{
    self, decide_membership_homogeneous_with, decide_membership_with, verify_certificate, SubalgebraPresentation,
};
use subalg::format::{parse_field, parse_order_descriptor, InstanceFile};
use subalg::groebner::buchberger;
use subalg::instances::{
    csg_decide_bfs, csg_to_ideal, derive_certificate_from_path, ideal_to_algebra, BfsLimits, BinaryCounterInstance,
    CsgOutcome, CsgSystem,
};
use subalg::monalg::{
    encode_1in3sat, format_vector, monomial_membership, monomial_membership_dp, poly_in_monomial_algebra,
    MonomialAlgebra, SatInstance,
};
use subalg::poly::{BaseOrder, Field, Monomial, MonomialOrder, PolyRing, Polynomial, VariableContext};
use subalg::sagbi::{
    is_sagbi, sagbi_completion, subduct, CompletionStatus, SagbiCandidate, SagbiVerdict, DEFAULT_DEGREE_CAP,
    DEFAULT_ROUND_CAP,
};

use report::Record;

#[derive(Parser)]
#[command(name = "subalg", version, about = "Subalgebra membership, Groebner bases and SAGBI bases")]
struct Cli {
    /// Coefficient field, `Q` or `F<p>`; replaces the file's field.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Monomial order: `lex`, `grlex`, `grevlex`, or a full descriptor over the file's variables.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Emit JSON with the same keys as the text output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of the generators.
    Gb { file: PathBuf },
    /// Is the target in the algebra generated by the generators?
    Algmem {
        file: PathBuf,
        /// Use the degree-truncated test for homogeneous input.
        #[arg(long)]
        homogeneous: bool,
        /// Print the instance with the certificate filled in.
        #[arg(long)]
        certificate: bool,
        /// Check the certificate stored in the file instead of deciding.
        #[arg(long)]
        verify: bool,
    },
    /// Membership of a monomial (or every monomial of a polynomial) in a monomial algebra.
    Monmem {
        file: PathBuf,
        /// Use the residual-vector table instead of depth-first search.
        #[arg(long)]
        dp: bool,
    },
    /// Subduct the target by the generators.
    Subduct { file: PathBuf },
    /// SAGBI completion of the generators, or a SAGBI test with `--check`.
    Sagbi {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        cap: u64,
        #[arg(long, default_value_t = DEFAULT_ROUND_CAP)]
        rounds: usize,
        #[arg(long)]
        check: bool,
    },
    /// Generate instance files.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Evaluate a degree bound: hermann, ci, dube, mayr-ritscher, certification.
    Bounds {
        name: String,
        /// Arguments as key=value, e.g. n=2 s=3 d=2 degg=0 or degrees=2,2.
        args: Vec<String>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Binary-counting subalgebra with 5n generators.
    BinaryCounter {
        n: usize,
        /// Include the certificate read off a shortest rewriting path.
        #[arg(long)]
        with_certificate: bool,
    },
    /// Subalgebra instance equivalent to the ideal membership instance in FILE.
    IdealToAlgebra { file: PathBuf },
    /// Ideal membership instance for the rules and query in FILE.
    CsgToIdeal { file: PathBuf },
    /// Monomial membership instance for the 1-in-3 SAT sets in FILE.
    #[command(name = "1in3sat")]
    OneInThreeSat { file: PathBuf },
    /// Random membership instance.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        vars: usize,
        #[arg(long, default_value_t = 2)]
        gens: usize,
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
}

/// Output and exit code of a command.
struct Outcome {
    record: Record,
    code: u8,
}

impl Outcome {
    fn ok(record: Record) -> Outcome {
        Outcome { record, code: 0 }
    }
}

type Res<T> = Result<T, String>;

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.record.render(cli.json));
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Res<Outcome> {
    let field = match &cli.field {
        Some(f) => Some(parse_field(f).ok_or_else(|| format!("unknown field '{f}' (expected Q or F<p> with p prime)"))?),
        None => None,
    };
    let load = |path: &Path| -> Res<InstanceFile> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let mut file = InstanceFile::parse_with_field(&text, field).map_err(|e| format!("{}: {e}", path.display()))?;
        if let Some(o) = &cli.order {
            file.order = order_override(&file.ring, o)?;
        }
        Ok(file)
    };
    match &cli.cmd {
        Cmd::Gb { file } => cmd_gb(&load(file)?),
        Cmd::Algmem { file, homogeneous, certificate, verify } => {
            cmd_algmem(&load(file)?, *homogeneous, *certificate, *verify)
        }
        Cmd::Monmem { file, dp } => cmd_monmem(&load(file)?, *dp),
        Cmd::Subduct { file } => cmd_subduct(&load(file)?),
        Cmd::Sagbi { file, cap, rounds, check } => cmd_sagbi(&load(file)?, *cap, *rounds, *check),
        Cmd::Gen { kind } => cmd_gen(kind, field, &load),
        Cmd::Bounds { name, args } => cmd_bounds(name, args),
    }
}

fn order_override(ring: &PolyRing, spec: &str) -> Res<MonomialOrder> {
    if let Some(b) = BaseOrder::from_name(spec.trim()) {
        return Ok(MonomialOrder::Base(b));
    }
    let (vars, order) = parse_order_descriptor(spec)?;
    if vars.names() != ring.names() {
        return Err(format!("order '{spec}' does not list the file's variables in order"));
    }
    Ok(order)
}

fn need_target(f: &InstanceFile) -> Res<&Polynomial> {
    f.target.as_ref().ok_or_else(|| "the file has no target".to_string())
}

fn cmd_gb(f: &InstanceFile) -> Res<Outcome> {
    let gb = buchberger(&f.ring, &f.generators, &f.order).map_err(fail)?;
    let mut r = Record::new();
    r.lines("basis", gb.elements().iter().map(|p| p.display_with(&f.order)));
    Ok(Outcome::ok(r))
}

fn cmd_algmem(f: &InstanceFile, homogeneous: bool, want_cert: bool, verify: bool) -> Res<Outcome> {
    let pres = f.presentation();
    let g = need_target(f)?;
    if verify {
        let p = f.certificate.as_ref().ok_or("the file has no certificate")?;
        let (ok, deg, terms) = verify_certificate(p, &pres, g).map_err(fail)?;
        let mut r = Record::new();
        r.text("verified", if ok { "yes" } else { "no" });
        r.text("certificate_degree", deg).text("certificate_terms", terms);
        return Ok(Outcome { record: r, code: if ok { 0 } else { 1 } });
    }
    let v = if homogeneous {
        decide_membership_homogeneous_with(&pres, g, &f.order)
    } else {
        decide_membership_with(&pres, g, &f.order)
    }
    .map_err(fail)?;
    let code = if v.member { 0 } else { 1 };
    if want_cert {
        if let Some(c) = &v.certificate {
            let mut out = f.clone();
            out.certificate = Some(c.polynomial().clone());
            let mut r = Record::new();
            r.lines("instance", out.to_text().lines().map(str::to_string));
            return Ok(Outcome { record: r, code });
        }
    }
    let mut r = Record::new();
    for (k, val) in v.record() {
        r.text(k, val);
    }
    Ok(Outcome { record: r, code })
}

fn monomial_of(p: &Polynomial, what: &str) -> Res<Monomial> {
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(m, _)] => Ok((*m).clone()),
        _ => Err(format!("{what} '{p}' is not a monomial")),
    }
}

fn cmd_monmem(f: &InstanceFile, dp: bool) -> Res<Outcome> {
    let gens = f
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| monomial_of(g, &format!("generator {}", i + 1)))
        .collect::<Res<Vec<_>>>()?;
    let a = MonomialAlgebra::from_monomials(f.ring.nvars(), &gens).map_err(fail)?;
    let g = need_target(f)?;
    let mut r = Record::new();
    if g.num_terms() == 1 {
        let beta = monomial_of(g, "target")?;
        let c = if dp { monomial_membership_dp(&a, beta.exponents()) } else { monomial_membership(&a, beta.exponents()) }
            .map_err(fail)?;
        r.text("member", if c.is_some() { "yes" } else { "no" });
        if let Some(c) = &c {
            r.text("witness", format_vector(c));
        }
        return Ok(Outcome { record: r, code: if c.is_some() { 0 } else { 1 } });
    }
    let res = poly_in_monomial_algebra(&a, g).map_err(fail)?;
    r.text("member", if res.member { "yes" } else { "no" });
    r.list(
        "terms",
        res.breakdown.iter().rev().map(|(m, c)| {
            let w = c.as_ref().map_or_else(|| "none".to_string(), |c| format_vector(c));
            format!("{}: {w}", f.ring.format_monomial(m))
        }),
    );
    Ok(Outcome { record: r, code: if res.member { 0 } else { 1 } })
}

fn candidate(f: &InstanceFile) -> Res<SagbiCandidate> {
    SagbiCandidate::new(&f.ring, &f.order, f.generators.clone()).map_err(fail)
}

fn cmd_subduct(f: &InstanceFile) -> Res<Outcome> {
    let s = candidate(f)?;
    let res = subduct(need_target(f)?, &s).map_err(fail)?;
    let mut r = Record::new();
    r.text("remainder", res.remainder.display_with(&f.order));
    r.text("certificate", &res.certificate);
    Ok(Outcome::ok(r))
}

fn cmd_sagbi(f: &InstanceFile, cap: u64, rounds: usize, check: bool) -> Res<Outcome> {
    let mut r = Record::new();
    if check {
        let v = is_sagbi(&candidate(f)?, cap).map_err(fail)?;
        r.text("sagbi", v.label());
        if let SagbiVerdict::No(w) = &v {
            let tags = candidate(f)?.tag_ring();
            r.text("relation", w.relation.to_polynomial(&tags));
            r.text("lifted", w.lifted.display_with(&f.order));
            r.text("remainder", w.remainder.display_with(&f.order));
        }
        return Ok(Outcome::ok(r));
    }
    let rep = sagbi_completion(&f.ring, &f.generators, &f.order, cap, rounds).map_err(fail)?;
    r.lines("log", rep.log.iter().cloned());
    let status = match rep.status {
        CompletionStatus::Finished => "finished",
        CompletionStatus::CapReached => "cap_reached",
    };
    r.text("status", status).text("rounds", rep.rounds);
    r.list("basis", rep.basis.iter().map(|e| e.polynomial.display_with(&f.order)));
    r.list("certificates", rep.basis.iter().map(|e| e.certificate.polynomial().to_string()));
    Ok(Outcome::ok(r))
}

fn emit(file: InstanceFile) -> Res<Outcome> {
    let mut r = Record::new();
    r.lines("instance", file.to_text().lines().map(str::to_string));
    Ok(Outcome::ok(r))
}

fn cmd_gen(kind: &GenKind, field: Option<Field>, load: &dyn Fn(&Path) -> Res<InstanceFile>) -> Res<Outcome> {
    let field = field.unwrap_or(Field::Rational);
    match kind {
        GenKind::BinaryCounter { n, with_certificate } => {
            let inst = BinaryCounterInstance::new(*n, field).map_err(fail)?;
            let mut out = InstanceFile::new(inst.ring(), MonomialOrder::lex());
            out.provenance = Some(format!("binary-counter n={n}"));
            out.generators = inst.algebra().generators().to_vec();
            out.labels = inst.labels().iter().cloned().map(Some).collect();
            out.target = Some(inst.target().clone());
            if *with_certificate {
                let path = match csg_decide_bfs(inst.rules(), inst.start(), inst.end(), BfsLimits::default()).map_err(fail)? {
                    CsgOutcome::Equivalent(p) => p,
                    _ => return Err("no rewriting path found within the search limit".into()),
                };
                let cert = derive_certificate_from_path(&path, &inst).map_err(fail)?;
                out.certificate = Some(cert.polynomial().clone());
            }
            emit(out)
        }
        GenKind::IdealToAlgebra { file } => {
            let f = load(file)?;
            let red = ideal_to_algebra(&f.generators, need_target(&f)?).map_err(fail)?;
            let order = match &f.order {
                MonomialOrder::Base(b) => MonomialOrder::Base(*b),
                MonomialOrder::Block(bs) => {
                    let mut bs = bs.clone();
                    bs[0].0 += 1;
                    MonomialOrder::Block(bs)
                }
            };
            let mut out = InstanceFile::new(red.ring(), order);
            out.provenance = Some(format!("ideal_to_algebra of {}", file.display()));
            out.generators = red.algebra().generators().to_vec();
            out.labels = vec![None; out.generators.len()];
            out.target = Some(red.target().clone());
            emit(out)
        }
        GenKind::CsgToIdeal { file } => {
            let f = load(file)?;
            let c = CsgSystem::new(&f.ring, f.rules.clone()).map_err(fail)?;
            let (m, m2) = f.query.as_ref().ok_or("the file has no query")?;
            let (gens, g) = csg_to_ideal(&c, m, m2);
            let mut out = InstanceFile::new(&f.ring, f.order.clone());
            out.provenance = Some(format!("csg_to_ideal of {}", file.display()));
            out.labels = vec![None; gens.len()];
            out.generators = gens;
            out.target = Some(g);
            emit(out)
        }
        GenKind::OneInThreeSat { file } => {
            let text = fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
            let sat = SatInstance::parse(&text).map_err(fail)?;
            let enc = encode_1in3sat(&sat);
            let names: Vec<String> = (1..=sat.sets().len()).map(|j| format!("y{j}")).collect();
            let ring = PolyRing::new(field, VariableContext::new(names).map_err(fail)?);
            let mono = |e: &[u32]| Polynomial::monomial(&ring, Monomial::new(e.to_vec()));
            let mut out = InstanceFile::new(&ring, MonomialOrder::lex());
            out.provenance = Some(format!("1in3sat of {}", file.display()));
            out.generators = enc.algebra.generators().iter().map(|a| mono(a)).collect();
            out.labels = enc.elements.iter().map(|e| Some(format!("e{e}"))).collect();
            out.target = Some(mono(&enc.beta));
            emit(out)
        }
        GenKind::Random { seed, vars, gens, degree } => emit(random_instance(*seed, *vars, *gens, *degree, field)?),
    }
}

/// Generators with small integer coefficients; the target is an evaluated
/// random certificate for even seeds and a random polynomial for odd ones.
fn random_instance(seed: u64, n: usize, s: usize, d: u32, field: Field) -> Res<InstanceFile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = PolyRing::new(field, VariableContext::new(names).map_err(fail)?);
    let random_poly = |rng: &mut ChaCha8Rng, ring: &std::sync::Arc<PolyRing>, deg: u32| {
        let nv = ring.nvars();
        let terms: Vec<_> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let mut e = vec![0u32; nv];
                let total = rng.gen_range(1..=deg.max(1));
                for _ in 0..total {
                    if nv > 0 {
                        e[rng.gen_range(0..nv)] += 1;
                    }
                }
                (Monomial::new(e), ring.field().from_int(rng.gen_range(-3..=3)))
            })
            .collect();
        Polynomial::from_terms(ring, terms).expect("sizes match")
    };
    let gens: Vec<Polynomial> = (0..s).map(|_| random_poly(&mut rng, &ring, d)).collect();
    let pres = SubalgebraPresentation::new(&ring, gens.clone()).map_err(fail)?;
    let target = if seed.is_multiple_of(2) {
        let tags = pres.tag_ring();
        let p = random_poly(&mut rng, &tags, 2);
        algmem::evaluate_in(&p, &pres).map_err(fail)?
    } else {
        random_poly(&mut rng, &ring, d + 1)
    };
    let mut out = InstanceFile::new(&ring, MonomialOrder::lex());
    out.provenance = Some(format!("random seed={seed}"));
    out.labels = vec![None; gens.len()];
    out.generators = gens;
    out.target = Some(target);
    Ok(out)
}

fn cmd_bounds(name: &str, args: &[String]) -> Res<Outcome> {
    let mut kv = std::collections::BTreeMap::new();
    for a in args {
        let (k, v) = a.split_once('=').ok_or_else(|| format!("expected key=value, found '{a}'"))?;
        kv.insert(k.trim().to_string(), v.trim().to_string());
    }
    let get = |k: &str| -> Res<u64> {
        let v = kv.get(k).ok_or_else(|| format!("missing argument {k}="))?;
        v.parse().map_err(|e| format!("{k}: {e}"))
    };
    let expect = |keys: &[&str]| -> Res<()> {
        match kv.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(format!("unexpected argument '{k}' for {name} (takes {})", keys.join(", "))),
            None => Ok(()),
        }
    };
    let value = match name {
        "hermann" => {
            expect(&["n", "s", "d", "degg"])?;
            algmem::bound_hermann(get("n")?, get("s")?, get("d")?, get("degg")?)
        }
        "ci" => {
            expect(&["s", "d", "degg"])?;
            algmem::bound_ci(get("s")?, get("d")?, get("degg")?)
        }
        "dube" => {
            expect(&["n", "d"])?;
            algmem::bound_dube(get("n")?, get("d")?)
        }
        "mayr-ritscher" => {
            expect(&["n", "r", "degrees"])?;
            let degrees = kv
                .get("degrees")
                .ok_or("missing argument degrees=")?
                .split(',')
                .map(|x| x.trim().parse::<u64>().map_err(|e| format!("degrees: {e}")))
                .collect::<Res<Vec<_>>>()?;
            algmem::bound_mayr_ritscher(get("n")?, get("r")?, &degrees)
        }
        "certification" => {
            expect(&["n", "s", "d", "degg"])?;
            algmem::bound_certification(get("n")?, get("s")?, get("d")?, get("degg")?)
        }
        _ => {
            return Err(format!(
                "unknown bound '{name}' (available: hermann, ci, dube, mayr-ritscher, certification)"
            ))
        }
    }
    .map_err(fail)?;
    let mut r = Record::new();
    r.lines("value", [value.to_string()]);
    Ok(Outcome::ok(r))
}
