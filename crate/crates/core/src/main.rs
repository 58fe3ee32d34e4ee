//! Command-line interface. Exit codes: 0 success, 1 invalid input,
//! 2 reproduction or assertion mismatch, 3 resource cap exceeded.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nsgr::burch;
use nsgr::error::Error;
use nsgr::glue::{construct_for_multiplicity, GluingSpec};
use nsgr::ideal::{canonical_ideal, MonomialFractionalIdeal};
use nsgr::kunz::{delta_of, enumerate_deltas, FaceDelta, Quadruple};
use nsgr::reproduce::{self, ReproductionReport};
use nsgr::sdz;
use nsgr::semigroup::{NumericalSemigroup, ResourceLimits};

#[derive(Parser)]
#[command(name = "nsgr", about = "numerical semigroup ring toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GensArg {
    /// Comma-separated semigroup generators, e.g. 9,10,11,12,15
    #[arg(long, value_delimiter = ',', required = true)]
    gens: Vec<i64>,
    /// Emit line-delimited JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity, Frobenius data, Kunz coordinates, Δ, canonical ideal
    Analyze(GensArg),
    /// Semidualizing search and certificates
    #[command(subcommand)]
    Sdz(SdzCommand),
    /// Classify a multiplicity-9 semigroup against the 24-face catalog
    Classify9(GensArg),
    /// Face-Δ machinery
    #[command(subcommand)]
    Faces(FacesCommand),
    /// Burch verdict for the defining ideal of the Artinian quotient
    Burch {
        #[command(flatten)]
        gens: GensArg,
        /// Write the echelon kernel basis as sparse triples to this path
        #[arg(long)]
        dump_kernel: Option<std::path::PathBuf>,
    },
    /// Glue two semigroups with coprime weights
    Glue {
        #[arg(long, value_delimiter = ',', required = true)]
        a_gens: Vec<i64>,
        #[arg(long, value_delimiter = ',', required = true)]
        b_gens: Vec<i64>,
        /// Weight from ⟨A⟩, applied to B's generators
        #[arg(long)]
        a: i64,
        /// Weight from ⟨B⟩, applied to A's generators
        #[arg(long)]
        b: i64,
        /// Transfer the module (1, t^d) from A (paired with (1) from B)
        #[arg(long)]
        transfer: Option<i64>,
    },
    /// Build a semigroup of the given multiplicity with a nontrivial
    /// semidualizing module
    Construct {
        #[arg(long)]
        multiplicity: i64,
    },
    /// Re-run a reference computation and diff it against the fixtures
    Reproduce {
        /// table1 | table3 | table4 | table5 | example73 | prop45 |
        /// enumeration | construct | theorem46-sweep
        target: String,
        #[arg(long, default_value_t = 30)]
        frobenius_cap: i64,
    },
}

#[derive(Subcommand)]
enum SdzCommand {
    /// Search all gap candidates (1, t^d) for certified nontrivial modules
    Search(GensArg),
    /// Certify one candidate ideal
    Certify {
        #[command(flatten)]
        gens: GensArg,
        /// Comma-separated exponents of the candidate, e.g. 0,1
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<i64>,
    },
}

#[derive(Subcommand)]
enum FacesCommand {
    /// List the Δ-sets admissible for a generator-class quadruple
    Enumerate {
        /// Quadruple a,b,c,d with 1 ≤ a < b < c < d ≤ 8
        #[arg(long, value_delimiter = ',', required = true)]
        quad: Vec<u8>,
        /// Apply the face rules R5–R9
        #[arg(long)]
        filter: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the 24-face catalog
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Search for a semigroup whose Δ matches exactly
    Sample {
        /// Pairs i:j separated by commas, e.g. 1:3,2:2,2:3,1:6,2:6
        #[arg(long, value_delimiter = ',', required = true)]
        delta: Vec<String>,
        #[arg(long, default_value_t = 5)]
        cap: i64,
    },
}

fn limits_from_env() -> ResourceLimits {
    match std::env::var("NSGR_CAP").ok().and_then(|v| v.parse::<u64>().ok()) {
        Some(cap) => ResourceLimits::with_cap(cap),
        None => ResourceLimits::default(),
    }
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::CapExceeded(_) => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

fn delta_json(d: &FaceDelta) -> serde_json::Value {
    json!({"m": d.m(), "pairs": d.pairs().map(|(i, j)| vec![i, j]).collect::<Vec<_>>()})
}

fn run_analyze(args: &GensArg) -> nsgr::Result<()> {
    let h = NumericalSemigroup::new(&args.gens)?;
    let m = h.multiplicity();
    let k = canonical_ideal(&h);
    let delta = delta_of(&h, m)?;
    let kunz = if m >= 3 { Some(h.kunz_coordinates(m)?) } else { None };
    if args.json {
        let v = json!({
            "generators": h.generators(),
            "multiplicity": m,
            "embedding_dimension": h.embedding_dimension(),
            "frobenius": h.frobenius(),
            "gaps": h.gaps(),
            "pseudo_frobenius": h.pseudo_frobenius(),
            "type": h.cm_type(),
            "apery": serde_json::to_value(h.apery(m)?)?,
            "kunz": kunz.as_ref().map(|p| &p.mu),
            "delta": delta_json(&delta),
            "canonical": serde_json::to_value(&k)?,
            "canonical_pretty": k.to_string(),
        });
        println!("{v}");
    } else {
        println!("H = {h}");
        println!("multiplicity        {m}");
        println!("embedding dimension {}", h.embedding_dimension());
        println!("frobenius           {}", h.frobenius());
        println!("gaps                {:?}", h.gaps());
        println!("pseudo-Frobenius    {:?}", h.pseudo_frobenius());
        match h.cm_type() {
            1 => println!("type                1 (Gorenstein)"),
            t => println!("type                {t}"),
        }
        match kunz {
            Some(p) => println!("Kunz coordinates    {:?}", p.mu),
            None => println!("Kunz coordinates    (multiplicity < 3)"),
        }
        println!("Δ                   {delta:?}");
        println!("canonical ideal     {k}");
    }
    Ok(())
}

fn run_sdz(cmd: &SdzCommand) -> nsgr::Result<()> {
    match cmd {
        SdzCommand::Search(args) => {
            let h = NumericalSemigroup::new(&args.gens)?;
            let found = sdz::search_nontrivial(&h);
            if args.json {
                for rep in &found {
                    println!("{}", serde_json::to_string(rep)?);
                }
            } else if found.is_empty() {
                println!("{h}: no certified nontrivial semidualizing monomial ideal");
            } else {
                for rep in &found {
                    println!("{h}: certified nontrivial module {}", rep.ideal);
                }
            }
            Ok(())
        }
        SdzCommand::Certify { gens, ideal } => {
            let h = NumericalSemigroup::new(&gens.gens)?;
            let i = MonomialFractionalIdeal::from_exponents(&h, ideal)?;
            let report = sdz::certify_semidualizing(&i);
            if gens.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!("I = {} over {h}", report.ideal);
                for step in &report.steps {
                    println!(
                        "  {}: {}  [{} vs {}]",
                        step.name,
                        if step.pass { "pass" } else { "FAIL" },
                        step.lhs,
                        step.rhs
                    );
                }
                println!("verdict: {:?}", report.verdict);
            }
            Ok(())
        }
    }
}

fn run_classify9(args: &GensArg) -> nsgr::Result<()> {
    let h = NumericalSemigroup::new(&args.gens)?;
    let verdict = sdz::classify_mult9(&h)?;
    if args.json {
        println!("{}", serde_json::to_string(&verdict)?);
    } else {
        println!("{h}: {verdict:?}");
    }
    Ok(())
}

fn run_faces(cmd: &FacesCommand) -> nsgr::Result<()> {
    match cmd {
        FacesCommand::Enumerate { quad, filter, json } => {
            let arr: [u8; 4] = quad.as_slice().try_into().map_err(|_| {
                Error::PreconditionViolated("quadruple needs exactly four entries".into())
            })?;
            let q = Quadruple::new(arr)?;
            let deltas = enumerate_deltas(q, 9, *filter)?;
            for d in &deltas {
                if *json {
                    println!("{}", delta_json(d));
                } else {
                    println!("{d:?}");
                }
            }
            eprintln!("{} Δ-sets for quadruple {q}", deltas.len());
            Ok(())
        }
        FacesCommand::Catalog { json } => {
            for e in nsgr::kunz::face_catalog() {
                if *json {
                    println!(
                        "{}",
                        json!({
                            "id": e.id.to_string(),
                            "delta": delta_json(&e.delta),
                            "sigma": e.sigma,
                            "source": e.source.to_string(),
                            "sample": e.sample.generators(),
                        })
                    );
                } else {
                    println!("{}: Δ = {:?}, sample {} (σ = {} of {})", e.id, e.delta, e.sample, e.sigma, e.source);
                }
            }
            Ok(())
        }
        FacesCommand::Sample { delta, cap } => {
            let pairs: Vec<(u8, u8)> = delta
                .iter()
                .map(|s| {
                    let (i, j) = s.split_once(':').ok_or_else(|| {
                        Error::PreconditionViolated(format!("bad pair {s}; expected i:j"))
                    })?;
                    Ok((
                        i.parse().map_err(|_| Error::PreconditionViolated(format!("bad pair {s}")))?,
                        j.parse().map_err(|_| Error::PreconditionViolated(format!("bad pair {s}")))?,
                    ))
                })
                .collect::<nsgr::Result<_>>()?;
            let target = FaceDelta::new(9, pairs)?;
            match nsgr::kunz::sample_for_delta(&target, *cap)? {
                Some(h) => println!("{h}"),
                None => println!("not found with coordinates ≤ {cap}"),
            }
            Ok(())
        }
    }
}

fn run_burch(args: &GensArg, dump: Option<&std::path::Path>) -> nsgr::Result<()> {
    let h = NumericalSemigroup::new(&args.gens)?;
    let limits = limits_from_env();
    let report = burch::burch_report(&h, limits)?;
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("{h}: {}", if report.burch { "Burch" } else { "not Burch" });
        println!(
            "  variables {}, truncation degree {}, ambient {}, kernel {}, dim 𝔪I = {}, dim 𝔪(I:𝔪) = {}",
            report.variables,
            report.truncation_order,
            report.ambient_dimension,
            report.kernel_dimension,
            report.m_ideal_dimension,
            report.m_colon_dimension
        );
    }
    if let Some(path) = dump {
        let subspace = burch::defining_ideal_truncated(&h, limits)?;
        let mut file = std::fs::File::create(path).map_err(|e| {
            Error::PreconditionViolated(format!("cannot write {}: {e}", path.display()))
        })?;
        for (mono, row_idx, coeff) in subspace.basis_triples() {
            writeln!(file, "{}", json!({"monomial": mono, "row": row_idx, "coeff": coeff.to_string()}))
                .map_err(|e| Error::PreconditionViolated(format!("write failed: {e}")))?;
        }
    }
    Ok(())
}

fn run_glue(a_gens: &[i64], b_gens: &[i64], a: i64, b: i64, transfer: Option<i64>) -> nsgr::Result<()> {
    let left = NumericalSemigroup::new(a_gens)?;
    let right = NumericalSemigroup::new(b_gens)?;
    let spec = GluingSpec::new(left.clone(), right.clone(), a, b)?;
    let glued = spec.glue()?;
    let k = spec.glued_canonical()?;
    let transferred = match transfer {
        Some(d) => {
            let i1 = MonomialFractionalIdeal::from_exponents(&left, &[0, d])?;
            let i2 = MonomialFractionalIdeal::ring(&right);
            Some(spec.transfer_semidualizing(&i1, &i2)?)
        }
        None => None,
    };
    let presentation = if right.generators() == [1] {
        Some(spec.presentation_relation()?)
    } else {
        None
    };
    let v = json!({
        "generators": glued.generators(),
        "frobenius": spec.glued_frobenius()?,
        "pf": spec.glued_pseudo_frobenius()?,
        "canonical": serde_json::to_value(&k)?,
        "canonical_pretty": k.to_string(),
        "transferred_ideal": transferred.as_ref().map(|t| serde_json::to_value(t).unwrap()),
        "presentation_relation": presentation,
    });
    println!("{v}");
    Ok(())
}

fn run_construct(multiplicity: i64) -> nsgr::Result<()> {
    let c = construct_for_multiplicity(multiplicity)?;
    let v = json!({
        "multiplicity": c.multiplicity,
        "base": c.base.generators(),
        "b": c.b,
        "generators": c.semigroup.generators(),
        "canonical_pretty": c.canonical.to_string(),
        "module_pretty": c.transferred.ideal.to_string(),
        "mu": c.transferred.mu,
        "triviality": c.transferred.triviality,
        "hom_is_ring": c.transferred.hom_is_ring,
        "certificate": format!("{:?}", c.transferred.certificate.verdict),
        "presentation": c.presentation,
    });
    println!("{v}");
    Ok(())
}

fn print_report(report: &ReproductionReport) {
    for row in &report.rows {
        if row.matched {
            println!("  ok   {}", row.name);
        } else {
            println!("  FAIL {}", row.name);
            println!("       expected: {}", row.expected);
            println!("       computed: {}", row.computed);
        }
    }
    println!("{}: {}/{} rows match", report.target, report.passed, report.passed + report.failed);
}

fn run_reproduce(target: &str, frobenius_cap: i64) -> nsgr::Result<bool> {
    let limits = limits_from_env();
    let report = match target {
        "example73" => reproduce::example73()?,
        "prop45" => reproduce::prop45()?,
        "table1" => reproduce::table1()?,
        "table3" => reproduce::table3()?,
        "table4" => reproduce::table4()?,
        "table5" => reproduce::table5()?,
        "enumeration" => reproduce::enumeration_counts()?,
        "construct" => reproduce::construct_range()?,
        "theorem46-sweep" => reproduce::theorem46_sweep(frobenius_cap, limits)?,
        other => {
            return Err(Error::PreconditionViolated(format!("unknown reproduce target {other}")))
        }
    };
    print_report(&report);
    Ok(report.all_matched())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Analyze(args) => run_analyze(args).map(|_| true),
        Command::Sdz(cmd) => run_sdz(cmd).map(|_| true),
        Command::Classify9(args) => run_classify9(args).map(|_| true),
        Command::Faces(cmd) => run_faces(cmd).map(|_| true),
        Command::Burch { gens, dump_kernel } => {
            run_burch(gens, dump_kernel.as_deref()).map(|_| true)
        }
        Command::Glue { a_gens, b_gens, a, b, transfer } => {
            run_glue(a_gens, b_gens, *a, *b, *transfer).map(|_| true)
        }
        Command::Construct { multiplicity } => run_construct(*multiplicity).map(|_| true),
        Command::Reproduce { target, frobenius_cap } => run_reproduce(target, *frobenius_cap),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
