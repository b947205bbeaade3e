use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use plateaued::classify::{ea_equivalent_small, ea_fingerprint, EaVerdict, DEFAULT_BUDGET};
use plateaued::construct::{
    build_from_spectrum, concat_bent, construct_thm42, construct_thm43, disjoint_family, search_duals, PlateauedFamily,
    SpectralSpec, Thm41, Thm42Variant, VectorialBent,
};
use plateaued::format::{format_anf, format_support, format_tt, parse_function, parse_permutation, parse_support};
use plateaued::transform::{decompose_form27, hou_langevin_transform};
use plateaued::{analyze, BinaryMatrix, BitVector, BooleanFunction, Error};

#[derive(Parser)]
#[command(name = "plateaued", version, about = "Design and classify plateaued Boolean functions")]
struct Cli {
    /// Seed for randomized operations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print only JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral summary of a function (`anf:...` or `tt:n:hex`).
    Analyze { function: String },
    #[command(subcommand)]
    Construct(Construct),
    /// Disjoint-spectra family on the shifts of a base support.
    Family {
        #[arg(long)]
        base: PathBuf,
        /// File with one dual per line, member order.
        #[arg(long)]
        duals: PathBuf,
        /// Directory for member_<i>.txt files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bent concatenation of the members stored in a directory.
    Concat {
        #[arg(long)]
        family: PathBuf,
    },
    #[command(subcommand)]
    Transform(Transform),
    /// EA-equivalence evidence for two functions.
    Equiv {
        f: String,
        h: String,
        /// Run the relation search without a budget.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Count duals that make a support valid.
    SearchDuals {
        #[arg(long)]
        support: PathBuf,
        /// Number of random candidates when exhaustive search is infeasible.
        #[arg(long)]
        budget: Option<u64>,
        /// Print every dual found.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Invert the spectrum given by an ordered support and a dual.
    Spectral {
        #[arg(long)]
        support: PathBuf,
        #[arg(long)]
        dual: String,
    },
    /// Dual x.psi(y) + t(y) on (c + EM) with extra columns of y.
    Thm41 {
        /// Permutation file for psi; random parameters are drawn from the seed when absent.
        #[arg(long, requires_all = ["t"])]
        psi: Option<PathBuf>,
        #[arg(long)]
        t: Option<String>,
        #[arg(long, value_delimiter = ',')]
        cols: Vec<String>,
        #[arg(long)]
        c: Option<String>,
        /// Row-major bits of M.
        #[arg(long)]
        m: Option<String>,
        /// With no psi: half the dual variable count and the number of extra columns.
        #[arg(long, value_delimiter = ',')]
        random: Option<Vec<usize>>,
    },
    /// Semi-bent function from the C or D bent classes.
    Thm42 {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        psi: PathBuf,
        /// Basis of E1 (variant d) as comma-separated bit strings.
        #[arg(long, value_delimiter = ',')]
        e1: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        e2: Vec<String>,
        /// Basis of L (variant c).
        #[arg(long, value_delimiter = ',')]
        l: Vec<String>,
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        m: Option<String>,
    },
    /// Dual h_i of a vectorial bent function, other components as columns.
    Thm43 {
        #[arg(long, value_delimiter = ',', required = true)]
        components: Vec<String>,
        #[arg(long)]
        index: usize,
        #[arg(long, value_delimiter = ',')]
        affine: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        cols: Vec<usize>,
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        m: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    C,
    D,
}

#[derive(Subcommand)]
enum Transform {
    /// Apply the nonlinear permutation built from a decomposition at two pivots.
    HouLangevin {
        function: String,
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2])]
        vars: Vec<usize>,
    },
}

struct Out {
    json: bool,
}

impl Out {
    fn text(&self, s: impl AsRef<str>) {
        if !self.json {
            println!("{}", s.as_ref());
        }
    }

    fn value(&self, v: &Value) {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
    }
}

fn function_json(f: &BooleanFunction) -> Value {
    json!({ "anf": format_anf(f), "tt": format_tt(f), "analysis": analyze(f) })
}

fn emit_function(out: &Out, label: &str, f: &BooleanFunction, extra: Value) {
    out.text(format!("{label}:\n  {}\n  {}", format_anf(f), format_tt(f)));
    let mut v = function_json(f);
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    out.value(&v);
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn bits(s: &str) -> anyhow::Result<BitVector> {
    Ok(s.parse::<BitVector>()?)
}

fn affine_block(c: Option<&str>, m: Option<&str>, dim: usize) -> anyhow::Result<(BitVector, BinaryMatrix)> {
    let c = c.map(bits).transpose()?.unwrap_or_else(|| BitVector::zero(dim));
    let m = m.map(|m| BinaryMatrix::from_row_major(m, dim, dim)).transpose()?.unwrap_or_else(|| BinaryMatrix::identity(dim));
    Ok((c, m))
}

fn functions(specs: &[String]) -> anyhow::Result<Vec<BooleanFunction>> {
    Ok(specs.iter().map(|s| parse_function(s)).collect::<Result<_, _>>()?)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let out = Out { json: cli.json };
    match cli.command {
        Command::Analyze { function } => {
            let f = parse_function(&function)?;
            let r = analyze(&f);
            if !cli.json {
                println!("n = {}, weight = {}, degree = {}", r.n, r.weight, r.degree);
                match r.plateaued {
                    Some(p) => println!("{}-plateaued, amplitude {}, {}", p.s, p.amplitude, r.classification),
                    None if r.bent => println!("bent"),
                    None => println!("not plateaued"),
                }
                println!(
                    "support size {}, support rank {}, linear structures of dimension {}, #R = {}, partially bent: {}",
                    r.support_size, r.support_rank, r.lambda_dim, r.autocorr_nonzero_count, r.partially_bent
                );
            }
            out.value(&serde_json::to_value(&r)?);
        }

        Command::Construct(c) => {
            let built = match c {
                Construct::Spectral { support, dual } => {
                    let spec = SpectralSpec::new(parse_support(&read(&support)?)?, parse_function(&dual)?)?;
                    let f = build_from_spectrum(&spec)?;
                    (f, spec)
                }
                Construct::Thm41 { psi, t, cols, c, m, random } => {
                    let p = match psi {
                        Some(psi) => {
                            let psi = parse_permutation(&read(&psi)?)?;
                            let k = psi.len().trailing_zeros() as usize;
                            let (c, m) = affine_block(c.as_deref(), m.as_deref(), 2 * k)?;
                            let t = parse_function(t.as_deref().unwrap_or_default())?;
                            Thm41 { psi, t, c, m, columns: functions(&cols)? }
                        }
                        None => {
                            let Some(&[k, s]) = random.as_deref() else {
                                bail!(Error::Precondition("give --psi and --t, or --random k,s".into()));
                            };
                            if k == 0 || 2 * k + s > plateaued::bits::MAX_VARS {
                                bail!(Error::VariableCount(2 * k + s));
                            }
                            Thm41::random(k, s, &mut ChaCha8Rng::seed_from_u64(cli.seed))
                        }
                    };
                    let c = p.construct()?;
                    (c.function, c.spec)
                }
                Construct::Thm42 { variant, psi, e1, e2, l, c, m } => {
                    let psi = parse_permutation(&read(&psi)?)?;
                    let k = psi.len().trailing_zeros() as usize;
                    let basis = |v: &[String]| v.iter().map(|s| bits(s)).collect::<anyhow::Result<Vec<_>>>();
                    let variant = match variant {
                        Variant::D => Thm42Variant::D { e1: basis(&e1)?, e2: basis(&e2)? },
                        Variant::C => Thm42Variant::C { l: basis(&l)? },
                    };
                    let (c, m) = affine_block(c.as_deref(), m.as_deref(), 2 * k)?;
                    let c = construct_thm42(&psi, &variant, &c, &m)?;
                    (c.function, c.spec)
                }
                Construct::Thm43 { components, index, affine, cols, c, m } => {
                    let h = VectorialBent::new(functions(&components)?)?;
                    let (c, m) = affine_block(c.as_deref(), m.as_deref(), h.num_vars())?;
                    let c = construct_thm43(&h, index, &functions(&affine)?, &cols, &c, &m)?;
                    (c.function, c.spec)
                }
            };
            let (f, spec) = built;
            let extra = json!({
                "s": spec.s(),
                "dual": format_anf(&spec.dual),
                "support": spec.support.points().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            });
            out.text(format!("support ({} points, s = {}):\n{}", spec.support.len(), spec.s(), format_support(&spec.support)));
            emit_function(&out, "function", &f, extra);
        }

        Command::Family { base, duals, out: dir } => {
            let base = parse_support(&read(&base)?)?;
            let duals = read(&duals)?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(parse_function)
                .collect::<Result<Vec<_>, _>>()?;
            let fam = disjoint_family(&base, &duals)?;
            if let Some(dir) = &dir {
                fs::create_dir_all(dir)?;
                for (i, f) in fam.members.iter().enumerate() {
                    fs::write(dir.join(format!("member_{i}.txt")), format!("{}\n", format_tt(f)))?;
                }
            }
            for (i, (f, q)) in fam.members.iter().zip(&fam.shifts).enumerate() {
                out.text(format!("member {i} (shift {q}):\n  {}\n  {}", format_anf(f), format_tt(f)));
            }
            out.value(&json!({
                "n": fam.n,
                "s": fam.s,
                "shifts": fam.shifts.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                "members": fam.members.iter().map(function_json).collect::<Vec<_>>(),
            }));
        }

        Command::Concat { family } => {
            let mut files: Vec<(usize, PathBuf)> = fs::read_dir(&family)?
                .filter_map(|e| e.ok())
                .filter_map(|e| {
                    let name = e.file_name().into_string().ok()?;
                    let i = name.strip_prefix("member_")?.strip_suffix(".txt")?.parse().ok()?;
                    Some((i, e.path()))
                })
                .collect();
            files.sort();
            if files.iter().enumerate().any(|(pos, (i, _))| pos != *i) {
                bail!(Error::InvalidFamily("member files must be numbered 0, 1, ... without gaps".into()));
            }
            let members = files
                .iter()
                .map(|(_, p)| Ok(parse_function(&read(p)?)?))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let fam = PlateauedFamily::from_members(members)?;
            let f = concat_bent(&fam)?;
            emit_function(&out, "bent concatenation", &f, json!({ "members": fam.members.len() }));
        }

        Command::Transform(Transform::HouLangevin { function, vars }) => {
            let f = parse_function(&function)?;
            let &[i, j] = vars.as_slice() else {
                bail!(Error::Parse { pos: 0, msg: "--vars takes two indices".into() });
            };
            let d = decompose_form27(&f, i, j)?;
            let big = hou_langevin_transform(&d)?;
            let (ff, fb) = (ea_fingerprint(&f), ea_fingerprint(&big));
            let diff = ff.first_difference(&fb);
            out.text(format!(
                "decomposition at x{}, x{}: f1 = {}, f2 = {}, alpha = {}, g = {}",
                i,
                j,
                d.f1.to_anf(),
                d.f2.to_anf(),
                d.alpha.to_anf(),
                d.g.to_anf()
            ));
            out.text(match diff {
                Some(field) => format!("fingerprints differ in {field}: EA-inequivalent to the input"),
                None => "fingerprints agree; use `equiv` for a decision".to_string(),
            });
            emit_function(
                &out,
                "transformed",
                &big,
                json!({
                    "walsh": plateaued::wht(&big).values(),
                    "fingerprint_input": ff,
                    "fingerprint_output": fb,
                    "fingerprints_differ_in": diff,
                }),
            );
        }

        Command::Equiv { f, h, exhaustive, budget } => {
            let (f, h) = (parse_function(&f)?, parse_function(&h)?);
            let budget = if exhaustive { u64::MAX } else { budget };
            let verdict = ea_equivalent_small(&f, &h, budget);
            let fingerprints = json!({ "f": ea_fingerprint(&f), "h": ea_fingerprint(&h) });
            let (v, code) = match &verdict {
                EaVerdict::Equivalent(w) => (
                    json!({
                        "status": "equivalent",
                        "witness": {
                            "A": w.a.to_row_major(),
                            "b": w.b.to_string(),
                            "c": w.c.to_string(),
                            "eps": w.eps as u8,
                        },
                        "fingerprints": fingerprints,
                    }),
                    0,
                ),
                EaVerdict::Inequivalent(reason) => {
                    (json!({ "status": "inequivalent", "reason": reason, "fingerprints": fingerprints }), 0)
                }
                EaVerdict::Inconclusive(reason) => {
                    (json!({ "status": "inconclusive", "reason": reason, "fingerprints": fingerprints }), 4)
                }
            };
            out.text(match &verdict {
                EaVerdict::Equivalent(w) => format!(
                    "equivalent: h(x) = f(xA + {}) + {}.x + {} with A = {}",
                    w.b,
                    w.c,
                    w.eps as u8,
                    w.a.to_row_major()
                ),
                EaVerdict::Inequivalent(r) => format!("inequivalent: {r}"),
                EaVerdict::Inconclusive(r) => format!("inconclusive: {r}"),
            });
            out.value(&v);
            return Ok(ExitCode::from(code));
        }

        Command::SearchDuals { support, budget, list } => {
            let support = parse_support(&read(&support)?)?;
            let r = search_duals(&support, budget, cli.seed)?;
            out.text(format!(
                "{} valid duals among {} {} candidates",
                r.count,
                r.examined,
                if r.exhaustive { "(all)" } else { "sampled" }
            ));
            if list {
                r.duals.iter().for_each(|g| out.text(format!("  {}", format_anf(g))));
            }
            let mut v = json!({ "count": r.count, "examined": r.examined, "exhaustive": r.exhaustive });
            if list {
                v["duals"] = r.duals.iter().map(format_tt).collect();
            }
            out.value(&v);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parse { .. } | Error::VariableCount(_)) => 2,
        Some(Error::BudgetExceeded(_)) => 4,
        Some(_) => 3,
        None if err.downcast_ref::<std::io::Error>().is_some() => 2,
        None => 3,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
