//! Command-line front end. [`run`] parses arguments, writes the report to
//! `out` and diagnostics to `err`, and returns the exit code: 0 on success,
//! 1 when a check fails, 2 on usage or input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::{self, BoundReport};
use crate::code::format::{self, CodeFile};
use crate::code::{dual, Budget, InnerProduct, LinearCode, SymplecticCode};
use crate::error::Error;
use crate::pauli::pauli_format;
use crate::stabilizer::{self, render_human, render_kv, CodeParams, Purity, Rule};
use crate::statevec::{eigenspace_dims, kl_verify, GeneratorSet, KlOutcome};

#[derive(Parser, Debug)]
#[command(name = "stabforge", version, about = "Stabilizer codes from classical codes over finite fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone, Copy)]
struct Common {
    /// Emit `key=value` lines instead of the text certificate.
    #[arg(long, global = true)]
    kv: bool,
    /// log2 of the number of codewords a distance search may visit.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_LOG2)]
    budget: u32,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Certify a symplectic, additive or Hermitian self-orthogonal linear code.
    Certify {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Dual code under an inner product.
    Dual {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "euclidean")]
        ip: InnerProduct,
        /// Write the dual to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSS code from C1^⊥ ⊆ C2.
    Css {
        #[arg(long)]
        c1: PathBuf,
        #[arg(long)]
        c2: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Steane enlargement of a Euclidean dual-containing code C ⊂ C'.
    Enlarge {
        #[arg(long)]
        c: PathBuf,
        #[arg(long = "c-prime")]
        c_prime: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Construction X on a linear code over GF(q²).
    Conx {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Asymmetric CSS code from C1^⊥* ⊆ C2.
    Aqc {
        #[arg(long)]
        c1: PathBuf,
        #[arg(long)]
        c2: PathBuf,
        #[arg(long, default_value = "euclidean")]
        ip: InnerProduct,
        #[command(flatten)]
        common: Common,
    },
    /// Entanglement-assisted parameters of a linear code over GF(q²).
    Ea {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Apply a propagation rule to given or certified parameters.
    Propagate {
        #[arg(long = "in", conflicts_with = "params")]
        input: Option<PathBuf>,
        /// `n,k,d,q`
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        pure: bool,
        #[arg(long)]
        rule: Rule,
        #[command(flatten)]
        common: Common,
    },
    /// Check parameters against the quantum bounds.
    Bounds {
        /// `n,k,d,q`; `n,k,d_z,d_x,q` with --aqc-singleton; `n,k,j,q` with --aqmds.
        #[arg(long, conflicts_with = "input")]
        params: Option<String>,
        /// Certify a code file first and check its parameters.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        pure: bool,
        #[arg(long)]
        singleton: bool,
        #[arg(long)]
        hamming: bool,
        #[arg(long)]
        gv: bool,
        #[arg(long = "aqc-singleton")]
        aqc_singleton: bool,
        #[arg(long)]
        aqmds: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Knill–Laflamme check of a qubit symplectic code on the dense state space.
    Kl {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Summary of a code file.
    Info {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

/// An error tied to the file it came from.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure(e.to_string())
    }
}

fn at(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        let msg = e.to_string();
        if msg.contains(&path.display().to_string()) {
            Failure(msg)
        } else {
            Failure(format!("{}: {msg}", path.display()))
        }
    }
}

fn load(path: &Path) -> std::result::Result<CodeFile, Failure> {
    format::read(path).map_err(|e| Failure(e.to_string()))
}

fn load_classical(path: &Path) -> std::result::Result<LinearCode, Failure> {
    match load(path)? {
        CodeFile::Linear(c) | CodeFile::Additive(c) => Ok(c),
        CodeFile::Symplectic(_) => Err(Failure(format!("{}: expected a linear or additive code", path.display()))),
    }
}

fn load_symplectic(path: &Path) -> std::result::Result<SymplecticCode, Failure> {
    match load(path)? {
        CodeFile::Symplectic(c) => Ok(c),
        _ => Err(Failure(format!("{}: expected a symplectic code", path.display()))),
    }
}

fn certify_file(path: &Path, budget: Budget) -> std::result::Result<stabilizer::StabilizerCode, Failure> {
    match load(path)? {
        CodeFile::Symplectic(c) => stabilizer::certify_stabilizer(&c, budget).map_err(at(path)),
        CodeFile::Linear(c) | CodeFile::Additive(c) => stabilizer::certify_additive(&c, budget).map_err(at(path)),
    }
}

fn parse_numbers(s: &str, expected: usize) -> std::result::Result<Vec<usize>, Failure> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Failure(format!("--params: expected {expected} comma-separated integers, got '{s}'")))?;
    if v.len() != expected {
        return Err(Failure(format!("--params: expected {expected} values, got {}", v.len())));
    }
    Ok(v)
}

fn purity(pure: bool) -> Purity {
    if pure {
        Purity::Pure
    } else {
        Purity::Unknown
    }
}

fn certificate(p: &CodeParams, common: Common) -> String {
    if common.kv {
        render_kv(p)
    } else {
        render_human(p)
    }
}

fn report_line(r: &BoundReport, kv: bool) -> String {
    if kv {
        r.kv()
    } else {
        r.to_string()
    }
}

type Outcome = std::result::Result<(String, i32), Failure>;

fn ok(text: String) -> Outcome {
    Ok((text, 0))
}

fn execute(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Certify { input, common } => {
            let code = certify_file(&input, Budget::from_log2(common.budget))?;
            ok(certificate(code.params(), common))
        }
        Cmd::Dual { input, ip, out } => {
            let file = load(&input)?;
            let result = match file {
                CodeFile::Symplectic(c) => {
                    if ip != InnerProduct::Symplectic {
                        return Err(Failure(format!("{}: symplectic files only take --ip symplectic", input.display())));
                    }
                    CodeFile::Symplectic(c.dual())
                }
                CodeFile::Linear(c) | CodeFile::Additive(c) => CodeFile::from_code(dual(&c, ip).map_err(at(&input))?),
            };
            match out {
                Some(path) => {
                    format::write(&path, &result)?;
                    ok(String::new())
                }
                None => ok(format::render(&result)),
            }
        }
        Cmd::Css { c1, c2, common } => {
            let a = load_classical(&c1)?;
            let b = load_classical(&c2)?;
            let code = stabilizer::css(&a, &b, Budget::from_log2(common.budget))?;
            ok(certificate(code.params(), common))
        }
        Cmd::Enlarge { c, c_prime, common } => {
            let a = load_classical(&c)?;
            let b = load_classical(&c_prime)?;
            ok(certificate(&stabilizer::steane_enlarge(&a, &b, Budget::from_log2(common.budget))?, common))
        }
        Cmd::Conx { input, common } => {
            let c = load_classical(&input)?;
            let p = stabilizer::construction_x(&c, Budget::from_log2(common.budget)).map_err(at(&input))?;
            ok(certificate(&p, common))
        }
        Cmd::Aqc { c1, c2, ip, common } => {
            let a = load_classical(&c1)?;
            let b = load_classical(&c2)?;
            ok(certificate(&stabilizer::css_aqc(&a, &b, ip, Budget::from_log2(common.budget))?, common))
        }
        Cmd::Ea { input, common } => {
            let c = load_classical(&input)?;
            let p = stabilizer::ea_ebits(&c, Budget::from_log2(common.budget)).map_err(at(&input))?;
            ok(certificate(&p, common))
        }
        Cmd::Propagate { input, params, pure, rule, common } => {
            let p = match (input, params) {
                (Some(path), _) => certify_file(&path, Budget::from_log2(common.budget))?.into_params(),
                (None, Some(s)) => {
                    let v = parse_numbers(&s, 4)?;
                    CodeParams::given(v[3], v[0], v[1], v[2], purity(pure))?
                }
                (None, None) => return Err(Failure("propagate: give --in or --params".into())),
            };
            ok(certificate(&stabilizer::propagate(&p, rule)?, common))
        }
        Cmd::Bounds { params, input, pure, singleton, hamming, gv, aqc_singleton, aqmds, common } => {
            bounds_command(params, input, pure, [singleton, hamming, gv, aqc_singleton, aqmds], common)
        }
        Cmd::Kl { input, delta, common } => {
            let c = load_symplectic(&input)?;
            let g = GeneratorSet::from_symplectic(&c).map_err(at(&input))?;
            let outcome = kl_verify(&g, delta).map_err(at(&input))?;
            let dims = eigenspace_dims(&g).map_err(at(&input))?;
            let mut text = String::new();
            let code_dim = dims.first().copied().unwrap_or(0);
            match outcome {
                KlOutcome::Pass { errors_checked, .. } => {
                    if common.kv {
                        text += &format!("kl=pass\ndelta={delta}\nerrors_checked={errors_checked}\ncode_dim={code_dim}\n");
                    } else {
                        text += &format!("kl pass: delta={delta} errors_checked={errors_checked} code_dim={code_dim}\n");
                    }
                    ok(text)
                }
                KlOutcome::Fail(f) => {
                    let w = pauli_format(&f.error);
                    let value = format!("{:.6}{:+.6}i", f.value.re, f.value.im);
                    if common.kv {
                        text += &format!("kl=fail\ndelta={delta}\nwitness={w}\nweight={}\ni={}\nj={}\nvalue={value}\n", f.error.weights().quantum, f.i, f.j);
                    } else {
                        text += &format!("kl fail: delta={delta} witness={w} (weight {}) <c_{}|E|c_{}> = {value}\n", f.error.weights().quantum, f.i, f.j);
                    }
                    Ok((text, 1))
                }
            }
        }
        Cmd::Info { input, common } => {
            let file = load(&input)?;
            let f = file.field().clone();
            let (n, dim) = match &file {
                CodeFile::Linear(c) | CodeFile::Additive(c) => (c.n(), c.dim()),
                CodeFile::Symplectic(c) => (c.n(), c.dim()),
            };
            let rows = [
                ("field", format!("GF({})", f.q())),
                ("p", f.p().to_string()),
                ("m", f.m().to_string()),
                ("kind", file.kind().to_string()),
                ("n", n.to_string()),
                ("dim", dim.to_string()),
                ("digest", stabilizer::digest(&file)),
            ];
            let text = rows
                .iter()
                .map(|(k, v)| if common.kv { format!("{k}={v}\n") } else { format!("{k:<7} {v}\n") })
                .collect();
            ok(text)
        }
    }
}

fn bounds_command(
    params: Option<String>,
    input: Option<PathBuf>,
    pure: bool,
    flags: [bool; 5],
    common: Common,
) -> Outcome {
    let [mut singleton, mut hamming, gv, aqc_singleton, aqmds] = flags;
    if !flags.iter().any(|&f| f) {
        singleton = true;
        hamming = true;
    }
    let mut reports: Vec<BoundReport> = Vec::new();
    let mut lines: Vec<String> = Vec::new();
    let mut failed = false;

    if aqmds {
        let s = params.as_deref().ok_or_else(|| Failure("--aqmds needs --params n,k,j,q".into()))?;
        let v = parse_numbers(s, 4)?;
        let m = bounds::aqmds_feasible(v[3], v[0], v[2], v[1])?;
        let cases: Vec<String> = m.cases.iter().map(|c| c.to_string()).collect();
        let cases = if cases.is_empty() { "none".to_string() } else { cases.join(",") };
        lines.push(if common.kv {
            format!("bound=aqmds feasible={} cases={cases}", m.feasible())
        } else {
            format!("aqmds: feasible={} cases={cases}", m.feasible())
        });
        failed |= !m.feasible();
    }
    if aqc_singleton {
        let p = match (&params, &input) {
            (Some(s), _) => {
                let v = parse_numbers(s, 5)?;
                CodeParams::given_asymmetric(v[4], v[0], v[1], v[2], v[3], purity(pure))?
            }
            _ => return Err(Failure("--aqc-singleton needs --params n,k,d_z,d_x,q".into())),
        };
        reports.push(bounds::aqc_singleton(&p));
    }
    if singleton || hamming {
        let p = match (&params, &input) {
            (_, Some(path)) => certify_file(path, Budget::from_log2(common.budget))?.into_params(),
            (Some(s), None) => {
                let v = parse_numbers(s, 4)?;
                CodeParams::given(v[3], v[0], v[1], v[2], purity(pure))?
            }
            (None, None) => return Err(Failure("bounds: give --params or --in".into())),
        };
        if singleton {
            reports.push(bounds::singleton(&p));
        }
        if hamming {
            reports.push(bounds::hamming(&p));
        }
    }
    if gv {
        let s = params.as_deref().ok_or_else(|| Failure("--gv needs --params n,k,d,q".into()))?;
        let v = parse_numbers(s, 4)?;
        reports.push(bounds::gv_exists(v[3], v[0], v[1], v[2])?);
    }
    for r in &reports {
        failed |= r.holds() == Some(false);
        lines.push(report_line(r, common.kv));
    }
    let mut text = lines.join("\n");
    text.push('\n');
    Ok((text, if failed { 1 } else { 0 }))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.cmd) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

