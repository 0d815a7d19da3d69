//! Command-line front end. `run` returns the exit code and the text to print.

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{ad_rank, bracket, exp_ad};
use crate::catalog::{theorem1_counts, verify_all, verify_table_with, TableId, VerificationReport, VerifyOptions};
use crate::error::{G2Error, Result};
use crate::nilpotent::{classify_nilpotent, match_table10_schema};
use crate::parse::{format_element, parse_element, parse_element_list, parse_rational, parse_scalar};
use crate::regular::{classify_regular_types, enumerate_closed_subsets};
use crate::reps::{dynkin_index, verify_triple, Sl2Triple};
use crate::subspace::{centralizer, normalizer, span};
use crate::witnesses::fuzz_schema;

#[derive(Parser, Debug)]
#[command(name = "g2sub", version, about = "Exact computations with subalgebras of G2")]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lie bracket of two elements.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Rank of ad(x).
    AdRank {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Nilpotent orbit of an element.
    ClassifyNilpotent {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Schema row of a subalgebra of the positive nilradical.
    MatchSchema {
        #[arg(allow_hyphen_values = true)]
        subspace: String,
    },
    /// Normalizer of a subspace, in echelon form.
    Normalizer {
        #[arg(allow_hyphen_values = true)]
        subspace: String,
    },
    /// Centralizer of a subspace, in echelon form.
    Centralizer {
        #[arg(allow_hyphen_values = true)]
        subspace: String,
    },
    /// List regular subalgebra types or closed root subsets.
    Enumerate {
        #[arg(value_enum)]
        what: EnumerateWhat,
    },
    /// Run catalog checks.
    Verify {
        /// all, T2, T3, T10, T20, T40, PROP1, PROP2, witnesses or fuzz.
        target: String,
        /// Restrict PROP2 to one subalgebra.
        #[arg(long)]
        subalgebra: Option<String>,
        /// λ sample for family rows (repeatable).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Vec<String>,
        /// Seed of the fuzz sweep.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of fuzz samples.
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// Dynkin index of an sl2-triple "f; e+; e-".
    DynkinIndex {
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
    },
    /// exp(c ad n) applied to y.
    ExpAd {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        n: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Numbers of regular, non-regular semisimple and non-regular solvable types.
    Counts,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EnumerateWhat {
    RegularTypes,
    ClosedSubsets,
}

/// Parses `argv` (without the program name) and executes it.
/// Exit codes: 0 success, 1 failed checks, 2 usage or parse errors.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("g2sub".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn report_output(r: &VerificationReport, as_json: bool) -> (i32, String) {
    let code = if r.ok() { 0 } else { 1 };
    let text = if as_json { format!("{}\n", r.to_json()) } else { r.to_text() };
    (code, text)
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let ok = |s: String| Ok((0, format!("{s}\n")));
    match &cli.cmd {
        Command::Bracket { x, y } => ok(format_element(&bracket(&parse_element(x)?, &parse_element(y)?))),
        Command::AdRank { x } => ok(ad_rank(&parse_element(x)?).to_string()),
        Command::ClassifyNilpotent { x } => ok(classify_nilpotent(&parse_element(x)?)?.to_string()),
        Command::MatchSchema { subspace } => {
            let sig = match_table10_schema(&span(&parse_element_list(subspace)?))?;
            if cli.json {
                Ok((0, json(&sig)))
            } else {
                let rows: Vec<String> = sig.all_rows.iter().map(u8::to_string).collect();
                ok(format!(
                    "row={} pivots={} all_rows={}",
                    sig.row,
                    sig.leading_roots.join(","),
                    rows.join(",")
                ))
            }
        }
        Command::Normalizer { subspace } => ok(normalizer(&span(&parse_element_list(subspace)?)).to_string()),
        Command::Centralizer { subspace } => ok(centralizer(&span(&parse_element_list(subspace)?)).to_string()),
        Command::Enumerate { what } => Ok((0, enumerate(*what, cli.json))),
        Command::Verify {
            target,
            subalgebra,
            lambda,
            seed,
            count,
        } => {
            let lambda = if lambda.is_empty() {
                None
            } else {
                Some(lambda.iter().map(|l| parse_rational(l)).collect::<Result<Vec<_>>>()?)
            };
            let opts = VerifyOptions {
                lambda,
                subalgebra: subalgebra.clone(),
            };
            let report = if target.eq_ignore_ascii_case("all") {
                verify_all(&opts)
            } else if target.eq_ignore_ascii_case("fuzz") {
                fuzz_schema(*seed, *count)
            } else {
                let t = TableId::parse(target).ok_or_else(|| G2Error::Catalog(format!("unknown target {target}")))?;
                verify_table_with(t, &opts)
            };
            Ok(report_output(&report, cli.json))
        }
        Command::DynkinIndex { triple } => {
            let xs = parse_element_list(triple)?;
            if xs.len() != 3 {
                return Err(G2Error::NotATriple(format!("expected 3 elements, got {}", xs.len())));
            }
            let t = Sl2Triple::new(xs[0].clone(), xs[1].clone(), xs[2].clone());
            if let Err(e) = verify_triple(&t) {
                return Ok((1, format!("not an sl2-triple: {e}\n")));
            }
            ok(dynkin_index(&t)?.to_string())
        }
        Command::ExpAd { c, n, y } => {
            let g = exp_ad(&parse_scalar(c)?, &parse_element(n)?)?;
            ok(format_element(&g.apply(&parse_element(y)?)))
        }
        Command::Counts => {
            let (r, s, v) = theorem1_counts();
            let code = if (r, s, v) == (64, 2, 49) { 0 } else { 1 };
            Ok((code, format!("regular={r} semisimple_nonregular={s} solvable_nonregular={v}\n")))
        }
    }
}

fn enumerate(what: EnumerateWhat, as_json: bool) -> String {
    match what {
        EnumerateWhat::RegularTypes => {
            let classes = classify_regular_types();
            if as_json {
                return json(&classes);
            }
            let mut s = String::new();
            for c in &classes {
                s.push_str(&format!(
                    "dim={} sigma={} L={} radical={} levi={}\n",
                    c.dimension, c.sigma, c.l_type, c.radical_dim, c.levi_dim
                ));
            }
            s.push_str(&format!("total={}\n", classes.len()));
            s
        }
        EnumerateWhat::ClosedSubsets => {
            let sets = enumerate_closed_subsets();
            if as_json {
                let masks: Vec<u16> = sets.iter().map(|c| c.set().0).collect();
                return json(&masks);
            }
            let mut s = String::new();
            for c in &sets {
                s.push_str(&format!("{:#05x} {}\n", c.set().0, c.set()));
            }
            s.push_str(&format!("total={}\n", sets.len()));
            s
        }
    }
}
