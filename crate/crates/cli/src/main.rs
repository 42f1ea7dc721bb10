use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use keycrystal::crystal::{CrystalGraph, FactorizationCrystal, KeyTableauCrystal};
use keycrystal::eg::{eg_growth, eg_insert, eg_insertion_pair};
use keycrystal::flagged::{default_block_count, flagged_kappa, flagged_schubert, key_expansion, Route};
use keycrystal::tableau::enumerate_sskt;
use keycrystal::verify::{self, Suite, VerifyConfig};
use keycrystal::weak_eg::{enumerate_rfc, weak_insertion_pair, weak_p, weak_q_word};
use keycrystal::{
    Execution, Flag, IncreasingFactorization, IntPolynomial, Permutation, Tableau, WeakComposition, Word,
};

/// Flagged key polynomials, weak Edelman–Greene insertion and Demazure
/// crystals.
#[derive(Parser)]
#[command(name = "keycrystal", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the crystal graph in DOT format to this file (crystal only).
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Refuse enumerations and sweeps larger than this.
    #[arg(long, global = true, value_name = "N")]
    max_instances: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Flagged key polynomial κ_(α,φ).
    Kappa {
        #[arg(long, value_parser = parse_composition)]
        alpha: WeakComposition,
        #[arg(long, value_parser = parse_flag)]
        flag: Option<Flag>,
        /// enum, pichain, recursive or rs.
        #[arg(long, default_value = "enum", value_parser = parse_route, conflicts_with = "all_routes")]
        route: Route,
        /// Compute by every route and report whether they agree.
        #[arg(long)]
        all_routes: bool,
    },
    /// Flagged Schubert polynomial 𝔖_(w,φ).
    Schubert {
        #[arg(long, value_parser = parse_permutation)]
        perm: Permutation,
        #[arg(long, value_parser = parse_flag)]
        flag: Option<Flag>,
        /// Number of factorization blocks; defaults to φ(m − 1).
        #[arg(long)]
        blocks: Option<usize>,
        /// Also list the key expansion as a multiset of compositions.
        #[arg(long)]
        expansion: bool,
    },
    /// Flagged semistandard key tableaux SSKT(α,φ).
    Sskt {
        #[arg(long, value_parser = parse_composition)]
        alpha: WeakComposition,
        #[arg(long, value_parser = parse_flag)]
        flag: Option<Flag>,
    },
    /// Flagged reduced factorizations RFC_n(w,φ) with their insertion tableaux.
    Rfc {
        #[arg(long, value_parser = parse_permutation)]
        perm: Permutation,
        #[arg(long, value_parser = parse_flag)]
        flag: Option<Flag>,
        #[arg(long)]
        blocks: Option<usize>,
    },
    /// Edelman–Greene or weak Edelman–Greene insertion.
    Insert {
        #[command(subcommand)]
        kind: InsertKind,
    },
    /// Build a crystal graph and report its size and character.
    Crystal {
        #[command(subcommand)]
        source: CrystalSource,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Permutations range over S_sn.
        #[arg(long, default_value_t = 4)]
        sn: usize,
        /// Flags satisfy φ(i) ≤ i + excess.
        #[arg(long)]
        flag_excess: Option<usize>,
        /// Bound on |α|.
        #[arg(long, default_value_t = 5)]
        deg: usize,
        /// Bound on ℓ(α).
        #[arg(long)]
        len: Option<usize>,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Subcommand)]
enum InsertKind {
    Eg(InsertInput),
    WeakEg(InsertInput),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InsertInput {
    /// A reduced word, e.g. 2736245 or 2,7,3,6,2,4,5.
    #[arg(long, value_parser = parse_word)]
    word: Option<Word>,
    /// An increasing factorization, e.g. 3|26|56|4.
    #[arg(long, value_parser = parse_factorization)]
    factorization: Option<IncreasingFactorization>,
}

#[derive(Subcommand)]
enum CrystalSource {
    /// Key tableaux SSKT(α,φ) with entries at most n.
    Sskt {
        #[arg(long, value_parser = parse_composition)]
        alpha: WeakComposition,
        #[arg(long, value_parser = parse_flag)]
        flag: Option<Flag>,
        /// Crystal rank; defaults to φ(ℓ(α)).
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Flagged reduced factorizations RFC_n(w,φ).
    Rfc {
        #[arg(long, value_parser = parse_permutation)]
        perm: Permutation,
        #[arg(long, value_parser = parse_flag)]
        flag: Option<Flag>,
        #[arg(long)]
        blocks: Option<usize>,
    },
}

fn parse_composition(s: &str) -> Result<WeakComposition, String> {
    keycrystal::combinat::parse_list(s).map(WeakComposition::new).map_err(|e| e.to_string())
}

fn parse_flag(s: &str) -> Result<Flag, String> {
    keycrystal::combinat::parse_list(s).and_then(Flag::new).map_err(|e| e.to_string())
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e: keycrystal::Error| e.to_string())
}

fn parse_permutation(s: &str) -> Result<Permutation, String> {
    parse_word(s).and_then(|w| Permutation::from_oneline(w.into_letters()).map_err(|e| e.to_string()))
}

fn parse_factorization(s: &str) -> Result<IncreasingFactorization, String> {
    s.parse().map_err(|e: keycrystal::Error| e.to_string())
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: keycrystal::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: keycrystal::Error| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

/// Anything that should end the process without a result.
enum Failure {
    Usage(String),
    Verification,
}

impl From<keycrystal::Error> for Failure {
    fn from(e: keycrystal::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

struct Output {
    json: bool,
}

impl Output {
    fn emit(&self, value: &impl Serialize, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
        } else {
            println!("{}", text());
        }
    }
}

fn check_limit(count: usize, limit: Option<usize>) -> Outcome {
    match limit {
        Some(limit) if count > limit => Err(keycrystal::Error::TooManyInstances { count, limit }.into()),
        _ => Ok(()),
    }
}

fn flag_or_standard(flag: Option<Flag>) -> Flag {
    flag.unwrap_or_else(Flag::standard)
}

fn flag_json(flag: &Flag) -> Vec<usize> {
    flag.values().to_vec()
}

fn kappa(out: &Output, alpha: WeakComposition, flag: Option<Flag>, route: Route, all_routes: bool) -> Outcome {
    let flag = flag_or_standard(flag);
    if !all_routes {
        let p = flagged_kappa(&alpha, &flag, route);
        out.emit(&json!({ "alpha": alpha, "flag": flag_json(&flag), "route": route, "polynomial": p }), || {
            p.to_string()
        });
        return Ok(());
    }
    let results: Vec<(Route, IntPolynomial)> = Route::ALL.iter().map(|&r| (r, flagged_kappa(&alpha, &flag, r))).collect();
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let routes: serde_json::Map<String, serde_json::Value> =
        results.iter().map(|(r, p)| (r.name().to_string(), json!(p))).collect();
    out.emit(&json!({ "alpha": alpha, "flag": flag_json(&flag), "routes": routes, "agree": agree }), || {
        let mut lines: Vec<String> = results.iter().map(|(r, p)| format!("{r}: {p}")).collect();
        lines.push(format!("agree: {agree}"));
        lines.join("\n")
    });
    Ok(())
}

fn schubert(out: &Output, w: Permutation, flag: Option<Flag>, blocks: Option<usize>, expansion: bool) -> Outcome {
    let flag = flag_or_standard(flag);
    let n = blocks.unwrap_or_else(|| default_block_count(&w, &flag));
    let p = flagged_schubert(&w, &flag, Some(n))?;
    let terms = expansion.then(|| key_expansion(&w));
    out.emit(
        &json!({ "perm": w, "flag": flag_json(&flag), "blocks": n, "polynomial": p, "expansion": terms }),
        || {
            let mut text = p.to_string();
            if let Some(terms) = &terms {
                for alpha in terms {
                    text.push_str(&format!("\nκ_{alpha}"));
                }
            }
            text
        },
    );
    Ok(())
}

fn show_tableaux(ts: &[Tableau]) -> String {
    ts.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n\n")
}

fn sskt(out: &Output, alpha: WeakComposition, flag: Option<Flag>, limit: Option<usize>) -> Outcome {
    let flag = flag_or_standard(flag);
    let ts = enumerate_sskt(&alpha, &flag);
    check_limit(ts.len(), limit)?;
    out.emit(&json!({ "alpha": alpha, "flag": flag_json(&flag), "count": ts.len(), "tableaux": ts }), || {
        format!("{} tableaux\n\n{}", ts.len(), show_tableaux(&ts)).trim_end().to_string()
    });
    Ok(())
}

#[derive(Serialize)]
struct RfcEntry {
    factorization: IncreasingFactorization,
    weight: WeakComposition,
    p: Tableau,
    q: Tableau,
}

fn rfc(out: &Output, w: Permutation, flag: Option<Flag>, blocks: Option<usize>, limit: Option<usize>) -> Outcome {
    let flag = flag_or_standard(flag);
    let n = blocks.unwrap_or_else(|| default_block_count(&w, &flag));
    let fs = enumerate_rfc(&w, &flag, n);
    check_limit(fs.len(), limit)?;
    let entries = fs
        .into_iter()
        .map(|f| {
            let (p, q) = weak_insertion_pair(&f)?;
            Ok(RfcEntry { weight: f.weight(), factorization: f, p, q })
        })
        .collect::<keycrystal::Result<Vec<_>>>()?;
    out.emit(
        &json!({ "perm": w, "flag": flag_json(&flag), "blocks": n, "count": entries.len(), "factorizations": entries }),
        || {
            let mut lines = vec![format!("{} factorizations into {n} blocks", entries.len())];
            lines.extend(entries.iter().map(|e| format!("{}  weight {}", e.factorization, e.weight)));
            lines.join("\n")
        },
    );
    Ok(())
}

/// The standard recording tableau of plain EG insertion.
fn eg_q_word(word: &Word) -> keycrystal::Result<Tableau> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (step, (r, _)) in eg_growth(word)?.into_iter().enumerate() {
        if r > rows.len() {
            rows.push(Vec::new());
        }
        rows[r - 1].push(step + 1);
    }
    Tableau::new(1, rows)
}

fn insert(out: &Output, kind: InsertKind) -> Outcome {
    let (weak, input) = match kind {
        InsertKind::Eg(i) => (false, i),
        InsertKind::WeakEg(i) => (true, i),
    };
    let (p, q) = match (input.word, input.factorization, weak) {
        (Some(w), _, false) => (eg_insert(&w)?, eg_q_word(&w)?),
        (Some(w), _, true) => (weak_p(&w)?, weak_q_word(&w)?),
        (None, Some(f), false) => eg_insertion_pair(&f)?,
        (None, Some(f), true) => weak_insertion_pair(&f)?,
        (None, None, _) => unreachable!("clap requires one input"),
    };
    out.emit(&json!({ "p": p, "q": q }), || format!("P:\n{p}\n\nQ:\n{q}"));
    Ok(())
}

fn report_graph<E>(out: &Output, dot: Option<&PathBuf>, g: &CrystalGraph<E>) -> Outcome
where
    E: Clone + Ord + std::fmt::Debug + Serialize,
{
    if let Some(path) = dot {
        std::fs::write(path, g.to_dot()).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let character = g.character();
    let highest = g.highest_weights().len();
    out.emit(
        &json!({
            "rank": g.rank(),
            "vertices": g.num_vertices(),
            "edges": g.num_edges(),
            "highest_weights": highest,
            "character": character,
        }),
        || {
            format!(
                "rank {}\n{} vertices, {} edges, {highest} highest weight elements\ncharacter: {character}",
                g.rank(),
                g.num_vertices(),
                g.num_edges()
            )
        },
    );
    Ok(())
}

fn crystal(out: &Output, dot: Option<&PathBuf>, source: CrystalSource, limit: Option<usize>) -> Outcome {
    match source {
        CrystalSource::Sskt { alpha, flag, rank } => {
            let flag = flag_or_standard(flag);
            let n = rank.unwrap_or_else(|| flag.get(alpha.len()).max(1));
            let c = KeyTableauCrystal::new(&alpha, &flag, n)?;
            check_limit(c.elements().len(), limit)?;
            report_graph(out, dot, &c.graph())
        }
        CrystalSource::Rfc { perm, flag, blocks } => {
            let flag = flag_or_standard(flag);
            let n = blocks.unwrap_or_else(|| default_block_count(&perm, &flag));
            let elems = enumerate_rfc(&perm, &flag, n);
            check_limit(elems.len(), limit)?;
            let g = CrystalGraph::from_subset(&FactorizationCrystal { n }, &elems.into_iter().collect());
            report_graph(out, dot, &g)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let out = Output { json: cli.json };
    let limit = cli.max_instances;
    if cli.dot.is_some() && !matches!(cli.command, Command::Crystal { .. }) {
        return Err(Failure::Usage("--dot only applies to the crystal command".into()));
    }
    match cli.command {
        Command::Kappa { alpha, flag, route, all_routes } => kappa(&out, alpha, flag, route, all_routes),
        Command::Schubert { perm, flag, blocks, expansion } => schubert(&out, perm, flag, blocks, expansion),
        Command::Sskt { alpha, flag } => sskt(&out, alpha, flag, limit),
        Command::Rfc { perm, flag, blocks } => rfc(&out, perm, flag, blocks, limit),
        Command::Insert { kind } => insert(&out, kind),
        Command::Crystal { source } => crystal(&out, cli.dot.as_ref(), source, limit),
        Command::Verify { suite, sn, flag_excess, deg, len, sequential } => {
            let config = VerifyConfig {
                sn,
                flag_excess,
                deg,
                len,
                max_instances: limit,
                execution: if sequential { Execution::Sequential } else { Execution::default() },
            };
            let report = verify::run(suite, &config)?;
            out.emit(&report, || report.to_string());
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
