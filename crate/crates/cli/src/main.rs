//! `epl`: edge posets, quotients of boolean algebras by permutation groups,
//! and Peck checks from the command line.
//!
//! Exit codes: 0 every requested property holds, 1 some property fails,
//! 2 bad input, 3 the results contradict each other (a bug).

mod output;
mod source;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use edgeposet::edge::edge_poset_of_kind;
use edgeposet::io::to_dot;
use edgeposet::peck::{antichain_union_profile, lefschetz_ranks, DEFAULT_ORACLE_THRESHOLD};
use edgeposet::{
    analyze_action, brute_force_antichain_union, edge_poset, find_isomorphism,
    h_poset, h_to_e_bijection, induced_bn_action, is_unitary_peck, pak_sequence_check, peck_verdict,
    q_map, rank_profile, run_sweep, scd_boolean, scd_h_boolean, scd_transport, sweep_groups, EdgeKind,
    GradedPoset, PeckReport, PermGroup, SweepOutcome, DEFAULT_CAP,
};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Inconsistent(String),
}

impl From<edgeposet::Error> for CliError {
    fn from(e: edgeposet::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("write failed: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Input(format!("csv: {e}"))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Ranks,
    Peck,
    UnitaryPeck,
    Sperner,
    SelfDual,
    Scd,
}

#[derive(Parser, Debug)]
#[command(name = "epl", version, about = "Edge posets, boolean algebra quotients and Peck checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. `dot` draws the poset instead of the report.
    #[arg(long, global = true, env = "EPL_FORMAT", value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true, env = "EPL_OUT")]
    out: Option<PathBuf>,

    /// Worker threads for sweeps; 0 uses every core.
    #[arg(long, global = true, env = "EPL_JOBS", default_value_t = 0)]
    jobs: usize,

    /// Posets up to this size get their antichain numbers double-checked by
    /// brute force.
    #[arg(long, global = true, env = "EPL_ORACLE_THRESHOLD", default_value_t = DEFAULT_ORACLE_THRESHOLD)]
    oracle_threshold: usize,

    /// Refuse to enumerate groups larger than this.
    #[arg(long, global = true, env = "EPL_GROUP_CAP", default_value_t = DEFAULT_CAP)]
    group_cap: usize,
}

#[derive(Args, Debug, Clone, Copy)]
struct EdgeFlags {
    /// Work with the edge poset E(P).
    #[arg(long, env = "EPL_EDGE", conflicts_with = "hpos")]
    edge: bool,

    /// Work with H(P).
    #[arg(long, env = "EPL_HPOS")]
    hpos: bool,
}

impl EdgeFlags {
    fn kind(self) -> Option<EdgeKind> {
        match (self.edge, self.hpos) {
            (true, _) => Some(EdgeKind::E),
            (_, true) => Some(EdgeKind::H),
            _ => None,
        }
    }
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// trivial, symmetric[:K], cyclic[:K], dihedral[:K], hyperoctahedral[:K],
    /// wreath:M,L (S_M wr S_L) or tree:FILE.
    #[arg(long, env = "EPL_GROUP", conflicts_with = "gens", required_unless_present = "gens")]
    group: Option<String>,

    /// File of generators, one per line in 1-indexed cycle notation.
    #[arg(long, env = "EPL_GENS")]
    gens: Option<PathBuf>,

    /// Number of points the group acts on.
    #[arg(long, env = "EPL_N")]
    n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check properties of a poset: bn:N, chain:N, fig1, fig2, diamond,
    /// tree:FILE or a JSON file.
    Check {
        source: String,
        #[command(flatten)]
        edge: EdgeFlags,
        /// Comma-separated: ranks, peck, unitary-peck, sperner, self-dual, scd.
        #[arg(long, env = "EPL_CHECKS", value_enum, value_delimiter = ',', default_value = "ranks,peck")]
        checks: Vec<CheckKind>,
    },
    /// Quotient of B_n by a group acting on n points. With --format dot,
    /// draws B_n/G, or E(B_n/G) with --edge, or H(B_n/G) with --hpos.
    Quotient {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        edge: EdgeFlags,
    },
    /// One record per conjugacy class of subgroups of S_n (n <= 5), or per
    /// generator file. Exits 1 if some E(B_n/G) is not Peck.
    Sweep {
        #[arg(long, env = "EPL_N")]
        n: Option<usize>,
        /// Generator files to sweep instead of the subgroups of S_n.
        #[arg(long, env = "EPL_GENS", value_delimiter = ',', num_args = 1..)]
        gens: Vec<PathBuf>,
        /// Record the time spent on each group.
        #[arg(long, env = "EPL_TIMING")]
        timing: bool,
    },
    /// The sequence p_k(l, m, r) for k = r..=lm: the sum of binom(nu, r)
    /// over partitions of k in an l x m box with nu distinct part sizes.
    Pak {
        #[arg(long, env = "EPL_L")]
        l: usize,
        #[arg(long, env = "EPL_M")]
        m: usize,
        #[arg(long, env = "EPL_R", default_value_t = 1)]
        r: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check { source, edge, checks } => cmd_check(&cli, source, edge.kind(), checks),
        Command::Quotient { group, edge } => cmd_quotient(&cli, group, edge.kind()),
        Command::Sweep { n, gens, timing } => cmd_sweep(&cli, *n, gens, *timing),
        Command::Pak { l, m, r } => cmd_pak(&cli, *l, *m, *r),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("epl: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Inconsistent(msg)) => {
            eprintln!("epl: INTERNAL INCONSISTENCY: {msg}");
            ExitCode::from(3)
        }
    }
}

/// Writes a single report in the chosen format, or `dot` for `--format dot`.
fn emit(cli: &Cli, report: &Value, dot: impl FnOnce() -> String) -> Result<(), CliError> {
    let mut w = output::open(cli.out.as_deref())?;
    match cli.format {
        Format::Json => output::write_json_line(&mut *w, report)?,
        Format::Csv => {
            let mut row = Vec::new();
            output::flatten("", report, &mut row);
            output::write_csv(&mut *w, &[row])?;
        }
        Format::Dot => write!(w, "{}", dot())?,
    }
    w.flush()?;
    Ok(())
}

/// Flow-based antichain numbers against brute force, and the Peck verdict
/// of the fast path against the full report.
fn oracle_check(p: &GradedPoset, threshold: usize) -> Result<(), CliError> {
    if p.len() > threshold {
        return Ok(());
    }
    let kmax = p.rank_vector().len();
    let flow = antichain_union_profile(p, kmax);
    for (i, &d) in flow.iter().enumerate() {
        let brute = brute_force_antichain_union(p, i + 1);
        if d != brute {
            return Err(CliError::Inconsistent(format!(
                "d_{} is {d} by flow but {brute} by brute force",
                i + 1
            )));
        }
    }
    if peck_verdict(p).peck != PeckReport::new(p).peck {
        return Err(CliError::Inconsistent("Peck fast path disagrees with the antichain check".into()));
    }
    Ok(())
}

fn poset_name(source: &str, kind: Option<EdgeKind>) -> String {
    match kind {
        None => source.to_string(),
        Some(EdgeKind::E) => format!("E({source})"),
        Some(EdgeKind::H) => format!("H({source})"),
    }
}

fn cmd_check(cli: &Cli, source: &str, kind: Option<EdgeKind>, checks: &[CheckKind]) -> Result<bool, CliError> {
    let src = source::poset(source)?;
    let p = match kind {
        None => src.poset.clone(),
        Some(k) => {
            let e = edge_poset_of_kind(&src.poset, k);
            let labels = e.labels_from(&src.poset);
            e.poset.with_labels(labels)?
        }
    };
    let name = poset_name(source, kind);
    let mut report = Map::new();
    report.insert("poset".into(), json!(name));
    report.insert("elements".into(), json!(p.len()));
    report.insert("covers".into(), json!(p.covers().len()));
    let mut pass = true;
    let mut seen = Vec::new();
    for &check in checks {
        if seen.contains(&check) {
            continue;
        }
        seen.push(check);
        match check {
            CheckKind::Ranks => {
                let prof = rank_profile(&p);
                report.insert("rank_vector".into(), json!(p.rank_vector()));
                report.insert("symmetric".into(), json!(prof.symmetric));
                report.insert("unimodal".into(), json!(prof.unimodal));
            }
            CheckKind::Peck => {
                oracle_check(&p, cli.oracle_threshold)?;
                let v = peck_verdict(&p);
                pass &= v.peck;
                report.insert("peck".into(), json!(v.peck));
                report.insert("peck_steps".into(), json!(v));
            }
            CheckKind::UnitaryPeck => {
                let u = is_unitary_peck(&p);
                pass &= u;
                report.insert("unitary_peck".into(), json!(u));
                report.insert("lefschetz_ranks".into(), json!(lefschetz_ranks(&p)));
            }
            CheckKind::Sperner => {
                oracle_check(&p, cli.oracle_threshold)?;
                let r = PeckReport::new(&p);
                let widest = r.rank_vector.iter().copied().max().unwrap_or(0);
                let sperner = r.d_k.first().copied().unwrap_or(0) == widest;
                pass &= sperner;
                report.insert("sperner".into(), json!(sperner));
                report.insert("strongly_sperner".into(), json!(r.strongly_sperner));
                report.insert("d_k".into(), json!(r.d_k));
            }
            CheckKind::SelfDual => {
                let d = find_isomorphism(&p, &p.dual()).is_some();
                pass &= d;
                report.insert("self_dual".into(), json!(d));
            }
            CheckKind::Scd => {
                let n = src
                    .boolean
                    .ok_or_else(|| CliError::Input("scd is available for bn:N sources only".into()))?;
                let d = match kind {
                    None => scd_boolean(n)?,
                    Some(EdgeKind::H) => scd_h_boolean(n)?,
                    Some(EdgeKind::E) => scd_transport(&scd_h_boolean(n)?, &h_to_e_bijection(&src.poset))?,
                };
                let valid = d.validate(&p);
                if let Err(e) = &valid {
                    return Err(CliError::Inconsistent(format!("constructed chain decomposition is invalid: {e}")));
                }
                report.insert("scd".into(), json!(true));
                report.insert("scd_chains".into(), json!(d.chains.len()));
            }
        }
    }
    emit(cli, &Value::Object(report), || to_dot(&p, &name))?;
    Ok(pass)
}

fn banner(group: &str, n: usize) {
    eprintln!("################################################################");
    eprintln!("# COUNTEREXAMPLE: E(B_{n}/G) is not Peck for G = <{group}>");
    eprintln!("################################################################");
}

fn cmd_quotient(cli: &Cli, args: &GroupArgs, kind: Option<EdgeKind>) -> Result<bool, CliError> {
    let gens = args.gens.as_ref().map(|p| p.to_string_lossy().into_owned());
    let g = source::group(args.group.as_deref(), gens.as_deref(), args.n, cli.group_cap)?;
    let n = g.degree();
    let a = induced_bn_action(Arc::new(g))?;
    let report = analyze_action(&a, false)?;
    if report.is_inconsistent() {
        return Err(CliError::Inconsistent(format!("CCT verdicts for <{}>: {:?}", report.group, report.cct_methods)));
    }
    let value = serde_json::to_value(&report).map_err(|e| CliError::Input(e.to_string()))?;
    let dot = || {
        let q = q_map(&a).expect("analyze_action built this already").quotient;
        let labels = q.orbits.iter().map(|o| output::set_label(o[0])).collect();
        let qp = q.poset.clone().with_labels(labels).expect("one label per orbit");
        let drawn = match kind {
            None => qp.clone(),
            Some(k) => {
                let e = if k == EdgeKind::E { edge_poset(&qp) } else { h_poset(&qp) };
                let labels = e.labels_from(&qp);
                e.poset.with_labels(labels).expect("one label per edge")
            }
        };
        to_dot(&drawn, &poset_name(&format!("B_{n}/G"), kind))
    };
    match cli.format {
        Format::Csv => {
            let mut w = output::open(cli.out.as_deref())?;
            output::write_csv(&mut *w, &[output::action_row(&report)])?;
            w.flush()?;
        }
        _ => emit(cli, &value, dot)?,
    }
    if !report.peck.peck {
        banner(&report.group, n);
    }
    Ok(report.peck.peck)
}

fn cmd_sweep(cli: &Cli, n: Option<usize>, gens: &[PathBuf], timing: bool) -> Result<bool, CliError> {
    let outcome: SweepOutcome = if gens.is_empty() {
        let n = n.ok_or_else(|| CliError::Input("sweep needs --n or --gens".into()))?;
        run_sweep(n, cli.jobs, timing)?
    } else {
        let n = n.ok_or_else(|| CliError::Input("--gens needs --n".into()))?;
        let groups = gens
            .iter()
            .map(|f| source::group(None, Some(&f.to_string_lossy()), Some(n), cli.group_cap))
            .collect::<Result<Vec<PermGroup>, _>>()?;
        sweep_groups(groups, cli.jobs, timing)?
    };
    let mut w = output::open(cli.out.as_deref())?;
    match cli.format {
        Format::Json => {
            for r in &outcome.records {
                let v = serde_json::to_value(r).map_err(|e| CliError::Input(e.to_string()))?;
                output::write_json_line(&mut *w, &v)?;
            }
        }
        Format::Csv => {
            let rows: Vec<_> = outcome.records.iter().map(output::action_row).collect();
            output::write_csv(&mut *w, &rows)?;
        }
        Format::Dot => return Err(CliError::Input("sweep writes json or csv".into())),
    }
    w.flush()?;
    if let Some(&i) = outcome.inconsistencies.first() {
        let r = &outcome.records[i];
        return Err(CliError::Inconsistent(format!(
            "<{}>: CCT verdicts {:?}, E(B_n/G) Peck = {}",
            r.group, r.cct_methods, r.peck.peck
        )));
    }
    for &i in &outcome.counterexamples {
        let r = &outcome.records[i];
        banner(&r.group, r.degree);
    }
    eprintln!(
        "{} groups, {} CCT, {} counterexamples",
        outcome.records.len(),
        outcome.records.iter().filter(|r| r.cct).count(),
        outcome.counterexamples.len()
    );
    Ok(outcome.counterexamples.is_empty())
}

fn cmd_pak(cli: &Cli, l: usize, m: usize, r: usize) -> Result<bool, CliError> {
    let s = pak_sequence_check(l, m, r);
    let value = json!({
        "l": s.l,
        "m": s.m,
        "r": s.r,
        "sequence": s.sequence.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
        "symmetric": s.symmetric,
        "unimodal": s.unimodal,
    });
    if cli.format == Format::Dot {
        return Err(CliError::Input("pak writes json or csv".into()));
    }
    let ok = s.symmetric && s.unimodal;
    let mut w = output::open(cli.out.as_deref())?;
    match cli.format {
        Format::Json => {
            let mut v = value;
            v["sequence"] = json!(s.sequence);
            output::write_json_line(&mut *w, &v)?;
        }
        _ => {
            let mut row = Vec::new();
            output::flatten("", &value, &mut row);
            output::write_csv(&mut *w, &[row])?;
        }
    }
    w.flush()?;
    Ok(ok)
}
