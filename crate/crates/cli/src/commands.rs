use std::collections::BTreeMap;
use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperspectra::corona::{
    compare_constants, corona_constants_formula, corona_constants_oracle, corona_constants_published, edge_corona,
    extract_edge_constants, extract_vertex_constants, vertex_corona, CoronaGeometry, CoronaKind,
};
use hyperspectra::cospectral::{
    are_cospectral, check_switching_partition, corona_cospectral_family, gm_switch, CospectralMode, SwitchingPartition,
};
use hyperspectra::generators::{self, PartiteMode};
use hyperspectra::joins::{
    block_formula_adjacency, join_coeff, join_coeff_oracle, join_on_backbone_nonuniform, quotient_from_regular_join,
    BackbonePlan, CardinalityWeights, Coeff, JoinFamily,
};
use hyperspectra::limits::{MAX_ENUM_ENV, MAX_ORACLE_VERTICES};
use hyperspectra::partitions::{
    coarsest_equitable_partition, is_equitable, orbit_partition, quotient_matrix, satisfies_quotient,
};
use hyperspectra::rational::parse_rational;
use hyperspectra::spectra::{
    charpoly_exact, edge_corona_spectrum, eig_sym, vertex_corona_spectrum, SpectrumReport, SpectrumSource, GROUP_TOL,
};
use hyperspectra::verify::THEOREM_IDS;
use hyperspectra::{Hypergraph, Partition, VerifyParams};
use serde::Serialize;
use serde_json::json;

use crate::output::{hypergraph_table, spectrum_table, verify_table, Format, Output};
use crate::Coded;

/// Spectra of weighted hypergraphs: generators, joins, coronas, switching
/// and closed-form verification.
#[derive(Debug, Parser)]
#[command(name = "hyperspectra", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Override the enumeration guard on joined vertex counts.
    #[arg(long, global = true)]
    pub max_enum: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named hypergraph family.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        /// Write to a file instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Adjacency spectrum.
    Spectrum {
        #[arg(long = "in")]
        input: PathBuf,
        /// Roots of the exact characteristic polynomial instead of Jacobi.
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 1e-14)]
        tol: f64,
    },
    /// Exact characteristic polynomial det(xI - A), coefficients low to high.
    Charpoly {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Equitable partitions and quotient matrices.
    Partition {
        #[arg(long = "in")]
        input: PathBuf,
        /// Cells (JSON list of lists) to refine from.
        #[arg(long)]
        seed: Option<PathBuf>,
        /// Orbits of the automorphism group instead of refinement.
        #[arg(long, conflicts_with = "seed")]
        orbits: bool,
        /// Only test these cells for equitability.
        #[arg(long, conflicts_with_all = ["seed", "orbits"])]
        cells: Option<PathBuf>,
    },
    /// Join of a set, or a join laid out on a backbone.
    Join(JoinArgs),
    /// Vertex and edge coronas.
    Corona {
        #[command(subcommand)]
        kind: CoronaCommand,
    },
    /// Switch edges at a special cell D.
    Switch {
        #[arg(long = "in")]
        input: PathBuf,
        /// Cells (JSON list of lists).
        #[arg(long)]
        cells: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Cospectrality of two hypergraphs, or a corona-grown family.
    #[command(args_conflicts_with_subcommands = true)]
    Cospectral {
        #[command(subcommand)]
        family: Option<CospectralCommand>,
        #[arg(long)]
        a: Option<PathBuf>,
        #[arg(long)]
        b: Option<PathBuf>,
        /// Compare exact characteristic polynomials.
        #[arg(long, conflicts_with = "numeric")]
        exact: bool,
        /// Compare sorted numeric spectra within 1e-8.
        #[arg(long)]
        numeric: bool,
    },
    /// Check one closed form against its direct construction.
    Verify(VerifyArgs),
    /// Run every closed-form check.
    VerifyAll {
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        #[arg(long)]
        include_paper_constants: bool,
        /// Also write the JSON report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Mode {
    Weak,
    Strong,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    CompleteUniform {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        w: String,
    },
    Empty {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    Multipartite {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Weak)]
        mode: Mode,
    },
    LoosePath {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
    LooseCycle {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    CompleteGraph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        w: String,
    },
}

#[derive(Debug, Args)]
pub struct JoinArgs {
    /// Members of a join of a set.
    #[arg(long, num_args = 1.., value_delimiter = ',', conflicts_with_all = ["backbone", "participants"])]
    members: Vec<PathBuf>,
    /// Backbone hypergraph; its edge weights become cross-edge weights.
    #[arg(long, requires = "participants")]
    backbone: Option<PathBuf>,
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    participants: Vec<PathBuf>,
    #[arg(long)]
    m: Option<usize>,
    /// Cross-edge weight of a join of a set.
    #[arg(long, default_value = "1")]
    ws: String,
    /// Non-uniform cardinality weights, e.g. `2:1,3:1/2`. On a backbone
    /// they are multiplied by each backbone edge weight.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<String>>,
    /// Cross-check the block formula, coefficient oracle and quotient.
    #[arg(long)]
    check_formula: bool,
}

#[derive(Debug, Subcommand)]
pub enum CoronaCommand {
    Vertex {
        #[arg(long)]
        base: PathBuf,
        /// One file per cell, or a single file used for every cell.
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        members: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long)]
        m: Option<usize>,
        /// Also predict the spectrum and compare with the numeric one.
        #[arg(long)]
        spectrum: bool,
    },
    Edge {
        #[arg(long)]
        base: PathBuf,
        /// One file per base edge, or a single file used for every edge.
        #[arg(long, num_args = 1.., value_delimiter = ',', required = true)]
        members: Vec<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        spectrum: bool,
    },
    /// Oracle, formula and published constants side by side.
    Constants {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n1: usize,
        /// Base order (read from --base when given).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long)]
        base: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Vertex,
    Edge,
}

#[derive(Debug, Subcommand)]
pub enum CospectralCommand {
    /// Grow cospectral pairs by attaching a regular hypergraph to every vertex.
    Family {
        #[arg(long)]
        h0: PathBuf,
        #[arg(long)]
        g0: PathBuf,
        #[arg(long)]
        attach: PathBuf,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long)]
        m: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of the frozen theorem ids.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(THEOREM_IDS))]
    id: String,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    l1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long)]
    l2: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long)]
    include_paper_constants: bool,
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| {
        let code = if e.kind() == std::io::ErrorKind::NotFound { "FileNotFound" } else { "Io" };
        anyhow::Error::new(Coded {
            code,
            message: format!("{}: {e}", path.display()),
        })
    })
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    let text = read_text(path)?;
    Hypergraph::from_json_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_cells(path: &Path) -> Result<Vec<Vec<usize>>> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| {
        anyhow::Error::new(Coded {
            code: "Parse",
            message: format!("{}: expected a list of vertex lists: {e}", path.display()),
        })
    })
}

fn arity_of(h: &Hypergraph, given: Option<usize>) -> Result<usize> {
    given
        .or_else(|| h.uniformity())
        .or_else(|| h.declared_rank())
        .ok_or_else(|| anyhow::anyhow!("cannot infer the arity; pass --m"))
}

/// `n` files, or one file repeated `n` times.
fn read_members(paths: &[PathBuf], n: usize, what: &str) -> Result<Vec<Hypergraph>> {
    let hs = paths.iter().map(|p| read_hypergraph(p)).collect::<Result<Vec<_>>>()?;
    match hs.len() {
        1 => Ok(vec![hs[0].clone(); n]),
        k if k == n => Ok(hs),
        k => bail!(hyperspectra::Error::CountMismatch(format!("{k} member files for {n} {what}"))),
    }
}

fn hypergraph_output(h: &Hypergraph) -> Result<Output> {
    Ok(Output::json(h)?.with_table(hypergraph_table(h)))
}

/// Runs a parsed command; the flag is true when a check failed.
pub fn run(cli: Cli) -> Result<(Output, bool)> {
    if let Some(limit) = cli.max_enum {
        std::env::set_var(MAX_ENUM_ENV, limit.to_string());
    }
    match cli.command {
        Command::Gen { family, out } => {
            let h = generate(family)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, h.to_json_string() + "\n")
                        .with_context(|| format!("writing {}", path.display()))?;
                    Ok((Output::json(&json!({ "written": path, "n": h.n(), "edges": h.edge_count() }))?, false))
                }
                None => Ok((hypergraph_output(&h)?, false)),
            }
        }
        Command::Spectrum { input, exact, tol } => spectrum(&read_hypergraph(&input)?, exact, tol),
        Command::Charpoly { input } => {
            let h = read_hypergraph(&input)?;
            let f = charpoly_exact(&h.adjacency_matrix()?)?;
            let out = Output::json(&json!({ "coefficients": f, "polynomial": f.to_string() }))?
                .with_table(format!("{f}\n"));
            Ok((out, false))
        }
        Command::Partition {
            input,
            seed,
            orbits,
            cells,
        } => partition(&read_hypergraph(&input)?, seed, orbits, cells),
        Command::Join(args) => join(args),
        Command::Corona { kind } => corona(kind),
        Command::Switch { input, cells, d, m } => {
            let h = read_hypergraph(&input)?;
            let m = arity_of(&h, m)?;
            let rho = SwitchingPartition::new(&h, m, read_cells(&cells)?, d)?;
            let check = check_switching_partition(&h, m, &rho)?;
            if let Some(v) = check.violation {
                bail!(hyperspectra::Error::NotSwitchable(v));
            }
            let switched = gm_switch(&h, m, &rho)?;
            Ok((hypergraph_output(&switched)?, false))
        }
        Command::Cospectral {
            family,
            a,
            b,
            exact,
            numeric,
        } => match family {
            Some(CospectralCommand::Family {
                h0,
                g0,
                attach,
                depth,
                m,
            }) => {
                let (h0, g0, att) = (read_hypergraph(&h0)?, read_hypergraph(&g0)?, read_hypergraph(&attach)?);
                let m = arity_of(&h0, m)?;
                let pairs = corona_cospectral_family(&h0, &g0, &att, m, depth)?;
                let mut table = String::from("depth  order  certificate  status\n");
                for p in &pairs {
                    table.push_str(&format!(
                        "{:<6} {:<6} {:<12} {:?}\n",
                        p.depth,
                        p.h.n(),
                        format!("{:?}", p.certificate.mode).to_lowercase(),
                        p.status
                    ));
                }
                Ok((Output::json(&pairs)?.with_table(table), false))
            }
            None => {
                let (Some(a), Some(b)) = (a, b) else {
                    bail!(Coded {
                        code: "Usage",
                        message: "cospectral needs --a and --b, or the family subcommand".into(),
                    });
                };
                let mode = match (exact, numeric) {
                    (true, _) => CospectralMode::Exact,
                    (_, true) => CospectralMode::Numeric,
                    _ => CospectralMode::Auto,
                };
                let c = are_cospectral(&read_hypergraph(&a)?, &read_hypergraph(&b)?, mode)?;
                let table = format!("cospectral: {} ({:?})\n", c.cospectral, c.mode);
                Ok((Output::json(&c)?.with_table(table), !c.cospectral))
            }
        },
        Command::Verify(args) => {
            let params = VerifyParams {
                m: args.m,
                s: args.s,
                n: args.n,
                n1: args.n1,
                l1: args.l1,
                n2: args.n2,
                l2: args.l2,
                r: args.r,
                sizes: args.sizes,
                published_constants: args.include_paper_constants,
            };
            let report = hyperspectra::verify(&args.id, &params)?;
            let failed = report.verdict.is_failure();
            let table = verify_table(std::slice::from_ref(&report));
            Ok((Output::json(&report)?.with_table(table), failed))
        }
        Command::VerifyAll {
            only,
            include_paper_constants,
            report,
        } => {
            if let Some(ids) = &only {
                if let Some(bad) = ids.iter().find(|id| !THEOREM_IDS.contains(&id.as_str())) {
                    bail!(Coded {
                        code: "Usage",
                        message: format!("unknown theorem id {bad:?}"),
                    });
                }
            }
            let reports = hyperspectra::verify_all(only.as_deref(), include_paper_constants);
            let failed = reports.iter().any(|r| r.verdict.is_failure());
            let out = Output::json(&reports)?.with_table(verify_table(&reports));
            if let Some(path) = report {
                std::fs::write(&path, out.render(Format::Json))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok((out, failed))
        }
    }
}

fn generate(family: GenFamily) -> Result<Hypergraph> {
    let h = match family {
        GenFamily::CompleteUniform { m, n, w } => generators::complete_uniform(m, n, parse_rational(&w)?)?,
        GenFamily::Empty { m, n } => generators::empty_uniform(m, n),
        GenFamily::Multipartite { m, sizes, mode } => {
            let mode = match mode {
                Mode::Weak => PartiteMode::Weak,
                Mode::Strong => PartiteMode::Strong,
            };
            generators::complete_multipartite(m, &sizes, mode)?
        }
        GenFamily::LoosePath { m, s, n } => generators::loose_path(m, s, n)?,
        GenFamily::LooseCycle { m, s, n } => generators::loose_cycle(m, s, n)?,
        GenFamily::Path { n } => generators::path_graph(n)?,
        GenFamily::Cycle { n } => generators::cycle_graph(n)?,
        GenFamily::CompleteGraph { n, w } => generators::complete_graph(n, parse_rational(&w)?)?,
    };
    Ok(h)
}

fn spectrum(h: &Hypergraph, exact: bool, tol: f64) -> Result<(Output, bool)> {
    let a = h.adjacency_matrix()?;
    let report = if exact {
        let f = charpoly_exact(&a)?;
        SpectrumReport::from_values(&f.real_roots()?, SpectrumSource::ExactRoots, GROUP_TOL)
    } else {
        eig_sym(&a.to_real(), tol)?
    };
    Ok((Output::json(&report)?.with_table(spectrum_table(&report)), false))
}

#[derive(Serialize)]
struct PartitionOutput {
    cells: Vec<Vec<usize>>,
    equitable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<hyperspectra::partitions::Witness>,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    b: Option<Vec<Vec<String>>>,
}

fn partition(h: &Hypergraph, seed: Option<PathBuf>, orbits: bool, cells: Option<PathBuf>) -> Result<(Output, bool)> {
    let pi = if let Some(path) = cells {
        Partition::new(h.n(), read_cells(&path)?)?
    } else if orbits {
        orbit_partition(h)?
    } else {
        let seed = seed.map(|p| read_cells(&p).and_then(|c| Ok(Partition::new(h.n(), c)?))).transpose()?;
        coarsest_equitable_partition(h, seed.as_ref())?
    };
    let check = is_equitable(h, &pi)?;
    let b = if check.equitable {
        Some(quotient_matrix(h, &pi)?.b.to_strings())
    } else {
        None
    };
    let mut table = String::new();
    for (i, c) in pi.cells().iter().enumerate() {
        table.push_str(&format!("cell {}: {:?}\n", i + 1, c));
    }
    table.push_str(&format!("equitable: {}\n", check.equitable));
    if let Some(rows) = &b {
        for r in rows {
            table.push_str(&format!("  {}\n", r.join("  ")));
        }
    }
    let out = PartitionOutput {
        cells: pi.cells().to_vec(),
        equitable: check.equitable,
        witness: check.witness,
        b,
    };
    Ok((Output::json(&out)?.with_table(table), false))
}

fn parse_weights(spec: &[String]) -> Result<CardinalityWeights> {
    let mut out = BTreeMap::new();
    for item in spec {
        let (card, w) = item
            .split_once(':')
            .ok_or_else(|| anyhow::anyhow!("weight {item:?} is not of the form cardinality:weight"))?;
        let card: usize = card.trim().parse().with_context(|| format!("cardinality in {item:?}"))?;
        out.insert(card, parse_rational(w.trim())?);
    }
    Ok(out)
}

#[derive(Serialize)]
struct CheckLine {
    property: String,
    verdict: &'static str,
    detail: String,
}

fn check_line(property: &str, ok: bool, detail: String) -> CheckLine {
    CheckLine {
        property: property.to_string(),
        verdict: if ok { "PASS" } else { "FAIL" },
        detail,
    }
}

fn formula_checks(plan: &BackbonePlan, h: &Hypergraph) -> Result<Vec<CheckLine>> {
    let mut lines = Vec::new();
    let a = h.adjacency_matrix()?;
    let formula = block_formula_adjacency(plan)?;
    lines.push(check_line("block formula", formula == a, "entrywise exact".into()));

    let sizes = plan.sizes();
    let (mut compared, mut mismatches, mut skipped) = (0usize, 0usize, 0usize);
    for (e, t) in plan.backbone.edges().iter().zip(&plan.edge_weights) {
        let local: Vec<usize> = e.vertices().iter().map(|&j| sizes[j - 1]).collect();
        if local.iter().sum::<usize>() > MAX_ORACLE_VERTICES {
            skipped += 1;
            continue;
        }
        for &card in t.keys() {
            let k = local.len();
            let mut kinds: Vec<Coeff> = (1..=k).filter(|&p| local[p - 1] >= 2).map(Coeff::Pp).collect();
            for p in 1..=k {
                for q in p + 1..=k {
                    kinds.push(Coeff::Pq(p, q));
                }
            }
            for which in kinds {
                if k > card {
                    continue;
                }
                compared += 1;
                if join_coeff(&local, card, which)? != join_coeff_oracle(&local, card, which)? {
                    mismatches += 1;
                }
            }
        }
    }
    lines.push(check_line(
        "coefficient oracle",
        mismatches == 0,
        format!("{compared} compared, {mismatches} mismatches, {skipped} backbone edges above the oracle guard"),
    ));
    if plan.participants.iter().all(Hypergraph::is_regular) {
        let b = quotient_from_regular_join(plan)?;
        let ok = satisfies_quotient(&a, &plan.partition()?, &b);
        lines.push(check_line("quotient A P = P B", ok, format!("B = {:?}", b.to_strings())));
    }
    Ok(lines)
}

fn join(args: JoinArgs) -> Result<(Output, bool)> {
    let weights = args.weights.as_deref().map(parse_weights).transpose()?;
    let plan = if let Some(bpath) = &args.backbone {
        let backbone = read_hypergraph(bpath)?;
        let parts = args.participants.iter().map(|p| read_hypergraph(p)).collect::<Result<Vec<_>>>()?;
        match weights {
            Some(w) => {
                let per_edge = backbone
                    .edges()
                    .iter()
                    .map(|e| w.iter().map(|(&c, x)| (c, x * e.weight())).collect())
                    .collect();
                BackbonePlan::nonuniform(backbone, parts, per_edge)?
            }
            None => {
                let m = match args.m {
                    Some(m) => m,
                    None => arity_of(&parts[0], None)?,
                };
                BackbonePlan::uniform(backbone, parts, m)?
            }
        }
    } else {
        if args.members.is_empty() {
            bail!(Coded {
                code: "Usage",
                message: "join needs --members or --backbone with --participants".into(),
            });
        }
        let members = args.members.iter().map(|p| read_hypergraph(p)).collect::<Result<Vec<_>>>()?;
        let family = match weights {
            Some(w) => {
                let k = members.len();
                let total: usize = members.iter().map(Hypergraph::n).sum();
                if let Some(&bad) = w.keys().find(|&&c| c < k || c > total) {
                    bail!(hyperspectra::Error::BadCardinalitySet(format!(
                        "cardinality {bad} is outside {k}..={total}"
                    )));
                }
                JoinFamily::nonuniform(members, w)
            }
            None => {
                let m = match args.m {
                    Some(m) => m,
                    None => arity_of(&members[0], None)?,
                };
                JoinFamily::uniform(members, m, parse_rational(&args.ws)?)?
            }
        };
        family.to_plan()?
    };
    let h = join_on_backbone_nonuniform(&plan)?;
    if !args.check_formula {
        return Ok((hypergraph_output(&h)?, false));
    }
    let checks = formula_checks(&plan, &h)?;
    let failed = checks.iter().any(|c| c.verdict == "FAIL");
    let mut table = String::new();
    for c in &checks {
        table.push_str(&format!("{:<22} {}  {}\n", c.property, c.verdict, c.detail));
    }
    let out = Output::json(&json!({ "hypergraph": h, "checks": checks }))?.with_table(table);
    Ok((out, failed))
}

fn corona(cmd: CoronaCommand) -> Result<(Output, bool)> {
    match cmd {
        CoronaCommand::Vertex {
            base,
            members,
            p,
            m,
            spectrum,
        } => {
            let h0 = read_hypergraph(&base)?;
            let m = arity_of(&h0, m)?;
            if p == 0 || h0.n() % p != 0 {
                bail!(hyperspectra::Error::PartitionMismatch(format!(
                    "cell size {p} does not divide {} base vertices",
                    h0.n()
                )));
            }
            let k = h0.n() / p;
            let members = read_members(&members, k, "cells")?;
            let h = vertex_corona(&h0, k, p, &members, m)?;
            if !spectrum {
                return Ok((hypergraph_output(&h)?, false));
            }
            let constants = extract_vertex_constants(&h, &h0, p, &members)?;
            let s = vertex_corona_spectrum(&h0, k, p, &members, &constants)?;
            corona_report(&h, constants, s)
        }
        CoronaCommand::Edge {
            base,
            members,
            m,
            spectrum,
        } => {
            let h0 = read_hypergraph(&base)?;
            let members = read_members(&members, h0.edge_count(), "base edges")?;
            let m = match m {
                Some(m) => m,
                None => arity_of(&members[0], None)?,
            };
            let h = edge_corona(&h0, &members, m)?;
            if !spectrum {
                return Ok((hypergraph_output(&h)?, false));
            }
            let constants = extract_edge_constants(&h, &h0, &members, m)?;
            let s = edge_corona_spectrum(&h0, &members, &constants, m)?;
            corona_report(&h, constants, s)
        }
        CoronaCommand::Constants {
            kind,
            m,
            n1,
            n,
            p,
            base,
        } => {
            let base = base.map(|b| read_hypergraph(&b)).transpose()?;
            let n = match (&base, n) {
                (Some(h), _) => h.n(),
                (None, Some(n)) => n,
                (None, None) => bail!(Coded {
                    code: "Usage",
                    message: "pass --n or --base".into()
                }),
            };
            let (kind, g) = match kind {
                KindArg::Vertex => (CoronaKind::Vertex, CoronaGeometry::vertex(m, n, n1, p)),
                KindArg::Edge => {
                    let arity = base.as_ref().and_then(Hypergraph::uniformity).unwrap_or(m);
                    (CoronaKind::Edge, CoronaGeometry { base_arity: arity, ..CoronaGeometry::edge(m, n, n1) })
                }
            };
            let oracle = corona_constants_oracle(kind, g)?;
            let formula = corona_constants_formula(kind, g)?;
            let published = corona_constants_published(kind, g)?;
            let comparison = compare_constants(&oracle, &published);
            let mut table = String::from("constant  oracle        formula       published     agree\n");
            let f = hyperspectra::rational::format_rational;
            for (c, (fo, pu)) in comparison.iter().zip([
                (&formula.a, &published.a),
                (&formula.b, &published.b),
                (&formula.c, &published.c),
            ]) {
                let agree = if c.vacuous { "vacuous".to_string() } else { c.agree.to_string() };
                table.push_str(&format!("{:<9} {:<13} {:<13} {:<13} {}\n", c.name, f(&c.oracle), f(fo), f(pu), agree));
            }
            let out = Output::json(&json!({
                "geometry": g,
                "oracle": oracle,
                "formula": formula,
                "published": published,
                "comparison": comparison,
            }))?
            .with_table(table);
            Ok((out, false))
        }
    }
}

fn corona_report(
    h: &Hypergraph,
    constants: hyperspectra::corona::CoronaConstants,
    s: hyperspectra::spectra::CoronaSpectrum,
) -> Result<(Output, bool)> {
    let observed = hyperspectra::spectra::adjacency_eigenvalues(h)?;
    let dev = hyperspectra::spectra::max_deviation(&s.report.flat(), &observed).unwrap_or(f64::INFINITY);
    let pass = dev <= 1e-8;
    let table = format!(
        "branch {:?}, order {}, max deviation {dev:.3e}: {}\n{}",
        s.branch,
        h.n(),
        if pass { "PASS" } else { "FAIL" },
        spectrum_table(&s.report)
    );
    let out = Output::json(&json!({
        "hypergraph": h,
        "constants": constants,
        "predicted": s,
        "max_deviation": dev,
        "verdict": if pass { "PASS" } else { "FAIL" },
    }))?
    .with_table(table);
    Ok((out, !pass))
}
