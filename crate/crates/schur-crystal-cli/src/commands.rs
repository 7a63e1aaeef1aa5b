//! Subcommand wiring: every verification and export surface of the engine.
//!
//! Output is JSON lines on stdout unless `--format tsv` (tables) or
//! `--format dot` (graphs). Exit codes: 0 success / member / verified,
//! 1 negative membership or failed verification, 2 usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use schur_crystal::block_decomp::zigzag_quadruple;
use schur_crystal::kn_crystal::{kyoto_ground_check, psi, psi_inverse, KnWord, WordCrystal};
use schur_crystal::partitions::{OddModulus, Partition};
use schur_crystal::precrystal::{crystal_graph, to_dot, CrystalGraph, Precrystal};
use schur_crystal::registry::{verify_pt_equivalence, verify_set_equality, ClassSpec};
use schur_crystal::schur_construction::{to_templates, SchurMachine};
use schur_crystal::series_count::product_character;
use schur_crystal::sp_class::{enumerate_sp_by_size, enumerate_sp_window};
use schur_crystal::sp_crystal::{JunctionWindow, SpCrystal};

#[derive(Parser)]
#[command(
    name = "schur-crystal",
    version,
    about = "Partition classes, block bijections and crystal operators for Schur-type identities"
)]
pub struct Cli {
    /// Worker threads for verification sweeps (fallback: SCHUR_CRYSTAL_THREADS).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output format; graphs accept `dot`, everything else `jsonl` or `tsv`.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Jsonl)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Jsonl,
    Tsv,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Structure {
    Sp,
    Kn,
}

#[derive(Subcommand)]
pub enum Command {
    /// Per-size member counts of a class.
    Count {
        #[arg(long)]
        class: String,
        #[arg(long)]
        p: Option<u64>,
        /// Extra class parameters, e.g. `1,5` for t or `0,2,2` for a/b.
        #[arg(long)]
        params: Option<String>,
        #[arg(long = "max-n")]
        max_n: u64,
    },
    /// All members of one size, lexicographically decreasing.
    List {
        #[arg(long)]
        class: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        n: u64,
    },
    /// Membership of a single partition (exit 0 = member, 1 = not).
    Member {
        #[arg(long)]
        class: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        params: Option<String>,
        /// Comma-separated decreasing parts; empty string for the empty partition.
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
    /// Exact verification sweeps (exit 0 = verified, 1 = violation found).
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Crystal graph export.
    Graph {
        #[arg(long, value_enum)]
        structure: Structure,
        #[arg(long)]
        p: u64,
        /// Word length for the kn structure (default h).
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        depth: usize,
    },
    /// Forbidden-pattern templates for the insertion image class.
    Patterns {
        #[arg(long)]
        p: u64,
        /// List every instantiation and print the total count.
        #[arg(long)]
        expand: bool,
        /// Emit the full constructed window-complement set instead of the
        /// reduced presentation.
        #[arg(long)]
        raw: bool,
    },
    /// Counting series.
    Series {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        terms: usize,
        /// The principal character product over odd parts prime to p.
        #[arg(long)]
        product: bool,
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        params: Option<String>,
    },
}

#[derive(Subcommand)]
pub enum VerifyCmd {
    /// Per-size count agreement of two classes.
    Equinumerosity {
        #[arg(long)]
        a: String,
        #[arg(long, value_name = "PARAMS")]
        params_a: Option<String>,
        #[arg(long)]
        b: String,
        #[arg(long, value_name = "PARAMS")]
        params_b: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long = "max-n")]
        max_n: u64,
        /// Additionally require the classes to agree as sets.
        #[arg(long)]
        sets: bool,
    },
    /// BFS layers = class sets, one-box growth, pseudo-inverse operators,
    /// truncation stability and bracketing agreement.
    Crystal {
        #[arg(long)]
        p: u64,
        #[arg(long = "max-n")]
        max_n: u64,
    },
    /// The four zigzag replacement equivalences on adjacent block windows.
    Zigzag {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        j: u64,
        #[arg(long = "max-window")]
        max_window: u64,
    },
    /// Bijectivity and index-reversing intertwining of the word-to-window map.
    Psi {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        j: u64,
    },
    /// Ground-path layer counts against class counts.
    Kyoto {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        depth: usize,
    },
}

pub fn run(cli: Cli) -> ExitCode {
    let threads = cli.threads.or_else(|| {
        std::env::var("SCHUR_CRYSTAL_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(k) = threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(format: OutputFormat, value: serde_json::Value, tsv: &[String]) {
    match format {
        OutputFormat::Jsonl => println!("{value}"),
        OutputFormat::Tsv => println!("{}", tsv.join("\t")),
        OutputFormat::Dot => unreachable!("dot output is handled per command"),
    }
}

fn display(lam: &Partition) -> String {
    lam.to_string()
}

/// Partitions serialize to JSON as arrays of integers.
fn parts_json(lam: &Partition) -> serde_json::Value {
    serde_json::json!(lam.parts())
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    if format == OutputFormat::Dot && !matches!(cli.cmd, Command::Graph { .. }) {
        return Err("--format dot applies only to the graph command".into());
    }
    match cli.cmd {
        Command::Count {
            class,
            p,
            params,
            max_n,
        } => {
            let bound = ClassSpec::parse(&class, params.as_deref())
                .and_then(|c| c.bind(p))
                .map_err(|e| e.to_string())?;
            let counts = bound.counts_upto(max_n);
            for (n, c) in counts.iter().enumerate() {
                emit(
                    format,
                    json!({"class": bound.label(), "n": n, "count": c.to_string()}),
                    &[n.to_string(), c.to_string()],
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::List { class, p, params, n } => {
            let bound = ClassSpec::parse(&class, params.as_deref())
                .and_then(|c| c.bind(p))
                .map_err(|e| e.to_string())?;
            for lam in bound.enumerate(n) {
                emit(
                    format,
                    json!({"class": bound.label(), "n": n, "partition": parts_json(&lam)}),
                    &[display(&lam)],
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Member {
            class,
            p,
            params,
            partition,
        } => {
            let bound = ClassSpec::parse(&class, params.as_deref())
                .and_then(|c| c.bind(p))
                .map_err(|e| e.to_string())?;
            let lam: Partition = partition.parse().map_err(|e| format!("{e}"))?;
            let member = bound.contains(&lam);
            emit(
                format,
                json!({"class": bound.label(), "partition": parts_json(&lam), "member": member}),
                &[display(&lam), member.to_string()],
            );
            Ok(if member {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Verify { what } => verify(format, what),
        Command::Graph {
            structure,
            p,
            s,
            depth,
        } => graph(format, structure, p, s, depth),
        Command::Patterns { p, expand, raw } => patterns(format, p, expand, raw),
        Command::Series {
            p,
            terms,
            product,
            class,
            params,
        } => series(format, p, terms, product, class, params),
    }
}

fn verify(format: OutputFormat, what: VerifyCmd) -> Result<ExitCode, String> {
    match what {
        VerifyCmd::Equinumerosity {
            a,
            params_a,
            b,
            params_b,
            p,
            max_n,
            sets,
        } => {
            let ca = ClassSpec::parse(&a, params_a.as_deref())
                .and_then(|c| c.bind(p))
                .map_err(|e| e.to_string())?;
            let cb = ClassSpec::parse(&b, params_b.as_deref())
                .and_then(|c| c.bind(p))
                .map_err(|e| e.to_string())?;
            let report = verify_pt_equivalence(&ca, &cb, max_n);
            for n in 0..report.counts_a.len() {
                emit(
                    format,
                    json!({
                        "n": n,
                        "count_a": report.counts_a[n].to_string(),
                        "count_b": report.counts_b[n].to_string(),
                    }),
                    &[
                        n.to_string(),
                        report.counts_a[n].to_string(),
                        report.counts_b[n].to_string(),
                    ],
                );
            }
            let mut pass = report.pass();
            let mut set_witness = serde_json::Value::Null;
            if sets && pass {
                if let Some((lam, in_a, in_b)) = verify_set_equality(&ca, &cb, max_n) {
                    pass = false;
                    set_witness = json!({
                        "partition": parts_json(&lam), "in_a": in_a, "in_b": in_b
                    });
                }
            }
            emit(
                format,
                json!({
                    "class_a": report.class_a,
                    "class_b": report.class_b,
                    "max_n": report.max_n,
                    "verdict": if pass { "pass" } else { "fail" },
                    "first_mismatch": report.first_mismatch,
                    "witness_a": report.witness_a.iter().map(parts_json).collect::<Vec<_>>(),
                    "witness_b": report.witness_b.iter().map(parts_json).collect::<Vec<_>>(),
                    "set_witness": set_witness,
                }),
                &[
                    report.class_a.clone(),
                    report.class_b.clone(),
                    if pass { "pass".into() } else { "fail".into() },
                ],
            );
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        VerifyCmd::Crystal { p, max_n } => {
            let m = OddModulus::new(p).map_err(|e| e.to_string())?;
            let crystal = SpCrystal::new(m);
            let wide = SpCrystal::with_extra_blocks(m, 3);
            let graph = crystal_graph(&crystal, vec![Partition::empty()], max_n as usize);
            let expected = enumerate_sp_by_size(&m, max_n);
            let mut checks: Vec<(&str, bool)> = Vec::new();
            let mut layers_ok = graph.layers.len() == max_n as usize + 1;
            for (n, layer) in graph.layers.iter().enumerate() {
                let mut got: Vec<Partition> =
                    layer.iter().map(|&id| graph.nodes[id].clone()).collect();
                got.sort_unstable_by(|x, y| y.cmp(x));
                layers_ok &= got == expected[n];
            }
            checks.push(("layers_equal_class_sets", layers_ok));
            let mut one_box = true;
            let mut pseudo_inverse = true;
            let mut truncation = true;
            let mut bracketing = true;
            for lam in &graph.nodes {
                for i in 0..crystal.rank() {
                    one_box &= crystal.one_box_audit(lam, i);
                    let down = crystal.lower(lam, i);
                    if let Some(next) = &down {
                        pseudo_inverse &= crystal.raise(next, i).as_ref() == Some(lam);
                    }
                    if let Some(prev) = crystal.raise(lam, i) {
                        pseudo_inverse &= crystal.lower(&prev, i).as_ref() == Some(lam);
                    }
                    truncation &= down == wide.lower(lam, i)
                        && crystal.raise(lam, i) == wide.raise(lam, i);
                    bracketing &= crystal.bracketing_agreement(lam, i);
                }
            }
            checks.push(("one_box_growth", one_box));
            checks.push(("pseudo_inverse", pseudo_inverse));
            checks.push(("truncation_stability", truncation));
            checks.push(("bracketing_agreement", bracketing));
            let mut pass = true;
            for (name, ok) in checks {
                pass &= ok;
                emit(
                    format,
                    json!({"check": name, "p": p, "max_n": max_n, "pass": ok}),
                    &[name.into(), ok.to_string()],
                );
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        VerifyCmd::Zigzag { p, j, max_window } => {
            let m = OddModulus::new(p).map_err(|e| e.to_string())?;
            let (pl, ph) = (p as i64, m.h() as i64);
            let lower = enumerate_sp_window(&m, j as i64 * pl - ph, j as i64 * pl + ph);
            let upper = enumerate_sp_window(
                &m,
                (j as i64 + 1) * pl - ph,
                (j as i64 + 1) * pl + ph,
            );
            let mut pairs = 0u64;
            let mut pass = true;
            let mut witness = serde_json::Value::Null;
            for u in &upper {
                for v in &lower {
                    if u.size() + v.size() > max_window {
                        continue;
                    }
                    pairs += 1;
                    let q = zigzag_quadruple(u, v, &m, j).map_err(|e| e.to_string())?;
                    if !(q[0] == q[1] && q[1] == q[2] && q[2] == q[3]) {
                        pass = false;
                        if witness.is_null() {
                            witness = json!({
                                "upper": parts_json(u), "lower": parts_json(v), "memberships": q
                            });
                        }
                    }
                }
            }
            emit(
                format,
                json!({
                    "check": "zigzag_equivalences", "p": p, "j": j,
                    "pairs": pairs, "pass": pass, "witness": witness
                }),
                &["zigzag_equivalences".into(), pass.to_string()],
            );
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        VerifyCmd::Psi { p, j } => {
            let m = OddModulus::new(p).map_err(|e| e.to_string())?;
            let h = m.h();
            let wc = WordCrystal::new(h as u32, h as usize);
            let window = JunctionWindow { m, j };
            let words = wc.all_words();
            let mut images: Vec<Partition> = Vec::new();
            let mut pass = true;
            for w in &words {
                let lam = psi(&m, j, w).map_err(|e| e.to_string())?;
                pass &= psi_inverse(&m, j, &lam).as_ref() == Ok(w);
                images.push(lam);
            }
            images.sort_unstable();
            images.dedup();
            let mut target = enumerate_sp_window(
                &m,
                (j as i64 - 1) * p as i64 + 1,
                j as i64 * p as i64 - 1,
            );
            target.sort_unstable();
            let bijective = images == target && images.len() == words.len();
            pass &= bijective;
            let mut intertwine = true;
            for w in &words {
                let lam = psi(&m, j, w).unwrap();
                for i in 0..=h as usize {
                    let word_low = wc.lower(w, i).map(|x| psi(&m, j, &x).unwrap());
                    let window_low = window.lower(&lam, h as usize - i);
                    intertwine &= word_low == window_low;
                    let word_raise = wc.raise(w, i).map(|x| psi(&m, j, &x).unwrap());
                    let window_raise = window.raise(&lam, h as usize - i);
                    intertwine &= word_raise == window_raise;
                }
            }
            pass &= intertwine;
            emit(
                format,
                json!({
                    "check": "psi", "p": p, "j": j, "words": words.len(),
                    "bijective": bijective, "intertwining": intertwine, "pass": pass
                }),
                &["psi".into(), pass.to_string()],
            );
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        VerifyCmd::Kyoto { p, s, depth } => {
            let m = OddModulus::new(p).map_err(|e| e.to_string())?;
            let check = kyoto_ground_check(&m, s, depth);
            emit(
                format,
                json!({
                    "check": "kyoto_ground_path", "p": p, "s": s, "depth": depth,
                    "ground_balanced": check.ground_balanced,
                    "layer_counts": check.layer_counts,
                    "reference_counts": check.reference_counts,
                    "pass": check.pass
                }),
                &["kyoto_ground_path".into(), check.pass.to_string()],
            );
            Ok(if check.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn node_label(lam: &Partition) -> String {
    if lam.is_empty() {
        "∅".into()
    } else {
        display(lam)
    }
}

fn print_graph<E: Clone + Ord>(
    format: OutputFormat,
    graph: &CrystalGraph<E>,
    name: &str,
    label: impl Fn(&E) -> String,
) {
    match format {
        OutputFormat::Dot => print!("{}", to_dot(graph, name, label)),
        OutputFormat::Jsonl => {
            for (id, node) in graph.nodes.iter().enumerate() {
                println!("{}", json!({"node": id, "label": label(node)}));
            }
            for e in &graph.edges {
                println!("{}", json!({"from": e.from, "color": e.color, "to": e.to}));
            }
        }
        OutputFormat::Tsv => {
            for e in &graph.edges {
                println!("{}\t{}\t{}", label(&graph.nodes[e.from]), e.color, label(&graph.nodes[e.to]));
            }
        }
    }
}

fn graph(
    format: OutputFormat,
    structure: Structure,
    p: u64,
    s: Option<usize>,
    depth: usize,
) -> Result<ExitCode, String> {
    let m = OddModulus::new(p).map_err(|e| e.to_string())?;
    match structure {
        Structure::Sp => {
            let crystal = SpCrystal::new(m);
            let g = crystal_graph(&crystal, vec![Partition::empty()], depth);
            print_graph(format, &g, "sp_crystal", node_label);
        }
        Structure::Kn => {
            let s = s.unwrap_or(m.h() as usize);
            let wc = WordCrystal::new(m.h() as u32, s);
            let g = crystal_graph(&wc, wc.all_words(), depth);
            print_graph(format, &g, "kn_crystal", |w: &KnWord| w.to_string());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn patterns(format: OutputFormat, p: u64, expand: bool, raw: bool) -> Result<ExitCode, String> {
    let m = OddModulus::new(p).map_err(|e| e.to_string())?;
    let machine = SchurMachine::new(m);
    let sets = machine.forbidden_sets();
    let (set_name, templates) = if raw {
        ("raw", to_templates(&sets.raw))
    } else if let Some(curated) = sets.curated {
        ("curated", curated)
    } else {
        ("reduced", to_templates(&sets.reduced))
    };
    if expand {
        let mut total = 0u64;
        for t in &templates {
            for lam in t.expand() {
                total += 1;
                emit(
                    format,
                    json!({"set": set_name, "pattern": display(&lam)}),
                    &[display(&lam)],
                );
            }
        }
        emit(
            format,
            json!({"set": set_name, "count": total}),
            &[format!("count={total}")],
        );
    } else {
        for t in &templates {
            emit(
                format,
                json!({"set": set_name, "template": t.to_string()}),
                &[t.to_string()],
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn series(
    format: OutputFormat,
    p: Option<u64>,
    terms: usize,
    product: bool,
    class: Option<String>,
    params: Option<String>,
) -> Result<ExitCode, String> {
    let series = if product {
        let p = p.ok_or("--product requires --p")?;
        let m = OddModulus::new(p).map_err(|e| e.to_string())?;
        product_character(&m, terms)
    } else if let Some(class) = class {
        let bound = ClassSpec::parse(&class, params.as_deref())
            .and_then(|c| c.bind(p))
            .map_err(|e| e.to_string())?;
        bound.series(terms)
    } else {
        return Err("series needs --product or --class".into());
    };
    for n in 0..=series.truncation() {
        emit(
            format,
            json!({"n": n, "coefficient": series.coeff(n).to_string()}),
            &[n.to_string(), series.coeff(n).to_string()],
        );
    }
    Ok(ExitCode::SUCCESS)
}
