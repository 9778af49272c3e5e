//! Subcommand dispatch. Every command prints one JSON document on stdout;
//! decision commands exit with 0 for yes and 1 for no, and any usage, parse
//! or scale error exits with 2.

use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tcluster::completion::complete;
use tcluster::fpt::min_edit_distance;
use tcluster::oracle::{etc_bruteforce, gen_planted, gen_random, reduce_tm_to_etc, OracleCaps, TmInstance};
use tcluster::path_dp::{solve_path_graph, PathInstance};
use tcluster::temporal::is_temporal_clique;
use tcluster::{
    is_cluster_temporal_graph, saturated_partition, subset_characterisation_check, ModificationSet, Params,
    TemporalGraph, TimeEdge, VertexId,
};

use crate::format::{parse_tg, serialise_tg};

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "tcluster", version, about = "Cluster editing for temporal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Density window: each pair of a cluster appears in every window of this length.
    #[arg(long)]
    d1: u32,
    /// Separation between clusters sharing a vertex.
    #[arg(long)]
    d2: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<Params, String> {
        Params::new(self.d1, self.d2).map_err(|e| e.to_string())
    }
}

/// `n,T,k` limits for the exhaustive oracle.
#[derive(Clone, Copy, Debug)]
struct Caps(usize, u32, usize);

impl FromStr for Caps {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        let [n, t, k] = parts.as_slice() else {
            return Err("expected n,T,k".into());
        };
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("`{x}` is not a number"));
        Ok(Caps(num(n)?, num(t)? as u32, num(k)?))
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    PathDp,
    Fpt,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Model {
    Random,
    Planted,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the graph is a cluster temporal graph.
    Recognize {
        #[command(flatten)]
        params: ParamArgs,
        /// Input `.tg` file, `-` for stdin.
        file: PathBuf,
    },
    /// Print the saturated partition of the time-edges.
    Partition {
        /// When given, each block also reports whether it is a clique.
        #[arg(long)]
        d1: Option<u32>,
        #[arg(long)]
        d2: u32,
        file: PathBuf,
    },
    /// Minimum completion by additions only.
    Complete {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        budget: Option<usize>,
        file: PathBuf,
    },
    /// Minimum editing by additions and deletions.
    Edit {
        #[arg(long, value_enum)]
        algo: Algo,
        #[command(flatten)]
        params: ParamArgs,
        /// Required for `fpt` and `oracle`.
        #[arg(long)]
        budget: Option<usize>,
        /// Worker threads for the oracle.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Oracle limits as `n,T,k`.
        #[arg(long)]
        caps: Option<Caps>,
        file: PathBuf,
    },
    /// Reduce temporal matching on a path to editing.
    ReduceTm {
        /// Matching independence distance.
        #[arg(long, default_value_t = 2)]
        delta: u32,
        /// Target matching size.
        #[arg(long)]
        k: usize,
        file: PathBuf,
    },
    /// Generate a random instance.
    Gen {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long)]
        n: usize,
        #[arg(long = "lifetime")]
        lifetime: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0.5)]
        time_prob: f64,
        /// Planted model only.
        #[arg(long, default_value_t = 1)]
        d1: u32,
        #[arg(long, default_value_t = 2)]
        d2: u32,
        /// Random toggles applied to the planted graph.
        #[arg(long, default_value_t = 0)]
        perturbations: usize,
        /// Also write the graph to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_graph(path: &PathBuf) -> Result<TemporalGraph, String> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"))?
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    parse_tg(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn answer(yes: bool) -> &'static str {
    if yes {
        "yes"
    } else {
        "no"
    }
}

/// Labels of `vs`, sorted.
fn labels(g: &TemporalGraph, vs: &[VertexId]) -> Value {
    let mut names: Vec<&str> = vs.iter().map(|&v| g.label(v)).collect();
    names.sort_unstable();
    names.into_iter().collect()
}

fn time_edge(g: &TemporalGraph, e: &TimeEdge) -> Value {
    json!({"u": g.label(e.u), "v": g.label(e.v), "t": e.t})
}

fn modifications(g: &TemporalGraph, mods: &ModificationSet) -> Value {
    mods.iter()
        .map(|m| json!({"op": m.op.as_str(), "u": g.label(m.edge.u), "v": g.label(m.edge.v), "t": m.edge.t}))
        .collect()
}

/// A document and whether it reports a decision (`Some(answer)`).
type Report = (Value, Option<bool>);

fn execute(command: Command) -> Result<Report, String> {
    match command {
        Command::Recognize { params, file } => {
            let p = params.params()?;
            let g = read_graph(&file)?;
            let yes = is_cluster_temporal_graph(&g, p);
            let mut doc = json!({"answer": answer(yes)});
            if !yes {
                let (_, violator) = subset_characterisation_check(&g, p);
                doc["violating_subset"] = violator.map_or(Value::Null, |w| labels(&g, &w));
            }
            Ok((doc, Some(yes)))
        }
        Command::Partition { d1, d2, file } => {
            if let Some(d1) = d1 {
                Params::new(d1, d2).map_err(|e| e.to_string())?;
            } else if d2 == 0 {
                return Err("--d2 must be positive".into());
            }
            let g = read_graph(&file)?;
            let partition = saturated_partition(&g, d2);
            let blocks: Vec<Value> = partition
                .blocks
                .iter()
                .map(|b| {
                    let mut v = json!({
                        "vertices": labels(&g, &b.template.vertices),
                        "interval": [b.template.interval.a, b.template.interval.b],
                        "time_edges": b.edges.iter().map(|e| time_edge(&g, e)).collect::<Value>(),
                    });
                    if let Some(d1) = d1 {
                        v["clique"] = json!(is_temporal_clique(&b.edges, d1).unwrap_or(false));
                    }
                    v
                })
                .collect();
            Ok((json!({"blocks": blocks}), None))
        }
        Command::Complete { params, budget, file } => {
            let p = params.params()?;
            let g = read_graph(&file)?;
            let r = complete(&g, p);
            let mut doc = json!({
                "min_additions": r.min_additions,
                "modifications": modifications(&g, &r.additions),
            });
            let decision = budget.map(|k| r.decide(k));
            if let Some(yes) = decision {
                doc["answer"] = json!(answer(yes));
            }
            Ok((doc, decision))
        }
        Command::Edit {
            algo,
            params,
            budget,
            threads,
            caps,
            file,
        } => {
            let p = params.params()?;
            let g = read_graph(&file)?;
            match algo {
                Algo::PathDp => {
                    let s = solve_path_graph(&g, p, None, budget.unwrap_or(0)).map_err(|e| e.to_string())?;
                    let mut doc = json!({
                        "algo": "path-dp",
                        "min_cost": s.min_cost,
                        "modifications": modifications(&g, &s.witness),
                    });
                    let decision = budget.map(|_| s.decision);
                    if let Some(yes) = decision {
                        doc["answer"] = json!(answer(yes));
                    }
                    Ok((doc, decision))
                }
                Algo::Fpt => {
                    let k = budget.ok_or("--budget is required for --algo fpt")?;
                    let found = min_edit_distance(&g, p, k);
                    let doc = json!({
                        "algo": "fpt",
                        "answer": answer(found.is_some()),
                        "min_cost": found.as_ref().map(|(c, _)| *c),
                        "modifications": found.as_ref().map_or(json!([]), |(_, w)| modifications(&g, w)),
                    });
                    Ok((doc, Some(found.is_some())))
                }
                Algo::Oracle => {
                    let k = budget.ok_or("--budget is required for --algo oracle")?;
                    let mut limits = OracleCaps {
                        threads: threads.max(1),
                        ..OracleCaps::default()
                    };
                    if let Some(Caps(n, t, kk)) = caps {
                        limits = OracleCaps {
                            max_vertices: n,
                            max_lifetime: t,
                            max_budget: kk,
                            ..limits
                        };
                    }
                    let out = etc_bruteforce(&g, p, k, limits).map_err(|e| e.to_string())?;
                    let doc = json!({
                        "algo": "oracle",
                        "answer": answer(out.decision),
                        "min_cost": out.witness.as_ref().map(ModificationSet::len),
                        "modifications": out.witness.as_ref().map_or(json!([]), |w| modifications(&g, w)),
                    });
                    Ok((doc, Some(out.decision)))
                }
            }
        }
        Command::ReduceTm { delta, k, file } => {
            let g = read_graph(&file)?;
            let (path, order) =
                PathInstance::from_graph(&g, None, Params::new(1, 2).expect("valid")).map_err(|e| e.to_string())?;
            let inst = TmInstance {
                edge_times: (1..path.vertex_count()).map(|i| path.edge_times(i).to_vec()).collect(),
                delta,
                k,
            };
            let r = reduce_tm_to_etc(&inst).map_err(|e| e.to_string())?;
            // carry the input labels over, in path order
            let names: Vec<&str> = order.iter().map(|&v| g.label(v)).collect();
            let mut out = TemporalGraph::with_labels(&names);
            for e in r.graph.time_edges() {
                out.insert(e).map_err(|e| e.to_string())?;
            }
            let mut doc = json!({
                "graph": serialise_tg(&out),
                "d1": r.params.delta1(),
                "d2": r.params.delta2(),
                "budget": r.budget,
            });
            if let Some(w) = r.warning {
                doc["warning"] = json!(w);
            }
            Ok((doc, None))
        }
        Command::Gen {
            model,
            n,
            lifetime,
            seed,
            edge_prob,
            time_prob,
            d1,
            d2,
            perturbations,
            out,
        } => {
            let (g, name) = match model {
                Model::Random => (gen_random(n, lifetime, edge_prob, time_prob, seed), "random"),
                Model::Planted => {
                    let p = Params::new(d1, d2).map_err(|e| e.to_string())?;
                    (gen_planted(n, lifetime, p, seed, perturbations), "planted")
                }
            };
            let text = serialise_tg(&g.map_err(|e| e.to_string())?);
            if let Some(path) = out {
                std::fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok((json!({"model": name, "seed": seed, "graph": text}), None))
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout: stdout.trim_end().to_owned(),
                stderr: stderr.trim_end().to_owned(),
            };
        }
    };
    match execute(cli.command) {
        Ok((doc, decision)) => Outcome {
            code: match decision {
                Some(false) => 1,
                _ => 0,
            },
            stdout: doc.to_string(),
            stderr: String::new(),
        },
        Err(msg) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}"),
        },
    }
}
