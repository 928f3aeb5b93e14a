use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use siltlab::braid::encode::{section_to_braid, section_to_silting};
use siltlab::braid::{normal_form, BraidWord};
use siltlab::orbit::{amiot_map_check, build_orbit, OrbitFunctor};
use siltlab::verify::{run_suite, VerifyOptions, SUB_SUITES, SUITES};
use siltlab::{
    DerivedCat, DerivedObject, Error, IntervalModule, MutationDirection, QuiverA, Section,
    SiltingCandidate,
};

#[derive(Parser)]
#[command(name = "silt-lab", version, about = "Silting objects, braids and cluster-tilting objects for type-A quivers")]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "dot")]
    json: bool,
    /// Emit Graphviz DOT where the command has a graph.
    #[arg(long, global = true)]
    dot: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for independent claims.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// The result lies below the input.
    Left,
    /// The result lies above the input.
    Right,
}

#[derive(Subcommand)]
enum Cmd {
    /// Auslander-Reiten quiver of mod kQ.
    ArQuiver {
        #[arg(long, default_value = "a3")]
        quiver: String,
    },
    /// Silting objects between A[n] and A.
    SiltInterval {
        #[arg(long, default_value = "a2")]
        quiver: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Base silting object A (default: the projectives).
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
    },
    /// Hasse quiver of the interval [A[n], A].
    Hasse {
        #[arg(long, default_value = "a2")]
        quiver: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        base: Option<String>,
    },
    /// Test an object for d-silting, or list the d-silting objects in [A[n], A].
    DSilting {
        #[arg(long, default_value = "a2")]
        quiver: String,
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        objects: Option<String>,
        /// Interval length when listing (default: d).
        #[arg(long)]
        n: Option<u32>,
    },
    /// Mutate a silting object at one summand.
    Mutate {
        #[arg(long, default_value = "a2")]
        quiver: String,
        #[arg(long, allow_hyphen_values = true)]
        objects: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value_t = Direction::Left)]
        direction: Direction,
    },
    /// Braid and silting object of a section given by its offsets.
    BraidEncode {
        #[arg(long, default_value = "a2")]
        quiver: String,
        /// Comma-separated offsets, one per vertex.
        #[arg(long, allow_hyphen_values = true)]
        section: String,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Garside normal form of a braid word such as "b1 b2 B1".
    BraidNf {
        word: String,
        /// Quiver whose vertices index the generators.
        #[arg(long, default_value = "a2")]
        diagram: String,
    },
    /// Cluster-tilting objects of an orbit category.
    Ctilt {
        #[arg(long, default_value = "a2")]
        quiver: String,
        /// nu<d>, a2root<d> or tau:<p>:<q>.
        #[arg(long, default_value = "nu2")]
        functor: String,
        /// Cluster-tilting degree (default: the Calabi-Yau dimension).
        #[arg(long)]
        d: Option<u32>,
    },
    /// Silting objects in the fundamental domain versus cluster-tilting objects.
    AmiotCheck {
        #[arg(long, default_value = "a2")]
        quiver: String,
        #[arg(long, default_value_t = 2)]
        d: u32,
    },
    /// Run a verification suite ("all" runs every suite).
    Verify {
        suite: String,
        /// Parameter of the folded-a2 suite.
        #[arg(long, default_value_t = 3)]
        d: u32,
    },
}

enum Outcome {
    Ok(String),
    /// Output was produced but a verification failed.
    Failed(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn json_out(v: serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON values serialize"))
}

fn derived(spec: &str) -> Result<DerivedCat, Error> {
    DerivedCat::new(&spec.parse()?)
}

/// One object: an `A_2` label such as `-2`, or `lo:hi` / `lo:hi:shift`.
fn parse_object(cat: &DerivedCat, s: &str) -> Result<DerivedObject, Error> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("cannot read object {s:?}; use a label or lo:hi[:shift]"));
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [label] => {
            let l: i64 = label.parse().map_err(|_| bad())?;
            cat.a2_object(l)
        }
        [lo, hi] | [lo, hi, _] => {
            let shift = if parts.len() == 3 { parts[2].parse().map_err(|_| bad())? } else { 0 };
            let m = IntervalModule::new(cat.quiver(), lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?)?;
            Ok(DerivedObject::new(m, shift))
        }
        _ => Err(bad()),
    }
}

fn parse_objects(cat: &DerivedCat, s: &str) -> Result<SiltingCandidate, Error> {
    let objs = s
        .split([',', '+'])
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_object(cat, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SiltingCandidate::new(objs))
}

fn base_object(cat: &DerivedCat, base: &Option<String>) -> Result<SiltingCandidate, Error> {
    let a = match base {
        Some(s) => parse_objects(cat, s)?,
        None => SiltingCandidate::new(cat.projective_slice()),
    };
    if !cat.is_silting(&a) {
        return Err(Error::NotSilting(cat.silting_name(&a)));
    }
    Ok(a)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let out = match &cli.cmd {
        Cmd::ArQuiver { quiver } => {
            let cat = derived(quiver)?;
            let ar = cat.ar_quiver();
            if cli.dot {
                ar.to_dot()
            } else if cli.json {
                json_out(serde_json::to_value(ar).expect("plain data"))
            } else {
                let mut s = format!("AR quiver of {}: {} indecomposables\n", cat.quiver(), ar.vertices.len());
                for (i, m) in ar.vertices.iter().enumerate() {
                    let succ: Vec<String> = ar
                        .arrows
                        .iter()
                        .filter(|a| a.0 == i)
                        .map(|a| ar.vertices[a.1].to_string())
                        .collect();
                    let tau = ar.translate[i].map_or("projective".to_string(), |j| format!("τ = {}", ar.vertices[j]));
                    s.push_str(&format!("{m}  ({tau})  -> {}\n", succ.join(", ")));
                }
                s
            }
        }
        Cmd::SiltInterval { quiver, n, base } => {
            let cat = derived(quiver)?;
            let a = base_object(&cat, base)?;
            let nodes = cat.enumerate_interval(&a, *n)?;
            if cli.dot {
                cat.hasse_dot(&cat.hasse(&nodes))
            } else if cli.json {
                json_out(json!(nodes.iter().map(|p| cat.silting_records(p)).collect::<Vec<_>>()))
            } else {
                let mut s = format!(
                    "{} silting objects in [A[{n}], A], A = {}\n",
                    nodes.len(),
                    cat.silting_name(&a)
                );
                for p in &nodes {
                    s.push_str(&format!("{}  (level {})\n", cat.silting_name(p), cat.silting_level(p)?));
                }
                s
            }
        }
        Cmd::Hasse { quiver, n, base } => {
            let cat = derived(quiver)?;
            let a = base_object(&cat, base)?;
            let h = cat.hasse(&cat.enumerate_interval(&a, *n)?);
            if cli.json {
                json_out(cat.hasse_json(&h))
            } else if cli.dot {
                cat.hasse_dot(&h)
            } else {
                let mut s = format!("{} nodes, {} covers\n", h.nodes.len(), h.arrows.len());
                for &(i, j) in &h.arrows {
                    s.push_str(&format!(
                        "{} > {}\n",
                        cat.silting_name(&h.nodes[i]),
                        cat.silting_name(&h.nodes[j])
                    ));
                }
                s
            }
        }
        Cmd::DSilting { quiver, d, objects, n } => {
            let cat = derived(quiver)?;
            match objects {
                Some(objs) => {
                    let p = parse_objects(&cat, objs)?;
                    let yes = cat.is_d_silting(&p, *d)?;
                    let level = cat.silting_level(&p)?;
                    if cli.json {
                        json_out(json!({ "object": cat.silting_records(&p), "d": d, "d_silting": yes, "level": level }))
                    } else {
                        format!("{} is {}{d}-silting (least d: {level})\n", cat.silting_name(&p), if yes { "" } else { "not " })
                    }
                }
                None => {
                    let a = SiltingCandidate::new(cat.projective_slice());
                    let mut found = Vec::new();
                    for p in cat.enumerate_interval(&a, n.unwrap_or(*d))? {
                        if cat.is_d_silting(&p, *d)? {
                            found.push(p);
                        }
                    }
                    if cli.json {
                        json_out(json!(found.iter().map(|p| cat.silting_records(p)).collect::<Vec<_>>()))
                    } else {
                        let mut s = format!("{} {d}-silting objects in [A[{}], A]\n", found.len(), n.unwrap_or(*d));
                        for p in &found {
                            s.push_str(&format!("{}\n", cat.silting_name(p)));
                        }
                        s
                    }
                }
            }
        }
        Cmd::Mutate { quiver, objects, at, direction } => {
            let cat = derived(quiver)?;
            let t = parse_objects(&cat, objects)?;
            let x = parse_object(&cat, at)?;
            let dir = match direction {
                Direction::Left => MutationDirection::Left,
                Direction::Right => MutationDirection::Right,
            };
            let m = cat.mutate(&t, x, dir)?;
            if cli.json {
                json_out(json!(cat.silting_records(&m)))
            } else {
                format!("{}\n", cat.silting_name(&m))
            }
        }
        Cmd::BraidEncode { quiver, section, depth } => {
            let cat = derived(quiver)?;
            let offsets = section
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Error::InvalidArgument(format!("cannot read offsets {section:?}")))?;
            let s = Section::new(cat.quiver(), offsets)?;
            let b = section_to_braid(cat.quiver(), &s, *depth)?;
            let p = section_to_silting(&cat, &s)?;
            if cli.json {
                json_out(json!({ "section": s, "braid": b, "silting": cat.silting_records(&p) }))
            } else {
                format!("F({s}) = {b}\nsilting object: {}\n", cat.silting_name(&p))
            }
        }
        Cmd::BraidNf { word, diagram } => {
            let q: QuiverA = diagram.parse()?;
            let b = normal_form(&BraidWord::parse(q.n(), word)?);
            if cli.json {
                json_out(json!({ "word": word, "normal_form": b, "positive": b.is_positive() }))
            } else {
                format!("{b}\n")
            }
        }
        Cmd::Ctilt { quiver, functor, d } => {
            let f = OrbitFunctor::parse(functor)?;
            let c = build_orbit(&quiver.parse()?, f)?;
            let d = match d {
                Some(d) => *d,
                None => c
                    .cy_dim()
                    .and_then(|c| u32::try_from(c).ok())
                    .ok_or_else(|| Error::InvalidArgument("no Calabi-Yau dimension; pass --d".into()))?,
            };
            let sets = c.enumerate_ctilt(d)?;
            if cli.dot {
                c.exchange_dot(&sets)
            } else if cli.json {
                json_out(json!({
                    "category": c.name(),
                    "ind_count": c.len(),
                    "d": d,
                    "objects": c.records(&(0..c.len()).collect::<Vec<_>>()),
                    "ctilt": sets.iter().map(|u| c.records(u)).collect::<Vec<_>>(),
                    "notes": c.notes(),
                }))
            } else {
                let mut s = format!(
                    "{}: {} indecomposables, {} {d}-cluster-tilting objects\n",
                    c.name(),
                    c.len(),
                    sets.len()
                );
                for u in &sets {
                    s.push_str(&format!("{}\n", c.names(u).join(" ⊕ ")));
                }
                for note in c.notes() {
                    s.push_str(&format!("note: {note}\n"));
                }
                s
            }
        }
        Cmd::AmiotCheck { quiver, d } => {
            let r = amiot_map_check(&quiver.parse()?, *d)?;
            let text = if cli.json {
                json_out(r.to_json())
            } else {
                let mut s = format!(
                    "{}: {} indecomposables, {} silting objects in F, {} cluster-tilting objects, bijection: {}\n",
                    r.category,
                    r.ind_count,
                    r.silt_in_f.len(),
                    r.ctilt.len(),
                    r.bijection
                );
                for c in &r.counterexamples {
                    s.push_str(&format!("counterexample: {c}\n"));
                }
                s
            };
            if !r.bijection {
                return Ok(Outcome::Failed(text));
            }
            text
        }
        Cmd::Verify { suite, d } => {
            if !suite.eq("all") && !SUITES.contains(&suite.as_str()) && !SUB_SUITES.contains(&suite.as_str()) {
                return Err(Error::UnknownSuite(format!(
                    "{suite} (known: all, {}, {})",
                    SUITES.join(", "),
                    SUB_SUITES.join(", ")
                )));
            }
            let opts = VerifyOptions {
                seed: cli.seed,
                d: *d,
                jobs: cli.jobs.max(1),
            };
            let report = run_suite(suite, &opts)?;
            eprintln!("wall time: {} ms", report.wall_time_ms);
            let text = if cli.json {
                json_out(serde_json::to_value(&report).expect("plain data"))
            } else {
                report.to_text()
            };
            if !report.passed() {
                return Ok(Outcome::Failed(text));
            }
            text
        }
    };
    Ok(Outcome::Ok(out))
}
