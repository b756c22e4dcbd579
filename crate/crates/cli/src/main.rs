use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coxart_core::artin_parabolic::{conjecture_reduce, intersect_parabolic_kappa, verify_certificate};
use coxart_core::cosets::{classify_dihedral, double_decompose, left_decompose};
use coxart_core::reflections::{masked_sequence, n_set, reflection_sequence};
use coxart_core::retraction::retract_star;
use coxart_core::verify::{self, Suite, VerifyConfig};
use coxart_core::{ArtinWord, CoxElement, Coxeter, CoxeterGraph, SimpleWord, Vertex};
use serde_json::{json, Value};

mod render;

#[derive(Parser)]
#[command(name = "coxart", version, about = "Coxeter and Artin-Tits group computations")]
struct Cli {
    /// Graph file.
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest braid-move orbit explored before giving up.
    #[arg(long, global = true, default_value_t = coxart_core::coxeter::DEFAULT_MAX_ORBIT)]
    max_orbit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a word by the orbit scan.
    Reduce { word: String },
    /// Canonical (shortlex least) reduced word.
    Canon { word: String },
    /// Whether two words give the same element.
    Equal { first: String, second: String },
    /// Length of the element.
    Length { word: String },
    /// Reflections occurring an odd number of times in the reflection sequence.
    Nset { word: String },
    /// The reflection sequence, optionally flagged by membership in W_X.
    Rseq {
        word: String,
        #[arg(long)]
        x: Option<String>,
    },
    /// Coset decomposition over X, or double coset over X and Y.
    Decompose {
        word: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: Option<String>,
    },
    /// Retract an Artin word onto the parabolic subgroup on X.
    Retract {
        word: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        trace: bool,
    },
    /// Shape of w W_{i,j} w^-1 intersected with W_X.
    Classify {
        #[arg(long)]
        w: String,
        #[arg(long)]
        pair: String,
        #[arg(long)]
        x: String,
    },
    /// Certificate for the intersection of a conjugated parabolic with A_X.
    Intersect {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        w: String,
    },
    /// One reduction step towards the colored form.
    Conjreduce {
        word: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Run the seeded verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] coxart_core::Error),
    #[error("cannot read `{0}`: {1}")]
    Io(PathBuf, std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed")]
    VerificationFailed,
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io(..) => "IoError",
            CliError::Usage(_) => "UsageError",
            CliError::VerificationFailed => "VerificationFailed",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed | CliError::Core(coxart_core::Error::AssertionFailure(_)) => 1,
            _ => 2,
        }
    }
}

struct Output {
    text: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err((e, partial)) => {
            if let Some(out) = partial {
                if cli.json {
                    println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
                } else {
                    print!("{}", out.text);
                }
            }
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_graph(cli: &Cli) -> Result<Option<CoxeterGraph>, CliError> {
    let Some(path) = &cli.graph else {
        return Ok(None);
    };
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
    Ok(Some(CoxeterGraph::parse(&text)?))
}

fn single_vertex(g: &CoxeterGraph, name: &str) -> Result<Vertex, CliError> {
    Ok(g.vertex(name.trim())?)
}

type RunResult = Result<Output, (CliError, Option<Output>)>;

fn run(cli: &Cli) -> RunResult {
    let graph = load_graph(cli).map_err(|e| (e, None))?;
    if let Command::Verify { suite, seed } = &cli.command {
        return run_verify(cli, graph, suite, *seed);
    }
    let g = graph.ok_or_else(|| (CliError::Usage("--graph is required".into()), None))?;
    let cx = Coxeter::new(g).with_max_orbit(cli.max_orbit);
    command(cli, &cx).map_err(|e| (e, None))
}

fn run_verify(cli: &Cli, graph: Option<CoxeterGraph>, suite: &str, seed: u64) -> RunResult {
    let suites = Suite::parse_list(suite)
        .ok_or_else(|| (CliError::Usage(format!("unknown suite `{suite}`")), None))?;
    let config = VerifyConfig {
        seed,
        max_orbit: cli.max_orbit,
        extra_graph: graph,
        ..VerifyConfig::default()
    };
    let report = verify::run(&suites, &config).map_err(|e| (e.into(), None))?;
    let out = Output {
        text: format!("{report}\n"),
        json: render::report_json(&report),
    };
    if report.passed() {
        Ok(out)
    } else {
        Err((CliError::VerificationFailed, Some(out)))
    }
}

fn command(cli: &Cli, cx: &Coxeter) -> Result<Output, CliError> {
    let g = cx.graph();
    let simple = |s: &str| SimpleWord::parse(g, s);
    let element = |s: &str| -> Result<CoxElement, CliError> { Ok(cx.canonicalize(&simple(s)?)?) };
    let subset = |s: &str| g.parse_subset(s);
    let out = match &cli.command {
        Command::Reduce { word } => {
            let r = cx.reduce(&simple(word)?)?;
            Output {
                text: format!("{}\n", render::word(g, &r)),
                json: render::word_json(g, &r),
            }
        }
        Command::Canon { word } => {
            let c = element(word)?;
            Output {
                text: format!("{}\n", render::word(g, c.word())),
                json: render::word_json(g, c.word()),
            }
        }
        Command::Equal { first, second } => {
            let same = cx.equal(&simple(first)?, &simple(second)?)?;
            Output {
                text: format!("{same}\n"),
                json: json!(same),
            }
        }
        Command::Length { word } => {
            let l = cx.length_of(&simple(word)?)?;
            Output {
                text: format!("{l}\n"),
                json: json!(l),
            }
        }
        Command::Nset { word } => {
            let n = n_set(cx, &simple(word)?)?;
            let words: Vec<String> = n.iter().map(|x| render::word(g, x.word())).collect();
            Output {
                text: format!("{{{}}}\n", words.join(", ")),
                json: Value::Array(n.iter().map(|x| render::word_json(g, x.word())).collect()),
            }
        }
        Command::Rseq { word, x } => {
            let w = simple(word)?;
            let seq = match x {
                Some(x) => masked_sequence(cx, &w, subset(x)?)?,
                None => reflection_sequence(cx, &w)?,
            };
            Output {
                text: render::sequence_text(g, &seq),
                json: render::sequence_json(g, &seq),
            }
        }
        Command::Decompose { word, x, y } => {
            let u = element(word)?;
            let x = subset(x)?;
            match y {
                None => {
                    let d = left_decompose(cx, &u, x)?;
                    Output {
                        text: format!("v = {}\nw = {}\n", render::word(g, d.v.word()), render::word(g, d.w.word())),
                        json: json!({ "v": render::word_json(g, d.v.word()), "w": render::word_json(g, d.w.word()) }),
                    }
                }
                Some(y) => {
                    let d = double_decompose(cx, &u, x, subset(y)?)?;
                    Output {
                        text: format!(
                            "w1 = {}\nw2 = {}\nw2p = {}\n",
                            render::word(g, d.w1.word()),
                            render::word(g, d.w2.word()),
                            render::word(g, d.w2p.word())
                        ),
                        json: json!({
                            "w1": render::word_json(g, d.w1.word()),
                            "w2": render::word_json(g, d.w2.word()),
                            "w2p": render::word_json(g, d.w2p.word()),
                        }),
                    }
                }
            }
        }
        Command::Retract { word, x, trace } => {
            let w = ArtinWord::parse(g, word)?;
            let (r, t) = retract_star(cx, &w, subset(x)?)?;
            let mut text = format!("{}\n", render::artin(g, &r));
            let mut json = json!({ "word": render::artin_json(g, &r) });
            if *trace {
                let steps = render::trace_json(g, &t);
                text.push_str(&format!("{steps}\n"));
                json["trace"] = steps;
            }
            Output { text, json }
        }
        Command::Classify { w, pair, x } => {
            let (i, j) = pair
                .split_once(',')
                .ok_or_else(|| CliError::Usage(format!("--pair expects `i,j`, got `{pair}`")))?;
            let c = classify_dihedral(cx, &element(w)?, single_vertex(g, i)?, single_vertex(g, j)?, subset(x)?)?;
            Output {
                text: format!("{}\n", render::class_text(g, &c)),
                json: render::class_json(g, &c),
            }
        }
        Command::Intersect { x, y, w } => {
            let cert = intersect_parabolic_kappa(cx, subset(x)?, subset(y)?, &element(w)?)?;
            verify_certificate(cx, &cert)?;
            let json = render::certificate_json(g, &cert);
            Output {
                text: format!("{}\n", serde_json::to_string_pretty(&json).expect("values serialize")),
                json,
            }
        }
        Command::Conjreduce { word, x, y } => {
            let omega = ArtinWord::parse(g, word)?;
            let r = conjecture_reduce(cx, subset(x)?, subset(y)?, &omega)?;
            Output {
                text: render::reduction_text(g, &r),
                json: render::reduction_json(g, &r),
            }
        }
        Command::Verify { .. } => unreachable!("handled before the graph is required"),
    };
    Ok(out)
}

