//! `lieconf`: words, bases, pairings and pairing matrices for free Lie
//! algebras from the command line.
//!
//! Exit codes: 0 success, 1 a verification suite failed, 2 bad usage or
//! unparsable input, 3 pairing methods disagreed.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lie_config::basis::suites::{self, Suite, SuiteOptions, MAX_N_CAP};
use lie_config::basis::{expand_config, load_fixture, BasisFamily, Column, MatrixStyle, PairingMatrix, RowSource};
use lie_config::coalg::{as_long_graph, config_graph, Graph};
use lie_config::lie::{classical_bracketing, config_bracketing, LieElement, Tree};
use lie_config::pairing::{bar_coefficient, pair, pair_recursive};
use lie_config::words::{fine_witt_count, witt_count, Alphabet, MultiDegree, Word, WordFilter, WordSet};

#[derive(Parser)]
#[command(name = "lieconf", version, about = "Configuration bases of free Lie algebras")]
struct Cli {
    /// Comma-separated letters, smallest first.
    #[arg(long, global = true, default_value = "x,y,z")]
    alphabet: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of a graded piece of the free Lie algebra.
    Count(Filter),
    /// List basis words in canonical order.
    Words {
        #[arg(long, value_enum, default_value_t = SetArg::Lyndon)]
        set: SetArg,
        #[command(flatten)]
        filter: Filter,
    },
    /// Apply a bracketing map or the graph map to one word.
    Basis {
        #[arg(long, value_enum)]
        map: MapArg,
        #[arg(long, value_enum, default_value_t = SetArg::Lyndon)]
        set: SetArg,
        word: String,
    },
    /// Pair a bar word or a graph with a bracket expression.
    Pair {
        /// A bar word such as `x|y|z`, inline graph JSON, or a path to a
        /// graph JSON file.
        #[arg(long)]
        left: String,
        /// A bracket expression such as `[[x,y],z]`.
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Coefficients of a bracket expression in a configuration basis.
    Expand {
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum, default_value_t = ExpandBasis::Config)]
        basis: ExpandBasis,
    },
    /// Print a pairing matrix.
    Matrix {
        #[arg(long, value_delimiter = ',', required = true)]
        multidegree: Vec<usize>,
        #[arg(long, value_enum, default_value_t = RowArg::Bar)]
        rows: RowArg,
        /// Word set indexing the rows and generated columns.
        #[arg(long, value_enum, default_value_t = SetArg::Lyndon)]
        set: SetArg,
        /// `config`, `classical`, `none`, or `fixture:NAME`.
        #[arg(long, default_value = "config")]
        cols: String,
        /// Extra column, appended after the family; repeatable.
        #[arg(long = "tree")]
        trees: Vec<String>,
        /// Explicit comma-separated word order for rows and family columns.
        #[arg(long, value_delimiter = ',')]
        order: Vec<String>,
        #[arg(long, value_enum, default_value_t = StyleArg::Plain)]
        style: StyleArg,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Largest total degree to check.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
        /// Also recompute every pairing by all methods.
        #[arg(long)]
        cross_check: bool,
    },
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct Filter {
    #[arg(long)]
    length: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    multidegree: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    Lyndon,
    Bhat,
}

impl From<SetArg> for WordSet {
    fn from(s: SetArg) -> Self {
        match s {
            SetArg::Lyndon => WordSet::Lyndon,
            SetArg::Bhat => WordSet::Bhat,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    #[value(name = "L")]
    L,
    #[value(name = "G")]
    G,
    Classical,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Recursive,
    Uea,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandBasis {
    Config,
    Confighat,
}

#[derive(Clone, Copy, ValueEnum)]
enum RowArg {
    Bar,
    Graph,
}

#[derive(Clone, Copy, ValueEnum)]
enum StyleArg {
    Plain,
    Paper,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Duality,
    Triangular,
    Kernel,
    Shuffle,
    Oracle,
    Fan,
    All,
}

enum Failure {
    Usage(String),
    Verification,
    Disagreement,
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, (String, Failure)>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, failure)) => {
            print!("{out}");
            match failure {
                Failure::Usage(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(2)
                }
                Failure::Verification => ExitCode::from(1),
                Failure::Disagreement => {
                    eprintln!("error: pairing methods disagree");
                    ExitCode::from(3)
                }
            }
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let alphabet = Alphabet::parse(&cli.alphabet).map_err(|e| (String::new(), e.into()))?;
    let mut out = String::new();
    let status = match cli.command {
        Command::Count(filter) => count(&alphabet, &filter, &mut out),
        Command::Words { set, filter } => words(&alphabet, set.into(), &filter, &mut out),
        Command::Basis { map, set, word } => basis(&alphabet, map, set.into(), &word, &mut out),
        Command::Pair { left, right, method } => pair_cmd(&alphabet, &left, &right, method, &mut out),
        Command::Expand { tree, basis } => expand(&alphabet, &tree, basis, &mut out),
        Command::Matrix {
            multidegree,
            rows,
            set,
            cols,
            trees,
            order,
            style,
        } => matrix(
            &alphabet,
            MatrixArgs {
                multidegree,
                rows,
                set: set.into(),
                cols: &cols,
                trees: &trees,
                order: &order,
                style,
            },
            &mut out,
        ),
        Command::Verify {
            suite,
            max_n,
            seed,
            cross_check,
        } => verify(
            suite,
            SuiteOptions {
                max_n,
                seed,
                cross_check,
            },
            &mut out,
        ),
    };
    match status {
        Ok(()) => Ok(out),
        Err(f) => Err((out, f)),
    }
}

fn filter(alphabet: &Alphabet, f: &Filter) -> Result<WordFilter, Failure> {
    match (f.length, &f.multidegree) {
        (Some(n), None) => Ok(WordFilter::Length(n)),
        (None, Some(md)) => Ok(WordFilter::MultiDegree(MultiDegree::for_alphabet(
            alphabet,
            md.clone(),
        )?)),
        _ => usage("give exactly one of --length and --multidegree"),
    }
}

fn count(alphabet: &Alphabet, f: &Filter, out: &mut String) -> Result<(), Failure> {
    let n = match filter(alphabet, f)? {
        WordFilter::Length(n) => witt_count(alphabet.len(), n),
        WordFilter::MultiDegree(md) => fine_witt_count(&md),
    };
    writeln!(out, "{n}").unwrap();
    Ok(())
}

fn words(alphabet: &Alphabet, set: WordSet, f: &Filter, out: &mut String) -> Result<(), Failure> {
    for w in set.words(alphabet, &filter(alphabet, f)?) {
        writeln!(out, "{}", alphabet.format_word(&w)).unwrap();
    }
    Ok(())
}

fn basis(alphabet: &Alphabet, map: MapArg, set: WordSet, word: &str, out: &mut String) -> Result<(), Failure> {
    let w = alphabet.parse_word(word)?;
    let text = match map {
        MapArg::L => config_bracketing(&w, set)?.display(alphabet).to_string(),
        MapArg::Classical => classical_bracketing(&w)?.display(alphabet).to_string(),
        MapArg::G => config_graph(&w, set)?.to_json(alphabet),
    };
    writeln!(out, "{text}").unwrap();
    Ok(())
}

/// Reads the left operand of `pair`: a bar word, inline JSON or a JSON file.
fn left_operand(alphabet: &Alphabet, text: &str) -> Result<(Graph, bool), Failure> {
    let t = text.trim();
    if t.starts_with('{') {
        return Ok((Graph::from_json(alphabet, t)?, false));
    }
    if Path::new(t).is_file() {
        let json = std::fs::read_to_string(t)?;
        return Ok((Graph::from_json(alphabet, &json)?, false));
    }
    let w = alphabet.parse_bar(t)?;
    Ok((as_long_graph(&w), true))
}

fn pair_cmd(alphabet: &Alphabet, left: &str, right: &str, method: Method, out: &mut String) -> Result<(), Failure> {
    let (g, is_bar) = left_operand(alphabet, left)?;
    let t = Tree::parse(alphabet, right)?;
    let uea = (is_bar || g.is_long()).then(|| bar_coefficient(g.labels(), &t));
    match method {
        Method::Direct => writeln!(out, "{}", pair(&g, &t)).unwrap(),
        Method::Recursive => writeln!(out, "{}", pair_recursive(&g, &t)).unwrap(),
        Method::Uea => match uea {
            Some(v) => writeln!(out, "{v}").unwrap(),
            None => return usage("the uea method needs a bar word or a long graph"),
        },
        Method::All => {
            let direct = pair(&g, &t);
            let recursive = pair_recursive(&g, &t);
            writeln!(out, "direct\t{direct}").unwrap();
            writeln!(out, "recursive\t{recursive}").unwrap();
            if let Some(v) = uea {
                writeln!(out, "uea\t{v}").unwrap();
            }
            let agree = direct == recursive && uea.is_none_or(|v| v == direct);
            writeln!(out, "agree\t{agree}").unwrap();
            if !agree {
                return Err(Failure::Disagreement);
            }
        }
    }
    Ok(())
}

fn expand(alphabet: &Alphabet, tree: &str, basis: ExpandBasis, out: &mut String) -> Result<(), Failure> {
    let e = LieElement::from_tree(Tree::parse(alphabet, tree)?);
    let set = match basis {
        ExpandBasis::Config => WordSet::Lyndon,
        ExpandBasis::Confighat => WordSet::Bhat,
    };
    for (w, c) in expand_config(&e, set, alphabet) {
        writeln!(out, "{}\t{c:+}", alphabet.format_word(&w)).unwrap();
    }
    Ok(())
}

struct MatrixArgs<'a> {
    multidegree: Vec<usize>,
    rows: RowArg,
    set: WordSet,
    cols: &'a str,
    trees: &'a [String],
    order: &'a [String],
    style: StyleArg,
}

fn matrix(alphabet: &Alphabet, args: MatrixArgs<'_>, out: &mut String) -> Result<(), Failure> {
    let md = MultiDegree::for_alphabet(alphabet, args.multidegree)?;
    let family = match args.cols {
        "config" => Some(BasisFamily::config(alphabet, args.set, &md)),
        "classical" => Some(BasisFamily::classical(alphabet, &md)),
        "none" => None,
        other => match other.strip_prefix("fixture:") {
            Some(name) => {
                let f = load_fixture(name)?;
                if f.alphabet() != alphabet {
                    return usage(format!("fixture {name} uses the alphabet {}", f.alphabet()));
                }
                Some(f.restricted(&md))
            }
            None => return usage(format!("unknown column family {other:?}")),
        },
    };
    let order: Vec<Word> = args
        .order
        .iter()
        .map(|w| alphabet.parse_word(w))
        .collect::<Result<_, _>>()?;
    let family = match family {
        Some(f) if !order.is_empty() => Some(f.reordered(&order)?),
        f => f,
    };
    let mut cols = family.as_ref().map(Column::of_family).unwrap_or_default();
    for t in args.trees {
        cols.push(Column::tree(alphabet, Tree::parse(alphabet, t)?));
    }
    let source = match args.rows {
        RowArg::Bar => RowSource::Bar,
        RowArg::Graph => RowSource::Graph,
    };
    let mut m = PairingMatrix::new(alphabet, source.rows(args.set, alphabet, &md), cols)?;
    if !order.is_empty() {
        m.reorder_rows(&order)?;
    }
    let style = match args.style {
        StyleArg::Plain => MatrixStyle::Plain,
        StyleArg::Paper => MatrixStyle::Paper,
        StyleArg::Json => MatrixStyle::Json,
    };
    out.push_str(&m.render(style));
    Ok(())
}

fn verify(suite: SuiteArg, opts: SuiteOptions, out: &mut String) -> Result<(), Failure> {
    if opts.max_n == 0 || opts.max_n > MAX_N_CAP {
        return usage(format!("--max-n must be between 1 and {MAX_N_CAP}"));
    }
    let chosen: Vec<Suite> = match suite {
        SuiteArg::Duality => vec![Suite::Duality],
        SuiteArg::Triangular => vec![Suite::Triangular],
        SuiteArg::Kernel => vec![Suite::Kernel],
        SuiteArg::Shuffle => vec![Suite::Shuffle],
        SuiteArg::Oracle => vec![Suite::Oracle],
        SuiteArg::Fan => vec![Suite::Fan],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let (mut ok, mut agree) = (true, true);
    for s in chosen {
        let r = suites::run(s, &opts);
        ok &= r.passed();
        agree &= r.tally.disagreements.is_empty();
        writeln!(out, "{r}").unwrap();
    }
    match (ok, agree) {
        (_, false) => Err(Failure::Disagreement),
        (false, true) => Err(Failure::Verification),
        (true, true) => Ok(()),
    }
}
