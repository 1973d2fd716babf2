use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use romik::cohn::{cohn_matrix, lagrange_of_christoffel, markoff_number};
use romik::dynamics::{
    berggren_path, cylinder_bounds, cylinder_norm_interval, expand_rational, parse_digits, triples_up_to_height,
    Digit, DigitWord, ExtReal, PythTriple, TreeRoot,
};
use romik::markoff::{enumerate_markoff_nodes, spectrum_below_2};
use romik::oracle::{admissible_periodic, estimate_by_cylinders, estimate_by_height, EstimateReport};
use romik::words::{
    christoffel, is_lower_christoffel, jmath, lagrange_of_word, minimal_period, standard_factorization, ABWord, Kind,
};

#[derive(Parser)]
#[command(name = "romik", version, about = "Exact Lagrange spectrum tools for the unit circle")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Decimal digits in rendered values.
    #[arg(long, global = true, default_value_t = 9, value_parser = clap::value_parser!(u16).range(1..=1000))]
    precision: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Both digit expansions of a rational point.
    Expand {
        /// A primitive triple `a,b,c` with a^2 + b^2 = c^2.
        #[arg(long)]
        triple: String,
    },
    /// Rational points up to a height with their Berggren paths.
    Berggren {
        #[arg(long)]
        max_height: BigInt,
    },
    /// Boundary points and norm interval of a cylinder set.
    Cylinder {
        /// Digits, e.g. `3,1,2` or `312`.
        #[arg(long)]
        digits: String,
    },
    /// A Christoffel word with its orientation and digit period.
    Christoffel(ChristoffelArgs),
    /// Markoff number and exact Lagrange value of an ab-word.
    Lagrange {
        #[arg(long)]
        word: String,
    },
    /// The Markoff tree rooted at (1; 3, 1).
    MarkoffTree {
        #[arg(long, value_parser = clap::value_parser!(u16).range(0..=24))]
        depth: u16,
    },
    /// The smallest values of the spectrum below 2.
    Spectrum {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        count: u32,
    },
    /// Numerical estimate of the Lagrange number of a periodic point.
    Estimate(EstimateArgs),
    /// Admissibility of the doubly infinite sequence with a given period.
    Admissible {
        #[arg(long)]
        period: String,
    },
    /// Runs the acceptance suite.
    Verify {
        /// Run a single criterion.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=11))]
        only: Option<u8>,
    },
}

#[derive(Args)]
struct ChristoffelArgs {
    /// Slope `t/s`: t letters b and s letters a.
    #[arg(long)]
    slope: String,
    #[arg(long)]
    upper: bool,
    #[arg(long)]
    factorize: bool,
    #[arg(long)]
    period: bool,
}

#[derive(Args)]
#[group(id = "mode", required = true, args = ["max_height", "kmax"])]
struct EstimateArgs {
    #[arg(long)]
    period: String,
    /// Digits preceding the period.
    #[arg(long, default_value = "")]
    head: String,
    #[arg(long)]
    max_height: Option<BigInt>,
    #[arg(long)]
    kmax: Option<usize>,
    /// The height sweep covers `[H / window, H]`.
    #[arg(long, default_value_t = 64, requires = "max_height")]
    window: u64,
}

/// A failed run: usage problems exit 2, failed verification exits 1.
enum Failure {
    Usage(String),
    Verification,
}

impl From<romik::Error> for Failure {
    fn from(e: romik::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<(), Failure>;

fn usage(flag: &str, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("invalid value for --{flag}: {msg}"))
}

fn digits_arg(flag: &str, s: &str) -> Result<Vec<Digit>, Failure> {
    parse_digits(s).map_err(|e| usage(flag, e))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn ext_json(e: &ExtReal) -> Value {
    match e {
        ExtReal::Finite(t) => t.to_json_value(),
        ExtReal::Infinity => json!("inf"),
    }
}

fn ext_decimal(e: &ExtReal, digits: usize) -> String {
    match e {
        ExtReal::Finite(t) => t.to_decimal(digits),
        ExtReal::Infinity => "inf".into(),
    }
}

fn root_name(r: TreeRoot) -> &'static str {
    match r {
        TreeRoot::SeedX => "(1,0,1)",
        TreeRoot::SeedY => "(0,1,1)",
        TreeRoot::Odd => "(3,4,5)",
        TreeRoot::Even => "(4,3,5)",
    }
}

fn expand(cli: &Cli, triple: &str) -> Out {
    let parts: Vec<BigInt> =
        triple.split(',').map(|p| p.trim().parse::<BigInt>()).collect::<Result<_, _>>().map_err(|e| usage("triple", e))?;
    let [a, b, c] = <[BigInt; 3]>::try_from(parts).map_err(|_| usage("triple", "expected three integers a,b,c"))?;
    let t = PythTriple::new(a, b, c).map_err(|e| usage("triple", e))?;
    let (e1, e2) = expand_rational(&t)?;
    if cli.json {
        print_json(&json!({ "triple": t.to_json_value(), "expansions": [e1.to_json_value(), e2.to_json_value()] }));
    } else {
        println!("{e1}");
        println!("{e2}");
    }
    Ok(())
}

fn berggren(cli: &Cli, h: &BigInt) -> Out {
    let rows: Vec<(PythTriple, Vec<Digit>, TreeRoot)> = triples_up_to_height(h)
        .into_iter()
        .map(|t| berggren_path(&t).map(|(p, r)| (t, p, r)))
        .collect::<romik::Result<_>>()?;
    if cli.json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(t, p, r)| json!({ "triple": t.to_json_value(), "path": p, "root": root_name(*r) }))
            .collect();
        print_json(&Value::Array(v));
    } else {
        for (t, p, r) in &rows {
            let path: String = p.iter().map(|d| d.to_string()).collect();
            println!("{t}\t{}\t{}", if path.is_empty() { "-" } else { &path }, root_name(*r));
        }
    }
    Ok(())
}

fn cylinder(cli: &Cli, digits: &str) -> Out {
    let ds = digits_arg("digits", digits)?;
    let (z10, z01) = cylinder_bounds(&ds);
    let (lo, hi) = cylinder_norm_interval(&ds);
    let p = cli.precision as usize;
    if cli.json {
        print_json(&json!({
            "digits": ds,
            "z10": z10.to_json_value(),
            "z01": z01.to_json_value(),
            "norm_interval": [ext_json(&lo), ext_json(&hi)],
        }));
    } else {
        println!("Z(1,0) = {z10}");
        println!("Z(0,1) = {z01}");
        println!("norm in [{}, {}]", ext_decimal(&lo, p), ext_decimal(&hi, p));
    }
    Ok(())
}

fn parse_slope(s: &str) -> Result<(u64, u64), Failure> {
    let (t, sd) = s.split_once('/').ok_or_else(|| usage("slope", "expected t/s"))?;
    let t = t.trim().parse().map_err(|e| usage("slope", e))?;
    let sd = sd.trim().parse().map_err(|e| usage("slope", e))?;
    Ok((t, sd))
}

fn christoffel_cmd(cli: &Cli, a: &ChristoffelArgs) -> Out {
    let (t, s) = parse_slope(&a.slope)?;
    let kind = if a.upper { Kind::Upper } else { Kind::Lower };
    let w = christoffel(t, s, kind).map_err(|e| usage("slope", e))?;
    let j = jmath(&w.word);
    let fact = if a.factorize { Some(standard_factorization(&w).map_err(|e| usage("factorize", e))?) } else { None };
    let period = if a.period { Some(minimal_period(&w.word)?) } else { None };
    if cli.json {
        print_json(&json!({
            "slope": { "t": t.to_string(), "s": s.to_string() },
            "kind": if a.upper { "upper" } else { "lower" },
            "word": w.word.to_string(),
            "oriented": j.to_string(),
            "factorization": fact.as_ref().map(|(u, v)| json!([u.word.to_string(), v.word.to_string()])),
            "minimal_period": period.as_ref().map(|p| p.to_json_value()),
        }));
    } else {
        println!("word       {}", w.word);
        println!("oriented   {j}");
        if let Some((u, v)) = &fact {
            println!("factors    ({}, {})", u.word, v.word);
        }
        if let Some(p) = &period {
            println!("period     {p}");
        }
    }
    Ok(())
}

fn lagrange_cmd(cli: &Cli, word: &str) -> Out {
    let w = ABWord::parse(word).map_err(|e| usage("word", e))?;
    let n = cohn_matrix(&w).map_err(|e| usage("word", e))?;
    let digits = cli.precision as usize;
    let parity = if w.is_even() { "even" } else { "odd" };
    let m = markoff_number(&w).ok();
    let period = minimal_period(&w)?;
    let (l_sq, l_exact, l_dec) = if is_lower_christoffel(&w) {
        let cw = christoffel(w.count_b() as u64, w.count_a() as u64, Kind::Lower)?;
        let e = lagrange_of_christoffel(&cw)?;
        (romik::exactnum::rational::to_json_value(&e.l_squared), e.radical(), e.decimal(digits))
    } else {
        let j = jmath(&w);
        let full = if w.is_even() { j } else { j.concat(&j.vee()) };
        let (l, _) = lagrange_of_word(&full)?;
        let sq = match &l {
            ExtReal::Finite(v) => v.square().to_json_value(),
            ExtReal::Infinity => json!("inf"),
        };
        (sq, l.to_string(), ext_decimal(&l, digits))
    };
    if cli.json {
        print_json(&json!({
            "word": w.to_string(),
            "parity": parity,
            "markoff_number": m.as_ref().map(|m| m.to_string()),
            "q": n.m.q().to_json_value(),
            "L_squared": l_sq,
            "L": l_exact,
            "L_decimal": l_dec,
            "minimal_period": period.period().map(|p| p.iter().map(|d| d.to_string()).collect::<String>()),
        }));
    } else {
        println!("word            {w}");
        println!("parity          {parity}");
        println!("markoff_number  {}", m.map_or("-".to_string(), |m| m.to_string()));
        println!("q               {}", n.m.q());
        println!("L               {l_exact}");
        println!("L_decimal       {l_dec}");
        println!("minimal_period  {period}");
    }
    Ok(())
}

fn markoff_tree(cli: &Cli, depth: u16) -> Out {
    let nodes = enumerate_markoff_nodes(depth as usize);
    if cli.json {
        let v: Vec<Value> = nodes.iter().map(|n| json!({ "depth": n.depth, "triple": n.triple.to_json_value() })).collect();
        print_json(&Value::Array(v));
    } else {
        for n in &nodes {
            println!("{}\t{}", n.depth, n.triple);
        }
    }
    Ok(())
}

fn spectrum(cli: &Cli, count: u32) -> Out {
    let sp = spectrum_below_2(count as usize)?;
    let digits = cli.precision as usize;
    if cli.json {
        let v: Vec<Value> = sp
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let mut o = e.to_json_value(digits);
                o["rank"] = json!(i + 1);
                o
            })
            .collect();
        print_json(&Value::Array(v));
    } else {
        println!("rank\tL_decimal\tL_squared\tm\tkind\tword\tperiod\tL");
        for (i, e) in sp.iter().enumerate() {
            println!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                i + 1,
                e.decimal(digits),
                e.l_squared,
                e.markoff_number,
                e.kind,
                e.word.word,
                e.period_string(),
                e.radical()
            );
        }
    }
    Ok(())
}

fn print_estimate(cli: &Cli, r: &EstimateReport) {
    let digits = cli.precision as usize;
    if cli.json {
        print_json(&r.to_json_value(digits));
    } else {
        println!("point     {}", r.point);
        println!("method    {}", r.method);
        println!("bound     {}", r.k_or_height);
        println!("samples   {}", r.samples);
        println!("estimate  {}", r.decimal(digits));
        if let Some(t) = &r.target {
            println!("exact     {} = {}", t, t.to_decimal(digits));
        }
        if let Some(e) = r.error() {
            println!("error     {}", e.to_decimal(digits + 3));
        }
    }
}

fn estimate(cli: &Cli, a: &EstimateArgs) -> Out {
    let head = digits_arg("head", &a.head).or_else(|e| if a.head.is_empty() { Ok(vec![]) } else { Err(e) })?;
    let period = digits_arg("period", &a.period)?;
    let p = DigitWord::periodic(head, period).map_err(|e| usage("period", e))?;
    let r = match (&a.max_height, a.kmax) {
        (Some(h), None) => {
            if h < &BigInt::from(1) {
                return Err(usage("max-height", "must be positive"));
            }
            estimate_by_height(&p, h, a.window).map_err(|e| usage("period", e))?
        }
        (None, Some(k)) => estimate_by_cylinders(&p, k).map_err(|e| usage("period", e))?,
        _ => return Err(Failure::Usage("give exactly one of --max-height and --kmax".into())),
    };
    print_estimate(cli, &r);
    Ok(())
}

fn admissible(cli: &Cli, period: &str) -> Out {
    let ds = digits_arg("period", period)?;
    let r = admissible_periodic(&ds).map_err(|e| usage("period", e))?;
    let digits = cli.precision as usize;
    if cli.json {
        print_json(&r.to_json_value(digits));
    } else {
        println!("class    {}", r.class);
        if let Some(w) = &r.witness {
            println!("witness  {w}");
        }
        println!("L        {} = {}", r.lagrange, ext_decimal(&r.lagrange, digits));
    }
    Ok(())
}

fn verify(cli: &Cli, only: Option<u8>) -> Out {
    let outcomes = match only {
        Some(id) => vec![romik::verify::run(id as usize)],
        None => romik::verify::run_all(),
    };
    if cli.json {
        print_json(&Value::Array(outcomes.iter().map(|o| o.to_json_value()).collect()));
    } else {
        for o in &outcomes {
            println!("{}", o.line());
        }
    }
    if outcomes.iter().all(|o| o.passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Expand { triple } => expand(cli, triple),
        Command::Berggren { max_height } => berggren(cli, max_height),
        Command::Cylinder { digits } => cylinder(cli, digits),
        Command::Christoffel(a) => christoffel_cmd(cli, a),
        Command::Lagrange { word } => lagrange_cmd(cli, word),
        Command::MarkoffTree { depth } => markoff_tree(cli, *depth),
        Command::Spectrum { count } => spectrum(cli, *count),
        Command::Estimate(a) => estimate(cli, a),
        Command::Admissible { period } => admissible(cli, period),
        Command::Verify { only } => verify(cli, *only),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global() {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
