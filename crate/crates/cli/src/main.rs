use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rsg_core::{
    enumerate_class, f_forward, f_inverse, fbar, fbar_inverse, run_checks, s_diagram,
    sbar_diagram, Check, ClassSpec, Error, Partition, VerificationReport,
};

#[derive(Parser)]
#[command(name = "rsg", version, about = "Partition bijections and q-series identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an identity or q-difference check (`all` runs every check)
    Verify {
        id: String,
        #[arg(long, default_value_t = 60)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Apply f or f̄ (or an inverse) to a partition
    Map {
        partition: String,
        #[arg(long, value_enum, default_value_t = MapVariant::F)]
        variant: MapVariant,
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the S-diagram (or barred S-diagram) of a partition
    Diagram {
        partition: String,
        #[arg(long, value_enum, default_value_t = DiagramKind::S)]
        variant: DiagramKind,
        #[arg(long)]
        json: bool,
    },
    /// List the members of a class with weight n
    Enumerate {
        class: String,
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate a bijection on all source partitions of n and check it
    Table {
        #[arg(value_enum)]
        pair: Pair,
        n: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MapVariant {
    F,
    Fbar,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramKind {
    S,
    Sbar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pair {
    #[value(name = "g2-a2")]
    G2A2,
    #[value(name = "g1-a1")]
    G1A1,
    #[value(name = "g3-a3")]
    G3A3,
    #[value(name = "b1-t")]
    B1T,
}

impl Pair {
    fn source(self) -> ClassSpec {
        match self {
            Pair::G2A2 => ClassSpec::Gordon { k: 3, i: 2 },
            Pair::G1A1 => ClassSpec::Gordon { k: 3, i: 1 },
            Pair::G3A3 => ClassSpec::Gordon { k: 3, i: 3 },
            Pair::B1T => ClassSpec::Bressoud { k: 3, i: 1 },
        }
    }

    fn target(self) -> ClassSpec {
        match self {
            Pair::G2A2 => ClassSpec::A2,
            Pair::G1A1 => ClassSpec::A1,
            Pair::G3A3 => ClassSpec::A3,
            Pair::B1T => ClassSpec::T,
        }
    }

    fn apply(self, p: &Partition) -> rsg_core::Result<Partition> {
        match self {
            Pair::G3A3 => fbar(p),
            _ => f_forward(p),
        }
    }
}

/// Failures are split by exit code: 1 for domain or verification failures,
/// 2 for anything the user typed wrong.
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParsePartition { .. }
            | Error::ParseSeries { .. }
            | Error::NegativePart(_)
            | Error::InvalidClassSpec(_)
            | Error::UnknownIdentity(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify { id, order, json } => verify(&id, order, json),
        Command::Map {
            partition,
            variant,
            inverse,
            json,
        } => map(&partition, variant, inverse, json),
        Command::Diagram {
            partition,
            variant,
            json,
        } => diagram(&partition, variant, json),
        Command::Enumerate { class, n, json } => enumerate(&class, n, json),
        Command::Table { pair, n, json } => table(pair, n, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `rsg --help` for usage");
            ExitCode::from(2)
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    Ok(text.parse::<Partition>()?)
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json values always serialize"));
}

fn int_json(x: i128) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn report_json(report: &VerificationReport) -> Value {
    let mismatch = report.mismatch.as_ref().map(|m| {
        json!({
            "relation": m.relation,
            "at": m.at.to_string(),
            "left": int_json(m.left),
            "right": int_json(m.right),
        })
    });
    json!({
        "id": report.id,
        "order": report.order,
        "verified": report.is_verified(),
        "mismatch": mismatch,
    })
}

fn verify(id: &str, order: usize, as_json: bool) -> Result<(), Failure> {
    let checks = if id == "all" {
        Check::all()
    } else {
        vec![id.parse::<Check>()?]
    };
    let reports = run_checks(&checks, order);
    if as_json {
        let values: Vec<Value> = reports.iter().map(report_json).collect();
        if id == "all" {
            print_json(&Value::Array(values));
        } else {
            print_json(&values[0]);
        }
    } else {
        for report in &reports {
            println!("{report}");
        }
    }
    let failed = reports.iter().filter(|r| !r.is_verified()).count();
    if failed > 0 {
        return Err(Failure::Domain(format!("{failed} check(s) failed")));
    }
    Ok(())
}

fn map(text: &str, variant: MapVariant, inverse: bool, as_json: bool) -> Result<(), Failure> {
    let input = parse_partition(text)?;
    let image = match (variant, inverse) {
        (MapVariant::F, false) => f_forward(&input)?,
        (MapVariant::F, true) => f_inverse(&input)?,
        (MapVariant::Fbar, false) => fbar(&input)?,
        (MapVariant::Fbar, true) => fbar_inverse(&input)?,
    };
    // images of f are easiest to read with the block of small evens split off
    let rendered = match (variant, inverse) {
        (MapVariant::F, false) => image.to_split_string(image.largest_repeated()),
        _ => image.to_string(),
    };
    if as_json {
        print_json(&json!({
            "input": input.to_string(),
            "output": rendered,
            "parts": image.parts(),
        }));
    } else {
        println!("{rendered}");
    }
    Ok(())
}

fn diagram(text: &str, variant: DiagramKind, as_json: bool) -> Result<(), Failure> {
    let input = parse_partition(text)?;
    let d = match variant {
        DiagramKind::S => s_diagram(&input)?,
        DiagramKind::Sbar => sbar_diagram(&input)?,
    };
    if as_json {
        println!("{}", d.to_json());
    } else {
        println!("{d}");
    }
    Ok(())
}

fn enumerate(class: &str, n: u64, as_json: bool) -> Result<(), Failure> {
    let spec: ClassSpec = class.parse()?;
    let members = enumerate_class(n, &spec);
    if as_json {
        let listed: Vec<String> = members.iter().map(Partition::to_string).collect();
        print_json(&json!({
            "class": spec.to_string(),
            "n": n,
            "partitions": listed,
            "count": members.len(),
        }));
    } else {
        for p in &members {
            println!("{p}");
        }
        println!("count: {}", members.len());
    }
    Ok(())
}

fn table(pair: Pair, n: u64, as_json: bool) -> Result<(), Failure> {
    let sources = enumerate_class(n, &pair.source());
    let mut rows = Vec::with_capacity(sources.len());
    for src in sources {
        let img = pair.apply(&src)?;
        rows.push((src, img));
    }
    let targets: BTreeSet<Partition> = enumerate_class(n, &pair.target()).into_iter().collect();
    let images: BTreeSet<Partition> = rows.iter().map(|(_, img)| img.clone()).collect();
    let injective = images.len() == rows.len();
    let onto = images == targets;
    let ok = injective && onto;

    if as_json {
        let listed: Vec<Value> = rows
            .iter()
            .map(|(s, i)| json!({"source": s.to_string(), "image": i.to_string()}))
            .collect();
        print_json(&json!({
            "source": pair.source().to_string(),
            "target": pair.target().to_string(),
            "n": n,
            "rows": listed,
            "source_count": rows.len(),
            "target_count": targets.len(),
            "injective": injective,
            "image_equals_target": onto,
        }));
    } else {
        for (s, i) in &rows {
            println!("{s} -> {i}");
        }
        println!(
            "{} source partitions of {n} in {}, {} in {}",
            rows.len(),
            pair.source(),
            targets.len(),
            pair.target()
        );
        println!("injective: {}", if injective { "yes" } else { "no" });
        println!("image equals target: {}", if onto { "yes" } else { "no" });
    }
    if !ok {
        return Err(Failure::Domain("the map is not a bijection onto the target class".into()));
    }
    Ok(())
}
