use clap::{Parser, Subcommand};
use quatrefl::classify::{order3_census, order4_census, order4_structure, order5_census, root_census, OrbitCensus};
use quatrefl::coincidence::{ep_coincidence, np_coincidence, tilt_inversion, CoincidenceInputs};
use quatrefl::repthy::{parse_sum, CharacterTable, Irrep};
use quatrefl::spanalg::{dimension_report, neutrino_algebra_report, su2_u1_split_report};
use quatrefl::verify;
use quatrefl::O1;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "quatrefl", version, about = "Exact computations in the quaternionic reflection group O1")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the verification suite
    Verify {
        /// Only run checks whose id starts with this dotted prefix
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the character table
    Table {
        #[arg(long)]
        json: bool,
    },
    /// Decompose the restriction of the SU(2) representation of spin j
    Branch {
        /// Twice the hyperspin
        #[arg(long = "two-j")]
        two_j: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decompose a tensor product, e.g. `decompose 4b 4b` or `decompose 2a+2b 4b`
    Decompose {
        #[arg(value_parser = parse_rep)]
        left: RepSum,
        #[arg(value_parser = parse_rep)]
        right: RepSum,
        #[arg(long)]
        json: bool,
    },
    /// List the ten root classes
    Roots {
        #[arg(long)]
        json: bool,
    },
    /// Conjugation orbits of <g,h> on elements of order 3, 4 or 5
    Orbits {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=5))]
        order: u8,
        #[arg(long)]
        json: bool,
    },
    /// Span and algebra dimensions with the corner identities
    Algebra {
        #[arg(long)]
        json: bool,
    },
    /// The three numerical coincidences
    Coincidence {
        #[arg(long)]
        json: bool,
    },
}

/// A formal sum of irreducibles such as `2a+2b`.
#[derive(Clone, Debug)]
struct RepSum(Vec<Irrep>);

fn parse_rep(s: &str) -> Result<RepSum, String> {
    parse_sum(s).map(RepSum).map_err(|e| e.to_string())
}

/// Text output is ASCII only.
fn ascii(s: &str) -> String {
    s.replace('√', "sqrt")
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify { only, json } => cmd_verify(only.as_deref(), json),
        Cmd::Table { json } => {
            let t = CharacterTable::shared();
            if json {
                print_json(&t.to_json());
            } else {
                print!("{}", ascii(&t.render()));
            }
            ExitCode::SUCCESS
        }
        Cmd::Branch { two_j, json } => {
            let t = CharacterTable::shared();
            let d = t.decompose(&t.hyperspin_character(two_j)).expect("restriction is a character");
            if json {
                print_json(&serde_json::json!({ "two_j": two_j, "dim": two_j + 1, "decomposition": d.to_string() }));
            } else {
                println!("{d}");
            }
            ExitCode::SUCCESS
        }
        Cmd::Decompose { left, right, json } => {
            let t = CharacterTable::shared();
            let d = t.tensor(&left.0, &right.0).expect("irreducible sums are characters");
            if json {
                print_json(&serde_json::json!({ "decomposition": d.to_string(), "dim": d.dim() }));
            } else {
                println!("{d}");
            }
            ExitCode::SUCCESS
        }
        Cmd::Roots { json } => cmd_roots(json),
        Cmd::Orbits { order, json } => cmd_orbits(order, json),
        Cmd::Algebra { json } => cmd_algebra(json),
        Cmd::Coincidence { json } => cmd_coincidence(json),
    }
}

fn cmd_verify(only: Option<&str>, json: bool) -> ExitCode {
    let report = match verify::run(only) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("known prefixes: {}", verify::sections().join(", "));
            return ExitCode::from(2);
        }
    };
    if json {
        print_json(&report);
    } else {
        print!("{}", report.render_text());
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_roots(json: bool) -> ExitCode {
    let c = root_census().expect("root census");
    if json {
        print_json(&c);
        return ExitCode::SUCCESS;
    }
    for class in &c.classes {
        let b = &class.members[0];
        println!(
            "{:>2}  {:<14} {:>2} roots  base ({}, {})",
            class.base_index,
            class.label,
            class.members.len(),
            ascii(&b.c1.to_string()),
            ascii(&b.c2.to_string())
        );
    }
    for (label, n) in &c.states_by_label {
        println!("{label}: {n} states");
    }
    ExitCode::SUCCESS
}

fn print_census(c: &OrbitCensus) {
    println!("{} items, orbit sizes {}", c.item_count, c.sizes_string());
    for (k, o) in c.orbits.iter().enumerate() {
        println!("  orbit {k}: size {:>2}, representative {}", o.items.len(), o.representative);
    }
    for ch in &c.checks {
        println!("{ch}");
    }
}

fn cmd_orbits(order: u8, json: bool) -> ExitCode {
    let o1 = O1::shared();
    match order {
        4 => {
            let c = order4_census(o1);
            let s = order4_structure(o1, &c);
            if json {
                print_json(&serde_json::json!({ "census": c, "structure": s }));
                return ExitCode::SUCCESS;
            }
            print_census(&c);
            for m in &s.matchings {
                let parts: Vec<String> = m.iter().map(|(a, b)| format!("({a}, {b})")).collect();
                println!("pairing: {}", parts.join(" "));
            }
            for ch in &s.checks {
                println!("{ch}");
            }
        }
        3 | 5 => {
            let c = if order == 3 { order3_census(o1) } else { order5_census(o1) };
            if json {
                print_json(&c);
            } else {
                print_census(&c);
            }
        }
        _ => unreachable!("clap restricts the order"),
    }
    ExitCode::SUCCESS
}

fn cmd_algebra(json: bool) -> ExitCode {
    let d = dimension_report(O1::shared());
    let n = neutrino_algebra_report();
    let s = su2_u1_split_report();
    if json {
        print_json(&serde_json::json!({ "dimensions": d, "identities": n.checks, "split": s.checks }));
        return ExitCode::SUCCESS;
    }
    println!("span of 20 reflections:        {}", d.reflections_span);
    println!("algebra of 20 reflections:     {}", d.reflections_algebra);
    println!("span of all 120 elements:      {}", d.group_span);
    println!("span of 1 and the four gammas: {}", d.gamma_with_identity_span);
    for ch in n.checks.iter().chain(&s.checks) {
        println!("{ch}");
    }
    ExitCode::SUCCESS
}

fn cmd_coincidence(json: bool) -> ExitCode {
    let i = CoincidenceInputs::default();
    let (np, ep, t) = (np_coincidence(), ep_coincidence(), tilt_inversion());
    if json {
        print_json(&serde_json::json!({ "inputs": i, "np": np, "ep": ep, "tilt": t }));
        return ExitCode::SUCCESS;
    }
    println!("1 + 1/(2*{})           = {np:.6}   m(n)/m(p) = {}", i.days_per_year, i.mass_ratio_np);
    println!("sin({} deg)/(2*{}) = {ep:.9}   m(e)/m(p) = {}", i.tilt_degrees, i.days_per_year, i.mass_ratio_ep);
    println!("sin(theta) = 2*{}*{} = {:.7}", i.days_per_year, i.mass_ratio_ep, t.sin_theta);
    println!("theta = {:.7} deg = {}", t.theta_degrees, t.theta_dms);
    ExitCode::SUCCESS
}
