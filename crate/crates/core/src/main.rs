use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use bcinterp::cli::{run, CommandSpec, Subcommand, USAGE_EXIT};
use clap::{Args, Parser};

#[derive(Parser)]
#[command(name = "bcinterp", version, about = "Exact Macdonald, Jack, Koornwinder and BC-Jacobi polynomials")]
enum Command {
    /// Expand a polynomial in monomials.
    Compute(Common),
    /// Evaluate at a point, or check the closed-form special value.
    Evaluate(Common),
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Largest weight and number of variables.
        #[arg(long, num_args = 2, value_names = ["MAX_WEIGHT", "N"])]
        bounds: Option<Vec<usize>>,
    },
    /// Check a limit relation exactly.
    Limit {
        #[arg(long)]
        id: String,
        #[arg(long, num_args = 0.., value_delimiter = ',')]
        partition: Vec<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        params: Params,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    family: String,
    #[arg(long, num_args = 0.., value_delimiter = ',')]
    partition: Vec<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    params: Params,
    /// Evaluation point, one literal per variable.
    #[arg(long, num_args = 1.., allow_hyphen_values = true)]
    point: Vec<String>,
    /// Two-variable series form: hypergeometric, explicit-sum or ultraspherical.
    #[arg(long)]
    form: Option<String>,
    /// Expand in symmetrized monomials.
    #[arg(long)]
    symmetric: bool,
}

/// Parameter literals: `p/q`, `s` or `s^k`.
#[derive(Args)]
struct Params {
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a3: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a4: Option<String>,
    #[arg(long = "a-dual-1", allow_hyphen_values = true)]
    a_dual_1: Option<String>,
}

impl Params {
    fn into_map(self) -> BTreeMap<String, String> {
        [
            ("q", self.q),
            ("t", self.t),
            ("a", self.a),
            ("tau", self.tau),
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("a1", self.a1),
            ("a2", self.a2),
            ("a3", self.a3),
            ("a4", self.a4),
            ("a-dual-1", self.a_dual_1),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect()
    }
}

fn common(sub: Subcommand, c: Common) -> CommandSpec {
    let mut spec = CommandSpec::new(sub);
    spec.family = Some(c.family);
    spec.partition = c.partition;
    spec.n = c.n;
    spec.params = c.params.into_map();
    spec.point = c.point;
    spec.form = c.form;
    spec.symmetric = c.symmetric;
    spec
}

fn main() -> ExitCode {
    let command = match Command::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_EXIT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let spec = match command {
        Command::Compute(c) => common(Subcommand::Compute, c),
        Command::Evaluate(c) => common(Subcommand::Evaluate, c),
        Command::Verify { suite, bounds } => {
            let mut spec = CommandSpec::new(Subcommand::Verify);
            spec.suite = Some(suite);
            spec.bounds = bounds.map(|b| (b[0], b[1]));
            spec
        }
        Command::Limit { id, partition, n, params } => {
            let mut spec = CommandSpec::new(Subcommand::Limit);
            spec.id = Some(id);
            spec.partition = partition;
            spec.n = n;
            spec.params = params.into_map();
            spec
        }
    };
    match run(&spec) {
        Ok(doc) => {
            // A closed pipe is not an error of the computation.
            let _ = writeln!(std::io::stdout(), "{}", doc.to_json());
            ExitCode::from(doc.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("bcinterp: {e}");
            ExitCode::from(USAGE_EXIT as u8)
        }
    }
}
