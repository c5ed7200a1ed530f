//! Command definitions and dispatch for the `lehmer` executable.
//!
//! Exit codes: 0 success, 1 a `verify` check failed, 2 usage error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use lehmer_core::{
    closed_factors, det_bareiss, det_closed, det_cofactor, dyck_count, gauss_pascal, lambda_rec,
    lambda_sum, lehmer_matrix, limit_det, lu_generic, product_check, stabilization_check,
    Agreement, BandedFactors, DenseMatrix, Poly2, RatFunc, TriMatrix,
};
use serde_json::{json, Value};

use crate::json;

/// Dense Bareiss elimination is only run up to this size by `verify`.
pub const BAREISS_MAX_N: u64 = 8;

const UV_HEADER: &str = "# variables: u = q^(1/2), v = z^(1/2)";

#[derive(Debug, Parser)]
#[command(
    name = "lehmer",
    version,
    about = "Exact computations around Lehmer's tridiagonal determinant"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// λ(j) as a polynomial in q and z.
    Lambda { j: u32 },
    /// The three bands of M(n).
    Matrix {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// det M(n).
    Det {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// The closed-form LU factors of M(n).
    Lu {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Cross-check the closed forms for M(n) against generic elimination.
    Verify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Gaussian binomial [n k]_q.
    Qbinom {
        n: u32,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// The n → ∞ determinant as a power series truncated at z^K and q^D.
    Limit {
        #[arg(long = "zdeg")]
        zdeg: usize,
        #[arg(long = "qdeg")]
        qdeg: u32,
    },
    /// Degree through which the z^k coefficient of det M(n) matches the limit.
    Stabilize {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        k: u32,
    },
    /// Dyck paths with m up-steps and height at most h.
    Dyck { m: usize, h: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    VerificationFailed,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::VerificationFailed => 1,
        }
    }
}

pub const USAGE_EXIT: u8 = 2;

/// Rejected arguments that clap cannot express.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub struct Output {
    pub stdout: String,
    pub status: Status,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            status: Status::Success,
        }
    }
}

fn validate(command: &Command) -> Result<(), UsageError> {
    if let Command::Stabilize { n, k } = command {
        if 2 * u64::from(*k) > *n {
            return Err(UsageError(format!(
                "stabilize: z^{k} does not occur in det M({n}); need 2k <= n"
            )));
        }
    }
    Ok(())
}

fn json_line(v: Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

fn poly_output(p: &Poly2, as_json: bool) -> String {
    if as_json {
        json_line(json::poly_to_json(p))
    } else if p.is_even() {
        format!("{p}\n")
    } else {
        format!("{UV_HEADER}\n{}\n", p.display_uv())
    }
}

fn uv_list(ps: &[Poly2]) -> String {
    ps.iter()
        .map(|p| p.display_uv().to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn render_matrix(m: &TriMatrix) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{UV_HEADER}");
    let _ = writeln!(s, "diag: {}", uv_list(m.diag()));
    let _ = writeln!(s, "super: {}", uv_list(m.superdiag()));
    let _ = writeln!(s, "sub: {}", uv_list(m.subdiag()));
    s
}

fn ratfunc_uv(r: &RatFunc) -> String {
    if r.den().is_one() {
        r.num().display_uv().to_string()
    } else {
        format!("({}) / ({})", r.num().display_uv(), r.den().display_uv())
    }
}

fn render_factors(f: &BandedFactors) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{UV_HEADER}");
    for (j, d) in f.u_diag.iter().enumerate() {
        let _ = writeln!(s, "U[{0},{0}] = {1}", j + 1, ratfunc_uv(d));
    }
    for (j, p) in f.u_super.iter().enumerate() {
        let _ = writeln!(s, "U[{},{}] = {}", j + 1, j + 2, p.display_uv());
    }
    for (j, l) in f.l_sub.iter().enumerate() {
        let _ = writeln!(s, "L[{},{}] = {}", j + 2, j + 1, ratfunc_uv(l));
    }
    s
}

struct Check {
    name: &'static str,
    outcome: Result<(), String>,
}

fn verify_checks(n: usize) -> Vec<Check> {
    let m = lehmer_matrix(n).expect("n >= 1");
    let closed = closed_factors(n).expect("n >= 1");
    let det = det_closed(n).expect("n >= 1");
    let mut checks = Vec::new();

    let rec = lambda_rec(n as u32);
    checks.push(Check {
        name: "lambda_sum = lambda_rec",
        outcome: (0..=n as u32)
            .find(|&j| lambda_sum(j) != *rec.get(j as usize))
            .map_or(Ok(()), |j| Err(format!("differ at j = {j}"))),
    });
    checks.push(Check {
        name: "lu_generic = closed_factors",
        outcome: match lu_generic(&m) {
            Ok(found) => found.first_difference(&closed).map_or(Ok(()), |(band, i)| {
                Err(format!("{band}[{}] differs", i + 1))
            }),
            Err(e) => Err(e.to_string()),
        },
    });
    checks.push(Check {
        name: "product_check(closed_factors, M)",
        outcome: product_check(&closed, &m).map_err(|e| e.to_string()),
    });
    checks.push(Check {
        name: "det_cofactor = det_closed",
        outcome: if det_cofactor(&m) == det {
            Ok(())
        } else {
            Err("determinants differ".into())
        },
    });
    if n as u64 <= BAREISS_MAX_N {
        checks.push(Check {
            name: "det_bareiss = det_closed",
            outcome: match det_bareiss(&DenseMatrix::<Poly2>::from(&m)) {
                Ok(d) if d == det => Ok(()),
                Ok(_) => Err("determinants differ".into()),
                Err(e) => Err(e.to_string()),
            },
        });
    }
    checks
}

fn render_verify(n: usize, checks: &[Check], as_json: bool) -> String {
    if as_json {
        let list: Vec<Value> = checks
            .iter()
            .map(|c| match &c.outcome {
                Ok(()) => json!({ "check": c.name, "status": "pass" }),
                Err(why) => json!({ "check": c.name, "status": "fail", "detail": why }),
            })
            .collect();
        return json_line(json!({ "n": n, "checks": list }));
    }
    let mut s = String::new();
    for c in checks {
        match &c.outcome {
            Ok(()) => {
                let _ = writeln!(s, "PASS {}", c.name);
            }
            Err(why) => {
                let _ = writeln!(s, "FAIL {}: {why}", c.name);
            }
        }
    }
    if n as u64 > BAREISS_MAX_N {
        let _ = writeln!(s, "SKIP det_bareiss = det_closed (n > {BAREISS_MAX_N})");
    }
    s
}

/// Runs one command. Output depends only on the command and its arguments.
pub fn run(cli: &Cli) -> Result<Output, UsageError> {
    validate(&cli.command)?;
    let as_json = cli.json;
    let out = match &cli.command {
        Command::Lambda { j } => {
            let lambda = lambda_rec(*j);
            Output::ok(poly_output(lambda.get(*j as usize), as_json))
        }
        Command::Matrix { n } => {
            let m = lehmer_matrix(*n as usize).expect("n >= 1");
            Output::ok(if as_json {
                json_line(json::matrix_to_json(&m))
            } else {
                render_matrix(&m)
            })
        }
        Command::Det { n } => Output::ok(poly_output(
            &det_closed(*n as usize).expect("n >= 1"),
            as_json,
        )),
        Command::Lu { n } => {
            let f = closed_factors(*n as usize).expect("n >= 1");
            Output::ok(if as_json {
                json_line(json::factors_to_json(&f))
            } else {
                render_factors(&f)
            })
        }
        Command::Verify { n } => {
            let n = *n as usize;
            let checks = verify_checks(n);
            let status = if checks.iter().all(|c| c.outcome.is_ok()) {
                Status::Success
            } else {
                Status::VerificationFailed
            };
            Output {
                stdout: render_verify(n, &checks, as_json),
                status,
            }
        }
        Command::Qbinom { n, k } => Output::ok(poly_output(&gauss_pascal(*n, *k), as_json)),
        Command::Limit { zdeg, qdeg } => {
            let s = limit_det(*zdeg, *qdeg);
            Output::ok(if as_json {
                json_line(json::series_to_json(&s))
            } else {
                s.to_string()
            })
        }
        Command::Stabilize { n, k } => {
            let a = stabilization_check(*n as usize, *k).map_err(|e| UsageError(e.to_string()))?;
            Output::ok(if as_json {
                let agreement = match a {
                    Agreement::Exact => json!("all"),
                    Agreement::Through(d) => json!(d),
                };
                json_line(json!({ "n": n, "k": k, "agreement": agreement }))
            } else {
                format!("{a}\n")
            })
        }
        Command::Dyck { m, h } => {
            let count = dyck_count(*m, *h);
            Output::ok(if as_json {
                json_line(json!({ "m": m, "h": h, "count": count.to_string() }))
            } else {
                format!("{count}\n")
            })
        }
    };
    Ok(out)
}
