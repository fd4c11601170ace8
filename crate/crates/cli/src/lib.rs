//! The `opkernel` command line.
//!
//! [`run_command`] takes the full argument vector and returns the exit
//! status with both output streams, so the binary and the tests share one
//! code path. Exit statuses:
//!
//! | status | meaning |
//! |---|---|
//! | 0 | success |
//! | 1 | syntax error or mixed algebras |
//! | 2 | `Phi` is not invertible |
//! | 3 | operator does not annihilate the kernel |
//! | 4 | `R` does not map the kernel into `ker K` |
//! | 64 | usage error |
//! | 70 | internal failure |

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use opkernel::algebras::{DifferenceAlgebra, GroupRingC5, QuaternionAlgebra, RationalDifferentialAlgebra};
use opkernel::text::{parse_element_list, parse_operator, ElementSyntax};
use opkernel::{Algebra, Error, KernelContext, KernelViolation, Operator, OperatorAlgebra};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SYNTAX: i32 = 1;
pub const EXIT_NOT_INVERTIBLE: i32 = 2;
pub const EXIT_NOT_IN_KERNEL: i32 = 3;
pub const EXIT_NOT_INTERTWINABLE: i32 = 4;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_SOFTWARE: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "opkernel", version, about = "Factor operators through the operator determined by a kernel")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// The constant c of the difference algebra, D g = g(n+1) + c g.
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    c: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AlgebraName {
    /// Rational functions of x with d/dx.
    Qx,
    /// Quaternions over rational functions of x with d/dx.
    Quat,
    /// Rational functions of n with D g = g(n+1) + c g.
    Diff,
    /// The group ring Z[C5] with r -> r^2.
    C5,
}

#[derive(Args, Debug)]
struct KernelArgs {
    #[arg(long, value_enum)]
    algebra: AlgebraName,

    /// Comma-separated kernel elements f_1, ..., f_k.
    #[arg(long, allow_hyphen_values = true)]
    kernel: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print K and the dual operators P_i.
    KernelOp {
        #[command(flatten)]
        kernel: KernelArgs,
    },
    /// Factor L = Q*K.
    Factor {
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long, allow_hyphen_values = true)]
        operator: String,
    },
    /// Print the operator of filtration k-1 sending each f_i to a target.
    Dual {
        #[command(flatten)]
        kernel: KernelArgs,
        /// Comma-separated targets, one per kernel element.
        #[arg(long, allow_hyphen_values = true)]
        targets: String,
    },
    /// Find Q with K*R = Q*K.
    Intertwine {
        #[command(flatten)]
        kernel: KernelArgs,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Apply an operator to elements.
    Verify {
        #[arg(long, value_enum)]
        algebra: AlgebraName,
        #[arg(long, allow_hyphen_values = true)]
        operator: String,
        /// Comma-separated elements to apply the operator to.
        #[arg(long, allow_hyphen_values = true)]
        on: String,
    },
}

impl Command {
    fn algebra(&self) -> AlgebraName {
        match self {
            Command::KernelOp { kernel }
            | Command::Factor { kernel, .. }
            | Command::Dual { kernel, .. }
            | Command::Intertwine { kernel, .. } => kernel.algebra,
            Command::Verify { algebra, .. } => *algebra,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. } | Error::MixedAlgebras { .. } => EXIT_SYNTAX,
        Error::NotInvertible(_) => EXIT_NOT_INVERTIBLE,
        Error::NotInKernel(_) => EXIT_NOT_IN_KERNEL,
        Error::NotIntertwinable(_) => EXIT_NOT_INTERTWINABLE,
        _ => EXIT_SOFTWARE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::MixedAlgebras { .. } => "MixedAlgebras",
        Error::NotAUnit(_) => "NotAUnit",
        Error::ShapeMismatch(_) => "ShapeMismatch",
        Error::NotInvertible(_) => "NotInvertible",
        Error::EmptyKernel => "EmptyKernel",
        Error::DegreeTooHigh { .. } => "DegreeTooHigh",
        Error::NotInKernel(_) => "NotInKernel",
        Error::NotIntertwinable(_) => "NotIntertwinable",
        Error::NotMonicizable(_) => "NotMonicizable",
        Error::VerificationFailed(_) => "VerificationFailed",
        Error::CorollaryViolated(_) => "CorollaryViolated",
        Error::Syntax { .. } => "SyntaxError",
    }
}

fn violations_json(v: &[KernelViolation]) -> Value {
    v.iter()
        .map(|e| json!({ "index": e.index, "element": e.element, "value": e.value }))
        .collect()
}

/// Text lines and JSON fields collected while a command runs.
#[derive(Default)]
struct Report {
    lines: Vec<String>,
    fields: Map<String, Value>,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn field(&mut self, key: &str, value: Value) {
        self.fields.insert(key.to_string(), value);
    }
}

fn op_json<E: std::fmt::Display>(op: &Operator<E>) -> Value {
    json!({ "coeffs": op.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>() })
}

fn strings<E: std::fmt::Display>(items: &[E]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

/// Wraps an operator in parentheses when it has more than one term.
fn factor_text<E: std::fmt::Display>(op: &Operator<E>) -> String {
    let s = op.to_string();
    if s.contains(" + ") || s.contains(" - ") {
        format!("({s})")
    } else {
        s
    }
}

fn build_context<'a, A: ElementSyntax>(
    ring: &'a OperatorAlgebra<A>,
    args: &KernelArgs,
    report: &mut Report,
) -> Result<KernelContext<'a, A>, Failure> {
    let kernel = parse_element_list(ring.base(), &args.kernel)?;
    report.field("kernel", json!(strings(&kernel)));
    let ctx = KernelContext::build(ring, kernel)?;
    report.field("K", op_json(ctx.kernel_operator()));
    report.line(format!("K = {}", ctx.kernel_operator()));
    Ok(ctx)
}

fn kernel_annihilated<A: Algebra>(ctx: &KernelContext<'_, A>, l: &Operator<A::Elem>) -> Result<bool, Error> {
    let alg = ctx.ring().base();
    Ok(ctx
        .leading_coefficients_by_apply(l)?
        .iter()
        .all(|v| alg.is_zero(v)))
}

fn execute<A: ElementSyntax>(ring: &OperatorAlgebra<A>, command: &Command, report: &mut Report) -> Result<(), Failure> {
    let alg = ring.base();
    match command {
        Command::KernelOp { kernel } => {
            let ctx = build_context(ring, kernel, report)?;
            let mut verified = kernel_annihilated(&ctx, ctx.kernel_operator())?;
            for (i, p) in ctx.duals().iter().enumerate() {
                report.line(format!("P_{} = {p}", i + 1));
                for (j, f) in ctx.kernel().iter().enumerate() {
                    let v = ring.apply(p, f)?;
                    verified &= if i == j { alg.is_one(&v) } else { alg.is_zero(&v) };
                }
            }
            report.field("P", ctx.duals().iter().map(op_json).collect());
            report.field("verified", json!(verified));
        }
        Command::Factor { kernel, operator } => {
            let ctx = build_context(ring, kernel, report)?;
            let l = parse_operator(ring, operator)?;
            report.field("L", op_json(&l));
            let q = ctx.factorize(&l)?;
            let verified = ring.equals(&ring.compose(&q, ctx.kernel_operator())?, &l)?;
            report.line(format!("Q = {q}"));
            report.line(format!(
                "L = Q*K: {l} = {}*{}",
                factor_text(&q),
                factor_text(ctx.kernel_operator())
            ));
            report.field("Q", op_json(&q));
            report.field("verified", json!(verified));
        }
        Command::Dual { kernel, targets } => {
            let ctx = build_context(ring, kernel, report)?;
            let targets = parse_element_list(alg, targets)?;
            if targets.len() != ctx.k() {
                return Err(Failure::Usage(format!(
                    "--targets has {} elements but the kernel has {}",
                    targets.len(),
                    ctx.k()
                )));
            }
            let p_hat = ctx.interpolate(&targets)?;
            let mut verified = true;
            for (f, t) in ctx.kernel().iter().zip(&targets) {
                verified &= &ring.apply(&p_hat, f)? == t;
            }
            report.line(format!("P_hat = {p_hat}"));
            report.field("targets", json!(strings(&targets)));
            report.field("P_hat", op_json(&p_hat));
            report.field("verified", json!(verified));
        }
        Command::Intertwine { kernel, r } => {
            let ctx = build_context(ring, kernel, report)?;
            let r = parse_operator(ring, r)?;
            report.field("R", op_json(&r));
            let q = ctx.intertwiner(&r)?;
            let k = ctx.kernel_operator();
            let verified = ring.equals(&ring.compose(&q, k)?, &ring.compose(k, &r)?)?;
            report.line(format!("Q = {q}"));
            report.line(format!(
                "K*R = Q*K: {}*{} = {}*{}",
                factor_text(k),
                factor_text(&r),
                factor_text(&q),
                factor_text(k)
            ));
            report.field("Q", op_json(&q));
            report.field("verified", json!(verified));
        }
        Command::Verify { operator, on, .. } => {
            let l = parse_operator(ring, operator)?;
            let elems = parse_element_list(alg, on)?;
            let mut values = Vec::new();
            for f in &elems {
                let v = ring.apply(&l, f)?;
                report.line(format!("L({f}) = {v}"));
                values.push(v.to_string());
            }
            report.field("L", op_json(&l));
            report.field("on", json!(strings(&elems)));
            report.field("values", json!(values));
            report.field("verified", json!(true));
        }
    }
    Ok(())
}

fn dispatch(cli: &Cli, report: &mut Report) -> Result<(), Failure> {
    let name = cli.command.algebra();
    report.field(
        "algebra",
        json!(name.to_possible_value().expect("no skipped variants").get_name()),
    );
    match name {
        AlgebraName::Qx => execute(&OperatorAlgebra::new(RationalDifferentialAlgebra::new()), &cli.command, report),
        AlgebraName::Quat => execute(&OperatorAlgebra::new(QuaternionAlgebra::new()), &cli.command, report),
        AlgebraName::C5 => execute(&OperatorAlgebra::new(GroupRingC5::new()), &cli.command, report),
        AlgebraName::Diff => {
            let c: BigRational = cli
                .c
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("--c expects a rational such as 2 or -1/3, got `{}`", cli.c)))?;
            report.field("c", json!(c.to_string()));
            execute(&OperatorAlgebra::new(DifferenceAlgebra::new(c)), &cli.command, report)
        }
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { exit: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Outcome { exit: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };

    let mut report = Report::default();
    let result = dispatch(&cli, &mut report);
    match (result, cli.json) {
        (Ok(()), false) => Outcome {
            exit: EXIT_OK,
            stdout: report.lines.iter().map(|l| format!("{l}\n")).collect(),
            stderr: String::new(),
        },
        (Ok(()), true) => Outcome {
            exit: EXIT_OK,
            stdout: render_json(&Value::Object(report.fields)),
            stderr: String::new(),
        },
        (Err(failure), json_mode) => {
            let (exit, kind, message, details) = match &failure {
                Failure::Usage(m) => (EXIT_USAGE, "Usage", m.clone(), Value::Null),
                Failure::Core(e) => {
                    let details = match e {
                        Error::NotInKernel(v) | Error::NotIntertwinable(v) => violations_json(v),
                        Error::Syntax { position, .. } => json!({ "position": position }),
                        _ => Value::Null,
                    };
                    (exit_code(e), error_kind(e), e.to_string(), details)
                }
            };
            if json_mode {
                let mut err = Map::new();
                err.insert("kind".into(), json!(kind));
                err.insert("message".into(), json!(message));
                if !details.is_null() {
                    err.insert("details".into(), details);
                }
                report.fields.insert("error".into(), Value::Object(err));
                Outcome { exit, stdout: render_json(&Value::Object(report.fields)), stderr: String::new() }
            } else {
                Outcome { exit, stdout: String::new(), stderr: format!("error: {message}\n") }
            }
        }
    }
}
