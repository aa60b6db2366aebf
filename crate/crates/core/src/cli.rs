//! Command-line front end. [`run`] parses arguments, executes one pipeline
//! and returns the rendered output with its exit status:
//!
//! | status | meaning |
//! |--------|---------|
//! | 0 | success, or a true/positive verdict |
//! | 1 | false verdict (inconsistent, not reproductive, proven infeasible) |
//! | 2 | usage or input error |
//! | 3 | the representability probe gave up (`Unknown`) |

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::axb::{consistency_residual, penrose_general_solution, shifted_general_solution, GeneralSolutionMap};
use crate::kron::{kronecker, mat, solve_axb_via_kron, vec as vectorize};
use crate::linsys::{solve_left, solve_right, AffineSolution, LinsysStep};
use crate::mxfile::MatrixDocument;
use crate::oneinv::{canonical_one_inverse, OneInverseFamily, ParameterNames};
use crate::polyring::{matrix_variables, Symbols};
use crate::report::{Fact, Report, Step};
use crate::represent::{
    default_names, probe_with_product, symbolic_product_named, ProbeBudget, RepresentabilityVerdict, DEFAULT_SEED,
};
use crate::{Error, ExactMatrix, GaussianRational};

#[derive(Debug, Parser)]
#[command(name = "ginv", version, about = "Exact {1}-inverses and solutions of AXB = C")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Input `.mx` file.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the probe's sampled points.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Q, P and rank with Q·M·P = E_a.
    Rnf {
        #[arg(long, default_value = "A")]
        matrix: String,
    },
    /// The parametric family of {1}-inverses, or one member of it.
    Ginverse {
        #[arg(long, default_value = "A")]
        matrix: String,
        /// Comma-separated parameter names (U, V, W order, row-major).
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
        /// Matrix name in the file for block U (zero when omitted).
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        v: Option<String>,
        #[arg(long)]
        w: Option<String>,
    },
    /// General solution of A·X·B = C.
    Solve {
        /// Particular solution to shift around instead of A⁽¹⁾·C·B⁽¹⁾.
        #[arg(long)]
        particular: Option<String>,
    },
    /// Solve A·X·B = C as (A ⊗ Bᵀ)·vec(X) = vec(C).
    SolveKron {
        /// Matrix to test for membership in the solution set.
        #[arg(long)]
        candidate: Option<String>,
    },
    /// General solution of A·x = c (right) or x·B = c (left).
    Linsys {
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// Coefficient matrix; defaults to A (right) or B (left).
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long, default_value = "c")]
        rhs: String,
    },
    /// Whether A·A⁽¹⁾·C·B⁽¹⁾·B = C.
    CheckConsistency,
    /// Whether the general solution around a particular solution is reproductive.
    CheckReproductive {
        #[arg(long)]
        particular: Option<String>,
    },
    /// Decide whether a solution equals A⁽¹⁾·C·B⁽¹⁾ for some {1}-inverses.
    Represent {
        #[arg(long)]
        candidate: String,
        /// Sampled points per parameter group in the fallback search.
        #[arg(long, default_value_t = ProbeBudget::default().samples)]
        samples: usize,
    },
    /// Full derivation for an A·X·B = C instance.
    Report {
        #[arg(long)]
        candidate: Option<String>,
    },
}

/// Exit status and rendered streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the tool on `args` (without the program name).
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("ginv".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let status = e.exit_code();
            let text = e.render().to_string();
            return if status == 0 {
                Outcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    status: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let echo = args.join(" ");
    match execute(&cli, echo) {
        Ok((report, status)) => Outcome {
            status,
            stdout: if cli.global.json {
                report.to_json()
            } else {
                report.to_text()
            },
            stderr: String::new(),
        },
        Err(Failure(message)) => Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

struct Inputs<'a> {
    doc: &'a MatrixDocument,
    source: String,
    report: Report,
}

impl Inputs<'_> {
    fn take(&mut self, name: &str) -> Result<ExactMatrix, Failure> {
        let m = self
            .doc
            .get(name)
            .ok_or_else(|| Failure(format!("{}: matrix {name} is not defined", self.source)))?
            .clone();
        self.report.input(name, &m);
        Ok(m)
    }
}

fn execute(cli: &Cli, echo: String) -> Result<(Report, i32), Failure> {
    let path = cli
        .global
        .file
        .as_ref()
        .ok_or_else(|| Failure("--file is required".into()))?;
    let doc = MatrixDocument::read(path)?;
    let mut io = Inputs {
        doc: &doc,
        source: path.display().to_string(),
        report: Report::new(echo),
    };
    let status = match &cli.command {
        Command::Rnf { matrix } => cmd_rnf(&mut io, matrix)?,
        Command::Ginverse { matrix, names, u, v, w } => cmd_ginverse(
            &mut io,
            matrix,
            names.as_deref(),
            [u.as_deref(), v.as_deref(), w.as_deref()],
        )?,
        Command::Solve { particular } => cmd_solve(&mut io, particular.as_deref())?,
        Command::SolveKron { candidate } => cmd_solve_kron(&mut io, candidate.as_deref())?,
        Command::Linsys { side, matrix, rhs } => cmd_linsys(&mut io, *side, matrix.as_deref(), rhs)?,
        Command::CheckConsistency => cmd_consistency(&mut io)?,
        Command::CheckReproductive { particular } => cmd_reproductive(&mut io, particular.as_deref())?,
        Command::Represent { candidate, samples } => {
            let budget = ProbeBudget {
                samples: *samples,
                seed: cli.global.seed,
                ..ProbeBudget::default()
            };
            cmd_represent(&mut io, candidate, budget)?
        }
        Command::Report { candidate } => {
            let budget = ProbeBudget {
                seed: cli.global.seed,
                ..ProbeBudget::default()
            };
            cmd_report(&mut io, candidate.as_deref(), budget)?
        }
    };
    Ok((io.report, status))
}

fn equation(io: &mut Inputs<'_>) -> Result<(ExactMatrix, ExactMatrix, ExactMatrix), Failure> {
    Ok((io.take("A")?, io.take("B")?, io.take("C")?))
}

fn rnf_step(title: &str, name: &str, m: &ExactMatrix) -> Step {
    let f = m.rank_normal_form();
    Step::new(title)
        .with(Fact::value(format!("rank({name})"), f.rank))
        .with(Fact::matrix("Q", &f.q))
        .with(Fact::matrix("P", &f.p))
        .with(Fact::value(format!("Q·{name}·P = E_{}", f.rank), f.verifies(m)))
}

fn cmd_rnf(io: &mut Inputs<'_>, name: &str) -> Result<i32, Failure> {
    let m = io.take(name)?;
    io.report.step(rnf_step("rank normal form", name, &m));
    io.report.result.push(Fact::value("rank", m.rank()));
    Ok(0)
}

fn family_facts(step: &mut Step, name: &str, family: &OneInverseFamily<GaussianRational>) {
    let s = family.block_shapes();
    step.push(Fact::value(format!("rank({name})"), family.rank()));
    step.push(Fact::value("parameters k = m·n − a²", family.parameter_count()));
    step.push(Fact::value("blocks U, V, W", format!("{}, {}, {}", s.u, s.v, s.w)));
}

fn cmd_ginverse(
    io: &mut Inputs<'_>,
    name: &str,
    names: Option<&[String]>,
    blocks: [Option<&str>; 3],
) -> Result<i32, Failure> {
    let m = io.take(name)?;
    let family = OneInverseFamily::new(&m);
    let mut step = Step::new(format!("{{1}}-inverses of {name}"));
    family_facts(&mut step, name, &family);
    if blocks.iter().any(Option::is_some) {
        let zero = family.zero_blocks();
        let mut pick = |slot: Option<&str>, default: ExactMatrix| match slot {
            Some(n) => io.take(n),
            None => Ok(default),
        };
        let u = pick(blocks[0], zero.u)?;
        let v = pick(blocks[1], zero.v)?;
        let w = pick(blocks[2], zero.w)?;
        let g = family.instantiate(&u, &v, &w)?;
        step.push(Fact::matrix(format!("{name}⁽¹⁾"), &g));
        step.push(Fact::value(
            format!("{name}·{name}⁽¹⁾·{name} = {name}"),
            crate::oneinv::is_one_inverse(&m, &g)?,
        ));
    } else {
        let scheme = match names {
            Some(list) => ParameterNames::explicit(list),
            None => default_names(family.parameter_count(), 0).0,
        };
        let mut symbols = Symbols::new();
        let sym = family.symbolic(&scheme, &mut symbols)?;
        let params: Vec<&str> = sym.parameters.iter().map(|v| v.name()).collect();
        step.push(Fact::value("parameter names", params.join(", ")));
        step.push(Fact::symbolic(format!("{name}⁽¹⁾"), &sym.matrix));
        step.push(Fact::matrix(format!("{name}⁽¹⁾ at zero blocks"), &family.canonical()));
    }
    io.report.step(step);
    io.report
        .result
        .push(Fact::value("parameters", family.parameter_count()));
    Ok(0)
}

fn map_facts(step: &mut Step, gs: &GeneralSolutionMap<GaussianRational>) {
    step.push(Fact::matrix("X0", &gs.x0));
    step.push(Fact::matrix("L = A⁽¹⁾·A", &gs.l));
    step.push(Fact::matrix("R = B·B⁽¹⁾", &gs.r));
    step.push(Fact::value("L² = L and R² = R", gs.has_projector_factors()));
    step.push(Fact::matrix("X0 − L·X0·R", &gs.reproductivity_defect()));
    step.push(Fact::value("reproductive", gs.is_reproductive()));
    step.push(Fact::value("solution set dimension", gs.solution_dimension()));
}

fn solution_map(
    io: &mut Inputs<'_>,
    particular: Option<&str>,
) -> Result<Result<(GeneralSolutionMap<GaussianRational>, String), ExactMatrix>, Failure> {
    let (a, b, c) = equation(io)?;
    let result = match particular {
        Some(name) => {
            let x0 = io.take(name)?;
            shifted_general_solution(&a, &b, &c, &x0).map(|g| (g, format!("shifted around {name}")))
        }
        None => penrose_general_solution(&a, &b, &c).map(|g| (g, "Penrose, X0 = A⁽¹⁾·C·B⁽¹⁾".to_string())),
    };
    match result {
        Ok(x) => Ok(Ok(x)),
        Err(Error::Inconsistent { residual }) => Ok(Err(residual)),
        Err(e) => Err(e.into()),
    }
}

fn cmd_solve(io: &mut Inputs<'_>, particular: Option<&str>) -> Result<i32, Failure> {
    match solution_map(io, particular)? {
        Ok((gs, kind)) => {
            let mut step = Step::new(format!("general solution X = X0 + Y − L·Y·R ({kind})"));
            map_facts(&mut step, &gs);
            io.report.step(step);
            io.report.result.push(Fact::value("consistent", true));
            io.report.result.push(Fact::matrix("particular solution", &gs.x0));
            io.report.result.push(Fact::value("dimension", gs.solution_dimension()));
            io.report.verdict = Some("consistent".into());
            Ok(0)
        }
        Err(residual) => {
            io.report
                .step(Step::new("consistency").with(Fact::matrix("A·A⁽¹⁾·C·B⁽¹⁾·B − C", &residual)));
            io.report.verdict = Some("inconsistent".into());
            Ok(1)
        }
    }
}

fn linsys_facts(step: &mut Step, sol: &AffineSolution<GaussianRational>) {
    for s in &sol.trace {
        match s {
            LinsysStep::Transposed => step.push(Fact::text("solved through the transposed system")),
            LinsysStep::NormalForm { rank, q, p } => {
                step.push(Fact::value("rank", rank));
                step.push(Fact::matrix("Q", q));
                step.push(Fact::matrix("P", p));
            }
            LinsysStep::Transformed { c_prime } => step.push(Fact::matrix("c' = Q·c", &c_prime.transpose())),
            LinsysStep::Consistent { zero_tail } => step.push(Fact::text(format!(
                "consistent: the last {zero_tail} entries of c' vanish"
            ))),
            LinsysStep::Pivot { j, value } => step.push(Fact::value(format!("pivot c'_{j}"), value)),
            LinsysStep::Homogeneous => step.push(Fact::text("homogeneous right-hand side; V sweep skipped")),
            LinsysStep::VForm { v } => step.push(Fact::symbolic("V", v)),
            LinsysStep::Particular { x } => step.push(Fact::matrix("particular", x)),
            LinsysStep::Directrix { basis, dimension } => {
                step.push(Fact::matrix("directrix basis", basis));
                step.push(Fact::value("dimension", dimension));
            }
        }
    }
}

fn cmd_solve_kron(io: &mut Inputs<'_>, candidate: Option<&str>) -> Result<i32, Failure> {
    let (a, b, c) = equation(io)?;
    let sol = match solve_axb_via_kron(&a, &b, &c) {
        Ok(s) => s,
        Err(Error::InconsistentSystem { tail }) => {
            let tail: Vec<String> = tail.iter().map(ToString::to_string).collect();
            io.report
                .step(Step::new("consistency").with(Fact::value("nonzero tail of Q·vec(C)", tail.join(" "))));
            io.report.verdict = Some("inconsistent".into());
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    io.report.step(
        Step::new("Kronecker form (A ⊗ Bᵀ)·vec(X) = vec(C)")
            .with(Fact::matrix("A ⊗ Bᵀ", &sol.system))
            .with(Fact::matrix("vec(C)ᵀ", &sol.rhs.transpose())),
    );
    let mut step = Step::new("linear system");
    linsys_facts(&mut step, &sol.solution);
    io.report.step(step);
    io.report
        .result
        .push(Fact::matrix("particular solution", &sol.particular()));
    io.report.result.push(Fact::value("dimension", sol.dimension()));
    io.report.verdict = Some("consistent".into());
    if let Some(name) = candidate {
        let x = io.take(name)?;
        let member = sol.contains(&x);
        io.report
            .result
            .push(Fact::value(format!("{name} in solution set"), member));
        if !member {
            return Ok(1);
        }
    }
    Ok(0)
}

fn cmd_linsys(io: &mut Inputs<'_>, side: SideArg, matrix: Option<&str>, rhs: &str) -> Result<i32, Failure> {
    let name = matrix.unwrap_or(match side {
        SideArg::Right => "A",
        SideArg::Left => "B",
    });
    let m = io.take(name)?;
    let c = io.take(rhs)?;
    let solved = match side {
        SideArg::Right => solve_right(&m, &c),
        SideArg::Left => solve_left(&m, &c),
    };
    let title = match side {
        SideArg::Right => format!("{name}·x = {rhs}"),
        SideArg::Left => format!("x·{name} = {rhs}"),
    };
    match solved {
        Ok(sol) => {
            let mut step = Step::new(title);
            linsys_facts(&mut step, &sol);
            io.report.step(step);
            io.report
                .result
                .push(Fact::matrix("particular solution", &sol.particular));
            io.report.result.push(Fact::value("dimension", sol.dimension));
            io.report.verdict = Some("consistent".into());
            Ok(0)
        }
        Err(Error::InconsistentSystem { tail }) => {
            let tail: Vec<String> = tail.iter().map(ToString::to_string).collect();
            io.report
                .step(Step::new(title).with(Fact::value("nonzero tail of Q·c", tail.join(" "))));
            io.report.verdict = Some("inconsistent".into());
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

fn consistency_step(a: &ExactMatrix, b: &ExactMatrix, c: &ExactMatrix) -> Result<(Step, bool), Failure> {
    let a1 = canonical_one_inverse(a);
    let b1 = canonical_one_inverse(b);
    let residual = consistency_residual(a, b, c, &a1, &b1)?;
    let ok = residual.is_zero();
    let step = Step::new("consistency A·A⁽¹⁾·C·B⁽¹⁾·B = C")
        .with(Fact::matrix("A⁽¹⁾ (zero blocks)", &a1))
        .with(Fact::matrix("B⁽¹⁾ (zero blocks)", &b1))
        .with(Fact::matrix("A·A⁽¹⁾·C·B⁽¹⁾·B − C", &residual))
        .with(Fact::value("consistent", ok));
    Ok((step, ok))
}

fn cmd_consistency(io: &mut Inputs<'_>) -> Result<i32, Failure> {
    let (a, b, c) = equation(io)?;
    let (step, ok) = consistency_step(&a, &b, &c)?;
    io.report.step(step);
    io.report.verdict = Some(if ok { "consistent" } else { "inconsistent" }.into());
    Ok(if ok { 0 } else { 1 })
}

fn cmd_reproductive(io: &mut Inputs<'_>, particular: Option<&str>) -> Result<i32, Failure> {
    match solution_map(io, particular)? {
        Ok((gs, kind)) => {
            let lx0r = &(&gs.l * &gs.x0) * &gs.r;
            io.report.step(
                Step::new(format!("reproductivity of X = X0 + Y − L·Y·R ({kind})"))
                    .with(Fact::matrix("X0", &gs.x0))
                    .with(Fact::matrix("L·X0·R", &lx0r))
                    .with(Fact::matrix("X0 − L·X0·R", &gs.reproductivity_defect())),
            );
            let ok = gs.is_reproductive();
            io.report.verdict = Some(if ok { "reproductive" } else { "not reproductive" }.into());
            Ok(if ok { 0 } else { 1 })
        }
        Err(residual) => {
            io.report
                .step(Step::new("consistency").with(Fact::matrix("A·A⁽¹⁾·C·B⁽¹⁾·B − C", &residual)));
            io.report.verdict = Some("inconsistent".into());
            Ok(1)
        }
    }
}

fn probe_steps(
    io: &mut Inputs<'_>,
    a: &ExactMatrix,
    b: &ExactMatrix,
    c: &ExactMatrix,
    name: &str,
    x: &ExactMatrix,
    budget: ProbeBudget,
) -> Result<i32, Failure> {
    let (na, nb) = default_names(
        OneInverseFamily::new(a).parameter_count(),
        OneInverseFamily::new(b).parameter_count(),
    );
    let product = symbolic_product_named(a, b, c, &na, &nb)?;
    let probe = probe_with_product(a, b, c, x, product, budget)?;
    let mut step = Step::new(format!("representability of {name} as A⁽¹⁾·C·B⁽¹⁾"));
    step.push(Fact::symbolic(format!("A⁽¹⁾·C·B⁽¹⁾ − {name}"), &probe.system));
    let status = match &probe.verdict {
        RepresentabilityVerdict::ProvenInfeasible(proof) => {
            for (k, s) in proof.steps.iter().enumerate() {
                step.push(Fact::text(format!("[{}] {s}", k + 1)));
            }
            step.push(Fact::value("proof replays", proof.replay(&probe.system)));
            1
        }
        RepresentabilityVerdict::Witness(w) => {
            for (var, value) in &w.assignment {
                step.push(Fact::value(var.name(), value));
            }
            step.push(Fact::matrix("A⁽¹⁾", &w.left));
            step.push(Fact::matrix("B⁽¹⁾", &w.right));
            step.push(Fact::value("witness verifies", w.verify(a, b, c, x)));
            0
        }
        RepresentabilityVerdict::Unknown(reason) => {
            step.push(Fact::text(reason.clone()));
            3
        }
    };
    io.report.step(step);
    io.report.verdict = Some(probe.verdict.label().into());
    Ok(status)
}

fn cmd_represent(io: &mut Inputs<'_>, candidate: &str, budget: ProbeBudget) -> Result<i32, Failure> {
    let (a, b, c) = equation(io)?;
    let x = io.take(candidate)?;
    probe_steps(io, &a, &b, &c, candidate, &x, budget)
}

fn cmd_report(io: &mut Inputs<'_>, candidate: Option<&str>, budget: ProbeBudget) -> Result<i32, Failure> {
    let (a, b, c) = equation(io)?;
    io.report.step(
        Step::new("equation A·X·B = C")
            .with(Fact::value("A", a.shape()))
            .with(Fact::value("B", b.shape()))
            .with(Fact::value("C", c.shape()))
            .with(Fact::value("X", crate::Shape(a.cols(), b.rows()))),
    );
    io.report.step(rnf_step("rank normal form of A", "A", &a));
    io.report.step(rnf_step("rank normal form of B", "B", &b));

    let fa = OneInverseFamily::new(&a);
    let fb = OneInverseFamily::new(&b);
    let (na, nb) = default_names(fa.parameter_count(), fb.parameter_count());
    let mut symbols = Symbols::new();
    let sa = fa.symbolic(&na, &mut symbols)?;
    let sb = fb.symbolic(&nb, &mut symbols)?;
    let mut step = Step::new("general {1}-inverses");
    family_facts(&mut step, "A", &fa);
    step.push(Fact::symbolic("A⁽¹⁾", &sa.matrix));
    family_facts(&mut step, "B", &fb);
    step.push(Fact::symbolic("B⁽¹⁾", &sb.matrix));
    io.report.step(step);

    let (step, consistent) = consistency_step(&a, &b, &c)?;
    io.report.step(step);
    if !consistent {
        io.report.verdict = Some("inconsistent".into());
        return Ok(1);
    }

    let product = symbolic_product_named(&a, &b, &c, &na, &nb)?;
    let used: Vec<String> = matrix_variables(&product.matrix)
        .iter()
        .map(|v| v.name().to_string())
        .collect();
    io.report.step(
        Step::new("symbolic particular solution X0 = A⁽¹⁾·C·B⁽¹⁾")
            .with(Fact::symbolic("X0", &product.matrix))
            .with(Fact::value("parameters present", used.join(", "))),
    );

    let gs = penrose_general_solution(&a, &b, &c)?;
    let mut step = Step::new("Penrose general solution X = X0 + Y − L·Y·R");
    map_facts(&mut step, &gs);
    io.report.step(step);

    let sol = solve_axb_via_kron(&a, &b, &c)?;
    io.report.step(
        Step::new("Kronecker form (A ⊗ Bᵀ)·vec(X) = vec(C)")
            .with(Fact::matrix("A ⊗ Bᵀ", &kronecker(&a, &b.transpose())))
            .with(Fact::matrix("vec(C)ᵀ", &vectorize(&c).transpose())),
    );
    let mut step = Step::new("general solution of the Kronecker system");
    linsys_facts(&mut step, &sol.solution);
    step.push(Fact::matrix(
        "mat(particular)",
        &mat(&sol.solution.particular, sol.unknown.0, sol.unknown.1)?,
    ));
    io.report.step(step);
    io.report.result.push(Fact::value("consistent", true));
    io.report.result.push(Fact::value("dimension", sol.dimension()));
    io.report
        .result
        .push(Fact::value("Penrose map reproductive", gs.is_reproductive()));

    let Some(name) = candidate else {
        io.report.verdict = Some("consistent".into());
        return Ok(0);
    };
    let x = io.take(name)?;
    let shifted = shifted_general_solution(&a, &b, &c, &x)?;
    io.report.step(
        Step::new(format!("candidate {name}"))
            .with(Fact::value(format!("A·{name}·B = C"), true))
            .with(Fact::value(
                format!("vec({name}) in Kronecker solution set"),
                sol.contains(&x),
            ))
            .with(Fact::matrix(
                format!("{name} − L·{name}·R"),
                &shifted.reproductivity_defect(),
            ))
            .with(Fact::value("shifted map reproductive", shifted.is_reproductive())),
    );
    io.report.result.push(Fact::value(
        format!("map around {name} reproductive"),
        shifted.is_reproductive(),
    ));
    probe_steps(io, &a, &b, &c, name, &x, budget)
}
