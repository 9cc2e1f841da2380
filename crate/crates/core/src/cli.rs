//! Command-line interface.

use std::ffi::OsString;
use std::io::{self, BufWriter, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{self, Context, PluckerVar, Tableau};
use crate::maps::{self, GeneratorFamily};
use crate::polyring::{Polynomial, Variable};
use crate::straighten;
use crate::syzygy;

#[derive(Parser, Debug)]
#[command(
    name = "qgrass",
    version,
    about = "Straightening, sagbi and Gröbner computations for quantum Grassmannians"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write lattice elements with single-digit columns as e.g. 235^2.
    #[arg(long, global = true)]
    compact: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
struct CtxArgs {
    /// Number of rows.
    #[arg(long)]
    p: usize,
    /// Column surplus; matrices have m+p columns.
    #[arg(long)]
    m: usize,
    /// Degree of the matrix entries in t (default: ceil(q/p)).
    #[arg(long)]
    n: Option<usize>,
    /// Shift bound (default: n*p, or 0 when n is not given).
    #[arg(long)]
    q: Option<usize>,
}

impl CtxArgs {
    fn context(&self) -> Result<Context> {
        match (self.n, self.q) {
            (Some(n), Some(q)) => Context::new(self.p, self.m, n, q),
            (None, Some(q)) => Context::with_q(self.p, self.m, q),
            (Some(n), None) => Context::full(self.p, self.m, n),
            (None, None) => Context::new(self.p, self.m, 0, 0),
        }
    }
}

#[derive(Args, Debug, Clone)]
struct IntervalArg {
    /// Restrict to the closed interval [BOT, TOP].
    #[arg(long, num_args = 2, value_names = ["BOT", "TOP"])]
    interval: Option<Vec<PluckerVar>>,
}

impl IntervalArg {
    fn get(&self) -> Option<(PluckerVar, PluckerVar)> {
        self.interval.as_ref().map(|v| (v[0], v[1]))
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Elements, incomparable pairs or ranks of the lattice.
    Poset {
        #[arg(value_enum)]
        what: PosetWhat,
        /// Element whose rank to print (rank only).
        var: Option<PluckerVar>,
        #[command(flatten)]
        ctx: CtxArgs,
        #[command(flatten)]
        interval: IntervalArg,
    },
    /// Number of maximal chains.
    Degree {
        #[command(flatten)]
        ctx: CtxArgs,
        #[command(flatten)]
        interval: IntervalArg,
    },
    /// Coefficient of t^a in the alpha-th maximal minor of M(t).
    Phi {
        var: PluckerVar,
        #[command(flatten)]
        ctx: CtxArgs,
    },
    /// Leading monomial of phi in closed form.
    Psi {
        var: PluckerVar,
        #[command(flatten)]
        ctx: CtxArgs,
    },
    /// Row-consecutive maximal minor of the stacked matrix.
    Chi {
        var: PluckerVar,
        #[command(flatten)]
        ctx: CtxArgs,
    },
    /// Expansion into maximal minors of the level-concatenated matrix.
    Pi {
        var: PluckerVar,
        #[command(flatten)]
        ctx: CtxArgs,
    },
    /// Schubert specialization mask and generator images.
    Schubert {
        top: PluckerVar,
        /// Lower end of a skew specialization.
        #[arg(long)]
        skew: Option<PluckerVar>,
        #[command(flatten)]
        ctx: CtxArgs,
    },
    /// Straightening relation of an incomparable pair.
    Straighten {
        gamma: PluckerVar,
        delta: PluckerVar,
        #[command(flatten)]
        ctx: CtxArgs,
        #[command(flatten)]
        interval: IntervalArg,
    },
    /// Reduced Gröbner basis of the quadratic relations.
    Groebner {
        #[command(flatten)]
        ctx: CtxArgs,
        #[command(flatten)]
        interval: IntervalArg,
    },
    /// Subduction of every product of an incomparable pair.
    SagbiCheck {
        #[command(flatten)]
        ctx: CtxArgs,
        #[command(flatten)]
        interval: IntervalArg,
    },
    /// Van der Waerden syzygy of a two-row tableau.
    Syzygy {
        #[arg(value_enum)]
        kind: SyzygyKind,
        /// Top row of the tableau
        row1: PluckerVar,
        /// Bottom row of the tableau
        row2: PluckerVar,
        #[command(flatten)]
        ctx: CtxArgs,
    },
    /// Classical quadrics evaluated on polynomials in t.
    Obvious {
        /// Print rank and kernel dimension instead of the relations.
        #[arg(long)]
        rank: bool,
        #[command(flatten)]
        ctx: CtxArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PosetWhat {
    List,
    Pairs,
    Rank,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SyzygyKind {
    /// Shuffle syzygy of the tableau
    W,
    /// Its lift to a relation among the generator images
    V,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code: 0 on success, 1 on usage errors, 2 on mathematical failures.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let res = run(&cli, &mut out);
    let flushed = out.flush();
    match res {
        Ok(code) => {
            if let Err(e) = flushed {
                eprintln!("error: {e}");
                return 1;
            }
            code
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
        Err(CliError::Math(e)) => {
            eprintln!("error: {e}");
            if e.is_mathematical() {
                2
            } else {
                1
            }
        }
    }
}

enum CliError {
    Io(io::Error),
    Math(Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

struct Emitter<'a> {
    out: &'a mut dyn Write,
    format: Format,
    compact: bool,
}

impl Emitter<'_> {
    fn var(&self, u: &PluckerVar) -> String {
        u.to_text(self.compact)
    }

    fn json(&mut self, v: &Value) -> std::result::Result<(), CliError> {
        writeln!(self.out, "{v}")?;
        Ok(())
    }

    fn poly<V: Variable>(&mut self, f: &Polynomial<V>) -> std::result::Result<(), CliError> {
        if !f.is_integral() {
            return Err(Error::Inconsistent("emitted polynomial has non-integer coefficients".into()).into());
        }
        match self.format {
            Format::Text => {
                f.write_text_to(&mut self.out, self.compact)?;
                writeln!(self.out)?;
            }
            Format::Json => self.json(&f.to_json())?,
        }
        Ok(())
    }
}

fn checked(ctx: &Context, u: &PluckerVar) -> Result<()> {
    ctx.check_member(u)
}

fn family(ctx: &Context, interval: Option<(PluckerVar, PluckerVar)>) -> Result<GeneratorFamily> {
    match interval {
        Some((lo, hi)) => GeneratorFamily::skew(ctx, &lo, &hi),
        None => GeneratorFamily::quantum(ctx),
    }
}

fn run(cli: &Cli, out: &mut dyn Write) -> std::result::Result<i32, CliError> {
    let mut em = Emitter {
        out,
        format: cli.format,
        compact: cli.compact,
    };
    let json = cli.format == Format::Json;
    match &cli.cmd {
        Cmd::Poset {
            what,
            var,
            ctx,
            interval,
        } => {
            let ctx = ctx.context()?;
            let iv = interval.get();
            let iv_ref = iv.as_ref().map(|(a, b)| (a, b));
            match what {
                PosetWhat::List => {
                    let elems = lattice::enumerate(&ctx, iv_ref)?;
                    if json {
                        let v: Vec<String> = elems.iter().map(|u| em.var(u)).collect();
                        em.json(&json!(v))?;
                    } else {
                        for u in &elems {
                            let s = em.var(u);
                            writeln!(em.out, "{s}")?;
                        }
                    }
                }
                PosetWhat::Pairs => {
                    let pairs = lattice::incomparable_pairs(&ctx, iv_ref)?;
                    if json {
                        let v: Vec<[String; 2]> = pairs.iter().map(|(a, b)| [em.var(a), em.var(b)]).collect();
                        em.json(&json!(v))?;
                    } else {
                        for (a, b) in &pairs {
                            let (a, b) = (em.var(a), em.var(b));
                            writeln!(em.out, "{a} {b}")?;
                        }
                    }
                }
                PosetWhat::Rank => {
                    let elems = match var {
                        Some(u) => {
                            checked(&ctx, u)?;
                            vec![*u]
                        }
                        None => lattice::enumerate(&ctx, iv_ref)?,
                    };
                    if json {
                        let v: Vec<Value> = elems
                            .iter()
                            .map(|u| json!({"var": em.var(u), "rank": lattice::rank(u, &ctx)}))
                            .collect();
                        em.json(&if var.is_some() { v[0].clone() } else { json!(v) })?;
                    } else if var.is_some() {
                        writeln!(em.out, "{}", lattice::rank(&elems[0], &ctx))?;
                    } else {
                        for u in &elems {
                            let s = em.var(u);
                            writeln!(em.out, "{s} {}", lattice::rank(u, &ctx))?;
                        }
                    }
                }
            }
        }
        Cmd::Degree { ctx, interval } => {
            let ctx = ctx.context()?;
            let iv = interval.get();
            let n = lattice::count_maximal_chains(&ctx, iv.as_ref().map(|(a, b)| (a, b)))?;
            if json {
                em.json(&json!({"maximal_chains": n.to_string()}))?;
            } else {
                writeln!(em.out, "{n}")?;
            }
        }
        Cmd::Phi { var, ctx } => {
            let ctx = ctx.context()?;
            checked(&ctx, var)?;
            em.poly(&maps::phi(var, &ctx)?)?;
        }
        Cmd::Psi { var, ctx } => {
            let ctx = ctx.context()?;
            checked(&ctx, var)?;
            let m = maps::psi(var, &ctx);
            em.poly(&Polynomial::term(crate::Coeff::one(), m))?;
        }
        Cmd::Chi { var, ctx } => {
            let ctx = ctx.context()?;
            checked(&ctx, var)?;
            em.poly(&maps::chi(var, &ctx)?)?;
        }
        Cmd::Pi { var, ctx } => {
            let ctx = ctx.context()?;
            checked(&ctx, var)?;
            em.poly(&maps::pi(var, &ctx)?)?;
        }
        Cmd::Schubert { top, skew, ctx } => {
            let ctx = ctx.context()?;
            let mask = maps::schubert_mask(top, skew.as_ref(), &ctx)?;
            let elems = match skew {
                Some(b) => lattice::enumerate(&ctx, Some((b, top)))?,
                None => {
                    let bottom = ctx.bottom();
                    lattice::enumerate(&ctx, Some((&bottom, top)))?
                }
            };
            let images: Vec<(PluckerVar, Polynomial<crate::XVar>)> = elems
                .iter()
                .map(|u| Ok((*u, maps::image(u, Some(&mask), &ctx)?)))
                .collect::<Result<_>>()?;
            if json {
                let zeroed: Vec<[u8; 3]> = mask.zeroed.iter().map(|x| [x.row, x.col, x.level]).collect();
                let imgs: Vec<Value> = images
                    .iter()
                    .map(|(u, f)| json!({"var": em.var(u), "image": f.to_json()}))
                    .collect();
                em.json(&json!({"zeroed": zeroed, "images": imgs}))?;
            } else {
                let zeroed: Vec<String> = mask.zeroed.iter().map(|x| x.to_string()).collect();
                writeln!(em.out, "zeroed: {}", zeroed.join(" "))?;
                for (u, f) in &images {
                    let s = em.var(u);
                    write!(em.out, "{s} = ")?;
                    em.poly(f)?;
                }
            }
        }
        Cmd::Straighten {
            gamma,
            delta,
            ctx,
            interval,
        } => {
            let ctx = ctx.context()?;
            checked(&ctx, gamma)?;
            checked(&ctx, delta)?;
            let fam = family(&ctx, interval.get())?;
            let s = straighten::straightening_relation(gamma, delta, &fam)?;
            em.poly(&s.poly)?;
        }
        Cmd::Groebner { ctx, interval } => {
            let ctx = ctx.context()?;
            let fam = family(&ctx, interval.get())?;
            let gb = straighten::reduced_groebner(&fam)?;
            if json {
                let v: Vec<Value> = gb
                    .iter()
                    .map(|q| json!({"lead_pair": [em.var(&q.lead_pair.0), em.var(&q.lead_pair.1)], "poly": q.poly.to_json()}))
                    .collect();
                em.json(&json!(v))?;
            } else {
                for q in &gb {
                    em.poly(&q.poly)?;
                }
            }
        }
        Cmd::SagbiCheck { ctx, interval } => {
            let ctx = ctx.context()?;
            let fam = family(&ctx, interval.get())?;
            let report = straighten::sagbi_check(&fam)?;
            if json {
                em.json(&report.to_json())?;
            } else {
                writeln!(em.out, "context: {}", report.context)?;
                writeln!(em.out, "pairs: {}", report.pairs_total)?;
                writeln!(em.out, "failures: {}", report.failures.len())?;
                for f in &report.failures {
                    let (a, b) = (em.var(&f.pair.0), em.var(&f.pair.1));
                    writeln!(em.out, "  {a} {b}: {}", f.witness)?;
                }
            }
            if !report.passed() {
                eprintln!(
                    "error: {} pairs have nonzero subduction remainder",
                    report.failures.len()
                );
                return Ok(2);
            }
        }
        Cmd::Syzygy { kind, row1, row2, ctx } => {
            let ctx = ctx.context()?;
            let t = Tableau::new(vec![*row1, *row2]);
            let f = match kind {
                SyzygyKind::W => syzygy::vdw_skew_w(&t, &ctx)?,
                SyzygyKind::V => syzygy::vdw_quantum_v(&t, &GeneratorFamily::quantum(&ctx)?)?,
            };
            em.poly(&f)?;
        }
        Cmd::Obvious { rank, ctx } => {
            let ctx = ctx.context()?;
            if *rank {
                let r = syzygy::obvious_report(&ctx)?;
                if json {
                    em.json(&r.to_json())?;
                } else {
                    writeln!(em.out, "generators: {}", r.generators)?;
                    writeln!(em.out, "rank: {}", r.rank)?;
                    writeln!(em.out, "kernel_dim: {}", r.kernel_dim)?;
                    writeln!(em.out, "deficit: {}", r.deficit)?;
                }
            } else {
                let rels = syzygy::obvious_relations(&ctx)?;
                if json {
                    let v: Vec<Value> = rels.iter().map(|f| f.to_json()).collect();
                    em.json(&json!(v))?;
                } else {
                    for f in &rels {
                        em.poly(f)?;
                    }
                }
            }
        }
    }
    Ok(0)
}
