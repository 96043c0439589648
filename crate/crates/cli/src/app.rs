//! Verb dispatch for the `normpm` binary.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use normpm::bounds::{self, BoundReport};
use normpm::moves::{self, Bijection, DecompositionCase, SurgeryRecord};
use normpm::rigidity::{self, PartOutcome, RigidityReport};
use normpm::stacked;
use normpm::{catalog, verify, Complex, FaceVector};
use serde_json::Value;

use crate::error::CliError;
use crate::report::Report;
use crate::{record, scx, script};

#[derive(Debug, Parser)]
#[command(name = "normpm", version, about = "Normal pseudomanifolds: checks, surgery, rigidity and face-vector bounds")]
pub struct Cli {
    /// Emit reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a complex; exit 0 when it is a normal pseudomanifold.
    Check { input: Option<PathBuf> },
    /// Face vector of a complex, or `fvec check` on a raw face vector.
    Fvec(FvecArgs),
    /// Link of a face.
    Link {
        input: Option<PathBuf>,
        /// Comma-separated tokens; empty for the empty face.
        #[arg(long, default_value = "")]
        face: String,
    },
    /// Closed star of a vertex.
    Star {
        input: Option<PathBuf>,
        #[arg(long)]
        vertex: String,
    },
    /// Faces disjoint from a vertex set.
    Antistar {
        input: Option<PathBuf>,
        #[arg(long)]
        face: String,
    },
    /// Induced subcomplex on a vertex set.
    Induced {
        input: Option<PathBuf>,
        #[arg(long)]
        vertices: String,
    },
    /// Join of two vertex-disjoint complexes.
    Join { a: PathBuf, b: PathBuf },
    /// One-point suspension at vertex `u` with new vertex `v`.
    Suspend {
        input: Option<PathBuf>,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Starring, collapsing and replaying surgery records.
    #[command(subcommand)]
    Move(MoveCommand),
    /// Elementary handle addition and deletion.
    #[command(subcommand)]
    Handle(HandleCommand),
    /// Connected sum of two complexes along a facet bijection.
    Consum {
        a: PathBuf,
        b: PathBuf,
        /// `x:y,...` pairs from a facet of A to a facet of B.
        #[arg(long)]
        pairs: String,
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Generalised bistellar move replacing ball B1 by ball B2.
    Gbm {
        input: Option<PathBuf>,
        #[arg(long)]
        remove: PathBuf,
        #[arg(long)]
        insert: PathBuf,
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Reduce an orientable closed surface to smaller ones.
    Decompose {
        input: Option<PathBuf>,
        /// Write the pieces and the gluing record here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Stacked sphere generation and recognition.
    #[command(subcommand)]
    Stacked(StackedCommand),
    /// Exhaustive q-rigidity check; exit 0 when rigid.
    Rigidity {
        input: Option<PathBuf>,
        #[arg(long)]
        q: usize,
        #[arg(long, env = "NORMPM_WORKERS", default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = rigidity::DEFAULT_EXHAUSTIVE_LIMIT)]
        limit: usize,
        /// Include sweep counters, which depend on the worker count.
        #[arg(long)]
        stats: bool,
    },
    /// Lower bound inequalities for normal pseudomanifolds; exit 0 when they hold.
    Lbt {
        input: Option<PathBuf>,
        /// Use the conjectured bounds for non-simply-connected manifolds. The
        /// topology is asserted by the caller.
        #[arg(long)]
        nsc: bool,
    },
    /// Face vector of a k-stacked sphere from its prefix, or the k-stacked
    /// bounds on a complex.
    Glbc {
        input: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: Option<usize>,
        /// Comma-separated f_0..f_{k-1}.
        #[arg(long)]
        prefix: Option<String>,
    },
    /// Dehn-Sommerville residuals; exit 0 when all vanish.
    Dehn {
        input: Option<PathBuf>,
        /// Comma-separated f_0..f_d instead of a complex.
        #[arg(long)]
        fvec: Option<String>,
    },
    /// Reference complexes.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
pub struct FvecArgs {
    #[command(subcommand)]
    pub check: Option<FvecCommand>,
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum FvecCommand {
    /// k-stacked bounds on a raw face vector; exit 0 when they hold.
    Check {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        fvec: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum MoveCommand {
    /// Subdivide a facet with a new vertex.
    Star {
        input: Option<PathBuf>,
        #[arg(long)]
        facet: String,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Remove a vertex of degree d+1.
    Collapse {
        input: Option<PathBuf>,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Apply a file of surgery records in order.
    Replay {
        input: Option<PathBuf>,
        #[arg(long)]
        script: PathBuf,
    },
    /// Print the records undoing a script applied to the input.
    Invert {
        input: Option<PathBuf>,
        #[arg(long)]
        script: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum HandleCommand {
    Add {
        input: Option<PathBuf>,
        #[arg(long)]
        pairs: String,
        /// `old:new` renames applied afterwards.
        #[arg(long, default_value = "")]
        rename: String,
        #[arg(long)]
        record: Option<PathBuf>,
    },
    Delete {
        input: Option<PathBuf>,
        #[arg(long)]
        sphere: String,
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Exit 0 when the bijection is admissible.
    Admissible {
        input: Option<PathBuf>,
        #[arg(long)]
        pairs: String,
    },
    /// Look for an induced codimension-one standard sphere.
    Find { input: Option<PathBuf> },
}

#[derive(Debug, Subcommand)]
pub enum StackedCommand {
    /// Exit 0 when the complex is a stacked sphere.
    Check { input: Option<PathBuf> },
    /// Run a stack script.
    Generate { script: Option<PathBuf> },
    /// Face vector of any n-vertex stacked d-sphere.
    Fvector {
        #[arg(long)]
        d: i32,
        #[arg(long)]
        n: usize,
    },
    /// Antistar of a vertex in a stacked sphere, a stacked ball.
    Ball {
        input: Option<PathBuf>,
        #[arg(long)]
        vertex: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List,
    Emit { name: String },
}

/// What a run produced.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the verb.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut ctx = Ctx { stdin, stdin_used: false, json: cli.json };
    match execute(&mut ctx, cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
    json: bool,
}

impl Ctx<'_> {
    fn text(&mut self, path: Option<&Path>) -> Result<String, CliError> {
        match path {
            Some(p) if p != Path::new("-") => {
                std::fs::read_to_string(p).map_err(|source| CliError::Io { path: p.to_owned(), source })
            }
            _ => {
                if self.stdin_used {
                    return Err(CliError::Usage("standard input can be read only once".into()));
                }
                self.stdin_used = true;
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|source| CliError::Io { path: "-".into(), source })?;
                Ok(s)
            }
        }
    }

    fn complex(&mut self, path: Option<&Path>) -> Result<Complex, CliError> {
        scx::parse(&self.text(path)?)
    }

    fn report(&self, r: &Report) -> String {
        r.render(self.json)
    }

    fn emit(&self, c: &Complex) -> String {
        self.emit_with(c, Report::new())
    }

    /// SCX text, or a JSON object with the facets, the face vector and `extra`.
    fn emit_with(&self, c: &Complex, extra: Report) -> String {
        if self.json {
            let facets: Vec<Vec<&str>> = c.facet_tokens();
            let mut r = Report::new()
                .with("facets", serde_json::to_value(facets).expect("token lists serialize"))
                .with("f_vector", c.f_vector().counts().to_vec());
            for (k, v) in extra.fields() {
                r.push(k, v.clone());
            }
            r.render(true)
        } else {
            scx::write(c)
        }
    }
}

fn tokens(list: &str) -> Vec<String> {
    list.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::to_owned).collect()
}

fn pairs(list: &str) -> Result<Vec<(String, String)>, CliError> {
    tokens(list)
        .iter()
        .map(|p| {
            p.split_once(':')
                .map(|(a, b)| (a.to_owned(), b.to_owned()))
                .ok_or_else(|| CliError::Usage(format!("expected `a:b`, got {p:?}")))
        })
        .collect()
}

fn numbers(list: &str) -> Result<Vec<u64>, CliError> {
    tokens(list)
        .iter()
        .map(|t| t.parse::<u64>().map_err(|_| CliError::Usage(format!("not a count: {t:?}"))))
        .collect()
}

fn append_record(path: Option<&Path>, r: &SurgeryRecord) -> Result<(), CliError> {
    use std::io::Write;
    let Some(path) = path else { return Ok(()) };
    let line = record::write(r)?;
    let mut f = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    writeln!(f, "{line}").map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn verdict(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

fn bound_report(b: &BoundReport) -> Report {
    let col = |f: fn(&bounds::BoundRow) -> i128| -> Vec<Value> {
        b.rows.iter().map(|r| Value::from(f(r) as i64)).collect()
    };
    let mut r = Report::new()
        .with("holds", b.holds)
        .with("equality_all", b.equality_all)
        .with("equality_any", b.equality_any)
        .with("stacked", b.stacked_verdict)
        .with("j", col(|r| r.j as i128))
        .with("observed", col(|r| r.observed))
        .with("bound", col(|r| r.bound))
        .with("slack", col(|r| r.slack()));
    if b.topology_asserted {
        r.push("topology_asserted", true);
    }
    r
}

fn rigidity_report(r: &RigidityReport, stats: bool) -> Report {
    let mut out = Report::new()
        .with("rigid", r.verdict)
        .with("minimal", r.minimal)
        .with("edges", r.edges_total)
        .with("bound", r.bound)
        .with("q", r.q)
        .with("connected", r.connected)
        .with("witness", r.witness.as_ref().map(|w| w.vertices.clone()))
        .with("witness_edges", r.witness.as_ref().map(|w| w.edges_meeting))
        .with("witness_required", r.witness.as_ref().map(|w| w.required));
    if stats {
        out.push("examined", r.stats.examined);
        out.push("pruned", r.stats.pruned);
    }
    out
}

/// Partitioned sweep over `workers` threads. The merged report does not
/// depend on the worker count apart from the sweep counters.
pub fn rigidity_parallel(c: &Complex, q: usize, limit: usize, workers: usize) -> Result<RigidityReport, CliError> {
    let (ctx, early) = rigidity::precheck(c, q, limit)?;
    if let Some(r) = early {
        return Ok(rigidity::with_minimality(r));
    }
    let workers = workers.max(1);
    let bits = if workers == 1 { 0 } else { ctx.prefix_bits(workers * 4) };
    let parts = 1u64 << bits;
    let next = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let outcomes = Mutex::new(vec![PartOutcome::default(); parts as usize]);
    std::thread::scope(|s| {
        for _ in 0..workers.min(parts as usize) {
            s.spawn(|| loop {
                let p = next.fetch_add(1, Ordering::Relaxed);
                if p >= parts {
                    break;
                }
                let o = ctx.sweep_part(p, bits, &stop);
                outcomes.lock().expect("no worker panics while holding the lock")[p as usize] = o;
            });
        }
    });
    let outcomes = outcomes.into_inner().expect("workers finished");
    Ok(rigidity::with_minimality(ctx.report(c, &outcomes)))
}

fn execute(ctx: &mut Ctx<'_>, command: Command) -> Result<(i32, String), CliError> {
    match command {
        Command::Check { input } => {
            let c = ctx.complex(input.as_deref())?;
            let r = verify::classify(&c);
            let normal_pm = r.is_normal && !r.has_boundary;
            let rep = Report::new()
                .with("normal_pm", normal_pm)
                .with("orientable", r.is_orientable)
                .with("euler", c.euler_characteristic())
                .with("dim", c.dim())
                .with("f_vector", c.f_vector().counts().to_vec())
                .with("pure", r.is_pure)
                .with("weak_pm", r.is_weak_pm)
                .with("boundary", r.has_boundary)
                .with("strongly_connected", r.is_strongly_connected)
                .with("pseudomanifold", r.is_pseudomanifold)
                .with("normal", r.is_normal)
                .with("closed_2manifold", r.is_closed_2manifold)
                .with("failing_face", r.failing_face.map(|f| c.owned_tokens(&f)));
            Ok((verdict(normal_pm), ctx.report(&rep)))
        }
        Command::Fvec(FvecArgs { check: Some(FvecCommand::Check { d, k, fvec }), .. }) => {
            let f = FaceVector::new(numbers(&fvec)?);
            let b = bounds::glbc_check(&f, d, k)?;
            Ok((verdict(b.holds), ctx.report(&bound_report(&b))))
        }
        Command::Fvec(FvecArgs { check: None, input }) => {
            let c = ctx.complex(input.as_deref())?;
            let rep = Report::new()
                .with("f_vector", c.f_vector().counts().to_vec())
                .with("euler", c.euler_characteristic())
                .with("dim", c.dim());
            Ok((0, ctx.report(&rep)))
        }
        Command::Link { input, face } => {
            let c = ctx.complex(input.as_deref())?;
            let lk = c.link(&c.vertex_set(&tokens(&face))?)?;
            Ok((0, ctx.emit(&lk)))
        }
        Command::Star { input, vertex } => {
            let c = ctx.complex(input.as_deref())?;
            Ok((0, ctx.emit(&c.star(c.require_vertex(&vertex)?)?)))
        }
        Command::Antistar { input, face } => {
            let c = ctx.complex(input.as_deref())?;
            Ok((0, ctx.emit(&c.antistar(&c.vertex_set(&tokens(&face))?)?)))
        }
        Command::Induced { input, vertices } => {
            let c = ctx.complex(input.as_deref())?;
            Ok((0, ctx.emit(&c.induced(&c.vertex_set(&tokens(&vertices))?)?)))
        }
        Command::Join { a, b } => {
            let x = ctx.complex(Some(&a))?;
            let y = ctx.complex(Some(&b))?;
            Ok((0, ctx.emit(&x.join(&y)?)))
        }
        Command::Suspend { input, u, v } => {
            let c = ctx.complex(input.as_deref())?;
            Ok((0, ctx.emit(&c.one_point_suspension(c.require_vertex(&u)?, &v)?)))
        }
        Command::Move(m) => run_move(ctx, m),
        Command::Handle(h) => run_handle(ctx, h),
        Command::Consum { a, b, pairs: p, record: path } => {
            let x = ctx.complex(Some(&a))?;
            let y = ctx.complex(Some(&b))?;
            let rec = SurgeryRecord::ConnectedSum { other: y, pairs: pairs(&p)? };
            let out = rec.replay(&x)?;
            append_record(path.as_deref(), &rec)?;
            Ok((0, ctx.emit(&out)))
        }
        Command::Gbm { input, remove, insert, record: path } => {
            let c = ctx.complex(input.as_deref())?;
            let rec = SurgeryRecord::Gbm { remove: ctx.complex(Some(&remove))?, insert: ctx.complex(Some(&insert))? };
            let out = rec.replay(&c)?;
            append_record(path.as_deref(), &rec)?;
            // Ball status of B1 and B2 is the caller's assertion; only the
            // weak-pm-with-boundary structure is checked.
            Ok((0, ctx.emit_with(&out, Report::new().with("ball_status", "asserted"))))
        }
        Command::Decompose { input, out_dir } => {
            let c = ctx.complex(input.as_deref())?;
            let case = moves::decompose_2manifold(&c)?;
            let mut rep = Report::new().with("case", case.tag()).with("verified", case.verify(&c));
            let mut files: Vec<(&str, String)> = Vec::new();
            match &case {
                DecompositionCase::StandardSphere => {}
                DecompositionCase::ConnectedSum { x1, x2, seam, readd } => {
                    rep.push("seam", seam.clone());
                    rep.push("x1_f_vector", x1.f_vector().counts().to_vec());
                    rep.push("x2_f_vector", x2.f_vector().counts().to_vec());
                    files.push(("x1.scx", scx::write(x1)));
                    files.push(("x2.scx", scx::write(x2)));
                    files.push(("readd.rec", record::write(readd)? + "\n"));
                }
                DecompositionCase::HandleAddition { y, seam, readd } => {
                    rep.push("seam", seam.clone());
                    rep.push("y_f_vector", y.f_vector().counts().to_vec());
                    files.push(("y.scx", scx::write(y)));
                    files.push(("readd.rec", record::write(readd)? + "\n"));
                }
                DecompositionCase::GbmReduction { u, b_u, y } => {
                    rep.push("u", u.clone());
                    rep.push("ball_status", "asserted");
                    rep.push("y_f_vector", y.f_vector().counts().to_vec());
                    files.push(("y.scx", scx::write(y)));
                    files.push(("b_u.scx", scx::write(b_u)));
                }
            }
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(&dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
                for (name, text) in files {
                    write_file(&dir.join(name), &text)?;
                }
            }
            Ok((0, ctx.report(&rep)))
        }
        Command::Stacked(s) => run_stacked(ctx, s),
        Command::Rigidity { input, q, workers, limit, stats } => {
            let c = ctx.complex(input.as_deref())?;
            let r = rigidity_parallel(&c, q, limit, workers)?;
            Ok((verdict(r.verdict), ctx.report(&rigidity_report(&r, stats))))
        }
        Command::Lbt { input, nsc } => {
            let c = ctx.complex(input.as_deref())?;
            let b = if nsc { bounds::lbc_nsc_check(&c)? } else { bounds::lbt_check(&c)? };
            Ok((verdict(b.holds), ctx.report(&bound_report(&b))))
        }
        Command::Glbc { input, k, d, prefix } => match prefix {
            Some(p) => {
                let d = d.ok_or_else(|| CliError::Usage("--prefix needs --d".into()))?;
                let f = bounds::glbc_fvector(d, k, &numbers(&p)?)?;
                Ok((0, ctx.report(&Report::new().with("f_vector", f.counts().to_vec()))))
            }
            None => {
                let c = ctx.complex(input.as_deref())?;
                let d = d.unwrap_or(c.dim().max(0) as usize);
                let b = bounds::glbc_check(&c.f_vector(), d, k)?;
                Ok((verdict(b.holds), ctx.report(&bound_report(&b))))
            }
        },
        Command::Dehn { input, fvec } => {
            let f = match fvec {
                Some(list) => FaceVector::new(numbers(&list)?),
                None => ctx.complex(input.as_deref())?.f_vector(),
            };
            if f.counts().is_empty() {
                return Err(CliError::Usage("empty face vector".into()));
            }
            let res = bounds::dehn_sommerville_residuals_of(&f);
            let zero = res.iter().all(|&r| r == 0);
            let rep = Report::new()
                .with("residuals", res.iter().map(|&r| r as i64).collect::<Vec<_>>())
                .with("zero", zero);
            Ok((verdict(zero), ctx.report(&rep)))
        }
        Command::Catalog(CatalogCommand::List) => {
            if ctx.json {
                let list: Vec<Value> = catalog::ENTRIES
                    .iter()
                    .map(|e| serde_json::json!({ "name": e.name, "description": e.description }))
                    .collect();
                return Ok((0, format!("{}\n", Value::Array(list))));
            }
            let text = catalog::ENTRIES.iter().map(|e| format!("{}\t{}\n", e.name, e.description)).collect();
            Ok((0, text))
        }
        Command::Catalog(CatalogCommand::Emit { name }) => {
            let e = catalog::entry(&name).ok_or_else(|| CliError::Usage(format!("no catalog entry {name:?}")))?;
            Ok((0, ctx.emit(&(e.build)())))
        }
    }
}

fn run_move(ctx: &mut Ctx<'_>, m: MoveCommand) -> Result<(i32, String), CliError> {
    match m {
        MoveCommand::Star { input, facet, vertex, record: path } => {
            let c = ctx.complex(input.as_deref())?;
            let rec = SurgeryRecord::Star { facet: tokens(&facet), vertex };
            let out = rec.replay(&c)?;
            append_record(path.as_deref(), &rec)?;
            Ok((0, ctx.emit(&out)))
        }
        MoveCommand::Collapse { input, vertex, record: path } => {
            let c = ctx.complex(input.as_deref())?;
            let rec = SurgeryRecord::Collapse { vertex };
            let out = rec.replay(&c)?;
            append_record(path.as_deref(), &rec)?;
            Ok((0, ctx.emit(&out)))
        }
        MoveCommand::Replay { input, script } => {
            let mut c = ctx.complex(input.as_deref())?;
            for rec in record::parse(&ctx.text(Some(&script))?)? {
                c = rec.replay(&c)?;
            }
            Ok((0, ctx.emit(&c)))
        }
        MoveCommand::Invert { input, script } => {
            let mut c = ctx.complex(input.as_deref())?;
            let mut inverses = Vec::new();
            for rec in record::parse(&ctx.text(Some(&script))?)? {
                inverses.push(rec.inverse(&c)?);
                c = rec.replay(&c)?;
            }
            let mut out = String::new();
            for rec in inverses.iter().rev() {
                out.push_str(&record::write(rec)?);
                out.push('\n');
            }
            Ok((0, out))
        }
    }
}

fn run_handle(ctx: &mut Ctx<'_>, h: HandleCommand) -> Result<(i32, String), CliError> {
    match h {
        HandleCommand::Add { input, pairs: p, rename, record: path } => {
            let c = ctx.complex(input.as_deref())?;
            let rec = SurgeryRecord::HandleAdd { pairs: pairs(&p)?, rename: pairs(&rename)? };
            let out = rec.replay(&c)?;
            append_record(path.as_deref(), &rec)?;
            Ok((0, ctx.emit(&out)))
        }
        HandleCommand::Delete { input, sphere, record: path } => {
            let c = ctx.complex(input.as_deref())?;
            let rec = SurgeryRecord::HandleDelete { sphere: tokens(&sphere), rename: vec![] };
            let out = rec.replay(&c)?;
            append_record(path.as_deref(), &rec)?;
            Ok((0, ctx.emit(&out)))
        }
        HandleCommand::Admissible { input, pairs: p } => {
            let c = ctx.complex(input.as_deref())?;
            let psi = Bijection::new(pairs(&p)?)?;
            let v = moves::admissibility_violation(&c, &psi)?;
            let rep = Report::new()
                .with("admissible", v.is_none())
                .with("violation", v.map(|(a, b)| vec![a, b]));
            Ok((verdict(rep.get("admissible") == Some(&Value::Bool(true))), ctx.report(&rep)))
        }
        HandleCommand::Find { input } => {
            let c = ctx.complex(input.as_deref())?;
            let found = verify::find_induced_standard_sphere(&c);
            let mut rep = Report::new().with("found", found.is_some());
            match &found {
                Some(a) => {
                    rep.push("sphere", c.owned_tokens(a));
                    let sides = verify::crossing_graph(&c, a).map(|g| g.component_count()).ok();
                    rep.push("crossing_components", sides);
                }
                None => {
                    rep.push("sphere", Value::Null);
                    rep.push("crossing_components", Value::Null);
                }
            }
            Ok((verdict(found.is_some()), ctx.report(&rep)))
        }
    }
}

fn run_stacked(ctx: &mut Ctx<'_>, s: StackedCommand) -> Result<(i32, String), CliError> {
    match s {
        StackedCommand::Check { input } => {
            let c = ctx.complex(input.as_deref())?;
            let v = stacked::is_stacked(&c)?;
            let cliques = (c.dim() >= 2).then(|| stacked::is_one_stacked_via_cliques(&c)).transpose()?;
            let rep = Report::new()
                .with("stacked", v.stacked)
                .with("cliques", cliques.as_ref().map(|x| x.stacked))
                .with("clique_count", cliques.as_ref().map(|x| x.clique_count))
                .with("trace", v.trace.clone());
            Ok((verdict(v.stacked), ctx.report(&rep)))
        }
        StackedCommand::Generate { script: path } => {
            let s = script::parse(&ctx.text(path.as_deref())?)?;
            Ok((0, ctx.emit(&stacked::generate_stacked(&s)?)))
        }
        StackedCommand::Fvector { d, n } => {
            let f = stacked::stacked_fvector(d, n)?;
            Ok((0, ctx.report(&Report::new().with("f_vector", f.counts().to_vec()))))
        }
        StackedCommand::Ball { input, vertex } => {
            let c = ctx.complex(input.as_deref())?;
            Ok((0, ctx.emit(&stacked::stacked_ball_antistar(&c, c.require_vertex(&vertex)?)?)))
        }
    }
}
