use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use schur_core::bounds::{self, BoundLedger, Entry, RecurrenceRule, PRIOR_GROWTH_CONSTANT};
use schur_core::format::{parse_partition, write_partition};
use schur_core::search::{
    self, exhaustive_max, Checkpoint, ColourOrder, ParallelMode, PartialPartition, Progress,
    SearchConfig, SearchStatus, VariableOrder,
};
use schur_core::template::{self, Template, TemplateError};
use schur_core::verifier::Verifier;
use schur_core::{verify_schur, Partition};

use crate::{
    BoundsArgs, ColourOrderArg, ComposeArgs, Mode, SearchArgs, TemplateSearchArgs, VarOrder,
    VerifyArgs,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Failed = 1,
    Malformed = 2,
    Budget = 3,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load_partition(path: &Path) -> Result<Partition> {
    parse_partition(&read(path)?)
        .with_context(|| format!("{}: not a partition file", path.display()))
}

fn list(xs: &[usize]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Writes `text` to `output`, or to stdout when no path is given.
fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Status> {
    let p = load_partition(&args.file)?;
    let verifier = Verifier::with_cap(args.max_violations);
    let report = if args.symmetric {
        verifier.symmetric_schur(&p, &args.exceptions)
    } else {
        verifier.schur(&p)
    };
    let kind = if args.symmetric {
        "symmetric Schur partition"
    } else {
        "Schur partition"
    };
    if report.valid {
        println!("valid {kind}, n={} k={}", p.order(), p.colour_count());
        return Ok(Status::Ok);
    }
    println!("not a {kind}: {} violations", report.count);
    for v in &report.violations {
        println!("  {v}");
    }
    for &x in &report.mirror_mismatches {
        println!("  mirror mismatch: {x} and {}", p.order() + 1 - x);
    }
    if report.truncated() {
        println!("  ... (list truncated)");
    }
    Ok(Status::Failed)
}

pub fn profile(file: &Path) -> Result<Status> {
    let p = load_partition(file)?;
    print!("{}", p.profile());
    Ok(Status::Ok)
}

pub fn search(args: &SearchArgs) -> Result<Status> {
    if let Some(k) = args.exhaustive {
        return exhaustive(args, k);
    }
    let (partial, symmetric, exceptions) = if let Some(path) = &args.resume {
        let ckpt = Checkpoint::parse(&read(path)?)
            .with_context(|| format!("{}: not a checkpoint", path.display()))?;
        if args.target.is_some_and(|n| n != ckpt.partial.order()) {
            bail!(
                "--target differs from the checkpoint order {}",
                ckpt.partial.order()
            );
        }
        let mut exceptions = ckpt.exceptions;
        exceptions.extend(
            args.exceptions
                .iter()
                .filter(|x| !exceptions.contains(x))
                .collect::<Vec<_>>(),
        );
        (ckpt.partial, ckpt.symmetric || args.symmetric, exceptions)
    } else if let Some(path) = &args.seed {
        let Some(target) = args.target else {
            bail!("--seed needs --target");
        };
        let base = load_partition(path)?;
        if args.symmetric {
            if let Some(w) = search::divisibility_warning(target, &args.exceptions) {
                eprintln!("warning: {w}");
            }
        }
        let partial = match seed(&base, target, args.symmetric, &args.exceptions) {
            Ok(p) => p,
            Err(e) => {
                println!("seeding failed: {e:#}");
                return Ok(Status::Failed);
            }
        };
        (partial, args.symmetric, args.exceptions.clone())
    } else {
        bail!("one of --seed, --resume or --exhaustive is required");
    };

    let config = SearchConfig {
        symmetric,
        exceptions: exceptions.clone(),
        variable_order: match args.var_order {
            VarOrder::Ascending => VariableOrder::Ascending,
            VarOrder::MostBlocked => VariableOrder::MostBlockedFirst,
        },
        colour_order: match args.colour_order {
            ColourOrderArg::Fixed => ColourOrder::Fixed,
            ColourOrderArg::LeastBlocked => ColourOrder::LeastBlockedFirst,
        },
        random_ties: args.random_ties,
        seed: args.rng_seed,
        max_nodes: args.max_nodes,
        max_time: time_budget(args.max_seconds)?,
        forward_check: !args.no_forward_check,
        threads: args.threads,
        parallel_mode: match args.mode {
            Mode::Deterministic => ParallelMode::Deterministic,
            Mode::Fast => ParallelMode::Fast,
        },
    };

    let start = Instant::now();
    let mut report = |p: &Progress| {
        let secs = start.elapsed().as_secs_f64().max(1e-9);
        eprintln!(
            "progress: nodes={} rate={:.0}/s depth={} best={}",
            p.nodes,
            p.nodes as f64 / secs,
            p.depth,
            p.max_depth
        );
    };
    let observer: Option<search::ProgressObserver<'_>> =
        (args.progress_every > 0).then_some((args.progress_every, &mut report as _));
    let outcome = search::extend_with_progress(&partial, &config, observer)?;
    eprintln!(
        "search: {} nodes, max depth {}, {:.2}s",
        outcome.stats.nodes,
        outcome.stats.max_depth,
        outcome.stats.elapsed.as_secs_f64()
    );

    match outcome.status {
        SearchStatus::Found => {
            let p = outcome.witness.expect("found outcome carries a witness");
            let check = if symmetric {
                Verifier::default().symmetric_schur(&p, &exceptions)
            } else {
                verify_schur(&p)
            };
            if !check.valid {
                bail!(
                    "search returned a partition that fails verification ({} violations)",
                    check.count
                );
            }
            let mut comments = vec![format!("found by search, rng seed {}", args.rng_seed)];
            if symmetric && exceptions.is_empty() {
                comments.push("symmetric".into());
            } else if symmetric {
                comments.push(format!("symmetric, exceptions: {}", list(&exceptions)));
            }
            let text = write_partition(&p, &comments);
            if let Some(path) = &args.output {
                write(path, &text)?;
                println!(
                    "found: n={} k={} written to {}",
                    p.order(),
                    p.colour_count(),
                    path.display()
                );
            } else {
                print!("{text}");
            }
            Ok(Status::Ok)
        }
        SearchStatus::Exhausted => {
            println!(
                "exhausted: no {}-colour partition of [1, {}] extends the {}",
                partial.colour_count(),
                partial.order(),
                if args.resume.is_some() {
                    "checkpoint prefix"
                } else {
                    "seed"
                }
            );
            Ok(Status::Failed)
        }
        SearchStatus::BudgetExceeded => {
            let deepest =
                PartialPartition::from_assignment(partial.colour_count(), &outcome.deepest)
                    .context("deepest node is not a consistent partial assignment")?;
            let ckpt = Checkpoint {
                partial: deepest,
                symmetric,
                exceptions,
            };
            write(&args.checkpoint, &ckpt.to_text())?;
            println!(
                "budget exhausted: deepest node had {} of {} positions assigned; checkpoint written to {}",
                ckpt.partial.assigned_count(),
                ckpt.partial.order(),
                args.checkpoint.display()
            );
            Ok(Status::Budget)
        }
    }
}

fn time_budget(seconds: Option<f64>) -> Result<Option<Duration>> {
    match seconds {
        None => Ok(None),
        Some(s) if s.is_finite() && s > 0.0 => Ok(Some(Duration::from_secs_f64(s))),
        Some(s) => bail!("--max-seconds must be positive, got {s}"),
    }
}

/// Seeds `[1, target]` from `base`; without symmetry only the base and
/// `b + 1` are placed.
fn seed(
    base: &Partition,
    target: usize,
    symmetric: bool,
    exceptions: &[usize],
) -> Result<PartialPartition> {
    if symmetric {
        return Ok(search::seed_symmetric(base, target, exceptions)?.partial);
    }
    let report = verify_schur(base);
    if let Some(v) = report.violations.first() {
        bail!("base partition is not sum-free: {v}");
    }
    let b = base.order();
    if b >= target {
        bail!("target order {target} must exceed the base order {b}");
    }
    let k = base.colour_count() + 1;
    let mut partial = PartialPartition::new(target, k);
    for x in 1..=b + 1 {
        partial.assign(x, base.colour_of(x).unwrap_or(k))?;
    }
    Ok(partial)
}

fn exhaustive(args: &SearchArgs, k: usize) -> Result<Status> {
    if args.max_seconds.is_some() {
        bail!("--max-seconds is not supported with --exhaustive; use --max-nodes");
    }
    let out = exhaustive_max(k, args.cap, args.max_nodes)?;
    eprintln!("exhaustive: {} nodes", out.nodes);
    let (line, status) = match out.status {
        SearchStatus::Exhausted => (format!("S({k}) = {}", out.max_order), Status::Ok),
        SearchStatus::Found => (
            format!("S({k}) >= {} (order cap reached)", out.max_order),
            Status::Ok,
        ),
        SearchStatus::BudgetExceeded => (
            format!("S({k}) >= {} (node budget exhausted)", out.max_order),
            Status::Budget,
        ),
    };
    let text = write_partition(&out.witness, std::slice::from_ref(&line));
    match &args.output {
        Some(path) => {
            write(path, &text)?;
            println!("{line}");
        }
        None => print!("{text}"),
    }
    Ok(status)
}

fn template_status(e: TemplateError) -> Result<Status> {
    match e {
        TemplateError::Rejected(_) | TemplateError::InnerInvalid(_) | TemplateError::Unsound(_) => {
            println!("{e}");
            Ok(Status::Failed)
        }
        other => Err(other.into()),
    }
}

pub fn compose(args: &ComposeArgs) -> Result<Status> {
    let tpl = match Template::parse(&read(&args.template)?) {
        Ok(t) => t,
        Err(e) => {
            return template_status(e).with_context(|| format!("{}", args.template.display()))
        }
    };
    let tpl = match args.phi {
        Some(phi) => match tpl.with_phi(phi) {
            Ok(t) => t,
            Err(e) => return template_status(e.into()),
        },
        None => tpl,
    };
    let inner = load_partition(&args.inner)?;
    let chain = match template::iterate(&tpl, &inner, args.rounds) {
        Ok(chain) => chain,
        Err(e) => return template_status(e),
    };
    for (i, (_, cert)) in chain.iter().enumerate() {
        if i > 0 {
            println!();
        }
        println!("{cert}");
    }
    let (last, cert) = chain.last().expect("at least one round");
    let comments = vec![format!(
        "composed: template m={} t={} phi={}, {} round(s)",
        cert.template_order, cert.template_colours, cert.phi, args.rounds
    )];
    let text = write_partition(last, &comments);
    if args.output.is_none() {
        println!();
    }
    emit(args.output.as_deref(), &text)?;
    Ok(Status::Ok)
}

pub fn template_validate(file: &Path) -> Result<Status> {
    match Template::parse(&read(file)?) {
        Ok(t) => {
            println!(
                "valid template: m={} t={} phi={}",
                t.order(),
                t.colours(),
                t.phi()
            );
            Ok(Status::Ok)
        }
        Err(TemplateError::Rejected(r)) => {
            println!("invalid template: {} failure(s)", r.failures.len());
            for f in &r.failures {
                println!("  {f}");
            }
            Ok(Status::Failed)
        }
        Err(e) => Err(anyhow::Error::from(e).context(format!("{}", file.display()))),
    }
}

pub fn template_search(args: &TemplateSearchArgs) -> Result<Status> {
    let out = template::template_search(args.colours, args.max_order, args.max_nodes)?;
    eprintln!("template search: {} nodes", out.nodes);
    if !out.empty_orders.is_empty() {
        println!("no template of order: {}", list(&out.empty_orders));
    }
    match out.best {
        Some(tpl) => {
            println!(
                "best template: m={} t={} phi={}",
                tpl.order(),
                tpl.colours(),
                tpl.phi()
            );
            let text = tpl.to_text();
            if args.output.is_none() {
                println!();
            }
            emit(args.output.as_deref(), &text)?;
            Ok(Status::Ok)
        }
        None if out.complete => {
            println!(
                "no template with {} colours and order <= {}",
                args.colours, args.max_order
            );
            Ok(Status::Failed)
        }
        None => {
            println!("node budget exhausted before a template was found");
            Ok(Status::Budget)
        }
    }
}

pub fn bounds(args: &BoundsArgs) -> Result<Status> {
    let mut ledger = match &args.registry {
        Some(path) => {
            let dir = path.parent().unwrap_or(Path::new("."));
            BoundLedger::from_registry(&read(path)?, dir)
                .with_context(|| format!("{}", path.display()))?
        }
        None => BoundLedger::default_registry(),
    };
    for path in &args.templates {
        let tpl = Template::parse(&read(path)?).with_context(|| format!("{}", path.display()))?;
        ledger.register(Entry::Rule(RecurrenceRule::from_template(&tpl)))?;
    }
    let rows = ledger.best_bounds(args.max_k)?;
    print!("{}", bounds::render_table(&rows));
    if let Ok((g, rule)) = bounds::growth_constant(ledger.rules()) {
        let cmp = if g > PRIOR_GROWTH_CONSTANT {
            "exceeds"
        } else {
            "does not exceed"
        };
        println!(
            "growth constant: {g:.6} from rule m={} t={} phi={} ({cmp} prior {PRIOR_GROWTH_CONSTANT})",
            rule.m, rule.t, rule.phi
        );
    }
    if let Some(path) = &args.export {
        write(path, &ledger.to_registry())?;
    }
    Ok(Status::Ok)
}
