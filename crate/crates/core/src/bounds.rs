//! Lower bounds for Schur numbers `S(k)` and the Ramsey numbers `R_k(3)`,
//! with provenance.
//!
//! A ledger holds base facts (cited literals and verified witnesses) and
//! recurrence rules `S(k + t - 1) >= m * S(k) + phi`. [`BoundLedger::best_bounds`]
//! combines them by dynamic programming over `k`.

use std::fmt;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::format::{self, FormatError};
use crate::partition::Partition;
use crate::template::Template;
use crate::verifier::verify_schur;

/// Registry shipped with the crate.
pub const DEFAULT_REGISTRY: &str = include_str!("../data/default.reg");

/// Best previously published value of `lim R_r(3)^(1/r)`, kept for
/// comparison only.
pub const PRIOR_GROWTH_CONSTANT: f64 = 3.199;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("colour count must be at least 1")]
    ZeroColours,
    #[error("bound value must be at least 1")]
    ZeroValue,
    #[error("malformed rule m={m} t={t} phi={phi}: need m >= 1, t >= 2, phi < m")]
    MalformedRule { m: u64, t: usize, phi: u64 },
    #[error("witness for S({k}) >= {value} rejected: {reason}")]
    InvalidWitness {
        k: usize,
        value: u64,
        reason: String,
    },
    #[error("no lower bound known for S({0})")]
    Missing(usize),
    #[error("bound for S({0}) overflows 64 bits")]
    Overflow(usize),
    #[error("no recurrence rules registered")]
    NoRules,
    #[error("registry line {line}: {message}")]
    Registry { line: usize, message: String },
    #[error("reading witness {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("witness {path}: {source}")]
    WitnessFormat { path: PathBuf, source: FormatError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Literal {
        citation: String,
    },
    Witness {
        path: String,
    },
    Recurrence {
        m: u64,
        t: usize,
        phi: u64,
        from_k: usize,
        from_value: u64,
    },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Literal { citation } => write!(f, "literal: {citation}"),
            Self::Witness { path } => write!(f, "witness: {path}"),
            Self::Recurrence {
                m,
                phi,
                from_k,
                from_value,
                ..
            } => write!(f, "{m}*S({from_k})+{phi} = {m}*{from_value}+{phi}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundFact {
    pub k: usize,
    pub value: u64,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleSource {
    /// Backed by a template validated in this process.
    Template,
    Literal {
        citation: String,
    },
}

/// `S(k + t - 1) >= m * S(k) + phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceRule {
    pub m: u64,
    pub t: usize,
    pub phi: u64,
    pub source: RuleSource,
}

impl RecurrenceRule {
    pub fn literal(
        m: u64,
        t: usize,
        phi: u64,
        citation: impl Into<String>,
    ) -> Result<Self, BoundsError> {
        let rule = Self {
            m,
            t,
            phi,
            source: RuleSource::Literal {
                citation: citation.into(),
            },
        };
        rule.check()?;
        Ok(rule)
    }

    pub fn from_template(tpl: &Template) -> Self {
        Self {
            m: tpl.order() as u64,
            t: tpl.colours(),
            phi: tpl.phi() as u64,
            source: RuleSource::Template,
        }
    }

    fn check(&self) -> Result<(), BoundsError> {
        if self.m < 1 || self.t < 2 || self.phi >= self.m {
            return Err(BoundsError::MalformedRule {
                m: self.m,
                t: self.t,
                phi: self.phi,
            });
        }
        Ok(())
    }

    /// `m^(1 / (t - 1))`, the growth rate this rule sustains.
    pub fn growth(&self) -> f64 {
        (self.m as f64).powf(1.0 / (self.t - 1) as f64)
    }

    fn apply(&self, value: u64) -> Option<u64> {
        self.m.checked_mul(value)?.checked_add(self.phi)
    }
}

/// Something that can be registered in a ledger.
#[derive(Debug, Clone)]
pub enum Entry {
    Literal {
        k: usize,
        value: u64,
        citation: String,
    },
    Witness {
        k: usize,
        value: u64,
        partition: Partition,
        path: String,
    },
    Rule(RecurrenceRule),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyBound {
    pub r: usize,
    pub value: u64,
    pub schur: BoundFact,
}

/// Registered facts and rules. Facts and rules are kept in registration
/// order, which also breaks ties between equal bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundLedger {
    facts: Vec<BoundFact>,
    rules: Vec<RecurrenceRule>,
}

impl Default for BoundLedger {
    fn default() -> Self {
        Self::new()
    }
}

impl BoundLedger {
    /// A ledger seeded with `S(1) = 1`.
    pub fn new() -> Self {
        Self {
            facts: vec![BoundFact {
                k: 1,
                value: 1,
                provenance: Provenance::Literal {
                    citation: "trivial: {1} is sum-free, 1 + 1 = 2".into(),
                },
            }],
            rules: Vec::new(),
        }
    }

    pub fn facts(&self) -> &[BoundFact] {
        &self.facts
    }

    pub fn rules(&self) -> &[RecurrenceRule] {
        &self.rules
    }

    pub fn register(&mut self, entry: Entry) -> Result<(), BoundsError> {
        match entry {
            Entry::Literal { k, value, citation } => {
                check_fact(k, value)?;
                self.facts.push(BoundFact {
                    k,
                    value,
                    provenance: Provenance::Literal { citation },
                });
            }
            Entry::Witness {
                k,
                value,
                partition,
                path,
            } => {
                check_fact(k, value)?;
                let reject = |reason: String| BoundsError::InvalidWitness { k, value, reason };
                if partition.colour_count() != k {
                    return Err(reject(format!(
                        "witness has {} colours",
                        partition.colour_count()
                    )));
                }
                if partition.order() as u64 != value {
                    return Err(reject(format!("witness has order {}", partition.order())));
                }
                let report = verify_schur(&partition);
                if let Some(v) = report.violations.first() {
                    return Err(reject(format!("{} violations, e.g. {v}", report.count)));
                }
                self.facts.push(BoundFact {
                    k,
                    value,
                    provenance: Provenance::Witness { path },
                });
            }
            Entry::Rule(rule) => {
                rule.check()?;
                self.rules.push(rule);
            }
        }
        Ok(())
    }

    /// Value-style [`register`](Self::register).
    pub fn with(mut self, entry: Entry) -> Result<Self, BoundsError> {
        self.register(entry)?;
        Ok(self)
    }

    /// Best bound for each `k` in `1..=k_max` (`None` where nothing applies).
    pub fn best_bounds(&self, k_max: usize) -> Result<Vec<Option<BoundFact>>, BoundsError> {
        let mut table: Vec<Option<BoundFact>> = Vec::with_capacity(k_max);
        for k in 1..=k_max {
            let mut best: Option<BoundFact> = None;
            let mut offer = |fact: BoundFact| {
                if best.as_ref().is_none_or(|b| fact.value > b.value) {
                    best = Some(fact);
                }
            };
            for fact in self.facts.iter().filter(|f| f.k == k) {
                offer(fact.clone());
            }
            for rule in &self.rules {
                let step = rule.t - 1;
                if k <= step {
                    continue;
                }
                let from_k = k - step;
                let Some(parent) = &table[from_k - 1] else {
                    continue;
                };
                let value = rule.apply(parent.value).ok_or(BoundsError::Overflow(k))?;
                offer(BoundFact {
                    k,
                    value,
                    provenance: Provenance::Recurrence {
                        m: rule.m,
                        t: rule.t,
                        phi: rule.phi,
                        from_k,
                        from_value: parent.value,
                    },
                });
            }
            table.push(best);
        }
        Ok(table)
    }

    pub fn best(&self, k: usize) -> Result<BoundFact, BoundsError> {
        if k == 0 {
            return Err(BoundsError::ZeroColours);
        }
        self.best_bounds(k)?
            .pop()
            .flatten()
            .ok_or(BoundsError::Missing(k))
    }

    /// `R_r(3) >= S(r) + 2`.
    pub fn ramsey_bound(&self, r: usize) -> Result<RamseyBound, BoundsError> {
        let schur = self.best(r)?;
        Ok(RamseyBound {
            r,
            value: schur.value + 2,
            schur,
        })
    }

    /// Reads a registry. Witness paths are resolved against `base_dir`.
    pub fn from_registry(text: &str, base_dir: &Path) -> Result<Self, BoundsError> {
        let mut ledger = Self::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |message: String| BoundsError::Registry { line, message };
            let mut words = trimmed.split_whitespace();
            let kind = words.next().unwrap_or_default();
            let mut num = |what: &str| -> Result<u64, BoundsError> {
                let token = words.next().ok_or_else(|| err(format!("missing {what}")))?;
                token
                    .parse()
                    .map_err(|_| err(format!("{what} {token:?} is not an integer")))
            };
            let entry = match kind {
                "literal" => {
                    let k = num("k")? as usize;
                    let value = num("value")?;
                    Entry::Literal {
                        k,
                        value,
                        citation: rest(trimmed, 3),
                    }
                }
                "rule" => {
                    let m = num("m")?;
                    let t = num("t")? as usize;
                    let phi = num("phi")?;
                    Entry::Rule(RecurrenceRule {
                        m,
                        t,
                        phi,
                        source: RuleSource::Literal {
                            citation: rest(trimmed, 4),
                        },
                    })
                }
                "witness" => {
                    let k = num("k")? as usize;
                    let value = num("value")?;
                    let path = rest(trimmed, 3);
                    if path.is_empty() {
                        return Err(err("missing witness path".into()));
                    }
                    let full = base_dir.join(&path);
                    let text =
                        std::fs::read_to_string(&full).map_err(|source| BoundsError::Io {
                            path: full.clone(),
                            source,
                        })?;
                    let partition = format::parse_partition(&text).map_err(|source| {
                        BoundsError::WitnessFormat {
                            path: full.clone(),
                            source,
                        }
                    })?;
                    Entry::Witness {
                        k,
                        value,
                        partition,
                        path,
                    }
                }
                other => return Err(err(format!("unknown entry kind {other:?}"))),
            };
            ledger.register(entry).map_err(|e| match e {
                e @ BoundsError::InvalidWitness { .. } => e,
                e => err(e.to_string()),
            })?;
        }
        Ok(ledger)
    }

    /// Renders the ledger in registry format. The implicit `S(1) = 1` seed is
    /// left out.
    pub fn to_registry(&self) -> String {
        let mut out = String::new();
        for fact in self.facts.iter().skip(1) {
            match &fact.provenance {
                Provenance::Literal { citation } => {
                    out.push_str(&format!("literal {} {} {}\n", fact.k, fact.value, citation))
                }
                Provenance::Witness { path } => {
                    out.push_str(&format!("witness {} {} {}\n", fact.k, fact.value, path))
                }
                Provenance::Recurrence { .. } => {}
            }
        }
        for rule in &self.rules {
            let source = match &rule.source {
                RuleSource::Template => "validated template",
                RuleSource::Literal { citation } => citation,
            };
            out.push_str(&format!(
                "rule {} {} {} {}\n",
                rule.m, rule.t, rule.phi, source
            ));
        }
        out
    }

    /// The default registry bundled with the crate.
    pub fn default_registry() -> Self {
        Self::from_registry(DEFAULT_REGISTRY, Path::new("."))
            .expect("bundled registry is well-formed")
    }
}

// the text after the first `skip` whitespace-separated words
fn rest(line: &str, skip: usize) -> String {
    let mut s = line;
    for _ in 0..skip {
        s = s.trim_start();
        s = s.find(char::is_whitespace).map_or("", |i| &s[i..]);
    }
    s.trim().to_string()
}

fn check_fact(k: usize, value: u64) -> Result<(), BoundsError> {
    if k == 0 {
        return Err(BoundsError::ZeroColours);
    }
    if value == 0 {
        return Err(BoundsError::ZeroValue);
    }
    Ok(())
}

/// Largest `m^(1/(t-1))` among `rules`, with the rule achieving it.
pub fn growth_constant(rules: &[RecurrenceRule]) -> Result<(f64, &RecurrenceRule), BoundsError> {
    rules
        .iter()
        .map(|r| (r.growth(), r))
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .ok_or(BoundsError::NoRules)
}

/// Aligned text table of `best_bounds`, including `R_k(3)`.
pub fn render_table(rows: &[Option<BoundFact>]) -> String {
    let mut out = format!(
        "{:>3}  {:>12}  {:>12}  {}\n",
        "k", "S(k) >=", "R_k(3) >=", "provenance"
    );
    for (i, row) in rows.iter().enumerate() {
        match row {
            Some(f) => out.push_str(&format!(
                "{:>3}  {:>12}  {:>12}  {}\n",
                i + 1,
                f.value,
                f.value + 2,
                f.provenance
            )),
            None => out.push_str(&format!("{:>3}  {:>12}  {:>12}  -\n", i + 1, "-", "-")),
        }
    }
    out
}
