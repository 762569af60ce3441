//! Ground-truth checks for sum-freeness.
//!
//! Everything else in the crate is tested against these routines, so they
//! stay deliberately plain: a membership bitset and a scan over all pairs
//! `a <= b` of each class.

use std::fmt;

use thiserror::Error;

use crate::partition::Partition;

/// Default cap on the number of violations kept in a report.
pub const DEFAULT_VIOLATION_CAP: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("member {value} is outside [1, {bound}]")]
    OutOfRange { value: usize, bound: usize },
    #[error("integer {value} is already assigned colour {colour}")]
    AlreadyAssigned { value: usize, colour: usize },
    #[error("colour 0 is reserved for unassigned integers")]
    ZeroColour,
}

/// Which equation a violation satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationForm {
    /// `a + b = c`
    Plain,
    /// `a + b = c + m` for the modulus under test
    Wrapped,
}

/// A monochromatic solution `a + b = c` (or `a + b = c + m` in modular mode).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    /// `None` when a bare set rather than a partition was checked.
    pub colour: Option<usize>,
    pub form: ViolationForm,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            ViolationForm::Plain => write!(f, "{} + {} = {}", self.a, self.b, self.c)?,
            ViolationForm::Wrapped => write!(
                f,
                "{} + {} = {} + {}",
                self.a,
                self.b,
                self.c,
                self.a + self.b - self.c
            )?,
        }
        if let Some(c) = self.colour {
            write!(f, " (colour {c})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Plain,
    Modular(usize),
    /// Plain sum-freeness plus mirror pairing `x ~ n + 1 - x`.
    Symmetric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Kept violations, at most the configured cap.
    pub violations: Vec<Violation>,
    /// Total number of violations found (sum triples plus, in symmetric
    /// mode, mirror mismatches).
    pub count: usize,
    /// Positions `x` whose mirror carries another colour (symmetric mode).
    pub mirror_mismatches: Vec<usize>,
    pub mode: VerifyMode,
}

impl VerifyReport {
    fn new(mode: VerifyMode) -> Self {
        Self {
            valid: true,
            violations: Vec::new(),
            count: 0,
            mirror_mismatches: Vec::new(),
            mode,
        }
    }

    pub fn truncated(&self) -> bool {
        self.count > self.violations.len() + self.mirror_mismatches.len()
    }

    fn push(&mut self, v: Violation, cap: usize) {
        self.count += 1;
        self.valid = false;
        if self.violations.len() < cap {
            self.violations.push(v);
        }
    }
}

/// Fixed-size membership set over `[0, len)`.
#[derive(Debug, Clone)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub(crate) fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.words
            .get(i >> 6)
            .is_some_and(|w| w & (1 << (i & 63)) != 0)
    }
}

/// Verification entry points with a configurable violation cap.
#[derive(Debug, Clone, Copy)]
pub struct Verifier {
    pub cap: usize,
}

impl Default for Verifier {
    fn default() -> Self {
        Self {
            cap: DEFAULT_VIOLATION_CAP,
        }
    }
}

impl Verifier {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    /// Checks that no `a, b` in `set` (`a <= b`, equality allowed) have
    /// `a + b` in `set`.
    pub fn sum_free(&self, set: &[usize], n: usize) -> Result<VerifyReport, VerifyError> {
        let members = sorted_members(set, n)?;
        let mut report = VerifyReport::new(VerifyMode::Plain);
        self.scan_class(&members, n, None, &mut report);
        Ok(report)
    }

    pub fn schur(&self, p: &Partition) -> VerifyReport {
        let mut report = VerifyReport::new(VerifyMode::Plain);
        self.scan_partition(p, &mut report);
        report
    }

    /// Schur validity plus mirror symmetry, ignoring mismatches at the
    /// listed exception positions (either member of a pair may be listed).
    pub fn symmetric_schur(&self, p: &Partition, exceptions: &[usize]) -> VerifyReport {
        let mut report = VerifyReport::new(VerifyMode::Symmetric);
        self.scan_partition(p, &mut report);
        let n = p.order();
        for x in p.asymmetric_positions() {
            if exceptions.contains(&x) || exceptions.contains(&(n + 1 - x)) {
                continue;
            }
            report.count += 1;
            report.valid = false;
            report.mirror_mismatches.push(x);
        }
        report
    }

    /// Checks that no `r1, r2, r3` in `set` satisfy `r1 + r2 = r3` or
    /// `r1 + r2 = r3 + m`.
    pub fn mod_sum_free(&self, set: &[usize], m: usize) -> Result<VerifyReport, VerifyError> {
        let members = sorted_members(set, m)?;
        let mut report = VerifyReport::new(VerifyMode::Modular(m));
        let mut bits = BitSet::new(m + 1);
        for &x in &members {
            bits.insert(x);
        }
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                let s = a + b;
                if s <= m && bits.contains(s) {
                    report.push(
                        Violation {
                            a,
                            b,
                            c: s,
                            colour: None,
                            form: ViolationForm::Plain,
                        },
                        self.cap,
                    );
                }
                if s > m && bits.contains(s - m) {
                    report.push(
                        Violation {
                            a,
                            b,
                            c: s - m,
                            colour: None,
                            form: ViolationForm::Wrapped,
                        },
                        self.cap,
                    );
                }
            }
        }
        Ok(report)
    }

    fn scan_partition(&self, p: &Partition, report: &mut VerifyReport) {
        let n = p.order();
        for (idx, class) in p.subsets().iter().enumerate() {
            self.scan_class(class, n, Some(idx + 1), report);
        }
    }

    fn scan_class(
        &self,
        members: &[usize],
        n: usize,
        colour: Option<usize>,
        report: &mut VerifyReport,
    ) {
        let mut bits = BitSet::new(n + 1);
        for &x in members {
            bits.insert(x);
        }
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                let c = a + b;
                if c > n {
                    break;
                }
                if bits.contains(c) {
                    report.push(
                        Violation {
                            a,
                            b,
                            c,
                            colour,
                            form: ViolationForm::Plain,
                        },
                        self.cap,
                    );
                }
            }
        }
    }
}

fn sorted_members(set: &[usize], bound: usize) -> Result<Vec<usize>, VerifyError> {
    if let Some(&value) = set.iter().find(|&&x| x == 0 || x > bound) {
        return Err(VerifyError::OutOfRange { value, bound });
    }
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    Ok(members)
}

pub fn verify_sum_free(set: &[usize], n: usize) -> Result<VerifyReport, VerifyError> {
    Verifier::default().sum_free(set, n)
}

pub fn verify_schur(p: &Partition) -> VerifyReport {
    Verifier::default().schur(p)
}

pub fn verify_mod_sum_free(set: &[usize], m: usize) -> Result<VerifyReport, VerifyError> {
    Verifier::default().mod_sum_free(set, m)
}

/// Number of witnesses that placing the unassigned integer `z` into colour
/// `c` would complete into a monochromatic `a + b = c` triple.
///
/// `assignment[x]` is the colour of `x` (0 = unassigned; index 0 unused).
/// Three witness kinds are counted: pairs `a <= b` of colour `c` with
/// `a + b = z`; members `a` with `z + a` also of colour `c`; and `2z` being
/// of colour `c`.
pub fn count_blocked(assignment: &[usize], z: usize, c: usize) -> Result<usize, VerifyError> {
    let n = assignment.len().saturating_sub(1);
    if z == 0 || z > n {
        return Err(VerifyError::OutOfRange { value: z, bound: n });
    }
    if c == 0 {
        return Err(VerifyError::ZeroColour);
    }
    if assignment[z] != 0 {
        return Err(VerifyError::AlreadyAssigned {
            value: z,
            colour: assignment[z],
        });
    }
    let has = |x: usize| x >= 1 && x <= n && assignment[x] == c;
    let mut count = 0;
    for a in 1..=z / 2 {
        if has(a) && has(z - a) {
            count += 1;
        }
    }
    for a in 1..=n {
        if has(a) && has(z + a) {
            count += 1;
        }
    }
    if has(2 * z) {
        count += 1;
    }
    Ok(count)
}
