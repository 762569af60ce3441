//! Composition templates.
//!
//! A template is a partition of `[1, m]` into a template class `T` and
//! ordinary classes `C_1 .. C_{t-1}` such that
//!
//! * every `C_j` is sum-free modulo `m` (no `r1 + r2 = r3` and no
//!   `r1 + r2 = r3 + m` inside `C_j`),
//! * `T` is sum-free over the integers (the wrapped form `r1 + r2 = r3 + m`
//!   is allowed in `T`),
//! * `phi = min(T) - 1`.
//!
//! Composing with a Schur partition of `[1, n]` in `k` colours gives a Schur
//! partition of `[1, m * n + phi]` in `k + t - 1` colours: write
//! `y = (x - 1) * m + r` with `r` in `[1, m]`; `y` gets ordinary colour `j`
//! when `r` is in `C_j`, and the inner colour of `x` when `r` is in `T`.
//!
//! Why this is sound: within an ordinary class, `y1 + y2 = y3` reduces to one
//! of the two forbidden residue equations. Within a translated copy of `T`,
//! `r1 + r2 = r3` is excluded by `T` itself and `r1 + r2 = r3 + m` forces
//! `x1 + x2 = x3`, which the inner partition forbids. Tail positions
//! `y > m * n` have `r <= phi < min(T)` and are always ordinary.

use std::fmt;

use thiserror::Error;

use crate::format::{self, FormatError};
use crate::partition::Partition;
use crate::verifier::{verify_schur, Verifier, VerifyReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    order: usize,
    template_class: Vec<usize>,
    ordinary: Vec<Vec<usize>>,
    phi: usize,
}

/// One reason a template candidate was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TemplateFailure {
    TooFewColours {
        colours: usize,
    },
    ClassCount {
        expected: usize,
        found: usize,
    },
    OutOfRange {
        value: usize,
    },
    Overlap {
        value: usize,
    },
    Gap {
        value: usize,
    },
    /// Class 0 is the template class, `j >= 1` the ordinary class `C_j`.
    EmptyClass {
        class: usize,
    },
    OrdinaryNotModSumFree {
        class: usize,
        violations: Vec<Violation>,
    },
    TemplateClassNotSumFree {
        violations: Vec<Violation>,
    },
    PhiTooLarge {
        requested: usize,
        derived: usize,
    },
}

impl fmt::Display for TemplateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooFewColours { colours } => write!(f, "need at least 2 colours, got {colours}"),
            Self::ClassCount { expected, found } => {
                write!(f, "expected {expected} ordinary classes, got {found}")
            }
            Self::OutOfRange { value } => write!(f, "{value} is outside [1, m]"),
            Self::Overlap { value } => write!(f, "{value} is in more than one class"),
            Self::Gap { value } => write!(f, "{value} is in no class"),
            Self::EmptyClass { class: 0 } => write!(f, "template class is empty"),
            Self::EmptyClass { class } => write!(f, "ordinary class {class} is empty"),
            Self::OrdinaryNotModSumFree { class, violations } => {
                write!(f, "ordinary class {class} is not sum-free mod m:")?;
                for v in violations {
                    write!(f, " [{v}]")?;
                }
                Ok(())
            }
            Self::TemplateClassNotSumFree { violations } => {
                write!(f, "template class is not sum-free:")?;
                for v in violations {
                    write!(f, " [{v}]")?;
                }
                Ok(())
            }
            Self::PhiTooLarge { requested, derived } => {
                write!(f, "phi {requested} exceeds min(T) - 1 = {derived}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("template rejected: {}", .failures.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct TemplateRejection {
    pub failures: Vec<TemplateFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TemplateError {
    #[error(transparent)]
    Rejected(#[from] TemplateRejection),
    #[error("inner partition is not a Schur partition: {0}")]
    InnerInvalid(Violation),
    #[error("inner colour {0} is empty")]
    InnerEmptyColour(usize),
    #[error("composed partition failed verification ({} violations); validity conditions are unsound", .0.count)]
    Unsound(VerifyReport),
    #[error("rounds must be at least 1")]
    ZeroRounds,
    #[error("template search needs at least 2 colours")]
    TooFewColours,
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("template colour {colour} is outside [1, {colours}]")]
    BadTemplateColour { colour: usize, colours: usize },
}

impl Template {
    /// Checks every template condition and reports all that fail.
    pub fn validate(
        m: usize,
        t: usize,
        template_class: &[usize],
        ordinary: &[Vec<usize>],
    ) -> Result<Template, TemplateRejection> {
        let mut failures = Vec::new();
        if t < 2 {
            failures.push(TemplateFailure::TooFewColours { colours: t });
        } else if ordinary.len() != t - 1 {
            failures.push(TemplateFailure::ClassCount {
                expected: t - 1,
                found: ordinary.len(),
            });
        }
        let mut seen = vec![false; m + 1];
        let mut structural = false;
        for class in std::iter::once(template_class).chain(ordinary.iter().map(Vec::as_slice)) {
            for &r in class {
                if r == 0 || r > m {
                    failures.push(TemplateFailure::OutOfRange { value: r });
                    structural = true;
                } else if seen[r] {
                    failures.push(TemplateFailure::Overlap { value: r });
                    structural = true;
                } else {
                    seen[r] = true;
                }
            }
        }
        for (r, _) in seen.iter().enumerate().skip(1).filter(|(_, &s)| !s) {
            failures.push(TemplateFailure::Gap { value: r });
        }
        if template_class.is_empty() {
            failures.push(TemplateFailure::EmptyClass { class: 0 });
        }
        for (j, class) in ordinary.iter().enumerate() {
            if class.is_empty() {
                failures.push(TemplateFailure::EmptyClass { class: j + 1 });
            }
        }
        if !structural {
            let verifier = Verifier::default();
            for (j, class) in ordinary.iter().enumerate() {
                let report = verifier
                    .mod_sum_free(class, m)
                    .expect("members checked in range");
                if !report.valid {
                    failures.push(TemplateFailure::OrdinaryNotModSumFree {
                        class: j + 1,
                        violations: report.violations,
                    });
                }
            }
            let report = verifier
                .sum_free(template_class, m)
                .expect("members checked in range");
            if !report.valid {
                failures.push(TemplateFailure::TemplateClassNotSumFree {
                    violations: report.violations,
                });
            }
        }
        if !failures.is_empty() {
            return Err(TemplateRejection { failures });
        }
        let mut template_class = template_class.to_vec();
        template_class.sort_unstable();
        let ordinary = ordinary
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        let phi = template_class[0] - 1;
        Ok(Template {
            order: m,
            template_class,
            ordinary,
            phi,
        })
    }

    /// Reads a template from a partition whose colour `template_colour` is the
    /// template class; the other colours, in order, are the ordinary classes.
    pub fn from_partition(
        p: &Partition,
        template_colour: usize,
    ) -> Result<Template, TemplateError> {
        let k = p.colour_count();
        if template_colour == 0 || template_colour > k {
            return Err(TemplateError::BadTemplateColour {
                colour: template_colour,
                colours: k,
            });
        }
        let mut classes = p.subsets();
        let t_class = classes.remove(template_colour - 1);
        Ok(Template::validate(p.order(), k, &t_class, &classes)?)
    }

    /// Parses the template file format: a partition file with a
    /// `# template colour = <index>` directive.
    pub fn parse(text: &str) -> Result<Template, TemplateError> {
        let raw = format::parse_raw(text)?;
        let value = raw
            .directive("template colour")
            .ok_or(FormatError::MissingDirective {
                key: "template colour",
            })?;
        let colour = value.parse().map_err(|_| FormatError::BadDirective {
            key: "template colour".into(),
            value: value.into(),
        })?;
        let p = format::parse_partition(text)?;
        Template::from_partition(&p, colour)
    }

    /// Renders the template with the template class as the last colour.
    pub fn to_text(&self) -> String {
        let (p, colour) = self.as_partition();
        format::write_partition(
            &p,
            &[
                format!("template colour = {colour}"),
                format!("phi = {}", self.phi),
            ],
        )
    }

    /// The template as a partition of `[1, m]`; ordinary classes first,
    /// template class last. Returns the template colour too.
    pub fn as_partition(&self) -> (Partition, usize) {
        let mut classes = self.ordinary.clone();
        classes.push(self.template_class.clone());
        let t = classes.len();
        let p = Partition::from_subsets(self.order, t, &classes)
            .expect("template classes partition [1, m]");
        (p, t)
    }

    /// Lowers `phi`. Any value up to `min(T) - 1` is valid; smaller values
    /// just give a shorter output.
    pub fn with_phi(mut self, phi: usize) -> Result<Template, TemplateRejection> {
        let derived = self.template_class[0] - 1;
        if phi > derived {
            return Err(TemplateRejection {
                failures: vec![TemplateFailure::PhiTooLarge {
                    requested: phi,
                    derived,
                }],
            });
        }
        self.phi = phi;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Total colours `t` (template class plus ordinary classes).
    pub fn colours(&self) -> usize {
        self.ordinary.len() + 1
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn template_class(&self) -> &[usize] {
        &self.template_class
    }

    pub fn ordinary_classes(&self) -> &[Vec<usize>] {
        &self.ordinary
    }

    /// `(class, is_template)` lookup per residue in `[1, m]`: ordinary
    /// classes are numbered from 1, the template class is 0.
    fn residue_classes(&self) -> Vec<usize> {
        let mut class_of = vec![0; self.order + 1];
        for (j, class) in self.ordinary.iter().enumerate() {
            for &r in class {
                class_of[r] = j + 1;
            }
        }
        class_of
    }
}

/// Record of a successful composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionCertificate {
    pub template_order: usize,
    pub template_colours: usize,
    pub phi: usize,
    pub inner_order: usize,
    pub inner_colours: usize,
    pub output_order: usize,
    pub output_colours: usize,
    pub report: VerifyReport,
}

impl fmt::Display for CompositionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "composition certificate")?;
        writeln!(
            f,
            "  template: m={} t={} phi={}",
            self.template_order, self.template_colours, self.phi
        )?;
        writeln!(
            f,
            "  inner:    n={} k={}",
            self.inner_order, self.inner_colours
        )?;
        writeln!(
            f,
            "  output:   n={} k={} (= {}*{}+{}, {}+{}-1)",
            self.output_order,
            self.output_colours,
            self.template_order,
            self.inner_order,
            self.phi,
            self.inner_colours,
            self.template_colours
        )?;
        write!(
            f,
            "  verification: {} ({} violations)",
            if self.report.valid {
                "valid"
            } else {
                "INVALID"
            },
            self.report.count
        )
    }
}

/// Composes `tpl` with the Schur partition `inner`.
///
/// Output colours `1 .. t-1` are the ordinary classes; colour `t - 1 + i`
/// holds the copies of `T` in blocks whose inner colour is `i`.
pub fn compose(
    tpl: &Template,
    inner: &Partition,
) -> Result<(Partition, CompositionCertificate), TemplateError> {
    let inner_report = verify_schur(inner);
    if let Some(v) = inner_report.violations.first() {
        return Err(TemplateError::InnerInvalid(*v));
    }
    let subsets = inner.subsets();
    if let Some(i) = subsets.iter().position(Vec::is_empty) {
        return Err(TemplateError::InnerEmptyColour(i + 1));
    }
    let m = tpl.order;
    let n = inner.order();
    let ordinary = tpl.ordinary.len();
    let out_order = m * n + tpl.phi;
    let out_colours = inner.colour_count() + ordinary;
    let class_of = tpl.residue_classes();
    let colouring: Vec<usize> = (1..=out_order)
        .map(|y| {
            let x = (y - 1) / m + 1;
            let r = y - (x - 1) * m;
            match class_of[r] {
                0 => ordinary + inner.colour_of(x).expect("tail positions are ordinary"),
                j => j,
            }
        })
        .collect();
    let output =
        Partition::from_colouring(out_colours, &colouring).expect("every class is non-empty");
    let report = verify_schur(&output);
    if !report.valid {
        return Err(TemplateError::Unsound(report));
    }
    let certificate = CompositionCertificate {
        template_order: m,
        template_colours: tpl.colours(),
        phi: tpl.phi,
        inner_order: n,
        inner_colours: inner.colour_count(),
        output_order: out_order,
        output_colours: out_colours,
        report,
    };
    Ok((output, certificate))
}

/// Composes repeatedly, feeding each output back in as the next inner
/// partition.
pub fn iterate(
    tpl: &Template,
    base: &Partition,
    rounds: usize,
) -> Result<Vec<(Partition, CompositionCertificate)>, TemplateError> {
    if rounds == 0 {
        return Err(TemplateError::ZeroRounds);
    }
    let mut chain: Vec<(Partition, CompositionCertificate)> = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        let inner = chain.last().map_or(base, |(p, _)| p);
        let next = compose(tpl, inner)?;
        chain.push(next);
    }
    Ok(chain)
}

/// Outcome of [`template_search`].
#[derive(Debug, Clone)]
pub struct TemplateSearchOutcome {
    pub best: Option<Template>,
    /// Orders (descending from the cap) proven to admit no template.
    pub empty_orders: Vec<usize>,
    /// False when the node budget stopped the search early.
    pub complete: bool,
    pub nodes: u64,
}

struct TemplateSearch {
    m: usize,
    t: usize,
    // class per residue: 0 = T, 1.. = ordinary, usize::MAX = unassigned
    class_of: Vec<usize>,
    sizes: Vec<usize>,
    // residues in [1, phi] may not join T
    phi: usize,
    nodes: u64,
    budget: Option<u64>,
    out_of_budget: bool,
    collect_all: bool,
    found: Vec<Template>,
}

const UNASSIGNED: usize = usize::MAX;

impl TemplateSearch {
    fn new(m: usize, t: usize, phi: usize, budget: Option<u64>, collect_all: bool) -> Self {
        Self {
            m,
            t,
            class_of: vec![UNASSIGNED; m + 1],
            sizes: vec![0; t],
            phi,
            nodes: 0,
            budget,
            out_of_budget: false,
            collect_all,
            found: Vec::new(),
        }
    }

    // Residues are assigned in ascending order, so when r joins a class every
    // triple it closes has its other members already placed.
    fn admissible(&self, r: usize, class: usize) -> bool {
        let m = self.m;
        let in_class = |x: usize| x >= 1 && x <= m && self.class_of[x] == class;
        if class == 0 {
            if r <= self.phi {
                return false;
            }
            // a + b = r with a, b < r
            return !(1..=r / 2).any(|a| in_class(a) && in_class(r - a));
        }
        // r as the sum: a + b = r
        if (1..=r / 2).any(|a| in_class(a) && in_class(r - a)) {
            return false;
        }
        // r as the largest summand of a wrapped sum: a + r = c + m, with
        // a <= r and c < r
        for a in 1..=r {
            let s = a + r;
            if s <= m {
                continue;
            }
            let c = s - m;
            let a_ok = a == r || in_class(a);
            let c_ok = c == r || in_class(c);
            if a_ok && c_ok {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, r: usize) -> bool {
        if r > self.m {
            if self.sizes.iter().all(|&s| s > 0) {
                let tpl = self.build();
                self.found.push(tpl);
                return !self.collect_all;
            }
            return false;
        }
        // remaining residues must be able to fill the empty classes
        let empty = self.sizes.iter().filter(|&&s| s == 0).count();
        if empty > self.m - r + 1 {
            return false;
        }
        let mut seen_empty_ordinary = false;
        for class in 0..self.t {
            if class > 0 && self.sizes[class] == 0 {
                // ordinary classes are interchangeable while empty
                if seen_empty_ordinary {
                    continue;
                }
                seen_empty_ordinary = true;
            }
            if !self.admissible(r, class) {
                continue;
            }
            // phi + 1 must be the minimum of T
            if r == self.phi + 1 && class != 0 && self.sizes[0] == 0 {
                continue;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                self.out_of_budget = true;
                return false;
            }
            self.class_of[r] = class;
            self.sizes[class] += 1;
            let done = self.dfs(r + 1);
            self.sizes[class] -= 1;
            self.class_of[r] = UNASSIGNED;
            if done || self.out_of_budget {
                return done;
            }
        }
        false
    }

    fn build(&self) -> Template {
        let mut t_class = Vec::new();
        let mut ordinary = vec![Vec::new(); self.t - 1];
        for r in 1..=self.m {
            match self.class_of[r] {
                0 => t_class.push(r),
                j => ordinary[j - 1].push(r),
            }
        }
        let tpl = Template::validate(self.m, self.t, &t_class, &ordinary)
            .expect("search only builds valid templates");
        debug_assert_eq!(tpl.phi, self.phi);
        tpl
    }
}

/// Searches for the largest-order template with `t` colours and order at most
/// `m_cap`, preferring larger `phi` among templates of equal order.
pub fn template_search(
    t: usize,
    m_cap: usize,
    max_nodes: Option<u64>,
) -> Result<TemplateSearchOutcome, TemplateError> {
    if t < 2 {
        return Err(TemplateError::TooFewColours);
    }
    let mut nodes = 0;
    let mut empty_orders = Vec::new();
    for m in (t..=m_cap).rev() {
        let mut exhausted_all_phi = true;
        for phi in (0..m).rev() {
            let remaining = max_nodes.map(|b| b.saturating_sub(nodes).max(1));
            let mut search = TemplateSearch::new(m, t, phi, remaining, false);
            search.dfs(1);
            nodes += search.nodes;
            if let Some(tpl) = search.found.pop() {
                return Ok(TemplateSearchOutcome {
                    best: Some(tpl),
                    empty_orders,
                    complete: true,
                    nodes,
                });
            }
            if search.out_of_budget {
                exhausted_all_phi = false;
                break;
            }
        }
        if !exhausted_all_phi {
            return Ok(TemplateSearchOutcome {
                best: None,
                empty_orders,
                complete: false,
                nodes,
            });
        }
        empty_orders.push(m);
    }
    Ok(TemplateSearchOutcome {
        best: None,
        empty_orders,
        complete: true,
        nodes,
    })
}

/// Every valid template of order `m` with `t` colours, up to relabelling of
/// the ordinary classes (ordinary classes appear in order of their least
/// element).
pub fn all_templates(t: usize, m: usize) -> Result<Vec<Template>, TemplateError> {
    if t < 2 {
        return Err(TemplateError::TooFewColours);
    }
    let mut out = Vec::new();
    for phi in 0..m {
        let mut search = TemplateSearch::new(m, t, phi, None, true);
        search.dfs(1);
        out.append(&mut search.found);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classic() -> Template {
        Template::validate(3, 2, &[2, 3], &[vec![1]]).unwrap()
    }

    #[test]
    fn validates_classic_templates() {
        let tpl = classic();
        assert_eq!(tpl.phi(), 1);
        assert_eq!(tpl.colours(), 2);
        let tpl = Template::validate(3, 2, &[1, 3], &[vec![2]]).unwrap();
        assert_eq!(tpl.phi(), 0);
    }

    #[test]
    fn no_template_of_order_four_with_two_colours() {
        for mask in 1u32..15 {
            let t_class: Vec<usize> = (1..=4).filter(|r| mask & (1 << (r - 1)) != 0).collect();
            let ordinary: Vec<usize> = (1..=4).filter(|r| mask & (1 << (r - 1)) == 0).collect();
            assert!(
                Template::validate(4, 2, &t_class, &[ordinary]).is_err(),
                "mask {mask}"
            );
        }
    }

    #[test]
    fn rejection_lists_every_failure() {
        // {1, 2} fails plainly and {3, 4} fails mod 4 (4 + 4 = 4 + 4)
        let err = Template::validate(4, 2, &[1, 2], &[vec![3, 4]]).unwrap_err();
        assert_eq!(err.failures.len(), 2);
        assert!(matches!(
            err.failures[0],
            TemplateFailure::OrdinaryNotModSumFree { class: 1, .. }
        ));
        assert!(matches!(
            err.failures[1],
            TemplateFailure::TemplateClassNotSumFree { .. }
        ));

        let err = Template::validate(4, 3, &[], &[vec![1, 5], vec![1]]).unwrap_err();
        let kinds: Vec<_> = err.failures.iter().map(std::mem::discriminant).collect();
        assert!(
            kinds.contains(&std::mem::discriminant(&TemplateFailure::OutOfRange {
                value: 0
            }))
        );
        assert!(
            kinds.contains(&std::mem::discriminant(&TemplateFailure::Overlap {
                value: 0
            }))
        );
        assert!(kinds.contains(&std::mem::discriminant(&TemplateFailure::Gap { value: 0 })));
        assert!(
            kinds.contains(&std::mem::discriminant(&TemplateFailure::EmptyClass {
                class: 0
            }))
        );

        let err = Template::validate(3, 1, &[1, 2, 3], &[]).unwrap_err();
        assert!(matches!(
            err.failures[0],
            TemplateFailure::TooFewColours { colours: 1 }
        ));
    }

    #[test]
    fn compose_classic_with_s1_and_s2() {
        let tpl = classic();
        let s1 = Partition::from_subsets(1, 1, &[vec![1]]).unwrap();
        let (out, cert) = compose(&tpl, &s1).unwrap();
        assert_eq!(out.subsets(), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!((cert.output_order, cert.output_colours), (4, 2));

        let (out, cert) = compose(&tpl, &out).unwrap();
        assert_eq!(
            out.subsets(),
            vec![vec![1, 4, 7, 10, 13], vec![2, 3, 11, 12], vec![5, 6, 8, 9]]
        );
        assert_eq!((cert.output_order, cert.output_colours), (13, 3));
        assert!(cert.report.valid);
    }

    #[test]
    fn compose_rejects_invalid_inner() {
        let bad = Partition::from_subsets(3, 2, &[vec![1, 2], vec![3]]).unwrap();
        assert!(matches!(
            compose(&classic(), &bad),
            Err(TemplateError::InnerInvalid(_))
        ));
    }

    #[test]
    fn iterate_follows_recurrence() {
        let s1 = Partition::from_subsets(1, 1, &[vec![1]]).unwrap();
        let orders: Vec<usize> = iterate(&classic(), &s1, 3)
            .unwrap()
            .iter()
            .map(|(p, _)| p.order())
            .collect();
        assert_eq!(orders, vec![4, 13, 40]);
        assert_eq!(iterate(&classic(), &s1, 0), Err(TemplateError::ZeroRounds));
    }

    #[test]
    fn smaller_phi_truncates_output() {
        let tpl = classic().with_phi(0).unwrap();
        let s2 = Partition::from_subsets(4, 2, &[vec![1, 4], vec![2, 3]]).unwrap();
        assert_eq!(compose(&tpl, &s2).unwrap().0.order(), 12);
        assert!(classic().with_phi(2).is_err());
    }

    #[test]
    fn search_finds_classic_template() {
        let out = template_search(2, 5, None).unwrap();
        let best = out.best.unwrap();
        assert_eq!(best.order(), 3);
        assert_eq!(best.template_class(), &[2, 3]);
        assert_eq!(best.phi(), 1);
        assert_eq!(out.empty_orders, vec![5, 4]);
        let out = template_search(2, 3, None).unwrap();
        assert_eq!(out.best.unwrap().template_class(), &[2, 3]);
        assert_eq!(
            template_search(1, 5, None).unwrap_err(),
            TemplateError::TooFewColours
        );
    }

    #[test]
    fn text_round_trip() {
        let tpl = classic();
        let text = tpl.to_text();
        assert!(text.contains("# template colour = 2"));
        assert_eq!(Template::parse(&text).unwrap(), tpl);
        assert!(matches!(
            Template::parse("3 2\n1\n2 3\n"),
            Err(TemplateError::Format(FormatError::MissingDirective { .. }))
        ));
        assert!(matches!(
            Template::parse("# template colour = 3\n3 2\n1\n2 3\n"),
            Err(TemplateError::BadTemplateColour { .. })
        ));
    }
}
