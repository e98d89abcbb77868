//! Runs the selected checks over catalog entries and renders the report.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::CatalogEntry;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::invariants::{self, Analysis, GroupInvariants};
use crate::theorem::{self, TheoremVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// `p^d <= E p^2` and the equality characterization.
    Theorem,
    /// Nilpotent bound `p^(d-1) <= E` with its greedy chain.
    Lemma,
    /// `E(G)` is the product of `E(P)` over Sylow subgroups.
    Star,
    /// `p^2 prod p_i^(d(P_i)-1) >= p^d`.
    Star3,
    /// `E(H/N)` divides `E(G)` on sampled sections.
    Sections,
    /// `d(G) <= 1 + max d(P)`.
    Gl,
    /// Odd `E` forces solvability, with the parity argument.
    Proposition,
    /// d-maximality over the subgroup lattice.
    Dmax,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Theorem,
        Check::Lemma,
        Check::Star,
        Check::Star3,
        Check::Sections,
        Check::Gl,
        Check::Proposition,
        Check::Dmax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem => "theorem",
            Check::Lemma => "lemma",
            Check::Star => "star",
            Check::Star3 => "star3",
            Check::Sections => "sections",
            Check::Gl => "gl",
            Check::Proposition => "proposition",
            Check::Dmax => "dmax",
        }
    }

    /// Comma-separated names, deduplicated into canonical order.
    pub fn parse_list(text: &str) -> Result<Vec<Check>> {
        let mut checks = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Check>>>()?;
        checks.sort();
        checks.dedup();
        Ok(checks)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown check {s:?}")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not evaluated because a cap was reached.
    Skipped,
    /// Does not apply to this group.
    Na,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Na => "na",
        }
    }

    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectationResult {
    pub field: String,
    pub expected: String,
    pub actual: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub name: String,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<GroupInvariants>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremVerdict>,
    pub checks: Vec<CheckOutcome>,
    pub expectations: Vec<ExpectationResult>,
    /// Why the invariants could not be computed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl EntryReport {
    pub fn status_of(&self, check: Check) -> Option<Status> {
        self.checks.iter().find(|c| c.check == check).map(|c| c.status)
    }

    pub fn outcome(&self, check: Check) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.check == check)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub entries: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub na: usize,
    pub expectation_failures: usize,
    pub entry_errors: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub seed: u64,
    pub caps: Caps,
    pub sample_count: usize,
    pub checks: Vec<Check>,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub checks: Vec<Check>,
    pub seed: u64,
    pub caps: Caps,
    /// Evaluated section samples required per entry.
    pub sample_count: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            checks: Check::ALL.to_vec(),
            seed: 0,
            caps: Caps::default(),
            sample_count: 20,
        }
    }
}

fn detail<T: Serialize>(report: &T) -> Option<Value> {
    Some(serde_json::to_value(report).expect("reports serialize"))
}

fn outcome(check: Check, status: Status, reason: Option<String>, detail: Option<Value>) -> CheckOutcome {
    CheckOutcome {
        check,
        status,
        reason,
        detail,
    }
}

fn from_error(check: Check, err: Error) -> CheckOutcome {
    let status = if err.is_cap() { Status::Skipped } else { Status::Fail };
    outcome(check, status, Some(err.to_string()), None)
}

fn run_check(check: Check, a: &Analysis, config: &RunConfig) -> CheckOutcome {
    let inv = &a.invariants;
    let trivial = inv.smallest_prime.is_none();
    let na = |why: &str| outcome(check, Status::Na, Some(why.to_string()), None);
    let result: Result<CheckOutcome> = (|| {
        Ok(match check {
            Check::Theorem => {
                let v = theorem::theorem_verdict(inv);
                if !v.applicable {
                    return Ok(na("trivial group: no prime divides the order"));
                }
                let ok = v.holds && v.consistent;
                let reason = (!ok).then(|| {
                    format!(
                        "p^d = {} vs E*p^2 = {}; equality {} but predicted {}",
                        v.lhs_scaled.as_ref().unwrap(),
                        v.rhs_scaled.as_ref().unwrap(),
                        v.equality,
                        v.predicted_equality
                    )
                });
                outcome(check, Status::from_bool(ok), reason, detail(&v))
            }
            Check::Lemma => {
                if trivial {
                    return Ok(na("trivial group"));
                }
                if !inv.flags.nilpotent {
                    return Ok(na("not nilpotent"));
                }
                let r = theorem::check_lemma(a, &config.caps)?;
                let reason = (!r.holds).then(|| {
                    format!(
                        "p^d = {} vs E*p = {}; max order is exponent: {}; chain within bound: {}",
                        r.lhs_scaled,
                        r.rhs_scaled,
                        r.max_order_is_exponent,
                        r.chain.iter().all(|s| s.within_bound)
                    )
                });
                outcome(check, Status::from_bool(r.holds), reason, detail(&r))
            }
            Check::Star => {
                let r = theorem::check_multiplicativity(a)?;
                let reason =
                    (!r.holds).then(|| format!("E = {} vs product {}", r.ratio_e, r.product));
                outcome(check, Status::from_bool(r.holds), reason, detail(&r))
            }
            Check::Star3 => {
                if trivial {
                    return Ok(na("trivial group"));
                }
                let r = theorem::check_star3(a)?;
                let ok = r.holds && r.e_dominates_sylow_bound;
                let reason = (!ok).then(|| {
                    format!(
                        "p^2 prod = {} vs p^d = {}; E = {} vs prod = {}",
                        r.lhs, r.rhs, inv.ratio_e, r.sylow_bound
                    )
                });
                outcome(check, Status::from_bool(ok), reason, detail(&r))
            }
            Check::Sections => {
                let r = theorem::check_section_divisibility(
                    a,
                    config.sample_count,
                    config.seed,
                    &config.caps,
                )?;
                let violations: Vec<String> = r
                    .samples
                    .iter()
                    .filter(|s| !s.divides)
                    .map(|s| format!("{}/{}: E = {}", s.subgroup, s.normal, s.quotient_e))
                    .collect();
                let (status, reason) = if !violations.is_empty() {
                    (
                        Status::Fail,
                        Some(format!("E(G) = {} not divisible: {}", inv.ratio_e, violations.join("; "))),
                    )
                } else if r.samples.len() < r.requested {
                    (
                        Status::Skipped,
                        Some(format!(
                            "only {} of {} samples evaluated; {} skipped at caps",
                            r.samples.len(),
                            r.requested,
                            r.skipped.len()
                        )),
                    )
                } else {
                    (Status::Pass, None)
                };
                outcome(check, status, reason, detail(&r))
            }
            Check::Gl => {
                if trivial {
                    return Ok(na("trivial group"));
                }
                let r = theorem::check_gl_bound(a)?;
                let reason =
                    (!r.holds).then(|| format!("d = {} vs 1 + {}", r.d, r.max_sylow_d));
                outcome(check, Status::from_bool(r.holds), reason, detail(&r))
            }
            Check::Proposition => {
                let r = theorem::check_proposition(a, &config.caps)?;
                let reason = (!r.holds).then(|| {
                    format!(
                        "E = {} odd; solvable {}; regular parity odd {:?} (explicit {:?}); kernel index {:?}",
                        inv.ratio_e,
                        r.solvable,
                        r.regular_image_odd,
                        r.regular_image_odd_explicit,
                        r.parity_kernel_index
                    )
                });
                outcome(check, Status::from_bool(r.holds), reason, detail(&r))
            }
            Check::Dmax => {
                let r = theorem::is_d_maximal(&a.group, &config.caps)?;
                // d-maximality is a property, not a claim; only an internal
                // contradiction fails.
                let ok = !r.d_maximal || r.exceeds_maximal;
                outcome(check, Status::from_bool(ok), None, detail(&r))
            }
        })
    })();
    result.unwrap_or_else(|e| from_error(check, e))
}

fn expectations(entry: &CatalogEntry, inv: &GroupInvariants) -> Vec<ExpectationResult> {
    let Some(x) = &entry.expect else {
        return Vec::new();
    };
    let d = BigUint::from(inv.d as u64);
    [
        ("order", &x.order, &inv.order),
        ("exponent", &x.exponent, &inv.exponent),
        ("E", &x.ratio_e, &inv.ratio_e),
        ("d", &x.d, &d),
    ]
    .into_iter()
    .filter_map(|(field, expected, actual)| {
        expected.as_ref().map(|e| ExpectationResult {
            field: field.to_string(),
            expected: e.to_string(),
            actual: actual.to_string(),
            matches: e == actual,
        })
    })
    .collect()
}

pub fn run_entry(entry: &CatalogEntry, config: &RunConfig) -> EntryReport {
    let mut report = EntryReport {
        name: entry.name.clone(),
        degree: entry.degree,
        invariants: None,
        theorem: None,
        checks: Vec::new(),
        expectations: Vec::new(),
        error: None,
    };
    let analysis = entry
        .group()
        .and_then(|g| invariants::analyze(&g, &config.caps));
    match analysis {
        Ok(a) => {
            report.expectations = expectations(entry, &a.invariants);
            report.theorem = Some(theorem::theorem_verdict(&a.invariants));
            report.checks = config.checks.iter().map(|&c| run_check(c, &a, config)).collect();
            report.invariants = Some(a.invariants);
        }
        Err(e) => {
            let status = if e.is_cap() { Status::Skipped } else { Status::Fail };
            report.checks = config
                .checks
                .iter()
                .map(|&c| outcome(c, status, Some(e.to_string()), None))
                .collect();
            report.error = Some(e.to_string());
        }
    }
    report
}

/// Entries run in parallel; the report keeps catalog order.
pub fn run_suite(entries: &[CatalogEntry], config: &RunConfig) -> RunReport {
    let reports: Vec<EntryReport> = entries.par_iter().map(|e| run_entry(e, config)).collect();
    let mut summary = Summary {
        entries: reports.len(),
        ..Summary::default()
    };
    for r in &reports {
        for c in &r.checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Na => summary.na += 1,
            }
        }
        summary.expectation_failures += r.expectations.iter().filter(|x| !x.matches).count();
        summary.entry_errors += usize::from(r.error.is_some());
    }
    RunReport {
        seed: config.seed,
        caps: config.caps,
        sample_count: config.sample_count,
        checks: config.checks.clone(),
        entries: reports,
        summary,
    }
}

impl RunReport {
    /// 0 when nothing failed and skips are absent or allowed, 1 otherwise.
    pub fn exit_code(&self, allow_skips: bool) -> i32 {
        let s = &self.summary;
        let failed = s.fail > 0 || s.expectation_failures > 0;
        if failed || (s.skipped > 0 && !allow_skips) {
            1
        } else {
            0
        }
    }

    /// Pretty JSON with a trailing newline; a pure function of the report.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per entry. Check columns hold `pass`, `fail`, `skipped`, `na`,
    /// or nothing when the check was not selected.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header: Vec<&str> = vec![
            "name", "order", "exponent", "E", "d", "p", "lhs_scaled", "rhs_scaled", "equality",
        ];
        header.extend(Check::ALL.iter().map(|c| c.name()));
        header.push("expectations");
        w.write_record(&header)?;
        for e in &self.entries {
            let opt = |v: Option<String>| v.unwrap_or_default();
            let inv = e.invariants.as_ref();
            let th = e.theorem.as_ref();
            let mut row = vec![
                e.name.clone(),
                opt(inv.map(|i| i.order.to_string())),
                opt(inv.map(|i| i.exponent.to_string())),
                opt(inv.map(|i| i.ratio_e.to_string())),
                opt(inv.map(|i| i.d.to_string())),
                opt(inv.and_then(|i| i.smallest_prime).map(|p| p.to_string())),
                opt(th.and_then(|t| t.lhs_scaled.as_ref()).map(ToString::to_string)),
                opt(th.and_then(|t| t.rhs_scaled.as_ref()).map(ToString::to_string)),
                opt(th.filter(|t| t.applicable).map(|t| t.equality.to_string())),
            ];
            row.extend(
                Check::ALL
                    .iter()
                    .map(|&c| opt(e.status_of(c).map(|s| s.as_str().to_string()))),
            );
            row.push(if e.expectations.is_empty() {
                String::new()
            } else {
                e.expectations.iter().all(|x| x.matches).to_string()
            });
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}
