//! Verification suites with machine-readable reports.

use crate::output::Format;
use anyhow::Result;
use atlas_components::{
    balance_identity, even_interleave_identity, even_rank_shift_identity,
    hsystem_determinant_factor_identity, odd_charpoly_factorization, odd_hsystem_identity,
    product_hsystem_identity, rank_profile_partition, verify_membership,
};
use atlas_forests::{enumerate_forests, jordan_partition, ForestShape, Tree};
use atlas_matrices::sylvester_resultant_check;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Membership,
    Jordan,
    Identity28,
    Lifts,
    Resultant,
    All,
}

#[derive(Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
}

pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let payload = json!({
                    "suite": self.suite,
                    "anchors": self.checks.iter().map(|c| c.name.clone()).collect::<Vec<_>>(),
                    "pass": self.pass(),
                    "witnesses": self.checks.iter().filter(|c| !c.pass).map(|c| {
                        json!({"check": c.name, "detail": c.detail})
                    }).collect::<Vec<Value>>(),
                    "checks": self.checks.iter().map(|c| {
                        json!({"name": c.name, "pass": c.pass, "detail": c.detail})
                    }).collect::<Vec<Value>>(),
                });
                serde_json::to_string_pretty(&payload).expect("serializable") + "\n"
            }
            _ => {
                let mut out = String::new();
                for c in &self.checks {
                    out.push_str(&format!(
                        "[{}] {}{}\n",
                        if c.pass { "pass" } else { "FAIL" },
                        c.name,
                        c.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default()
                    ));
                }
                out.push_str(&format!(
                    "suite {}: {}\n",
                    self.suite,
                    if self.pass() { "pass" } else { "FAIL" }
                ));
                out
            }
        }
    }
}

fn check(name: impl Into<String>, outcome: std::result::Result<(), String>) -> Check {
    match outcome {
        Ok(()) => Check { name: name.into(), pass: true, detail: None },
        Err(d) => Check { name: name.into(), pass: false, detail: Some(d) },
    }
}

fn checked<T>(name: impl Into<String>, r: anyhow::Result<T>, ok: impl Fn(&T) -> bool, detail: impl Fn(&T) -> String) -> Check {
    match r {
        Ok(v) if ok(&v) => Check { name: name.into(), pass: true, detail: Some(detail(&v)) },
        Ok(v) => Check { name: name.into(), pass: false, detail: Some(detail(&v)) },
        Err(e) => Check { name: name.into(), pass: false, detail: Some(e.to_string()) },
    }
}

pub fn run_suite(suite: Suite, i_max: usize, seed: u64) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    let suites: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::Resultant,
            Suite::Membership,
            Suite::Jordan,
            Suite::Identity28,
            Suite::Lifts,
        ],
        s => vec![s],
    };
    for s in suites {
        reports.push(match s {
            Suite::Resultant => resultant_suite(),
            Suite::Membership => membership_suite(i_max),
            Suite::Jordan => jordan_suite(i_max, seed),
            Suite::Identity28 => identity28_suite(i_max),
            Suite::Lifts => lifts_suite(seed),
            Suite::All => unreachable!(),
        });
    }
    Ok(reports)
}

fn resultant_suite() -> Report {
    let mut checks = Vec::new();
    for m in 3..=8usize {
        checks.push(checked(
            format!("resultant.hurwitz-vs-sylvester.m{m}"),
            sylvester_resultant_check(m).map_err(anyhow::Error::from),
            |r| r.equal_up_to_sign,
            |r| format!("sign {}", r.sign),
        ));
    }
    Report { suite: "resultant".into(), checks }
}

fn membership_suite(i_max: usize) -> Report {
    let mut checks = Vec::new();
    for i in 1..=i_max.min(6) {
        for j in 1..=i {
            let name = format!("membership.vanishing.i{i}.j{j}");
            let mut failure: Option<String> = None;
            let mut count = 0usize;
            'outer: for f in enumerate_forests(i, j) {
                let shape = ForestShape::new(&f);
                let orbits = atlas_forests::weight_orbits(&shape);
                for rep in &orbits.reps {
                    count += 1;
                    if let Err(e) = verify_membership(&shape, rep) {
                        failure = Some(e.to_string());
                        break 'outer;
                    }
                }
            }
            checks.push(match failure {
                None => Check { name, pass: true, detail: Some(format!("{count} components")) },
                Some(d) => Check { name, pass: false, detail: Some(d) },
            });
        }
    }
    Report { suite: "membership".into(), checks }
}

fn jordan_suite(i_max: usize, seed: u64) -> Report {
    let mut checks = Vec::new();
    for i in 1..=i_max.min(5) {
        let name = format!("jordan.rank-vs-trimming.i{i}");
        let mut outcome = Ok(());
        'outer: for j in 1..=i {
            for f in enumerate_forests(i, j) {
                let shape = ForestShape::new(&f);
                let orbits = atlas_forests::weight_orbits(&shape);
                for rep in &orbits.reps {
                    match rank_profile_partition(&shape, rep, 2, seed) {
                        Ok(p) if p == jordan_partition(&f) => {}
                        Ok(p) => {
                            outcome = Err(format!(
                                "forest {f}: ranks give {p}, trimming gives {}",
                                jordan_partition(&f)
                            ));
                            break 'outer;
                        }
                        Err(e) => {
                            outcome = Err(e.to_string());
                            break 'outer;
                        }
                    }
                }
            }
        }
        checks.push(check(name, outcome));
    }
    // The 22-node trimming fixture.
    let r1 = Tree::node(vec![Tree::chain(2), Tree::chain(2)]);
    let r2 = Tree::node(vec![Tree::node(vec![r1]), Tree::leaf()]);
    let up = Tree::node(vec![Tree::node(vec![r2])]);
    let r6 = Tree::node(vec![Tree::leaf(), Tree::leaf()]);
    let r5 = Tree::node(vec![Tree::leaf(), Tree::node(vec![r6])]);
    let r4 = Tree::node(vec![Tree::chain(2), Tree::node(vec![r5])]);
    let low = Tree::node(vec![r4]);
    let t = Tree::node(vec![up, low]);
    let sigma = jordan_partition(&atlas_forests::Forest::new(vec![t]));
    checks.push(check(
        "jordan.trimming-fixture.22-nodes",
        if sigma == atlas_arith::Partition::new(vec![8, 7, 2, 2, 1, 1, 1]) {
            Ok(())
        } else {
            Err(format!("got {sigma}"))
        },
    ));
    Report { suite: "jordan".into(), checks }
}

fn identity28_suite(i_max: usize) -> Report {
    let mut checks = Vec::new();
    for i in 1..=i_max.min(7) {
        for j in 1..=i {
            checks.push(checked(
                format!("identity.degree-multiplicity-balance.i{i}.j{j}"),
                balance_identity(i, j).map_err(anyhow::Error::from),
                |(got, expect)| got == expect,
                |(got, expect)| format!("sum c*mu = {got}, expected {expect}"),
            ));
        }
    }
    Report { suite: "identity28".into(), checks }
}

fn lifts_suite(seed: u64) -> Report {
    let mut checks = Vec::new();
    for m in [4usize, 6, 8, 10] {
        checks.push(checked(
            format!("lift.even.interleave-charpoly.m{m}"),
            even_interleave_identity(m).map_err(anyhow::Error::from),
            |r| r.holds,
            |r| format!("sign {}", r.sign),
        ));
    }
    for m in 2..=6usize {
        checks.push(checked(
            format!("lift.even.rank-shift.m{m}"),
            even_rank_shift_identity(m, 2, seed).map_err(anyhow::Error::from),
            |ok| *ok,
            |_| "ranks shift by one power".into(),
        ));
    }
    for alpha in 2..=4usize {
        checks.push(checked(
            format!("lift.odd.charpoly-factorization.alpha{alpha}"),
            odd_charpoly_factorization(alpha).map_err(anyhow::Error::from),
            |r| r.holds,
            |r| format!("sign {}", r.sign),
        ));
    }
    for alpha in 2..=3usize {
        checks.push(checked(
            format!("lift.odd.coefficient-table.alpha{alpha}"),
            odd_hsystem_identity(alpha).map_err(anyhow::Error::from),
            |_| true,
            |p| format!("sign pattern {p:?}"),
        ));
    }
    for alpha in 2..=5usize {
        checks.push(checked(
            format!("lift.odd.determinant-factor.alpha{alpha}"),
            hsystem_determinant_factor_identity(alpha).map_err(anyhow::Error::from),
            |s| *s == 1 || *s == -1,
            |s| format!("global sign {s} with alternating parity"),
        ));
    }
    for m in 2..=6usize {
        for i in 1..=2usize.min(m - 1) {
            checks.push(checked(
                format!("series.product-coefficient-table.m{m}.i{i}"),
                product_hsystem_identity(m, i).map_err(anyhow::Error::from),
                |r| r.holds,
                |r| format!("sign {}", r.sign),
            ));
        }
    }
    Report { suite: "lifts".into(), checks }
}
