//! Acceptance run: every criterion prints one PASS/FAIL line with its
//! elapsed time, and the process exits nonzero if any criterion fails or
//! overruns its time budget.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qskew::braided_ext::check_module_algebra;
use qskew::braiding::check_braiding;
use qskew::duality::{binomial, decompose, dual_cauchy_check, partitions_in_box, verify_hwv};
use qskew::embeddings::{
    check_commutant, check_composition, check_dequantization, check_tensor_power_characters, lambda_rep, phi_rep,
    rho_rep,
};
use qskew::qclifford::{check_clifford, DEFAULT_CAP};
use qskew::qgroup::{check_relations, check_serre, natural_rep, RelationCheck, Representation, Status};
use qskew::qscalar::rational_int;
use qskew::{Flavor, GridShape, Result};

const CAP: usize = DEFAULT_CAP;

/// Every grid with `n * m <= max`.
fn shapes(max: usize) -> Vec<GridShape> {
    let mut out = Vec::new();
    for n in 1..=max {
        for m in 1..=max / n {
            out.push(GridShape::new(n, m).unwrap());
        }
    }
    out
}

/// Collects failures as short strings.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn add(&mut self, context: &str, checks: &[RelationCheck]) {
        self.checks += checks.len();
        for c in checks.iter().filter(|c| !c.passed()) {
            self.failures.push(format!("{context}: {} {:?} {}", c.relation, c.indices, c.witness.as_deref().unwrap_or("")));
        }
    }

    fn require(&mut self, context: &str, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(context.to_string());
        }
    }
}

fn rep_suite(t: &mut Tally, context: &str, rep: &Representation) {
    t.add(context, &check_relations(rep));
    t.add(context, &check_serre(rep));
}

fn clifford() -> Result<Tally> {
    let mut t = Tally::default();
    for len in 1..=8 {
        t.add(&format!("quantum N={len}"), &check_clifford(len, Flavor::Quantum, CAP)?);
        t.add(&format!("classical N={len}"), &check_clifford(len, Flavor::Classical, CAP)?);
    }
    Ok(t)
}

fn relation_suites() -> Result<Tally> {
    let mut t = Tally::default();
    for p in 1..=6 {
        rep_suite(&mut t, &format!("natural p={p}"), &natural_rep(p)?);
        rep_suite(&mut t, &format!("Phi n={p}"), &phi_rep(p, CAP)?);
    }
    for s in shapes(12) {
        rep_suite(&mut t, &format!("lambda_q {}x{}", s.n, s.m), &lambda_rep(s, CAP)?);
        rep_suite(&mut t, &format!("rho_q {}x{}", s.n, s.m), &rho_rep(s, CAP)?);
    }
    Ok(t)
}

fn commutant() -> Result<Tally> {
    let mut t = Tally::default();
    for (n, m) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2), (3, 4), (4, 3)] {
        let s = GridShape::new(n, m)?;
        t.add(&format!("quantum {n}x{m}"), &check_commutant(s, Flavor::Quantum, CAP)?);
        t.add(&format!("classical {n}x{m}"), &check_commutant(s, Flavor::Classical, CAP)?);
    }
    Ok(t)
}

fn composition() -> Result<Tally> {
    let mut t = Tally::default();
    for s in shapes(12) {
        t.add(&format!("{}x{}", s.n, s.m), &check_composition(s, CAP)?);
    }
    Ok(t)
}

fn dequantization() -> Result<Tally> {
    let mut t = Tally::default();
    for s in shapes(12) {
        t.add(&format!("{}x{}", s.n, s.m), &check_dequantization(s, CAP)?);
    }
    Ok(t)
}

fn highest_weights() -> Result<Tally> {
    let mut t = Tally::default();
    for s in shapes(12) {
        let parts = partitions_in_box(s.n, s.m);
        t.require(
            &format!("{}x{}: partition count", s.n, s.m),
            parts.len() as u64 == binomial((s.n + s.m) as u64, s.n as u64),
        );
        for mu in &parts {
            let ctx = format!("{}x{} {mu}", s.n, s.m);
            t.add(&ctx, &verify_hwv(mu, s, Flavor::Quantum)?);
            t.add(&ctx, &verify_hwv(mu, s, Flavor::Classical)?);
        }
    }
    Ok(t)
}

fn decomposition() -> Result<Tally> {
    let mut t = Tally::default();
    let values = [rational_int(2), rational_int(3)];
    for s in shapes(12) {
        let r = decompose(s, &values, CAP)?;
        let ctx = format!("{}x{}", s.n, s.m);
        for p in &r.partitions {
            t.add(&format!("{ctx} {}", p.mu), &p.checks);
        }
        t.require(&format!("{ctx}: total {} = 2^{}", r.total, s.size()), r.total == 1 << s.size());
        t.require(&format!("{ctx}: joint span {:?}", r.joint_rank), r.joint_rank.iter().all(|&k| k == 1 << s.size()));
        t.require(&format!("{ctx}: anomalies {:?}", r.anomalies), r.anomalies.is_empty());
        t.require(&format!("{ctx}: report status"), r.status == Status::Pass);
    }
    Ok(t)
}

fn cauchy() -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=3 {
        for m in 1..=3 {
            let r = dual_cauchy_check(n, m)?;
            t.require(&format!("{n}x{m} Schur sum"), r.schur_sum_equal);
            t.require(&format!("{n}x{m} enumeration"), r.enumeration_equal);
        }
    }
    Ok(t)
}

fn braiding() -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=4 {
        t.add(&format!("n={n}"), &check_braiding(n)?);
    }
    Ok(t)
}

fn module_algebra() -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=5 {
        t.add(&format!("n={n}"), &check_module_algebra(n)?);
    }
    Ok(t)
}

fn characters() -> Result<Tally> {
    let mut t = Tally::default();
    for s in shapes(12) {
        t.add(&format!("{}x{}", s.n, s.m), &[check_tensor_power_characters(s, CAP)?]);
    }
    Ok(t)
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Result<Tally>,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, name: "Clifford operator relations, N <= 8", budget: secs(5), run: clifford },
        Criterion { id: 2, name: "relation and Serre suites", budget: secs(60), run: relation_suites },
        Criterion { id: 3, name: "commutant of lambda_q and rho_q", budget: secs(120), run: commutant },
        Criterion { id: 4, name: "composition lambda_q = Phi o Theta", budget: None, run: composition },
        Criterion { id: 5, name: "dequantization at q = 1", budget: None, run: dequantization },
        Criterion { id: 6, name: "joint highest weight vectors", budget: None, run: highest_weights },
        Criterion { id: 7, name: "decomposition at q = 2, 3", budget: None, run: decomposition },
        Criterion { id: 8, name: "dual Cauchy identity, n, m <= 3", budget: secs(10), run: cauchy },
        Criterion { id: 9, name: "braiding on V (x) V, n <= 4", budget: None, run: braiding },
        Criterion { id: 10, name: "module algebra equals Phi, n <= 5", budget: None, run: module_algebra },
        Criterion { id: 11, name: "tensor power characters", budget: None, run: characters },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run));
        let elapsed = start.elapsed();
        let budget = c.budget.map(|b| format!(" < {}s", b.as_secs())).unwrap_or_default();
        let timing = format!("{:.2}s{budget}", elapsed.as_secs_f64());
        let (ok, detail) = match outcome {
            Ok(Ok(t)) if t.failures.is_empty() => (true, format!("{} checks", t.checks)),
            Ok(Ok(t)) => (false, format!("{} of {} checks failed; first: {}", t.failures.len(), t.checks, t.failures[0])),
            Ok(Err(e)) => (false, format!("error: {e}")),
            Err(_) => (false, "panicked".to_string()),
        };
        let in_time = c.budget.map_or(true, |b| elapsed <= b);
        let ok = ok && in_time;
        let overrun = if in_time { "" } else { " (over time budget)" };
        println!("{} [{}] {} ({detail}; {timing}){overrun}", if ok { "PASS" } else { "FAIL" }, c.id, c.name);
        if !ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
