//! The `qskew` command line: argument parsing, report assembly, rendering
//! and exit codes (0 all checks pass, 1 a check failed, 2 usage error).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braided_ext::{check_inner_exterior_factorization, check_module_algebra, mul};
use crate::braiding::check_braiding;
use crate::duality::{
    check_hw_bounds, decompose, dual_cauchy_check, fundamental_decomp, verify_hwv, Partition,
};
use crate::embeddings::{
    check_commutant, check_composition, check_dequantization, check_tensor_power_characters, lambda_rep, phi_rep,
    rho_rep,
};
use crate::error::{Error, Result};
use crate::fockspace::{BasisState, GridShape, QVector};
use crate::qclifford::{check_clifford, Flavor, DEFAULT_CAP};
use crate::qgroup::{
    check_coassociativity, check_relations, check_serre, natural_rep, Coproduct, RelationCheck, Representation, Status,
};
use crate::qscalar::{parse_rational, rational_int, Rational};

#[derive(Parser, Debug)]
#[command(name = "qskew", version, about = "Exact checks of quantum skew Howe duality on braided exterior algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Rows of the grid (rank of the left factor).
    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,
    /// Columns of the grid (rank of the right factor).
    #[arg(long, global = true, default_value_t = 2)]
    pub m: usize,
    /// Specialization value for rank computations; repeatable. Defaults to 2 and 3.
    #[arg(long = "spec-q", global = true, value_parser = parse_rational_arg)]
    pub spec_q: Vec<Rational>,
    /// Largest number of positions realized as matrices.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the randomized associativity sample.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

fn parse_rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_partition_arg(s: &str) -> std::result::Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Run one family of operator identities.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
    },
    /// Decompose the braided exterior algebra of the n x m grid.
    Decompose,
    /// Check the dual Cauchy identity.
    Cauchy,
    /// Show and check the joint highest weight vector of a partition.
    Hwv {
        #[arg(long, value_parser = parse_partition_arg)]
        partition: Partition,
    },
    /// Everything except `hwv`.
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyTarget {
    Clifford,
    Qgroup,
    Embeddings,
    Commutant,
    Braiding,
    ModuleAlgebra,
}

impl VerifyTarget {
    const ALL: [VerifyTarget; 6] = [
        VerifyTarget::Clifford,
        VerifyTarget::Qgroup,
        VerifyTarget::Embeddings,
        VerifyTarget::Commutant,
        VerifyTarget::Braiding,
        VerifyTarget::ModuleAlgebra,
    ];

    fn name(self) -> &'static str {
        match self {
            VerifyTarget::Clifford => "clifford",
            VerifyTarget::Qgroup => "qgroup",
            VerifyTarget::Embeddings => "embeddings",
            VerifyTarget::Commutant => "commutant",
            VerifyTarget::Braiding => "braiding",
            VerifyTarget::ModuleAlgebra => "module-algebra",
        }
    }
}

/// The validated run settings, echoed in every report header.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub n: usize,
    pub m: usize,
    pub spec_values: Vec<String>,
    pub matrix_cap: usize,
    pub output: &'static str,
    pub seed: u64,
    #[serde(skip)]
    pub spec_rationals: Vec<Rational>,
}

impl RunConfig {
    pub fn from_options(o: &Options) -> Result<Self> {
        let shape = GridShape::new(o.n, o.m)?;
        if shape.size() > o.cap {
            return Err(Error::CapExceeded { len: shape.size(), cap: o.cap });
        }
        let spec = if o.spec_q.is_empty() { vec![rational_int(2), rational_int(3)] } else { o.spec_q.clone() };
        for v in &spec {
            if *v == rational_int(0) || *v == rational_int(1) || *v == rational_int(-1) {
                return Err(Error::OutOfRange(format!("--spec-q {} must be nonzero and not ±1", v)));
            }
        }
        Ok(Self {
            n: o.n,
            m: o.m,
            spec_values: spec.iter().map(ToString::to_string).collect(),
            matrix_cap: o.cap,
            output: if o.json { "json" } else { "text" },
            seed: o.seed,
            spec_rationals: spec,
        })
    }

    pub fn shape(&self) -> GridShape {
        GridShape { n: self.n, m: self.m }
    }
}

/// One named group of checks, with optional structured data.
#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<RelationCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    /// Extra lines for text output.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl Section {
    fn from_checks(name: impl Into<String>, checks: Vec<RelationCheck>) -> Self {
        let status = Status::from_bool(checks.iter().all(RelationCheck::passed));
        Self { name: name.into(), status, checks, data: None, notes: Vec::new() }
    }

    fn from_data<T: Serialize>(name: impl Into<String>, status: Status, data: &T) -> Self {
        let data = serde_json::to_value(data).expect("reports serialize");
        Self { name: name.into(), status, checks: Vec::new(), data: Some(data), notes: Vec::new() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config: RunConfig,
    pub sections: Vec<Section>,
    pub status: Status,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(
            out,
            "qskew {} (n={}, m={}, spec-q={}, cap={}, seed={})",
            self.command,
            c.n,
            c.m,
            c.spec_values.join(","),
            c.matrix_cap,
            c.seed
        );
        for s in &self.sections {
            let passed = s.checks.iter().filter(|c| c.passed()).count();
            let tally = if s.checks.is_empty() { String::new() } else { format!(" ({passed}/{} checks)", s.checks.len()) };
            let _ = writeln!(out, "[{}] {}{}", status_word(s.status), s.name, tally);
            for chk in s.checks.iter().filter(|c| !c.passed()) {
                let _ = writeln!(
                    out,
                    "  FAIL {} {:?}: {}",
                    chk.relation,
                    chk.indices,
                    chk.witness.as_deref().unwrap_or("")
                );
            }
            for line in &s.notes {
                let _ = writeln!(out, "  {line}");
            }
        }
        let _ = writeln!(out, "status: {}", status_word(self.status));
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}

fn rep_sections(name: &str, rep: &Representation) -> Section {
    let mut checks = check_relations(rep);
    checks.extend(check_serre(rep));
    Section::from_checks(name, checks)
}

fn associativity_sample(n: usize, seed: u64, samples: usize) -> Result<RelationCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witness = None;
    for _ in 0..samples {
        let mut pick = || BasisState::from_bits(rng.gen_range(0..1u64 << n), n).map(QVector::basis);
        let (a, b, c) = (pick()?, pick()?, pick()?);
        if mul(&mul(&a, &b)?, &c)? != mul(&a, &mul(&b, &c)?)? {
            witness = Some(format!("{a:?} {b:?} {c:?}"));
            break;
        }
    }
    Ok(RelationCheck {
        relation: "(ab)c = a(bc) on random basis triples".into(),
        indices: vec![n],
        status: Status::from_bool(witness.is_none()),
        witness,
    })
}

fn verify_sections(target: VerifyTarget, cfg: &RunConfig) -> Result<Vec<Section>> {
    let shape = cfg.shape();
    let (n, m, cap) = (cfg.n, cfg.m, cfg.matrix_cap);
    let ranks: Vec<usize> = if n == m { vec![n] } else { vec![n, m] };
    let mut out = Vec::new();
    match target {
        VerifyTarget::Clifford => {
            let len = shape.size();
            out.push(Section::from_checks(
                format!("clifford relations, quantum, {len} positions"),
                check_clifford(len, Flavor::Quantum, cap)?,
            ));
            out.push(Section::from_checks(
                format!("clifford relations, classical, {len} positions"),
                check_clifford(len, Flavor::Classical, cap)?,
            ));
        }
        VerifyTarget::Qgroup => {
            for &p in &ranks {
                let nat = natural_rep(p)?;
                out.push(rep_sections(&format!("natural module of U_q(gl_{p})"), &nat));
                out.push(rep_sections(&format!("Phi_q on {p} positions"), &phi_rep(p, cap)?));
                let mut co = check_coassociativity(&nat, &nat, &nat, Coproduct::Standard)?;
                co.extend(check_coassociativity(&nat, &nat, &nat, Coproduct::Backward)?);
                out.push(Section::from_checks(format!("coassociativity on V^3, rank {p}"), co));
            }
        }
        VerifyTarget::Embeddings => {
            out.push(rep_sections("lambda_q relations", &lambda_rep(shape, cap)?));
            out.push(rep_sections("rho_q relations", &rho_rep(shape, cap)?));
            out.push(Section::from_checks("lambda_q = Phi_q o Theta", check_composition(shape, cap)?));
            out.push(Section::from_checks("dequantization at q = 1", check_dequantization(shape, cap)?));
            out.push(Section::from_checks(
                "tensor power characters",
                vec![check_tensor_power_characters(shape, cap)?],
            ));
        }
        VerifyTarget::Commutant => {
            out.push(Section::from_checks("[lambda_q(X), rho_q(Y)] = 0", check_commutant(shape, Flavor::Quantum, cap)?));
            out.push(Section::from_checks("[lambda(X), rho(Y)] = 0", check_commutant(shape, Flavor::Classical, cap)?));
        }
        VerifyTarget::Braiding => {
            for &p in &ranks {
                out.push(Section::from_checks(format!("braiding on V (x) V, rank {p}"), check_braiding(p)?));
            }
        }
        VerifyTarget::ModuleAlgebra => {
            for &p in &ranks {
                let mut checks = check_module_algebra(p)?;
                checks.extend(check_inner_exterior_factorization(p, cap)?);
                checks.push(associativity_sample(p, cfg.seed, 64)?);
                out.push(Section::from_checks(format!("module algebra, rank {p}"), checks));
            }
        }
    }
    Ok(out)
}

fn decompose_sections(cfg: &RunConfig) -> Result<Vec<Section>> {
    let shape = cfg.shape();
    let report = decompose(shape, &cfg.spec_rationals, cfg.matrix_cap)?;
    let mut section = Section::from_data("decomposition", report.status, &report);
    for p in &report.partitions {
        let passed = p.checks.iter().all(RelationCheck::passed);
        section.notes.push(format!(
            "mu={} mu'={} dim {}x{} = {} span {} hwv v({}){}",
            p.mu,
            p.mu_conj,
            p.dim_n,
            p.dim_m,
            p.dim_n * p.dim_m,
            p.span_dim,
            p.hwv_state,
            if passed { "" } else { " CHECK FAILED" }
        ));
        let state = BasisState::parse(&p.hwv_state)?;
        section.notes.extend(shape.diagram(&state).lines().map(|l| format!("  {l}")));
    }
    section.notes.push(format!("degree profile {:?}, total {}", report.degree_profile, report.total));
    section.notes.extend(report.anomalies.iter().cloned());

    let fundamental = fundamental_decomp(cfg.n, &cfg.spec_rationals[0], cfg.matrix_cap)?;
    let fsec = Section::from_data(format!("fundamental decomposition, rank {}", cfg.n), fundamental.status, &fundamental);
    let bounds = Section::from_checks("highest weight bounds", vec![check_hw_bounds(shape)?]);
    Ok(vec![section, fsec, bounds])
}

fn cauchy_section(cfg: &RunConfig) -> Result<Section> {
    let r = dual_cauchy_check(cfg.n, cfg.m)?;
    let mut s = Section::from_data("dual Cauchy identity", r.status, &r);
    s.notes.push(format!(
        "{} terms; Schur sum {}, basis enumeration {}",
        r.terms,
        if r.schur_sum_equal { "equal" } else { "DIFFERENT" },
        if r.enumeration_equal { "equal" } else { "DIFFERENT" }
    ));
    Ok(s)
}

#[derive(Serialize)]
struct HwvData {
    mu: Partition,
    mu_conj: Partition,
    state: String,
    row_weights: Vec<usize>,
    col_weights: Vec<usize>,
}

fn hwv_section(mu: &Partition, cfg: &RunConfig) -> Result<Section> {
    let shape = cfg.shape();
    let state = mu.diagram_state(shape)?;
    let mut checks = verify_hwv(mu, shape, Flavor::Quantum)?;
    checks.extend(verify_hwv(mu, shape, Flavor::Classical)?);
    let data = HwvData {
        mu: mu.clone(),
        mu_conj: mu.conjugate(),
        state: state.to_string(),
        row_weights: mu.padded(cfg.n),
        col_weights: mu.conjugate().padded(cfg.m),
    };
    let mut s = Section::from_checks(format!("highest weight vector for {mu}"), checks);
    s.notes.push(format!("v({}) with weights mu={}, mu'={}", data.state, data.mu, data.mu_conj));
    s.notes.extend(shape.diagram(&state).lines().map(str::to_string));
    s.data = Some(serde_json::to_value(&data).expect("reports serialize"));
    Ok(s)
}

/// Runs a command and assembles its report. Errors are configuration or
/// usage problems; failed checks are reported through the status.
pub fn run(command: &Command, cfg: &RunConfig) -> Result<Report> {
    let (name, sections) = match command {
        Command::Verify { target } => (format!("verify {}", target.name()), verify_sections(*target, cfg)?),
        Command::Decompose => ("decompose".to_string(), decompose_sections(cfg)?),
        Command::Cauchy => ("cauchy".to_string(), vec![cauchy_section(cfg)?]),
        Command::Hwv { partition } => ("hwv".to_string(), vec![hwv_section(partition, cfg)?]),
        Command::All => {
            let mut sections = Vec::new();
            for t in VerifyTarget::ALL {
                sections.extend(verify_sections(t, cfg)?);
            }
            sections.extend(decompose_sections(cfg)?);
            sections.push(cauchy_section(cfg)?);
            ("all".to_string(), sections)
        }
    };
    let status = Status::from_bool(sections.iter().all(|s| s.status == Status::Pass));
    Ok(Report { command: name, config: cfg.clone(), sections, status })
}

/// Parses `args` (program name first) and runs the command without writing
/// anything. Parse errors come back as their rendered usage text.
pub fn report_for_args<I, T>(args: I) -> std::result::Result<Report, String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| e.to_string())?;
    let cfg = RunConfig::from_options(&cli.options).map_err(|e| e.to_string())?;
    run(&cli.command, &cfg).map_err(|e| e.to_string())
}

/// Parses `args`, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let cfg = match RunConfig::from_options(&cli.options) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let report = match run(&cli.command, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let rendered = if cli.options.json { report.to_json() + "\n" } else { report.to_text() };
    match &cli.options.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{rendered}"),
    }
    if report.passed() {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        std::iter::once("qskew".to_string()).chain(s.split_whitespace().map(String::from)).collect()
    }

    fn report(s: &str) -> Report {
        let cli = Cli::try_parse_from(args(s)).unwrap();
        let cfg = RunConfig::from_options(&cli.options).unwrap();
        run(&cli.command, &cfg).unwrap()
    }

    #[test]
    fn defaults_recorded() {
        let r = report("cauchy");
        assert_eq!((r.config.n, r.config.m), (2, 2));
        assert_eq!(r.config.spec_values, ["2", "3"]);
        assert!(r.passed());
    }

    #[test]
    fn hwv_text() {
        let text = report("hwv --partition 2,1").to_text();
        assert!(text.contains("v(1110) with weights mu=(2,1), mu'=(2,1)"), "{text}");
        assert!(text.contains("# #\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(main_with_args(args("hwv --partition 1,2")), 2);
        assert_eq!(main_with_args(args("cauchy --n 0")), 2);
        assert_eq!(main_with_args(args("cauchy --spec-q 1")), 2);
        assert_eq!(main_with_args(args("cauchy --n 5 --m 4")), 2);
        assert_eq!(main_with_args(args("hwv --partition 3")), 2);
    }
}
