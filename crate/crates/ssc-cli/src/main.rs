//! Reproducible table and report emitters over the exact machinery in
//! `ssc-core`: root-datum summaries, the labeled inventory of simple
//! supercuspidals over a chosen field, verification sweeps, and the
//! parameter numerology.  Identical invocations produce byte-identical
//! output; every number is exact.
//!
//! Exit codes: 0 success, 2 usage or domain error, 3 computation budget
//! exceeded (a partial report is still emitted), 4 a verification check
//! failed (the full report is still emitted).

use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use ssc_core::chevalley::ChevalleyTable;
use ssc_core::gf::Field;
use ssc_core::inventory::{class_representatives, formal_degree_ep};
use ssc_core::lparam::{
    adjoint_l_ratio, conditional_on, derive_from_fdc, gamma_principal, kostant_ratio,
    mu_jx, principal_parameter, ssc_parameter_invariants, FdcCandidate,
    ASSUMPTION_A1_FORMAL_DEGREE, ASSUMPTION_A2_BASE_CHANGE,
};
use ssc_core::orbits::{hx_orbits, OrbitError, StableSet};
use ssc_core::poly::{IntPoly, RatFunc};
use ssc_core::root_data::{Family, RootDatum};

#[derive(Parser)]
#[command(
    name = "ssc",
    version,
    about = "Exact classification and parameter numerology for simple supercuspidal \
             representations of split adjoint p-adic groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    Orbits,
    Signs,
    Kostant,
    Fdc,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Summarize a root datum: marks, Coxeter number, exponents, |Omega|, dim g.
    Info { family: String, rank: usize },
    /// The labeled inventory over GF(p^n): class representatives, labels,
    /// and the formal degree.
    Classify {
        family: String,
        rank: usize,
        p: u64,
        n: usize,
    },
    /// Run a verification suite and report each check.
    Verify {
        suite: Option<Suite>,
        /// Largest field size used in brute-force orbit sweeps.
        #[arg(long, default_value_t = 9)]
        q_max: u64,
        /// Work budget for orbit enumeration (elements times generators).
        #[arg(long, default_value_t = 1 << 24)]
        budget: u64,
        /// Run every suite at default settings and emit one consolidated
        /// JSON report.
        #[arg(long)]
        seed_sweep: bool,
    },
    /// Numerical invariants of the attached parameter, conditional on the
    /// named assumptions A1 and A2.
    Lparams { family: String, rank: usize },
}

enum CliError {
    Usage(String),
    Budget { report: String, detail: String },
    Checks { report: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => match deliver(&cli.out, &report) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget { report, detail }) => {
            let _ = deliver(&cli.out, &report);
            eprintln!("error: {detail}");
            ExitCode::from(3)
        }
        Err(CliError::Checks { report }) => {
            let _ = deliver(&cli.out, &report);
            eprintln!("error: one or more checks failed");
            ExitCode::from(4)
        }
    }
}

fn deliver(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            let mut stdout = std::io::stdout();
            stdout.write_all(content.as_bytes())?;
            stdout.flush()
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.cmd {
        Cmd::Info { family, rank } => cmd_info(family, *rank, cli.format),
        Cmd::Classify { family, rank, p, n } => cmd_classify(family, *rank, *p, *n, cli.format),
        Cmd::Verify {
            suite,
            q_max,
            budget,
            seed_sweep,
        } => cmd_verify(*suite, *q_max, *budget, *seed_sweep, cli.format),
        Cmd::Lparams { family, rank } => cmd_lparams(family, *rank, cli.format),
    }
}

fn parse_datum(family: &str, rank: usize) -> Result<RootDatum, CliError> {
    let fam: Family = family
        .parse()
        .map_err(|e| CliError::Usage(format!("{e}")))?;
    RootDatum::new(fam, rank).map_err(|e| CliError::Usage(format!("{e}")))
}

const SYMBOLIC_VAR: &str = "q";

/// Reduced rational function as coefficient lists (constant term first,
/// decimal strings) plus a display form.
#[derive(Serialize)]
struct RatFuncJson {
    num: Vec<String>,
    den: Vec<String>,
    display: String,
}

fn ratfunc_json(r: &RatFunc) -> RatFuncJson {
    RatFuncJson {
        num: r.num().coeffs().iter().map(|c| c.to_string()).collect(),
        den: r.den().coeffs().iter().map(|c| c.to_string()).collect(),
        display: r.to_string(),
    }
}

/// Row-oriented rendering shared by the csv and md formats.
struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

fn render<T: Serialize>(format: Format, json: &T, table: &Table) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(json).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.headers).expect("in-memory write");
            for row in &table.rows {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
        }
        Format::Md => {
            let mut s = String::new();
            s.push_str(&format!("| {} |\n", table.headers.join(" | ")));
            s.push_str(&format!(
                "|{}|\n",
                table.headers.iter().map(|_| " --- ").collect::<Vec<_>>().join("|")
            ));
            for row in &table.rows {
                s.push_str(&format!("| {} |\n", row.join(" | ")));
            }
            s
        }
    }
}

#[derive(Serialize)]
struct InfoReport {
    #[serde(rename = "type")]
    family: String,
    rank: usize,
    marks: Vec<u64>,
    coxeter_number: usize,
    exponents: Vec<usize>,
    omega_order: usize,
    dim_g: usize,
    num_roots: usize,
    cartan_det: i64,
}

fn cmd_info(family: &str, rank: usize, format: Format) -> Result<String, CliError> {
    let rd = parse_datum(family, rank)?;
    let report = InfoReport {
        family: rd.family().to_string(),
        rank: rd.rank(),
        marks: rd.marks().to_vec(),
        coxeter_number: rd.coxeter_number(),
        exponents: rd.exponents().to_vec(),
        omega_order: rd.omega_order(),
        dim_g: rd.dim_g(),
        num_roots: rd.num_roots(),
        cartan_det: rd.cartan_det(),
    };
    let join = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(";")
    };
    let table = Table {
        headers: vec![
            "type",
            "rank",
            "marks",
            "coxeter_number",
            "exponents",
            "omega_order",
            "dim_g",
            "num_roots",
            "cartan_det",
        ],
        rows: vec![vec![
            report.family.clone(),
            report.rank.to_string(),
            report
                .marks
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            report.coxeter_number.to_string(),
            join(&report.exponents),
            report.omega_order.to_string(),
            report.dim_g.to_string(),
            report.num_roots.to_string(),
            report.cartan_det.to_string(),
        ]],
    };
    Ok(render(format, &report, &table))
}

#[derive(Serialize)]
struct ClassifyRow {
    delta_class: u64,
    lambda: Vec<u64>,
    psi: usize,
    formal_degree_numerator: String,
    formal_degree_denominator: String,
}

fn cmd_classify(
    family: &str,
    rank: usize,
    p: u64,
    n: usize,
    format: Format,
) -> Result<String, CliError> {
    let rd = parse_datum(family, rank)?;
    let field = Field::new(p, n).map_err(|e| CliError::Usage(format!("{e}")))?;
    if field.order() > u128::from(u32::MAX) {
        return Err(CliError::Usage(
            "field too large to tabulate; pick a smaller q".into(),
        ));
    }
    let fd = formal_degree_ep(&rd);
    let fd_num = fd.value.num().to_string();
    let fd_den = fd.value.den().to_string();
    let mut rows = Vec::new();
    for rep in class_representatives(&rd, &field) {
        let delta = field.index_of(&rep.lam().delta(&rd)) as u64;
        let lambda: Vec<u64> = rep
            .lam()
            .entries()
            .iter()
            .map(|e| field.index_of(e) as u64)
            .collect();
        for psi in 0..rd.omega_order() {
            rows.push(ClassifyRow {
                delta_class: delta,
                lambda: lambda.clone(),
                psi,
                formal_degree_numerator: fd_num.clone(),
                formal_degree_denominator: fd_den.clone(),
            });
        }
    }
    let table = Table {
        headers: vec![
            "delta_class",
            "lambda",
            "psi",
            "formal_degree_numerator",
            "formal_degree_denominator",
        ],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.delta_class.to_string(),
                    r.lambda
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(";"),
                    r.psi.to_string(),
                    r.formal_degree_numerator.clone(),
                    r.formal_degree_denominator.clone(),
                ]
            })
            .collect(),
    };
    Ok(render(format, &rows, &table))
}

#[derive(Serialize)]
struct LparamsReport {
    #[serde(rename = "type")]
    family: String,
    rank: usize,
    q: &'static str,
    alpha: u64,
    swan: u64,
    l_function: &'static str,
    packet_size: u64,
    inertia_fixed_dim: u64,
    center_order: u64,
    formal_degree: RatFuncJson,
    gamma_magnitude: RatFuncJson,
    conditional_on: Vec<&'static str>,
    assumptions: Vec<&'static str>,
    notes: Vec<String>,
}

fn cmd_lparams(family: &str, rank: usize, format: Format) -> Result<String, CliError> {
    let rd = parse_datum(family, rank)?;
    let inv = ssc_parameter_invariants(&rd);
    let fd = formal_degree_ep(&rd);
    let gamma = gamma_principal(&rd)
        .magnitude()
        .expect("dim g + rank is even for supported types");
    let report = LparamsReport {
        family: rd.family().to_string(),
        rank: rd.rank(),
        q: "symbolic",
        alpha: inv.alpha,
        swan: inv.swan,
        l_function: "1",
        packet_size: inv.packet_size,
        inertia_fixed_dim: inv.inertia_fixed_dim,
        center_order: rd.cartan_det() as u64,
        formal_degree: ratfunc_json(&fd.value),
        gamma_magnitude: ratfunc_json(&gamma),
        conditional_on: conditional_on().to_vec(),
        assumptions: vec![ASSUMPTION_A1_FORMAL_DEGREE, ASSUMPTION_A2_BASE_CHANGE],
        notes: inv.notes.clone(),
    };
    let table = Table {
        headers: vec![
            "type",
            "rank",
            "alpha",
            "swan",
            "l_function",
            "packet_size",
            "inertia_fixed_dim",
            "center_order",
            "formal_degree",
            "gamma_magnitude",
            "conditional_on",
        ],
        rows: vec![vec![
            report.family.clone(),
            report.rank.to_string(),
            report.alpha.to_string(),
            report.swan.to_string(),
            report.l_function.to_string(),
            report.packet_size.to_string(),
            report.inertia_fixed_dim.to_string(),
            report.center_order.to_string(),
            report.formal_degree.display.clone(),
            report.gamma_magnitude.display.clone(),
            report.conditional_on.join(";"),
        ]],
    };
    Ok(render(format, &report, &table))
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    instance: String,
    statement: &'static str,
    pass: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    suite: String,
    q_max: u64,
    budget: u64,
    complete: bool,
    total: usize,
    failed: usize,
    checks: Vec<Check>,
}

const SIGN_STATEMENT: &str = "for each diagram rotation, the product over the affine \
     diagram of the signs it induces on root vectors, weighted by the marks, is 1";
const ORBIT_STATEMENT: &str = "orbits of the stabilizer group on stable covectors are \
     exactly the fibers of Delta, one per unit of the field";
const KOSTANT_STATEMENT: &str = "the principal parameter's L(1)/L(0) equals \
     q^l * prod_i (q^{m_i} - 1)/(q^{m_i+1} - 1) over the exponents";
const SQUARE_STATEMENT: &str = "formal degree * |Omega| * mu(J) = 1 as rational functions";
const FDC_FORCE_STATEMENT: &str = "the formal-degree identity forces alpha = dim g + l, \
     every P_n constant equal to 1, and a trivial enhancement";
const FDC_REJECT_STATEMENT: &str = "candidates with a mutated P_n or a shifted alpha \
     fail the formal-degree identity";

fn sign_checks(checks: &mut Vec<Check>) {
    let cases = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::D, 5),
        (Family::E, 6),
        (Family::G, 2),
        (Family::F, 4),
    ];
    for (fam, rank) in cases {
        let rd = RootDatum::new(fam, rank).expect("supported type");
        let table = ChevalleyTable::new(&rd);
        checks.push(Check {
            name: "sign-product",
            instance: rd.to_string(),
            statement: SIGN_STATEMENT,
            pass: table.verify_sign_product(&rd.omega()),
        });
    }
}

fn orbit_matrix(q_max: u64) -> Vec<(RootDatum, Field)> {
    let cases = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
        (Family::F, 4),
    ];
    let fields = [(2u64, 1usize), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];
    let mut out = Vec::new();
    for (fam, rank) in cases {
        for (p, n) in fields {
            let f = Field::new(p, n).expect("prime power");
            if f.order() > u128::from(q_max) {
                continue;
            }
            if (f.order() - 1).pow(rank as u32 + 1) <= 1_000_000 {
                out.push((RootDatum::new(fam, rank).expect("supported"), f));
            }
        }
    }
    for q in [2u64, 3] {
        if q <= q_max {
            out.push((
                RootDatum::new(Family::E, 6).expect("supported"),
                Field::new(q, 1).expect("prime"),
            ));
        }
    }
    out
}

/// Brute-force one (type, field) cell; Ok(pass) or the budget error.
fn orbit_cell(rd: &RootDatum, f: &Field, budget: u64) -> Result<bool, OrbitError> {
    let table = ChevalleyTable::new(rd);
    let part = hx_orbits(rd, f, &table, budget)?;
    let set = StableSet::new(rd, f);
    let mut rep_of_fiber: BTreeMap<u64, u64> = BTreeMap::new();
    for idx in 0..set.size() {
        let d = set.delta_exponent(rd, idx);
        let rep = *rep_of_fiber.entry(d).or_insert(idx);
        if !part.same_class(rep, idx) {
            return Ok(false);
        }
    }
    Ok(rep_of_fiber.len() == part.num_classes()
        && part.num_classes() as u128 == f.order() - 1)
}

fn orbit_checks(checks: &mut Vec<Check>, q_max: u64, budget: u64) -> Result<(), String> {
    for (rd, f) in orbit_matrix(q_max) {
        match orbit_cell(&rd, &f, budget) {
            Ok(pass) => checks.push(Check {
                name: "orbit-classification",
                instance: format!("{rd} over GF({})", f.order()),
                statement: ORBIT_STATEMENT,
                pass,
            }),
            Err(OrbitError::BudgetExceeded { needed, budget }) => {
                return Err(format!(
                    "{rd} over GF({}) needs {needed} steps, budget {budget}",
                    f.order()
                ));
            }
        }
    }
    Ok(())
}

fn symbolic_types() -> Vec<RootDatum> {
    let mut out = Vec::new();
    for r in 1..=8 {
        out.push(RootDatum::new(Family::A, r).expect("supported"));
    }
    for r in 2..=8 {
        out.push(RootDatum::new(Family::B, r).expect("supported"));
        out.push(RootDatum::new(Family::C, r).expect("supported"));
    }
    for r in 4..=8 {
        out.push(RootDatum::new(Family::D, r).expect("supported"));
    }
    for r in 6..=8 {
        out.push(RootDatum::new(Family::E, r).expect("supported"));
    }
    out.push(RootDatum::new(Family::F, 4).expect("supported"));
    out.push(RootDatum::new(Family::G, 2).expect("supported"));
    out
}

fn kostant_checks(checks: &mut Vec<Check>) {
    for rd in symbolic_types() {
        let ratio = adjoint_l_ratio(&principal_parameter(&rd));
        checks.push(Check {
            name: "kostant-ratio",
            instance: rd.to_string(),
            statement: KOSTANT_STATEMENT,
            pass: ratio.map(|r| r == kostant_ratio(&rd)).unwrap_or(false),
        });
        let fd = formal_degree_ep(&rd).value;
        let omega = RatFunc::from_poly(IntPoly::from_i64s(
            &[rd.omega_order() as i64],
            SYMBOLIC_VAR,
        ));
        checks.push(Check {
            name: "volume-elimination",
            instance: rd.to_string(),
            statement: SQUARE_STATEMENT,
            pass: fd.mul(&omega).mul(&mu_jx(&rd).value).is_one(),
        });
    }
}

fn fdc_checks(checks: &mut Vec<Check>) {
    for rd in symbolic_types() {
        let forced = derive_from_fdc(&rd, &FdcCandidate::unknowns());
        let expected_alpha = (rd.dim_g() + rd.rank()) as u64;
        checks.push(Check {
            name: "fdc-forcing",
            instance: rd.to_string(),
            statement: FDC_FORCE_STATEMENT,
            pass: forced
                .map(|v| v.consistent && v.alpha_forced == expected_alpha)
                .unwrap_or(false),
        });
        let mutations = [
            FdcCandidate {
                pn: Some(BTreeMap::from([(2, IntPoly::from_i64s(&[1, -1], "t"))])),
                ..FdcCandidate::unknowns()
            },
            FdcCandidate {
                pn: Some(BTreeMap::from([(4, IntPoly::from_i64s(&[1, 1], "t"))])),
                ..FdcCandidate::unknowns()
            },
            FdcCandidate {
                alpha: Some(expected_alpha as i64 + 1),
                ..FdcCandidate::unknowns()
            },
            FdcCandidate {
                alpha: Some(expected_alpha as i64 - 1),
                ..FdcCandidate::unknowns()
            },
        ];
        let all_rejected = mutations.iter().all(|c| {
            derive_from_fdc(&rd, c)
                .map(|v| !v.consistent)
                .unwrap_or(false)
        });
        checks.push(Check {
            name: "fdc-rejects-perturbations",
            instance: rd.to_string(),
            statement: FDC_REJECT_STATEMENT,
            pass: all_rejected,
        });
    }
}

fn cmd_verify(
    suite: Option<Suite>,
    q_max: u64,
    budget: u64,
    seed_sweep: bool,
    format: Format,
) -> Result<String, CliError> {
    let (suite, q_max, budget, format) = if seed_sweep {
        (Suite::All, 9, 1 << 24, Format::Json)
    } else {
        let suite = suite.ok_or_else(|| {
            CliError::Usage("a suite is required unless --seed-sweep is given".into())
        })?;
        (suite, q_max, budget, format)
    };
    let suite_name = match suite {
        Suite::Orbits => "orbits",
        Suite::Signs => "signs",
        Suite::Kostant => "kostant",
        Suite::Fdc => "fdc",
        Suite::All => "all",
    };
    let mut checks = Vec::new();
    let mut budget_detail = None;
    if matches!(suite, Suite::Signs | Suite::All) {
        sign_checks(&mut checks);
    }
    if matches!(suite, Suite::Orbits | Suite::All) {
        if let Err(detail) = orbit_checks(&mut checks, q_max, budget) {
            budget_detail = Some(detail);
        }
    }
    if matches!(suite, Suite::Kostant | Suite::All) {
        kostant_checks(&mut checks);
    }
    if matches!(suite, Suite::Fdc | Suite::All) {
        fdc_checks(&mut checks);
    }
    let failed = checks.iter().filter(|c| !c.pass).count();
    let report = VerifyReport {
        suite: suite_name.to_string(),
        q_max,
        budget,
        complete: budget_detail.is_none(),
        total: checks.len(),
        failed,
        checks,
    };
    let table = Table {
        headers: vec!["name", "instance", "pass"],
        rows: report
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.name.to_string(),
                    c.instance.clone(),
                    c.pass.to_string(),
                ]
            })
            .collect(),
    };
    let rendered = render(format, &report, &table);
    if let Some(detail) = budget_detail {
        return Err(CliError::Budget {
            report: rendered,
            detail,
        });
    }
    if failed > 0 {
        return Err(CliError::Checks { report: rendered });
    }
    Ok(rendered)
}
