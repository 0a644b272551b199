//! Command-line front end. [`run`] parses arguments, calls into the library
//! and renders either text or a JSON [`Report`].

use crate::classify::{classify, Certificate, Fillability, Status};
use crate::contfrac::{
    convergents, eval, expand, honda_count, minus_reciprocal, reverse_shift, t_count, Convergents,
};
use crate::convex::{
    limit_analysis, mn_upper_bound, s_n1, slope_coeffs, LimitAnalysis, MnBound, SlopeCoeffs,
};
use crate::error::{Error, Result};
use crate::farey::{bypass_attach, bypass_oracle, default_oracle_bound, farey_edge, Side};
use crate::floer::{
    conjugation_symmetric, contact_degree, expansion, index_set, laurent_image, pairwise_distinct,
    stein_obstructed, ContactIndex, ExpansionVector, MN_THETA,
};
use crate::seifert::{
    detect_families, h1_order, linking_matrix, Family, LinkingMatrix, SeifertData,
};
use crate::selftest::{run_all, Suite};
use crate::slope::Slope;
use crate::theta::{theta_values, SurgeryDiagram, ThetaValues};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Version of the JSON report layout.
pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "sfs-tight",
    version,
    about = "Tight contact structures on small Seifert fibered spaces"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Negative continued fraction of x < -1, or of -1/r for r in (0,1).
    Cf {
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
    /// New dividing slope after a bypass along a ruling curve.
    Bypass {
        #[arg(allow_hyphen_values = true)]
        dividing: String,
        #[arg(allow_hyphen_values = true)]
        ruling: String,
        /// front or back
        side: String,
        /// Also run the brute-force search and compare.
        #[arg(long)]
        check: bool,
    },
    /// Normalized invariants, plumbing matrix, homology and family tags.
    Seifert {
        #[arg(allow_hyphen_values = true)]
        spec: String,
    },
    /// Closed-form slope on the third boundary torus and its limit.
    Slopes {
        #[arg(allow_hyphen_values = true)]
        spec: String,
        /// Number of twistings n1 = -1, -2, ... to tabulate.
        #[arg(long, default_value_t = 10)]
        count: u32,
    },
    /// Contact class expansions for M_n.
    Floer {
        #[arg(long)]
        n: i64,
        /// A single label "i,j".
        #[arg(long, allow_hyphen_values = true)]
        index: Option<String>,
    },
    /// theta = c1^2 - 3 sigma - 2 chi from a JSON surgery diagram {"L": .., "rot": ..}.
    Theta {
        #[arg(long)]
        diagram: std::path::PathBuf,
    },
    /// Count tight contact structures on "e0; r1, r2, r3" (or "r1, r2, r3").
    Classify {
        #[arg(allow_hyphen_values = true)]
        spec: String,
    },
    /// Run the exhaustive identity suites.
    Selftest,
}

/// Envelope for every JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report<T> {
    pub schema: u32,
    pub version: String,
    pub command: Vec<String>,
    pub exact: bool,
    pub result: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfReport {
    pub input: Slope,
    /// The expanded value `x < -1`.
    pub value: Slope,
    /// `r = -1/x` in `(0,1)`.
    pub r: Slope,
    #[serde(with = "crate::json::int_vec")]
    pub entries: Vec<BigInt>,
    #[serde(flatten)]
    pub convergents: Convergents,
    #[serde(with = "crate::json::int")]
    pub t: BigInt,
    #[serde(with = "crate::json::int")]
    pub solid_torus_count: BigInt,
    #[serde(with = "crate::json::int_vec")]
    pub reverse_shift: Vec<BigInt>,
    pub reverse_shift_value: Slope,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BypassReport {
    pub dividing: Slope,
    pub ruling: Slope,
    pub side: Side,
    pub edge: bool,
    pub result: Slope,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Slope>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertReport {
    pub input: String,
    pub normalized: String,
    #[serde(with = "crate::json::int")]
    pub e0: BigInt,
    pub r: [Slope; 3],
    #[serde(with = "crate::json::rational")]
    pub sum: BigRational,
    #[serde(with = "crate::json::rational")]
    pub euler_number: BigRational,
    pub convergents: Vec<Convergents>,
    #[serde(with = "crate::json::int_mat")]
    pub attaching: Vec<Vec<BigInt>>,
    pub linking_matrix: LinkingMatrix,
    #[serde(with = "crate::json::int")]
    pub h1_order: BigInt,
    pub families: Vec<Family>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeRow {
    #[serde(with = "crate::json::int")]
    pub n1: BigInt,
    /// `None` at a pole of the closed form.
    pub slope: Option<Slope>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopesReport {
    pub normalized: String,
    pub coeffs: SlopeCoeffs,
    pub values: Vec<SlopeRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<LimitAnalysis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit_error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mn: Option<MnBound>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloerRow {
    pub index: ContactIndex,
    pub expansion: ExpansionVector,
    pub laurent: String,
    pub conjugation_symmetric: bool,
    pub obstructed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloerReport {
    pub n: i64,
    #[serde(with = "crate::json::rational")]
    pub degree: BigRational,
    pub rows: Vec<FloerRow>,
    pub pairwise_distinct: bool,
    pub obstructed: Vec<ContactIndex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaReport {
    pub diagram: String,
    #[serde(flatten)]
    pub values: ThetaValues,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub input: String,
    pub normalized: String,
    #[serde(with = "crate::json::int")]
    pub e0: BigInt,
    #[serde(with = "crate::json::rational")]
    pub sum: BigRational,
    pub status: Status,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "crate::json::int_opt"
    )]
    pub count: Option<BigInt>,
    pub fillability: Fillability,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub suites: Vec<Suite>,
    pub passed: bool,
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn parse_slope(s: &str) -> Result<Slope> {
    s.parse()
}

fn render<T: Serialize>(
    argv: &[String],
    json: bool,
    result: &T,
    text: impl FnOnce() -> String,
) -> String {
    if !json {
        return text();
    }
    let report = Report {
        schema: SCHEMA,
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: argv.to_vec(),
        exact: true,
        result,
    };
    let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
    s.push('\n');
    s
}

/// Parses a JSON report and serializes it again.
pub fn reserialize<T: Serialize + DeserializeOwned>(json: &str) -> serde_json::Result<String> {
    let report: Report<T> = serde_json::from_str(json)?;
    let mut s = serde_json::to_string_pretty(&report)?;
    s.push('\n');
    Ok(s)
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(1, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    match dispatch(&echo, cli) {
        Ok(out) => out,
        Err(e) => Outcome::fail(1, format!("error: {e}\n")),
    }
}

fn dispatch(argv: &[String], cli: Cli) -> Result<Outcome> {
    let json = cli.json;
    match cli.command {
        Command::Cf { slope } => cf(argv, json, &slope).map(Outcome::ok),
        Command::Bypass {
            dividing,
            ruling,
            side,
            check,
        } => bypass(argv, json, &dividing, &ruling, &side, check).map(Outcome::ok),
        Command::Seifert { spec } => seifert(argv, json, &spec).map(Outcome::ok),
        Command::Slopes { spec, count } => slopes(argv, json, &spec, count).map(Outcome::ok),
        Command::Floer { n, index } => floer(argv, json, n, index.as_deref()).map(Outcome::ok),
        Command::Theta { diagram } => theta(argv, json, &diagram).map(Outcome::ok),
        Command::Classify { spec } => classify_cmd(argv, json, &spec),
        Command::Selftest => Ok(selftest(argv, json)),
    }
}

fn join(v: &[BigInt]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn cf(argv: &[String], json: bool, input: &str) -> Result<String> {
    let input = parse_slope(input)?;
    let value = match input.to_rational() {
        Some(x)
            if x > BigRational::from_integer(0.into())
                && x < BigRational::from_integer(1.into()) =>
        {
            minus_reciprocal(&input)?
        }
        _ => input.clone(),
    };
    let cf = expand(&value)?;
    let r = value.negate().recip();
    let shifted = reverse_shift(&cf);
    let report = CfReport {
        input,
        r: r.clone(),
        entries: cf.entries().to_vec(),
        convergents: convergents(&value)?,
        t: t_count(&r)?,
        solid_torus_count: honda_count(&value)?,
        reverse_shift: shifted.entries().to_vec(),
        reverse_shift_value: eval(&shifted)?,
        value,
    };
    Ok(render(argv, json, &report, || {
        let c = &report.convergents;
        format!(
            "{} = {}\n(p, q, u, v) = ({}, {}, {}, {})\nT({}) = {}\nsolid torus count = {}\nreverse shift = [{}] = {}\n",
            report.value,
            cf,
            c.p,
            c.q,
            c.u,
            c.v,
            report.r,
            report.t,
            report.solid_torus_count,
            join(&report.reverse_shift),
            report.reverse_shift_value
        )
    }))
}

fn bypass(
    argv: &[String],
    json: bool,
    d: &str,
    r: &str,
    side: &str,
    check: bool,
) -> Result<String> {
    let (dividing, ruling, side) = (parse_slope(d)?, parse_slope(r)?, side.parse::<Side>()?);
    if dividing == ruling {
        return Err(Error::Parse(
            "dividing and ruling slopes must differ".into(),
        ));
    }
    let result = bypass_attach(&dividing, &ruling, side);
    let oracle = check.then(|| {
        bypass_oracle(
            &dividing,
            &ruling,
            side,
            &default_oracle_bound(&dividing, &ruling),
        )
    });
    let report = BypassReport {
        edge: farey_edge(&dividing, &ruling),
        dividing,
        ruling,
        side,
        result,
        oracle,
    };
    Ok(render(argv, json, &report, || {
        let mut s = format!("{}\n", report.result);
        if let Some(o) = &report.oracle {
            let verdict = if *o == report.result {
                "agrees"
            } else {
                "DISAGREES"
            };
            let _ = writeln!(s, "brute force: {o} ({verdict})");
        }
        s
    }))
}

fn seifert(argv: &[String], json: bool, spec: &str) -> Result<String> {
    let sd: SeifertData = spec.parse()?;
    let attaching = (0..3)
        .flat_map(|i| sd.attaching(i).rows().map(|r| r.to_vec()))
        .collect();
    let report = SeifertReport {
        input: spec.to_string(),
        normalized: sd.to_string(),
        e0: sd.e0().clone(),
        r: sd.r().clone(),
        sum: sd.sum(),
        euler_number: sd.euler_number(),
        convergents: (0..3).map(|i| sd.conv(i).clone()).collect(),
        attaching,
        linking_matrix: linking_matrix(&sd),
        h1_order: h1_order(&sd),
        families: detect_families(&sd),
    };
    Ok(render(argv, json, &report, || {
        let mut s = format!("{}\n", report.normalized);
        let _ = writeln!(s, "sum = {}, e = {}", report.sum, report.euler_number);
        for i in 0..3 {
            let _ = writeln!(s, "A_{} = {}", i + 1, sd.attaching(i));
        }
        let _ = writeln!(s, "|H_1| = {}", report.h1_order);
        let tags: Vec<String> = report.families.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "family: {}", tags.join("; "));
        s
    }))
}

fn slopes(argv: &[String], json: bool, spec: &str, count: u32) -> Result<String> {
    let sd: SeifertData = spec.parse()?;
    if *sd.e0() != BigInt::from(-2) {
        return Err(Error::Parse(format!(
            "slope calculus needs e0 = -2, got {}",
            sd.e0()
        )));
    }
    let coeffs = slope_coeffs(&sd);
    let values = (1..=i64::from(count))
        .map(|k| {
            let n1 = BigInt::from(-k);
            let slope = s_n1(&coeffs, &sd, &n1).ok();
            SlopeRow { n1, slope }
        })
        .collect();
    let (limit, limit_error) = match limit_analysis(&coeffs, &sd) {
        Ok(l) => (Some(l), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let mn = match detect_families(&sd).first() {
        Some(Family::Mn { n }) => Some(mn_upper_bound(*n)?),
        _ => None,
    };
    let report = SlopesReport {
        normalized: sd.to_string(),
        coeffs,
        values,
        limit,
        limit_error,
        mn,
    };
    Ok(render(argv, json, &report, || {
        let c = &report.coeffs;
        let mut s = format!(
            "{}\nA = {}, C = {}, F = {}, D = {}\n",
            report.normalized, c.a, c.c, c.f, c.d
        );
        for row in &report.values {
            match &row.slope {
                Some(x) => writeln!(s, "n1 = {}: {}", row.n1, x),
                None => writeln!(s, "n1 = {}: undefined", row.n1),
            }
            .expect("string write");
        }
        if let Some(l) = &report.limit {
            let _ = writeln!(
                s,
                "limit {} (threshold {}, {}), increasing as n1 decreases: {}",
                l.limit,
                l.threshold,
                if l.threshold_ok { "below" } else { "above" },
                l.increasing
            );
        }
        if let Some(e) = &report.limit_error {
            let _ = writeln!(s, "limit: {e}");
        }
        if let Some(mn) = &report.mn {
            for row in &mn.per_k {
                let _ = writeln!(
                    s,
                    "k = {}: twisting {}, rounded {}, boundary {}, count {}",
                    row.k, row.twisting, row.rounded, row.boundary_slope, row.count
                );
            }
            let _ = writeln!(s, "total {}", mn.total);
        }
        s
    }))
}

fn parse_index(n: i64, s: &str) -> Result<ContactIndex> {
    let (i, j) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("index must be \"i,j\", got {s:?}")))?;
    let num = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    ContactIndex::new(n, num(i)?, num(j)?)
}

fn floer(argv: &[String], json: bool, n: i64, index: Option<&str>) -> Result<String> {
    if n < 1 {
        return Err(Error::Parse(format!("n must be positive, got {n}")));
    }
    let labels = match index {
        Some(s) => vec![parse_index(n, s)?],
        None => index_set(n),
    };
    let rows: Vec<FloerRow> = labels
        .iter()
        .map(|idx| {
            let v = expansion(idx);
            FloerRow {
                index: *idx,
                laurent: laurent_image(idx).to_string(),
                conjugation_symmetric: conjugation_symmetric(&v),
                obstructed: stein_obstructed(idx),
                expansion: v,
            }
        })
        .collect();
    let report = FloerReport {
        n,
        degree: contact_degree(&BigRational::from_integer(MN_THETA.into())),
        obstructed: index_set(n).into_iter().filter(stein_obstructed).collect(),
        pairwise_distinct: pairwise_distinct(n),
        rows,
    };
    Ok(render(argv, json, &report, || {
        let mut s = String::new();
        for row in &report.rows {
            let _ = writeln!(
                s,
                "{}: {}  {}{}",
                row.index,
                row.expansion,
                row.laurent,
                if row.obstructed {
                    "  (not Stein fillable)"
                } else {
                    ""
                }
            );
        }
        let _ = writeln!(s, "pairwise distinct: {}", report.pairwise_distinct);
        let labels: Vec<String> = report.obstructed.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "obstructed: {}", labels.join(" "));
        s
    }))
}

fn theta(argv: &[String], json: bool, path: &std::path::Path) -> Result<String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let d: SurgeryDiagram =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad diagram: {e}")))?;
    let values = theta_values(&d)?;
    let report = ThetaReport {
        diagram: path.display().to_string(),
        values,
    };
    Ok(render(argv, json, &report, || {
        let v = &report.values;
        format!(
            "c1^2 = {}\nsigma = {}\nchi = {}\ntheta = {}\n",
            v.c1sq, v.sigma, v.chi, v.theta
        )
    }))
}

fn classify_cmd(argv: &[String], json: bool, spec: &str) -> Result<Outcome> {
    let sd: SeifertData = spec.parse()?;
    let res = classify(&sd);
    let report = ClassifyReport {
        input: spec.to_string(),
        normalized: sd.to_string(),
        e0: sd.e0().clone(),
        sum: sd.sum(),
        count: res.count().cloned(),
        status: res.status,
        fillability: res.fillability,
        certificate: res.certificate,
    };
    let code = if matches!(report.status, Status::Unknown { .. }) {
        2
    } else {
        0
    };
    let out = render(argv, json, &report, || {
        let mut s = format!("{}\n", report.normalized);
        let _ = writeln!(s, "case: {}", report.certificate.case);
        let _ = writeln!(s, "tight contact structures: {}", report.status);
        let _ = writeln!(s, "fillability: {}", report.fillability);
        let _ = writeln!(s, "T values: {}", join(&report.certificate.t_values));
        s
    });
    Ok(Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    })
}

fn selftest(argv: &[String], json: bool) -> Outcome {
    let suites = run_all();
    let passed = suites.iter().all(Suite::passed);
    let report = SelftestReport { suites, passed };
    let out = render(argv, json, &report, || {
        let mut s = String::new();
        for suite in &report.suites {
            let verdict = if suite.passed() { "PASS" } else { "FAIL" };
            let _ = write!(s, "{verdict} {} ({} cases", suite.name, suite.cases);
            if let Some(f) = &suite.first_failure {
                let _ = write!(s, ", first failure: {f}");
            }
            let _ = writeln!(s, ")");
        }
        s
    });
    Outcome {
        code: if passed { 0 } else { 1 },
        stdout: out,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(std::iter::once("sfs-tight").chain(args.iter().copied()))
    }

    #[test]
    fn cf_text_and_json() {
        let o = go(&["cf", "-7/5"]);
        assert_eq!(o.code, 0);
        assert!(
            o.stdout.starts_with("-7/5 = [-2, -2, -3]\n"),
            "{}",
            o.stdout
        );
        let o = go(&["cf", "-7/5", "--json"]);
        let r: Report<CfReport> = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(r.result.t, BigInt::from(2));
        assert!(o.stdout.contains("\"entries\": [\n      -2,"));
        assert_eq!(go(&["cf", "5/7"]).stdout, go(&["cf", "-7/5"]).stdout);
        assert_eq!(go(&["cf", "3"]).code, 1);
    }

    #[test]
    fn classify_exit_codes() {
        let o = go(&["classify", "-2;1/2,2/3,11/13", "--json"]);
        assert_eq!(o.code, 0);
        let r: Report<ClassifyReport> = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(r.result.count, Some(BigInt::from(3)));
        assert_eq!(go(&["classify", "-2;1/2,3/4,4/5"]).code, 2);
        assert_eq!(go(&["classify", "-2;1/2,2/3"]).code, 1);
        assert_eq!(go(&["classify", "-2;1/2,2/3,1"]).code, 1);
        assert_eq!(go(&["bogus"]).code, 1);
        assert_eq!(go(&["--help"]).code, 0);
    }

    fn integers_only(v: &serde_json::Value) -> bool {
        use serde_json::Value;
        match v {
            Value::Number(n) => n
                .to_string()
                .bytes()
                .all(|b| b == b'-' || b.is_ascii_digit()),
            Value::Array(a) => a.iter().all(integers_only),
            Value::Object(m) => m.values().all(integers_only),
            _ => true,
        }
    }

    type Reserialize = fn(&str) -> serde_json::Result<String>;

    #[test]
    fn reports_round_trip() {
        let cases: Vec<(Vec<&str>, Reserialize)> = vec![
            (vec!["cf", "-13/11"], reserialize::<CfReport>),
            (
                vec!["bypass", "-5/2", "inf", "back", "--check"],
                reserialize::<BypassReport>,
            ),
            (
                vec!["seifert", "-2; 1/2, 2/3, 11/13"],
                reserialize::<SeifertReport>,
            ),
            (
                vec!["slopes", "-2; 1/2, 2/3, 11/13"],
                reserialize::<SlopesReport>,
            ),
            (
                vec!["slopes", "-2; 1/3, 1/3, 1/2"],
                reserialize::<SlopesReport>,
            ),
            (vec!["floer", "--n", "4"], reserialize::<FloerReport>),
            (
                vec!["classify", "-2; 7/9, 7/9, 7/9"],
                reserialize::<ClassifyReport>,
            ),
            (
                vec!["classify", "-2; 1/2, 2/3, 5/6"],
                reserialize::<ClassifyReport>,
            ),
            (
                vec!["classify", "-3; 1/2, 1/2, 1/2"],
                reserialize::<ClassifyReport>,
            ),
        ];
        for (mut args, again) in cases {
            args.push("--json");
            let o = go(&args);
            assert!(o.code == 0 || o.code == 2, "{args:?}: {}", o.stderr);
            assert_eq!(again(&o.stdout).unwrap(), o.stdout, "{args:?}");
            let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
            assert!(integers_only(&v), "{args:?} emitted a non-integer number");
        }
    }

    #[test]
    fn bypass_and_floer_text() {
        assert_eq!(go(&["bypass", "-5/2", "inf", "back"]).stdout, "-2\n");
        assert_eq!(go(&["bypass", "-5/2", "inf", "front"]).stdout, "-3\n");
        let o = go(&["floer", "--n", "2", "--index", "1,0"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("(1, 0): [-1, 1]"), "{}", o.stdout);
        assert_eq!(go(&["floer", "--n", "2", "--index", "1,1"]).code, 1);
    }

    #[test]
    fn theta_from_file() {
        let dir = std::env::temp_dir().join(format!("sfs-tight-theta-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("d.json");
        std::fs::write(&path, r#"{"L": [[-2]], "rot": [2]}"#).unwrap();
        let o = go(&["theta", "--diagram", path.to_str().unwrap()]);
        assert_eq!(o.stdout, "c1^2 = -2\nsigma = -1\nchi = 2\ntheta = -3\n");
        let o = go(&["theta", "--diagram", path.to_str().unwrap(), "--json"]);
        assert_eq!(reserialize::<ThetaReport>(&o.stdout).unwrap(), o.stdout);
        std::fs::remove_dir_all(dir).unwrap();
    }
}
