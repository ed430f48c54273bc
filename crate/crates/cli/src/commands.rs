//! One function per subcommand. Each returns whether the mathematical
//! check passed; everything else is reported through [`CliError`].

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use higher_specht::polyring::Poly;
use higher_specht::quotient::{
    almost_lower_triangular, labeled, transition_matrix, verify_basis, verify_family, BasisReport,
    DegreeCheck, GradedQuotient, IdealFamily, Normalization, RecursionLabel,
};
use higher_specht::specht::{
    build_basis_family, higher_specht, row_stabilizer_order, FamilyLabel, SpechtIndex,
};
use higher_specht::symfunc::{graded_frobenius, GradedSchurExpansion};
use higher_specht::{Error, Partition, Rational, Tableau};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::family::{
    basis_kind, cases_in_bounds, formula, require_basis_kind, FamilyArgs, FamilyName,
};
use crate::render::{csv_rows, render, series, table, Format, Render};
use crate::CliError;

/// Where and how a report is written.
pub struct Sink {
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl Sink {
    fn emit<C: Serialize, R: Render>(
        &self,
        command: &'static str,
        config: &C,
        pass: bool,
        result: &R,
    ) -> Result<bool, CliError> {
        let text = render(self.format, command, config, pass, result)?;
        match &self.output {
            Some(path) => write_file(path, &text)?,
            None => print!("{text}"),
        }
        Ok(pass)
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn family_cells(f: &IdealFamily) -> Result<[String; 2], CliError> {
    let v = serde_json::to_value(f)?;
    Ok([f.name().to_string(), v["params"].to_string()])
}

// ---------------------------------------------------------------- verify

impl Render for BasisReport {
    fn csv(&self) -> Result<String, CliError> {
        let header = ["d", "expected", "count", "rank", "ok"].map(String::from);
        let rows = self.per_degree.iter().map(|c: &DegreeCheck| {
            [c.d, c.expected, c.count, c.rank]
                .map(|x| x.to_string())
                .into_iter()
                .chain([c.ok.to_string()])
                .collect::<Vec<_>>()
        });
        csv_rows(std::iter::once(header.to_vec()).chain(rows))
    }

    fn pretty(&self) -> String {
        let mut out = format!(
            "{}: {} elements, {}\n",
            self.family,
            self.elements,
            if self.verdict { "basis" } else { "NOT a basis" }
        );
        out.push_str(&format!("Hilbert series: {}\n\n", series(&self.hilbert)));
        let rows: Vec<Vec<String>> = self
            .per_degree
            .iter()
            .map(|c| {
                vec![
                    c.d.to_string(),
                    c.expected.to_string(),
                    c.count.to_string(),
                    c.rank.to_string(),
                    if c.ok { "ok" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        out.push_str(&table(&["degree", "dim", "count", "rank", ""], &rows));
        for f in &self.failures {
            out.push_str(&format!("  {f}\n"));
        }
        out
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Leave out the last N family members, as a negative control.
    #[arg(long, default_value_t = 0)]
    pub drop: usize,
}

#[derive(Serialize)]
struct VerifyConfig<'a> {
    #[serde(flatten)]
    family: &'a IdealFamily,
    drop: usize,
}

pub fn verify(args: &VerifyArgs, sink: &Sink) -> Result<bool, CliError> {
    let family = args.family.resolve()?;
    let kind = require_basis_kind(&family)?;
    let report = if args.drop == 0 {
        verify_family(&kind)?
    } else {
        let mut members = labeled(&build_basis_family(&kind)?);
        members.truncate(members.len().saturating_sub(args.drop));
        verify_basis(&GradedQuotient::of_family(&family)?, &members)
    };
    let config = VerifyConfig {
        family: &family,
        drop: args.drop,
    };
    sink.emit("verify", &config, report.verdict, &report)
}

// ------------------------------------------------------------- frobenius

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Compare {
    Formula,
}

#[derive(Args, Debug)]
pub struct FrobeniusArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Also compute the closed-form character and compare.
    #[arg(long, value_enum)]
    pub compare: Option<Compare>,
}

#[derive(Serialize)]
struct FrobeniusConfig<'a> {
    #[serde(flatten)]
    family: &'a IdealFamily,
    compare: Option<Compare>,
}

#[derive(Serialize)]
pub struct Character {
    pub text: String,
    pub terms: GradedSchurExpansion,
}

impl Character {
    fn new(e: GradedSchurExpansion) -> Self {
        Character {
            text: e.to_string(),
            terms: e,
        }
    }
}

#[derive(Serialize)]
pub struct FrobeniusResult {
    #[serde(flatten)]
    pub family: IdealFamily,
    pub hilbert: Vec<usize>,
    pub character: Character,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<Character>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equal: Option<bool>,
}

impl Render for FrobeniusResult {
    fn csv(&self) -> Result<String, CliError> {
        let mut rows = vec![vec![
            "source".to_string(),
            "degree".into(),
            "lambda".into(),
            "mult".into(),
        ]];
        let mut push = |source: &str, c: &Character| {
            for (d, lam, m) in c.terms.terms() {
                rows.push(vec![
                    source.into(),
                    d.to_string(),
                    lam.to_string(),
                    m.to_string(),
                ]);
            }
        };
        push("module", &self.character);
        if let Some(f) = &self.formula {
            push("formula", f);
        }
        csv_rows(rows)
    }

    fn pretty(&self) -> String {
        let mut out = format!("grFrob({}) = {}\n", self.family, self.character.text);
        if let (Some(f), Some(eq)) = (&self.formula, self.equal) {
            out.push_str(&format!("formula    = {}\n", f.text));
            out.push_str(if eq { "equal\n" } else { "DIFFERENT\n" });
        }
        out
    }
}

pub fn frobenius(args: &FrobeniusArgs, sink: &Sink) -> Result<bool, CliError> {
    let family = args.family.resolve()?;
    let expected = match args.compare {
        Some(Compare::Formula) => Some(formula(&family)?),
        None => None,
    };
    let q = GradedQuotient::of_family(&family)?;
    let got = graded_frobenius(&q)?;
    let equal = expected.as_ref().map(|e| *e == got);
    let result = FrobeniusResult {
        family: family.clone(),
        hilbert: q.hilbert().to_vec(),
        character: Character::new(got),
        formula: expected.map(Character::new),
        equal,
    };
    let config = FrobeniusConfig {
        family: &family,
        compare: args.compare,
    };
    sink.emit("frobenius", &config, equal.unwrap_or(true), &result)
}

// ------------------------------------------------------------ transition

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalizeArg {
    Raw,
    Stabilizer,
}

impl From<NormalizeArg> for Normalization {
    fn from(n: NormalizeArg) -> Self {
        match n {
            NormalizeArg::Raw => Normalization::Raw,
            NormalizeArg::Stabilizer => Normalization::Stabilizer,
        }
    }
}

#[derive(Args, Debug)]
pub struct TransitionArgs {
    #[arg(long)]
    pub mu: Partition,
    /// Degree.
    #[arg(long = "d", alias = "degree")]
    pub d: usize,
    #[arg(long, value_enum, default_value = "raw")]
    pub normalize: NormalizeArg,
    /// Where to write the row and column labels. Defaults to
    /// `<output>.labels.json` when writing CSV to a file.
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Serialize)]
struct TransitionConfig<'a> {
    mu: &'a Partition,
    degree: usize,
    normalization: Normalization,
}

#[derive(Serialize)]
pub struct Labels<'a> {
    rows: &'a [FamilyLabel],
    columns: &'a [RecursionLabel],
}

#[derive(Serialize)]
pub struct TransitionResult {
    pub mu: Partition,
    pub degree: usize,
    pub normalization: Normalization,
    pub rows: Vec<FamilyLabel>,
    pub columns: Vec<RecursionLabel>,
    pub matrix: Vec<Vec<Rational>>,
    pub lower_triangular: bool,
    pub almost_lower_triangular: bool,
    /// Upper triangular `A` with `MA` lower triangular.
    pub witness: Option<Vec<Vec<Rational>>>,
}

fn matrix_rows(m: &higher_specht::linalg::Matrix) -> Vec<Vec<Rational>> {
    (0..m.nrows()).map(|i| m.row(i).to_vec()).collect()
}

fn is_lower_triangular(rows: &[Vec<Rational>]) -> bool {
    rows.iter()
        .enumerate()
        .all(|(i, r)| r.iter().skip(i + 1).all(|x| x.is_zero()))
}

fn aligned(rows: &[Vec<Rational>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    let w = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
    let mut out = String::new();
    for r in &cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>w$}")).collect();
        out.push_str(&format!("  [{}]\n", line.join(" ")));
    }
    out
}

impl Render for TransitionResult {
    fn csv(&self) -> Result<String, CliError> {
        csv_rows(
            self.matrix
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        )
    }

    fn pretty(&self) -> String {
        let mut out = format!(
            "μ = ({}), degree {}, {} normalization: {}×{}\n\nrows:\n",
            self.mu,
            self.degree,
            serde_json::to_value(self.normalization)
                .unwrap()
                .as_str()
                .unwrap(),
            self.rows.len(),
            self.columns.len()
        );
        for (i, r) in self.rows.iter().enumerate() {
            out.push_str(&format!("  {:>2}  {r}\n", i + 1));
        }
        out.push_str("columns:\n");
        for (j, c) in self.columns.iter().enumerate() {
            out.push_str(&format!("  {:>2}  {c}\n", j + 1));
        }
        out.push_str("\nM =\n");
        out.push_str(&aligned(&self.matrix));
        match &self.witness {
            Some(_) if self.lower_triangular => out.push_str("\nM is lower triangular\n"),
            Some(a) => {
                out.push_str("\nalmost lower triangular, A =\n");
                out.push_str(&aligned(a));
            }
            None => out.push_str("\nNOT almost lower triangular\n"),
        }
        out
    }
}

pub fn transition(args: &TransitionArgs, sink: &Sink) -> Result<bool, CliError> {
    let norm = Normalization::from(args.normalize);
    let t = transition_matrix(&args.mu, args.d, norm)?;
    let witness = almost_lower_triangular(&t.matrix).map(|a| matrix_rows(&a));
    let matrix = matrix_rows(&t.matrix);
    let result = TransitionResult {
        mu: t.mu,
        degree: t.degree,
        normalization: t.normalization,
        lower_triangular: t.matrix.nrows() == t.matrix.ncols() && is_lower_triangular(&matrix),
        almost_lower_triangular: witness.is_some(),
        witness,
        matrix,
        rows: t.rows,
        columns: t.columns,
    };
    let sidecar = match (&args.labels, &sink.output, sink.format) {
        (Some(p), _, _) => Some(p.clone()),
        (None, Some(out), Format::Csv) => {
            let mut name = out.as_os_str().to_owned();
            name.push(".labels.json");
            Some(PathBuf::from(name))
        }
        _ => None,
    };
    if let Some(path) = sidecar {
        let labels = Labels {
            rows: &result.rows,
            columns: &result.columns,
        };
        write_file(&path, &(serde_json::to_string_pretty(&labels)? + "\n"))?;
    }
    let config = TransitionConfig {
        mu: &args.mu,
        degree: args.d,
        normalization: norm,
    };
    sink.emit(
        "transition",
        &config,
        result.almost_lower_triangular,
        &result,
    )
}

// --------------------------------------------------------------- hilbert

#[derive(Serialize)]
pub struct HilbertResult {
    #[serde(flatten)]
    pub family: IdealFamily,
    pub hilbert: Vec<usize>,
    pub dimension: usize,
}

impl Render for HilbertResult {
    fn csv(&self) -> Result<String, CliError> {
        let rows = self
            .hilbert
            .iter()
            .enumerate()
            .map(|(d, h)| vec![d.to_string(), h.to_string()]);
        csv_rows(std::iter::once(vec!["d".to_string(), "dim".into()]).chain(rows))
    }

    fn pretty(&self) -> String {
        format!(
            "Hilb({}) = {}\ndimension {}\n",
            self.family,
            series(&self.hilbert),
            self.dimension
        )
    }
}

pub fn hilbert(args: &FamilyArgs, sink: &Sink) -> Result<bool, CliError> {
    let family = args.resolve()?;
    let q = GradedQuotient::of_family(&family)?;
    let result = HilbertResult {
        family: family.clone(),
        hilbert: q.hilbert().to_vec(),
        dimension: q.dim(),
    };
    sink.emit("hilbert", &family, true, &result)
}

// ----------------------------------------------------------- specht-eval

#[derive(Args, Debug)]
pub struct SpechtArgs {
    /// Semistandard tableau, rows bottom to top separated by `/`.
    #[arg(long = "S", alias = "s")]
    pub s: Tableau,
    /// Standard tableau of the same shape.
    #[arg(long = "T", alias = "t")]
    pub t: Tableau,
    #[arg(long, value_enum, default_value = "raw")]
    pub normalize: NormalizeArg,
}

#[derive(Serialize)]
struct SpechtConfig<'a> {
    #[serde(rename = "S")]
    s: &'a Tableau,
    #[serde(rename = "T")]
    t: &'a Tableau,
    normalization: Normalization,
}

#[derive(Serialize)]
pub struct SpechtResult {
    #[serde(rename = "S")]
    pub s: Tableau,
    #[serde(rename = "T")]
    pub t: Tableau,
    pub shape: Partition,
    pub nvars: usize,
    pub degree: Option<usize>,
    pub terms: usize,
    pub poly: String,
}

impl Render for SpechtResult {
    fn csv(&self) -> Result<String, CliError> {
        let degree = self.degree.map_or(String::new(), |d| d.to_string());
        csv_rows([
            vec!["S".to_string(), "T".into(), "degree".into(), "poly".into()],
            vec![
                self.s.to_string(),
                self.t.to_string(),
                degree,
                self.poly.clone(),
            ],
        ])
    }

    fn pretty(&self) -> String {
        format!(
            "F_T^S with S = [{}], T = [{}]:\n{}\n",
            self.s, self.t, self.poly
        )
    }
}

pub fn specht_eval(args: &SpechtArgs, sink: &Sink) -> Result<bool, CliError> {
    let idx = SpechtIndex::new(args.s.clone(), args.t.clone())?;
    let norm = Normalization::from(args.normalize);
    let mut p: Poly = higher_specht(&idx)?;
    if norm == Normalization::Stabilizer {
        p = p.scale(&Rational::from_bigint(row_stabilizer_order(&args.s)?).recip());
    }
    let result = SpechtResult {
        s: args.s.clone(),
        t: args.t.clone(),
        shape: args.s.shape(),
        nvars: p.nvars(),
        degree: p.degree(),
        terms: p.terms().count(),
        poly: p.to_string(),
    };
    let config = SpechtConfig {
        s: &args.s,
        t: &args.t,
        normalization: norm,
    };
    sink.emit("specht-eval", &config, true, &result)
}

// ----------------------------------------------------------------- sweep

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// The basis family descends to a basis.
    #[default]
    Basis,
    /// The module character equals the closed-form formula.
    Frobenius,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// JSON sweep configuration; replaces the bound flags.
    #[arg(long, conflicts_with_all = ["family", "min_n", "max_n", "check"])]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum, ignore_case = true)]
    pub family: Option<FamilyName>,
    #[arg(long, default_value_t = 1)]
    pub min_n: usize,
    #[arg(long, default_value_t = 0)]
    pub max_n: usize,
    #[arg(long, value_enum)]
    pub check: Option<Check>,
}

fn default_min_n() -> usize {
    1
}

/// A sweep: every case of `family` with `n_min ≤ n ≤ n_max`, followed by
/// the explicit `cases`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub check: Check,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyName>,
    #[serde(default = "default_min_n")]
    pub n_min: usize,
    #[serde(default)]
    pub n_max: usize,
    #[serde(default)]
    pub cases: Vec<IdealFamily>,
}

#[derive(Serialize)]
pub struct CaseResult {
    #[serde(flatten)]
    pub family: IdealFamily,
    pub verdict: bool,
    pub dimension: usize,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
pub struct SweepResult {
    pub check: Check,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl Render for SweepResult {
    fn csv(&self) -> Result<String, CliError> {
        let mut rows = vec![["family", "params", "verdict", "dimension", "failures"]
            .map(String::from)
            .to_vec()];
        for c in &self.cases {
            let [name, params] = family_cells(&c.family)?;
            rows.push(vec![
                name,
                params,
                c.verdict.to_string(),
                c.dimension.to_string(),
                c.failures.join("; "),
            ]);
        }
        csv_rows(rows)
    }

    fn pretty(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .cases
            .iter()
            .map(|c| {
                vec![
                    c.family.to_string(),
                    c.dimension.to_string(),
                    if c.verdict { "ok" } else { "FAIL" }.to_string(),
                    c.failures.first().cloned().unwrap_or_default(),
                ]
            })
            .collect();
        let mut out = table(&["case", "dim", "", ""], &rows);
        out.push_str(&format!(
            "\n{} cases: {} passed, {} failed\n",
            self.total, self.passed, self.failed
        ));
        out
    }
}

impl SweepArgs {
    pub fn resolve(&self) -> Result<SweepConfig, CliError> {
        match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                Ok(serde_json::from_str(&text)?)
            }
            None => Ok(SweepConfig {
                check: self.check.unwrap_or_default(),
                family: self.family,
                n_min: self.min_n,
                n_max: self.max_n,
                cases: Vec::new(),
            }),
        }
    }
}

fn run_case(family: &IdealFamily, check: Check) -> Result<CaseResult, CliError> {
    match check {
        Check::Basis => {
            let r = verify_family(&require_basis_kind(family)?)?;
            Ok(CaseResult {
                family: family.clone(),
                verdict: r.verdict,
                dimension: r.hilbert.iter().sum(),
                failures: r.failures,
            })
        }
        Check::Frobenius => {
            let expected = formula(family)?;
            let q = GradedQuotient::of_family(family)?;
            let (verdict, failures) = match graded_frobenius(&q) {
                Ok(got) if got == expected => (true, Vec::new()),
                Ok(got) => (false, vec![format!("module {got} but formula {expected}")]),
                Err(e @ Error::Inconsistent(_)) => (false, vec![e.to_string()]),
                Err(e) => return Err(e.into()),
            };
            Ok(CaseResult {
                family: family.clone(),
                verdict,
                dimension: q.dim(),
                failures,
            })
        }
    }
}

pub fn sweep(args: &SweepArgs, sink: &Sink) -> Result<bool, CliError> {
    let config = args.resolve()?;
    let mut cases = match config.family {
        Some(name) => cases_in_bounds(
            name,
            config.n_min,
            config.n_max,
            config.check == Check::Basis,
        ),
        None if config.n_max > 0 => {
            return Err(CliError::Usage("sweep bounds need a family".into()));
        }
        None => Vec::new(),
    };
    cases.extend(config.cases.iter().cloned());
    // Reject bad cases before any work starts.
    for c in &cases {
        c.validate()?;
        match config.check {
            Check::Basis if basis_kind(c).is_none() => {
                return Err(CliError::Usage(format!("no basis family is known for {c}")));
            }
            Check::Frobenius => {
                formula(c)?;
            }
            _ => {}
        }
    }
    let results = cases
        .par_iter()
        .map(|c| run_case(c, config.check))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = results.iter().filter(|r| r.verdict).count();
    let result = SweepResult {
        check: config.check,
        total: results.len(),
        passed,
        failed: results.len() - passed,
        cases: results,
    };
    let pass = result.failed == 0;
    sink.emit("sweep", &config, pass, &result)
}
