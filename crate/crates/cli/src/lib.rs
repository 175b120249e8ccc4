//! Commands behind the `ellgenus` binary and the serializable report they
//! produce.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use ellgenus::arith::{factorize, Factorization};
use ellgenus::exact::{rational_to_string, Integer, Rational};
use ellgenus::genus::{elliptic_genus, genus_in_chern};
use ellgenus::localize::{
    chern_table, euler_number, first_chern_class_check, line_degree, ChernTable, CompleteIntersection,
    EquivariantPoint,
};
use ellgenus::parabolic::{CrossedDiagram, ParabolicData};
use ellgenus::qseries::{basis_monomials, basis_weight0};
use ellgenus::rootsys::{DynkinType, RootSystem, Weight};
use ellgenus::verify;
use serde::{Deserialize, Serialize};

pub const MAX_Q_ORDER: usize = 10;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(_) => 1,
        }
    }
}

impl From<ellgenus::Error> for CliError {
    fn from(e: ellgenus::Error) -> Self {
        use ellgenus::Error as E;
        match e {
            E::UnsupportedType(_)
            | E::NodeOutOfRange { .. }
            | E::EmptyCrossing
            | E::Dimension { .. }
            | E::NotIntegral(_)
            | E::NotDominant(_)
            | E::Parse(_)
            | E::BasisDimension(_) => CliError::Usage(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Roots,
    Cosets,
    ChernTable,
    Degrees,
    Genus,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Roots => "roots",
            Command::Cosets => "cosets",
            Command::ChernTable => "chern-table",
            Command::Degrees => "degrees",
            Command::Genus => "genus",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Md,
    Json,
    Csv,
}

/// Job settings before defaults are applied. Flags win over the job file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Settings {
    pub dynkin: Option<String>,
    pub cross: Option<Vec<usize>>,
    pub weight: Option<Vec<i64>>,
    pub q_order: Option<usize>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
    pub threads: Option<usize>,
}

pub fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| usage(format!("invalid {what} entry {t:?}"))))
        .collect()
}

fn parse_one<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.trim().parse().map_err(|_| usage(format!("invalid {what} {s:?}")))
}

impl Settings {
    /// Reads `key = value` lines; `#` starts a comment.
    pub fn from_job_text(text: &str) -> Result<Self, CliError> {
        let mut s = Settings::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("job file line {}: expected key = value", n + 1)))?;
            let v = v.trim();
            match k.trim().replace('-', "_").as_str() {
                "type" => s.dynkin = Some(v.to_string()),
                "cross" | "crossed" => s.cross = Some(parse_list(v, "node")?),
                "weight" => s.weight = Some(parse_list(v, "weight")?),
                "q_order" => s.q_order = Some(parse_one(v, "q-order")?),
                "seed" => s.seed = Some(parse_one(v, "seed")?),
                "threads" => s.threads = Some(parse_one(v, "thread count")?),
                "format" => {
                    s.format = Some(match v {
                        "md" => Format::Md,
                        "json" => Format::Json,
                        "csv" => Format::Csv,
                        _ => return Err(usage(format!("invalid format {v:?}"))),
                    })
                }
                other => return Err(usage(format!("job file line {}: unknown key {other:?}", n + 1))),
            }
        }
        Ok(s)
    }

    pub fn from_job_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        Self::from_job_text(&text)
    }

    /// `self` overrides `base` field by field.
    pub fn over(self, base: Settings) -> Settings {
        Settings {
            dynkin: self.dynkin.or(base.dynkin),
            cross: self.cross.or(base.cross),
            weight: self.weight.or(base.weight),
            q_order: self.q_order.or(base.q_order),
            seed: self.seed.or(base.seed),
            format: self.format.or(base.format),
            threads: self.threads.or(base.threads),
        }
    }

    pub fn resolve(self) -> Result<JobSpec, CliError> {
        let q_order = self.q_order.unwrap_or(1);
        if q_order > MAX_Q_ORDER {
            return Err(usage(format!("q-order {q_order} exceeds {MAX_Q_ORDER}")));
        }
        let dynkin = self.dynkin.map(|t| t.parse::<DynkinType>()).transpose()?;
        if let (Some(ty), Some(w)) = (dynkin, &self.weight) {
            if w.len() != ty.rank() {
                return Err(usage(format!("weight has {} coordinates, rank of {ty} is {}", w.len(), ty.rank())));
            }
        }
        if self.threads == Some(0) {
            return Err(usage("thread count must be positive"));
        }
        Ok(JobSpec {
            dynkin,
            crossed: self.cross.unwrap_or_default(),
            weight: self.weight,
            q_order,
            seed: self.seed.unwrap_or(0),
            format: self.format.unwrap_or_default(),
            threads: self.threads,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub dynkin: Option<DynkinType>,
    pub crossed: Vec<usize>,
    pub weight: Option<Vec<i64>>,
    pub q_order: usize,
    pub seed: u64,
    pub format: Format,
    pub threads: Option<usize>,
}

impl JobSpec {
    fn dynkin(&self) -> Result<DynkinType, CliError> {
        self.dynkin.ok_or_else(|| usage("missing --type"))
    }

    fn diagram(&self) -> Result<CrossedDiagram, CliError> {
        if self.crossed.is_empty() {
            return Err(usage("missing --cross"));
        }
        Ok(CrossedDiagram::new(self.dynkin()?, &self.crossed)?)
    }

    fn variety(&self) -> Result<CompleteIntersection, CliError> {
        let d = self.diagram()?;
        let w = self.weight.as_ref().ok_or_else(|| usage("missing --weight"))?;
        Ok(CompleteIntersection::new(&d, &Weight::from_ints(w))?)
    }

    fn record(&self) -> JobRecord {
        JobRecord {
            dynkin: self.dynkin.map(|t| t.to_string()),
            crossed: self.crossed.clone(),
            weight: self.weight.clone(),
            q_order: self.q_order,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobRecord {
    #[serde(rename = "type")]
    pub dynkin: Option<String>,
    pub crossed: Vec<usize>,
    pub weight: Option<Vec<i64>>,
    pub q_order: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    #[serde(rename = "type")]
    pub dynkin: String,
    pub rank: usize,
    pub dimension: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Simple-root coordinates, by height.
    pub positive_roots: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetRep {
    /// 1-based simple reflections.
    pub word: Vec<usize>,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetsReport {
    pub diagram: String,
    pub dim: usize,
    pub levi_nodes: Vec<usize>,
    pub levi_weyl_order: usize,
    pub num_cosets: usize,
    pub tangent_weights: Vec<Vec<i64>>,
    pub representatives: Vec<CosetRep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub monomial: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationEntry {
    pub negative: bool,
    pub primes: Vec<(String, u32)>,
    pub cofactor: Option<String>,
    pub text: String,
}

impl From<&Factorization> for FactorizationEntry {
    fn from(f: &Factorization) -> Self {
        FactorizationEntry {
            negative: f.negative,
            primes: f.primes.iter().map(|(p, e)| (p.to_string(), *e)).collect(),
            cofactor: f.cofactor.as_ref().map(|c| c.to_string()),
            text: f.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusEntry {
    pub q_order: usize,
    pub basis: Vec<String>,
    pub vector: Vec<String>,
    /// `y^{d/2}` times the genus at `q = 0`, `y = 1`.
    pub euler_specialization: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyEntry {
    pub label: String,
    #[serde(rename = "type")]
    pub dynkin: String,
    pub crossed: Vec<usize>,
    pub weight: Vec<i64>,
    pub ambient_dim: usize,
    pub bundle_rank: usize,
    pub dim: usize,
    pub calabi_yau: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chern_table: Vec<TableRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_degree: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<GenusEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub criterion: usize,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionEntry {
    pub criterion: usize,
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportBundle {
    pub command: Command,
    pub job: JobRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_system: Option<RootsReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cosets: Option<CosetsReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub varieties: Vec<VarietyEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub criteria: Vec<CriterionEntry>,
    /// Milliseconds per stage; only with `--timings`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl ReportBundle {
    fn new(command: Command, job: &JobSpec) -> Self {
        ReportBundle {
            command,
            job: job.record(),
            root_system: None,
            cosets: None,
            varieties: Vec::new(),
            checks: Vec::new(),
            criteria: Vec::new(),
            timings: None,
        }
    }

    pub fn failed_criteria(&self) -> Vec<&CriterionEntry> {
        self.criteria.iter().filter(|c| !c.passed).collect()
    }
}

struct Clock {
    on: bool,
    last: Instant,
    stages: BTreeMap<String, f64>,
}

impl Clock {
    fn new(on: bool) -> Self {
        Clock {
            on,
            last: Instant::now(),
            stages: BTreeMap::new(),
        }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        if self.on {
            self.stages
                .insert(stage.to_string(), (now - self.last).as_secs_f64() * 1e3);
        }
        self.last = now;
    }

    fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.on.then_some(self.stages)
    }
}

fn label(ci: &CompleteIntersection) -> String {
    let d = ci.parabolic().diagram();
    let c: Vec<String> = d.crossed().iter().map(|n| n.to_string()).collect();
    format!("{}/P{}", d.dynkin(), c.join(","))
}

fn variety_entry(ci: &CompleteIntersection, label: String, weight: Vec<i64>) -> VarietyEntry {
    let d = ci.parabolic().diagram();
    VarietyEntry {
        label,
        dynkin: d.dynkin().to_string(),
        crossed: d.crossed(),
        weight,
        ambient_dim: ci.ambient_dim(),
        bundle_rank: ci.bundle_rank(),
        dim: ci.dim(),
        calabi_yau: first_chern_class_check(ci),
        chern_table: Vec::new(),
        line_degree: None,
        factorization: None,
        euler: None,
        genus: None,
    }
}

fn table_rows(t: &ChernTable) -> Vec<TableRow> {
    verify::table_strings(t)
        .into_iter()
        .map(|(monomial, value)| TableRow { monomial, value })
        .collect()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational_to_string).collect()
}

fn basis_names(d: usize) -> Result<Vec<String>, CliError> {
    Ok(basis_monomials(d)?.iter().map(|m| m.to_string()).collect())
}

fn set_degree(e: &mut VarietyEntry, degree: &Integer) {
    e.line_degree = Some(degree.to_string());
    e.factorization = Some((&factorize(degree)).into());
}

/// Runs one command. `timings` adds wall-clock stage times to the bundle.
pub fn execute(cmd: Command, job: &JobSpec, timings: bool) -> Result<ReportBundle, CliError> {
    let mut clock = Clock::new(timings);
    let mut out = ReportBundle::new(cmd, job);
    match cmd {
        Command::Roots => {
            let rs = RootSystem::new(job.dynkin()?);
            out.root_system = Some(RootsReport {
                dynkin: rs.dynkin().to_string(),
                rank: rs.rank(),
                dimension: rs.dimension(),
                cartan: rs.cartan().to_vec(),
                positive_roots: rs.positive_roots_simple_coords().to_vec(),
            });
            clock.lap("roots");
        }
        Command::Cosets => {
            let pd = ParabolicData::new(&job.diagram()?);
            let rs = pd.root_system();
            let conv = ellgenus::parabolic::WeightConvention::FROZEN;
            out.cosets = Some(CosetsReport {
                diagram: pd.diagram().to_string(),
                dim: pd.dim(),
                levi_nodes: pd.levi_nodes().iter().map(|i| i + 1).collect(),
                levi_weyl_order: pd.levi_weyl_order(),
                num_cosets: pd.coset_reps().len(),
                tangent_weights: pd.tangent_weights(conv),
                representatives: pd
                    .coset_reps()
                    .iter()
                    .map(|w| CosetRep {
                        word: w.word().iter().map(|i| i + 1).collect(),
                        length: rs.length(w),
                    })
                    .collect(),
            });
            clock.lap("cosets");
        }
        Command::ChernTable | Command::Degrees | Command::Genus => {
            let ci = job.variety()?;
            let point = EquivariantPoint::generic(ci.parabolic(), ci.convention(), job.seed)?;
            clock.lap("setup");
            let name = label(&ci);
            let mut e = variety_entry(&ci, name.clone(), job.weight.clone().unwrap_or_default());
            match cmd {
                Command::ChernTable => {
                    e.chern_table = table_rows(&chern_table(&ci, &point, &name)?);
                    clock.lap("chern_table");
                }
                Command::Degrees => {
                    set_degree(&mut e, &line_degree(&ci, &point)?);
                    e.euler = Some(euler_number(&ci, &point)?.to_string());
                    clock.lap("degrees");
                }
                _ => {
                    if !e.calabi_yau {
                        return Err(CliError::Math(format!("{name}: genus needs c1 = 0")));
                    }
                    let d = ci.dim();
                    let names = basis_names(d)?;
                    let table = chern_table(&ci, &point, &name)?;
                    clock.lap("chern_table");
                    let formula = genus_in_chern(d, job.q_order)?;
                    let basis = basis_weight0(d, job.q_order)?;
                    clock.lap("genus_formula");
                    let g = elliptic_genus(&formula, &table)?;
                    let v = g.decompose(&basis)?;
                    clock.lap("decompose");
                    e.euler = Some(euler_number(&ci, &point)?.to_string());
                    e.genus = Some(GenusEntry {
                        q_order: job.q_order,
                        basis: names,
                        vector: strings(&v),
                        euler_specialization: rational_to_string(&g.euler_specialization()),
                    });
                }
            }
            out.varieties.push(e);
        }
        Command::Verify => {
            let report = verify::run(job.seed)?;
            clock.lap("verify");
            let names = basis_names(17)?;
            for v in &report.varieties {
                let ci = verify::seventeen_fold(v.crossed[0])?;
                let mut e = variety_entry(&ci, v.label.clone(), v.weight.clone());
                e.chern_table = table_rows(&v.table);
                set_degree(&mut e, &v.line_degree);
                e.euler = Some(v.euler.to_string());
                e.genus = Some(GenusEntry {
                    q_order: 1,
                    basis: names.clone(),
                    vector: strings(&v.genus_vector),
                    euler_specialization: v.euler.to_string(),
                });
                out.varieties.push(e);
            }
            out.checks = report
                .checks
                .iter()
                .map(|c| CheckEntry {
                    criterion: c.criterion,
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect();
            out.criteria = report
                .criteria()
                .into_iter()
                .map(|(criterion, name, passed)| CriterionEntry {
                    criterion,
                    name: name.to_string(),
                    passed,
                })
                .collect();
        }
    }
    out.timings = clock.finish();
    Ok(out)
}

pub fn render(b: &ReportBundle, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(b).map_err(|e| CliError::Math(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => render_csv(b),
        Format::Md => Ok(render_md(b)),
    }
}

fn csv_string(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Math(e.to_string());
    w.write_record(header).map_err(err)?;
    for r in rows {
        w.write_record(&r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Math(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn render_csv(b: &ReportBundle) -> Result<String, CliError> {
    match b.command {
        Command::Roots => {
            let r = b.root_system.as_ref().expect("roots report");
            let rows = r
                .positive_roots
                .iter()
                .enumerate()
                .map(|(i, v)| vec![(i + 1).to_string(), join(v, " "), v.iter().sum::<i64>().to_string()])
                .collect();
            csv_string(&["index", "simple_root_coords", "height"], rows)
        }
        Command::Cosets => {
            let c = b.cosets.as_ref().expect("cosets report");
            let rows = c
                .representatives
                .iter()
                .enumerate()
                .map(|(i, r)| vec![(i + 1).to_string(), join(&r.word, " "), r.length.to_string()])
                .collect();
            csv_string(&["index", "word", "length"], rows)
        }
        Command::ChernTable => {
            let rows = b
                .varieties
                .iter()
                .flat_map(|v| v.chern_table.iter().map(|r| vec![r.monomial.clone(), r.value.clone()]))
                .collect();
            csv_string(&["monomial", "value"], rows)
        }
        Command::Degrees => {
            let rows = b
                .varieties
                .iter()
                .map(|v| {
                    vec![
                        v.label.clone(),
                        v.line_degree.clone().unwrap_or_default(),
                        v.factorization.as_ref().map(|f| f.text.clone()).unwrap_or_default(),
                        v.euler.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_string(&["label", "line_degree", "factorization", "euler"], rows)
        }
        Command::Genus => {
            let mut rows = Vec::new();
            for v in &b.varieties {
                if let Some(g) = &v.genus {
                    for (i, (n, c)) in g.basis.iter().zip(&g.vector).enumerate() {
                        rows.push(vec![v.label.clone(), (i + 1).to_string(), n.clone(), c.clone()]);
                    }
                }
            }
            csv_string(&["label", "k", "basis_element", "coefficient"], rows)
        }
        Command::Verify => {
            let rows = b
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.criterion.to_string(),
                        c.name.clone(),
                        if c.passed { "PASS" } else { "FAIL" }.to_string(),
                        c.detail.clone(),
                    ]
                })
                .collect();
            csv_string(&["criterion", "check", "result", "detail"], rows)
        }
    }
}

fn variety_header(s: &mut String, v: &VarietyEntry) {
    let _ = writeln!(s, "## {} {} weight ({})\n", v.label, v.dynkin, join(&v.weight, ","));
    let _ = writeln!(
        s,
        "dim X = {}, rank E = {}, dim Y = {}, c1 = 0: {}\n",
        v.ambient_dim,
        v.bundle_rank,
        v.dim,
        if v.calabi_yau { "yes" } else { "no" }
    );
}

fn render_md(b: &ReportBundle) -> String {
    let mut s = String::new();
    match b.command {
        Command::Roots => {
            let r = b.root_system.as_ref().expect("roots report");
            let _ = writeln!(s, "# Root system {}\n", r.dynkin);
            let _ = writeln!(s, "rank {}, dim g = {}, {} positive roots\n", r.rank, r.dimension, r.positive_roots.len());
            let _ = writeln!(s, "Cartan matrix:\n");
            for row in &r.cartan {
                let _ = writeln!(s, "    {}", join(row, " "));
            }
            let _ = writeln!(s, "\n| # | simple-root coords | height |\n|---:|---|---:|");
            for (i, v) in r.positive_roots.iter().enumerate() {
                let _ = writeln!(s, "| {} | ({}) | {} |", i + 1, join(v, ","), v.iter().sum::<i64>());
            }
        }
        Command::Cosets => {
            let c = b.cosets.as_ref().expect("cosets report");
            let _ = writeln!(s, "# {}\n", c.diagram);
            let _ = writeln!(
                s,
                "dim G/P = {}, Levi nodes {{{}}}, |W_L| = {}, {} fixed points\n",
                c.dim,
                join(&c.levi_nodes, ","),
                c.levi_weyl_order,
                c.num_cosets
            );
            let _ = writeln!(s, "| # | word | length |\n|---:|---|---:|");
            for (i, r) in c.representatives.iter().enumerate() {
                let w = if r.word.is_empty() { "e".to_string() } else { join(&r.word, " ") };
                let _ = writeln!(s, "| {} | {} | {} |", i + 1, w, r.length);
            }
        }
        Command::ChernTable => {
            for v in &b.varieties {
                variety_header(&mut s, v);
                let _ = writeln!(s, "| monomial | integral |\n|---|---:|");
                for r in &v.chern_table {
                    let _ = writeln!(s, "| {} | {} |", r.monomial, r.value);
                }
            }
        }
        Command::Degrees => {
            for v in &b.varieties {
                variety_header(&mut s, v);
                if let (Some(d), Some(f)) = (&v.line_degree, &v.factorization) {
                    let _ = writeln!(s, "line degree = {d} = {}", f.text);
                }
                if let Some(e) = &v.euler {
                    let _ = writeln!(s, "c_{} = {e}", v.dim);
                }
            }
        }
        Command::Genus => {
            for v in &b.varieties {
                variety_header(&mut s, v);
                if let Some(g) = &v.genus {
                    let _ = writeln!(s, "genus through q^{} in the weight 0, index {}/2 basis:\n", g.q_order, v.dim);
                    let _ = writeln!(s, "| k | basis element | coefficient |\n|---:|---|---:|");
                    for (i, (n, c)) in g.basis.iter().zip(&g.vector).enumerate() {
                        let _ = writeln!(s, "| {} | {} | {} |", i + 1, n, c);
                    }
                    let _ = writeln!(s, "\ny^(d/2) genus(q = 0, y = 1) = {}", g.euler_specialization);
                    if let Some(e) = &v.euler {
                        let _ = writeln!(s, "c_{} = {e}", v.dim);
                    }
                }
            }
        }
        Command::Verify => {
            let _ = writeln!(s, "# Verification, seed {}\n", b.job.seed);
            let _ = writeln!(s, "| criterion | check | result | detail |\n|---:|---|---|---|");
            for c in &b.checks {
                let r = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "| {} | {} | {} | {} |", c.criterion, c.name, r, c.detail);
            }
            let _ = writeln!(s);
            for c in &b.criteria {
                let r = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{r} criterion {}: {}", c.criterion, c.name);
            }
            for v in &b.varieties {
                if let (Some(d), Some(f)) = (&v.line_degree, &v.factorization) {
                    let _ = writeln!(s, "\n{}: line degree {d} = {}", v.label, f.text);
                }
                if let Some(g) = &v.genus {
                    let _ = writeln!(s, "{}: genus vector ({})", v.label, g.vector.join(", "));
                }
            }
        }
    }
    if let Some(t) = &b.timings {
        let _ = writeln!(s, "\ntimings (ms):");
        for (k, v) in t {
            let _ = writeln!(s, "  {k}: {v:.1}");
        }
    }
    s
}
