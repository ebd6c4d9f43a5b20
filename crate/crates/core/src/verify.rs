//! Exhaustive verification of the isolation bound and its extremal graphs
//! over corpora of small connected graphs, with JSON Lines and CSV reports.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use crate::construct::construct_isolating;
use crate::detect::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_connected_up_to, parse_edge_list, parse_graph6, write_graph6, Graph, ENUMERATION_MAX_ORDER,
};
use crate::solver::{isolation_number_with, Certification, SolverOptions};
use crate::special::{attains_bound, bound_value, recognize_pure_special};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusSource {
    /// Every connected graph with `1..=max_n` vertices, up to isomorphism.
    BuiltinEnumeration { max_n: usize },
    /// One graph6 string per line; blank lines and `#` comments are skipped.
    Graph6File(PathBuf),
    /// A single graph in edge-list form.
    EdgeListFile(PathBuf),
}

impl CorpusSource {
    /// Loads the corpus. Parse errors carry the file and line.
    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            CorpusSource::BuiltinEnumeration { max_n } => {
                if *max_n == 0 || *max_n > ENUMERATION_MAX_ORDER {
                    return Err(Error::InvalidParameter(format!(
                        "built-in enumeration needs 1 <= max_n <= {ENUMERATION_MAX_ORDER}, got {max_n}"
                    )));
                }
                enumerate_connected_up_to(*max_n)
            }
            CorpusSource::Graph6File(path) => {
                let text = read(path)?;
                let mut graphs = Vec::new();
                for (i, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let g = parse_graph6(line).map_err(|e| Error::Corpus {
                        context: format!("{}:{}", path.display(), i + 1),
                        message: e.to_string(),
                    })?;
                    graphs.push(g);
                }
                Ok(graphs)
            }
            CorpusSource::EdgeListFile(path) => {
                let g = parse_edge_list(&read(path)?)
                    .map_err(|e| Error::Corpus { context: path.display().to_string(), message: e.to_string() })?;
                Ok(vec![g])
            }
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ExtremalClass {
    PureSpecial,
    #[serde(rename = "C5_k2")]
    C5K2,
    #[serde(rename = "C4_k3_l1or3")]
    C4K3L1or3,
    NotExtremal,
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl fmt::Display for ExtremalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremalClass::PureSpecial => "PureSpecial",
            ExtremalClass::C5K2 => "C5_k2",
            ExtremalClass::C4K3L1or3 => "C4_k3_l1or3",
            ExtremalClass::NotExtremal => "NotExtremal",
            ExtremalClass::Violation => "VIOLATION",
        })
    }
}

/// The extremal class `g` belongs to for `(k, ell)`, tested in the order
/// pure special, 5-cycle, 4-cycle.
pub fn predicted_class(g: &Graph, k: usize, ell: usize) -> Option<ExtremalClass> {
    if recognize_pure_special(g, k).is_some() {
        Some(ExtremalClass::PureSpecial)
    } else if k == 2 && g.n() == 5 && g.is_cycle() {
        Some(ExtremalClass::C5K2)
    } else if k == 3 && (ell == 1 || ell == 3) && g.n() == 4 && g.is_cycle() {
        Some(ExtremalClass::C4K3L1or3)
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub l: usize,
    pub iota: usize,
    pub bound: usize,
    pub is_k_clique: bool,
    pub equality: bool,
    pub extremal_class: ExtremalClass,
    /// Size of the constructed isolating set; absent for `k`-cliques.
    pub constructed: Option<usize>,
    /// False when the solver ran out of budget.
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub k_min: usize,
    pub k_max: usize,
    pub ells: Vec<usize>,
    /// Worker threads; `None` uses the available parallelism.
    pub threads: Option<usize>,
    pub node_budget: u64,
    /// Also run the constructor and record its set size.
    pub construct: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            k_min: 1,
            k_max: 5,
            ells: vec![1, 2, 3],
            threads: None,
            node_budget: SolverOptions::default().node_budget,
            construct: true,
        }
    }
}

impl VerifyOptions {
    fn validate(&self) -> Result<()> {
        if self.k_min == 0 || self.k_min > self.k_max {
            return Err(Error::InvalidParameter(format!("bad k range [{}, {}]", self.k_min, self.k_max)));
        }
        if self.ells.is_empty() || self.ells.iter().any(|l| !(1..=3).contains(l)) {
            return Err(Error::InvalidParameter(format!("family indices must lie in 1..=3, got {:?}", self.ells)));
        }
        if self.threads == Some(0) {
            return Err(Error::InvalidParameter("threads must be positive".into()));
        }
        Ok(())
    }
}

/// Verifies one graph for one `(k, ell)`.
pub fn verify_graph(g: &Graph, k: usize, ell: usize, options: &VerifyOptions) -> Result<VerificationRecord> {
    let family = FamilySpec::indexed(ell, k)?;
    let solved = isolation_number_with(g, family, &SolverOptions { node_budget: options.node_budget });
    let (n, m, iota) = (g.n(), g.m(), solved.size);
    let bound = bound_value(m, k);
    let is_k_clique = g.is_k_clique(k);
    let mut record = VerificationRecord {
        graph6: write_graph6(g)?,
        n,
        m,
        k,
        l: ell,
        iota,
        bound,
        is_k_clique,
        equality: false,
        extremal_class: ExtremalClass::NotExtremal,
        constructed: None,
        exact: solved.certified == Certification::ExactMinimum,
    };
    if is_k_clique {
        return Ok(record);
    }
    record.equality = attains_bound(iota, m, k);
    let predicted = predicted_class(g, k, ell);
    let mut sound = record.exact && iota <= bound && record.equality == predicted.is_some();
    if options.construct {
        match construct_isolating(g, k, ell) {
            Ok((set, _)) => {
                record.constructed = Some(set.len());
                sound &= set.len() <= bound && set.len() >= iota;
            }
            Err(_) => sound = false,
        }
    }
    record.extremal_class = match (sound, record.equality) {
        (false, _) => ExtremalClass::Violation,
        (true, true) => predicted.expect("equality implies a predicted class"),
        (true, false) => ExtremalClass::NotExtremal,
    };
    Ok(record)
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    builder.build().map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

/// Connected graphs of the corpus, each with its graph6 string. Disconnected
/// entries are dropped and counted.
fn connected_corpus(source: &CorpusSource) -> Result<(Vec<Graph>, usize)> {
    let all = source.load()?;
    let total = all.len();
    let kept: Vec<Graph> = all.into_iter().filter(|g| g.n() > 0 && g.is_connected()).collect();
    let dropped = total - kept.len();
    Ok((kept, dropped))
}

/// Runs every `(graph, k, ell)` item of the corpus, in parallel. Records are
/// sorted by `(graph6, k, ell)`.
pub fn verify_bound(source: &CorpusSource, options: &VerifyOptions) -> Result<Report<VerificationRecord>> {
    options.validate()?;
    let (graphs, dropped) = connected_corpus(source)?;
    let items: Vec<(usize, usize, usize)> = (0..graphs.len())
        .flat_map(|i| (options.k_min..=options.k_max).flat_map(move |k| options.ells.iter().map(move |&l| (i, k, l))))
        .collect();
    let mut rows = pool(options.threads)?.install(|| {
        items.par_iter().map(|&(i, k, l)| verify_graph(&graphs[i], k, l, options)).collect::<Result<Vec<_>>>()
    })?;
    rows.sort_by(|a, b| (&a.graph6, a.k, a.l).cmp(&(&b.graph6, b.k, b.l)));

    let mut summary = Summary::new();
    summary.set("graphs", graphs.len());
    summary.set("disconnected_skipped", dropped);
    summary.set("records", rows.len());
    summary.set("k_cliques_skipped", rows.iter().filter(|r| r.is_k_clique).count());
    summary.set("equality", rows.iter().filter(|r| r.equality).count());
    for class in [ExtremalClass::PureSpecial, ExtremalClass::C5K2, ExtremalClass::C4K3L1or3] {
        summary
            .set(&format!("equality_{class}"), rows.iter().filter(|r| r.equality && r.extremal_class == class).count());
    }
    summary.set("inexact", rows.iter().filter(|r| !r.exact).count());
    summary.set("violations", rows.iter().filter(|r| r.extremal_class == ExtremalClass::Violation).count());
    Ok(Report { rows, summary })
}

/// Keeps only the records attaining the bound, plus violations.
pub fn scan_extremal(report: Report<VerificationRecord>) -> Report<VerificationRecord> {
    let mut summary = report.summary;
    let rows: Vec<_> =
        report.rows.into_iter().filter(|r| r.equality || r.extremal_class == ExtremalClass::Violation).collect();
    summary.set("records", rows.len());
    Report { rows, summary }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CycleClass {
    PureSpecial,
    #[serde(rename = "C4")]
    C4,
    NotExtremal,
    #[serde(rename = "VIOLATION")]
    Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub iota_cycles: usize,
    /// Isolation number for regular graphs of degree at least 2, which must
    /// agree with `iota_cycles`.
    pub iota_minreg3: usize,
    pub bound: usize,
    pub equality: bool,
    pub class: CycleClass,
}

/// Checks the cycle bound `floor((m + 1) / 5)` on every connected graph other
/// than the triangle; equality must occur exactly at pure `(m, 3)`-special
/// graphs and the 4-cycle.
pub fn cycle_bound_check(source: &CorpusSource, options: &VerifyOptions) -> Result<Report<CycleRecord>> {
    if options.threads == Some(0) {
        return Err(Error::InvalidParameter("threads must be positive".into()));
    }
    let (graphs, dropped) = connected_corpus(source)?;
    let solver = SolverOptions { node_budget: options.node_budget };
    let check = |g: &Graph| -> Result<Option<CycleRecord>> {
        if g.is_k_clique(3) {
            return Ok(None);
        }
        let cycles = isolation_number_with(g, FamilySpec::Cycles, &solver);
        let minreg = isolation_number_with(g, FamilySpec::MinRegular(3), &solver);
        let (iota, m) = (cycles.size, g.m());
        let bound = bound_value(m, 3);
        let equality = attains_bound(iota, m, 3);
        let predicted = if recognize_pure_special(g, 3).is_some() {
            Some(CycleClass::PureSpecial)
        } else if g.n() == 4 && g.is_cycle() {
            Some(CycleClass::C4)
        } else {
            None
        };
        let exact = cycles.certified == Certification::ExactMinimum && minreg.certified == Certification::ExactMinimum;
        let sound = exact && iota <= bound && iota == minreg.size && equality == predicted.is_some();
        let class = match (sound, predicted) {
            (false, _) => CycleClass::Violation,
            (true, Some(c)) => c,
            (true, None) => CycleClass::NotExtremal,
        };
        Ok(Some(CycleRecord {
            graph6: write_graph6(g)?,
            n: g.n(),
            m,
            iota_cycles: iota,
            iota_minreg3: minreg.size,
            bound,
            equality,
            class,
        }))
    };
    let results = pool(options.threads)?.install(|| graphs.par_iter().map(check).collect::<Result<Vec<_>>>())?;
    let triangles = results.iter().filter(|r| r.is_none()).count();
    let mut rows: Vec<CycleRecord> = results.into_iter().flatten().collect();
    rows.sort_by(|a, b| a.graph6.cmp(&b.graph6));

    let mut summary = Summary::new();
    summary.set("graphs", graphs.len());
    summary.set("disconnected_skipped", dropped);
    summary.set("triangles_skipped", triangles);
    summary.set("records", rows.len());
    summary.set("equality", rows.iter().filter(|r| r.equality).count());
    summary
        .set("equality_PureSpecial", rows.iter().filter(|r| r.equality && r.class == CycleClass::PureSpecial).count());
    summary.set("equality_C4", rows.iter().filter(|r| r.equality && r.class == CycleClass::C4).count());
    summary.set("violations", rows.iter().filter(|r| r.class == CycleClass::Violation).count());
    Ok(Report { rows, summary })
}

/// Named totals, kept in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    entries: Vec<(String, usize)>,
}

impl Summary {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, key: &str, value: usize) {
        match self.entries.iter_mut().find(|(k, _)| k == key) {
            Some(entry) => entry.1 = value,
            None => self.entries.push((key.to_string(), value)),
        }
    }

    pub fn get(&self, key: &str) -> Option<usize> {
        self.entries.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, usize)] {
        &self.entries
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report<T> {
    pub rows: Vec<T>,
    pub summary: Summary,
}

impl<T> Report<T> {
    pub fn violations(&self) -> usize {
        self.summary.get("violations").unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    JsonLines,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(ReportFormat::JsonLines),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::InvalidParameter(format!("unknown report format {s:?}"))),
        }
    }
}

/// Writes the rows followed by the summary footer. JSON Lines ends with a
/// `{"summary": {...}}` line; CSV has a header row and `# key=value` footer
/// lines. Output depends only on the report, never on timing.
pub fn emit_report<T: Serialize, W: Write>(report: &Report<T>, format: ReportFormat, out: W) -> std::io::Result<()> {
    let mut out = out;
    match format {
        ReportFormat::JsonLines => {
            for row in &report.rows {
                serde_json::to_writer(&mut out, row)?;
                out.write_all(b"\n")?;
            }
            let totals: BTreeMap<&str, usize> = report.summary.entries.iter().map(|(k, v)| (k.as_str(), *v)).collect();
            serde_json::to_writer(&mut out, &serde_json::json!({ "summary": totals }))?;
            out.write_all(b"\n")?;
        }
        ReportFormat::Csv => {
            {
                let mut writer = csv::Writer::from_writer(&mut out);
                for row in &report.rows {
                    writer.serialize(row)?;
                }
                writer.flush()?;
            }
            for (k, v) in &report.summary.entries {
                writeln!(out, "# {k}={v}")?;
            }
        }
    }
    out.flush()
}
