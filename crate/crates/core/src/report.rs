//! Bound reports and golden-value checks for corpus entries.
//!
//! JSON field order is the declaration order of [`BoundReport`]; nothing in
//! a report depends on the clock unless timing is asked for.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::corpus::{CorpusEntry, GoldenValue};
use crate::decompose::DEFAULT_SEED;
use crate::error::{Error, Result};
use crate::homology::{default_cutoff, PdResult};
use crate::torsion::{
    algebra_loewy_length, best_bound, projective_layer_lengths, thm319_bound, SimpleSubset, SubsetBound, SubsetStrategy,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub strategy: SubsetStrategy,
    /// `None` means `4 · dim Λ`.
    pub cutoff: Option<usize>,
    pub seed: u64,
    /// Record wall-clock time; makes the report non-reproducible.
    pub timing: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { strategy: SubsetStrategy::Exhaustive, cutoff: None, seed: DEFAULT_SEED, timing: false }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BestBound {
    pub members: Vec<usize>,
    pub bound: i64,
    /// Number of layers in the constructive certificate, one more than the
    /// bound.
    pub certificate_depth: i64,
    pub ll_projectives: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Seeds {
    pub decompose: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub algebra: String,
    pub field: String,
    pub vertices: usize,
    pub dimension: usize,
    pub loewy_length: usize,
    pub global_dimension: PdResult,
    pub pd_simple: Vec<PdResult>,
    pub cutoff: usize,
    pub strategy: String,
    pub subsets: Vec<SubsetBound>,
    pub best: BestBound,
    pub warnings: Vec<String>,
    pub annotations: Vec<String>,
    pub seeds: Seeds,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<u128>,
}

fn strategy_name(s: &SubsetStrategy) -> String {
    match s {
        SubsetStrategy::Exhaustive => "exhaustive".into(),
        SubsetStrategy::SingletonGreedy => "greedy".into(),
        SubsetStrategy::Endpoints => "endpoints".into(),
        SubsetStrategy::Explicit(m) => {
            let labels: Vec<String> = m.iter().map(|v| (v + 1).to_string()).collect();
            format!("explicit {}", labels.join(","))
        }
    }
}

pub fn bound_report(name: &str, alg: &Algebra, opts: &ReportOptions) -> Result<BoundReport> {
    let start = std::time::Instant::now();
    let cutoff = opts.cutoff.unwrap_or_else(|| default_cutoff(alg));
    let search = best_bound(alg, &opts.strategy, cutoff)?;
    let global = search.pd_simple.iter().copied().fold(PdResult::Exactly(0), PdResult::max);
    let best = search.best().clone();
    let members: Vec<usize> = best.members.iter().map(|v| v - 1).collect();
    let subset = SimpleSubset::new(alg, &members)?;
    let mut warnings: Vec<String> = search.warning.iter().cloned().collect();
    for (v, pd) in search.pd_simple.iter().enumerate() {
        if let PdResult::AtLeast(k) = pd {
            warnings.push(format!("pd of simple {} undecided: at least {k} within the cutoff", v + 1));
        }
    }
    Ok(BoundReport {
        tool: "extdim",
        version: VERSION,
        algebra: name.to_string(),
        field: alg.field().to_string(),
        vertices: alg.num_vertices(),
        dimension: alg.dim(),
        loewy_length: algebra_loewy_length(alg),
        global_dimension: global,
        pd_simple: search.pd_simple.clone(),
        cutoff,
        strategy: strategy_name(&opts.strategy),
        subsets: search.rows.clone(),
        best: BestBound {
            members: best.members.clone(),
            bound: best.bound,
            certificate_depth: best.bound + 1,
            ll_projectives: projective_layer_lengths(alg, &subset),
        },
        warnings,
        annotations: vec![],
        seeds: Seeds { decompose: opts.seed },
        wall_clock_ms: opts.timing.then(|| start.elapsed().as_millis()),
    })
}

impl BoundReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises") + "\n"
    }

    /// Per-vertex table: `pd S(v)` and `ℓℓ^{t_S}(P(v))` for the best `S`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("vertex,pd_simple,ll_projective\n");
        for (v, (pd, ll)) in self.pd_simple.iter().zip(&self.best.ll_projectives).enumerate() {
            let pd = match pd {
                PdResult::Exactly(n) => n.to_string(),
                PdResult::AtLeast(n) => format!(">={n}"),
                PdResult::Infinite(_) => "inf".to_string(),
            };
            out += &format!("{},{pd},{ll}\n", v + 1);
        }
        out
    }
}

fn pd_golden(p: &PdResult) -> Option<Option<i64>> {
    match p {
        PdResult::Exactly(n) => Some(Some(*n)),
        PdResult::Infinite(_) => Some(None),
        PdResult::AtLeast(_) => None,
    }
}

/// Reads a subset key argument: `none`, `finite` or 1-based labels `2,3,4,5`.
fn subset_arg(alg: &Algebra, arg: &str, report: &BoundReport) -> Result<SimpleSubset> {
    let members: Vec<usize> = match arg.trim() {
        "none" => vec![],
        "finite" => (0..alg.num_vertices()).filter(|&v| report.pd_simple[v].finite().is_some()).collect(),
        list => list
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .map(|v| v - 1)
                    .ok_or_else(|| Error::Invalid(format!("bad vertex label `{x}` in golden key")))
            })
            .collect::<Result<_>>()?,
    };
    SimpleSubset::validated(alg, &members, &report.pd_simple)
}

/// The computed value for a golden key.
pub fn computed_value(alg: &Algebra, report: &BoundReport, key: &str) -> Result<GoldenValue> {
    let (head, arg) = match key.split_once(' ') {
        Some((h, a)) => (h, Some(a)),
        None => (key, None),
    };
    let int = |n: usize| GoldenValue::Int(n as i64);
    Ok(match (head, arg) {
        ("dimension", None) => int(report.dimension),
        ("vertices", None) => int(report.vertices),
        ("loewy_length", None) => int(report.loewy_length),
        ("global_dimension", None) => match pd_golden(&report.global_dimension) {
            Some(Some(n)) => GoldenValue::Int(n),
            Some(None) => GoldenValue::Infinite,
            None => return Err(Error::Invalid("global dimension undecided within the cutoff".into())),
        },
        ("pd_simple", None) => GoldenValue::List(
            report
                .pd_simple
                .iter()
                .map(|p| pd_golden(p).ok_or_else(|| Error::Invalid("a simple has undecided pd".into())))
                .collect::<Result<_>>()?,
        ),
        ("best_bound", None) => GoldenValue::Int(report.best.bound),
        ("bound", Some(a)) => GoldenValue::Int(thm319_bound(alg, &subset_arg(alg, a, report)?)?.bound),
        ("ll_projectives", Some(a)) => {
            let s = subset_arg(alg, a, report)?;
            GoldenValue::List(projective_layer_lengths(alg, &s).into_iter().map(|l| Some(l as i64)).collect())
        }
        _ => return Err(Error::Invalid(format!("unknown golden key `{key}`"))),
    })
}

#[derive(Clone, Debug)]
pub struct EntryOutcome {
    pub report: BoundReport,
    pub checked: usize,
    /// One line per differing value.
    pub mismatches: Vec<String>,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs an entry with an exhaustive subset search and compares every golden
/// value exactly. Notes from the golden block become report annotations.
pub fn check_entry(entry: &CorpusEntry, opts: &ReportOptions) -> Result<EntryOutcome> {
    let mut report = bound_report(&entry.name, &entry.algebra, opts)?;
    report.annotations = entry.notes.clone();
    let mut mismatches = Vec::new();
    for g in &entry.golden {
        match computed_value(&entry.algebra, &report, &g.key) {
            Ok(v) if v == g.value => {}
            Ok(v) => mismatches.push(format!("line {}: {} expected {} computed {}", g.line, g.key, g.value, v)),
            Err(e) => mismatches.push(format!("line {}: {}: {e}", g.line, g.key)),
        }
    }
    Ok(EntryOutcome { report, checked: entry.golden.len(), mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{parse_corpus_entry, spider, spider_text};

    #[test]
    fn spider_report_fields() {
        let a = spider(5, "Q");
        let opts = ReportOptions { strategy: SubsetStrategy::Explicit(vec![1, 2, 3, 4]), ..Default::default() };
        let r = bound_report("spider5", &a, &opts).unwrap();
        assert_eq!(r.best.bound, 3);
        assert_eq!(r.best.members, vec![2, 3, 4, 5]);
        let json = r.to_json();
        let keys: Vec<usize> = ["\"loewy_length\"", "\"global_dimension\"", "\"pd_simple\"", "\"subsets\"", "\"best\""]
            .iter()
            .map(|k| json.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(json.contains("\"pd_S\": 1"));
        assert_eq!(json, bound_report("spider5", &a, &opts).unwrap().to_json());
        assert!(r.to_csv().starts_with("vertex,pd_simple,ll_projective\n1,4,2\n"));
    }

    #[test]
    fn golden_mismatch_is_reported() {
        let text = format!(
            "{}golden {{\n  loewy_length = 5 # cited\n  bound 2,3,4,5 = 3 # cited\n  global_dimension = 3 # oracle wrong\n}}\n",
            spider_text(5, "Q")
        );
        let e = parse_corpus_entry("spider5", &text).unwrap();
        let out = check_entry(&e, &ReportOptions { strategy: SubsetStrategy::Endpoints, ..Default::default() }).unwrap();
        assert_eq!(out.checked, 3);
        assert_eq!(out.mismatches.len(), 1);
        assert!(out.mismatches[0].contains("global_dimension expected 3 computed 4"));
    }
}
