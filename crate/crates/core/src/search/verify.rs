//! Batch verification of registry predicates over a graph source.

use std::cmp::Ordering;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::conjectures::{check_all, ConjectureId, Params, Quantifier, Verdict};
use crate::error::{Error, Result};
use crate::graph::canon::{certificate, Certificate};
use crate::graph::Graph;

use super::source::GraphSource;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Graphs per parallel batch.
    pub chunk: usize,
    /// Length of each near-miss table.
    pub near_misses: usize,
    /// Counterexamples kept per id (the tally counts all of them).
    pub max_counterexamples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            workers: None,
            chunk: 2048,
            near_misses: 10,
            max_counterexamples: 1000,
        }
    }
}

/// One evaluated (graph, id) pair kept in a table.
#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub graph6: String,
    pub slack: f64,
    pub lhs: f64,
    pub rhs: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arg: Option<Quantifier>,
    #[serde(skip)]
    key: Option<Certificate>,
}

impl Entry {
    fn cmp_key(&self, other: &Entry) -> Ordering {
        self.slack
            .total_cmp(&other.slack)
            .then_with(|| self.key.cmp(&other.key))
            .then_with(|| self.graph6.cmp(&other.graph6))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureTally {
    pub id: ConjectureId,
    pub holds: usize,
    pub violated: usize,
    pub na: usize,
    /// Not-applicable verdicts caused by an exhausted node budget.
    pub budget_exhausted: usize,
    pub min_slack: Option<f64>,
    /// graph6 strings of the kept counterexamples.
    pub witnesses: Vec<String>,
    /// Smallest slacks, ordered by slack then canonical form.
    pub near_misses: Vec<Entry>,
    pub counterexamples: Vec<Entry>,
}

impl ConjectureTally {
    fn new(id: ConjectureId) -> Self {
        ConjectureTally {
            id,
            holds: 0,
            violated: 0,
            na: 0,
            budget_exhausted: 0,
            min_slack: None,
            witnesses: Vec::new(),
            near_misses: Vec::new(),
            counterexamples: Vec::new(),
        }
    }
}

/// Wall-clock data, excluded from determinism comparisons.
#[derive(Clone, Debug, Serialize)]
pub struct RunMeta {
    pub wall_time_s: f64,
    pub workers: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub source: String,
    pub graph_count: usize,
    /// Malformed or invalid inputs skipped by the source.
    pub skipped: usize,
    pub params: Params,
    pub conjectures: Vec<ConjectureTally>,
    pub meta: RunMeta,
}

impl VerificationReport {
    pub fn total_violations(&self) -> usize {
        self.conjectures.iter().map(|c| c.violated).sum()
    }

    pub fn tally(&self, id: ConjectureId) -> Option<&ConjectureTally> {
        self.conjectures.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// JSON without the `meta` block; equal for equal inputs whatever the
    /// worker count.
    pub fn payload_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serialises");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("meta");
        }
        serde_json::to_string_pretty(&v).expect("report serialises")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,holds,violated,na,budget_exhausted,min_slack,min_slack_graph6\n");
        for c in &self.conjectures {
            let (slack, g6) = match c.near_misses.first() {
                Some(e) => (format!("{:.12e}", e.slack), e.graph6.clone()),
                None => (String::new(), String::new()),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                c.id,
                c.holds,
                c.violated,
                c.na,
                c.budget_exhausted,
                slack,
                csv_field(&g6)
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Inserts into a table kept sorted and truncated to `cap`; the result is
/// the `cap` smallest entries of everything ever offered.
fn offer(table: &mut Vec<Entry>, cap: usize, make: impl FnOnce() -> Entry, slack: f64) {
    if cap == 0 {
        return;
    }
    if table.len() == cap && slack > table[cap - 1].slack {
        return;
    }
    let e = make();
    let pos = table.partition_point(|x| x.cmp_key(&e) == Ordering::Less);
    table.insert(pos, e);
    table.truncate(cap);
}

fn entry(g: &Graph, v: &Verdict) -> Entry {
    let e = v.evaluation().expect("applicable verdict");
    Entry {
        graph6: g.to_graph6(),
        slack: e.slack,
        lhs: e.lhs,
        rhs: e.rhs,
        arg: e.arg.clone(),
        key: certificate(g).ok(),
    }
}

/// Checks every id on every graph of `source`.
pub fn verify(source: &GraphSource, ids: &[ConjectureId], params: &Params, opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let pool = match opts.workers {
        Some(w) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::InvalidParameters(format!("worker pool: {e}")))?,
        ),
        None => None,
    };
    let workers = pool.as_ref().map_or_else(rayon::current_num_threads, |p| p.current_num_threads());
    let mut stream = source.open()?;
    let mut tallies: Vec<ConjectureTally> = ids.iter().map(|&id| ConjectureTally::new(id)).collect();
    let mut graph_count = 0;
    loop {
        let chunk = stream.next_chunk(opts.chunk.max(1));
        if chunk.is_empty() {
            break;
        }
        graph_count += chunk.len();
        let run = || -> Vec<Vec<Verdict>> { chunk.par_iter().map(|g| check_all(ids, g, params)).collect() };
        let verdicts = match &pool {
            Some(p) => p.install(run),
            None => run(),
        };
        for (g, vs) in chunk.iter().zip(&verdicts) {
            for (t, v) in tallies.iter_mut().zip(vs) {
                match v {
                    Verdict::NotApplicable { reason } => {
                        t.na += 1;
                        if reason.starts_with("budget") {
                            t.budget_exhausted += 1;
                        }
                        continue;
                    }
                    Verdict::Holds(_) => t.holds += 1,
                    Verdict::Violated { .. } => {
                        t.violated += 1;
                        let slack = v.slack().expect("applicable");
                        offer(&mut t.counterexamples, opts.max_counterexamples, || entry(g, v), slack);
                    }
                }
                let slack = v.slack().expect("applicable");
                t.min_slack = Some(t.min_slack.map_or(slack, |m: f64| m.min(slack)));
                offer(&mut t.near_misses, opts.near_misses, || entry(g, v), slack);
            }
        }
    }
    for t in &mut tallies {
        t.witnesses = t.counterexamples.iter().map(|e| e.graph6.clone()).collect();
    }
    Ok(VerificationReport {
        source: source.to_string(),
        graph_count,
        skipped: stream.skipped(),
        params: params.clone(),
        conjectures: tallies,
        meta: RunMeta {
            wall_time_s: start.elapsed().as_secs_f64(),
            workers,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn small_exhaustive_run() {
        let src = GraphSource::BuiltinEnum {
            min_order: 1,
            max_order: 6,
            connected_only: false,
        };
        let ids = [ConjectureId::C02WilfExt, ConjectureId::C15Brouwer, ConjectureId::C20AkbariH];
        let r = verify(&src, &ids, &Params::default(), &VerifyOptions::default()).unwrap();
        assert_eq!(r.graph_count, 1 + 2 + 4 + 11 + 34 + 156);
        assert_eq!(r.total_violations(), 0);
        for t in &r.conjectures {
            assert_eq!(t.holds + t.violated + t.na, r.graph_count);
            let slacks: Vec<f64> = t.near_misses.iter().map(|e| e.slack).collect();
            assert!(slacks.windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(t.min_slack, slacks.first().copied());
        }
        // C20 is not applicable exactly on singular graphs
        let singular = src
            .open()
            .unwrap()
            .filter(|g| crate::spectra::exact::adjacency_nullity(g) > 0)
            .count();
        assert_eq!(r.tally(ConjectureId::C20AkbariH).unwrap().na, singular);
    }

    #[test]
    fn violations_are_collected() {
        let params = Params {
            elw_ell_n_plus: true,
            ..Params::default()
        };
        let src = GraphSource::FamilySweep {
            template: "cycle(3..9)".into(),
        };
        let r = verify(&src, &[ConjectureId::C04Elw], &params, &VerifyOptions::default()).unwrap();
        let t = &r.conjectures[0];
        assert!(t.violated >= 1);
        assert!(t.witnesses.contains(&"FhCKG".to_string()));
        assert_eq!(t.counterexamples.len(), t.violated);
        assert!(t.counterexamples.iter().all(|e| e.slack < 0.0));
        assert!(r.to_csv().lines().nth(1).unwrap().starts_with("C04_ELW,"));
    }

    #[test]
    fn partition_and_order_independence() {
        let ids = [ConjectureId::C01HongExt, ConjectureId::C19EnergyIndependence, ConjectureId::C22Powers];
        let src = GraphSource::BuiltinEnum {
            min_order: 2,
            max_order: 6,
            connected_only: true,
        };
        let base = verify(&src, &ids, &Params::default(), &VerifyOptions::default()).unwrap();
        let mut reversed: Vec<String> = src.open().unwrap().map(|g| g.to_graph6()).collect();
        reversed.reverse();
        let mut f = tempfile::NamedTempFile::new().unwrap();
        for l in &reversed {
            writeln!(f, "{l}").unwrap();
        }
        let stream = GraphSource::Graph6Stream {
            path: f.path().to_path_buf(),
        };
        for (workers, chunk) in [(1, 1), (4, 7), (2, 5000)] {
            let opts = VerifyOptions {
                workers: Some(workers),
                chunk,
                ..VerifyOptions::default()
            };
            let again = verify(&src, &ids, &Params::default(), &opts).unwrap();
            assert_eq!(base.payload_json(), again.payload_json());
            let from_file = verify(&stream, &ids, &Params::default(), &opts).unwrap();
            assert_eq!(
                serde_json::to_string(&base.conjectures).unwrap(),
                serde_json::to_string(&from_file.conjectures).unwrap()
            );
        }
    }

    #[test]
    fn offer_keeps_the_smallest() {
        let mk = |s: f64, g: &str| Entry {
            graph6: g.into(),
            slack: s,
            lhs: 0.0,
            rhs: 0.0,
            arg: None,
            key: None,
        };
        let mut t = Vec::new();
        for (s, g) in [(3.0, "a"), (1.0, "b"), (2.0, "c"), (1.0, "a"), (0.5, "z")] {
            offer(&mut t, 3, || mk(s, g), s);
        }
        let got: Vec<(f64, &str)> = t.iter().map(|e| (e.slack, e.graph6.as_str())).collect();
        assert_eq!(got, [(0.5, "z"), (1.0, "a"), (1.0, "b")]);
    }
}
