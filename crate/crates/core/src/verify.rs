//! Verification pipelines: per-graph theorem checks, whole-graph
//! classification, exhaustive labeled sweeps at small orders, and parallel
//! graph6 stream scans with deterministic merging.

use rayon::prelude::*;
use serde::Serialize;

use crate::cycles;
use crate::degseq::{realize, DegreeSequence};
use crate::error::{Error, Result};
use crate::format;
use crate::graph::{is_s_graph, Graph};
use crate::rng::SplitMix64;
use crate::spectral::{self, QMode, SpectralEstimate};
use crate::toughness::{self, Rational, ToughnessValue};

/// Which sufficient condition to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremId {
    /// m >= C(n-2t, 2) + 3t^2 implies pancyclic or bipartite.
    EdgeCount,
    /// rho(G) >= rho_threshold implies pancyclic or bipartite.
    SpectralRadius,
    /// q(G) >= q_threshold (printed form) implies pancyclic or bipartite.
    SignlessPrinted,
    /// q(G) >= q_threshold (corrected form) implies pancyclic or bipartite.
    SignlessCorrected,
    /// rho(G) >= hamiltonicity threshold implies Hamiltonian.
    HamiltonSpectral,
}

impl TheoremId {
    pub fn all() -> [TheoremId; 5] {
        [
            TheoremId::EdgeCount,
            TheoremId::SpectralRadius,
            TheoremId::SignlessPrinted,
            TheoremId::SignlessCorrected,
            TheoremId::HamiltonSpectral,
        ]
    }

    pub fn concludes_hamiltonian(&self) -> bool {
        matches!(self, TheoremId::HamiltonSpectral)
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            TheoremId::EdgeCount => "edges",
            TheoremId::SpectralRadius => "rho",
            TheoremId::SignlessPrinted => "q-printed",
            TheoremId::SignlessCorrected => "q-corrected",
            TheoremId::HamiltonSpectral => "ham-rho",
        };
        write!(f, "{name}")
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        match s {
            "edges" => Ok(TheoremId::EdgeCount),
            "rho" => Ok(TheoremId::SpectralRadius),
            "q-printed" => Ok(TheoremId::SignlessPrinted),
            "q-corrected" => Ok(TheoremId::SignlessCorrected),
            "ham-rho" => Ok(TheoremId::HamiltonSpectral),
            other => Err(Error::InvalidParameter(format!(
                "unknown theorem selector `{other}` (expected edges, rho, q-printed, q-corrected or ham-rho)"
            ))),
        }
    }
}

/// Per-graph verdict for one theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremVerdict {
    HypothesisFails,
    Confirmed,
    Counterexample,
    /// The spectral estimate is within its certified tolerance of the
    /// threshold; the hypothesis cannot be decided either way.
    Boundary,
}

impl std::fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            TheoremVerdict::HypothesisFails => "hypothesis-fails",
            TheoremVerdict::Confirmed => "confirmed",
            TheoremVerdict::Counterexample => "COUNTEREXAMPLE",
            TheoremVerdict::Boundary => "boundary",
        };
        write!(f, "{name}")
    }
}

/// Knobs shared by the pipelines.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Certification tolerance for the spectral estimates; estimates within
    /// this distance of a threshold yield `Boundary`.
    pub tol: f64,
    /// Run the exact cutset searches above their order guard.
    pub allow_large_toughness: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            tol: spectral::DEFAULT_TOL,
            allow_large_toughness: false,
        }
    }
}

/// Hypothesis evaluation detail for one theorem on one graph.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremOutcome {
    pub theorem: TheoremId,
    pub t: usize,
    pub verdict: TheoremVerdict,
    pub in_stated_range: bool,
    pub connected: bool,
    /// None when evaluation stopped before the toughness check.
    pub tough_enough: Option<bool>,
    /// None when evaluation stopped earlier or the estimate was boundary.
    pub threshold_met: Option<bool>,
    /// Conclusion flag, evaluated only once the hypothesis held.
    pub conclusion_holds: Option<bool>,
    pub detail: String,
}

fn hypothesis_fails(
    theorem: TheoremId,
    t: usize,
    in_range: bool,
    connected: bool,
    tough: Option<bool>,
    threshold: Option<bool>,
    detail: impl Into<String>,
) -> TheoremOutcome {
    TheoremOutcome {
        theorem,
        t,
        verdict: TheoremVerdict::HypothesisFails,
        in_stated_range: in_range,
        connected,
        tough_enough: tough,
        threshold_met: threshold,
        conclusion_holds: None,
        detail: detail.into(),
    }
}

/// Evaluates one theorem on one graph: hypothesis first (stated range,
/// connectivity, toughness, then the threshold, cheapest first), conclusion
/// only when the hypothesis is certified.
pub fn check_theorem(
    g: &Graph,
    t: usize,
    which: TheoremId,
    config: &VerifyConfig,
) -> Result<TheoremOutcome> {
    if !(1..=3).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "theorems are stated for t in {{1, 2, 3}}, got {t}"
        )));
    }
    let n = g.n();
    let in_range = if which.concludes_hamiltonian() {
        spectral::hamiltonicity_range_ok(n, t)?
    } else {
        n >= spectral::pancyclicity_floor(t)?
    };
    if !in_range {
        return Ok(hypothesis_fails(
            which,
            t,
            false,
            g.is_connected(),
            None,
            None,
            format!("n = {n} below the stated order range for t = {t}"),
        ));
    }
    if !g.is_connected() {
        return Ok(hypothesis_fails(
            which,
            t,
            true,
            false,
            None,
            None,
            "disconnected",
        ));
    }

    // Edge-count hypothesis is free; check it before the exponential part.
    if which == TheoremId::EdgeCount {
        let threshold = spectral::edge_threshold(n, t)?;
        if (g.edge_count() as u64) < threshold {
            return Ok(hypothesis_fails(
                which,
                t,
                true,
                true,
                None,
                Some(false),
                format!("m = {} < {threshold}", g.edge_count()),
            ));
        }
    }

    let tough = is_t_tough_by_config(g, Rational::from_integer(t as i64), config)?;
    if !tough {
        return Ok(hypothesis_fails(
            which,
            t,
            true,
            true,
            Some(false),
            None,
            format!("not {t}-tough"),
        ));
    }

    let mut detail = String::new();
    if which != TheoremId::EdgeCount {
        let (estimate, threshold) = spectral_side(g, t, which, config)?;
        detail = format!(
            "estimate {:.10} vs threshold {:.10}",
            estimate.value, threshold
        );
        if (estimate.value - threshold).abs() <= estimate.tolerance {
            return Ok(TheoremOutcome {
                theorem: which,
                t,
                verdict: TheoremVerdict::Boundary,
                in_stated_range: true,
                connected: true,
                tough_enough: Some(true),
                threshold_met: None,
                conclusion_holds: None,
                detail,
            });
        }
        if estimate.value < threshold {
            return Ok(hypothesis_fails(
                which,
                t,
                true,
                true,
                Some(true),
                Some(false),
                detail,
            ));
        }
    }

    let conclusion = if which.concludes_hamiltonian() {
        cycles::is_hamiltonian(g)?
    } else {
        g.is_bipartite() || cycles::is_pancyclic(g)?
    };
    Ok(TheoremOutcome {
        theorem: which,
        t,
        verdict: if conclusion {
            TheoremVerdict::Confirmed
        } else {
            TheoremVerdict::Counterexample
        },
        in_stated_range: true,
        connected: true,
        tough_enough: Some(true),
        threshold_met: Some(true),
        conclusion_holds: Some(conclusion),
        detail,
    })
}

fn spectral_side(
    g: &Graph,
    t: usize,
    which: TheoremId,
    config: &VerifyConfig,
) -> Result<(SpectralEstimate, f64)> {
    let n = g.n();
    match which {
        TheoremId::SpectralRadius => Ok((
            spectral::adjacency_spectral_radius(g, config.tol)?,
            spectral::rho_threshold(n, t)?,
        )),
        TheoremId::HamiltonSpectral => Ok((
            spectral::adjacency_spectral_radius(g, config.tol)?,
            spectral::hamiltonicity_rho_threshold(n, t)?,
        )),
        TheoremId::SignlessPrinted => Ok((
            spectral::signless_laplacian_radius(g, config.tol)?,
            spectral::q_threshold(n, t, QMode::Printed)?,
        )),
        TheoremId::SignlessCorrected => Ok((
            spectral::signless_laplacian_radius(g, config.tol)?,
            spectral::q_threshold(n, t, QMode::Corrected)?,
        )),
        TheoremId::EdgeCount => unreachable!("edge hypothesis handled separately"),
    }
}

fn is_t_tough_by_config(g: &Graph, t: Rational, config: &VerifyConfig) -> Result<bool> {
    if config.allow_large_toughness {
        toughness::is_t_tough_unguarded(g, t)
    } else {
        toughness::is_t_tough(g, t)
    }
}

/// Full per-graph record: structural invariants plus one verdict per
/// theorem at the given t.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub m: usize,
    pub degree_sequence: String,
    pub toughness: ToughnessValue,
    pub delta: usize,
    pub kappa: usize,
    pub rho: SpectralEstimate,
    pub q: SpectralEstimate,
    pub bipartite: bool,
    pub hamiltonian: bool,
    pub pancyclic: bool,
    pub cycle_spectrum: Vec<usize>,
    pub theorems: Vec<TheoremOutcome>,
}

impl std::fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "n = {}, m = {}", self.n, self.m)?;
        writeln!(f, "degree sequence   ({})", self.degree_sequence)?;
        writeln!(f, "toughness         {}", self.toughness)?;
        writeln!(f, "min degree        {}", self.delta)?;
        writeln!(f, "connectivity      {}", self.kappa)?;
        writeln!(
            f,
            "rho               {:.10} (+/- {:.1e})",
            self.rho.value, self.rho.tolerance
        )?;
        writeln!(
            f,
            "q                 {:.10} (+/- {:.1e})",
            self.q.value, self.q.tolerance
        )?;
        writeln!(f, "bipartite         {}", self.bipartite)?;
        writeln!(f, "hamiltonian       {}", self.hamiltonian)?;
        writeln!(f, "pancyclic         {}", self.pancyclic)?;
        let lengths: Vec<String> = self.cycle_spectrum.iter().map(|l| l.to_string()).collect();
        writeln!(f, "cycle lengths     {{{}}}", lengths.join(","))?;
        for outcome in &self.theorems {
            writeln!(
                f,
                "theorem {:<12} t = {}: {}{}",
                outcome.theorem.to_string(),
                outcome.t,
                outcome.verdict,
                if outcome.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", outcome.detail)
                }
            )?;
        }
        Ok(())
    }
}

/// Computes every field of the classification report; guards of the
/// underlying searches propagate as errors.
pub fn classify(g: &Graph, t: usize, config: &VerifyConfig) -> Result<ClassificationReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !(1..=3).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "classification is defined for t in {{1, 2, 3}}, got {t}"
        )));
    }
    let tau = if config.allow_large_toughness {
        toughness::toughness_unguarded(g)?
    } else {
        toughness::toughness(g)?
    };
    let spectrum = cycles::cycle_spectrum(g);
    let theorems = TheoremId::all()
        .into_iter()
        .map(|which| check_theorem(g, t, which, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassificationReport {
        n: g.n(),
        m: g.edge_count(),
        degree_sequence: g.degree_sequence().to_multiplicity_string(),
        toughness: tau,
        delta: g.min_degree(),
        kappa: toughness::vertex_connectivity(g)?,
        rho: spectral::adjacency_spectral_radius(g, config.tol)?,
        q: spectral::signless_laplacian_radius(g, config.tol)?,
        bipartite: g.is_bipartite(),
        hamiltonian: g.n() >= 3 && cycles::is_hamiltonian(g)?,
        pancyclic: g.n() >= 3 && spectrum.is_full(),
        cycle_spectrum: spectrum.lengths().collect(),
        theorems,
    })
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct ScanCounts {
    pub examined: u64,
    pub connected: u64,
    pub hypothesis_met: u64,
    pub confirmed: u64,
    pub counterexamples: u64,
    pub boundary: u64,
}

impl ScanCounts {
    fn absorb(&mut self, other: &ScanCounts) {
        self.examined += other.examined;
        self.connected += other.connected;
        self.hypothesis_met += other.hypothesis_met;
        self.confirmed += other.confirmed;
        self.counterexamples += other.counterexamples;
        self.boundary += other.boundary;
    }

    fn record(&mut self, outcome: &TheoremOutcome) {
        self.examined += 1;
        if outcome.connected {
            self.connected += 1;
        }
        match outcome.verdict {
            TheoremVerdict::HypothesisFails => {}
            TheoremVerdict::Boundary => self.boundary += 1,
            TheoremVerdict::Confirmed => {
                self.hypothesis_met += 1;
                self.confirmed += 1;
            }
            TheoremVerdict::Counterexample => {
                self.hypothesis_met += 1;
                self.counterexamples += 1;
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanParams {
    pub mode: &'static str,
    pub n: Option<usize>,
    pub t: usize,
    pub theorem: String,
    pub tol: f64,
    pub workers: usize,
    pub seed: Option<u64>,
}

/// Result of a sweep or stream scan. `counterexamples + confirmed =
/// hypothesis_met` always holds; boundary cases are counted apart.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub tool_version: String,
    pub params: ScanParams,
    pub counts: ScanCounts,
    pub first_counterexample_graph6: Option<String>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl std::fmt::Display for ScanReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{} report: theorem {} at t = {}",
            self.params.mode, self.params.theorem, self.params.t
        )?;
        writeln!(f, "  examined        {}", self.counts.examined)?;
        writeln!(f, "  connected       {}", self.counts.connected)?;
        writeln!(f, "  hypothesis met  {}", self.counts.hypothesis_met)?;
        writeln!(f, "  confirmed       {}", self.counts.confirmed)?;
        writeln!(f, "  boundary        {}", self.counts.boundary)?;
        writeln!(f, "  counterexamples {}", self.counts.counterexamples)?;
        if let Some(g6) = &self.first_counterexample_graph6 {
            writeln!(f, "  first counterexample: {g6}")?;
        }
        for d in &self.diagnostics {
            writeln!(f, "  line {}: {}", d.line, d.message)?;
        }
        Ok(())
    }
}

/// Hard cap for the labeled sweep; 2^21 graphs at n = 7 is the practical
/// desk-scale limit, larger orders go through graph6 streams.
pub const SWEEP_MAX_ORDER: usize = 7;

/// Exhaustively sweeps every labeled graph on `n` vertices (edge masks in
/// graph6 bit order) and tallies theorem verdicts. The first counterexample
/// is the one with the smallest edge mask, independent of parallel split.
pub fn exhaustive_sweep(
    n: usize,
    t: usize,
    which: TheoremId,
    config: &VerifyConfig,
) -> Result<ScanReport> {
    if n > SWEEP_MAX_ORDER {
        return Err(Error::GuardExceeded {
            what: "exhaustive labeled sweep (scan a graph6 stream instead)",
            n,
            guard: SWEEP_MAX_ORDER,
        });
    }
    if !(1..=3).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "theorems are stated for t in {{1, 2, 3}}, got {t}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|col| (0..col).map(move |row| (row, col)))
        .collect();
    let total: u64 = 1u64 << pairs.len();
    const CHUNK: u64 = 1 << 12;
    let chunks: u64 = total.div_ceil(CHUNK);

    let (counts, first) = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut counts = ScanCounts::default();
            let mut first: Option<u64> = None;
            let end = ((chunk + 1) * CHUNK).min(total);
            for mask in (chunk * CHUNK)..end {
                let mut g = Graph::empty(n);
                for (bit, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                let outcome =
                    check_theorem(&g, t, which, config).expect("sweep inputs satisfy guards");
                counts.record(&outcome);
                if outcome.verdict == TheoremVerdict::Counterexample && first.is_none() {
                    first = Some(mask);
                }
            }
            (counts, first)
        })
        .reduce(
            || (ScanCounts::default(), None),
            |(mut counts, first_a), (other, first_b)| {
                counts.absorb(&other);
                let first = match (first_a, first_b) {
                    (Some(a), Some(b)) => Some(a.min(b)),
                    (a, b) => a.or(b),
                };
                (counts, first)
            },
        );

    let first_counterexample_graph6 = first.map(|mask| {
        let mut g = Graph::empty(n);
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        format::graph6_encode(&g).expect("sweep orders fit graph6")
    });

    Ok(ScanReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        params: ScanParams {
            mode: "sweep",
            n: Some(n),
            t,
            theorem: which.to_string(),
            tol: config.tol,
            workers: rayon::current_num_threads(),
            seed: None,
        },
        counts,
        first_counterexample_graph6,
        diagnostics: Vec::new(),
    })
}

/// Scans a stream of graph6 lines (one graph per line). Malformed lines
/// become diagnostics and the scan continues. Counts are summed and the
/// first counterexample is the one on the lowest line, so the report does
/// not depend on `workers`.
pub fn scan_graph6_lines<'a, I>(
    lines: I,
    t: usize,
    which: TheoremId,
    workers: usize,
    config: &VerifyConfig,
) -> Result<ScanReport>
where
    I: IntoIterator<Item = &'a str>,
{
    if !(1..=3).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "theorems are stated for t in {{1, 2, 3}}, got {t}"
        )));
    }
    let lines: Vec<&str> = lines.into_iter().collect();

    let run = || -> (ScanCounts, Option<(usize, String)>, Vec<Diagnostic>) {
        lines
            .par_iter()
            .enumerate()
            .map(|(index, line)| {
                let mut counts = ScanCounts::default();
                let mut first = None;
                let mut diagnostics = Vec::new();
                let trimmed = line.trim();
                if trimmed.is_empty() {
                    return (counts, first, diagnostics);
                }
                match format::graph6_decode(trimmed) {
                    Err(e) => diagnostics.push(Diagnostic {
                        line: index + 1,
                        message: e.to_string(),
                    }),
                    Ok(g) => match check_theorem(&g, t, which, config) {
                        Err(e) => diagnostics.push(Diagnostic {
                            line: index + 1,
                            message: e.to_string(),
                        }),
                        Ok(outcome) => {
                            counts.record(&outcome);
                            if outcome.verdict == TheoremVerdict::Counterexample {
                                first = Some((index, trimmed.to_string()));
                            }
                        }
                    },
                }
                (counts, first, diagnostics)
            })
            .reduce(
                || (ScanCounts::default(), None, Vec::new()),
                |(mut counts, first_a, mut diag_a), (other, first_b, diag_b)| {
                    counts.absorb(&other);
                    diag_a.extend(diag_b);
                    let first = match (first_a, first_b) {
                        (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
                        (a, b) => a.or(b),
                    };
                    (counts, first, diag_a)
                },
            )
    };

    let (counts, first, mut diagnostics) = if workers == 0 {
        run()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
        pool.install(run)
    };
    diagnostics.sort_by_key(|d| d.line);

    Ok(ScanReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        params: ScanParams {
            mode: "scan",
            n: None,
            t,
            theorem: which.to_string(),
            tol: config.tol,
            workers: if workers == 0 {
                rayon::current_num_threads()
            } else {
                workers
            },
            seed: None,
        },
        counts,
        first_counterexample_graph6: first.map(|(_, g6)| g6),
        diagnostics,
    })
}

/// The supporting facts, checkable per graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SupportingProp {
    /// Adding edges never lowers toughness.
    ToughnessMonotone,
    /// tau(G) <= kappa(G)/2 for non-complete G.
    ToughnessVsConnectivity,
    /// 2*tau(G) <= delta(G) for non-complete G.
    MinDegreeBound,
    /// On 2-tough graphs, adding a nonadjacent pair with degree sum >= n-1
    /// preserves (non-)Hamiltonicity.
    StableEdgeAddition,
    /// t-tough + P(t) implies Hamiltonian (t in 1..=3).
    DegreeConditionHamiltonian,
    /// t-tough + P(t) + Hamiltonian implies pancyclic or bipartite.
    DegreeConditionPancyclic,
    /// Hamiltonian with more than n/3 vertices of degree above n/2 implies
    /// pancyclic.
    ManyHighDegreesPancyclic,
    /// Hamiltonian with at least n/2 vertices of degree at least n/2
    /// implies pancyclic, bipartite, or the S-graph.
    HalfHighDegreesAlmostPancyclic,
}

impl SupportingProp {
    pub fn all() -> [SupportingProp; 8] {
        use SupportingProp::*;
        [
            ToughnessMonotone,
            ToughnessVsConnectivity,
            MinDegreeBound,
            StableEdgeAddition,
            DegreeConditionHamiltonian,
            DegreeConditionPancyclic,
            ManyHighDegreesPancyclic,
            HalfHighDegreesAlmostPancyclic,
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PropOutcome {
    Holds,
    NotApplicable,
    Violated,
}

/// Evaluates a supporting fact on a connected graph; `NotApplicable` when
/// its premise fails, `Violated` is a reportable finding.
pub fn check_supporting_prop(g: &Graph, which: SupportingProp) -> Result<PropOutcome> {
    use PropOutcome::*;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    match which {
        SupportingProp::ToughnessMonotone => {
            if g.is_complete() {
                return Ok(NotApplicable);
            }
            let base = toughness::toughness(g)?;
            for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) {
                        let mut bigger = g.clone();
                        bigger.add_edge(u, v);
                        if toughness::toughness(&bigger)? < base {
                            return Ok(Violated);
                        }
                    }
                }
            }
            Ok(Holds)
        }
        SupportingProp::ToughnessVsConnectivity => {
            if g.is_complete() {
                return Ok(NotApplicable);
            }
            let kappa = toughness::vertex_connectivity(g)? as i64;
            match toughness::toughness(g)? {
                ToughnessValue::Infinite => Ok(Violated),
                ToughnessValue::Finite(r) => {
                    if 2 * r.num() <= kappa * r.den() {
                        Ok(Holds)
                    } else {
                        Ok(Violated)
                    }
                }
            }
        }
        SupportingProp::MinDegreeBound => {
            if g.is_complete() {
                return Ok(NotApplicable);
            }
            match toughness::toughness(g)? {
                ToughnessValue::Infinite => Ok(Violated),
                ToughnessValue::Finite(r) => {
                    if 2 * r.num() <= g.min_degree() as i64 * r.den() {
                        Ok(Holds)
                    } else {
                        Ok(Violated)
                    }
                }
            }
        }
        SupportingProp::StableEdgeAddition => {
            if n < 3 || !toughness::is_t_tough(g, Rational::from_integer(2))? {
                return Ok(NotApplicable);
            }
            let ham = cycles::is_hamiltonian(g)?;
            for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) && g.degree(u) + g.degree(v) >= n - 1 {
                        let mut bigger = g.clone();
                        bigger.add_edge(u, v);
                        if cycles::is_hamiltonian(&bigger)? != ham {
                            return Ok(Violated);
                        }
                    }
                }
            }
            Ok(Holds)
        }
        SupportingProp::DegreeConditionHamiltonian => {
            if n < 3 {
                return Ok(NotApplicable);
            }
            let seq = g.degree_sequence();
            let mut applicable = false;
            for t in 1..=3i64 {
                if crate::degseq::predicate_p(&seq, t as usize).holds
                    && toughness::is_t_tough(g, Rational::from_integer(t))?
                {
                    applicable = true;
                    if !cycles::is_hamiltonian(g)? {
                        return Ok(Violated);
                    }
                }
            }
            Ok(if applicable { Holds } else { NotApplicable })
        }
        SupportingProp::DegreeConditionPancyclic => {
            if n < 3 {
                return Ok(NotApplicable);
            }
            let seq = g.degree_sequence();
            let mut applicable = false;
            for t in 1..=3i64 {
                if crate::degseq::predicate_p(&seq, t as usize).holds
                    && toughness::is_t_tough(g, Rational::from_integer(t))?
                    && cycles::is_hamiltonian(g)?
                {
                    applicable = true;
                    if !(g.is_bipartite() || cycles::is_pancyclic(g)?) {
                        return Ok(Violated);
                    }
                }
            }
            Ok(if applicable { Holds } else { NotApplicable })
        }
        SupportingProp::ManyHighDegreesPancyclic => {
            if n < 3 || !cycles::is_hamiltonian(g)? {
                return Ok(NotApplicable);
            }
            let high = (0..n).filter(|&v| 2 * g.degree(v) > n).count();
            if 3 * high <= n {
                return Ok(NotApplicable);
            }
            Ok(if cycles::is_pancyclic(g)? {
                Holds
            } else {
                Violated
            })
        }
        SupportingProp::HalfHighDegreesAlmostPancyclic => {
            if n < 3 || !cycles::is_hamiltonian(g)? {
                return Ok(NotApplicable);
            }
            let high = (0..n).filter(|&v| 2 * g.degree(v) >= n).count();
            if 2 * high < n {
                return Ok(NotApplicable);
            }
            Ok(
                if g.is_bipartite() || cycles::is_pancyclic(g)? || is_s_graph(g) {
                    Holds
                } else {
                    Violated
                },
            )
        }
    }
}

/// Degree-preserving randomized realizations: the canonical realization
/// perturbed by random double-edge switches. Used where exhausting all
/// realizations of a sequence is infeasible.
pub fn sampled_realizations(
    seq: &DegreeSequence,
    samples: usize,
    switches_per_sample: usize,
    seed: u64,
) -> Result<Vec<Graph>> {
    let base = realize(seq)?;
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let mut g = base.clone();
        let mut done = 0;
        let mut attempts = 0;
        let cap = switches_per_sample * 40;
        while done < switches_per_sample && attempts < cap {
            attempts += 1;
            let edges: Vec<(usize, usize)> = g.edges().collect();
            if edges.len() < 2 {
                break;
            }
            let (a, b) = edges[rng.next_below(edges.len())];
            let (c, d) = edges[rng.next_below(edges.len())];
            // Swap orientation at random: (a-c, b-d) or (a-d, b-c).
            let (c, d) = if rng.next_below(2) == 0 {
                (c, d)
            } else {
                (d, c)
            };
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if g.has_edge(a, c) || g.has_edge(b, d) {
                continue;
            }
            g.remove_edge(a, b);
            g.remove_edge(c, d);
            g.add_edge(a, c);
            g.add_edge(b, d);
            done += 1;
        }
        debug_assert_eq!(g.degree_sequence(), *seq);
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn config() -> VerifyConfig {
        VerifyConfig::default()
    }

    #[test]
    fn classify_complete_graph() {
        let report = classify(&Graph::complete(7), 1, &config()).unwrap();
        assert_eq!(report.m, 21);
        assert!(report.toughness.is_infinite());
        assert!(report.pancyclic);
        let edges = report
            .theorems
            .iter()
            .find(|o| o.theorem == TheoremId::EdgeCount)
            .unwrap();
        assert_eq!(edges.verdict, TheoremVerdict::Confirmed);
    }

    #[test]
    fn classify_c7_fails_hypothesis() {
        let report = classify(&Graph::cycle(7).unwrap(), 1, &config()).unwrap();
        assert!(!report.pancyclic);
        let edges = report
            .theorems
            .iter()
            .find(|o| o.theorem == TheoremId::EdgeCount)
            .unwrap();
        assert_eq!(edges.verdict, TheoremVerdict::HypothesisFails);
        assert_eq!(edges.threshold_met, Some(false));
    }

    #[test]
    fn classify_rejects_disconnected_and_bad_t() {
        assert!(matches!(
            classify(&Graph::matching(3), 1, &config()),
            Err(Error::Disconnected)
        ));
        assert!(classify(&Graph::complete(7), 4, &config()).is_err());
    }

    #[test]
    fn nonadjacent_apex_variant_confirms_edge_theorem() {
        let g = catalog::build("1.1.1-nonadjacent", Some(7)).unwrap();
        let outcome = check_theorem(&g, 1, TheoremId::EdgeCount, &config()).unwrap();
        assert_eq!(outcome.verdict, TheoremVerdict::Confirmed);
    }

    #[test]
    fn k16_confirms_edge_theorem_at_t2() {
        let outcome =
            check_theorem(&Graph::complete(16), 2, TheoremId::EdgeCount, &config()).unwrap();
        assert_eq!(outcome.verdict, TheoremVerdict::Confirmed);
    }

    #[test]
    fn below_floor_is_hypothesis_fails_not_error() {
        let outcome =
            check_theorem(&Graph::complete(5), 1, TheoremId::EdgeCount, &config()).unwrap();
        assert_eq!(outcome.verdict, TheoremVerdict::HypothesisFails);
        assert!(!outcome.in_stated_range);

        // Proposition floor: n >= 8t for the Hamiltonicity threshold.
        let outcome = check_theorem(
            &Graph::complete(7),
            1,
            TheoremId::HamiltonSpectral,
            &config(),
        )
        .unwrap();
        assert_eq!(outcome.verdict, TheoremVerdict::HypothesisFails);
        assert!(!outcome.in_stated_range);
        let outcome = check_theorem(
            &Graph::complete(8),
            1,
            TheoremId::HamiltonSpectral,
            &config(),
        )
        .unwrap();
        assert_eq!(outcome.verdict, TheoremVerdict::Confirmed);
    }

    #[test]
    fn printed_q_threshold_never_fires_at_n17() {
        // The printed threshold exceeds 2(n-1) >= q(G), so every graph fails
        // the hypothesis.
        let g = catalog::build("2.2.1", None).unwrap();
        let outcome = check_theorem(&g, 2, TheoremId::SignlessPrinted, &config()).unwrap();
        assert_eq!(outcome.verdict, TheoremVerdict::HypothesisFails);
        assert_eq!(outcome.threshold_met, Some(false));
    }

    #[test]
    fn sweep_at_n5_t1_has_no_admissible_graphs() {
        let report = exhaustive_sweep(5, 1, TheoremId::EdgeCount, &config()).unwrap();
        assert_eq!(report.counts.examined, 1 << 10);
        assert_eq!(report.counts.hypothesis_met, 0);
        assert_eq!(report.counts.counterexamples, 0);
    }

    #[test]
    fn sweep_rejects_large_orders() {
        assert!(matches!(
            exhaustive_sweep(8, 1, TheoremId::EdgeCount, &config()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn scan_handles_malformed_lines_and_counts() {
        let k7 = format::graph6_encode(&Graph::complete(7)).unwrap();
        let text = format!("not-a-graph\n{k7}\n");
        let report =
            scan_graph6_lines(text.lines(), 1, TheoremId::EdgeCount, 1, &config()).unwrap();
        assert_eq!(report.diagnostics.len(), 1);
        assert_eq!(report.diagnostics[0].line, 1);
        assert_eq!(report.counts.examined, 1);
        assert_eq!(report.counts.confirmed, 1);

        let empty = scan_graph6_lines([], 1, TheoremId::EdgeCount, 1, &config()).unwrap();
        assert_eq!(empty.counts.examined, 0);
    }

    #[test]
    fn scan_worker_counts_do_not_change_the_report() {
        let lines: Vec<String> = (0..40u64)
            .map(|i| {
                let mut g = Graph::complete(7);
                g.remove_edge((i % 7) as usize, ((i + 1) % 7) as usize);
                format::graph6_encode(&g).unwrap()
            })
            .collect();
        let text = lines.join("\n");
        let single =
            scan_graph6_lines(text.lines(), 1, TheoremId::EdgeCount, 1, &config()).unwrap();
        let many = scan_graph6_lines(text.lines(), 1, TheoremId::EdgeCount, 8, &config()).unwrap();
        assert_eq!(single.counts.examined, many.counts.examined);
        assert_eq!(single.counts.confirmed, many.counts.confirmed);
        assert_eq!(
            single.first_counterexample_graph6,
            many.first_counterexample_graph6
        );
    }

    #[test]
    fn supporting_props_on_small_graphs() {
        let k7 = Graph::complete(7);
        assert_eq!(
            check_supporting_prop(&k7, SupportingProp::ManyHighDegreesPancyclic).unwrap(),
            PropOutcome::Holds
        );
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            check_supporting_prop(&c6, SupportingProp::MinDegreeBound).unwrap(),
            PropOutcome::Holds
        );
        let s12 = crate::graph::s_graph(12).unwrap();
        assert_eq!(
            check_supporting_prop(&s12, SupportingProp::HalfHighDegreesAlmostPancyclic).unwrap(),
            PropOutcome::Holds
        );
        // S_12 escapes through the S-clause specifically.
        assert!(!cycles::is_pancyclic(&s12).unwrap());
        assert!(!s12.is_bipartite());
        assert!(is_s_graph(&s12));
    }

    #[test]
    fn sampled_realizations_preserve_the_sequence() {
        let seq = DegreeSequence::parse("8^11,16^6").unwrap();
        let samples = sampled_realizations(&seq, 10, 50, 99).unwrap();
        assert_eq!(samples.len(), 10);
        for g in &samples {
            assert_eq!(g.degree_sequence(), seq);
            // Universal vertices can never lose an edge in a valid switch.
            assert_eq!(g.universal_mask().count_ones(), 6);
        }
        // Deterministic per seed.
        let again = sampled_realizations(&seq, 10, 50, 99).unwrap();
        assert_eq!(samples, again);
        assert_ne!(samples[0], samples[1]);
    }
}
