//! Degree sequences: multiplicity notation, the Erdos-Gallai graphicality
//! test, deterministic Havel-Hakimi realization, exhaustive labeled
//! realization at small orders, the predicate P(t) on sorted degrees, and
//! the degree-sum bound that drives the edge-count threshold.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Non-decreasing degree sequence; every entry is at most `n - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Result<Self> {
        degrees.sort_unstable();
        let n = degrees.len();
        if let Some(&max) = degrees.last() {
            if max >= n {
                return Err(Error::InvalidParameter(format!(
                    "degree {max} too large for a simple graph on {n} vertices"
                )));
            }
        }
        Ok(DegreeSequence { degrees })
    }

    pub(crate) fn from_sorted(degrees: Vec<usize>) -> Self {
        debug_assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
        DegreeSequence { degrees }
    }

    /// Parses multiplicity notation, e.g. `8^11,14^1,16^5`; plain
    /// comma-separated degrees are accepted too.
    pub fn parse(text: &str) -> Result<Self> {
        let mut degrees = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (degree, count) = match part.split_once('^') {
                Some((d, c)) => (d.trim(), c.trim()),
                None => (part, "1"),
            };
            let degree: usize = degree.parse().map_err(|_| {
                Error::InvalidParameter(format!("bad degree `{degree}` in `{text}`"))
            })?;
            let count: usize = count.parse().map_err(|_| {
                Error::InvalidParameter(format!("bad multiplicity `{count}` in `{text}`"))
            })?;
            if count == 0 {
                return Err(Error::InvalidParameter(format!(
                    "zero multiplicity in `{text}`"
                )));
            }
            degrees.extend(std::iter::repeat_n(degree, count));
        }
        DegreeSequence::new(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Renders in multiplicity notation, e.g. `4^6,8^3`.
    pub fn to_multiplicity_string(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.degrees.len() {
            let d = self.degrees[i];
            let run = self.degrees[i..].iter().take_while(|&&x| x == d).count();
            if run == 1 {
                parts.push(format!("{d}"));
            } else {
                parts.push(format!("{d}^{run}"));
            }
            i += run;
        }
        parts.join(",")
    }
}

impl std::fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.to_multiplicity_string())
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_multiplicity_string())
    }
}

impl std::str::FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DegreeSequence::parse(s)
    }
}

/// Erdos-Gallai test: even degree sum and all n partial-sum inequalities.
pub fn is_graphical(seq: &DegreeSequence) -> bool {
    let n = seq.len();
    if n == 0 {
        return true;
    }
    // Work with the non-increasing order.
    let desc: Vec<usize> = seq.as_slice().iter().rev().copied().collect();
    if desc.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    let mut prefix = 0usize;
    for k in 1..=n {
        prefix += desc[k - 1];
        let mut rhs = k * (k - 1);
        for &d in &desc[k..] {
            rhs += d.min(k);
        }
        if prefix > rhs {
            return false;
        }
    }
    true
}

/// Havel-Hakimi realization: repeatedly satisfy the vertex with the largest
/// remaining degree (smallest index on ties), connecting it to the other
/// largest-residual vertices. Deterministic; fails only on non-graphical
/// input.
pub fn realize(seq: &DegreeSequence) -> Result<Graph> {
    if !is_graphical(seq) {
        return Err(Error::NotGraphical);
    }
    let n = seq.len();
    let mut g = Graph::empty(n);
    let mut residual: Vec<usize> = seq.as_slice().to_vec();
    loop {
        let v = match (0..n).max_by(|&a, &b| {
            residual[a].cmp(&residual[b]).then(b.cmp(&a)) // ties: smaller index
        }) {
            Some(v) if residual[v] > 0 => v,
            _ => break,
        };
        let need = residual[v];
        residual[v] = 0;
        let mut partners: Vec<usize> = (0..n)
            .filter(|&u| u != v && residual[u] > 0 && !g.has_edge(u, v))
            .collect();
        partners.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        debug_assert!(partners.len() >= need, "graphical input cannot run dry");
        for &u in partners.iter().take(need) {
            g.add_edge(v, u);
            residual[u] -= 1;
        }
    }
    debug_assert_eq!(&g.degree_sequence(), seq);
    Ok(g)
}

/// Guard for [`enumerate_realizations`]: the labeled search space explodes
/// past this order.
pub const ENUMERATION_GUARD: usize = 10;

/// All labeled graphs realizing `seq`, up to `limit`. Emits every labeled
/// realization exactly once; the list is complete whenever its length is
/// below `limit`. Non-graphical input yields the empty list.
pub fn enumerate_realizations(seq: &DegreeSequence, limit: usize) -> Result<Vec<Graph>> {
    if seq.len() > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded {
            what:
                "labeled realization enumeration (use randomized edge switching for larger orders)",
            n: seq.len(),
            guard: ENUMERATION_GUARD,
        });
    }
    Ok(enumerate_realizations_unguarded(seq, limit))
}

/// [`enumerate_realizations`] without the order guard.
pub fn enumerate_realizations_unguarded(seq: &DegreeSequence, limit: usize) -> Vec<Graph> {
    let n = seq.len();
    if !seq.sum().is_multiple_of(2) {
        return Vec::new();
    }
    let mut residual: Vec<usize> = seq.as_slice().to_vec();
    let mut g = Graph::empty(n);
    let mut out = Vec::new();
    fill_next(&mut g, &mut residual, limit, &mut out);
    out
}

/// Satisfies the smallest-index vertex with positive residual degree by
/// trying every subset of eligible partners, then recurses. All vertices
/// below that one are already satisfied, so each labeled graph is produced
/// through exactly one choice sequence.
fn fill_next(g: &mut Graph, residual: &mut [usize], limit: usize, out: &mut Vec<Graph>) {
    if out.len() >= limit {
        return;
    }
    let v = match residual.iter().position(|&r| r > 0) {
        Some(v) => v,
        None => {
            out.push(g.clone());
            return;
        }
    };
    let need = residual[v];
    let candidates: Vec<usize> = ((v + 1)..residual.len())
        .filter(|&u| residual[u] > 0)
        .collect();
    if candidates.len() < need {
        return;
    }
    let mut chosen = Vec::with_capacity(need);
    choose_partners(
        g,
        residual,
        v,
        need,
        &candidates,
        0,
        &mut chosen,
        limit,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn choose_partners(
    g: &mut Graph,
    residual: &mut [usize],
    v: usize,
    need: usize,
    candidates: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    limit: usize,
    out: &mut Vec<Graph>,
) {
    if out.len() >= limit {
        return;
    }
    if chosen.len() == need {
        residual[v] = 0;
        fill_next(g, residual, limit, out);
        residual[v] = need;
        return;
    }
    let still_needed = need - chosen.len();
    for i in from..candidates.len() {
        if candidates.len() - i < still_needed {
            break;
        }
        let u = candidates[i];
        g.add_edge(v, u);
        residual[u] -= 1;
        chosen.push(u);
        choose_partners(g, residual, v, need, candidates, i + 1, chosen, limit, out);
        chosen.pop();
        residual[u] += 1;
        g.remove_edge(v, u);
    }
}

/// Outcome of the degree predicate P(t).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PredicateOutcome {
    pub holds: bool,
    /// Smallest violating index (1-based) when `holds` is false.
    pub witness: Option<usize>,
}

/// P(t) on the sorted sequence `d_1 <= ... <= d_n` (1-based): for every
/// integer i with t <= i < n/2, `d_i <= i` implies `d_{n-i+t} >= n - i`.
/// Vacuously true when the range is empty.
pub fn predicate_p(seq: &DegreeSequence, t: usize) -> PredicateOutcome {
    assert!(t >= 1, "P(t) is defined for t >= 1");
    let n = seq.len();
    let d = seq.as_slice();
    // i < n/2 for integers means i <= (n - 1) / 2, both parities.
    for i in t..=(n.saturating_sub(1)) / 2 {
        if d[i - 1] <= i && d[n - i + t - 1] < n - i {
            return PredicateOutcome {
                holds: false,
                witness: Some(i),
            };
        }
    }
    PredicateOutcome {
        holds: true,
        witness: None,
    }
}

/// The quadratic degree-sum bound `n^2 - n + 3k^2 + k(1 - 2n - t)` used to
/// cap `2m`; equal, as an integer identity, to
/// `2*C(n-2t, 2) + 6t^2 - (k-2t)(2n-3k-5t-1)`.
pub fn degree_sum_bound(n: i64, k: i64, t: i64) -> Result<i64> {
    if !(1 <= t && t <= k && 2 * k < n) {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= t <= k < n/2, got n = {n}, k = {k}, t = {t}"
        )));
    }
    Ok(n * n - n + 3 * k * k + k * (1 - 2 * n - t))
}

/// The fifteen graphical degree sequences of the m = 90, n = 17 case.
pub fn table1_sequences() -> Vec<DegreeSequence> {
    const ROWS: [&str; 15] = [
        "5^1,8^10,15^1,16^5",
        "6^1,7^2,8^8,16^6",
        "6^1,7^1,8^9,15^1,16^5",
        "6^1,8^10,14^1,16^5",
        "6^1,8^10,15^2,16^4",
        "6^2,8^9,16^6",
        "7^4,8^7,16^6",
        "7^3,8^8,15^1,16^5",
        "7^2,8^9,15^2,16^4",
        "7^2,8^9,14^1,16^5",
        "7^1,8^10,13^1,16^5",
        "7^1,8^10,14^1,15^1,16^4",
        "7^1,8^10,15^3,16^3",
        "8^11,12^1,16^5",
        "8^11,14^2,16^4",
    ];
    ROWS.iter()
        .map(|row| DegreeSequence::parse(row).expect("table rows are well-formed"))
        .collect()
}
