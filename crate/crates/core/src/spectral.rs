//! Spectral radii with certified error brackets, the edge-count bounds on
//! both radii, and the threshold formulas that turn edge counts into
//! spectral hypotheses.
//!
//! Both radii come from power iteration on an entrywise nonnegative matrix.
//! For a positive iterate x the true radius always lies between the Rayleigh
//! quotient and the largest component ratio max_i (Mx)_i / x_i, so the
//! stopping rule certifies the returned bracket rather than guessing from
//! successive-iterate distances. The adjacency matrix of a connected
//! bipartite graph has -rho in its spectrum, which stalls plain power
//! iteration; iterating on A + I and shifting back removes the oscillation
//! without changing eigenvectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SplitMix64;

/// Default certification tolerance for the iterative radii.
pub const DEFAULT_TOL: f64 = 1e-9;

const MAX_ITERATIONS: usize = 4_000_000;
const RESEED_PERIOD: usize = 250_000;

/// An eigenvalue estimate with a certified error bound:
/// `|value - true eigenvalue| <= tolerance`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralEstimate {
    pub value: f64,
    pub tolerance: f64,
    pub iterations: usize,
}

/// Largest adjacency eigenvalue of a connected graph, within `tol`.
pub fn adjacency_spectral_radius(g: &Graph, tol: f64) -> Result<SpectralEstimate> {
    check_spectral_input(g, tol)?;
    // Iterate on A + I, shift the certified bracket back by one.
    let shifted = power_iterate(g.n(), tol, |x, y| {
        for v in 0..g.n() {
            let mut acc = x[v];
            let mut nbrs = g.neighbor_mask(v);
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                acc += x[u];
            }
            y[v] = acc;
        }
    });
    Ok(SpectralEstimate {
        value: shifted.value - 1.0,
        ..shifted
    })
}

/// Largest eigenvalue of the signless Laplacian D + A of a connected graph,
/// within `tol`.
pub fn signless_laplacian_radius(g: &Graph, tol: f64) -> Result<SpectralEstimate> {
    check_spectral_input(g, tol)?;
    if g.n() == 1 {
        return Ok(SpectralEstimate {
            value: 0.0,
            tolerance: tol,
            iterations: 0,
        });
    }
    let degrees: Vec<f64> = (0..g.n()).map(|v| g.degree(v) as f64).collect();
    Ok(power_iterate(g.n(), tol, |x, y| {
        for v in 0..g.n() {
            let mut acc = degrees[v] * x[v];
            let mut nbrs = g.neighbor_mask(v);
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                acc += x[u];
            }
            y[v] = acc;
        }
    }))
}

fn check_spectral_input(g: &Graph, tol: f64) -> Result<()> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    if g.n() == 0 {
        return Err(Error::InvalidParameter(
            "empty graph has no spectrum".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Certified power iteration for a nonnegative matrix that maps positive
/// vectors to positive vectors. Deterministic all-ones start; on stagnation
/// the start vector is re-randomized from a fixed seed.
fn power_iterate(n: usize, tol: f64, matvec: impl Fn(&[f64], &mut [f64])) -> SpectralEstimate {
    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    let mut reseed = SplitMix64::new(0x9aec_71f3);
    let mut best: Option<(f64, f64)> = None; // (theta, certified width)
    for iteration in 1..=MAX_ITERATIONS {
        matvec(&x, &mut y);
        let mut hi = f64::NEG_INFINITY;
        let mut dot_xy = 0.0;
        let mut dot_xx = 0.0;
        for v in 0..n {
            hi = hi.max(y[v] / x[v]);
            dot_xy += x[v] * y[v];
            dot_xx += x[v] * x[v];
        }
        // theta <= lambda_max <= hi for positive x.
        let theta = dot_xy / dot_xx;
        let width = hi - theta;
        if best.is_none_or(|(_, bw)| width < bw) {
            best = Some((theta, width));
        }
        if width <= tol {
            return SpectralEstimate {
                value: theta,
                tolerance: tol,
                iterations: iteration,
            };
        }
        if iteration.is_multiple_of(RESEED_PERIOD) {
            for entry in x.iter_mut() {
                *entry = 0.5 + reseed.next_f64();
            }
            continue;
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for v in 0..n {
            x[v] = y[v] / norm;
        }
    }
    // Unreachable for connected graphs at sane tolerances; report the best
    // certified bracket we reached.
    let (theta, width) = best.expect("at least one iteration ran");
    SpectralEstimate {
        value: theta,
        tolerance: width,
        iterations: MAX_ITERATIONS,
    }
}

/// Upper bound `sqrt(2m - n + 1)` on the adjacency spectral radius of a
/// connected (n, m)-graph; tight exactly for K_n and the star.
pub fn rho_edge_bound(n: usize, m: usize) -> Result<f64> {
    if n < 1 || m > n * (n - 1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "not a simple-graph size: n = {n}, m = {m}"
        )));
    }
    let radicand = 2 * m as i64 - n as i64 + 1;
    if radicand < 0 {
        return Err(Error::InvalidParameter(format!(
            "negative radicand 2m - n + 1 = {radicand}"
        )));
    }
    Ok((radicand as f64).sqrt())
}

/// Upper bound `2m/(n-1) + n - 2` on the signless Laplacian radius of a
/// connected (n, m)-graph; tight exactly for K_n and the star.
pub fn q_edge_bound(n: usize, m: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "signless Laplacian bound needs n >= 2, got {n}"
        )));
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "not a simple-graph size: n = {n}, m = {m}"
        )));
    }
    Ok(2.0 * m as f64 / (n as f64 - 1.0) + n as f64 - 2.0)
}

/// Smallest order for which the pancyclicity thresholds are stated, per
/// toughness level t in {1, 2, 3}.
pub fn pancyclicity_floor(t: usize) -> Result<usize> {
    match t {
        1 => Ok(7),
        2 => Ok(16),
        3 => Ok(28),
        _ => Err(Error::InvalidParameter(format!(
            "thresholds are stated for t in {{1, 2, 3}}, got {t}"
        ))),
    }
}

/// Whether the Hamiltonicity spectral threshold is stated at (n, t):
/// n >= 8t for t in {1, 2} and n > 9t for t = 3.
pub fn hamiltonicity_range_ok(n: usize, t: usize) -> Result<bool> {
    match t {
        1 | 2 => Ok(n >= 8 * t),
        3 => Ok(n > 27),
        _ => Err(Error::InvalidParameter(format!(
            "thresholds are stated for t in {{1, 2, 3}}, got {t}"
        ))),
    }
}

/// Edge-count threshold `C(n - 2t, 2) + 3t^2`; a connected t-tough graph
/// meeting it is pancyclic or bipartite for n at or above the stated floor.
pub fn edge_threshold(n: usize, t: usize) -> Result<u64> {
    let floor = pancyclicity_floor(t)?;
    if n < floor {
        return Err(Error::InvalidParameter(format!(
            "edge threshold for t = {t} is only stated for n >= {floor}, got n = {n}"
        )));
    }
    let base = (n - 2 * t) as u64;
    Ok(base * (base - 1) / 2 + 3 * (t as u64) * (t as u64))
}

fn threshold_radicand(n: usize, t: usize, offset: i64) -> Result<i64> {
    if !(1..=3).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "thresholds are stated for t in {{1, 2, 3}}, got {t}"
        )));
    }
    let (n, t) = (n as i64, t as i64);
    Ok(n * n - 4 * t * n - 2 * n + 10 * t * t + 2 * t + offset)
}

/// Adjacency-radius threshold `sqrt(n^2 - 4tn - 2n + 10t^2 + 2t + 1)` for
/// the pancyclic-or-bipartite conclusion.
pub fn rho_threshold(n: usize, t: usize) -> Result<f64> {
    let radicand = threshold_radicand(n, t, 1)?;
    if radicand < 0 {
        return Err(Error::InvalidParameter(format!(
            "negative radicand {radicand} at n = {n}, t = {t}"
        )));
    }
    Ok((radicand as f64).sqrt())
}

/// Adjacency-radius threshold `sqrt(n^2 - 4tn - 2n + 10t^2 + 2t - 1)` for
/// the Hamiltonicity conclusion.
pub fn hamiltonicity_rho_threshold(n: usize, t: usize) -> Result<f64> {
    let radicand = threshold_radicand(n, t, -1)?;
    if radicand < 0 {
        return Err(Error::InvalidParameter(format!(
            "negative radicand {radicand} at n = {n}, t = {t}"
        )));
    }
    Ok((radicand as f64).sqrt())
}

/// Which form of the signless Laplacian threshold to evaluate.
///
/// The printed numerator `2n^2 + 10t^2 - 4tn + 2t - n` exceeds the value the
/// proof's final inequality supports by exactly n^2, which pushes the
/// threshold above the universal bound q(G) <= 2(n-1) and makes the
/// hypothesis unsatisfiable. `Corrected` is the proof-tight form
/// `2 * edge_threshold / (n - 1) + n - 2`. Both are first-class so the
/// discrepancy stays visible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QMode {
    Printed,
    Corrected,
}

impl std::fmt::Display for QMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QMode::Printed => write!(f, "printed"),
            QMode::Corrected => write!(f, "corrected"),
        }
    }
}

/// Signless-Laplacian threshold in the requested form.
pub fn q_threshold(n: usize, t: usize, mode: QMode) -> Result<f64> {
    let floor = pancyclicity_floor(t)?;
    if n < floor {
        return Err(Error::InvalidParameter(format!(
            "q threshold for t = {t} is only stated for n >= {floor}, got n = {n}"
        )));
    }
    match mode {
        QMode::Printed => {
            let (ni, ti) = (n as i64, t as i64);
            let numerator = 2 * ni * ni + 10 * ti * ti - 4 * ti * ni + 2 * ti - ni;
            Ok(numerator as f64 / (n as f64 - 1.0) + n as f64 - 2.0)
        }
        QMode::Corrected => {
            Ok(2.0 * edge_threshold(n, t)? as f64 / (n as f64 - 1.0) + n as f64 - 2.0)
        }
    }
}

/// CSV threshold table: one row per admissible (n, t), columns
/// n, t, edge_threshold, rho_threshold, q_printed, q_corrected.
pub fn thresholds_csv(n_max: usize) -> String {
    let mut out = String::from("n,t,edge_threshold,rho_threshold,q_printed,q_corrected\n");
    for t in 1..=3usize {
        let floor = pancyclicity_floor(t).expect("t in range");
        for n in floor..=n_max {
            let m = edge_threshold(n, t).expect("admissible");
            let rho = rho_threshold(n, t).expect("admissible");
            let qp = q_threshold(n, t, QMode::Printed).expect("admissible");
            let qc = q_threshold(n, t, QMode::Corrected).expect("admissible");
            out.push_str(&format!("{n},{t},{m},{rho:.9},{qp:.9},{qc:.9}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use crate::testutil::random_connected_graph;

    fn rho(g: &Graph) -> f64 {
        adjacency_spectral_radius(g, DEFAULT_TOL).unwrap().value
    }

    fn q(g: &Graph) -> f64 {
        signless_laplacian_radius(g, DEFAULT_TOL).unwrap().value
    }

    #[test]
    fn adjacency_radius_known_values() {
        assert!((rho(&Graph::complete(7)) - 6.0).abs() <= DEFAULT_TOL);
        assert!((rho(&Graph::cycle(8).unwrap()) - 2.0).abs() <= DEFAULT_TOL);
        assert!((rho(&Graph::complete_bipartite(1, 8)) - 8f64.sqrt()).abs() <= DEFAULT_TOL);
        assert!((rho(&Graph::complete(1)) - 0.0).abs() <= DEFAULT_TOL);
    }

    #[test]
    fn signless_laplacian_known_values() {
        assert!((q(&Graph::complete(7)) - 12.0).abs() <= DEFAULT_TOL);
        assert!((q(&Graph::cycle(8).unwrap()) - 4.0).abs() <= DEFAULT_TOL);
        assert!((q(&Graph::complete_bipartite(1, 8)) - 9.0).abs() <= DEFAULT_TOL);
    }

    #[test]
    fn rejects_disconnected_and_bad_tolerance() {
        let two_parts = Graph::matching(2);
        assert_eq!(
            adjacency_spectral_radius(&two_parts, DEFAULT_TOL),
            Err(Error::Disconnected)
        );
        assert_eq!(
            signless_laplacian_radius(&two_parts, DEFAULT_TOL),
            Err(Error::Disconnected)
        );
        assert!(adjacency_spectral_radius(&Graph::complete(3), 0.0).is_err());
    }

    #[test]
    fn estimates_match_dense_eigensolver() {
        fn oracle_radius(matrix: nalgebra::DMatrix<f64>) -> f64 {
            nalgebra::SymmetricEigen::new(matrix)
                .eigenvalues
                .iter()
                .fold(f64::NEG_INFINITY, |a, &b| a.max(b))
        }

        let mut rng = SplitMix64::new(20240917);
        for _ in 0..60 {
            let n = 2 + rng.next_below(11);
            let g = random_connected_graph(n, 0.45, &mut rng);
            let mut a = nalgebra::DMatrix::zeros(n, n);
            let mut sq = nalgebra::DMatrix::zeros(n, n);
            for (u, v) in g.edges() {
                a[(u, v)] = 1.0;
                a[(v, u)] = 1.0;
                sq[(u, v)] = 1.0;
                sq[(v, u)] = 1.0;
            }
            for v in 0..n {
                sq[(v, v)] = g.degree(v) as f64;
            }
            assert!((rho(&g) - oracle_radius(a)).abs() <= 1e-8);
            assert!((q(&g) - oracle_radius(sq)).abs() <= 1e-8);
        }
    }

    #[test]
    fn edge_bounds_and_equality_cases() {
        for n in 2..=8usize {
            let kn = Graph::complete(n);
            let bound = rho_edge_bound(n, kn.edge_count()).unwrap();
            assert!((bound - (n as f64 - 1.0)).abs() < 1e-12);
            assert!((rho(&kn) - bound).abs() <= 1e-8);

            let star = Graph::complete_bipartite(1, n - 1);
            let bound = rho_edge_bound(n, star.edge_count()).unwrap();
            assert!((rho(&star) - bound).abs() <= 1e-8);

            let qb = q_edge_bound(n, kn.edge_count()).unwrap();
            assert!((qb - (2 * n - 2) as f64).abs() < 1e-12);
            assert!((q(&kn) - qb).abs() <= 1e-8);
            let qb = q_edge_bound(n, star.edge_count()).unwrap();
            assert!((qb - n as f64).abs() < 1e-12);
            assert!((q(&star) - qb).abs() <= 1e-8);
        }

        let c5 = Graph::cycle(5).unwrap();
        let bound = rho_edge_bound(5, 5).unwrap();
        assert!((bound - 6f64.sqrt()).abs() < 1e-12);
        assert!(rho(&c5) < bound - 0.4);

        let c6_bound = q_edge_bound(6, 6).unwrap();
        assert!((c6_bound - 6.4).abs() < 1e-12);
        assert!(q(&Graph::cycle(6).unwrap()) < c6_bound - 2.0);

        assert!(rho_edge_bound(4, 1).is_err()); // 2m - n + 1 < 0
        assert!(q_edge_bound(1, 0).is_err());
    }

    #[test]
    fn edge_threshold_values() {
        assert_eq!(edge_threshold(7, 1).unwrap(), 13);
        assert_eq!(edge_threshold(17, 2).unwrap(), 90);
        assert_eq!(edge_threshold(29, 3).unwrap(), 280);
        assert!(edge_threshold(6, 1).is_err());
        assert!(edge_threshold(15, 2).is_err());
        assert!(edge_threshold(27, 3).is_err());
        assert!(edge_threshold(100, 4).is_err());
    }

    #[test]
    fn rho_threshold_values_and_identities() {
        assert!((rho_threshold(7, 1).unwrap() - 20f64.sqrt()).abs() < 1e-12);
        for t in 1..=3usize {
            let floor = pancyclicity_floor(t).unwrap();
            for n in floor..=500 {
                // rho_threshold^2 = 2 * edge_threshold - n + 1, as integers.
                let radicand = threshold_radicand(n, t, 1).unwrap();
                assert_eq!(
                    radicand,
                    2 * edge_threshold(n, t).unwrap() as i64 - n as i64 + 1
                );
                // The two adjacency thresholds differ by 2 under the square.
                let ham = threshold_radicand(n, t, -1).unwrap();
                assert_eq!(radicand - ham, 2);
            }
        }
    }

    #[test]
    fn hamiltonicity_range_clauses() {
        assert!(hamiltonicity_range_ok(8, 1).unwrap());
        assert!(!hamiltonicity_range_ok(7, 1).unwrap());
        assert!(hamiltonicity_range_ok(16, 2).unwrap());
        assert!(!hamiltonicity_range_ok(27, 3).unwrap()); // strict for t = 3
        assert!(hamiltonicity_range_ok(28, 3).unwrap());
    }

    #[test]
    fn q_threshold_forms() {
        assert!((q_threshold(7, 1, QMode::Printed).unwrap() - 17.5).abs() < 1e-12);
        let corrected = q_threshold(7, 1, QMode::Corrected).unwrap();
        assert!((corrected - (26.0 / 6.0 + 5.0)).abs() < 1e-12);

        for t in 1..=3usize {
            let floor = pancyclicity_floor(t).unwrap();
            for n in floor..=1000 {
                let (ni, ti) = (n as i64, t as i64);
                let printed_numerator = 2 * ni * ni + 10 * ti * ti - 4 * ti * ni + 2 * ti - ni;
                // printed - corrected = n^2 / (n - 1): the numerators differ
                // by exactly n^2.
                assert_eq!(
                    printed_numerator - 2 * edge_threshold(n, t).unwrap() as i64,
                    ni * ni
                );
                // Vacuity of the printed form: it exceeds the universal bound
                // 2(n - 1) >= q(G); equivalently n^2 - 4tn + 10t^2 + 2t > 0.
                assert!(ni * ni - 4 * ti * ni + 10 * ti * ti + 2 * ti > 0);
                let printed = q_threshold(n, t, QMode::Printed).unwrap();
                assert!(printed > 2.0 * (n as f64 - 1.0));
            }
        }
    }

    #[test]
    fn csv_table_shape() {
        let csv = thresholds_csv(20);
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,t,edge_threshold,rho_threshold,q_printed,q_corrected"
        );
        // t=1 contributes 14 rows (7..=20), t=2 contributes 5, t=3 none.
        assert_eq!(csv.lines().count(), 1 + 14 + 5);
        assert!(csv.lines().any(|l| l.starts_with("7,1,13,")));
    }
}
