//! Fixed-length cycle detection by anchored backtracking, and the derived
//! notions: cycle spectrum, Hamiltonicity, pancyclicity.
//!
//! Each length is decided by its own search. The anchor is forced to be the
//! minimum-index vertex of the cycle and the walk direction is fixed by
//! requiring the second vertex to precede the closing one, so every cycle is
//! visited through exactly one root. Partial paths are cut when the unvisited
//! region cannot supply the remaining length, when the anchor has no
//! unvisited neighbor left to close through, or when a vertex falls out of
//! the 2-core of the allowed region.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Set of cycle lengths present in a graph (all within `3..=n`).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpectrum {
    n: usize,
    present: BTreeSet<usize>,
}

impl CycleSpectrum {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, length: usize) -> bool {
        self.present.contains(&length)
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.present.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.present.len()
    }

    pub fn is_empty(&self) -> bool {
        self.present.is_empty()
    }

    /// True when every length in `3..=n` is present (requires `n >= 3`).
    pub fn is_full(&self) -> bool {
        self.n >= 3 && self.present.len() == self.n - 2
    }
}

impl std::fmt::Debug for CycleSpectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.present.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// Decides whether `g` contains a simple cycle on exactly `length` vertices.
pub fn has_cycle_of_length(g: &Graph, length: usize) -> Result<bool> {
    let n = g.n();
    if length < 3 || length > n {
        return Err(Error::InvalidParameter(format!(
            "cycle length {length} outside 3..={n}"
        )));
    }
    for anchor in 0..=(n - length) {
        let allowed = g.vertex_mask() & !crate::graph::mask_below(anchor);
        let core = two_core(g, allowed);
        if core >> anchor & 1 == 0 || (core.count_ones() as usize) < length {
            continue;
        }
        if extend_path(g, anchor, anchor, 1 << anchor, 1, length, core, usize::MAX) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Iteratively strips vertices with fewer than two neighbors inside `alive`;
/// cycle vertices always survive this.
fn two_core(g: &Graph, alive: u64) -> u64 {
    let mut core = alive;
    loop {
        let mut next = core;
        let mut scan = core;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if (g.neighbor_mask(v) & core).count_ones() < 2 {
                next &= !(1u64 << v);
            }
        }
        if next == core {
            return core;
        }
        core = next;
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_path(
    g: &Graph,
    anchor: usize,
    current: usize,
    visited: u64,
    depth: usize,
    length: usize,
    core: u64,
    second: usize,
) -> bool {
    if depth == length {
        // Orientation symmetry: only close when the walk entered the cycle
        // on the smaller side.
        return second < current && g.has_edge(current, anchor);
    }
    let unvisited = core & !visited;
    if (unvisited.count_ones() as usize) < length - depth {
        return false;
    }
    if g.neighbor_mask(anchor) & unvisited == 0 {
        return false; // nothing left to close through
    }
    let mut candidates = g.neighbor_mask(current) & unvisited;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let second = if depth == 1 { v } else { second };
        if extend_path(
            g,
            anchor,
            v,
            visited | 1 << v,
            depth + 1,
            length,
            core,
            second,
        ) {
            return true;
        }
    }
    false
}

/// Exact set of cycle lengths present in `g`.
pub fn cycle_spectrum(g: &Graph) -> CycleSpectrum {
    let n = g.n();
    let mut present = BTreeSet::new();
    for length in 3..=n {
        if has_cycle_of_length(g, length).expect("length in range") {
            present.insert(length);
        }
    }
    CycleSpectrum { n, present }
}

/// A simple cycle through all `n` vertices; defined for `n >= 3`.
pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!(
            "Hamiltonicity is defined for n >= 3, got n = {}",
            g.n()
        )));
    }
    has_cycle_of_length(g, g.n())
}

/// Cycles of every length from 3 to `n`; defined for `n >= 3`.
pub fn is_pancyclic(g: &Graph) -> Result<bool> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(format!(
            "pancyclicity is defined for n >= 3, got n = {}",
            g.n()
        )));
    }
    for length in 3..=g.n() {
        if !has_cycle_of_length(g, length)? {
            return Ok(false);
        }
    }
    Ok(true)
}
