//! Exact toughness by exhaustive cutset search, the t-tough decision, and
//! vertex connectivity. Everything is exact rational arithmetic; a float
//! would blur exactly the distinctions (2/3 versus 0.666...) the theorem
//! hypotheses hinge on.
//!
//! Toughness recognition is coNP-complete, so there is no algorithm to
//! borrow: at desk scale the verification strategy is brute force over all
//! vertex subsets, with two exact prunings. A universal vertex can never be
//! separated from anything, so every cutset contains all universal vertices;
//! and a violating cutset for the t-tough test must satisfy |S| < t*n/(t+1),
//! which caps the subset sizes worth scanning.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order guard for the 2^n cutset searches.
pub const TOUGHNESS_GUARD: usize = 24;

/// Exact non-negative rational in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Rational> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        let sign = if (num < 0) ^ (den < 0) { -1 } else { 1 };
        let (num, den) = (num.abs(), den.abs());
        let g = gcd(num, den).max(1);
        Ok(Rational {
            num: sign * (num / g),
            den: den / g,
        })
    }

    pub fn from_integer(value: i64) -> Rational {
        Rational { num: value, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl std::str::FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer.
    fn from_str(s: &str) -> Result<Rational> {
        let s = s.trim();
        let parse = |txt: &str| {
            txt.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidParameter(format!("bad rational `{s}`")))
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::new(parse(p)?, parse(q)?),
            None => Ok(Rational::from_integer(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Toughness of a connected graph: infinite exactly for complete graphs
/// (K_1 and K_2 have no cutsets at all), otherwise the minimum of
/// |S| / c(G - S) over vertex cutsets, in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ToughnessValue {
    Finite(Rational),
    Infinite,
}

impl ToughnessValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ToughnessValue::Infinite)
    }

    /// `tau(G) >= t`, with Infinite above every rational.
    pub fn at_least(&self, t: Rational) -> bool {
        match self {
            ToughnessValue::Infinite => true,
            ToughnessValue::Finite(v) => *v >= t,
        }
    }
}

impl Ord for ToughnessValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use ToughnessValue::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ToughnessValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for ToughnessValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ToughnessValue::Infinite => write!(f, "inf"),
            ToughnessValue::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for ToughnessValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ToughnessValue", 2)?;
        match self {
            ToughnessValue::Infinite => {
                s.serialize_field("finite", &false)?;
                s.serialize_field("value", "inf")?;
            }
            ToughnessValue::Finite(r) => {
                s.serialize_field("finite", &true)?;
                s.serialize_field("value", &r.to_string())?;
            }
        }
        s.end()
    }
}

fn check_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn check_guard(g: &Graph, what: &'static str) -> Result<()> {
    if g.n() > TOUGHNESS_GUARD {
        return Err(Error::GuardExceeded {
            what,
            n: g.n(),
            guard: TOUGHNESS_GUARD,
        });
    }
    Ok(())
}

/// Even unguarded searches must fit the 64-bit subset masks (and would not
/// terminate anywhere near that anyway).
fn check_searchable(free_vertices: usize) -> Result<()> {
    if free_vertices >= 62 {
        return Err(Error::InvalidParameter(format!(
            "cutset search over 2^{free_vertices} subsets is not representable"
        )));
    }
    Ok(())
}

/// Exact toughness; rejects disconnected graphs (the theorems under test all
/// presume connectivity) and orders above [`TOUGHNESS_GUARD`].
pub fn toughness(g: &Graph) -> Result<ToughnessValue> {
    check_guard(g, "exact toughness")?;
    toughness_unguarded(g)
}

/// [`toughness`] without the order guard; still exponential.
pub fn toughness_unguarded(g: &Graph) -> Result<ToughnessValue> {
    check_connected(g)?;
    if g.is_complete() {
        return Ok(ToughnessValue::Infinite);
    }
    let n = g.n();
    let universal = g.universal_mask();
    let rest: Vec<usize> = (0..n).filter(|&v| universal >> v & 1 == 0).collect();
    check_searchable(rest.len())?;
    let base_size = universal.count_ones() as usize;
    let full = g.vertex_mask();

    // Best ratio |S| / c so far, compared exactly by cross-multiplication.
    let mut best: Option<(u64, u64)> = None;
    let mut sub: u64 = (1 << rest.len()) - 1;
    loop {
        let mut cut = universal;
        let mut bits = sub;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            cut |= 1 << rest[i];
        }
        let size = base_size + sub.count_ones() as usize;
        if size <= n.saturating_sub(2) && (size > 0) {
            let c = g.components_within(full & !cut) as u64;
            if c >= 2 {
                let candidate = (size as u64, c);
                let better = match best {
                    None => true,
                    Some((bs, bc)) => {
                        (candidate.0 as u128) * (bc as u128) < (bs as u128) * (candidate.1 as u128)
                    }
                };
                if better {
                    best = Some(candidate);
                }
            }
        }
        if sub == 0 {
            break;
        }
        sub -= 1;
    }
    let (s, c) = best.expect("connected non-complete graph has a cutset");
    Ok(ToughnessValue::Finite(Rational::new(s as i64, c as i64)?))
}

/// Whether every cutset S satisfies `t * c(G - S) <= |S|`. Scans cutsets in
/// increasing size and stops on the first violation; sizes at or above
/// t*n/(t+1) cannot violate and are skipped.
pub fn is_t_tough(g: &Graph, t: Rational) -> Result<bool> {
    check_guard(g, "t-tough decision")?;
    is_t_tough_unguarded(g, t)
}

/// [`is_t_tough`] without the order guard.
pub fn is_t_tough_unguarded(g: &Graph, t: Rational) -> Result<bool> {
    check_connected(g)?;
    if t.num() <= 0 {
        return Ok(true); // every connected graph is 0-tough
    }
    if g.is_complete() {
        return Ok(true);
    }
    let n = g.n() as i64;
    let universal = g.universal_mask();
    let positions: Vec<usize> = (0..g.n()).filter(|&v| universal >> v & 1 == 0).collect();
    check_searchable(positions.len())?;
    let base = universal.count_ones() as i64;
    let full = g.vertex_mask();

    // A violation t*c > |S| needs |S| < t*n/(t+1) because c <= n - |S|.
    let mut size_cap = 0i64;
    while (size_cap + 1) * (t.num() + t.den()) < t.num() * n {
        size_cap += 1;
    }
    let max_size = size_cap.min(n - 2);
    for size in base.max(1)..=max_size {
        let picks = (size - base) as usize;
        if picks > positions.len() {
            break;
        }
        let mut found_violation = false;
        for_each_combination(positions.len(), picks, &mut |compact| {
            let mut cut = universal;
            let mut bits = compact;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                cut |= 1 << positions[i];
            }
            let c = g.components_within(full & !cut) as i64;
            if c >= 2 && t.num() as i128 * c as i128 > size as i128 * t.den() as i128 {
                found_violation = true;
                return false;
            }
            true
        });
        if found_violation {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimum vertex cut size; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    check_guard(g, "vertex connectivity")?;
    check_connected(g)?;
    if g.is_complete() {
        return Ok(g.n().saturating_sub(1));
    }
    let universal = g.universal_mask();
    let positions: Vec<usize> = (0..g.n()).filter(|&v| universal >> v & 1 == 0).collect();
    check_searchable(positions.len())?;
    let base = universal.count_ones() as usize;
    let full = g.vertex_mask();
    for size in base..=g.n().saturating_sub(2) {
        let mut disconnects = false;
        for_each_combination(positions.len(), size - base, &mut |compact| {
            let mut cut = universal;
            let mut bits = compact;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                cut |= 1 << positions[i];
            }
            if g.components_within(full & !cut) >= 2 {
                disconnects = true;
                return false;
            }
            true
        });
        if disconnects {
            return Ok(size);
        }
    }
    unreachable!("non-complete connected graph has a cutset");
}

/// Calls `f` on every k-subset of `0..n` as a compact bitmask, in increasing
/// mask order (Gosper's hack). Stops early when `f` returns false.
fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit: u64 = 1 << n;
    let mut mask: u64 = (1 << k) - 1;
    while mask < limit {
        if !f(mask) {
            return;
        }
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        if r >= limit || r == 0 {
            return;
        }
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}
