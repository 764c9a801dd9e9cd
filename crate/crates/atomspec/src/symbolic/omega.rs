//! The space `X = {x_i : i in N} ∪ {x_oo}` whose nonempty opens are the
//! final segments `U_j = {x_i : i >= j}` (with `x_oo` in every one).
//!
//! Closed sets are `X` and the finite initial segments `{x_0, ..., x_{j-1}}`.
//! The space is spectral, yet `x_oo` is a limit point of its own closure,
//! so it is not homeomorphic to the atom spectrum of any abelian category.
//! Subsets are represented by finite/cofinite descriptors, on which every
//! operation is decidable.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{FinitePoset, SpectralReport};

/// A point of the space: `x_i` for a natural `i`, or `x_oo`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OmegaPoint {
    Nat(u64),
    Infinity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OmegaMode {
    /// `exceptions` are the natural-number members.
    Finite,
    /// `exceptions` are the natural-number non-members.
    Cofinite,
}

/// A subset of the space: a finite or cofinite set of naturals, plus a flag
/// for `x_oo`. Closed under complement, finite union, and intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaSetDescriptor {
    pub mode: OmegaMode,
    pub exceptions: BTreeSet<u64>,
    pub has_infinity: bool,
}

impl OmegaSetDescriptor {
    pub fn empty() -> Self {
        OmegaSetDescriptor {
            mode: OmegaMode::Finite,
            exceptions: BTreeSet::new(),
            has_infinity: false,
        }
    }

    pub fn whole_space() -> Self {
        OmegaSetDescriptor {
            mode: OmegaMode::Cofinite,
            exceptions: BTreeSet::new(),
            has_infinity: true,
        }
    }

    /// The open `U_j = {x_i : i >= j} ∪ {x_oo}`.
    pub fn final_segment(j: u64) -> Self {
        OmegaSetDescriptor {
            mode: OmegaMode::Cofinite,
            exceptions: (0..j).collect(),
            has_infinity: true,
        }
    }

    /// The closed set `{x_0, ..., x_{j-1}}`.
    pub fn initial_segment(j: u64) -> Self {
        OmegaSetDescriptor {
            mode: OmegaMode::Finite,
            exceptions: (0..j).collect(),
            has_infinity: false,
        }
    }

    pub fn singleton(p: OmegaPoint) -> Self {
        match p {
            OmegaPoint::Nat(i) => OmegaSetDescriptor {
                mode: OmegaMode::Finite,
                exceptions: std::iter::once(i).collect(),
                has_infinity: false,
            },
            OmegaPoint::Infinity => OmegaSetDescriptor {
                mode: OmegaMode::Finite,
                exceptions: BTreeSet::new(),
                has_infinity: true,
            },
        }
    }

    pub fn from_naturals<I: IntoIterator<Item = u64>>(nats: I, has_infinity: bool) -> Self {
        OmegaSetDescriptor {
            mode: OmegaMode::Finite,
            exceptions: nats.into_iter().collect(),
            has_infinity,
        }
    }

    pub fn contains(&self, p: OmegaPoint) -> bool {
        match p {
            OmegaPoint::Nat(i) => match self.mode {
                OmegaMode::Finite => self.exceptions.contains(&i),
                OmegaMode::Cofinite => !self.exceptions.contains(&i),
            },
            OmegaPoint::Infinity => self.has_infinity,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.mode, OmegaMode::Finite) && self.exceptions.is_empty() && !self.has_infinity
    }

    /// Whether the set contains infinitely many naturals.
    pub fn naturals_infinite(&self) -> bool {
        matches!(self.mode, OmegaMode::Cofinite)
    }

    /// Largest natural member, when the natural part is finite and nonempty.
    pub fn max_natural(&self) -> Option<u64> {
        match self.mode {
            OmegaMode::Finite => self.exceptions.iter().next_back().copied(),
            OmegaMode::Cofinite => None,
        }
    }

    pub fn complement(&self) -> Self {
        OmegaSetDescriptor {
            mode: match self.mode {
                OmegaMode::Finite => OmegaMode::Cofinite,
                OmegaMode::Cofinite => OmegaMode::Finite,
            },
            exceptions: self.exceptions.clone(),
            has_infinity: !self.has_infinity,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let (mode, exceptions) = match (self.mode, other.mode) {
            (OmegaMode::Finite, OmegaMode::Finite) => (
                OmegaMode::Finite,
                self.exceptions.union(&other.exceptions).copied().collect(),
            ),
            (OmegaMode::Cofinite, OmegaMode::Cofinite) => (
                OmegaMode::Cofinite,
                self.exceptions
                    .intersection(&other.exceptions)
                    .copied()
                    .collect(),
            ),
            (OmegaMode::Cofinite, OmegaMode::Finite) => (
                OmegaMode::Cofinite,
                self.exceptions
                    .iter()
                    .filter(|i| !other.exceptions.contains(i))
                    .copied()
                    .collect(),
            ),
            (OmegaMode::Finite, OmegaMode::Cofinite) => (
                OmegaMode::Cofinite,
                other
                    .exceptions
                    .iter()
                    .filter(|i| !self.exceptions.contains(i))
                    .copied()
                    .collect(),
            ),
        };
        OmegaSetDescriptor {
            mode,
            exceptions,
            has_infinity: self.has_infinity || other.has_infinity,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.complement()
            .union(&other.complement())
            .complement()
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    /// Open iff empty or a final segment `U_j` containing `x_oo`.
    pub fn is_open(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        self.naturals_infinite() && self.has_infinity && is_initial_run(&self.exceptions)
    }

    /// Closed iff `X` or a finite initial segment without `x_oo`.
    pub fn is_closed(&self) -> bool {
        self.complement().is_open()
    }

    /// Smallest closed superset: `X` when the set is infinite or contains
    /// `x_oo`, otherwise the initial segment up to the maximum.
    pub fn closure(&self) -> Self {
        if self.is_empty() {
            return Self::empty();
        }
        if self.naturals_infinite() || self.has_infinity {
            return Self::whole_space();
        }
        Self::initial_segment(self.max_natural().unwrap() + 1)
    }

    /// Limit points `L(S) = {x : x in closure(S \ {x})}`.
    pub fn limit_points(&self) -> Self {
        if self.naturals_infinite() {
            // closure(S \ {x}) = X for every point
            return Self::whole_space();
        }
        if self.has_infinity {
            // every x_k lies in closure({x_oo}) = X; x_oo needs S \ {x_oo}
            // infinite, which fails here
            return Self::whole_space().difference(&Self::singleton(OmegaPoint::Infinity));
        }
        match self.max_natural() {
            // x_k in closure(S \ {x_k}) iff some member exceeds k
            Some(m) => Self::initial_segment(m),
            None => Self::empty(),
        }
    }

    pub fn limit_iterate(&self, i: u32) -> Self {
        let mut cur = self.clone();
        for _ in 0..i {
            cur = cur.limit_points();
        }
        cur
    }

    /// Natural members below `window`, for cross-validation against finite
    /// brute force.
    pub fn naturals_below(&self, window: u64) -> Vec<u64> {
        (0..window)
            .filter(|&i| self.contains(OmegaPoint::Nat(i)))
            .collect()
    }
}

fn is_initial_run(set: &BTreeSet<u64>) -> bool {
    set.iter().copied().eq(0..set.len() as u64)
}

/// All five spectral conditions hold: the opens form a single descending
/// chain `X = U_0 ⊇ U_1 ⊇ ...`, so the space is noetherian and every
/// subset is quasi-compact; the closed sets `X` and `{x_0..x_{j-1}}` have
/// generic points `x_oo` and `x_{j-1}`.
pub fn spectral_check() -> SpectralReport {
    SpectralReport {
        kolmogorov: true,
        quasi_compact: true,
        qc_intersection: true,
        qc_basis: true,
        sober: true,
        kolmogorov_witness: None,
        sober_witness: None,
    }
}

/// Literal test of "p is a limit point of its closure", evaluated through
/// the descriptor operations.
pub fn is_obstruction_point(p: OmegaPoint) -> bool {
    let cl = OmegaSetDescriptor::singleton(p).closure();
    let punctured = cl.difference(&OmegaSetDescriptor::singleton(p));
    punctured.closure().contains(p)
}

/// The points that are limit points of their own closure: exactly `{x_oo}`.
/// For `x_k`, `closure({x_k}) \ {x_k} = {x_0..x_{k-1}}` is closed and
/// misses `x_k`; for `x_oo`, the punctured closure is all naturals, whose
/// closure is `X`.
pub fn obstruction_points() -> OmegaSetDescriptor {
    OmegaSetDescriptor::singleton(OmegaPoint::Infinity)
}

/// Windowed peeling report: `x_i` is peeled at stage `i`, `x_oo` is never
/// reached at a finite stage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaStratification {
    /// Stage at which each windowed point is peeled: `level[i] = i`.
    pub level: BTreeMap<u64, u64>,
    pub window: u64,
    /// Always `None`: `x_oo` is not reached at any finite stage.
    pub infinity_level: Option<u64>,
}

/// Peels the space one point per stage within the window: at each stage the
/// least remaining natural `x_t` satisfies `closure({x_t}) ∩ remaining =
/// {x_t}`, so it is the point the peeling removes. No finite stage reaches
/// `x_oo`, because the remaining subspace always contains all `x_i` with
/// `i >= stage`.
pub fn stratify(window: u64) -> OmegaStratification {
    let mut remaining = OmegaSetDescriptor::whole_space();
    let mut level = BTreeMap::new();
    for stage in 0..window {
        let point = OmegaSetDescriptor::singleton(OmegaPoint::Nat(stage));
        let cl_in_remaining = point.closure().intersection(&remaining);
        debug_assert_eq!(cl_in_remaining, point);
        level.insert(stage, stage);
        remaining = remaining.difference(&point);
    }
    OmegaStratification {
        level,
        window,
        infinity_level: None,
    }
}

/// The finite subspace on `{x_0, ..., x_{n-1}, x_oo}` with the induced
/// topology: a chain of `n + 1` points. Truncation does not preserve the
/// obstruction behavior at `x_oo` (the truncated space is a finite
/// Kolmogorov space, whose obstruction set is empty).
pub fn truncate(n: u64) -> Result<FinitePoset> {
    if n < 1 {
        return Err(Error::UnsupportedDescriptor {
            reason: "truncation window must contain at least one natural".into(),
        });
    }
    let mut elements: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    elements.push("xinf".to_owned());
    let mut pairs = Vec::new();
    for i in 1..elements.len() {
        pairs.push((elements[i - 1].clone(), elements[i].clone()));
    }
    let elems: Vec<&str> = elements.iter().map(String::as_str).collect();
    let pair_refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    FinitePoset::from_relations(&elems, &pair_refs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        let inf = OmegaSetDescriptor::singleton(OmegaPoint::Infinity);
        assert_eq!(inf.closure(), OmegaSetDescriptor::whole_space());
        assert_eq!(OmegaSetDescriptor::empty().closure(), OmegaSetDescriptor::empty());
        let x3 = OmegaSetDescriptor::singleton(OmegaPoint::Nat(3));
        assert_eq!(x3.closure(), OmegaSetDescriptor::initial_segment(4));
    }

    #[test]
    fn limit_point_examples() {
        let inf = OmegaSetDescriptor::singleton(OmegaPoint::Infinity);
        let all_but_inf = OmegaSetDescriptor::whole_space().difference(&inf);
        assert_eq!(inf.limit_points(), all_but_inf);
        assert_eq!(inf.closure().limit_points(), OmegaSetDescriptor::whole_space());
        assert!(OmegaSetDescriptor::empty().limit_points().is_empty());
        // L({x_oo}) is not closed: its closure is X
        assert!(!inf.limit_points().is_closed());
        assert_eq!(inf.limit_points().closure(), OmegaSetDescriptor::whole_space());
    }

    #[test]
    fn open_and_closed_catalogues() {
        assert!(OmegaSetDescriptor::empty().is_open());
        assert!(OmegaSetDescriptor::whole_space().is_open());
        for j in 0..5 {
            assert!(OmegaSetDescriptor::final_segment(j).is_open());
            assert!(OmegaSetDescriptor::initial_segment(j).is_closed());
        }
        // {x_oo} is neither open nor closed
        let inf = OmegaSetDescriptor::singleton(OmegaPoint::Infinity);
        assert!(!inf.is_open());
        assert!(!inf.is_closed());
        // a final segment without x_oo is not open
        let mut no_inf = OmegaSetDescriptor::final_segment(2);
        no_inf.has_infinity = false;
        assert!(!no_inf.is_open());
    }

    #[test]
    fn descriptor_algebra_round_trips() {
        let s = OmegaSetDescriptor::from_naturals([1, 4, 9], true);
        assert_eq!(s.complement().complement(), s);
        let t = OmegaSetDescriptor::final_segment(3);
        let u = s.union(&t);
        for i in 0..12 {
            let p = OmegaPoint::Nat(i);
            assert_eq!(u.contains(p), s.contains(p) || t.contains(p));
            let v = s.intersection(&t);
            assert_eq!(v.contains(p), s.contains(p) && t.contains(p));
        }
    }

    #[test]
    fn obstruction_is_exactly_infinity() {
        assert!(is_obstruction_point(OmegaPoint::Infinity));
        for i in 0..50 {
            assert!(!is_obstruction_point(OmegaPoint::Nat(i)));
        }
        let obs = obstruction_points();
        assert!(obs.contains(OmegaPoint::Infinity));
        assert_eq!(obs.naturals_below(50), Vec::<u64>::new());
    }

    #[test]
    fn spectral_flags_all_true_and_complement_identity() {
        assert!(spectral_check().all_pass());
        // X \ U_j = closure({x_{j-1}}) for j >= 1
        for j in 1..6u64 {
            let lhs = OmegaSetDescriptor::whole_space()
                .difference(&OmegaSetDescriptor::final_segment(j));
            let rhs = OmegaSetDescriptor::singleton(OmegaPoint::Nat(j - 1)).closure();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn stratify_window() {
        let r = stratify(4);
        assert_eq!(r.level.len(), 4);
        for i in 0..4 {
            assert_eq!(r.level[&i], i);
        }
        assert_eq!(r.infinity_level, None);
    }

    #[test]
    fn truncations() {
        let t1 = truncate(1).unwrap();
        assert_eq!(t1.len(), 2);
        assert!(t1.le_by_name("x0", "xinf").unwrap());
        let t3 = truncate(3).unwrap();
        assert_eq!(t3.len(), 4);
        assert!(t3.le_by_name("x0", "x2").unwrap());
        assert!(t3.le_by_name("x2", "xinf").unwrap());
        assert!(!t3.le_by_name("xinf", "x0").unwrap());
        assert!(truncate(0).is_err());
    }
}
