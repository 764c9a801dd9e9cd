//! The atom spectrum of graded `k[x]`: points `s_i` for `i` in `Z` (the
//! shifted simples) and one generic point `g` (the class of `k[x]` itself).
//!
//! A subset is open iff it misses `g`, or it contains `g` together with a
//! whole down-ray `{s_i : i <= i_0}`. Consequently the closed sets are the
//! sets containing `g` plus the `g`-free sets bounded below, and the only
//! possible limit point of any subset is `g`.
//!
//! Integer parts of subsets are represented as a base shape (empty, a
//! down-ray, an up-ray, or all of `Z`) with finite corrections, which is
//! closed under complement, finite union, and finite intersection.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{FinitePoset, SpectralReport};

/// A point of the space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GradedPoint {
    /// The atom of the shifted simple `S(i)`.
    Simple(i64),
    /// The generic point, the atom of `k[x]`.
    Generic,
}

/// Base shape of the integer part of a descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GradedBase {
    Empty,
    /// `{i : i <= a}`
    DownRay(i64),
    /// `{i : i >= b}`
    UpRay(i64),
    AllIntegers,
}

impl GradedBase {
    fn contains(self, i: i64) -> bool {
        match self {
            GradedBase::Empty => false,
            GradedBase::DownRay(a) => i <= a,
            GradedBase::UpRay(b) => i >= b,
            GradedBase::AllIntegers => true,
        }
    }

    fn unbounded_below(self) -> bool {
        matches!(self, GradedBase::DownRay(_) | GradedBase::AllIntegers)
    }

    fn unbounded_above(self) -> bool {
        matches!(self, GradedBase::UpRay(_) | GradedBase::AllIntegers)
    }
}

/// A subset of the space: integer part `(base ∪ added) \ removed` plus the
/// `has_g` flag. Stored canonically; construct through [`GradedSetDescriptor::new`]
/// or the named constructors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSetDescriptor {
    pub base: GradedBase,
    pub added: BTreeSet<i64>,
    pub removed: BTreeSet<i64>,
    pub has_g: bool,
}

impl GradedSetDescriptor {
    /// Validates the descriptor invariants and puts the integer part in
    /// canonical form (base matches the tail behavior exactly, corrections
    /// are minimal).
    pub fn new(
        base: GradedBase,
        added: BTreeSet<i64>,
        removed: BTreeSet<i64>,
        has_g: bool,
    ) -> Result<Self> {
        if let Some(i) = added.intersection(&removed).next() {
            return Err(Error::UnsupportedDescriptor {
                reason: format!("{i} is both added and removed"),
            });
        }
        if let Some(i) = added.iter().find(|&&i| base.contains(i)) {
            return Err(Error::UnsupportedDescriptor {
                reason: format!("added element {i} already lies in the base"),
            });
        }
        if let Some(i) = removed.iter().find(|&&i| !base.contains(i)) {
            return Err(Error::UnsupportedDescriptor {
                reason: format!("removed element {i} does not lie in the base"),
            });
        }
        Ok(Self::canonical(
            |i| (base.contains(i) && !removed.contains(&i)) || added.contains(&i),
            base.unbounded_below(),
            base.unbounded_above(),
            window_bounds(base, &added, &removed),
            has_g,
        ))
    }

    /// Rebuilds a canonical descriptor from a membership function that is
    /// constant (per the tail flags) outside `[lo, hi]`.
    fn canonical(
        member: impl Fn(i64) -> bool,
        unbounded_below: bool,
        unbounded_above: bool,
        window: (i64, i64),
        has_g: bool,
    ) -> Self {
        let (lo, hi) = window;
        let in_window = |i: i64| (lo..=hi).contains(&i);
        let base = match (unbounded_below, unbounded_above) {
            (true, true) => GradedBase::AllIntegers,
            (true, false) => {
                // max member is in the window (the tail above is out)
                let top = (lo..=hi).rev().find(|&i| member(i)).unwrap_or(lo - 1);
                GradedBase::DownRay(top)
            }
            (false, true) => {
                let bottom = (lo..=hi).find(|&i| member(i)).unwrap_or(hi + 1);
                GradedBase::UpRay(bottom)
            }
            (false, false) => GradedBase::Empty,
        };
        let mut added = BTreeSet::new();
        let mut removed = BTreeSet::new();
        for i in lo..=hi {
            match (member(i), base.contains(i)) {
                (true, false) => {
                    added.insert(i);
                }
                (false, true) => {
                    removed.insert(i);
                }
                _ => {}
            }
        }
        debug_assert!(in_window(lo));
        GradedSetDescriptor {
            base,
            added,
            removed,
            has_g,
        }
    }

    pub fn empty() -> Self {
        GradedSetDescriptor {
            base: GradedBase::Empty,
            added: BTreeSet::new(),
            removed: BTreeSet::new(),
            has_g: false,
        }
    }

    pub fn whole_space() -> Self {
        GradedSetDescriptor {
            base: GradedBase::AllIntegers,
            added: BTreeSet::new(),
            removed: BTreeSet::new(),
            has_g: true,
        }
    }

    /// All simples, no generic point.
    pub fn all_simples() -> Self {
        GradedSetDescriptor {
            base: GradedBase::AllIntegers,
            added: BTreeSet::new(),
            removed: BTreeSet::new(),
            has_g: false,
        }
    }

    pub fn singleton(p: GradedPoint) -> Self {
        match p {
            GradedPoint::Simple(i) => GradedSetDescriptor {
                base: GradedBase::Empty,
                added: std::iter::once(i).collect(),
                removed: BTreeSet::new(),
                has_g: false,
            },
            GradedPoint::Generic => GradedSetDescriptor {
                base: GradedBase::Empty,
                added: BTreeSet::new(),
                removed: BTreeSet::new(),
                has_g: true,
            },
        }
    }

    /// `{s_i : i <= a}`, optionally with `g`.
    pub fn down_ray(a: i64, has_g: bool) -> Self {
        GradedSetDescriptor {
            base: GradedBase::DownRay(a),
            added: BTreeSet::new(),
            removed: BTreeSet::new(),
            has_g,
        }
    }

    /// `{s_i : i >= b}`, optionally with `g`.
    pub fn up_ray(b: i64, has_g: bool) -> Self {
        GradedSetDescriptor {
            base: GradedBase::UpRay(b),
            added: BTreeSet::new(),
            removed: BTreeSet::new(),
            has_g,
        }
    }

    pub fn contains(&self, p: GradedPoint) -> bool {
        match p {
            GradedPoint::Simple(i) => {
                (self.base.contains(i) && !self.removed.contains(&i)) || self.added.contains(&i)
            }
            GradedPoint::Generic => self.has_g,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.base == GradedBase::Empty && self.added.is_empty() && !self.has_g
    }

    /// The integer part contains arbitrarily small indices.
    pub fn unbounded_below(&self) -> bool {
        self.base.unbounded_below()
    }

    /// The integer part contains a whole down-ray `{i : i <= i_0}`.
    /// Since corrections are finite, this coincides with being unbounded
    /// below.
    pub fn contains_down_ray(&self) -> bool {
        self.unbounded_below()
    }

    pub fn unbounded_above(&self) -> bool {
        self.base.unbounded_above()
    }

    fn window(&self) -> (i64, i64) {
        window_bounds(self.base, &self.added, &self.removed)
    }

    pub fn complement(&self) -> Self {
        let (lo, hi) = self.window();
        Self::canonical(
            |i| !self.contains(GradedPoint::Simple(i)),
            !self.unbounded_below(),
            !self.unbounded_above(),
            (lo, hi),
            !self.has_g,
        )
    }

    pub fn union(&self, other: &Self) -> Self {
        let w = merge_windows(self.window(), other.window());
        Self::canonical(
            |i| self.contains(GradedPoint::Simple(i)) || other.contains(GradedPoint::Simple(i)),
            self.unbounded_below() || other.unbounded_below(),
            self.unbounded_above() || other.unbounded_above(),
            w,
            self.has_g || other.has_g,
        )
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let w = merge_windows(self.window(), other.window());
        Self::canonical(
            |i| self.contains(GradedPoint::Simple(i)) && other.contains(GradedPoint::Simple(i)),
            self.unbounded_below() && other.unbounded_below(),
            self.unbounded_above() && other.unbounded_above(),
            w,
            self.has_g && other.has_g,
        )
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    /// Open iff `g` is absent, or `g` is present and the integer part
    /// contains a down-ray.
    pub fn is_open(&self) -> bool {
        !self.has_g || self.contains_down_ray()
    }

    /// Closed iff `g` is present, or the (g-free) integer part is bounded
    /// below.
    pub fn is_closed(&self) -> bool {
        self.complement().is_open()
    }

    /// Closure adds `g` exactly when the integer part is unbounded below.
    pub fn closure(&self) -> Self {
        let mut cl = self.clone();
        if self.unbounded_below() {
            cl.has_g = true;
        }
        cl
    }

    /// `L(S) ⊆ {g}`, with `g` a limit point iff `S \ {g}` is unbounded
    /// below. No `s_i` is ever a limit point: closure only ever adds `g`.
    pub fn limit_points(&self) -> Self {
        if self.unbounded_below() {
            Self::singleton(GradedPoint::Generic)
        } else {
            Self::empty()
        }
    }

    /// Members with index in `[lo, hi]`, for windowed cross-validation.
    pub fn simples_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi)
            .filter(|&i| self.contains(GradedPoint::Simple(i)))
            .collect()
    }
}

fn window_bounds(base: GradedBase, added: &BTreeSet<i64>, removed: &BTreeSet<i64>) -> (i64, i64) {
    let mut boundary: Vec<i64> = added.iter().chain(removed.iter()).copied().collect();
    match base {
        GradedBase::DownRay(a) => boundary.push(a),
        GradedBase::UpRay(b) => boundary.push(b),
        _ => {}
    }
    if boundary.is_empty() {
        (0, 0)
    } else {
        (
            boundary.iter().min().unwrap() - 1,
            boundary.iter().max().unwrap() + 1,
        )
    }
}

fn merge_windows(a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    (a.0.min(b.0), a.1.max(b.1))
}

/// Krull-Gabriel stratification: each `{s_i}` is open in the whole space,
/// so every simple has level 0; the remaining subspace is `{g}`, so `g`
/// has level 1 and the space dimension is 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedStratification {
    pub simple_level: u32,
    pub generic_level: u32,
    pub space_dim: u32,
}

pub fn stratify() -> GradedStratification {
    // literal check of the two openness facts behind the levels
    debug_assert!(GradedSetDescriptor::singleton(GradedPoint::Simple(0)).is_open());
    debug_assert!(!GradedSetDescriptor::singleton(GradedPoint::Generic).is_open());
    GradedStratification {
        simple_level: 0,
        generic_level: 1,
        space_dim: 1,
    }
}

/// Every irreducible closed subset is a singleton (`{s_i}` and `{g}` are
/// closed, and any closed set with a second point splits off a closed
/// singleton), so the chain dimension of the space is 0.
pub fn chain_dimension() -> u32 {
    0
}

/// The space is Kolmogorov (even T1: all singletons are closed) and sober,
/// its quasi-compact opens are closed under intersection and form a basis,
/// but the whole space is not quasi-compact: the opens
/// `V_n = {s_i : i <= n} ∪ {g}` cover `X` with no finite subcover.
pub fn spectral_check() -> SpectralReport {
    SpectralReport {
        kolmogorov: true,
        quasi_compact: false,
        qc_intersection: true,
        qc_basis: true,
        sober: true,
        kolmogorov_witness: None,
        sober_witness: None,
    }
}

/// No point is a limit point of its closure: every singleton is closed.
pub fn obstruction_points() -> GradedSetDescriptor {
    GradedSetDescriptor::empty()
}

/// The finite window `{s_lo, ..., s_hi, g}` with the open-set criterion
/// read relative to the window: a set containing `g` is open iff it
/// contains the window's lower edge run, i.e. `s_lo`. As a poset this is
/// `g < s_lo` with all other simples incomparable. Truncation does not
/// preserve the closed-point structure of the infinite space (there
/// `{s_lo}` is closed; in the window its closure picks up `g`).
pub fn truncate(lo: i64, hi: i64) -> Result<FinitePoset> {
    if lo > hi {
        return Err(Error::UnsupportedDescriptor {
            reason: format!("invalid window [{lo}, {hi}]"),
        });
    }
    let mut elements: Vec<String> = (lo..=hi).map(|i| format!("s({i})")).collect();
    elements.push("g".to_owned());
    let pairs = [("g".to_owned(), format!("s({lo})"))];
    let elems: Vec<&str> = elements.iter().map(String::as_str).collect();
    let pair_refs: Vec<(&str, &str)> = pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    FinitePoset::from_relations(&elems, &pair_refs)
}
