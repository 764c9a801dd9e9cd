//! The Ext^1-vanishing classification of open subsets (the opens whose
//! localizing subcategories are closed under injective envelopes) and the
//! dimension calculus on atoms: Const/Epi sets, projective dimensions,
//! global dimension, and the containment and bound theorems as checkable
//! properties.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ExtValue, FiniteModel, GradedKxModel};
use crate::poset::PointSubset;
use crate::symbolic::graded::{GradedPoint, GradedSetDescriptor};

/// A dimension search bounded by a degree cap: exact when resolved below
/// the cap (or the model is hereditary), otherwise only a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DimValue {
    Exact(u32),
    AtLeast { at_least: u32 },
}

impl DimValue {
    pub fn lower_bound(self) -> u32 {
        match self {
            DimValue::Exact(d) => d,
            DimValue::AtLeast { at_least } => at_least,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, DimValue::Exact(_))
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Exact(d) => write!(f, "{d}"),
            DimValue::AtLeast { at_least } => write!(f, ">= {at_least}"),
        }
    }
}

pub const DEFAULT_DEGREE_CAP: u32 = 4;

fn subset_key(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

fn subcategory_label(names: &[String]) -> String {
    format!("ASupp^-1({})", subset_key(names))
}

/// Enumerated classification over a finite model: the qualifying opens in
/// deterministic order, with subcategory labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumeratedClassification {
    pub qualifying: Vec<Vec<String>>,
    pub labels: BTreeMap<String, String>,
}

/// Whether the open `phi` satisfies the classification condition:
/// `ext(1, alpha, beta) = 0` for every `alpha` outside and `beta` inside.
/// Errors if the test would consult a symbolic entry (never happens for
/// the built-in families, where the consulted pairs are always distinct
/// atoms).
pub fn open_qualifies(model: &FiniteModel, phi: &PointSubset) -> Result<bool> {
    let n = model.atom_count();
    for alpha in 0..n {
        if phi.contains(alpha) {
            continue;
        }
        for beta in phi.iter() {
            let entry = model.ext_known(1, alpha, beta)?;
            if entry.is_nonzero() == Some(true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All open subsets satisfying the Ext^1 condition, enumerated.
pub fn qualifying_opens(model: &FiniteModel, size_cap: usize) -> Result<EnumeratedClassification> {
    let space = model.space();
    let mut qualifying = Vec::new();
    for open in space.enumerate_opens(size_cap)? {
        if open_qualifies(model, &open)? {
            qualifying.push(open);
        }
    }
    space.sort_deterministic(&mut qualifying);
    let qualifying: Vec<Vec<String>> = qualifying.iter().map(|s| space.names(s)).collect();
    let labels = qualifying
        .iter()
        .map(|names| (subset_key(names), subcategory_label(names)))
        .collect();
    Ok(EnumeratedClassification { qualifying, labels })
}

/// Literal brute force over the whole subset lattice: openness via the
/// closure of the complement, the Ext^1 condition by direct iteration.
/// Kept separate from [`qualifying_opens`] as its independent oracle.
pub fn brute_force_qualifying(
    model: &FiniteModel,
    size_cap: usize,
) -> Result<EnumeratedClassification> {
    let space = model.space();
    let n = space.len();
    if n > size_cap {
        return Err(Error::SizeCapExceeded {
            points: n,
            cap: size_cap,
        });
    }
    let mut qualifying = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let s: PointSubset = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let complement = space.complement(&s);
        let open = space.closure(&complement) == complement;
        if !open {
            continue;
        }
        let mut ok = true;
        'cond: for alpha in 0..n {
            for beta in 0..n {
                if !s.contains(alpha) && s.contains(beta) {
                    let entry = model.ext_known(1, alpha, beta)?;
                    if entry.is_nonzero() == Some(true) {
                        ok = false;
                        break 'cond;
                    }
                }
            }
        }
        if ok {
            qualifying.push(s);
        }
    }
    space.sort_deterministic(&mut qualifying);
    let qualifying: Vec<Vec<String>> = qualifying.iter().map(|s| space.names(s)).collect();
    let labels = qualifying
        .iter()
        .map(|names| (subset_key(names), subcategory_label(names)))
        .collect();
    Ok(EnumeratedClassification { qualifying, labels })
}

/// One family of qualifying opens of the graded `k[x]` spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFamily {
    pub name: String,
    pub label: String,
    /// False for the fourth open `{all s_i}`, which satisfies the Ext^1
    /// condition and the open-set criterion but is not among the three
    /// families listed in the source example.
    pub listed_in_source: bool,
    /// A representative descriptor (for the parametric family, the
    /// instance with threshold 0).
    pub representative: GradedSetDescriptor,
    pub parametric: bool,
}

/// Rule-described classification for graded `k[x]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedClassification {
    pub rule: String,
    pub families: Vec<GradedFamily>,
}

/// Decision procedure: an open of the graded spectrum qualifies iff its
/// set of simple indices is up-closed in `Z` (if `s_{i-1}` is in, so is
/// `s_i`), because the only nonzero degree-1 entries are
/// `ext(1, s_i, s_{i-1})`.
pub fn graded_open_qualifies(d: &GradedSetDescriptor) -> bool {
    if !d.is_open() {
        return false;
    }
    use crate::symbolic::graded::GradedBase::*;
    // canonical form: up-closed integer sets are exactly the empty set,
    // all of Z, and the up-rays, with no corrections
    match d.base {
        Empty => d.added.is_empty(),
        AllIntegers => d.removed.is_empty(),
        UpRay(_) => d.added.is_empty() && d.removed.is_empty(),
        DownRay(_) => false,
    }
}

pub fn classify_graded_kx() -> GradedClassification {
    let families = vec![
        GradedFamily {
            name: "empty".into(),
            label: "the zero subcategory".into(),
            listed_in_source: true,
            representative: GradedSetDescriptor::empty(),
            parametric: false,
        },
        GradedFamily {
            name: "up-ray(i0)".into(),
            label: "modules vanishing in degrees above a threshold".into(),
            listed_in_source: true,
            representative: GradedSetDescriptor::up_ray(0, false),
            parametric: true,
        },
        GradedFamily {
            name: "whole-space".into(),
            label: "the whole category".into(),
            listed_in_source: true,
            representative: GradedSetDescriptor::whole_space(),
            parametric: false,
        },
        GradedFamily {
            name: "all-simples".into(),
            label: "not listed in source: the open of all simple atoms".into(),
            listed_in_source: false,
            representative: GradedSetDescriptor::all_simples(),
            parametric: false,
        },
    ];
    GradedClassification {
        rule: "opens whose simple-index set is up-closed in Z".into(),
        families,
    }
}

/// `Const_i(alpha)` for a finite model with all-constant Ext data:
/// `{beta : ext(i, alpha, beta) != 0}`. Errors on entries without the
/// eventual-constancy flag or with symbolic value.
pub fn const_set(model: &FiniteModel, degree: u32, alpha: usize) -> Result<PointSubset> {
    let n = model.atom_count();
    let mut out = PointSubset::default();
    for beta in 0..n {
        let entry = model.ext(degree, alpha, beta);
        if !entry.eventually_constant {
            return Err(Error::NonConstantUnsupported {
                degree,
                source_atom: model.atom_name(alpha).to_owned(),
                target_atom: model.atom_name(beta).to_owned(),
            });
        }
        if model.ext_known(degree, alpha, beta)?.is_nonzero() == Some(true) {
            out.insert(beta);
        }
    }
    Ok(out)
}

/// `Epi_i(alpha)`; coincides with `Const_i(alpha)` under all-constant data.
pub fn epi_set(model: &FiniteModel, degree: u32, alpha: usize) -> Result<PointSubset> {
    const_set(model, degree, alpha)
}

/// `projdim alpha = sup {i <= cap : ext(i, alpha, -) != 0}`, evaluated on
/// atom targets (exact for the hereditary families; labeled atom-level in
/// reports otherwise).
pub fn projdim_atom(model: &FiniteModel, alpha: usize, cap: u32) -> Result<DimValue> {
    let n = model.atom_count();
    let mut top = 0u32;
    for degree in 0..=cap {
        let nonzero = (0..n).try_fold(false, |acc, beta| {
            Ok::<_, Error>(acc || model.ext_known(degree, alpha, beta)?.is_nonzero() == Some(true))
        })?;
        if nonzero {
            top = degree;
        }
    }
    if model.hereditary() || top < cap {
        Ok(DimValue::Exact(top))
    } else {
        Ok(DimValue::AtLeast { at_least: cap })
    }
}

/// `cprojdim alpha = sup {i <= cap : Const_i(alpha) != empty}`.
pub fn cprojdim_atom(model: &FiniteModel, alpha: usize, cap: u32) -> Result<DimValue> {
    let mut top = 0u32;
    for degree in 0..=cap {
        if !const_set(model, degree, alpha)?.is_empty() {
            top = degree;
        }
    }
    if model.hereditary() || top < cap {
        Ok(DimValue::Exact(top))
    } else {
        Ok(DimValue::AtLeast { at_least: cap })
    }
}

/// `gldim = sup {i <= cap : some ext(i, alpha, beta) != 0}`.
pub fn gldim_via_atoms(model: &FiniteModel, cap: u32) -> Result<DimValue> {
    let n = model.atom_count();
    let mut top = 0u32;
    for degree in 0..=cap {
        let mut nonzero = false;
        'scan: for alpha in 0..n {
            for beta in 0..n {
                if model.ext_known(degree, alpha, beta)?.is_nonzero() == Some(true) {
                    nonzero = true;
                    break 'scan;
                }
            }
        }
        if nonzero {
            top = degree;
        }
    }
    if model.hereditary() || top < cap {
        Ok(DimValue::Exact(top))
    } else {
        Ok(DimValue::AtLeast { at_least: cap })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentViolation {
    pub atom: String,
    pub degree: u32,
    pub offending: Vec<String>,
}

/// Verdict of `Epi_i(alpha) ⊆ ⋃_{j=0..i} L^j(Const_{i-j}(alpha))` over
/// the listed degrees and all atoms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentReport {
    pub degrees: Vec<u32>,
    pub violations: Vec<ContainmentViolation>,
}

impl ContainmentReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_epi_containment(model: &FiniteModel, degrees: &[u32]) -> Result<ContainmentReport> {
    let space = model.space();
    let mut violations = Vec::new();
    for alpha in 0..model.atom_count() {
        for &degree in degrees {
            let epi = epi_set(model, degree, alpha)?;
            let mut bound = PointSubset::default();
            for j in 0..=degree {
                let cst = const_set(model, degree - j, alpha)?;
                bound = bound.union(&space.limit_iterate(&cst, j));
            }
            let offending = epi.difference(&bound);
            if !offending.is_empty() {
                violations.push(ContainmentViolation {
                    atom: model.atom_name(alpha).to_owned(),
                    degree,
                    offending: space.names(&offending),
                });
            }
        }
    }
    Ok(ContainmentReport {
        degrees: degrees.to_vec(),
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundVerdict {
    Holds,
    Fails,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomBound {
    pub atom: String,
    pub projdim: DimValue,
    pub cprojdim: DimValue,
    pub verdict: BoundVerdict,
    /// `cprojdim + kgdim - projdim` when both sides are exact.
    pub margin: Option<i64>,
}

/// Verdict of `projdim alpha <= cprojdim alpha + KGdim` per atom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub kg_dim: u32,
    pub per_atom: Vec<AtomBound>,
}

impl BoundReport {
    pub fn pass(&self) -> bool {
        self.per_atom
            .iter()
            .all(|a| a.verdict == BoundVerdict::Holds)
    }
}

pub fn check_dimension_bound(model: &FiniteModel, cap: u32) -> Result<BoundReport> {
    let kg_dim = model.space().stratify().space_dim.unwrap_or(0);
    let mut per_atom = Vec::new();
    for alpha in 0..model.atom_count() {
        let projdim = projdim_atom(model, alpha, cap)?;
        let cprojdim = cprojdim_atom(model, alpha, cap)?;
        let (verdict, margin) = match (projdim, cprojdim) {
            (DimValue::Exact(p), DimValue::Exact(c)) => {
                let margin = c as i64 + kg_dim as i64 - p as i64;
                (
                    if margin >= 0 {
                        BoundVerdict::Holds
                    } else {
                        BoundVerdict::Fails
                    },
                    Some(margin),
                )
            }
            (DimValue::Exact(p), DimValue::AtLeast { at_least }) if at_least as i64 + kg_dim as i64 >= p as i64 => {
                (BoundVerdict::Holds, None)
            }
            _ => (BoundVerdict::Undetermined, None),
        };
        per_atom.push(AtomBound {
            atom: model.atom_name(alpha).to_owned(),
            projdim,
            cprojdim,
            verdict,
            margin,
        });
    }
    Ok(BoundReport { kg_dim, per_atom })
}

/// Per-atom dimension data for one model, as reported by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsReport {
    pub degree_cap: u32,
    pub kg_dim: u32,
    pub gldim_estimate: DimValue,
    pub atoms: Vec<AtomBound>,
    /// `const_sets[degree][atom]` (equal to the Epi sets for all built-in
    /// families, where every entry is eventually constant).
    pub const_sets: BTreeMap<u32, BTreeMap<String, Vec<String>>>,
    pub bound_holds: bool,
    pub containment_holds: bool,
    pub containment_violations: Vec<ContainmentViolation>,
}

pub fn dims_report(model: &FiniteModel, cap: u32) -> Result<DimsReport> {
    let bound = check_dimension_bound(model, cap)?;
    let degrees: Vec<u32> = (0..=cap).collect();
    let containment = check_epi_containment(model, &degrees)?;
    let gldim_estimate = gldim_via_atoms(model, cap)?;
    let mut const_sets = BTreeMap::new();
    for degree in 0..=cap {
        let mut per_atom = BTreeMap::new();
        for alpha in 0..model.atom_count() {
            let cst = const_set(model, degree, alpha)?;
            per_atom.insert(
                model.atom_name(alpha).to_owned(),
                model.space().names(&cst),
            );
        }
        const_sets.insert(degree, per_atom);
    }
    Ok(DimsReport {
        degree_cap: cap,
        kg_dim: bound.kg_dim,
        gldim_estimate,
        atoms: bound.per_atom.clone(),
        const_sets,
        bound_holds: bound.pass(),
        containment_holds: containment.pass(),
        containment_violations: containment.violations,
    })
}

/// Closed-form dimension calculus for the graded `k[x]` model, evaluated
/// on a window of simple atoms plus the generic atom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    pub kg_dim: u32,
    pub gldim: u32,
    /// `(projdim, cprojdim)` for every sampled simple atom.
    pub simple_dims: (u32, u32),
    pub generic_dims: (u32, u32),
    pub bound_holds: bool,
    pub containment_holds: bool,
}

pub fn graded_dims(model: &GradedKxModel, window: (i64, i64)) -> GradedDims {
    let (lo, hi) = window;
    let kg_dim = model.kg_dim();
    // per-atom data on the window, computed from the Ext table
    let mut bound_holds = true;
    let mut containment_holds = true;
    let mut gldim = 0u32;
    let mut check_atom = |alpha: GradedPoint| {
        // targets that can be nonzero lie among the window neighbors
        let targets: Vec<GradedPoint> = (lo - 2..=hi + 2)
            .map(GradedPoint::Simple)
            .chain(std::iter::once(GradedPoint::Generic))
            .collect();
        let mut projdim = 0u32;
        let mut cprojdim = 0u32;
        for degree in 0..=1 {
            // hereditary: degree >= 2 vanishes identically
            let nonzero: Vec<GradedPoint> = targets
                .iter()
                .copied()
                .filter(|&beta| model.ext(degree, alpha, beta).value != ExtValue::Zero)
                .collect();
            if !nonzero.is_empty() {
                projdim = degree;
                cprojdim = degree;
                gldim = gldim.max(degree);
                // containment at this degree: Epi ⊆ Const ∪ L(Epi_{i-1});
                // here Epi = Const, so the containment is immediate, and
                // the L term is checked to be harmless via the descriptor
                // rules
                if degree >= 1 {
                    let l_of_alpha = GradedSetDescriptor::singleton(alpha).limit_points();
                    for beta in &nonzero {
                        let in_const = model.ext(degree, alpha, *beta).value != ExtValue::Zero;
                        if !in_const && !l_of_alpha.contains(*beta) {
                            containment_holds = false;
                        }
                    }
                }
            }
        }
        if projdim > cprojdim + kg_dim {
            bound_holds = false;
        }
        (projdim, cprojdim)
    };
    let mut simple_dims = (0, 0);
    for i in lo..=hi {
        simple_dims = check_atom(GradedPoint::Simple(i));
    }
    let generic_dims = check_atom(GradedPoint::Generic);
    GradedDims {
        kg_dim,
        gldim,
        simple_dims,
        generic_dims,
        bound_holds,
        containment_holds,
    }
}
