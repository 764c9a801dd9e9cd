//! Builders for atomic models: an atom set, its topology, and an
//! Ext-between-atoms oracle per degree, for each algebra family with an
//! explicitly computed Ext table.
//!
//! Dimensions are natural numbers; what a theorem leaves symbolic is
//! stored as `NonzeroUnknownDim` (provably nonzero) or `Unknown` (not
//! determined). `Unknown` entries error loudly if a computation ever
//! consults them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// Value of one `Ext^i(alpha, beta)` entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtValue {
    Zero,
    /// Known dimension (over the base field / residue skew field).
    Dim(u64),
    /// Provably nonzero, dimension left symbolic.
    NonzeroUnknownDim,
    /// Not determined; consulting it is a hard error.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtEntry {
    pub value: ExtValue,
    pub eventually_constant: bool,
}

impl ExtEntry {
    pub const fn constant(value: ExtValue) -> Self {
        ExtEntry {
            value,
            eventually_constant: true,
        }
    }

    pub fn is_nonzero(&self) -> Option<bool> {
        match self.value {
            ExtValue::Zero => Some(false),
            ExtValue::Dim(d) => Some(d > 0),
            ExtValue::NonzeroUnknownDim => Some(true),
            ExtValue::Unknown => None,
        }
    }
}

/// Rule for Ext entries in degrees >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
enum HigherDegrees {
    /// Hereditary family: everything vanishes.
    AllZero,
    /// Off-diagonal zero, diagonal symbolic (commutative family).
    DiagonalUnknown,
    /// Zero across groups, symbolic within a group (triangular family:
    /// the group of an atom is its underlying prime).
    BlockUnknown(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Commutative,
    Triangular,
    Quiver,
    GradedKx,
}

/// A finite atomic model: atoms with their specialization order, and an
/// Ext oracle in every degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModel {
    space: FinitePoset,
    family: Family,
    /// Degree-1 entries, dense.
    deg1: Vec<Vec<ExtEntry>>,
    /// Degree-0 diagonal entries (`k(alpha)`), per atom.
    hom_diag: Vec<ExtEntry>,
    higher: HigherDegrees,
    hereditary: bool,
}

impl FiniteModel {
    pub fn space(&self) -> &FinitePoset {
        &self.space
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn hereditary(&self) -> bool {
        self.hereditary
    }

    pub fn atom_count(&self) -> usize {
        self.space.len()
    }

    pub fn atom_name(&self, i: usize) -> &str {
        &self.space.elements()[i]
    }

    /// The Ext entry in the given degree. Degree 0 is zero off-diagonal
    /// and nonzero on the diagonal.
    pub fn ext(&self, degree: u32, source: usize, target: usize) -> ExtEntry {
        match degree {
            0 => {
                if source == target {
                    self.hom_diag[source]
                } else {
                    ExtEntry::constant(ExtValue::Zero)
                }
            }
            1 => self.deg1[source][target],
            _ => match &self.higher {
                HigherDegrees::AllZero => ExtEntry::constant(ExtValue::Zero),
                HigherDegrees::DiagonalUnknown => {
                    if source == target {
                        ExtEntry::constant(ExtValue::Unknown)
                    } else {
                        ExtEntry::constant(ExtValue::Zero)
                    }
                }
                HigherDegrees::BlockUnknown(group) => {
                    if group[source] == group[target] {
                        ExtEntry::constant(ExtValue::Unknown)
                    } else {
                        ExtEntry::constant(ExtValue::Zero)
                    }
                }
            },
        }
    }

    /// Like [`Self::ext`], but errors when the entry is `Unknown`.
    pub fn ext_known(&self, degree: u32, source: usize, target: usize) -> Result<ExtEntry> {
        let entry = self.ext(degree, source, target);
        if entry.value == ExtValue::Unknown {
            return Err(Error::UnknownExtRead {
                degree,
                source_atom: self.atom_name(source).to_owned(),
                target_atom: self.atom_name(target).to_owned(),
            });
        }
        Ok(entry)
    }
}

/// Model of `Mod R` for a commutative noetherian ring with the given prime
/// poset (read as `(Spec R, ⊆)`; opens are the specialization-closed sets).
/// All off-diagonal Ext vanishes in every degree; diagonal entries in
/// degree >= 1 depend on the local rings and stay symbolic. The
/// classification condition only ever consults pairs of distinct atoms,
/// so it never reads a symbolic entry.
pub fn model_from_commutative_poset(spec: &FinitePoset) -> FiniteModel {
    let n = spec.len();
    let diag_unknown = ExtEntry::constant(ExtValue::Unknown);
    let zero = ExtEntry::constant(ExtValue::Zero);
    let deg1 = (0..n)
        .map(|i| (0..n).map(|j| if i == j { diag_unknown } else { zero }).collect())
        .collect();
    FiniteModel {
        space: spec.clone(),
        family: Family::Commutative,
        deg1,
        hom_diag: vec![ExtEntry::constant(ExtValue::NonzeroUnknownDim); n],
        higher: HigherDegrees::DiagonalUnknown,
        hereditary: false,
    }
}

/// Model of the triangular matrix algebra `[[R, 0], [R, R]]` over the
/// commutative ring with the given prime poset. Atoms are two copies
/// `P1(p)`, `P2(p)` of the primes; the topology is the disjoint union.
/// Within one prime, `Ext^1(P2(p), P1(p))` is `k(p)` (nonzero) and
/// `Ext^1(P1(p), P2(p)) = 0`; all cross-prime entries vanish in every
/// degree.
pub fn model_from_triangular(spec: &FinitePoset) -> Result<FiniteModel> {
    let copy = |tag: usize| {
        move |name: &str| format!("P{tag}({name})")
    };
    let space = spec.disjoint_union(spec, copy(1), copy(2))?;
    let n = spec.len();
    let total = 2 * n;
    let zero = ExtEntry::constant(ExtValue::Zero);
    let mut deg1 = vec![vec![zero; total]; total];
    for p in 0..n {
        let p1 = p; // copy 1 occupies indices 0..n
        let p2 = n + p; // copy 2 occupies indices n..2n
        deg1[p2][p1] = ExtEntry::constant(ExtValue::NonzeroUnknownDim);
        deg1[p1][p1] = ExtEntry::constant(ExtValue::Unknown);
        deg1[p2][p2] = ExtEntry::constant(ExtValue::Unknown);
        // deg1[p1][p2] stays zero
    }
    let group: Vec<usize> = (0..total).map(|i| i % n).collect();
    Ok(FiniteModel {
        space,
        family: Family::Triangular,
        deg1,
        hom_diag: vec![ExtEntry::constant(ExtValue::NonzeroUnknownDim); total],
        higher: HigherDegrees::BlockUnknown(group),
        hereditary: false,
    })
}

/// A quiver without relations: vertices and arrows with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    /// `(source, target, multiplicity)`
    pub arrows: Vec<(String, String, u64)>,
}

impl QuiverPresentation {
    /// Parses the text format: one directive per line, `vertex <id>` or
    /// `arrow <src> <dst> [multiplicity]`. Blank lines and `#` comments
    /// are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = lineno + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            match words.next() {
                Some("vertex") => {
                    let id = words.next().ok_or(Error::QuiverParse {
                        line: lineno,
                        reason: "vertex needs an identifier".into(),
                    })?;
                    if vertices.iter().any(|v| v == id) {
                        return Err(Error::QuiverParse {
                            line: lineno,
                            reason: format!("duplicate vertex {id}"),
                        });
                    }
                    vertices.push(id.to_owned());
                }
                Some("arrow") => {
                    let src = words.next().ok_or(Error::QuiverParse {
                        line: lineno,
                        reason: "arrow needs a source".into(),
                    })?;
                    let dst = words.next().ok_or(Error::QuiverParse {
                        line: lineno,
                        reason: "arrow needs a target".into(),
                    })?;
                    let mult = match words.next() {
                        None => 1,
                        Some(m) => m.parse::<u64>().map_err(|_| Error::QuiverParse {
                            line: lineno,
                            reason: format!("bad multiplicity {m:?}"),
                        })?,
                    };
                    arrows.push((src.to_owned(), dst.to_owned(), mult));
                }
                Some(other) => {
                    return Err(Error::QuiverParse {
                        line: lineno,
                        reason: format!("unknown directive {other:?}"),
                    })
                }
                None => unreachable!(),
            }
            if words.next().is_some() {
                return Err(Error::QuiverParse {
                    line: lineno,
                    reason: "trailing tokens".into(),
                });
            }
        }
        let q = QuiverPresentation { vertices, arrows };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        for (src, dst, _) in &self.arrows {
            for endpoint in [src, dst] {
                if !self.vertices.iter().any(|v| v == endpoint) {
                    return Err(Error::UnknownElement {
                        name: endpoint.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The Kronecker quiver `1 ⇉ 2`.
    pub fn kronecker() -> Self {
        QuiverPresentation {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![("1".into(), "2".into(), 2)],
        }
    }
}

/// Model of the hereditary path algebra `kQ`: atoms are the vertices
/// (simple modules) with the discrete topology; `Ext^1(i, j)` has
/// dimension the number of arrows `i -> j`, and everything in degree >= 2
/// vanishes.
pub fn model_from_quiver(q: &QuiverPresentation) -> Result<FiniteModel> {
    q.validate()?;
    let names: Vec<&str> = q.vertices.iter().map(String::as_str).collect();
    let space = FinitePoset::from_relations::<&str>(&names, &[])?;
    let n = q.vertices.len();
    let mut mult = vec![vec![0u64; n]; n];
    for (src, dst, m) in &q.arrows {
        let i = space.index_of(src).unwrap();
        let j = space.index_of(dst).unwrap();
        mult[i][j] += m;
    }
    let deg1 = mult
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|m| {
                    ExtEntry::constant(if m == 0 { ExtValue::Zero } else { ExtValue::Dim(m) })
                })
                .collect()
        })
        .collect();
    Ok(FiniteModel {
        space,
        family: Family::Quiver,
        deg1,
        hom_diag: vec![ExtEntry::constant(ExtValue::Dim(1)); n],
        higher: HigherDegrees::AllZero,
        hereditary: true,
    })
}

/// The symbolic model of graded `k[x]`: atoms `s_i` (`i` in `Z`) and the
/// generic atom `g`. The degree-1 table is `Ext^1(s_i, s_{i-1}) = k` and
/// zero everywhere else (in particular every entry with source or target
/// `g`); every subobject of `k[x]` is projective and the category is
/// hereditary, so degree >= 2 vanishes. All entries are eventually
/// constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GradedKxModel;

impl GradedKxModel {
    pub fn ext(
        &self,
        degree: u32,
        source: crate::symbolic::graded::GradedPoint,
        target: crate::symbolic::graded::GradedPoint,
    ) -> ExtEntry {
        use crate::symbolic::graded::GradedPoint::*;
        match degree {
            0 => {
                if source == target {
                    ExtEntry::constant(ExtValue::Dim(1))
                } else {
                    ExtEntry::constant(ExtValue::Zero)
                }
            }
            1 => match (source, target) {
                (Simple(i), Simple(j)) if j == i - 1 => ExtEntry::constant(ExtValue::Dim(1)),
                _ => ExtEntry::constant(ExtValue::Zero),
            },
            _ => ExtEntry::constant(ExtValue::Zero),
        }
    }

    pub fn hereditary(&self) -> bool {
        true
    }

    /// Space Krull-Gabriel dimension.
    pub fn kg_dim(&self) -> u32 {
        crate::symbolic::graded::stratify().space_dim
    }
}

pub fn model_graded_kx() -> GradedKxModel {
    GradedKxModel
}

/// Checks that the model's specialization order equals the order of the
/// input poset it was built from (per copy, for the triangular family).
pub fn prime_poset_isomorphism_check(model: &FiniteModel, spec: &FinitePoset) -> bool {
    match model.family {
        Family::Commutative => model.space == *spec,
        Family::Triangular => {
            let n = spec.len();
            if model.space.len() != 2 * n {
                return false;
            }
            for copy in 0..2 {
                let offset = copy * n;
                for a in 0..n {
                    for b in 0..n {
                        if model.space.le(offset + a, offset + b) != spec.le(a, b) {
                            return false;
                        }
                    }
                }
            }
            // no relations across the two copies
            for a in 0..n {
                for b in 0..n {
                    if model.space.le(a, n + b) || model.space.le(n + a, b) {
                        return false;
                    }
                }
            }
            true
        }
        Family::Quiver => {
            // discrete: the only relations are reflexive
            (0..model.space.len())
                .all(|a| (0..model.space.len()).all(|b| model.space.le(a, b) == (a == b)))
        }
        Family::GradedKx => false,
    }
}

/// Degree-1 Ext support as a relation on atom names, for reporting.
pub fn ext1_support(model: &FiniteModel) -> BTreeMap<String, Vec<String>> {
    let n = model.atom_count();
    let mut support = BTreeMap::new();
    for i in 0..n {
        let targets: Vec<String> = (0..n)
            .filter(|&j| model.ext(1, i, j).is_nonzero() == Some(true))
            .map(|j| model.atom_name(j).to_owned())
            .collect();
        if !targets.is_empty() {
            support.insert(model.atom_name(i).to_owned(), targets);
        }
    }
    support
}
