//! Exact topology engine for finite Kolmogorov spaces.
//!
//! A finite T0 space is the same thing as a finite poset under the
//! specialization order: `a <= b` means `a` lies in the closure of `{b}`.
//! Open sets are the up-closed sets, closed sets the down-closed sets.
//! This orientation matches the localizing topology on prime spectra,
//! where opens correspond to specialization-closed sets of primes.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default cap on the number of points for operations that enumerate
/// the subset lattice.
pub const DEFAULT_SIZE_CAP: usize = 20;

/// A finite set with a reflexive transitive relation. Not necessarily
/// antisymmetric; this is the raw hook used to exercise the Kolmogorov
/// flag of [`SpectralReport`] negatively. Every finite topological space
/// is the Alexandrov space of such a preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    elements: Vec<String>,
    index: BTreeMap<String, usize>,
    // le[a][b] == true  <=>  a <= b  <=>  a in closure({b})
    le: Vec<Vec<bool>>,
}

impl Preorder {
    /// Builds the reflexive-transitive closure of `le_pairs`.
    pub fn from_relations<S: AsRef<str>>(elements: &[S], le_pairs: &[(S, S)]) -> Result<Self> {
        let elements: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = BTreeMap::new();
        for (i, name) in elements.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement { name: name.clone() });
            }
        }
        let n = elements.len();
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in le_pairs {
            let ia = *index.get(a.as_ref()).ok_or_else(|| Error::UnknownElement {
                name: a.as_ref().to_owned(),
            })?;
            let ib = *index.get(b.as_ref()).ok_or_else(|| Error::UnknownElement {
                name: b.as_ref().to_owned(),
            })?;
            le[ia][ib] = true;
        }
        // Warshall
        for k in 0..n {
            let row_k = le[k].clone();
            for row in le.iter_mut() {
                if row[k] {
                    for (j, &via) in row_k.iter().enumerate() {
                        if via {
                            row[j] = true;
                        }
                    }
                }
            }
        }
        Ok(Preorder {
            elements,
            index,
            le,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    /// Evaluates the five spectral-space conditions. For a finite space:
    /// every subset is quasi-compact (each point has a minimal open
    /// neighborhood, so any cover admits a subcover of size at most the
    /// number of points), opens are closed under intersection, and every
    /// irreducible closed set is the closure of a single point class.
    /// Hence only the Kolmogorov condition can fail.
    pub fn spectral_check(&self) -> SpectralReport {
        let n = self.len();
        let mut kolmogorov_witness = None;
        'outer: for a in 0..n {
            for b in (a + 1)..n {
                if self.le[a][b] && self.le[b][a] {
                    kolmogorov_witness = Some((self.elements[a].clone(), self.elements[b].clone()));
                    break 'outer;
                }
            }
        }
        // Soberness: irreducible closed sets of a finite space are exactly
        // the closures of single points (a closed set is the finite union
        // of the closures of its points; irreducibility forces one of them
        // to be the whole set). Each closure({x}) has generic point x.
        let sober_witness: Option<Vec<String>> = None;
        SpectralReport {
            kolmogorov: kolmogorov_witness.is_none(),
            quasi_compact: true,
            qc_intersection: true,
            qc_basis: true,
            sober: sober_witness.is_none(),
            kolmogorov_witness,
            sober_witness,
        }
    }
}

/// A finite poset, read as a finite Kolmogorov space: opens are the
/// up-closed sets, `closure({b}) = {a : a <= b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    order: Preorder,
}

/// A subset of the points of one host [`FinitePoset`], stored as indices.
/// Subsets are created through [`FinitePoset::subset`] and friends; passing
/// a subset to a different poset is a contract violation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct PointSubset {
    members: BTreeSet<usize>,
}

impl PointSubset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn insert(&mut self, i: usize) {
        self.members.insert(i);
    }

    pub fn union(&self, other: &PointSubset) -> PointSubset {
        PointSubset {
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    pub fn intersection(&self, other: &PointSubset) -> PointSubset {
        PointSubset {
            members: self.members.intersection(&other.members).copied().collect(),
        }
    }

    pub fn difference(&self, other: &PointSubset) -> PointSubset {
        PointSubset {
            members: self.members.difference(&other.members).copied().collect(),
        }
    }

    pub fn is_subset(&self, other: &PointSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    fn from_indices(members: BTreeSet<usize>) -> Self {
        PointSubset { members }
    }
}

impl FromIterator<usize> for PointSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        PointSubset {
            members: iter.into_iter().collect(),
        }
    }
}

impl FinitePoset {
    /// Builds a poset as the reflexive-transitive closure of `le_pairs`,
    /// rejecting antisymmetry violations.
    pub fn from_relations<S: AsRef<str>>(elements: &[S], le_pairs: &[(S, S)]) -> Result<Self> {
        let order = Preorder::from_relations(elements, le_pairs)?;
        let n = order.len();
        for a in 0..n {
            for b in (a + 1)..n {
                if order.le(a, b) && order.le(b, a) {
                    return Err(Error::Cycle {
                        a: order.elements()[a].clone(),
                        b: order.elements()[b].clone(),
                    });
                }
            }
        }
        Ok(FinitePoset { order })
    }

    pub fn empty() -> Self {
        FinitePoset {
            order: Preorder::from_relations::<&str>(&[], &[]).unwrap(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        self.order.elements()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.order.index.get(name).copied()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.order.le(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.order.le(a, b)
    }

    pub fn le_by_name(&self, a: &str, b: &str) -> Result<bool> {
        let ia = self.index_of(a).ok_or_else(|| Error::UnknownElement {
            name: a.to_owned(),
        })?;
        let ib = self.index_of(b).ok_or_else(|| Error::UnknownElement {
            name: b.to_owned(),
        })?;
        Ok(self.le(ia, ib))
    }

    /// Validates a list of names into a subset of this poset.
    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSubset> {
        let mut members = BTreeSet::new();
        for name in names {
            let i = self
                .index_of(name.as_ref())
                .ok_or_else(|| Error::UnknownElement {
                    name: name.as_ref().to_owned(),
                })?;
            members.insert(i);
        }
        Ok(PointSubset::from_indices(members))
    }

    pub fn empty_subset(&self) -> PointSubset {
        PointSubset::default()
    }

    pub fn full_subset(&self) -> PointSubset {
        (0..self.len()).collect()
    }

    pub fn singleton(&self, i: usize) -> PointSubset {
        std::iter::once(i).collect()
    }

    pub fn complement(&self, s: &PointSubset) -> PointSubset {
        (0..self.len()).filter(|i| !s.contains(*i)).collect()
    }

    /// Member names, sorted lexicographically.
    pub fn names(&self, s: &PointSubset) -> Vec<String> {
        let mut names: Vec<String> = s.iter().map(|i| self.elements()[i].clone()).collect();
        names.sort();
        names
    }

    /// Down-closure `{x : exists y in s, x <= y}`.
    pub fn closure(&self, s: &PointSubset) -> PointSubset {
        (0..self.len())
            .filter(|&x| s.iter().any(|y| self.le(x, y)))
            .collect()
    }

    /// Opens are the up-closed sets.
    pub fn is_open(&self, s: &PointSubset) -> bool {
        s.iter()
            .all(|x| (0..self.len()).all(|y| !self.le(x, y) || s.contains(y)))
    }

    pub fn is_closed(&self, s: &PointSubset) -> bool {
        self.is_open(&self.complement(s))
    }

    /// Largest open subset of `s`: the points whose whole up-set stays in `s`.
    pub fn interior(&self, s: &PointSubset) -> PointSubset {
        s.iter()
            .filter(|&x| (0..self.len()).all(|y| !self.le(x, y) || s.contains(y)))
            .collect()
    }

    /// All open subsets, in deterministic order (size, then lexicographic
    /// on the sorted member names). Guarded by `size_cap`.
    pub fn enumerate_opens(&self, size_cap: usize) -> Result<Vec<PointSubset>> {
        let n = self.len();
        if n > size_cap {
            return Err(Error::SizeCapExceeded {
                points: n,
                cap: size_cap,
            });
        }
        let mut opens = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let s: PointSubset = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if self.is_open(&s) {
                opens.push(s);
            }
        }
        self.sort_deterministic(&mut opens);
        Ok(opens)
    }

    /// Sorts subsets by size, then lexicographically on sorted member names.
    pub fn sort_deterministic(&self, subsets: &mut [PointSubset]) {
        subsets.sort_by_cached_key(|s| (s.len(), self.names(s)));
    }

    /// Limit points `L(s) = {x : x in closure(s \ {x})}`. Under the
    /// specialization order this is `{x : exists y in s, x < y}`.
    pub fn limit_points(&self, s: &PointSubset) -> PointSubset {
        (0..self.len())
            .filter(|&x| s.iter().any(|y| self.lt(x, y)))
            .collect()
    }

    /// Iterated limit points, `L^0(s) = s`, `L^i = L(L^{i-1})`.
    pub fn limit_iterate(&self, s: &PointSubset, i: u32) -> PointSubset {
        let mut cur = s.clone();
        for _ in 0..i {
            let next = self.limit_points(&cur);
            if next == cur {
                // L fixes the empty set and any fixed point stays fixed
                return next;
            }
            cur = next;
        }
        cur
    }

    /// Krull-Gabriel stratification: repeatedly remove the points that are
    /// open in the remaining subspace (the maximal points of the remaining
    /// subposet). `level(x)` is the stage at which `x` is removed.
    pub fn stratify(&self) -> StratificationReport {
        let mut remaining: BTreeSet<usize> = (0..self.len()).collect();
        let mut level = BTreeMap::new();
        let mut lvl = 0u32;
        while !remaining.is_empty() {
            let open_points: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&x| remaining.iter().all(|&y| !self.lt(x, y)))
                .collect();
            debug_assert!(!open_points.is_empty());
            for x in open_points {
                level.insert(self.elements()[x].clone(), lvl);
                remaining.remove(&x);
            }
            lvl += 1;
        }
        let space_dim = level.values().copied().max();
        StratificationReport { level, space_dim }
    }

    /// Supremum of lengths of chains of irreducible closed subsets. The
    /// irreducible closed sets of a finite poset are the point closures,
    /// so this is the longest chain length in the order.
    pub fn chain_dimension(&self) -> Option<u32> {
        if self.is_empty() {
            return None;
        }
        // longest strict chain below each point, memoized over a linear
        // extension (indices sorted by down-set size)
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (0..n).filter(|&y| self.le(y, x)).count());
        let mut depth = vec![0u32; n];
        for &x in &order {
            depth[x] = (0..n)
                .filter(|&y| self.lt(y, x))
                .map(|y| depth[y] + 1)
                .max()
                .unwrap_or(0);
        }
        depth.into_iter().max()
    }

    pub fn spectral_check(&self) -> SpectralReport {
        self.order.spectral_check()
    }

    /// The Hochster dual: for a finite space, the order-opposite poset.
    pub fn hochster_dual(&self) -> FinitePoset {
        let n = self.len();
        let mut le = vec![vec![false; n]; n];
        for (a, row) in le.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = self.order.le(b, a);
            }
        }
        FinitePoset {
            order: Preorder {
                elements: self.order.elements.clone(),
                index: self.order.index.clone(),
                le,
            },
        }
    }

    /// Points that are limit points of their own closure,
    /// `{x : x in closure(closure({x}) \ {x})}`. Empty for every finite
    /// Kolmogorov space: the strict down-set of `x` is closed and misses `x`.
    pub fn obstruction_points(&self) -> PointSubset {
        (0..self.len())
            .filter(|&x| {
                let cl = self.closure(&self.singleton(x));
                let punctured = cl.difference(&self.singleton(x));
                self.closure(&punctured).contains(x)
            })
            .collect()
    }

    /// Disjoint union, with element names taken from the two namers.
    pub fn disjoint_union(
        &self,
        other: &FinitePoset,
        rename_left: impl Fn(&str) -> String,
        rename_right: impl Fn(&str) -> String,
    ) -> Result<FinitePoset> {
        let mut elements: Vec<String> = Vec::with_capacity(self.len() + other.len());
        elements.extend(self.elements().iter().map(|e| rename_left(e)));
        elements.extend(other.elements().iter().map(|e| rename_right(e)));
        let mut pairs = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.lt(a, b) {
                    pairs.push((elements[a].clone(), elements[b].clone()));
                }
            }
        }
        for a in 0..other.len() {
            for b in 0..other.len() {
                if other.lt(a, b) {
                    pairs.push((
                        elements[self.len() + a].clone(),
                        elements[self.len() + b].clone(),
                    ));
                }
            }
        }
        let pair_refs: Vec<(&str, &str)> = pairs
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let elem_refs: Vec<&str> = elements.iter().map(String::as_str).collect();
        FinitePoset::from_relations(&elem_refs, &pair_refs)
    }

    /// Strict covering-free pair list (all strict relations), used for
    /// serialization.
    fn strict_pairs(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) {
                    pairs.push((self.elements()[a].clone(), self.elements()[b].clone()));
                }
            }
        }
        pairs
    }
}

#[derive(Serialize, Deserialize)]
struct PosetWire {
    elements: Vec<String>,
    le: Vec<(String, String)>,
}

impl Serialize for FinitePoset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PosetWire {
            elements: self.elements().to_vec(),
            le: self.strict_pairs(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FinitePoset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = PosetWire::deserialize(deserializer)?;
        let pairs: Vec<(&str, &str)> = wire
            .le
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let elems: Vec<&str> = wire.elements.iter().map(String::as_str).collect();
        FinitePoset::from_relations(&elems, &pairs).map_err(D::Error::custom)
    }
}

/// Per-point Krull-Gabriel levels. `space_dim` is `None` for the empty space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratificationReport {
    pub level: BTreeMap<String, u32>,
    pub space_dim: Option<u32>,
}

/// Result of evaluating the five spectral-space conditions. A flag is
/// false iff its witness is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub kolmogorov: bool,
    pub quasi_compact: bool,
    pub qc_intersection: bool,
    pub qc_basis: bool,
    pub sober: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kolmogorov_witness: Option<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sober_witness: Option<Vec<String>>,
}

impl SpectralReport {
    pub fn all_pass(&self) -> bool {
        self.kolmogorov && self.quasi_compact && self.qc_intersection && self.qc_basis && self.sober
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset {
        let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let pairs: Vec<(String, String)> = (1..n)
            .map(|i| (format!("c{}", i - 1), format!("c{i}")))
            .collect();
        FinitePoset::from_relations(&names, &pairs).unwrap()
    }

    fn antichain(n: usize) -> FinitePoset {
        let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        FinitePoset::from_relations::<String>(&names, &[]).unwrap()
    }

    fn diamond() -> FinitePoset {
        FinitePoset::from_relations(
            &["bot", "m1", "m2", "top"],
            &[("bot", "m1"), ("bot", "m2"), ("m1", "top"), ("m2", "top")],
        )
        .unwrap()
    }

    #[test]
    fn from_relations_chain_and_singleton() {
        let p = FinitePoset::from_relations(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(p.le_by_name("a", "b").unwrap());
        assert!(!p.le_by_name("b", "a").unwrap());
        let s = FinitePoset::from_relations::<&str>(&["a"], &[]).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn from_relations_rejects_cycles_and_unknowns() {
        let err = FinitePoset::from_relations(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::Cycle { .. }));
        let err = FinitePoset::from_relations(&["a"], &[("a", "z")]).unwrap_err();
        assert!(matches!(err, Error::UnknownElement { .. }));
        let err = FinitePoset::from_relations::<&str>(&["a", "a"], &[]).unwrap_err();
        assert!(matches!(err, Error::DuplicateElement { .. }));
    }

    #[test]
    fn transitive_cycle_detected() {
        // a<b, b<c, c<a closes to a full cycle
        let err = FinitePoset::from_relations(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "a")],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Cycle { .. }));
    }

    #[test]
    fn closure_basics() {
        let p = chain(2);
        let top = p.subset(&["c1"]).unwrap();
        assert_eq!(p.names(&p.closure(&top)), ["c0", "c1"]);
        assert!(p.closure(&p.empty_subset()).is_empty());
        let a = antichain(3);
        let x = a.subset(&["p1"]).unwrap();
        assert_eq!(a.closure(&x), x);
    }

    #[test]
    fn opens_of_small_spaces() {
        let p = chain(2);
        let opens = p.enumerate_opens(DEFAULT_SIZE_CAP).unwrap();
        let got: Vec<Vec<String>> = opens.iter().map(|s| p.names(s)).collect();
        assert_eq!(
            got,
            vec![vec![], vec!["c1".to_owned()], vec!["c0".to_owned(), "c1".to_owned()]]
        );
        let a = antichain(3);
        assert_eq!(a.enumerate_opens(DEFAULT_SIZE_CAP).unwrap().len(), 8);
    }

    #[test]
    fn interior_and_is_open() {
        let p = chain(2);
        let bottom = p.subset(&["c0"]).unwrap();
        assert!(!p.is_open(&bottom));
        assert!(p.interior(&bottom).is_empty());
        let top = p.subset(&["c1"]).unwrap();
        assert!(p.is_open(&top));
        assert_eq!(p.interior(&top), top);
    }

    #[test]
    fn size_cap_guards_enumeration() {
        let a = antichain(5);
        let err = a.enumerate_opens(4).unwrap_err();
        assert!(matches!(err, Error::SizeCapExceeded { points: 5, cap: 4 }));
    }

    #[test]
    fn limit_points_examples() {
        let p = chain(2);
        let top = p.subset(&["c1"]).unwrap();
        assert_eq!(p.names(&p.limit_points(&top)), ["c0"]);
        assert!(p.limit_points(&p.empty_subset()).is_empty());
        let p3 = chain(3);
        let s = p3.subset(&["c1", "c2"]).unwrap();
        assert_eq!(p3.names(&p3.limit_points(&s)), ["c0", "c1"]);
    }

    #[test]
    fn limit_iterate_examples() {
        let p3 = chain(3);
        let top = p3.subset(&["c2"]).unwrap();
        assert_eq!(p3.names(&p3.limit_iterate(&top, 2)), ["c0"]);
        assert_eq!(p3.limit_iterate(&top, 0), top);
        let a = antichain(4);
        let s = a.subset(&["p0", "p2"]).unwrap();
        assert!(a.limit_iterate(&s, 1).is_empty());
    }

    #[test]
    fn stratify_examples() {
        let p = chain(2);
        let r = p.stratify();
        assert_eq!(r.level["c1"], 0);
        assert_eq!(r.level["c0"], 1);
        assert_eq!(r.space_dim, Some(1));

        let a = antichain(3);
        let r = a.stratify();
        assert!(r.level.values().all(|&l| l == 0));
        assert_eq!(r.space_dim, Some(0));

        assert_eq!(FinitePoset::empty().stratify().space_dim, None);
    }

    #[test]
    fn chain_dimension_examples() {
        assert_eq!(chain(2).chain_dimension(), Some(1));
        assert_eq!(antichain(3).chain_dimension(), Some(0));
        assert_eq!(diamond().chain_dimension(), Some(2));
        assert_eq!(FinitePoset::empty().chain_dimension(), None);
    }

    #[test]
    fn spectral_check_pass_and_t0_failure() {
        assert!(chain(2).spectral_check().all_pass());
        assert!(antichain(3).spectral_check().all_pass());
        // indiscernible pair via the raw preorder hook
        let raw = Preorder::from_relations(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let report = raw.spectral_check();
        assert!(!report.kolmogorov);
        assert_eq!(
            report.kolmogorov_witness,
            Some(("a".to_owned(), "b".to_owned()))
        );
        assert!(report.quasi_compact && report.qc_intersection && report.qc_basis && report.sober);
    }

    #[test]
    fn hochster_dual_examples() {
        let p = chain(2);
        let d = p.hochster_dual();
        assert!(d.le_by_name("c1", "c0").unwrap());
        assert_eq!(d.hochster_dual(), p);
        let a = antichain(3);
        assert_eq!(a.hochster_dual(), a);
        let dm = diamond();
        assert_eq!(dm.hochster_dual().hochster_dual(), dm);
        assert!(dm.hochster_dual().le_by_name("top", "bot").unwrap());
    }

    #[test]
    fn obstruction_points_empty_on_finite_posets() {
        assert!(chain(2).obstruction_points().is_empty());
        assert!(diamond().obstruction_points().is_empty());
    }

    #[test]
    fn poset_json_round_trip() {
        let p = diamond();
        let json = serde_json::to_string(&p).unwrap();
        let back: FinitePoset = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        let parsed: FinitePoset =
            serde_json::from_str(r#"{"elements":["a","b"],"le":[["a","b"]]}"#).unwrap();
        assert!(parsed.le_by_name("a", "b").unwrap());
    }

    #[test]
    fn poset_json_rejects_cycles() {
        let err = serde_json::from_str::<FinitePoset>(
            r#"{"elements":["a","b"],"le":[["a","b"],["b","a"]]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("antisymmetry"));
    }
}
