//! Matroids behind a single rank oracle.
//!
//! Concrete representations (rational matrices, graphs, uniform matroids,
//! explicit circuit lists) and lazy constructions over them (duals, free
//! extensions, restrictions) all answer the same `rank` query. Bulk
//! operations go through a tabulated rank function, filled once per instance.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bits::{all_subsets, check_cap, subsets_of_size, ElementSet, MAX_GROUND};
use crate::graph::Multigraph;
use crate::rational::{clear_denominators, int_rank};
use crate::{Error, Result};

/// Ground sets up to this size get their circuit axioms checked on construction.
pub const CIRCUIT_VALIDATION_LIMIT: usize = 12;

/// Ordered, duplicate-free element labels. The label order is the element
/// order used for broken circuits unless another order is supplied.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Arc<[String]>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.len() > MAX_GROUND {
            return Err(Error::Capacity {
                what: "ground set",
                size: labels.len(),
                limit: MAX_GROUND,
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::domain(format!("duplicate element label {l:?}")));
            }
        }
        Ok(Self {
            labels: labels.into(),
        })
    }

    /// Labels `e1..en`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("e{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn set_of(&self, labels: &[&str]) -> Result<ElementSet> {
        labels.iter().try_fold(ElementSet::EMPTY, |acc, l| {
            self.index_of(l)
                .map(|i| acc.with(i))
                .ok_or_else(|| Error::domain(format!("element {l:?} is not in the ground set")))
        })
    }

    pub fn labels_of(&self, s: ElementSet) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    fn with_inserted(&self, label: &str, position: usize) -> Result<Self> {
        if self.index_of(label).is_some() {
            return Err(Error::domain(format!("label {label:?} already in the ground set")));
        }
        let mut v = self.labels.to_vec();
        v.insert(position, label.to_string());
        Self::new(v)
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.labels.iter()).finish()
    }
}

#[derive(Clone)]
pub enum Representation {
    /// One column per element.
    LinearRational {
        columns: Vec<Vec<BigRational>>,
        integer_columns: Vec<Vec<BigInt>>,
    },
    Graphic(Multigraph),
    Uniform { rank: usize },
    ExplicitCircuits(Vec<ElementSet>),
    DualOf(Arc<Matroid>),
    /// New element in general position, inserted at index `position`.
    FreeExtensionOf { inner: Arc<Matroid>, position: usize },
    /// Deletion of everything outside `kept` (indices into the inner ground set).
    Restriction { inner: Arc<Matroid>, kept: Vec<usize> },
}

#[derive(Clone)]
pub struct Matroid {
    ground: GroundSet,
    rep: Representation,
    full_rank: usize,
    circuits: OnceLock<Arc<Vec<ElementSet>>>,
    ranks: OnceLock<Arc<Vec<u8>>>,
}

impl Matroid {
    fn build(ground: GroundSet, rep: Representation) -> Self {
        let mut m = Self {
            ground,
            rep,
            full_rank: 0,
            circuits: OnceLock::new(),
            ranks: OnceLock::new(),
        };
        m.full_rank = m.raw_rank(m.ground.full());
        m
    }

    /// `U_{rank,size}` with labels `e1..`.
    pub fn uniform(rank: usize, size: usize) -> Result<Self> {
        Self::uniform_labeled(rank, GroundSet::numbered(size)?)
    }

    pub fn uniform_labeled(rank: usize, ground: GroundSet) -> Result<Self> {
        if rank > ground.len() {
            return Err(Error::domain(format!(
                "uniform rank {rank} exceeds ground set size {}",
                ground.len()
            )));
        }
        Ok(Self::build(ground, Representation::Uniform { rank }))
    }

    /// Column matroid of a rational matrix.
    pub fn linear(columns: Vec<Vec<BigRational>>, ground: GroundSet) -> Result<Self> {
        if columns.len() != ground.len() {
            return Err(Error::domain(format!(
                "{} columns but {} labels",
                columns.len(),
                ground.len()
            )));
        }
        if let Some(first) = columns.first() {
            if columns.iter().any(|c| c.len() != first.len()) {
                return Err(Error::domain("matrix columns have unequal lengths"));
            }
        }
        let integer_columns = columns.iter().map(|c| clear_denominators(c)).collect();
        Ok(Self::build(
            ground,
            Representation::LinearRational {
                columns,
                integer_columns,
            },
        ))
    }

    /// Cycle matroid: ground set is the edge list, labels are edge labels.
    pub fn graphic(graph: Multigraph) -> Result<Self> {
        let ground = GroundSet::new(graph.labels().to_vec())?;
        Ok(Self::build(ground, Representation::Graphic(graph)))
    }

    /// Matroid given by its circuits. The circuit axioms are checked when the
    /// ground set has at most [`CIRCUIT_VALIDATION_LIMIT`] elements.
    pub fn from_circuits(ground: GroundSet, circuits: Vec<ElementSet>) -> Result<Self> {
        let full = ground.full();
        let mut cs: Vec<ElementSet> = circuits;
        if let Some(c) = cs.iter().find(|c| !c.is_subset_of(full)) {
            return Err(Error::domain(format!("circuit {c:?} leaves the ground set")));
        }
        if cs.iter().any(|c| c.is_empty()) {
            return Err(Error::domain("the empty set cannot be a circuit"));
        }
        sort_lex(&mut cs);
        cs.dedup();
        if ground.len() <= CIRCUIT_VALIDATION_LIMIT {
            validate_circuit_axioms(&cs)?;
        }
        let m = Self::build(ground, Representation::ExplicitCircuits(cs.clone()));
        let _ = m.circuits.set(Arc::new(cs));
        Ok(m)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    /// Rank of the whole ground set (`r + 1`).
    pub fn full_rank(&self) -> usize {
        self.full_rank
    }

    pub fn kind(&self) -> &'static str {
        match &self.rep {
            Representation::LinearRational { .. } => "matrix",
            Representation::Graphic(_) => "graph",
            Representation::Uniform { .. } => "uniform",
            Representation::ExplicitCircuits(_) => "circuits",
            Representation::DualOf(_) => "dual",
            Representation::FreeExtensionOf { .. } => "free-extension",
            Representation::Restriction { .. } => "restriction",
        }
    }

    /// True when a rational representation is known to exist: matrices,
    /// graphs and uniform matroids, and everything built from them.
    pub fn representable_over_q(&self) -> bool {
        match &self.rep {
            Representation::LinearRational { .. }
            | Representation::Graphic(_)
            | Representation::Uniform { .. } => true,
            Representation::ExplicitCircuits(_) => false,
            Representation::DualOf(m)
            | Representation::FreeExtensionOf { inner: m, .. }
            | Representation::Restriction { inner: m, .. } => m.representable_over_q(),
        }
    }

    fn check_subset(&self, s: ElementSet) -> Result<()> {
        if s.is_subset_of(self.ground.full()) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{s:?} is not a subset of a {}-element ground set",
                self.len()
            )))
        }
    }

    pub fn rank(&self, s: ElementSet) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.raw_rank(s))
    }

    pub fn rank_of_labels(&self, labels: &[&str]) -> Result<usize> {
        Ok(self.raw_rank(self.ground.set_of(labels)?))
    }

    pub fn is_independent(&self, s: ElementSet) -> Result<bool> {
        Ok(self.rank(s)? == s.len())
    }

    /// Rank without the subset check. `s` must lie in the ground set.
    pub(crate) fn raw_rank(&self, s: ElementSet) -> usize {
        if let Some(t) = self.ranks.get() {
            return t[s.bits() as usize] as usize;
        }
        match &self.rep {
            Representation::Uniform { rank } => s.len().min(*rank),
            Representation::Graphic(g) => g.forest_rank(s.bits()),
            Representation::LinearRational {
                integer_columns, ..
            } => {
                let rows: Vec<&[BigInt]> = s.iter().map(|i| integer_columns[i].as_slice()).collect();
                int_rank(&rows)
            }
            Representation::ExplicitCircuits(circuits) => greedy_rank(circuits, s),
            Representation::DualOf(inner) => {
                s.len() + inner.raw_rank(self.ground.full().difference(s)) - inner.full_rank
            }
            Representation::FreeExtensionOf { inner, position } => {
                let base = inner.raw_rank(s.remove_position(*position));
                if s.contains(*position) && base < inner.full_rank {
                    base + 1
                } else {
                    base
                }
            }
            Representation::Restriction { inner, kept } => inner.raw_rank(s.permute(kept)),
        }
    }

    /// Ranks of all `2^n` subsets, indexed by bitmask.
    pub fn rank_table(&self) -> Result<Arc<Vec<u8>>> {
        if let Some(t) = self.ranks.get() {
            return Ok(t.clone());
        }
        check_cap("rank table", self.len())?;
        let n = self.len();
        let table: Vec<u8> = match &self.rep {
            Representation::DualOf(inner) => {
                let t = inner.rank_table()?;
                let full = (1usize << n) - 1;
                (0..1usize << n)
                    .map(|s| (s.count_ones() as usize + t[full ^ s] as usize - inner.full_rank) as u8)
                    .collect()
            }
            Representation::FreeExtensionOf { inner, position } => {
                let t = inner.rank_table()?;
                let top = inner.full_rank as u8;
                all_subsets(n)
                    .map(|s| {
                        let base = t[s.remove_position(*position).bits() as usize];
                        if s.contains(*position) && base < top {
                            base + 1
                        } else {
                            base
                        }
                    })
                    .collect()
            }
            _ => all_subsets(n).map(|s| self.raw_rank(s) as u8).collect(),
        };
        let t = Arc::new(table);
        let _ = self.ranks.set(t.clone());
        Ok(self.ranks.get().cloned().unwrap_or(t))
    }

    /// Fill the rank table and circuit list caches.
    pub fn materialize(&self) -> Result<()> {
        self.rank_table()?;
        self.circuits()?;
        Ok(())
    }

    /// All circuits, sorted lexicographically by their sorted element indices.
    pub fn circuits(&self) -> Result<Arc<Vec<ElementSet>>> {
        if let Some(c) = self.circuits.get() {
            return Ok(c.clone());
        }
        check_cap("circuit enumeration", self.len())?;
        let t = self.rank_table()?;
        let n = self.len();
        let mut out = Vec::new();
        // Subsets in size order; a dependent set all of whose one-smaller
        // subsets are independent is minimal dependent.
        for k in 1..=n.min(self.full_rank + 1) {
            for s in subsets_of_size(n, k) {
                let r = t[s.bits() as usize] as usize;
                if r + 1 == k && s.iter().all(|e| t[s.without(e).bits() as usize] as usize == k - 1)
                {
                    out.push(s);
                }
            }
        }
        sort_lex(&mut out);
        let c = Arc::new(out);
        let _ = self.circuits.set(c.clone());
        Ok(self.circuits.get().cloned().unwrap_or(c))
    }

    pub fn closure(&self, s: ElementSet) -> Result<ElementSet> {
        self.check_subset(s)?;
        Ok(self.raw_closure(s))
    }

    pub(crate) fn raw_closure(&self, s: ElementSet) -> ElementSet {
        let r = self.raw_rank(s);
        (0..self.len())
            .filter(|&e| s.contains(e) || self.raw_rank(s.with(e)) == r)
            .collect()
    }

    pub fn loops(&self) -> ElementSet {
        (0..self.len())
            .filter(|&e| self.raw_rank(ElementSet::singleton(e)) == 0)
            .collect()
    }

    pub fn has_loop(&self) -> bool {
        !self.loops().is_empty()
    }

    /// Loops, and the parallel classes of the non-loops in ground-set order.
    pub fn loops_and_parallels(&self) -> (ElementSet, Vec<ElementSet>) {
        let loops = self.loops();
        let mut classes: Vec<ElementSet> = Vec::new();
        for e in (0..self.len()).filter(|&e| !loops.contains(e)) {
            let home = classes.iter_mut().find(|c| {
                let rep = c.first().expect("classes are nonempty");
                self.raw_rank(ElementSet::from_indices([rep, e])) == 1
            });
            match home {
                Some(c) => *c = c.with(e),
                None => classes.push(ElementSet::singleton(e)),
            }
        }
        (loops, classes)
    }

    pub fn is_simple(&self) -> bool {
        let (loops, classes) = self.loops_and_parallels();
        loops.is_empty() && classes.iter().all(|c| c.len() == 1)
    }

    /// Restriction to `kept` (indices into this ground set, in the order given).
    pub fn restrict(&self, kept: &[usize]) -> Result<Matroid> {
        let mut seen = ElementSet::EMPTY;
        for &i in kept {
            if i >= self.len() || seen.contains(i) {
                return Err(Error::domain(format!("bad restriction index {i}")));
            }
            seen = seen.with(i);
        }
        let ground = GroundSet::new(kept.iter().map(|&i| self.ground.label(i).to_string()).collect())?;
        Ok(Self::build(
            ground,
            Representation::Restriction {
                inner: Arc::new(self.clone()),
                kept: kept.to_vec(),
            },
        ))
    }

    pub fn delete(&self, s: ElementSet) -> Result<Matroid> {
        self.check_subset(s)?;
        let kept: Vec<usize> = (0..self.len()).filter(|&e| !s.contains(e)).collect();
        self.restrict(&kept)
    }

    /// Delete loops and all but the first element of each parallel class.
    pub fn simplify(&self) -> Matroid {
        let (_, classes) = self.loops_and_parallels();
        let mut kept: Vec<usize> = classes.iter().filter_map(|c| c.first()).collect();
        kept.sort_unstable();
        self.restrict(&kept).expect("class representatives are distinct")
    }

    pub fn dual(&self) -> Matroid {
        if let Representation::DualOf(inner) = &self.rep {
            return (**inner).clone();
        }
        Self::build(self.ground.clone(), Representation::DualOf(Arc::new(self.clone())))
    }

    /// Free extension with the new element last in the order.
    pub fn free_extension(&self, label: &str) -> Result<Matroid> {
        self.free_extension_at(label, self.len())
    }

    pub fn free_extension_at(&self, label: &str, position: usize) -> Result<Matroid> {
        if position > self.len() {
            return Err(Error::domain(format!("position {position} past the end")));
        }
        let ground = self.ground.with_inserted(label, position)?;
        Ok(Self::build(
            ground,
            Representation::FreeExtensionOf {
                inner: Arc::new(self.clone()),
                position,
            },
        ))
    }

    /// `(M* + p)*`, with `p` placed first (least) in the ground-set order.
    pub fn free_dual_extension(&self, label: &str) -> Result<Matroid> {
        Ok(self.dual().free_extension_at(label, 0)?.dual())
    }

    /// Extensional comparison of rank functions over all subsets.
    pub fn same_rank_function(&self, other: &Matroid) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        let (a, b) = (self.rank_table()?, other.rank_table()?);
        Ok(a == b)
    }

    /// Exhaustive check of the rank axioms; reports the first failure.
    pub fn check_rank_axioms(&self) -> Result<()> {
        let t = self.rank_table()?;
        let n = self.len();
        for s in 0..1usize << n {
            let rs = t[s] as usize;
            if rs > s.count_ones() as usize {
                return Err(Error::invariant(format!("rank({s:#b}) exceeds cardinality")));
            }
            for e in 0..n {
                if s >> e & 1 == 0 && t[s | 1 << e] < t[s] {
                    return Err(Error::invariant(format!("rank not monotone at {s:#b} + {e}")));
                }
            }
        }
        // local submodularity r(S+a) + r(S+b) >= r(S+a+b) + r(S) is equivalent
        // to full submodularity
        for s in 0..1usize << n {
            for a in 0..n {
                for b in a + 1..n {
                    if s >> a & 1 == 1 || s >> b & 1 == 1 {
                        continue;
                    }
                    let lhs = t[s | 1 << a] as usize + t[s | 1 << b] as usize;
                    let rhs = t[s | 1 << a | 1 << b] as usize + t[s] as usize;
                    if lhs < rhs {
                        return Err(Error::invariant(format!("submodularity fails at {s:#b}, {a}, {b}")));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("kind", &self.kind())
            .field("ground", &self.ground)
            .field("rank", &self.full_rank)
            .finish()
    }
}

pub(crate) fn sort_lex(sets: &mut [ElementSet]) {
    sets.sort_by_cached_key(|s| s.to_vec());
}

fn greedy_rank(circuits: &[ElementSet], s: ElementSet) -> usize {
    let mut indep = ElementSet::EMPTY;
    for e in s.iter() {
        let cand = indep.with(e);
        if !circuits.iter().any(|c| c.contains(e) && c.is_subset_of(cand)) {
            indep = cand;
        }
    }
    indep.len()
}

fn validate_circuit_axioms(circuits: &[ElementSet]) -> Result<()> {
    for (i, &a) in circuits.iter().enumerate() {
        for &b in &circuits[i + 1..] {
            if a.is_subset_of(b) || b.is_subset_of(a) {
                return Err(Error::domain(format!("circuits {a:?} and {b:?} are comparable")));
            }
        }
    }
    for (i, &a) in circuits.iter().enumerate() {
        for &b in &circuits[i + 1..] {
            let common = a.intersection(b);
            for e in common.iter() {
                let pool = a.union(b).without(e);
                if !circuits.iter().any(|c| c.is_subset_of(pool)) {
                    return Err(Error::domain(format!(
                        "circuit elimination fails for {a:?}, {b:?} at element {e}"
                    )));
                }
            }
        }
    }
    Ok(())
}
