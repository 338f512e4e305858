//! Independence complexes, broken circuit complexes, and f/h-vectors.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bits::{check_cap, ElementSet};
use crate::matroid::{sort_lex, GroundSet, Matroid};
use crate::order::ElementOrder;
use crate::sequence::IntSeq;
use crate::{Error, Result};

/// Downward-closed family of subsets of a ground set.
///
/// `top` is the declared facet size `r + 1`; the f- and h-vectors have
/// length `top + 1`. For matroid complexes it is the rank, so a complex with
/// no faces still reports zero vectors of the right length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    ground: GroundSet,
    faces: Vec<ElementSet>,
    top: usize,
}

impl FaceComplex {
    /// Complex from an explicit face list; checks downward closure.
    pub fn new(ground: GroundSet, faces: Vec<ElementSet>) -> Result<Self> {
        let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let c = Self::with_top(ground, faces, top);
        if !c.faces.iter().all(|f| f.is_subset_of(c.ground.full())) {
            return Err(Error::domain("face leaves the ground set"));
        }
        if !c.is_downward_closed() {
            return Err(Error::domain("face family is not downward closed"));
        }
        Ok(c)
    }

    fn with_top(ground: GroundSet, mut faces: Vec<ElementSet>, top: usize) -> Self {
        faces.sort_unstable_by_key(|f| (f.len(), f.bits()));
        faces.dedup();
        Self { ground, faces, top }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn faces(&self) -> &[ElementSet] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// `r + 1`
    pub fn top(&self) -> usize {
        self.top
    }

    /// `r`; `-1` for the complex `{∅}` of a rank-0 matroid.
    pub fn dim(&self) -> isize {
        self.top as isize - 1
    }

    pub fn contains(&self, face: ElementSet) -> bool {
        self.faces
            .binary_search_by_key(&(face.len(), face.bits()), |f| (f.len(), f.bits()))
            .is_ok()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces
            .iter()
            .all(|f| f.iter().all(|e| self.contains(f.without(e))))
    }

    pub fn facets(&self) -> Vec<ElementSet> {
        let n = self.ground.len();
        self.faces
            .iter()
            .copied()
            .filter(|f| (0..n).all(|e| f.contains(e) || !self.contains(f.with(e))))
            .collect()
    }

    /// All facets have the same size.
    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn f_vector(&self) -> IntSeq {
        let mut f = vec![0u64; self.top + 1];
        for face in &self.faces {
            f[face.len()] += 1;
        }
        IntSeq(f.into_iter().map(BigInt::from).collect())
    }

    pub fn h_vector(&self) -> IntSeq {
        f_to_h(&self.f_vector(), self.top).expect("f-vector length matches top")
    }

    /// Cone with apex `apex`, which must not be in any face.
    pub fn cone(&self, apex: usize) -> Result<FaceComplex> {
        if apex >= self.ground.len() || self.faces.iter().any(|f| f.contains(apex)) {
            return Err(Error::domain(format!("element {apex} cannot be a cone apex")));
        }
        let faces = self
            .faces
            .iter()
            .flat_map(|&f| [f, f.with(apex)])
            .collect();
        Ok(Self::with_top(self.ground.clone(), faces, self.top + 1))
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            f: self.f_vector().to_strings(),
            h: self.h_vector().to_strings(),
            dim: self.dim(),
            pure: self.is_pure(),
        }
    }
}

/// `{"f":[...],"h":[...],"dim":r,"pure":bool}` with decimal-string entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexJson {
    pub f: Vec<String>,
    pub h: Vec<String>,
    pub dim: isize,
    pub pure: bool,
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Expand `sum f_i (q-1)^(top-i)` and read `h_i` off the coefficient of
/// `q^(top-i)`. `f` is zero-padded to length `top + 1`.
pub fn f_to_h(f: &IntSeq, top: usize) -> Result<IntSeq> {
    if f.len() > top + 1 && f.values()[top + 1..].iter().any(|x| !x.is_zero()) {
        return Err(Error::domain(format!("f-vector longer than top {top} + 1")));
    }
    let f = f.padded(top + 1);
    let h = (0..=top)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, i| {
                let term = binomial(top - i, k - i) * f.get(i);
                if (k - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    Ok(IntSeq(h))
}

/// Inverse of [`f_to_h`]: substitute `q -> q + 1` on the h side.
pub fn h_to_f(h: &IntSeq, top: usize) -> Result<IntSeq> {
    if h.len() > top + 1 && h.values()[top + 1..].iter().any(|x| !x.is_zero()) {
        return Err(Error::domain(format!("h-vector longer than top {top} + 1")));
    }
    let h = h.padded(top + 1);
    let f = (0..=top)
        .map(|k| (0..=k).map(|i| binomial(top - i, k - i) * h.get(i)).sum())
        .collect();
    Ok(IntSeq(f))
}

/// Matroid complex `IN(M)`.
pub fn independence_complex(m: &Matroid) -> Result<FaceComplex> {
    check_cap("independence complex", m.len())?;
    let t = m.rank_table()?;
    let faces = (0..t.len() as u64)
        .map(ElementSet)
        .filter(|s| t[s.bits() as usize] as usize == s.len())
        .collect();
    Ok(FaceComplex::with_top(m.ground().clone(), faces, m.full_rank()))
}

/// Each circuit minus its least element under `order`; deduplicated and
/// sorted lexicographically.
pub fn broken_circuits(m: &Matroid, order: &ElementOrder) -> Result<Vec<ElementSet>> {
    check_order(m, order)?;
    let circuits = m.circuits()?;
    let mut seen = HashSet::new();
    let mut out: Vec<ElementSet> = circuits
        .iter()
        .map(|&c| c.without(order.least_in(c).expect("circuits are nonempty")))
        .filter(|b| seen.insert(*b))
        .collect();
    sort_lex(&mut out);
    Ok(out)
}

fn check_order(m: &Matroid, order: &ElementOrder) -> Result<()> {
    if order.len() != m.len() {
        return Err(Error::domain(format!(
            "ordering has {} elements, ground set has {}",
            order.len(),
            m.len()
        )));
    }
    Ok(())
}

/// Subsets of the ground set containing no broken circuit, found by
/// extending faces in increasing order position. A new element can only
/// complete a broken circuit whose order-maximum it is.
fn nbc_faces(m: &Matroid, order: &ElementOrder, skip_least: bool) -> Result<Vec<ElementSet>> {
    let n = m.len();
    let bcs = broken_circuits(m, order)?;
    if bcs.iter().any(|b| b.is_empty()) {
        return Ok(Vec::new());
    }
    let mut by_max: Vec<Vec<u64>> = vec![Vec::new(); n];
    for b in &bcs {
        let pb = order.to_positions(*b);
        by_max[pb.last().expect("nonempty")].push(pb.bits());
    }
    let start = usize::from(skip_least);
    let mut out = Vec::new();
    let mut stack: Vec<(u64, usize)> = vec![(0, start)];
    while let Some((face, next)) = stack.pop() {
        out.push(order.from_positions(ElementSet(face)));
        for (e, bcs_ending_here) in by_max.iter().enumerate().skip(next) {
            let cand = face | 1u64 << e;
            if bcs_ending_here.iter().all(|&b| b & !cand != 0) {
                stack.push((cand, e + 1));
            }
        }
    }
    Ok(out)
}

/// Broken circuit complex `BC(M)`; empty when `M` has a loop.
pub fn bc_complex(m: &Matroid, order: &ElementOrder) -> Result<FaceComplex> {
    check_cap("broken circuit complex", m.len())?;
    let faces = nbc_faces(m, order, false)?;
    Ok(FaceComplex::with_top(m.ground().clone(), faces, m.full_rank()))
}

/// Reduced broken circuit complex: faces of `BC(M)` avoiding the least element.
pub fn reduced_bc_complex(m: &Matroid, order: &ElementOrder) -> Result<FaceComplex> {
    check_cap("broken circuit complex", m.len())?;
    if m.is_empty() {
        return Err(Error::domain("reduced broken circuit complex needs a nonempty ground set"));
    }
    let faces = nbc_faces(m, order, true)?;
    Ok(FaceComplex::with_top(
        m.ground().clone(),
        faces,
        m.full_rank().saturating_sub(1),
    ))
}

/// Face-set comparison of `IN(M)` with the reduced broken circuit complex of
/// the free dual extension `M × p`, where `p` is least.
pub fn in_equals_reduced_bc_of_free_dual(m: &Matroid, label: &str) -> Result<bool> {
    let ext = m.free_dual_extension(label)?;
    let order = ElementOrder::identity(ext.len());
    let reduced = reduced_bc_complex(&ext, &order)?;
    let independent = independence_complex(m)?;
    let mut shifted: Vec<ElementSet> = reduced.faces().iter().map(|f| f.remove_position(0)).collect();
    shifted.sort_unstable_by_key(|f| (f.len(), f.bits()));
    Ok(shifted == independent.faces())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;
    use proptest::prelude::*;

    fn abc(rank: usize) -> Matroid {
        let g = GroundSet::new(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        Matroid::uniform_labeled(rank, g).unwrap()
    }

    fn id(m: &Matroid) -> ElementOrder {
        ElementOrder::identity(m.len())
    }

    /// Brute-force face family: every subset avoiding all broken circuits.
    fn brute_nbc(m: &Matroid, order: &ElementOrder) -> Vec<ElementSet> {
        let bcs = broken_circuits(m, order).unwrap();
        let mut v: Vec<_> = (0..1u64 << m.len())
            .map(ElementSet)
            .filter(|s| bcs.iter().all(|b| !b.is_subset_of(*s)))
            .collect();
        v.sort_unstable_by_key(|f| (f.len(), f.bits()));
        v
    }

    #[test]
    fn independence_complex_examples() {
        let c = independence_complex(&abc(2)).unwrap();
        assert_eq!(c.f_vector(), IntSeq::from_i64(&[1, 3, 3]));
        let k3 = Matroid::graphic(Multigraph::complete(3)).unwrap();
        assert_eq!(independence_complex(&k3).unwrap().f_vector(), IntSeq::from_i64(&[1, 3, 3]));
        let lp = Matroid::graphic(Multigraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap()).unwrap();
        let c = independence_complex(&lp).unwrap();
        assert!(c.faces().iter().all(|f| !f.contains(1)));
        assert!(c.is_pure());
    }

    #[test]
    fn broken_circuit_examples() {
        let u = abc(2);
        assert_eq!(broken_circuits(&u, &id(&u)).unwrap(), vec![ElementSet::from_indices([1, 2])]);
        let k3 = Matroid::graphic(Multigraph::complete(3)).unwrap();
        assert_eq!(broken_circuits(&k3, &id(&k3)).unwrap(), vec![ElementSet::from_indices([1, 2])]);
        let lp = Matroid::graphic(Multigraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap()).unwrap();
        assert!(broken_circuits(&lp, &id(&lp)).unwrap().contains(&ElementSet::EMPTY));
        assert!(broken_circuits(&lp, &ElementOrder::identity(5)).is_err());
    }

    #[test]
    fn bc_complex_examples() {
        let u = abc(2);
        let bc = bc_complex(&u, &id(&u)).unwrap();
        assert_eq!(bc.f_vector(), IntSeq::from_i64(&[1, 3, 2]));
        assert_eq!(bc.h_vector(), IntSeq::from_i64(&[1, 1, 0]));
        let lp = Matroid::graphic(Multigraph::from_edges(2, &[(0, 1), (1, 1)]).unwrap()).unwrap();
        let empty = bc_complex(&lp, &id(&lp)).unwrap();
        assert_eq!(empty.face_count(), 0);
        assert_eq!(empty.f_vector(), IntSeq::zeros(2));
        let reduced = reduced_bc_complex(&u, &id(&u)).unwrap();
        assert_eq!(bc, reduced.cone(0).unwrap());
    }

    #[test]
    fn reduced_bc_examples() {
        let u = abc(2);
        let r = reduced_bc_complex(&u, &id(&u)).unwrap();
        assert_eq!(r.faces(), &[ElementSet::EMPTY, ElementSet::singleton(1), ElementSet::singleton(2)]);
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert!(in_equals_reduced_bc_of_free_dual(&u12, "p").unwrap());
        let empty = Matroid::uniform(0, 0).unwrap();
        assert!(reduced_bc_complex(&empty, &id(&empty)).is_err());
    }

    #[test]
    fn dfs_matches_brute_force_filter() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let k4 = Matroid::graphic(Multigraph::complete(4)).unwrap();
        let w = Matroid::graphic(Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3)]).unwrap()).unwrap();
        for m in [k4, w, Matroid::uniform(3, 6).unwrap()] {
            for _ in 0..5 {
                let o = ElementOrder::random(m.len(), &mut rng);
                let bc = bc_complex(&m, &o).unwrap();
                assert_eq!(bc.faces(), brute_nbc(&m, &o).as_slice());
                assert!(bc.is_downward_closed());
                assert!(bc.is_pure());
                let apex = o.least_element().unwrap();
                assert_eq!(reduced_bc_complex(&m, &o).unwrap().cone(apex).unwrap(), bc);
            }
        }
    }

    #[test]
    fn f_to_h_examples() {
        assert_eq!(f_to_h(&IntSeq::from_i64(&[1, 3, 3]), 2).unwrap(), IntSeq::from_i64(&[1, 1, 1]));
        assert_eq!(f_to_h(&IntSeq::from_i64(&[1, 3, 2]), 2).unwrap(), IntSeq::from_i64(&[1, 1, 0]));
        assert_eq!(f_to_h(&IntSeq::from_i64(&[1]), 2).unwrap(), IntSeq::from_i64(&[1, -2, 1]));
        assert!(f_to_h(&IntSeq::from_i64(&[1, 1, 1, 1]), 2).is_err());
    }

    #[test]
    fn h_sum_counts_bases() {
        let m = Matroid::graphic(Multigraph::complete(4)).unwrap();
        let c = independence_complex(&m).unwrap();
        assert_eq!(c.h_vector().sum(), BigInt::from(16));
        assert_eq!(c.f_vector().get(3), BigInt::from(16));
    }

    #[test]
    fn new_rejects_non_complexes() {
        let g = GroundSet::numbered(3).unwrap();
        assert!(FaceComplex::new(g.clone(), vec![ElementSet::EMPTY, ElementSet::from_indices([0, 1])]).is_err());
        let ok = FaceComplex::new(g, vec![ElementSet::EMPTY, ElementSet::singleton(0)]).unwrap();
        assert_eq!(ok.dim(), 0);
        let j = ok.to_json();
        assert_eq!(j.f, vec!["1", "1"]);
        assert_eq!(j.h, vec!["1", "0"]);
    }

    proptest! {
        #[test]
        fn f_h_round_trip(v in proptest::collection::vec(-1000i64..1000, 1..=12)) {
            let top = v.len() - 1;
            let f = IntSeq::from_i64(&v);
            let h = f_to_h(&f, top).unwrap();
            prop_assert_eq!(h_to_f(&h, top).unwrap(), f);
        }

        #[test]
        fn h_sum_is_top_face_count(v in proptest::collection::vec(0i64..1000, 1..=12)) {
            let top = v.len() - 1;
            let f = IntSeq::from_i64(&v);
            prop_assert_eq!(f_to_h(&f, top).unwrap().sum(), f.get(top));
        }
    }
}
