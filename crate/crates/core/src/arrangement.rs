//! Deconing central arrangements and counting bounded regions of real line
//! arrangements.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bits::{all_subsets, check_cap};
use crate::graph::DisjointSets;
use crate::matroid::{GroundSet, Matroid};
use crate::poly::IntPolynomial;
use crate::rational::{clear_denominators, int_rank, is_zero_vector, proportional, rational_rank, solve};
use crate::{Error, Result};

/// Linear forms through the origin, one per hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralArrangement {
    forms: Vec<Vec<BigRational>>,
    ground: GroundSet,
}

impl CentralArrangement {
    pub fn new(forms: Vec<Vec<BigRational>>, ground: GroundSet) -> Result<Self> {
        if forms.len() != ground.len() {
            return Err(Error::domain("one label per form required"));
        }
        let width = forms.first().map_or(0, |f| f.len());
        if width == 0 || forms.iter().any(|f| f.len() != width) {
            return Err(Error::domain("forms must share a positive number of variables"));
        }
        if let Some(i) = forms.iter().position(|f| is_zero_vector(f)) {
            return Err(Error::domain(format!("form {i} is zero")));
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                if proportional(&forms[i], &forms[j]) {
                    return Err(Error::domain(format!("forms {i} and {j} define the same hyperplane")));
                }
            }
        }
        Ok(Self { forms, ground })
    }

    pub fn forms(&self) -> &[Vec<BigRational>] {
        &self.forms
    }

    pub fn variables(&self) -> usize {
        self.forms[0].len()
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Column matroid of the forms, labels aligned.
    pub fn matroid(&self) -> Result<Matroid> {
        Matroid::linear(self.forms.clone(), self.ground.clone())
    }

    /// Send hyperplane `infinity` to infinity: change coordinates so that its
    /// form is `y_0`, then set `y_0 = 1` in the remaining forms.
    pub fn decone(&self, infinity: usize) -> Result<AffineArrangement> {
        let chosen = self
            .forms
            .get(infinity)
            .ok_or_else(|| Error::domain(format!("no hyperplane {infinity}")))?;
        if is_zero_vector(chosen) {
            return Err(Error::domain("chosen hyperplane has a zero form"));
        }
        let l = self.variables();
        // basis of the dual space starting with the chosen form
        let mut basis = vec![chosen.clone()];
        for j in 0..l {
            if basis.len() == l {
                break;
            }
            let mut unit = vec![BigRational::zero(); l];
            unit[j] = BigRational::one();
            let mut trial = basis.clone();
            trial.push(unit);
            if rational_rank(&trial) == trial.len() {
                basis = trial;
            }
        }
        // coefficients c with Σ c_k basis_k = form, i.e. basisᵀ c = form
        let transposed: Vec<Vec<BigRational>> = (0..l)
            .map(|col| basis.iter().map(|row| row[col].clone()).collect())
            .collect();
        let mut forms = Vec::with_capacity(self.len() - 1);
        let mut labels = Vec::with_capacity(self.len() - 1);
        for (i, f) in self.forms.iter().enumerate() {
            if i == infinity {
                continue;
            }
            let c = solve(&transposed, f).ok_or_else(|| Error::invariant("dual basis does not span"))?;
            forms.push(AffineForm {
                constant: c[0].clone(),
                linear: c[1..].to_vec(),
            });
            labels.push(self.ground.label(i).to_string());
        }
        AffineArrangement::new(forms, l - 1, GroundSet::new(labels)?)
    }
}

/// `constant + Σ linear_j x_j`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineForm {
    pub constant: BigRational,
    pub linear: Vec<BigRational>,
}

impl AffineForm {
    fn augmented(&self) -> Vec<BigRational> {
        let mut v = self.linear.clone();
        v.push(self.constant.clone());
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineArrangement {
    forms: Vec<AffineForm>,
    variables: usize,
    ground: GroundSet,
}

impl AffineArrangement {
    pub fn new(forms: Vec<AffineForm>, variables: usize, ground: GroundSet) -> Result<Self> {
        if forms.len() != ground.len() {
            return Err(Error::domain("one label per form required"));
        }
        if forms.iter().any(|f| f.linear.len() != variables) {
            return Err(Error::domain("affine forms must all have the declared number of variables"));
        }
        if let Some(i) = forms.iter().position(|f| is_zero_vector(&f.linear)) {
            return Err(Error::domain(format!("affine form {i} has no linear part")));
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                if proportional(&forms[i].augmented(), &forms[j].augmented()) {
                    return Err(Error::domain(format!("forms {i} and {j} define the same hyperplane")));
                }
            }
        }
        Ok(Self {
            forms,
            variables,
            ground,
        })
    }

    /// Forms given as rows `[constant, a_1, ..., a_r]`.
    pub fn from_rows(rows: Vec<Vec<BigRational>>, ground: GroundSet) -> Result<Self> {
        let width = rows.first().map_or(1, |r| r.len());
        if width < 2 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::domain("affine rows need a constant and at least one coefficient"));
        }
        let forms = rows
            .into_iter()
            .map(|r| AffineForm {
                constant: r[0].clone(),
                linear: r[1..].to_vec(),
            })
            .collect();
        Self::new(forms, width - 1, ground)
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Dimension spanned by the linear parts.
    pub fn linear_rank(&self) -> usize {
        let rows: Vec<Vec<BigRational>> = self.forms.iter().map(|f| f.linear.clone()).collect();
        rational_rank(&rows)
    }

    pub fn is_essential(&self) -> bool {
        self.linear_rank() == self.variables
    }

    /// `Σ (-1)^|S| q^{ℓ - rank(S)}` over subsets `S` with a common point,
    /// where `ℓ` is the rank of all linear parts. For essential arrangements
    /// `ℓ` is the number of variables; otherwise this is the polynomial of
    /// the essentialization.
    pub fn char_poly(&self) -> Result<IntPolynomial> {
        check_cap("arrangement boolean expansion", self.len())?;
        let lin: Vec<Vec<BigInt>> = self.forms.iter().map(|f| clear_denominators(&f.linear)).collect();
        let aug: Vec<Vec<BigInt>> = self.forms.iter().map(|f| clear_denominators(&f.augmented())).collect();
        let ell = self.linear_rank();
        let mut coeffs = vec![0i64; ell + 1];
        for s in all_subsets(self.len()) {
            let lin_rows: Vec<&[BigInt]> = s.iter().map(|i| lin[i].as_slice()).collect();
            let aug_rows: Vec<&[BigInt]> = s.iter().map(|i| aug[i].as_slice()).collect();
            let r = int_rank(&lin_rows);
            if r != int_rank(&aug_rows) {
                continue;
            }
            coeffs[ell - r] += if s.len() % 2 == 0 { 1 } else { -1 };
        }
        Ok(IntPolynomial::from_i64(&coeffs))
    }
}

/// Number of bounded regions of a real essential line arrangement, from its
/// planar subdivision: vertices are the distinct intersection points, bounded
/// edges are the segments between consecutive points on each line, and the
/// bounded faces follow from Euler's relation `F = E - V + C`.
pub fn bounded_regions_2d(a: &AffineArrangement) -> Result<usize> {
    if a.variables() != 2 {
        return Err(Error::Unsupported(format!(
            "region counting is implemented for lines in the plane, not {} variables",
            a.variables()
        )));
    }
    if !a.is_essential() {
        return Err(Error::domain("line arrangement is not essential (all lines parallel)"));
    }
    type Point = (BigRational, BigRational);
    let forms = a.forms();
    let mut on_line: Vec<BTreeSet<Point>> = vec![BTreeSet::new(); forms.len()];
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let m = vec![forms[i].linear.clone(), forms[j].linear.clone()];
            let rhs = [-forms[i].constant.clone(), -forms[j].constant.clone()];
            if rational_rank(&m) < 2 {
                continue;
            }
            let x = solve(&m, &rhs).expect("independent 2x2 system is solvable");
            let p = (x[0].clone(), x[1].clone());
            on_line[i].insert(p.clone());
            on_line[j].insert(p);
        }
    }
    let mut index: BTreeMap<Point, usize> = BTreeMap::new();
    for pts in &on_line {
        for p in pts {
            let next = index.len();
            index.entry(p.clone()).or_insert(next);
        }
    }
    let vertices = index.len();
    let mut ds = DisjointSets::new(vertices);
    let mut edges = 0usize;
    for (form, pts) in forms.iter().zip(&on_line) {
        // order points along the line by a coordinate that varies on it
        let mut pts: Vec<&Point> = pts.iter().collect();
        if form.linear[1].is_zero() {
            pts.sort_by(|p, q| p.1.cmp(&q.1));
        } else {
            pts.sort_by(|p, q| p.0.cmp(&q.0));
        }
        for w in pts.windows(2) {
            ds.union(index[w[0]], index[w[1]]);
            edges += 1;
        }
    }
    let components = (0..vertices).filter(|&v| ds.find(v) == v).count();
    Ok(edges + components - vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flats::reduced_char_poly;
    use crate::rational::rat_int;

    fn central(cols: &[[i64; 3]]) -> CentralArrangement {
        let forms = cols.iter().map(|c| c.iter().map(|&x| rat_int(x)).collect()).collect();
        CentralArrangement::new(forms, GroundSet::numbered(cols.len()).unwrap()).unwrap()
    }

    fn lines(rows: &[[i64; 3]]) -> AffineArrangement {
        let ground = GroundSet::numbered(rows.len()).unwrap();
        let rows = rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect();
        AffineArrangement::from_rows(rows, ground).unwrap()
    }

    #[test]
    fn generic_planes_decone() {
        let a = central(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]);
        let chi_bar = reduced_char_poly(&a.matroid().unwrap()).unwrap();
        assert_eq!(chi_bar, IntPolynomial::from_desc(&[1, -3, 3]));
        for inf in 0..4 {
            let d = a.decone(inf).unwrap();
            assert_eq!(d.len(), 3);
            assert_eq!(d.char_poly().unwrap(), chi_bar, "infinity {inf}");
            assert_eq!(bounded_regions_2d(&d).unwrap(), 1);
        }
    }

    #[test]
    fn pencil_decone_matches_reduced_char_poly() {
        // three planes through the z-axis: matroid U_{2,3}, not essential in 3-space
        let a = central(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        let d = a.decone(0).unwrap();
        assert!(!d.is_essential());
        assert_eq!(d.char_poly().unwrap(), IntPolynomial::from_desc(&[1, -2]));
        assert_eq!(d.char_poly().unwrap(), reduced_char_poly(&a.matroid().unwrap()).unwrap());
        assert!(matches!(bounded_regions_2d(&d), Err(Error::Domain(_))));
    }

    #[test]
    fn region_counts() {
        // x = 0, y = 0, x + y = 1: one triangle
        assert_eq!(bounded_regions_2d(&lines(&[[0, 1, 0], [0, 0, 1], [-1, 1, 1]])).unwrap(), 1);
        // three concurrent lines
        let conc = lines(&[[0, 1, 0], [0, 0, 1], [0, 1, 1]]);
        assert_eq!(bounded_regions_2d(&conc).unwrap(), 0);
        assert_eq!(conc.char_poly().unwrap(), IntPolynomial::from_desc(&[1, -3, 2]));
        // grid of 2 + 2 lines: one square
        assert_eq!(bounded_regions_2d(&lines(&[[0, 1, 0], [-1, 1, 0], [0, 0, 1], [-1, 0, 1]])).unwrap(), 1);
        // 3 x 3 grid: four squares
        let grid = lines(&[[0, 1, 0], [-1, 1, 0], [-2, 1, 0], [0, 0, 1], [-1, 0, 1], [-2, 0, 1]]);
        assert_eq!(bounded_regions_2d(&grid).unwrap(), 4);
        assert_eq!(grid.char_poly().unwrap().eval_i64(1), BigInt::from(4));
    }

    #[test]
    fn generic_lines_count() {
        for n in 3..=6i64 {
            // tangent-like lines y = 2k x - k^2 are in general position
            let rows: Vec<[i64; 3]> = (1..=n).map(|k| [k * k, -2 * k, 1]).collect();
            let a = lines(&rows);
            let expected = ((n - 1) * (n - 2) / 2) as usize;
            assert_eq!(bounded_regions_2d(&a).unwrap(), expected);
            assert_eq!(a.char_poly().unwrap().eval_i64(1), BigInt::from(expected));
        }
    }

    #[test]
    fn rejects_bad_input() {
        let forms = vec![vec![rat_int(1), rat_int(0)], vec![rat_int(2), rat_int(0)]];
        assert!(CentralArrangement::new(forms, GroundSet::numbered(2).unwrap()).is_err());
        let forms = vec![vec![rat_int(0), rat_int(0)]];
        assert!(CentralArrangement::new(forms, GroundSet::numbered(1).unwrap()).is_err());
        let three_d = AffineArrangement::from_rows(
            vec![vec![rat_int(0), rat_int(1), rat_int(0), rat_int(0)]],
            GroundSet::numbered(1).unwrap(),
        )
        .unwrap();
        assert!(matches!(bounded_regions_2d(&three_d), Err(Error::Unsupported(_))));
    }
}
