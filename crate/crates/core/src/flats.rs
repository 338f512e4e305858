//! Lattice of flats, Möbius function, characteristic polynomials and
//! Whitney numbers.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bits::{check_cap, ElementSet};
use crate::complexes::bc_complex;
use crate::matroid::Matroid;
use crate::order::ElementOrder;
use crate::poly::IntPolynomial;
use crate::sequence::IntSeq;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub set: ElementSet,
    pub rank: usize,
    /// `μ(bottom, set)`
    pub mobius: BigInt,
}

/// Flats grouped by rank, each with its Möbius value from the bottom flat.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    flats: Vec<Flat>,
    by_rank: Vec<std::ops::Range<usize>>,
    full_rank: usize,
}

impl FlatLattice {
    /// Flats are the distinct closures of independent sets.
    pub fn new(m: &Matroid) -> Result<Self> {
        check_cap("lattice of flats", m.len())?;
        let t = m.rank_table()?;
        let n = m.len();
        let closure = |s: u64| -> u64 {
            let r = t[s as usize];
            (0..n)
                .filter(|&e| t[(s | 1 << e) as usize] == r)
                .fold(s, |acc, e| acc | 1 << e)
        };
        let mut seen: HashSet<u64> = HashSet::new();
        for s in 0..1u64 << n {
            if t[s as usize] as u32 == s.count_ones() {
                seen.insert(closure(s));
            }
        }
        let mut sets: Vec<(usize, u64)> = seen.into_iter().map(|s| (t[s as usize] as usize, s)).collect();
        sets.sort_unstable();

        let full_rank = m.full_rank();
        let mut by_rank = Vec::with_capacity(full_rank + 1);
        let mut start = 0;
        for r in 0..=full_rank {
            let end = start + sets[start..].iter().take_while(|(rk, _)| *rk == r).count();
            by_rank.push(start..end);
            start = end;
        }

        let mut flats: Vec<Flat> = Vec::with_capacity(sets.len());
        for (i, &(rank, s)) in sets.iter().enumerate() {
            let mobius = if i == 0 {
                BigInt::one()
            } else {
                let below: BigInt = flats
                    .iter()
                    .filter(|y| y.rank < rank && y.set.bits() & !s == 0)
                    .map(|y| &y.mobius)
                    .sum();
                -below
            };
            flats.push(Flat {
                set: ElementSet(s),
                rank,
                mobius,
            });
        }
        Ok(Self {
            flats,
            by_rank,
            full_rank,
        })
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn of_rank(&self, r: usize) -> &[Flat] {
        self.by_rank.get(r).map_or(&[], |range| &self.flats[range.clone()])
    }

    pub fn bottom(&self) -> &Flat {
        &self.flats[0]
    }

    pub fn top(&self) -> &Flat {
        self.flats.last().expect("lattice has a top")
    }

    pub fn mobius(&self, x: ElementSet) -> Option<&BigInt> {
        self.flats.iter().find(|f| f.set == x).map(|f| &f.mobius)
    }

    /// `Σ_x μ(∅, x) q^{r+1-rank(x)}`, without the loop convention.
    pub fn mobius_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.full_rank + 1];
        for f in &self.flats {
            coeffs[self.full_rank - f.rank] += &f.mobius;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// The recursion sums to zero below every non-bottom flat.
    pub fn check_mobius_recursion(&self) -> bool {
        self.flats.iter().skip(1).all(|x| {
            self.flats
                .iter()
                .filter(|y| y.set.is_subset_of(x.set))
                .map(|y| &y.mobius)
                .sum::<BigInt>()
                .is_zero()
        })
    }

    /// `sign μ(∅, x) = (-1)^rank(x)` for every flat.
    pub fn check_sign_alternation(&self) -> bool {
        self.flats.iter().all(|f| {
            if f.rank % 2 == 0 {
                f.mobius.is_positive()
            } else {
                f.mobius.is_negative()
            }
        })
    }
}

/// Characteristic polynomial from the Möbius function; zero if `M` has a loop.
pub fn char_poly(m: &Matroid) -> Result<IntPolynomial> {
    if m.has_loop() {
        return Ok(IntPolynomial::zero());
    }
    Ok(FlatLattice::new(m)?.mobius_polynomial())
}

/// `Σ_{S ⊆ E} (-1)^|S| q^{r+1-rank(S)}`: the Boolean-expansion oracle.
/// Loops cancel in pairs, so this is zero for matroids with loops.
pub fn char_poly_boolean(m: &Matroid) -> Result<IntPolynomial> {
    check_cap("boolean expansion", m.len())?;
    let t = m.rank_table()?;
    let top = m.full_rank();
    let mut coeffs = vec![0i64; top + 1];
    for (s, &r) in t.iter().enumerate() {
        let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
        coeffs[top - r as usize] += sign;
    }
    Ok(IntPolynomial::from_i64(&coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhitneyNumbers {
    /// `w_0..w_{r+1}`
    pub values: IntSeq,
    /// Set when the matroid has a loop, in which case `values` is all zero.
    pub has_loop: bool,
}

/// Unsigned coefficients of the characteristic polynomial.
pub fn whitney_numbers(m: &Matroid) -> Result<WhitneyNumbers> {
    let top = m.full_rank();
    if m.has_loop() {
        return Ok(WhitneyNumbers {
            values: IntSeq::zeros(top + 1),
            has_loop: true,
        });
    }
    let chi = char_poly(m)?;
    let values = (0..=top)
        .map(|i| {
            let c = chi.coeff(top - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect::<Vec<_>>();
    if let Some(i) = values.iter().position(|w| w.is_negative()) {
        return Err(Error::invariant(format!("Whitney number w_{i} is negative")));
    }
    Ok(WhitneyNumbers {
        values: IntSeq(values),
        has_loop: false,
    })
}

/// Number of NBC sets of each cardinality under `order`.
pub fn nbc_counts(m: &Matroid, order: &ElementOrder) -> Result<IntSeq> {
    Ok(bc_complex(m, order)?.f_vector())
}

/// `χ_M(q) / (q - 1)`; zero if `M` has a loop.
pub fn reduced_char_poly(m: &Matroid) -> Result<IntPolynomial> {
    if m.has_loop() {
        return Ok(IntPolynomial::zero());
    }
    if m.full_rank() == 0 {
        return Err(Error::domain(
            "reduced characteristic polynomial needs rank at least one",
        ));
    }
    char_poly(m)?.exact_div_linear(1)
}

/// h-vector of `BC(M)` read off `χ̄(q + 1) = Σ (-1)^i h_i q^{r-i}`, with
/// `h_{r+1} = 0` appended.
pub fn bc_h_from_charpoly(m: &Matroid) -> Result<IntSeq> {
    let top = m.full_rank();
    if m.has_loop() {
        return Ok(IntSeq::zeros(top + 1));
    }
    let shifted = reduced_char_poly(m)?.translate(1);
    let r = top - 1;
    let mut h: Vec<BigInt> = (0..=r)
        .map(|i| {
            let c = shifted.coeff(r - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    h.push(BigInt::zero());
    Ok(IntSeq(h))
}
