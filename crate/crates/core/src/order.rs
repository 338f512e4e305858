//! Total orders on a ground set, used for broken circuits.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits::ElementSet;
use crate::{Error, Result};

/// A permutation of `0..n`: `order()[k]` is the element in position `k`
/// (position 0 is the least element).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementOrder {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl ElementOrder {
    /// The intrinsic order of the ground set.
    pub fn identity(n: usize) -> Self {
        Self {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (k, &e) in order.iter().enumerate() {
            if e >= n || position[e] != usize::MAX {
                return Err(Error::domain(format!("{order:?} is not a permutation of 0..{n}")));
            }
            position[e] = k;
        }
        Ok(Self { order, position })
    }

    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        Self::new(order).expect("shuffle is a permutation")
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, e: usize) -> usize {
        self.position[e]
    }

    pub fn least_element(&self) -> Option<usize> {
        self.order.first().copied()
    }

    /// Least member of `s` under this order.
    pub fn least_in(&self, s: ElementSet) -> Option<usize> {
        s.iter().min_by_key(|&e| self.position[e])
    }

    /// Re-encode `s` so that bit `k` means "the element in position `k`".
    pub fn to_positions(&self, s: ElementSet) -> ElementSet {
        s.permute(&self.position)
    }

    pub fn from_positions(&self, s: ElementSet) -> ElementSet {
        s.permute(&self.order)
    }

    /// Order of a ground set with a new least element inserted at index 0.
    pub fn with_new_least(&self) -> Self {
        let mut order = vec![0];
        order.extend(self.order.iter().map(|&e| e + 1));
        Self::new(order).expect("shifted permutation")
    }
}
