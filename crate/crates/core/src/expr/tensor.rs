use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::rational::Q;

/// All ordered splittings of `w` into two complementary subwords that keep
/// the relative order of letters, one per subset of positions (with
/// multiplicity). The subset mask `s` puts position `i` on the left iff bit
/// `i` of `s` is set; masks are enumerated in increasing order.
pub fn unshuffle_splits<T: Clone>(w: &[T]) -> Vec<(Vec<T>, Vec<T>)> {
    assert!(w.len() < usize::BITS as usize, "word too long to unshuffle");
    (0usize..1 << w.len())
        .map(|mask| {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, x) in w.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(x.clone());
                } else {
                    right.push(x.clone());
                }
            }
            (left, right)
        })
        .collect()
}

/// Rational combination of pairs of words `w1 ⊗ w2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPoly<T: Ord> {
    terms: BTreeMap<(Vec<T>, Vec<T>), Q>,
}

impl<T: Ord + Clone> TensorPoly<T> {
    pub fn zero() -> Self {
        TensorPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, left: Vec<T>, right: Vec<T>, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &[T], right: &[T]) -> Q {
        self.terms
            .get(&(left.to_vec(), right.to_vec()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<T>, Vec<T>), &Q)> {
        self.terms.iter()
    }

    /// Exchanges the two tensor factors.
    pub fn swap(&self) -> Self {
        TensorPoly {
            terms: self
                .terms
                .iter()
                .map(|((l, r), c)| ((r.clone(), l.clone()), c.clone()))
                .collect(),
        }
    }
}

/// Coproduct of the tensor algebra in which letters are primitive.
pub fn unshuffle<T: Ord + Clone>(w: &[T]) -> TensorPoly<T> {
    let mut out = TensorPoly::zero();
    for (l, r) in unshuffle_splits(w) {
        out.add_term(l, r, Q::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    #[test]
    fn single_letter_is_primitive() {
        let d = unshuffle(&['x']);
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&['x'], &[]), q(1));
        assert_eq!(d.coeff(&[], &['x']), q(1));
    }

    #[test]
    fn two_letters_by_hand() {
        // (x⊗1 + 1⊗x)(y⊗1 + 1⊗y) = xy⊗1 + x⊗y + y⊗x + 1⊗xy
        let d = unshuffle(&['x', 'y']);
        assert_eq!(d.len(), 4);
        for (l, r) in [
            (vec!['x', 'y'], vec![]),
            (vec!['x'], vec!['y']),
            (vec!['y'], vec!['x']),
            (vec![], vec!['x', 'y']),
        ] {
            assert_eq!(d.coeff(&l, &r), q(1));
        }
    }

    #[test]
    fn three_letters_one_term_per_subset() {
        let w = ['x', 'y', 'z'];
        let d = unshuffle(&w);
        assert_eq!(d.len(), 8);
        // brute force over subsets
        for mask in 0..8u32 {
            let l: Vec<char> = (0..3).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect();
            let r: Vec<char> = (0..3).filter(|i| mask >> i & 1 == 0).map(|i| w[i]).collect();
            assert_eq!(d.coeff(&l, &r), q(1));
        }
    }

    #[test]
    fn repeated_letters_merge() {
        let d = unshuffle(&['x', 'x']);
        assert_eq!(d.coeff(&['x'], &['x']), q(2));
        assert_eq!(d.len(), 3);
    }

    proptest! {
        #[test]
        fn cocommutative(w in proptest::collection::vec(0u8..3, 0..=5)) {
            let d = unshuffle(&w);
            prop_assert_eq!(d.swap(), d);
        }

        #[test]
        fn distinct_letters_give_power_of_two(n in 0usize..=6) {
            let w: Vec<usize> = (0..n).collect();
            prop_assert_eq!(unshuffle(&w).len(), 1 << n);
        }
    }
}
