//! Springer correspondence for classical types by Lusztig symbols.

use alloc::vec::Vec;

use crate::combinat::{self, Partition};
use crate::rootsys::Family;
use crate::weylgrp::IrrLabel;

/// Splits the parts of `λ*_i = λ_i + (i−1)` (parts increasing) into those of
/// parity `first` and the rest, halves them and removes the staircase.
fn split(lambda: &[u32], pad_to_odd: bool, first_odd: bool) -> (Partition, Partition) {
    let mut inc: Vec<u32> = lambda.iter().rev().copied().collect();
    if (inc.len() % 2 == 1) != pad_to_odd {
        inc.insert(0, 0);
    }
    let mut xi = Vec::new();
    let mut eta = Vec::new();
    for (i, &x) in inc.iter().enumerate() {
        let s = x + i as u32;
        if (s % 2 == 1) == first_odd {
            xi.push(s / 2);
        } else {
            eta.push(s / 2);
        }
    }
    let unstair = |v: Vec<u32>| combinat::normalize(v.iter().enumerate().map(|(i, &x)| x - i as u32).collect());
    (unstair(xi), unstair(eta))
}

/// Springer character (trivial local system) of the class with partition
/// `lambda`. For very even classes of type D, `very_even` selects the
/// `+` (I) or `−` (II) member.
pub fn springer_by_symbol(family: Family, lambda: &[u32], very_even: Option<bool>) -> Option<IrrLabel> {
    match family {
        Family::A => Some(IrrLabel::Partition(lambda.to_vec())),
        Family::B => {
            let (xi, eta) = split(lambda, true, true);
            Some(IrrLabel::Bipartition(xi, eta))
        }
        Family::C => {
            let (xi, eta) = split(lambda, true, false);
            Some(IrrLabel::Bipartition(xi, eta))
        }
        Family::D => {
            let (xi, eta) = split(lambda, false, false);
            if xi == eta {
                Some(IrrLabel::Unordered(xi.clone(), xi, Some(very_even?)))
            } else if xi > eta {
                Some(IrrLabel::Unordered(xi, eta, None))
            } else {
                Some(IrrLabel::Unordered(eta, xi, None))
            }
        }
        Family::G => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn bip(a: &[u32], b: &[u32]) -> IrrLabel {
        IrrLabel::Bipartition(a.to_vec(), b.to_vec())
    }

    #[test]
    fn c2_symbols() {
        assert_eq!(springer_by_symbol(Family::C, &[4], None), Some(bip(&[2], &[])));
        assert_eq!(springer_by_symbol(Family::C, &[2, 2], None), Some(bip(&[1], &[1])));
        assert_eq!(springer_by_symbol(Family::C, &[2, 1, 1], None), Some(bip(&[1, 1], &[])));
        assert_eq!(springer_by_symbol(Family::C, &[1, 1, 1, 1], None), Some(bip(&[], &[1, 1])));
    }

    #[test]
    fn b2_symbols() {
        assert_eq!(springer_by_symbol(Family::B, &[5], None), Some(bip(&[2], &[])));
        assert_eq!(springer_by_symbol(Family::B, &[3, 1, 1], None), Some(bip(&[1], &[1])));
        assert_eq!(springer_by_symbol(Family::B, &[2, 2, 1], None), Some(bip(&[], &[2])));
        assert_eq!(springer_by_symbol(Family::B, &[1; 5], None), Some(bip(&[], &[1, 1])));
    }

    #[test]
    fn d4_regular_and_zero() {
        assert_eq!(springer_by_symbol(Family::D, &[7, 1], None), Some(IrrLabel::Unordered(vec![4], vec![], None)));
        assert_eq!(
            springer_by_symbol(Family::D, &[1; 8], None),
            Some(IrrLabel::Unordered(vec![1, 1, 1, 1], vec![], None))
        );
        assert_eq!(springer_by_symbol(Family::D, &[4, 4], None), None);
    }
}
