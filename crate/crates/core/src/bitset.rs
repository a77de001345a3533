//! Word-slice helpers for the bit rows used throughout the crate.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

#[inline]
pub(crate) fn test(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn clear(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}

#[inline]
pub(crate) fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_zero(bits: &[u64]) -> bool {
    bits.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

/// Mask with bits `0..n` set.
pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut bits = vec![0u64; words_for(n)];
    for (i, w) in bits.iter_mut().enumerate() {
        let lo = i * 64;
        if n >= lo + 64 {
            *w = u64::MAX;
        } else if n > lo {
            *w = (1u64 << (n - lo)) - 1;
        }
    }
    bits
}

/// Lowest set bit.
#[inline]
pub(crate) fn first(bits: &[u64]) -> Option<usize> {
    bits.iter().position(|&w| w != 0).map(|i| i * 64 + bits[i].trailing_zeros() as usize)
}

/// Ascending indices of the set bits.
pub(crate) fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_ones() {
        let b = full(70);
        assert_eq!(count(&b), 70);
        assert_eq!(ones(&b).last(), Some(69));
        assert_eq!(full(64), vec![u64::MAX]);
        assert_eq!(count(&full(0)), 0);
    }

    #[test]
    fn set_clear() {
        let mut b = vec![0u64; 2];
        set(&mut b, 65);
        set(&mut b, 3);
        assert!(test(&b, 65));
        assert_eq!(ones(&b).collect::<Vec<_>>(), vec![3, 65]);
        clear(&mut b, 65);
        assert_eq!(count(&b), 1);
    }
}
