//! The counting functions `f`, `g` and `ℓ_d`, in exact integer arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::PartitionSizes;

/// A positive rational `num / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidParameter(format!("{num}/{den} is not a positive rational")));
        }
        Ok(Rational { num, den })
    }

    pub fn integer(x: u64) -> Result<Self> {
        Rational::new(x, 1)
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

/// `2^d + d`, saturating at `u128::MAX`.
fn two_pow_plus(d: usize) -> u128 {
    if d >= 127 {
        u128::MAX
    } else {
        (1u128 << d) + d as u128
    }
}

/// `f(x)`: the smallest `d` with `2^d + d > x`. Needs `x >= 1`.
pub fn f_of(x: Rational) -> Result<usize> {
    if x.num < x.den {
        return Err(Error::InvalidParameter(format!("f is defined for x >= 1, got {}/{}", x.num, x.den)));
    }
    let (num, den) = (x.num as u128, x.den as u128);
    Ok((1..).find(|&d| two_pow_plus(d).saturating_mul(den) > num).expect("2^d + d is unbounded"))
}

/// `f(x)` for a positive integer.
///
/// # Panics
/// Panics for `x = 0`.
pub fn f_int(x: usize) -> usize {
    f_of(Rational::integer(x as u64).expect("f needs x >= 1")).expect("x >= 1")
}

/// `g(n)`: the smallest `d` with `2^d + d >= n`.
///
/// Defined here for every `n`; `g(0) = g(1) = 0`, matching `β(K_1) = 0`.
pub fn g_of(n: usize) -> usize {
    (0..).find(|&d| two_pow_plus(d) >= n as u128).expect("2^d + d is unbounded")
}

/// `ℓ_d = 2^(d-1) + d - 1`, the least value `f` maps to `d`.
///
/// # Panics
/// Panics for `d = 0` or `d > 127`.
pub fn ell(d: usize) -> u128 {
    assert!((1..=127).contains(&d), "ell(d) needs 1 <= d <= 127, got {d}");
    (1u128 << (d - 1)) + d as u128 - 1
}

/// `true` when `x = ℓ_{f(x)}`.
pub fn at_ell(x: usize) -> bool {
    x >= 1 && ell(f_int(x)) == x as u128
}

/// `k(f(n/k) + 1) - 1`, the chromatic upper bound on `τ` for order `n` and `k` colours.
pub fn chromatic_formula(n: usize, k: usize) -> Result<usize> {
    if k == 0 || n < k {
        return Err(Error::InvalidParameter(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(k * (f_of(Rational::new(n as u64, k as u64)?)? + 1) - 1)
}

/// Bound for planar graphs of order `n >= 1`: the chromatic formula with `k = 4`
/// (or `k = n` for fewer than four vertices).
pub fn planar_bound(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidParameter("planar_bound needs n >= 1".into()));
    }
    chromatic_formula(n, n.min(4))
}

/// `4⌈log₂ n⌉ - 5`, the closed-form cap on [`planar_bound`] (as a signed value; negative for `n <= 2`).
pub fn planar_log_cap(n: usize) -> i64 {
    4 * crate::resolve::ceil_log2(n) as i64 - 5
}

/// Smallest `d₀ >= 1` with `2^(d₀-2) + 1 > k`.
pub fn sharpness_min_d(k: usize) -> usize {
    // 2^(d-2) + 1 > k  <=>  2^(d-2) >= k for integer d >= 2; d = 1 gives 1.5 > k only for k = 1
    if k <= 1 {
        return 1;
    }
    (2..).find(|&d| (1u128 << (d - 2)) + 1 > k as u128).expect("unbounded")
}

/// Part sizes `[ℓ_d + 1, ℓ_{d+1} + 1, …, ℓ_{d+1} + 1]` (`k` parts) on which the
/// chromatic bound is attained.
pub fn sharpness_family(k: usize, d: usize) -> Result<PartitionSizes> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("sharpness family needs k >= 2, got {k}")));
    }
    let d0 = sharpness_min_d(k);
    if d < d0 {
        return Err(Error::InvalidParameter(format!("sharpness family needs d >= {d0} for k = {k}, got {d}")));
    }
    let to_usize = |x: u128| usize::try_from(x).map_err(|_| Error::InvalidParameter(format!("d = {d} is too large")));
    let mut sizes = vec![to_usize(ell(d) + 1)?];
    sizes.extend(std::iter::repeat_n(to_usize(ell(d + 1) + 1)?, k - 1));
    PartitionSizes::new(sizes)
}
