//! The restricted-index sums for `ch(x^2)`, `ch(x^3)` and `ch(x^top)` evaluated
//! exactly as printed, plus the printed coefficient tables that the `theta` and
//! `beta_k` computations quote directly.
//!
//! These disagree with the true Chern character in several places. They exist
//! so the disagreement can be measured, never to feed the default pipeline.

use num_traits::{One, Zero};

use super::closed_form;
use crate::arith::{inv_factorial, rat, rat_int, BigRat};
use crate::error::{Error, Result};

/// Printed value of the coefficient of `t^d` in `ch(x^j)`, `1 <= j <= d`.
pub(super) fn ch_coeff(d: u32, j: u32) -> Result<BigRat> {
    if j == 1 {
        return Ok(inv_factorial(d));
    }
    if d.is_multiple_of(2) {
        return Err(Error::PaperSumUndefined { d, j });
    }
    match j {
        2 => Ok(a_sum(d)),
        3 => Ok(b_sum(d)),
        _ if j == d => Ok(c_sum(d)),
        _ => Err(Error::PaperSumUndefined { d, j }),
    }
}

/// `sum_{i=1}^{N} 1 / (i! (d-i)!)` with `d = 2N + 1`: only the compositions
/// with a short first part.
pub fn a_sum(d: u32) -> BigRat {
    let half = (d - 1) / 2;
    (1..=half)
        .map(|i| inv_factorial(i) * inv_factorial(d - i))
        .sum()
}

/// `sum_{r=1}^{N-1} ch_r(x) sum_{i1+i2=d-r, r<=i1<=i2} ch_{i1}(x) ch_{i2}(x)`
/// `+ sum_{i1+i2=d} ch_{i1}(x) ch_{i2}(x^2)`.
pub fn b_sum(d: u32) -> BigRat {
    let half = (d - 1) / 2;
    let mut total = BigRat::zero();
    for r in 1..half {
        let rest = d - r;
        let inner: BigRat = (r..=rest / 2)
            .map(|i1| inv_factorial(i1) * inv_factorial(rest - i1))
            .sum();
        total += inv_factorial(r) * inner;
    }
    for i1 in 1..d {
        total += inv_factorial(i1) * closed_form(d - i1, 2);
    }
    total
}

/// Top-power sum. The `r`-th printed term is `ch_r(x^r)` times a sum over
/// nondecreasing tuples (length `2N` for `r = 1`, `N + 1 - r` otherwise; parts
/// at least `r`; total `d - r`) of products `ch_i(x^i)`, each equal to 1.
pub fn c_sum(d: u32) -> BigRat {
    let half = (d - 1) / 2;
    let leading = |i: u32| closed_form(i, i);
    let mut total = BigRat::zero();
    for r in 1..=half {
        let parts = if r == 1 { 2 * half } else { half + 1 - r };
        let tuples = count_nondecreasing(d - r, parts, r);
        total += leading(r) * rat_int(tuples);
    }
    total
}

/// Number of nondecreasing tuples of `parts` integers, each `>= min`, summing to `sum`.
fn count_nondecreasing(sum: u32, parts: u32, min: u32) -> u64 {
    if parts == 0 {
        return u64::from(sum == 0);
    }
    (min..=sum)
        .take_while(|&first| first * parts <= sum)
        .map(|first| count_nondecreasing(sum - first, parts - 1, first))
        .sum()
}

/// Printed `t^3` coefficients of `ch(x^power)` used for the `theta` image
/// (degree `2(n-m)+1` part of `zeta (x) x^power`, divided by the suspension factor).
pub fn theta_t3_coeff(power: u32) -> Option<BigRat> {
    match power {
        1 => Some(rat(1, 6)),
        2 => Some(rat(1, 2)),
        3 => Some(rat_int(2)),
        _ => None,
    }
}

/// Printed Chern-class magnitudes `(g1, g2)` of `c'(theta_1)`, `c'(theta_2)`
/// as multiples of `(2P-1)!`, `P = n - m + 1`.
pub fn beta_table(p: u32) -> (BigRat, BigRat) {
    if p.is_multiple_of(2) {
        (rat(1, 6), rat_int(2))
    } else {
        (rat(1, 3), BigRat::one())
    }
}

/// The stated single generator of `Im beta_1`, as a multiple of `(2P-1)!`.
pub fn beta_stated_generator(p: u32) -> BigRat {
    if p.is_multiple_of(2) {
        rat(1, 6)
    } else {
        rat(1, 12)
    }
}
