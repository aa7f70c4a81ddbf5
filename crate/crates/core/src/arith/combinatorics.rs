use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Product of the consecutive integers `lo..=hi`; 1 when the range is empty.
pub fn falling_product(lo: u64, hi: u64) -> BigInt {
    (lo..=hi).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    // Each partial product C(n-k+i, i) is an integer, so the division is exact.
    (1..=k).fold(BigInt::one(), |acc, i| acc * (n - k + i) / i)
}

/// Stirling number of the second kind via `S(d,j) = j S(d-1,j) + S(d-1,j-1)`.
pub fn stirling2(d: u32, j: u32) -> BigInt {
    if j > d {
        return BigInt::zero();
    }
    // row[i] holds S(row_index, i) for i in 0..=j
    let j = j as usize;
    let mut row = vec![BigInt::zero(); j + 1];
    row[0] = BigInt::one();
    for r in 1..=d as usize {
        let top = r.min(j);
        for i in (1..=top).rev() {
            let carried = std::mem::take(&mut row[i]) * i;
            row[i] = carried + &row[i - 1];
        }
        row[0] = BigInt::zero();
    }
    row.swap_remove(j)
}

/// Inclusion-exclusion form `(1/j!) sum_i (-1)^(j-i) C(j,i) i^d`.
///
/// Fails if the alternating sum is not divisible by `j!`.
pub fn stirling2_oracle(d: u32, j: u32) -> Result<BigInt> {
    let mut sum = BigInt::zero();
    for i in 0..=j {
        let term = binomial(j, i) * num_traits::pow(BigInt::from(i), d as usize);
        if (j - i).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, r) = sum.div_rem(&factorial(j));
    if !r.is_zero() {
        return Err(Error::InexactDivision("stirling2_oracle"));
    }
    Ok(q)
}

/// Non-negative gcd of a nonempty list; zero iff every entry is zero.
pub fn gcd_list(values: &[BigInt]) -> Result<BigInt> {
    let (first, rest) = values.split_first().ok_or(Error::EmptyList)?;
    Ok(rest.iter().fold(first.abs(), |acc, v| acc.gcd(v)))
}
