//! Group orders and gauge-group classification invariants.
//!
//! Every group here is cyclic, presented as `Z / gZ` for a subgroup `gZ`
//! produced by [`crate::chern::im_subgroup`]. Throughout, `t` is the integer
//! `(2n+1)(2n)...(2n-2m+2)` and `D` the gauge modulus built from it.

mod factor;

pub use factor::Factorization;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorial, falling_product};
use crate::chern::{beta_k_generators, im_subgroup, psi_generators, theta_generators, ChMode};
use crate::error::{require_m_lt_n, Error, Result};

/// The subgroup `gZ` of the integers, `g >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZSubgroup {
    generator: BigInt,
}

impl ZSubgroup {
    pub fn new(generator: BigInt) -> Self {
        ZSubgroup {
            generator: generator.abs(),
        }
    }

    pub fn generator(&self) -> &BigInt {
        &self.generator
    }

    pub fn is_zero(&self) -> bool {
        self.generator.is_zero()
    }

    pub fn contains(&self, value: &BigInt) -> bool {
        if self.is_zero() {
            value.is_zero()
        } else {
            value.is_multiple_of(&self.generator)
        }
    }

    pub fn is_subgroup_of(&self, other: &ZSubgroup) -> bool {
        other.contains(&self.generator)
    }
}

/// A finite cyclic group, recorded by its order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicGroup {
    order: BigInt,
}

impl CyclicGroup {
    pub fn of_order(order: BigInt) -> Result<Self> {
        if order < BigInt::one() {
            return Err(Error::ZeroGenerator);
        }
        Ok(CyclicGroup { order })
    }

    /// `Z / gZ`; fails for the zero subgroup.
    pub fn quotient(sub: &ZSubgroup) -> Result<Self> {
        Self::of_order(sub.generator().clone())
    }

    pub fn trivial() -> Self {
        CyclicGroup {
            order: BigInt::one(),
        }
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn into_order(self) -> BigInt {
        self.order
    }
}

impl fmt::Display for CyclicGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}", self.order)
    }
}

/// Which parity case of the classification a pair `(m, n)` falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityBranch {
    /// `D = 4t`
    MEvenNEven,
    /// `D = t`
    MEvenNOdd,
    /// `D = 2t`
    MOdd,
}

impl ParityBranch {
    pub fn of(m: u32, n: u32) -> Self {
        match (m.is_multiple_of(2), n.is_multiple_of(2)) {
            (true, true) => ParityBranch::MEvenNEven,
            (true, false) => ParityBranch::MEvenNOdd,
            (false, _) => ParityBranch::MOdd,
        }
    }

    /// `D / t`
    pub fn multiplier(self) -> u64 {
        match self {
            ParityBranch::MEvenNEven => 4,
            ParityBranch::MEvenNOdd => 1,
            ParityBranch::MOdd => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ParityBranch::MEvenNEven => "m_even_n_even:4t",
            ParityBranch::MEvenNOdd => "m_even_n_odd:t",
            ParityBranch::MOdd => "m_odd:2t",
        }
    }
}

/// Classification data for the gauge group `G_{k,m}(Sp(n))` over `S^{4m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeParams {
    pub m: u32,
    pub n: u32,
    pub k: BigInt,
    pub t: BigInt,
    pub modulus: BigInt,
}

impl GaugeParams {
    pub fn new(m: u32, n: u32, k: BigInt) -> Result<Self> {
        require_m_lt_n(m, n)?;
        let t = gauge_t(m, n);
        let modulus = &t * ParityBranch::of(m, n).multiplier();
        Ok(GaugeParams {
            m,
            n,
            k,
            t,
            modulus,
        })
    }

    pub fn branch(&self) -> ParityBranch {
        ParityBranch::of(self.m, self.n)
    }

    /// `(k, D)`, with `(0, D) = D`.
    pub fn invariant(&self) -> BigInt {
        self.k.abs().gcd(&self.modulus)
    }
}

/// `t = (2n+1)(2n)...(2n-2m+2)`, the product of the `2m` integers below `2n+2`.
pub fn gauge_t(m: u32, n: u32) -> BigInt {
    falling_product(u64::from(2 * n - 2 * m + 2), u64::from(2 * n + 1))
}

/// Order of the Samelson product `<epsilon_{m,n}, epsilon_{m,n}>`, computed as
/// the order of `coker psi`.
pub fn samelson_order(m: u32, n: u32, mode: ChMode) -> Result<CyclicGroup> {
    let image = psi_generators(m, n, mode)?;
    CyclicGroup::quotient(&im_subgroup(&image))
}

/// `(2n+1)!/(2n-2m+1)!`, doubled when `m` is odd.
pub fn samelson_order_formula(m: u32, n: u32) -> Result<CyclicGroup> {
    require_m_lt_n(m, n)?;
    let base = factorial(2 * n + 1) / factorial(2 * (n - m) + 1);
    let order = if m.is_multiple_of(2) { base } else { base * 2 };
    CyclicGroup::of_order(order)
}

/// `[Sigma^{4m-1} Q_{n-m+1}, Sp(n)] = Z / Im psi`; same order as the Samelson product.
pub fn mapping_group_order(m: u32, n: u32, mode: ChMode) -> Result<CyclicGroup> {
    samelson_order(m, n, mode)
}

/// `[Sigma^{4n-5} Q_2, Sp(n)] = coker psi'`.
pub fn q2_group_order(n: u32, mode: ChMode) -> Result<CyclicGroup> {
    require_n_at_least_2(n)?;
    let image = theta_generators(0, n, mode)?;
    CyclicGroup::quotient(&im_subgroup(&image))
}

/// `(2/3!)(2n+1)!` for `n` even, `(1/3!)(2n+1)!` for `n` odd.
pub fn q2_group_order_formula(n: u32) -> Result<CyclicGroup> {
    require_n_at_least_2(n)?;
    let f = factorial(2 * n + 1);
    let order = if n.is_multiple_of(2) { f / 3 } else { f / 6 };
    CyclicGroup::of_order(order)
}

fn require_n_at_least_2(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("requires n >= 2 (got n={n})")));
    }
    Ok(())
}

/// `D`: `4t` if `m, n` are both even, `t` if `m` even and `n` odd, `2t` if `m` odd.
pub fn gauge_modulus(m: u32, n: u32) -> Result<BigInt> {
    Ok(GaugeParams::new(m, n, BigInt::zero())?.modulus)
}

/// `(k, D)`.
pub fn gauge_invariant(m: u32, n: u32, k: &BigInt) -> Result<BigInt> {
    Ok(GaugeParams::new(m, n, k.clone())?.invariant())
}

/// Necessary condition for `G_{k,m}(Sp(n)) ~ G_{k',m}(Sp(n))`. A `false`
/// certifies the two gauge groups are not homotopy equivalent; `true` proves
/// nothing.
pub fn gauge_necessary_equiv(m: u32, n: u32, k: &BigInt, k_prime: &BigInt) -> Result<bool> {
    Ok(gauge_invariant(m, n, k)? == gauge_invariant(m, n, k_prime)?)
}

/// Factors `D` from its consecutive factors `2n-2m+2 ..= 2n+1` and the parity
/// multiplier, never factoring `D` itself.
pub fn modulus_factorization(m: u32, n: u32) -> Result<Factorization> {
    require_m_lt_n(m, n)?;
    let lo = u64::from(2 * n - 2 * m + 2);
    let hi = u64::from(2 * n + 1);
    let multiplier = ParityBranch::of(m, n).multiplier();
    Ok(Factorization::of_product(
        (lo..=hi).chain(std::iter::once(multiplier)),
    ))
}

/// `tau(D)`: the number of distinct values of `(k, D)` over all `k`, a lower
/// bound on the number of homotopy types.
pub fn count_invariant_classes(m: u32, n: u32) -> Result<BigInt> {
    Ok(modulus_factorization(m, n)?.divisor_count())
}

/// `|Im (alpha_k)_*|` inside `[Sigma^{4n-5} Q_2, Sp(n)] = Z/M`.
///
/// `PaperLiteral` evaluates the printed formula `(2n+1)! / (c (k, D))` with
/// `c = 3` for `n` even and `c = 6` for `n` odd. The other modes take the
/// generator `g` of `Im beta_1` and return the order of `g|k|` in `Z/M`.
pub fn im_alpha_k(m: u32, n: u32, k: &BigInt, mode: ChMode) -> Result<CyclicGroup> {
    let params = GaugeParams::new(m, n, k.clone())?;
    match mode {
        ChMode::PaperLiteral => {
            let c = if n.is_multiple_of(2) { 3 } else { 6 };
            let denom = params.invariant() * c;
            let (order, rem) = factorial(2 * n + 1).div_rem(&denom);
            if !rem.is_zero() {
                return Err(Error::NonIntegral {
                    label: "printed |Im (alpha_k)_*|".into(),
                    value: format!("{}/{}", factorial(2 * n + 1), denom),
                });
            }
            CyclicGroup::of_order(order)
        }
        _ => {
            let total = q2_group_order(n, mode)?.into_order();
            let image = beta_image_generator(m, n, k, mode)?;
            CyclicGroup::of_order(&total / total.gcd(&image))
        }
    }
}

/// `Im beta_k / Im psi'`, defined only when `Im psi'` lies inside `Im beta_k`.
/// Agrees with [`im_alpha_k`] whenever it is `Some`.
pub fn im_alpha_k_quotient(
    m: u32,
    n: u32,
    k: &BigInt,
    mode: ChMode,
) -> Result<Option<CyclicGroup>> {
    require_m_lt_n(m, n)?;
    let total = q2_group_order(n, mode)?.into_order();
    let image = ZSubgroup::new(beta_image_generator(m, n, k, mode)?);
    if !ZSubgroup::new(total.clone()).is_subgroup_of(&image) {
        return Ok(None);
    }
    Ok(Some(CyclicGroup::of_order(total / image.generator())?))
}

fn beta_image_generator(m: u32, n: u32, k: &BigInt, mode: ChMode) -> Result<BigInt> {
    Ok(im_subgroup(&beta_k_generators(m, n, k, mode)?)
        .generator()
        .clone())
}

/// `[Sigma^{4n-4(m+1)} Q_2, BG_{k,m}(Sp(n))] = coker (alpha_k)_*`, of order
/// `M / |Im (alpha_k)_*|`.
pub fn gauge_coker_order(m: u32, n: u32, k: &BigInt, mode: ChMode) -> Result<CyclicGroup> {
    let total = q2_group_order(n, mode)?.into_order();
    let image = im_alpha_k(m, n, k, mode)?.into_order();
    let (order, rem) = total.div_rem(&image);
    if !rem.is_zero() {
        return Err(Error::NonIntegral {
            label: "|coker (alpha_k)_*|".into(),
            value: format!("{total}/{image}"),
        });
    }
    CyclicGroup::of_order(order)
}
