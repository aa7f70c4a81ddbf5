//! Chern character coefficients on `CP^N`, complexification multipliers, and
//! the integer images of the K-theory maps whose cokernels give group orders.
//!
//! Every image lands in a cohomology group isomorphic to `Z`, so an image is
//! recorded as the list of integers its basis elements map to. Signs are
//! dropped throughout: only the generated subgroup matters downstream.

pub mod literal;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{exp_minus_one_pow, factorial, gcd_list, rat_int, stirling2, BigRat};
use crate::error::{require_m_lt_n, Error, Result};
use crate::orders::ZSubgroup;

/// How Chern character coefficients are evaluated.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub enum ChMode {
    /// `j! S(d, j) / d!` from the Stirling recurrence.
    #[default]
    #[serde(rename = "closed")]
    ClosedForm,
    /// Full ordered convolution of `e^t - 1` with itself.
    #[serde(rename = "convolution")]
    Convolution,
    /// The printed restricted sums and coefficient tables. Audit only.
    #[serde(rename = "paper")]
    PaperLiteral,
}

impl ChMode {
    pub const ALL: [ChMode; 3] = [
        ChMode::ClosedForm,
        ChMode::Convolution,
        ChMode::PaperLiteral,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ChMode::ClosedForm => "closed",
            ChMode::Convolution => "convolution",
            ChMode::PaperLiteral => "paper",
        }
    }
}

impl fmt::Display for ChMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ChMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(ChMode::ClosedForm),
            "convolution" => Ok(ChMode::Convolution),
            "paper" => Ok(ChMode::PaperLiteral),
            other => Err(Error::InvalidParams(format!(
                "unknown mode '{other}' (expected closed, convolution or paper)"
            ))),
        }
    }
}

pub(crate) fn closed_form(d: u32, j: u32) -> BigRat {
    BigRat::new(factorial(j) * stirling2(d, j), factorial(d))
}

/// Coefficient of `t^d` in `ch(x^j)` where `x = L - 1` is the reduced Hopf
/// class, i.e. in `(e^t - 1)^j`. Zero for `j > d` in every mode.
pub fn ch_coeff(d: u32, j: u32, mode: ChMode) -> Result<BigRat> {
    if d == 0 || j == 0 {
        return Err(Error::InvalidParams(format!(
            "ch_coeff requires d >= 1 and j >= 1 (got d={d}, j={j})"
        )));
    }
    if j > d {
        return Ok(BigRat::zero());
    }
    match mode {
        ChMode::ClosedForm => Ok(closed_form(d, j)),
        ChMode::Convolution => Ok(exp_minus_one_pow(j, d as usize).coeff(d as usize)),
        ChMode::PaperLiteral => literal::ch_coeff(d, j),
    }
}

/// Multiplier of the complexification `c': KSp~(S^{4k}) -> K~(S^{4k})`:
/// 1 for `k` odd, 2 for `k` even.
pub fn sigma(k: u32) -> u32 {
    if k % 2 == 1 {
        1
    } else {
        2
    }
}

/// A basis element `zeta (x) x^power` of a `KSp^{-2}` group, sitting on the
/// sphere `S^{sphere_dim}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KspGenerator {
    pub index: u32,
    pub sphere_dim: u32,
    pub power: u32,
}

impl KspGenerator {
    /// `xi_i in KSp^{-2}(S^{4(m+i)-2})` paired with `x^{2i-1}`.
    pub fn psi_family(m: u32, i: u32) -> Self {
        KspGenerator {
            index: i,
            sphere_dim: 4 * (m + i) - 2,
            power: 2 * i - 1,
        }
    }

    /// `alpha` (index 1, power 1) and `beta` (index 2, power 3) over
    /// `Sigma^{4(n-m)-5} Q_2`.
    pub fn theta_family(m: u32, n: u32) -> [Self; 2] {
        let q = n - m;
        [
            KspGenerator {
                index: 1,
                sphere_dim: 4 * q - 2,
                power: 1,
            },
            KspGenerator {
                index: 2,
                sphere_dim: 4 * q + 2,
                power: 3,
            },
        ]
    }

    /// `KSp^{-2}(S^{4k-2}) = KSp~(S^{4k})`; returns `k`.
    pub fn quarter_dim(&self) -> u32 {
        (self.sphere_dim + 2) / 4
    }

    pub fn complexification_multiplier(&self) -> u32 {
        sigma(self.quarter_dim())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MapLabel {
    Psi,
    Theta,
    PsiPrime,
    BetaK,
}

impl fmt::Display for MapLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapLabel::Psi => "psi",
            MapLabel::Theta => "theta",
            MapLabel::PsiPrime => "psi'",
            MapLabel::BetaK => "beta_k",
        })
    }
}

/// Integer images of a basis under one of the maps, as coefficients of the top
/// cohomology generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorImage {
    label: MapLabel,
    entries: Vec<BigInt>,
}

impl GeneratorImage {
    /// Takes absolute values; each entry must be an integer.
    pub fn from_rationals(label: MapLabel, values: Vec<BigRat>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyList);
        }
        let entries = values
            .into_iter()
            .map(|v| {
                if v.is_integer() {
                    Ok(v.to_integer().abs())
                } else {
                    Err(Error::NonIntegral {
                        label: label.to_string(),
                        value: v.to_string(),
                    })
                }
            })
            .collect::<Result<_>>()?;
        Ok(GeneratorImage { label, entries })
    }

    pub fn label(&self) -> MapLabel {
        self.label
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }
}

/// `psi(xi_i) = phi(c'(xi_i))` with `phi(f) = (2n+1)! ch_{2n+1}(f)`, for
/// `i = 1..=n-m+1`.
pub fn psi_generators(m: u32, n: u32, mode: ChMode) -> Result<GeneratorImage> {
    require_m_lt_n(m, n)?;
    let scale = rat_int(factorial(2 * n + 1));
    let degree = 2 * (n - m) + 1;
    let values = (1..=n - m + 1)
        .map(|i| {
            let gen = KspGenerator::psi_family(m, i);
            let ch = ch_coeff(degree, gen.power, mode)?;
            Ok(rat_int(gen.complexification_multiplier()) * &scale * ch)
        })
        .collect::<Result<Vec<_>>>()?;
    GeneratorImage::from_rationals(MapLabel::Psi, values)
}

/// `theta(alpha)`, `theta(beta)` on `Sigma^{4(n-m)-5} Q_2`. With `m = 0` this
/// is the image of `psi'` on `Sigma^{4n-5} Q_2`.
///
/// Only the `t^3` coefficients of `ch(x)` and `ch(x^3)` enter, scaled by
/// `(2(n-m)+1)!`.
pub fn theta_generators(m: u32, n: u32, mode: ChMode) -> Result<GeneratorImage> {
    if m >= n {
        return Err(Error::InvalidParams(format!(
            "requires m < n (got m={m}, n={n})"
        )));
    }
    let scale = rat_int(factorial(2 * (n - m) + 1));
    let values = KspGenerator::theta_family(m, n)
        .iter()
        .map(|gen| {
            let ch = match mode {
                ChMode::PaperLiteral => {
                    literal::theta_t3_coeff(gen.power).expect("theta basis uses powers 1 and 3")
                }
                _ => ch_coeff(3, gen.power, mode)?,
            };
            Ok(rat_int(gen.complexification_multiplier()) * &scale * ch)
        })
        .collect::<Result<Vec<_>>>()?;
    let label = if m == 0 {
        MapLabel::PsiPrime
    } else {
        MapLabel::Theta
    };
    GeneratorImage::from_rationals(label, values)
}

/// Images of the basis `theta_1`, `theta_2` of `KSp~(Sigma^2 A)` under
/// `beta_k`, where `A = Sigma^{4n-4m-5} Q_2`.
///
/// With `P = n-m+1`, each entry is `|k| (2P-1)! |ch_{2P}|` read off the
/// suspended class (`c_q = (q-1)! ch_q` on a suspension). `theta_2` comes from
/// the top-cell sphere generator, so its Chern character is the complexification
/// multiplier `sigma(P)`. `theta_1` is the quaternionization of a suspended
/// `c'(a)` whose `y_7` coefficient is `ch_3(x) = 1/3!`; quaternionization doubles
/// it when `P` is odd.
pub fn beta_k_generators(m: u32, n: u32, k: &BigInt, mode: ChMode) -> Result<GeneratorImage> {
    require_m_lt_n(m, n)?;
    let p = n - m + 1;
    let scale = rat_int(factorial(2 * p - 1));
    let (g1, g2) = match mode {
        ChMode::PaperLiteral => literal::beta_table(p),
        _ => (
            rat_int(sigma(p + 1)) * ch_coeff(3, 1, mode)?,
            rat_int(sigma(p)),
        ),
    };
    let k = rat_int(k.abs());
    let values = vec![&k * &scale * g1, &k * &scale * g2];
    GeneratorImage::from_rationals(MapLabel::BetaK, values)
}

/// The subgroup of `Z` generated by an image.
pub fn im_subgroup(image: &GeneratorImage) -> ZSubgroup {
    let g = gcd_list(image.entries()).expect("generator images are nonempty");
    ZSubgroup::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{inv_factorial, rat};

    fn ints(vals: &[i64]) -> Vec<BigInt> {
        vals.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn ch_coeff_examples() {
        for d in 1..10 {
            assert_eq!(
                ch_coeff(d, 1, ChMode::ClosedForm).unwrap(),
                inv_factorial(d)
            );
        }
        for mode in ChMode::ALL {
            assert_eq!(ch_coeff(3, 3, mode).unwrap(), rat_int(1), "{mode}");
        }
        assert_eq!(ch_coeff(3, 2, ChMode::Convolution).unwrap(), rat_int(1));
        assert_eq!(ch_coeff(3, 2, ChMode::PaperLiteral).unwrap(), rat(1, 2));
    }

    #[test]
    fn ch_coeff_zero_above_diagonal_and_bad_input() {
        for mode in ChMode::ALL {
            assert_eq!(ch_coeff(3, 5, mode).unwrap(), BigRat::zero());
        }
        assert!(ch_coeff(0, 1, ChMode::ClosedForm).is_err());
        assert!(ch_coeff(4, 0, ChMode::ClosedForm).is_err());
        assert!(matches!(
            ch_coeff(9, 5, ChMode::PaperLiteral),
            Err(Error::PaperSumUndefined { d: 9, j: 5 })
        ));
    }

    // Printed case lines for the complexification multipliers.
    #[test]
    fn sigma_reproduces_printed_case_tables() {
        for m in 1..8u32 {
            for n in m + 1..m + 8 {
                let first = KspGenerator::psi_family(m, 1).complexification_multiplier();
                let second = KspGenerator::psi_family(m, 2).complexification_multiplier();
                let last = KspGenerator::psi_family(m, n - m + 1).complexification_multiplier();
                let (expect_first, expect_second) = if m % 2 == 0 { (1, 2) } else { (2, 1) };
                assert_eq!(first, expect_first);
                assert_eq!(second, expect_second);
                assert_eq!(last, if n % 2 == 0 { 1 } else { 2 });

                let [alpha, beta] = KspGenerator::theta_family(m, n);
                let (a, b) = match (m % 2 == 0, n % 2 == 0) {
                    (true, true) => (2, 1),
                    (true, false) => (1, 2),
                    (false, true) => (1, 2),
                    (false, false) => (2, 1),
                };
                assert_eq!(alpha.complexification_multiplier(), a, "m={m} n={n}");
                assert_eq!(beta.complexification_multiplier(), b, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn psi_examples() {
        let img = psi_generators(1, 2, ChMode::ClosedForm).unwrap();
        assert_eq!(img.entries(), ints(&[40, 120]).as_slice());
        let img = psi_generators(2, 3, ChMode::ClosedForm).unwrap();
        assert_eq!(img.entries(), ints(&[840, 10080]).as_slice());
        for n in 3..9u32 {
            let img = psi_generators(2, n, ChMode::ClosedForm).unwrap();
            assert_eq!(
                img.entries()[0],
                factorial(2 * n + 1) / factorial(2 * n - 3)
            );
        }
        assert!(psi_generators(3, 3, ChMode::ClosedForm).is_err());
    }

    #[test]
    fn theta_examples() {
        let img = theta_generators(0, 3, ChMode::ClosedForm).unwrap();
        assert_eq!(img.label(), MapLabel::PsiPrime);
        assert_eq!(img.entries(), ints(&[840, 10080]).as_slice());
        for (m, n) in [(2u32, 4u32), (2, 6), (4, 6), (2, 3), (2, 5), (4, 7)] {
            let f = factorial(2 * (n - m) + 1);
            let expected = if n % 2 == 0 { f / 3 } else { f / 6 };
            for mode in ChMode::ALL {
                let g = im_subgroup(&theta_generators(m, n, mode).unwrap());
                assert_eq!(g.generator(), &expected, "m={m} n={n} {mode}");
            }
        }
    }

    #[test]
    fn theta_paper_mode_reproduces_printed_values() {
        // m even, n even: |theta(alpha)| = F/3, |theta(beta)| = 2F.
        let f = factorial(5);
        let img = theta_generators(2, 4, ChMode::PaperLiteral).unwrap();
        assert_eq!(img.entries(), &[&f / 3, &f * 2]);
        // m even, n odd: F/6 and 4F.
        let img = theta_generators(2, 5, ChMode::PaperLiteral).unwrap();
        let f = factorial(7);
        assert_eq!(img.entries(), &[&f / 6, &f * 4]);
    }

    #[test]
    fn beta_k_examples() {
        let one = BigInt::from(1);
        for (m, n) in [(1u32, 2u32), (2, 5), (1, 4)] {
            // P = n-m+1 even
            let f = factorial(2 * (n - m + 1) - 1);
            let img = beta_k_generators(m, n, &one, ChMode::PaperLiteral).unwrap();
            assert_eq!(img.entries(), &[&f / 6, &f * 2]);
        }
        for (m, n) in [(1u32, 3u32), (2, 4)] {
            let f = factorial(2 * (n - m + 1) - 1);
            let img = beta_k_generators(m, n, &one, ChMode::PaperLiteral).unwrap();
            assert_eq!(img.entries(), &[&f / 3, f.clone()]);
        }
        let img = beta_k_generators(1, 3, &BigInt::from(0), ChMode::ClosedForm).unwrap();
        assert_eq!(img.entries(), ints(&[0, 0]).as_slice());
        let img = beta_k_generators(1, 2, &BigInt::from(-7), ChMode::ClosedForm).unwrap();
        assert_eq!(img.entries(), ints(&[7, 84]).as_slice());
    }

    #[test]
    fn beta_closed_form_matches_printed_table() {
        let k = BigInt::from(3);
        for n in 2..12u32 {
            for m in 1..n {
                assert_eq!(
                    beta_k_generators(m, n, &k, ChMode::ClosedForm).unwrap(),
                    beta_k_generators(m, n, &k, ChMode::PaperLiteral).unwrap()
                );
            }
        }
    }

    #[test]
    fn subgroup_from_image() {
        let img = GeneratorImage::from_rationals(MapLabel::Psi, vec![rat_int(0)]).unwrap();
        assert!(im_subgroup(&img).generator().is_zero());
        let img = GeneratorImage::from_rationals(MapLabel::Psi, vec![rat_int(40), rat_int(-120)])
            .unwrap();
        assert_eq!(im_subgroup(&img).generator(), &BigInt::from(40));
        let err = GeneratorImage::from_rationals(MapLabel::Theta, vec![rat(5, 2)]).unwrap_err();
        assert!(matches!(err, Error::NonIntegral { .. }));
        assert_eq!(
            GeneratorImage::from_rationals(MapLabel::Psi, vec![]),
            Err(Error::EmptyList)
        );
    }
}
