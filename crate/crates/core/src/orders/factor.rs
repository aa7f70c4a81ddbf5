use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// Prime factorization of a positive integer.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Factorization {
    exponents: BTreeMap<u64, u32>,
}

impl Factorization {
    /// Trial division; meant for the small consecutive factors of a modulus.
    pub fn of_u64(mut value: u64) -> Self {
        assert!(value > 0, "cannot factor zero");
        let mut out = Factorization::default();
        let mut p = 2u64;
        while p * p <= value {
            while value.is_multiple_of(p) {
                *out.exponents.entry(p).or_insert(0) += 1;
                value /= p;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if value > 1 {
            *out.exponents.entry(value).or_insert(0) += 1;
        }
        out
    }

    /// Factorization of a product, merged from the factors' factorizations.
    pub fn of_product(factors: impl IntoIterator<Item = u64>) -> Self {
        factors
            .into_iter()
            .fold(Factorization::default(), |mut acc, f| {
                acc.absorb(&Factorization::of_u64(f));
                acc
            })
    }

    pub fn absorb(&mut self, other: &Factorization) {
        for (&p, &e) in &other.exponents {
            *self.exponents.entry(p).or_insert(0) += e;
        }
    }

    pub fn exponents(&self) -> &BTreeMap<u64, u32> {
        &self.exponents
    }

    pub fn value(&self) -> BigInt {
        self.exponents.iter().fold(BigInt::one(), |acc, (&p, &e)| {
            acc * num_traits::pow(BigInt::from(p), e as usize)
        })
    }

    /// `tau`, the number of positive divisors.
    pub fn divisor_count(&self) -> BigInt {
        self.exponents
            .values()
            .fold(BigInt::one(), |acc, &e| acc * (e + 1))
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<BigInt> {
        let mut divs = vec![BigInt::one()];
        for (&p, &e) in &self.exponents {
            let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
            for d in &divs {
                let mut power = d.clone();
                next.push(power.clone());
                for _ in 0..e {
                    power *= p;
                    next.push(power.clone());
                }
            }
            divs = next;
        }
        divs.sort();
        divs
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}
