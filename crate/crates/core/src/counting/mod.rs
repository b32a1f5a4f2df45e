//! Exact counting: the class recurrences, the rational generating functions,
//! and coefficient extraction.
//!
//! Three independent routes give `|R_n|`, `|R̃_n|` and `|Q_n|`:
//! enumeration ([`count_enumeration`]), recurrence ([`count_recurrence`]) and
//! series expansion ([`series_coeffs`] of [`gf_for`]).
//!
//! The recurrence for `Q` includes a `+1` for `2 ≤ n ≤ r+s`, counting the
//! single path `U·pr_{n-1}((UD)^r (DU)^{s-1})·D`. Without it the recurrence
//! disagrees with enumeration already at `n = 2` for `q = 1/1`; the form
//! without the term is kept as [`count_q_without_prefix_family`].

mod poly;
mod series;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub use poly::Polynomial;
pub use series::RationalSeries;

use crate::classes::{Generator, PathClass};
use crate::error::{Error, Result};
use crate::param::RationalParam;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountSource {
    Enumeration,
    Recurrence,
    Series,
}

impl fmt::Display for CountSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountSource::Enumeration => "enumeration",
            CountSource::Recurrence => "recurrence",
            CountSource::Series => "series",
        })
    }
}

/// Exact counts indexed by `n`, tagged with how they were obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub values: Vec<BigUint>,
    pub source: CountSource,
}

impl CountTable {
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `[1,1,2,3]`
    pub fn to_json(&self) -> String {
        let items: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        format!("[{}]", items.join(","))
    }
}

/// `1,1,2,3`
impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Σ_{k=1}^{upto} x^{k+⌈ks/r⌉}
fn part_powers(q: RationalParam, upto: usize) -> Polynomial {
    Polynomial::sum_of_powers((1..=upto).map(|k| q.part_size(k)))
}

fn series(num: Polynomial, den: Polynomial) -> RationalSeries {
    RationalSeries::new(num, den).expect("denominators built here have constant term 1")
}

/// Generating function of `R^{r/s}` in its reduced form:
/// `(1 - Σ_{k<r} x^{k+⌈ks/r⌉} - 2x^{r+s}) / (1 - x - Σ_{k<r} x^{k+⌈ks/r⌉} - 2x^{r+s} + x^{r+s+1})`.
pub fn delta_gf(q: RationalParam) -> RationalSeries {
    let inner = part_powers(q, q.r_len() - 1);
    let period = q.period();
    let two_top = Polynomial::monomial(2, period);
    let num = &(&Polynomial::one() - &inner) - &two_top;
    let den = &(&(&(&Polynomial::one() - &Polynomial::monomial(1, 1)) - &inner) - &two_top)
        + &Polynomial::monomial(1, period + 1);
    series(num, den)
}

/// The unreduced form
/// `(1 - x^{r+s} - Σ_{k≤r} x^{k+⌈ks/r⌉}) / ((1-x)(1-x^{r+s}) - Σ_{k≤r} x^{k+⌈ks/r⌉})`.
pub fn delta_gf_unreduced(q: RationalParam) -> RationalSeries {
    let sum = part_powers(q, q.r_len());
    let one_minus_top = &Polynomial::one() - &Polynomial::monomial(1, q.period());
    let one_minus_x = Polynomial::from_i64(&[1, -1]);
    let num = &one_minus_top - &sum;
    let den = &(&one_minus_x * &one_minus_top) - &sum;
    series(num, den)
}

/// Generating function of `R̃^{r/s}`:
/// `(1 - Σ_{p≤r} x^{p+⌈ps/r⌉}) / (1 - x - Σ_{p≤r} x^{p+⌈ps/r⌉})`.
pub fn delta_tilde_gf(q: RationalParam) -> RationalSeries {
    let sum = part_powers(q, q.r_len());
    let num = &Polynomial::one() - &sum;
    let den = &(&Polynomial::one() - &Polynomial::monomial(1, 1)) - &sum;
    series(num, den)
}

/// Generating function of `Q^{r/s}`:
/// `(1 + Σ_{j=2}^{r+s} x^j - Σ_{p≤r} x^{p+⌈ps/r⌉}) / (1 - x - Σ_{p≤r} x^{p+⌈ps/r⌉})`.
pub fn chi_gf(q: RationalParam) -> RationalSeries {
    let sum = part_powers(q, q.r_len());
    let family = Polynomial::sum_of_powers(2..=q.period());
    let num = &(&Polynomial::one() + &family) - &sum;
    let den = &(&Polynomial::one() - &Polynomial::monomial(1, 1)) - &sum;
    series(num, den)
}

/// Compositions with parts in `{1} ∪ {p+⌈ps/r⌉ : 1 ≤ p ≤ r}`:
/// `1 / (1 - Σ_{ℓ} x^ℓ)`.
pub fn compositions_gf(q: RationalParam) -> RationalSeries {
    let parts = &Polynomial::monomial(1, 1) + &part_powers(q, q.r_len());
    series(Polynomial::one(), &Polynomial::one() - &parts)
}

pub fn gf_for(q: RationalParam, class: PathClass) -> RationalSeries {
    match class {
        PathClass::R => delta_gf(q),
        PathClass::RTilde => delta_tilde_gf(q),
        PathClass::Q => chi_gf(q),
    }
}

/// Coefficients `0..=order` of a series as counts.
pub fn series_coeffs(series: &RationalSeries, order: usize) -> Result<CountTable> {
    let values = series
        .expand(order)
        .into_iter()
        .enumerate()
        .map(|(index, c)| c.to_biguint().ok_or(Error::NegativeCoefficient { index }))
        .collect::<Result<Vec<_>>>()?;
    Ok(CountTable {
        values,
        source: CountSource::Series,
    })
}

fn recurrence(q: RationalParam, class: PathClass, order: usize, prefix_family: bool) -> CountTable {
    let mut values: Vec<BigUint> = Vec::with_capacity(order + 1);
    values.push(BigUint::one());
    for n in 1..=order {
        let mut next = values[n - 1].clone();
        if prefix_family && (2..=q.period()).contains(&n) {
            next += 1u32;
        }
        let mut max_p = q.max_peaks_within(n - 1);
        if class != PathClass::R {
            max_p = max_p.min(q.r_len());
        }
        for p in 1..=max_p {
            next += &values[n - q.part_size(p)];
        }
        values.push(next);
    }
    CountTable {
        values,
        source: CountSource::Recurrence,
    }
}

/// `w_n`, `w̃_n` or `v_n` for `n = 0..=order`.
pub fn count_recurrence(q: RationalParam, class: PathClass, order: usize) -> CountTable {
    recurrence(q, class, order, class == PathClass::Q)
}

/// The `Q` recurrence without the prefix-family term. Undercounts `Q_n` for
/// `2 ≤ n`; kept to document the discrepancy.
pub fn count_q_without_prefix_family(q: RationalParam, order: usize) -> CountTable {
    recurrence(q, PathClass::Q, order, false)
}

/// Counts by constructive generation.
pub fn count_enumeration(q: RationalParam, class: PathClass, order: usize) -> CountTable {
    let mut gen = Generator::new(q, class);
    let values = (0..=order)
        .map(|n| BigUint::from(gen.level(n).len()))
        .collect();
    CountTable {
        values,
        source: CountSource::Enumeration,
    }
}

/// Checks `Σ_{p≥1} x^{p+⌈ps/r⌉} = Σ_{k=1}^{r} x^{k+⌈ks/r⌉} / (1 - x^{r+s})`
/// coefficientwise up to `order`.
pub fn check_sum_identity(q: RationalParam, order: usize) -> bool {
    let direct = Polynomial::sum_of_powers((1..=q.max_peaks_within(order)).map(|p| q.part_size(p)));
    let folded = series(
        part_powers(q, q.r_len()),
        &Polynomial::one() - &Polynomial::monomial(1, q.period()),
    );
    let expanded = folded.expand(order);
    (0..=order).all(|n| direct.coeff(n) == expanded[n])
}

/// Coefficients of `delta_tilde_gf - 1` against `x · compositions_gf`, up to `order`.
pub fn check_compositions_shift(q: RationalParam, order: usize) -> bool {
    let tilde = delta_tilde_gf(q).expand(order);
    let comps = compositions_gf(q).expand(order);
    (0..=order).all(|n| {
        let lhs = if n == 0 {
            &tilde[0] - 1
        } else {
            tilde[n].clone()
        };
        let rhs = if n == 0 {
            BigInt::zero()
        } else {
            comps[n - 1].clone()
        };
        lhs == rhs
    })
}
