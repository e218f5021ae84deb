//! Exact integer number theory: 2-adic valuation, totient, Möbius, divisors,
//! Ramanujan sums and Ramanujan sine sums.
//!
//! Every closed form works in integer arithmetic. The two `*_oracle`
//! functions evaluate the defining trigonometric sums in `f64` and exist to
//! cross-check the closed forms.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest supported argument.
pub const MAX_ARG: u64 = 1 << 30;

/// Rounding tolerance for the floating-point oracles.
pub const ORACLE_TOL: f64 = 1e-6;

/// Exponent of the largest power of two dividing a positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation(pub u32);

impl Valuation {
    pub fn value(self) -> u32 {
        self.0
    }
}

fn check_arg(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Zero)
    } else if n > MAX_ARG {
        Err(Error::OutOfRange(n))
    } else {
        Ok(())
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// 2-adic valuation of `n`.
pub fn nu2(n: u64) -> Result<Valuation> {
    if n == 0 {
        return Err(Error::Zero);
    }
    Ok(Valuation(n.trailing_zeros()))
}

/// 2-adic valuation of a nonzero signed integer; `None` for zero.
pub fn nu2_signed(x: i64) -> Option<u32> {
    if x == 0 {
        None
    } else {
        Some(x.unsigned_abs().trailing_zeros())
    }
}

/// Splits `n = 2^t * m` with `m` odd.
pub fn split_two(n: u64) -> (u32, u64) {
    debug_assert!(n != 0);
    let t = n.trailing_zeros();
    (t, n >> t)
}

/// Distinct prime factors with multiplicity, by trial division.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> Result<u64> {
    check_arg(n)?;
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

pub fn moebius(n: u64) -> Result<i64> {
    check_arg(n)?;
    let mut mu = 1;
    for (_, k) in factorize(n) {
        if k > 1 {
            return Ok(0);
        }
        mu = -mu;
    }
    Ok(mu)
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    check_arg(n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `c_n(q)` with `q = 0` allowed (`c_n(0) = phi(n)`).
pub(crate) fn ramanujan_sum_any(n: u64, q: u64) -> i64 {
    let g = gcd(n, q);
    let k = n / g;
    // n <= 2^30 keeps every intermediate well inside i64.
    let mu = moebius(k).expect("k divides a checked n");
    if mu == 0 {
        return 0;
    }
    let phi_n = euler_phi(n).expect("checked n") as i64;
    let phi_k = euler_phi(k).expect("k divides a checked n") as i64;
    mu * (phi_n / phi_k)
}

/// Ramanujan's sum `c_n(q) = mu(n/(n,q)) phi(n) / phi(n/(n,q))`.
pub fn ramanujan_sum(n: u64, q: u64) -> Result<i64> {
    check_arg(n)?;
    check_arg(q)?;
    Ok(ramanujan_sum_any(n, q))
}

fn round_checked(value: f64) -> Result<i64> {
    let r = libm::round(value);
    let residual = libm::fabs(value - r);
    if residual >= ORACLE_TOL {
        return Err(Error::NonIntegerResidual { value, residual });
    }
    Ok(r as i64)
}

/// `2*pi*a*q/n` with the product reduced mod `n` first.
fn angle(a: u64, q: u64, n: u64) -> f64 {
    let k = ((a as u128 * q as u128) % n as u128) as f64;
    2.0 * PI * k / n as f64
}

/// Literal cosine sum over residues coprime to `n`, rounded.
pub fn ramanujan_sum_oracle(n: u64, q: u64) -> Result<i64> {
    check_arg(n)?;
    check_arg(q)?;
    let sum: f64 = (1..=n)
        .filter(|&a| gcd(a, n) == 1)
        .map(|a| libm::cos(angle(a, q, n)))
        .sum();
    round_checked(sum)
}

/// `c_n(q)` through the factorisation `c_{2^t}(q) c_m(q')` for even `n`.
pub fn ramanujan_sum_2adic(n: u64, q: u64) -> Result<i64> {
    check_arg(n)?;
    check_arg(q)?;
    let (t, m) = split_two(n);
    if t == 0 {
        return Err(Error::OddModulus(n));
    }
    let step = 1u64 << (t - 1);
    if !q.is_multiple_of(step) {
        return Ok(0);
    }
    let sign = if (q / step).is_multiple_of(2) { 1 } else { -1 };
    let (_, q_odd) = split_two(q);
    Ok(sign * step as i64 * ramanujan_sum_any(m, q_odd))
}

/// Ramanujan's sine sum `s_n(q)` for `4 | n`, via its odd-part closed form.
///
/// With `n = 2^t m` and `x = q / 2^(t-2)`, the sum vanishes unless `x` is an
/// odd integer; otherwise it is
/// `(-1)^((m-1)/2) (-1)^((x+1)/2) 2^(t-1) c_m(x)`.
pub fn ramanujan_sine_sum(n: u64, q: u64) -> Result<i64> {
    check_arg(n)?;
    check_arg(q)?;
    if !n.is_multiple_of(4) {
        return Err(Error::NotDivisibleByFour(n));
    }
    let (t, m) = split_two(n);
    Ok(sine_sum_core(t, m, q))
}

/// Closed form of `s_{2^t m}(q)` (`t >= 2`, `m` odd); `q = 0` gives 0.
pub(crate) fn sine_sum_core(t: u32, m: u64, q: u64) -> i64 {
    let step = 1u64 << (t - 2);
    if q == 0 || !q.is_multiple_of(step) {
        return 0;
    }
    let x = q / step;
    if x.is_multiple_of(2) {
        return 0;
    }
    let s1 = if ((m - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let s2 = if x.div_ceil(2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    s1 * s2 * (1i64 << (t - 1)) * ramanujan_sum_any(m, x)
}

/// Literal `-2 * sum sin(2 pi a q / n)` over `a` coprime to `n`, `a = 1 mod 4`.
pub fn ramanujan_sine_sum_oracle(n: u64, q: u64) -> Result<i64> {
    check_arg(n)?;
    check_arg(q)?;
    if !n.is_multiple_of(4) {
        return Err(Error::NotDivisibleByFour(n));
    }
    let sum: f64 = (1..n)
        .filter(|&a| a % 4 == 1 && gcd(a, n) == 1)
        .map(|a| -2.0 * libm::sin(angle(a, q, n)))
        .sum();
    round_checked(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn phi_brute(n: u64) -> u64 {
        (1..=n).filter(|&a| gcd(a, n) == 1).count() as u64
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(nu2(8), Ok(Valuation(3)));
        assert_eq!(nu2(1), Ok(Valuation(0)));
        assert_eq!(nu2(12), Ok(Valuation(2)));
        assert_eq!(nu2(0), Err(Error::Zero));
        assert_eq!(nu2_signed(-12), Some(2));
        assert_eq!(nu2_signed(0), None);
    }

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(1), Ok(1));
        assert_eq!(euler_phi(9), Ok(phi_brute(9)));
        assert_eq!(euler_phi(9), Ok(6));
        for p in [2u64, 3, 5, 7, 11, 13, 31] {
            assert_eq!(euler_phi(p), Ok(p - 1));
        }
        assert_eq!(euler_phi(0), Err(Error::Zero));
        for n in 1..300 {
            assert_eq!(euler_phi(n).unwrap(), phi_brute(n), "n = {n}");
        }
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), Ok(1));
        assert_eq!(moebius(12), Ok(0));
        assert_eq!(moebius(6), Ok(1));
        assert_eq!(moebius(30), Ok(-1));
        assert_eq!(moebius(0), Err(Error::Zero));
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(8).unwrap(), vec![1, 2, 4, 8]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(36).unwrap(), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(0).is_err());
        assert_eq!(divisors(MAX_ARG + 1), Err(Error::OutOfRange(MAX_ARG + 1)));
    }

    #[test]
    fn ramanujan_examples() {
        for q in 1..20 {
            assert_eq!(ramanujan_sum(1, q), Ok(1));
        }
        assert_eq!(ramanujan_sum(4, 2), Ok(-2));
        assert_eq!(ramanujan_sum(6, 1), Ok(1));
        assert_eq!(ramanujan_sum_oracle(1, 1), Ok(1));
        assert_eq!(ramanujan_sum_oracle(4, 2), Ok(-2));
        assert_eq!(ramanujan_sum_oracle(6, 1), Ok(1));
        assert_eq!(ramanujan_sum_any(12, 0), 4);
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(ramanujan_sum_2adic(4, 2), Ok(-2));
        assert_eq!(ramanujan_sum_2adic(8, 1), Ok(0));
        assert_eq!(ramanujan_sum_2adic(8, 4), Ok(-4));
        assert_eq!(ramanujan_sum_oracle(8, 4), Ok(-4));
        assert_eq!(ramanujan_sum_2adic(9, 4), Err(Error::OddModulus(9)));
    }

    #[test]
    fn sine_sum_examples() {
        assert_eq!(ramanujan_sine_sum(4, 1), Ok(-2));
        assert_eq!(ramanujan_sine_sum(8, 2), Ok(-4));
        assert_eq!(ramanujan_sine_sum(8, 4), Ok(0));
        assert_eq!(ramanujan_sine_sum_oracle(4, 1), Ok(-2));
        assert_eq!(ramanujan_sine_sum_oracle(8, 2), Ok(-4));
        assert_eq!(ramanujan_sine_sum(6, 1), Err(Error::NotDivisibleByFour(6)));
        assert_eq!(
            ramanujan_sine_sum_oracle(10, 1),
            Err(Error::NotDivisibleByFour(10))
        );
    }

    #[test]
    fn oracle_flags_non_integers() {
        assert!(matches!(
            round_checked(0.5),
            Err(Error::NonIntegerResidual { .. })
        ));
        assert_eq!(round_checked(2.0 - 1e-9), Ok(2));
    }

    #[test]
    fn prime_power_cases() {
        let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
        for &p in &primes {
            for q in 1..=200 {
                let expect = if q % p == 0 { p as i64 - 1 } else { -1 };
                assert_eq!(ramanujan_sum(p, q).unwrap(), expect);
            }
            for k in 2..=4u32 {
                let pk = p.pow(k);
                let pk1 = p.pow(k - 1);
                for q in 1..=200 {
                    let expect = if q % pk1 != 0 {
                        0
                    } else if q % pk != 0 {
                        -(pk1 as i64)
                    } else {
                        ((p - 1) * pk1) as i64
                    };
                    assert_eq!(ramanujan_sum(pk, q).unwrap(), expect, "p^k = {pk}, q = {q}");
                }
            }
        }
    }

    #[test]
    fn multiplicative_and_periodic() {
        for m in 1..=40u64 {
            for n in 1..=40u64 {
                if gcd(m, n) != 1 {
                    continue;
                }
                for q in 1..=100 {
                    assert_eq!(
                        ramanujan_sum(m, q).unwrap() * ramanujan_sum(n, q).unwrap(),
                        ramanujan_sum(m * n, q).unwrap()
                    );
                }
            }
        }
        for n in 1..=60u64 {
            for q in 1..=180u64 {
                let reduced = (q - 1) % n + 1;
                assert_eq!(ramanujan_sum(n, q), ramanujan_sum(n, reduced));
            }
        }
    }
}
