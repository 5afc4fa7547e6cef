//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! A [`CycloNumber`] is stored in the power basis 1, z, ..., z^(phi(N)-1) of
//! Q(zeta_N), reduced modulo the N-th cyclotomic polynomial, with rational
//! coefficients in lowest terms. Every value is normalized to the smallest
//! conductor containing it, so equal values have identical representations
//! and derived `Eq`/`Ord`/`Hash` are semantically correct. Operands at
//! distinct conductors are embedded into Q(zeta_lcm) first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::{Error, Result};

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Divisors of n in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed by dividing x^n - 1 by Phi_d for every proper divisor d; results
/// are cached process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic polynomial needs n >= 1");
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); (n + 1) as usize];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        let mut result = num;
        for d in divisors(n) {
            if d == n {
                continue;
            }
            result = exact_div_int_poly(&result, &cyclotomic_polynomial(d));
        }
        result
    };
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials (remainder must vanish).
fn exact_div_int_poly(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[k - dd + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

fn rat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

/// Reduce a rational polynomial modulo Phi_n (in place), truncating to length
/// phi(n).
fn reduce_mod_phi(coeffs: &mut Vec<BigRational>, n: u64) {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1; // = euler_phi(n)
    while coeffs.len() > deg {
        let k = coeffs.len() - 1;
        let c = coeffs[k].clone();
        coeffs.pop();
        if c.is_zero() {
            continue;
        }
        // subtract c * x^(k-deg) * (Phi - x^deg)
        for (j, pj) in phi.iter().enumerate().take(deg) {
            let delta = &c * BigRational::from_integer(pj.clone());
            coeffs[k - deg + j] -= delta;
        }
    }
    coeffs.resize(deg, BigRational::zero());
}

/// An exact element of a cyclotomic field Q(zeta_N).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloNumber {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    pub fn zero() -> Self {
        CycloNumber { conductor: 1, coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        CycloNumber { conductor: 1, coeffs: vec![BigRational::one()] }
    }

    pub fn from_rational(r: BigRational) -> Self {
        CycloNumber { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_integer(i: i64) -> Self {
        Self::from_rational(rat(i))
    }

    /// Build from raw power-basis coefficients in Q(zeta_n); reduces mod Phi_n
    /// and normalizes the conductor.
    pub fn from_coeffs(n: u64, mut coeffs: Vec<BigRational>) -> Self {
        assert!(n >= 1, "conductor must be >= 1");
        reduce_mod_phi(&mut coeffs, n);
        CycloNumber { conductor: n, coeffs }.normalized()
    }

    /// zeta_N^k, the primitive N-th root of unity raised to k.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "root_of_unity needs N >= 1");
        let k = k.rem_euclid(n as i64) as u64;
        let mut coeffs = vec![BigRational::zero(); (k + 1) as usize];
        coeffs[k as usize] = BigRational::one();
        Self::from_coeffs(n, coeffs)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.conductor == 1 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Embed into Q(zeta_m); m must be a multiple of the conductor.
    pub fn embedded(&self, m: u64) -> Vec<BigRational> {
        assert!(m % self.conductor == 0, "embedding target must be a multiple of the conductor");
        let step = m / self.conductor;
        let mut out = vec![BigRational::zero(); (euler_phi(m)) as usize];
        if step == 1 && self.coeffs.len() <= out.len() {
            out[..self.coeffs.len()].clone_from_slice(&self.coeffs);
            return out;
        }
        let mut raw = vec![BigRational::zero(); ((self.coeffs.len() as u64 - 1) * step + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * step as usize] = c.clone();
            }
        }
        reduce_mod_phi(&mut raw, m);
        out[..raw.len()].clone_from_slice(&raw);
        out
    }

    /// Try to lower the conductor by each prime divisor until stable. The
    /// divisor-by-divisor reduction reaches the minimal conductor because
    /// cyclotomic subfields are closed under intersection.
    fn normalized(mut self) -> Self {
        loop {
            let n = self.conductor;
            if n == 1 {
                break;
            }
            let mut reduced = false;
            for p in prime_factors(n) {
                let d = n / p;
                if let Some(coeffs) = project_to_subfield(&self.coeffs, n, d) {
                    self.conductor = d;
                    self.coeffs = coeffs;
                    reduced = true;
                    break;
                }
            }
            if !reduced {
                break;
            }
        }
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let m = self.conductor.lcm(&other.conductor);
        let mut a = self.embedded(m);
        let b = other.embedded(m);
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        CycloNumber { conductor: m, coeffs: a }.normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // common fast path: rational times anything
        if self.conductor == 1 {
            let c = &self.coeffs[0];
            if c.is_zero() {
                return CycloNumber::zero();
            }
            return CycloNumber {
                conductor: other.conductor,
                coeffs: other.coeffs.iter().map(|x| x * c).collect(),
            }
            .normalized();
        }
        if other.conductor == 1 {
            return other.mul(self);
        }
        let m = self.conductor.lcm(&other.conductor);
        let a = self.embedded(m);
        let b = other.embedded(m);
        let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        reduce_mod_phi(&mut prod, m);
        CycloNumber { conductor: m, coeffs: prod }.normalized()
    }

    /// Multiplicative inverse; division by zero is a distinct error value.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(CycloNumber::from_rational(self.coeffs[0].recip()));
        }
        // extended Euclid in Q[x]: s*f + t*Phi = gcd (a nonzero constant)
        let phi: Vec<BigRational> =
            cyclotomic_polynomial(self.conductor).iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let (g, s) = half_ext_gcd(&self.coeffs, &phi);
        assert_eq!(g.len(), 1, "cyclotomic polynomial must be coprime to a nonzero element");
        let ginv = g[0].recip();
        let mut coeffs: Vec<BigRational> = s.iter().map(|c| c * &ginv).collect();
        reduce_mod_phi(&mut coeffs, self.conductor);
        Ok(CycloNumber { conductor: self.conductor, coeffs }.normalized())
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(CycloNumber::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = CycloNumber::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Smallest n >= 1 with self^n = 1, or None when self is not a root of
    /// unity. Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
    pub fn order_as_root_of_unity(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = self.conductor.lcm(&2);
        let one = CycloNumber::one();
        let mut acc = self.clone();
        for n in 1..=bound {
            if bound % n == 0 && acc == one {
                return Some(n);
            }
            if n < bound {
                acc = acc.mul(self);
            }
        }
        None
    }

    pub fn is_root_of_unity(&self) -> bool {
        self.order_as_root_of_unity().is_some()
    }
}

/// Polynomial remainder sequence returning (gcd, s) with s*f ≡ gcd mod phi.
fn half_ext_gcd(f: &[BigRational], phi: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let trim = |v: &mut Vec<BigRational>| {
        while v.len() > 1 && v.last().unwrap().is_zero() {
            v.pop();
        }
    };
    let mut r0: Vec<BigRational> = phi.to_vec();
    let mut r1: Vec<BigRational> = f.to_vec();
    trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![BigRational::zero()];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_div_rem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        trim(&mut r1);
    }
    assert!(r0.len() == 1, "gcd with an irreducible modulus must be constant");
    (r0, s0)
}

fn poly_div_rem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut rem: Vec<BigRational> = num.to_vec();
    if rem.len() <= dd {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = &rem[k] / &lead;
        if !c.is_zero() {
            quot[k - dd] = c.clone();
            for (j, dj) in den.iter().enumerate() {
                let delta = &c * dj;
                rem[k - dd + j] -= delta;
            }
        }
    }
    rem.truncate(dd.max(1));
    while rem.len() > 1 && rem.last().unwrap().is_zero() {
        rem.pop();
    }
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

/// Attempt to express an element of Q(zeta_n) in Q(zeta_d), d | n. Returns the
/// coefficient vector over the power basis of zeta_d on success. Embedding
/// matrices are cached per (n, d).
fn project_to_subfield(coeffs: &[BigRational], n: u64, d: u64) -> Option<Vec<BigRational>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Vec<Vec<BigRational>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let cols = {
        let mut guard = cache.lock().unwrap();
        guard
            .entry((n, d))
            .or_insert_with(|| {
                let phid = euler_phi(d) as usize;
                (0..phid)
                    .map(|j| {
                        let mut raw = vec![BigRational::zero(); j * (n / d) as usize + 1];
                        let len = raw.len();
                        raw[len - 1] = BigRational::one();
                        reduce_mod_phi(&mut raw, n);
                        raw
                    })
                    .collect()
            })
            .clone()
    };
    // Solve cols * y = coeffs by Gaussian elimination on the augmented system.
    let rows = euler_phi(n) as usize;
    let ncols = cols.len();
    let mut aug: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<BigRational> = (0..ncols).map(|c| cols[c][r].clone()).collect();
            row.push(coeffs[r].clone());
            row
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut r0 = 0;
    for c in 0..ncols {
        let Some(pr) = (r0..rows).find(|&r| !aug[r][c].is_zero()) else {
            // The embedding matrix has full column rank, so this cannot happen.
            unreachable!("cyclotomic embedding matrix lost rank");
        };
        aug.swap(r0, pr);
        let inv = aug[r0][c].recip();
        for x in aug[r0].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != r0 && !aug[r][c].is_zero() {
                let f = aug[r][c].clone();
                for j in 0..=ncols {
                    let delta = &f * &aug[r0][j];
                    aug[r][j] -= delta;
                }
            }
        }
        pivot_rows.push(r0);
        r0 += 1;
    }
    // Consistent iff all remaining rows have zero RHS.
    for r in r0..rows {
        if !aug[r][ncols].is_zero() {
            return None;
        }
    }
    let mut y = vec![BigRational::zero(); ncols];
    for (c, &pr) in pivot_rows.iter().enumerate() {
        y[c] = aug[pr][ncols].clone();
    }
    Some(y)
}

impl std::fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => format!("{c}"),
                1 => {
                    if c.is_one() {
                        format!("z{}", self.conductor)
                    } else if (-c).is_one() {
                        format!("-z{}", self.conductor)
                    } else {
                        format!("{}*z{}", c, self.conductor)
                    }
                }
                _ => {
                    if c.is_one() {
                        format!("z{}^{}", self.conductor, i)
                    } else if (-c).is_one() {
                        format!("-z{}^{}", self.conductor, i)
                    } else {
                        format!("{}*z{}^{}", c, self.conductor, i)
                    }
                }
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut s = parts[0].clone();
        for t in &parts[1..] {
            if let Some(stripped) = t.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(t);
            }
        }
        write!(f, "{s}")
    }
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| Error::Input(format!("bad rational numerator: {s:?}")))?;
    let d: BigInt = den.parse().map_err(|_| Error::Input(format!("bad rational denominator: {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Input(format!("zero denominator in rational {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Render a rational as "p/q" (or "p" for integers).
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64, k: i64) -> CycloNumber {
        CycloNumber::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(cyclotomic_polynomial(2), vec![BigInt::from(1), BigInt::from(1)]);
        assert_eq!(cyclotomic_polynomial(3), vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
        assert_eq!(cyclotomic_polynomial(4), vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
        assert_eq!(
            cyclotomic_polynomial(12),
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1), BigInt::from(0), BigInt::from(1)]
        );
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn roots_of_unity_basics() {
        assert!(zeta(1, 0).is_one());
        assert_eq!(zeta(2, 1), CycloNumber::from_integer(-1));
        let i = zeta(4, 1);
        assert_eq!(i.mul(&i), CycloNumber::from_integer(-1));
        // 1 + z3 + z3^2 = 0
        let s = CycloNumber::one().add(&zeta(3, 1)).add(&zeta(3, 2));
        assert!(s.is_zero());
        // z3 + z3^2 = -1
        assert_eq!(zeta(3, 1).add(&zeta(3, 2)), CycloNumber::from_integer(-1));
        // z6 * z6^5 = 1
        assert!(zeta(6, 1).mul(&zeta(6, 5)).is_one());
        // inv(-1) = -1
        assert_eq!(CycloNumber::from_integer(-1).inv().unwrap(), CycloNumber::from_integer(-1));
    }

    #[test]
    fn conductor_normalization() {
        // z6^3 = -1 lives in Q
        assert_eq!(zeta(6, 3), CycloNumber::from_integer(-1));
        assert_eq!(zeta(6, 3).conductor(), 1);
        // z4^2 = -1
        assert_eq!(zeta(4, 2).conductor(), 1);
        // z6 itself needs conductor... 6 reduces to 3? z6 = -z3^2, conductor 3.
        assert_eq!(zeta(6, 1).conductor(), 3);
        // mixed-conductor arithmetic: z2 * z3 has order 6
        let x = zeta(2, 1).mul(&zeta(3, 1));
        assert_eq!(x.order_as_root_of_unity(), Some(6));
    }

    #[test]
    fn order_of_roots() {
        assert_eq!(CycloNumber::one().order_as_root_of_unity(), Some(1));
        assert_eq!(CycloNumber::from_integer(2).order_as_root_of_unity(), None);
        assert_eq!(CycloNumber::from_integer(-1).order_as_root_of_unity(), Some(2));
        // -z3 has order 6
        assert_eq!(zeta(3, 1).neg().order_as_root_of_unity(), Some(6));
        for n in 1..=24u64 {
            for k in 0..n {
                let z = zeta(n, k as i64);
                assert!(z.pow(n as i64).unwrap().is_one(), "zeta_{n}^{k} to the n");
                let expected = n / n.gcd(&k.max(0));
                let expected = if k == 0 { 1 } else { expected };
                assert_eq!(z.order_as_root_of_unity(), Some(expected), "order of zeta_{n}^{k}");
            }
        }
    }

    #[test]
    fn field_axioms_spot_checks() {
        let xs = [
            zeta(3, 1),
            zeta(4, 1).add(&CycloNumber::from_integer(2)),
            zeta(5, 2).mul(&CycloNumber::from_rational(BigRational::new(BigInt::from(3), BigInt::from(7)))),
            zeta(12, 5),
            zeta(8, 3).sub(&zeta(3, 2)),
        ];
        for x in &xs {
            for y in &xs {
                assert_eq!(x.add(y).sub(y), *x);
                if !y.is_zero() {
                    assert_eq!(x.mul(y).mul(&y.inv().unwrap()), *x);
                }
            }
        }
        assert!(CycloNumber::zero().inv().is_err());
    }

    #[test]
    fn inverse_times_self_is_one() {
        let vals = [zeta(7, 3), zeta(9, 2).add(&CycloNumber::one()), zeta(15, 4).sub(&zeta(15, 1))];
        for v in &vals {
            if v.is_zero() {
                continue;
            }
            assert!(v.mul(&v.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn display_and_parse_rational() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::new(BigInt::from(3), BigInt::from(4)));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(rational_to_string(&BigRational::new(BigInt::from(-6), BigInt::from(4))), "-3/2");
        assert_eq!(format!("{}", zeta(4, 1)), "z4");
    }
}
