//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`: construction of the
//! N-th cyclotomic polynomial by iterated exact division, field operations on
//! the power basis mod `Phi_N`, and the embedding of root-of-unity exponents.
//!
//! Elements are reduced mod `Phi_N` rather than `x^N - 1`; the quotient by
//! `x^N - 1` has zero divisors, which would break the invertibility tests the
//! twist machinery relies on.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cocycles::RootExp;
use crate::{Error, Result};

/// Euler phi.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer polynomial, ascending coefficients, no trailing zeros.
fn poly_trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

/// Exact division of integer polynomials; panics if not divisible (never the
/// case for `x^n - 1` by a product of cyclotomics).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let lead = &den[dn];
    assert!(!lead.is_zero());
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = &rem[k + dn] / lead;
        quot[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            let t = &c * d;
            rem[k + i] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// `Phi_N` as ascending integer coefficients, computed by dividing `x^N - 1`
/// by the cyclotomic polynomials of the proper divisors. Cached per N.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::from(1);
        let mut acc = num;
        for d in 1..n {
            if n % d == 0 {
                let phi_d = cyclotomic_poly(d);
                acc = poly_div_exact(&acc, &phi_d);
            }
        }
        poly_trim(&mut acc);
        acc
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// An element of `Q(zeta_N)` on the power basis `1, zeta, .., zeta^{phi(N)-1}`.
#[derive(Clone, Debug)]
pub struct CycloNum {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

fn rational_poly_mod_phi(mut p: Vec<BigRational>, conductor: u64) -> Vec<BigRational> {
    let phi = cyclotomic_poly(conductor);
    let deg = phi.len() - 1;
    // First reduce exponents >= N via zeta^N = 1 (cheap), then mod Phi_N.
    let n = conductor as usize;
    if p.len() > n {
        for i in (n..p.len()).rev() {
            let c = std::mem::replace(&mut p[i], BigRational::zero());
            p[i - n] += c;
        }
        p.truncate(n);
    }
    while p.len() > deg {
        let k = p.len() - 1;
        let c = p.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        // zeta^k = -(sum_{i<deg} phi_i zeta^{k-deg+i}) since phi is monic.
        for i in 0..deg {
            let t = &c * BigRational::from(phi[i].clone());
            p[k - deg + i] -= t;
        }
    }
    p.resize(deg, BigRational::zero());
    p
}

impl CycloNum {
    pub fn zero(conductor: u64) -> Self {
        CycloNum { conductor, coeffs: vec![BigRational::zero(); euler_phi(conductor) as usize] }
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rational(conductor, BigRational::one())
    }

    pub fn from_rational(conductor: u64, r: BigRational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(conductor: u64, k: i64) -> Self {
        Self::from_rational(conductor, BigRational::from(BigInt::from(k)))
    }

    /// `zeta_N^k`, canonical class of `x^k` mod `Phi_N`.
    pub fn root(conductor: u64, k: i64) -> Self {
        let kk = k.rem_euclid(conductor as i64) as usize;
        let mut p = vec![BigRational::zero(); kk + 1];
        p[kk] = BigRational::one();
        CycloNum { conductor, coeffs: rational_poly_mod_phi(p, conductor) }
    }

    pub fn from_root_exp(r: &RootExp) -> Self {
        Self::root(r.modulus, r.exp as i64)
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
        self.eq_num(&CycloNum::one(self.conductor))
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Rewrite over a conductor this one divides: `zeta_N -> zeta_M^{M/N}`.
    pub fn to_conductor(&self, target: u64) -> Self {
        assert!(target % self.conductor == 0, "conductor rescale must go up");
        if target == self.conductor {
            return self.clone();
        }
        let scale = (target / self.conductor) as usize;
        let mut p = vec![BigRational::zero(); (self.coeffs.len() - 1) * scale + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[i * scale] = c.clone();
        }
        CycloNum { conductor: target, coeffs: rational_poly_mod_phi(p, target) }
    }

    fn common(&self, rhs: &Self) -> (Self, Self) {
        if self.conductor == rhs.conductor {
            (self.clone(), rhs.clone())
        } else {
            let m = num_integer::lcm(self.conductor, rhs.conductor);
            (self.to_conductor(m), rhs.to_conductor(m))
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut a = self.clone();
        for c in a.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        a
    }

    /// The unique nonzero coefficient, when the element is `c * zeta^k` on
    /// the power basis.
    fn single_term(&self) -> Option<(usize, &BigRational)> {
        let mut found = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((i, c));
            }
        }
        found
    }

    /// Multiply by `zeta^k` (a degree shift followed by reduction).
    fn shift_root(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let mut p = vec![BigRational::zero(); self.coeffs.len() + k];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[i + k] = c.clone();
        }
        CycloNum { conductor: self.conductor, coeffs: rational_poly_mod_phi(p, self.conductor) }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.common(rhs);
        if a.is_zero() || b.is_zero() {
            return Self::zero(a.conductor);
        }
        // Rational and monomial factors dominate in practice; both avoid the
        // quadratic convolution.
        if a.is_rational() {
            return b.scale(&a.coeffs[0]);
        }
        if b.is_rational() {
            return a.scale(&b.coeffs[0]);
        }
        if let Some((k, c)) = a.single_term() {
            return b.shift_root(k).scale(c);
        }
        if let Some((k, c)) = b.single_term() {
            return a.shift_root(k).scale(c);
        }
        let mut p = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                p[i + j] += x * y;
            }
        }
        CycloNum { conductor: a.conductor, coeffs: rational_poly_mod_phi(p, a.conductor) }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut a = self.clone();
        for c in a.coeffs.iter_mut() {
            *c *= r;
        }
        a
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_N` in `Q[x]`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular("inversion of zero in Q(zeta_N)".into()));
        }
        let phi: Vec<BigRational> =
            cyclotomic_poly(self.conductor).iter().map(|c| BigRational::from(c.clone())).collect();
        // Extended Euclid: maintain r0, r1 and s0, s1 with s_i * self = r_i mod Phi.
        let mut r0 = phi;
        let mut r1 = self.coeffs.clone();
        trim_rat(&mut r1);
        let mut s0 = vec![BigRational::zero()];
        let mut s1 = vec![BigRational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = rat_poly_divmod(&r0, &r1);
            let s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd, a nonzero constant (Phi_N is irreducible over Q).
        if r0.len() != 1 || r0[0].is_zero() {
            return Err(Error::Singular("gcd with Phi_N is not a unit".into()));
        }
        let c = r0[0].recip();
        let mut inv_coeffs: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
        inv_coeffs
            .resize(inv_coeffs.len().max(euler_phi(self.conductor) as usize), BigRational::zero());
        Ok(CycloNum {
            conductor: self.conductor,
            coeffs: rational_poly_mod_phi(inv_coeffs, self.conductor),
        })
    }

    pub fn eq_num(&self, rhs: &Self) -> bool {
        let (a, b) = self.common(rhs);
        a.coeffs == b.coeffs
    }

    /// Square root inside `Q(i)` (conductor dividing 4) when one exists.
    /// Complete for that field: `x + yi` has a square root `p + qi` iff
    /// `x^2 + y^2` is a rational square and the induced `p^2` (or `q^2`) is.
    pub fn sqrt_in_qi(&self) -> Option<CycloNum> {
        assert!(self.conductor == 1 || self.conductor == 2 || self.conductor == 4);
        let v = self.to_conductor(4);
        let x = v.coeffs[0].clone();
        let y = v.coeffs[1].clone();
        let norm = &x * &x + &y * &y;
        let s = rational_sqrt(&norm)?;
        let two = BigRational::from(BigInt::from(2));
        if y.is_zero() {
            // sqrt of a rational: either p^2 = x or (qi)^2 = x.
            if let Some(p) = rational_sqrt(&x) {
                return Some(CycloNum::from_rational(4, p));
            }
            if let Some(q) = rational_sqrt(&(-x.clone())) {
                return Some(CycloNum::root(4, 1).scale(&q));
            }
            return None;
        }
        let p2 = (&x + &s) / &two;
        if let Some(p) = rational_sqrt(&p2) {
            if !p.is_zero() {
                let q = &y / (&two * &p);
                let mut out = CycloNum::from_rational(4, p);
                out.coeffs[1] = q;
                return Some(out);
            }
        }
        let q2 = (&s - &x) / &two;
        if let Some(q) = rational_sqrt(&q2) {
            if !q.is_zero() {
                let p = &y / (&two * &q);
                let mut out = CycloNum::from_rational(4, p);
                out.coeffs[1] = q;
                return Some(out);
            }
        }
        None
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.eq_num(other)
    }
}

impl Eq for CycloNum {}

fn trim_rat(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn rat_poly_divmod(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    trim_rat(&mut rem);
    let mut d = den.to_vec();
    trim_rat(&mut d);
    let dn = d.len() - 1;
    if rem.len() - 1 < dn || (rem.len() == 1 && rem[0].is_zero()) {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dn] / &d[dn];
        quot[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for i in 0..=dn {
            let t = &c * &d[i];
            rem[k + i] -= t;
        }
    }
    trim_rat(&mut rem);
    (quot, rem)
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_rat(&mut out);
    out
}

fn rat_poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    out.resize(out.len().max(b.len()), BigRational::zero());
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim_rat(&mut out);
    out
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}
