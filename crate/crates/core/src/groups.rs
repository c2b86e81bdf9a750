//! Finite group presentations: abelian products `C_{m_1} x .. x C_{m_n}` and
//! the double dihedral groups `Dbar_n = <R, X | R^{2n} = e, X^2 = R^n, XR = R^{-1}X>`.
//!
//! Elements are kept canonical at all times: abelian exponents in `[0, m_j)`,
//! the `R`-exponent of a double dihedral element in the signed remainder
//! range `[-n+1, n]`.

use num_integer::Integer;

use crate::{Error, Result};

/// Default order bound for exhaustive checkers.
pub const DEFAULT_CAP: u64 = 64;

/// Common interface the cocycle tables and checkers need.
pub trait FiniteGroup {
    type Elem: Clone + Eq + Ord + std::fmt::Debug;

    fn order(&self) -> usize;
    fn elements(&self) -> Vec<Self::Elem>;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    /// Rank of an element in the `elements()` enumeration.
    fn index_of(&self, x: &Self::Elem) -> usize;
    fn label(&self, x: &Self::Elem) -> String;

    fn is_identity(&self, x: &Self::Elem) -> bool {
        *x == self.identity()
    }
}

/// `C_{m_1} x .. x C_{m_n}` with `m_j >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroupSpec {
    moduli: Vec<u64>,
}

/// Exponent vector, canonical in `[0, m_j)` componentwise.
pub type AbelianElement = Vec<u64>;

impl AbelianGroupSpec {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidGroup("need at least one cyclic factor".into()));
        }
        if let Some(&m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGroup(format!("modulus {m} < 2")));
        }
        Ok(AbelianGroupSpec { moduli })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// `M = LCM{ (m_r, m_s, m_t) : r < s < t }`, with `M = 1` for `n < 3`.
    pub fn big_m(&self) -> u64 {
        let n = self.rank();
        let mut m = 1u64;
        for r in 0..n {
            for s in r + 1..n {
                for t in s + 1..n {
                    let g = self.moduli[r].gcd(&self.moduli[s]).gcd(&self.moduli[t]);
                    m = m.lcm(&g);
                }
            }
        }
        m
    }

    /// `N = LCM{ m_j^2, m_s m_t }`, the modulus carrying witnesses and `v`.
    pub fn big_n(&self) -> u64 {
        let n = self.rank();
        let mut acc = 1u64;
        for j in 0..n {
            acc = acc.lcm(&(self.moduli[j] * self.moduli[j]));
        }
        for s in 0..n {
            for t in s + 1..n {
                acc = acc.lcm(&(self.moduli[s] * self.moduli[t]));
            }
        }
        acc
    }

    /// `LCM{ m_j }`, the value modulus of the 3-cocycles themselves.
    pub fn script_n(&self) -> u64 {
        self.moduli.iter().fold(1u64, |a, m| a.lcm(m))
    }

    /// `L = LCM(m_1, m_2)` in the two-factor case.
    pub fn l_pair(&self) -> Option<u64> {
        if self.rank() == 2 {
            Some(self.moduli[0].lcm(&self.moduli[1]))
        } else {
            None
        }
    }

    pub fn canonicalize(&self, exps: &[i64]) -> AbelianElement {
        exps.iter()
            .zip(&self.moduli)
            .map(|(&e, &m)| e.rem_euclid(m as i64) as u64)
            .collect()
    }

    /// All characters as exponent vectors; same enumeration order as `elements()`.
    pub fn characters(&self) -> Vec<Vec<u64>> {
        self.elements()
    }
}

impl FiniteGroup for AbelianGroupSpec {
    type Elem = AbelianElement;

    fn order(&self) -> usize {
        self.moduli.iter().product::<u64>() as usize
    }

    fn elements(&self) -> Vec<AbelianElement> {
        let mut out = Vec::with_capacity(self.order());
        let mut cur = vec![0u64; self.rank()];
        loop {
            out.push(cur.clone());
            // Lexicographic: last coordinate moves fastest.
            let mut k = self.rank();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < self.moduli[k] {
                    break;
                }
                cur[k] = 0;
                if k == 0 {
                    return out;
                }
            }
        }
    }

    fn identity(&self) -> AbelianElement {
        vec![0; self.rank()]
    }

    fn mul(&self, x: &AbelianElement, y: &AbelianElement) -> AbelianElement {
        assert_eq!(x.len(), self.rank());
        assert_eq!(y.len(), self.rank());
        x.iter().zip(y).zip(&self.moduli).map(|((&a, &b), &m)| (a + b) % m).collect()
    }

    fn inv(&self, x: &AbelianElement) -> AbelianElement {
        x.iter().zip(&self.moduli).map(|(&a, &m)| (m - a) % m).collect()
    }

    fn index_of(&self, x: &AbelianElement) -> usize {
        let mut idx = 0usize;
        for (e, m) in x.iter().zip(&self.moduli) {
            idx = idx * (*m as usize) + *e as usize;
        }
        idx
    }

    fn label(&self, x: &AbelianElement) -> String {
        let parts: Vec<String> = x.iter().map(|e| e.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// Signed remainder `<a>_{2n} = a + 2*floor((n - a)/2n)*n`, the unique
/// representative of `a mod 2n` in `[-n+1, n]`.
pub fn bracket_rem(a: i64, n: i64) -> i64 {
    assert!(n >= 1);
    a + 2 * (n - a).div_euclid(2 * n) * n
}

/// Double dihedral group of order `4n`, `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DdnSpec {
    n: u64,
}

/// `(A, a)` standing for `X^A R^a` with `A` in `{0, 1}`, `a` in `[-n+1, n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DdnElement {
    pub x_pow: u8,
    pub r_pow: i64,
}

impl DdnSpec {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroup(format!("double dihedral parameter {n} < 2")));
        }
        Ok(DdnSpec { n })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn element(&self, x_pow: u8, r_pow: i64) -> DdnElement {
        DdnElement { x_pow: x_pow % 2, r_pow: bracket_rem(r_pow, self.n as i64) }
    }

    pub fn r(&self) -> DdnElement {
        self.element(0, 1)
    }

    pub fn x(&self) -> DdnElement {
        self.element(1, 0)
    }

    /// `R^n`, the nontrivial central element.
    pub fn r_n(&self) -> DdnElement {
        self.element(0, self.n as i64)
    }
}

impl FiniteGroup for DdnSpec {
    type Elem = DdnElement;

    fn order(&self) -> usize {
        4 * self.n as usize
    }

    fn elements(&self) -> Vec<DdnElement> {
        let n = self.n as i64;
        let mut out = Vec::with_capacity(self.order());
        for x_pow in 0..2u8 {
            for a in -n + 1..=n {
                out.push(DdnElement { x_pow, r_pow: a });
            }
        }
        out
    }

    fn identity(&self) -> DdnElement {
        DdnElement { x_pow: 0, r_pow: 0 }
    }

    /// `X^A R^a * X^B R^b = X^{(A+B) mod 2} R^{<(-1)^B a + b + nAB>_{2n}}`.
    fn mul(&self, x: &DdnElement, y: &DdnElement) -> DdnElement {
        let n = self.n as i64;
        let sign = if y.x_pow == 1 { -1 } else { 1 };
        let a = sign * x.r_pow + y.r_pow + n * (x.x_pow as i64) * (y.x_pow as i64);
        DdnElement { x_pow: (x.x_pow + y.x_pow) % 2, r_pow: bracket_rem(a, n) }
    }

    fn inv(&self, x: &DdnElement) -> DdnElement {
        let n = self.n as i64;
        if x.x_pow == 0 {
            DdnElement { x_pow: 0, r_pow: bracket_rem(-x.r_pow, n) }
        } else {
            // (X R^a)^{-1} = X R^{a + n}: (X R^a)(X R^{a+n}) = R^{-a + a + n + n} = e.
            DdnElement { x_pow: 1, r_pow: bracket_rem(x.r_pow + n, n) }
        }
    }

    fn index_of(&self, x: &DdnElement) -> usize {
        let n = self.n as i64;
        (x.x_pow as usize) * (2 * self.n as usize) + (x.r_pow + n - 1) as usize
    }

    fn label(&self, x: &DdnElement) -> String {
        format!("X^{}R^{}", x.x_pow, x.r_pow)
    }
}

/// Center by exhaustive commutation for any group with order at most `cap`.
pub fn center<G: FiniteGroup>(group: &G, cap: u64) -> Result<Vec<G::Elem>> {
    if group.order() as u64 > cap {
        return Err(Error::CapExceeded { needed: group.order() as u64, cap });
    }
    let elems = group.elements();
    Ok(elems
        .iter()
        .filter(|z| elems.iter().all(|h| group.mul(z, h) == group.mul(h, z)))
        .cloned()
        .collect())
}
