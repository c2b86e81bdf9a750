//! Root-of-unity exponent arithmetic and the cocycle-level constructions:
//! the representative 3-cocycles `omega_a` on finite abelian groups and
//! `omega_p` on double dihedral groups, the flattening `flat_g omega`,
//! coboundaries, the explicit 1-cochain witnesses, and exhaustive identity
//! checkers.
//!
//! Every value is an exponent over an explicit modulus; mixed moduli rescale
//! through the LCM. No value is ever touched by floating point.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::groups::{AbelianGroupSpec, DdnElement, DdnSpec, FiniteGroup};
use crate::{Error, Result};

/// A root of unity `zeta_modulus ^ exp` with canonical `exp` in `[0, modulus)`.
#[derive(Clone, Copy, Debug)]
pub struct RootExp {
    pub modulus: u64,
    pub exp: u64,
}

impl RootExp {
    pub fn new(modulus: u64, exp: i64) -> Self {
        assert!(modulus >= 1);
        RootExp { modulus, exp: exp.rem_euclid(modulus as i64) as u64 }
    }

    pub fn new_i128(modulus: u64, exp: i128) -> Self {
        assert!(modulus >= 1);
        RootExp { modulus, exp: exp.rem_euclid(modulus as i128) as u64 }
    }

    pub fn one(modulus: u64) -> Self {
        RootExp { modulus, exp: 0 }
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0
    }

    /// Rescale to a modulus this value's modulus divides.
    pub fn rescale(&self, modulus: u64) -> Self {
        assert!(modulus % self.modulus == 0, "rescale target must be a multiple");
        RootExp { modulus, exp: self.exp * (modulus / self.modulus) }
    }

    pub fn mul(&self, rhs: &RootExp) -> Self {
        let m = self.modulus.lcm(&rhs.modulus);
        let a = self.rescale(m);
        let b = rhs.rescale(m);
        RootExp { modulus: m, exp: (a.exp + b.exp) % m }
    }

    pub fn inv(&self) -> Self {
        RootExp { modulus: self.modulus, exp: (self.modulus - self.exp) % self.modulus }
    }
}

impl PartialEq for RootExp {
    fn eq(&self, other: &Self) -> bool {
        let m = self.modulus.lcm(&other.modulus);
        self.rescale(m).exp == other.rescale(m).exp
    }
}

impl Eq for RootExp {}

/// The datum `(c_1..c_n, c_{st}, c_{rst})` selecting a representative 3-cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleDatum {
    pub c: Vec<u64>,
    pub c_pair: BTreeMap<(usize, usize), u64>,
    pub c_triple: BTreeMap<(usize, usize, usize), u64>,
}

impl CocycleDatum {
    pub fn zero(n: usize) -> Self {
        let mut c_pair = BTreeMap::new();
        let mut c_triple = BTreeMap::new();
        for s in 0..n {
            for t in s + 1..n {
                c_pair.insert((s, t), 0);
            }
        }
        for r in 0..n {
            for s in r + 1..n {
                for t in s + 1..n {
                    c_triple.insert((r, s, t), 0);
                }
            }
        }
        CocycleDatum { c: vec![0; n], c_pair, c_triple }
    }

    /// Validate ranges against a group. The pair/triple bounds are half-open
    /// `[0, gcd)`; a value equal to the gcd bound is accepted with a warning
    /// since it selects the same cohomology class as zero.
    pub fn validate(&self, group: &AbelianGroupSpec) -> Result<Vec<String>> {
        let m = group.moduli();
        let n = m.len();
        if self.c.len() != n {
            return Err(Error::InvalidDatum(format!(
                "expected {n} linear entries, got {}",
                self.c.len()
            )));
        }
        let mut warnings = Vec::new();
        for (j, &cj) in self.c.iter().enumerate() {
            if cj >= m[j] {
                return Err(Error::InvalidDatum(format!(
                    "c_{} = {cj} out of range [0, {})",
                    j + 1,
                    m[j]
                )));
            }
        }
        for s in 0..n {
            for t in s + 1..n {
                let bound = m[s].gcd(&m[t]);
                let v = *self.c_pair.get(&(s, t)).unwrap_or(&0);
                if v > bound {
                    return Err(Error::InvalidDatum(format!(
                        "c_{}{} = {v} out of range [0, {bound}]",
                        s + 1,
                        t + 1
                    )));
                }
                if v == bound {
                    warnings.push(format!(
                        "c_{}{} = {v} equals the gcd bound; it selects the trivial class",
                        s + 1,
                        t + 1
                    ));
                }
            }
        }
        for r in 0..n {
            for s in r + 1..n {
                for t in s + 1..n {
                    let bound = m[r].gcd(&m[s]).gcd(&m[t]);
                    let v = *self.c_triple.get(&(r, s, t)).unwrap_or(&0);
                    if v > bound {
                        return Err(Error::InvalidDatum(format!(
                            "c_{}{}{} = {v} out of range [0, {bound}]",
                            r + 1,
                            s + 1,
                            t + 1
                        )));
                    }
                    if v == bound && v != 0 {
                        warnings.push(format!(
                            "c_{}{}{} = {v} equals the gcd bound; it selects the trivial class",
                            r + 1,
                            s + 1,
                            t + 1
                        ));
                    }
                }
            }
        }
        Ok(warnings)
    }

    pub fn pair(&self, s: usize, t: usize) -> u64 {
        *self.c_pair.get(&(s, t)).unwrap_or(&0)
    }

    pub fn triple(&self, r: usize, s: usize, t: usize) -> u64 {
        *self.c_triple.get(&(r, s, t)).unwrap_or(&0)
    }

    /// `M^c_{rst} = (M / (m_r, m_s, m_t)) * c_{rst}`.
    pub fn m_c(&self, group: &AbelianGroupSpec, r: usize, s: usize, t: usize) -> i64 {
        let m = group.moduli();
        let g = m[r].gcd(&m[s]).gcd(&m[t]);
        ((group.big_m() / g) * self.triple(r, s, t)) as i64
    }

    /// Same datum with all triple entries zeroed; induces the abelian cocycle.
    pub fn abelianized(&self) -> Self {
        let mut out = self.clone();
        for v in out.c_triple.values_mut() {
            *v = 0;
        }
        out
    }

    /// Parse `c=1,3;c12=1`-style datum strings.
    pub fn parse(input: &str, n: usize) -> Result<Self> {
        let mut datum = CocycleDatum::zero(n);
        for part in input.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let key = key.trim();
            let value = value.trim();
            if key == "c" {
                let entries: Vec<u64> = value
                    .split(',')
                    .map(|x| x.trim().parse::<u64>().map_err(|e| Error::Parse(e.to_string())))
                    .collect::<Result<_>>()?;
                if entries.len() != n {
                    return Err(Error::Parse(format!(
                        "c needs {n} entries, got {}",
                        entries.len()
                    )));
                }
                datum.c = entries;
            } else if let Some(idx) = key.strip_prefix('c') {
                let digits: Vec<usize> = idx
                    .chars()
                    .map(|ch| {
                        ch.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad index `{key}`")))
                    })
                    .collect::<Result<_>>()?;
                let v: u64 = value
                    .parse()
                    .map_err(|e: std::num::ParseIntError| Error::Parse(e.to_string()))?;
                match digits.len() {
                    2 => {
                        let (s, t) = (digits[0] - 1, digits[1] - 1);
                        if s >= t || t >= n {
                            return Err(Error::Parse(format!("bad pair index `{key}`")));
                        }
                        datum.c_pair.insert((s, t), v);
                    }
                    3 => {
                        let (r, s, t) = (digits[0] - 1, digits[1] - 1, digits[2] - 1);
                        if !(r < s && s < t && t < n) {
                            return Err(Error::Parse(format!("bad triple index `{key}`")));
                        }
                        datum.c_triple.insert((r, s, t), v);
                    }
                    _ => return Err(Error::Parse(format!("bad key `{key}`"))),
                }
            } else {
                return Err(Error::Parse(format!("bad key `{key}`")));
            }
        }
        Ok(datum)
    }

    /// Canonical `c=..;c12=..` rendering, used by the CLI tables.
    pub fn render(&self) -> String {
        let mut parts = vec![format!(
            "c={}",
            self.c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )];
        for (&(s, t), &v) in &self.c_pair {
            parts.push(format!("c{}{}={v}", s + 1, t + 1));
        }
        for (&(r, s, t), &v) in &self.c_triple {
            parts.push(format!("c{}{}{}={v}", r + 1, s + 1, t + 1));
        }
        parts.join(";")
    }
}

/// Tabulated normalized cochain of arity 1, 2 or 3 over a shared modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub arity: usize,
    pub modulus: u64,
    /// Exponent table, index = rank of the argument tuple, innermost last.
    pub table: Vec<u64>,
}

impl Cochain {
    pub fn constant_one(arity: usize, modulus: u64, order: usize) -> Self {
        Cochain { arity, modulus, table: vec![0; order.pow(arity as u32)] }
    }

    pub fn value_at(&self, indices: &[usize], order: usize) -> RootExp {
        RootExp { modulus: self.modulus, exp: self.table[tuple_rank(indices, order)] }
    }

    /// Pointwise product; moduli rescale through the LCM.
    pub fn pointwise_mul(&self, rhs: &Cochain) -> Cochain {
        assert_eq!(self.arity, rhs.arity);
        assert_eq!(self.table.len(), rhs.table.len());
        let m = self.modulus.lcm(&rhs.modulus);
        let (sa, sb) = (m / self.modulus, m / rhs.modulus);
        Cochain {
            arity: self.arity,
            modulus: m,
            table: self
                .table
                .iter()
                .zip(&rhs.table)
                .map(|(&a, &b)| (a * sa + b * sb) % m)
                .collect(),
        }
    }

    /// Pointwise quotient self / rhs.
    pub fn pointwise_div(&self, rhs: &Cochain) -> Cochain {
        assert_eq!(self.arity, rhs.arity);
        let m = self.modulus.lcm(&rhs.modulus);
        let (sa, sb) = (m / self.modulus, m / rhs.modulus);
        Cochain {
            arity: self.arity,
            modulus: m,
            table: self
                .table
                .iter()
                .zip(&rhs.table)
                .map(|(&a, &b)| (a * sa + (m - (b * sb) % m)) % m)
                .collect(),
        }
    }

    /// Equality as functions into the roots of unity (moduli rescaled).
    pub fn equivalent(&self, rhs: &Cochain) -> bool {
        if self.arity != rhs.arity || self.table.len() != rhs.table.len() {
            return false;
        }
        let m = self.modulus.lcm(&rhs.modulus);
        let (sa, sb) = (m / self.modulus, m / rhs.modulus);
        self.table.iter().zip(&rhs.table).all(|(&a, &b)| (a * sa) % m == (b * sb) % m)
    }
}

fn tuple_rank(indices: &[usize], order: usize) -> usize {
    indices.iter().fold(0usize, |acc, &i| acc * order + i)
}

/// `omega_a` on an abelian group, evaluated exactly over `LCM{m_l}`:
///
/// `prod_l xi_{m_l}^{c_l i_l floor((j_l + k_l)/m_l)}
///  * prod_{s<t} xi_{m_t}^{c_st i_t floor((j_s + k_s)/m_s)}
///  * prod_{r<s<t} xi_{(m_r,m_s,m_t)}^{-c_rst k_r j_s i_t}`.
pub fn omega_abelian(
    group: &AbelianGroupSpec,
    datum: &CocycleDatum,
    x: &[u64],
    y: &[u64],
    z: &[u64],
) -> RootExp {
    let m = group.moduli();
    let n = m.len();
    assert!(x.len() == n && y.len() == n && z.len() == n, "element/group rank mismatch");
    let script_n = group.script_n();
    let mut exp: i128 = 0;
    for l in 0..n {
        let carry = ((y[l] + z[l]) / m[l]) as i128;
        exp += (script_n / m[l]) as i128 * datum.c[l] as i128 * x[l] as i128 * carry;
    }
    for s in 0..n {
        for t in s + 1..n {
            let carry = ((y[s] + z[s]) / m[s]) as i128;
            exp += (script_n / m[t]) as i128 * datum.pair(s, t) as i128 * x[t] as i128 * carry;
        }
    }
    for r in 0..n {
        for s in r + 1..n {
            for t in s + 1..n {
                let g = m[r].gcd(&m[s]).gcd(&m[t]);
                exp -= (script_n / g) as i128
                    * datum.triple(r, s, t) as i128
                    * z[r] as i128
                    * y[s] as i128
                    * x[t] as i128;
            }
        }
    }
    RootExp::new_i128(script_n, exp)
}

/// Modulus carrying all three factor families of `omega_p` on `Dbar_n`:
/// `xi_{2n}`, `xi_n` and `xi_4` all live in `LCM(2n^2, 4)`.
pub fn ddn_omega_modulus(n: u64) -> u64 {
    (2 * n * n).lcm(&4)
}

/// `omega_p` on the double dihedral group, exact over `LCM(2n^2, 4)`:
///
/// `xi_{2n}^{p (-1)^{B+C+1} a B C}
///  * xi_n^{p (-1)^{B+C+1} a floor((n - (-1)^C b - c - nBC)/2n)}
///  * xi_4^{-p A B C}`.
pub fn omega_ddn(n: u64, p: u64, x: &DdnElement, y: &DdnElement, z: &DdnElement) -> RootExp {
    assert!(n >= 2);
    assert!(p < 2 * n);
    let q = ddn_omega_modulus(n);
    let ni = n as i128;
    let (a_pow, a) = (x.x_pow as i128, x.r_pow as i128);
    let (b_pow, b) = (y.x_pow as i128, y.r_pow as i128);
    let (c_pow, c) = (z.x_pow as i128, z.r_pow as i128);
    let sign = if (b_pow + c_pow + 1) % 2 == 0 { 1 } else { -1 };
    let c_sign = if c_pow % 2 == 0 { 1 } else { -1 };
    let floor_term = (ni - c_sign * b - c - ni * b_pow * c_pow).div_euclid(2 * ni);
    let qi = q as i128;
    let mut exp: i128 = 0;
    exp += (qi / (2 * ni)) * (p as i128) * sign * a * b_pow * c_pow;
    exp += (qi / ni) * (p as i128) * sign * a * floor_term;
    exp -= (qi / 4) * (p as i128) * a_pow * b_pow * c_pow;
    RootExp::new_i128(q, exp)
}

/// Materialize a 3-cocycle table for a whole group.
pub fn omega_abelian_cochain(group: &AbelianGroupSpec, datum: &CocycleDatum) -> Cochain {
    let elems = group.elements();
    let order = elems.len();
    let mut c = Cochain::constant_one(3, group.script_n(), order);
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            for (k, z) in elems.iter().enumerate() {
                let w = omega_abelian(group, datum, x, y, z);
                c.table[(i * order + j) * order + k] = w.exp;
            }
        }
    }
    c
}

pub fn omega_ddn_cochain(group: &DdnSpec, p: u64) -> Cochain {
    let elems = group.elements();
    let order = elems.len();
    let mut c = Cochain::constant_one(3, ddn_omega_modulus(group.n()), order);
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            for (k, z) in elems.iter().enumerate() {
                let w = omega_ddn(group.n(), p, x, y, z);
                c.table[(i * order + j) * order + k] = w.exp;
            }
        }
    }
    c
}

/// Flattening `flat_g omega (x, y) = omega(g,x,y) omega(x,y,g) / omega(x,g,y)`.
pub fn flat<G: FiniteGroup>(group: &G, omega: &Cochain, g: &G::Elem) -> Cochain {
    assert_eq!(omega.arity, 3);
    let order = group.order();
    let gi = group.index_of(g);
    let mut out = Cochain::constant_one(2, omega.modulus, order);
    for i in 0..order {
        for j in 0..order {
            let a = omega.table[(gi * order + i) * order + j] as i128;
            let b = omega.table[(i * order + j) * order + gi] as i128;
            let c = omega.table[(i * order + gi) * order + j] as i128;
            out.table[i * order + j] = (a + b - c).rem_euclid(omega.modulus as i128) as u64;
        }
    }
    out
}

/// Coboundary `d rho (x, y) = rho(xy)^{-1} rho(x) rho(y)` of a normalized 1-cochain.
pub fn coboundary<G: FiniteGroup>(group: &G, rho: &Cochain) -> Cochain {
    assert_eq!(rho.arity, 1);
    let elems = group.elements();
    let order = elems.len();
    assert_eq!(rho.table[group.index_of(&group.identity())], 0, "rho must be normalized");
    let mut out = Cochain::constant_one(2, rho.modulus, order);
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            let xy = group.index_of(&group.mul(x, y));
            let e = rho.table[i] as i128 + rho.table[j] as i128 - rho.table[xy] as i128;
            out.table[i * order + j] = e.rem_euclid(rho.modulus as i128) as u64;
        }
    }
    out
}

/// Which identity to check exhaustively.
#[derive(Clone, Debug)]
pub enum CocycleKind<E> {
    TwoCocycle,
    ThreeCocycle,
    /// Condition for `flat_g omega` to be a 2-cocycle when `g` is not
    /// assumed central.
    FlatCondition(E),
}

/// First violating tuple, by element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleWitness(pub Vec<usize>);

/// Exhaustive identity check; `Err` on cap excess, `Ok(Err(witness))` on failure.
pub fn check_cocycle<G: FiniteGroup>(
    group: &G,
    cochain: &Cochain,
    kind: CocycleKind<G::Elem>,
    cap: u64,
) -> Result<std::result::Result<(), CocycleWitness>> {
    let order = group.order();
    if order as u64 > cap {
        return Err(Error::CapExceeded { needed: order as u64, cap });
    }
    let elems = group.elements();
    let m = cochain.modulus as i128;
    // Precomputed multiplication index table: the quantifier loops below are
    // quartic in the order.
    let mt: Vec<usize> = {
        let mut t = Vec::with_capacity(order * order);
        for x in &elems {
            for y in &elems {
                t.push(group.index_of(&group.mul(x, y)));
            }
        }
        t
    };
    let idx = |i: usize, j: usize| mt[i * order + j];
    match kind {
        CocycleKind::TwoCocycle => {
            assert_eq!(cochain.arity, 2);
            let t = &cochain.table;
            for i in 0..order {
                for j in 0..order {
                    for k in 0..order {
                        // sigma(x,y) sigma(xy,z) = sigma(x,yz) sigma(y,z)
                        let lhs = t[i * order + j] as i128 + t[idx(i, j) * order + k] as i128;
                        let rhs = t[i * order + idx(j, k)] as i128 + t[j * order + k] as i128;
                        if (lhs - rhs).rem_euclid(m) != 0 {
                            return Ok(Err(CocycleWitness(vec![i, j, k])));
                        }
                    }
                }
            }
        }
        CocycleKind::ThreeCocycle => {
            assert_eq!(cochain.arity, 3);
            let t = &cochain.table;
            let at = |a: usize, b: usize, c: usize| t[(a * order + b) * order + c] as i128;
            for i in 0..order {
                for j in 0..order {
                    let ij = idx(i, j);
                    for k in 0..order {
                        let jk = idx(j, k);
                        for l in 0..order {
                            let kl = idx(k, l);
                            // w(y,z,t) w(x,yz,t) w(x,y,z) = w(x,y,zt) w(xy,z,t)
                            let lhs = at(j, k, l) + at(i, jk, l) + at(i, j, k);
                            let rhs = at(i, j, kl) + at(ij, k, l);
                            if (lhs - rhs).rem_euclid(m) != 0 {
                                return Ok(Err(CocycleWitness(vec![i, j, k, l])));
                            }
                        }
                    }
                }
            }
        }
        CocycleKind::FlatCondition(g) => {
            assert_eq!(cochain.arity, 3);
            let t = &cochain.table;
            let at = |a: usize, b: usize, c: usize| t[(a * order + b) * order + c] as i128;
            let gi = group.index_of(&g);
            for i in 0..order {
                let (gx, xg) = (idx(gi, i), idx(i, gi));
                for j in 0..order {
                    let (gy, yg) = (idx(gi, j), idx(j, gi));
                    for k in 0..order {
                        let (gz, zg) = (idx(gi, k), idx(k, gi));
                        // w(gx,y,z) w(x,gy,z) w(x,y,gz) = w(xg,y,z) w(x,yg,z) w(x,y,zg)
                        let lhs = at(gx, j, k) + at(i, gy, k) + at(i, j, gz);
                        let rhs = at(xg, j, k) + at(i, yg, k) + at(i, j, zg);
                        if (lhs - rhs).rem_euclid(m) != 0 {
                            return Ok(Err(CocycleWitness(vec![i, j, k])));
                        }
                    }
                }
            }
        }
    }
    Ok(Ok(()))
}

/// Witness `f_g(g_1^{j_1}..g_n^{j_n}) = prod_l xi_{m_l^2}^{c_l f_l j_l}
/// prod_{s<t} xi_{m_t m_s}^{c_st f_t j_s}`, tabulated over `N`.
pub fn fg_witness(group: &AbelianGroupSpec, datum: &CocycleDatum, f: &[u64]) -> Cochain {
    let m = group.moduli();
    let n = m.len();
    assert_eq!(f.len(), n);
    let big_n = group.big_n();
    let elems = group.elements();
    let mut out = Cochain::constant_one(1, big_n, elems.len());
    for (i, a) in elems.iter().enumerate() {
        let mut exp: i128 = 0;
        for l in 0..n {
            exp += (big_n / (m[l] * m[l])) as i128
                * datum.c[l] as i128
                * f[l] as i128
                * a[l] as i128;
        }
        for s in 0..n {
            for t in s + 1..n {
                exp += (big_n / (m[s] * m[t])) as i128
                    * datum.pair(s, t) as i128
                    * f[t] as i128
                    * a[s] as i128;
            }
        }
        out.table[i] = exp.rem_euclid(big_n as i128) as u64;
    }
    out
}

/// Character `theta_lambda(g_1^{a_1}..) = prod_j xi_{m_j}^{lambda_j a_j}`
/// as a 1-cochain over `LCM{m_j}`.
pub fn abelian_character(group: &AbelianGroupSpec, lambda: &[u64]) -> Cochain {
    let m = group.moduli();
    let script_n = group.script_n();
    let elems = group.elements();
    let mut out = Cochain::constant_one(1, script_n, elems.len());
    for (i, a) in elems.iter().enumerate() {
        let mut exp: i128 = 0;
        for j in 0..m.len() {
            exp += (script_n / m[j]) as i128 * lambda[j] as i128 * a[j] as i128;
        }
        out.table[i] = exp.rem_euclid(script_n as i128) as u64;
    }
    out
}

/// `f(X^A R^a) = (-1)^A xi_{2n}^{-p a}` over modulus `2n`; satisfies
/// `df = flat_{R^n} omega_p` exactly.
pub fn ddn_witness(group: &DdnSpec, p: u64) -> Cochain {
    let n = group.n();
    let modulus = 2 * n;
    let elems = group.elements();
    let mut out = Cochain::constant_one(1, modulus, elems.len());
    for (i, e) in elems.iter().enumerate() {
        let exp = n as i128 * e.x_pow as i128 - p as i128 * e.r_pow as i128;
        out.table[i] = exp.rem_euclid(modulus as i128) as u64;
    }
    out
}

/// The four group homomorphisms `Dbar_n -> k^*`, as 1-cochains over
/// `LCM(2n, 4)`: `(theta(X), theta(R))` runs over
/// `(1,1), (-1,1), (xi_4^n,-1), (-xi_4^n,-1)`.
pub fn ddn_characters(group: &DdnSpec) -> [Cochain; 4] {
    let n = group.n();
    let q: u64 = (2 * n).lcm(&4);
    let elems = group.elements();
    // Exponents of theta(X) over modulus q.
    let x_exps: [i128; 4] = [
        0,
        (q / 2) as i128,
        (q / 4) as i128 * n as i128,
        (q / 2) as i128 + (q / 4) as i128 * n as i128,
    ];
    // theta(R) is 1 for the first two, -1 for the last two.
    let r_exps: [i128; 4] = [0, 0, (q / 2) as i128, (q / 2) as i128];
    std::array::from_fn(|t| {
        let mut out = Cochain::constant_one(1, q, elems.len());
        for (i, e) in elems.iter().enumerate() {
            let exp = x_exps[t] * e.x_pow as i128 + r_exps[t] * e.r_pow as i128;
            out.table[i] = exp.rem_euclid(q as i128) as u64;
        }
        out
    })
}

/// Closed form of `flat_{R^n} omega_p`, `(-1)^{pAB} xi_n^{(pa/2)((-1)^B - 1)}`,
/// over modulus `2n`.
pub fn ddn_flat_closed_form(group: &DdnSpec, p: u64) -> Cochain {
    let n = group.n();
    let modulus = 2 * n;
    let elems = group.elements();
    let order = elems.len();
    let mut out = Cochain::constant_one(2, modulus, order);
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            // (pa/2)((-1)^B - 1) = -pa when B = 1, else 0.
            let mut exp: i128 = n as i128 * (p as i128 * x.x_pow as i128 * y.x_pow as i128);
            if y.x_pow == 1 {
                exp += 2 * (-(p as i128) * x.r_pow as i128);
            }
            out.table[i * order + j] = exp.rem_euclid(modulus as i128) as u64;
        }
    }
    out
}

/// Evaluate a 1-cochain at an element.
pub fn eval1<G: FiniteGroup>(group: &G, c: &Cochain, x: &G::Elem) -> RootExp {
    assert_eq!(c.arity, 1);
    RootExp { modulus: c.modulus, exp: c.table[group.index_of(x)] }
}
