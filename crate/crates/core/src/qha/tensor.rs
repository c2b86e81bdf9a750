//! Sparse elements of `H` and of tensor powers `H^{otimes k}` (`k <= 4`),
//! with multiplication driven by the structure-constant table of the ambient
//! algebra.
//!
//! Products of tensors whose supports are pairwise orthogonal idempotents
//! (the function-algebra case) collapse to a key join; everything else goes
//! through the generic term-by-term route.

use std::collections::{BTreeMap, BTreeSet};

use crate::cyclo::CycloNum;

use super::data::QuasiHopfData;

pub type Scalar = CycloNum;

/// Sparse vector in the algebra: basis index -> coefficient, zeros pruned.
#[derive(Clone, Debug, Default)]
pub struct Vect {
    terms: BTreeMap<u16, Scalar>,
}

impl Vect {
    pub fn zero() -> Self {
        Vect { terms: BTreeMap::new() }
    }

    pub fn basis(i: usize) -> Self {
        let mut v = Vect::zero();
        v.terms.insert(i as u16, CycloNum::one(1));
        v
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        let mut v = Vect::zero();
        v.add_term(i as u16, c);
        v
    }

    pub fn add_term(&mut self, i: u16, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Vect) -> Vect {
        let mut out = self.clone();
        for (&i, c) in &rhs.terms {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Vect) -> Vect {
        let mut out = self.clone();
        for (&i, c) in &rhs.terms {
            out.add_term(i, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Vect {
        if c.is_zero() {
            return Vect::zero();
        }
        let mut out = Vect::zero();
        for (&i, x) in &self.terms {
            out.add_term(i, x.mul(c));
        }
        out
    }

    pub fn neg(&self) -> Vect {
        let mut out = Vect::zero();
        for (&i, x) in &self.terms {
            out.add_term(i, x.neg());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u16, &Scalar)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Option<&Scalar> {
        self.terms.get(&(i as u16))
    }

    /// Exactly `c * e_i` for some nonzero scalar.
    pub fn as_single(&self) -> Option<(u16, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&i, c)| (i, c))
        } else {
            None
        }
    }
}

impl PartialEq for Vect {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms.iter().zip(&other.terms).all(|((i, a), (j, b))| i == j && a == b)
    }
}

impl Eq for Vect {}

pub type Key = [u16; 4];

fn key_of(indices: &[u16]) -> Key {
    let mut k = [0u16; 4];
    k[..indices.len()].copy_from_slice(indices);
    k
}

/// Sparse element of a tensor power of the algebra.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub arity: usize,
    terms: BTreeMap<Key, Scalar>,
}

impl Tensor {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1 && arity <= 4);
        Tensor { arity, terms: BTreeMap::new() }
    }

    pub fn from_vect(v: &Vect) -> Self {
        let mut t = Tensor::zero(1);
        for (i, c) in v.iter() {
            t.add_term(key_of(&[i]), c.clone());
        }
        t
    }

    pub fn to_vect(&self) -> Vect {
        assert_eq!(self.arity, 1);
        let mut v = Vect::zero();
        for (k, c) in &self.terms {
            v.add_term(k[0], c.clone());
        }
        v
    }

    pub fn add_term(&mut self, key: Key, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.arity);
        if c.is_zero() {
            return out;
        }
        for (k, x) in &self.terms {
            out.add_term(*k, x.mul(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &Scalar)> {
        self.terms.iter()
    }

    /// `self (x) rhs` with concatenated slots.
    pub fn tensor_product(&self, rhs: &Tensor) -> Tensor {
        let arity = self.arity + rhs.arity;
        assert!(arity <= 4);
        let mut out = Tensor::zero(arity);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let mut k = [0u16; 4];
                k[..self.arity].copy_from_slice(&k1[..self.arity]);
                k[self.arity..arity].copy_from_slice(&k2[..rhs.arity]);
                out.add_term(k, c1.mul(c2));
            }
        }
        out
    }

    fn support(&self) -> BTreeSet<u16> {
        let mut s = BTreeSet::new();
        for k in self.terms.keys() {
            for &i in &k[..self.arity] {
                s.insert(i);
            }
        }
        s
    }

    /// Componentwise algebra product.
    ///
    /// Three routes, checked on the combined index support:
    /// 1. orthogonal-idempotent join (function-algebra blocks): only equal
    ///    keys survive;
    /// 2. unique-match: when each left index multiplies nonzero against at
    ///    most one right index of the support (or symmetrically), each term
    ///    has exactly one partner key, found by lookup;
    /// 3. the generic term-by-term product, with the scalar multiplication
    ///    deferred until all slots are known to survive.
    pub fn mul(&self, rhs: &Tensor, alg: &QuasiHopfData) -> Tensor {
        assert_eq!(self.arity, rhs.arity);
        let mut out = Tensor::zero(self.arity);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        let sup_l = self.support();
        let sup_r = rhs.support();
        let mut sup = sup_l.clone();
        sup.extend(sup_r.iter().copied());
        if alg.diag_join_ok(&sup) {
            let (small, large) = if self.terms.len() <= rhs.terms.len() {
                (&self.terms, &rhs.terms)
            } else {
                (&rhs.terms, &self.terms)
            };
            for (k, c1) in small {
                if let Some(c2) = large.get(k) {
                    out.add_term(*k, c1.mul(c2));
                }
            }
            return out;
        }
        // Unique right partner per left index?
        let right_match: Option<Vec<Option<u16>>> = {
            let mut table = vec![None; alg.dim];
            let mut ok = true;
            'scan: for &a in &sup_l {
                let mut found = None;
                for &b in &sup_r {
                    if alg.mult_nonzero(a as usize, b as usize) {
                        if found.is_some() {
                            ok = false;
                            break 'scan;
                        }
                        found = Some(b);
                    }
                }
                table[a as usize] = found;
            }
            ok.then_some(table)
        };
        if let Some(table) = right_match {
            for (k1, c1) in &self.terms {
                let mut k2 = [0u16; 4];
                let mut hit = true;
                for s in 0..self.arity {
                    match table[k1[s] as usize] {
                        Some(b) => k2[s] = b,
                        None => {
                            hit = false;
                            break;
                        }
                    }
                }
                if !hit {
                    continue;
                }
                if let Some(c2) = rhs.terms.get(&k2) {
                    accumulate_product(&mut out, k1, &k2, c1, c2, self.arity, alg);
                }
            }
            return out;
        }
        // Unique left partner per right index?
        let left_match: Option<Vec<Option<u16>>> = {
            let mut table = vec![None; alg.dim];
            let mut ok = true;
            'scan: for &b in &sup_r {
                let mut found = None;
                for &a in &sup_l {
                    if alg.mult_nonzero(a as usize, b as usize) {
                        if found.is_some() {
                            ok = false;
                            break 'scan;
                        }
                        found = Some(a);
                    }
                }
                table[b as usize] = found;
            }
            ok.then_some(table)
        };
        if let Some(table) = left_match {
            for (k2, c2) in &rhs.terms {
                let mut k1 = [0u16; 4];
                let mut hit = true;
                for s in 0..self.arity {
                    match table[k2[s] as usize] {
                        Some(a) => k1[s] = a,
                        None => {
                            hit = false;
                            break;
                        }
                    }
                }
                if !hit {
                    continue;
                }
                if let Some(c1) = self.terms.get(&k1) {
                    accumulate_product(&mut out, &k1, k2, c1, c2, self.arity, alg);
                }
            }
            return out;
        }
        for (k1, c1) in &self.terms {
            'terms: for (k2, c2) in &rhs.terms {
                for s in 0..self.arity {
                    if !alg.mult_nonzero(k1[s] as usize, k2[s] as usize) {
                        continue 'terms;
                    }
                }
                accumulate_product(&mut out, k1, k2, c1, c2, self.arity, alg);
            }
        }
        out
    }

    /// Apply the comultiplication to one slot, increasing the arity.
    pub fn apply_comult(&self, alg: &QuasiHopfData, slot: usize) -> Tensor {
        assert!(slot < self.arity && self.arity < 4);
        let mut out = Tensor::zero(self.arity + 1);
        for (k, c) in &self.terms {
            let dt = alg.comult(k[slot] as usize);
            for (dk, dc) in dt.iter() {
                let mut nk = [0u16; 4];
                nk[..slot].copy_from_slice(&k[..slot]);
                nk[slot] = dk[0];
                nk[slot + 1] = dk[1];
                for s in slot + 1..self.arity {
                    nk[s + 1] = k[s];
                }
                out.add_term(nk, c.mul(dc));
            }
        }
        out
    }

    /// Contract one slot with a linear functional, decreasing the arity.
    pub fn contract(&self, functional: &[Scalar], slot: usize) -> Tensor {
        assert!(slot < self.arity && self.arity > 1);
        let mut out = Tensor::zero(self.arity - 1);
        for (k, c) in &self.terms {
            let f = &functional[k[slot] as usize];
            if f.is_zero() {
                continue;
            }
            let mut nk = [0u16; 4];
            nk[..slot].copy_from_slice(&k[..slot]);
            for s in slot + 1..self.arity {
                nk[s - 1] = k[s];
            }
            out.add_term(nk, c.mul(f));
        }
        out
    }

    /// Replace slot contents through a linear map given per basis vector.
    pub fn map_slot(&self, images: &[Vect], slot: usize) -> Tensor {
        assert!(slot < self.arity);
        let mut out = Tensor::zero(self.arity);
        for (k, c) in &self.terms {
            for (i, x) in images[k[slot] as usize].iter() {
                let mut nk = *k;
                nk[slot] = i;
                out.add_term(nk, c.mul(x));
            }
        }
        out
    }

    /// Multiply one slot on the left by a fixed element.
    pub fn mul_slot_left(&self, v: &Vect, slot: usize, alg: &QuasiHopfData) -> Tensor {
        assert!(slot < self.arity);
        let mut out = Tensor::zero(self.arity);
        for (k, c) in &self.terms {
            for (j, vc) in v.iter() {
                let prod = alg.mult(j as usize, k[slot] as usize);
                for (i, pc) in prod.iter() {
                    let mut nk = *k;
                    nk[slot] = i;
                    out.add_term(nk, c.mul(vc).mul(pc));
                }
            }
        }
        out
    }

    /// Multiply one slot on the right by a fixed element.
    pub fn mul_slot_right(&self, v: &Vect, slot: usize, alg: &QuasiHopfData) -> Tensor {
        assert!(slot < self.arity);
        let mut out = Tensor::zero(self.arity);
        for (k, c) in &self.terms {
            for (j, vc) in v.iter() {
                let prod = alg.mult(k[slot] as usize, j as usize);
                for (i, pc) in prod.iter() {
                    let mut nk = *k;
                    nk[slot] = i;
                    out.add_term(nk, c.mul(vc).mul(pc));
                }
            }
        }
        out
    }
}

impl PartialEq for Tensor {
    fn eq(&self, other: &Self) -> bool {
        if self.arity != other.arity || self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms.iter().zip(&other.terms).all(|((k1, a), (k2, b))| k1 == k2 && a == b)
    }
}

impl Eq for Tensor {}

/// Expand `(c1 c2) * prod_s (e_{k1[s]} e_{k2[s]})` into `out`; all slot
/// products are known nonzero.
fn accumulate_product(
    out: &mut Tensor,
    k1: &Key,
    k2: &Key,
    c1: &Scalar,
    c2: &Scalar,
    arity: usize,
    alg: &QuasiHopfData,
) {
    let mut partial: Vec<(Key, Scalar)> = vec![([0u16; 4], c1.mul(c2))];
    for s in 0..arity {
        let prod = alg.mult(k1[s] as usize, k2[s] as usize);
        let mut next = Vec::with_capacity(partial.len() * prod.len());
        for (key, coeff) in &partial {
            for (i, c) in prod.iter() {
                let mut k = *key;
                k[s] = i;
                next.push((k, coeff.mul(c)));
            }
        }
        partial = next;
    }
    for (k, c) in partial {
        out.add_term(k, c);
    }
}
