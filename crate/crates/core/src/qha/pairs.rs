//! Pairs `(sigma, v)` of an algebra character and a grouplike-type element:
//! exact verification of the four defining conditions, and the bridge from
//! the abelian classification output to concrete pairs over `k^G_omega`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::classify::BraidedHopfDescriptor;
use crate::cyclo::CycloNum;
use crate::groups::{AbelianGroupSpec, FiniteGroup};
use crate::{Error, Result};

use super::data::QuasiHopfData;
use super::tensor::{Scalar, Tensor, Vect};

/// An algebra character `sigma` (values on the basis) and an element `v`.
#[derive(Clone, Debug)]
pub struct SigmaV {
    pub sigma: Vec<Scalar>,
    pub v: Vect,
}

#[derive(Clone, Debug)]
pub struct PairReport {
    pub conditions: Vec<(&'static str, std::result::Result<(), String>)>,
}

impl PairReport {
    pub fn all_pass(&self) -> bool {
        self.conditions.iter().all(|(_, r)| r.is_ok())
    }
}

fn sigma_of(q: &QuasiHopfData, sigma: &[Scalar], v: &Vect) -> Scalar {
    let mut acc = CycloNum::zero(q.conductor);
    for (i, c) in v.iter() {
        acc = acc.add(&sigma[i as usize].mul(c));
    }
    acc
}

/// Check the four conditions of an admissible pair:
/// `sigma(v) = -1`, `eps(v) = 1`,
/// `Delta(v) = sigma(y^1 x^3 X^2) x^1 X^1 v y^2 (x) x^2 v X^3 y^3`,
/// and `sigma(h_2) h_1 v = sigma(h_1) v h_2` for every basis `h`.
///
/// Errors (rather than reports) when `sigma` is not a unital algebra map.
pub fn check_pair(q: &QuasiHopfData, sv: &SigmaV) -> Result<PairReport> {
    if sv.sigma.len() != q.dim {
        return Err(Error::Dimension("sigma length != dim".into()));
    }
    // sigma must be a unital algebra map.
    if !sigma_of(q, &sv.sigma, &q.unit).is_one() {
        return Err(Error::InvalidParam("sigma(1) != 1".into()));
    }
    for i in 0..q.dim {
        for j in 0..q.dim {
            let lhs = sigma_of(q, &sv.sigma, q.mult(i, j));
            let rhs = sv.sigma[i].mul(&sv.sigma[j]);
            if lhs != rhs {
                return Err(Error::InvalidParam(format!(
                    "sigma is not multiplicative on ({}, {})",
                    q.labels[i], q.labels[j]
                )));
            }
        }
    }

    let mut conditions: Vec<(&'static str, std::result::Result<(), String>)> = Vec::new();

    let minus_one = CycloNum::from_integer(q.conductor, -1);
    conditions.push((
        "sigma(v) = -1",
        if sigma_of(q, &sv.sigma, &sv.v) == minus_one {
            Ok(())
        } else {
            Err("sigma(v) != -1".into())
        },
    ));
    conditions.push((
        "eps(v) = 1",
        if q.eps_of(&sv.v).is_one() {
            Ok(())
        } else {
            Err("eps(v) != 1".into())
        },
    ));

    // Delta(v) = sigma(y^1 x^3 X^2) x^1 X^1 v y^2 (x) x^2 v X^3 y^3, with
    // x, y running over Phi^{-1} and X over Phi. sigma is multiplicative, so
    // the three contractions factor:
    //   W_x = (id (x) id (x) sigma)(Phi^{-1})
    //   Z   = (id (x) sigma (x) id)((1 (x) 1 (x) v) Phi (v (x) 1 (x) 1))
    //   W_y = (sigma (x) id (x) id)(Phi^{-1})
    // and the right side is W_x Z W_y.
    let w_x = q.phi_inv.contract(&sv.sigma, 2);
    let w_y = q.phi_inv.contract(&sv.sigma, 0);
    let z = q
        .phi
        .mul_slot_right(&sv.v, 0, q)
        .mul_slot_left(&sv.v, 2, q)
        .contract(&sv.sigma, 1);
    let rhs = w_x.mul(&z, q).mul(&w_y, q);
    conditions.push((
        "coproduct identity",
        if q.delta_of(&sv.v) == rhs {
            Ok(())
        } else {
            Err("Delta(v) != twisted grouplike form".into())
        },
    ));

    conditions.push((
        "commutation identity",
        (0..q.dim)
            .find_map(|h| {
                let mut lhs = Vect::zero();
                let mut rhs = Vect::zero();
                for (k, c) in q.comult(h).iter() {
                    let s2 = &sv.sigma[k[1] as usize];
                    if !s2.is_zero() {
                        let t = q.mul_vect(&Vect::basis(k[0] as usize), &sv.v);
                        lhs = lhs.add(&t.scale(&c.mul(s2)));
                    }
                    let s1 = &sv.sigma[k[0] as usize];
                    if !s1.is_zero() {
                        let t = q.mul_vect(&sv.v, &Vect::basis(k[1] as usize));
                        rhs = rhs.add(&t.scale(&c.mul(s1)));
                    }
                }
                (lhs != rhs).then(|| format!("fails on {}", q.labels[h]))
            })
            .map_or(Ok(()), Err),
    ));

    Ok(PairReport { conditions })
}

/// Convenience for monomial presets: `sigma` by its values on `g`-type and
/// `x`-type generators is cumbersome to spell; this builds the character from
/// a closure on basis indices.
pub fn sigma_from_fn(q: &QuasiHopfData, f: impl Fn(usize) -> Scalar) -> Vec<Scalar> {
    (0..q.dim).map(f).collect()
}

/// Turn a classification descriptor into the concrete pair over the
/// `kgw(G, omega_a)` preset: `sigma(P_l) = [l = g]` for `g = g^f`, and
/// `v = sum_l zeta_N^{e(l)} P_l`.
pub fn from_classification(
    group: &AbelianGroupSpec,
    kgw_preset: &QuasiHopfData,
    desc: &BraidedHopfDescriptor,
) -> SigmaV {
    let g_idx = group.index_of(&desc.sigma_exps);
    let sigma: Vec<Scalar> = (0..kgw_preset.dim)
        .map(|i| {
            if i == g_idx {
                CycloNum::one(kgw_preset.conductor)
            } else {
                CycloNum::zero(kgw_preset.conductor)
            }
        })
        .collect();
    let mut v = Vect::zero();
    for (i, &e) in desc.v_exps.iter().enumerate() {
        v.add_term(i as u16, CycloNum::root(desc.n_modulus, e as i64));
    }
    SigmaV { sigma, v }
}

/// Expand an element of `k^G` (given on the dual basis by root-of-unity
/// exponents over `N`) in the group basis of `k[G]`: the coefficient of
/// `g^t` is `(1/|G|) sum_l zeta_N^{e(l)} prod_j xi_{m_j}^{-t_j l_j}`.
pub fn group_basis_coefficients(
    group: &AbelianGroupSpec,
    n_modulus: u64,
    exps: &[u64],
) -> Vec<Scalar> {
    let elems = group.elements();
    let m = group.moduli();
    let inv_order = BigRational::new(BigInt::from(1), BigInt::from(group.order() as i64));
    elems
        .iter()
        .map(|t| {
            let mut acc = CycloNum::zero(n_modulus);
            for (li, l) in elems.iter().enumerate() {
                let mut exp: i128 = exps[li] as i128;
                for j in 0..m.len() {
                    exp -= (n_modulus / m[j]) as i128 * t[j] as i128 * l[j] as i128;
                }
                acc = acc.add(&CycloNum::root(
                    n_modulus,
                    exp.rem_euclid(n_modulus as i128) as i64,
                ));
            }
            acc.scale(&inv_order)
        })
        .collect()
}

/// The same expansion for a general `Vect` over a `kgw` preset.
pub fn group_basis_of_vect(group: &AbelianGroupSpec, v: &Vect) -> Vec<Scalar> {
    let elems = group.elements();
    let m = group.moduli();
    let big_n = group.big_n();
    let inv_order = BigRational::new(BigInt::from(1), BigInt::from(group.order() as i64));
    elems
        .iter()
        .map(|t| {
            let mut acc = CycloNum::zero(big_n);
            for (li, l) in elems.iter().enumerate() {
                let Some(c) = v.coeff(li) else { continue };
                let mut exp: i128 = 0;
                for j in 0..m.len() {
                    exp -= (big_n / m[j]) as i128 * t[j] as i128 * l[j] as i128;
                }
                let character =
                    CycloNum::root(big_n, exp.rem_euclid(big_n as i128) as i64);
                acc = acc.add(&c.mul(&character));
            }
            acc.scale(&inv_order)
        })
        .collect()
}

/// Build a `Tensor` view of `v (x) 1`, handy in tests.
pub fn v_tensor_one(q: &QuasiHopfData, v: &Vect) -> Tensor {
    Tensor::from_vect(v).tensor_product(&Tensor::from_vect(&q.unit))
}
