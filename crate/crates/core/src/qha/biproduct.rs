//! The two rank-2 biproduct constructors: adjoining a central grouplike
//! (`H_g`, the tensor product with `k[C2]`), and adjoining a square-zero
//! skew element `theta` with `h theta = sigma(h_1) theta h_2` (`H(theta)`).
//!
//! `H(theta)` is built on the basis `{e_i} U {e_i theta}`. Writing elements
//! as `h0 + h1 theta` and using `theta k = T^{-1}(k) theta` for the
//! translation `T(h) = sigma(h_1) h_2`, the product law is
//! `(h0 + h1 theta)(k0 + k1 theta) = h0 k0 + (h0 k1 + h1 T^{-1}(k0)) theta`.

use crate::cyclo::CycloNum;
use crate::{Error, Result};

use super::data::{invert_linear_map, QuasiHopfData};
use super::pairs::{check_pair, SigmaV};
use super::tensor::{Tensor, Vect};

/// Adjoin a central grouplike `g` with `g^2 = 1`: basis `{e_i} U {e_i g}`.
pub fn biproduct_g(q: &QuasiHopfData) -> QuasiHopfData {
    let d = q.dim;
    let dd = 2 * d;
    let mut labels: Vec<String> = q.labels.clone();
    labels.extend(q.labels.iter().map(|l| format!("{l}g")));
    let shift_vect = |v: &Vect, by: usize| -> Vect {
        let mut out = Vect::zero();
        for (i, c) in v.iter() {
            out.add_term(i + by as u16, c.clone());
        }
        out
    };
    let mut mult = vec![vec![Vect::zero(); dd]; dd];
    for i in 0..d {
        for j in 0..d {
            let base = q.mult(i, j);
            mult[i][j] = base.clone();
            mult[i][d + j] = shift_vect(base, d);
            mult[d + i][j] = shift_vect(base, d);
            mult[d + i][d + j] = base.clone();
        }
    }
    let unit = q.unit.clone();
    let shift_tensor2 = |t: &Tensor, b0: usize, b1: usize| -> Tensor {
        let mut out = Tensor::zero(2);
        for (k, c) in t.iter() {
            out.add_term([k[0] + b0 as u16, k[1] + b1 as u16, 0, 0], c.clone());
        }
        out
    };
    let mut comult: Vec<Tensor> = (0..d).map(|i| q.comult(i).clone()).collect();
    comult.extend((0..d).map(|i| shift_tensor2(q.comult(i), d, d)));
    let mut counit = q.counit.clone();
    counit.extend(q.counit.iter().cloned());
    let mut s_map: Vec<Vect> = (0..d).map(|i| q.s_of_basis(i).clone()).collect();
    s_map.extend((0..d).map(|i| shift_vect(q.s_of_basis(i), d)));
    QuasiHopfData::new(
        labels,
        q.conductor,
        mult,
        unit,
        comult,
        counit,
        q.phi.clone(),
        q.phi_inv.clone(),
        s_map,
        q.alpha.clone(),
        q.beta.clone(),
    )
}

/// Adjoin `theta` with `theta^2 = 0`, `h theta = sigma(h_1) theta h_2`,
/// `Delta(theta) = sigma(X^2 x^1) v X^1 x^2 (x) theta X^3 x^3
///              + sigma(x^1) theta x^2 (x) x^3`,
/// `S(theta) = -sigma(X^2 x^1_2) S(X^1 x^1_1 v) alpha theta X^3 x^2 beta S(x^3)`.
///
/// The pair must pass `check_pair`; the translation `T` must be invertible.
pub fn biproduct_theta(q: &QuasiHopfData, sv: &SigmaV) -> Result<QuasiHopfData> {
    let report = check_pair(q, sv)?;
    if !report.all_pass() {
        let failed: Vec<&str> =
            report.conditions.iter().filter(|(_, r)| r.is_err()).map(|(n, _)| *n).collect();
        return Err(Error::InvalidParam(format!("pair conditions failed: {}", failed.join(", "))));
    }
    let d = q.dim;
    let dd = 2 * d;
    let t_map = q.sigma_translation(&sv.sigma);
    let t_inv = invert_linear_map(d, q.conductor, &t_map)
        .ok_or_else(|| Error::Singular("sigma translation map is singular".into()))?;
    let t_inv_of = |v: &Vect| -> Vect {
        let mut out = Vect::zero();
        for (i, c) in v.iter() {
            out = out.add(&t_inv[i as usize].scale(c));
        }
        out
    };

    let mut labels: Vec<String> = q.labels.clone();
    labels.extend(q.labels.iter().map(|l| {
        if l == "1" {
            "theta".to_string()
        } else {
            format!("{l}theta")
        }
    }));

    // Multiplication: block (i, j) plain; (i, d+j) -> (e_i e_j) theta;
    // (d+i, j) -> (e_i T^{-1}(e_j)) theta; (d+i, d+j) -> 0.
    let mut mult = vec![vec![Vect::zero(); dd]; dd];
    let theta_shift = |v: &Vect| -> Vect {
        let mut out = Vect::zero();
        for (i, c) in v.iter() {
            out.add_term(i + d as u16, c.clone());
        }
        out
    };
    for i in 0..d {
        for j in 0..d {
            mult[i][j] = q.mult(i, j).clone();
            mult[i][d + j] = theta_shift(q.mult(i, j));
            mult[d + i][j] = theta_shift(&q.mul_vect(&Vect::basis(i), &t_inv[j]));
        }
    }
    let unit = q.unit.clone();
    let mut counit = q.counit.clone();
    counit.extend(std::iter::repeat(CycloNum::zero(q.conductor)).take(d));

    // Delta(theta), written with theta moved to the right through T^{-1}:
    //   term1 = (v (x) 1) * W * P with W = (id (x) sigma (x) id)(Phi),
    //           P = (sigma (x) id (x) id)(Phi^{-1}), then T^{-1} and the
    //           theta shift on slot 2;
    //   term2 = T^{-1} and theta shift on slot 1 of P.
    let p2 = q.phi_inv.contract(&sv.sigma, 0);
    let w2 = q.phi.contract(&sv.sigma, 1);
    let term1 = {
        let prod = w2.mul(&p2, q).mul_slot_left(&sv.v, 0, q);
        let mapped = prod.map_slot(&t_inv, 1);
        let mut out = Tensor::zero(2);
        for (k, c) in mapped.iter() {
            out.add_term([k[0], k[1] + d as u16, 0, 0], c.clone());
        }
        out
    };
    let term2 = {
        let mapped = p2.map_slot(&t_inv, 0);
        let mut out = Tensor::zero(2);
        for (k, c) in mapped.iter() {
            out.add_term([k[0] + d as u16, k[1], 0, 0], c.clone());
        }
        out
    };
    let delta_theta = term1.add(&term2);

    // S(theta) = -[sum sigma(X^2) sigma(x^1_2) S(X^1 x^1_1 v) alpha
    //              T^{-1}(X^3 x^2 beta S(x^3))] theta.
    let s_theta_core = {
        // K = sum sigma(x^1_2) x^1_1 (x) x^2 (x) x^3 over Phi^{-1}.
        let k3 = q.phi_inv.apply_comult(q, 0).contract(&sv.sigma, 1);
        // K'' = (u v) (x) (q beta S(r)) collapsing K's slots 2, 3.
        let mut k2 = Tensor::zero(2);
        for (k, c) in k3.iter() {
            let left = q.mul_vect(&Vect::basis(k[0] as usize), &sv.v);
            let right = q.mul_many(&[
                &Vect::basis(k[1] as usize),
                &q.beta,
                q.s_of_basis(k[2] as usize),
            ]);
            for (li, lc) in left.iter() {
                for (ri, rc) in right.iter() {
                    k2.add_term([li, ri, 0, 0], c.mul(lc).mul(rc));
                }
            }
        }
        // heavy = W * K'' with W = sigma(X^2) X^1 (x) X^3.
        let w = q.phi.contract(&sv.sigma, 1);
        let heavy = w.mul(&k2, q);
        let mut core = Vect::zero();
        for (k, c) in heavy.iter() {
            let term = q.mul_many(&[
                q.s_of_basis(k[0] as usize),
                &q.alpha,
                &t_inv_of(&Vect::basis(k[1] as usize)),
            ]);
            core = core.add(&term.scale(c));
        }
        core.neg()
    };

    // Assemble comultiplication and antipode on the doubled basis inside a
    // provisional copy that already knows the doubled multiplication.
    let proto = QuasiHopfData::new(
        labels.clone(),
        q.conductor,
        mult.clone(),
        unit.clone(),
        vec![Tensor::zero(2); dd],
        counit.clone(),
        q.phi.clone(),
        q.phi_inv.clone(),
        vec![Vect::zero(); dd],
        q.alpha.clone(),
        q.beta.clone(),
    );
    let mut comult: Vec<Tensor> = (0..d).map(|i| q.comult(i).clone()).collect();
    for i in 0..d {
        // Delta(e_i theta) = Delta(e_i) Delta(theta) in the doubled algebra.
        comult.push(q.comult(i).mul(&delta_theta, &proto));
    }
    let mut s_map: Vec<Vect> = (0..d).map(|i| q.s_of_basis(i).clone()).collect();
    for i in 0..d {
        // S(e_i theta) = S(theta) S(e_i) = core theta S(e_i)
        //              = core T^{-1}(S(e_i)) theta.
        let v = q.mul_vect(&s_theta_core, &t_inv_of(q.s_of_basis(i)));
        s_map.push(theta_shift(&v));
    }

    Ok(QuasiHopfData::new(
        labels,
        q.conductor,
        mult,
        unit,
        comult,
        counit,
        q.phi.clone(),
        q.phi_inv.clone(),
        s_map,
        q.alpha.clone(),
        q.beta.clone(),
    ))
}
