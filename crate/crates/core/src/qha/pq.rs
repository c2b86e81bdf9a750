//! The elements `p_R = x^1 (x) x^2 beta S(x^3)` and
//! `q_R = X^1 (x) S^{-1}(alpha X^3) X^2`, with exhaustive verification of
//! their exchange identities.

use crate::Result;

use super::data::QuasiHopfData;
use super::tensor::{Tensor, Vect};

#[derive(Clone, Debug)]
pub struct PqReport {
    pub p_r: Tensor,
    pub q_r: Tensor,
    pub identities: Vec<(&'static str, std::result::Result<(), String>)>,
}

impl PqReport {
    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(|(_, r)| r.is_ok())
    }
}

/// Build `p_R`, `q_R` (inverting `S` exactly) and verify, for every basis
/// element `h`:
/// `Delta(h_1) p_R (1 (x) S(h_2)) = p_R (h (x) 1)`,
/// `(1 (x) S^{-1}(h_2)) q_R Delta(h_1) = (h (x) 1) q_R`,
/// and the two collapse identities
/// `(1 (x) S^{-1}(p^2)) q_R Delta(p^1) = 1 (x) 1`,
/// `Delta(q^1) p_R (1 (x) S(q^2)) = 1 (x) 1`.
pub fn pq_elements(q: &QuasiHopfData) -> Result<PqReport> {
    let s_inv = q.s_inverse()?;

    let mut p_r = Tensor::zero(2);
    for (k, c) in q.phi_inv.iter() {
        let right = q.mul_many(&[
            &Vect::basis(k[1] as usize),
            &q.beta,
            q.s_of_basis(k[2] as usize),
        ]);
        for (i, rc) in right.iter() {
            p_r.add_term([k[0], i, 0, 0], c.mul(rc));
        }
    }
    let mut q_r = Tensor::zero(2);
    for (k, c) in q.phi.iter() {
        let ax3 = q.mul_vect(&q.alpha, &Vect::basis(k[2] as usize));
        let mut sinv_ax3 = Vect::zero();
        for (i, x) in ax3.iter() {
            sinv_ax3 = sinv_ax3.add(&s_inv[i as usize].scale(x));
        }
        let right = q.mul_vect(&sinv_ax3, &Vect::basis(k[1] as usize));
        for (i, rc) in right.iter() {
            q_r.add_term([k[0], i, 0, 0], c.mul(rc));
        }
    }

    let u2 = q.unit_tensor(2);
    let one_t = Tensor::from_vect(&q.unit);
    let mut identities: Vec<(&'static str, std::result::Result<(), String>)> = Vec::new();

    // Delta(h_1) p_R (1 (x) S(h_2)) = p_R (h (x) 1).
    identities.push((
        "pr-exchange",
        (0..q.dim)
            .find_map(|h| {
                let mut lhs = Tensor::zero(2);
                for (k, c) in q.comult(h).iter() {
                    let t = q
                        .comult(k[0] as usize)
                        .mul(&p_r, q)
                        .mul(&one_t.tensor_product(&Tensor::from_vect(q.s_of_basis(k[1] as usize))), q);
                    lhs = lhs.add(&t.scale(c));
                }
                let rhs =
                    p_r.mul(&Tensor::from_vect(&Vect::basis(h)).tensor_product(&one_t), q);
                (lhs != rhs).then(|| format!("fails on {}", q.labels[h]))
            })
            .map_or(Ok(()), Err),
    ));

    // (1 (x) S^{-1}(h_2)) q_R Delta(h_1) = (h (x) 1) q_R.
    identities.push((
        "qr-exchange",
        (0..q.dim)
            .find_map(|h| {
                let mut lhs = Tensor::zero(2);
                for (k, c) in q.comult(h).iter() {
                    let t = one_t
                        .tensor_product(&Tensor::from_vect(&s_inv[k[1] as usize]))
                        .mul(&q_r, q)
                        .mul(q.comult(k[0] as usize), q);
                    lhs = lhs.add(&t.scale(c));
                }
                let rhs =
                    Tensor::from_vect(&Vect::basis(h)).tensor_product(&one_t).mul(&q_r, q);
                (lhs != rhs).then(|| format!("fails on {}", q.labels[h]))
            })
            .map_or(Ok(()), Err),
    ));

    // (1 (x) S^{-1}(p^2)) q_R Delta(p^1) = 1 (x) 1.
    identities.push(("pq-collapse-a", {
        let mut acc = Tensor::zero(2);
        for (k, c) in p_r.iter() {
            let mut sinv_p2 = Vect::zero();
            sinv_p2 = sinv_p2.add(&s_inv[k[1] as usize]);
            let t = one_t
                .tensor_product(&Tensor::from_vect(&sinv_p2))
                .mul(&q_r, q)
                .mul(q.comult(k[0] as usize), q);
            acc = acc.add(&t.scale(c));
        }
        if acc == u2 {
            Ok(())
        } else {
            Err("sum != 1 (x) 1".into())
        }
    }));

    // Delta(q^1) p_R (1 (x) S(q^2)) = 1 (x) 1.
    identities.push(("pq-collapse-b", {
        let mut acc = Tensor::zero(2);
        for (k, c) in q_r.iter() {
            let t = q
                .comult(k[0] as usize)
                .mul(&p_r, q)
                .mul(&one_t.tensor_product(&Tensor::from_vect(q.s_of_basis(k[1] as usize))), q);
            acc = acc.add(&t.scale(c));
        }
        if acc == u2 {
            Ok(())
        } else {
            Err("sum != 1 (x) 1".into())
        }
    }));

    Ok(PqReport { p_r, q_r, identities })
}
