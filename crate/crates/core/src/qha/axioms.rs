//! Exhaustive verification of the quasi-Hopf axioms on structure constants:
//! algebra and coalgebra laws, quasi-coassociativity, normalization and
//! pentagon for the reassociator, and the antipode conditions.

use crate::{Error, Result};

use super::data::QuasiHopfData;
use super::tensor::Tensor;

/// One line per axiom: pass, or the first counterexample.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub entries: Vec<(&'static str, std::result::Result<(), String>)>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, r)| r.is_ok())
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.entries.iter().filter(|(_, r)| r.is_err()).map(|(n, _)| *n).collect()
    }

    pub fn get(&self, name: &str) -> Option<&std::result::Result<(), String>> {
        self.entries.iter().find(|(n, _)| *n == name).map(|(_, r)| r)
    }
}

/// Run every axiom on all basis elements. The cap guards the `d^3`/`d^4`
/// exhaustive loops.
pub fn check_axioms(q: &QuasiHopfData, cap: u64) -> Result<AxiomReport> {
    if q.dim as u64 > cap {
        return Err(Error::CapExceeded { needed: q.dim as u64, cap });
    }
    let mut entries: Vec<(&'static str, std::result::Result<(), String>)> = Vec::new();
    let d = q.dim;
    let basis = |i: usize| super::tensor::Vect::basis(i);

    // Unit.
    entries.push((
        "unit",
        (0..d)
            .find_map(|i| {
                let e = basis(i);
                if q.mul_vect(&q.unit, &e) != e {
                    Some(format!("1 * {} differs", q.labels[i]))
                } else if q.mul_vect(&e, &q.unit) != e {
                    Some(format!("{} * 1 differs", q.labels[i]))
                } else {
                    None
                }
            })
            .map_or(Ok(()), Err),
    ));

    // Associativity.
    let mut assoc = Ok(());
    'assoc: for i in 0..d {
        for j in 0..d {
            let ij = q.mult(i, j).clone();
            for k in 0..d {
                let lhs = q.mul_vect(&ij, &basis(k));
                let rhs = q.mul_vect(&basis(i), q.mult(j, k));
                if lhs != rhs {
                    assoc = Err(format!(
                        "({} {}) {} != {} ({} {})",
                        q.labels[i], q.labels[j], q.labels[k], q.labels[i], q.labels[j], q.labels[k]
                    ));
                    break 'assoc;
                }
            }
        }
    }
    entries.push(("associativity", assoc));

    // Counit laws: (id (x) eps) Delta = id = (eps (x) id) Delta.
    entries.push((
        "counit",
        (0..d)
            .find_map(|i| {
                let dt = q.comult(i);
                let left = dt.contract(&q.counit, 1).to_vect();
                let right = dt.contract(&q.counit, 0).to_vect();
                let e = basis(i);
                if left != e || right != e {
                    Some(format!("counit law fails on {}", q.labels[i]))
                } else {
                    None
                }
            })
            .map_or(Ok(()), Err),
    ));

    // eps is an algebra map.
    entries.push((
        "counit-algebra-map",
        {
            let mut r = Ok(());
            if !q.eps_of(&q.unit).is_one() {
                r = Err("eps(1) != 1".into());
            }
            'outer: for i in 0..d {
                for j in 0..d {
                    let lhs = q.eps_of(q.mult(i, j));
                    let rhs = q.counit[i].mul(&q.counit[j]);
                    if lhs != rhs {
                        r = Err(format!("eps({} {}) != eps eps", q.labels[i], q.labels[j]));
                        break 'outer;
                    }
                }
            }
            r
        },
    ));

    // Delta is an algebra map.
    entries.push((
        "comult-algebra-map",
        {
            let mut r = Ok(());
            if q.delta_of(&q.unit) != q.unit_tensor(2) {
                r = Err("Delta(1) != 1 (x) 1".into());
            }
            'outer2: for i in 0..d {
                for j in 0..d {
                    let lhs = q.delta_of(q.mult(i, j));
                    let rhs = q.comult(i).mul(q.comult(j), q);
                    if lhs != rhs {
                        r = Err(format!("Delta({} {}) mismatch", q.labels[i], q.labels[j]));
                        break 'outer2;
                    }
                }
            }
            r
        },
    ));

    // Quasi-coassociativity: (id (x) Delta)(Delta h) Phi = Phi (Delta (x) id)(Delta h).
    entries.push((
        "quasi-coassociativity",
        (0..d)
            .find_map(|i| {
                let dt = q.comult(i);
                let lhs = dt.apply_comult(q, 1).mul(&q.phi, q);
                let rhs = q.phi.mul(&dt.apply_comult(q, 0), q);
                if lhs != rhs {
                    Some(format!("fails on {}", q.labels[i]))
                } else {
                    None
                }
            })
            .map_or(Ok(()), Err),
    ));

    // Phi invertible.
    entries.push((
        "phi-invertible",
        {
            let u3 = q.unit_tensor(3);
            if q.phi.mul(&q.phi_inv, q) != u3 {
                Err("Phi PhiInv != 1".into())
            } else if q.phi_inv.mul(&q.phi, q) != u3 {
                Err("PhiInv Phi != 1".into())
            } else {
                Ok(())
            }
        },
    ));

    // (id (x) eps (x) id)(Phi) = 1 (x) 1.
    entries.push((
        "phi-normalized",
        if q.phi.contract(&q.counit, 1) == q.unit_tensor(2) {
            Ok(())
        } else {
            Err("(id (x) eps (x) id)(Phi) != 1 (x) 1".into())
        },
    ));

    // Pentagon: (1 (x) Phi)(id (x) Delta (x) id)(Phi)(Phi (x) 1)
    //         = (id (x) id (x) Delta)(Phi)(Delta (x) id (x) id)(Phi).
    entries.push((
        "pentagon",
        {
            let one_phi = Tensor::from_vect(&q.unit).tensor_product(&q.phi);
            let phi_one = q.phi.tensor_product(&Tensor::from_vect(&q.unit));
            let lhs = one_phi.mul(&q.phi.apply_comult(q, 1), q).mul(&phi_one, q);
            let rhs = q.phi.apply_comult(q, 2).mul(&q.phi.apply_comult(q, 0), q);
            if lhs == rhs {
                Ok(())
            } else {
                Err("pentagon identity fails".into())
            }
        },
    ));

    // Antipode is an algebra anti-morphism.
    entries.push((
        "antipode-antimorphism",
        {
            let mut r = Ok(());
            if q.s_of(&q.unit) != q.unit {
                r = Err("S(1) != 1".into());
            }
            'outer3: for i in 0..d {
                for j in 0..d {
                    let lhs = q.s_of(q.mult(i, j));
                    let rhs = q.mul_vect(q.s_of_basis(j), q.s_of_basis(i));
                    if lhs != rhs {
                        r = Err(format!("S({} {}) != S S", q.labels[i], q.labels[j]));
                        break 'outer3;
                    }
                }
            }
            r
        },
    ));

    // S(h_1) alpha h_2 = eps(h) alpha.
    entries.push((
        "antipode-left",
        (0..d)
            .find_map(|i| {
                let mut acc = super::tensor::Vect::zero();
                for (k, c) in q.comult(i).iter() {
                    let term = q.mul_many(&[
                        q.s_of_basis(k[0] as usize),
                        &q.alpha,
                        &super::tensor::Vect::basis(k[1] as usize),
                    ]);
                    acc = acc.add(&term.scale(c));
                }
                if acc != q.alpha.scale(&q.counit[i]) {
                    Some(format!("fails on {}", q.labels[i]))
                } else {
                    None
                }
            })
            .map_or(Ok(()), Err),
    ));

    // h_1 beta S(h_2) = eps(h) beta.
    entries.push((
        "antipode-right",
        (0..d)
            .find_map(|i| {
                let mut acc = super::tensor::Vect::zero();
                for (k, c) in q.comult(i).iter() {
                    let term = q.mul_many(&[
                        &super::tensor::Vect::basis(k[0] as usize),
                        &q.beta,
                        q.s_of_basis(k[1] as usize),
                    ]);
                    acc = acc.add(&term.scale(c));
                }
                if acc != q.beta.scale(&q.counit[i]) {
                    Some(format!("fails on {}", q.labels[i]))
                } else {
                    None
                }
            })
            .map_or(Ok(()), Err),
    ));

    // X^1 beta S(X^2) alpha X^3 = 1.
    entries.push((
        "zigzag-phi",
        {
            let mut acc = super::tensor::Vect::zero();
            for (k, c) in q.phi.iter() {
                let term = q.mul_many(&[
                    &super::tensor::Vect::basis(k[0] as usize),
                    &q.beta,
                    q.s_of_basis(k[1] as usize),
                    &q.alpha,
                    &super::tensor::Vect::basis(k[2] as usize),
                ]);
                acc = acc.add(&term.scale(c));
            }
            if acc == q.unit {
                Ok(())
            } else {
                Err("X1 beta S(X2) alpha X3 != 1".into())
            }
        },
    ));

    // S(x^1) alpha x^2 beta S(x^3) = 1.
    entries.push((
        "zigzag-phi-inv",
        {
            let mut acc = super::tensor::Vect::zero();
            for (k, c) in q.phi_inv.iter() {
                let term = q.mul_many(&[
                    q.s_of_basis(k[0] as usize),
                    &q.alpha,
                    &super::tensor::Vect::basis(k[1] as usize),
                    &q.beta,
                    q.s_of_basis(k[2] as usize),
                ]);
                acc = acc.add(&term.scale(c));
            }
            if acc == q.unit {
                Ok(())
            } else {
                Err("S(x1) alpha x2 beta S(x3) != 1".into())
            }
        },
    ));

    Ok(AxiomReport { entries })
}
