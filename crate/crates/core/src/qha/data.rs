//! Structure-constant container for a finite-dimensional quasi-Hopf algebra
//! over `Q(zeta_N)`, plus the handful of linear-algebra helpers (antipode
//! inversion, the sigma-twisted translation map) the biproduct construction
//! needs.

use std::collections::BTreeSet;

use crate::cyclo::CycloNum;
use crate::{Error, Result};

use super::tensor::{Scalar, Tensor, Vect};

/// A quasi-Hopf algebra by structure constants: multiplication table, unit,
/// comultiplication, counit, reassociator with inverse, and the antipode
/// triple `(S, alpha, beta)`.
#[derive(Clone, Debug)]
pub struct QuasiHopfData {
    pub dim: usize,
    pub labels: Vec<String>,
    pub conductor: u64,
    mult: Vec<Vec<Vect>>,
    pub unit: Vect,
    comult: Vec<Tensor>,
    pub counit: Vec<Scalar>,
    pub phi: Tensor,
    pub phi_inv: Tensor,
    s_map: Vec<Vect>,
    pub alpha: Vect,
    pub beta: Vect,
    /// `diag_idem[i]`: `e_i e_i = e_i` and `e_i e_j = 0 = e_j e_i` for all
    /// `j != i`; supports the tensor join fast path.
    diag_idem: Vec<bool>,
    /// `mult_nonzero[i][j]`: the product `e_i e_j` has any terms.
    mult_nonzero: Vec<Vec<bool>>,
}

impl QuasiHopfData {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        labels: Vec<String>,
        conductor: u64,
        mult: Vec<Vec<Vect>>,
        unit: Vect,
        comult: Vec<Tensor>,
        counit: Vec<Scalar>,
        phi: Tensor,
        phi_inv: Tensor,
        s_map: Vec<Vect>,
        alpha: Vect,
        beta: Vect,
    ) -> Self {
        let dim = labels.len();
        assert_eq!(mult.len(), dim);
        assert!(mult.iter().all(|r| r.len() == dim));
        assert_eq!(comult.len(), dim);
        assert_eq!(counit.len(), dim);
        assert_eq!(s_map.len(), dim);
        assert_eq!(phi.arity, 3);
        assert_eq!(phi_inv.arity, 3);
        let one = CycloNum::one(1);
        let diag_idem = (0..dim)
            .map(|i| {
                mult[i][i].as_single().map(|(j, c)| j as usize == i && *c == one).unwrap_or(false)
                    && (0..dim).all(|j| j == i || (mult[i][j].is_zero() && mult[j][i].is_zero()))
            })
            .collect();
        let mult_nonzero =
            (0..dim).map(|i| (0..dim).map(|j| !mult[i][j].is_zero()).collect()).collect();
        QuasiHopfData {
            dim,
            labels,
            conductor,
            mult,
            unit,
            comult,
            counit,
            phi,
            phi_inv,
            s_map,
            alpha,
            beta,
            diag_idem,
            mult_nonzero,
        }
    }

    pub fn mult_nonzero(&self, i: usize, j: usize) -> bool {
        self.mult_nonzero[i][j]
    }

    pub fn mult(&self, i: usize, j: usize) -> &Vect {
        &self.mult[i][j]
    }

    pub fn comult(&self, i: usize) -> &Tensor {
        &self.comult[i]
    }

    pub fn s_of_basis(&self, i: usize) -> &Vect {
        &self.s_map[i]
    }

    pub fn s_images(&self) -> &[Vect] {
        &self.s_map
    }

    pub fn diag_join_ok(&self, support: &BTreeSet<u16>) -> bool {
        support.iter().all(|&i| self.diag_idem[i as usize])
    }

    pub fn mul_vect(&self, a: &Vect, b: &Vect) -> Vect {
        let mut out = Vect::zero();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                let prod = &self.mult[i as usize][j as usize];
                if prod.is_zero() {
                    continue;
                }
                let c = ca.mul(cb);
                for (k, pc) in prod.iter() {
                    out.add_term(k, c.mul(pc));
                }
            }
        }
        out
    }

    pub fn mul_many(&self, factors: &[&Vect]) -> Vect {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul_vect(&acc, f);
        }
        acc
    }

    pub fn delta_of(&self, v: &Vect) -> Tensor {
        let mut out = Tensor::zero(2);
        for (i, c) in v.iter() {
            out = out.add(&self.comult[i as usize].scale(c));
        }
        out
    }

    pub fn s_of(&self, v: &Vect) -> Vect {
        let mut out = Vect::zero();
        for (i, c) in v.iter() {
            out = out.add(&self.s_map[i as usize].scale(c));
        }
        out
    }

    pub fn eps_of(&self, v: &Vect) -> Scalar {
        let mut out = CycloNum::zero(self.conductor);
        for (i, c) in v.iter() {
            out = out.add(&self.counit[i as usize].mul(c));
        }
        out
    }

    pub fn unit_tensor(&self, arity: usize) -> Tensor {
        let mut t = Tensor::from_vect(&self.unit);
        for _ in 1..arity {
            t = t.tensor_product(&Tensor::from_vect(&self.unit));
        }
        t
    }

    /// The antipode as a matrix inverse; errors when `S` is singular.
    pub fn s_inverse(&self) -> Result<Vec<Vect>> {
        invert_linear_map(self.dim, self.conductor, &self.s_map)
            .ok_or_else(|| Error::Singular("antipode matrix is singular".into()))
    }

    /// `T(h) = sigma(h_1) h_2` for an algebra character `sigma`, as images of
    /// the basis vectors.
    pub fn sigma_translation(&self, sigma: &[Scalar]) -> Vec<Vect> {
        (0..self.dim)
            .map(|i| {
                let mut out = Vect::zero();
                for (k, c) in self.comult[i].iter() {
                    let s = &sigma[k[0] as usize];
                    if s.is_zero() {
                        continue;
                    }
                    out.add_term(k[1], c.mul(s));
                }
                out
            })
            .collect()
    }

    /// Structure-constant equality: same dimension and identical tensors
    /// entry by entry (scalars compared across conductors).
    pub fn constants_equal(&self, other: &QuasiHopfData) -> bool {
        if self.dim != other.dim {
            return false;
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                if self.mult[i][j] != other.mult[i][j] {
                    return false;
                }
            }
        }
        if self.unit != other.unit || self.alpha != other.alpha || self.beta != other.beta {
            return false;
        }
        for i in 0..self.dim {
            if self.comult[i] != other.comult[i]
                || self.counit[i] != other.counit[i]
                || self.s_map[i] != other.s_map[i]
            {
                return false;
            }
        }
        self.phi == other.phi && self.phi_inv == other.phi_inv
    }
}

/// Invert a linear map given by basis images, by exact Gaussian elimination
/// over the cyclotomic field. Returns images of the inverse, or None.
pub fn invert_linear_map(dim: usize, conductor: u64, images: &[Vect]) -> Option<Vec<Vect>> {
    // Column j of the matrix is images[j].
    let mut a: Vec<Vec<CycloNum>> = vec![vec![CycloNum::zero(conductor); dim]; dim];
    for (j, img) in images.iter().enumerate() {
        for (i, c) in img.iter() {
            a[i as usize][j] = c.clone();
        }
    }
    let mut inv: Vec<Vec<CycloNum>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { CycloNum::one(conductor) } else { CycloNum::zero(conductor) })
                .collect()
        })
        .collect();
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        let pinv = p.inv().ok()?;
        for j in 0..dim {
            a[col][j] = a[col][j].mul(&pinv);
            inv[col][j] = inv[col][j].mul(&pinv);
        }
        for r in 0..dim {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..dim {
                let t = f.mul(&a[col][j]);
                a[r][j] = a[r][j].sub(&t);
                let t = f.mul(&inv[col][j]);
                inv[r][j] = inv[r][j].sub(&t);
            }
        }
    }
    // inv now holds the matrix inverse; read images column-wise.
    Some(
        (0..dim)
            .map(|j| {
                let mut v = Vect::zero();
                for (i, row) in inv.iter().enumerate() {
                    v.add_term(i as u16, row[j].clone());
                }
                v
            })
            .collect(),
    )
}
