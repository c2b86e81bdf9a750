//! Gauge transformations: twisting a quasi-Hopf structure by an invertible
//! counital `F`, the explicit twist family on the Sweedler algebra, and the
//! criterion deciding when two twisted Sweedler algebras are isomorphic.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclo::CycloNum;
use crate::{Error, Result};

use super::data::QuasiHopfData;
use super::tensor::{Scalar, Tensor, Vect};

/// A twist `F` with its inverse; both live in `H (x) H`.
#[derive(Clone, Debug)]
pub struct TwistData {
    pub f: Tensor,
    pub f_inv: Tensor,
}

impl TwistData {
    /// Check invertibility and the counit normalization
    /// `(eps (x) id)(F) = (id (x) eps)(F) = 1`.
    pub fn validate(&self, alg: &QuasiHopfData) -> Result<()> {
        if self.f.mul(&self.f_inv, alg) != alg.unit_tensor(2)
            || self.f_inv.mul(&self.f, alg) != alg.unit_tensor(2)
        {
            return Err(Error::Singular("F * FInv != 1 (x) 1".into()));
        }
        let left = self.f.contract(&alg.counit, 0).to_vect();
        let right = self.f.contract(&alg.counit, 1).to_vect();
        if left != alg.unit || right != alg.unit {
            return Err(Error::InvalidParam("twist is not counital".into()));
        }
        Ok(())
    }
}

/// `Delta_F(h) = F Delta(h) F^{-1}`,
/// `Phi_F = (1 (x) F)(id (x) Delta)(F) Phi (Delta (x) id)(F^{-1})(F^{-1} (x) 1)`,
/// `alpha_F = S(G^1) alpha G^2`, `beta_F = F^1 beta S(F^2)`, `S_F = S`.
pub fn twist(q: &QuasiHopfData, f: &TwistData) -> Result<QuasiHopfData> {
    f.validate(q)?;
    let comult: Vec<Tensor> = (0..q.dim)
        .map(|i| f.f.mul(q.comult(i), q).mul(&f.f_inv, q))
        .collect();
    let one = Tensor::from_vect(&q.unit);
    let phi = one
        .tensor_product(&f.f)
        .mul(&f.f.apply_comult(q, 1), q)
        .mul(&q.phi, q)
        .mul(&f.f_inv.apply_comult(q, 0), q)
        .mul(&f.f_inv.tensor_product(&one), q);
    let phi_inv = f
        .f
        .tensor_product(&one)
        .mul(&f.f.apply_comult(q, 0), q)
        .mul(&q.phi_inv, q)
        .mul(&f.f_inv.apply_comult(q, 1), q)
        .mul(&one.tensor_product(&f.f_inv), q);
    let mut alpha = Vect::zero();
    for (k, c) in f.f_inv.iter() {
        let term = q.mul_many(&[
            q.s_of_basis(k[0] as usize),
            &q.alpha,
            &Vect::basis(k[1] as usize),
        ]);
        alpha = alpha.add(&term.scale(c));
    }
    let mut beta = Vect::zero();
    for (k, c) in f.f.iter() {
        let term = q.mul_many(&[
            &Vect::basis(k[0] as usize),
            &q.beta,
            q.s_of_basis(k[1] as usize),
        ]);
        beta = beta.add(&term.scale(c));
    }
    Ok(QuasiHopfData::new(
        q.labels.clone(),
        q.conductor,
        (0..q.dim).map(|i| (0..q.dim).map(|j| q.mult(i, j).clone()).collect()).collect(),
        q.unit.clone(),
        comult,
        q.counit.clone(),
        phi,
        phi_inv,
        q.s_images().to_vec(),
        alpha,
        beta,
    ))
}

/// The nine scalars cutting out a counital element of `H4 (x) H4` on the
/// basis `p_{+-}, p_{+-} x`; it is a twist iff `a != 0`.
#[derive(Clone, Debug)]
pub struct H4TwistScalars {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub mu: Scalar,
    pub nu: Scalar,
    pub tau: Scalar,
    pub u: Scalar,
    pub v: Scalar,
    pub w: Scalar,
}

impl H4TwistScalars {
    pub fn from_i64(vals: [i64; 9]) -> Self {
        let s = |v: i64| CycloNum::from_integer(4, v);
        H4TwistScalars {
            a: s(vals[0]),
            b: s(vals[1]),
            c: s(vals[2]),
            mu: s(vals[3]),
            nu: s(vals[4]),
            tau: s(vals[5]),
            u: s(vals[6]),
            v: s(vals[7]),
            w: s(vals[8]),
        }
    }

    /// Scalars of the inverse twist: `abar = 1/a`, `bbar = -b/a`,
    /// `cbar = -c/a`, `mubar = -mu/a`, `nubar = -nu/a`,
    /// `taubar = c mu / a - tau`, `ubar = -u/a`, `vbar = u b / a - v`,
    /// `wbar = -w/a`.
    pub fn inverse(&self) -> Result<H4TwistScalars> {
        if self.a.is_zero() {
            return Err(Error::Singular("H4 twist needs a != 0".into()));
        }
        let ai = self.a.inv()?;
        Ok(H4TwistScalars {
            a: ai.clone(),
            b: self.b.mul(&ai).neg(),
            c: self.c.mul(&ai).neg(),
            mu: self.mu.mul(&ai).neg(),
            nu: self.nu.mul(&ai).neg(),
            tau: self.c.mul(&self.mu).mul(&ai).sub(&self.tau),
            u: self.u.mul(&ai).neg(),
            v: self.u.mul(&self.b).mul(&ai).sub(&self.v),
            w: self.w.mul(&ai).neg(),
        })
    }
}

/// Idempotent-basis helpers on the `1, g, x, gx` Sweedler basis.
fn h4_pvects() -> [Vect; 4] {
    let hf = CycloNum::from_rational(4, BigRational::new(BigInt::from(1), BigInt::from(2)));
    let mhf = hf.neg();
    // p_+ = (1 + g)/2, p_- = (1 - g)/2, p_+ x = (x + gx)/2, p_- x = (x - gx)/2.
    let mut pp = Vect::zero();
    pp.add_term(0, hf.clone());
    pp.add_term(1, hf.clone());
    let mut pm = Vect::zero();
    pm.add_term(0, hf.clone());
    pm.add_term(1, mhf.clone());
    let mut ppx = Vect::zero();
    ppx.add_term(2, hf.clone());
    ppx.add_term(3, hf.clone());
    let mut pmx = Vect::zero();
    pmx.add_term(2, hf.clone());
    pmx.add_term(3, mhf);
    [pp, pm, ppx, pmx]
}

fn pure(a: &Vect, b: &Vect) -> Tensor {
    Tensor::from_vect(a).tensor_product(&Tensor::from_vect(b))
}

/// Assemble the element of `H4 (x) H4` with the given scalars:
/// `F = p_+ (x) 1 + p_- (x) p_+ + a p_- (x) p_- + b p_- (x) p_- x
///    + c p_- (x) p_+ x + mu p_- x (x) p_- + nu p_- x (x) p_- x
///    + tau p_- x (x) p_+ x + u p_+ x (x) p_- + v p_+ x (x) p_- x
///    + w p_+ x (x) p_+ x`.
fn h4_twist_tensor(s: &H4TwistScalars, alg: &QuasiHopfData) -> Tensor {
    let [pp, pm, ppx, pmx] = h4_pvects();
    let one = alg.unit.clone();
    let mut f = pure(&pp, &one);
    f = f.add(&pure(&pm, &pp));
    f = f.add(&pure(&pm, &pm).scale(&s.a));
    f = f.add(&pure(&pm, &pmx).scale(&s.b));
    f = f.add(&pure(&pm, &ppx).scale(&s.c));
    f = f.add(&pure(&pmx, &pm).scale(&s.mu));
    f = f.add(&pure(&pmx, &pmx).scale(&s.nu));
    f = f.add(&pure(&pmx, &ppx).scale(&s.tau));
    f = f.add(&pure(&ppx, &pm).scale(&s.u));
    f = f.add(&pure(&ppx, &pmx).scale(&s.v));
    f = f.add(&pure(&ppx, &ppx).scale(&s.w));
    f
}

/// Build the twist; the inverse comes from the closed bar-scalar formulas and
/// is verified exactly against `F * FInv = 1 (x) 1`.
pub fn h4_twist(alg: &QuasiHopfData, s: &H4TwistScalars) -> Result<TwistData> {
    let f = h4_twist_tensor(s, alg);
    let f_inv = h4_twist_tensor(&s.inverse()?, alg);
    let t = TwistData { f, f_inv };
    t.validate(alg)?;
    Ok(t)
}

/// Decide whether the twists defined by `sf` and `sg` give isomorphic
/// quasi-Hopf algebras: iff `a = a'` and there are `omega != 0`, `kappa` with
/// `(b', c', mu', u') = omega (b, c, mu, u)`, `nu' = omega^2 nu + kappa a`,
/// `tau' = omega^2 tau + kappa`, `v' = omega^2 v - kappa`,
/// `w' = omega^2 w - kappa`. Returns one witness `(omega, kappa)`.
pub fn h4_twist_equiv(sf: &H4TwistScalars, sg: &H4TwistScalars) -> Option<(Scalar, Scalar)> {
    if sf.a != sg.a {
        return None;
    }
    let lin = [
        (sf.b.clone(), sg.b.clone()),
        (sf.c.clone(), sg.c.clone()),
        (sf.mu.clone(), sg.mu.clone()),
        (sf.u.clone(), sg.u.clone()),
    ];
    let check = |omega: &Scalar, kappa: &Scalar| -> bool {
        if omega.is_zero() {
            return false;
        }
        let om2 = omega.mul(omega);
        lin.iter().all(|(x, y)| *y == omega.mul(x))
            && sg.nu == om2.mul(&sf.nu).add(&kappa.mul(&sf.a))
            && sg.tau == om2.mul(&sf.tau).add(kappa)
            && sg.v == om2.mul(&sf.v).sub(kappa)
            && sg.w == om2.mul(&sf.w).sub(kappa)
    };
    // omega is pinned by any nonzero linear scalar.
    for (x, y) in &lin {
        if !x.is_zero() {
            let omega = y.mul(&x.inv().ok()?);
            if omega.is_zero() {
                return None;
            }
            let kappa = sg.tau.sub(&omega.mul(&omega).mul(&sf.tau));
            return check(&omega, &kappa).then_some((omega, kappa));
        }
        if !y.is_zero() {
            return None;
        }
    }
    // All linear scalars vanish; omega^2 is pinned by the kappa-free combos.
    let combos = [
        (sf.tau.add(&sf.v), sg.tau.add(&sg.v)),
        (sf.w.sub(&sf.v), sg.w.sub(&sg.v)),
        (sf.nu.add(&sf.a.mul(&sf.v)), sg.nu.add(&sg.a.mul(&sg.v))),
    ];
    let mut t: Option<Scalar> = None;
    for (x, y) in &combos {
        if x.is_zero() {
            if !y.is_zero() {
                return None;
            }
            continue;
        }
        let ratio = y.mul(&x.inv().ok()?);
        match &t {
            Some(t0) if *t0 != ratio => return None,
            Some(_) => {}
            None => t = Some(ratio),
        }
    }
    match t {
        None => {
            // Unconstrained: omega = 1 works with kappa = tau' - tau.
            let omega = CycloNum::one(4);
            let kappa = sg.tau.sub(&sf.tau);
            check(&omega, &kappa).then_some((omega, kappa))
        }
        Some(t) => {
            if t.is_zero() {
                return None;
            }
            let omega = t.sqrt_in_qi()?;
            let kappa = sg.tau.sub(&t.mul(&sf.tau));
            check(&omega, &kappa).then_some((omega, kappa))
        }
    }
}
