//! Preset quasi-Hopf algebras: the function algebra `k^G_omega` of a finite
//! group with a normalized 3-cocycle, the Sweedler algebra, `k[C2]` with the
//! nontrivial reassociator, the codimension-2-radical algebras `H_q(8)`, the
//! Nichols Hopf algebras, and tensor products.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cocycles::{omega_abelian, CocycleDatum};
use crate::cyclo::CycloNum;
use crate::groups::{AbelianGroupSpec, FiniteGroup};
use crate::{Error, Result};

use super::data::QuasiHopfData;
use super::tensor::{Scalar, Tensor, Vect};

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// `k^G_omega` for an abelian group and datum: the dual basis `P_x`, the
/// reassociator `Phi = sum omega(a,b,c) P_a (x) P_b (x) P_c`, `alpha = 1`,
/// `beta = sum omega(g, g^{-1}, g)^{-1} P_g`. Scalars live in `Q(zeta_N)`.
pub fn kgw(group: &AbelianGroupSpec, datum: &CocycleDatum) -> Result<QuasiHopfData> {
    datum.validate(group)?;
    let elems = group.elements();
    let d = elems.len();
    let big_n = group.big_n();
    let script_n = group.script_n();
    let scale = (big_n / script_n) as i64;
    let labels: Vec<String> = elems.iter().map(|e| format!("P{}", group.label(e))).collect();

    let mut mult = vec![vec![Vect::zero(); d]; d];
    for (i, row) in mult.iter_mut().enumerate() {
        row[i] = Vect::basis(i);
    }
    let mut unit = Vect::zero();
    for i in 0..d {
        unit.add_term(i as u16, CycloNum::one(1));
    }
    let comult: Vec<Tensor> = elems
        .iter()
        .map(|h| {
            let mut t = Tensor::zero(2);
            for (xi, x) in elems.iter().enumerate() {
                let y = group.mul(&group.inv(x), h);
                t.add_term([xi as u16, group.index_of(&y) as u16, 0, 0], CycloNum::one(1));
            }
            t
        })
        .collect();
    let counit: Vec<Scalar> = elems
        .iter()
        .map(|e| {
            if group.is_identity(e) {
                CycloNum::one(big_n)
            } else {
                CycloNum::zero(big_n)
            }
        })
        .collect();

    let mut phi = Tensor::zero(3);
    let mut phi_inv = Tensor::zero(3);
    for (ai, a) in elems.iter().enumerate() {
        for (bi, b) in elems.iter().enumerate() {
            for (ci, c) in elems.iter().enumerate() {
                let w = omega_abelian(group, datum, a, b, c);
                let key = [ai as u16, bi as u16, ci as u16, 0];
                phi.add_term(key, CycloNum::root(big_n, w.exp as i64 * scale));
                phi_inv.add_term(key, CycloNum::root(big_n, -(w.exp as i64) * scale));
            }
        }
    }

    let s_map: Vec<Vect> =
        elems.iter().map(|e| Vect::basis(group.index_of(&group.inv(e)))).collect();
    let alpha = unit.clone();
    let mut beta = Vect::zero();
    for (i, g) in elems.iter().enumerate() {
        let w = omega_abelian(group, datum, g, &group.inv(g), g);
        beta.add_term(i as u16, CycloNum::root(big_n, -(w.exp as i64) * scale));
    }

    Ok(QuasiHopfData::new(
        labels, big_n, mult, unit, comult, counit, phi, phi_inv, s_map, alpha, beta,
    ))
}

/// Monomial-basis builder shared by the `g, x_i` presentations: basis words
/// `g^eps x^e` with `x_i^2 = 0`, `g x_i = -x_i g`, `x_i x_j = -x_j x_i`.
struct MonomialAlg {
    /// exponent tuples (eps, e_1..e_k) per basis index
    words: Vec<(u8, Vec<u8>)>,
    x_order: u8,
}

impl MonomialAlg {
    /// Anticommuting generators, each `x_i` of nilpotency order `x_order`.
    fn new(num_x: usize, x_order: u8) -> Self {
        let mut words = Vec::new();
        let mut e = vec![0u8; num_x];
        loop {
            for eps in 0..2u8 {
                words.push((eps, e.clone()));
            }
            let mut k = 0;
            loop {
                if k == num_x {
                    // reorder so that eps varies fastest, e_k slowest
                    words.sort_by_key(|(eps, e)| {
                        let mut idx: usize = 0;
                        for &b in e.iter().rev() {
                            idx = idx * (x_order as usize) + b as usize;
                        }
                        idx * 2 + *eps as usize
                    });
                    return MonomialAlg { words, x_order };
                }
                e[k] += 1;
                if e[k] < x_order {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
        }
    }

    fn index(&self, eps: u8, e: &[u8]) -> usize {
        let mut idx: usize = 0;
        for &b in e.iter().rev() {
            idx = idx * (self.x_order as usize) + b as usize;
        }
        idx * 2 + eps as usize
    }

    fn label(&self, i: usize) -> String {
        let (eps, e) = &self.words[i];
        let mut s = String::new();
        if *eps == 1 {
            s.push('g');
        }
        for (k, &b) in e.iter().enumerate() {
            for _ in 0..b {
                if e.len() == 1 {
                    s.push('x');
                } else {
                    s.push_str(&format!("x{}", k + 1));
                }
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// `(g^a X^u)(g^b X^w)` with the sign from moving `g^b` and sorting the
    /// anticommuting letters; zero when a nilpotency order is exceeded.
    fn word_mul(&self, i: usize, j: usize) -> Option<(usize, i64)> {
        let (a, u) = &self.words[i];
        let (b, w) = &self.words[j];
        let total_u: u32 = u.iter().map(|&x| x as u32).sum();
        let mut sign: i64 = if (*b as u32 * total_u) % 2 == 1 { -1 } else { 1 };
        let mut e = u.clone();
        for k in 0..w.len() {
            if w[k] == 0 {
                continue;
            }
            // x_k^{x_order} = 0.
            if e[k] + w[k] > self.x_order - 1 {
                return None;
            }
            // letters of w[k] pass the letters of u with index > k
            let above: u32 = u.iter().skip(k + 1).map(|&x| x as u32).sum();
            if (w[k] as u32 * above) % 2 == 1 {
                sign = -sign;
            }
            e[k] += w[k];
        }
        Some((self.index((a + b) % 2, &e), sign))
    }
}

fn scalar_int(conductor: u64, v: i64) -> Scalar {
    CycloNum::from_integer(conductor, v)
}

/// Shared construction: monomial algebra + grouplike `g` + generator
/// comultiplications, with `Phi`, `alpha`, `beta` supplied by the caller.
#[allow(clippy::too_many_arguments)]
fn monomial_qha(
    alg: &MonomialAlg,
    conductor: u64,
    delta_x: &dyn Fn(usize) -> Tensor,
    s_x: &dyn Fn(usize) -> Vect,
    phi: Tensor,
    phi_inv: Tensor,
    alpha: Vect,
    beta: Vect,
) -> QuasiHopfData {
    let d = alg.words.len();
    let labels: Vec<String> = (0..d).map(|i| alg.label(i)).collect();
    let mut mult = vec![vec![Vect::zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            if let Some((k, sign)) = alg.word_mul(i, j) {
                mult[i][j] = Vect::single(k, scalar_int(conductor, sign));
            }
        }
    }
    let unit = Vect::basis(alg.index(0, &vec![0; alg.words[0].1.len()]));
    let counit: Vec<Scalar> = alg
        .words
        .iter()
        .map(|(_, e)| {
            if e.iter().all(|&b| b == 0) {
                CycloNum::one(conductor)
            } else {
                CycloNum::zero(conductor)
            }
        })
        .collect();

    // Assemble Delta and S on words multiplicatively from the generators.
    let g_idx = alg.index(1, &vec![0; alg.words[0].1.len()]);
    let delta_g = {
        let mut t = Tensor::zero(2);
        t.add_term([g_idx as u16, g_idx as u16, 0, 0], CycloNum::one(conductor));
        t
    };
    // A provisional container for products; comult/s filled per word below.
    let proto = QuasiHopfData::new(
        labels.clone(),
        conductor,
        mult.clone(),
        unit.clone(),
        vec![Tensor::zero(2); d],
        counit.clone(),
        phi.clone(),
        phi_inv.clone(),
        vec![Vect::zero(); d],
        alpha.clone(),
        beta.clone(),
    );
    let mut comult = Vec::with_capacity(d);
    let mut s_map = Vec::with_capacity(d);
    for (eps, e) in &alg.words {
        let mut dt = proto.unit_tensor(2);
        if *eps == 1 {
            dt = dt.mul(&delta_g, &proto);
        }
        for (k, &b) in e.iter().enumerate() {
            for _ in 0..b {
                dt = dt.mul(&delta_x(k), &proto);
            }
        }
        comult.push(dt);
        // S is an anti-morphism: apply to letters in reverse order.
        let mut sv = unit.clone();
        for (k, &b) in e.iter().enumerate().rev() {
            for _ in 0..b {
                sv = proto.mul_vect(&sv, &s_x(k));
            }
        }
        if *eps == 1 {
            sv = proto.mul_vect(&sv, &Vect::basis(g_idx));
        }
        s_map.push(sv);
    }
    QuasiHopfData::new(labels, conductor, mult, unit, comult, counit, phi, phi_inv, s_map, alpha, beta)
}

/// Sweedler's 4-dimensional Hopf algebra on the basis `1, g, x, gx`.
pub fn h4() -> QuasiHopfData {
    let alg = MonomialAlg::new(1, 2);
    let conductor = 4;
    let x_idx = alg.index(0, &[1]);
    let g_idx = alg.index(1, &[0]);
    let gx_idx = alg.index(1, &[1]);
    let delta_x = move |_: usize| {
        // Delta(x) = g (x) x + x (x) 1
        let mut t = Tensor::zero(2);
        t.add_term([g_idx as u16, x_idx as u16, 0, 0], CycloNum::one(conductor));
        t.add_term([x_idx as u16, 0, 0, 0], CycloNum::one(conductor));
        t
    };
    let s_x = move |_: usize| Vect::single(gx_idx, scalar_int(conductor, -1));
    let phi = {
        let mut t = Tensor::zero(3);
        t.add_term([0, 0, 0, 0], CycloNum::one(conductor));
        t
    };
    monomial_qha(&alg, conductor, &delta_x, &s_x, phi.clone(), phi, Vect::basis(0), Vect::basis(0))
}

/// `Phi = 1 - 2 p_- (x) p_- (x) p_-` expanded on a group basis where index
/// `g_idx` is the grouplike `g` and index 0 the unit.
fn phi_h2(conductor: u64, g_idx: usize) -> Tensor {
    let mut t = Tensor::zero(3);
    t.add_term([0, 0, 0, 0], CycloNum::one(conductor));
    // -2 p_-^{(x)3} = -(1/4) sum (-1)^{a+b+c} g^a (x) g^b (x) g^c.
    let quarter = CycloNum::from_rational(conductor, half().clone() * half());
    for a in 0..2u16 {
        for b in 0..2u16 {
            for c in 0..2u16 {
                let sign = if (a + b + c) % 2 == 0 { -1 } else { 1 };
                let idx = |z: u16| if z == 1 { g_idx as u16 } else { 0 };
                t.add_term(
                    [idx(a), idx(b), idx(c), 0],
                    quarter.scale(&BigRational::from(BigInt::from(sign))),
                );
            }
        }
    }
    t
}

/// `k[C2]` with the nontrivial reassociator, `alpha = 1`, `beta = g`.
pub fn h2() -> QuasiHopfData {
    let conductor = 4;
    let labels = vec!["1".to_string(), "g".to_string()];
    let mut mult = vec![vec![Vect::zero(); 2]; 2];
    mult[0][0] = Vect::basis(0);
    mult[0][1] = Vect::basis(1);
    mult[1][0] = Vect::basis(1);
    mult[1][1] = Vect::basis(0);
    let unit = Vect::basis(0);
    let mut d0 = Tensor::zero(2);
    d0.add_term([0, 0, 0, 0], CycloNum::one(conductor));
    let mut d1 = Tensor::zero(2);
    d1.add_term([1, 1, 0, 0], CycloNum::one(conductor));
    let comult = vec![d0, d1];
    let counit = vec![CycloNum::one(conductor), CycloNum::one(conductor)];
    let phi = phi_h2(conductor, 1);
    let phi_inv = phi.clone();
    let s_map = vec![Vect::basis(0), Vect::basis(1)];
    QuasiHopfData::new(
        labels,
        conductor,
        mult,
        unit,
        comult,
        counit,
        phi,
        phi_inv,
        s_map,
        Vect::basis(0),
        Vect::basis(1),
    )
}

/// Sign of the primitive fourth root in `H_q(8)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QSign {
    Plus,
    Minus,
}

/// `H_q(8)`: `g^2 = 1`, `x^4 = 0`, `gx = -xg`, with
/// `Delta(x) = x (x) (p_+ + q p_-) + 1 (x) p_+ x + g (x) p_- x`,
/// `S(x) = -x (p_+ + q p_-)`, `Phi = 1 - 2 p_-^{(x)3}`, `alpha = g`, `beta = 1`.
pub fn hq8(sign: QSign) -> QuasiHopfData {
    let conductor = 4;
    let q = match sign {
        QSign::Plus => CycloNum::root(conductor, 1),
        QSign::Minus => CycloNum::root(conductor, 3),
    };
    let alg = MonomialAlg::new(1, 4);
    let g_idx = alg.index(1, &[0]);
    let x_idx = alg.index(0, &[1]);
    let gx_idx = alg.index(1, &[1]);
    let one = CycloNum::one(conductor);
    let hf = CycloNum::from_rational(conductor, half());
    // p_+ + q p_- = (1+q)/2 + (1-q)/2 g.
    let pq_plus = {
        let mut v = Vect::zero();
        v.add_term(0, one.add(&q).mul(&hf));
        v.add_term(g_idx as u16, one.sub(&q).mul(&hf));
        v
    };
    let delta_x = {
        let pq_plus = pq_plus.clone();
        let hf = hf.clone();
        move |_: usize| {
            let mut t = Tensor::zero(2);
            for (i, c) in pq_plus.iter() {
                t.add_term([x_idx as u16, i, 0, 0], c.clone());
            }
            // 1 (x) p_+ x = 1 (x) (x + gx)/2 ; g (x) p_- x = g (x) (x - gx)/2.
            t.add_term([0, x_idx as u16, 0, 0], hf.clone());
            t.add_term([0, gx_idx as u16, 0, 0], hf.clone());
            t.add_term([g_idx as u16, x_idx as u16, 0, 0], hf.clone());
            t.add_term([g_idx as u16, gx_idx as u16, 0, 0], hf.neg());
            t
        }
    };
    // S(x) = -x(p_+ + q p_-) = -(1+q)/2 x - (1-q)/2 x g; xg = -gx.
    let s_x = {
        let q = q.clone();
        let hf = hf.clone();
        let one = one.clone();
        move |_: usize| {
            let mut v = Vect::zero();
            v.add_term(x_idx as u16, one.add(&q).mul(&hf).neg());
            v.add_term(gx_idx as u16, one.sub(&q).mul(&hf));
            v
        }
    };
    let phi = phi_h2(conductor, g_idx);
    monomial_qha(
        &alg,
        conductor,
        &delta_x,
        &s_x,
        phi.clone(),
        phi,
        Vect::basis(g_idx),
        Vect::basis(0),
    )
}

/// Nichols Hopf algebra `H_{2^{n+1}}`: grouplike `g` and `n` anticommuting
/// `(g, 1)`-skew primitives with square zero; trivial reassociator.
pub fn nichols(n: usize) -> Result<QuasiHopfData> {
    if n == 0 {
        return Err(Error::InvalidParam("nichols needs at least one generator".into()));
    }
    let conductor = 4;
    let alg = MonomialAlg::new(n, 2);
    let g_idx = alg.index(1, &vec![0; n]);
    let x_indices: Vec<usize> = (0..n)
        .map(|k| {
            let mut e = vec![0u8; n];
            e[k] = 1;
            alg.index(0, &e)
        })
        .collect();
    let gx_indices: Vec<usize> = (0..n)
        .map(|k| {
            let mut e = vec![0u8; n];
            e[k] = 1;
            alg.index(1, &e)
        })
        .collect();
    let delta_x = {
        let x_indices = x_indices.clone();
        move |k: usize| {
            let mut t = Tensor::zero(2);
            t.add_term([x_indices[k] as u16, 0, 0, 0], CycloNum::one(conductor));
            t.add_term([g_idx as u16, x_indices[k] as u16, 0, 0], CycloNum::one(conductor));
            t
        }
    };
    let s_x = move |k: usize| Vect::single(gx_indices[k], scalar_int(conductor, -1));
    let phi = {
        let mut t = Tensor::zero(3);
        t.add_term([0, 0, 0, 0], CycloNum::one(conductor));
        t
    };
    Ok(monomial_qha(
        &alg,
        conductor,
        &delta_x,
        &s_x,
        phi.clone(),
        phi,
        Vect::basis(0),
        Vect::basis(0),
    ))
}

/// Tensor product quasi-Hopf algebra; basis `(i, j) -> i * dim2 + j`.
pub fn tensor_product_qha(q1: &QuasiHopfData, q2: &QuasiHopfData) -> QuasiHopfData {
    let (d1, d2) = (q1.dim, q2.dim);
    let d = d1 * d2;
    let conductor = num_integer::lcm(q1.conductor, q2.conductor);
    let pair_idx = |i: usize, j: usize| i * d2 + j;
    let labels: Vec<String> = (0..d)
        .map(|k| format!("{}*{}", q1.labels[k / d2], q2.labels[k % d2]))
        .collect();

    let cross_vect = |a: &Vect, b: &Vect| -> Vect {
        let mut out = Vect::zero();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                out.add_term(pair_idx(i as usize, j as usize) as u16, ca.mul(cb));
            }
        }
        out
    };

    let mut mult = vec![vec![Vect::zero(); d]; d];
    for i1 in 0..d1 {
        for j1 in 0..d2 {
            for i2 in 0..d1 {
                for j2 in 0..d2 {
                    mult[pair_idx(i1, j1)][pair_idx(i2, j2)] =
                        cross_vect(q1.mult(i1, i2), q2.mult(j1, j2));
                }
            }
        }
    }
    let unit = cross_vect(&q1.unit, &q2.unit);
    let comult: Vec<Tensor> = (0..d)
        .map(|k| {
            let (i, j) = (k / d2, k % d2);
            let mut t = Tensor::zero(2);
            for (k1, c1) in q1.comult(i).iter() {
                for (k2, c2) in q2.comult(j).iter() {
                    t.add_term(
                        [
                            pair_idx(k1[0] as usize, k2[0] as usize) as u16,
                            pair_idx(k1[1] as usize, k2[1] as usize) as u16,
                            0,
                            0,
                        ],
                        c1.mul(c2),
                    );
                }
            }
            t
        })
        .collect();
    let counit: Vec<Scalar> =
        (0..d).map(|k| q1.counit[k / d2].mul(&q2.counit[k % d2])).collect();
    let mut phi = Tensor::zero(3);
    for (k1, c1) in q1.phi.iter() {
        for (k2, c2) in q2.phi.iter() {
            phi.add_term(
                [
                    pair_idx(k1[0] as usize, k2[0] as usize) as u16,
                    pair_idx(k1[1] as usize, k2[1] as usize) as u16,
                    pair_idx(k1[2] as usize, k2[2] as usize) as u16,
                    0,
                ],
                c1.mul(c2),
            );
        }
    }
    let mut phi_inv = Tensor::zero(3);
    for (k1, c1) in q1.phi_inv.iter() {
        for (k2, c2) in q2.phi_inv.iter() {
            phi_inv.add_term(
                [
                    pair_idx(k1[0] as usize, k2[0] as usize) as u16,
                    pair_idx(k1[1] as usize, k2[1] as usize) as u16,
                    pair_idx(k1[2] as usize, k2[2] as usize) as u16,
                    0,
                ],
                c1.mul(c2),
            );
        }
    }
    let s_map: Vec<Vect> = (0..d)
        .map(|k| cross_vect(q1.s_of_basis(k / d2), q2.s_of_basis(k % d2)))
        .collect();
    let alpha = cross_vect(&q1.alpha, &q2.alpha);
    let beta = cross_vect(&q1.beta, &q2.beta);
    QuasiHopfData::new(labels, conductor, mult, unit, comult, counit, phi, phi_inv, s_map, alpha, beta)
}
