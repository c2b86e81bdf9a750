//! Classification pipelines: the divisibility system cut out by the triple
//! part of a cocycle datum and its Smith-normal-form solution, the integrality
//! test selecting `(f, lambda)` pairs, the cyclic and two-factor (conic)
//! specializations, the double dihedral classification, and the orbit counts
//! for semisimple dimension 4.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cocycles::{
    coboundary, ddn_characters, ddn_flat_closed_form, ddn_witness, Cochain, CocycleDatum,
};
use crate::groups::{AbelianGroupSpec, DdnSpec, FiniteGroup};
use crate::zlattice::{smith_normal_form, IntMat};
use crate::{Error, Result};

/// Default box-size cap for brute-force searches.
pub const DEFAULT_SEARCH_CAP: u64 = 4000;

/// The homogeneous system `X A = 0` encoding the divisibility conditions:
/// `A` stacks the triple-datum block `A'` over `M I`.
#[derive(Clone, Debug)]
pub struct DivisibilitySystem {
    /// `A'`, `n` by `n(n-1)/2`, columns indexed by pairs `(r, s)`, `r < s`,
    /// in lexicographic order.
    pub a_prime: IntMat,
    /// The full `(n + nn) x nn` matrix `[A'; M I]`.
    pub a_full: IntMat,
    pub pairs: Vec<(usize, usize)>,
    pub big_m: u64,
}

/// `A'[i, (r,s)] = +M^c_{i,r,s}` for `i < r`, `-M^c_{r,i,s}` for `r < i < s`,
/// `+M^c_{r,s,i}` for `i > s`, and `0` on `i = r` or `i = s`.
pub fn build_divisibility_system(
    group: &AbelianGroupSpec,
    datum: &CocycleDatum,
) -> Result<DivisibilitySystem> {
    let n = group.rank();
    if n < 3 {
        return Err(Error::InvalidParam(format!(
            "divisibility system needs at least 3 factors, group has {n}"
        )));
    }
    let mut pairs = Vec::new();
    for r in 0..n {
        for s in r + 1..n {
            pairs.push((r, s));
        }
    }
    let nn = pairs.len();
    let big_m = group.big_m();
    let mut a_prime = vec![vec![0i64; nn]; n];
    for (col, &(r, s)) in pairs.iter().enumerate() {
        for (i, row) in a_prime.iter_mut().enumerate() {
            row[col] = if i < r {
                datum.m_c(group, i, r, s)
            } else if i == r || i == s {
                0
            } else if i < s {
                -datum.m_c(group, r, i, s)
            } else {
                datum.m_c(group, r, s, i)
            };
        }
    }
    let mut full = a_prime.clone();
    for j in 0..nn {
        let mut row = vec![0i64; nn];
        row[j] = big_m as i64;
        full.push(row);
    }
    Ok(DivisibilitySystem {
        a_prime: IntMat::from_rows(&a_prime)?,
        a_full: IntMat::from_rows(&full)?,
        pairs,
        big_m,
    })
}

/// Direct check of the divisibility conditions for a single `f`:
/// for every pair `r < s`,
/// `M | sum_{u<r} M^c_{urs} f_u - sum_{r<v<s} M^c_{rvs} f_v + sum_{w>s} M^c_{rsw} f_w`.
pub fn divisibility_holds(group: &AbelianGroupSpec, datum: &CocycleDatum, f: &[u64]) -> bool {
    let n = group.rank();
    if n < 3 {
        return true;
    }
    let m = group.big_m() as i128;
    for r in 0..n {
        for s in r + 1..n {
            let mut acc: i128 = 0;
            for u in 0..r {
                acc += datum.m_c(group, u, r, s) as i128 * f[u] as i128;
            }
            for v in r + 1..s {
                acc -= datum.m_c(group, r, v, s) as i128 * f[v] as i128;
            }
            for w in s + 1..n {
                acc += datum.m_c(group, r, s, w) as i128 * f[w] as i128;
            }
            if acc.rem_euclid(m) != 0 {
                return false;
            }
        }
    }
    true
}

/// Which route `f_solutions` takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FSolveMethod {
    /// Scan the canonical box and test each divisibility directly.
    Brute,
    /// Solve `X A = 0` through the Smith normal form of `A'`, gluing the
    /// Bezout block for `(d'_j, M)`, then reduce the solution lattice into
    /// the box.
    Snf,
}

/// All `f` in the canonical box `[0, m_1) x .. x [0, m_n)` satisfying the
/// divisibility conditions, sorted lexicographically.
pub fn f_solutions(
    group: &AbelianGroupSpec,
    datum: &CocycleDatum,
    method: FSolveMethod,
    cap: u64,
) -> Result<Vec<Vec<u64>>> {
    let order = group.order() as u64;
    if order > cap {
        return Err(Error::CapExceeded { needed: order, cap });
    }
    if group.rank() < 3 {
        return Ok(group.elements());
    }
    match method {
        FSolveMethod::Brute => {
            Ok(group.elements().into_iter().filter(|f| divisibility_holds(group, datum, f)).collect())
        }
        FSolveMethod::Snf => f_solutions_snf(group, datum),
    }
}

/// The Smith-normal-form route. Builds the unimodular `U` for the stacked
/// system from `U', V'` of `A'` and the Bezout coefficients of `(d'_j, M)`,
/// verifies `U A V' = diag((d'_1, M), .., (d'_{r'}, M), M, .., M)` exactly,
/// and reads the solution lattice off the last `n` rows of `U`.
fn f_solutions_snf(group: &AbelianGroupSpec, datum: &CocycleDatum) -> Result<Vec<Vec<u64>>> {
    let n = group.rank();
    let sys = build_divisibility_system(group, datum)?;
    let nn = sys.pairs.len();
    let big_m = BigInt::from(sys.big_m);
    let snf = smith_normal_form(&sys.a_prime);
    let rp = snf.rank();

    // U'' glues alpha_j d'_j + beta_j M = (d'_j, M) into the stacked system.
    let total = n + nn;
    let mut u2 = IntMat::zero(total, total);
    let mut gcds = Vec::with_capacity(rp);
    for j in 0..rp {
        let d = snf.diag[j].clone();
        let e = d.extended_gcd(&big_m);
        gcds.push(e.gcd.clone());
        u2[(j, j)] = e.x; // alpha_j
        u2[(j, n + j)] = e.y; // beta_j
        u2[(nn + j, j)] = -(&big_m / &e.gcd);
        u2[(nn + j, n + j)] = &d / &e.gcd;
    }
    for j in rp..nn {
        u2[(j, n + j)] = BigInt::one();
    }
    for i in rp..n {
        u2[(nn + i, i)] = BigInt::one();
    }

    // blockdiag(U', V'^{-1})
    let vp_inv = snf.v.unimodular_inverse()?;
    let mut block = IntMat::zero(total, total);
    for i in 0..n {
        for j in 0..n {
            block[(i, j)] = snf.u[(i, j)].clone();
        }
    }
    for i in 0..nn {
        for j in 0..nn {
            block[(n + i, n + j)] = vp_inv[(i, j)].clone();
        }
    }

    let u = u2.mul(&block);
    debug_assert!(u.det().abs().is_one(), "glued U must be unimodular");

    // U A V' must be the diagonal (d'_j, M) then M's, padded by zero rows.
    let d = u.mul(&sys.a_full).mul(&snf.v);
    for i in 0..total {
        for j in 0..nn {
            let expect = if i == j {
                if i < rp {
                    gcds[i].clone()
                } else {
                    big_m.clone()
                }
            } else {
                BigInt::zero()
            };
            if d[(i, j)] != expect {
                return Err(Error::Singular(format!(
                    "SNF gluing failed at ({i}, {j}): got {}, expected {expect}",
                    d[(i, j)]
                )));
            }
        }
    }

    // Solution lattice: last n rows of U, first n coordinates.
    let moduli = group.moduli();
    let mut gens: Vec<Vec<u64>> = Vec::new();
    for i in nn..total {
        let row: Vec<i64> = (0..n)
            .map(|j| {
                let v = &u[(i, j)];
                // Reduce mod m_j; entries fit i64 after reduction.
                let m = BigInt::from(moduli[j]);
                let r = v.mod_floor(&m);
                i64::try_from(&r).expect("reduced entry fits i64")
            })
            .collect();
        gens.push(group.canonicalize(&row));
    }

    // Close the generated subgroup of prod Z_{m_j}.
    let mut seen = vec![false; group.order()];
    let zero = group.identity();
    seen[group.index_of(&zero)] = true;
    let mut frontier = vec![zero];
    while let Some(cur) = frontier.pop() {
        for g in &gens {
            let nxt = group.mul(&cur, g);
            let idx = group.index_of(&nxt);
            if !seen[idx] {
                seen[idx] = true;
                frontier.push(nxt);
            }
        }
    }
    let mut out: Vec<Vec<u64>> =
        group.elements().into_iter().filter(|e| seen[group.index_of(e)]).collect();
    out.sort();
    Ok(out)
}

/// One admissible `(f, lambda)` pair together with the exact integer `N*E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSolution {
    pub f: Vec<u64>,
    pub lambda: Vec<u64>,
    pub e_times_n: BigInt,
}

/// `N * E` with
/// `E = sum_j lambda_j f_j / m_j + sum_j c_j f_j^2 / m_j^2
///    + sum_{s<t} c_st f_s f_t / (m_s m_t)`,
/// and the pass verdict `N even and N*E = N/2 (mod N)`.
///
/// The test is evaluated on canonical representatives only: the quadratic
/// term is not invariant under `f_j -> f_j + m_j`.
pub fn integrality_e(
    group: &AbelianGroupSpec,
    datum: &CocycleDatum,
    f: &[u64],
    lambda: &[u64],
) -> (bool, BigInt) {
    let m = group.moduli();
    let n = m.len();
    let big_n = BigInt::from(group.big_n());
    let mut acc = BigInt::zero();
    for j in 0..n {
        acc += BigInt::from(lambda[j]) * BigInt::from(f[j]) * (&big_n / BigInt::from(m[j]));
        acc += BigInt::from(datum.c[j])
            * BigInt::from(f[j])
            * BigInt::from(f[j])
            * (&big_n / BigInt::from(m[j] * m[j]));
    }
    for s in 0..n {
        for t in s + 1..n {
            acc += BigInt::from(datum.pair(s, t))
                * BigInt::from(f[s])
                * BigInt::from(f[t])
                * (&big_n / BigInt::from(m[s] * m[t]));
        }
    }
    let pass = group.big_n() % 2 == 0 && {
        let half = &big_n / BigInt::from(2);
        acc.mod_floor(&big_n) == half
    };
    (pass, acc)
}

/// Every admissible pair: `f` over `f_solutions`, `lambda` over all
/// characters, kept when the integrality test passes. Lexicographic in
/// `(f, lambda)`.
pub fn enumerate_pairs(
    group: &AbelianGroupSpec,
    datum: &CocycleDatum,
    cap: u64,
) -> Result<Vec<PairSolution>> {
    let fs = f_solutions(group, datum, FSolveMethod::Brute, cap)?;
    let lambdas = group.characters();
    let m = group.moduli();
    let n = m.len();
    let big_n = group.big_n();
    let mut out = Vec::new();
    // Fast path: everything fits in u128 once N fits in u64 (it does for any
    // group the cap admits), scanning lambda with the quadratic part hoisted.
    let half = big_n / 2;
    for f in &fs {
        let mut quad: u128 = 0;
        for j in 0..n {
            quad += datum.c[j] as u128 * f[j] as u128 * f[j] as u128
                * (big_n / (m[j] * m[j])) as u128;
        }
        for s in 0..n {
            for t in s + 1..n {
                quad += datum.pair(s, t) as u128 * f[s] as u128 * f[t] as u128
                    * (big_n / (m[s] * m[t])) as u128;
            }
        }
        let weights: Vec<u128> = (0..n).map(|j| f[j] as u128 * (big_n / m[j]) as u128).collect();
        if big_n % 2 != 0 {
            continue;
        }
        for lambda in &lambdas {
            let mut acc = quad;
            for j in 0..n {
                acc += lambda[j] as u128 * weights[j];
            }
            if acc % big_n as u128 == half as u128 {
                let (pass, e_times_n) = integrality_e(group, datum, f, lambda);
                debug_assert!(pass);
                out.push(PairSolution { f: f.clone(), lambda: lambda.clone(), e_times_n });
            }
        }
    }
    out.sort_by(|a, b| (&a.f, &a.lambda).cmp(&(&b.f, &b.lambda)));
    Ok(out)
}

/// The induced braided Hopf data: `sigma` as exponents of `xi_{m_j}` and the
/// exponent table of `v` over `N`, indexed by element rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedHopfDescriptor {
    pub sigma_exps: Vec<u64>,
    pub n_modulus: u64,
    pub v_exps: Vec<u64>,
}

/// `v = sum_l zeta_N^{e(l)} 1_l` with
/// `e(l) = N (sum_j lambda_j l_j / m_j + sum_j c_j f_j l_j / m_j^2
///        + sum_{s<t} c_st l_s f_t / (m_s m_t))`.
pub fn descriptor(
    group: &AbelianGroupSpec,
    datum: &CocycleDatum,
    pair: &PairSolution,
) -> BraidedHopfDescriptor {
    let m = group.moduli();
    let n = m.len();
    let big_n = group.big_n();
    let elems = group.elements();
    let mut v_exps = Vec::with_capacity(elems.len());
    for l in &elems {
        let mut acc: i128 = 0;
        for j in 0..n {
            acc += pair.lambda[j] as i128 * l[j] as i128 * (big_n / m[j]) as i128;
            acc += datum.c[j] as i128
                * pair.f[j] as i128
                * l[j] as i128
                * (big_n / (m[j] * m[j])) as i128;
        }
        for s in 0..n {
            for t in s + 1..n {
                acc += datum.pair(s, t) as i128
                    * l[s] as i128
                    * pair.f[t] as i128
                    * (big_n / (m[s] * m[t])) as i128;
            }
        }
        v_exps.push(acc.rem_euclid(big_n as i128) as u64);
    }
    BraidedHopfDescriptor { sigma_exps: pair.f.clone(), n_modulus: big_n, v_exps }
}

/// Cyclic-case classification for `C_m` with datum `c`.
#[derive(Clone, Debug)]
pub struct CyclicClassification {
    /// All `(f, lambda)` passing `lambda f / m + c f^2 / m^2 - 1/2 in Z`.
    pub pairs: Vec<(u64, u64)>,
    /// The constructed existence witness when `gcd(c, m)` is even.
    pub witness: Option<(u64, u64)>,
}

pub fn cyclic_pairs(m: u64, c: u64) -> Result<CyclicClassification> {
    if m < 2 {
        return Err(Error::InvalidParam(format!("cyclic order {m} < 2")));
    }
    if c >= m {
        return Err(Error::InvalidDatum(format!("c = {c} out of range [0, {m})")));
    }
    let n = m * m;
    let mut pairs = Vec::new();
    if n % 2 == 0 {
        for f in 0..m {
            for lambda in 0..m {
                let acc = (m as u128 * lambda as u128 * f as u128
                    + c as u128 * f as u128 * f as u128)
                    % n as u128;
                if acc == (n / 2) as u128 {
                    pairs.push((f, lambda));
                }
            }
        }
    }
    let d = c.gcd(&m);
    let witness = if d % 2 == 0 {
        // f = (m/d) * d/2; lambda = 2k + 1 - c/2 for the least odd 2k+1 >= c/2.
        let f = (m / d) * (d / 2);
        let half_c = c / 2;
        let odd = if half_c % 2 == 1 { half_c } else { half_c + 1 };
        let lambda = odd - half_c;
        assert!(pairs.contains(&(f % m, lambda)), "corollary witness must be admissible");
        Some((f % m, lambda))
    } else {
        assert!(pairs.is_empty(), "pairs must be empty when gcd(c, m) is odd");
        None
    };
    Ok(CyclicClassification { pairs, witness })
}

/// The conic `C_{lambda,k}(x, y) = 2 c1 x^2 + 2 c2 y^2 + 2 c12 x y
/// + 2 lambda1 L x + 2 lambda2 L y - (2k + 1) L^2`.
#[derive(Clone, Debug)]
pub struct ConicSpec {
    pub c1: i64,
    pub c2: i64,
    pub c12: i64,
    pub lambda1: i64,
    pub lambda2: i64,
    pub k: i64,
    pub big_l: i64,
}

impl ConicSpec {
    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let (x, y, l) = (x as i128, y as i128, self.big_l as i128);
        2 * self.c1 as i128 * x * x
            + 2 * self.c2 as i128 * y * y
            + 2 * self.c12 as i128 * x * y
            + 2 * self.lambda1 as i128 * l * x
            + 2 * self.lambda2 as i128 * l * y
            - (2 * self.k as i128 + 1) * l * l
    }
}

/// All integer points of the conic in the given box.
pub fn conic_points(
    spec: &ConicSpec,
    x_range: std::ops::RangeInclusive<i64>,
    y_range: std::ops::RangeInclusive<i64>,
) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for x in x_range {
        for y in y_range.clone() {
            if spec.eval(x, y) == 0 {
                out.push((x, y));
            }
        }
    }
    out
}

/// A rational point of some member of the conic family, recorded as
/// `(x, y; lambda1, lambda2, k)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConicSolution {
    pub x: i64,
    pub y: i64,
    pub lambda1: u64,
    pub lambda2: u64,
    pub k: i64,
}

/// Bounded scan over `x = f1 L / m1`, `y = f2 L / m2` and all `lambda` in the
/// canonical boxes; `k` is eliminated exactly: the point lies on some
/// `C_{lambda,k}` iff the remaining terms sum to an odd multiple of `L^2`.
pub fn conic_scan(m1: u64, m2: u64, datum: &CocycleDatum) -> Result<Vec<ConicSolution>> {
    let group = AbelianGroupSpec::new(vec![m1, m2])?;
    datum.validate(&group)?;
    let l = group.l_pair().expect("two factors") as i128;
    let (c1, c2, c12) = (datum.c[0] as i128, datum.c[1] as i128, datum.pair(0, 1) as i128);
    let mut out = Vec::new();
    for f1 in 0..m1 {
        let x = f1 as i128 * l / m1 as i128;
        for f2 in 0..m2 {
            let y = f2 as i128 * l / m2 as i128;
            for l1 in 0..m1 {
                for l2 in 0..m2 {
                    let val = 2 * c1 * x * x
                        + 2 * c2 * y * y
                        + 2 * c12 * x * y
                        + 2 * l1 as i128 * l * x
                        + 2 * l2 as i128 * l * y;
                    if val % (l * l) == 0 {
                        let q = val / (l * l);
                        if q % 2 == 1 {
                            out.push(ConicSolution {
                                x: x as i64,
                                y: y as i64,
                                lambda1: l1,
                                lambda2: l2,
                                k: ((q - 1) / 2) as i64,
                            });
                        }
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The maps `rho` classifying nontrivial 2-dimensional braided Hopf algebras
/// over `(k^{Dbar_n}, Phi_{omega_p})`: candidates are the witness times the
/// four characters; kept are those with `rho(R^n) = -1` and
/// `d rho = flat_{R^n} omega_p` (checked exhaustively).
pub fn ddn_pairs(n: u64, p: u64) -> Result<Vec<Cochain>> {
    let group = DdnSpec::new(n)?;
    if p >= 2 * n {
        return Err(Error::InvalidParam(format!("p = {p} out of range [0, {})", 2 * n)));
    }
    let w = ddn_witness(&group, p);
    let flat = ddn_flat_closed_form(&group, p);
    let rn_idx = group.index_of(&group.r_n());
    let mut out = Vec::new();
    for theta in ddn_characters(&group) {
        let rho = w.pointwise_mul(&theta);
        let val = rho.table[rn_idx];
        let minus_one = rho.modulus / 2;
        if val != minus_one {
            continue;
        }
        if coboundary(&group, &rho).equivalent(&flat) {
            out.push(rho);
        }
    }
    Ok(out)
}

/// Number of orbits of `a -> s^2 a` (`s` a unit) acting on `Z_n`.
pub fn orbit_count_cyclic(n: u64) -> usize {
    assert!(n >= 1);
    let squares: Vec<u64> =
        (1..=n).filter(|s| s.gcd(&n) == 1).map(|s| (s * s) % n).collect();
    let mut seen = vec![false; n as usize];
    let mut orbits = 0;
    for a in 0..n {
        if seen[a as usize] {
            continue;
        }
        orbits += 1;
        for s2 in &squares {
            seen[((s2 * a) % n) as usize] = true;
        }
    }
    orbits
}

/// The twelve semisimple quasi-Hopf algebras in dimension 4: four cyclic
/// classes plus eight Klein classes (the outer action is trivial there).
pub fn dim4_semisimple_count() -> usize {
    orbit_count_cyclic(4) + 8
}
