//! Acceptance suite: one test per criterion, each printing a single
//! `[acceptance] criterion N: PASS/FAIL` line (visible under
//! `cargo test --test acceptance -- --nocapture`). All comparisons are exact.

use num_bigint::BigInt;
use num_rational::BigRational;

use biprod2_core::classify::{
    conic_scan, cyclic_pairs, ddn_pairs, descriptor, dim4_semisimple_count, enumerate_pairs,
    f_solutions, orbit_count_cyclic, FSolveMethod, PairSolution,
};
use biprod2_core::cocycles::{
    check_cocycle, coboundary, ddn_flat_closed_form, ddn_witness, fg_witness, flat,
    omega_abelian_cochain, omega_ddn_cochain, CocycleDatum, CocycleKind,
};
use biprod2_core::cyclo::CycloNum;
use biprod2_core::groups::{AbelianGroupSpec, DdnSpec, FiniteGroup};
use biprod2_core::qha::{
    biproduct_g, biproduct_theta, check_axioms, check_pair, from_classification, h2, h4, h4_twist,
    h4_twist_equiv, hq8, kc2, kgw, nichols, pairs::group_basis_of_vect, pq_elements,
    tensor_product_qha, twist, H4TwistScalars, QSign, Scalar, SigmaV, Tensor, TwistData, Vect,
};

const CAP: u64 = 64;

fn verdict(criterion: &str, pass: bool, detail: &str) {
    println!(
        "[acceptance] criterion {criterion}: {}{}",
        if pass { "PASS" } else { "FAIL" },
        if detail.is_empty() { String::new() } else { format!(" ({detail})") }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn datum2(c1: u64, c2: u64, c12: u64) -> CocycleDatum {
    CocycleDatum::parse(&format!("c={c1},{c2};c12={c12}"), 2).unwrap()
}

fn half_rat() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

/// Expected group-basis coefficient vectors for the named Klein elements, on
/// the element order (0,0), (0,1), (1,0), (1,1) = e, g2, g1, g1g2.
fn klein_v(name: &str) -> Vec<Scalar> {
    let zero = CycloNum::zero(4);
    let one = CycloNum::one(4);
    let i = CycloNum::root(4, 1);
    let h = CycloNum::from_rational(4, half_rat());
    let ih = i.mul(&h);
    let gp = one.add(&i).mul(&h); // (1 + i)/2
    let gm = one.sub(&i).mul(&h); // (1 - i)/2
    match name {
        "g1" => vec![zero.clone(), zero.clone(), one.clone(), zero],
        "g2" => vec![zero.clone(), one.clone(), zero.clone(), zero],
        "g1g2" => vec![zero.clone(), zero.clone(), zero, one],
        "g+" => vec![zero.clone(), gp.clone(), zero, gm],
        "g-" => vec![zero.clone(), gm, zero, gp],
        "h+" => vec![ih.clone(), h.clone(), h.clone(), ih.neg()],
        "h-" => vec![ih.neg(), h.clone(), h, ih],
        _ => unreachable!(),
    }
}

/// The Klein-four classification table: datum -> (f, lambda, v) entries in
/// lexicographic (f, lambda) order.
#[allow(clippy::type_complexity)]
fn klein_table() -> Vec<((u64, u64, u64), Vec<((u64, u64), (u64, u64), &'static str)>)> {
    vec![
        (
            (0, 0, 0),
            vec![
                ((0, 1), (0, 1), "g2"),
                ((0, 1), (1, 1), "g1g2"),
                ((1, 0), (1, 0), "g1"),
                ((1, 0), (1, 1), "g1g2"),
                ((1, 1), (0, 1), "g2"),
                ((1, 1), (1, 0), "g1"),
            ],
        ),
        (
            (0, 0, 1),
            vec![
                ((0, 1), (0, 1), "g+"),
                ((0, 1), (1, 1), "g-"),
                ((1, 0), (1, 0), "g1"),
                ((1, 0), (1, 1), "g1g2"),
            ],
        ),
        ((0, 1, 0), vec![((1, 0), (1, 0), "g1"), ((1, 0), (1, 1), "g1g2")]),
        (
            (0, 1, 1),
            vec![
                ((1, 0), (1, 0), "g1"),
                ((1, 0), (1, 1), "g1g2"),
                ((1, 1), (0, 0), "h+"),
                ((1, 1), (1, 1), "h-"),
            ],
        ),
        ((1, 0, 0), vec![((0, 1), (0, 1), "g2"), ((0, 1), (1, 1), "g1g2")]),
        (
            (1, 0, 1),
            vec![
                ((0, 1), (0, 1), "g+"),
                ((0, 1), (1, 1), "g-"),
                ((1, 1), (0, 0), "g1"),
                ((1, 1), (1, 1), "g2"),
            ],
        ),
        ((1, 1, 0), vec![((1, 1), (0, 0), "h+"), ((1, 1), (1, 1), "h-")]),
        ((1, 1, 1), vec![]),
    ]
}

#[test]
fn criterion_01_klein_golden_table() {
    let klein = AbelianGroupSpec::new(vec![2, 2]).unwrap();
    let mut problems = Vec::new();
    let mut total = 0usize;
    for ((c1, c2, c12), expected) in klein_table() {
        let d = datum2(c1, c2, c12);
        let pairs = enumerate_pairs(&klein, &d, CAP).unwrap();
        let got: Vec<((u64, u64), (u64, u64))> = pairs
            .iter()
            .map(|p| ((p.f[0], p.f[1]), (p.lambda[0], p.lambda[1])))
            .collect();
        let want: Vec<((u64, u64), (u64, u64))> =
            expected.iter().map(|&(f, l, _)| (f, l)).collect();
        if got != want {
            problems.push(format!("datum ({c1},{c2},{c12}): pairs {got:?} != {want:?}"));
            continue;
        }
        total += expected.len();
        // v as an exponent table, expanded into the group basis and compared
        // against the printed closed forms.
        for (p, &(_, _, vname)) in pairs.iter().zip(expected.iter()) {
            let desc = descriptor(&klein, &d, p);
            let q = kgw(&klein, &d).unwrap();
            let sv = from_classification(&klein, &q, &desc);
            let coeffs = group_basis_of_vect(&klein, &sv.v);
            let want_v = klein_v(vname);
            if coeffs != want_v {
                problems.push(format!(
                    "datum ({c1},{c2},{c12}) pair (f={:?}, lambda={:?}): v != {vname}",
                    p.f, p.lambda
                ));
            }
        }
    }
    let pass = problems.is_empty() && total == 24;
    verdict(
        "1 (Klein golden table)",
        pass,
        &if problems.is_empty() {
            format!("{total} entries")
        } else {
            problems.join("; ")
        },
    );
}

/// The printed C2 x C6 table rows: datum -> (f, lambda list) as printed.
#[allow(clippy::type_complexity)]
fn c2c6_reference_table() -> Vec<((u64, u64, u64), Vec<((u64, u64), Vec<(u64, u64)>)>)> {
    let rows: Vec<((u64, u64, u64), Vec<((u64, u64), Vec<(u64, u64)>)>)> = vec![
        (
            (0, 0, 0),
            vec![
                ((0, 1), vec![(0, 3), (1, 3)]),
                ((0, 3), vec![(0, 1), (1, 1), (0, 3), (1, 3), (0, 5), (1, 5)]),
                ((0, 5), vec![(0, 3), (1, 3)]),
                ((1, 0), vec![(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]),
                ((1, 1), vec![(0, 3), (1, 0)]),
                ((1, 2), vec![(1, 0), (1, 3)]),
                ((1, 3), vec![(0, 1), (0, 3), (0, 5), (1, 0), (1, 2), (1, 4)]),
                ((1, 4), vec![(1, 0), (1, 3)]),
                ((1, 5), vec![(0, 3), (1, 0)]),
            ],
        ),
        (
            (1, 0, 0),
            vec![
                ((0, 1), vec![(0, 3), (1, 3)]),
                ((0, 3), vec![(0, 1), (0, 3), (0, 5), (1, 1), (1, 3)]),
                ((0, 5), vec![(0, 3), (1, 3)]),
            ],
        ),
        (
            (0, 1, 1),
            vec![
                ((1, 0), vec![(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]),
                ((1, 3), vec![(0, 0), (0, 2), (0, 4), (1, 1), (1, 3), (1, 5)]),
            ],
        ),
        (
            (1, 0, 1),
            vec![
                ((0, 1), vec![(0, 3), (1, 3)]),
                ((0, 3), vec![(0, 1), (1, 1)]),
                ((1, 1), vec![(0, 1), (0, 2), (1, 4)]),
                ((1, 3), vec![(0, 0), (0, 2), (1, 1), (1, 3), (1, 5)]),
                ((1, 5), vec![(0, 1)]),
            ],
        ),
        (
            (1, 1, 0),
            vec![((1, 3), vec![(0, 0), (0, 2), (0, 4), (1, 1), (1, 3), (1, 5)])],
        ),
        (
            (1, 2, 0),
            vec![((0, 3), vec![(0, 0), (0, 2), (0, 4), (1, 0), (1, 2), (1, 4)])],
        ),
        (
            (1, 3, 0),
            vec![
                ((1, 1), vec![(0, 1), (1, 4)]),
                ((1, 3), vec![(0, 1), (0, 3), (0, 5), (1, 0), (1, 2), (1, 4)]),
                ((1, 5), vec![(0, 5), (1, 2)]),
            ],
        ),
        (
            (1, 4, 0),
            vec![((0, 3), vec![(0, 1), (0, 3), (0, 5), (1, 1), (1, 3), (1, 5)])],
        ),
        (
            (1, 5, 0),
            vec![((1, 3), vec![(0, 0), (0, 2), (0, 4), (1, 1), (1, 3), (1, 5)])],
        ),
        (
            (1, 2, 1),
            vec![
                ((0, 3), vec![(0, 0), (0, 2), (0, 4), (1, 0), (1, 2), (1, 4)]),
                ((1, 3), vec![(0, 1), (0, 3), (0, 5), (1, 0), (1, 2), (1, 4)]),
            ],
        ),
        (
            (1, 4, 1),
            vec![
                ((0, 3), vec![(0, 1), (0, 3), (0, 5), (1, 1), (1, 3), (1, 5)]),
                ((1, 3), vec![(0, 0), (0, 2), (0, 4), (1, 1), (1, 3), (1, 5)]),
            ],
        ),
        (
            (0, 2, 0),
            vec![
                ((0, 3), vec![(0, 0), (0, 2), (0, 4), (1, 0), (1, 2), (1, 4)]),
                ((1, 3), vec![(0, 0), (0, 2), (0, 4), (1, 1), (1, 3), (1, 5)]),
            ],
        ),
        (
            (0, 3, 0),
            vec![
                ((1, 0), vec![(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]),
                ((1, 2), vec![(1, 2), (1, 5)]),
                ((1, 4), vec![(1, 1), (1, 4)]),
            ],
        ),
        (
            (0, 4, 0),
            vec![
                ((0, 3), vec![(0, 1), (0, 3), (0, 5), (1, 1), (1, 3), (1, 5)]),
                ((1, 3), vec![(0, 1), (0, 3), (0, 5), (1, 0), (1, 2), (1, 4)]),
            ],
        ),
        (
            (0, 2, 1),
            vec![
                ((0, 3), vec![(0, 0), (0, 2), (0, 4), (1, 0), (1, 2), (1, 4)]),
                ((1, 0), vec![(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]),
            ],
        ),
        (
            (0, 3, 1),
            vec![
                ((1, 0), vec![(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]),
                ((1, 1), vec![(0, 2), (1, 5)]),
                ((1, 2), vec![(0, 0), (0, 3)]),
                ((1, 3), vec![(0, 1), (0, 3), (0, 5), (1, 0), (1, 2), (1, 4)]),
                ((1, 4), vec![(1, 2), (1, 5)]),
                ((1, 5), vec![(1, 3)]),
            ],
        ),
        (
            (0, 4, 1),
            vec![
                ((0, 3), vec![(0, 1), (0, 3), (0, 5), (1, 1), (1, 3), (1, 5)]),
                ((1, 0), vec![(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]),
            ],
        ),
        (
            (0, 5, 1),
            vec![
                ((1, 0), vec![(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5)]),
                ((1, 3), vec![(0, 0), (0, 2), (0, 4), (1, 1), (1, 3), (1, 5)]),
            ],
        ),
    ];
    rows
}

#[test]
fn criterion_02_c2c6_golden_table() {
    let g = AbelianGroupSpec::new(vec![2, 6]).unwrap();
    let mut problems = Vec::new();
    for ((c1, c2, c12), printed_rows) in c2c6_reference_table() {
        let d = datum2(c1, c2, c12);
        let pairs = enumerate_pairs(&g, &d, CAP).unwrap();
        // Group computed pairs by f.
        let mut computed: Vec<((u64, u64), Vec<(u64, u64)>)> = Vec::new();
        for p in &pairs {
            let f = (p.f[0], p.f[1]);
            let l = (p.lambda[0], p.lambda[1]);
            match computed.last_mut() {
                Some((lf, ls)) if *lf == f => ls.push(l),
                _ => computed.push((f, vec![l])),
            }
        }
        let mut printed = printed_rows;
        for (_, ls) in printed.iter_mut() {
            ls.sort();
        }
        printed.sort();
        if computed != printed {
            let mut diff = Vec::new();
            for (f, ls) in &computed {
                match printed.iter().find(|(pf, _)| pf == f) {
                    None => diff.push(format!("sigma_{}{} computed {ls:?}, not printed", f.0, f.1)),
                    Some((_, pls)) if pls != ls => diff.push(format!(
                        "sigma_{}{} computed {ls:?} vs printed {pls:?}",
                        f.0, f.1
                    )),
                    _ => {}
                }
            }
            for (f, ls) in &printed {
                if !computed.iter().any(|(cf, _)| cf == f) {
                    diff.push(format!("sigma_{}{} printed {ls:?}, not computed", f.0, f.1));
                }
            }
            problems.push(format!("datum ({c1},{c2},{c12}): {}", diff.join("; ")));
        }
    }
    verdict("2 (C2xC6 golden table)", problems.is_empty(), &problems.join(" | "));
}

#[test]
fn criterion_03_double_dihedral() {
    let mut problems = Vec::new();
    // Quaternion case: nonempty exactly for p in {1, 3} with 4 maps each.
    let mut total = 0;
    for p in 0..4u64 {
        let maps = ddn_pairs(2, p).unwrap();
        let expect = if p % 2 == 1 { 4 } else { 0 };
        if maps.len() != expect {
            problems.push(format!("n=2 p={p}: {} maps, expected {expect}", maps.len()));
        }
        total += maps.len();
    }
    if total != 8 {
        problems.push(format!("n=2 total {total} != 8"));
    }
    // Parity law for n in 2..=5.
    for n in 2..=5u64 {
        for p in 0..2 * n {
            let maps = ddn_pairs(n, p).unwrap();
            let expect_nonempty = p % 2 == 1 || (p % 2) != (n % 2);
            if maps.is_empty() == expect_nonempty {
                problems.push(format!("n={n} p={p}: nonempty = {}", !maps.is_empty()));
            }
        }
    }
    verdict("3 (double dihedral)", problems.is_empty(), &problems.join("; "));
}

#[test]
fn criterion_04_semisimple_dim4() {
    let pass = dim4_semisimple_count() == 12 && orbit_count_cyclic(4) == 4;
    verdict("4 (semisimple dimension 4)", pass, "");
}

#[test]
fn criterion_05_n3_lattice() {
    let mut problems = Vec::new();
    // m = (4,4,4).
    let g444 = AbelianGroupSpec::new(vec![4, 4, 4]).unwrap();
    for c in [1u64, 3] {
        let d = CocycleDatum::parse(&format!("c=0,0,0;c123={c}"), 3).unwrap();
        let fs = f_solutions(&g444, &d, FSolveMethod::Brute, CAP).unwrap();
        if fs != vec![vec![0, 0, 0]] {
            problems.push(format!("m=(4,4,4) c123={c}: {fs:?}"));
        }
    }
    let d2 = CocycleDatum::parse("c=0,0,0;c123=2", 3).unwrap();
    let fs = f_solutions(&g444, &d2, FSolveMethod::Brute, CAP).unwrap();
    let expect: Vec<Vec<u64>> = {
        let mut v = Vec::new();
        for a in [0u64, 2] {
            for b in [0u64, 2] {
                for c in [0u64, 2] {
                    v.push(vec![a, b, c]);
                }
            }
        }
        v.sort();
        v
    };
    if fs != expect {
        problems.push(format!("m=(4,4,4) c123=2: {fs:?}"));
    }
    // m = (12,18,30), c123 = 4: the multiples-of-3 box.
    let g = AbelianGroupSpec::new(vec![12, 18, 30]).unwrap();
    let d = CocycleDatum::parse("c=0,0,0;c123=4", 3).unwrap();
    let fs = f_solutions(&g, &d, FSolveMethod::Brute, 7000).unwrap();
    if fs.len() != 240 || !fs.iter().all(|f| f.iter().all(|&x| x % 3 == 0)) {
        problems.push(format!("m=(12,18,30): {} solutions", fs.len()));
    }
    // Full datum: the two lambda-families of the worked example must appear
    // in the enumerated pairs.
    let full = CocycleDatum::parse("c=3,7,14;c12=1;c13=3;c23=5;c123=4", 3).unwrap();
    let pairs = enumerate_pairs(&g, &full, 7000).unwrap();
    let has = |f: &[u64], l: &[u64]| {
        pairs.binary_search_by(|p| (&p.f[..], &p.lambda[..]).cmp(&(f, l))).is_ok()
    };
    let mut missing_family_1 = Vec::new();
    for l1 in 0..12u64 {
        for l2 in 0..18u64 {
            for l3 in (1..30u64).step_by(2) {
                if !has(&[0, 6, 15], &[l1, l2, l3]) {
                    missing_family_1.push((l1, l2, l3));
                }
            }
        }
    }
    let mut missing_family_2 = Vec::new();
    for l1 in 0..12u64 {
        for l2 in 0..18u64 {
            for l3 in 0..30u64 {
                if (l1 + l3) % 2 == 1 && !has(&[6, 6, 15], &[l1, l2, l3]) {
                    missing_family_2.push((l1, l2, l3));
                }
            }
        }
    }
    if !missing_family_1.is_empty() {
        problems.push(format!(
            "family mu1=0 (f=(0,6,15), lambda3 odd): {} of 3240 members absent \
             (the quadratic part of N*E is 46/9 mod 1 = 2/18 there, so no lambda \
             can reach N/2; first absent: {:?})",
            missing_family_1.len(),
            missing_family_1.first()
        ));
    }
    if !missing_family_2.is_empty() {
        problems.push(format!(
            "family mu1=2 (f=(6,6,15), lambda1+lambda3 odd): {} of 3240 members absent \
             (quadratic part 61/9; same mod-3 obstruction; first absent: {:?})",
            missing_family_2.len(),
            missing_family_2.first()
        ));
    }
    verdict("5 (n=3 lattice)", problems.is_empty(), &problems.join("; "));
}

#[test]
fn criterion_06_cross_oracles() {
    let mut problems = Vec::new();
    // f_solutions brute vs SNF on >= 50 randomized instances, product <= 4000.
    let mut s: u64 = 0x2718281828459045;
    let mut next = move || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        s
    };
    let mut done = 0;
    while done < 50 {
        let n = 3 + (next() % 2) as usize;
        let moduli: Vec<u64> = (0..n).map(|_| 2 + next() % 9).collect();
        if moduli.iter().product::<u64>() > 4000 {
            continue;
        }
        let g = AbelianGroupSpec::new(moduli.clone()).unwrap();
        let mut d = CocycleDatum::zero(n);
        for r in 0..n {
            for s2 in r + 1..n {
                for t in s2 + 1..n {
                    use num_integer::Integer;
                    let bound = moduli[r].gcd(&moduli[s2]).gcd(&moduli[t]);
                    d.c_triple.insert((r, s2, t), next() % bound.max(1));
                }
            }
        }
        let brute = f_solutions(&g, &d, FSolveMethod::Brute, 4000).unwrap();
        let snf = f_solutions(&g, &d, FSolveMethod::Snf, 4000).unwrap();
        if brute != snf {
            problems.push(format!("brute != snf for {moduli:?}, {d:?}"));
        }
        done += 1;
    }
    // conic_scan vs enumerate_pairs for all two-factor groups, m <= 8, all data.
    for m1 in 2..=8u64 {
        for m2 in 2..=8u64 {
            use num_integer::Integer;
            let g = AbelianGroupSpec::new(vec![m1, m2]).unwrap();
            let l = g.l_pair().unwrap();
            for c1 in 0..m1 {
                for c2 in 0..m2 {
                    for c12 in 0..m1.gcd(&m2) {
                        let d = datum2(c1, c2, c12);
                        let scan = conic_scan(m1, m2, &d).unwrap();
                        let pairs = enumerate_pairs(&g, &d, 4000).unwrap();
                        let mut expect: Vec<(i64, i64, u64, u64)> = pairs
                            .iter()
                            .map(|p| {
                                (
                                    (p.f[0] * l / m1) as i64,
                                    (p.f[1] * l / m2) as i64,
                                    p.lambda[0],
                                    p.lambda[1],
                                )
                            })
                            .collect();
                        expect.sort();
                        let mut got: Vec<(i64, i64, u64, u64)> =
                            scan.iter().map(|sx| (sx.x, sx.y, sx.lambda1, sx.lambda2)).collect();
                        got.sort();
                        if got != expect {
                            problems
                                .push(format!("conic mismatch m=({m1},{m2}) ({c1},{c2},{c12})"));
                        }
                    }
                }
            }
        }
    }
    verdict("6 (cross-oracle equivalence)", problems.is_empty(), &problems.join("; "));
}

fn all_data_of(group: &AbelianGroupSpec) -> Vec<CocycleDatum> {
    use num_integer::Integer;
    let m = group.moduli();
    let n = m.len();
    let mut out = vec![CocycleDatum::zero(n)];
    let push_axis = |out: &mut Vec<CocycleDatum>, f: &dyn Fn(&mut CocycleDatum, u64), bound: u64| {
        let mut next = Vec::new();
        for d in out.iter() {
            for v in 0..bound {
                let mut d2 = d.clone();
                f(&mut d2, v);
                next.push(d2);
            }
        }
        *out = next;
    };
    for l in 0..n {
        push_axis(&mut out, &|d, v| d.c[l] = v, m[l]);
    }
    for s in 0..n {
        for t in s + 1..n {
            let b = m[s].gcd(&m[t]);
            push_axis(
                &mut out,
                &|d, v| {
                    d.c_pair.insert((s, t), v);
                },
                b,
            );
        }
    }
    for r in 0..n {
        for s in r + 1..n {
            for t in s + 1..n {
                let b = m[r].gcd(&m[s]).gcd(&m[t]);
                push_axis(
                    &mut out,
                    &|d, v| {
                        d.c_triple.insert((r, s, t), v);
                    },
                    b,
                );
            }
        }
    }
    out
}

#[test]
fn criterion_07_cocycle_identity_suite() {
    let mut problems = Vec::new();
    for moduli in [vec![2, 2], vec![2, 6], vec![4, 4], vec![2, 2, 2]] {
        let g = AbelianGroupSpec::new(moduli.clone()).unwrap();
        for d in all_data_of(&g) {
            let table = omega_abelian_cochain(&g, &d);
            if check_cocycle(&g, &table, CocycleKind::ThreeCocycle, CAP).unwrap().is_err() {
                problems.push(format!("3-cocycle fails: {moduli:?}, {d:?}"));
                continue;
            }
            // flat_g is a 2-cocycle for every (central) g; abelian groups are
            // all-central.
            for el in g.elements() {
                let fl = flat(&g, &table, &el);
                if check_cocycle(&g, &fl, CocycleKind::TwoCocycle, CAP).unwrap().is_err() {
                    problems.push(format!("flat not 2-cocycle: {moduli:?}, {d:?}, g={el:?}"));
                }
                // Where the divisibility holds, flat(omega) = flat(omega_bar)
                // = d(f_g) -- the witness coboundary statement.
                if biprod2_core::classify::divisibility_holds(&g, &d, &el) {
                    let w = fg_witness(&g, &d, &el);
                    let db = coboundary(&g, &w);
                    if !db.equivalent(&fl) {
                        problems.push(format!(
                            "d(witness) != flat: {moduli:?}, {d:?}, g={el:?}"
                        ));
                    }
                }
            }
        }
    }
    for n in [2u64, 3] {
        let g = DdnSpec::new(n).unwrap();
        for p in 0..2 * n {
            let table = omega_ddn_cochain(&g, p);
            if check_cocycle(&g, &table, CocycleKind::ThreeCocycle, CAP).unwrap().is_err() {
                problems.push(format!("omega_p not 3-cocycle: n={n} p={p}"));
            }
            let fl = flat(&g, &table, &g.r_n());
            if check_cocycle(&g, &fl, CocycleKind::TwoCocycle, CAP).unwrap().is_err() {
                problems.push(format!("flat_Rn omega_p not 2-cocycle: n={n} p={p}"));
            }
            let closed = ddn_flat_closed_form(&g, p);
            if !fl.equivalent(&closed) {
                problems.push(format!("flat_Rn closed form mismatch: n={n} p={p}"));
            }
            let db = coboundary(&g, &ddn_witness(&g, p));
            if !db.equivalent(&fl) {
                problems.push(format!("d(ddn witness) != flat: n={n} p={p}"));
            }
        }
    }
    verdict("7 (cocycle identity suite)", problems.is_empty(), &problems.join("; "));
}

#[test]
fn criterion_08_quasi_hopf_axiom_suite() {
    let mut problems = Vec::new();
    let mut run = |name: String, q: &biprod2_core::qha::QuasiHopfData| {
        let report = check_axioms(q, CAP).unwrap();
        if !report.all_pass() {
            problems.push(format!("{name}: axioms {:?}", report.failed()));
        }
        match pq_elements(q) {
            Ok(pq) => {
                if !pq.all_pass() {
                    let failed: Vec<&str> = pq
                        .identities
                        .iter()
                        .filter(|(_, r)| r.is_err())
                        .map(|(n, _)| *n)
                        .collect();
                    problems.push(format!("{name}: pq identities {failed:?}"));
                }
            }
            Err(e) => problems.push(format!("{name}: pq error {e}")),
        }
    };
    run("h2".into(), &h2());
    run("h4".into(), &h4());
    run("hq8+".into(), &hq8(QSign::Plus));
    run("hq8-".into(), &hq8(QSign::Minus));
    for n in 1..=3 {
        run(format!("nichols({n})"), &nichols(n).unwrap());
    }
    for moduli in [vec![2], vec![4], vec![2, 2]] {
        let g = AbelianGroupSpec::new(moduli.clone()).unwrap();
        for d in all_data_of(&g) {
            run(format!("kgw({moduli:?}, {})", d.render()), &kgw(&g, &d).unwrap());
        }
    }
    verdict("8 (quasi-Hopf axiom suite)", problems.is_empty(), &problems.join("; "));
}

#[test]
fn criterion_09_twist_suite() {
    let mut problems = Vec::new();
    let q = h4();
    // Delta_F = Delta for F = 1 - tau gx (x) x.
    for tau in [-1i64, 0, 1, 2] {
        let s = H4TwistScalars::from_i64([1, 0, 0, 0, tau, tau, 0, -tau, -tau]);
        let f = h4_twist(&q, &s).unwrap();
        let t = twist(&q, &f).unwrap();
        if (0..q.dim).any(|i| t.comult(i) != q.comult(i)) {
            problems.push(format!("Delta_F != Delta at tau={tau}"));
        }
    }
    // Phi_F = 1 on k[C2] for F = 1 - kappa p_- (x) p_-.
    let kc = kc2();
    let mut pm = Vect::zero();
    pm.add_term(0, CycloNum::from_rational(4, half_rat()));
    pm.add_term(1, CycloNum::from_rational(4, half_rat()).neg());
    for kappa in [-1i64, 2, 3] {
        let kap = CycloNum::from_integer(4, kappa);
        let pmpm = Tensor::from_vect(&pm).tensor_product(&Tensor::from_vect(&pm));
        let f = kc.unit_tensor(2).sub(&pmpm.scale(&kap));
        let kk = kap.mul(&kap.sub(&CycloNum::one(4)).inv().unwrap());
        let f_inv = kc.unit_tensor(2).sub(&pmpm.scale(&kk));
        let t = twist(&kc, &TwistData { f, f_inv }).unwrap();
        if t.phi != kc.unit_tensor(3) {
            problems.push(format!("Phi_F != 1 at kappa={kappa}"));
        }
    }
    // Bar formulas for 20 random scalar sets (h4_twist validates F FInv = 1).
    let mut s: u64 = 0x6a09e667f3bcc908;
    let mut next = move || {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        s
    };
    for _ in 0..20 {
        let mut vals = [0i64; 9];
        for v in vals.iter_mut() {
            *v = (next() % 11) as i64 - 5;
        }
        if vals[0] == 0 {
            vals[0] = 2;
        }
        if h4_twist(&q, &H4TwistScalars::from_i64(vals)).is_err() {
            problems.push(format!("bar inverse failed for {vals:?}"));
        }
    }
    // Equivalence: NONE whenever a != a'; planted witnesses recovered.
    for _ in 0..10 {
        let mut vals = [0i64; 9];
        for v in vals.iter_mut() {
            *v = (next() % 7) as i64 - 3;
        }
        if vals[0] == 0 {
            vals[0] = 1;
        }
        let base = H4TwistScalars::from_i64(vals);
        let mut other_vals = vals;
        other_vals[0] += 1;
        if other_vals[0] == 0 {
            other_vals[0] = 3;
        }
        if h4_twist_equiv(&base, &H4TwistScalars::from_i64(other_vals)).is_some() {
            problems.push(format!("a != a' but equivalent: {vals:?}"));
        }
        let om = CycloNum::from_integer(4, ((next() % 3) + 2) as i64);
        let kap = CycloNum::from_integer(4, (next() % 5) as i64 - 2);
        let om2 = om.mul(&om);
        let planted = H4TwistScalars {
            a: base.a.clone(),
            b: om.mul(&base.b),
            c: om.mul(&base.c),
            mu: om.mul(&base.mu),
            u: om.mul(&base.u),
            nu: om2.mul(&base.nu).add(&kap.mul(&base.a)),
            tau: om2.mul(&base.tau).add(&kap),
            v: om2.mul(&base.v).sub(&kap),
            w: om2.mul(&base.w).sub(&kap),
        };
        match h4_twist_equiv(&base, &planted) {
            None => problems.push(format!("planted witness not found for {vals:?}")),
            Some((omega, kappa)) => {
                // Any witness must satisfy the relations; check it.
                let o2 = omega.mul(&omega);
                let ok = planted.tau == o2.mul(&base.tau).add(&kappa)
                    && planted.nu == o2.mul(&base.nu).add(&kappa.mul(&base.a))
                    && planted.v == o2.mul(&base.v).sub(&kappa)
                    && planted.w == o2.mul(&base.w).sub(&kappa)
                    && planted.b == omega.mul(&base.b);
                if !ok {
                    problems.push(format!("witness relations violated for {vals:?}"));
                }
            }
        }
    }
    verdict("9 (twist suite)", problems.is_empty(), &problems.join("; "));
}

#[test]
fn criterion_10_biproduct_suite() {
    let mut problems = Vec::new();
    // k[C2] biproduct reproduces h4 exactly.
    let sigma = vec![CycloNum::one(4), CycloNum::from_integer(4, -1)];
    let sv = SigmaV { sigma, v: Vect::basis(1) };
    let bp = biproduct_theta(&kc2(), &sv).unwrap();
    if !bp.constants_equal(&h4()) {
        problems.push("biproduct over k[C2] differs from h4".into());
    }
    // Every Klein pair from criterion 1 lifts to a dim-8 biproduct passing
    // the full axiom suite.
    let klein = AbelianGroupSpec::new(vec![2, 2]).unwrap();
    for ((c1, c2, c12), _) in klein_table() {
        let d = datum2(c1, c2, c12);
        let q = kgw(&klein, &d).unwrap();
        for p in enumerate_pairs(&klein, &d, CAP).unwrap() {
            let desc = descriptor(&klein, &d, &p);
            let sv = from_classification(&klein, &q, &desc);
            match biproduct_theta(&q, &sv) {
                Ok(bp) => {
                    if bp.dim != 8 {
                        problems.push(format!("({c1},{c2},{c12}) {:?}: dim {}", p.f, bp.dim));
                    }
                    let report = check_axioms(&bp, CAP).unwrap();
                    if !report.all_pass() {
                        problems.push(format!(
                            "({c1},{c2},{c12}) f={:?} lambda={:?}: axioms {:?}",
                            p.f,
                            p.lambda,
                            report.failed()
                        ));
                    }
                }
                Err(e) => problems.push(format!("({c1},{c2},{c12}) {:?}: {e}", p.f)),
            }
        }
    }
    // Nichols tower: the (sigma, g) pair is valid and the biproduct matches
    // the next Nichols algebra exactly.
    for n in 1..=2usize {
        let q = nichols(n).unwrap();
        let sigma: Vec<Scalar> = (0..q.dim)
            .map(|i| match i {
                0 => CycloNum::one(4),
                1 => CycloNum::from_integer(4, -1),
                _ => CycloNum::zero(4),
            })
            .collect();
        let sv = SigmaV { sigma, v: Vect::basis(1) };
        if !check_pair(&q, &sv).unwrap().all_pass() {
            problems.push(format!("nichols({n}) pair invalid"));
            continue;
        }
        let bp = biproduct_theta(&q, &sv).unwrap();
        if !bp.constants_equal(&nichols(n + 1).unwrap()) {
            problems.push(format!("nichols({n}) biproduct != nichols({})", n + 1));
        }
    }
    // H_q(16) = k[C2] (x) H_q(8): the (sigma, v = g2) pair validates and the
    // 32-dimensional biproduct passes the axioms.
    let hq = hq8(QSign::Plus);
    let h16 = tensor_product_qha(&kc2(), &hq);
    let d2 = hq.dim;
    let sigma: Vec<Scalar> = (0..h16.dim)
        .map(|k| {
            let (i, j) = (k / d2, k % d2);
            let base = if i == 0 { CycloNum::one(4) } else { CycloNum::from_integer(4, -1) };
            base.mul(&hq.counit[j])
        })
        .collect();
    let sv = SigmaV { sigma, v: Vect::basis(d2) };
    match check_pair(&h16, &sv) {
        Ok(r) if r.all_pass() => {
            let bp = biproduct_theta(&h16, &sv).unwrap();
            if bp.dim != 32 {
                problems.push(format!("hq16 biproduct dim {}", bp.dim));
            }
            let report = check_axioms(&bp, CAP).unwrap();
            if !report.all_pass() {
                problems.push(format!("hq16 biproduct axioms {:?}", report.failed()));
            }
        }
        Ok(r) => problems.push(format!("hq16 pair: {:?}", r.conditions)),
        Err(e) => problems.push(format!("hq16 pair: {e}")),
    }
    // biproduct_g examples: h2 -> dim 4 commutative; hq8 -> H_q(16).
    let bg = biproduct_g(&h2());
    if bg.dim != 4 {
        problems.push("biproduct_g(h2) dim != 4".into());
    }
    for i in 0..bg.dim {
        for j in 0..bg.dim {
            if bg.mult(i, j) != bg.mult(j, i) {
                problems.push("biproduct_g(h2) not commutative".into());
            }
        }
    }
    let b16 = biproduct_g(&hq8(QSign::Plus));
    if b16.dim != 16 || !check_axioms(&b16, CAP).unwrap().all_pass() {
        problems.push("biproduct_g(hq8) fails axioms".into());
    }
    verdict("10 (biproduct suite)", problems.is_empty(), &problems.join("; "));
}

/// Supporting check used by criterion 1's emptiness clause and the cyclic
/// existence corollary; not itself a numbered criterion but pins the examples
/// the operations advertise.
#[test]
fn supporting_examples() {
    // classify abelian on C2 x C3 with trivial datum: five pairs, matching
    // the cyclic count for C6 with c = 0 (lambda * f = 3 mod 6 has five
    // solutions). Emptiness with an even N cannot happen for a trivial
    // datum: f = (m1/2) e_1 with odd lambda_1 always passes.
    let g23 = AbelianGroupSpec::new(vec![2, 3]).unwrap();
    let pairs23 = enumerate_pairs(&g23, &CocycleDatum::zero(2), CAP).unwrap();
    assert_eq!(pairs23.len(), 5);
    assert_eq!(cyclic_pairs(6, 0).unwrap().pairs.len(), 5);
    // A genuinely empty case: odd N (C3 x C3, trivial datum).
    let g33 = AbelianGroupSpec::new(vec![3, 3]).unwrap();
    assert!(enumerate_pairs(&g33, &CocycleDatum::zero(2), CAP).unwrap().is_empty());
    // Cyclic witness sweep.
    for m in 2..=10u64 {
        for c in 0..m {
            let out = cyclic_pairs(m, c).unwrap();
            use num_integer::Integer;
            assert_eq!(out.pairs.is_empty(), c.gcd(&m) % 2 == 1);
            if let Some(w) = out.witness {
                assert!(out.pairs.contains(&w));
            }
        }
    }
    // PairSolution exposes the exact integer N*E = N/2 mod N.
    let klein = AbelianGroupSpec::new(vec![2, 2]).unwrap();
    for p in enumerate_pairs(&klein, &CocycleDatum::zero(2), CAP).unwrap() {
        let PairSolution { e_times_n, .. } = &p;
        let n = BigInt::from(klein.big_n());
        use num_integer::Integer;
        assert_eq!(e_times_n.mod_floor(&n), &n / BigInt::from(2));
    }
}
