//! Randomized property suites shared by the integration tests and the
//! acceptance run. Each suite takes a case count and returns the first
//! failure, shrunk, as a string.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::fmt::Debug;

use abelian_lcd::algebra::GroupAlgebra;
use abelian_lcd::linalg::{null_space, rank, rref};
use abelian_lcd::{
    abelian_groups_of_order, build_field, classify, AbelianGroup, Capacity, DualityContext,
    FieldDescriptor, FieldElement, GfMatrix, Variant,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestError, TestRunner};

/// Every `GF(p^n)` with at most 64 elements.
pub const FIELDS: &[(u64, u32)] = &[
    (2, 1),
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 1),
    (3, 2),
    (3, 3),
    (5, 1),
    (5, 2),
    (7, 1),
    (7, 2),
    (11, 1),
    (13, 1),
    (17, 1),
    (19, 1),
    (23, 1),
    (29, 1),
    (31, 1),
    (37, 1),
    (41, 1),
    (43, 1),
    (47, 1),
    (53, 1),
    (59, 1),
    (61, 1),
];

pub const PRIMES: &[u64] = &[2, 3, 5, 7];

pub fn contexts(primes: &[u64], nus: &[u32]) -> Vec<DualityContext> {
    let mut out = Vec::new();
    for &p in primes {
        for &nu in nus {
            out.push(DualityContext::euclidean(p, nu).unwrap());
            out.push(DualityContext::hermitian(p, nu).unwrap());
        }
    }
    out
}

/// All abelian groups with `lo <= |G| <= hi`.
pub fn groups_up_to(lo: u64, hi: u64) -> Vec<AbelianGroup> {
    (lo..=hi)
        .flat_map(|n| abelian_groups_of_order(n).unwrap())
        .collect()
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn finish<T: Debug>(r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

fn el(f: &FieldDescriptor, raw: u8) -> FieldElement {
    f.element(raw as usize % f.size()).unwrap()
}

pub fn field_axioms(cases: u32) -> Result<(), String> {
    let strategy = (0..FIELDS.len(), any::<u8>(), any::<u8>(), any::<u8>());
    finish(runner(cases).run(&strategy, |(fi, a, b, c)| {
        let (p, n) = FIELDS[fi];
        let f = build_field(p, n).unwrap();
        let (a, b, c) = (el(&f, a), el(&f, b), el(&f, c));
        let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(a, zero), a);
        prop_assert_eq!(f.mul(a, one), a);
        prop_assert_eq!(f.add(a, f.neg(a)), zero);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        match f.inv(a) {
            Some(i) => prop_assert_eq!(f.mul(a, i), one),
            None => prop_assert!(a.is_zero()),
        }
        prop_assert_eq!(f.pow(a, f.size() as u64), a);
        if n % 2 == 0 {
            let nu = n / 2;
            let conj = |x| f.frobenius_conjugate(x, nu).unwrap();
            prop_assert_eq!(conj(f.add(a, b)), f.add(conj(a), conj(b)));
            prop_assert_eq!(conj(f.mul(a, b)), f.mul(conj(a), conj(b)));
            prop_assert_eq!(conj(conj(a)), a);
            let fixed = f.elements().filter(|&x| conj(x) == x).count() as u64;
            prop_assert_eq!(fixed, p.pow(nu));
        }
        Ok(())
    }))
}

const MATRIX_FIELDS: &[(u64, u32)] = &[(2, 1), (3, 1), (2, 2), (3, 2)];

fn matrix_strategy() -> impl Strategy<Value = (usize, usize, usize, Vec<u8>)> {
    (
        0..MATRIX_FIELDS.len(),
        1usize..=12,
        1usize..=12,
        prop::collection::vec(any::<u8>(), 144),
    )
}

fn build_matrix(fi: usize, rows: usize, cols: usize, raw: &[u8]) -> (FieldDescriptor, GfMatrix) {
    let (p, n) = MATRIX_FIELDS[fi];
    let f = build_field(p, n).unwrap();
    // Bias towards rank deficiency: entries are zero about half the time.
    let data = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let r = raw[i * 12 + j];
                    if r & 1 == 0 {
                        FieldElement::ZERO
                    } else {
                        el(&f, r >> 1)
                    }
                })
                .collect()
        })
        .collect();
    let m = GfMatrix::from_rows(cols, data).unwrap();
    (f, m)
}

pub fn rref_idempotence(cases: u32) -> Result<(), String> {
    finish(
        runner(cases).run(&matrix_strategy(), |(fi, rows, cols, raw)| {
            let (f, m) = build_matrix(fi, rows, cols, &raw);
            let r = rref(&f, &m);
            let again = rref(&f, &r.matrix);
            prop_assert_eq!(&again, &r);
            for (i, &piv) in r.pivots.iter().enumerate() {
                for k in 0..rows {
                    let expect = if k == i {
                        FieldElement::ONE
                    } else {
                        FieldElement::ZERO
                    };
                    prop_assert_eq!(r.matrix.get(k, piv), expect);
                }
            }
            let stacked = r.matrix.stack(&m).unwrap();
            prop_assert_eq!(rank(&f, &stacked), r.rank);
            Ok(())
        }),
    )
}

pub fn rank_nullity(cases: u32) -> Result<(), String> {
    finish(
        runner(cases).run(&matrix_strategy(), |(fi, rows, cols, raw)| {
            let (f, m) = build_matrix(fi, rows, cols, &raw);
            let ns = null_space(&f, &m);
            prop_assert_eq!(rank(&f, &m) + ns.rows(), cols);
            prop_assert_eq!(rank(&f, &ns), ns.rows());
            for v in ns.row_iter() {
                prop_assert!(m.mul_vec(&f, v).iter().all(|x| x.is_zero()));
            }
            Ok(())
        }),
    )
}

/// `(group, context)` pairs whose oracle algebra has at most `2^bits`
/// vectors, semisimple or not.
pub fn small_algebra_configs(bits: u32) -> Vec<(AbelianGroup, DualityContext)> {
    let cap = Capacity::from_log2(bits);
    let mut out = Vec::new();
    for ctx in contexts(&[2, 3, 5], &[1, 2]) {
        let q = ctx.field_size().unwrap() as usize;
        if q > 64 {
            continue;
        }
        for n in 1..=16u64 {
            if !cap.admits(q, n as usize) {
                break;
            }
            for g in abelian_groups_of_order(n).unwrap() {
                out.push((g, ctx));
            }
        }
    }
    out
}

pub fn duality_involution(cases: u32) -> Result<(), String> {
    let configs = small_algebra_configs(12);
    let strategy = (
        0..configs.len(),
        prop::collection::vec(any::<u8>(), 16),
        prop::collection::vec(any::<u8>(), 16),
    );
    finish(runner(cases).run(&strategy, |(ci, u, v)| {
        let (g, ctx) = &configs[ci];
        let f = build_field(ctx.p(), ctx.field_degree()).unwrap();
        let alg = GroupAlgebra::new(g.clone(), f.clone(), Capacity::default()).unwrap();
        let n = alg.dimension();
        let vec_of = |raw: &[u8]| raw[..n].iter().map(|&r| el(&f, r)).collect::<Vec<_>>();
        let c = alg.ideal_sum(
            &alg.ideal_generated_by(&vec_of(&u)),
            &alg.ideal_generated_by(&vec_of(&v)),
        );
        let dual = alg
            .dual_code(&c, ctx.variant(), ctx.nu())
            .map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(alg.is_ideal(dual.echelon()));
        prop_assert_eq!(dual.dimension() + c.dimension(), n);
        let back = alg.dual_code(&dual, ctx.variant(), ctx.nu()).unwrap();
        prop_assert_eq!(back, c);
        Ok(())
    }))
}

/// A random `p'`-group of order at most `max_order` with a random context.
fn class_strategy(max_order: u64) -> impl Strategy<Value = (AbelianGroup, DualityContext)> {
    (
        0..PRIMES.len(),
        1u32..=2,
        any::<bool>(),
        1..=max_order,
        any::<usize>(),
    )
        .prop_map(|(pi, nu, herm, n, gi)| {
            let p = PRIMES[pi];
            let variant = if herm {
                Variant::Hermitian
            } else {
                Variant::Euclidean
            };
            let ctx = DualityContext::new(p, nu, variant).unwrap();
            let groups = abelian_groups_of_order(n).unwrap();
            let (a, _) = groups[gi % groups.len()].sylow_split(p).unwrap();
            (a, ctx)
        })
}

pub fn pairing_involution(cases: u32) -> Result<(), String> {
    finish(runner(cases).run(&class_strategy(200), |(a, ctx)| {
        let part = classify(&a, ctx).unwrap();
        for (i, c) in part.classes.iter().enumerate() {
            match part.pairing.get(&i) {
                Some(&j) => {
                    prop_assert!(!c.type_tag.is_self_paired());
                    prop_assert_ne!(i, j);
                    prop_assert_eq!(part.pairing.get(&j), Some(&i));
                    prop_assert_eq!(part.classes[j].size(), c.size());
                }
                None => prop_assert!(c.type_tag.is_self_paired()),
            }
            let twist = ctx.twist_mod(a.exponent().max(1));
            let image = a.scalar_mul(twist, &c.representative).unwrap();
            let partner = part.pairing.get(&i).map_or(c, |&j| &part.classes[j]);
            prop_assert!(partner.members.contains(&image));
        }
        prop_assert_eq!(part.pairing.len() as u64, 2 * part.r_two());
        Ok(())
    }))
}

pub fn partition_completeness(cases: u32) -> Result<(), String> {
    finish(runner(cases).run(&class_strategy(200), |(a, ctx)| {
        let part = classify(&a, ctx).unwrap();
        let q = ctx.field_size().unwrap();
        let mut seen = BTreeSet::new();
        for c in &part.classes {
            for m in &c.members {
                prop_assert!(seen.insert(m.clone()), "{} lies in two classes", m);
                let image = a.scalar_mul(q % a.exponent().max(1), m).unwrap();
                prop_assert!(c.members.contains(&image));
            }
        }
        prop_assert_eq!(seen.len() as u64, a.order());
        prop_assert_eq!(part.class_sizes().iter().sum::<usize>() as u64, a.order());
        prop_assert!(part.r_one() >= 1);
        Ok(())
    }))
}

pub type Suite = (&'static str, fn(u32) -> Result<(), String>);

pub const SUITES: &[Suite] = &[
    ("field axioms", field_axioms),
    ("rref idempotence", rref_idempotence),
    ("rank-nullity", rank_nullity),
    ("duality involution", duality_involution),
    ("pairing involution", pairing_involution),
    ("partition completeness", partition_completeness),
];

/// `(r_one, r_two)` by walking orbits of `x -> q x` directly; a class is
/// self-paired when `twist * rep` lands back in it.
pub fn brute_r_counts(g: &AbelianGroup, q: u64, twist: u64) -> (u64, u64) {
    let n = g.order() as usize;
    let e = g.exponent();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for idx in 0..n {
        if class_of[idx] != usize::MAX {
            continue;
        }
        let id = reps.len();
        let start = g.element_at(idx as u64);
        reps.push(start.clone());
        let mut x = start;
        loop {
            let i = g.index_of(&x) as usize;
            if class_of[i] == id {
                break;
            }
            class_of[i] = id;
            x = g.scalar_mul(q % e, &x).unwrap();
        }
    }
    let self_paired = reps
        .iter()
        .enumerate()
        .filter(|(id, r)| {
            class_of[g.index_of(&g.scalar_mul(twist % e, r).unwrap()) as usize] == *id
        })
        .count() as u64;
    let paired = reps.len() as u64 - self_paired;
    assert_eq!(paired % 2, 0);
    (self_paired, paired / 2)
}

/// [`brute_r_counts`] for a duality context, with the multiplier and twist
/// computed from scratch.
pub fn brute_counts_for(g: &AbelianGroup, ctx: DualityContext) -> (u64, u64) {
    let e = g.exponent();
    let p_nu = (0..ctx.nu()).fold(1 % e, |acc, _| acc * ctx.p() % e);
    let (q, twist) = match ctx.variant() {
        Variant::Euclidean => (p_nu, e - 1 % e),
        Variant::Hermitian => (p_nu * p_nu % e, (e - p_nu) % e),
    };
    brute_r_counts(g, q, twist)
}
