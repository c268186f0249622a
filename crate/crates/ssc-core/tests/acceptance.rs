//! The acceptance gate: one test per headline claim, each printing a single
//! pass/fail line.  Everything is exact arithmetic, so a pass is a proof for
//! the instances covered.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::One;
use ssc_core::chevalley::ChevalleyTable;
use ssc_core::gf::{Embedding, Field, FieldElem};
use ssc_core::inventory::{
    base_change, class_representatives, enumerate_representations, equivalent,
    formal_degree_ep, InputPair,
};
use ssc_core::lparam::{
    adjoint_l_ratio, derive_from_fdc, gamma_principal, kostant_ratio, mu_jx,
    principal_parameter, ssc_parameter_invariants, FdcCandidate,
};
use ssc_core::orbits::{hx_orbits, StableSet};
use ssc_core::poly::{IntPoly, RatFunc};
use ssc_core::root_data::{Family, RootDatum};

const BUDGET: u64 = 1 << 24;

fn criterion(n: usize, name: &str, f: impl FnOnce()) {
    let result = catch_unwind(AssertUnwindSafe(f));
    let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {n} ({name}): {verdict}");
    if let Err(e) = result {
        resume_unwind(e);
    }
}

fn datum(f: Family, rank: usize) -> RootDatum {
    RootDatum::new(f, rank).unwrap()
}

/// The (p, n) pairs giving every prime power up to the bound.
fn prime_powers_up_to(bound: u128) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    for p in 2u64..=bound as u64 {
        if !(2..p).any(|d| p % d == 0) {
            let mut n = 1;
            while (p as u128).pow(n as u32) <= bound {
                out.push((p, n));
                n += 1;
            }
        }
    }
    out.sort_by_key(|&(p, n)| ((p as u128).pow(n as u32), p));
    out
}

/// Digit-wise index of a + b, avoiding element allocation in hot sweeps.
fn sum_index(f: &Field, a: &FieldElem, b: &FieldElem) -> u128 {
    let p = f.characteristic();
    let mut idx = 0u128;
    for i in (0..f.degree()).rev() {
        idx = idx * p as u128 + ((a.coeffs()[i] + b.coeffs()[i]) % p) as u128;
    }
    idx
}

/// Every type the symbolic identities are checked on.
fn symbolic_types() -> Vec<RootDatum> {
    let mut out = Vec::new();
    for r in 1..=8 {
        out.push(datum(Family::A, r));
    }
    for r in 2..=8 {
        out.push(datum(Family::B, r));
        out.push(datum(Family::C, r));
    }
    for r in 4..=8 {
        out.push(datum(Family::D, r));
    }
    for r in 6..=8 {
        out.push(datum(Family::E, r));
    }
    out.push(datum(Family::F, 4));
    out.push(datum(Family::G, 2));
    out
}

/// The (type, field) sweep for brute-force orbit work, capped so the
/// largest stable set stays at a million points.
fn orbit_matrix() -> Vec<(RootDatum, Field)> {
    let mut cases: Vec<(Family, usize)> = vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
        (Family::F, 4),
    ];
    let fields: Vec<(u64, usize)> = vec![(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];
    let mut out = Vec::new();
    for &(fam, rank) in &cases {
        for &(p, n) in &fields {
            let rd = datum(fam, rank);
            let f = Field::new(p, n).unwrap();
            if (f.order() - 1).pow(rank as u32 + 1) <= 1_000_000 {
                out.push((rd, f));
            }
        }
    }
    cases.clear();
    for q in [2u64, 3] {
        out.push((datum(Family::E, 6), Field::new(q, 1).unwrap()));
    }
    out
}

#[test]
fn c1_sign_identity() {
    criterion(1, "sign identity over the affine diagram", || {
        let cases = [
            (Family::A, 1),
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::B, 2),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::D, 5),
            (Family::E, 6),
            (Family::G, 2),
            (Family::F, 4),
        ];
        for (fam, rank) in cases {
            let rd = datum(fam, rank);
            let table = ChevalleyTable::new(&rd);
            let omega = rd.omega();
            let products = table.sign_products(&omega);
            assert_eq!(products.len(), omega.order());
            assert!(
                products.iter().all(|&p| p == 1),
                "{rd}: mark-weighted sign product deviates from 1"
            );
        }
    });
}

#[test]
fn c2_orbit_classification() {
    criterion(2, "orbits of stable covectors are the Delta-fibers", || {
        for (rd, f) in orbit_matrix() {
            let table = ChevalleyTable::new(&rd);
            let part = hx_orbits(&rd, &f, &table, BUDGET).unwrap();
            let set = StableSet::new(&rd, &f);
            // Same Delta-value forces the same orbit...
            let mut rep_of_fiber: BTreeMap<u64, u64> = BTreeMap::new();
            for idx in 0..set.size() {
                let d = set.delta_exponent(&rd, idx);
                let rep = *rep_of_fiber.entry(d).or_insert(idx);
                assert!(
                    part.same_class(rep, idx),
                    "{rd} over GF({}): Delta-fiber split across orbits",
                    f.order()
                );
            }
            // ...and the counts agree, so the partitions are equal, with
            // exactly q - 1 parts.
            assert_eq!(rep_of_fiber.len(), part.num_classes());
            assert_eq!(part.num_classes() as u128, f.order() - 1, "{rd}");
        }
    });
}

#[test]
fn c3_equivalence_criterion() {
    criterion(3, "scalar equivalence test matches the orbit test", || {
        for (fam, rank) in [(Family::A, 1), (Family::A, 2)] {
            for (p, n) in [(3u64, 1usize), (2, 2), (5, 1)] {
                let rd = datum(fam, rank);
                let f = Field::new(p, n).unwrap();
                let table = ChevalleyTable::new(&rd);
                let part = hx_orbits(&rd, &f, &table, BUDGET).unwrap();
                let set = StableSet::new(&rd, &f);
                let mut pairs = Vec::new();
                for idx in 0..set.size() {
                    let lam = set.covector(&rd, idx);
                    for c in f.units() {
                        pairs.push((idx, InputPair::new(lam.clone(), c).unwrap()));
                    }
                }
                for (ia, a) in &pairs {
                    for (_, b) in &pairs {
                        let c = f.div(b.char_scalar(), a.char_scalar());
                        let ib = set.index_of_covector(&b.lam().scale(&c)).unwrap();
                        assert_eq!(
                            equivalent(&rd, a, b).unwrap(),
                            part.same_class(*ia, ib),
                            "{rd} over GF({})",
                            f.order()
                        );
                    }
                }
            }
        }
    });
}

#[test]
fn c4_inventory_count() {
    criterion(4, "(q - 1) * det(Cartan) labeled representations", || {
        for (rd, f) in orbit_matrix() {
            let labels = enumerate_representations(&rd, &f);
            assert_eq!(
                labels.len() as u128,
                (f.order() - 1) * rd.cartan_det() as u128,
                "{rd} over GF({})",
                f.order()
            );
            let distinct: BTreeSet<_> = labels
                .iter()
                .map(|l| (f.index_of(&l.delta_class), l.psi))
                .collect();
            assert_eq!(distinct.len(), labels.len());
        }
        let rd = datum(Family::A, 1);
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(enumerate_representations(&rd, &f3).len(), 4);
    });
}

#[test]
fn c5_kostant_and_serre_identities() {
    criterion(5, "Kostant ratio and volume elimination, symbolically", || {
        for rd in symbolic_types() {
            let principal = adjoint_l_ratio(&principal_parameter(&rd)).unwrap();
            assert_eq!(principal, kostant_ratio(&rd), "{rd}: Kostant ratio");

            let fd = formal_degree_ep(&rd).value;
            let omega = RatFunc::from_ratio(
                BigInt::from(rd.omega_order()),
                BigInt::one(),
                "q",
            )
            .unwrap();
            let square = fd.mul(&omega).mul(&mu_jx(&rd).value);
            assert!(square.is_one(), "{rd}: deg * |Omega| * mu != 1");

            // The volume times |Omega| * q^l recovers the principal ratio.
            let factor = RatFunc::from_poly(
                &IntPoly::monomial(rd.rank(), "q")
                    * &IntPoly::constant(BigInt::from(rd.omega_order()), "q"),
            );
            assert_eq!(factor.mul(&mu_jx(&rd).value), principal, "{rd}: volume");
            assert!(gamma_principal(&rd).magnitude().is_some(), "{rd}");
        }
    });
}

#[test]
fn c6_formal_degree_forcing() {
    criterion(6, "formal-degree identity forces the parameter", || {
        for rd in symbolic_types() {
            let v = derive_from_fdc(&rd, &FdcCandidate::unknowns()).unwrap();
            assert!(v.consistent, "{rd}");
            assert_eq!(v.alpha_forced, (rd.dim_g() + rd.rank()) as u64, "{rd}");
            assert!(v.pn_all_constant);
            assert_eq!(v.c_forced, Ratio::one());
            assert_eq!(ssc_parameter_invariants(&rd).swan, rd.rank() as u64);
        }
        let a1 = derive_from_fdc(&datum(Family::A, 1), &FdcCandidate::unknowns()).unwrap();
        assert_eq!(a1.alpha_forced, 4);
        let e8 = derive_from_fdc(&datum(Family::E, 8), &FdcCandidate::unknowns()).unwrap();
        assert_eq!(e8.alpha_forced, 256);

        // Twenty mutated candidates, every one rejected.
        let mutations: [&dyn Fn(&RootDatum) -> FdcCandidate; 4] = [
            &|_| FdcCandidate {
                pn: Some(BTreeMap::from([(2, IntPoly::from_i64s(&[1, -1], "t"))])),
                ..FdcCandidate::unknowns()
            },
            &|_| FdcCandidate {
                pn: Some(BTreeMap::from([(4, IntPoly::from_i64s(&[1, 1], "t"))])),
                ..FdcCandidate::unknowns()
            },
            &|rd| FdcCandidate {
                alpha: Some((rd.dim_g() + rd.rank()) as i64 + 1),
                ..FdcCandidate::unknowns()
            },
            &|rd| FdcCandidate {
                alpha: Some((rd.dim_g() + rd.rank()) as i64 - 1),
                ..FdcCandidate::unknowns()
            },
        ];
        let types = [
            datum(Family::A, 1),
            datum(Family::A, 2),
            datum(Family::B, 2),
            datum(Family::G, 2),
            datum(Family::D, 4),
        ];
        let mut rejected = 0;
        for rd in &types {
            for m in &mutations {
                let v = derive_from_fdc(rd, &m(rd)).unwrap();
                assert!(!v.consistent, "{rd}: mutated candidate accepted");
                rejected += 1;
            }
        }
        assert_eq!(rejected, 20);
    });
}

#[test]
fn c7_base_change() {
    criterion(7, "unramified base change", || {
        for (fam, rank) in [(Family::A, 1), (Family::A, 2)] {
            let rd = datum(fam, rank);
            let f3 = Field::new(3, 1).unwrap();
            let labels = enumerate_representations(&rd, &f3);
            let set = StableSet::new(&rd, &f3);

            for m in [2u32, 3] {
                let target = Field::new(3, m as usize).unwrap();
                // Stability survives for every stable pair.
                for idx in 0..set.size() {
                    let p =
                        InputPair::new(set.covector(&rd, idx), f3.one()).unwrap();
                    let moved = base_change(&rd, &p, m).unwrap().pair;
                    assert!(moved.lam().is_stable());
                    assert_eq!(moved.field(), &target);
                }
                // Class count over the extension.
                let reps = class_representatives(&rd, &target);
                assert_eq!(reps.len() as u128, target.order() - 1);
                for (i, a) in reps.iter().enumerate() {
                    for (j, b) in reps.iter().enumerate() {
                        assert_eq!(equivalent(&rd, a, b).unwrap(), i == j);
                    }
                }
                // Labels transport injectively with psi untouched.
                let sample =
                    InputPair::new(set.covector(&rd, 0), f3.one()).unwrap();
                let bc = base_change(&rd, &sample, m).unwrap();
                let moved: Vec<_> =
                    labels.iter().map(|l| bc.transport_label(l)).collect();
                let distinct: BTreeSet<_> = moved
                    .iter()
                    .map(|l| (target.index_of(&l.delta_class), l.psi))
                    .collect();
                assert_eq!(distinct.len(), labels.len());
                for (old, new) in labels.iter().zip(&moved) {
                    assert_eq!(old.psi, new.psi);
                }
            }

            // Tower coherence on pairs and labels: two quadratic steps
            // equal one quartic step.
            let p = InputPair::new(set.covector(&rd, set.size() - 1), f3.elem(2)).unwrap();
            let step1 = base_change(&rd, &p, 2).unwrap();
            let step2 = base_change(&rd, &step1.pair, 2).unwrap();
            let direct = base_change(&rd, &p, 4).unwrap();
            assert_eq!(step2.pair, direct.pair);
            for l in &labels {
                assert_eq!(
                    step2.transport_label(&step1.transport_label(l)),
                    direct.transport_label(l)
                );
            }
        }
    });
}

#[test]
fn c8_property_suites() {
    criterion(8, "field axioms, traces, rational-function round-trips", || {
        // Field axioms, exhaustively, for every prime power up to 64.
        for (p, n) in prime_powers_up_to(64) {
            let f = Field::new(p, n).unwrap();
            let els: Vec<FieldElem> = f.elements().collect();
            for a in &els {
                assert_eq!(f.add(a, &f.zero()), *a);
                assert_eq!(f.mul(a, &f.one()), *a);
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                if !f.is_zero(a) {
                    assert_eq!(f.mul(a, &f.inv(a)), f.one());
                }
                assert_eq!(f.pow(a, f.order()), *a);
            }
            for a in &els {
                for b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    // Frobenius is additive.
                    assert_eq!(
                        f.frobenius(&f.add(a, b)),
                        f.add(&f.frobenius(a), &f.frobenius(b))
                    );
                }
            }
            for a in &els {
                for b in &els {
                    for c in &els {
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, &f.add(b, c)),
                            f.add(&f.mul(a, b), &f.mul(a, c))
                        );
                    }
                }
            }
        }

        // Trace to every proper subfield: additive, base-linear, onto.
        for (p, n) in prime_powers_up_to(4096) {
            if n == 1 {
                continue;
            }
            let top = Field::new(p, n).unwrap();
            let q = top.order() as usize;
            let els: Vec<FieldElem> = top.elements().collect();
            let mut add_tab = vec![0u16; q * q];
            for i in 0..q {
                for j in i..q {
                    let k = sum_index(&top, &els[i], &els[j]) as u16;
                    add_tab[i * q + j] = k;
                    add_tab[j * q + i] = k;
                }
            }
            for a in (1..n).filter(|a| n % a == 0) {
                let base = Field::new(p, a).unwrap();
                let emb = Embedding::new(&base, &top).unwrap();
                let m = n / a;
                // Trace of each element, kept inside the top field.
                let tr: Vec<u16> = els
                    .iter()
                    .map(|x| {
                        let mut acc = top.zero();
                        let mut term = x.clone();
                        for _ in 0..m {
                            acc = top.add(&acc, &term);
                            term = top.pow(&term, base.order());
                        }
                        top.index_of(&acc) as u16
                    })
                    .collect();
                // Surjectivity onto the embedded base field.
                let image: BTreeSet<u16> = tr.iter().copied().collect();
                let embedded: BTreeSet<u16> = base
                    .elements()
                    .map(|c| top.index_of(&emb.apply(&c)) as u16)
                    .collect();
                assert_eq!(image, embedded, "GF({}) -> GF({})", q, base.order());
                // Additivity, over all pairs.
                for i in 0..q {
                    for j in 0..q {
                        let sum = add_tab[i * q + j] as usize;
                        assert_eq!(
                            tr[sum],
                            add_tab[tr[i] as usize * q + tr[j] as usize]
                        );
                    }
                }
                // Base-scalar homogeneity.
                for c in base.units() {
                    let ec = emb.apply(&c);
                    for i in 0..q {
                        let scaled = top.index_of(&top.mul(&ec, &els[i])) as usize;
                        assert_eq!(
                            tr[scaled],
                            top.index_of(&top.mul(&ec, &els[tr[i] as usize])) as u16
                        );
                    }
                }
                // The library's own trace agrees with the manual sum.
                if q <= 256 {
                    for (i, x) in els.iter().enumerate() {
                        let t = top.trace_to_subfield(x, &base).unwrap();
                        assert_eq!(top.index_of(&emb.apply(&t)) as u16, tr[i]);
                    }
                }
            }
        }

        // Rational functions: reduction and reciprocal round-trips on a
        // deterministic family.
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let num = IntPoly::from_i64s(&[a, 1, b], "q");
                let den = IntPoly::from_i64s(&[b, -2, 1, a], "q");
                if num.is_zero() || den.is_zero() {
                    continue;
                }
                let r = RatFunc::new(num, den).unwrap();
                if !r.num().is_zero() {
                    assert!(r.mul(&r.recip().unwrap()).is_one());
                }
                let twice = RatFunc::new(
                    &r.num().clone() * &IntPoly::from_i64s(&[7, 7], "q"),
                    &r.den().clone() * &IntPoly::from_i64s(&[7, 7], "q"),
                )
                .unwrap();
                assert_eq!(twice, r);
            }
        }
    });
}
