//! Randomized property suites shared by the `properties` and `acceptance`
//! targets.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use qgrass::lattice::{self, Context, PluckerVar, Tableau};
use qgrass::maps;
use qgrass::polyring::{Coeff, Monomial, Polynomial, XVar};
use qgrass::YoungSeq;

pub type Outcome = Result<(), String>;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

/// A small context together with three of its elements.
fn ctx_and_triple() -> impl Strategy<Value = (Context, PluckerVar, PluckerVar, PluckerVar)> {
    (1usize..=4, 1usize..=4, 0usize..=4, any::<[prop::sample::Index; 3]>()).prop_map(|(p, m, q, idx)| {
        let ctx = Context::with_q(p, m, q).unwrap();
        let elems = lattice::enumerate(&ctx, None).unwrap();
        let pick = |i: &prop::sample::Index| elems[i.index(elems.len())];
        (ctx, pick(&idx[0]), pick(&idx[1]), pick(&idx[2]))
    })
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

pub fn lattice_laws(cases: u32) -> Outcome {
    runner(cases)
        .run(&ctx_and_triple(), |(ctx, u, v, w)| {
            let meet = |a: PluckerVar, b: PluckerVar| a.meet_join(&b).0;
            let join = |a: PluckerVar, b: PluckerVar| a.meet_join(&b).1;
            check(meet(u, v) == meet(v, u) && join(u, v) == join(v, u), || {
                format!("commutativity {u} {v}")
            })?;
            check(meet(meet(u, v), w) == meet(u, meet(v, w)), || {
                format!("meet associativity {u} {v} {w}")
            })?;
            check(join(join(u, v), w) == join(u, join(v, w)), || {
                format!("join associativity {u} {v} {w}")
            })?;
            check(meet(u, join(u, v)) == u && join(u, meet(u, v)) == u, || {
                format!("absorption {u} {v}")
            })?;
            check(meet(u, join(v, w)) == join(meet(u, v), meet(u, w)), || {
                format!("distributivity {u} {v} {w}")
            })?;
            let (lo, hi) = u.meet_join(&v);
            check(
                lo.leq(&u) && lo.leq(&v) && u.leq(&hi) && v.leq(&hi) && lo.leq(&hi),
                || format!("bounds {u} {v}"),
            )?;
            check(u.leq(&v) == (lo == u) && u.leq(&v) == (hi == v), || {
                format!("order via meet/join {u} {v}")
            })?;
            check(
                lattice::rank(&lo, &ctx) + lattice::rank(&hi, &ctx)
                    == lattice::rank(&u, &ctx) + lattice::rank(&v, &ctx),
                || format!("modular rank law {u} {v}"),
            )?;
            let t = Tableau::new(vec![w, v, u]);
            let s = t.standardize();
            check(s.is_standard(), || format!("standardize {t}"))?;
            check(skew_columns(&t) == skew_columns(&s), || {
                format!("column multisets of {t} vs {s}")
            })?;
            let mut sh: Vec<u32> = t.rows.iter().map(|r| r.shift()).collect();
            let mut sh2: Vec<u32> = s.rows.iter().map(|r| r.shift()).collect();
            sh.sort_unstable();
            sh2.sort_unstable();
            check(sh == sh2, || format!("row shifts of {t} vs {s}"))?;
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Entries of a tableau grouped by skew column `i - a`.
fn skew_columns(t: &Tableau) -> std::collections::BTreeMap<i64, Vec<u8>> {
    let mut out: std::collections::BTreeMap<i64, Vec<u8>> = Default::default();
    for r in &t.rows {
        for (i, &c) in r.cols().iter().enumerate() {
            out.entry(i as i64 - r.shift() as i64).or_default().push(c);
        }
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

pub fn young_bijection(cases: u32) -> Outcome {
    runner(cases)
        .run(&ctx_and_triple(), |(ctx, u, v, _)| {
            let (ju, jv) = (lattice::to_young(&u, &ctx), lattice::to_young(&v, &ctx));
            check(u.leq(&v) == ju.leq(&jv), || format!("order {u} {v} vs {ju} {jv}"))?;
            check(lattice::rank(&u, &ctx) == ju.rank(), || format!("rank of {u}"))?;
            check(lattice::from_young(&ju, &ctx) == Ok(u), || format!("inverse at {u}"))?;
            let (lo, hi) = u.meet_join(&v);
            let cmin = YoungSeq(ju.0.iter().zip(&jv.0).map(|(a, b)| *a.min(b)).collect());
            let cmax = YoungSeq(ju.0.iter().zip(&jv.0).map(|(a, b)| *a.max(b)).collect());
            check(lattice::to_young(&lo, &ctx) == cmin, || format!("meet {u} {v}"))?;
            check(lattice::to_young(&hi, &ctx) == cmax, || format!("join {u} {v}"))?;
            if u.leq(&v) && u != v {
                check(lattice::rank(&u, &ctx) < lattice::rank(&v, &ctx), || {
                    format!("strict rank {u} < {v}")
                })?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn xpoly() -> impl Strategy<Value = Polynomial<XVar>> {
    let var = (1u8..=3, 1u8..=4, 0u8..=2, 1u32..=2).prop_map(|(i, j, l, e)| (XVar::new(i, j, l), e));
    let term = (-5i64..=5, prop::collection::vec(var, 0..4));
    prop::collection::vec(term, 0..6).prop_map(|ts| {
        Polynomial::from_terms(
            ts.into_iter()
                .map(|(c, fs)| (Coeff::from(c), Monomial::from_factors(fs))),
        )
    })
}

fn omega3(v: &XVar) -> i64 {
    maps::omega(v, 3)
}

pub fn term_order(cases: u32) -> Outcome {
    let strat = (xpoly(), xpoly(), xpoly());
    runner(cases)
        .run(&strat, |(f, g, h)| {
            let ms: Vec<Monomial<XVar>> = [&f, &g, &h]
                .iter()
                .filter_map(|p| p.leading_monomial().cloned())
                .collect();
            if let [a, b, c, ..] = &ms[..] {
                if a > b {
                    check(a.mul(c) > b.mul(c), || format!("multiplicativity {a} {b} {c}"))?;
                }
                check(Monomial::one() <= *a, || format!("1 is minimal against {a}"))?;
            }
            let fg = &f * &g;
            match (f.leading_term(), g.leading_term()) {
                (Some((mf, cf)), Some((mg, cg))) => {
                    let lt = fg.leading_term().map(|(m, c)| (m.clone(), c.clone()));
                    check(lt == Some((mf.mul(mg), cf * cg)), || format!("lead of ({f})*({g})"))?;
                }
                _ => check(fg.is_zero(), || "product with zero".into())?,
            }
            check(
                fg.initial_form(omega3) == &f.initial_form(omega3) * &g.initial_form(omega3),
                || format!("initial form of ({f})*({g})"),
            )?;
            check(&(&f + &g) * &h == &(&f * &h) + &(&g * &h), || "distributivity".into())?;
            let minus_f = &Polynomial::zero() - &f;
            check((&f + &minus_f).is_zero(), || "f + (-f)".into())?;
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn cpoly() -> impl Strategy<Value = Polynomial<PluckerVar>> {
    let var = (
        prop::sample::subsequence((1u8..=12).collect::<Vec<_>>(), 1..=4),
        0u32..=5,
    )
        .prop_map(|(cols, a)| PluckerVar::new(&cols, a).unwrap());
    let term = ((-40i64..=40, 1i64..=6), prop::collection::vec(var, 0..3));
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        Polynomial::from_terms(
            ts.into_iter()
                .map(|((n, d), vs)| (Coeff::from_ratio(n, d), Monomial::from_vars(vs))),
        )
    })
}

fn jpoly() -> impl Strategy<Value = Polynomial<YoungSeq>> {
    let var = prop::sample::subsequence((1u32..=30).collect::<Vec<_>>(), 1..=4).prop_map(YoungSeq);
    let term = (-9i64..=9, prop::collection::vec((var, 1u32..=3), 0..3));
    prop::collection::vec(term, 0..5).prop_map(|ts| {
        Polynomial::from_terms(
            ts.into_iter()
                .map(|(c, fs)| (Coeff::from(c), Monomial::from_factors(fs))),
        )
    })
}

pub fn serialization(cases: u32) -> Outcome {
    let strat = (xpoly(), cpoly(), jpoly(), any::<bool>());
    runner(cases)
        .run(&strat, |(x, c, j, compact)| {
            let back =
                Polynomial::<XVar>::parse_text(&x.to_text(compact)).map_err(|e| TestCaseError::fail(e.to_string()))?;
            check(back == x, || format!("X text {x}"))?;
            check(Polynomial::<XVar>::from_json(&x.to_json()).as_ref() == Ok(&x), || {
                format!("X json {x}")
            })?;
            let back = Polynomial::<PluckerVar>::parse_text(&c.to_text(compact))
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            check(back == c, || format!("C text {c}"))?;
            check(
                Polynomial::<PluckerVar>::from_json(&c.to_json()).as_ref() == Ok(&c),
                || format!("C json {c}"),
            )?;
            let back = Polynomial::<YoungSeq>::parse_text(&j.to_text(compact))
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            check(back == j, || format!("J text {j}"))?;
            check(
                Polynomial::<YoungSeq>::from_json(&j.to_json()).as_ref() == Ok(&j),
                || format!("J json {j}"),
            )?;
            let reparsed: serde_json::Value = serde_json::from_str(&c.to_json().to_string()).unwrap();
            check(reparsed == c.to_json(), || "json string round trip".into())?;
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub type Suite = (&'static str, fn(u32) -> Outcome);

/// The four suites with their names.
pub fn suites() -> Vec<Suite> {
    vec![
        ("lattice laws", lattice_laws as fn(u32) -> Outcome),
        ("rank and Young bijection", young_bijection),
        ("term order and initial forms", term_order),
        ("serialization round trips", serialization),
    ]
}
