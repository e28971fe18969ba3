//! Fixed corpora. The worked examples and the level grid come first,
//! then a small type theory under `g2` and eta instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::relational::ArityRelation;
use super::suites::{Report, SEED};
use crate::arity::{asucc, infer_arity, leq_dec, Arity, LeqAnswer};
use crate::reduce::{conv_dec, is_normal, DEFAULT_FUEL};
use crate::syntax::{parse_env_named, parse_term_in, Env, FocalizedTerm, Term};
use crate::typing::{check_type, infer_type, SortHierarchy};

/// Node components range over `0..=LEQZ_MAX`.
pub const LEQZ_MAX: u32 = 8;
/// Number of sampled pairs of implications.
pub const LEQZ_SAMPLES: usize = 10_000;

fn focus(env: &str, term: &str) -> (Env, Term) {
    let (e, names) = parse_env_named(env).expect("corpus environment parses");
    let t = parse_term_in(term, &names).expect("corpus term parses");
    (e, t)
}

/// The two worked examples (untypable with an arity, normal without one)
/// plus the level-equality grid.
pub fn worked_examples_suite(g: &SortHierarchy) -> Report {
    let mut r = Report::new("worked_examples");
    let (e, t) = focus("[x0:*0][x1:*0][x2:x1]*0", "(x2)[x3:x0]*0");
    let subj = FocalizedTerm::new(e.clone(), t.clone());
    r.checked += 1;
    match infer_arity(g, &e, &t) {
        Ok(a) => r.expect(
            a == Arity::Node(0, 0),
            &subj,
            format!("arity {a}, expected (0,0)"),
        ),
        Err(err) => r.fail(&subj, format!("no arity: {err}")),
    }
    r.checked += 1;
    match infer_type(g, &e, &t, DEFAULT_FUEL) {
        Ok(u) => r.fail(&subj, format!("typed as {u}")),
        Err(err) => r.expect(
            err.kind() == "DomainMismatch",
            &subj,
            format!("unexpected error {err}"),
        ),
    }
    let (e, t) = focus("*0", "(*0)*0");
    let subj = FocalizedTerm::new(e.clone(), t.clone());
    r.checked += 2;
    r.expect(is_normal(&e, &t) == Ok(true), &subj, "not normal");
    r.expect(infer_arity(g, &e, &t).is_err(), &subj, "has an arity");
    leqz_nodes(&mut r);
    r
}

fn leqz_formula(k1: u32, h1: u32, k2: u32, h2: u32) -> bool {
    h1 + k2 == h2 + k1
}

fn brute() -> ArityRelation<'static> {
    static GZ: SortHierarchy = SortHierarchy::Affine { step: 1 };
    ArityRelation {
        g: &GZ,
        bound: LEQZ_MAX,
        search: 32,
    }
}

/// Engine, closed formula and successor search agree on all node pairs.
fn leqz_nodes(r: &mut Report) {
    let g = SortHierarchy::gz();
    let rel = brute();
    let nodes: Vec<(u32, u32)> = (0..=LEQZ_MAX)
        .flat_map(|k| (0..=LEQZ_MAX).map(move |h| (k, h)))
        .collect();
    for &(k1, h1) in &nodes {
        for &(k2, h2) in &nodes {
            r.checked += 1;
            let (a, b) = (Arity::Node(k1, h1), Arity::Node(k2, h2));
            let engine = leq_dec(&g, &a, &b) == LeqAnswer::Yes;
            let formula = leqz_formula(k1, h1, k2, h2);
            let search = rel.same_level(&a, &b);
            r.expect(
                engine == formula && formula == search,
                format!("{a} ~ {b}"),
                format!("engine {engine}, formula {formula}, search {search}"),
            );
        }
    }
}

fn random_node(rng: &mut ChaCha8Rng) -> Arity {
    Arity::Node(rng.gen_range(0..=LEQZ_MAX), rng.gen_range(0..=LEQZ_MAX))
}

/// Level equality under `gz` on the node grid and sampled implications,
/// with the equivalence laws.
pub fn leqz_suite() -> Report {
    let g = SortHierarchy::gz();
    let rel = brute();
    let mut r = Report::new("leqz");
    leqz_nodes(&mut r);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let yes = |a: &Arity, b: &Arity| leq_dec(&g, a, b) == LeqAnswer::Yes;
    for _ in 0..LEQZ_SAMPLES {
        let (d1, c1, d2, c2) = (
            random_node(&mut rng),
            random_node(&mut rng),
            random_node(&mut rng),
            random_node(&mut rng),
        );
        let formula = |x: &Arity, y: &Arity| match (x, y) {
            (Arity::Node(k1, h1), Arity::Node(k2, h2)) => leqz_formula(*k1, *h1, *k2, *h2),
            _ => unreachable!(),
        };
        let expected = formula(&d1, &d2) && formula(&c1, &c2);
        let a = Arity::implies(d1, c1);
        let b = Arity::implies(d2, c2);
        let engine = yes(&a, &b);
        let search = rel.same_level(&a, &b);
        r.checked += 1;
        r.expect(
            engine == expected && expected == search,
            format!("{a} ~ {b}"),
            format!("engine {engine}, formula {expected}, search {search}"),
        );
        r.expect(yes(&b, &a) == engine, format!("{a} ~ {b}"), "not symmetric");
    }
    let nodes: Vec<Arity> = (0..=LEQZ_MAX)
        .flat_map(|k| (0..=LEQZ_MAX).map(move |h| Arity::Node(k, h)))
        .collect();
    for a in &nodes {
        for b in nodes.iter().filter(|b| yes(a, b)) {
            for c in nodes.iter().filter(|c| yes(b, c)) {
                r.add("transitive_chains", 1);
                r.expect(yes(a, c), format!("{a} ~ {b} ~ {c}"), "not transitive");
            }
        }
    }
    for k in 0..=LEQZ_MAX {
        for h in 0..=LEQZ_MAX {
            let n = Arity::Node(k, h);
            r.checked += 2;
            r.expect(yes(&n, &n), &n, "not reflexive");
            let shifted = Arity::Node(k + 1, h + 1);
            r.expect(yes(&n, &shifted), &n, format!("not level with {shifted}"));
        }
    }
    r
}

const PRF: &str = "[Prf:[p:*0]*1]";

/// Structural rules of a type theory with `Prop = *0`, `Set = *1` and a
/// declared coercion `Prf` from propositions to sets, under `g2`.
pub fn mtt_suite() -> Report {
    let g = SortHierarchy::g2();
    let gz = SortHierarchy::gz();
    let mut r = Report::new("mtt");

    let exact = |r: &mut Report, g: &SortHierarchy, env: &str, term: &str, ty: &str| {
        let (e, t) = focus(env, term);
        let (_, u) = focus(env, ty);
        r.checked += 1;
        match infer_type(g, &e, &t, DEFAULT_FUEL) {
            Ok(v) => r.expect(
                v == u,
                FocalizedTerm::new(e, t),
                format!("typed as {v}, expected {u}"),
            ),
            Err(err) => r.fail(FocalizedTerm::new(e, t), err),
        }
    };
    let has = |r: &mut Report, env: &str, term: &str, ty: &str| {
        let (e, t) = focus(env, term);
        let (_, u) = focus(env, ty);
        r.checked += 1;
        let res = check_type(&g, &e, &t, &u, DEFAULT_FUEL);
        r.expect(
            res == Ok(true),
            FocalizedTerm::new(e, t),
            format!("not of type {u}: {res:?}"),
        );
    };
    let conv = |r: &mut Report, env: &str, a: &str, b: &str, want: bool| {
        let (e, x) = focus(env, a);
        let (_, y) = focus(env, b);
        r.checked += 1;
        let res = conv_dec(&e, &x, &y, DEFAULT_FUEL);
        r.expect(
            res == Ok(want),
            FocalizedTerm::new(e, x),
            format!("conv with {y}: {res:?}"),
        );
    };

    // sorts: Prop : *2 and Set : *3, apart; under gz Prop : Set
    exact(&mut r, &g, "*0", "*0", "*2");
    exact(&mut r, &g, "*0", "*1", "*3");
    exact(&mut r, &gz, "*0", "*0", "*1");
    r.checked += 2;
    r.expect(
        asucc(&gz, &Arity::Node(0, 0)) == Ok(Arity::Node(0, 1)),
        "*0",
        "under gz the successor of Prop is not Set",
    );
    let apart = (0..=LEQZ_MAX).all(|k| {
        leq_dec(&g, &Arity::Node(0, 0), &Arity::Node(k, 1)) == LeqAnswer::No
            && leq_dec(&g, &Arity::Node(k, 0), &Arity::Node(0, 1)) == LeqAnswer::No
    });
    r.expect(apart, "*0", "Prop and Set levels meet under g2");

    // the coercion is well declared, and ps: A : Prop gives (A)Prf : Set
    let (e, t) = focus("*0", "[p:*0]*1");
    r.checked += 1;
    r.expect(
        infer_type(&g, &e, &t, DEFAULT_FUEL).is_ok(),
        "[p:*0]*1",
        "declaration untypable",
    );
    let env = format!("{PRF}[x:*0]*0");
    has(&mut r, &env, "(x)Prf", "*1");
    has(&mut r, &env, "(x)Prf", "(x)[p:*0]*1");

    // var: a declared proof has its declared type
    let env = format!("{PRF}[A:*0][h:(A)Prf]*0");
    exact(&mut r, &g, &env, "h", "(A)Prf");
    has(&mut r, &env, "A", "*0");

    // seteq: conversion of the set a proof inhabits
    let env = format!("{PRF}[A:*0][B=A][h:(A)Prf]*0");
    has(&mut r, &env, "h", "(B)Prf");
    conv(&mut r, &env, "(A)Prf", "(B)Prf", true);

    // i and e: abstraction and application over proofs
    let env = format!("{PRF}[A:*0]*0");
    has(&mut r, &env, "[h:(A)Prf]h", "[h:(A)Prf](A)Prf");
    let env = format!("{PRF}[A:*0][f:[h:(A)Prf](A)Prf][a:(A)Prf]*0");
    has(&mut r, &env, "(a)f", "(A)Prf");
    has(&mut r, &env, "(a)f", "(a)[h:(A)Prf](A)Prf");
    let env = format!("{PRF}[A:*0][B:*0][a:(A)Prf]*0");
    r.checked += 1;
    let (e, t) = focus(&env, "(a)[h:(B)Prf]h");
    r.expect(
        infer_type(&g, &e, &t, DEFAULT_FUEL).is_err(),
        FocalizedTerm::new(e, t),
        "proof of A accepted where B is expected",
    );

    // equality rules as conversion instances
    let env = format!("{PRF}*0");
    conv(&mut r, &env, "[a:*1]a", "[a:*1]a", true);
    conv(&mut r, &env, "[x=*0]x", "*0", true);
    conv(&mut r, &env, "*0", "[x=*0]x", true);
    conv(&mut r, &env, "*0", "(*0)[y:*1]y", true);
    conv(&mut r, &env, "[x=*0]x", "(*0)[y:*1]y", true);
    conv(&mut r, &env, "*0", "*1", false);

    // substitution: instantiating a hypothetical judgment
    let env = format!("{PRF}[B:*0]*0");
    has(&mut r, &env, "(B)[A:*0][h:(A)Prf]h", "[h:(B)Prf](B)Prf");
    has(&mut r, &env, "[A=B][h:(A)Prf]h", "[h:(B)Prf](B)Prf");
    r
}

const ETA_ENV: &str = "[a:*0][b:*1]*0";

/// `[x:V](x)T` converts with `T` whenever `T` converts with `[x:W]U` and
/// `V` with `W`.
pub fn eta_suite() -> Report {
    let mut r = Report::new("eta");
    let ws = ["*0", "a", "b", "[z:*0]z"];
    let us = ["x", "*0", "a", "[y:x]y", "(a)[y:*0]x"];
    let t_forms: [fn(&str, &str) -> String; 4] = [
        |w, u| format!("[x:{w}]{u}"),
        |w, u| format!("<*5>[x:{w}]{u}"),
        |w, u| format!("[z=*0][x:{w}]{u}"),
        |w, u| format!("(*0)[z:*1][x:{w}]{u}"),
    ];
    let v_forms: [fn(&str) -> String; 3] = [
        |w| w.to_string(),
        |w| format!("<*7>{w}"),
        |w| format!("[y={w}]y"),
    ];
    for w in ws {
        for u in us {
            for tf in t_forms {
                for vf in v_forms {
                    let (e, t) = focus(ETA_ENV, &tf(w, u));
                    let (_, lam) = focus(ETA_ENV, &format!("[x:{w}]{u}"));
                    let (_, wt) = focus(ETA_ENV, w);
                    let (_, v) = focus(ETA_ENV, &vf(w));
                    let subj = FocalizedTerm::new(e.clone(), t.clone());
                    r.checked += 1;
                    let hyp = conv_dec(&e, &t, &lam, DEFAULT_FUEL) == Ok(true)
                        && conv_dec(&e, &v, &wt, DEFAULT_FUEL) == Ok(true);
                    if !hyp {
                        r.fail(&subj, "hypotheses do not hold");
                        continue;
                    }
                    let eta = Term::abst(v, Term::appl(Term::Ref(0), t.lift(1, 0)));
                    let res = conv_dec(&e, &eta, &t, DEFAULT_FUEL);
                    r.expect(
                        res == Ok(true),
                        &subj,
                        format!("eta expansion {eta}: {res:?}"),
                    );
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_pass() {
        for r in [
            worked_examples_suite(&SortHierarchy::gz()),
            mtt_suite(),
            eta_suite(),
        ] {
            assert!(r.passed(), "{r}");
        }
    }
}
