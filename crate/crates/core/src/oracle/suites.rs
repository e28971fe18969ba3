//! Property suites over enumerated instances.
//!
//! Each suite checks every instance independently (in parallel) and merges
//! the per-instance reports in enumeration order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use super::gen::{
    enumerate_envs, enumerate_terms, for_each_focalized, sample_envs, sample_focalized, GenConfig,
};
use super::relational::{reduct_closure, ArityRelation, Capped, TypeRelation};
use crate::arity::{asucc, infer_arity, leq_dec, Arity, LeqAnswer};
use crate::legalize::{csubt_dec, legalize_env};
use crate::reduce::{
    conv_dec, env_step_enumerate, is_normal, normal_form, normalize_counted, pr0_enumerate,
    pr2_enumerate, reduce_once, DEFAULT_FUEL,
};
use crate::syntax::{print_env, print_in, Binder, Env, EnvItem, Flat, FocalizedTerm, Term};
use crate::typing::{check_type, infer_type, static_type, static_type_iter, SortHierarchy};

/// Step bound for the normalization suite.
pub const SN_FUEL: u64 = 10_000;
/// Size of the sampled depth-3 slice of the confluence suite.
pub const DIAMOND3_SAMPLES: usize = 10_400;
/// Number of sampled deep environments in the legalization suite.
pub const WF3_DEEP_SAMPLES: usize = 20_000;
pub const SEED: u64 = 0x1d_5eed;

const CLOSURE_CAP: usize = 2_000;

/// Outcome of a suite, with failure lines and some statistics.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub suite: String,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
    /// Summed over instances.
    pub sums: BTreeMap<&'static str, u64>,
    /// Maximum over instances.
    pub maxima: BTreeMap<&'static str, u64>,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            ..Report::default()
        }
    }

    /// Relabels the report and its failure lines.
    pub fn rename(&mut self, suite: &str) {
        let old = format!("FAIL {} ", self.suite);
        let new = format!("FAIL {suite} ");
        for line in &mut self.failures {
            *line = line.replacen(&old, &new, 1);
        }
        self.suite = suite.to_string();
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, subject: impl fmt::Display, detail: impl fmt::Display) {
        self.failures
            .push(format!("FAIL {} {} {}", self.suite, subject, detail));
    }

    /// Records `ok`, failing with `detail` when it is false.
    pub fn expect(&mut self, ok: bool, subject: impl fmt::Display, detail: impl fmt::Display) {
        if !ok {
            self.fail(subject, detail);
        }
    }

    pub fn add(&mut self, key: &'static str, n: u64) {
        *self.sums.entry(key).or_default() += n;
    }

    pub fn max(&mut self, key: &'static str, n: u64) {
        let m = self.maxima.entry(key).or_default();
        *m = (*m).max(n);
    }

    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
        for (k, v) in other.sums {
            self.add(k, v);
        }
        for (k, v) in other.maxima {
            self.max(k, v);
        }
    }

    pub fn summary(&self) -> String {
        let mut s = if self.passed() {
            format!("OK {} n={}", self.suite, self.checked)
        } else {
            format!(
                "FAILED {} n={} failures={}",
                self.suite,
                self.checked,
                self.failures.len()
            )
        };
        if self.skipped > 0 {
            s.push_str(&format!(" skipped={}", self.skipped));
        }
        for (k, v) in self.sums.iter().chain(&self.maxima) {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.failures {
            writeln!(f, "{line}")?;
        }
        write!(f, "{}", self.summary())
    }
}

/// Runs `check` on every item in parallel; reports merge in item order.
pub fn par_check<T: Sync>(
    suite: &str,
    items: &[T],
    check: impl Fn(&T, &mut Report) + Sync,
) -> Report {
    let parts: Vec<Report> = items
        .par_iter()
        .map(|it| {
            let mut r = Report::new(suite);
            check(it, &mut r);
            r
        })
        .collect();
    let mut out = Report::new(suite);
    for p in parts {
        out.absorb(p);
    }
    out
}

fn conv(e: &Env, a: &Term, b: &Term) -> bool {
    conv_dec(e, a, b, DEFAULT_FUEL).unwrap_or(false)
}

/// Every pair of one-step parallel reducts has a common reduct. Also checks
/// that reducts gain no free variables and engine steps are parallel steps.
pub fn diamond_suite(suite: &str, items: &[FocalizedTerm]) -> Report {
    let distinct: Vec<Term> = items
        .iter()
        .map(|f| f.term.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut report = par_check(suite, &distinct, |t, r| {
        r.checked += 1;
        let reducts: Vec<Term> = pr0_enumerate(t).into_iter().collect();
        r.expect(reducts.contains(t), t, "not a reduct of itself");
        let fv = t.free_vars();
        let next: Vec<BTreeSet<Term>> = reducts
            .iter()
            .map(|a| {
                r.expect(
                    a.free_vars().is_subset(&fv),
                    t,
                    format!("gains variables: {a}"),
                );
                pr0_enumerate(a)
            })
            .collect();
        r.max("reducts", reducts.len() as u64);
        for i in 0..reducts.len() {
            for j in i + 1..reducts.len() {
                r.add("pairs", 1);
                if next[i].is_disjoint(&next[j]) {
                    r.fail(
                        t,
                        format!("no common reduct for {} and {}", reducts[i], reducts[j]),
                    );
                }
            }
        }
    });
    let steps = par_check(suite, items, |f, r| {
        if let Ok(Some(step)) = reduce_once(&f.env, &f.term) {
            r.add("engine_steps", 1);
            if !pr2_enumerate(&f.env, &f.term).contains(&step.after) {
                r.fail(
                    f,
                    format!("engine step {} is not a parallel step", step.scheme),
                );
            }
        }
    });
    report.absorb(steps);
    report
}

/// Subject reduction for parallel steps on the term and on the environment.
pub fn sred_suite(g: &SortHierarchy, items: &[FocalizedTerm]) -> Report {
    par_check("sred", items, |f, r| {
        let Ok(u) = infer_type(g, &f.env, &f.term, DEFAULT_FUEL) else {
            return;
        };
        r.checked += 1;
        for t2 in pr2_enumerate(&f.env, &f.term) {
            r.add("reducts", 1);
            match infer_type(g, &f.env, &t2, DEFAULT_FUEL) {
                Ok(u2) => r.expect(
                    conv(&f.env, &u, &u2),
                    f,
                    format!(
                        "reduct {} has type {}",
                        print_in(&f.env, &t2),
                        print_in(&f.env, &u2)
                    ),
                ),
                Err(err) => r.fail(
                    f,
                    format!("reduct {} untypable: {err}", print_in(&f.env, &t2)),
                ),
            }
        }
        for e2 in env_step_enumerate(&f.env) {
            for t2 in pr0_enumerate(&f.term) {
                r.add("env_reducts", 1);
                match infer_type(g, &e2, &t2, DEFAULT_FUEL) {
                    Ok(u2) => r.expect(
                        conv(&e2, &u, &u2),
                        f,
                        format!(
                            "in {} reduct {} changes type",
                            print_env(&e2),
                            print_in(&e2, &t2)
                        ),
                    ),
                    Err(err) => r.fail(
                        f,
                        format!(
                            "in {} reduct {} untypable: {err}",
                            print_env(&e2),
                            print_in(&e2, &t2)
                        ),
                    ),
                }
            }
        }
    })
}

/// The inferred type has the shape the rule for the term's constructor
/// predicts, with the premises typable.
pub fn genlemma_suite(g: &SortHierarchy, items: &[FocalizedTerm]) -> Report {
    par_check("genlemma", items, |f, r| {
        let e = &f.env;
        let Ok(u) = infer_type(g, e, &f.term, DEFAULT_FUEL) else {
            return;
        };
        r.checked += 1;
        let typable = |e: &Env, t: &Term| infer_type(g, e, t, DEFAULT_FUEL).ok();
        let ok = match &f.term {
            Term::Sort(h) => g.next(*h).is_ok_and(|n| conv(e, &u, &Term::Sort(n))),
            Term::Ref(i) => match e.lookup(*i) {
                Ok((prefix, Binder::Abbr(v))) => {
                    typable(&prefix, &v).is_some_and(|w| conv(e, &u, &w.lift(i + 1, 0)))
                }
                Ok((prefix, Binder::Abst(w))) => {
                    typable(&prefix, &w).is_some() && conv(e, &u, &w.lift(i + 1, 0))
                }
                _ => false,
            },
            Term::Bind(b, body) => {
                let arg_ok = b.arg().is_none_or(|a| typable(e, a).is_some());
                arg_ok
                    && typable(&e.push(b.clone()), body)
                        .is_some_and(|u0| conv(e, &u, &Term::Bind(b.clone(), Box::new(u0))))
            }
            Term::Flat(Flat::Appl(v), body) => {
                let fun = typable(e, body).and_then(|ut| normal_form(e, &ut, DEFAULT_FUEL).ok());
                match fun {
                    Some(Term::Bind(Binder::Abst(w), inner)) => {
                        check_type(g, e, v, &w, DEFAULT_FUEL) == Ok(true)
                            && conv(
                                e,
                                &u,
                                &Term::appl((**v).clone(), Term::Bind(Binder::Abst(w), inner)),
                            )
                    }
                    _ => false,
                }
            }
            Term::Flat(Flat::Cast(w), body) => match &u {
                Term::Flat(Flat::Cast(v0), v) => {
                    **v == **w
                        && typable(e, v0).is_some()
                        && typable(e, w).is_some_and(|tw| conv(e, &tw, v0))
                        && check_type(g, e, body, w, DEFAULT_FUEL) == Ok(true)
                }
                _ => false,
            },
        };
        r.expect(
            ok,
            f,
            format!("type {} does not fit the rule", print_in(e, &u)),
        );
    })
}

/// Canonical arities against the relational arity rules.
pub fn arity_rel_suite(g: &SortHierarchy, items: &[FocalizedTerm]) -> Report {
    let rel = ArityRelation {
        g,
        bound: 8,
        search: 32,
    };
    par_check("arity_rel", items, |f, r| {
        let all = rel.arities(&f.env, &f.term);
        match infer_arity(g, &f.env, &f.term) {
            Ok(a) => {
                if max_component(&a) > 6 {
                    r.skipped += 1;
                    return;
                }
                r.checked += 1;
                r.add("derived", all.len() as u64);
                r.expect(
                    all.contains(&a),
                    f,
                    format!("canonical arity {a} not derivable"),
                );
                for b in &all {
                    if leq_dec(g, &a, b) != LeqAnswer::Yes {
                        r.fail(f, format!("derivable arity {b} differs from canonical {a}"));
                    }
                }
            }
            Err(_) => {
                r.checked += 1;
                if let Some(b) = all.first() {
                    r.fail(f, format!("engine finds no arity but {b} is derivable"));
                }
            }
        }
    })
}

fn max_component(a: &Arity) -> u32 {
    match a {
        Arity::Node(k, h) => (*k).max(*h),
        Arity::Impl(x, y) => max_component(x).max(max_component(y)),
    }
}

/// Type correctness and check-by-cast. Uniqueness and decidability against
/// the relational rules. Predicativity and acyclicity. Thinning.
pub fn typing_suite(g: &SortHierarchy, items: &[FocalizedTerm]) -> Report {
    let rel = TypeRelation {
        g,
        cap: CLOSURE_CAP,
    };
    par_check("typing", items, |f, r| {
        let e = &f.env;
        let t = &f.term;
        r.checked += 1;
        let inferred = infer_type(g, e, t, DEFAULT_FUEL);
        let derived = rel.types(e, t);
        match &inferred {
            Ok(u) => {
                r.add("typable", 1);
                r.expect(
                    infer_type(g, e, u, DEFAULT_FUEL).is_ok(),
                    f,
                    format!("type {} is untypable", print_in(e, u)),
                );
                r.expect(
                    check_type(g, e, t, u, DEFAULT_FUEL) == Ok(true),
                    f,
                    "fails to check against its own type",
                );
                r.expect(!conv(e, u, t), f, "type convertible with the term");
                if let Term::Bind(Binder::Abst(v), _) = t {
                    r.expect(!conv(e, u, v), f, "type convertible with the domain");
                }
                match &derived {
                    Ok(ts) => {
                        r.expect(!ts.is_empty(), f, "no derivation by the rules");
                        for u2 in ts {
                            r.expect(
                                conv(e, u, u2),
                                f,
                                format!("derivable type {} not convertible", print_in(e, u2)),
                            );
                        }
                    }
                    Err(Capped) => r.add("relation_capped", 1),
                }
            }
            Err(err) => {
                r.expect(!err.is_abort(), f, format!("aborted: {err}"));
                if let Ok(ts) = &derived {
                    if let Some(u2) = ts.first() {
                        r.fail(
                            f,
                            format!(
                                "engine rejects ({err}) but {} is derivable",
                                print_in(e, u2)
                            ),
                        );
                    }
                }
            }
        }
        let n = e.binder_count();
        for level in 0..=n {
            for b in [Binder::Abst(Box::new(Term::Sort(0))), Binder::Void] {
                let e2 = e.insert_binder(level, b);
                let t2 = t.lift(1, n - level);
                match (&inferred, infer_type(g, &e2, &t2, DEFAULT_FUEL)) {
                    (Ok(u), Ok(u2)) => r.expect(
                        conv(&e2, &u.lift(1, n - level), &u2),
                        f,
                        format!("thinning at {level} changes the type"),
                    ),
                    (Err(_), Err(_)) => {}
                    (_, res) => r.fail(
                        f,
                        format!("thinning at {level} changes typability: {}", res.is_ok()),
                    ),
                }
            }
        }
    })
}

/// The static type is a type, and iterating it reaches an env-shaped term.
pub fn static_suite(g: &SortHierarchy, items: &[FocalizedTerm]) -> Report {
    par_check("static", items, |f, r| {
        if infer_type(g, &f.env, &f.term, DEFAULT_FUEL).is_err() {
            return;
        }
        r.checked += 1;
        match static_type(g, &f.env, &f.term) {
            Ok(s) => r.expect(
                check_type(g, &f.env, &f.term, &s, DEFAULT_FUEL) == Ok(true),
                f,
                format!("static type {} is not a type", print_in(&f.env, &s)),
            ),
            Err(err) => r.fail(f, format!("no static type: {err}")),
        }
        let bound = f.term.depth() as u64 + 1;
        match static_type_iter(g, &f.env, &f.term, bound) {
            Ok((_, k)) => r.max("iterations", k),
            Err(err) => r.fail(f, format!("not env-shaped within {bound}: {err}")),
        }
    })
}

/// Term and type have arities one level apart; every node is inhabited.
pub fn arity_bridge_suite(g: &SortHierarchy, items: &[FocalizedTerm]) -> Report {
    let mut report = par_check("arity_bridge", items, |f, r| {
        let Ok(u) = infer_type(g, &f.env, &f.term, DEFAULT_FUEL) else {
            return;
        };
        r.checked += 1;
        match (infer_arity(g, &f.env, &f.term), infer_arity(g, &f.env, &u)) {
            (Ok(a), Ok(b)) => {
                let ok = asucc(g, &a).is_ok_and(|s| leq_dec(g, &b, &s) == LeqAnswer::Yes);
                r.expect(ok, f, format!("type arity {b} is not the successor of {a}"));
            }
            (a, b) => r.fail(
                f,
                format!("missing arity: term {:?}, type {:?}", a.err(), b.err()),
            ),
        }
    });
    for k in 0..=4u32 {
        for h in 0..=4u32 {
            report.checked += 1;
            // [y0:*h][y1:y0]...; y_{k-1} has arity (k,h)
            let mut e = Env::new(0);
            let mut ty = Term::Sort(h);
            for _ in 0..k {
                e = e.push(Binder::Abst(Box::new(ty)));
                ty = Term::Ref(0);
            }
            let t = if k == 0 { Term::Sort(h) } else { Term::Ref(0) };
            let want = Arity::Node(k, h);
            let ok = infer_type(g, &e, &t, DEFAULT_FUEL).is_ok()
                && infer_arity(g, &e, &t).is_ok_and(|a| leq_dec(g, &a, &want) == LeqAnswer::Yes);
            report.expect(
                ok,
                FocalizedTerm::new(e, t),
                format!("does not inhabit {want}"),
            );
        }
    }
    report
}

/// Normal terms with an arity are abstractions or sorts or variables
/// applied to normal arguments.
pub fn nf_suite(g: &SortHierarchy, items: &[FocalizedTerm]) -> Report {
    par_check("nf", items, |f, r| {
        if is_normal(&f.env, &f.term) != Ok(true) || infer_arity(g, &f.env, &f.term).is_err() {
            return;
        }
        r.checked += 1;
        let ok = match &f.term {
            Term::Sort(_) | Term::Bind(Binder::Abst(_), _) => true,
            t => spine_ok(&f.env, t),
        };
        r.expect(ok, f, "normal term with an arity of unexpected shape");
    })
}

fn spine_ok(e: &Env, t: &Term) -> bool {
    match t {
        Term::Ref(i) => matches!(e.lookup(*i), Ok((_, Binder::Abst(_)))),
        Term::Flat(Flat::Appl(v), body) => is_normal(e, v) == Ok(true) && spine_ok(e, body),
        _ => false,
    }
}

/// Legalization is total and idempotent and preserves types. Its results
/// are legal.
pub fn wf3_suite(g: &SortHierarchy) -> Report {
    let cfg = GenConfig::legalization();
    let mut report = wf3_check(g, &enumerate_envs(&cfg), 1);
    let deep = sample_envs(&GenConfig::legalization_deep(), WF3_DEEP_SAMPLES, SEED);
    report.absorb(wf3_check(g, &deep, 0));
    report
}

fn wf3_check(g: &SortHierarchy, envs: &[Env], term_depth: usize) -> Report {
    par_check("wf3", envs, |e, r| {
        r.checked += 1;
        let legal = match legalize_env(g, e, DEFAULT_FUEL) {
            Ok(l) => l,
            Err(err) => {
                r.fail(print_env(e), format!("not total: {err}"));
                return;
            }
        };
        r.expect(
            legalize_env(g, &legal, DEFAULT_FUEL).as_ref() == Ok(&legal),
            print_env(e),
            "not idempotent",
        );
        for (pos, item) in legal.items.iter().enumerate() {
            if let Some(arg) = item.arg() {
                let prefix = Env::with_items(legal.items[..pos].to_vec(), legal.head);
                r.expect(
                    infer_type(g, &prefix, arg, DEFAULT_FUEL).is_ok(),
                    print_env(e),
                    format!("item {pos} of the result is untypable"),
                );
            }
        }
        let mut terms = Vec::new();
        terms_up_to(term_depth, e.binder_count(), &mut terms);
        for t in terms {
            if let Ok(u) = infer_type(g, e, &t, DEFAULT_FUEL) {
                r.add("typable_terms", 1);
                match infer_type(g, &legal, &t, DEFAULT_FUEL) {
                    Ok(u2) => r.expect(
                        conv(&legal, &u, &u2),
                        FocalizedTerm::new(e.clone(), t.clone()),
                        "type changes after legalization",
                    ),
                    Err(err) => r.fail(
                        FocalizedTerm::new(e.clone(), t.clone()),
                        format!("untypable after legalization: {err}"),
                    ),
                }
            }
        }
    })
}

/// Sorts 0 and 1 and references; above depth 0 also flats and binders.
fn terms_up_to(depth: usize, scope: usize, out: &mut Vec<Term>) {
    out.extend([Term::Sort(0), Term::Sort(1)]);
    out.extend((0..scope).map(Term::Ref));
    if depth == 0 {
        return;
    }
    let mut sub = Vec::new();
    terms_up_to(depth - 1, scope, &mut sub);
    let mut inner = Vec::new();
    terms_up_to(depth - 1, scope + 1, &mut inner);
    for a in &sub {
        for b in &sub {
            out.push(Term::appl(a.clone(), b.clone()));
            out.push(Term::cast(a.clone(), b.clone()));
        }
        for b in &inner {
            out.push(Term::abst(a.clone(), b.clone()));
            out.push(Term::abbr(a.clone(), b.clone()));
        }
    }
    for b in &inner {
        out.push(Term::void(b.clone()));
    }
}

/// Reflexivity and the weakening clauses (alone and composed). Typing is
/// checked to be monotone along the preorder.
pub fn csubt_suite(g: &SortHierarchy, items: &[FocalizedTerm]) -> Report {
    let by_env: BTreeMap<Env, Vec<Term>> = items.iter().fold(BTreeMap::new(), |mut m, f| {
        m.entry(f.env.clone()).or_default().push(f.term.clone());
        m
    });
    let envs: Vec<(Env, Vec<Term>)> = by_env.into_iter().collect();
    par_check("csubt", &envs, |(e, terms), r| {
        r.checked += 1;
        let subj = print_env(e);
        r.expect(
            csubt_dec(g, e, e, DEFAULT_FUEL) == Ok(true),
            &subj,
            "not reflexive",
        );
        for (pos, item) in e.items.iter().enumerate() {
            let EnvItem::Bind(b) = item else { continue };
            let mut variants = vec![with_item(e, pos, Binder::Void)];
            if let Binder::Abbr(v) = b {
                let prefix = Env::with_items(e.items[..pos].to_vec(), e.head);
                if let Ok(w) = infer_type(g, &prefix, v, DEFAULT_FUEL) {
                    let up = with_item(e, pos, Binder::Abst(Box::new(w)));
                    r.expect(
                        csubt_dec(g, &with_item(&up, pos, Binder::Void), &up, DEFAULT_FUEL)
                            == Ok(true),
                        &subj,
                        "void over a declaration not below it",
                    );
                    variants.push(up);
                }
            }
            for lower in variants {
                r.add("pairs", 1);
                let below = csubt_dec(g, &lower, e, DEFAULT_FUEL) == Ok(true);
                r.expect(
                    below,
                    &subj,
                    format!("{} is not below it", print_env(&lower)),
                );
                if !below {
                    continue;
                }
                for t in terms {
                    if let Ok(u) = infer_type(g, &lower, t, DEFAULT_FUEL) {
                        match infer_type(g, e, t, DEFAULT_FUEL) {
                            Ok(u2) => r.expect(
                                conv(e, &u, &u2),
                                &subj,
                                format!(
                                    "{} changes type moving up from {}",
                                    print_in(e, t),
                                    print_env(&lower)
                                ),
                            ),
                            Err(err) => r.fail(
                                &subj,
                                format!(
                                    "{} loses its type moving up from {}: {err}",
                                    print_in(e, t),
                                    print_env(&lower)
                                ),
                            ),
                        }
                    }
                }
            }
        }
    })
}

fn with_item(e: &Env, pos: usize, b: Binder) -> Env {
    let mut items = e.items.clone();
    items[pos] = EnvItem::Bind(b);
    Env::with_items(items, e.head)
}

/// Typable terms normalize within [`SN_FUEL`] steps, and the normal form is
/// the only normal term reachable by parallel steps.
pub fn sn_suite(g: &SortHierarchy, items: &[FocalizedTerm]) -> Report {
    par_check("sn", items, |f, r| {
        if infer_type(g, &f.env, &f.term, DEFAULT_FUEL).is_err() {
            return;
        }
        r.checked += 1;
        let nf = match normalize_counted(&f.env, &f.term, SN_FUEL) {
            Ok((nf, steps)) => {
                r.max("max_steps", steps);
                nf
            }
            Err(err) => {
                r.fail(f, err);
                return;
            }
        };
        match reduct_closure(&f.env, &f.term, CLOSURE_CAP) {
            Some(all) => {
                for x in all {
                    if x != nf && is_normal(&f.env, &x) == Ok(true) {
                        r.fail(f, format!("second normal form {}", print_in(&f.env, &x)));
                    }
                }
            }
            None => r.add("closure_capped", 1),
        }
    })
}

/// The enumeration used by the exhaustive suites.
pub fn standard_terms() -> Vec<FocalizedTerm> {
    enumerate_terms(&GenConfig::standard())
}

/// Seeded sample of focalized terms of depth 3.
pub fn depth3_slice() -> Vec<FocalizedTerm> {
    sample_focalized(&GenConfig::depth3(), DIAMOND3_SAMPLES, SEED)
}

/// The typable members of the closed depth-3 enumeration.
pub fn typed_terms(g: &SortHierarchy) -> Vec<FocalizedTerm> {
    let mut out = Vec::new();
    for_each_focalized(&GenConfig::closed_depth3(), |f| {
        if infer_type(g, &f.env, &f.term, DEFAULT_FUEL).is_ok() {
            out.push(f);
        }
    });
    out
}

/// Names accepted by [`run_suite`]. A trailing `3` runs a per-term suite
/// on the depth-3 slice instead of the exhaustive enumeration, a trailing
/// `_typed` on the typable closed depth-3 terms.
pub const SUITES: &[&str] = &[
    "diamond",
    "diamond3",
    "sred",
    "sred3",
    "genlemma",
    "genlemma3",
    "arity_rel",
    "arity_rel3",
    "typing",
    "typing3",
    "static",
    "static3",
    "arity_bridge",
    "arity_bridge3",
    "nf",
    "nf3",
    "wf3",
    "csubt",
    "csubt3",
    "sn",
    "sn3",
    "sred_typed",
    "genlemma_typed",
    "typing_typed",
    "static_typed",
    "arity_bridge_typed",
    "sn_typed",
    "worked_examples",
    "leqz",
    "mtt",
    "eta",
];

/// Runs a suite by name on its shipped configuration, under `gz` except
/// for the corpus that fixes its own parameter.
pub fn run_suite(name: &str) -> Option<Report> {
    use super::corpus;
    let g = SortHierarchy::gz();
    match name {
        "wf3" => return Some(wf3_suite(&g)),
        "worked_examples" => return Some(corpus::worked_examples_suite(&g)),
        "leqz" => return Some(corpus::leqz_suite()),
        "mtt" => return Some(corpus::mtt_suite()),
        "eta" => return Some(corpus::eta_suite()),
        _ => {}
    }
    if !SUITES.contains(&name) {
        return None;
    }
    let (base, items) = if let Some(base) = name.strip_suffix("_typed") {
        (base, typed_terms(&g))
    } else if let Some(base) = name.strip_suffix('3') {
        (base, depth3_slice())
    } else {
        (name, standard_terms())
    };
    let mut r = match base {
        "diamond" => diamond_suite(base, &items),
        "sred" => sred_suite(&g, &items),
        "genlemma" => genlemma_suite(&g, &items),
        "arity_rel" => arity_rel_suite(&g, &items),
        "typing" => typing_suite(&g, &items),
        "static" => static_suite(&g, &items),
        "arity_bridge" => arity_bridge_suite(&g, &items),
        "nf" => nf_suite(&g, &items),
        "csubt" => csubt_suite(&g, &items),
        "sn" => sn_suite(&g, &items),
        _ => return None,
    };
    r.rename(name);
    Some(r)
}
