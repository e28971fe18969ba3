//! Reduction and conversion.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::subst::{subst0_enumerate, subst_all};
use crate::syntax::{print_in, Binder, Env, EnvItem, Flat, Path, Step, Term};

pub const DEFAULT_FUEL: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    Beta,
    DeltaLocal,
    DeltaEnv,
    Zeta,
    Tau,
    Upsilon,
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Beta => "beta",
            Scheme::DeltaLocal => "delta",
            Scheme::DeltaEnv => "delta-env",
            Scheme::Zeta => "zeta",
            Scheme::Tau => "tau",
            Scheme::Upsilon => "upsilon",
        })
    }
}

/// One rewrite; `before` and `after` are whole terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub scheme: Scheme,
    pub site: Path,
    pub before: Term,
    pub after: Term,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace(pub Vec<ReductionStep>);

impl Trace {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One line per step, terms printed in the scope of `e`.
    pub fn lines(&self, e: &Env) -> Vec<String> {
        self.0
            .iter()
            .map(|s| {
                format!(
                    "{} @ {} : {} --> {}",
                    s.scheme,
                    s.site,
                    print_in(e, &s.before),
                    print_in(e, &s.after)
                )
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("dangling reference to index {index} at {path}")]
    DanglingReference { index: usize, path: Path },
    #[error("fuel exhausted after {fuel} steps")]
    FuelExhausted { fuel: u64 },
}

/// Definientia of the abbreviations of an environment, relocated to its
/// full scope and indexed by de Bruijn index.
struct Abbrs(Vec<Option<Term>>);

impl Abbrs {
    fn of(e: &Env) -> Abbrs {
        let mut out = Vec::new();
        for item in e.items.iter().rev() {
            if let EnvItem::Bind(b) = item {
                let i = out.len();
                out.push(match b {
                    Binder::Abbr(v) => Some(v.lift(i + 1, 0)),
                    _ => None,
                });
            }
        }
        Abbrs(out)
    }

    fn get(&self, i: usize) -> Option<&Term> {
        self.0.get(i).and_then(Option::as_ref)
    }
}

fn check_scope(e: &Env, t: &Term) -> Result<(), ReduceError> {
    e.check_scope()
        .and_then(|_| e.check_term(t))
        .map_err(|d| ReduceError::DanglingReference {
            index: d.index,
            path: Path::root(),
        })
}

/// Contracts the leftmost-outermost redex of `t` in `e`, or returns `None`
/// when `t` is normal.
pub fn reduce_once(e: &Env, t: &Term) -> Result<Option<ReductionStep>, ReduceError> {
    check_scope(e, t)?;
    Ok(step_with(&Abbrs::of(e), t))
}

fn step_with(abbrs: &Abbrs, t: &Term) -> Option<ReductionStep> {
    let mut path = Vec::new();
    let (scheme, after) = step_at(abbrs, t, 0, &mut path)?;
    Some(ReductionStep {
        scheme,
        site: Path(path),
        before: t.clone(),
        after,
    })
}

/// The contractum at the root of `t`, if `t` is a redex.
fn contract(abbrs: &Abbrs, t: &Term, depth: usize) -> Option<(Scheme, Term)> {
    match t {
        Term::Flat(Flat::Cast(_), body) => Some((Scheme::Tau, (**body).clone())),
        Term::Flat(Flat::Appl(v), body) => match &**body {
            Term::Bind(Binder::Abst(_), inner) => Some((
                Scheme::Beta,
                Term::Bind(Binder::Abbr(v.clone()), inner.clone()),
            )),
            Term::Bind(b, inner) => Some((
                Scheme::Upsilon,
                Term::Bind(
                    b.clone(),
                    Box::new(Term::appl(v.lift(1, 0), (**inner).clone())),
                ),
            )),
            _ => None,
        },
        Term::Bind(Binder::Abbr(v), body) => {
            if body.occurs(0) {
                let s = subst_all(0, &v.lift(1, 0), body)?;
                Some((
                    Scheme::DeltaLocal,
                    Term::Bind(Binder::Abbr(v.clone()), Box::new(s)),
                ))
            } else {
                Some((Scheme::Zeta, body.unlift(1, 0)?))
            }
        }
        Term::Bind(Binder::Void, body) if !body.occurs(0) => {
            Some((Scheme::Zeta, body.unlift(1, 0)?))
        }
        Term::Ref(j) if *j >= depth => abbrs
            .get(j - depth)
            .map(|v| (Scheme::DeltaEnv, v.lift(depth, 0))),
        _ => None,
    }
}

fn step_at(abbrs: &Abbrs, t: &Term, depth: usize, path: &mut Vec<Step>) -> Option<(Scheme, Term)> {
    if let Some(r) = contract(abbrs, t, depth) {
        return Some(r);
    }
    match t {
        Term::Sort(_) | Term::Ref(_) => None,
        Term::Bind(b, body) => {
            if let Some(arg) = b.arg() {
                path.push(Step::Arg);
                if let Some((s, a)) = step_at(abbrs, arg, depth, path) {
                    return Some((s, Term::Bind(b.with_arg(a), body.clone())));
                }
                path.pop();
            }
            path.push(Step::Body);
            if let Some((s, n)) = step_at(abbrs, body, depth + 1, path) {
                return Some((s, Term::Bind(b.clone(), Box::new(n))));
            }
            path.pop();
            None
        }
        Term::Flat(fl, body) => {
            path.push(Step::Arg);
            if let Some((s, a)) = step_at(abbrs, fl.arg(), depth, path) {
                return Some((s, Term::Flat(fl.with_arg(a), body.clone())));
            }
            path.pop();
            path.push(Step::Body);
            if let Some((s, n)) = step_at(abbrs, body, depth, path) {
                return Some((s, Term::Flat(fl.clone(), Box::new(n))));
            }
            path.pop();
            None
        }
    }
}

/// Reduces `t` to normal form, recording every step.
pub fn normalize(e: &Env, t: &Term, fuel: u64) -> Result<(Term, Trace), ReduceError> {
    let mut trace = Vec::new();
    let nf = run(e, t, fuel, |s| trace.push(s))?;
    Ok((nf, Trace(trace)))
}

/// Normal form of `t` without a trace.
pub fn normal_form(e: &Env, t: &Term, fuel: u64) -> Result<Term, ReduceError> {
    run(e, t, fuel, |_| {})
}

/// Normal form of `t` together with the number of steps taken.
pub fn normalize_counted(e: &Env, t: &Term, fuel: u64) -> Result<(Term, u64), ReduceError> {
    let mut n = 0;
    let nf = run(e, t, fuel, |_| n += 1)?;
    Ok((nf, n))
}

fn run(
    e: &Env,
    t: &Term,
    fuel: u64,
    mut record: impl FnMut(ReductionStep),
) -> Result<Term, ReduceError> {
    check_scope(e, t)?;
    let abbrs = Abbrs::of(e);
    let mut cur = t.clone();
    let mut steps = 0;
    while let Some(step) = step_with(&abbrs, &cur) {
        if steps == fuel {
            return Err(ReduceError::FuelExhausted { fuel });
        }
        steps += 1;
        cur = step.after.clone();
        record(step);
    }
    Ok(cur)
}

pub fn is_normal(e: &Env, t: &Term) -> Result<bool, ReduceError> {
    Ok(reduce_once(e, t)?.is_none())
}

/// Decides convertibility by comparing normal forms.
pub fn conv_dec(e: &Env, t1: &Term, t2: &Term, fuel: u64) -> Result<bool, ReduceError> {
    if t1 == t2 {
        check_scope(e, t1)?;
        return Ok(true);
    }
    Ok(normal_form(e, t1, fuel)? == normal_form(e, t2, fuel)?)
}

/// All one-step parallel reducts of `t`, `t` itself included.
pub fn pr0_enumerate(t: &Term) -> BTreeSet<Term> {
    let mut out = BTreeSet::new();
    out.insert(t.clone());
    match t {
        Term::Sort(_) | Term::Ref(_) => {}
        Term::Bind(b, body) => {
            let bodies = pr0_enumerate(body);
            match b {
                Binder::Abst(w) => {
                    for w2 in pr0_enumerate(w) {
                        for t2 in &bodies {
                            out.insert(Term::abst(w2.clone(), t2.clone()));
                        }
                    }
                }
                Binder::Abbr(v) => {
                    for v2 in pr0_enumerate(v) {
                        let lifted = v2.lift(1, 0);
                        for t2 in &bodies {
                            out.insert(Term::abbr(v2.clone(), t2.clone()));
                            for t3 in subst0_enumerate(0, &lifted, t2) {
                                out.insert(Term::abbr(v2.clone(), t3));
                            }
                        }
                    }
                }
                Binder::Void => {
                    for t2 in &bodies {
                        out.insert(Term::void(t2.clone()));
                    }
                }
            }
            if !matches!(b, Binder::Abst(_)) && !body.occurs(0) {
                for t2 in &bodies {
                    if let Some(t2) = t2.unlift(1, 0) {
                        out.insert(t2);
                    }
                }
            }
        }
        Term::Flat(fl, body) => {
            let args = pr0_enumerate(fl.arg());
            let bodies = pr0_enumerate(body);
            for a in &args {
                for t2 in &bodies {
                    out.insert(Term::Flat(fl.with_arg(a.clone()), Box::new(t2.clone())));
                }
            }
            match fl {
                Flat::Cast(_) => out.extend(bodies),
                Flat::Appl(_) => {
                    if let Term::Bind(b, inner) = &**body {
                        let inners = pr0_enumerate(inner);
                        let v_args: Vec<Term> = match b {
                            Binder::Abbr(v2) => pr0_enumerate(v2).into_iter().collect(),
                            _ => Vec::new(),
                        };
                        for a in &args {
                            for t2 in &inners {
                                match b {
                                    Binder::Abst(_) => {
                                        out.insert(Term::abbr(a.clone(), t2.clone()));
                                    }
                                    Binder::Abbr(_) => {
                                        for v4 in &v_args {
                                            out.insert(Term::abbr(
                                                v4.clone(),
                                                Term::appl(a.lift(1, 0), t2.clone()),
                                            ));
                                        }
                                    }
                                    Binder::Void => {
                                        out.insert(Term::void(Term::appl(
                                            a.lift(1, 0),
                                            t2.clone(),
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// All environments whose item arguments are one-step parallel reducts of
/// those of `e`.
pub fn env_step_enumerate(e: &Env) -> BTreeSet<Env> {
    let mut acc: Vec<Vec<EnvItem>> = vec![Vec::new()];
    for item in &e.items {
        let choices: Vec<EnvItem> = match item.arg() {
            Some(a) => pr0_enumerate(a)
                .into_iter()
                .map(|a2| item.with_arg(a2))
                .collect(),
            None => vec![item.clone()],
        };
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for prefix in &acc {
            for c in &choices {
                let mut p = prefix.clone();
                p.push(c.clone());
                next.push(p);
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|items| Env::with_items(items, e.head))
        .collect()
}

/// All one-step environment-dependent parallel reducts of `t` in `e`.
pub fn pr2_enumerate(e: &Env, t: &Term) -> BTreeSet<Term> {
    let free = pr0_enumerate(t);
    let abbrs = Abbrs::of(e);
    let mut out = free.clone();
    for (i, v) in abbrs.0.iter().enumerate() {
        if let Some(v) = v {
            for t2 in &free {
                out.extend(subst0_enumerate(i, v, t2));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_env, parse_env_named, parse_term, parse_term_in};

    fn t(s: &str) -> Term {
        parse_term(s).unwrap()
    }

    fn e0() -> Env {
        Env::new(0)
    }

    #[test]
    fn reduce_once_examples() {
        let s = reduce_once(&e0(), &t("<*1>*0")).unwrap().unwrap();
        assert_eq!((s.scheme, s.after), (Scheme::Tau, t("*0")));
        let s = reduce_once(&e0(), &t("(*0)[x:*1]x")).unwrap().unwrap();
        assert_eq!((s.scheme, s.after), (Scheme::Beta, t("[x=*0]x")));
        let e = parse_env("[a=*1]*0").unwrap();
        let s = reduce_once(&e, &Term::lref(0)).unwrap().unwrap();
        assert_eq!((s.scheme, s.after), (Scheme::DeltaEnv, t("*1")));
        assert_eq!(
            reduce_once(&e0(), &Term::lref(0)),
            Err(ReduceError::DanglingReference {
                index: 0,
                path: Path::root()
            })
        );
    }

    #[test]
    fn normalize_examples() {
        let (nf, tr) = normalize(&e0(), &t("(*0)[x:*1]x"), DEFAULT_FUEL).unwrap();
        assert_eq!(nf, t("*0"));
        let schemes: Vec<_> = tr.0.iter().map(|s| s.scheme).collect();
        assert_eq!(schemes, [Scheme::Beta, Scheme::DeltaLocal, Scheme::Zeta]);
        let (nf, tr) = normalize(&e0(), &t("(*0)[x=*1]x"), DEFAULT_FUEL).unwrap();
        assert_eq!(nf, t("(*0)*1"));
        let schemes: Vec<_> = tr.0.iter().map(|s| s.scheme).collect();
        assert_eq!(schemes, [Scheme::Upsilon, Scheme::DeltaLocal, Scheme::Zeta]);
        let (nf, tr) = normalize(&e0(), &t("(*0)*0"), DEFAULT_FUEL).unwrap();
        assert_eq!(nf, t("(*0)*0"));
        assert!(tr.is_empty());
    }

    #[test]
    fn trace_chains_and_prints() {
        let (_, tr) = normalize(&e0(), &t("(*0)[x:*1]x"), DEFAULT_FUEL).unwrap();
        for w in tr.0.windows(2) {
            assert_eq!(w[0].after, w[1].before);
        }
        assert_eq!(tr.lines(&e0())[0], "beta @ / : (*0)[x0:*1]x0 --> [x0=*0]x0");
        assert_eq!(tr.0[1].site, Path::root());
    }

    #[test]
    fn fuel_is_enforced() {
        assert_eq!(
            normalize(&e0(), &t("(*0)[x:*1]x"), 2),
            Err(ReduceError::FuelExhausted { fuel: 2 })
        );
        assert!(normalize(&e0(), &t("(*0)[x:*1]x"), 3).is_ok());
    }

    #[test]
    fn normality() {
        assert_eq!(is_normal(&e0(), &t("(*0)*0")), Ok(true));
        assert_eq!(is_normal(&e0(), &t("[x=*0]*1")), Ok(false));
        let (e, names) = parse_env_named("[x:[z:*0]*0][y:*0]*0").unwrap();
        let app = parse_term_in("(y)x", &names).unwrap();
        assert_eq!(is_normal(&e, &app), Ok(true));
    }

    #[test]
    fn conversion_examples() {
        assert_eq!(
            conv_dec(&e0(), &t("[x=*0]x"), &t("*0"), DEFAULT_FUEL),
            Ok(true)
        );
        assert_eq!(conv_dec(&e0(), &t("*0"), &t("*1"), DEFAULT_FUEL), Ok(false));
        assert_eq!(
            conv_dec(&e0(), &t("[y:*0](y)[x:*0]x"), &t("[x:*0]x"), DEFAULT_FUEL),
            Ok(true)
        );
    }

    #[test]
    fn pr0_examples() {
        assert_eq!(pr0_enumerate(&t("*0")), BTreeSet::from([t("*0")]));
        assert_eq!(
            pr0_enumerate(&t("<*1>*0")),
            BTreeSet::from([t("<*1>*0"), t("*0")])
        );
        assert_eq!(
            pr0_enumerate(&t("(*0)[x:*1]x")),
            BTreeSet::from([t("(*0)[x:*1]x"), t("[x=*0]x")])
        );
    }

    #[test]
    fn pr0_delta_and_zeta_compose() {
        // [x=*0](x)x can reach (*0)*0 only in two steps: delta keeps the binder
        let r = pr0_enumerate(&t("[x=*0](x)x"));
        assert!(r.contains(&t("[x=*0](*0)x")));
        assert!(r.contains(&t("[x=*0](*0)*0")));
        assert!(!r.contains(&t("(*0)*0")));
        assert!(pr0_enumerate(&t("[x=*0](*0)*0")).contains(&t("(*0)*0")));
    }

    #[test]
    fn env_step_examples() {
        assert_eq!(env_step_enumerate(&e0()), BTreeSet::from([e0()]));
        let e = parse_env("[a=<*1>*0]*0").unwrap();
        assert_eq!(
            env_step_enumerate(&e),
            BTreeSet::from([e.clone(), parse_env("[a=*0]*0").unwrap()])
        );
        let e = parse_env("[a:*0]*0").unwrap();
        assert_eq!(env_step_enumerate(&e), BTreeSet::from([e.clone()]));
    }

    #[test]
    fn pr2_adds_environment_expansion() {
        let e = parse_env("[a=*1]*0").unwrap();
        let r = pr2_enumerate(&e, &Term::appl(Term::lref(0), Term::lref(0)));
        assert!(r.contains(&t("(*1)*1")));
        assert!(r.contains(&Term::appl(Term::sort(1), Term::lref(0))));
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn reduce_once_is_a_pr2_step() {
        let e = parse_env("[a=*1][b:*0]*0").unwrap();
        let mut cur = parse_term_in("(b)[x=a](<x>x)[y:*0]y", &["a", "b"]).unwrap();
        while let Some(s) = reduce_once(&e, &cur).unwrap() {
            assert!(pr2_enumerate(&e, &s.before).contains(&s.after), "{s:?}");
            if s.scheme == Scheme::Upsilon {
                assert_eq!(s.before.free_vars(), s.after.free_vars());
            }
            cur = s.after;
        }
    }
}
