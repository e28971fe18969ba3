//! Strict substitution of a term for a variable.

use std::collections::BTreeSet;

use crate::syntax::{Binder, Env, EnvItem, FocalizedTerm, Term};

/// Replaces every occurrence of index `i` in `t` by `w`, where `w` is
/// expressed in the scope of `t`'s root and does not mention `i`.
/// Returns `None` when `i` does not occur in `t`.
pub fn subst_all(i: usize, w: &Term, t: &Term) -> Option<Term> {
    debug_assert!(!w.occurs(i), "replacement mentions the substituted index");
    if !t.occurs(i) {
        return None;
    }
    Some(replace(i, w, t, 0))
}

fn replace(i: usize, w: &Term, t: &Term, depth: usize) -> Term {
    match t {
        Term::Sort(_) => t.clone(),
        Term::Ref(j) if *j == i + depth => w.lift(depth, 0),
        Term::Ref(_) => t.clone(),
        Term::Bind(b, body) => Term::Bind(
            b.map_arg(|a| replace(i, w, a, depth)),
            Box::new(replace(i, w, body, depth + 1)),
        ),
        Term::Flat(fl, body) => Term::Flat(
            fl.map_arg(|a| replace(i, w, a, depth)),
            Box::new(replace(i, w, body, depth)),
        ),
    }
}

/// All results of replacing a non-empty subset of the occurrences of `i`.
pub fn subst0_enumerate(i: usize, w: &Term, t: &Term) -> BTreeSet<Term> {
    debug_assert!(!w.occurs(i), "replacement mentions the substituted index");
    variants(i, w, t, 0)
        .into_iter()
        .filter_map(|(t, changed)| changed.then_some(t))
        .collect()
}

/// Every way of replacing a subset of the occurrences, flagged by whether
/// the subset is non-empty.
fn variants(i: usize, w: &Term, t: &Term, depth: usize) -> Vec<(Term, bool)> {
    match t {
        Term::Sort(_) => vec![(t.clone(), false)],
        Term::Ref(j) if *j == i + depth => vec![(t.clone(), false), (w.lift(depth, 0), true)],
        Term::Ref(_) => vec![(t.clone(), false)],
        Term::Bind(b, body) => {
            let args = match b.arg() {
                Some(a) => variants(i, w, a, depth)
                    .into_iter()
                    .map(|(a, c)| (Some(a), c))
                    .collect(),
                None => vec![(None, false)],
            };
            let bodies = variants(i, w, body, depth + 1);
            let mut out = Vec::with_capacity(args.len() * bodies.len());
            for (a, ca) in &args {
                for (t, cb) in &bodies {
                    let b = match a {
                        Some(a) => b.with_arg(a.clone()),
                        None => Binder::Void,
                    };
                    out.push((Term::Bind(b, Box::new(t.clone())), *ca || *cb));
                }
            }
            out
        }
        Term::Flat(fl, body) => {
            let args = variants(i, w, fl.arg(), depth);
            let bodies = variants(i, w, body, depth);
            let mut out = Vec::with_capacity(args.len() * bodies.len());
            for (a, ca) in &args {
                for (t, cb) in &bodies {
                    out.push((
                        Term::Flat(fl.with_arg(a.clone()), Box::new(t.clone())),
                        *ca || *cb,
                    ));
                }
            }
            out
        }
    }
}

/// Replaces the binder of index `i` by `w` in every item that follows it.
///
/// `w` is expressed in the scope of the whole environment and may only
/// mention binders outside the substituted one (free indices `> i`).
/// Returns `None` when no item mentions the binder.
pub fn csubst_all(i: usize, w: &Term, e: &Env) -> Option<Env> {
    let n = e.binder_count();
    assert!(i < n, "substituted index out of range");
    debug_assert!(w.free_vars().iter().all(|&j| j > i));
    let level = n - 1 - i;
    let mut binders = 0;
    let mut changed = false;
    let mut items = Vec::with_capacity(e.items.len());
    for item in &e.items {
        let mut new_item = item.clone();
        if binders > level {
            let d = binders - level - 1;
            if let Some(arg) = item.arg() {
                let local = w
                    .unlift(i - d, 0)
                    .expect("replacement mentions an inner binder");
                if let Some(a) = subst_all(d, &local, arg) {
                    new_item = item.with_arg(a);
                    changed = true;
                }
            }
        }
        if matches!(item, EnvItem::Bind(_)) {
            binders += 1;
        }
        items.push(new_item);
    }
    changed.then(|| Env::with_items(items, e.head))
}

/// Substitutes in both the environment and the term; `None` when neither
/// mentions the binder.
pub fn fsubst_all(i: usize, w: &Term, f: &FocalizedTerm) -> Option<FocalizedTerm> {
    let env = csubst_all(i, w, &f.env);
    let term = subst_all(i, w, &f.term);
    if env.is_none() && term.is_none() {
        return None;
    }
    Some(FocalizedTerm::new(
        env.unwrap_or_else(|| f.env.clone()),
        term.unwrap_or_else(|| f.term.clone()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_env, parse_term};

    #[test]
    fn subst_all_examples() {
        let xx = Term::appl(Term::lref(0), Term::lref(0));
        assert_eq!(
            subst_all(0, &Term::sort(0), &xx),
            Some(Term::appl(Term::sort(0), Term::sort(0)))
        );
        assert_eq!(subst_all(0, &Term::sort(0), &Term::sort(1)), None);
        assert_eq!(
            subst_all(0, &Term::lref(1), &Term::abst(Term::lref(0), Term::lref(1))),
            Some(Term::abst(Term::lref(1), Term::lref(2)))
        );
    }

    #[test]
    fn subst0_examples() {
        let xx = Term::appl(Term::lref(0), Term::lref(0));
        let s = Term::sort(0);
        let got = subst0_enumerate(0, &s, &xx);
        let want = BTreeSet::from([
            Term::appl(s.clone(), Term::lref(0)),
            Term::appl(Term::lref(0), s.clone()),
            Term::appl(s.clone(), s.clone()),
        ]);
        assert_eq!(got, want);
        assert!(subst0_enumerate(0, &s, &Term::sort(1)).is_empty());
        let one = Term::abst(Term::sort(0), Term::lref(1));
        assert_eq!(
            subst0_enumerate(0, &s, &one),
            BTreeSet::from([subst_all(0, &s, &one).unwrap()])
        );
    }

    #[test]
    fn csubst_examples() {
        let e = parse_env("[a=*0][b=a]*0").unwrap();
        assert_eq!(
            csubst_all(1, &Term::sort(0), &e),
            Some(parse_env("[a=*0][b=*0]*0").unwrap())
        );
        assert_eq!(csubst_all(0, &Term::sort(0), &e), None);
    }

    #[test]
    fn csubst_relocates_per_item() {
        // [a:*0][b:*0][c:b][d:(b)a]*0, substitute b := a
        let e = parse_env("[a:*0][b:*0][c:b][d:(b)a]*0").unwrap();
        let got = csubst_all(2, &Term::lref(3), &e).unwrap();
        assert_eq!(got, parse_env("[a:*0][b:*0][c:a][d:(a)a]*0").unwrap());
    }

    #[test]
    fn fsubst_examples() {
        let f = FocalizedTerm::new(parse_env("[a=*0]*0").unwrap(), Term::lref(0));
        assert_eq!(
            fsubst_all(0, &Term::sort(0), &f),
            Some(FocalizedTerm::new(f.env.clone(), Term::sort(0)))
        );
        let g = FocalizedTerm::new(f.env.clone(), parse_term("*1").unwrap());
        assert_eq!(fsubst_all(0, &Term::sort(0), &g), None);
    }
}
