//! Brute-force readings of the type and arity rules as relations.
//!
//! Nothing here calls the engine's inference or normalizer: conversion is
//! read as joinability of bounded reduct closures, level equality as a
//! bounded search over successors.

use std::collections::BTreeSet;

use crate::arity::Arity;
use crate::reduce::pr2_enumerate;
use crate::syntax::{Binder, Env, Flat, Term};
use crate::typing::SortHierarchy;

/// All terms reachable from `t` by environment-dependent parallel steps,
/// or `None` when there are more than `cap` of them.
pub fn reduct_closure(e: &Env, t: &Term, cap: usize) -> Option<BTreeSet<Term>> {
    let mut seen = BTreeSet::from([t.clone()]);
    let mut frontier = vec![t.clone()];
    while let Some(cur) = frontier.pop() {
        for next in pr2_enumerate(e, &cur) {
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return None;
                }
                frontier.push(next);
            }
        }
    }
    Some(seen)
}

/// Whether the two terms have a common reduct. `None` when a closure
/// exceeds the cap.
pub fn joinable(e: &Env, a: &Term, b: &Term, cap: usize) -> Option<bool> {
    if a == b {
        return Some(true);
    }
    let ra = reduct_closure(e, a, cap)?;
    let rb = reduct_closure(e, b, cap)?;
    Some(!ra.is_disjoint(&rb))
}

/// The native type rules read as a relation: the set of types derivable
/// for a term, closed under reduction of the conclusions that need it.
pub struct TypeRelation<'a> {
    pub g: &'a SortHierarchy,
    /// Bound on closures and on result sets.
    pub cap: usize,
}

/// Raised when a bound was hit; the instance is then inconclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capped;

impl TypeRelation<'_> {
    pub fn types(&self, e: &Env, t: &Term) -> Result<BTreeSet<Term>, Capped> {
        let out = match t {
            Term::Sort(h) => match self.g.next(*h) {
                Ok(n) => BTreeSet::from([Term::Sort(n)]),
                Err(_) => BTreeSet::new(),
            },
            Term::Ref(i) => match e.lookup(*i) {
                Err(_) => BTreeSet::new(),
                Ok((prefix, Binder::Abbr(v))) => self
                    .types(&prefix, &v)?
                    .into_iter()
                    .map(|w| w.lift(i + 1, 0))
                    .collect(),
                Ok((prefix, Binder::Abst(w))) => {
                    if self.types(&prefix, &w)?.is_empty() {
                        BTreeSet::new()
                    } else {
                        BTreeSet::from([w.lift(i + 1, 0)])
                    }
                }
                Ok((_, Binder::Void)) => BTreeSet::new(),
            },
            Term::Bind(b, body) => {
                if let Some(arg) = b.arg() {
                    if self.types(e, arg)?.is_empty() {
                        return Ok(BTreeSet::new());
                    }
                }
                self.types(&e.push(b.clone()), body)?
                    .into_iter()
                    .map(|u| Term::Bind(b.clone(), Box::new(u)))
                    .collect()
            }
            Term::Flat(Flat::Appl(v), body) => {
                let tv = self.types(e, v)?;
                let tt = self.types(e, body)?;
                let mut out = BTreeSet::new();
                if tv.is_empty() || tt.is_empty() {
                    return Ok(out);
                }
                let mut closure_v = BTreeSet::new();
                for w in &tv {
                    closure_v.extend(reduct_closure(e, w, self.cap).ok_or(Capped)?);
                }
                for u in &tt {
                    for r in reduct_closure(e, u, self.cap).ok_or(Capped)? {
                        if let Term::Bind(Binder::Abst(w2), _) = &r {
                            let rw = reduct_closure(e, w2, self.cap).ok_or(Capped)?;
                            if !rw.is_disjoint(&closure_v) {
                                out.insert(Term::Flat(Flat::Appl(v.clone()), Box::new(r.clone())));
                            }
                        }
                    }
                }
                out
            }
            Term::Flat(Flat::Cast(w), body) => {
                let tw = self.types(e, w)?;
                let tt = self.types(e, body)?;
                let rw = reduct_closure(e, w, self.cap).ok_or(Capped)?;
                let mut fits = false;
                for u in &tt {
                    let ru = reduct_closure(e, u, self.cap).ok_or(Capped)?;
                    if !ru.is_disjoint(&rw) {
                        fits = true;
                        break;
                    }
                }
                if fits {
                    tw.into_iter()
                        .map(|v| Term::cast(v, (**w).clone()))
                        .collect()
                } else {
                    BTreeSet::new()
                }
            }
        };
        if out.len() > self.cap {
            return Err(Capped);
        }
        Ok(out)
    }
}

/// The arity rules read as a relation, with the replacement rule closed
/// over nodes whose components do not exceed `bound`.
pub struct ArityRelation<'a> {
    pub g: &'a SortHierarchy,
    pub bound: u32,
    /// Number of successor steps tried when comparing levels.
    pub search: u32,
}

impl ArityRelation<'_> {
    fn succ(&self, l: &Arity) -> Option<Arity> {
        Some(match l {
            Arity::Node(0, h) => Arity::Node(0, self.g.next(*h).ok()?),
            Arity::Node(k, h) => Arity::Node(k - 1, *h),
            Arity::Impl(a, b) => Arity::Impl(a.clone(), Box::new(self.succ(b)?)),
        })
    }

    /// Level equality by search: some common number of successor steps
    /// makes the two nodes equal.
    pub fn same_level(&self, l1: &Arity, l2: &Arity) -> bool {
        match (l1, l2) {
            (Arity::Impl(a1, b1), Arity::Impl(a2, b2)) => {
                self.same_level(a1, a2) && self.same_level(b1, b2)
            }
            (Arity::Node(..), Arity::Node(..)) => {
                let (mut a, mut b) = (l1.clone(), l2.clone());
                for _ in 0..=self.search {
                    if a == b {
                        return true;
                    }
                    match (self.succ(&a), self.succ(&b)) {
                        (Some(x), Some(y)) => {
                            a = x;
                            b = y;
                        }
                        _ => return false,
                    }
                }
                false
            }
            _ => false,
        }
    }

    /// Arities of the same level, within the bound, plus `l` itself.
    pub fn close(&self, l: &Arity) -> BTreeSet<Arity> {
        match l {
            Arity::Node(..) => {
                let mut out = BTreeSet::from([l.clone()]);
                for k in 0..=self.bound {
                    for h in 0..=self.bound {
                        let n = Arity::Node(k, h);
                        if self.same_level(l, &n) {
                            out.insert(n);
                        }
                    }
                }
                out
            }
            Arity::Impl(a, b) => {
                let ca = self.close(a);
                let cb = self.close(b);
                let mut out = BTreeSet::new();
                for x in &ca {
                    for y in &cb {
                        out.insert(Arity::Impl(Box::new(x.clone()), Box::new(y.clone())));
                    }
                }
                out
            }
        }
    }

    fn close_all(&self, ls: impl IntoIterator<Item = Arity>) -> BTreeSet<Arity> {
        let mut out = BTreeSet::new();
        for l in ls {
            if !out.contains(&l) {
                out.extend(self.close(&l));
            }
        }
        out
    }

    /// Every `l` with `succ(l) = m`.
    fn preimage(&self, m: &Arity) -> Vec<Arity> {
        match m {
            Arity::Node(k, h) => {
                let mut out = vec![Arity::Node(k + 1, *h)];
                if *k == 0 {
                    for h0 in 0..*h {
                        if self.g.next(h0).ok() == Some(*h) {
                            out.push(Arity::Node(0, h0));
                        }
                    }
                }
                out
            }
            Arity::Impl(a, b) => self
                .preimage(b)
                .into_iter()
                .map(|p| Arity::Impl(a.clone(), Box::new(p)))
                .collect(),
        }
    }

    /// All derivable arities of `t` in `e` (up to the closure bound).
    pub fn arities(&self, e: &Env, t: &Term) -> BTreeSet<Arity> {
        match t {
            Term::Sort(h) => self.close(&Arity::Node(0, *h)),
            Term::Ref(i) => match e.lookup(*i) {
                Err(_) => BTreeSet::new(),
                Ok((prefix, Binder::Abbr(v))) => self.arities(&prefix, &v),
                Ok((prefix, Binder::Abst(w))) => {
                    let lw = self.arities(&prefix, &w);
                    self.close_all(lw.iter().flat_map(|m| self.preimage(m)))
                }
                Ok((_, Binder::Void)) => BTreeSet::new(),
            },
            Term::Bind(Binder::Abbr(v), body) => {
                if self.arities(e, v).is_empty() {
                    BTreeSet::new()
                } else {
                    self.arities(&e.push(Binder::Abbr(v.clone())), body)
                }
            }
            Term::Bind(Binder::Abst(w), body) => {
                let lw = self.arities(e, w);
                let doms: BTreeSet<Arity> = lw.iter().flat_map(|m| self.preimage(m)).collect();
                let cods = self.arities(&e.push(Binder::Abst(w.clone())), body);
                let mut out = BTreeSet::new();
                for d in &doms {
                    for c in &cods {
                        out.insert(Arity::Impl(Box::new(d.clone()), Box::new(c.clone())));
                    }
                }
                self.close_all(out)
            }
            Term::Bind(Binder::Void, body) => self.arities(&e.push(Binder::Void), body),
            Term::Flat(Flat::Appl(v), body) => {
                let lv = self.arities(e, v);
                let lt = self.arities(e, body);
                let mut out = BTreeSet::new();
                for l in &lt {
                    if let Arity::Impl(l1, l2) = l {
                        if lv.contains(l1) {
                            out.insert((**l2).clone());
                        }
                    }
                }
                self.close_all(out)
            }
            Term::Flat(Flat::Cast(w), body) => {
                let lw = self.arities(e, w);
                self.arities(e, body)
                    .into_iter()
                    .filter(|l| self.succ(l).is_some_and(|s| lw.contains(&s)))
                    .collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_env_named, parse_term, parse_term_in};

    #[test]
    fn relational_types() {
        let g = SortHierarchy::gz();
        let rel = TypeRelation { g: &g, cap: 500 };
        let e = Env::new(0);
        let t = parse_term("(*0)[x:*1]x").unwrap();
        let ts = rel.types(&e, &t).unwrap();
        assert!(ts.contains(&parse_term("(*0)[x:*1]*1").unwrap()));
        assert!(rel
            .types(&e, &parse_term("(*0)*0").unwrap())
            .unwrap()
            .is_empty());
        let (e, names) = parse_env_named("[x0:*0][x1:*0][x2:x1]*0").unwrap();
        let t = parse_term_in("(x2)[x3:x0]*0", &names).unwrap();
        assert!(rel.types(&e, &t).unwrap().is_empty());
    }

    #[test]
    fn relational_arities() {
        let g = SortHierarchy::gz();
        let rel = ArityRelation {
            g: &g,
            bound: 8,
            search: 32,
        };
        let e = Env::new(0);
        let ls = rel.arities(&e, &parse_term("*0").unwrap());
        assert!(ls.contains(&Arity::Node(3, 3)));
        assert!(!ls.contains(&Arity::Node(0, 1)));
        assert!(rel.arities(&e, &parse_term("(*0)*0").unwrap()).is_empty());
        let (e, names) = parse_env_named("[x0:*0][x1:*0][x2:x1]*0").unwrap();
        let t = parse_term_in("(x2)[x3:x0]*0", &names).unwrap();
        assert!(rel.arities(&e, &t).contains(&Arity::Node(0, 0)));
    }
}
