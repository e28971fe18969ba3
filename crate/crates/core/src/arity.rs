//! Arities: the functional skeleton of terms.

use std::fmt;

use crate::syntax::{Binder, Env, Flat, Path, SortIndex, Step, Term};
use crate::typing::{check_scope, Judged, MonotonicityViolation, SortHierarchy, TypeError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arity {
    Node(u32, SortIndex),
    Impl(Box<Arity>, Box<Arity>),
}

impl Arity {
    pub fn node(k: u32, h: SortIndex) -> Arity {
        Arity::Node(k, h)
    }

    pub fn implies(dom: Arity, cod: Arity) -> Arity {
        Arity::Impl(Box::new(dom), Box::new(cod))
    }
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arity::Node(k, h) => write!(f, "({k},{h})"),
            Arity::Impl(a, b) => match **a {
                Arity::Impl(..) => write!(f, "({a}) -> {b}"),
                Arity::Node(..) => write!(f, "{a} -> {b}"),
            },
        }
    }
}

/// Three-valued answer of a level-equality query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeqAnswer {
    Yes,
    No,
    /// The search gave up after spending this much fuel.
    Unknown(u32),
}

/// Strict successor.
pub fn asucc(g: &SortHierarchy, l: &Arity) -> Result<Arity, MonotonicityViolation> {
    Ok(match l {
        Arity::Node(0, h) => Arity::Node(0, g.next(*h)?),
        Arity::Node(k, h) => Arity::Node(k - 1, *h),
        Arity::Impl(a, b) => Arity::Impl(a.clone(), Box::new(asucc(g, b)?)),
    })
}

/// `k`-fold strict successor.
pub fn aplus(g: &SortHierarchy, l: &Arity, k: u32) -> Result<Arity, MonotonicityViolation> {
    (0..k).try_fold(l.clone(), |l, _| asucc(g, &l))
}

/// Canonical predecessor: `asucc(apred(l)) = l`.
pub fn apred(l: &Arity) -> Arity {
    match l {
        Arity::Node(k, h) => Arity::Node(k + 1, *h),
        Arity::Impl(a, b) => Arity::Impl(a.clone(), Box::new(apred(b))),
    }
}

/// Level equality.
pub fn leq_dec(g: &SortHierarchy, l1: &Arity, l2: &Arity) -> LeqAnswer {
    match (l1, l2) {
        (Arity::Impl(a1, b1), Arity::Impl(a2, b2)) => {
            match (leq_dec(g, a1, a2), leq_dec(g, b1, b2)) {
                (LeqAnswer::No, _) | (_, LeqAnswer::No) => LeqAnswer::No,
                (LeqAnswer::Yes, LeqAnswer::Yes) => LeqAnswer::Yes,
                (LeqAnswer::Unknown(x), LeqAnswer::Unknown(y)) => LeqAnswer::Unknown(x + y),
                (LeqAnswer::Unknown(x), _) | (_, LeqAnswer::Unknown(x)) => LeqAnswer::Unknown(x),
            }
        }
        (Arity::Node(k1, h1), Arity::Node(k2, h2)) => leq_nodes(g, (*k1, *h1), (*k2, *h2)),
        _ => LeqAnswer::No,
    }
}

fn leq_nodes(g: &SortHierarchy, (k1, h1): (u32, u32), (k2, h2): (u32, u32)) -> LeqAnswer {
    match g {
        SortHierarchy::Affine { step } => {
            let c = u64::from(*step);
            let lhs = u64::from(h1) + u64::from(k2) * c;
            let rhs = u64::from(h2) + u64::from(k1) * c;
            if lhs == rhs {
                LeqAnswer::Yes
            } else {
                LeqAnswer::No
            }
        }
        SortHierarchy::Custom { fuel, .. } => {
            // past max(k1, k2) both sides are sort nodes (0, _)
            let m = k1.max(k2);
            let mut a = match aplus(g, &Arity::Node(k1, h1), m) {
                Ok(a) => a,
                Err(_) => return LeqAnswer::Unknown(0),
            };
            let mut b = match aplus(g, &Arity::Node(k2, h2), m) {
                Ok(b) => b,
                Err(_) => return LeqAnswer::Unknown(0),
            };
            for spent in 0..*fuel {
                if a == b {
                    return LeqAnswer::Yes;
                }
                match (asucc(g, &a), asucc(g, &b)) {
                    (Ok(a2), Ok(b2)) => {
                        a = a2;
                        b = b2;
                    }
                    _ => return LeqAnswer::Unknown(spent),
                }
            }
            if a == b {
                LeqAnswer::Yes
            } else {
                LeqAnswer::Unknown(*fuel)
            }
        }
    }
}

/// Canonical arity of `t` in `e`, correct up to level equality.
pub fn infer_arity(g: &SortHierarchy, e: &Env, t: &Term) -> Result<Arity, TypeError> {
    check_scope(e, t)?;
    arity(g, e, t, &Path::root())
}

fn arity(g: &SortHierarchy, e: &Env, t: &Term, path: &Path) -> Result<Arity, TypeError> {
    match t {
        Term::Sort(h) => Ok(Arity::Node(0, *h)),
        Term::Ref(i) => {
            let (prefix, b) = e.lookup(*i).map_err(|_| TypeError::DanglingReference {
                index: *i,
                path: path.clone(),
            })?;
            let wrap = |source: TypeError| TypeError::IllTypedSubterm {
                index: *i,
                path: path.clone(),
                source: Box::new(source),
            };
            match b {
                Binder::Abbr(v) => arity(g, &prefix, &v, &Path::root()).map_err(wrap),
                Binder::Abst(w) => Ok(apred(&arity(g, &prefix, &w, &Path::root()).map_err(wrap)?)),
                Binder::Void => Err(TypeError::ExcludedVariable {
                    index: *i,
                    path: path.clone(),
                }),
            }
        }
        Term::Bind(b, body) => {
            let dom = match b.arg() {
                Some(a) => Some(arity(g, e, a, &path.child(Step::Arg))?),
                None => None,
            };
            let cod = arity(g, &e.push(b.clone()), body, &path.child(Step::Body))?;
            Ok(match (b, dom) {
                (Binder::Abst(_), Some(dom)) => Arity::implies(apred(&dom), cod),
                _ => cod,
            })
        }
        Term::Flat(Flat::Appl(v), body) => {
            let lv = arity(g, e, v, &path.child(Step::Arg))?;
            let lt = arity(g, e, body, &path.child(Step::Body))?;
            match lt {
                Arity::Impl(l1, l2) => match leq_dec(g, &lv, &l1) {
                    LeqAnswer::Yes => Ok(*l2),
                    answer => Err(TypeError::DomainMismatch {
                        expected: Judged::Arity(*l1),
                        found: Judged::Arity(lv),
                        undecided: matches!(answer, LeqAnswer::Unknown(_)),
                        path: path.clone(),
                        level: e.binder_count(),
                    }),
                },
                found => Err(TypeError::NotAFunction {
                    found: Judged::Arity(found),
                    path: path.clone(),
                    level: e.binder_count(),
                }),
            }
        }
        Term::Flat(Flat::Cast(w), body) => {
            let lw = arity(g, e, w, &path.child(Step::Arg))?;
            let lt = arity(g, e, body, &path.child(Step::Body))?;
            let next = asucc(g, &lt).map_err(|m| TypeError::monotonicity(m, path))?;
            match leq_dec(g, &lw, &next) {
                LeqAnswer::Yes => Ok(lt),
                answer => Err(TypeError::CastMismatch {
                    expected: Judged::Arity(next),
                    found: Judged::Arity(lw),
                    undecided: matches!(answer, LeqAnswer::Unknown(_)),
                    path: path.clone(),
                    level: e.binder_count(),
                }),
            }
        }
    }
}
