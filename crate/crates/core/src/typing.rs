//! Sort hierarchies, native type inference and static typing.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arity::Arity;
use crate::reduce::{conv_dec, normal_form, ReduceError};
use crate::syntax::{print_term_at, Binder, Env, Flat, Path, SortIndex, Step, Term};

/// The parameter `g` giving the type `*g(h)` of each sort `*h`.
#[derive(Clone)]
pub enum SortHierarchy {
    /// `g(h) = h + step`, `step >= 1`.
    Affine { step: u32 },
    /// An arbitrary function, checked for `h < g(h)` at each use. `fuel`
    /// bounds level-equality searches.
    Custom {
        next: Arc<dyn Fn(SortIndex) -> SortIndex + Send + Sync>,
        fuel: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("sort hierarchy is not increasing at {sort}: g({sort}) = {next}")]
pub struct MonotonicityViolation {
    pub sort: SortIndex,
    pub next: SortIndex,
}

impl SortHierarchy {
    pub fn gz() -> SortHierarchy {
        SortHierarchy::Affine { step: 1 }
    }

    pub fn g2() -> SortHierarchy {
        SortHierarchy::Affine { step: 2 }
    }

    /// `None` when `c` is 0.
    pub fn affine(c: u32) -> Option<SortHierarchy> {
        (c >= 1).then_some(SortHierarchy::Affine { step: c })
    }

    pub fn custom(
        next: impl Fn(SortIndex) -> SortIndex + Send + Sync + 'static,
        fuel: u32,
    ) -> SortHierarchy {
        SortHierarchy::Custom {
            next: Arc::new(next),
            fuel,
        }
    }

    pub fn next(&self, h: SortIndex) -> Result<SortIndex, MonotonicityViolation> {
        match self {
            SortHierarchy::Affine { step } => h
                .checked_add(*step)
                .filter(|_| *step >= 1)
                .ok_or(MonotonicityViolation { sort: h, next: h }),
            SortHierarchy::Custom { next, .. } => {
                let n = next(h);
                if h < n {
                    Ok(n)
                } else {
                    Err(MonotonicityViolation { sort: h, next: n })
                }
            }
        }
    }
}

impl fmt::Debug for SortHierarchy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortHierarchy::Affine { step } => write!(f, "Affine {{ step: {step} }}"),
            SortHierarchy::Custom { fuel, .. } => write!(f, "Custom {{ fuel: {fuel} }}"),
        }
    }
}

impl fmt::Display for SortHierarchy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortHierarchy::Affine { step: 1 } => f.write_str("gz"),
            SortHierarchy::Affine { step: 2 } => f.write_str("g2"),
            SortHierarchy::Affine { step } => write!(f, "affine:{step}"),
            SortHierarchy::Custom { .. } => f.write_str("custom"),
        }
    }
}

/// What a failed judgment found or expected: a type or an arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Judged {
    Type(Term),
    Arity(Arity),
}

impl Judged {
    fn render(&self, level: usize) -> String {
        match self {
            Judged::Type(t) => print_term_at(level, t),
            Judged::Arity(a) => a.to_string(),
        }
    }
}

/// A failed type or arity judgment. `path` locates the offending subterm;
/// `level` is the number of binders in scope there, used for printing.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("DanglingReference: index {index} at {path}")]
    DanglingReference { index: usize, path: Path },
    #[error("ExcludedVariable: index {index} at {path}")]
    ExcludedVariable { index: usize, path: Path },
    #[error("NotAFunction at {path}: found {}", found.render(*level))]
    NotAFunction {
        found: Judged,
        path: Path,
        level: usize,
    },
    #[error(
        "DomainMismatch at {path}: expected {}, found {}{}",
        expected.render(*level),
        found.render(*level),
        if *undecided { " (undecided)" } else { "" }
    )]
    DomainMismatch {
        expected: Judged,
        found: Judged,
        undecided: bool,
        path: Path,
        level: usize,
    },
    #[error(
        "CastMismatch at {path}: expected {}, found {}{}",
        expected.render(*level),
        found.render(*level),
        if *undecided { " (undecided)" } else { "" }
    )]
    CastMismatch {
        expected: Judged,
        found: Judged,
        undecided: bool,
        path: Path,
        level: usize,
    },
    #[error("IllTypedSubterm: environment entry of index {index} referenced at {path}: {source}")]
    IllTypedSubterm {
        index: usize,
        path: Path,
        source: Box<TypeError>,
    },
    #[error("FuelExhausted: {fuel} steps at {path}")]
    FuelExhausted { fuel: u64, path: Path },
    #[error("MonotonicityViolation at {path}: g({sort}) = {next}")]
    MonotonicityViolation {
        sort: SortIndex,
        next: SortIndex,
        path: Path,
    },
}

impl TypeError {
    pub fn path(&self) -> &Path {
        match self {
            TypeError::DanglingReference { path, .. }
            | TypeError::ExcludedVariable { path, .. }
            | TypeError::NotAFunction { path, .. }
            | TypeError::DomainMismatch { path, .. }
            | TypeError::CastMismatch { path, .. }
            | TypeError::IllTypedSubterm { path, .. }
            | TypeError::FuelExhausted { path, .. }
            | TypeError::MonotonicityViolation { path, .. } => path,
        }
    }

    /// Variant name, as printed in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            TypeError::DanglingReference { .. } => "DanglingReference",
            TypeError::ExcludedVariable { .. } => "ExcludedVariable",
            TypeError::NotAFunction { .. } => "NotAFunction",
            TypeError::DomainMismatch { .. } => "DomainMismatch",
            TypeError::CastMismatch { .. } => "CastMismatch",
            TypeError::IllTypedSubterm { .. } => "IllTypedSubterm",
            TypeError::FuelExhausted { .. } => "FuelExhausted",
            TypeError::MonotonicityViolation { .. } => "MonotonicityViolation",
        }
    }

    /// Failures caused by resource limits or a bad parameter rather than by
    /// the judged term.
    pub fn is_abort(&self) -> bool {
        match self {
            TypeError::FuelExhausted { .. } | TypeError::MonotonicityViolation { .. } => true,
            TypeError::IllTypedSubterm { source, .. } => source.is_abort(),
            _ => false,
        }
    }

    pub(crate) fn monotonicity(m: MonotonicityViolation, path: &Path) -> TypeError {
        TypeError::MonotonicityViolation {
            sort: m.sort,
            next: m.next,
            path: path.clone(),
        }
    }

    pub(crate) fn from_reduce(err: ReduceError, path: &Path) -> TypeError {
        match err {
            ReduceError::DanglingReference { index, .. } => TypeError::DanglingReference {
                index,
                path: path.clone(),
            },
            ReduceError::FuelExhausted { fuel } => TypeError::FuelExhausted {
                fuel,
                path: path.clone(),
            },
        }
    }
}

pub(crate) fn check_scope(e: &Env, t: &Term) -> Result<(), TypeError> {
    e.check_scope()
        .and_then(|_| e.check_term(t))
        .map_err(|d| TypeError::DanglingReference {
            index: d.index,
            path: Path::root(),
        })
}

/// Infers a type of `t` in `e`; types are unique up to conversion.
pub fn infer_type(g: &SortHierarchy, e: &Env, t: &Term, fuel: u64) -> Result<Term, TypeError> {
    check_scope(e, t)?;
    Infer { g, fuel }.infer(e, t, &Path::root())
}

struct Infer<'a> {
    g: &'a SortHierarchy,
    fuel: u64,
}

impl Infer<'_> {
    fn conv(&self, e: &Env, a: &Term, b: &Term, path: &Path) -> Result<bool, TypeError> {
        conv_dec(e, a, b, self.fuel).map_err(|err| TypeError::from_reduce(err, path))
    }

    fn infer(&self, e: &Env, t: &Term, path: &Path) -> Result<Term, TypeError> {
        match t {
            Term::Sort(h) => self
                .g
                .next(*h)
                .map(Term::Sort)
                .map_err(|m| TypeError::monotonicity(m, path)),
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
                    Binder::Abbr(v) => {
                        let w = self.infer(&prefix, &v, &Path::root()).map_err(wrap)?;
                        Ok(w.lift(i + 1, 0))
                    }
                    Binder::Abst(w) => {
                        self.infer(&prefix, &w, &Path::root()).map_err(wrap)?;
                        Ok(w.lift(i + 1, 0))
                    }
                    Binder::Void => Err(TypeError::ExcludedVariable {
                        index: *i,
                        path: path.clone(),
                    }),
                }
            }
            Term::Bind(b, body) => {
                if let Some(arg) = b.arg() {
                    self.infer(e, arg, &path.child(Step::Arg))?;
                }
                let u = self.infer(&e.push(b.clone()), body, &path.child(Step::Body))?;
                Ok(Term::Bind(b.clone(), Box::new(u)))
            }
            Term::Flat(Flat::Appl(v), body) => {
                let w = self.infer(e, v, &path.child(Step::Arg))?;
                let u = self.infer(e, body, &path.child(Step::Body))?;
                let n = normal_form(e, &u, self.fuel)
                    .map_err(|err| TypeError::from_reduce(err, path))?;
                match &n {
                    Term::Bind(Binder::Abst(w2), _) => {
                        if self.conv(e, &w, w2, path)? {
                            Ok(Term::Flat(Flat::Appl(v.clone()), Box::new(n)))
                        } else {
                            Err(TypeError::DomainMismatch {
                                expected: Judged::Type((**w2).clone()),
                                found: Judged::Type(w),
                                undecided: false,
                                path: path.clone(),
                                level: e.binder_count(),
                            })
                        }
                    }
                    _ => Err(TypeError::NotAFunction {
                        found: Judged::Type(n),
                        path: path.clone(),
                        level: e.binder_count(),
                    }),
                }
            }
            Term::Flat(Flat::Cast(w), body) => {
                let v = self.infer(e, w, &path.child(Step::Arg))?;
                let u = self.infer(e, body, &path.child(Step::Body))?;
                if self.conv(e, &u, w, path)? {
                    Ok(Term::cast(v, (**w).clone()))
                } else {
                    Err(TypeError::CastMismatch {
                        expected: Judged::Type((**w).clone()),
                        found: Judged::Type(u),
                        undecided: false,
                        path: path.clone(),
                        level: e.binder_count(),
                    })
                }
            }
        }
    }
}

/// Whether `t` has type `w` in `e`, i.e. whether `<w>t` is typable.
/// Errors other than the final mismatch are returned as such.
pub fn check_type(
    g: &SortHierarchy,
    e: &Env,
    t: &Term,
    w: &Term,
    fuel: u64,
) -> Result<bool, TypeError> {
    match infer_type(g, e, &Term::cast(w.clone(), t.clone()), fuel) {
        Ok(_) => Ok(true),
        Err(TypeError::CastMismatch { path, .. }) if path.is_root() => Ok(false),
        Err(err) => Err(err),
    }
}

/// The reduction-free static type of `t` in `e`.
pub fn static_type(g: &SortHierarchy, e: &Env, t: &Term) -> Result<Term, TypeError> {
    check_scope(e, t)?;
    sty(g, e, t, &Path::root())
}

fn sty(g: &SortHierarchy, e: &Env, t: &Term, path: &Path) -> Result<Term, TypeError> {
    match t {
        Term::Sort(h) => g
            .next(*h)
            .map(Term::Sort)
            .map_err(|m| TypeError::monotonicity(m, path)),
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
                Binder::Abbr(v) => Ok(sty(g, &prefix, &v, &Path::root())
                    .map_err(wrap)?
                    .lift(i + 1, 0)),
                Binder::Abst(w) => {
                    sty(g, &prefix, &w, &Path::root()).map_err(wrap)?;
                    Ok(w.lift(i + 1, 0))
                }
                Binder::Void => Err(TypeError::ExcludedVariable {
                    index: *i,
                    path: path.clone(),
                }),
            }
        }
        Term::Bind(b, body) => {
            let u = sty(g, &e.push(b.clone()), body, &path.child(Step::Body))?;
            Ok(Term::Bind(b.clone(), Box::new(u)))
        }
        Term::Flat(Flat::Appl(v), body) => {
            let u = sty(g, e, body, &path.child(Step::Body))?;
            Ok(Term::appl((**v).clone(), u))
        }
        Term::Flat(Flat::Cast(w), body) => {
            let w2 = sty(g, e, w, &path.child(Step::Arg))?;
            let u = sty(g, e, body, &path.child(Step::Body))?;
            Ok(Term::cast(w2, u))
        }
    }
}

/// Iterates [`static_type`] until the result is env-shaped. Returns the
/// result and the number of iterations (0 when `t` is already env-shaped).
pub fn static_type_iter(
    g: &SortHierarchy,
    e: &Env,
    t: &Term,
    max_iter: u64,
) -> Result<(Term, u64), TypeError> {
    let mut cur = t.clone();
    let mut k = 0;
    while !cur.is_env_shaped() {
        if k == max_iter {
            return Err(TypeError::FuelExhausted {
                fuel: max_iter,
                path: Path::root(),
            });
        }
        cur = static_type(g, e, &cur)?;
        k += 1;
    }
    Ok((cur, k))
}
