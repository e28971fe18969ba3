use std::collections::BTreeSet;
use std::fmt;

/// Index `h` of the sort `*h`.
pub type SortIndex = u32;

/// A set of free de Bruijn indices, relative to the root of a term.
pub type VarSet = BTreeSet<usize>;

/// A λδ term with the χ extension, in nameless form.
///
/// `Ref` indices count the enclosing [`Term::Bind`] nodes only: flat items
/// (applicators and type annotations) never bind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Sort(SortIndex),
    Ref(usize),
    Bind(Binder, Box<Term>),
    Flat(Flat, Box<Term>),
}

/// A binding item: abstraction `[x:W]`, abbreviation `[x=V]` or exclusion `[x]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Binder {
    Abst(Box<Term>),
    Abbr(Box<Term>),
    Void,
}

/// A non-binding item: applicator `(V)` or type annotation `<W>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flat {
    Appl(Box<Term>),
    Cast(Box<Term>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinderKind {
    Abst,
    Abbr,
    Void,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlatKind {
    Appl,
    Cast,
}

impl Binder {
    pub fn kind(&self) -> BinderKind {
        match self {
            Binder::Abst(_) => BinderKind::Abst,
            Binder::Abbr(_) => BinderKind::Abbr,
            Binder::Void => BinderKind::Void,
        }
    }

    pub fn arg(&self) -> Option<&Term> {
        match self {
            Binder::Abst(w) | Binder::Abbr(w) => Some(w),
            Binder::Void => None,
        }
    }

    /// Rebuilds the binder with its argument (if any) transformed.
    pub fn map_arg(&self, f: impl FnOnce(&Term) -> Term) -> Binder {
        match self {
            Binder::Abst(w) => Binder::Abst(Box::new(f(w))),
            Binder::Abbr(v) => Binder::Abbr(Box::new(f(v))),
            Binder::Void => Binder::Void,
        }
    }

    pub(crate) fn try_map_arg<E>(
        &self,
        f: impl FnOnce(&Term) -> Result<Term, E>,
    ) -> Result<Binder, E> {
        Ok(match self {
            Binder::Abst(w) => Binder::Abst(Box::new(f(w)?)),
            Binder::Abbr(v) => Binder::Abbr(Box::new(f(v)?)),
            Binder::Void => Binder::Void,
        })
    }

    pub(crate) fn with_arg(&self, arg: Term) -> Binder {
        match self {
            Binder::Abst(_) => Binder::Abst(Box::new(arg)),
            Binder::Abbr(_) => Binder::Abbr(Box::new(arg)),
            Binder::Void => Binder::Void,
        }
    }
}

impl Flat {
    pub fn kind(&self) -> FlatKind {
        match self {
            Flat::Appl(_) => FlatKind::Appl,
            Flat::Cast(_) => FlatKind::Cast,
        }
    }

    pub fn arg(&self) -> &Term {
        match self {
            Flat::Appl(v) | Flat::Cast(v) => v,
        }
    }

    pub fn map_arg(&self, f: impl FnOnce(&Term) -> Term) -> Flat {
        self.with_arg(f(self.arg()))
    }

    pub(crate) fn with_arg(&self, arg: Term) -> Flat {
        match self {
            Flat::Appl(_) => Flat::Appl(Box::new(arg)),
            Flat::Cast(_) => Flat::Cast(Box::new(arg)),
        }
    }
}

/// One child selector in a [`Path`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Arg,
    Body,
}

/// Position of a subterm, as the sequence of child selectors from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(pub Vec<Step>);

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, step: Step) -> Path {
        let mut steps = self.0.clone();
        steps.push(step);
        Path(steps)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("/");
        }
        for (n, step) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("/")?;
            }
            f.write_str(match step {
                Step::Arg => "arg",
                Step::Body => "body",
            })?;
        }
        Ok(())
    }
}

impl Term {
    pub fn sort(h: SortIndex) -> Term {
        Term::Sort(h)
    }

    pub fn lref(i: usize) -> Term {
        Term::Ref(i)
    }

    pub fn abst(w: Term, body: Term) -> Term {
        Term::Bind(Binder::Abst(Box::new(w)), Box::new(body))
    }

    pub fn abbr(v: Term, body: Term) -> Term {
        Term::Bind(Binder::Abbr(Box::new(v)), Box::new(body))
    }

    pub fn void(body: Term) -> Term {
        Term::Bind(Binder::Void, Box::new(body))
    }

    pub fn appl(v: Term, body: Term) -> Term {
        Term::Flat(Flat::Appl(Box::new(v)), Box::new(body))
    }

    pub fn cast(w: Term, body: Term) -> Term {
        Term::Flat(Flat::Cast(Box::new(w)), Box::new(body))
    }

    /// Free indices of the term, relative to its root.
    pub fn free_vars(&self) -> VarSet {
        let mut out = VarSet::new();
        self.collect_free(0, &mut out);
        out
    }

    fn collect_free(&self, depth: usize, out: &mut VarSet) {
        match self {
            Term::Sort(_) => {}
            Term::Ref(j) => {
                if *j >= depth {
                    out.insert(j - depth);
                }
            }
            Term::Bind(b, body) => {
                if let Some(arg) = b.arg() {
                    arg.collect_free(depth, out);
                }
                body.collect_free(depth + 1, out);
            }
            Term::Flat(fl, body) => {
                fl.arg().collect_free(depth, out);
                body.collect_free(depth, out);
            }
        }
    }

    /// Whether the free index `i` occurs in the term.
    pub fn occurs(&self, i: usize) -> bool {
        match self {
            Term::Sort(_) => false,
            Term::Ref(j) => *j == i,
            Term::Bind(b, body) => b.arg().is_some_and(|a| a.occurs(i)) || body.occurs(i + 1),
            Term::Flat(fl, body) => fl.arg().occurs(i) || body.occurs(i),
        }
    }

    /// Smallest number of enclosing binders the term needs to be well scoped.
    pub fn scope_width(&self) -> usize {
        self.free_vars().last().map_or(0, |j| j + 1)
    }

    /// Relocation: every free index `>= cutoff` is increased by `h`.
    pub fn lift(&self, h: usize, cutoff: usize) -> Term {
        if h == 0 {
            return self.clone();
        }
        self.map_refs(cutoff, &mut |j, c| if j >= c { j + h } else { j })
    }

    /// Inverse relocation: every free index `>= cutoff + n` is decreased by
    /// `n`. Fails when an index in `cutoff..cutoff + n` occurs free.
    pub fn unlift(&self, n: usize, cutoff: usize) -> Option<Term> {
        if n == 0 {
            return Some(self.clone());
        }
        self.try_map_refs(cutoff, &mut |j, c| {
            if j < c {
                Some(j)
            } else if j >= c + n {
                Some(j - n)
            } else {
                None
            }
        })
    }

    /// Rebuilds the term, rewriting every `Ref` through `f(index, depth)`
    /// where `depth` is `cutoff` plus the binders crossed so far.
    pub(crate) fn map_refs(&self, depth: usize, f: &mut impl FnMut(usize, usize) -> usize) -> Term {
        match self {
            Term::Sort(h) => Term::Sort(*h),
            Term::Ref(j) => Term::Ref(f(*j, depth)),
            Term::Bind(b, body) => Term::Bind(
                b.map_arg(|a| a.map_refs(depth, f)),
                Box::new(body.map_refs(depth + 1, f)),
            ),
            Term::Flat(fl, body) => Term::Flat(
                fl.map_arg(|a| a.map_refs(depth, f)),
                Box::new(body.map_refs(depth, f)),
            ),
        }
    }

    fn try_map_refs(
        &self,
        depth: usize,
        f: &mut impl FnMut(usize, usize) -> Option<usize>,
    ) -> Option<Term> {
        Some(match self {
            Term::Sort(h) => Term::Sort(*h),
            Term::Ref(j) => Term::Ref(f(*j, depth)?),
            Term::Bind(b, body) => {
                let b = b.try_map_arg(|a| a.try_map_refs(depth, f).ok_or(()));
                Term::Bind(b.ok()?, Box::new(body.try_map_refs(depth + 1, f)?))
            }
            Term::Flat(fl, body) => {
                let arg = fl.arg().try_map_refs(depth, f)?;
                Term::Flat(fl.with_arg(arg), Box::new(body.try_map_refs(depth, f)?))
            }
        })
    }

    /// Multiple relocation: `lift_many([(h1,i1), .., (hn,in)], t)` is
    /// `lift(h1, i1, .. lift(hn, in, t))`.
    pub fn lift_many(&self, pairs: &[(usize, usize)]) -> Term {
        pairs
            .iter()
            .rev()
            .fold(self.clone(), |t, &(h, i)| t.lift(h, i))
    }

    /// Whether the term has the shape of an environment: a spine of items
    /// ending in a sort.
    pub fn is_env_shaped(&self) -> bool {
        let mut t = self;
        loop {
            match t {
                Term::Sort(_) => return true,
                Term::Ref(_) => return false,
                Term::Bind(_, body) | Term::Flat(_, body) => t = body,
            }
        }
    }

    /// Height of the term tree; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Sort(_) | Term::Ref(_) => 0,
            Term::Bind(b, body) => 1 + b.arg().map_or(0, Term::depth).max(body.depth()),
            Term::Flat(fl, body) => 1 + fl.arg().depth().max(body.depth()),
        }
    }

    /// Number of `Bind` nodes in the term.
    pub fn binder_count(&self) -> usize {
        match self {
            Term::Sort(_) | Term::Ref(_) => 0,
            Term::Bind(b, body) => 1 + b.arg().map_or(0, Term::binder_count) + body.binder_count(),
            Term::Flat(fl, body) => fl.arg().binder_count() + body.binder_count(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Sort(_) | Term::Ref(_) => 1,
            Term::Bind(b, body) => 1 + b.arg().map_or(0, Term::size) + body.size(),
            Term::Flat(fl, body) => 1 + fl.arg().size() + body.size(),
        }
    }

    pub fn subterm(&self, path: &Path) -> Option<&Term> {
        let mut t = self;
        for step in &path.0 {
            t = match (t, step) {
                (Term::Bind(b, _), Step::Arg) => b.arg()?,
                (Term::Flat(fl, _), Step::Arg) => fl.arg(),
                (Term::Bind(_, body) | Term::Flat(_, body), Step::Body) => body,
                _ => return None,
            };
        }
        Some(t)
    }

    /// Number of binders crossed when descending along `path`.
    pub fn binders_along(&self, path: &Path) -> usize {
        let mut t = self;
        let mut n = 0;
        for step in &path.0 {
            t = match (t, step) {
                (Term::Bind(b, _), Step::Arg) => match b.arg() {
                    Some(a) => a,
                    None => break,
                },
                (Term::Flat(fl, _), Step::Arg) => fl.arg(),
                (Term::Bind(_, body), Step::Body) => {
                    n += 1;
                    body
                }
                (Term::Flat(_, body), Step::Body) => body,
                _ => break,
            };
        }
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lift_examples() {
        assert_eq!(Term::lref(0).lift(2, 0), Term::lref(2));
        let t = Term::abst(Term::lref(0), Term::lref(0));
        // the argument sits at cutoff 1 as well, so index 0 stays put
        assert_eq!(t.lift(1, 1), Term::abst(Term::lref(0), Term::lref(0)));
        assert_eq!(t.lift(1, 0), Term::abst(Term::lref(1), Term::lref(0)));
        let u = Term::appl(Term::lref(3), Term::abbr(Term::lref(1), Term::lref(2)));
        assert_eq!(u.lift(0, 5), u);
    }

    #[test]
    fn lift_many_examples() {
        let t = Term::abst(Term::lref(4), Term::sort(0));
        assert_eq!(t.lift_many(&[]), t);
        assert_eq!(Term::lref(0).lift_many(&[(1, 0)]), Term::lref(1));
        assert_eq!(Term::lref(0).lift_many(&[(1, 0), (1, 0)]), Term::lref(2));
        // the last pair is applied first
        assert_eq!(Term::lref(0).lift_many(&[(1, 1), (1, 0)]), Term::lref(2));
        assert_eq!(Term::lref(0).lift_many(&[(1, 0), (1, 1)]), Term::lref(1));
    }

    #[test]
    fn free_vars_examples() {
        assert!(Term::abst(Term::sort(0), Term::lref(0))
            .free_vars()
            .is_empty());
        assert_eq!(Term::lref(2).free_vars(), VarSet::from([2]));
        let t = Term::abbr(Term::lref(0), Term::lref(0));
        assert_eq!(t.free_vars(), VarSet::from([0]));
        assert!(t.occurs(0));
        assert!(!t.occurs(1));
    }

    #[test]
    fn flat_items_do_not_bind() {
        let t = Term::appl(Term::lref(0), Term::cast(Term::sort(1), Term::lref(1)));
        assert_eq!(t.free_vars(), VarSet::from([0, 1]));
    }

    #[test]
    fn env_shape_examples() {
        assert!(Term::sort(4).is_env_shaped());
        assert!(Term::abst(Term::sort(0), Term::sort(1)).is_env_shaped());
        assert!(!Term::abst(Term::sort(0), Term::lref(0)).is_env_shaped());
        assert!(Term::appl(Term::lref(7), Term::sort(0)).is_env_shaped());
    }

    #[test]
    fn unlift_rejects_captured_indices() {
        let t = Term::appl(Term::lref(0), Term::lref(2));
        assert_eq!(
            t.unlift(1, 1),
            Some(Term::appl(Term::lref(0), Term::lref(1)))
        );
        assert_eq!(t.unlift(1, 0), None);
    }

    #[test]
    fn paths() {
        let t = Term::abst(Term::sort(0), Term::appl(Term::lref(0), Term::sort(1)));
        let p = Path::root().child(Step::Body).child(Step::Arg);
        assert_eq!(t.subterm(&p), Some(&Term::lref(0)));
        assert_eq!(t.binders_along(&p), 1);
        assert_eq!(p.to_string(), "body/arg");
        assert_eq!(Path::root().to_string(), "/");
    }
}
