use std::fmt;

use thiserror::Error;

use super::term::{Binder, Flat, SortIndex, Term};

/// One environment entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EnvItem {
    Bind(Binder),
    Flat(Flat),
}

impl EnvItem {
    pub fn arg(&self) -> Option<&Term> {
        match self {
            EnvItem::Bind(b) => b.arg(),
            EnvItem::Flat(fl) => Some(fl.arg()),
        }
    }

    pub fn is_binder(&self) -> bool {
        matches!(self, EnvItem::Bind(_))
    }

    pub(crate) fn map_arg(&self, f: impl FnOnce(&Term) -> Term) -> EnvItem {
        match self {
            EnvItem::Bind(b) => EnvItem::Bind(b.map_arg(f)),
            EnvItem::Flat(fl) => EnvItem::Flat(fl.map_arg(f)),
        }
    }

    pub(crate) fn with_arg(&self, arg: Term) -> EnvItem {
        match self {
            EnvItem::Bind(b) => EnvItem::Bind(b.with_arg(arg)),
            EnvItem::Flat(fl) => EnvItem::Flat(fl.with_arg(arg)),
        }
    }
}

/// An environment: items in source order (outermost first) and a head sort.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Env {
    pub items: Vec<EnvItem>,
    pub head: SortIndex,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("dangling reference to index {index}")]
pub struct DanglingReference {
    pub index: usize,
}

impl Env {
    pub fn new(head: SortIndex) -> Env {
        Env {
            items: Vec::new(),
            head,
        }
    }

    pub fn with_items(items: Vec<EnvItem>, head: SortIndex) -> Env {
        Env { items, head }
    }

    /// The environment extended with an innermost binder.
    pub fn push(&self, b: Binder) -> Env {
        let mut e = self.clone();
        e.items.push(EnvItem::Bind(b));
        e
    }

    pub fn push_flat(&self, fl: Flat) -> Env {
        let mut e = self.clone();
        e.items.push(EnvItem::Flat(fl));
        e
    }

    pub fn binder_count(&self) -> usize {
        self.items.iter().filter(|it| it.is_binder()).count()
    }

    /// Finds the binder of index `i`, counting binder items from the
    /// innermost end. Returns the prefix preceding it and the binder, whose
    /// argument is expressed in the prefix.
    pub fn lookup(&self, i: usize) -> Result<(Env, Binder), DanglingReference> {
        let mut seen = 0;
        for (pos, item) in self.items.iter().enumerate().rev() {
            if let EnvItem::Bind(b) = item {
                if seen == i {
                    let prefix = Env::with_items(self.items[..pos].to_vec(), self.head);
                    return Ok((prefix, b.clone()));
                }
                seen += 1;
            }
        }
        Err(DanglingReference { index: i })
    }

    /// Binder of index `i` with its argument relocated to the scope of the
    /// whole environment.
    pub fn lookup_lifted(&self, i: usize) -> Result<Binder, DanglingReference> {
        let (_, b) = self.lookup(i)?;
        Ok(b.map_arg(|a| a.lift(i + 1, 0)))
    }

    /// Checks that every item argument resolves within the preceding binders.
    pub fn check_scope(&self) -> Result<(), DanglingReference> {
        let mut binders = 0;
        for item in &self.items {
            if let Some(arg) = item.arg() {
                if let Some(&j) = arg.free_vars().last() {
                    if j >= binders {
                        return Err(DanglingReference { index: j });
                    }
                }
            }
            if item.is_binder() {
                binders += 1;
            }
        }
        Ok(())
    }

    /// Checks that `t` resolves in this environment.
    pub fn check_term(&self, t: &Term) -> Result<(), DanglingReference> {
        match t.free_vars().last() {
            Some(&j) if j >= self.binder_count() => Err(DanglingReference { index: j }),
            _ => Ok(()),
        }
    }

    /// Inserts `b` so that exactly `level` binder items precede it,
    /// relocating the items that follow. `b`'s argument must be expressed
    /// in the scope of those `level` binders. Terms in the scope of the
    /// whole environment must be lifted by `lift(1, binder_count() - level)`.
    pub fn insert_binder(&self, level: usize, b: Binder) -> Env {
        let mut items = Vec::with_capacity(self.items.len() + 1);
        let mut binders = 0;
        let mut inserted = false;
        for item in &self.items {
            if !inserted && binders == level {
                items.push(EnvItem::Bind(b.clone()));
                inserted = true;
            }
            if inserted {
                items.push(item.map_arg(|a| a.lift(1, binders - level)));
            } else {
                items.push(item.clone());
            }
            if item.is_binder() {
                binders += 1;
            }
        }
        if !inserted {
            assert_eq!(binders, level, "insertion level out of range");
            items.push(EnvItem::Bind(b));
        }
        Env::with_items(items, self.head)
    }

    /// The environment read as an env-shaped term.
    pub fn to_term(&self) -> Term {
        self.close(Term::Sort(self.head))
    }

    /// Wraps `t` with the items of the environment.
    pub fn close(&self, t: Term) -> Term {
        self.items.iter().rev().fold(t, |body, item| match item {
            EnvItem::Bind(b) => Term::Bind(b.clone(), Box::new(body)),
            EnvItem::Flat(fl) => Term::Flat(fl.clone(), Box::new(body)),
        })
    }

    /// Inverse of [`Env::to_term`]; `None` when `t` is not env-shaped.
    pub fn from_term(t: &Term) -> Option<Env> {
        let mut items = Vec::new();
        let mut t = t;
        loop {
            match t {
                Term::Sort(h) => return Some(Env::with_items(items, *h)),
                Term::Ref(_) => return None,
                Term::Bind(b, body) => {
                    items.push(EnvItem::Bind(b.clone()));
                    t = body;
                }
                Term::Flat(fl, body) => {
                    items.push(EnvItem::Flat(fl.clone()));
                    t = body;
                }
            }
        }
    }
}

/// An environment paired with a term in its scope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FocalizedTerm {
    pub env: Env,
    pub term: Term,
}

impl FocalizedTerm {
    pub fn new(env: Env, term: Term) -> FocalizedTerm {
        FocalizedTerm { env, term }
    }

    pub fn check_scope(&self) -> Result<(), DanglingReference> {
        self.env.check_scope()?;
        self.env.check_term(&self.term)
    }
}

impl fmt::Display for Env {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::print_env(self))
    }
}

impl fmt::Display for FocalizedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} |- {}",
            self.env,
            super::print::print_in(&self.env, &self.term)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Env {
        // [a:*0][b=a]*0
        Env::new(0)
            .push(Binder::Abst(Box::new(Term::sort(0))))
            .push(Binder::Abbr(Box::new(Term::lref(0))))
    }

    #[test]
    fn lookup_examples() {
        let e = sample();
        let (prefix, b) = e.lookup(0).unwrap();
        assert_eq!(b, Binder::Abbr(Box::new(Term::lref(0))));
        assert_eq!(
            prefix,
            Env::new(0).push(Binder::Abst(Box::new(Term::sort(0))))
        );
        let (prefix, b) = e.lookup(1).unwrap();
        assert_eq!(b, Binder::Abst(Box::new(Term::sort(0))));
        assert_eq!(prefix, Env::new(0));
        assert_eq!(Env::new(0).lookup(0), Err(DanglingReference { index: 0 }));
    }

    #[test]
    fn lookup_skips_flat_items() {
        let e = Env::new(0)
            .push(Binder::Abst(Box::new(Term::sort(0))))
            .push_flat(Flat::Appl(Box::new(Term::lref(0))))
            .push(Binder::Void)
            .push_flat(Flat::Cast(Box::new(Term::sort(1))));
        let (prefix, b) = e.lookup(1).unwrap();
        assert_eq!(b.kind(), super::super::term::BinderKind::Abst);
        assert_eq!(prefix.items.len(), 0);
        let (prefix, b) = e.lookup(0).unwrap();
        assert_eq!(b, Binder::Void);
        assert_eq!(prefix.items.len(), 2);
        assert!(e.lookup(2).is_err());
    }

    #[test]
    fn insert_relocates_following_items() {
        let e = sample();
        let e2 = e.insert_binder(1, Binder::Void);
        assert_eq!(
            e2,
            Env::new(0)
                .push(Binder::Abst(Box::new(Term::sort(0))))
                .push(Binder::Void)
                .push(Binder::Abbr(Box::new(Term::lref(1))))
        );
        assert_eq!(e.insert_binder(2, Binder::Void), e.push(Binder::Void));
    }

    #[test]
    fn env_term_round_trip() {
        let e = sample().push_flat(Flat::Cast(Box::new(Term::sort(3))));
        assert!(e.to_term().is_env_shaped());
        assert_eq!(Env::from_term(&e.to_term()), Some(e));
    }
}
