use std::fmt::{self, Write};

use super::env::{Env, EnvItem};
use super::term::{Binder, Flat, Term};

/// Canonical name of the binder at level `level`.
pub fn level_name(level: usize) -> String {
    format!("x{level}")
}

/// Canonical names for the binders of `e`, outermost first.
pub fn env_names(e: &Env) -> Vec<String> {
    (0..e.binder_count()).map(level_name).collect()
}

/// Prints `t`; free indices get the names of the outermost levels, so a
/// closed term starts naming its binders at `x0`.
pub fn print_term(t: &Term) -> String {
    print_term_at(t.scope_width(), t)
}

/// Prints `t` as if `level` binders enclose it.
pub fn print_term_at(level: usize, t: &Term) -> String {
    let mut out = String::new();
    write_term(&mut out, level, t).expect("writing to a String");
    out
}

/// Prints `t` in the scope of `e`, using the names of `e`'s binders.
pub fn print_in(e: &Env, t: &Term) -> String {
    print_term_at(e.binder_count(), t)
}

pub fn print_env(e: &Env) -> String {
    let mut out = String::new();
    let mut level = 0;
    for item in &e.items {
        match item {
            EnvItem::Bind(b) => {
                write_binder(&mut out, level, b).expect("writing to a String");
                level += 1;
            }
            EnvItem::Flat(fl) => write_flat(&mut out, level, fl).expect("writing to a String"),
        }
    }
    let _ = write!(out, "*{}", e.head);
    out
}

fn write_binder(out: &mut String, level: usize, b: &Binder) -> fmt::Result {
    match b {
        Binder::Abst(w) => {
            write!(out, "[{}:", level_name(level))?;
            write_term(out, level, w)?;
            out.write_char(']')
        }
        Binder::Abbr(v) => {
            write!(out, "[{}=", level_name(level))?;
            write_term(out, level, v)?;
            out.write_char(']')
        }
        Binder::Void => write!(out, "[{}]", level_name(level)),
    }
}

fn write_flat(out: &mut String, level: usize, fl: &Flat) -> fmt::Result {
    let (open, close) = match fl {
        Flat::Appl(_) => ('(', ')'),
        Flat::Cast(_) => ('<', '>'),
    };
    out.write_char(open)?;
    write_term(out, level, fl.arg())?;
    out.write_char(close)
}

fn write_term(out: &mut String, mut level: usize, mut t: &Term) -> fmt::Result {
    loop {
        match t {
            Term::Sort(h) => return write!(out, "*{h}"),
            Term::Ref(i) => {
                return match level.checked_sub(i + 1) {
                    Some(l) => out.write_str(&level_name(l)),
                    // only reachable when printing with too small a level
                    None => write!(out, "#{i}"),
                };
            }
            Term::Bind(b, body) => {
                write_binder(out, level, b)?;
                level += 1;
                t = body;
            }
            Term::Flat(fl, body) => {
                write_flat(out, level, fl)?;
                t = body;
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_term(self))
    }
}
