//! Terms and environments with their surface grammar.

mod env;
mod parse;
mod print;
mod term;

pub use env::{DanglingReference, Env, EnvItem, FocalizedTerm};
pub use parse::{parse_env, parse_env_named, parse_term, parse_term_in, ParseError};
pub use print::{env_names, level_name, print_env, print_in, print_term, print_term_at};
pub use term::{Binder, BinderKind, Flat, FlatKind, Path, SortIndex, Step, Term, VarSet};
