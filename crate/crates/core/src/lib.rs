//! A kernel for the λδ calculus with the exclusion binder.
//!
//! Terms are in item notation with de Bruijn indices. The `oracle` module
//! holds the exhaustive small-instance checkers.

pub mod arity;
pub mod legalize;
pub mod oracle;
pub mod reduce;
pub mod subst;
pub mod syntax;
pub mod typing;

pub use arity::{aplus, apred, asucc, infer_arity, leq_dec, Arity, LeqAnswer};
pub use legalize::{csubt_dec, legalize_env};
pub use reduce::{
    conv_dec, env_step_enumerate, is_normal, normal_form, normalize, pr0_enumerate, pr2_enumerate,
    reduce_once, ReduceError, ReductionStep, Scheme, Trace, DEFAULT_FUEL,
};
pub use subst::{csubst_all, fsubst_all, subst0_enumerate, subst_all};
pub use syntax::{
    parse_env, parse_env_named, parse_term, parse_term_in, print_env, print_in, print_term, Binder,
    BinderKind, Env, EnvItem, Flat, FlatKind, FocalizedTerm, ParseError, Path, SortIndex, Step,
    Term, VarSet,
};
pub use typing::{
    check_type, infer_type, static_type, static_type_iter, Judged, SortHierarchy, TypeError,
};
