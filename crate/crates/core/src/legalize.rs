//! Environment legalization and the domain-based preorder.

use crate::syntax::{Binder, Env, EnvItem};
use crate::typing::{check_type, infer_type, SortHierarchy, TypeError};

/// Voids the untypable binders of `e` and drops its flat items. Each entry
/// is typed in the original prefix.
pub fn legalize_env(g: &SortHierarchy, e: &Env, fuel: u64) -> Result<Env, TypeError> {
    let mut items = Vec::with_capacity(e.items.len());
    for (pos, item) in e.items.iter().enumerate() {
        let b = match item {
            EnvItem::Flat(_) => continue,
            EnvItem::Bind(Binder::Void) => Binder::Void,
            EnvItem::Bind(b) => {
                let prefix = Env::with_items(e.items[..pos].to_vec(), e.head);
                let arg = b.arg().expect("non-void binder has an argument");
                match infer_type(g, &prefix, arg, fuel) {
                    Ok(_) => b.clone(),
                    Err(err) if err.is_abort() => return Err(err),
                    Err(_) => Binder::Void,
                }
            }
        };
        items.push(EnvItem::Bind(b));
    }
    Ok(Env::with_items(items, e.head))
}

/// Decides `e1 ⊑ e2`: both bind the same variables and each domain in `e2`
/// is contained in the corresponding one in `e1`.
pub fn csubt_dec(g: &SortHierarchy, e1: &Env, e2: &Env, fuel: u64) -> Result<bool, TypeError> {
    if e1.head != e2.head || e1.items.len() != e2.items.len() {
        return Ok(false);
    }
    for (pos, (a, b)) in e1.items.iter().zip(&e2.items).enumerate() {
        let ok = match (a, b) {
            (EnvItem::Bind(Binder::Void), EnvItem::Bind(_)) => true,
            _ if a == b => true,
            (EnvItem::Bind(Binder::Abst(w)), EnvItem::Bind(Binder::Abbr(v))) => {
                let c1 = Env::with_items(e1.items[..pos].to_vec(), e1.head);
                let c2 = Env::with_items(e2.items[..pos].to_vec(), e2.head);
                has_type(g, &c2, v, w, fuel)? && has_type(g, &c1, v, w, fuel)?
            }
            _ => false,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_type(
    g: &SortHierarchy,
    e: &Env,
    v: &crate::syntax::Term,
    w: &crate::syntax::Term,
    fuel: u64,
) -> Result<bool, TypeError> {
    match check_type(g, e, v, w, fuel) {
        Ok(b) => Ok(b),
        Err(err) if err.is_abort() => Err(err),
        Err(_) => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::DEFAULT_FUEL;
    use crate::syntax::parse_env;

    fn env(s: &str) -> Env {
        parse_env(s).unwrap()
    }

    #[test]
    fn legalize_examples() {
        let g = SortHierarchy::gz();
        assert_eq!(legalize_env(&g, &env("*0"), DEFAULT_FUEL), Ok(env("*0")));
        assert_eq!(
            legalize_env(&g, &env("[a=(*0)*0]*0"), DEFAULT_FUEL),
            Ok(env("[a]*0"))
        );
        assert_eq!(
            legalize_env(&g, &env("(*1)[x:*0]*0"), DEFAULT_FUEL),
            Ok(env("[x:*0]*0"))
        );
    }

    #[test]
    fn legalize_types_in_original_prefix() {
        let g = SortHierarchy::gz();
        // b refers to a, which is voided; b's own typing premise fails too
        let e = env("[a:(*0)*0][b:a][c:*1]*0");
        assert_eq!(
            legalize_env(&g, &e, DEFAULT_FUEL),
            Ok(env("[a][b][c:*1]*0"))
        );
    }

    #[test]
    fn csubt_examples() {
        let g = SortHierarchy::gz();
        assert_eq!(
            csubt_dec(&g, &env("*0"), &env("*0"), DEFAULT_FUEL),
            Ok(true)
        );
        assert_eq!(
            csubt_dec(&g, &env("[x:*1]*0"), &env("[x=*0]*0"), DEFAULT_FUEL),
            Ok(true)
        );
        assert_eq!(
            csubt_dec(&g, &env("[x:*0]*0"), &env("[x=*0]*0"), DEFAULT_FUEL),
            Ok(false)
        );
        assert_eq!(
            csubt_dec(&g, &env("[x]*0"), &env("[x=(*0)*0]*0"), DEFAULT_FUEL),
            Ok(true)
        );
        assert_eq!(
            csubt_dec(&g, &env("[x=*0]*0"), &env("[x:*1]*0"), DEFAULT_FUEL),
            Ok(false)
        );
        assert_eq!(
            csubt_dec(&g, &env("*0"), &env("*1"), DEFAULT_FUEL),
            Ok(false)
        );
    }
}
