use lambdadelta::oracle::gen::{for_each_focalized, GenConfig};
use lambdadelta::syntax::{level_name, print_term_at};
use lambdadelta::*;
use proptest::prelude::*;

fn arb_term(scope: usize, depth: u32) -> BoxedStrategy<Term> {
    let sorts = (0u32..3).prop_map(Term::Sort);
    let atom = if scope == 0 {
        sorts.boxed()
    } else {
        prop_oneof![sorts, (0..scope).prop_map(Term::Ref)].boxed()
    };
    if depth == 0 {
        return atom;
    }
    let sub = arb_term(scope, depth - 1);
    let inner = arb_term(scope + 1, depth - 1);
    prop_oneof![
        2 => atom,
        1 => (sub.clone(), sub.clone()).prop_map(|(a, b)| Term::appl(a, b)),
        1 => (sub.clone(), sub.clone()).prop_map(|(a, b)| Term::cast(a, b)),
        1 => (sub.clone(), inner.clone()).prop_map(|(a, b)| Term::abst(a, b)),
        1 => (sub, inner.clone()).prop_map(|(a, b)| Term::abbr(a, b)),
        1 => inner.prop_map(Term::void),
    ]
    .boxed()
}

fn arb_arity(depth: u32) -> BoxedStrategy<Arity> {
    let node = (0u32..6, 0u32..6).prop_map(|(k, h)| Arity::node(k, h));
    if depth == 0 {
        return node.boxed();
    }
    let sub = arb_arity(depth - 1);
    prop_oneof![
        node,
        (sub.clone(), sub).prop_map(|(a, b)| Arity::implies(a, b))
    ]
    .boxed()
}

/// A scoped environment of `n` binders built from items of small depth.
fn arb_env(n: usize) -> BoxedStrategy<Env> {
    let mut s = Just(Env::new(0)).boxed();
    for level in 0..n {
        s = (s, arb_term(level, 2), 0u8..3)
            .prop_map(|(e, a, k)| match k {
                0 => e.push(Binder::Abst(Box::new(a))),
                1 => e.push(Binder::Abbr(Box::new(a))),
                _ => e.push(Binder::Void),
            })
            .boxed();
    }
    s
}

/// Spine tail read off the printed form: item notation prints the tail
/// last.
fn ends_in_sort(t: &Term) -> bool {
    let s = print_term(t);
    let digits = s.trim_end_matches(|c: char| c.is_ascii_digit());
    digits.len() < s.len() && digits.ends_with('*')
}

proptest! {
    #[test]
    fn print_parse_round_trip(t in arb_term(0, 5)) {
        prop_assert_eq!(parse_term(&print_term(&t)).unwrap(), t);
    }

    #[test]
    fn print_parse_round_trip_in_scope(n in 0usize..4, t in arb_term(3, 4)) {
        let names: Vec<String> = (0..n + 3).map(level_name).collect();
        prop_assert_eq!(parse_term_in(&print_term_at(n + 3, &t), &names).unwrap(), t);
    }

    #[test]
    fn lifts_compose(t in arb_term(3, 4), a in 0usize..3, b in 0usize..3, c in 0usize..4) {
        prop_assert_eq!(t.lift(a, c).lift(b, c), t.lift(a + b, c));
        prop_assert_eq!(t.lift(a, c).unlift(a, c), Some(t.clone()));
        prop_assert_eq!(t.lift_many(&[(a, c), (b, c)]), t.lift(a + b, c));
    }

    #[test]
    fn free_variables_of_a_lift(t in arb_term(4, 4), h in 0usize..3, c in 0usize..5) {
        let expected: VarSet = t
            .free_vars()
            .into_iter()
            .map(|i| if i < c { i } else { i + h })
            .collect();
        prop_assert_eq!(t.lift(h, c).free_vars(), expected);
    }

    #[test]
    fn substitution_removes_the_variable(t in arb_term(2, 4), w in arb_term(2, 2)) {
        let w = w.lift(1, 0);
        match subst_all(0, &w, &t) {
            None => prop_assert!(!t.occurs(0)),
            Some(s) => {
                prop_assert!(!s.occurs(0));
                if t.size() <= 12 {
                    prop_assert!(subst0_enumerate(0, &w, &t).contains(&s));
                }
            }
        }
    }

    #[test]
    fn lookup_counts_from_the_inside(e in arb_env(4), i in 0usize..4) {
        let (prefix, b) = e.lookup(i).unwrap();
        prop_assert_eq!(prefix.binder_count(), 3 - i);
        prop_assert_eq!(prefix.items.as_slice(), &e.items[..3 - i]);
        if let Some(a) = b.arg() {
            prop_assert!(prefix.check_term(a).is_ok());
        }
        prop_assert!(e.lookup(4).is_err());
    }

    #[test]
    fn successor_of_predecessor(a in arb_arity(3)) {
        let g = SortHierarchy::gz();
        prop_assert_eq!(asucc(&g, &apred(&a)).unwrap(), a.clone());
        prop_assert_eq!(leq_dec(&g, &a, &a), LeqAnswer::Yes);
        prop_assert_eq!(leq_dec(&g, &apred(&a), &a) == LeqAnswer::Yes, false);
    }

    #[test]
    fn normal_forms_are_normal(t in arb_term(0, 4)) {
        let e = Env::new(0);
        if let Ok(nf) = normal_form(&e, &t, 1_000) {
            prop_assert_eq!(is_normal(&e, &nf), Ok(true));
            prop_assert_eq!(conv_dec(&e, &t, &nf, 1_000), Ok(true));
        }
    }

    #[test]
    fn env_shape_of_random_terms(t in arb_term(0, 7)) {
        prop_assert_eq!(t.is_env_shaped(), ends_in_sort(&t));
    }
}

#[test]
fn env_shape_on_enumerated_terms() {
    let configs = [
        GenConfig {
            max_depth: 4,
            sort_pool: vec![0],
            max_binders: 0,
            include_void: false,
            env_arg_depth: 0,
            max_env_items: 0,
            env_flat_items: false,
        },
        GenConfig {
            max_depth: 3,
            sort_pool: vec![0, 1],
            max_binders: 1,
            include_void: true,
            env_arg_depth: 0,
            max_env_items: 0,
            env_flat_items: false,
        },
    ];
    for cfg in configs {
        let mut n = 0u64;
        for_each_focalized(&cfg, |f| {
            n += 1;
            assert_eq!(f.term.is_env_shaped(), ends_in_sort(&f.term), "{}", f.term);
        });
        assert!(n > 100_000, "{n}");
    }
}
