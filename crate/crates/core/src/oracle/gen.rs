use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{Binder, Env, EnvItem, Flat, FocalizedTerm, SortIndex, Term};

/// Bounds of an enumeration.
///
/// `max_binders` bounds the `Bind` nodes of the whole focalized term:
/// environment binders, binders inside item arguments and binders of the
/// term itself. The environment head is the first sort of the pool.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub max_depth: usize,
    pub sort_pool: Vec<SortIndex>,
    pub max_binders: usize,
    pub include_void: bool,
    /// Depth bound of environment item arguments.
    pub env_arg_depth: usize,
    pub max_env_items: usize,
    /// Whether environments may contain applicator and annotation items.
    pub env_flat_items: bool,
}

impl GenConfig {
    /// Depth 2, sorts {0,1}, at most one binder, one environment item.
    pub fn standard() -> GenConfig {
        GenConfig {
            max_depth: 2,
            sort_pool: vec![0, 1],
            max_binders: 1,
            include_void: true,
            env_arg_depth: 1,
            max_env_items: 1,
            env_flat_items: false,
        }
    }

    /// The space the depth-3 samples are drawn from.
    pub fn depth3() -> GenConfig {
        GenConfig {
            max_depth: 3,
            max_binders: 2,
            ..GenConfig::standard()
        }
    }

    /// Closed terms of depth 3 over `*0` with up to three binders; most
    /// typable terms need that many binders.
    pub fn closed_depth3() -> GenConfig {
        GenConfig {
            max_depth: 3,
            sort_pool: vec![0],
            max_binders: 3,
            include_void: true,
            env_arg_depth: 0,
            max_env_items: 0,
            env_flat_items: false,
        }
    }

    /// Environments with flat items and deeper arguments, small terms.
    pub fn legalization() -> GenConfig {
        GenConfig {
            max_depth: 1,
            sort_pool: vec![0],
            max_binders: 1,
            include_void: true,
            env_arg_depth: 2,
            max_env_items: 2,
            env_flat_items: true,
        }
    }

    /// Sampled legalization space with item arguments of depth 3.
    pub fn legalization_deep() -> GenConfig {
        GenConfig {
            max_depth: 0,
            sort_pool: vec![0, 1],
            max_binders: 2,
            env_arg_depth: 3,
            ..GenConfig::legalization()
        }
    }

    pub fn head(&self) -> SortIndex {
        self.sort_pool.first().copied().unwrap_or(0)
    }
}

type Level = Arc<Vec<(Term, usize)>>;

/// Memoized term enumeration.
pub struct TermSpace {
    sorts: Vec<SortIndex>,
    void: bool,
    memo: HashMap<(usize, usize, usize), Level>,
}

impl TermSpace {
    pub fn new(sorts: &[SortIndex], void: bool) -> TermSpace {
        TermSpace {
            sorts: sorts.to_vec(),
            void,
            memo: HashMap::new(),
        }
    }

    /// All terms of depth `<= depth` whose references resolve among `scope`
    /// binders and which contain at most `budget` binders, each paired with
    /// the number of binders it contains.
    pub fn terms(&mut self, depth: usize, scope: usize, budget: usize) -> Level {
        if let Some(level) = self.memo.get(&(depth, scope, budget)) {
            return level.clone();
        }
        let mut out = Vec::new();
        self.for_each(depth, scope, budget, &mut |t, used| out.push((t, used)));
        let level = Arc::new(out);
        self.memo.insert((depth, scope, budget), level.clone());
        level
    }

    /// Streams the terms of [`TermSpace::terms`] without storing the top
    /// level.
    pub fn for_each(
        &mut self,
        depth: usize,
        scope: usize,
        budget: usize,
        f: &mut dyn FnMut(Term, usize),
    ) {
        for &h in &self.sorts {
            f(Term::Sort(h), 0);
        }
        for i in 0..scope {
            f(Term::Ref(i), 0);
        }
        if depth == 0 {
            return;
        }
        let args = self.terms(depth - 1, scope, budget);
        for appl in [true, false] {
            for (a, ua) in args.iter() {
                let bodies = self.terms(depth - 1, scope, budget - ua);
                for (b, ub) in bodies.iter() {
                    let t = if appl {
                        Term::appl(a.clone(), b.clone())
                    } else {
                        Term::cast(a.clone(), b.clone())
                    };
                    f(t, ua + ub);
                }
            }
        }
        if budget == 0 {
            return;
        }
        let args = self.terms(depth - 1, scope, budget - 1);
        for abst in [true, false] {
            for (a, ua) in args.iter() {
                let bodies = self.terms(depth - 1, scope + 1, budget - 1 - ua);
                for (b, ub) in bodies.iter() {
                    let binder = if abst {
                        Binder::Abst(Box::new(a.clone()))
                    } else {
                        Binder::Abbr(Box::new(a.clone()))
                    };
                    f(Term::Bind(binder, Box::new(b.clone())), 1 + ua + ub);
                }
            }
        }
        if self.void {
            let bodies = self.terms(depth - 1, scope + 1, budget - 1);
            for (b, ub) in bodies.iter() {
                f(Term::void(b.clone()), 1 + ub);
            }
        }
    }
}

/// All environments within the bounds, each with its binder usage, shorter
/// environments first.
pub fn enumerate_envs_used(cfg: &GenConfig, space: &mut TermSpace) -> Vec<(Env, usize)> {
    let head = cfg.head();
    let mut layer = vec![(Env::new(head), 0usize)];
    let mut out = layer.clone();
    for _ in 0..cfg.max_env_items {
        let mut next = Vec::new();
        for (e, used) in &layer {
            let scope = e.binder_count();
            let left = cfg.max_binders - used;
            if left >= 1 {
                let args = space.terms(cfg.env_arg_depth, scope, left - 1);
                for abst in [true, false] {
                    for (a, ua) in args.iter() {
                        let b = if abst {
                            Binder::Abst(Box::new(a.clone()))
                        } else {
                            Binder::Abbr(Box::new(a.clone()))
                        };
                        next.push((e.push(b), used + 1 + ua));
                    }
                }
                if cfg.include_void {
                    next.push((e.push(Binder::Void), used + 1));
                }
            }
            if cfg.env_flat_items {
                let args = space.terms(cfg.env_arg_depth, scope, left);
                for appl in [true, false] {
                    for (a, ua) in args.iter() {
                        let fl = if appl {
                            Flat::Appl(Box::new(a.clone()))
                        } else {
                            Flat::Cast(Box::new(a.clone()))
                        };
                        next.push((e.push_flat(fl), used + ua));
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn enumerate_envs(cfg: &GenConfig) -> Vec<Env> {
    let mut space = TermSpace::new(&cfg.sort_pool, cfg.include_void);
    enumerate_envs_used(cfg, &mut space)
        .into_iter()
        .map(|(e, _)| e)
        .collect()
}

/// Streams every focalized term within the bounds, in a fixed order.
pub fn for_each_focalized(cfg: &GenConfig, mut f: impl FnMut(FocalizedTerm)) {
    let mut space = TermSpace::new(&cfg.sort_pool, cfg.include_void);
    for (e, used) in enumerate_envs_used(cfg, &mut space) {
        let scope = e.binder_count();
        space.for_each(cfg.max_depth, scope, cfg.max_binders - used, &mut |t, _| {
            f(FocalizedTerm::new(e.clone(), t))
        });
    }
}

pub fn enumerate_terms(cfg: &GenConfig) -> Vec<FocalizedTerm> {
    let mut out = Vec::new();
    for_each_focalized(cfg, |ft| out.push(ft));
    out
}

/// Draws `n` distinct focalized terms whose term has depth exactly
/// `cfg.max_depth`, deterministically from `seed`.
pub fn sample_focalized(cfg: &GenConfig, n: usize, seed: u64) -> Vec<FocalizedTerm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(n);
    let mut attempts = 0;
    while out.len() < n && attempts < n * 200 {
        attempts += 1;
        let (e, used) = random_env(cfg, &mut rng);
        let t = random_term(
            cfg,
            &mut rng,
            cfg.max_depth,
            e.binder_count(),
            cfg.max_binders - used,
        );
        if t.depth() != cfg.max_depth {
            continue;
        }
        let ft = FocalizedTerm::new(e, t);
        if seen.insert(ft.clone()) {
            out.push(ft);
        }
    }
    out
}

/// Draws `n` distinct environments whose items all have arguments of depth
/// at most `cfg.env_arg_depth`, with at least one of exactly that depth.
pub fn sample_envs(cfg: &GenConfig, n: usize, seed: u64) -> Vec<Env> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(n);
    let mut attempts = 0;
    while out.len() < n && attempts < n * 200 {
        attempts += 1;
        let (e, _) = random_env(cfg, &mut rng);
        let deepest = e
            .items
            .iter()
            .filter_map(EnvItem::arg)
            .map(Term::depth)
            .max();
        if deepest != Some(cfg.env_arg_depth) {
            continue;
        }
        if seen.insert(e.clone()) {
            out.push(e);
        }
    }
    out
}

fn random_env(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> (Env, usize) {
    let mut e = Env::new(cfg.head());
    let mut used = 0;
    let len = rng.gen_range(0..=cfg.max_env_items);
    for _ in 0..len {
        let scope = e.binder_count();
        let left = cfg.max_binders - used;
        let mut kinds = Vec::new();
        if left >= 1 {
            kinds.extend([0, 1]);
            if cfg.include_void {
                kinds.push(2);
            }
        }
        if cfg.env_flat_items {
            kinds.extend([3, 4]);
        }
        if kinds.is_empty() {
            break;
        }
        let kind = kinds[rng.gen_range(0..kinds.len())];
        let budget = if kind <= 2 { left - 1 } else { left };
        let d = rng.gen_range(0..=cfg.env_arg_depth);
        let a = random_term(cfg, rng, d, scope, budget);
        used += a.binder_count() + usize::from(kind <= 2);
        e = match kind {
            0 => e.push(Binder::Abst(Box::new(a))),
            1 => e.push(Binder::Abbr(Box::new(a))),
            2 => e.push(Binder::Void),
            3 => e.push_flat(Flat::Appl(Box::new(a))),
            _ => e.push_flat(Flat::Cast(Box::new(a))),
        };
    }
    (e, used)
}

fn random_term(
    cfg: &GenConfig,
    rng: &mut ChaCha8Rng,
    depth: usize,
    scope: usize,
    budget: usize,
) -> Term {
    let atom = |rng: &mut ChaCha8Rng| {
        let n = cfg.sort_pool.len() + scope;
        let k = rng.gen_range(0..n);
        if k < cfg.sort_pool.len() {
            Term::Sort(cfg.sort_pool[k])
        } else {
            Term::Ref(k - cfg.sort_pool.len())
        }
    };
    if depth == 0 || rng.gen_bool(0.2) {
        return atom(rng);
    }
    let mut kinds = vec![0, 1];
    if budget >= 1 {
        kinds.extend([2, 3]);
        if cfg.include_void {
            kinds.push(4);
        }
    }
    match kinds[rng.gen_range(0..kinds.len())] {
        k @ (0 | 1) => {
            let a = random_term(cfg, rng, depth - 1, scope, budget);
            let b = random_term(cfg, rng, depth - 1, scope, budget - a.binder_count());
            if k == 0 {
                Term::appl(a, b)
            } else {
                Term::cast(a, b)
            }
        }
        k @ (2 | 3) => {
            let a = random_term(cfg, rng, depth - 1, scope, budget - 1);
            let b = random_term(
                cfg,
                rng,
                depth - 1,
                scope + 1,
                budget - 1 - a.binder_count(),
            );
            if k == 2 {
                Term::abst(a, b)
            } else {
                Term::abbr(a, b)
            }
        }
        _ => Term::void(random_term(cfg, rng, depth - 1, scope + 1, budget - 1)),
    }
}
