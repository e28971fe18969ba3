//! The acceptance criteria, one PASS/FAIL line each. Exits non-zero when
//! any criterion fails.

use std::time::{Duration, Instant};

use lambdadelta::oracle::corpus::{eta_suite, leqz_suite, mtt_suite};
use lambdadelta::oracle::suites::*;
use lambdadelta::*;

const ONE_SECOND: Duration = Duration::from_secs(1);
const LEQZ_LIMIT: Duration = Duration::from_secs(10);
const DIAMOND_LIMIT: Duration = Duration::from_secs(300);
const MTT_LIMIT: Duration = Duration::from_secs(5);
const MIN_SLICE: usize = 10_000;
const MIN_ETA: usize = 20;

struct Outcome {
    ok: bool,
    detail: String,
    failures: Vec<String>,
}

impl Outcome {
    fn from_reports(reports: Vec<Report>) -> Outcome {
        let ok = reports.iter().all(Report::passed);
        let detail = reports
            .iter()
            .map(Report::summary)
            .collect::<Vec<_>>()
            .join("; ");
        let failures = reports.into_iter().flat_map(|r| r.failures).collect();
        Outcome {
            ok,
            detail,
            failures,
        }
    }

    fn require(mut self, ok: bool, what: &str) -> Outcome {
        if !ok {
            self.ok = false;
            self.failures.push(format!("requirement not met: {what}"));
        }
        self
    }
}

fn focus(env: &str, term: &str) -> (Env, Term) {
    let (e, names) = parse_env_named(env).unwrap();
    let t = parse_term_in(term, &names).unwrap();
    (e, t)
}

fn untypable_with_arity() -> Outcome {
    let g = SortHierarchy::gz();
    let (e, t) = focus("[x0:*0][x1:*0][x2:x1]*0", "(x2)[x3:x0]*0");
    let arity = infer_arity(&g, &e, &t);
    let ty = infer_type(&g, &e, &t, DEFAULT_FUEL);
    let ok = arity == Ok(Arity::Node(0, 0)) && ty.is_err();
    Outcome {
        ok,
        detail: format!(
            "arity {:?}, type {}",
            arity.map(|a| a.to_string()),
            match &ty {
                Ok(u) => format!("Ok({})", print_in(&e, u)),
                Err(err) => err.kind().to_string(),
            }
        ),
        failures: vec![],
    }
}

fn normal_without_arity() -> Outcome {
    let g = SortHierarchy::gz();
    let (e, t) = focus("*0", "(*0)*0");
    let normal = is_normal(&e, &t);
    let arity = infer_arity(&g, &e, &t);
    Outcome {
        ok: normal == Ok(true) && arity.is_err(),
        detail: format!("normal {normal:?}, arity error {}", arity.is_err()),
        failures: vec![],
    }
}

fn diamond() -> Outcome {
    let slice = depth3_slice();
    let distinct = slice
        .iter()
        .map(|f| &f.term)
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    Outcome::from_reports(vec![
        diamond_suite("diamond", &standard_terms()),
        diamond_suite("diamond3", &slice),
    ])
    .require(
        distinct >= MIN_SLICE,
        "depth-3 slice of at least 10^4 terms",
    )
}

fn per_term(run: impl Fn(&[FocalizedTerm]) -> Report) -> Outcome {
    let g = SortHierarchy::gz();
    let mut reports = Vec::new();
    for (suffix, items) in [
        ("", standard_terms()),
        ("3", depth3_slice()),
        ("_typed", typed_terms(&g)),
    ] {
        let mut r = run(&items);
        let name = format!("{}{suffix}", r.suite);
        r.rename(&name);
        reports.push(r);
    }
    Outcome::from_reports(reports)
}

fn main() {
    let g = SortHierarchy::gz();
    type Check<'a> = (&'a str, Option<Duration>, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Check> = vec![
        (
            "untypable term with arity (0,0)",
            Some(ONE_SECOND),
            Box::new(untypable_with_arity),
        ),
        (
            "normal term without arity",
            Some(ONE_SECOND),
            Box::new(normal_without_arity),
        ),
        (
            "level equality agreement",
            Some(LEQZ_LIMIT),
            Box::new(|| Outcome::from_reports(vec![leqz_suite()])),
        ),
        ("confluence diamond", Some(DIAMOND_LIMIT), Box::new(diamond)),
        (
            "subject reduction",
            None,
            Box::new(|| per_term(|it| sred_suite(&g, it))),
        ),
        (
            "type correctness, uniqueness, cast check, predicativity, acyclicity, thinning",
            None,
            Box::new(|| per_term(|it| typing_suite(&g, it))),
        ),
        (
            "static type and env-shape reachability",
            None,
            Box::new(|| per_term(|it| static_suite(&g, it))),
        ),
        (
            "arity of type follows arity of term",
            None,
            Box::new(|| per_term(|it| arity_bridge_suite(&g, it))),
        ),
        (
            "normal forms with an arity",
            None,
            Box::new(|| per_term(|it| nf_suite(&g, it))),
        ),
        (
            "legalization total, type preserving, idempotent",
            None,
            Box::new(|| Outcome::from_reports(vec![wf3_suite(&g)])),
        ),
        (
            "typable terms normalize",
            None,
            Box::new(|| per_term(|it| sn_suite(&g, it))),
        ),
        (
            "structural rules under g2",
            Some(MTT_LIMIT),
            Box::new(|| Outcome::from_reports(vec![mtt_suite()])),
        ),
        (
            "eta instances",
            None,
            Box::new(|| {
                let r = eta_suite();
                let enough = r.checked >= MIN_ETA;
                Outcome::from_reports(vec![r]).require(enough, "at least 20 quadruples")
            }),
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut out = check();
        let took = start.elapsed();
        if let Some(limit) = limit {
            out = out.require(took < *limit, &format!("runtime under {limit:?}"));
        }
        for line in out.failures.iter().take(20) {
            println!("    {line}");
        }
        if out.failures.len() > 20 {
            println!("    ... {} more", out.failures.len() - 20);
        }
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {:>2} {name} [{:.2?}] {}",
            i + 1,
            took,
            out.detail
        );
        if !out.ok {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
