//! Batch front end over the `lambdadelta` kernel.
//!
//! Exit codes: 0 success or true, 1 judgment false, 2 type or arity error,
//! 3 syntax or scope error, 4 fuel exhausted, 5 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use lambdadelta::oracle::{run_suite, SUITES};
use lambdadelta::syntax::print_term_at;
use lambdadelta::{
    check_type, conv_dec, infer_arity, infer_type, legalize_env, normalize, parse_env_named,
    parse_term_in, print_env, print_in, static_type, static_type_iter, Env, ReduceError,
    SortHierarchy, Term, TypeError, DEFAULT_FUEL,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_TYPE: i32 = 2;
pub const EXIT_SYNTAX: i32 = 3;
pub const EXIT_FUEL: i32 = 4;
pub const EXIT_USAGE: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "lambdadelta",
    version,
    about = "Reduce, type and check lambda-delta terms"
)]
struct Cli {
    /// Environment, inline or `@file`.
    #[arg(long, global = true, default_value = "*0")]
    env: String,
    /// Sort hierarchy: gz, g2 or affine:<c>.
    #[arg(long, global = true, default_value = "gz")]
    param: String,
    /// Step bound for reduction.
    #[arg(long, global = true, env = "LD_FUEL", default_value_t = DEFAULT_FUEL)]
    fuel: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Echo the canonical form of a term.
    Parse { term: String },
    /// Print the normal form.
    Normalize {
        term: String,
        /// Also print each step.
        #[arg(long)]
        trace: bool,
    },
    /// Print the inferred type.
    Infer { term: String },
    /// Check a term against a type.
    Check {
        term: String,
        #[arg(long = "type")]
        ty: String,
    },
    /// Decide convertibility; the answer is the exit code.
    Conv { left: String, right: String },
    /// Print the canonical arity.
    Arity { term: String },
    /// Print the static type.
    Static {
        term: String,
        /// Iterate up to n times until the result is env-shaped.
        #[arg(long, value_name = "N")]
        iterate: Option<u64>,
    },
    /// Print the legalized environment.
    Legalize,
    /// Run an oracle suite by name.
    Suite { name: String },
}

struct Fail(i32, String);

type Res = Result<i32, Fail>;

pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            let _ = writeln!(err, "{msg}");
            code
        }
    }
}

fn read_arg(text: &str) -> Result<String, Fail> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Fail(EXIT_USAGE, format!("cannot read {path}: {e}"))),
        None => Ok(text.to_string()),
    }
}

fn parse_param(text: &str) -> Result<SortHierarchy, Fail> {
    let bad = || {
        Fail(
            EXIT_USAGE,
            format!("unknown --param {text:?}; use gz, g2 or affine:<c>"),
        )
    };
    match text {
        "gz" => Ok(SortHierarchy::gz()),
        "g2" => Ok(SortHierarchy::g2()),
        _ => {
            let c = text.strip_prefix("affine:").ok_or_else(bad)?;
            let c: u32 = c.parse().map_err(|_| bad())?;
            SortHierarchy::affine(c).ok_or_else(bad)
        }
    }
}

struct Ctx {
    env: Env,
    names: Vec<String>,
}

impl Ctx {
    fn term(&self, text: &str) -> Result<Term, Fail> {
        let text = read_arg(text)?;
        parse_term_in(&text, &self.names).map_err(|e| Fail(EXIT_SYNTAX, format!("ParseError: {e}")))
    }

    fn show(&self, t: &Term) -> String {
        print_in(&self.env, t)
    }
}

fn reduce_fail(e: ReduceError) -> Fail {
    match e {
        ReduceError::FuelExhausted { .. } => Fail(EXIT_FUEL, e.to_string()),
        ReduceError::DanglingReference { .. } => Fail(EXIT_SYNTAX, e.to_string()),
    }
}

fn type_fail(ctx: &Ctx, t: &Term, e: TypeError) -> Fail {
    let code = match &e {
        TypeError::FuelExhausted { .. } => EXIT_FUEL,
        TypeError::DanglingReference { .. } => EXIT_SYNTAX,
        TypeError::IllTypedSubterm { source, .. } if source.is_abort() => match **source {
            TypeError::FuelExhausted { .. } => EXIT_FUEL,
            _ => EXIT_TYPE,
        },
        _ => EXIT_TYPE,
    };
    let mut msg = e.to_string();
    if let Some(sub) = t.subterm(e.path()) {
        let level = ctx.env.binder_count() + t.binders_along(e.path());
        msg.push_str(&format!("\n  in subterm {}", print_term_at(level, sub)));
    }
    Fail(code, msg)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Res {
    let g = parse_param(&cli.param)?;
    let env_text = read_arg(&cli.env)?;
    let (env, names) = parse_env_named(&env_text)
        .map_err(|e| Fail(EXIT_SYNTAX, format!("ParseError in --env: {e}")))?;
    let ctx = Ctx { env, names };
    let e = &ctx.env;
    let fuel = cli.fuel;
    let mut say = |s: String| {
        let _ = writeln!(out, "{s}");
    };
    match &cli.cmd {
        Cmd::Parse { term } => {
            let t = ctx.term(term)?;
            say(ctx.show(&t));
        }
        Cmd::Normalize { term, trace } => {
            let t = ctx.term(term)?;
            let (nf, steps) = normalize(e, &t, fuel).map_err(reduce_fail)?;
            if *trace {
                for line in steps.lines(e) {
                    say(line);
                }
            }
            say(ctx.show(&nf));
        }
        Cmd::Infer { term } => {
            let t = ctx.term(term)?;
            let u = infer_type(&g, e, &t, fuel).map_err(|x| type_fail(&ctx, &t, x))?;
            say(ctx.show(&u));
        }
        Cmd::Check { term, ty } => {
            let t = ctx.term(term)?;
            let w = ctx.term(ty)?;
            let cast = Term::cast(w.clone(), t.clone());
            return match check_type(&g, e, &t, &w, fuel) {
                Ok(true) => {
                    say("OK".into());
                    Ok(EXIT_OK)
                }
                Ok(false) => {
                    say(format!(
                        "mismatch: {} does not have type {}",
                        ctx.show(&t),
                        ctx.show(&w)
                    ));
                    Ok(EXIT_FALSE)
                }
                Err(x) => Err(type_fail(&ctx, &cast, x)),
            };
        }
        Cmd::Conv { left, right } => {
            let a = ctx.term(left)?;
            let b = ctx.term(right)?;
            let same = conv_dec(e, &a, &b, fuel).map_err(reduce_fail)?;
            return Ok(if same { EXIT_OK } else { EXIT_FALSE });
        }
        Cmd::Arity { term } => {
            let t = ctx.term(term)?;
            let a = infer_arity(&g, e, &t).map_err(|x| type_fail(&ctx, &t, x))?;
            say(a.to_string());
        }
        Cmd::Static { term, iterate } => {
            let t = ctx.term(term)?;
            let s = match iterate {
                None => static_type(&g, e, &t),
                Some(n) => static_type_iter(&g, e, &t, *n).map(|(s, _)| s),
            }
            .map_err(|x| type_fail(&ctx, &t, x))?;
            say(ctx.show(&s));
        }
        Cmd::Legalize => {
            let l = legalize_env(&g, e, fuel).map_err(|x| {
                let code = if matches!(x, TypeError::FuelExhausted { .. }) {
                    EXIT_FUEL
                } else {
                    EXIT_TYPE
                };
                Fail(code, x.to_string())
            })?;
            say(print_env(&l));
        }
        Cmd::Suite { name } => {
            let report = run_suite(name).ok_or_else(|| {
                Fail(
                    EXIT_USAGE,
                    format!("unknown suite {name:?}; known: {}", SUITES.join(", ")),
                )
            })?;
            say(report.to_string());
            return Ok(if report.passed() { EXIT_OK } else { EXIT_FALSE });
        }
    }
    Ok(EXIT_OK)
}
