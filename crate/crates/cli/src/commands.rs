use std::fmt::Write as _;

use nsl_core::closure;
use nsl_core::nlogic::{eval, NValue, Semantics};
use nsl_core::nsets::{
    left_monad, monad, obslash_prime, ovee_prime, refute, unit_interval, unit_interval_def1, verify_refutation,
    BoundKind, Extremum, GenInterval, NSet, RefutationResult,
};
use nsl_core::ordfield::RationalFunction;

use crate::syntax::{parse_env, parse_field_elem, parse_formula};

/// What a command prints and how the process should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

impl Outcome {
    pub fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    pub fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }

    fn verdict(stdout: String, agree: bool) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if agree { EXIT_OK } else { EXIT_DISAGREE },
        }
    }
}

fn elem(text: &str, what: &str) -> Result<RationalFunction, Outcome> {
    parse_field_elem(text).map_err(|e| Outcome::usage(format!("{what}: {e}")))
}

pub fn cmd_eval(env_text: &str, formula: &str, sem: Option<Semantics>) -> Outcome {
    let env = match parse_env(env_text, sem) {
        Ok(env) => env,
        Err(e) => return Outcome::usage(format!("environment: {e}")),
    };
    let phi = match parse_formula(formula) {
        Ok(phi) => phi,
        Err(e) => return Outcome::usage(format!("formula: {e}")),
    };
    match eval(&phi, &env.bindings, env.semantics.unwrap_or_default()) {
        Ok(v) => Outcome::ok(format!("{v}\n")),
        Err(e) => Outcome::usage(e),
    }
}

/// Exits 0 when the run matches what the semantics predicts: no violations
/// for the corrected and clamped semantics, at least one for the original.
pub fn cmd_closure_check(iters: u64, seed: u64, sem: Semantics) -> Outcome {
    if iters == 0 {
        return Outcome::usage("--iters must be positive");
    }
    let report = closure::run(iters, seed, sem);
    let expected = match sem {
        Semantics::Original => report.violations > 0,
        _ => report.violations == 0,
    };
    Outcome::verdict(format!("{report}\n"), expected)
}

pub fn cmd_refute(center: &str, candidate: &str, mode: Extremum, eps: &str) -> Outcome {
    let (a, l, e) = match (elem(center, "center"), elem(candidate, "candidate"), elem(eps, "eps")) {
        (Ok(a), Ok(l), Ok(e)) => (a, l, e),
        (Err(o), _, _) | (_, Err(o), _) | (_, _, Err(o)) => return o,
    };
    let s = monad(&a);
    let result = match refute(&s, &l, &e, mode) {
        Ok(r) => r,
        Err(err) => return Outcome::usage(err),
    };
    let x = |v: &RationalFunction| v.display_expanded();
    let (past, toward) = match mode {
        Extremum::Infimum => ("<", ">"),
        Extremum::Supremum => (">", "<"),
    };
    let mut out = format!("{result}\n");
    match &result {
        RefutationResult::Witness(w) => {
            let _ = writeln!(out, "check: {} in {}: {}", x(w), s, s.contains(w));
            let beyond = match mode {
                Extremum::Infimum => w < &l,
                Extremum::Supremum => w > &l,
            };
            let _ = writeln!(out, "check: {} {past} {}: {beyond}", x(w), x(&l));
        }
        RefutationResult::BetterBound(b) => {
            let better = match mode {
                Extremum::Infimum => b > &l,
                Extremum::Supremum => b < &l,
            };
            let bound = match mode {
                Extremum::Infimum => b < &a,
                Extremum::Supremum => b > &a,
            };
            let _ = writeln!(out, "check: {} {toward} {}: {better}", x(b), x(&l));
            let _ = writeln!(out, "check: {} {past} {}: {bound}", x(b), x(&a));
            let _ = writeln!(out, "check: {} not infinitely close to {}: {}", x(b), x(&a), !b.infinitely_close(&a));
        }
    }
    let ok = verify_refutation(&s, &l, mode, &result);
    let _ = writeln!(out, "verified: {ok}");
    Outcome::verdict(out, ok)
}

pub fn cmd_calc(expr: &str) -> Outcome {
    let v = match elem(expr, "expression") {
        Ok(v) => v,
        Err(o) => return o,
    };
    let st = match v.standard_part() {
        Ok(q) => q.to_string(),
        Err(_) => "(infinite)".to_string(),
    };
    Outcome::ok(format!(
        "value: {v}\nsign: {}\ninfinitesimal: {}\nfinite: {}\nst: {st}\n",
        v.signum(),
        v.is_infinitesimal(),
        v.is_finite()
    ))
}

pub const DEMOS: [&str; 4] = ["paradox", "nonclosure", "monad-vs-interval", "def1-vs-def2"];

struct Transcript {
    text: String,
    agree: bool,
}

impl Transcript {
    fn new() -> Transcript {
        Transcript {
            text: String::new(),
            agree: true,
        }
    }

    fn line(&mut self, s: impl std::fmt::Display) {
        let _ = writeln!(self.text, "{s}");
    }

    fn check(&mut self, label: &str, computed: impl std::fmt::Display, expected: impl std::fmt::Display) {
        let (c, e) = (computed.to_string(), expected.to_string());
        let mark = if c == e { "ok" } else { "MISMATCH" };
        self.agree &= c == e;
        let _ = writeln!(self.text, "  {label}: computed {c}, expected {e} [{mark}]");
    }

    fn finish(mut self) -> Outcome {
        let verdict = if self.agree { "agree" } else { "disagree" };
        self.line(format!("verdict: {verdict}"));
        Outcome::verdict(self.text, self.agree)
    }
}

fn pt(n: i64) -> NSet {
    NSet::point(RationalFunction::from_int(n))
}

fn demo_paradox() -> Outcome {
    let mut t = Transcript::new();
    let a = NValue::new(pt(1), pt(0), pt(0));
    let b = NValue::new(pt(0), pt(0), pt(1));
    let sem = Semantics::Corrected;
    t.line(format!("A = {a}"));
    t.line(format!("B = {b}"));
    let conj = a.and(&b, sem);
    t.line(format!("A and B = {conj}"));
    t.check("falsity of A and B", &conj.f, "{0}");
    let neg = a.not(sem);
    t.line(format!("not A = {neg}"));
    t.check("indeterminacy of not A", &neg.i, "right(1)");
    t.finish()
}

fn demo_nonclosure() -> Outcome {
    let mut t = Transcript::new();
    let eps = RationalFunction::inv_x_pow(1);
    let a = NSet::finite([RationalFunction::zero(), RationalFunction::one()]);
    let b = pt(1);
    t.line(format!("eps = {eps}"));
    let or = ovee_prime(&a, &b);
    t.line(format!("{a} or' {b} = (A + B) - (A * B) = {or}"));
    t.check("2 in result", or.contains(&RationalFunction::from_int(2)), true);
    let two_eps = &RationalFunction::from_int(2) + &eps;
    let imp = obslash_prime(&a, &b);
    t.line(format!("{a} ->' {b} = right(1) - A + (A * B) = {imp}"));
    t.check("2 + 1/X in result", imp.contains(&two_eps), true);
    t.check("result within unit", imp.is_subset(&unit_interval()), false);
    t.finish()
}

fn demo_monad_vs_interval() -> Outcome {
    let mut t = Transcript::new();
    let a = RationalFunction::from_ratio(1, 2);
    let eps = RationalFunction::inv_x_pow(1);
    let x = &a - &eps;
    let lm = left_monad(&a);
    let open = NSet::interval(GenInterval::new(x.clone(), BoundKind::Open, a.clone(), BoundKind::Open).expect("nonempty"));
    t.line(format!("a = {a}, eps = {eps}, x = a - eps = {}", x.display_expanded()));
    t.line(format!("left monad of a = {lm}"));
    t.line(format!("open interval (a - eps, a) = {open}"));
    t.check("x in left monad", lm.contains(&x), true);
    t.check("x in open interval", open.contains(&x), false);
    t.finish()
}

fn demo_def1_vs_def2() -> Outcome {
    let mut t = Transcript::new();
    let eps = RationalFunction::inv_x_pow(1);
    let x = -(&RationalFunction::from_int(2) * &eps);
    let def2 = unit_interval();
    let def1 = unit_interval_def1(&eps);
    t.line(format!("x = {}", x.display_expanded()));
    t.line(format!("monad-bounded unit interval = {def2}"));
    t.line(format!("eps-bounded unit interval = {def1}"));
    t.check("x infinitely close to 0", x.infinitely_close(&RationalFunction::zero()), true);
    t.check("x in monad-bounded unit interval", def2.contains(&x), true);
    t.check("x in eps-bounded unit interval", def1.contains(&x), false);
    t.finish()
}

pub fn cmd_demo(name: &str) -> Outcome {
    match name {
        "paradox" => demo_paradox(),
        "nonclosure" => demo_nonclosure(),
        "monad-vs-interval" => demo_monad_vs_interval(),
        "def1-vs-def2" => demo_def1_vs_def2(),
        _ => Outcome::usage(format!("unknown demo `{name}` (expected one of {})", DEMOS.join(", "))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_demo_agrees() {
        for name in DEMOS {
            let o = cmd_demo(name);
            assert_eq!(o.code, EXIT_OK, "{name}:\n{}", o.stdout);
            assert!(o.stdout.ends_with("verdict: agree\n"));
        }
    }

    #[test]
    fn calc_reports() {
        let o = cmd_calc("1/X");
        assert!(o.stdout.contains("infinitesimal: true\n") && o.stdout.contains("st: 0\n"), "{}", o.stdout);
        let o = cmd_calc("X");
        assert!(o.stdout.contains("finite: false\n") && o.stdout.contains("st: (infinite)\n"));
        let o = cmd_calc("0");
        assert!(o.stdout.contains("sign: 0\n") && o.stdout.contains("infinitesimal: true\n"));
        assert_eq!(cmd_calc("1/0").code, EXIT_USAGE);
    }

    #[test]
    fn refute_outputs() {
        let o = cmd_refute("1/2", "1/2", Extremum::Infimum, "1/X");
        assert!(o.stdout.starts_with("Witness(1/2 - 2/X)\n"), "{}", o.stdout);
        assert!(o.stdout.ends_with("verified: true\n"));
        assert!(cmd_refute("1/2", "0", Extremum::Infimum, "1/X").stdout.starts_with("BetterBound(1/4)\n"));
        assert!(cmd_refute("1/2", "1", Extremum::Supremum, "1/X").stdout.starts_with("BetterBound(3/4)\n"));
        assert_eq!(cmd_refute("1/2", "1", Extremum::Supremum, "1/2").code, EXIT_USAGE);
    }
}
