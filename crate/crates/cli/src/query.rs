//! Proof-search commands: prove, order, divisible, unit. Shared shape:
//! load a presentation, run the bounded query, verify any derivation
//! through the replay checker, print the verdict, persist artifacts.

use crate::formats::{digest_hex, parse_presentation};
use crate::record::Recorder;
use crate::{BudgetArgs, Exit};
use anyhow::{anyhow, Context, Result};
use semiring_core::engine::{self, replay, Budget, Derivation, Presentation, QueryOutcome};
use semiring_core::term::{parse_term, PolyTerm};
use std::fs;
use std::path::{Path, PathBuf};

pub struct QueryContext {
    pub presentation: Presentation,
    pub budget: Budget,
    pub recorder: Recorder,
    pub proof_path: Option<PathBuf>,
}

pub fn load(
    file: &Path,
    budget_args: &BudgetArgs,
    out: Option<&Path>,
    proof: Option<&Path>,
) -> Result<QueryContext> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let presentation =
        parse_presentation(&text).with_context(|| format!("parsing {}", file.display()))?;
    let budget = budget_args.to_budget();
    let mut recorder = Recorder::new(out);
    recorder.input_digest = digest_hex(text.as_bytes());
    recorder.budget = Some((&budget).into());
    Ok(QueryContext {
        presentation,
        budget,
        recorder,
        proof_path: proof.map(Path::to_path_buf),
    })
}

impl QueryContext {
    pub fn term(&self, src: &str) -> Result<PolyTerm> {
        parse_term(src, self.presentation.names(), self.presentation.unital())
            .map_err(|e| anyhow!("bad term {src:?}: {e}"))
    }

    /// Re-verify a derivation independently, print/persist it, and finish
    /// the record. `start` is the term the derivation rewrites from; `end`
    /// the term it must reach.
    fn emit_found(
        mut self,
        summary: &str,
        start: &PolyTerm,
        end: &PolyTerm,
        derivation: &Derivation,
    ) -> Result<Exit> {
        let replayed = replay(&self.presentation, start, derivation)
            .map_err(|e| anyhow!("internal: derivation fails replay: {e}"))?;
        if replayed != *end {
            return Err(anyhow!("internal: derivation replays to the wrong term"));
        }
        outln!("FOUND {summary}");
        outln!("steps: {}", derivation.len());
        let text = derivation.render(&self.presentation);
        match &self.proof_path {
            Some(path) => {
                fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                outln!("proof: {}", path.display());
                self.recorder.artifact(path);
            }
            None => {
                if !text.is_empty() {
                    outp!("{text}");
                }
            }
        }
        self.recorder.finish(&format!("found {summary}"))?;
        Ok(Exit::Found)
    }

    fn emit_not_found(self, exhausted: bool) -> Result<Exit> {
        if exhausted {
            outln!("NOT-FOUND (budget exhausted)");
            self.recorder.finish("not-found (budget exhausted)")?;
            Ok(Exit::Exhausted)
        } else {
            outln!("NOT-FOUND");
            self.recorder.finish("not-found")?;
            Ok(Exit::NotFound)
        }
    }
}

pub fn prove(ctx: QueryContext, lhs: &str, rhs: &str) -> Result<Exit> {
    let l = ctx.term(lhs)?;
    let r = ctx.term(rhs)?;
    match engine::prove_equal(&ctx.presentation, &l, &r, &ctx.budget)? {
        QueryOutcome::Found(d) => {
            let names = ctx.presentation.names().to_vec();
            ctx.emit_found(
                &format!("{} = {}", l.display(&names), r.display(&names)),
                &l,
                &r,
                &d,
            )
        }
        QueryOutcome::NotFound { exhausted } => ctx.emit_not_found(exhausted),
    }
}

pub fn order(ctx: QueryContext, target: &str) -> Result<Exit> {
    let t = ctx.term(target)?;
    match engine::find_finite_order(&ctx.presentation, &t, &ctx.budget)? {
        QueryOutcome::Found(o) => {
            let start = t.scale(&o.m.into());
            let end = t.scale(&o.n.into());
            let summary = format!("({}, {})", o.m, o.n);
            ctx.emit_found(&summary, &start, &end, &o.derivation)
        }
        QueryOutcome::NotFound { exhausted } => ctx.emit_not_found(exhausted),
    }
}

pub fn divisible(ctx: QueryContext, n: u64, target: &str) -> Result<Exit> {
    let t = ctx.term(target)?;
    match engine::divisibility_witness(&ctx.presentation, n, &t, &ctx.budget)? {
        QueryOutcome::Found(w) => {
            let end = w.factor.scale(&n.into());
            let names = ctx.presentation.names().to_vec();
            let summary = format!("factor: {}", w.factor.display(&names));
            ctx.emit_found(&summary, &t, &end, &w.derivation)
        }
        QueryOutcome::NotFound { exhausted } => ctx.emit_not_found(exhausted),
    }
}

pub fn unit(ctx: QueryContext) -> Result<Exit> {
    let w = PolyTerm::generator(ctx.presentation.generator_count(), 0);
    match engine::detect_unit(&ctx.presentation, &ctx.budget)? {
        QueryOutcome::Found(u) => {
            let end = w.mul(&u.unit).map_err(|e| anyhow!("internal: {e}"))?;
            let names = ctx.presentation.names().to_vec();
            let summary = format!("unit: {}", u.unit.display(&names));
            ctx.emit_found(&summary, &w, &end, &u.derivation)
        }
        QueryOutcome::NotFound { exhausted } => ctx.emit_not_found(exhausted),
    }
}
