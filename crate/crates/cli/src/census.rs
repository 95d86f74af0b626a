//! Finite-model commands: analyze one table, enumerate a census, and the
//! conjecture harness.

use crate::formats::{digest_hex, parse_table_file, semigroup_census_line, semiring_census_line};
use crate::record::Recorder;
use crate::Exit;
use anyhow::{bail, Context, Result};
use semiring_core::finite::enumerate::{
    enumerate_comm_semigroups, enumerate_semirings, SemiringFilter, Shard, MAX_SEMIGROUP_ORDER,
    MAX_SEMIRING_ORDER,
};
use semiring_core::finite::{CollapseWitness, FiniteSemiring};
use std::fs;
use std::path::Path;

pub fn analyze(file: &Path, out: Option<&Path>) -> Result<Exit> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let mut recorder = Recorder::new(out);
    recorder.input_digest = digest_hex(text.as_bytes());
    let table = parse_table_file(&text)?;
    let s = table.semiring()?;
    let violations = s.validate();
    if !violations.is_empty() {
        for v in &violations {
            outln!("violation: {v}");
        }
        recorder.finish(&format!("invalid ({} violations)", violations.len()))?;
        bail!(
            "{} is not a semiring: {} axiom violations",
            file.display(),
            violations.len()
        );
    }
    print_report(&s);
    recorder.finish("ok")?;
    Ok(Exit::Found)
}

fn print_report(s: &FiniteSemiring) {
    let n = s.order();
    outln!("order: {n}");
    outln!("elements: {}", s.labels().join(" "));
    outln!("valid: true");
    outln!("idempotent: {}", s.is_add_idempotent());
    outln!("divisible: {}", s.is_add_divisible());
    outln!("uniquely-divisible: {}", s.is_uniquely_divisible());
    outln!("torsion: true");
    outln!("max-ord: {}", s.max_ord());
    match s.unit() {
        Some(u) => outln!("unital: true (unit = {})", s.label(u)),
        None => outln!("unital: false"),
    }
    match s.add_identity() {
        Some(z) => outln!("add-identity: {}", s.label(z)),
        None => outln!("add-identity: none"),
    }
    let witnesses = s.one_generated_witnesses();
    if witnesses.is_empty() {
        outln!("one-generated: false");
    } else {
        let labels: Vec<&str> = witnesses.iter().map(|&w| s.label(w)).collect();
        outln!("one-generated: true (generators: {})", labels.join(" "));
    }
    for a in 0..n {
        let o = s.element_order(a);
        outln!(
            "ord({}): {} (index {}, period {})",
            s.label(a),
            o.ord(),
            o.index,
            o.period
        );
    }
    let sigma = s.sigma_congruence();
    let mut blocks: Vec<Vec<&str>> = vec![Vec::new(); sigma.num_blocks()];
    for a in 0..n {
        blocks[sigma.block_of(a)].push(s.label(a));
    }
    let rendered: Vec<String> = blocks
        .iter()
        .map(|b| format!("{{{}}}", b.join(" ")))
        .collect();
    outln!("sigma: {}", rendered.join(" "));
    let quotient = s.quotient(&sigma).expect("sigma is a congruence");
    outln!(
        "sigma-quotient: order {} (sigma on it is {})",
        quotient.order(),
        if quotient.sigma_congruence().is_identity() {
            "identity"
        } else {
            "NOT identity"
        }
    );
    match s.enumerate_congruences() {
        Ok(congs) => outln!("congruences: {}", congs.len()),
        Err(e) => outln!("congruences: skipped ({e})"),
    }
    match s.ideals() {
        Ok(ideals) => {
            outln!("ideals: {}", ideals.len());
            outln!(
                "ideal-simple: {}",
                s.is_ideal_simple().expect("same limit as ideals")
            );
        }
        Err(e) => outln!("ideals: skipped ({e})"),
    }
    match s.idempotent_ideal_witness() {
        Some(CollapseWitness::Absent) => outln!("idempotent-ideal-witness: absent marker"),
        Some(CollapseWitness::Element(a)) => {
            outln!("idempotent-ideal-witness: {}", s.label(a))
        }
        None => outln!("idempotent-ideal-witness: NOT-FOUND"),
    }
}

pub struct EnumerateOpts {
    pub order: usize,
    pub semigroups: bool,
    pub up_to_iso: bool,
    pub filter: SemiringFilter,
    pub jobs: usize,
    pub census: Option<std::path::PathBuf>,
}

/// Run one shard of the census, collecting record lines.
fn run_shard(opts: &EnumerateOpts, shard: Shard) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    if opts.semigroups {
        enumerate_comm_semigroups(opts.order, opts.up_to_iso, shard, |t| {
            lines.push(semigroup_census_line(t));
        })?;
    } else {
        enumerate_semirings(opts.order, opts.up_to_iso, opts.filter, shard, |s| {
            lines.push(semiring_census_line(s));
        })?;
    }
    Ok(lines)
}

pub fn enumerate(opts: EnumerateOpts, out: Option<&Path>) -> Result<Exit> {
    let max = if opts.semigroups {
        MAX_SEMIGROUP_ORDER
    } else {
        MAX_SEMIRING_ORDER
    };
    if opts.order < 1 || opts.order > max {
        bail!("order must be between 1 and {max}");
    }
    if opts.jobs < 1 {
        bail!("jobs must be at least 1");
    }
    let mut recorder = Recorder::new(out);
    recorder.input_digest = digest_hex(
        format!(
            "order={} semigroups={} up_to_iso={} filter={:?}",
            opts.order, opts.semigroups, opts.up_to_iso, opts.filter
        )
        .as_bytes(),
    );
    let mut lines = collect_census(&opts)?;
    lines.sort();
    let mut rendered = String::new();
    for line in &lines {
        rendered.push_str(line);
        rendered.push('\n');
    }
    outp!("{rendered}");
    outln!("count: {}", lines.len());
    if let Some(path) = &opts.census {
        fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))?;
        recorder.artifact(path);
    }
    recorder.finish(&format!("count {}", lines.len()))?;
    Ok(Exit::Found)
}

/// Shard the census across threads and merge deterministically (the caller
/// sorts); jobs = 1 stays on this thread.
fn collect_census(opts: &EnumerateOpts) -> Result<Vec<String>> {
    if opts.jobs == 1 {
        return run_shard(opts, Shard::default());
    }
    let count = opts.jobs as u64;
    let mut merged = Vec::new();
    let results: Vec<Result<Vec<String>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..count)
            .map(|index| scope.spawn(move || run_shard(opts, Shard { index, count })))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census thread"))
            .collect()
    });
    for r in results {
        merged.extend(r?);
    }
    Ok(merged)
}

/// The conjecture harness: sweep every semiring up to `max_order` for an
/// additively divisible, non-idempotent example. Finite semirings are
/// finitely generated and torsion, so a hit would be a genuine
/// counterexample (and a bug somewhere).
pub fn harness(target: &str, max_order: usize, jobs: usize, out: Option<&Path>) -> Result<Exit> {
    if target != "conjA" {
        bail!("unknown harness {target:?} (available: conjA)");
    }
    if !(1..=MAX_SEMIRING_ORDER).contains(&max_order) {
        bail!("max-order must be between 1 and {MAX_SEMIRING_ORDER}");
    }
    let mut recorder = Recorder::new(out);
    recorder.input_digest = digest_hex(format!("conjA max_order={max_order}").as_bytes());
    let filter = SemiringFilter {
        divisible: Some(true),
        idempotent: Some(false),
        ..SemiringFilter::default()
    };
    let mut hits = Vec::new();
    for order in 1..=max_order {
        let opts = EnumerateOpts {
            order,
            semigroups: false,
            up_to_iso: true,
            filter,
            jobs,
            census: None,
        };
        hits.extend(collect_census(&opts)?);
    }
    hits.sort();
    for line in &hits {
        outln!("hit: {line}");
    }
    outln!("hits: {}", hits.len());
    recorder.finish(&format!("hits {}", hits.len()))?;
    if hits.is_empty() {
        Ok(Exit::Found)
    } else {
        bail!("conjecture harness found {} counterexample(s)", hits.len());
    }
}
