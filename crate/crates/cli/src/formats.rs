//! Plain-text file formats: presentation files, semiring table files, and
//! census record lines.
//!
//! Presentation file:
//! ```text
//! generators: w
//! relations:
//! w = 2w + 2w^2
//! w = 3w + 3w^3
//! ```
//! An optional `unital: true` line before `relations:` admits constant
//! monomials in terms. Blank lines and `#` comments are ignored.
//!
//! Table file:
//! ```text
//! elements: [a, b]
//! add: [[0, 1], [1, 1]]
//! mul: [[0, 0], [0, 1]]
//! ```
//! Entries are row-major element indices. The `mul:` section may be omitted
//! where only an additive semigroup is needed.

use anyhow::{anyhow, bail, Context, Result};
use semiring_core::engine::Presentation;
use semiring_core::finite::enumerate::{canonical_semigroup_table, SemigroupTable};
use semiring_core::finite::{enumerate::canonical_semiring_tables, FiniteSemiring};
use semiring_core::term::parse_term;
use sha2::{Digest, Sha256};
use std::fmt::Write as _;

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut names: Option<Vec<String>> = None;
    let mut unital = false;
    let mut in_relations = false;
    let mut relations = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let at = |msg: String| anyhow!("line {}: {msg}", lineno + 1);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("generators:") {
            if names.is_some() {
                return Err(at("repeated generators line".into()));
            }
            let gens: Vec<String> = rest
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect();
            if gens.is_empty() {
                return Err(at("no generators listed".into()));
            }
            names = Some(gens);
            continue;
        }
        if let Some(rest) = line.strip_prefix("unital:") {
            match rest.trim() {
                "true" => unital = true,
                "false" => unital = false,
                other => return Err(at(format!("unital must be true or false, got {other:?}"))),
            }
            continue;
        }
        if line == "relations:" {
            if names.is_none() {
                return Err(at("relations before the generators line".into()));
            }
            in_relations = true;
            continue;
        }
        if !in_relations {
            return Err(at(format!("unexpected line {line:?}")));
        }
        let names = names.as_ref().expect("checked above");
        let mut sides = line.splitn(2, '=');
        let (lhs_src, rhs_src) = match (sides.next(), sides.next()) {
            (Some(l), Some(r)) if !r.contains('=') => (l.trim(), r.trim()),
            _ => return Err(at("a relation is one `lhs = rhs`".into())),
        };
        let parse = |src: &str| {
            parse_term(src, names, unital).map_err(|e| at(format!("column {}: {e}", e.offset + 1)))
        };
        relations.push((parse(lhs_src)?, parse(rhs_src)?));
    }
    let names = names.ok_or_else(|| anyhow!("missing generators line"))?;
    Presentation::new(names, relations, unital).map_err(|e| anyhow!("{e}"))
}

/// A table file's content: labels, additive table, optional multiplicative
/// table (both row-major index matrices).
pub struct TableFile {
    pub labels: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Option<Vec<Vec<usize>>>,
}

impl TableFile {
    pub fn semiring(&self) -> Result<FiniteSemiring> {
        let mul = self
            .mul
            .as_ref()
            .ok_or_else(|| anyhow!("table file has no mul section"))?;
        FiniteSemiring::from_tables(self.labels.clone(), &self.add, mul).map_err(|e| anyhow!("{e}"))
    }

    pub fn semigroup(&self) -> Result<SemigroupTable> {
        SemigroupTable::from_rows(&self.add).map_err(|e| anyhow!("{e}"))
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| anyhow!("no element labelled {label:?}"))
    }
}

pub fn parse_table_file(text: &str) -> Result<TableFile> {
    let mut labels: Option<Vec<String>> = None;
    let mut add: Option<Vec<Vec<usize>>> = None;
    let mut mul: Option<Vec<Vec<usize>>> = None;
    // Sections can span lines; gather full bracketed payloads first.
    let mut joined = String::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        joined.push_str(line);
        joined.push('\n');
    }
    let mut rest = joined.as_str();
    while !rest.trim().is_empty() {
        let r = rest.trim_start();
        let (key, after) = r.split_once(':').ok_or_else(|| {
            anyhow!(
                "expected `key: [...]`, got {:?}",
                r.lines().next().unwrap_or("")
            )
        })?;
        let (payload, tail) = take_bracketed(after)?;
        match key.trim() {
            "elements" => labels = Some(parse_label_list(payload)?),
            "add" => add = Some(parse_matrix(payload)?),
            "mul" => mul = Some(parse_matrix(payload)?),
            other => bail!("unknown section {other:?}"),
        }
        rest = tail;
    }
    let labels = labels.ok_or_else(|| anyhow!("missing elements section"))?;
    let add = add.ok_or_else(|| anyhow!("missing add section"))?;
    Ok(TableFile { labels, add, mul })
}

/// Slice out one balanced `[...]` group (brackets may nest) and the tail.
fn take_bracketed(src: &str) -> Result<(&str, &str)> {
    let start = src
        .find('[')
        .ok_or_else(|| anyhow!("expected a bracketed list"))?;
    if !src[..start].trim().is_empty() {
        bail!("unexpected text before bracket: {:?}", src[..start].trim());
    }
    let mut depth = 0usize;
    for (i, c) in src.char_indices().skip(start) {
        match c {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return Ok((&src[start..=i], &src[i + 1..]));
                }
            }
            _ => {}
        }
    }
    bail!("unbalanced brackets")
}

fn parse_label_list(payload: &str) -> Result<Vec<String>> {
    let inner = payload
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| anyhow!("elements must be a flat [..] list"))?;
    // Labels such as (0,1) carry commas; only split where parens balance.
    let mut labels: Vec<String> = Vec::new();
    let mut depth = 0usize;
    let mut piece = String::new();
    for c in inner.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                if !piece.trim().is_empty() {
                    labels.push(piece.trim().to_string());
                }
                piece.clear();
                continue;
            }
            _ => {}
        }
        piece.push(c);
    }
    if !piece.trim().is_empty() {
        labels.push(piece.trim().to_string());
    }
    if labels.is_empty() {
        bail!("elements list is empty");
    }
    for l in &labels {
        if l.contains(['[', ']', ':', '#']) || l.contains(char::is_whitespace) {
            bail!("bad element label {l:?}");
        }
    }
    Ok(labels)
}

fn parse_matrix(payload: &str) -> Result<Vec<Vec<usize>>> {
    let inner = payload
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| anyhow!("a table must be a [[..], ..] matrix"))?;
    let mut rows = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        if rest.starts_with(',') {
            rest = rest[1..].trim_start();
            continue;
        }
        let (row, tail) = take_bracketed(rest)?;
        let entries = row
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .expect("take_bracketed returns bracketed");
        let parsed: Result<Vec<usize>> = entries
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .with_context(|| format!("bad index {s:?}"))
            })
            .collect();
        rows.push(parsed?);
        rest = tail.trim_start();
    }
    if rows.is_empty() {
        bail!("table has no rows");
    }
    Ok(rows)
}

pub fn render_table_file(s: &FiniteSemiring) -> String {
    let n = s.order();
    let matrix = |table: &dyn Fn(usize, usize) -> usize| {
        let rows: Vec<String> = (0..n)
            .map(|i| {
                let row: Vec<String> = (0..n).map(|j| table(i, j).to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    };
    let mut out = String::new();
    let _ = writeln!(out, "elements: [{}]", s.labels().join(", "));
    let _ = writeln!(out, "add: {}", matrix(&|i, j| s.add(i, j)));
    let _ = writeln!(out, "mul: {}", matrix(&|i, j| s.mul(i, j)));
    out
}

fn hash16(tag: &str, canon: &[u16]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(tag.as_bytes());
    for v in canon {
        hasher.update(v.to_le_bytes());
    }
    let digest = hasher.finalize();
    let mut out = String::with_capacity(16);
    for byte in &digest[..8] {
        let _ = write!(out, "{byte:02x}");
    }
    out
}

/// One census line per semiring: canonical-table hash, order, predicate flags.
pub fn semiring_census_line(s: &FiniteSemiring) -> String {
    let canon = canonical_semiring_tables(s);
    let flag = |b: bool| if b { 1 } else { 0 };
    format!(
        "{} order={} idempotent={} divisible={} uniquely-divisible={} torsion=1 unital={} one-generated={}",
        hash16("semiring", &canon),
        s.order(),
        flag(s.is_add_idempotent()),
        flag(s.is_add_divisible()),
        flag(s.is_uniquely_divisible()),
        flag(s.unit().is_some()),
        flag(s.is_one_generated()),
    )
}

pub fn semigroup_census_line(t: &SemigroupTable) -> String {
    let canon = canonical_semigroup_table(t);
    let flag = |b: bool| if b { 1 } else { 0 };
    format!(
        "{} order={} semilattice={} divisible={}",
        hash16("semigroup", &canon),
        t.order(),
        flag(t.is_semilattice()),
        flag(t.is_divisible()),
    )
}

pub fn digest_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        let _ = write!(out, "{byte:02x}");
    }
    out
}
