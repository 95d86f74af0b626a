//! The `construct` subcommands and the `bound` calculator.

use crate::formats::{parse_table_file, render_table_file};
use crate::Exit;
use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Subcommand};
use num_bigint::BigUint;
use semiring_core::construct::{
    boolean, const_mult_semiring, product, prufer_add, prufer_div_witnesses, prufer_scale, ring_zn,
    t_s_semiring, u_act, u_add, u_axiom_check, u_mul, u_of_group, zero_mult_semiring, AbelianGroup,
    PruferElement, SOrO, UElement,
};
use semiring_core::cyclic::uniform_order_bound;
use semiring_core::finite::FiniteSemiring;
use std::fs;
use std::path::PathBuf;

#[derive(Args, Debug)]
pub struct Dest {
    /// Write the table file here instead of stdout.
    #[arg(long)]
    to: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Kind {
    /// The two-element Boolean semiring ({0,1}, OR, AND).
    Boolean {
        #[command(flatten)]
        dest: Dest,
    },
    /// The ring of integers modulo n.
    Ring {
        /// Modulus (1 ..= 8).
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        dest: Dest,
    },
    /// Truncated naturals: {1, ..., k+t-1} with arithmetic reduced to
    /// index k and period t.
    Truncnat {
        /// Additive index k (at least 1).
        #[arg(long)]
        index: u64,
        /// Additive period t (at least 1).
        #[arg(long)]
        period: u64,
        #[command(flatten)]
        dest: Dest,
    },
    /// Unital cover of a finite abelian group: adjoin an absorbing o with
    /// every sum equal to o.
    Uofg {
        /// Cyclic factors, e.g. "2,2" for the Klein four-group.
        #[arg(long)]
        cyclic: String,
        #[command(flatten)]
        dest: Dest,
    },
    /// Zero-multiplication semiring on a finite abelian group.
    Zeromult {
        /// Cyclic factors, e.g. "4" or "2,2".
        #[arg(long)]
        cyclic: String,
        #[command(flatten)]
        dest: Dest,
    },
    /// Constant-multiplication semiring on a commutative semigroup: every
    /// product equals a fixed idempotent e.
    Constmult {
        /// Table file; its `add` table is read as the semigroup operation.
        #[arg(long)]
        table: PathBuf,
        /// Label of the idempotent that absorbs every product.
        #[arg(long)]
        e: String,
        #[command(flatten)]
        dest: Dest,
    },
    /// Direct product of two semirings, component-wise.
    Product {
        /// Table file of the left factor.
        #[arg(long)]
        a: PathBuf,
        /// Table file of the right factor.
        #[arg(long)]
        b: PathBuf,
        #[command(flatten)]
        dest: Dest,
    },
    /// The semiring of scalar-action maps x -> nx + ax on a one-generated
    /// semiring; designated elements id and phi_w appear as comments.
    Ts {
        /// Table file of the underlying semiring.
        #[arg(long)]
        table: PathBuf,
        /// Label of the generator w.
        #[arg(long)]
        w: String,
        #[command(flatten)]
        dest: Dest,
    },
    /// Element-level arithmetic in the unital extension of a semiring S:
    /// pairs (n, a) with n a non-negative integer and a an element of S
    /// or the marker o. Never materialized as a table.
    Usemi {
        /// Table file of the underlying semiring S.
        #[arg(long)]
        table: PathBuf,
        /// Add two elements, each written "(n,a)" or "(n,o)".
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        add: Option<Vec<String>>,
        /// Multiply two elements.
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        mul: Option<Vec<String>>,
        /// Apply an element to an element of S (by label).
        #[arg(long, num_args = 2, value_names = ["X", "ELEMENT"])]
        act: Option<Vec<String>>,
        /// Exhaustively check the semiring and action identities over the
        /// truncation scalar <= N.
        #[arg(long, value_name = "N")]
        check: Option<u64>,
    },
    /// Exact arithmetic in the quasicyclic group of fractions u/p^e mod 1.
    Prufer {
        /// The prime p.
        #[arg(long)]
        p: u64,
        /// Add two fractions, each written "u/d" with d a power of p, or "0".
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        add: Option<Vec<String>>,
        /// Compute n·x.
        #[arg(long, num_args = 2, value_names = ["N", "X"])]
        scale: Option<Vec<String>>,
        /// List every b with n·b = x (there are exactly p^v, v the p-adic
        /// valuation of n).
        #[arg(long, num_args = 2, value_names = ["N", "X"])]
        witnesses: Option<Vec<String>>,
    },
}

fn load_semiring(path: &PathBuf) -> Result<FiniteSemiring> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let table = parse_table_file(&text)?;
    let s = table.semiring()?;
    let violations = s.validate();
    if !violations.is_empty() {
        bail!(
            "{} is not a semiring ({} axiom violations)",
            path.display(),
            violations.len()
        );
    }
    Ok(s)
}

fn parse_cyclic_spec(spec: &str) -> Result<AbelianGroup> {
    let mut group: Option<AbelianGroup> = None;
    for part in spec.split(',') {
        let n: u64 = part
            .trim()
            .parse()
            .map_err(|_| anyhow!("bad cyclic factor {:?} in {spec:?}", part.trim()))?;
        if n < 1 {
            bail!("cyclic factors must be at least 1");
        }
        let factor = AbelianGroup::cyclic(n);
        group = Some(match group {
            None => factor,
            Some(g) => g.direct_product(&factor),
        });
    }
    group.ok_or_else(|| anyhow!("empty cyclic group spec"))
}

fn parse_uelement(s: &FiniteSemiring, src: &str) -> Result<UElement> {
    let trimmed = src.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    let (scalar, part) = inner
        .split_once(',')
        .ok_or_else(|| anyhow!("expected \"(n,a)\" with a an element label or o, got {src:?}"))?;
    let scalar: BigUint = scalar
        .trim()
        .parse()
        .map_err(|_| anyhow!("bad scalar in {src:?}"))?;
    let part = part.trim();
    let part = if part == "o" {
        SOrO::O
    } else {
        match s.label_index(part) {
            Some(i) => SOrO::Elem(i),
            None => bail!("unknown element {part:?}"),
        }
    };
    UElement::new(scalar, part).map_err(|e| anyhow!("{e}"))
}

fn show_uelement(s: &FiniteSemiring, x: &UElement) -> String {
    match x.part {
        SOrO::O => format!("({},o)", x.scalar),
        SOrO::Elem(a) => format!("({},{})", x.scalar, s.label(a)),
    }
}

/// Render the table (with optional trailing comment lines) to --to or stdout.
fn emit(s: &FiniteSemiring, comments: &[String], dest: &Dest) -> Result<Exit> {
    let mut text = render_table_file(s);
    for line in comments {
        text.push_str("# ");
        text.push_str(line);
        text.push('\n');
    }
    match &dest.to {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            outln!("wrote {}", path.display());
        }
        None => outp!("{text}"),
    }
    Ok(Exit::Found)
}

pub fn run(kind: Kind) -> Result<Exit> {
    match kind {
        Kind::Boolean { dest } => emit(&boolean(), &[], &dest),
        Kind::Ring { n, dest } => {
            if n < 1 || n as usize > FiniteSemiring::MAX_ORDER {
                bail!(
                    "modulus must be between 1 and {}",
                    FiniteSemiring::MAX_ORDER
                );
            }
            emit(&ring_zn(n), &[], &dest)
        }
        Kind::Truncnat {
            index,
            period,
            dest,
        } => {
            if index < 1 || period < 1 {
                bail!("index and period must be at least 1");
            }
            let order = index + period - 1;
            if order as usize > FiniteSemiring::MAX_ORDER {
                bail!(
                    "index {index} and period {period} give order {order}, above the cap {}",
                    FiniteSemiring::MAX_ORDER
                );
            }
            emit(&FiniteSemiring::truncated_nat(index, period), &[], &dest)
        }
        Kind::Uofg { cyclic, dest } => {
            let g = parse_cyclic_spec(&cyclic)?;
            if g.order() + 1 > FiniteSemiring::MAX_ORDER {
                bail!(
                    "group of order {} gives a table of order {}, above the cap {}",
                    g.order(),
                    g.order() + 1,
                    FiniteSemiring::MAX_ORDER
                );
            }
            emit(&u_of_group(&g), &[], &dest)
        }
        Kind::Zeromult { cyclic, dest } => {
            let g = parse_cyclic_spec(&cyclic)?;
            if g.order() > FiniteSemiring::MAX_ORDER {
                bail!(
                    "group order {} above the cap {}",
                    g.order(),
                    FiniteSemiring::MAX_ORDER
                );
            }
            emit(&zero_mult_semiring(&g), &[], &dest)
        }
        Kind::Constmult { table, e, dest } => {
            let text = fs::read_to_string(&table)
                .with_context(|| format!("reading {}", table.display()))?;
            let file = parse_table_file(&text)?;
            let sg = file.semigroup()?;
            let idx = file.label_index(&e)?;
            let s = const_mult_semiring(&sg, file.labels.clone(), idx)?;
            emit(&s, &[], &dest)
        }
        Kind::Product { a, b, dest } => {
            let left = load_semiring(&a)?;
            let right = load_semiring(&b)?;
            let s = product(&left, &right)?;
            emit(&s, &[], &dest)
        }
        Kind::Ts { table, w, dest } => {
            let s = load_semiring(&table)?;
            let idx = s
                .label_index(&w)
                .ok_or_else(|| anyhow!("unknown element {w:?}"))?;
            let ts = t_s_semiring(&s, idx)?;
            let comments = vec![
                format!("id: {}", ts.semiring.label(ts.id)),
                format!("phi-w: {}", ts.semiring.label(ts.phi_w)),
            ];
            emit(&ts.semiring, &comments, &dest)
        }
        Kind::Usemi {
            table,
            add,
            mul,
            act,
            check,
        } => {
            let s = load_semiring(&table)?;
            let picked = [add.is_some(), mul.is_some(), act.is_some(), check.is_some()]
                .iter()
                .filter(|&&b| b)
                .count();
            if picked != 1 {
                bail!("pass exactly one of --add, --mul, --act, --check");
            }
            if let Some(args) = add {
                let x = parse_uelement(&s, &args[0])?;
                let y = parse_uelement(&s, &args[1])?;
                outln!("{}", show_uelement(&s, &u_add(&s, &x, &y)));
            } else if let Some(args) = mul {
                let x = parse_uelement(&s, &args[0])?;
                let y = parse_uelement(&s, &args[1])?;
                outln!("{}", show_uelement(&s, &u_mul(&s, &x, &y)));
            } else if let Some(args) = act {
                let x = parse_uelement(&s, &args[0])?;
                let el = s
                    .label_index(args[1].trim())
                    .ok_or_else(|| anyhow!("unknown element {:?}", args[1]))?;
                outln!("{}", s.label(u_act(&s, &x, el)));
            } else if let Some(max_scalar) = check {
                let violations = u_axiom_check(&s, max_scalar);
                if violations.is_empty() {
                    outln!("ok: all identities hold over scalars <= {max_scalar}");
                } else {
                    for v in &violations {
                        outln!("violation: {v:?}");
                    }
                    bail!("{} identities failed", violations.len());
                }
            }
            Ok(Exit::Found)
        }
        Kind::Prufer {
            p,
            add,
            scale,
            witnesses,
        } => {
            let picked = [add.is_some(), scale.is_some(), witnesses.is_some()]
                .iter()
                .filter(|&&b| b)
                .count();
            if picked != 1 {
                bail!("pass exactly one of --add, --scale, --witnesses");
            }
            if let Some(args) = add {
                let x = PruferElement::parse(p, &args[0])?;
                let y = PruferElement::parse(p, &args[1])?;
                outln!("{}", prufer_add(&x, &y)?);
            } else if let Some(args) = scale {
                let n: BigUint = args[0]
                    .trim()
                    .parse()
                    .map_err(|_| anyhow!("bad scalar {:?}", args[0]))?;
                let x = PruferElement::parse(p, &args[1])?;
                outln!("{}", prufer_scale(&n, &x));
            } else if let Some(args) = witnesses {
                let n: u64 = args[0]
                    .trim()
                    .parse()
                    .map_err(|_| anyhow!("bad scalar {:?}", args[0]))?;
                if n < 1 {
                    bail!("the divisor must be at least 1");
                }
                let x = PruferElement::parse(p, &args[1])?;
                let list = prufer_div_witnesses(&x, n);
                for b in &list {
                    outln!("{b}");
                }
                outln!("count: {}", list.len());
            }
            Ok(Exit::Found)
        }
    }
}

/// `bound --max-ord M`: the uniform torsion bound for a finitely generated
/// subsemiring whose generators all have additive order at most M. Prints
/// r = (M+1)! (so 2rb = rb for every generated b) and the order bound 2r-1.
pub fn bound(max_ord: u64) -> Result<Exit> {
    if max_ord < 1 {
        bail!("max-ord must be at least 1");
    }
    if max_ord > 20 {
        bail!("max-ord is capped at 20");
    }
    let (r, n) = uniform_order_bound(max_ord);
    outln!("r: {r}");
    outln!("bound: {n}");
    Ok(Exit::Found)
}
