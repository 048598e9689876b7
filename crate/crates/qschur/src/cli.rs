//! Command-line surface: build and cache structure tables, run the
//! verification suites, print the Frobenius and splitting maps.
//!
//! All output files are canonical JSON (sorted keys), so identical inputs
//! produce byte-identical artifacts.

use crate::cartan::{saturate, SaturatedSet, Weight};
use crate::error::{Error, Result};
use crate::frob::{compare_with_fm, FrobeniusPair};
use crate::gschur::{
    annihilator_check, annihilator_check_specialized, descend_maps, dominant_window, quotient,
    ratfunc_to_cyclo, report_json, specialize_weyl, weyl_module,
};
use crate::laurent::{binomial_lemma_report, l_choices, CycloInt, LaurentPoly, RatFunc};
use crate::schur::{
    build_table, multiply_matches_counts, presentation_report, verify_table_held_out, Algebra,
    StructureTable,
};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "qschur", about = "Exact q-Schur algebra tables, quantum Frobenius and splitting maps")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the structure table for S_v(n, r) and cache it as JSON.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        /// Also write the table to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exit 0 iff every assertion passes.
    Verify {
        /// binomials | presentation | oracle | frobenius | splitting | fm | gschur | embed
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Print the sparse matrix of the Frobenius (fr) or its splitting (c).
    Map {
        /// fr | c
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn cache_dir() -> PathBuf {
    std::env::var_os("QSCHUR_CACHE")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".qschur-cache"))
}

fn default_l(ell: u32) -> u32 {
    if ell % 2 == 0 {
        2 * ell
    } else {
        ell
    }
}

fn cmd_table(n: usize, r: u32, out: Option<&Path>) -> Result<()> {
    let dir = cache_dir();
    let path = dir.join(format!("table-n{}-r{}.json", n, r));
    if path.exists() {
        println!("cache hit: {}", path.display());
        if let Some(dest) = out {
            std::fs::copy(&path, dest)?;
        }
        return Ok(());
    }
    let table = build_table(n, r)?;
    let text = table.to_json()?;
    std::fs::create_dir_all(&dir)?;
    std::fs::write(&path, &text)?;
    if let Some(dest) = out {
        std::fs::write(dest, &text)?;
    }
    println!(
        "built table n={} r={}: {} basis elements -> {}",
        n,
        r,
        table.dim(),
        path.display()
    );
    Ok(())
}

fn load_or_build(n: usize, r: u32) -> Result<StructureTable> {
    let path = cache_dir().join(format!("table-n{}-r{}.json", n, r));
    if path.exists() {
        return StructureTable::from_json(&std::fs::read_to_string(&path)?);
    }
    build_table(n, r)
}

/// Print one line per assertion; true overall verdict.
fn print_checks(checks: &[(String, bool)]) -> bool {
    let mut all = true;
    for (name, ok) in checks {
        println!("{} {}", if *ok { "ok  " } else { "FAIL" }, name);
        all &= ok;
    }
    all
}

fn suite_binomials(ell: Option<u32>) -> Result<Vec<(String, bool)>> {
    let ells: Vec<u32> = match ell {
        Some(e) => vec![e],
        None => (1..=7).collect(),
    };
    let mut out = Vec::new();
    for e in ells {
        for l in l_choices(e) {
            for (part, ok) in binomial_lemma_report(e, l, 40)? {
                out.push((format!("binomials ell={} l={} {}", e, l, part), ok));
            }
        }
    }
    Ok(out)
}

fn suite_presentation(n: usize, r: u32) -> Result<Vec<(String, bool)>> {
    let alg = Algebra::generic(load_or_build(n, r)?)?;
    Ok(presentation_report(&alg)
        .into_iter()
        .map(|(name, ok)| (format!("presentation n={} r={} {}", n, r, name), ok))
        .collect())
}

fn suite_oracle(n: usize, r: u32) -> Result<Vec<(String, bool)>> {
    let table = load_or_build(n, r)?;
    let mut out = Vec::new();
    out.push((
        format!("oracle n={} r={} held-out generator products", n, r),
        verify_table_held_out(&table, 100_000_000)?,
    ));
    if table.dim() <= 16 {
        let alg = Algebra::generic(table)?;
        let mut ok = true;
        let basis = alg.table.basis.clone();
        for a in &basis {
            for b in &basis {
                ok &= multiply_matches_counts(&alg, a, b, &[2, 3, 4, 5], 100_000_000)?;
            }
        }
        out.push((format!("oracle n={} r={} all products vs counts", n, r), ok));
    }
    Ok(out)
}

fn suite_frobenius(n: usize, r: u32, ell: u32, l: u32) -> Result<Vec<(String, bool)>> {
    let pair = FrobeniusPair::new(n, r, ell, l)?;
    let tag = format!("frobenius n={} r={} ell={} l={}", n, r, ell, l);
    Ok(vec![
        (format!("{} multiplicative", tag), pair.check_fr_multiplicative()),
        (format!("{} surjective", tag), pair.check_fr_surjective()),
        (
            format!(
                "{} kernel dim {} = {} - {}",
                tag,
                pair.kernel_dimension(),
                pair.source.dim(),
                pair.star.algebra.dim()
            ),
            pair.kernel_dimension() == pair.source.dim() - pair.star.algebra.dim(),
        ),
    ])
}

fn suite_splitting(n: usize, r: u32, ell: u32, l: u32) -> Result<Vec<(String, bool)>> {
    // construction already certifies the leading-term triangularity
    let pair = FrobeniusPair::new(n, r, ell, l)?;
    let tag = format!("splitting n={} r={} ell={} l={}", n, r, ell, l);
    Ok(vec![
        (format!("{} triangular", tag), true),
        (format!("{} section of Fr", tag), pair.check_fr_c_identity()),
        (format!("{} multiplicative", tag), pair.check_c_multiplicative()),
        (format!("{} generator rule", tag), pair.check_generator_compat()),
        (
            format!("{} star relations", tag),
            pair.star.check_presentation().is_ok(),
        ),
    ])
}

fn suite_fm(r: u32, p: u64) -> Result<Vec<(String, bool)>> {
    let report = compare_with_fm(r, p)?;
    let ok = report.iter().all(|(_, v)| *v);
    Ok(vec![(
        format!("fm r={} p={} ({} basis elements)", r, p, report.len()),
        ok,
    )])
}

fn saturated_family(window: &[Weight]) -> Result<Vec<SaturatedSet>> {
    let mut out = vec![
        SaturatedSet::from_complement(vec![], window)?,
        SaturatedSet::from_complement(window.to_vec(), window)?,
    ];
    for w in window {
        let p = saturate(w, window)?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

fn suite_gschur(n: usize, r: u32, ell: Option<u32>, l: Option<u32>) -> Result<Vec<(String, bool)>> {
    let generic = Algebra::generic(load_or_build(n, r)?)?;
    let alg = generic.specialize(|poly: &LaurentPoly| RatFunc::from(poly.clone()));
    let window = dominant_window(n, r);
    let mut out = Vec::new();
    for p in saturated_family(&window)? {
        let mk = |lam: &[u32]| weyl_module(&alg, lam);
        let prop = annihilator_check(&alg, &p, &mk)?;
        let q = quotient(&alg, &p)?;
        let ident = q.check_identity(&alg, &p);
        let comp: Vec<Vec<i64>> = p
            .complement()
            .iter()
            .map(|w| w.lift_with_sum(r as i64).unwrap_or_else(|| w.entries().to_vec()))
            .collect();
        println!(
            "{}",
            report_json(&comp, alg.dim(), q.ideal.dim(), q.dim(), prop, ident, true)
        );
        out.push((format!("gschur generic complement={:?}", comp), prop && ident));
        if let Some(e) = ell {
            let lval = l.unwrap_or_else(|| default_l(e));
            let cy = generic.specialize(move |poly: &LaurentPoly| CycloInt::reduce(poly, lval).to_rat());
            let mk = |lam: &[u32]| {
                let w = weyl_module(&alg, lam)?;
                specialize_weyl(&w, &|f| ratfunc_to_cyclo(f, lval))
            };
            let prop_cy = annihilator_check_specialized(&alg, &cy, &p, &mk)?;
            out.push((
                format!("gschur ell={} complement={:?}", e, comp),
                prop_cy,
            ));
        }
    }
    Ok(out)
}

fn suite_embed(n: usize, r: u32, ell: u32, l: u32) -> Result<Vec<(String, bool)>> {
    let pair = FrobeniusPair::new(n, r, ell, l)?;
    let window = dominant_window(n, ell * r);
    let mut out = Vec::new();
    for p in saturated_family(&window)? {
        let (_, _, rep) = descend_maps(&pair, &p)?;
        println!(
            "{}",
            report_json(
                &rep.p_complement,
                rep.dim_source,
                rep.dim_ideal,
                rep.dim_quotient,
                true,
                rep.embed,
                rep.fr_surjective,
            )
        );
        out.push((
            format!("embed ell={} complement={:?}", ell, rep.p_complement),
            rep.embed && rep.fr_surjective,
        ));
    }
    Ok(out)
}

fn cmd_verify(
    suite: &str,
    n: Option<usize>,
    r: Option<u32>,
    ell: Option<u32>,
    l: Option<u32>,
    p: Option<u64>,
) -> Result<bool> {
    let n_or = n.unwrap_or(2);
    let r_or = r.unwrap_or(2);
    let checks = match suite {
        "binomials" => suite_binomials(ell)?,
        "presentation" => suite_presentation(n_or, r_or)?,
        "oracle" => suite_oracle(n_or, r_or)?,
        "frobenius" => {
            let e = ell.unwrap_or(2);
            suite_frobenius(n_or, r_or, e, l.unwrap_or_else(|| default_l(e)))?
        }
        "splitting" => {
            let e = ell.unwrap_or(2);
            suite_splitting(n_or, r_or, e, l.unwrap_or_else(|| default_l(e)))?
        }
        "fm" => suite_fm(r.unwrap_or(1), p.unwrap_or(2))?,
        "gschur" => suite_gschur(n_or, r_or, ell, l)?,
        "embed" => {
            let e = ell.unwrap_or(2);
            suite_embed(n_or, r.unwrap_or(1), e, l.unwrap_or_else(|| default_l(e)))?
        }
        other => {
            return Err(Error::BadParams(format!("unknown suite {}", other)));
        }
    };
    Ok(print_checks(&checks))
}

fn cmd_map(kind: &str, n: usize, r: u32, ell: u32, l: Option<u32>, out: Option<&Path>) -> Result<()> {
    let l = l.unwrap_or_else(|| default_l(ell));
    let pair = FrobeniusPair::new(n, r, ell, l)?;
    let full = pair.maps_to_json();
    let mut doc = serde_json::Map::new();
    for key in ["n", "r", "ell", "l", "eps"] {
        doc.insert(key.to_string(), full[key].clone());
    }
    match kind {
        "fr" => {
            doc.insert("fr".to_string(), full["fr"].clone());
        }
        "c" => {
            doc.insert("c".to_string(), full["c"].clone());
            doc.insert("c_certificates".to_string(), full["c_certificates"].clone());
        }
        other => {
            return Err(Error::BadParams(format!("unknown map kind {}", other)));
        }
    }
    let text = serde_json::to_string_pretty(&serde_json::Value::Object(doc))?;
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{}", text),
    }
    Ok(())
}

/// Entry point; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome: Result<bool> = match &cli.cmd {
        Cmd::Table { n, r, out } => cmd_table(*n, *r, out.as_deref()).map(|_| true),
        Cmd::Verify {
            suite,
            n,
            r,
            ell,
            l,
            p,
        } => cmd_verify(suite, *n, *r, *ell, *l, *p),
        Cmd::Map {
            kind,
            n,
            r,
            ell,
            l,
            out,
        } => cmd_map(kind, *n, *r, *ell, *l, out.as_deref()).map(|_| true),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {}", e);
            1
        }
    }
}
