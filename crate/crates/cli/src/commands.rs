use std::fs;
use std::path::Path;

use serde::Serialize;

use modchar::chi::{chi_basic, indecomposable_tuples, r1_table, universal_table, DegreeTableRow};
use modchar::dickson::{dickson_report, DicksonReport};
use modchar::mono::{CohCtx, Monomial};
use modchar::reps::io::RepFile;
use modchar::reps::{
    basic_rep, big_rep, chi_of_rep, classify, j_filtration, regular_rep, sym_power_rep,
    ChiReduction,
};
use modchar::verify::{run_all, Profile};

use crate::output::{csv, json, Format};
use crate::{cache, Cli, Command, ConstructKind, Failure, FieldArgs, ProfileArg, RepCommand};

/// On failure, optional output to print before the error.
pub type Outcome = Result<String, (Option<String>, Failure)>;

fn lib<T>(r: modchar::Result<T>) -> Result<T, (Option<String>, Failure)> {
    r.map_err(|e| (None, e.into()))
}

pub fn run(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    let key = cache_key(cli);
    if let (Some(dir), Some(key)) = (&cli.cache_dir, &key) {
        if let Some(hit) = cache::load(dir, key) {
            return Ok(hit);
        }
    }
    let out = match &cli.command {
        Command::Basis { field, max_degree } => basis(fmt, field, *max_degree),
        Command::Chi { field, n, alpha } => chi(fmt, field, *n, alpha),
        Command::Nonvanish {
            field,
            n,
            max_degree,
        } => nonvanish(fmt, field, *n, *max_degree),
        Command::Dickson { p, n, dmax } => dickson(fmt, *p, *n, *dmax),
        Command::Tuples { p, n, max } => tuples(fmt, *p, *n, *max),
        Command::Rep(RepCommand::Analyze { file, k }) => analyze(fmt, file, k),
        Command::Construct { kind, field, n } => construct(*kind, field, *n),
        Command::Verify { profile } => verify(fmt, *profile),
    }?;
    if let (Some(dir), Some(key)) = (&cli.cache_dir, &key) {
        if let Err(e) = cache::store(dir, key, &out) {
            eprintln!("warning: could not write cache entry: {e}");
        }
    }
    Ok(out)
}

/// Key for commands whose output depends only on their flags.
fn cache_key(cli: &Cli) -> Option<String> {
    let f = |k: &'static str, v: String| (k, v);
    let fmt = f("format", cli.format.name().to_string());
    let field = |a: &FieldArgs| vec![f("p", a.p.to_string()), f("r", a.r.to_string())];
    let (name, mut flags) = match &cli.command {
        Command::Basis {
            field: a,
            max_degree,
        } => {
            let mut v = field(a);
            v.push(f("max-degree", max_degree.to_string()));
            ("basis", v)
        }
        Command::Chi { field: a, n, alpha } => {
            let mut v = field(a);
            v.push(f("n", n.to_string()));
            v.push(f("alpha", alpha.clone()));
            ("chi", v)
        }
        Command::Nonvanish {
            field: a,
            n,
            max_degree,
        } => {
            let mut v = field(a);
            v.push(f("n", n.to_string()));
            if let Some(d) = max_degree {
                v.push(f("max-degree", d.to_string()));
            }
            ("nonvanish", v)
        }
        Command::Dickson { p, n, dmax } => {
            let mut v = vec![f("p", p.to_string()), f("n", n.to_string())];
            if let Some(d) = dmax {
                v.push(f("dmax", d.to_string()));
            }
            ("dickson", v)
        }
        Command::Tuples { p, n, max } => (
            "tuples",
            vec![
                f("p", p.to_string()),
                f("n", n.to_string()),
                f("max", max.to_string()),
            ],
        ),
        Command::Construct { kind, field: a, n } => {
            let mut v = field(a);
            v.push(f("n", n.to_string()));
            v.push(f("kind", format!("{kind:?}").to_lowercase()));
            ("construct", v)
        }
        Command::Rep(_) | Command::Verify { .. } => return None,
    };
    flags.push(fmt);
    Some(cache::key(name, &flags))
}

#[derive(Serialize)]
struct BasisDegree {
    degree: u64,
    monomials: Vec<String>,
}

#[derive(Serialize)]
struct BasisOut {
    p: u64,
    r: usize,
    max_degree: u64,
    degrees: Vec<BasisDegree>,
}

fn basis(fmt: Format, a: &FieldArgs, max_degree: u64) -> Outcome {
    let ctx = lib(CohCtx::new(a.p, a.r))?;
    let degrees: Vec<(u64, Vec<Monomial>)> = (0..=max_degree)
        .map(|d| (d, ctx.enumerate_invariant_basis(d)))
        .filter(|(_, ms)| !ms.is_empty())
        .collect();
    Ok(match fmt {
        Format::Text => degrees
            .iter()
            .map(|(d, ms)| {
                let names: Vec<String> = ms.iter().map(Monomial::pretty).collect();
                format!("{d}: {}\n", names.join(", "))
            })
            .collect(),
        Format::Json => json(
            "basis",
            &BasisOut {
                p: a.p,
                r: a.r,
                max_degree,
                degrees: degrees
                    .iter()
                    .map(|(d, ms)| BasisDegree {
                        degree: *d,
                        monomials: ms.iter().map(ToString::to_string).collect(),
                    })
                    .collect(),
            },
        ),
        Format::Csv => csv(
            &["degree", "monomial"],
            degrees
                .iter()
                .flat_map(|(d, ms)| ms.iter().map(move |m| vec![d.to_string(), m.to_string()])),
        ),
    })
}

#[derive(Serialize)]
struct ChiTerm {
    coeff: u64,
    factors: Vec<String>,
}

#[derive(Serialize)]
struct ChiOut {
    p: u64,
    r: usize,
    n: usize,
    alpha: String,
    terms: Vec<ChiTerm>,
    rendered: String,
}

fn chi(fmt: Format, a: &FieldArgs, n: usize, alpha: &str) -> Outcome {
    let ctx = lib(CohCtx::new(a.p, a.r))?;
    let alpha = lib(ctx.parse_monomial(alpha))?;
    let t = lib(chi_basic(&ctx, &alpha, n))?;
    let terms: Vec<ChiTerm> = t
        .to_terms()
        .into_iter()
        .map(|term| ChiTerm {
            coeff: term.coeff,
            factors: term.factors.iter().map(ToString::to_string).collect(),
        })
        .collect();
    Ok(match fmt {
        Format::Text => format!("{}\n", t.pretty()),
        Format::Json => json(
            "chi",
            &ChiOut {
                p: a.p,
                r: a.r,
                n,
                alpha: alpha.to_string(),
                terms,
                rendered: t.pretty(),
            },
        ),
        Format::Csv => {
            let mut header = vec!["coeff".to_string()];
            header.extend((1..=n).map(|i| format!("factor_{i}")));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv(
                &header,
                terms.into_iter().map(|t| {
                    let mut row = vec![t.coeff.to_string()];
                    row.extend(t.factors);
                    row
                }),
            )
        }
    })
}

#[derive(Serialize)]
struct Row {
    #[serde(rename = "N")]
    dim: u64,
    alpha: String,
    degree: u64,
    status: String,
}

#[derive(Serialize)]
struct NonvanishOut {
    p: u64,
    r: usize,
    n: usize,
    rows: Vec<Row>,
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn nonvanish(fmt: Format, a: &FieldArgs, n: usize, max_degree: Option<u64>) -> Outcome {
    let ctx = lib(CohCtx::new(a.p, a.r))?;
    let rows: Vec<DegreeTableRow> = match max_degree {
        Some(d) if a.r == 1 => lib(r1_table(a.p, n, d))?,
        Some(_) => {
            return Err((
                None,
                Failure::Usage("--max-degree tables are available for r = 1 only".into()),
            ))
        }
        None => lib(universal_table(&ctx, n))?,
    };
    Ok(match fmt {
        Format::Text => {
            let mut cells = vec![vec![
                "N".to_string(),
                "alpha".into(),
                "degree".into(),
                "status".into(),
            ]];
            cells.extend(rows.iter().map(|r| {
                vec![
                    r.dim.to_string(),
                    r.alpha.pretty(),
                    r.degree.to_string(),
                    r.status.to_string(),
                ]
            }));
            table(&cells)
        }
        Format::Json => json(
            "nonvanish",
            &NonvanishOut {
                p: a.p,
                r: a.r,
                n,
                rows: rows
                    .iter()
                    .map(|r| Row {
                        dim: r.dim,
                        alpha: r.alpha.to_string(),
                        degree: r.degree,
                        status: r.status.to_string(),
                    })
                    .collect(),
            },
        ),
        Format::Csv => csv(
            &["N", "alpha", "degree", "status"],
            rows.iter().map(|r| {
                vec![
                    r.dim.to_string(),
                    r.alpha.to_string(),
                    r.degree.to_string(),
                    r.status.to_string(),
                ]
            }),
        ),
    })
}

fn ok_word(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn dickson_text(r: &DicksonReport) -> String {
    let mut groups: Vec<(i8, Vec<String>)> = Vec::new();
    for id in &r.products {
        match groups.last_mut() {
            Some((s, is)) if *s == id.sign => is.push(id.i.to_string()),
            _ => groups.push((id.sign, vec![id.i.to_string()])),
        }
    }
    let products: Vec<String> = groups
        .iter()
        .map(|(s, is)| {
            format!(
                "sign={}{} (i={})",
                if *s > 0 { "+" } else { "-" },
                s.abs(),
                is.join(",")
            )
        })
        .collect();
    let support: Vec<String> = r.support.iter().map(ToString::to_string).collect();
    let mut out = format!(
        "newton: {}, inverse: {}, products: {}\n",
        ok_word(r.newton),
        ok_word(r.inverse),
        products.join(", ")
    );
    out += &format!(
        "sparsity: {} (D nonzero in degrees {})\n",
        ok_word(r.sparsity),
        support.join(",")
    );
    if r.unexpected_nonzero.is_empty() {
        out += "companion scan: ok\n";
    } else {
        let ks: Vec<String> = r
            .unexpected_nonzero
            .iter()
            .map(ToString::to_string)
            .collect();
        out += &format!("companion scan: FAILED (k={})\n", ks.join(","));
    }
    if let Some(ind) = r.independence {
        out += &format!("independence: {}\n", ok_word(ind));
    }
    out
}

#[derive(Serialize)]
struct DicksonOut<'a> {
    ok: bool,
    #[serde(flatten)]
    report: &'a DicksonReport,
}

fn dickson(fmt: Format, p: u64, n: usize, dmax: Option<u64>) -> Outcome {
    let pn = p
        .checked_pow(n as u32)
        .ok_or_else(|| (None, Failure::Usage(format!("{p}^{n} is too large"))))?;
    let dmax = dmax.unwrap_or(3 * pn.saturating_sub(1));
    let report = lib(dickson_report(p, n, dmax))?;
    let out = match fmt {
        Format::Text => dickson_text(&report),
        Format::Json => json(
            "dickson",
            &DicksonOut {
                ok: report.ok(),
                report: &report,
            },
        ),
        Format::Csv => csv(
            &["check", "result"],
            [
                vec!["newton".into(), ok_word(report.newton).into()],
                vec!["inverse".into(), ok_word(report.inverse).into()],
                vec!["sparsity".into(), ok_word(report.sparsity).into()],
                vec![
                    "companion".into(),
                    ok_word(report.unexpected_nonzero.is_empty()).into(),
                ],
            ]
            .into_iter()
            .chain(
                report
                    .products
                    .iter()
                    .map(|id| vec![format!("product i={}", id.i), format!("{:+}", id.sign)]),
            ),
        ),
    };
    if report.ok() {
        Ok(out)
    } else {
        Err((
            Some(out),
            Failure::Check(format!("Dickson identities failed for p={p}, n={n}")),
        ))
    }
}

#[derive(Serialize)]
struct TuplesOut {
    p: u64,
    n: usize,
    max: u64,
    tuples: Vec<modchar::chi::TupleCertificate>,
}

fn paren(parts: &[u64]) -> String {
    let s: Vec<String> = parts.iter().map(ToString::to_string).collect();
    format!("({})", s.join(","))
}

fn tuples(fmt: Format, p: u64, n: usize, max: u64) -> Outcome {
    let ts = lib(indecomposable_tuples(p, n, max))?;
    Ok(match fmt {
        Format::Text => ts
            .iter()
            .map(|t| format!("{} degree {}\n", paren(&t.parts), t.degree))
            .collect(),
        Format::Json => json(
            "tuples",
            &TuplesOut {
                p,
                n,
                max,
                tuples: ts,
            },
        ),
        Format::Csv => csv(
            &["parts", "total", "degree"],
            ts.iter()
                .map(|t| vec![paren(&t.parts), t.total.to_string(), t.degree.to_string()]),
        ),
    })
}

#[derive(Serialize)]
struct ChiPoly {
    k: u64,
    poly: String,
}

#[derive(Serialize)]
struct AnalyzeOut<'a> {
    file: String,
    p: u64,
    r: usize,
    dim: usize,
    generators: usize,
    j_dims: Vec<usize>,
    classification: &'a ChiReduction,
    chi: Vec<ChiPoly>,
}

fn analyze(fmt: Format, file: &Path, ks: &[u64]) -> Outcome {
    let text = fs::read_to_string(file).map_err(|e| {
        (
            None,
            Failure::Input(format!("cannot read {}: {e}", file.display())),
        )
    })?;
    let parsed = lib(RepFile::from_json(&text))?;
    let (rep, _) = lib(parsed.to_rep())?;
    if !ks.is_empty() && rep.ctx().r() != 1 {
        return Err((
            None,
            Failure::Usage(
                "chi polynomials are only computed over a prime field (r = 1); \
                 drop --k to get the filtration and classification"
                    .into(),
            ),
        ));
    }
    let dims: Vec<usize> = lib(j_filtration(&rep))?.iter().map(|s| s.dim()).collect();
    let verdict = lib(classify(&rep))?;
    let mut polys = Vec::new();
    for &k in ks {
        if k == 0 {
            return Err((None, Failure::Usage("k must be at least 1".into())));
        }
        polys.push(ChiPoly {
            k,
            poly: lib(chi_of_rep(&rep, k))?.to_string(),
        });
    }
    let dims_s: Vec<String> = dims.iter().map(ToString::to_string).collect();
    let verdict_line = match &verdict {
        ChiReduction::Zero { fixed_dim } => format!("Zero (dim J₀ = {fixed_dim})"),
        ChiReduction::Reduced { quotient_rank, .. } => format!("Reduced rank {quotient_rank}"),
    };
    Ok(match fmt {
        Format::Text => {
            let mut out = format!("J dims {}\n{verdict_line}\n", dims_s.join(","));
            if let ChiReduction::Reduced { projection, .. } = &verdict {
                let rows: Vec<String> = projection
                    .iter()
                    .map(|r| {
                        let s: Vec<String> = r.iter().map(ToString::to_string).collect();
                        format!("[{}]", s.join(","))
                    })
                    .collect();
                out += &format!("projection: [{}]\n", rows.join(","));
            }
            for c in &polys {
                out += &format!("chi[y^{}] = {}\n", c.k, c.poly);
            }
            out
        }
        Format::Json => json(
            "rep analyze",
            &AnalyzeOut {
                file: file.display().to_string(),
                p: rep.ctx().p(),
                r: rep.ctx().r(),
                dim: rep.dim(),
                generators: rep.rank(),
                j_dims: dims,
                classification: &verdict,
                chi: polys,
            },
        ),
        Format::Csv => {
            let mut rows = vec![
                vec!["j_dims".to_string(), dims_s.join(" ")],
                vec!["verdict".to_string(), verdict_line],
            ];
            rows.extend(
                polys
                    .iter()
                    .map(|c| vec![format!("chi[y^{}]", c.k), c.poly.clone()]),
            );
            csv(&["key", "value"], rows)
        }
    })
}

fn construct(kind: ConstructKind, a: &FieldArgs, n: usize) -> Outcome {
    let ctx = lib(modchar::ff::FieldCtx::new(a.p, a.r))?;
    let file = match kind {
        ConstructKind::Basic => {
            let b = basic_rep(&ctx, n);
            RepFile::from_rep(b.rep(), Some(b.basepoint()))
        }
        ConstructKind::Sym => RepFile::from_rep(&sym_power_rep(&ctx), None),
        ConstructKind::Big => RepFile::from_rep(&lib(big_rep(&ctx, n))?, None),
        ConstructKind::Regular => RepFile::from_rep(&lib(regular_rep(&ctx, n))?, None),
    };
    Ok(file.to_json() + "\n")
}

#[derive(Serialize)]
struct VerifyOut {
    profile: Profile,
    passed: bool,
    suites: Vec<modchar::verify::SuiteResult>,
}

fn verify(fmt: Format, profile: ProfileArg) -> Outcome {
    let profile = match profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    let results = run_all(profile);
    let failed: Vec<&str> = results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.name)
        .collect();
    let out = match fmt {
        Format::Text => {
            let mut out: String = results.iter().map(|r| format!("{r}\n")).collect();
            if failed.is_empty() {
                out += &format!("all {} suites passed\n", results.len());
            } else {
                out += &format!("{} of {} suites failed\n", failed.len(), results.len());
            }
            out
        }
        Format::Json => json(
            "verify",
            &VerifyOut {
                profile,
                passed: failed.is_empty(),
                suites: results.clone(),
            },
        ),
        Format::Csv => csv(
            &["id", "suite", "result", "checks", "seconds"],
            results.iter().map(|r| {
                vec![
                    r.id.to_string(),
                    r.name.to_string(),
                    if r.passed() { "pass" } else { "fail" }.to_string(),
                    r.checks.to_string(),
                    format!("{:.3}", r.elapsed.as_secs_f64()),
                ]
            }),
        ),
    };
    if failed.is_empty() {
        Ok(out)
    } else {
        Err((
            Some(out),
            Failure::Check(format!("failing suites: {}", failed.join(", "))),
        ))
    }
}
