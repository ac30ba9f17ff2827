//! The `seq` and `det` commands, as functions returning their output.

use std::fmt::{Display, Write as _};

use recdet::det::{determinant, determinant_all, DetEntry, Engine};
use recdet::exact::{Rational, RationalFunction};
use recdet::identities::EngineChoice;
use recdet::matrix::{power_matrix, product_matrix, reciprocal_matrix, rising_matrix, IdentityCase, IndexProfile, Matrix};
use recdet::sequences::{NamedFamily, PolySequence};
use serde_json::json;

use crate::config::Format;

/// `a..b`, inclusive, either end possibly negative.
pub fn parse_span(input: &str) -> Result<(i64, i64), String> {
    let at = input
        .get(1..)
        .and_then(|rest| rest.find(".."))
        .map(|at| at + 1)
        .ok_or_else(|| format!("expected a range a..b, got {input:?}"))?;
    let lo = input[..at].parse().map_err(|_| format!("bad range start in {input:?}"))?;
    let hi = input[at + 2..].parse().map_err(|_| format!("bad range end in {input:?}"))?;
    if lo > hi {
        return Err(format!("empty range {input:?}"));
    }
    Ok((lo, hi))
}

pub fn seq(family: &NamedFamily, lo: i64, hi: i64, format: Format) -> String {
    let seq = PolySequence::new(family.spec());
    match format {
        Format::Text => (lo..=hi).map(|n| format!("{n}: {}\n", seq.term(n))).collect(),
        Format::Json => {
            let terms: Vec<_> = (lo..=hi).map(|n| json!({"n": n, "term": seq.term(n).to_string()})).collect();
            let mut out = serde_json::to_string_pretty(&json!({"family": family.label(), "terms": terms})).expect("json");
            out.push('\n');
            out
        }
    }
}

/// Where `det` gets its matrix.
#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
pub enum MatrixSource {
    /// The text dump format: one row per line, entries separated by `|`.
    Text(String),
    Builder {
        theorem: String,
        family: NamedFamily,
        case: IdentityCase,
    },
}

enum Built {
    Poly(Matrix<recdet::exact::Polynomial>),
    Rat(Matrix<RationalFunction>),
}

fn build(source: &MatrixSource) -> Result<Built, String> {
    match source {
        MatrixSource::Text(text) => text.parse::<Matrix<RationalFunction>>().map(Built::Rat).map_err(|e| e.to_string()),
        MatrixSource::Builder { theorem, family, case } => {
            let seq = PolySequence::new(family.spec());
            let built = match theorem.as_str() {
                "2" => power_matrix(&seq, case).map(Built::Poly),
                "3" => product_matrix(&seq, case).map(Built::Poly),
                "3.5" => reciprocal_matrix(&seq, case).map(Built::Rat),
                "4" => rising_matrix(&seq, case).map(Built::Poly),
                other => return Err(format!("unknown theorem {other:?} (expected 2, 3, 3.5 or 4)")),
            };
            built.map_err(|e| e.to_string())
        }
    }
}

/// Engine, printed value, whether condensation fell back.
type Row = (Engine, String, bool);

fn run<T: DetEntry + Display>(mat: &Matrix<T>, engine: EngineChoice) -> Result<(Vec<Row>, Option<bool>), String> {
    match engine {
        EngineChoice::One(e) => {
            let d = determinant(mat, e).map_err(|err| err.to_string())?;
            Ok((vec![(e, d.value.to_string(), d.fallback_used)], None))
        }
        EngineChoice::All => {
            let (runs, consistent) = determinant_all(mat);
            let mut rows = Vec::new();
            for (e, run) in runs {
                let d = run.map_err(|err| format!("{e}: {err}"))?;
                rows.push((e, d.value.to_string(), d.fallback_used));
            }
            Ok((rows, Some(consistent)))
        }
    }
}

/// Computes the determinant, optionally after evaluating entries at `x`.
pub fn det(source: &MatrixSource, engine: EngineChoice, x: Option<&Rational>, format: Format) -> Result<String, String> {
    let built = build(source)?;
    let (rows, consistent) = match (built, x) {
        (Built::Poly(m), None) => run(&m, engine)?,
        (Built::Rat(m), None) => run(&m, engine)?,
        (Built::Poly(m), Some(x)) => run(&m.eval(x), engine)?,
        (Built::Rat(m), Some(x)) => run(&m.eval(x).map_err(|e| e.to_string())?, engine)?,
    };
    let mut out = String::new();
    match format {
        Format::Text => {
            if rows.len() == 1 && consistent.is_none() {
                let _ = writeln!(out, "{}", rows[0].1);
            } else {
                for (e, value, _) in &rows {
                    let _ = writeln!(out, "{e}: {value}");
                }
            }
            if let Some(c) = consistent {
                let _ = writeln!(out, "consistent: {c}");
            }
            if rows.iter().any(|r| r.2) {
                let _ = writeln!(out, "condensation fell back to elimination");
            }
        }
        Format::Json => {
            let results: Vec<_> = rows
                .iter()
                .map(|(e, value, fallback)| json!({"engine": e.name(), "value": value, "fallback_used": fallback}))
                .collect();
            out = serde_json::to_string_pretty(&json!({"results": results, "consistent": consistent})).expect("json");
            out.push('\n');
        }
    }
    Ok(out)
}

/// Assembles a builder case from flag values.
pub fn builder_case(s: i64, k: i64, n: i64, m: usize, d: Option<usize>, d_seq: Option<Vec<i64>>, e_seq: Option<Vec<i64>>) -> Result<IdentityCase, String> {
    let mut case = IdentityCase::new(s, k, n, m);
    if let Some(d) = d {
        case = case.with_d(d);
    }
    match (d_seq, e_seq) {
        (Some(d), Some(e)) => case = case.with_profile(IndexProfile::new(d, e).map_err(|e| e.to_string())?),
        (None, None) => {}
        _ => return Err("--d-seq and --e-seq must be given together".into()),
    }
    Ok(case)
}
