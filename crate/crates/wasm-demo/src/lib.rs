//! Browser bindings. The plain functions return JSON strings so they can be
//! tested natively; the `#[wasm_bindgen]` wrappers only convert errors.

use recdet::det::{determinant, determinant_all, Engine};
use recdet::exact::RationalFunction;
use recdet::identities::{check, CheckOptions, DetTheorem, EngineChoice, Subject, Thm4Variant};
use recdet::matrix::{IdentityCase, IndexProfile, Matrix};
use recdet::sequences::{NamedFamily, PolySequence};
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_TERMS: i64 = 200;
const MAX_M: usize = 6;

/// Terms `P_lo..=P_hi` as `[{"n": .., "term": ..}, ..]`.
pub fn sequence_terms(family: &str, lo: i64, hi: i64) -> Result<String, String> {
    let family: NamedFamily = family.parse().map_err(|e: recdet::sequences::SpecError| e.to_string())?;
    if lo > hi || hi - lo >= MAX_TERMS {
        return Err(format!("range must be nonempty and at most {MAX_TERMS} terms"));
    }
    let seq = PolySequence::new(family.spec());
    let terms: Vec<_> = (lo..=hi).map(|n| json!({"n": n, "term": seq.term(n).to_string()})).collect();
    Ok(json!({"family": family.label(), "terms": terms}).to_string())
}

/// Determinant of a text matrix (rows on lines, entries split by `|`, quotients as `(numer)/(denom)`).
pub fn matrix_determinant(text: &str, engine: &str) -> Result<String, String> {
    let mat: Matrix<RationalFunction> = text.parse().map_err(|e: recdet::matrix::MatrixError| e.to_string())?;
    match engine.parse::<EngineChoice>()? {
        EngineChoice::One(e) => {
            let d = determinant(&mat, e).map_err(|err| err.to_string())?;
            Ok(json!({"results": [row(e, &d.value, d.fallback_used)], "consistent": null}).to_string())
        }
        EngineChoice::All => {
            let (runs, consistent) = determinant_all(&mat);
            let mut results = Vec::new();
            for (e, run) in runs {
                let d = run.map_err(|err| format!("{e}: {err}"))?;
                results.push(row(e, &d.value, d.fallback_used));
            }
            Ok(json!({"results": results, "consistent": consistent}).to_string())
        }
    }
}

fn row(engine: Engine, value: &RationalFunction, fallback: bool) -> serde_json::Value {
    json!({"engine": engine.name(), "value": value.to_string(), "fallback_used": fallback})
}

/// One determinant identity at one parameter point, as a verdict object.
/// `profile` is `"d1,d2,..;e1,e2,.."` or empty for the plain window.
#[allow(clippy::too_many_arguments)]
pub fn identity_check(theorem: &str, family: &str, s: i64, k: i64, n: i64, m: usize, d: usize, profile: &str) -> Result<String, String> {
    let theorem = match theorem {
        "2" => DetTheorem::Power,
        "3" => DetTheorem::Product,
        "3.5" => DetTheorem::Reciprocal,
        "4" => DetTheorem::Rising(Thm4Variant::Corrected),
        "4-printed" => DetTheorem::Rising(Thm4Variant::AsPrinted),
        other => return Err(format!("unknown theorem {other:?}")),
    };
    if m == 0 || m > MAX_M {
        return Err(format!("m must be between 1 and {MAX_M}"));
    }
    let family: NamedFamily = family.parse().map_err(|e: recdet::sequences::SpecError| e.to_string())?;
    let mut case = IdentityCase::new(s, k, n, m);
    if matches!(theorem, DetTheorem::Rising(_)) {
        case = case.with_d(d);
    }
    if let Some((ds, es)) = profile.trim().split_once(';') {
        case = case.with_profile(IndexProfile::new(ints(ds)?, ints(es)?).map_err(|e| e.to_string())?);
    }
    let verdict = check(theorem, &Subject::new(family), &case, &CheckOptions::default());
    serde_json::to_string(&verdict).map_err(|e| e.to_string())
}

fn ints(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("bad index {t:?}")))
        .collect()
}

#[wasm_bindgen(js_name = sequenceTerms)]
pub fn sequence_terms_js(family: &str, lo: i32, hi: i32) -> Result<String, JsValue> {
    sequence_terms(family, lo.into(), hi.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = matrixDeterminant)]
pub fn matrix_determinant_js(text: &str, engine: &str) -> Result<String, JsValue> {
    matrix_determinant(text, engine).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = identityCheck)]
#[allow(clippy::too_many_arguments)]
pub fn identity_check_js(theorem: &str, family: &str, s: i32, k: i32, n: i32, m: u32, d: u32, profile: &str) -> Result<String, JsValue> {
    identity_check(theorem, family, s.into(), k.into(), n.into(), m as usize, d as usize, profile).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn terms_of_fibonacci() {
        let out: Value = serde_json::from_str(&sequence_terms("fib", -1, 3).unwrap()).unwrap();
        let terms: Vec<_> = out["terms"].as_array().unwrap().iter().map(|t| t["term"].as_str().unwrap().to_string()).collect();
        assert_eq!(terms, ["1", "0", "1", "x", "x^2 + 1"]);
        assert!(sequence_terms("fib", 3, 1).is_err());
        assert!(sequence_terms("nope", 0, 1).is_err());
    }

    #[test]
    fn determinant_engines_agree() {
        let out: Value = serde_json::from_str(&matrix_determinant("x | 1\n1 | x", "all").unwrap()).unwrap();
        assert_eq!(out["consistent"], Value::Bool(true));
        for r in out["results"].as_array().unwrap() {
            assert_eq!(r["value"], "x^2 - 1");
        }
        let one: Value = serde_json::from_str(&matrix_determinant("(1)/(x) | 0\n0 | x", "gauss").unwrap()).unwrap();
        assert_eq!(one["results"][0]["value"], "1");
        assert!(matrix_determinant("1 | 2\n3", "bareiss").is_err());
    }

    #[test]
    fn single_checks() {
        let v: Value = serde_json::from_str(&identity_check("2", "fib", 0, 1, 1, 2, 0, "").unwrap()).unwrap();
        assert_eq!(v["status"], "equal");
        let v: Value = serde_json::from_str(&identity_check("3", "chebT", 1, 2, 0, 2, 0, "0,1;2,-1").unwrap()).unwrap();
        assert_eq!(v["status"], "equal");
        let v: Value = serde_json::from_str(&identity_check("4-printed", "fib", 0, 1, 2, 2, 1, "").unwrap()).unwrap();
        assert_eq!(v["status"], "expected-mismatch");
        assert!(identity_check("5", "fib", 0, 1, 0, 1, 0, "").is_err());
        assert!(identity_check("2", "fib", 0, 1, 0, 9, 0, "").is_err());
    }
}
