//! Browser bindings. Every export takes plain values and returns a JSON
//! string; errors come back as a thrown string.
//!
//! The `*_json` functions hold the logic and are ordinary Rust so they can
//! be tested natively; the `#[wasm_bindgen]` wrappers only convert errors.

use lefschetz_core::bounds::{psi, psi_max, PsiInput, Regime};
use lefschetz_core::gamma::{gamma_product, GammaConfig};
use lefschetz_core::lefschetz::check_product;
use lefschetz_core::sets::{membership, SetTag};
use lefschetz_core::{Fraction, VarietyProduct};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Products larger than this would freeze the page.
pub const MAX_BROWSER_FACTORS: usize = 16;

/// γ of a product given as `{"factors":[{"type":"III","e":1,"h":5,"n":1}, ...]}`,
/// with the per-subset audit and the Lefschetz verdict.
pub fn gamma_json(product: &str) -> Result<String, String> {
    let v = VarietyProduct::from_json(product).map_err(|e| e.to_string())?;
    let config = GammaConfig {
        max_factors: MAX_BROWSER_FACTORS,
        audit: true,
    };
    let r = gamma_product(&v, &config).map_err(|e| e.to_string())?;
    let audit: Vec<_> = r
        .per_subset
        .unwrap_or_default()
        .into_iter()
        .map(|s| json!({ "subset": s.subset.iter().map(|i| i + 1).collect::<Vec<_>>(), "value": s.value, "decimal": s.value.to_f64() }))
        .collect();
    Ok(json!({
        "gamma": r.value,
        "decimal": r.value.to_f64(),
        "argmax": r.argmax.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "audit": audit,
        "lefschetz": check_product(&v),
    })
    .to_string())
}

/// ψ for a single place of residue degree `e` as the rank runs over
/// `1..=h` (`delta = 0`) or `1..=2h` (`delta = 1`), with the closed-form
/// maximum of the regime.
pub fn psi_curve_json(h: u32, e: u32, delta: u8) -> Result<String, String> {
    if h == 0 || h > 200 {
        return Err("h must lie in 1..=200".into());
    }
    if e == 0 || e > 50 {
        return Err("e must lie in 1..=50".into());
    }
    let (h, e) = (u64::from(h), u64::from(e));
    let regime = match delta {
        0 => Regime::Isotropic,
        1 => Regime::Full,
        _ => return Err("delta must be 0 or 1".into()),
    };
    let cap = if delta == 0 { h } else { 2 * h };
    let mut points = Vec::new();
    for r in 1..=cap {
        let input = PsiInput {
            h,
            residue_degrees: vec![e],
            ranks: vec![r],
            delta,
        };
        let v = Fraction(psi(&input).map_err(|e| e.to_string())?);
        points.push(json!({ "rank": r, "psi": v, "decimal": v.to_f64() }));
    }
    let max = Fraction(psi_max(h, &[e], regime).map_err(|e| e.to_string())?);
    Ok(
        json!({ "h": h, "e": e, "delta": delta, "points": points, "max": max, "max_decimal": max.to_f64() })
            .to_string(),
    )
}

/// Membership of `x` (a decimal string, so values beyond 2^53 survive the
/// trip from JavaScript) in `sigma`, `sigma-prime` or `odd-exclusion`.
pub fn membership_json(set: &str, x: &str) -> Result<String, String> {
    let tag = SetTag::parse(set).ok_or_else(|| format!("unknown set {set:?}"))?;
    let x: u64 = x
        .trim()
        .parse()
        .map_err(|_| format!("{x:?} is not a positive integer below 2^64"))?;
    let cert = membership(tag, x);
    let formula = cert.as_ref().map(|c| c.to_string());
    Ok(json!({ "set": tag, "value": x.to_string(), "member": cert.is_some(), "certificate": cert, "formula": formula }).to_string())
}

#[wasm_bindgen]
pub fn gamma(product: &str) -> Result<String, JsValue> {
    gamma_json(product).map_err(JsValue::from)
}

#[wasm_bindgen(js_name = psiCurve)]
pub fn psi_curve(h: u32, e: u32, delta: u8) -> Result<String, JsValue> {
    psi_curve_json(h, e, delta).map_err(JsValue::from)
}

#[wasm_bindgen(js_name = checkMembership)]
pub fn check_membership(set: &str, x: &str) -> Result<String, JsValue> {
    membership_json(set, x).map_err(JsValue::from)
}
