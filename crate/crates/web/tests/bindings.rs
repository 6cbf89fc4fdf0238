use lefschetz_web::{gamma_json, membership_json, psi_curve_json};
use serde_json::{json, Value};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn gamma_of_worked_example() {
    let v = parse(gamma_json(r#"{"factors":[{"type":"I","e":1,"h":1},{"type":"III","e":1,"h":5}]}"#).unwrap());
    assert_eq!(v["gamma"], json!({ "num": 1, "den": 2 }));
    assert_eq!(v["argmax"], json!([1]));
    assert_eq!(v["audit"].as_array().unwrap().len(), 3);
    assert_eq!(v["lefschetz"]["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn gamma_rejects_bad_input() {
    assert!(gamma_json("{}").is_err());
    let many = format!(
        r#"{{"factors":[{}]}}"#,
        vec![r#"{"type":"I","e":1,"h":1}"#; 17].join(",")
    );
    assert!(gamma_json(&many).unwrap_err().contains("too many factors"));
}

#[test]
fn psi_curve_peaks_at_the_closed_form() {
    for (h, e, delta) in [(2, 1, 1), (5, 2, 0), (7, 3, 1)] {
        let v = parse(psi_curve_json(h, e, delta).unwrap());
        let points = v["points"].as_array().unwrap();
        assert_eq!(points.len() as u32, if delta == 0 { h } else { 2 * h });
        let best = points
            .iter()
            .map(|p| p["decimal"].as_f64().unwrap())
            .fold(f64::MIN, f64::max);
        assert!((best - v["max_decimal"].as_f64().unwrap()).abs() < 1e-12);
    }
    assert!(psi_curve_json(0, 1, 0).is_err());
    assert!(psi_curve_json(3, 1, 2).is_err());
}

#[test]
fn membership_round_trips_large_values() {
    let v = parse(membership_json("odd-exclusion", "6435").unwrap());
    assert_eq!(v["member"], true);
    let big = (1u64 << 63).to_string();
    let v = parse(membership_json("sigma-prime", &big).unwrap());
    assert_eq!(v["value"], big);
    assert_eq!(v["member"], true);
    assert!(membership_json("nope", "3").is_err());
    assert!(membership_json("sigma", "-3").is_err());
}
