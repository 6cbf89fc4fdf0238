use std::io::Read;

use lefschetz_core::bounds::{degree_lower_bound, omega_asymptotic_check, prefix_max, psi, psi_max, PsiInput, Regime};
use lefschetz_core::fraction::parse_fraction;
use lefschetz_core::gamma::{gamma_product, GammaConfig};
use lefschetz_core::lefschetz::check_product;
use lefschetz_core::minuscule::{
    exclusion_decompositions, orthogonal_admissible, table_lookup, ExclusionPolicy, RootSystem, TensorDecomposition,
};
use lefschetz_core::reference::{
    compare_doubled_sigma_prime, compare_odd_exclusion, count_doubled_sigma_prime, DOUBLED_SIGMA_PRIME_COUNT_TO_1E6,
    DOUBLED_SIGMA_PRIME_TO_1000, ODD_EXCLUSION_TO_1E6,
};
use lefschetz_core::sets::{doubled_sigma_prime, enumerate_set, membership, SetTag};
use lefschetz_core::stabilizer::{point_count_index, toy_profiles, verify_dimensions, FieldChoice, FiltrationProfile};
use lefschetz_core::{Fraction, MembershipCertificate, VarietyProduct};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::cache;
use crate::verify::{self, VerifyOptions};
use crate::{
    Command, CommandError, CommandOutput, DegreeBoundArgs, GammaArgs, InputArgs, MinusculeArgs, PolicyArg,
    PrefixMaxArgs, PsiArgs, RegimeArg, Report, SetsArgs, StabilizerArgs, VerifyArgs,
};

type Outcome = Result<CommandOutput, CommandError>;

fn ok(report: Report) -> Outcome {
    Ok(CommandOutput { report, failed: false })
}

fn input_error(msg: impl Into<String>) -> CommandError {
    CommandError::Input(msg.into())
}

pub(crate) fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Gamma(a) => gamma(a),
        Command::CheckLefschetz(a) => check_lefschetz(a),
        Command::Sets(a) => sets(a),
        Command::Minuscule(a) => minuscule(a),
        Command::Stabilizer(a) => stabilizer(a),
        Command::Psi(a) => psi_cmd(a),
        Command::PrefixMax(a) => prefix_max_cmd(a),
        Command::DegreeBound(a) => degree_bound(a),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn read_product(args: &InputArgs) -> Result<VarietyProduct, CommandError> {
    let text = if args.input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_error(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&args.input).map_err(|e| input_error(format!("reading {}: {e}", args.input)))?
    };
    Ok(VarietyProduct::from_json(&text)?)
}

fn product_echo(v: &VarietyProduct) -> Value {
    serde_json::from_str(&v.to_json()).expect("canonical JSON parses")
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

fn gamma(args: &GammaArgs) -> Outcome {
    let v = read_product(&args.input)?;
    let config = GammaConfig {
        max_factors: args.max_factors,
        audit: args.audit,
    };
    let r = gamma_product(&v, &config)?;
    let mut results = json!({
        "gamma": r.value,
        "gamma_decimal": r.value.to_f64(),
        "argmax": one_based(&r.argmax),
        "total_dimension": v.total_dimension().to_string(),
    });
    if let Some(audit) = &r.per_subset {
        let rows: Vec<Value> = audit
            .iter()
            .map(|s| json!({ "subset": one_based(&s.subset), "value": s.value }))
            .collect();
        results["audit"] = Value::Array(rows);
    }
    ok(Report::new("gamma", product_echo(&v), results))
}

fn check_lefschetz(args: &InputArgs) -> Outcome {
    let v = read_product(args)?;
    let verdict = check_product(&v);
    ok(Report::new(
        "check-lefschetz",
        product_echo(&v),
        serde_json::to_value(&verdict).expect("verdict serializes"),
    ))
}

fn parse_set(name: &str) -> Result<SetTag, CommandError> {
    SetTag::parse(name).ok_or_else(|| {
        input_error(format!(
            "unknown set {name:?}; expected sigma, sigma-prime or odd-exclusion"
        ))
    })
}

fn certificate_rows(elements: &[(u64, MembershipCertificate)]) -> Vec<Value> {
    elements
        .iter()
        .map(|(v, c)| json!({ "value": v, "certificate": c, "formula": c.to_string() }))
        .collect()
}

fn sets(args: &SetsArgs) -> Outcome {
    let tag = parse_set(&args.set)?;
    if let Some(x) = args.test {
        let cert = membership(tag, x);
        return ok(Report::new(
            "sets",
            json!({ "set": tag, "test": x }),
            json!({
                "value": x,
                "member": cert.is_some(),
                "formula": cert.as_ref().map(|c| c.to_string()),
                "certificate": cert,
            }),
        ));
    }
    let bound = args.bound.expect("clap requires --bound without --test");
    if args.doubled && tag != SetTag::SigmaPrime {
        return Err(input_error("--doubled only applies to sigma-prime"));
    }
    let compute = || {
        if args.doubled {
            doubled_sigma_prime(bound)
        } else {
            enumerate_set(tag, bound)
        }
    };
    let (elements, cache_status) = match &args.cache {
        None => (compute(), None),
        Some(path) => {
            let key = cache::CacheKey {
                tag,
                bound,
                doubled: args.doubled,
            };
            match cache::load(path, &key) {
                Ok(Some(elements)) => (elements, Some("hit")),
                Ok(None) => {
                    let elements = compute();
                    cache::store(path, &key, &elements)
                        .map_err(|e| input_error(format!("writing cache {path}: {e}")))?;
                    (elements, Some("written"))
                }
                Err(e) => return Err(input_error(format!("reading cache {path}: {e}"))),
            }
        }
    };

    let mut diffs = Vec::new();
    if tag == SetTag::OddExclusion {
        let b = bound.min(1_000_000);
        let mut d = serde_json::to_value(compare_odd_exclusion(b, &ODD_EXCLUSION_TO_1E6)).expect("serializes");
        d["reference"] = json!("reference odd exclusion values up to 10^6");
        diffs.push(d);
    }
    if tag == SetTag::SigmaPrime && args.doubled {
        let b = bound.min(1000);
        let reference: Vec<u64> = DOUBLED_SIGMA_PRIME_TO_1000
            .iter()
            .copied()
            .filter(|&x| x <= b)
            .collect();
        let mut d = serde_json::to_value(compare_doubled_sigma_prime(b, &reference)).expect("serializes");
        d["reference"] = json!("reference list of doubled values up to 1000");
        diffs.push(d);
        if bound >= 1_000_000 {
            let mut c = serde_json::to_value(count_doubled_sigma_prime(1_000_000, DOUBLED_SIGMA_PRIME_COUNT_TO_1E6))
                .expect("serializes");
            c["reference"] = json!("reference count of doubled values up to 10^6");
            diffs.push(c);
        }
    }

    let mut results = json!({
        "set": tag,
        "bound": bound,
        "doubled": args.doubled,
        "count": elements.len(),
        "values": elements.iter().map(|(v, _)| *v).collect::<Vec<_>>(),
        "elements": certificate_rows(&elements),
    });
    if let Some(status) = cache_status {
        results["cache"] = json!(status);
    }
    let inputs = json!({ "set": tag, "bound": bound, "doubled": args.doubled });
    ok(Report::new("sets", inputs, results).with_diffs(diffs))
}

fn decomposition_row(d: &TensorDecomposition) -> Value {
    json!({
        "root_system": d.entry.root_system,
        "rank": d.entry.rank,
        "weight": d.entry.weight_index,
        "base_dimension": d.entry.dimension.to_string(),
        "duality": d.entry.duality,
        "s": d.factor_count,
        "dimension": d.total_dimension.to_string(),
    })
}

fn minuscule(args: &MinusculeArgs) -> Outcome {
    if let Some(text) = &args.lookup {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let [rs, rank, weight] = parts.as_slice() else {
            return Err(input_error(format!("expected TYPE,RANK,WEIGHT, got {text:?}")));
        };
        let rs: RootSystem = rs.parse()?;
        let parse = |s: &str, what: &str| s.parse::<u32>().map_err(|_| input_error(format!("bad {what} {s:?}")));
        let (rank, weight) = (parse(rank, "rank")?, parse(weight, "weight")?);
        let entry = table_lookup(rs, rank, weight)?;
        let admissible_for: Vec<u32> = (1..=4)
            .filter(|&s| TensorDecomposition::new(entry.clone(), s).is_ok_and(|d| orthogonal_admissible(&d)))
            .collect();
        let results = json!({ "entry": entry, "orthogonal_for_s_in_1_to_4": admissible_for });
        return ok(Report::new(
            "minuscule",
            json!({ "root_system": rs, "rank": rank, "weight": weight }),
            results,
        ));
    }
    let bound = args.exclusions.expect("clap requires one mode");
    let policy = match args.policy {
        PolicyArg::StandardRow => ExclusionPolicy::StandardRow,
        PolicyArg::StandardOnly => ExclusionPolicy::StandardOnly,
    };
    let decomps = exclusion_decompositions(bound, policy);
    let mut dims: Vec<u64> = decomps
        .iter()
        .map(|d| u64::try_from(&d.total_dimension).expect("bounded"))
        .collect();
    dims.sort_unstable();
    dims.dedup();
    let halved: Vec<u64> = dims.iter().filter(|d| *d % 2 == 0).map(|d| d / 2).collect();
    let closed: Vec<u64> = enumerate_set(SetTag::SigmaPrime, bound / 2)
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    let diff = json!({
        "reference": "sigma-prime closed families up to bound/2",
        "only_generated": halved.iter().filter(|h| !closed.contains(h)).collect::<Vec<_>>(),
        "only_closed_families": closed.iter().filter(|h| !halved.contains(h)).collect::<Vec<_>>(),
        "odd_dimensions": dims.iter().filter(|d| *d % 2 == 1).collect::<Vec<_>>(),
    });
    let policy_name = match args.policy {
        PolicyArg::StandardRow => "standard-row",
        PolicyArg::StandardOnly => "standard-only",
    };
    let results = json!({
        "dimensions": dims,
        "halved": halved,
        "decompositions": decomps.iter().map(decomposition_row).collect::<Vec<_>>(),
    });
    ok(Report::new(
        "minuscule",
        json!({ "exclusions": bound, "policy": policy_name }),
        results,
    )
    .with_diffs(vec![diff]))
}

fn stabilizer(args: &StabilizerArgs) -> Outcome {
    if args.verify_dims {
        let field = if args.rational {
            FieldChoice::Rationals
        } else {
            FieldChoice::default()
        };
        let cases = verify_dimensions(&args.ns, args.trials, args.seed, field)?;
        let failures = cases.iter().filter(|c| !c.passed()).count();
        let inputs = json!({ "ns": args.ns, "trials": args.trials, "seed": args.seed, "rational": args.rational });
        let results = json!({ "cases": cases.len(), "failures": failures, "details": cases });
        return Ok(CommandOutput {
            report: Report::new("stabilizer", inputs, results),
            failed: failures > 0,
        });
    }
    let profiles = match (&args.ranks, &args.exponents) {
        (Some(ranks), Some(exponents)) => vec![FiltrationProfile {
            ranks: ranks.clone(),
            exponents: exponents.clone(),
            residue_degree: 1,
            isotropy: ranks.iter().map(|&r| r > 1).collect(),
        }],
        _ => toy_profiles(args.level),
    };
    let rows = profiles
        .iter()
        .map(|p| point_count_index(args.ell, args.level, p))
        .collect::<Result<Vec<_>, _>>()?;
    let inputs = json!({ "ell": args.ell, "level": args.level, "ranks": args.ranks, "exponents": args.exponents });
    let results = json!({ "point_counts": rows });
    ok(Report::new("stabilizer", inputs, results))
}

fn psi_cmd(args: &PsiArgs) -> Outcome {
    let inputs = json!({ "h": args.h, "f": args.f, "ranks": args.ranks, "delta": args.delta, "max": args.max.map(|r| format!("{r:?}").to_lowercase()) });
    if let Some(regime) = args.max {
        let regime = match regime {
            RegimeArg::Isotropic => Regime::Isotropic,
            RegimeArg::Full => Regime::Full,
        };
        let v = psi_max(args.h, &args.f, regime)?;
        return ok(Report::new(
            "psi",
            inputs,
            json!({ "regime": regime, "psi_max": Fraction(v) }),
        ));
    }
    let input = PsiInput {
        h: args.h,
        residue_degrees: args.f.clone(),
        ranks: args.ranks.clone().expect("clap requires one mode"),
        delta: args.delta,
    };
    let v = psi(&input)?;
    ok(Report::new("psi", inputs, json!({ "psi": Fraction(v) })))
}

fn parse_weights(items: &[String], name: &str) -> Result<Vec<BigRational>, CommandError> {
    items
        .iter()
        .map(|s| parse_fraction(s).ok_or_else(|| input_error(format!("--{name}: not a fraction: {s:?}"))))
        .collect()
}

fn prefix_max_cmd(args: &PrefixMaxArgs) -> Outcome {
    let a = parse_weights(&args.a, "a")?;
    let b = parse_weights(&args.b, "b")?;
    let (value, k) = prefix_max(&a, &b)?;
    let inputs = json!({
        "a": a.iter().cloned().map(Fraction).collect::<Vec<_>>(),
        "b": b.iter().cloned().map(Fraction).collect::<Vec<_>>(),
    });
    ok(Report::new(
        "prefix-max",
        inputs,
        json!({ "value": Fraction(value), "k": k }),
    ))
}

fn degree_bound(args: &DegreeBoundArgs) -> Outcome {
    if let Some(bound) = args.asymptotic {
        let check = omega_asymptotic_check(bound)?;
        return ok(Report::new(
            "degree-bound",
            json!({ "asymptotic": bound }),
            serde_json::to_value(check).expect("serializes"),
        ));
    }
    let (m, h) = (
        args.m.expect("clap requires one mode"),
        args.h.expect("clap requires h"),
    );
    let (omega, power) = degree_lower_bound(m, h)?;
    ok(Report::new(
        "degree-bound",
        json!({ "m": m, "h": h }),
        json!({ "omega": omega, "m_pow_2h": power.to_string() }),
    ))
}

fn verify_cmd(args: &VerifyArgs) -> Outcome {
    let opts = VerifyOptions {
        quick: args.quick,
        seed: args.seed,
    };
    let ids: Vec<u8> = if args.only.is_empty() {
        (1..=10).collect()
    } else {
        args.only.clone()
    };
    let criteria: Vec<verify::Criterion> = ids.iter().map(|&id| verify::run_one(id, &opts)).collect();
    let failed = criteria.iter().filter(|c| !c.passed).count();
    let summary: Vec<Value> = criteria
        .iter()
        .map(|c| json!({ "id": c.id, "status": if c.passed { "PASS" } else { "FAIL" }, "title": c.title, "elapsed_ms": c.elapsed_ms as u64 }))
        .collect();
    let results = json!({
        "passed": criteria.len() - failed,
        "failed": failed,
        "summary": summary,
        "criteria": criteria,
    });
    let inputs = json!({ "quick": args.quick, "seed": args.seed, "only": ids });
    Ok(CommandOutput {
        report: Report::new("verify", inputs, results),
        failed: failed > 0,
    })
}
