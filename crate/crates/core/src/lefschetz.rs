//! Decidable sufficient criteria for a factor to be fully of Lefschetz type.
//!
//! Two clauses are checked for each simple factor:
//!
//! 1. types I/II: `h` odd or `h = 2`; type III: `h` odd and outside the odd
//!    exclusion set `{½·C(2^{m+2}, 2^{m+1})}`;
//! 2. `e = 1` and `h ∉ Σ` (types I/II) or `h ∉ Σ′` (type III).
//!
//! The clauses are sufficient, not necessary, so a factor that meets neither
//! is reported as [`LefschetzStatus::Unknown`], never as false. For clause 2
//! the value tested against Σ is `h` itself, even though Σ is written in
//! terms of a dimension `g`.

use serde::Serialize;

use crate::sets::{in_odd_exclusion, in_sigma, in_sigma_prime, MembershipCertificate};
use crate::variety::{AlbertType, SimpleFactor, VarietyProduct};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LefschetzStatus {
    Proven,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Clause {
    /// Parity condition on `h`.
    #[serde(rename = "clause-1")]
    Parity,
    /// `e = 1` and `h` outside the exceptional set.
    #[serde(rename = "clause-2")]
    CenterDegreeOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzVerdict {
    pub status: LefschetzStatus,
    /// Lowest-numbered clause that applies, if any.
    pub criterion: Option<Clause>,
    pub reasons: Vec<String>,
    /// Certificates for every membership claim made in `reasons`.
    pub certificates: Vec<MembershipCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductVerdict {
    pub status: LefschetzStatus,
    pub reasons: Vec<String>,
    pub factors: Vec<LefschetzVerdict>,
}

fn parity_clause(f: &SimpleFactor, reasons: &mut Vec<String>, certs: &mut Vec<MembershipCertificate>) -> bool {
    let h = f.h();
    match f.albert() {
        AlbertType::I | AlbertType::II => {
            let ok = h % 2 == 1 || h == 2;
            reasons.push(if ok {
                format!("clause 1 holds: h = {h} is odd or equal to 2")
            } else {
                format!("clause 1 fails: h = {h} is even and not 2")
            });
            ok
        }
        AlbertType::III => {
            if h.is_multiple_of(2) {
                reasons.push(format!("clause 1 fails: h = {h} is even"));
                return false;
            }
            match in_odd_exclusion(h) {
                Some(c) => {
                    reasons.push(format!("clause 1 fails: h = {h} is in the odd exclusion set ({c})"));
                    certs.push(c);
                    false
                }
                None => {
                    reasons.push(format!(
                        "clause 1 holds: h = {h} is odd and not of the form C(2^(m+2),2^(m+1))/2"
                    ));
                    true
                }
            }
        }
    }
}

fn center_clause(f: &SimpleFactor, reasons: &mut Vec<String>, certs: &mut Vec<MembershipCertificate>) -> bool {
    let (e, h) = (f.e(), f.h());
    if e != 1 {
        reasons.push(format!("clause 2 fails: e = {e} is not 1"));
        return false;
    }
    let (name, hit) = match f.albert() {
        AlbertType::I | AlbertType::II => ("Sigma", in_sigma(h)),
        AlbertType::III => ("Sigma'", in_sigma_prime(h)),
    };
    match hit {
        Some(c) => {
            reasons.push(format!("clause 2 fails: h = {h} is in {name} ({c})"));
            certs.push(c);
            false
        }
        None => {
            reasons.push(format!(
                "clause 2 holds: e = 1 and h = {h} is not in {name} (exhaustive search)"
            ));
            true
        }
    }
}

/// Evaluate both clauses for one simple factor.
pub fn check_factor(f: &SimpleFactor) -> LefschetzVerdict {
    let mut reasons = Vec::new();
    let mut certificates = Vec::new();
    let first = parity_clause(f, &mut reasons, &mut certificates);
    let second = center_clause(f, &mut reasons, &mut certificates);
    let criterion = if first {
        Some(Clause::Parity)
    } else if second {
        Some(Clause::CenterDegreeOne)
    } else {
        None
    };
    LefschetzVerdict {
        status: if criterion.is_some() {
            LefschetzStatus::Proven
        } else {
            LefschetzStatus::Unknown
        },
        criterion,
        reasons,
        certificates,
    }
}

/// A product is proven exactly when every factor is.
pub fn check_product(v: &VarietyProduct) -> ProductVerdict {
    let factors: Vec<LefschetzVerdict> = v.factors().iter().map(check_factor).collect();
    let pending: Vec<usize> = factors
        .iter()
        .enumerate()
        .filter(|(_, f)| f.status == LefschetzStatus::Unknown)
        .map(|(i, _)| i + 1)
        .collect();
    let (status, reasons) = if pending.is_empty() {
        (
            LefschetzStatus::Proven,
            vec!["every factor meets a criterion".to_string()],
        )
    } else {
        let list: Vec<String> = pending.iter().map(|i| i.to_string()).collect();
        (
            LefschetzStatus::Unknown,
            vec![format!("no criterion applies to factor(s) {}", list.join(", "))],
        )
    };
    ProductVerdict {
        status,
        reasons,
        factors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::Family;
    use AlbertType::*;

    fn f(t: AlbertType, e: u64, h: u64) -> SimpleFactor {
        SimpleFactor::simple(t, e, h).unwrap()
    }

    #[test]
    fn factor_examples() {
        let v = check_factor(&f(III, 2, 5));
        assert_eq!((v.status, v.criterion), (LefschetzStatus::Proven, Some(Clause::Parity)));

        let v = check_factor(&f(III, 1, 3));
        assert_eq!((v.status, v.criterion), (LefschetzStatus::Unknown, None));
        let fams: Vec<Family> = v.certificates.iter().map(|c| c.family).collect();
        assert_eq!(fams, vec![Family::DyadicBinomial, Family::F5]);

        let v = check_factor(&f(I, 1, 2));
        assert_eq!((v.status, v.criterion), (LefschetzStatus::Proven, Some(Clause::Parity)));

        let v = check_factor(&f(III, 1, 4));
        assert_eq!(v.status, LefschetzStatus::Unknown);
        assert_eq!(v.certificates[0].family, Family::F1);
    }

    #[test]
    fn second_clause_alone() {
        // h = 6 is even, 6 ∉ Σ′
        let v = check_factor(&f(III, 1, 6));
        assert_eq!(v.criterion, Some(Clause::CenterDegreeOne));
        // h = 6 ∉ Σ for type I
        let v = check_factor(&f(I, 1, 6));
        assert_eq!(v.criterion, Some(Clause::CenterDegreeOne));
        // h = 4 ∈ Σ
        let v = check_factor(&f(II, 1, 4));
        assert_eq!(v.status, LefschetzStatus::Unknown);
        // both hold: report clause 1
        let v = check_factor(&f(I, 1, 7));
        assert_eq!(v.criterion, Some(Clause::Parity));
    }

    #[test]
    fn product_examples() {
        let p = VarietyProduct::new(vec![f(I, 1, 2), f(III, 2, 5)]).unwrap();
        assert_eq!(check_product(&p).status, LefschetzStatus::Proven);
        let p = VarietyProduct::new(vec![f(I, 1, 2), f(III, 1, 4)]).unwrap();
        let v = check_product(&p);
        assert_eq!(v.status, LefschetzStatus::Unknown);
        assert!(v.reasons[0].ends_with("factor(s) 2"));
    }

    #[test]
    fn verdict_json() {
        let v = serde_json::to_value(check_factor(&f(III, 2, 5))).unwrap();
        assert_eq!(v["status"], "proven");
        assert_eq!(v["criterion"], "clause-1");
    }
}
