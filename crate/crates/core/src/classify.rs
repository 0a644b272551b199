//! Counting tight contact structures on `M(-2; r1, r2, r3)`: dispatch on the
//! family of the invariants and attach the inequalities that were checked.

use crate::contfrac::{shortcut_count, t_count};
use crate::convex::{
    imbalance_check, limit_analysis, mn_upper_bound, s_n1, slope_coeffs, ImbalanceCheck,
    LimitAnalysis, SlopeCoeffs, TwistingRow, WINDOW,
};
use crate::floer::{expansion, index_set, pairwise_distinct, stein_obstructed, ContactIndex};
use crate::seifert::{detect_families, Family, SeifertData};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Status {
    Exact {
        #[serde(with = "crate::json::int")]
        count: BigInt,
    },
    Infinite,
    Unknown {
        reason: String,
    },
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Exact { count } => write!(f, "exactly {count}"),
            Status::Infinite => write!(f, "infinitely many"),
            Status::Unknown { reason } => write!(f, "unknown ({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Fillability {
    AllStein,
    /// Lower bounds on Stein fillable and non-Stein-fillable structures.
    Mixed {
        stein_lower: u64,
        non_stein_lower: u64,
        all_strong: bool,
    },
    /// At most this many Stein fillable; the Giroux torsion family is not strongly fillable.
    Torsion {
        stein_at_most: u64,
    },
    NotApplicable,
}

impl fmt::Display for Fillability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fillability::AllStein => write!(f, "all Stein fillable"),
            Fillability::Mixed { stein_lower, non_stein_lower, all_strong } => write!(
                f,
                "at least {stein_lower} Stein fillable, at least {non_stein_lower} not Stein fillable{}",
                if *all_strong { ", all strongly fillable" } else { "" }
            ),
            Fillability::Torsion { stein_at_most } => write!(
                f,
                "at most {stein_at_most} Stein fillable, the rest not strongly fillable"
            ),
            Fillability::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Contact-class data for the `M_n` family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloerSummary {
    pub classes: u64,
    pub stein: u64,
    pub obstructed: Vec<ContactIndex>,
    pub pairwise_distinct: bool,
    pub all_nonzero: bool,
}

pub fn floer_summary(n: u64) -> FloerSummary {
    let n = n as i64;
    let set = index_set(n);
    FloerSummary {
        classes: set.len() as u64,
        stein: set.iter().filter(|x| x.i == 0).count() as u64,
        obstructed: set
            .iter()
            .filter(|x| stein_obstructed(x))
            .copied()
            .collect(),
        pairwise_distinct: pairwise_distinct(n),
        all_nonzero: set.iter().all(|x| !expansion(x).is_zero()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// The tag that decided the result.
    pub case: Family,
    /// Every tag that matched, in precedence order.
    pub tags: Vec<Family>,
    #[serde(with = "crate::json::int_vec")]
    pub t_values: Vec<BigInt>,
    /// Solid-torus counts after thickening each fiber to slope `(p - q)/(v - u)`.
    #[serde(with = "crate::json::int_vec")]
    pub shortcut_counts: Vec<BigInt>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<SlopeCoeffs>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub limit: Option<LimitAnalysis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imbalance: Option<ImbalanceCheck>,
    /// `s_{n1} <= -1` at every balanced twisting `n1` in the window.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub below_minus_one: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_k: Option<Vec<TwistingRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub floer: Option<FloerSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub status: Status,
    pub fillability: Fillability,
    pub certificate: Certificate,
}

impl ClassificationResult {
    pub fn count(&self) -> Option<&BigInt> {
        match &self.status {
            Status::Exact { count } => Some(count),
            _ => None,
        }
    }
}

/// Twistings `n1` in the window for which the vertical annulus between
/// `V_1` and `V_2` can be made to have the same number of dividing curves on both ends.
pub fn balanced_twistings(sd: &SeifertData) -> Vec<BigInt> {
    let (c1, c2) = (sd.conv(0), sd.conv(1));
    (1..=WINDOW)
        .map(|k| BigInt::from(-k))
        .filter(|n1| {
            let (n2, rem) = (&c1.q * n1 + &c1.v - &c2.v).div_rem(&c2.q);
            rem.is_zero() && n2.is_negative()
        })
        .collect()
}

fn below_minus_one(sd: &SeifertData, coeffs: &SlopeCoeffs) -> bool {
    let minus_one = crate::slope::Slope::integer(-1);
    balanced_twistings(sd)
        .iter()
        .all(|n1| matches!(s_n1(coeffs, sd, n1), Ok(s) if s <= minus_one))
}

pub fn classify(sd: &SeifertData) -> ClassificationResult {
    let tags = detect_families(sd);
    let case = tags[0].clone();
    let t_values: Vec<BigInt> = sd
        .r()
        .iter()
        .map(|r| t_count(r).expect("r in (0,1)"))
        .collect();
    let shortcut_counts: Vec<BigInt> = sd
        .r()
        .iter()
        .map(|r| shortcut_count(r).expect("r in (0,1)"))
        .collect();
    let mut cert = Certificate {
        case: case.clone(),
        tags,
        t_values,
        shortcut_counts,
        coeffs: None,
        limit: None,
        imbalance: None,
        below_minus_one: None,
        per_k: None,
        floer: None,
    };
    let unknown = |reason: &str, cert| ClassificationResult {
        status: Status::Unknown {
            reason: reason.into(),
        },
        fillability: Fillability::NotApplicable,
        certificate: cert,
    };
    match case {
        Family::WrongE0 { .. } => unknown("only e0 = -2 is handled", cert),
        Family::TorusBundle { .. } => ClassificationResult {
            status: Status::Infinite,
            fillability: Fillability::Torsion { stein_at_most: 1 },
            certificate: cert,
        },
        Family::Mn { n } => {
            let bound = mn_upper_bound(n).expect("M_n slopes are admissible");
            cert.coeffs = Some(slope_coeffs(sd));
            cert.per_k = Some(bound.per_k);
            let floer = floer_summary(n);
            let fillability = Fillability::Mixed {
                stein_lower: floer.stein,
                non_stein_lower: floer.obstructed.len() as u64,
                all_strong: true,
            };
            cert.floer = Some(floer);
            ClassificationResult {
                status: Status::Exact { count: bound.total },
                fillability,
                certificate: cert,
            }
        }
        Family::KFamily { k } => {
            let coeffs = slope_coeffs(sd);
            if k >= 8 {
                cert.below_minus_one = Some(below_minus_one(sd, &coeffs));
            }
            cert.coeffs = Some(coeffs);
            ClassificationResult {
                status: Status::Exact {
                    count: BigInt::one(),
                },
                fillability: Fillability::AllStein,
                certificate: cert,
            }
        }
        Family::SumAtLeastNineQuarters | Family::SumBelowTwo => {
            let coeffs = slope_coeffs(sd);
            cert.limit = Some(limit_analysis(&coeffs, sd).expect("outside the gap"));
            if case == Family::SumBelowTwo {
                cert.imbalance = Some(imbalance_check(sd));
            }
            cert.coeffs = Some(coeffs);
            let count = cert.t_values.iter().product();
            ClassificationResult {
                status: Status::Exact { count },
                fillability: Fillability::AllStein,
                certificate: cert,
            }
        }
        Family::DegenerateSumTwo => unknown("higher genus periodic surface bundle", cert),
        Family::Gap => unknown("sum in (2, 9/4) outside the known families", cert),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(t: &str) -> ClassificationResult {
        classify(&t.parse().unwrap())
    }

    fn exact(n: i64) -> Status {
        Status::Exact { count: n.into() }
    }

    #[test]
    fn examples() {
        let r = run("-2; 1/2, 2/3, 11/13");
        assert_eq!(r.status, exact(3));
        assert_eq!(
            r.fillability,
            Fillability::Mixed {
                stein_lower: 2,
                non_stein_lower: 1,
                all_strong: true
            }
        );
        assert_eq!(r.certificate.case, Family::Mn { n: 2 });

        let r = run("-2; 1/2, 2/3, 6/7");
        assert_eq!(r.status, exact(1));
        assert_eq!(
            r.certificate.tags,
            vec![Family::Mn { n: 1 }, Family::KFamily { k: 6 }]
        );

        let r = run("-2; 1/2, 2/3, 9/11");
        assert_eq!((r.status, r.fillability), (exact(2), Fillability::AllStein));
        assert_eq!(r.certificate.case, Family::SumBelowTwo);

        let r = run("-2; 7/9, 7/9, 7/9");
        assert_eq!(r.status, exact(8));
        assert_eq!(r.certificate.case, Family::SumAtLeastNineQuarters);

        let r = run("-2; 1/2, 2/3, 5/6");
        assert_eq!(
            (r.status, r.fillability),
            (Status::Infinite, Fillability::Torsion { stein_at_most: 1 })
        );

        let r = run("-2; 1/2, 3/4, 4/5");
        assert!(matches!(r.status, Status::Unknown { .. }));
        assert_eq!(r.certificate.case, Family::Gap);

        assert!(matches!(
            run("-1; 1/2, 1/2, 1/2").status,
            Status::Unknown { .. }
        ));
    }

    #[test]
    fn k_family() {
        for k in 6..40u64 {
            let r = run(&format!("-2; 1/2, 2/3, {k}/{}", k + 1));
            assert_eq!(r.status, exact(1));
            if k >= 8 {
                assert_eq!(r.certificate.below_minus_one, Some(true), "k = {k}");
            }
        }
    }

    #[test]
    fn permutation_invariance() {
        let a = run("-2; 2/3, 1/2, 11/13");
        let b = run("-2; 11/13, 2/3, 1/2");
        assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip() {
        for t in [
            "-2; 1/2, 2/3, 11/13",
            "-2; 1/3, 1/3, 1/2",
            "-3; 1/2, 1/2, 1/2",
            "-2; 1/2, 2/3, 5/6",
        ] {
            let r = run(t);
            let j = serde_json::to_string(&r).unwrap();
            let back: ClassificationResult = serde_json::from_str(&j).unwrap();
            assert_eq!(back, r);
            assert_eq!(serde_json::to_string(&back).unwrap(), j);
        }
    }
}
