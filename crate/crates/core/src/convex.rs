//! Slope bookkeeping for convex tori around the singular fibers: measured
//! boundary slopes, the edge-rounding correction, the closed-form slope on
//! `∂V_3` as a function of the twisting of `V_1`, and the upper-bound table
//! for the `M_n` family.
//!
//! Fiber indices are 0-based: fiber 0 is `V_1`, fiber 2 is `V_3`.

use crate::contfrac::honda_count;
use crate::error::{Error, Result};
use crate::seifert::{m_n, SeifertData};
use crate::slope::{apply_mat, Slope};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Twisting window used by the monotonicity and imbalance checks.
pub const WINDOW: i64 = 100;

fn ri(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

fn finite(s: &Slope) -> Result<BigRational> {
    s.to_rational()
        .ok_or_else(|| Error::ImbalancedDividingSets(s.to_string(), "inf".into()))
}

fn negative(n: &BigInt) -> Result<()> {
    if n.is_negative() {
        Ok(())
    } else {
        Err(Error::NonNegativeTwisting(n.to_string()))
    }
}

/// Slope of `∂V_i` with boundary slope `1/n` (`n < 0`), read in `-∂(M \ V_i)`.
pub fn measured_slope(fiber: usize, sd: &SeifertData, n: &BigInt) -> Result<Slope> {
    negative(n)?;
    let s = apply_mat(&sd.frame(fiber), &Slope::integer(n.clone()).recip());
    debug_assert!(!s.is_infinite());
    Ok(s)
}

/// Slope after cutting along a vertical annulus between two tori whose
/// dividing sets both meet it `|delta|` times and rounding the edges:
/// `s_a + s_b - 1/delta`.
pub fn rounded_slope(sa: &Slope, sb: &Slope, delta: &BigInt) -> Result<Slope> {
    if delta.is_zero() {
        return Err(Error::ImbalancedDividingSets(
            sa.to_string(),
            delta.to_string(),
        ));
    }
    let d = ri(delta);
    for s in [sa, sb] {
        if !(finite(s)? * &d).is_integer() {
            return Err(Error::ImbalancedDividingSets(
                s.to_string(),
                delta.to_string(),
            ));
        }
    }
    Ok(Slope::from_rational(
        &(finite(sa)? + finite(sb)? - d.recip()),
    ))
}

/// Transfers a slope on the rounded torus `∂(M \ (V_1 ∪ V_2 ∪ A))` to `∂V_3`.
/// The rounded torus is `-∂(M \ V_3)` with reversed orientation, so the slope
/// is reflected before applying the inverse frame of the third fiber.
pub fn to_third_boundary(sd: &SeifertData, sigma: &Slope) -> Slope {
    apply_mat(&sd.frame(2).inverse(), &sigma.negate())
}

/// The balanced case of the vertical annulus between `V_1` and `V_2`:
/// requires `q1 n1 + v1 = q2 n2 + v2` and returns the resulting slope on `∂V_3`.
pub fn balanced_third_slope(sd: &SeifertData, n1: &BigInt, n2: &BigInt) -> Result<Slope> {
    let (c1, c2) = (sd.conv(0), sd.conv(1));
    let d1 = &c1.q * n1 + &c1.v;
    let d2 = &c2.q * n2 + &c2.v;
    if d1 != d2 {
        return Err(Error::ImbalancedDividingSets(
            d1.to_string(),
            d2.to_string(),
        ));
    }
    let s1 = measured_slope(0, sd, n1)?;
    let s2 = measured_slope(1, sd, n2)?;
    Ok(to_third_boundary(sd, &rounded_slope(&s1, &s2, &d1)?))
}

/// The rational coefficients `A, C, F, D` of the closed-form slope on `∂V_3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeCoeffs {
    #[serde(with = "crate::json::rational")]
    pub a: BigRational,
    #[serde(with = "crate::json::rational")]
    pub c: BigRational,
    #[serde(with = "crate::json::rational")]
    pub f: BigRational,
    #[serde(with = "crate::json::rational")]
    pub d: BigRational,
}

pub fn slope_coeffs(sd: &SeifertData) -> SlopeCoeffs {
    let two = BigRational::from_integer(2.into());
    let r = |i| sd.r_rational(i);
    let (c1, c2, c3) = (sd.conv(0), sd.conv(1), sd.conv(2));
    let u3_v3 = BigRational::new(c3.u.clone(), c3.v.clone());
    let v1_q1 = BigRational::new(c1.v.clone(), c1.q.clone());
    let tail = BigRational::new(&c1.u * &c2.q + &c2.q - 1, &c1.q * &c2.q);
    SlopeCoeffs {
        a: r(0) + r(1) + r(2) - &two,
        c: &two - r(0) - r(1) - &u3_v3,
        f: (r(2) + r(1) - &two) * &v1_q1 + &tail,
        d: (&two - r(1) - &u3_v3) * &v1_q1 - &tail,
    }
}

/// `s_{n1} = (A n1 + F) q3 / ((C n1 + D) v3)`.
pub fn s_n1(coeffs: &SlopeCoeffs, sd: &SeifertData, n1: &BigInt) -> Result<Slope> {
    negative(n1)?;
    let c3 = sd.conv(2);
    let n = ri(n1);
    let num = (&coeffs.a * &n + &coeffs.f) * ri(&c3.q);
    let den = (&coeffs.c * &n + &coeffs.d) * ri(&c3.v);
    if den.is_zero() {
        return Err(Error::SlopeUndefined(n1.to_string()));
    }
    Ok(Slope::from_rational(&(num / den)))
}

/// Behaviour of `s_{n1}` as `n1 -> -inf`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitAnalysis {
    /// `A q3 / (C v3)`.
    pub limit: Slope,
    /// `s_{n1}` never decreases as `n1` runs from `-1` down to `-WINDOW`.
    pub increasing: bool,
    /// Degenerate case: `s_{n1}` does not depend on `n1`.
    pub constant: bool,
    /// Every computed value lies at or below the limit and the gap shrinks.
    pub approaches_from_below: bool,
    /// Twistings in the window where `C n1 + D = 0`.
    #[serde(with = "crate::json::int_vec")]
    pub poles: Vec<BigInt>,
    /// `(p3 - q3)/(v3 - u3)`, the slope that makes `s_3 = 0`.
    pub threshold: Slope,
    /// `A q3/(C v3) <= (p3 - q3)/(v3 - u3)`.
    pub threshold_ok: bool,
    /// `p1/q1 + p2/q2 <= 1`, or `A > 0` and `C < 0`.
    pub threshold_criterion: bool,
}

/// Limit, monotonicity and threshold data for the closed-form slope. Only
/// defined outside the gap `0 <= A < 1/4`.
pub fn limit_analysis(coeffs: &SlopeCoeffs, sd: &SeifertData) -> Result<LimitAnalysis> {
    let quarter = BigRational::new(1.into(), 4.into());
    if !coeffs.a.is_negative() && coeffs.a < quarter {
        return Err(Error::GapRegion(coeffs.a.to_string()));
    }
    let c3 = sd.conv(2);
    let limit_num = &coeffs.a * ri(&c3.q);
    let limit_den = &coeffs.c * ri(&c3.v);
    let limit = if limit_den.is_zero() {
        Slope::infinity()
    } else {
        Slope::from_rational(&(&limit_num / &limit_den))
    };

    // s_{n1} = (a n1 + f)/(c n1 + d) over a common denominator; values are
    // kept as (numerator, positive denominator) pairs and compared crosswise.
    let scaled = [
        &coeffs.a * ri(&c3.q),
        &coeffs.f * ri(&c3.q),
        &coeffs.c * ri(&c3.v),
        &coeffs.d * ri(&c3.v),
    ];
    let l = scaled
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let [a, f, c, d] = scaled.map(|x| (x * ri(&l)).to_integer());
    let mut poles = Vec::new();
    let mut values: Vec<(BigInt, BigInt)> = Vec::new();
    for k in 1..=WINDOW {
        let n1 = BigInt::from(-k);
        let (num, den) = (&a * &n1 + &f, &c * &n1 + &d);
        if den.is_zero() {
            poles.push(n1);
        } else if den.is_negative() {
            values.push((-num, -den));
        } else {
            values.push((num, den));
        }
    }
    let cmp = |x: &(BigInt, BigInt), y: &(BigInt, BigInt)| (&x.0 * &y.1).cmp(&(&y.0 * &x.1));
    let pairs = || values.windows(2).map(|w| (&w[0], &w[1]));
    let constant = pairs().all(|(x, y)| cmp(x, y).is_eq());
    let increasing = constant || pairs().all(|(x, y)| cmp(x, y).is_lt());
    let approaches_from_below = if c.is_zero() {
        false
    } else {
        let lim = if c.is_negative() {
            (-&a, -&c)
        } else {
            (a.clone(), c.clone())
        };
        // |lim - x| scaled by den(lim) * den(x).
        let gap = |x: &(BigInt, BigInt)| (&lim.0 * &x.1 - &x.0 * &lim.1).abs();
        values.iter().all(|v| cmp(v, &lim).is_le())
            && pairs().all(|(x, y)| gap(y) * &x.1 <= gap(x) * &y.1)
    };

    let threshold = Slope::new(&c3.p - &c3.q, &c3.v - &c3.u).expect("v3 > u3");
    let threshold_ok = limit <= threshold && !limit.is_infinite();
    let one = BigRational::one();
    let threshold_criterion = sd.r_rational(0) + sd.r_rational(1) <= one
        || (coeffs.a.is_positive() && coeffs.c.is_negative());
    Ok(LimitAnalysis {
        limit,
        increasing,
        constant,
        approaches_from_below,
        poles,
        threshold,
        threshold_ok,
        threshold_criterion,
    })
}

/// One row of the `M_n` upper-bound table: maximal twisting `-(6k+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistingRow {
    pub k: u64,
    /// Maximal twisting number `-(6k + 1)`.
    #[serde(with = "crate::json::int")]
    pub twisting: BigInt,
    #[serde(with = "crate::json::int")]
    pub m1: BigInt,
    #[serde(with = "crate::json::int")]
    pub m2: BigInt,
    pub rounded: Slope,
    pub boundary_slope: Slope,
    #[serde(with = "crate::json::int")]
    pub count: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MnBound {
    pub n: u64,
    pub per_k: Vec<TwistingRow>,
    #[serde(with = "crate::json::int")]
    pub total: BigInt,
}

/// Upper bound on tight structures on `M_n`, assembled from the solid-torus
/// counts on `V_3` for each admissible maximal twisting `-(6k+1)`, `0 <= k < n`.
pub fn mn_upper_bound(n: u64) -> Result<MnBound> {
    assert!(n >= 1, "n must be positive");
    let sd = m_n(n);
    let mut per_k = Vec::with_capacity(n as usize);
    let mut total = BigInt::zero();
    for k in 0..n {
        let kk = BigInt::from(k);
        let m1 = -(&kk * BigInt::from(3)) - 1;
        let m2 = -(&kk * BigInt::from(2)) - 1;
        let s1 = measured_slope(0, &sd, &m1)?;
        let s2 = measured_slope(1, &sd, &m2)?;
        let (c1, c2) = (sd.conv(0), sd.conv(1));
        let delta = &c1.q * &m1 + &c1.v;
        debug_assert_eq!(delta, &c2.q * &m2 + &c2.v);
        let rounded = rounded_slope(&s1, &s2, &delta)?;
        let boundary_slope = to_third_boundary(&sd, &rounded);
        let count = honda_count(&boundary_slope)?;
        total += &count;
        per_k.push(TwistingRow {
            k,
            twisting: -(&kk * BigInt::from(6)) - 1,
            m1,
            m2,
            rounded,
            boundary_slope,
            count,
        });
    }
    Ok(MnBound { n, per_k, total })
}

/// Whether a bypass along a ruling curve of slope `ruling` increases the
/// twisting number `n` of a Legendrian core: `1/ruling >= n + 1`.
pub fn twist_step_allowed(n: &BigInt, ruling: &Slope) -> Result<bool> {
    if ruling.num().is_zero() {
        return Err(Error::ZeroRuling);
    }
    let inv = ruling.recip().to_rational().expect("ruling is nonzero");
    Ok(inv >= ri(&(n + 1)))
}

/// Imbalance between the intersection numbers of two dividing sets with an annulus.
pub fn imbalanced(a: &BigInt, b: &BigInt) -> bool {
    a.abs() > b.abs()
}

/// The inequality driving the thickening of `V_1` against the torus of slope
/// `p1/q1 + p2/q2 - 1`: `|q1 n1 + v1| > q1 q2` for `-WINDOW <= n1 < -q2`
/// (which specializes to `|q n1 + v1| > q` for `n1 < -1` when `q1 = q2 = q`,
/// since the slope's denominator is then `q`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImbalanceCheck {
    pub equal_denominators: bool,
    #[serde(with = "crate::json::int")]
    pub bound: BigInt,
    #[serde(with = "crate::json::int")]
    pub below: BigInt,
    pub holds: bool,
}

pub fn imbalance_check(sd: &SeifertData) -> ImbalanceCheck {
    let (c1, c2) = (sd.conv(0), sd.conv(1));
    let equal_denominators = c1.q == c2.q;
    let (bound, below) = if equal_denominators {
        (c1.q.clone(), BigInt::from(-1))
    } else {
        (&c1.q * &c2.q, -c2.q.clone())
    };
    let mut holds = true;
    let mut n1 = BigInt::from(-WINDOW);
    while n1 < below {
        holds &= imbalanced(&(&c1.q * &n1 + &c1.v), &bound);
        n1 += 1;
    }
    ImbalanceCheck {
        equal_denominators,
        bound,
        below,
        holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    fn sd(t: &str) -> SeifertData {
        t.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn measured_slopes_on_mn() {
        for n in 1..6u64 {
            let m = m_n(n);
            for t in 1..30i64 {
                let x = BigInt::from(-t);
                assert_eq!(
                    measured_slope(0, &m, &x).unwrap(),
                    Slope::new(t, -2 * t + 1).unwrap()
                );
                assert_eq!(
                    measured_slope(1, &m, &x).unwrap(),
                    Slope::new(-t + 1, -3 * t + 2).unwrap()
                );
            }
        }
        assert!(matches!(
            measured_slope(0, &m_n(1), &BigInt::zero()),
            Err(Error::NonNegativeTwisting(_))
        ));
    }

    #[test]
    fn rounding() {
        for k in 0..10i64 {
            let sa = Slope::new(-(3 * k + 1), 6 * k + 1).unwrap();
            let sb = Slope::new(2 * k, 6 * k + 1).unwrap();
            let got = rounded_slope(&sa, &sb, &BigInt::from(-6 * k - 1)).unwrap();
            assert_eq!(got, Slope::new(-k, 6 * k + 1).unwrap());
        }
        assert_eq!(
            rounded_slope(&s("0"), &s("0"), &BigInt::from(-1)).unwrap(),
            s("1")
        );
        assert!(matches!(
            rounded_slope(&s("1/3"), &s("0"), &BigInt::from(2)),
            Err(Error::ImbalancedDividingSets(..))
        ));
    }

    #[test]
    fn coefficients() {
        let c = slope_coeffs(&sd("-2; 1/2, 2/3, 7/8"));
        assert_eq!(c.a, q(1, 24));
        assert_eq!(c.c, q(-1, 42));
        assert_eq!(c.f, q(5, 48));
        assert_eq!(c.d, q(-2, 21));
        // A + C = p3/q3 - u3/v3 = 1/(q3 v3).
        assert_eq!(&c.a + &c.c, q(1, 56));
        assert!(slope_coeffs(&sd("-2; 1/2, 2/3, 5/6")).a.is_zero());
    }

    #[test]
    fn closed_form_on_k_family() {
        let m = sd("-2; 1/2, 2/3, 7/8");
        let c = slope_coeffs(&m);
        assert_eq!(s_n1(&c, &m, &BigInt::from(-1)).unwrap(), s("-1"));
        assert!(matches!(
            s_n1(&c, &m, &BigInt::from(1)),
            Err(Error::NonNegativeTwisting(_))
        ));
    }

    #[test]
    fn closed_form_pole() {
        let m = sd("-2; 5/8, 4/5, 5/6");
        let c = slope_coeffs(&m);
        assert!(matches!(
            s_n1(&c, &m, &BigInt::from(-1)),
            Err(Error::SlopeUndefined(_))
        ));
        let la = limit_analysis(&c, &m).unwrap();
        assert_eq!(la.poles, vec![BigInt::from(-1)]);
        assert!(la.increasing);
    }

    #[test]
    fn limits() {
        let m = sd("-2; 7/9, 7/9, 7/9");
        let c = slope_coeffs(&m);
        assert_eq!(c.a, q(1, 3));
        assert!(c.c.is_negative());
        let la = limit_analysis(&c, &m).unwrap();
        assert!(la.threshold_ok && la.threshold_criterion && la.increasing && !la.constant);
        assert!(la.approaches_from_below);

        let m = sd("-2; 1/3, 1/3, 1/2");
        let c = slope_coeffs(&m);
        assert!(c.a.is_negative());
        let la = limit_analysis(&c, &m).unwrap();
        assert_eq!(la.limit, s("-5/4"));
        assert_eq!(la.threshold, s("-1"));
        assert!(la.threshold_ok && la.threshold_criterion);

        let m = sd("-2; 1/2, 1/2, 1/2");
        let la = limit_analysis(&slope_coeffs(&m), &m).unwrap();
        assert!(la.constant && la.increasing);

        let m = sd("-2; 1/2, 2/3, 7/8");
        assert!(matches!(
            limit_analysis(&slope_coeffs(&m), &m),
            Err(Error::GapRegion(_))
        ));
    }

    #[test]
    fn mn_bounds() {
        let b = mn_upper_bound(1).unwrap();
        assert_eq!(b.per_k.len(), 1);
        assert_eq!(
            (b.per_k[0].boundary_slope.clone(), b.per_k[0].count.clone()),
            (s("-1"), 1.into())
        );
        assert_eq!(b.total, 1.into());
        let b = mn_upper_bound(2).unwrap();
        let rows: Vec<(Slope, BigInt)> = b
            .per_k
            .iter()
            .map(|r| (r.boundary_slope.clone(), r.count.clone()))
            .collect();
        assert_eq!(rows, vec![(s("-2"), 2.into()), (s("-1"), 1.into())]);
        assert_eq!(b.total, 3.into());
        assert_eq!(mn_upper_bound(5).unwrap().total, 15.into());
    }

    #[test]
    fn twist_steps() {
        assert!(twist_step_allowed(&BigInt::from(-4), &Slope::infinity()).unwrap());
        assert!(!twist_step_allowed(&BigInt::from(-1), &s("-1")).unwrap());
        assert!(twist_step_allowed(&BigInt::from(-3), &s("-1/2")).unwrap());
        assert!(matches!(
            twist_step_allowed(&BigInt::from(-3), &s("0")),
            Err(Error::ZeroRuling)
        ));
    }

    #[test]
    fn balanced_annulus() {
        let m = m_n(4);
        // q1 n1 + v1 = 2 n1 + 1 and q2 n2 + v2 = 3 n2 + 2 agree at n1 = -4, n2 = -3.
        let got = balanced_third_slope(&m, &BigInt::from(-4), &BigInt::from(-3)).unwrap();
        let c = slope_coeffs(&m);
        assert_eq!(got, s_n1(&c, &m, &BigInt::from(-4)).unwrap());
        assert!(matches!(
            balanced_third_slope(&m, &BigInt::from(-4), &BigInt::from(-2)),
            Err(Error::ImbalancedDividingSets(..))
        ));
    }

    #[test]
    fn imbalance_inequalities() {
        assert!(imbalanced(&BigInt::from(-7), &BigInt::from(6)));
        assert!(!imbalanced(&BigInt::from(6), &BigInt::from(-6)));
        assert!(imbalance_check(&sd("-2; 3/4, 3/4, 1/5")).holds);
        assert!(imbalance_check(&sd("-2; 2/3, 3/4, 1/5")).holds);
    }

    fn arb_unit() -> impl Strategy<Value = Slope> {
        (2i64..=12).prop_flat_map(|q| (1..q).prop_map(move |p| Slope::new(p, q).unwrap()))
    }

    proptest! {
        #[test]
        fn closed_form_matches_the_annulus_route(
            r in [arb_unit(), arb_unit(), arb_unit()],
            n1 in -40i64..=-1,
        ) {
            let m = SeifertData::new(-2, r).unwrap();
            let (c1, c2) = (m.conv(0), m.conv(1));
            let (n2, rem) = (&c1.q * n1 + &c1.v - &c2.v).div_rem(&c2.q);
            prop_assume!(rem.is_zero() && n2.is_negative());
            let coeffs = slope_coeffs(&m);
            if let Ok(closed) = s_n1(&coeffs, &m, &BigInt::from(n1)) {
                let step = balanced_third_slope(&m, &BigInt::from(n1), &n2).unwrap();
                prop_assert_eq!(closed, step);
            }
        }
    }
}
