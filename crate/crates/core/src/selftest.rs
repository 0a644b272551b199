//! Exhaustive identity checks over small inputs, run by `sfs-tight selftest`.

use crate::classify::{classify, Status};
use crate::contfrac::{
    convergents, eval, expand, honda_count, reverse_shift, shortcut_count, t_count,
};
use crate::convex::{balanced_third_slope, mn_upper_bound, s_n1, slope_coeffs};
use crate::farey::{bypass_attach, bypass_oracle, default_oracle_bound, Side};
use crate::floer::{expansion, index_set, laurent_image, pairwise_distinct, stein_obstructed};
use crate::seifert::{h1_order, linking_matrix, m_n, SeifertData};
use crate::slope::Slope;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suite {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl Suite {
    fn new(name: &str) -> Suite {
        Suite {
            name: name.into(),
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Reduced fractions `p/q` with `0 < p < q <= max_q`.
pub fn unit_fractions(max_q: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    for q in 2..=max_q {
        for p in 1..q {
            if p.gcd(&q) == 1 {
                out.push(Slope::new(p, q).expect("q > 0"));
            }
        }
    }
    out
}

/// Sorted triples of reduced fractions in `(0,1)` with denominators at most `max_q`.
pub fn sorted_triples(max_q: i64) -> Vec<[Slope; 3]> {
    let f = unit_fractions(max_q);
    let mut out = Vec::new();
    for a in 0..f.len() {
        for b in a..f.len() {
            for c in b..f.len() {
                let mut t = [f[a].clone(), f[b].clone(), f[c].clone()];
                t.sort();
                out.push(t);
            }
        }
    }
    out
}

pub fn continued_fractions(max_q: i64) -> Suite {
    let mut s = Suite::new("continued fractions and convergents");
    for r in unit_fractions(max_q) {
        let x = Slope::new(-r.den(), r.num().clone()).expect("p > 0");
        let cf = expand(&x).expect("x < -1");
        s.check(eval(&cf).ok() == Some(x.clone()), || {
            format!("eval(expand({x}))")
        });
        let c = convergents(&x).expect("x < -1");
        s.check(&c.p * &c.v - &c.q * &c.u == BigInt::from(1), || {
            format!("pv - qu at {x}")
        });
        let target = Slope::new(&c.p - &c.q, &c.v - &c.u);
        s.check(eval(&reverse_shift(&cf)).ok() == target, || {
            format!("reverse shift at {x}")
        });
        s.check(shortcut_count(&r).ok() == t_count(&r).ok(), || {
            format!("shortcut count at {r}")
        });
    }
    s
}

/// Slopes with denominator at most `max_q` and `|x| <= max_abs`, plus `inf`.
pub fn bounded_slopes(max_q: i64, max_abs: i64) -> Vec<Slope> {
    let mut out = vec![Slope::infinity()];
    for q in 1..=max_q {
        for p in -max_abs * q..=max_abs * q {
            if p.gcd(&q) == 1 {
                out.push(Slope::new(p, q).expect("q > 0"));
            }
        }
    }
    out
}

pub fn bypass_oracle_suite(slopes: &[Slope]) -> Suite {
    let mut s = Suite::new("bypass attachment against brute force");
    for d in slopes {
        for r in slopes {
            if d == r {
                continue;
            }
            for side in [Side::Front, Side::Back] {
                let fast = bypass_attach(d, r, side);
                let slow = bypass_oracle(d, r, side, &default_oracle_bound(d, r));
                s.check(fast == slow, || {
                    format!("({d}, {r}, {side}): {fast} vs {slow}")
                });
            }
        }
    }
    s
}

pub fn closed_form(max_q: i64, window: i64) -> Suite {
    let mut s = Suite::new("closed-form slope against edge rounding");
    for r in sorted_triples(max_q) {
        let sd = SeifertData::new(-2, r).expect("valid");
        let coeffs = slope_coeffs(&sd);
        let (c1, c2) = (sd.conv(0), sd.conv(1));
        for k in 1..=window {
            let n1 = BigInt::from(-k);
            let (n2, rem) = (&c1.q * &n1 + &c1.v - &c2.v).div_rem(&c2.q);
            if !rem.is_zero() || !n2.is_negative() {
                continue;
            }
            let Ok(closed) = s_n1(&coeffs, &sd, &n1) else {
                continue;
            };
            let step = balanced_third_slope(&sd, &n1, &n2);
            s.check(step.as_ref() == Ok(&closed), || {
                format!("{sd} at n1 = {n1}")
            });
        }
    }
    s
}

pub fn mn_chain(max_n: u64) -> Suite {
    let mut s = Suite::new("M_n twisting table and counts");
    for n in 1..=max_n {
        let b = mn_upper_bound(n).expect("admissible");
        for row in &b.per_k {
            let want = Slope::integer(-(n as i64) + row.k as i64);
            s.check(row.boundary_slope == want, || {
                format!("n = {n}, k = {}", row.k)
            });
            s.check(honda_count(&want).ok().as_ref() == Some(&row.count), || {
                format!("count n = {n}")
            });
        }
        let tri = BigInt::from(n * (n + 1) / 2);
        s.check(b.total == tri, || format!("total for n = {n}"));
        let c = classify(&m_n(n));
        s.check(c.status == Status::Exact { count: tri.clone() }, || {
            format!("classify M_{n}")
        });
        s.check(index_set(n as i64).len() as u64 == n * (n + 1) / 2, || {
            format!("index set n = {n}")
        });
    }
    s
}

pub fn floer_model(max_n: i64) -> Suite {
    let mut s = Suite::new("contact class expansions");
    for n in 1..=max_n {
        for idx in index_set(n) {
            let (v, l) = (expansion(&idx), laurent_image(&idx));
            let agree = v.grid().all(|j| l.coeff(j) == v.get(j));
            s.check(agree, || format!("Laurent image at {idx}, n = {n}"));
        }
        s.check(pairwise_distinct(n), || format!("distinctness n = {n}"));
        let obstructed = index_set(n).iter().filter(|x| stein_obstructed(x)).count() as i64;
        s.check(obstructed == n / 2, || format!("obstructed count n = {n}"));
    }
    s
}

pub fn homology(max_q: i64) -> Suite {
    let mut s = Suite::new("homology order against the plumbing determinant");
    for r in sorted_triples(max_q) {
        let sd = SeifertData::new(-2, r).expect("valid");
        s.check(h1_order(&sd) == linking_matrix(&sd).det().abs(), || {
            format!("{sd}")
        });
    }
    s
}

/// The default, quick selftest.
pub fn run_all() -> Vec<Suite> {
    vec![
        continued_fractions(100),
        bypass_oracle_suite(&bounded_slopes(8, 1)),
        closed_form(7, 30),
        mn_chain(20),
        floer_model(15),
        homology(8),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [
            continued_fractions(20),
            bypass_oracle_suite(&bounded_slopes(4, 1)),
            closed_form(5, 12),
            mn_chain(5),
            floer_model(6),
            homology(5),
        ] {
            assert!(suite.passed(), "{suite:?}");
            assert!(suite.cases > 0, "{}", suite.name);
        }
    }
}
