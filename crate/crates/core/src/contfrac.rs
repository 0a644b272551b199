//! Negative continued fractions `[a0, a1, ..., am] = a0 - 1/(a1 - 1/(... - 1/am))`
//! with entries `<= -2`, their convergents, and the tight-structure counts
//! built from them.

use crate::error::{Error, Result};
use crate::slope::Slope;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A finite negative continued fraction.
///
/// Canonical expansions have every entry `<= -2`. A *derived* expansion is the
/// output of [`reverse_shift`], whose last entry may be `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NegContFrac {
    entries: Vec<BigInt>,
    derived: bool,
}

impl NegContFrac {
    /// A canonical expansion; `None` if some entry exceeds `-2`.
    pub fn canonical(entries: Vec<BigInt>) -> Option<NegContFrac> {
        entries
            .iter()
            .all(|a| *a <= BigInt::from(-2))
            .then_some(NegContFrac {
                entries,
                derived: false,
            })
    }

    /// Any integer sequence, flagged as non-canonical.
    pub fn derived(entries: Vec<BigInt>) -> NegContFrac {
        NegContFrac {
            entries,
            derived: true,
        }
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn is_derived(&self) -> bool {
        self.derived
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn eval(&self) -> Result<Slope> {
        eval(self)
    }
}

impl fmt::Display for NegContFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// The data `(p, q, u, v)` attached to `-q/p = [a0, ..., am]`, where
/// `-v/u = [a0, ..., a(m-1)]` (and `u = 0, v = 1` when `m = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Convergents {
    #[serde(with = "crate::json::int")]
    pub p: BigInt,
    #[serde(with = "crate::json::int")]
    pub q: BigInt,
    #[serde(with = "crate::json::int")]
    pub u: BigInt,
    #[serde(with = "crate::json::int")]
    pub v: BigInt,
}

fn finite_below_minus_one(x: &Slope) -> Result<BigRational> {
    match x.to_rational() {
        Some(r) if r < -BigRational::one() => Ok(r),
        _ => Err(Error::NotNegativeReciprocal(x.to_string())),
    }
}

/// The canonical expansion of a rational `x < -1`.
pub fn expand(x: &Slope) -> Result<NegContFrac> {
    let mut x = finite_below_minus_one(x)?;
    let mut entries = Vec::new();
    loop {
        if x.is_integer() {
            entries.push(x.to_integer());
            break;
        }
        let a = x.floor();
        x = (&a - &x).recip();
        entries.push(a.to_integer());
    }
    Ok(NegContFrac {
        entries,
        derived: false,
    })
}

/// Right-to-left evaluation; the empty expansion is `inf`.
pub fn eval(cf: &NegContFrac) -> Result<Slope> {
    let Some((last, rest)) = cf.entries.split_last() else {
        return Ok(Slope::infinity());
    };
    let mut x = BigRational::from_integer(last.clone());
    for a in rest.iter().rev() {
        if x.is_zero() {
            return Err(Error::EvalZeroDenominator(cf.to_string()));
        }
        x = BigRational::from_integer(a.clone()) - x.recip();
    }
    Ok(Slope::from_rational(&x))
}

/// Convergent data of `x = -q/p < -1`; satisfies `p*v - q*u = 1`.
pub fn convergents(x: &Slope) -> Result<Convergents> {
    let cf = expand(x)?;
    let (p, q) = (x.den().clone(), -x.num());
    let (u, v) = if cf.len() == 1 {
        (BigInt::zero(), BigInt::one())
    } else {
        let head = NegContFrac {
            entries: cf.entries[..cf.len() - 1].to_vec(),
            derived: false,
        };
        let t = eval(&head)?;
        (t.den().clone(), -t.num())
    };
    debug_assert!((&p * &v - &q * &u).is_one());
    Ok(Convergents { p, q, u, v })
}

/// `[a0, ..., am] -> [am, ..., a1, a0 + 1]`, which evaluates to `(p - q)/(v - u)`.
pub fn reverse_shift(cf: &NegContFrac) -> NegContFrac {
    assert!(!cf.is_empty(), "reverse_shift needs a non-empty expansion");
    let mut entries: Vec<BigInt> = cf.entries.iter().rev().cloned().collect();
    *entries.last_mut().expect("non-empty") += 1;
    NegContFrac {
        entries,
        derived: true,
    }
}

fn unit_interval(r: &Slope) -> Result<BigRational> {
    match r.to_rational() {
        Some(x) if x.is_positive() && x < BigRational::one() => Ok(x),
        _ => Err(Error::NotInUnitInterval(r.to_string())),
    }
}

/// `-1/r` for `r` in `(0,1)`.
pub fn minus_reciprocal(r: &Slope) -> Result<Slope> {
    let x = unit_interval(r)?;
    Ok(Slope::from_rational(&-x.recip()))
}

/// `T(r) = |prod (a_k + 1)|` over the expansion of `-1/r`.
pub fn t_count(r: &Slope) -> Result<BigInt> {
    let cf = expand(&minus_reciprocal(r)?)?;
    Ok(cf
        .entries
        .iter()
        .map(|a| a + 1)
        .fold(BigInt::one(), |acc, f| acc * f)
        .abs())
}

/// Number of tight structures on a solid torus with boundary slope `s <= -1`:
/// `|(b0 + 1) ... (b(m-1) + 1) * bm|` for `s = [b0, ..., bm]`, and 1 at `s = -1`.
pub fn honda_count(s: &Slope) -> Result<BigInt> {
    let x = s
        .to_rational()
        .ok_or_else(|| Error::SlopeAboveMinusOne(s.to_string()))?;
    if x == -BigRational::one() {
        return Ok(BigInt::one());
    }
    if x > -BigRational::one() {
        return Err(Error::SlopeAboveMinusOne(s.to_string()));
    }
    let cf = expand(s)?;
    let (last, rest) = cf.entries.split_last().expect("expansions are non-empty");
    Ok(rest
        .iter()
        .map(|b| b + 1)
        .fold(last.clone(), |acc, f| acc * f)
        .abs())
}

/// The solid-torus count at the slope `(p - q)/(v - u)` reached after
/// thickening, i.e. `honda_count(eval(reverse_shift(expand(-1/r))))`.
pub fn shortcut_count(r: &Slope) -> Result<BigInt> {
    let cf = expand(&minus_reciprocal(r)?)?;
    honda_count(&eval(&reverse_shift(&cf))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    fn conv(t: &str) -> (i64, i64, i64, i64) {
        let c = convergents(&s(t)).unwrap();
        let f = |b: BigInt| i64::try_from(b).unwrap();
        (f(c.p), f(c.q), f(c.u), f(c.v))
    }

    #[test]
    fn expansions() {
        assert_eq!(expand(&s("-2")).unwrap().entries(), ints(&[-2]));
        assert_eq!(expand(&s("-7/5")).unwrap().entries(), ints(&[-2, -2, -3]));
        assert_eq!(
            expand(&s("-11/9")).unwrap().entries(),
            ints(&[-2, -2, -2, -2, -3])
        );
    }

    #[test]
    fn expand_rejects_out_of_domain() {
        for t in ["-1", "0", "1/2", "-1/2", "inf", "5"] {
            assert!(
                matches!(expand(&s(t)), Err(Error::NotNegativeReciprocal(_))),
                "{t}"
            );
        }
    }

    #[test]
    fn evaluations() {
        let e = |v: &[i64]| eval(&NegContFrac::derived(ints(v))).unwrap();
        assert_eq!(e(&[-2, -2, -3]), s("-7/5"));
        assert_eq!(e(&[]), Slope::infinity());
        assert_eq!(e(&[-3, -2, -1]), s("-2"));
        assert_eq!(e(&[-2, -1]), s("-1"));
    }

    #[test]
    fn eval_zero_denominator() {
        let cf = NegContFrac::derived(ints(&[-2, 0]));
        assert!(matches!(eval(&cf), Err(Error::EvalZeroDenominator(_))));
    }

    #[test]
    fn convergent_examples() {
        assert_eq!(conv("-2"), (1, 2, 0, 1));
        assert_eq!(conv("-3/2"), (2, 3, 1, 2));
        assert_eq!(conv("-13/11"), (11, 13, 5, 6));
    }

    #[test]
    fn reverse_shift_examples() {
        let rs = |v: &[i64]| reverse_shift(&NegContFrac::canonical(ints(v)).unwrap());
        let a = rs(&[-2]);
        assert_eq!(a.entries(), ints(&[-1]));
        assert!(a.is_derived());
        assert_eq!(a.eval().unwrap(), s("-1"));
        let b = rs(&[-2, -2, -3]);
        assert_eq!(b.entries(), ints(&[-3, -2, -1]));
        assert_eq!(b.eval().unwrap(), s("-2"));
        let c = rs(&[-2, -2]);
        assert_eq!(c.entries(), ints(&[-2, -1]));
        assert_eq!(c.eval().unwrap(), s("-1"));
    }

    #[test]
    fn t_counts() {
        assert_eq!(t_count(&s("1/2")).unwrap(), 1.into());
        assert_eq!(t_count(&s("9/11")).unwrap(), 2.into());
        assert_eq!(t_count(&s("7/9")).unwrap(), 2.into());
        assert!(t_count(&s("1")).is_err());
        assert!(t_count(&s("3/2")).is_err());
        assert!(t_count(&s("0")).is_err());
    }

    #[test]
    fn honda_counts() {
        assert_eq!(honda_count(&s("-1")).unwrap(), 1.into());
        for m in 2..20 {
            assert_eq!(honda_count(&Slope::integer(-m)).unwrap(), m.into());
        }
        assert_eq!(shortcut_count(&s("9/11")).unwrap(), 2.into());
        assert!(matches!(
            honda_count(&s("-1/2")),
            Err(Error::SlopeAboveMinusOne(_))
        ));
        assert!(honda_count(&Slope::infinity()).is_err());
    }

    #[test]
    fn canonical_constructor_checks_entries() {
        assert!(NegContFrac::canonical(ints(&[-2, -1])).is_none());
        assert!(NegContFrac::canonical(ints(&[])).is_some());
    }
}
