//! Slopes on a torus as points of the rational projective line, and the
//! action of unimodular integer matrices on them.
//!
//! A slope `p/q` is the line in `Z^2` spanned by the column vector `(q, p)`;
//! matrices act on column vectors and the image `(x, y)` is read back as the
//! slope `y/x`. Lines are unoriented, so `(x, y)` and `(-x, -y)` give the same
//! slope.

use crate::error::{Error, Result};
use crate::json::int;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A reduced rational number or `inf`.
///
/// Invariants: `gcd(|num|, den) = 1`, `den >= 0`, and `den = 0` only for
/// infinity, which is stored as `1/0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSlope", into = "RawSlope")]
pub struct Slope {
    num: BigInt,
    den: BigInt,
}

#[derive(Serialize, Deserialize)]
struct RawSlope {
    #[serde(with = "int")]
    num: BigInt,
    #[serde(with = "int")]
    den: BigInt,
}

impl TryFrom<RawSlope> for Slope {
    type Error = Error;

    fn try_from(raw: RawSlope) -> Result<Self> {
        Slope::from_vec(&raw.den, &raw.num)
            .ok_or_else(|| Error::Parse("slope 0/0 is not a slope".into()))
    }
}

impl From<Slope> for RawSlope {
    fn from(s: Slope) -> Self {
        RawSlope {
            num: s.num,
            den: s.den,
        }
    }
}

impl Slope {
    /// Builds `num/den`, reducing and normalizing signs. Returns `None` for `0/0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Option<Slope> {
        let (num, den) = (num.into(), den.into());
        Slope::from_vec(&den, &num)
    }

    /// The slope of the line spanned by the vector `(x, y)`, i.e. `y/x`.
    pub fn from_vec(x: &BigInt, y: &BigInt) -> Option<Slope> {
        if x.is_zero() && y.is_zero() {
            return None;
        }
        if x.is_zero() {
            return Some(Slope::infinity());
        }
        let g = x.gcd(y);
        let (mut num, mut den) = (y / &g, x / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Some(Slope { num, den })
    }

    pub fn infinity() -> Slope {
        Slope {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Slope {
        Slope {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Slope {
        Slope::from_vec(r.denom(), r.numer()).expect("a rational has a nonzero denominator")
    }

    /// The finite value, or `None` for infinity.
    pub fn to_rational(&self) -> Option<BigRational> {
        (!self.is_infinite()).then(|| BigRational::new(self.num.clone(), self.den.clone()))
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Reflection `x -> -x`; fixes infinity.
    pub fn negate(&self) -> Slope {
        if self.is_infinite() {
            return self.clone();
        }
        Slope {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// `1/x`, with `1/0 = inf` and `1/inf = 0`.
    pub fn recip(&self) -> Slope {
        Slope::from_vec(&self.num, &self.den).expect("slope vector is nonzero")
    }

    /// The spanning vector `(den, num)`; `(0, 1)` for infinity.
    pub fn vec(&self) -> (BigInt, BigInt) {
        slope_vec(self)
    }
}

/// The column vector `(den, num)` spanning the line of `s`.
pub fn slope_vec(s: &Slope) -> (BigInt, BigInt) {
    (s.den.clone(), s.num.clone())
}

/// Total order on `Q ∪ {inf}` with infinity above every rational. The cyclic
/// order used for arcs is built on top of this in [`crate::farey`].
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let t = s.trim();
        if matches!(t, "inf" | "infinity" | "∞" | "1/0") {
            return Ok(Slope::infinity());
        }
        let parse = |x: &str| {
            BigInt::from_str(x.trim()).map_err(|_| Error::Parse(format!("not a slope: {s:?}")))
        };
        match t.split_once('/') {
            Some((n, d)) => {
                let (n, d) = (parse(n)?, parse(d)?);
                if d.is_zero() {
                    return Err(Error::Parse(format!(
                        "zero denominator in {s:?}; write inf"
                    )));
                }
                Ok(Slope::new(n, d).expect("denominator is nonzero"))
            }
            None => Ok(Slope::integer(parse(t)?)),
        }
    }
}

/// A 2x2 integer matrix with determinant ±1, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniMat {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl UniMat {
    /// `[[a, b], [c, d]]`; fails unless `ad - bc = ±1`.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<UniMat> {
        let m = UniMat {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        if m.det().abs().is_one() {
            Ok(m)
        } else {
            Err(Error::DimensionMismatch(format!(
                "matrix [[{}, {}], [{}, {}]] has determinant {}, not ±1",
                m.a,
                m.b,
                m.c,
                m.d,
                m.det()
            )))
        }
    }

    pub fn identity() -> UniMat {
        UniMat {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// The integer inverse, `det * [[d, -b], [-c, a]]`.
    pub fn inverse(&self) -> UniMat {
        let det = self.det();
        UniMat {
            a: &det * &self.d,
            b: -(&det * &self.b),
            c: -(&det * &self.c),
            d: &det * &self.a,
        }
    }

    pub fn mul(&self, o: &UniMat) -> UniMat {
        UniMat {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn apply_vec(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    pub fn apply(&self, s: &Slope) -> Slope {
        apply_mat(self, s)
    }

    pub fn rows(&self) -> [[BigInt; 2]; 2] {
        [
            [self.a.clone(), self.b.clone()],
            [self.c.clone(), self.d.clone()],
        ]
    }
}

impl fmt::Display for UniMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// The slope of `M * slope_vec(s)`.
pub fn apply_mat(m: &UniMat, s: &Slope) -> Slope {
    let (x, y) = slope_vec(s);
    let (x, y) = m.apply_vec(&x, &y);
    Slope::from_vec(&x, &y).expect("a unimodular matrix has trivial kernel")
}
