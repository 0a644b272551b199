//! Normalized Seifert invariants of small Seifert fibered spaces, their
//! attaching matrices, the star-shaped plumbing matrix and family detection.

use crate::contfrac::{convergents, expand, minus_reciprocal, Convergents};
use crate::error::{Error, Result};
use crate::slope::{Slope, UniMat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// `M(e0; r1, r2, r3)` with `r_i` in `(0,1)` sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData {
    e0: BigInt,
    r: [Slope; 3],
    conv: [Convergents; 3],
    attaching: [UniMat; 3],
}

fn rat(x: &Slope) -> BigRational {
    x.to_rational().expect("Seifert invariants are finite")
}

/// Normalizes unnormalized invariants: `e0 = e0_raw + sum floor(r_i)` and the
/// invariants are replaced by their fractional parts, sorted.
pub fn normalize(raw: &[Slope; 3], e0_raw: &BigInt) -> Result<SeifertData> {
    let mut e0 = e0_raw.clone();
    let mut r = Vec::with_capacity(3);
    for x in raw {
        let v = x
            .to_rational()
            .ok_or_else(|| Error::TooFewSingularFibers(x.to_string()))?;
        if v.is_integer() {
            return Err(Error::TooFewSingularFibers(x.to_string()));
        }
        let fl = v.floor();
        e0 += fl.to_integer();
        r.push(Slope::from_rational(&(v - fl)));
    }
    r.sort();
    let r: [Slope; 3] = r.try_into().expect("three invariants");
    let mut conv = Vec::with_capacity(3);
    let mut attaching = Vec::with_capacity(3);
    for x in &r {
        let c = convergents(&minus_reciprocal(x)?)?;
        attaching.push(
            UniMat::new(c.q.clone(), c.v.clone(), -&c.p, -&c.u)
                .expect("p*v - q*u = 1 makes the attaching map unimodular"),
        );
        conv.push(c);
    }
    Ok(SeifertData {
        e0,
        r,
        conv: conv.try_into().expect("three"),
        attaching: attaching.try_into().expect("three"),
    })
}

impl SeifertData {
    pub fn new(e0: impl Into<BigInt>, r: [Slope; 3]) -> Result<SeifertData> {
        normalize(&r, &e0.into())
    }

    /// Convenience constructor from `(p, q)` pairs.
    pub fn from_pairs(e0: i64, pairs: [(i64, i64); 3]) -> Result<SeifertData> {
        let r = pairs.map(|(p, q)| Slope::new(p, q).expect("nonzero denominator"));
        SeifertData::new(e0, r)
    }

    pub fn e0(&self) -> &BigInt {
        &self.e0
    }

    pub fn r(&self) -> &[Slope; 3] {
        &self.r
    }

    pub fn r_rational(&self, i: usize) -> BigRational {
        rat(&self.r[i])
    }

    pub fn conv(&self, i: usize) -> &Convergents {
        &self.conv[i]
    }

    /// `A_i = [[q_i, v_i], [-p_i, -u_i]]`.
    pub fn attaching(&self, i: usize) -> &UniMat {
        &self.attaching[i]
    }

    /// Matrix carrying `∂V_i` coordinates to the coordinates of
    /// `-∂(M \ V_i)` used for slope measurements when the second and third
    /// invariants are written as `-(q - p)/q`: `A_1` for the first fiber and
    /// `[[q, v], [q - p, v - u]]` for the other two.
    pub fn frame(&self, i: usize) -> UniMat {
        if i == 0 {
            return self.attaching[0].clone();
        }
        let c = &self.conv[i];
        UniMat::new(c.q.clone(), c.v.clone(), &c.q - &c.p, &c.v - &c.u)
            .expect("determinant p*v - q*u = 1")
    }

    pub fn sum(&self) -> BigRational {
        self.r.iter().map(rat).sum()
    }

    /// `e0 + r1 + r2 + r3`.
    pub fn euler_number(&self) -> BigRational {
        BigRational::from_integer(self.e0.clone()) + self.sum()
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "M({}; {}, {}, {})",
            self.e0, self.r[0], self.r[1], self.r[2]
        )
    }
}

/// Accepts `"e0; r1, r2, r3"` (normalized presentation) or `"r1, r2, r3"`
/// (unnormalized, `e0 = 0`), optionally wrapped in `M( ... )`.
impl FromStr for SeifertData {
    type Err = Error;

    fn from_str(s: &str) -> Result<SeifertData> {
        let mut t = s.trim();
        if let Some(inner) = t.strip_prefix("M(").and_then(|x| x.strip_suffix(')')) {
            t = inner.trim();
        }
        let (e0, rest) = match t.split_once(';') {
            Some((e, rest)) => (
                BigInt::from_str(e.trim()).map_err(|_| Error::Parse(format!("bad e0 in {s:?}")))?,
                rest,
            ),
            None => (BigInt::zero(), t),
        };
        let parts: Vec<Slope> = rest.split(',').map(|x| x.parse()).collect::<Result<_>>()?;
        let raw: [Slope; 3] = parts
            .try_into()
            .map_err(|_| Error::Parse(format!("expected three invariants in {s:?}")))?;
        normalize(&raw, &e0)
    }
}

/// Order of `H_1(M)`, i.e. `|q1 q2 q3 (e0 + r1 + r2 + r3)|`; zero exactly in the
/// degenerate surface-bundle case.
pub fn h1_order(sd: &SeifertData) -> BigInt {
    let qs: BigInt = sd.conv.iter().map(|c| c.q.clone()).product();
    let v = sd.euler_number() * BigRational::from_integer(qs);
    debug_assert!(v.is_integer());
    v.to_integer().abs()
}

/// Symmetric integer matrix of a plumbing tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingMatrix {
    #[serde(with = "crate::json::int_mat")]
    pub entries: Vec<Vec<BigInt>>,
}

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn det(&self) -> BigInt {
        bareiss_det(&self.entries)
    }
}

/// Star-shaped plumbing: a central vertex framed `e0` and three legs framed by
/// the expansions of `-1/r_i`, each leg attached to the centre at its first vertex.
pub fn linking_matrix(sd: &SeifertData) -> LinkingMatrix {
    let legs: Vec<Vec<BigInt>> =
        sd.r.iter()
            .map(|x| {
                expand(&minus_reciprocal(x).expect("normalized"))
                    .expect("-1/r < -1")
                    .entries()
                    .to_vec()
            })
            .collect();
    let m = 1 + legs.iter().map(Vec::len).sum::<usize>();
    let mut e = vec![vec![BigInt::zero(); m]; m];
    e[0][0] = sd.e0.clone();
    let mut idx = 1;
    for leg in &legs {
        let mut prev = 0;
        for a in leg {
            e[idx][idx] = a.clone();
            e[idx][prev] = BigInt::one();
            e[prev][idx] = BigInt::one();
            prev = idx;
            idx += 1;
        }
    }
    LinkingMatrix { entries: e }
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// The three torus bundles among the `e0 = -2` spaces.
pub const TORUS_BUNDLES: [[(i64, i64); 3]; 3] = [
    [(1, 2), (3, 4), (3, 4)],
    [(1, 2), (2, 3), (5, 6)],
    [(2, 3), (2, 3), (2, 3)],
];

/// Structural tags for `e0 = -2` data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum Family {
    /// `e0 != -2`.
    WrongE0 {
        #[serde(with = "crate::json::int")]
        e0: BigInt,
    },
    /// One of [`TORUS_BUNDLES`], by index.
    TorusBundle {
        index: usize,
    },
    /// `(1/2, 2/3, (5n+1)/(6n+1))`, `n >= 1`.
    Mn {
        n: u64,
    },
    /// `(1/2, 2/3, k/(k+1))`, `k >= 6`.
    KFamily {
        k: u64,
    },
    SumAtLeastNineQuarters,
    SumBelowTwo,
    /// Sum equal to 2 but not a torus bundle: a higher-genus periodic surface bundle.
    DegenerateSumTwo,
    /// Sum in `(2, 9/4)` with no recognised family.
    Gap,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::WrongE0 { e0 } => write!(f, "wrong e0 ({e0})"),
            Family::TorusBundle { index } => {
                let [a, b, c] = TORUS_BUNDLES[*index];
                write!(
                    f,
                    "torus bundle ({}/{}, {}/{}, {}/{})",
                    a.0, a.1, b.0, b.1, c.0, c.1
                )
            }
            Family::Mn { n } => write!(f, "M_n family (n = {n})"),
            Family::KFamily { k } => write!(f, "k/(k+1) family (k = {k})"),
            Family::SumAtLeastNineQuarters => write!(f, "sum >= 9/4"),
            Family::SumBelowTwo => write!(f, "sum < 2"),
            Family::DegenerateSumTwo => write!(f, "degenerate sum = 2"),
            Family::Gap => write!(f, "gap 2 < sum < 9/4"),
        }
    }
}

fn small(x: &BigInt) -> Option<u64> {
    x.to_u64()
}

/// Every tag that applies, highest precedence first. Specific families are
/// listed when they match; otherwise exactly one region tag is returned.
pub fn detect_families(sd: &SeifertData) -> Vec<Family> {
    if sd.e0 != BigInt::from(-2) {
        return vec![Family::WrongE0 { e0: sd.e0.clone() }];
    }
    let mut tags = Vec::new();
    let is = |i: usize, p: i64, q: i64| sd.r[i] == Slope::new(p, q).expect("q > 0");
    for (index, t) in TORUS_BUNDLES.iter().enumerate() {
        if (0..3).all(|i| is(i, t[i].0, t[i].1)) {
            tags.push(Family::TorusBundle { index });
        }
    }
    if is(0, 1, 2) && is(1, 2, 3) {
        let (p3, q3) = (sd.r[2].num(), sd.r[2].den());
        let (n, rem) = (q3 - 1i32).div_rem(&BigInt::from(6));
        if rem.is_zero() && n.is_positive() && *p3 == &n * 5 + 1 {
            if let Some(n) = small(&n) {
                tags.push(Family::Mn { n });
            }
        }
        if *q3 == p3 + 1i32 && *p3 >= BigInt::from(6) {
            if let Some(k) = small(p3) {
                tags.push(Family::KFamily { k });
            }
        }
    }
    if !tags.is_empty() {
        return tags;
    }
    let sum = sd.sum();
    let two = BigRational::from_integer(2.into());
    let region = if sum >= BigRational::new(9.into(), 4.into()) {
        Family::SumAtLeastNineQuarters
    } else if sum < two {
        Family::SumBelowTwo
    } else if sum == two {
        Family::DegenerateSumTwo
    } else {
        Family::Gap
    };
    vec![region]
}

/// The highest-precedence tag of [`detect_families`].
pub fn detect_family(sd: &SeifertData) -> Family {
    detect_families(sd).remove(0)
}

/// `M_n = M(-2; 1/2, 2/3, (5n+1)/(6n+1))`.
pub fn m_n(n: u64) -> SeifertData {
    let n = BigInt::from(n);
    SeifertData::new(
        -2,
        [
            Slope::new(1, 2).expect("valid"),
            Slope::new(2, 3).expect("valid"),
            Slope::new(&n * 5 + 1, &n * 6 + 1).expect("valid"),
        ],
    )
    .expect("valid Seifert data")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(t: &str) -> SeifertData {
        t.parse().unwrap()
    }

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    #[test]
    fn normalization() {
        let a = sd("1/2, -1/3, -1/3");
        assert_eq!(*a.e0(), BigInt::from(-2));
        assert_eq!(a.r(), &[s("1/2"), s("2/3"), s("2/3")]);
        let b = sd("-2; 1/2, 2/3, 6/7");
        assert_eq!(b.to_string(), "M(-2; 1/2, 2/3, 6/7)");
        for n in 1..10i64 {
            let c = sd(&format!("M(1/2, -1/3, -{n}/{})", 6 * n + 1));
            assert_eq!(c, m_n(n as u64));
        }
        // Sorting happens after taking fractional parts.
        assert_eq!(sd("-2; 6/7, 1/2, 2/3"), b);
    }

    #[test]
    fn normalization_is_idempotent() {
        let a = sd("7/3, -5/4, 11/2");
        let b = normalize(a.r(), a.e0()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_integer_invariants() {
        assert!(matches!(
            "1/2, 2, 1/3".parse::<SeifertData>(),
            Err(Error::TooFewSingularFibers(_))
        ));
        assert!(matches!(
            "-2; 1/2, 1/3".parse::<SeifertData>(),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            "x; 1/2, 1/3, 1/4".parse::<SeifertData>(),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn attaching_maps() {
        let m = m_n(3);
        for i in 0..3 {
            assert!(m.attaching(i).det().is_one());
        }
        assert_eq!(m.frame(0), UniMat::new(2, 1, -1, 0).unwrap());
        assert_eq!(m.frame(1), UniMat::new(3, 2, 1, 1).unwrap());
        assert_eq!(m.frame(2), UniMat::new(19, 6, 3, 1).unwrap());
    }

    #[test]
    fn homology_orders() {
        assert_eq!(h1_order(&sd("-2; 1/2, 2/3, 5/6")), BigInt::zero());
        assert_eq!(h1_order(&m_n(2)), BigInt::one());
        assert_eq!(h1_order(&sd("-2; 1/2, 1/2, 1/2")), BigInt::from(4));
    }

    #[test]
    fn linking_matrices() {
        let a = linking_matrix(&sd("-2; 1/2, 1/2, 1/2"));
        let expect: Vec<Vec<BigInt>> = [[-2, 1, 1, 1], [1, -2, 0, 0], [1, 0, -2, 0], [1, 0, 0, -2]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(a.entries, expect);
        assert_eq!(a.det().abs(), BigInt::from(4));
        let b = linking_matrix(&sd("-2; 1/2, 2/3, 6/7"));
        assert_eq!(b.det().abs(), BigInt::one());
        for i in 0..b.size() {
            for j in 0..b.size() {
                assert_eq!(b.entries[i][j], b.entries[j][i]);
            }
        }
    }

    #[test]
    fn bareiss_handles_pivoting() {
        let m: Vec<Vec<BigInt>> = [[0, 1], [1, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(bareiss_det(&m), BigInt::from(-1));
        let z: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); 3]; 3];
        assert_eq!(bareiss_det(&z), BigInt::zero());
        assert_eq!(bareiss_det(&[]), BigInt::one());
    }

    #[test]
    fn families() {
        assert_eq!(
            detect_family(&sd("-2; 1/2, 3/4, 3/4")),
            Family::TorusBundle { index: 0 }
        );
        assert_eq!(
            detect_family(&sd("-2; 2/3, 2/3, 2/3")),
            Family::TorusBundle { index: 2 }
        );
        assert_eq!(
            detect_family(&sd("-2; 1/2, 2/3, 11/13")),
            Family::Mn { n: 2 }
        );
        assert_eq!(detect_family(&sd("-2; 1/2, 3/4, 4/5")), Family::Gap);
        assert_eq!(
            detect_families(&sd("-2; 1/2, 2/3, 6/7")),
            vec![Family::Mn { n: 1 }, Family::KFamily { k: 6 }]
        );
        assert_eq!(
            detect_family(&sd("-2; 1/2, 2/3, 8/9")),
            Family::KFamily { k: 8 }
        );
        assert_eq!(
            detect_family(&sd("-2; 1/2, 2/3, 5/6")),
            Family::TorusBundle { index: 1 }
        );
        assert_eq!(detect_family(&sd("-2; 1/3, 1/3, 1/2")), Family::SumBelowTwo);
        assert_eq!(
            detect_family(&sd("-2; 7/9, 7/9, 7/9")),
            Family::SumAtLeastNineQuarters
        );
        assert_eq!(
            detect_family(&sd("-2; 1/3, 5/6, 5/6")),
            Family::DegenerateSumTwo
        );
        assert_eq!(
            detect_family(&sd("-1; 1/2, 1/2, 1/2")),
            Family::WrongE0 { e0: (-1).into() }
        );
    }

    #[test]
    fn mn_family_sits_in_the_gap() {
        let two = BigRational::from_integer(2.into());
        let nine_quarters = BigRational::new(9.into(), 4.into());
        for n in 1..=50 {
            let m = m_n(n);
            assert!(detect_families(&m).contains(&Family::Mn { n }));
            let sum = m.sum();
            assert!(sum > two && sum < nine_quarters, "n = {n}");
        }
    }
}
