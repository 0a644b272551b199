//! Contact classes of the tight structures on `M_n`, modelled by their images
//! in twisted-coefficient Floer homology. The class of `xi_{0,j}` maps to
//! `t^{j/2}`, and each extra index step multiplies by `t^{1/2} - t^{-1/2}`, so
//! `xi_{i,j}` maps to `t^{j/2} (t^{1/2} - t^{-1/2})^i`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// `theta` of every tight structure on `M_n`.
pub const MN_THETA: i64 = 2;

/// Grading of a contact class with invariant `theta`: `-theta/4 - 1/2`.
pub fn contact_degree(theta: &BigRational) -> BigRational {
    -theta / BigRational::from_integer(4.into()) - BigRational::new(1.into(), 2.into())
}

/// Label `(i, j)` of a tight structure on `M_n`:
/// `0 <= i <= n-1`, `|j| <= n-i-1`, `j = n+1-i (mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ContactIndex {
    pub n: i64,
    pub i: i64,
    pub j: i64,
}

impl ContactIndex {
    pub fn new(n: i64, i: i64, j: i64) -> Result<ContactIndex> {
        let ok = n >= 1
            && (0..n).contains(&i)
            && j.abs() < n - i
            && (j - (n + 1 - i)).rem_euclid(2) == 0;
        if ok {
            Ok(ContactIndex { n, i, j })
        } else {
            Err(Error::InvalidIndex { n, i, j })
        }
    }
}

impl fmt::Display for ContactIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// All labels for `M_n`, ordered by `i` then `j`.
pub fn index_set(n: i64) -> Vec<ContactIndex> {
    assert!(n >= 1, "n must be positive");
    let mut out = Vec::new();
    for i in 0..n {
        let top = n - i - 1;
        let mut j = -top;
        while j <= top {
            out.push(ContactIndex { n, i, j });
            j += 2;
        }
    }
    out
}

/// A Laurent polynomial in `t^{1/2}`, keyed by twice the exponent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HalfLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl HalfLaurent {
    /// `c * t^{twice/2}`.
    pub fn monomial(twice: i64, c: impl Into<BigInt>) -> HalfLaurent {
        let mut h = HalfLaurent::default();
        h.add_term(twice, c.into());
        h
    }

    fn add_term(&mut self, twice: i64, c: BigInt) {
        let e = self.terms.entry(twice).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&twice);
        }
    }

    /// Coefficient of `t^{twice/2}`.
    pub fn coeff(&self, twice: i64) -> BigInt {
        self.terms.get(&twice).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, o: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::default();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> HalfLaurent {
        (0..k).fold(HalfLaurent::monomial(0, 1), |acc, _| acc.mul(self))
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, twice: i64) -> fmt::Result {
    match twice {
        0 => Ok(()),
        2 => write!(f, "t"),
        _ if twice % 2 == 0 => write!(f, "t^{}", twice / 2),
        _ => write!(f, "t^({}/2)", twice),
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (twice, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() || *twice == 0 {
                write!(f, "{mag}")?;
            }
            fmt_power(f, *twice)?;
        }
        Ok(())
    }
}

/// Coefficients of a contact class in the basis `c(xi_{0,j'})`,
/// `j' = -n+1, -n+3, ..., n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpansionVector {
    pub n: i64,
    #[serde(with = "crate::json::int_vec")]
    pub coeffs: Vec<BigInt>,
}

impl ExpansionVector {
    pub fn zero(n: i64) -> ExpansionVector {
        ExpansionVector {
            n,
            coeffs: vec![BigInt::zero(); n as usize],
        }
    }

    /// The grid `[-n+1, -n+3, ..., n-1]`.
    pub fn grid(&self) -> impl Iterator<Item = i64> {
        let n = self.n;
        (0..n).map(move |t| -n + 1 + 2 * t)
    }

    fn slot(&self, j: i64) -> Option<usize> {
        let t = j + self.n - 1;
        (t >= 0 && t % 2 == 0 && t / 2 < self.n).then_some((t / 2) as usize)
    }

    pub fn get(&self, j: i64) -> BigInt {
        self.slot(j)
            .map(|k| self.coeffs[k].clone())
            .unwrap_or_default()
    }

    pub fn add(&mut self, j: i64, c: &BigInt) {
        let k = self.slot(j).expect("index on the grid");
        self.coeffs[k] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> ExpansionVector {
        ExpansionVector {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Moves every coefficient from `j'` to `j' + by` on the grid of `n_new`.
    pub fn shift(&self, by: i64, n_new: i64) -> ExpansionVector {
        let mut out = ExpansionVector::zero(n_new);
        for j in self.grid() {
            let c = self.get(j);
            if !c.is_zero() {
                out.add(j + by, &c);
            }
        }
        out
    }

    pub fn sub(&self, o: &ExpansionVector) -> ExpansionVector {
        assert_eq!(self.n, o.n);
        ExpansionVector {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for ExpansionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

fn binomial(i: i64, k: i64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, t| acc * (i - t) / (t + 1))
}

/// `c(xi_{i,j}) = sum_k (-1)^(i-k) C(i,k) c(xi_{0, j-i+2k})`.
pub fn expansion(idx: &ContactIndex) -> ExpansionVector {
    let mut v = ExpansionVector::zero(idx.n);
    for k in 0..=idx.i {
        let mut c = binomial(idx.i, k);
        if (idx.i - k) % 2 == 1 {
            c = -c;
        }
        v.add(idx.j - idx.i + 2 * k, &c);
    }
    v
}

/// `t^{j/2} (t^{1/2} - t^{-1/2})^i`, multiplied out.
pub fn laurent_image(idx: &ContactIndex) -> HalfLaurent {
    let mut step = HalfLaurent::monomial(1, 1);
    step.add_term(-1, BigInt::from(-1));
    HalfLaurent::monomial(idx.j, 1).mul(&step.pow(idx.i as u32))
}

/// Relabels `j' -> -j'`.
pub fn conjugate(v: &ExpansionVector) -> ExpansionVector {
    ExpansionVector {
        n: v.n,
        coeffs: v.coeffs.iter().rev().cloned().collect(),
    }
}

/// Contact classes are defined up to sign, so symmetry is `conj(v) = ±v`.
pub fn conjugation_symmetric(v: &ExpansionVector) -> bool {
    let c = conjugate(v);
    c == *v || c == v.neg()
}

/// The mod 2 obstruction to Stein fillability: for a self-conjugate class
/// `xi_{i,0}` with `i > 0`, the cobordism image is `sum (c_j' + c_-j') x_j' + c_0 x_0`,
/// which vanishes mod 2 when every paired sum and the central coefficient are even.
pub fn stein_obstructed(idx: &ContactIndex) -> bool {
    if idx.j != 0 || idx.i == 0 {
        return false;
    }
    let v = expansion(idx);
    if !conjugation_symmetric(&v) {
        return false;
    }
    let paired = v
        .grid()
        .filter(|j| *j > 0)
        .all(|j| (v.get(j) + v.get(-j)).is_even());
    paired && v.get(0).is_even()
}

/// Whether the expansion vectors of all labels for `M_n` are distinct.
pub fn pairwise_distinct(n: i64) -> bool {
    let mut seen = std::collections::HashSet::new();
    index_set(n).iter().all(|idx| seen.insert(expansion(idx)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn idx(n: i64, i: i64, j: i64) -> ContactIndex {
        ContactIndex::new(n, i, j).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn index_sets() {
        assert_eq!(index_set(1), vec![idx(1, 0, 0)]);
        assert_eq!(
            index_set(2),
            vec![idx(2, 0, -1), idx(2, 0, 1), idx(2, 1, 0)]
        );
        for n in 1..=30 {
            assert_eq!(index_set(n).len() as i64, n * (n + 1) / 2);
            assert_eq!(index_set(n).iter().filter(|x| x.i == 0).count() as i64, n);
        }
        assert!(ContactIndex::new(2, 1, 1).is_err());
        assert!(ContactIndex::new(2, 2, 0).is_err());
        assert!(ContactIndex::new(3, 0, 1).is_err());
    }

    #[test]
    fn expansions() {
        assert_eq!(expansion(&idx(2, 1, 0)).coeffs, ints(&[-1, 1]));
        assert_eq!(expansion(&idx(3, 2, 0)).coeffs, ints(&[1, -2, 1]));
        assert_eq!(expansion(&idx(5, 0, 2)).coeffs, ints(&[0, 0, 0, 1, 0]));
    }

    #[test]
    fn laurent_images() {
        assert_eq!(laurent_image(&idx(3, 2, 0)).to_string(), "t - 2 + t^-1");
        assert_eq!(laurent_image(&idx(5, 0, 4)).to_string(), "t^2");
        assert_eq!(
            laurent_image(&idx(2, 1, 0)).to_string(),
            "t^(1/2) - t^(-1/2)"
        );
        for n in 1..=15 {
            for x in index_set(n) {
                let (l, v) = (laurent_image(&x), expansion(&x));
                for j in v.grid() {
                    assert_eq!(l.coeff(j), v.get(j), "{x}");
                }
                assert!(l.terms().all(|(j, _)| v.grid().any(|g| g == j)));
            }
        }
    }

    #[test]
    fn recursion_step() {
        for n in 1..=15 {
            for x in index_set(n) {
                let v = expansion(&x);
                let next = expansion(&idx(n + 1, x.i + 1, x.j));
                assert_eq!(next, v.shift(1, n + 1).sub(&v.shift(-1, n + 1)));
            }
        }
    }

    #[test]
    fn conjugation() {
        let mut unit = ExpansionVector::zero(2);
        unit.add(1, &BigInt::one());
        let c = conjugate(&unit);
        assert_eq!(c.get(-1), BigInt::one());
        assert_eq!(c.get(1), BigInt::zero());
        for n in 1..=15 {
            for x in index_set(n) {
                let v = expansion(&x);
                assert_eq!(conjugate(&conjugate(&v)), v);
                let mirror = expansion(&idx(n, x.i, -x.j));
                let signed = if x.i % 2 == 0 {
                    mirror.clone()
                } else {
                    mirror.neg()
                };
                assert_eq!(conjugate(&v), signed);
                let mut a: Vec<_> = conjugate(&v).coeffs.iter().map(|c| c.abs()).collect();
                let mut b: Vec<_> = mirror.coeffs.iter().map(|c| c.abs()).collect();
                a.sort();
                b.sort();
                assert_eq!(a, b);
                assert_eq!(conjugation_symmetric(&v), x.j == 0);
            }
        }
    }

    #[test]
    fn obstruction() {
        assert!(stein_obstructed(&idx(2, 1, 0)));
        assert!(!stein_obstructed(&idx(1, 0, 0)));
        assert!(!stein_obstructed(&idx(3, 0, 0)));
        for n in 1..=30 {
            let set = index_set(n);
            assert_eq!(
                set.iter().filter(|x| stein_obstructed(x)).count() as i64,
                n / 2
            );
            for x in set.iter().filter(|x| x.j == 0 && x.i % 2 == 0 && x.i > 0) {
                assert_eq!(expansion(x).get(0).abs(), binomial(x.i, x.i / 2));
            }
        }
    }

    #[test]
    fn distinctness() {
        for n in 1..=15 {
            assert!(pairwise_distinct(n));
            assert!(index_set(n).iter().all(|x| !expansion(x).is_zero()));
        }
    }

    #[test]
    fn degree_on_mn() {
        let theta = BigRational::from_integer(MN_THETA.into());
        assert_eq!(
            contact_degree(&theta),
            BigRational::from_integer((-1).into())
        );
    }

    proptest! {
        #[test]
        fn half_laurent_products_commute(a in proptest::collection::vec((-6i64..6, -3i64..3), 0..5),
                                         b in proptest::collection::vec((-6i64..6, -3i64..3), 0..5)) {
            let build = |v: &[(i64, i64)]| v.iter().fold(HalfLaurent::default(), |mut h, &(e, c)| {
                h.add_term(e, c.into());
                h
            });
            let (x, y) = (build(&a), build(&b));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }
    }
}
