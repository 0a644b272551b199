//! The homotopy invariant `theta = c1^2 - 3 sigma - 2 chi` of a contact
//! structure filled by a 2-handlebody on `B^4`, from its linking matrix and
//! rotation numbers.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// A Legendrian surgery description: framing/linking matrix and rotation numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryDiagram {
    #[serde(rename = "L", with = "crate::json::int_mat")]
    pub linking: Vec<Vec<BigInt>>,
    #[serde(with = "crate::json::int_vec")]
    pub rot: Vec<BigInt>,
}

impl SurgeryDiagram {
    pub fn new(linking: Vec<Vec<BigInt>>, rot: Vec<BigInt>) -> Result<SurgeryDiagram> {
        let d = SurgeryDiagram { linking, rot };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.linking.len();
        if self.rot.len() != m || self.linking.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch(format!(
                "{m} rows, rotation vector of length {}",
                self.rot.len()
            )));
        }
        for i in 0..m {
            for j in 0..i {
                if self.linking[i][j] != self.linking[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.rot.len()
    }

    /// Block sum of two diagrams.
    pub fn direct_sum(&self, o: &SurgeryDiagram) -> SurgeryDiagram {
        let (a, b) = (self.size(), o.size());
        let mut linking = vec![vec![BigInt::zero(); a + b]; a + b];
        for i in 0..a {
            linking[i][..a].clone_from_slice(&self.linking[i]);
        }
        for i in 0..b {
            linking[a + i][a..].clone_from_slice(&o.linking[i]);
        }
        let rot = self.rot.iter().chain(&o.rot).cloned().collect();
        SurgeryDiagram { linking, rot }
    }
}

fn to_rational(m: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// Signature by symmetric Gaussian elimination (`L -> P^T L P`).
pub fn signature(linking: &[Vec<BigInt>]) -> Result<i64> {
    let m = linking.len();
    if linking.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch(format!("{m} rows")));
    }
    let mut a = to_rational(linking);
    for i in 0..m {
        for j in 0..i {
            if a[i][j] != a[j][i] {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let mut sig = 0i64;
    for k in 0..m {
        if a[k][k].is_zero() {
            if let Some(l) = (k + 1..m).find(|&l| !a[l][l].is_zero()) {
                a.swap(k, l);
                for row in a.iter_mut() {
                    row.swap(k, l);
                }
            } else if let Some(l) = (k + 1..m).find(|&l| !a[k][l].is_zero()) {
                // Row/column k += row/column l makes the pivot 2 a[k][l].
                for c in 0..m {
                    let t = a[l][c].clone();
                    a[k][c] += t;
                }
                for row in a.iter_mut() {
                    let t = row[l].clone();
                    row[k] += t;
                }
            } else {
                continue;
            }
        }
        let pivot = a[k][k].clone();
        for r in k + 1..m {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &pivot;
            for c in k..m {
                let t = &f * &a[k][c];
                a[r][c] -= t;
            }
            for row in a.iter_mut().skip(k) {
                let t = &f * &row[k];
                row[r] -= t;
            }
        }
        sig += if pivot.is_positive() { 1 } else { -1 };
    }
    Ok(sig)
}

/// Some rational solution of `L x = b`, or `None` if the system is inconsistent.
pub fn solve(linking: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let m = linking.len();
    let mut a = to_rational(linking);
    for (row, x) in a.iter_mut().zip(b) {
        row.push(BigRational::from_integer(x.clone()));
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=m {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[m].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); m];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][m].clone();
    }
    Some(x)
}

/// `rot^T x` for any `x` with `L x = rot`.
pub fn c1_squared(d: &SurgeryDiagram) -> Result<BigRational> {
    d.validate()?;
    let x = solve(&d.linking, &d.rot).ok_or(Error::C1NotLiftable)?;
    Ok(d.rot
        .iter()
        .zip(&x)
        .map(|(r, x)| BigRational::from_integer(r.clone()) * x)
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaValues {
    #[serde(with = "crate::json::rational")]
    pub c1sq: BigRational,
    #[serde(with = "crate::json::rational")]
    pub sigma: BigRational,
    #[serde(with = "crate::json::rational")]
    pub chi: BigRational,
    #[serde(with = "crate::json::rational")]
    pub theta: BigRational,
}

/// All the ingredients of `theta`, with `chi = 1 + m`.
pub fn theta_values(d: &SurgeryDiagram) -> Result<ThetaValues> {
    let c1sq = c1_squared(d)?;
    let sigma = BigRational::from_integer(signature(&d.linking)?.into());
    let chi = BigRational::from_integer(BigInt::from(d.size()) + 1);
    let theta = &c1sq
        - BigRational::from_integer(3.into()) * &sigma
        - BigRational::from_integer(2.into()) * &chi;
    Ok(ThetaValues {
        c1sq,
        sigma,
        chi,
        theta,
    })
}

pub fn theta(d: &SurgeryDiagram) -> Result<BigRational> {
    Ok(theta_values(d)?.theta)
}

/// The negative definite `E8` plumbing: `-2` on the diagonal, tree edges
/// `0-1-2-3-4-5-6` with `7` attached to `4`.
pub fn e8() -> Vec<Vec<BigInt>> {
    let mut m = vec![vec![BigInt::zero(); 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::from(-2);
    }
    for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
        m[a][b] = BigInt::from(1);
        m[b][a] = BigInt::from(1);
    }
    m
}
