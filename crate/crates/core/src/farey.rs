//! The Farey tessellation on `Q ∪ {inf}`: edges, arcs of the boundary circle,
//! and the dividing-slope update caused by a bypass attachment.
//!
//! The circle is oriented by the increasing cyclic order of `R ∪ {inf}`:
//! `... -1 -> 0 -> 1 -> ... -> inf -> ... -2 -> -1 ...`. An arc `[a, b]` runs
//! from `a` in this direction to `b`, endpoints included.

use crate::slope::{apply_mat, Slope, UniMat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Which side of the torus a bypass is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Front,
    Back,
}

impl FromStr for Side {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Side, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "front" => Ok(Side::Front),
            "back" => Ok(Side::Back),
            other => Err(crate::error::Error::Parse(format!(
                "side must be front or back, got {other:?}"
            ))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Front => "front",
            Side::Back => "back",
        })
    }
}

/// A closed arc traversed counterclockwise from `from` to `to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub from: Slope,
    pub to: Slope,
    pub orientation: Side,
}

impl Arc {
    /// The arc `[ruling, dividing]` used for a bypass on the given side:
    /// front runs from the ruling slope to the dividing slope, back the other way.
    pub fn for_bypass(dividing: &Slope, ruling: &Slope, side: Side) -> Arc {
        let (from, to) = match side {
            Side::Front => (ruling.clone(), dividing.clone()),
            Side::Back => (dividing.clone(), ruling.clone()),
        };
        assert!(from != to, "arc endpoints must differ");
        Arc {
            from,
            to,
            orientation: side,
        }
    }

    pub fn contains(&self, x: &Slope) -> bool {
        arc_contains(self, x)
    }
}

/// Position of `x` when walking counterclockwise from `base`; smaller is earlier.
fn ccw_cmp(base: &Slope, x: &Slope, y: &Slope) -> Ordering {
    let key = |z: &Slope| z < base;
    key(x).cmp(&key(y)).then_with(|| x.cmp(y))
}

/// Whether `a` and `b` span a basis of `Z^2`, i.e. are joined by a Farey edge.
pub fn farey_edge(a: &Slope, b: &Slope) -> bool {
    (a.den() * b.num() - b.den() * a.num()).abs().is_one()
}

pub fn arc_contains(arc: &Arc, x: &Slope) -> bool {
    ccw_cmp(&arc.from, x, &arc.to) != Ordering::Greater
}

/// New dividing slope after attaching a bypass along a ruling curve.
///
/// The result is the point of the arc (`[ruling, dividing]` on the front,
/// `[dividing, ruling]` on the back) closest to the ruling slope among those
/// with an edge to the dividing slope. The computation moves `dividing` to
/// `inf` with an orientation-preserving unimodular map, where the neighbours
/// are the integers and the answer is a ceiling or floor.
pub fn bypass_attach(dividing: &Slope, ruling: &Slope, side: Side) -> Slope {
    assert!(dividing != ruling, "dividing and ruling slopes must differ");
    if farey_edge(dividing, ruling) {
        return ruling.clone();
    }
    let (q, p) = dividing.vec();
    // Row two solves c*q + d*p = 1; row one kills (q, p). Determinant is +1.
    let e = q.extended_gcd(&p);
    debug_assert!(e.gcd.is_one());
    let to_inf = UniMat {
        a: p.clone(),
        b: -q,
        c: e.x,
        d: e.y,
    };
    debug_assert!(to_inf.det().is_one());
    let image = apply_mat(&to_inf, ruling)
        .to_rational()
        .expect("the ruling slope is not sent to inf");
    let n = match side {
        Side::Front => image.ceil(),
        Side::Back => image.floor(),
    };
    apply_mat(&to_inf.inverse(), &Slope::from_rational(&n))
}

fn magnitude_bound(x: &Slope) -> BigInt {
    x.to_rational()
        .map(|r| r.abs().ceil().to_integer())
        .unwrap_or_else(BigInt::zero)
}

/// Exhaustive search over the Farey neighbours of `dividing` with denominator
/// at most `bound`, picking the one in the arc closest to the ruling slope.
fn oracle_search(dividing: &Slope, ruling: &Slope, side: Side, bound: &BigInt) -> Option<Slope> {
    let arc = Arc::for_bypass(dividing, ruling, side);
    let (q, p) = dividing.vec();
    let mut best: Option<Slope> = None;
    let mut consider = |x: Slope| {
        if !farey_edge(&x, dividing) || !arc.contains(&x) {
            return;
        }
        let better = match &best {
            None => true,
            Some(b) => match side {
                Side::Front => ccw_cmp(ruling, &x, b) == Ordering::Less,
                Side::Back => ccw_cmp(dividing, &x, b) == Ordering::Greater,
            },
        };
        if better {
            best = Some(x);
        }
    };
    if q.is_zero() {
        // Neighbours of inf are the integers.
        let h: BigInt = bound * (magnitude_bound(ruling) + 2);
        let mut a = -h.clone();
        while a <= h {
            consider(Slope::integer(a.clone()));
            a += 1;
        }
    } else {
        // |q*a - p*b| = 1  <=>  a = (p*b ± 1)/q.
        let mut b = BigInt::zero();
        while &b <= bound {
            for eps in [-1, 1] {
                let t: BigInt = &p * &b + eps;
                if t.is_multiple_of(&q) {
                    if let Some(x) = Slope::new(t / &q, b.clone()) {
                        consider(x);
                    }
                }
            }
            b += 1;
        }
    }
    best
}

/// Brute-force reference for [`bypass_attach`]. Starts from `denom_bound`
/// (at least `den(dividing) + den(ruling)`) and doubles the bound until a
/// candidate is found that survives one more doubling.
pub fn bypass_oracle(dividing: &Slope, ruling: &Slope, side: Side, denom_bound: &BigInt) -> Slope {
    assert!(dividing != ruling, "dividing and ruling slopes must differ");
    let floor = dividing.den() + ruling.den();
    let mut bound = if *denom_bound < floor {
        floor
    } else {
        denom_bound.clone()
    };
    if bound.is_zero() {
        bound = BigInt::one();
    }
    let mut last = oracle_search(dividing, ruling, side, &bound);
    loop {
        bound *= 2;
        let next = oracle_search(dividing, ruling, side, &bound);
        if let Some(x) = &next {
            if next == last {
                return x.clone();
            }
        }
        last = next;
    }
}

/// Default starting bound `den(dividing) + den(ruling)`.
pub fn default_oracle_bound(dividing: &Slope, ruling: &Slope) -> BigInt {
    dividing.den() + ruling.den()
}
