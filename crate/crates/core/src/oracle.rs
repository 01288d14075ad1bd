//! Exhaustive reference computations.
//!
//! Nothing here calls into the normal-form, section or parallelepiped code of
//! the main path: lattice membership is decided from a separately computed
//! inverse of the basis, and every set is found by scanning integer boxes.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intlat::{Lattice, RatVec};

type Q = Ratio<i128>;

/// Membership test `x ∈ N` for integer points: `x·adj ≡ 0 (mod det)` with
/// `adj / det` the inverse of the basis matrix.
struct Membership {
    dim: usize,
    scaled_inverse: Vec<Vec<i128>>,
    modulus: i128,
}

impl Membership {
    fn new(n: &Lattice) -> Result<Membership> {
        let dim = n.dim();
        let mut a: Vec<Vec<Q>> = n
            .basis()
            .iter()
            .map(|r| {
                r.coords()
                    .iter()
                    .map(|c| Some(Q::new(c.numer().to_i128()?, c.denom().to_i128()?)))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow)?;
        let mut inv: Vec<Vec<Q>> = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
        for c in 0..dim {
            let p = (c..dim).find(|&r| !a[r][c].is_zero()).ok_or(Error::NotFullRank)?;
            a.swap(c, p);
            inv.swap(c, p);
            let piv = a[c][c];
            for j in 0..dim {
                a[c][j] /= piv;
                inv[c][j] /= piv;
            }
            for r in 0..dim {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c];
                    for j in 0..dim {
                        let (x, y) = (a[c][j], inv[c][j]);
                        a[r][j] -= f * x;
                        inv[r][j] -= f * y;
                    }
                }
            }
        }
        let modulus = inv.iter().flatten().fold(1i128, |acc, q| acc.lcm(q.denom()));
        let scaled_inverse = inv
            .iter()
            .map(|r| r.iter().map(|q| q.numer() * (modulus / q.denom())).collect())
            .collect();
        Ok(Membership {
            dim,
            scaled_inverse,
            modulus,
        })
    }

    fn contains(&self, x: &[i64]) -> bool {
        (0..self.dim).all(|j| {
            let s: i128 = (0..self.dim)
                .map(|i| i128::from(x[i]) * self.scaled_inverse[i][j])
                .sum();
            s % self.modulus == 0
        })
    }

    /// Least `t ≥ 1` with `t·e_axis ∈ N`.
    fn edge_length(&self, axis: usize) -> i64 {
        let mut x = vec![0i64; self.dim];
        let mut t = 1;
        loop {
            x[axis] = t;
            if self.contains(&x) {
                return t;
            }
            t += 1;
        }
    }
}

/// Calls `f` on every integer point of the box `lo ≤ x ≤ hi`.
fn for_each_in_box(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64])) {
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    let mut x = lo.to_vec();
    loop {
        f(&x);
        let mut k = 0;
        loop {
            if k == x.len() {
                return;
            }
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
            k += 1;
        }
    }
}

fn require_integral(n: &Lattice) -> Result<()> {
    if n.basis().iter().all(RatVec::is_integral) {
        Ok(())
    } else {
        Err(Error::NotIntegral)
    }
}

fn face_count(member: &Membership, edges: &[i64], face: &[usize]) -> u64 {
    let d = member.dim;
    let mut lo = vec![0i64; d];
    let mut hi = vec![0i64; d];
    for &i in face {
        lo[i] = 1;
        hi[i] = edges[i];
    }
    let mut count = 0;
    for_each_in_box(&lo, &hi, |x| {
        if member.contains(x) {
            count += 1;
        }
    });
    count
}

/// Number of points of `N` in the half-open parallelepiped spanned by the
/// primitive edge generators of the face (0-based axes). Requires `N ⊆ Z^d`.
pub fn brute_face_index(n: &Lattice, face: &[usize]) -> Result<u64> {
    require_integral(n)?;
    if face.is_empty() || face.iter().any(|&i| i >= n.dim()) {
        return Err(Error::BadFace(format!("{face:?}")));
    }
    let member = Membership::new(n)?;
    let edges: Vec<i64> = (0..n.dim()).map(|i| member.edge_length(i)).collect();
    Ok(face_count(&member, &edges, face))
}

/// Minimal elements of `S`, by scanning `N ∩ [0, bound]^d`.
pub fn brute_minimal_s(n: &Lattice, bound: u64) -> Result<Vec<RatVec>> {
    require_integral(n)?;
    let d = n.dim();
    let member = Membership::new(n)?;
    let edges: Vec<i64> = (0..d).map(|i| member.edge_length(i)).collect();
    let needed = edges.iter().copied().max().unwrap_or(1) as u64;
    if bound < needed {
        return Err(Error::BoundTooSmall { bound, needed });
    }
    let bound = i64::try_from(bound).map_err(|_| Error::Overflow)?;

    let mut singular: HashMap<u32, bool> = HashMap::new();
    let mut in_s: Vec<Vec<i64>> = Vec::new();
    for_each_in_box(&vec![0; d], &vec![bound; d], |x| {
        let support: Vec<usize> = (0..d).filter(|&i| x[i] != 0).collect();
        if support.is_empty() || !member.contains(x) {
            return;
        }
        let key = support.iter().fold(0u32, |acc, &i| acc | (1 << i));
        let is_singular = *singular
            .entry(key)
            .or_insert_with(|| face_count(&member, &edges, &support) != 1);
        if is_singular {
            in_s.push(x.to_vec());
        }
    });

    let mut minimal: Vec<RatVec> = in_s
        .iter()
        .filter(|x| {
            !in_s
                .iter()
                .any(|y| y != *x && y.iter().zip(x.iter()).all(|(a, b)| a <= b))
        })
        .map(|x| RatVec::from_ints(x))
        .collect();
    minimal.sort();
    Ok(minimal)
}

/// Largest primitive edge length `max_i c_i`, the smallest valid bound for
/// [`brute_minimal_s`].
pub fn edge_bound(n: &Lattice) -> Result<u64> {
    require_integral(n)?;
    let member = Membership::new(n)?;
    Ok((0..n.dim()).map(|i| member.edge_length(i)).max().unwrap_or(1) as u64)
}
