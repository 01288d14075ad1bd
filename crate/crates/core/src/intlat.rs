//! Exact integer and rational lattice algebra.
//!
//! Lattices are full-rank subgroups of `Q^d` stored in a canonical form: the
//! row-style Hermite normal form of `D·L`, where `D` is the least positive
//! integer with `D·L ⊆ Z^d`. The HNF uses the lower-triangular convention
//! (row `k` has its positive pivot in column `k` and zeros to the right of it;
//! entries below a pivot are reduced into `[0, pivot)`), so two lattices are
//! equal exactly when their representations are.
//!
//! Axis and coordinate indices are 0-based throughout the Rust API.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 16;

pub type IntMatrix = Vec<Vec<BigInt>>;

/// An exact rational vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVec(Vec<BigRational>);

impl RatVec {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RatVec(coords)
    }

    pub fn zero(dim: usize) -> Self {
        RatVec(vec![BigRational::zero(); dim])
    }

    /// The `k`-th standard basis vector.
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[k] = BigRational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Builds a vector from `(numerator, denominator)` pairs.
    ///
    /// Panics on a zero denominator.
    pub fn from_pairs(coords: &[(i64, i64)]) -> Self {
        RatVec(
            coords
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn from_integer_row(row: &[BigInt]) -> Self {
        RatVec(row.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigRational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }

    pub fn dot(&self, other: &RatVec) -> Result<BigRational> {
        check_dim(self.dim(), other.dim())?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn add(&self, other: &RatVec) -> Result<RatVec> {
        check_dim(self.dim(), other.dim())?;
        Ok(RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &RatVec) -> Result<RatVec> {
        check_dim(self.dim(), other.dim())?;
        Ok(RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, factor: &BigRational) -> RatVec {
        RatVec(self.0.iter().map(|a| a * factor).collect())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Coordinates as `(numerator, denominator)` pairs of machine integers.
    pub fn to_pairs(&self) -> Option<Vec<(i64, i64)>> {
        self.0
            .iter()
            .map(|c| Some((c.numer().to_i64()?, c.denom().to_i64()?)))
            .collect()
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"(1, 1/2)"`, `"1 1/2"` or `"1,1/2"`.
impl FromStr for RatVec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let r = BigRational::from_str(t).map_err(|_| format!("bad rational '{t}'"))?;
                Ok(r)
            })
            .collect::<std::result::Result<Vec<_>, String>>()?;
        if coords.is_empty() {
            return Err("empty vector".into());
        }
        Ok(RatVec(coords))
    }
}

/// Serialized as a list of `[numerator, denominator]` pairs of 64-bit integers.
impl Serialize for RatVec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs = self
            .to_pairs()
            .ok_or_else(|| S::Error::custom("rational coordinate exceeds 64-bit range"))?;
        let pairs: Vec<[i64; 2]> = pairs.into_iter().map(|(n, d)| [n, d]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatVec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[i64; 2]>::deserialize(deserializer)?;
        let coords = pairs
            .into_iter()
            .map(|[n, d]| {
                if d <= 0 {
                    Err(D::Error::custom(format!("denominator {d} must be positive")))
                } else {
                    Ok(BigRational::new(n.into(), d.into()))
                }
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(RatVec(coords))
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn check_ambient(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::BadDimension(dim))
    }
}

/// Standard row HNF with pivots at the first nonzero column of each row.
fn hnf_upper(mut a: IntMatrix, ncols: usize) -> IntMatrix {
    let m = a.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if a[i][c].is_zero() {
                continue;
            }
            if a[r][c].is_zero() {
                a.swap(r, i);
                continue;
            }
            let eg = a[r][c].extended_gcd(&a[i][c]);
            let p = &a[r][c] / &eg.gcd;
            let q = &a[i][c] / &eg.gcd;
            let (top, bottom): (Vec<BigInt>, Vec<BigInt>) = a[r]
                .iter()
                .zip(&a[i])
                .map(|(x, y)| (&eg.x * x + &eg.y * y, &p * y - &q * x))
                .unzip();
            a[r] = top;
            a[i] = bottom;
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if !q.is_zero() {
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Row-style Hermite normal form of an integer matrix, lower-triangular
/// convention.
///
/// The returned rows form a basis of the integer row span, ordered by pivot
/// column. Each row's last nonzero entry is its (positive) pivot; the entries
/// of other rows in that column lie in `[0, pivot)`. Rank-deficient input yields
/// fewer rows than columns.
pub fn hnf(rows: &[Vec<BigInt>]) -> Result<IntMatrix> {
    let ncols = rows.first().ok_or(Error::Empty)?.len();
    for row in rows {
        check_dim(ncols, row.len())?;
    }
    let reversed: IntMatrix = rows
        .iter()
        .map(|r| r.iter().rev().cloned().collect())
        .collect();
    let mut h = hnf_upper(reversed, ncols);
    for row in h.iter_mut() {
        row.reverse();
    }
    h.reverse();
    Ok(h)
}

/// Invariant factors `d1 | d2 | ... | dr` of a nonzero integer matrix.
pub fn snf(mat: &[Vec<BigInt>]) -> Result<Vec<BigInt>> {
    let m = mat.len();
    let n = mat.first().map_or(0, Vec::len);
    for row in mat {
        check_dim(n, row.len())?;
    }
    if mat.iter().flatten().all(Zero::is_zero) {
        return Err(Error::ZeroMatrix);
    }
    let mut a: IntMatrix = mat.to_vec();
    let mut factors = Vec::new();
    for t in 0..m.min(n) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let Some((pi, pj)) = (t..m)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
            else {
                return Ok(factors);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let pivot = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t].div_floor(&pivot);
                if !q.is_zero() {
                    let pivot_row = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&pivot);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let y = row[t].clone();
                        row[j] -= &q * y;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            if let Some(i) = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&pivot))) {
                let offending = a[i].clone();
                for (x, y) in a[t].iter_mut().zip(&offending) {
                    *x += y;
                }
                continue;
            }
            factors.push(pivot.abs());
            break;
        }
    }
    Ok(factors)
}

/// A full-rank lattice in `Q^d` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    denom: BigInt,
    rows: IntMatrix,
}

impl Lattice {
    /// The integer lattice `Z^d`.
    pub fn standard(dim: usize) -> Result<Lattice> {
        check_ambient(dim)?;
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        Ok(Lattice {
            denom: BigInt::one(),
            rows,
        })
    }

    /// The integer span of `gens`, which must span `Q^d`.
    pub fn from_generators(gens: &[RatVec]) -> Result<Lattice> {
        let dim = gens.first().ok_or(Error::Empty)?.dim();
        check_ambient(dim)?;
        for g in gens {
            check_dim(dim, g.dim())?;
        }
        let denom = gens
            .iter()
            .fold(BigInt::one(), |acc, g| acc.lcm(&g.common_denominator()));
        let scaled: IntMatrix = gens
            .iter()
            .map(|g| {
                g.coords()
                    .iter()
                    .map(|c| (c * &denom).to_integer())
                    .collect()
            })
            .collect();
        Self::from_scaled_rows(&scaled, denom, dim)
    }

    /// Lattice spanned by `rows / denom`.
    fn from_scaled_rows(rows: &[Vec<BigInt>], denom: BigInt, dim: usize) -> Result<Lattice> {
        let h = hnf(rows)?;
        if h.len() < dim {
            return Err(Error::NotFullRank);
        }
        // Shrink the denominator to the least one that clears the basis.
        let content = h
            .iter()
            .flatten()
            .fold(denom.clone(), |acc, x| acc.gcd(x));
        let rows = h.into_iter().map(|r| r.into_iter().map(|x| x / &content).collect()).collect();
        Ok(Lattice {
            denom: denom / content,
            rows,
        })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Least positive integer `D` with `D·L ⊆ Z^d`.
    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    /// Canonical integer basis of `denom()·L`, lower triangular.
    pub fn scaled_basis(&self) -> &IntMatrix {
        &self.rows
    }

    /// Canonical rational basis rows.
    pub fn basis(&self) -> Vec<RatVec> {
        self.rows
            .iter()
            .map(|r| {
                RatVec(
                    r.iter()
                        .map(|x| BigRational::new(x.clone(), self.denom.clone()))
                        .collect(),
                )
            })
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.denom.is_one()
    }

    /// Absolute covolume `|det|` of the basis.
    pub fn covolume(&self) -> BigRational {
        let num = self.rows.iter().enumerate().fold(BigInt::one(), |acc, (k, r)| acc * &r[k]);
        BigRational::new(num, num_traits::pow(self.denom.clone(), self.dim()))
    }

    /// Integer coefficients `z` with `v = Σ z_k b_k`, or `None` when `v ∉ L`.
    pub fn coefficients(&self, v: &RatVec) -> Result<Option<Vec<BigInt>>> {
        check_dim(self.dim(), v.dim())?;
        let scaled = v.scale(&BigRational::from_integer(self.denom.clone()));
        if !scaled.is_integral() {
            return Ok(None);
        }
        let mut rest: Vec<BigInt> = scaled.0.iter().map(|c| c.to_integer()).collect();
        let d = self.dim();
        let mut z = vec![BigInt::zero(); d];
        for k in (0..d).rev() {
            let (q, r) = rest[k].div_rem(&self.rows[k][k]);
            if !r.is_zero() {
                return Ok(None);
            }
            for (x, y) in rest.iter_mut().zip(&self.rows[k]).take(k + 1) {
                *x -= &q * y;
            }
            z[k] = q;
        }
        Ok(Some(z))
    }

    pub fn contains(&self, v: &RatVec) -> Result<bool> {
        Ok(self.coefficients(v)?.is_some())
    }

    /// Smallest lattice containing both.
    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        check_dim(self.dim(), other.dim())?;
        let mut gens = self.basis();
        gens.extend(other.basis());
        Lattice::from_generators(&gens)
    }

    /// `{v : <v, u> ∈ Z for all u ∈ L}`, from the inverse transpose of the basis.
    pub fn dual(&self) -> Lattice {
        let d = self.dim();
        let basis: Vec<Vec<BigRational>> = self.basis().into_iter().map(RatVec::into_coords).collect();
        let inv = invert(basis);
        let gens: Vec<RatVec> = (0..d).map(|j| RatVec((0..d).map(|i| inv[i][j].clone()).collect())).collect();
        Lattice::from_generators(&gens).expect("inverse of a full-rank basis has full rank")
    }

    /// `[sup : self]`; fails unless `self ⊆ sup`.
    pub fn index_in(&self, sup: &Lattice) -> Result<BigInt> {
        check_dim(sup.dim(), self.dim())?;
        for b in self.basis() {
            if !sup.contains(&b)? {
                return Err(Error::NotSublattice);
            }
        }
        let ratio = self.covolume() / sup.covolume();
        debug_assert!(ratio.is_integer());
        Ok(ratio.to_integer())
    }

    /// The section `L ∩ span{e_i : i ∈ axes}` as a lattice in the coordinates
    /// `axes` (taken in the given order).
    pub fn section(&self, axes: &[usize]) -> Result<Lattice> {
        let d = self.dim();
        if axes.is_empty() || axes.iter().any(|&i| i >= d) {
            return Err(Error::BadFace(format!("{axes:?}")));
        }
        let mut order: Vec<usize> = axes.to_vec();
        order.extend((0..d).filter(|i| !axes.contains(i)));
        if order.len() != d {
            return Err(Error::BadFace(format!("{axes:?}")));
        }
        let permuted: IntMatrix = self
            .rows
            .iter()
            .map(|r| order.iter().map(|&j| r[j].clone()).collect())
            .collect();
        // Rows pivoting inside the leading block vanish on every other axis.
        let m = axes.len();
        let h = hnf(&permuted)?;
        let rows: IntMatrix = h
            .into_iter()
            .filter(|r| r[m..].iter().all(Zero::is_zero))
            .map(|mut r| {
                r.truncate(m);
                r
            })
            .collect();
        Self::from_scaled_rows(&rows, self.denom.clone(), m)
    }

    /// Smallest positive multiple of the `axis`-th standard vector lying in `L`.
    pub fn primitive_on_ray(&self, axis: usize) -> Result<RatVec> {
        let line = self.section(&[axis])?;
        let t = BigRational::new(line.rows[0][0].clone(), line.denom.clone());
        Ok(RatVec::unit(self.dim(), axis).scale(&t))
    }

    /// The primitive vector of `L` on the ray through `v` and the multiplicity
    /// `q` with `v = q·primitive`. `v` must be a nonzero member of `L`.
    pub fn primitive_decomposition(&self, v: &RatVec) -> Result<Option<(RatVec, BigInt)>> {
        let Some(z) = self.coefficients(v)? else {
            return Ok(None);
        };
        let q = z.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if q.is_zero() {
            return Ok(None);
        }
        let primitive = v.scale(&BigRational::new(BigInt::one(), q.clone()));
        Ok(Some((primitive, q)))
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis().iter().map(ToString::to_string).collect();
        write!(f, "<{}>", rows.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeRepr {
    basis: Vec<RatVec>,
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LatticeRepr { basis: self.basis() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Lattice {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = LatticeRepr::deserialize(deserializer)?;
        Lattice::from_generators(&repr.basis).map_err(D::Error::custom)
    }
}

/// Integer span of `gens`.
pub fn lattice_from_generators(gens: &[RatVec]) -> Result<Lattice> {
    Lattice::from_generators(gens)
}

pub fn lattice_sum(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    a.sum(b)
}

pub fn dual_lattice(l: &Lattice) -> Lattice {
    l.dual()
}

pub fn contains(l: &Lattice, v: &RatVec) -> Result<bool> {
    l.contains(v)
}

/// `[sup : sub]`.
pub fn index(sub: &Lattice, sup: &Lattice) -> Result<BigInt> {
    sub.index_in(sup)
}

pub fn primitive_on_ray(l: &Lattice, axis: usize) -> Result<RatVec> {
    l.primitive_on_ray(axis)
}

/// Gauss-Jordan inverse of a nonsingular rational matrix.
fn invert(mut a: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("singular matrix");
        a.swap(c, p);
        inv.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut().chain(inv[c].iter_mut()) {
            *x /= &piv;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            let (arow, irow) = (a[c].clone(), inv[c].clone());
            for (x, y) in a[r].iter_mut().zip(&arow) {
                *x -= &f * y;
            }
            for (x, y) in inv[r].iter_mut().zip(&irow) {
                *x -= &f * y;
            }
        }
    }
    inv
}

/// Converts an integer to `i64`, reporting overflow.
pub(crate) fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn lat(gens: &[&str]) -> Lattice {
        let gens: Vec<RatVec> = gens.iter().map(|g| g.parse().unwrap()).collect();
        Lattice::from_generators(&gens).unwrap()
    }

    fn v(s: &str) -> RatVec {
        s.parse().unwrap()
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(hnf(&m(&[&[2, 1], &[0, 2], &[2, 0]])).unwrap(), m(&[&[2, 0], &[0, 1]]));
        assert_eq!(hnf(&m(&[&[1, 0], &[0, 1]])).unwrap(), m(&[&[1, 0], &[0, 1]]));
        assert_eq!(hnf(&m(&[&[2, 0], &[0, 2]])).unwrap(), m(&[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn hnf_rank_deficient_and_errors() {
        assert_eq!(hnf(&m(&[&[2, 4], &[1, 2]])).unwrap(), m(&[&[1, 2]]));
        assert_eq!(
            hnf(&m(&[&[1, 2], &[1]])),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        );
        assert_eq!(hnf(&[]), Err(Error::Empty));
    }

    #[test]
    fn hnf_reduces_below_pivots() {
        // Z^2 + Z(1/4, 1/4), scaled by 4.
        assert_eq!(hnf(&m(&[&[4, 0], &[0, 4], &[1, 1]])).unwrap(), m(&[&[4, 0], &[1, 1]]));
        assert_eq!(hnf(&m(&[&[3, 0], &[-5, 1]])).unwrap(), m(&[&[3, 0], &[1, 1]]));
    }

    #[test]
    fn snf_examples() {
        let f = |r: &[&[i64]]| snf(&m(r)).unwrap();
        assert_eq!(f(&[&[2, 0], &[0, 2]]), vec![BigInt::from(2), BigInt::from(2)]);
        assert_eq!(f(&[&[1, 0], &[1, 2]]), vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(f(&[&[2, 4], &[6, 8]]), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(f(&[&[2, 0], &[0, 3]]), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(snf(&m(&[&[0, 0], &[0, 0]])), Err(Error::ZeroMatrix));
    }

    #[test]
    fn lattice_from_generators_examples() {
        assert_eq!(lat(&["1 0", "0 1", "1 1/2"]).basis(), vec![v("1 0"), v("0 1/2")]);
        assert_eq!(lat(&["1 0", "0 1"]), Lattice::standard(2).unwrap());
        let half = lat(&["1/2 1/2", "1 0", "0 1"]);
        assert_eq!(half.basis(), vec![v("1 0"), v("1/2 1/2")]);
        assert!(half.contains(&v("3/2 1/2")).unwrap());
        assert!(!half.contains(&v("1/2 0")).unwrap());
        assert_eq!(Lattice::from_generators(&[v("1 1"), v("2 2")]), Err(Error::NotFullRank));
    }

    #[test]
    fn sum_examples() {
        let z2 = Lattice::standard(2).unwrap();
        assert_eq!(z2.sum(&z2).unwrap(), z2);
        let m1 = lat(&["1 1/2", "1 0", "0 1"]);
        assert_eq!(z2.sum(&m1).unwrap(), lat(&["1 0", "0 1/2"]));
        let quarter = lat(&["1 0", "0 1", "1/4 1/4"]);
        assert_eq!(m1.sum(&quarter).unwrap(), lat(&["1 0", "0 1", "1/4 1/4", "0 1/2"]));
        assert!(z2.sum(&Lattice::standard(3).unwrap()).is_err());
    }

    #[test]
    fn dual_examples() {
        let z2 = Lattice::standard(2).unwrap();
        assert_eq!(z2.dual(), z2);
        assert_eq!(lat(&["1 0", "0 1/2"]).dual(), lat(&["1 0", "0 2"]));
        let n = lat(&["1 0", "0 1", "1/4 1/4"]).dual();
        assert_eq!(n, lat(&["4 0", "-1 1"]));
        assert!(n.contains(&v("1 3")).unwrap());
        assert!(!n.contains(&v("1 2")).unwrap());
    }

    #[test]
    fn contains_examples() {
        let n = lat(&["1 0", "0 2"]);
        assert!(!n.contains(&v("0 1")).unwrap());
        assert!(n.contains(&v("3 4")).unwrap());
        assert!(n.contains(&v("0 0")).unwrap());
        assert!(n.contains(&v("1 2 3")).is_err());
    }

    #[test]
    fn index_examples() {
        let z2 = Lattice::standard(2).unwrap();
        let m = lat(&["1 0", "0 1/2"]);
        assert_eq!(z2.index_in(&m).unwrap(), BigInt::from(2));
        assert_eq!(m.index_in(&m).unwrap(), BigInt::from(1));
        assert_eq!(lat(&["2 0", "0 2"]).index_in(&z2).unwrap(), BigInt::from(4));
        assert_eq!(m.index_in(&z2), Err(Error::NotSublattice));
    }

    #[test]
    fn primitive_on_ray_examples() {
        let n = lat(&["1 0", "0 2"]);
        assert_eq!(n.primitive_on_ray(1).unwrap(), v("0 2"));
        let z3 = Lattice::standard(3).unwrap();
        for k in 0..3 {
            assert_eq!(z3.primitive_on_ray(k).unwrap(), RatVec::unit(3, k));
        }
        let n4 = lat(&["4 0", "-1 1"]);
        assert_eq!(n4.primitive_on_ray(0).unwrap(), v("4 0"));
        assert_eq!(lat(&["1/2 1/2", "1 0", "0 1"]).primitive_on_ray(1).unwrap(), v("0 1"));
        assert_eq!(lat(&["1/3 0", "0 1"]).primitive_on_ray(0).unwrap(), v("1/3 0"));
    }

    #[test]
    fn section_of_even_sum_lattice() {
        let n = lat(&["2 0 0", "1 1 0", "0 0 1"]);
        assert_eq!(n.section(&[0, 1]).unwrap(), lat(&["2 0", "1 1"]));
        assert_eq!(n.section(&[0, 2]).unwrap(), lat(&["2 0", "0 1"]));
        assert!(n.section(&[3]).is_err());
    }

    #[test]
    fn primitive_decomposition() {
        let n = lat(&["2 0", "1 1"]);
        let (p, q) = n.primitive_decomposition(&v("4 4")).unwrap().unwrap();
        assert_eq!((p, q), (v("1 1"), BigInt::from(4)));
        let (p, q) = n.primitive_decomposition(&v("2 0")).unwrap().unwrap();
        assert_eq!((p, q), (v("2 0"), BigInt::from(1)));
        assert_eq!(n.primitive_decomposition(&v("1 0")).unwrap(), None);
    }

    #[test]
    fn ratvec_serde() {
        let x = v("1 -1/2 3");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[[1,1],[-1,2],[3,1]]");
        assert_eq!(serde_json::from_str::<RatVec>("[[2,4],[0,5]]").unwrap(), v("1/2 0"));
        assert!(serde_json::from_str::<RatVec>("[[1,0]]").is_err());
        assert!(serde_json::from_str::<RatVec>("[[1,-2]]").is_err());
    }
}
