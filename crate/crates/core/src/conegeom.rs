//! The positive orthant `σ` relative to a lattice `N`: faces, regularity,
//! minimal lattice vectors of the singular part and monomial valuations.
//!
//! # Search bound for minimal vectors
//!
//! Let `τ_I` be a singular face with primitive edge generators `p_i = c_i e_i`
//! and let `x ∈ relint(τ_I) ∩ N`. If `x_i > c_i` for some `i ∈ I` then
//! `x − p_i` is again in `relint(τ_I) ∩ N`, hence in `S`, and it lies strictly
//! below `x` for `≤_σ`. Every minimal element of `S` therefore has
//! `0 < x_i ≤ c_i` on its support, i.e. lies in the half-open parallelepiped
//! of the face it belongs to. Enumerating those boxes over all singular faces
//! and keeping the minimal points gives exactly the minimal elements of `S`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intlat::{self, Lattice, RatVec, MAX_DIM};

/// A set of coordinate axes `I ⊆ {0..d-1}`, naming the face
/// `τ_I = pos{e_i : i ∈ I}` of the orthant.
///
/// Displayed and serialized 1-based. Ordered by size, then lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FaceSet(u32);

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);

    pub fn from_axes<I: IntoIterator<Item = usize>>(axes: I) -> Result<FaceSet> {
        let mut bits = 0u32;
        for a in axes {
            if a >= MAX_DIM {
                return Err(Error::BadFace(format!("axis {} out of range", a + 1)));
            }
            bits |= 1 << a;
        }
        Ok(FaceSet(bits))
    }

    /// From 1-based indices, validated against the ambient dimension.
    pub fn from_one_based(indices: &[usize], dim: usize) -> Result<FaceSet> {
        if indices.is_empty() {
            return Err(Error::BadFace("empty index set".into()));
        }
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > dim {
                return Err(Error::BadFace(format!("index {i} outside 1..={dim}")));
            }
            if bits & (1 << (i - 1)) != 0 {
                return Err(Error::BadFace(format!("index {i} repeated")));
            }
            bits |= 1 << (i - 1);
        }
        Ok(FaceSet(bits))
    }

    pub fn singleton(axis: usize) -> FaceSet {
        assert!(axis < MAX_DIM);
        FaceSet(1 << axis)
    }

    pub fn full(dim: usize) -> FaceSet {
        assert!(dim <= MAX_DIM);
        FaceSet(((1u64 << dim) - 1) as u32)
    }

    /// All nonempty faces of the orthant in `dim` dimensions, in `Ord` order.
    pub fn all_nonempty(dim: usize) -> Vec<FaceSet> {
        let mut faces: Vec<FaceSet> = (1..=FaceSet::full(dim).0).map(FaceSet).collect();
        faces.sort();
        faces
    }

    pub fn support_of(v: &RatVec) -> FaceSet {
        FaceSet(v.support().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, axis: usize) -> bool {
        axis < MAX_DIM && self.0 & (1 << axis) != 0
    }

    pub fn is_subset(self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest axis plus one; zero for the empty set.
    pub fn span_dim(self) -> usize {
        (u32::BITS - self.0.leading_zeros()) as usize
    }

    pub fn axes(self) -> impl Iterator<Item = usize> {
        (0..MAX_DIM).filter(move |&i| self.contains(i))
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.axes().map(|i| i + 1).collect()
    }
}

impl Ord for FaceSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.axes().cmp(other.axes()))
    }
}

impl PartialOrd for FaceSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.to_one_based().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FaceSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FaceSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let idx = Vec::<usize>::deserialize(deserializer)?;
        FaceSet::from_one_based(&idx, MAX_DIM).map_err(D::Error::custom)
    }
}

/// A face of the orthant together with its primitive edge generators in `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub indices: FaceSet,
    pub primgens: Vec<RatVec>,
    /// `[N ∩ span τ : Z<primgens>]`.
    pub index: u64,
    pub regular: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    ToricMinimal,
    Barycenter,
}

/// A toric divisor `D_v` labelled by `v ∈ σ ∩ N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisor {
    pub vector: RatVec,
    pub primitive: RatVec,
    pub multiplicity: u64,
    pub origin: Origin,
}

impl Divisor {
    /// Decomposes `vector` into primitive part and multiplicity in `n`.
    pub fn new(n: &Lattice, vector: RatVec, origin: Origin) -> Result<Divisor> {
        if vector.is_zero() || !vector.is_nonnegative() {
            return Err(Error::BadFace(format!("divisor vector {vector} is not in σ \\ 0")));
        }
        let (primitive, q) = n.primitive_decomposition(&vector)?.ok_or(Error::NotSublattice)?;
        Ok(Divisor {
            vector,
            primitive,
            multiplicity: u64::try_from(q).map_err(|_| Error::Overflow)?,
            origin,
        })
    }
}

/// `u ≤_σ v`, i.e. `v − u` lies in the orthant.
pub fn leq_sigma(u: &RatVec, v: &RatVec) -> Result<bool> {
    Ok(v.sub(u)?.is_nonnegative())
}

fn check_face(n: &Lattice, face: FaceSet) -> Result<()> {
    if face.span_dim() > n.dim() {
        return Err(Error::BadFace(format!("{face} exceeds dimension {}", n.dim())));
    }
    Ok(())
}

pub fn face_data(n: &Lattice, face: FaceSet) -> Result<Face> {
    check_face(n, face)?;
    let axes: Vec<usize> = face.axes().collect();
    if axes.is_empty() {
        return Ok(Face {
            indices: face,
            primgens: Vec::new(),
            index: 1,
            regular: true,
        });
    }
    let primgens = axes
        .iter()
        .map(|&a| n.primitive_on_ray(a))
        .collect::<Result<Vec<_>>>()?;
    // Coordinates of the p_i in a basis of N ∩ span τ; the index is the product
    // of the invariant factors of that coefficient matrix.
    let section = n.section(&axes)?;
    let coeffs = primgens
        .iter()
        .map(|p| {
            let local = RatVec::new(axes.iter().map(|&a| p.coords()[a].clone()).collect());
            section.coefficients(&local).map(|c| c.expect("primitive generator lies in N"))
        })
        .collect::<Result<Vec<_>>>()?;
    let idx: BigInt = intlat::snf(&coeffs)?.iter().product();
    let index = u64::try_from(idx).map_err(|_| Error::Overflow)?;
    Ok(Face {
        indices: face,
        primgens,
        index,
        regular: index == 1,
    })
}

/// All faces of the orthant (the zero face excluded), in `FaceSet` order.
pub fn all_faces(n: &Lattice) -> Result<Vec<Face>> {
    FaceSet::all_nonempty(n.dim())
        .into_iter()
        .map(|f| face_data(n, f))
        .collect()
}

/// Points of `N` with `0 < x_i ≤ c_i` on `I` and `x_j = 0` off `I`, where `c_i`
/// is the positive coordinate of the `i`-th primitive edge generator.
///
/// Requires `N ⊆ Z^d`. Points are produced by walking the triangular basis of
/// `N ∩ span τ_I` coordinate by coordinate, so only lattice points are visited.
/// Returned sorted.
pub fn parallelepiped_points(n: &Lattice, face: FaceSet) -> Result<Vec<RatVec>> {
    check_face(n, face)?;
    if face.is_empty() {
        return Err(Error::BadFace("empty index set".into()));
    }
    if !n.is_integral() {
        return Err(Error::NotIntegral);
    }
    let axes: Vec<usize> = face.axes().collect();
    let bounds = axes
        .iter()
        .map(|&a| intlat::to_i64(&n.primitive_on_ray(a)?.coords()[a].to_integer()))
        .collect::<Result<Vec<i64>>>()?;
    let section = n.section(&axes)?;
    let basis = section
        .scaled_basis()
        .iter()
        .map(|r| r.iter().map(intlat::to_i64).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;

    let m = axes.len();
    let mut out = Vec::new();
    let mut x = vec![0i64; m];
    walk_box(&basis, &bounds, m, &mut x, &mut |local| {
        let mut full = vec![0i64; n.dim()];
        for (&a, &c) in axes.iter().zip(local) {
            full[a] = c;
        }
        out.push(RatVec::from_ints(&full));
    });
    out.sort();
    Ok(out)
}

/// Recursively fixes the coefficient of basis row `k - 1`; `partial` holds the
/// contribution of the rows already fixed.
fn walk_box(basis: &[Vec<i64>], bounds: &[i64], k: usize, partial: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if k == 0 {
        emit(partial);
        return;
    }
    let j = k - 1;
    let pivot = basis[j][j];
    let s = partial[j];
    // Need 0 < s + z·pivot ≤ bound.
    let lo = (1 - s).div_euclid(pivot) + i64::from((1 - s).rem_euclid(pivot) != 0);
    let hi = (bounds[j] - s).div_euclid(pivot);
    for z in lo..=hi {
        let saved = partial.clone();
        for (p, b) in partial.iter_mut().zip(&basis[j]).take(j + 1) {
            *p += z * b;
        }
        walk_box(basis, bounds, j, partial, emit);
        *partial = saved;
    }
}

/// The `≤_σ`-minimal members of `pts`, sorted and deduplicated.
pub fn minimal_elements(pts: &[RatVec]) -> Result<Vec<RatVec>> {
    let distinct: BTreeSet<&RatVec> = pts.iter().collect();
    // A point can only be dominated by one with a smaller coordinate sum.
    let mut by_sum: Vec<(BigRational, &RatVec)> = distinct
        .into_iter()
        .map(|p| (p.coords().iter().sum(), p))
        .collect();
    by_sum.sort();
    let mut minimal: Vec<RatVec> = Vec::new();
    for (_, p) in by_sum {
        let mut dominated = false;
        for q in &minimal {
            if leq_sigma(q, p)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            minimal.push(p.clone());
        }
    }
    minimal.sort();
    Ok(minimal)
}

/// Minimal elements of `S = ⋃_{τ singular} relint(τ) ∩ N`, as divisors.
pub fn minimal_toric_divisors(n: &Lattice) -> Result<Vec<Divisor>> {
    if !n.is_integral() {
        return Err(Error::NotIntegral);
    }
    let mut candidates = Vec::new();
    for face in all_faces(n)? {
        if !face.regular {
            candidates.extend(parallelepiped_points(n, face.indices)?);
        }
    }
    minimal_elements(&candidates)?
        .into_iter()
        .map(|v| Divisor::new(n, v, Origin::ToricMinimal))
        .collect()
}

/// Sum of the primitive edge generators of a regular face.
pub fn barycenter(n: &Lattice, face: FaceSet) -> Result<Divisor> {
    if face.is_empty() {
        return Err(Error::BadFace("empty index set".into()));
    }
    let data = face_data(n, face)?;
    if !data.regular {
        return Err(Error::SingularFace(face));
    }
    let sum = data
        .primgens
        .iter()
        .try_fold(RatVec::zero(n.dim()), |acc, p| acc.add(p))?;
    Divisor::new(n, sum, Origin::Barycenter)
}

/// `min_{u ∈ support} <v, u>`.
pub fn monomial_valuation(v: &RatVec, support: &[RatVec]) -> Result<BigRational> {
    let mut best: Option<BigRational> = None;
    for u in support {
        let val = v.dot(u)?;
        best = Some(match best {
            Some(b) if b <= val => b,
            _ => val,
        });
    }
    best.ok_or(Error::EmptySupport)
}

#[cfg(test)]
mod tests {
    use super::*;

    use num_traits::Zero;

    fn int(q: u64) -> BigRational {
        BigRational::from_integer(BigInt::from(q))
    }

    fn v(s: &str) -> RatVec {
        s.parse().unwrap()
    }

    fn lat(gens: &[&str]) -> Lattice {
        let gens: Vec<RatVec> = gens.iter().map(|g| g.parse().unwrap()).collect();
        Lattice::from_generators(&gens).unwrap()
    }

    fn face(idx: &[usize]) -> FaceSet {
        FaceSet::from_one_based(idx, MAX_DIM).unwrap()
    }

    fn even() -> Lattice {
        lat(&["2 0", "1 1"])
    }

    fn mod4() -> Lattice {
        lat(&["4 0", "-1 1"])
    }

    #[test]
    fn order_examples() {
        assert!(leq_sigma(&v("1 1"), &v("2 1")).unwrap());
        assert!(!leq_sigma(&v("1 3"), &v("3 1")).unwrap());
        assert!(!leq_sigma(&v("3 1"), &v("1 3")).unwrap());
        assert!(leq_sigma(&v("1/2 7"), &v("1/2 7")).unwrap());
        assert!(leq_sigma(&v("1"), &v("1 2")).is_err());
    }

    #[test]
    fn faceset_basics() {
        let f = face(&[1, 3]);
        assert_eq!(f.to_string(), "{1,3}");
        assert_eq!(f.axes().collect::<Vec<_>>(), vec![0, 2]);
        assert!(FaceSet::singleton(0).is_subset(f));
        assert!(!f.is_subset(FaceSet::singleton(0)));
        assert_eq!(FaceSet::all_nonempty(2), vec![face(&[1]), face(&[2]), face(&[1, 2])]);
        assert!(FaceSet::from_one_based(&[0], 2).is_err());
        assert!(FaceSet::from_one_based(&[3], 2).is_err());
        assert!(FaceSet::from_one_based(&[1, 1], 2).is_err());
        assert!(FaceSet::from_one_based(&[], 2).is_err());
    }

    #[test]
    fn face_data_examples() {
        let f = face_data(&lat(&["1 0", "0 2"]), face(&[1, 2])).unwrap();
        assert_eq!(f.primgens, vec![v("1 0"), v("0 2")]);
        assert!(f.regular);

        let f = face_data(&even(), face(&[1, 2])).unwrap();
        assert_eq!(f.primgens, vec![v("2 0"), v("0 2")]);
        assert_eq!(f.index, 2);
        assert!(!f.regular);

        for n in [even(), mod4(), lat(&["3 0", "1 5"])] {
            for k in [1, 2] {
                assert!(face_data(&n, face(&[k])).unwrap().regular);
            }
        }
        assert!(face_data(&even(), FaceSet::EMPTY).unwrap().regular);
        assert!(face_data(&even(), face(&[3])).is_err());
    }

    #[test]
    fn parallelepiped_examples() {
        assert_eq!(parallelepiped_points(&even(), face(&[1, 2])).unwrap(), vec![v("1 1"), v("2 2")]);
        let z2 = Lattice::standard(2).unwrap();
        assert_eq!(parallelepiped_points(&z2, face(&[1, 2])).unwrap(), vec![v("1 1")]);
        assert_eq!(
            parallelepiped_points(&mod4(), face(&[1, 2])).unwrap(),
            vec![v("1 3"), v("2 2"), v("3 1"), v("4 4")]
        );
        assert_eq!(parallelepiped_points(&mod4(), face(&[2])).unwrap(), vec![v("0 4")]);
        assert_eq!(parallelepiped_points(&lat(&["1 0", "0 1/2"]), face(&[1])), Err(Error::NotIntegral));
    }

    #[test]
    fn minimal_elements_examples() {
        assert_eq!(minimal_elements(&[v("1 1"), v("2 2")]).unwrap(), vec![v("1 1")]);
        assert_eq!(
            minimal_elements(&[v("1 3"), v("2 2"), v("3 1"), v("4 4")]).unwrap(),
            vec![v("1 3"), v("2 2"), v("3 1")]
        );
        assert_eq!(minimal_elements(&[]).unwrap(), Vec::<RatVec>::new());
        assert_eq!(minimal_elements(&[v("1 1"), v("1 1")]).unwrap(), vec![v("1 1")]);
    }

    #[test]
    fn minimal_toric_divisor_examples() {
        assert!(minimal_toric_divisors(&Lattice::standard(2).unwrap()).unwrap().is_empty());
        let d = minimal_toric_divisors(&even()).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].vector, v("1 1"));
        assert_eq!(d[0].primitive, v("1 1"));
        assert_eq!(d[0].multiplicity, 1);
        assert_eq!(d[0].origin, Origin::ToricMinimal);
        let vecs: Vec<_> = minimal_toric_divisors(&mod4()).unwrap().into_iter().map(|d| d.vector).collect();
        assert_eq!(vecs, vec![v("1 3"), v("2 2"), v("3 1")]);
    }

    #[test]
    fn minimal_divisor_multiplicity() {
        // (2,2) is twice the primitive (1,1) in the even lattice but minimal in
        // the mod-4 lattice, where (1,1) is absent.
        let d = minimal_toric_divisors(&mod4()).unwrap();
        assert!(d.iter().all(|d| d.multiplicity == 1));
    }

    #[test]
    fn barycenter_examples() {
        let b = barycenter(&lat(&["1 0", "0 2"]), face(&[1])).unwrap();
        assert_eq!((b.vector.clone(), b.primitive.clone(), b.multiplicity), (v("1 0"), v("1 0"), 1));
        let b = barycenter(&even(), face(&[1])).unwrap();
        assert_eq!((b.vector.clone(), b.primitive.clone(), b.multiplicity), (v("2 0"), v("2 0"), 1));
        let b = barycenter(&Lattice::standard(2).unwrap(), face(&[1, 2])).unwrap();
        assert_eq!((b.vector.clone(), b.multiplicity, b.origin), (v("1 1"), 1, Origin::Barycenter));
        assert_eq!(barycenter(&even(), face(&[1, 2])), Err(Error::SingularFace(face(&[1, 2]))));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(
            monomial_valuation(&v("1 1"), &[v("2 0"), v("1 3")]).unwrap(),
            BigRational::from_integer(2.into())
        );
        assert_eq!(monomial_valuation(&v("2"), &[v("3/2")]).unwrap(), BigRational::from_integer(3.into()));
        assert!(monomial_valuation(&v("0 0 0"), &[v("1 2 3"), v("5/7 0 1")]).unwrap().is_zero());
        assert_eq!(monomial_valuation(&v("1 1"), &[]), Err(Error::EmptySupport));
    }

    #[test]
    fn valuation_scales_with_multiplicity() {
        let support = [v("3/2 1"), v("1/2 5/2")];
        let base = v("2 4");
        let val = monomial_valuation(&base, &support).unwrap();
        assert_eq!(monomial_valuation(&base.scale(&int(3)), &support).unwrap(), val * int(3));
    }
}
