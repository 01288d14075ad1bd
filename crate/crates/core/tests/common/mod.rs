#![allow(dead_code)]

use num_rational::BigRational;
use qonash::{build_tower, BranchLattices, BranchSpec, Lattice, RatVec};
use rand::Rng;

pub fn v(s: &str) -> RatVec {
    s.parse().unwrap()
}

pub fn lat(gens: &[&str]) -> Lattice {
    let gens: Vec<RatVec> = gens.iter().map(|g| v(g)).collect();
    Lattice::from_generators(&gens).unwrap()
}

fn random_increment<R: Rng>(rng: &mut R, dim: usize, max_den: i64) -> RatVec {
    loop {
        let den = rng.gen_range(1..=max_den);
        let coords: Vec<BigRational> = (0..dim)
            .map(|_| BigRational::new(rng.gen_range(0..=2 * den).into(), den.into()))
            .collect();
        let inc = RatVec::new(coords);
        if !inc.is_zero() {
            return inc;
        }
    }
}

/// Random valid characteristic exponents: a componentwise increasing chain
/// with denominators at most `max_den`, accepted only if each step enlarges
/// the lattice and `[M : Z^d] ≤ max_index`.
pub fn random_tower<R: Rng>(
    rng: &mut R,
    dim: usize,
    max_steps: usize,
    max_den: i64,
    max_index: u64,
) -> (BranchSpec, BranchLattices) {
    loop {
        let g = rng.gen_range(1..=max_steps);
        let mut exps: Vec<RatVec> = Vec::new();
        for _ in 0..g {
            let inc = random_increment(rng, dim, max_den);
            let next = match exps.last() {
                Some(prev) => prev.add(&inc).unwrap(),
                None => inc,
            };
            exps.push(next);
        }
        let spec = BranchSpec::new("random", dim, exps);
        if let Ok(t) = build_tower(&spec) {
            if t.degree_n <= max_index {
                return (spec, t);
            }
        }
    }
}

/// A random full-rank lattice between `Z^d` and `(1/max_den) Z^d`.
pub fn random_overlattice<R: Rng>(rng: &mut R, dim: usize, max_den: i64) -> Lattice {
    let mut gens: Vec<RatVec> = (0..dim).map(|k| RatVec::unit(dim, k)).collect();
    for _ in 0..rng.gen_range(1..=3) {
        gens.push(random_increment(rng, dim, max_den));
    }
    Lattice::from_generators(&gens).unwrap()
}

/// A random full-rank sublattice of `Z^d` with small entries.
pub fn random_sublattice<R: Rng>(rng: &mut R, dim: usize, max_entry: i64) -> Lattice {
    loop {
        let gens: Vec<RatVec> = (0..dim)
            .map(|_| {
                let row: Vec<i64> = (0..dim).map(|_| rng.gen_range(-max_entry..=max_entry)).collect();
                RatVec::from_ints(&row)
            })
            .collect();
        if let Ok(l) = Lattice::from_generators(&gens) {
            return l;
        }
    }
}
