//! Essential divisors relative to `B`, per branch and for a reducible germ.
//!
//! For one branch the relevant faces are the coordinate faces of `σ` whose
//! orbit closures are the components of the preimage of `B` in the
//! normalization. The essential divisors are labelled by the minimal elements
//! of `{e_i} ∪ {v_j}`, where the `e_i` are barycenters of the regular relevant
//! faces and the `v_j` are the minimal vectors of the singular part of `σ`.
//! Their number is also the number of Nash components over `B`.
//!
//! For a reducible germ the singular locus pulls back to the disjoint union of
//! the per-branch problems with `B_i = Sing(X_i) ∪ ⋃_j (X_i ∩ X_j)`, so the
//! counts add up.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::conegeom::{
    all_faces, barycenter, leq_sigma, minimal_toric_divisors, Divisor, Face, FaceSet, Origin,
};
use crate::error::{Error, Result};
use crate::intlat::{Lattice, RatVec};
use crate::qobranch::{build_tower, BranchLattices, BranchSpec};
use crate::SCHEMA_VERSION;

/// Contact of this branch with another one: `f_other` restricted to this
/// branch is `x^exponent` times a unit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contact {
    pub with: String,
    pub exponent: RatVec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchInput {
    pub spec: BranchSpec,
    /// Coordinate faces of the singular locus of the branch.
    pub sing_faces: Vec<FaceSet>,
    /// Additional faces when `B` is larger than the singular locus.
    pub extra_faces: Vec<FaceSet>,
    pub contacts: Vec<Contact>,
}

impl BranchInput {
    pub fn new(spec: BranchSpec) -> Self {
        BranchInput {
            spec,
            sing_faces: Vec::new(),
            extra_faces: Vec::new(),
            contacts: Vec::new(),
        }
    }
}

/// Inclusion-minimal face sets, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RelevantFaces(pub Vec<FaceSet>);

impl RelevantFaces {
    pub fn faces(&self) -> &[FaceSet] {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "code", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Diagnostic {
    /// A barycenter lies strictly above another candidate; the face input is
    /// inconsistent with the singular locus.
    LemmaMinViolation {
        barycenter: RatVec,
        dominated_by: RatVec,
    },
    /// No relevant faces: nothing lies over `B`.
    EmptyB,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialDivisors {
    pub s_min: Vec<Divisor>,
    pub e: Vec<Divisor>,
    pub v: Vec<Divisor>,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub label: String,
    pub lattices: BranchLattices,
    pub contacts: Vec<Contact>,
    pub faces: Vec<Face>,
    pub singular_faces_of_sigma: Vec<FaceSet>,
    pub relevant: RelevantFaces,
    pub s_min: Vec<Divisor>,
    #[serde(rename = "E")]
    pub e: Vec<Divisor>,
    #[serde(rename = "V")]
    pub v: Vec<Divisor>,
    pub nash_count: u64,
    pub diagnostics: Vec<Diagnostic>,
}

impl BranchReport {
    /// `E ∪ V`, the essential divisors over `B`.
    pub fn essential(&self) -> impl Iterator<Item = &Divisor> {
        self.e.iter().chain(&self.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyReport {
    pub schema_version: u32,
    pub dim: usize,
    pub branches: Vec<BranchReport>,
    pub total_nash: u64,
    pub total_essential: u64,
    pub warnings: Vec<String>,
}

/// Coordinate divisors cut out by the monomial `x^m`.
pub fn contact_faces(m: &RatVec) -> Result<Vec<FaceSet>> {
    if m.is_zero() || !m.is_nonnegative() {
        return Err(Error::ZeroContact);
    }
    Ok(m.support().map(FaceSet::singleton).collect())
}

/// Keeps the inclusion-minimal faces: a larger face names a smaller orbit
/// closure lying inside that of any face it contains.
pub fn componentize(raw: &[FaceSet]) -> RelevantFaces {
    let distinct: BTreeSet<FaceSet> = raw.iter().copied().collect();
    let kept = distinct
        .iter()
        .filter(|f| !distinct.iter().any(|g| g != *f && g.is_subset(**f)))
        .copied()
        .collect();
    RelevantFaces(kept)
}

/// Minimal elements of `barycenters ∪ s_min`, split back by origin. A
/// barycenter that is not minimal is dropped and reported.
pub fn select_minimal(
    barycenters: Vec<Divisor>,
    s_min: &[Divisor],
) -> Result<(Vec<Divisor>, Vec<Divisor>, Vec<Diagnostic>)> {
    let pool: Vec<&RatVec> = barycenters.iter().chain(s_min).map(|d| &d.vector).collect();
    let strictly_below = |x: &RatVec| -> Result<Option<RatVec>> {
        for y in &pool {
            if *y != x && leq_sigma(y, x)? {
                return Ok(Some((*y).clone()));
            }
        }
        Ok(None)
    };

    let mut diagnostics = Vec::new();
    let mut e = Vec::new();
    for b in &barycenters {
        match strictly_below(&b.vector)? {
            Some(lower) => diagnostics.push(Diagnostic::LemmaMinViolation {
                barycenter: b.vector.clone(),
                dominated_by: lower,
            }),
            None => e.push(b.clone()),
        }
    }
    let mut v = Vec::new();
    for s in s_min {
        if strictly_below(&s.vector)?.is_none() {
            v.push(s.clone());
        }
    }
    e.sort_by(|a, b| a.vector.cmp(&b.vector));
    v.sort_by(|a, b| a.vector.cmp(&b.vector));
    Ok((e, v, diagnostics))
}

/// Essential divisors over the relevant faces for the lattice `n`.
pub fn essential_divisors(n: &Lattice, relevant: &RelevantFaces) -> Result<EssentialDivisors> {
    let faces = all_faces(n)?;
    essential_divisors_with_faces(n, relevant, &faces)
}

fn essential_divisors_with_faces(
    n: &Lattice,
    relevant: &RelevantFaces,
    faces: &[Face],
) -> Result<EssentialDivisors> {
    let s_min = minimal_toric_divisors(n)?;
    let regular = |f: FaceSet| faces.iter().find(|x| x.indices == f).is_some_and(|x| x.regular);
    // Singular relevant faces need no barycenter: every singular face already
    // feeds S.
    let barycenters = relevant
        .faces()
        .iter()
        .filter(|f| regular(**f))
        .map(|&f| barycenter(n, f))
        .collect::<Result<Vec<_>>>()?;
    let (e, v, mut diagnostics) = select_minimal(barycenters, &s_min)?;
    if relevant.faces().is_empty() {
        diagnostics.push(Diagnostic::EmptyB);
    }
    Ok(EssentialDivisors {
        s_min,
        e,
        v,
        diagnostics,
    })
}

fn check_input(input: &BranchInput) -> Result<()> {
    let d = input.spec.dim;
    for &f in input.sing_faces.iter().chain(&input.extra_faces) {
        if f.is_empty() || f.span_dim() > d {
            return Err(Error::BadFace(format!("{f} is not a nonempty face in dimension {d}")));
        }
    }
    for &f in &input.sing_faces {
        if f.len() > 2 && f != FaceSet::full(d) {
            return Err(Error::BadFace(format!(
                "singular-locus face {f} must have one or two indices"
            )));
        }
    }
    for c in &input.contacts {
        if c.exponent.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: c.exponent.dim(),
            });
        }
    }
    Ok(())
}

/// Full analysis of one branch over `B_i = Sing(X_i) ∪ ⋃ (X_i ∩ X_j)`.
pub fn analyze_branch(input: &BranchInput) -> Result<BranchReport> {
    analyze_branch_inner(input).map_err(|e| e.in_branch(&input.spec.label))
}

fn analyze_branch_inner(input: &BranchInput) -> Result<BranchReport> {
    check_input(input)?;
    let lattices = build_tower(&input.spec)?;
    let n = &lattices.n;
    let faces = all_faces(n)?;
    let singular_faces_of_sigma: Vec<FaceSet> =
        faces.iter().filter(|f| !f.regular).map(|f| f.indices).collect();
    if input.sing_faces.is_empty() {
        if let Some(&f) = singular_faces_of_sigma.first() {
            return Err(Error::BMissingSing(f));
        }
    }

    let mut raw: Vec<FaceSet> = input.sing_faces.clone();
    raw.extend(&input.extra_faces);
    for c in &input.contacts {
        raw.extend(contact_faces(&c.exponent)?);
    }
    let relevant = componentize(&raw);
    let found = essential_divisors_with_faces(n, &relevant, &faces)?;

    let nash_count = (found.e.len() + found.v.len()) as u64;
    debug_assert!(is_antichain(found.e.iter().chain(&found.v)));
    debug_assert!(found.e.iter().all(|d| d.origin == Origin::Barycenter));
    Ok(BranchReport {
        label: input.spec.label.clone(),
        contacts: input.contacts.clone(),
        faces,
        singular_faces_of_sigma,
        relevant,
        s_min: found.s_min,
        e: found.e,
        v: found.v,
        nash_count,
        diagnostics: found.diagnostics,
        lattices,
    })
}

/// `true` when no two of the vectors are comparable for `≤_σ`.
pub fn is_antichain<'a>(divisors: impl IntoIterator<Item = &'a Divisor>) -> bool {
    let vs: Vec<&RatVec> = divisors.into_iter().map(|d| &d.vector).collect();
    vs.iter().enumerate().all(|(i, a)| {
        vs.iter()
            .enumerate()
            .all(|(j, b)| i == j || !leq_sigma(a, b).unwrap_or(true))
    })
}

fn check_contacts(branches: &[BranchInput]) -> Result<()> {
    let mut labels = HashMap::new();
    for (i, b) in branches.iter().enumerate() {
        if labels.insert(b.spec.label.as_str(), i).is_some() {
            return Err(Error::DuplicateLabel(b.spec.label.clone()));
        }
    }
    for b in branches {
        for c in &b.contacts {
            let Some(&j) = labels.get(c.with.as_str()) else {
                return Err(Error::UnknownLabel(c.with.clone()));
            };
            if c.with == b.spec.label {
                return Err(Error::UnknownLabel(c.with.clone()).in_branch(&b.spec.label));
            }
            if !branches[j].contacts.iter().any(|r| r.with == b.spec.label) {
                return Err(Error::AsymmetricContact {
                    from: b.spec.label.clone(),
                    to: c.with.clone(),
                });
            }
        }
    }
    Ok(())
}

/// Analyzes every branch and adds up the counts. Branch order is kept.
pub fn analyze_variety(branches: &[BranchInput]) -> Result<VarietyReport> {
    let dim = branches.first().ok_or(Error::Empty)?.spec.dim;
    for b in branches {
        if b.spec.dim != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: b.spec.dim,
            }
            .in_branch(&b.spec.label));
        }
    }
    check_contacts(branches)?;
    let reports = branches.iter().map(analyze_branch).collect::<Result<Vec<_>>>()?;
    let total_nash: u64 = reports.iter().map(|r| r.nash_count).sum();
    let total_essential = reports.iter().map(|r| r.essential().count() as u64).sum();
    let mut warnings = Vec::new();
    if total_nash == 0 {
        warnings.push("no essential divisors: the germ is smooth or B is empty".to_string());
    }
    for r in &reports {
        for d in &r.diagnostics {
            if let Diagnostic::LemmaMinViolation { barycenter, dominated_by } = d {
                warnings.push(format!(
                    "branch '{}': barycenter {barycenter} lies above {dominated_by}; face input is inconsistent",
                    r.label
                ));
            }
        }
    }
    Ok(VarietyReport {
        schema_version: SCHEMA_VERSION,
        dim,
        branches: reports,
        total_nash,
        total_essential,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conegeom::Origin;

    fn v(s: &str) -> RatVec {
        s.parse().unwrap()
    }

    fn lat(gens: &[&str]) -> Lattice {
        let gens: Vec<RatVec> = gens.iter().map(|g| g.parse().unwrap()).collect();
        Lattice::from_generators(&gens).unwrap()
    }

    fn faces(sets: &[&[usize]]) -> Vec<FaceSet> {
        sets.iter().map(|s| FaceSet::from_one_based(s, 16).unwrap()).collect()
    }

    fn vectors(ds: &[Divisor]) -> Vec<RatVec> {
        ds.iter().map(|d| d.vector.clone()).collect()
    }

    fn branch(label: &str, exps: &[&str], sing: &[&[usize]], contacts: &[(&str, &str)]) -> BranchInput {
        BranchInput {
            spec: BranchSpec::new(label, 2, exps.iter().map(|e| v(e)).collect()),
            sing_faces: faces(sing),
            extra_faces: vec![],
            contacts: contacts
                .iter()
                .map(|(w, m)| Contact {
                    with: w.to_string(),
                    exponent: v(m),
                })
                .collect(),
        }
    }

    #[test]
    fn contact_face_examples() {
        assert_eq!(contact_faces(&v("1 1")).unwrap(), faces(&[&[1], &[2]]));
        assert_eq!(contact_faces(&v("0 3/2")).unwrap(), faces(&[&[2]]));
        assert_eq!(contact_faces(&v("0 0")), Err(Error::ZeroContact));
        assert_eq!(contact_faces(&v("-1 1")), Err(Error::ZeroContact));
    }

    #[test]
    fn componentize_examples() {
        assert_eq!(componentize(&faces(&[&[1], &[1, 2]])).0, faces(&[&[1]]));
        assert_eq!(componentize(&faces(&[&[1], &[2, 3]])).0, faces(&[&[1], &[2, 3]]));
        assert!(componentize(&[]).0.is_empty());
        assert_eq!(componentize(&faces(&[&[1, 2], &[2], &[1], &[2]])).0, faces(&[&[1], &[2]]));
    }

    #[test]
    fn essential_whitney() {
        let r = essential_divisors(&lat(&["1 0", "0 2"]), &RelevantFaces(faces(&[&[1]]))).unwrap();
        assert_eq!(vectors(&r.e), vec![v("1 0")]);
        assert!(r.v.is_empty());
        assert!(r.diagnostics.is_empty());
    }

    #[test]
    fn essential_a1() {
        let r = essential_divisors(&lat(&["2 0", "1 1"]), &RelevantFaces(faces(&[&[1, 2]]))).unwrap();
        assert!(r.e.is_empty());
        assert_eq!(vectors(&r.v), vec![v("1 1")]);
    }

    #[test]
    fn essential_degree_four() {
        let r = essential_divisors(&lat(&["4 0", "-1 1"]), &RelevantFaces(faces(&[&[1], &[2]]))).unwrap();
        assert_eq!(vectors(&r.e), vec![v("0 4"), v("4 0")]);
        assert_eq!(vectors(&r.v), vec![v("1 3"), v("2 2"), v("3 1")]);
        assert!(r.diagnostics.is_empty());
    }

    #[test]
    fn lemma_min_violation_is_reported() {
        let n = Lattice::standard(2).unwrap();
        let fake_bary = Divisor::new(&n, v("3 3"), Origin::Barycenter).unwrap();
        let fake_min = Divisor::new(&n, v("1 1"), Origin::ToricMinimal).unwrap();
        let (e, vv, diags) = select_minimal(vec![fake_bary], &[fake_min]).unwrap();
        assert!(e.is_empty());
        assert_eq!(vectors(&vv), vec![v("1 1")]);
        assert_eq!(
            diags,
            vec![Diagnostic::LemmaMinViolation {
                barycenter: v("3 3"),
                dominated_by: v("1 1")
            }]
        );
    }

    #[test]
    fn barycenter_dominating_nothing_keeps_all() {
        let n = Lattice::standard(2).unwrap();
        let bary = Divisor::new(&n, v("1 0"), Origin::Barycenter).unwrap();
        let vmin = Divisor::new(&n, v("2 1"), Origin::ToricMinimal).unwrap();
        let (e, vv, diags) = select_minimal(vec![bary], &[vmin]).unwrap();
        assert_eq!(vectors(&e), vec![v("1 0")]);
        assert!(vv.is_empty());
        assert!(diags.is_empty());
    }

    #[test]
    fn reducible_example() {
        let a1 = branch("a1", &["1/2 1/2"], &[&[1, 2]], &[("plane", "1/2 1/2")]);
        let plane = branch("plane", &[], &[], &[("a1", "1 1")]);
        let r = analyze_branch(&a1).unwrap();
        assert_eq!(r.relevant.0, faces(&[&[1], &[2]]));
        assert_eq!(vectors(&r.e), vec![v("0 2"), v("2 0")]);
        assert_eq!(vectors(&r.v), vec![v("1 1")]);
        assert_eq!(r.nash_count, 3);
        let r = analyze_branch(&plane).unwrap();
        assert_eq!(vectors(&r.e), vec![v("0 1"), v("1 0")]);
        assert!(r.v.is_empty());
        assert_eq!(r.nash_count, 2);

        let total = analyze_variety(&[a1, plane]).unwrap();
        assert_eq!(total.total_nash, 5);
        assert_eq!(total.total_essential, 5);
        assert!(total.warnings.is_empty());
    }

    #[test]
    fn smooth_without_contacts() {
        let r = analyze_branch(&branch("s", &[], &[], &[])).unwrap();
        assert_eq!(r.nash_count, 0);
        assert_eq!(r.diagnostics, vec![Diagnostic::EmptyB]);
        let total = analyze_variety(&[branch("s", &[], &[], &[]), branch("t", &[], &[], &[])]).unwrap();
        assert_eq!(total.total_nash, 0);
        assert_eq!(total.warnings.len(), 1);
    }

    #[test]
    fn missing_singular_faces() {
        let err = analyze_branch(&branch("a1", &["1/2 1/2"], &[], &[])).unwrap_err();
        assert_eq!(err.code(), "B_MISSING_SING");
        assert_eq!(err.branch(), Some("a1"));
    }

    #[test]
    fn contact_validation() {
        let a = branch("a", &[], &[], &[("b", "1 0")]);
        let b = branch("b", &[], &[], &[]);
        assert_eq!(
            analyze_variety(&[a.clone(), b]),
            Err(Error::AsymmetricContact {
                from: "a".into(),
                to: "b".into()
            })
        );
        assert_eq!(analyze_variety(std::slice::from_ref(&a)), Err(Error::UnknownLabel("b".into())));
        assert_eq!(
            analyze_variety(&[a.clone(), a]),
            Err(Error::DuplicateLabel("a".into()))
        );
        let z = branch("z", &[], &[], &[("w", "0 0")]);
        let w = branch("w", &[], &[], &[("z", "1 0")]);
        assert_eq!(analyze_variety(&[z, w]).unwrap_err().code(), "ZERO_CONTACT");
    }

    #[test]
    fn sing_face_size_is_checked() {
        let mut b = branch("x", &[], &[], &[]);
        b.spec.dim = 3;
        b.sing_faces = faces(&[&[1, 2, 3]]);
        assert!(analyze_branch(&b).is_ok());
        b.spec.dim = 4;
        assert_eq!(analyze_branch(&b).unwrap_err().code(), "BAD_FACE");
        b.sing_faces = faces(&[&[5]]);
        assert_eq!(analyze_branch(&b).unwrap_err().code(), "BAD_FACE");
    }
}
