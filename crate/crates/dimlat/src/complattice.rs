//! Suprema and infima of families of dimension elements.
//!
//! Explicit families go through the slice construction on formal sums: for
//! each slice index κ the central projection `y_{≤κ}` collects the atoms
//! where every (resp. some) member sits in a slice ≤ κ, the difference of
//! consecutive `y`'s carves out the support `z_κ` of the result, and the
//! value on an integer slice is the pointwise extremum of the contributing
//! members. Described families — per-atom chain-set descriptors, possibly
//! infinite — are evaluated by per-atom chain bounds. Over an atomic
//! center the two routes must agree, which is what the pointwise
//! cross-check functions are for.

use std::collections::BTreeSet;
use std::sync::Arc;

use num::BigRational;

use crate::algebra::{same_algebra, AlgebraDesc};
use crate::chainset::ChainSet;
use crate::dimfun::{DimElement, FormalSlice, FormalSum, SliceIx};
use crate::error::{Error, Result};

/// A family of dimension elements over one algebra: an explicit finite
/// list, or a per-atom description of a possibly infinite set.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Explicit(Vec<DimElement>),
    Described {
        algebra: Arc<AlgebraDesc>,
        sets: Vec<ChainSet>,
    },
}

impl FamilySpec {
    /// An explicit family of positive classes.
    pub fn explicit(members: Vec<DimElement>) -> Result<Self> {
        for m in &members {
            m.check_cone_class()?;
        }
        Self::explicit_unchecked(members)
    }

    /// An explicit family with arbitrary chain values (no cone
    /// validation); still requires a nonempty list over one algebra.
    pub fn explicit_unchecked(members: Vec<DimElement>) -> Result<Self> {
        let first = members.first().ok_or(Error::EmptyFamily)?;
        for m in &members[1..] {
            if !same_algebra(first.algebra(), m.algebra()) {
                return Err(Error::AlgebraMismatch);
            }
        }
        Ok(FamilySpec::Explicit(members))
    }

    /// A described family: one nonempty chain set per atom, inside the
    /// atom's admissible positive-class domain.
    pub fn described(algebra: Arc<AlgebraDesc>, sets: Vec<ChainSet>) -> Result<Self> {
        if sets.len() != algebra.atom_count() {
            return Err(Error::AlgebraMismatch);
        }
        for (ix, set) in sets.iter().enumerate() {
            let atom = algebra.atom(ix);
            if set.is_empty() {
                return Err(Error::EmptyDescribedSet(atom.name.clone()));
            }
            set.fits_cone_domain(&atom.ty).map_err(|e| match e {
                Error::DomainViolation { reason, .. } => Error::DomainViolation {
                    atom: atom.name.clone(),
                    reason,
                },
                other => other,
            })?;
        }
        Ok(FamilySpec::Described { algebra, sets })
    }

    pub fn algebra(&self) -> &Arc<AlgebraDesc> {
        match self {
            FamilySpec::Explicit(members) => members[0].algebra(),
            FamilySpec::Described { algebra, .. } => algebra,
        }
    }
}

/// All slice indices occurring in any of the given decompositions. Slices
/// absent from every member have empty support in the result, so the
/// construction only needs to visit these.
fn present_indices(sums: &[FormalSum]) -> BTreeSet<SliceIx> {
    let mut out = BTreeSet::new();
    for s in sums {
        out.extend(s.indices());
    }
    out
}

fn full_mask(algebra: &Arc<AlgebraDesc>) -> u64 {
    if algebra.atom_count() == 64 {
        u64::MAX
    } else {
        (1u64 << algebra.atom_count()) - 1
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Extremum {
    Sup,
    Inf,
}

/// The slice construction shared by supremum and infimum. For the
/// supremum `y_{≤κ}` is the meet over members of the union of their slices
/// with index ≤ κ; for the infimum it is the join. In both cases
/// `z_κ = y_{≤κ} − ⋁_{λ<κ} y_{≤λ}` and the integer-slice value is the
/// extremum over the members whose own slice at that atom is exactly κ.
fn slice_extremum(members: &[DimElement], which: Extremum) -> Result<DimElement> {
    let algebra = members[0].algebra().clone();
    let sums: Vec<FormalSum> = members.iter().map(DimElement::to_formal_sum).collect();
    let full = full_mask(&algebra);

    let mut covered = 0u64; // ⋁_{λ<κ} y_{≤λ}, accumulated
    let mut slices: Vec<FormalSlice> = Vec::new();
    for ix in present_indices(&sums) {
        let y = match which {
            Extremum::Sup => sums.iter().fold(full, |m, s| m & s.support_upto(&ix)),
            Extremum::Inf => sums.iter().fold(0u64, |m, s| m | s.support_upto(&ix)),
        };
        let z = y & !covered;
        covered |= y;
        if z == 0 {
            continue;
        }
        let g = match &ix {
            SliceIx::Aleph(_) => Vec::new(),
            SliceIx::Fin(_) => {
                let mut g: Vec<(usize, BigRational)> = Vec::new();
                for atom in 0..algebra.atom_count() {
                    if z & (1 << atom) == 0 {
                        continue;
                    }
                    // Extremum over the members contributing to this slice
                    // at this atom. A member absent from the slice here
                    // lies in a strictly different slice: below κ it is
                    // beaten by every contributor for the supremum, above
                    // κ it strictly exceeds every contributor for the
                    // infimum. Either way non-contributors cannot attain
                    // the extremum.
                    let mut best: Option<&BigRational> = None;
                    for s in &sums {
                        if let Some(slice) = s.slice(&ix) {
                            if slice.mask & (1 << atom) != 0 {
                                let q = &slice
                                    .g
                                    .iter()
                                    .find(|(j, _)| *j == atom)
                                    .expect("integer slice carries its support")
                                    .1;
                                let better = match (best, which) {
                                    (None, _) => true,
                                    (Some(b), Extremum::Sup) => q > b,
                                    (Some(b), Extremum::Inf) => q < b,
                                };
                                if better {
                                    best = Some(q);
                                }
                            }
                        }
                    }
                    let q = best.expect("slice support implies a contributor").clone();
                    g.push((atom, q));
                }
                g
            }
        };
        slices.push(FormalSlice { ix, mask: z, g });
        if covered == full {
            break;
        }
    }
    FormalSum::from_slices(algebra, slices)?.to_element()
}

/// Least upper bound of a family. Explicit families run the slice
/// construction; described families take per-atom chain bounds.
pub fn family_sup(family: &FamilySpec) -> Result<DimElement> {
    match family {
        FamilySpec::Explicit(members) => slice_extremum(members, Extremum::Sup),
        FamilySpec::Described { algebra, sets } => {
            let values = sets.iter().map(ChainSet::lub).collect();
            Ok(DimElement::new_unchecked(algebra.clone(), values))
        }
    }
}

/// Greatest lower bound of a family.
pub fn family_inf(family: &FamilySpec) -> Result<DimElement> {
    match family {
        FamilySpec::Explicit(members) => slice_extremum(members, Extremum::Inf),
        FamilySpec::Described { algebra, sets } => {
            let values = sets.iter().map(ChainSet::glb).collect::<Result<Vec<_>>>()?;
            Ok(DimElement::new_unchecked(algebra.clone(), values))
        }
    }
}

/// Independent route for explicit families: per-atom maximum of the
/// member values, bypassing the slice construction. Valid precisely
/// because the center is atomic.
pub fn family_sup_pointwise(family: &FamilySpec) -> Result<DimElement> {
    match family {
        FamilySpec::Explicit(members) => {
            let algebra = members[0].algebra().clone();
            let values = (0..algebra.atom_count())
                .map(|ix| {
                    members
                        .iter()
                        .map(|m| m.value(ix))
                        .max()
                        .expect("nonempty family")
                        .clone()
                })
                .collect();
            Ok(DimElement::new_unchecked(algebra, values))
        }
        described => family_sup(described),
    }
}

/// Per-atom minimum of the member values.
pub fn family_inf_pointwise(family: &FamilySpec) -> Result<DimElement> {
    match family {
        FamilySpec::Explicit(members) => {
            let algebra = members[0].algebra().clone();
            let values = (0..algebra.atom_count())
                .map(|ix| {
                    members
                        .iter()
                        .map(|m| m.value(ix))
                        .min()
                        .expect("nonempty family")
                        .clone()
                })
                .collect();
            Ok(DimElement::new_unchecked(algebra, values))
        }
        described => family_inf(described),
    }
}

/// Bottom of the complete lattice, the supremum of the empty family.
pub fn empty_family_sup(algebra: &Arc<AlgebraDesc>) -> DimElement {
    DimElement::zero(algebra)
}

/// Top of the projection-class lattice, the infimum of the empty family.
pub fn empty_family_inf(algebra: &Arc<AlgebraDesc>) -> DimElement {
    crate::algebra::unit(algebra)
}

pub fn is_upper_bound(h: &DimElement, family: &FamilySpec) -> Result<bool> {
    if !same_algebra(h.algebra(), family.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    match family {
        FamilySpec::Explicit(members) => {
            for m in members {
                if !m.leq(h)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        FamilySpec::Described { sets, .. } => Ok(sets
            .iter()
            .enumerate()
            .all(|(ix, set)| set.lub() <= *h.value(ix))),
    }
}

pub fn is_lower_bound(h: &DimElement, family: &FamilySpec) -> Result<bool> {
    if !same_algebra(h.algebra(), family.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    match family {
        FamilySpec::Explicit(members) => {
            for m in members {
                if !h.leq(m)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        FamilySpec::Described { sets, .. } => {
            for (ix, set) in sets.iter().enumerate() {
                if *h.value(ix) > set.glb()? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Grid-bounded certification: `h` bounds the family and no candidate
/// strictly below `h` does.
pub fn is_least_upper_bound(
    h: &DimElement,
    family: &FamilySpec,
    grid: &[DimElement],
) -> Result<bool> {
    if !is_upper_bound(h, family)? {
        return Ok(false);
    }
    for candidate in grid {
        if is_upper_bound(candidate, family)? && !h.leq(candidate)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dual certification against a grid of candidates.
pub fn is_greatest_lower_bound(
    h: &DimElement,
    family: &FamilySpec,
    grid: &[DimElement],
) -> Result<bool> {
    if !is_lower_bound(h, family)? {
        return Ok(false);
    }
    for candidate in grid {
        if is_lower_bound(candidate, family)? && !candidate.leq(h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{unit, AtomType};
    use crate::chainset::Interval;
    use crate::extval::ExtValue;
    use num::{One, Zero};
    use proptest::prelude::*;

    fn arc(atoms: Vec<(&str, AtomType)>) -> Arc<AlgebraDesc> {
        Arc::new(
            AlgebraDesc::new(atoms.into_iter().map(|(n, t)| (n.to_string(), t)).collect()).unwrap(),
        )
    }

    fn elem(alg: &Arc<AlgebraDesc>, values: Vec<ExtValue>) -> DimElement {
        DimElement::new_unchecked(alg.clone(), values)
    }

    #[test]
    fn sup_of_two_members_slicewise() {
        let alg = arc(vec![("a1", AtomType::IIInf(0)), ("a2", AtomType::IIInf(0))]);
        let f1 = elem(&alg, vec![ExtValue::fin(1, 2), ExtValue::fin_int(3)]);
        let f2 = elem(&alg, vec![ExtValue::fin_int(2), ExtValue::fin_int(1)]);
        let family = FamilySpec::explicit(vec![f1, f2]).unwrap();
        let sup = family_sup(&family).unwrap();
        assert_eq!(sup.values(), &[ExtValue::fin_int(2), ExtValue::fin_int(3)]);
        assert_eq!(sup, family_sup_pointwise(&family).unwrap());
    }

    #[test]
    fn sup_of_singleton_is_the_member() {
        let alg = arc(vec![("a", AtomType::III(1))]);
        let a = elem(&alg, vec![ExtValue::Aleph(0)]);
        let family = FamilySpec::explicit(vec![a.clone()]).unwrap();
        assert_eq!(family_sup(&family).unwrap(), a);
        assert_eq!(family_inf(&family).unwrap(), a);
    }

    #[test]
    fn described_naturals_first_exceeded_at_aleph_zero() {
        let alg = arc(vec![("a", AtomType::IIInf(1))]);
        let naturals = ChainSet::build(vec![], vec![], true, vec![]).unwrap();
        let family = FamilySpec::described(alg.clone(), vec![naturals]).unwrap();
        let sup = family_sup(&family).unwrap();
        assert_eq!(sup.value(0), &ExtValue::Aleph(0));
        assert!(is_upper_bound(&sup, &family).unwrap());
    }

    #[test]
    fn inf_examples() {
        let alg = arc(vec![("a", AtomType::IIInf(0))]);
        let family = FamilySpec::explicit(vec![
            elem(&alg, vec![ExtValue::fin(1, 2)]),
            elem(&alg, vec![ExtValue::fin_int(2)]),
        ])
        .unwrap();
        assert_eq!(family_inf(&family).unwrap().value(0), &ExtValue::fin(1, 2));

        let iii = arc(vec![("a", AtomType::III(1))]);
        let family = FamilySpec::explicit(vec![
            elem(&iii, vec![ExtValue::Aleph(1)]),
            elem(&iii, vec![ExtValue::Aleph(0)]),
        ])
        .unwrap();
        assert_eq!(family_inf(&family).unwrap().value(0), &ExtValue::Aleph(0));
        assert_eq!(
            family_inf(&family).unwrap(),
            family_inf_pointwise(&family).unwrap()
        );
    }

    #[test]
    fn described_half_open_interval_infimum_is_its_open_endpoint() {
        let alg = arc(vec![("a", AtomType::IIInf(0))]);
        let set = ChainSet::build(
            vec![Interval::bounded(
                BigRational::one(),
                false,
                BigRational::from_integer(2.into()),
                true,
            )
            .unwrap()],
            vec![],
            false,
            vec![],
        )
        .unwrap();
        let family = FamilySpec::described(alg.clone(), vec![set]).unwrap();
        let inf = family_inf(&family).unwrap();
        assert_eq!(inf.value(0), &ExtValue::fin_int(1));
        // the infimum is not itself a member of the family
        if let FamilySpec::Described { sets, .. } = &family {
            assert!(!sets[0].contains(inf.value(0)));
        }
    }

    #[test]
    fn bound_checks() {
        let alg = arc(vec![("a", AtomType::IIInf(0))]);
        let family = FamilySpec::explicit(vec![
            elem(&alg, vec![ExtValue::fin_int(1)]),
            elem(&alg, vec![ExtValue::fin_int(2)]),
        ])
        .unwrap();
        let u = unit(&alg);
        assert!(is_upper_bound(&u, &family).unwrap());
        let sup = family_sup(&family).unwrap();
        assert!(is_upper_bound(&sup, &family).unwrap());

        let grid: Vec<DimElement> = (0..=6)
            .map(|k| {
                elem(
                    &alg,
                    vec![ExtValue::Fin(BigRational::new(k.into(), 2.into()))],
                )
            })
            .collect();
        let three = elem(&alg, vec![ExtValue::fin_int(3)]);
        assert!(is_upper_bound(&three, &family).unwrap());
        assert!(!is_least_upper_bound(&three, &family, &grid).unwrap());
        assert!(is_least_upper_bound(&sup, &family, &grid).unwrap());
        assert!(is_greatest_lower_bound(&family_inf(&family).unwrap(), &family, &grid).unwrap());
    }

    #[test]
    fn empty_families() {
        assert!(matches!(
            FamilySpec::explicit(vec![]),
            Err(Error::EmptyFamily)
        ));
        let alg = arc(vec![("a", AtomType::II1)]);
        assert!(empty_family_sup(&alg).is_zero());
        assert_eq!(empty_family_inf(&alg), unit(&alg));
    }

    #[test]
    fn described_family_validation() {
        let alg = arc(vec![("a", AtomType::III(0))]);
        let interval = ChainSet::build(
            vec![Interval::bounded(BigRational::zero(), true, BigRational::one(), true).unwrap()],
            vec![],
            false,
            vec![],
        )
        .unwrap();
        assert!(matches!(
            FamilySpec::described(alg.clone(), vec![interval]),
            Err(Error::DomainViolation { .. })
        ));
        assert!(matches!(
            FamilySpec::described(alg.clone(), vec![ChainSet::empty()]),
            Err(Error::EmptyDescribedSet(_))
        ));
    }

    #[test]
    fn pair_operations_agree_with_two_member_families() {
        let alg = arc(vec![("a", AtomType::II1), ("b", AtomType::IIInf(1))]);
        let x = elem(&alg, vec![ExtValue::fin(1, 2), ExtValue::Aleph(0)]);
        let y = elem(&alg, vec![ExtValue::fin(3, 4), ExtValue::fin_int(2)]);
        let family = FamilySpec::explicit(vec![x.clone(), y.clone()]).unwrap();
        assert_eq!(family_sup(&family).unwrap(), x.join(&y).unwrap());
        assert_eq!(family_inf(&family).unwrap(), x.meet(&y).unwrap());
    }

    fn small_grid(alg: &Arc<AlgebraDesc>) -> Vec<ExtValue> {
        let _ = alg;
        vec![
            ExtValue::zero(),
            ExtValue::fin(1, 2),
            ExtValue::fin_int(1),
            ExtValue::fin(3, 2),
            ExtValue::Aleph(0),
            ExtValue::Aleph(1),
        ]
    }

    proptest! {
        #[test]
        fn slice_route_matches_pointwise_route(
            picks in proptest::collection::vec((0usize..6, 0usize..6), 1..4)
        ) {
            let alg = arc(vec![("a", AtomType::IIInf(1)), ("b", AtomType::III(1))]);
            let grid = small_grid(&alg);
            let members: Vec<DimElement> = picks
                .iter()
                .map(|(i, j)| elem(&alg, vec![grid[*i].clone(), grid[*j].clone()]))
                .collect();
            let family = FamilySpec::explicit_unchecked(members).unwrap();
            prop_assert_eq!(
                family_sup(&family).unwrap(),
                family_sup_pointwise(&family).unwrap()
            );
            prop_assert_eq!(
                family_inf(&family).unwrap(),
                family_inf_pointwise(&family).unwrap()
            );
        }

        #[test]
        fn monotone_in_the_family(
            picks in proptest::collection::vec((0usize..6, 0usize..6), 2..5),
        ) {
            let alg = arc(vec![("a", AtomType::IIInf(1)), ("b", AtomType::III(1))]);
            let grid = small_grid(&alg);
            let members: Vec<DimElement> = picks
                .iter()
                .map(|(i, j)| elem(&alg, vec![grid[*i].clone(), grid[*j].clone()]))
                .collect();
            let sub = FamilySpec::explicit_unchecked(members[..members.len() - 1].to_vec()).unwrap();
            let whole = FamilySpec::explicit_unchecked(members).unwrap();
            prop_assert!(family_sup(&sub).unwrap().leq(&family_sup(&whole).unwrap()).unwrap());
            prop_assert!(family_inf(&whole).unwrap().leq(&family_inf(&sub).unwrap()).unwrap());
        }
    }
}
