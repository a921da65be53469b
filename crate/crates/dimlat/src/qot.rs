//! The quotient operator topology on projection classes: closures,
//! membership, and separation predicates.
//!
//! Over a finite atom the topology is discrete-to-Hausdorff: singletons
//! are closed and closures of value sets are their order-topology
//! closures. Over a properly infinite atom the closure of a class is the
//! downward trace segment below it — and the closure of a properly
//! infinite class with full support is everything, larger cardinals
//! included. Mixed algebras combine the two pictures atom by atom for
//! singletons; closures of general sets over multi-atom properly infinite
//! algebras are outside the implemented fragment.

use std::sync::Arc;

use num::BigRational;

use crate::algebra::{same_algebra, AlgebraDesc, AtomType};
use crate::chainset::{integer_points_upto, ChainSet, FinBound, Interval};
use crate::dimfun::DimElement;
use crate::error::{Error, Result};
use crate::extval::ExtValue;

/// A set of projection classes: an explicit finite list or a per-atom
/// product of chain sets.
#[derive(Clone, Debug, PartialEq)]
pub enum ClassSetDescriptor {
    Explicit(Vec<DimElement>),
    Product {
        algebra: Arc<AlgebraDesc>,
        sets: Vec<ChainSet>,
    },
}

impl ClassSetDescriptor {
    pub fn explicit(members: Vec<DimElement>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let first = members[0].algebra().clone();
        for m in &members {
            if !same_algebra(&first, m.algebra()) {
                return Err(Error::AlgebraMismatch);
            }
            m.check_projection_class()?;
        }
        Ok(ClassSetDescriptor::Explicit(members))
    }

    pub fn product(algebra: Arc<AlgebraDesc>, sets: Vec<ChainSet>) -> Result<Self> {
        if sets.len() != algebra.atom_count() {
            return Err(Error::AlgebraMismatch);
        }
        for (ix, set) in sets.iter().enumerate() {
            let atom = algebra.atom(ix);
            if set.is_empty() {
                return Err(Error::EmptyDescribedSet(atom.name.clone()));
            }
            set.fits_projection_domain(&atom.ty).map_err(|e| match e {
                Error::DomainViolation { reason, .. } => Error::DomainViolation {
                    atom: atom.name.clone(),
                    reason,
                },
                other => other,
            })?;
        }
        Ok(ClassSetDescriptor::Product { algebra, sets })
    }

    pub fn algebra(&self) -> &Arc<AlgebraDesc> {
        match self {
            ClassSetDescriptor::Explicit(members) => members[0].algebra(),
            ClassSetDescriptor::Product { algebra, .. } => algebra,
        }
    }

    pub fn contains(&self, q: &DimElement) -> Result<bool> {
        if !same_algebra(self.algebra(), q.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(match self {
            ClassSetDescriptor::Explicit(members) => members.iter().any(|m| m == q),
            ClassSetDescriptor::Product { sets, .. } => sets
                .iter()
                .enumerate()
                .all(|(ix, set)| set.contains(q.value(ix))),
        })
    }
}

impl std::fmt::Display for ClassSetDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassSetDescriptor::Explicit(members) => {
                write!(f, "[ ")?;
                for (i, m) in members.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", m)?;
                }
                write!(f, " ]")
            }
            ClassSetDescriptor::Product { algebra, sets } => {
                write!(f, "{{ ")?;
                for (ix, set) in sets.iter().enumerate() {
                    if ix > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}: {}", algebra.atom(ix).name, set)?;
                }
                write!(f, " }}")
            }
        }
    }
}

/// Admissible projection values on one atom with trace at most `bound`.
fn trace_segment(ty: &AtomType, bound: &BigRational) -> Result<ChainSet> {
    match ty {
        AtomType::IInf(_) => ChainSet::from_points(integer_points_upto(bound)?),
        AtomType::IIInf(_) => {
            if num::Zero::is_zero(bound) {
                ChainSet::from_points(vec![BigRational::from_integer(0.into())])
            } else {
                ChainSet::build(
                    vec![Interval::bounded(
                        BigRational::from_integer(0.into()),
                        true,
                        bound.clone(),
                        true,
                    )?],
                    vec![],
                    false,
                    vec![],
                )
            }
        }
        AtomType::III(_) => {
            // the only finite trace value on a type III atom is zero
            ChainSet::from_points(vec![BigRational::from_integer(0.into())])
        }
        _ => unreachable!("trace segments are only taken on properly infinite atoms"),
    }
}

/// Closure of a one-element set of projection classes.
///
/// Finite-type atoms keep the point; a properly infinite atom contributes
/// every admissible value of trace at most the trace of the class there —
/// the whole admissible chain when the class is infinite on that atom.
pub fn closure_singleton(p: &DimElement) -> Result<ClassSetDescriptor> {
    p.check_projection_class()?;
    let algebra = p.algebra().clone();
    let sets = algebra
        .atoms()
        .iter()
        .enumerate()
        .map(|(ix, atom)| {
            let v = p.value(ix);
            if atom.ty.is_finite_type() {
                ChainSet::singleton(v)
            } else {
                match v {
                    ExtValue::Fin(q) => trace_segment(&atom.ty, q),
                    ExtValue::Aleph(_) => Ok(ChainSet::projection_domain(&atom.ty)),
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ClassSetDescriptor::product(algebra, sets)
}

/// Per-atom value set of a descriptor over a single-atom algebra.
fn factor_values(e: &ClassSetDescriptor) -> Result<ChainSet> {
    match e {
        ClassSetDescriptor::Product { sets, .. } => Ok(sets[0].clone()),
        ClassSetDescriptor::Explicit(members) => {
            let values: Vec<ExtValue> = members.iter().map(|m| m.value(0).clone()).collect();
            ChainSet::from_values(&values)
        }
    }
}

/// Closure of a set of classes over a single-atom algebra.
///
/// On a finite factor this is the topological closure of the trace-value
/// set. On a properly infinite factor it is the downward segment below
/// the supremum of the traces; when that supremum is infinite — an aleph
/// member, or finite values unbounded above — the closure is everything.
pub fn closure_factor_set(e: &ClassSetDescriptor) -> Result<ClassSetDescriptor> {
    let algebra = e.algebra().clone();
    if algebra.atom_count() != 1 {
        return Err(Error::UnsupportedClosure(
            "factor-set closure requires a single-atom algebra".into(),
        ));
    }
    let ty = &algebra.atom(0).ty;
    let values = factor_values(e)?;
    let closed = if ty.is_finite_type() {
        values.topological_closure()
    } else if !values.alephs().is_empty() || matches!(values.fin_bound(), FinBound::Unbounded) {
        ChainSet::projection_domain(ty)
    } else {
        match values.fin_bound() {
            FinBound::Bounded(sup) => trace_segment(ty, &sup)?,
            _ => unreachable!("descriptor sets are nonempty"),
        }
    };
    ClassSetDescriptor::product(algebra, vec![closed])
}

/// Closure of a descriptor on the supported fragment: singletons over any
/// algebra, arbitrary sets over single-atom algebras, arbitrary sets over
/// algebras with only finite-type atoms (where every finite set is closed
/// and products close atomwise).
pub fn closure_set(e: &ClassSetDescriptor) -> Result<ClassSetDescriptor> {
    if let ClassSetDescriptor::Explicit(members) = e {
        if members.len() == 1 {
            return closure_singleton(&members[0]);
        }
    }
    let algebra = e.algebra();
    if algebra.atom_count() == 1 {
        return closure_factor_set(e);
    }
    if algebra.is_finite_type() {
        return Ok(match e {
            ClassSetDescriptor::Explicit(members) => ClassSetDescriptor::Explicit(members.clone()),
            ClassSetDescriptor::Product { algebra, sets } => ClassSetDescriptor::Product {
                algebra: algebra.clone(),
                sets: sets.iter().map(ChainSet::topological_closure).collect(),
            },
        });
    }
    Err(Error::UnsupportedClosure(
        "general sets over a multi-atom algebra with a properly infinite part".into(),
    ))
}

/// Whether `q` lies in the closure of the set described by `e`.
pub fn in_closure(q: &DimElement, e: &ClassSetDescriptor) -> Result<bool> {
    q.check_projection_class()?;
    closure_set(e)?.contains(q)
}

/// Points are closed exactly when every atom has finite type.
pub fn is_t1(algebra: &AlgebraDesc) -> bool {
    algebra.atoms().iter().all(|a| a.ty.is_finite_type())
}

/// The topology distinguishes classes exactly when no atom is homogeneous
/// beyond ℵ₀.
pub fn is_t0(algebra: &AlgebraDesc) -> bool {
    algebra
        .atoms()
        .iter()
        .filter_map(|a| a.ty.homogeneity())
        .all(|k| k == 0)
}

/// Normality of the quotient maps is yet another face of the same
/// dividing line.
pub fn quotient_maps_normal(algebra: &AlgebraDesc) -> bool {
    is_t0(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::unit;

    fn arc(atoms: Vec<(&str, AtomType)>) -> Arc<AlgebraDesc> {
        Arc::new(
            AlgebraDesc::new(atoms.into_iter().map(|(n, t)| (n.to_string(), t)).collect()).unwrap(),
        )
    }

    fn elem(alg: &Arc<AlgebraDesc>, values: Vec<ExtValue>) -> DimElement {
        DimElement::new_unchecked(alg.clone(), values)
    }

    #[test]
    fn closure_of_finite_class_is_the_unit_trace_segment() {
        let alg = arc(vec![("a", AtomType::IIInf(1))]);
        let p = elem(&alg, vec![ExtValue::fin_int(1)]);
        let closure = closure_singleton(&p).unwrap();
        let expected = ClassSetDescriptor::product(
            alg.clone(),
            vec![ChainSet::build(
                vec![Interval::bounded(
                    BigRational::from_integer(0.into()),
                    true,
                    BigRational::from_integer(1.into()),
                    true,
                )
                .unwrap()],
                vec![],
                false,
                vec![],
            )
            .unwrap()],
        )
        .unwrap();
        assert_eq!(closure, expected);
        assert!(in_closure(&elem(&alg, vec![ExtValue::fin(1, 2)]), &closure_input(&p)).unwrap());
        assert!(!in_closure(&elem(&alg, vec![ExtValue::fin(3, 2)]), &closure_input(&p)).unwrap());
    }

    fn closure_input(p: &DimElement) -> ClassSetDescriptor {
        ClassSetDescriptor::explicit(vec![p.clone()]).unwrap()
    }

    #[test]
    fn closure_of_properly_infinite_class_is_everything() {
        let alg = arc(vec![("a", AtomType::IIInf(1))]);
        let p = elem(&alg, vec![ExtValue::Aleph(0)]);
        let closure = closure_singleton(&p).unwrap();
        assert_eq!(
            closure,
            ClassSetDescriptor::product(
                alg.clone(),
                vec![ChainSet::projection_domain(&AtomType::IIInf(1))]
            )
            .unwrap()
        );
        // larger cardinals are inside
        assert!(closure
            .contains(&elem(&alg, vec![ExtValue::Aleph(1)]))
            .unwrap());
    }

    #[test]
    fn points_are_closed_on_finite_algebras() {
        let alg = arc(vec![("a", AtomType::II1)]);
        let p = elem(&alg, vec![ExtValue::fin(1, 2)]);
        let closure = closure_singleton(&p).unwrap();
        assert_eq!(
            closure,
            ClassSetDescriptor::product(
                alg.clone(),
                vec![ChainSet::singleton(&ExtValue::fin(1, 2)).unwrap()]
            )
            .unwrap()
        );
        assert!(in_closure(&p, &closure_input(&p)).unwrap());
        assert!(!in_closure(&elem(&alg, vec![ExtValue::fin(1, 4)]), &closure_input(&p)).unwrap());
    }

    #[test]
    fn zero_lies_in_every_closure_over_a_properly_infinite_factor() {
        let alg = arc(vec![("a", AtomType::IIInf(1))]);
        for v in [
            ExtValue::fin(1, 2),
            ExtValue::fin_int(5),
            ExtValue::Aleph(1),
        ] {
            let e = closure_input(&elem(&alg, vec![v]));
            assert!(in_closure(&DimElement::zero(&alg), &e).unwrap());
        }
    }

    #[test]
    fn larger_aleph_in_closure_of_smaller_on_type_iii() {
        let alg = arc(vec![("a", AtomType::III(1))]);
        let q = elem(&alg, vec![ExtValue::Aleph(1)]);
        let p = elem(&alg, vec![ExtValue::Aleph(0)]);
        assert!(in_closure(&q, &closure_input(&p)).unwrap());
    }

    #[test]
    fn factor_set_closures() {
        // open interval over a II_1 factor closes up
        let ii1 = arc(vec![("a", AtomType::II1)]);
        let open = ChainSet::build(
            vec![Interval::bounded(
                BigRational::from_integer(0.into()),
                false,
                BigRational::from_integer(1.into()),
                false,
            )
            .unwrap()],
            vec![],
            false,
            vec![],
        )
        .unwrap();
        let e = ClassSetDescriptor::product(ii1.clone(), vec![open]).unwrap();
        let closed = closure_factor_set(&e).unwrap();
        assert!(closed
            .contains(&elem(&ii1, vec![ExtValue::zero()]))
            .unwrap());
        assert!(closed
            .contains(&elem(&ii1, vec![ExtValue::fin_int(1)]))
            .unwrap());

        // naturals over II_inf(aleph 1): unbounded traces pull in everything
        let iiinf = arc(vec![("a", AtomType::IIInf(1))]);
        let naturals = ChainSet::build(vec![], vec![], true, vec![]).unwrap();
        let e = ClassSetDescriptor::product(iiinf.clone(), vec![naturals]).unwrap();
        let closed = closure_factor_set(&e).unwrap();
        assert_eq!(
            closed,
            ClassSetDescriptor::product(
                iiinf.clone(),
                vec![ChainSet::projection_domain(&AtomType::IIInf(1))]
            )
            .unwrap()
        );
        assert!(closed
            .contains(&elem(&iiinf, vec![ExtValue::Aleph(1)]))
            .unwrap());

        // bounded finite set: downward trace segment including its supremum
        let e = ClassSetDescriptor::explicit(vec![
            elem(&iiinf, vec![ExtValue::fin_int(1)]),
            elem(&iiinf, vec![ExtValue::fin_int(2)]),
        ])
        .unwrap();
        let closed = closure_factor_set(&e).unwrap();
        assert!(closed
            .contains(&elem(&iiinf, vec![ExtValue::fin(3, 2)]))
            .unwrap());
        assert!(closed
            .contains(&elem(&iiinf, vec![ExtValue::fin_int(2)]))
            .unwrap());
        assert!(!closed
            .contains(&elem(&iiinf, vec![ExtValue::fin(5, 2)]))
            .unwrap());
    }

    #[test]
    fn closure_is_extensive_monotone_idempotent_on_supported_inputs() {
        let alg = arc(vec![("a", AtomType::IIInf(0))]);
        let members = vec![
            elem(&alg, vec![ExtValue::fin(1, 2)]),
            elem(&alg, vec![ExtValue::fin_int(2)]),
        ];
        let small = ClassSetDescriptor::explicit(members[..1].to_vec()).unwrap();
        let big = ClassSetDescriptor::explicit(members.clone()).unwrap();
        let c_small = closure_set(&small).unwrap();
        let c_big = closure_set(&big).unwrap();
        // extensive
        for m in &members {
            assert!(c_big.contains(m).unwrap());
        }
        // monotone on a probe grid
        for k in 0..=8u64 {
            let probe = elem(
                &alg,
                vec![ExtValue::Fin(BigRational::new(k.into(), 2.into()))],
            );
            if c_small.contains(&probe).unwrap() {
                assert!(c_big.contains(&probe).unwrap());
            }
        }
        // idempotent
        assert_eq!(closure_set(&c_big).unwrap(), c_big);
    }

    #[test]
    fn t1_algebras_have_closed_finite_sets() {
        let alg = arc(vec![("a", AtomType::IFin(2)), ("b", AtomType::II1)]);
        assert!(is_t1(&alg));
        let members = vec![
            elem(&alg, vec![ExtValue::fin(1, 2), ExtValue::fin(1, 3)]),
            elem(&alg, vec![ExtValue::fin_int(1), ExtValue::zero()]),
        ];
        let e = ClassSetDescriptor::explicit(members.clone()).unwrap();
        assert_eq!(closure_set(&e).unwrap(), e);
        assert!(in_closure(&members[0], &e).unwrap());
        let other = elem(&alg, vec![ExtValue::zero(), ExtValue::zero()]);
        assert!(!in_closure(&other, &e).unwrap());
    }

    #[test]
    fn product_sets_over_finite_algebras_close_atomwise() {
        let alg = arc(vec![("a", AtomType::II1), ("b", AtomType::IFin(2))]);
        let open = ChainSet::build(
            vec![Interval::bounded(
                BigRational::from_integer(0.into()),
                false,
                BigRational::from_integer(1.into()),
                false,
            )
            .unwrap()],
            vec![],
            false,
            vec![],
        )
        .unwrap();
        let points = ChainSet::from_values(&[ExtValue::zero(), ExtValue::fin(1, 2)]).unwrap();
        let e = ClassSetDescriptor::product(alg.clone(), vec![open, points]).unwrap();
        let closed = closure_set(&e).unwrap();
        // the first atom gains its endpoints, the second is already closed
        assert!(closed
            .contains(&elem(&alg, vec![ExtValue::zero(), ExtValue::zero()]))
            .unwrap());
        assert!(closed
            .contains(&elem(&alg, vec![ExtValue::fin_int(1), ExtValue::fin(1, 2)]))
            .unwrap());
        assert!(!closed
            .contains(&elem(&alg, vec![ExtValue::fin(1, 2), ExtValue::fin_int(1)]))
            .unwrap());
        assert_eq!(closure_set(&closed).unwrap(), closed);
    }

    #[test]
    fn unsupported_combination_is_reported() {
        let alg = arc(vec![("a", AtomType::II1), ("b", AtomType::IIInf(0))]);
        let members = vec![
            elem(&alg, vec![ExtValue::fin(1, 2), ExtValue::fin_int(1)]),
            elem(&alg, vec![ExtValue::fin(1, 3), ExtValue::fin_int(2)]),
        ];
        let e = ClassSetDescriptor::explicit(members).unwrap();
        assert!(matches!(closure_set(&e), Err(Error::UnsupportedClosure(_))));
        // singletons over the same algebra are fine
        let p = elem(&alg, vec![ExtValue::fin(1, 2), ExtValue::fin_int(1)]);
        assert!(closure_singleton(&p).is_ok());
    }

    #[test]
    fn separation_predicates() {
        let finite = arc(vec![("a", AtomType::II1), ("b", AtomType::IFin(3))]);
        assert!(is_t1(&finite) && is_t0(&finite) && quotient_maps_normal(&finite));

        let sigma = arc(vec![("a", AtomType::IIInf(0))]);
        assert!(!is_t1(&sigma));
        assert!(is_t0(&sigma));
        assert!(quotient_maps_normal(&sigma));

        let big = arc(vec![("a", AtomType::III(1))]);
        assert!(!is_t0(&big));
        assert!(!quotient_maps_normal(&big));
    }

    #[test]
    fn t0_closure_membership_implies_domination() {
        let alg = arc(vec![("a", AtomType::IIInf(0)), ("b", AtomType::III(0))]);
        assert!(is_t0(&alg));
        let grid = [
            elem(&alg, vec![ExtValue::zero(), ExtValue::zero()]),
            elem(&alg, vec![ExtValue::fin(1, 2), ExtValue::zero()]),
            elem(&alg, vec![ExtValue::fin_int(2), ExtValue::Aleph(0)]),
            elem(&alg, vec![ExtValue::Aleph(0), ExtValue::Aleph(0)]),
        ];
        for p in &grid {
            for q in &grid {
                let e = closure_input(q);
                if in_closure(p, &e).unwrap() {
                    assert!(p.leq(q).unwrap());
                }
                // and conversely: closures are downward closed
                if p.leq(q).unwrap() {
                    assert!(in_closure(p, &e).unwrap());
                }
            }
        }
    }

    #[test]
    fn downward_closedness_over_a_properly_infinite_factor() {
        let alg = arc(vec![("a", AtomType::IIInf(1))]);
        let e = ClassSetDescriptor::explicit(vec![elem(&alg, vec![ExtValue::fin_int(3)])]).unwrap();
        let q = elem(&alg, vec![ExtValue::fin_int(2)]);
        let q2 = elem(&alg, vec![ExtValue::fin(1, 2)]);
        assert!(in_closure(&q, &e).unwrap());
        assert!(q2.leq(&q).unwrap());
        assert!(in_closure(&q2, &e).unwrap());
    }

    #[test]
    fn unit_closure_swallows_every_projection_class() {
        let alg = arc(vec![("a", AtomType::IIInf(1)), ("b", AtomType::III(1))]);
        let u = unit(&alg);
        let closure = closure_singleton(&u).unwrap();
        for v1 in [ExtValue::zero(), ExtValue::fin(7, 3), ExtValue::Aleph(1)] {
            for v2 in [ExtValue::zero(), ExtValue::Aleph(0), ExtValue::Aleph(1)] {
                let q = elem(&alg, vec![v1.clone(), v2]);
                assert!(closure.contains(&q).unwrap());
            }
        }
    }
}
