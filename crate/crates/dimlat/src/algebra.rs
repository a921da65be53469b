//! Dimension data of a von Neumann algebra with finite atomic center.
//!
//! The center is a finite set of named atoms; each atom is a factor summand
//! tagged with its type and, when properly infinite, its homogeneity
//! cardinal. Central projections form the Boolean algebra of atom subsets,
//! central positive elements are nonnegative rational functions on the
//! atoms, and amplification tensors the algebra with a matrix factor or
//! with all bounded operators on an infinite index space.

use std::fmt;
use std::sync::Arc;

use num::{BigRational, One, Signed, ToPrimitive};

use crate::dimfun::DimElement;
use crate::error::{Error, Result};
use crate::extval::{max_aleph, ExtValue};

/// Upper bound on atoms per algebra; central projections are bitmasks.
pub const MAX_ATOMS: usize = 64;

/// Factor type of one central atom. Aleph levels index homogeneity
/// cardinals (`0` is ℵ₀); finite matrix factors carry their order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomType {
    IFin(u64),
    IInf(u32),
    II1,
    IIInf(u32),
    III(u32),
}

impl AtomType {
    pub fn validate(&self) -> Result<()> {
        match self {
            AtomType::IFin(n) => {
                if *n == 0 {
                    return Err(Error::ZeroMatrixOrder);
                }
            }
            AtomType::IInf(k) | AtomType::IIInf(k) | AtomType::III(k) => {
                let max = max_aleph();
                if *k > max {
                    return Err(Error::AlephOutOfRange { level: *k, max });
                }
            }
            AtomType::II1 => {}
        }
        Ok(())
    }

    pub fn is_properly_infinite(&self) -> bool {
        matches!(
            self,
            AtomType::IInf(_) | AtomType::IIInf(_) | AtomType::III(_)
        )
    }

    pub fn is_finite_type(&self) -> bool {
        !self.is_properly_infinite()
    }

    /// Homogeneity aleph level of a properly infinite atom.
    pub fn homogeneity(&self) -> Option<u32> {
        match self {
            AtomType::IInf(k) | AtomType::IIInf(k) | AtomType::III(k) => Some(*k),
            _ => None,
        }
    }

    /// Finite-type atoms always admit a faithful trace state; a properly
    /// infinite atom is σ-finite exactly when its homogeneity is ℵ₀.
    pub fn is_sigma_finite(&self) -> bool {
        match self.homogeneity() {
            None => true,
            Some(k) => k == 0,
        }
    }
}

impl fmt::Display for AtomType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomType::IFin(n) => write!(f, "I_fin({})", n),
            AtomType::IInf(k) => write!(f, "I_inf(aleph {})", k),
            AtomType::II1 => write!(f, "II_1"),
            AtomType::IIInf(k) => write!(f, "II_inf(aleph {})", k),
            AtomType::III(k) => write!(f, "III(aleph {})", k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub name: String,
    pub ty: AtomType,
}

/// A finite atomic center with typed factor atoms, in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDesc {
    atoms: Vec<Atom>,
}

impl AlgebraDesc {
    pub fn new(atoms: Vec<(String, AtomType)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::EmptyAlgebra);
        }
        if atoms.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms {
                got: atoms.len(),
                max: MAX_ATOMS,
            });
        }
        let mut seen: Vec<&str> = Vec::with_capacity(atoms.len());
        for (name, ty) in &atoms {
            ty.validate()?;
            if seen.contains(&name.as_str()) {
                return Err(Error::DuplicateAtom(name.clone()));
            }
            seen.push(name);
        }
        Ok(AlgebraDesc {
            atoms: atoms
                .into_iter()
                .map(|(name, ty)| Atom { name, ty })
                .collect(),
        })
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn atom(&self, ix: usize) -> &Atom {
        &self.atoms[ix]
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a.name == name)
    }

    /// Largest homogeneity cardinal among properly infinite atoms, or ℵ₀
    /// when the algebra is finite (every σ-finite algebra sits at or
    /// below ℵ₀).
    pub fn kappa(&self) -> ExtValue {
        let level = self
            .atoms
            .iter()
            .filter_map(|a| a.ty.homogeneity())
            .max()
            .unwrap_or(0);
        ExtValue::Aleph(level)
    }

    pub fn is_finite_type(&self) -> bool {
        self.atoms.iter().all(|a| a.ty.is_finite_type())
    }
}

pub(crate) fn same_algebra(a: &Arc<AlgebraDesc>, b: &Arc<AlgebraDesc>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A central projection: a subset of the atoms of a fixed algebra.
#[derive(Clone, Debug)]
pub struct CentralProjection {
    algebra: Arc<AlgebraDesc>,
    mask: u64,
}

impl PartialEq for CentralProjection {
    fn eq(&self, other: &Self) -> bool {
        self.mask == other.mask && same_algebra(&self.algebra, &other.algebra)
    }
}

impl Eq for CentralProjection {}

impl CentralProjection {
    pub fn empty(algebra: &Arc<AlgebraDesc>) -> Self {
        CentralProjection {
            algebra: algebra.clone(),
            mask: 0,
        }
    }

    pub fn full(algebra: &Arc<AlgebraDesc>) -> Self {
        let mask = if algebra.atom_count() == 64 {
            u64::MAX
        } else {
            (1u64 << algebra.atom_count()) - 1
        };
        CentralProjection {
            algebra: algebra.clone(),
            mask,
        }
    }

    pub fn from_atoms(algebra: &Arc<AlgebraDesc>, names: &[&str]) -> Result<Self> {
        let mut mask = 0u64;
        for name in names {
            let ix = algebra
                .atom_index(name)
                .ok_or_else(|| Error::UnknownAtom((*name).to_string()))?;
            mask |= 1 << ix;
        }
        Ok(CentralProjection {
            algebra: algebra.clone(),
            mask,
        })
    }

    pub(crate) fn from_mask(algebra: &Arc<AlgebraDesc>, mask: u64) -> Self {
        CentralProjection {
            algebra: algebra.clone(),
            mask,
        }
    }

    pub fn algebra(&self) -> &Arc<AlgebraDesc> {
        &self.algebra
    }

    pub fn contains(&self, ix: usize) -> bool {
        self.mask & (1 << ix) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == Self::full(&self.algebra).mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.algebra.atom_count()).filter(move |ix| self.contains(*ix))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_mask(&self.algebra, self.mask & other.mask))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_mask(&self.algebra, self.mask | other.mask))
    }

    pub fn diff(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_mask(&self.algebra, self.mask & !other.mask))
    }

    pub fn complement(&self) -> Self {
        let full = Self::full(&self.algebra).mask;
        Self::from_mask(&self.algebra, full & !self.mask)
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.mask & !other.mask == 0)
    }
}

impl fmt::Display for CentralProjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for ix in self.indices() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}", self.algebra.atom(ix).name)?;
        }
        write!(f, "}}")
    }
}

/// A central positive element: a nonnegative rational per atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralPositive {
    algebra: Arc<AlgebraDesc>,
    values: Vec<BigRational>,
}

impl CentralPositive {
    pub fn from_values(algebra: &Arc<AlgebraDesc>, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != algebra.atom_count() {
            return Err(Error::AlgebraMismatch);
        }
        for v in &values {
            if v.is_negative() {
                return Err(Error::NegativeValue(v.to_string()));
            }
        }
        Ok(CentralPositive {
            algebra: algebra.clone(),
            values,
        })
    }

    pub fn constant(algebra: &Arc<AlgebraDesc>, value: BigRational) -> Result<Self> {
        let n = algebra.atom_count();
        Self::from_values(algebra, vec![value; n])
    }

    pub fn algebra(&self) -> &Arc<AlgebraDesc> {
        &self.algebra
    }

    pub fn value(&self, ix: usize) -> &BigRational {
        &self.values[ix]
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.values.iter().all(|v| v.is_positive())
    }
}

/// Dimension value of the identity: normalized trace 1 on finite atoms,
/// the homogeneity cardinal on properly infinite ones.
pub fn unit(algebra: &Arc<AlgebraDesc>) -> DimElement {
    let values = algebra
        .atoms()
        .iter()
        .map(|a| match &a.ty {
            AtomType::IFin(_) | AtomType::II1 => ExtValue::Fin(BigRational::one()),
            AtomType::IInf(k) | AtomType::IIInf(k) | AtomType::III(k) => ExtValue::Aleph(*k),
        })
        .collect();
    DimElement::new_unchecked(algebra.clone(), values)
}

fn amplified_type(ty: &AtomType, index: &AmplificationIndex) -> Result<AtomType> {
    Ok(match index {
        AmplificationIndex::Finite(m) => match ty {
            AtomType::IFin(n) => {
                AtomType::IFin(n.checked_mul(*m).ok_or(Error::AmplificationOverflow)?)
            }
            other => other.clone(),
        },
        AmplificationIndex::Aleph(i) => match ty {
            AtomType::IFin(_) => AtomType::IInf(*i),
            AtomType::II1 => AtomType::IIInf(*i),
            AtomType::IInf(k) => AtomType::IInf((*k).max(*i)),
            AtomType::IIInf(k) => AtomType::IIInf((*k).max(*i)),
            AtomType::III(k) => AtomType::III((*k).max(*i)),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum AmplificationIndex {
    Finite(u64),
    Aleph(u32),
}

impl AmplificationIndex {
    fn from_value(index: &ExtValue) -> Result<Self> {
        match index {
            ExtValue::Fin(q) => {
                if !q.is_integer() || !q.is_positive() {
                    return Err(Error::BadAmplificationIndex(index.to_string()));
                }
                let m = q
                    .to_integer()
                    .to_u64()
                    .ok_or_else(|| Error::BadAmplificationIndex(index.to_string()))?;
                Ok(AmplificationIndex::Finite(m))
            }
            ExtValue::Aleph(i) => Ok(AmplificationIndex::Aleph(*i)),
        }
    }
}

/// Per-atom type transformation under tensoring with a matrix factor of
/// order `m` (`index = Fin(m)`) or with the bounded operators on an
/// ℵᵢ-dimensional space (`index = Aleph(i)`).
pub fn amplify(algebra: &Arc<AlgebraDesc>, index: &ExtValue) -> Result<AlgebraDesc> {
    let ix = AmplificationIndex::from_value(index)?;
    let atoms = algebra
        .atoms()
        .iter()
        .map(|a| Ok((a.name.clone(), amplified_type(&a.ty, &ix)?)))
        .collect::<Result<Vec<_>>>()?;
    AlgebraDesc::new(atoms)
}

/// A recorded amplification `base ⊗ index`, able to translate classes of
/// the base into classes of the result.
#[derive(Clone, Debug)]
pub struct Amplification {
    base: Arc<AlgebraDesc>,
    index: ExtValue,
    parsed: AmplificationIndex,
    result: Arc<AlgebraDesc>,
}

impl Amplification {
    pub fn new(base: Arc<AlgebraDesc>, index: ExtValue) -> Result<Self> {
        let parsed = AmplificationIndex::from_value(&index)?;
        let result = Arc::new(amplify(&base, &index)?);
        Ok(Amplification {
            base,
            index,
            parsed,
            result,
        })
    }

    pub fn base(&self) -> &Arc<AlgebraDesc> {
        &self.base
    }

    pub fn index(&self) -> &ExtValue {
        &self.index
    }

    pub fn result(&self) -> &Arc<AlgebraDesc> {
        &self.result
    }

    fn embed_value(&self, ty: &AtomType, v: &ExtValue) -> ExtValue {
        match (&self.parsed, ty) {
            // trace renormalizes on finite atoms: the base unit becomes a
            // 1/m corner of the new unit
            (AmplificationIndex::Finite(m), AtomType::IFin(_) | AtomType::II1) => match v {
                ExtValue::Fin(q) => ExtValue::Fin(q / BigRational::from_integer((*m).into())),
                aleph => aleph.clone(),
            },
            (AmplificationIndex::Finite(_), _) => v.clone(),
            // I_fin(n) becomes I_inf: the class of rank k counts k abelians
            (AmplificationIndex::Aleph(_), AtomType::IFin(n)) => match v {
                ExtValue::Fin(q) => ExtValue::Fin(q * BigRational::from_integer((*n).into())),
                aleph => aleph.clone(),
            },
            // II_1 becomes II_inf with the semifinite trace normalized so
            // that the old unit keeps trace 1
            (AmplificationIndex::Aleph(_), _) => v.clone(),
        }
    }

    fn embed_values(&self, e: &DimElement) -> Result<Vec<ExtValue>> {
        if !same_algebra(e.algebra(), &self.base) {
            return Err(Error::NotOverBase);
        }
        Ok(self
            .base
            .atoms()
            .iter()
            .enumerate()
            .map(|(ix, a)| self.embed_value(&a.ty, e.value(ix)))
            .collect())
    }

    /// Translate a projection class of the base into the projection class
    /// of the same projection viewed inside the amplification.
    pub fn embed(&self, e: &DimElement) -> Result<DimElement> {
        e.check_projection_class()?;
        let values = self.embed_values(e)?;
        Ok(DimElement::new_unchecked(self.result.clone(), values))
    }

    /// Translate a representation class of the base. Representation
    /// classes may exceed the base unit; the result must still be a
    /// projection class of the amplification.
    pub fn embed_representation(&self, e: &DimElement) -> Result<DimElement> {
        e.check_representation_class()?;
        let values = self.embed_values(e)?;
        let out = DimElement::new_unchecked(self.result.clone(), values);
        out.check_projection_class()?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdoracle::{RankTuple, Shape};

    fn arc(atoms: Vec<(&str, AtomType)>) -> Arc<AlgebraDesc> {
        Arc::new(
            AlgebraDesc::new(atoms.into_iter().map(|(n, t)| (n.to_string(), t)).collect()).unwrap(),
        )
    }

    #[test]
    fn algebra_validation() {
        assert!(matches!(AlgebraDesc::new(vec![]), Err(Error::EmptyAlgebra)));
        assert!(matches!(
            AlgebraDesc::new(vec![
                ("a".into(), AtomType::II1),
                ("a".into(), AtomType::III(0)),
            ]),
            Err(Error::DuplicateAtom(_))
        ));
        assert!(matches!(
            AlgebraDesc::new(vec![("a".into(), AtomType::IFin(0))]),
            Err(Error::ZeroMatrixOrder)
        ));
    }

    #[test]
    fn kappa_is_the_largest_homogeneity() {
        let a = arc(vec![
            ("a", AtomType::II1),
            ("b", AtomType::IIInf(2)),
            ("c", AtomType::III(1)),
        ]);
        assert_eq!(a.kappa(), ExtValue::Aleph(2));
        let finite = arc(vec![("a", AtomType::IFin(3))]);
        assert_eq!(finite.kappa(), ExtValue::Aleph(0));
    }

    #[test]
    fn central_projections_form_a_boolean_algebra() {
        let alg = arc(vec![
            ("a1", AtomType::II1),
            ("a2", AtomType::IFin(2)),
            ("a3", AtomType::III(0)),
        ]);
        let x = CentralProjection::from_atoms(&alg, &["a1", "a2"]).unwrap();
        let y = CentralProjection::from_atoms(&alg, &["a2", "a3"]).unwrap();
        assert_eq!(
            x.meet(&y).unwrap(),
            CentralProjection::from_atoms(&alg, &["a2"]).unwrap()
        );
        assert_eq!(
            CentralProjection::empty(&alg).complement(),
            CentralProjection::full(&alg)
        );
        assert_eq!(
            x.diff(&CentralProjection::from_atoms(&alg, &["a1"]).unwrap())
                .unwrap(),
            CentralProjection::from_atoms(&alg, &["a2"]).unwrap()
        );

        // De Morgan and distributivity, exhaustively over all subsets of a
        // five-atom center
        let five = arc(vec![
            ("a1", AtomType::II1),
            ("a2", AtomType::IFin(2)),
            ("a3", AtomType::III(0)),
            ("a4", AtomType::IInf(1)),
            ("a5", AtomType::IIInf(0)),
        ]);
        let subsets: Vec<CentralProjection> = (0u64..32)
            .map(|m| CentralProjection::from_mask(&five, m))
            .collect();
        for p in &subsets {
            for q in &subsets {
                assert_eq!(
                    p.meet(q).unwrap().complement(),
                    p.complement().join(&q.complement()).unwrap()
                );
                assert_eq!(
                    p.join(q).unwrap().complement(),
                    p.complement().meet(&q.complement()).unwrap()
                );
                for r in &subsets {
                    assert_eq!(
                        p.meet(&q.join(r).unwrap()).unwrap(),
                        p.meet(q).unwrap().join(&p.meet(r).unwrap()).unwrap()
                    );
                    assert_eq!(
                        p.join(&q.meet(r).unwrap()).unwrap(),
                        p.join(q).unwrap().meet(&p.join(r).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn mismatched_projections_error() {
        let a = arc(vec![("a", AtomType::II1)]);
        let b = arc(vec![("b", AtomType::II1)]);
        let pa = CentralProjection::full(&a);
        let pb = CentralProjection::full(&b);
        assert!(matches!(pa.meet(&pb), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn unit_values_follow_atom_types() {
        let single = arc(vec![("a", AtomType::II1)]);
        assert_eq!(unit(&single).value(0), &ExtValue::fin_int(1));

        let three = arc(vec![("a", AtomType::III(0))]);
        assert_eq!(unit(&three).value(0), &ExtValue::Aleph(0));

        let mixed = arc(vec![("a", AtomType::IFin(3)), ("b", AtomType::IIInf(1))]);
        let u = unit(&mixed);
        assert_eq!(u.value(0), &ExtValue::fin_int(1));
        assert_eq!(u.value(1), &ExtValue::Aleph(1));
    }

    #[test]
    fn amplify_examples() {
        let m2 = arc(vec![("a", AtomType::IFin(2))]);
        let m6 = amplify(&m2, &ExtValue::fin_int(3)).unwrap();
        assert_eq!(m6.atom(0).ty, AtomType::IFin(6));

        let ii1 = arc(vec![("a", AtomType::II1)]);
        let amp = amplify(&ii1, &ExtValue::Aleph(0)).unwrap();
        assert_eq!(amp.atom(0).ty, AtomType::IIInf(0));

        let iii = arc(vec![("a", AtomType::III(0))]);
        let amp = amplify(&iii, &ExtValue::Aleph(1)).unwrap();
        assert_eq!(amp.atom(0).ty, AtomType::III(1));

        assert!(matches!(
            amplify(&m2, &ExtValue::fin(1, 2)),
            Err(Error::BadAmplificationIndex(_))
        ));
        assert!(amplify(&m2, &ExtValue::zero()).is_err());
    }

    #[test]
    fn amplify_by_one_is_identity_and_composes() {
        let alg = arc(vec![
            ("a", AtomType::IFin(2)),
            ("b", AtomType::II1),
            ("c", AtomType::IInf(1)),
        ]);
        assert_eq!(&amplify(&alg, &ExtValue::fin_int(1)).unwrap(), alg.as_ref());
        let twice = Arc::new(amplify(&alg, &ExtValue::fin_int(2)).unwrap());
        let sixfold = amplify(&twice, &ExtValue::fin_int(3)).unwrap();
        assert_eq!(sixfold, amplify(&alg, &ExtValue::fin_int(6)).unwrap());
    }

    #[test]
    fn embed_matches_rank_arithmetic() {
        // rank 1 in M_2 has value 1/2; inside M_6 the same projection is
        // rank 1 of 6
        let shape2 = Shape::new(vec![2]).unwrap();
        let shape6 = Shape::new(vec![6]).unwrap();
        let m2 = shape2.algebra().unwrap();
        let amp = Amplification::new(m2.clone(), ExtValue::fin_int(3)).unwrap();
        for k in 0..=2u64 {
            let class = shape2
                .to_dim_element(&RankTuple::new(&shape2, vec![k]).unwrap())
                .unwrap();
            let embedded = amp.embed(&class).unwrap();
            let direct = shape6
                .to_dim_element(&RankTuple::new(&shape6, vec![k]).unwrap())
                .unwrap();
            assert_eq!(embedded.value(0), direct.value(0));
        }
    }

    #[test]
    fn embed_is_injective_and_order_preserving_on_a_grid() {
        let shape = Shape::new(vec![2, 3]).unwrap();
        let base = shape.algebra().unwrap();
        for index in [ExtValue::fin_int(2), ExtValue::Aleph(0)] {
            let amp = Amplification::new(base.clone(), index).unwrap();
            let classes = shape.enumerate_classes();
            let images: Vec<_> = classes
                .iter()
                .map(|t| amp.embed(&shape.to_dim_element(t).unwrap()).unwrap())
                .collect();
            for (i, x) in images.iter().enumerate() {
                for (j, y) in images.iter().enumerate() {
                    if i != j {
                        assert_ne!(x, y);
                    }
                    let src = shape
                        .to_dim_element(&classes[i])
                        .unwrap()
                        .leq(&shape.to_dim_element(&classes[j]).unwrap())
                        .unwrap();
                    assert_eq!(x.leq(y).unwrap(), src);
                }
            }
        }
    }

    #[test]
    fn embed_into_infinite_amplification_counts_abelians() {
        let m2 = arc(vec![("a", AtomType::IFin(2))]);
        let amp = Amplification::new(m2.clone(), ExtValue::Aleph(0)).unwrap();
        assert_eq!(amp.result().atom(0).ty, AtomType::IInf(0));
        let one_of_two = DimElement::new_projection(m2.clone(), vec![ExtValue::fin(1, 2)]).unwrap();
        assert_eq!(
            amp.embed(&one_of_two).unwrap().value(0),
            &ExtValue::fin_int(1)
        );

        // the unit of II_1 keeps trace 1 under the chosen normalization
        let ii1 = arc(vec![("a", AtomType::II1)]);
        let amp = Amplification::new(ii1.clone(), ExtValue::Aleph(0)).unwrap();
        let u = unit(&ii1);
        assert_eq!(amp.embed(&u).unwrap().value(0), &ExtValue::fin_int(1));

        // zero goes to zero
        let z = DimElement::zero(&ii1);
        assert!(amp.embed(&z).unwrap().value(0).is_zero());
    }
}
