//! Brute-force ground truth on finite-dimensional algebras, plus the
//! representation-lattice application.
//!
//! On `⊕ᵢ M_{nᵢ}` equivalence classes of projections are exactly rank
//! tuples, so the whole dimension calculus collapses to integer
//! arithmetic. That makes the rank model an independent oracle for the
//! chain-valued machinery: `to_dim_element` must be an injective
//! order-and-monoid embedding, and the family extrema must match
//! pointwise tuple extrema. The representation helpers pick the smallest
//! amplification in which a family of representation classes fits and take
//! their lattice bounds there.

use std::sync::Arc;

use num::BigRational;

use crate::algebra::{same_algebra, unit, AlgebraDesc, Amplification, AtomType};
use crate::complattice::{family_inf, family_sup, FamilySpec};
use crate::dimfun::DimElement;
use crate::error::{Error, Result};
use crate::extval::{max_aleph, ExtValue};

/// Matrix orders of a finite-dimensional algebra `⊕ᵢ M_{nᵢ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape(Vec<u64>);

impl Shape {
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::BadShape);
        }
        Ok(Shape(orders))
    }

    pub fn orders(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The corresponding algebra descriptor, atoms named `m1`, `m2`, ….
    pub fn algebra(&self) -> Result<Arc<AlgebraDesc>> {
        let atoms = self
            .0
            .iter()
            .enumerate()
            .map(|(i, n)| (format!("m{}", i + 1), AtomType::IFin(*n)))
            .collect();
        Ok(Arc::new(AlgebraDesc::new(atoms)?))
    }

    /// All rank tuples, in lexicographic order.
    pub fn enumerate_classes(&self) -> Vec<RankTuple> {
        let mut out = vec![RankTuple {
            shape: self.clone(),
            ranks: vec![0; self.len()],
        }];
        for (ix, n) in self.0.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (*n as usize + 1));
            for t in &out {
                for k in 0..=*n {
                    let mut ranks = t.ranks.clone();
                    ranks[ix] = k;
                    next.push(RankTuple {
                        shape: self.clone(),
                        ranks,
                    });
                }
            }
            out = next;
        }
        out
    }

    /// Dimension element of a rank tuple: normalized trace `kᵢ/nᵢ`.
    pub fn to_dim_element(&self, t: &RankTuple) -> Result<DimElement> {
        if t.shape != *self {
            return Err(Error::ShapeMismatch);
        }
        let algebra = self.algebra()?;
        let values = t
            .ranks
            .iter()
            .zip(&self.0)
            .map(|(k, n)| ExtValue::Fin(BigRational::new((*k).into(), (*n).into())))
            .collect();
        Ok(DimElement::new_unchecked(algebra, values))
    }
}

/// Ranks of a projection class per matrix summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTuple {
    shape: Shape,
    ranks: Vec<u64>,
}

impl RankTuple {
    pub fn new(shape: &Shape, ranks: Vec<u64>) -> Result<Self> {
        if ranks.len() != shape.len() {
            return Err(Error::ShapeMismatch);
        }
        for (k, n) in ranks.iter().zip(shape.orders()) {
            if k > n {
                return Err(Error::RankOutOfBounds {
                    rank: *k,
                    order: *n,
                });
            }
        }
        Ok(RankTuple {
            shape: shape.clone(),
            ranks,
        })
    }

    pub fn ranks(&self) -> &[u64] {
        &self.ranks
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch)
        }
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.ranks.iter().zip(&other.ranks).all(|(a, b)| a <= b))
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let ranks = self
            .ranks
            .iter()
            .zip(&other.ranks)
            .map(|(a, b)| *a.min(b))
            .collect();
        Ok(RankTuple {
            shape: self.shape.clone(),
            ranks,
        })
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let ranks = self
            .ranks
            .iter()
            .zip(&other.ranks)
            .map(|(a, b)| *a.max(b))
            .collect();
        Ok(RankTuple {
            shape: self.shape.clone(),
            ranks,
        })
    }

    /// Orthogonal sum; defined only when the summed ranks still fit.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut ranks = Vec::with_capacity(self.ranks.len());
        for ((a, b), n) in self.ranks.iter().zip(&other.ranks).zip(self.shape.orders()) {
            let sum = a + b;
            if sum > *n {
                return Err(Error::UnrealizableSum);
            }
            ranks.push(sum);
        }
        Ok(RankTuple {
            shape: self.shape.clone(),
            ranks,
        })
    }
}

/// Exhaustive agreement check between the rank model and the dimension
/// calculus for one shape. Returns the number of classes visited.
pub fn oracle_check(shape: &Shape) -> Result<usize> {
    let classes = shape.enumerate_classes();
    let algebra = shape.algebra()?;
    let images: Vec<DimElement> = classes
        .iter()
        .map(|t| shape.to_dim_element(t))
        .collect::<Result<Vec<_>>>()?;

    for img in &images {
        img.check_projection_class()?;
    }

    // complete invariant: distinct tuples, distinct elements
    for i in 0..images.len() {
        for j in 0..images.len() {
            if i != j && images[i] == images[j] {
                return Err(Error::MalformedFormalSum(format!(
                    "rank embedding not injective at {:?} vs {:?}",
                    classes[i].ranks(),
                    classes[j].ranks()
                )));
            }
        }
    }

    let mismatch = |what: &str, a: &RankTuple, b: &RankTuple| {
        Err(Error::MalformedFormalSum(format!(
            "{} disagrees at {:?} vs {:?}",
            what,
            a.ranks(),
            b.ranks()
        )))
    };

    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            if a.leq(b)? != images[i].leq(&images[j])? {
                return mismatch("order", a, b);
            }
            if shape.to_dim_element(&a.meet(b)?)? != images[i].meet(&images[j])? {
                return mismatch("meet", a, b);
            }
            if shape.to_dim_element(&a.join(b)?)? != images[i].join(&images[j])? {
                return mismatch("join", a, b);
            }
            let sum = images[i].add(&images[j])?;
            match a.add(b) {
                Ok(t) => {
                    if shape.to_dim_element(&t)? != sum {
                        return mismatch("sum", a, b);
                    }
                }
                Err(Error::UnrealizableSum) => {
                    // overflow in ranks must be exactly failure to stay
                    // below the unit
                    if sum.leq(&unit(&algebra))? {
                        return mismatch("overflow detection", a, b);
                    }
                }
                Err(e) => return Err(e),
            }
        }
    }

    // family extrema against pointwise tuple extrema, over all pairs
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            let family = FamilySpec::explicit(vec![images[i].clone(), images[j].clone()])?;
            if family_sup(&family)? != shape.to_dim_element(&a.join(b)?)? {
                return mismatch("family_sup", a, b);
            }
            if family_inf(&family)? != shape.to_dim_element(&a.meet(b)?)? {
                return mismatch("family_inf", a, b);
            }
        }
    }

    Ok(classes.len())
}

/// Outcome of a representation-lattice computation: the amplification in
/// which the family was compared and the distinguished class inside it.
#[derive(Clone, Debug)]
pub struct RepBound {
    pub amplification: Amplification,
    pub class: DimElement,
}

fn ceil_u64(q: &BigRational) -> Result<u64> {
    use num::ToPrimitive;
    q.ceil()
        .to_integer()
        .to_u64()
        .ok_or(Error::AmplificationOverflow)
}

/// Smallest index whose amplification turns every member into a
/// projection class: the least adequate finite matrix order if one
/// exists, otherwise the least adequate aleph.
fn smallest_adequate_index(base: &Arc<AlgebraDesc>, members: &[DimElement]) -> Result<ExtValue> {
    let mut needs_infinite = false;
    let mut min_level: u32 = 0;
    let mut min_order: u64 = 1;
    for m in members {
        for (ix, atom) in base.atoms().iter().enumerate() {
            let v = m.value(ix);
            match (&atom.ty, v) {
                // alephs on finite-type atoms force an infinite index that
                // dominates them
                (AtomType::IFin(_) | AtomType::II1, ExtValue::Aleph(j)) => {
                    needs_infinite = true;
                    min_level = min_level.max(*j);
                }
                // a cardinal beyond the atom's homogeneity also forces an
                // infinite index
                (AtomType::IInf(k) | AtomType::IIInf(k) | AtomType::III(k), ExtValue::Aleph(j)) => {
                    if j > k {
                        needs_infinite = true;
                        min_level = min_level.max(*j);
                    }
                }
                // finite values on finite-type atoms fit once the order is
                // large enough to bring them below the unit
                (AtomType::IFin(_) | AtomType::II1, ExtValue::Fin(q)) => {
                    min_order = min_order.max(ceil_u64(q)?.max(1));
                }
                _ => {}
            }
        }
    }
    if needs_infinite {
        let max = max_aleph();
        if min_level > max {
            return Err(Error::AlephOutOfRange {
                level: min_level,
                max,
            });
        }
        Ok(ExtValue::Aleph(min_level))
    } else {
        Ok(ExtValue::fin_int(min_order))
    }
}

fn rep_common(base: &Arc<AlgebraDesc>, members: &[DimElement], sup: bool) -> Result<RepBound> {
    if members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for m in members {
        if !same_algebra(base, m.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        m.check_representation_class()?;
    }
    let index = smallest_adequate_index(base, members)?;
    let amplification = Amplification::new(base.clone(), index)?;
    let embedded = members
        .iter()
        .map(|m| amplification.embed_representation(m))
        .collect::<Result<Vec<_>>>()?;
    let family = FamilySpec::explicit(embedded)?;
    let class = if sup {
        family_sup(&family)?
    } else {
        family_inf(&family)?
    };
    Ok(RepBound {
        amplification,
        class,
    })
}

/// Largest representation contained in every member of the family.
pub fn rep_common_sub(base: &Arc<AlgebraDesc>, members: &[DimElement]) -> Result<RepBound> {
    rep_common(base, members, false)
}

/// Smallest representation containing every member of the family.
pub fn rep_common_super(base: &Arc<AlgebraDesc>, members: &[DimElement]) -> Result<RepBound> {
    rep_common(base, members, true)
}
