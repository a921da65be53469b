//! Dimension elements: one chain value per central atom.
//!
//! A [`DimElement`] carries the dimension data of a class of projections
//! (or positive elements) over a fixed algebra. The pointwise order is
//! subequivalence, pointwise chain addition is the orthogonal sum, the
//! central Boolean algebra acts by cut-downs, and every element has a
//! unique formal-sum decomposition into slices `(κ, z_κ, g_κ)` — the data
//! structure behind the family supremum/infimum algorithm.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::algebra::{same_algebra, AlgebraDesc, AtomType, CentralPositive, CentralProjection};
use crate::error::{Error, Result};
use crate::extval::ExtValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ClassKind {
    Cone,
    Projection,
    Representation,
}

/// Which values an atom of the given type admits.
///
/// * cone classes are `{0, alephs ≤ κ}` on type III atoms, any nonnegative
///   rational on the other types, with alephs (≤ κ) only on properly
///   infinite atoms;
/// * projection classes additionally sit below the unit: multiples of
///   `1/n` on `I_fin(n)`, at most 1 on `II_1`, integers for finite values
///   on `I_inf`;
/// * representation classes drop the unit bound (and allow alephs on
///   finite-type atoms): they are projection classes of a large enough
///   amplification, expressed in the coordinates of the base.
fn admissible(ty: &AtomType, v: &ExtValue, kind: ClassKind) -> std::result::Result<(), String> {
    let aleph_cap = |cap: u32| -> std::result::Result<(), String> {
        match v.aleph_level() {
            Some(level) if level > cap => Err(format!(
                "aleph {} exceeds the homogeneity aleph {} of this atom",
                level, cap
            )),
            _ => Ok(()),
        }
    };
    match ty {
        AtomType::IFin(n) => match v {
            ExtValue::Fin(q) => match kind {
                ClassKind::Cone => Ok(()),
                ClassKind::Projection => {
                    let scaled = q * BigRational::from_integer((*n).into());
                    if !scaled.is_integer() {
                        Err(format!("{} is not a multiple of 1/{}", q, n))
                    } else if q > &BigRational::one() {
                        Err(format!("{} exceeds the unit trace 1", q))
                    } else {
                        Ok(())
                    }
                }
                ClassKind::Representation => {
                    let scaled = q * BigRational::from_integer((*n).into());
                    if scaled.is_integer() {
                        Ok(())
                    } else {
                        Err(format!("{} is not a multiple of 1/{}", q, n))
                    }
                }
            },
            ExtValue::Aleph(_) => {
                if kind == ClassKind::Representation {
                    Ok(())
                } else {
                    Err(format!("aleph value not admissible on {} atom", ty))
                }
            }
        },
        AtomType::II1 => match v {
            ExtValue::Fin(q) => {
                if kind == ClassKind::Projection && q > &BigRational::one() {
                    Err(format!("{} exceeds the unit trace 1", q))
                } else {
                    Ok(())
                }
            }
            ExtValue::Aleph(_) => {
                if kind == ClassKind::Representation {
                    Ok(())
                } else {
                    Err(format!("aleph value not admissible on {} atom", ty))
                }
            }
        },
        AtomType::IInf(k) => match v {
            ExtValue::Fin(q) => match kind {
                ClassKind::Cone => Ok(()),
                _ => {
                    if q.is_integer() {
                        Ok(())
                    } else {
                        Err(format!(
                            "{} is not an integer count of abelian projections",
                            q
                        ))
                    }
                }
            },
            ExtValue::Aleph(_) => match kind {
                ClassKind::Representation => Ok(()),
                _ => aleph_cap(*k),
            },
        },
        AtomType::IIInf(k) => match v {
            ExtValue::Fin(_) => Ok(()),
            ExtValue::Aleph(_) => match kind {
                ClassKind::Representation => Ok(()),
                _ => aleph_cap(*k),
            },
        },
        AtomType::III(k) => match v {
            ExtValue::Fin(q) => {
                if q.is_zero() {
                    Ok(())
                } else {
                    Err(format!(
                        "{} is neither 0 nor an aleph on a type III atom",
                        q
                    ))
                }
            }
            ExtValue::Aleph(_) => match kind {
                ClassKind::Representation => Ok(()),
                _ => aleph_cap(*k),
            },
        },
    }
}

/// One chain value per atom of a fixed algebra.
#[derive(Clone, Debug)]
pub struct DimElement {
    algebra: Arc<AlgebraDesc>,
    values: Vec<ExtValue>,
}

impl PartialEq for DimElement {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values && same_algebra(&self.algebra, &other.algebra)
    }
}

impl Eq for DimElement {}

impl DimElement {
    /// Takes the values as given, without class validation. The values
    /// still live in the ambient chain product; use the validating
    /// constructors when cone or projection constraints are required.
    pub fn new_unchecked(algebra: Arc<AlgebraDesc>, values: Vec<ExtValue>) -> Self {
        assert_eq!(
            values.len(),
            algebra.atom_count(),
            "value map must be total"
        );
        DimElement { algebra, values }
    }

    pub fn new_cone(algebra: Arc<AlgebraDesc>, values: Vec<ExtValue>) -> Result<Self> {
        let e = Self::new_unchecked(algebra, values);
        e.check_cone_class()?;
        Ok(e)
    }

    pub fn new_projection(algebra: Arc<AlgebraDesc>, values: Vec<ExtValue>) -> Result<Self> {
        let e = Self::new_unchecked(algebra, values);
        e.check_projection_class()?;
        Ok(e)
    }

    pub fn zero(algebra: &Arc<AlgebraDesc>) -> Self {
        let values = vec![ExtValue::zero(); algebra.atom_count()];
        Self::new_unchecked(algebra.clone(), values)
    }

    pub fn algebra(&self) -> &Arc<AlgebraDesc> {
        &self.algebra
    }

    pub fn value(&self, ix: usize) -> &ExtValue {
        &self.values[ix]
    }

    pub fn values(&self) -> &[ExtValue] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(ExtValue::is_zero)
    }

    fn check_kind(&self, kind: ClassKind) -> Result<()> {
        for (ix, v) in self.values.iter().enumerate() {
            let atom = self.algebra.atom(ix);
            if let Err(reason) = admissible(&atom.ty, v, kind) {
                let atom = atom.name.clone();
                return Err(match kind {
                    ClassKind::Cone => Error::NotConeClass { atom, reason },
                    ClassKind::Projection => Error::NotProjectionClass { atom, reason },
                    ClassKind::Representation => Error::NotRepresentationClass { atom, reason },
                });
            }
        }
        Ok(())
    }

    pub fn check_cone_class(&self) -> Result<()> {
        self.check_kind(ClassKind::Cone)
    }

    pub fn check_projection_class(&self) -> Result<()> {
        self.check_kind(ClassKind::Projection)
    }

    pub fn check_representation_class(&self) -> Result<()> {
        self.check_kind(ClassKind::Representation)
    }

    pub fn is_cone_class(&self) -> bool {
        self.check_cone_class().is_ok()
    }

    pub fn is_projection_class(&self) -> bool {
        self.check_projection_class().is_ok()
    }

    pub fn is_representation_class(&self) -> bool {
        self.check_representation_class().is_ok()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Pointwise order; subequivalence of classes.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.cmp(b) != Ordering::Greater))
    }

    /// Orthogonal sum: pointwise chain addition.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Self::new_unchecked(self.algebra.clone(), values))
    }

    /// Action of a central positive element: per-atom scaling, with zero
    /// coefficients annihilating.
    pub fn scale(&self, y: &CentralPositive) -> Result<Self> {
        if !same_algebra(self.algebra(), y.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(ix, v)| {
                let c = y.value(ix);
                if c.is_zero() {
                    Ok(v.zero_scale())
                } else {
                    v.scale(c)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(self.algebra.clone(), values))
    }

    /// Atoms where the value is nonzero.
    pub fn central_support(&self) -> CentralProjection {
        let mut mask = 0u64;
        for (ix, v) in self.values.iter().enumerate() {
            if !v.is_zero() {
                mask |= 1 << ix;
            }
        }
        CentralProjection::from_mask(&self.algebra, mask)
    }

    /// Largest central projection on which the element is finite.
    pub fn finite_part_projection(&self) -> CentralProjection {
        let mut mask = 0u64;
        for (ix, v) in self.values.iter().enumerate() {
            if v.is_finite() {
                mask |= 1 << ix;
            }
        }
        CentralProjection::from_mask(&self.algebra, mask)
    }

    /// The comparison-theorem central projection: the atoms where `self`
    /// is dominated by `other`.
    pub fn comparison_projection(&self, other: &Self) -> Result<CentralProjection> {
        self.check_same(other)?;
        let mut mask = 0u64;
        for (ix, (a, b)) in self.values.iter().zip(&other.values).enumerate() {
            if a <= b {
                mask |= 1 << ix;
            }
        }
        Ok(CentralProjection::from_mask(&self.algebra, mask))
    }

    /// Pairwise meet, assembled as `self` on the central cut where it is
    /// dominated and `other` on the complement. Equals the pointwise
    /// minimum.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        let z = self.comparison_projection(other)?;
        Ok(self.splice(other, &z))
    }

    /// Pairwise join: `other` on the cut where `self` is dominated,
    /// `self` on the complement. Equals the pointwise maximum.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let z = self.comparison_projection(other)?;
        Ok(other.splice(self, &z))
    }

    /// `self` on `z`, `other` off `z`.
    fn splice(&self, other: &Self, z: &CentralProjection) -> Self {
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .enumerate()
            .map(|(ix, (a, b))| if z.contains(ix) { a.clone() } else { b.clone() })
            .collect();
        Self::new_unchecked(self.algebra.clone(), values)
    }

    /// The canonical complement: `c` with `self + c = other`, defined when
    /// `self ≤ other`. On atoms where both sides share an aleph the
    /// absorbing value itself is returned — the largest valid witness.
    pub fn complement_in(&self, other: &Self) -> Result<Self> {
        if !self.leq(other)? {
            return Err(Error::NotDominated);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| match (a, b) {
                (ExtValue::Fin(x), ExtValue::Fin(y)) => ExtValue::Fin(y - x),
                (_, ExtValue::Aleph(j)) => ExtValue::Aleph(*j),
                (ExtValue::Aleph(_), ExtValue::Fin(_)) => {
                    unreachable!("domination excludes aleph below finite")
                }
            })
            .collect();
        Ok(Self::new_unchecked(self.algebra.clone(), values))
    }

    /// The `[0, +∞]`-valued extended center-valued trace: every aleph
    /// collapses to +∞.
    pub fn trace_collapse(&self) -> Vec<TraceValue> {
        self.values
            .iter()
            .map(|v| match v {
                ExtValue::Fin(q) => TraceValue::Finite(q.clone()),
                ExtValue::Aleph(_) => TraceValue::Infinite,
            })
            .collect()
    }

    /// Canonical slice decomposition: zero values to slice 0, a positive
    /// rational `r` to the integer slice `⌈r⌉`, an aleph to its own slice.
    pub fn to_formal_sum(&self) -> FormalSum {
        let mut slices: Vec<FormalSlice> = Vec::new();
        for (ix, v) in self.values.iter().enumerate() {
            let (slice_ix, g) = match v {
                ExtValue::Fin(q) if q.is_zero() => (SliceIx::Fin(BigInt::zero()), Some(q.clone())),
                ExtValue::Fin(q) => (SliceIx::Fin(q.ceil().to_integer()), Some(q.clone())),
                ExtValue::Aleph(i) => (SliceIx::Aleph(*i), None),
            };
            match slices.iter_mut().find(|s| s.ix == slice_ix) {
                Some(slice) => {
                    slice.mask |= 1 << ix;
                    if let Some(q) = g {
                        slice.g.push((ix, q));
                    }
                }
                None => {
                    let mut slice = FormalSlice {
                        ix: slice_ix,
                        mask: 1 << ix,
                        g: Vec::new(),
                    };
                    if let Some(q) = g {
                        slice.g.push((ix, q));
                    }
                    slices.push(slice);
                }
            }
        }
        slices.sort_by(|a, b| a.ix.cmp(&b.ix));
        FormalSum {
            algebra: self.algebra.clone(),
            slices,
        }
    }
}

impl fmt::Display for DimElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{ ")?;
        for (ix, v) in self.values.iter().enumerate() {
            if ix > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {}", self.algebra.atom(ix).name, v)?;
        }
        write!(f, " }}")
    }
}

/// Value of the extended trace at one atom after collapsing cardinals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceValue {
    Finite(BigRational),
    Infinite,
}

impl TraceValue {
    pub fn leq(&self, other: &TraceValue) -> bool {
        match (self, other) {
            (_, TraceValue::Infinite) => true,
            (TraceValue::Infinite, TraceValue::Finite(_)) => false,
            (TraceValue::Finite(a), TraceValue::Finite(b)) => a <= b,
        }
    }
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceValue::Finite(q) => write!(f, "{}", q),
            TraceValue::Infinite => write!(f, "+inf"),
        }
    }
}

/// Slice index: a nonnegative integer or an aleph level, linearly ordered
/// with every integer below every aleph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SliceIx {
    Fin(BigInt),
    Aleph(u32),
}

impl Ord for SliceIx {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (SliceIx::Fin(a), SliceIx::Fin(b)) => a.cmp(b),
            (SliceIx::Fin(_), SliceIx::Aleph(_)) => Ordering::Less,
            (SliceIx::Aleph(_), SliceIx::Fin(_)) => Ordering::Greater,
            (SliceIx::Aleph(i), SliceIx::Aleph(j)) => i.cmp(j),
        }
    }
}

impl PartialOrd for SliceIx {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SliceIx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SliceIx::Fin(k) => write!(f, "{}", k),
            SliceIx::Aleph(i) => write!(f, "aleph {}", i),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FormalSlice {
    pub(crate) ix: SliceIx,
    pub(crate) mask: u64,
    /// `(atom index, value)` pairs for integer slices, in atom order.
    pub(crate) g: Vec<(usize, BigRational)>,
}

/// The canonical decomposition `Σ g_κ z_κ` of a dimension element: the
/// supports `z_κ` partition the atoms; on an integer slice `κ ≥ 1` the
/// values satisfy `κ − 1 < g ≤ κ`; slice 0 carries the zero function; an
/// aleph slice carries its cardinal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    algebra: Arc<AlgebraDesc>,
    slices: Vec<FormalSlice>,
}

impl FormalSum {
    pub(crate) fn from_slices(
        algebra: Arc<AlgebraDesc>,
        mut slices: Vec<FormalSlice>,
    ) -> Result<Self> {
        slices.retain(|s| s.mask != 0);
        slices.sort_by(|a, b| a.ix.cmp(&b.ix));
        let sum = FormalSum { algebra, slices };
        sum.validate()?;
        Ok(sum)
    }

    fn validate(&self) -> Result<()> {
        let full = if self.algebra.atom_count() == 64 {
            u64::MAX
        } else {
            (1u64 << self.algebra.atom_count()) - 1
        };
        let mut seen = 0u64;
        for slice in &self.slices {
            if slice.mask & seen != 0 {
                return Err(Error::MalformedFormalSum("slice supports overlap".into()));
            }
            seen |= slice.mask;
            match &slice.ix {
                SliceIx::Aleph(_) => {
                    if !slice.g.is_empty() {
                        return Err(Error::MalformedFormalSum(
                            "aleph slice carries finite values".into(),
                        ));
                    }
                }
                SliceIx::Fin(k) => {
                    if k.is_negative() {
                        return Err(Error::MalformedFormalSum("negative slice index".into()));
                    }
                    let mut mask_from_g = 0u64;
                    let lo = BigRational::from_integer(k - BigInt::one());
                    let hi = BigRational::from_integer(k.clone());
                    for (ix, q) in &slice.g {
                        mask_from_g |= 1 << ix;
                        if k.is_zero() {
                            if !q.is_zero() {
                                return Err(Error::MalformedFormalSum(
                                    "slice 0 must carry the zero function".into(),
                                ));
                            }
                        } else if q <= &lo || q > &hi {
                            return Err(Error::MalformedFormalSum(format!(
                                "value {} outside ({}, {}] in slice {}",
                                q, lo, hi, k
                            )));
                        }
                    }
                    if mask_from_g != slice.mask {
                        return Err(Error::MalformedFormalSum(
                            "integer slice values must cover exactly its support".into(),
                        ));
                    }
                }
            }
        }
        if seen != full {
            return Err(Error::MalformedFormalSum(
                "slice supports do not cover the center".into(),
            ));
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<AlgebraDesc> {
        &self.algebra
    }

    /// Slice indices in ascending order.
    pub fn indices(&self) -> Vec<SliceIx> {
        self.slices.iter().map(|s| s.ix.clone()).collect()
    }

    pub fn support(&self, ix: &SliceIx) -> Option<CentralProjection> {
        self.slices
            .iter()
            .find(|s| &s.ix == ix)
            .map(|s| CentralProjection::from_mask(&self.algebra, s.mask))
    }

    pub(crate) fn slice(&self, ix: &SliceIx) -> Option<&FormalSlice> {
        self.slices.iter().find(|s| &s.ix == ix)
    }

    /// Union of the supports of all slices with index ≤ `ix`.
    pub(crate) fn support_upto(&self, ix: &SliceIx) -> u64 {
        self.slices
            .iter()
            .take_while(|s| &s.ix <= ix)
            .fold(0u64, |m, s| m | s.mask)
    }

    /// Inverse of [`DimElement::to_formal_sum`].
    pub fn to_element(&self) -> Result<DimElement> {
        self.validate()?;
        let mut values = vec![ExtValue::zero(); self.algebra.atom_count()];
        for slice in &self.slices {
            match &slice.ix {
                SliceIx::Aleph(i) => {
                    for (ix, value) in values.iter_mut().enumerate() {
                        if slice.mask & (1 << ix) != 0 {
                            *value = ExtValue::Aleph(*i);
                        }
                    }
                }
                SliceIx::Fin(_) => {
                    for (ix, q) in &slice.g {
                        values[*ix] = ExtValue::Fin(q.clone());
                    }
                }
            }
        }
        Ok(DimElement::new_unchecked(self.algebra.clone(), values))
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, slice) in self.slices.iter().enumerate() {
            if n > 0 {
                write!(f, "; ")?;
            }
            write!(f, "slice {} {{ ", slice.ix)?;
            let mut first = true;
            for ix in 0..self.algebra.atom_count() {
                if slice.mask & (1 << ix) == 0 {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{}", self.algebra.atom(ix).name)?;
                if let Some((_, q)) = slice.g.iter().find(|(j, _)| *j == ix) {
                    write!(f, ": {}", q)?;
                }
            }
            write!(f, " }}")?;
        }
        Ok(())
    }
}
