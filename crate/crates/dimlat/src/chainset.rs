//! Subset descriptors for the value chain at a single central atom.
//!
//! A [`ChainSet`] is a union of finitely many rational intervals (possibly
//! unbounded above), finitely many isolated rational points, optionally all
//! nonnegative integers (`naturals`), and finitely many aleph levels. The
//! representation is kept canonical — intervals disjoint, sorted and
//! maximal, points not covered elsewhere — so that descriptor equality is
//! set equality. Chain sets describe infinite families for suprema/infima
//! and carry the results of closure computations.

use std::fmt;

use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::algebra::AtomType;
use crate::error::{Error, Result};
use crate::extval::{max_aleph, ExtValue};

/// A nonempty rational interval with open/closed endpoint flags.
/// `hi == None` means unbounded above (always open at infinity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    lo_closed: bool,
    hi: Option<BigRational>,
    hi_closed: bool,
}

impl Interval {
    pub fn bounded(
        lo: BigRational,
        lo_closed: bool,
        hi: BigRational,
        hi_closed: bool,
    ) -> Result<Self> {
        if lo.is_negative() {
            return Err(Error::NegativeValue(lo.to_string()));
        }
        if lo > hi {
            return Err(Error::InvalidInterval(format!("{} > {}", lo, hi)));
        }
        if lo == hi && !(lo_closed && hi_closed) {
            return Err(Error::InvalidInterval(format!(
                "half-open interval at {} is empty",
                lo
            )));
        }
        Ok(Interval {
            lo,
            lo_closed,
            hi: Some(hi),
            hi_closed,
        })
    }

    pub fn unbounded_above(lo: BigRational, lo_closed: bool) -> Result<Self> {
        if lo.is_negative() {
            return Err(Error::NegativeValue(lo.to_string()));
        }
        Ok(Interval {
            lo,
            lo_closed,
            hi: None,
            hi_closed: false,
        })
    }

    pub fn lo(&self) -> (&BigRational, bool) {
        (&self.lo, self.lo_closed)
    }

    pub fn hi(&self) -> Option<(&BigRational, bool)> {
        self.hi.as_ref().map(|h| (h, self.hi_closed))
    }

    pub fn is_unbounded(&self) -> bool {
        self.hi.is_none()
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        let above_lo = q > &self.lo || (q == &self.lo && self.lo_closed);
        let below_hi = match &self.hi {
            None => true,
            Some(h) => q < h || (q == h && self.hi_closed),
        };
        above_lo && below_hi
    }

    fn is_degenerate(&self) -> bool {
        self.hi.as_ref() == Some(&self.lo)
    }

    /// Whether `other` overlaps or touches `self` so that the union is a
    /// single interval; assumes `self.lo <= other.lo`.
    fn merges_with(&self, other: &Interval) -> bool {
        match &self.hi {
            None => true,
            Some(h) => other.lo < *h || (other.lo == *h && (self.hi_closed || other.lo_closed)),
        }
    }

    fn absorb(&mut self, other: Interval) {
        // assumes merges_with(other); lo stays (sorted closed-first)
        match (&self.hi, &other.hi) {
            (_, None) => {
                self.hi = None;
                self.hi_closed = false;
            }
            (None, _) => {}
            (Some(a), Some(b)) => {
                if b > a {
                    self.hi = other.hi;
                    self.hi_closed = other.hi_closed;
                } else if b == a {
                    self.hi_closed = self.hi_closed || other.hi_closed;
                }
            }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}, ", if self.lo_closed { "[" } else { "(" }, self.lo)?;
        match &self.hi {
            None => write!(f, "inf)"),
            Some(h) => write!(f, "{}{}", h, if self.hi_closed { "]" } else { ")" }),
        }
    }
}

/// A canonical subset of the value chain at one atom.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ChainSet {
    intervals: Vec<Interval>,
    points: Vec<BigRational>,
    naturals: bool,
    alephs: Vec<u32>,
}

/// Supremum of the finite part of a chain set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FinBound {
    Empty,
    Bounded(BigRational),
    Unbounded,
}

impl ChainSet {
    pub fn empty() -> Self {
        ChainSet::default()
    }

    /// Canonicalizing constructor.
    pub fn build(
        intervals: Vec<Interval>,
        points: Vec<BigRational>,
        naturals: bool,
        alephs: Vec<u32>,
    ) -> Result<Self> {
        let max = max_aleph();
        for &a in &alephs {
            if a > max {
                return Err(Error::AlephOutOfRange { level: a, max });
            }
        }
        for p in &points {
            if p.is_negative() {
                return Err(Error::NegativeValue(p.to_string()));
            }
        }
        let mut work = Vec::with_capacity(intervals.len());
        let mut pts = points;
        for iv in intervals {
            if iv.is_degenerate() {
                pts.push(iv.lo);
            } else {
                work.push(iv);
            }
        }
        let mut set = ChainSet {
            intervals: work,
            points: pts,
            naturals,
            alephs,
        };
        set.canonicalize();
        Ok(set)
    }

    pub fn from_points(points: Vec<BigRational>) -> Result<Self> {
        Self::build(Vec::new(), points, false, Vec::new())
    }

    /// Points and alephs collected from explicit values.
    pub fn from_values(values: &[ExtValue]) -> Result<Self> {
        let mut points = Vec::new();
        let mut alephs = Vec::new();
        for v in values {
            match v {
                ExtValue::Fin(q) => points.push(q.clone()),
                ExtValue::Aleph(i) => alephs.push(*i),
            }
        }
        Self::build(Vec::new(), points, false, alephs)
    }

    pub fn singleton(v: &ExtValue) -> Result<Self> {
        Self::from_values(std::slice::from_ref(v))
    }

    fn canonicalize(&mut self) {
        self.alephs.sort_unstable();
        self.alephs.dedup();
        if self.naturals {
            self.points
                .retain(|p| !(p.is_integer() && !p.is_negative()));
        }
        loop {
            // merge pass
            self.intervals
                .sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| b.lo_closed.cmp(&a.lo_closed)));
            let mut merged: Vec<Interval> = Vec::with_capacity(self.intervals.len());
            for iv in self.intervals.drain(..) {
                match merged.last_mut() {
                    Some(last) if last.merges_with(&iv) => last.absorb(iv),
                    _ => merged.push(iv),
                }
            }
            self.intervals = merged;

            // absorb points into intervals, closing open endpoints they touch
            let mut changed = false;
            let intervals = &mut self.intervals;
            self.points.retain(|p| {
                for iv in intervals.iter_mut() {
                    if iv.contains(p) {
                        return false;
                    }
                    if *p == iv.lo && !iv.lo_closed {
                        iv.lo_closed = true;
                        changed = true;
                        return false;
                    }
                    if iv.hi.as_ref() == Some(p) && !iv.hi_closed {
                        iv.hi_closed = true;
                        changed = true;
                        return false;
                    }
                }
                true
            });
            // the naturals close any open integer endpoints they meet
            if self.naturals {
                for iv in intervals.iter_mut() {
                    if !iv.lo_closed && iv.lo.is_integer() && !iv.lo.is_negative() {
                        iv.lo_closed = true;
                        changed = true;
                    }
                    if !iv.hi_closed {
                        if let Some(h) = &iv.hi {
                            if h.is_integer() && !h.is_negative() {
                                iv.hi_closed = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        self.points.sort();
        self.points.dedup();
        if self.naturals
            && self
                .intervals
                .iter()
                .any(|iv| iv.hi.is_none() && iv.lo.is_zero() && iv.lo_closed)
        {
            self.naturals = false;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
            && self.points.is_empty()
            && !self.naturals
            && self.alephs.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn points(&self) -> &[BigRational] {
        &self.points
    }

    pub fn has_naturals(&self) -> bool {
        self.naturals
    }

    pub fn alephs(&self) -> &[u32] {
        &self.alephs
    }

    pub fn contains(&self, v: &ExtValue) -> bool {
        match v {
            ExtValue::Fin(q) => {
                (self.naturals && q.is_integer() && !q.is_negative())
                    || self.points.binary_search(q).is_ok()
                    || self.intervals.iter().any(|iv| iv.contains(q))
            }
            ExtValue::Aleph(i) => self.alephs.binary_search(i).is_ok(),
        }
    }

    /// Supremum of the finite part: empty, a rational bound (attained or
    /// not), or unbounded above.
    pub fn fin_bound(&self) -> FinBound {
        if self.naturals || self.intervals.iter().any(Interval::is_unbounded) {
            return FinBound::Unbounded;
        }
        let mut best: Option<&BigRational> = None;
        for iv in &self.intervals {
            let h = iv.hi.as_ref().expect("bounded");
            if best.is_none_or(|b| h > b) {
                best = Some(h);
            }
        }
        if let Some(p) = self.points.last() {
            if best.is_none_or(|b| p > b) {
                best = Some(p);
            }
        }
        match best {
            None => FinBound::Empty,
            Some(b) => FinBound::Bounded(b.clone()),
        }
    }

    fn has_fin_part(&self) -> bool {
        !matches!(self.fin_bound(), FinBound::Empty)
    }

    /// Least upper bound in the chain. The empty set has lub `Fin(0)`, the
    /// bottom element; an unbounded set of finite values is first exceeded
    /// at ℵ₀.
    pub fn lub(&self) -> ExtValue {
        let fin = match self.fin_bound() {
            FinBound::Empty => None,
            FinBound::Bounded(b) => Some(ExtValue::Fin(b)),
            FinBound::Unbounded => Some(ExtValue::Aleph(0)),
        };
        let al = self.alephs.last().map(|i| ExtValue::Aleph(*i));
        match (fin, al) {
            (None, None) => ExtValue::zero(),
            (Some(v), None) | (None, Some(v)) => v,
            (Some(a), Some(b)) => a.max(b),
        }
    }

    /// Greatest lower bound in the chain; errors on the empty set.
    pub fn glb(&self) -> Result<ExtValue> {
        if self.is_empty() {
            return Err(Error::EmptyGlb);
        }
        if self.has_fin_part() {
            let mut best: Option<BigRational> = None;
            if self.naturals {
                best = Some(BigRational::zero());
            }
            for iv in &self.intervals {
                if best.as_ref().is_none_or(|b| &iv.lo < b) {
                    best = Some(iv.lo.clone());
                }
            }
            if let Some(p) = self.points.first() {
                if best.as_ref().is_none_or(|b| p < b) {
                    best = Some(p.clone());
                }
            }
            Ok(ExtValue::Fin(best.expect("nonempty finite part")))
        } else {
            Ok(ExtValue::Aleph(self.alephs[0]))
        }
    }

    /// Closure of the real part in the order topology: intervals gain
    /// their finite endpoints. Points, naturals and alephs are kept.
    pub fn topological_closure(&self) -> ChainSet {
        let intervals = self
            .intervals
            .iter()
            .map(|iv| Interval {
                lo: iv.lo.clone(),
                lo_closed: true,
                hi: iv.hi.clone(),
                hi_closed: iv.hi.is_some(),
            })
            .collect();
        let mut out = ChainSet {
            intervals,
            points: self.points.clone(),
            naturals: self.naturals,
            alephs: self.alephs.clone(),
        };
        out.canonicalize();
        out
    }

    /// Every admissible value of a projection class on an atom of the
    /// given type.
    pub fn projection_domain(ty: &AtomType) -> Self {
        let mut set = match ty {
            AtomType::IFin(n) => {
                let order = BigRational::from_integer((*n).into());
                let points = (0..=*n)
                    .map(|k| BigRational::from_integer(k.into()) / order.clone())
                    .collect();
                ChainSet {
                    intervals: Vec::new(),
                    points,
                    naturals: false,
                    alephs: Vec::new(),
                }
            }
            AtomType::II1 => ChainSet {
                intervals: vec![Interval {
                    lo: BigRational::zero(),
                    lo_closed: true,
                    hi: Some(BigRational::one()),
                    hi_closed: true,
                }],
                points: Vec::new(),
                naturals: false,
                alephs: Vec::new(),
            },
            AtomType::IInf(k) => ChainSet {
                intervals: Vec::new(),
                points: Vec::new(),
                naturals: true,
                alephs: (0..=*k).collect(),
            },
            AtomType::IIInf(k) => ChainSet {
                intervals: vec![Interval {
                    lo: BigRational::zero(),
                    lo_closed: true,
                    hi: None,
                    hi_closed: false,
                }],
                points: Vec::new(),
                naturals: false,
                alephs: (0..=*k).collect(),
            },
            AtomType::III(k) => ChainSet {
                intervals: Vec::new(),
                points: vec![BigRational::zero()],
                naturals: false,
                alephs: (0..=*k).collect(),
            },
        };
        set.canonicalize();
        set
    }

    /// Check that this set only describes values admissible for positive
    /// classes on the given atom type.
    pub fn fits_cone_domain(&self, ty: &AtomType) -> Result<()> {
        let bad = |reason: String| {
            Err(Error::DomainViolation {
                atom: String::new(),
                reason,
            })
        };
        match ty {
            AtomType::IFin(_) | AtomType::II1 => {
                if !self.alephs.is_empty() {
                    return bad(format!("aleph values are not admissible on a {} atom", ty));
                }
            }
            AtomType::IInf(k) | AtomType::IIInf(k) => {
                if let Some(&top) = self.alephs.last() {
                    if top > *k {
                        return bad(format!(
                            "aleph {} exceeds the homogeneity aleph {} of this atom",
                            top, k
                        ));
                    }
                }
            }
            AtomType::III(k) => {
                if !self.intervals.is_empty() || self.naturals {
                    return bad("only 0 and alephs are admissible on a type III atom".into());
                }
                if self.points.iter().any(|p| !p.is_zero()) {
                    return bad("only 0 and alephs are admissible on a type III atom".into());
                }
                if let Some(&top) = self.alephs.last() {
                    if top > *k {
                        return bad(format!(
                            "aleph {} exceeds the homogeneity aleph {} of this atom",
                            top, k
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Check that this set only describes projection-class values on the
    /// given atom type.
    pub fn fits_projection_domain(&self, ty: &AtomType) -> Result<()> {
        self.fits_cone_domain(ty)?;
        let bad = |reason: String| {
            Err(Error::DomainViolation {
                atom: String::new(),
                reason,
            })
        };
        match ty {
            AtomType::IFin(n) => {
                if !self.intervals.is_empty() || self.naturals {
                    return bad(format!("values on {} form the discrete grid k/{}", ty, n));
                }
                let order = BigRational::from_integer((*n).into());
                for p in &self.points {
                    let scaled = p * &order;
                    if !scaled.is_integer() || p > &BigRational::one() {
                        return bad(format!("{} is not of the form k/{} with k ≤ {}", p, n, n));
                    }
                }
            }
            AtomType::II1 => {
                if self.naturals {
                    return bad("projection classes on II_1 lie in [0, 1]".into());
                }
                let one = BigRational::one();
                for p in &self.points {
                    if p > &one {
                        return bad(format!("{} exceeds the unit trace 1", p));
                    }
                }
                for iv in &self.intervals {
                    match &iv.hi {
                        None => return bad("projection classes on II_1 lie in [0, 1]".into()),
                        Some(h) => {
                            if h > &one {
                                return bad(format!("interval {} exceeds the unit trace 1", iv));
                            }
                        }
                    }
                }
            }
            AtomType::IInf(_) => {
                if !self.intervals.is_empty() {
                    return bad("finite projection values on I_inf are integers".into());
                }
                for p in &self.points {
                    if !p.is_integer() {
                        return bad(format!("{} is not an integer", p));
                    }
                }
            }
            AtomType::IIInf(_) | AtomType::III(_) => {}
        }
        Ok(())
    }
}

impl fmt::Display for ChainSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if first {
                first = false;
                Ok(())
            } else {
                write!(f, " ")
            }
        };
        for iv in &self.intervals {
            sep(f)?;
            write!(f, "{}", iv)?;
        }
        if !self.points.is_empty() {
            sep(f)?;
            write!(f, "{{")?;
            for (i, p) in self.points.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, "}}")?;
        }
        if self.naturals {
            sep(f)?;
            write!(f, "naturals")?;
        }
        for a in &self.alephs {
            sep(f)?;
            write!(f, "aleph {}", a)?;
        }
        Ok(())
    }
}

/// Number of points needed to list the integers `0..=bound`; errors when
/// materialization would be unreasonably large.
pub(crate) fn integer_points_upto(bound: &BigRational) -> Result<Vec<BigRational>> {
    let floor = bound.floor().to_integer();
    let count = floor
        .to_u64()
        .filter(|c| *c <= 65_536)
        .ok_or_else(|| Error::ClosureTooLarge(floor.to_string()))?;
    Ok((0..=count)
        .map(|k| BigRational::from_integer(k.into()))
        .collect())
}
