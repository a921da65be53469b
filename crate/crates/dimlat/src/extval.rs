//! Exact values on the chain `[0, ∞) ∩ ℚ ∪ {ℵ₀, ℵ₁, …}`.
//!
//! This is cardinal arithmetic incorporating the nonnegative rationals:
//! every finite value sits below every aleph, finite values add as
//! rationals, a finite value is absorbed by any aleph, and two alephs add
//! to the larger one. Rationals are kept exact so that the order is a
//! genuine total order (floating point would break antisymmetry).

use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use num::{BigRational, Signed, Zero};

use crate::error::{Error, Result};

/// Default bound on representable aleph levels.
pub const DEFAULT_MAX_ALEPH: u32 = 8;

static MAX_ALEPH: AtomicU32 = AtomicU32::new(DEFAULT_MAX_ALEPH);

/// Largest aleph level currently accepted by validating constructors.
pub fn max_aleph() -> u32 {
    MAX_ALEPH.load(AtomicOrdering::Relaxed)
}

/// Reconfigure the aleph bound (the CLI exposes this as `--max-aleph`).
pub fn set_max_aleph(k: u32) {
    MAX_ALEPH.store(k, AtomicOrdering::Relaxed);
}

/// One point of the value chain: an exact nonnegative rational or an
/// aleph. `Aleph(0)` denotes ℵ₀.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtValue {
    Fin(BigRational),
    Aleph(u32),
}

impl ExtValue {
    /// Validating constructor for finite values; rejects negatives.
    pub fn from_rational(q: BigRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::NegativeValue(q.to_string()));
        }
        Ok(ExtValue::Fin(q))
    }

    /// Validating constructor for alephs; level must not exceed the
    /// configured maximum.
    pub fn aleph(level: u32) -> Result<Self> {
        let max = max_aleph();
        if level > max {
            return Err(Error::AlephOutOfRange { level, max });
        }
        Ok(ExtValue::Aleph(level))
    }

    /// Convenience constructor `numer/denom`.
    ///
    /// Panics on a zero denominator or a negative value; intended for
    /// literals in tests and examples.
    pub fn fin(numer: i64, denom: i64) -> Self {
        let q = BigRational::new(numer.into(), denom.into());
        Self::from_rational(q).expect("negative literal")
    }

    pub fn fin_int(n: u64) -> Self {
        ExtValue::Fin(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        ExtValue::Fin(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtValue::Fin(q) if q.is_zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtValue::Fin(_))
    }

    pub fn is_aleph(&self) -> bool {
        matches!(self, ExtValue::Aleph(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtValue::Fin(q) => Some(q),
            ExtValue::Aleph(_) => None,
        }
    }

    pub fn aleph_level(&self) -> Option<u32> {
        match self {
            ExtValue::Fin(_) => None,
            ExtValue::Aleph(i) => Some(*i),
        }
    }

    /// Chain addition: rational sum on finite values, absorption into
    /// alephs, maximum of two alephs. Commutative and associative with
    /// `Fin(0)` neutral.
    pub fn add(&self, other: &ExtValue) -> ExtValue {
        match (self, other) {
            (ExtValue::Fin(a), ExtValue::Fin(b)) => ExtValue::Fin(a + b),
            (ExtValue::Aleph(i), ExtValue::Fin(_)) | (ExtValue::Fin(_), ExtValue::Aleph(i)) => {
                ExtValue::Aleph(*i)
            }
            (ExtValue::Aleph(i), ExtValue::Aleph(j)) => ExtValue::Aleph(*i.max(j)),
        }
    }

    /// Scaling by a strictly positive rational: multiplies finite values
    /// and fixes every aleph. Rejects factors ≤ 0; annihilation by zero
    /// is the separate [`ExtValue::zero_scale`].
    pub fn scale(&self, factor: &BigRational) -> Result<ExtValue> {
        if factor.is_negative() || factor.is_zero() {
            return Err(Error::NonPositiveScale(factor.to_string()));
        }
        Ok(match self {
            ExtValue::Fin(q) => ExtValue::Fin(q * factor),
            ExtValue::Aleph(i) => ExtValue::Aleph(*i),
        })
    }

    /// Total annihilation: scaling by zero sends every value to `Fin(0)`.
    pub fn zero_scale(&self) -> ExtValue {
        ExtValue::zero()
    }
}

impl Ord for ExtValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtValue::Fin(a), ExtValue::Fin(b)) => a.cmp(b),
            (ExtValue::Fin(_), ExtValue::Aleph(_)) => Ordering::Less,
            (ExtValue::Aleph(_), ExtValue::Fin(_)) => Ordering::Greater,
            (ExtValue::Aleph(i), ExtValue::Aleph(j)) => i.cmp(j),
        }
    }
}

impl PartialOrd for ExtValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Fin(q) => write!(f, "{}", q),
            ExtValue::Aleph(i) => write!(f, "aleph {}", i),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn al(i: u32) -> ExtValue {
        ExtValue::Aleph(i)
    }

    #[test]
    fn compare_is_the_chain_order() {
        assert_eq!(
            ExtValue::fin(3, 2).cmp(&ExtValue::fin(3, 2)),
            Ordering::Equal
        );
        assert_eq!(ExtValue::fin_int(1_000_000_000).cmp(&al(0)), Ordering::Less);
        assert_eq!(al(1).cmp(&al(0)), Ordering::Greater);
        assert!(ExtValue::zero() < ExtValue::fin(1, 2));
    }

    #[test]
    fn add_examples() {
        assert_eq!(
            ExtValue::fin(1, 2).add(&ExtValue::fin(1, 3)),
            ExtValue::fin(5, 6)
        );
        assert_eq!(ExtValue::fin_int(7).add(&al(0)), al(0));
        assert_eq!(al(0).add(&al(2)), al(2));
    }

    #[test]
    fn scale_examples() {
        let three = BigRational::from_integer(3.into());
        assert_eq!(
            ExtValue::fin(2, 3).scale(&three).unwrap(),
            ExtValue::fin_int(2)
        );
        let seventh = BigRational::new(1.into(), 7.into());
        assert_eq!(al(1).scale(&seventh).unwrap(), al(1));
        let one = BigRational::from_integer(1.into());
        assert_eq!(ExtValue::zero().scale(&one).unwrap(), ExtValue::zero());
    }

    #[test]
    fn scale_rejects_nonpositive_factors() {
        let neg = BigRational::from_integer((-2).into());
        assert!(matches!(
            ExtValue::fin_int(1).scale(&neg),
            Err(Error::NonPositiveScale(_))
        ));
        assert!(ExtValue::fin_int(1).scale(&BigRational::zero()).is_err());
        assert_eq!(ExtValue::fin_int(5).zero_scale(), ExtValue::zero());
        assert_eq!(al(2).zero_scale(), ExtValue::zero());
    }

    #[test]
    fn constructors_validate() {
        assert!(ExtValue::from_rational(BigRational::from_integer((-1).into())).is_err());
        assert!(ExtValue::aleph(max_aleph()).is_ok());
        assert!(ExtValue::aleph(max_aleph() + 1).is_err());
    }

    #[test]
    fn absorption_is_exhaustive_on_small_grid() {
        for num in 0..=24i64 {
            for den in 1..=12i64 {
                for level in 0..=3u32 {
                    let q = ExtValue::fin(num, den);
                    assert_eq!(q.add(&al(level)), al(level));
                    assert_eq!(al(level).add(&q), al(level));
                }
            }
        }
    }

    fn arb_value() -> impl Strategy<Value = ExtValue> {
        prop_oneof![
            (0u64..200, 1u64..20)
                .prop_map(|(n, d)| { ExtValue::Fin(BigRational::new(n.into(), d.into())) }),
            (0u32..4).prop_map(ExtValue::Aleph),
        ]
    }

    proptest! {
        #[test]
        fn add_is_commutative_and_associative(a in arb_value(), b in arb_value(), c in arb_value()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        }

        #[test]
        fn zero_is_neutral(a in arb_value()) {
            prop_assert_eq!(a.add(&ExtValue::zero()), a.clone());
        }

        #[test]
        fn order_is_total_and_transitive(a in arb_value(), b in arb_value(), c in arb_value()) {
            // antisymmetry
            if a <= b && b <= a {
                prop_assert_eq!(a.clone(), b.clone());
            }
            // transitivity
            if a <= b && b <= c {
                prop_assert!(a <= c);
            }
            // totality
            prop_assert!(a <= b || b <= a);
        }

        #[test]
        fn add_is_monotone(a in arb_value(), b in arb_value(), c in arb_value()) {
            if a <= b {
                prop_assert!(a.add(&c) <= b.add(&c));
            }
        }

        #[test]
        fn scale_distributes_over_finite_sums(
            n1 in 0u64..50, d1 in 1u64..10,
            n2 in 0u64..50, d2 in 1u64..10,
            ln in 1u64..20, ld in 1u64..10,
        ) {
            let a = ExtValue::Fin(BigRational::new(n1.into(), d1.into()));
            let b = ExtValue::Fin(BigRational::new(n2.into(), d2.into()));
            let lambda = BigRational::new(ln.into(), ld.into());
            let lhs = a.add(&b).scale(&lambda).unwrap();
            let rhs = a.scale(&lambda).unwrap().add(&b.scale(&lambda).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
