use std::fmt::Debug;

use super::rat::Rat;

/// Commutative ring interface shared by every coefficient type, so that the
/// polynomial representation and its operators are written once.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn from_rat(r: Rat) -> Self;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    /// Sum of many terms. Fraction types override this to bring everything to
    /// a common denominator once instead of reducing after every addition.
    fn sum(items: Vec<Self>) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => Self::zero(),
            Some(first) => it.fold(first, |acc, x| acc.add(&x)),
        }
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, o: &Self) -> Self {
        self.mul(&o.inv().expect("division by zero"))
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat::ZERO
    }
    fn one() -> Self {
        Rat::ONE
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Rat::add(self, o)
    }
    fn neg(&self) -> Self {
        Rat::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        Rat::mul(self, o)
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
}

impl Field for Rat {
    fn inv(&self) -> Option<Self> {
        Rat::inv(self)
    }
}
