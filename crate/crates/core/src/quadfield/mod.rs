//! Exact arithmetic in an imaginary quadratic field `k = Q(sqrt(d))`: field
//! elements, integral and fractional ideals, finite places and their residue
//! fields.

mod ideal;
mod place;
mod residue;

pub use ideal::{FractionalIdeal, IntegralIdeal};
pub use place::{split_prime, sqrt_mod, Place, PlaceKey, PlaceKind};
pub use residue::{reduce_mod_place, residue_pow, ResidueElement};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An imaginary quadratic field fixed by its squarefree radicand `d < 0`.
///
/// The discriminant is `d` when `d = 1 mod 4` and `4d` otherwise; the ring of
/// integers is `Z[omega]` with `omega = (1 + sqrt(d))/2` resp. `sqrt(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadField {
    d: i64,
    disc: i64,
}

impl QuadField {
    pub fn new(d: i64) -> Result<Self> {
        if d >= 0 {
            return Err(Error::RadicandNotNegative(d));
        }
        if !is_squarefree(-d) {
            return Err(Error::RadicandNotSquarefree(d));
        }
        let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
        Ok(QuadField { d, disc })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn discriminant(&self) -> i64 {
        self.disc
    }

    /// Whether `d = 1 mod 4`, i.e. the ring of integers is `Z[(1+sqrt d)/2]`.
    pub fn d_is_one_mod_four(&self) -> bool {
        self.disc == self.d
    }

    pub fn omega(&self) -> FieldElement {
        if self.d_is_one_mod_four() {
            FieldElement::new(*self, BigInt::one(), BigInt::one(), BigInt::from(2))
        } else {
            FieldElement::new(*self, BigInt::zero(), BigInt::one(), BigInt::one())
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::new(*self, BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::new(*self, BigInt::one(), BigInt::zero(), BigInt::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement::new(*self, BigInt::from(n), BigInt::zero(), BigInt::one())
    }
}

fn is_squarefree(mut n: i64) -> bool {
    debug_assert!(n > 0);
    if n % 4 == 0 {
        return false;
    }
    let mut p = 2i64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// The element `(a + b sqrt(d)) / den` in canonical form: `den > 0` and
/// `gcd(a, b, den) = 1`. Membership in the ring of integers is a query
/// (`is_integral`), not an invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: QuadField,
    a: BigInt,
    b: BigInt,
    den: BigInt,
}

impl FieldElement {
    pub fn new(field: QuadField, a: BigInt, b: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut e = FieldElement { field, a, b, den };
        e.normalize();
        e
    }

    pub fn from_parts(field: QuadField, a: i64, b: i64, den: i64) -> Self {
        Self::new(field, BigInt::from(a), BigInt::from(b), BigInt::from(den))
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.a = -&self.a;
            self.b = -&self.b;
            self.den = -&self.den;
        }
        let g = self.a.gcd(&self.b).gcd(&self.den);
        if g > BigInt::one() {
            self.a = &self.a / &g;
            self.b = &self.b / &g;
            self.den = &self.den / &g;
        }
    }

    pub fn field(&self) -> QuadField {
        self.field
    }

    pub fn coeff_a(&self) -> &BigInt {
        &self.a
    }

    pub fn coeff_b(&self) -> &BigInt {
        &self.b
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        assert_eq!(self.field, other.field, "mixed fields");
        FieldElement::new(
            self.field,
            &self.a * &other.den + &other.a * &self.den,
            &self.b * &other.den + &other.b * &self.den,
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement::new(self.field, -&self.a, -&self.b, self.den.clone())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        assert_eq!(self.field, other.field, "mixed fields");
        let d = BigInt::from(self.field.d);
        FieldElement::new(
            self.field,
            &self.a * &other.a + &d * &self.b * &other.b,
            &self.a * &other.b + &self.b * &other.a,
            &self.den * &other.den,
        )
    }

    pub fn conj(&self) -> FieldElement {
        FieldElement::new(self.field, self.a.clone(), -&self.b, self.den.clone())
    }

    /// The norm `(a^2 - d b^2) / den^2`, a nonnegative rational, zero only at 0.
    pub fn norm(&self) -> BigRational {
        let d = BigInt::from(self.field.d);
        BigRational::new(&self.a * &self.a - d * &self.b * &self.b, &self.den * &self.den)
    }

    /// The trace `2a / den`.
    pub fn trace(&self) -> BigRational {
        BigRational::new(BigInt::from(2) * &self.a, self.den.clone())
    }

    pub fn scale(&self, n: &BigInt) -> FieldElement {
        FieldElement::new(self.field, &self.a * n, &self.b * n, self.den.clone())
    }

    pub fn div_int(&self, n: &BigInt) -> FieldElement {
        assert!(!n.is_zero());
        FieldElement::new(self.field, self.a.clone(), self.b.clone(), &self.den * n)
    }

    /// Exact division in `k`; `None` when `other` is zero.
    pub fn div(&self, other: &FieldElement) -> Option<FieldElement> {
        if other.is_zero() {
            return None;
        }
        let num = self.mul(&other.conj());
        let n = other.norm();
        // x / y = x * conj(y) / N(y); N(y) = n.numer()/n.denom() > 0.
        Some(FieldElement::new(
            self.field,
            &num.a * n.denom(),
            &num.b * n.denom(),
            &num.den * n.numer(),
        ))
    }

    /// Coordinates `(u, v)` with `x = u + v omega`, when `x` is integral.
    pub fn omega_coords(&self) -> Option<(BigInt, BigInt)> {
        if self.field.d_is_one_mod_four() {
            // sqrt(d) = 2 omega - 1, so x = (a - b)/den + (2b/den) omega.
            let u = &self.a - &self.b;
            let v = BigInt::from(2) * &self.b;
            let (qu, ru) = u.div_rem(&self.den);
            let (qv, rv) = v.div_rem(&self.den);
            if ru.is_zero() && rv.is_zero() {
                Some((qu, qv))
            } else {
                None
            }
        } else {
            let (qu, ru) = self.a.div_rem(&self.den);
            let (qv, rv) = self.b.div_rem(&self.den);
            if ru.is_zero() && rv.is_zero() {
                Some((qu, qv))
            } else {
                None
            }
        }
    }

    pub fn from_omega_coords(field: QuadField, u: &BigInt, v: &BigInt) -> FieldElement {
        if field.d_is_one_mod_four() {
            // u + v(1 + sqrt d)/2 = (2u + v + v sqrt d)/2
            FieldElement::new(field, BigInt::from(2) * u + v, v.clone(), BigInt::from(2))
        } else {
            FieldElement::new(field, u.clone(), v.clone(), BigInt::one())
        }
    }

    pub fn is_integral(&self) -> bool {
        self.omega_coords().is_some()
    }

    pub fn is_unit(&self) -> bool {
        self.is_integral() && self.norm() == BigRational::one()
    }

    /// Whether `self` and `other` generate the same ideal.
    pub fn is_associate_of(&self, other: &FieldElement) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        match self.div(other) {
            Some(q) => q.is_unit(),
            None => false,
        }
    }

    /// Sign-canonical associate: real part positive, or zero real part and
    /// positive sqrt(d) part. For `d < -4` this fixes the associate uniquely.
    pub fn canonical_sign(&self) -> FieldElement {
        if self.a.is_negative() || (self.a.is_zero() && self.b.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let core = if self.b.is_zero() {
            format!("{}", self.a)
        } else if self.a.is_zero() {
            format!("{}*sqrt({})", self.b, self.field.d)
        } else if self.b.is_negative() {
            format!("{}{}*sqrt({})", self.a, self.b, self.field.d)
        } else {
            format!("{}+{}*sqrt({})", self.a, self.b, self.field.d)
        };
        if self.den.is_one() {
            write!(f, "{core}")
        } else {
            write!(f, "({core})/{}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k23() -> QuadField {
        QuadField::new(-23).unwrap()
    }

    #[test]
    fn field_construction() {
        let k = k23();
        assert_eq!(k.discriminant(), -23);
        assert!(k.d_is_one_mod_four());

        let k1 = QuadField::new(-1).unwrap();
        assert_eq!(k1.discriminant(), -4);

        assert_eq!(QuadField::new(-4), Err(Error::RadicandNotSquarefree(-4)));
        assert_eq!(QuadField::new(5), Err(Error::RadicandNotNegative(5)));
        assert_eq!(QuadField::new(0), Err(Error::RadicandNotNegative(0)));
        assert_eq!(QuadField::new(-12), Err(Error::RadicandNotSquarefree(-12)));
    }

    #[test]
    fn norms_of_named_elements() {
        let k = k23();
        // -2 - sqrt(-23) has norm 4 + 23 = 27
        let a1 = FieldElement::from_parts(k, -2, -1, 1);
        assert_eq!(a1.norm(), BigRational::from(BigInt::from(27)));
        // -2 + 3 sqrt(-23) has norm 4 + 9*23 = 211
        let pi = FieldElement::from_parts(k, -2, 3, 1);
        assert_eq!(pi.norm(), BigRational::from(BigInt::from(211)));
    }

    #[test]
    fn norm_is_multiplicative() {
        let k = k23();
        let x = FieldElement::from_parts(k, 3, -5, 2);
        let y = FieldElement::from_parts(k, -7, 2, 3);
        assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn omega_coords_round_trip() {
        let k = k23();
        let x = FieldElement::from_omega_coords(k, &BigInt::from(4), &BigInt::from(1));
        // 4 + omega = 4 + (1+sqrt(-23))/2 = (9 + sqrt(-23))/2
        assert_eq!(x, FieldElement::from_parts(k, 9, 1, 2));
        assert_eq!(x.omega_coords(), Some((BigInt::from(4), BigInt::from(1))));
        assert!(x.is_integral());
        assert!(!FieldElement::from_parts(k, 1, 0, 3).is_integral());
    }

    #[test]
    fn associates_and_canonical_sign() {
        let k = k23();
        let x = FieldElement::from_parts(k, -2, -1, 1);
        assert!(x.is_associate_of(&x.neg()));
        assert!(!x.is_associate_of(&x.conj()));
        assert_eq!(x.canonical_sign(), FieldElement::from_parts(k, 2, 1, 1));
    }

    #[test]
    fn torsion_units_of_gauss_and_eisenstein() {
        // Z[i]: i is a unit; Z[omega_3]: omega is a unit.
        let ki = QuadField::new(-1).unwrap();
        let i = FieldElement::from_parts(ki, 0, 1, 1);
        assert!(i.is_unit());
        let ke = QuadField::new(-3).unwrap();
        assert!(ke.omega().is_unit());
        let one = ke.one();
        assert!(one.is_associate_of(&ke.omega()));
    }

    proptest! {
        #[test]
        fn conj_is_an_involution(a in -50i64..50, b in -50i64..50, den in 1i64..20) {
            let x = FieldElement::from_parts(k23(), a, b, den);
            prop_assert_eq!(x.conj().conj(), x);
        }

        #[test]
        fn division_inverts_multiplication(a in -30i64..30, b in -30i64..30,
                                           c in -30i64..30, e in -30i64..30) {
            let x = FieldElement::from_parts(k23(), a, b, 1);
            let y = FieldElement::from_parts(k23(), c, e, 1);
            prop_assume!(!y.is_zero());
            prop_assert_eq!(x.mul(&y).div(&y).unwrap(), x);
        }
    }
}
