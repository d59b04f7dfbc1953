//! Residue fields at finite places and the reduction homomorphism.
//!
//! Degree-one places reduce into `F_ell`; inert places into
//! `F_{ell^2} = F_ell[s]/(s^2 - Dbar)`, where `Dbar` is the discriminant mod
//! `ell` (automatically a nonresidue at inert places).

use super::{FieldElement, Place, PlaceKind};
use crate::error::{Error, Result};
use crate::modp::{add_mod, inv_mod, mul_mod, sub_mod};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::fmt;

/// `c0 + c1 s` in the residue field at a place; `c1 = 0` in degree one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueElement {
    ell: u64,
    f: u8,
    dbar: u64,
    pub c0: u64,
    pub c1: u64,
}

impl ResidueElement {
    fn ctx(place: &Place) -> (u64, u8, u64) {
        let ell = place.ell();
        let dbar = (place.field().discriminant().rem_euclid(ell as i64)) as u64;
        (ell, place.f(), dbar)
    }

    pub fn new(place: &Place, c0: u64, c1: u64) -> Self {
        let (ell, f, dbar) = Self::ctx(place);
        assert!(f == 2 || c1 % ell == 0, "degree-one residues are scalars");
        ResidueElement {
            ell,
            f,
            dbar,
            c0: c0 % ell,
            c1: c1 % ell,
        }
    }

    pub fn one_at(place: &Place) -> Self {
        Self::new(place, 1, 0)
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    pub fn is_one(&self) -> bool {
        self.c0 == 1 && self.c1 == 0
    }

    pub fn mul(&self, other: &ResidueElement) -> ResidueElement {
        assert_eq!((self.ell, self.f, self.dbar), (other.ell, other.f, other.dbar));
        let m = self.ell;
        let c0 = add_mod(
            mul_mod(self.c0, other.c0, m),
            mul_mod(mul_mod(self.c1, other.c1, m), self.dbar, m),
            m,
        );
        let c1 = add_mod(mul_mod(self.c0, other.c1, m), mul_mod(self.c1, other.c0, m), m);
        ResidueElement { c0, c1, ..*self }
    }

    pub fn add(&self, other: &ResidueElement) -> ResidueElement {
        assert_eq!((self.ell, self.f, self.dbar), (other.ell, other.f, other.dbar));
        ResidueElement {
            c0: add_mod(self.c0, other.c0, self.ell),
            c1: add_mod(self.c1, other.c1, self.ell),
            ..*self
        }
    }

    pub fn pow(&self, mut exp: u128) -> ResidueElement {
        let mut base = *self;
        let mut acc = ResidueElement {
            c0: 1,
            c1: 0,
            ..*self
        };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1 == 0 {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{}+{}s", self.c0, self.c1)
        }
    }
}

/// The reduction `O_k -> O_k/v`, extended to elements whose denominator is
/// invertible mod `ell`.
pub fn reduce_mod_place(x: &FieldElement, v: &Place) -> Result<ResidueElement> {
    let ell = v.ell();
    let big_ell = BigInt::from(ell);
    let to_u64 = |n: &BigInt| n.mod_floor(&big_ell).to_u64().unwrap();
    let den = to_u64(x.denominator());
    let den_inv = inv_mod(den, ell).ok_or(Error::DenominatorNotInvertible { ell })?;
    let a = to_u64(x.coeff_a());
    let b = to_u64(x.coeff_b());
    match v.kind() {
        PlaceKind::Inert => {
            // sqrt(d) = s (odd D) or s/2 (D = 4d), with s^2 = Dbar.
            let scale = if v.field().d_is_one_mod_four() {
                1
            } else {
                inv_mod(2, ell).expect("odd ell at inert place")
            };
            Ok(ResidueElement::new(
                v,
                mul_mod(a, den_inv, ell),
                mul_mod(mul_mod(b, scale, ell), den_inv, ell),
            ))
        }
        _ => {
            let r = v.paper_root().expect("degree-one place has a root");
            let c0 = mul_mod(add_mod(a, mul_mod(b, r, ell), ell), den_inv, ell);
            Ok(ResidueElement::new(v, c0, 0))
        }
    }
}

/// `r^e` by square-and-multiply.
pub fn residue_pow(r: &ResidueElement, e: u128) -> ResidueElement {
    r.pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{split_prime, QuadField};

    fn k23() -> QuadField {
        QuadField::new(-23).unwrap()
    }

    fn v0() -> Place {
        Place::from_paper_root(k23(), 13, 4).unwrap()
    }

    #[test]
    fn reduction_examples() {
        // a1 = -2 - sqrt(-23) reduces to -2 - 4 = 7 mod 13.
        let a1 = FieldElement::from_parts(k23(), -2, -1, 1);
        let r = reduce_mod_place(&a1, &v0()).unwrap();
        assert_eq!((r.c0, r.c1), (7, 0));

        let one = k23().one();
        assert!(reduce_mod_place(&one, &v0()).unwrap().is_one());

        // Denominator divisible by ell is rejected.
        let bad = FieldElement::from_parts(k23(), 1, 1, 13);
        assert_eq!(
            reduce_mod_place(&bad, &v0()),
            Err(Error::DenominatorNotInvertible { ell: 13 })
        );
    }

    #[test]
    fn residue_pow_examples() {
        let r = ResidueElement::new(&v0(), 7, 0);
        assert_eq!(residue_pow(&r, 4).c0, 9);
        assert!(residue_pow(&r, 0).is_one());

        let v2 = &split_prime(k23(), 67).unwrap()[0];
        let r = ResidueElement::new(v2, 37, 0);
        assert!(residue_pow(&r, 3).is_one());
    }

    #[test]
    fn reduction_is_a_ring_homomorphism() {
        let k = k23();
        for v in [v0(), split_prime(k, 67).unwrap()[0]] {
            for (a, b, c, e) in [(3i64, 5i64, -2i64, 7i64), (-11, 2, 9, -4), (1, -8, 6, 6)] {
                let x = FieldElement::from_parts(k, a, b, 1);
                let y = FieldElement::from_parts(k, c, e, 1);
                let rx = reduce_mod_place(&x, &v).unwrap();
                let ry = reduce_mod_place(&y, &v).unwrap();
                assert_eq!(reduce_mod_place(&x.mul(&y), &v).unwrap(), rx.mul(&ry));
                assert_eq!(reduce_mod_place(&x.add(&y), &v).unwrap(), rx.add(&ry));
            }
        }
    }

    #[test]
    fn two_split_places_give_distinct_homomorphisms() {
        let places = split_prime(k23(), 13).unwrap();
        let omega = k23().omega();
        let r0 = reduce_mod_place(&omega, &places[0]).unwrap();
        let r1 = reduce_mod_place(&omega, &places[1]).unwrap();
        assert_ne!(r0, r1);
    }

    #[test]
    fn fermat_and_frobenius() {
        let k = k23();
        let inert = split_prime(k, 67).unwrap()[0];
        for (a, b) in [(1u64, 2u64), (5, 0), (13, 64), (66, 66)] {
            let r = ResidueElement::new(&inert, a, b);
            if !r.is_zero() {
                assert!(r.pow(inert.norm_minus_one()).is_one());
            }
            // Frobenius x -> x^ell is conjugation c0 + c1 s -> c0 - c1 s.
            let fr = r.pow(67);
            assert_eq!(fr.c0, r.c0);
            assert_eq!(fr.c1, (67 - r.c1 % 67) % 67);
        }
    }
}
