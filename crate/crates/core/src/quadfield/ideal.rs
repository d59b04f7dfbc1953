//! Integral and fractional ideals of `O_k` in standardized two-element form
//! `m (a Z + ((b + sqrt(D))/2) Z)` with `0 <= b < 2a` and `b^2 = D mod 4a`.

use super::{FieldElement, Place, PlaceKind, QuadField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralIdeal {
    field: QuadField,
    m: BigInt,
    a: BigInt,
    b: BigInt,
}

impl IntegralIdeal {
    pub fn field(&self) -> QuadField {
        self.field
    }

    /// Scalar multiplier for imprimitive ideals.
    pub fn multiplier(&self) -> &BigInt {
        &self.m
    }

    /// Norm of the primitive part.
    pub fn norm_a(&self) -> &BigInt {
        &self.a
    }

    pub fn b_root(&self) -> &BigInt {
        &self.b
    }

    pub fn one(field: QuadField) -> Self {
        let b = if field.discriminant() % 2 != 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        IntegralIdeal {
            field,
            m: BigInt::one(),
            a: BigInt::one(),
            b,
        }
    }

    /// Absolute norm `m^2 a`.
    pub fn norm(&self) -> BigInt {
        &self.m * &self.m * &self.a
    }

    /// The standardized ideal spanned over `O_k` by the given integral
    /// generators (not all zero).
    pub fn from_generators(field: QuadField, gens: &[FieldElement]) -> Self {
        let omega = field.omega();
        let mut cols: Vec<(BigInt, BigInt)> = Vec::with_capacity(2 * gens.len());
        for g in gens {
            assert_eq!(g.field(), field, "mixed fields");
            let (u, v) = g.omega_coords().expect("generators must be integral");
            let (wu, wv) = g.mul(&omega).omega_coords().expect("closed under omega");
            cols.push((u, v));
            cols.push((wu, wv));
        }
        let ((a0, _), (b0, c0)) = hnf_2xn(&cols);
        Self::from_hnf(field, a0, b0, c0)
    }

    /// Standardize the Z-basis `{A, B + C omega}` of an `O_k`-module.
    fn from_hnf(field: QuadField, a_big: BigInt, b_big: BigInt, c_big: BigInt) -> Self {
        assert!(a_big.is_positive() && c_big.is_positive(), "rank-2 module required");
        let (a, ra) = a_big.div_rem(&c_big);
        let (bq, rb) = b_big.div_rem(&c_big);
        assert!(ra.is_zero() && rb.is_zero(), "not an O_k-module");
        // beta = bq + omega; rewrite as (b + sqrt(D))/2.
        let b = if field.d_is_one_mod_four() {
            BigInt::from(2) * bq + 1
        } else {
            BigInt::from(2) * bq
        };
        let two_a = BigInt::from(2) * &a;
        let b = b.mod_floor(&two_a);
        let ideal = IntegralIdeal {
            field,
            m: c_big,
            a,
            b,
        };
        debug_assert!(ideal.check_root());
        ideal
    }

    fn check_root(&self) -> bool {
        let disc = BigInt::from(self.field.discriminant());
        let four_a = BigInt::from(4) * &self.a;
        (&self.b * &self.b - disc).mod_floor(&four_a).is_zero()
    }

    pub fn principal(x: &FieldElement) -> Self {
        assert!(!x.is_zero(), "zero ideal");
        Self::from_generators(x.field(), std::slice::from_ref(x))
    }

    pub fn from_place(v: &Place) -> Self {
        let field = v.field();
        match v.kind() {
            PlaceKind::Inert => {
                let mut unit = Self::one(field);
                unit.m = BigInt::from(v.ell());
                unit
            }
            _ => {
                let ell = BigInt::from(v.ell());
                IntegralIdeal {
                    field,
                    m: BigInt::one(),
                    a: ell,
                    b: BigInt::from(v.b_root().expect("degree-one place")),
                }
            }
        }
    }

    /// Z-basis `{m a, m (b + sqrt(D))/2}` as field elements.
    pub fn basis_elements(&self) -> [FieldElement; 2] {
        let field = self.field;
        let first = FieldElement::new(field, &self.m * &self.a, BigInt::zero(), BigInt::one());
        let second = if field.d_is_one_mod_four() {
            FieldElement::new(field, self.b.clone(), BigInt::one(), BigInt::from(2)).scale(&self.m)
        } else {
            // (b + 2 sqrt(d))/2 = b/2 + sqrt(d), b even.
            FieldElement::new(field, &self.b / 2, BigInt::one(), BigInt::one()).scale(&self.m)
        };
        [first, second]
    }

    pub fn mul(&self, other: &IntegralIdeal) -> IntegralIdeal {
        assert_eq!(self.field, other.field, "mixed fields");
        let [x1, x2] = self.basis_elements();
        let [y1, y2] = other.basis_elements();
        let gens = [x1.mul(&y1), x1.mul(&y2), x2.mul(&y1), x2.mul(&y2)];
        Self::from_generators(self.field, &gens)
    }

    pub fn pow(&self, e: u64) -> IntegralIdeal {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn conj(&self) -> IntegralIdeal {
        let two_a = BigInt::from(2) * &self.a;
        IntegralIdeal {
            field: self.field,
            m: self.m.clone(),
            a: self.a.clone(),
            b: (-&self.b).mod_floor(&two_a),
        }
    }

    pub fn scale(&self, n: &BigInt) -> IntegralIdeal {
        assert!(n.is_positive());
        IntegralIdeal {
            field: self.field,
            m: &self.m * n,
            a: self.a.clone(),
            b: self.b.clone(),
        }
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        if x.is_zero() {
            return true;
        }
        let Some((u, v)) = x.omega_coords() else {
            return false;
        };
        // Solve x = alpha * (m a) + beta * (m (B' + omega)).
        let [_, second] = self.basis_elements();
        let (b2, c2) = second.omega_coords().expect("basis is integral");
        let (beta, r) = v.div_rem(&c2);
        if !r.is_zero() {
            return false;
        }
        let (_, r2) = (u - beta * b2).div_rem(&(&self.m * &self.a));
        r2.is_zero()
    }
}

impl fmt::Display for IntegralIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            write!(f, "({}, ({}+sqrt({}))/2)", self.a, self.b, self.field.discriminant())
        } else {
            write!(
                f,
                "{}*({}, ({}+sqrt({}))/2)",
                self.m,
                self.a,
                self.b,
                self.field.discriminant()
            )
        }
    }
}

/// `num / den` for a positive integer `den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalIdeal {
    pub num: IntegralIdeal,
    pub den: BigInt,
}

impl FractionalIdeal {
    pub fn new(num: IntegralIdeal, den: BigInt) -> Self {
        assert!(den.is_positive());
        FractionalIdeal { num, den }
    }

    pub fn from_integral(i: IntegralIdeal) -> Self {
        FractionalIdeal {
            num: i,
            den: BigInt::one(),
        }
    }

    pub fn equals(&self, other: &FractionalIdeal) -> bool {
        self.num.scale(&other.den) == other.num.scale(&self.den)
    }
}

/// Column-style Hermite normal form of a rank-2 module spanned by `cols`
/// inside `Z + Z omega`: returns `((a, 0), (b, c))` with `a, c > 0` and
/// `0 <= b < ...` reduced mod `a`.
fn hnf_2xn(cols: &[(BigInt, BigInt)]) -> ((BigInt, BigInt), (BigInt, BigInt)) {
    let mut ints: Vec<BigInt> = Vec::new();
    let mut pivot: Option<(BigInt, BigInt)> = None;
    for (u, v) in cols {
        if v.is_zero() {
            ints.push(u.clone());
            continue;
        }
        match pivot.take() {
            None => pivot = Some((u.clone(), v.clone())),
            Some((pu, pv)) => {
                let e = pv.extended_gcd(v);
                // g = x*pv + y*v
                let new_u = &e.x * &pu + &e.y * u;
                let new_v = e.gcd.clone();
                // eliminate: (v/g)*(pu,pv) - (pv/g)*(u,v) has omega-part 0
                let left = (v / &e.gcd) * &pu - (&pv / &e.gcd) * u;
                ints.push(left);
                pivot = Some((new_u, new_v));
            }
        }
    }
    let (mut pu, mut pv) = pivot.expect("module has full rank");
    if pv.is_negative() {
        pu = -pu;
        pv = -pv;
    }
    let mut a = BigInt::zero();
    for n in ints {
        a = a.gcd(&n);
    }
    assert!(a.is_positive(), "module has full rank");
    pu = pu.mod_floor(&a);
    ((a, BigInt::zero()), (pu, pv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::split_prime;

    fn k23() -> QuadField {
        QuadField::new(-23).unwrap()
    }

    #[test]
    fn place_ideals_standardized() {
        let k = k23();
        let v0 = Place::from_paper_root(k, 13, 4).unwrap();
        let i = IntegralIdeal::from_place(&v0);
        assert_eq!(i.norm(), BigInt::from(13));
        assert_eq!(i.b_root(), &BigInt::from(9));

        let v2 = &split_prime(k, 67).unwrap()[0];
        let i2 = IntegralIdeal::from_place(v2);
        assert_eq!(i2.norm(), BigInt::from(4489));
        assert_eq!(i2.multiplier(), &BigInt::from(67));
    }

    #[test]
    fn principal_ideal_of_named_elements() {
        let k = k23();
        let a1 = FieldElement::from_parts(k, -2, -1, 1);
        let i = IntegralIdeal::principal(&a1);
        assert_eq!(i.norm(), BigInt::from(27));
        assert!(i.contains(&a1));
        assert!(i.contains(&a1.mul(&k.omega())));
        assert!(!i.contains(&k.one()));

        let seven = k.from_int(7);
        let i7 = IntegralIdeal::principal(&seven);
        assert_eq!(i7.norm(), BigInt::from(49));
        assert_eq!(i7.multiplier(), &BigInt::from(7));
    }

    #[test]
    fn norm_is_multiplicative_on_ideals() {
        let k = k23();
        let v0 = IntegralIdeal::from_place(&Place::from_paper_root(k, 13, 4).unwrap());
        let a1 = IntegralIdeal::from_place(&Place::from_paper_root(k, 3, 1).unwrap());
        let prod = v0.mul(&a1);
        assert_eq!(prod.norm(), BigInt::from(39));
        assert_eq!(v0.pow(3).norm(), BigInt::from(13 * 13 * 13));
    }

    #[test]
    fn conjugate_times_self_is_the_norm() {
        let k = k23();
        let a1 = IntegralIdeal::from_place(&Place::from_paper_root(k, 3, 1).unwrap());
        let n = a1.mul(&a1.conj());
        assert_eq!(n, IntegralIdeal::one(k).scale(&BigInt::from(3)));
    }

    #[test]
    fn product_of_conjugate_split_places() {
        let k = k23();
        let places = split_prime(k, 13).unwrap();
        let prod = IntegralIdeal::from_place(&places[0]).mul(&IntegralIdeal::from_place(&places[1]));
        assert_eq!(prod, IntegralIdeal::one(k).scale(&BigInt::from(13)));
    }

    #[test]
    fn fractional_equality() {
        let k = k23();
        let i = IntegralIdeal::from_place(&Place::from_paper_root(k, 3, 1).unwrap());
        let a = FractionalIdeal::new(i.scale(&BigInt::from(2)), BigInt::from(4));
        let b = FractionalIdeal::new(i, BigInt::from(2));
        assert!(a.equals(&b));
    }
}
