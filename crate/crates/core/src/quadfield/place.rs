//! Finite places of the field: splitting of rational primes and the
//! standardized two-element form of the primes above them.

use super::QuadField;
use crate::error::{Error, Result};
use crate::modp::{inv_mod, is_prime_u64, mul_mod, pow_mod};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaceKind {
    Split,
    Inert,
    Ramified,
}

/// A finite place of `k` over the rational prime `ell`.
///
/// Degree-one places (split or ramified) carry the standardized root `b` of
/// the two-element form `(ell, (b + sqrt(D))/2)`, with `0 <= b < 2 ell` and
/// `b^2 = D mod 4 ell`. The value of `sqrt(d)` in the residue field is
/// recovered by [`Place::paper_root`]; reports use that convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Place {
    field: QuadField,
    ell: u64,
    kind: PlaceKind,
    b_root: Option<u64>,
}

impl Place {
    pub fn field(&self) -> QuadField {
        self.field
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn kind(&self) -> PlaceKind {
        self.kind
    }

    /// Residue degree: 2 for inert places, 1 otherwise.
    pub fn f(&self) -> u8 {
        match self.kind {
            PlaceKind::Inert => 2,
            _ => 1,
        }
    }

    /// Absolute norm `ell^f`.
    pub fn q(&self) -> u128 {
        match self.kind {
            PlaceKind::Inert => self.ell as u128 * self.ell as u128,
            _ => self.ell as u128,
        }
    }

    pub fn norm_minus_one(&self) -> u128 {
        self.q() - 1
    }

    /// Standardized root of the two-element form, in `[0, 2 ell)`.
    pub fn b_root(&self) -> Option<u64> {
        self.b_root
    }

    /// The residue of `sqrt(d)` at a degree-one place: the root `r` with
    /// `r^2 = d mod ell` selecting this place as `ell O + (sqrt(d) - r) O`.
    pub fn paper_root(&self) -> Option<u64> {
        let b = self.b_root?;
        let ell = self.ell;
        // (b + sqrt(D))/2 = 0 at the place, so sqrt(D) = -b mod ell.
        let sqrt_disc = (ell - b % ell) % ell;
        if self.field.d_is_one_mod_four() {
            Some(sqrt_disc)
        } else {
            // D = 4d, sqrt(d) = sqrt(D)/2.
            let inv2 = inv_mod(2, ell)?;
            Some(mul_mod(sqrt_disc, inv2, ell))
        }
    }

    /// Deterministic sort key; the token form is `ell:r` with the paper root,
    /// or `ell:i` for inert places.
    pub fn key(&self) -> PlaceKey {
        PlaceKey {
            ell: self.ell,
            root: self.paper_root(),
        }
    }

    /// The degree-one place over `ell` at which `sqrt(d) = r`.
    pub fn from_paper_root(field: QuadField, ell: u64, r: u64) -> Result<Place> {
        if !is_prime_u64(ell) {
            return Err(Error::NotPrime(ell));
        }
        if ell == 2 {
            // Both places over a split 2 have sqrt(d) = 1 there; the root
            // cannot select one of them.
            return Err(Error::BadPlaceSpec(
                "a root cannot distinguish the places over 2".into(),
            ));
        }
        let r = r % ell;
        let d_mod = (field.d.rem_euclid(ell as i64)) as u64;
        if mul_mod(r, r, ell) != d_mod {
            return Err(Error::BadPlaceSpec(format!(
                "{r}^2 is not {} mod {ell}",
                field.d
            )));
        }
        let places = split_prime(field, ell)?;
        places
            .into_iter()
            .find(|p| p.paper_root() == Some(r))
            .ok_or_else(|| Error::BadPlaceSpec(format!("no degree-one place over {ell} with root {r}")))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.paper_root() {
            Some(r) => write!(f, "{}:{}", self.ell, r),
            None => write!(f, "{}", self.ell),
        }
    }
}

/// Total order on places used by the search and by checkpoint tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaceKey {
    pub ell: u64,
    /// Paper root for degree-one places; `None` sorts last (inert).
    pub root: Option<u64>,
}

impl PlaceKey {
    fn root_rank(&self) -> u64 {
        self.root.unwrap_or(u64::MAX)
    }
}

impl fmt::Display for PlaceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root {
            Some(r) => write!(f, "{}:{}", self.ell, r),
            None => write!(f, "{}:i", self.ell),
        }
    }
}

/// The places of `k` above `ell`: two for split primes (ordered by ascending
/// paper root), one for inert or ramified primes.
pub fn split_prime(field: QuadField, ell: u64) -> Result<Vec<Place>> {
    if !is_prime_u64(ell) {
        return Err(Error::NotPrime(ell));
    }
    let disc = field.discriminant();
    if ell == 2 {
        return Ok(split_two(field));
    }
    let d_mod = disc.rem_euclid(ell as i64) as u64;
    if d_mod == 0 {
        // Ramified: b = ell (odd D) or 0 (even D) is the unique root in [0, 2 ell).
        let b = if disc % 2 != 0 { ell } else { 0 };
        return Ok(vec![Place {
            field,
            ell,
            kind: PlaceKind::Ramified,
            b_root: Some(b),
        }]);
    }
    match sqrt_mod(d_mod, ell) {
        None => Ok(vec![Place {
            field,
            ell,
            kind: PlaceKind::Inert,
            b_root: None,
        }]),
        Some(r) => {
            let parity = disc.rem_euclid(2) as u64;
            let fix = |r: u64| if r % 2 == parity { r } else { r + ell };
            let b1 = fix(r);
            let b2 = 2 * ell - b1;
            let mut places: Vec<Place> = [b1, b2]
                .into_iter()
                .map(|b| Place {
                    field,
                    ell,
                    kind: PlaceKind::Split,
                    b_root: Some(b),
                })
                .collect();
            places.sort_by_key(|p| (p.key().root_rank(), p.b_root));
            Ok(places)
        }
    }
}

fn split_two(field: QuadField) -> Vec<Place> {
    let disc = field.discriminant();
    if disc % 2 == 0 {
        let b = if disc.rem_euclid(8) == 0 { 0 } else { 2 };
        return vec![Place {
            field,
            ell: 2,
            kind: PlaceKind::Ramified,
            b_root: Some(b),
        }];
    }
    if disc.rem_euclid(8) == 1 {
        [1u64, 3]
            .into_iter()
            .map(|b| Place {
                field,
                ell: 2,
                kind: PlaceKind::Split,
                b_root: Some(b),
            })
            .collect()
    } else {
        vec![Place {
            field,
            ell: 2,
            kind: PlaceKind::Inert,
            b_root: None,
        }]
    }
}

/// Deterministic square root mod an odd prime: Tonelli-Shanks seeded with the
/// smallest quadratic nonresidue, so outputs are bit-reproducible. `a` is
/// reduced mod `ell`; returns `None` for nonresidues.
pub fn sqrt_mod(a: u64, ell: u64) -> Option<u64> {
    let a = a % ell;
    if ell == 2 {
        return Some(a);
    }
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, ((ell - 1) / 2) as u128, ell) != 1 {
        return None;
    }
    if ell % 4 == 3 {
        return Some(pow_mod(a, ((ell + 1) / 4) as u128, ell));
    }
    // ell - 1 = q * 2^s with q odd
    let mut q = ell - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u64;
    while pow_mod(z, ((ell - 1) / 2) as u128, ell) != ell - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q as u128, ell);
    let mut t = pow_mod(a, q as u128, ell);
    let mut r = pow_mod(a, ((q + 1) / 2) as u128, ell);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, ell);
            i += 1;
        }
        let b = pow_mod(c, 1u128 << (m - i - 1), ell);
        m = i;
        c = mul_mod(b, b, ell);
        t = mul_mod(t, c, ell);
        r = mul_mod(r, b, ell);
    }
    Some(r)
}
