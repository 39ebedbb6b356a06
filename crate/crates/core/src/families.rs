//! Constructors for the standard group families.
//!
//! Every constructor builds its table from an explicit multiplication rule on
//! tuples, so associativity holds by construction and is not re-checked unless
//! [`crate::group::CHECK_ASSOC_ENV`] is set.
//!
//! Dihedral and dicyclic parameters are the *total* group order: `D14` is the
//! dihedral group of order 14, `Q8` the quaternion group.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::{gcd, FiniteGroup, DEFAULT_ORDER_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Cyclic,
    Dihedral,
    Dicyclic,
    Symmetric,
    Alternating,
    Heisenberg,
    ElementaryAbelian,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Cyclic,
        FamilyKind::Dihedral,
        FamilyKind::Dicyclic,
        FamilyKind::Symmetric,
        FamilyKind::Alternating,
        FamilyKind::Heisenberg,
        FamilyKind::ElementaryAbelian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Cyclic => "cyclic",
            FamilyKind::Dihedral => "dihedral",
            FamilyKind::Dicyclic => "dicyclic",
            FamilyKind::Symmetric => "symmetric",
            FamilyKind::Alternating => "alternating",
            FamilyKind::Heisenberg => "heisenberg",
            FamilyKind::ElementaryAbelian => "elementary_abelian",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn make_family(kind: FamilyKind, param: u64) -> Result<FiniteGroup> {
    make_family_with_cap(kind, param, DEFAULT_ORDER_CAP)
}

pub fn make_family_with_cap(kind: FamilyKind, param: u64, cap: usize) -> Result<FiniteGroup> {
    let invalid = |reason| GroupError::InvalidParam {
        kind: kind.as_str(),
        param,
        reason,
    };
    if param == 0 {
        return Err(invalid("parameter must be positive"));
    }
    match kind {
        FamilyKind::Cyclic => {
            let n = checked_order(param, cap)?;
            FiniteGroup::from_fn(format!("C{n}"), n, 0, cap, |a, b| (a + b) % n)
        }
        FamilyKind::Dihedral => {
            if param % 2 != 0 {
                return Err(invalid("dihedral order must be even"));
            }
            let n = checked_order(param, cap)?;
            let m = n / 2;
            // r^i s^j at index i + m*j
            FiniteGroup::from_fn(format!("D{n}"), n, 0, cap, |x, y| {
                let (i, a) = (x % m, x / m);
                let (k, b) = (y % m, y / m);
                let rot = if a == 0 { (i + k) % m } else { (i + m - k) % m };
                rot + m * ((a + b) % 2)
            })
        }
        FamilyKind::Dicyclic => {
            if param % 4 != 0 {
                return Err(invalid("dicyclic order must be divisible by 4"));
            }
            let n = checked_order(param, cap)?;
            let half = n / 2; // order of the cyclic part <a>
            let m = n / 4;
            // a^i x^j at index i + half*j, with x^2 = a^m and x a x^-1 = a^-1
            FiniteGroup::from_fn(format!("Q{n}"), n, 0, cap, |x, y| {
                let (i, a) = (x % half, x / half);
                let (k, b) = (y % half, y / half);
                if a == 0 {
                    (i + k) % half + half * b
                } else {
                    let base = (i + half - k) % half;
                    if b == 0 {
                        base + half
                    } else {
                        (base + m) % half
                    }
                }
            })
        }
        FamilyKind::Symmetric | FamilyKind::Alternating => {
            if param > 20 {
                return Err(GroupError::ExceedsCap { order: u64::MAX, cap });
            }
            let full: u64 = (1..=param).product();
            let size = if kind == FamilyKind::Alternating && param >= 2 {
                full / 2
            } else {
                full
            };
            checked_order(size, cap)?;
            let perms = permutations(param as usize, kind == FamilyKind::Alternating);
            let letter = if kind == FamilyKind::Symmetric { 'S' } else { 'A' };
            permutation_group(format!("{letter}{param}"), perms, cap)
        }
        FamilyKind::Heisenberg => {
            if param < 3 || !is_prime(param) {
                return Err(invalid("heisenberg parameter must be an odd prime"));
            }
            let p = param as usize;
            checked_order(param.saturating_pow(3), cap)?;
            // (a, b, c) at index a + p*b + p^2*c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
            FiniteGroup::from_fn(format!("Heis{p}"), p * p * p, 0, cap, |x, y| {
                let (a, b, c) = (x % p, (x / p) % p, x / (p * p));
                let (a2, b2, c2) = (y % p, (y / p) % p, y / (p * p));
                let na = (a + a2) % p;
                let nb = (b + b2) % p;
                let nc = (c + c2 + a * b2) % p;
                na + p * nb + p * p * nc
            })
        }
        FamilyKind::ElementaryAbelian => {
            let (p, k) = prime_power(param).ok_or_else(|| invalid("order must be a prime power"))?;
            let n = checked_order(param, cap)?;
            let p = p as usize;
            let name = vec![format!("C{p}"); k as usize].join("x");
            FiniteGroup::from_fn(name, n, 0, cap, |x, y| {
                let (mut x, mut y) = (x, y);
                let mut out = 0;
                let mut place = 1;
                for _ in 0..k {
                    out += ((x % p + y % p) % p) * place;
                    x /= p;
                    y /= p;
                    place *= p;
                }
                out
            })
        }
    }
}

/// `C_n ⋊ C_m` with the generator of `C_m` acting on `C_n` as multiplication by `k`.
pub fn semidirect_cyclic(n: u64, m: u64, k: u64) -> Result<FiniteGroup> {
    semidirect_cyclic_with_cap(n, m, k, DEFAULT_ORDER_CAP)
}

pub fn semidirect_cyclic_with_cap(n: u64, m: u64, k: u64, cap: usize) -> Result<FiniteGroup> {
    if n == 0 || m == 0 {
        return Err(GroupError::InvalidParam {
            kind: "semidirect",
            param: 0,
            reason: "factor orders must be positive",
        });
    }
    if !is_valid_twist(n, m, k) {
        return Err(GroupError::InvalidTwist { n, m, k });
    }
    let order = checked_order(n.saturating_mul(m), cap)?;
    let (n, m) = (n as usize, m as usize);
    let kr = (k % n as u64) as usize;
    // powers[t] = k^t mod n
    let mut powers = vec![1 % n; m];
    for t in 1..m {
        powers[t] = powers[t - 1] * kr % n;
    }
    // (a, t) at index a + n*t
    FiniteGroup::from_fn(format!("C{n}:C{m}(k={k})"), order, 0, cap, |x, y| {
        let (a1, t1) = (x % n, x / n);
        let (a2, t2) = (y % n, y / n);
        (a1 + powers[t1] * a2) % n + n * ((t1 + t2) % m)
    })
}

pub fn is_valid_twist(n: u64, m: u64, k: u64) -> bool {
    if n == 0 {
        return false;
    }
    let kr = k % n;
    gcd_u64(kr, n) == 1 && pow_mod(kr, m, n) == 1 % n
}

pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_with_cap(a, b, DEFAULT_ORDER_CAP)
}

pub fn direct_product_with_cap(a: &FiniteGroup, b: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let order = checked_order((a.order() as u64).saturating_mul(b.order() as u64), cap)?;
    let nb = b.order();
    // (x, y) at index x*|B| + y
    let identity = a.identity() * nb + b.identity();
    FiniteGroup::from_fn(format!("{}x{}", a.name(), b.name()), order, identity, cap, |x, y| {
        a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
    })
}

fn checked_order(order: u64, cap: usize) -> Result<usize> {
    if order as u128 > cap as u128 || order > u16::MAX as u64 + 1 {
        Err(GroupError::ExceedsCap { order, cap })
    } else {
        Ok(order as usize)
    }
}

fn permutation_group(name: String, perms: Vec<Vec<u8>>, cap: usize) -> Result<FiniteGroup> {
    let index: std::collections::HashMap<&[u8], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let deg = perms[0].len();
    // (p·q)(i) = p(q(i))
    FiniteGroup::from_fn(name, perms.len(), 0, cap, |x, y| {
        let (p, q) = (&perms[x], &perms[y]);
        let composed: Vec<u8> = (0..deg).map(|i| p[q[i] as usize]).collect();
        index[composed.as_slice()]
    })
}

/// All permutations of `0..n` in lexicographic order (identity first).
fn permutations(n: usize, even_only: bool) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    loop {
        if !even_only || is_even(&current) {
            out.push(current.clone());
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `Some((p, k))` when `n = p^k` with `p` prime and `k ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut rest = n;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    gcd(a as usize, b as usize) as u64
}

pub(crate) fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_14_is_nonabelian() {
        let g = make_family(FamilyKind::Dihedral, 14).unwrap();
        assert_eq!(g.order(), 14);
        assert!(!g.is_abelian());
        assert_eq!(g.name(), "D14");
    }

    #[test]
    fn small_dihedral_degenerate_cases() {
        assert!(make_family(FamilyKind::Dihedral, 2).unwrap().is_abelian());
        let d4 = make_family(FamilyKind::Dihedral, 4).unwrap();
        assert!(d4.is_abelian());
        assert_eq!(d4.exponent(), 2);
        assert!(matches!(
            make_family(FamilyKind::Dihedral, 7),
            Err(GroupError::InvalidParam { .. })
        ));
    }

    #[test]
    fn heisenberg_rejects_non_primes() {
        for bad in [4, 2, 1, 9] {
            assert!(
                matches!(
                    make_family(FamilyKind::Heisenberg, bad),
                    Err(GroupError::InvalidParam { .. })
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn heisenberg_has_exponent_p() {
        let g = make_family(FamilyKind::Heisenberg, 5).unwrap();
        assert_eq!(g.order(), 125);
        assert_eq!(g.exponent(), 5);
        assert!(!g.is_abelian());
    }

    #[test]
    fn dicyclic_small_cases() {
        let q4 = make_family(FamilyKind::Dicyclic, 4).unwrap();
        assert_eq!(q4.exponent(), 4); // cyclic of order 4
        let q8 = make_family(FamilyKind::Dicyclic, 8).unwrap();
        assert!(!q8.is_abelian());
        let involutions = q8.elements().filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        assert!(make_family(FamilyKind::Dicyclic, 6).is_err());
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        assert_eq!(make_family(FamilyKind::Symmetric, 4).unwrap().order(), 24);
        assert_eq!(make_family(FamilyKind::Alternating, 4).unwrap().order(), 12);
        assert_eq!(make_family(FamilyKind::Symmetric, 1).unwrap().order(), 1);
        assert!(matches!(
            make_family(FamilyKind::Symmetric, 7),
            Err(GroupError::ExceedsCap { .. })
        ));
    }

    #[test]
    fn elementary_abelian_names_match_products() {
        let g = make_family(FamilyKind::ElementaryAbelian, 8).unwrap();
        assert_eq!(g.name(), "C2xC2xC2");
        assert_eq!(g.exponent(), 2);
        assert!(make_family(FamilyKind::ElementaryAbelian, 12).is_err());
    }

    #[test]
    fn semidirect_twists() {
        let g = semidirect_cyclic(7, 3, 2).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        assert_eq!(
            semidirect_cyclic(7, 3, 3).unwrap_err(),
            GroupError::InvalidTwist { n: 7, m: 3, k: 3 }
        );
        assert!(semidirect_cyclic(7, 6, 3).is_ok());
        assert!(semidirect_cyclic(6, 2, 2).is_err()); // gcd(2, 6) != 1
        assert!(semidirect_cyclic(5, 4, 1).unwrap().is_abelian());
    }

    #[test]
    fn direct_product_shape() {
        let c2 = make_family(FamilyKind::Cyclic, 2).unwrap();
        let c3 = make_family(FamilyKind::Cyclic, 3).unwrap();
        let g = direct_product(&c2, &c3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.name(), "C2xC3");
        let c7 = make_family(FamilyKind::Cyclic, 7).unwrap();
        let g = direct_product(&c7, &c7).unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 7);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            make_family_with_cap(FamilyKind::Cyclic, 100, 50),
            Err(GroupError::ExceedsCap { order: 100, cap: 50 })
        ));
        let big = make_family(FamilyKind::Cyclic, 100).unwrap();
        assert!(matches!(
            direct_product_with_cap(&big, &big, 4096),
            Err(GroupError::ExceedsCap { .. })
        ));
    }

    #[test]
    fn constructed_groups_are_associative() {
        let groups = [
            make_family(FamilyKind::Dihedral, 12).unwrap(),
            make_family(FamilyKind::Dicyclic, 12).unwrap(),
            make_family(FamilyKind::Symmetric, 4).unwrap(),
            make_family(FamilyKind::Alternating, 4).unwrap(),
            make_family(FamilyKind::Heisenberg, 3).unwrap(),
            make_family(FamilyKind::ElementaryAbelian, 9).unwrap(),
            semidirect_cyclic(9, 6, 2).unwrap(),
        ];
        for g in &groups {
            g.check_associativity_full()
                .unwrap_or_else(|e| panic!("{}: {e}", g.name()));
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(42), None);
    }
}
