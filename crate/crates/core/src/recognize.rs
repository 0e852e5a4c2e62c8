//! Construction of named permutation groups (symmetric, alternating, cyclic,
//! dihedral, Frobenius, PSL(2,q), PSigmaL(2,q)) and identification of
//! composition factors, including the L2(3^(2n+1)) order predicate.

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;
use crate::series::{is_prime_u128, Section};
use crate::structure::is_prime;

/// Fixed irreducible polynomials over F_3 (coefficients of x^0..x^(f-1); the
/// leading coefficient is 1). Each is the lexicographically least monic
/// irreducible of its degree.
const F3_MODULI: [&[u64]; 7] = [
    &[0],                   // x
    &[1, 0],                // x^2 + 1
    &[1, 2, 0],             // x^3 + 2x + 1
    &[2, 1, 0, 0],          // x^4 + x + 2
    &[1, 2, 0, 0, 0],       // x^5 + 2x + 1
    &[2, 1, 0, 0, 0, 0],    // x^6 + x + 2
    &[2, 0, 1, 0, 0, 0, 0], // x^7 + x^2 + 2
];

/// The field F_{p^f} in a polynomial-basis representation. Elements are
/// indexed 0..q by their coefficient vectors read base p (so 0 and 1 are the
/// additive and multiplicative identities).
pub struct Field {
    pub p: u64,
    pub f: u32,
    pub q: u64,
    /// Coefficients of the monic modulus below the leading term.
    pub modulus: Vec<u64>,
}

impl Field {
    pub fn new(p: u64, f: u32) -> Result<Field> {
        if !is_prime(p) || f == 0 {
            return Err(Error::InvalidParameter(format!(
                "not a prime power: {p}^{f}"
            )));
        }
        let mut q: u64 = 1;
        for _ in 0..f {
            q = q
                .checked_mul(p)
                .ok_or_else(|| Error::InvalidParameter("field too large".into()))?;
        }
        let modulus = if p == 3 && (f as usize) <= F3_MODULI.len() {
            F3_MODULI[f as usize - 1].to_vec()
        } else {
            least_irreducible(p, f)?
        };
        Ok(Field { p, f, q, modulus })
    }

    fn coeffs(&self, mut idx: u64) -> Vec<u64> {
        let mut c = vec![0; self.f as usize];
        for ci in c.iter_mut() {
            *ci = idx % self.p;
            idx /= self.p;
        }
        c
    }

    fn index(&self, c: &[u64]) -> u64 {
        c.iter().rev().fold(0, |acc, &ci| acc * self.p + ci)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let sum: Vec<u64> = ca
            .iter()
            .zip(&cb)
            .map(|(x, y)| (x + y) % self.p)
            .collect();
        self.index(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let c: Vec<u64> = self
            .coeffs(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.index(&c)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let deg = self.f as usize;
        let mut prod = vec![0u64; 2 * deg - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce: x^deg = -modulus
        for k in (deg..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (m, &mc) in self.modulus.iter().enumerate() {
                let t = k - deg + m;
                prod[t] = (prod[t] + c * ((self.p - mc) % self.p)) % self.p;
            }
        }
        prod.truncate(deg);
        self.index(&prod)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::InvalidParameter("division by zero".into()));
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// Smallest-index element of multiplicative order q-1.
    pub fn primitive_element(&self) -> u64 {
        let phi = self.q - 1;
        let primes = prime_divisors(phi);
        'outer: for a in 2..self.q {
            for &r in &primes {
                if self.pow(a, phi / r) == 1 {
                    continue 'outer;
                }
            }
            return a;
        }
        1 // q = 2 only
    }

    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p)
    }
}

fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Lexicographically least monic irreducible of degree f over F_p
/// (coefficients below the leading term, ordered by the base-p index of the
/// coefficient vector).
fn least_irreducible(p: u64, f: u32) -> Result<Vec<u64>> {
    let deg = f as usize;
    let mut count: u64 = 1;
    for _ in 0..deg {
        count = count
            .checked_mul(p)
            .ok_or_else(|| Error::InvalidParameter("field too large".into()))?;
    }
    let mut coeffs = vec![0u64; deg];
    for idx in 0..count {
        let mut r = idx;
        for c in coeffs.iter_mut() {
            *c = r % p;
            r /= p;
        }
        if is_irreducible(p, &coeffs) {
            return Ok(coeffs);
        }
    }
    Err(Error::Internal(format!(
        "no irreducible polynomial of degree {f} over F_{p}"
    )))
}

/// Rabin's test on the monic polynomial x^deg + modulus.
fn is_irreducible(p: u64, modulus: &[u64]) -> bool {
    let deg = modulus.len();
    if deg == 1 {
        return true;
    }
    if modulus[0] == 0 {
        return false; // root at 0
    }
    // x^(p^deg) == x mod g, and x^(p^(deg/r)) - x coprime to g for prime r | deg
    let x = poly_x(p, modulus);
    let mut t = x.clone();
    for _ in 0..deg {
        t = poly_modpow_p(p, &t, modulus);
    }
    if t != x {
        return false;
    }
    for r in prime_divisors(deg as u64) {
        let mut u = x.clone();
        for _ in 0..(deg as u64 / r) {
            u = poly_modpow_p(p, &u, modulus);
        }
        // gcd(u - x, g) must be 1
        let mut diff: Vec<u64> = u
            .iter()
            .zip(&x)
            .map(|(a, b)| (a + p - b) % p)
            .collect();
        poly_trim(&mut diff);
        let mut g: Vec<u64> = modulus.to_vec();
        g.push(1);
        if poly_gcd_deg(p, &g, &diff) != 0 {
            return false;
        }
    }
    true
}

fn poly_x(p: u64, modulus: &[u64]) -> Vec<u64> {
    let deg = modulus.len();
    let mut x = vec![0u64; deg];
    if deg == 1 {
        x[0] = (p - modulus[0]) % p; // x = -c0 mod (x + c0)
    } else {
        x[1] = 1;
    }
    x
}

/// a(x)^p mod (x^deg + modulus), coefficients length deg.
fn poly_modpow_p(p: u64, a: &[u64], modulus: &[u64]) -> Vec<u64> {
    let deg = modulus.len();
    let mulmod = |u: &[u64], v: &[u64]| -> Vec<u64> {
        let mut prod = vec![0u64; 2 * deg - 1];
        for (i, &x) in u.iter().enumerate() {
            for (j, &y) in v.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for k in (deg..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (m, &mc) in modulus.iter().enumerate() {
                let t = k - deg + m;
                prod[t] = (prod[t] + c * ((p - mc) % p)) % p;
            }
        }
        prod.truncate(deg);
        prod
    };
    let mut acc = vec![0u64; deg];
    acc[0] = 1;
    let mut base = a.to_vec();
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base);
        }
        base = mulmod(&base, &base);
        e >>= 1;
    }
    acc
}

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_gcd_deg(p: u64, a: &[u64], b: &[u64]) -> usize {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lead_inv = mod_inv(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let c = (*a.last().unwrap() * lead_inv) % p;
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - (c * bc) % p) % p;
            }
            poly_trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// A named group family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupSpec {
    Symmetric { n: usize },
    Alternating { n: usize },
    Cyclic { m: usize },
    Dihedral { m: usize },
    Frobenius { p: u64, k: u64 },
    Psl2 { q: u64 },
    PsigmaL2 { p: u64, f: u32 },
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Symmetric { n } => write!(out, "S{n}"),
            GroupSpec::Alternating { n } => write!(out, "A{n}"),
            GroupSpec::Cyclic { m } => write!(out, "Z{m}"),
            GroupSpec::Dihedral { m } => write!(out, "D{m}"),
            GroupSpec::Frobenius { p, k } => write!(out, "F{}", p * k),
            GroupSpec::Psl2 { q } => write!(out, "PSL(2,{q})"),
            GroupSpec::PsigmaL2 { p, f } => write!(out, "PSigmaL(2,{}^{})", p, f),
        }
    }
}

pub fn construct(spec: &GroupSpec, cfg: &Config) -> Result<Group> {
    match *spec {
        GroupSpec::Symmetric { n } => {
            if n == 0 {
                return Err(Error::InvalidParameter("symmetric: n >= 1".into()));
            }
            let gens = if n == 1 {
                vec![]
            } else {
                vec![
                    Perm::from_cycles(n, &[(0..n as u32).collect()])?,
                    Perm::from_cycles(n, &[vec![0, 1]])?,
                ]
            };
            Group::from_generators(n, gens, cfg)
        }
        GroupSpec::Alternating { n } => {
            if n == 0 {
                return Err(Error::InvalidParameter("alternating: n >= 1".into()));
            }
            let gens = if n < 3 {
                vec![]
            } else if n % 2 == 1 {
                vec![
                    Perm::from_cycles(n, &[vec![0, 1, 2]])?,
                    Perm::from_cycles(n, &[(0..n as u32).collect()])?,
                ]
            } else {
                vec![
                    Perm::from_cycles(n, &[vec![0, 1, 2]])?,
                    Perm::from_cycles(n, &[(1..n as u32).collect()])?,
                ]
            };
            Group::from_generators(n, gens, cfg)
        }
        GroupSpec::Cyclic { m } => {
            if m == 0 {
                return Err(Error::InvalidParameter("cyclic: m >= 1".into()));
            }
            let gens = if m == 1 {
                vec![]
            } else {
                vec![Perm::from_cycles(m, &[(0..m as u32).collect()])?]
            };
            Group::from_generators(m, gens, cfg)
        }
        GroupSpec::Dihedral { m } => {
            if m < 3 {
                return Err(Error::InvalidParameter("dihedral: m >= 3".into()));
            }
            let rot = Perm::from_cycles(m, &[(0..m as u32).collect()])?;
            let refl = Perm::new((0..m as u32).map(|i| (m as u32 - i) % m as u32).collect())?;
            Group::from_generators(m, vec![rot, refl], cfg)
        }
        GroupSpec::Frobenius { p, k } => {
            if !is_prime(p) || k < 2 || (p - 1) % k != 0 {
                return Err(Error::InvalidParameter(
                    "frobenius: p prime, k >= 2, k | p-1".into(),
                ));
            }
            let fld = Field::new(p, 1)?;
            let a = fld.pow(fld.primitive_element(), (p - 1) / k);
            let t = Perm::new((0..p as u32).map(|i| (i + 1) % p as u32).collect())?;
            let m = Perm::new((0..p).map(|i| (a * i % p) as u32).collect())?;
            Group::from_generators(p as usize, vec![t, m], cfg)
        }
        GroupSpec::Psl2 { q } => {
            let (p, f) = prime_power(q).ok_or_else(|| {
                Error::InvalidParameter(format!("psl2: {q} is not a prime power"))
            })?;
            if p == 2 || q < 5 {
                return Err(Error::InvalidParameter(
                    "psl2: q must be an odd prime power >= 5".into(),
                ));
            }
            let fld = Field::new(p, f)?;
            let gens = psl2_generators(&fld)?;
            let order = (q as u128) * (q as u128 - 1) * (q as u128 + 1) / 2;
            construct_with_order(q as usize + 1, gens, order, cfg)
        }
        GroupSpec::PsigmaL2 { p, f } => {
            if p == 2 || f == 0 {
                return Err(Error::InvalidParameter(
                    "psigma_l2: p odd prime, f >= 1".into(),
                ));
            }
            let fld = Field::new(p, f)?;
            let q = fld.q;
            if q < 5 {
                return Err(Error::InvalidParameter("psigma_l2: q >= 5".into()));
            }
            let mut gens = psl2_generators(&fld)?;
            gens.push(frobenius_perm(&fld)?);
            let order = (f as u128) * (q as u128) * (q as u128 - 1) * (q as u128 + 1) / 2;
            construct_with_order(q as usize + 1, gens, order, cfg)
        }
    }
}

/// Builds with the textbook order as a termination target, then verifies it.
fn construct_with_order(
    degree: usize,
    gens: Vec<Perm>,
    order: u128,
    cfg: &Config,
) -> Result<Group> {
    if degree > cfg.cap_degree {
        return Err(Error::DegreeCapExceeded {
            degree,
            cap: cfg.cap_degree,
        });
    }
    let g = Group::with_known_order(degree, gens, Some(order));
    if g.order() != order {
        return Err(Error::Internal(format!(
            "constructed order {} != expected {}",
            g.order(),
            order
        )));
    }
    Ok(g)
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let ps = prime_divisors(q);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut f = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        f += 1;
    }
    Some((p, f))
}

/// Projective line points: index i < q is the field element of index i,
/// index q is infinity.
fn psl2_generators(fld: &Field) -> Result<Vec<Perm>> {
    let q = fld.q;
    let inf = q as u32;
    // x -> x + 1
    let t = Perm::new(
        (0..=q)
            .map(|x| if x == q { inf } else { fld.add(x, 1) as u32 })
            .collect(),
    )?;
    // x -> lambda x, lambda the square of a primitive element
    let prim = fld.primitive_element();
    let lambda = fld.mul(prim, prim);
    let d = Perm::new(
        (0..=q)
            .map(|x| if x == q { inf } else { fld.mul(lambda, x) as u32 })
            .collect(),
    )?;
    // x -> -1/x, with 0 <-> infinity
    let mut w = vec![0u32; q as usize + 1];
    w[0] = inf;
    w[q as usize] = 0;
    for x in 1..q {
        w[x as usize] = fld.neg(fld.inv(x)?) as u32;
    }
    Ok(vec![t, d, Perm::new(w)?])
}

/// The point permutation induced by the field Frobenius x -> x^p.
pub fn frobenius_perm(fld: &Field) -> Result<Perm> {
    let q = fld.q;
    Perm::new(
        (0..=q)
            .map(|x| if x == q { q as u32 } else { fld.frobenius(x) as u32 })
            .collect(),
    )
}

/// Isomorphism-type label of a composition factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum FactorId {
    CyclicPrime { p: u64 },
    L2_3odd { n: u32 },
    OtherNonabelianSimple { order: u128 },
}

impl FactorId {
    pub fn order(&self) -> u128 {
        match *self {
            FactorId::CyclicPrime { p } => p as u128,
            FactorId::L2_3odd { n } => l2_3odd_order(n),
            FactorId::OtherNonabelianSimple { order } => order,
        }
    }
}

impl std::fmt::Display for FactorId {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            FactorId::CyclicPrime { p } => write!(out, "Z{p}"),
            FactorId::L2_3odd { n } => write!(out, "L2(3^{})", 2 * n + 1),
            FactorId::OtherNonabelianSimple { order } => write!(out, "Simple({order})"),
        }
    }
}

/// |L2(q)| for q = 3^(2n+1).
pub fn l2_3odd_order(n: u32) -> u128 {
    let q = 3u128.pow(2 * n + 1);
    q * (q - 1) * (q + 1) / 2
}

/// The unique n >= 1 with m = q(q^2-1)/2, q = 3^(2n+1), if any.
pub fn is_l2_3odd_order(m: u128) -> Option<u32> {
    let mut n = 1;
    loop {
        let o = l2_3odd_order(n);
        if o == m {
            return Some(n);
        }
        if o > m || n > 40 {
            return None;
        }
        n += 1;
    }
}

/// Labels a composition factor; errors if the section is not simple.
pub fn identify_factor(sec: &Section, cfg: &Config) -> Result<FactorId> {
    let order = sec.order();
    if is_prime_u128(order) {
        return Ok(FactorId::CyclicPrime { p: order as u64 });
    }
    if !sec.is_simple(cfg)? {
        return Err(Error::SectionNotSimple { order });
    }
    match is_l2_3odd_order(order) {
        Some(n) => Ok(FactorId::L2_3odd { n }),
        None => Ok(FactorId::OtherNonabelianSimple { order }),
    }
}

/// Belt-and-braces spectrum check: the set of element orders of the section
/// matches that of the reference construction of L2(3^(2n+1)).
pub fn spectrum_matches_l2(sec: &Section, n: u32, cfg: &Config) -> Result<bool> {
    let q = 3u64.pow(2 * n + 1);
    let reference = construct(&GroupSpec::Psl2 { q }, cfg)?;
    let g = sec.as_group(cfg)?;
    Ok(element_order_set(&g, cfg)? == element_order_set(&reference, cfg)?)
}

fn element_order_set(g: &Group, cfg: &Config) -> Result<std::collections::BTreeSet<u64>> {
    let mut out = std::collections::BTreeSet::new();
    g.for_each_element_capped(cfg.cap_order, &mut |x| {
        out.insert(x.order());
        true
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_nilpotent, is_solvable, p_part};

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn field_f27_arithmetic() {
        let fld = Field::new(3, 3).unwrap();
        assert_eq!(fld.q, 27);
        assert_eq!(fld.modulus, vec![1, 2, 0]); // pinned: x^3 + 2x + 1
        for a in 0..27 {
            assert_eq!(fld.add(a, fld.neg(a)), 0);
            if a != 0 {
                assert_eq!(fld.mul(a, fld.inv(a).unwrap()), 1);
                assert_eq!(fld.pow(a, 26), 1);
            }
        }
        let prim = fld.primitive_element();
        let mut seen = std::collections::HashSet::new();
        let mut x = 1;
        for _ in 0..26 {
            x = fld.mul(x, prim);
            seen.insert(x);
        }
        assert_eq!(seen.len(), 26);
    }

    #[test]
    fn least_irreducibles_match_table() {
        for f in 1..=7 {
            assert_eq!(
                least_irreducible(3, f).unwrap(),
                F3_MODULI[f as usize - 1].to_vec()
            );
        }
        assert_eq!(least_irreducible(5, 2).unwrap(), vec![2, 0]); // x^2 + 2
    }

    #[test]
    fn classic_family_orders() {
        let cases: [(GroupSpec, u128); 7] = [
            (GroupSpec::Symmetric { n: 5 }, 120),
            (GroupSpec::Alternating { n: 6 }, 360),
            (GroupSpec::Cyclic { m: 12 }, 12),
            (GroupSpec::Dihedral { m: 7 }, 14),
            (GroupSpec::Frobenius { p: 7, k: 3 }, 21),
            (GroupSpec::Frobenius { p: 11, k: 5 }, 55),
            (GroupSpec::Cyclic { m: 1 }, 1),
        ];
        for (spec, order) in cases {
            assert_eq!(construct(&spec, &cfg()).unwrap().order(), order, "{spec}");
        }
    }

    #[test]
    fn frobenius_is_solvable_not_nilpotent() {
        let f21 = construct(&GroupSpec::Frobenius { p: 7, k: 3 }, &cfg()).unwrap();
        assert!(is_solvable(&f21).unwrap());
        assert!(!is_nilpotent(&f21).unwrap());
    }

    #[test]
    fn psl2_orders() {
        for (q, order) in [(5u64, 60u128), (7, 168), (9, 360), (11, 660), (13, 1092)] {
            let g = construct(&GroupSpec::Psl2 { q }, &cfg()).unwrap();
            assert_eq!(g.degree(), q as usize + 1);
            assert_eq!(g.order(), order);
        }
    }

    #[test]
    fn psl2_27_and_psigma() {
        let g = construct(&GroupSpec::Psl2 { q: 27 }, &cfg()).unwrap();
        assert_eq!(g.degree(), 28);
        assert_eq!(g.order(), 9828);

        let gs = construct(&GroupSpec::PsigmaL2 { p: 3, f: 3 }, &cfg()).unwrap();
        assert_eq!(gs.degree(), 28);
        assert_eq!(gs.order(), 29484);
        assert_eq!(p_part(29484, 3), 81);
        assert!(g.is_subgroup_of(&gs));
    }

    #[test]
    fn frobenius_element_normalizes_psl2() {
        let fld = Field::new(3, 3).unwrap();
        let phi = frobenius_perm(&fld).unwrap();
        assert_eq!(phi.order(), 3);
        let g = construct(&GroupSpec::Psl2 { q: 27 }, &cfg()).unwrap();
        for s in g.generators() {
            assert!(g.contains(&phi.conjugate(s)).unwrap());
        }
    }

    #[test]
    fn small_psl2_simple() {
        use crate::structure::normal_subgroups;
        for q in [5u64, 7, 9, 11, 13] {
            let g = construct(&GroupSpec::Psl2 { q }, &cfg()).unwrap();
            assert_eq!(normal_subgroups(&g, &cfg()).unwrap().len(), 2, "q={q}");
        }
    }

    #[test]
    fn l2_order_roundtrip() {
        assert_eq!(is_l2_3odd_order(9828), Some(1));
        assert_eq!(is_l2_3odd_order(360), None);
        assert_eq!(is_l2_3odd_order(1), None);
        for n in 1..=5 {
            assert_eq!(is_l2_3odd_order(l2_3odd_order(n)), Some(n));
        }
    }

    #[test]
    fn identify_small_factors() {
        let z3 = construct(&GroupSpec::Cyclic { m: 3 }, &cfg()).unwrap();
        let sec = Section::new(&z3, z3.clone(), Group::trivial(3)).unwrap();
        assert_eq!(
            identify_factor(&sec, &cfg()).unwrap(),
            FactorId::CyclicPrime { p: 3 }
        );

        let a6 = construct(&GroupSpec::Alternating { n: 6 }, &cfg()).unwrap();
        let sec = Section::new(&a6, a6.clone(), Group::trivial(6)).unwrap();
        assert_eq!(
            identify_factor(&sec, &cfg()).unwrap(),
            FactorId::OtherNonabelianSimple { order: 360 }
        );

        let s4 = construct(&GroupSpec::Symmetric { n: 4 }, &cfg()).unwrap();
        let sec = Section::new(&s4, s4.clone(), Group::trivial(4)).unwrap();
        assert!(matches!(
            identify_factor(&sec, &cfg()),
            Err(Error::SectionNotSimple { order: 24 })
        ));
    }

    #[test]
    fn identify_psl2_27() {
        let g = construct(&GroupSpec::Psl2 { q: 27 }, &cfg()).unwrap();
        let sec = Section::new(&g, g.clone(), Group::trivial(28)).unwrap();
        assert_eq!(identify_factor(&sec, &cfg()).unwrap(), FactorId::L2_3odd { n: 1 });
        assert!(spectrum_matches_l2(&sec, 1, &cfg()).unwrap());
    }

    #[test]
    fn invalid_parameters_rejected() {
        for spec in [
            GroupSpec::Psl2 { q: 4 },
            GroupSpec::Psl2 { q: 6 },
            GroupSpec::Psl2 { q: 3 },
            GroupSpec::Frobenius { p: 7, k: 4 },
            GroupSpec::Frobenius { p: 8, k: 7 },
            GroupSpec::Dihedral { m: 2 },
            GroupSpec::Cyclic { m: 0 },
        ] {
            assert!(matches!(
                construct(&spec, &cfg()),
                Err(Error::InvalidParameter(_))
            ));
        }
    }

    #[test]
    fn spec_json_roundtrip() {
        let spec = GroupSpec::PsigmaL2 { p: 3, f: 3 };
        let s = serde_json::to_string(&spec).unwrap();
        assert_eq!(s, r#"{"family":"psigma_l2","p":3,"f":3}"#);
        assert_eq!(serde_json::from_str::<GroupSpec>(&s).unwrap(), spec);
    }
}
