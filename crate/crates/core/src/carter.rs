//! Nilpotent-subgroup enumeration up to conjugacy, and Carter subgroups
//! (nilpotent self-normalizing subgroups).

use std::collections::VecDeque;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;
use crate::structure::{
    fingerprint, is_nilpotent, is_prime, normalizer, subgroups_conjugate, Fingerprint,
};

/// A verified Carter subgroup with the flags the main-theorem checks need.
pub struct CarterWitness {
    pub ambient: Group,
    pub k: Group,
    pub odd_order: bool,
    pub three_divides: bool,
}

impl CarterWitness {
    pub fn new(ambient: &Group, k: Group) -> CarterWitness {
        let order = k.order();
        CarterWitness {
            ambient: ambient.clone(),
            k,
            odd_order: order % 2 == 1,
            three_divides: order % 3 == 0,
        }
    }
}

/// True iff K is nilpotent and self-normalizing in G.
pub fn is_carter(g: &Group, k: &Group, cfg: &Config) -> Result<bool> {
    if !k.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("K not contained in G".into()));
    }
    if !is_nilpotent(k)? {
        return Ok(false);
    }
    Ok(normalizer(g, k, cfg)?.order() == k.order())
}

struct ClassList {
    classes: Vec<(Group, Fingerprint)>,
}

impl ClassList {
    /// Returns the index if `h` starts a new class, None if conjugate to an
    /// existing representative.
    fn try_add(&mut self, g: &Group, h: Group, cfg: &Config) -> Result<Option<usize>> {
        let fp = fingerprint(&h, cfg)?;
        for (rep, rep_fp) in &self.classes {
            if *rep_fp == fp && subgroups_conjugate(g, rep, &h, cfg)? {
                return Ok(None);
            }
        }
        if self.classes.len() >= cfg.cap_classes {
            return Err(Error::ClassCapExceeded {
                cap: cfg.cap_classes,
            });
        }
        self.classes.push((h, fp));
        Ok(Some(self.classes.len() - 1))
    }
}

/// Representatives of all conjugacy classes of nontrivial nilpotent
/// subgroups, by normalizer-bounded cyclic extension with a nilpotency prune.
///
/// Nilpotent targets are always reachable through nilpotent intermediates
/// (every subgroup of a nilpotent group is subnormal in it), so the prune
/// loses nothing; the acceptance suite cross-checks this against a
/// brute-force oracle.
pub fn nilpotent_subgroup_classes(g: &Group, cfg: &Config) -> Result<Vec<Group>> {
    subgroup_classes_by_cyclic_extension(g, cfg, true)
}

/// Shared engine: with `nilpotent_only = false` this enumerates every
/// solvable subgroup class (the oracle configuration; sufficient for Carter
/// search because nilpotent groups are solvable).
pub fn subgroup_classes_by_cyclic_extension(
    g: &Group,
    cfg: &Config,
    nilpotent_only: bool,
) -> Result<Vec<Group>> {
    if g.order() > cfg.cap_nilpotent {
        return Err(Error::OrderCapExceeded {
            order: g.order(),
            cap: cfg.cap_nilpotent,
        });
    }
    let elements = g.elements_capped(cfg.cap_nilpotent)?;
    let mut list = ClassList {
        classes: Vec::new(),
    };
    let mut queue: VecDeque<usize> = VecDeque::new();

    // seed with prime-order cyclic subgroups up to conjugacy
    for x in &elements {
        if is_prime(x.order()) {
            let h = Group::from_member_stream(g.degree(), std::iter::once(x.clone()));
            if let Some(i) = list.try_add(g, h, cfg)? {
                queue.push_back(i);
            }
        }
    }

    while let Some(i) = queue.pop_front() {
        let h = list.classes[i].0.clone();
        let n = normalizer(g, &h, cfg)?;
        let mut local: Vec<Group> = Vec::new();
        let mut cands: Vec<Perm> = Vec::new();
        n.for_each_element_capped(cfg.cap_order, &mut |x| {
            cands.push(x.clone());
            true
        })?;
        for x in cands {
            if h.contains_unchecked(&x) {
                continue;
            }
            // cyclic extension: some prime power of x falls into H
            let extends = factor_primes(x.order())
                .iter()
                .any(|&p| h.contains_unchecked(&x.pow(p)));
            if !extends {
                continue;
            }
            let e = h.adjoin(&x);
            if local.iter().any(|l| l.same_subgroup(&e)) {
                continue;
            }
            if nilpotent_only && !is_nilpotent(&e)? {
                continue;
            }
            local.push(e.clone());
            if let Some(j) = list.try_add(g, e, cfg)? {
                queue.push_back(j);
            }
        }
    }

    let mut out: Vec<(Group, Fingerprint)> = list.classes;
    out.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(out.into_iter().map(|(g, _)| g).collect())
}

fn factor_primes(n: u64) -> Vec<u64> {
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

/// All Carter subgroup classes of G (possibly none).
pub fn carter_subgroups(g: &Group, cfg: &Config) -> Result<Vec<CarterWitness>> {
    let mut out = Vec::new();
    for k in nilpotent_subgroup_classes(g, cfg)? {
        if normalizer(g, &k, cfg)?.order() == k.order() {
            out.push(CarterWitness::new(g, k));
        }
    }
    // the trivial subgroup is excluded from enumeration but is a Carter
    // subgroup of the trivial group
    if g.is_trivial() {
        out.push(CarterWitness::new(g, Group::trivial(g.degree())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::sylow_subgroup;

    fn cfg() -> Config {
        Config::default()
    }

    fn grp(degree: usize, cycles: &[&[Vec<u32>]]) -> Group {
        let gens = cycles
            .iter()
            .map(|c| Perm::from_cycles(degree, c).unwrap())
            .collect();
        Group::from_generators(degree, gens, &cfg()).unwrap()
    }

    fn s4() -> Group {
        grp(4, &[&[vec![0, 1, 2, 3]], &[vec![0, 1]]])
    }

    fn s3() -> Group {
        grp(3, &[&[vec![0, 1, 2]], &[vec![0, 1]]])
    }

    fn a5() -> Group {
        grp(5, &[&[vec![0, 1, 2]], &[vec![0, 1, 2, 3, 4]]])
    }

    fn frobenius21() -> Group {
        let t = Perm::new((0..7).map(|i| (i + 1) % 7).collect()).unwrap();
        let m = Perm::new((0..7).map(|i| (2 * i) % 7).collect()).unwrap();
        Group::from_generators(7, vec![t, m], &cfg()).unwrap()
    }

    #[test]
    fn is_carter_examples() {
        let g = s4();
        let d8 = sylow_subgroup(&g, 2, &cfg()).unwrap();
        assert!(is_carter(&g, &d8, &cfg()).unwrap());

        let a3 = grp(3, &[&[vec![0, 1, 2]]]);
        assert!(!is_carter(&s3(), &a3, &cfg()).unwrap());
    }

    #[test]
    fn nilpotent_classes_s3() {
        let mut orders: Vec<u128> = nilpotent_subgroup_classes(&s3(), &cfg())
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);
    }

    #[test]
    fn nilpotent_classes_z4() {
        let z4 = grp(4, &[&[vec![0, 1, 2, 3]]]);
        let mut orders: Vec<u128> = nilpotent_subgroup_classes(&z4, &cfg())
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        orders.sort();
        assert_eq!(orders, vec![2, 4]);
    }

    #[test]
    fn nilpotent_classes_a5() {
        let mut orders: Vec<u128> = nilpotent_subgroup_classes(&a5(), &cfg())
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3, 4, 5]);
    }

    #[test]
    fn carter_of_s4_is_d8() {
        let ws = carter_subgroups(&s4(), &cfg()).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].k.order(), 8);
        assert!(!ws[0].odd_order);
        // re-verify witness invariants independently of the search path
        assert!(is_nilpotent(&ws[0].k).unwrap());
        assert!(normalizer(&s4(), &ws[0].k, &cfg())
            .unwrap()
            .same_subgroup(&ws[0].k));
    }

    #[test]
    fn a5_has_no_carter_subgroup() {
        assert!(carter_subgroups(&a5(), &cfg()).unwrap().is_empty());
    }

    #[test]
    fn frobenius21_carter_is_sylow3() {
        let ws = carter_subgroups(&frobenius21(), &cfg()).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].k.order(), 3);
        assert!(ws[0].odd_order);
        assert!(ws[0].three_divides);
    }

    #[test]
    fn solvable_groups_single_class() {
        // classical Carter theorem as a cross-check of the enumeration
        let z6 = grp(6, &[&[vec![0, 1, 2, 3, 4, 5]]]);
        let d8 = grp(4, &[&[vec![0, 1, 2, 3]], &[vec![1, 3]]]);
        for g in [s3(), s4(), z6, d8, frobenius21()] {
            assert_eq!(carter_subgroups(&g, &cfg()).unwrap().len(), 1, "{g:?}");
        }
    }
}
