//! Structural subgroup computations: normal closure, derived and lower
//! central series, normalizers, centralizers, conjugacy classes, the normal
//! subgroup lattice, Sylow subgroups and the p'-core.
//!
//! Everything here is correctness-first element scanning with chain
//! membership; the enumeration cap makes the cost explicit.

use std::collections::HashSet;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

/// Smallest normal subgroup of `g` containing `seeds`.
pub fn normal_closure(g: &Group, seeds: &[Perm]) -> Result<Group> {
    for s in seeds {
        if !g.contains(s)? {
            return Err(Error::NotInGroup);
        }
    }
    let mut h = Group::from_member_stream(g.degree(), seeds.iter().cloned());
    loop {
        let mut grew = false;
        'scan: for x in g.generators() {
            for s in h.generators().to_vec() {
                let c = x.conjugate(&s);
                if !h.contains_unchecked(&c) {
                    h = h.adjoin(&c);
                    grew = true;
                    continue 'scan;
                }
            }
        }
        if !grew {
            return Ok(h);
        }
    }
}

fn commutator(a: &Perm, b: &Perm) -> Perm {
    a.inverse().compose(&b.inverse()).compose(a).compose(b)
}

/// Derived subgroup: normal closure of pairwise generator commutators.
pub fn derived_subgroup(g: &Group) -> Result<Group> {
    let mut comms = Vec::new();
    for a in g.generators() {
        for b in g.generators() {
            let c = commutator(a, b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

/// G >= G' >= G'' >= ... down to stabilization.
pub fn derived_series(g: &Group) -> Result<Vec<Group>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last)?;
        if next.order() == last.order() {
            break;
        }
        series.push(next);
        if series.last().unwrap().is_trivial() {
            break;
        }
    }
    Ok(series)
}

pub fn is_solvable(g: &Group) -> Result<bool> {
    Ok(derived_series(g)?.last().unwrap().is_trivial())
}

/// G >= [G,G] >= [G,[G,G]] >= ... down to stabilization.
pub fn lower_central_series(g: &Group) -> Result<Vec<Group>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let mut comms = Vec::new();
        for a in g.generators() {
            for b in last.generators() {
                let c = commutator(a, b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        let next = normal_closure(g, &comms)?;
        if next.order() == last.order() {
            break;
        }
        series.push(next);
        if series.last().unwrap().is_trivial() {
            break;
        }
    }
    Ok(series)
}

pub fn is_nilpotent(g: &Group) -> Result<bool> {
    Ok(lower_central_series(g)?.last().unwrap().is_trivial())
}

/// N_G(H), by scanning `elements(G)` and testing conjugated generators
/// against the element set of H.
pub fn normalizer(g: &Group, h: &Group, cfg: &Config) -> Result<Group> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H not contained in G".into()));
    }
    let h_set = h.element_set(cfg.cap_order)?;
    let mut kept: Vec<Perm> = Vec::new();
    g.for_each_element_capped(cfg.cap_order, &mut |x| {
        let normalizes = h
            .generators()
            .iter()
            .all(|s| h_set.contains(&x.conjugate(s)));
        if normalizes {
            kept.push(x.clone());
        }
        true
    })?;
    Ok(Group::from_member_stream(g.degree(), kept))
}

/// C_G(H) = elements of G commuting with every generator of H.
pub fn centralizer(g: &Group, h: &Group, cfg: &Config) -> Result<Group> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H not contained in G".into()));
    }
    let mut kept: Vec<Perm> = Vec::new();
    g.for_each_element_capped(cfg.cap_order, &mut |x| {
        if h.generators().iter().all(|s| x.compose(s) == s.compose(x)) {
            kept.push(x.clone());
        }
        true
    })?;
    Ok(Group::from_member_stream(g.degree(), kept))
}

/// A intersect B as a group, by scanning the smaller factor.
pub fn intersection(a: &Group, b: &Group, cfg: &Config) -> Result<Group> {
    let (small, big) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let mut kept = Vec::new();
    small.for_each_element_capped(cfg.cap_order, &mut |x| {
        if big.contains_unchecked(x) {
            kept.push(x.clone());
        }
        true
    })?;
    Ok(Group::from_member_stream(a.degree(), kept))
}

/// Partition of the elements of `g` into conjugation orbits, in deterministic
/// order (classes keyed by their first element in enumeration order).
pub fn conjugacy_classes(g: &Group, cfg: &Config) -> Result<Vec<Vec<Perm>>> {
    let elements = g.elements(cfg)?;
    let mut index: std::collections::HashMap<&Perm, usize> = Default::default();
    for (i, e) in elements.iter().enumerate() {
        index.insert(e, i);
    }
    let mut visited = vec![false; elements.len()];
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if visited[start] {
            continue;
        }
        let mut class = vec![elements[start].clone()];
        visited[start] = true;
        let mut head = 0;
        while head < class.len() {
            let cur = class[head].clone();
            for x in g.generators() {
                let c = x.conjugate(&cur);
                let ci = *index.get(&c).expect("conjugate stays in group");
                if !visited[ci] {
                    visited[ci] = true;
                    class.push(c);
                }
            }
            head += 1;
        }
        classes.push(class);
    }
    Ok(classes)
}

/// All normal subgroups of `g`: join-closure of the normal closures of
/// conjugacy classes, plus the trivial group.
pub fn normal_subgroups(g: &Group, cfg: &Config) -> Result<Vec<Group>> {
    let classes = conjugacy_classes(g, cfg)?;
    let mut normals: Vec<Group> = vec![Group::trivial(g.degree())];
    let push_unique = |normals: &mut Vec<Group>, n: Group| -> bool {
        if normals.iter().any(|m| m.same_subgroup(&n)) {
            false
        } else {
            normals.push(n);
            true
        }
    };
    for class in &classes {
        if class[0].is_identity() {
            continue;
        }
        let closure = normal_closure(g, &class[0..1])?;
        push_unique(&mut normals, closure);
    }
    // close under joins
    loop {
        let mut added = false;
        let snapshot = normals.len();
        for i in 0..snapshot {
            for j in (i + 1)..snapshot {
                if normals[i].is_subgroup_of(&normals[j])
                    || normals[j].is_subgroup_of(&normals[i])
                {
                    continue;
                }
                let mut gens = normals[i].generators().to_vec();
                gens.extend_from_slice(normals[j].generators());
                let join = Group::with_known_order(g.degree(), gens, None);
                if push_unique(&mut normals, join) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    normals.sort_by_key(|n| n.order());
    Ok(normals)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization with multiplicities, ascending.
pub fn factorize(mut n: u128) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d as u64, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u128, p: u64) -> u128 {
    let mut part = 1u128;
    let mut m = n;
    while m % p as u128 == 0 {
        part *= p as u128;
        m /= p as u128;
    }
    part
}

fn is_p_group(order: u128, p: u64) -> bool {
    let mut m = order;
    while m % p as u128 == 0 {
        m /= p as u128;
    }
    m == 1
}

/// Sylow p-subgroup by normalizer ascent: seed with the smallest p-element,
/// then repeatedly adjoin the smallest p-element of N_G(H) \ H whose
/// adjunction stays a p-group.
pub fn sylow_subgroup(g: &Group, p: u64, cfg: &Config) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(Group::trivial(g.degree()));
    }
    // p-part power of an element: smallest witnesses win by enumeration order
    let p_element = |x: &Perm| -> Option<Perm> {
        let ord = x.order();
        let mut q = ord;
        while q % p == 0 {
            q /= p;
        }
        if q == ord {
            return None; // no p-part
        }
        let y = x.pow(q);
        if y.is_identity() {
            None
        } else {
            Some(y)
        }
    };

    let mut seed: Option<Perm> = None;
    g.for_each_element_capped(cfg.cap_order, &mut |x| {
        if let Some(y) = p_element(x) {
            match &seed {
                Some(s) if *s <= y => {}
                _ => seed = Some(y),
            }
        }
        true
    })?;
    let seed = seed.ok_or_else(|| Error::Internal("p divides |G| but no p-element".into()))?;
    let mut h = Group::from_member_stream(g.degree(), std::iter::once(seed));

    while h.order() < target {
        let n = normalizer(g, &h, cfg)?;
        let mut best: Option<Perm> = None;
        n.for_each_element_capped(cfg.cap_order, &mut |x| {
            if let Some(y) = p_element(x) {
                if !h.contains_unchecked(&y) {
                    if best.as_ref().map_or(true, |b| y < *b) {
                        // candidate must keep the extension a p-group
                        if is_p_group(h.adjoin(&y).order(), p) {
                            best = Some(y);
                        }
                    }
                }
            }
            true
        })?;
        match best {
            Some(y) => h = h.adjoin(&y),
            None => {
                return Err(Error::Internal(
                    "normalizer ascent stalled below the p-part".into(),
                ))
            }
        }
    }
    Ok(h)
}

/// O_{p'}(G): the largest normal subgroup of order coprime to p, verified
/// unique by containment of every coprime-order normal subgroup.
pub fn o_pprime(g: &Group, p: u64, cfg: &Config) -> Result<Group> {
    let normals = normal_subgroups(g, cfg)?;
    let coprime: Vec<&Group> = normals
        .iter()
        .filter(|n| n.order() % p as u128 != 0)
        .collect();
    let best = coprime
        .iter()
        .max_by_key(|n| n.order())
        .expect("trivial group is always coprime");
    for n in &coprime {
        if !n.is_subgroup_of(best) {
            return Err(Error::Internal(
                "coprime-order normal subgroups have no unique maximum".into(),
            ));
        }
    }
    Ok((*best).clone())
}

/// (order, element-order multiset, orbit-length multiset): a cheap conjugacy
/// invariant used to prefilter subgroup-conjugacy scans.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: u128,
    pub element_orders: Vec<u64>,
    pub orbit_lengths: Vec<u32>,
}

pub fn fingerprint(h: &Group, cfg: &Config) -> Result<Fingerprint> {
    let mut element_orders: Vec<u64> = Vec::with_capacity(h.order() as usize);
    h.for_each_element_capped(cfg.cap_order, &mut |x| {
        element_orders.push(x.order());
        true
    })?;
    element_orders.sort_unstable();
    let mut orbit_lengths = orbit_length_multiset(h);
    orbit_lengths.sort_unstable();
    Ok(Fingerprint {
        order: h.order(),
        element_orders,
        orbit_lengths,
    })
}

fn orbit_length_multiset(h: &Group) -> Vec<u32> {
    let d = h.degree();
    let mut seen = vec![false; d];
    let mut lens = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start as u32];
        seen[start] = true;
        let mut head = 0;
        while head < orbit.len() {
            let pt = orbit[head];
            for g in h.generators() {
                let img = g.apply(pt);
                if !seen[img as usize] {
                    seen[img as usize] = true;
                    orbit.push(img);
                }
            }
            head += 1;
        }
        lens.push(orbit.len() as u32);
    }
    lens
}

/// True iff `a` and `b` are conjugate subgroups of `g`. Callers should have
/// already matched fingerprints; this is the explicit conjugating-element scan.
pub fn subgroups_conjugate(g: &Group, a: &Group, b: &Group, cfg: &Config) -> Result<bool> {
    if a.order() != b.order() {
        return Ok(false);
    }
    let b_set: HashSet<Perm> = b.element_set(cfg.cap_order)?;
    let mut found = false;
    g.for_each_element_capped(cfg.cap_order, &mut |x| {
        if a.generators()
            .iter()
            .all(|s| b_set.contains(&x.conjugate(s)))
        {
            found = true;
            return false;
        }
        true
    })?;
    Ok(found)
}
