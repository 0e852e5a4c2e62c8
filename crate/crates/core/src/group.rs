use std::collections::HashSet;

use rand::Rng;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Preference for base-point selection when building a stabilizer chain.
///
/// Used by homomorphism machinery: evaluation chains stabilize source
/// coordinates first, preimage chains stabilize target coordinates first.
#[derive(Debug, Clone, Copy)]
pub enum BasePref {
    Smallest,
    /// Prefer points in `[lo, hi)`; fall back to the smallest moved point.
    RangeFirst(usize, usize),
}

impl BasePref {
    fn choose(&self, p: &Perm) -> u32 {
        match *self {
            BasePref::Smallest => p.first_moved_point().expect("non-identity"),
            BasePref::RangeFirst(lo, hi) => {
                let imgs = p.images();
                for i in lo..hi.min(imgs.len()) {
                    if imgs[i] != i as u32 {
                        return i as u32;
                    }
                }
                p.first_moved_point().expect("non-identity")
            }
        }
    }
}

struct Level {
    base: u32,
    gens: Vec<Perm>,
    /// Orbit of `base` under `gens`, in BFS order; `orbit[0] == base`.
    orbit: Vec<u32>,
    /// For each orbit position > 0: (generator index, parent orbit position).
    parent: Vec<(u32, u32)>,
    /// point -> orbit position, or -1.
    pos: Vec<i32>,
}

impl Level {
    fn new(degree: usize, base: u32) -> Level {
        let mut l = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            parent: Vec::new(),
            pos: vec![-1; degree],
        };
        l.recompute_orbit();
        l
    }

    fn recompute_orbit(&mut self) {
        for &p in &self.orbit {
            self.pos[p as usize] = -1;
        }
        self.orbit.clear();
        self.parent.clear();
        self.orbit.push(self.base);
        self.parent.push((u32::MAX, u32::MAX));
        self.pos[self.base as usize] = 0;
        let mut head = 0;
        while head < self.orbit.len() {
            let pt = self.orbit[head];
            for (gi, g) in self.gens.iter().enumerate() {
                let img = g.apply(pt);
                if self.pos[img as usize] < 0 {
                    self.pos[img as usize] = self.orbit.len() as i32;
                    self.orbit.push(img);
                    self.parent.push((gi as u32, head as u32));
                }
            }
            head += 1;
        }
    }

    /// Transversal element mapping `base` to the orbit point at `position`.
    fn transversal(&self, degree: usize, position: usize) -> Perm {
        let mut path = Vec::new();
        let mut cur = position;
        while cur != 0 {
            let (gi, par) = self.parent[cur];
            path.push(gi);
            cur = par as usize;
        }
        let mut u = Perm::identity(degree);
        for &gi in path.iter().rev() {
            u = u.compose(&self.gens[gi as usize]);
        }
        u
    }
}

/// Base and strong generating set, built by deterministic Schreier-Sims.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Deterministic Schreier-Sims. `target_order`, when known (quotient and
    /// section images), lets the closure loop stop as soon as the product of
    /// basic orbit lengths reaches it.
    pub fn build(
        degree: usize,
        input_gens: &[Perm],
        pref: BasePref,
        target_order: Option<u128>,
    ) -> StabChain {
        StabChain::build_seeded(degree, input_gens, pref, &[], target_order)
    }

    /// As `build`, but force the given points to head the base sequence.
    /// Preimage chains seed a base of the target group here so that every
    /// level below the prefix belongs to the kernel.
    pub fn build_seeded(
        degree: usize,
        input_gens: &[Perm],
        pref: BasePref,
        seed_base: &[u32],
        target_order: Option<u128>,
    ) -> StabChain {
        let mut gens: Vec<Perm> = Vec::new();
        for g in input_gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        if gens.is_empty() {
            return chain;
        }
        for &b in seed_base {
            chain.levels.push(Level::new(degree, b));
        }

        // Base points: every generator must move at least one base point.
        for g in &gens {
            if chain
                .levels
                .iter()
                .all(|l| g.apply(l.base) == l.base)
            {
                chain.levels.push(Level::new(degree, pref.choose(g)));
            }
        }
        // Distribute generators: level i holds those fixing the first i base points.
        let bases: Vec<u32> = chain.levels.iter().map(|l| l.base).collect();
        for g in &gens {
            for (i, level) in chain.levels.iter_mut().enumerate() {
                if bases[..i].iter().all(|&b| g.apply(b) == b) {
                    level.gens.push(g.clone());
                } else {
                    break;
                }
            }
        }
        for l in &mut chain.levels {
            l.recompute_orbit();
        }

        chain.close(pref, target_order);
        chain
    }

    fn reached(&self, target: Option<u128>) -> bool {
        match target {
            Some(t) => self.order() >= t,
            None => false,
        }
    }

    /// Closure loop: verify (and repair) that strong generators at each level
    /// generate the stabilizer of the preceding base points.
    fn close(&mut self, pref: BasePref, target: Option<u128>) {
        let mut i = self.levels.len() as i64 - 1;
        'outer: while i >= 0 {
            if self.reached(target) {
                return;
            }
            let iu = i as usize;
            let orbit_len = self.levels[iu].orbit.len();
            let gens_len = self.levels[iu].gens.len();
            for oi in 0..orbit_len {
                let u = self.levels[iu].transversal(self.degree, oi);
                for gi in 0..gens_len {
                    let sg = {
                        let level = &self.levels[iu];
                        let s = &level.gens[gi];
                        let us = u.compose(s);
                        let tgt = us.apply(level.base);
                        let tpos = level.pos[tgt as usize];
                        debug_assert!(tpos >= 0);
                        let u2 = level.transversal(self.degree, tpos as usize);
                        us.compose(&u2.inverse())
                    };
                    if sg.is_identity() {
                        continue;
                    }
                    let (res, mut j) = self.strip_from(iu + 1, sg);
                    if res.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        self.levels.push(Level::new(self.degree, pref.choose(&res)));
                        j = self.levels.len() - 1;
                    }
                    for l in (iu + 1)..=j {
                        self.levels[l].gens.push(res.clone());
                        self.levels[l].recompute_orbit();
                    }
                    if self.reached(target) {
                        return;
                    }
                    i = j as i64;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    /// Sift `p` through levels starting at `start`. Returns the residue and
    /// the first level index at which sifting could not continue
    /// (`levels.len()` when the residue fixes every base point).
    fn strip_from(&self, start: usize, p: Perm) -> (Perm, usize) {
        let mut cur = p;
        for l in start..self.levels.len() {
            let level = &self.levels[l];
            let beta = cur.apply(level.base);
            let bpos = level.pos[beta as usize];
            if bpos < 0 {
                return (cur, l);
            }
            if bpos > 0 {
                let u = level.transversal(self.degree, bpos as usize);
                cur = cur.compose(&u.inverse());
            }
        }
        (cur, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level_gens(&self, i: usize) -> &[Perm] {
        &self.levels[i].gens
    }

    pub fn level_base(&self, i: usize) -> u32 {
        self.levels[i].base
    }

    /// Transversal element of level `i` mapping the base point to `point`,
    /// or `None` when `point` is outside the basic orbit.
    pub fn level_transversal_to(&self, i: usize, point: u32) -> Option<Perm> {
        let level = &self.levels[i];
        let pos = level.pos[point as usize];
        if pos < 0 {
            return None;
        }
        Some(level.transversal(self.degree, pos as usize))
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        let (res, _) = self.strip_from(0, p.clone());
        res.is_identity()
    }

    /// The transversal elements of a level, ordered by orbit position. Used
    /// by homomorphism evaluation which mirrors products level by level.
    pub fn level_transversals(&self, i: usize) -> Vec<Perm> {
        let level = &self.levels[i];
        (0..level.orbit.len())
            .map(|p| level.transversal(self.degree, p))
            .collect()
    }

    /// Streams every element exactly once: products u_k ... u_1 over basic
    /// transversals, deepest level outermost, composed along the Schreier
    /// trees so each element costs one composition.
    pub fn for_each_element<F: FnMut(&Perm) -> bool>(&self, f: &mut F) -> bool {
        if self.levels.is_empty() {
            return f(&Perm::identity(self.degree));
        }
        let children: Vec<Vec<Vec<(usize, u32)>>> = self
            .levels
            .iter()
            .map(|l| {
                let mut ch = vec![Vec::new(); l.orbit.len()];
                for (c, &(gi, par)) in l.parent.iter().enumerate().skip(1) {
                    ch[par as usize].push((c, gi));
                }
                ch
            })
            .collect();
        self.walk(self.levels.len() - 1, &Perm::identity(self.degree), &children, f)
    }

    fn walk<F: FnMut(&Perm) -> bool>(
        &self,
        level: usize,
        prefix: &Perm,
        children: &[Vec<Vec<(usize, u32)>>],
        f: &mut F,
    ) -> bool {
        self.walk_tree(level, 0, prefix, children, f)
    }

    fn walk_tree<F: FnMut(&Perm) -> bool>(
        &self,
        level: usize,
        pos: usize,
        cur: &Perm,
        children: &[Vec<Vec<(usize, u32)>>],
        f: &mut F,
    ) -> bool {
        let keep_going = if level == 0 {
            f(cur)
        } else {
            self.walk(level - 1, cur, children, f)
        };
        if !keep_going {
            return false;
        }
        for &(child, gi) in &children[level][pos] {
            let next = cur.compose(&self.levels[level].gens[gi as usize]);
            if !self.walk_tree(level, child, &next, children, f) {
                return false;
            }
        }
        true
    }

    /// Exactly uniform: an independent uniform orbit point per level.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        let mut acc = Perm::identity(self.degree);
        for l in (0..self.levels.len()).rev() {
            let level = &self.levels[l];
            let pick = rng.random_range(0..level.orbit.len());
            acc = acc.compose(&level.transversal(self.degree, pick));
        }
        acc
    }
}

/// A permutation group: generator set plus stabilizer chain.
///
/// Immutable after construction; all queries are read-only.
pub struct Group {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
}

impl Clone for Group {
    fn clone(&self) -> Group {
        // Chains are deterministic functions of (degree, gens, pref), so a
        // rebuild round-trips exactly.
        Group::with_known_order(self.degree, self.gens.clone(), Some(self.order()))
    }
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Group(degree={}, order={}, gens={})",
            self.degree,
            self.order(),
            self.gens.len()
        )
    }
}

impl Group {
    /// Public constructor; enforces the degree cap.
    pub fn from_generators(degree: usize, gens: Vec<Perm>, cfg: &Config) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be >= 1".into()));
        }
        if degree > cfg.cap_degree {
            return Err(Error::DegreeCapExceeded {
                degree,
                cap: cfg.cap_degree,
            });
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(Group::with_known_order(degree, gens, None))
    }

    /// Internal constructor for coset and diagonal actions whose degree is
    /// governed by the coset cap rather than the input-degree cap.
    pub(crate) fn with_known_order(
        degree: usize,
        gens: Vec<Perm>,
        order: Option<u128>,
    ) -> Group {
        let chain = StabChain::build(degree, &gens, BasePref::Smallest, order);
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect::<Vec<_>>();
        Group {
            degree,
            gens,
            chain,
        }
    }

    pub fn trivial(degree: usize) -> Group {
        Group {
            degree,
            gens: Vec::new(),
            chain: StabChain::build(degree, &[], BasePref::Smallest, None),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.chain.contains(p))
    }

    /// Membership without the degree check, for internal hot paths.
    #[inline]
    pub(crate) fn contains_unchecked(&self, p: &Perm) -> bool {
        self.chain.contains(p)
    }

    /// All elements, exactly once, in deterministic order. Errors if the
    /// order exceeds `cap` so brute-force callers fail loudly.
    pub fn elements_capped(&self, cap: u128) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > cap {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        let mut out = Vec::with_capacity(order as usize);
        self.chain.for_each_element(&mut |p| {
            out.push(p.clone());
            true
        });
        Ok(out)
    }

    pub fn elements(&self, cfg: &Config) -> Result<Vec<Perm>> {
        self.elements_capped(cfg.cap_order)
    }

    /// Streaming enumeration under a cap; the callback returns `false` to stop.
    pub fn for_each_element_capped<F: FnMut(&Perm) -> bool>(
        &self,
        cap: u128,
        f: &mut F,
    ) -> Result<()> {
        let order = self.order();
        if order > cap {
            return Err(Error::OrderCapExceeded { order, cap });
        }
        self.chain.for_each_element(f);
        Ok(())
    }

    pub fn element_set(&self, cap: u128) -> Result<HashSet<Perm>> {
        Ok(self.elements_capped(cap)?.into_iter().collect())
    }

    /// Exactly uniform over the group, deterministic for a fixed seed.
    pub fn uniform_random_element(&self, seed: u64) -> Perm {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        self.chain.random_element(&mut rng)
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        self.chain.random_element(rng)
    }

    /// The group generated by this group's generators plus `p`.
    pub fn adjoin(&self, p: &Perm) -> Group {
        let mut gens = self.gens.clone();
        gens.push(p.clone());
        Group::with_known_order(self.degree, gens, None)
    }

    /// True iff every generator of `self` lies in `other` (same degree).
    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree
            && self.gens.iter().all(|g| other.contains_unchecked(g))
    }

    /// Equality as subgroups of the symmetric group.
    pub fn same_subgroup(&self, other: &Group) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Builds a group from a stream of candidate elements, keeping only the
    /// ones not already generated. Keeps generator sets small when a scan
    /// yields many members.
    pub fn from_member_stream<I: IntoIterator<Item = Perm>>(degree: usize, iter: I) -> Group {
        let mut g = Group::trivial(degree);
        for p in iter {
            if !g.contains_unchecked(&p) {
                g = g.adjoin(&p);
            }
        }
        g
    }
}
