use std::collections::HashMap;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hom::Epimorphism;
use crate::perm::Perm;

/// The right cosets of `B` in `A`, enumerated canonically.
///
/// Points are indexed by a breadth-first orbit of the identity coset under
/// `A`'s generators in their stored order, so the labelling is a pure
/// function of (A, B). That shared indexing is what lets induced automorphism
/// groups of the same section embed literally.
pub struct CosetSpace {
    reps: Vec<Perm>,
    index: HashMap<Perm, u32>,
    sub_elements: Option<Vec<Perm>>,
}

impl CosetSpace {
    pub fn new(a: &Group, b: &Group, cfg: &Config) -> Result<CosetSpace> {
        if !b.is_subgroup_of(a) {
            return Err(Error::NotSubgroup("B not contained in A".into()));
        }
        let index_count = a.order() / b.order();
        if index_count > cfg.cap_cosets {
            return Err(Error::CosetCapExceeded {
                index: index_count,
                cap: cfg.cap_cosets,
            });
        }
        let sub_elements = if b.is_trivial() {
            None
        } else {
            Some(b.elements_capped(cfg.cap_order)?)
        };
        let mut space = CosetSpace {
            reps: Vec::with_capacity(index_count as usize),
            index: HashMap::with_capacity(index_count as usize),
            sub_elements,
        };
        let id = Perm::identity(a.degree());
        let idkey = space.key(&id);
        space.index.insert(idkey, 0);
        space.reps.push(id);
        let mut head = 0;
        while head < space.reps.len() {
            let rep = space.reps[head].clone();
            for g in a.generators() {
                let cand = rep.compose(g);
                let key = space.key(&cand);
                if !space.index.contains_key(&key) {
                    space.index.insert(key, space.reps.len() as u32);
                    space.reps.push(cand);
                }
            }
            head += 1;
        }
        if space.reps.len() as u128 != index_count {
            return Err(Error::Internal(format!(
                "coset enumeration found {} cosets, expected {}",
                space.reps.len(),
                index_count
            )));
        }
        Ok(space)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, i: usize) -> &Perm {
        &self.reps[i]
    }

    /// Canonical key of the coset `Bg`: its lexicographically least element.
    fn key(&self, g: &Perm) -> Perm {
        match &self.sub_elements {
            None => g.clone(),
            Some(els) => els
                .iter()
                .map(|b| b.compose(g))
                .min()
                .expect("subgroup has elements"),
        }
    }

    pub fn point_of(&self, g: &Perm) -> Result<u32> {
        self.index
            .get(&self.key(g))
            .copied()
            .ok_or(Error::NotInGroup)
    }

    /// Point permutation of right multiplication: `Bg -> Bgx`.
    pub fn right_mult_perm(&self, x: &Perm) -> Result<Perm> {
        let images = self
            .reps
            .iter()
            .map(|r| self.point_of(&r.compose(x)))
            .collect::<Result<Vec<u32>>>()?;
        Perm::new(images)
    }

    /// Point permutation of the induced automorphism `Ba -> B x^-1 a x`.
    /// Requires `x` to normalize both `A` and `B`.
    pub fn conjugation_perm(&self, x: &Perm) -> Result<Perm> {
        let xi = x.inverse();
        let images = self
            .reps
            .iter()
            .map(|r| self.point_of(&xi.compose(r).compose(x)))
            .collect::<Result<Vec<u32>>>()?;
        Perm::new(images)
    }
}

/// The action of `G` on the right cosets of a normal subgroup `N`, returned
/// as the image group plus the natural epimorphism.
///
/// Two special cases keep degrees inside the caps: `N = G` yields the trivial
/// group on one point, and `N = 1` returns `G` itself with the identity map
/// (a faithful realization of `G/1` without inflating the degree).
pub fn quotient_action(g: &Group, n: &Group, cfg: &Config) -> Result<(Group, Epimorphism)> {
    if !n.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("N not contained in G".into()));
    }
    for x in g.generators() {
        for m in n.generators() {
            if !n.contains_unchecked(&x.conjugate(m)) {
                return Err(Error::NotNormal);
            }
        }
    }
    if n.order() == g.order() {
        let target = Group::trivial(1);
        let images = vec![Perm::identity(1); g.generators().len()];
        let epi = Epimorphism::new(g.clone(), target.clone(), images)?;
        return Ok((target, epi));
    }
    if n.is_trivial() {
        return Ok((g.clone(), Epimorphism::identity(g)));
    }
    let space = CosetSpace::new(g, n, cfg)?;
    let images = g
        .generators()
        .iter()
        .map(|x| space.right_mult_perm(x))
        .collect::<Result<Vec<Perm>>>()?;
    let order = g.order() / n.order();
    let target = Group::with_known_order(space.len(), images.clone(), Some(order));
    if target.order() != order {
        return Err(Error::Internal(
            "quotient action image order mismatch".into(),
        ));
    }
    let epi = Epimorphism::new(g.clone(), target.clone(), images)?;
    Ok((target, epi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    fn s4() -> Group {
        Group::from_generators(
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            ],
            &cfg(),
        )
        .unwrap()
    }

    fn v4() -> Group {
        Group::from_generators(
            4,
            vec![
                Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
            &cfg(),
        )
        .unwrap()
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let (q, epi) = quotient_action(&s4(), &v4(), &cfg()).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.degree(), 6);
        // kernel of the action is exactly V4
        let k = epi.kernel();
        assert!(k.same_subgroup(&v4()));
        // nonabelian: some pair of generator images fails to commute
        let a = &q.generators()[0];
        let b = &q.generators()[1];
        assert_ne!(a.compose(b), b.compose(a));
        // image of a 3-cycle has order 3 in the order-6 image
        let img = epi
            .apply(&Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap())
            .unwrap();
        assert_eq!(img.order(), 3);
        // identity maps to identity
        assert!(epi.apply(&Perm::identity(4)).unwrap().is_identity());
        // homomorphism law on random pairs
        let mut seed = 11u64;
        for _ in 0..100 {
            let x = s4().uniform_random_element(seed);
            let y = s4().uniform_random_element(seed + 1);
            seed += 2;
            assert_eq!(
                epi.apply(&x.compose(&y)).unwrap(),
                epi.apply(&x).unwrap().compose(&epi.apply(&y).unwrap())
            );
        }
    }

    #[test]
    fn quotient_by_self_is_trivial() {
        let g = s4();
        let (q, _) = quotient_action(&g, &g, &cfg()).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(q.degree(), 1);
    }

    #[test]
    fn z6_mod_z3_has_order_two() {
        let z6 = Group::from_generators(
            6,
            vec![Perm::from_cycles(6, &[vec![0, 1, 2, 3, 4, 5]]).unwrap()],
            &cfg(),
        )
        .unwrap();
        let z3 = Group::from_generators(
            6,
            vec![Perm::from_cycles(6, &[vec![0, 2, 4], vec![1, 3, 5]]).unwrap()],
            &cfg(),
        )
        .unwrap();
        let (q, _) = quotient_action(&z6, &z3, &cfg()).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn non_normal_rejected() {
        let h = Group::from_generators(
            4,
            vec![Perm::from_cycles(4, &[vec![0, 1]]).unwrap()],
            &cfg(),
        )
        .unwrap();
        assert!(matches!(
            quotient_action(&s4(), &h, &cfg()),
            Err(Error::NotNormal)
        ));
    }

    #[test]
    fn coset_cap_enforced() {
        let mut c = cfg();
        c.cap_cosets = 3;
        assert!(matches!(
            quotient_action(&s4(), &v4(), &c),
            Err(Error::CosetCapExceeded { .. })
        ));
    }
}
