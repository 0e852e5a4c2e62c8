//! Groups of induced automorphisms N_H(A/B), C_H(A/B), Aut_H(A/B).
//!
//! The image acts on all cosets of B in A under the canonical indexing of
//! `CosetSpace`, so Aut_H(A/B) is literally a subgroup of Aut_G(A/B) for
//! H <= G: both act on the same labelled points.

use crate::config::Config;
use crate::cosets::CosetSpace;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hom::Epimorphism;
use crate::perm::Perm;
use crate::series::Section;
use crate::structure::intersection;

/// The H-induced automorphism group of a section, with its normalizer part
/// and kernel.
pub struct InducedAutGroup {
    /// N_H(A/B) = N_H(A) `intersect` N_H(B).
    pub normalizer_part: Group,
    /// C_H(A/B): elements of the normalizer part acting trivially on the cosets.
    pub kernel: Group,
    /// Aut_H(A/B) on the cosets of B in A (point per coset, `Ba -> B x^-1 a x`).
    pub image: Group,
    /// The natural map N_H(A/B) -> Aut_H(A/B).
    pub epi: Epimorphism,
}

pub fn induced_aut(h: &Group, sec: &Section, cfg: &Config) -> Result<InducedAutGroup> {
    if !h.is_subgroup_of(&sec.ambient) {
        return Err(Error::NotSubgroup(
            "H not contained in the ambient group".into(),
        ));
    }
    let a_set = sec.a.element_set(cfg.cap_order)?;
    let b_set = sec.b.element_set(cfg.cap_order)?;

    // N_H(A/B) by element scan within H
    let mut kept: Vec<Perm> = Vec::new();
    h.for_each_element_capped(cfg.cap_order, &mut |x| {
        let ok = sec
            .a
            .generators()
            .iter()
            .all(|s| a_set.contains(&x.conjugate(s)))
            && sec
                .b
                .generators()
                .iter()
                .all(|s| b_set.contains(&x.conjugate(s)));
        if ok {
            kept.push(x.clone());
        }
        true
    })?;
    let n_count = kept.len() as u128;
    let normalizer_part = Group::from_member_stream(h.degree(), kept.iter().cloned());
    debug_assert_eq!(normalizer_part.order(), n_count);

    // kernel: x acts trivially on A/B iff x^-1 g x lies in Bg for every
    // generator g of A (generator images generate the quotient).
    let acts_trivially = |x: &Perm| {
        sec.a
            .generators()
            .iter()
            .all(|g| b_set.contains(&x.conjugate(g).compose(&g.inverse())))
            || sec.a.generators().is_empty()
    };
    let kernel_els: Vec<Perm> = kept.iter().filter(|x| acts_trivially(x)).cloned().collect();
    let c_count = kernel_els.len() as u128;
    let kernel = Group::from_member_stream(h.degree(), kernel_els);
    debug_assert_eq!(kernel.order(), c_count);

    let space = CosetSpace::new(&sec.a, &sec.b, cfg)?;
    let gen_images = normalizer_part
        .generators()
        .iter()
        .map(|x| space.conjugation_perm(x))
        .collect::<Result<Vec<Perm>>>()?;
    let image_order = n_count / c_count;
    let image = Group::with_known_order(space.len().max(1), gen_images.clone(), Some(image_order));
    if image.order() != image_order {
        return Err(Error::Internal(format!(
            "induced image order {} != |N|/|C| = {}",
            image.order(),
            image_order
        )));
    }
    let epi = Epimorphism::new(normalizer_part.clone(), image.clone(), gen_images)?;
    Ok(InducedAutGroup {
        normalizer_part,
        kernel,
        image,
        epi,
    })
}

/// The identity C_H(A/B) = C_G(A/B) `intersect` H, computed both ways.
pub fn centralizer_restriction_check(
    g: &Group,
    h: &Group,
    sec: &Section,
    cfg: &Config,
) -> Result<bool> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H not contained in G".into()));
    }
    let ch = induced_aut(h, sec, cfg)?.kernel;
    let cg = induced_aut(g, sec, cfg)?.kernel;
    let rhs = intersection(&cg, h, cfg)?;
    Ok(ch.same_subgroup(&rhs))
}

/// Aut_H(A/B) <= Aut_G(A/B), made literal by the shared coset indexing.
pub fn aut_subgroup_embedding(g: &Group, h: &Group, sec: &Section, cfg: &Config) -> Result<bool> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("H not contained in G".into()));
    }
    let small = induced_aut(h, sec, cfg)?.image;
    let big = induced_aut(g, sec, cfg)?.image;
    Ok(small.is_subgroup_of(&big))
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn v4() -> Group {
        grp(4, &[&[vec![0, 1], vec![2, 3]], &[vec![0, 2], vec![1, 3]]])
    }

    fn d8() -> Group {
        grp(4, &[&[vec![0, 1, 2, 3]], &[vec![1, 3]]])
    }

    fn v4_section() -> Section {
        Section::new(&s4(), v4(), Group::trivial(4)).unwrap()
    }

    #[test]
    fn full_group_on_klein_four() {
        let sec = v4_section();
        let ind = induced_aut(&s4(), &sec, &cfg()).unwrap();
        assert_eq!(ind.normalizer_part.order(), 24);
        assert_eq!(ind.kernel.order(), 4);
        assert_eq!(ind.image.order(), 6);
        assert_eq!(ind.image.degree(), 4); // one point per element of V4
        // |Aut| * |C| = |N|
        assert_eq!(
            ind.image.order() * ind.kernel.order(),
            ind.normalizer_part.order()
        );
    }

    #[test]
    fn transposition_acts_with_order_two() {
        let sec = v4_section();
        let h = grp(4, &[&[vec![0, 1]]]);
        let ind = induced_aut(&h, &sec, &cfg()).unwrap();
        assert_eq!(ind.image.order(), 2);
    }

    #[test]
    fn degenerate_section_trivial_image() {
        let sec = Section::new(&s4(), v4(), v4()).unwrap();
        let ind = induced_aut(&s4(), &sec, &cfg()).unwrap();
        assert!(ind.image.is_trivial());
    }

    #[test]
    fn centralizer_restriction_cases() {
        let sec = v4_section();
        assert!(centralizer_restriction_check(&s4(), &d8(), &sec, &cfg()).unwrap());
        assert!(centralizer_restriction_check(&s4(), &s4(), &sec, &cfg()).unwrap());
        assert!(
            centralizer_restriction_check(&s4(), &Group::trivial(4), &sec, &cfg()).unwrap()
        );
    }

    #[test]
    fn embedding_cases() {
        let sec = v4_section();
        assert!(aut_subgroup_embedding(&s4(), &d8(), &sec, &cfg()).unwrap());
        assert!(aut_subgroup_embedding(&s4(), &s4(), &sec, &cfg()).unwrap());
        assert!(aut_subgroup_embedding(&s4(), &Group::trivial(4), &sec, &cfg()).unwrap());
    }

    #[test]
    fn kernel_matches_trivial_action() {
        let sec = v4_section();
        let ind = induced_aut(&s4(), &sec, &cfg()).unwrap();
        let space = CosetSpace::new(&sec.a, &sec.b, &cfg()).unwrap();
        for x in ind.normalizer_part.elements(&cfg()).unwrap() {
            let trivial = space.conjugation_perm(&x).unwrap().is_identity();
            assert_eq!(trivial, ind.kernel.contains(&x).unwrap());
        }
    }

    #[test]
    fn prime_section_aut_divides_p_minus_one() {
        // section of order 3 inside S3: A3 / 1
        let s3 = grp(3, &[&[vec![0, 1, 2]], &[vec![0, 1]]]);
        let a3 = grp(3, &[&[vec![0, 1, 2]]]);
        let sec = Section::new(&s3, a3, Group::trivial(3)).unwrap();
        let ind = induced_aut(&s3, &sec, &cfg()).unwrap();
        assert_eq!(2 % ind.image.order(), 0);
    }
}
