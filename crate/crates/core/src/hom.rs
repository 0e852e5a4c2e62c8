use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::{BasePref, Group, StabChain};
use crate::perm::Perm;

/// A surjective homomorphism between permutation groups, stored as a
/// generator-image table and evaluated through stabilizer chains of the
/// graph subgroup {(g, phi(g))} acting on the disjoint union of the two
/// point sets.
///
/// The evaluation chain stabilizes source points first (so stripping a source
/// element decomposes it into transversal elements whose target parts multiply
/// to the image). The preimage chain stabilizes a base of the target group
/// first; the strong generators below that prefix generate the kernel.
pub struct Epimorphism {
    source: Group,
    target: Group,
    gen_images: Vec<Perm>,
    eval_chain: OnceLock<StabChain>,
    pre_chain: OnceLock<StabChain>,
}

impl Epimorphism {
    /// `gen_images` must be parallel to `source.generators()`.
    pub fn new(source: Group, target: Group, gen_images: Vec<Perm>) -> Result<Epimorphism> {
        if gen_images.len() != source.generators().len() {
            return Err(Error::Internal(
                "generator-image table length mismatch".into(),
            ));
        }
        for img in &gen_images {
            if !target.contains(img)? {
                return Err(Error::Internal(
                    "generator image outside target group".into(),
                ));
            }
        }
        Ok(Epimorphism {
            source,
            target,
            gen_images,
            eval_chain: OnceLock::new(),
            pre_chain: OnceLock::new(),
        })
    }

    /// The identity map on `g`.
    pub fn identity(g: &Group) -> Epimorphism {
        let images = g.generators().to_vec();
        Epimorphism {
            source: g.clone(),
            target: g.clone(),
            gen_images: images,
            eval_chain: OnceLock::new(),
            pre_chain: OnceLock::new(),
        }
    }

    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn gen_images(&self) -> &[Perm] {
        &self.gen_images
    }

    fn ds(&self) -> usize {
        self.source.degree()
    }

    fn dt(&self) -> usize {
        self.target.degree()
    }

    fn diag_gens(&self) -> Vec<Perm> {
        self.source
            .generators()
            .iter()
            .zip(&self.gen_images)
            .map(|(g, h)| join_diag(g, h))
            .collect()
    }

    fn eval_chain(&self) -> &StabChain {
        self.eval_chain.get_or_init(|| {
            StabChain::build_seeded(
                self.ds() + self.dt(),
                &self.diag_gens(),
                BasePref::RangeFirst(0, self.ds()),
                &[],
                Some(self.source.order()),
            )
        })
    }

    fn pre_chain(&self) -> &StabChain {
        self.pre_chain.get_or_init(|| {
            let ds = self.ds();
            let seed: Vec<u32> = self
                .target
                .chain()
                .base()
                .iter()
                .map(|&b| b + ds as u32)
                .collect();
            StabChain::build_seeded(
                ds + self.dt(),
                &self.diag_gens(),
                BasePref::RangeFirst(ds, ds + self.dt()),
                &seed,
                Some(self.source.order()),
            )
        })
    }

    /// Image of `g` under the homomorphism.
    pub fn apply(&self, g: &Perm) -> Result<Perm> {
        if !self.source.contains(g)? {
            return Err(Error::NotInGroup);
        }
        let ds = self.ds();
        let chain = self.eval_chain();
        let mut cur = g.clone();
        let mut acc = Perm::identity(self.dt());
        for l in 0..chain.num_levels() {
            let base = chain.level_base(l);
            debug_assert!((base as usize) < ds, "eval chain base in source range");
            let beta = cur.apply(base);
            let u = chain
                .level_transversal_to(l, beta)
                .ok_or_else(|| Error::Internal("eval strip failed".into()))?;
            let (us, ut) = split_diag(&u, ds);
            cur = cur.compose(&us.inverse());
            acc = ut.compose(&acc);
        }
        if !cur.is_identity() {
            return Err(Error::Internal("eval residue non-identity".into()));
        }
        Ok(acc)
    }

    /// Some preimage of `t`; errors if `t` is not in the image.
    pub fn preimage(&self, t: &Perm) -> Result<Perm> {
        if t.degree() != self.dt() {
            return Err(Error::DegreeMismatch {
                left: self.dt(),
                right: t.degree(),
            });
        }
        let ds = self.ds();
        let chain = self.pre_chain();
        let mut cur = t.clone();
        let mut acc = Perm::identity(ds);
        for l in 0..chain.num_levels() {
            let base = chain.level_base(l) as usize;
            if base < ds {
                // reached the kernel part of the chain
                break;
            }
            let beta = cur.apply((base - ds) as u32);
            let u = match chain.level_transversal_to(l, beta + ds as u32) {
                Some(u) => u,
                None => return Err(Error::NotInGroup),
            };
            let (us, ut) = split_diag(&u, ds);
            cur = cur.compose(&ut.inverse());
            acc = us.compose(&acc);
        }
        if !cur.is_identity() {
            return Err(Error::NotInGroup);
        }
        Ok(acc)
    }

    /// The kernel, read off the preimage chain below the target base prefix.
    pub fn kernel(&self) -> Group {
        let ds = self.ds();
        let chain = self.pre_chain();
        let mut cut = chain.num_levels();
        for l in 0..chain.num_levels() {
            if (chain.level_base(l) as usize) < ds {
                cut = l;
                break;
            }
        }
        if cut == chain.num_levels() {
            return Group::trivial(ds);
        }
        let gens: Vec<Perm> = chain
            .level_gens(cut)
            .iter()
            .map(|g| split_diag(g, ds).0)
            .collect();
        Group::with_known_order(ds, gens, None)
    }
}

/// Concatenates a source-part and target-part permutation into one
/// permutation on the disjoint union of their point sets.
pub fn join_diag(src: &Perm, tgt: &Perm) -> Perm {
    let ds = src.degree();
    let mut images: Vec<u32> = Vec::with_capacity(ds + tgt.degree());
    images.extend_from_slice(src.images());
    images.extend(tgt.images().iter().map(|&v| v + ds as u32));
    Perm::new(images).expect("join of bijections is a bijection")
}

pub fn split_diag(p: &Perm, ds: usize) -> (Perm, Perm) {
    let src = Perm::new(p.images()[..ds].to_vec()).expect("source part bijective");
    let tgt = Perm::new(
        p.images()[ds..]
            .iter()
            .map(|&v| v - ds as u32)
            .collect::<Vec<_>>(),
    )
    .expect("target part bijective");
    (src, tgt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;

    fn s3() -> Group {
        Group::from_generators(
            3,
            vec![
                Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap(),
                Perm::from_cycles(3, &[vec![0, 1]]).unwrap(),
            ],
            &Config::default(),
        )
        .unwrap()
    }

    #[test]
    fn sign_map_of_s3() {
        // S3 -> Z2 by parity
        let src = s3();
        let tgt = Group::from_generators(
            2,
            vec![Perm::from_cycles(2, &[vec![0, 1]]).unwrap()],
            &Config::default(),
        )
        .unwrap();
        let images: Vec<Perm> = src
            .generators()
            .iter()
            .map(|g| {
                if g.order() % 2 == 0 {
                    Perm::from_cycles(2, &[vec![0, 1]]).unwrap()
                } else {
                    Perm::identity(2)
                }
            })
            .collect();
        let phi = Epimorphism::new(src.clone(), tgt, images).unwrap();

        let cfg = Config::default();
        let els = src.elements(&cfg).unwrap();
        // homomorphism property on all pairs
        for a in &els {
            for b in &els {
                let lhs = phi.apply(&a.compose(b)).unwrap();
                let rhs = phi.apply(a).unwrap().compose(&phi.apply(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        // kernel is A3
        let k = phi.kernel();
        assert_eq!(k.order(), 3);
        assert!(k.contains(&Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap()).unwrap());
        // preimage round-trips
        let t = Perm::from_cycles(2, &[vec![0, 1]]).unwrap();
        let x = phi.preimage(&t).unwrap();
        assert_eq!(phi.apply(&x).unwrap(), t);
    }

    #[test]
    fn identity_epimorphism() {
        let g = s3();
        let phi = Epimorphism::identity(&g);
        let p = Perm::from_cycles(3, &[vec![0, 2]]).unwrap();
        assert_eq!(phi.apply(&p).unwrap(), p);
        assert_eq!(phi.preimage(&p).unwrap(), p);
        assert!(phi.kernel().is_trivial());
    }

    #[test]
    fn apply_rejects_non_members() {
        let a3 = Group::from_generators(
            3,
            vec![Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap()],
            &Config::default(),
        )
        .unwrap();
        let phi = Epimorphism::identity(&a3);
        assert!(phi
            .apply(&Perm::from_cycles(3, &[vec![0, 1]]).unwrap())
            .is_err());
    }
}
