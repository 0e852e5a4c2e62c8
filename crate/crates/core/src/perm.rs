use crate::error::{Error, Result};

/// A permutation of `{0..d-1}` stored as an image table.
///
/// Composition is left-to-right throughout the crate: `compose(p, q)` maps
/// `i` to `q(p(i))`, i.e. apply `p` first. Points are `u32` so that
/// transversal elements at coset degrees around 10^4 stay compact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    /// Builds a permutation from an image table, validating bijectivity.
    pub fn new(images: Vec<u32>) -> Result<Perm> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be >= 1".into()));
        }
        let d = images.len();
        let mut seen = vec![false; d];
        for &v in &images {
            let v = v as usize;
            if v >= d {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} out of range for degree {d}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn from_usize(images: &[usize]) -> Result<Perm> {
        Perm::new(images.iter().map(|&v| v as u32).collect())
    }

    /// Builds from disjoint-or-not cycles on `{0..degree-1}`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Perm> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for c in cycles {
            for i in 0..c.len() {
                let from = c[i] as usize;
                if from >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {from} out of range"
                    )));
                }
                images[from] = c[(i + 1) % c.len()];
            }
        }
        Perm::new(images)
    }

    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self
                .images
                .iter()
                .map(|&v| other.images[v as usize])
                .collect(),
        }
    }

    pub fn compose_checked(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Perm { images }
    }

    /// `self^-1 * other * self` (conjugation in left-to-right convention).
    pub fn conjugate(&self, other: &Perm) -> Perm {
        self.inverse().compose(other).compose(self)
    }

    pub fn pow(&self, mut n: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative order, by lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut ord: u64 = 1;
        for i in 0..d {
            if seen[i] {
                continue;
            }
            let mut len: u64 = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Smallest moved point, if any.
    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &v)| i as u32 != v)
            .map(|(i, _)| i as u32)
    }

    /// Cycle-type notation for display, fixed points omitted.
    pub fn cycle_string(&self) -> String {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = String::new();
        for i in 0..d {
            if seen[i] || self.images[i] as usize == i {
                seen[i] = true;
                continue;
            }
            out.push('(');
            let mut j = i;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&j.to_string());
                first = false;
                j = self.images[j] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Perm {
        Perm::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        // involution squared is the identity
        assert_eq!(p(&[1, 0]).compose(&p(&[1, 0])), p(&[0, 1]));
        // pointwise evaluation by hand
        assert_eq!(
            p(&[1, 2, 3, 0]).compose(&p(&[1, 0, 2, 3])),
            p(&[0, 2, 3, 1])
        );
        // identity law
        let q = p(&[2, 0, 1]);
        assert_eq!(q.compose(&Perm::identity(3)), q);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(&[1, 2, 0]).inverse(), p(&[2, 0, 1]));
        assert_eq!(p(&[0, 1, 2]).inverse(), p(&[0, 1, 2]));
        assert_eq!(p(&[1, 0, 3, 2]).inverse(), p(&[1, 0, 3, 2]));
    }

    #[test]
    fn rejects_malformed() {
        assert!(Perm::new(vec![]).is_err());
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::new(vec![0, 2]).is_err());
        assert!(p(&[0, 1]).compose_checked(&p(&[0, 1, 2])).is_err());
    }

    #[test]
    fn order_and_cycles() {
        let c = Perm::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(c.cycle_string(), "(0 1 2)(3 4)");
        assert_eq!(Perm::identity(4).cycle_string(), "()");
    }

    fn arb_perm(d: usize) -> impl Strategy<Value = Perm> {
        Just(()).prop_perturb(move |_, mut rng| {
            let mut v: Vec<u32> = (0..d as u32).collect();
            for i in (1..d).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                v.swap(i, j);
            }
            Perm::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn compose_associative((a, b, c) in (arb_perm(8), arb_perm(8), arb_perm(8))) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn inverse_two_sided(a in arb_perm(9)) {
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert!(a.inverse().compose(&a).is_identity());
        }
    }
}
