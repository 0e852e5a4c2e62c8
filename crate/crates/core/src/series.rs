//! Chief, composition and (rc)-series, plus sections.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Config;
use crate::cosets::quotient_action;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;
use crate::structure::{is_prime, normal_subgroups};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Chief,
    Composition,
    Rc,
}

impl SeriesKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SeriesKind::Chief => "chief",
            SeriesKind::Composition => "composition",
            SeriesKind::Rc => "rc",
        }
    }
}

/// Ordered chain G = terms[0] > terms[1] > ... > terms[n] = 1.
/// An (rc)-series stores the chief series it refines.
pub struct Series {
    pub ambient: Group,
    pub terms: Vec<Group>,
    pub kind: SeriesKind,
    pub witness: Option<Box<Series>>,
}

impl Series {
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn factor_orders(&self) -> Vec<u128> {
        (1..self.terms.len())
            .map(|i| self.terms[i - 1].order() / self.terms[i].order())
            .collect()
    }

    pub fn term_orders(&self) -> Vec<u128> {
        self.terms.iter().map(|t| t.order()).collect()
    }

    /// Checks the structural invariants appropriate to the kind. Expensive;
    /// meant for tests and the verification harness.
    pub fn validate(&self, cfg: &Config) -> Result<()> {
        if self.terms.is_empty() || !self.terms.last().unwrap().is_trivial() {
            return Err(Error::Internal("series must end at the trivial group".into()));
        }
        if self.terms[0].order() != self.ambient.order() {
            return Err(Error::Internal("series must start at the ambient group".into()));
        }
        let mut product = 1u128;
        for i in 1..self.terms.len() {
            let upper = &self.terms[i - 1];
            let lower = &self.terms[i];
            if !lower.is_subgroup_of(upper) || lower.order() >= upper.order() {
                return Err(Error::Internal("series containment not strict".into()));
            }
            // normal in predecessor (all kinds); chief additionally normal in G
            let host = if self.kind == SeriesKind::Chief {
                &self.ambient
            } else {
                upper
            };
            for x in host.generators() {
                for s in lower.generators() {
                    if !lower.contains_unchecked(&x.conjugate(s)) {
                        return Err(Error::NotNormal);
                    }
                }
            }
            product *= upper.order() / lower.order();
        }
        if product != self.ambient.order() {
            return Err(Error::Internal("factor orders do not multiply to |G|".into()));
        }
        match self.kind {
            SeriesKind::Chief => {
                // non-refinable: each factor is a minimal normal subgroup of G/lower
                for i in 1..self.terms.len() {
                    let (q, epi) = quotient_action(&self.ambient, &self.terms[i], cfg)?;
                    let upper_image: Vec<Perm> = self.terms[i - 1]
                        .generators()
                        .iter()
                        .map(|g| epi.apply(g))
                        .collect::<Result<_>>()?;
                    let img = Group::with_known_order(q.degree(), upper_image, None);
                    let mins = minimal_normal_subgroups(&q, cfg)?;
                    if !mins.iter().any(|m| m.same_subgroup(&img)) {
                        return Err(Error::Internal(
                            "chief factor is not a minimal normal subgroup of the quotient".into(),
                        ));
                    }
                }
            }
            SeriesKind::Composition | SeriesKind::Rc => {
                for sec in sections_of(self)? {
                    if !sec.is_simple(cfg)? {
                        return Err(Error::Internal("composition factor not simple".into()));
                    }
                }
                if self.kind == SeriesKind::Rc {
                    let witness = self
                        .witness
                        .as_ref()
                        .ok_or_else(|| Error::Internal("rc-series missing chief witness".into()))?;
                    for wt in &witness.terms {
                        if !self.terms.iter().any(|t| t.same_subgroup(wt)) {
                            return Err(Error::Internal(
                                "rc-series does not contain its chief witness terms".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A section A/B: B normal in A, both inside an ambient group.
pub struct Section {
    pub ambient: Group,
    pub a: Group,
    pub b: Group,
}

impl Section {
    pub fn new(ambient: &Group, a: Group, b: Group) -> Result<Section> {
        if !a.is_subgroup_of(ambient) {
            return Err(Error::NotSubgroup("A not contained in the ambient group".into()));
        }
        if !b.is_subgroup_of(&a) {
            return Err(Error::NotSubgroup("B not contained in A".into()));
        }
        for x in a.generators() {
            for s in b.generators() {
                if !b.contains_unchecked(&x.conjugate(s)) {
                    return Err(Error::NotNormal);
                }
            }
        }
        Ok(Section { ambient: ambient.clone(), a, b })
    }

    pub fn order(&self) -> u128 {
        self.a.order() / self.b.order()
    }

    /// A faithful permutation realization of A/B: A itself when B is
    /// trivial, otherwise the coset action.
    pub fn as_group(&self, cfg: &Config) -> Result<Group> {
        if self.b.is_trivial() {
            Ok(self.a.clone())
        } else {
            Ok(quotient_action(&self.a, &self.b, cfg)?.0)
        }
    }

    pub fn is_simple(&self, cfg: &Config) -> Result<bool> {
        if is_prime_u128(self.order()) {
            return Ok(true);
        }
        let q = self.as_group(cfg)?;
        Ok(normal_subgroups(&q, cfg)?.len() == 2)
    }

    /// Same pair of subgroups (used by the generalized Jordan-Holder check
    /// to shortcut literally identical sections).
    pub fn same_section(&self, other: &Section) -> bool {
        self.a.same_subgroup(&other.a) && self.b.same_subgroup(&other.b)
    }
}

pub fn is_prime_u128(n: u128) -> bool {
    n <= u64::MAX as u128 && is_prime(n as u64)
}

/// Minimal elements (by containment) among the nontrivial normal subgroups.
pub fn minimal_normal_subgroups(g: &Group, cfg: &Config) -> Result<Vec<Group>> {
    let normals = normal_subgroups(g, cfg)?;
    let nontrivial: Vec<&Group> = normals.iter().filter(|n| !n.is_trivial()).collect();
    let mut mins = Vec::new();
    for n in &nontrivial {
        let minimal = nontrivial
            .iter()
            .all(|m| m.order() >= n.order() || !m.is_subgroup_of(n));
        if minimal {
            mins.push((*n).clone());
        }
    }
    Ok(mins)
}

/// Maximal elements among the proper normal subgroups.
pub fn maximal_normal_subgroups(g: &Group, cfg: &Config) -> Result<Vec<Group>> {
    let normals = normal_subgroups(g, cfg)?;
    let proper: Vec<&Group> = normals.iter().filter(|n| n.order() < g.order()).collect();
    let mut maxes = Vec::new();
    for n in &proper {
        let maximal = proper
            .iter()
            .all(|m| m.order() <= n.order() || !n.is_subgroup_of(m));
        if maximal {
            maxes.push((*n).clone());
        }
    }
    Ok(maxes)
}

/// Deterministic tie-break among same-purpose candidates: smallest order,
/// then lexicographically least sorted element table.
fn pick_canonical(cands: &[Group], smallest: bool) -> usize {
    let mut best = 0;
    for i in 1..cands.len() {
        let better = if smallest {
            cands[i].order() < cands[best].order()
        } else {
            cands[i].order() > cands[best].order()
        };
        if better {
            best = i;
        } else if cands[i].order() == cands[best].order()
            && element_table(&cands[i]) < element_table(&cands[best])
        {
            best = i;
        }
    }
    best
}

fn element_table(g: &Group) -> Vec<Perm> {
    let mut els = g
        .elements_capped(u128::MAX)
        .expect("uncapped enumeration");
    els.sort_unstable();
    els
}

/// Chief series, built upward: pull back a minimal normal subgroup of each
/// successive quotient.
pub fn chief_series(g: &Group, cfg: &Config) -> Result<Series> {
    let mut ascending = vec![Group::trivial(g.degree())];
    while ascending.last().unwrap().order() < g.order() {
        let current = ascending.last().unwrap();
        let (q, epi) = quotient_action(g, current, cfg)?;
        let mins = minimal_normal_subgroups(&q, cfg)?;
        if mins.is_empty() {
            return Err(Error::Internal("nontrivial quotient without minimal normals".into()));
        }
        let pick = &mins[pick_canonical(&mins, true)];
        let mut gens = current.generators().to_vec();
        for m in pick.generators() {
            gens.push(epi.preimage(m)?);
        }
        let order = current.order() * pick.order();
        let next = Group::with_known_order(g.degree(), gens, Some(order));
        if next.order() != order {
            return Err(Error::Internal("chief-series pullback order mismatch".into()));
        }
        ascending.push(next);
    }
    let mut terms = ascending;
    terms.reverse();
    Ok(Series {
        ambient: g.clone(),
        terms,
        kind: SeriesKind::Chief,
        witness: None,
    })
}

/// A composition series: repeatedly pick a maximal normal subgroup of the
/// current term. The seed drives the choice so distinct series are sampled.
pub fn composition_series(g: &Group, seed: u64, cfg: &Config) -> Result<Series> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms = vec![g.clone()];
    while !terms.last().unwrap().is_trivial() {
        let cur = terms.last().unwrap();
        let maxes = maximal_normal_subgroups(cur, cfg)?;
        if maxes.is_empty() {
            return Err(Error::Internal("nontrivial group without maximal normals".into()));
        }
        let pick = maxes[rng.random_range(0..maxes.len())].clone();
        terms.push(pick);
    }
    Ok(Series {
        ambient: g.clone(),
        terms,
        kind: SeriesKind::Composition,
        witness: None,
    })
}

/// (rc)-series: refine each chief factor inside its own section, dropping
/// one simple direct factor at a time, and remember the witnessing chief
/// series.
pub fn rc_series(g: &Group, cfg: &Config) -> Result<Series> {
    let chief = chief_series(g, cfg)?;
    let mut terms: Vec<Group> = vec![chief.terms[0].clone()];
    for i in 1..chief.terms.len() {
        let upper = &chief.terms[i - 1];
        let lower = &chief.terms[i];
        let (q, epi) = quotient_action(upper, lower, cfg)?;
        // composition series of the chief factor, deterministic choice
        let mut cur = q.clone();
        let mut refinement: Vec<Group> = Vec::new();
        while !cur.is_trivial() {
            let maxes = maximal_normal_subgroups(&cur, cfg)?;
            let pick = maxes[pick_canonical(&maxes, false)].clone();
            refinement.push(pick.clone());
            cur = pick;
        }
        // pull the proper nontrivial steps back into G
        for step in &refinement {
            if step.is_trivial() {
                terms.push(lower.clone());
            } else {
                let mut gens = lower.generators().to_vec();
                for m in step.generators() {
                    gens.push(epi.preimage(m)?);
                }
                let order = lower.order() * step.order();
                let pulled = Group::with_known_order(g.degree(), gens, Some(order));
                if pulled.order() != order {
                    return Err(Error::Internal("rc refinement pullback order mismatch".into()));
                }
                terms.push(pulled);
            }
        }
    }
    Ok(Series {
        ambient: g.clone(),
        terms,
        kind: SeriesKind::Rc,
        witness: Some(Box::new(chief)),
    })
}

/// Adjacent sections terms[i-1]/terms[i], in order.
pub fn sections_of(s: &Series) -> Result<Vec<Section>> {
    (1..s.terms.len())
        .map(|i| Section::new(&s.ambient, s.terms[i - 1].clone(), s.terms[i].clone()))
        .collect()
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

    fn a5() -> Group {
        grp(5, &[&[vec![0, 1, 2]], &[vec![0, 1, 2, 3, 4]]])
    }

    fn z6() -> Group {
        grp(6, &[&[vec![0, 1, 2, 3, 4, 5]]])
    }

    #[test]
    fn minimal_normals() {
        let mins = minimal_normal_subgroups(&s4(), &cfg()).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);

        let mut orders: Vec<u128> = minimal_normal_subgroups(&z6(), &cfg())
            .unwrap()
            .iter()
            .map(|m| m.order())
            .collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);

        let mins = minimal_normal_subgroups(&a5(), &cfg()).unwrap();
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 60);
    }

    #[test]
    fn chief_series_s4() {
        let s = chief_series(&s4(), &cfg()).unwrap();
        assert_eq!(s.term_orders(), vec![24, 12, 4, 1]);
        assert_eq!(s.factor_orders(), vec![2, 3, 4]);
        s.validate(&cfg()).unwrap();
    }

    #[test]
    fn chief_series_simple() {
        let s = chief_series(&a5(), &cfg()).unwrap();
        assert_eq!(s.term_orders(), vec![60, 1]);
        s.validate(&cfg()).unwrap();
    }

    #[test]
    fn composition_series_s4_factors() {
        for seed in 0..5 {
            let s = composition_series(&s4(), seed, &cfg()).unwrap();
            let mut factors = s.factor_orders();
            factors.sort();
            assert_eq!(factors, vec![2, 2, 2, 3]);
            s.validate(&cfg()).unwrap();
        }
    }

    #[test]
    fn composition_series_z6_both_routes() {
        let mut middles = std::collections::HashSet::new();
        for seed in 0..16 {
            let s = composition_series(&z6(), seed, &cfg()).unwrap();
            middles.insert(s.terms[1].order());
            s.validate(&cfg()).unwrap();
        }
        assert_eq!(middles, [2u128, 3].into_iter().collect());
    }

    #[test]
    fn rc_series_s4() {
        let s = rc_series(&s4(), &cfg()).unwrap();
        assert_eq!(s.term_orders(), vec![24, 12, 4, 2, 1]);
        s.validate(&cfg()).unwrap();
        let secs = sections_of(&s).unwrap();
        let orders: Vec<u128> = secs.iter().map(|x| x.order()).collect();
        assert_eq!(orders, vec![2, 3, 2, 2]);
    }

    #[test]
    fn rc_series_simple_is_itself() {
        let s = rc_series(&a5(), &cfg()).unwrap();
        assert_eq!(s.term_orders(), vec![60, 1]);
        s.validate(&cfg()).unwrap();
        let secs = sections_of(&s).unwrap();
        assert_eq!(secs.len(), 1);
        assert!(secs[0].is_simple(&cfg()).unwrap());
    }

    #[test]
    fn chief_series_z6_prime_sections() {
        let s = chief_series(&z6(), &cfg()).unwrap();
        let secs = sections_of(&s).unwrap();
        assert_eq!(secs.len(), 2);
        for sec in secs {
            assert!(is_prime_u128(sec.order()));
        }
    }

    #[test]
    fn jordan_holder_across_seeds() {
        for g in [s4(), z6(), grp(3, &[&[vec![0, 1, 2]], &[vec![0, 1]]])] {
            let mut reference: Option<Vec<u128>> = None;
            for seed in 0..6 {
                let s = composition_series(&g, seed, &cfg()).unwrap();
                let mut f = s.factor_orders();
                f.sort();
                match &reference {
                    None => reference = Some(f),
                    Some(r) => assert_eq!(&f, r),
                }
            }
        }
    }
}
