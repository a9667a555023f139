//! Permutation groups on `{0..n-1}`: generation, order, membership,
//! stabilizers, normal closure and a simplicity decision procedure.
//!
//! Orders and membership come from a deterministic Schreier-Sims
//! stabilizer chain; full element enumeration is materialized lazily
//! (breadth-first closure) below a configurable bound and doubles as an
//! independent cross-check on the chain order. No decision path uses
//! randomization.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::perm::Permutation;

/// Default bound on the group order for full element enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u128 = 1_000_000;

/// Errors raised by group construction and queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    /// A permutation has the wrong degree.
    DegreeMismatch { expected: usize, got: usize },
    /// An element supposed to lie in the group fails the membership test.
    ElementNotInGroup,
    /// The group order exceeds the enumeration bound.
    OrderBoundExceeded { order: u128, bound: u128 },
    /// The trivial group was passed where order >= 2 is required.
    TrivialGroup,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::DegreeMismatch { expected, got } => {
                write!(f, "degree mismatch: expected {expected}, got {got}")
            }
            GroupError::ElementNotInGroup => write!(f, "element is not in the group"),
            GroupError::OrderBoundExceeded { order, bound } => {
                write!(f, "group order {order} exceeds enumeration bound {bound}")
            }
            GroupError::TrivialGroup => write!(f, "trivial group rejected (order >= 2 required)"),
        }
    }
}

impl core::error::Error for GroupError {}

/// One level of the stabilizer chain: a base point, the strong
/// generators at this level, and the transversal mapping each orbit
/// point to a coset representative taking the base point there.
#[derive(Clone)]
struct ChainLevel {
    base_point: usize,
    generators: Vec<Permutation>,
    transversal: Vec<Option<Permutation>>, // indexed by point
    orbit_size: usize,
}

impl ChainLevel {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        ChainLevel { base_point, generators: Vec::new(), transversal, orbit_size: 1 }
    }
}

/// Deterministic incremental Schreier-Sims structure.
#[derive(Clone)]
struct StabilizerChain {
    degree: usize,
    levels: Vec<ChainLevel>,
}

impl StabilizerChain {
    fn new(degree: usize) -> Self {
        StabilizerChain { degree, levels: Vec::new() }
    }

    /// Builds a chain whose base is forced to start with `prefix`.
    fn with_base_prefix(degree: usize, prefix: &[usize], gens: &[Permutation]) -> Self {
        let mut chain = StabilizerChain::new(degree);
        for &p in prefix {
            chain.levels.push(ChainLevel::new(p, degree));
        }
        for g in gens {
            chain.insert(g.clone(), 0);
        }
        chain
    }

    fn insert(&mut self, h: Permutation, level: usize) {
        if h.is_identity() {
            return;
        }
        if level >= self.levels.len() {
            // Extend the base with the smallest point the new element moves.
            let base = h.first_moved_point().expect("non-identity moves a point");
            self.levels.push(ChainLevel::new(base, self.degree));
        }
        let base = self.levels[level].base_point;
        let image = h.apply(base);
        if let Some(rep) = self.levels[level].transversal[image].clone() {
            // Known orbit point: strip and sift the remainder one level down.
            let next = rep.inverse().compose(&h);
            self.insert(next, level + 1);
        } else {
            // New strong generator at this level; rebuild the orbit.
            self.levels[level].generators.push(h);
            self.close_orbit(level);
        }
    }

    /// Breadth-first orbit closure at `level`, sifting every Schreier
    /// generator that arises from a closing edge.
    fn close_orbit(&mut self, level: usize) {
        let mut queue: Vec<usize> = self.levels[level]
            .transversal
            .iter()
            .enumerate()
            .filter_map(|(p, t)| t.as_ref().map(|_| p))
            .collect();
        let mut head = 0;
        while head < queue.len() {
            let point = queue[head];
            head += 1;
            let rep = self.levels[level].transversal[point]
                .clone()
                .expect("queued points have representatives");
            for gi in 0..self.levels[level].generators.len() {
                let g = self.levels[level].generators[gi].clone();
                let image = g.apply(point);
                if self.levels[level].transversal[image].is_none() {
                    let new_rep = g.compose(&rep);
                    self.levels[level].transversal[image] = Some(new_rep);
                    self.levels[level].orbit_size += 1;
                    queue.push(image);
                } else {
                    // Schreier generator for the stabilizer below.
                    let image_rep = self.levels[level].transversal[image]
                        .clone()
                        .expect("image has a representative");
                    let schreier = image_rep.inverse().compose(&g).compose(&rep);
                    self.insert(schreier, level + 1);
                }
            }
        }
    }

    /// Group order as the product of orbit sizes (saturating).
    fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit_size as u128))
    }

    /// Membership by sifting.
    fn contains(&self, p: &Permutation) -> bool {
        let mut g = p.clone();
        for level in &self.levels {
            let image = g.apply(level.base_point);
            match &level.transversal[image] {
                Some(rep) => g = rep.inverse().compose(&g),
                None => return false,
            }
        }
        g.is_identity()
    }

    /// Strong generators fixing every point of the first `k` base levels.
    fn stabilizer_generators(&self, k: usize) -> Vec<Permutation> {
        let mut gens = Vec::new();
        for level in self.levels.iter().skip(k) {
            for g in &level.generators {
                if !gens.contains(g) {
                    gens.push(g.clone());
                }
            }
        }
        gens
    }
}

/// A finitely generated permutation group with a stabilizer chain and a
/// lazily materialized full element list.
///
/// Immutable after construction.
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
    enumeration_bound: u128,
    elements: OnceBox<Vec<Permutation>>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
            enumeration_bound: self.enumeration_bound,
            elements: OnceBox::new(),
        }
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermutationGroup(degree={}, order={}, gens={})",
            self.degree,
            self.order(),
            self.generators.len()
        )
    }
}

impl PermutationGroup {
    /// The group generated by `gens` on `degree` points.
    pub fn from_generators(
        gens: Vec<Permutation>,
        degree: usize,
    ) -> Result<Self, GroupError> {
        Self::from_generators_bounded(gens, degree, DEFAULT_ENUMERATION_BOUND)
    }

    /// As [`Self::from_generators`] with an explicit enumeration bound.
    pub fn from_generators_bounded(
        gens: Vec<Permutation>,
        degree: usize,
        enumeration_bound: u128,
    ) -> Result<Self, GroupError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, got: g.degree() });
            }
        }
        let chain = StabilizerChain::with_base_prefix(degree, &[], &gens);
        Ok(PermutationGroup {
            degree,
            generators: gens,
            chain,
            enumeration_bound,
            elements: OnceBox::new(),
        })
    }

    /// Trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(Vec::new(), degree).expect("no generators, no mismatch")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Group order from the stabilizer chain.
    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    /// Exact membership test (chain sifting; no randomization).
    pub fn contains(&self, p: &Permutation) -> Result<bool, GroupError> {
        if p.degree() != self.degree {
            return Err(GroupError::DegreeMismatch { expected: self.degree, got: p.degree() });
        }
        Ok(self.chain.contains(p))
    }

    /// Full element list in lexicographic order, computed once by
    /// breadth-first closure over the generators.
    ///
    /// The closure count is compared against the chain order; a mismatch
    /// would indicate a bug, so it panics rather than erroring.
    pub fn elements(&self) -> Result<&[Permutation], GroupError> {
        let order = self.order();
        if order > self.enumeration_bound {
            return Err(GroupError::OrderBoundExceeded {
                order,
                bound: self.enumeration_bound,
            });
        }
        let elems = self.elements.get_or_init(|| {
            let list = enumerate_closure(&self.generators, self.degree);
            assert_eq!(
                list.len() as u128,
                order,
                "stabilizer chain and closure enumeration disagree"
            );
            alloc::boxed::Box::new(list)
        });
        Ok(elems)
    }

    /// Orbit of a point under the group, ascending.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut in_orbit = vec![false; self.degree];
        in_orbit[point] = true;
        let mut queue = vec![point];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !in_orbit[q] {
                    in_orbit[q] = true;
                    queue.push(q);
                }
            }
        }
        (0..self.degree).filter(|&p| in_orbit[p]).collect()
    }

    /// The subgroup fixing `point`, from a chain rebuilt with `point` as
    /// its first base point.
    pub fn point_stabilizer(&self, point: usize) -> PermutationGroup {
        assert!(point < self.degree);
        let chain =
            StabilizerChain::with_base_prefix(self.degree, &[point], &self.generators);
        let gens = chain.stabilizer_generators(1);
        PermutationGroup::from_generators_bounded(gens, self.degree, self.enumeration_bound)
            .expect("stabilizer generators share the degree")
    }

    /// The smallest normal subgroup of `self` containing `seed`,
    /// computed by iterated conjugation of its generators.
    pub fn normal_closure(&self, seed: &[Permutation]) -> Result<PermutationGroup, GroupError> {
        for s in seed {
            if !self.contains(s)? {
                return Err(GroupError::ElementNotInGroup);
            }
        }
        let mut closure_gens: Vec<Permutation> =
            seed.iter().filter(|s| !s.is_identity()).cloned().collect();
        let mut chain = StabilizerChain::with_base_prefix(self.degree, &[], &closure_gens);
        let mut frontier = closure_gens.clone();
        while let Some(w) = frontier.pop() {
            for g in &self.generators {
                let c = g.conjugate(&w);
                if !chain.contains(&c) {
                    chain.insert(c.clone(), 0);
                    closure_gens.push(c.clone());
                    frontier.push(c);
                }
            }
        }
        PermutationGroup::from_generators_bounded(
            closure_gens,
            self.degree,
            self.enumeration_bound,
        )
    }

    /// Decides simplicity by exhaustive normal closure: the group is
    /// simple iff the normal closure of every nonidentity element is the
    /// whole group.
    ///
    /// Returns the first proper nontrivial normal subgroup found (in
    /// lexicographic element order) as the witness. Elements whose whole
    /// conjugacy class is already known to have full closure are skipped;
    /// conjugate elements have equal normal closures, so this does not
    /// change the outcome.
    pub fn is_simple(&self) -> Result<(bool, Option<PermutationGroup>), GroupError> {
        let order = self.order();
        if order < 2 {
            return Err(GroupError::TrivialGroup);
        }
        let elements = self.elements()?;
        let mut skip = vec![false; elements.len()];
        let index_of = |p: &Permutation| -> usize {
            elements.binary_search_by(|e| e.cmp(p)).expect("closure element is enumerated")
        };
        for (i, g) in elements.iter().enumerate() {
            if skip[i] || g.is_identity() {
                continue;
            }
            let closure = self.normal_closure(core::slice::from_ref(g))?;
            if closure.order() < order {
                return Ok((false, Some(closure)));
            }
            // Full closure: mark the conjugacy class of g as settled.
            let mut class = vec![g.clone()];
            skip[i] = true;
            let mut head = 0;
            while head < class.len() {
                let c = class[head].clone();
                head += 1;
                for gen in &self.generators {
                    let conj = gen.conjugate(&c);
                    let j = index_of(&conj);
                    if !skip[j] {
                        skip[j] = true;
                        class.push(conj);
                    }
                }
            }
        }
        Ok((true, None))
    }
}

/// Breadth-first closure of the generator set, sorted lexicographically.
fn enumerate_closure(gens: &[Permutation], degree: usize) -> Vec<Permutation> {
    use alloc::collections::BTreeSet;
    let mut seen = BTreeSet::new();
    seen.insert(Permutation::identity(degree));
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if !seen.contains(&q) {
                seen.insert(q.clone());
                frontier.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u16]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = PermutationGroup::trivial(5);
        assert_eq!(g.order(), 1);
        assert_eq!(g.elements().unwrap().len(), 1);
    }

    #[test]
    fn cyclic_four_from_one_generator() {
        let g = PermutationGroup::from_generators(vec![perm(&[1, 2, 3, 0])], 4).unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn s3_order_and_membership() {
        let g =
            PermutationGroup::from_generators(vec![perm(&[1, 0, 2]), perm(&[1, 2, 0])], 3)
                .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.contains(&perm(&[2, 1, 0])), Ok(true));
    }

    #[test]
    fn s4_order_24_and_chain_agrees_with_enumeration() {
        let g = PermutationGroup::from_generators(
            vec![perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])],
            4,
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.elements().unwrap().len(), 24);
    }

    #[test]
    fn a4_rejects_transposition() {
        let g = PermutationGroup::from_generators(
            vec![perm(&[1, 2, 0, 3]), perm(&[0, 2, 3, 1])],
            4,
        )
        .unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.contains(&perm(&[1, 0, 2, 3])), Ok(false));
    }

    #[test]
    fn degree_mismatch_rejected() {
        let err = PermutationGroup::from_generators(vec![perm(&[1, 0])], 3).unwrap_err();
        assert_eq!(err, GroupError::DegreeMismatch { expected: 3, got: 2 });
    }

    #[test]
    fn point_stabilizer_orders() {
        // Stabilizer of 0 in the 4-cycle group is trivial.
        let c4 = PermutationGroup::from_generators(vec![perm(&[1, 2, 3, 0])], 4).unwrap();
        assert_eq!(c4.point_stabilizer(0).order(), 1);
        // Stabilizer of 0 in S3 has order 2.
        let s3 =
            PermutationGroup::from_generators(vec![perm(&[1, 0, 2]), perm(&[1, 2, 0])], 3)
                .unwrap();
        let stab = s3.point_stabilizer(0);
        assert_eq!(stab.order(), 2);
        // Lagrange: |orbit| * |stabilizer| = |G|.
        assert_eq!(s3.orbit(0).len() as u128 * stab.order(), s3.order());
    }

    #[test]
    fn normal_closure_of_three_cycle_in_s3() {
        let s3 =
            PermutationGroup::from_generators(vec![perm(&[1, 0, 2]), perm(&[1, 2, 0])], 3)
                .unwrap();
        let a3 = s3.normal_closure(&[perm(&[1, 2, 0])]).unwrap();
        assert_eq!(a3.order(), 3);
        let id_closure = s3.normal_closure(&[Permutation::identity(3)]).unwrap();
        assert_eq!(id_closure.order(), 1);
    }

    #[test]
    fn normal_closure_rejects_foreign_element() {
        let c4 = PermutationGroup::from_generators(vec![perm(&[1, 2, 3, 0])], 4).unwrap();
        let err = c4.normal_closure(&[perm(&[1, 0, 2, 3])]).unwrap_err();
        assert_eq!(err, GroupError::ElementNotInGroup);
    }

    #[test]
    fn z5_is_simple() {
        let g = PermutationGroup::from_generators(vec![perm(&[1, 2, 3, 4, 0])], 5).unwrap();
        assert_eq!(g.is_simple().unwrap().0, true);
    }

    #[test]
    fn s3_is_not_simple_with_a3_witness() {
        let s3 =
            PermutationGroup::from_generators(vec![perm(&[1, 0, 2]), perm(&[1, 2, 0])], 3)
                .unwrap();
        let (simple, witness) = s3.is_simple().unwrap();
        assert!(!simple);
        let w = witness.unwrap();
        assert_eq!(w.order(), 3);
    }

    #[test]
    fn abelian_non_prime_not_simple() {
        let c6 = PermutationGroup::from_generators(vec![perm(&[1, 2, 3, 4, 5, 0])], 6).unwrap();
        let (simple, witness) = c6.is_simple().unwrap();
        assert!(!simple);
        assert!(witness.unwrap().order() > 1);
    }

    #[test]
    fn trivial_group_rejected_by_simplicity() {
        let g = PermutationGroup::trivial(3);
        assert_eq!(g.is_simple().unwrap_err(), GroupError::TrivialGroup);
    }

    #[test]
    fn a5_is_simple() {
        let g = PermutationGroup::from_generators(
            vec![perm(&[1, 2, 3, 4, 0]), perm(&[1, 2, 0, 3, 4])],
            5,
        )
        .unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(g.is_simple().unwrap(), (true, None));
    }

    #[test]
    fn enumeration_bound_respected() {
        let g = PermutationGroup::from_generators_bounded(
            vec![perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])],
            4,
            10,
        )
        .unwrap();
        assert!(matches!(
            g.elements(),
            Err(GroupError::OrderBoundExceeded { order: 24, bound: 10 })
        ));
    }
}
