//! Finite loops as Cayley tables.
//!
//! A loop is a Latin square over `0..n-1` with a two-sided identity.
//! This module validates tables, evaluates the Bol / Moufang /
//! automorphic-inverse identities, builds translations and inner
//! mappings, and handles subloops, normality, factor loops and
//! homomorphism kernels.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::Permutation;

/// Default bound on the loop order for exhaustive subloop enumeration.
pub const DEFAULT_SUBLOOP_ORDER_BOUND: usize = 16;

/// Errors raised by table validation and loop operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoopError {
    /// Table is not square or an entry is out of range.
    MalformedTable { row: usize, len_or_entry: usize },
    /// A row repeats a symbol; `cols` are the offending columns.
    RowRepeat { row: usize, cols: (usize, usize) },
    /// A column repeats a symbol; `rows` are the offending rows.
    ColRepeat { col: usize, rows: (usize, usize) },
    /// No two-sided identity element exists.
    NoIdentity,
    /// Two distinct two-sided identities (impossible for a Latin square;
    /// indicates internal inconsistency).
    MultipleIdentities,
    /// An element has no two-sided inverse.
    NoInverse { element: usize },
    /// The given member set is not a subloop.
    NotASubloop,
    /// The given subloop is not normal.
    NotNormal,
    /// The map is not a homomorphism; witness pair attached.
    NotAHomomorphism { x: usize, y: usize },
    /// The loop order exceeds the configured enumeration bound.
    OrderBoundExceeded { order: usize, bound: usize },
}

impl fmt::Display for LoopError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopError::MalformedTable { row, len_or_entry } => {
                write!(f, "malformed table at row {row} (length or entry {len_or_entry})")
            }
            LoopError::RowRepeat { row, cols } => {
                write!(f, "row {row} repeats a symbol at columns {} and {}", cols.0, cols.1)
            }
            LoopError::ColRepeat { col, rows } => {
                write!(f, "column {col} repeats a symbol at rows {} and {}", rows.0, rows.1)
            }
            LoopError::NoIdentity => write!(f, "no two-sided identity element"),
            LoopError::MultipleIdentities => write!(f, "multiple identity elements"),
            LoopError::NoInverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
            LoopError::NotASubloop => write!(f, "member set is not a subloop"),
            LoopError::NotNormal => write!(f, "subloop is not normal"),
            LoopError::NotAHomomorphism { x, y } => {
                write!(f, "map is not a homomorphism (fails at pair ({x}, {y}))")
            }
            LoopError::OrderBoundExceeded { order, bound } => {
                write!(f, "loop order {order} exceeds bound {bound}")
            }
        }
    }
}

impl core::error::Error for LoopError {}

/// A finite loop: an order-`n` Cayley table over elements `0..n-1`
/// with a two-sided identity.
///
/// Every row and column is a permutation of `0..n-1`; the identity is
/// auto-detected and need not be element 0.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    table: Vec<u16>, // row-major, table[x*n + y] = x*y
    identity: u16,
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CayleyTable(n={}, e={})", self.n, self.identity)?;
        for x in 0..self.n {
            writeln!(f, "  {:?}", &self.table[x * self.n..(x + 1) * self.n])?;
        }
        Ok(())
    }
}

impl CayleyTable {
    /// Validates a square index array as a loop table.
    ///
    /// Checks the Latin property row by row and column by column and
    /// detects the two-sided identity.
    pub fn from_rows(rows: &[Vec<u16>]) -> Result<Self, LoopError> {
        let n = rows.len();
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(LoopError::MalformedTable { row: r, len_or_entry: row.len() });
            }
            for &v in row {
                if (v as usize) >= n {
                    return Err(LoopError::MalformedTable { row: r, len_or_entry: v as usize });
                }
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(n, table)
    }

    /// Validates a flat row-major index array as a loop table.
    pub fn from_flat(n: usize, table: Vec<u16>) -> Result<Self, LoopError> {
        if n == 0 || table.len() != n * n || n > u16::MAX as usize {
            return Err(LoopError::MalformedTable { row: 0, len_or_entry: table.len() });
        }
        for (i, &v) in table.iter().enumerate() {
            if (v as usize) >= n {
                return Err(LoopError::MalformedTable { row: i / n, len_or_entry: v as usize });
            }
        }
        // Latin property with repeat coordinates.
        let mut seen_at = vec![usize::MAX; n];
        for r in 0..n {
            seen_at.fill(usize::MAX);
            for c in 0..n {
                let v = table[r * n + c] as usize;
                if seen_at[v] != usize::MAX {
                    return Err(LoopError::RowRepeat { row: r, cols: (seen_at[v], c) });
                }
                seen_at[v] = c;
            }
        }
        for c in 0..n {
            seen_at.fill(usize::MAX);
            for r in 0..n {
                let v = table[r * n + c] as usize;
                if seen_at[v] != usize::MAX {
                    return Err(LoopError::ColRepeat { col: c, rows: (seen_at[v], r) });
                }
                seen_at[v] = r;
            }
        }
        // Two-sided identity.
        let mut identity = None;
        for e in 0..n {
            let left_id = (0..n).all(|x| table[e * n + x] == x as u16);
            let right_id = (0..n).all(|x| table[x * n + e] == x as u16);
            if left_id && right_id {
                if identity.is_some() {
                    return Err(LoopError::MultipleIdentities);
                }
                identity = Some(e as u16);
            }
        }
        match identity {
            Some(e) => Ok(CayleyTable { n, table, identity: e }),
            None => Err(LoopError::NoIdentity),
        }
    }

    /// Loop order `n`.
    pub fn order(&self) -> usize {
        self.n
    }

    /// The identity element.
    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    /// Product `x * y`.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    /// Row-major flat table.
    pub fn flat(&self) -> &[u16] {
        &self.table
    }

    /// The left translation `y ↦ x*y` (row `x` read as an image array).
    pub fn left_translation(&self, x: usize) -> Permutation {
        let images = self.table[x * self.n..(x + 1) * self.n].to_vec();
        Permutation::from_images(images).expect("rows of a valid loop table are bijections")
    }

    /// Left division: the unique `z` with `x * z = y`.
    pub fn left_div(&self, x: usize, y: usize) -> usize {
        (0..self.n)
            .find(|&z| self.mul(x, z) == y)
            .expect("Latin row solves x*z = y")
    }

    /// The two-sided inverse of `x`, if it exists.
    ///
    /// The left inverse (`z*x = e`) and right inverse (`x*z = e`) always
    /// exist in a loop but need not coincide.
    pub fn two_sided_inverse(&self, x: usize) -> Option<usize> {
        let e = self.identity();
        let right = self.left_div(x, e); // x * right = e
        if self.mul(right, x) == e {
            Some(right)
        } else {
            None
        }
    }

    /// The inner mapping `δ_{x,y} = λ_{xy}⁻¹ ∘ λ_x ∘ λ_y`; fixes the identity.
    pub fn inner_mapping(&self, x: usize, y: usize) -> Permutation {
        let xy = self.mul(x, y);
        self.left_translation(xy)
            .inverse()
            .compose(&self.left_translation(x))
            .compose(&self.left_translation(y))
    }

    /// Is the table a group (associative)?
    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// Lexicographically first triple with `(xy)z != x(yz)`, if any.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Left Bol identity `x(y*(xz)) = (x*(yx))z` over all triples.
    pub fn is_left_bol(&self) -> bool {
        self.left_bol_witness().is_none()
    }

    /// Lexicographically first triple violating the left Bol identity.
    pub fn left_bol_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                let x_yx = self.mul(x, self.mul(y, x));
                for z in 0..self.n {
                    let lhs = self.mul(x, self.mul(y, self.mul(x, z)));
                    let rhs = self.mul(x_yx, z);
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Moufang identity `(xy)(zx) = x((yz)x)` over all triples.
    pub fn is_moufang(&self) -> bool {
        self.moufang_witness().is_none()
    }

    /// Lexicographically first triple violating the Moufang identity.
    pub fn moufang_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    let lhs = self.mul(self.mul(x, y), self.mul(z, x));
                    let rhs = self.mul(x, self.mul(self.mul(y, z), x));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Automorphic inverse property `(xy)⁻¹ = x⁻¹ y⁻¹` over all pairs.
    ///
    /// Errors with [`LoopError::NoInverse`] if some element has no
    /// two-sided inverse: the property is then undefined, not false.
    pub fn has_aip(&self) -> Result<bool, LoopError> {
        Ok(self.aip_witness()?.is_none())
    }

    /// Lexicographically first pair violating the automorphic inverse property.
    pub fn aip_witness(&self) -> Result<Option<(usize, usize)>, LoopError> {
        let inv: Vec<usize> = (0..self.n)
            .map(|x| {
                self.two_sided_inverse(x)
                    .ok_or(LoopError::NoInverse { element: x })
            })
            .collect::<Result<_, _>>()?;
        for x in 0..self.n {
            for y in 0..self.n {
                if inv[self.mul(x, y)] != self.mul(inv[x], inv[y]) {
                    return Ok(Some((x, y)));
                }
            }
        }
        Ok(None)
    }

    /// The smallest subset containing `seed` and the identity that is
    /// closed under the product.
    ///
    /// In a finite loop, product closure forces closure under both
    /// divisions and under inverses, so no power-associativity is assumed.
    pub fn subloop_generated(&self, seed: &[usize]) -> SubloopMask {
        let mut members = vec![false; self.n];
        members[self.identity()] = true;
        for &s in seed {
            members[s] = true;
        }
        loop {
            let current: Vec<usize> = (0..self.n).filter(|&i| members[i]).collect();
            let mut grew = false;
            for &a in &current {
                for &b in &current {
                    let ab = self.mul(a, b);
                    if !members[ab] {
                        members[ab] = true;
                        grew = true;
                    }
                }
            }
            if !grew {
                return SubloopMask { members };
            }
        }
    }

    /// Checks that `members` is product-closed and contains the identity.
    pub fn is_subloop(&self, mask: &SubloopMask) -> bool {
        if mask.members.len() != self.n || !mask.members[self.identity()] {
            return false;
        }
        let elems = mask.elements();
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| mask.members[self.mul(a, b)]))
    }

    /// Normality test: for every `a, b` the sets `(ab)N`, `a(bN)` and
    /// `(aN)b` coincide.
    ///
    /// Set equality is decided by bitmask comparison, so the check is
    /// exact in `O(n² |N|)`.
    pub fn is_normal_subloop(&self, mask: &SubloopMask) -> Result<bool, LoopError> {
        Ok(self.normality_witness(mask)?.is_none())
    }

    /// Lexicographically first pair `(a, b)` witnessing non-normality.
    pub fn normality_witness(
        &self,
        mask: &SubloopMask,
    ) -> Result<Option<(usize, usize)>, LoopError> {
        if !self.is_subloop(mask) {
            return Err(LoopError::NotASubloop);
        }
        let members = mask.elements();
        // Bitmask set comparison; orders beyond 128 are far outside the
        // exhaustive-enumeration scale this crate targets.
        assert!(self.n <= 128, "normality check supports order <= 128");
        let set = |f: &dyn Fn(usize) -> usize| -> u128 {
            let mut bits = 0u128;
            for &m in &members {
                bits |= 1u128 << f(m);
            }
            bits
        };
        for a in 0..self.n {
            for b in 0..self.n {
                let ab = self.mul(a, b);
                let ab_n = set(&|m| self.mul(ab, m));
                let a_bn = set(&|m| self.mul(a, self.mul(b, m)));
                let an_b = set(&|m| self.mul(self.mul(a, m), b));
                if ab_n != a_bn || ab_n != an_b {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    /// The factor loop `L/N` on coset labels together with the canonical
    /// epimorphism.
    ///
    /// Cosets are labelled `0..` in order of their smallest member.
    /// Well-definedness of the coset product is verified exhaustively.
    pub fn factor_loop(&self, mask: &SubloopMask) -> Result<(CayleyTable, LoopHom), LoopError> {
        if !self.is_normal_subloop(mask)? {
            return Err(LoopError::NotNormal);
        }
        // Partition into right cosets Nx; overlapping cosets would mean
        // the subloop is not normal after all.
        let mut label = vec![usize::MAX; self.n];
        let members = mask.elements();
        let mut num_cosets = 0;
        for x in 0..self.n {
            if label[x] != usize::MAX {
                continue;
            }
            for &m in &members {
                let c = self.mul(m, x);
                if label[c] != usize::MAX {
                    return Err(LoopError::NotNormal);
                }
                label[c] = num_cosets;
            }
            num_cosets += 1;
        }
        let k = num_cosets;
        // Coset product, checked well-defined over all representatives.
        let mut factor = vec![u16::MAX; k * k];
        for x in 0..self.n {
            for y in 0..self.n {
                let cell = label[x] * k + label[y];
                let prod = label[self.mul(x, y)] as u16;
                if factor[cell] == u16::MAX {
                    factor[cell] = prod;
                } else if factor[cell] != prod {
                    return Err(LoopError::NotNormal);
                }
            }
        }
        let quotient = CayleyTable::from_flat(k, factor)?;
        let hom = LoopHom {
            source_order: self.n,
            target_order: k,
            map: label.iter().map(|&l| l as u16).collect(),
        };
        debug_assert_eq!(hom.map[self.identity()] as usize, quotient.identity());
        Ok((quotient, hom))
    }

    /// All subloops, generated by closing single elements and joining
    /// closed subloops until a fixpoint.
    ///
    /// Complete because every subloop is the join of the cyclic subloops
    /// of its members. Bounded by `bound` on the loop order.
    pub fn subloops(&self, bound: usize) -> Result<Vec<SubloopMask>, LoopError> {
        if self.n > bound {
            return Err(LoopError::OrderBoundExceeded { order: self.n, bound });
        }
        fn push(found: &mut Vec<SubloopMask>, m: SubloopMask) -> bool {
            if found.iter().any(|f| f.members == m.members) {
                false
            } else {
                found.push(m);
                true
            }
        }
        let mut found: Vec<SubloopMask> = Vec::new();
        push(&mut found, self.subloop_generated(&[]));
        for x in 0..self.n {
            push(&mut found, self.subloop_generated(&[x]));
        }
        // Close under pairwise joins; every subloop is a join of cyclic ones.
        loop {
            let mut grew = false;
            let snapshot = found.clone();
            for a in &snapshot {
                for b in &snapshot {
                    let union: Vec<usize> = (0..self.n)
                        .filter(|&i| a.members[i] || b.members[i])
                        .collect();
                    grew |= push(&mut found, self.subloop_generated(&union));
                }
            }
            if !grew {
                break;
            }
        }
        found.sort_by(|a, b| {
            (a.size(), a.elements()).cmp(&(b.size(), b.elements()))
        });
        Ok(found)
    }

    /// All normal subloops (including `{e}` and `L`), with the default
    /// order bound.
    pub fn normal_subloops(&self) -> Result<Vec<SubloopMask>, LoopError> {
        self.normal_subloops_bounded(DEFAULT_SUBLOOP_ORDER_BOUND)
    }

    /// All normal subloops with an explicit order bound.
    pub fn normal_subloops_bounded(&self, bound: usize) -> Result<Vec<SubloopMask>, LoopError> {
        let all = self.subloops(bound)?;
        let mut normal = Vec::new();
        for s in all {
            if self.is_normal_subloop(&s)? {
                normal.push(s);
            }
        }
        Ok(normal)
    }

    /// Relabels the table by a bijection `f` (an isomorphic copy with
    /// `f(x) ∘ f(y) = f(x*y)`).
    pub fn relabel(&self, f: &Permutation) -> CayleyTable {
        assert_eq!(f.degree(), self.n);
        let mut table = vec![0u16; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                table[f.apply(x) * self.n + f.apply(y)] = f.apply(self.mul(x, y)) as u16;
            }
        }
        CayleyTable::from_flat(self.n, table).expect("relabelling preserves the loop axioms")
    }
}

/// A subloop of a parent loop, stored as a membership mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubloopMask {
    members: Vec<bool>,
}

impl SubloopMask {
    /// Builds a mask from an explicit element list (no closure is taken).
    pub fn from_elements(parent_order: usize, elements: &[usize]) -> Self {
        let mut members = vec![false; parent_order];
        for &e in elements {
            members[e] = true;
        }
        SubloopMask { members }
    }

    /// Members in ascending order.
    pub fn elements(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&i| self.members[i]).collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members[x]
    }

    pub fn size(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    /// Proper and nontrivial: `1 < |N| < n`.
    pub fn is_proper_nontrivial(&self) -> bool {
        let s = self.size();
        s > 1 && s < self.members.len()
    }
}

/// A loop homomorphism given by its value table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopHom {
    source_order: usize,
    target_order: usize,
    map: Vec<u16>,
}

impl LoopHom {
    /// Wraps a value table as a homomorphism candidate; the property
    /// itself is checked by [`LoopHom::verify`] / [`LoopHom::kernel`].
    pub fn new(source_order: usize, target_order: usize, map: Vec<u16>) -> Self {
        assert_eq!(map.len(), source_order);
        LoopHom { source_order, target_order, map }
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    /// Image of an element.
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    /// Checks `h(x*y) = h(x)∘h(y)` for all pairs and `h(e) = e'`.
    pub fn verify(&self, source: &CayleyTable, target: &CayleyTable) -> Result<(), LoopError> {
        for x in 0..self.source_order {
            for y in 0..self.source_order {
                if self.apply(source.mul(x, y)) != target.mul(self.apply(x), self.apply(y)) {
                    return Err(LoopError::NotAHomomorphism { x, y });
                }
            }
        }
        if self.apply(source.identity()) != target.identity() {
            return Err(LoopError::NotAHomomorphism {
                x: source.identity(),
                y: source.identity(),
            });
        }
        Ok(())
    }

    /// The kernel `{x : h(x) = e'}` as a subloop mask; verifies the
    /// homomorphism property first.
    pub fn kernel(
        &self,
        source: &CayleyTable,
        target: &CayleyTable,
    ) -> Result<SubloopMask, LoopError> {
        self.verify(source, target)?;
        let e = target.identity();
        let elems: Vec<usize> = (0..self.source_order).filter(|&x| self.apply(x) == e).collect();
        Ok(SubloopMask::from_elements(self.source_order, &elems))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables;

    #[test]
    fn z3_is_valid_with_identity_zero() {
        let l = tables::cyclic(3);
        assert_eq!(l.order(), 3);
        assert_eq!(l.identity(), 0);
    }

    #[test]
    fn row_repeat_reported_with_coordinates() {
        let rows = vec![vec![0u16, 0, 1], vec![1, 2, 0], vec![2, 1, 0]];
        assert_eq!(
            CayleyTable::from_rows(&rows),
            Err(LoopError::RowRepeat { row: 0, cols: (0, 1) })
        );
    }

    #[test]
    fn latin_square_without_identity_rejected() {
        // Rows are cyclic shifts starting at 1: Latin, but no identity row.
        let rows = vec![vec![1u16, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        assert_eq!(CayleyTable::from_rows(&rows), Err(LoopError::NoIdentity));
    }

    #[test]
    fn identity_need_not_be_element_zero() {
        // Z3 relabelled so that the identity is 2.
        let l = tables::cyclic(3);
        let f = Permutation::from_images(vec![2, 0, 1]).unwrap();
        let relabelled = l.relabel(&f);
        assert_eq!(relabelled.identity(), 2);
    }

    #[test]
    fn groups_satisfy_bol_and_moufang() {
        for l in [tables::cyclic(6), tables::dihedral(3), tables::quaternion8()] {
            assert!(l.is_left_bol());
            assert!(l.is_moufang());
        }
    }

    #[test]
    fn s3_fails_aip_with_witness() {
        let s3 = tables::dihedral(3);
        let w = s3.aip_witness().unwrap();
        assert!(w.is_some());
        let (x, y) = w.unwrap();
        let inv = |a: usize| s3.two_sided_inverse(a).unwrap();
        assert_ne!(inv(s3.mul(x, y)), s3.mul(inv(x), inv(y)));
    }

    #[test]
    fn abelian_groups_satisfy_aip() {
        assert_eq!(tables::cyclic(5).has_aip(), Ok(true));
        assert_eq!(tables::elementary_abelian_2(2).has_aip(), Ok(true));
    }

    #[test]
    fn left_translation_of_identity_is_identity_perm() {
        let l = tables::cyclic(4);
        assert!(l.left_translation(0).is_identity());
        // λ_1 in Z4 is the 4-cycle (0 1 2 3).
        assert_eq!(l.left_translation(1).images(), &[1, 2, 3, 0]);
    }

    #[test]
    fn inner_mappings_of_groups_are_trivial() {
        let l = tables::dihedral(4);
        for x in 0..l.order() {
            for y in 0..l.order() {
                assert!(l.inner_mapping(x, y).is_identity());
            }
        }
    }

    #[test]
    fn inner_mapping_fixes_identity() {
        let l = tables::quaternion8();
        for x in 0..8 {
            for y in 0..8 {
                assert_eq!(l.inner_mapping(x, y).apply(l.identity()), l.identity());
            }
        }
    }

    #[test]
    fn subloop_generated_examples() {
        let z6 = tables::cyclic(6);
        assert_eq!(z6.subloop_generated(&[]).elements(), vec![0]);
        assert_eq!(z6.subloop_generated(&[2]).elements(), vec![0, 2, 4]);
    }

    #[test]
    fn trivial_and_full_subloops_are_normal() {
        let l = tables::dihedral(4);
        let trivial = l.subloop_generated(&[]);
        let full = l.subloop_generated(&(0..8).collect::<Vec<_>>());
        assert_eq!(l.is_normal_subloop(&trivial), Ok(true));
        assert_eq!(l.is_normal_subloop(&full), Ok(true));
    }

    #[test]
    fn non_normal_subgroup_detected() {
        // A reflection subgroup of S3 is not normal.
        let s3 = tables::dihedral(3);
        let sub = s3.subloop_generated(&[3]);
        assert_eq!(sub.size(), 2);
        assert_eq!(s3.is_normal_subloop(&sub), Ok(false));
        assert!(s3.normality_witness(&sub).unwrap().is_some());
    }

    #[test]
    fn normality_rejects_non_subloop() {
        let z4 = tables::cyclic(4);
        let not_sub = SubloopMask::from_elements(4, &[0, 1]);
        assert_eq!(z4.is_normal_subloop(&not_sub), Err(LoopError::NotASubloop));
    }

    #[test]
    fn factor_z4_by_02_is_z2() {
        let z4 = tables::cyclic(4);
        let n = z4.subloop_generated(&[2]);
        let (q, hom) = z4.factor_loop(&n).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(hom.kernel(&z4, &q).unwrap().elements(), vec![0, 2]);
    }

    #[test]
    fn factor_by_full_loop_is_trivial() {
        let z4 = tables::cyclic(4);
        let full = z4.subloop_generated(&[1]);
        assert_eq!(full.size(), 4);
        let (q, _) = z4.factor_loop(&full).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn hom_kernel_of_mod3_reduction() {
        let z6 = tables::cyclic(6);
        let z3 = tables::cyclic(3);
        let hom = LoopHom::new(6, 3, (0..6u16).map(|x| x % 3).collect());
        assert_eq!(hom.kernel(&z6, &z3).unwrap().elements(), vec![0, 3]);
    }

    #[test]
    fn non_homomorphism_rejected_with_witness() {
        let z4 = tables::cyclic(4);
        let z2 = tables::cyclic(2);
        // x mod 2 is a hom; this flips one value to break it.
        let bad = LoopHom::new(4, 2, vec![0, 1, 1, 1]);
        assert!(matches!(
            bad.kernel(&z4, &z2),
            Err(LoopError::NotAHomomorphism { .. })
        ));
    }

    #[test]
    fn normal_subloops_of_z4() {
        let z4 = tables::cyclic(4);
        let ns = z4.normal_subloops().unwrap();
        let sets: Vec<Vec<usize>> = ns.iter().map(|m| m.elements()).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn normal_subloops_of_prime_cyclic_are_trivial() {
        let z5 = tables::cyclic(5);
        let ns = z5.normal_subloops().unwrap();
        assert_eq!(ns.len(), 2);
    }

    #[test]
    fn subloop_bound_enforced() {
        let l = tables::cyclic(17);
        assert!(matches!(
            l.normal_subloops(),
            Err(LoopError::OrderBoundExceeded { order: 17, bound: 16 })
        ));
    }
}
