//! Finite Boolean algebras, Boolean subalgebras of power sets, and
//! homomorphisms between them.
//!
//! Every finite algebra is stored atom-indexed: an element is an [`Elem`]
//! whose bit `i` is set iff atom `i` lies below it. A [`BoolAlg`] also carries
//! a concrete realization of each atom as a block of a partition of a ground
//! set `{0..ground}`, so the same type serves as the power algebra `P(n)`
//! (singleton blocks) and as a subalgebra of `P(X)` (arbitrary blocks).

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A subset of a ground set `{0..64}`.
pub type Mask = u64;
/// An element of a finite Boolean algebra, encoded over its atoms.
pub type Elem = u32;

pub const MAX_ATOMS: usize = 16;
pub const MAX_GROUND: usize = 64;
/// Default cap on the number of homomorphisms a single enumeration may produce.
pub const DEFAULT_HOM_LIMIT: usize = 1 << 20;

pub(crate) fn full_mask(n: usize) -> Mask {
    if n >= 64 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

pub(crate) fn bits(mask: Mask) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// A finite Boolean algebra realized as a partition of a ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolAlg {
    ground: usize,
    blocks: Vec<Mask>,
}

impl BoolAlg {
    /// The power algebra with `n` atoms.
    pub fn power(n: usize) -> Result<Self> {
        if n > MAX_ATOMS {
            return Err(Error::BoundExceeded {
                what: "atom count",
                got: n,
                limit: MAX_ATOMS,
            });
        }
        Ok(BoolAlg {
            ground: n,
            blocks: (0..n).map(|i| 1 << i).collect(),
        })
    }

    /// The two-element algebra.
    pub fn two() -> Self {
        BoolAlg {
            ground: 1,
            blocks: vec![1],
        }
    }

    /// The one-element algebra, in which `0 = 1`.
    pub fn trivial() -> Self {
        BoolAlg {
            ground: 0,
            blocks: Vec::new(),
        }
    }

    /// Builds the subalgebra of `P(ground)` whose atoms are `blocks`.
    ///
    /// The blocks must be nonempty, pairwise disjoint, and cover the ground
    /// set. They are reordered by least element.
    pub fn from_blocks(ground: usize, mut blocks: Vec<Mask>) -> Result<Self> {
        check_ground(ground)?;
        if blocks.len() > MAX_ATOMS {
            return Err(Error::BoundExceeded {
                what: "atom count",
                got: blocks.len(),
                limit: MAX_ATOMS,
            });
        }
        let full = full_mask(ground);
        let mut seen = 0;
        for &b in &blocks {
            if b == 0 || b & !full != 0 || b & seen != 0 {
                return Err(Error::NotSubalgebra(format!(
                    "block {b:#b} is empty, overlaps, or leaves the ground set"
                )));
            }
            seen |= b;
        }
        if seen != full {
            return Err(Error::NotSubalgebra("blocks do not cover the ground set".into()));
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(BoolAlg { ground, blocks })
    }

    /// The smallest subalgebra of `P(ground)` containing every generator.
    pub fn boolean_closure(ground: usize, generators: &[Mask]) -> Result<Self> {
        check_ground(ground)?;
        let full = full_mask(ground);
        let mut blocks = if ground == 0 { Vec::new() } else { vec![full] };
        for &g in generators {
            if g & !full != 0 {
                return Err(Error::NotSubalgebra(format!(
                    "generator {g:#b} is not a subset of the ground set"
                )));
            }
            blocks = blocks
                .into_iter()
                .flat_map(|b| [b & g, b & !g])
                .filter(|&b| b != 0)
                .collect();
            if blocks.len() > MAX_ATOMS {
                return Err(Error::BoundExceeded {
                    what: "atom count",
                    got: blocks.len(),
                    limit: MAX_ATOMS,
                });
            }
        }
        blocks.sort_by_key(|b| b.trailing_zeros());
        Ok(BoolAlg { ground, blocks })
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    pub fn atom_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn size(&self) -> usize {
        1 << self.blocks.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.is_empty()
    }

    /// True iff this is literally `P(n)`: singleton blocks in ground order.
    pub fn is_power(&self) -> bool {
        self.ground == self.blocks.len() && self.blocks.iter().enumerate().all(|(i, &b)| b == 1 << i)
    }

    pub fn bottom(&self) -> Elem {
        0
    }

    pub fn top(&self) -> Elem {
        ((1u64 << self.blocks.len()) - 1) as Elem
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        a & b
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        a | b
    }

    pub fn complement(&self, a: Elem) -> Elem {
        !a & self.top()
    }

    pub fn le(&self, a: Elem, b: Elem) -> bool {
        a & !b == 0
    }

    pub fn big_join(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items.into_iter().fold(0, |acc, x| acc | x)
    }

    pub fn big_meet(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items.into_iter().fold(self.top(), |acc, x| acc & x)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size() as Elem
    }

    pub fn nonzero(&self) -> impl Iterator<Item = Elem> {
        1..self.size() as Elem
    }

    pub fn atoms(&self) -> impl Iterator<Item = Elem> {
        (0..self.blocks.len()).map(|i| 1 << i)
    }

    pub fn is_atom(&self, e: Elem) -> bool {
        e != 0 && e & (e - 1) == 0 && (e as u64) < (1u64 << self.blocks.len())
    }

    /// Index of an atom in [`BoolAlg::atoms`] order.
    pub fn atom_index(&self, e: Elem) -> Result<usize> {
        if self.is_atom(e) {
            Ok(e.trailing_zeros() as usize)
        } else {
            Err(Error::InvalidAtom(e))
        }
    }

    /// The subset of the ground set denoted by `e`.
    pub fn set_of(&self, e: Elem) -> Mask {
        bits(e as Mask).fold(0, |acc, i| acc | self.blocks[i])
    }

    /// The element denoting `set`, if `set` is a member of the algebra.
    pub fn code_of(&self, set: Mask) -> Option<Elem> {
        let mut code = 0;
        let mut covered = 0;
        for (i, &b) in self.blocks.iter().enumerate() {
            if b & set == b {
                code |= 1 << i;
                covered |= b;
            } else if b & set != 0 {
                return None;
            }
        }
        (covered == set).then_some(code)
    }

    pub fn contains_set(&self, set: Mask) -> bool {
        self.code_of(set).is_some()
    }

    /// All members as subsets of the ground set, in element order.
    pub fn members(&self) -> Vec<Mask> {
        self.elements().map(|e| self.set_of(e)).collect()
    }

    /// `self ⊆ other` as families of subsets of a common ground set.
    pub fn is_subalgebra_of(&self, other: &BoolAlg) -> bool {
        self.ground == other.ground && other.blocks.iter().all(|&ob| self.blocks.iter().any(|&b| ob & b == ob))
    }

    /// Reads `e` as a subset of the atoms, i.e. as a member of `P(At(self))`.
    pub fn atoms_below(&self, e: Elem) -> impl Iterator<Item = Elem> + '_ {
        bits(e as Mask).map(|i| 1 << i)
    }
}

fn check_ground(ground: usize) -> Result<()> {
    if ground > MAX_GROUND {
        return Err(Error::BoundExceeded {
            what: "ground set size",
            got: ground,
            limit: MAX_GROUND,
        });
    }
    Ok(())
}

/// Flags computed for a [`BoolHom`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct HomFlags {
    pub is_valid_hom: bool,
    pub is_mono: bool,
    pub is_complete: bool,
}

/// A map between finite Boolean algebras, stored as a full table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolHom {
    domain: Arc<BoolAlg>,
    codomain: Arc<BoolAlg>,
    table: Vec<Elem>,
}

/// Tables with at most this many entries are validated pairwise.
const PAIRWISE_LIMIT: usize = 256;

impl BoolHom {
    /// Wraps a table. Only shape is checked; use [`BoolHom::is_valid`] for
    /// the homomorphism laws.
    pub fn new(domain: Arc<BoolAlg>, codomain: Arc<BoolAlg>, table: Vec<Elem>) -> Result<Self> {
        if table.len() != domain.size() {
            return Err(Error::InvalidHom(format!(
                "table has {} entries, domain has {} elements",
                table.len(),
                domain.size()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&e| e as usize >= codomain.size()) {
            return Err(Error::InvalidHom(format!(
                "image {bad} is not an element of the codomain"
            )));
        }
        Ok(BoolHom {
            domain,
            codomain,
            table,
        })
    }

    /// Extends an assignment of images to the domain's atoms by joins.
    pub fn from_atom_images(domain: Arc<BoolAlg>, codomain: Arc<BoolAlg>, images: &[Elem]) -> Result<Self> {
        if images.len() != domain.atom_count() {
            return Err(Error::InvalidHom("one image per atom required".into()));
        }
        let table = domain
            .elements()
            .map(|a| bits(a as Mask).fold(0, |acc, i| acc | images[i]))
            .collect();
        BoolHom::new(domain, codomain, table)
    }

    pub fn identity(alg: &Arc<BoolAlg>) -> Self {
        BoolHom {
            domain: alg.clone(),
            codomain: alg.clone(),
            table: alg.elements().collect(),
        }
    }

    pub fn domain(&self) -> &Arc<BoolAlg> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<BoolAlg> {
        &self.codomain
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a as usize]
    }

    /// For homomorphisms into `2`: whether `a` is sent to `1`.
    pub fn holds(&self, a: Elem) -> bool {
        self.table[a as usize] != 0
    }

    pub fn atom_images(&self) -> Vec<Elem> {
        self.domain.atoms().map(|a| self.apply(a)).collect()
    }

    /// The first homomorphism law this table breaks, if any.
    pub fn validity_violation(&self) -> Option<String> {
        let (d, c) = (&*self.domain, &*self.codomain);
        if self.apply(d.bottom()) != c.bottom() {
            return Some("0 is not preserved".into());
        }
        if self.apply(d.top()) != c.top() {
            return Some("1 is not preserved".into());
        }
        if d.size() <= PAIRWISE_LIMIT {
            for a in d.elements() {
                if self.apply(d.complement(a)) != c.complement(self.apply(a)) {
                    return Some(format!("complement of {a} is not preserved"));
                }
                for b in d.elements() {
                    if self.apply(d.meet(a, b)) != c.meet(self.apply(a), self.apply(b)) {
                        return Some(format!("meet of {a} and {b} is not preserved"));
                    }
                    if self.apply(d.join(a, b)) != c.join(self.apply(a), self.apply(b)) {
                        return Some(format!("join of {a} and {b} is not preserved"));
                    }
                }
            }
            return None;
        }
        // Large domains: atom images must partition the top, and the table
        // must be the join-extension of the atom images.
        let images = self.atom_images();
        let mut seen = 0;
        for &img in &images {
            if img & seen != 0 {
                return Some("atom images overlap".into());
            }
            seen |= img;
        }
        if seen != c.top() {
            return Some("atom images do not cover 1".into());
        }
        d.elements()
            .find(|&a| self.apply(a) != bits(a as Mask).fold(0, |acc, i| acc | images[i]))
            .map(|a| format!("value at {a} is not the join of its atoms' images"))
    }

    pub fn is_valid(&self) -> bool {
        self.validity_violation().is_none()
    }

    /// Injectivity of the table.
    pub fn is_mono(&self) -> bool {
        let distinct: BTreeSet<Elem> = self.table.iter().copied().collect();
        distinct.len() == self.table.len()
    }

    /// Whether only `0` is sent to `0`.
    pub fn kernel_is_trivial(&self) -> bool {
        self.table.iter().skip(1).all(|&e| e != 0)
    }

    /// Preservation of every join of atoms and every meet of coatoms; for a
    /// finite domain these families generate all joins and meets.
    pub fn is_complete(&self) -> bool {
        if !self.is_valid() {
            return false;
        }
        let (d, c) = (&*self.domain, &*self.codomain);
        d.elements().all(|e| {
            let joined = c.big_join(d.atoms_below(e).map(|a| self.apply(a)));
            let met = c.big_meet(d.atoms_below(d.complement(e)).map(|a| self.apply(d.complement(a))));
            joined == self.apply(e) && met == self.apply(e)
        })
    }

    pub fn is_iso(&self) -> bool {
        self.is_valid() && self.is_mono() && self.domain.size() == self.codomain.size()
    }

    pub fn flags(&self) -> HomFlags {
        HomFlags {
            is_valid_hom: self.is_valid(),
            is_mono: self.is_mono(),
            is_complete: self.is_complete(),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &BoolHom) -> Result<BoolHom> {
        if *self.codomain != *next.domain {
            return Err(Error::InvalidHom("composition of mismatched homomorphisms".into()));
        }
        Ok(BoolHom {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            table: self.table.iter().map(|&e| next.apply(e)).collect(),
        })
    }

    pub fn inverse(&self) -> Option<BoolHom> {
        if !self.is_iso() {
            return None;
        }
        let mut table = vec![0; self.table.len()];
        for (a, &b) in self.table.iter().enumerate() {
            table[b as usize] = a as Elem;
        }
        Some(BoolHom {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            table,
        })
    }

    /// The image `α(A)` as a subalgebra of `P(At(codomain))`.
    pub fn image_subalgebra(&self) -> Result<BoolAlg> {
        let gens: Vec<Mask> = self.table.iter().map(|&e| e as Mask).collect();
        BoolAlg::boolean_closure(self.codomain.atom_count(), &gens)
    }
}

/// Every homomorphism `A → B`, ordered lexicographically by the images of
/// `A`'s atoms.
pub fn enumerate_homs(a: &Arc<BoolAlg>, b: &Arc<BoolAlg>) -> Result<Vec<BoolHom>> {
    enumerate_homs_bounded(a, b, DEFAULT_HOM_LIMIT)
}

pub fn enumerate_homs_bounded(a: &Arc<BoolAlg>, b: &Arc<BoolAlg>, limit: usize) -> Result<Vec<BoolHom>> {
    let (ka, kb) = (a.atom_count(), b.atom_count());
    let count = (ka as u128).checked_pow(kb as u32).unwrap_or(u128::MAX);
    if count > limit as u128 {
        return Err(Error::BoundExceeded {
            what: "homomorphism count",
            got: count.min(usize::MAX as u128) as usize,
            limit,
        });
    }
    // A homomorphism is fixed by which atom of A lies over each atom of B.
    let mut out = Vec::with_capacity(count as usize);
    let mut choice = vec![0usize; kb];
    for _ in 0..count {
        let mut images = vec![0 as Elem; ka];
        for (j, &i) in choice.iter().enumerate() {
            images[i] |= 1 << j;
        }
        out.push(BoolHom::from_atom_images(a.clone(), b.clone(), &images)?);
        for digit in choice.iter_mut() {
            *digit += 1;
            if *digit < ka {
                break;
            }
            *digit = 0;
        }
    }
    out.sort_by_key(BoolHom::atom_images);
    Ok(out)
}

/// `Bool(A, 2)`.
pub fn homs_into_two(a: &Arc<BoolAlg>) -> Result<Vec<BoolHom>> {
    enumerate_homs(a, &Arc::new(BoolAlg::two()))
}

/// Homomorphisms into `2` induced by atoms, with the index map from atoms
/// (or ground points) onto the distinct homomorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomHoms {
    /// Distinct homomorphisms, in order of first occurrence.
    pub points: Vec<BoolHom>,
    /// `index[i]` is the position in `points` of the homomorphism induced by
    /// the `i`-th atom or point.
    pub index: Vec<usize>,
}

impl AtomHoms {
    fn collect(homs: Vec<BoolHom>) -> Self {
        let mut points: Vec<BoolHom> = Vec::new();
        let index = homs
            .into_iter()
            .map(|h| match points.iter().position(|p| *p == h) {
                Some(i) => i,
                None => {
                    points.push(h);
                    points.len() - 1
                }
            })
            .collect();
        AtomHoms { points, index }
    }

    /// Whether the index map (`h_α`, `ȟ_B`, or `ĥ_{X,A}`) is injective.
    pub fn index_is_injective(&self) -> bool {
        self.points.len() == self.index.len()
    }
}

/// Context for one of the three atom-indexed constructions of a
/// homomorphism into `2`.
#[derive(Debug, Clone, Copy)]
pub enum AtomHomContext<'a> {
    /// `x̌(b) = 1 ⇔ x ≤ b` for an atom `x` of `B`.
    Check { algebra: &'a Arc<BoolAlg>, atom: Elem },
    /// `x̂(U) = 1 ⇔ x ∈ U` for a point `x` of the ground set of `A`.
    Hat { algebra: &'a Arc<BoolAlg>, point: usize },
    /// `α_x(a) = 1 ⇔ x ≤ α(a)` for an atom `x` of the codomain of `α`.
    Alpha { alpha: &'a BoolHom, atom: Elem },
}

pub fn atom_hom(ctx: AtomHomContext<'_>) -> Result<BoolHom> {
    let two = Arc::new(BoolAlg::two());
    match ctx {
        AtomHomContext::Check { algebra, atom } => {
            algebra.atom_index(atom)?;
            let table = algebra.elements().map(|b| algebra.le(atom, b) as Elem).collect();
            BoolHom::new(algebra.clone(), two, table)
        }
        AtomHomContext::Hat { algebra, point } => {
            if point >= algebra.ground() {
                return Err(Error::Precondition(format!(
                    "point {point} is outside the ground set of size {}",
                    algebra.ground()
                )));
            }
            let table = algebra
                .elements()
                .map(|u| (algebra.set_of(u) >> point & 1) as Elem)
                .collect();
            BoolHom::new(algebra.clone(), two, table)
        }
        AtomHomContext::Alpha { alpha, atom } => {
            alpha.codomain().atom_index(atom)?;
            let table = alpha
                .domain()
                .elements()
                .map(|a| alpha.codomain().le(atom, alpha.apply(a)) as Elem)
                .collect();
            BoolHom::new(alpha.domain().clone(), two, table)
        }
    }
}

/// `X̌_B` and `ȟ_B`.
pub fn x_check(b: &Arc<BoolAlg>) -> AtomHoms {
    AtomHoms::collect(
        b.atoms()
            .map(|atom| atom_hom(AtomHomContext::Check { algebra: b, atom }).expect("atom"))
            .collect(),
    )
}

/// `X̂_A` and `ĥ_{X,A}` for a subalgebra `A` of `P(X)`.
pub fn x_hat(a: &Arc<BoolAlg>) -> AtomHoms {
    AtomHoms::collect(
        (0..a.ground())
            .map(|point| atom_hom(AtomHomContext::Hat { algebra: a, point }).expect("point"))
            .collect(),
    )
}

/// `X_α` and `h_α`.
pub fn x_alpha(alpha: &BoolHom) -> AtomHoms {
    AtomHoms::collect(
        alpha
            .codomain()
            .atoms()
            .map(|atom| atom_hom(AtomHomContext::Alpha { alpha, atom }).expect("atom"))
            .collect(),
    )
}

/// Every Boolean subalgebra of `P(ground)`, one per set partition of the
/// ground set, in restricted-growth-string order.
pub fn enumerate_subalgebras(ground: usize) -> Result<Vec<BoolAlg>> {
    if ground > 10 {
        return Err(Error::BoundExceeded {
            what: "ground set for subalgebra enumeration",
            got: ground,
            limit: 10,
        });
    }
    let mut out = Vec::new();
    let mut label = vec![0usize; ground];
    loop {
        let parts = label.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![0 as Mask; parts];
        for (x, &l) in label.iter().enumerate() {
            blocks[l] |= 1 << x;
        }
        if parts <= MAX_ATOMS {
            out.push(BoolAlg::from_blocks(ground, blocks)?);
        }
        // next restricted growth string: label[i] <= 1 + max(label[..i])
        let mut i = ground;
        loop {
            if i <= 1 {
                return Ok(out);
            }
            i -= 1;
            let prefix_max = label[..i].iter().copied().max().unwrap_or(0);
            if label[i] <= prefix_max {
                label[i] += 1;
                for l in label.iter_mut().skip(i + 1) {
                    *l = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(a: BoolAlg) -> Arc<BoolAlg> {
        Arc::new(a)
    }

    /// Closure of a family under ∪, ∩, complement by naive fixpoint.
    fn closure_oracle(ground: usize, gens: &[Mask]) -> BTreeSet<Mask> {
        let full = full_mask(ground);
        let mut fam: BTreeSet<Mask> = gens.iter().copied().collect();
        fam.insert(0);
        fam.insert(full);
        loop {
            let cur: Vec<Mask> = fam.iter().copied().collect();
            let before = fam.len();
            for &a in &cur {
                fam.insert(full & !a);
                for &b in &cur {
                    fam.insert(a | b);
                    fam.insert(a & b);
                }
            }
            if fam.len() == before {
                return fam;
            }
        }
    }

    #[test]
    fn power_algebras() {
        let p2 = BoolAlg::power(2).unwrap();
        assert_eq!(p2.size(), 4);
        assert_eq!(p2.atoms().collect::<Vec<_>>(), vec![0b01, 0b10]);
        let p0 = BoolAlg::power(0).unwrap();
        assert_eq!(p0.size(), 1);
        assert_eq!(p0.top(), p0.bottom());
        assert_eq!(p0.atoms().count(), 0);
        let p3 = BoolAlg::power(3).unwrap();
        assert_eq!((p3.size(), p3.atom_count()), (8, 3));
        assert!(matches!(BoolAlg::power(17), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn closure_examples() {
        let a = BoolAlg::boolean_closure(3, &[0b001]).unwrap();
        let got: BTreeSet<Mask> = a.members().into_iter().collect();
        assert_eq!(got, BTreeSet::from([0, 0b001, 0b110, 0b111]));
        assert_eq!(got, closure_oracle(3, &[0b001]));

        let b = BoolAlg::boolean_closure(2, &[]).unwrap();
        assert_eq!(b.members(), vec![0, 0b11]);

        let c = BoolAlg::boolean_closure(3, &[0b001, 0b010]).unwrap();
        assert_eq!(c.members().len(), 8);
        assert!(c.is_power());
    }

    #[test]
    fn closure_matches_fixpoint_oracle_exhaustively() {
        for ground in 0..=4usize {
            let subsets: Vec<Mask> = (0..1u64 << ground).collect();
            // every pair of generators
            for &g in &subsets {
                for &h in &subsets {
                    let alg = BoolAlg::boolean_closure(ground, &[g, h]).unwrap();
                    let got: BTreeSet<Mask> = alg.members().into_iter().collect();
                    assert_eq!(got, closure_oracle(ground, &[g, h]), "{ground} {g:b} {h:b}");
                }
            }
        }
    }

    #[test]
    fn code_of_round_trips() {
        let a = BoolAlg::boolean_closure(3, &[0b001]).unwrap();
        for e in a.elements() {
            assert_eq!(a.code_of(a.set_of(e)), Some(e));
        }
        assert_eq!(a.code_of(0b010), None);
    }

    #[test]
    fn subalgebra_counts_are_bell_numbers() {
        for (n, bell) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)] {
            let subs = enumerate_subalgebras(n).unwrap();
            assert_eq!(subs.len(), bell);
            let distinct: BTreeSet<Vec<Mask>> = subs.iter().map(|a| a.members()).collect();
            assert_eq!(distinct.len(), bell);
            for a in &subs {
                assert_eq!(*a, BoolAlg::boolean_closure(n, &a.members()).unwrap());
            }
        }
    }

    #[test]
    fn hom_counts() {
        let two = arc(BoolAlg::two());
        let p2 = arc(BoolAlg::power(2).unwrap());
        let p3 = arc(BoolAlg::power(3).unwrap());
        assert_eq!(enumerate_homs(&p2, &two).unwrap().len(), 2);
        let id = enumerate_homs(&two, &two).unwrap();
        assert_eq!(id, vec![BoolHom::identity(&two)]);
        assert_eq!(enumerate_homs(&p3, &two).unwrap().len(), 3);
        let triv = arc(BoolAlg::trivial());
        assert!(enumerate_homs(&triv, &two).unwrap().is_empty());
        assert_eq!(enumerate_homs(&triv, &triv).unwrap().len(), 1);
        assert_eq!(enumerate_homs(&two, &triv).unwrap().len(), 1);
        assert_eq!(enumerate_homs(&p2, &triv).unwrap().len(), 1);
    }

    /// Brute force over every table of atom images, kept iff valid.
    fn homs_oracle(a: &Arc<BoolAlg>, b: &Arc<BoolAlg>) -> BTreeSet<Vec<Elem>> {
        let mut out = BTreeSet::new();
        let ka = a.atom_count();
        let total = (b.size() as u64).pow(ka as u32);
        for code in 0..total {
            let mut c = code;
            let images: Vec<Elem> = (0..ka)
                .map(|_| {
                    let e = (c % b.size() as u64) as Elem;
                    c /= b.size() as u64;
                    e
                })
                .collect();
            let h = BoolHom::from_atom_images(a.clone(), b.clone(), &images).unwrap();
            if h.is_valid() {
                out.insert(h.table().to_vec());
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for ka in 0..=3 {
            for kb in 0..=3 {
                let a = arc(BoolAlg::power(ka).unwrap());
                let b = arc(BoolAlg::power(kb).unwrap());
                let homs = enumerate_homs(&a, &b).unwrap();
                let got: BTreeSet<Vec<Elem>> = homs.iter().map(|h| h.table().to_vec()).collect();
                assert_eq!(got.len(), homs.len());
                assert_eq!(got, homs_oracle(&a, &b), "{ka} -> {kb}");
                for h in &homs {
                    assert!(h.is_valid());
                    assert!(h.is_complete());
                    assert_eq!(h.is_mono(), h.kernel_is_trivial());
                }
            }
        }
    }

    #[test]
    fn structural_validity_agrees_with_pairwise() {
        let a = arc(BoolAlg::power(3).unwrap());
        let b = arc(BoolAlg::power(2).unwrap());
        for h in enumerate_homs(&a, &b).unwrap() {
            assert!(h.is_valid());
        }
        let big = arc(BoolAlg::power(9).unwrap());
        let two = arc(BoolAlg::two());
        let homs = enumerate_homs(&big, &two).unwrap();
        assert_eq!(homs.len(), 9);
        assert!(homs.iter().all(BoolHom::is_valid));
        let mut bad = homs[0].table().to_vec();
        bad[3] ^= 1;
        assert!(!BoolHom::new(big, two, bad).unwrap().is_valid());
    }

    #[test]
    fn invalid_tables_are_flagged() {
        let p2 = arc(BoolAlg::power(2).unwrap());
        let h = BoolHom::new(p2.clone(), p2.clone(), vec![0, 1, 1, 3]).unwrap();
        assert!(!h.is_valid());
        assert!(!h.is_complete());
        assert!(BoolHom::new(p2.clone(), p2, vec![0, 1, 2]).is_err());
    }

    #[test]
    fn check_and_hat_examples() {
        let b = arc(BoolAlg::power(3).unwrap());
        let xc = atom_hom(AtomHomContext::Check {
            algebra: &b,
            atom: 0b010,
        })
        .unwrap();
        assert!(xc.holds(0b110));
        assert!(!xc.holds(0b001));
        assert!(matches!(
            atom_hom(AtomHomContext::Check {
                algebra: &b,
                atom: 0b011
            }),
            Err(Error::InvalidAtom(_))
        ));

        let a = arc(BoolAlg::boolean_closure(3, &[0b001]).unwrap());
        let xh = atom_hom(AtomHomContext::Hat { algebra: &a, point: 1 }).unwrap();
        assert!(xh.holds(a.code_of(0b110).unwrap()));
        assert!(!xh.holds(a.code_of(0b001).unwrap()));
    }

    #[test]
    fn alpha_of_inclusion_is_not_injective() {
        let a = arc(BoolAlg::boolean_closure(3, &[0b001]).unwrap());
        let p = arc(BoolAlg::power(3).unwrap());
        let table = a.elements().map(|e| a.set_of(e) as Elem).collect();
        let incl = BoolHom::new(a, p, table).unwrap();
        assert!(incl.is_valid() && incl.is_mono());
        let a1 = atom_hom(AtomHomContext::Alpha {
            alpha: &incl,
            atom: 0b010,
        })
        .unwrap();
        let a2 = atom_hom(AtomHomContext::Alpha {
            alpha: &incl,
            atom: 0b100,
        })
        .unwrap();
        assert_eq!(a1, a2);
        let xa = x_alpha(&incl);
        assert!(!xa.index_is_injective());
        assert_eq!(xa.index, vec![0, 1, 1]);
    }

    #[test]
    fn check_index_is_bijective() {
        for k in 0..=4 {
            let b = arc(BoolAlg::power(k).unwrap());
            let xc = x_check(&b);
            assert!(xc.index_is_injective());
            assert_eq!(xc.points.len(), k);
        }
    }

    #[test]
    fn composition_and_inverse() {
        let p2 = arc(BoolAlg::power(2).unwrap());
        let swap = BoolHom::from_atom_images(p2.clone(), p2.clone(), &[0b10, 0b01]).unwrap();
        assert!(swap.is_iso());
        let inv = swap.inverse().unwrap();
        assert_eq!(swap.then(&inv).unwrap(), BoolHom::identity(&p2));
        let two = arc(BoolAlg::two());
        let e = enumerate_homs(&p2, &two).unwrap();
        assert!(swap.then(&e[0]).unwrap().is_valid());
        assert!(e[0].then(&swap).is_err());
    }
}
