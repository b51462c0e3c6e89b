//! Finite topological spaces, their clopen and regular-closed algebras, and
//! maps between them.
//!
//! A finite topology is determined by the minimal open neighbourhood of each
//! point, so that is what a [`FinTopSpace`] stores; the open family is
//! materialized eagerly for enumeration.

use std::sync::Arc;

use crate::boolean::{bits, full_mask, BoolAlg, BoolHom, Elem, Mask};
use crate::error::{Error, Result};

/// Largest point count for which the open family is materialized.
pub const MAX_POINTS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinTopSpace {
    n: usize,
    nbhd: Vec<Mask>,
    opens: Vec<Mask>,
}

fn check_points(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::BoundExceeded {
            what: "point count",
            got: n,
            limit: MAX_POINTS,
        });
    }
    Ok(())
}

impl FinTopSpace {
    /// The topology generated by `basis` (closed under finite unions and
    /// intersections, together with `∅` and `X`).
    pub fn generate(n: usize, basis: &[Mask]) -> Result<Self> {
        check_points(n)?;
        let full = full_mask(n);
        if let Some(&bad) = basis.iter().find(|&&b| b & !full != 0) {
            return Err(Error::Precondition(format!(
                "basis member {bad:#b} leaves the point set"
            )));
        }
        let nbhd = (0..n)
            .map(|x| basis.iter().filter(|&&b| b >> x & 1 == 1).fold(full, |acc, &b| acc & b))
            .collect();
        Ok(Self::from_nbhds(n, nbhd))
    }

    fn from_nbhds(n: usize, nbhd: Vec<Mask>) -> Self {
        let opens = (0..1u64 << n).filter(|&s| bits(s).all(|x| nbhd[x] & !s == 0)).collect();
        FinTopSpace { n, nbhd, opens }
    }

    /// Builds a space from an explicit open family, which must be a topology.
    pub fn from_opens(n: usize, opens: &[Mask]) -> Result<Self> {
        let space = Self::generate(n, opens)?;
        let mut given: Vec<Mask> = opens.to_vec();
        given.push(0);
        given.push(full_mask(n));
        given.sort_unstable();
        given.dedup();
        if given != space.opens {
            return Err(Error::Precondition(
                "open family is not closed under unions and intersections".into(),
            ));
        }
        Ok(space)
    }

    pub fn discrete(n: usize) -> Result<Self> {
        let basis: Vec<Mask> = (0..n).map(|i| 1 << i).collect();
        Self::generate(n, &basis)
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        Self::generate(n, &[])
    }

    /// Points `{0, 1}` with opens `∅, {1}, {0, 1}`.
    pub fn sierpinski() -> Self {
        Self::generate(2, &[0b10]).expect("two points")
    }

    pub fn point_count(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Mask {
        full_mask(self.n)
    }

    pub fn opens(&self) -> &[Mask] {
        &self.opens
    }

    /// Minimal open neighbourhood of `x`.
    pub fn neighbourhood(&self, x: usize) -> Mask {
        self.nbhd[x]
    }

    pub fn is_open(&self, s: Mask) -> bool {
        bits(s).all(|x| self.nbhd[x] & !s == 0)
    }

    pub fn is_closed(&self, s: Mask) -> bool {
        self.is_open(self.full() & !s)
    }

    pub fn interior(&self, s: Mask) -> Mask {
        (0..self.n)
            .filter(|&x| self.nbhd[x] & !s == 0)
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn closure(&self, s: Mask) -> Mask {
        (0..self.n)
            .filter(|&x| self.nbhd[x] & s != 0)
            .fold(0, |acc, x| acc | 1 << x)
    }

    pub fn is_dense(&self, s: Mask) -> bool {
        self.closure(s) == self.full()
    }

    pub fn closed_sets(&self) -> Vec<Mask> {
        let mut c: Vec<Mask> = self.opens.iter().map(|&u| self.full() & !u).collect();
        c.sort_unstable();
        c
    }

    /// `CO(X)` as a sorted family.
    pub fn clopens(&self) -> Vec<Mask> {
        self.opens.iter().copied().filter(|&u| self.is_closed(u)).collect()
    }

    /// `CO(X)` as a Boolean subalgebra of `P(X)`.
    pub fn clopen_algebra(&self) -> BoolAlg {
        BoolAlg::boolean_closure(self.n, &self.clopens()).expect("clopens fit the ground set")
    }

    /// `RC(X)`: sets equal to the closure of their interior, sorted.
    pub fn regular_closed(&self) -> Vec<Mask> {
        self.closed_sets()
            .into_iter()
            .filter(|&f| self.closure(self.interior(f)) == f)
            .collect()
    }

    /// The subspace on `s`, with points renumbered in increasing order; the
    /// second component lists the original index of each new point.
    pub fn subspace(&self, s: Mask) -> (FinTopSpace, Vec<usize>) {
        let points: Vec<usize> = bits(s & self.full()).collect();
        let nbhd = points.iter().map(|&x| compress(self.nbhd[x] & s, &points)).collect();
        (Self::from_nbhds(points.len(), nbhd), points)
    }

    pub fn predicates(&self) -> SpacePredicates {
        space_predicates(self)
    }
}

/// Renumbers the members of `set` that lie in `points` by their position there.
pub(crate) fn compress(set: Mask, points: &[usize]) -> Mask {
    points
        .iter()
        .enumerate()
        .filter(|(_, &p)| set >> p & 1 == 1)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// Inverse of [`compress`].
pub(crate) fn expand(set: Mask, points: &[usize]) -> Mask {
    bits(set).fold(0, |acc, i| acc | 1 << points[i])
}

/// Every topology on `n` labeled points, obtained from the preorders on
/// `n` points (open sets are the up-sets).
pub fn enumerate_topologies(n: usize) -> Result<Vec<FinTopSpace>> {
    if n > 5 {
        return Err(Error::BoundExceeded {
            what: "points for topology enumeration",
            got: n,
            limit: 5,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for rel in 0..1u64 << pairs.len() {
        let mut up: Vec<Mask> = (0..n).map(|x| 1 << x).collect();
        for (k, &(x, y)) in pairs.iter().enumerate() {
            if rel >> k & 1 == 1 {
                up[x] |= 1 << y;
            }
        }
        let transitive = (0..n).all(|x| bits(up[x]).all(|y| up[y] & !up[x] == 0));
        if transitive {
            out.push(FinTopSpace::from_nbhds(n, up));
        }
    }
    Ok(out)
}

/// A function between finite sets `{0..n} → {0..m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinMap {
    images: Vec<usize>,
    codomain: usize,
}

impl FinMap {
    pub fn new(images: Vec<usize>, codomain: usize) -> Result<Self> {
        if let Some(&bad) = images.iter().find(|&&y| y >= codomain) {
            return Err(Error::Precondition(format!(
                "image {bad} outside codomain of size {codomain}"
            )));
        }
        Ok(FinMap { images, codomain })
    }

    pub fn identity(n: usize) -> Self {
        FinMap {
            images: (0..n).collect(),
            codomain: n,
        }
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FinMap) -> Result<FinMap> {
        if self.codomain != next.domain_size() {
            return Err(Error::Precondition("composition of mismatched maps".into()));
        }
        Ok(FinMap {
            images: self.images.iter().map(|&y| next.apply(y)).collect(),
            codomain: next.codomain,
        })
    }

    pub fn preimage(&self, s: Mask) -> Mask {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &y)| s >> y & 1 == 1)
            .fold(0, |acc, (x, _)| acc | 1 << x)
    }

    pub fn image(&self, s: Mask) -> Mask {
        bits(s).fold(0, |acc, x| acc | 1 << self.images[x])
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = 0u64;
        self.images.iter().all(|&y| {
            let fresh = seen >> y & 1 == 0;
            seen |= 1 << y;
            fresh
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.image(full_mask(self.images.len())) == full_mask(self.codomain)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn inverse(&self) -> Option<FinMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut images = vec![0; self.codomain];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Some(FinMap {
            images,
            codomain: self.images.len(),
        })
    }

    /// An open set of `y` whose preimage is not open in `x`, if any.
    pub fn continuity_violation(&self, x: &FinTopSpace, y: &FinTopSpace) -> Option<Mask> {
        y.opens().iter().copied().find(|&u| !x.is_open(self.preimage(u)))
    }

    pub fn is_continuous(&self, x: &FinTopSpace, y: &FinTopSpace) -> bool {
        self.domain_size() == x.point_count()
            && self.codomain == y.point_count()
            && self.continuity_violation(x, y).is_none()
    }

    pub fn is_open_map(&self, x: &FinTopSpace, y: &FinTopSpace) -> bool {
        x.opens().iter().all(|&u| y.is_open(self.image(u)))
    }

    pub fn is_homeomorphism(&self, x: &FinTopSpace, y: &FinTopSpace) -> bool {
        self.is_bijective() && self.is_continuous(x, y) && self.is_open_map(x, y)
    }

    /// Whether `self` is a homeomorphism of `x` onto its image, carrying the
    /// subspace topology from `y`.
    pub fn is_embedding(&self, x: &FinTopSpace, y: &FinTopSpace) -> bool {
        if !self.is_injective() || !self.is_continuous(x, y) {
            return false;
        }
        let (sub, pts) = y.subspace(self.image(x.full()));
        let onto = FinMap {
            images: self
                .images
                .iter()
                .map(|&t| pts.iter().position(|&p| p == t).expect("in image"))
                .collect(),
            codomain: pts.len(),
        };
        onto.is_homeomorphism(x, &sub)
    }
}

/// All functions `{0..n} → {0..m}`, lexicographic in the image sequence.
pub fn enumerate_maps(n: usize, m: usize) -> Vec<FinMap> {
    let total = (m as u64).pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut images = vec![0; n];
            for slot in images.iter_mut().rev() {
                *slot = (code % m as u64) as usize;
                code /= m as u64;
            }
            FinMap { images, codomain: m }
        })
        .collect()
}

/// All bijections `{0..n} → {0..n}` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> Vec<FinMap> {
    enumerate_maps(n, n).into_iter().filter(FinMap::is_bijective).collect()
}

/// `co(f): CO(Y) → CO(X)`, `U ↦ f⁻¹(U)`.
pub fn co_on_map(f: &FinMap, x: &FinTopSpace, y: &FinTopSpace) -> Result<BoolHom> {
    if f.domain_size() != x.point_count() || f.codomain_size() != y.point_count() {
        return Err(Error::Precondition("map does not fit the given spaces".into()));
    }
    if let Some(u) = f.continuity_violation(x, y) {
        return Err(Error::NotContinuous(u));
    }
    let (cy, cx) = (Arc::new(y.clopen_algebra()), Arc::new(x.clopen_algebra()));
    let table = cy
        .elements()
        .map(|u| {
            cx.code_of(f.preimage(cy.set_of(u)))
                .expect("preimage of a clopen under a continuous map is clopen")
        })
        .collect();
    BoolHom::new(cy, cx, table)
}

/// Topological predicates of a finite space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SpacePredicates {
    pub t2: bool,
    pub zero_dimensional: bool,
    pub discrete: bool,
    pub extremally_disconnected: bool,
    pub compact: bool,
    /// `CO(X) = RC(X)` as families; must hold when the space is both
    /// zero-dimensional and extremally disconnected.
    pub co_equals_rc: bool,
}

pub fn space_predicates(x: &FinTopSpace) -> SpacePredicates {
    let n = x.point_count();
    let t2 = (0..n).all(|p| (0..p).all(|q| x.neighbourhood(p) & x.neighbourhood(q) == 0));
    let co = x.clopen_algebra();
    let zero_dimensional = co
        .blocks()
        .iter()
        .all(|&b| bits(b).all(|p| b & !x.neighbourhood(p) == 0));
    let discrete = (0..n).all(|p| x.neighbourhood(p) == 1 << p);
    let extremally_disconnected = x.opens().iter().all(|&u| x.is_open(x.closure(u)));
    SpacePredicates {
        t2,
        zero_dimensional,
        discrete,
        extremally_disconnected,
        compact: true,
        co_equals_rc: x.clopens() == x.regular_closed(),
    }
}

/// `RC(X)` with `F ∨ G = F ∪ G`, `F ∧ G = cl(int(F ∩ G))`, `F* = cl(X ∖ F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcAlgebra {
    space: FinTopSpace,
    carrier: Vec<Mask>,
}

impl RcAlgebra {
    /// Builds `RC(X)` and verifies the Boolean axioms on it.
    pub fn new(space: &FinTopSpace) -> Result<Self> {
        let rc = RcAlgebra {
            space: space.clone(),
            carrier: space.regular_closed(),
        };
        rc.verify_axioms()?;
        Ok(rc)
    }

    pub fn carrier(&self) -> &[Mask] {
        &self.carrier
    }

    pub fn space(&self) -> &FinTopSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn index_of(&self, f: Mask) -> Option<usize> {
        self.carrier.binary_search(&f).ok()
    }

    pub fn zero(&self) -> Mask {
        0
    }

    pub fn one(&self) -> Mask {
        self.space.full()
    }

    pub fn join(&self, f: Mask, g: Mask) -> Mask {
        f | g
    }

    pub fn meet(&self, f: Mask, g: Mask) -> Mask {
        self.space.closure(self.space.interior(f & g))
    }

    pub fn star(&self, f: Mask) -> Mask {
        self.space.closure(self.space.full() & !f)
    }

    pub fn big_join(&self, family: impl IntoIterator<Item = Mask>) -> Mask {
        self.space.closure(family.into_iter().fold(0, |a, f| a | f))
    }

    pub fn big_meet(&self, family: impl IntoIterator<Item = Mask>) -> Mask {
        let inter = family.into_iter().fold(self.one(), |a, f| a & f);
        self.space.closure(self.space.interior(inter))
    }

    /// Checks closure of the carrier and the Boolean-algebra axioms on all
    /// pairs and triples.
    pub fn verify_axioms(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::AxiomViolation(msg));
        let c = &self.carrier;
        let (zero, one) = (self.zero(), self.one());
        if self.index_of(zero).is_none() || self.index_of(one).is_none() {
            return fail("0 or 1 is not regular closed".into());
        }
        for &f in c {
            let s = self.star(f);
            if self.index_of(s).is_none() {
                return fail(format!("{f:#b}* is not regular closed"));
            }
            if self.join(f, s) != one || self.meet(f, s) != zero {
                return fail(format!("{f:#b} and its complement do not split 1"));
            }
            if self.join(f, zero) != f || self.meet(f, one) != f {
                return fail(format!("identity laws fail at {f:#b}"));
            }
            for &g in c {
                let (j, m) = (self.join(f, g), self.meet(f, g));
                if self.index_of(j).is_none() || self.index_of(m).is_none() {
                    return fail(format!("{f:#b}, {g:#b} not closed under ∨/∧"));
                }
                if j != self.join(g, f) || m != self.meet(g, f) {
                    return fail(format!("commutativity fails at {f:#b}, {g:#b}"));
                }
                if self.join(f, m) != f || self.meet(f, j) != f {
                    return fail(format!("absorption fails at {f:#b}, {g:#b}"));
                }
                for &h in c {
                    if self.join(f, self.join(g, h)) != self.join(j, h)
                        || self.meet(f, self.meet(g, h)) != self.meet(m, h)
                    {
                        return fail(format!("associativity fails at {f:#b}, {g:#b}, {h:#b}"));
                    }
                    if self.meet(f, self.join(g, h)) != self.join(m, self.meet(f, h))
                        || self.join(f, self.meet(g, h)) != self.meet(j, self.join(f, h))
                    {
                        return fail(format!("distributivity fails at {f:#b}, {g:#b}, {h:#b}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the infinitary join and meet formulas agree with iterated
    /// binary operations on every subfamily. `None` when the carrier is too
    /// large to enumerate subfamilies.
    pub fn completeness_agrees(&self) -> Option<bool> {
        let c = &self.carrier;
        if c.len() > 16 {
            return None;
        }
        Some((0..1u64 << c.len()).all(|sel| {
            let fam: Vec<Mask> = bits(sel).map(|i| c[i]).collect();
            let j = fam.iter().fold(self.zero(), |a, &f| self.join(a, f));
            let m = fam.iter().fold(self.one(), |a, &f| self.meet(a, f));
            self.big_join(fam.iter().copied()) == j && self.big_meet(fam.iter().copied()) == m
        }))
    }

    /// Atoms: minimal nonzero regular closed sets.
    pub fn atoms(&self) -> Vec<Mask> {
        self.carrier
            .iter()
            .copied()
            .filter(|&f| f != 0 && self.carrier.iter().all(|&g| g == 0 || g == f || g & !f != 0))
            .collect()
    }

    /// An atom-indexed copy of `RC(X)` and the code of each carrier member.
    pub fn to_bool_alg(&self) -> Result<(BoolAlg, Vec<Elem>)> {
        let atoms = self.atoms();
        let alg = BoolAlg::power(atoms.len())?;
        let codes = self
            .carrier
            .iter()
            .map(|&f| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a & !f == 0)
                    .fold(0, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok((alg, codes))
    }
}

/// The mutually inverse maps `r(F) = F ∩ X` and `e(G) = cl_Y(G)` between
/// `RC(Y)` and `RC(X)` for a dense subspace `X ⊆ Y`.
#[derive(Clone, Debug)]
pub struct DenseTransfer {
    pub subspace: FinTopSpace,
    pub points: Vec<usize>,
    pub rc_y: RcAlgebra,
    pub rc_x: RcAlgebra,
    /// `r[i]` is the index in `rc_x` of the restriction of `rc_y[i]`.
    pub r: Vec<usize>,
    /// `e[j]` is the index in `rc_y` of the closure of `rc_x[j]`.
    pub e: Vec<usize>,
}

pub fn dense_transfer(subset: Mask, y: &FinTopSpace) -> Result<DenseTransfer> {
    if !y.is_dense(subset) {
        return Err(Error::NotDense(subset));
    }
    let (subspace, points) = y.subspace(subset);
    let rc_y = RcAlgebra::new(y)?;
    let rc_x = RcAlgebra::new(&subspace)?;
    let r = rc_y
        .carrier()
        .iter()
        .map(|&f| {
            rc_x.index_of(compress(f & subset, &points))
                .ok_or_else(|| Error::AxiomViolation(format!("{f:#b} ∩ X is not regular closed in X")))
        })
        .collect::<Result<Vec<_>>>()?;
    let e = rc_x
        .carrier()
        .iter()
        .map(|&g| {
            rc_y.index_of(y.closure(expand(g, &points)))
                .ok_or_else(|| Error::AxiomViolation(format!("closure of {g:#b} is not regular closed in Y")))
        })
        .collect::<Result<Vec<_>>>()?;
    let t = DenseTransfer {
        subspace,
        points,
        rc_y,
        rc_x,
        r,
        e,
    };
    t.verify()?;
    Ok(t)
}

impl DenseTransfer {
    /// Checks `e ∘ r = id`, `r ∘ e = id`, and that `r` preserves `∨`, `∧`, `*`.
    pub fn verify(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::AxiomViolation(m.to_string()));
        if (0..self.r.len()).any(|i| self.e[self.r[i]] != i) {
            return bad("e ∘ r is not the identity");
        }
        if (0..self.e.len()).any(|j| self.r[self.e[j]] != j) {
            return bad("r ∘ e is not the identity");
        }
        let (ry, rx) = (&self.rc_y, &self.rc_x);
        let at = |alg: &RcAlgebra, f: Mask| alg.index_of(f).expect("closed operation");
        for i in 0..ry.len() {
            let f = ry.carrier()[i];
            if self.r[at(ry, ry.star(f))] != at(rx, rx.star(rx.carrier()[self.r[i]])) {
                return bad("r does not preserve complements");
            }
            for j in 0..ry.len() {
                let g = ry.carrier()[j];
                let (fx, gx) = (rx.carrier()[self.r[i]], rx.carrier()[self.r[j]]);
                if self.r[at(ry, ry.join(f, g))] != at(rx, rx.join(fx, gx))
                    || self.r[at(ry, ry.meet(f, g))] != at(rx, rx.meet(fx, gx))
                {
                    return bad("r does not preserve joins or meets");
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Topologies on `n` points by brute force over open families.
    fn topology_oracle(n: usize) -> BTreeSet<Vec<Mask>> {
        let full = full_mask(n);
        let inner: Vec<Mask> = (1..full).collect();
        let mut out = BTreeSet::new();
        for sel in 0..1u64 << inner.len() {
            let mut fam: Vec<Mask> = bits(sel).map(|i| inner[i]).collect();
            fam.push(0);
            fam.push(full);
            let set: BTreeSet<Mask> = fam.iter().copied().collect();
            let closed = fam
                .iter()
                .all(|&a| fam.iter().all(|&b| set.contains(&(a | b)) && set.contains(&(a & b))));
            if closed {
                out.insert(set.into_iter().collect());
            }
        }
        out
    }

    #[test]
    fn topology_counts_match_brute_force() {
        for (n, expected) in [(0, 1), (1, 1), (2, 4), (3, 29), (4, 355)] {
            let tops = enumerate_topologies(n).unwrap();
            assert_eq!(tops.len(), expected, "n = {n}");
            let got: BTreeSet<Vec<Mask>> = tops.iter().map(|t| t.opens().to_vec()).collect();
            assert_eq!(got.len(), expected);
            assert_eq!(got, topology_oracle(n));
        }
    }

    #[test]
    fn generate_examples() {
        let d = FinTopSpace::generate(3, &[1, 2, 4]).unwrap();
        assert_eq!(d.opens().len(), 8);
        let s = FinTopSpace::generate(2, &[0b10]).unwrap();
        assert_eq!(s.opens(), &[0, 0b10, 0b11]);
        assert_eq!(
            FinTopSpace::generate(2, &[1, 2]).unwrap(),
            FinTopSpace::discrete(2).unwrap()
        );
        assert!(FinTopSpace::from_opens(3, &[0b001, 0b010]).is_err());
        assert!(FinTopSpace::from_opens(3, &[0b001, 0b010, 0b011]).is_ok());
    }

    #[test]
    fn clopen_examples() {
        assert_eq!(FinTopSpace::sierpinski().clopens(), vec![0, 0b11]);
        assert_eq!(FinTopSpace::discrete(3).unwrap().clopens().len(), 8);
        assert_eq!(FinTopSpace::indiscrete(2).unwrap().clopens(), vec![0, 0b11]);
        for t in enumerate_topologies(4).unwrap() {
            let co = t.clopen_algebra();
            let members: BTreeSet<Mask> = co.members().into_iter().collect();
            let direct: BTreeSet<Mask> = t.clopens().into_iter().collect();
            assert_eq!(members, direct);
        }
    }

    #[test]
    fn regular_closed_examples() {
        let s = RcAlgebra::new(&FinTopSpace::sierpinski()).unwrap();
        assert_eq!(s.carrier(), &[0, 0b11]);
        assert_eq!(RcAlgebra::new(&FinTopSpace::discrete(2).unwrap()).unwrap().len(), 4);
        assert_eq!(
            RcAlgebra::new(&FinTopSpace::discrete(1).unwrap()).unwrap().carrier(),
            &[0, 1]
        );
    }

    #[test]
    fn rc_is_boolean_and_complete_on_all_four_point_spaces() {
        for t in enumerate_topologies(4).unwrap() {
            let rc = RcAlgebra::new(&t).unwrap();
            assert_eq!(rc.completeness_agrees(), Some(true));
            let (alg, codes) = rc.to_bool_alg().unwrap();
            assert_eq!(alg.size(), rc.len());
            let distinct: BTreeSet<Elem> = codes.iter().copied().collect();
            assert_eq!(distinct.len(), rc.len());
        }
    }

    #[test]
    fn dense_transfer_examples() {
        let s = FinTopSpace::sierpinski();
        let t = dense_transfer(0b10, &s).unwrap();
        assert_eq!(t.rc_y.carrier(), &[0, 0b11]);
        assert_eq!(t.rc_x.carrier(), &[0, 0b1]);
        assert_eq!(t.r, vec![0, 1]);
        assert!(matches!(dense_transfer(0b01, &s), Err(Error::NotDense(_))));

        let d = FinTopSpace::discrete(3).unwrap();
        let id = dense_transfer(0b111, &d).unwrap();
        assert_eq!(id.r, (0..8).collect::<Vec<_>>());
        assert_eq!(id.e, id.r);

        let y = FinTopSpace::generate(3, &[0b011, 0b110]).unwrap();
        assert!(y.is_dense(0b010));
        let t = dense_transfer(0b010, &y).unwrap();
        assert_eq!(t.rc_x.len(), 2);
        assert_eq!(t.rc_y.len(), 2);
    }

    #[test]
    fn lemma_holds_for_every_dense_subspace_on_four_points() {
        for n in 1..=4 {
            for t in enumerate_topologies(n).unwrap() {
                for s in 1..=t.full() {
                    if t.is_dense(s) {
                        dense_transfer(s, &t).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn predicate_examples() {
        let d = FinTopSpace::discrete(3).unwrap().predicates();
        assert!(d.t2 && d.zero_dimensional && d.discrete && d.extremally_disconnected);
        let s = FinTopSpace::sierpinski().predicates();
        assert!(!s.t2 && !s.zero_dimensional && s.extremally_disconnected);
        let i = FinTopSpace::indiscrete(2).unwrap().predicates();
        assert!(!i.t2 && i.zero_dimensional && !i.discrete);
    }

    #[test]
    fn finite_t2_is_discrete_and_ed_zero_dim_gives_co_eq_rc() {
        for n in 0..=4 {
            for t in enumerate_topologies(n).unwrap() {
                let p = t.predicates();
                assert_eq!(p.t2, p.discrete);
                if p.extremally_disconnected && p.zero_dimensional {
                    assert!(p.co_equals_rc);
                }
            }
        }
    }

    #[test]
    fn co_examples() {
        let two = FinTopSpace::discrete(2).unwrap();
        let one = FinTopSpace::discrete(1).unwrap();
        let f = FinMap::new(vec![0, 0], 1).unwrap();
        let h = co_on_map(&f, &two, &one).unwrap();
        assert_eq!(h.codomain().set_of(h.apply(0)), 0);
        assert_eq!(h.codomain().set_of(h.apply(1)), 0b11);

        let id = co_on_map(&FinMap::identity(2), &two, &two).unwrap();
        assert_eq!(id, BoolHom::identity(id.domain()));

        let d3 = FinTopSpace::discrete(3).unwrap();
        let g = FinMap::new(vec![1, 1, 0], 2).unwrap();
        let h = co_on_map(&g, &d3, &FinTopSpace::sierpinski()).unwrap();
        assert_eq!(h.domain().size(), 2);
        assert_eq!(h.codomain().set_of(h.apply(1)), 0b111);

        let not_cont = FinMap::new(vec![0, 1], 2).unwrap();
        assert!(matches!(
            co_on_map(&not_cont, &FinTopSpace::sierpinski(), &two),
            Err(Error::NotContinuous(_))
        ));
    }

    #[test]
    fn co_is_functorial_on_three_points() {
        let spaces: Vec<FinTopSpace> = (1..=3).flat_map(|n| enumerate_topologies(n).unwrap()).collect();
        for x in &spaces {
            let id = co_on_map(&FinMap::identity(x.point_count()), x, x).unwrap();
            assert_eq!(id, BoolHom::identity(id.domain()));
        }
        // composition over a sample of triples of small spaces
        for x in spaces.iter().filter(|s| s.point_count() <= 2) {
            for y in spaces.iter().filter(|s| s.point_count() <= 2) {
                for z in spaces.iter().filter(|s| s.point_count() <= 2) {
                    for f in enumerate_maps(x.point_count(), y.point_count()) {
                        if !f.is_continuous(x, y) {
                            continue;
                        }
                        for g in enumerate_maps(y.point_count(), z.point_count()) {
                            if !g.is_continuous(y, z) {
                                continue;
                            }
                            let gf = f.then(&g).unwrap();
                            let lhs = co_on_map(&gf, x, z).unwrap();
                            let rhs = co_on_map(&g, y, z)
                                .unwrap()
                                .then(&co_on_map(&f, x, y).unwrap())
                                .unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn embeddings_and_maps() {
        let d2 = FinTopSpace::discrete(2).unwrap();
        let s = FinTopSpace::sierpinski();
        let id = FinMap::identity(2);
        assert!(id.is_continuous(&d2, &s));
        assert!(!id.is_embedding(&d2, &s));
        assert!(id.is_embedding(&s, &s));
        assert_eq!(enumerate_maps(2, 3).len(), 9);
        assert_eq!(enumerate_permutations(3).len(), 6);
        assert_eq!(enumerate_maps(0, 0).len(), 1);
        assert_eq!(enumerate_maps(1, 0).len(), 0);
    }
}
