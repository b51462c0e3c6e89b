//! Boolean z-algebras `(A, X)` with `X ⊆ Bool(A, 2)`, the dz condition, the
//! t-coarser relation, and the functors `F`, `G` between finite Hausdorff
//! zero-dimensional spaces and dz-algebras.

use std::sync::Arc;

use crate::boolean::{enumerate_homs, enumerate_subalgebras, homs_into_two, BoolAlg, BoolHom, Elem, Mask};
use crate::dualities::{hats, StoneSpace};
use crate::error::{Error, Result};
use crate::finspace::{co_on_map, FinMap, FinTopSpace};

/// A pair `(A, X)` with `X` a set of homomorphisms `A → 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZAlgebra {
    algebra: Arc<BoolAlg>,
    points: Vec<BoolHom>,
}

impl ZAlgebra {
    /// Checks that every point is a homomorphism `A → 2` and that points are
    /// distinct; density is not required.
    pub fn new(algebra: Arc<BoolAlg>, points: Vec<BoolHom>) -> Result<Self> {
        let two = BoolAlg::two();
        for (i, p) in points.iter().enumerate() {
            if **p.domain() != *algebra || **p.codomain() != two {
                return Err(Error::InvalidHom(format!("point {i} is not a map A → 2")));
            }
            if let Some(v) = p.validity_violation() {
                return Err(Error::InvalidHom(format!("point {i}: {v}")));
            }
            if points[..i].contains(p) {
                return Err(Error::InvalidHom(format!("point {i} is repeated")));
            }
        }
        Ok(ZAlgebra { algebra, points })
    }

    /// `(A, Bool(A, 2))`.
    pub fn full(algebra: &Arc<BoolAlg>) -> Result<Self> {
        let points = homs_into_two(algebra)?;
        Ok(ZAlgebra {
            algebra: algebra.clone(),
            points,
        })
    }

    /// Selects points of `Bool(A, 2)` by their enumeration index.
    pub fn from_indices(algebra: &Arc<BoolAlg>, indices: &[usize]) -> Result<Self> {
        let all = homs_into_two(algebra)?;
        let points = indices
            .iter()
            .map(|&i| {
                all.get(i)
                    .cloned()
                    .ok_or_else(|| Error::Parse(format!("hom index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra.clone(), points)
    }

    pub fn algebra(&self) -> &Arc<BoolAlg> {
        &self.algebra
    }

    pub fn points(&self) -> &[BoolHom] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The first `a ∈ A⁺` with `x(a) = 0` for every `x ∈ X`.
    pub fn z_witness(&self) -> Option<Elem> {
        self.algebra
            .nonzero()
            .find(|&a| self.points.iter().all(|x| !x.holds(a)))
    }

    pub fn is_z_algebra(&self) -> bool {
        self.z_witness().is_none()
    }

    fn require_z(&self) -> Result<()> {
        match self.z_witness() {
            Some(a) => Err(Error::NotZAlgebra(a)),
            None => Ok(()),
        }
    }

    /// `s_A^X(a) = X ∩ s_A(a)`, as a set of point indices.
    pub fn trace_set(&self, a: Elem) -> Mask {
        self.points
            .iter()
            .enumerate()
            .filter(|(_, x)| x.holds(a))
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    /// `s_A^X: A → P(X)`.
    pub fn trace_map(&self) -> Result<BoolHom> {
        let px = Arc::new(BoolAlg::power(self.points.len())?);
        let table = self.algebra.elements().map(|a| self.trace_set(a) as Elem).collect();
        BoolHom::new(self.algebra.clone(), px, table)
    }

    /// `s_A^X(A)` as a subalgebra of `P(X)`.
    pub fn trace_algebra(&self) -> Result<BoolAlg> {
        let gens: Vec<Mask> = self.algebra.elements().map(|a| self.trace_set(a)).collect();
        BoolAlg::boolean_closure(self.points.len(), &gens)
    }

    pub fn stone(&self) -> Result<StoneSpace> {
        StoneSpace::new(&self.algebra)
    }

    /// Position of each point of `X` in `S(A)`.
    pub fn indices_in(&self, st: &StoneSpace) -> Vec<usize> {
        self.points
            .iter()
            .map(|x| st.point_index(x).expect("points are homomorphisms into 2"))
            .collect()
    }

    fn mask_in(&self, st: &StoneSpace) -> Mask {
        self.indices_in(st).into_iter().fold(0, |acc, i| acc | 1 << i)
    }

    pub fn is_dense_in_stone(&self) -> Result<bool> {
        let st = self.stone()?;
        Ok(st.space.is_dense(self.mask_in(&st)))
    }

    /// `X` with the subspace topology from `S(A)`, points in the order of `X`.
    pub fn subspace(&self) -> Result<FinTopSpace> {
        let st = self.stone()?;
        let idx = self.indices_in(&st);
        let n = idx.len();
        let nbhd_basis: Vec<Mask> = st
            .space
            .opens()
            .iter()
            .map(|&u| (0..n).filter(|&i| u >> idx[i] & 1 == 1).fold(0, |acc, i| acc | 1 << i))
            .collect();
        FinTopSpace::generate(n, &nbhd_basis)
    }

    /// The topology on `X` generated by the base `s_A^X(A)`.
    pub fn generated_topology(&self) -> Result<FinTopSpace> {
        let gens: Vec<Mask> = self.algebra.elements().map(|a| self.trace_set(a)).collect();
        FinTopSpace::generate(self.points.len(), &gens)
    }

    /// `s̄_A^X: A → CO(X)` for the subspace topology.
    pub fn trace_corestriction(&self) -> Result<BoolHom> {
        let co = Arc::new(self.subspace()?.clopen_algebra());
        let table = self
            .algebra
            .elements()
            .map(|a| {
                let s = self.trace_set(a);
                co.code_of(s)
                    .ok_or_else(|| Error::AxiomViolation(format!("trace {s:#b} is not clopen in X")))
            })
            .collect::<Result<Vec<_>>>()?;
        BoolHom::new(self.algebra.clone(), co, table)
    }

    /// A clopen subset of `X` outside `s_A^X(A)`, if any.
    pub fn dz_witness(&self) -> Result<Option<Mask>> {
        self.require_z()?;
        let trace = self.trace_algebra()?;
        Ok(self.subspace()?.clopens().into_iter().find(|&u| !trace.contains_set(u)))
    }

    pub fn is_dz(&self) -> Result<bool> {
        Ok(self.dz_witness()?.is_none())
    }

    /// A subalgebra of `P(X)` t-equal to `s_A^X(A)` but not contained in it.
    pub fn dw_witness(&self) -> Result<Option<BoolAlg>> {
        self.require_z()?;
        let trace = self.trace_algebra()?;
        let px = BoolAlg::power(self.points.len())?;
        for b in enumerate_subalgebras(self.points.len())? {
            if t_compare(&b, &trace, &px)?.t_equal() && !b.is_subalgebra_of(&trace) {
                return Ok(Some(b));
            }
        }
        Ok(None)
    }

    pub fn satisfies_dw(&self) -> Result<bool> {
        Ok(self.dw_witness()?.is_none())
    }
}

/// The two directions of the t-coarser relation between `A` and `B` in `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct TCompare {
    pub a_coarser: bool,
    pub b_coarser: bool,
}

impl TCompare {
    pub fn t_equal(&self) -> bool {
        self.a_coarser && self.b_coarser
    }
}

/// `A ⪯_C B`: every atom of `C` below some `a ∈ A` has some `b ∈ B` between.
pub fn t_coarser(a: &BoolAlg, b: &BoolAlg, c: &BoolAlg) -> Result<bool> {
    for (name, s) in [("A", a), ("B", b)] {
        if !s.is_subalgebra_of(c) {
            return Err(Error::NotSubalgebra(format!("{name} is not a subalgebra of C")));
        }
    }
    let b_members = b.members();
    Ok(a.members().into_iter().all(|am| {
        c.blocks()
            .iter()
            .filter(|&&x| x & !am == 0)
            .all(|&x| b_members.iter().any(|&bm| x & !bm == 0 && bm & !am == 0))
    }))
}

pub fn t_compare(a: &BoolAlg, b: &BoolAlg, c: &BoolAlg) -> Result<TCompare> {
    Ok(TCompare {
        a_coarser: t_coarser(a, b, c)?,
        b_coarser: t_coarser(b, a, c)?,
    })
}

/// A morphism `(φ, f): (A, X) → (A′, X′)` with `φ: A → A′`, `f: X′ → X` and
/// `x′ ∘ φ = f(x′)`. Serves both z-algebras and dz-algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DzaMorphism {
    source: ZAlgebra,
    target: ZAlgebra,
    phi: BoolHom,
    map: FinMap,
}

impl DzaMorphism {
    pub fn new(source: ZAlgebra, target: ZAlgebra, phi: BoolHom, map: FinMap) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidMorphism(m.to_string()));
        if **phi.domain() != *source.algebra || **phi.codomain() != *target.algebra {
            return bad("φ does not run between the two algebras");
        }
        if let Some(v) = phi.validity_violation() {
            return bad(&v);
        }
        if map.domain_size() != target.len() || map.codomain_size() != source.len() {
            return bad("f does not run from X′ to X");
        }
        for (j, x2) in target.points.iter().enumerate() {
            if phi.then(x2)? != source.points[map.apply(j)] {
                return Err(Error::InvalidMorphism(format!("x′ ∘ φ ≠ f(x′) at point {j}")));
            }
        }
        Ok(DzaMorphism {
            source,
            target,
            phi,
            map,
        })
    }

    pub fn identity(z: &ZAlgebra) -> Self {
        DzaMorphism {
            source: z.clone(),
            target: z.clone(),
            phi: BoolHom::identity(&z.algebra),
            map: FinMap::identity(z.len()),
        }
    }

    pub fn source(&self) -> &ZAlgebra {
        &self.source
    }

    pub fn target(&self) -> &ZAlgebra {
        &self.target
    }

    pub fn phi(&self) -> &BoolHom {
        &self.phi
    }

    pub fn map(&self) -> &FinMap {
        &self.map
    }

    /// `next ∘ self = (φ′ ∘ φ, f ∘ f′)`.
    pub fn then(&self, next: &DzaMorphism) -> Result<DzaMorphism> {
        if self.target != next.source {
            return Err(Error::InvalidMorphism("composition of mismatched morphisms".into()));
        }
        Ok(DzaMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            phi: self.phi.then(&next.phi)?,
            map: next.map.then(&self.map)?,
        })
    }

    pub fn is_iso(&self) -> bool {
        self.phi.is_iso() && self.map.is_bijective()
    }
}

/// Every morphism between two z-algebras: `φ` ranges over `Bool(A, A′)` and
/// `f` is forced by `f(x′) = x′ ∘ φ`.
pub fn dza_morphisms(source: &ZAlgebra, target: &ZAlgebra) -> Result<Vec<DzaMorphism>> {
    let mut out = Vec::new();
    for phi in enumerate_homs(&source.algebra, &target.algebra)? {
        let images: Option<Vec<usize>> = target
            .points
            .iter()
            .map(|x2| {
                let c = phi.then(x2).ok()?;
                source.points.iter().position(|x| *x == c)
            })
            .collect();
        if let Some(images) = images {
            let map = FinMap::new(images, source.len())?;
            out.push(DzaMorphism::new(source.clone(), target.clone(), phi, map)?);
        }
    }
    Ok(out)
}

pub(crate) fn require_zh(x: &FinTopSpace) -> Result<()> {
    let p = x.predicates();
    if !p.t2 || !p.zero_dimensional {
        return Err(Error::Precondition(
            "space must be zero-dimensional and Hausdorff".into(),
        ));
    }
    Ok(())
}

/// `F(X) = (CO(X), X̂)`, with `X̂` in the order of the points of `X`.
pub fn functor_f_obj(x: &FinTopSpace) -> Result<ZAlgebra> {
    require_zh(x)?;
    let (co, points) = hats(x);
    ZAlgebra::new(co, points)
}

/// `F(f) = (co(f), f̂): F(Y) → F(X)` for continuous `f: X → Y`.
pub fn functor_f_mor(f: &FinMap, x: &FinTopSpace, y: &FinTopSpace) -> Result<DzaMorphism> {
    let (fx, fy) = (functor_f_obj(x)?, functor_f_obj(y)?);
    let co = co_on_map(f, x, y)?;
    DzaMorphism::new(fy, fx, co, f.clone())
}

/// `G(A, X) = X` as a subspace of `S(A)`.
pub fn functor_g_obj(z: &ZAlgebra) -> Result<FinTopSpace> {
    if !z.is_dz()? {
        return Err(Error::WrongSubcategory("not a dz-algebra".into()));
    }
    z.subspace()
}

/// `G(φ, f) = f`, checked continuous as a map `X′ → X` of subspaces.
pub fn functor_g_mor(m: &DzaMorphism) -> Result<FinMap> {
    let (x, x2) = (functor_g_obj(&m.source)?, functor_g_obj(&m.target)?);
    if let Some(u) = m.map.continuity_violation(&x2, &x) {
        return Err(Error::NotContinuous(u));
    }
    Ok(m.map.clone())
}

/// `s′_(A,X) = (s̄_A^X, ĭ_X): (A, X) → F(G(A, X))`.
pub fn s_prime(z: &ZAlgebra) -> Result<DzaMorphism> {
    let fg = functor_f_obj(&functor_g_obj(z)?)?;
    let m = DzaMorphism::new(z.clone(), fg, z.trace_corestriction()?, FinMap::identity(z.len()))?;
    if !m.is_iso() {
        return Err(Error::AxiomViolation("s′ is not an isomorphism".into()));
    }
    Ok(m)
}

/// `ĥ_X: X → G(F(X))`, `x ↦ x̂`, checked to be a homeomorphism.
pub fn h_hat(x: &FinTopSpace) -> Result<FinMap> {
    let fx = functor_f_obj(x)?;
    let gfx = functor_g_obj(&fx)?;
    let h = FinMap::identity(x.point_count());
    if !h.is_homeomorphism(x, &gfx) {
        return Err(Error::AxiomViolation("ĥ_X is not a homeomorphism".into()));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn power(n: usize) -> Arc<BoolAlg> {
        Arc::new(BoolAlg::power(n).unwrap())
    }

    #[test]
    fn z_algebra_examples() {
        let p2 = power(2);
        let full = ZAlgebra::full(&p2).unwrap();
        assert!(full.is_z_algebra());
        let half = ZAlgebra::from_indices(&p2, &[0]).unwrap();
        let w = half.z_witness().unwrap();
        assert!(p2.is_atom(w) && !half.points()[0].holds(w));
        let two = Arc::new(BoolAlg::two());
        assert!(ZAlgebra::full(&two).unwrap().is_z_algebra());
        let empty = ZAlgebra::new(Arc::new(BoolAlg::trivial()), vec![]).unwrap();
        assert!(empty.is_z_algebra());
        assert!(ZAlgebra::from_indices(&p2, &[0, 0]).is_err());
    }

    #[test]
    fn trace_examples() {
        let full = ZAlgebra::full(&power(2)).unwrap();
        let s = full.trace_map().unwrap();
        assert_eq!(s.apply(0b11), 0b11);
        assert_eq!(s.apply(0b01).count_ones(), 1);
        assert!(s.is_mono());
        let none = ZAlgebra::new(power(2), vec![]).unwrap();
        assert!(!none.trace_map().unwrap().is_mono());
        let triv = ZAlgebra::new(Arc::new(BoolAlg::trivial()), vec![]).unwrap();
        assert!(triv.trace_map().unwrap().is_mono());
    }

    #[test]
    fn dz_examples() {
        for n in 0..=3 {
            assert!(ZAlgebra::full(&power(n)).unwrap().is_dz().unwrap());
        }
        let half = ZAlgebra::from_indices(&power(2), &[1]).unwrap();
        assert!(matches!(half.is_dz(), Err(Error::NotZAlgebra(_))));
    }

    #[test]
    fn t_compare_examples() {
        let p2 = BoolAlg::power(2).unwrap();
        let coarse = BoolAlg::boolean_closure(2, &[]).unwrap();
        let r = t_compare(&coarse, &p2, &p2).unwrap();
        assert!(r.a_coarser && !r.b_coarser);
        assert!(t_compare(&p2, &p2, &p2).unwrap().t_equal());
        let other = BoolAlg::power(3).unwrap();
        assert!(matches!(t_compare(&coarse, &other, &p2), Err(Error::NotSubalgebra(_))));
    }

    /// Subalgebras of `P(X)` are t-equal iff they generate the same topology.
    #[test]
    fn t_equal_matches_generated_topology() {
        for n in 0..=4 {
            let subs = enumerate_subalgebras(n).unwrap();
            let pn = BoolAlg::power(n).unwrap();
            for a in &subs {
                for b in &subs {
                    let same = FinTopSpace::generate(n, &a.members()).unwrap()
                        == FinTopSpace::generate(n, &b.members()).unwrap();
                    assert_eq!(t_compare(a, b, &pn).unwrap().t_equal(), same);
                }
            }
        }
    }

    #[test]
    fn functor_examples() {
        let d2 = FinTopSpace::discrete(2).unwrap();
        let f2 = functor_f_obj(&d2).unwrap();
        assert_eq!(**f2.algebra(), BoolAlg::power(2).unwrap());
        assert_eq!(f2.len(), 2);
        let id = functor_f_mor(&FinMap::identity(2), &d2, &d2).unwrap();
        assert_eq!(id, DzaMorphism::identity(&f2));
        let d1 = FinTopSpace::discrete(1).unwrap();
        let c = FinMap::new(vec![0, 0], 1).unwrap();
        let fc = functor_f_mor(&c, &d2, &d1).unwrap();
        assert_eq!(fc.map().images(), &[0, 0]);
        assert_eq!(functor_g_obj(&ZAlgebra::full(&power(2)).unwrap()).unwrap(), d2);
        assert!(matches!(
            functor_f_obj(&FinTopSpace::sierpinski()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn components_examples() {
        let z = ZAlgebra::full(&power(2)).unwrap();
        assert!(s_prime(&z).unwrap().is_iso());
        assert_eq!(h_hat(&FinTopSpace::discrete(1).unwrap()).unwrap(), FinMap::identity(1));
        let d3 = FinTopSpace::discrete(3).unwrap();
        assert!(h_hat(&d3).unwrap().is_bijective());
        // naturality squares for the collapse {0,1} → {0}
        let (d2, d1) = (FinTopSpace::discrete(2).unwrap(), FinTopSpace::discrete(1).unwrap());
        let c = FinMap::new(vec![0, 0], 1).unwrap();
        let m = functor_f_mor(&c, &d2, &d1).unwrap();
        let (src, tgt) = (m.source().clone(), m.target().clone());
        let lhs = m.then(&s_prime(&tgt).unwrap()).unwrap();
        let fg = functor_f_mor(
            &functor_g_mor(&m).unwrap(),
            &functor_g_obj(&tgt).unwrap(),
            &functor_g_obj(&src).unwrap(),
        )
        .unwrap();
        let rhs = s_prime(&src).unwrap().then(&fg).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn morphism_enumeration_respects_condition() {
        let a = ZAlgebra::full(&power(2)).unwrap();
        let b = ZAlgebra::full(&power(3)).unwrap();
        let ms = dza_morphisms(&a, &b).unwrap();
        assert_eq!(ms.len(), 8);
        let half = ZAlgebra::from_indices(&power(2), &[0]).unwrap();
        assert_eq!(dza_morphisms(&half, &b).unwrap().len(), 1);
    }
}
