//! Stone duality between finite Boolean algebras and finite Stone spaces,
//! and Tarski duality between sets and complete atomic Boolean algebras.

use std::sync::Arc;

use crate::boolean::{atom_hom, homs_into_two, AtomHomContext, BoolAlg, BoolHom, Elem, Mask};
use crate::error::{Error, Result};
use crate::finspace::{FinMap, FinTopSpace};

/// `S(A)`: the space `Bool(A, 2)` with base `{s_A(a)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoneSpace {
    pub algebra: Arc<BoolAlg>,
    /// `Bool(A, 2)` in enumeration order; point `i` of `space` is `points[i]`.
    pub points: Vec<BoolHom>,
    pub space: FinTopSpace,
    /// `base[a] = s_A(a)` as a set of point indices.
    pub base: Vec<Mask>,
}

impl StoneSpace {
    pub fn new(a: &Arc<BoolAlg>) -> Result<Self> {
        let points = homs_into_two(a)?;
        let base: Vec<Mask> = a
            .elements()
            .map(|e| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| x.holds(e))
                    .fold(0, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        let space = FinTopSpace::generate(points.len(), &base)?;
        Ok(StoneSpace {
            algebra: a.clone(),
            points,
            space,
            base,
        })
    }

    pub fn point_index(&self, x: &BoolHom) -> Option<usize> {
        self.points.iter().position(|p| p == x)
    }

    /// `s_A(a)`.
    pub fn s(&self, a: Elem) -> Mask {
        self.base[a as usize]
    }
}

pub fn stone_space(a: &Arc<BoolAlg>) -> Result<StoneSpace> {
    StoneSpace::new(a)
}

/// The Stone map `s_A: A → T(S(A)) = CO(S(A))`.
pub fn stone_map(st: &StoneSpace) -> Result<BoolHom> {
    let co = Arc::new(st.space.clopen_algebra());
    let table = st
        .base
        .iter()
        .map(|&s| {
            co.code_of(s)
                .ok_or_else(|| Error::AxiomViolation(format!("s_A-set {s:#b} is not clopen")))
        })
        .collect::<Result<Vec<_>>>()?;
    BoolHom::new(st.algebra.clone(), co, table)
}

/// `S(φ): S(B) → S(A)`, `y ↦ y ∘ φ`, for `φ: A → B`.
pub fn stone_on_hom(phi: &BoolHom, sa: &StoneSpace, sb: &StoneSpace) -> Result<FinMap> {
    if let Some(v) = phi.validity_violation() {
        return Err(Error::InvalidHom(v));
    }
    if **phi.domain() != *sa.algebra || **phi.codomain() != *sb.algebra {
        return Err(Error::InvalidHom("Stone spaces do not match φ".into()));
    }
    let images = sb
        .points
        .iter()
        .map(|y| {
            let composed = phi.then(y)?;
            sa.point_index(&composed)
                .ok_or_else(|| Error::InvalidHom("y ∘ φ is not a point of S(A)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = FinMap::new(images, sa.points.len())?;
    if let Some(u) = f.continuity_violation(&sb.space, &sa.space) {
        return Err(Error::NotContinuous(u));
    }
    Ok(f)
}

fn require_zero_dim_t2(x: &FinTopSpace) -> Result<()> {
    let p = x.predicates();
    if !p.t2 || !p.zero_dimensional {
        return Err(Error::Precondition(
            "space must be zero-dimensional and Hausdorff".into(),
        ));
    }
    Ok(())
}

/// `x̂` for every point of `x`, as homomorphisms `CO(X) → 2`.
pub fn hats(x: &FinTopSpace) -> (Arc<BoolAlg>, Vec<BoolHom>) {
    let co = Arc::new(x.clopen_algebra());
    let hats = (0..x.point_count())
        .map(|point| atom_hom(AtomHomContext::Hat { algebra: &co, point }).expect("point in ground"))
        .collect();
    (co, hats)
}

/// `t_X: X → S(T(X))`, `x ↦ x̂`, checked to be a homeomorphism.
pub fn t_component(x: &FinTopSpace) -> Result<(StoneSpace, FinMap)> {
    require_zero_dim_t2(x)?;
    let (co, hats) = hats(x);
    let st = StoneSpace::new(&co)?;
    let images = hats
        .iter()
        .map(|h| {
            st.point_index(h)
                .ok_or_else(|| Error::AxiomViolation("x̂ is not a point of S(CO(X))".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let t = FinMap::new(images, st.points.len())?;
    if !t.is_homeomorphism(x, &st.space) {
        return Err(Error::AxiomViolation("t_X is not a homeomorphism".into()));
    }
    Ok((st, t))
}

/// `P(f): P(Y) → P(X)`, `M ↦ f⁻¹(M)`, for `f: X → Y`.
pub fn tarski_p(f: &FinMap) -> Result<BoolHom> {
    let py = Arc::new(BoolAlg::power(f.codomain_size())?);
    let px = Arc::new(BoolAlg::power(f.domain_size())?);
    let table = py.elements().map(|m| f.preimage(m as Mask) as Elem).collect();
    BoolHom::new(py, px, table)
}

/// `At(σ): At(B′) → At(B)`, `x′ ↦ ⋀{b | x′ ≤ σ(b)}`, as a map of atom indices.
pub fn tarski_at(sigma: &BoolHom) -> Result<FinMap> {
    if let Some(v) = sigma.validity_violation() {
        return Err(Error::InvalidHom(v));
    }
    if !sigma.is_complete() {
        return Err(Error::InvalidHom("σ is not complete".into()));
    }
    let (b, b2) = (sigma.domain(), sigma.codomain());
    let images = b2
        .atoms()
        .map(|x2| {
            let m = b.big_meet(b.elements().filter(|&e| b2.le(x2, sigma.apply(e))));
            b.atom_index(m)
        })
        .collect::<Result<Vec<_>>>()?;
    FinMap::new(images, b.atom_count())
}

/// `η_X(x) = {x}` as atoms of `P(X)`.
pub fn eta(n: usize) -> Result<Vec<Elem>> {
    let p = BoolAlg::power(n)?;
    let out: Vec<Elem> = (0..n).map(|x| 1 << x).collect();
    debug_assert!(out.iter().all(|&a| p.is_atom(a)));
    Ok(out)
}

/// `ε_B: B → P(At(B))`, `b ↦ {x ∈ At(B) | x ≤ b}`.
pub fn epsilon(b: &Arc<BoolAlg>) -> Result<BoolHom> {
    let p = Arc::new(BoolAlg::power(b.atom_count())?);
    let table = b
        .elements()
        .map(|e| b.atoms_below(e).fold(0, |acc, a| acc | a))
        .collect();
    BoolHom::new(b.clone(), p, table)
}

/// `ε_B⁻¹: P(At(B)) → B`, `M ↦ ⋁M`.
pub fn epsilon_inv(b: &Arc<BoolAlg>) -> Result<BoolHom> {
    let p = Arc::new(BoolAlg::power(b.atom_count())?);
    let atoms: Vec<Elem> = b.atoms().collect();
    let table = p
        .elements()
        .map(|m| b.big_join(crate::boolean::bits(m as Mask).map(|i| atoms[i])))
        .collect();
    BoolHom::new(p, b.clone(), table)
}

/// Outcome of checking `x′ ≤ σ(b) ⇔ At(σ)(x′) ≤ b` on every pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointAtomCheck {
    pub checked: usize,
    /// `(b, x′)` where the biconditional fails.
    pub counterexample: Option<(Elem, Elem)>,
}

impl AdjointAtomCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn check_adjoint_atom(sigma: &BoolHom) -> Result<AdjointAtomCheck> {
    let at = tarski_at(sigma)?;
    let (b, b2) = (sigma.domain(), sigma.codomain());
    let atoms: Vec<Elem> = b.atoms().collect();
    let mut checked = 0;
    for e in b.elements() {
        for (j, x2) in b2.atoms().enumerate() {
            checked += 1;
            let lhs = b2.le(x2, sigma.apply(e));
            let rhs = b.le(atoms[at.apply(j)], e);
            if lhs != rhs {
                return Ok(AdjointAtomCheck {
                    checked,
                    counterexample: Some((e, x2)),
                });
            }
        }
    }
    Ok(AdjointAtomCheck {
        checked,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::enumerate_homs;
    use crate::finspace::enumerate_maps;

    fn power(n: usize) -> Arc<BoolAlg> {
        Arc::new(BoolAlg::power(n).unwrap())
    }

    #[test]
    fn stone_space_examples() {
        let s2 = StoneSpace::new(&power(2)).unwrap();
        assert_eq!(s2.space, FinTopSpace::discrete(2).unwrap());
        let s1 = StoneSpace::new(&Arc::new(BoolAlg::two())).unwrap();
        assert_eq!(s1.space.point_count(), 1);
        let s0 = StoneSpace::new(&Arc::new(BoolAlg::trivial())).unwrap();
        assert_eq!(s0.space.point_count(), 0);
        assert_eq!(stone_map(&s0).unwrap().table(), &[0]);
    }

    #[test]
    fn stone_map_is_iso_up_to_four_atoms() {
        for n in 0..=4 {
            let st = StoneSpace::new(&power(n)).unwrap();
            let s = stone_map(&st).unwrap();
            assert!(s.is_iso(), "n = {n}");
            assert_eq!(s.codomain().size(), 1 << n);
        }
    }

    #[test]
    fn stone_on_hom_examples() {
        let (p1, p2) = (power(1), power(2));
        let (s1, s2) = (StoneSpace::new(&p1).unwrap(), StoneSpace::new(&p2).unwrap());
        let id = stone_on_hom(&BoolHom::identity(&p2), &s2, &s2).unwrap();
        assert_eq!(id, FinMap::identity(2));
        // preimage along the constant map {a, b} → {a}
        let phi = BoolHom::new(p1.clone(), p2.clone(), vec![0, 0b11]).unwrap();
        let collapse = stone_on_hom(&phi, &s1, &s2).unwrap();
        assert_eq!(collapse.images(), &[0, 0]);
        // a non-mono kills an element, so S(φ) misses its support
        let kill = BoolHom::new(p2.clone(), p1.clone(), vec![0, 1, 0, 1]).unwrap();
        let f = stone_on_hom(&kill, &s2, &s1).unwrap();
        assert_eq!(f.image(0b1) & s2.s(0b10), 0);
        assert!(!f.is_surjective());
    }

    #[test]
    fn t_component_examples() {
        let (_, t) = t_component(&FinTopSpace::discrete(3).unwrap()).unwrap();
        assert!(t.is_bijective());
        let (st, t1) = t_component(&FinTopSpace::discrete(1).unwrap()).unwrap();
        assert_eq!(st.points.len(), 1);
        assert_eq!(t1, FinMap::identity(1));
        assert!(matches!(
            t_component(&FinTopSpace::sierpinski()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn tarski_examples() {
        let f = FinMap::new(vec![0, 0], 1).unwrap();
        let pf = tarski_p(&f).unwrap();
        assert_eq!(pf.table(), &[0, 0b11]);
        // At(P(f)) reproduces f under η
        assert_eq!(tarski_at(&pf).unwrap(), f);
        let p2 = power(2);
        assert_eq!(tarski_at(&BoolHom::identity(&p2)).unwrap(), FinMap::identity(2));
        assert_eq!(eta(3).unwrap()[1], 0b010);
        let b = Arc::new(BoolAlg::from_blocks(3, vec![0b001, 0b110]).unwrap());
        assert_eq!(epsilon(&b).unwrap().apply(b.top()), 0b11);
        assert_eq!(epsilon_inv(&b).unwrap().apply(0b11), b.top());
        assert!(epsilon(&b).unwrap().is_iso());
        assert_eq!(
            epsilon(&b).unwrap().then(&epsilon_inv(&b).unwrap()).unwrap(),
            BoolHom::identity(&b)
        );
    }

    /// `At(σ)` by scanning atoms of `B` for the smallest one whose image
    /// lies above `x′`, kept independent of the meet formula.
    fn at_oracle(sigma: &BoolHom) -> Vec<usize> {
        let (b, b2) = (sigma.domain(), sigma.codomain());
        b2.atoms()
            .map(|x2| {
                b.atoms()
                    .position(|x| b2.le(x2, sigma.apply(x)))
                    .expect("images of atoms cover 1")
            })
            .collect()
    }

    #[test]
    fn adjoint_atom_lemma_exhaustive() {
        for ka in 0..=3 {
            for kb in 0..=3 {
                for sigma in enumerate_homs(&power(ka), &power(kb)).unwrap() {
                    let check = check_adjoint_atom(&sigma).unwrap();
                    assert!(check.passed());
                    assert_eq!(tarski_at(&sigma).unwrap().images(), at_oracle(&sigma));
                }
            }
        }
    }

    #[test]
    fn tarski_round_trips() {
        for n in 0..=3 {
            for m in 0..=3 {
                for f in enumerate_maps(n, m) {
                    assert_eq!(tarski_at(&tarski_p(&f).unwrap()).unwrap(), f);
                }
                for sigma in enumerate_homs(&power(m), &power(n)).unwrap() {
                    assert_eq!(tarski_p(&tarski_at(&sigma).unwrap()).unwrap(), sigma);
                }
            }
        }
    }
}
