//! Boolean z-maps and mz-maps, the categories of such maps, the functors
//! `F′`, `G′`, `𝔉`, `𝔊` with their natural isomorphisms, and the compact and
//! T-object restrictions that recover Stone and Tarski duality.
//!
//! Points of `X_α` are compared by table, so a non-z-map whose `h_α` is not
//! injective still has a well-defined `X_α`.

use std::sync::Arc;

use crate::boolean::{
    enumerate_homs, enumerate_subalgebras, homs_into_two, x_alpha, x_check, AtomHoms, BoolAlg, BoolHom, Elem,
};
use crate::dualities::{check_adjoint_atom, stone_on_hom, tarski_at, tarski_p, StoneSpace};
use crate::error::{Error, Result};
use crate::finspace::{co_on_map, FinMap, FinTopSpace};
use crate::zalgebra::{functor_f_mor, functor_f_obj, require_zh, t_compare, DzaMorphism, ZAlgebra};

/// A homomorphism `α: A → B` viewed as a candidate z-map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMap {
    alpha: BoolHom,
}

impl ZMap {
    /// Only validity of `α` is checked here; injectivity is required by
    /// [`ZMap::z_witness`].
    pub fn new(alpha: BoolHom) -> Result<Self> {
        if let Some(v) = alpha.validity_violation() {
            return Err(Error::InvalidHom(v));
        }
        Ok(ZMap { alpha })
    }

    pub fn identity(b: &Arc<BoolAlg>) -> Self {
        ZMap {
            alpha: BoolHom::identity(b),
        }
    }

    /// The inclusion `i_A: A ↪ P(X)` of a subalgebra.
    pub fn inclusion(a: &Arc<BoolAlg>) -> Result<Self> {
        let px = Arc::new(BoolAlg::power(a.ground())?);
        let table = a.elements().map(|e| a.set_of(e) as Elem).collect();
        Self::new(BoolHom::new(a.clone(), px, table)?)
    }

    pub fn alpha(&self) -> &BoolHom {
        &self.alpha
    }

    pub fn domain(&self) -> &Arc<BoolAlg> {
        self.alpha.domain()
    }

    pub fn codomain(&self) -> &Arc<BoolAlg> {
        self.alpha.codomain()
    }

    /// `X_α` and `h_α`.
    pub fn x_alpha(&self) -> AtomHoms {
        x_alpha(&self.alpha)
    }

    /// An atom of `B` that is not the meet of the images above it.
    pub fn z_witness(&self) -> Result<Option<Elem>> {
        if !self.alpha.is_mono() {
            return Err(Error::NotMono);
        }
        let (a, b) = (self.domain(), self.codomain());
        Ok(b.atoms()
            .find(|&x| b.big_meet(a.elements().map(|e| self.alpha.apply(e)).filter(|&y| b.le(x, y))) != x))
    }

    pub fn is_z_map(&self) -> Result<bool> {
        Ok(self.z_witness()?.is_none())
    }

    fn require_z(&self) -> Result<()> {
        match self.z_witness()? {
            Some(x) => Err(Error::WrongSubcategory(format!("not a z-map: atom {x:#b}"))),
            None => Ok(()),
        }
    }

    /// `(A, X_α)`.
    pub fn points_algebra(&self) -> Result<ZAlgebra> {
        ZAlgebra::new(self.domain().clone(), self.x_alpha().points)
    }

    /// A clopen subset of the subspace `X_α` outside `s_A^{X_α}(A)`.
    pub fn mz_witness(&self) -> Result<Option<crate::boolean::Mask>> {
        self.require_z()?;
        self.points_algebra()?.dz_witness()
    }

    pub fn is_mz_map(&self) -> Result<bool> {
        Ok(self.mz_witness()?.is_none())
    }

    fn require_mz(&self) -> Result<()> {
        if !self.is_mz_map()? {
            return Err(Error::WrongSubcategory("not an mz-map".into()));
        }
        Ok(())
    }

    /// A subalgebra of `B` t-equal to `α(A)` but not contained in it; `B` is
    /// identified with `P(At(B))`.
    pub fn t_equal_witness(&self) -> Result<Option<BoolAlg>> {
        self.require_z()?;
        let k = self.codomain().atom_count();
        let pb = BoolAlg::power(k)?;
        let gens: Vec<_> = self.alpha.table().iter().map(|&e| e as u64).collect();
        let image = BoolAlg::boolean_closure(k, &gens)?;
        for c in enumerate_subalgebras(k)? {
            if t_compare(&c, &image, &pb)?.t_equal() && !c.is_subalgebra_of(&image) {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    /// `ε̂_B: B → P(X̂_α)`, `b ↦ {h_α(x) | x ≤ b}`; also serves as `ε_B^α`.
    pub fn epsilon_hat(&self) -> Result<BoolHom> {
        let xa = self.x_alpha();
        let b = self.codomain();
        let p = Arc::new(BoolAlg::power(xa.points.len())?);
        let table = b
            .elements()
            .map(|e| {
                (0..b.atom_count())
                    .filter(|&i| e >> i & 1 == 1)
                    .fold(0, |acc, i| acc | 1 << xa.index[i])
            })
            .collect();
        BoolHom::new(b.clone(), p, table)
    }
}

/// A pair `(φ, σ): α → α′` with `α′ ∘ φ = σ ∘ α` and `σ` complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMapMorphism {
    source: ZMap,
    target: ZMap,
    phi: BoolHom,
    sigma: BoolHom,
}

impl ZMapMorphism {
    pub fn new(source: ZMap, target: ZMap, phi: BoolHom, sigma: BoolHom) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidMorphism(m.to_string()));
        if phi.domain() != source.domain() || phi.codomain() != target.domain() {
            return bad("φ does not run between the domains");
        }
        if sigma.domain() != source.codomain() || sigma.codomain() != target.codomain() {
            return bad("σ does not run between the codomains");
        }
        if let Some(v) = phi.validity_violation().or_else(|| sigma.validity_violation()) {
            return bad(&v);
        }
        if !sigma.is_complete() {
            return bad("σ is not complete");
        }
        if phi.then(&target.alpha)? != source.alpha.then(&sigma)? {
            return bad("α′ ∘ φ ≠ σ ∘ α");
        }
        Ok(ZMapMorphism {
            source,
            target,
            phi,
            sigma,
        })
    }

    pub fn identity(a: &ZMap) -> Self {
        ZMapMorphism {
            source: a.clone(),
            target: a.clone(),
            phi: BoolHom::identity(a.domain()),
            sigma: BoolHom::identity(a.codomain()),
        }
    }

    pub fn source(&self) -> &ZMap {
        &self.source
    }

    pub fn target(&self) -> &ZMap {
        &self.target
    }

    pub fn phi(&self) -> &BoolHom {
        &self.phi
    }

    pub fn sigma(&self) -> &BoolHom {
        &self.sigma
    }

    /// `next ∘ self = (φ′ ∘ φ, σ′ ∘ σ)`.
    pub fn then(&self, next: &ZMapMorphism) -> Result<ZMapMorphism> {
        if self.target != next.source {
            return Err(Error::InvalidMorphism("composition of mismatched morphisms".into()));
        }
        Ok(ZMapMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            phi: self.phi.then(&next.phi)?,
            sigma: self.sigma.then(&next.sigma)?,
        })
    }

    pub fn is_iso(&self) -> bool {
        self.phi.is_iso() && self.sigma.is_iso()
    }
}

/// Every morphism between two maps, by exhausting `Bool(A, A′) × Bool(B, B′)`.
pub fn zmap_morphisms(source: &ZMap, target: &ZMap) -> Result<Vec<ZMapMorphism>> {
    let phis = enumerate_homs(source.domain(), target.domain())?;
    let sigmas = enumerate_homs(source.codomain(), target.codomain())?;
    let mut out = Vec::new();
    for phi in &phis {
        let lhs = phi.then(&target.alpha)?;
        for sigma in &sigmas {
            if source.alpha.then(sigma)? == lhs && sigma.is_complete() {
                out.push(ZMapMorphism {
                    source: source.clone(),
                    target: target.clone(),
                    phi: phi.clone(),
                    sigma: sigma.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// `f_σ: X_{α′} → X_α`, `α′_{x′} ↦ α_{At(σ)(x′)}`; fails if the assignment
/// depends on the choice of `x′`.
pub fn f_sigma(m: &ZMapMorphism) -> Result<FinMap> {
    let (xa, xa2) = (m.source.x_alpha(), m.target.x_alpha());
    let at = tarski_at(&m.sigma)?;
    let mut images: Vec<Option<usize>> = vec![None; xa2.points.len()];
    for (x2, &j) in xa2.index.iter().enumerate() {
        let img = xa.index[at.apply(x2)];
        match images[j] {
            Some(prev) if prev != img => return Err(Error::InvalidMorphism("f_σ is not well defined".into())),
            _ => images[j] = Some(img),
        }
    }
    FinMap::new(
        images
            .into_iter()
            .map(|i| i.expect("every point has an atom"))
            .collect(),
        xa.points.len(),
    )
}

/// The first `a ∈ A` with `f_σ⁻¹(X_α ∩ s_A(a)) ≠ X_{α′} ∩ s_{A′}(φ(a))`.
pub fn preimage_identity_violation(m: &ZMapMorphism) -> Result<Option<Elem>> {
    let f = f_sigma(m)?;
    let (za, za2) = (m.source.points_algebra()?, m.target.points_algebra()?);
    Ok(m.source
        .domain()
        .elements()
        .find(|&a| f.preimage(za.trace_set(a)) != za2.trace_set(m.phi.apply(a))))
}

/// `F′(A, X) = s_A^X`.
pub fn fprime_obj(z: &ZAlgebra) -> Result<ZMap> {
    if !z.is_dz()? {
        return Err(Error::WrongSubcategory("not a dz-algebra".into()));
    }
    let out = ZMap::new(z.trace_map()?)?;
    if !out.is_mz_map()? {
        return Err(Error::AxiomViolation("F′(A, X) is not an mz-map".into()));
    }
    Ok(out)
}

/// `F′(φ, f) = (φ, P(f))`.
pub fn fprime_mor(m: &DzaMorphism) -> Result<ZMapMorphism> {
    let (s, t) = (fprime_obj(m.source())?, fprime_obj(m.target())?);
    ZMapMorphism::new(s, t, m.phi().clone(), tarski_p(m.map())?)
}

/// `G′(α) = (CO(X_α), X̂_α)`.
pub fn gprime_obj(a: &ZMap) -> Result<ZAlgebra> {
    functor_f_obj(&frak_g_obj(a)?)
}

/// `G′(φ, σ) = (co(f_σ), f̂_σ)`.
pub fn gprime_mor(m: &ZMapMorphism) -> Result<DzaMorphism> {
    let f = frak_g_mor(m)?;
    functor_f_mor(&f, &frak_g_obj(&m.target)?, &frak_g_obj(&m.source)?)
}

/// `𝔉(X) = i_X: CO(X) ↪ P(X)`.
pub fn frak_f_obj(x: &FinTopSpace) -> Result<ZMap> {
    require_zh(x)?;
    let out = ZMap::inclusion(&Arc::new(x.clopen_algebra()))?;
    if !out.is_mz_map()? {
        return Err(Error::AxiomViolation("i_X is not an mz-map".into()));
    }
    Ok(out)
}

/// `𝔉(f) = (co(f), P(f)): 𝔉(Y) → 𝔉(X)` for `f: X → Y`.
pub fn frak_f_mor(f: &FinMap, x: &FinTopSpace, y: &FinTopSpace) -> Result<ZMapMorphism> {
    let (fx, fy) = (frak_f_obj(x)?, frak_f_obj(y)?);
    ZMapMorphism::new(fy, fx, co_on_map(f, x, y)?, tarski_p(f)?)
}

/// `𝔊(α) = X_α` as a subspace of `S(A)`.
pub fn frak_g_obj(a: &ZMap) -> Result<FinTopSpace> {
    a.require_mz()?;
    a.points_algebra()?.subspace()
}

/// `𝔊(φ, σ) = f_σ`, checked continuous and checked against the preimage
/// identity.
pub fn frak_g_mor(m: &ZMapMorphism) -> Result<FinMap> {
    let (x, x2) = (frak_g_obj(&m.source)?, frak_g_obj(&m.target)?);
    let f = f_sigma(m)?;
    if let Some(a) = preimage_identity_violation(m)? {
        return Err(Error::AxiomViolation(format!("preimage identity fails at {a:#b}")));
    }
    if let Some(u) = f.continuity_violation(&x2, &x) {
        return Err(Error::NotContinuous(u));
    }
    Ok(f)
}

/// `ε′_α = (s̄_A^{X_α}, ε̂_B): α → F′(G′(α))`, checked an isomorphism.
pub fn epsilon_prime(a: &ZMap) -> Result<ZMapMorphism> {
    let target = fprime_obj(&gprime_obj(a)?)?;
    let m = ZMapMorphism::new(
        a.clone(),
        target,
        a.points_algebra()?.trace_corestriction()?,
        a.epsilon_hat()?,
    )?;
    if !m.is_iso() {
        return Err(Error::AxiomViolation("ε′ is not an isomorphism".into()));
    }
    Ok(m)
}

/// `ε̃_α = (s̄_A^{X_α}, ε_B^α): α → 𝔉(𝔊(α))`, checked an isomorphism.
pub fn epsilon_tilde(a: &ZMap) -> Result<ZMapMorphism> {
    let target = frak_f_obj(&frak_g_obj(a)?)?;
    let m = ZMapMorphism::new(
        a.clone(),
        target,
        a.points_algebra()?.trace_corestriction()?,
        a.epsilon_hat()?,
    )?;
    if !m.is_iso() {
        return Err(Error::AxiomViolation("ε̃ is not an isomorphism".into()));
    }
    Ok(m)
}

/// `η̃_X: X → 𝔊(𝔉(X))`, `x ↦ α_{{x}} = x̂`, checked a homeomorphism.
pub fn eta_tilde(x: &FinTopSpace) -> Result<FinMap> {
    let fx = frak_f_obj(x)?;
    let xa = fx.x_alpha();
    let h = FinMap::new(xa.index.clone(), xa.points.len())?;
    if !h.is_homeomorphism(x, &frak_g_obj(&fx)?) {
        return Err(Error::AxiomViolation("η̃_X is not a homeomorphism".into()));
    }
    Ok(h)
}

/// Subcategory membership of a z-algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ZAlgebraClass {
    pub z: bool,
    pub dz: bool,
    pub compact_dza: bool,
    pub t_algebra: bool,
    /// Finite algebras are complete, so these repeat `z` and `dz`.
    pub complete_z: bool,
    pub complete_dz: bool,
}

pub fn classify_zalgebra(z: &ZAlgebra) -> Result<ZAlgebraClass> {
    let is_z = z.is_z_algebra();
    let dz = is_z && z.is_dz()?;
    let same_set = |other: &[BoolHom]| other.len() == z.len() && other.iter().all(|p| z.points().contains(p));
    Ok(ZAlgebraClass {
        z: is_z,
        dz,
        compact_dza: dz && same_set(&homs_into_two(z.algebra())?),
        t_algebra: dz && same_set(&x_check(z.algebra()).points),
        complete_z: is_z,
        complete_dz: dz,
    })
}

/// Subcategory membership of a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ZMapClass {
    pub mono: bool,
    pub z: bool,
    pub mz: bool,
    /// Isomorphic to `s_A^{X_A}` by relabelling the atoms of `B`.
    pub compact_mz: bool,
    /// Literally `id_B`.
    pub t_map: bool,
    pub complete_z: bool,
    pub complete_mz: bool,
}

pub fn classify_zmap(a: &ZMap) -> Result<ZMapClass> {
    let mono = a.alpha.is_mono();
    let z = mono && a.is_z_map()?;
    let mz = z && a.is_mz_map()?;
    let xa = a.x_alpha();
    let all = homs_into_two(a.domain())?;
    let compact =
        mz && xa.index_is_injective() && xa.points.len() == all.len() && xa.points.iter().all(|p| all.contains(p));
    Ok(ZMapClass {
        mono,
        z,
        mz,
        compact_mz: compact,
        t_map: a.alpha == BoolHom::identity(a.domain()),
        complete_z: z,
        complete_mz: mz,
    })
}

/// `E(A) = (A, X_A)`.
pub fn functor_e_obj(a: &Arc<BoolAlg>) -> Result<ZAlgebra> {
    ZAlgebra::full(a)
}

/// `E(φ) = (φ, S(φ))`.
pub fn functor_e_mor(phi: &BoolHom) -> Result<DzaMorphism> {
    let (sa, sb) = (StoneSpace::new(phi.domain())?, StoneSpace::new(phi.codomain())?);
    DzaMorphism::new(
        functor_e_obj(phi.domain())?,
        functor_e_obj(phi.codomain())?,
        phi.clone(),
        stone_on_hom(phi, &sa, &sb)?,
    )
}

pub fn functor_e_inv_obj(z: &ZAlgebra) -> Result<Arc<BoolAlg>> {
    if !classify_zalgebra(z)?.compact_dza {
        return Err(Error::WrongSubcategory("not a compact dz-algebra".into()));
    }
    Ok(z.algebra().clone())
}

pub fn functor_e_inv_mor(m: &DzaMorphism) -> Result<BoolHom> {
    functor_e_inv_obj(m.source())?;
    functor_e_inv_obj(m.target())?;
    Ok(m.phi().clone())
}

/// `K(A) = s_A^{X_A}`.
pub fn functor_k_obj(a: &Arc<BoolAlg>) -> Result<ZMap> {
    ZMap::new(functor_e_obj(a)?.trace_map()?)
}

/// `K(φ) = (φ, P(S(φ)))`.
pub fn functor_k_mor(phi: &BoolHom) -> Result<ZMapMorphism> {
    let e = functor_e_mor(phi)?;
    ZMapMorphism::new(
        functor_k_obj(phi.domain())?,
        functor_k_obj(phi.codomain())?,
        phi.clone(),
        tarski_p(e.map())?,
    )
}

pub fn functor_k_inv_obj(a: &ZMap) -> Result<Arc<BoolAlg>> {
    if !classify_zmap(a)?.compact_mz {
        return Err(Error::WrongSubcategory("not a compact mz-map".into()));
    }
    Ok(a.domain().clone())
}

pub fn functor_k_inv_mor(m: &ZMapMorphism) -> Result<BoolHom> {
    functor_k_inv_obj(m.source())?;
    functor_k_inv_obj(m.target())?;
    Ok(m.phi().clone())
}

/// `H⁻¹(B) = (B, X̌_B)`, points in atom order.
pub fn functor_h_inv_obj(b: &Arc<BoolAlg>) -> Result<ZAlgebra> {
    ZAlgebra::new(b.clone(), x_check(b).points)
}

/// `H⁻¹(σ) = (σ, f^σ)` with `f^σ(y̌) = x̌` for `x = At(σ)(y)`; the morphism
/// condition `y̌ ∘ σ = x̌` is checked by construction.
pub fn functor_h_inv_mor(sigma: &BoolHom) -> Result<DzaMorphism> {
    let check = check_adjoint_atom(sigma)?;
    if !check.passed() {
        return Err(Error::AxiomViolation("adjoint-atom lemma fails".into()));
    }
    DzaMorphism::new(
        functor_h_inv_obj(sigma.domain())?,
        functor_h_inv_obj(sigma.codomain())?,
        sigma.clone(),
        tarski_at(sigma)?,
    )
}

pub fn functor_h_obj(z: &ZAlgebra) -> Result<Arc<BoolAlg>> {
    if !classify_zalgebra(z)?.t_algebra {
        return Err(Error::WrongSubcategory("not a T-algebra".into()));
    }
    Ok(z.algebra().clone())
}

pub fn functor_h_mor(m: &DzaMorphism) -> Result<BoolHom> {
    functor_h_obj(m.source())?;
    functor_h_obj(m.target())?;
    Ok(m.phi().clone())
}

/// `H₁(id_B) = B`.
pub fn functor_h1_obj(a: &ZMap) -> Result<Arc<BoolAlg>> {
    if !classify_zmap(a)?.t_map {
        return Err(Error::WrongSubcategory("not a T-map".into()));
    }
    Ok(a.domain().clone())
}

pub fn functor_h1_mor(m: &ZMapMorphism) -> Result<BoolHom> {
    functor_h1_obj(m.source())?;
    functor_h1_obj(m.target())?;
    Ok(m.phi().clone())
}

pub fn functor_h1_inv_obj(b: &Arc<BoolAlg>) -> ZMap {
    ZMap::identity(b)
}

/// `H₁⁻¹(σ) = (σ, σ)`.
pub fn functor_h1_inv_mor(sigma: &BoolHom) -> Result<ZMapMorphism> {
    ZMapMorphism::new(
        functor_h1_inv_obj(sigma.domain()),
        functor_h1_inv_obj(sigma.codomain()),
        sigma.clone(),
        sigma.clone(),
    )
}

/// `𝔸(B) = X̌_B`.
pub fn functor_frak_a_obj(b: &Arc<BoolAlg>) -> Vec<BoolHom> {
    x_check(b).points
}

/// `𝔸(σ): X̌_{B′} → X̌_B`, `y̌ ↦ y̌ ∘ σ`, located by table comparison.
pub fn functor_frak_a_mor(sigma: &BoolHom) -> Result<FinMap> {
    let (xb, xb2) = (functor_frak_a_obj(sigma.domain()), functor_frak_a_obj(sigma.codomain()));
    let images = xb2
        .iter()
        .map(|y| {
            let c = sigma.then(y)?;
            xb.iter()
                .position(|x| *x == c)
                .ok_or_else(|| Error::AxiomViolation("y̌ ∘ σ is not in X̌_B".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    FinMap::new(images, xb.len())
}

/// `ȟ_B: At(B) → X̌_B`.
pub fn h_check(b: &Arc<BoolAlg>) -> Result<FinMap> {
    let xc = x_check(b);
    FinMap::new(xc.index, xc.points.len())
}

/// `ȟ_B ∘ At(σ) = 𝔸(σ) ∘ ȟ_{B′}`.
pub fn h_check_natural(sigma: &BoolHom) -> Result<bool> {
    let lhs = tarski_at(sigma)?.then(&h_check(sigma.domain())?)?;
    let rhs = h_check(sigma.codomain())?.then(&functor_frak_a_mor(sigma)?)?;
    Ok(lhs == rhs)
}

/// `B → P(𝔸(B))`, `b ↦ {ȟ(x) | x ≤ b}`.
pub fn p_frak_a_iso(b: &Arc<BoolAlg>) -> Result<BoolHom> {
    ZMap::identity(b).epsilon_hat()
}
