use std::sync::Arc;

use super::{algebras, degenerate, law, LawSpec};
use crate::boolean::{bits, enumerate_homs, enumerate_subalgebras, homs_into_two, x_hat, BoolAlg};
use crate::dualities::{stone_on_hom, tarski_p, StoneSpace};
use crate::error::Result;
use crate::finspace::{co_on_map, enumerate_maps, FinMap, FinTopSpace};
use crate::harness::config::SuiteConfig;
use crate::harness::report::Tally;
use crate::zalgebra::{
    dza_morphisms, functor_f_mor, functor_f_obj, functor_g_mor, functor_g_obj, h_hat, s_prime, t_compare, DzaMorphism,
    ZAlgebra,
};
use crate::zmaps::*;

pub(super) fn laws() -> Vec<LawSpec> {
    vec![
        law(
            "zalgebra.density",
            "(A, X) is a z-algebra iff X is dense in S(A)",
            density,
        ),
        law(
            "zalgebra.trace_mono",
            "(A, X) is a z-algebra iff s_A^X: A → P(X) is injective",
            trace_mono,
        ),
        law(
            "zalgebra.trace_topology",
            "s_A^X(A) generates the subspace topology of X ⊆ S(A) and lies in CO(X)",
            trace_topology,
        ),
        degenerate(law(
            "zalgebra.dz_dw",
            "a z-algebra is a dz-algebra iff no subalgebra of P(X) t-equal to s_A^X(A) escapes it",
            dz_dw,
        )),
        law(
            "zalgebra.t_equal_topology",
            "subalgebras of P(X) are t-equal iff they generate the same topology",
            t_equal_topology,
        ),
        law(
            "zalgebra.functor_laws",
            "F and G preserve identities and reverse composition",
            functor_laws,
        ),
        law(
            "zalgebra.s_prime",
            "s′: (A, X) → F(G(A, X)) is an isomorphism natural in (A, X)",
            s_prime_law,
        ),
        law(
            "zalgebra.h_hat",
            "ĥ_X: X → G(F(X)) is a homeomorphism natural in X",
            h_hat_law,
        ),
        degenerate(law(
            "zmaps.mz_characterization",
            "a z-map α is an mz-map iff no subalgebra of B t-equal to α(A) escapes α(A)",
            mz_characterization,
        )),
        law(
            "zmaps.fprime_gprime",
            "ε′: α → F′(G′(α)) is a natural isomorphism and G′(F′(A, X)) ≅ (A, X)",
            fprime_gprime,
        ),
        law(
            "zmaps.long_identities",
            "s̄_{A′} ∘ φ = co(f_σ) ∘ s̄_A and ε̂_{B′} ∘ σ = P(f_σ) ∘ ε̂_B",
            long_identities,
        ),
        law(
            "zmaps.frak_duality",
            "ε̃: α → 𝔉(𝔊(α)) and η̃: X → 𝔊(𝔉(X)) are natural isomorphisms",
            frak_duality,
        ),
        law(
            "zmaps.preimage_identity",
            "f_σ⁻¹(X_α ∩ s_A(a)) = X_{α′} ∩ s_{A′}(φ(a))",
            preimage_identity,
        ),
        law(
            "zmaps.stone_recovery",
            "T = E⁻¹ ∘ F, S = G ∘ E, 𝔊 ∘ K = S, K⁻¹ ∘ 𝔉 = T, and E, K are inverse to E⁻¹, K⁻¹",
            stone_recovery,
        ),
        law(
            "zmaps.tarski_recovery",
            "𝔸 = G ∘ H⁻¹, ȟ: At → 𝔸 is natural, P ∘ 𝔸 ≅ Id, and H, H₁ invert H⁻¹, H₁⁻¹",
            tarski_recovery,
        ),
        degenerate(law(
            "zmaps.complete_morphisms",
            "the algebra part of every morphism between T-objects is a complete homomorphism",
            complete_morphisms,
        )),
        law(
            "zmaps.classification",
            "compact ⇒ dz ⇒ z, T ⇒ dz, compact-mz ⇒ mz ⇒ z ⇒ mono, T-map ⇒ mz",
            classification,
        ),
    ]
}

fn atoms(cfg: &SuiteConfig, cap: usize) -> usize {
    cfg.max_atoms.min(cap)
}

fn points(cfg: &SuiteConfig, cap: usize) -> usize {
    cfg.max_points.min(cap)
}

/// Every `(A, X)` with `X ⊆ S(A)` for `A` among [`algebras`], and every
/// `(A, X̂)` for `A ≤ P(g)`.
fn zalgebra_instances(n: usize, g: usize) -> Result<Vec<ZAlgebra>> {
    let mut out = Vec::new();
    for a in algebras(n, g)? {
        let homs = homs_into_two(&a)?;
        for sel in 0..1u64 << homs.len() {
            out.push(ZAlgebra::new(a.clone(), bits(sel).map(|i| homs[i].clone()).collect())?);
        }
    }
    for size in 0..=g {
        for a in enumerate_subalgebras(size)? {
            let a = Arc::new(a);
            out.push(ZAlgebra::new(a.clone(), x_hat(&a).points)?);
        }
    }
    Ok(out)
}

fn dz_instances(n: usize, g: usize) -> Result<Vec<ZAlgebra>> {
    let mut out = Vec::new();
    for z in zalgebra_instances(n, g)? {
        if z.is_z_algebra() && z.is_dz()? {
            out.push(z);
        }
    }
    Ok(out)
}

fn discrete_spaces(n: usize) -> Result<Vec<FinTopSpace>> {
    (0..=n).map(FinTopSpace::discrete).collect()
}

/// Every homomorphism between the given algebras, as a candidate map.
fn map_instances(n: usize, g: usize) -> Result<Vec<ZMap>> {
    let algs = algebras(n, g)?;
    let mut out = Vec::new();
    for a in &algs {
        for b in &algs {
            for h in enumerate_homs(a, b)? {
                out.push(ZMap::new(h)?);
            }
        }
    }
    for size in 0..=g {
        for a in enumerate_subalgebras(size)? {
            out.push(ZMap::inclusion(&Arc::new(a))?);
        }
    }
    Ok(out)
}

fn mz_instances(n: usize, g: usize) -> Result<Vec<ZMap>> {
    let mut out = Vec::new();
    for a in map_instances(n, g)? {
        if classify_zmap(&a)?.mz {
            out.push(a);
        }
    }
    Ok(out)
}

fn density(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for z in zalgebra_instances(atoms(cfg, 3), points(cfg, 3))? {
        let r = z.is_dense_in_stone().map(|d| d == z.is_z_algebra());
        t.check_res(r, || format!("{} points over {:?}", z.len(), z.algebra().blocks()));
    }
    Ok(t)
}

fn trace_mono(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for z in zalgebra_instances(atoms(cfg, 3), points(cfg, 3))? {
        let r = z.trace_map().map(|s| s.is_mono() == z.is_z_algebra());
        t.check_res(r, || format!("{} points over {:?}", z.len(), z.algebra().blocks()));
    }
    Ok(t)
}

fn trace_topology(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for z in zalgebra_instances(atoms(cfg, 3), points(cfg, 3))? {
        let r = (|| {
            let sub = z.subspace()?;
            let co = sub.clopens();
            let inside = z.trace_algebra()?.members().iter().all(|u| co.contains(u));
            Ok(z.generated_topology()? == sub && inside)
        })();
        t.check_res(r, || format!("{} points over {:?}", z.len(), z.algebra().blocks()));
    }
    Ok(t)
}

fn dz_dw(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for z in zalgebra_instances(atoms(cfg, 3), points(cfg, 3))? {
        if !z.is_z_algebra() {
            continue;
        }
        let r = (|| Ok(z.is_dz()? == z.satisfies_dw()?))();
        t.check_res(r, || format!("{} points over {:?}", z.len(), z.algebra().blocks()));
    }
    Ok(t)
}

fn t_equal_topology(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 0..=points(cfg, 4) {
        let subs = enumerate_subalgebras(n)?;
        let tops: Vec<FinTopSpace> = subs
            .iter()
            .map(|a| FinTopSpace::generate(n, &a.members()))
            .collect::<Result<_>>()?;
        let pn = BoolAlg::power(n)?;
        for (i, a) in subs.iter().enumerate() {
            for (j, b) in subs.iter().enumerate() {
                let eq = t_compare(a, b, &pn)?.t_equal();
                t.check(eq == (tops[i] == tops[j]), || {
                    format!("{:?} vs {:?}", a.blocks(), b.blocks())
                });
            }
        }
    }
    Ok(t)
}

fn functor_laws(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let spaces = discrete_spaces(points(cfg, 3))?;
    for x in &spaces {
        let n = x.point_count();
        let id = functor_f_mor(&FinMap::identity(n), x, x)?;
        t.check(id == DzaMorphism::identity(&functor_f_obj(x)?), || {
            format!("F(id) at {n} points")
        });
        for y in &spaces {
            for f in enumerate_maps(n, y.point_count()) {
                let ff = functor_f_mor(&f, x, y)?;
                for z in &spaces {
                    for g in enumerate_maps(y.point_count(), z.point_count()) {
                        let lhs = functor_f_mor(&f.then(&g)?, x, z)?;
                        let rhs = functor_f_mor(&g, y, z)?.then(&ff)?;
                        t.check(lhs == rhs, || format!("F at f {:?} g {:?}", f.images(), g.images()));
                    }
                }
            }
        }
    }
    let objs: Vec<ZAlgebra> = dz_instances(atoms(cfg, 2), points(cfg, 2))?;
    for a in &objs {
        t.check_res(
            functor_g_mor(&DzaMorphism::identity(a)).map(|m| m == FinMap::identity(a.len())),
            || "G(id)".into(),
        );
        for b in &objs {
            for m1 in dza_morphisms(a, b)? {
                let g1 = functor_g_mor(&m1)?;
                for c in &objs {
                    for m2 in dza_morphisms(b, c)? {
                        let lhs = functor_g_mor(&m1.then(&m2)?)?;
                        let rhs = functor_g_mor(&m2)?.then(&g1)?;
                        t.check(lhs == rhs, || {
                            format!("G at φ {:?} ψ {:?}", m1.phi().table(), m2.phi().table())
                        });
                    }
                }
            }
        }
    }
    Ok(t)
}

fn s_prime_law(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let objs = dz_instances(atoms(cfg, 3), points(cfg, 3))?;
    let comps: Vec<Result<DzaMorphism>> = objs.iter().map(s_prime).collect();
    for (z, c) in objs.iter().zip(&comps) {
        t.check_res(c.as_ref().map(DzaMorphism::is_iso).map_err(Clone::clone), || {
            format!("s′ at {:?}", z.algebra().blocks())
        });
    }
    for (i, a) in objs.iter().enumerate() {
        for (j, b) in objs.iter().enumerate() {
            let (Ok(sa), Ok(sb)) = (&comps[i], &comps[j]) else {
                continue;
            };
            for m in dza_morphisms(a, b)? {
                let r = (|| {
                    let fg = functor_f_mor(&functor_g_mor(&m)?, &functor_g_obj(b)?, &functor_g_obj(a)?)?;
                    Ok(m.then(sb)? == sa.then(&fg)?)
                })();
                t.check_res(r, || format!("naturality at φ {:?}", m.phi().table()));
            }
        }
    }
    Ok(t)
}

fn h_hat_law(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let spaces = discrete_spaces(points(cfg, 3))?;
    let hs: Vec<FinMap> = spaces.iter().map(h_hat).collect::<Result<_>>()?;
    for (i, x) in spaces.iter().enumerate() {
        t.check(hs[i].is_homeomorphism(x, &functor_g_obj(&functor_f_obj(x)?)?), || {
            format!("ĥ at {i} points")
        });
        for (j, y) in spaces.iter().enumerate() {
            for f in enumerate_maps(i, j) {
                let gf = functor_g_mor(&functor_f_mor(&f, x, y)?)?;
                t.check(f.then(&hs[j])? == hs[i].then(&gf)?, || format!("f {:?}", f.images()));
            }
        }
    }
    Ok(t)
}

fn mz_characterization(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for a in map_instances(atoms(cfg, 3), points(cfg, 3))? {
        if !a.alpha().is_mono() || !a.is_z_map()? {
            continue;
        }
        let r = (|| Ok(a.is_mz_map()? == a.t_equal_witness()?.is_none()))();
        t.check_res(r, || format!("α {:?}", a.alpha().table()));
    }
    Ok(t)
}

/// Morphisms between every ordered pair of the given maps.
fn zmap_morphism_pairs(maps: &[ZMap]) -> Result<Vec<ZMapMorphism>> {
    let mut out = Vec::new();
    for a in maps {
        for b in maps {
            out.extend(zmap_morphisms(a, b)?);
        }
    }
    Ok(out)
}

fn fprime_gprime(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for a in mz_instances(atoms(cfg, 3), points(cfg, 3))? {
        t.check_res(epsilon_prime(&a).map(|e| e.is_iso()), || {
            format!("ε′ at {:?}", a.alpha().table())
        });
    }
    for z in dz_instances(atoms(cfg, 3), points(cfg, 3))? {
        let r = (|| {
            let back = gprime_obj(&fprime_obj(&z)?)?;
            Ok(dza_morphisms(&z, &back)?.iter().any(DzaMorphism::is_iso))
        })();
        t.check_res(r, || format!("G′F′ at {:?}", z.algebra().blocks()));
    }
    let small = mz_instances(atoms(cfg, 2), points(cfg, 2))?;
    for m in zmap_morphism_pairs(&small)? {
        let r = (|| {
            let (ea, eb) = (epsilon_prime(m.source())?, epsilon_prime(m.target())?);
            Ok(m.then(&eb)? == ea.then(&fprime_mor(&gprime_mor(&m)?)?)?)
        })();
        t.check_res(r, || {
            format!("naturality at φ {:?} σ {:?}", m.phi().table(), m.sigma().table())
        });
    }
    Ok(t)
}

fn long_identities(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let maps = mz_instances(atoms(cfg, 2), points(cfg, 2))?;
    for m in zmap_morphism_pairs(&maps)? {
        let r = (|| {
            let f = frak_g_mor(&m)?;
            let (x, x2) = (frak_g_obj(m.source())?, frak_g_obj(m.target())?);
            let (s, s2) = (
                m.source().points_algebra()?.trace_corestriction()?,
                m.target().points_algebra()?.trace_corestriction()?,
            );
            let square1 = m.phi().then(&s2)? == s.then(&co_on_map(&f, &x2, &x)?)?;
            let (e, e2) = (m.source().epsilon_hat()?, m.target().epsilon_hat()?);
            let square2 = m.sigma().then(&e2)? == e.then(&tarski_p(&f)?)?;
            Ok(square1 && square2)
        })();
        t.check_res(r, || format!("φ {:?} σ {:?}", m.phi().table(), m.sigma().table()));
    }
    Ok(t)
}

fn frak_duality(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for a in mz_instances(atoms(cfg, 3), points(cfg, 3))? {
        t.check_res(epsilon_tilde(&a).map(|e| e.is_iso()), || {
            format!("ε̃ at {:?}", a.alpha().table())
        });
    }
    let small = mz_instances(atoms(cfg, 2), points(cfg, 2))?;
    for m in zmap_morphism_pairs(&small)? {
        let r = (|| {
            let (ta, tb) = (epsilon_tilde(m.source())?, epsilon_tilde(m.target())?);
            let f = frak_g_mor(&m)?;
            let fg = frak_f_mor(&f, &frak_g_obj(m.target())?, &frak_g_obj(m.source())?)?;
            Ok(m.then(&tb)? == ta.then(&fg)?)
        })();
        t.check_res(r, || format!("ε̃ naturality at φ {:?}", m.phi().table()));
    }
    let spaces = discrete_spaces(points(cfg, 3))?;
    let etas: Vec<FinMap> = spaces.iter().map(eta_tilde).collect::<Result<_>>()?;
    for (i, x) in spaces.iter().enumerate() {
        t.check(etas[i].is_homeomorphism(x, &frak_g_obj(&frak_f_obj(x)?)?), || {
            format!("η̃ at {i} points")
        });
        for (j, y) in spaces.iter().enumerate() {
            for f in enumerate_maps(i, j) {
                let gf = frak_g_mor(&frak_f_mor(&f, x, y)?)?;
                t.check(f.then(&etas[j])? == etas[i].then(&gf)?, || {
                    format!("η̃ naturality at f {:?}", f.images())
                });
            }
        }
    }
    Ok(t)
}

fn preimage_identity(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let maps = mz_instances(atoms(cfg, 2), points(cfg, 2))?;
    for m in zmap_morphism_pairs(&maps)? {
        t.check_res(preimage_identity_violation(&m).map(|v| v.is_none()), || {
            format!("φ {:?} σ {:?}", m.phi().table(), m.sigma().table())
        });
    }
    Ok(t)
}

fn stone_recovery(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let spaces = discrete_spaces(points(cfg, 3))?;
    for x in &spaces {
        let co = x.clopen_algebra();
        t.check_res(functor_e_inv_obj(&functor_f_obj(x)?).map(|a| *a == co), || {
            format!("E⁻¹F at {} points", x.point_count())
        });
        t.check_res(functor_k_inv_obj(&frak_f_obj(x)?).map(|a| *a == co), || {
            format!("K⁻¹𝔉 at {} points", x.point_count())
        });
        for y in &spaces {
            for f in enumerate_maps(x.point_count(), y.point_count()) {
                let co_f = co_on_map(&f, x, y)?;
                t.check_res(functor_e_inv_mor(&functor_f_mor(&f, x, y)?).map(|h| h == co_f), || {
                    format!("E⁻¹F at f {:?}", f.images())
                });
                t.check_res(functor_k_inv_mor(&frak_f_mor(&f, x, y)?).map(|h| h == co_f), || {
                    format!("K⁻¹𝔉 at f {:?}", f.images())
                });
            }
        }
    }
    let algs = algebras(atoms(cfg, 3), points(cfg, 3))?;
    let sts: Vec<StoneSpace> = algs.iter().map(StoneSpace::new).collect::<Result<_>>()?;
    for (i, a) in algs.iter().enumerate() {
        let r = (|| {
            let e = functor_e_obj(a)?;
            let k = functor_k_obj(a)?;
            Ok(functor_g_obj(&e)? == sts[i].space
                && frak_g_obj(&k)? == sts[i].space
                && functor_e_obj(&functor_e_inv_obj(&e)?)? == e
                && functor_k_obj(&functor_k_inv_obj(&k)?)? == k)
        })();
        t.check_res(r, || format!("objects at {:?}", a.blocks()));
        for (j, b) in algs.iter().enumerate() {
            for phi in enumerate_homs(a, b)? {
                let r = (|| {
                    let s_phi = stone_on_hom(&phi, &sts[i], &sts[j])?;
                    let e = functor_e_mor(&phi)?;
                    let k = functor_k_mor(&phi)?;
                    Ok(functor_g_mor(&e)? == s_phi
                        && frak_g_mor(&k)? == s_phi
                        && functor_e_mor(&functor_e_inv_mor(&e)?)? == e
                        && functor_k_mor(&functor_k_inv_mor(&k)?)? == k
                        && functor_k_inv_mor(&k)? == phi)
                })();
                t.check_res(r, || format!("morphisms at φ {:?}", phi.table()));
            }
        }
    }
    Ok(t)
}

fn tarski_recovery(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let algs = algebras(atoms(cfg, 3), points(cfg, 3))?;
    for b in &algs {
        let r = (|| {
            let hb = functor_h_inv_obj(b)?;
            let n = b.atom_count();
            Ok(*functor_h_obj(&hb)? == **b
                && *functor_h1_obj(&functor_h1_inv_obj(b))? == **b
                && functor_g_obj(&hb)? == FinTopSpace::discrete(n)?
                && functor_frak_a_obj(b).len() == n
                && h_check(b)?.is_bijective()
                && p_frak_a_iso(b)?.is_iso())
        })();
        t.check_res(r, || format!("objects at {:?}", b.blocks()));
        for b2 in &algs {
            for sigma in enumerate_homs(b, b2)? {
                let r = (|| {
                    let h = functor_h_inv_mor(&sigma)?;
                    let a_sigma = functor_frak_a_mor(&sigma)?;
                    let p_square = sigma.then(&p_frak_a_iso(b2)?)? == p_frak_a_iso(b)?.then(&tarski_p(&a_sigma)?)?;
                    Ok(functor_h_mor(&h)? == sigma
                        && functor_h1_mor(&functor_h1_inv_mor(&sigma)?)? == sigma
                        && functor_g_mor(&h)? == a_sigma
                        && h_check_natural(&sigma)?
                        && p_square)
                })();
                t.check_res(r, || format!("σ {:?}", sigma.table()));
            }
        }
    }
    Ok(t)
}

fn complete_morphisms(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let algs = algebras(atoms(cfg, 3), points(cfg, 2))?;
    let objs: Vec<ZAlgebra> = algs.iter().map(functor_h_inv_obj).collect::<Result<_>>()?;
    for a in &objs {
        for b in &objs {
            for m in dza_morphisms(a, b)? {
                t.check(m.phi().is_complete(), || format!("φ {:?}", m.phi().table()));
            }
        }
    }
    Ok(t)
}

fn classification(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for z in zalgebra_instances(atoms(cfg, 3), points(cfg, 3))? {
        let r = classify_zalgebra(&z)
            .map(|c| (!c.compact_dza || c.dz) && (!c.dz || c.z) && (!c.t_algebra || c.dz) && c.complete_z == c.z);
        t.check_res(r, || format!("{} points over {:?}", z.len(), z.algebra().blocks()));
    }
    for a in map_instances(atoms(cfg, 3), points(cfg, 3))? {
        let r = classify_zmap(&a)
            .map(|c| (!c.compact_mz || c.mz) && (!c.mz || c.z) && (!c.z || c.mono) && (!c.t_map || c.mz));
        t.check_res(r, || format!("α {:?}", a.alpha().table()));
    }
    for b in algebras(atoms(cfg, 3), points(cfg, 3))? {
        let r = (|| {
            Ok(classify_zalgebra(&functor_e_obj(&b)?)?.compact_dza
                && classify_zalgebra(&functor_h_inv_obj(&b)?)?.t_algebra
                && classify_zmap(&functor_k_obj(&b)?)?.compact_mz
                && classify_zmap(&ZMap::identity(&b))?.t_map)
        })();
        t.check_res(r, || format!("images of E, H⁻¹, K, H₁⁻¹ at {:?}", b.blocks()));
    }
    Ok(t)
}
