use std::sync::Arc;

use super::{degenerate, law, power, symbolic_law, LawSpec};
use crate::compactify::*;
use crate::error::Result;
use crate::finspace::{enumerate_maps, enumerate_permutations, FinMap, FinTopSpace};
use crate::harness::config::SuiteConfig;
use crate::harness::report::Tally;
use crate::symbolic::SymbolicSpace;
use crate::zalgebra::{dza_morphisms, ZAlgebra};
use crate::zmaps::{zmap_morphisms, ZMap};

pub(super) fn laws() -> Vec<LawSpec> {
    vec![
        law(
            "compactify.category_laws",
            "morphisms (f, g) of compactifications compose associatively with identities as units",
            category_laws,
        ),
        law(
            "compactify.phi_psi",
            "s″: (A, X) → Φ(Ψ(A, X)) and ϰ: c → Ψ(Φ(c)) are natural isomorphisms",
            phi_psi,
        ),
        law(
            "compactify.phi_psi_prime",
            "υ: α → Φ′(Ψ′(α)) and ξ: c → Ψ′(Φ′(c)) are natural isomorphisms",
            phi_psi_prime,
        ),
        law(
            "compactify.dwinger_finite",
            "for discrete X the admissible algebras are {P(X)}, and Δ′ ∘ Δ = id, Δ ∘ Δ′ ≅ id",
            dwinger_finite,
        ),
        law(
            "compactify.beta0_greatest",
            "Δ(CO(X)) is equivalent to β₀X and every compactification c satisfies c ≤ β₀X",
            beta0_greatest,
        ),
        law(
            "compactify.banaschewski",
            "for continuous f: X₁ → X₂ and c of X₂ there is a unique continuous g with g ∘ β₀ = c ∘ f",
            banaschewski,
        ),
        law(
            "compactify.beta0_iso_equiv",
            "a compactification isomorphic to β₀X is equivalent to β₀X",
            beta0_iso_equiv,
        ),
        degenerate(law(
            "compactify.ed_comp",
            "an extremally disconnected compactification of a discrete space is equivalent to the identity",
            ed_comp,
        )),
        symbolic_law(law(
            "compactify.symbolic_chain",
            "Δ(A) < Δ(A_U) over X₀ with g ∘ e_{A_U} = e_A, and the two are not equivalent",
            symbolic_chain,
        )),
    ]
}

fn points(cfg: &SuiteConfig, cap: usize) -> usize {
    cfg.max_points.min(cap)
}

/// Every compactification of a discrete space with `n ≤ max` points; each is
/// a relabelling `X → X`.
fn compactifications(max: usize) -> Result<Vec<FinCompactification>> {
    let mut out = Vec::new();
    for n in 0..=max {
        let x = FinTopSpace::discrete(n)?;
        for p in enumerate_permutations(n) {
            out.push(FinCompactification::new(x.clone(), x.clone(), p)?);
        }
    }
    Ok(out)
}

fn z_objects(atoms: usize) -> Result<Vec<ZAlgebra>> {
    (0..=atoms).map(|n| ZAlgebra::full(&power(n))).collect()
}

fn category_laws(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let cs = compactifications(points(cfg, 2))?;
    for a in &cs {
        for b in &cs {
            for m1 in zcomp_morphisms(a, b)? {
                let ids = ZCompMorphism::identity(a).then(&m1)? == m1 && m1.then(&ZCompMorphism::identity(b))? == m1;
                t.check(ids, || format!("identity law at f {:?}", m1.f().images()));
                for c in &cs {
                    for m2 in zcomp_morphisms(b, c)? {
                        let m12 = m1.then(&m2)?;
                        for d in &cs {
                            for m3 in zcomp_morphisms(c, d)? {
                                let lhs = m12.then(&m3)?;
                                let rhs = m1.then(&m2.then(&m3)?)?;
                                t.check(lhs == rhs, || format!("associativity at f {:?}", m1.f().images()));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(t)
}

fn phi_psi(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let atoms = cfg.max_atoms.min(2);
    let zs = z_objects(atoms)?;
    for z in &zs {
        let r = (|| {
            let c = psi_obj(z)?;
            let f = c.flags();
            Ok(f.embedding && f.dense && f.target_zero_dim_t2 && phi_obj(&c)?.is_z_algebra())
        })();
        t.check_res(r, || format!("Ψ at {} atoms", z.algebra().atom_count()));
    }
    for n in 1..=atoms {
        let half = ZAlgebra::from_indices(&power(n + 1), &[0])?;
        t.check(
            matches!(psi_obj(&half), Err(crate::error::Error::NotZAlgebra(_))),
            || "Ψ accepted a non-z-algebra".into(),
        );
    }
    for a in &zs {
        let sa = s_double_prime(a);
        t.check_res(sa.as_ref().map(|m| m.is_iso()).map_err(Clone::clone), || {
            "s″ iso".into()
        });
        for b in &zs {
            for m in dza_morphisms(a, b)? {
                let r = (|| {
                    let lhs = m.then(&s_double_prime(b)?)?;
                    let rhs = s_double_prime(a)?.then(&phi_mor(&psi_mor(&m)?)?)?;
                    Ok(lhs == rhs)
                })();
                t.check_res(r, || format!("s″ naturality at φ {:?}", m.phi().table()));
            }
        }
    }
    let cs = compactifications(points(cfg, 2))?;
    for c in &cs {
        t.check_res(kappa(c).map(|k| k.is_iso()), || {
            format!("ϰ at {:?}", c.embedding().images())
        });
        for c2 in &cs {
            for m in zcomp_morphisms(c, c2)? {
                let r = (|| {
                    let lhs = m.then(&kappa(c2)?)?;
                    let rhs = kappa(c)?.then(&psi_mor(&phi_mor(&m)?)?)?;
                    Ok(lhs == rhs)
                })();
                t.check_res(r, || format!("ϰ naturality at f {:?}", m.f().images()));
            }
        }
    }
    Ok(t)
}

fn phi_psi_prime(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let atoms = cfg.max_atoms.min(2);
    let maps: Vec<ZMap> = (0..=atoms).map(|n| ZMap::identity(&power(n))).collect();
    for a in &maps {
        t.check_res(upsilon(a).map(|u| u.is_iso()), || {
            format!("υ at {} atoms", a.domain().atom_count())
        });
        for b in &maps {
            for m in zmap_morphisms(a, b)? {
                let r = (|| {
                    let lhs = m.then(&upsilon(b)?)?;
                    let rhs = upsilon(a)?.then(&phi_prime_mor(&psi_prime_mor(&m)?)?)?;
                    Ok(lhs == rhs)
                })();
                t.check_res(r, || format!("υ naturality at φ {:?}", m.phi().table()));
            }
        }
    }
    let cs = compactifications(points(cfg, 2))?;
    for c in &cs {
        let r = (|| Ok(*kappa(c)?.target() == psi_prime_obj(&phi_prime_obj(c)?)?))();
        t.check_res(r, || format!("ξ target at {:?}", c.embedding().images()));
        for c2 in &cs {
            for m in zcomp_morphisms(c, c2)? {
                let r = (|| {
                    let lhs = m.then(&kappa(c2)?)?;
                    let rhs = kappa(c)?.then(&psi_prime_mor(&phi_prime_mor(&m)?)?)?;
                    Ok(lhs == rhs)
                })();
                t.check_res(r, || format!("ξ naturality at f {:?}", m.f().images()));
            }
        }
    }
    Ok(t)
}

fn dwinger_finite(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 0..=points(cfg, 4) {
        let x = FinTopSpace::discrete(n)?;
        let adm = admissible_algebras(&x)?;
        t.check(adm == vec![crate::boolean::BoolAlg::power(n)?], || {
            format!("{n} points: {} admissible algebras", adm.len())
        });
        for a in adm {
            let a = Arc::new(a);
            let r = (|| {
                let d = dwinger_delta(&a, &x)?;
                Ok(dwinger_delta_prime(&d)? == *a
                    && dwinger_order(&a, &a, &x)? == FinMap::identity(d.target().point_count()))
            })();
            t.check_res(r, || format!("Δ′Δ at {n} points"));
        }
        for p in enumerate_permutations(n) {
            let r = (|| {
                let c = FinCompactification::new(x.clone(), x.clone(), p.clone())?;
                let back = dwinger_delta(&Arc::new(dwinger_delta_prime(&c)?), &x)?;
                Ok(compactification_equiv(&back, &c)?.is_some())
            })();
            t.check_res(r, || format!("ΔΔ′ at {:?}", p.images()));
        }
    }
    Ok(t)
}

fn beta0_greatest(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 0..=points(cfg, 4) {
        let x = FinTopSpace::discrete(n)?;
        let b = beta0(&x)?;
        let co = Arc::new(x.clopen_algebra());
        let r = (|| Ok(compactification_equiv(&dwinger_delta(&co, &x)?, &b)?.is_some()))();
        t.check_res(r, || format!("Δ(CO(X)) at {n} points"));
    }
    for c in compactifications(points(cfg, 3))? {
        let x = c.source().clone();
        let r = banaschewski_extension(&FinMap::identity(x.point_count()), &x, &c).map(|_| true);
        t.check_res(r, || format!("c ≤ β₀ at {:?}", c.embedding().images()));
    }
    Ok(t)
}

fn banaschewski(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let n = points(cfg, 3);
    let cs = compactifications(n)?;
    for k in 0..=n {
        let x1 = FinTopSpace::discrete(k)?;
        let b = beta0(&x1)?;
        for c in &cs {
            for f in enumerate_maps(k, c.source().point_count()) {
                let r = (|| {
                    let g = banaschewski_extension(&f, &x1, c)?;
                    Ok(b.embedding().then(&g)? == f.then(c.embedding())?)
                })();
                t.check_res(r, || format!("f {:?} c {:?}", f.images(), c.embedding().images()));
            }
        }
    }
    Ok(t)
}

fn beta0_iso_equiv(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for c in compactifications(points(cfg, 3))? {
        let b = beta0(c.source())?;
        if zcomp_isomorphism(&c, &b)?.is_some() {
            t.check(compactification_equiv(&c, &b)?.is_some(), || {
                format!("c {:?}", c.embedding().images())
            });
        }
    }
    Ok(t)
}

fn ed_comp(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for c in compactifications(points(cfg, 4))? {
        if c.target().predicates().extremally_disconnected {
            let id = FinCompactification::identity(c.source())?;
            t.check(compactification_equiv(&c, &id)?.is_some(), || {
                format!("c {:?}", c.embedding().images())
            });
        }
    }
    Ok(t)
}

fn symbolic_chain(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let r = symbolic_chain_check(&SymbolicSpace::default(), cfg.seed, 100)?;
    t.check(r.passed(), || format!("{r:?}"));
    Ok(t)
}
