use std::sync::Arc;

use super::{algebras, law, power, powers, LawSpec};
use crate::boolean::{enumerate_homs, enumerate_subalgebras, x_alpha, x_check, x_hat, BoolAlg, BoolHom};
use crate::dualities::{
    check_adjoint_atom, epsilon, epsilon_inv, stone_map, stone_on_hom, t_component, tarski_at, tarski_p, StoneSpace,
};
use crate::error::Result;
use crate::finspace::{co_on_map, enumerate_maps, FinTopSpace};
use crate::harness::config::SuiteConfig;
use crate::harness::report::Tally;

pub(super) fn laws() -> Vec<LawSpec> {
    vec![
        law(
            "boolean.hom_preservation",
            "every enumerated φ ∈ Bool(A, B) preserves ∧, ∨ and complement on all pairs",
            hom_preservation,
        ),
        law("boolean.hom_count", "|Bool(P(n), P(m))| = n^m", hom_count),
        law(
            "boolean.composition",
            "composition of homomorphisms is associative with identities as units",
            composition,
        ),
        law(
            "boolean.subalgebra_count",
            "the Boolean subalgebras of P(n) are counted by the Bell numbers",
            subalgebra_count,
        ),
        law(
            "boolean.hat_injective",
            "ĥ_{X,A} is injective iff A separates the points of X, for A ≤ P(X)",
            hat_injective,
        ),
        law(
            "boolean.check_bijective",
            "ȟ_B: At(B) → X̌_B is a bijection",
            check_bijective,
        ),
        law(
            "boolean.alpha_injective",
            "if every atom of B is a meet of elements of α(A) then h_α is injective",
            alpha_injective,
        ),
        law(
            "dualities.stone_map_iso",
            "s_A: A → CO(S(A)) is an isomorphism",
            stone_map_iso,
        ),
        law(
            "dualities.t_homeomorphism",
            "t_X: X → S(CO(X)) is a homeomorphism iff X is zero-dimensional Hausdorff",
            t_homeomorphism,
        ),
        law(
            "dualities.stone_round_trip",
            "S(s_A) ∘ t_{S(A)} = id_{S(A)}",
            stone_round_trip,
        ),
        law(
            "dualities.stone_contravariance",
            "S(ψ ∘ φ) = S(φ) ∘ S(ψ) and S(id) = id",
            stone_contravariance,
        ),
        law("dualities.s_naturality", "s_B ∘ φ = CO(S(φ)) ∘ s_A", s_naturality),
        law("dualities.t_naturality", "t_Y ∘ f = S(CO(f)) ∘ t_X", t_naturality),
        law(
            "dualities.adjoint_atom",
            "x′ ≤ σ(b) ⇔ At(σ)(x′) ≤ b for every complete σ",
            adjoint_atom,
        ),
        law(
            "dualities.tarski_units",
            "ε_B and η_X are isomorphisms, natural in σ and f",
            tarski_units,
        ),
        law(
            "dualities.tarski_round_trip",
            "At(P(f)) = f and P(At(σ)) = σ",
            tarski_round_trip,
        ),
    ]
}

fn atoms(cfg: &SuiteConfig, cap: usize) -> usize {
    cfg.max_atoms.min(cap)
}

fn hom_preservation(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let algs = algebras(atoms(cfg, 3), cfg.max_points.min(3))?;
    for a in &algs {
        for b in &algs {
            for h in enumerate_homs(a, b)? {
                let ok = a.elements().all(|x| {
                    h.apply(a.complement(x)) == b.complement(h.apply(x))
                        && a.elements().all(|y| {
                            h.apply(a.meet(x, y)) == b.meet(h.apply(x), h.apply(y))
                                && h.apply(a.join(x, y)) == b.join(h.apply(x), h.apply(y))
                        })
                });
                t.check(ok, || format!("table {:?}", h.table()));
            }
        }
    }
    Ok(t)
}

fn hom_count(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 0..=atoms(cfg, 4) {
        for m in 0..=atoms(cfg, 4) {
            let got = enumerate_homs(&power(n), &power(m))?.len();
            let want = n.pow(m as u32);
            t.check(got == want, || format!("n={n} m={m}: {got} ≠ {want}"));
        }
    }
    Ok(t)
}

fn composition(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let ps = powers(atoms(cfg, 2));
    for a in &ps {
        for b in &ps {
            for f in enumerate_homs(a, b)? {
                t.check(
                    BoolHom::identity(a).then(&f)? == f && f.then(&BoolHom::identity(b))? == f,
                    || format!("identity law fails for {:?}", f.table()),
                );
                for c in &ps {
                    for g in enumerate_homs(b, c)? {
                        for d in &ps {
                            for h in enumerate_homs(c, d)? {
                                let lhs = f.then(&g)?.then(&h)?;
                                let rhs = f.then(&g.then(&h)?)?;
                                t.check(lhs == rhs, || {
                                    format!("{:?} {:?} {:?}", f.table(), g.table(), h.table())
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(t)
}

/// Bell numbers by the triangle recurrence.
fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty")];
        for &x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

fn subalgebra_count(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for g in 0..=cfg.max_points {
        let subs = enumerate_subalgebras(g)?;
        let pg = BoolAlg::power(g)?;
        t.check(
            subs.len() == bell(g) && subs.iter().all(|s| s.is_subalgebra_of(&pg)),
            || format!("ground {g}: {} subalgebras, expected {}", subs.len(), bell(g)),
        );
    }
    Ok(t)
}

fn hat_injective(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for g in 0..=cfg.max_points.min(4) {
        for a in enumerate_subalgebras(g)? {
            let members = a.members();
            let separates =
                (0..g).all(|x| (0..g).all(|y| x == y || members.iter().any(|&m| (m >> x & 1) != (m >> y & 1))));
            let injective = x_hat(&Arc::new(a.clone())).index_is_injective();
            t.check(separates == injective, || format!("blocks {:?}", a.blocks()));
        }
    }
    Ok(t)
}

fn check_bijective(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for b in algebras(atoms(cfg, 4), cfg.max_points.min(4))? {
        let xc = x_check(&b);
        let onto = (0..xc.points.len()).all(|j| xc.index.contains(&j));
        t.check(xc.index_is_injective() && onto, || format!("blocks {:?}", b.blocks()));
    }
    Ok(t)
}

fn alpha_injective(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let algs = algebras(atoms(cfg, 3), cfg.max_points.min(3))?;
    for a in &algs {
        for b in &algs {
            for alpha in enumerate_homs(a, b)? {
                if !alpha.is_mono() {
                    continue;
                }
                let meets = b
                    .atoms()
                    .all(|x| b.big_meet(a.elements().map(|e| alpha.apply(e)).filter(|&y| b.le(x, y))) == x);
                if meets {
                    t.check(x_alpha(&alpha).index_is_injective(), || {
                        format!("table {:?}", alpha.table())
                    });
                }
            }
        }
    }
    Ok(t)
}

fn stone_map_iso(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for a in algebras(atoms(cfg, 4), cfg.max_points.min(4))? {
        let st = StoneSpace::new(&a)?;
        let s = stone_map(&st)?;
        t.check(s.is_valid() && s.is_iso() && st.points.len() == a.atom_count(), || {
            format!("blocks {:?}", a.blocks())
        });
    }
    Ok(t)
}

fn t_homeomorphism(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 0..=cfg.max_points {
        for x in crate::finspace::enumerate_topologies(n)? {
            let p = x.predicates();
            let expect = p.t2 && p.zero_dimensional;
            let got = match t_component(&x) {
                Ok((st, f)) => f.is_homeomorphism(&x, &st.space),
                Err(crate::error::Error::Precondition(_)) => false,
                Err(e) => return Err(e),
            };
            t.check(got == expect, || format!("opens {:?}", x.opens()));
        }
    }
    Ok(t)
}

fn stone_round_trip(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for a in algebras(atoms(cfg, 4), cfg.max_points.min(4))? {
        let st = StoneSpace::new(&a)?;
        let s = stone_map(&st)?;
        let (st2, tx) = t_component(&st.space)?;
        let back = stone_on_hom(&s, &st, &st2)?;
        let id = tx.then(&back)?;
        t.check(id == crate::finspace::FinMap::identity(st.points.len()), || {
            format!("blocks {:?}", a.blocks())
        });
    }
    Ok(t)
}

fn stone_contravariance(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let ps = powers(atoms(cfg, 3));
    let sts: Vec<StoneSpace> = ps.iter().map(StoneSpace::new).collect::<Result<_>>()?;
    for (i, a) in ps.iter().enumerate() {
        let id = stone_on_hom(&BoolHom::identity(a), &sts[i], &sts[i])?;
        t.check(id == crate::finspace::FinMap::identity(sts[i].points.len()), || {
            format!("S(id) at {i} atoms")
        });
        for (j, b) in ps.iter().enumerate() {
            for phi in enumerate_homs(a, b)? {
                let s_phi = stone_on_hom(&phi, &sts[i], &sts[j])?;
                for (k, c) in ps.iter().enumerate() {
                    for psi in enumerate_homs(b, c)? {
                        let lhs = stone_on_hom(&phi.then(&psi)?, &sts[i], &sts[k])?;
                        let rhs = stone_on_hom(&psi, &sts[j], &sts[k])?.then(&s_phi)?;
                        t.check(lhs == rhs, || format!("φ {:?} ψ {:?}", phi.table(), psi.table()));
                    }
                }
            }
        }
    }
    Ok(t)
}

fn s_naturality(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let algs = algebras(atoms(cfg, 3), cfg.max_points.min(3))?;
    let sts: Vec<StoneSpace> = algs.iter().map(StoneSpace::new).collect::<Result<_>>()?;
    let maps: Vec<BoolHom> = sts.iter().map(stone_map).collect::<Result<_>>()?;
    for (i, a) in algs.iter().enumerate() {
        for (j, b) in algs.iter().enumerate() {
            for phi in enumerate_homs(a, b)? {
                let s_phi = stone_on_hom(&phi, &sts[i], &sts[j])?;
                let co = co_on_map(&s_phi, &sts[j].space, &sts[i].space)?;
                let lhs = phi.then(&maps[j])?;
                let rhs = maps[i].then(&co)?;
                t.check(lhs == rhs, || format!("φ {:?}", phi.table()));
            }
        }
    }
    Ok(t)
}

fn t_naturality(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let spaces: Vec<FinTopSpace> = (0..=cfg.max_points.min(3))
        .map(FinTopSpace::discrete)
        .collect::<Result<_>>()?;
    let ts: Vec<_> = spaces.iter().map(t_component).collect::<Result<_>>()?;
    for (i, x) in spaces.iter().enumerate() {
        for (j, y) in spaces.iter().enumerate() {
            for f in enumerate_maps(i, j) {
                let co = co_on_map(&f, x, y)?;
                let s_co = stone_on_hom(&co, &ts[j].0, &ts[i].0)?;
                let lhs = f.then(&ts[j].1)?;
                let rhs = ts[i].1.then(&s_co)?;
                t.check(lhs == rhs, || format!("f {:?}", f.images()));
            }
        }
    }
    Ok(t)
}

fn adjoint_atom(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let algs = algebras(atoms(cfg, 3), cfg.max_points.min(3))?;
    for a in &algs {
        for b in &algs {
            for sigma in enumerate_homs(a, b)? {
                let r = check_adjoint_atom(&sigma).map(|c| c.passed());
                t.check_res(r, || format!("σ {:?}", sigma.table()));
            }
        }
    }
    Ok(t)
}

fn tarski_units(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let algs = algebras(atoms(cfg, 3), cfg.max_points.min(3))?;
    for b in &algs {
        let (e, ei) = (epsilon(b)?, epsilon_inv(b)?);
        t.check(
            e.is_iso() && e.then(&ei)? == BoolHom::identity(b) && ei.then(&e)? == BoolHom::identity(ei.domain()),
            || format!("ε at blocks {:?}", b.blocks()),
        );
        for b2 in &algs {
            let e2 = epsilon(b2)?;
            for sigma in enumerate_homs(b, b2)? {
                let lhs = sigma.then(&e2)?;
                let rhs = e.then(&tarski_p(&tarski_at(&sigma)?)?)?;
                t.check(lhs == rhs, || format!("ε naturality at σ {:?}", sigma.table()));
            }
        }
    }
    // η_X(x) = {x} is an atom of P(X), and At(P(f)) ∘ η_X = η_Y ∘ f.
    for n in 0..=cfg.max_points.min(3) {
        let eta = crate::dualities::eta(n)?;
        let pn = BoolAlg::power(n)?;
        t.check(
            eta.len() == pn.atom_count() && eta.iter().all(|&a| pn.is_atom(a)),
            || format!("η at {n} points"),
        );
        for m in 0..=cfg.max_points.min(3) {
            let eta_m = crate::dualities::eta(m)?;
            for f in enumerate_maps(n, m) {
                let at = tarski_at(&tarski_p(&f)?)?;
                let ok = (0..n).all(|x| eta_m[at.apply(x)] == eta_m[f.apply(x)]);
                t.check(ok, || format!("η naturality at f {:?}", f.images()));
            }
        }
    }
    Ok(t)
}

fn tarski_round_trip(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 0..=cfg.max_points.min(3) {
        for m in 0..=cfg.max_points.min(3) {
            for f in enumerate_maps(n, m) {
                t.check(tarski_at(&tarski_p(&f)?)? == f, || format!("f {:?}", f.images()));
            }
            for sigma in enumerate_homs(&power(m), &power(n))? {
                t.check(tarski_p(&tarski_at(&sigma)?)? == sigma, || {
                    format!("σ {:?}", sigma.table())
                });
            }
        }
    }
    Ok(t)
}
