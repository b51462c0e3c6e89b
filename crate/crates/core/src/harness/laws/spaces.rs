use super::{degenerate, law, LawSpec};
use crate::error::Result;
use crate::finspace::{
    co_on_map, dense_transfer, enumerate_maps, enumerate_topologies, FinMap, FinTopSpace, RcAlgebra,
};
use crate::harness::config::SuiteConfig;
use crate::harness::report::Tally;

/// Labelled topologies on `0..=5` points.
const TOPOLOGY_COUNTS: [usize; 6] = [1, 1, 4, 29, 355, 6942];

pub(super) fn laws() -> Vec<LawSpec> {
    vec![
        law(
            "finspace.topology_count",
            "the labelled topologies on n points number 1, 1, 4, 29, 355, 6942",
            topology_count,
        ),
        law(
            "finspace.closure_interior",
            "cl(S) = X ∖ int(X ∖ S), cl is idempotent and extensive, CO(X) is closed under ∪ and complement",
            closure_interior,
        ),
        degenerate(law(
            "finspace.t2_discrete",
            "a finite Hausdorff space is discrete",
            t2_discrete,
        )),
        law(
            "finspace.rc_boolean",
            "RC(X) with F ∨ G = F ∪ G, F ∧ G = cl int(F ∩ G), F* = cl(X ∖ F) is a complete Boolean algebra",
            rc_boolean,
        ),
        law(
            "finspace.dense_transfer",
            "for dense X ⊆ Y, r(F) = F ∩ X and e(G) = cl_Y(G) are inverse isomorphisms RC(Y) ≅ RC(X)",
            dense_transfer_law,
        ),
        law(
            "finspace.co_functor",
            "co(g ∘ f) = co(f) ∘ co(g) and co(id) = id",
            co_functor,
        ),
        law(
            "finspace.ed_co_rc",
            "a zero-dimensional extremally disconnected space has CO(X) = RC(X)",
            ed_co_rc,
        ),
    ]
}

fn topologies(cfg: &SuiteConfig, cap: usize) -> Result<Vec<FinTopSpace>> {
    let mut out = Vec::new();
    for n in 0..=cfg.max_points.min(cap) {
        out.extend(enumerate_topologies(n)?);
    }
    Ok(out)
}

fn topology_count(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for (n, &want) in TOPOLOGY_COUNTS.iter().enumerate().take(cfg.max_points + 1) {
        let got = enumerate_topologies(n)?.len();
        t.check(got == want, || format!("n={n}: {got} ≠ {want}"));
    }
    Ok(t)
}

fn closure_interior(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for x in topologies(cfg, 4)? {
        let full = x.full();
        let ok = (0..=full).all(|s| {
            let c = x.closure(s);
            c == full & !x.interior(full & !s) && x.closure(c) == c && s & !c == 0 && x.is_closed(c)
        });
        let co = x.clopens();
        let co_ok = co
            .iter()
            .all(|&u| co.contains(&(full & !u)) && co.iter().all(|&v| co.contains(&(u | v))));
        t.check(ok && co_ok, || format!("opens {:?}", x.opens()));
    }
    Ok(t)
}

fn t2_discrete(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for x in topologies(cfg, 5)? {
        let p = x.predicates();
        t.check(p.t2 == p.discrete, || format!("opens {:?}", x.opens()));
    }
    Ok(t)
}

fn rc_boolean(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for x in topologies(cfg, 5)? {
        let r = RcAlgebra::new(&x).and_then(|rc| {
            rc.verify_axioms()?;
            Ok(rc.completeness_agrees() != Some(false))
        });
        t.check_res(r, || format!("opens {:?}", x.opens()));
    }
    Ok(t)
}

fn dense_transfer_law(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for y in topologies(cfg, 4)? {
        for s in 1..=y.full() {
            if y.is_dense(s) {
                let r = dense_transfer(s, &y).map(|_| true);
                t.check_res(r, || format!("subset {s:#b} of opens {:?}", y.opens()));
            }
        }
    }
    Ok(t)
}

fn co_functor(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let spaces = topologies(cfg, 3)?;
    for x in &spaces {
        let id = co_on_map(&FinMap::identity(x.point_count()), x, x)?;
        t.check(id == crate::boolean::BoolHom::identity(id.domain()), || {
            format!("co(id) at opens {:?}", x.opens())
        });
    }
    let small: Vec<&FinTopSpace> = spaces.iter().filter(|s| s.point_count() <= 2).collect();
    for x in &small {
        for y in &small {
            let fs: Vec<FinMap> = enumerate_maps(x.point_count(), y.point_count())
                .into_iter()
                .filter(|f| f.is_continuous(x, y))
                .collect();
            for z in &small {
                for g in enumerate_maps(y.point_count(), z.point_count()) {
                    if !g.is_continuous(y, z) {
                        continue;
                    }
                    let cg = co_on_map(&g, y, z)?;
                    for f in &fs {
                        let lhs = co_on_map(&f.then(&g)?, x, z)?;
                        let rhs = cg.then(&co_on_map(f, x, y)?)?;
                        t.check(lhs == rhs, || format!("f {:?} g {:?}", f.images(), g.images()));
                    }
                }
            }
        }
    }
    Ok(t)
}

fn ed_co_rc(cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for x in topologies(cfg, 5)? {
        let p = x.predicates();
        if p.extremally_disconnected && p.zero_dimensional {
            let mut rc = RcAlgebra::new(&x)?.carrier().to_vec();
            let mut co = x.clopens();
            rc.sort_unstable();
            co.sort_unstable();
            t.check(rc == co && p.co_equals_rc, || format!("opens {:?}", x.opens()));
        }
    }
    Ok(t)
}
