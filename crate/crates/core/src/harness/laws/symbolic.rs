use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{law, symbolic_law, LawSpec};
use crate::error::{Error, Result};
use crate::harness::config::SuiteConfig;
use crate::harness::report::Tally;
use crate::symbolic::*;

/// Randomised instances per symbolic law.
const SAMPLES: usize = 200;
/// Bound on the agreeing prefix of the separating pair.
const CERTIFICATE_BOUND: usize = 8;

pub(super) fn laws() -> Vec<LawSpec> {
    [
        law(
            "symbolic.cyl_ops",
            "cylinder ∧, ∨, ¬, Δ agree with pointwise membership",
            cyl_ops,
        ),
        law(
            "symbolic.density",
            "every nonzero cylinder contains a finitely supported nonzero point",
            density,
        ),
        law(
            "symbolic.z_algebra",
            "(cylinder algebra, X₀) is a z-algebra on every sampled element",
            z_algebra,
        ),
        law(
            "symbolic.ext_equal_congruence",
            "equality of extension elements on X₀ is an equivalence and a congruence for ∧, ∨, ¬",
            ext_equal_congruence,
        ),
        law(
            "symbolic.dz_certificate",
            "U is clopen in X₀, is not a cylinder trace, and a separating pair exists past any bound",
            dz_certificate,
        ),
        law(
            "symbolic.cylinder_dz_decision",
            "(cylinder algebra, X₀) is not a dz-algebra; with the zero point added the question stays open",
            cylinder_dz_decision,
        ),
        law(
            "symbolic.extension_dz",
            "whether (A_U, X₀) is a dz-algebra is not decided by any finite witness",
            extension_dz,
        ),
        law(
            "symbolic.t_equal_extension",
            "A_U is t-equal to and strictly larger than the cylinder algebra on X₀",
            t_equal_extension,
        ),
        law(
            "symbolic.zero_point",
            "with the zero point present U is not clopen and the parity test rejects the zero point",
            zero_point,
        ),
    ]
    .into_iter()
    .map(symbolic_law)
    .collect()
}

fn rng(cfg: &SuiteConfig) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed)
}

fn cyl_ops(cfg: &SuiteConfig) -> Result<Tally> {
    let mut r = rng(cfg);
    let mut t = Tally::default();
    let pts = sample_points(6);
    for _ in 0..SAMPLES {
        let (a, b) = (random_cyl(&mut r, 4)?, random_cyl(&mut r, 4)?);
        let (m, j, d, c) = (a.meet(&b)?, a.join(&b)?, a.symdiff(&b)?, a.complement());
        let ok = pts.iter().chain([Point::zero()].iter()).all(|p| {
            let (x, y) = (a.contains(p), b.contains(p));
            m.contains(p) == (x && y) && j.contains(p) == (x || y) && d.contains(p) == (x != y) && c.contains(p) == !x
        });
        t.check(ok && a.le(&j)? && m.le(&a)?, || format!("{a} and {b}"));
    }
    Ok(t)
}

fn density(cfg: &SuiteConfig) -> Result<Tally> {
    let mut r = rng(cfg);
    let mut t = Tally::default();
    let space = SymbolicSpace::default();
    let mut n = 0;
    while n < SAMPLES {
        let e = random_cyl(&mut r, 6)?;
        if e.is_zero() {
            continue;
        }
        n += 1;
        let w = density_witness(&e, &space);
        t.check_res(w.map(|p| e.contains(&p) && space.contains(&p) && !p.is_zero()), || {
            format!("{e}")
        });
    }
    t.check(
        matches!(density_witness(&CylElem::zero(), &space), Err(Error::EmptyElement)),
        || "the zero cylinder produced a witness".into(),
    );
    Ok(t)
}

fn z_algebra(cfg: &SuiteConfig) -> Result<Tally> {
    let mut r = rng(cfg);
    let mut t = Tally::default();
    let elems: Vec<CylElem> = (0..SAMPLES).map(|_| random_cyl(&mut r, 6)).collect::<Result<_>>()?;
    for space in [SymbolicSpace::default(), SymbolicSpace::with_zero()] {
        let v = z_verdict(&space, &elems)?;
        t.check(v == Verdict::Pass, || format!("{v:?}"));
    }
    Ok(t)
}

fn ext_equal_congruence(cfg: &SuiteConfig) -> Result<Tally> {
    let mut r = rng(cfg);
    let mut t = Tally::default();
    let pts = sample_points(6);
    let odd = CylElem::cell(1)?;
    let even = CylElem::cell(0)?;
    for _ in 0..SAMPLES {
        let a = random_ext(&mut r, 3)?;
        let c = random_ext(&mut r, 3)?;
        // b and b2 differ from a only off the side each component is read on
        let b = ExtElem::new(a.e1.join(&odd)?, a.e2.clone());
        let b2 = ExtElem::new(b.e1.clone(), b.e2.join(&even)?);
        let eq = |x: &ExtElem, y: &ExtElem| ext_equal(x, y);
        let relation =
            eq(&a, &a)? && eq(&a, &b)? && eq(&b, &a)? && eq(&b, &b2)? && eq(&a, &b2)? && eq(&a, &c)? == eq(&c, &a)?;
        let congruence = eq(&a.meet(&c)?, &b.meet(&c)?)?
            && eq(&a.join(&c)?, &b2.join(&c)?)?
            && eq(&a.complement(), &b2.complement())?;
        let mut sound = true;
        for x in [&b, &b2, &c] {
            if eq(&a, x)? {
                for p in &pts {
                    sound &= a.contains(p)? == x.contains(p)?;
                }
            }
        }
        t.check(relation && congruence && sound, || format!("{a:?} / {c:?}"));
    }
    Ok(t)
}

fn dz_certificate(_cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let cert = dz_failure_certificate(&SymbolicSpace::default(), CERTIFICATE_BOUND)?;
    let b = CERTIFICATE_BOUND as u32;
    let pair = (Point::new([b + 2]), Point::new([b + 1]));
    t.check(cert.valid() && cert.separating_pair == pair, || format!("{cert:?}"));
    t.check(
        u_clopen_check(&SymbolicSpace::default(), cert.cells_checked)? == Verdict::Pass,
        || "U clopen check".into(),
    );
    Ok(t)
}

fn cylinder_dz_decision(_cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let v = cylinder_dz_verdict(&SymbolicSpace::default(), CERTIFICATE_BOUND)?;
    t.check(matches!(v, Verdict::Fail(_)), || {
        format!("expected a refutation, got {v:?}")
    });
    match cylinder_dz_verdict(&SymbolicSpace::with_zero(), CERTIFICATE_BOUND)? {
        Verdict::Undetermined(why) => t.undetermined(|| format!("with the zero point: {why}")),
        other => t.check(false, || format!("with the zero point: {other:?}")),
    }
    Ok(t)
}

fn extension_dz(_cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    match extension_dz_verdict() {
        Verdict::Undetermined(why) => t.undetermined(|| why),
        other => t.check(false, || format!("{other:?}")),
    }
    Ok(t)
}

fn t_equal_extension(cfg: &SuiteConfig) -> Result<Tally> {
    let mut r = rng(cfg);
    let mut t = Tally::default();
    let cert = dz_failure_certificate(&SymbolicSpace::default(), CERTIFICATE_BOUND)?;
    t.check(cert.extension_t_equal && cert.extension_strictly_larger, || {
        format!("{cert:?}")
    });
    let pts = sample_points(6);
    for _ in 0..SAMPLES {
        let x = random_ext(&mut r, 4)?;
        let mut ok = true;
        for p in &pts {
            if x.contains(p)? {
                let c = cylinder_neighbourhood(&x, p)?;
                ok &= c.contains(p) && ext_le(&ExtElem::embed(&c), &x)?;
            }
        }
        t.check(ok, || format!("{x:?}"));
    }
    Ok(t)
}

fn zero_point(_cfg: &SuiteConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let v = u_clopen_check(&SymbolicSpace::with_zero(), 9)?;
    t.check(matches!(v, Verdict::Fail(_)), || format!("{v:?}"));
    t.check(matches!(in_parity_u(&Point::zero()), Err(Error::ZeroPoint)), || {
        "the zero point was assigned a side of U".into()
    });
    Ok(t)
}
