//! Single-instance operations behind the `dualize`, `roundtrip` and
//! `dwinger` commands.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::boolean::BoolAlg;
use crate::compactify::*;
use crate::dualities::{stone_map, stone_space, t_component};
use crate::error::{Error, Result};
use crate::finspace::FinTopSpace;
use crate::json::{algebra_doc, Instance};
use crate::symbolic::SymbolicSpace;
use crate::zalgebra::{functor_f_obj, functor_g_obj, s_prime};
use crate::zmaps::*;

/// Every object-level functor `dualize` can apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functor {
    S,
    T,
    P,
    At,
    F,
    G,
    FPrime,
    GPrime,
    FrakF,
    FrakG,
    Phi,
    Psi,
    PhiPrime,
    PsiPrime,
    Delta,
    DeltaPrime,
}

impl Functor {
    pub const ALL: [Functor; 16] = [
        Functor::S,
        Functor::T,
        Functor::P,
        Functor::At,
        Functor::F,
        Functor::G,
        Functor::FPrime,
        Functor::GPrime,
        Functor::FrakF,
        Functor::FrakG,
        Functor::Phi,
        Functor::Psi,
        Functor::PhiPrime,
        Functor::PsiPrime,
        Functor::Delta,
        Functor::DeltaPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Functor::S => "S",
            Functor::T => "T",
            Functor::P => "P",
            Functor::At => "At",
            Functor::F => "F",
            Functor::G => "G",
            Functor::FPrime => "Fprime",
            Functor::GPrime => "Gprime",
            Functor::FrakF => "FrakF",
            Functor::FrakG => "FrakG",
            Functor::Phi => "Phi",
            Functor::Psi => "Psi",
            Functor::PhiPrime => "PhiPrime",
            Functor::PsiPrime => "PsiPrime",
            Functor::Delta => "Delta",
            Functor::DeltaPrime => "DeltaPrime",
        }
    }

    /// The kind of document the functor accepts.
    pub fn input_kind(self) -> &'static str {
        match self {
            Functor::S | Functor::At => "algebra",
            Functor::T | Functor::P | Functor::F | Functor::FrakF | Functor::Delta => "space",
            Functor::G | Functor::FPrime | Functor::Psi => "zalgebra",
            Functor::GPrime | Functor::FrakG | Functor::PsiPrime => "zmap",
            Functor::Phi | Functor::PhiPrime | Functor::DeltaPrime => "compactification",
        }
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Functor {
    type Err = Error;

    /// Case-insensitive; `F′`-style primes and `𝔉`, `𝔊`, `Φ`, `Ψ`, `Δ` are accepted.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s
            .replace(['′', '\''], "prime")
            .replace('𝔉', "frakf")
            .replace('𝔊', "frakg")
            .replace('Φ', "phi")
            .replace('Ψ', "psi")
            .replace('Δ', "delta")
            .replace(['_', '-'], "")
            .to_lowercase();
        Functor::ALL
            .into_iter()
            .find(|f| f.name().to_lowercase() == norm)
            .ok_or_else(|| Error::Parse(format!("unknown functor {s:?}")))
    }
}

/// The invariants of a functor's target category, checked on an image.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Stamp {
    pub category: &'static str,
    pub holds: bool,
    pub invariants: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Dualized {
    pub functor: &'static str,
    pub image: Value,
    pub stamp: Stamp,
}

fn wrong(functor: Functor, input: &Instance) -> Error {
    Error::WrongCategory {
        functor: functor.name().into(),
        kind: input.kind().into(),
    }
}

fn stone_stamp(x: &FinTopSpace) -> Result<Stamp> {
    let p = x.predicates();
    Ok(Stamp {
        category: "finite Stone space",
        holds: p.t2 && p.zero_dimensional && p.compact,
        invariants: serde_json::to_value(p)?,
    })
}

fn algebra_invariants(a: &BoolAlg) -> Value {
    json!({
        "atoms": a.atom_count(),
        "ground": a.ground(),
        "elements": a.size(),
        "power": a.is_power(),
    })
}

fn compactification_stamp(c: &FinCompactification) -> Result<Stamp> {
    let f = c.flags();
    Ok(Stamp {
        category: "zero-dimensional compactification",
        holds: f.embedding && f.dense && f.target_zero_dim_t2,
        invariants: serde_json::to_value(f)?,
    })
}

/// Applies `functor` to `input`. `base` selects the Boolean base for `Δ`;
/// it defaults to `CO(X)`.
pub fn dualize(functor: Functor, input: &Instance, base: Option<&Arc<BoolAlg>>) -> Result<Dualized> {
    use Functor::*;
    use Instance as I;
    let (image, stamp) = match (functor, input) {
        (S, I::Algebra(a)) => {
            let x = stone_space(a)?.space;
            let stamp = stone_stamp(&x)?;
            (I::Space(x), stamp)
        }
        (At, I::Algebra(a)) => {
            let x = FinTopSpace::discrete(a.atom_count())?;
            let stamp = Stamp {
                category: "set",
                holds: x.predicates().discrete,
                invariants: json!({ "points": x.point_count() }),
            };
            (I::Space(x), stamp)
        }
        (T, I::Space(x)) => {
            let co = Arc::new(x.clopen_algebra());
            let stamp = Stamp {
                category: "finite Boolean algebra",
                holds: co.members() == {
                    let mut c = x.clopens();
                    c.sort_unstable();
                    c
                },
                invariants: algebra_invariants(&co),
            };
            (I::Algebra(co), stamp)
        }
        (P, I::Space(x)) => {
            let p = Arc::new(BoolAlg::power(x.point_count())?);
            let stamp = Stamp {
                category: "complete atomic Boolean algebra",
                holds: p.is_power(),
                invariants: algebra_invariants(&p),
            };
            (I::Algebra(p), stamp)
        }
        (F, I::Space(x)) => zalgebra_image(functor_f_obj(x)?, "dz-algebra", |c| c.dz)?,
        (G, I::ZAlgebra(z)) => {
            let x = functor_g_obj(z)?;
            let stamp = stone_stamp(&x)?;
            (I::Space(x), stamp)
        }
        (FPrime, I::ZAlgebra(z)) => zmap_image(fprime_obj(z)?, "mz-map", |c| c.mz)?,
        (GPrime, I::ZMap(a)) => zalgebra_image(gprime_obj(a)?, "dz-algebra", |c| c.dz)?,
        (FrakF, I::Space(x)) => zmap_image(frak_f_obj(x)?, "mz-map", |c| c.mz)?,
        (FrakG, I::ZMap(a)) => {
            let x = frak_g_obj(a)?;
            let stamp = stone_stamp(&x)?;
            (I::Space(x), stamp)
        }
        (Phi, I::Compactification(c)) => zalgebra_image(phi_obj(c)?, "z-algebra", |c| c.z)?,
        (Psi, I::ZAlgebra(z)) => {
            let c = psi_obj(z)?;
            let stamp = compactification_stamp(&c)?;
            (I::Compactification(c), stamp)
        }
        (PhiPrime, I::Compactification(c)) => zmap_image(phi_prime_obj(c)?, "z-map", |c| c.z)?,
        (PsiPrime, I::ZMap(a)) => {
            let c = psi_prime_obj(a)?;
            let stamp = compactification_stamp(&c)?;
            (I::Compactification(c), stamp)
        }
        (Delta, I::Space(x)) => {
            let a = match base {
                Some(a) => a.clone(),
                None => Arc::new(x.clopen_algebra()),
            };
            let c = dwinger_delta(&a, x)?;
            let stamp = compactification_stamp(&c)?;
            (I::Compactification(c), stamp)
        }
        (DeltaPrime, I::Compactification(c)) => {
            let a = Arc::new(dwinger_delta_prime(c)?);
            let stamp = Stamp {
                category: "Boolean base",
                holds: is_admissible(&a, c.source())?,
                invariants: algebra_invariants(&a),
            };
            (I::Algebra(a), stamp)
        }
        (f, other) => return Err(wrong(f, other)),
    };
    Ok(Dualized {
        functor: functor.name(),
        image: image.to_value()?,
        stamp,
    })
}

fn zalgebra_image(
    z: crate::zalgebra::ZAlgebra,
    category: &'static str,
    holds: impl Fn(&ZAlgebraClass) -> bool,
) -> Result<(Instance, Stamp)> {
    let class = classify_zalgebra(&z)?;
    let stamp = Stamp {
        category,
        holds: holds(&class),
        invariants: serde_json::to_value(class)?,
    };
    Ok((Instance::ZAlgebra(z), stamp))
}

fn zmap_image(a: ZMap, category: &'static str, holds: impl Fn(&ZMapClass) -> bool) -> Result<(Instance, Stamp)> {
    let class = classify_zmap(&a)?;
    let stamp = Stamp {
        category,
        holds: holds(&class),
        invariants: serde_json::to_value(class)?,
    };
    Ok((Instance::ZMap(a), stamp))
}

/// An object sent through a duality and back, with the verdict on the unit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RoundTrip {
    pub kind: &'static str,
    pub via: &'static str,
    pub unit: &'static str,
    pub image: Value,
    pub iso: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// A unit that fails to be an isomorphism is a verdict, not an error.
fn unit_verdict<T>(r: Result<T>, iso: impl FnOnce(&T) -> bool) -> Result<(bool, Option<String>)> {
    match r {
        Ok(t) => Ok((iso(&t), None)),
        Err(Error::AxiomViolation(why)) => Ok((false, Some(why))),
        Err(e) => Err(e),
    }
}

pub fn roundtrip(input: &Instance) -> Result<RoundTrip> {
    let (via, unit, image, (iso, detail)) = match input {
        Instance::Algebra(a) => {
            let st = stone_space(a)?;
            let co = Instance::Algebra(Arc::new(st.space.clopen_algebra()));
            ("T∘S", "s_A", co, unit_verdict(stone_map(&st), |s| s.is_iso())?)
        }
        Instance::Space(x) => {
            let r = t_component(x);
            let back = Instance::Space(stone_space(&Arc::new(x.clopen_algebra()))?.space);
            ("S∘T", "t_X", back, unit_verdict(r, |_| true)?)
        }
        Instance::ZAlgebra(z) => {
            let back = Instance::ZAlgebra(functor_f_obj(&functor_g_obj(z)?)?);
            ("F∘G", "s′", back, unit_verdict(s_prime(z), |m| m.is_iso())?)
        }
        Instance::ZMap(a) => {
            let back = Instance::ZMap(frak_f_obj(&frak_g_obj(a)?)?);
            ("𝔉∘𝔊", "ε̃", back, unit_verdict(epsilon_tilde(a), |m| m.is_iso())?)
        }
        Instance::Compactification(c) => {
            let back = Instance::Compactification(psi_obj(&phi_obj(c)?)?);
            ("Ψ∘Φ", "ϰ", back, unit_verdict(kappa(c), |m| m.is_iso())?)
        }
        other => {
            return Err(Error::WrongCategory {
                functor: "roundtrip".into(),
                kind: other.kind().into(),
            })
        }
    };
    Ok(RoundTrip {
        kind: input.kind(),
        via,
        unit,
        image: image.to_value()?,
        iso,
        detail,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DwingerBase {
    pub algebra: Value,
    pub compactification: Value,
    /// `Δ′(Δ(A)) = A`.
    pub retrieves: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DwingerReport {
    pub points: usize,
    /// Every admissible algebra of `X` with its compactification.
    pub bases: Vec<DwingerBase>,
    /// `Δ(A) ≤ Δ(A′)` is witnessed for every comparable pair `A ⊆ A′`.
    pub order_witnessed: bool,
    /// Every zero-dimensional compactification found is equivalent to some `Δ(A)`.
    pub surjective_on_relabellings: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symbolic: Option<SymbolicChainCheck>,
    pub passed: bool,
}

/// The Dwinger correspondence on one finite space, optionally followed by
/// the symbolic chain over `X₀`.
pub fn dwinger(x: &FinTopSpace, symbolic_seed: Option<u64>) -> Result<DwingerReport> {
    let adm: Vec<Arc<BoolAlg>> = admissible_algebras(x)?.into_iter().map(Arc::new).collect();
    let mut bases = Vec::new();
    let mut images = Vec::new();
    for a in &adm {
        let c = dwinger_delta(a, x)?;
        let retrieves = dwinger_delta_prime(&c)? == **a;
        bases.push(DwingerBase {
            algebra: serde_json::to_value(algebra_doc(a))?,
            compactification: Instance::Compactification(c.clone()).to_value()?,
            retrieves,
        });
        images.push(c);
    }
    let mut order_witnessed = true;
    for a in &adm {
        for a2 in &adm {
            if a.is_subalgebra_of(a2) {
                order_witnessed &= dwinger_order(a, a2, x).is_ok();
            }
        }
    }
    // Compactifications by relabelling the identity: each must be some Δ(A).
    let mut surjective = true;
    for p in crate::finspace::enumerate_permutations(x.point_count()) {
        let c = FinCompactification::new(x.clone(), x.clone(), p)?;
        if c.flags().target_zero_dim_t2 && c.flags().embedding {
            let mut hit = false;
            for d in &images {
                hit |= compactification_equiv(&c, d)?.is_some();
            }
            surjective &= hit;
        }
    }
    let symbolic = symbolic_seed
        .map(|seed| symbolic_chain_check(&SymbolicSpace::default(), seed, 100))
        .transpose()?;
    let passed = bases.iter().all(|b| b.retrieves)
        && order_witnessed
        && surjective
        && symbolic.as_ref().is_none_or(|s| s.passed());
    Ok(DwingerReport {
        points: x.point_count(),
        bases,
        order_witnessed,
        surjective_on_relabellings: surjective,
        symbolic,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn power(n: usize) -> Instance {
        Instance::Algebra(Arc::new(BoolAlg::power(n).unwrap()))
    }

    #[test]
    fn functor_names_parse() {
        for f in Functor::ALL {
            assert_eq!(f.name().parse::<Functor>().unwrap(), f);
        }
        assert_eq!("𝔉".parse::<Functor>().unwrap(), Functor::FrakF);
        assert_eq!("G′".parse::<Functor>().unwrap(), Functor::GPrime);
        assert!("Q".parse::<Functor>().is_err());
    }

    #[test]
    fn stone_of_two_atoms_is_two_discrete_points() {
        let d = dualize(Functor::S, &power(2), None).unwrap();
        let want = Instance::Space(FinTopSpace::discrete(2).unwrap()).to_value().unwrap();
        assert_eq!(d.image, want);
        assert!(d.stamp.holds);
    }

    #[test]
    fn frak_f_of_discrete_space_is_identity_zmap() {
        let x = Instance::Space(FinTopSpace::discrete(2).unwrap());
        let d = dualize(Functor::FrakF, &x, None).unwrap();
        let id = Instance::ZMap(ZMap::identity(&Arc::new(BoolAlg::power(2).unwrap())));
        assert_eq!(d.image, id.to_value().unwrap());
        assert!(d.stamp.holds);
    }

    #[test]
    fn psi_rejects_non_z_algebra() {
        let a = Arc::new(BoolAlg::power(2).unwrap());
        let z = Instance::ZAlgebra(crate::zalgebra::ZAlgebra::from_indices(&a, &[0]).unwrap());
        assert!(matches!(dualize(Functor::Psi, &z, None), Err(Error::NotZAlgebra(_))));
    }

    #[test]
    fn wrong_input_kind_is_rejected() {
        assert!(matches!(
            dualize(Functor::G, &power(1), None),
            Err(Error::WrongCategory { .. })
        ));
    }

    #[test]
    fn every_functor_applies_to_a_small_instance() {
        let x = FinTopSpace::discrete(2).unwrap();
        let p = Arc::new(BoolAlg::power(2).unwrap());
        let inputs = [
            power(2),
            Instance::Space(x.clone()),
            Instance::ZAlgebra(crate::zalgebra::ZAlgebra::full(&p).unwrap()),
            Instance::ZMap(ZMap::identity(&p)),
            Instance::Compactification(FinCompactification::identity(&x).unwrap()),
        ];
        for f in Functor::ALL {
            let input = inputs.iter().find(|i| i.kind() == f.input_kind()).unwrap();
            let d = dualize(f, input, None).unwrap();
            assert!(d.stamp.holds, "{f}");
        }
    }

    #[test]
    fn round_trips_are_isomorphisms() {
        let p = Arc::new(BoolAlg::power(2).unwrap());
        let x = FinTopSpace::discrete(3).unwrap();
        for i in [
            power(3),
            Instance::Space(x.clone()),
            Instance::ZAlgebra(crate::zalgebra::ZAlgebra::full(&p).unwrap()),
            Instance::ZMap(ZMap::identity(&p)),
            Instance::Compactification(FinCompactification::identity(&x).unwrap()),
        ] {
            let r = roundtrip(&i).unwrap();
            assert!(r.iso, "{}", r.kind);
        }
    }

    #[test]
    fn dwinger_on_discrete_spaces() {
        for n in 0..=3 {
            let r = dwinger(&FinTopSpace::discrete(n).unwrap(), None).unwrap();
            assert_eq!(r.bases.len(), 1);
            assert!(r.passed);
        }
    }
}
