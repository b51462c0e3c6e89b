//! JSON documents for every serialisable instance.
//!
//! Subsets of a ground set or of a point set are written as sorted index
//! arrays. Homomorphism tables are keyed by the decimal element code of the
//! domain, where element codes are atom masks of the algebra concerned.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::boolean::{homs_into_two, BoolAlg, BoolHom, Elem, Mask};
use crate::compactify::FinCompactification;
use crate::error::{Error, Result};
use crate::finspace::{FinMap, FinTopSpace};
use crate::symbolic::CylElem;
use crate::zalgebra::ZAlgebra;
use crate::zmaps::ZMap;

/// A homomorphism table: domain element code to codomain element code.
pub type Table = BTreeMap<Elem, Elem>;

/// The wire form of every document kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Doc {
    Power {
        atoms: usize,
    },
    /// `members` generates the subalgebra; it is closed on reading.
    Subalgebra {
        ground: usize,
        members: Vec<Vec<usize>>,
    },
    Hom {
        domain: Box<Doc>,
        codomain: Box<Doc>,
        #[serde(with = "table_keys")]
        table: Table,
    },
    /// `basis` generates the topology.
    Space {
        points: usize,
        basis: Vec<Vec<usize>>,
    },
    /// `points` index into `Bool(A, 2)` in enumeration order.
    Zalgebra {
        algebra: Box<Doc>,
        points: Vec<usize>,
    },
    Zmap {
        #[serde(rename = "A")]
        a: Box<Doc>,
        #[serde(rename = "B")]
        b: Box<Doc>,
        #[serde(with = "table_keys")]
        alpha: Table,
    },
    Cyl {
        width: usize,
        minterms: Vec<String>,
    },
    Compactification {
        source: Box<Doc>,
        target: Box<Doc>,
        embedding: Vec<usize>,
    },
}

/// A decoded document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Algebra(Arc<BoolAlg>),
    Hom(BoolHom),
    Space(FinTopSpace),
    ZAlgebra(ZAlgebra),
    ZMap(ZMap),
    Cyl(CylElem),
    Compactification(FinCompactification),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Algebra(_) => "algebra",
            Instance::Hom(_) => "hom",
            Instance::Space(_) => "space",
            Instance::ZAlgebra(_) => "zalgebra",
            Instance::ZMap(_) => "zmap",
            Instance::Cyl(_) => "cyl",
            Instance::Compactification(_) => "compactification",
        }
    }

    /// Parses a document. A hom may omit `"kind"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut v: Value = serde_json::from_str(text)?;
        if let Value::Object(m) = &mut v {
            if !m.contains_key("kind") && m.contains_key("table") {
                m.insert("kind".into(), Value::from("hom"));
            }
        }
        let doc: Doc = serde_json::from_value(v)?;
        Self::from_doc(&doc)
    }

    pub fn from_doc(doc: &Doc) -> Result<Self> {
        Ok(match doc {
            Doc::Power { .. } | Doc::Subalgebra { .. } => Instance::Algebra(algebra_from_doc(doc)?),
            Doc::Hom {
                domain,
                codomain,
                table,
            } => Instance::Hom(hom_from_table(
                algebra_from_doc(domain)?,
                algebra_from_doc(codomain)?,
                table,
            )?),
            Doc::Space { .. } => Instance::Space(space_from_doc(doc)?),
            Doc::Zalgebra { algebra, points } => {
                Instance::ZAlgebra(ZAlgebra::from_indices(&algebra_from_doc(algebra)?, points)?)
            }
            Doc::Zmap { a, b, alpha } => {
                let alpha = hom_from_table(algebra_from_doc(a)?, algebra_from_doc(b)?, alpha)?;
                Instance::ZMap(ZMap::new(alpha)?)
            }
            Doc::Cyl { width, minterms } => Instance::Cyl(CylElem::from_strings(*width, minterms)?),
            Doc::Compactification {
                source,
                target,
                embedding,
            } => {
                let (x, y) = (space_from_doc(source)?, space_from_doc(target)?);
                let e = FinMap::new(embedding.clone(), y.point_count())?;
                Instance::Compactification(FinCompactification::new(x, y, e)?)
            }
        })
    }

    pub fn to_doc(&self) -> Result<Doc> {
        Ok(match self {
            Instance::Algebra(a) => algebra_doc(a),
            Instance::Hom(h) => Doc::Hom {
                domain: Box::new(algebra_doc(h.domain())),
                codomain: Box::new(algebra_doc(h.codomain())),
                table: table_of(h),
            },
            Instance::Space(x) => space_doc(x),
            Instance::ZAlgebra(z) => {
                let all = homs_into_two(z.algebra())?;
                let points = z
                    .points()
                    .iter()
                    .map(|p| {
                        all.iter()
                            .position(|q| q == p)
                            .expect("points are homomorphisms into 2")
                    })
                    .collect();
                Doc::Zalgebra {
                    algebra: Box::new(algebra_doc(z.algebra())),
                    points,
                }
            }
            Instance::ZMap(m) => Doc::Zmap {
                a: Box::new(algebra_doc(m.domain())),
                b: Box::new(algebra_doc(m.codomain())),
                alpha: table_of(m.alpha()),
            },
            Instance::Cyl(c) => Doc::Cyl {
                width: c.width(),
                minterms: c.to_strings(),
            },
            Instance::Compactification(c) => Doc::Compactification {
                source: Box::new(space_doc(c.source())),
                target: Box::new(space_doc(c.target())),
                embedding: c.embedding().images().to_vec(),
            },
        })
    }

    pub fn to_value(&self) -> Result<Value> {
        Ok(serde_json::to_value(self.to_doc()?)?)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_doc()?)? + "\n")
    }
}

/// Decimal string keys in numeric order; tagged enums cannot coerce map keys.
mod table_keys {
    use super::{Elem, Table};
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(t: &Table, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(t.iter().map(|(k, v)| (k.to_string(), v)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Table, D::Error> {
        BTreeMap::<String, Elem>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| {
                k.parse::<Elem>()
                    .map(|k| (k, v))
                    .map_err(|_| D::Error::custom(format!("table key {k:?} is not an element code")))
            })
            .collect()
    }
}

fn indices(mask: Mask) -> Vec<usize> {
    (0..Mask::BITS as usize).filter(|&i| mask >> i & 1 == 1).collect()
}

fn mask(items: &[usize], bound: usize, what: &str) -> Result<Mask> {
    items.iter().try_fold(0, |acc, &i| {
        if i < bound {
            Ok(acc | 1 << i)
        } else {
            Err(Error::Parse(format!("{what} index {i} is not below {bound}")))
        }
    })
}

pub fn algebra_doc(a: &BoolAlg) -> Doc {
    if a.is_power() {
        Doc::Power { atoms: a.ground() }
    } else {
        Doc::Subalgebra {
            ground: a.ground(),
            members: a.members().into_iter().map(indices).collect(),
        }
    }
}

pub fn algebra_from_doc(doc: &Doc) -> Result<Arc<BoolAlg>> {
    match doc {
        Doc::Power { atoms } => Ok(Arc::new(BoolAlg::power(*atoms)?)),
        Doc::Subalgebra { ground, members } => {
            let gens = members
                .iter()
                .map(|m| mask(m, *ground, "ground"))
                .collect::<Result<Vec<_>>>()?;
            Ok(Arc::new(BoolAlg::boolean_closure(*ground, &gens)?))
        }
        other => Err(Error::Parse(format!("expected an algebra, found {}", doc_kind(other)))),
    }
}

/// The minimal basis: the least open neighbourhood of each point.
pub fn space_doc(x: &FinTopSpace) -> Doc {
    let mut basis: Vec<Mask> = (0..x.point_count()).map(|p| x.neighbourhood(p)).collect();
    basis.sort_unstable();
    basis.dedup();
    Doc::Space {
        points: x.point_count(),
        basis: basis.into_iter().map(indices).collect(),
    }
}

pub fn space_from_doc(doc: &Doc) -> Result<FinTopSpace> {
    match doc {
        Doc::Space { points, basis } => {
            let gens = basis
                .iter()
                .map(|b| mask(b, *points, "point"))
                .collect::<Result<Vec<_>>>()?;
            FinTopSpace::generate(*points, &gens)
        }
        other => Err(Error::Parse(format!("expected a space, found {}", doc_kind(other)))),
    }
}

fn table_of(h: &BoolHom) -> Table {
    h.table().iter().enumerate().map(|(a, &b)| (a as Elem, b)).collect()
}

/// Every domain element must appear exactly once.
pub fn hom_from_table(domain: Arc<BoolAlg>, codomain: Arc<BoolAlg>, table: &Table) -> Result<BoolHom> {
    let size = domain.size();
    if table.len() != size || table.keys().enumerate().any(|(i, &k)| k as usize != i) {
        return Err(Error::Parse(format!("table must have exactly the keys 0..{size}")));
    }
    BoolHom::new(domain, codomain, table.values().copied().collect())
}

fn doc_kind(doc: &Doc) -> &'static str {
    match doc {
        Doc::Power { .. } => "power",
        Doc::Subalgebra { .. } => "subalgebra",
        Doc::Hom { .. } => "hom",
        Doc::Space { .. } => "space",
        Doc::Zalgebra { .. } => "zalgebra",
        Doc::Zmap { .. } => "zmap",
        Doc::Cyl { .. } => "cyl",
        Doc::Compactification { .. } => "compactification",
    }
}

/// Maps are bare point arrays; the codomain size comes from context.
pub fn map_from_json(text: &str, codomain: usize) -> Result<FinMap> {
    let images: Vec<usize> = serde_json::from_str(text)?;
    FinMap::new(images, codomain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(i: &Instance) {
        let text = i.to_json().unwrap();
        assert_eq!(&Instance::parse(&text).unwrap(), i, "{text}");
    }

    #[test]
    fn documents_round_trip() {
        let p2 = Arc::new(BoolAlg::power(2).unwrap());
        let sub = Arc::new(BoolAlg::boolean_closure(3, &[0b001]).unwrap());
        round_trip(&Instance::Algebra(p2.clone()));
        round_trip(&Instance::Algebra(sub.clone()));
        round_trip(&Instance::Hom(BoolHom::identity(&sub)));
        round_trip(&Instance::Space(FinTopSpace::sierpinski()));
        round_trip(&Instance::ZAlgebra(ZAlgebra::from_indices(&p2, &[1]).unwrap()));
        round_trip(&Instance::ZMap(ZMap::identity(&p2)));
        round_trip(&Instance::Cyl(CylElem::from_strings(2, &["01", "10"]).unwrap()));
        let x = FinTopSpace::discrete(2).unwrap();
        round_trip(&Instance::Compactification(FinCompactification::identity(&x).unwrap()));
    }

    #[test]
    fn literal_documents_parse() {
        let a = Instance::parse(r#"{"kind":"power","atoms":2}"#).unwrap();
        assert_eq!(a, Instance::Algebra(Arc::new(BoolAlg::power(2).unwrap())));
        let h = Instance::parse(
            r#"{"domain":{"kind":"power","atoms":1},"codomain":{"kind":"power","atoms":1},
                "table":{"0":0,"1":1}}"#,
        )
        .unwrap();
        assert_eq!(h.kind(), "hom");
        let s = Instance::parse(r#"{"kind":"space","points":2,"basis":[[1]]}"#).unwrap();
        assert_eq!(s, Instance::Space(FinTopSpace::sierpinski()));
        let m = Instance::parse(r#"{"kind":"subalgebra","ground":3,"members":[[0],[1,2]]}"#).unwrap();
        let Instance::Algebra(m) = m else { panic!() };
        assert_eq!(m.atom_count(), 2);
    }

    #[test]
    fn malformed_documents_are_parse_errors() {
        for bad in [
            r#"{"kind":"power"}"#,
            r#"{"kind":"banana","atoms":1}"#,
            r#"{"kind":"space","points":2,"basis":[[2]]}"#,
            r#"{"domain":{"kind":"power","atoms":1},"codomain":{"kind":"power","atoms":1},"table":{"0":0}}"#,
            "not json",
        ] {
            assert!(matches!(Instance::parse(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn maps_are_point_arrays() {
        assert_eq!(map_from_json("[1,0]", 2).unwrap().images(), &[1, 0]);
        assert!(map_from_json("[2]", 2).is_err());
    }
}
