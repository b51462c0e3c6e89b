//! Randomised invariants over instances drawn outside the exhaustive bounds
//! the law suite enumerates.

use std::sync::Arc;

use proptest::prelude::*;

use sdl_core::boolean::{homs_into_two, BoolAlg, BoolHom, Elem, Mask};
use sdl_core::compactify::{compactification_equiv, dwinger_delta, dwinger_delta_prime, FinCompactification};
use sdl_core::dualities::{stone_map, stone_on_hom, stone_space};
use sdl_core::finspace::{co_on_map, FinMap, FinTopSpace, RcAlgebra};
use sdl_core::json::Instance;
use sdl_core::symbolic::{sample_points, CylElem};
use sdl_core::zalgebra::ZAlgebra;

/// A subalgebra of `P(g)` generated by a few random subsets.
fn algebra(max_ground: usize) -> impl Strategy<Value = Arc<BoolAlg>> {
    (0..=max_ground).prop_flat_map(|g| {
        let full: Mask = (1 << g) - 1;
        prop::collection::vec(0..=full, 0..3)
            .prop_map(move |gens| Arc::new(BoolAlg::boolean_closure(g, &gens).unwrap()))
    })
}

/// A homomorphism `A → B` from an assignment of each atom of `B` to an atom of `A`.
fn hom_between(a: Arc<BoolAlg>, b: Arc<BoolAlg>) -> impl Strategy<Value = BoolHom> {
    let (ka, kb) = (a.atom_count(), b.atom_count());
    prop::collection::vec(0..ka.max(1), kb).prop_map(move |assign| {
        let images: Vec<Elem> = (0..ka)
            .map(|i| {
                assign
                    .iter()
                    .enumerate()
                    .filter(|(_, &t)| t == i)
                    .fold(0, |m, (j, _)| m | 1 << j)
            })
            .collect();
        BoolHom::from_atom_images(a.clone(), b.clone(), &images).unwrap()
    })
}

/// Homs need a nontrivial domain unless the codomain is trivial too.
fn hom() -> impl Strategy<Value = BoolHom> {
    (algebra(4), algebra(4))
        .prop_filter("no homomorphism from a trivial algebra", |(a, b)| {
            a.atom_count() > 0 || b.atom_count() == 0
        })
        .prop_flat_map(|(a, b)| hom_between(a, b))
}

fn space(max: usize) -> impl Strategy<Value = FinTopSpace> {
    (0..=max).prop_flat_map(|n| {
        let full: Mask = (1 << n) - 1;
        prop::collection::vec(0..=full, 0..5).prop_map(move |b| FinTopSpace::generate(n, &b).unwrap())
    })
}

fn zalgebra() -> impl Strategy<Value = ZAlgebra> {
    algebra(4).prop_flat_map(|a| {
        let n = homs_into_two(&a).unwrap().len();
        prop::collection::vec(any::<bool>(), n).prop_map(move |keep| {
            let idx: Vec<usize> = keep.iter().enumerate().filter(|(_, &k)| k).map(|(i, _)| i).collect();
            ZAlgebra::from_indices(&a, &idx).unwrap()
        })
    })
}

fn cyl() -> impl Strategy<Value = CylElem> {
    (0usize..=4).prop_flat_map(|w| {
        prop::collection::btree_set(0u64..1 << w, 0..=(1 << w)).prop_map(move |m| CylElem::new(w, m).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn homs_preserve_operations(h in hom()) {
        let (a, b) = (h.domain().clone(), h.codomain().clone());
        for x in a.elements() {
            prop_assert_eq!(h.apply(a.complement(x)), b.complement(h.apply(x)));
            for y in a.elements() {
                prop_assert_eq!(h.apply(a.meet(x, y)), b.meet(h.apply(x), h.apply(y)));
                prop_assert_eq!(h.apply(a.join(x, y)), b.join(h.apply(x), h.apply(y)));
            }
        }
    }

    #[test]
    fn stone_map_is_iso(a in algebra(5)) {
        let st = stone_space(&a).unwrap();
        prop_assert!(stone_map(&st).unwrap().is_iso());
        prop_assert_eq!(st.points.len(), a.atom_count());
    }

    #[test]
    fn stone_reverses_composition(h in hom(), seed in any::<u64>()) {
        let c = h.codomain().clone();
        let d = Arc::new(BoolAlg::power((seed % 3) as usize).unwrap());
        prop_assume!(c.atom_count() > 0 || d.atom_count() == 0);
        let homs = sdl_core::boolean::enumerate_homs(&c, &d).unwrap();
        prop_assume!(!homs.is_empty());
        let k = &homs[seed as usize % homs.len()];
        let (sa, sb, sc) = (stone_space(h.domain()).unwrap(), stone_space(&c).unwrap(), stone_space(&d).unwrap());
        let whole = stone_on_hom(&h.then(k).unwrap(), &sa, &sc).unwrap();
        let parts = stone_on_hom(k, &sb, &sc).unwrap().then(&stone_on_hom(&h, &sa, &sb).unwrap()).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn closure_and_interior_are_dual(x in space(6)) {
        let full = x.full();
        for s in 0..=full {
            prop_assert_eq!(x.closure(s), full & !x.interior(full & !s));
            prop_assert!(x.is_open(x.interior(s)));
            prop_assert_eq!(x.interior(x.interior(s)), x.interior(s));
        }
    }

    #[test]
    fn finite_hausdorff_is_discrete(x in space(6)) {
        let p = x.predicates();
        prop_assert_eq!(p.t2, p.discrete);
    }

    #[test]
    fn regular_closed_sets_form_a_boolean_algebra(x in space(6)) {
        let rc = RcAlgebra::new(&x).unwrap();
        prop_assert!(rc.verify_axioms().is_ok());
        prop_assert_eq!(rc.len(), 1 << rc.atoms().len());
    }

    #[test]
    fn co_is_contravariant_on_identity(x in space(5)) {
        let id = co_on_map(&FinMap::identity(x.point_count()), &x, &x).unwrap();
        prop_assert!(id.is_iso());
        prop_assert!(id.table().iter().enumerate().all(|(i, &v)| i as Elem == v));
    }

    #[test]
    fn z_algebra_iff_trace_is_injective(z in zalgebra()) {
        let mono = z.trace_map().unwrap().is_mono();
        prop_assert_eq!(z.is_z_algebra(), mono);
        prop_assert_eq!(z.is_z_algebra(), z.is_dense_in_stone().unwrap());
    }

    #[test]
    fn finite_z_algebras_are_dz(z in zalgebra()) {
        prop_assume!(z.is_z_algebra());
        prop_assert!(z.is_dz().unwrap());
        prop_assert!(z.satisfies_dw().unwrap());
    }

    #[test]
    fn documents_round_trip(a in algebra(5), x in space(5), z in zalgebra(), c in cyl()) {
        for i in [Instance::Algebra(a), Instance::Space(x), Instance::ZAlgebra(z), Instance::Cyl(c)] {
            let text = i.to_json().unwrap();
            prop_assert_eq!(Instance::parse(&text).unwrap(), i);
        }
    }

    #[test]
    fn cylinder_operations_are_pointwise(a in cyl(), b in cyl()) {
        let (m, j, n) = (a.meet(&b).unwrap(), a.join(&b).unwrap(), a.complement());
        for p in sample_points(6) {
            let (x, y) = (a.contains(&p), b.contains(&p));
            prop_assert_eq!(m.contains(&p), x && y);
            prop_assert_eq!(j.contains(&p), x || y);
            prop_assert_eq!(n.contains(&p), !x);
        }
    }

    #[test]
    fn dwinger_inverts_on_relabellings(n in 0usize..=5, seed in any::<u64>()) {
        let x = FinTopSpace::discrete(n).unwrap();
        let perms = sdl_core::finspace::enumerate_permutations(n);
        let p = perms[seed as usize % perms.len()].clone();
        let c = FinCompactification::new(x.clone(), x.clone(), p).unwrap();
        let a = Arc::new(dwinger_delta_prime(&c).unwrap());
        prop_assert!(a.is_power());
        let back = dwinger_delta(&a, &x).unwrap();
        prop_assert!(compactification_equiv(&back, &c).unwrap().is_some());
    }
}
