use multilog::arrange::{random_arrangement, Arrangement};
use multilog::groebner::{module_equal_in, GroebnerBasis};
use multilog::logmod::{
    choose_complete_intersection, choose_complete_intersection_with, contract_pairing, derlog_of_components,
    derlog_with, is_reduced_complete_intersection, is_regular_sequence, jacobian_criterion, wedge_module,
    DerlogOptions, DerlogRoute, SubspaceData, DEFAULT_MAX_SUBSETS,
};
use multilog::poly::wedge::subsets;
use multilog::poly::{binomial, parse_all, FreeModuleElement, PolyRing};
use multilog::resolve::free_resolution_in;

fn stacked() -> DerlogOptions {
    DerlogOptions {
        route: DerlogRoute::Stacked,
        ..DerlogOptions::default()
    }
}

fn arrangement(names: &[&str], comps: &[&[&str]]) -> Arrangement {
    let r = PolyRing::new(names).unwrap();
    Arrangement::new(&r, comps.iter().map(|c| parse_all(c, &r).unwrap()).collect()).unwrap()
}

fn multi_component_corpus() -> Vec<Arrangement> {
    let v4 = ["x", "y", "z", "t"];
    vec![
        arrangement(&v4, &[&["x", "y"], &["z", "t"], &["x - z", "y - t"]]),
        arrangement(
            &v4,
            &[
                &["x", "z"],
                &["x", "t"],
                &["y", "z"],
                &["y", "t"],
                &["x - y + z - t", "z"],
                &["x - y + z - t", "t"],
            ],
        ),
        arrangement(&["x", "y", "z"], &[&["x", "y"], &["x", "z"], &["y", "z"], &["x - z", "y + z"]]),
        arrangement(
            &v4,
            &[
                &["x", "y - z"],
                &["y", "x + z"],
                &["x", "y - t"],
                &["y", "x + t"],
                &["x - y", "z"],
                &["x", "z - t"],
                &["x + t", "z"],
            ],
        ),
        arrangement(&["x", "y", "z"], &[&["x"], &["y"], &["z"], &["x + y + z"]]),
        random_arrangement(4, 2, 3, 5).unwrap(),
        random_arrangement(4, 2, 5, 11).unwrap(),
    ]
}

/// Derlog of the union equals the intersection of component modules, and its
/// resolution satisfies the rank identity.
#[test]
fn union_is_intersection_of_components() {
    for a in multi_component_corpus() {
        let x = a.subspace_data().unwrap();
        let whole = derlog_with(&x, &stacked()).unwrap();
        let parts = derlog_of_components(a.ring(), a.k(), &a.component_data().unwrap(), DEFAULT_MAX_SUBSETS).unwrap();
        assert!(module_equal_in(&whole.module, &whole.generators, &parts.generators).unwrap());
        let res = free_resolution_in(&whole.module, &whole.generators).unwrap();
        assert_eq!(res.betti().euler_characteristic(), binomial(a.n(), a.k()) as i64);
        assert!(res.length() >= a.k() as i64 - 1);
    }
}

/// Every generator pairs into `I_X`, and `I_X · Λ^k Der ⊆ Derlog`.
#[test]
fn derlog_membership() {
    for a in multi_component_corpus().into_iter().take(4) {
        let x = a.subspace_data().unwrap();
        let d = derlog_with(&x, &DerlogOptions::default()).unwrap();
        let h = x.ideal.gens();
        for g in &d.generators {
            for e in subsets(h.len(), a.k()) {
                let f: Vec<_> = e.iter().map(|&i| h[i].clone()).collect();
                assert!(x.ideal.contains(&contract_pairing(g, &f).unwrap()));
            }
        }
        let gb = GroebnerBasis::compute(&d.module, &d.generators).unwrap();
        for p in h {
            for slot in 0..d.module.rank() {
                let v = FreeModuleElement::basis(&d.module, slot).scale(p);
                assert!(gb.contains(&v).unwrap());
            }
        }
    }
}

/// Two different certified complete intersections give the same Jacobian data.
#[test]
fn jacobian_data_is_independent_of_the_complete_intersection() {
    let r = PolyRing::new(&["x", "y", "z", "t"]).unwrap();
    let six = SubspaceData::new(&r, parse_all(&["x*y*(x - y + z - t)", "z*t"], &r).unwrap(), 2, None).unwrap();
    let mut cases = vec![six];
    for a in multi_component_corpus().into_iter().take(3) {
        cases.push(a.subspace_data().unwrap());
    }
    for x in cases {
        let c1 = choose_complete_intersection(&x.ideal, x.codim, 0).unwrap().equations;
        let mut other = None;
        for seed in 1..20 {
            let c = choose_complete_intersection_with(&x.ideal, x.codim, seed, 32).unwrap().equations;
            if c != c1 {
                other = Some(c);
                break;
            }
        }
        // when the generators themselves are returned, perturb the top one
        let c2 = other.unwrap_or_else(|| {
            let r = x.ring.clone();
            let (lo, hi) = (&c1[0], &c1[c1.len() - 1]);
            let d = hi.degree().unwrap() - lo.degree().unwrap();
            r.monomials_of_degree(d)
                .into_iter()
                .map(|m| {
                    let mut c = c1.clone();
                    let last = c.len() - 1;
                    c[last] = hi + &lo.mul_monomial(&m, &multilog::poly::Q::one());
                    c
                })
                .find(|c| is_regular_sequence(c).unwrap() && is_reduced_complete_intersection(c).unwrap())
                .expect("a second complete intersection")
        });
        assert_ne!(c1, c2);
        for c in [&c1, &c2] {
            assert!(is_regular_sequence(c).unwrap() && is_reduced_complete_intersection(c).unwrap());
        }
        let (j1, j2) = (jacobian_criterion(&x, &c1).unwrap(), jacobian_criterion(&x, &c2).unwrap());
        assert_eq!(
            (j1.free, j1.unit, j1.dim, j1.depth, &j1.hilbert_numerator),
            (j2.free, j2.unit, j2.dim, j2.depth, &j2.hilbert_numerator)
        );
    }
}

#[test]
fn hypersurface_derlog_contains_euler_field() {
    let r = PolyRing::new(&["x", "y", "z"]).unwrap();
    let x = SubspaceData::new(&r, parse_all(&["x*y*z*(x + y + z)"], &r).unwrap(), 1, None).unwrap();
    let d = derlog_with(&x, &stacked()).unwrap();
    let m = wedge_module(&r, 1);
    let euler = FreeModuleElement::from_components(&m, parse_all(&["x", "y", "z"], &r).unwrap()).unwrap();
    assert!(GroebnerBasis::compute(&m, &d.generators).unwrap().contains(&euler).unwrap());
}
