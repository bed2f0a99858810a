use multilog::arrange::{arrangement_ideal, Arrangement};
use multilog::groebner::Ideal;
use multilog::poly::{binomial, parse_all, FreeModule, FreeModuleElement, PolyRing, Ring};
use multilog::resolve::{
    depth_and_cm, depth_by_linear_forms, free_resolution_in, ideal_resolution, koszul_betti,
    quotient_projective_dimension,
};

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(r, parse_all(gens, r).unwrap()).unwrap()
}

fn corpus() -> Vec<Ideal> {
    let r4 = PolyRing::new(&["x", "y", "z", "t"]).unwrap();
    let r3 = PolyRing::new(&["x", "y", "z"]).unwrap();
    let r2 = PolyRing::new(&["x", "y"]).unwrap();
    let three = Arrangement::new(
        &r4,
        vec![
            parse_all(&["x", "y"], &r4).unwrap(),
            parse_all(&["z", "t"], &r4).unwrap(),
            parse_all(&["x - z", "y - t"], &r4).unwrap(),
        ],
    )
    .unwrap();
    vec![
        ideal(&r4, &["x*y*(x - y + z - t)", "z*t"]),
        ideal(&r4, &["x*z - y^2", "y*t - z^2", "x*t - y*z"]),
        ideal(&r4, &["x*y", "x*z", "y*t", "z*t"]),
        ideal(&r4, &["x^2", "x*y", "y^2"]),
        ideal(&r3, &["x", "y"]),
        ideal(&r3, &["x*y*z"]),
        ideal(&r3, &["x^2 - y*z", "x*y - z^2", "y^3"]),
        ideal(&r3, &["x*y", "x*z", "y*z"]),
        ideal(&r2, &["x^2", "x*y"]),
        ideal(&r2, &["x^3 - y^2*x"]),
        arrangement_ideal(&three).unwrap(),
    ]
}

/// `depth + pdim = n` with depth from regular sequences of linear forms,
/// independent of the resolution.
#[test]
fn auslander_buchsbaum_on_corpus() {
    for i in corpus() {
        let n = i.ring().nvars() as i64;
        let pdim = quotient_projective_dimension(&i).unwrap();
        let depth = depth_by_linear_forms(&i, 7).unwrap();
        assert_eq!(depth + pdim, n, "{:?}", i.gens());
        let d = depth_and_cm(&i).unwrap();
        assert_eq!(d.depth, depth);
        assert!(d.depth <= d.dimension);
    }
}

/// The graded Betti numbers determine the Hilbert numerator of `S/I`.
#[test]
fn betti_numbers_give_hilbert_numerator() {
    for i in corpus() {
        let res = ideal_resolution(&i).unwrap();
        res.verify().unwrap();
        let mut num = vec![1i64];
        for (p, d, c) in res.betti().graded {
            let d = d as usize;
            if num.len() <= d {
                num.resize(d + 1, 0);
            }
            let sign = if p % 2 == 0 { -1 } else { 1 };
            num[d] += sign * c as i64;
        }
        while num.last() == Some(&0) {
            num.pop();
        }
        assert_eq!(num, i.hilbert_numerator().coeffs(), "{:?}", i.gens());
    }
}

#[test]
fn koszul_complexes() {
    let r = PolyRing::indexed("x", 5, true).unwrap();
    for k in 1..=5 {
        let names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
        let i = Ideal::new(&r, parse_all(&names, &r).unwrap()).unwrap();
        let b = ideal_resolution(&i).unwrap().betti();
        assert_eq!(b.total, (1..=k).map(|p| binomial(k, p)).collect::<Vec<_>>());
        assert_eq!(b.total, koszul_betti(k).total);
    }
}

#[test]
fn module_resolutions_are_exact_and_minimal() {
    let r = PolyRing::new(&["x", "y", "z"]).unwrap();
    let m = FreeModule::new(&r, vec![0, 0, 1]);
    let rows: &[&[&str]] = &[&["x", "y", "1"], &["y", "z", "1"], &["z", "x", "1"], &["x*y", "0", "z"]];
    let gens: Vec<FreeModuleElement> = rows
        .iter()
        .map(|row| FreeModuleElement::from_components(&m, parse_all(row, &r).unwrap()).unwrap())
        .collect();
    let res = free_resolution_in(&m, &gens).unwrap();
    res.verify().unwrap();
    assert!(res.minimal);
    assert!(res.length() <= 3);
}

#[test]
fn unit_ideal_has_no_depth() {
    let r = PolyRing::new(&["x", "y"]).unwrap();
    assert!(depth_and_cm(&ideal(&r, &["1"])).is_err());
}
