use griess_forge::lattice::codes::{self, LinearCode};
use griess_forge::lattice::isometry::isometry_test;
use griess_forge::lattice::niemeier::{self, a2_blocks, GluedLattice};
use griess_forge::lattice::roots::{self, RootKind};
use griess_forge::lattice::{enumerate, intmat, sublattice, IntegralLattice};

#[test]
fn golay_from_shifted_tetracode() {
    let g = codes::golay12();
    assert_eq!(g.dimension(), 6);
    assert!(g.is_self_dual());
    assert_eq!(g.min_weight(), 6);
    let wd = g.weight_distribution();
    assert_eq!((wd[0], wd[6], wd[9], wd[12]), (1, 264, 440, 24));
    assert!(g.contains(&niemeier::d1()));
    assert!(g.contains(&niemeier::d2()));
}

#[test]
fn unshifted_tetracode_misses_the_distinguished_words() {
    let g = codes::golay12_from(&codes::tetracode());
    assert_eq!(g.min_weight(), 6);
    assert!(!(g.contains(&niemeier::d1()) && g.contains(&niemeier::d2())));
}

#[test]
fn e6_marks_and_node_sublattices() {
    let (_, marks) = roots::affine_marks(RootKind::E6).unwrap();
    assert_eq!(marks, vec![1, 1, 2, 3, 2, 1, 2]);
    let (_, m8) = roots::affine_marks(RootKind::E8).unwrap();
    assert_eq!(m8.iter().sum::<i64>(), 30);

    let e6 = roots::build_root_lattice(RootKind::E6, 1).unwrap();
    let cases = [(3, "3A", 3, vec![RootKind::A(2); 3]), (2, "2A", 2, vec![RootKind::A(1), RootKind::A(5)]), (0, "1A", 1, vec![RootKind::E6])];
    for (node, label, index, kinds) in cases {
        let ns = roots::node_sublattice(RootKind::E6, node).unwrap();
        assert_eq!(ns.label(), label);
        let mut got: Vec<RootKind> = ns.components.iter().map(|c| c.kind).collect();
        got.sort_by_key(|k| k.rank());
        let mut want = kinds.clone();
        want.sort_by_key(|k| k.rank());
        assert_eq!(got, want);
        let c = sublattice::cosets(&e6.lattice, &ns.basis).unwrap();
        assert_eq!(c.index(), index);
    }
}

#[test]
fn three_a2_cosets_and_annihilator() {
    let e6 = roots::build_root_lattice(RootKind::E6, 1).unwrap();
    let ns = roots::node_sublattice(RootKind::E6, 3).unwrap();
    let c = sublattice::cosets(&e6.lattice, &ns.basis).unwrap();
    assert_eq!(c.invariants, vec![3]);
    // A2 (x) Z3 of E6 inside E8
    let e8 = roots::build_root_lattice(RootKind::E8, 1).unwrap();
    let e6_in_e8: Vec<Vec<i64>> = (0..6).map(|i| (0..8).map(|k| (k == i) as i64).collect()).collect();
    let ann = sublattice::annihilator(&e8.lattice, &e6_in_e8);
    let a = e8.lattice.sublattice("Ann", &ann).unwrap();
    let a2 = IntegralLattice::new("A2", RootKind::A(2).cartan()).unwrap();
    assert!(isometry_test(&a, &a2).is_some());
    let both: Vec<Vec<i64>> = e6_in_e8.iter().chain(ann.iter()).cloned().collect();
    let c = sublattice::cosets(&e8.lattice, &both).unwrap();
    assert_eq!(c.index(), 3);
}

#[test]
fn scaled_e6_norm_four() {
    let s = roots::build_root_lattice(RootKind::E6, 2).unwrap();
    assert_eq!(s.lattice.min_norm(), 4);
    assert_eq!(s.lattice.short_vectors(4).len(), 72);
}

#[test]
fn niemeier_and_leech() {
    let c = niemeier::leech_from_niemeier();
    let n = c.niemeier.lattice().unwrap();
    assert_eq!(n.rank(), 24);
    assert_eq!(n.det_i64(), 1);
    assert!(n.is_even());
    assert_eq!(niemeier::root_count(&c.niemeier).unwrap(), 72);

    let n0 = c.niemeier_zero.lattice().unwrap();
    assert_eq!(n0.det_i64(), 9);
    assert_eq!(niemeier::root_count(&c.niemeier_zero).unwrap(), 0);

    let l = c.leech.lattice().unwrap();
    assert_eq!(l.det_i64(), 1);
    assert!(l.is_even());
    let (red, _) = l.reduced();
    assert_eq!(enumerate::short_vectors(&red.gram, 2).len(), 0);
    assert_eq!(enumerate::short_vectors(&red.gram, 4).len(), 196560);
}

#[test]
fn codeword_isometries_preserve_the_chain() {
    let c = niemeier::leech_from_niemeier();
    let mut kept = 0;
    for w in c.golay.words() {
        let img = |lat: &GluedLattice| -> bool {
            let rows: Vec<Vec<i64>> = lat.basis.iter().map(|b| niemeier::codeword_isometry(&w, b)).collect();
            lat.contains_all(&rows)
        };
        assert!(img(&c.niemeier));
        let keeps = img(&c.niemeier_zero);
        assert_eq!(keeps, niemeier::preserves_niemeier_zero(&c.golay, &w), "{w:?}");
        if keeps {
            kept += 1;
            assert!(w[4..8].iter().all(|&x| x == 0));
            assert!(img(&c.leech), "{w:?}");
        }
    }
    // exactly the words vanishing on the middle block: span{d1, d2}
    assert_eq!(kept, 9);
    assert!(niemeier::preserves_niemeier_zero(&c.golay, &niemeier::d1()));
    assert!(niemeier::preserves_niemeier_zero(&c.golay, &niemeier::d2()));
}

fn rank16(g: &GluedLattice) -> IntegralLattice {
    g.lattice().unwrap()
}

#[test]
fn three_e8_copies_in_niemeier_zero() {
    let c = niemeier::leech_from_niemeier();
    let r = niemeier::diagonal_e8_in_niemeier();
    let r1 = niemeier::image(&r, "R1", &niemeier::d1());
    let r2 = niemeier::image(&r, "R2", &niemeier::d2());
    for x in [&r, &r1, &r2] {
        assert_eq!(x.rank(), 8);
        assert!(c.niemeier_zero.contains_all(&x.basis));
        let g = x.lattice().unwrap();
        assert_eq!(g.det_i64(), 256);
    }
    let lt = niemeier::sum("L~", &[&r, &r1, &r2]);
    assert_eq!(lt.rank(), 16);

    // L = R + R1 + R2 inside E8 (+) E8 on blocks 5..12.
    let e = niemeier::e8_from_tetracode();
    let h1 = &niemeier::d1()[8..];
    let h2 = &niemeier::d2()[8..];
    let mut rows = Vec::new();
    for w in &e.basis {
        let mut a = w.clone();
        a.extend(w.iter().copied());
        rows.push(a.clone());
        let mut b = w.clone();
        b.extend(niemeier::codeword_isometry(h1, w));
        rows.push(b);
        let mut d = w.clone();
        d.extend(niemeier::codeword_isometry(h2, w));
        rows.push(d);
    }
    let l = GluedLattice::from_rows("L", 8, &rows);
    assert_eq!(l.rank(), 16);
    assert!(isometry_test(&rank16(&l), &rank16(&lt)).is_some());
}

#[test]
fn e8_sublattice_k_is_four_a2() {
    let e = niemeier::e8_from_tetracode();
    let d: Vec<i64> = vec![3, 3];
    let w1: Vec<i64> = [vec![0, 0], d.clone(), d.clone(), d.clone()].concat();
    let w2: Vec<i64> = [d.clone(), d.clone(), vec![-3, -3], vec![0, 0]].concat();
    let k1 = niemeier::congruence(&e, "K1", &w1, 3);
    let k = niemeier::congruence(&k1, "K", &w2, 3);
    let kl = k.lattice().unwrap();
    assert_eq!(kl.det_i64(), 81);
    let a24 = IntegralLattice::new("A2^4", a2_blocks(4)).unwrap();
    assert!(isometry_test(&kl, &a24).is_some());
}

#[test]
fn glue_sets_inner_products() {
    let f = a2_blocks(1);
    let g = niemeier::glue_vector(&[1]);
    assert_eq!(intmat::gram_of(&[g], &f), vec![vec![6]]);
    let code = LinearCode::from_generators(1, &[]).unwrap();
    assert_eq!(niemeier::glued("A2", &code).lattice().unwrap().det_i64(), 3);
}
