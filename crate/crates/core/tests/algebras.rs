use griess_forge::algebra::commutant::{self, Node};
use griess_forge::algebra::{orbit, props, u3a, FDAlgebra};
use griess_forge::exact::{CycNum, Rational};
use griess_forge::involutions::{ad_spectrum, group_closure, is_automorphism, map_order, sigma_involution, tau_involution};
use griess_forge::lattice::roots::RootKind;
use griess_forge::w2::{W2Element, W2Space};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> CycNum {
    CycNum::frac(n, d)
}

#[test]
fn central_charges_of_root_frames() {
    for (kind, c) in [
        (RootKind::A(1), q(1, 2)),
        (RootKind::A(2), q(4, 5)),
        (RootKind::A(5), q(5, 4)),
        (RootKind::D(4), q(1, 1)),
        (RootKind::E6, q(6, 7)),
        (RootKind::E7, q(7, 10)),
        (RootKind::E8, q(1, 2)),
    ] {
        let sp = W2Space::new(kind).unwrap();
        let chk = sp.virasoro_check(&sp.tilde_omega_full().unwrap()).unwrap();
        assert!(chk.is_virasoro, "{kind}");
        assert_eq!(chk.central_charge, c, "{kind}");
    }
}

#[test]
fn special_ising_vector_of_e8() {
    let sp = W2Space::new(RootKind::E8).unwrap();
    let alg = sp.even_algebra().unwrap();
    assert_eq!(alg.dim(), 156);
    let e = sp.to_even(&sp.tilde_omega_full().unwrap()).unwrap();
    let ee = alg.product(&e, &e);
    assert_eq!(ee, e.iter().map(|x| x * &q(2, 1)).collect::<Vec<_>>());
    assert_eq!(alg.form(&e, &e), q(1, 4));
}

#[test]
fn orthogonal_frames_in_e8() {
    let f = u3a::E8Frame::new().unwrap();
    let sp = &f.space;
    assert_eq!(sp.form(&f.a2_vector, &f.e6_vector), CycNum::zero());
    let sum = f.a2_vector.add(&f.e6_vector);
    let chk = sp.virasoro_check(&sum).unwrap();
    assert!(chk.is_virasoro);
    assert_eq!(chk.central_charge, &q(4, 5) + &q(6, 7));
}

#[test]
fn commutant_tables_match_reference() {
    for node in Node::ALL {
        let c = commutant::build_commutant_griess(node).unwrap();
        let diff = commutant::compare_tables(&c.algebra, &commutant::reference_table(node));
        assert!(diff.is_empty(), "{node}: {diff:?}");
        assert!(commutant::weight2_dimension_census(&c).ok());
    }
}

#[test]
fn two_a_headline_entries() {
    let c = commutant::build_commutant_griess(Node::N2A).unwrap();
    let a = &c.algebra;
    let x = a.basis(a.index_of("X").unwrap());
    let want = [q(80, 1), q(96, 1), CycNum::zero()];
    assert_eq!(a.product(&x, &x), want);
    assert_eq!(a.form(&x, &x), q(40, 1));
}

#[test]
fn three_a_headline_entries() {
    let c = commutant::build_commutant_griess(Node::N3A).unwrap();
    let a = &c.algebra;
    let x1 = a.basis(a.index_of("X1").unwrap());
    let x2 = a.basis(a.index_of("X2").unwrap());
    assert_eq!(a.product(&x1, &x2), vec![q(45, 1), q(45, 1), q(45, 1), CycNum::zero(), CycNum::zero()]);
    assert_eq!(a.form(&x1, &x2), q(27, 1));
}

#[test]
fn tilde_v_inner_products() {
    for (node, inner) in [(Node::N1A, q(3, 7)), (Node::N2A, q(1, 49)), (Node::N3A, q(3, 196))] {
        let c = commutant::build_commutant_griess(node).unwrap();
        let p = commutant::tilde_v_pair(&c).unwrap();
        assert!(p.closed_form_matches, "{node}");
        assert_eq!(p.v, commutant::tilde_v_closed_form(node));
        assert_eq!(p.inner, inner, "{node}");
        assert_eq!(c.algebra.central_charge(&p.v_prime), q(6, 7));
    }
}

#[test]
fn two_a_complement_is_25_28() {
    let c = commutant::build_commutant_griess(Node::N2A).unwrap();
    let u = commutant::orthogonal_complement_virasoro(&c).unwrap();
    assert!(c.algebra.is_virasoro(&u));
    assert_eq!(c.algebra.central_charge(&u), q(25, 28));
    let p = commutant::tilde_v_pair(&c).unwrap();
    assert_eq!(c.algebra.form(&u, &p.v), CycNum::zero());
}

#[test]
fn sigma_orders_on_commutants() {
    let orders: Vec<u32> = Node::ALL.iter().map(|&n| commutant::sigma_pair_order(&commutant::build_commutant_griess(n).unwrap()).unwrap().order).collect();
    // 2A: every eigenvalue of ad(v) on G(2A) is sigma-even, so sigma_v is trivial.
    assert_eq!(orders, vec![1, 1, 3]);
    let c = commutant::build_commutant_griess(Node::N2A).unwrap();
    let sp = commutant::sigma_pair_order(&c).unwrap().spectrum;
    let r = Rational::new;
    assert_eq!(sp, vec![(r(0, 1), 1), (r(5, 7), 1), (r(2, 1), 1)]);
}

#[test]
fn two_a_sigma_trivial_on_ambient() {
    let o = commutant::sigma_pair_order_ambient(Node::N2A).unwrap();
    let r = Rational::new;
    assert_eq!(o.spectrum, vec![(r(0, 1), 36), (r(5, 7), 20), (r(2, 1), 1)]);
    assert_eq!(o.order, 1);
}

#[test]
fn three_a_sigma_group_is_s3() {
    let c = commutant::build_commutant_griess(Node::N3A).unwrap();
    let p = commutant::tilde_v_pair(&c).unwrap();
    let a = sigma_involution(&c.algebra, &p.v).unwrap();
    let b = sigma_involution(&c.algebra, &p.v_prime).unwrap();
    assert!(is_automorphism(&c.algebra, &a));
    assert_eq!(group_closure(&[a, b], 100).unwrap().len(), 6);
    assert_eq!(map_order(&c.rho, 12).unwrap(), 3);
    assert_eq!(commutant::pair_closure_dim(&c).unwrap(), 3);
}

#[test]
fn u3a_orbit_is_the_table() {
    let o = u3a::from_orbit().unwrap();
    assert_eq!(o.algebra.dim(), 4);
    assert!(o.isomorphism.is_some());
    assert!(o.frame_matches);
    let t = u3a::table();
    assert_eq!(u3a::ising_inner(), q(13, 1024));
    let sp = ad_spectrum(&t, &u3a::x_vector(0)).unwrap();
    assert!(sp.eigenvalues().contains(&Rational::new(13, 8)));
    for i in 0..3 {
        let e = u3a::ising(i);
        assert_eq!(t.product(&e, &e), e.iter().map(|x| x * &q(2, 1)).collect::<Vec<_>>());
        assert_eq!(t.form(&e, &e), q(1, 4));
    }
    let taus: Vec<_> = (0..3).map(|i| tau_involution(&t, &u3a::ising(i)).unwrap()).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            assert_eq!(map_order(&taus[i].compose(&taus[j]), 12).unwrap(), 3);
        }
    }
}

#[test]
fn nine_vector_orbit() {
    let o = orbit::nine_orbit().unwrap();
    assert_eq!(o.algebra.dim(), 12);
    assert_eq!(orbit::orbit_inner_products(&o), vec![q(13, 1024)]);
    let scan = orbit::tau_scan(&o).unwrap();
    assert_eq!(scan.pairs.len(), 36);
    assert!(scan.pairs.iter().all(|p| p.order == 3));
    assert_eq!(18 % orbit::tau_group_order(&o).unwrap(), 0);
    let st = orbit::stabilizer(&o).unwrap();
    assert_eq!(st.kernel.dim(), 5);
    assert!(orbit::restriction_check(&o, &st).unwrap().ok());
    let sigma = orbit::sigma_scan(&o, &st).unwrap();
    assert!(sigma.violations.is_empty());
}

#[test]
fn property_suites_on_small_algebras() {
    let mut algs: Vec<FDAlgebra> = Node::ALL.iter().map(|&n| commutant::build_commutant_griess(n).unwrap().algebra).collect();
    algs.push(u3a::table());
    for a in &algs {
        let r = props::run_all(a, 100);
        assert!(r.all_pass(), "{}: {:?}", a.name, r.failures);
    }
}

fn a2_even_element() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn a2_product_commutes_and_form_is_invariant(x in a2_even_element(), y in a2_even_element(), z in a2_even_element()) {
        let sp = W2Space::new(RootKind::A(2)).unwrap();
        let alg = sp.even_algebra().unwrap();
        let v = |c: &[(i64, i64)]| -> Vec<CycNum> { c.iter().take(alg.dim()).map(|&(n, d)| q(n, d)).chain(std::iter::repeat(CycNum::zero())).take(alg.dim()).collect() };
        let (a, b, c) = (v(&x), v(&y), v(&z));
        prop_assert_eq!(alg.product(&a, &b), alg.product(&b, &a));
        prop_assert_eq!(alg.form(&alg.product(&a, &b), &c), alg.form(&b, &alg.product(&a, &c)));
    }

    #[test]
    fn w2_json_round_trip(c in prop::collection::vec((0usize..12, -5i64..=5, 1i64..=4), 0..8)) {
        let sp = W2Space::new(RootKind::A(2)).unwrap();
        let mut e = W2Element::zero();
        for (k, n, d) in c {
            e.add_term(k % sp.dim(), &q(n, d));
        }
        let back = sp.from_json(&sp.to_json(&e)).unwrap();
        prop_assert_eq!(back, e);
    }
}
