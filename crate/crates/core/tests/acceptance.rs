//! One test per acceptance criterion; each prints a single pass/fail line.

use std::time::{Duration, Instant};

use griess_forge::algebra::commutant::{self, Node};
use griess_forge::algebra::{orbit, u3a};
use griess_forge::appendix;
use griess_forge::exact::{CycNum, Rational};
use griess_forge::involutions::ad_spectrum;
use griess_forge::lattice::codes;
use griess_forge::lattice::niemeier;
use griess_forge::lattice::roots::RootKind;
use griess_forge::minimal_models as mm;
use griess_forge::report::{self, Status};
use griess_forge::w2::W2Space;

fn q(n: i64, d: i64) -> CycNum {
    CycNum::frac(n, d)
}

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Duration,
    start: Instant,
    failed: Vec<String>,
    total: usize,
}

impl Criterion {
    fn new(number: u32, title: &'static str, budget_secs: u64) -> Self {
        Criterion { number, title, budget: Duration::from_secs(budget_secs), start: Instant::now(), failed: Vec::new(), total: 0 }
    }

    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.total += 1;
        if !ok {
            self.failed.push(what.into());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, computed: T) {
        let ok = expected == computed;
        self.check(format!("{what}: expected {expected:?}, computed {computed:?}"), ok);
    }

    fn finish(mut self) {
        let elapsed = self.start.elapsed();
        if elapsed > self.budget {
            self.failed.push(format!("took {elapsed:?}, budget {:?}", self.budget));
        }
        let status = if self.failed.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}: {} ({} checks, {:.2?})", self.number, self.title, self.total, elapsed);
        for f in &self.failed {
            println!("    failed: {f}");
        }
        assert!(self.failed.is_empty(), "criterion {} failed: {:?}", self.number, self.failed);
    }
}

#[test]
fn criterion_01_central_charges() {
    let mut c = Criterion::new(1, "central charges of tilde omega", 1);
    for (kind, want) in [
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
        c.check(format!("{kind} Virasoro"), chk.is_virasoro);
        c.eq(&format!("c({kind})"), want, chk.central_charge);
    }
    for n in [1i64, 2, 5] {
        let sp = W2Space::new(RootKind::A(n as usize)).unwrap();
        let chk = sp.virasoro_check(&sp.tilde_omega_full().unwrap()).unwrap();
        c.eq(&format!("A{n} = 2n/(n+3)"), q(2 * n, n + 3), chk.central_charge);
    }
    c.finish();
}

#[test]
fn criterion_02_special_ising_vector() {
    let mut c = Criterion::new(2, "special Ising vector in the 156-dim sqrt2 E8 algebra", 5);
    let sp = W2Space::new(RootKind::E8).unwrap();
    let alg = sp.even_algebra().unwrap();
    c.eq("dim", 156, alg.dim());
    let e = sp.to_even(&sp.tilde_omega_full().unwrap()).unwrap();
    let two_e: Vec<CycNum> = e.iter().map(|x| x * &q(2, 1)).collect();
    c.check("e·e = 2e", alg.product(&e, &e) == two_e);
    c.eq("<e,e>", q(1, 4), alg.form(&e, &e));
    c.finish();
}

fn table_criterion(n: u32, title: &'static str, node: Node, headline: impl Fn(&mut Criterion, &griess_forge::algebra::FDAlgebra)) {
    let mut c = Criterion::new(n, title, 10);
    let r = report::commutant(node);
    let entries: Vec<_> = r.checks.iter().filter(|x| x.id.contains(".table.")).collect();
    for e in &entries {
        c.check(format!("{}: expected {}, computed {}", e.description, e.expected, e.computed), e.status == Status::Pass);
    }
    let products = entries.iter().filter(|e| e.id.contains(".product.")).count();
    let forms = entries.iter().filter(|e| e.id.contains(".form.")).count();
    let dim = commutant::reference_table(node).dim();
    c.eq("product entries", dim * dim, products);
    c.eq("form entries", dim * (dim + 1) / 2, forms);
    let alg = commutant::build_commutant_griess(node).unwrap().algebra;
    headline(&mut c, &alg);
    c.finish();
}

#[test]
fn criterion_03_two_a_table() {
    table_criterion(3, "2A commutant table entry for entry", Node::N2A, |c, a| {
        let x = a.basis(a.index_of("X").unwrap());
        c.eq("X·X", vec![q(80, 1), q(96, 1), CycNum::zero()], a.product(&x, &x));
        c.eq("<X,X>", q(40, 1), a.form(&x, &x));
    });
}

#[test]
fn criterion_04_three_a_table() {
    table_criterion(4, "3A commutant table entry for entry", Node::N3A, |c, a| {
        let x1 = a.basis(a.index_of("X1").unwrap());
        let x2 = a.basis(a.index_of("X2").unwrap());
        c.eq("X1·X2", vec![q(45, 1), q(45, 1), q(45, 1), CycNum::zero(), CycNum::zero()], a.product(&x1, &x2));
        c.eq("<X1,X2>", q(27, 1), a.form(&x1, &x2));
    });
}

#[test]
fn criterion_05_tilde_v_diagram() {
    let mut c = Criterion::new(5, "<v, v'> diagram values and closed forms", 10);
    for (node, want) in [(Node::N1A, q(3, 7)), (Node::N2A, q(1, 49)), (Node::N3A, q(3, 196))] {
        let cm = commutant::build_commutant_griess(node).unwrap();
        let p = commutant::tilde_v_pair(&cm).unwrap();
        c.check(format!("{node}: lattice v equals closed form"), p.closed_form_matches);
        c.eq(&format!("{node}: <v,v'>"), want, p.inner);
    }
    c.finish();
}

#[test]
fn criterion_06_u3a() {
    let mut c = Criterion::new(6, "3A-algebra: table, orbit closure, e^i and x^0", 30);
    let t = u3a::table();
    let want = [(0usize, 0usize, vec![q(2, 1), q(0, 1), q(0, 1), q(0, 1)]), (2, 2, vec![q(0, 1), q(0, 1), q(0, 1), q(20, 1)]), (2, 3, vec![q(135, 1), q(252, 1), q(0, 1), q(0, 1)])];
    for (i, j, v) in want {
        c.eq(&format!("table {}·{}", t.names[i], t.names[j]), v, t.product(&t.basis(i), &t.basis(j)));
    }
    c.eq("<X+,X->", q(81, 1), t.gram[(2, 3)].clone());
    let o = u3a::from_orbit().unwrap();
    c.eq("orbit closure dim", 4, o.algebra.dim());
    c.check("orbit closure isomorphic to the table", o.isomorphism.is_some());
    c.check("w1, w2 lift to tilde omega of A2 and E6", o.frame_matches);
    for i in 0..3 {
        let e = u3a::ising(i);
        c.check(format!("e{i} Virasoro"), t.is_virasoro(&e));
        c.eq(&format!("c(e{i})"), q(1, 2), t.central_charge(&e));
    }
    c.eq("<e0,e1>", q(13, 1024), u3a::ising_inner());
    let x = u3a::x_vector(0);
    c.check("x0 Virasoro", t.is_virasoro(&x));
    c.eq("c(x0)", q(4, 5), t.central_charge(&x));
    let sp = ad_spectrum(&t, &x).unwrap();
    c.check("13/8 in spec ad(x0)", sp.eigenvalues().contains(&Rational::new(13, 8)));
    c.finish();
}

#[test]
fn criterion_07_involutions() {
    let mut c = Criterion::new(7, "sigma pair orders (1, 2, 3), nine-vector tau orders, group order", 60);
    for (node, want) in [(Node::N1A, 1), (Node::N2A, 2), (Node::N3A, 3)] {
        let o = commutant::sigma_pair_order(&commutant::build_commutant_griess(node).unwrap()).unwrap();
        let spec: Vec<String> = o.spectrum.iter().map(|(h, k)| format!("{h}:{k}")).collect();
        c.check(format!("{node}: |sigma_v sigma_v'| expected {want}, computed {} (ad(v) spectrum {})", o.order, spec.join(", ")), o.order == want);
    }
    let o = orbit::nine_orbit().unwrap();
    let scan = orbit::tau_scan(&o).unwrap();
    c.eq("tau pairs", 36, scan.pairs.len());
    c.check("all pairwise tau orders equal 3", scan.pairs.iter().all(|p| p.order == 3));
    c.check("no tau order above 6", scan.violations.is_empty());
    let g = orbit::tau_group_order(&o).unwrap();
    c.check(format!("group order {g} divides 18"), 18 % g == 0);
    let st = orbit::stabilizer(&o).unwrap();
    c.check("restricted tau equals sigma_v", orbit::restriction_check(&o, &st).unwrap().ok());
    let sigma = orbit::sigma_scan(&o, &st).unwrap();
    c.check("sigma orders at most 3", sigma.violations.is_empty());
    c.finish();
}

#[test]
fn criterion_08_minimal_models() {
    let mut c = Criterion::new(8, "sigma set B(4), W-algebra census, module top weights", 1);
    let r = Rational::new;
    let mut b = mm::sigma_type_set(4);
    b.sort();
    c.eq("B(4)", vec![r(0, 1), r(1, 7), r(5, 7), r(12, 7), r(22, 7), r(5, 1)], b);
    let labels = mm::sigma_type_labels(4);
    let closed = labels.iter().all(|a| labels.iter().all(|x| mm::fusion(*a, *x).unwrap().keys().all(|l| labels.contains(l))));
    c.check("B(4) closed under fusion", closed);
    c.eq("W(6/7) census", 9, mm::w_untwisted_census(4).unwrap());
    c.eq("W(4/5) census", 6, mm::w_untwisted_census(3).unwrap());
    for row in mm::u3a_module_table() {
        c.eq(&format!("top weight of {}", row.name), row.name.clone(), row.min_total_weight());
    }
    c.eq("2/5 + 1/7", r(19, 35), r(2, 5) + r(1, 7));
    c.finish();
}

#[test]
fn criterion_09_codes() {
    let mut c = Criterion::new(9, "tetracode and Golay code", 1);
    let t = codes::tetracode_shifted();
    c.eq("|C4|", 9, t.words().len());
    c.eq("min weight C4", 3, t.min_weight());
    let g = codes::golay12();
    c.eq("|C12|", 729, g.words().len());
    c.check("C12 self-dual", g.is_self_dual());
    c.eq("min weight C12", 6, g.min_weight());
    c.check("d1 in C12", g.contains(&niemeier::d1()));
    c.check("d2 in C12", g.contains(&niemeier::d2()));
    c.finish();
}

#[test]
fn criterion_10_leech_chain() {
    let mut c = Criterion::new(10, "Niemeier to Leech chain and the E8 triple inside it", 300);
    for v in appendix::leech_chain_checks(true).unwrap() {
        c.check(format!("{}: expected {}, computed {}", v.name, v.expected, v.computed), v.pass);
    }
    for v in appendix::leech_embedding_checks().unwrap() {
        c.check(format!("{}: expected {}, computed {}", v.name, v.expected, v.computed), v.pass);
    }
    c.finish();
}

#[test]
fn criterion_11_appendix_matrices() {
    let mut c = Criterion::new(11, "s^-1 tau s = r, s^T = s, s^4 = 1, (s^T)^-1 = s^3", 1);
    for v in appendix::su3_checks().into_iter().chain(appendix::theta_checks()) {
        c.check(format!("{}: expected {}, computed {}", v.name, v.expected, v.computed), v.pass);
    }
    c.finish();
}

#[test]
fn criterion_12_property_suites() {
    let mut c = Criterion::new(12, "property suites on every constructed algebra", 120);
    let r = report::properties_suite(true);
    for x in &r.checks {
        c.check(format!("{}: expected {}, computed {}", x.description, x.expected, x.computed), x.status == Status::Pass);
    }
    let norton: Vec<_> = r.checks.iter().filter(|x| x.id.ends_with(".norton")).collect();
    c.check("Norton run on at least 100 pairs", norton.iter().all(|x| x.description.contains(&format!("{} sampled", report::NORTON_SAMPLES))) && report::NORTON_SAMPLES >= 100);
    c.check("156-dim algebra included", r.checks.iter().any(|x| x.description.contains("156") || x.id.starts_with("properties.sqrt2e8") || x.id.contains("e8_even")));
    c.finish();
}
