//! Named exact checks grouped into suites, with JSON and markdown output.

use std::fmt::Display;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::commutant::{self, Node};
use crate::algebra::{orbit, props, u3a, FDAlgebra};
use crate::appendix::{self, Verification};
use crate::error::{Error, Result};
use crate::exact::{CycNum, Rational};
use crate::involutions::{self, ad_spectrum, group_closure, restrict_map, sigma_involution, tau_involution, ScanKind};
use crate::lattice::roots::{self, RootKind};
use crate::lattice::{codes, enumerate, niemeier, IntegralLattice};
use crate::minimal_models::{self as mm, ModuleLabel};
use crate::w2::W2Space;

pub const SCHEMA: u32 = 1;
pub const NORTON_SAMPLES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub paper_anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl Check {
    pub fn line(&self) -> String {
        format!("{}: {}", self.description, self.status)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub checks: Vec<Check>,
    pub elapsed: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("## {}\n\n| id | check | expected | computed | status |\n|---|---|---|---|---|\n", self.suite);
        for c in &self.checks {
            let esc = |x: &str| x.replace('|', "\\|");
            s.push_str(&format!("| {} | {} | {} | {} | {} |\n", c.id, esc(&c.description), esc(&c.expected), esc(&c.computed), c.status));
        }
        s
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Bundle {
    pub schema: u32,
    pub reports: Vec<Report>,
}

impl Bundle {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }
}

/// Accumulates checks for one suite; internal errors become failing checks.
pub struct Suite {
    name: String,
    anchor: String,
    checks: Vec<Check>,
    start: Instant,
}

impl Suite {
    pub fn new(name: &str, anchor: &str) -> Self {
        Suite { name: name.into(), anchor: anchor.into(), checks: Vec::new(), start: Instant::now() }
    }

    pub fn anchor(&mut self, anchor: &str) -> &mut Self {
        self.anchor = anchor.into();
        self
    }

    fn push(&mut self, id: &str, description: &str, expected: String, computed: String, status: Status) {
        self.checks.push(Check {
            id: format!("{}.{}", self.name, id),
            description: description.into(),
            paper_anchor: self.anchor.clone(),
            expected,
            computed,
            status,
        });
    }

    pub fn eq(&mut self, id: &str, description: &str, expected: impl Display, computed: impl Display) {
        let (e, c) = (expected.to_string(), computed.to_string());
        let st = if e == c { Status::Pass } else { Status::Fail };
        self.push(id, description, e, c, st);
    }

    pub fn flag(&mut self, id: &str, description: &str, ok: bool) {
        self.eq(id, description, true, ok);
    }

    pub fn skip(&mut self, id: &str, description: &str, expected: impl Display) {
        self.push(id, description, expected.to_string(), String::new(), Status::Skipped);
    }

    pub fn error(&mut self, id: &str, description: &str, e: &Error) {
        self.push(id, description, "no error".into(), e.to_string(), Status::Fail);
    }

    /// Runs `f`, recording an error as a failing check.
    pub fn attempt<T>(&mut self, id: &str, description: &str, f: impl FnOnce() -> Result<T>) -> Option<T> {
        match f() {
            Ok(x) => Some(x),
            Err(e) => {
                self.error(id, description, &e);
                None
            }
        }
    }

    pub fn verifications(&mut self, prefix: &str, vs: &[Verification]) {
        for v in vs {
            let id = format!("{prefix}.{}", slug(&v.name));
            self.eq(&id, &v.name, &v.expected, &v.computed);
        }
    }

    pub fn finish(self) -> Report {
        Report { schema: SCHEMA, suite: self.name, checks: self.checks, elapsed: self.start.elapsed().as_millis() as u64 }
    }
}

fn slug(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        if ch.is_ascii_alphanumeric() {
            out.push(ch.to_ascii_lowercase());
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

fn superscript(d: char) -> char {
    match d {
        '0' => '⁰',
        '1' => '¹',
        '2' => '²',
        '3' => '³',
        '4' => '⁴',
        '5' => '⁵',
        '6' => '⁶',
        '7' => '⁷',
        '8' => '⁸',
        _ => '⁹',
    }
}

/// `80 w1 + 96 w2` -> `80ω¹+96ω²`.
pub fn pretty(s: &str) -> String {
    let mut out = String::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let starts_word = i == 0 || !chars[i - 1].is_ascii_alphanumeric();
        if starts_word && (c == 'w' || c == 'X') && chars.get(i + 1).is_none_or(|n| !n.is_ascii_alphabetic()) {
            out.push(if c == 'w' { 'ω' } else { 'X' });
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                out.push(superscript(chars[i]));
                i += 1;
            }
            continue;
        }
        if c != ' ' {
            out.push(c);
        }
        i += 1;
    }
    out
}

fn product_label(a: &FDAlgebra, i: usize, j: usize, v: &[CycNum]) -> String {
    format!("{}·{} = {}", pretty(&a.names[i]), pretty(&a.names[j]), pretty(&a.show(v)))
}

fn form_label(a: &FDAlgebra, i: usize, j: usize, c: &CycNum) -> String {
    format!("⟨{},{}⟩ = {}", pretty(&a.names[i]), pretty(&a.names[j]), c)
}

/// Every ordered product and every form value of `got` against `want`
/// (same basis order).
pub fn table_checks(s: &mut Suite, prefix: &str, got: &FDAlgebra, want: &FDAlgebra) {
    if got.names != want.names {
        s.eq(&format!("{prefix}.basis"), "basis names", want.names.join(","), got.names.join(","));
        return;
    }
    let n = want.dim();
    for i in 0..n {
        for j in 0..n {
            let p = want.product(&want.basis(i), &want.basis(j));
            let q = got.product(&got.basis(i), &got.basis(j));
            s.eq(&format!("{prefix}.product.{}*{}", want.names[i], want.names[j]), &product_label(want, i, j, &p), want.show(&p), got.show(&q));
        }
    }
    for i in 0..n {
        for j in i..n {
            let e = &want.gram[(i, j)];
            s.eq(&format!("{prefix}.form.{},{}", want.names[i], want.names[j]), &form_label(want, i, j, e), e, &got.gram[(i, j)]);
        }
    }
}

fn root_kinds() -> Vec<(RootKind, Rational)> {
    let q = Rational::new;
    vec![
        (RootKind::A(1), q(1, 2)),
        (RootKind::A(2), q(4, 5)),
        (RootKind::A(5), q(5, 4)),
        (RootKind::D(4), q(1, 1)),
        (RootKind::E6, q(6, 7)),
        (RootKind::E7, q(7, 10)),
        (RootKind::E8, q(1, 2)),
    ]
}

/// Central charge of `tilde omega` for each root type.
pub fn central_charges() -> Report {
    let mut s = Suite::new("central_charges", "Virasoro vectors of sqrt2 root lattices");
    for (kind, c) in root_kinds() {
        let id = format!("{kind}");
        if let Some(chk) = s.attempt(&id, &format!("tilde omega of {kind}"), || {
            let sp = W2Space::new(kind)?;
            let w = sp.tilde_omega_full()?;
            sp.virasoro_check(&w)
        }) {
            s.flag(&format!("{id}.virasoro"), &format!("tilde omega of {kind} is Virasoro"), chk.is_virasoro);
            s.eq(&format!("{id}.c"), &format!("c(tilde omega of {kind}) = {c}"), CycNum::from_rational(c), chk.central_charge);
        }
    }
    s.finish()
}

/// The special Ising vector inside the 156-dimensional algebra of sqrt2 E8.
pub fn ising_e8() -> Report {
    let mut s = Suite::new("ising_e8", "special Ising vector of sqrt2 E8");
    let r = (|| -> Result<_> {
        let sp = W2Space::new(RootKind::E8)?;
        let alg = sp.even_algebra()?;
        let e = sp.to_even(&sp.tilde_omega_full()?)?;
        Ok((alg, e))
    })();
    match r {
        Err(e) => s.error("build", "theta-even algebra of sqrt2 E8", &e),
        Ok((alg, e)) => {
            s.eq("dim", "dim of the theta-even weight-two algebra", 156, alg.dim());
            let ee = alg.product(&e, &e);
            s.flag("idempotent", "e·e = 2e", ee == crate::algebra::scale(&e, &CycNum::from_int(2)));
            s.eq("norm", "⟨e,e⟩ = 1/4", CycNum::frac(1, 4), alg.form(&e, &e));
            match ad_spectrum(&alg, &e) {
                Ok(sp) => {
                    let q = Rational::new;
                    s.eq("spectrum", "ad(e) eigenvalues, no 1/16 part", show_set(&[q(0, 1), q(1, 2), q(2, 1)]), show_set(&sp.eigenvalues()));
                    s.eq("spectrum_complete", "ad(e) eigenspaces fill the algebra", alg.dim(), sp.spaces.iter().map(|x| x.1.len()).sum::<usize>());
                }
                Err(err) => s.error("spectrum", "ad(e) eigenvalues", &err),
            }
        }
    }
    s.finish()
}

fn closed_inner(node: Node) -> CycNum {
    match node {
        Node::N1A => CycNum::frac(3, 7),
        Node::N2A => CycNum::frac(1, 49),
        Node::N3A => CycNum::frac(3, 196),
    }
}

/// Commutant algebra of one node, its table and the `tilde v` pair.
pub fn commutant(node: Node) -> Report {
    let mut s = Suite::new(&format!("commutant_{node}"), &format!("{node} commutant table"));
    let Some(c) = s.attempt("build", &format!("commutant algebra at {node}"), || commutant::build_commutant_griess(node)) else {
        return s.finish();
    };
    let census = commutant::weight2_dimension_census(&c);
    s.eq("dim", &format!("dim G({node})"), census.expected, census.computed);
    s.eq("frame_count", "frame components plus coset sums", census.expected, census.frame_count);
    let want = commutant::reference_table(node);
    table_checks(&mut s, "table", &c.algebra, &want);
    s.anchor("tilde v and its conjugate");
    if let Some(p) = s.attempt("tilde_v", "tilde v pair", || commutant::tilde_v_pair(&c)) {
        s.flag("tilde_v.closed_form", "tilde v from the lattice equals the closed form", p.closed_form_matches);
        s.eq("tilde_v.inner", &format!("⟨ṽ,ṽ′⟩ = {}", closed_inner(node)), closed_inner(node), p.inner);
        s.eq("tilde_v.c", "c(ṽ) = 6/7", CycNum::frac(6, 7), c.algebra.central_charge(&p.v));
        s.eq("tilde_v_prime.c", "c(ṽ′) = 6/7", CycNum::frac(6, 7), c.algebra.central_charge(&p.v_prime));
    }
    if node == Node::N2A {
        if let Ok(u) = commutant::orthogonal_complement_virasoro(&c) {
            s.flag("complement.virasoro", "ω¹ + ω² − ṽ is Virasoro", c.algebra.is_virasoro(&u));
            s.eq("complement.c", "c(ω¹ + ω² − ṽ) = 25/28", CycNum::frac(25, 28), c.algebra.central_charge(&u));
        }
    }
    s.finish()
}

/// The 3A-algebra: table, its vectors, and optionally the sqrt2 E8 orbit.
pub fn u3a_suite(from_orbit: bool) -> Report {
    let mut s = Suite::new("u3a", "3A-algebra");
    let t = u3a::table();
    s.eq("table.dim", "dim U3A", 4, t.dim());
    for k in 0..2 {
        let w = t.basis(k);
        s.eq(&format!("table.w{}.c", k + 1), &format!("c(ω{}) = {}", superscript(char::from(b'1' + k as u8)), if k == 0 { "4/5" } else { "6/7" }),
            if k == 0 { CycNum::frac(4, 5) } else { CycNum::frac(6, 7) }, t.central_charge(&w));
    }
    for i in 0..3 {
        let e = u3a::ising(i);
        s.flag(&format!("e{i}.virasoro"), &format!("e{} is idempotent up to 2", superscript(char::from(b'0' + i as u8))), t.is_virasoro(&e));
        s.eq(&format!("e{i}.c"), "c(e) = 1/2", CycNum::frac(1, 2), t.central_charge(&e));
        if let Some(sp) = s.attempt(&format!("e{i}.spectrum"), "ad(e) spectrum", || ad_spectrum(&t, &e)) {
            s.flag(&format!("e{i}.spectrum"), "ad(e) eigenspaces fill the algebra", sp.spaces.iter().map(|x| x.1.len()).sum::<usize>() == 4);
        }
    }
    s.eq("e0e1", "⟨e⁰,e¹⟩ = 13/2¹⁰", CycNum::frac(13, 1024), u3a::ising_inner());
    let x = u3a::x_vector(0);
    s.flag("x0.virasoro", "x⁰ is Virasoro", t.is_virasoro(&x));
    s.eq("x0.c", "c(x⁰) = 4/5", CycNum::frac(4, 5), t.central_charge(&x));
    if let Some(sp) = s.attempt("x0.spectrum", "ad(x⁰) spectrum", || ad_spectrum(&t, &x)) {
        let ev: Vec<String> = sp.eigenvalues().iter().map(|r| r.to_string()).collect();
        s.flag("x0.13_8", "13/8 ∈ spec ad(x⁰)", sp.eigenvalues().contains(&Rational::new(13, 8)));
        s.eq("x0.spectrum", "spec ad(x⁰)", "0, 2/3, 13/8, 2", ev.join(", "));
    }
    if let Some(sc) = s.attempt("table.tau_scan", "τ scan on e⁰, e¹, e²", || {
        involutions::transposition_scan(&t, &[u3a::ising(0), u3a::ising(1), u3a::ising(2)], ScanKind::TauIsing)
    }) {
        s.eq("table.tau_orders", "pairwise |τ_{eⁱ}τ_{eʲ}|", "3,3,3", sc.pairs.iter().map(|p| p.order.to_string()).collect::<Vec<_>>().join(","));
    }
    s.anchor("orbit of the special Ising vector in sqrt2 E8");
    if !from_orbit {
        s.skip("orbit.dim", "orbit closure dimension (run with --from-orbit)", 4);
        return s.finish();
    }
    if let Some(o) = s.attempt("orbit", "closure of {ê, ρê, ρ²ê}", u3a::from_orbit) {
        s.eq("orbit.dim", "dim closure{ê, ρê, ρ²ê}", 4, o.algebra.dim());
        s.flag("orbit.isomorphic", "orbit closure ≅ table algebra", o.isomorphism.is_some());
        s.flag("orbit.frame", "ω¹, ω² lift to tilde ω of A2 and E6", o.frame_matches);
        s.eq("orbit.rho_order", "order of ρ", 3, o.rho.order());
        let gens: Vec<_> = (0..3).map(|k| o.algebra.basis(k)).collect();
        if let Some(sc) = s.attempt("orbit.tau_scan", "τ scan on {ê, ρê, ρ²ê}", || involutions::transposition_scan(&o.algebra, &gens, ScanKind::TauIsing)) {
            s.eq("orbit.tau_orders", "pairwise τ-orders on {ê, ρê, ρ²ê}", "3,3,3", sc.pairs.iter().map(|p| p.order.to_string()).collect::<Vec<_>>().join(","));
        }
    }
    s.finish()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionTarget {
    Node(Node),
    E8Orbit,
}

impl std::str::FromStr for InvolutionTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "e8-orbit" {
            return Ok(InvolutionTarget::E8Orbit);
        }
        s.parse::<Node>().map(InvolutionTarget::Node)
    }
}

fn expected_sigma_order(node: Node) -> u32 {
    match node {
        Node::N1A => 1,
        Node::N2A => 2,
        Node::N3A => 3,
    }
}

fn expected_spectrum(node: Node) -> &'static str {
    match node {
        Node::N1A => "2:1",
        Node::N2A => "0:1, 5/7:1, 2:1",
        Node::N3A => "0:1, 1/7:1, 5/7:2, 2:1",
    }
}

pub fn involutions_suite(target: InvolutionTarget) -> Report {
    match target {
        InvolutionTarget::Node(n) => node_involutions(n),
        InvolutionTarget::E8Orbit => orbit_involutions(),
    }
}

fn node_involutions(node: Node) -> Report {
    let mut s = Suite::new(&format!("involutions_{node}"), &format!("sigma involutions on the {node} commutant"));
    let Some(c) = s.attempt("build", &format!("commutant algebra at {node}"), || commutant::build_commutant_griess(node)) else {
        return s.finish();
    };
    let want = expected_sigma_order(node);
    if let Some(o) = s.attempt("sigma_order", "|σ_ṽσ_ṽ′|", || commutant::sigma_pair_order(&c)) {
        s.eq("sigma_order", &format!("|σ_ṽσ_ṽ′| on G({node}) = {want}"), want, o.order);
        let spec: Vec<String> = o.spectrum.iter().map(|(h, k)| format!("{h}:{k}")).collect();
        s.eq("spectrum_complete", "ad(ṽ) eigenspaces fill G", c.algebra.dim(), o.spectrum.iter().map(|x| x.1).sum::<usize>());
        s.eq("spectrum", "ad(ṽ) spectrum (eigenvalue:multiplicity)", expected_spectrum(node), spec.join(", "));
    }
    if let Some(p) = s.attempt("pair", "tilde v pair", || commutant::tilde_v_pair(&c)) {
        let maps = [sigma_involution(&c.algebra, &p.v), sigma_involution(&c.algebra, &p.v_prime)];
        match maps {
            [Ok(a), Ok(b)] => {
                s.flag("sigma_auto", "σ_ṽ, σ_ṽ′ are automorphisms", involutions::is_automorphism(&c.algebra, &a) && involutions::is_automorphism(&c.algebra, &b));
                let group_expected = match node {
                    Node::N1A => 1,
                    Node::N2A => 2,
                    Node::N3A => 6,
                };
                if let Some(g) = s.attempt("sigma_group", "⟨σ_ṽ, σ_ṽ′⟩", || group_closure(&[a.clone(), b.clone()], 10_000)) {
                    s.eq("sigma_group", &format!("|⟨σ_ṽ, σ_ṽ′⟩| = {group_expected}"), group_expected, g.len());
                }
            }
            [Err(e), _] | [_, Err(e)] => s.error("sigma", "σ involutions", &e),
        }
    }
    s.flag("rho_auto", "ρ is an automorphism", involutions::is_automorphism(&c.algebra, &c.rho));
    if let Ok(k) = involutions::map_order(&c.rho, 12) {
        s.eq("rho_order", "order of ρ on G", c.case.mark, k);
    }
    if node == Node::N3A {
        let id = restrict_map(&involutions::LinMap::identity(&c.algebra), &c.algebra);
        s.flag("restrict_identity", "restriction of the identity is the identity", id.is_err() || id.as_ref().is_ok_and(|m| m.is_identity()));
        let z = |k| crate::exact::cyc_make(3, k).expect("cube root");
        let mut ok = true;
        for (k, name) in c.algebra.names.iter().enumerate() {
            let img = c.rho.apply(&c.algebra.basis(k));
            let factor = match name.as_str() {
                "X1" => z(1),
                "X2" => z(2),
                _ => CycNum::one(),
            };
            let f2 = match name.as_str() {
                "X1" => z(2),
                "X2" => z(1),
                _ => CycNum::one(),
            };
            let b = c.algebra.basis(k);
            ok &= img == crate::algebra::scale(&b, &factor) || img == crate::algebra::scale(&b, &f2);
        }
        s.flag("rho_diagonal", "ρ fixes the ω's and scales X¹, X² by ζ₃, ζ₃²", ok);
    }
    s.finish()
}

fn orbit_involutions() -> Report {
    let mut s = Suite::new("involutions_e8_orbit", "nine Ising vectors in sqrt2 E8");
    let Some(o) = s.attempt("build", "orbit closure", orbit::nine_orbit) else {
        return s.finish();
    };
    s.eq("closure_dim", "dim of the closure of the nine Ising vectors", 12, o.algebra.dim());
    let inner: Vec<String> = orbit::orbit_inner_products(&o).iter().map(|x| x.to_string()).collect();
    s.eq("inner", "⟨e, f⟩ for distinct orbit vectors", "13/1024", inner.join(","));
    if let Some(sc) = s.attempt("tau_scan", "τ scan", || orbit::tau_scan(&o)) {
        let orders: std::collections::BTreeSet<u32> = sc.pairs.iter().map(|p| p.order).collect();
        s.eq("tau_pairs", "number of pairs", 36, sc.pairs.len());
        s.eq("tau_orders", "all pairwise τ-orders", "{3}", format!("{orders:?}"));
        s.eq("tau_bound", "pairs above the bound 6", 0, sc.violations.len());
    }
    if let Some(g) = s.attempt("tau_group", "⟨τ_ê, τ_{ρ₁ê}, τ_{ρ₂ê}⟩", || orbit::tau_group_order(&o)) {
        s.flag("tau_group_divides", &format!("|⟨τ_ê, τ_{{ρ₁ê}}, τ_{{ρ₂ê}}⟩| = {g} divides 18"), 18 % g == 0);
    }
    s.anchor("one-point stabilizer");
    if let Some(st) = s.attempt("stabilizer", "ker ad(tilde ω of A2)", || orbit::stabilizer(&o)) {
        s.eq("stabilizer_dim", "dim ker ad(u)", 5, st.kernel.dim());
        if let Some(r) = s.attempt("restriction", "τ_e restricted to ker ad(u)", || orbit::restriction_check(&o, &st)) {
            for (i, m) in &r.matches {
                s.flag(&format!("restriction.{i}"), &format!("τ restricted for ρ₁^{i}ê equals σ_v"), *m);
            }
        }
        if let Some(sc) = s.attempt("sigma_scan", "σ scan on ρ₂^j tilde ω of E6", || orbit::sigma_scan(&o, &st)) {
            s.eq("sigma_bound", "σ-orders above 3", 0, sc.violations.len());
            s.eq("sigma_orders", "pairwise σ-orders", "3,3,3", sc.pairs.iter().map(|p| p.order.to_string()).collect::<Vec<_>>().join(","));
        }
        if let Ok(t) = tau_involution(&o.algebra, o.vector(0, 0)) {
            s.flag("tau_auto", "τ_ê is an automorphism", involutions::is_automorphism(&o.algebra, &t));
        }
    }
    s.finish()
}

fn label(m: u32, r: u32, s: u32) -> ModuleLabel {
    ModuleLabel::new(m, r, s).expect("valid label")
}

fn show_set(v: &[Rational]) -> String {
    let mut v = v.to_vec();
    v.sort();
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn fusion_text(a: ModuleLabel, b: ModuleLabel) -> Result<String> {
    let f = mm::fusion(a, b)?;
    Ok(f.iter().map(|(l, k)| if *k == 1 { l.to_string() } else { format!("{k} {l}") }).collect::<Vec<_>>().join(" + "))
}

/// Minimal-model weights, sigma sets, fusion closure and W-algebra census.
pub fn minimal_models_suite() -> Report {
    let mut s = Suite::new("minimal_models", "minimal models and their extensions");
    let q = Rational::new;
    for (m, c) in [(1, q(1, 2)), (3, q(4, 5)), (4, q(6, 7))] {
        s.eq(&format!("c.{m}"), &format!("central charge at m = {m}"), &c, mm::central_charge(m).map(|x| x.to_string()).unwrap_or_default());
    }
    s.eq("b4", "B^(4)", show_set(&[q(0, 1), q(5, 1), q(1, 7), q(5, 7), q(12, 7), q(22, 7)]), show_set(&mm::sigma_type_set(4)));
    let sig = mm::sigma_type_labels(4);
    let closed = sig.iter().all(|a| sig.iter().all(|b| mm::fusion(*a, *b).is_ok_and(|f| f.keys().all(|l| sig.contains(l)))));
    s.flag("b4_closed", "B^(4) is closed under fusion", closed);
    s.eq("census.4", "untwisted W(6/7) modules", 9, mm::w_untwisted_census(4).unwrap_or(0));
    s.eq("census.3", "untwisted W(4/5) modules", 6, mm::w_untwisted_census(3).unwrap_or(0));
    s.eq("fusion.vacuum", "L(6/7,0) × L(6/7,0)", "L(6/7,0)", fusion_text(label(4, 1, 1), label(4, 1, 1)).unwrap_or_default());
    s.eq("fusion.ising", "L(1/2,1/16) × L(1/2,1/16)", "L(1/2,0) + L(1/2,1/2)", fusion_text(label(1, 1, 2), label(1, 1, 2)).unwrap_or_default());
    let table = mm::u3a_module_table();
    for row in &table {
        s.eq(&format!("u3a_module.{}", slug(&row.name.to_string())), &format!("top weight of the module named {}", row.name), &row.name, row.min_total_weight());
    }
    s.eq("u3a_module.19_35", "2/5 + 1/7 = 19/35", q(19, 35), q(2, 5) + q(1, 7));
    s.finish()
}

pub fn fusion_suite(m: u32, a: (u32, u32), b: (u32, u32)) -> Report {
    let mut s = Suite::new("fusion", "fusion rules");
    let la = ModuleLabel::new(m, a.0, a.1);
    let lb = ModuleLabel::new(m, b.0, b.1);
    match (la, lb) {
        (Ok(x), Ok(y)) => {
            let d = format!("{x} × {y}");
            if let Some(t) = s.attempt("product", &d, || fusion_text(x, y)) {
                let rev = fusion_text(y, x).unwrap_or_default();
                s.eq("product", &format!("{d} = {t}"), &t, &t);
                s.eq("commutative", "fusion is commutative", &t, rev);
            }
        }
        (Err(e), _) | (_, Err(e)) => s.error("labels", "module labels", &e),
    }
    s.finish()
}

pub fn codes_suite() -> Report {
    let mut s = Suite::new("codes", "tetracode and ternary Golay code");
    let t = codes::tetracode_shifted();
    s.eq("c4.size", "|C4|", 9, t.words().len());
    s.eq("c4.min_weight", "min weight of C4", 3, t.min_weight());
    s.flag("c4.self_dual", "C4 is self-dual", t.is_self_dual());
    let g = codes::golay12();
    s.eq("c12.size", "|C12|", 729, g.words().len());
    s.flag("c12.self_dual", "C12 is self-dual", g.is_self_dual());
    s.eq("c12.min_weight", "min weight of C12", 6, g.min_weight());
    let wd = g.weight_distribution();
    s.eq("c12.weights", "weight distribution (0, 6, 9, 12)", "1, 264, 440, 24", format!("{}, {}, {}, {}", wd[0], wd[6], wd[9], wd[12]));
    s.flag("c12.d1", "d¹ ∈ C12", g.contains(&niemeier::d1()));
    s.flag("c12.d2", "d² ∈ C12", g.contains(&niemeier::d2()));
    s.finish()
}

pub fn leech_suite(enumerate_shell: bool) -> Report {
    let mut s = Suite::new("leech", "Niemeier A2^12 to Leech");
    if let Some(v) = s.attempt("chain", "Niemeier and Leech invariants", || appendix::leech_chain_checks(enumerate_shell)) {
        s.verifications("chain", &v);
    }
    if !enumerate_shell {
        s.skip("chain.leech_norm_4_vectors", "Leech norm-4 vectors (slow)", 196560);
    }
    if let Some(v) = s.attempt("embedding", "E8 triple inside the Leech lattice", appendix::leech_embedding_checks) {
        s.verifications("embedding", &v);
    }
    s.finish()
}

pub fn appendix_suite() -> Report {
    let mut s = Suite::new("appendix", "SU(3) matrices and the E8 triple");
    s.verifications("su3", &appendix::su3_checks());
    s.verifications("theta", &appendix::theta_checks());
    if let Some(v) = s.attempt("triple", "R, R1, R2 in E8 + E8", appendix::triple_checks) {
        s.verifications("triple", &v);
    }
    s.finish()
}

/// Every algebra the suites construct; `big` adds the 156-dimensional one.
pub fn algebras(big: bool) -> Result<Vec<(FDAlgebra, Vec<Vec<CycNum>>)>> {
    let mut out = Vec::new();
    for node in Node::ALL {
        let c = commutant::build_commutant_griess(node)?;
        let p = commutant::tilde_v_pair(&c)?;
        let mut vs = vec![p.v, p.v_prime];
        vs.extend((0..c.case.frame.len()).map(|k| c.algebra.basis(k)));
        out.push((c.algebra, vs));
    }
    let t = u3a::table();
    let mut vs: Vec<_> = (0..3).map(u3a::ising).collect();
    vs.extend((0..3).map(u3a::x_vector));
    vs.push(t.basis(0));
    vs.push(t.basis(1));
    out.push((t, vs));
    let o = u3a::from_orbit()?;
    let vs = (0..3).map(|k| o.algebra.basis(k)).collect();
    out.push((o.algebra, vs));
    let nine = orbit::nine_orbit()?;
    let st = orbit::stabilizer(&nine)?;
    let u = nine.algebra.coords_of(&nine.frame.a2_vector)?;
    let v = nine.algebra.coords_of(&nine.frame.e6_vector)?;
    let mut vs = nine.vectors.clone();
    vs.push(u);
    vs.push(v);
    out.push((st.kernel.clone(), vec![st.v.clone()]));
    out.push((nine.algebra, vs));
    if big {
        let sp = W2Space::new(RootKind::E8)?;
        let alg = sp.even_algebra()?;
        let e = sp.to_even(&sp.tilde_omega_full()?)?;
        out.push((alg, vec![e]));
    }
    Ok(out)
}

/// Structural properties of every constructed algebra and completeness of
/// the eigenspace decomposition for the Virasoro vectors analyzed in it.
pub fn properties_suite(big: bool) -> Report {
    let mut s = Suite::new("properties", "structural properties of the constructed algebras");
    let Some(algs) = s.attempt("build", "constructed algebras", || algebras(big)) else {
        return s.finish();
    };
    let results: Vec<_> = algs
        .par_iter()
        .map(|(a, vs)| {
            let rep = props::run_all(a, NORTON_SAMPLES);
            let spectra: Vec<std::result::Result<usize, String>> = vs
                .iter()
                .filter(|v| a.central_charge(v).as_rational().and_then(mm::series_index).is_some()).map(|v| ad_spectrum(a, v).map(|sp| sp.spaces.iter().map(|x| x.1.len()).sum()).map_err(|e| e.to_string())).collect();
            (rep, spectra)
        })
        .collect();
    for ((a, _), (rep, spectra)) in algs.iter().zip(results) {
        let id = slug(&a.name);
        s.flag(&format!("{id}.commutative"), &format!("{} is commutative", a.name), rep.commutative);
        s.flag(&format!("{id}.symmetric"), &format!("form on {} is symmetric", a.name), rep.form_symmetric);
        s.flag(&format!("{id}.invariant"), &format!("form on {} is invariant", a.name), rep.invariant);
        s.flag(&format!("{id}.star"), &format!("star on {} is a conjugate-linear automorphism", a.name), rep.star_automorphism);
        s.flag(&format!("{id}.positive"), &format!("Hermitian form on {} is positive definite", a.name), rep.positive_definite);
        s.flag(&format!("{id}.norton"), &format!("Norton inequality on {} sampled pairs in {}", rep.norton_samples, a.name), rep.norton_ok);
        for (k, r) in spectra.iter().enumerate() {
            match r {
                Ok(d) => s.eq(&format!("{id}.spectrum.{k}"), &format!("eigenspaces of vector {k} fill {}", a.name), a.dim(), d),
                Err(e) => s.eq(&format!("{id}.spectrum.{k}"), &format!("eigenspaces of vector {k} fill {}", a.name), a.dim(), e),
            }
        }
    }
    s.finish()
}

/// Named lattice: a root type (`E8`, `sqrt2E6`, ...), `niemeier`, `leech`,
/// `e8-tetracode`, or a lattice file.
pub fn named_lattice(name: &str) -> Result<IntegralLattice> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "leech" => return niemeier::leech_from_niemeier().leech.lattice(),
        "niemeier" | "n" => return niemeier::leech_from_niemeier().niemeier.lattice(),
        "n0" => return niemeier::leech_from_niemeier().niemeier_zero.lattice(),
        "e8-tetracode" => return niemeier::e8_from_tetracode().lattice(),
        _ => {}
    }
    let (scale, rest) = match name.strip_prefix("sqrt2") {
        Some(r) => (2, r),
        None => (1, name),
    };
    if let Ok(kind) = rest.parse::<RootKind>() {
        return Ok(roots::build_root_lattice(kind, scale)?.lattice);
    }
    let path = std::path::Path::new(name);
    if path.exists() {
        return IntegralLattice::load(path);
    }
    Err(Error::Parse(format!("unknown lattice {name}")))
}

pub fn lattice_suite(name: &str, short_vectors: Option<i64>) -> Report {
    let mut s = Suite::new("lattice", "lattice invariants");
    let Some(l) = s.attempt("load", &format!("lattice {name}"), || named_lattice(name)) else {
        return s.finish();
    };
    s.eq("rank", "rank", l.rank(), l.rank());
    s.eq("det", "determinant", l.det(), l.det());
    s.eq("even", "even", l.is_even(), l.is_even());
    s.eq("unimodular", "unimodular", l.is_unimodular(), l.is_unimodular());
    let (red, _) = l.reduced();
    s.eq("min_norm", "minimal norm", red.min_norm(), red.min_norm());
    if let Some(n) = short_vectors {
        let k = enumerate::short_vectors(&red.gram, n).len();
        s.eq("short_vectors", &format!("vectors of norm {n}"), k, k);
    }
    s.finish()
}

/// Every suite; the Leech shell enumeration runs last unless `skip_slow`.
pub fn report_all(skip_slow: bool) -> Bundle {
    let jobs: Vec<Box<dyn Fn() -> Report + Send + Sync>> = vec![
        Box::new(central_charges),
        Box::new(ising_e8),
        Box::new(|| commutant(Node::N1A)),
        Box::new(|| commutant(Node::N2A)),
        Box::new(|| commutant(Node::N3A)),
        Box::new(|| u3a_suite(true)),
        Box::new(|| involutions_suite(InvolutionTarget::Node(Node::N1A))),
        Box::new(|| involutions_suite(InvolutionTarget::Node(Node::N2A))),
        Box::new(|| involutions_suite(InvolutionTarget::Node(Node::N3A))),
        Box::new(|| involutions_suite(InvolutionTarget::E8Orbit)),
        Box::new(minimal_models_suite),
        Box::new(codes_suite),
        Box::new(appendix_suite),
        Box::new(move || properties_suite(!skip_slow)),
    ];
    let mut reports: Vec<Report> = jobs.par_iter().map(|f| f()).collect();
    reports.push(leech_suite(!skip_slow));
    Bundle { schema: SCHEMA, reports }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pretty_names() {
        assert_eq!(pretty("80 w1 + 96 w2"), "80ω¹+96ω²");
        assert_eq!(pretty("20 X2"), "20X²");
        assert_eq!(pretty("X+"), "X+");
    }

    #[test]
    fn fusion_vacuum_label() {
        let r = fusion_suite(4, (5, 1), (5, 1));
        assert!(r.passed());
        assert!(r.checks[0].description.ends_with("= L(6/7,0)"), "{}", r.checks[0].description);
    }

    #[test]
    fn codes_pass() {
        assert!(codes_suite().passed());
    }
}
