//! Exit criteria, one line each. Expected values are restated here
//! independently of the built-in locus table.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hypermoduli_core::a4::{
    a4_orbit_polynomial, build_g, klein_phi, l5_gradient, l5_is_singular, l5_relation,
    rational_model, LocusTable, LocusValue, ModelVariant, P1,
};
use hypermoduli_core::arith::{
    parse_rational, rat, CycloElement, RatFunc, Rational, Ring, UniPoly,
};
use hypermoduli_core::cyclic::{
    orbit_count, reconstruct_from_u, CyclicNormalForm, HGenerator, NormalFormCase,
};
use hypermoduli_core::forms::{
    absolute_invariants, classify_point, gl2_act, transvectant, vanishing_profile, BinaryForm,
    Branch, Catalogue, Invariant, A4_GENERA,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;

type Q = UniPoly<Rational>;
type K = RatFunc<Rational>;

struct Outcome {
    lines: Vec<(String, bool)>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            lines: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.lines.push((name.into(), ok));
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.1)
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(n: u32, title: &str, limit: Duration, f: impl FnOnce(&mut Outcome)) -> bool {
    let mut out = Outcome::new();
    let start = Instant::now();
    f(&mut out);
    let took = start.elapsed();
    out.check(
        format!("finished within {}s", limit.as_secs()),
        took < limit,
    );
    let ok = out.passed();
    println!(
        "criterion {n}: {} {title} ({:.2}s)",
        mark(ok),
        took.as_secs_f64()
    );
    for (name, pass) in &out.lines {
        println!("    [{}] {name}", mark(*pass));
    }
    for note in &out.notes {
        println!("    note: {note}");
    }
    ok
}

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn int_pow(b: i64, e: u32) -> Rational {
    Rational::from_integer(BigInt::from(b).pow(e))
}

// c * prod num^e / prod den^e
fn factored(c: &str, num: &[(&[i64], u32)], den: &[(&[i64], u32)]) -> K {
    let prod = |fs: &[(&[i64], u32)]| {
        fs.iter()
            .fold(Q::one(), |acc, (p, e)| acc * &Q::from_ints(p).pow(*e))
    };
    K::new(prod(num).mul_scalar(&q(c)), prod(den)).unwrap()
}

fn expected_generic(g: u32) -> Vec<K> {
    const MU: &[i64] = &[0, 1];
    match g {
        5 => vec![
            factored("49/3630", &[(&[-484, 5], 2)], &[(&[924, 5], 2)]),
            factored("10/27951", &[(MU, 1), (&[30492, 5], 2)], &[(&[924, 5], 3)]),
        ],
        7 => {
            let cubic: &[i64] = &[1549769, -838068, 49566, 1093];
            vec![
                factored(
                    "6/245",
                    &[(&[1606, 97], 2), (&[2596, 528, 87], 2)],
                    &[(cubic, 2)],
                ),
                factored(
                    "301158/30625",
                    &[(&[-6556, -44, 61], 2), (&[-157476, 1496, 2021], 1)],
                    &[(cubic, 2)],
                ),
            ]
        }
        8 => vec![
            factored("49/11236320", &[(&[15028, 279], 2)], &[(&[884, 7], 2)]),
            factored(
                "1/1360026486",
                &[(MU, 1), (&[3321188, 3675], 2)],
                &[(&[884, 7], 3)],
            ),
        ],
        9 => vec![
            factored("605/5633766", &[(&[-7200, 9], 2)], &[(&[836, 3], 2)]),
            factored(
                "90/370680937",
                &[(MU, 1), (&[79420, 157], 2)],
                &[(&[836, 3], 3)],
            ),
        ],
        10 => {
            let (l251, q115, l181, q3813): (&[i64], &[i64], &[i64], &[i64]) = (
                &[-782, 251],
                &[-6596, -68, 115],
                &[1598, 181],
                &[-39236, 15912, 3813],
            );
            vec![
                factored(
                    "147/90250",
                    &[(l181, 2), (q3813, 2)],
                    &[(l251, 2), (q115, 2)],
                ),
                factored(
                    "5007792000/121",
                    &[(&[-374884, 3128, 7877], 2), (q115, 2)],
                    &[(l251, 2), (l181, 2), (q3813, 2)],
                ),
            ]
        }
        12 => vec![
            factored("1/268203000", &[(&[-501500, 6611], 2)], &[(&[1700, 11], 2)]),
            factored(
                "56/284015801875",
                &[(MU, 1), (&[-5686500, 20933], 2)],
                &[(&[1700, 11], 2)],
            ),
        ],
        _ => unreachable!(),
    }
}

fn generic_point(g: u32) -> Vec<K> {
    let f = rational_model(g, &Q::x(), ModelVariant::Corrected).unwrap();
    classify_point(&f, g).unwrap().values
}

fn criterion1(out: &mut Outcome) {
    let f = build_g(&Q::x());
    let i4 = Catalogue::new(f).unwrap().invariant(Invariant::I4).unwrap();
    out.check(
        "I4 of the degree-12 family is the zero polynomial in lambda",
        i4.is_zero(),
    );
}

fn criterion2(out: &mut Outcome) {
    let expected = [
        (
            4,
            "0",
            Rational::from_integer(1764.into()) / Rational::from_integer(25.into()),
        ),
        (
            5,
            "-924/5",
            int_pow(3, 7) * int_pow(5, 3) / (int_pow(2, 5) * int_pow(7, 2)),
        ),
        (
            8,
            "-884/7",
            int_pow(2, 3) * int_pow(3, 11) * int_pow(101, 4)
                / (int_pow(5, 3) * int_pow(7, 4) * int_pow(13, 6)),
        ),
        (
            9,
            "-836/3",
            -(int_pow(2, 9) * int_pow(5, 1) * int_pow(11, 2)) / int_pow(3, 7),
        ),
        (
            12,
            "-1700/11",
            int_pow(2, 1) * int_pow(3, 3) * int_pow(5, 1) * int_pow(41, 4)
                / (int_pow(7, 4) * int_pow(11, 2) * int_pow(17, 2)),
        ),
    ];
    for (g, mu, want) in expected {
        let t = Instant::now();
        let f = rational_model(g, &q(mu), ModelVariant::Corrected).unwrap();
        let p = classify_point(&f, g).unwrap();
        let got = p.values.first().cloned().unwrap_or_else(Rational::zero);
        let fast = t.elapsed() < Duration::from_secs(120);
        out.check(
            format!("g = {g}, mu = {mu}: {} = {got}, expected {want}", p.branch),
            got == want && fast,
        );
    }
    out.note("g = 5 recomputes to the reciprocal of the expected constant; g = 9 recomputes with the opposite sign");
}

fn criterion3(out: &mut Outcome) {
    let table = LocusTable::builtin();
    for g in [5, 7, 8, 9, 10, 12] {
        let t = Instant::now();
        let got = generic_point(g);
        let want = expected_generic(g);
        let entry = table.get(g).unwrap();
        let mut mismatched = Vec::new();
        for (k, (a, b)) in got.iter().zip(&want).enumerate() {
            if a != b {
                mismatched.push(entry.components[k].invariant.name());
            }
        }
        let fast = t.elapsed() < Duration::from_secs(600);
        let branch_ok = classify_point(
            &rational_model(g, &Q::x(), ModelVariant::Corrected).unwrap(),
            g,
        )
        .map(|p| p.branch == entry.branch)
        .unwrap_or(false);
        let ok = match g {
            10 | 12 => {
                // a mismatch may only sit in a component flagged as a suspected typo
                let flagged = mismatched.iter().all(|m| {
                    entry
                        .components
                        .iter()
                        .any(|c| c.invariant.name() == *m && c.transcribed != c.recomputed)
                });
                let special_ok = entry.special.as_ref().is_none_or(|s| {
                    let f = rational_model(g, &s.mu, ModelVariant::Corrected).unwrap();
                    classify_point(&f, g).unwrap().values == [s.transcribed.clone()]
                });
                flagged && special_ok
            }
            _ => mismatched.is_empty(),
        };
        let detail = if mismatched.is_empty() {
            "identical".to_string()
        } else {
            format!("differs in {}", mismatched.join(", "))
        };
        out.check(format!("g = {g}: {detail}"), ok && fast && branch_ok);
        if g == 7 && !mismatched.is_empty() {
            let fixed: Q = Q::from_ints(&[1549768, -838068, 49566, 1093]);
            let agree = got.iter().all(|v| {
                v.den().divides(&fixed.pow(2).monic()) || fixed.pow(2).monic().divides(v.den())
            });
            out.note(format!(
                "g = 7: recomputed denominators are the square of 1093 mu^3 + 49566 mu^2 - 838068 mu + 1549768 ({agree})"
            ));
        }
        if g == 9 && !mismatched.is_empty() {
            out.note(
                "g = 9: the first coordinate recomputes with (9 mu - 7220)^2 in the numerator",
            );
        }
    }
}

fn criterion4(out: &mut Outcome) {
    let table = LocusTable::builtin();
    let p: Vec<K> = table
        .get(5)
        .unwrap()
        .components
        .iter()
        .map(|c| c.recomputed.clone())
        .collect();
    out.check(
        "L5 residual of the parametrization is zero in Q(mu)",
        l5_relation(&p).unwrap().is_zero(),
    );
    out.check(
        "recomputed parametrization agrees with the classifier",
        p == generic_point(5),
    );

    let (da, db) = l5_gradient(&p).unwrap();
    let common = da.num().gcd(db.num()).unwrap();
    let roots = common.rational_roots().unwrap();
    let all_rational = common.squarefree_part().unwrap().degree() == Some(roots.len());
    out.check(
        format!(
            "gradient numerators share gcd {} with only rational roots",
            common.monic()
        ),
        all_rational,
    );
    let mut images = Vec::new();
    for mu in &roots {
        let pt: Vec<Rational> = p.iter().map(|c| c.eval(mu).unwrap()).collect();
        images.push((mu.clone(), pt));
    }
    let origin = [rat(0, 1), rat(1, 84)];
    out.check(
        format!(
            "singular parameters {:?} all map to (0, 1/84)",
            roots.iter().map(|r| r.to_string()).collect::<Vec<_>>()
        ),
        !images.is_empty() && images.iter().all(|(_, pt)| pt == &origin),
    );
    out.check(
        "(0, 1/84) is flagged singular",
        l5_is_singular(&origin).unwrap(),
    );

    // the branch at mu = infinity
    let limit: Vec<Rational> = p
        .iter()
        .map(|c| {
            let (n, d) = (c.num(), c.den());
            if n.degree() == d.degree() {
                n.leading().unwrap().clone() / d.leading().unwrap()
            } else {
                Rational::zero()
            }
        })
        .collect();
    out.check(
        format!(
            "limit point ({}, {}) lies on L5 and is nonsingular",
            limit[0], limit[1]
        ),
        l5_relation(&limit).unwrap().is_zero() && !l5_is_singular(&limit).unwrap(),
    );
}

fn criterion5(out: &mut Outcome) {
    let l = K::from_poly(Q::x());
    let c = |n: i64| K::from_int(n);
    let nf = CyclicNormalForm::new(
        NormalFormCase::Even,
        2,
        5,
        vec![-l.clone(), c(-33), c(2) * &l, c(-33), -l.clone()],
    )
    .unwrap();
    let u = nf.dihedral_invariants();
    let lp = |k: u32, m: i64| c(m) * &l.pow(k);
    let want = vec![lp(6, 2), lp(4, -66), lp(4, -4), lp(2, -66), lp(2, 2)];
    out.check("u = (2l^6, -66l^4, -4l^4, -66l^2, 2l^2)", u.u == want);
    out.check(
        "extra-involution condition holds identically",
        u.extra_involution_condition().unwrap(),
    );
}

fn criterion6(out: &mut Outcome) {
    for g in A4_GENERA {
        let f = rational_model(g, &Q::x(), ModelVariant::Corrected).unwrap();
        let prof = vanishing_profile(&f, g).unwrap();
        let names: Vec<&str> = prof.iter().map(|(i, _)| i.name()).collect();
        out.check(
            format!("g = {g}: {} vanish identically", names.join(", ")),
            prof.iter().all(|(_, z)| *z),
        );
        if ModelVariant::differs(g) {
            let t = rational_model(g, &Q::x(), ModelVariant::Transcribed).unwrap();
            let bad: Vec<&str> = vanishing_profile(&t, g)
                .unwrap()
                .iter()
                .filter(|(_, z)| !z)
                .map(|(i, _)| i.name())
                .collect();
            out.note(format!(
                "g = {g}: the transcribed factor leaves {} nonzero",
                bad.join(", ")
            ));
        }
    }
}

const INSTANCES: usize = 50;

fn cyclic_shapes(ts: &[u32]) -> Vec<(NormalFormCase, u32, u32)> {
    let mut out = Vec::new();
    for case in [
        NormalFormCase::Even,
        NormalFormCase::Odd,
        NormalFormCase::Marked,
    ] {
        for g in 2..=12 {
            for n in 2..=26 {
                if orbit_count(case, n, g).is_ok_and(|t| ts.contains(&t)) {
                    out.push((case, n, g));
                }
            }
        }
    }
    out
}

fn random_normal_form<F: hypermoduli_core::arith::Field>(
    rng: &mut StdRng,
    shapes: &[(NormalFormCase, u32, u32)],
    mut coeff: impl FnMut(&mut StdRng) -> F,
) -> CyclicNormalForm<F> {
    let (case, n, g) = shapes[rng.gen_range(0..shapes.len())];
    let t = orbit_count(case, n, g).unwrap() as usize;
    let a = (1..t).map(|_| coeff(rng)).collect();
    CyclicNormalForm::new(case, n, g, a).unwrap()
}

fn criterion7(out: &mut Outcome) {
    let mut rng = common::rng();
    let rng = &mut rng;

    let mut ok = true;
    for _ in 0..INSTANCES {
        let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let (f, g) = (common::form(rng, m, 9), common::form(rng, n, 9));
        ok &= transvectant(&f, &g, 0).unwrap() == f.mul(&g);
    }
    out.check(
        format!("zeroth transvectant is the product ({INSTANCES} pairs)"),
        ok,
    );

    let mut ok = true;
    for _ in 0..INSTANCES {
        let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let (f, g) = (common::form(rng, m, 9), common::form(rng, n, 9));
        let r = rng.gen_range(0..=m.min(n));
        let sign = if r % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
        ok &= transvectant(&f, &g, r).unwrap() == transvectant(&g, &f, r).unwrap().scale(&sign);
    }
    out.check(format!("(f,g)^r = (-1)^r (g,f)^r ({INSTANCES} pairs)"), ok);

    for degree in [8usize, 12] {
        let mut ok = true;
        for _ in 0..INSTANCES {
            let f = common::form(rng, degree, 5);
            let m = common::matrix(rng);
            let (cf, cg) = (
                Catalogue::new(f.clone()).unwrap(),
                Catalogue::new(gl2_act(&m, &f).unwrap()).unwrap(),
            );
            for inv in [Invariant::I2, Invariant::I3, Invariant::I4, Invariant::I4p] {
                if inv.defined_for(degree) {
                    let s = (inv.weight() * degree / 2) as u32;
                    ok &= cg.invariant(inv).unwrap()
                        == cf.invariant(inv).unwrap() * &Ring::pow(&m.det(), s);
                }
            }
        }
        out.check(
            format!("index law for I2, I3, I4, I4' in degree {degree} ({INSTANCES} forms)"),
            ok,
        );
    }

    let mut ok = true;
    for _ in 0..INSTANCES {
        let f = common::form(rng, 10, 6);
        let m = common::matrix(rng);
        let c = common::nonzero_rational(rng, 7);
        let a = absolute_invariants(&f).unwrap();
        ok &= absolute_invariants(&gl2_act(&m, &f).unwrap()).unwrap() == a;
        ok &= absolute_invariants(&f.scale(&c)).unwrap() == a;
    }
    out.check(
        format!("absolute invariants are fixed by GL2 and scaling ({INSTANCES} forms)"),
        ok,
    );

    let shapes = cyclic_shapes(&[2, 3, 4, 6]);
    let mut ok = true;
    for _ in 0..INSTANCES {
        let nf = random_normal_form(rng, &shapes, |r| common::cyclo(r, 20));
        let t = nf.t();
        let eps = CycloElement::primitive_root_of_unity(t)
            .unwrap()
            .pow(rng.gen_range(0..t));
        let u = nf.dihedral_invariants();
        ok &= nf
            .act(&HGenerator::Rotation(eps))
            .unwrap()
            .dihedral_invariants()
            == u;
        ok &= nf
            .act(&HGenerator::Inversion)
            .unwrap()
            .dihedral_invariants()
            == u;
    }
    out.check(
        format!("dihedral invariants are H-invariant ({INSTANCES} normal forms)"),
        ok,
    );

    let shapes = cyclic_shapes(&[2, 3, 4, 5, 6, 7, 8, 9]);
    let (mut ok, mut done) = (true, 0);
    while done < INSTANCES {
        let nf = random_normal_form(rng, &shapes, |r| common::rational(r, 30));
        if nf.coeffs()[0].is_zero() {
            continue;
        }
        let u = nf.dihedral_invariants();
        ok &= reconstruct_from_u(&u)
            .ok()
            .and_then(|r| r.form())
            .is_some_and(|b| b.dihedral_invariants() == u);
        done += 1;
    }
    out.check(
        format!("reconstruction from u round-trips ({INSTANCES} points)"),
        ok,
    );

    let (mut ok, mut done) = (true, 0);
    while done < 20 {
        let t = common::rational(rng, 40);
        let Ok(orbit) = a4_orbit_polynomial(&CycloElement::from_rational(&t)) else {
            continue;
        };
        let Ok(P1::Finite(l)) = klein_phi(&P1::Finite(t.clone())) else {
            continue;
        };
        ok &= orbit == build_g(&CycloElement::from_rational(&l));
        done += 1;
    }
    out.check("orbit polynomial equals G at phi(t) (20 values of t)", ok);

    let table = LocusTable::builtin();
    for g in [5, 7, 8, 9, 10, 12] {
        let (mut ok, mut done) = (true, 0);
        while done < 20 {
            let mu = common::nonzero_rational(rng, 60);
            let Ok(LocusValue::Point(p)) = table.parametrize(g, &mu) else {
                continue;
            };
            if p.branch == Branch::Genus4 || p.values.len() < 2 {
                continue;
            }
            ok &= table
                .recover_mu(g, &p.values)
                .is_ok_and(|m| m.contains(&mu));
            done += 1;
        }
        out.check(
            format!("g = {g}: recover_mu round-trips at 20 values of mu"),
            ok,
        );
    }
}

fn criterion8(out: &mut Outcome) {
    out.note("irreducibility of the Hurwitz spaces is not checked");
    out.note(
        "injectivity of the moduli map is replaced by the recover_mu round trips of criterion 7",
    );
    let f: BinaryForm<Rational> = rational_model(5, &rat(2, 1), ModelVariant::Corrected).unwrap();
    let p = classify_point(&f, 5).unwrap();
    out.check(
        "a model rebuilt from a recovered parameter has the same point",
        {
            let mu = LocusTable::builtin().recover_mu(5, &p.values).unwrap();
            mu.iter().all(|m| {
                classify_point(&rational_model(5, m, ModelVariant::Corrected).unwrap(), 5).unwrap()
                    == p
            })
        },
    );
}

fn main() -> ExitCode {
    // `cargo test` passes harness flags such as --list; only run on a plain invocation
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let secs = Duration::from_secs;
    let results = [
        run(
            1,
            "I4 vanishes on the A4-invariant family",
            secs(5),
            criterion1,
        ),
        run(
            2,
            "special constants from the models",
            secs(5 * 120),
            criterion2,
        ),
        run(
            3,
            "generic parametrizations over Q(mu)",
            secs(6 * 600),
            criterion3,
        ),
        run(
            4,
            "genus 5 relation and its singular point",
            secs(60),
            criterion4,
        ),
        run(
            5,
            "dihedral invariants of the genus 5 family",
            secs(5),
            criterion5,
        ),
        run(6, "vanishing profiles of the models", secs(600), criterion6),
        run(7, "property suites", secs(600), criterion7),
        run(
            8,
            "substitutes for non-checkable claims",
            secs(60),
            criterion8,
        ),
    ];
    let passed = results.iter().filter(|r| **r).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
