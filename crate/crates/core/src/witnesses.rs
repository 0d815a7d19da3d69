//! Replays of explicit conjugations used in the classification, and a seeded
//! sweep of random subalgebras of `𝔫` through the schema matcher.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{exp_ad, root_coroot, AlgElement};
use crate::catalog::{schema_check, Status, TableId, VerificationReport};
use crate::roots::{Root, POSITIVE_ROOTS};
use crate::scalar::{rat, FieldElement, Rational};
use crate::subspace::{generated_subalgebra, is_regular_form, is_subalgebra, span, Subspace};

const W: TableId = TableId::Witnesses;

fn fe(q: &Rational) -> FieldElement {
    FieldElement::from_rational(q.clone())
}

fn x(a: i64, b: i64) -> AlgElement {
    AlgElement::xr(a, b)
}

fn sc(v: AlgElement, q: &Rational) -> AlgElement {
    v.scale(&fe(q))
}

/// `√q` when `q` is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// Small rationals `p/q`, `|p| ≤ 6`, `q ≤ 4`, without repeats, in a fixed order.
fn small_rationals() -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for q in 1..=4 {
        for p in -6..=6 {
            let r = rat(p, q);
            if !out.contains(&r) {
                out.push(r);
            }
        }
    }
    out
}

pub fn conjugation_witnesses() -> VerificationReport {
    let mut r = VerificationReport::default();
    witness_c_minus_two_thirds(&mut r);
    witness_s0(&mut r);
    witness_s1(&mut r);
    witness_s3(&mut r);
    witness_regularize(&mut r, "L3", Root::of(1, 0), Root::of(3, 2));
    witness_regularize(&mut r, "L4", Root::of(0, 1), Root::of(2, 1));
    r
}

fn witness_c_minus_two_thirds(r: &mut VerificationReport) {
    let g = exp_ad(&FieldElement::from_frac(-2, 3), &x(1, 0))
        .and_then(|a| Ok(a.compose(&exp_ad(&FieldElement::one(), &x(-1, 0))?)))
        .expect("root vectors are nilpotent");
    let v = &(&(&x(0, 1) + &x(1, 1)) + &x(2, 1)) - &x(3, 1);
    let img = g.apply(&v);
    r.check(W, "COR1", "c=-2/3", img == x(3, 1).scale_int(-1), format!("image={img}"));
}

/// `exp(d ad X_{−α}) ∘ exp(c ad X_α)` applied to `C(X_β + λX_{3α+β}) ⊕ C(X_{α+β} + X_{2α+β})`.
fn s0_image(lambda: &Rational, a1: &Rational) -> Option<Subspace> {
    let a2 = a1 * a1;
    if a2 == *a1 {
        return None;
    }
    let c = (lambda + &a2) / (rat(2, 1) * (&a2 - a1));
    if *a1 == c {
        return None;
    }
    let d = (rat(3, 1) * (a1 - &c)).recip();
    let g = exp_ad(&fe(&d), &x(-1, 0))
        .and_then(|e| Ok(e.compose(&exp_ad(&fe(&c), &x(1, 0))?)))
        .expect("root vectors are nilpotent");
    let s = span(&[&x(0, 1) + &sc(x(3, 1), lambda), &x(1, 1) + &x(2, 1)]);
    Some(s.transform(&g))
}

fn witness_s0(r: &mut VerificationReport) {
    let mut samples = vec![(rat(-1, 1), rat(-1, 3))];
    // λ with a rational root a₁ of 3a⁴ + 4(λ−1)a³ − 6λa² − λ² = 0, solved for λ.
    for a in small_rationals() {
        if samples.len() >= 4 {
            break;
        }
        let p = rat(4, 1) * &a * &a * &a - rat(6, 1) * &a * &a;
        let q = rat(3, 1) * &a * &a * &a * &a - rat(4, 1) * &a * &a * &a;
        let Some(root) = rational_sqrt(&(&p * &p + rat(4, 1) * &q)) else { continue };
        let lambda = (&p + &root) / rat(2, 1);
        if lambda.is_zero() || lambda == rat(-1, 1) || samples.iter().any(|(l, _)| *l == lambda) {
            continue;
        }
        if s0_image(&lambda, &a).is_some() {
            samples.push((lambda, a));
        }
    }
    let target = span(&[x(0, 1), x(1, 1), x(3, 1)]);
    for (lambda, a1) in samples {
        let row = format!("S0:lambda={lambda},a1={a1}");
        match s0_image(&lambda, &a1) {
            Some(img) => {
                let ok = img.contains(&x(1, 1)) && target.contains_space(&img) && img.dim() == 2;
                r.check(W, &row, "pivot_pattern", ok, format!("{img}"));
            }
            None => r.record(W, &row, "pivot_pattern", Status::Fail, "degenerate parameters"),
        }
    }
}

fn witness_s1(r: &mut VerificationReport) {
    let mut found = 0;
    'search: for mu in small_rationals() {
        for a1 in small_rationals() {
            if &a1 * &a1 == mu {
                continue;
            }
            // Equation in ν: ν² − 4Bν − 4C = 0.
            let b = &a1 * &a1 * &a1 - (rat(3, 1) * &mu + rat(1, 1)) * &a1 / rat(2, 1);
            let c0 = &a1 * &a1 * &a1 * &a1
                + (rat(3, 1) * &mu * &mu - rat(6, 1) * &mu - rat(1, 1)) / rat(4, 1) * &a1 * &a1
                - &mu * &mu * &mu;
            let Some(root) = rational_sqrt(&(&b * &b + &c0)) else { continue };
            let nu = rat(2, 1) * (&b + &root);
            let c = (&nu + &mu * &a1 + &a1) / (rat(2, 1) * (&a1 * &a1 - &mu));
            let g = exp_ad(&fe(&c), &x(1, 0)).expect("root vectors are nilpotent");
            let v = &(&(&x(0, 1) + &sc(x(2, 1), &mu)) + &sc(x(3, 1), &nu)) + &sc(&x(1, 1) + &x(3, 1), &a1);
            let img = g.apply(&v);
            let want = &x(0, 1) + &sc(x(1, 1), &(&a1 - &c));
            let row = format!("S1:mu={mu},nu={nu},a1={a1}");
            r.check(W, &row, "image", img == want, format!("image={img}"));
            found += 1;
            if found == 3 {
                break 'search;
            }
        }
    }
    if found == 0 {
        r.record(W, "S1", "image", Status::Skipped("no rational point found".into()), "");
    }
    r.record(
        W,
        "S1:mu=-1,nu=0",
        "image",
        Status::Skipped("needs c = sqrt(-1), outside Q(s2,s3,s5)".into()),
        "",
    );
    r.record(
        W,
        "S1:generic",
        "image",
        Status::Skipped("quartic roots outside Q(s2,s3,s5)".into()),
        "",
    );
}

fn witness_s3(r: &mut VerificationReport) {
    for a1 in [rat(1, 1), rat(2, 1), rat(-1, 1), rat(1, 2), rat(-3, 1)] {
        let lambda = -(rat(1, 1) + &a1 * &a1 * &a1) / &a1;
        let row = format!("S3:a1={a1},lambda={lambda}");
        let omega = &(&(&x(0, 1) + &x(3, 1)) + &sc(&x(1, 1) + &sc(x(3, 1), &lambda), &a1)) + &sc(x(2, 1), &(&a1 * &a1));
        let g = exp_ad(&fe(&a1.recip()), &x(-1, 0)).expect("root vectors are nilpotent");
        let img = g.apply(&omega);
        let want = sc(x(3, 1), &(rat(1, 1) + &a1 * &lambda));
        r.check(W, &row, "omega_image", img == want, format!("image={img}"));
        let s = span(&[&x(0, 1) + &x(3, 1), &x(1, 1) + &sc(x(3, 1), &lambda), x(2, 1), x(3, 2)]);
        let t = s.transform(&g);
        let target = span(&[x(0, 1), x(1, 1), x(2, 1), x(3, 1), x(3, 2)]);
        let ok = is_subalgebra(&s) && target.contains_space(&t) && t.contains(&x(3, 1)) && t.contains(&x(3, 2));
        r.check(W, &row, "subalgebra_image", ok, format!("{t}"));
    }
}

/// `S ⊕ C(a H_γ + b X_γ)` with `S = ⟨H_δ, X_{±δ}⟩` becomes `S ⊕ C H_γ` under
/// `exp(b/(2a) · ad X_γ)`.
fn witness_regularize(r: &mut VerificationReport, label: &str, delta: Root, gamma: Root) {
    for (a, b) in [(rat(1, 1), rat(1, 1)), (rat(2, 1), rat(-3, 1)), (rat(1, 2), rat(5, 1))] {
        let row = format!("{label}:a={a},b={b}");
        let levi = [root_coroot(delta), AlgElement::x(delta), AlgElement::x(delta.neg())];
        let mut gens = levi.to_vec();
        gens.push(&sc(root_coroot(gamma), &a) + &sc(AlgElement::x(gamma), &b));
        let s = span(&gens);
        let d = &b / (rat(2, 1) * &a);
        let g = exp_ad(&fe(&d), &AlgElement::x(gamma)).expect("root vectors are nilpotent");
        let t = s.transform(&g);
        let mut want = levi.to_vec();
        want.push(root_coroot(gamma));
        let ok = is_subalgebra(&s) && !is_regular_form(&s) && is_regular_form(&t) && t == span(&want);
        r.check(W, &row, "regularized", ok, format!("{t}"));
    }
}

/// A random subalgebra of `𝔫`: generated by one to three sparse integer combinations.
pub fn random_nilradical_subalgebra(rng: &mut ChaCha8Rng) -> Subspace {
    let positive: Vec<Root> = POSITIVE_ROOTS.roots().collect();
    let k = rng.gen_range(1..=3);
    let gens: Vec<AlgElement> = (0..k)
        .map(|_| {
            let terms = rng.gen_range(1..=3);
            (0..terms).fold(AlgElement::zero(), |acc, _| {
                let r = positive[rng.gen_range(0..positive.len())];
                let c = [-2, -1, 1, 2, 3][rng.gen_range(0..5)];
                &acc + &AlgElement::x(r).scale_int(c)
            })
        })
        .collect();
    generated_subalgebra(&gens)
}

/// Runs the schema matcher over `count` seeded random subalgebras of `𝔫`.
pub fn fuzz_schema(seed: u64, count: usize) -> VerificationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = VerificationReport::default();
    for i in 0..count {
        let s = random_nilradical_subalgebra(&mut rng);
        let (ok, details) = schema_check(&s, None);
        r.check(TableId::T10, &format!("fuzz{i}"), "schema_total", ok, format!("seed={seed} {details}"));
    }
    r
}
