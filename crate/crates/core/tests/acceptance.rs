//! One line per acceptance criterion. Runs without the test harness so the
//! lines always show up in the output.

mod common;

use g2_core::algebra::{ad_rank, exp_ad, rescaling_automorphism, weyl_as_automorphism, AlgElement, StructureConstants};
use g2_core::catalog::{entries, verify_table, TableId};
use g2_core::nilpotent::classify_nilpotent;
use g2_core::parse::{parse_element, parse_element_list};
use g2_core::regular::{classify_regular_types, counts_by_dimension};
use g2_core::reps::{dynkin_index, verify_triple, Sl2Triple};
use g2_core::roots::ROOTS;
use g2_core::scalar::{rat, FieldElement};
use g2_core::subspace::{normalizer, span};
use g2_core::witnesses::fuzz_schema;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    /// A failure that matches a documented erratum exactly.
    known: bool,
    details: String,
}

fn pass_if(pass: bool, details: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        known: false,
        details: details.into(),
    }
}

fn c1_jacobi() -> Outcome {
    let bad = common::jacobi_failures();
    pass_if(bad == 0, format!("2744 basis triples, {bad} failures"))
}

fn c2_constants() -> Outcome {
    let pairs = ROOTS
        .iter()
        .flat_map(|m| ROOTS.iter().map(move |n| (*m, *n)))
        .filter(|(m, n)| ROOTS.iter().any(|r| r.a() == m.a() + n.a() && r.b() == m.b() + n.b()))
        .count();
    let c = StructureConstants::standard().check();
    pass_if(
        pairs == 60 && c.covered == 60 && c.is_complete(),
        format!("root pairs={pairs} covered={} conflicts={}", c.covered, c.conflicts.len()),
    )
}

fn c3_ranks() -> Outcome {
    let reps = ["X[0,1]", "X[1,0]", "X[1,0]+X[3,2]", "X[1,0]+X[0,1]"];
    let ranks: Vec<usize> = reps.iter().map(|s| ad_rank(&parse_element(s).unwrap())).collect();
    pass_if(ranks == [6, 8, 10, 12], format!("ranks={ranks:?}"))
}

fn c4_census() -> Outcome {
    let classes = classify_regular_types();
    let counts = counts_by_dimension(&classes);
    let middle = &counts[1..=9];
    pass_if(
        middle == [3, 6, 11, 13, 11, 8, 4, 4, 2] && classes.len() == 64,
        format!("dims 1-9 {middle:?}, total {}", classes.len()),
    )
}

/// `Σ γ(f)² / 16` over the roots, for `f` in the Cartan subalgebra.
fn index_oracle(f: &AlgElement) -> FieldElement {
    let sum = ROOTS
        .iter()
        .fold(FieldElement::zero(), |acc, r| &acc + &(&f.root_value(*r) * &f.root_value(*r)));
    &sum * &FieldElement::from_frac(1, 16)
}

fn c5_table2() -> Outcome {
    let mut found = Vec::new();
    let mut ok = true;
    for e in entries(TableId::T2) {
        let t = Sl2Triple::new(
            parse_element(e.get("f").unwrap()).unwrap(),
            parse_element(e.get("e_plus").unwrap()).unwrap(),
            parse_element(e.get("e_minus").unwrap()).unwrap(),
        );
        ok &= verify_triple(&t).is_ok();
        let idx = dynkin_index(&t).unwrap();
        ok &= FieldElement::from_rational(idx.clone()) == index_oracle(&t.f);
        found.push(idx.to_string());
    }
    found.sort_by_key(|s| s.parse::<i64>().unwrap());
    ok &= found == ["1", "3", "4", "28"];
    pass_if(ok, format!("indices {}", found.join(",")))
}

fn c6_prop2() -> Outcome {
    let r = verify_table(TableId::Prop2);
    let sums = r.entries.iter().filter(|e| e.check == "direct_sum").count();
    pass_if(
        r.ok() && sums == 6,
        format!("{} checks, {} failed, {sums} decompositions total 14", r.entries.len(), r.failed()),
    )
}

fn c7_normalizers() -> Outcome {
    let mut exact = 0;
    let mut mismatches = Vec::new();
    let mut erratum_ok = true;
    let rows = entries(TableId::T40);
    for e in &rows {
        let mut gens = parse_element_list(e.get("sub").unwrap()).unwrap();
        if let Some(term) = e.get("lambda_term") {
            gens[0] = &gens[0] + &parse_element(term).unwrap().scale(&FieldElement::from_rational(rat(2, 1)));
        }
        let n = normalizer(&span(&gens));
        let published = span(&parse_element_list(e.get("normalizer").unwrap()).unwrap());
        if n == published {
            exact += 1;
        } else {
            mismatches.push(format!("row {} published dim {} computed {}", e.row, published.dim(), n.dim()));
            let corrected = e.get("corrected_normalizer").map(|c| span(&parse_element_list(c).unwrap()));
            erratum_ok &= corrected == Some(n.clone()) && e.get("erratum").is_some();
        }
    }
    let corrected_report = verify_table(TableId::T40);
    let pass = mismatches.is_empty() && corrected_report.ok();
    Outcome {
        pass,
        known: !pass && erratum_ok && corrected_report.ok(),
        details: format!(
            "{exact}/{} rows equal the published normalizer; {}",
            rows.len(),
            if mismatches.is_empty() { "no mismatches".to_string() } else { mismatches.join("; ") }
        ),
    }
}

fn c8_table3() -> Outcome {
    let r = verify_table(TableId::T3);
    let lambda_rows = ["9", "21"]
        .iter()
        .map(|row| {
            r.for_row(TableId::T3, row)
                .iter()
                .filter(|e| e.check.starts_with("subalgebra@"))
                .count()
        })
        .collect::<Vec<_>>();
    let rows = entries(TableId::T3).len();
    pass_if(
        r.ok() && rows == 49 && lambda_rows == [4, 4],
        format!("{rows} rows, {} checks, {} failed, lambda samples {lambda_rows:?}", r.entries.len(), r.failed()),
    )
}

fn c9_witnesses() -> Outcome {
    let g = exp_ad(&FieldElement::from_frac(-2, 3), &AlgElement::xr(1, 0))
        .unwrap()
        .compose(&exp_ad(&FieldElement::one(), &AlgElement::xr(-1, 0)).unwrap());
    let v = parse_element("X[0,1]+X[1,1]+X[2,1]-X[3,1]").unwrap();
    let direct = g.apply(&v) == parse_element("-X[3,1]").unwrap();
    let r = verify_table(TableId::Witnesses);
    pass_if(
        direct && r.ok(),
        format!("c=-2/3 exact={direct}; {} pass, {} fail, {} skipped", r.passed(), r.failed(), r.skipped()),
    )
}

fn c10_properties() -> Outcome {
    let params = [FieldElement::one(), FieldElement::from_frac(-2, 3), FieldElement::sqrt(3)];
    let mut autos = 0;
    let mut bad = 0;
    for r in ROOTS {
        let mut maps = vec![weyl_as_automorphism(r)];
        maps.extend(params.iter().map(|c| exp_ad(c, &AlgElement::x(r)).unwrap()));
        for m in maps {
            autos += 1;
            bad += usize::from(!m.preserves_brackets());
        }
    }
    for (u, v) in [(2, 3), (-1, 5)] {
        autos += 1;
        let m = rescaling_automorphism(&FieldElement::from_int(u), &FieldElement::from_int(v)).unwrap();
        bad += usize::from(!m.preserves_brackets());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut conj_bad = 0;
    for (x, dim) in common::orbit_representatives() {
        let label = classify_nilpotent(&x).unwrap();
        for _ in 0..20 {
            let y = common::random_automorphism(&mut rng).apply(&x);
            conj_bad += usize::from(ad_rank(&y) != dim || classify_nilpotent(&y).unwrap() != label);
        }
    }
    let fuzz = fuzz_schema(42, 200);
    pass_if(
        bad == 0 && conj_bad == 0 && fuzz.ok() && fuzz.entries.len() == 200,
        format!(
            "{autos} automorphisms ({bad} bad), 80 conjugations ({conj_bad} bad), 200 fuzz subalgebras ({} unmatched)",
            fuzz.failed()
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("Jacobi identity", c1_jacobi),
        ("structure-constant completeness", c2_constants),
        ("nilpotent orbit ranks", c3_ranks),
        ("regular-type census", c4_census),
        ("sl2 embeddings and Dynkin indices", c5_table2),
        ("adjoint decompositions", c6_prop2),
        ("normalizer table", c7_normalizers),
        ("solvable non-regular table", c8_table3),
        ("witness replay", c9_witnesses),
        ("property suites", c10_properties),
    ];
    let mut unexpected = 0;
    let mut passed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let status = match (o.pass, o.known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (documented erratum)",
            (false, false) => "FAIL",
        };
        println!("criterion {:>2} {status}: {name}: {}", i + 1, o.details);
        passed += usize::from(o.pass);
        unexpected += usize::from(!o.pass && !o.known);
    }
    println!("acceptance: {passed}/10 criteria pass, {unexpected} unexpected failures");
    if unexpected > 0 {
        std::process::exit(1);
    }
}
