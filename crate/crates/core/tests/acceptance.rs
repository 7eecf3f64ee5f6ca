//! Acceptance suite: one pass/fail line per criterion. Runs without the test harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use permsyz::betti::{betti_from_descriptors, betti_p_ghsw, betti_p_summation, crosscheck, Status};
use permsyz::combinat::{hook_dim, lr_coefficients, partitions_of, CharacterTable, Partition};
use permsyz::exactla::{kernel_basis, rank, trace_on_stable, trace_on_subquotient, ExactMatrix, SubspaceBasis};
use permsyz::hilbert::{multidegrees_up_to, verify_additivity};
use permsyz::orbitmod::{descriptors, Ideal, MultidegreePattern, OrbitModule};
use permsyz::render::{render_betti, render_equivariant, EquivariantDoc, Format};
use permsyz::reps::VirtualRep;
use permsyz::resolve::{self, support_check, verify_equivariant, GroupElement, Resolver};
use permsyz::verify::{run_suite, Suite, VerifyOptions};

struct Outcome {
    pass: bool,
    detail: String,
}

fn criterion(id: u8, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let pass = out.pass && in_time;
    println!(
        "criterion {id} [{name}]: {} ({:.2}s, limit {}s) {}{}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs(),
        out.detail,
        if in_time { "" } else { " -- over time limit" }
    );
    pass
}

fn rep(n: usize, terms: &[(&[usize], i64)]) -> VirtualRep {
    VirtualRep::from_terms(n, terms.iter().map(|(p, m)| (Partition::new(p.to_vec()).unwrap(), *m))).unwrap()
}

fn n3_ground_truth() -> Outcome {
    let opts = VerifyOptions {
        n: 3,
        ..Default::default()
    };
    let report = run_suite(Suite::Tor, &opts).unwrap();
    let table = resolve::betti_table(3, Ideal::P, None).unwrap();
    let got: Vec<(usize, usize, BigInt)> = table.entries().map(|(p, q, v)| (p, q, v.clone())).collect();
    let want: Vec<(usize, usize, BigInt)> = [(0, 2, 3), (1, 4, 3), (2, 6, 1)]
        .into_iter()
        .map(|(p, q, v)| (p, q, BigInt::from(v)))
        .collect();
    Outcome {
        pass: report.ok() && got == want,
        detail: format!("beta = {}", render_betti(&table, Format::Csv).unwrap().trim().replace('\n', " ")),
    }
}

fn n4_equivariant() -> Outcome {
    let items = verify_equivariant(Ideal::P, 4).unwrap();
    let all_match = items.iter().all(|it| it.status == Status::Match);

    // The S_4 splitting of the first syzygies, written out by hand.
    let r = Resolver::new(4, Ideal::P);
    let p211 = MultidegreePattern::abc(4, 1, 2, None).unwrap();
    let p1111 = MultidegreePattern::abc(4, 0, 4, None).unwrap();
    let m211 = OrbitModule::new(p211.clone(), vec![rep(1, &[(&[1], 1)]), rep(2, &[(&[1, 1], 1)]), rep(1, &[(&[1], 1)])], None).unwrap();
    let want_211 = m211.decompose().unwrap();
    let want_1111 = rep(4, &[(&[3, 1], 1), (&[2, 2], 2), (&[2, 1, 1], 1)]);
    let got_211 = r.tor_representation(1, &p211).unwrap().restrict_to_sn();
    let got_1111 = r.tor_representation(1, &p1111).unwrap().restrict_to_sn();
    let dims = (m211.dim(), want_1111.dim());
    let split = got_211 == want_211 && got_1111 == want_1111 && dims == (BigInt::from(12), 10);

    // The descriptor side lists exactly these two orbits in Ext^1.
    let descs = descriptors(4, Ideal::P, false).unwrap();
    let ext1: Vec<&OrbitModule> = descs.iter().filter(|d| d.p == 1).flat_map(|d| &d.modules).collect();
    let desc_ok = ext1.iter().map(|m| m.dim()).sum::<BigInt>() == BigInt::from(22);
    Outcome {
        pass: all_match && split && desc_ok,
        detail: format!(
            "{} (p, orbit) items, {} match; Ext^1 = {} (dim {}) + {} (dim {})",
            items.len(),
            items.iter().filter(|it| it.status == Status::Match).count(),
            got_211,
            got_211.dim(),
            got_1111,
            got_1111.dim()
        ),
    }
}

fn concordance() -> Outcome {
    let rows = crosscheck(10).unwrap();
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=10 {
        let from_desc = betti_from_descriptors(n, Ideal::P).unwrap();
        for p in 0..=2 * n {
            for q in p + 1..=p + 5 {
                let s = betti_p_summation(n, p, q);
                if s != betti_p_ghsw(n, p, q) || s != from_desc.get(p, q) {
                    bad.push((n, p, q));
                }
                checked += 1;
            }
        }
    }
    let second_strand_ok = rows.iter().filter(|r| r.q <= r.p + 3).all(|r| r.closed == r.summation);
    let statuses_ok = rows
        .iter()
        .all(|r| r.status == Status::Match || (r.status == Status::DocumentedDiscrepancy && r.q == r.p + 4));
    Outcome {
        pass: bad.is_empty() && second_strand_ok && statuses_ok,
        detail: format!("{checked} (n,p,q) cells, {} disagreements; closed form agrees on the first two strands", bad.len()),
    }
}

fn documented_discrepancy() -> Outcome {
    let rows = crosscheck(4).unwrap();
    let row = rows.iter().find(|r| (r.n, r.p, r.q) == (4, 2, 6));
    let brute = resolve::betti_table(4, Ideal::P, None).unwrap().get(2, 6);
    let opts = VerifyOptions {
        n: 4,
        n_max: 4,
        ..Default::default()
    };
    let report = run_suite(Suite::Crosscheck, &opts).unwrap();
    let flagged = report
        .items
        .iter()
        .any(|it| it.id == "n=4 p=2 q=6" && it.status == Status::DocumentedDiscrepancy);
    let pass = match row {
        Some(r) => {
            r.closed == BigInt::from(0)
                && r.summation == BigInt::from(4)
                && r.status == Status::DocumentedDiscrepancy
                && brute == BigInt::from(4)
                && flagged
                && report.ok()
        }
        None => false,
    };
    Outcome {
        pass,
        detail: match row {
            Some(r) => format!(
                "(4,2,6): closed {} vs summation {}, brute force {brute}; reported as {}",
                r.closed, r.summation, r.status
            ),
            None => "row (4,2,6) missing".into(),
        },
    }
}

fn hilbert_exactness() -> Outcome {
    let mut comparisons = 0;
    let mut violations = 0;
    for n in 1..=5 {
        let r = verify_additivity(n, 8).unwrap();
        comparisons += r.comparisons;
        violations += r.violations.len();
    }
    Outcome {
        pass: violations == 0 && comparisons > 0,
        detail: format!("{comparisons} comparisons, {violations} violations"),
    }
}

fn support() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    let mut stray = 0;
    for n in 2..=4 {
        let s = support_check(Ideal::P, n).unwrap();
        stray += s.violations.len();
        pass &= s.violations.is_empty();
        detail.push(format!("n={n}: {}+{}", s.multidegrees_checked, s.sample_checked));
        if n == 4 {
            pass &= s.sample_checked == 10;
        }
    }
    Outcome {
        pass,
        detail: format!("multidegrees (grid+sample) {}, {stray} nonzero Tor outside the patterns", detail.join(", ")),
    }
}

fn property_suites() -> Outcome {
    let mut failures = Vec::new();

    for n in 1..=7 {
        let t = CharacterTable::new(n);
        let order: i64 = (1..=n as i64).product();
        let k = t.shapes().len();
        for i in 0..k {
            for j in 0..k {
                let s: i64 = (0..k).map(|c| t.class_sizes()[c] as i64 * t.value(i, c) * t.value(j, c)).sum();
                if s != if i == j { order } else { 0 } {
                    failures.push(format!("orthogonality n={n}"));
                }
            }
        }
    }

    for k in 0..=4 {
        for m in 0..=4 {
            for mu in partitions_of(k) {
                for nu in partitions_of(m) {
                    let c = lr_coefficients(&mu, &nu);
                    let lhs: u64 = c.iter().map(|(l, &x)| x * hook_dim(l)).sum();
                    let binom: u64 = (1..=(k + m) as u64).product::<u64>()
                        / ((1..=k as u64).product::<u64>() * (1..=m as u64).product::<u64>());
                    if lhs != binom * hook_dim(&mu) * hook_dim(&nu) || c != lr_coefficients(&nu, &mu) {
                        failures.push(format!("LR {mu} {nu}"));
                    }
                }
            }
        }
    }

    let r = Resolver::new(3, Ideal::P);
    let g = GroupElement {
        sigma: vec![1, 0, 2],
        swap: true,
    };
    let mut complexes = 0;
    for a in multidegrees_up_to(3, 4) {
        let t: usize = a.iter().sum();
        for x in 0..=t {
            for p in 1..=6 {
                let d = r.differential(p, &a, x).unwrap();
                complexes += 1;
                if p >= 2 && !r.differential(p - 1, &a, x).unwrap().mul(&d).is_zero() {
                    failures.push(format!("d^2 at {a:?}"));
                }
                if g.fixes(&a, x) {
                    let lhs = d.mul(&r.action(p, &a, x, &g).unwrap());
                    let rhs = r.action(p - 1, &a, x, &g).unwrap().mul(&d);
                    if lhs != rhs {
                        failures.push(format!("equivariance at {a:?}"));
                    }
                }
                if rank(&d) + kernel_basis(&d).dim() != d.cols() {
                    failures.push(format!("rank-nullity at {a:?}"));
                }
            }
        }
    }

    let sigma = ExactMatrix::from_i64(&[vec![2, 1, 5], vec![0, -1, 3], vec![0, 0, 7]]);
    let whole = SubspaceBasis::span(3, (0..3).map(|i| vec![(i, permsyz::exactla::q(1))]));
    let part = SubspaceBasis::span(3, [vec![(0, permsyz::exactla::q(3)), (1, permsyz::exactla::q(1))], vec![(0, permsyz::exactla::q(1))]]);
    let tw = trace_on_stable(&sigma, &whole).unwrap();
    let tp = trace_on_stable(&sigma, &part).unwrap();
    if tw != tp + trace_on_subquotient(&sigma, &whole, &part).unwrap() {
        failures.push("trace additivity".into());
    }

    for n in 2..=5 {
        let doc = EquivariantDoc::build(n, Ideal::P, true).unwrap();
        let s = render_equivariant(&doc, Format::Json).unwrap();
        if serde_json::from_str::<EquivariantDoc>(&s).ok().as_ref() != Some(&doc) {
            failures.push(format!("JSON round trip n={n}"));
        }
    }

    Outcome {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!(
                "orthogonality, LR identities, d^2 = 0 / equivariance / rank-nullity on {complexes} differentials, trace additivity, JSON round trip"
            )
        } else {
            format!("failures: {}", failures.join("; "))
        },
    }
}

fn main() {
    let results = [
        criterion(1, "n=3 ground truth", Duration::from_secs(10), n3_ground_truth),
        criterion(2, "n=4 equivariant match", Duration::from_secs(300), n4_equivariant),
        criterion(3, "formula concordance", Duration::from_secs(10), concordance),
        criterion(4, "documented discrepancy", Duration::from_secs(60), documented_discrepancy),
        criterion(5, "Hilbert exactness", Duration::from_secs(60), hilbert_exactness),
        criterion(6, "support", Duration::from_secs(300), support),
        criterion(7, "property suites", Duration::from_secs(300), property_suites),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    if failed.is_empty() {
        println!("acceptance: all 7 criteria pass");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
