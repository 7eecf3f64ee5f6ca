use num_bigint::BigInt;
use permsyz::betti::{betti_table, crosscheck, BettiTable, CrosscheckRow, Method, Status};
use permsyz::combinat::partitions_of;
use permsyz::orbitmod::{descriptors, Ideal, OrbitModule};
use permsyz::render::{render_betti, render_equivariant, render_report, EquivariantDoc, Format};
use permsyz::reps::{S2Label, VirtualRep};
use permsyz::verify::Report;
use proptest::prelude::*;
use serde::{de::DeserializeOwned, Serialize};

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(x: &T) {
    let s = serde_json::to_string(x).unwrap();
    let back: T = serde_json::from_str(&s).unwrap();
    assert_eq!(&back, x);
    assert_eq!(serde_json::to_string(&back).unwrap(), s);
}

#[test]
fn tables_and_documents() {
    for n in 2..=6 {
        for method in [Method::Summation, Method::Closed, Method::Ghsw, Method::Descriptors] {
            let t = betti_table(n, Ideal::P, method).unwrap();
            round_trip(&t);
            let back: BettiTable = serde_json::from_str(&render_betti(&t, Format::Json).unwrap()).unwrap();
            assert_eq!(back, t);
        }
        for g2 in [false, true] {
            for ideal in [Ideal::P, Ideal::D] {
                let doc = EquivariantDoc::build(n, ideal, g2).unwrap();
                let back: EquivariantDoc =
                    serde_json::from_str(&render_equivariant(&doc, Format::Json).unwrap()).unwrap();
                assert_eq!(back, doc);
            }
        }
        for d in descriptors(n, Ideal::P, true).unwrap() {
            for m in &d.modules {
                round_trip::<OrbitModule>(m);
            }
        }
    }
    let rows = crosscheck(6).unwrap();
    for r in &rows {
        round_trip::<CrosscheckRow>(r);
    }
}

#[test]
fn huge_dimensions_stay_exact() {
    let t = betti_table(60, Ideal::P, Method::Summation).unwrap();
    let big = t.entries().map(|e| e.2.clone()).max().unwrap();
    assert!(big > BigInt::from(u64::MAX));
    round_trip(&t);
}

#[test]
fn output_is_deterministic() {
    let a = render_equivariant(&EquivariantDoc::build(5, Ideal::P, true).unwrap(), Format::Json).unwrap();
    let b = render_equivariant(&EquivariantDoc::build(5, Ideal::P, true).unwrap(), Format::Json).unwrap();
    assert_eq!(a, b);
}

fn arb_rep() -> impl Strategy<Value = VirtualRep> {
    (1usize..=6, any::<bool>()).prop_flat_map(|(n, s2)| {
        let shapes = partitions_of(n);
        let k = shapes.len();
        prop::collection::vec((0..k, 0usize..3, -3i64..=3), 0..6).prop_map(move |terms| {
            let mut r = if s2 { VirtualRep::zero_s2(n) } else { VirtualRep::zero(n) };
            for (i, l, m) in terms {
                if s2 {
                    let label = [S2Label::Triv, S2Label::Sign, S2Label::Ind][l];
                    r.add_term_s2(shapes[i].clone(), label, m);
                } else {
                    r.add_term(shapes[i].clone(), m);
                }
            }
            r
        })
    })
}

fn arb_status() -> impl Strategy<Value = Status> {
    prop_oneof![
        Just(Status::Match),
        Just(Status::Mismatch),
        Just(Status::Skip),
        Just(Status::DocumentedDiscrepancy)
    ]
}

proptest! {
    #[test]
    fn virtual_reps(r in arb_rep()) {
        round_trip(&r);
    }

    #[test]
    fn betti_tables(entries in prop::collection::vec((0usize..8, 1usize..6, 0u64..u64::MAX), 0..20)) {
        let mut t = BettiTable::new(4, Ideal::D, Method::Resolve);
        for (p, d, v) in entries {
            t.set(p, p + d, BigInt::from(v) * BigInt::from(v)).unwrap();
        }
        round_trip(&t);
    }

    #[test]
    fn reports(items in prop::collection::vec(("[a-z ,|\"]{0,8}", arb_status(), any::<i64>(), any::<i64>()), 0..10)) {
        let mut r = Report::new("tor", &[("n", "3".into()), ("ideal", "P".into())]);
        for (id, s, e, a) in items {
            r.push(id, s, e, a);
        }
        round_trip(&r);
        let back: Report = serde_json::from_str(&render_report(&r, Format::Json).unwrap()).unwrap();
        prop_assert_eq!(&back, &r);
        let csv = render_report(&r, Format::Csv).unwrap();
        prop_assert_eq!(csv.lines().count(), r.items.len() + 1);
    }
}
