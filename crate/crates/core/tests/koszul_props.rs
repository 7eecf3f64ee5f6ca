use num_traits::Zero;
use permsyz::exactla::{q, trace_on_subquotient, ExactMatrix, Q};
use permsyz::hilbert::{hf_oracle, multidegrees_up_to, NamedModule};
use permsyz::orbitmod::Ideal;
use permsyz::resolve::{GroupElement, Resolver};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

fn group(n: usize) -> Vec<GroupElement> {
    permutations(n)
        .into_iter()
        .flat_map(|sigma| [false, true].map(|swap| GroupElement { sigma: sigma.clone(), swap }))
        .collect()
}

fn trace(m: &ExactMatrix) -> Q {
    (0..m.rows()).map(|i| m.get(i, i)).fold(Q::zero(), |a, b| a + b)
}

fn pieces(n: usize, max_degree: usize) -> Vec<(Vec<usize>, usize)> {
    multidegrees_up_to(n, max_degree)
        .into_iter()
        .flat_map(|a| {
            let t: usize = a.iter().sum();
            (0..=t).map(move |k| (a.clone(), k))
        })
        .collect()
}

#[test]
fn differential_squares_to_zero() {
    for (n, d) in [(2, 5), (3, 4)] {
        for ideal in [Ideal::P, Ideal::D] {
            let r = Resolver::new(n, ideal);
            for (a, k) in pieces(n, d) {
                for p in 2..=2 * n {
                    let d1 = r.differential(p - 1, &a, k).unwrap();
                    let d2 = r.differential(p, &a, k).unwrap();
                    assert!(d1.mul(&d2).is_zero(), "{ideal} {a:?} x-degree {k} p={p}");
                }
            }
        }
    }
}

#[test]
fn action_commutes_with_differential() {
    for (n, d) in [(2, 4), (3, 3)] {
        let gs = group(n);
        for ideal in [Ideal::P, Ideal::D] {
            let r = Resolver::new(n, ideal);
            for (a, k) in pieces(n, d) {
                for g in gs.iter().filter(|g| g.fixes(&a, k)) {
                    for p in 1..=2 * n {
                        let dp = r.differential(p, &a, k).unwrap();
                        let lhs = dp.mul(&r.action(p, &a, k, g).unwrap());
                        let rhs = r.action(p - 1, &a, k, g).unwrap().mul(&dp);
                        assert_eq!(lhs, rhs, "{ideal} {a:?} x-degree {k} p={p} {g:?}");
                    }
                }
            }
        }
    }
}

// Euler characteristic and its equivariant version: the alternating sum of traces on the
// chain groups equals the alternating sum on homology.
#[test]
fn lefschetz_numbers_agree() {
    let n = 3;
    let gs = group(n);
    let r = Resolver::new(n, Ideal::P);
    for (a, k) in pieces(n, 4) {
        for g in gs.iter().filter(|g| g.fixes(&a, k)) {
            let mut chains = Q::zero();
            let mut homology = Q::zero();
            for p in 0..=2 * n {
                let sign = if p % 2 == 0 { q(1) } else { q(-1) };
                chains += &sign * trace(&r.action(p, &a, k, g).unwrap());
                let h = r.homology(p, &a, k).unwrap();
                if !h.basis.is_empty() {
                    let m = r.action(p, &a, k, g).unwrap();
                    homology += &sign * trace_on_subquotient(&m, &h.cycles, &h.boundaries).unwrap();
                }
            }
            assert_eq!(chains, homology, "{a:?} x-degree {k} {g:?}");
        }
    }
}

// The quotient pieces come from linear algebra on generator multiples; the oracle counts
// monomials of the initial ideal.
#[test]
fn quotient_dimensions_match_monomial_counts() {
    for n in 2..=4 {
        for ideal in [Ideal::P, Ideal::D] {
            let module = match ideal {
                Ideal::P => NamedModule::P,
                Ideal::D => NamedModule::D,
            };
            let r = Resolver::new(n, ideal);
            for a in multidegrees_up_to(n, 5) {
                let t: usize = a.iter().sum();
                let ideal_dim: usize = (0..=t).map(|k| r.piece(&a, k).unwrap().ideal_dim()).sum();
                assert_eq!(ideal_dim as u64, hf_oracle(module, &a).unwrap(), "{ideal} {a:?}");
            }
        }
    }
}

#[test]
fn tor_is_invariant_under_the_group() {
    let n = 3;
    let r = Resolver::new(n, Ideal::P);
    for a in multidegrees_up_to(n, 5) {
        for g in group(n) {
            let b = g.act_multidegree(&a);
            for p in 0..3 {
                assert_eq!(r.tor_dim(p, &a).unwrap(), r.tor_dim(p, &b).unwrap(), "{a:?} -> {b:?}");
            }
        }
    }
}
