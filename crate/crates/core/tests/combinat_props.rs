use num_bigint::BigUint;
use permsyz::combinat::{
    class_size, factorial, hook_dim, lr_coefficients, mn_character, partitions_of, CharacterTable, Partition,
};
use proptest::prelude::*;

// Semistandard tableaux of shape `lambda` and content `mu`, filled row by row.
fn kostka(lambda: &Partition, mu: &Partition) -> u64 {
    fn fill(cells: &[(usize, usize)], k: usize, content: &mut [usize], grid: &mut Vec<Vec<usize>>) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 0..content.len() {
            if content[v] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            content[v] -= 1;
            grid[r][c] = v;
            total += fill(cells, k + 1, content, grid);
            content[v] += 1;
        }
        total
    }
    if lambda.size() != mu.size() {
        return 0;
    }
    let shape = lambda.parts().to_vec();
    let cells: Vec<_> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut content = mu.parts().to_vec();
    fill(&cells, 0, &mut content, &mut grid)
}

// Fixed points of a permutation of cycle type `rho` on ordered set partitions with block sizes `mu`:
// each cycle must land inside one block.
fn young_permutation_character(mu: &Partition, rho: &Partition) -> u64 {
    fn go(cycles: &[usize], room: &mut [usize]) -> u64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return room.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c {
                room[i] -= c;
                total += go(rest, room);
                room[i] += c;
            }
        }
        total
    }
    go(rho.parts(), &mut mu.parts().to_vec())
}

fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.len() > mu.len() + 1 || mu.len() > lambda.len() {
        return false;
    }
    (0..lambda.len()).all(|i| {
        let below = if i + 1 < lambda.len() { lambda.part(i + 1) } else { 0 };
        lambda.part(i) >= mu.part(i) && mu.part(i) >= below
    })
}

fn unite(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::from_unsorted(v)
}

// Frobenius reciprocity with restriction to S_k x S_m, using only character values.
fn lr_by_restriction(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let (k, m) = (mu.size(), nu.size());
    let mut acc: i128 = 0;
    for alpha in partitions_of(k) {
        for beta in partitions_of(m) {
            let w = class_size(&alpha) as i128 * class_size(&beta) as i128;
            let v = mn_character(lambda, &unite(&alpha, &beta)).unwrap() as i128
                * mn_character(mu, &alpha).unwrap() as i128
                * mn_character(nu, &beta).unwrap() as i128;
            acc += w * v;
        }
    }
    let order: i128 = (1..=k as i128).product::<i128>() * (1..=m as i128).product::<i128>();
    assert_eq!(acc % order, 0);
    (acc / order) as i64
}

#[test]
fn row_and_column_orthogonality() {
    for n in 1..=7 {
        let t = CharacterTable::new(n);
        let order: i64 = (1..=n as i64).product();
        let k = t.shapes().len();
        for i in 0..k {
            for j in 0..k {
                let s: i64 = (0..k)
                    .map(|c| t.class_sizes()[c] as i64 * t.value(i, c) * t.value(j, c))
                    .sum();
                assert_eq!(s, if i == j { order } else { 0 }, "rows n={n} {i} {j}");
                let s: i64 = (0..k).map(|l| t.value(l, i) * t.value(l, j)).sum();
                let expect = if i == j { order / t.class_sizes()[i] as i64 } else { 0 };
                assert_eq!(s, expect, "columns n={n} {i} {j}");
            }
        }
    }
}

#[test]
fn squares_of_dimensions_sum_to_group_order() {
    for n in 1..=8 {
        let s: BigUint = partitions_of(n).iter().map(|l| BigUint::from(hook_dim(l).pow(2))).sum();
        assert_eq!(s, factorial(n));
    }
}

#[test]
fn hook_formula_counts_standard_tableaux() {
    for n in 1..=7 {
        let ones = Partition::column(n);
        for l in partitions_of(n) {
            assert_eq!(hook_dim(&l), kostka(&l, &ones), "{l}");
        }
    }
}

#[test]
fn characters_expand_young_permutation_characters() {
    for n in 1..=6 {
        let shapes = partitions_of(n);
        for mu in &shapes {
            for rho in &shapes {
                let s: i64 = shapes
                    .iter()
                    .map(|l| kostka(l, mu) as i64 * mn_character(l, rho).unwrap())
                    .sum();
                assert_eq!(s as u64, young_permutation_character(mu, rho), "mu={mu} rho={rho}");
            }
        }
    }
}

#[test]
fn conjugation_twists_by_sign() {
    for n in 1..=6 {
        for l in partitions_of(n) {
            for rho in partitions_of(n) {
                let sign = if (n - rho.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&l.conjugate(), &rho).unwrap(), sign * mn_character(&l, &rho).unwrap());
            }
        }
    }
}

#[test]
fn lr_matches_restriction_oracle() {
    for k in 1..=3 {
        for m in 1..=3 {
            for mu in partitions_of(k) {
                for nu in partitions_of(m) {
                    let c = lr_coefficients(&mu, &nu);
                    for lambda in partitions_of(k + m) {
                        let got = c.get(&lambda).copied().unwrap_or(0) as i64;
                        assert_eq!(got, lr_by_restriction(&lambda, &mu, &nu), "{mu} * {nu} -> {lambda}");
                    }
                }
            }
        }
    }
}

#[test]
fn pieri_rule() {
    for k in 0..=4 {
        for r in 1..=3 {
            for mu in partitions_of(k) {
                let c = lr_coefficients(&mu, &Partition::row(r));
                for lambda in partitions_of(k + r) {
                    let expect = is_horizontal_strip(&lambda, &mu) as u64;
                    assert_eq!(c.get(&lambda).copied().unwrap_or(0), expect, "{mu} * [{r}] -> {lambda}");
                }
                let c = lr_coefficients(&mu, &Partition::column(r));
                for lambda in partitions_of(k + r) {
                    let expect = is_horizontal_strip(&lambda.conjugate(), &mu.conjugate()) as u64;
                    assert_eq!(c.get(&lambda).copied().unwrap_or(0), expect, "{mu} * [1^{r}] -> {lambda}");
                }
            }
        }
    }
}

fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|k| {
        let ps = partitions_of(k);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

proptest! {
    #[test]
    fn lr_commutes(mu in arb_partition(5), nu in arb_partition(5)) {
        prop_assert_eq!(lr_coefficients(&mu, &nu), lr_coefficients(&nu, &mu));
    }

    #[test]
    fn lr_dimension_identity(mu in arb_partition(5), nu in arb_partition(5)) {
        let (k, m) = (mu.size(), nu.size());
        let lhs: BigUint = lr_coefficients(&mu, &nu)
            .iter()
            .map(|(l, &c)| BigUint::from(c) * hook_dim(l))
            .sum();
        let rhs = factorial(k + m) / (factorial(k) * factorial(m)) * hook_dim(&mu) * hook_dim(&nu);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugate_is_involution(l in arb_partition(9)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }
}
