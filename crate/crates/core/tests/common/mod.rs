//! Complexes and oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use normpm::catalog;
use normpm::moves::{self, Bijection};
use normpm::stacked::{generate_stacked, StackScript};
use normpm::{binomial, Complex, Face};

/// Renames every decimal token `t` to `t + k`.
pub fn shift(c: &Complex, k: u64) -> Complex {
    let map: BTreeMap<String, String> = c
        .labels()
        .iter()
        .map(|t| (t.clone(), (t.parse::<u64>().expect("decimal token") + k).to_string()))
        .collect();
    c.relabel(&map).expect("relabel")
}

/// Shifts `y` past the largest token of `x`.
pub fn after(x: &Complex, y: &Complex) -> Complex {
    let num = |c: &Complex| c.labels().iter().map(|t| t.parse::<u64>().unwrap()).collect::<Vec<_>>();
    let top = num(x).into_iter().max().unwrap_or(0);
    let low = num(y).into_iter().min().unwrap_or(0);
    shift(y, (top + 1).saturating_sub(low))
}

pub fn join(x: &Complex, y: &Complex) -> Complex {
    x.join(&after(x, y)).expect("join")
}

/// `S⁰₂ ∗ x`.
pub fn suspension(x: &Complex) -> Complex {
    join(&catalog::standard_sphere(0).unwrap(), x)
}

pub fn stacked(d: i32, n: usize, seed: u64) -> Complex {
    generate_stacked(&StackScript::random(d, n - d as usize - 2, seed)).unwrap()
}

pub fn linear(d: i32, n: usize) -> Complex {
    generate_stacked(&StackScript::linear(d, n)).unwrap()
}

/// Face vector by enumerating every subset of every facet.
pub fn brute_fvector(c: &Complex) -> Vec<u64> {
    let mut faces: BTreeSet<Vec<String>> = BTreeSet::new();
    for f in c.facet_tokens() {
        for m in 1u32..1 << f.len() {
            let s: Vec<String> = (0..f.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| f[i].to_string())
                .collect();
            faces.insert(s);
        }
    }
    let mut counts = vec![0u64; (c.dim() + 1).max(0) as usize];
    for s in faces {
        counts[s.len() - 1] += 1;
    }
    counts
}

/// Connected sum of `x` and a shifted copy of `y` along their first and
/// last facets, paired in canonical order rotated by `rot`.
pub fn consum(x: &Complex, y: &Complex, rot: usize) -> Complex {
    let y = after(x, y);
    let s1 = x.tokens(&x.facets()[0]);
    let f2 = y.facets().last().unwrap();
    let s2 = y.tokens(f2);
    let k = s1.len();
    let psi = Bijection::new((0..k).map(|i| (s1[i], s2[(i + rot) % k]))).unwrap();
    moves::connected_sum(x, &y, &psi).unwrap()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Every admissible bijection between disjoint facets of `c`, in a fixed
/// order, stopping after `limit`.
pub fn admissible_bijections(c: &Complex, limit: usize) -> Vec<Bijection> {
    let mut out = Vec::new();
    let fs = c.facets();
    let perms = permutations(c.dim() as usize + 1);
    let g = c.edge_graph();
    for (i, a) in fs.iter().enumerate() {
        for b in &fs[i + 1..] {
            if !a.is_disjoint(b) {
                continue;
            }
            let (av, bv) = (a.vertices(), b.vertices());
            for p in &perms {
                let ok = (0..av.len())
                    .all(|k| g.distance(av[k].index(), bv[p[k]].index()).at_least(3));
                if ok {
                    let psi = Bijection::new(
                        (0..av.len()).map(|k| (c.label(av[k]), c.label(bv[p[k]]))),
                    )
                    .unwrap();
                    out.push(psi);
                    if out.len() >= limit {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// Handle additions of `c` along its first `count` admissible bijections.
pub fn handles(c: &Complex, count: usize) -> Vec<Complex> {
    admissible_bijections(c, count)
        .iter()
        .map(|psi| moves::handle_add(c, psi).unwrap())
        .collect()
}

pub struct Named {
    pub name: String,
    pub complex: Complex,
}

fn named(name: impl Into<String>, complex: Complex) -> Named {
    Named { name: name.into(), complex }
}

/// Normal pseudomanifolds of dimensions 2 to 4: stacked spheres, joins,
/// suspensions, surfaces, connected sums, handle additions and one-point
/// suspensions.
pub fn corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for d in [2, 3] {
        for n in d as usize + 2..=d as usize + 11 {
            for seed in 0..5 {
                out.push(named(format!("stacked{d}_{n}_s{seed}"), stacked(d, n, seed)));
            }
        }
        for n in [d as usize + 2, 9, 13, 17, 20] {
            out.push(named(format!("linear{d}_{n}"), linear(d, n)));
        }
    }
    for n in 6..=11 {
        out.push(named(format!("stacked4_{n}"), stacked(4, n, n as u64)));
    }
    for a in 3..=6 {
        for b in a..=6 {
            let c = join(&catalog::cycle(a).unwrap(), &catalog::cycle(b).unwrap());
            out.push(named(format!("c{a}*c{b}"), c));
        }
    }
    for m in 3..=10 {
        out.push(named(format!("s0*c{m}"), suspension(&catalog::cycle(m).unwrap())));
    }
    for (a, b) in [(0, 1), (0, 2), (1, 1), (0, 3), (1, 2), (2, 2), (1, 3)] {
        let c = join(&catalog::standard_sphere(a).unwrap(), &catalog::standard_sphere(b).unwrap());
        out.push(named(format!("s{a}*s{b}"), c));
    }
    for n in 5..=12 {
        out.push(named(format!("s0*stacked2_{n}"), suspension(&stacked(2, n, 100 + n as u64))));
    }
    out.push(named("s0*octahedron", suspension(&catalog::octahedron())));
    out.push(named("s0*torus7", suspension(&catalog::torus_7())));
    out.push(named("s0*rp2_6", suspension(&catalog::rp2_6())));
    for e in catalog::ENTRIES {
        let c = (e.build)();
        if c.dim() >= 2 && normpm::verify::is_normal_pm(&c) {
            out.push(named(e.name, c));
        }
    }

    // Connected sums.
    for i in 0..10u64 {
        let x = stacked(2, 5 + i as usize, 200 + i);
        let y = stacked(2, 4 + (i as usize % 4), 300 + i);
        out.push(named(format!("sum2_stacked_{i}"), consum(&x, &y, i as usize)));
        let x = stacked(3, 6 + i as usize, 400 + i);
        let y = stacked(3, 5 + (i as usize % 5), 500 + i);
        out.push(named(format!("sum3_stacked_{i}"), consum(&x, &y, i as usize)));
    }
    let others2 = [catalog::octahedron(), catalog::torus_7(), catalog::rp2_6(), catalog::icosahedron()];
    for (i, x) in others2.iter().enumerate() {
        out.push(named(format!("sum2_mixed_{i}"), consum(x, &stacked(2, 6, 600 + i as u64), i)));
        out.push(named(format!("sum2_pair_{i}"), consum(x, &catalog::octahedron(), i + 1)));
    }
    out.push(named("torus#torus", consum(&catalog::torus_7(), &catalog::torus_7(), 0)));
    out.push(named("rp2#rp2", consum(&catalog::rp2_6(), &catalog::rp2_6(), 0)));
    let others3 = [
        catalog::cycle_join_cycle(),
        suspension(&catalog::octahedron()),
        suspension(&catalog::torus_7()),
        suspension(&catalog::rp2_6()),
    ];
    for (i, x) in others3.iter().enumerate() {
        out.push(named(format!("sum3_mixed_{i}"), consum(x, &stacked(3, 7, 700 + i as u64), i)));
    }

    // Handle additions.
    for (i, h) in handles(&linear(2, 12), 6).into_iter().enumerate() {
        out.push(named(format!("handle2_linear12_{i}"), h));
    }
    for (i, h) in handles(&catalog::icosahedron(), 4).into_iter().enumerate() {
        out.push(named(format!("handle2_ico_{i}"), h));
    }
    for (i, h) in handles(&linear(3, 13), 6).into_iter().enumerate() {
        out.push(named(format!("handle3_linear13_{i}"), h));
    }
    for (i, h) in handles(&linear(3, 16), 4).into_iter().enumerate() {
        out.push(named(format!("handle3_linear16_{i}"), h));
    }

    // One-point suspensions of surfaces.
    let surfaces = [
        catalog::octahedron(),
        catalog::icosahedron(),
        catalog::torus_7(),
        catalog::rp2_6(),
        stacked(2, 8, 800),
        stacked(2, 10, 801),
    ];
    for (i, x) in surfaces.iter().enumerate() {
        let top = x.labels().iter().map(|t| t.parse::<u64>().unwrap()).max().unwrap();
        let c = x
            .one_point_suspension(normpm::VertexId(0), &(top + 1).to_string())
            .unwrap();
        out.push(named(format!("ops_{i}"), c));
    }
    out
}

/// h-vector route to the face vector of a k-stacked `d`-sphere: `h_0..h_k`
/// come from the prefix, `h_i = h_k` on `k ≤ i ≤ d+1-k`, and the rest by
/// symmetry.
pub fn kstacked_fvector_oracle(d: usize, k: usize, prefix: &[u64]) -> Vec<i128> {
    let f = |j: i64| -> i128 {
        if j == -1 {
            1
        } else {
            prefix[j as usize] as i128
        }
    };
    let d1 = d as i64 + 1;
    let mut h = vec![0i128; d + 2];
    for i in 0..=k as i64 {
        h[i as usize] = (0..=i)
            .map(|j| {
                let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                sign * binomial(d1 - j, i - j) * f(j - 1)
            })
            .sum();
    }
    for i in k..=d + 1 - k {
        h[i] = h[k];
    }
    for i in d + 2 - k..=d + 1 {
        h[i] = h[d + 1 - i];
    }
    (1..=d1)
        .map(|j| (0..=j).map(|i| binomial(d1 - i, j - i) * h[i as usize]).sum())
        .collect()
}

/// Face sets of `c` as sorted token lists, comparable across complexes
/// whose token orders differ.
pub fn face_set(c: &Complex) -> BTreeSet<Vec<String>> {
    c.all_faces()
        .map(|f| {
            let mut t = c.owned_tokens(f);
            t.sort();
            t
        })
        .collect()
}

pub fn face_of(c: &Complex, tokens: &[&str]) -> Face {
    c.vertex_set(tokens).unwrap()
}
