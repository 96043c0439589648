//! Named reference complexes, each with stored expectations.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::verify;

fn numbered(range: core::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| i.to_string()).collect()
}

/// `S^d_{d+2}`: all proper subsets of `{1, …, d+2}`.
pub fn standard_sphere(d: i32) -> Result<Complex> {
    if d < 0 {
        return Err(Error::ArgumentOutOfRange("sphere dimension must be non-negative"));
    }
    let all = numbered(1..=d as usize + 2);
    Complex::from_facets((0..all.len()).map(|skip| {
        all.iter()
            .enumerate()
            .filter(move |(i, _)| *i != skip)
            .map(|(_, t)| t.clone())
    }))
}

/// `B^d_{d+1}`: the simplex on `{1, …, d+1}`.
pub fn standard_ball(d: i32) -> Result<Complex> {
    if d < 0 {
        return Err(Error::ArgumentOutOfRange("ball dimension must be non-negative"));
    }
    Complex::from_facets([numbered(1..=d as usize + 1)])
}

/// `S¹_n` on `1, …, n`.
pub fn cycle(n: usize) -> Result<Complex> {
    if n < 3 {
        return Err(Error::ArgumentOutOfRange("a cycle needs at least 3 vertices"));
    }
    cycle_on(&numbered(1..=n))
}

/// The cycle through the given tokens in order.
pub fn cycle_on<S: AsRef<str>>(tokens: &[S]) -> Result<Complex> {
    if tokens.len() < 3 {
        return Err(Error::ArgumentOutOfRange("a cycle needs at least 3 vertices"));
    }
    let n = tokens.len();
    Complex::from_facets((0..n).map(|i| [tokens[i].as_ref(), tokens[(i + 1) % n].as_ref()]))
}

/// `S⁰₂ ∗ S⁰₂ ∗ S⁰₂` with antipodal pairs `{1,2}`, `{3,4}`, `{5,6}`.
pub fn octahedron() -> Complex {
    let mut facets = Vec::new();
    for a in ["1", "2"] {
        for b in ["3", "4"] {
            for c in ["5", "6"] {
                facets.push([a, b, c]);
            }
        }
    }
    Complex::from_facets(facets).expect("octahedron facets are valid")
}

/// Boundary of the icosahedron. Vertex 0 is the top, 1..5 the upper ring,
/// 6..10 the lower ring with `5+i` between upper `i` and `i+1`, and 11 the
/// bottom.
pub fn icosahedron() -> Complex {
    let up = |i: usize| (i - 1) % 5 + 1;
    let lo = |i: usize| 5 + (i - 1) % 5 + 1;
    let mut facets: Vec<[usize; 3]> = Vec::new();
    for i in 1..=5 {
        facets.push([0, up(i), up(i + 1)]);
        facets.push([up(i), up(i + 1), lo(i)]);
        facets.push([lo(i), lo(i + 1), up(i + 1)]);
        facets.push([11, lo(i), lo(i + 1)]);
    }
    Complex::from_facets(facets.iter().map(|f| f.map(|v| v.to_string())))
        .expect("icosahedron facets are valid")
}

/// Antipode in the icosahedron labeling of [`icosahedron`].
pub fn icosahedron_antipode(v: usize) -> usize {
    match v {
        0 => 11,
        11 => 0,
        1..=5 => 5 + (v + 1) % 5 + 1,
        6..=10 => (v - 3) % 5 + 1,
        _ => panic!("icosahedron has vertices 0..=11"),
    }
}

/// `RP²₆`, the quotient of the icosahedron by the antipodal map. Each class
/// keeps its smaller label, so the vertices are `0..=5`.
pub fn rp2_6() -> Complex {
    let ico = icosahedron();
    let map = (6..=11)
        .map(|v| (v.to_string(), icosahedron_antipode(v).to_string()))
        .collect();
    ico.relabel(&map).expect("quotient is a valid complex")
}

/// The 7-vertex torus with facets `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7,
/// on tokens `1..=7`.
pub fn torus_7() -> Complex {
    let t = |i: usize| (i % 7 + 1).to_string();
    let facets = (0..7).flat_map(|i| [[t(i), t(i + 1), t(i + 3)], [t(i), t(i + 2), t(i + 3)]]);
    Complex::from_facets(facets).expect("torus facets are valid")
}

/// `S¹₃ ∗ S¹₃` on `{1,2,3}` and `{4,5,6}`: a 2-neighbourly 3-sphere.
pub fn cycle_join_cycle() -> Complex {
    let a = cycle_on(&["1", "2", "3"]).expect("valid cycle");
    let b = cycle_on(&["4", "5", "6"]).expect("valid cycle");
    a.join(&b).expect("disjoint vertex sets")
}

/// Expected properties of a catalog complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub f_vector: &'static [u64],
    pub euler: i64,
    pub normal: bool,
    /// `Some` for closed 2-manifolds.
    pub orientable: Option<bool>,
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub build: fn() -> Complex,
    pub expected: &'static Expectation,
}

impl CatalogEntry {
    /// Builds the complex and compares it with the stored expectations.
    pub fn self_check(&self) -> core::result::Result<(), String> {
        let c = (self.build)();
        let r = verify::classify(&c);
        let got = Expectation {
            f_vector: &[],
            euler: c.euler_characteristic(),
            normal: r.is_normal && !r.has_boundary,
            orientable: r.is_orientable,
        };
        let f = c.f_vector();
        if f.counts() != self.expected.f_vector {
            return Err(alloc::format!("{}: f-vector {:?}", self.name, f.counts()));
        }
        let want = Expectation { f_vector: &[], ..self.expected.clone() };
        if got != want {
            return Err(alloc::format!("{}: {:?}", self.name, got));
        }
        Ok(())
    }
}

fn s2() -> Complex {
    standard_sphere(2).expect("valid dimension")
}
fn s3() -> Complex {
    standard_sphere(3).expect("valid dimension")
}
fn b3() -> Complex {
    standard_ball(3).expect("valid dimension")
}
fn c9() -> Complex {
    cycle(9).expect("valid length")
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "s2_4",
        description: "standard 2-sphere, boundary of the tetrahedron",
        build: s2,
        expected: &Expectation { f_vector: &[4, 6, 4], euler: 2, normal: true, orientable: Some(true) },
    },
    CatalogEntry {
        name: "s3_5",
        description: "standard 3-sphere, boundary of the 4-simplex",
        build: s3,
        expected: &Expectation { f_vector: &[5, 10, 10, 5], euler: 0, normal: true, orientable: None },
    },
    CatalogEntry {
        name: "b3_4",
        description: "standard 3-ball, a solid tetrahedron",
        build: b3,
        expected: &Expectation { f_vector: &[4, 6, 4, 1], euler: 1, normal: false, orientable: None },
    },
    CatalogEntry {
        name: "s1_9",
        description: "9-gon",
        build: c9,
        expected: &Expectation { f_vector: &[9, 9], euler: 0, normal: true, orientable: None },
    },
    CatalogEntry {
        name: "octahedron",
        description: "boundary of the octahedron, S0_2 * S0_2 * S0_2",
        build: octahedron,
        expected: &Expectation { f_vector: &[6, 12, 8], euler: 2, normal: true, orientable: Some(true) },
    },
    CatalogEntry {
        name: "icosahedron",
        description: "boundary of the icosahedron",
        build: icosahedron,
        expected: &Expectation { f_vector: &[12, 30, 20], euler: 2, normal: true, orientable: Some(true) },
    },
    CatalogEntry {
        name: "rp2_6",
        description: "6-vertex real projective plane, antipodal quotient of the icosahedron",
        build: rp2_6,
        expected: &Expectation { f_vector: &[6, 15, 10], euler: 1, normal: true, orientable: Some(false) },
    },
    CatalogEntry {
        name: "torus_7",
        description: "7-vertex torus",
        build: torus_7,
        expected: &Expectation { f_vector: &[7, 21, 14], euler: 0, normal: true, orientable: Some(true) },
    },
    CatalogEntry {
        name: "s1_3_join_s1_3",
        description: "join of two triangles, a 2-neighbourly 3-sphere",
        build: cycle_join_cycle,
        expected: &Expectation { f_vector: &[6, 15, 18, 9], euler: 0, normal: true, orientable: None },
    },
];

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}
