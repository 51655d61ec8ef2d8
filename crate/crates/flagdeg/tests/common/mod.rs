//! Shared test corpus: 200 seeded random pure complexes plus the canonical
//! generator families, every entry capped at 300 elements.

// each test target compiles this module separately and uses its own subset
#![allow(dead_code)]

use flagdeg::complexes::{
    gen_complete_complex, gen_cross_polytope_solid, gen_hypercube_solid, gen_hypercube_stack,
    gen_random_pure,
};
use flagdeg::RankedPoset;

pub struct CorpusEntry {
    pub name: String,
    pub poset: RankedPoset,
}

fn entry(name: String, poset: RankedPoset) -> CorpusEntry {
    assert!(
        poset.len() <= 300,
        "{name} has {} elements, over the corpus cap",
        poset.len()
    );
    CorpusEntry { name, poset }
}

fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// 200 deterministic pure complexes: n <= 8 vertices, facets of size
/// k <= 4, at most 15 facets. Parameters come from one seed stream, the
/// complex itself from another, so adding parameters never shifts the
/// sampled facets.
pub fn random_complexes() -> Vec<CorpusEntry> {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    (0..200u64)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + i);
            let n: usize = rng.gen_range(3..=8);
            let k = rng.gen_range(1..=n.min(4));
            let m = rng.gen_range(1..=choose(n, k).min(15));
            let facets = gen_random_pure(n, k, m, i).expect("parameters are in range");
            let poset = facets.to_poset().expect("facet posets build");
            entry(format!("random[{i}] n={n} k={k} m={m}"), poset)
        })
        .collect()
}

/// Complete complexes (all k-subsets of n vertices) that fit the cap.
pub fn complete_complexes() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 3..=8usize {
        for k in 2..=n.min(5) {
            let elements: usize = (1..=k).map(|j| choose(n, j)).sum();
            if elements > 300 {
                continue;
            }
            let facets = gen_complete_complex(n, k).expect("k <= n");
            out.push(entry(
                format!("complete({n},{k})"),
                facets.to_poset().expect("complete posets build"),
            ));
        }
    }
    out
}

/// Everything that is a simplicial complex: random plus complete.
pub fn simplicial_corpus() -> Vec<CorpusEntry> {
    let mut out = random_complexes();
    out.extend(complete_complexes());
    out
}

/// Solid polytope posets (top cell included): cross-polytopes, hypercubes,
/// and rows of glued cubes. Apart from the degenerate d = 1 segments, none
/// of these are simplicial posets.
pub fn solid_posets() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for d in 1..=5 {
        out.push(entry(
            format!("cross_polytope({d})"),
            gen_cross_polytope_solid(d),
        ));
        out.push(entry(format!("hypercube({d})"), gen_hypercube_solid(d)));
    }
    for (d, copies) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2), (4, 3)] {
        out.push(entry(
            format!("cube_stack({d},{copies})"),
            gen_hypercube_stack(d, copies),
        ));
    }
    out
}
