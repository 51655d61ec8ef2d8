//! Facet lists, their order complexes, and the stock generators.
//!
//! A `FacetList` is the compact form of a simplicial complex: just the
//! maximal faces. `to_poset` expands it to the full face poset. The
//! generators build the standard test subjects: complete complexes,
//! solid cross-polytopes and hypercubes (cell posets with a top cell,
//! deliberately not simplicial), stacks of glued cubes, and seeded random
//! pure complexes.

use std::collections::HashSet;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poset::RankedPoset;
use crate::util::token_cmp;
use crate::Error;

/// Maximal faces of a simplicial complex, normalized: vertices sorted
/// within each facet, duplicate and non-maximal facets dropped, facets
/// sorted. Two lists describing the same complex render identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetList {
    facets: Vec<Vec<String>>,
}

fn face_cmp(a: &[String], b: &[String]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        let c = token_cmp(x, y);
        if c != std::cmp::Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

impl FacetList {
    pub fn new<I, F>(raw: I) -> FacetList
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = String>,
    {
        let mut facets: Vec<Vec<String>> = raw
            .into_iter()
            .map(|f| {
                let mut f: Vec<String> = f.into_iter().collect();
                f.sort_by(|a, b| token_cmp(a, b));
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        // keep only maximal facets; on ties keep one copy
        let mut keep = vec![true; facets.len()];
        for i in 0..facets.len() {
            for j in 0..facets.len() {
                if i == j || !keep[i] || !keep[j] {
                    continue;
                }
                let contained = facets[i].iter().all(|v| facets[j].binary_search_by(|w| token_cmp(w, v)).is_ok());
                if contained && (facets[i].len() < facets[j].len() || i > j) {
                    keep[i] = false;
                }
            }
        }
        let mut it = keep.iter();
        facets.retain(|_| *it.next().unwrap());
        facets.sort_by(|a, b| face_cmp(a, b));
        facets.dedup();
        FacetList { facets }
    }

    pub fn facets(&self) -> &[Vec<String>] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// All vertices, sorted by token order.
    pub fn vertices(&self) -> Vec<String> {
        let mut vs: Vec<String> = self
            .facets
            .iter()
            .flatten()
            .cloned()
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        vs.sort_by(|a, b| token_cmp(a, b));
        vs
    }

    /// Expands to the face poset: every nonempty subset of a facet, ranked
    /// by cardinality, ordered by inclusion. Face names join their
    /// vertices with commas, so vertex names containing commas can
    /// collide; that surfaces as a duplicate-element error.
    pub fn to_poset(&self) -> Result<RankedPoset, Error> {
        let mut faces: Vec<Vec<String>> = Vec::new();
        let mut seen: HashSet<Vec<String>> = HashSet::new();
        for facet in &self.facets {
            for r in 1..=facet.len() {
                for sub in facet.iter().cloned().combinations(r) {
                    // facet vertices are sorted, so each subset is too
                    if seen.insert(sub.clone()) {
                        faces.push(sub);
                    }
                }
            }
        }
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| face_cmp(a, b)));

        let elements: Vec<(String, usize)> = faces
            .iter()
            .map(|f| (f.join(","), f.len()))
            .collect();
        let mut covers = Vec::new();
        for f in &faces {
            if f.len() < 2 {
                continue;
            }
            let name = f.join(",");
            for skip in 0..f.len() {
                let child: Vec<&str> = f
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, v)| v.as_str())
                    .collect();
                covers.push((child.join(","), name.clone()));
            }
        }
        RankedPoset::from_covers(elements, covers)
    }

    /// One facet per line, vertices space-separated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facets {
            out.push_str(&f.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses the facet format: one facet per line as whitespace-separated
/// vertex names; `#` comments and blank lines ignored. Any token is a
/// valid vertex name, so this cannot fail; it can only come back empty.
pub fn parse_facets(text: &str) -> FacetList {
    FacetList::new(
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split_whitespace().map(str::to_string).collect::<Vec<_>>()),
    )
}

/// All `k`-subsets of `n` vertices named `1..=n`.
pub fn gen_complete_complex(n: usize, k: usize) -> Result<FacetList, Error> {
    if k == 0 || k > n {
        return Err(Error::SubsetSize { n, k });
    }
    Ok(FacetList::new(
        (1..=n)
            .map(|v| v.to_string())
            .combinations(k),
    ))
}

/// Solid cross-polytope of dimension `d` (the octahedron for `d = 3`):
/// proper faces are the antipode-free sign assignments, written like
/// `+1,-3`, plus one top cell over everything. The top ideal is not
/// boolean, so this is pure but not a simplicial poset.
///
/// Panics for `d = 0`.
pub fn gen_cross_polytope_solid(d: usize) -> RankedPoset {
    assert!(d >= 1, "cross-polytope needs a positive dimension");
    // faces are words over {unused, +, -} per axis; enumerate in base 3
    let mut by_rank: Vec<Vec<Vec<Option<bool>>>> = vec![Vec::new(); d + 1];
    let mut word = vec![0u8; d];
    loop {
        let face: Vec<Option<bool>> = word
            .iter()
            .map(|&c| match c {
                0 => None,
                1 => Some(true),
                _ => Some(false),
            })
            .collect();
        let rank = face.iter().flatten().count();
        if rank > 0 {
            by_rank[rank].push(face);
        }
        // increment the base-3 counter
        let mut i = 0;
        loop {
            if i == d {
                break;
            }
            word[i] += 1;
            if word[i] < 3 {
                break;
            }
            word[i] = 0;
            i += 1;
        }
        if i == d {
            break;
        }
    }

    let name = |face: &[Option<bool>]| -> String {
        face.iter()
            .enumerate()
            .filter_map(|(axis, s)| {
                s.map(|pos| format!("{}{}", if pos { "+" } else { "-" }, axis + 1))
            })
            .join(",")
    };

    let mut elements: Vec<(String, usize)> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    for (rank, faces) in by_rank.iter().enumerate().skip(1) {
        for face in faces {
            let this = name(face);
            elements.push((this.clone(), rank));
            if rank < d {
                for (axis, slot) in face.iter().enumerate() {
                    if slot.is_none() {
                        for sign in [true, false] {
                            let mut bigger = face.clone();
                            bigger[axis] = Some(sign);
                            covers.push((this.clone(), name(&bigger)));
                        }
                    }
                }
            } else {
                covers.push((this.clone(), "top".to_string()));
            }
        }
    }
    elements.push(("top".to_string(), d + 1));
    RankedPoset::from_covers(elements, covers).expect("cross-polytope faces are consistent")
}

/// Solid hypercube of dimension `d`: faces are words over `{0,1,*}` per
/// axis, named by the word itself, ordered by specialization (a `*` covers
/// both digits). The all-star word is the top cell. Every upper interval
/// is boolean; principal ideals of faces of dimension >= 2 are not.
///
/// Panics for `d = 0`.
pub fn gen_hypercube_solid(d: usize) -> RankedPoset {
    assert!(d >= 1, "hypercube needs a positive dimension");
    let mut elements: Vec<(String, usize)> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut word = vec![b'0'; d];
    loop {
        let this = String::from_utf8(word.clone()).unwrap();
        let stars = word.iter().filter(|&&c| c == b'*').count();
        elements.push((this.clone(), stars + 1));
        for i in 0..d {
            if word[i] != b'*' {
                let mut bigger = word.clone();
                bigger[i] = b'*';
                covers.push((this.clone(), String::from_utf8(bigger).unwrap()));
            }
        }
        let mut i = 0;
        loop {
            if i == d {
                break;
            }
            word[i] = match word[i] {
                b'0' => b'1',
                b'1' => b'*',
                _ => b'0',
            };
            if word[i] != b'0' {
                break;
            }
            i += 1;
        }
        if i == d {
            break;
        }
    }
    elements.sort_by_key(|&(_, r)| r);
    RankedPoset::from_covers(elements, covers).expect("hypercube faces are consistent")
}

/// `copies` unit `d`-cubes glued in a row along opposite facets: the cell
/// poset of a `copies x 1 x ... x 1` brick subdivided along the first
/// axis. Pure of rank `d + 1` with `copies` maximal cells and no global
/// top. Face names are `x:word` where `x` is a point `i` or a segment
/// `i-j` on the subdivided axis (just `x` when `d = 1`).
///
/// Panics when `d = 0` or `copies = 0`.
pub fn gen_hypercube_stack(d: usize, copies: usize) -> RankedPoset {
    assert!(d >= 1 && copies >= 1, "stack needs positive dimensions");
    // x-axis parts: points 0..=copies rank contribution 0, segments
    // i-(i+1) contribution 1
    let xparts: Vec<(String, usize, Vec<usize>)> = {
        let mut parts = Vec::new();
        // parts[i] for i <= copies is the point i; then segments follow
        for i in 0..=copies {
            let mut ups = Vec::new();
            if i >= 1 {
                ups.push(copies + i); // segment (i-1)-i
            }
            if i < copies {
                ups.push(copies + 1 + i); // segment i-(i+1)
            }
            parts.push((i.to_string(), 0, ups));
        }
        for i in 0..copies {
            parts.push((format!("{}-{}", i, i + 1), 1, Vec::new()));
        }
        parts
    };

    let words: Vec<Vec<u8>> = if d == 1 {
        vec![Vec::new()]
    } else {
        let mut all = Vec::new();
        let mut word = vec![b'0'; d - 1];
        loop {
            all.push(word.clone());
            let mut i = 0;
            loop {
                if i == d - 1 {
                    break;
                }
                word[i] = match word[i] {
                    b'0' => b'1',
                    b'1' => b'*',
                    _ => b'0',
                };
                if word[i] != b'0' {
                    break;
                }
                i += 1;
            }
            if i == d - 1 {
                break;
            }
        }
        all
    };

    let name = |xi: usize, w: &[u8]| -> String {
        let x = &xparts[xi].0;
        if w.is_empty() {
            x.clone()
        } else {
            format!("{}:{}", x, std::str::from_utf8(w).unwrap())
        }
    };

    let mut elements: Vec<(String, usize)> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    for (xi, (_, xstars, xups)) in xparts.iter().enumerate() {
        for w in &words {
            let stars = w.iter().filter(|&&c| c == b'*').count();
            let this = name(xi, w);
            elements.push((this.clone(), xstars + stars + 1));
            for &up in xups {
                covers.push((this.clone(), name(up, w)));
            }
            for i in 0..w.len() {
                if w[i] != b'*' {
                    let mut bigger = w.clone();
                    bigger[i] = b'*';
                    covers.push((this.clone(), name(xi, &bigger)));
                }
            }
        }
    }
    elements.sort_by_key(|&(_, r)| r);
    RankedPoset::from_covers(elements, covers).expect("stacked cubes are consistent")
}

fn binom_u128(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

/// `m` distinct `k`-subsets of vertices `1..=n`, drawn uniformly without
/// replacement, deterministic in `seed`. The result is a pure complex
/// once non-maximal duplicates collapse (they cannot: all facets have
/// equal size and are distinct).
pub fn gen_random_pure(n: usize, k: usize, m: usize, seed: u64) -> Result<FacetList, Error> {
    if k == 0 || k > n {
        return Err(Error::SubsetSize { n, k });
    }
    let universe = binom_u128(n, k)
        .filter(|&u| u <= usize::MAX as u128)
        .ok_or(Error::UniverseTooLarge { n, k })?;
    if (m as u128) > universe {
        return Err(Error::SampleTooLarge {
            m,
            available: universe.to_string(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks = rand::seq::index::sample(&mut rng, universe as usize, m);

    let mut facets = Vec::with_capacity(m);
    for idx in picks.iter() {
        facets.push(unrank_subset(n, k, idx as u128));
    }
    Ok(FacetList::new(facets))
}

/// The `idx`-th `k`-subset of `{1..n}` in lexicographic order.
fn unrank_subset(n: usize, k: usize, mut idx: u128) -> Vec<String> {
    let mut out = Vec::with_capacity(k);
    let mut next = 1; // smallest vertex still available
    for slot in 0..k {
        for v in next..=n {
            // subsets starting with v continue with k-slot-1 of the n-v above it
            let count = binom_u128(n - v, k - slot - 1).expect("within universe bound");
            if idx < count {
                out.push(v.to_string());
                next = v + 1;
                break;
            }
            idx -= count;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn facet_list_normalizes() {
        let fl = FacetList::new(vec![
            vec!["2".to_string(), "1".to_string(), "2".to_string()],
            vec!["1".to_string()],
            vec!["1".to_string(), "2".to_string()],
            vec!["10".to_string(), "3".to_string()],
        ]);
        // "1" is inside "1 2"; the duplicate facet collapses
        assert_eq!(fl.facets(), &[
            vec!["1".to_string(), "2".to_string()],
            vec!["3".to_string(), "10".to_string()],
        ]);
        assert_eq!(fl.to_text(), "1 2\n3 10\n");
        assert_eq!(parse_facets(&fl.to_text()), fl);
        assert_eq!(fl.vertices(), vec!["1", "2", "3", "10"]);
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let fl = parse_facets("# two facets\n1 2 3\n\n  2 3 4\n");
        assert_eq!(fl.facets().len(), 2);
        assert!(parse_facets("# nothing\n\n").is_empty());
    }

    #[test]
    fn face_poset_of_a_triangle() {
        let fl = parse_facets("1 2 3\n");
        let p = fl.to_poset().unwrap();
        assert_eq!(p.len(), 7);
        assert_eq!(p.level_size(1), 3);
        assert_eq!(p.level_size(2), 3);
        assert_eq!(p.level_size(3), 1);
        assert!(p.is_simplicial_complex());
        assert!(p.element_id("1,2").is_some());
        assert!(p.element_id("2,1").is_none());
    }

    #[test]
    fn complete_complexes() {
        let fl = gen_complete_complex(5, 3).unwrap();
        assert_eq!(fl.facets().len(), 10);
        let p = fl.to_poset().unwrap();
        assert_eq!(
            (p.level_size(1), p.level_size(2), p.level_size(3)),
            (5, 10, 10)
        );
        assert!(p.is_pure());
        assert!(p.is_simplicial_complex());
        assert!(p.facets_isomorphic_as_lattices());
        assert!(gen_complete_complex(3, 0).is_err());
        assert!(gen_complete_complex(3, 4).is_err());
    }

    #[test]
    fn ambiguous_vertex_names_fail_loudly() {
        let fl = FacetList::new(vec![
            vec!["x,y".to_string()],
            vec!["x".to_string(), "y".to_string()],
        ]);
        assert!(matches!(fl.to_poset(), Err(Error::DuplicateElement(_))));
    }

    #[test]
    fn octahedron_counts_and_shape() {
        let oct = gen_cross_polytope_solid(3);
        assert_eq!(oct.len(), 27);
        assert_eq!(
            (1..=4).map(|r| oct.level_size(r)).collect::<Vec<_>>(),
            vec![6, 12, 8, 1]
        );
        assert!(oct.is_pure());
        // the top cell's ideal has 27 members, nothing like 2^4
        assert!(!oct.is_simplicial_poset());
        let top = oct.element_id("top").unwrap();
        let v = oct.element_id("+1").unwrap();
        let iv = oct.interval(Some(v), top).unwrap();
        assert_eq!(iv.members().len(), 10);
        assert!(!oct.is_boolean_interval(Some(v), top).unwrap());
        // its boundary is the usual octahedron complex
        let boundary = oct.truncate(3);
        assert!(boundary.is_simplicial_complex());
        assert!(boundary.is_pure());
    }

    #[test]
    fn cross_polytope_sizes_follow_three_to_the_d() {
        for d in 1..=5 {
            assert_eq!(gen_cross_polytope_solid(d).len(), 3usize.pow(d as u32));
        }
    }

    #[test]
    fn solid_cube_counts_and_shape() {
        let cube = gen_hypercube_solid(3);
        assert_eq!(cube.len(), 27);
        assert_eq!(
            (1..=4).map(|r| cube.level_size(r)).collect::<Vec<_>>(),
            vec![8, 12, 6, 1]
        );
        assert!(cube.is_pure());
        assert!(!cube.is_simplicial_poset());
        // cubes are simple: every upper interval is boolean
        let top = cube.element_id("***").unwrap();
        assert!(cube.is_simple_facet(top).unwrap());
        assert!(cube.upper_intervals_boolean(1));
        let v = cube.element_id("000").unwrap();
        assert!(cube.is_boolean_interval(Some(v), top).unwrap());
        // a square 2-face (two stars) has a 9-element ideal
        let sq = cube.element_id("0**").unwrap();
        let tiny = gen_hypercube_solid(1);
        assert_eq!(tiny.len(), 3);
        assert!(!cube.is_boolean_interval(None, sq).unwrap());
    }

    #[test]
    fn stack_of_two_cubes() {
        let stack = gen_hypercube_stack(3, 2);
        assert_eq!(
            (1..=4).map(|r| stack.level_size(r)).collect::<Vec<_>>(),
            vec![12, 20, 11, 2]
        );
        assert!(stack.is_pure());
        assert_eq!(stack.maximal_elements().len(), 2);
        assert!(stack.facets_isomorphic_as_lattices());
        assert!(stack.upper_intervals_boolean(1));
        for f in stack.maximal_elements() {
            assert!(stack.is_simple_facet(f).unwrap());
        }
        // one cube of the stack is just the solid cube
        let single = gen_hypercube_stack(3, 1);
        assert_eq!(single.len(), 27);
        // d = 1: a path of `copies` segments
        let path = gen_hypercube_stack(1, 4);
        assert_eq!(path.level_size(1), 5);
        assert_eq!(path.level_size(2), 4);
        assert!(path.is_simplicial_complex());
    }

    #[test]
    fn random_pure_is_deterministic_and_pure() {
        let a = gen_random_pure(7, 3, 9, 42).unwrap();
        let b = gen_random_pure(7, 3, 9, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.facets().len(), 9);
        assert!(a.facets().iter().all(|f| f.len() == 3));
        let p = a.to_poset().unwrap();
        assert!(p.is_pure());
        assert!(p.is_simplicial_complex());
        let c = gen_random_pure(7, 3, 9, 43).unwrap();
        assert_ne!(a, c);
        // full sample enumerates the whole universe
        let all = gen_random_pure(5, 2, 10, 7).unwrap();
        assert_eq!(all, gen_complete_complex(5, 2).unwrap());
        assert!(matches!(
            gen_random_pure(5, 2, 11, 7),
            Err(Error::SampleTooLarge { .. })
        ));
        assert!(gen_random_pure(4, 2, 0, 1).unwrap().is_empty());
    }

    #[test]
    fn unranking_is_lexicographic() {
        assert_eq!(unrank_subset(5, 2, 0), vec!["1", "2"]);
        assert_eq!(unrank_subset(5, 2, 1), vec!["1", "3"]);
        assert_eq!(unrank_subset(5, 2, 9), vec!["4", "5"]);
        assert_eq!(unrank_subset(4, 4, 0), vec!["1", "2", "3", "4"]);
    }
}
