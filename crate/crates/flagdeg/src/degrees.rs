//! Chain counting: per-face flag degrees, f-vectors, and flag f-vectors.
//!
//! For a composition `sigma = (s_1, ..., s_m)` of the max rank, the degree
//! of a rank-`s_1` face `F` is the number of chains `F < X_2 < ... < X_m`
//! whose ranks are the partial sums of `sigma`. Collected over all faces
//! of rank `s_1` and sorted, that gives the degree sequence.
//!
//! Three routes compute it:
//!
//! * [`degree_sequence`]: dynamic programming over `rank_relation`, the
//!   one to use;
//! * [`degree_sequence_naive`]: direct chain enumeration over the
//!   reachability matrix, kept as an independent cross-check;
//! * [`degree_sequence_simplicial`]: the closed form
//!   `deg(F) * multinomial(k - s_1; tail)`, valid exactly when every
//!   interval from a rank-`s_1` face up to a maximal element is boolean
//!   (simplicial posets, solid cubes, and the like). It refuses other
//!   inputs rather than answer wrongly.
//!
//! The routes deliberately share no traversal code; tests hold them equal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::poset::{ElemId, RankedPoset};
use crate::seq::{multinomial, Composition, DegreeSequence};
use crate::util::token_cmp;
use crate::Error;

fn prescribed_ranks(p: &RankedPoset, sigma: &Composition) -> Result<Vec<usize>, Error> {
    p.require_pure()?;
    if sigma.total() != p.max_rank() {
        return Err(Error::RankTotalMismatch {
            composition: sigma.total(),
            poset: p.max_rank(),
        });
    }
    Ok(sigma.partial_sums())
}

/// Chain counts per element of `level(ranks[0])`, indexed by level
/// position, for chains visiting exactly the given ranks. The workhorse
/// behind both degree sequences and flag f numbers: one backward sweep,
/// each step a rank-relation contraction.
fn chain_counts(p: &RankedPoset, ranks: &[usize]) -> Vec<BigUint> {
    let last = *ranks.last().expect("at least one rank");
    let mut counts = vec![BigUint::one(); p.level_size(last)];
    for w in ranks.windows(2).rev() {
        let rel = p.rank_relation(w[0], w[1]);
        counts = (0..p.level_size(w[0]))
            .map(|i| {
                let mut acc = BigUint::zero();
                for (j, c) in counts.iter().enumerate() {
                    if rel.related(i, j) {
                        acc += c;
                    }
                }
                acc
            })
            .collect();
    }
    counts
}

/// Degree sequence of a pure poset for one composition of its max rank.
pub fn degree_sequence(p: &RankedPoset, sigma: &Composition) -> Result<DegreeSequence, Error> {
    Ok(DegreeSequence::new(degree_counts(p, sigma)?))
}

/// Unsorted per-face degrees, aligned with `level(sigma first part)`
/// positions. The raw material behind [`degree_sequence`], exposed for
/// callers that must know which face carries which count.
pub fn degree_counts(p: &RankedPoset, sigma: &Composition) -> Result<Vec<BigUint>, Error> {
    let ranks = prescribed_ranks(p, sigma)?;
    Ok(chain_counts(p, &ranks))
}

/// Degree of a single face, which must sit at rank `sigma` starts from.
pub fn degree_of_face(
    p: &RankedPoset,
    face: ElemId,
    sigma: &Composition,
) -> Result<BigUint, Error> {
    let ranks = prescribed_ranks(p, sigma)?;
    if p.rank(face) != ranks[0] {
        return Err(Error::FaceRankMismatch {
            face: p.name(face).to_string(),
            face_rank: p.rank(face),
            expected: ranks[0],
        });
    }
    let counts = chain_counts(p, &ranks);
    Ok(counts[p.level_pos(face.index())].clone())
}

/// Named per-face degrees, largest first, ties by face name. The degree
/// sequence forgets which face carried which count; this keeps it.
pub fn degree_profile(
    p: &RankedPoset,
    sigma: &Composition,
) -> Result<Vec<(String, BigUint)>, Error> {
    let ranks = prescribed_ranks(p, sigma)?;
    let counts = chain_counts(p, &ranks);
    let mut out: Vec<(String, BigUint)> = p
        .level(ranks[0])
        .zip(counts)
        .map(|(x, c)| (p.name(x).to_string(), c))
        .collect();
    out.sort_by(|(an, ac), (bn, bc)| bc.cmp(ac).then_with(|| token_cmp(an, bn)));
    Ok(out)
}

/// Degree sequence by brute-force chain enumeration over the depth-first
/// reachability matrix. Exponentially dumber than the DP on purpose; do
/// not feed it anything big.
pub fn degree_sequence_naive(
    p: &RankedPoset,
    sigma: &Composition,
) -> Result<DegreeSequence, Error> {
    let ranks = prescribed_ranks(p, sigma)?;
    let above = p.strict_order_matrix();

    fn chains(p: &RankedPoset, above: &[Vec<bool>], x: usize, rest: &[usize]) -> BigUint {
        match rest.first() {
            None => BigUint::one(),
            Some(&r) => p
                .level_raw(r)
                .iter()
                .filter(|&&y| above[x][y])
                .map(|&y| chains(p, above, y, &rest[1..]))
                .sum(),
        }
    }

    let counts: Vec<BigUint> = p
        .level_raw(ranks[0])
        .iter()
        .map(|&x| chains(p, &above, x, &ranks[1..]))
        .collect();
    Ok(DegreeSequence::new(counts))
}

/// Degree sequence by the closed form: when every interval from a
/// rank-`s_1` face up to a maximal element is boolean, the chains above
/// `F` split as (choice of maximal element) x (chain inside a boolean
/// lattice), so `deg(F) = #maximal above F * multinomial(k - s_1; tail)`.
///
/// Errors with the offending interval when the hypothesis fails.
pub fn degree_sequence_simplicial(
    p: &RankedPoset,
    sigma: &Composition,
) -> Result<DegreeSequence, Error> {
    let ranks = prescribed_ranks(p, sigma)?;
    let s1 = ranks[0];
    let maximal = p.maximal_elements();
    for &h in &maximal {
        for x in p.ideal(h) {
            if p.rank(x) == s1 && !p.is_boolean_interval(Some(x), h)? {
                return Err(Error::NotLocallyBoolean {
                    face: p.name(x).to_string(),
                    facet: p.name(h).to_string(),
                });
            }
        }
    }
    let per_facet =
        multinomial(p.max_rank() - s1, sigma.tail()).expect("tail sums to the remaining rank");
    let counts: Vec<BigUint> = p
        .level(s1)
        .map(|f| {
            let above = maximal
                .iter()
                .filter(|&&h| h == f || p.is_strictly_below(f, h))
                .count();
            BigUint::from(above) * &per_facet
        })
        .collect();
    Ok(DegreeSequence::new(counts))
}

/// Face counts by rank, `counts[i]` being the number of rank `i+1` faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<usize>);

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn f_vector(p: &RankedPoset) -> FVector {
    FVector((1..=p.max_rank()).map(|r| p.level_size(r)).collect())
}

/// Number of chains visiting exactly the given ranks; the ranks must be
/// strictly increasing within `1..=max_rank`. The empty tuple counts the
/// empty chain, which is 1. Purity is not needed here.
pub fn flag_f(p: &RankedPoset, ranks: &[usize]) -> Result<BigUint, Error> {
    if ranks.iter().any(|&r| r == 0 || r > p.max_rank())
        || ranks.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(Error::BadRankTuple {
            max_rank: p.max_rank(),
        });
    }
    if ranks.is_empty() {
        return Ok(BigUint::one());
    }
    Ok(chain_counts(p, ranks).into_iter().sum())
}

/// The whole flag f-vector: chain counts for every nonempty subset of
/// ranks. Exponential in the max rank, which is fine at rank <= 20 and
/// asserted against beyond that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagFVector {
    counts: BTreeMap<Vec<usize>, BigUint>,
}

impl FlagFVector {
    pub fn get(&self, ranks: &[usize]) -> Option<&BigUint> {
        self.counts.get(ranks)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &BigUint)> {
        self.counts.iter()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl fmt::Display for FlagFVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (ranks, count) in &self.counts {
            write!(f, "f(")?;
            for (i, r) in ranks.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{r}")?;
            }
            writeln!(f, ") = {count}")?;
        }
        Ok(())
    }
}

impl Serialize for FlagFVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            ranks: &'a [usize],
            #[serde(with = "crate::jsonnum")]
            count: BigUint,
        }
        let mut seq = serializer.serialize_seq(Some(self.counts.len()))?;
        for (ranks, count) in &self.counts {
            seq.serialize_element(&Entry {
                ranks,
                count: count.clone(),
            })?;
        }
        seq.end()
    }
}

pub fn flag_f_vector(p: &RankedPoset) -> FlagFVector {
    let k = p.max_rank();
    assert!(k <= 20, "flag f-vector has 2^{k} entries; refusing");
    let mut counts = BTreeMap::new();
    for mask in 1u32..(1 << k) {
        let ranks: Vec<usize> = (1..=k).filter(|&r| mask >> (r - 1) & 1 == 1).collect();
        let count = flag_f(p, &ranks).expect("subset ranks are valid");
        counts.insert(ranks, count);
    }
    FlagFVector { counts }
}

/// One computed degree sequence with its composition and total, the JSON
/// shape emitted by the command-line tools. Counts serialize as exact
/// integers, never floats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub composition: Vec<usize>,
    pub sequence: DegreeSequence,
    #[serde(with = "crate::jsonnum")]
    pub sum: BigUint,
}

impl SequenceRecord {
    pub fn new(sigma: &Composition, sequence: DegreeSequence) -> SequenceRecord {
        SequenceRecord {
            composition: sigma.parts().to_vec(),
            sum: sequence.sum().clone(),
            sequence,
        }
    }
}
