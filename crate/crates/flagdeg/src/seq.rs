//! Compositions, exact binomial/multinomial coefficients, partition
//! conjugation, and the (weak) majorization order on degree sequences.
//!
//! Everything here is exact integer arithmetic on `BigUint`; no operation
//! rounds or overflows.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::jsonnum;
use crate::Error;

/// An ordered tuple of positive parts. When the total equals a poset's
/// max rank, the parts are the rank jumps of the flags being counted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// First part: the rank of the faces whose degrees the composition defines.
    pub fn first(&self) -> usize {
        self.parts[0]
    }

    pub fn tail(&self) -> &[usize] {
        &self.parts[1..]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least one part
    }

    /// Ranks of the flag entries: partial sums of the parts.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// All distinct rearrangements, lexicographically ascending.
    /// `(1,1,2)` has three, `(2,2)` only itself.
    pub fn permutations(&self) -> Vec<Composition> {
        let mut pool = self.parts.clone();
        pool.sort_unstable();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(pool.len());
        distinct_permutations(&mut pool, &mut current, &mut out);
        out
    }
}

fn distinct_permutations(pool: &mut Vec<usize>, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if pool.is_empty() {
        out.push(Composition {
            parts: current.clone(),
        });
        return;
    }
    let mut i = 0;
    while i < pool.len() {
        // pool stays sorted, so skipping equal neighbors skips duplicates
        if i > 0 && pool[i] == pool[i - 1] {
            i += 1;
            continue;
        }
        let v = pool.remove(i);
        current.push(v);
        distinct_permutations(pool, current, out);
        current.pop();
        pool.insert(i, v);
        i += 1;
    }
}

/// All `2^(k-1)` compositions of `k >= 1`, first part descending, then
/// recursively the same order on the remainder: `3` gives
/// `(3), (2,1), (1,2), (1,1,1)`.
pub fn compositions_of(k: usize) -> Vec<Composition> {
    fn rec(k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if k == 0 {
            out.push(Composition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=k).rev() {
            prefix.push(p);
            rec(k - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(k, &mut Vec::new(), &mut out);
    }
    out
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses the CLI form `1,1,2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::ZeroPart))
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Composition::new(parts).map_err(D::Error::custom)
    }
}

/// Exact `n choose k`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 0..k {
        // exact at every step: res holds i+1 consecutive-product prefixes
        res = res * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    res
}

/// Exact multinomial coefficient `n! / (p1! p2! ... pm!)`. The parts must
/// sum to exactly `n`; zero parts are allowed and contribute factor 1.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigUint, Error> {
    let got: usize = parts.iter().sum();
    if got != n {
        return Err(Error::MultinomialSum { expected: n, got });
    }
    let mut res = BigUint::one();
    let mut acc = 0usize;
    for &p in parts {
        acc += p;
        res *= binomial(acc, p);
    }
    Ok(res)
}

/// Degrees of all faces of one rank, sorted non-increasing. Entries are
/// exact nonnegative integers of unbounded magnitude.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    entries: Vec<BigUint>,
    sum: BigUint,
}

impl DegreeSequence {
    /// Sorts the entries non-increasing and caches their total.
    pub fn new(mut entries: Vec<BigUint>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let sum = entries.iter().sum();
        DegreeSequence { entries, sum }
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn sum(&self) -> &BigUint {
        &self.sum
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Conjugate (transpose) sequence: entry `i` counts how many entries of
    /// `self` are `>= i`, for `i = 1..=max`. Never emits trailing zeros, so
    /// conjugation is an involution on sequences without zero entries.
    pub fn conjugate(&self) -> DegreeSequence {
        if self.entries.is_empty() {
            return DegreeSequence::new(Vec::new());
        }
        let max = usize::try_from(&self.entries[0])
            .expect("conjugate length exceeds addressable memory");
        let mut out = Vec::with_capacity(max);
        for i in 1..=max {
            let i_big = BigUint::from(i);
            // entries are sorted non-increasing
            let count = self.entries.partition_point(|e| *e >= i_big);
            out.push(BigUint::from(count));
        }
        DegreeSequence::new(out)
    }
}

impl<T: Into<BigUint>> FromIterator<T> for DegreeSequence {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        DegreeSequence::new(iter.into_iter().map(Into::into).collect())
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            seq.serialize_element(&jsonnum::to_number(e))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for DegreeSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let numbers = Vec::<serde_json::Number>::deserialize(d)?;
        let entries = numbers
            .iter()
            .map(|n| jsonnum::from_number(n).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DegreeSequence::new(entries))
    }
}

/// Outcome of comparing two degree sequences under majorization.
///
/// `Majorizes`/`MajorizedBy` require equal sums; the `Weakly*` verdicts
/// cover prefix dominance with strictly larger (resp. smaller) sum.
/// Verdicts are mutually exclusive: `Equal` never reports as `Majorizes`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MajorizationVerdict {
    Equal,
    Majorizes,
    MajorizedBy,
    WeaklyMajorizes,
    WeaklyMajorizedBy,
    Incomparable,
}

impl MajorizationVerdict {
    /// `a` is at least `b` with equal sums (majorization, possibly equality).
    pub fn dominates(self) -> bool {
        matches!(self, MajorizationVerdict::Equal | MajorizationVerdict::Majorizes)
    }

    /// `a` is at least `b` in the weak order (sum may be larger).
    pub fn weakly_dominates(self) -> bool {
        matches!(
            self,
            MajorizationVerdict::Equal
                | MajorizationVerdict::Majorizes
                | MajorizationVerdict::WeaklyMajorizes
        )
    }
}

impl fmt::Display for MajorizationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MajorizationVerdict::Equal => "Equal",
            MajorizationVerdict::Majorizes => "Majorizes",
            MajorizationVerdict::MajorizedBy => "MajorizedBy",
            MajorizationVerdict::WeaklyMajorizes => "WeaklyMajorizes",
            MajorizationVerdict::WeaklyMajorizedBy => "WeaklyMajorizedBy",
            MajorizationVerdict::Incomparable => "Incomparable",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MajorizationRelation {
    pub verdict: MajorizationVerdict,
    /// First 0-based prefix index where `sum(a[..=i]) < sum(b[..=i])`, i.e.
    /// where `a` fails to dominate. `None` when `a` dominates everywhere.
    pub first_violation: Option<usize>,
}

/// Compares two sequences in the majorization order. The shorter sequence
/// is zero-padded, so `(2,0)` and `(2)` are `Equal`.
pub fn compare(a: &DegreeSequence, b: &DegreeSequence) -> MajorizationRelation {
    let n = a.len().max(b.len());
    let zero = BigUint::zero();

    let mut pa = BigUint::zero();
    let mut pb = BigUint::zero();
    let mut a_ge_all = true;
    let mut b_ge_all = true;
    let mut first_violation = None;
    for i in 0..n {
        pa += a.entries.get(i).unwrap_or(&zero);
        pb += b.entries.get(i).unwrap_or(&zero);
        match pa.cmp(&pb) {
            Ordering::Less => {
                a_ge_all = false;
                if first_violation.is_none() {
                    first_violation = Some(i);
                }
            }
            Ordering::Greater => b_ge_all = false,
            Ordering::Equal => {}
        }
    }

    let verdict = if a_ge_all && b_ge_all {
        MajorizationVerdict::Equal
    } else if a_ge_all {
        if a.sum == b.sum {
            MajorizationVerdict::Majorizes
        } else {
            MajorizationVerdict::WeaklyMajorizes
        }
    } else if b_ge_all {
        if a.sum == b.sum {
            MajorizationVerdict::MajorizedBy
        } else {
            MajorizationVerdict::WeaklyMajorizedBy
        }
    } else {
        MajorizationVerdict::Incomparable
    };
    let first_violation = match verdict {
        MajorizationVerdict::Equal
        | MajorizationVerdict::Majorizes
        | MajorizationVerdict::WeaklyMajorizes => None,
        _ => first_violation,
    };
    MajorizationRelation {
        verdict,
        first_violation,
    }
}
