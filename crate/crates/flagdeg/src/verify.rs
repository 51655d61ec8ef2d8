//! Instance checks for the majorization and counting relations.
//!
//! Each check tests one proved relation on a concrete poset and reports
//! what it saw. Checks gate on their hypotheses first: a poset that is
//! not, say, simplicial gets a `Vacuous` verdict with the failed gate
//! named, never a pass or fail. That distinction is the whole point; the
//! octahedron solid genuinely breaks the majorization conclusion while
//! satisfying none of its hypotheses.
//!
//! The counterexample scan inverts the contract: it runs where the
//! theorems do not apply and records every reversed or incomparable pair
//! as a `Finding`. Findings are not failures; the scan's verdict stays
//! `Pass`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::degrees::{degree_counts, f_vector};
use crate::poset::RankedPoset;
use crate::seq::{
    binomial, compare, compositions_of, multinomial, Composition, DegreeSequence,
    MajorizationVerdict,
};

/// The checks, in canonical execution and report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckId {
    MajorizationTheorem,
    LemmaFaceBelow,
    Stanley,
    ConjugateRelation,
    SumIdentity,
    WeakMajorizationSimple,
    CounterexampleScan,
}

impl CheckId {
    pub const ALL: [CheckId; 7] = [
        CheckId::MajorizationTheorem,
        CheckId::LemmaFaceBelow,
        CheckId::Stanley,
        CheckId::ConjugateRelation,
        CheckId::SumIdentity,
        CheckId::WeakMajorizationSimple,
        CheckId::CounterexampleScan,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::MajorizationTheorem => "majorization_theorem",
            CheckId::LemmaFaceBelow => "lemma_face_below",
            CheckId::Stanley => "stanley_inequality",
            CheckId::ConjugateRelation => "conjugate_relation",
            CheckId::SumIdentity => "sum_identity",
            CheckId::WeakMajorizationSimple => "weak_majorization_simple",
            CheckId::CounterexampleScan => "counterexample_scan",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<CheckId, String> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
                format!("unknown check `{s}`; expected one of {}", names.join(", "))
            })
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GateStatus {
    Met,
    NotMet,
    Skipped,
}

impl fmt::Display for GateStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateStatus::Met => "met",
            GateStatus::NotMet => "not met",
            GateStatus::Skipped => "skipped",
        })
    }
}

/// One hypothesis of a check and whether the input satisfies it. Gates
/// after a failed one are `Skipped`, not evaluated.
#[derive(Debug, Clone, Serialize)]
pub struct HypothesisGate {
    pub name: &'static str,
    pub status: GateStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Vacuous,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Finding,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Finding => "finding",
        })
    }
}

/// A degree sequence tagged with where it came from, e.g. `d^(1,3)`.
#[derive(Debug, Clone, Serialize)]
pub struct LabeledSequence {
    pub label: String,
    pub sequence: DegreeSequence,
}

/// Evidence attached to failed assertions and scan findings.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sequences: Vec<LabeledSequence>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub faces: Vec<String>,
    /// First prefix position (0-based) where the claimed dominance fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated_prefix: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// One assertion instance, usually a (sigma, pi) pair.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<usize>>,
    pub outcome: Outcome,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: CheckId,
    pub hypotheses: Vec<HypothesisGate>,
    pub verdict: Verdict,
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses.iter().all(|g| g.status == GateStatus::Met)
    }

    /// JSON lines: one summary object, then one object per record.
    pub fn to_json_lines(&self) -> String {
        #[derive(Serialize)]
        struct Summary<'a> {
            check: CheckId,
            verdict: Verdict,
            hypotheses: &'a [HypothesisGate],
            records: usize,
        }
        #[derive(Serialize)]
        struct Line<'a> {
            check: CheckId,
            #[serde(flatten)]
            record: &'a CheckRecord,
        }
        let mut out = serde_json::to_string(&Summary {
            check: self.check,
            verdict: self.verdict,
            hypotheses: &self.hypotheses,
            records: self.records.len(),
        })
        .expect("report serializes");
        out.push('\n');
        for record in &self.records {
            out.push_str(
                &serde_json::to_string(&Line {
                    check: self.check,
                    record,
                })
                .expect("record serializes"),
            );
            out.push('\n');
        }
        out
    }

    /// Human-readable block: verdict, gates, then only the interesting
    /// records (failures and findings); passing records are summarized.
    pub fn render_text(&self) -> String {
        use fmt::Write as _;
        let mut out = String::new();
        let passed = self
            .records
            .iter()
            .filter(|r| r.outcome == Outcome::Pass)
            .count();
        writeln!(
            out,
            "{}: {} ({} checked, {} flagged)",
            self.check,
            self.verdict,
            self.records.len(),
            self.records.len() - passed
        )
        .unwrap();
        for gate in &self.hypotheses {
            writeln!(out, "  hypothesis {}: {}", gate.name, gate.status).unwrap();
        }
        for r in &self.records {
            if r.outcome == Outcome::Pass {
                continue;
            }
            let pair = match (&r.sigma, &r.pi) {
                (Some(s), Some(p)) => format!("sigma={} pi={} ", fmt_parts(s), fmt_parts(p)),
                (Some(s), None) => format!("sigma={} ", fmt_parts(s)),
                _ => String::new(),
            };
            writeln!(out, "  {}: {}{}", r.outcome, pair, r.detail).unwrap();
            if let Some(w) = &r.witness {
                for ls in &w.sequences {
                    writeln!(out, "    {} = {}", ls.label, ls.sequence).unwrap();
                }
                if !w.faces.is_empty() {
                    writeln!(out, "    faces: {}", w.faces.join(", ")).unwrap();
                }
                if let Some(i) = w.violated_prefix {
                    writeln!(out, "    first violated prefix: {i}").unwrap();
                }
                if let Some(n) = &w.note {
                    writeln!(out, "    note: {n}").unwrap();
                }
            }
        }
        out
    }
}

fn fmt_parts(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("({})", inner.join(","))
}

fn seq_label(sigma: &Composition) -> String {
    format!("d^{sigma}")
}

/// Degree computations shared across the (sigma, pi) pairs of one check.
struct SeqCache<'a> {
    p: &'a RankedPoset,
    counts: BTreeMap<Vec<usize>, Vec<BigUint>>,
}

impl<'a> SeqCache<'a> {
    fn new(p: &'a RankedPoset) -> SeqCache<'a> {
        SeqCache {
            p,
            counts: BTreeMap::new(),
        }
    }

    fn counts(&mut self, sigma: &Composition) -> &[BigUint] {
        self.counts
            .entry(sigma.parts().to_vec())
            .or_insert_with(|| {
                degree_counts(self.p, sigma).expect("gated on purity and matching rank")
            })
    }

    fn sequence(&mut self, sigma: &Composition) -> DegreeSequence {
        DegreeSequence::new(self.counts(sigma).to_vec())
    }
}

/// Hypotheses shared by the checks, evaluated lazily and in order.
#[derive(Clone, Copy)]
enum Gate {
    Pure,
    SimplicialPoset,
    SimplicialComplex,
    /// Simplicial poset or all facets simple: exactly when upper
    /// intervals from any rank up to the facets are boolean, which is
    /// what the per-face product formula needs.
    LocallyBooleanAbove,
    SimpleFacets,
    IsomorphicFacets,
}

impl Gate {
    fn name(self) -> &'static str {
        match self {
            Gate::Pure => "pure",
            Gate::SimplicialPoset => "simplicial poset",
            Gate::SimplicialComplex => "simplicial complex",
            Gate::LocallyBooleanAbove => "simplicial poset or all facets simple",
            Gate::SimpleFacets => "all facets simple",
            Gate::IsomorphicFacets => "facets isomorphic",
        }
    }

    fn holds(self, p: &RankedPoset) -> bool {
        match self {
            Gate::Pure => p.is_pure(),
            Gate::SimplicialPoset => p.is_simplicial_poset(),
            Gate::SimplicialComplex => p.is_simplicial_complex(),
            Gate::LocallyBooleanAbove => p.is_simplicial_poset() || all_facets_simple(p),
            Gate::SimpleFacets => all_facets_simple(p),
            Gate::IsomorphicFacets => p.facets_isomorphic_as_lattices(),
        }
    }
}

fn all_facets_simple(p: &RankedPoset) -> bool {
    p.maximal_elements()
        .into_iter()
        .all(|h| p.is_simple_facet(h).expect("maximal by construction"))
}

/// Evaluates gates in order, stopping at the first failure.
fn evaluate_gates(p: &RankedPoset, gates: &[Gate]) -> (Vec<HypothesisGate>, bool) {
    let mut out = Vec::with_capacity(gates.len());
    let mut ok = true;
    for &gate in gates {
        let status = if !ok {
            GateStatus::Skipped
        } else if gate.holds(p) {
            GateStatus::Met
        } else {
            ok = false;
            GateStatus::NotMet
        };
        out.push(HypothesisGate {
            name: gate.name(),
            status,
        });
    }
    (out, ok)
}

fn finish(check: CheckId, hypotheses: Vec<HypothesisGate>, records: Vec<CheckRecord>) -> VerificationReport {
    let verdict = if records.iter().any(|r| r.outcome == Outcome::Fail) {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    VerificationReport {
        check,
        hypotheses,
        verdict,
        records,
    }
}

fn vacuous(check: CheckId, hypotheses: Vec<HypothesisGate>) -> VerificationReport {
    VerificationReport {
        check,
        hypotheses,
        verdict: Verdict::Vacuous,
        records: Vec::new(),
    }
}

/// Compositions a check iterates: the whole set for the poset's max rank,
/// or just the filter when one is given.
fn compositions_in_scope(p: &RankedPoset, filter: Option<&Composition>) -> Vec<Composition> {
    match filter {
        Some(f) => vec![f.clone()],
        None => compositions_of(p.max_rank()),
    }
}

/// Every degree sequence majorizes (or equals) the sequences of
/// permuted compositions with a larger or equal first part.
pub fn check_majorization_theorem(p: &RankedPoset) -> VerificationReport {
    majorization_theorem_with(p, None)
}

fn majorization_theorem_with(
    p: &RankedPoset,
    filter: Option<&Composition>,
) -> VerificationReport {
    let (gates, ok) = evaluate_gates(p, &[Gate::Pure, Gate::SimplicialPoset]);
    if !ok {
        return vacuous(CheckId::MajorizationTheorem, gates);
    }
    let mut cache = SeqCache::new(p);
    let mut records = Vec::new();
    for sigma in compositions_in_scope(p, filter) {
        for pi in sigma.permutations() {
            if pi.first() < sigma.first() {
                continue;
            }
            let a = cache.sequence(&sigma);
            let b = cache.sequence(&pi);
            let rel = compare(&a, &b);
            let holds = matches!(
                rel.verdict,
                MajorizationVerdict::Majorizes | MajorizationVerdict::Equal
            );
            records.push(CheckRecord {
                sigma: Some(sigma.parts().to_vec()),
                pi: Some(pi.parts().to_vec()),
                outcome: if holds { Outcome::Pass } else { Outcome::Fail },
                detail: format!("compare = {}", rel.verdict),
                witness: (!holds).then(|| Witness {
                    sequences: vec![
                        LabeledSequence {
                            label: seq_label(&sigma),
                            sequence: a.clone(),
                        },
                        LabeledSequence {
                            label: seq_label(&pi),
                            sequence: b.clone(),
                        },
                    ],
                    violated_prefix: rel.first_violation,
                    ..Witness::default()
                }),
            });
        }
    }
    finish(CheckId::MajorizationTheorem, gates, records)
}

/// Per-face monotonicity: a face's degree for sigma dominates the degree
/// of any larger face for a permutation with strictly larger first part.
pub fn check_lemma_face_below(p: &RankedPoset) -> VerificationReport {
    lemma_face_below_with(p, None)
}

fn lemma_face_below_with(p: &RankedPoset, filter: Option<&Composition>) -> VerificationReport {
    let (gates, ok) = evaluate_gates(p, &[Gate::Pure, Gate::LocallyBooleanAbove]);
    if !ok {
        return vacuous(CheckId::LemmaFaceBelow, gates);
    }
    let mut cache = SeqCache::new(p);
    let mut records = Vec::new();
    for sigma in compositions_in_scope(p, filter) {
        for pi in sigma.permutations() {
            if pi.first() <= sigma.first() {
                continue;
            }
            let lo = sigma.first();
            let hi = pi.first();
            let counts_lo = cache.counts(&sigma).to_vec();
            let counts_hi = cache.counts(&pi).to_vec();
            let rel = p.rank_relation(lo, hi);
            let mut pairs = 0usize;
            let mut violation: Option<Witness> = None;
            'search: for (i, f) in p.level(lo).enumerate() {
                for (j, g) in p.level(hi).enumerate() {
                    if !rel.related(i, j) {
                        continue;
                    }
                    pairs += 1;
                    if counts_lo[i] < counts_hi[j] {
                        violation = Some(Witness {
                            faces: vec![p.name(f).to_string(), p.name(g).to_string()],
                            note: Some(format!(
                                "d^{}({}) = {} < {} = d^{}({})",
                                sigma,
                                p.name(f),
                                counts_lo[i],
                                counts_hi[j],
                                pi,
                                p.name(g)
                            )),
                            ..Witness::default()
                        });
                        break 'search;
                    }
                }
            }
            let outcome = if violation.is_none() {
                Outcome::Pass
            } else {
                Outcome::Fail
            };
            records.push(CheckRecord {
                sigma: Some(sigma.parts().to_vec()),
                pi: Some(pi.parts().to_vec()),
                outcome,
                detail: format!("{pairs} comparable face pairs"),
                witness: violation,
            });
        }
    }
    finish(CheckId::LemmaFaceBelow, gates, records)
}

/// Face-count symmetry bound: f_i <= f_(k-i) for i below the middle.
pub fn check_stanley(p: &RankedPoset) -> VerificationReport {
    let (gates, ok) = evaluate_gates(p, &[Gate::Pure, Gate::SimplicialPoset]);
    if !ok {
        return vacuous(CheckId::Stanley, gates);
    }
    let f = f_vector(p);
    let k = p.max_rank();
    let mut records = Vec::new();
    for i in 1..=k / 2 {
        let (lo, hi) = (f.0[i - 1], f.0[k - i - 1]);
        records.push(CheckRecord {
            sigma: None,
            pi: None,
            outcome: if lo <= hi { Outcome::Pass } else { Outcome::Fail },
            detail: format!("f_{i} = {lo} vs f_{} = {hi}", k - i),
            witness: (lo > hi).then(|| Witness {
                note: Some(format!("f_{i} exceeds f_{}", k - i)),
                ..Witness::default()
            }),
        });
    }
    finish(CheckId::Stanley, gates, records)
}

/// The conjugate of the rank-i two-part sequence majorizes the reversed
/// two-part sequence.
pub fn check_conjugate_relation(p: &RankedPoset) -> VerificationReport {
    conjugate_relation_with(p, None)
}

fn conjugate_relation_with(p: &RankedPoset, filter: Option<&Composition>) -> VerificationReport {
    let (gates, ok) = evaluate_gates(p, &[Gate::Pure, Gate::SimplicialComplex]);
    if !ok {
        return vacuous(CheckId::ConjugateRelation, gates);
    }
    let k = p.max_rank();
    let mut cache = SeqCache::new(p);
    let mut records = Vec::new();
    for i in 1..k {
        let sigma = Composition::new(vec![i, k - i]).expect("two positive parts");
        if let Some(f) = filter {
            if f.parts() != sigma.parts() {
                continue;
            }
        }
        let pi = Composition::new(vec![k - i, i]).expect("two positive parts");
        let conj = cache.sequence(&sigma).conjugate();
        let other = cache.sequence(&pi);
        let rel = compare(&conj, &other);
        let holds = matches!(
            rel.verdict,
            MajorizationVerdict::Majorizes | MajorizationVerdict::Equal
        );
        records.push(CheckRecord {
            sigma: Some(sigma.parts().to_vec()),
            pi: Some(pi.parts().to_vec()),
            outcome: if holds { Outcome::Pass } else { Outcome::Fail },
            detail: format!("conjugate compare = {}", rel.verdict),
            witness: (!holds).then(|| Witness {
                sequences: vec![
                    LabeledSequence {
                        label: format!("conjugate of {}", seq_label(&sigma)),
                        sequence: conj.clone(),
                    },
                    LabeledSequence {
                        label: seq_label(&pi),
                        sequence: other.clone(),
                    },
                ],
                violated_prefix: rel.first_violation,
                ..Witness::default()
            }),
        });
    }
    finish(CheckId::ConjugateRelation, gates, records)
}

/// Degree entries sum to (number of facets) x (multinomial of the
/// composition), hence the sum is permutation-invariant.
pub fn check_sum_identity(p: &RankedPoset) -> VerificationReport {
    sum_identity_with(p, None)
}

fn sum_identity_with(p: &RankedPoset, filter: Option<&Composition>) -> VerificationReport {
    let (gates, ok) = evaluate_gates(p, &[Gate::Pure, Gate::SimplicialPoset]);
    if !ok {
        return vacuous(CheckId::SumIdentity, gates);
    }
    let k = p.max_rank();
    let fk = BigUint::from(p.level_size(k));
    let mut cache = SeqCache::new(p);
    let mut records = Vec::new();
    for sigma in compositions_in_scope(p, filter) {
        let factor = multinomial(k, sigma.parts()).expect("composition of k");
        let expected = &fk * &factor;
        let sum = cache.sequence(&sigma).sum().clone();
        let holds = sum == expected;
        records.push(CheckRecord {
            sigma: Some(sigma.parts().to_vec()),
            pi: None,
            outcome: if holds { Outcome::Pass } else { Outcome::Fail },
            detail: format!("sum = {sum}, f_k * multinomial = {fk} * {factor}"),
            witness: (!holds).then(|| Witness {
                note: Some(format!("expected {expected}, got {sum}")),
                ..Witness::default()
            }),
        });
    }
    finish(CheckId::SumIdentity, gates, records)
}

/// Weak majorization for complexes whose facets are one shared simple
/// polytope, plus the exact sum-ratio relation behind it.
pub fn check_weak_majorization_simple(p: &RankedPoset) -> VerificationReport {
    weak_majorization_simple_with(p, None)
}

fn weak_majorization_simple_with(
    p: &RankedPoset,
    filter: Option<&Composition>,
) -> VerificationReport {
    let (gates, ok) = evaluate_gates(
        p,
        &[Gate::Pure, Gate::SimpleFacets, Gate::IsomorphicFacets],
    );
    if !ok {
        return vacuous(CheckId::WeakMajorizationSimple, gates);
    }
    let k = p.max_rank();
    // faces of one facet by rank; the facets are isomorphic so any
    // representative serves
    let per_facet: Vec<BigUint> = match p.maximal_elements().first() {
        None => Vec::new(),
        Some(&h) => {
            let mut counts = vec![0usize; k + 1];
            for x in p.ideal(h) {
                counts[p.rank(x)] += 1;
            }
            counts.into_iter().map(BigUint::from).collect()
        }
    };
    let mut cache = SeqCache::new(p);
    let mut records = Vec::new();
    for sigma in compositions_in_scope(p, filter) {
        for pi in sigma.permutations() {
            if pi.first() < sigma.first() {
                continue;
            }
            let a = cache.sequence(&sigma);
            let b = cache.sequence(&pi);
            let rel = compare(&a, &b);
            let dominance_ok = matches!(
                rel.verdict,
                MajorizationVerdict::Majorizes
                    | MajorizationVerdict::WeaklyMajorizes
                    | MajorizationVerdict::Equal
            );
            // the sum-ratio relation, cross-multiplied to stay in integers:
            //   sum(d^sigma) / sum(d^pi)
            //     = (N_s1 * C(k-s1, p1)) / (N_p1 * C(k-p1, s1))
            // and that ratio is >= 1
            let (s1, p1) = (sigma.first(), pi.first());
            let lhs = &per_facet[s1] * binomial(k - s1, p1);
            let rhs = &per_facet[p1] * binomial(k - p1, s1);
            let ratio_ok = lhs >= rhs;
            let identity_ok = a.sum() * &rhs == b.sum() * &lhs;
            let holds = dominance_ok && ratio_ok && identity_ok;
            records.push(CheckRecord {
                sigma: Some(sigma.parts().to_vec()),
                pi: Some(pi.parts().to_vec()),
                outcome: if holds { Outcome::Pass } else { Outcome::Fail },
                detail: format!(
                    "compare = {}, ratio {lhs} : {rhs}, sums {} : {}",
                    rel.verdict,
                    a.sum(),
                    b.sum()
                ),
                witness: (!holds).then(|| Witness {
                    sequences: vec![
                        LabeledSequence {
                            label: seq_label(&sigma),
                            sequence: a.clone(),
                        },
                        LabeledSequence {
                            label: seq_label(&pi),
                            sequence: b.clone(),
                        },
                    ],
                    violated_prefix: rel.first_violation,
                    note: Some(format!(
                        "dominance {dominance_ok}, ratio {ratio_ok}, sum identity {identity_ok}"
                    )),
                    ..Witness::default()
                }),
            });
        }
    }
    finish(CheckId::WeakMajorizationSimple, gates, records)
}

/// Hunts for pairs where the majorization conclusion reverses. Needs only
/// purity; findings are reported, never counted as failures.
pub fn scan_counterexample(p: &RankedPoset) -> VerificationReport {
    scan_counterexample_with(p, None)
}

fn scan_counterexample_with(p: &RankedPoset, filter: Option<&Composition>) -> VerificationReport {
    let (gates, ok) = evaluate_gates(p, &[Gate::Pure]);
    if !ok {
        return vacuous(CheckId::CounterexampleScan, gates);
    }
    let mut cache = SeqCache::new(p);
    let mut records = Vec::new();
    for sigma in compositions_in_scope(p, filter) {
        for pi in sigma.permutations() {
            if pi.first() < sigma.first() {
                continue;
            }
            let a = cache.sequence(&sigma);
            let b = cache.sequence(&pi);
            let rel = compare(&a, &b);
            let reversed = matches!(
                rel.verdict,
                MajorizationVerdict::MajorizedBy
                    | MajorizationVerdict::WeaklyMajorizedBy
                    | MajorizationVerdict::Incomparable
            );
            if !reversed {
                continue;
            }
            records.push(CheckRecord {
                sigma: Some(sigma.parts().to_vec()),
                pi: Some(pi.parts().to_vec()),
                outcome: Outcome::Finding,
                detail: format!("compare = {}", rel.verdict),
                witness: Some(Witness {
                    sequences: vec![
                        LabeledSequence {
                            label: seq_label(&sigma),
                            sequence: a.clone(),
                        },
                        LabeledSequence {
                            label: seq_label(&pi),
                            sequence: b.clone(),
                        },
                    ],
                    violated_prefix: rel.first_violation,
                    ..Witness::default()
                }),
            });
        }
    }
    finish(CheckId::CounterexampleScan, gates, records)
}

/// Runs one check, optionally restricted to a single composition (and its
/// permutations). Checks that do not iterate compositions ignore the
/// filter; the conjugate check matches it against its two-part pairs.
pub fn run_check(
    p: &RankedPoset,
    check: CheckId,
    filter: Option<&Composition>,
) -> VerificationReport {
    match check {
        CheckId::MajorizationTheorem => majorization_theorem_with(p, filter),
        CheckId::LemmaFaceBelow => lemma_face_below_with(p, filter),
        CheckId::Stanley => check_stanley(p),
        CheckId::ConjugateRelation => conjugate_relation_with(p, filter),
        CheckId::SumIdentity => sum_identity_with(p, filter),
        CheckId::WeakMajorizationSimple => weak_majorization_simple_with(p, filter),
        CheckId::CounterexampleScan => scan_counterexample_with(p, filter),
    }
}

/// All checks in canonical order.
pub fn run_all(p: &RankedPoset, filter: Option<&Composition>) -> Vec<VerificationReport> {
    CheckId::ALL
        .into_iter()
        .map(|c| run_check(p, c, filter))
        .collect()
}
