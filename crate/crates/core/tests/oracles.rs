//! Extraction, pruning and centrality against independent brute-force
//! reimplementations on random inputs.

use std::collections::BTreeMap;
use std::num::NonZeroUsize;

use letternet_core::extraction::{
    extract_cooccurrences, extract_window_pairs, Context, CooccurConfig, RelationKind, RelationRecord, WindowConfig,
};
use letternet_core::network::{centrality, merge_graphs, prune, EdgeKey, LexicalGraph, Measure, PruneRule, PruneSpec};
use letternet_core::pipeline::{AnnotatedDoc, Token};
use letternet_core::{Lexeme, PosClass};
use proptest::prelude::*;

const CLASSES: [PosClass; 10] = [
    PosClass::Noun,
    PosClass::Verb,
    PosClass::Adj,
    PosClass::Adv,
    PosClass::Pron,
    PosClass::Modal,
    PosClass::Det,
    PosClass::Prep,
    PosClass::Conj,
    PosClass::Punct,
];

fn lemma_for(pos: PosClass, pick: usize) -> &'static str {
    match pos {
        PosClass::Noun => ["church", "man", "god", "truth"][pick % 4],
        PosClass::Verb => ["be", "have", "do", "see", "come", "make"][pick % 6],
        PosClass::Pron => ["he", "we", "it"][pick % 3],
        PosClass::Punct => [",", ":", "."][pick % 3],
        _ => ["x", "y"][pick % 2],
    }
}

fn sentence() -> impl Strategy<Value = Vec<(PosClass, &'static str)>> {
    prop::collection::vec((0..CLASSES.len(), 0..12usize), 0..=10).prop_map(|v| {
        v.into_iter()
            .map(|(c, p)| (CLASSES[c], lemma_for(CLASSES[c], p)))
            .collect()
    })
}

fn doc_of(sentences: &[Vec<(PosClass, &str)>]) -> AnnotatedDoc {
    let mut doc = AnnotatedDoc::new("R");
    for s in sentences {
        doc.push_sentence(
            s.iter()
                .map(|&(pos, lemma)| Token {
                    surface: lemma.to_string(),
                    normalized: lemma.to_string(),
                    lemma: lemma.to_string(),
                    pos,
                    sent_idx: 0,
                    tok_idx: 0,
                })
                .collect(),
        );
    }
    doc
}

/// Every (verb, noun) position pair is checked against the rule as stated:
/// the noun is the nearest noun on its side, at most `max` counted tokens
/// lie between, and no non-auxiliary verb lies between.
fn window_oracle(doc: &AnnotatedDoc, max: usize, blocker: bool, count_punct: bool) -> Vec<RelationRecord> {
    let mut out = Vec::new();
    for (si, s) in doc.sentences.iter().enumerate() {
        for v in 0..s.len() {
            if s[v].pos != PosClass::Verb {
                continue;
            }
            for (kind, left) in [(RelationKind::Subj, true), (RelationKind::Obj, false)] {
                let mut chosen = None;
                for n in 0..s.len() {
                    if s[n].pos != PosClass::Noun || (left && n >= v) || (!left && n <= v) {
                        continue;
                    }
                    let between = if left { n + 1..v } else { v + 1..n };
                    let toks = &s[between];
                    let counted = toks.iter().filter(|t| count_punct || t.pos != PosClass::Punct).count();
                    let noun_between = toks.iter().any(|t| t.pos == PosClass::Noun);
                    let verb_between = toks
                        .iter()
                        .any(|t| t.pos == PosClass::Verb && !["be", "have", "do"].contains(&t.lemma.as_str()));
                    if counted <= max && !noun_between && !(blocker && verb_between) {
                        assert!(chosen.is_none(), "two candidates on one side");
                        chosen = Some(n);
                    }
                }
                if let Some(n) = chosen {
                    out.push(RelationRecord::pair(
                        kind,
                        s[n].lemma.as_str(),
                        s[v].lemma.as_str(),
                        "R",
                        si,
                    ));
                }
            }
        }
    }
    out
}

fn cooccur_oracle(doc: &AnnotatedDoc, window: Option<usize>) -> Vec<RelationRecord> {
    let keep = [PosClass::Noun, PosClass::Verb, PosClass::Adj];
    let mut out = Vec::new();
    for (si, s) in doc.sentences.iter().enumerate() {
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if keep.contains(&s[i].pos) && keep.contains(&s[j].pos) && window.is_none_or(|k| j - i <= k) {
                    out.push(RelationRecord::cooccur(s[i].lexeme(), s[j].lexeme(), "R", si));
                }
            }
        }
    }
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn window_pairs_match_oracle(
        sents in prop::collection::vec(sentence(), 1..3),
        max in 1usize..6,
        blocker: bool,
        count_punct: bool,
    ) {
        let doc = doc_of(&sents);
        let cfg = WindowConfig {
            max_dist: NonZeroUsize::new(max).unwrap(),
            verb_blocker: blocker,
            count_punctuation: count_punct,
        };
        let got = extract_window_pairs(&doc, &cfg);
        prop_assert_eq!(&got, &window_oracle(&doc, max, blocker, count_punct));
        for r in &got {
            prop_assert!(r.first.pos == PosClass::Noun && r.second.pos == PosClass::Verb);
        }
    }

    #[test]
    fn cooccurrences_match_oracle(sents in prop::collection::vec(sentence(), 1..3), k in 1usize..6, windowed: bool) {
        let doc = doc_of(&sents);
        let cfg = CooccurConfig {
            context: if windowed { Context::Window(NonZeroUsize::new(k).unwrap()) } else { Context::Sentence },
            ..CooccurConfig::default()
        };
        let mut got = extract_cooccurrences(&doc, &cfg);
        got.sort();
        prop_assert_eq!(got, cooccur_oracle(&doc, windowed.then_some(k)));
    }
}

fn graph() -> impl Strategy<Value = LexicalGraph> {
    let node = (0..4usize, 0..40u32).prop_map(|(c, i)| Lexeme::new(format!("w{i}"), CLASSES[c]));
    (
        prop::collection::btree_map(node, 1..30u64, 0..=50),
        prop::collection::vec(
            (
                any::<prop::sample::Index>(),
                any::<prop::sample::Index>(),
                0..3usize,
                1..12u64,
            ),
            0..80,
        ),
    )
        .prop_map(|(nodes, edges)| {
            let mut g = LexicalGraph::new();
            let keys: Vec<Lexeme> = nodes.keys().cloned().collect();
            for (n, f) in nodes {
                g.add_node(n, f);
            }
            if !keys.is_empty() {
                for (a, b, k, w) in edges {
                    let kind = RelationKind::ALL[k];
                    g.add_edge(EdgeKey::new(a.get(&keys).clone(), b.get(&keys).clone(), kind), w);
                }
            }
            g
        })
}

/// `x > mean + k * sd` decided in exact rational arithmetic, for `k` a
/// multiple of one half: with n*mean = S and n^2*var = V, it reads
/// 2(n*x - S) > 2k*sqrt(V).
fn above_mean(values: &[u64], x: u64, twice_k: u64) -> bool {
    let n = values.len() as i128;
    let s: i128 = values.iter().map(|&v| v as i128).sum();
    let v: i128 = values.iter().map(|&v| (n * v as i128 - s).pow(2)).sum::<i128>() / n;
    let lhs = 2 * (n * x as i128 - s);
    lhs > 0 && lhs * lhs > (twice_k as i128).pow(2) * v
}

fn prune_oracle(g: &LexicalGraph, node_rule: PruneRule, edge_rule: PruneRule, drop_isolated: bool) -> LexicalGraph {
    let freqs: Vec<u64> = g.nodes().values().copied().collect();
    let weights: Vec<u64> = g.edges().values().copied().collect();
    let keeps = |rule: PruneRule, all: &[u64], x: u64| match rule {
        PruneRule::Threshold(m) => x > m,
        PruneRule::MeanSd(k) => above_mean(all, x, (k * 2.0) as u64),
    };
    let nodes: BTreeMap<Lexeme, u64> = g
        .nodes()
        .iter()
        .filter(|(_, &f)| keeps(node_rule, &freqs, f))
        .map(|(n, &f)| (n.clone(), f))
        .collect();
    let edges: BTreeMap<EdgeKey, u64> = g
        .edges()
        .iter()
        .filter(|(k, &w)| {
            keeps(edge_rule, &weights, w) && nodes.contains_key(&k.source) && nodes.contains_key(&k.target)
        })
        .map(|(k, &w)| (k.clone(), w))
        .collect();
    let nodes = nodes
        .into_iter()
        .filter(|(n, _)| !drop_isolated || edges.keys().any(|k| k.source == *n || k.target == *n))
        .collect();
    LexicalGraph::from_parts(nodes, edges).unwrap()
}

fn rule() -> impl Strategy<Value = PruneRule> {
    prop_oneof![
        (0..15u64).prop_map(PruneRule::Threshold),
        (0..7u64).prop_map(|h| PruneRule::MeanSd(h as f64 / 2.0))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn prune_matches_oracle(g in graph(), nr in rule(), er in rule(), drop_isolated: bool) {
        let spec = PruneSpec { drop_isolated, ..PruneSpec::new(nr, er) };
        let p = prune(&g, &spec).unwrap();
        prop_assert_eq!(&p, &prune_oracle(&g, nr, er, drop_isolated));
        prop_assert!(p.is_subgraph_of(&g));
    }

    #[test]
    fn prune_is_monotone(g in graph(), a in 0..15u64, b in 0..15u64, ha in 0..7u64, hb in 0..7u64) {
        let (lo, hi) = (a.min(b), a.max(b));
        let spec = |n, e| PruneSpec::new(n, e);
        let strict = prune(&g, &spec(PruneRule::Threshold(hi), PruneRule::Threshold(hi))).unwrap();
        let loose = prune(&g, &spec(PruneRule::Threshold(lo), PruneRule::Threshold(lo))).unwrap();
        prop_assert!(strict.is_subgraph_of(&loose));
        let (klo, khi) = (ha.min(hb) as f64 / 2.0, ha.max(hb) as f64 / 2.0);
        let strict = prune(&g, &spec(PruneRule::MeanSd(khi), PruneRule::MeanSd(khi))).unwrap();
        let loose = prune(&g, &spec(PruneRule::MeanSd(klo), PruneRule::MeanSd(klo))).unwrap();
        prop_assert!(strict.is_subgraph_of(&loose));
    }

    #[test]
    fn weighted_degree_sums_to_twice_weight(g in graph()) {
        let total: u64 = centrality(&g, Measure::WeightedDegree).iter().map(|(_, s)| s).sum();
        prop_assert_eq!(total, 2 * g.total_weight());
        let degree: u64 = centrality(&g, Measure::Degree).iter().map(|(_, s)| s).sum();
        prop_assert_eq!(degree, 2 * g.edge_count() as u64);
        let directed = g.edges().keys().filter(|k| k.is_directed()).count() as u64;
        let ins: u64 = centrality(&g, Measure::InDegree).iter().map(|(_, s)| s).sum();
        let outs: u64 = centrality(&g, Measure::OutDegree).iter().map(|(_, s)| s).sum();
        prop_assert_eq!((ins, outs), (directed, directed));
    }

    #[test]
    fn rankings_are_sorted_and_complete(g in graph()) {
        for m in Measure::ALL {
            let r = centrality(&g, m);
            prop_assert_eq!(r.len(), g.node_count());
            for w in r.windows(2) {
                prop_assert!(w[0].1 > w[1].1 || (w[0].1 == w[1].1 && w[0].0 < w[1].0));
            }
        }
    }

    #[test]
    fn merge_is_commutative_and_associative(a in graph(), b in graph(), c in graph()) {
        prop_assert_eq!(merge_graphs([&a, &b]), merge_graphs([&b, &a]));
        let left = merge_graphs([&merge_graphs([&a, &b]), &c]);
        let right = merge_graphs([&a, &merge_graphs([&b, &c])]);
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(merge_graphs([&a, &LexicalGraph::new()]), a);
    }
}
