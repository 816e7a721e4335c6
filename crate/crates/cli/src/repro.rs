//! One-shot reproduction of the published results at desk scale. Every item
//! states the expected verdict; certificate items can be re-checked with
//! `sqfree verify`.

use std::path::{Path, PathBuf};

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use sqfree_core::covering::PathPattern;
use sqfree_core::paths::{
    check_cycle_tpartite, colon_cycle_analysis, cycle_graph, cycle_witness, degree3_witness, path_graph,
    path_hypergraph, star_graph,
};
use sqfree_core::symbolic::check_badness_criterion;
use sqfree_core::Hypergraph;

use crate::certificate::Certificate;
use crate::instance::{self, Instance};
use crate::job::Job;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    All,
    Section1,
    Section3,
    Section4,
    Section5,
}

enum Run {
    Certificate { job: Job, instance: Instance, expect: bool },
    Check(Box<dyn Fn(u64) -> Result<(bool, Value)>>),
}

struct Item {
    id: String,
    section: Section,
    title: String,
    run: Run,
}

#[derive(Clone, Debug, Serialize)]
pub struct ItemResult {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub file: Option<PathBuf>,
}

fn corpus_hypergraph(name: &str) -> Instance {
    let v = instance::load(&format!("corpus:{name}")).expect("bundled corpus");
    Instance::of_hypergraph(&instance::hypergraph(&v, false).expect("bundled hypergraph"))
}

fn corpus_graph(name: &str) -> Instance {
    Instance::of_graph(&instance::graph(&instance::load(&format!("corpus:{name}")).expect("bundled corpus")).unwrap())
}

fn edge_ideal_of_graph(name: &str) -> Instance {
    let v = instance::load(&format!("corpus:{name}")).expect("bundled corpus");
    Instance::of_ideal(&instance::graph(&v).unwrap().edge_hypergraph().edge_ideal())
}

fn cubic_cycle(n: usize) -> Instance {
    Instance::of_hypergraph(&path_hypergraph(&cycle_graph(n).unwrap(), 3).unwrap())
}

fn cert(id: &str, section: Section, title: &str, job: Job, instance: Instance, expect: bool) -> Item {
    Item { id: id.into(), section, title: title.into(), run: Run::Certificate { job, instance, expect } }
}

fn check(id: &str, section: Section, title: &str, f: impl Fn(u64) -> Result<(bool, Value)> + 'static) -> Item {
    Item { id: id.into(), section, title: title.into(), run: Run::Check(Box::new(f)) }
}

/// Random 3-uniform 3-partite hypergraph: classes of the given sizes, each
/// transversal triple kept with probability `p`. Always has at least one edge.
pub fn random_tripartite(sizes: [usize; 3], p: f64, rng: &mut ChaCha8Rng) -> Hypergraph {
    let offsets = [0, sizes[0], sizes[0] + sizes[1]];
    let mut edges = Vec::new();
    for a in 1..=sizes[0] {
        for b in 1..=sizes[1] {
            for c in 1..=sizes[2] {
                if rng.gen_bool(p) {
                    edges.push(vec![a + offsets[0], b + offsets[1], c + offsets[2]]);
                }
            }
        }
    }
    if edges.is_empty() {
        edges.push(vec![1, offsets[1] + 1, offsets[2] + 1]);
    }
    Hypergraph::new(sizes.iter().sum(), edges).expect("distinct transversal triples form a clutter")
}

/// All 255 nonempty sets of transversal triples over classes `{1,2},{3,4},{5,6}`.
pub fn tripartite_family() -> Vec<Hypergraph> {
    let triples: Vec<Vec<usize>> =
        (0..8).map(|m| vec![1 + (m & 1), 3 + (m >> 1 & 1), 5 + (m >> 2 & 1)]).collect();
    (1u32..256)
        .map(|mask| {
            let edges = (0..8).filter(|i| mask >> i & 1 == 1).map(|i| triples[i].clone()).collect();
            Hypergraph::new(6, edges).unwrap()
        })
        .collect()
}

/// The 255-member family plus 200 seeded random instances on at most 9 vertices.
pub fn badness_family(seed: u64) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut family = tripartite_family();
    for _ in 0..200 {
        let sizes = [rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=3)];
        let p = rng.gen_range(0.2..0.9);
        family.push(random_tripartite(sizes, p, &mut rng));
    }
    family
}

fn badness_sweep(seed: u64, split: bool) -> Result<(bool, Value)> {
    let family = badness_family(seed);
    let mut disagreements = Vec::new();
    for h in &family {
        let r = check_badness_criterion(h)?;
        if !(if split { r.split_agrees } else { r.agree }) {
            disagreements.push(json!({ "edges": h.edge_lists(), "criterion": r.criterion, "direct": r.direct, "unrescued": r.unrescued }));
        }
    }
    Ok((disagreements.is_empty(), json!({ "instances": family.len(), "disagreements": disagreements })))
}

fn items() -> Vec<Item> {
    use Section::*;
    let mut v = vec![
        cert("s1-c5-edge-ideal", Section1, "C_5 edge ideal fails equality by n = 3", Job::Equality { n: 3, up_to: true }, edge_ideal_of_graph("c5"), false),
        cert("s1-c7-edge-ideal", Section1, "C_7 edge ideal fails equality by n = 4", Job::Equality { n: 4, up_to: true }, edge_ideal_of_graph("c7"), false),
        cert("s1-k23-edge-ideal", Section1, "K_{2,3} edge ideal: equality up to n = 3", Job::Equality { n: 3, up_to: true }, edge_ideal_of_graph("k23"), true),
        cert("s3-bad-equality", Section3, "bad hypergraph: I^(2) != I^2", Job::Equality { n: 2, up_to: false }, corpus_hypergraph("bad"), false),
        cert("s3-bad-456-equality", Section3, "bad + {4,5,6}: I^(2) = I^2", Job::Equality { n: 2, up_to: false }, corpus_hypergraph("bad_plus_456"), true),
        cert("s3-bad-456-badness", Section3, "bad + {4,5,6}: criterion holds and agrees", Job::Badness, corpus_hypergraph("bad_plus_456"), true),
        cert("s3-bad-146-badness", Section3, "bad + {1,4,6}: criterion fails and agrees", Job::Badness, corpus_hypergraph("bad_plus_146"), false),
        cert("s3-bad-packing", Section3, "bad hypergraph fails the packing property", Job::Packing, corpus_hypergraph("bad"), false),
        cert("s3-c4-packing", Section3, "C_4 has the packing property", Job::Packing, corpus_hypergraph_of_graph("c4"), true),
        cert("s3-c5-packing", Section3, "C_5 fails the packing property", Job::Packing, corpus_hypergraph_of_graph("c5"), false),
        cert("s3-complete-equality", Section3, "complete (2,2,2) 3-partite: equality up to n = 3", Job::Equality { n: 3, up_to: true }, corpus_hypergraph("complete_222"), true),
        cert("s3-complete-waldschmidt", Section3, "complete (2,2,2) 3-partite: Waldschmidt constant 3", Job::Waldschmidt { depth: 3 }, ideal_of(corpus_hypergraph("complete_222")), true),
        cert("s3-k22-waldschmidt", Section3, "K_{2,2}: Waldschmidt constant 2", Job::Waldschmidt { depth: 3 }, edge_ideal_of_graph("c4"), true),
        check("s3-badness-sweep", Section3, "bad-triple criterion agrees with the direct check on 455 instances", |seed| badness_sweep(seed, false)),
        check("s3-split-sweep", Section3, "split-support criterion agrees with the direct check on 455 instances", |seed| badness_sweep(seed, true)),
        cert("s4-star-classify", Section4, "3-star: cubic path ideal fails at n = 2", Job::ClassifyCubic { budget: 3 }, corpus_graph("star3"), false),
        cert("s4-p6-classify", Section4, "P_6: equality predicted and holds up to n = 3", Job::ClassifyCubic { budget: 3 }, corpus_graph("p6"), true),
    ];
    for n in [3, 6, 9] {
        v.push(cert(&format!("s4-c{n}-classify"), Section4, &format!("C_{n}: equality predicted and holds up to n = 3"), Job::ClassifyCubic { budget: 3 }, corpus_graph(&format!("c{n}")), true));
    }
    for n in [4, 5, 7, 8] {
        v.push(cert(&format!("s4-c{n}-classify"), Section4, &format!("C_{n}: cubic path ideal fails with a cycle witness"), Job::ClassifyCubic { budget: 3 }, corpus_graph(&format!("c{n}")), false));
    }
    for n in [6, 7, 9] {
        v.push(cert(&format!("s4-c{n}-partition"), Section4, &format!("H_3(C_{n}) is 3-partite iff 3 | {n}"), Job::Partition { r: 3 }, cubic_cycle(n), n % 3 == 0));
    }
    v.push(check("s4-tpartite-sweep", Section4, "H_t(C_n) is t-partite iff t | n, 3 <= n <= 12, 2 <= t <= 6", |_| {
        let mut failures = Vec::new();
        for n in 3..=12 {
            for t in 2..=n.min(6) {
                if !check_cycle_tpartite(n, t)?.agree {
                    failures.push([n, t]);
                }
            }
        }
        Ok((failures.is_empty(), json!({ "failures": failures })))
    }));
    v.push(check("s4-witnesses", Section4, "degree-3 and cycle witnesses verified", |_| {
        let star = degree3_witness(&star_graph(3)?)?.map(|m| m.to_string());
        let mut cycles = Vec::new();
        for n in [4, 5, 7, 8, 10, 11] {
            let order: Vec<usize> = (1..=n).collect();
            let (m, level) = cycle_witness(&cycle_graph(n)?, &order)?;
            cycles.push(json!({ "n": n, "witness": m, "level": level }));
        }
        Ok((star.as_deref() == Some("x1^2*x2*x3*x4"), json!({ "star": star, "cycles": cycles })))
    }));
    v.push(check("s4-colon", Section4, "(J:x1) structure, balance and equality for k <= 3; witness for k = 4", |_| {
        let reports = (1..=4).map(colon_cycle_analysis).collect::<sqfree_core::Result<Vec<_>>>()?;
        Ok((reports.iter().all(|r| r.holds()), serde_json::to_value(reports)?))
    }));
    v.push(check("s4-path-trees", Section4, "H_t(P_k) is a simplicial tree, t = 2, 3, k <= 12", |_| {
        let mut failures = Vec::new();
        for k in 3..=12 {
            for t in 2..=3 {
                if !path_hypergraph(&path_graph(k)?, t)?.is_simplicial_tree()? {
                    failures.push([k, t]);
                }
            }
        }
        Ok((failures.is_empty(), json!({ "failures": failures })))
    }));
    for p in [7, 8, 10, 11] {
        v.push(cert(&format!("s5-mengerian-c{p}"), Section5, &format!("H_3(C_{p}) has a packing gap with 0/1 weights"), Job::Mengerian { c_max: 1, cross_check: None }, cubic_cycle(p), false));
    }
    v.push(cert("s5-mengerian-c12", Section5, "H_3(C_12) has a packing gap with weights <= 2", Job::Mengerian { c_max: 2, cross_check: None }, cubic_cycle(12), false));
    for p in 3..=12 {
        let expect = matches!(p, 3 | 6 | 9);
        let title = format!("application 1, p = {p}: {}", if expect { "equality" } else { "gap" });
        v.push(cert(&format!("s5-application1-p{p}"), Section5, &title, Job::Application { which: 1, p, a_max: 2, pattern: None }, Instance::None, expect));
    }
    for pattern in [PathPattern::Band, PathPattern::TailSingleton] {
        let name = serde_json::to_value(pattern).unwrap().as_str().unwrap().to_string();
        v.push(cert(&format!("s5-application2-p5-{name}"), Section5, &format!("application 2, p = 5, {name} reading: equality"), Job::Application { which: 2, p: 5, a_max: 2, pattern: Some(pattern) }, Instance::None, true));
    }
    v
}

fn corpus_hypergraph_of_graph(name: &str) -> Instance {
    let v = instance::load(&format!("corpus:{name}")).expect("bundled corpus");
    Instance::of_hypergraph(&instance::graph(&v).unwrap().edge_hypergraph())
}

fn ideal_of(h: Instance) -> Instance {
    Instance::of_ideal(&h.as_hypergraph().unwrap().edge_ideal())
}

fn in_section(item: Section, wanted: Section) -> bool {
    wanted == Section::All || item == wanted
}

/// Runs the selected items, writing one file per item into `out_dir`.
pub fn run(section: Section, seed: u64, out_dir: &Path) -> Result<Vec<ItemResult>> {
    let mut results = Vec::new();
    for item in items().into_iter().filter(|i| in_section(i.section, section)) {
        let result = match item.run {
            Run::Certificate { job, instance, expect } => {
                let c = Certificate::issue(job, instance)?;
                let file = c.write_atomic(out_dir, &item.id)?;
                ItemResult {
                    passed: c.holds == expect,
                    detail: format!("holds = {}, expected {expect}", c.holds),
                    id: item.id,
                    title: item.title,
                    file: Some(file),
                }
            }
            Run::Check(f) => {
                let (passed, report) = f(seed)?;
                let file = out_dir.join(format!("{}.json", item.id));
                std::fs::create_dir_all(out_dir)?;
                let tmp = out_dir.join(format!(".{}.json.tmp", item.id));
                std::fs::write(&tmp, serde_json::to_string_pretty(&json!({ "id": item.id, "seed": seed, "passed": passed, "report": report }))? + "\n")?;
                std::fs::rename(&tmp, &file)?;
                ItemResult { passed, detail: "check".into(), id: item.id, title: item.title, file: Some(file) }
            }
        };
        results.push(result);
    }
    Ok(results)
}
