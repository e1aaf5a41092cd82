//! End-to-end acceptance checks over the graph6 corpus.
//!
//! Runs without the libtest harness and prints one PASS or FAIL line per
//! check; exits non-zero if any check fails.

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use koenig::batch::{verify_conjecture, BatchOptions, NullSink};
use koenig::InputSource;
use koenig_core::invariants::{
    brute_force_linear_forest, cut_sets, ideal_height, is_unmixed, path_cover_number,
};
use koenig_core::recognition::{find_weakly_closed_ordering, is_cocomparability_oracle};
use koenig_core::{named, parse_graph6, Graph, InvariantReport, VertexSet};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

/// Invariant reports built during the run; every one of them passed the
/// inline `sc* <= pi` assertion.
static REPORTS: AtomicUsize = AtomicUsize::new(0);

fn report(g: &Graph) -> InvariantReport {
    REPORTS.fetch_add(1, Ordering::Relaxed);
    InvariantReport::compute(g).expect("report")
}

fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

fn corpus(name: &str) -> Vec<Graph> {
    std::fs::read_to_string(corpus_path(name))
        .unwrap_or_else(|e| panic!("{name}: {e}"))
        .lines()
        .map(|l| parse_graph6(l).unwrap_or_else(|e| panic!("{name}: {e}")))
        .collect()
}

fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| corpus(&format!("connected-{k}.g6")))
        .collect()
}

fn all_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| corpus(&format!("all-{k}.g6")))
        .collect()
}

/// Components of `G - S` by depth-first search on the induced subgraph.
fn components_after_deleting(g: &Graph, s: VertexSet) -> usize {
    let n = g.order();
    let mut seen = vec![false; n + 1];
    let mut count = 0;
    for v in 1..=n {
        if s.contains(v) || seen[v] {
            continue;
        }
        count += 1;
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(u) = stack.pop() {
            for w in (1..=n).filter(|&w| !s.contains(w) && g.has_edge(u, w)) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn characterisation() -> Result<String, String> {
    let graphs = connected_up_to(7);
    ensure(graphs.len() == 996, || {
        format!("expected 996 graphs, got {}", graphs.len())
    })?;
    let mut koenig = 0;
    for g in &graphs {
        let n = g.order();
        let r = report(g);
        let family = cut_sets(g).map_err(|e| e.to_string())?;
        let min_height = family
            .iter()
            .map(|c| c.set.len() + n - c.components)
            .min()
            .expect("the empty set is a cut set");
        let lf = brute_force_linear_forest(g).map_err(|e| e.to_string())?;
        let g6 = koenig_core::emit_graph6(g);
        ensure(n - r.unrestricted_scattering == min_height, || {
            format!(
                "{g6}: n - sc* = {} but min prime height {min_height}",
                n - r.unrestricted_scattering
            )
        })?;
        if n >= 2 {
            let h = ideal_height(g).map_err(|e| e.to_string())?;
            ensure(h == min_height && r.ideal_height == Some(h), || {
                format!("{g6}: height {h} vs {min_height}")
            })?;
            ensure(r.quotient_dim == Some(2 * n - h), || {
                format!("{g6}: dimension")
            })?;
        }
        ensure(
            r.koenig_type == (lf == n - r.unrestricted_scattering),
            || {
                format!(
                    "{g6}: koenig {} but LF = {lf}, n - sc* = {}",
                    r.koenig_type,
                    n - r.unrestricted_scattering
                )
            },
        )?;
        koenig += usize::from(r.koenig_type);
    }
    Ok(format!(
        "{} connected graphs, {koenig} of König type",
        graphs.len()
    ))
}

fn oracle_equivalence() -> Result<String, String> {
    let mut graphs = all_up_to(6);
    let fixtures = graphs.len();
    let mut rng = StdRng::seed_from_u64(0x6b6f_656e_6967);
    for _ in 0..10_000 {
        let n = rng.random_range(1..=7);
        let p: f64 = rng.random_range(0.0..1.0);
        let edges: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect();
        graphs.push(Graph::from_edges(n, edges).expect("valid edges"));
    }
    for g in &graphs {
        let lf = brute_force_linear_forest(g).map_err(|e| e.to_string())?;
        let cover = path_cover_number(g).map_err(|e| e.to_string())?;
        ensure(lf == g.order() - cover.count(), || {
            format!(
                "{}: LF {lf}, pi {}",
                koenig_core::emit_graph6(g),
                cover.count()
            )
        })?;
        ensure(cover.is_valid_for(g), || {
            format!("{}: invalid cover", koenig_core::emit_graph6(g))
        })?;
        report(g);
    }
    Ok(format!("{fixtures} fixture graphs and 10000 random graphs"))
}

fn restriction_soundness() -> Result<String, String> {
    let graphs = connected_up_to(7);
    let mut subsets = 0usize;
    for g in &graphs {
        let n = g.order();
        let mut best = i64::MIN;
        for bits in 0u64..(1 << n) {
            let s = VertexSet::from_bits(bits);
            let excess = components_after_deleting(g, s) as i64 - s.len() as i64;
            best = best.max(excess);
            subsets += 1;
        }
        let family = cut_sets(g).map_err(|e| e.to_string())?;
        let restricted = family.best_excess().excess();
        let r = report(g);
        ensure(
            best == restricted && best == r.unrestricted_scattering as i64,
            || {
                format!(
                    "{}: exhaustive {best}, restricted {restricted}",
                    koenig_core::emit_graph6(g)
                )
            },
        )?;
    }
    Ok(format!(
        "{} connected graphs, {subsets} subsets",
        graphs.len()
    ))
}

fn inline_inequality() -> Result<String, String> {
    for g in all_up_to(7) {
        report(&g);
    }
    Ok(format!(
        "{} reports built so far, each asserting sc* <= pi",
        REPORTS.load(Ordering::Relaxed)
    ))
}

fn trees() -> Result<String, String> {
    let mut count = 0;
    for k in 1..=9 {
        for g in corpus(&format!("trees-{k}.g6")) {
            let g6 = koenig_core::emit_graph6(&g);
            ensure(g.is_connected() && g.edge_count() + 1 == g.order(), || {
                format!("{g6} is not a tree")
            })?;
            ensure(report(&g).koenig_type, || format!("tree {g6} is not König"))?;
            count += 1;
        }
    }
    ensure(count == 95, || format!("expected 95 trees, got {count}"))?;
    Ok(format!("{count} trees on 1..9 vertices"))
}

struct OrderingRun {
    graph: Graph,
    report: InvariantReport,
    weakly_closed: bool,
}

fn ordering_runs() -> Result<Vec<OrderingRun>, String> {
    connected_up_to(7)
        .into_iter()
        .map(|g| {
            let found = find_weakly_closed_ordering(&g).map_err(|e| e.to_string())?;
            if let Some(o) = &found {
                ensure(o.verify(&g), || {
                    format!("{}: bad ordering", koenig_core::emit_graph6(&g))
                })?;
            }
            Ok(OrderingRun {
                report: report(&g),
                weakly_closed: found.is_some(),
                graph: g,
            })
        })
        .collect()
}

fn cocomparability_koenig(runs: &[OrderingRun]) -> Result<String, String> {
    let mut closed = 0;
    for run in runs.iter().filter(|r| r.weakly_closed) {
        closed += 1;
        ensure(run.report.koenig_type, || {
            format!(
                "{} is weakly closed but not König",
                koenig_core::emit_graph6(&run.graph)
            )
        })?;
    }
    Ok(format!(
        "{closed} of {} connected graphs weakly closed, all König",
        runs.len()
    ))
}

fn weakly_closed_oracle() -> Result<String, String> {
    let graphs = all_up_to(6);
    let mut yes = 0;
    for g in &graphs {
        let search = find_weakly_closed_ordering(g)
            .map_err(|e| e.to_string())?
            .is_some();
        let oracle = is_cocomparability_oracle(g).map_err(|e| e.to_string())?;
        ensure(search == oracle, || {
            format!(
                "{}: ordering {search}, oracle {oracle}",
                koenig_core::emit_graph6(g)
            )
        })?;
        yes += usize::from(search);
    }
    Ok(format!("{} graphs, {yes} cocomparability", graphs.len()))
}

fn unmixed_classification(runs: &[OrderingRun]) -> Result<String, String> {
    let mut unmixed = 0;
    for run in runs {
        if run.graph.order() < 2 || !is_unmixed(&run.graph).map_err(|e| e.to_string())? {
            continue;
        }
        unmixed += 1;
        ensure(run.report.koenig_type == run.weakly_closed, || {
            format!(
                "{}: unmixed, koenig {}, weakly closed {}",
                koenig_core::emit_graph6(&run.graph),
                run.report.koenig_type,
                run.weakly_closed
            )
        })?;
    }
    Ok(format!("{unmixed} unmixed connected graphs"))
}

fn headline_count() -> Result<String, String> {
    let mut files: Vec<PathBuf> = (1..=8)
        .map(|k| corpus_path(&format!("connected-{k}.g6")))
        .collect();
    files.push(corpus_path("connected-9.g6.gz"));
    let mut opts = BatchOptions::new(InputSource::Files(files));
    opts.jobs = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .max(4);
    let summary = verify_conjecture(&opts, &mut NullSink).map_err(|e| e.to_string())?;

    let expected_at_free = [1, 1, 2, 6, 21, 107, 725, 6951, 88055];
    let expected_connected = [1, 1, 2, 6, 21, 112, 853, 11117, 261080];
    println!("    order  connected  at-free  cumulative  cumulative(n>=3)");
    let (mut all, mut from3) = (0, 0);
    for row in &summary.per_order {
        all += row.at_free;
        if row.order >= 3 {
            from3 += row.at_free;
        }
        println!(
            "    {:>5}  {:>9}  {:>7}  {:>10}  {:>16}",
            row.order, row.connected, row.at_free, all, from3
        );
    }
    let orders: Vec<usize> = summary.per_order.iter().map(|r| r.order).collect();
    ensure(orders == (1..=9).collect::<Vec<_>>(), || {
        format!("orders {orders:?}")
    })?;
    for (row, (&a, &c)) in summary
        .per_order
        .iter()
        .zip(expected_at_free.iter().zip(&expected_connected))
    {
        ensure(row.at_free == a && row.connected == c, || {
            format!(
                "order {}: {} connected, {} AT-free",
                row.order, row.connected, row.at_free
            )
        })?;
    }
    ensure(summary.complete && summary.malformed == 0, || {
        "incomplete run".into()
    })?;
    ensure(summary.at_free_count == 95_869, || {
        format!(
            "AT-free count {} (from order 3: {})",
            summary.at_free_count, summary.at_free_count_from_order_3
        )
    })?;
    ensure(summary.counterexamples.is_empty(), || {
        format!("{} counterexamples", summary.counterexamples.len())
    })?;
    REPORTS.fetch_add(summary.graphs_filtered, Ordering::Relaxed);
    Ok(format!(
        "{} connected graphs, 95869 AT-free ({} from order 3), no counterexamples in {:.1?}",
        summary.graphs_filtered, summary.at_free_count_from_order_3, summary.elapsed
    ))
}

fn named_graphs() -> Result<String, String> {
    struct Expect {
        name: &'static str,
        graph: Graph,
        pi: Option<usize>,
        sc_star: Option<usize>,
        height: Option<usize>,
        koenig: bool,
        unmixed: bool,
        weakly_closed: Option<bool>,
    }
    let cases = [
        Expect {
            name: "claw",
            graph: named::star(3),
            pi: Some(2),
            sc_star: Some(2),
            height: None,
            koenig: true,
            unmixed: false,
            weakly_closed: None,
        },
        Expect {
            name: "net",
            graph: named::net(),
            pi: Some(2),
            sc_star: Some(1),
            height: None,
            koenig: false,
            unmixed: true,
            weakly_closed: None,
        },
        Expect {
            name: "C5",
            graph: named::cycle(5),
            pi: None,
            sc_star: None,
            height: None,
            koenig: true,
            unmixed: false,
            weakly_closed: Some(false),
        },
        Expect {
            name: "P4",
            graph: named::path(4),
            pi: Some(1),
            sc_star: None,
            height: Some(3),
            koenig: true,
            unmixed: true,
            weakly_closed: None,
        },
    ];
    for c in &cases {
        let g = &c.graph;
        let r = report(g);
        let n = g.order();
        // the frozen values are first confirmed by the brute-force oracles
        let lf = brute_force_linear_forest(g).map_err(|e| e.to_string())?;
        ensure(lf == n - r.path_cover, || format!("{}: LF oracle", c.name))?;
        let exhaustive = (0u64..1 << n)
            .map(|b| {
                let s = VertexSet::from_bits(b);
                components_after_deleting(g, s) as i64 - s.len() as i64
            })
            .max()
            .unwrap();
        ensure(exhaustive == r.unrestricted_scattering as i64, || {
            format!("{}: sc* oracle", c.name)
        })?;

        let got = (
            r.path_cover,
            r.unrestricted_scattering,
            r.ideal_height,
            r.koenig_type,
            r.unmixed,
        );
        let fail = || {
            format!(
                "{}: got (pi, sc*, height, koenig, unmixed) = {got:?}",
                c.name
            )
        };
        ensure(c.pi.is_none_or(|v| v == r.path_cover), fail)?;
        ensure(
            c.sc_star.is_none_or(|v| v == r.unrestricted_scattering),
            fail,
        )?;
        ensure(c.height.is_none_or(|v| Some(v) == r.ideal_height), fail)?;
        ensure(
            r.koenig_type == c.koenig && r.unmixed == Some(c.unmixed),
            fail,
        )?;
        if let Some(wc) = c.weakly_closed {
            let found = find_weakly_closed_ordering(g)
                .map_err(|e| e.to_string())?
                .is_some();
            ensure(found == wc, || format!("{}: weakly closed {found}", c.name))?;
        }
    }
    Ok("claw, net, C5, P4".into())
}

fn run(number: usize, title: &str, check: impl FnOnce() -> Result<String, String>) -> bool {
    let started = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let elapsed = started.elapsed();
    match &outcome {
        Ok(detail) => println!("criterion {number:>2} PASS  {title}: {detail} [{elapsed:.1?}]"),
        Err(why) => println!("criterion {number:>2} FAIL  {title}: {why} [{elapsed:.1?}]"),
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    let mut ok = true;
    ok &= run(1, "height and König characterisation", characterisation);
    ok &= run(2, "linear forest oracle equals n - pi", oracle_equivalence);
    ok &= run(
        3,
        "cut-set restriction of the scattering number",
        restriction_soundness,
    );
    ok &= run(4, "sc* <= pi asserted on every report", inline_inequality);
    ok &= run(5, "trees are König", trees);
    let mut runs = None;
    ok &= run(6, "weakly closed implies König", || {
        let found = ordering_runs()?;
        let detail = cocomparability_koenig(&found);
        runs = Some(found);
        detail
    });
    ok &= run(
        7,
        "weakly closed equals cocomparability",
        weakly_closed_oracle,
    );
    ok &= run(8, "unmixed: König iff weakly closed", || {
        unmixed_classification(runs.as_deref().ok_or("ordering search did not finish")?)
    });
    ok &= run(
        9,
        "connected AT-free graphs up to 9 vertices",
        headline_count,
    );
    ok &= run(10, "named graphs", named_graphs);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
