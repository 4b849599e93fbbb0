//! One checker per statement under test. Each checker generates its own
//! instances and turns every instance into exactly one record (a few
//! produce an extra summary record).

use std::collections::HashSet;

use graphpow_core::{
    bfs_sphere_labeling, cycle, edge_to_vertex_transfer, fractional_power, hamiltonian_path_exists,
    is_subgroup, kalinowski_bound, metrics, minimum_labels, pair_bound, pair_edge_labeling, path,
    path_power_labeling, power, power_distance_claim, restrict_to_base, sphere_bound, star,
    star_subdivision_labeling, subdivide, tuple_bound, tuple_edge_labeling, write_graph6,
    Construction, Family, FractionalOrder, Graph, LabelKind, LabelerError, Labeling,
    DEFAULT_HAMILTONIAN_CAP,
};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::context::{Context, Exact, Quantity};
use crate::report::{Instance, Record, Verdict};

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    /// Report-only claims never affect the exit status.
    pub report_only: bool,
    check: fn(&Context, &'static str) -> Vec<Record>,
}

impl Claim {
    pub fn run(&self, ctx: &Context) -> Vec<Record> {
        (self.check)(ctx, self.id)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown claim id: {0}")]
pub struct UnknownClaim(pub String);

macro_rules! claim {
    ($id:literal, $desc:literal, $f:ident) => {
        Claim {
            id: $id,
            description: $desc,
            report_only: false,
            check: $f,
        }
    };
    ($id:literal, $desc:literal, $f:ident, report_only) => {
        Claim {
            id: $id,
            description: $desc,
            report_only: true,
            check: $f,
        }
    };
}

pub fn registry() -> Vec<Claim> {
    vec![
        claim!("L2.i", "G^t is complete for every t >= diam(G)", l2_i),
        claim!("L2.ii", "G^(mn) = (G^m)^n", l2_ii),
        claim!("L2.iii", "d(x,y) = kq + r implies d_{G^k}(x,y) = q + r", l2_iii),
        claim!("T2.2.i", "Aut(G) is a subgroup of Aut(G^k), k >= 2", t2_2_i),
        claim!("T2.2.ii", "Aut(G^(2t-1)) is a subgroup of Aut(G^(2t)), t <= r", t2_2_ii),
        claim!("C2.3.i", "D(G) <= D(G^k), k >= 2", c2_3_i),
        claim!("C2.3.ii", "D(G^(2t-1)) <= D(G^(2t)), t <= r", c2_3_ii),
        claim!("T2.4", "D(G^(r+i)) >= |ball of radius i around the center|", t2_4),
        claim!("T2.5", "G^3 is traceable for connected G", t2_5),
        claim!("C2.5", "D'(G^i) <= 2 for n >= 7, i >= 3", c2_5),
        claim!("R2.6", "small orders: D'(G^3) = 3 for n <= 5; eight diameter-4 graphs at n = 6", r2_6),
        claim!("T2.7", "D(P_n^k) = 2 for k <= r, 2k - n for r < k <= d", t2_7),
        claim!("T2.7.cons", "path power construction is distinguishing", t2_7_cons),
        claim!("C2.8", "D'(P_n^k) = D'(P_n) for k <= r, D'(K_(2k-n-2)) above", c2_8),
        claim!("C2.9", "D'(G^m) <= 3 for m >= 3", c2_9),
        claim!("C2.HAM", "n >= 7, G^2 not complete, |E| >= (n^2 + 10 - 5n)/2 imply D'(G^2) <= 2", c2_ham),
        claim!("T2.10", "Aut(C_n^k) = Aut(C_n) for n > 2k, Aut(K_n) for n <= 2k", t2_10),
        claim!("C2.11.i", "D(C_n^k) = D(C_n) for n > 2k, D(K_n) for n <= 2k", c2_11_i),
        claim!("C2.11.ii", "D'(C_n^k) = D'(C_n) for n > 2k, D'(K_n) for n <= 2k", c2_11_ii),
        claim!("CONJ.i", "r < d <= 2r - 2 implies Aut(G) = Aut(G^2)", conj_i, report_only),
        claim!("CONJ.ii", "bipartite with r > 2 implies Aut(G) = Aut(G^2)", conj_ii, report_only),
        claim!("S3.P", "D(P_n^(1/k)) = 2", s3_p),
        claim!("S3.C", "D(C_n^(1/k)) = 2", s3_c),
        claim!("L3.1", "automorphisms of G^(1/k) restrict to Aut(G)", l3_1),
        claim!("O3.2", "superedge images keep or reverse internal positions", o3_2),
        claim!("C3.4.i", "|Aut(G^(1/k))| = |Aut(G)|", c3_4_i),
        claim!("C3.4.ii", "D(G^(1/k)) <= D(G)", c3_4_ii),
        claim!("T3.6", "D''(G) <= ceil(sqrt(Delta)), sharp on stars", t3_6),
        claim!("T3.7", "D(G^(1/2k)) = D''(G^(1/k))", t3_7),
        claim!("C3.7", "D(G^(1/2)) <= ceil(sqrt(Delta))", c3_7),
        claim!("T3.8", "D(G^(1/k)) <= sphere bound", t3_8),
        claim!("T3.8.cons", "BFS sphere construction is distinguishing", t3_8_cons),
        claim!("T3.9", "D(K_(1,m)^(1/k)) = sphere bound at m", t3_9),
        claim!("T3.9.cons", "star leg-tuple construction is distinguishing", t3_9_cons),
        claim!("S4.P", "D'(P_n^(1/k)) = 2", s4_p),
        claim!("S4.C", "D'(C_n^(1/k)) = 2", s4_c),
        claim!("T4.1", "D(G^(1/(k+1))) <= D'(G^(1/k))", t4_1),
        claim!("T4.1.cons", "edge-to-vertex transfer is distinguishing", t4_1_cons),
        claim!("T4.2", "D'(G^(1/2)) <= ceil((-1 + sqrt(1 + 8 D'(G)))/2)", t4_2),
        claim!("T4.2.cons", "pair construction is distinguishing", t4_2_cons),
        claim!("T4.3", "D'(G^(1/k)) <= d'_k", t4_3),
        claim!("T4.3.cons", "non-palindromic tuple construction is distinguishing", t4_3_cons),
        claim!("R4.lambda", "lambda_1 vs lambda_2 on stars and F_2", r4_lambda),
        claim!("C4.4", "D'(G^(m/k)) <= 3 for m >= 3", c4_4),
        claim!("C4.5.i", "D(G^(1/k)) <= D((G^(1/k))^m)", c4_5_i),
        claim!("C4.5.ii", "D((G^m)^(1/k)) <= D(G^m)", c4_5_ii),
    ]
}

/// Resolves a selection ("all" or explicit ids) before any work is done.
pub fn select(ids: &[String]) -> Result<Vec<Claim>, UnknownClaim> {
    let all = registry();
    if ids.iter().any(|s| s == "all") {
        return Ok(all);
    }
    let known: HashSet<&str> = all.iter().map(|c| c.id).collect();
    if let Some(bad) = ids.iter().find(|s| !known.contains(s.as_str())) {
        return Err(UnknownClaim(bad.clone()));
    }
    Ok(all
        .into_iter()
        .filter(|c| ids.iter().any(|s| s == c.id))
        .collect())
}

pub fn run_claims(ctx: &Context, claims: &[Claim]) -> Vec<Record> {
    claims.par_iter().flat_map(|c| c.run(ctx)).collect()
}

// ---------------------------------------------------------------- helpers

fn g6(g: &Graph) -> String {
    write_graph6(g)
}

fn outcome(
    claim: &str,
    instance: Instance,
    expected: Value,
    computed: Value,
    pass: bool,
    reason: Option<String>,
) -> Record {
    Record {
        claim: claim.to_string(),
        instance,
        expected,
        computed,
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        reason,
    }
}

fn skipped(claim: &str, instance: Instance, expected: Value, reason: String) -> Record {
    Record {
        claim: claim.to_string(),
        instance,
        expected,
        computed: Value::Null,
        verdict: Verdict::Skip,
        reason: Some(reason),
    }
}

/// Fetches an exact quantity or returns the SKIP/FAIL record for it.
macro_rules! exact {
    ($ctx:expr, $q:expr, $g:expr, $claim:expr, $inst:expr, $expected:expr) => {
        match $ctx.exact($q, $g) {
            Exact::Value(v) => v,
            Exact::Undefined(why) => {
                return outcome(
                    $claim,
                    $inst,
                    $expected,
                    json!("undefined"),
                    false,
                    Some(format!("computed quantity undefined: {why}")),
                )
            }
            Exact::Skipped(why) => return skipped($claim, $inst, $expected, why),
        }
    };
}

macro_rules! aut {
    ($ctx:expr, $g:expr, $claim:expr, $inst:expr, $expected:expr) => {
        match $ctx.aut($g) {
            Ok(a) => a,
            Err(why) => return skipped($claim, $inst, $expected, why),
        }
    };
}

fn par<T: Sync>(items: &[T], f: impl Fn(&T) -> Record + Sync + Send) -> Vec<Record> {
    items.par_iter().map(f).collect()
}

fn le(bound: u64) -> Value {
    json!(format!("<= {bound}"))
}

fn ge(bound: u64) -> Value {
    json!(format!(">= {bound}"))
}

fn ks(ctx: &Context, from: usize) -> Vec<usize> {
    (from..=ctx.limits.max_k.max(from)).collect()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn radius(g: &Graph) -> usize {
    metrics(g).radius().expect("connected") as usize
}

fn diameter(g: &Graph) -> usize {
    metrics(g).diameter().expect("connected") as usize
}

/// Connected graphs on `lo..=max_n` vertices paired with each `k`.
fn graph_k(graphs: Vec<Graph>, ks: &[usize]) -> Vec<(Graph, usize)> {
    graphs
        .into_iter()
        .flat_map(|g| ks.iter().map(move |&k| (g.clone(), k)))
        .collect()
}

fn sub_pool(ctx: &Context, allow_cycles: bool) -> Vec<Graph> {
    ctx.connected_range(3, ctx.limits.sub_max_n())
        .into_iter()
        .filter(|g| allow_cycles || !g.is_cycle())
        .collect()
}

fn construction_record(
    claim: &str,
    instance: Instance,
    built: Result<Construction, LabelerError>,
) -> Record {
    let expected = json!("certified distinguishing labeling");
    match built {
        Ok(c) => {
            let used = c.labels_used() as i64;
            let reason = (used > c.claimed).then(|| {
                format!("certified with {used} labels, more than the stated {}", c.claimed)
            });
            outcome(
                claim,
                instance,
                expected,
                json!({"certified": true, "labels_used": used, "claimed_labels": c.claimed}),
                true,
                reason,
            )
        }
        Err(LabelerError::Symmetry(e)) => skipped(claim, instance, expected, e.to_string()),
        Err(e) => outcome(
            claim,
            instance,
            expected,
            json!({"certified": false}),
            false,
            Some(e.to_string()),
        ),
    }
}

fn certificate(ctx: &Context, g: &Graph, kind: LabelKind) -> Result<Labeling, String> {
    let auts = ctx.aut(g)?;
    minimum_labels(g, &auts, kind, &ctx.search_limits())
        .map(|r| r.certificate)
        .map_err(|e| e.to_string())
}

// ---------------------------------------------------------------- powers

fn l2_i(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items: Vec<(Graph, usize)> = ctx
        .connected_range(1, ctx.limits.max_n)
        .into_iter()
        .flat_map(|g| {
            let d = diameter(&g);
            [d.max(1), d + 1].into_iter().map(move |t| (g.clone(), t))
        })
        .collect();
    par(&items, |(g, t)| {
        let complete = power(g, *t).expect("t >= 1").is_complete();
        outcome(
            id,
            Instance::new(g6(g)).with("t", *t),
            json!(true),
            json!(complete),
            complete,
            None,
        )
    })
}

fn l2_ii(ctx: &Context, id: &'static str) -> Vec<Record> {
    let ks = ks(ctx, 1);
    let items: Vec<(Graph, usize, usize)> = ctx
        .connected_range(1, ctx.limits.max_n)
        .into_iter()
        .flat_map(|g| {
            let ks = ks.clone();
            ks.clone()
                .into_iter()
                .flat_map(move |m| ks.clone().into_iter().map(move |n| (m, n)))
                .map(move |(m, n)| (g.clone(), m, n))
        })
        .collect();
    par(&items, |(g, m, n)| {
        let direct = power(g, m * n).expect("k >= 1");
        let nested = power(&power(g, *m).expect("k >= 1"), *n).expect("k >= 1");
        let same = direct == nested;
        outcome(
            id,
            Instance::new(g6(g)).with("m", *m).with("n", *n),
            json!(g6(&direct)),
            json!(g6(&nested)),
            same,
            None,
        )
    })
}

fn l2_iii(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items: Vec<(usize, usize)> = (2..=ctx.limits.family_max_n())
        .flat_map(|n| ks(ctx, 1).into_iter().map(move |k| (n, k)))
        .collect();
    par(&items, |&(n, k)| {
        let p = path(n);
        let d = (n - 1) as u64;
        let claimed = power_distance_claim(d, k as u64);
        let actual = metrics(&power(&p, k).expect("k >= 1")).dist(0, n - 1) as u64;
        outcome(
            id,
            Instance::new(g6(&p)).with("k", k).with("d", d),
            json!(claimed),
            json!(actual),
            claimed == actual,
            None,
        )
    })
}

fn t2_2_i(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(ctx.connected_range(1, ctx.limits.max_n), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let a = aut!(ctx, g, id, inst, json!(true));
        let b = aut!(ctx, &power(g, *k).expect("k >= 1"), id, inst, json!(true));
        let sub = is_subgroup(&a, &b).expect("same vertex set");
        outcome(id, inst, json!(true), json!(sub), sub, None)
    })
}

fn power_pairs(ctx: &Context) -> Vec<(Graph, usize)> {
    ctx.connected_range(2, ctx.limits.max_n)
        .into_iter()
        .flat_map(|g| {
            let r = radius(&g);
            (1..=r).map(move |t| (g.clone(), t))
        })
        .collect()
}

fn t2_2_ii(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&power_pairs(ctx), |(g, t)| {
        let inst = Instance::new(g6(g)).with("t", *t);
        let a = aut!(ctx, &power(g, 2 * t - 1).expect("k >= 1"), id, inst, json!(true));
        let b = aut!(ctx, &power(g, 2 * t).expect("k >= 1"), id, inst, json!(true));
        let sub = is_subgroup(&a, &b).expect("same vertex set");
        outcome(id, inst, json!(true), json!(sub), sub, None)
    })
}

fn c2_3_i(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(ctx.connected_range(1, ctx.limits.max_n), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let base = exact!(ctx, Quantity::D, g, id, inst, json!("D(G) <= D(G^k)"));
        let pw = exact!(ctx, Quantity::D, &power(g, *k).expect("k >= 1"), id, inst, ge(base));
        outcome(id, inst, ge(base), json!(pw), base <= pw, None)
    })
}

fn c2_3_ii(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&power_pairs(ctx), |(g, t)| {
        let inst = Instance::new(g6(g)).with("t", *t);
        let odd = power(g, 2 * t - 1).expect("k >= 1");
        let a = exact!(ctx, Quantity::D, &odd, id, inst, json!("D(G^(2t-1)) <= D(G^(2t))"));
        let even = power(g, 2 * t).expect("k >= 1");
        let b = exact!(ctx, Quantity::D, &even, id, inst, ge(a));
        outcome(id, inst, ge(a), json!(b), a <= b, None)
    })
}

fn t2_4(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items: Vec<(Graph, usize)> = ctx
        .connected_range(2, ctx.limits.max_n)
        .into_iter()
        .flat_map(|g| {
            let (r, d) = (radius(&g), diameter(&g));
            (0..=d - r).map(move |i| (g.clone(), i))
        })
        .collect();
    par(&items, |(g, i)| {
        let m = metrics(g);
        let r = m.radius().expect("connected");
        let center = m.center().expect("connected");
        let ball = (0..g.n())
            .filter(|&x| center.iter().any(|&z| m.dist(z, x) as usize <= *i))
            .count() as u64;
        let inst = Instance::new(g6(g)).with("i", *i);
        let pw = power(g, r as usize + i).expect("r >= 1");
        let d = exact!(ctx, Quantity::D, &pw, id, inst, ge(ball));
        outcome(id, inst, ge(ball), json!(d), d >= ball, None)
    })
}

fn t2_5(ctx: &Context, id: &'static str) -> Vec<Record> {
    let mut graphs = ctx.connected_range(1, ctx.limits.max_n);
    graphs.extend(ctx.random_samples().iter().cloned());
    par(&graphs, |g| {
        let inst = Instance::new(g6(g));
        let cube = power(g, 3).expect("k >= 1");
        match hamiltonian_path_exists(&cube, DEFAULT_HAMILTONIAN_CAP) {
            Ok(found) => outcome(id, inst, json!(true), json!(found), found, None),
            Err(e) => skipped(id, inst, json!(true), e.to_string()),
        }
    })
}

fn seven_plus(ctx: &Context) -> Vec<Graph> {
    let mut graphs = ctx.connected(7).as_ref().clone();
    graphs.extend(ctx.random_samples().iter().cloned());
    graphs
}

fn c2_5(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&seven_plus(ctx), |g| {
        let inst = Instance::new(g6(g)).with("i", 3);
        let cube = power(g, 3).expect("k >= 1");
        let v = exact!(ctx, Quantity::Dprime, &cube, id, inst, le(2));
        outcome(id, inst, le(2), json!(v), v <= 2, None)
    })
}

fn r2_6(ctx: &Context, id: &'static str) -> Vec<Record> {
    let small: Vec<Graph> = ctx
        .connected_range(3, ctx.limits.max_n.min(5))
        .into_iter()
        .filter(|g| !g.is_path())
        .collect();
    let mut records = par(&small, |g| {
        let inst = Instance::new(g6(g)).with("part", "n<=5").with("i", 3);
        let expected = json!({"diameter": "<= 3", "Dprime_cube": 3});
        let d = diameter(g);
        let cube = power(g, 3).expect("k >= 1");
        let v = exact!(ctx, Quantity::Dprime, &cube, id, inst, expected);
        outcome(
            id,
            inst,
            expected,
            json!({"diameter": d, "Dprime_cube": v}),
            d <= 3 && v == 3,
            None,
        )
    });
    if ctx.limits.max_n >= 6 {
        let far: Vec<Graph> = ctx
            .connected(6)
            .iter()
            .filter(|g| !g.is_path() && diameter(g) == 4)
            .cloned()
            .collect();
        records.push(outcome(
            id,
            Instance::new("").with("part", "n=6 diameter-4 count"),
            json!(8),
            json!(far.len()),
            far.len() == 8,
            None,
        ));
        records.extend(par(&far, |g| {
            let inst = Instance::new(g6(g)).with("part", "n=6 diameter 4");
            let expected = json!({"Dprime_cube": "<= 3", "Dprime_fourth": 2});
            let c = exact!(ctx, Quantity::Dprime, &power(g, 3).expect("k"), id, inst, expected);
            let f = exact!(ctx, Quantity::Dprime, &power(g, 4).expect("k"), id, inst, expected);
            outcome(
                id,
                inst,
                expected,
                json!({"Dprime_cube": c, "Dprime_fourth": f}),
                c <= 3 && f == 2,
                None,
            )
        }));
    }
    records
}

fn path_powers(ctx: &Context, from_n: usize) -> Vec<(usize, usize)> {
    (from_n..=ctx.limits.family_max_n())
        .flat_map(|n| (2..n).map(move |k| (n, k)))
        .collect()
}

fn t2_7(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&path_powers(ctx, 4), |&(n, k)| {
        let r = n / 2;
        let claimed = if k <= r { 2 } else { 2 * k as i64 - n as i64 };
        let inst = Instance::new(g6(&path(n))).with("k", k);
        let g = power(&path(n), k).expect("k >= 1");
        let d = exact!(ctx, Quantity::D, &g, id, inst, json!(claimed));
        outcome(id, inst, json!(claimed), json!(d), claimed == d as i64, None)
    })
}

fn t2_7_cons(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&path_powers(ctx, 4), |&(n, k)| {
        let inst = Instance::new(g6(&path(n))).with("k", k);
        construction_record(id, inst, path_power_labeling(n, k))
    })
}

fn c2_8(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&path_powers(ctx, 3), |&(n, k)| {
        let r = n / 2;
        let inst = Instance::new(g6(&path(n))).with("k", k);
        let g = power(&path(n), k).expect("k >= 1");
        let (label, expected) = if k <= r {
            let v = exact!(ctx, Quantity::Dprime, &path(n), id, inst, json!("D'(P_n)"));
            ("D'(P_n)".to_string(), Ok(v))
        } else {
            let m = 2 * k as i64 - n as i64 - 2;
            let label = format!("D'(K_{m})");
            if m < 1 {
                (label, Err(format!("K_{m} does not exist")))
            } else {
                match ctx.exact(Quantity::Dprime, &Graph::complete(m as usize)) {
                    Exact::Value(v) => (label, Ok(v)),
                    Exact::Undefined(why) => (label, Err(format!("D'(K_{m}) undefined: {why}"))),
                    Exact::Skipped(why) => return skipped(id, inst, json!(label), why),
                }
            }
        };
        let v = exact!(ctx, Quantity::Dprime, &g, id, inst, json!(label));
        match expected {
            Ok(e) => outcome(id, inst, json!(e), json!(v), e == v, None),
            Err(why) => outcome(id, inst, json!(label), json!(v), false, Some(why)),
        }
    })
}

fn c2_9(ctx: &Context, id: &'static str) -> Vec<Record> {
    let graphs = ctx.connected_range(3, ctx.limits.max_n + 1);
    par(&graphs, |g| {
        let inst = Instance::new(g6(g)).with("m", 3);
        let v = exact!(ctx, Quantity::Dprime, &power(g, 3).expect("k"), id, inst, le(3));
        outcome(id, inst, le(3), json!(v), v <= 3, None)
    })
}

fn c2_ham(ctx: &Context, id: &'static str) -> Vec<Record> {
    let graphs: Vec<Graph> = seven_plus(ctx)
        .into_iter()
        .filter(|g| {
            let n = g.n();
            2 * g.edge_count() + 5 * n >= n * n + 10
                && !power(g, 2).expect("k").is_complete()
        })
        .collect();
    if graphs.is_empty() {
        return vec![skipped(
            id,
            Instance::new(""),
            le(2),
            "no graph in range meets the hypotheses".into(),
        )];
    }
    par(&graphs, |g| {
        let inst = Instance::new(g6(g));
        let v = exact!(ctx, Quantity::Dprime, &power(g, 2).expect("k"), id, inst, le(2));
        outcome(id, inst, le(2), json!(v), v <= 2, None)
    })
}

fn cycle_powers(ctx: &Context) -> Vec<(usize, usize)> {
    (3..=ctx.limits.family_max_n())
        .flat_map(|n| ks(ctx, 2).into_iter().map(move |k| (n, k)))
        .collect()
}

fn t2_10(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&cycle_powers(ctx), |&(n, k)| {
        let expected = if n > 2 * k { 2 * n as u64 } else { factorial(n) };
        let inst = Instance::new(g6(&cycle(n))).with("k", k);
        let a = aut!(ctx, &power(&cycle(n), k).expect("k"), id, inst, json!(expected));
        let order = a.order() as u64;
        outcome(id, inst, json!(expected), json!(order), order == expected, None)
    })
}

fn cycle_power_values(ctx: &Context, id: &'static str, q: Quantity) -> Vec<Record> {
    par(&cycle_powers(ctx), |&(n, k)| {
        let inst = Instance::new(g6(&cycle(n))).with("k", k);
        let reference = if n > 2 * k { cycle(n) } else { Graph::complete(n) };
        let e = exact!(ctx, q, &reference, id, inst, Value::Null);
        let v = exact!(ctx, q, &power(&cycle(n), k).expect("k"), id, inst, json!(e));
        outcome(id, inst, json!(e), json!(v), e == v, None)
    })
}

fn c2_11_i(ctx: &Context, id: &'static str) -> Vec<Record> {
    cycle_power_values(ctx, id, Quantity::D)
}

fn c2_11_ii(ctx: &Context, id: &'static str) -> Vec<Record> {
    cycle_power_values(ctx, id, Quantity::Dprime)
}

fn conjecture(ctx: &Context, id: &'static str, applies: fn(&Graph) -> bool) -> Vec<Record> {
    let mut graphs = ctx.connected_range(1, ctx.limits.max_n);
    graphs.extend(ctx.random_samples().iter().cloned());
    graphs.retain(applies);
    par(&graphs, |g| {
        let inst = Instance::new(g6(g));
        let a = aut!(ctx, g, id, inst, Value::Null);
        let b = aut!(ctx, &power(g, 2).expect("k"), id, inst, json!(a.order()));
        // Aut(G) always embeds in Aut(G^2), so equal orders mean equal groups
        outcome(id, inst, json!(a.order()), json!(b.order()), a.order() == b.order(), None)
    })
}

fn conj_i(ctx: &Context, id: &'static str) -> Vec<Record> {
    conjecture(ctx, id, |g| {
        let (r, d) = (radius(g), diameter(g));
        r < d && d + 2 <= 2 * r
    })
}

fn conj_ii(ctx: &Context, id: &'static str) -> Vec<Record> {
    conjecture(ctx, id, |g| g.is_bipartite() && radius(g) > 2)
}

// ---------------------------------------------------------------- subdivisions

fn family_subdivisions(ctx: &Context, from_n: usize, family: fn(usize) -> Graph) -> Vec<(Graph, usize)> {
    let graphs: Vec<Graph> = (from_n..=ctx.limits.max_n).map(family).collect();
    graph_k(graphs, &ks(ctx, 2))
}

fn equals_two(ctx: &Context, id: &'static str, items: Vec<(Graph, usize)>, q: Quantity) -> Vec<Record> {
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let sg = subdivide(g, *k).expect("k").graph;
        let v = exact!(ctx, q, &sg, id, inst, json!(2));
        outcome(id, inst, json!(2), json!(v), v == 2, None)
    })
}

fn s3_p(ctx: &Context, id: &'static str) -> Vec<Record> {
    equals_two(ctx, id, family_subdivisions(ctx, 2, path), Quantity::D)
}

fn s3_c(ctx: &Context, id: &'static str) -> Vec<Record> {
    equals_two(ctx, id, family_subdivisions(ctx, 3, cycle), Quantity::D)
}

fn l3_1(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, false), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let sg = subdivide(g, *k).expect("k");
        let big = aut!(ctx, &sg.graph, id, inst, json!(true));
        let base = aut!(ctx, g, id, inst, json!(true));
        let bad = big
            .elements()
            .iter()
            .filter(|f| !matches!(restrict_to_base(&sg, f), Ok(r) if base.contains(&r)))
            .count();
        outcome(
            id,
            inst,
            json!({"restricting": big.order()}),
            json!({"restricting": big.order() - bad}),
            bad == 0,
            None,
        )
    })
}

fn o3_2(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, false), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let sg = subdivide(g, *k).expect("k");
        let big = aut!(ctx, &sg.graph, id, inst, json!(true));
        let mut violations = 0usize;
        for f in big.elements() {
            for se in &sg.superedges {
                let (i2, j2) = (f.apply(se.edge[0]), f.apply(se.edge[1]));
                let Some(target) = sg.superedge(i2, j2) else {
                    violations += 1;
                    continue;
                };
                for (t, &w) in se.internal.iter().enumerate() {
                    let want = if i2 < j2 {
                        target.internal[t]
                    } else {
                        target.internal[k - 2 - t]
                    };
                    if f.apply(w) != want {
                        violations += 1;
                    }
                }
            }
        }
        outcome(id, inst, json!(0), json!(violations), violations == 0, None)
    })
}

fn c3_4_i(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, false), &ks(ctx, 1));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let a = aut!(ctx, g, id, inst, Value::Null);
        let b = aut!(ctx, &subdivide(g, *k).expect("k").graph, id, inst, json!(a.order()));
        outcome(id, inst, json!(a.order()), json!(b.order()), a.order() == b.order(), None)
    })
}

fn c3_4_ii(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, false), &ks(ctx, 1));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let base = exact!(ctx, Quantity::D, g, id, inst, json!("<= D(G)"));
        let sg = subdivide(g, *k).expect("k").graph;
        let v = exact!(ctx, Quantity::D, &sg, id, inst, le(base));
        outcome(id, inst, le(base), json!(v), v <= base, None)
    })
}

fn t3_6(ctx: &Context, id: &'static str) -> Vec<Record> {
    let graphs = ctx.connected_range(3, ctx.limits.max_n);
    let mut records = par(&graphs, |g| {
        let bound = kalinowski_bound(g.max_degree() as u64);
        let inst = Instance::new(g6(g));
        let v = exact!(ctx, Quantity::Dtotal, g, id, inst, le(bound));
        outcome(id, inst, le(bound), json!(v), v <= bound, None)
    });
    let stars: Vec<usize> = (2..=ctx.limits.family_max_n() + 1).collect();
    records.extend(par(&stars, |&m| {
        let bound = kalinowski_bound(m as u64);
        let inst = Instance::new(g6(&star(m))).with("sharp", true);
        let v = exact!(ctx, Quantity::Dtotal, &star(m), id, inst, json!(bound));
        outcome(id, inst, json!(bound), json!(v), v == bound, None)
    }));
    records
}

fn t3_7(ctx: &Context, id: &'static str) -> Vec<Record> {
    let ks: Vec<usize> = (1..=ctx.limits.max_k.clamp(1, 2)).collect();
    let items = graph_k(sub_pool(ctx, true), &ks);
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let half = subdivide(g, *k).expect("k").graph;
        let t = exact!(ctx, Quantity::Dtotal, &half, id, inst, Value::Null);
        let double = subdivide(g, 2 * k).expect("k").graph;
        let v = exact!(ctx, Quantity::D, &double, id, inst, json!(t));
        outcome(id, inst, json!(t), json!(v), t == v, None)
    })
}

fn c3_7(ctx: &Context, id: &'static str) -> Vec<Record> {
    let graphs = ctx.connected_range(3, ctx.limits.max_n);
    par(&graphs, |g| {
        let bound = kalinowski_bound(g.max_degree() as u64);
        let inst = Instance::new(g6(g));
        let sg = subdivide(g, 2).expect("k").graph;
        let v = exact!(ctx, Quantity::D, &sg, id, inst, le(bound));
        outcome(id, inst, le(bound), json!(v), v <= bound, None)
    })
}

fn t3_8(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, true), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let bound = sphere_bound(*k as u32, g.max_degree() as u64);
        let inst = Instance::new(g6(g)).with("k", *k);
        let sg = subdivide(g, *k).expect("k").graph;
        let v = exact!(ctx, Quantity::D, &sg, id, inst, le(bound));
        outcome(id, inst, le(bound), json!(v), v <= bound, None)
    })
}

fn t3_8_cons(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, true), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        construction_record(id, inst, bfs_sphere_labeling(g, *k))
    })
}

fn star_items(ctx: &Context) -> Vec<(usize, usize)> {
    (3..=ctx.limits.family_max_n())
        .flat_map(|m| ks(ctx, 2).into_iter().map(move |k| (m, k)))
        .collect()
}

fn t3_9(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&star_items(ctx), |&(m, k)| {
        let bound = sphere_bound(k as u32, m as u64);
        let inst = Instance::new(g6(&star(m))).with("k", k);
        let sg = subdivide(&star(m), k).expect("k").graph;
        let v = exact!(ctx, Quantity::D, &sg, id, inst, json!(bound));
        outcome(id, inst, json!(bound), json!(v), v == bound, None)
    })
}

fn t3_9_cons(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&star_items(ctx), |&(m, k)| {
        let s = sphere_bound(k as u32, m as u64) as u32;
        let inst = Instance::new(g6(&star(m))).with("k", k);
        construction_record(id, inst, star_subdivision_labeling(m, k, s))
    })
}

// ---------------------------------------------------------------- edge labelings and fractional powers

fn s4_p(ctx: &Context, id: &'static str) -> Vec<Record> {
    equals_two(ctx, id, family_subdivisions(ctx, 2, path), Quantity::Dprime)
}

fn s4_c(ctx: &Context, id: &'static str) -> Vec<Record> {
    equals_two(ctx, id, family_subdivisions(ctx, 3, cycle), Quantity::Dprime)
}

fn t4_1(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, false), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let small = subdivide(g, *k).expect("k").graph;
        let dp = exact!(ctx, Quantity::Dprime, &small, id, inst, Value::Null);
        let big = subdivide(g, k + 1).expect("k").graph;
        let v = exact!(ctx, Quantity::D, &big, id, inst, le(dp));
        outcome(id, inst, le(dp), json!(v), v <= dp, None)
    })
}

fn t4_1_cons(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, false), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let small = subdivide(g, *k).expect("k").graph;
        match certificate(ctx, &small, LabelKind::Edge) {
            Ok(el) => construction_record(id, inst, edge_to_vertex_transfer(g, *k, &el)),
            Err(why) => skipped(id, inst, json!("certified distinguishing labeling"), why),
        }
    })
}

fn t4_2(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&sub_pool(ctx, false), |g| {
        let inst = Instance::new(g6(g));
        let dp = exact!(ctx, Quantity::Dprime, g, id, inst, Value::Null);
        let bound = pair_bound(dp);
        let half = subdivide(g, 2).expect("k").graph;
        let v = exact!(ctx, Quantity::Dprime, &half, id, inst, le(bound));
        outcome(id, inst, le(bound), json!(v), v <= bound, None)
    })
}

fn t4_2_cons(ctx: &Context, id: &'static str) -> Vec<Record> {
    par(&sub_pool(ctx, false), |g| {
        let inst = Instance::new(g6(g));
        match certificate(ctx, g, LabelKind::Edge) {
            Ok(el) => construction_record(id, inst, pair_edge_labeling(g, &el)),
            Err(why) => skipped(id, inst, json!("certified distinguishing labeling"), why),
        }
    })
}

fn t4_3(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, false), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let dp = exact!(ctx, Quantity::Dprime, g, id, inst, Value::Null);
        let bound = tuple_bound(dp, *k as u32);
        let sg = subdivide(g, *k).expect("k").graph;
        let v = exact!(ctx, Quantity::Dprime, &sg, id, inst, le(bound));
        outcome(id, inst, le(bound), json!(v), v <= bound, None)
    })
}

fn t4_3_cons(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, false), &ks(ctx, 2));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        match certificate(ctx, g, LabelKind::Edge) {
            Ok(el) => construction_record(id, inst, tuple_edge_labeling(g, *k, &el)),
            Err(why) => skipped(id, inst, json!("certified distinguishing labeling"), why),
        }
    })
}

fn r4_lambda(ctx: &Context, id: &'static str) -> Vec<Record> {
    // stars: lambda_1 claimed strictly smaller; F_2: lambda_2 claimed strictly smaller
    let mut items: Vec<(Graph, usize, bool)> = star_items(ctx)
        .into_iter()
        .map(|(m, k)| (star(m), k, true))
        .collect();
    let fan = Graph::family(Family::Fan2).expect("fan2");
    items.extend(ks(ctx, 2).into_iter().map(|k| (fan.clone(), k, false)));
    par(&items, |(g, k, lambda1_better)| {
        let inst = Instance::new(g6(g)).with("k", *k);
        let expected = json!(if *lambda1_better { "lambda_1 < lambda_2" } else { "lambda_2 < lambda_1" });
        let lambda2 = sphere_bound(*k as u32, g.max_degree() as u64);
        let dp = exact!(ctx, Quantity::Dprime, g, id, inst, expected);
        // d'_1 is read as D'(G) itself, the k = 1 case of the transfer bound
        let lambda1 = if *k == 2 { dp } else { tuple_bound(dp, *k as u32 - 1) };
        let pass = if *lambda1_better { lambda1 < lambda2 } else { lambda2 < lambda1 };
        outcome(
            id,
            inst,
            expected,
            json!({"lambda_1": lambda1, "lambda_2": lambda2}),
            pass,
            None,
        )
    })
}

fn c4_4(ctx: &Context, id: &'static str) -> Vec<Record> {
    let orders = [
        (FractionalOrder::PowerThenSubdivide, "power_then_subdivide"),
        (FractionalOrder::SubdivideThenPower, "subdivide_then_power"),
    ];
    let items: Vec<(Graph, usize, usize)> = graph_k(sub_pool(ctx, true), &ks(ctx, 1))
        .into_iter()
        .flat_map(|(g, k)| (0..2).map(move |o| (g.clone(), k, o)))
        .collect();
    par(&items, |(g, k, o)| {
        let (order, name) = orders[*o];
        let inst = Instance::new(g6(g)).with("m", 3).with("k", *k).with("order", name);
        let h = fractional_power(g, 3, *k, order).expect("m, k >= 1");
        let v = exact!(ctx, Quantity::Dprime, &h, id, inst, le(3));
        outcome(id, inst, le(3), json!(v), v <= 3, None)
    })
}

fn c4_5_i(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, true), &ks(ctx, 1));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("m", 3).with("k", *k);
        let sg = subdivide(g, *k).expect("k").graph;
        let a = exact!(ctx, Quantity::D, &sg, id, inst, Value::Null);
        let b = exact!(ctx, Quantity::D, &power(&sg, 3).expect("m"), id, inst, ge(a));
        outcome(id, inst, ge(a), json!(b), a <= b, None)
    })
}

fn c4_5_ii(ctx: &Context, id: &'static str) -> Vec<Record> {
    let items = graph_k(sub_pool(ctx, true), &ks(ctx, 1));
    par(&items, |(g, k)| {
        let inst = Instance::new(g6(g)).with("m", 3).with("k", *k);
        let cube = power(g, 3).expect("m");
        let a = exact!(ctx, Quantity::D, &cube, id, inst, Value::Null);
        let sg = subdivide(&cube, *k).expect("k").graph;
        let b = exact!(ctx, Quantity::D, &sg, id, inst, le(a));
        outcome(id, inst, le(a), json!(b), b <= a, None)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let set: HashSet<&str> = ids.iter().copied().collect();
        assert_eq!(ids.len(), set.len());
    }

    #[test]
    fn selection() {
        assert!(select(&["nope".into()]).is_err());
        assert_eq!(select(&["T2.10".into()]).unwrap().len(), 1);
        assert_eq!(select(&["all".into()]).unwrap().len(), registry().len());
    }
}
