//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use umlist_core::colorers::{DelaunayColorer, IntervalColorer};
use umlist_core::geometry::{
    build_disc_hypergraph, build_halfplane_hypergraph, build_interval_hypergraph, has_point_inside_triangle,
    random_convex_points, random_point_set,
};
use umlist_core::intervals::{brute_force_um_list_colorable, interval_list_size, make_tightness_instance};
use umlist_core::oracle::exhaustive_chromatic;
use umlist_core::planar::{
    c_sep, cf_color_paths_from_lists, paths_hypergraph, required_path_list_size, star_lower_bound_lists,
    PlanarGraph,
};
use umlist_core::potential::{um_color_from_lists_with, EngineOptions, PotentialTrace};
use umlist_core::refinement::{choice_from_chromatic, is_refinement, redraw_union_bound, required_refinement_list_size};
use umlist_core::{
    few_edges_list_sizes, um_choice_bound, um_color_few_edges, verify, verify_cf, verify_from_lists, verify_um,
    Color, ColorListFamily, Coloring, HereditaryColorer, Hypergraph, Mode,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Lists `{o_v + 1, ..., o_v + size}`. Trial 0 gives every vertex the same
/// range, trial 1 a staircase, later trials random offsets.
fn shifted_lists(n: usize, size: usize, trial: u64, rng: &mut ChaCha8Rng) -> ColorListFamily {
    let lists = (0..n)
        .map(|v| {
            let o = match trial {
                0 => 0,
                1 => v as Color,
                _ => rng.gen_range(0..=2 * size as Color),
            };
            (o + 1..=o + size as Color).collect()
        })
        .collect();
    ColorListFamily::new(lists).unwrap()
}

/// `size` distinct colors per vertex drawn from `1..=universe`.
fn random_lists(n: usize, size: usize, universe: usize, rng: &mut ChaCha8Rng) -> ColorListFamily {
    let lists = (0..n)
        .map(|_| sample(rng, universe, size).into_iter().map(|c| c as Color + 1).collect())
        .collect();
    ColorListFamily::new(lists).unwrap()
}

fn random_hypergraph(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Hypergraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_m);
    let edges: Vec<Vec<usize>> = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=n);
            sample(rng, n, size).into_vec()
        })
        .collect();
    Hypergraph::new(n, edges).unwrap()
}

fn check_trace(trace: &PotentialTrace) -> Result<(), String> {
    let it = &trace.iterations;
    for (i, r) in it.iter().enumerate() {
        ensure(r.p_after <= r.p_before, || format!("step {} increases {} -> {}", r.t, r.p_before, r.p_after))?;
        if i + 1 < it.len() {
            ensure(it[i + 1].p_before == r.p_after, || format!("step {} does not chain", r.t))?;
        }
    }
    Ok(())
}

fn criterion_1(traces: &mut Vec<PotentialTrace>) -> Outcome {
    let start = Instant::now();
    let opts = EngineOptions { verify_auxiliary: true, verify_output: false };
    let mut runs = 0;
    for n in 1..=255usize {
        let h = build_interval_hypergraph(n).map_err(|e| e.to_string())?;
        let size = interval_list_size(n);
        for trial in 0..10u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 * n as u64 + trial);
            let lists = shifted_lists(n, size, trial, &mut rng);
            let res = um_color_from_lists_with(&h, &lists, &IntervalColorer, opts)
                .map_err(|e| format!("n={n} trial={trial}: {e}"))?;
            ensure(verify_um(&h, &res.coloring).unwrap().is_valid(), || format!("n={n} trial={trial}: not um"))?;
            ensure(verify_from_lists(&res.coloring, &lists).unwrap(), || format!("n={n}: color off list"))?;
            traces.push(res.trace);
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{runs} runs, n up to 255, {:.1}s", elapsed.as_secs_f64()))
}

fn criterion_2(mut traces: Vec<PotentialTrace>) -> Outcome {
    let from_intervals = traces.len();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..100 {
        let n = rng.gen_range(4..=9);
        let points = random_point_set(n, 64, &mut rng, 1000).map_err(|e| e.to_string())?;
        let (h, k) = if i % 2 == 0 {
            (build_disc_hypergraph(&points), 4)
        } else {
            (build_halfplane_hypergraph(&points), if has_point_inside_triangle(&points) { 4 } else { 3 })
        };
        let h = h.map_err(|e| e.to_string())?;
        let lists = random_lists(n, um_choice_bound(n, k), 3 * um_choice_bound(n, k), &mut rng);
        let res = um_color_from_lists_with(&h, &lists, &DelaunayColorer::new(k), EngineOptions::default())
            .map_err(|e| format!("geometric run {i}: {e}"))?;
        traces.push(res.trace);
    }
    let mut steps = 0;
    for (i, t) in traces.iter().enumerate() {
        check_trace(t).map_err(|e| format!("trace {i}: {e}"))?;
        steps += t.iterations.len();
    }
    Ok(format!("{} traces ({from_intervals} interval, 100 geometric), {steps} steps", traces.len()))
}

fn non_increasing_vectors(max_len: usize, max_x: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (1..=max_x).map(|x| vec![x]).collect();
    while let Some(v) = stack.pop() {
        if v.len() < max_len {
            for x in 1..=*v.last().unwrap() {
                let mut w = v.clone();
                w.push(x);
                stack.push(w);
            }
        }
        out.push(v);
    }
    out
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for sizes in non_increasing_vectors(8, 6) {
        // sum 2^-x >= 1, scaled by 2^6
        if sizes.iter().map(|&x| 1u32 << (6 - x)).sum::<u32>() < 64 {
            continue;
        }
        let inst = make_tightness_instance(&sizes).map_err(|e| format!("{sizes:?}: {e}"))?;
        let h = build_interval_hypergraph(sizes.len()).unwrap();
        let found = brute_force_um_list_colorable(&h, &inst.lists).map_err(|e| format!("{sizes:?}: {e}"))?;
        ensure(found.is_none(), || format!("{sizes:?} admits {:?}", found.unwrap().colors()))?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} size vectors infeasible, {:.1}s", elapsed.as_secs_f64()))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut k3 = 0;
    for i in 0..50 {
        let n = 4 + i % 6;
        let points = random_point_set(n, 64, &mut rng, 1000).map_err(|e| e.to_string())?;
        let h = build_disc_hypergraph(&points).map_err(|e| e.to_string())?;
        let size = um_choice_bound(n, 4);
        let lists = shifted_lists(n, size, (i % 3) as u64, &mut rng);
        let res = um_color_from_lists_with(&h, &lists, &DelaunayColorer::new(4), EngineOptions::default())
            .map_err(|e| format!("discs #{i} n={n}: {e}"))?;
        ensure(verify_um(&h, &res.coloring).unwrap().is_valid(), || format!("discs #{i}: not um"))?;
    }
    for i in 0..50 {
        let n = 4 + i % 6;
        let points = if i % 2 == 0 {
            random_convex_points(n, 40, &mut rng, 1000)
        } else {
            random_point_set(n, 64, &mut rng, 1000)
        }
        .map_err(|e| e.to_string())?;
        let h = build_halfplane_hypergraph(&points).map_err(|e| e.to_string())?;
        let k = if has_point_inside_triangle(&points) { 4 } else { 3 };
        k3 += usize::from(k == 3);
        let colorer = DelaunayColorer::new(k);
        let lists = shifted_lists(n, um_choice_bound(n, colorer.k()), (i % 3) as u64, &mut rng);
        let res = um_color_from_lists_with(&h, &lists, &colorer, EngineOptions::default())
            .map_err(|e| format!("halfplanes #{i} n={n} k={k}: {e}"))?;
        ensure(verify_um(&h, &res.coloring).unwrap().is_valid(), || format!("halfplanes #{i}: not um"))?;
    }
    Ok(format!("50 disc sets (k=4), 50 halfplane sets ({k3} with k=3, {} with k=4)", 50 - k3))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut graphs: Vec<(String, PlanarGraph)> = Vec::new();
    for rows in 1..=3 {
        for cols in rows..=12 / rows {
            graphs.push((format!("grid {rows}x{cols}"), PlanarGraph::grid(rows, cols)));
        }
    }
    for i in 0..40 {
        let n = 1 + i % 12;
        let keep = rng.gen_range(0.4..1.0);
        graphs.push((format!("random #{i} n={n}"), PlanarGraph::random(n, keep, &mut rng)));
    }
    let mut levels = 0;
    for (name, g) in &graphs {
        let n = g.n_vertices();
        let lists = shifted_lists(n, required_path_list_size(n), 2, &mut rng);
        let run = cf_color_paths_from_lists(g, &lists).map_err(|e| format!("{name}: {e}"))?;
        let h = paths_hypergraph(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(verify_cf(&h, &run.coloring).unwrap().is_valid(), || format!("{name}: not cf on paths"))?;
        ensure(verify_from_lists(&run.coloring, &lists).unwrap(), || format!("{name}: color off list"))?;
        for rec in &run.levels {
            rec.check(g).map_err(|e| format!("{name} depth {}: {e}", rec.depth))?;
            let m = rec.vertices.len() as f64;
            ensure(rec.decomposition.s.len() as f64 <= c_sep() * m.sqrt(), || format!("{name}: separator too big"))?;
        }
        levels += run.levels.len();
    }
    Ok(format!("{} graphs, {levels} separator levels checked", graphs.len()))
}

fn criterion_6() -> Outcome {
    for n in 3..=6 {
        let h = paths_hypergraph(&PlanarGraph::star(n)).map_err(|e| e.to_string())?;
        let below = brute_force_um_list_colorable(&h, &star_lower_bound_lists(n, n - 2)).map_err(|e| e.to_string())?;
        ensure(below.is_none(), || format!("n={n}: size {} colorable", n - 2))?;
        let at = brute_force_um_list_colorable(&h, &star_lower_bound_lists(n, n - 1)).map_err(|e| e.to_string())?;
        ensure(at.is_some(), || format!("n={n}: size {} not colorable", n - 1))?;
    }
    Ok("n = 3..6: infeasible at n-2, feasible at n-1".into())
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..500 {
        let h = random_hypergraph(&mut rng, 8, 12);
        let lists: Vec<Vec<Color>> = few_edges_list_sizes(&h)
            .into_iter()
            .map(|s| sample(&mut rng, 10, s).into_iter().map(|c| c as Color + 1).collect())
            .collect();
        let lists = ColorListFamily::new(lists).unwrap();
        let run = um_color_few_edges(&h, &lists).map_err(|e| format!("#{i}: {e}"))?;
        ensure(verify_um(&h, &run.coloring).unwrap().is_valid(), || format!("#{i}: not um"))?;
        ensure(verify_from_lists(&run.coloring, &lists).unwrap(), || format!("#{i}: color off list"))?;
    }
    Ok("500 hypergraphs, inductive condition held at every step".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut failures, mut draws) = (0u64, 0u64);
    let (mut mean, mut var) = (0.0f64, 0.0f64);
    for i in 0..100u64 {
        let h = if i % 2 == 0 {
            build_interval_hypergraph(2 + (i as usize / 2) % 9).unwrap()
        } else {
            let n = 4 + (i as usize / 2) % 5;
            build_disc_hypergraph(&random_point_set(n, 64, &mut rng, 1000).map_err(|e| e.to_string())?).unwrap()
        };
        let n = h.n_vertices();
        let base = exhaustive_chromatic(&h).map_err(|e| e.to_string())?.cf_witness;
        let k = base.distinct_colors();
        let size = required_refinement_list_size(n, k);
        let lists = random_lists(n, size, 2 * size, &mut rng);
        let run = choice_from_chromatic(&h, &base, &lists, Mode::Cf, i).map_err(|e| format!("#{i}: {e}"))?;
        ensure(verify_cf(&h, &run.coloring).unwrap().is_valid(), || format!("#{i}: not cf"))?;
        ensure(verify_from_lists(&run.coloring, &lists).unwrap(), || format!("#{i}: color off list"))?;
        // every draw of this instance fails with probability at most p
        let p = redraw_union_bound(n, k, size).min(1.0);
        let d = run.redraws + 1;
        failures += run.redraws;
        draws += d;
        mean += d as f64 * p;
        var += d as f64 * p * (1.0 - p);
    }
    let limit = mean + 3.0 * var.sqrt();
    ensure(failures as f64 <= limit, || format!("{failures} failed draws, limit {limit:.2}"))?;
    Ok(format!("100 instances, {failures} failed of {draws} draws, limit {limit:.2}"))
}

fn criterion_9() -> Outcome {
    let mut processed = 0;
    let mut check = |h: &Hypergraph, what: &str| -> Result<(usize, usize, usize), String> {
        let r = exhaustive_chromatic(h).map_err(|e| format!("{what}: {e}"))?;
        ensure(r.chi <= r.chi_cf && r.chi_cf <= r.chi_um, || format!("{what}: chain broken {r:?}"))?;
        for (mode, w, k) in [(Mode::Proper, &r.proper_witness, r.chi), (Mode::Cf, &r.cf_witness, r.chi_cf), (Mode::Um, &r.um_witness, r.chi_um)] {
            ensure(verify(mode, h, w).unwrap().is_valid() && w.distinct_colors() == k, || {
                format!("{what}: bad {mode} witness")
            })?;
        }
        processed += 1;
        Ok((r.chi, r.chi_cf, r.chi_um))
    };
    for n in 1..=10 {
        let (_, cf, _) = check(&build_interval_hypergraph(n).unwrap(), &format!("H_{n}"))?;
        ensure(cf == interval_list_size(n), || format!("H_{n}: chi_cf = {cf}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..200 {
        check(&random_hypergraph(&mut rng, 7, 10), &format!("random #{i}"))?;
    }
    for n in 3..=6 {
        check(&paths_hypergraph(&PlanarGraph::star(n)).unwrap(), &format!("star {n}"))?;
    }
    for i in 0..20 {
        let points = random_point_set(4 + i % 5, 64, &mut rng, 1000).map_err(|e| e.to_string())?;
        check(&build_disc_hypergraph(&points).unwrap(), &format!("discs #{i}"))?;
        check(&build_halfplane_hypergraph(&points).unwrap(), &format!("halfplanes #{i}"))?;
    }
    Ok(format!("{processed} instances, chi_cf(H_n) = floor(log2 n)+1 for n = 1..10"))
}

fn criterion_10() -> Outcome {
    let h3 = build_interval_hypergraph(3).unwrap();
    let c = Coloring::new(vec![1, 2, 1]).unwrap();
    let refined = Coloring::new(vec![2, 1, 2]).unwrap();
    ensure(verify_um(&h3, &c).unwrap().is_valid(), || "stored um-coloring invalid".into())?;
    ensure(is_refinement(&refined, &c).unwrap(), || "stored pair is not a refinement".into())?;
    ensure(!verify_um(&h3, &refined).unwrap().is_valid(), || "stored refinement is um".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut pool = Vec::new();
    for i in 0..50 {
        let h = if i < 10 { build_interval_hypergraph(i + 1).unwrap() } else { random_hypergraph(&mut rng, 7, 10) };
        let r = exhaustive_chromatic(&h).map_err(|e| e.to_string())?;
        pool.push((h, r.cf_witness, r.proper_witness));
    }
    for t in 0..1000 {
        let (h, cf, proper) = &pool[t % pool.len()];
        for (mode, base) in [(Mode::Cf, cf), (Mode::Proper, proper)] {
            let split: Vec<Color> = base.colors().iter().map(|&x| x * 8 + rng.gen_range(0..8)).collect();
            let r = Coloring::new(split).unwrap();
            ensure(is_refinement(&r, base).unwrap(), || format!("#{t}: not a refinement"))?;
            ensure(verify(mode, h, &r).unwrap().is_valid(), || format!("#{t}: {mode} refinement invalid"))?;
        }
    }
    Ok("stored um pair breaks; 1000 random cf and proper refinements stay valid".into())
}

fn main() {
    let mut traces = Vec::new();
    let mut failed = 0;
    let mut report = |id: usize, name: &str, outcome: Outcome| {
        match outcome {
            Ok(detail) => println!("criterion {id:>2} {name}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} {name}: FAIL ({detail})");
            }
        }
    };
    report(1, "interval um-choice bound", criterion_1(&mut traces));
    report(2, "potential monotonicity", criterion_2(traces));
    report(3, "tightness", criterion_3());
    report(4, "discs and halfplanes", criterion_4());
    report(5, "planar paths", criterion_5());
    report(6, "star lower bound", criterion_6());
    report(7, "few edges", criterion_7());
    report(8, "refinement reduction", criterion_8());
    report(9, "oracle chain", criterion_9());
    report(10, "refinement-property regression", criterion_10());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
