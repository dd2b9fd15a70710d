//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fractional_coloring::admissible::{greedy_partition, is_admissible, AdmissibleTriple, MAX_TRIPLES};
use fractional_coloring::aux::{
    build_aux, chromatic_number, hub_split_three_color, three_color, Color, ColoringOutcome, HubSplitInstance,
};
use fractional_coloring::composer::{pipeline, verify, PipelineConfig, PipelinePath};
use fractional_coloring::fold::{
    add, convex_combine, equivalent, glue, isomorphic, restrict, scale, validate, ColorId, FoldColoring, Rational,
};
use fractional_coloring::graph::generate::{random_subcubic_triangle_free, GenConfig};
use fractional_coloring::graph::{catalog, Graph, Vertex, VertexSet, DEFAULT_MIS_CAP};
use fractional_coloring::lp::{check_clique_cut, check_two_cut, fractional_chromatic_number};

const CORPUS_SIZE: usize = 100;
const CORPUS_N: std::ops::RangeInclusive<usize> = 8..=60;
const CORPUS_GIRTH_MAX: usize = 6;
const LP_CROSSCHECK_N: usize = 18;
const RATIO_BOUND: (i64, i64) = (126, 43);
const STEP_LIMIT: usize = 124;
const PALETTE_SIZE: usize = 126;
const CHIF_TIME: Duration = Duration::from_secs(10);
const CERTIFY_TIME: Duration = Duration::from_secs(60);
const HUB_SPLIT_TIME: Duration = Duration::from_secs(30);
const FOLD_TRIALS: usize = 1000;
const FOLD_MAX_N: usize = 10;
const CUT_INSTANCES: usize = 50;
const CUT_MAX_N: usize = 14;
const ALPHA_GRAPHS: usize = 500;
const ALPHA_MAX_N: usize = 30;
const BRUTE_MAX_N: usize = 12;
const BRUTE_TRIALS: usize = 400;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ratio(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

fn int(a: i64) -> Rational {
    Rational::from_integer(a.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut out = Vec::with_capacity(CORPUS_SIZE);
    let mut seed = 0u64;
    while out.len() < CORPUS_SIZE {
        let n = rng.gen_range(CORPUS_N);
        let cfg = GenConfig {
            n,
            seed,
            girth_max: Some(CORPUS_GIRTH_MAX),
            two_connected: true,
        };
        seed += 1;
        if let Some(g) = random_subcubic_triangle_free(&cfg) {
            out.push(g);
        }
    }
    out
}

fn corpus_is_in_scope(g: &Graph) -> bool {
    g.is_triangle_free()
        && g.max_degree() <= 3
        && g.is_biconnected()
        && g.girth().is_some_and(|l| l <= CORPUS_GIRTH_MAX)
        && g.n() <= *CORPUS_N.end()
}

fn exact_values() -> Outcome {
    let p72 = catalog::generalized_petersen(7, 2).map_err(|e| e.to_string())?;
    let cases: Vec<(&str, Graph, Rational)> = vec![
        ("P(7,2)", p72.clone(), ratio(14, 5)),
        ("C5", catalog::cycle(5), ratio(5, 2)),
        ("C7", catalog::cycle(7), ratio(7, 3)),
        ("K4", catalog::complete(4), int(4)),
        ("C8^2", catalog::cycle_power(8, 2).map_err(|e| e.to_string())?, int(4)),
        ("C5xK2", catalog::strong_product_c5_k2(), int(5)),
    ];
    let mut slowest = Duration::ZERO;
    for (name, g, want) in cases {
        let start = Instant::now();
        let (got, sol) = fractional_chromatic_number(&g).map_err(|e| format!("{name}: {e}"))?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(got == want, || format!("{name}: got {got}, want {want}"))?;
        sol.check_feasible(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(took < CHIF_TIME, || format!("{name}: took {took:?}"))?;
    }
    let (alpha, set) = p72.independence_number();
    ensure(alpha == 5 && p72.is_independent(&set), || format!("alpha(P(7,2)) = {alpha}"))?;
    Ok(format!("6 values exact, alpha(P(7,2)) = 5, slowest {slowest:?}"))
}

fn certificates(graphs: &[Graph]) -> Outcome {
    let bound = ratio(RATIO_BOUND.0, RATIO_BOUND.1);
    let config = PipelineConfig::default();
    let mut fallbacks = Vec::new();
    let mut retries = 0;
    let mut lp_checked = 0;
    let mut worst = Rational::zero();
    let mut slowest = Duration::ZERO;
    for (i, g) in graphs.iter().enumerate() {
        ensure(corpus_is_in_scope(g), || format!("graph {i} outside the corpus class"))?;
        let start = Instant::now();
        let cert = pipeline(g, &config).map_err(|e| format!("graph {i} (n={}): {e}", g.n()))?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        verify(g, &cert).map_err(|e| format!("graph {i}: {e}"))?;
        let r = ratio(cert.a as i64, cert.b as i64);
        ensure(r == cert.ratio, || format!("graph {i}: ratio field {} != a/b", cert.ratio))?;
        ensure(r <= bound, || format!("graph {i} (n={}): a/b = {r} > 126/43", g.n()))?;
        ensure(took < CERTIFY_TIME, || format!("graph {i}: took {took:?}"))?;
        if cert.provenance.path == PipelinePath::LpFallback {
            fallbacks.push(i);
        }
        retries += cert.provenance.retries;
        if r > worst {
            worst = r.clone();
        }
        if g.n() <= LP_CROSSCHECK_N {
            let (chif, _) = fractional_chromatic_number(g).map_err(|e| format!("graph {i}: {e}"))?;
            ensure(r >= chif, || format!("graph {i}: a/b = {r} below chi_f = {chif}"))?;
            lp_checked += 1;
        }
    }
    Ok(format!(
        "{} graphs verified, worst a/b {worst}, {lp_checked} LP cross-checks, {retries} retries, fallbacks {fallbacks:?}, slowest {slowest:?}",
        graphs.len()
    ))
}

fn endgame_limit(cycle_len: usize) -> Option<usize> {
    match cycle_len {
        4 => Some(123),
        5 => Some(124),
        6 => Some(122),
        _ => None,
    }
}

fn partitions(graphs: &[Graph]) -> Outcome {
    let mut max_triples = 0;
    let mut max_step = 0;
    for (i, g) in graphs.iter().enumerate() {
        let gp = greedy_partition(g, 0).map_err(|e| format!("graph {i}: {e}"))?;
        let triples = &gp.partition.triples;
        ensure(triples.len() <= MAX_TRIPLES && MAX_TRIPLES == 42, || {
            format!("graph {i}: {} triples", triples.len())
        })?;
        let mut seen = vec![0usize; g.n()];
        for (j, t) in triples.iter().enumerate() {
            ensure(is_admissible(g, t), || format!("graph {i}: triple {j} not admissible"))?;
            for part in t.parts() {
                for v in part {
                    ensure(v < g.n(), || format!("graph {i}: vertex {v} out of range"))?;
                    seen[v] += 1;
                }
            }
        }
        if let Some(v) = seen.iter().position(|&k| k != 1) {
            return Err(format!("graph {i}: vertex {v} covered {} times", seen[v]));
        }
        gp.partition.check(g).map_err(|e| format!("graph {i}: {e}"))?;
        ensure(gp.forbidden.len() == g.n(), || format!("graph {i}: {} step records", gp.forbidden.len()))?;
        let step = gp.forbidden.iter().copied().max().unwrap_or(0);
        ensure(step <= STEP_LIMIT && step < PALETTE_SIZE, || format!("graph {i}: {step} forbidden colors"))?;
        max_step = max_step.max(step);
        for rec in &gp.endgame {
            let limit = endgame_limit(rec.cycle_len)
                .ok_or_else(|| format!("graph {i}: witness cycle length {}", rec.cycle_len))?;
            ensure(rec.forbidden <= limit, || {
                format!("graph {i}: endgame vertex {} has {} forbidden, limit {limit}", rec.vertex, rec.forbidden)
            })?;
        }
        max_triples = max_triples.max(triples.len());
    }
    Ok(format!("{} partitions, at most {max_triples} triples, max forbidden {max_step}", graphs.len()))
}

fn proper_with(g: &Graph, colors: &[Color]) -> bool {
    colors.len() == g.n() && colors.iter().all(|c| (1..=3).contains(c)) && g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Exhaustive search over cycle colorings with hubs fixed to 1, 2, 3.
fn hub_oracle(attachment: &[Color]) -> bool {
    let len = attachment.len();
    let total = 3usize.pow(len as u32);
    (0..total).any(|mut code| {
        let mut c = vec![0u8; len];
        for x in c.iter_mut() {
            *x = (code % 3) as u8 + 1;
            code /= 3;
        }
        (0..len).all(|i| c[i] != c[(i + 1) % len] && c[i] != attachment[i])
    })
}

fn hub_split() -> Outcome {
    let start = Instant::now();
    let mut instances = 0;
    for k in [2usize, 3] {
        let len = 2 * k + 1;
        for mut code in 0..3usize.pow(len as u32) {
            let attachment: Vec<Color> = (0..len)
                .map(|_| {
                    let h = (code % 3) as Color + 1;
                    code /= 3;
                    h
                })
                .collect();
            let bare = (1..=3).filter(|h| !attachment.contains(h)).count();
            if bare > 1 {
                continue;
            }
            let inst = HubSplitInstance::new(k, attachment.clone()).map_err(|e| format!("{attachment:?}: {e}"))?;
            let colors = hub_split_three_color(&inst);
            ensure(proper_with(&inst.graph(), &colors), || format!("{attachment:?}: improper {colors:?}"))?;
            ensure(colors[len..] == [1, 2, 3], || format!("{attachment:?}: hub colors {:?}", &colors[len..]))?;
            ensure(hub_oracle(&attachment), || format!("{attachment:?}: oracle finds no coloring"))?;
            instances += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < HUB_SPLIT_TIME, || format!("took {took:?}"))?;
    Ok(format!("{instances} instances, all proper and oracle-confirmed, {took:?}"))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.6);
    let edges: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("valid edges")
}

/// Greedy `b`-fold coloring: each vertex draws `b` random colors not used by
/// earlier neighbors from a palette of `b·(Δ+1)` plus a random slack.
fn random_fold(rng: &mut ChaCha8Rng, g: &Graph, b: usize) -> FoldColoring {
    let palette = (b * (g.max_degree() + 1) + rng.gen_range(0..3)) as ColorId;
    let mut colors: Vec<Vec<ColorId>> = vec![Vec::new(); g.n()];
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(rng);
    for &v in &order {
        let mut free: Vec<ColorId> = (0..palette)
            .filter(|c| g.neighbors(v).iter().all(|&u| !colors[u].contains(c)))
            .collect();
        free.shuffle(rng);
        free.truncate(b);
        colors[v] = free;
    }
    FoldColoring::new(b, colors)
}

fn permute_colors(rng: &mut ChaCha8Rng, c: &FoldColoring) -> FoldColoring {
    let top = c.palette().into_iter().max().map_or(0, |m| m + 1);
    let mut perm: Vec<ColorId> = (0..top).map(|x| x + 1000).collect();
    perm.shuffle(rng);
    let colors = (0..c.n()).map(|v| c.colors_of(v).iter().map(|&x| perm[x as usize]).collect()).collect();
    FoldColoring::new(c.fold(), colors)
}

fn fold_ratio(c: &FoldColoring) -> Rational {
    ratio(c.palette_size() as i64, c.fold() as i64)
}

fn fold_algebra() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pick = |rng: &mut ChaCha8Rng| {
        let n = rng.gen_range(1..=FOLD_MAX_N);
        let g = random_graph(rng, n);
        let b1 = rng.gen_range(1..=4);
        let b2 = rng.gen_range(1..=4);
        let c1 = random_fold(rng, &g, b1);
        let c2 = random_fold(rng, &g, b2);
        (g, c1, c2)
    };

    for trial in 0..FOLD_TRIALS {
        let (g, c1, c2) = pick(&mut rng);
        let sum = add(&c1, &c2).map_err(|e| e.to_string())?;
        validate(&g, &sum).map_err(|e| format!("additivity trial {trial}: {e}"))?;
        ensure(sum.venn_signature() == c1.venn_signature().sum(&c2.venn_signature()), || {
            format!("additivity trial {trial}")
        })?;
    }

    for trial in 0..FOLD_TRIALS {
        let (_, c, _) = pick(&mut rng);
        let t = rng.gen_range(1..=5);
        let s = scale(t, &c);
        ensure(s.fold() == t * c.fold() && equivalent(&c, &s), || format!("scale trial {trial}"))?;
        ensure(s.venn_signature() == c.venn_signature().times(t as u64), || format!("scale signature trial {trial}"))?;
    }

    // phi(λ c1 + (1-λ) c2) = λ phi(c1) + (1-λ) phi(c2), where the left side is
    // the fold-level combination q·b2·c1 + (p-q)·b1·c2 over p·b1·b2.
    for trial in 0..FOLD_TRIALS {
        let (g, c1, c2) = pick(&mut rng);
        let p = rng.gen_range(1..=6usize);
        let q = rng.gen_range(0..=p);
        let (b1, b2) = (c1.fold(), c2.fold());
        let combo = add(&scale(q * b2, &c1), &scale((p - q) * b1, &c2)).map_err(|e| e.to_string())?;
        ensure(combo.fold() == p * b1 * b2, || format!("convexity trial {trial}: fold {}", combo.fold()))?;
        validate(&g, &combo).map_err(|e| format!("convexity trial {trial}: {e}"))?;
        let lambda = ratio(q as i64, p as i64);
        let (f1, f2) = (c1.to_fractional().unwrap(), c2.to_fractional().unwrap());
        let lhs = combo.to_fractional().map_err(|e| e.to_string())?;
        let rhs = convex_combine(&lambda, &f1, &f2).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("convexity trial {trial}: lambda {lambda}"))?;
        // coordinate-wise on every region touched by either side
        for (region, w) in rhs.weights() {
            let a = f1.weights().get(region).cloned().unwrap_or_else(Rational::zero);
            let b = f2.weights().get(region).cloned().unwrap_or_else(Rational::zero);
            let mix = &lambda * a + (Rational::one() - &lambda) * b;
            ensure(&mix == w, || format!("convexity trial {trial}: region {region}"))?;
        }
    }

    for trial in 0..FOLD_TRIALS {
        let (_, c1, c2) = pick(&mut rng);
        let lambda = ratio(rng.gen_range(0..=7), 7);
        let (f1, f2) = (c1.to_fractional().unwrap(), c2.to_fractional().unwrap());
        let mix = convex_combine(&lambda, &f1, &f2).map_err(|e| e.to_string())?;
        let want = &lambda * f1.gvalue() + (Rational::one() - &lambda) * f2.gvalue();
        ensure(mix.gvalue() == want, || format!("affine trial {trial}"))?;
        ensure(f1.gvalue() == fold_ratio(&c1), || format!("g value trial {trial}"))?;
    }

    for trial in 0..FOLD_TRIALS {
        let n = rng.gen_range(2..=FOLD_MAX_N);
        let g = random_graph(&mut rng, n);
        let b = rng.gen_range(1..=3);
        let c = random_fold(&mut rng, &g, b);
        // g1 is random; g2 is the rest plus its neighbors inside g1, so the
        // two induced subgraphs cover every edge.
        let g1: VertexSet = g.vertices().filter(|_| rng.gen_bool(0.6)).collect();
        let rest = g.vertex_set().difference(&g1);
        let g2: VertexSet = rest
            .iter()
            .chain(rest.iter().flat_map(|v| g.neighbors(v).iter().copied()))
            .collect();
        let g2 = if g2.is_empty() { VertexSet::singleton(0) } else { g2 };
        let g1 = if g1.is_empty() { VertexSet::singleton(0) } else { g1 };
        let t1 = rng.gen_range(1..=3);
        let t2 = rng.gen_range(1..=3);
        let c1 = permute_colors(&mut rng, &scale(t1, &restrict(&c, &g1).unwrap()));
        let c2 = scale(t2, &restrict(&c, &g2).unwrap());
        let glued = glue(&g, &g1, &g2, &c1, &c2).map_err(|e| format!("glue trial {trial}: {e}"))?;
        validate(&g, &glued).map_err(|e| format!("glue trial {trial}: {e}"))?;
        let fold = glued.fold();
        ensure(fold == c1.fold().lcm(&c2.fold()), || format!("glue trial {trial}: fold {fold}"))?;
        for (side, ci) in [(&g1, &c1), (&g2, &c2)] {
            let back = restrict(&glued, side).unwrap();
            let rescaled = scale(fold / ci.fold(), ci);
            ensure(isomorphic(&back, &rescaled), || format!("glue trial {trial}: restriction to {side}"))?;
        }
        let want = std::cmp::max(fold_ratio(&c1), fold_ratio(&c2));
        ensure(fold_ratio(&glued) == want, || {
            format!("glue trial {trial}: g = {}, max = {want}", fold_ratio(&glued))
        })?;
    }
    Ok(format!("{FOLD_TRIALS} trials each of additivity, scaling, convexity, affinity, glue"))
}

fn chif(g: &Graph) -> Result<Rational, String> {
    fractional_chromatic_number(g).map(|(r, _)| r).map_err(|e| e.to_string())
}

/// Random edges among `side`, with every side vertex joined to at least one
/// of `anchors` so the side stays attached.
fn random_side(rng: &mut ChaCha8Rng, side: &[Vertex], anchors: &[Vertex], edges: &mut Vec<(Vertex, Vertex)>) {
    let p: f64 = rng.gen_range(0.2..0.6);
    for (i, &u) in side.iter().enumerate() {
        for &v in &side[i + 1..] {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
        for &a in anchors {
            if rng.gen_bool(p) {
                edges.push((u, a));
            }
        }
        if !anchors.is_empty() && !edges.iter().any(|&(x, y)| (x == u && anchors.contains(&y)) || (y == u && anchors.contains(&x))) {
            edges.push((u, anchors[rng.gen_range(0..anchors.len())]));
        }
    }
}

fn cut_lemmas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut strict = 0;
    for inst in 0..CUT_INSTANCES {
        // clique cut: shared clique 0..r, first side r..r+n1, second side after
        let r = rng.gen_range(1..=3);
        let n1 = rng.gen_range(1..=(CUT_MAX_N - r) / 2);
        let n2 = rng.gen_range(1..=CUT_MAX_N - r - n1);
        let n = r + n1 + n2;
        let clique: Vec<Vertex> = (0..r).collect();
        let s1: Vec<Vertex> = (r..r + n1).collect();
        let s2: Vec<Vertex> = (r + n1..n).collect();
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for (i, &u) in clique.iter().enumerate() {
            edges.extend(clique[i + 1..].iter().map(|&v| (u, v)));
        }
        random_side(&mut rng, &s1, &clique, &mut edges);
        random_side(&mut rng, &s2, &clique, &mut edges);
        let g = Graph::new(n, edges).map_err(|e| e.to_string())?;
        let g1: VertexSet = clique.iter().chain(&s1).copied().collect();
        let g2: VertexSet = clique.iter().chain(&s2).copied().collect();
        let check = check_clique_cut(&g, &g1, &g2, DEFAULT_MIS_CAP).map_err(|e| format!("clique {inst}: {e}"))?;
        let (whole, a, b) = (chif(&g)?, chif(&g.induced_subgraph(&g1))?, chif(&g.induced_subgraph(&g2))?);
        ensure((check.whole.clone(), check.first.clone(), check.second.clone()) == (whole.clone(), a.clone(), b.clone()), || {
            format!("clique {inst}: checker disagrees with direct LP")
        })?;
        ensure(check.holds() && whole == std::cmp::max(a.clone(), b.clone()), || {
            format!("clique {inst}: chi_f = {whole}, sides {a}, {b}")
        })?;

        // 2-cut on nonadjacent u = 0, v = 1
        let n1 = rng.gen_range(1..=(CUT_MAX_N - 2) / 2);
        let n2 = rng.gen_range(1..=CUT_MAX_N - 2 - n1);
        let n = 2 + n1 + n2;
        let pair = [0, 1];
        let s1: Vec<Vertex> = (2..2 + n1).collect();
        let s2: Vec<Vertex> = (2 + n1..n).collect();
        let mut edges = Vec::new();
        random_side(&mut rng, &s1, &pair, &mut edges);
        random_side(&mut rng, &s2, &pair, &mut edges);
        let g = Graph::new(n, edges).map_err(|e| e.to_string())?;
        let check = check_two_cut(&g, 0, 1, DEFAULT_MIS_CAP).map_err(|e| format!("two-cut {inst}: {e}"))?;
        ensure(check.holds(), || format!("two-cut {inst}: {check:?}"))?;
        // direct oracle on both orientations of the construction
        let whole = chif(&g)?;
        let full1: VertexSet = pair.iter().chain(&s1).copied().collect();
        let full2: VertexSet = pair.iter().chain(&s2).copied().collect();
        for (a, b) in [(&full1, &full2), (&full2, &full1)] {
            let h2 = g.induced_subgraph(b);
            let (lu, lv) = (b.position(0).unwrap(), b.position(1).unwrap());
            let bound = [
                chif(&g.induced_subgraph(a))?,
                chif(&h2.add_edge(lu, lv).map_err(|e| e.to_string())?)?,
                chif(&h2.contract_pair(lu, lv).map_err(|e| e.to_string())?)?,
            ]
            .into_iter()
            .max()
            .unwrap();
            ensure(whole <= bound, || format!("two-cut {inst}: chi_f = {whole} > {bound}"))?;
            if whole < bound {
                strict += 1;
            }
        }
    }
    Ok(format!("{CUT_INSTANCES} clique cuts equal, {CUT_INSTANCES} two-cuts bounded ({strict} strict sides)"))
}

fn independence_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    let mut seed = 1000u64;
    let mut tight = 0;
    while checked < ALPHA_GRAPHS {
        let n = rng.gen_range(1..=ALPHA_MAX_N);
        seed += 1;
        let Some(g) = random_subcubic_triangle_free(&GenConfig::new(n, seed)) else {
            continue;
        };
        ensure(g.is_triangle_free() && g.max_degree() <= 3 && g.n() == n, || format!("seed {seed}: bad sample"))?;
        let (alpha, set) = g.independence_number();
        ensure(g.is_independent(&set) && set.len() == alpha, || format!("seed {seed}: bad witness"))?;
        let need = (5 * n).div_ceil(14);
        ensure(alpha >= need, || format!("seed {seed}: n = {n}, alpha = {alpha} < {need}"))?;
        if alpha == need {
            tight += 1;
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs, {tight} tight"))
}

fn brute_three_colorable(g: &Graph) -> bool {
    fn go(g: &Graph, v: usize, c: &mut Vec<u8>) -> bool {
        if v == g.n() {
            return true;
        }
        for x in 1..=3 {
            if g.neighbors(v).iter().all(|&u| u >= v || c[u] != x) {
                c[v] = x;
                if go(g, v + 1, c) {
                    return true;
                }
            }
        }
        false
    }
    go(g, 0, &mut vec![0; g.n()])
}

fn wheel_gadget() -> Graph {
    Graph::new(
        9,
        [(0, 1), (0, 2), (0, 3), (1, 4), (1, 6), (2, 5), (2, 7), (3, 8), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)],
    )
    .expect("valid gadget")
}

fn three_coloring() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut yes = 0;
    for trial in 0..BRUTE_TRIALS {
        let n = rng.gen_range(1..=BRUTE_MAX_N);
        let g = random_graph(&mut rng, n);
        let oracle = brute_three_colorable(&g);
        match three_color(&g, &[]) {
            ColoringOutcome::Colorable(c) => {
                ensure(oracle && proper_with(&g, &c), || format!("trial {trial}: bad coloring"))?;
                yes += 1;
            }
            ColoringOutcome::NotColorable => ensure(!oracle, || format!("trial {trial}: missed a coloring"))?,
            ColoringOutcome::Undecided => return Err(format!("trial {trial}: undecided")),
        }
    }
    // wheel gadgets: each forces its spokes' hubs to clash, three copies give
    // the pattern where the quotient needs a fourth color
    let one = wheel_gadget();
    let g = one.disjoint_union(&one).disjoint_union(&one);
    let t = AdmissibleTriple::new(VertexSet::from([0]), VertexSet::from([9]), VertexSet::from([18]));
    ensure(g.is_triangle_free() && g.max_degree() <= 3 && is_admissible(&g, &t), || "gadget out of scope".into())?;
    let aux = build_aux(&g, &t).map_err(|e| e.to_string())?;
    ensure(aux.three_color() == ColoringOutcome::NotColorable, || "quotient reported 3-colorable".into())?;
    ensure(!brute_three_colorable(&aux.graph), || "oracle 3-colors the quotient".into())?;
    let chi = chromatic_number(&aux.graph);
    ensure(chi == 4, || format!("quotient chromatic number {chi}"))?;
    Ok(format!("{BRUTE_TRIALS} random graphs match brute force ({yes} colorable), gadget quotient 4-chromatic"))
}

fn main() {
    let graphs = corpus();
    let criteria: Vec<Criterion> = vec![
        ("exact fractional chromatic numbers", Box::new(exact_values)),
        ("certificate soundness and 126/43 bound", Box::new(|| certificates(&graphs))),
        ("admissible partition correctness", Box::new(|| partitions(&graphs))),
        ("hub-split exhaustive k=2,3", Box::new(hub_split)),
        ("fold coloring algebra", Box::new(fold_algebra)),
        ("clique-cut and two-cut lemmas", Box::new(cut_lemmas)),
        ("independence lower bound 5n/14", Box::new(independence_bound)),
        ("three_color exactness and 4-chromatic quotient", Box::new(three_coloring)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{took:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
