//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p pathbetti-cli --test acceptance`.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pathbetti::betti::{graded_betti_table, multigraded_betti, top_betti_product};
use pathbetti::formula::{line_multigraded_formula, omega_homology_dims_formula};
use pathbetti::graph::{Graph, VertexSet};
use pathbetti::homology::{boundary_matrices, reduced_euler_characteristic, reduced_homology_dims};
use pathbetti::path_ideal::path_ideal;
use pathbetti::simplicial::{boundary_complex, omega_complex, Face, SimplicialComplex};
use pathbetti_cli::run_from_args;

const PRIMES: [u32; 2] = [2, 32003];

type Check = fn() -> Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    check: Check,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn compare(family: &str, n: usize, t: usize, prime: u32) -> Result<String, String> {
    let args = ["pathbetti", "compare", &format!("--{family}"), &n.to_string(), "--t", &t.to_string(), "--prime", &prime.to_string()];
    let out = run_from_args(args);
    ensure(out.code == 0, || format!("compare --{family} {n} --t {t} --prime {prime} exited {}: {}{}", out.code, out.stdout, out.stderr))?;
    Ok(out.stdout)
}

fn omega_homology() -> Result<String, String> {
    let mut cases = 0;
    for t in 1..=4usize {
        for n in t..=12 {
            let formula = omega_homology_dims_formula(n as u64, t as u64).map_err(|e| e.to_string())?;
            let complex = omega_complex(n, t).map_err(|e| e.to_string())?;
            for prime in PRIMES {
                let oracle = reduced_homology_dims(&complex, prime).map_err(|e| e.to_string())?;
                let got: BTreeMap<i64, usize> = oracle.dims().clone();
                ensure(got == formula, || format!("Ω n={n} t={t} p={prime}: oracle {got:?} formula {formula:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (n, t, prime) cases"))
}

fn lines() -> Result<String, String> {
    let mut cases = 0;
    for t in 2..=4 {
        for n in t..=9 {
            for prime in PRIMES {
                compare("line", n, t, prime)?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} compare runs"))
}

fn cycles() -> Result<String, String> {
    let mut cases = 0;
    for t in 2..=3 {
        for n in 3..=8 {
            for prime in PRIMES {
                compare("cycle", n, t, prime)?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} compare runs (j < n)"))
}

fn stars() -> Result<String, String> {
    let mut cases = 0;
    for (t, max_n) in [(2usize, 6usize), (3, 5)] {
        for n in 2..=max_n {
            for prime in PRIMES {
                compare("star", n, t, prime)?;
                cases += 1;
            }
            let table = graded_betti_table(&Graph::star(n).unwrap(), t, 32003).map_err(|e| e.to_string())?;
            for &(i, j) in table.entries().keys() {
                ensure(i == 0 || j == i + t - 1, || format!("S_{n} t={t}: entry ({i},{j}) off the linear diagonal"))?;
            }
        }
    }
    Ok(format!("{cases} compare runs, all tables linear"))
}

fn check_zero_one_law(g: &Graph, t: usize, w: VertexSet) -> Result<(), String> {
    let ideal = path_ideal(g, t);
    let oracle = multigraded_betti(&ideal, w, 32003).map_err(|e| e.to_string())?;
    ensure(oracle.values().all(|&b| b == 1), || format!("{g:?} t={t} W={w}: non-unit value {oracle:?}"))?;
    let orders: Vec<u64> = g
        .induced_subgraph(w)
        .map_err(|e| e.to_string())?
        .line_decomposition()
        .ok_or_else(|| format!("{g:?} W={w}: induced subgraph is not a union of lines"))?
        .into_iter()
        .map(|o| o as u64)
        .collect();
    for i in 1..=w.len().max(1) {
        let expected = line_multigraded_formula(&orders, t as u64, i as u64);
        let got = oracle.get(&i).copied().unwrap_or(0);
        ensure(got == expected, || format!("{g:?} t={t} W={w} i={i}: oracle {got} formula {expected}"))?;
    }
    Ok(())
}

fn multigraded_zero_one() -> Result<String, String> {
    let mut checked = 0;
    for t in 2..=3 {
        for n in 1..=8 {
            let l = Graph::line(n).unwrap();
            for w in l.vertices().subsets().filter(|w| !w.is_empty()) {
                check_zero_one_law(&l, t, w)?;
                checked += 1;
            }
        }
    }
    for n in 3..=7 {
        let c = Graph::cycle(n).unwrap();
        for w in c.vertices().subsets().filter(|w| !w.is_empty() && w.len() < n) {
            check_zero_one_law(&c, 2, w)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} multidegrees"))
}

fn random_family_graph(rng: &mut ChaCha8Rng) -> Graph {
    match rng.gen_range(0..3) {
        0 => Graph::line(rng.gen_range(2..=9)).unwrap(),
        1 => Graph::cycle(rng.gen_range(3..=8)).unwrap(),
        _ => Graph::star(rng.gen_range(1..=5)).unwrap(),
    }
}

fn restriction_and_products() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut disconnected = 0;
    for _ in 0..200 {
        let g = random_family_graph(&mut rng);
        let t = rng.gen_range(2..=3);
        let w: VertexSet = g.vertices().iter().filter(|_| rng.gen_bool(0.6)).collect();
        if w.is_empty() {
            continue;
        }
        let ideal = path_ideal(&g, t);
        let direct = multigraded_betti(&ideal, w, 32003).map_err(|e| e.to_string())?;
        let gw = g.induced_subgraph(w).map_err(|e| e.to_string())?;
        let restricted = graded_betti_table(&gw, t, 32003).map_err(|e| e.to_string())?.column(w.len());
        ensure(direct == restricted, || format!("{g:?} t={t} W={w}: direct {direct:?} restricted {restricted:?}"))?;
        let components = gw.connected_components();
        if components.len() > 1 {
            disconnected += 1;
            let tops: Vec<BTreeMap<usize, u64>> = components
                .iter()
                .map(|c| {
                    let gc = gw.induced_subgraph(*c).unwrap();
                    graded_betti_table(&gc, t, 32003).map(|tab| tab.column(c.len()))
                })
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let product = top_betti_product(&tops);
            ensure(product == direct, || format!("{g:?} t={t} W={w}: product {product:?} direct {direct:?}"))?;
        }
    }
    Ok(format!("200 samples, {disconnected} disconnected"))
}

fn is_star(g: &Graph) -> bool {
    let n = g.order();
    g.edge_count() == n - 1 && g.vertices().iter().any(|v| g.degree(v) == n - 1)
}

fn boundary_iff_star() -> Result<String, String> {
    let (mut stars, mut others) = (0, 0);
    for n in 2..=5usize {
        let pairs: Vec<(i64, i64)> = (1..=n as i64).flat_map(|u| (u + 1..=n as i64).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let ideal = path_ideal(&g, 2);
            let sub = ideal.taylor_strict_sub(ideal.lcm()).map_err(|e| e.to_string())?;
            let boundary = boundary_complex(ideal.generators().len()).unwrap();
            let star = is_star(&g);
            ensure((sub == boundary) == star, || format!("{g:?}: boundary={} star={star}", sub == boundary))?;
            if star {
                stars += 1;
            } else {
                others += 1;
            }
        }
    }
    Ok(format!("{stars} stars, {others} non-star connected graphs"))
}

fn random_complex(rng: &mut ChaCha8Rng, max_vertex: u32, max_facets: usize) -> SimplicialComplex {
    let q = rng.gen_range(1..=max_facets);
    SimplicialComplex::from_facets((0..q).map(|_| Face::new((1..=max_vertex).filter(|_| rng.gen_bool(0.5)))))
}

fn random_acyclic(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    if rng.gen_bool(0.5) {
        let facet: Vec<u32> = (1..=8).filter(|_| rng.gen_bool(0.5)).collect();
        if facet.is_empty() {
            return SimplicialComplex::simplex([rng.gen_range(1..=8)]);
        }
        SimplicialComplex::simplex(facet)
    } else {
        let apex = rng.gen_range(1..=8);
        let base = random_complex(rng, 8, 4);
        SimplicialComplex::from_facets(base.facets().iter().map(|f| f.union(&Face::new([apex]))))
    }
}

/// Every antichain of subsets of `{1,..,v}` with at most `max_facets` members.
fn all_complexes(v: u32, max_facets: usize) -> Vec<SimplicialComplex> {
    let subsets: Vec<Face> = (0u32..(1 << v)).map(|b| Face::new((1..=v).filter(|k| b >> (k - 1) & 1 == 1))).collect();
    let mut out = Vec::new();
    for family in 1u64..(1 << subsets.len()) {
        if family.count_ones() as usize > max_facets {
            continue;
        }
        let members: Vec<&Face> = (0..subsets.len()).filter(|k| family >> k & 1 == 1).map(|k| &subsets[k]).collect();
        let antichain = members.iter().enumerate().all(|(a, x)| members.iter().enumerate().all(|(b, y)| a == b || !x.is_subset(y)));
        if antichain {
            out.push(SimplicialComplex::from_facets(members.into_iter().cloned()));
        }
    }
    out
}

fn check_matching_claim(k: &SimplicialComplex) -> Result<bool, String> {
    let Some(vs) = k.facet_vertex_matching() else {
        return Ok(false);
    };
    let q = k.facets().len();
    for (i, &v) in vs.iter().enumerate() {
        for (j, f) in k.facets().iter().enumerate() {
            ensure(f.contains(v) == (i != j), || format!("{k:?}: bad matching {vs:?}"))?;
        }
    }
    for prime in PRIMES {
        let h = reduced_homology_dims(k, prime).map_err(|e| e.to_string())?;
        let expected = BTreeMap::from([(q as i64 - 2, 1usize)]);
        ensure(h.dims() == &expected, || format!("{k:?}: homology {:?}, expected {expected:?}", h.dims()))?;
    }
    Ok(true)
}

fn homology_self_checks() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..300 {
        let k = random_complex(&mut rng, 8, 7);
        let chi = reduced_euler_characteristic(&k).map_err(|e| e.to_string())?;
        for prime in PRIMES {
            let maps = boundary_matrices(&k, prime).map_err(|e| e.to_string())?;
            for w in maps.windows(2) {
                ensure(w[0].mul(&w[1]).unwrap().is_zero(), || format!("{k:?}: ∂∂ ≠ 0 mod {prime}"))?;
            }
            let h = reduced_homology_dims(&k, prime).map_err(|e| e.to_string())?;
            ensure(h.euler_characteristic() == chi, || format!("{k:?}: Euler mismatch mod {prime}"))?;
        }
        let apex = 9;
        let cone = SimplicialComplex::from_facets(k.facets().iter().map(|f| f.union(&Face::new([apex]))));
        let h = reduced_homology_dims(&cone, 32003).map_err(|e| e.to_string())?;
        ensure(h.is_acyclic(), || format!("cone over {k:?} has homology {:?}", h.dims()))?;
    }

    for _ in 0..500 {
        let a = random_acyclic(&mut rng);
        let b = random_acyclic(&mut rng);
        let union = reduced_homology_dims(&a.union(&b), 32003).map_err(|e| e.to_string())?;
        let meet = reduced_homology_dims(&a.intersection(&b), 32003).map_err(|e| e.to_string())?;
        for p in -1..=9 {
            ensure(union.dim(p) == meet.dim(p - 1), || format!("union/intersection mismatch at p={p}: {a:?} {b:?}"))?;
        }
    }

    let mut matched = 0;
    let mut total = 0;
    for v in 1..=4 {
        for k in all_complexes(v, 7) {
            total += 1;
            matched += check_matching_claim(&k)? as usize;
        }
    }
    for _ in 0..4000 {
        let v = rng.gen_range(5..=8);
        let mut facets: Vec<Face> = Vec::new();
        // bias toward matchable shapes: delete one private vertex per facet
        let q = rng.gen_range(2..=7usize);
        let mut labels: Vec<u32> = (1..=v).collect();
        labels.shuffle(&mut rng);
        for i in 0..q {
            let face = Face::new(labels.iter().copied().enumerate().filter(|&(k, _)| k != i && (k < q || rng.gen_bool(0.5))).map(|(_, x)| x));
            facets.push(face);
        }
        let k = SimplicialComplex::from_facets(facets);
        total += 1;
        matched += check_matching_claim(&k)? as usize;
    }
    Ok(format!("300 random complexes, 500 acyclic pairs, {matched}/{total} matchable complexes"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "omega homology oracle = closed form (t ≤ 4, n ≤ 12, p ∈ {2, 32003})", budget: Duration::from_secs(30), check: omega_homology },
        Criterion { id: 2, name: "compare --line n --t t, t ∈ {2,3,4}, t ≤ n ≤ 9", budget: Duration::from_secs(120), check: lines },
        Criterion { id: 3, name: "compare --cycle n --t t, t ∈ {2,3}, 3 ≤ n ≤ 8, j < n", budget: Duration::from_secs(120), check: cycles },
        Criterion { id: 4, name: "compare --star n --t t (t=2: n ≤ 6, t=3: n ≤ 5) + linear shape", budget: Duration::from_secs(180), check: stars },
        Criterion { id: 5, name: "multigraded 0/1 law on lines and cycles", budget: Duration::from_secs(120), check: multigraded_zero_one },
        Criterion { id: 6, name: "restriction to induced subgraphs and component products", budget: Duration::from_secs(120), check: restriction_and_products },
        Criterion { id: 7, name: "strict Taylor subcomplex is the boundary iff star (t = 2, ≤ 5 vertices)", budget: Duration::from_secs(60), check: boundary_iff_star },
        Criterion { id: 8, name: "homology self-checks and facet-vertex matching claim", budget: Duration::from_secs(120), check: homology_self_checks },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed > c.budget {
                Err(format!("took {elapsed:.1?}, budget {:?} ({detail})", c.budget))
            } else {
                Ok(detail)
            }
        });
        match result {
            Ok(detail) => println!("[PASS] criterion {}: {} — {detail} in {elapsed:.2?}", c.id, c.name),
            Err(why) => {
                failures += 1;
                println!("[FAIL] criterion {}: {} — {why}", c.id, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
