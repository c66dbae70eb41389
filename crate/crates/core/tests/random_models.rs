use grafen::asymptotics::{degree_fraction_limit, edge_pair_limit, sublinear_degree_law};
use grafen::random::{ba_tree, erdos_renyi, recursive_tree, Seed, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

fn ratio(r: num_rational::Ratio<i128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[test]
fn four_vertex_star_probability() {
    // the third vertex makes a path; the fourth joins its center with
    // probability 2/4 under linear attachment and 1/3 uniformly
    let reps = 100_000u64;
    let mut ba = 0u64;
    let mut rrt = 0u64;
    for s in 0..reps {
        ba += (ba_tree(4, 1.0, Seed::new(17, s)).max_degree() == 3) as u64;
        rrt += (recursive_tree(4, Seed::new(17, s)).max_degree() == 3) as u64;
    }
    let check = |hits: u64, p: f64| {
        let se = (p * (1.0 - p) / reps as f64).sqrt();
        let got = hits as f64 / reps as f64;
        assert!((got - p).abs() < 4.0 * se, "{got} vs {p}");
    };
    check(ba, 0.5);
    check(rrt, 1.0 / 3.0);
}

#[test]
fn four_vertex_star_probability_general_alpha() {
    // path 0-1-2 or similar with center degree 2: P(star) = 2^a / (2^a + 2)
    let alpha = 2.0;
    let p = 2f64.powf(alpha) / (2f64.powf(alpha) + 2.0);
    let reps = 40_000u64;
    let hits = (0..reps)
        .filter(|&s| ba_tree(4, alpha, Seed::new(3, s)).max_degree() == 3)
        .count();
    let se = (p * (1.0 - p) / reps as f64).sqrt();
    assert!((hits as f64 / reps as f64 - p).abs() < 4.0 * se);
}

#[test]
fn weighted_index_chi_squared() {
    let weights = [1.0, 2.5, 0.5, 4.0, 3.0, 0.25, 7.0];
    let mut w = WeightedIndex::with_capacity(weights.len());
    for &x in &weights {
        w.push(x);
    }
    let total: f64 = weights.iter().sum();
    let draws = 200_000;
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut counts = [0u64; 7];
    for _ in 0..draws {
        counts[w.sample(&mut rng)] += 1;
    }
    let stat: f64 = counts
        .iter()
        .zip(&weights)
        .map(|(&c, &x)| {
            let e = draws as f64 * x / total;
            (c as f64 - e).powi(2) / e
        })
        .sum();
    let chi = ChiSquared::new((weights.len() - 1) as f64).unwrap();
    let p_value = 1.0 - chi.cdf(stat);
    assert!(p_value > 1e-3, "chi2 = {stat}, p = {p_value}");
}

#[test]
fn weighted_index_after_updates() {
    let mut w = WeightedIndex::with_capacity(4);
    for _ in 0..4 {
        w.push(1.0);
    }
    w.set(2, 5.0);
    w.set(0, 2.0);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let draws = 90_000;
    let mut counts = [0u64; 4];
    for _ in 0..draws {
        counts[w.sample(&mut rng)] += 1;
    }
    let expect = [2.0 / 9.0, 1.0 / 9.0, 5.0 / 9.0, 1.0 / 9.0];
    let stat: f64 = counts
        .iter()
        .zip(expect)
        .map(|(&c, p)| (c as f64 - draws as f64 * p).powi(2) / (draws as f64 * p))
        .sum();
    let chi = ChiSquared::new(3.0).unwrap();
    assert!(1.0 - chi.cdf(stat) > 1e-3, "{stat}");
}

#[test]
fn linear_attachment_degree_law() {
    let (n, reps) = (3000, 30);
    let mut frac = [0.0f64; 7];
    let mut e22 = 0.0;
    let mut e12 = 0.0;
    for r in 0..reps {
        let t = ba_tree(n, 1.0, Seed::new(2024, r));
        let ds = t.degree_stats();
        for (d, f) in frac.iter_mut().enumerate().skip(1) {
            *f += ds.fraction(d) / reps as f64;
        }
        let es = t.edge_pair_stats();
        e22 += es.count(2, 2) as f64 / n as f64 / reps as f64;
        e12 += es.count(1, 2) as f64 / n as f64 / reps as f64;
    }
    for (d, &f) in frac.iter().enumerate().skip(1) {
        let want = ratio(degree_fraction_limit(d as u64).unwrap());
        assert!((f - want).abs() < 0.01, "d = {d}: {f} vs {want}");
    }
    assert!((e22 - 1.0 / 45.0).abs() < 0.005, "{e22}");
    assert!((e12 - ratio(edge_pair_limit(1, 2).unwrap())).abs() < 0.01, "{e12}");
}

#[test]
fn recursive_tree_degree_law() {
    // uniform attachment: degree fractions tend to 2^{-d}
    let (n, reps) = (5000, 20);
    let mut frac = [0.0f64; 6];
    for r in 0..reps {
        let ds = recursive_tree(n, Seed::new(7, r)).degree_stats();
        for (d, f) in frac.iter_mut().enumerate().skip(1) {
            *f += ds.fraction(d) / reps as f64;
        }
    }
    for (d, &f) in frac.iter().enumerate().skip(1) {
        assert!((f - 0.5f64.powi(d as i32)).abs() < 0.01, "d = {d}: {f}");
    }
}

#[test]
fn sublinear_attachment_degree_law() {
    let alpha = 0.5;
    let law = sublinear_degree_law(alpha, 50_000, 1e-9).unwrap();
    let (n, reps) = (5000, 20);
    let mut frac = [0.0f64; 6];
    for r in 0..reps {
        let ds = ba_tree(n, alpha, Seed::new(55, r)).degree_stats();
        for (d, f) in frac.iter_mut().enumerate().skip(1) {
            *f += ds.fraction(d) / reps as f64;
        }
    }
    for (d, &f) in frac.iter().enumerate().skip(1) {
        assert!((f - law.q[d - 1]).abs() < 0.01, "d = {d}: {f} vs {}", law.q[d - 1]);
    }
}

#[test]
fn sublinear_law_root_satisfies_growth_condition() {
    // independent evaluation of sum_d prod_{i<=d} i^a / (s + i^a) in log space
    for alpha in [0.25, 0.5, 0.8] {
        let law = sublinear_degree_law(alpha, 400_000, 1e-10).unwrap();
        let mut log_p = 0.0f64;
        let mut total = 0.0;
        for i in 1..=400_000u32 {
            let w = (i as f64).powf(alpha);
            log_p += (w / (law.s + w)).ln();
            total += log_p.exp();
        }
        assert!((total - 1.0).abs() < 1e-7, "alpha {alpha}: {total}");
    }
}

#[test]
fn erdos_renyi_edge_count() {
    let (n, p, reps) = (400usize, 0.02, 200u64);
    let pairs = (n * (n - 1) / 2) as f64;
    let mean = (0..reps)
        .map(|s| erdos_renyi(n, p, Seed::new(4, s)).edge_count() as f64)
        .sum::<f64>()
        / reps as f64;
    let se = (pairs * p * (1.0 - p) / reps as f64).sqrt();
    assert!((mean - pairs * p).abs() < 4.0 * se, "{mean} vs {}", pairs * p);
}

#[test]
fn erdos_renyi_pairs_are_uniform() {
    // every one of the 10 pairs on 5 vertices appears equally often
    let reps = 20_000u64;
    let mut counts = [0u64; 10];
    for s in 0..reps {
        let g = erdos_renyi(5, 0.3, Seed::new(12, s));
        let mut k = 0;
        for j in 1..5 {
            for i in 0..j {
                counts[k] += g.has_edge(i, j) as u64;
                k += 1;
            }
        }
    }
    let e = reps as f64 * 0.3;
    let sd = (reps as f64 * 0.3 * 0.7).sqrt();
    for (k, &c) in counts.iter().enumerate() {
        assert!((c as f64 - e).abs() < 4.5 * sd, "pair {k}: {c}");
    }
}

#[test]
fn large_alpha_makes_stars() {
    let t = ba_tree(300, 8.0, Seed::new(1, 1));
    assert!(t.max_degree() > 280);
    let t = ba_tree(300, -8.0, Seed::new(1, 1));
    assert!(t.max_degree() < 10);
}
