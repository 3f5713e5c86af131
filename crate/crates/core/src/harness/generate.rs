//! Seeded random graph generators used by the experiment suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::MinorModel;

pub type SuiteRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for trial `index` of a run seeded with `seed`. Depends only on the
/// pair, so trials can run in any order.
pub fn sub_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index.wrapping_add(1)))
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_normalized(n, edges)
}

/// Uniform random labelled tree via random attachment.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let edges = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_normalized(n, edges)
}

/// Adds uniformly random edges between non-adjacent vertices that both have
/// degree below three until `target_edges` is reached. Returns `None` when no
/// such pair is left before the target.
pub fn random_subcubic<R: Rng>(n: usize, target_edges: usize, rng: &mut R) -> Option<Graph> {
    let mut degree = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    while edges.len() < target_edges {
        let open: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| degree[u] < 3 && degree[v] < 3 && !edges.contains(&(u, v)))
            .collect();
        let &(u, v) = open.choose(rng)?;
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    Some(Graph::from_normalized(n, edges))
}

#[derive(Clone, Copy, Debug)]
pub struct PlantingParams {
    pub max_blob: usize,
    pub noise_probability: f64,
    pub max_extra_vertices: usize,
}

impl Default for PlantingParams {
    fn default() -> Self {
        PlantingParams {
            max_blob: 3,
            noise_probability: 0.15,
            max_extra_vertices: 3,
        }
    }
}

/// Builds a host on at most `host_n` vertices that contains `pattern` as a
/// minor, and returns it with the planted model.
///
/// Each pattern vertex gets a random connected blob of 1 to `max_blob` host
/// vertices, every pattern edge is wired between random members of the two
/// blobs, a few extra vertices are added, noise edges are sprinkled over all
/// pairs, and finally host labels are shuffled.
pub fn plant_minor<R: Rng>(
    pattern: &Graph,
    host_n: usize,
    params: PlantingParams,
    rng: &mut R,
) -> Result<(Graph, MinorModel)> {
    let h = pattern.n();
    if h > host_n {
        return Err(Error::InvalidArgument(format!(
            "pattern with {h} vertices cannot fit into {host_n} host vertices"
        )));
    }
    let extra = rng.gen_range(0..=params.max_extra_vertices.min(host_n - h));
    let mut budget = host_n - extra - h;
    let mut sizes = vec![1usize; h];
    for size in sizes.iter_mut() {
        let want = rng.gen_range(1..=params.max_blob.max(1));
        let grow = (want - 1).min(budget);
        *size += grow;
        budget -= grow;
    }
    let total: usize = sizes.iter().sum::<usize>() + extra;

    let mut edges = Vec::new();
    let mut blobs: Vec<Vec<usize>> = Vec::with_capacity(h);
    let mut next = 0;
    for &size in &sizes {
        let blob: Vec<usize> = (next..next + size).collect();
        next += size;
        for i in 1..size {
            edges.push((blob[rng.gen_range(0..i)], blob[i]));
        }
        blobs.push(blob);
    }
    for &(u, v) in pattern.edges() {
        let a = *blobs[u].choose(rng).expect("blobs are nonempty");
        let b = *blobs[v].choose(rng).expect("blobs are nonempty");
        edges.push((a, b));
    }
    for u in 0..total {
        for v in u + 1..total {
            if rng.gen_bool(params.noise_probability) {
                edges.push((u, v));
            }
        }
    }

    let mut relabel: Vec<usize> = (0..total).collect();
    relabel.shuffle(rng);
    let edges = edges
        .into_iter()
        .map(|(u, v)| (relabel[u], relabel[v]))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    let host = Graph::from_normalized(total, edges);
    let sets = blobs
        .iter()
        .map(|b| b.iter().map(|&x| relabel[x]).collect())
        .collect();
    let model = MinorModel::new(pattern.clone(), host.clone(), sets)?;
    Ok((host, model))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::star;

    #[test]
    fn sub_seeds_differ_and_repeat() {
        assert_eq!(sub_seed(42, 3), sub_seed(42, 3));
        assert_ne!(sub_seed(42, 3), sub_seed(42, 4));
        assert_ne!(sub_seed(42, 3), sub_seed(43, 3));
    }

    #[test]
    fn subcubic_generator_respects_degree() {
        let mut rng = rng_from_seed(1);
        for _ in 0..50 {
            if let Some(g) = random_subcubic(6, 7, &mut rng) {
                assert!(g.is_subcubic());
                assert_eq!(g.m(), 7);
            }
        }
        assert!(random_subcubic(3, 4, &mut rng).is_none());
    }

    #[test]
    fn planted_model_is_valid() {
        let mut rng = rng_from_seed(7);
        for _ in 0..100 {
            let (host, model) =
                plant_minor(&star(3), 10, PlantingParams::default(), &mut rng).unwrap();
            assert!(host.n() <= 10);
            assert!(model.is_valid(false), "{model:?}");
        }
    }

    #[test]
    fn same_seed_same_graph() {
        let a = gnp(9, 0.5, &mut rng_from_seed(11));
        let b = gnp(9, 0.5, &mut rng_from_seed(11));
        assert_eq!(a, b);
        assert_eq!(random_tree(8, &mut rng_from_seed(2)).m(), 7);
    }
}
