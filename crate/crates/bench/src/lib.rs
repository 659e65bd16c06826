//! Inputs shared by the benchmarks.

use pathbetti::field::PrimeFieldMatrix;
use pathbetti::graph::Graph;

/// Named graphs of moderate size, with the path length used for each.
pub fn graph_cases() -> Vec<(String, Graph, usize)> {
    vec![
        ("line9_t2".into(), Graph::line(9).unwrap(), 2),
        ("line10_t3".into(), Graph::line(10).unwrap(), 3),
        ("cycle8_t2".into(), Graph::cycle(8).unwrap(), 2),
        ("star5_t3".into(), Graph::star(5).unwrap(), 3),
    ]
}

/// A dense-ish pseudo-random square matrix over GF(prime), deterministic in `n`.
pub fn lcg_matrix(n: usize, prime: u32) -> PrimeFieldMatrix {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d ^ n as u64;
    let mut entries = Vec::with_capacity(n * n / 3);
    for r in 0..n {
        for c in 0..n {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if (state >> 60) < 5 {
                entries.push((r, c, (state >> 33) as i64));
            }
        }
    }
    PrimeFieldMatrix::from_triplets(n, n, prime, entries).unwrap()
}
