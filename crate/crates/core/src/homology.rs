//! Reduced simplicial homology over `GF(p)`.
//!
//! The augmented chain complex is used throughout, so the empty face sits
//! in degree -1 and the irrelevant complex `{∅}` has `H̃_{-1} = k`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use thiserror::Error;

use crate::field::{check_prime, FieldError, PrimeFieldMatrix};
use crate::simplicial::{ComplexError, Face, SimplicialComplex};
use crate::FACE_CAP;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Dimensions of `H̃_p(K; GF(prime))`, nonzero degrees only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    dims: BTreeMap<i64, usize>,
    prime: u32,
}

impl HomologyProfile {
    pub fn new(dims: BTreeMap<i64, usize>, prime: u32) -> Self {
        let dims = dims.into_iter().filter(|&(_, d)| d != 0).collect();
        HomologyProfile { dims, prime }
    }

    pub fn dim(&self, p: i64) -> usize {
        self.dims.get(&p).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.is_empty()
    }

    /// `Σ (-1)^p dim H̃_p`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().map(|(&p, &d)| if p.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

/// Matrix of `∂_p` from `p`-faces (columns) to `(p-1)`-faces (rows), both
/// in lexicographic order.
pub fn boundary_matrix(
    lower: &[Face],
    upper: &[Face],
    prime: u32,
) -> Result<PrimeFieldMatrix, FieldError> {
    let index: HashMap<&Face, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut entries = Vec::with_capacity(upper.iter().map(Face::len).sum());
    for (col, face) in upper.iter().enumerate() {
        for k in 0..face.len() {
            let row = index[&face.without_position(k)];
            entries.push((row, col, if k % 2 == 0 { 1 } else { -1 }));
        }
    }
    PrimeFieldMatrix::from_triplets(lower.len(), upper.len(), prime, entries)
}

/// All boundary maps of `k`: entry `q` is `∂_q` for `q = 0..=dim K`.
pub fn boundary_matrices(
    k: &SimplicialComplex,
    prime: u32,
) -> Result<Vec<PrimeFieldMatrix>, HomologyError> {
    check_prime(prime as u64)?;
    let layers = k.faces_by_dimension(FACE_CAP)?;
    let maps = layers.windows(2).map(|w| boundary_matrix(&w[0], &w[1], prime)).collect::<Result<_, _>>()?;
    Ok(maps)
}

pub fn reduced_homology_dims(
    k: &SimplicialComplex,
    prime: u32,
) -> Result<HomologyProfile, HomologyError> {
    check_prime(prime as u64)?;
    let layers = k.faces_by_dimension(FACE_CAP)?;
    if layers.is_empty() {
        return Ok(HomologyProfile::new(BTreeMap::new(), prime));
    }
    // ranks[q] = rank of ∂_q, the map out of layer q+1 (degree q)
    let ranks: Vec<usize> = layers
        .par_windows(2)
        .map(|w| boundary_matrix(&w[0], &w[1], prime).map(|m| m.rank()))
        .collect::<Result<_, _>>()?;
    let mut dims = BTreeMap::new();
    for (layer, faces) in layers.iter().enumerate() {
        let p = layer as i64 - 1;
        // ∂ out of degree -1 is zero
        let rank_out = if layer == 0 { 0 } else { ranks[layer - 1] };
        let rank_in = ranks.get(layer).copied().unwrap_or(0);
        dims.insert(p, faces.len() - rank_out - rank_in);
    }
    Ok(HomologyProfile::new(dims, prime))
}

/// `Σ_{p ≥ -1} (-1)^p · #(p-faces)`; zero for the void complex.
pub fn reduced_euler_characteristic(k: &SimplicialComplex) -> Result<i64, HomologyError> {
    let layers = k.faces_by_dimension(FACE_CAP)?;
    Ok(layers
        .iter()
        .enumerate()
        .map(|(layer, faces)| {
            let p = layer as i64 - 1;
            if p.rem_euclid(2) == 0 {
                faces.len() as i64
            } else {
                -(faces.len() as i64)
            }
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary_complex, omega_complex};
    use crate::DEFAULT_PRIME;

    fn dims(k: &SimplicialComplex) -> Vec<(i64, usize)> {
        reduced_homology_dims(k, DEFAULT_PRIME).unwrap().dims().iter().map(|(&p, &d)| (p, d)).collect()
    }

    #[test]
    fn sphere_and_irrelevant() {
        assert_eq!(dims(&boundary_complex(4).unwrap()), vec![(2, 1)]);
        assert_eq!(dims(&SimplicialComplex::irrelevant()), vec![(-1, 1)]);
        assert_eq!(dims(&SimplicialComplex::void()), vec![]);
        assert_eq!(dims(&omega_complex(5, 2).unwrap()), vec![(1, 1)]);
    }

    #[test]
    fn simplices_are_acyclic() {
        for n in 1..6 {
            assert!(reduced_homology_dims(&SimplicialComplex::simplex(1..=n), 2).unwrap().is_acyclic());
        }
    }

    #[test]
    fn two_points() {
        let k = SimplicialComplex::make_complex(vec![vec![1], vec![2]]).unwrap();
        assert_eq!(dims(&k), vec![(0, 1)]);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(reduced_euler_characteristic(&SimplicialComplex::irrelevant()), Ok(-1));
        assert_eq!(reduced_euler_characteristic(&SimplicialComplex::simplex([1, 2, 3])), Ok(0));
        assert_eq!(reduced_euler_characteristic(&boundary_complex(3).unwrap()), Ok(-1));
        assert_eq!(reduced_euler_characteristic(&SimplicialComplex::void()), Ok(0));
    }

    #[test]
    fn rejects_composite_field() {
        let err = reduced_homology_dims(&SimplicialComplex::irrelevant(), 4).unwrap_err();
        assert_eq!(err, HomologyError::Field(FieldError::NotPrime(4)));
    }

    #[test]
    fn projective_plane_sees_characteristic_two() {
        // six-vertex triangulation of RP^2
        let rp2 = SimplicialComplex::make_complex(vec![
            vec![1, 2, 3], vec![1, 3, 4], vec![1, 4, 5], vec![1, 5, 6], vec![1, 2, 6],
            vec![2, 3, 5], vec![3, 4, 6], vec![2, 4, 5], vec![3, 5, 6], vec![2, 4, 6],
        ])
        .unwrap();
        assert_eq!(dims(&rp2), vec![]);
        let mod2 = reduced_homology_dims(&rp2, 2).unwrap();
        assert_eq!(mod2.dim(1), 1);
        assert_eq!(mod2.dim(2), 1);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = omega_complex(7, 2).unwrap();
        let maps = boundary_matrices(&k, 32003).unwrap();
        for w in maps.windows(2) {
            assert!(w[0].mul(&w[1]).unwrap().is_zero());
        }
    }
}
