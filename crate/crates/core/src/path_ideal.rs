//! Path ideals as squarefree monomial ideals and their Taylor subcomplexes.
//!
//! A squarefree monomial is identified with its support [`VertexSet`].
//! Taylor-simplex vertices are generator positions, labelled from 1 in the
//! sorted generator order.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::simplicial::{Face, SimplicialComplex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("multidegree {m} does not divide the lcm {lcm}")]
    NotInLcm { m: VertexSet, lcm: VertexSet },
    #[error("generators must all have degree {expected}, found {found}")]
    MixedDegree { expected: usize, found: usize },
}

/// An ideal minimally generated by squarefree monomials of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ambient_n: usize,
    degree: usize,
    generators: Vec<VertexSet>,
}

impl MonomialIdeal {
    pub fn new<I: IntoIterator<Item = VertexSet>>(
        ambient_n: usize,
        degree: usize,
        generators: I,
    ) -> Result<Self, IdealError> {
        let generators: Vec<VertexSet> = generators.into_iter().sorted().dedup().collect();
        if let Some(bad) = generators.iter().find(|g| g.len() != degree) {
            return Err(IdealError::MixedDegree { expected: degree, found: bad.len() });
        }
        Ok(MonomialIdeal { ambient_n, degree, generators })
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Support of the lcm of all generators.
    pub fn lcm(&self) -> VertexSet {
        self.generators.iter().fold(VertexSet::EMPTY, |acc, g| acc.union(*g))
    }

    /// Taylor labels (1-based) of the generators dividing `m`.
    pub fn generators_inside(&self, m: VertexSet) -> impl Iterator<Item = u32> + '_ {
        self.generators.iter().enumerate().filter(move |(_, g)| g.is_subset(m)).map(|(i, _)| i as u32 + 1)
    }

    /// lcm of a Taylor face given by 1-based generator labels.
    pub fn face_lcm(&self, face: &Face) -> VertexSet {
        face.vertices().iter().fold(VertexSet::EMPTY, |acc, &i| acc.union(self.generators[i as usize - 1]))
    }

    /// Whether `m` is the lcm of the generators it contains.
    pub fn is_lcm_closed(&self, m: VertexSet) -> bool {
        self.generators.iter().filter(|g| g.is_subset(m)).fold(VertexSet::EMPTY, |acc, g| acc.union(*g)) == m
    }

    /// The Taylor subcomplex of faces whose lcm strictly divides `m`.
    ///
    /// Built as the union over `x_i | m` of the full simplices on the
    /// generators dividing `m / x_i`; non-maximal members are dropped.
    pub fn taylor_strict_sub(&self, m: VertexSet) -> Result<SimplicialComplex, IdealError> {
        let lcm = self.lcm();
        if !m.is_subset(lcm) {
            return Err(IdealError::NotInLcm { m, lcm });
        }
        let candidates = m.iter().map(|i| Face::new(self.generators_inside(m.without(i))));
        let taylor_vertices = self.generators_inside(m).collect::<Vec<_>>();
        Ok(SimplicialComplex::from_facets(candidates).with_universe(taylor_vertices))
    }

    /// The full Taylor simplex on all generators.
    pub fn taylor_simplex(&self) -> SimplicialComplex {
        SimplicialComplex::simplex(1..=self.generators.len() as u32)
    }
}

pub fn path_ideal(g: &Graph, t: usize) -> MonomialIdeal {
    let n = g.vertices().iter().last().unwrap_or(0) as usize;
    MonomialIdeal::new(n, t, g.enumerate_t_paths(t)).expect("t-paths have t vertices")
}
