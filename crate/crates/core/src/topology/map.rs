use super::FiniteTopology;
use crate::error::{Error, Result};
use crate::setcore::Subset;

/// A total function between the point sets of two finite spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap {
    domain: FiniteTopology,
    codomain: FiniteTopology,
    graph: Vec<usize>,
}

impl SpaceMap {
    pub fn new(
        domain: FiniteTopology,
        codomain: FiniteTopology,
        graph: Vec<usize>,
    ) -> Result<Self> {
        if graph.len() != domain.ground_size() {
            return Err(Error::InvalidMap(format!(
                "graph has {} entries for {} domain points",
                graph.len(),
                domain.ground_size()
            )));
        }
        if let Some(&bad) = graph.iter().find(|&&y| y >= codomain.ground_size()) {
            return Err(Error::InvalidMap(format!(
                "image point {bad} outside the codomain"
            )));
        }
        Ok(Self {
            domain,
            codomain,
            graph,
        })
    }

    pub fn identity(t: &FiniteTopology) -> Self {
        Self {
            domain: t.clone(),
            codomain: t.clone(),
            graph: (0..t.ground_size()).collect(),
        }
    }

    pub fn domain(&self) -> &FiniteTopology {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteTopology {
        &self.codomain
    }

    pub fn graph(&self) -> &[usize] {
        &self.graph
    }

    pub fn apply(&self, x: usize) -> usize {
        self.graph[x]
    }

    pub fn image_of(&self, a: Subset) -> Subset {
        let bits = a.points().fold(0u16, |acc, x| acc | (1 << self.graph[x]));
        Subset::from_raw(self.codomain.ground_size(), bits)
    }

    pub fn preimage_of(&self, b: Subset) -> Subset {
        let bits = self
            .graph
            .iter()
            .enumerate()
            .filter(|&(_, &y)| b.contains(y))
            .fold(0u16, |acc, (x, _)| acc | (1 << x));
        Subset::from_raw(self.domain.ground_size(), bits)
    }

    pub fn image(&self) -> Subset {
        self.image_of(self.domain.whole())
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.graph.len()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.graph.len() == self.codomain.ground_size()
    }

    /// Preimage of every codomain open is open.
    pub fn is_continuous(&self) -> bool {
        self.codomain
            .opens()
            .iter()
            .all(|v| self.domain.is_open(self.preimage_of(v)))
    }

    /// The inverse on the image, with the subspace topology there, is continuous:
    /// every `f(U)` with `U` open is the trace on the image of a codomain open.
    pub fn is_inversely_continuous(&self) -> Result<bool> {
        if !self.is_injective() {
            return Err(Error::NotInjective);
        }
        let image = self.image();
        let traces = self.codomain.opens().map(|v| v.intersection(image));
        Ok(self
            .domain
            .opens()
            .iter()
            .all(|u| traces.contains(self.image_of(u))))
    }

    /// Continuous, injective and inversely continuous.
    pub fn is_embedding(&self) -> bool {
        self.is_continuous() && self.is_inversely_continuous().unwrap_or(false)
    }

    pub fn is_homeomorphism(&self) -> bool {
        self.is_bijective() && self.is_embedding()
    }
}
