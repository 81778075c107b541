use std::cell::OnceCell;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{self, Toughness};
use crate::spectra::{self, MatrixKind, PrincipalEigenvector, SpectralSummary};

/// Lazily computed invariants of one graph, shared by all checks on it.
pub struct GraphContext<'a> {
    g: &'a Graph,
    budget: Budget,
    adjacency: OnceCell<Result<Vec<f64>>>,
    summary: OnceCell<Result<SpectralSummary>>,
    laplacian: OnceCell<Result<Vec<f64>>>,
    omega: OnceCell<Result<usize>>,
    alpha: OnceCell<Result<usize>>,
    chi: OnceCell<Result<usize>>,
    toughness: OnceCell<Result<Toughness>>,
    perron: OnceCell<Result<PrincipalEigenvector>>,
    planar: OnceCell<bool>,
    independent_sets: OnceCell<Result<Vec<VertexSet>>>,
}

fn get<T: Clone>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    cell.get_or_init(f).clone()
}

impl<'a> GraphContext<'a> {
    pub fn new(g: &'a Graph, budget: Budget) -> GraphContext<'a> {
        GraphContext {
            g,
            budget,
            adjacency: OnceCell::new(),
            summary: OnceCell::new(),
            laplacian: OnceCell::new(),
            omega: OnceCell::new(),
            alpha: OnceCell::new(),
            chi: OnceCell::new(),
            toughness: OnceCell::new(),
            perron: OnceCell::new(),
            planar: OnceCell::new(),
            independent_sets: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'a Graph {
        self.g
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    /// Adjacency eigenvalues, non-increasing.
    pub fn adjacency(&self) -> Result<Vec<f64>> {
        get(&self.adjacency, || {
            Ok(spectra::eigenvalues(self.g, MatrixKind::Adjacency)?.values)
        })
    }

    pub fn summary(&self) -> Result<SpectralSummary> {
        get(&self.summary, || {
            Ok(spectra::summary_from_spectrum(self.g, &self.adjacency()?))
        })
    }

    /// Laplacian eigenvalues, non-increasing.
    pub fn laplacian(&self) -> Result<Vec<f64>> {
        get(&self.laplacian, || {
            Ok(spectra::eigenvalues(self.g, MatrixKind::Laplacian)?.values)
        })
    }

    pub fn omega(&self) -> Result<usize> {
        get(&self.omega, || invariants::clique_number(self.g, self.budget))
    }

    pub fn alpha(&self) -> Result<usize> {
        get(&self.alpha, || invariants::independence_number(self.g, self.budget))
    }

    pub fn chi(&self) -> Result<usize> {
        get(&self.chi, || invariants::chromatic_number(self.g, self.budget))
    }

    pub fn toughness(&self) -> Result<Toughness> {
        get(&self.toughness, || invariants::toughness(self.g, self.budget))
    }

    pub fn perron(&self) -> Result<PrincipalEigenvector> {
        get(&self.perron, || spectra::principal_eigenvector(self.g))
    }

    pub fn is_planar(&self) -> bool {
        *self.planar.get_or_init(|| self.g.is_planar())
    }

    /// All maximal independent sets.
    pub fn independent_sets(&self) -> Result<Vec<VertexSet>> {
        get(&self.independent_sets, || {
            invariants::maximal_independent_sets(self.g, self.budget)
        })
    }
}
