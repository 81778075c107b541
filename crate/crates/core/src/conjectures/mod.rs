//! Registry of conjecture predicates. Each id evaluates one inequality on a
//! single graph and reports the slack `RHS - LHS` (or `LHS - RHS` for lower
//! bounds), so that positive slack always means the statement holds with room.

mod catalog;
mod checks;
mod context;
pub mod diagnostics;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use catalog::{list, CatalogEntry};
pub use context::GraphContext;

/// Default predicate tolerance: a statement holds when `slack >= -DEFAULT_TOL`.
pub const DEFAULT_TOL: f64 = 1e-6;

macro_rules! ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Stable conjecture identifiers.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum ConjectureId {
            $($variant),*
        }

        impl ConjectureId {
            pub const ALL: &'static [ConjectureId] = &[$(ConjectureId::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ConjectureId::$variant => $name),*
                }
            }
        }
    };
}

ids! {
    C01HongExt => "C01_HongExt",
    C01bHongExtComponents => "C01b_HongExtComponents",
    C02WilfExt => "C02_WilfExt",
    C03BollobasNikiforov => "C03_BollobasNikiforov",
    C04Elw => "C04_ELW",
    C05PlanarMax => "C05_PlanarMax",
    C07ZhaiLinShu => "C07_ZhaiLinShu",
    C08HaemersToughness => "C08_HaemersToughness",
    C14Saturation => "C14_Saturation",
    C15Brouwer => "C15_Brouwer",
    C16FullBrouwer => "C16_FullBrouwer",
    C17SpectralGapKite => "C17_SpectralGapKite",
    C18SpectralGapComet => "C18_SpectralGapComet",
    C19EnergyIndependence => "C19_EnergyIndependence",
    C19bEnergyInertia => "C19b_EnergyInertia",
    C20AkbariH => "C20_AkbariH",
    C21Brandt => "C21_Brandt",
    C22Powers => "C22_Powers",
    C23Mohar => "C23_Mohar",
    C24GregoryEigenvector => "C24_GregoryEigenvector",
    C25Cioaba => "C25_Cioaba",
    C26GuiduliPtr => "C26_Guiduli_Ptr",
    C27BiluLinial => "C27_BiluLinial",
    C28GregorySigned => "C28_Gregory_Signed",
}

impl ConjectureId {
    /// Strict inequalities hold only when `slack > tol`.
    pub fn is_strict(self) -> bool {
        matches!(self, ConjectureId::C28GregorySigned)
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for ConjectureId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Parses an id, case-insensitively, either in full or by its number
/// (`C01`, `C19b`). `C22_Powers_i3` and `C22_Powers_i4` are accepted and
/// also return the Powers index they select.
pub fn parse_id(text: &str) -> Result<(ConjectureId, Option<usize>)> {
    let t = text.trim();
    for (alias, i) in [("C22_Powers_i3", 3), ("C22_Powers_i4", 4)] {
        if t.eq_ignore_ascii_case(alias) {
            return Ok((ConjectureId::C22Powers, Some(i)));
        }
    }
    ConjectureId::ALL
        .iter()
        .find(|id| {
            let name = id.as_str();
            let number = name.split('_').next().unwrap_or(name);
            name.eq_ignore_ascii_case(t) || number.eq_ignore_ascii_case(t)
        })
        .map(|&id| (id, None))
        .ok_or_else(|| Error::InvalidParameters(format!("unknown conjecture id `{t}`")))
}

impl FromStr for ConjectureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConjectureId> {
        parse_id(s).map(|(id, _)| id)
    }
}

/// Per-id parameters shared by a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Params {
    pub tol: f64,
    /// Index `i` of the Powers bound `lambda_i <= floor(n / i)`.
    pub powers_i: usize,
    /// `k` in the Zhai–Lin–Shu threshold.
    pub zls_k: usize,
    /// `r` for K_{r+1}-saturated graphs.
    pub saturation_r: usize,
    /// Property P_{t,r}: `e(H) <= t |V(H)| + r` for subgraphs with at least t vertices.
    pub guiduli_t: usize,
    pub guiduli_r: f64,
    /// Use `l = n+` instead of `min(n+, omega)` in C04.
    pub elw_ell_n_plus: bool,
    /// Evaluate C20 on singular graphs too.
    pub force_applicability: bool,
    #[serde(skip)]
    pub budget: Budget,
}

impl Default for Params {
    fn default() -> Params {
        Params {
            tol: DEFAULT_TOL,
            powers_i: 3,
            zls_k: 2,
            saturation_r: 2,
            guiduli_t: 1,
            guiduli_r: 0.0,
            elw_ell_n_plus: false,
            force_applicability: false,
            budget: Budget::default(),
        }
    }
}

/// Value of the quantified variable at which the slack is smallest.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantifier {
    /// Index `k` (Brouwer sums) or `l` (number of eigenvalues).
    K(usize),
    VertexSet(VertexSet),
    /// Signed graph line: graph6, `|`, one bit per edge.
    Signature(String),
    CycleLength(usize),
}

/// Both sides of the evaluated inequality.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arg: Option<Quantifier>,
    /// Equality-case remarks that do not change the verdict.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Evaluation {
    /// `lhs <= rhs`.
    pub fn upper(lhs: f64, rhs: f64) -> Evaluation {
        Evaluation {
            lhs,
            rhs,
            slack: rhs - lhs,
            arg: None,
            note: None,
        }
    }

    /// `lhs >= rhs`.
    pub fn lower(lhs: f64, rhs: f64) -> Evaluation {
        Evaluation {
            lhs,
            rhs,
            slack: lhs - rhs,
            arg: None,
            note: None,
        }
    }

    pub fn with_arg(mut self, arg: Quantifier) -> Evaluation {
        self.arg = Some(arg);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Evaluation {
        self.note = Some(note.into());
        self
    }
}

/// Enough to reproduce a violation: the graph and the quantifier value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arg: Option<Quantifier>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Verdict {
    Holds(Evaluation),
    Violated {
        #[serde(flatten)]
        evaluation: Evaluation,
        witness: Witness,
    },
    NotApplicable {
        reason: String,
    },
}

impl Verdict {
    pub fn slack(&self) -> Option<f64> {
        match self {
            Verdict::Holds(e) | Verdict::Violated { evaluation: e, .. } => Some(e.slack),
            Verdict::NotApplicable { .. } => None,
        }
    }

    pub fn evaluation(&self) -> Option<&Evaluation> {
        match self {
            Verdict::Holds(e) | Verdict::Violated { evaluation: e, .. } => Some(e),
            Verdict::NotApplicable { .. } => None,
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated { .. })
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, Verdict::NotApplicable { .. })
    }

    fn na(reason: impl Into<String>) -> Verdict {
        Verdict::NotApplicable {
            reason: reason.into(),
        }
    }
}

/// Evaluates `id` on `g`. Errors from the underlying computations (budget
/// exhaustion, order limits) become `NotApplicable` with the error text.
pub fn check(id: ConjectureId, g: &Graph, params: &Params) -> Verdict {
    check_with(id, &GraphContext::new(g, params.budget), params)
}

/// [`check`] for several ids, sharing cached invariants.
pub fn check_all(ids: &[ConjectureId], g: &Graph, params: &Params) -> Vec<Verdict> {
    let ctx = GraphContext::new(g, params.budget);
    ids.iter().map(|&id| check_with(id, &ctx, params)).collect()
}

pub fn check_with(id: ConjectureId, ctx: &GraphContext, params: &Params) -> Verdict {
    let evaluation = match checks::evaluate(id, ctx, params) {
        Ok(Ok(e)) => e,
        Ok(Err(reason)) => return Verdict::na(reason),
        Err(e @ Error::BudgetExceeded { .. }) => return Verdict::na(format!("budget: {e}")),
        Err(e) => return Verdict::na(e.to_string()),
    };
    let holds = if id.is_strict() {
        evaluation.slack > params.tol
    } else {
        evaluation.slack >= -params.tol
    };
    if holds {
        Verdict::Holds(evaluation)
    } else {
        let witness = Witness {
            graph6: ctx.graph().to_graph6(),
            arg: evaluation.arg.clone(),
        };
        Verdict::Violated {
            evaluation,
            witness,
        }
    }
}

#[cfg(test)]
mod tests;
