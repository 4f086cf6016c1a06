use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::Error;
use crate::polyring::IntPoly;

/// The identities this crate can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `k^m C(G) = k^n sum_H (-1)^m(H) (k-1)^(m-m(H)) F(H)`.
    SubgraphSum,
    /// `C(G*) = k F(G)` for plane `G`.
    DualFlow,
    /// Subgraph sum with `F(H)` replaced by `C(H*)/k`.
    DualSubgraphSum,
    /// The same sum indexed by contractions of `G*`.
    ContractionSum,
    /// `k^m C(G,k) = (-1)^m k^n sum_{balanced t} (1-k)^d(t)` at a fixed `k`.
    DegeneracySum,
    /// `C(G) = (-1)^m C(G*) mod (k-1)^2`.
    Congruence,
    /// Unique 3-colorability of `G` implies 3-colorability of `G*`.
    UniqueThreeColoring,
    /// Dual colorings map `k`-to-1 onto balanced flows.
    DualColoringFlows,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::SubgraphSum,
        Identity::DegeneracySum,
        Identity::DualFlow,
        Identity::DualSubgraphSum,
        Identity::ContractionSum,
        Identity::Congruence,
        Identity::UniqueThreeColoring,
        Identity::DualColoringFlows,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::SubgraphSum => "eq1",
            Identity::DualFlow => "eq4",
            Identity::DualSubgraphSum => "eq5",
            Identity::ContractionSum => "eq6",
            Identity::DegeneracySum => "eq10",
            Identity::Congruence => "cor2",
            Identity::UniqueThreeColoring => "cor3",
            Identity::DualColoringFlows => "corr",
        }
    }

    /// Whether checking the identity needs an embedding.
    pub fn needs_embedding(self) -> bool {
        !matches!(self, Identity::SubgraphSum | Identity::DegeneracySum)
    }

    /// Whether the identity is checked at a single integer `k`.
    pub fn needs_k(self) -> bool {
        matches!(self, Identity::DegeneracySum | Identity::DualColoringFlows)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown identity {s:?}")))
    }
}

/// One side of a checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Poly(IntPoly),
    Int(BigInt),
}

impl Value {
    /// Polynomials in pretty or ascending-coefficient form; integers as is.
    pub fn render(&self, coeffs: bool) -> String {
        match self {
            Value::Poly(p) if coeffs => p.to_coeff_string(),
            Value::Poly(p) => p.to_string(),
            Value::Int(x) => x.to_string(),
        }
    }
}

impl From<IntPoly> for Value {
    fn from(p: IntPoly) -> Self {
        Value::Poly(p)
    }
}

impl From<BigInt> for Value {
    fn from(x: BigInt) -> Self {
        Value::Int(x)
    }
}

/// Outcome of one check. A failure is a verdict, not an error; both sides
/// are kept so a counterexample can be reported exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub identity: Identity,
    pub passed: bool,
    pub lhs: Value,
    pub rhs: Value,
    pub note: Option<String>,
}

impl Verdict {
    pub fn compare(identity: Identity, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        Verdict { identity, passed: lhs == rhs, lhs, rhs, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}
