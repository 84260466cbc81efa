use std::collections::BTreeSet;
use std::fmt;

use crate::geometry::BetaParam;
use crate::graph::Edge;

/// The proximity graph a constraint set was computed for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cmst,
    Gabriel,
    Beta(BetaParam),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cmst => write!(f, "cmst"),
            Family::Gabriel => write!(f, "gabriel"),
            Family::Beta(b) => write!(f, "beta({b})"),
        }
    }
}

/// A set of input edges that must be forced into the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSet {
    family: Family,
    edges: BTreeSet<Edge>,
}

impl ConstraintSet {
    pub fn new<I: IntoIterator<Item = Edge>>(family: Family, edges: I) -> Self {
        ConstraintSet { family, edges: edges.into_iter().collect() }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }
}
