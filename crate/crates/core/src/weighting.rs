//! Edge weightings `σ` for clique graphs and rotunda graphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// A weighting of intersection sets. `Rank` only makes sense for matroids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Weighting {
    #[default]
    Rank,
    Cardinality,
    Table(BTreeMap<ElementSet, u64>),
}

impl Weighting {
    pub fn name(&self) -> &'static str {
        match self {
            Weighting::Rank => "rank",
            Weighting::Cardinality => "cardinality",
            Weighting::Table(_) => "table",
        }
    }

    /// `σ(x)` in a matroid.
    pub fn weigh(&self, m: &Matroid, x: ElementSet) -> Result<u64> {
        match self {
            Weighting::Rank => Ok(m.rank(x) as u64),
            _ => self.weigh_set(x),
        }
    }

    /// `σ(x)` for a plain vertex or element set; `Rank` is rejected.
    pub fn weigh_set(&self, x: ElementSet) -> Result<u64> {
        match self {
            Weighting::Rank => Err(Error::IllegitimateWeighting(
                "the rank weighting needs a matroid".into(),
            )),
            Weighting::Cardinality => Ok(x.len() as u64),
            Weighting::Table(t) => t
                .get(&x)
                .copied()
                .ok_or_else(|| Error::IllegitimateWeighting(format!("no table entry for {x}"))),
        }
    }

    /// Checks `σ(∅) = 0` and strict monotonicity on nested members of
    /// `domain` (the empty set is added to it).
    pub fn check_legitimate(&self, domain: &[ElementSet], weigh: impl Fn(ElementSet) -> Result<u64>) -> Result<()> {
        let zero = weigh(ElementSet::EMPTY)?;
        if zero != 0 {
            return Err(Error::IllegitimateWeighting(format!("σ(∅) = {zero}")));
        }
        let mut sets: Vec<ElementSet> = domain.to_vec();
        sets.push(ElementSet::EMPTY);
        sets.sort();
        sets.dedup();
        let values = sets.iter().map(|&s| weigh(s)).collect::<Result<Vec<_>>>()?;
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                if a.is_proper_subset(b) && values[i] >= values[j] {
                    return Err(Error::IllegitimateWeighting(format!(
                        "σ({a}) = {} is not below σ({b}) = {}",
                        values[i], values[j]
                    )));
                }
            }
        }
        Ok(())
    }
}
