//! Compact game representations and their characteristic functions.

mod explicit;
mod network;
mod skill;
mod voting;

use std::collections::HashMap;
use std::hash::Hash;

pub use explicit::{ExplicitGame, EXPLICIT_CAP};
pub use network::{GraphGame, Isg, MatchingGame, Nfg, PathGame, PathPlayers, Scg};
pub use skill::{Task, Wtsg};
pub use voting::{Mwvg, MwcGame, Wvg};

use crate::error::{invariant, Error, Result};
use crate::model::{Coalition, ValuationOracle, Welfare};
use crate::typed_dp::TypePartition;

/// A coalitional game in one of the supported representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GameInstance {
    Wvg(Wvg),
    Mwvg(Mwvg),
    Mwc(MwcGame),
    Graph(GraphGame),
    Scg(Scg),
    Path(PathGame),
    Nfg(Nfg),
    Matching(MatchingGame),
    Isg(Isg),
    Wtsg(Wtsg),
    Explicit(ExplicitGame),
    Threshold(Threshold),
}

/// `v^t(C) = 1` iff `v(C) >= t`, over a monotone inner game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Threshold {
    inner: Box<GameInstance>,
    threshold: Welfare,
}

impl Threshold {
    pub fn inner(&self) -> &GameInstance {
        &self.inner
    }

    pub fn threshold(&self) -> Welfare {
        self.threshold
    }

    /// True when even the grand coalition misses the threshold, i.e. the
    /// wrapper is the zero game.
    pub fn is_degenerate(&self) -> Result<bool> {
        let n = self.inner.num_players();
        Ok(self.inner.evaluate(&Coalition::grand(n))? < self.threshold)
    }
}

impl GameInstance {
    /// Short class tag, as used in instance files.
    pub fn class_name(&self) -> &'static str {
        match self {
            GameInstance::Wvg(_) => "wvg",
            GameInstance::Mwvg(_) => "mwvg",
            GameInstance::Mwc(_) => "mwc",
            GameInstance::Graph(g) if g.is_positive() => "ggplus",
            GameInstance::Graph(_) => "gg",
            GameInstance::Scg(_) => "scg",
            GameInstance::Path(p) if p.players() == PathPlayers::Edges => "epcg",
            GameInstance::Path(_) => "vpcg",
            GameInstance::Nfg(_) => "nfg",
            GameInstance::Matching(_) => "matching",
            GameInstance::Isg(_) => "isg",
            GameInstance::Wtsg(_) => "wtsg",
            GameInstance::Explicit(_) => "oracle",
            GameInstance::Threshold(t) => t.inner.class_name(),
        }
    }

    pub fn num_players(&self) -> usize {
        match self {
            GameInstance::Wvg(g) => g.num_players(),
            GameInstance::Mwvg(g) => g.num_players(),
            GameInstance::Mwc(g) => g.num_players(),
            GameInstance::Graph(g) => g.vertices(),
            GameInstance::Scg(g) => g.edges().len(),
            GameInstance::Path(g) => g.num_players(),
            GameInstance::Nfg(g) => g.num_players(),
            GameInstance::Matching(g) => g.vertices(),
            GameInstance::Isg(g) => g.vertices(),
            GameInstance::Wtsg(g) => g.num_players(),
            GameInstance::Explicit(g) => g.num_players(),
            GameInstance::Threshold(t) => t.inner.num_players(),
        }
    }

    /// Characteristic-function value of `coalition`.
    pub fn evaluate(&self, coalition: &Coalition) -> Result<Welfare> {
        let n = self.num_players();
        if let Some(p) = coalition.max().filter(|&p| p >= n) {
            return Err(Error::PlayerOutOfRange { player: p, n });
        }
        Ok(match self {
            GameInstance::Wvg(g) => g.wins(coalition) as Welfare,
            GameInstance::Mwvg(g) => g.wins(coalition) as Welfare,
            GameInstance::Mwc(g) => g.wins(coalition) as Welfare,
            GameInstance::Graph(g) => g.value(coalition),
            GameInstance::Scg(g) => g.wins(coalition) as Welfare,
            GameInstance::Path(g) => g.wins(coalition) as Welfare,
            GameInstance::Nfg(g) => g.value(coalition),
            GameInstance::Matching(g) => g.value(coalition)?,
            GameInstance::Isg(g) => g.value(coalition)?,
            GameInstance::Wtsg(g) => g.value(coalition),
            GameInstance::Explicit(g) => g.value(coalition),
            GameInstance::Threshold(t) => (t.inner.evaluate(coalition)? >= t.threshold) as Welfare,
        })
    }

    /// Whether the class guarantees `v(C) <= v(D)` for `C ⊆ D`.
    pub fn is_monotone(&self) -> bool {
        match self {
            GameInstance::Graph(g) => !g.has_negative_edge(),
            GameInstance::Explicit(g) => g.monotonicity_violation().is_none(),
            _ => true,
        }
    }

    /// Wraps the game into its threshold version.
    pub fn make_threshold(self, threshold: Welfare) -> Result<GameInstance> {
        if threshold < 1 {
            return Err(invariant(format!("threshold must be positive, got {threshold}")));
        }
        match &self {
            GameInstance::Graph(g) if g.has_negative_edge() => {
                return Err(Error::NonMonotoneInner("graph game has negative edge weights".into()))
            }
            GameInstance::Explicit(g) => {
                if let Some((c, i)) = g.monotonicity_violation() {
                    return Err(Error::NonMonotoneInner(format!("v({c}) > v({c} + {i})")));
                }
            }
            _ => {}
        }
        Ok(GameInstance::Threshold(Threshold { inner: Box::new(self), threshold }))
    }

    /// Type-partition read off the representation: equal weights (WVG),
    /// equal weight vectors (MWVG) or equal skill sets (WTSG). Classes are
    /// ordered by least member.
    pub fn extract_type_partition(&self) -> Result<TypePartition> {
        let classes = match self {
            GameInstance::Wvg(g) => group_by((0..g.num_players()).map(|p| g.weights()[p])),
            GameInstance::Mwvg(g) => group_by((0..g.num_players()).map(|p| g.weight_vector(p))),
            GameInstance::Wtsg(g) => group_by(g.player_skills().iter().cloned()),
            // thresholding v preserves every equality v(C+i) = v(C+j)
            GameInstance::Threshold(t) => return t.inner.extract_type_partition(),
            other => return Err(Error::NoSyntacticTypes(other.class_name())),
        };
        TypePartition::from_lists(self.num_players(), classes)
    }
}

fn group_by<K: Eq + Hash>(keys: impl Iterator<Item = K>) -> Vec<Vec<usize>> {
    let mut slot: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (p, key) in keys.enumerate() {
        let i = *slot.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[i].push(p);
    }
    classes
}

impl ValuationOracle for GameInstance {
    fn num_players(&self) -> usize {
        GameInstance::num_players(self)
    }

    fn value(&self, coalition: &Coalition) -> Result<Welfare> {
        self.evaluate(coalition)
    }
}
