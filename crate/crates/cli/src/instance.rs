//! JSON instance files.

use std::collections::BTreeSet;

use optcs::games::{
    ExplicitGame, GameInstance, GraphGame, Isg, MatchingGame, Mwvg, MwcGame, Nfg, PathGame, PathPlayers, Scg, Task,
    Wtsg, Wvg,
};
use optcs::graph::{FlowNetwork, PathGraph};
use optcs::{Coalition, Welfare};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WvgDoc {
    pub quota: u64,
    pub weights: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskDoc {
    pub skills: Vec<usize>,
    pub weight: u64,
}

/// Class-specific payload, tagged by `"class"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase", deny_unknown_fields)]
pub enum InstanceDoc {
    Wvg {
        quota: u64,
        weights: Vec<u64>,
    },
    Mwvg {
        components: Vec<WvgDoc>,
    },
    Mwc {
        n: usize,
        mwc: Vec<Vec<usize>>,
    },
    Gg {
        vertices: usize,
        edges: Vec<(usize, usize, i64)>,
    },
    Ggplus {
        vertices: usize,
        edges: Vec<(usize, usize, i64)>,
    },
    Scg {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Epcg {
        vertices: usize,
        #[serde(default)]
        directed: bool,
        s: usize,
        t: usize,
        edges: Vec<(usize, usize)>,
    },
    Vpcg {
        vertices: usize,
        #[serde(default)]
        directed: bool,
        s: usize,
        t: usize,
        edges: Vec<(usize, usize)>,
    },
    Nfg {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vertices: Option<usize>,
        s: usize,
        t: usize,
        arcs: Vec<(usize, usize, u64)>,
    },
    Matching {
        vertices: usize,
        edges: Vec<(usize, usize, u64)>,
    },
    Isg {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Wtsg {
        skills: usize,
        players: Vec<Vec<usize>>,
        tasks: Vec<TaskDoc>,
    },
    Oracle {
        n: usize,
        /// `[members, value]` pairs; coalitions not listed are worth 0.
        values: Vec<(Vec<usize>, Welfare)>,
    },
}

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}

/// Parses an instance document and builds the validated game.
pub fn parse_instance(text: &str) -> Result<GameInstance, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| schema(format!("malformed JSON: {e}")))?;
    let Value::Object(mut map) = value else {
        return Err(schema("instance must be a JSON object"));
    };
    let threshold = match map.remove("threshold") {
        None | Some(Value::Null) => None,
        Some(v) => Some(v.as_i64().ok_or_else(|| schema("\"threshold\" must be an integer"))?),
    };
    let doc: InstanceDoc = serde_json::from_value(Value::Object(map)).map_err(|e| schema(e.to_string()))?;
    let game = build(doc)?;
    match threshold {
        Some(t) => Ok(game.make_threshold(t)?),
        None => Ok(game),
    }
}

/// Canonical document for `game`: members sorted, inferred fields explicit,
/// `"threshold"` last.
pub fn serialize_instance(game: &GameInstance) -> String {
    let (doc, threshold) = match game {
        GameInstance::Threshold(t) => (to_doc(t.inner()), Some(t.threshold())),
        other => (to_doc(other), None),
    };
    let Value::Object(mut map) = serde_json::to_value(doc).expect("documents serialize") else {
        unreachable!("tagged enums serialize to objects")
    };
    if let Some(t) = threshold {
        map.insert("threshold".into(), Value::from(t));
    }
    serde_json::to_string(&Value::Object(map)).expect("values serialize")
}

fn coalition(members: &[usize], what: &str) -> Result<Coalition, CliError> {
    let set: BTreeSet<usize> = members.iter().copied().collect();
    if set.len() != members.len() {
        return Err(schema(format!("{what} {members:?} lists a player twice")));
    }
    Ok(set.into_iter().collect())
}

fn build(doc: InstanceDoc) -> Result<GameInstance, CliError> {
    Ok(match doc {
        InstanceDoc::Wvg { quota, weights } => GameInstance::Wvg(Wvg::new(quota, weights)?),
        InstanceDoc::Mwvg { components } => GameInstance::Mwvg(Mwvg::new(
            components.into_iter().map(|c| Wvg::new(c.quota, c.weights)).collect::<Result<_, _>>()?,
        )?),
        InstanceDoc::Mwc { n, mwc } => {
            let sets = mwc.iter().map(|m| coalition(m, "mwc entry")).collect::<Result<_, _>>()?;
            GameInstance::Mwc(MwcGame::new(n, sets)?)
        }
        InstanceDoc::Gg { vertices, edges } => GameInstance::Graph(GraphGame::new(vertices, edges, false)?),
        InstanceDoc::Ggplus { vertices, edges } => GameInstance::Graph(GraphGame::new(vertices, edges, true)?),
        InstanceDoc::Scg { vertices, edges } => GameInstance::Scg(Scg::new(vertices, edges)?),
        InstanceDoc::Epcg { vertices, directed, s, t, edges } => {
            let g = PathGraph { vertices, edges, directed };
            GameInstance::Path(PathGame::new(g, s, t, PathPlayers::Edges)?)
        }
        InstanceDoc::Vpcg { vertices, directed, s, t, edges } => {
            let g = PathGraph { vertices, edges, directed };
            GameInstance::Path(PathGame::new(g, s, t, PathPlayers::Vertices)?)
        }
        InstanceDoc::Nfg { vertices, s, t, arcs } => {
            let inferred = arcs.iter().flat_map(|a| [a.0, a.1]).chain([s, t]).max().map_or(0, |m| m + 1);
            let net = FlowNetwork::with_arcs(vertices.unwrap_or(inferred), s, t, arcs)?;
            GameInstance::Nfg(Nfg::new(net))
        }
        InstanceDoc::Matching { vertices, edges } => GameInstance::Matching(MatchingGame::new(vertices, edges)?),
        InstanceDoc::Isg { vertices, edges } => GameInstance::Isg(Isg::new(vertices, edges)?),
        InstanceDoc::Wtsg { skills, players, tasks } => {
            let players = players.iter().map(|p| p.iter().copied().collect()).collect();
            let tasks = tasks.into_iter().map(|t| Task { skills: t.skills.into_iter().collect(), weight: t.weight }).collect();
            GameInstance::Wtsg(Wtsg::new(skills, players, tasks)?)
        }
        InstanceDoc::Oracle { n, values } => {
            if n > optcs::games::EXPLICIT_CAP {
                return Err(optcs::Error::TooLarge { what: "explicit value table players", size: n, cap: optcs::games::EXPLICIT_CAP }.into());
            }
            let mut table: Vec<Option<Welfare>> = vec![None; 1 << n];
            for (members, value) in &values {
                let c = coalition(members, "oracle entry")?;
                if let Some(p) = c.max().filter(|&p| p >= n) {
                    return Err(optcs::Error::PlayerOutOfRange { player: p, n }.into());
                }
                let slot = &mut table[c.to_mask().expect("n <= 20") as usize];
                if slot.replace(*value).is_some() {
                    return Err(schema(format!("oracle entry {members:?} appears twice")));
                }
            }
            let table = table.into_iter().map(|v| v.unwrap_or(0)).collect();
            GameInstance::Explicit(ExplicitGame::new(n, table)?)
        }
    })
}

fn to_doc(game: &GameInstance) -> InstanceDoc {
    match game {
        GameInstance::Wvg(g) => InstanceDoc::Wvg { quota: g.quota(), weights: g.weights().to_vec() },
        GameInstance::Mwvg(g) => InstanceDoc::Mwvg {
            components: g.components().iter().map(|c| WvgDoc { quota: c.quota(), weights: c.weights().to_vec() }).collect(),
        },
        GameInstance::Mwc(g) => {
            InstanceDoc::Mwc { n: g.num_players(), mwc: g.minimal_winning().iter().map(|c| c.to_vec()).collect() }
        }
        GameInstance::Graph(g) if g.is_positive() => {
            InstanceDoc::Ggplus { vertices: g.vertices(), edges: g.edges().to_vec() }
        }
        GameInstance::Graph(g) => InstanceDoc::Gg { vertices: g.vertices(), edges: g.edges().to_vec() },
        GameInstance::Scg(g) => InstanceDoc::Scg { vertices: g.vertices(), edges: g.edges().to_vec() },
        GameInstance::Path(g) => {
            let (vertices, directed, edges) = (g.graph().vertices, g.graph().directed, g.graph().edges.clone());
            let (s, t) = (g.source(), g.sink());
            match g.players() {
                PathPlayers::Edges => InstanceDoc::Epcg { vertices, directed, s, t, edges },
                PathPlayers::Vertices => InstanceDoc::Vpcg { vertices, directed, s, t, edges },
            }
        }
        GameInstance::Nfg(g) => {
            let net = g.network();
            InstanceDoc::Nfg { vertices: Some(net.vertices()), s: net.source(), t: net.sink(), arcs: net.arcs().to_vec() }
        }
        GameInstance::Matching(g) => InstanceDoc::Matching { vertices: g.vertices(), edges: g.edges().to_vec() },
        GameInstance::Isg(g) => InstanceDoc::Isg { vertices: g.vertices(), edges: g.edges().to_vec() },
        GameInstance::Wtsg(g) => InstanceDoc::Wtsg {
            skills: g.num_skills(),
            players: g.player_skills().iter().map(|s| s.iter().copied().collect()).collect(),
            tasks: g.tasks().iter().map(|t| TaskDoc { skills: t.skills.iter().copied().collect(), weight: t.weight }).collect(),
        },
        GameInstance::Explicit(g) => InstanceDoc::Oracle {
            n: g.num_players(),
            values: g
                .values()
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v != 0)
                .map(|(m, &v)| (Coalition::from_mask(m as u64).to_vec(), v))
                .collect(),
        },
        GameInstance::Threshold(t) => to_doc(t.inner()),
    }
}

/// Parses a JSON list of player lists, e.g. `[[0,2],[1,3]]`.
pub fn parse_lists(text: &str, what: &str) -> Result<Vec<Vec<usize>>, CliError> {
    serde_json::from_str(text).map_err(|e| schema(format!("{what}: expected a list of player lists: {e}")))
}

/// Parses a JSON list of players, e.g. `[0,2]`.
pub fn parse_members(text: &str, what: &str) -> Result<Coalition, CliError> {
    let members: Vec<usize> =
        serde_json::from_str(text).map_err(|e| schema(format!("{what}: expected a list of players: {e}")))?;
    coalition(&members, what)
}
