use std::collections::BTreeSet;

use crate::error::{invariant, Result};
use crate::model::{Coalition, Welfare};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub skills: BTreeSet<usize>,
    pub weight: u64,
}

/// Weighted task skill game: a coalition's value is the total weight of the
/// tasks whose required skills are all held by some member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wtsg {
    num_skills: usize,
    player_skills: Vec<BTreeSet<usize>>,
    tasks: Vec<Task>,
}

impl Wtsg {
    /// Every task must require at least one skill; otherwise the empty
    /// coalition could perform it.
    pub fn new(num_skills: usize, player_skills: Vec<BTreeSet<usize>>, tasks: Vec<Task>) -> Result<Self> {
        for (i, s) in player_skills.iter().enumerate() {
            if let Some(&k) = s.iter().find(|&&k| k >= num_skills) {
                return Err(invariant(format!("player {i} has unknown skill {k}")));
            }
        }
        for (j, t) in tasks.iter().enumerate() {
            if t.skills.is_empty() {
                return Err(invariant(format!("task {j} requires no skills")));
            }
            if let Some(&k) = t.skills.iter().find(|&&k| k >= num_skills) {
                return Err(invariant(format!("task {j} requires unknown skill {k}")));
            }
        }
        Ok(Self { num_skills, player_skills, tasks })
    }

    pub fn num_skills(&self) -> usize {
        self.num_skills
    }

    pub fn num_players(&self) -> usize {
        self.player_skills.len()
    }

    pub fn player_skills(&self) -> &[BTreeSet<usize>] {
        &self.player_skills
    }

    pub fn tasks(&self) -> &[Task] {
        &self.tasks
    }

    /// `S(C)`, the union of the members' skills.
    pub fn skills_of(&self, coalition: &Coalition) -> BTreeSet<usize> {
        coalition.members().flat_map(|p| self.player_skills[p].iter().copied()).collect()
    }

    /// Indices of the tasks `C` can perform, `T(C)`.
    pub fn performable(&self, coalition: &Coalition) -> Vec<usize> {
        let have = self.skills_of(coalition);
        (0..self.tasks.len()).filter(|&j| self.tasks[j].skills.is_subset(&have)).collect()
    }

    /// Task value `u(T(C))`: the summed weight of the performable tasks.
    pub fn value(&self, coalition: &Coalition) -> Welfare {
        self.performable(coalition).iter().map(|&j| self.tasks[j].weight as Welfare).sum()
    }
}
