//! JSON schemas for instances and plans, with conversions to and from the
//! core types. Deserialization reports malformed structure via serde;
//! semantic validation (degrees, list sizes, properness) happens in the
//! conversion to [`Instance`].

use anyhow::Context;
use recolor_core::coloring::{Color, Coloring, Instance, ListAssignment, Plan, Step};
use recolor_core::graph::Graph;
use serde::{Deserialize, Serialize};

/// An undirected simple graph: vertex count and edge list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

/// A recoloring problem: graph, color lists, and the two endpoint colorings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub graph: GraphFile,
    pub lists: Vec<Vec<Color>>,
    pub alpha: Vec<Color>,
    pub beta: Vec<Color>,
}

impl InstanceFile {
    pub fn from_instance(instance: &Instance) -> Self {
        let g = instance.graph();
        InstanceFile {
            graph: GraphFile {
                n: g.n(),
                edges: g.edges().to_vec(),
            },
            lists: (0..g.n()).map(|v| instance.lists().list(v).to_vec()).collect(),
            alpha: instance.alpha().as_slice().to_vec(),
            beta: instance.beta().as_slice().to_vec(),
        }
    }

    pub fn into_instance(self) -> anyhow::Result<Instance> {
        let graph = Graph::new(self.graph.n, &self.graph.edges).context("invalid graph")?;
        Instance::new(
            graph,
            ListAssignment::new(self.lists),
            Coloring::new(self.alpha),
            Coloring::new(self.beta),
        )
        .context("invalid instance")
    }
}

/// One recoloring move.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct StepFile {
    pub v: usize,
    pub to: Color,
}

/// A two-sided plan: `forward` replays from the start coloring, `backward`
/// from the target; both must meet in the same coloring.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanFile {
    pub forward: Vec<StepFile>,
    pub backward: Vec<StepFile>,
}

impl PlanFile {
    pub fn from_plan(plan: &Plan) -> Self {
        let convert = |steps: &[Step]| {
            steps
                .iter()
                .map(|s| StepFile {
                    v: s.vertex,
                    to: s.to,
                })
                .collect()
        };
        PlanFile {
            forward: convert(&plan.forward),
            backward: convert(&plan.backward),
        }
    }

    pub fn into_plan(self) -> Plan {
        let convert = |steps: Vec<StepFile>| steps.iter().map(|s| Step::new(s.v, s.to)).collect();
        Plan {
            forward: convert(self.forward),
            backward: convert(self.backward),
        }
    }
}
