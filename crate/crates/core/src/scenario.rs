//! World model: robots, tasks, network topology, and algorithm constants.
//!
//! A [`Scenario`] is the immutable input to every allocator. It round-trips
//! through a versioned TOML document (`schema = 1`):
//!
//! ```toml
//! schema = 1
//! seed = 42
//!
//! [constants]
//! alpha = 10000.0
//! beta = 10000.0
//! big_n = 1000000.0
//! big_c = 1000000000.0
//! lambda = 0.0
//! max_rounds = 500
//!
//! [topology]
//! kind = "complete"      # or "line", "ring", or "explicit" with edges = [[0,1], ...]
//!
//! [[robots]]
//! id = 0
//! position = [150.0, 130.0]
//! velocity = 5.0
//! payload_a = 0.0        # consumable (e.g. strike/ammunition units)
//! payload_b = 3.0        # non-consumable (e.g. reconnaissance units)
//!
//! [[tasks]]
//! id = 0
//! position = [850.0, 350.0]
//! duration = 10.0
//! demand_a = 8.0
//! demand_b = 1.0
//! announce_time = 0.0    # > 0 for tasks injected mid-run
//! ```
//!
//! Lengths are meters, times seconds, payloads unitless. Unknown fields are
//! rejected at load time; invariant violations are surfaced as errors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geometry::Point;

/// Fleet-wide default velocity in m/s when a scenario file omits it.
pub const DEFAULT_VELOCITY: f64 = 5.0;
/// Default task duration in seconds when a scenario file omits it.
pub const DEFAULT_DURATION: f64 = 10.0;
/// Default seed for presets.
pub const DEFAULT_SEED: u64 = 42;

/// Width (m) of the benchmark task area.
pub const AREA_WIDTH: f64 = 2400.0;
/// Height (m) of the benchmark task area.
pub const AREA_HEIGHT: f64 = 1500.0;

const SCHEMA_VERSION: u32 = 1;

/// A robot: start position, speed, and the two payload capacities.
///
/// Payload A is consumable (committing it to a task spends it); payload B is
/// non-consumable (the same units serve every task the robot visits).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Robot {
    pub id: usize,
    pub position: Point,
    #[serde(default = "default_velocity")]
    pub velocity: f64,
    #[serde(default)]
    pub payload_a: f64,
    #[serde(default)]
    pub payload_b: f64,
}

/// A task: position, execution duration, per-kind payload demands, and the
/// simulated time at which it becomes known (0 = known from the start).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Task {
    pub id: usize,
    pub position: Point,
    #[serde(default = "default_duration")]
    pub duration: f64,
    #[serde(default)]
    pub demand_a: f64,
    #[serde(default)]
    pub demand_b: f64,
    #[serde(default)]
    pub announce_time: f64,
}

fn default_velocity() -> f64 {
    DEFAULT_VELOCITY
}

fn default_duration() -> f64 {
    DEFAULT_DURATION
}

/// Named topology families supported by the scenario schema.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyKind {
    Complete,
    Line,
    Ring,
    Explicit,
}

/// Undirected communication graph over the robots.
#[derive(Debug, Clone, PartialEq)]
pub struct Topology {
    pub kind: TopologyKind,
    /// Symmetric boolean matrix with a false diagonal.
    pub adjacency: Vec<Vec<bool>>,
}

impl Topology {
    /// Every pair of distinct robots connected.
    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n)
            .map(|i| (0..n).map(|j| i != j).collect())
            .collect();
        Self {
            kind: TopologyKind::Complete,
            adjacency,
        }
    }

    /// Chain: edges (0,1), (1,2), ...
    pub fn line(n: usize) -> Self {
        let mut t = Self::from_edge_list(n, (1..n).map(|i| (i - 1, i)));
        t.kind = TopologyKind::Line;
        t
    }

    /// Cycle: a line plus the closing edge.
    pub fn ring(n: usize) -> Self {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        if n > 2 {
            edges.push((n - 1, 0));
        }
        let mut t = Self::from_edge_list(n, edges);
        t.kind = TopologyKind::Ring;
        t
    }

    /// Explicit undirected edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::from_edge_list(n, edges.iter().copied())
    }

    /// Wrap a raw adjacency matrix. The matrix is taken as-is; `validate`
    /// reports asymmetry, self loops, and dimension mismatches.
    pub fn from_adjacency(adjacency: Vec<Vec<bool>>) -> Self {
        Self {
            kind: TopologyKind::Explicit,
            adjacency,
        }
    }

    fn from_edge_list(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adjacency = vec![vec![false; n]; n];
        for (a, b) in edges {
            if a < n && b < n && a != b {
                adjacency[a][b] = true;
                adjacency[b][a] = true;
            }
        }
        Self {
            kind: TopologyKind::Explicit,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Neighbors of robot `i`, ascending.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[i]
            .iter()
            .enumerate()
            .filter_map(|(k, &on)| on.then_some(k))
    }

    /// True when every robot can reach every other robot.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for k in self.neighbors(i) {
                if !seen[k] {
                    seen[k] = true;
                    stack.push(k);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Normalized (i < j) edge list, sorted.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.adjacency[i][j] {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

/// Algorithm constants shared by all allocators.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgoConstants {
    /// Weight on residual demand of payload A in the marginal cost.
    pub alpha: f64,
    /// Weight on residual demand of payload B in the marginal cost.
    pub beta: f64,
    /// Arrival-time sentinel threshold: any finite arrival is below it.
    pub big_n: f64,
    /// Cost assigned to ineligible bids; exceeds any feasible marginal cost.
    pub big_c: f64,
    /// Time discount factor for task gains.
    pub lambda: f64,
    /// Safety bound on allocation rounds.
    pub max_rounds: usize,
}

impl AlgoConstants {
    /// Defaults sized for a fleet: `alpha`/`beta` dominate any achievable
    /// travel time, `big_c` dominates any feasible bid, and the round bound
    /// scales with the problem.
    pub fn defaults(n_robots: usize, n_tasks: usize) -> Self {
        Self {
            alpha: 1e4,
            beta: 1e4,
            big_n: 1e6,
            big_c: 1e9,
            lambda: 0.0,
            max_rounds: 10 * n_robots.max(1) * n_tasks.max(1),
        }
    }
}

/// Immutable world description consumed by the engine and baselines.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub robots: Vec<Robot>,
    pub tasks: Vec<Task>,
    pub topology: Topology,
    pub constants: AlgoConstants,
    pub seed: u64,
}

impl Scenario {
    pub fn n_robots(&self) -> usize {
        self.robots.len()
    }

    pub fn n_tasks(&self) -> usize {
        self.tasks.len()
    }
}

/// A single invariant violation, with a stable machine-readable code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: String,
    pub message: String,
}

impl Violation {
    fn new(code: &str, message: String) -> Self {
        Self {
            code: code.to_string(),
            message,
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

/// Check every scenario invariant; an empty list means the scenario is
/// well-formed. Connectivity is deliberately not checked here: a disconnected
/// topology is runnable, it just forfeits the convergence guarantee.
pub fn validate(scenario: &Scenario) -> Vec<Violation> {
    let mut out = Vec::new();
    let nr = scenario.robots.len();

    if nr == 0 {
        out.push(Violation::new("scenario.robots.empty", "no robots".into()));
    }
    for (i, r) in scenario.robots.iter().enumerate() {
        if r.id != i {
            out.push(Violation::new(
                "robot.id.sequence",
                format!("robot at index {i} has id {}; ids must be 0..N_r in order", r.id),
            ));
        }
        if r.velocity <= 0.0 {
            out.push(Violation::new(
                "robot.velocity.nonpositive",
                format!("robot {} has velocity {}", r.id, r.velocity),
            ));
        }
        if r.payload_a < 0.0 || r.payload_b < 0.0 {
            out.push(Violation::new(
                "robot.payload.negative",
                format!(
                    "robot {} has payloads a={} b={}",
                    r.id, r.payload_a, r.payload_b
                ),
            ));
        }
    }

    for (j, t) in scenario.tasks.iter().enumerate() {
        if t.id != j {
            out.push(Violation::new(
                "task.id.sequence",
                format!("task at index {j} has id {}; ids must be 0..N_t in order", t.id),
            ));
        }
        if t.demand_a < 0.0 || t.demand_b < 0.0 {
            out.push(Violation::new(
                "task.demand.negative",
                format!("task {} has demands a={} b={}", t.id, t.demand_a, t.demand_b),
            ));
        } else if t.demand_a + t.demand_b <= 0.0 {
            out.push(Violation::new(
                "task.demand.empty",
                format!("task {} demands nothing", t.id),
            ));
        }
        if t.duration < 0.0 {
            out.push(Violation::new(
                "task.duration.negative",
                format!("task {} has duration {}", t.id, t.duration),
            ));
        }
        if t.announce_time < 0.0 {
            out.push(Violation::new(
                "task.announce.negative",
                format!("task {} has announce_time {}", t.id, t.announce_time),
            ));
        }
    }

    let adj = &scenario.topology.adjacency;
    if adj.len() != nr || adj.iter().any(|row| row.len() != nr) {
        out.push(Violation::new(
            "topology.dimension",
            format!("adjacency must be {nr}x{nr}"),
        ));
    } else {
        for i in 0..nr {
            if adj[i][i] {
                out.push(Violation::new(
                    "topology.self_loop",
                    format!("robot {i} is adjacent to itself"),
                ));
            }
            for j in (i + 1)..nr {
                if adj[i][j] != adj[j][i] {
                    out.push(Violation::new(
                        "topology.asymmetric",
                        format!("adjacency[{i}][{j}] != adjacency[{j}][{i}]"),
                    ));
                }
            }
        }
    }

    let c = &scenario.constants;
    if c.alpha <= 0.0 {
        out.push(Violation::new("constants.alpha.nonpositive", format!("alpha = {}", c.alpha)));
    }
    if c.beta <= 0.0 {
        out.push(Violation::new("constants.beta.nonpositive", format!("beta = {}", c.beta)));
    }
    if c.big_n <= 0.0 {
        out.push(Violation::new("constants.big_n.nonpositive", format!("big_n = {}", c.big_n)));
    }
    if c.big_c <= 0.0 {
        out.push(Violation::new("constants.big_c.nonpositive", format!("big_c = {}", c.big_c)));
    }
    if c.lambda < 0.0 {
        out.push(Violation::new("constants.lambda.negative", format!("lambda = {}", c.lambda)));
    }
    if c.max_rounds == 0 {
        out.push(Violation::new("constants.max_rounds.zero", "max_rounds = 0".into()));
    }

    out
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

fn build_robots(data: &[((f64, f64), f64, f64)]) -> Vec<Robot> {
    data.iter()
        .enumerate()
        .map(|(id, &((x, y), a, b))| Robot {
            id,
            position: Point::new(x, y),
            velocity: DEFAULT_VELOCITY,
            payload_a: a,
            payload_b: b,
        })
        .collect()
}

fn build_tasks(data: &[((f64, f64), f64, f64)]) -> Vec<Task> {
    data.iter()
        .enumerate()
        .map(|(id, &((x, y), a, b))| Task {
            id,
            position: Point::new(x, y),
            duration: DEFAULT_DURATION,
            demand_a: a,
            demand_b: b,
            announce_time: 0.0,
        })
        .collect()
}

const CASE1_ROBOTS: [((f64, f64), f64, f64); 5] = [
    ((150.0, 130.0), 0.0, 3.0),
    ((150.0, 330.0), 0.0, 3.0),
    ((150.0, 700.0), 30.0, 3.0),
    ((150.0, 970.0), 30.0, 0.0),
    ((150.0, 1270.0), 25.0, 0.0),
];

const CASE1_TASKS: [((f64, f64), f64, f64); 10] = [
    ((850.0, 350.0), 8.0, 1.0),
    ((1450.0, 550.0), 6.0, 2.0),
    ((2100.0, 430.0), 8.0, 3.0),
    ((740.0, 820.0), 7.0, 3.0),
    ((1120.0, 740.0), 8.0, 3.0),
    ((1710.0, 970.0), 6.0, 2.0),
    ((2360.0, 680.0), 9.0, 2.0),
    ((730.0, 1260.0), 10.0, 3.0),
    ((1440.0, 1020.0), 8.0, 2.0),
    ((1950.0, 1280.0), 9.0, 2.0),
];

/// Urban benchmark: five robots with mixed strike/reconnaissance payloads and
/// ten fixed tasks in a 2.4 km x 1.5 km area, fully connected network. Every
/// task needs at least one reconnaissance-capable robot via `demand_b >= 1`.
pub fn case1_scenario() -> Scenario {
    let robots = build_robots(&CASE1_ROBOTS);
    let tasks = build_tasks(&CASE1_TASKS);
    let constants = AlgoConstants::defaults(robots.len(), tasks.len());
    Scenario {
        topology: Topology::complete(robots.len()),
        constants,
        robots,
        tasks,
        seed: DEFAULT_SEED,
    }
}

/// `case1_scenario` restricted to tasks 1-8 as initially known, plus three
/// tasks injected mid-run, drawn deterministically from the default seed.
pub fn case1_dynamic_scenario() -> Scenario {
    case1_dynamic_scenario_with_seed(DEFAULT_SEED)
}

/// Seeded variant of [`case1_dynamic_scenario`]. Injected positions fall in
/// the benchmark area, consumable demands stay within ten, and at least one
/// reconnaissance unit is required per task.
pub fn case1_dynamic_scenario_with_seed(seed: u64) -> Scenario {
    let robots = build_robots(&CASE1_ROBOTS);
    let mut tasks = build_tasks(&CASE1_TASKS[..8]);

    let mut placement = substream(seed, STREAM_PLACEMENT);
    let mut injection = substream(seed, STREAM_INJECTION);
    let mut announce: Vec<f64> = (0..3).map(|_| injection.gen_range(60.0..360.0)).collect();
    announce.sort_by(|a, b| a.partial_cmp(b).unwrap());

    for (k, at) in announce.into_iter().enumerate() {
        let x = placement.gen_range(0.0..AREA_WIDTH);
        let y = placement.gen_range(0.0..AREA_HEIGHT);
        let demand_a = placement.gen_range(1..=10) as f64;
        let demand_b = placement.gen_range(1..=3) as f64;
        tasks.push(Task {
            id: 8 + k,
            position: Point::new(x, y),
            duration: DEFAULT_DURATION,
            demand_a,
            demand_b,
            announce_time: at,
        });
    }

    let constants = AlgoConstants::defaults(robots.len(), tasks.len());
    Scenario {
        topology: Topology::complete(robots.len()),
        constants,
        robots,
        tasks,
        seed,
    }
}

/// Static gain recorded for every strike task of the sweep benchmark.
pub const CASE2_STATIC_GAIN: f64 = 100.0;

/// Strike-only benchmark: five robots carrying 100 units of payload A each,
/// `n_tasks` tasks demanding 30 units each, positions drawn uniformly over
/// the benchmark area from `seed`. The time discount factor is 0.01.
pub fn case2_scenario(n_tasks: usize, seed: u64) -> Scenario {
    let mut placement = substream(seed, STREAM_PLACEMENT);
    let robots = (0..5)
        .map(|id| Robot {
            id,
            position: Point::new(
                placement.gen_range(0.0..AREA_WIDTH),
                placement.gen_range(0.0..AREA_HEIGHT),
            ),
            velocity: DEFAULT_VELOCITY,
            payload_a: 100.0,
            payload_b: 0.0,
        })
        .collect::<Vec<_>>();
    let tasks = (0..n_tasks)
        .map(|id| Task {
            id,
            position: Point::new(
                placement.gen_range(0.0..AREA_WIDTH),
                placement.gen_range(0.0..AREA_HEIGHT),
            ),
            duration: DEFAULT_DURATION,
            demand_a: 30.0,
            demand_b: 0.0,
            announce_time: 0.0,
        })
        .collect::<Vec<_>>();

    let mut constants = AlgoConstants::defaults(robots.len(), tasks.len());
    constants.lambda = 0.01;
    Scenario {
        topology: Topology::complete(robots.len()),
        constants,
        robots,
        tasks,
        seed,
    }
}

pub(crate) const STREAM_PLACEMENT: u64 = 0x706c_6163;
pub(crate) const STREAM_INJECTION: u64 = 0x696e_6a65;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic named sub-stream of a master seed.
pub(crate) fn substream(seed: u64, label: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(label)))
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// Errors produced when loading a scenario document.
#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("unsupported schema version {0} (expected {SCHEMA_VERSION})")]
    Schema(u32),
    #[error("invalid scenario: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    schema: u32,
    seed: u64,
    constants: AlgoConstants,
    topology: TopologyFile,
    robots: Vec<Robot>,
    tasks: Vec<Task>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TopologyFile {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<[usize; 2]>>,
}

/// Parse and validate a scenario document.
pub fn load_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let file: ScenarioFile = toml::from_str(text)?;
    if file.schema != SCHEMA_VERSION {
        return Err(ScenarioError::Schema(file.schema));
    }
    let n = file.robots.len();
    let mut violations = Vec::new();
    let topology = match file.topology.kind.as_str() {
        "complete" => Topology::complete(n),
        "line" => Topology::line(n),
        "ring" => Topology::ring(n),
        "explicit" => match &file.topology.edges {
            Some(edges) => {
                let pairs: Vec<(usize, usize)> =
                    edges.iter().map(|e| (e[0], e[1])).collect();
                Topology::from_edges(n, &pairs)
            }
            None => {
                violations.push(Violation::new(
                    "topology.edges.missing",
                    "explicit topology requires an edges list".into(),
                ));
                Topology::complete(n)
            }
        },
        other => {
            violations.push(Violation::new(
                "topology.kind.unknown",
                format!("unknown topology kind {other:?}"),
            ));
            Topology::complete(n)
        }
    };
    if file.topology.kind != "explicit" && file.topology.edges.is_some() {
        violations.push(Violation::new(
            "topology.edges.unexpected",
            format!("edges are only valid with kind = \"explicit\", not {:?}", file.topology.kind),
        ));
    }

    let scenario = Scenario {
        robots: file.robots,
        tasks: file.tasks,
        topology,
        constants: file.constants,
        seed: file.seed,
    };
    violations.extend(validate(&scenario));
    if violations.is_empty() {
        Ok(scenario)
    } else {
        Err(ScenarioError::Invalid(violations))
    }
}

/// Render a scenario as its canonical TOML document.
pub fn save_scenario(scenario: &Scenario) -> String {
    let topology = match scenario.topology.kind {
        TopologyKind::Complete => TopologyFile {
            kind: "complete".into(),
            edges: None,
        },
        TopologyKind::Line => TopologyFile {
            kind: "line".into(),
            edges: None,
        },
        TopologyKind::Ring => TopologyFile {
            kind: "ring".into(),
            edges: None,
        },
        TopologyKind::Explicit => TopologyFile {
            kind: "explicit".into(),
            edges: Some(
                scenario
                    .topology
                    .edge_list()
                    .into_iter()
                    .map(|(a, b)| [a, b])
                    .collect(),
            ),
        },
    };
    let file = ScenarioFile {
        schema: SCHEMA_VERSION,
        seed: scenario.seed,
        constants: scenario.constants.clone(),
        topology,
        robots: scenario.robots.clone(),
        tasks: scenario.tasks.clone(),
    };
    toml::to_string(&file).expect("scenario serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case1_matches_published_table() {
        let s = case1_scenario();
        assert_eq!(s.robots.len(), 5);
        assert_eq!(s.tasks.len(), 10);
        assert!(validate(&s).is_empty());

        let r1 = &s.robots[0];
        assert_eq!((r1.position.x, r1.position.y), (150.0, 130.0));
        assert_eq!((r1.payload_a, r1.payload_b), (0.0, 3.0));
        let r5 = &s.robots[4];
        assert_eq!((r5.position.x, r5.position.y), (150.0, 1270.0));
        assert_eq!((r5.payload_a, r5.payload_b), (25.0, 0.0));

        let t3 = &s.tasks[2];
        assert_eq!((t3.position.x, t3.position.y), (2100.0, 430.0));
        assert_eq!((t3.demand_a, t3.demand_b), (8.0, 3.0));
        let t10 = &s.tasks[9];
        assert_eq!((t10.position.x, t10.position.y), (1950.0, 1280.0));
        assert_eq!((t10.demand_a, t10.demand_b), (9.0, 2.0));

        assert!(s.tasks.iter().all(|t| t.announce_time == 0.0));
        assert!(s.tasks.iter().all(|t| t.demand_b >= 1.0));
        assert_eq!(s.topology.kind, TopologyKind::Complete);
    }

    #[test]
    fn case1_dynamic_has_three_delayed_tasks() {
        let s = case1_dynamic_scenario();
        assert_eq!(s.tasks.len(), 11);
        assert_eq!(s.tasks.iter().filter(|t| t.announce_time == 0.0).count(), 8);
        for t in &s.tasks[8..] {
            assert!(t.announce_time > 0.0);
            assert!(t.demand_a >= 1.0 && t.demand_a <= 10.0);
            assert!(t.demand_b >= 1.0);
            assert!(t.position.x >= 0.0 && t.position.x <= AREA_WIDTH);
            assert!(t.position.y >= 0.0 && t.position.y <= AREA_HEIGHT);
        }
        // announce times ascend
        assert!(s.tasks[8].announce_time <= s.tasks[9].announce_time);
        assert!(s.tasks[9].announce_time <= s.tasks[10].announce_time);
        assert_eq!(s, case1_dynamic_scenario());
        assert!(validate(&s).is_empty());
    }

    #[test]
    fn case2_is_uniform_and_deterministic() {
        let s = case2_scenario(15, 7);
        assert_eq!(s.robots.len(), 5);
        assert_eq!(s.tasks.len(), 15);
        assert!(s.robots.iter().all(|r| r.payload_a == 100.0 && r.payload_b == 0.0));
        assert!(s.tasks.iter().all(|t| t.demand_a == 30.0 && t.demand_b == 0.0));
        assert_eq!(s.constants.lambda, 0.01);
        assert_eq!(s, case2_scenario(15, 7));
        assert_ne!(s, case2_scenario(15, 8));
        assert!(validate(&s).is_empty());
    }

    #[test]
    fn validate_flags_bad_velocity_and_asymmetry() {
        let mut s = case1_scenario();
        s.robots[2].velocity = 0.0;
        s.topology.adjacency[0][1] = false; // [1][0] still true
        let codes: Vec<_> = validate(&s).into_iter().map(|v| v.code).collect();
        assert!(codes.contains(&"robot.velocity.nonpositive".to_string()));
        assert!(codes.contains(&"topology.asymmetric".to_string()));
    }

    #[test]
    fn roundtrip_is_identity() {
        for s in [
            case1_scenario(),
            case1_dynamic_scenario(),
            case2_scenario(12, 5),
        ] {
            let text = save_scenario(&s);
            let back = load_scenario(&text).unwrap();
            assert_eq!(s, back);
        }
    }

    #[test]
    fn roundtrip_explicit_topology() {
        let mut s = case1_scenario();
        s.topology = Topology::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let back = load_scenario(&save_scenario(&s)).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn truncated_input_is_a_parse_error() {
        let text = save_scenario(&case1_scenario());
        let truncated = &text[..text.len() / 2];
        assert!(matches!(
            load_scenario(truncated),
            Err(ScenarioError::Parse(_))
        ));
    }

    #[test]
    fn unknown_field_is_rejected() {
        let mut text = save_scenario(&case1_scenario());
        text.push_str("\nmystery = 3\n");
        assert!(matches!(load_scenario(&text), Err(ScenarioError::Parse(_))));
    }

    #[test]
    fn negative_demand_in_file_is_a_validation_error() {
        let mut s = case1_scenario();
        s.tasks[3].demand_a = -1.0;
        let text = save_scenario(&s);
        match load_scenario(&text) {
            Err(ScenarioError::Invalid(vs)) => {
                assert!(vs.iter().any(|v| v.code == "task.demand.negative"));
            }
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn topology_families_have_expected_edges() {
        assert_eq!(Topology::complete(3).edge_list(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(Topology::line(4).edge_list(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(Topology::ring(4).edge_list(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(Topology::ring(2).edge_list(), vec![(0, 1)]);
        assert!(Topology::line(4).is_connected());
        assert!(!Topology::from_edges(4, &[(0, 1), (2, 3)]).is_connected());
    }
}
