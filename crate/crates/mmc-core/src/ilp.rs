//! Time-staged integer programming formulation and its certification
//! oracle.
//!
//! The contraction product is cut into `T = p + q - 1` stages: the stage-1
//! matrix is the instance, each of the first `p - 1` transitions consumes
//! one line decision (largest line index first) and the remaining `q - 1`
//! transitions consume the column decisions likewise. Writing one
//! transition entrywise only ever multiplies a stage entry by one binary
//! decision, so each product is replaced by a variable `r` tied down with
//! the three McCormick inequalities `r <= a`, `r <= x`, `r >= a + x - 1`,
//! which force `r = a * x` for binary operands. Stage entries are bounded
//! by one, which is exactly contraction validity: merges never subtract, so
//! a collision can never heal in a later stage.
//!
//! The objective counts neighbor pairs of the final stage as one `z`
//! variable per cell and direction (east, south, south-east, south-west),
//! each again a McCormick product — four directions cover every unordered
//! pair exactly once.
//!
//! Rather than handing the model to a MILP solver, [`model_oracle_check`]
//! certifies it at small sizes: every binary assignment of the decision
//! variables is propagated arithmetically, and model feasibility and
//! objective value must match contraction validity and trimmed density.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::IlpError;
use crate::matrix::{BinaryMatrix, Selection};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Direction {
    East,
    South,
    SouthEast,
    SouthWest,
}

impl Direction {
    const ALL: [Direction; 4] = [
        Direction::East,
        Direction::South,
        Direction::SouthEast,
        Direction::SouthWest,
    ];

    fn tag(self) -> &'static str {
        match self {
            Direction::East => "e",
            Direction::South => "s",
            Direction::SouthEast => "se",
            Direction::SouthWest => "sw",
        }
    }

    /// Neighbor of `(i, j)` in this direction, if inside a `p x q` grid.
    fn step(self, i: usize, j: usize, p: usize, q: usize) -> Option<(usize, usize)> {
        match self {
            Direction::East => (j + 1 < q).then(|| (i, j + 1)),
            Direction::South => (i + 1 < p).then(|| (i + 1, j)),
            Direction::SouthEast => (i + 1 < p && j + 1 < q).then(|| (i + 1, j + 1)),
            Direction::SouthWest => (i + 1 < p && j > 0).then(|| (i + 1, j - 1)),
        }
    }
}

/// What a variable stands for; stages and cells are 0-based internally.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VarRole {
    /// x_m: contract line m.
    LineDecision(usize),
    /// y_m: contract column m.
    ColumnDecision(usize),
    /// a_t_i_j: stage matrix entry.
    Stage { t: usize, i: usize, j: usize },
    /// r_t_i_j = a_t_i_j * (decision consumed by transition t -> t+1).
    Product { t: usize, i: usize, j: usize },
    /// z_dir_i_j = product of two adjacent final-stage entries.
    Pair { dir: Direction, i: usize, j: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Cmp {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
struct Constraint {
    name: String,
    terms: Vec<(i64, usize)>,
    cmp: Cmp,
    rhs: i64,
}

/// One stage transition: which decision it consumes and which index merges.
#[derive(Clone, Copy, Debug)]
enum Transition {
    Line { merged: usize },
    Column { merged: usize },
}

/// The linearized program for one instance: binary variables, named linear
/// constraints and a linear objective to maximize.
#[derive(Clone, Debug)]
pub struct IlpModel {
    names: Vec<String>,
    roles: Vec<VarRole>,
    constraints: Vec<Constraint>,
    objective: Vec<(i64, usize)>,
    transitions: Vec<Transition>,
}

impl IlpModel {
    /// Number of stages `T = p + q - 1`.
    pub fn stage_count(&self) -> usize {
        self.transitions.len() + 1
    }

    pub fn variable_count(&self) -> usize {
        self.names.len()
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    pub fn variable_names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    /// Number of stage-entry variables, `T * p * q`.
    pub fn stage_variable_count(&self) -> usize {
        self.roles
            .iter()
            .filter(|r| matches!(r, VarRole::Stage { .. }))
            .count()
    }
}

struct ModelBuilder {
    names: Vec<String>,
    roles: Vec<VarRole>,
}

impl ModelBuilder {
    fn var(&mut self, name: String, role: VarRole) -> usize {
        self.names.push(name);
        self.roles.push(role);
        self.names.len() - 1
    }
}

/// The decision consumed by transition `s` (0-based) of a `p x q` instance:
/// lines come first, largest contraction index first, then columns.
fn transition_for(s: usize, p: usize, q: usize) -> Transition {
    if s < p - 1 {
        Transition::Line { merged: p - 2 - s }
    } else {
        Transition::Column {
            merged: q - 2 - (s - (p - 1)),
        }
    }
}

/// Builds the staged model for `matrix`. A 1x1 instance yields the trivial
/// model: one fixed stage variable and a constant (empty) objective.
pub fn build_model(matrix: &BinaryMatrix) -> IlpModel {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    let stages = p + q - 1;
    let mut b = ModelBuilder {
        names: Vec::new(),
        roles: Vec::new(),
    };

    let x: Vec<usize> = (0..p.saturating_sub(1))
        .map(|m| b.var(format!("x_{}", m + 1), VarRole::LineDecision(m)))
        .collect();
    let y: Vec<usize> = (0..q.saturating_sub(1))
        .map(|m| b.var(format!("y_{}", m + 1), VarRole::ColumnDecision(m)))
        .collect();

    // a[t][i * q + j]
    let a: Vec<Vec<usize>> = (0..stages)
        .map(|t| {
            (0..p * q)
                .map(|k| {
                    let (i, j) = (k / q, k % q);
                    b.var(
                        format!("a_{}_{}_{}", t + 1, i + 1, j + 1),
                        VarRole::Stage { t, i, j },
                    )
                })
                .collect()
        })
        .collect();

    let transitions: Vec<Transition> = (0..stages - 1).map(|s| transition_for(s, p, q)).collect();

    // r variables exist for the rows (columns) that the transition touches.
    let mut r: Vec<Vec<Option<usize>>> = Vec::with_capacity(transitions.len());
    for (t, tr) in transitions.iter().enumerate() {
        let mut grid = vec![None; p * q];
        match *tr {
            Transition::Line { merged } => {
                for i in merged + 1..p {
                    for j in 0..q {
                        grid[i * q + j] = Some(b.var(
                            format!("r_{}_{}_{}", t + 1, i + 1, j + 1),
                            VarRole::Product { t, i, j },
                        ));
                    }
                }
            }
            Transition::Column { merged } => {
                for i in 0..p {
                    for j in merged + 1..q {
                        grid[i * q + j] = Some(b.var(
                            format!("r_{}_{}_{}", t + 1, i + 1, j + 1),
                            VarRole::Product { t, i, j },
                        ));
                    }
                }
            }
        }
        r.push(grid);
    }

    let final_stage = stages - 1;
    let mut z: Vec<(usize, Direction, usize, usize)> = Vec::new();
    for dir in Direction::ALL {
        for i in 0..p {
            for j in 0..q {
                if dir.step(i, j, p, q).is_some() {
                    let id = b.var(
                        format!("z_{}_{}_{}", dir.tag(), i + 1, j + 1),
                        VarRole::Pair { dir, i, j },
                    );
                    z.push((id, dir, i, j));
                }
            }
        }
    }

    let mut constraints = Vec::new();

    // Stage 1 is the instance itself.
    for i in 0..p {
        for j in 0..q {
            constraints.push(Constraint {
                name: format!("fix_a_1_{}_{}", i + 1, j + 1),
                terms: vec![(1, a[0][i * q + j])],
                cmp: Cmp::Eq,
                rhs: i64::from(matrix.get(i, j)),
            });
        }
    }

    for (t, tr) in transitions.iter().enumerate() {
        let cur = &a[t];
        let next = &a[t + 1];
        let rt = &r[t];
        let decision = match *tr {
            Transition::Line { merged } => x[merged],
            Transition::Column { merged } => y[merged],
        };
        // Entrywise recurrence: merged index gains the follower times the
        // decision, interior indices shift when the decision fires, the
        // last index empties.
        for i in 0..p {
            for j in 0..q {
                let here = i * q + j;
                let mut terms = vec![(1, next[here]), (-1, cur[here])];
                match *tr {
                    Transition::Line { merged } => {
                        if i == merged {
                            terms.push((-1, rt[(i + 1) * q + j].unwrap()));
                        } else if i > merged {
                            terms.push((1, rt[here].unwrap()));
                            if i + 1 < p {
                                terms.push((-1, rt[(i + 1) * q + j].unwrap()));
                            }
                        }
                    }
                    Transition::Column { merged } => {
                        if j == merged {
                            terms.push((-1, rt[i * q + j + 1].unwrap()));
                        } else if j > merged {
                            terms.push((1, rt[here].unwrap()));
                            if j + 1 < q {
                                terms.push((-1, rt[i * q + j + 1].unwrap()));
                            }
                        }
                    }
                }
                constraints.push(Constraint {
                    name: format!("def_a_{}_{}_{}", t + 2, i + 1, j + 1),
                    terms,
                    cmp: Cmp::Eq,
                    rhs: 0,
                });
            }
        }
        // Validity: every stage entry stays binary.
        for i in 0..p {
            for j in 0..q {
                constraints.push(Constraint {
                    name: format!("ub_a_{}_{}_{}", t + 2, i + 1, j + 1),
                    terms: vec![(1, next[i * q + j])],
                    cmp: Cmp::Le,
                    rhs: 1,
                });
            }
        }
        for i in 0..p {
            for j in 0..q {
                if let Some(rv) = rt[i * q + j] {
                    let name = format!("r_{}_{}_{}", t + 1, i + 1, j + 1);
                    push_mccormick(&mut constraints, &name, rv, cur[i * q + j], decision);
                }
            }
        }
    }

    // Objective pairs on the final stage.
    let mut objective = Vec::with_capacity(z.len());
    for &(id, dir, i, j) in &z {
        let (ni, nj) = dir.step(i, j, p, q).unwrap();
        let name = format!("z_{}_{}_{}", dir.tag(), i + 1, j + 1);
        push_mccormick(
            &mut constraints,
            &name,
            id,
            a[final_stage][i * q + j],
            a[final_stage][ni * q + nj],
        );
        objective.push((1, id));
    }

    IlpModel {
        names: b.names,
        roles: b.roles,
        constraints,
        objective,
        transitions,
    }
}

fn push_mccormick(
    constraints: &mut Vec<Constraint>,
    name: &str,
    product: usize,
    left: usize,
    right: usize,
) {
    constraints.push(Constraint {
        name: format!("mc1_{name}"),
        terms: vec![(1, product), (-1, left)],
        cmp: Cmp::Le,
        rhs: 0,
    });
    constraints.push(Constraint {
        name: format!("mc2_{name}"),
        terms: vec![(1, product), (-1, right)],
        cmp: Cmp::Le,
        rhs: 0,
    });
    constraints.push(Constraint {
        name: format!("mc3_{name}"),
        terms: vec![(1, product), (-1, left), (-1, right)],
        cmp: Cmp::Ge,
        rhs: -1,
    });
}

/// Writes the model as CPLEX-style LP text. Output is byte-deterministic
/// for a given instance.
pub fn write_lp<W: fmt::Write>(model: &IlpModel, sink: &mut W) -> fmt::Result {
    writeln!(sink, "Maximize")?;
    if model.objective.is_empty() {
        // Constant objective (1x1 instance): keep the section non-empty.
        writeln!(sink, " obj: 0 {}", model.names[0])?;
    } else {
        write!(sink, " obj:")?;
        for (k, &(coeff, var)) in model.objective.iter().enumerate() {
            if k > 0 && k % 8 == 0 {
                writeln!(sink)?;
                write!(sink, "     ")?;
            }
            write_term(sink, coeff, &model.names[var], k == 0)?;
        }
        writeln!(sink)?;
    }
    writeln!(sink, "Subject To")?;
    for c in &model.constraints {
        write!(sink, " {}:", c.name)?;
        for (k, &(coeff, var)) in c.terms.iter().enumerate() {
            write_term(sink, coeff, &model.names[var], k == 0)?;
        }
        let op = match c.cmp {
            Cmp::Le => "<=",
            Cmp::Ge => ">=",
            Cmp::Eq => "=",
        };
        writeln!(sink, " {} {}", op, c.rhs)?;
    }
    writeln!(sink, "Binary")?;
    for name in &model.names {
        writeln!(sink, " {name}")?;
    }
    writeln!(sink, "End")
}

fn write_term<W: fmt::Write>(sink: &mut W, coeff: i64, name: &str, first: bool) -> fmt::Result {
    let sign = if coeff < 0 {
        " -"
    } else if first {
        ""
    } else {
        " +"
    };
    let magnitude = coeff.unsigned_abs();
    if magnitude == 1 {
        write!(sink, "{sign} {name}")
    } else {
        write!(sink, "{sign} {magnitude} {name}")
    }
}

/// [`write_lp`] into a fresh string.
pub fn lp_string(model: &IlpModel) -> String {
    let mut out = String::new();
    write_lp(model, &mut out).expect("string sink");
    out
}

/// Guard for [`model_oracle_check`]: at most `2^12` assignments.
pub const ORACLE_DECISION_LIMIT: usize = 12;

/// Outcome of evaluating one binary decision assignment against the model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssignmentEval {
    /// Whether every stage entry stays binary, i.e. the assignment is
    /// feasible for the program.
    pub feasible: bool,
    /// Linearized objective value, for feasible assignments.
    pub objective: Option<u64>,
}

/// Propagates the stage recurrences for one assignment of the line and
/// column decisions (indexed by contraction index) and reports model
/// feasibility plus the objective value.
pub fn evaluate_assignment(
    matrix: &BinaryMatrix,
    line_decisions: &[bool],
    column_decisions: &[bool],
) -> AssignmentEval {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    assert_eq!(line_decisions.len(), p - 1, "one decision per line gap");
    assert_eq!(column_decisions.len(), q - 1, "one decision per column gap");
    let grids = propagate(matrix, line_decisions, column_decisions);
    let feasible = grids
        .iter()
        .all(|g| g.iter().all(|&v| v <= 1));
    let objective = feasible.then(|| {
        let last = grids.last().unwrap();
        let mut total = 0u64;
        for dir in Direction::ALL {
            for i in 0..p {
                for j in 0..q {
                    if let Some((ni, nj)) = dir.step(i, j, p, q) {
                        total += u64::from(last[i * q + j] * last[ni * q + nj]);
                    }
                }
            }
        }
        total
    });
    AssignmentEval { feasible, objective }
}

/// All stage grids, entry values unclamped.
fn propagate(matrix: &BinaryMatrix, x: &[bool], y: &[bool]) -> Vec<Vec<u32>> {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    let stages = p + q - 1;
    let mut grids: Vec<Vec<u32>> = Vec::with_capacity(stages);
    grids.push(
        (0..p * q)
            .map(|k| u32::from(matrix.get(k / q, k % q)))
            .collect(),
    );
    for s in 0..stages - 1 {
        let cur = grids.last().unwrap();
        let mut next = cur.clone();
        match transition_for(s, p, q) {
            Transition::Line { merged } => {
                if x[merged] {
                    for j in 0..q {
                        next[merged * q + j] = cur[merged * q + j] + cur[(merged + 1) * q + j];
                        for i in merged + 1..p - 1 {
                            next[i * q + j] = cur[(i + 1) * q + j];
                        }
                        next[(p - 1) * q + j] = 0;
                    }
                }
            }
            Transition::Column { merged } => {
                if y[merged] {
                    for i in 0..p {
                        next[i * q + merged] = cur[i * q + merged] + cur[i * q + merged + 1];
                        for j in merged + 1..q - 1 {
                            next[i * q + j] = cur[i * q + j + 1];
                        }
                        next[i * q + q - 1] = 0;
                    }
                }
            }
        }
        grids.push(next);
    }
    grids
}

/// Detailed result of [`model_oracle_check`].
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub assignments: u64,
    pub feasible: u64,
    /// Best objective over the feasible assignments; this is the optimum
    /// of the program, so it equals the instance's optimal density.
    pub best_objective: Option<u64>,
    /// First disagreement found, if any.
    pub mismatch: Option<String>,
}

impl OracleReport {
    pub fn all_agree(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Enumerates every binary assignment of the decision variables and checks
/// the model against the combinatorial definition: an assignment must be
/// feasible exactly when the selection it encodes is a valid contraction,
/// every emitted constraint must hold on feasible assignments, and the
/// objective must equal the density of the trimmed contraction.
pub fn check_against_enumeration(matrix: &BinaryMatrix) -> Result<OracleReport, IlpError> {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    let decisions = p - 1 + q - 1;
    if decisions > ORACLE_DECISION_LIMIT {
        return Err(IlpError::TooManyAssignments {
            decisions,
            limit: ORACLE_DECISION_LIMIT,
        });
    }
    let model = build_model(matrix);
    let mut report = OracleReport {
        assignments: 1 << decisions,
        feasible: 0,
        best_objective: None,
        mismatch: None,
    };
    for mask in 0u32..1 << decisions {
        let x: Vec<bool> = (0..p - 1).map(|k| mask & (1 << k) != 0).collect();
        let y: Vec<bool> = (0..q - 1).map(|k| mask & (1 << (p - 1 + k)) != 0).collect();
        if let Some(problem) = check_assignment(matrix, &model, &x, &y, &mut report) {
            report.mismatch = Some(problem);
            return Ok(report);
        }
    }
    Ok(report)
}

fn check_assignment(
    matrix: &BinaryMatrix,
    model: &IlpModel,
    x: &[bool],
    y: &[bool],
    report: &mut OracleReport,
) -> Option<String> {
    let (p, q) = (matrix.line_count(), matrix.column_count());
    let grids = propagate(matrix, x, y);
    let selection = Selection::new(
        (0..x.len()).filter(|&k| x[k]).collect(),
        (0..y.len()).filter(|&k| y[k]).collect(),
    )
    .unwrap();
    let valid = matrix.is_valid(&selection).unwrap();
    let feasible = grids.iter().all(|g| g.iter().all(|&v| v <= 1));
    if feasible != valid {
        return Some(format!(
            "assignment {selection:?}: model feasibility {feasible} but contraction validity {valid}"
        ));
    }

    // Variable values implied by the propagation.
    let decision_value = |t: usize| -> i64 {
        match model.transitions[t] {
            Transition::Line { merged } => i64::from(x[merged]),
            Transition::Column { merged } => i64::from(y[merged]),
        }
    };
    let values: Vec<i64> = model
        .roles
        .iter()
        .map(|role| match *role {
            VarRole::LineDecision(m) => i64::from(x[m]),
            VarRole::ColumnDecision(m) => i64::from(y[m]),
            VarRole::Stage { t, i, j } => i64::from(grids[t][i * q + j]),
            VarRole::Product { t, i, j } => i64::from(grids[t][i * q + j]) * decision_value(t),
            VarRole::Pair { dir, i, j } => {
                let (ni, nj) = dir.step(i, j, p, q).unwrap();
                let last = grids.last().unwrap();
                i64::from(last[i * q + j]) * i64::from(last[ni * q + nj])
            }
        })
        .collect();

    if !feasible {
        // The violated stage bound must show up as a non-binary variable.
        debug_assert!(values.iter().any(|v| !(0..=1).contains(v)));
        return None;
    }

    report.feasible += 1;
    if let Some(v) = values.iter().find(|v| !(0..=1).contains(*v)) {
        return Some(format!("feasible assignment {selection:?} has non-binary value {v}"));
    }
    for c in &model.constraints {
        let lhs: i64 = c.terms.iter().map(|&(coeff, var)| coeff * values[var]).sum();
        let holds = match c.cmp {
            Cmp::Le => lhs <= c.rhs,
            Cmp::Ge => lhs >= c.rhs,
            Cmp::Eq => lhs == c.rhs,
        };
        if !holds {
            return Some(format!(
                "feasible assignment {selection:?} violates constraint {}",
                c.name
            ));
        }
    }
    let objective: i64 = model
        .objective
        .iter()
        .map(|&(coeff, var)| coeff * values[var])
        .sum();
    let expected = matrix.contracted(&selection).unwrap().density();
    if objective != expected as i64 {
        return Some(format!(
            "assignment {selection:?}: objective {objective} but trimmed density {expected}"
        ));
    }
    report.best_objective = Some(report.best_objective.map_or(expected, |b| b.max(expected)));
    None
}

/// True when every binary assignment agrees with the combinatorial
/// definition; see [`check_against_enumeration`].
pub fn model_oracle_check(matrix: &BinaryMatrix) -> Result<bool, IlpError> {
    Ok(check_against_enumeration(matrix)?.all_agree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::naive_enumerate;

    fn example_matrix() -> BinaryMatrix {
        BinaryMatrix::from_rows(&["1000", "1010", "0010", "0101"]).unwrap()
    }

    #[test]
    fn stage_split_for_small_shapes() {
        let m = BinaryMatrix::zeros(2, 2);
        let model = build_model(&m);
        assert_eq!(model.stage_count(), 3);
        let names: Vec<&str> = model.variable_names().collect();
        assert!(names.contains(&"x_1"));
        assert!(names.contains(&"y_1"));
        assert_eq!(model.transitions.len(), 2);

        let fig = example_matrix();
        let model = build_model(&fig);
        assert_eq!(model.stage_count(), 7);
        assert_eq!(model.stage_variable_count(), 112);
        let line_transitions = model
            .transitions
            .iter()
            .filter(|t| matches!(t, Transition::Line { .. }))
            .count();
        assert_eq!(line_transitions, 3);
        assert!(matches!(model.transitions[0], Transition::Line { merged: 2 }));
        assert!(matches!(model.transitions[3], Transition::Column { merged: 2 }));
        assert!(matches!(model.transitions[6 - 1] , Transition::Column { merged: 0 }));
    }

    #[test]
    fn merging_two_ones_is_infeasible() {
        let m = BinaryMatrix::from_rows(&["11"]).unwrap();
        let eval = evaluate_assignment(&m, &[], &[true]);
        assert!(!eval.feasible);
        let eval = evaluate_assignment(&m, &[], &[false]);
        assert_eq!(eval.objective, Some(1));
        assert!(model_oracle_check(&m).unwrap());
    }

    #[test]
    fn zero_matrix_is_feasible_everywhere() {
        let m = BinaryMatrix::zeros(2, 2);
        let report = check_against_enumeration(&m).unwrap();
        assert!(report.all_agree());
        assert_eq!(report.feasible, report.assignments);
        assert_eq!(report.best_objective, Some(0));
    }

    #[test]
    fn example_assignments_match_worked_values() {
        let m = example_matrix();
        // x_3 = 1, y_1 = 1: the worked contraction of density 10.
        let eval = evaluate_assignment(&m, &[false, false, true], &[true, false, false]);
        assert_eq!(eval.objective, Some(10));
        // y_1 = y_2 = 1 is the invalid column pair.
        let eval = evaluate_assignment(&m, &[false; 3], &[true, true, false]);
        assert!(!eval.feasible);
        // The empty assignment scores the instance's own density.
        let eval = evaluate_assignment(&m, &[false; 3], &[false; 3]);
        assert_eq!(eval.objective, Some(4));
    }

    #[test]
    fn oracle_certifies_the_example_and_matches_enumeration() {
        let m = example_matrix();
        let report = check_against_enumeration(&m).unwrap();
        assert!(report.all_agree(), "{:?}", report.mismatch);
        assert_eq!(
            report.best_objective,
            Some(naive_enumerate(&m).unwrap().density)
        );
    }

    #[test]
    fn oracle_guard_refuses_large_enumerations() {
        let m = BinaryMatrix::zeros(10, 10);
        assert!(matches!(
            model_oracle_check(&m),
            Err(IlpError::TooManyAssignments { limit: 12, .. })
        ));
    }

    #[test]
    fn lp_text_shape() {
        let m = BinaryMatrix::from_rows(&["10", "01"]).unwrap();
        let text = lp_string(&build_model(&m));
        assert!(text.starts_with("Maximize\n obj:"));
        assert!(text.contains("\nSubject To\n"));
        assert!(text.contains(" fix_a_1_1_1: a_1_1_1 = 1"));
        assert!(text.contains(" ub_a_2_1_1: a_2_1_1 <= 1"));
        assert!(text.contains(" mc3_r_1_2_1: r_1_2_1 - a_1_2_1 - x_1 >= -1"));
        assert!(text.contains("\nBinary\n"));
        assert!(text.trim_end().ends_with("End"));
        // Deterministic output.
        assert_eq!(text, lp_string(&build_model(&m)));
    }

    #[test]
    fn trivial_model_for_unit_matrix() {
        let m = BinaryMatrix::from_rows(&["1"]).unwrap();
        let model = build_model(&m);
        assert_eq!(model.stage_count(), 1);
        assert_eq!(model.variable_count(), 1);
        let text = lp_string(&model);
        assert!(text.contains("obj: 0 a_1_1_1"));
        assert!(model_oracle_check(&m).unwrap());
    }
}
