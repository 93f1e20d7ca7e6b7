//! Degree induction for separating plane curves, tracked at the level of
//! `(degree, component count)` states. Admissible states obey the parity
//! and range constraints of the construction; traces record a replayable
//! path of induction steps from a low-degree base curve, and the witness
//! routine pairs a constructed state with the obstruction verdict that
//! rules out a totally real pencil on it.

use std::fmt;

use crate::obstruct::{enumerate_obstructed_l, generic_obstruction, CurveData, ObstructionVerdict};
use crate::{Error, Result};

/// A `(degree, component count)` pair reached by the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionState {
    pub d: i64,
    pub l: i64,
}

/// The two induction moves from degree `d - 1` to degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOption {
    /// `l_prev + d - 2`.
    I,
    /// `l_prev + (d mod 2)`.
    II,
}

impl fmt::Display for StepOption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepOption::I => write!(f, "i"),
            StepOption::II => write!(f, "ii"),
        }
    }
}

/// One induction step; `resulting_l` must match replay.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    pub to_degree: i64,
    pub option: StepOption,
    pub resulting_l: i64,
}

/// A base state of degree at most 3 plus the steps taken from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub base: ConstructionState,
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    /// Final state after all steps.
    pub fn target(&self) -> ConstructionState {
        self.steps
            .last()
            .map(|s| ConstructionState {
                d: s.to_degree,
                l: s.resulting_l,
            })
            .unwrap_or(self.base)
    }
}

fn ceil_half(d: i64) -> i64 {
    (d + 1).div_euclid(2)
}

fn harnack_cap(d: i64) -> i64 {
    (d - 1) * (d - 2) / 2 + 1
}

fn is_admissible(d: i64, l: i64) -> bool {
    d >= 1
        && l >= ceil_half(d)
        && l <= harnack_cap(d)
        && (l - ceil_half(d)).rem_euclid(2) == 0
}

/// All component counts the construction can certify at degree `d`:
/// parity of `ceil(d/2)` within `[ceil(d/2), (d-1)(d-2)/2 + 1]`.
pub fn admissible_pairs(d: i64) -> Result<Vec<i64>> {
    if d < 1 {
        return Err(Error::DegreeOutOfRange(d));
    }
    Ok((ceil_half(d)..=harnack_cap(d)).step_by(2).collect())
}

fn apply_option(option: StepOption, to_degree: i64, l_prev: i64) -> i64 {
    match option {
        StepOption::I => l_prev + to_degree - 2,
        StepOption::II => l_prev + to_degree.rem_euclid(2),
    }
}

/// Component counts reachable at degree `d` from an admissible state
/// `(d - 1, l_prev)`, as `(option i, option ii)`.
pub fn step_options(d: i64, l_prev: i64) -> Result<(i64, i64)> {
    if d < 4 {
        return Err(Error::DegreeOutOfRange(d));
    }
    if !is_admissible(d - 1, l_prev) {
        return Err(Error::InadmissiblePair { d: d - 1, l: l_prev });
    }
    Ok((
        apply_option(StepOption::I, d, l_prev),
        apply_option(StepOption::II, d, l_prev),
    ))
}

/// Shortest trace certifying `(d, l)`, built by walking backwards and
/// preferring option (ii) at each degree. Admissible targets of degree at
/// least 4 always trace back to the base `(3, 2)`; an admissible state
/// with no admissible predecessor would contradict the induction and is
/// reported as an internal inconsistency.
pub fn construct_trace(d: i64, l: i64) -> Result<ConstructionTrace> {
    if !is_admissible(d, l) {
        return Err(Error::InadmissiblePair { d, l });
    }
    let base = ConstructionState { d, l };
    if d <= 3 {
        return Ok(ConstructionTrace {
            base,
            steps: Vec::new(),
        });
    }
    let mut steps = Vec::new();
    let mut state = base;
    while state.d > 3 {
        let prev_ii = state.l - state.d.rem_euclid(2);
        let prev_i = state.l - (state.d - 2);
        let (option, prev_l) = if is_admissible(state.d - 1, prev_ii) {
            (StepOption::II, prev_ii)
        } else if is_admissible(state.d - 1, prev_i) {
            (StepOption::I, prev_i)
        } else {
            return Err(Error::Inconsistency(format!(
                "admissible state ({}, {}) has no admissible predecessor",
                state.d, state.l
            )));
        };
        steps.push(TraceStep {
            to_degree: state.d,
            option,
            resulting_l: state.l,
        });
        state = ConstructionState {
            d: state.d - 1,
            l: prev_l,
        };
    }
    steps.reverse();
    Ok(ConstructionTrace { base: state, steps })
}

/// Replay a trace: base admissible with degree at most 3, degrees
/// increment by one, each `resulting_l` matches the step rule, every
/// intermediate state admissible.
pub fn verify_trace(t: &ConstructionTrace) -> bool {
    if t.base.d > 3 || !is_admissible(t.base.d, t.base.l) {
        return false;
    }
    let mut state = t.base;
    for step in &t.steps {
        if step.to_degree != state.d + 1 {
            return false;
        }
        let expected = apply_option(step.option, step.to_degree, state.l);
        if step.resulting_l != expected {
            return false;
        }
        state = ConstructionState {
            d: step.to_degree,
            l: step.resulting_l,
        };
        if !is_admissible(state.d, state.l) {
            return false;
        }
    }
    true
}

/// First admissible state not produced by any step from the previous
/// degree, if one exists below `d_max`.
pub fn reachability_counterexample(d_max: i64) -> Result<Option<ConstructionState>> {
    if d_max < 3 {
        return Err(Error::DegreeOutOfRange(d_max));
    }
    for d in 4..=d_max {
        let produced: Vec<i64> = admissible_pairs(d - 1)?
            .into_iter()
            .flat_map(|l_prev| {
                [
                    apply_option(StepOption::I, d, l_prev),
                    apply_option(StepOption::II, d, l_prev),
                ]
            })
            .collect();
        for l in admissible_pairs(d)? {
            if !produced.contains(&l) {
                return Ok(Some(ConstructionState { d, l }));
            }
        }
    }
    Ok(None)
}

/// True iff every admissible state up to degree `d_max` is reachable by
/// some step from an admissible state one degree lower.
pub fn reachability_check(d_max: i64) -> Result<bool> {
    Ok(reachability_counterexample(d_max)?.is_none())
}

/// A constructed curve state together with the verdict excluding a
/// totally real pencil on it.
#[derive(Debug, Clone)]
#[non_exhaustive]
pub struct Witness {
    pub l: i64,
    pub trace: ConstructionTrace,
    pub verdict: ObstructionVerdict,
}

/// Largest component count at degree `d` that the construction certifies
/// and the plane obstruction excludes, with its trace and verdict.
pub fn witness_no_pencil(d: i64) -> Result<Witness> {
    if d < 5 {
        return Err(Error::DegreeOutOfRange(d));
    }
    let admissible = admissible_pairs(d)?;
    let obstructed = enumerate_obstructed_l("P2", d)?;
    let Some(l) = admissible
        .iter()
        .rev()
        .copied()
        .find(|l| obstructed.contains(l))
    else {
        return Err(Error::NoWitnessCandidate(d));
    };
    let trace = construct_trace(d, l)?;
    let curve = CurveData::on_plane(d, l, true)?;
    let (_, verdict) = generic_obstruction(&curve)?;
    if !verdict.applies {
        return Err(Error::Inconsistency(format!(
            "state ({d}, {l}) is in the obstructed enumeration but the recomputed verdict does not apply"
        )));
    }
    Ok(Witness { l, trace, verdict })
}

/// Line-oriented form: `base d l`, then `step <degree> <i|ii> <l>`.
pub fn trace_to_text(t: &ConstructionTrace) -> String {
    let mut out = format!("base {} {}\n", t.base.d, t.base.l);
    for step in &t.steps {
        out.push_str(&format!(
            "step {} {} {}\n",
            step.to_degree, step.option, step.resulting_l
        ));
    }
    out
}

fn parse_int(token: &str, line: usize, what: &str) -> Result<i64> {
    token.parse().map_err(|_| Error::TraceFormat {
        line,
        msg: format!("{what} must be an integer, got `{token}`"),
    })
}

/// Parse the line-oriented trace form. Blank lines are ignored; the
/// result is not replayed, pass it to `verify_trace` for that.
pub fn parse_trace(text: &str) -> Result<ConstructionTrace> {
    let mut base = None;
    let mut steps = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            [] => continue,
            ["base", d, l] => {
                if base.is_some() {
                    return Err(Error::TraceFormat {
                        line,
                        msg: "duplicate `base` line".into(),
                    });
                }
                if !steps.is_empty() {
                    return Err(Error::TraceFormat {
                        line,
                        msg: "`base` must come before any `step`".into(),
                    });
                }
                base = Some(ConstructionState {
                    d: parse_int(d, line, "base degree")?,
                    l: parse_int(l, line, "base component count")?,
                });
            }
            ["step", degree, option, l] => {
                if base.is_none() {
                    return Err(Error::TraceFormat {
                        line,
                        msg: "`step` before `base`".into(),
                    });
                }
                let option = match *option {
                    "i" => StepOption::I,
                    "ii" => StepOption::II,
                    other => {
                        return Err(Error::TraceFormat {
                            line,
                            msg: format!("step option must be `i` or `ii`, got `{other}`"),
                        });
                    }
                };
                steps.push(TraceStep {
                    to_degree: parse_int(degree, line, "step degree")?,
                    option,
                    resulting_l: parse_int(l, line, "step component count")?,
                });
            }
            _ => {
                return Err(Error::TraceFormat {
                    line,
                    msg: format!("expected `base d l` or `step degree option l`, got `{raw}`"),
                });
            }
        }
    }
    let Some(base) = base else {
        return Err(Error::TraceFormat {
            line: text.lines().count() + 1,
            msg: "missing `base` line".into(),
        });
    };
    Ok(ConstructionTrace { base, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruct::{pencil_bound, Rule};

    #[test]
    fn admissible_sets_match_parity_and_range() {
        assert_eq!(admissible_pairs(1).unwrap(), vec![1]);
        assert_eq!(admissible_pairs(2).unwrap(), vec![1]);
        assert_eq!(admissible_pairs(3).unwrap(), vec![2]);
        assert_eq!(admissible_pairs(4).unwrap(), vec![2, 4]);
        assert_eq!(admissible_pairs(5).unwrap(), vec![3, 5, 7]);
        assert_eq!(admissible_pairs(6).unwrap(), vec![3, 5, 7, 9, 11]);
        assert!(matches!(
            admissible_pairs(0),
            Err(Error::DegreeOutOfRange(0))
        ));
    }

    #[test]
    fn step_option_values() {
        assert_eq!(step_options(5, 4).unwrap(), (7, 5));
        assert_eq!(step_options(4, 2).unwrap(), (4, 2));
        assert_eq!(step_options(6, 7).unwrap(), (11, 7));
        assert!(matches!(
            step_options(5, 6),
            Err(Error::InadmissiblePair { d: 4, l: 6 })
        ));
        assert!(matches!(step_options(3, 2), Err(Error::DegreeOutOfRange(3))));
    }

    #[test]
    fn traces_match_the_induction() {
        let t = construct_trace(5, 7).unwrap();
        assert_eq!(t.base, ConstructionState { d: 3, l: 2 });
        assert_eq!(
            t.steps,
            vec![
                TraceStep {
                    to_degree: 4,
                    option: StepOption::I,
                    resulting_l: 4
                },
                TraceStep {
                    to_degree: 5,
                    option: StepOption::I,
                    resulting_l: 7
                },
            ]
        );
        let t = construct_trace(5, 3).unwrap();
        assert_eq!(
            t.steps
                .iter()
                .map(|s| (s.to_degree, s.option, s.resulting_l))
                .collect::<Vec<_>>(),
            vec![(4, StepOption::II, 2), (5, StepOption::II, 3)]
        );
        let t = construct_trace(7, 8).unwrap();
        assert_eq!(t.base, ConstructionState { d: 3, l: 2 });
        assert_eq!(
            t.steps
                .iter()
                .map(|s| (s.to_degree, s.option, s.resulting_l))
                .collect::<Vec<_>>(),
            vec![
                (4, StepOption::I, 4),
                (5, StepOption::I, 7),
                (6, StepOption::II, 7),
                (7, StepOption::II, 8),
            ]
        );
        let base_only = construct_trace(3, 2).unwrap();
        assert!(base_only.steps.is_empty());
        assert_eq!(base_only.target(), ConstructionState { d: 3, l: 2 });
        assert!(construct_trace(2, 1).unwrap().steps.is_empty());
        assert!(matches!(
            construct_trace(5, 4),
            Err(Error::InadmissiblePair { d: 5, l: 4 })
        ));
        assert!(matches!(
            construct_trace(4, 6),
            Err(Error::InadmissiblePair { d: 4, l: 6 })
        ));
    }

    #[test]
    fn constructed_traces_replay_for_all_admissible_targets() {
        for d in 1..=12 {
            for l in admissible_pairs(d).unwrap() {
                let t = construct_trace(d, l).unwrap();
                assert!(verify_trace(&t), "trace for ({d}, {l})");
                assert_eq!(t.target(), ConstructionState { d, l });
            }
        }
    }

    #[test]
    fn tampered_traces_fail_replay() {
        let mut t = construct_trace(7, 8).unwrap();
        t.steps[2].resulting_l += 2;
        assert!(!verify_trace(&t));

        let skipped = ConstructionTrace {
            base: ConstructionState { d: 3, l: 2 },
            steps: vec![TraceStep {
                to_degree: 5,
                option: StepOption::I,
                resulting_l: 5,
            }],
        };
        assert!(!verify_trace(&skipped));

        let bad_base = ConstructionTrace {
            base: ConstructionState { d: 3, l: 4 },
            steps: Vec::new(),
        };
        assert!(!verify_trace(&bad_base));

        let high_base = ConstructionTrace {
            base: ConstructionState { d: 4, l: 2 },
            steps: Vec::new(),
        };
        assert!(!verify_trace(&high_base));

        let out_of_range = ConstructionTrace {
            base: ConstructionState { d: 3, l: 2 },
            steps: vec![TraceStep {
                to_degree: 4,
                option: StepOption::I,
                resulting_l: 6,
            }],
        };
        assert!(!verify_trace(&out_of_range));
    }

    #[test]
    fn reachability_holds_at_desk_scale() {
        assert!(reachability_check(3).unwrap());
        assert!(reachability_check(10).unwrap());
        assert!(reachability_check(30).unwrap());
        assert_eq!(reachability_counterexample(30).unwrap(), None);
        assert!(matches!(
            reachability_check(2),
            Err(Error::DegreeOutOfRange(2))
        ));
    }

    #[test]
    fn steps_preserve_parity_and_range() {
        for d in 4..=30 {
            let parity = ceil_half(d).rem_euclid(2);
            for l_prev in admissible_pairs(d - 1).unwrap() {
                let (a, b) = step_options(d, l_prev).unwrap();
                for l in [a, b] {
                    assert_eq!(l.rem_euclid(2), parity, "parity at d = {d}");
                    assert!(is_admissible(d, l), "range at d = {d}, l = {l}");
                }
            }
        }
    }

    #[test]
    fn witnesses_intersect_construction_and_obstruction() {
        let w = witness_no_pencil(7).unwrap();
        assert_eq!(w.l, 8);
        assert_eq!(w.verdict.rule, Rule::ThmMain);
        assert!(verify_trace(&w.trace));
        assert_eq!(pencil_bound(7, 8).unwrap(), 2);

        assert_eq!(witness_no_pencil(5).unwrap().l, 3);
        let w6 = witness_no_pencil(6).unwrap();
        assert_eq!(w6.l, 3);
        assert_eq!(w6.verdict.rule, Rule::ThmMainD1);

        let w11 = witness_no_pencil(11).unwrap();
        assert_eq!(w11.l, 26);
        assert_eq!(pencil_bound(11, w11.l).unwrap(), 3);

        assert!(matches!(
            witness_no_pencil(4),
            Err(Error::DegreeOutOfRange(4))
        ));
    }

    #[test]
    fn witnesses_exist_for_all_small_degrees() {
        for d in 5..=15 {
            let w = witness_no_pencil(d).unwrap();
            assert!(w.verdict.applies);
            assert!(verify_trace(&w.trace));
            assert!(admissible_pairs(d).unwrap().contains(&w.l));
        }
    }

    #[test]
    fn trace_text_round_trip() {
        let t = construct_trace(7, 8).unwrap();
        let text = trace_to_text(&t);
        assert_eq!(
            text,
            "base 3 2\nstep 4 i 4\nstep 5 i 7\nstep 6 ii 7\nstep 7 ii 8\n"
        );
        assert_eq!(parse_trace(&text).unwrap(), t);
        assert_eq!(parse_trace("base 3 2\n\n").unwrap().steps.len(), 0);
    }

    #[test]
    fn trace_parse_errors_name_the_line() {
        for (text, bad_line) in [
            ("step 4 i 4\n", 1),
            ("base 3 2\nstep 4 iii 4\n", 2),
            ("base 3 x\n", 1),
            ("base 3 2\nbase 3 2\n", 2),
            ("base 3 2\nstep 4 i 4 extra\n", 2),
            ("hello\n", 1),
            ("", 1),
        ] {
            match parse_trace(text) {
                Err(Error::TraceFormat { line, .. }) => {
                    assert_eq!(line, bad_line, "line for {text:?}")
                }
                other => panic!("expected trace format error for {text:?}, got {other:?}"),
            }
        }
    }
}
