//! Interruption soundness for the resumable Ramsey search: a run killed
//! mid-sweep and resumed from its last checkpoint must reproduce the
//! uninterrupted result bit for bit, including the examined-class count.

use std::panic::AssertUnwindSafe;
use std::sync::Mutex;
use strengthlab::{graph6_encode, ramsey, RamseyCheckpoint, RamseyResult};

fn report(r: &RamseyResult) -> (Option<u32>, u32, Option<u32>, Option<String>, u64) {
    (
        r.value,
        r.lower,
        r.upper,
        r.witness.as_ref().map(graph6_encode),
        r.classes_examined,
    )
}

/// Runs the search but unwinds after `kill_after` checkpoint saves,
/// simulating a kill; returns the last state that made it "to disk".
fn run_until_killed(s: u32, t: u32, cap: usize, kill_after: usize) -> Option<RamseyCheckpoint> {
    let saved: Mutex<Option<RamseyCheckpoint>> = Mutex::new(None);
    let saves = Mutex::new(0usize);
    let outcome = std::panic::catch_unwind(AssertUnwindSafe(|| {
        ramsey::ramsey_fk_resumable(
            s,
            t,
            cap,
            None,
            |state| {
                *saved.lock().unwrap() = Some(state.clone());
                let mut count = saves.lock().unwrap();
                *count += 1;
                if *count == kill_after {
                    panic!("simulated kill");
                }
            },
            |_, _| {},
        )
    }));
    assert!(outcome.is_err(), "the simulated kill must fire");
    saved.into_inner().unwrap()
}

#[test]
fn kill_and_resume_reproduces_the_uninterrupted_result() {
    // r(F_3, F_8) = 9 forces a full arrowing sweep at order 9 (many
    // chunks) before the witness step at order 8
    let uninterrupted = ramsey::ramsey_fk(3, 8, 10).unwrap();
    assert_eq!(uninterrupted.value, Some(9));

    for kill_after in [1usize, 3, 10] {
        let state = run_until_killed(3, 8, 10, kill_after)
            .expect("at least one checkpoint before the kill");
        let resumed =
            ramsey::ramsey_fk_resumable(3, 8, 10, Some(state), |_| {}, |_, _| {}).unwrap();
        assert_eq!(
            report(&resumed),
            report(&uninterrupted),
            "kill after {kill_after} saves"
        );
    }
}

#[test]
fn checkpoints_for_other_searches_are_rejected() {
    let mut captured: Option<RamseyCheckpoint> = None;
    let _ = ramsey::ramsey_fk_resumable(
        3,
        8,
        10,
        None,
        |state| {
            if captured.is_none() {
                captured = Some(state.clone());
            }
        },
        |_, _| {},
    )
    .unwrap();
    let state = captured.expect("search saved at least once");
    let err = ramsey::ramsey_fk_resumable(4, 4, 10, Some(state), |_| {}, |_, _| {});
    assert!(matches!(err, Err(strengthlab::Error::CursorCorrupt(_))));
}

#[test]
fn bounded_when_the_lower_bound_clears_the_cap() {
    let r = ramsey::ramsey_fk(4, 4, 6).unwrap();
    assert_eq!(r.status, ramsey::RamseyStatus::Bounded);
    assert_eq!((r.lower, r.upper), (7, Some(7)));
    let w = r.witness.unwrap();
    assert_eq!(w.order(), 6);
    assert_eq!(w.family_name().unwrap(), "K_{3,3}");
}
