//! Shared fixtures for the engine benchmarks: the standard atoms and a few
//! prebuilt contexts, so the timed bodies measure the engine rather than
//! setup.

use std::sync::Arc;

use semismall_core::{ade_intersection_matrix, AdeKind, Atom, Context, HodgeDatum};

pub fn plane() -> Atom {
    HodgeDatum::projective_plane()
}

pub fn line() -> Atom {
    HodgeDatum::projective_line()
}

pub fn e8_context() -> Context {
    Arc::new(ade_intersection_matrix(AdeKind::E, 8).expect("E8 exists"))
}
