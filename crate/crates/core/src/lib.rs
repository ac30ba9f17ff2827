//! Exact computer algebra for recurrence-defined polynomial sequences and the
//! determinant identities they satisfy.

pub mod exact;
pub mod sequences;
pub mod matrix;
pub mod det;
pub mod identities;
