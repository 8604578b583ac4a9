//! Construction steps and recipe evaluation.

mod eval;
mod recipe;
mod state;

pub use eval::{blow_up, certify, evaluate, evaluate_with_budget, instantiate, luttinger, resolve, symplectic_sum};
pub use recipe::{CurveRef, Gluing, PushOff, Recipe};
pub use state::{AmbientTier, GroupData, ManifoldState, MarkedTorus, Pi1Status, Pi1Summary, TraceEntry};

#[cfg(test)]
mod tests;
