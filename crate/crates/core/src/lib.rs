//! Synthesis, simulation and resource estimation for adder-based quantum
//! integer dividers.
//!
//! - [`circuit`]: reversible circuit IR and Toffoli metrics
//! - [`qasm`]: OpenQASM 3 subset import/export
//! - [`sim`]: basis-state simulator
//! - [`adders`]: gate-level adders and the subtractor / adder-subtractor /
//!   conditional-adder wrappers
//! - [`divider`]: restoring and non-restoring divider synthesis and
//!   verification
//! - [`cost`]: closed-form cost models and the 32-bit comparison table

pub mod adders;
pub mod circuit;
pub mod cost;
pub mod divider;
pub mod qasm;
pub mod sim;

pub use adders::{AdderBuilder, AdderFragment, GateLevelAdder};
pub use circuit::{Circuit, Gate, QubitId, Register, ResourceReport};
pub use cost::{AdderRow, Costs, Rounding};
pub use divider::{build_divider, DividerKind, DividerLayout, DividerParams};
