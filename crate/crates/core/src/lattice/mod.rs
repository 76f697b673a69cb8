//! Ice systems, admissible states, Boltzmann weights, partition functions
//! and the bijection with strict Gelfand-Tsetlin patterns.

mod enumerate;
mod gt;
mod spin;
mod state;
mod system;
mod transfer;
mod weights;

pub use enumerate::{enumerate_states, enumerate_states_with, ChargeFilter, Engine, EnumOptions};
pub use gt::{enumerate_gt, gt_to_state, gt_weight_vector, stable_states, state_to_gt, GTPattern};
pub use spin::{DecoratedSpin, Spin};
pub use state::{state_weight, IceState};
pub use system::{build_system, mixed_system, IceSystem, LeftBoundary, Partition};
pub use transfer::{
    partition_by_charge, partition_by_charge_with, partition_enumerate, partition_function, partition_function_with,
    partition_transfer, PartitionEngine,
};
pub use weights::{Mutation, Variant, VertexType, WeightTable};
