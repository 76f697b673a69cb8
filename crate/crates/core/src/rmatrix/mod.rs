//! R-vertex weight tables, basis changes, twists, and their matrix form.
//!
//! Entries are indexed `(alpha, beta, gamma, delta)` = (bottom-left, top-left,
//! top-right, bottom-right), with `R(v_alpha ⊗ v_beta) = Σ R v_gamma ⊗ v_delta`.

mod kojima;
mod labels;
mod table;
mod tables;

pub use kojima::{kojima_match, kojima_pipeline, KojimaCase, KojimaMismatch, KojimaOptions, KojimaReport};
pub use labels::{classify, label_index, labels, lifted_labels, rep0, rep1, ChargeMode, RCase, Rep};
pub use table::{
    as_endomorphism, gamma_r_weight, rhat_printed_weight, rhat_weight, BasisChange, RBase, RTable, Transform,
    TwistFunction,
};
pub use tables::{kojima_reference_text, Vars};
