//! Teleportation and superdense coding on top of the fusion-tree engine.

mod braidword;
mod edit;
mod ox;
mod pauli;
mod qudit;
mod schedule;
mod sdc;
mod teleport;
mod transcript;

pub use braidword::{correction_braidword, vertex_operators, BraidOp};
pub use edit::{make_edit, make_edit_with};
pub use ox::{ox_from_bits, OxDiagram};
pub use pauli::{pauli_braidfree, pauli_braidfree_a, pauli_by_fusion, pauli_overlaps, paulis};
pub use qudit::{
    phase_pair, qudit_amplitudes, qudit_basis, qudit_state, random_amplitudes, random_qudit_state,
    shift_pair,
};
pub use schedule::{all_records, Ledger, Schedule};
pub use sdc::{sdc_braided, sdc_braidfree, Decode, SdcRun};
pub use teleport::{
    expected_pre_correction, teleport_braided, teleport_braidfree, BraidedTeleport, TeleportRun,
};
pub use transcript::{dit, Mode, SdcTranscript, Source, TeleportTranscript};
