//! Exact verification of the quintuple product identity, its finite and
//! bilateral forms, and the terminating q-Dixon sum.

pub mod algebra;
pub mod cli;
pub mod qcomb;
pub mod verify;
