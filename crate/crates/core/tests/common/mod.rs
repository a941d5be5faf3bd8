#![allow(dead_code)]

pub mod invariants;
pub mod jacobian;
pub mod two_cell;
