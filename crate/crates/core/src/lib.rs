#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod asymptotic;
pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod gregory;
pub mod index_sets;
pub mod poly;
pub mod series;
pub mod stirling;
pub mod table;
pub mod verify;
