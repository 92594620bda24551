//! Exact combinatorics of Jordan classes, sheets and Lusztig strata for
//! small-rank connected reductive groups.
//!
//! Everything here is pure integer arithmetic over finite data: root systems,
//! Weyl groups and their rational character tables, truncated induction,
//! unipotent classes with their Springer representations, and the
//! stratification built on top of them. The crate is `no_std` and only needs
//! `alloc`; file IO and the command line live in the `weyl-strata` crate.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod combinat;
mod error;
pub mod linalg;
pub mod repops;
pub mod rootsys;
pub mod strata;
pub mod unipotent;
pub mod weylgrp;

pub use error::{Error, Result};

/// Resource limits shared by every construction in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest semisimple rank accepted for a root system.
    pub rank: usize,
    /// Largest Weyl group order that will be enumerated.
    pub order: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { rank: 5, order: 50_000 }
    }
}
