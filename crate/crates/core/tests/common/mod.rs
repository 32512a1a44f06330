//! Oracles shared by the integration tests. They work from the raw
//! presentation text and share no code with the library.
#![allow(dead_code)]

pub mod monomial;
pub mod props;
