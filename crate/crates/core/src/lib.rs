//! Exact verification toolkit for the finite simple groups below `Sp_2g(2)`.

pub mod arith;
pub mod catalog;
pub mod degrees;
pub mod enumerate;
pub mod rank;
pub mod report;
pub mod filter;
pub mod flag;
