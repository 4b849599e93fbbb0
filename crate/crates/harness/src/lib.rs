//! Claim verification harness: graph supplies, exact quantities, checkers
//! and the report they produce.

pub mod claims;
pub mod cli;
pub mod context;
pub mod enumerate;
pub mod report;
