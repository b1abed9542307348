pub mod action;
pub mod arith;
pub mod linalg;
pub mod poly;
pub mod quotient;
pub mod scenarios;
pub mod subring;
