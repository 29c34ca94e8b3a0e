pub mod arith;
pub mod code;
pub mod cosets;
pub mod defining_set;
pub mod distance;
pub mod field;
pub mod lemmas;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod tables;
pub mod search;
