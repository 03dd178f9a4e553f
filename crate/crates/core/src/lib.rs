pub mod atlas;
pub mod balance;
pub mod canon;
pub mod cli;
pub mod distance;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod report;
