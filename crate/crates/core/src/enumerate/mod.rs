pub mod census;
pub mod generate;
pub mod graph6;
pub mod verify;
