pub mod afamilies;
pub mod bcfamilies;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exactalg;
pub mod limits;
pub mod twovar;
pub mod verify;
