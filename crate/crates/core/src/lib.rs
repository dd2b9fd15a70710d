pub mod admissible;
pub mod aux;
pub mod cli;
pub mod composer;
pub mod fold;
pub mod graph;
pub mod lp;
