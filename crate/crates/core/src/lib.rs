pub mod abelian;
pub mod ahss;
pub mod burnside;
pub mod fourmanifold;
pub mod rpcohomology;
pub mod cli;
