pub mod gausscode;
pub mod diagram;
pub mod algebra;
pub mod coloring;
pub mod rewrite;
pub mod fixtures;
