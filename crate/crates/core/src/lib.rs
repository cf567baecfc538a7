pub mod cohomology;
pub mod curvature;
pub mod genera;
pub mod hrr;
pub mod rational;
pub mod report;
pub mod series;
pub mod surface;
