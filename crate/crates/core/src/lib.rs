pub mod census;
pub mod cli;
pub mod hyperbolic;
pub mod involution;
pub mod linalg;
pub mod seifert;
pub mod slope;
pub mod surgery;
pub mod tangle;
