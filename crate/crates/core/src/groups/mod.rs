//! Word problems in the fundamental groups that appear in double branched
//! covers: Seifert pieces over the disk, their amalgams, and π-orbifold
//! presentations.

pub mod amalgam;
pub mod orbifold;
pub mod sfs;
pub mod solver;

pub use amalgam::{AmalgamGroup, AmalgamWord, Side};
pub use orbifold::{orbifold_presentation, rho_automorphism_images, AbstractWord, Presentation};
pub use sfs::{Fiber, Gen, SfsGroup, SfsWord};
pub use solver::{brute_force_solutions, listed_solutions, predicted_solutions, Solution, Target, Window};
