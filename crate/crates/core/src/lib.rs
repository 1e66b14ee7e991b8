pub mod check;
pub mod classify;
pub mod coincidence;
pub mod goldnum;
pub mod groupkit;
pub mod icosian;
pub mod qmat2;
pub mod repthy;
pub mod quat;
pub mod scalar;
pub mod spanalg;
pub mod verify;

pub use goldnum::{Gold, GoldNum, Rat};
pub use qmat2::{Mat2, QMat2, Spinor, Spinor2};
pub use quat::{Quat, Quaternion, ScalarConstants};
pub use groupkit::{FiniteGroup, GroupElement, GroupError, Subgroup};
pub use icosian::{Generators, O1};
pub use repthy::{CharacterTable, Decomposition, Irrep};
